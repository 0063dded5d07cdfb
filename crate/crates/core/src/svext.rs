//! Decomposable subspaces, spaces of new primitive generators and the
//! enlarged Borcherds datum they define.

use std::fmt;

use crate::error::{Error, Result};
use crate::gkm::{cartan_from_datum, datum_from_table, BorcherdsDatum, CartanMatrix};
use crate::hallhopf::{AlgElt, BasisSym, HallAlgebra, TensorElt};
use crate::repcat::{ClassId, DimVec};
use crate::scalars::Scalar;

/// A linearly independent family of homogeneous elements of the positive
/// Hall algebra, all of degree `degree`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GradedSubspace {
    pub degree: DimVec,
    pub basis: Vec<AlgElt>,
}

impl GradedSubspace {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }
}

/// Reduced row echelon form in place; returns pivot columns.
pub(crate) fn row_reduce(rows: &mut Vec<Vec<Scalar>>) -> Vec<usize> {
    let ncols = rows.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut r = 0;
    for col in 0..ncols {
        let Some(p) = (r..rows.len()).find(|&k| !rows[k][col].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let inv = rows[r][col].inv().expect("non-zero pivot");
        for x in rows[r].iter_mut() {
            *x = &*x * &inv;
        }
        for k in 0..rows.len() {
            if k == r || rows[k][col].is_zero() {
                continue;
            }
            let f = rows[k][col].clone();
            for c in 0..ncols {
                if rows[r][c].is_zero() {
                    continue;
                }
                let d = &f * &rows[r][c];
                rows[k][c] -= &d;
            }
        }
        pivots.push(col);
        r += 1;
        if r == rows.len() {
            break;
        }
    }
    rows.truncate(r);
    rows.retain(|row| row.iter().any(|x| !x.is_zero()));
    pivots
}

/// Basis of `{c : rows . c = 0}`, one vector per free column.
pub(crate) fn nullspace(rows: &[Vec<Scalar>], ncols: usize, q: u64) -> Vec<Vec<Scalar>> {
    let mut m = rows.to_vec();
    let pivots = row_reduce(&mut m);
    let mut out = Vec::new();
    for free in (0..ncols).filter(|c| !pivots.contains(c)) {
        let mut v = vec![Scalar::zero(q); ncols];
        v[free] = Scalar::one(q);
        for (row, &p) in m.iter().zip(&pivots) {
            v[p] = -&row[free];
        }
        out.push(v);
    }
    out
}

/// Classes of dimension `theta` together with their coordinates.
fn coordinates(alg: &HallAlgebra, theta: &DimVec) -> Vec<ClassId> {
    alg.table().classes_of_dim(theta).to_vec()
}

fn to_row(alg: &HallAlgebra, x: &AlgElt, ids: &[ClassId]) -> Vec<Scalar> {
    let n = alg.rank();
    ids.iter()
        .map(|&id| x.coeff(&BasisSym::positive(vec![0; n], id)))
        .collect()
}

fn from_row(alg: &HallAlgebra, row: &[Scalar], ids: &[ClassId]) -> AlgElt {
    let mut x = alg.zero();
    for (c, &id) in row.iter().zip(ids) {
        x.add_scaled(&alg.u_plus(id), c);
    }
    x
}

fn check_degree(alg: &HallAlgebra, theta: &DimVec) -> Result<()> {
    if theta.len() != alg.rank() {
        return Err(Error::domain(format!("degree {theta} has the wrong number of entries")));
    }
    if !alg.table().covers(theta) {
        return Err(Error::domain(format!("degree {theta} is outside the table")));
    }
    if theta.total() <= 1 {
        return Err(Error::domain(format!("degree {theta} is zero or a simple index")));
    }
    Ok(())
}

/// Span of all products `u_a u_b` with `dim a + dim b = theta`, both non-zero.
pub fn xi_space(alg: &HallAlgebra, theta: &DimVec) -> Result<GradedSubspace> {
    check_degree(alg, theta)?;
    let table = alg.table();
    let ids = coordinates(alg, theta);
    let mut rows = Vec::new();
    for mu in theta.below() {
        if mu.is_zero() || &mu == theta {
            continue;
        }
        let nu = theta.checked_sub(&mu).expect("mu below theta");
        for &a in table.classes_of_dim(&mu) {
            for &b in table.classes_of_dim(&nu) {
                let p = alg.mult_plus(&alg.u_plus(a), &alg.u_plus(b))?;
                rows.push(to_row(alg, &p, &ids));
            }
        }
    }
    row_reduce(&mut rows);
    Ok(GradedSubspace {
        degree: theta.clone(),
        basis: rows.iter().map(|r| from_row(alg, r, &ids)).collect(),
    })
}

/// The psi-orthogonal complement of the decomposable subspace in degree `theta`.
pub fn l_space(alg: &HallAlgebra, theta: &DimVec) -> Result<GradedSubspace> {
    let xi = xi_space(alg, theta)?;
    let ids = coordinates(alg, theta);
    let gram = xi
        .basis
        .iter()
        .map(|x| {
            ids.iter()
                .map(|&id| alg.pairing_psi(&alg.u_plus(id), x))
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    let kernel = nullspace(&gram, ids.len(), alg.q());
    if kernel.len() + xi.dim() != ids.len() {
        return Err(Error::internal(format!(
            "degree {theta}: {} + {} != {} classes",
            xi.dim(),
            kernel.len(),
            ids.len()
        )));
    }
    Ok(GradedSubspace {
        degree: theta.clone(),
        basis: kernel.iter().map(|r| from_row(alg, r, &ids)).collect(),
    })
}

/// Whether `Delta(x) = x (x) 1 + K_theta (x) x`.
pub fn check_primitive(alg: &HallAlgebra, x: &AlgElt, theta: &DimVec) -> Result<bool> {
    if x.terms().any(|(s, _)| s.minus != 0 || s.torus.iter().any(|&t| t != 0)) {
        return Err(Error::domain("primitivity is tested on the positive Hall algebra"));
    }
    let w = theta.to_weight();
    if x.terms().any(|(s, _)| alg.degree(s) != w) {
        return Err(Error::domain(format!("element is not homogeneous of degree {theta}")));
    }
    let mut expected = TensorElt::tensor(x, &alg.one());
    expected.add_scaled(&TensorElt::tensor(&alg.k(&w), x), &Scalar::one(alg.q()));
    Ok(alg.comult(x)? == expected)
}

/// An index of the enlarged datum: an original vertex or a new generator
/// `(theta, p)` with `p` counted from 1.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ExtIndex {
    Vertex(usize),
    New(DimVec, usize),
}

impl fmt::Display for ExtIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExtIndex::Vertex(i) => write!(f, "{}", i + 1),
            ExtIndex::New(theta, p) => write!(f, "({theta},{p})"),
        }
    }
}

#[derive(Debug, Clone)]
pub struct ExtendedDatum {
    pub original: BorcherdsDatum,
    pub bound: DimVec,
    /// Every computed L_theta, nonzero or not, in degree order.
    pub l_spaces: Vec<GradedSubspace>,
    /// Original vertices first, then the new indices in degree order.
    pub indices: Vec<ExtIndex>,
    /// `(i, j)' = (pi(i), pi(j))` on `indices`.
    pub form: Vec<Vec<i64>>,
}

impl ExtendedDatum {
    pub fn new_indices(&self) -> impl Iterator<Item = &ExtIndex> {
        self.indices.iter().filter(|i| matches!(i, ExtIndex::New(..)))
    }

    /// The projection onto the original lattice.
    pub fn project(&self, idx: &ExtIndex) -> Vec<i64> {
        match idx {
            ExtIndex::Vertex(i) => {
                let mut e = vec![0; self.original.rank()];
                e[*i] = 1;
                e
            }
            ExtIndex::New(theta, _) => theta.to_weight(),
        }
    }

    /// The projection extended linearly to `Z I'`.
    pub fn project_vector(&self, coeffs: &[i64]) -> Vec<i64> {
        let mut out = vec![0; self.original.rank()];
        for (c, idx) in coeffs.iter().zip(&self.indices) {
            for (o, x) in out.iter_mut().zip(self.project(idx)) {
                *o += c * x;
            }
        }
        out
    }

    pub fn l_space(&self, theta: &DimVec) -> Option<&GradedSubspace> {
        self.l_spaces.iter().find(|l| &l.degree == theta)
    }

    /// The homogeneous primitive element attached to an index.
    pub fn generator(&self, alg: &HallAlgebra, idx: &ExtIndex) -> AlgElt {
        match idx {
            ExtIndex::Vertex(i) => alg.u_plus(alg.table().simple(*i).expect("simple class")),
            ExtIndex::New(theta, p) => self.l_space(theta).expect("computed degree").basis[p - 1].clone(),
        }
    }

    /// Violations of: off-diagonal values `<= 0`, new indices imaginary, and
    /// integrality of `2(i,j)'/(i,i)'` for `(i,i)' > 0`.
    pub fn axiom_violations(&self) -> Vec<String> {
        let mut out = Vec::new();
        for (a, ia) in self.indices.iter().enumerate() {
            let aa = self.form[a][a];
            if matches!(ia, ExtIndex::New(..)) && aa > 0 {
                out.push(format!("({ia},{ia})' = {aa} > 0 for a new index"));
            }
            for (b, ib) in self.indices.iter().enumerate() {
                let ab = self.form[a][b];
                if a != b && ab > 0 {
                    out.push(format!("({ia},{ib})' = {ab} > 0"));
                }
                if aa > 0 && (2 * ab) % aa != 0 {
                    out.push(format!("2({ia},{ib})'/({ia},{ia})' = {}/{aa} is not an integer", 2 * ab));
                }
            }
        }
        out
    }

    pub fn datum(&self) -> Result<BorcherdsDatum> {
        BorcherdsDatum::new(self.form.clone())
    }

    pub fn cartan(&self) -> Result<CartanMatrix> {
        Ok(cartan_from_datum(&self.datum()?))
    }
}

/// Computes L_theta for every `theta <= bound` of total degree at least 2 and
/// appends one index per basis element.
pub fn extend_datum(alg: &HallAlgebra, bound: &DimVec) -> Result<ExtendedDatum> {
    let original = datum_from_table(alg.table())?;
    let n = original.rank();
    let mut l_spaces = Vec::new();
    let mut indices: Vec<ExtIndex> = (0..n).map(ExtIndex::Vertex).collect();
    for theta in bound.below() {
        if theta.total() < 2 || !alg.table().covers(&theta) {
            continue;
        }
        let l = l_space(alg, &theta)?;
        for p in 1..=l.dim() {
            indices.push(ExtIndex::New(theta.clone(), p));
        }
        l_spaces.push(l);
    }
    let mut ext = ExtendedDatum {
        original,
        bound: bound.clone(),
        l_spaces,
        indices,
        form: Vec::new(),
    };
    let proj: Vec<Vec<i64>> = ext.indices.iter().map(|i| ext.project(i)).collect();
    ext.form = proj
        .iter()
        .map(|a| proj.iter().map(|b| ext.original.pair(a, b)).collect())
        .collect();
    let bad = ext.axiom_violations();
    if !bad.is_empty() {
        return Err(Error::internal(format!("extended form is not a Borcherds datum: {}", bad.join("; "))));
    }
    Ok(ext)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::repcat::{ClassTable, Limits, Quiver};
    use crate::scalars::GroundField;

    fn table(q: Quiver, p: u64, bound: &[u32]) -> ClassTable {
        ClassTable::build(&q, GroundField::new(p).unwrap(), &DimVec(bound.to_vec()), Limits::default()).unwrap()
    }

    fn class_count(t: &ClassTable, d: &[u32]) -> usize {
        t.classes_of_dim(&DimVec(d.to_vec())).len()
    }

    #[test]
    fn xi_dimensions() {
        let a2 = table(Quiver::a2(), 2, &[1, 1]);
        assert_eq!(xi_space(&HallAlgebra::new(&a2), &DimVec(vec![1, 1])).unwrap().dim(), 2);
        let k = table(Quiver::kronecker(), 2, &[1, 1]);
        assert_eq!(xi_space(&HallAlgebra::new(&k), &DimVec(vec![1, 1])).unwrap().dim(), 2);
        let j = table(Quiver::jordan(), 2, &[2]);
        let alg = HallAlgebra::new(&j);
        let xi = xi_space(&alg, &DimVec(vec![2])).unwrap();
        assert_eq!(xi.dim(), 1);
        // u_1 u_1 = 3 u_(1,1) + u_(2)
        let u1 = alg.u_plus(j.simple(0).unwrap());
        let sq = alg.mult_plus(&u1, &u1).unwrap();
        let ids = j.classes_of_dim(&DimVec(vec![2]));
        let (semi, block) = if j.is_indecomposable(ids[0]) { (ids[1], ids[0]) } else { (ids[0], ids[1]) };
        let mut expected = alg.zero();
        expected.add_scaled(&alg.u_plus(semi), &Scalar::from_int(3, 2));
        expected.add_scaled(&alg.u_plus(block), &Scalar::one(2));
        assert_eq!(sq, expected);
    }

    #[test]
    fn l_dimensions() {
        let a2 = table(Quiver::a2(), 2, &[1, 1]);
        assert_eq!(l_space(&HallAlgebra::new(&a2), &DimVec(vec![1, 1])).unwrap().dim(), 0);
        let k = table(Quiver::kronecker(), 2, &[1, 1]);
        assert_eq!(class_count(&k, &[1, 1]), 4);
        assert_eq!(l_space(&HallAlgebra::new(&k), &DimVec(vec![1, 1])).unwrap().dim(), 2);
        let j = table(Quiver::jordan(), 2, &[3]);
        let alg = HallAlgebra::new(&j);
        for n in [2, 3] {
            assert_eq!(l_space(&alg, &DimVec(vec![n])).unwrap().dim(), 1);
        }
    }

    #[test]
    fn jordan_generator_is_difference() {
        let j = table(Quiver::jordan(), 2, &[2]);
        let alg = HallAlgebra::new(&j);
        let l = l_space(&alg, &DimVec(vec![2])).unwrap();
        let x = &l.basis[0];
        let ids = j.classes_of_dim(&DimVec(vec![2]));
        let (semi, block) = if j.is_indecomposable(ids[0]) { (ids[1], ids[0]) } else { (ids[0], ids[1]) };
        let c_semi = x.coeff(&BasisSym::positive(vec![0], semi));
        let c_block = x.coeff(&BasisSym::positive(vec![0], block));
        assert!(!c_semi.is_zero());
        assert_eq!(c_semi, -c_block);
    }

    #[test]
    fn primitivity() {
        let j = table(Quiver::jordan(), 2, &[2]);
        let alg = HallAlgebra::new(&j);
        let d2 = DimVec(vec![2]);
        let ids = j.classes_of_dim(&d2);
        let (semi, block) = if j.is_indecomposable(ids[0]) { (ids[1], ids[0]) } else { (ids[0], ids[1]) };
        let diff = &alg.u_plus(semi) - &alg.u_plus(block);
        assert!(check_primitive(&alg, &diff, &d2).unwrap());
        assert!(!check_primitive(&alg, &alg.u_plus(semi), &d2).unwrap());
        let s = j.simple(0).unwrap();
        assert!(check_primitive(&alg, &alg.u_plus(s), &DimVec(vec![1])).unwrap());
        let mixed = &alg.u_plus(s) + &alg.u_plus(semi);
        assert!(matches!(check_primitive(&alg, &mixed, &d2), Err(Error::Domain(_))));
    }

    #[test]
    fn out_of_range_degrees() {
        let j = table(Quiver::jordan(), 2, &[2]);
        let alg = HallAlgebra::new(&j);
        for d in [vec![0], vec![1], vec![3]] {
            assert!(matches!(xi_space(&alg, &DimVec(d)), Err(Error::Domain(_))));
        }
    }

    #[test]
    fn extended_data() {
        let j = table(Quiver::jordan(), 2, &[3]);
        let ext = extend_datum(&HallAlgebra::new(&j), &DimVec(vec![3])).unwrap();
        let new: Vec<_> = ext.new_indices().cloned().collect();
        assert_eq!(
            new,
            vec![ExtIndex::New(DimVec(vec![2]), 1), ExtIndex::New(DimVec(vec![3]), 1)]
        );
        assert!(ext.form.iter().flatten().all(|&x| x == 0));

        let k = table(Quiver::kronecker(), 2, &[1, 1]);
        let ext = extend_datum(&HallAlgebra::new(&k), &DimVec(vec![1, 1])).unwrap();
        let new: Vec<_> = ext.new_indices().cloned().collect();
        assert_eq!(
            new,
            vec![ExtIndex::New(DimVec(vec![1, 1]), 1), ExtIndex::New(DimVec(vec![1, 1]), 2)]
        );
        assert_eq!(ext.form[2][2], 0);
        assert_eq!(ext.form[0][2], 0);
        assert!(ext.cartan().is_ok());

        let a2 = table(Quiver::a2(), 2, &[2, 2]);
        let ext = extend_datum(&HallAlgebra::new(&a2), &DimVec(vec![2, 2])).unwrap();
        assert_eq!(ext.new_indices().count(), 0);
        assert_eq!(ext.l_space(&DimVec(vec![1, 1])).unwrap().dim(), 0);
    }

    #[test]
    fn row_reduction_rank() {
        let q = 3;
        let s = |n| Scalar::from_int(n, q);
        let mut m = vec![vec![s(1), s(2), s(3)], vec![s(2), s(4), s(6)], vec![s(0), s(1), s(1)]];
        assert_eq!(row_reduce(&mut m), vec![0, 1]);
        let ns = nullspace(&[vec![s(1), s(2), s(3)], vec![s(0), s(1), s(1)]], 3, q);
        assert_eq!(ns, vec![vec![s(-1), s(-1), s(1)]]);
    }
}
