use std::fmt;

use super::linalg::{Fp, Matrix};
use super::quiver::{DimVec, Quiver};
use crate::error::{Error, Result};

/// A representation: one matrix of shape `dim[t] x dim[s]` per arrow `s -> t`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Rep {
    dim: DimVec,
    mats: Vec<Matrix>,
}

impl Rep {
    pub fn new(quiver: &Quiver, dim: DimVec, mats: Vec<Matrix>) -> Result<Self> {
        if dim.len() != quiver.vertex_count() {
            return Err(Error::domain(format!(
                "dimension vector {dim} has wrong length for a quiver with {} vertices",
                quiver.vertex_count()
            )));
        }
        if mats.len() != quiver.arrows().len() {
            return Err(Error::domain(format!(
                "expected {} arrow matrices, got {}",
                quiver.arrows().len(),
                mats.len()
            )));
        }
        for (k, (&(s, t), m)) in quiver.arrows().iter().zip(&mats).enumerate() {
            if m.rows() != dim.0[t] as usize || m.cols() != dim.0[s] as usize {
                return Err(Error::domain(format!(
                    "arrow {} needs a {}x{} matrix, got {}x{}",
                    k + 1,
                    dim.0[t],
                    dim.0[s],
                    m.rows(),
                    m.cols()
                )));
            }
        }
        Ok(Rep { dim, mats })
    }

    pub fn zero(quiver: &Quiver, dim: DimVec) -> Self {
        let mats = quiver
            .arrows()
            .iter()
            .map(|&(s, t)| Matrix::zeros(dim.0[t] as usize, dim.0[s] as usize))
            .collect();
        Rep { dim, mats }
    }

    /// The simple representation at vertex `i`.
    pub fn simple(quiver: &Quiver, i: usize) -> Self {
        Rep::zero(quiver, DimVec::unit(quiver.vertex_count(), i))
    }

    pub fn dim(&self) -> &DimVec {
        &self.dim
    }

    pub fn mats(&self) -> &[Matrix] {
        &self.mats
    }

    /// Number of matrix entries, i.e. `sum_arrows dim[s] * dim[t]`.
    pub fn entry_count(&self) -> usize {
        self.mats.iter().map(|m| m.rows() * m.cols()).sum()
    }

    /// Entries flattened arrow by arrow, each matrix row-major. This is the
    /// ordering under which canonical representatives are lexicographically
    /// least.
    pub fn entries(&self) -> Vec<u8> {
        self.mats.iter().flat_map(|m| m.data().iter().copied()).collect()
    }

    pub fn from_entries(quiver: &Quiver, dim: &DimVec, entries: &[u8]) -> Rep {
        let mut off = 0;
        let mats = quiver
            .arrows()
            .iter()
            .map(|&(s, t)| {
                let (r, c) = (dim.0[t] as usize, dim.0[s] as usize);
                let m = Matrix::from_rows(r, c, entries[off..off + r * c].to_vec());
                off += r * c;
                m
            })
            .collect();
        Rep {
            dim: dim.clone(),
            mats,
        }
    }

    /// Nilpotency of the combined arrow action on the direct sum of the
    /// vertex spaces.
    pub fn is_nilpotent(&self, quiver: &Quiver, f: Fp) -> bool {
        let n = self.dim.total() as usize;
        if n == 0 {
            return true;
        }
        let offsets = vertex_offsets(&self.dim);
        let mut total = Matrix::zeros(n, n);
        for (&(s, t), m) in quiver.arrows().iter().zip(&self.mats) {
            for r in 0..m.rows() {
                for c in 0..m.cols() {
                    let (i, j) = (offsets[t] + r, offsets[s] + c);
                    let v = f.add(total.get(i, j), m.get(r, c));
                    total.set(i, j, v);
                }
            }
        }
        let mut power = total.clone();
        for _ in 1..n {
            power = power.mul(&total, f);
        }
        power.is_zero()
    }

    pub fn direct_sum(&self, other: &Rep, quiver: &Quiver) -> Rep {
        let dim = self.dim.add(&other.dim);
        let mats = quiver
            .arrows()
            .iter()
            .zip(self.mats.iter().zip(&other.mats))
            .map(|(&(s, t), (a, b))| {
                let mut m = Matrix::zeros(dim.0[t] as usize, dim.0[s] as usize);
                for r in 0..a.rows() {
                    for c in 0..a.cols() {
                        m.set(r, c, a.get(r, c));
                    }
                }
                for r in 0..b.rows() {
                    for c in 0..b.cols() {
                        m.set(a.rows() + r, a.cols() + c, b.get(r, c));
                    }
                }
                m
            })
            .collect();
        Rep { dim, mats }
    }
}

impl fmt::Debug for Rep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Rep{}{:?}", self.dim, self.mats)
    }
}

pub(crate) fn vertex_offsets(dim: &DimVec) -> Vec<usize> {
    let mut acc = 0;
    dim.0
        .iter()
        .map(|&d| {
            let o = acc;
            acc += d as usize;
            o
        })
        .collect()
}

/// A basis of `Hom(M, N)`, each element a tuple of vertex matrices
/// `f_i : M_i -> N_i`.
pub struct HomSpace {
    pub basis: Vec<Vec<Matrix>>,
}

/// Solves the intertwiner equations `N_a f_s = f_t M_a` for every arrow.
pub fn hom_space(quiver: &Quiver, f: Fp, m: &Rep, n: &Rep) -> Result<HomSpace> {
    if m.dim.len() != n.dim.len() || m.dim.len() != quiver.vertex_count() {
        return Err(Error::domain("representations live on different quivers"));
    }
    let nv = quiver.vertex_count();
    // unknown layout: vertex by vertex, each f_i row-major of shape n_i x m_i
    let mut offsets = Vec::with_capacity(nv);
    let mut unknowns = 0;
    for i in 0..nv {
        offsets.push(unknowns);
        unknowns += (n.dim.0[i] * m.dim.0[i]) as usize;
    }
    let var = |i: usize, r: usize, c: usize| offsets[i] + r * m.dim.0[i] as usize + c;

    let mut rows: Vec<Vec<u8>> = Vec::new();
    for (k, &(s, t)) in quiver.arrows().iter().enumerate() {
        let (ma, na) = (&m.mats[k], &n.mats[k]);
        for r in 0..n.dim.0[t] as usize {
            for c in 0..m.dim.0[s] as usize {
                let mut eq = vec![0u8; unknowns];
                // (N_a f_s)[r, c] = sum_k N_a[r, k] f_s[k, c]
                for kk in 0..n.dim.0[s] as usize {
                    let v = var(s, kk, c);
                    eq[v] = f.add(eq[v], na.get(r, kk));
                }
                // - (f_t M_a)[r, c] = - sum_k f_t[r, k] M_a[k, c]
                for kk in 0..m.dim.0[t] as usize {
                    let v = var(t, r, kk);
                    eq[v] = f.sub(eq[v], ma.get(kk, c));
                }
                rows.push(eq);
            }
        }
    }
    let basis_vectors = if rows.is_empty() {
        (0..unknowns)
            .map(|u| {
                let mut x = vec![0u8; unknowns];
                x[u] = 1;
                x
            })
            .collect()
    } else {
        let flat: Vec<u8> = rows.iter().flatten().copied().collect();
        Matrix::from_rows(rows.len(), unknowns, flat).nullspace(f)
    };
    let basis = basis_vectors
        .into_iter()
        .map(|x| {
            (0..nv)
                .map(|i| {
                    let (r, c) = (n.dim.0[i] as usize, m.dim.0[i] as usize);
                    let start = offsets[i];
                    Matrix::from_rows(r, c, x[start..start + r * c].to_vec())
                })
                .collect()
        })
        .collect();
    Ok(HomSpace { basis })
}

pub fn hom_dim(quiver: &Quiver, f: Fp, m: &Rep, n: &Rep) -> Result<usize> {
    Ok(hom_space(quiver, f, m, n)?.basis.len())
}

/// `dim Ext^1(M, N) = dim Hom(M, N) - <dim M, dim N>` (the category is hereditary).
pub fn ext_dim(quiver: &Quiver, f: Fp, m: &Rep, n: &Rep) -> Result<usize> {
    let hom = hom_dim(quiver, f, m, n)? as i64;
    let ext = hom - quiver.euler_form(&m.dim, &n.dim);
    if ext < 0 {
        return Err(Error::internal(format!(
            "negative Ext dimension {ext} between {m:?} and {n:?}"
        )));
    }
    Ok(ext as usize)
}

/// Visits every element of a hom space, stopping early when `visit` returns
/// `false`. Fails if the space has more than `max_states` elements.
pub fn for_each_hom(
    space: &HomSpace,
    f: Fp,
    max_states: u64,
    mut visit: impl FnMut(&[Matrix]) -> bool,
) -> Result<()> {
    let h = space.basis.len() as u32;
    let p = f.p() as u64;
    let size = p
        .checked_pow(h)
        .filter(|&s| s <= max_states)
        .ok_or_else(|| {
            Error::resource(format!(
                "hom space of dimension {h} over F_{p} exceeds the state limit {max_states}"
            ))
        })?;
    let Some(first) = space.basis.first() else {
        // only the zero map, which has no vertex matrices to visit here
        visit(&[]);
        return Ok(());
    };
    let shapes: Vec<(usize, usize)> = first.iter().map(|m| (m.rows(), m.cols())).collect();
    let mut coeffs = vec![0u8; h as usize];
    for idx in 0..size {
        let mut rest = idx;
        for c in coeffs.iter_mut() {
            *c = (rest % p) as u8;
            rest /= p;
        }
        let maps: Vec<Matrix> = shapes
            .iter()
            .enumerate()
            .map(|(i, &(r, c))| {
                let mut acc = Matrix::zeros(r, c);
                for (b, &k) in space.basis.iter().zip(&coeffs) {
                    if k != 0 {
                        for (slot, &x) in acc.data_mut().iter_mut().zip(b[i].data()) {
                            *slot = f.add(*slot, f.mul(k, x));
                        }
                    }
                }
                acc
            })
            .collect();
        if !visit(&maps) {
            break;
        }
    }
    Ok(())
}

/// `a_M = |Aut(M)|`, counted by scanning `End(M)` for invertible elements.
pub fn aut_count(quiver: &Quiver, f: Fp, m: &Rep, max_states: u64) -> Result<u64> {
    let end = hom_space(quiver, f, m, m)?;
    let mut count = 0u64;
    for_each_hom(&end, f, max_states, |maps| {
        if maps.iter().all(|x| x.is_invertible(f)) {
            count += 1;
        }
        true
    })?;
    Ok(count)
}

/// Whether the only idempotents of `End(M)` are `0` and `1`.
pub fn is_indecomposable(quiver: &Quiver, f: Fp, m: &Rep, max_states: u64) -> Result<bool> {
    if m.dim.is_zero() {
        return Ok(false);
    }
    let end = hom_space(quiver, f, m, m)?;
    let mut nontrivial = false;
    for_each_hom(&end, f, max_states, |maps| {
        let idempotent = maps.iter().all(|x| x.mul(x, f) == *x);
        let zero = maps.iter().all(|x| x.is_zero());
        let identity = maps
            .iter()
            .all(|x| *x == Matrix::identity(x.rows()));
        if idempotent && !zero && !identity {
            nontrivial = true;
            return false;
        }
        true
    })?;
    Ok(!nontrivial)
}

#[cfg(test)]
mod tests {
    use super::*;

    const LIMIT: u64 = 10_000_000;

    fn jordan_block(n: usize) -> Rep {
        let q = Quiver::jordan();
        let mut m = Matrix::zeros(n, n);
        for i in 0..n.saturating_sub(1) {
            m.set(i, i + 1, 1);
        }
        Rep::new(&q, DimVec(vec![n as u32]), vec![m]).unwrap()
    }

    fn a2_indecomposable() -> Rep {
        Rep::new(
            &Quiver::a2(),
            DimVec(vec![1, 1]),
            vec![Matrix::from_rows(1, 1, vec![1])],
        )
        .unwrap()
    }

    #[test]
    fn hom_between_simples_is_kronecker_delta() {
        let q = Quiver::a2();
        let f = Fp::new(2);
        for i in 0..2 {
            for j in 0..2 {
                let d = hom_dim(&q, f, &Rep::simple(&q, i), &Rep::simple(&q, j)).unwrap();
                assert_eq!(d, usize::from(i == j));
            }
        }
    }

    #[test]
    fn a2_hom_with_indecomposable() {
        let q = Quiver::a2();
        let f = Fp::new(2);
        let x = a2_indecomposable();
        assert_eq!(hom_dim(&q, f, &x, &Rep::simple(&q, 0)).unwrap(), 1);
        assert_eq!(hom_dim(&q, f, &Rep::simple(&q, 0), &x).unwrap(), 0);
        // X has socle S_2, so S_2 maps in
        assert_eq!(hom_dim(&q, f, &Rep::simple(&q, 1), &x).unwrap(), 1);
    }

    #[test]
    fn ext_examples() {
        let f = Fp::new(2);
        let j = Quiver::jordan();
        let s = Rep::simple(&j, 0);
        assert_eq!(ext_dim(&j, f, &s, &s).unwrap(), 1);
        // arrow 1 -> 2: the non-split extension has S_2 as sub and S_1 as quotient,
        // so Ext^1(S_1, S_2) is one-dimensional and Ext^1(S_2, S_1) vanishes
        let q = Quiver::a2();
        let (s1, s2) = (Rep::simple(&q, 0), Rep::simple(&q, 1));
        assert_eq!(ext_dim(&q, f, &s1, &s2).unwrap(), 1);
        assert_eq!(ext_dim(&q, f, &s2, &s1).unwrap(), 0);
        let zero = Rep::zero(&q, DimVec::zero(2));
        assert_eq!(ext_dim(&q, f, &a2_indecomposable(), &zero).unwrap(), 0);
    }

    #[test]
    fn automorphism_counts() {
        let j = Quiver::jordan();
        let f = Fp::new(2);
        assert_eq!(aut_count(&j, f, &Rep::simple(&j, 0), LIMIT).unwrap(), 1);
        assert_eq!(aut_count(&j, f, &Rep::zero(&j, DimVec(vec![2])), LIMIT).unwrap(), 6);
        assert_eq!(aut_count(&j, f, &jordan_block(2), LIMIT).unwrap(), 2);
        let f3 = Fp::new(3);
        assert_eq!(aut_count(&j, f3, &jordan_block(2), LIMIT).unwrap(), 6);
    }

    #[test]
    fn indecomposability() {
        let f = Fp::new(2);
        let q = Quiver::a2();
        assert!(is_indecomposable(&q, f, &Rep::simple(&q, 0), LIMIT).unwrap());
        let sum = Rep::simple(&q, 0).direct_sum(&Rep::simple(&q, 1), &q);
        assert!(!is_indecomposable(&q, f, &sum, LIMIT).unwrap());
        assert!(is_indecomposable(&q, f, &a2_indecomposable(), LIMIT).unwrap());
        let j = Quiver::jordan();
        assert!(is_indecomposable(&j, f, &jordan_block(2), LIMIT).unwrap());
        assert!(!is_indecomposable(&j, f, &Rep::zero(&j, DimVec(vec![2])), LIMIT).unwrap());
    }

    #[test]
    fn resource_limit_is_reported() {
        let j = Quiver::jordan();
        let big = Rep::zero(&j, DimVec(vec![4]));
        let err = aut_count(&j, Fp::new(2), &big, 1000).unwrap_err();
        assert!(matches!(err, Error::Resource(_)));
    }

    #[test]
    fn nilpotency() {
        let j = Quiver::jordan();
        let f = Fp::new(2);
        assert!(jordan_block(3).is_nilpotent(&j, f));
        let id = Rep::new(&j, DimVec(vec![1]), vec![Matrix::from_rows(1, 1, vec![1])]).unwrap();
        assert!(!id.is_nilpotent(&j, f));
    }
}
