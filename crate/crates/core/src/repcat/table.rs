use std::collections::{BTreeMap, HashMap};

use rustc_hash::FxHashMap;

use super::linalg::{gl_order, subspaces, Fp, Matrix, Subspace};
use super::quiver::{DimVec, Quiver};
use super::rep::Rep;
use crate::error::{Error, Result};
use crate::scalars::GroundField;

pub type ClassId = usize;

/// Guards on enumeration work. `max_states` bounds the number of matrix
/// tuples visited for one dimension vector (orbit closure plus candidate
/// extensions) and the number of subspace tuples scanned for one Hall row.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    pub max_states: u64,
    pub max_classes: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_states: 10_000_000,
            max_classes: 100_000,
        }
    }
}

/// An isomorphism class together with its canonical representative.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RepClass {
    pub id: ClassId,
    pub dim: DimVec,
    /// Lexicographically least representative in the orbit.
    pub rep: Rep,
    /// Base-q encoding of `rep.entries()`, most significant digit first.
    pub code: u128,
    /// `|Aut(M)|`.
    pub aut: u128,
    pub orbit_size: u128,
    pub indecomposable: bool,
}

/// Matrix slot layout of a dimension vector: per arrow `(offset, rows, cols)`.
#[derive(Debug, Clone)]
struct Layout {
    slots: Vec<(usize, usize, usize)>,
    len: usize,
}

impl Layout {
    fn new(quiver: &Quiver, dim: &DimVec) -> Layout {
        let mut off = 0;
        let slots = quiver
            .arrows()
            .iter()
            .map(|&(s, t)| {
                let (r, c) = (dim.0[t] as usize, dim.0[s] as usize);
                let slot = (off, r, c);
                off += r * c;
                slot
            })
            .collect();
        Layout { slots, len: off }
    }
}

fn encode(entries: &[u8], q: u64) -> u128 {
    let q = q as u128;
    entries.iter().fold(0u128, |acc, &d| acc * q + d as u128)
}

fn decode(mut code: u128, q: u64, len: usize, out: &mut [u8]) {
    let q = q as u128;
    for k in (0..len).rev() {
        out[k] = (code % q) as u8;
        code /= q;
    }
}

#[derive(Debug, Clone, Copy)]
enum Generator {
    /// `I + E_{rs}` at a vertex.
    Transvection { vertex: usize, r: usize, s: usize },
    /// `diag(g, 1, ..., 1)` at a vertex, `g` a primitive root.
    Scale { vertex: usize },
}

fn generators(dim: &DimVec) -> Vec<Generator> {
    let mut out = Vec::new();
    for (vertex, &d) in dim.0.iter().enumerate() {
        let d = d as usize;
        if d == 0 {
            continue;
        }
        for r in 0..d {
            for s in 0..d {
                if r != s {
                    out.push(Generator::Transvection { vertex, r, s });
                }
            }
        }
        out.push(Generator::Scale { vertex });
    }
    out
}

struct Action<'a> {
    quiver: &'a Quiver,
    layout: &'a Layout,
    f: Fp,
    g: u8,
    g_inv: u8,
}

impl Action<'_> {
    /// `M_a -> h_t M_a h_s^{-1}` for every arrow.
    fn apply(&self, gen: Generator, m: &mut [u8]) {
        let f = self.f;
        for (&(s, t), &(off, rows, cols)) in self.quiver.arrows().iter().zip(&self.layout.slots) {
            match gen {
                Generator::Transvection { vertex, r, s: src } => {
                    if t == vertex {
                        for c in 0..cols {
                            let v = m[off + src * cols + c];
                            let slot = &mut m[off + r * cols + c];
                            *slot = f.add(*slot, v);
                        }
                    }
                    if s == vertex {
                        for x in 0..rows {
                            let v = m[off + x * cols + r];
                            let slot = &mut m[off + x * cols + src];
                            *slot = f.sub(*slot, v);
                        }
                    }
                }
                Generator::Scale { vertex } => {
                    if t == vertex {
                        for c in 0..cols {
                            let slot = &mut m[off + c];
                            *slot = f.mul(*slot, self.g);
                        }
                    }
                    if s == vertex {
                        for x in 0..rows {
                            let slot = &mut m[off + x * cols];
                            *slot = f.mul(*slot, self.g_inv);
                        }
                    }
                }
            }
        }
    }
}

/// All isomorphism classes of nilpotent representations with dimension
/// vector below a bound, with automorphism counts, Hall numbers and
/// indecomposability flags.
#[derive(Debug, Clone)]
pub struct ClassTable {
    quiver: Quiver,
    field: GroundField,
    fp: Fp,
    bound: DimVec,
    height: Option<u32>,
    limits: Limits,
    dims: Vec<DimVec>,
    classes: Vec<RepClass>,
    by_dim: BTreeMap<DimVec, Vec<ClassId>>,
    /// Every orbit member's code, per dimension vector.
    orbits: HashMap<DimVec, FxHashMap<u128, ClassId>>,
    /// Per `gamma`: `(alpha, beta, g^gamma_{alpha beta})` with `g > 0`.
    hall_rows: Vec<Vec<(ClassId, ClassId, u64)>>,
    hall: HashMap<(ClassId, ClassId, ClassId), u64>,
}

impl ClassTable {
    pub fn build(quiver: &Quiver, field: GroundField, bound: &DimVec, limits: Limits) -> Result<Self> {
        Self::build_with_height(quiver, field, bound, None, limits)
    }

    /// As [`ClassTable::build`], keeping only dimension vectors whose total is
    /// at most `height`.
    pub fn build_with_height(
        quiver: &Quiver,
        field: GroundField,
        bound: &DimVec,
        height: Option<u32>,
        limits: Limits,
    ) -> Result<Self> {
        if bound.len() != quiver.vertex_count() {
            return Err(Error::domain(format!(
                "bound {bound} has wrong length for a quiver with {} vertices",
                quiver.vertex_count()
            )));
        }
        if field.q() > 255 {
            return Err(Error::domain(format!(
                "field size {} is too large; entries are stored in one byte",
                field.q()
            )));
        }
        let dims: Vec<DimVec> = bound
            .below()
            .into_iter()
            .filter(|d| height.is_none_or(|h| d.total() <= h))
            .collect();
        let mut table = ClassTable {
            quiver: quiver.clone(),
            field,
            fp: Fp::new(field.q()),
            bound: bound.clone(),
            height,
            limits,
            dims: dims.clone(),
            classes: Vec::new(),
            by_dim: BTreeMap::new(),
            orbits: HashMap::new(),
            hall_rows: Vec::new(),
            hall: HashMap::new(),
        };
        for d in &dims {
            table.enumerate_dim(d)?;
        }
        table.mark_decomposables();
        table.compute_hall()?;
        Ok(table)
    }

    fn enumerate_dim(&mut self, mu: &DimVec) -> Result<()> {
        let q = self.field.q();
        let layout = Layout::new(&self.quiver, mu);
        if (q as u128).checked_pow(layout.len as u32).is_none() {
            return Err(Error::resource(format!(
                "dimension vector {mu} needs {} matrix entries, too many to encode",
                layout.len
            )));
        }
        let group_order = mu
            .0
            .iter()
            .try_fold(1u128, |acc, &d| gl_order(d, q).and_then(|g| acc.checked_mul(g)))
            .ok_or_else(|| Error::resource(format!("group order for {mu} overflows")))?;

        if mu.is_zero() {
            self.push_classes(mu, vec![(0, vec![0])], layout.len, group_order)?;
            return Ok(());
        }

        let g = self.field.primitive_root() as u8;
        let action = Action {
            quiver: &self.quiver,
            layout: &layout,
            f: self.fp,
            g,
            g_inv: self.fp.inv(g),
        };
        let gens = generators(mu);
        let mut visited: FxHashMap<u128, usize> = FxHashMap::default();
        let mut orbits: Vec<(u128, Vec<u128>)> = Vec::new();
        let mut states = 0u64;
        let mut budget = |n: u64| -> Result<()> {
            states += n;
            if states > self.limits.max_states {
                Err(Error::resource(format!(
                    "enumerating dimension vector {mu} exceeds the state limit {}",
                    self.limits.max_states
                )))
            } else {
                Ok(())
            }
        };

        let mut buf = vec![0u8; layout.len];
        let mut next = vec![0u8; layout.len];
        let mut flat: Vec<u8> = Vec::new();
        for i in 0..mu.len() {
            let Some(smaller) = mu.checked_sub(&DimVec::unit(mu.len(), i)) else {
                continue;
            };
            let base_ids = self.by_dim.get(&smaller).cloned().unwrap_or_default();
            for x in base_ids {
                let xrep = self.classes[x].rep.clone();
                // free slots: new column of every arrow leaving vertex i,
                // excluding the new basis vector's own coordinate on loops
                let free: Vec<(usize, usize)> = self
                    .quiver
                    .arrows()
                    .iter()
                    .enumerate()
                    .filter(|(_, &(s, _))| s == i)
                    .flat_map(|(k, &(_, t))| (0..smaller.0[t] as usize).map(move |r| (k, r)))
                    .collect();
                let count = q.checked_pow(free.len() as u32).unwrap_or(u64::MAX);
                budget(count)?;
                for idx in 0..count {
                    let entries = extension_entries(&self.quiver, &layout, &xrep, i, &free, idx, q);
                    let code = encode(&entries, q);
                    if visited.contains_key(&code) {
                        continue;
                    }
                    // closure of a fresh orbit; entries of discovered states are
                    // kept in `flat` so codes never need decoding
                    let orbit_idx = orbits.len();
                    visited.insert(code, orbit_idx);
                    let mut members = vec![code];
                    flat.clear();
                    flat.extend_from_slice(&entries);
                    let mut head = 0;
                    while head < members.len() {
                        let cur = &flat[head * layout.len..(head + 1) * layout.len];
                        buf.copy_from_slice(cur);
                        head += 1;
                        for &gen in &gens {
                            next.copy_from_slice(&buf);
                            action.apply(gen, &mut next);
                            let nc = encode(&next, q);
                            if let std::collections::hash_map::Entry::Vacant(e) = visited.entry(nc) {
                                e.insert(orbit_idx);
                                members.push(nc);
                                flat.extend_from_slice(&next);
                                budget(1)?;
                            }
                        }
                    }
                    let min = *members.iter().min().expect("orbit is non-empty");
                    orbits.push((min, members));
                }
            }
        }
        self.push_classes(mu, orbits, layout.len, group_order)
    }

    fn push_classes(
        &mut self,
        mu: &DimVec,
        mut orbits: Vec<(u128, Vec<u128>)>,
        len: usize,
        group_order: u128,
    ) -> Result<()> {
        let q = self.field.q();
        orbits.sort_by_key(|o| o.0);
        let mut map = FxHashMap::default();
        let mut ids = Vec::with_capacity(orbits.len());
        let mut buf = vec![0u8; len];
        for (min, members) in orbits {
            let id = self.classes.len();
            if id >= self.limits.max_classes {
                return Err(Error::resource(format!(
                    "more than {} classes below {}",
                    self.limits.max_classes, self.bound
                )));
            }
            let orbit_size = members.len() as u128;
            if !group_order.is_multiple_of(orbit_size) {
                return Err(Error::internal(format!(
                    "orbit of size {orbit_size} does not divide the group order {group_order} at {mu}"
                )));
            }
            for c in members {
                map.insert(c, id);
            }
            decode(min, q, len, &mut buf);
            let rep = Rep::from_entries(&self.quiver, mu, &buf);
            self.classes.push(RepClass {
                id,
                dim: mu.clone(),
                rep,
                code: min,
                aut: group_order / orbit_size,
                orbit_size,
                indecomposable: !mu.is_zero(),
            });
            ids.push(id);
        }
        self.by_dim.insert(mu.clone(), ids);
        self.orbits.insert(mu.clone(), map);
        Ok(())
    }

    /// A class is decomposable iff it is the class of `X + Y` for non-zero
    /// classes `X`, `Y` in the table (Krull-Schmidt).
    fn mark_decomposables(&mut self) {
        let mut decomposable = Vec::new();
        for x in 0..self.classes.len() {
            for y in x..self.classes.len() {
                let (cx, cy) = (&self.classes[x], &self.classes[y]);
                if cx.dim.is_zero() || cy.dim.is_zero() {
                    continue;
                }
                let sum = cx.rep.direct_sum(&cy.rep, &self.quiver);
                if let Some(id) = self.class_of(&sum) {
                    decomposable.push(id);
                }
            }
        }
        for id in decomposable {
            self.classes[id].indecomposable = false;
        }
    }

    fn compute_hall(&mut self) -> Result<()> {
        let mut cache: HashMap<(usize, usize), Vec<Subspace>> = HashMap::new();
        let mut rows = Vec::with_capacity(self.classes.len());
        for gamma in 0..self.classes.len() {
            let row = self.hall_row(gamma, &mut cache)?;
            rows.push(row);
        }
        for (gamma, row) in rows.iter().enumerate() {
            for &(a, b, n) in row {
                self.hall.insert((a, b, gamma), n);
            }
        }
        self.hall_rows = rows;
        Ok(())
    }

    fn hall_row(
        &self,
        gamma: ClassId,
        cache: &mut HashMap<(usize, usize), Vec<Subspace>>,
    ) -> Result<Vec<(ClassId, ClassId, u64)>> {
        let f = self.fp;
        let c = &self.classes[gamma];
        let mu = &c.dim;
        let nv = self.quiver.vertex_count();
        let mut counts: BTreeMap<(ClassId, ClassId), u64> = BTreeMap::new();
        let mut states = 0u64;
        for beta_dim in mu.below() {
            let alpha_dim = mu.checked_sub(&beta_dim).expect("below yields smaller vectors");
            let lists: Vec<Vec<Subspace>> = (0..nv)
                .map(|i| {
                    cache
                        .entry((mu.0[i] as usize, beta_dim.0[i] as usize))
                        .or_insert_with(|| subspaces(mu.0[i] as usize, beta_dim.0[i] as usize, f))
                        .clone()
                })
                .collect();
            let total: u64 = lists.iter().map(|l| l.len() as u64).product();
            states += total;
            if states > self.limits.max_states {
                return Err(Error::resource(format!(
                    "subobject scan of a class of dimension {mu} exceeds the state limit {}",
                    self.limits.max_states
                )));
            }
            let mut pick = vec![0usize; nv];
            for _ in 0..total {
                let tuple: Vec<&Subspace> = (0..nv).map(|i| &lists[i][pick[i]]).collect();
                if let Some((sub, quot)) = self.split(&c.rep, &tuple, &beta_dim, &alpha_dim) {
                    let b = self.class_of(&sub).ok_or_else(|| {
                        Error::internal(format!("subobject {sub:?} missing from the table"))
                    })?;
                    let a = self.class_of(&quot).ok_or_else(|| {
                        Error::internal(format!("quotient {quot:?} missing from the table"))
                    })?;
                    *counts.entry((a, b)).or_insert(0) += 1;
                }
                // odometer
                for i in 0..nv {
                    pick[i] += 1;
                    if pick[i] < lists[i].len() {
                        break;
                    }
                    pick[i] = 0;
                }
            }
        }
        Ok(counts.into_iter().map(|((a, b), n)| (a, b, n)).collect())
    }

    /// Sub- and quotient representation for an invariant tuple of subspaces,
    /// or `None` when the tuple is not closed under the arrows.
    fn split(&self, m: &Rep, tuple: &[&Subspace], sub_dim: &DimVec, quot_dim: &DimVec) -> Option<(Rep, Rep)> {
        let f = self.fp;
        let mut sub_mats = Vec::with_capacity(self.quiver.arrows().len());
        let mut quot_mats = Vec::with_capacity(self.quiver.arrows().len());
        for (&(s, t), ma) in self.quiver.arrows().iter().zip(m.mats()) {
            let (us, ut) = (tuple[s], tuple[t]);
            let mut sm = Matrix::zeros(ut.dim(), us.dim());
            for j in 0..us.dim() {
                let image = ma.apply(us.basis.row(j), f);
                let (rem, coords) = ut.reduce(&image, f);
                if rem.iter().any(|&x| x != 0) {
                    return None;
                }
                for (r, &x) in coords.iter().enumerate() {
                    sm.set(r, j, x);
                }
            }
            let (comp_s, comp_t) = (us.complement_columns(), ut.complement_columns());
            let mut qm = Matrix::zeros(comp_t.len(), comp_s.len());
            for (j, &cs) in comp_s.iter().enumerate() {
                let column: Vec<u8> = (0..ma.rows()).map(|r| ma.get(r, cs)).collect();
                let (rem, _) = ut.reduce(&column, f);
                for (r, &ct) in comp_t.iter().enumerate() {
                    qm.set(r, j, rem[ct]);
                }
            }
            sub_mats.push(sm);
            quot_mats.push(qm);
        }
        let sub = Rep::new(&self.quiver, sub_dim.clone(), sub_mats).ok()?;
        let quot = Rep::new(&self.quiver, quot_dim.clone(), quot_mats).ok()?;
        Some((sub, quot))
    }

    pub fn quiver(&self) -> &Quiver {
        &self.quiver
    }

    pub fn field(&self) -> GroundField {
        self.field
    }

    pub fn fp(&self) -> Fp {
        self.fp
    }

    pub fn q(&self) -> u64 {
        self.field.q()
    }

    pub fn bound(&self) -> &DimVec {
        &self.bound
    }

    pub fn height(&self) -> Option<u32> {
        self.height
    }

    pub fn limits(&self) -> Limits {
        self.limits
    }

    /// Dimension vectors covered, by total degree and then lexicographically.
    pub fn dims(&self) -> &[DimVec] {
        &self.dims
    }

    /// Whether `d` is covered by the table.
    pub fn covers(&self, d: &DimVec) -> bool {
        self.by_dim.contains_key(d)
    }

    pub fn classes(&self) -> &[RepClass] {
        &self.classes
    }

    pub fn class(&self, id: ClassId) -> &RepClass {
        &self.classes[id]
    }

    pub fn classes_of_dim(&self, d: &DimVec) -> &[ClassId] {
        self.by_dim.get(d).map(Vec::as_slice).unwrap_or(&[])
    }

    pub fn zero_class(&self) -> ClassId {
        self.classes_of_dim(&DimVec::zero(self.quiver.vertex_count()))[0]
    }

    /// The class of the simple at vertex `i`, if the bound allows it.
    pub fn simple(&self, i: usize) -> Option<ClassId> {
        self.classes_of_dim(&DimVec::unit(self.quiver.vertex_count(), i))
            .first()
            .copied()
    }

    /// Class of an arbitrary representation, `None` when its dimension
    /// vector is outside the table or it is not nilpotent.
    pub fn class_of(&self, rep: &Rep) -> Option<ClassId> {
        let map = self.orbits.get(rep.dim())?;
        map.get(&encode(&rep.entries(), self.field.q())).copied()
    }

    pub fn aut(&self, id: ClassId) -> u128 {
        self.classes[id].aut
    }

    pub fn is_indecomposable(&self, id: ClassId) -> bool {
        self.classes[id].indecomposable
    }

    /// `g^gamma_{alpha beta}`: subobjects of `M_gamma` isomorphic to `M_beta`
    /// with quotient isomorphic to `M_alpha`.
    pub fn hall_number(&self, alpha: ClassId, beta: ClassId, gamma: ClassId) -> u64 {
        self.hall.get(&(alpha, beta, gamma)).copied().unwrap_or(0)
    }

    /// Non-zero entries `(alpha, beta, g)` of `gamma`'s row.
    pub fn hall_row_of(&self, gamma: ClassId) -> &[(ClassId, ClassId, u64)] {
        &self.hall_rows[gamma]
    }

    /// Number of filtrations `M_gamma = X_0 > X_1 > ... > X_m = 0` with
    /// `X_{k-1}/X_k` isomorphic to `M_{parts[k-1]}`.
    pub fn hall_number_multi(&self, gamma: ClassId, parts: &[ClassId]) -> u64 {
        match parts {
            [] => u64::from(self.classes[gamma].dim.is_zero()),
            [only] => u64::from(*only == gamma),
            [first, rest @ ..] => self.hall_rows[gamma]
                .iter()
                .filter(|&&(a, _, _)| a == *first)
                .map(|&(_, delta, n)| n * self.hall_number_multi(delta, rest))
                .sum(),
        }
    }

    pub fn hom_dim(&self, a: ClassId, b: ClassId) -> Result<usize> {
        super::rep::hom_dim(&self.quiver, self.fp, &self.classes[a].rep, &self.classes[b].rep)
    }

    pub fn ext_dim(&self, a: ClassId, b: ClassId) -> Result<usize> {
        super::rep::ext_dim(&self.quiver, self.fp, &self.classes[a].rep, &self.classes[b].rep)
    }
}

/// Entries of the extension of `x` by a top `S_i`: the new basis vector is
/// appended last at vertex `i`, its images under arrows leaving `i` are
/// given by digit `idx` over the free slots, and rows for it are zero.
fn extension_entries(
    quiver: &Quiver,
    layout: &Layout,
    x: &Rep,
    i: usize,
    free: &[(usize, usize)],
    mut idx: u64,
    q: u64,
) -> Vec<u8> {
    let mut out = vec![0u8; layout.len];
    for (m, &(off, _, cols)) in x.mats().iter().zip(&layout.slots) {
        for r in 0..m.rows() {
            for c in 0..m.cols() {
                out[off + r * cols + c] = m.get(r, c);
            }
        }
    }
    for &(k, r) in free {
        let (off, _, cols) = layout.slots[k];
        let (s, _) = quiver.arrows()[k];
        debug_assert_eq!(s, i);
        out[off + r * cols + (cols - 1)] = (idx % q) as u8;
        idx /= q;
    }
    out
}

/// All classes of dimension vector `mu`, building every smaller dimension
/// vector on the way.
pub fn enumerate_classes(quiver: &Quiver, field: GroundField, mu: &DimVec, limits: Limits) -> Result<Vec<RepClass>> {
    let table = ClassTable::build(quiver, field, mu, limits)?;
    Ok(table
        .classes_of_dim(mu)
        .iter()
        .map(|&id| table.class(id).clone())
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::repcat::rep::{aut_count, is_indecomposable};

    fn table(quiver: Quiver, q: u64, bound: &[u32]) -> ClassTable {
        ClassTable::build(&quiver, GroundField::new(q).unwrap(), &DimVec(bound.to_vec()), Limits::default())
            .unwrap()
    }

    fn d(v: &[u32]) -> DimVec {
        DimVec(v.to_vec())
    }

    #[test]
    fn jordan_counts_are_partition_numbers() {
        let partitions = [1, 1, 2, 3, 5, 7];
        for (q, top) in [(2, 5), (3, 4)] {
            let t = table(Quiver::jordan(), q, &[top]);
            for (n, &p) in partitions.iter().enumerate().take(top as usize + 1) {
                assert_eq!(t.classes_of_dim(&d(&[n as u32])).len(), p, "n={n} q={q}");
            }
        }
    }

    #[test]
    fn jordan_five_at_three_exceeds_the_limit() {
        // 3^20 nilpotent 5x5 matrices; a smaller limit trips the same guard sooner
        let limits = Limits {
            max_states: 1_000_000,
            ..Limits::default()
        };
        let err = ClassTable::build(&Quiver::jordan(), GroundField::new(3).unwrap(), &d(&[5]), limits).unwrap_err();
        assert!(matches!(err, Error::Resource(_)));
    }

    #[test]
    fn kronecker_and_a2_counts() {
        let k = table(Quiver::kronecker(), 2, &[1, 1]);
        assert_eq!(k.classes_of_dim(&d(&[1, 1])).len(), 4);
        let a = table(Quiver::a2(), 2, &[1, 1]);
        assert_eq!(a.classes_of_dim(&d(&[1, 1])).len(), 2);
        assert_eq!(a.classes_of_dim(&d(&[0, 0])).len(), 1);
    }

    #[test]
    fn orbit_stabilizer_matches_endomorphism_scan() {
        for q in [2, 3] {
            for (quiver, bound) in [
                (Quiver::a2(), vec![2, 2]),
                (Quiver::jordan(), vec![2]),
                (Quiver::kronecker(), vec![2, 2]),
            ] {
                let t = table(quiver.clone(), q, &bound);
                for c in t.classes() {
                    let direct = aut_count(&quiver, t.fp(), &c.rep, 1 << 20).unwrap();
                    assert_eq!(c.aut, direct as u128, "{c:?}");
                    let ind = is_indecomposable(&quiver, t.fp(), &c.rep, 1 << 20).unwrap();
                    assert_eq!(c.indecomposable, ind, "{c:?}");
                }
            }
        }
    }

    #[test]
    fn canonical_representative_is_orbit_minimum() {
        let t = table(Quiver::jordan(), 2, &[3]);
        for c in t.classes() {
            let orbit = &t.orbits[&c.dim];
            let min = orbit.iter().filter(|(_, &id)| id == c.id).map(|(&code, _)| code).min();
            assert_eq!(min, Some(c.code));
        }
    }

    #[test]
    fn hall_examples() {
        let t = table(Quiver::jordan(), 2, &[3]);
        let s = t.simple(0).unwrap();
        let zero2 = t.class_of(&Rep::zero(&Quiver::jordan(), d(&[2]))).unwrap();
        assert_eq!(t.hall_number(s, s, zero2), 3);
        assert_eq!(t.hall_number_multi(zero2, &[s, s]), 3);
        let zero3 = t.class_of(&Rep::zero(&Quiver::jordan(), d(&[3]))).unwrap();
        assert_eq!(t.hall_number_multi(zero3, &[s, s, s]), 21);
        let z = t.zero_class();
        for g in 0..t.classes().len() {
            assert_eq!(t.hall_number(z, g, g), 1);
            assert_eq!(t.hall_number(g, z, g), 1);
            assert_eq!(t.hall_number_multi(g, &[g]), 1);
        }

        let a = table(Quiver::a2(), 2, &[1, 1]);
        let (s1, s2) = (a.simple(0).unwrap(), a.simple(1).unwrap());
        let x = a
            .classes_of_dim(&d(&[1, 1]))
            .iter()
            .copied()
            .find(|&id| a.is_indecomposable(id))
            .unwrap();
        assert_eq!(a.hall_number(s1, s2, x), 1);
        assert_eq!(a.hall_number(s2, s1, x), 0);
    }

    #[test]
    fn enumerate_zero_vector() {
        let cs = enumerate_classes(&Quiver::kronecker(), GroundField::new(3).unwrap(), &d(&[0, 0]), Limits::default())
            .unwrap();
        assert_eq!(cs.len(), 1);
    }

    #[test]
    fn state_limit_names_the_dimension_vector() {
        let limits = Limits {
            max_states: 50,
            max_classes: 1000,
        };
        let err = ClassTable::build(&Quiver::jordan(), GroundField::new(3).unwrap(), &d(&[4]), limits).unwrap_err();
        match err {
            Error::Resource(msg) => assert!(msg.contains("(")),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn deterministic_ids() {
        let a = table(Quiver::kronecker(), 3, &[2, 2]);
        let b = table(Quiver::kronecker(), 3, &[2, 2]);
        let ca: Vec<_> = a.classes().iter().map(|c| (c.dim.clone(), c.code)).collect();
        let cb: Vec<_> = b.classes().iter().map(|c| (c.dim.clone(), c.code)).collect();
        assert_eq!(ca, cb);
    }
}
