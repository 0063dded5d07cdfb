use std::collections::HashMap;
use std::sync::Mutex;

use super::element::{triple_add, AlgElt, BasisSym, TensorElt, Triple};
use crate::error::{Error, Result};
use crate::repcat::{ClassId, ClassTable, DimVec};
use crate::scalars::{v_pow, Scalar};

/// The Hall algebras `H^+`, `H^-` and their reduced Drinfeld double, truncated
/// to the classes of a [`ClassTable`].
///
/// Basis symbols are written in minus-torus-plus order. Products that would
/// need a class outside the table fail with a truncation error.
pub struct HallAlgebra<'t> {
    table: &'t ClassTable,
    q: u64,
    n: usize,
    weights: Vec<Vec<i64>>,
    aut: Vec<Scalar>,
    /// `(alpha, beta) -> [(gamma, g^gamma_{alpha beta})]`.
    products: HashMap<(ClassId, ClassId), Vec<(ClassId, u64)>>,
    antipode_plus: Mutex<HashMap<(ClassId, ClassId), Scalar>>,
    antipode_minus: Mutex<HashMap<(ClassId, ClassId), Scalar>>,
    straightened: Mutex<HashMap<(ClassId, ClassId), AlgElt>>,
}

type Row3 = Vec<(BasisSym, BasisSym, BasisSym, Scalar)>;

impl<'t> HallAlgebra<'t> {
    pub fn new(table: &'t ClassTable) -> Self {
        let q = table.q();
        let weights: Vec<Vec<i64>> = table.classes().iter().map(|c| c.dim.to_weight()).collect();
        let aut = table.classes().iter().map(|c| Scalar::from_u128(c.aut, q)).collect();
        let mut products: HashMap<(ClassId, ClassId), Vec<(ClassId, u64)>> = HashMap::new();
        for gamma in 0..table.classes().len() {
            for &(a, b, g) in table.hall_row_of(gamma) {
                products.entry((a, b)).or_default().push((gamma, g));
            }
        }
        debug_assert_eq!(table.zero_class(), 0);
        HallAlgebra {
            table,
            q,
            n: table.quiver().vertex_count(),
            weights,
            aut,
            products,
            antipode_plus: Mutex::new(HashMap::new()),
            antipode_minus: Mutex::new(HashMap::new()),
            straightened: Mutex::new(HashMap::new()),
        }
    }

    pub fn table(&self) -> &'t ClassTable {
        self.table
    }

    pub fn q(&self) -> u64 {
        self.q
    }

    pub fn rank(&self) -> usize {
        self.n
    }

    pub fn weight(&self, id: ClassId) -> &[i64] {
        &self.weights[id]
    }

    /// `a_alpha` as a scalar.
    pub fn aut(&self, id: ClassId) -> &Scalar {
        &self.aut[id]
    }

    pub fn v(&self, n: i64) -> Scalar {
        v_pow(self.q, n)
    }

    pub fn euler(&self, a: &[i64], b: &[i64]) -> i64 {
        self.table.quiver().euler(a, b)
    }

    pub fn sym(&self, a: &[i64], b: &[i64]) -> i64 {
        self.table.quiver().symmetric(a, b)
    }

    pub fn one(&self) -> AlgElt {
        AlgElt::one(self.n, self.q)
    }

    pub fn k(&self, mu: &[i64]) -> AlgElt {
        AlgElt::basis(BasisSym::torus_only(mu.to_vec()), self.q)
    }

    pub fn u_plus(&self, id: ClassId) -> AlgElt {
        AlgElt::basis(BasisSym::positive(vec![0; self.n], id), self.q)
    }

    pub fn u_minus(&self, id: ClassId) -> AlgElt {
        AlgElt::basis(BasisSym::negative(id, vec![0; self.n]), self.q)
    }

    pub fn zero(&self) -> AlgElt {
        AlgElt::zero(self.q)
    }

    /// Degree `dim plus - dim minus` of a symbol.
    pub fn degree(&self, s: &BasisSym) -> Vec<i64> {
        self.weights[s.plus]
            .iter()
            .zip(&self.weights[s.minus])
            .map(|(a, b)| a - b)
            .collect()
    }

    /// The common degree of all symbols, `None` if `x` is not homogeneous.
    /// The zero element is homogeneous of every degree and reports `Some(0)`.
    pub fn homogeneous_degree(&self, x: &AlgElt) -> Option<Vec<i64>> {
        let mut degs = x.terms().map(|(s, _)| self.degree(s));
        let first = degs.next().unwrap_or_else(|| vec![0; self.n]);
        degs.all(|d| d == first).then_some(first)
    }

    fn add_dims(&self, a: ClassId, b: ClassId) -> DimVec {
        self.table.class(a).dim.add(&self.table.class(b).dim)
    }

    /// `u_a u_b = v^{<a,b>} sum_gamma g^gamma_{ab} u_gamma`, valid on both sides.
    fn hall_product(&self, a: ClassId, b: ClassId) -> Result<Vec<(ClassId, Scalar)>> {
        if a == 0 {
            return Ok(vec![(b, Scalar::one(self.q))]);
        }
        if b == 0 {
            return Ok(vec![(a, Scalar::one(self.q))]);
        }
        let dim = self.add_dims(a, b);
        if !self.table.covers(&dim) {
            return Err(Error::truncation(format!(
                "product of classes {a} and {b} has dimension {dim}, outside the table"
            )));
        }
        let twist = self.v(self.euler(&self.weights[a], &self.weights[b]));
        Ok(self
            .products
            .get(&(a, b))
            .map(|v| {
                v.iter()
                    .map(|&(g, n)| (g, twist.scale_int(n as i64)))
                    .collect()
            })
            .unwrap_or_default())
    }

    // ---- multiplication -------------------------------------------------

    pub fn mult_plus(&self, x: &AlgElt, y: &AlgElt) -> Result<AlgElt> {
        if !x.is_pure_positive() || !y.is_pure_positive() {
            return Err(Error::domain("mult_plus needs elements of the positive Hall algebra"));
        }
        self.double_mult(x, y)
    }

    pub fn mult_minus(&self, x: &AlgElt, y: &AlgElt) -> Result<AlgElt> {
        if !x.is_pure_negative() || !y.is_pure_negative() {
            return Err(Error::domain("mult_minus needs elements of the negative Hall algebra"));
        }
        self.double_mult(x, y)
    }

    /// Multiplication in the reduced Drinfeld double.
    pub fn double_mult(&self, x: &AlgElt, y: &AlgElt) -> Result<AlgElt> {
        let mut out = self.zero();
        for (s, cs) in x.terms() {
            for (t, ct) in y.terms() {
                let p = self.mult_sym(s, t)?;
                out.add_scaled(&p, &(cs * ct));
            }
        }
        Ok(out)
    }

    /// Product of a list of elements, left to right.
    pub fn product(&self, factors: &[AlgElt]) -> Result<AlgElt> {
        let mut acc = self.one();
        for f in factors {
            acc = self.double_mult(&acc, f)?;
        }
        Ok(acc)
    }

    /// `(u_b1 K_m1 u_a1)(u_b2 K_m2 u_a2)`: straighten `u_a1 u_b2`, move the
    /// torus parts outwards and multiply on each side.
    pub fn mult_sym(&self, s: &BasisSym, t: &BasisSym) -> Result<AlgElt> {
        let middle = self.straighten(s.plus, t.minus)?;
        let mut out = self.zero();
        for (m, c) in middle.terms() {
            let twist = self.v(
                -self.sym(&s.torus, &self.weights[m.minus]) - self.sym(&t.torus, &self.weights[m.plus]),
            );
            let coeff = c * &twist;
            let torus: Vec<i64> = (0..self.n).map(|i| s.torus[i] + m.torus[i] + t.torus[i]).collect();
            let minus = self.hall_product(s.minus, m.minus)?;
            let plus = self.hall_product(m.plus, t.plus)?;
            for (b, cb) in &minus {
                for (a, ca) in &plus {
                    out.add_term(BasisSym::new(*b, torus.clone(), *a), &(&coeff * cb) * ca);
                }
            }
        }
        Ok(out)
    }

    /// `u_alpha^+ u_delta^-` in minus-torus-plus normal form, from
    /// `a b = sum phi(a1, b1) phi(a3, S(b3)) b2 a2` over the double
    /// coproducts of both factors.
    pub fn straighten(&self, alpha: ClassId, delta: ClassId) -> Result<AlgElt> {
        if alpha == 0 || delta == 0 {
            return Ok(AlgElt::basis(BasisSym::new(delta, vec![0; self.n], alpha), self.q));
        }
        if let Some(hit) = self.straightened.lock().expect("cache poisoned").get(&(alpha, delta)) {
            return Ok(hit.clone());
        }
        let da = self.double_coproduct(&BasisSym::positive(vec![0; self.n], alpha))?;
        let db = self.double_coproduct(&BasisSym::negative(delta, vec![0; self.n]))?;
        let mut by_first: HashMap<ClassId, Vec<usize>> = HashMap::new();
        for (k, (b1, _, _, _)) in db.iter().enumerate() {
            by_first.entry(b1.minus).or_default().push(k);
        }
        let mut s_cache: HashMap<BasisSym, AlgElt> = HashMap::new();
        let mut out = self.zero();
        for (a1, a2, a3, ca) in &da {
            let Some(ks) = by_first.get(&a1.plus) else {
                continue;
            };
            for &k in ks {
                let (b1, b2, b3, cb) = &db[k];
                let p1 = self.phi_sym(a1, b1);
                if p1.is_zero() {
                    continue;
                }
                if !s_cache.contains_key(b3) {
                    let s = self.antipode_sym(b3)?;
                    s_cache.insert(b3.clone(), s);
                }
                let p3 = self.phi_elt_sym(a3, &s_cache[b3]);
                if p3.is_zero() {
                    continue;
                }
                let torus: Vec<i64> = (0..self.n).map(|i| b2.torus[i] + a2.torus[i]).collect();
                let c = &(&(ca * cb) * &p1) * &p3;
                out.add_term(BasisSym::new(b2.minus, torus, a2.plus), c);
            }
        }
        self.straightened
            .lock()
            .expect("cache poisoned")
            .insert((alpha, delta), out.clone());
        Ok(out)
    }

    // ---- comultiplication -------------------------------------------------

    pub fn comult(&self, x: &AlgElt) -> Result<TensorElt> {
        let mut out = TensorElt::zero(self.q);
        for (s, c) in x.terms() {
            out.add_scaled(&self.comult_sym(s)?, c);
        }
        Ok(out)
    }

    pub fn comult_plus(&self, x: &AlgElt) -> Result<TensorElt> {
        if !x.is_pure_positive() {
            return Err(Error::domain("comult_plus needs an element of the positive Hall algebra"));
        }
        self.comult(x)
    }

    pub fn comult_minus(&self, x: &AlgElt) -> Result<TensorElt> {
        if !x.is_pure_negative() {
            return Err(Error::domain("comult_minus needs an element of the negative Hall algebra"));
        }
        self.comult(x)
    }

    pub fn comult_sym(&self, s: &BasisSym) -> Result<TensorElt> {
        let mut out = TensorElt::zero(self.q);
        if s.minus == 0 {
            // K_mu u_gamma -> sum v^{<a,b> - (b,a)} a_a a_b / a_g  g^g_{ab}  K_{mu+b} u_a (x) K_mu u_b
            let gamma = s.plus;
            let inv = self.aut[gamma].inv().expect("automorphism counts are positive");
            for &(a, b, g) in self.table.hall_row_of(gamma) {
                let (wa, wb) = (&self.weights[a], &self.weights[b]);
                let e = self.euler(wa, wb) - self.sym(wb, wa);
                let c = &(&(&self.aut[a] * &self.aut[b]) * &inv) * &self.v(e).scale_int(g as i64);
                let left_torus: Vec<i64> = (0..self.n).map(|i| s.torus[i] + wb[i]).collect();
                out.add_term(
                    BasisSym::positive(left_torus, a),
                    BasisSym::positive(s.torus.clone(), b),
                    c,
                );
            }
            return Ok(out);
        }
        if s.plus == 0 {
            // u_gamma K_mu -> sum v^{<b,a>} a_a a_b / a_g  g^g_{ba}  u_a K_mu (x) u_b K_{mu-a}
            let gamma = s.minus;
            let inv = self.aut[gamma].inv().expect("automorphism counts are positive");
            for &(b, a, g) in self.table.hall_row_of(gamma) {
                let (wa, wb) = (&self.weights[a], &self.weights[b]);
                let c = &(&(&self.aut[a] * &self.aut[b]) * &inv) * &self.v(self.euler(wb, wa)).scale_int(g as i64);
                let right_torus: Vec<i64> = (0..self.n).map(|i| s.torus[i] - wa[i]).collect();
                out.add_term(
                    BasisSym::negative(a, s.torus.clone()),
                    BasisSym::negative(b, right_torus),
                    c,
                );
            }
            return Ok(out);
        }
        let left = self.comult_sym(&BasisSym::negative(s.minus, s.torus.clone()))?;
        let right = self.comult_sym(&BasisSym::positive(vec![0; self.n], s.plus))?;
        self.tensor_mult(&left, &right)
    }

    /// `(x1 (x) x2)(y1 (x) y2) = x1 y1 (x) x2 y2`.
    pub fn tensor_mult(&self, x: &TensorElt, y: &TensorElt) -> Result<TensorElt> {
        let mut out = TensorElt::zero(self.q);
        for ((x1, x2), cx) in x.terms() {
            for ((y1, y2), cy) in y.terms() {
                let left = self.mult_sym(x1, y1)?;
                let right = self.mult_sym(x2, y2)?;
                let c = cx * cy;
                for (l, cl) in left.terms() {
                    for (r, cr) in right.terms() {
                        out.add_term(l.clone(), r.clone(), &(&c * cl) * cr);
                    }
                }
            }
        }
        Ok(out)
    }

    /// `(Delta (x) id) Delta` on one symbol, as a list of triples.
    fn double_coproduct(&self, s: &BasisSym) -> Result<Row3> {
        let mut acc: Triple = Triple::new();
        for ((l, r), c) in self.comult_sym(s)?.terms() {
            for ((l1, l2), c2) in self.comult_sym(l)?.terms() {
                triple_add(&mut acc, (l1.clone(), l2.clone(), r.clone()), c * c2);
            }
        }
        Ok(acc.into_iter().map(|((a, b, c), x)| (a, b, c, x)).collect())
    }

    /// `(Delta (x) id) Delta (x)`.
    pub fn coproduct_left(&self, x: &AlgElt) -> Result<Triple> {
        let mut acc = Triple::new();
        for ((l, r), c) in self.comult(x)?.terms() {
            for ((l1, l2), c2) in self.comult_sym(l)?.terms() {
                triple_add(&mut acc, (l1.clone(), l2.clone(), r.clone()), c * c2);
            }
        }
        Ok(acc)
    }

    /// `(id (x) Delta) Delta (x)`.
    pub fn coproduct_right(&self, x: &AlgElt) -> Result<Triple> {
        let mut acc = Triple::new();
        for ((l, r), c) in self.comult(x)?.terms() {
            for ((r1, r2), c2) in self.comult_sym(r)?.terms() {
                triple_add(&mut acc, (l.clone(), r1.clone(), r2.clone()), c * c2);
            }
        }
        Ok(acc)
    }

    pub fn counit(&self, x: &AlgElt) -> Scalar {
        let mut acc = Scalar::zero(self.q);
        for (s, c) in x.terms() {
            if s.minus == 0 && s.plus == 0 {
                acc += c;
            }
        }
        acc
    }

    // ---- antipode ---------------------------------------------------------

    pub fn antipode(&self, x: &AlgElt) -> Result<AlgElt> {
        let mut out = self.zero();
        for (s, c) in x.terms() {
            out.add_scaled(&self.antipode_sym(s)?, c);
        }
        Ok(out)
    }

    pub fn antipode_plus(&self, x: &AlgElt) -> Result<AlgElt> {
        if !x.is_pure_positive() {
            return Err(Error::domain("antipode_plus needs an element of the positive Hall algebra"));
        }
        self.antipode(x)
    }

    pub fn antipode_minus(&self, x: &AlgElt) -> Result<AlgElt> {
        if !x.is_pure_negative() {
            return Err(Error::domain("antipode_minus needs an element of the negative Hall algebra"));
        }
        self.antipode(x)
    }

    pub fn antipode_sym(&self, s: &BasisSym) -> Result<AlgElt> {
        let mut out = self.zero();
        if s.minus == 0 {
            // S(K_mu u_g) = S(u_g) K_{-mu} = sum_pi c v^{(mu,pi)} K_{-g-mu} u_pi
            let gamma = s.plus;
            let inv = self.aut[gamma].inv().expect("automorphism counts are positive");
            let wg = &self.weights[gamma];
            let torus: Vec<i64> = (0..self.n).map(|i| -wg[i] - s.torus[i]).collect();
            for &pi in self.table.classes_of_dim(&self.table.class(gamma).dim) {
                let f = self.filtration_sum_plus(gamma, pi);
                if f.is_zero() {
                    continue;
                }
                let c = &(&f * &inv) * &self.v(self.sym(&s.torus, &self.weights[pi]));
                out.add_term(BasisSym::positive(torus.clone(), pi), c);
            }
            return Ok(out);
        }
        if s.plus == 0 {
            // S(u_g K_mu) = K_{-mu} S(u_g) = sum_pi c v^{(mu,pi)} u_pi K_{g-mu}
            let gamma = s.minus;
            let inv = self.aut[gamma].inv().expect("automorphism counts are positive");
            let wg = &self.weights[gamma];
            let torus: Vec<i64> = (0..self.n).map(|i| wg[i] - s.torus[i]).collect();
            for &pi in self.table.classes_of_dim(&self.table.class(gamma).dim) {
                let f = self.filtration_sum_minus(gamma, pi);
                if f.is_zero() {
                    continue;
                }
                let c = &(&f * &inv) * &self.v(self.sym(&s.torus, &self.weights[pi]));
                out.add_term(BasisSym::negative(pi, torus.clone()), c);
            }
            return Ok(out);
        }
        // S is an anti-homomorphism: S(u_b K_mu u_a) = S(u_a) S(u_b K_mu)
        let plus = self.antipode_sym(&BasisSym::positive(vec![0; self.n], s.plus))?;
        let minus = self.antipode_sym(&BasisSym::negative(s.minus, s.torus.clone()))?;
        self.double_mult(&plus, &minus)
    }

    /// `sum_m (-1)^m sum v^{2 sum_{i<j} <g_i, g_j>} a_{g_1}...a_{g_m}
    /// g^gamma_{g_1...g_m} g^pi_{g_1...g_m}`, peeling off `g_1` recursively.
    pub fn filtration_sum_plus(&self, gamma: ClassId, pi: ClassId) -> Scalar {
        if gamma == 0 {
            return if pi == 0 { Scalar::one(self.q) } else { Scalar::zero(self.q) };
        }
        if let Some(hit) = self.antipode_plus.lock().expect("cache poisoned").get(&(gamma, pi)) {
            return hit.clone();
        }
        let wg = &self.weights[gamma];
        let mut acc = Scalar::zero(self.q);
        for &(g1, delta, n1) in self.table.hall_row_of(gamma) {
            if g1 == 0 {
                continue;
            }
            let w1 = &self.weights[g1];
            let rest: Vec<i64> = wg.iter().zip(w1).map(|(a, b)| a - b).collect();
            let twist = self.v(2 * self.euler(w1, &rest));
            for &(h1, delta2, n2) in self.table.hall_row_of(pi) {
                if h1 != g1 {
                    continue;
                }
                let inner = self.filtration_sum_plus(delta, delta2);
                if inner.is_zero() {
                    continue;
                }
                let term = &(&twist * &self.aut[g1]) * &inner.scale_int((n1 * n2) as i64);
                acc -= &term;
            }
        }
        self.antipode_plus
            .lock()
            .expect("cache poisoned")
            .insert((gamma, pi), acc.clone());
        acc
    }

    /// `sum_m (-1)^m sum a_{g_1}...a_{g_m} g^gamma_{g_1...g_m} g^pi_{g_m...g_1}`.
    pub fn filtration_sum_minus(&self, gamma: ClassId, pi: ClassId) -> Scalar {
        if gamma == 0 {
            return if pi == 0 { Scalar::one(self.q) } else { Scalar::zero(self.q) };
        }
        if let Some(hit) = self.antipode_minus.lock().expect("cache poisoned").get(&(gamma, pi)) {
            return hit.clone();
        }
        let mut acc = Scalar::zero(self.q);
        for &(g1, delta, n1) in self.table.hall_row_of(gamma) {
            if g1 == 0 {
                continue;
            }
            // g^pi_{... g1}: g1 is the bottom piece of the filtration of pi
            for &(delta2, h1, n2) in self.table.hall_row_of(pi) {
                if h1 != g1 {
                    continue;
                }
                let inner = self.filtration_sum_minus(delta, delta2);
                if inner.is_zero() {
                    continue;
                }
                let term = &self.aut[g1] * &inner.scale_int((n1 * n2) as i64);
                acc -= &term;
            }
        }
        self.antipode_minus
            .lock()
            .expect("cache poisoned")
            .insert((gamma, pi), acc.clone());
        acc
    }

    // ---- involution and pairings -------------------------------------------

    pub fn omega(&self, x: &AlgElt) -> Result<AlgElt> {
        let mut out = self.zero();
        for (s, c) in x.terms() {
            out.add_scaled(&self.omega_sym(s)?, c);
        }
        Ok(out)
    }

    pub fn omega_sym(&self, s: &BasisSym) -> Result<AlgElt> {
        let neg_torus: Vec<i64> = s.torus.iter().map(|x| -x).collect();
        if s.minus == 0 {
            // K_{-mu} u_a^- = v^{(mu,a)} u_a^- K_{-mu}
            let c = self.v(self.sym(&s.torus, &self.weights[s.plus]));
            return Ok(AlgElt::term(BasisSym::negative(s.plus, neg_torus), c));
        }
        if s.plus == 0 {
            // u_b^+ K_{-mu} = v^{(mu,b)} K_{-mu} u_b^+
            let c = self.v(self.sym(&s.torus, &self.weights[s.minus]));
            return Ok(AlgElt::term(BasisSym::positive(neg_torus, s.minus), c));
        }
        let left = self.omega_sym(&BasisSym::negative(s.minus, s.torus.clone()))?;
        let right = self.omega_sym(&BasisSym::positive(vec![0; self.n], s.plus))?;
        self.double_mult(&left, &right)
    }

    /// Applies `omega` to both tensor factors.
    pub fn omega_tensor(&self, x: &TensorElt) -> Result<TensorElt> {
        let mut out = TensorElt::zero(self.q);
        for ((l, r), c) in x.terms() {
            let t = TensorElt::tensor(&self.omega_sym(l)?, &self.omega_sym(r)?);
            out.add_scaled(&t, c);
        }
        Ok(out)
    }

    /// `phi(K_mu u_a^+, u_b^- K_nu)`, using `u_b^- K_nu = v^{(nu,b)} K_nu u_b^-`.
    pub fn phi_sym(&self, a: &BasisSym, b: &BasisSym) -> Scalar {
        debug_assert!(a.is_positive() && b.is_negative());
        if a.plus != b.minus {
            return Scalar::zero(self.q);
        }
        let (mu, nu) = (&a.torus, &b.torus);
        let w = &self.weights[a.plus];
        let e = self.sym(nu, w) - self.sym(mu, nu) - self.sym(w, nu) + self.sym(mu, w);
        &self.v(e) * &self.aut[a.plus].inv().expect("automorphism counts are positive")
    }

    fn phi_elt_sym(&self, a: &BasisSym, y: &AlgElt) -> Scalar {
        let mut acc = Scalar::zero(self.q);
        for (b, c) in y.terms() {
            acc += &(&self.phi_sym(a, b) * c);
        }
        acc
    }

    pub fn pairing_phi(&self, x: &AlgElt, y: &AlgElt) -> Result<Scalar> {
        if !x.is_pure_positive() || !y.is_pure_negative() {
            return Err(Error::domain(
                "phi pairs the positive Hall algebra with the negative one",
            ));
        }
        let mut acc = Scalar::zero(self.q);
        for (a, ca) in x.terms() {
            for (b, cb) in y.terms() {
                acc += &(&(&self.phi_sym(a, b) * ca) * cb);
            }
        }
        Ok(acc)
    }

    /// `phi(x1, y1) phi(x2, y2)` summed over both tensors.
    pub fn pairing_phi_tensor(&self, x: &TensorElt, y: &TensorElt) -> Result<Scalar> {
        let mut acc = Scalar::zero(self.q);
        for ((x1, x2), cx) in x.terms() {
            if !x1.is_positive() || !x2.is_positive() {
                return Err(Error::domain("left tensor must be positive in both factors"));
            }
            for ((y1, y2), cy) in y.terms() {
                if !y1.is_negative() || !y2.is_negative() {
                    return Err(Error::domain("right tensor must be negative in both factors"));
                }
                let p = &self.phi_sym(x1, y1) * &self.phi_sym(x2, y2);
                if !p.is_zero() {
                    acc += &(&(&p * cx) * cy);
                }
            }
        }
        Ok(acc)
    }

    /// `psi(x, y) = phi(x, omega(y))` on the positive Hall algebra.
    pub fn pairing_psi(&self, x: &AlgElt, y: &AlgElt) -> Result<Scalar> {
        if !x.is_pure_positive() || !y.is_pure_positive() {
            return Err(Error::domain("psi pairs the positive Hall algebra with itself"));
        }
        self.pairing_phi(x, &self.omega(y)?)
    }
}
