use std::collections::BTreeMap;
use std::fmt;

use crate::repcat::ClassId;
use crate::scalars::Scalar;

/// The triangular monomial `u_minus^- K_torus u_plus^+`. Class id 0 is the
/// zero object, so `plus = minus = 0` gives the pure torus element `K_torus`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BasisSym {
    pub minus: ClassId,
    pub torus: Vec<i64>,
    pub plus: ClassId,
}

impl BasisSym {
    pub fn new(minus: ClassId, torus: Vec<i64>, plus: ClassId) -> Self {
        BasisSym { minus, torus, plus }
    }

    pub fn one(n: usize) -> Self {
        BasisSym::new(0, vec![0; n], 0)
    }

    pub fn torus_only(torus: Vec<i64>) -> Self {
        BasisSym::new(0, torus, 0)
    }

    /// `K_torus u_plus^+`.
    pub fn positive(torus: Vec<i64>, plus: ClassId) -> Self {
        BasisSym::new(0, torus, plus)
    }

    /// `u_minus^- K_torus`.
    pub fn negative(minus: ClassId, torus: Vec<i64>) -> Self {
        BasisSym::new(minus, torus, 0)
    }

    pub fn is_positive(&self) -> bool {
        self.minus == 0
    }

    pub fn is_negative(&self) -> bool {
        self.plus == 0
    }
}

impl fmt::Debug for BasisSym {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for BasisSym {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        if self.minus != 0 {
            parts.push(format!("u-[{}]", self.minus));
        }
        if self.torus.iter().any(|&x| x != 0) {
            let t: Vec<String> = self.torus.iter().map(i64::to_string).collect();
            parts.push(format!("K({})", t.join(",")));
        }
        if self.plus != 0 {
            parts.push(format!("u+[{}]", self.plus));
        }
        if parts.is_empty() {
            write!(f, "1")
        } else {
            write!(f, "{}", parts.join(" "))
        }
    }
}

/// A finite linear combination of basis symbols. Zero coefficients are never
/// stored, so structural equality is equality of elements.
#[derive(Clone, PartialEq, Eq)]
pub struct AlgElt {
    q: u64,
    terms: BTreeMap<BasisSym, Scalar>,
}

impl AlgElt {
    pub fn zero(q: u64) -> Self {
        AlgElt {
            q,
            terms: BTreeMap::new(),
        }
    }

    pub fn basis(sym: BasisSym, q: u64) -> Self {
        AlgElt::term(sym, Scalar::one(q))
    }

    pub fn term(sym: BasisSym, c: Scalar) -> Self {
        let mut e = AlgElt::zero(c.q());
        e.add_term(sym, c);
        e
    }

    pub fn one(n: usize, q: u64) -> Self {
        AlgElt::basis(BasisSym::one(n), q)
    }

    pub fn q(&self) -> u64 {
        self.q
    }

    pub fn add_term(&mut self, sym: BasisSym, c: Scalar) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&sym) {
            Some(slot) => {
                *slot += &c;
                if slot.is_zero() {
                    self.terms.remove(&sym);
                }
            }
            None => {
                self.terms.insert(sym, c);
            }
        }
    }

    pub fn add_scaled(&mut self, other: &AlgElt, c: &Scalar) {
        for (s, x) in &other.terms {
            self.add_term(s.clone(), x * c);
        }
    }

    pub fn scaled(&self, c: &Scalar) -> AlgElt {
        let mut out = AlgElt::zero(self.q);
        out.add_scaled(self, c);
        out
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&BasisSym, &Scalar)> {
        self.terms.iter()
    }

    pub fn coeff(&self, sym: &BasisSym) -> Scalar {
        self.terms.get(sym).cloned().unwrap_or_else(|| Scalar::zero(self.q))
    }

    pub fn is_pure_positive(&self) -> bool {
        self.terms.keys().all(BasisSym::is_positive)
    }

    pub fn is_pure_negative(&self) -> bool {
        self.terms.keys().all(BasisSym::is_negative)
    }
}

impl std::ops::Add<&AlgElt> for &AlgElt {
    type Output = AlgElt;
    fn add(self, rhs: &AlgElt) -> AlgElt {
        let mut out = self.clone();
        out.add_scaled(rhs, &Scalar::one(self.q));
        out
    }
}

impl std::ops::Sub<&AlgElt> for &AlgElt {
    type Output = AlgElt;
    fn sub(self, rhs: &AlgElt) -> AlgElt {
        let mut out = self.clone();
        out.add_scaled(rhs, &Scalar::from_int(-1, self.q));
        out
    }
}

impl fmt::Debug for AlgElt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for AlgElt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self.terms.iter().map(|(s, c)| format!("({c}) {s}")).collect();
        write!(f, "{}", parts.join(" + "))
    }
}

/// A finite linear combination of pure tensors of basis symbols.
#[derive(Clone, PartialEq, Eq)]
pub struct TensorElt {
    q: u64,
    terms: BTreeMap<(BasisSym, BasisSym), Scalar>,
}

impl TensorElt {
    pub fn zero(q: u64) -> Self {
        TensorElt {
            q,
            terms: BTreeMap::new(),
        }
    }

    pub fn q(&self) -> u64 {
        self.q
    }

    pub fn add_term(&mut self, left: BasisSym, right: BasisSym, c: Scalar) {
        if c.is_zero() {
            return;
        }
        let key = (left, right);
        match self.terms.get_mut(&key) {
            Some(slot) => {
                *slot += &c;
                if slot.is_zero() {
                    self.terms.remove(&key);
                }
            }
            None => {
                self.terms.insert(key, c);
            }
        }
    }

    pub fn add_scaled(&mut self, other: &TensorElt, c: &Scalar) {
        for ((l, r), x) in &other.terms {
            self.add_term(l.clone(), r.clone(), x * c);
        }
    }

    /// `x (x) y` for two elements.
    pub fn tensor(x: &AlgElt, y: &AlgElt) -> TensorElt {
        let mut out = TensorElt::zero(x.q());
        for (a, ca) in x.terms() {
            for (b, cb) in y.terms() {
                out.add_term(a.clone(), b.clone(), ca * cb);
            }
        }
        out
    }

    /// Swaps the tensor factors.
    pub fn flip(&self) -> TensorElt {
        let mut out = TensorElt::zero(self.q);
        for ((l, r), c) in &self.terms {
            out.add_term(r.clone(), l.clone(), c.clone());
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(BasisSym, BasisSym), &Scalar)> {
        self.terms.iter()
    }
}

impl fmt::Debug for TensorElt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for TensorElt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|((l, r), c)| format!("({c}) {l} (x) {r}"))
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

/// Elements of the triple tensor power, used for coassociativity.
pub type Triple = BTreeMap<(BasisSym, BasisSym, BasisSym), Scalar>;

pub(crate) fn triple_add(t: &mut Triple, key: (BasisSym, BasisSym, BasisSym), c: Scalar) {
    if c.is_zero() {
        return;
    }
    match t.get_mut(&key) {
        Some(slot) => {
            *slot += &c;
            if slot.is_zero() {
                t.remove(&key);
            }
        }
        None => {
            t.insert(key, c);
        }
    }
}
