//! Exact arithmetic in the quadratic extension Q(v) with v = sqrt(q).
//!
//! Every coefficient produced by the Hall-algebra formulas is a rational
//! combination of powers of `v`, so reducing with `v^2 = q` keeps each value
//! as a pair `a + b*v` of arbitrary-precision rationals. When `q` is a perfect
//! square the `b` component is folded into `a` at construction, so the same
//! code path serves both cases.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_integer::Roots;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// The finite field F_q used for representations; `q` must be prime.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct GroundField {
    q: u64,
}

impl GroundField {
    pub fn new(q: u64) -> Result<Self> {
        if q < 2 || !is_prime(q) {
            return Err(Error::domain(format!("q must be prime (got {q})")));
        }
        Ok(GroundField { q })
    }

    pub fn q(&self) -> u64 {
        self.q
    }

    /// `v^n` in Q(sqrt q).
    pub fn v_pow(&self, n: i64) -> Scalar {
        v_pow(self.q, n)
    }

    /// Smallest generator of the multiplicative group F_q^x.
    pub fn primitive_root(&self) -> u64 {
        let q = self.q;
        if q == 2 {
            return 1;
        }
        let order = q - 1;
        let factors = prime_factors(order);
        (2..q)
            .find(|&g| factors.iter().all(|&p| pow_mod(g, order / p, q) != 1))
            .expect("every prime field has a primitive root")
    }
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            out.push(d);
            while n.is_multiple_of(d) {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

fn pow_mod(mut base: u64, mut exp: u64, m: u64) -> u64 {
    let mut acc = 1u64;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % m;
        }
        base = base * base % m;
        exp >>= 1;
    }
    acc
}

fn perfect_root(q: u64) -> Option<u64> {
    let r = q.sqrt();
    (r * r == q).then_some(r)
}

/// An element `a + b*v` of Q(v), `v^2 = q`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Scalar {
    a: BigRational,
    b: BigRational,
    q: u64,
}

impl Scalar {
    pub fn new(a: BigRational, b: BigRational, q: u64) -> Self {
        match perfect_root(q) {
            Some(r) if !b.is_zero() => {
                let a = a + b * BigRational::from_integer(BigInt::from(r));
                Scalar {
                    a,
                    b: BigRational::zero(),
                    q,
                }
            }
            _ => Scalar { a, b, q },
        }
    }

    pub fn zero(q: u64) -> Self {
        Scalar {
            a: BigRational::zero(),
            b: BigRational::zero(),
            q,
        }
    }

    pub fn one(q: u64) -> Self {
        Scalar::from_int(1, q)
    }

    pub fn from_int(n: i64, q: u64) -> Self {
        Scalar {
            a: BigRational::from_integer(BigInt::from(n)),
            b: BigRational::zero(),
            q,
        }
    }

    pub fn from_u128(n: u128, q: u64) -> Self {
        Scalar {
            a: BigRational::from_integer(BigInt::from(n)),
            b: BigRational::zero(),
            q,
        }
    }

    pub fn from_ratio(num: i64, den: i64, q: u64) -> Self {
        Scalar {
            a: BigRational::new(BigInt::from(num), BigInt::from(den)),
            b: BigRational::zero(),
            q,
        }
    }

    pub fn from_rational(a: BigRational, q: u64) -> Self {
        Scalar {
            a,
            b: BigRational::zero(),
            q,
        }
    }

    /// Convenience constructor from small integer fractions `(an/ad) + (bn/bd) v`.
    pub fn from_parts(an: i64, ad: i64, bn: i64, bd: i64, q: u64) -> Self {
        Scalar::new(
            BigRational::new(BigInt::from(an), BigInt::from(ad)),
            BigRational::new(BigInt::from(bn), BigInt::from(bd)),
            q,
        )
    }

    pub fn a(&self) -> &BigRational {
        &self.a
    }

    pub fn b(&self) -> &BigRational {
        &self.b
    }

    pub fn q(&self) -> u64 {
        self.q
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.a.is_one() && self.b.is_zero()
    }

    /// Multiplicative inverse; `None` for zero. `(a + bv)^-1 = (a - bv) / (a^2 - q b^2)`.
    pub fn inv(&self) -> Option<Scalar> {
        if self.is_zero() {
            return None;
        }
        let qr = BigRational::from_integer(BigInt::from(self.q));
        let norm = &self.a * &self.a - &qr * &self.b * &self.b;
        Some(Scalar {
            a: &self.a / &norm,
            b: -(&self.b / &norm),
            q: self.q,
        })
    }

    pub fn scale_int(&self, n: i64) -> Scalar {
        let k = BigRational::from_integer(BigInt::from(n));
        Scalar {
            a: &self.a * &k,
            b: &self.b * &k,
            q: self.q,
        }
    }

    /// Strict positivity under the real embedding with `sqrt q > 0`.
    pub fn is_positive(&self) -> bool {
        is_positive(self)
    }

    /// Total order under the real embedding.
    pub fn cmp_real(&self, other: &Scalar) -> Ordering {
        let d = self - other;
        if d.is_zero() {
            Ordering::Equal
        } else if d.is_positive() {
            Ordering::Greater
        } else {
            Ordering::Less
        }
    }

    fn check_q(&self, other: &Scalar) {
        debug_assert_eq!(self.q, other.q, "mixing scalars over different q");
    }
}

/// Decides `a + b sqrt(q) > 0` exactly.
pub fn is_positive(x: &Scalar) -> bool {
    let a = &x.a;
    let b = &x.b;
    match (a.signum(), b.signum()) {
        (sa, sb) if sa.is_zero() && sb.is_zero() => false,
        (sa, sb) if !sa.is_negative() && !sb.is_negative() => true,
        (sa, sb) if !sa.is_positive() && !sb.is_positive() => false,
        (sa, _) => {
            let qr = BigRational::from_integer(BigInt::from(x.q));
            let a2 = a * a;
            let qb2 = qr * b * b;
            if sa.is_positive() {
                a2 > qb2
            } else {
                qb2 > a2
            }
        }
    }
}

/// `v^n` reduced by `v^2 = q`.
pub fn v_pow(q: u64, n: i64) -> Scalar {
    let half = n.div_euclid(2);
    let odd = n.rem_euclid(2) == 1;
    let qi = BigInt::from(q);
    let base = if half >= 0 {
        BigRational::from_integer(num_traits::pow(qi, half as usize))
    } else {
        BigRational::new(BigInt::one(), num_traits::pow(qi, (-half) as usize))
    };
    if odd {
        Scalar::new(BigRational::zero(), base, q)
    } else {
        Scalar::new(base, BigRational::zero(), q)
    }
}

/// Quantum integer `[n]_{v^eps} = (v_i^n - v_i^-n) / (v_i - v_i^-1)`,
/// expanded as the finite sum `sum_{k=0}^{n-1} v_i^{n-1-2k}`.
pub fn q_int(q: u64, n: u64, eps: u64) -> Scalar {
    let mut acc = Scalar::zero(q);
    for k in 0..n as i64 {
        acc += &v_pow(q, eps as i64 * (n as i64 - 1 - 2 * k));
    }
    acc
}

pub fn q_factorial(q: u64, n: u64, eps: u64) -> Scalar {
    (1..=n).fold(Scalar::one(q), |acc, k| &acc * &q_int(q, k, eps))
}

/// Quantum binomial `[m choose n]_{v^eps}`, computed by the q-Pascal rule
/// `[m, n] = v_i^{n-m} [m-1, n-1] + v_i^{n} [m-1, n]`.
pub fn q_binom(q: u64, m: u64, n: u64, eps: u64) -> Result<Scalar> {
    if n > m {
        return Err(Error::domain(format!(
            "quantum binomial needs n <= m (got m={m}, n={n})"
        )));
    }
    let e = eps as i64;
    let mut row = vec![Scalar::one(q)];
    for mm in 1..=m {
        let mut next = Vec::with_capacity(mm as usize + 1);
        for k in 0..=mm {
            let mut val = Scalar::zero(q);
            if k >= 1 {
                val += &(&v_pow(q, -e * (mm - k) as i64) * &row[(k - 1) as usize]);
            }
            if k < mm {
                val += &(&v_pow(q, e * k as i64) * &row[k as usize]);
            }
            next.push(val);
        }
        row = next;
    }
    Ok(row.swap_remove(n as usize))
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}+{}*v", self.a, self.b)
    }
}

impl fmt::Debug for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}+{}*v | q={})", self.a, self.b, self.q)
    }
}

impl<'a> Add<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn add(self, rhs: &'a Scalar) -> Scalar {
        self.check_q(rhs);
        Scalar {
            a: &self.a + &rhs.a,
            b: &self.b + &rhs.b,
            q: self.q,
        }
    }
}

impl Add for Scalar {
    type Output = Scalar;
    fn add(self, rhs: Scalar) -> Scalar {
        &self + &rhs
    }
}

impl<'a> Sub<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &'a Scalar) -> Scalar {
        self.check_q(rhs);
        Scalar {
            a: &self.a - &rhs.a,
            b: &self.b - &rhs.b,
            q: self.q,
        }
    }
}

impl Sub for Scalar {
    type Output = Scalar;
    fn sub(self, rhs: Scalar) -> Scalar {
        &self - &rhs
    }
}

impl<'a> Mul<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &'a Scalar) -> Scalar {
        self.check_q(rhs);
        let qr = BigRational::from_integer(BigInt::from(self.q));
        let a = &self.a * &rhs.a + qr * &self.b * &rhs.b;
        let b = &self.a * &rhs.b + &self.b * &rhs.a;
        Scalar { a, b, q: self.q }
    }
}

impl Mul for Scalar {
    type Output = Scalar;
    fn mul(self, rhs: Scalar) -> Scalar {
        &self * &rhs
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar {
            a: -self.a,
            b: -self.b,
            q: self.q,
        }
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        self.clone().neg()
    }
}

impl AddAssign<&Scalar> for Scalar {
    fn add_assign(&mut self, rhs: &Scalar) {
        self.check_q(rhs);
        self.a += &rhs.a;
        self.b += &rhs.b;
    }
}

impl SubAssign<&Scalar> for Scalar {
    fn sub_assign(&mut self, rhs: &Scalar) {
        self.check_q(rhs);
        self.a -= &rhs.a;
        self.b -= &rhs.b;
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(an: i64, ad: i64, bn: i64, bd: i64, q: u64) -> Scalar {
        Scalar::from_parts(an, ad, bn, bd, q)
    }

    #[test]
    fn ground_field_rejects_composites() {
        assert!(GroundField::new(4).is_err());
        assert!(GroundField::new(1).is_err());
        assert!(GroundField::new(0).is_err());
        assert_eq!(GroundField::new(7).unwrap().q(), 7);
        assert_eq!(GroundField::new(7).unwrap().primitive_root(), 3);
        assert_eq!(GroundField::new(2).unwrap().primitive_root(), 1);
    }

    #[test]
    fn v_pow_examples() {
        assert_eq!(v_pow(2, 2), s(2, 1, 0, 1, 2));
        assert_eq!(v_pow(2, -1), s(0, 1, 1, 2, 2));
        assert_eq!(v_pow(2, 0), Scalar::one(2));
        assert_eq!(v_pow(3, 3), s(0, 1, 3, 1, 3));
        // perfect square: v = 2 collapses into the rational part
        assert_eq!(v_pow(4, 1), Scalar::from_int(2, 4));
        assert_eq!(v_pow(4, -3), Scalar::from_ratio(1, 8, 4));
    }

    #[test]
    fn q_int_examples() {
        assert_eq!(q_int(2, 1, 1), Scalar::one(2));
        assert_eq!(q_int(2, 2, 1), s(0, 1, 3, 2, 2));
        assert_eq!(q_int(4, 2, 1), Scalar::from_ratio(5, 2, 4));
        assert_eq!(q_int(2, 0, 1), Scalar::zero(2));
    }

    #[test]
    fn q_binom_examples() {
        assert_eq!(q_binom(2, 2, 1, 1).unwrap(), s(0, 1, 3, 2, 2));
        assert_eq!(q_binom(2, 3, 0, 1).unwrap(), Scalar::one(2));
        // [3 choose 1] = v^2 + 1 + v^-2 = 2 + 1 + 1/2
        assert_eq!(q_binom(2, 3, 1, 1).unwrap(), Scalar::from_ratio(7, 2, 2));
        assert!(matches!(q_binom(2, 1, 2, 1), Err(Error::Domain(_))));
    }

    #[test]
    fn positivity_examples() {
        assert!(!is_positive(&s(-3, 1, 2, 1, 2)));
        assert!(is_positive(&s(0, 1, 1, 1, 2)));
        assert!(!is_positive(&Scalar::zero(2)));
        assert!(is_positive(&s(3, 1, -2, 1, 2)));
        assert!(is_positive(&s(-2, 1, 2, 1, 2)));
        assert!(!is_positive(&s(-1, 1, -1, 1, 2)));
    }

    #[test]
    fn inverse_of_v() {
        let v = v_pow(5, 1);
        assert_eq!(v.inv().unwrap(), s(0, 1, 1, 5, 5));
        assert!(Scalar::zero(5).inv().is_none());
    }

    #[test]
    fn display_uses_a_plus_b_v() {
        assert_eq!(s(1, 2, -3, 1, 2).to_string(), "1/2+-3*v");
    }
}
