use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A finite quiver. Loops and parallel arrows are allowed; the arrow order
/// fixes the order of the matrix slots in a representation.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Quiver {
    vertex_count: usize,
    arrows: Vec<(usize, usize)>,
}

impl Quiver {
    /// Arrows are `(source, target)` with 0-based vertex indices.
    pub fn new(vertex_count: usize, arrows: Vec<(usize, usize)>) -> Result<Self> {
        for &(s, t) in &arrows {
            for v in [s, t] {
                if v >= vertex_count {
                    return Err(Error::domain(format!(
                        "vertex {} out of range",
                        v + 1
                    )));
                }
            }
        }
        Ok(Quiver {
            vertex_count,
            arrows,
        })
    }

    /// One vertex with a single loop.
    pub fn jordan() -> Self {
        Quiver {
            vertex_count: 1,
            arrows: vec![(0, 0)],
        }
    }

    /// `1 -> 2`.
    pub fn a2() -> Self {
        Quiver {
            vertex_count: 2,
            arrows: vec![(0, 1)],
        }
    }

    /// Two parallel arrows `1 -> 2`.
    pub fn kronecker() -> Self {
        Quiver {
            vertex_count: 2,
            arrows: vec![(0, 1), (0, 1)],
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn arrows(&self) -> &[(usize, usize)] {
        &self.arrows
    }

    /// Euler form `<a, b> = sum_i a_i b_i - sum_{arrows s->t} a_s b_t` on ZI.
    pub fn euler(&self, a: &[i64], b: &[i64]) -> i64 {
        debug_assert_eq!(a.len(), self.vertex_count);
        debug_assert_eq!(b.len(), self.vertex_count);
        let diag: i64 = a.iter().zip(b).map(|(x, y)| x * y).sum();
        let arrows: i64 = self.arrows.iter().map(|&(s, t)| a[s] * b[t]).sum();
        diag - arrows
    }

    /// Symmetric Euler form `(a, b) = <a, b> + <b, a>`.
    pub fn symmetric(&self, a: &[i64], b: &[i64]) -> i64 {
        self.euler(a, b) + self.euler(b, a)
    }

    pub fn euler_form(&self, a: &DimVec, b: &DimVec) -> i64 {
        self.euler(&a.to_weight(), &b.to_weight())
    }

    pub fn symmetric_euler(&self, a: &DimVec, b: &DimVec) -> i64 {
        self.symmetric(&a.to_weight(), &b.to_weight())
    }

    pub fn loops_at(&self, i: usize) -> usize {
        self.arrows.iter().filter(|&&(s, t)| s == i && t == i).count()
    }
}

/// A dimension vector, one non-negative entry per vertex.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct DimVec(pub Vec<u32>);

impl DimVec {
    pub fn zero(n: usize) -> Self {
        DimVec(vec![0; n])
    }

    pub fn unit(n: usize, i: usize) -> Self {
        let mut d = DimVec::zero(n);
        d.0[i] = 1;
        d
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn total(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&x| x == 0)
    }

    /// Componentwise `<=`.
    pub fn le(&self, other: &DimVec) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    pub fn add(&self, other: &DimVec) -> DimVec {
        DimVec(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn checked_sub(&self, other: &DimVec) -> Option<DimVec> {
        self.0
            .iter()
            .zip(&other.0)
            .map(|(a, b)| a.checked_sub(*b))
            .collect::<Option<Vec<_>>>()
            .map(DimVec)
    }

    pub fn scale(&self, k: u32) -> DimVec {
        DimVec(self.0.iter().map(|a| a * k).collect())
    }

    pub fn to_weight(&self) -> Vec<i64> {
        self.0.iter().map(|&x| x as i64).collect()
    }

    /// Vertices with a non-zero entry.
    pub fn support(&self) -> Vec<usize> {
        (0..self.0.len()).filter(|&i| self.0[i] > 0).collect()
    }

    /// Every dimension vector `d <= self`, ordered by total degree and then
    /// lexicographically.
    pub fn below(&self) -> Vec<DimVec> {
        let mut out = vec![Vec::new()];
        for &b in &self.0 {
            out = out
                .into_iter()
                .flat_map(|prefix: Vec<u32>| {
                    (0..=b).map(move |x| {
                        let mut p = prefix.clone();
                        p.push(x);
                        p
                    })
                })
                .collect();
        }
        let mut dims: Vec<DimVec> = out.into_iter().map(DimVec).collect();
        dims.sort_by(|a, b| a.total().cmp(&b.total()).then_with(|| a.cmp(b)));
        dims
    }
}

impl fmt::Debug for DimVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for DimVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (k, x) in self.0.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, ")")
    }
}
