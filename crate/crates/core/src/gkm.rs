//! Borcherds data, Borcherds-Cartan matrices, Weyl group reflections and
//! height-bounded root enumeration.

use std::collections::{BTreeSet, VecDeque};
use std::fmt;

use num_rational::Rational64;

use crate::error::{Error, Result};
use crate::repcat::{ClassTable, Quiver};

/// An index set `0..n` with a symmetric integer bilinear form.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BorcherdsDatum {
    form: Vec<Vec<i64>>,
}

impl BorcherdsDatum {
    /// Checks symmetry, non-positive off-diagonal values and integrality of
    /// `2(i,j)/(i,i)` for `(i,i) > 0`.
    pub fn new(form: Vec<Vec<i64>>) -> Result<Self> {
        let n = form.len();
        for (i, row) in form.iter().enumerate() {
            if row.len() != n {
                return Err(Error::domain("bilinear form must be a square matrix"));
            }
            for j in 0..n {
                if form[i][j] != form[j][i] {
                    return Err(Error::domain(format!("form is not symmetric at ({}, {})", i + 1, j + 1)));
                }
                if i != j && form[i][j] > 0 {
                    return Err(Error::domain(format!(
                        "off-diagonal value ({}, {}) = {} is positive",
                        i + 1,
                        j + 1,
                        form[i][j]
                    )));
                }
                if form[i][i] > 0 && (2 * form[i][j]) % form[i][i] != 0 {
                    return Err(Error::domain(format!(
                        "2({0},{1})/({0},{0}) is not an integer",
                        i + 1,
                        j + 1
                    )));
                }
            }
        }
        Ok(BorcherdsDatum { form })
    }

    pub fn rank(&self) -> usize {
        self.form.len()
    }

    pub fn form(&self) -> &[Vec<i64>] {
        &self.form
    }

    /// `(i, j)` on simple indices.
    pub fn value(&self, i: usize, j: usize) -> i64 {
        self.form[i][j]
    }

    /// The form on arbitrary integer vectors.
    pub fn pair(&self, a: &[i64], b: &[i64]) -> i64 {
        let mut acc = 0;
        for (i, &x) in a.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in b.iter().enumerate() {
                acc += x * y * self.form[i][j];
            }
        }
        acc
    }

    pub fn is_real(&self, i: usize) -> bool {
        self.form[i][i] > 0
    }

    pub fn real_indices(&self) -> Vec<usize> {
        (0..self.rank()).filter(|&i| self.is_real(i)).collect()
    }

    pub fn imaginary_indices(&self) -> Vec<usize> {
        (0..self.rank()).filter(|&i| !self.is_real(i)).collect()
    }

    /// Whether the support of `mu` is connected in the graph with an edge
    /// `i - j` whenever `(i, j) != 0`.
    pub fn support_connected(&self, mu: &[i64]) -> bool {
        let support: Vec<usize> = (0..mu.len()).filter(|&i| mu[i] != 0).collect();
        let Some(&start) = support.first() else {
            return false;
        };
        let mut seen = vec![false; mu.len()];
        seen[start] = true;
        let mut queue = VecDeque::from([start]);
        while let Some(i) = queue.pop_front() {
            for &j in &support {
                if !seen[j] && self.form[i][j] != 0 {
                    seen[j] = true;
                    queue.push_back(j);
                }
            }
        }
        support.iter().all(|&i| seen[i])
    }
}

/// The symmetric Euler form on vertex simples.
pub fn datum_from_quiver(quiver: &Quiver) -> Result<BorcherdsDatum> {
    let n = quiver.vertex_count();
    let unit = |i: usize| {
        let mut e = vec![0; n];
        e[i] = 1;
        e
    };
    let form = (0..n)
        .map(|i| (0..n).map(|j| quiver.symmetric(&unit(i), &unit(j))).collect())
        .collect();
    BorcherdsDatum::new(form)
        .map_err(|e| Error::internal(format!("symmetric Euler form is not a Borcherds datum: {e}")))
}

pub fn datum_from_table(table: &ClassTable) -> Result<BorcherdsDatum> {
    datum_from_quiver(table.quiver())
}

/// A symmetrizable Borcherds-Cartan matrix with its symmetrizers.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CartanMatrix {
    datum: BorcherdsDatum,
    entries: Vec<Vec<i64>>,
    symmetrizers: Vec<Rational64>,
}

impl CartanMatrix {
    pub fn datum(&self) -> &BorcherdsDatum {
        &self.datum
    }

    pub fn rank(&self) -> usize {
        self.entries.len()
    }

    pub fn entry(&self, i: usize, j: usize) -> i64 {
        self.entries[i][j]
    }

    pub fn entries(&self) -> &[Vec<i64>] {
        &self.entries
    }

    /// `epsilon_i`, so that `v_i = v^{epsilon_i}`.
    pub fn symmetrizer(&self, i: usize) -> Rational64 {
        self.symmetrizers[i]
    }

    pub fn is_real(&self, i: usize) -> bool {
        self.entries[i][i] == 2
    }
}

/// `c_ij = 2(i,j)/(i,i)` and `epsilon_i = (i,i)/2` when `(i,i) > 0`,
/// otherwise `c_ij = (i,j)` and `epsilon_i = 1`.
pub fn cartan_from_datum(d: &BorcherdsDatum) -> CartanMatrix {
    let n = d.rank();
    let mut entries = vec![vec![0; n]; n];
    let mut symmetrizers = Vec::with_capacity(n);
    for i in 0..n {
        let ii = d.value(i, i);
        for j in 0..n {
            entries[i][j] = if ii > 0 { 2 * d.value(i, j) / ii } else { d.value(i, j) };
        }
        symmetrizers.push(if ii > 0 {
            Rational64::new(ii, 2)
        } else {
            Rational64::from_integer(1)
        });
    }
    CartanMatrix {
        datum: d.clone(),
        entries,
        symmetrizers,
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum RootKind {
    Real,
    Imaginary,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum RootSign {
    Positive,
    Negative,
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Root {
    pub vector: Vec<i64>,
    pub kind: RootKind,
    pub sign: RootSign,
}

impl Root {
    pub fn height(&self) -> i64 {
        self.vector.iter().sum()
    }

    pub fn negated(&self) -> Root {
        Root {
            vector: self.vector.iter().map(|x| -x).collect(),
            kind: self.kind,
            sign: match self.sign {
                RootSign::Positive => RootSign::Negative,
                RootSign::Negative => RootSign::Positive,
            },
        }
    }
}

impl fmt::Display for Root {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let v: Vec<String> = self.vector.iter().map(i64::to_string).collect();
        let kind = match self.kind {
            RootKind::Real => "real",
            RootKind::Imaginary => "imaginary",
        };
        write!(f, "({}) {kind}", v.join(","))
    }
}

/// `r_i(mu) = mu - (sum_j c_ij mu_j) i`, i.e. `mu - 2(mu,i)/(i,i) i`.
pub fn reflect(c: &CartanMatrix, i: usize, mu: &[i64]) -> Result<Vec<i64>> {
    if i >= c.rank() {
        return Err(Error::domain(format!("index {} out of range", i + 1)));
    }
    if !c.is_real(i) {
        return Err(Error::domain(format!("index {} is imaginary and has no reflection", i + 1)));
    }
    let k: i64 = (0..c.rank()).map(|j| c.entry(i, j) * mu[j]).sum();
    let mut out = mu.to_vec();
    out[i] -= k;
    Ok(out)
}

fn height(mu: &[i64]) -> i64 {
    mu.iter().sum()
}

fn non_negative(mu: &[i64]) -> bool {
    mu.iter().all(|&x| x >= 0)
}

/// Orders vectors by height, then lexicographically.
fn sort_vectors(v: &mut [Vec<i64>]) {
    v.sort_by(|a, b| height(a).cmp(&height(b)).then_with(|| a.cmp(b)));
}

/// All non-zero vectors in `N^n` of height at most `h`.
fn vectors_up_to(n: usize, h: u32) -> Vec<Vec<i64>> {
    let mut out = vec![vec![]];
    for _ in 0..n {
        out = out
            .into_iter()
            .flat_map(|p: Vec<i64>| {
                let used = height(&p);
                (0..=(h as i64 - used)).map(move |x| {
                    let mut q = p.clone();
                    q.push(x);
                    q
                })
            })
            .collect();
    }
    out.retain(|v| height(v) > 0);
    sort_vectors(&mut out);
    out
}

/// Whether `mu` is a multiple `s i`, `s >= 2`, of an imaginary simple index.
pub fn is_imaginary_multiple(c: &CartanMatrix, mu: &[i64]) -> bool {
    let support: Vec<usize> = (0..mu.len()).filter(|&i| mu[i] != 0).collect();
    matches!(support.as_slice(), [i] if !c.is_real(*i) && mu[*i] >= 2)
}

/// Whether `mu` lies in the fundamental region: non-zero in `N^n`, connected
/// support, `(mu, i) <= 0` for every real `i`, and not `s i` for imaginary `i`
/// and `s >= 2`.
pub fn in_fundamental_region(c: &CartanMatrix, mu: &[i64]) -> bool {
    let d = c.datum();
    non_negative(mu)
        && height(mu) > 0
        && d.support_connected(mu)
        && d.real_indices().iter().all(|&i| {
            let mut e = vec![0; mu.len()];
            e[i] = 1;
            d.pair(mu, &e) <= 0
        })
        && !is_imaginary_multiple(c, mu)
}

/// The fundamental region up to a height, sorted by height then lexicographically.
pub fn fundamental_region(c: &CartanMatrix, height: u32) -> Vec<Vec<i64>> {
    vectors_up_to(c.rank(), height)
        .into_iter()
        .filter(|mu| in_fundamental_region(c, mu))
        .collect()
}

/// Closure of `seeds` under the real simple reflections, keeping vectors in
/// `N^n` of height at most `height`.
///
/// Any positive root outside the fundamental region can be lowered by some
/// real reflection without leaving `N^n`, so closing upwards from the seeds
/// within the height bound reaches every root the bound admits.
pub fn weyl_orbit(c: &CartanMatrix, seeds: &[Vec<i64>], height_bound: u32) -> Vec<Vec<i64>> {
    let real = c.datum().real_indices();
    let mut seen: BTreeSet<Vec<i64>> = BTreeSet::new();
    let mut queue = VecDeque::new();
    for s in seeds {
        if non_negative(s) && height(s) <= height_bound as i64 && seen.insert(s.clone()) {
            queue.push_back(s.clone());
        }
    }
    while let Some(mu) = queue.pop_front() {
        for &i in &real {
            let r = reflect(c, i, &mu).expect("real index");
            if non_negative(&r) && height(&r) > 0 && height(&r) <= height_bound as i64 && seen.insert(r.clone()) {
                queue.push_back(r);
            }
        }
    }
    let mut out: Vec<Vec<i64>> = seen.into_iter().collect();
    sort_vectors(&mut out);
    out
}

/// Positive roots of height at most `height`: the Weyl closure of the real
/// simple roots (tagged real) and of the fundamental region (tagged imaginary).
pub fn positive_roots(c: &CartanMatrix, height: u32) -> Vec<Root> {
    let n = c.rank();
    let real_seeds: Vec<Vec<i64>> = c
        .datum()
        .real_indices()
        .into_iter()
        .map(|i| {
            let mut e = vec![0; n];
            e[i] = 1;
            e
        })
        .collect();
    let mut roots: Vec<Root> = weyl_orbit(c, &real_seeds, height)
        .into_iter()
        .map(|vector| Root {
            vector,
            kind: RootKind::Real,
            sign: RootSign::Positive,
        })
        .collect();
    roots.extend(
        weyl_orbit(c, &fundamental_region(c, height), height)
            .into_iter()
            .map(|vector| Root {
                vector,
                kind: RootKind::Imaginary,
                sign: RootSign::Positive,
            }),
    );
    roots.sort_by(|a, b| {
        a.height()
            .cmp(&b.height())
            .then_with(|| a.vector.cmp(&b.vector))
            .then_with(|| a.kind.cmp(&b.kind))
    });
    roots
}

/// `W_0(union_{s >= 2} s I^im)` up to a height.
pub fn imaginary_multiples_orbit(c: &CartanMatrix, height: u32) -> Vec<Vec<i64>> {
    let n = c.rank();
    let mut seeds = Vec::new();
    for i in c.datum().imaginary_indices() {
        for s in 2..=height as i64 {
            let mut e = vec![0; n];
            e[i] = s;
            seeds.push(e);
        }
    }
    weyl_orbit(c, &seeds, height)
}
