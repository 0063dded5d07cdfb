//! Dense matrices over a prime field F_p with entries stored as `u8`.

use std::fmt;

/// Arithmetic modulo a small prime `p < 256`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Fp {
    p: u32,
}

impl Fp {
    pub fn new(p: u64) -> Self {
        debug_assert!((2..256).contains(&p));
        Fp { p: p as u32 }
    }

    #[inline]
    pub fn p(&self) -> u32 {
        self.p
    }

    #[inline]
    pub fn add(&self, a: u8, b: u8) -> u8 {
        let s = a as u32 + b as u32;
        (if s >= self.p { s - self.p } else { s }) as u8
    }

    #[inline]
    pub fn sub(&self, a: u8, b: u8) -> u8 {
        let s = a as u32 + self.p - b as u32;
        (if s >= self.p { s - self.p } else { s }) as u8
    }

    #[inline]
    pub fn mul(&self, a: u8, b: u8) -> u8 {
        ((a as u32 * b as u32) % self.p) as u8
    }

    #[inline]
    pub fn neg(&self, a: u8) -> u8 {
        ((self.p - a as u32) % self.p) as u8
    }

    pub fn inv(&self, a: u8) -> u8 {
        debug_assert!(a != 0);
        // a^(p-2) by square-and-multiply
        let mut acc = 1u32;
        let mut base = a as u32 % self.p;
        let mut e = self.p - 2;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base % self.p;
            }
            base = base * base % self.p;
            e >>= 1;
        }
        acc as u8
    }
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<u8>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![0; rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Matrix::zeros(n, n);
        for i in 0..n {
            m.set(i, i, 1);
        }
        m
    }

    pub fn from_rows(rows: usize, cols: usize, data: Vec<u8>) -> Self {
        assert_eq!(data.len(), rows * cols, "matrix data has wrong length");
        Matrix { rows, cols, data }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn data(&self) -> &[u8] {
        &self.data
    }

    pub fn data_mut(&mut self) -> &mut [u8] {
        &mut self.data
    }

    #[inline]
    pub fn get(&self, r: usize, c: usize) -> u8 {
        self.data[r * self.cols + c]
    }

    #[inline]
    pub fn set(&mut self, r: usize, c: usize, v: u8) {
        self.data[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[u8] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&x| x == 0)
    }

    pub fn mul(&self, other: &Matrix, f: Fp) -> Matrix {
        assert_eq!(self.cols, other.rows, "matrix shape mismatch in product");
        let mut out = Matrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a == 0 {
                    continue;
                }
                for j in 0..other.cols {
                    let idx = i * other.cols + j;
                    out.data[idx] = f.add(out.data[idx], f.mul(a, other.get(k, j)));
                }
            }
        }
        out
    }

    pub fn add(&self, other: &Matrix, f: Fp) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(&a, &b)| f.add(a, b))
                .collect(),
        }
    }

    /// Reduced row echelon form together with the pivot columns.
    pub fn rref(&self, f: Fp) -> (Matrix, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(pr) = (r..m.rows).find(|&i| m.get(i, c) != 0) else {
                continue;
            };
            m.swap_rows(r, pr);
            let inv = f.inv(m.get(r, c));
            for j in 0..m.cols {
                let v = m.get(r, j);
                m.set(r, j, f.mul(v, inv));
            }
            for i in 0..m.rows {
                if i != r {
                    let factor = m.get(i, c);
                    if factor != 0 {
                        for j in 0..m.cols {
                            let v = f.sub(m.get(i, j), f.mul(factor, m.get(r, j)));
                            m.set(i, j, v);
                        }
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        (m, pivots)
    }

    pub fn rank(&self, f: Fp) -> usize {
        self.rref(f).1.len()
    }

    /// Basis of `{x : self * x = 0}`.
    pub fn nullspace(&self, f: Fp) -> Vec<Vec<u8>> {
        let (r, pivots) = self.rref(f);
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        free.iter()
            .map(|&fc| {
                let mut x = vec![0u8; self.cols];
                x[fc] = 1;
                for (row, &pc) in pivots.iter().enumerate() {
                    x[pc] = f.neg(r.get(row, fc));
                }
                x
            })
            .collect()
    }

    pub fn is_invertible(&self, f: Fp) -> bool {
        self.rows == self.cols && self.rank(f) == self.rows
    }

    pub fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j));
            }
        }
        t
    }

    /// Matrix-vector product.
    pub fn apply(&self, x: &[u8], f: Fp) -> Vec<u8> {
        assert_eq!(x.len(), self.cols);
        (0..self.rows)
            .map(|i| {
                (0..self.cols).fold(0u8, |acc, j| f.add(acc, f.mul(self.get(i, j), x[j])))
            })
            .collect()
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for r in 0..self.rows {
            if r > 0 {
                write!(f, ";")?;
            }
            for c in 0..self.cols {
                if c > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{}", self.get(r, c))?;
            }
        }
        write!(f, "]")
    }
}

/// Row-space of a set of vectors in reduced echelon form; used as a subspace
/// handle with fast membership and coordinate extraction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Subspace {
    /// RREF basis rows.
    pub basis: Matrix,
    pub pivots: Vec<usize>,
}

impl Subspace {
    pub fn from_rref(basis: Matrix, pivots: Vec<usize>) -> Self {
        Subspace { basis, pivots }
    }

    pub fn dim(&self) -> usize {
        self.pivots.len()
    }

    pub fn ambient(&self) -> usize {
        self.basis.cols()
    }

    /// Reduces `x` modulo the subspace, returning the remainder (zero on
    /// the pivot columns) and the coordinates that were subtracted.
    pub fn reduce(&self, x: &[u8], f: Fp) -> (Vec<u8>, Vec<u8>) {
        let mut rem = x.to_vec();
        let mut coords = vec![0u8; self.dim()];
        for (k, &pc) in self.pivots.iter().enumerate() {
            let c = rem[pc];
            if c != 0 {
                coords[k] = c;
                for (j, slot) in rem.iter_mut().enumerate() {
                    *slot = f.sub(*slot, f.mul(c, self.basis.get(k, j)));
                }
            }
        }
        (rem, coords)
    }

    pub fn contains(&self, x: &[u8], f: Fp) -> bool {
        self.reduce(x, f).0.iter().all(|&v| v == 0)
    }

    /// Columns not used as pivots; the corresponding unit vectors span a
    /// complement.
    pub fn complement_columns(&self) -> Vec<usize> {
        (0..self.ambient())
            .filter(|c| !self.pivots.contains(c))
            .collect()
    }
}

/// All `k`-dimensional subspaces of F_p^n, each as an RREF basis.
pub fn subspaces(n: usize, k: usize, f: Fp) -> Vec<Subspace> {
    let mut out = Vec::new();
    if k > n {
        return out;
    }
    let mut pivots = Vec::with_capacity(k);
    choose_pivots(n, k, 0, &mut pivots, &mut |piv| {
        // free slots: for row r, columns c > piv[r] that are not pivots
        let mut free = Vec::new();
        for (r, &pc) in piv.iter().enumerate() {
            for c in pc + 1..n {
                if !piv.contains(&c) {
                    free.push((r, c));
                }
            }
        }
        let p = f.p() as usize;
        let total = p.pow(free.len() as u32);
        for mut idx in 0..total {
            let mut m = Matrix::zeros(k, n);
            for (r, &pc) in piv.iter().enumerate() {
                m.set(r, pc, 1);
            }
            for &(r, c) in &free {
                m.set(r, c, (idx % p) as u8);
                idx /= p;
            }
            out.push(Subspace::from_rref(m, piv.to_vec()));
        }
    });
    out
}

fn choose_pivots(
    n: usize,
    k: usize,
    start: usize,
    cur: &mut Vec<usize>,
    emit: &mut dyn FnMut(&[usize]),
) {
    if cur.len() == k {
        emit(cur);
        return;
    }
    for c in start..n {
        if n - c < k - cur.len() {
            break;
        }
        cur.push(c);
        choose_pivots(n, k, c + 1, cur, emit);
        cur.pop();
    }
}

/// Number of `k`-dimensional subspaces of F_q^n (Gaussian binomial at q).
pub fn gaussian_binomial(n: u32, k: u32, q: u64) -> u128 {
    if k > n {
        return 0;
    }
    let q = q as u128;
    let mut num = 1u128;
    let mut den = 1u128;
    for i in 0..k {
        num *= q.pow(n - i) - 1;
        den *= q.pow(i + 1) - 1;
    }
    num / den
}

/// `|GL_n(F_q)|`, or `None` on overflow.
pub fn gl_order(n: u32, q: u64) -> Option<u128> {
    let q = q as u128;
    let qn = q.checked_pow(n)?;
    let mut acc = 1u128;
    for k in 0..n {
        acc = acc.checked_mul(qn - q.pow(k))?;
    }
    Some(acc)
}
