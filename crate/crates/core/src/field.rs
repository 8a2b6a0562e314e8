//! Dense linear algebra over a prime field `F_p`.
//!
//! Entries are stored reduced in `0..p` as `u32`; products are formed in
//! `u64`, so any prime below `2^32` is admissible.

use serde::{Deserialize, Serialize};
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};

/// The prime field `F_p`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Fp {
    p: u32,
}

impl Fp {
    /// Returns `None` unless `p` is an odd prime.
    pub fn new(p: u32) -> Option<Self> {
        if p < 3 || !is_prime(p as u64) {
            return None;
        }
        Some(Fp { p })
    }

    #[inline]
    pub fn p(&self) -> u32 {
        self.p
    }

    #[inline]
    pub fn add(&self, a: u32, b: u32) -> u32 {
        let s = a as u64 + b as u64;
        (s % self.p as u64) as u32
    }

    #[inline]
    pub fn sub(&self, a: u32, b: u32) -> u32 {
        if a >= b {
            a - b
        } else {
            (a as u64 + self.p as u64 - b as u64) as u32
        }
    }

    #[inline]
    pub fn neg(&self, a: u32) -> u32 {
        if a == 0 {
            0
        } else {
            self.p - a
        }
    }

    #[inline]
    pub fn mul(&self, a: u32, b: u32) -> u32 {
        ((a as u64 * b as u64) % self.p as u64) as u32
    }

    pub fn pow(&self, mut a: u32, mut e: u64) -> u32 {
        let mut r = 1u32;
        while e > 0 {
            if e & 1 == 1 {
                r = self.mul(r, a);
            }
            a = self.mul(a, a);
            e >>= 1;
        }
        r
    }

    /// Inverse of a nonzero element.
    pub fn inv(&self, a: u32) -> u32 {
        debug_assert!(a != 0, "inverse of zero");
        self.pow(a, self.p as u64 - 2)
    }

    pub fn from_i64(&self, a: i64) -> u32 {
        a.rem_euclid(self.p as i64) as u32
    }

    /// Symmetric lift to `(-p/2, p/2]`.
    pub fn to_i64(&self, a: u32) -> i64 {
        if a > self.p / 2 {
            a as i64 - self.p as i64
        } else {
            a as i64
        }
    }

    /// Reduces an exact rational; `None` if `p` divides the denominator.
    pub fn from_rational(&self, q: &BigRational) -> Option<u32> {
        let p = BigInt::from(self.p);
        let num = (q.numer() % &p + &p) % &p;
        let den = (q.denom() % &p + &p) % &p;
        if den.is_zero() {
            return None;
        }
        let num = num.abs().to_u32()?;
        let den = den.abs().to_u32()?;
        Some(self.mul(num, self.inv(den)))
    }
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// Row-major dense matrix over `F_p`. Vectors are columns.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Mat {
    rows: usize,
    cols: usize,
    data: Vec<u32>,
}

impl fmt::Debug for Mat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Mat{}x{}[", self.rows, self.cols)?;
        for r in 0..self.rows {
            if r > 0 {
                write!(f, "; ")?;
            }
            for c in 0..self.cols {
                if c > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{}", self[(r, c)])?;
            }
        }
        write!(f, "]")
    }
}

impl std::ops::Index<(usize, usize)> for Mat {
    type Output = u32;
    #[inline]
    fn index(&self, (r, c): (usize, usize)) -> &u32 {
        &self.data[r * self.cols + c]
    }
}

impl std::ops::IndexMut<(usize, usize)> for Mat {
    #[inline]
    fn index_mut(&mut self, (r, c): (usize, usize)) -> &mut u32 {
        &mut self.data[r * self.cols + c]
    }
}

/// Result of Gaussian elimination.
#[derive(Clone, Debug)]
pub struct Echelon {
    /// Reduced row echelon form; only the first `pivots.len()` rows are nonzero.
    pub rref: Mat,
    pub pivots: Vec<usize>,
}

impl Mat {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Mat { rows, cols, data: vec![0; rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Mat::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = 1;
        }
        m
    }

    pub fn from_rows(rows: usize, cols: usize, data: Vec<u32>) -> Self {
        assert_eq!(data.len(), rows * cols, "matrix data length mismatch");
        Mat { rows, cols, data }
    }

    /// Builds a matrix whose columns are the given vectors, each of length `rows`.
    pub fn from_columns(rows: usize, columns: &[Vec<u32>]) -> Self {
        let mut m = Mat::zeros(rows, columns.len());
        for (c, col) in columns.iter().enumerate() {
            debug_assert_eq!(col.len(), rows);
            for (r, &x) in col.iter().enumerate() {
                m[(r, c)] = x;
            }
        }
        m
    }

    #[inline]
    pub fn rows(&self) -> usize {
        self.rows
    }

    #[inline]
    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn data(&self) -> &[u32] {
        &self.data
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&x| x == 0)
    }

    pub fn column(&self, c: usize) -> Vec<u32> {
        (0..self.rows).map(|r| self[(r, c)]).collect()
    }

    pub fn row(&self, r: usize) -> &[u32] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn columns(&self) -> Vec<Vec<u32>> {
        (0..self.cols).map(|c| self.column(c)).collect()
    }

    pub fn select_columns(&self, idx: &[usize]) -> Mat {
        let mut m = Mat::zeros(self.rows, idx.len());
        for (j, &c) in idx.iter().enumerate() {
            for r in 0..self.rows {
                m[(r, j)] = self[(r, c)];
            }
        }
        m
    }

    pub fn select_rows(&self, idx: &[usize]) -> Mat {
        let mut data = Vec::with_capacity(idx.len() * self.cols);
        for &r in idx {
            data.extend_from_slice(self.row(r));
        }
        Mat { rows: idx.len(), cols: self.cols, data }
    }

    pub fn transpose(&self) -> Mat {
        let mut m = Mat::zeros(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                m[(c, r)] = self[(r, c)];
            }
        }
        m
    }

    pub fn mul(&self, other: &Mat, f: &Fp) -> Mat {
        assert_eq!(self.cols, other.rows, "dimension mismatch in product");
        let p = f.p() as u64;
        let mut out = Mat::zeros(self.rows, other.cols);
        let mut acc = vec![0u64; other.cols];
        for r in 0..self.rows {
            acc.iter_mut().for_each(|a| *a = 0);
            for k in 0..self.cols {
                let a = self[(r, k)] as u64;
                if a == 0 {
                    continue;
                }
                let orow = other.row(k);
                for (c, &b) in orow.iter().enumerate() {
                    acc[c] = (acc[c] + a * b as u64) % p;
                }
            }
            for c in 0..other.cols {
                out[(r, c)] = acc[c] as u32;
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[u32], f: &Fp) -> Vec<u32> {
        assert_eq!(self.cols, v.len());
        let p = f.p() as u64;
        (0..self.rows)
            .map(|r| {
                let mut acc = 0u64;
                for (c, &x) in self.row(r).iter().enumerate() {
                    acc = (acc + x as u64 * v[c] as u64) % p;
                }
                acc as u32
            })
            .collect()
    }

    pub fn add(&self, other: &Mat, f: &Fp) -> Mat {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let data = self.data.iter().zip(&other.data).map(|(&a, &b)| f.add(a, b)).collect();
        Mat { rows: self.rows, cols: self.cols, data }
    }

    pub fn sub(&self, other: &Mat, f: &Fp) -> Mat {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let data = self.data.iter().zip(&other.data).map(|(&a, &b)| f.sub(a, b)).collect();
        Mat { rows: self.rows, cols: self.cols, data }
    }

    pub fn scale(&self, s: u32, f: &Fp) -> Mat {
        let data = self.data.iter().map(|&a| f.mul(a, s)).collect();
        Mat { rows: self.rows, cols: self.cols, data }
    }

    /// `self + s * other`.
    pub fn add_scaled(&mut self, other: &Mat, s: u32, f: &Fp) {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        if s == 0 {
            return;
        }
        for (a, &b) in self.data.iter_mut().zip(&other.data) {
            *a = f.add(*a, f.mul(b, s));
        }
    }

    /// Columns of `self` followed by the columns of `other`.
    pub fn hstack(&self, other: &Mat) -> Mat {
        assert_eq!(self.rows, other.rows);
        let mut m = Mat::zeros(self.rows, self.cols + other.cols);
        for r in 0..self.rows {
            m.data[r * m.cols..r * m.cols + self.cols].copy_from_slice(self.row(r));
            m.data[r * m.cols + self.cols..(r + 1) * m.cols].copy_from_slice(other.row(r));
        }
        m
    }

    pub fn vstack(&self, other: &Mat) -> Mat {
        assert_eq!(self.cols, other.cols);
        let mut data = self.data.clone();
        data.extend_from_slice(&other.data);
        Mat { rows: self.rows + other.rows, cols: self.cols, data }
    }

    /// Block diagonal matrix.
    pub fn block_diag(blocks: &[&Mat]) -> Mat {
        let rows = blocks.iter().map(|b| b.rows).sum();
        let cols = blocks.iter().map(|b| b.cols).sum();
        let mut m = Mat::zeros(rows, cols);
        let (mut r0, mut c0) = (0, 0);
        for b in blocks {
            for r in 0..b.rows {
                for c in 0..b.cols {
                    m[(r0 + r, c0 + c)] = b[(r, c)];
                }
            }
            r0 += b.rows;
            c0 += b.cols;
        }
        m
    }

    pub fn echelon(&self, f: &Fp) -> Echelon {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..m.cols {
            if row == m.rows {
                break;
            }
            let Some(piv) = (row..m.rows).find(|&r| m[(r, col)] != 0) else {
                continue;
            };
            if piv != row {
                for c in 0..m.cols {
                    m.data.swap(piv * m.cols + c, row * m.cols + c);
                }
            }
            let inv = f.inv(m[(row, col)]);
            for c in col..m.cols {
                m[(row, c)] = f.mul(m[(row, c)], inv);
            }
            for r in 0..m.rows {
                if r == row {
                    continue;
                }
                let factor = m[(r, col)];
                if factor == 0 {
                    continue;
                }
                for c in col..m.cols {
                    let v = f.mul(factor, m[(row, c)]);
                    m[(r, c)] = f.sub(m[(r, c)], v);
                }
            }
            pivots.push(col);
            row += 1;
        }
        Echelon { rref: m, pivots }
    }

    pub fn rank(&self, f: &Fp) -> usize {
        if self.rows == 0 || self.cols == 0 {
            return 0;
        }
        self.echelon(f).pivots.len()
    }

    /// Basis of the right kernel, as the columns of the returned matrix.
    pub fn kernel(&self, f: &Fp) -> Mat {
        let ech = self.echelon(f);
        let n = self.cols;
        let mut is_pivot = vec![false; n];
        for &p in &ech.pivots {
            is_pivot[p] = true;
        }
        let free: Vec<usize> = (0..n).filter(|&c| !is_pivot[c]).collect();
        let mut k = Mat::zeros(n, free.len());
        for (j, &fc) in free.iter().enumerate() {
            k[(fc, j)] = 1;
            for (i, &pc) in ech.pivots.iter().enumerate() {
                k[(pc, j)] = f.neg(ech.rref[(i, fc)]);
            }
        }
        k
    }

    /// A basis of the column space, chosen among the columns of `self`.
    pub fn column_basis(&self, f: &Fp) -> Mat {
        let ech = self.echelon(f);
        self.select_columns(&ech.pivots)
    }

    /// Unit vectors completing the column space of `self` to the full space.
    /// Returns the indices of the chosen unit vectors.
    pub fn complement_units(&self, f: &Fp) -> Vec<usize> {
        let n = self.rows;
        let aug = self.hstack(&Mat::identity(n));
        let ech = aug.echelon(f);
        ech.pivots.iter().filter(|&&c| c >= self.cols).map(|&c| c - self.cols).collect()
    }

    /// Solves `self * X = rhs`; `None` if some column of `rhs` is outside the column space.
    pub fn solve(&self, rhs: &Mat, f: &Fp) -> Option<Mat> {
        assert_eq!(self.rows, rhs.rows);
        let aug = self.hstack(rhs);
        let ech = aug.echelon(f);
        if ech.pivots.iter().any(|&c| c >= self.cols) {
            return None;
        }
        let mut x = Mat::zeros(self.cols, rhs.cols);
        for (i, &pc) in ech.pivots.iter().enumerate() {
            for c in 0..rhs.cols {
                x[(pc, c)] = ech.rref[(i, self.cols + c)];
            }
        }
        Some(x)
    }

    pub fn inverse(&self, f: &Fp) -> Option<Mat> {
        if self.rows != self.cols {
            return None;
        }
        let n = self.rows;
        if n == 0 {
            return Some(Mat::zeros(0, 0));
        }
        let ech = self.hstack(&Mat::identity(n)).echelon(f);
        if ech.pivots.len() < n || ech.pivots[n - 1] != n - 1 {
            return None;
        }
        let mut inv = Mat::zeros(n, n);
        for r in 0..n {
            for c in 0..n {
                inv[(r, c)] = ech.rref[(r, n + c)];
            }
        }
        Some(inv)
    }

    pub fn is_invertible(&self, f: &Fp) -> bool {
        self.rows == self.cols && self.rank(f) == self.rows
    }

    pub fn trace(&self, f: &Fp) -> u32 {
        (0..self.rows.min(self.cols)).fold(0, |acc, i| f.add(acc, self[(i, i)]))
    }

    pub fn pow(&self, mut e: u64, f: &Fp) -> Mat {
        let mut base = self.clone();
        let mut r = Mat::identity(self.rows);
        while e > 0 {
            if e & 1 == 1 {
                r = r.mul(&base, f);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base, f);
            }
        }
        r
    }

    /// Characteristic polynomial `det(xI - A)`, coefficients low to high, monic.
    pub fn charpoly(&self, f: &Fp) -> Vec<u32> {
        assert_eq!(self.rows, self.cols);
        let n = self.rows;
        let mut h = self.clone();
        // Reduce to upper Hessenberg form by similarity transforms.
        for k in 0..n.saturating_sub(2) {
            let Some(piv) = (k + 1..n).find(|&r| h[(r, k)] != 0) else {
                continue;
            };
            if piv != k + 1 {
                for c in 0..n {
                    h.data.swap(piv * n + c, (k + 1) * n + c);
                }
                for r in 0..n {
                    h.data.swap(r * n + piv, r * n + k + 1);
                }
            }
            let inv = f.inv(h[(k + 1, k)]);
            for r in k + 2..n {
                let t = f.mul(h[(r, k)], inv);
                if t == 0 {
                    continue;
                }
                for c in 0..n {
                    let v = f.mul(t, h[(k + 1, c)]);
                    h[(r, c)] = f.sub(h[(r, c)], v);
                }
                for rr in 0..n {
                    let v = f.mul(t, h[(rr, r)]);
                    h[(rr, k + 1)] = f.add(h[(rr, k + 1)], v);
                }
            }
        }
        // Recurrence on leading principal minors of xI - H.
        let mut polys: Vec<Vec<u32>> = vec![vec![1]];
        for m in 1..=n {
            let i = m - 1;
            // (x - h_ii) * p_{m-1}
            let prev = &polys[m - 1];
            let mut next = vec![0u32; m + 1];
            for (d, &c) in prev.iter().enumerate() {
                next[d + 1] = f.add(next[d + 1], c);
                next[d] = f.sub(next[d], f.mul(c, h[(i, i)]));
            }
            let mut prod = 1u32;
            for j in (0..i).rev() {
                prod = f.mul(prod, h[(j + 1, j)]);
                let coeff = f.mul(prod, h[(j, i)]);
                if coeff == 0 {
                    continue;
                }
                for (d, &c) in polys[j].iter().enumerate() {
                    next[d] = f.sub(next[d], f.mul(coeff, c));
                }
            }
            polys.push(next);
        }
        polys.pop().unwrap()
    }

    /// Entries as symmetric integers, row-major.
    pub fn to_signed_rows(&self, f: &Fp) -> Vec<Vec<i64>> {
        (0..self.rows).map(|r| self.row(r).iter().map(|&x| f.to_i64(x)).collect()).collect()
    }
}
