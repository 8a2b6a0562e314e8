//! Univariate polynomials over `F_p`, coefficients stored low to high.
//!
//! Only what the Fitting-style splitting needs: gcd, squarefree part,
//! distinct- and equal-degree factor separation.

use rand::Rng;

use crate::field::{Fp, Mat};

pub type Poly = Vec<u32>;

pub fn trim(a: &mut Poly) {
    while a.last() == Some(&0) {
        a.pop();
    }
}

pub fn degree(a: &Poly) -> Option<usize> {
    a.iter().rposition(|&c| c != 0)
}

pub fn is_zero(a: &Poly) -> bool {
    degree(a).is_none()
}

pub fn monic(a: &Poly, f: &Fp) -> Poly {
    let mut a = a.clone();
    trim(&mut a);
    if let Some(&lc) = a.last() {
        let inv = f.inv(lc);
        a.iter_mut().for_each(|c| *c = f.mul(*c, inv));
    }
    a
}

pub fn sub(a: &Poly, b: &Poly, f: &Fp) -> Poly {
    let n = a.len().max(b.len());
    let mut r: Poly = (0..n).map(|i| f.sub(*a.get(i).unwrap_or(&0), *b.get(i).unwrap_or(&0))).collect();
    trim(&mut r);
    r
}

pub fn mul(a: &Poly, b: &Poly, f: &Fp) -> Poly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut r = vec![0u32; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            r[i + j] = f.add(r[i + j], f.mul(x, y));
        }
    }
    trim(&mut r);
    r
}

/// Quotient and remainder; `b` must be nonzero.
pub fn divrem(a: &Poly, b: &Poly, f: &Fp) -> (Poly, Poly) {
    let db = degree(b).expect("division by zero polynomial");
    let mut r = a.clone();
    trim(&mut r);
    let inv = f.inv(b[db]);
    let mut q = vec![0u32; r.len().saturating_sub(db).max(1)];
    while let Some(dr) = degree(&r) {
        if dr < db {
            break;
        }
        let c = f.mul(r[dr], inv);
        let shift = dr - db;
        q[shift] = c;
        for i in 0..=db {
            r[shift + i] = f.sub(r[shift + i], f.mul(c, b[i]));
        }
        trim(&mut r);
    }
    trim(&mut q);
    (q, r)
}

pub fn rem(a: &Poly, b: &Poly, f: &Fp) -> Poly {
    divrem(a, b, f).1
}

/// Monic gcd.
pub fn gcd(a: &Poly, b: &Poly, f: &Fp) -> Poly {
    let (mut x, mut y) = (a.clone(), b.clone());
    trim(&mut x);
    trim(&mut y);
    while !is_zero(&y) {
        let r = rem(&x, &y, f);
        x = y;
        y = r;
    }
    monic(&x, f)
}

pub fn derivative(a: &Poly, f: &Fp) -> Poly {
    let mut r: Poly = a.iter().enumerate().skip(1).map(|(i, &c)| f.mul(c, (i as u64 % f.p() as u64) as u32)).collect();
    trim(&mut r);
    r
}

pub fn mulmod(a: &Poly, b: &Poly, m: &Poly, f: &Fp) -> Poly {
    rem(&mul(a, b, f), m, f)
}

pub fn powmod(a: &Poly, mut e: u128, m: &Poly, f: &Fp) -> Poly {
    let mut base = rem(a, m, f);
    let mut r = rem(&vec![1], m, f);
    while e > 0 {
        if e & 1 == 1 {
            r = mulmod(&r, &base, m, f);
        }
        e >>= 1;
        if e > 0 {
            base = mulmod(&base, &base, m, f);
        }
    }
    r
}

/// Squarefree part of a monic polynomial whose degree is below `p`.
pub fn squarefree(a: &Poly, f: &Fp) -> Poly {
    let d = derivative(a, f);
    if is_zero(&d) {
        return monic(a, f);
    }
    let g = gcd(a, &d, f);
    monic(&divrem(a, &g, f).0, f)
}

/// Finds a proper monic divisor of the squarefree polynomial `s`, or `None`
/// when `s` is irreducible.
pub fn proper_factor<R: Rng>(s: &Poly, f: &Fp, rng: &mut R) -> Option<Poly> {
    let n = degree(s)?;
    if n <= 1 {
        return None;
    }
    let x: Poly = vec![0, 1];
    let mut xp = x.clone();
    for k in 1..=n / 2 {
        xp = powmod(&xp, f.p() as u128, s, f);
        let g = gcd(s, &sub(&xp, &x, f), f);
        let dg = degree(&g).unwrap_or(0);
        if dg == 0 {
            continue;
        }
        if dg < n {
            return Some(g);
        }
        // Every irreducible factor has degree k.
        return equal_degree_split(s, k, f, rng);
    }
    None
}

fn equal_degree_split<R: Rng>(s: &Poly, k: usize, f: &Fp, rng: &mut R) -> Option<Poly> {
    let n = degree(s)?;
    if n == k {
        return None;
    }
    let e = ((f.p() as u128).pow(k as u32) - 1) / 2;
    for _ in 0..64 {
        let r: Poly = (0..n).map(|_| rng.gen_range(0..f.p())).collect();
        let mut r = r;
        trim(&mut r);
        if degree(&r).unwrap_or(0) == 0 {
            continue;
        }
        let g0 = gcd(s, &r, f);
        let d0 = degree(&g0).unwrap_or(0);
        if d0 > 0 && d0 < n {
            return Some(g0);
        }
        let t = sub(&powmod(&r, e, s, f), &vec![1], f);
        let g = gcd(s, &t, f);
        let dg = degree(&g).unwrap_or(0);
        if dg > 0 && dg < n {
            return Some(g);
        }
    }
    None
}

/// Evaluates the polynomial at a square matrix.
pub fn eval_mat(a: &Poly, m: &Mat, f: &Fp) -> Mat {
    let n = m.rows();
    let mut acc = Mat::zeros(n, n);
    for &c in a.iter().rev() {
        acc = acc.mul(m, f);
        for i in 0..n {
            acc[(i, i)] = f.add(acc[(i, i)], c);
        }
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn f() -> Fp {
        Fp::new(101).unwrap()
    }

    fn from_roots(roots: &[u32], f: &Fp) -> Poly {
        roots.iter().fold(vec![1], |acc, &r| mul(&acc, &vec![f.neg(r), 1], f))
    }

    #[test]
    fn gcd_of_products() {
        let f = f();
        let a = from_roots(&[1, 2, 3], &f);
        let b = from_roots(&[2, 3, 7], &f);
        assert_eq!(gcd(&a, &b, &f), from_roots(&[2, 3], &f));
    }

    #[test]
    fn squarefree_removes_repeats() {
        let f = f();
        let a = from_roots(&[4, 4, 4, 9], &f);
        assert_eq!(squarefree(&a, &f), from_roots(&[4, 9], &f));
    }

    #[test]
    fn splits_products_of_linears() {
        let f = f();
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        let s = from_roots(&[5, 17, 40], &f);
        let g = proper_factor(&s, &f, &mut rng).unwrap();
        let d = degree(&g).unwrap();
        assert!(d > 0 && d < 3);
        assert!(is_zero(&rem(&s, &g, &f)));
    }

    #[test]
    fn irreducible_is_not_split() {
        let f = f();
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        // x^2 + 2 is irreducible mod 101 since -2 is a non-residue.
        assert_eq!(f.pow(f.neg(2), 50), 100);
        assert!(proper_factor(&vec![2, 0, 1], &f, &mut rng).is_none());
        // (x^2 + 2)(x - 3) splits off the linear part.
        let s = mul(&vec![2, 0, 1], &vec![f.neg(3), 1], &f);
        let g = proper_factor(&s, &f, &mut rng).unwrap();
        assert!(is_zero(&rem(&s, &g, &f)));
    }

    #[test]
    fn eval_matches_charpoly() {
        let f = f();
        let m = Mat::from_rows(3, 3, vec![1, 2, 3, 0, 4, 5, 6, 0, 7]);
        assert!(eval_mat(&m.charpoly(&f), &m, &f).is_zero());
    }
}
