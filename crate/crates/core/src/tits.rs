//! The Tits quadratic form of a triangular bound quiver algebra.
//!
//! `q(v) = Σ v_i² - Σ_{arrows i→j} v_i v_j + Σ_{relations i⇝j} v_i v_j`, with the
//! relation count taken from the algebra's generator list.

use std::collections::HashSet;

use serde::{Deserialize, Serialize};

use crate::algebra::BoundQuiverAlgebra;
use crate::error::{Error, Result};

/// Default coordinate bound for the weak-positivity search.
pub const POSITIVITY_BOUND: u32 = 6;
/// Largest vertex count accepted by the weak-positivity search.
pub const DEFAULT_SEARCH_CAP: usize = 16;
/// Node budget for the non-negativity search.
pub const DEFAULT_NODE_BUDGET: u64 = 200_000_000;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TitsForm {
    n: usize,
    /// Twice the symmetric Gram matrix; diagonal entries are 2.
    gram2: Vec<Vec<i64>>,
    /// `r[i][j]`: relation generators from `i` to `j`.
    relation_counts: Vec<Vec<usize>>,
    arrow_counts: Vec<Vec<usize>>,
    /// False when the relation set came from user input and may not be minimal.
    minimality_trusted: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum PositivityStatus {
    WeaklyPositive,
    NotWeaklyPositive,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PositivityVerdict {
    pub status: PositivityStatus,
    /// A nonzero non-negative vector with `q(v) <= 0`, present iff not weakly positive.
    pub certificate: Option<Vec<i64>>,
    pub value: Option<i64>,
    pub bound: u32,
    pub minimality_trusted: bool,
}

impl PositivityVerdict {
    pub fn is_weakly_positive(&self) -> bool {
        self.status == PositivityStatus::WeaklyPositive
    }
}

pub fn tits_form(a: &BoundQuiverAlgebra) -> TitsForm {
    let n = a.n();
    let q = a.quiver();
    let mut relation_counts = vec![vec![0usize; n]; n];
    for r in a.relations() {
        relation_counts[r.source(q)][r.target(q)] += 1;
    }
    let mut arrow_counts = vec![vec![0usize; n]; n];
    for ar in q.arrows() {
        arrow_counts[ar.src][ar.dst] += 1;
    }
    let mut gram2 = vec![vec![0i64; n]; n];
    for i in 0..n {
        for j in 0..n {
            gram2[i][j] = if i == j {
                2
            } else {
                (relation_counts[i][j] + relation_counts[j][i]) as i64
                    - (arrow_counts[i][j] + arrow_counts[j][i]) as i64
            };
        }
    }
    TitsForm { n, gram2, relation_counts, arrow_counts, minimality_trusted: a.relations_minimal() }
}

impl TitsForm {
    /// Builds a form directly from a doubled Gram matrix.
    pub fn from_doubled_gram(gram2: Vec<Vec<i64>>) -> Result<Self> {
        let n = gram2.len();
        for (i, row) in gram2.iter().enumerate() {
            if row.len() != n {
                return Err(Error::LengthMismatch { expected: n, got: row.len() });
            }
            if row[i] != 2 {
                return Err(Error::InvalidParameter("not a unit form".into()));
            }
            for j in 0..n {
                if gram2[j][i] != row[j] {
                    return Err(Error::InvalidParameter("gram matrix is not symmetric".into()));
                }
            }
        }
        Ok(TitsForm {
            n,
            gram2,
            relation_counts: vec![vec![0; n]; n],
            arrow_counts: vec![vec![0; n]; n],
            minimality_trusted: true,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn doubled_gram(&self) -> &[Vec<i64>] {
        &self.gram2
    }

    pub fn relation_count(&self, i: usize, j: usize) -> usize {
        self.relation_counts[i][j]
    }

    pub fn arrow_count(&self, i: usize, j: usize) -> usize {
        self.arrow_counts[i][j]
    }

    pub fn minimality_trusted(&self) -> bool {
        self.minimality_trusted
    }

    /// Exact value of the form.
    pub fn evaluate(&self, v: &[i64]) -> Result<i64> {
        if v.len() != self.n {
            return Err(Error::LengthMismatch { expected: self.n, got: v.len() });
        }
        Ok(self.bilinear(v, v) / 2)
    }

    /// `B(x, y) = x·(2G)·y`, so that `B(x, x) = 2 q(x)`.
    pub fn bilinear(&self, x: &[i64], y: &[i64]) -> i64 {
        let mut s = 0;
        for i in 0..self.n {
            if x[i] == 0 {
                continue;
            }
            for j in 0..self.n {
                s += x[i] * self.gram2[i][j] * y[j];
            }
        }
        s
    }

    /// Restriction to a subset of coordinates.
    pub fn restrict(&self, idx: &[usize]) -> TitsForm {
        let pick = |m: &Vec<Vec<usize>>| idx.iter().map(|&i| idx.iter().map(|&j| m[i][j]).collect()).collect();
        TitsForm {
            n: idx.len(),
            gram2: idx.iter().map(|&i| idx.iter().map(|&j| self.gram2[i][j]).collect()).collect(),
            relation_counts: pick(&self.relation_counts),
            arrow_counts: pick(&self.arrow_counts),
            minimality_trusted: self.minimality_trusted,
        }
    }

    /// Weak positivity with the default bound and size cap.
    pub fn is_weakly_positive(&self) -> Result<PositivityVerdict> {
        self.weak_positivity(POSITIVITY_BOUND, DEFAULT_SEARCH_CAP)
    }

    /// Decides whether `q(v) > 0` for every nonzero `v ∈ {0..bound}ⁿ`.
    ///
    /// Grows the set of positive roots (`q = 1`) from the unit vectors one
    /// coordinate step at a time, in order of total degree. A componentwise
    /// minimal vector `v` with `q(v) <= 0` always has some `i` with
    /// `B(v, e_i) <= 0`, forcing `q(v - e_i) = 1`, and every root of smaller
    /// degree than the least such `v` descends to a unit vector through roots.
    /// So the first degree at which a step lands on `q <= 0` is the least
    /// degree of any violation in the box; the certificate is the
    /// lexicographically smallest violation of that degree.
    pub fn weak_positivity(&self, bound: u32, cap: usize) -> Result<PositivityVerdict> {
        if self.n > cap {
            return Err(Error::SearchTooLarge(format!("{} coordinates exceed the cap of {cap}", self.n)));
        }
        let b = bound as i64;
        let n = self.n;
        let mut level: Vec<Vec<i64>> = (0..n)
            .map(|i| {
                let mut e = vec![0; n];
                e[i] = 1;
                e
            })
            .collect();
        let mut seen: HashSet<Vec<i64>> = level.iter().cloned().collect();
        while !level.is_empty() {
            let mut next = Vec::new();
            let mut witnesses: Vec<(Vec<i64>, i64)> = Vec::new();
            for x in &level {
                let dx: Vec<i64> = (0..n).map(|i| (0..n).map(|j| self.gram2[i][j] * x[j]).sum()).collect();
                for i in 0..n {
                    if x[i] >= b {
                        continue;
                    }
                    let val = 2 + dx[i];
                    if val > 1 {
                        continue;
                    }
                    let mut y = x.clone();
                    y[i] += 1;
                    if val <= 0 {
                        witnesses.push((y, val));
                    } else if seen.insert(y.clone()) {
                        next.push(y);
                    }
                }
            }
            if let Some((w, val)) = witnesses.into_iter().min() {
                debug_assert_eq!(self.evaluate(&w).unwrap(), val);
                assert!(val <= 0 && w.iter().all(|&c| c >= 0));
                return Ok(PositivityVerdict {
                    status: PositivityStatus::NotWeaklyPositive,
                    certificate: Some(w),
                    value: Some(val),
                    bound,
                    minimality_trusted: self.minimality_trusted,
                });
            }
            next.sort();
            level = next;
        }
        Ok(PositivityVerdict {
            status: PositivityStatus::WeaklyPositive,
            certificate: None,
            value: None,
            bound,
            minimality_trusted: self.minimality_trusted,
        })
    }

    /// Looks for `v ∈ {0..bound}ⁿ` with `q(v) < 0`.
    ///
    /// A semi-decision: `None` only says the box holds no such vector.
    pub fn search_nonnegativity_violation(&self, bound: u32) -> Result<Option<Vec<i64>>> {
        self.search_nonnegativity_violation_with_budget(bound, DEFAULT_NODE_BUDGET)
    }

    /// Suffix-first depth-first search. For `k = n-1` down to `0` it scans the
    /// vectors supported on coordinates `k..n` with `v_k >= 1` in
    /// lexicographic order. By then every shorter suffix is known to be
    /// non-negative on the box, which gives the lower bound
    /// `q(a, y) >= q(a) + bound · Σ_j min(0, ℓ_j(a))` for a partial
    /// assignment `a` and any completion `y`, where `ℓ_j(a) = B(a, e_j)`.
    pub fn search_nonnegativity_violation_with_budget(&self, bound: u32, budget: u64) -> Result<Option<Vec<i64>>> {
        if bound == 0 {
            return Err(Error::InvalidParameter("bound must be at least 1".into()));
        }
        let n = self.n;
        if n == 0 {
            return Ok(None);
        }
        // A box free of q <= 0 vectors is free of q < 0 vectors.
        if bound <= 64 && n <= 64 {
            if let Ok(v) = self.weak_positivity(bound, 64) {
                if v.is_weakly_positive() {
                    return Ok(None);
                }
            }
        }
        let b = bound as i64;
        let mut nodes = 0u64;
        let mut v = vec![0i64; n];
        for k in (0..n).rev() {
            let mut lin = vec![0i64; n];
            if let Some(w) = self.dfs(k, true, b, 0, &mut lin, &mut v, &mut nodes, budget)? {
                debug_assert!(self.evaluate(&w).unwrap() < 0);
                return Ok(Some(w));
            }
        }
        Ok(None)
    }

    #[allow(clippy::too_many_arguments)]
    fn dfs(
        &self,
        pos: usize,
        first: bool,
        b: i64,
        value: i64,
        lin: &mut Vec<i64>,
        v: &mut Vec<i64>,
        nodes: &mut u64,
        budget: u64,
    ) -> Result<Option<Vec<i64>>> {
        let n = self.n;
        if pos == n {
            return Ok(None);
        }
        let lo = if first { 1 } else { 0 };
        for x in lo..=b {
            *nodes += 1;
            if *nodes > budget {
                return Err(Error::SearchTooLarge(format!("node budget {budget} exhausted")));
            }
            // q(prefix with v_pos = x) = value + x·lin[pos] + x².
            let val = value + x * lin[pos] + x * x;
            v[pos] = x;
            if val < 0 {
                let mut w = v.clone();
                w[pos + 1..].iter_mut().for_each(|c| *c = 0);
                v[pos] = 0;
                return Ok(Some(w));
            }
            if x > 0 {
                for j in pos + 1..n {
                    lin[j] += x * self.gram2[pos][j];
                }
            }
            let slack: i64 = (pos + 1..n).map(|j| lin[j].min(0) * b).sum();
            let result = if val + slack < 0 { self.dfs(pos + 1, false, b, val, lin, v, nodes, budget)? } else { None };
            if x > 0 {
                for j in pos + 1..n {
                    lin[j] -= x * self.gram2[pos][j];
                }
            }
            if result.is_some() {
                v[pos] = 0;
                return Ok(result);
            }
        }
        v[pos] = 0;
        Ok(None)
    }

    /// Null vectors (`q = 0`) in `{0..bound}ⁿ` that are one step away from a
    /// positive root, in order of total degree.
    pub fn null_vectors(&self, bound: u32) -> Vec<Vec<i64>> {
        let n = self.n;
        let b = bound as i64;
        let mut level: Vec<Vec<i64>> = (0..n)
            .map(|i| {
                let mut e = vec![0; n];
                e[i] = 1;
                e
            })
            .collect();
        let mut seen: HashSet<Vec<i64>> = level.iter().cloned().collect();
        let mut nulls = Vec::new();
        while !level.is_empty() {
            let mut next = Vec::new();
            for x in &level {
                let dx = self.gram_times(x);
                for i in (0..n).filter(|&i| x[i] < b) {
                    let val = 2 + dx[i];
                    if val != 0 && val != 1 {
                        continue;
                    }
                    let mut y = x.clone();
                    y[i] += 1;
                    if seen.insert(y.clone()) {
                        if val == 0 {
                            nulls.push(y);
                        } else {
                            next.push(y);
                        }
                    }
                }
            }
            next.sort();
            level = next;
        }
        nulls
    }

    /// Looks for `q(v) < 0` of the form `k·h + e_x`, with `h` a null vector
    /// in `{0..bound}ⁿ` and `B(h, e_x) < 0`. Then `q(k·h + e_x) = 1 + k·B(h, e_x)`,
    /// so `k = 2` always works. Reaches witnesses with coordinates up to
    /// `2·bound + 1` that a box search of that size could not afford.
    pub fn search_violation_by_null_extension(&self, bound: u32) -> Option<Vec<i64>> {
        for h in self.null_vectors(bound) {
            let dh = self.gram_times(&h);
            if let Some(x) = (0..self.n).find(|&x| dh[x] < 0) {
                let mut v: Vec<i64> = h.iter().map(|c| 2 * c).collect();
                v[x] += 1;
                debug_assert!(self.evaluate(&v).unwrap() < 0);
                return Some(v);
            }
        }
        None
    }

    /// Box search first, then null extensions over the same box.
    pub fn find_negative_vector(&self, bound: u32, budget: u64) -> Result<Option<Vec<i64>>> {
        if let Some(v) = self.search_nonnegativity_violation_with_budget(bound, budget)? {
            return Ok(Some(v));
        }
        Ok(self.search_violation_by_null_extension(bound))
    }

    fn gram_times(&self, x: &[i64]) -> Vec<i64> {
        self.gram2.iter().map(|row| row.iter().zip(x).map(|(g, c)| g * c).sum()).collect()
    }
}
