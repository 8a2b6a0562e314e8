//! Support-rank tables, closed forms and the recursions between families.

use std::collections::HashMap;
use std::fmt;

use itertools::Itertools;
use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, ToPrimitive};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::families::{named_family, Family};
use crate::rep::RepContext;

use super::hasse::{enumerate_pairs, EnumOptions};

/// `a_s` for `s = 0..=n`: the number of support τ-tilting pairs with `s` summands.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CountsTable {
    counts: Vec<u64>,
}

impl CountsTable {
    pub fn new(counts: Vec<u64>) -> Self {
        CountsTable { counts }
    }

    pub fn values(&self) -> &[u64] {
        &self.counts
    }

    /// `a_s`, zero outside `0..=n`.
    pub fn get(&self, s: usize) -> u64 {
        self.counts.get(s).copied().unwrap_or(0)
    }

    pub fn rank(&self) -> usize {
        self.counts.len() - 1
    }

    pub fn total(&self) -> u64 {
        self.counts.iter().sum()
    }

    /// Table of a disjoint union: pairs are products of pairs of the factors.
    pub fn convolve(&self, other: &CountsTable) -> CountsTable {
        let mut out = vec![0u64; self.counts.len() + other.counts.len() - 1];
        for (i, a) in self.counts.iter().enumerate() {
            for (j, b) in other.counts.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        CountsTable::new(out)
    }

    /// `1 4 10 16 15 | 46`
    pub fn row(&self) -> String {
        format!("{} | {}", self.counts.iter().join(" "), self.total())
    }
}

impl fmt::Display for CountsTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.row())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "form", rename_all = "snake_case")]
pub enum ClosedForm {
    /// `a_s` of the linearly oriented path algebra on `n` vertices.
    LinearA { n: u64, s: u64 },
    /// `a_n(𝔸¹_n)`.
    A1Top { n: u64 },
    /// `a_n(𝐃_n)`.
    DTop { n: u64 },
}

fn factorial(n: u64) -> BigUint {
    (1..=n).fold(BigUint::one(), |acc, k| acc * k)
}

fn binomial(n: u64, k: u64) -> BigUint {
    if k > n {
        return BigUint::from(0u32);
    }
    factorial(n) / (factorial(k) * factorial(n - k))
}

fn exact_div(num: BigUint, den: BigUint) -> Result<BigUint> {
    let (q, r) = num.div_rem(&den);
    if r != BigUint::from(0u32) {
        return Err(Error::InvalidParameter("closed form is not integral".into()));
    }
    Ok(q)
}

/// Exact evaluation of the closed forms.
pub fn closed_form(form: ClosedForm) -> Result<BigUint> {
    match form {
        ClosedForm::LinearA { n, s } => {
            if s > n {
                return Err(Error::InvalidParameter(format!("need s ≤ n, got s={s}, n={n}")));
            }
            exact_div(BigUint::from(n - s + 1) * binomial(n + s, s), BigUint::from(n + 1))
        }
        ClosedForm::A1Top { n } => {
            if n < 2 {
                return Err(Error::InvalidParameter(format!("need n ≥ 2, got {n}")));
            }
            exact_div(BigUint::from(5 * n - 6) * factorial(2 * n - 4), factorial(n - 2) * factorial(n))
        }
        ClosedForm::DTop { n } => {
            if n < 4 {
                return Err(Error::InvalidParameter(format!("need n ≥ 4, got {n}")));
            }
            exact_div(BigUint::from(3 * n - 4) * binomial(2 * n - 2, n - 2), BigUint::from(2 * n - 2))
        }
    }
}

fn small(form: ClosedForm) -> i64 {
    closed_form(form).expect("in domain").to_i64().expect("fits")
}

/// Families that appear in the recursions.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Series {
    LinearA,
    A1,
    D,
    Lambda,
}

impl Series {
    fn family(self, n: usize) -> Option<Family> {
        match self {
            Series::LinearA if n >= 1 => Some(Family::LinearA { n }),
            Series::A1 if n >= 2 => Some(Family::A1 { n }),
            Series::A1 if n == 1 => Some(Family::LinearA { n }),
            Series::D if n >= 4 => Some(Family::D { n }),
            Series::Lambda if n >= 3 => Some(Family::Lambda { n }),
            _ => None,
        }
    }
}

/// Lazily enumerated tables, keyed by family member.
pub struct CountsCache {
    opts: EnumOptions,
    tables: HashMap<(Series, usize), CountsTable>,
}

impl CountsCache {
    pub fn new(opts: EnumOptions) -> Self {
        CountsCache { opts, tables: HashMap::new() }
    }

    pub fn table(&mut self, series: Series, n: usize) -> Result<&CountsTable> {
        if !self.tables.contains_key(&(series, n)) {
            let table = if n == 0 {
                CountsTable::new(vec![1])
            } else {
                let fam = series
                    .family(n)
                    .ok_or_else(|| Error::InvalidParameter(format!("{series:?} is undefined for n={n}")))?;
                let ctx = RepContext::new(named_family(fam)?, self.opts.prime)?;
                enumerate_pairs(ctx, self.opts)?.counts
            };
            self.tables.insert((series, n), table);
        }
        Ok(&self.tables[&(series, n)])
    }

    /// `a_s` of the `n`-th member, as a signed integer.
    pub fn a(&mut self, series: Series, n: usize, s: usize) -> Result<i64> {
        Ok(self.table(series, n)?.get(s) as i64)
    }
}

/// One instance of a recursion: both sides evaluated.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdentityCheck {
    pub identity: String,
    pub n: usize,
    pub s: Option<usize>,
    pub lhs: i64,
    pub rhs: i64,
}

impl IdentityCheck {
    pub fn holds(&self) -> bool {
        self.lhs == self.rhs
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct RecurrenceReport {
    pub checks: Vec<IdentityCheck>,
}

impl RecurrenceReport {
    pub fn all_hold(&self) -> bool {
        self.checks.iter().all(IdentityCheck::holds)
    }

    fn push(&mut self, identity: &str, n: usize, s: Option<usize>, lhs: i64, rhs: i64) {
        self.checks.push(IdentityCheck { identity: identity.to_string(), n, s, lhs, rhs });
    }

    pub fn render(&self) -> String {
        self.checks
            .iter()
            .map(|c| {
                let at = c.s.map(|s| format!(" s={s}")).unwrap_or_default();
                let mark = if c.holds() { "ok" } else { "FAIL" };
                format!("{mark} {} n={}{at}: {} = {}", c.identity, c.n, c.lhs, c.rhs)
            })
            .join("\n")
    }
}

fn catalan(n: usize) -> i64 {
    small(ClosedForm::LinearA { n: n as u64, s: n as u64 })
}

/// Checks every recursion for `series` on members up to `n_max`.
pub fn verify_recurrences(series: Series, n_max: usize, cache: &mut CountsCache) -> Result<RecurrenceReport> {
    use Series::*;
    let mut r = RecurrenceReport::default();
    match series {
        LinearA => {
            for n in 1..=n_max {
                let t = cache.table(LinearA, n)?.clone();
                for s in 0..=n {
                    r.push(
                        "linear A closed form",
                        n,
                        Some(s),
                        t.get(s) as i64,
                        small(ClosedForm::LinearA { n: n as u64, s: s as u64 }),
                    );
                }
                if n >= 2 {
                    r.push("linear A top equals corank one", n, None, t.get(n) as i64, t.get(n - 1) as i64);
                }
            }
        }
        A1 => {
            for n in 3..=n_max {
                let top = cache.a(A1, n, n)?;
                r.push("A1 top closed form", n, Some(n), top, small(ClosedForm::A1Top { n: n as u64 }));
                if n < 4 {
                    continue;
                }
                for s in 1..=n - 2 {
                    let rhs = cache.a(A1, n - 1, s)? + cache.a(A1, n, s - 1)?;
                    r.push("A1 low rank", n, Some(s), cache.a(A1, n, s)?, rhs);
                }
                let mut rhs =
                    cache.a(A1, n - 1, n - 1)? + cache.a(LinearA, n - 1, n - 1)? + cache.a(LinearA, n - 2, n - 2)?;
                for i in 3..n {
                    rhs += cache.a(A1, i - 1, i - 1)? * cache.a(LinearA, n - i, n - i)?;
                }
                r.push("A1 corank one", n, Some(n - 1), cache.a(A1, n, n - 1)?, rhs);
                let rhs = cache.a(LinearA, n - 1, n - 1)? + cache.a(LinearA, n - 2, n - 2)?;
                r.push("A1 top", n, Some(n), top, rhs);
            }
        }
        D => {
            for n in 4..=n_max {
                r.push("D top closed form", n, Some(n), cache.a(D, n, n)?, small(ClosedForm::DTop { n: n as u64 }));
            }
        }
        Lambda => {
            for n in 4..=n_max {
                let a = |c: &mut CountsCache, s: usize| c.a(Lambda, n, s);
                let prev = |c: &mut CountsCache, s: usize| c.a(Lambda, n - 1, s);
                for s in 1..=n - 3 {
                    let rhs = prev(cache, s)? + a(cache, s - 1)?;
                    r.push("Lambda low rank", n, Some(s), a(cache, s)?, rhs);
                }
                let rhs = prev(cache, n - 2)? + a(cache, n - 3)? + cache.a(LinearA, n - 3, n - 3)?;
                r.push("Lambda corank two", n, Some(n - 2), a(cache, n - 2)?, rhs);
                let rhs = prev(cache, n - 2)? + a(cache, n - 3)? + catalan(n - 3);
                r.push("Lambda corank two closed", n, Some(n - 2), a(cache, n - 2)?, rhs);
                if n >= 5 {
                    let mut rhs = prev(cache, n - 1)? + cache.a(D, n - 1, n - 1)? + 2 * cache.a(A1, n - 1, n - 1)?;
                    let mut closed = prev(cache, n - 1)?
                        + small(ClosedForm::DTop { n: n as u64 - 1 })
                        + 2 * small(ClosedForm::A1Top { n: n as u64 - 1 });
                    for i in 4..n {
                        let lower = cache.a(Lambda, i - 1, i - 1)?;
                        rhs += lower * cache.a(LinearA, n - i, n - i)?;
                        closed += lower * catalan(n - i);
                    }
                    r.push("Lambda corank one", n, Some(n - 1), a(cache, n - 1)?, rhs);
                    r.push("Lambda corank one closed", n, Some(n - 1), a(cache, n - 1)?, closed);
                }
                let rhs = a(cache, n - 1)? - cache.a(LinearA, n - 3, n - 3)?;
                r.push("Lambda top", n, Some(n), a(cache, n)?, rhs);
                r.push("Lambda top closed", n, Some(n), a(cache, n)?, a(cache, n - 1)? - catalan(n - 3));
            }
        }
    }
    Ok(r)
}

/// Every τ-tilting module over the linear path algebra on `n` vertices has
/// `P_1` as a summand, and `T ↦ T/P_1` is a bijection onto the pairs of
/// support rank `n - 1`.
pub fn p1_summand_property(n: usize, opts: EnumOptions) -> Result<bool> {
    if n == 0 {
        return Err(Error::InvalidParameter("n must be positive".into()));
    }
    let ctx = RepContext::new(named_family(Family::LinearA { n })?, opts.prime)?;
    let e = enumerate_pairs(ctx, opts)?;
    let mut p1 = vec![1i64; n];
    p1[1..].iter_mut().for_each(|x| *x = 0);
    let mut quotients = Vec::new();
    for t in e.pairs.iter().filter(|t| t.support_rank() == n) {
        let gs = t.summands().iter().map(|m| m.g_vector().to_vec()).collect_vec();
        if !gs.contains(&p1) {
            return Ok(false);
        }
        quotients.push(gs.into_iter().filter(|g| *g != p1).sorted().collect_vec());
    }
    let lower = e
        .pairs
        .iter()
        .filter(|t| t.support_rank() == n - 1)
        .map(|t| t.summands().iter().map(|m| m.g_vector().to_vec()).sorted().collect_vec())
        .sorted()
        .collect_vec();
    quotients.sort();
    Ok(quotients == lower)
}
