//! Plain-text quiver format.
//!
//! ```text
//! vertices 4
//! arrow 1 1 2
//! arrow 2 1 3
//! arrow 3 2 4
//! arrow 4 3 4
//! rel 1*1.3 - 1*2.4
//! ```
//!
//! Vertex and arrow ids are 1-based; arrow ids must be listed as `1..=m` in order.
//! Paths are dot-separated arrow ids; coefficients are integers or `a/b`.
//! Blank lines and lines starting with `#` are ignored.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use crate::algebra::{build_algebra, BoundQuiverAlgebra};
use crate::error::{Error, Result};
use crate::quiver::{Arrow, Path, Quiver, Relation};

pub fn emit(a: &BoundQuiverAlgebra) -> String {
    let q = a.quiver();
    let mut s = format!("vertices {}\n", q.n());
    for (k, ar) in q.arrows().iter().enumerate() {
        s.push_str(&format!("arrow {} {} {}\n", k + 1, ar.src + 1, ar.dst + 1));
    }
    for r in a.relations() {
        s.push_str("rel ");
        for (k, (c, p)) in r.terms.iter().enumerate() {
            let path: Vec<String> = p.iter().map(|x| (x + 1).to_string()).collect();
            let mag = c.abs();
            if k == 0 {
                if c.is_negative() {
                    s.push('-');
                }
            } else {
                s.push_str(if c.is_negative() { " - " } else { " + " });
            }
            s.push_str(&format!("{}*{}", mag, path.join(".")));
        }
        s.push('\n');
    }
    s
}

fn parse_coeff(t: &str, line: usize) -> Result<BigRational> {
    let err = || Error::Parse { line, msg: format!("bad coefficient `{t}`") };
    let (n, d) = match t.split_once('/') {
        Some((n, d)) => (n, d),
        None => (t, "1"),
    };
    let n: BigInt = n.parse().map_err(|_| err())?;
    let d: BigInt = d.parse().map_err(|_| err())?;
    if d.is_zero() {
        return Err(err());
    }
    Ok(BigRational::new(n, d))
}

fn parse_term(t: &str, negate: bool, line: usize) -> Result<(BigRational, Path)> {
    let err = |m: &str| Error::Parse { line, msg: format!("{m} in term `{t}`") };
    let (c, p) = match t.split_once('*') {
        Some((c, p)) => (parse_coeff(c.trim(), line)?, p.trim()),
        None => (BigRational::from_integer(1.into()), t.trim()),
    };
    let path = p
        .split('.')
        .map(|x| x.parse::<usize>().ok().filter(|&v| v >= 1).map(|v| v - 1))
        .collect::<Option<Vec<usize>>>()
        .ok_or_else(|| err("bad path"))?;
    Ok((if negate { -c } else { c }, path))
}

fn parse_relation(body: &str, line: usize) -> Result<Relation> {
    let toks: Vec<&str> = body.split_whitespace().collect();
    let mut terms = Vec::new();
    let mut negate = false;
    let mut expect_term = true;
    for tok in toks {
        if expect_term {
            let (neg, t) = match tok.strip_prefix('-') {
                Some(rest) if !rest.is_empty() => (true, rest),
                _ => (false, tok),
            };
            terms.push(parse_term(t, negate ^ neg, line)?);
            expect_term = false;
        } else {
            negate = match tok {
                "+" => false,
                "-" => true,
                _ => return Err(Error::Parse { line, msg: format!("expected + or -, found `{tok}`") }),
            };
            expect_term = true;
        }
    }
    if terms.is_empty() || expect_term {
        return Err(Error::Parse { line, msg: "incomplete relation".into() });
    }
    Ok(Relation::new(terms))
}

pub fn parse(text: &str) -> Result<BoundQuiverAlgebra> {
    let mut n = None;
    let mut arrows = Vec::new();
    let mut rels = Vec::new();
    for (k, raw) in text.lines().enumerate() {
        let line = k + 1;
        let l = raw.trim();
        if l.is_empty() || l.starts_with('#') {
            continue;
        }
        let (kw, rest) = l.split_once(char::is_whitespace).unwrap_or((l, ""));
        let nums = || -> Result<Vec<usize>> {
            rest.split_whitespace()
                .map(|t| t.parse::<usize>().map_err(|_| Error::Parse { line, msg: format!("bad number `{t}`") }))
                .collect()
        };
        match kw {
            "vertices" => {
                let v = nums()?;
                if v.len() != 1 || n.is_some() {
                    return Err(Error::Parse { line, msg: "expected a single `vertices n` line".into() });
                }
                n = Some(v[0]);
            }
            "arrow" => {
                let v = nums()?;
                if v.len() != 3 || v[0] != arrows.len() + 1 || v[1] == 0 || v[2] == 0 {
                    return Err(Error::Parse { line, msg: "expected `arrow id src dst` with consecutive ids".into() });
                }
                arrows.push(Arrow { name: format!("a{}", v[0]), src: v[1] - 1, dst: v[2] - 1 });
            }
            "rel" => rels.push(parse_relation(rest, line)?),
            _ => return Err(Error::Parse { line, msg: format!("unknown keyword `{kw}`") }),
        }
    }
    let n = n.ok_or(Error::Parse { line: 0, msg: "missing `vertices` line".into() })?;
    build_algebra(Quiver::with_numbered_vertices(n, arrows)?, rels)
}
