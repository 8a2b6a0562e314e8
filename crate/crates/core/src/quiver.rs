//! Finite acyclic quivers and admissible relations.
//!
//! Vertices and arrows are indexed from 0 internally; everything user-facing
//! (labels, text format) is 1-based.

use std::collections::VecDeque;
use std::fmt;

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// A path as a sequence of arrow indices. The empty path is the trivial path
/// at whatever vertex the context fixes.
pub type Path = Vec<usize>;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Arrow {
    pub name: String,
    pub src: usize,
    pub dst: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Quiver {
    labels: Vec<String>,
    arrows: Vec<Arrow>,
    out: Vec<Vec<usize>>,
    inc: Vec<Vec<usize>>,
}

impl Quiver {
    /// Validates indices, rejects loops and oriented cycles.
    pub fn new(labels: Vec<String>, arrows: Vec<Arrow>) -> Result<Self> {
        let n = labels.len();
        if n == 0 {
            return Err(Error::InvalidQuiver("no vertices".into()));
        }
        let mut out = vec![Vec::new(); n];
        let mut inc = vec![Vec::new(); n];
        for (k, a) in arrows.iter().enumerate() {
            if a.src >= n || a.dst >= n {
                return Err(Error::InvalidQuiver(format!("arrow {} has an unknown endpoint", k + 1)));
            }
            if a.src == a.dst {
                return Err(Error::InvalidQuiver(format!("arrow {} is a loop", k + 1)));
            }
            out[a.src].push(k);
            inc[a.dst].push(k);
        }
        let q = Quiver { labels, arrows, out, inc };
        if q.topological_order().is_none() {
            return Err(Error::InvalidQuiver("quiver has an oriented cycle".into()));
        }
        Ok(q)
    }

    /// Quiver with vertices labelled `1..=n`.
    pub fn with_numbered_vertices(n: usize, arrows: Vec<Arrow>) -> Result<Self> {
        Quiver::new((1..=n).map(|i| i.to_string()).collect(), arrows)
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, v: usize) -> &str {
        &self.labels[v]
    }

    pub fn arrows(&self) -> &[Arrow] {
        &self.arrows
    }

    pub fn arrow(&self, a: usize) -> &Arrow {
        &self.arrows[a]
    }

    pub fn out_arrows(&self, v: usize) -> &[usize] {
        &self.out[v]
    }

    pub fn in_arrows(&self, v: usize) -> &[usize] {
        &self.inc[v]
    }

    pub fn vertex_by_label(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    pub fn topological_order(&self) -> Option<Vec<usize>> {
        let n = self.n();
        let mut indeg: Vec<usize> = (0..n).map(|v| self.inc[v].len()).collect();
        let mut queue: VecDeque<usize> = (0..n).filter(|&v| indeg[v] == 0).collect();
        let mut order = Vec::with_capacity(n);
        while let Some(v) = queue.pop_front() {
            order.push(v);
            for &a in &self.out[v] {
                let w = self.arrows[a].dst;
                indeg[w] -= 1;
                if indeg[w] == 0 {
                    queue.push_back(w);
                }
            }
        }
        (order.len() == n).then_some(order)
    }

    /// Connected components of the underlying graph, each sorted, ordered by least vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let n = self.n();
        let mut comp = vec![usize::MAX; n];
        let mut out = Vec::new();
        for start in 0..n {
            if comp[start] != usize::MAX {
                continue;
            }
            let id = out.len();
            let mut members = vec![start];
            comp[start] = id;
            let mut stack = vec![start];
            while let Some(v) = stack.pop() {
                let nbrs = self.out[v]
                    .iter()
                    .map(|&a| self.arrows[a].dst)
                    .chain(self.inc[v].iter().map(|&a| self.arrows[a].src));
                for w in nbrs {
                    if comp[w] == usize::MAX {
                        comp[w] = id;
                        members.push(w);
                        stack.push(w);
                    }
                }
            }
            members.sort_unstable();
            out.push(members);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() == 1
    }

    pub fn path_source(&self, p: &[usize]) -> Option<usize> {
        p.first().map(|&a| self.arrows[a].src)
    }

    pub fn path_target(&self, p: &[usize]) -> Option<usize> {
        p.last().map(|&a| self.arrows[a].dst)
    }

    pub fn is_composable(&self, p: &[usize]) -> bool {
        p.iter().all(|&a| a < self.arrows.len()) && p.windows(2).all(|w| self.arrows[w[0]].dst == self.arrows[w[1]].src)
    }

    /// Vertices visited by a nonempty path, in order.
    pub fn path_vertices(&self, p: &[usize]) -> Vec<usize> {
        let mut vs = Vec::with_capacity(p.len() + 1);
        if let Some(&a) = p.first() {
            vs.push(self.arrows[a].src);
        }
        vs.extend(p.iter().map(|&a| self.arrows[a].dst));
        vs
    }

    /// All paths starting at `i` (including the trivial one), depth-first in arrow order.
    pub fn paths_from(&self, i: usize) -> Vec<Path> {
        let mut out = vec![Vec::new()];
        let mut stack: Vec<Path> = self.out[i].iter().rev().map(|&a| vec![a]).collect();
        while let Some(p) = stack.pop() {
            let t = self.arrows[*p.last().unwrap()].dst;
            for &a in self.out[t].iter().rev() {
                let mut q = p.clone();
                q.push(a);
                stack.push(q);
            }
            out.push(p);
        }
        out
    }

    /// Vertices reachable from `i` by a path of positive length.
    pub fn successors(&self, i: usize) -> Vec<bool> {
        let mut seen = vec![false; self.n()];
        let mut stack = vec![i];
        while let Some(v) = stack.pop() {
            for &a in &self.out[v] {
                let w = self.arrows[a].dst;
                if !seen[w] {
                    seen[w] = true;
                    stack.push(w);
                }
            }
        }
        seen
    }

    /// Vertices from which `i` is reachable by a path of positive length.
    pub fn predecessors(&self, i: usize) -> Vec<bool> {
        let mut seen = vec![false; self.n()];
        let mut stack = vec![i];
        while let Some(v) = stack.pop() {
            for &a in &self.inc[v] {
                let w = self.arrows[a].src;
                if !seen[w] {
                    seen[w] = true;
                    stack.push(w);
                }
            }
        }
        seen
    }

    /// Arrow names concatenated; names longer than one character are joined with `·`.
    pub fn render_path(&self, p: &[usize]) -> String {
        let names: Vec<&str> = p.iter().map(|&a| self.arrows[a].name.as_str()).collect();
        if names.iter().all(|s| s.chars().count() == 1) {
            names.concat()
        } else {
            names.join("·")
        }
    }
}

/// A linear combination of parallel paths of length at least two.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Relation {
    pub terms: Vec<(BigRational, Path)>,
}

impl Relation {
    pub fn new(terms: Vec<(BigRational, Path)>) -> Self {
        Relation { terms }
    }

    pub fn monomial(path: Path) -> Self {
        Relation { terms: vec![(BigRational::one(), path)] }
    }

    pub fn commutativity(p: Path, q: Path) -> Self {
        Relation { terms: vec![(BigRational::one(), p), (-BigRational::one(), q)] }
    }

    pub fn source(&self, q: &Quiver) -> usize {
        q.path_source(&self.terms[0].1).expect("relation path is nonempty")
    }

    pub fn target(&self, q: &Quiver) -> usize {
        q.path_target(&self.terms[0].1).expect("relation path is nonempty")
    }

    /// Checks composability, length and parallelism.
    pub fn validate(&self, q: &Quiver) -> Result<()> {
        if self.terms.is_empty() {
            return Err(Error::InvalidRelation("empty relation".into()));
        }
        let mut ends = None;
        for (c, p) in &self.terms {
            if c.is_zero() {
                return Err(Error::InvalidRelation("zero coefficient".into()));
            }
            if p.len() < 2 {
                return Err(Error::InvalidRelation("path of length below two".into()));
            }
            if !q.is_composable(p) {
                return Err(Error::InvalidRelation(format!("path {:?} is not composable", one_based(p))));
            }
            let e = (q.path_source(p).unwrap(), q.path_target(p).unwrap());
            match ends {
                None => ends = Some(e),
                Some(prev) if prev != e => {
                    return Err(Error::InvalidRelation("paths are not parallel".into()));
                }
                _ => {}
            }
        }
        Ok(())
    }

    pub fn render(&self, q: &Quiver) -> String {
        let mut s = String::new();
        for (k, (c, p)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            let mag = c.abs();
            if k == 0 {
                if neg {
                    s.push('-');
                }
            } else {
                s.push_str(if neg { " - " } else { " + " });
            }
            if !mag.is_one() {
                s.push_str(&mag.to_string());
            }
            s.push_str(&q.render_path(p));
        }
        s
    }
}

pub(crate) fn one_based(p: &[usize]) -> Vec<usize> {
    p.iter().map(|a| a + 1).collect()
}

impl fmt::Display for Quiver {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} vertices, {} arrows", self.n(), self.arrows.len())
    }
}
