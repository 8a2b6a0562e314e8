//! Breadth-first enumeration of the support τ-tilting Hasse quiver.

use std::collections::HashMap;
use std::sync::Arc;

use itertools::Itertools;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::algebra::BoundQuiverAlgebra;
use crate::error::{Error, Result};
use crate::rep::RepContext;

use super::counts::CountsTable;
use super::pair::{ModuleRegistry, PairKey, SupportTauTiltingPair};

pub const DEFAULT_NODE_CAP: usize = 1_000_000;
pub const DEFAULT_PRIME: u32 = 101;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HasseNode {
    pub key: PairKey,
    /// g-vectors of the summands of `M`.
    pub summands: Vec<Vec<i64>>,
    pub dimension_vectors: Vec<Vec<usize>>,
    /// Vertices of `P`, 1-based.
    pub complement: Vec<usize>,
    pub support_rank: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HasseEdge {
    pub source: usize,
    pub target: usize,
    /// g-vector of the summand that was exchanged.
    pub mutated: Vec<i64>,
}

/// Nodes in BFS order (sorted by key within each layer); node 0 is `(A, 0)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HasseDiagram {
    pub nodes: Vec<HasseNode>,
    pub edges: Vec<HasseEdge>,
    pub layers: Vec<usize>,
}

impl HasseDiagram {
    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    pub fn out_degree(&self, node: usize) -> usize {
        self.edges.iter().filter(|e| e.source == node).count()
    }

    pub fn counts(&self, n: usize) -> CountsTable {
        let mut a = vec![0u64; n + 1];
        for node in &self.nodes {
            a[node.support_rank] += 1;
        }
        CountsTable::new(a)
    }
}

#[derive(Clone, Copy, Debug)]
pub struct EnumOptions {
    pub node_cap: usize,
    pub prime: u32,
    pub validate: bool,
}

impl Default for EnumOptions {
    fn default() -> Self {
        EnumOptions { node_cap: DEFAULT_NODE_CAP, prime: DEFAULT_PRIME, validate: true }
    }
}

/// Result of an enumeration, keeping the pairs and the module registry.
pub struct Enumeration {
    pub diagram: HasseDiagram,
    pub counts: CountsTable,
    pub pairs: Vec<SupportTauTiltingPair>,
    pub registry: ModuleRegistry,
}

fn node_of(pair: &SupportTauTiltingPair) -> HasseNode {
    HasseNode {
        key: pair.key(),
        summands: pair.summands().iter().map(|m| m.g_vector().to_vec()).collect(),
        dimension_vectors: pair.summands().iter().map(|m| m.dims().to_vec()).collect(),
        complement: pair.complement_vertices().iter().map(|&v| v + 1).collect(),
        support_rank: pair.support_rank(),
    }
}

type Expansion = Vec<(Vec<i64>, SupportTauTiltingPair)>;

fn expand(reg: &ModuleRegistry, t: &SupportTauTiltingPair) -> Result<Expansion> {
    let mut out = Vec::new();
    for idx in 0..t.support_rank() {
        match reg.left_mutation(t, idx) {
            Ok(mu) => out.push((t.summands()[idx].g_vector().to_vec(), mu)),
            Err(Error::NotDescent(_)) => {}
            Err(e) => return Err(e),
        }
    }
    Ok(out)
}

/// Enumerates every support τ-tilting pair by left mutation from `(A, 0)`.
pub fn enumerate_pairs(ctx: Arc<RepContext>, opts: EnumOptions) -> Result<Enumeration> {
    if opts.node_cap == 0 {
        return Err(Error::InvalidParameter("node cap must be at least 1".into()));
    }
    let n = ctx.n();
    let reg = ModuleRegistry::new(ctx, opts.validate);
    let root = reg.initial_pair()?;
    let mut index: HashMap<PairKey, usize> = HashMap::new();
    index.insert(root.key(), 0);
    let mut pairs = vec![root];
    let mut edges = Vec::new();
    let mut layers = vec![0];
    let mut frontier = vec![0usize];
    while !frontier.is_empty() {
        let expanded: Vec<Result<Expansion>> = frontier.par_iter().map(|&i| expand(&reg, &pairs[i])).collect();
        let mut fresh: Vec<(PairKey, SupportTauTiltingPair)> = Vec::new();
        let mut pending = Vec::new();
        for (&src, exp) in frontier.iter().zip(expanded) {
            for (g, mu) in exp? {
                let key = mu.key();
                if !index.contains_key(&key) {
                    fresh.push((key.clone(), mu));
                }
                pending.push((src, key, g));
            }
        }
        fresh.sort_by(|a, b| a.0.cmp(&b.0));
        fresh.dedup_by(|a, b| a.0 == b.0);
        layers.push(pairs.len());
        let mut next = Vec::with_capacity(fresh.len());
        for (key, mu) in fresh {
            if pairs.len() >= opts.node_cap {
                return Err(Error::CapExceeded(opts.node_cap));
            }
            index.insert(key, pairs.len());
            next.push(pairs.len());
            pairs.push(mu);
        }
        for (src, key, g) in pending {
            edges.push(HasseEdge { source: src, target: index[&key], mutated: g });
        }
        frontier = next;
    }
    layers.pop();
    let diagram = HasseDiagram { nodes: pairs.iter().map(node_of).collect(), edges, layers };
    let counts = diagram.counts(n);
    Ok(Enumeration { diagram, counts, pairs, registry: reg })
}

/// Hasse quiver and support-rank table of `A` over `F_101`.
pub fn enumerate_hasse(a: &BoundQuiverAlgebra, node_cap: usize) -> Result<(HasseDiagram, CountsTable)> {
    let ctx = RepContext::new(a.clone(), DEFAULT_PRIME)?;
    let e = enumerate_pairs(ctx, EnumOptions { node_cap, ..EnumOptions::default() })?;
    Ok((e.diagram, e.counts))
}

/// Counts of `A` as the convolution of the counts of its connected components.
pub fn counts_by_components(a: &BoundQuiverAlgebra, opts: EnumOptions) -> Result<CountsTable> {
    a.components()?
        .into_iter()
        .map(|c| {
            let ctx = RepContext::new(c, opts.prime)?;
            Ok(enumerate_pairs(ctx, opts)?.counts)
        })
        .collect::<Result<Vec<_>>>()
        .map(|tables| tables.iter().fold(CountsTable::new(vec![1]), |acc, t| acc.convolve(t)))
}

/// Whether `Fac T' ⊊ Fac T` along every edge `T → T'`.
pub fn strictly_descending(e: &Enumeration) -> bool {
    let ctx = e.registry.ctx();
    e.diagram.edges.iter().all(|edge| {
        let src = e.pairs[edge.source].module(ctx);
        let dst = e.pairs[edge.target].module(ctx);
        if dst.is_zero() {
            return !src.is_zero();
        }
        crate::rep::fac_membership(&dst, &src) && !crate::rep::fac_membership(&src, &dst)
    })
}

/// Sorted multiset of the dimension vectors of all summands of all nodes of a
/// given support rank.
pub fn summand_dimension_multiset(e: &Enumeration, rank: usize) -> Vec<Vec<usize>> {
    e.pairs.iter().filter(|p| p.support_rank() == rank).flat_map(|p| p.dimension_vectors()).sorted().collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{named_family, Family};

    fn run(fam: Family) -> Enumeration {
        let ctx = RepContext::new(named_family(fam).unwrap(), DEFAULT_PRIME).unwrap();
        enumerate_pairs(ctx, EnumOptions::default()).unwrap()
    }

    #[test]
    fn lambda4_counts() {
        let e = run(Family::Lambda { n: 4 });
        assert_eq!(e.counts.values(), &[1, 4, 10, 16, 15]);
        assert_eq!(e.counts.total(), 46);
        assert!(strictly_descending(&e));
        for (i, p) in e.pairs.iter().enumerate() {
            assert!(e.registry.validate_pair(p));
            let expected = p.summands().iter().filter(|x| {
                let rest = p.summands().iter().filter(|y| y.id() != x.id()).map(|y| y.as_ref()).collect_vec();
                !e.registry.in_fac(x, &rest)
            });
            assert_eq!(e.diagram.out_degree(i), expected.count());
        }
    }

    #[test]
    fn linear_a2() {
        let e = run(Family::LinearA { n: 2 });
        assert_eq!(e.counts.values(), &[1, 2, 2]);
        assert_eq!(e.diagram.edges.len(), 5);
    }

    #[test]
    fn cap_is_reported() {
        let ctx = RepContext::new(named_family(Family::Lambda { n: 4 }).unwrap(), DEFAULT_PRIME).unwrap();
        let r = enumerate_pairs(ctx, EnumOptions { node_cap: 10, ..EnumOptions::default() });
        assert!(matches!(r, Err(Error::CapExceeded(10))));
    }
}
