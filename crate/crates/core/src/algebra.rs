//! Bound quiver algebras `KQ/I` with an explicit path basis.

use std::collections::{BTreeSet, HashMap};

use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::quiver::{Arrow, Path, Quiver, Relation};

/// The space `e_i A e_j` of an algebra: all paths `i -> j`, the chosen basis
/// among them, and the normal form of every path in that basis.
#[derive(Clone, Debug)]
pub struct Slice {
    paths: Vec<Path>,
    basis: Vec<Path>,
    index: HashMap<Path, usize>,
    nf: Vec<Vec<(usize, BigRational)>>,
}

impl Slice {
    pub fn paths(&self) -> &[Path] {
        &self.paths
    }

    pub fn basis(&self) -> &[Path] {
        &self.basis
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// Normal form of a path in this slice as (basis index, coefficient) pairs.
    pub fn normal_form(&self, p: &[usize]) -> Option<&[(usize, BigRational)]> {
        self.index.get(p).map(|&k| self.nf[k].as_slice())
    }
}

#[derive(Clone, Debug)]
pub struct BoundQuiverAlgebra {
    quiver: Quiver,
    relations: Vec<Relation>,
    slices: Vec<Slice>,
    minimal_relations: bool,
}

/// Builds and validates an algebra; the quiver must be connected.
pub fn build_algebra(quiver: Quiver, relations: Vec<Relation>) -> Result<BoundQuiverAlgebra> {
    if !quiver.is_connected() {
        return Err(Error::InvalidQuiver("quiver is not connected".into()));
    }
    BoundQuiverAlgebra::assemble(quiver, relations, false)
}

impl BoundQuiverAlgebra {
    /// Builds an algebra whose relation set is known to be minimal.
    pub(crate) fn assemble(quiver: Quiver, relations: Vec<Relation>, minimal: bool) -> Result<Self> {
        for r in &relations {
            r.validate(&quiver)?;
        }
        let n = quiver.n();
        let from: Vec<Vec<Path>> = (0..n).map(|i| quiver.paths_from(i)).collect();
        let mut slices = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                slices.push(compute_slice(&quiver, &relations, &from, i, j));
            }
        }
        Ok(BoundQuiverAlgebra { quiver, relations, slices, minimal_relations: minimal })
    }

    /// Disjoint union of algebras, with vertices and arrows concatenated.
    pub fn disjoint_union(parts: &[&BoundQuiverAlgebra]) -> Result<Self> {
        let mut labels = Vec::new();
        let mut arrows = Vec::new();
        let mut relations = Vec::new();
        for part in parts {
            let (v0, a0) = (labels.len(), arrows.len());
            labels.extend(part.quiver.labels().iter().cloned());
            arrows.extend(part.quiver.arrows().iter().map(|a| Arrow {
                name: a.name.clone(),
                src: a.src + v0,
                dst: a.dst + v0,
            }));
            relations.extend(part.relations.iter().map(|r| {
                Relation::new(r.terms.iter().map(|(c, p)| (c.clone(), p.iter().map(|a| a + a0).collect())).collect())
            }));
        }
        let minimal = parts.iter().all(|p| p.minimal_relations);
        BoundQuiverAlgebra::assemble(Quiver::new(labels, arrows)?, relations, minimal)
    }

    pub fn quiver(&self) -> &Quiver {
        &self.quiver
    }

    pub fn relations(&self) -> &[Relation] {
        &self.relations
    }

    pub fn n(&self) -> usize {
        self.quiver.n()
    }

    /// Whether the relation set came from a constructor that guarantees minimality.
    pub fn relations_minimal(&self) -> bool {
        self.minimal_relations
    }

    pub fn slice(&self, i: usize, j: usize) -> &Slice {
        &self.slices[i * self.n() + j]
    }

    /// Basis of `e_i A e_j` as paths `i -> j`.
    pub fn basis(&self, i: usize, j: usize) -> &[Path] {
        self.slice(i, j).basis()
    }

    pub fn dim_slice(&self, i: usize, j: usize) -> usize {
        self.slice(i, j).dim()
    }

    pub fn dimension(&self) -> usize {
        self.slices.iter().map(Slice::dim).sum()
    }

    /// Normal form of a path `i -> j`; the empty path is `e_i` when `i == j`.
    pub fn normal_form(&self, i: usize, j: usize, p: &[usize]) -> &[(usize, BigRational)] {
        self.slice(i, j).normal_form(p).expect("path is not in the requested slice")
    }

    pub fn is_connected(&self) -> bool {
        self.quiver.is_connected()
    }

    /// Restriction to a set of vertices closed under paths between its members.
    pub fn convex_restriction(&self, set: &[usize]) -> Result<BoundQuiverAlgebra> {
        let n = self.n();
        let mut inside = vec![false; n];
        for &v in set {
            if v >= n {
                return Err(Error::InvalidParameter(format!("vertex {} out of range", v + 1)));
            }
            inside[v] = true;
        }
        if set.is_empty() {
            return Err(Error::InvalidParameter("empty vertex set".into()));
        }
        if let Some(path) = self.convexity_violation(&inside) {
            return Err(Error::NotConvex { path: path.iter().map(|v| v + 1).collect() });
        }
        let rels = self
            .relations
            .iter()
            .filter(|r| r.terms.iter().all(|(_, p)| self.quiver.path_vertices(p).iter().all(|&v| inside[v])))
            .cloned()
            .collect();
        self.induced(&inside, rels)
    }

    /// A vertex path that starts and ends in `inside` but leaves it, if any.
    fn convexity_violation(&self, inside: &[bool]) -> Option<Vec<usize>> {
        let q = &self.quiver;
        for u in (0..self.n()).filter(|&u| inside[u]) {
            // Search from u through vertices outside the set back into it.
            let mut parent: Vec<Option<usize>> = vec![None; self.n()];
            let mut stack = Vec::new();
            for &a in q.out_arrows(u) {
                let w = q.arrow(a).dst;
                if !inside[w] && parent[w].is_none() {
                    parent[w] = Some(u);
                    stack.push(w);
                }
            }
            while let Some(v) = stack.pop() {
                for &a in q.out_arrows(v) {
                    let w = q.arrow(a).dst;
                    if inside[w] {
                        let mut path = vec![w, v];
                        let mut cur = v;
                        while let Some(p) = parent[cur] {
                            path.push(p);
                            if p == u {
                                break;
                            }
                            cur = p;
                        }
                        path.reverse();
                        return Some(path);
                    }
                    if parent[w].is_none() && w != u {
                        parent[w] = Some(v);
                        stack.push(w);
                    }
                }
            }
        }
        None
    }

    /// Full subquiver on `keep` with the given relations (expressed in old arrow ids).
    fn induced(&self, keep: &[bool], rels: Vec<Relation>) -> Result<BoundQuiverAlgebra> {
        let q = &self.quiver;
        let mut vmap = vec![usize::MAX; self.n()];
        let mut labels = Vec::new();
        for v in 0..self.n() {
            if keep[v] {
                vmap[v] = labels.len();
                labels.push(q.label(v).to_string());
            }
        }
        let mut amap = vec![usize::MAX; q.arrows().len()];
        let mut arrows = Vec::new();
        for (k, a) in q.arrows().iter().enumerate() {
            if keep[a.src] && keep[a.dst] {
                amap[k] = arrows.len();
                arrows.push(Arrow { name: a.name.clone(), src: vmap[a.src], dst: vmap[a.dst] });
            }
        }
        let rels = rels
            .into_iter()
            .map(|r| {
                Relation::new(r.terms.into_iter().map(|(c, p)| (c, p.iter().map(|&a| amap[a]).collect())).collect())
            })
            .collect();
        BoundQuiverAlgebra::assemble(Quiver::new(labels, arrows)?, rels, self.minimal_relations)
    }

    /// `A / A e_i A`, split into connected components ordered by least surviving vertex.
    pub fn vertex_quotient(&self, i: usize) -> Result<Vec<BoundQuiverAlgebra>> {
        self.delete_vertices(&[i])
    }

    /// `A / A e A` for the idempotent `e` of a vertex set.
    pub fn delete_vertices(&self, del: &[usize]) -> Result<Vec<BoundQuiverAlgebra>> {
        let n = self.n();
        let mut gone = vec![false; n];
        for &v in del {
            if v >= n {
                return Err(Error::InvalidParameter(format!("vertex {} out of range", v + 1)));
            }
            gone[v] = true;
        }
        let q = &self.quiver;
        let mut rels = Vec::new();
        for r in &self.relations {
            let terms: Vec<(BigRational, Path)> =
                r.terms.iter().filter(|(_, p)| q.path_vertices(p).iter().all(|&v| !gone[v])).cloned().collect();
            match terms.len() {
                0 => {}
                1 => rels.push(Relation::monomial(terms.into_iter().next().unwrap().1)),
                _ => rels.push(Relation::new(terms)),
            }
        }
        let keep: Vec<bool> = gone.iter().map(|g| !g).collect();
        if keep.iter().all(|k| !k) {
            return Ok(Vec::new());
        }
        let whole = self.induced(&keep, rels)?;
        whole.components()
    }

    /// Connected components as separate algebras.
    pub fn components(&self) -> Result<Vec<BoundQuiverAlgebra>> {
        let comps = self.quiver.components();
        if comps.len() == 1 {
            return Ok(vec![self.clone()]);
        }
        comps
            .iter()
            .map(|c| {
                let mut keep = vec![false; self.n()];
                c.iter().for_each(|&v| keep[v] = true);
                let rels = self.relations.iter().filter(|r| keep[r.source(&self.quiver)]).cloned().collect();
                self.induced(&keep, rels)
            })
            .collect()
    }

    /// Label-level description used to compare algebras built in different ways:
    /// vertex labels, arrows as label pairs, relations as sets of labelled vertex walks.
    pub fn structural_key(&self) -> StructuralKey {
        let q = &self.quiver;
        let vertices: BTreeSet<String> = q.labels().iter().cloned().collect();
        let mut arrows: Vec<(String, String)> =
            q.arrows().iter().map(|a| (q.label(a.src).to_string(), q.label(a.dst).to_string())).collect();
        arrows.sort();
        let mut relations: Vec<Vec<(BigRational, Vec<String>)>> = self
            .relations
            .iter()
            .map(|r| {
                let mut t: Vec<(BigRational, Vec<String>)> = r
                    .terms
                    .iter()
                    .map(|(c, p)| (c.clone(), q.path_vertices(p).iter().map(|&v| q.label(v).to_string()).collect()))
                    .collect();
                t.sort_by(|a, b| a.1.cmp(&b.1));
                t
            })
            .collect();
        relations.sort_by(|a, b| {
            let ka: Vec<&Vec<String>> = a.iter().map(|t| &t.1).collect();
            let kb: Vec<&Vec<String>> = b.iter().map(|t| &t.1).collect();
            ka.cmp(&kb)
        });
        StructuralKey { vertices, arrows, relations }
    }

    /// Human-readable relation list.
    pub fn render_relations(&self) -> Vec<String> {
        self.relations.iter().map(|r| r.render(&self.quiver)).collect()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StructuralKey {
    pub vertices: BTreeSet<String>,
    pub arrows: Vec<(String, String)>,
    pub relations: Vec<Vec<(BigRational, Vec<String>)>>,
}

/// Column order for elimination: longer paths first, then lexicographically
/// larger first, so pivots fall on them and the basis keeps the smallest paths.
fn elimination_order(paths: &mut [Path]) {
    paths.sort_by(|a, b| b.len().cmp(&a.len()).then_with(|| b.cmp(a)));
}

fn compute_slice(q: &Quiver, rels: &[Relation], from: &[Vec<Path>], i: usize, j: usize) -> Slice {
    let mut paths: Vec<Path> =
        from[i].iter().filter(|p| if p.is_empty() { i == j } else { q.path_target(p) == Some(j) }).cloned().collect();
    elimination_order(&mut paths);
    let index: HashMap<Path, usize> = paths.iter().enumerate().map(|(k, p)| (p.clone(), k)).collect();
    let m = paths.len();

    // Spanning set of I ∩ e_i KQ e_j: all products p·ρ·q.
    let mut rows: Vec<Vec<BigRational>> = Vec::new();
    for r in rels {
        let (s, t) = (r.source(q), r.target(q));
        let lefts = from[i].iter().filter(|p| if p.is_empty() { i == s } else { q.path_target(p) == Some(s) });
        for left in lefts {
            for right in from[t].iter().filter(|p| if p.is_empty() { t == j } else { q.path_target(p) == Some(j) }) {
                let mut row = vec![BigRational::zero(); m];
                for (c, mid) in &r.terms {
                    let mut full = left.clone();
                    full.extend_from_slice(mid);
                    full.extend_from_slice(right);
                    let k = index[&full];
                    row[k] += c;
                }
                if row.iter().any(|x| !x.is_zero()) {
                    rows.push(row);
                }
            }
        }
    }
    let pivots = rref_rational(&mut rows, m);
    let mut is_pivot = vec![None; m];
    for (r, &c) in pivots.iter().enumerate() {
        is_pivot[c] = Some(r);
    }
    // Basis: non-pivot paths, listed in ascending (length, lex) order.
    let mut basis_cols: Vec<usize> = (0..m).filter(|&c| is_pivot[c].is_none()).collect();
    basis_cols.reverse();
    let basis: Vec<Path> = basis_cols.iter().map(|&c| paths[c].clone()).collect();
    let mut col_to_basis = vec![usize::MAX; m];
    for (b, &c) in basis_cols.iter().enumerate() {
        col_to_basis[c] = b;
    }
    let nf = (0..m)
        .map(|c| match is_pivot[c] {
            None => vec![(col_to_basis[c], BigRational::one())],
            Some(r) => {
                let mut v: Vec<(usize, BigRational)> = (0..m)
                    .filter(|&cc| cc != c && !rows[r][cc].is_zero())
                    .map(|cc| (col_to_basis[cc], -rows[r][cc].clone()))
                    .collect();
                v.sort_by_key(|t| t.0);
                v
            }
        })
        .collect();
    Slice { paths, basis, index, nf }
}

/// In-place reduced row echelon form; returns pivot columns, truncating zero rows.
fn rref_rational(rows: &mut Vec<Vec<BigRational>>, ncols: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        let Some(p) = (r..rows.len()).find(|&k| !rows[k][c].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let inv = rows[r][c].recip();
        for x in rows[r].iter_mut() {
            *x *= &inv;
        }
        for k in 0..rows.len() {
            if k == r || rows[k][c].is_zero() {
                continue;
            }
            let factor = rows[k][c].clone();
            for cc in c..ncols {
                let sub = &rows[r][cc] * &factor;
                rows[k][cc] -= sub;
            }
        }
        pivots.push(c);
        r += 1;
        if r == rows.len() {
            break;
        }
    }
    rows.truncate(r);
    pivots
}

#[cfg(test)]
mod tests {
    use super::*;

    fn arrow(name: &str, src: usize, dst: usize) -> Arrow {
        Arrow { name: name.into(), src, dst }
    }

    fn square(rel: bool) -> BoundQuiverAlgebra {
        let q = Quiver::with_numbered_vertices(
            4,
            vec![arrow("α", 0, 1), arrow("β", 0, 2), arrow("μ", 1, 3), arrow("ν", 2, 3)],
        )
        .unwrap();
        let rels = if rel { vec![Relation::commutativity(vec![0, 2], vec![1, 3])] } else { vec![] };
        build_algebra(q, rels).unwrap()
    }

    #[test]
    fn linear_a2_has_dimension_three() {
        let q = Quiver::with_numbered_vertices(2, vec![arrow("a", 0, 1)]).unwrap();
        let a = build_algebra(q, vec![]).unwrap();
        assert_eq!(a.dimension(), 3);
    }

    #[test]
    fn commutative_square_keeps_smallest_path() {
        let a = square(true);
        assert_eq!(a.dim_slice(0, 3), 1);
        assert_eq!(a.basis(0, 3), &[vec![0, 2]]);
        let nf = a.normal_form(0, 3, &[1, 3]);
        assert_eq!(nf, &[(0, BigRational::one())]);
        assert_eq!(square(false).dim_slice(0, 3), 2);
        assert_eq!(a.dimension(), 9);
    }

    #[test]
    fn zero_relation_kills_path() {
        let q = Quiver::with_numbered_vertices(3, vec![arrow("a", 0, 1), arrow("b", 1, 2)]).unwrap();
        let a = build_algebra(q, vec![Relation::monomial(vec![0, 1])]).unwrap();
        assert_eq!(a.dim_slice(0, 2), 0);
        assert!(a.normal_form(0, 2, &[0, 1]).is_empty());
    }

    #[test]
    fn disconnected_input_rejected() {
        let q = Quiver::with_numbered_vertices(2, vec![]).unwrap();
        assert!(build_algebra(q, vec![]).is_err());
    }

    #[test]
    fn convexity_witness() {
        let a = square(true);
        match a.convex_restriction(&[0, 1, 3]) {
            Err(Error::NotConvex { path }) => assert_eq!(path, vec![1, 3, 4]),
            other => panic!("unexpected {other:?}"),
        }
        let all = a.convex_restriction(&[0, 1, 2, 3]).unwrap();
        assert_eq!(all.structural_key(), a.structural_key());
    }

    #[test]
    fn quotient_by_sink() {
        let a = square(true);
        let parts = a.vertex_quotient(3).unwrap();
        assert_eq!(parts.len(), 1);
        assert_eq!(parts[0].n(), 3);
        assert!(parts[0].relations().is_empty());
        let parts = a.delete_vertices(&[0, 3]).unwrap();
        assert_eq!(parts.len(), 2);
    }

    #[test]
    fn quotient_turns_commutativity_into_monomial() {
        let a = square(true);
        let parts = a.vertex_quotient(2).unwrap();
        assert_eq!(parts.len(), 1);
        assert_eq!(parts[0].relations().len(), 1);
        assert_eq!(parts[0].relations()[0].terms.len(), 1);
        assert_eq!(parts[0].dimension(), 5);
    }
}
