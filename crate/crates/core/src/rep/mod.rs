//! Finite-dimensional right modules, viewed as representations of the bound quiver.
//!
//! A module `M` has a space `M_v` per vertex and a matrix `M_a : M_s → M_t`
//! (size `dim M_t × dim M_s`) per arrow `a : s → t`. Paths act left to right,
//! so `M_{ab} = M_b · M_a`.

mod decompose;
mod present;

pub use decompose::{decompose, find_isomorphism, is_indecomposable_certified, is_isomorphic, Decomposition};
pub use present::{
    ar_translate, g_vector, hom_to_tau_dim, hom_to_tau_vanishes, is_tau_rigid, is_tau_rigid_pair,
    minimal_projective_presentation, Presentation,
};

use std::collections::hash_map::DefaultHasher;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::sync::Arc;

use crate::algebra::BoundQuiverAlgebra;
use crate::error::{Error, Result};
use crate::field::{Fp, Mat};
use crate::quiver::Path;

/// An algebra together with the working prime field and its structure
/// constants reduced mod `p`.
pub struct RepContext {
    algebra: BoundQuiverAlgebra,
    field: Fp,
    relations: Vec<Vec<(u32, Path)>>,
    /// `products[(w*n + v)*n + u][z][x]`: `z·x` for basis paths `z: w→v`, `x: v→u`,
    /// as coordinates over the basis of `e_w A e_u`.
    products: Vec<Vec<Vec<Vec<(usize, u32)>>>>,
    /// `arrow_right[i][a][y]`: `y·a` for a basis path `y: i→s(a)`, over the basis of `e_i A e_{t(a)}`.
    arrow_right: Vec<Vec<Vec<Vec<(usize, u32)>>>>,
}

impl fmt::Debug for RepContext {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RepContext(n={}, p={})", self.algebra.n(), self.field.p())
    }
}

impl RepContext {
    pub fn new(algebra: BoundQuiverAlgebra, p: u32) -> Result<Arc<Self>> {
        let field = Fp::new(p).ok_or_else(|| Error::InvalidParameter(format!("{p} is not an odd prime")))?;
        let reduce = |c| {
            field
                .from_rational(c)
                .ok_or_else(|| Error::InvalidParameter(format!("p = {p} divides a relation coefficient denominator")))
        };
        let mut relations = Vec::new();
        for r in algebra.relations() {
            let terms = r.terms.iter().map(|(c, path)| Ok((reduce(c)?, path.clone()))).collect::<Result<Vec<_>>>()?;
            relations.push(terms);
        }
        let n = algebra.n();
        let nf = |i: usize, j: usize, p: &[usize]| -> Result<Vec<(usize, u32)>> {
            algebra
                .normal_form(i, j, p)
                .iter()
                .map(|(k, c)| Ok((*k, reduce(c)?)))
                .filter(|r: &Result<(usize, u32)>| !matches!(r, Ok((_, 0))))
                .collect()
        };
        let mut products = vec![Vec::new(); n * n * n];
        for w in 0..n {
            for v in 0..n {
                let bz = algebra.basis(w, v);
                if bz.is_empty() {
                    continue;
                }
                for u in 0..n {
                    let bx = algebra.basis(v, u);
                    if bx.is_empty() {
                        continue;
                    }
                    let mut table = Vec::with_capacity(bz.len());
                    for z in bz {
                        let mut row = Vec::with_capacity(bx.len());
                        for x in bx {
                            let mut path = z.clone();
                            path.extend_from_slice(x);
                            row.push(nf(w, u, &path)?);
                        }
                        table.push(row);
                    }
                    products[(w * n + v) * n + u] = table;
                }
            }
        }
        let q = algebra.quiver();
        let mut arrow_right = vec![vec![Vec::new(); q.arrows().len()]; n];
        for (i, per_arrow) in arrow_right.iter_mut().enumerate() {
            for (a, slot) in per_arrow.iter_mut().enumerate() {
                let (s, t) = (q.arrow(a).src, q.arrow(a).dst);
                *slot = algebra
                    .basis(i, s)
                    .iter()
                    .map(|y| {
                        let mut path = y.clone();
                        path.push(a);
                        nf(i, t, &path)
                    })
                    .collect::<Result<Vec<_>>>()?;
            }
        }
        Ok(Arc::new(RepContext { algebra, field, relations, products, arrow_right }))
    }

    pub fn algebra(&self) -> &BoundQuiverAlgebra {
        &self.algebra
    }

    pub fn field(&self) -> &Fp {
        &self.field
    }

    pub fn n(&self) -> usize {
        self.algebra.n()
    }

    /// `z·x` for basis indices `z` of `e_w A e_v` and `x` of `e_v A e_u`.
    pub fn product(&self, w: usize, v: usize, u: usize, z: usize, x: usize) -> &[(usize, u32)] {
        let n = self.n();
        &self.products[(w * n + v) * n + u][z][x]
    }
}

/// A module over the algebra of its context.
#[derive(Clone)]
pub struct Representation {
    ctx: Arc<RepContext>,
    dims: Vec<usize>,
    maps: Vec<Mat>,
}

impl PartialEq for Representation {
    fn eq(&self, other: &Self) -> bool {
        self.dims == other.dims && self.maps == other.maps
    }
}

impl Eq for Representation {}

impl fmt::Debug for Representation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Rep{:?}", self.dims)?;
        for m in &self.maps {
            write!(f, " {:?}", m.data())?;
        }
        Ok(())
    }
}

/// A module homomorphism given by one matrix per vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModuleMap {
    pub comps: Vec<Mat>,
}

impl ModuleMap {
    pub fn zero(source: &Representation, target: &Representation) -> Self {
        ModuleMap { comps: (0..source.dims.len()).map(|v| Mat::zeros(target.dims[v], source.dims[v])).collect() }
    }

    pub fn identity(m: &Representation) -> Self {
        ModuleMap { comps: m.dims.iter().map(|&d| Mat::identity(d)).collect() }
    }

    pub fn is_zero(&self) -> bool {
        self.comps.iter().all(Mat::is_zero)
    }

    /// `other ∘ self`.
    pub fn then(&self, other: &ModuleMap, f: &Fp) -> ModuleMap {
        ModuleMap { comps: self.comps.iter().zip(&other.comps).map(|(a, b)| b.mul(a, f)).collect() }
    }

    pub fn add_scaled(&mut self, other: &ModuleMap, s: u32, f: &Fp) {
        for (a, b) in self.comps.iter_mut().zip(&other.comps) {
            a.add_scaled(b, s, f);
        }
    }

    pub fn scale(&self, s: u32, f: &Fp) -> ModuleMap {
        ModuleMap { comps: self.comps.iter().map(|m| m.scale(s, f)).collect() }
    }

    pub fn is_invertible(&self, f: &Fp) -> bool {
        self.comps.iter().all(|m| m.is_invertible(f))
    }

    pub fn inverse(&self, f: &Fp) -> Option<ModuleMap> {
        Some(ModuleMap { comps: self.comps.iter().map(|m| m.inverse(f)).collect::<Option<Vec<_>>>()? })
    }

    /// Entries of all components concatenated.
    pub fn flatten(&self) -> Vec<u32> {
        self.comps.iter().flat_map(|m| m.data().iter().copied()).collect()
    }

    /// `Σ c_k · basis_k`.
    pub fn combination(basis: &[ModuleMap], coeffs: &[u32], f: &Fp) -> ModuleMap {
        let mut acc = ModuleMap { comps: basis[0].comps.iter().map(|m| Mat::zeros(m.rows(), m.cols())).collect() };
        for (b, &c) in basis.iter().zip(coeffs) {
            acc.add_scaled(b, c, f);
        }
        acc
    }

    pub fn trace(&self, f: &Fp) -> u32 {
        self.comps.iter().fold(0, |acc, m| f.add(acc, m.trace(f)))
    }
}

impl Representation {
    /// Validates sizes and relations.
    pub fn new(ctx: Arc<RepContext>, dims: Vec<usize>, maps: Vec<Mat>) -> Result<Self> {
        let q = ctx.algebra.quiver();
        if dims.len() != q.n() {
            return Err(Error::LengthMismatch { expected: q.n(), got: dims.len() });
        }
        if maps.len() != q.arrows().len() {
            return Err(Error::LengthMismatch { expected: q.arrows().len(), got: maps.len() });
        }
        for (a, m) in maps.iter().enumerate() {
            let ar = q.arrow(a);
            if m.rows() != dims[ar.dst] || m.cols() != dims[ar.src] {
                return Err(Error::InvalidParameter(format!("arrow {} matrix has the wrong size", a + 1)));
            }
        }
        let r = Representation { ctx, dims, maps };
        if !r.satisfies_relations() {
            return Err(Error::InvalidParameter("representation violates a relation".into()));
        }
        Ok(r)
    }

    /// Trusted constructor; relations checked in debug builds.
    pub(crate) fn from_parts(ctx: Arc<RepContext>, dims: Vec<usize>, maps: Vec<Mat>) -> Self {
        let r = Representation { ctx, dims, maps };
        debug_assert!(r.satisfies_relations(), "relation check failed");
        r
    }

    pub fn zero(ctx: &Arc<RepContext>) -> Self {
        let q = ctx.algebra.quiver();
        let maps = q.arrows().iter().map(|_| Mat::zeros(0, 0)).collect();
        Representation { ctx: ctx.clone(), dims: vec![0; q.n()], maps }
    }

    pub fn ctx(&self) -> &Arc<RepContext> {
        &self.ctx
    }

    pub fn field(&self) -> &Fp {
        &self.ctx.field
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn dim(&self, v: usize) -> usize {
        self.dims[v]
    }

    pub fn total_dim(&self) -> usize {
        self.dims.iter().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.total_dim() == 0
    }

    pub fn map(&self, a: usize) -> &Mat {
        &self.maps[a]
    }

    pub fn maps(&self) -> &[Mat] {
        &self.maps
    }

    /// Vertices where the module is nonzero.
    pub fn support(&self) -> Vec<usize> {
        (0..self.dims.len()).filter(|&v| self.dims[v] > 0).collect()
    }

    pub fn is_sincere(&self) -> bool {
        self.dims.iter().all(|&d| d > 0)
    }

    /// The matrix of a path starting at `i` (the identity on `M_i` for the empty path).
    pub fn path_matrix(&self, i: usize, p: &[usize]) -> Mat {
        let f = self.field();
        let mut m = Mat::identity(self.dims[i]);
        for &a in p {
            m = self.maps[a].mul(&m, f);
        }
        m
    }

    pub fn satisfies_relations(&self) -> bool {
        let q = self.ctx.algebra.quiver();
        let f = self.field();
        self.ctx.relations.iter().all(|terms| {
            let s = q.path_source(&terms[0].1).unwrap();
            let t = q.path_target(&terms[0].1).unwrap();
            let mut acc = Mat::zeros(self.dims[t], self.dims[s]);
            for (c, p) in terms {
                acc.add_scaled(&self.path_matrix(s, p), *c, f);
            }
            acc.is_zero()
        })
    }

    /// Content hash used to seed randomized steps.
    pub fn content_hash(&self) -> u64 {
        let mut h = DefaultHasher::new();
        self.dims.hash(&mut h);
        for m in &self.maps {
            m.data().hash(&mut h);
        }
        self.field().p().hash(&mut h);
        h.finish()
    }

    pub fn direct_sum(parts: &[&Representation]) -> Representation {
        let ctx = parts[0].ctx.clone();
        let q = ctx.algebra.quiver();
        let dims = (0..q.n()).map(|v| parts.iter().map(|p| p.dims[v]).sum()).collect();
        let maps = (0..q.arrows().len())
            .map(|a| Mat::block_diag(&parts.iter().map(|p| &p.maps[a]).collect::<Vec<_>>()))
            .collect();
        Representation { ctx, dims, maps }
    }

    /// Same module written in new bases: `M'_a = B_t^{-1} M_a B_s`.
    pub fn change_basis(&self, bases: &[Mat]) -> Result<Representation> {
        let f = self.field();
        let inv: Vec<Mat> = bases
            .iter()
            .map(|b| b.inverse(f).ok_or_else(|| Error::InvalidParameter("basis change is singular".into())))
            .collect::<Result<_>>()?;
        let q = self.ctx.algebra.quiver();
        let maps = q
            .arrows()
            .iter()
            .enumerate()
            .map(|(k, a)| inv[a.dst].mul(&self.maps[k].mul(&bases[a.src], f), f))
            .collect();
        Ok(Representation { ctx: self.ctx.clone(), dims: self.dims.clone(), maps })
    }

    /// Indecomposable projective `P_i = e_i A`: spanned by the basis paths starting at `i`.
    pub fn projective(ctx: &Arc<RepContext>, i: usize) -> Representation {
        let a = &ctx.algebra;
        let q = a.quiver();
        let n = q.n();
        let dims: Vec<usize> = (0..n).map(|v| a.dim_slice(i, v)).collect();
        let maps = q
            .arrows()
            .iter()
            .enumerate()
            .map(|(k, ar)| {
                let mut m = Mat::zeros(dims[ar.dst], dims[ar.src]);
                for (y, col) in ctx.arrow_right[i][k].iter().enumerate() {
                    for &(r, c) in col {
                        m[(r, y)] = c;
                    }
                }
                m
            })
            .collect();
        Representation::from_parts(ctx.clone(), dims, maps)
    }

    /// Indecomposable injective `I_u = D(A e_u)`, with `I_u(w) = D(e_w A e_u)`.
    pub fn injective(ctx: &Arc<RepContext>, u: usize) -> Representation {
        let a = &ctx.algebra;
        let q = a.quiver();
        let n = q.n();
        let dims: Vec<usize> = (0..n).map(|w| a.dim_slice(w, u)).collect();
        let maps = q
            .arrows()
            .iter()
            .enumerate()
            .map(|(k, ar)| {
                // Entry (y, z) is the coefficient of z in a·y, for y: t→u and z: s→u.
                // Relations have length at least two, so every arrow is a basis path.
                let ai = a.basis(ar.src, ar.dst).iter().position(|p| p == &vec![k]).expect("arrow is a basis path");
                let mut m = Mat::zeros(dims[ar.dst], dims[ar.src]);
                for y in 0..dims[ar.dst] {
                    for &(z, c) in ctx.product(ar.src, ar.dst, u, ai, y) {
                        m[(y, z)] = c;
                    }
                }
                m
            })
            .collect();
        Representation::from_parts(ctx.clone(), dims, maps)
    }

    /// Simple module at `i`.
    pub fn simple(ctx: &Arc<RepContext>, i: usize) -> Representation {
        let q = ctx.algebra.quiver();
        let mut dims = vec![0; q.n()];
        dims[i] = 1;
        let maps = q.arrows().iter().map(|a| Mat::zeros(dims[a.dst], dims[a.src])).collect();
        Representation::from_parts(ctx.clone(), dims, maps)
    }

    /// Submodule spanned per vertex by the columns of `bases` (assumed closed
    /// under the arrows and linearly independent), with its inclusion.
    pub fn submodule(&self, bases: &[Mat]) -> (Representation, ModuleMap) {
        let f = self.field();
        let q = self.ctx.algebra.quiver();
        let dims: Vec<usize> = bases.iter().map(Mat::cols).collect();
        let maps = q
            .arrows()
            .iter()
            .enumerate()
            .map(|(k, a)| {
                let img = self.maps[k].mul(&bases[a.src], f);
                bases[a.dst].solve(&img, f).expect("subspace is not a submodule")
            })
            .collect();
        let sub = Representation::from_parts(self.ctx.clone(), dims, maps);
        (sub, ModuleMap { comps: bases.to_vec() })
    }

    /// Quotient by the submodule spanned by `bases`, with the projection.
    pub fn quotient(&self, bases: &[Mat]) -> (Representation, ModuleMap) {
        let f = self.field();
        let q = self.ctx.algebra.quiver();
        let n = q.n();
        let mut coords = Vec::with_capacity(n);
        let mut keep = Vec::with_capacity(n);
        for v in 0..n {
            let units = bases[v].complement_units(f);
            let mut full = bases[v].clone();
            for &u in &units {
                let mut e = Mat::zeros(self.dims[v], 1);
                e[(u, 0)] = 1;
                full = full.hstack(&e);
            }
            let inv = full.inverse(f).expect("basis is not independent");
            let rows: Vec<usize> = (bases[v].cols()..self.dims[v]).collect();
            coords.push(inv.select_rows(&rows));
            keep.push(units);
        }
        let dims: Vec<usize> = keep.iter().map(Vec::len).collect();
        let maps = q
            .arrows()
            .iter()
            .enumerate()
            .map(|(k, a)| {
                let lift = self.maps[k].select_columns(&keep[a.src]);
                coords[a.dst].mul(&lift, f)
            })
            .collect();
        let quo = Representation::from_parts(self.ctx.clone(), dims, maps);
        (quo, ModuleMap { comps: coords })
    }

    /// Radical `Σ_a im M_a` per vertex, as column bases.
    pub fn radical_bases(&self) -> Vec<Mat> {
        let f = self.field();
        let q = self.ctx.algebra.quiver();
        (0..q.n())
            .map(|v| {
                let mut span = Mat::zeros(self.dims[v], 0);
                for &a in q.in_arrows(v) {
                    span = span.hstack(&self.maps[a]);
                }
                span.column_basis(f)
            })
            .collect()
    }

    /// The radical as a submodule, and the multiplicities of the simples in the top.
    pub fn radical_and_top(&self) -> (Representation, Vec<usize>) {
        let rb = self.radical_bases();
        let top = (0..self.dims.len()).map(|v| self.dims[v] - rb[v].cols()).collect();
        (self.submodule(&rb).0, top)
    }

    /// Vertices of the top, with multiplicity.
    pub fn top(&self) -> Vec<usize> {
        self.radical_bases().iter().enumerate().map(|(v, r)| self.dims[v] - r.cols()).collect()
    }

    /// Image of a map into `self`, as column bases.
    pub fn image_bases(&self, maps: &[&ModuleMap]) -> Vec<Mat> {
        let f = self.field();
        (0..self.dims.len())
            .map(|v| {
                let mut span = Mat::zeros(self.dims[v], 0);
                for m in maps {
                    span = span.hstack(&m.comps[v]);
                }
                span.column_basis(f)
            })
            .collect()
    }

    /// Kernel of a map out of `self`, as column bases.
    pub fn kernel_bases(&self, map: &ModuleMap) -> Vec<Mat> {
        let f = self.field();
        map.comps.iter().map(|m| m.kernel(f)).collect()
    }

    /// Whether the per-vertex matrices intertwine the arrow actions.
    pub fn is_homomorphism(&self, target: &Representation, map: &ModuleMap) -> bool {
        let f = self.field();
        let q = self.ctx.algebra.quiver();
        q.arrows()
            .iter()
            .enumerate()
            .all(|(k, a)| target.maps[k].mul(&map.comps[a.src], f) == map.comps[a.dst].mul(&self.maps[k], f))
    }

    /// Debug dump: dimension vector and arrow matrices as row-major integer lists.
    pub fn dump(&self) -> String {
        let mut s = format!("dims {:?}\n", self.dims);
        for (k, m) in self.maps.iter().enumerate() {
            s.push_str(&format!("arrow {} {}x{} {:?}\n", k + 1, m.rows(), m.cols(), m.data()));
        }
        s
    }
}

/// Basis of `Hom(M, N)`.
pub fn hom_basis(m: &Representation, n: &Representation) -> Vec<ModuleMap> {
    let f = m.field();
    let q = m.ctx.algebra.quiver();
    let nv = q.n();
    // Unknown layout: vertex blocks of size dim N_v × dim M_v, row-major.
    let mut offset = vec![0usize; nv + 1];
    for v in 0..nv {
        offset[v + 1] = offset[v] + n.dims[v] * m.dims[v];
    }
    let unknowns = offset[nv];
    if unknowns == 0 {
        return Vec::new();
    }
    let rows: usize = q.arrows().iter().map(|a| n.dims[a.dst] * m.dims[a.src]).sum();
    let mut sys = Mat::zeros(rows, unknowns);
    let mut r0 = 0;
    for (k, a) in q.arrows().iter().enumerate() {
        let (s, t) = (a.src, a.dst);
        let (ms, nt, ns, mt) = (m.dims[s], n.dims[t], n.dims[s], m.dims[t]);
        if ms == 0 || nt == 0 {
            continue;
        }
        let na = &n.maps[k];
        let ma = &m.maps[k];
        // (N_a φ_s - φ_t M_a)[r][c] = 0
        for r in 0..nt {
            for c in 0..ms {
                let row = r0 + r * ms + c;
                for x in 0..ns {
                    let coef = na[(r, x)];
                    if coef != 0 {
                        let col = offset[s] + x * ms + c;
                        sys[(row, col)] = f.add(sys[(row, col)], coef);
                    }
                }
                for y in 0..mt {
                    let coef = ma[(y, c)];
                    if coef != 0 {
                        let col = offset[t] + r * mt + y;
                        sys[(row, col)] = f.sub(sys[(row, col)], coef);
                    }
                }
            }
        }
        r0 += nt * ms;
    }
    let ker = sys.kernel(f);
    (0..ker.cols())
        .map(|c| ModuleMap {
            comps: (0..nv)
                .map(|v| {
                    let data = (offset[v]..offset[v + 1]).map(|r| ker[(r, c)]).collect();
                    Mat::from_rows(n.dims[v], m.dims[v], data)
                })
                .collect(),
        })
        .collect()
}

pub fn dim_hom(m: &Representation, n: &Representation) -> usize {
    hom_basis(m, n).len()
}

/// Whether `M` is generated by the images of maps from `N`.
pub fn fac_membership(m: &Representation, n: &Representation) -> bool {
    let homs = hom_basis(n, m);
    let refs: Vec<&ModuleMap> = homs.iter().collect();
    let img = m.image_bases(&refs);
    img.iter().zip(m.dims()).all(|(b, &d)| b.cols() == d)
}

/// Cokernel of a map into `target`, with the projection.
pub fn cokernel(target: &Representation, map: &ModuleMap) -> (Representation, ModuleMap) {
    let img = target.image_bases(&[map]);
    target.quotient(&img)
}

#[cfg(test)]
pub(crate) mod tests {
    use super::*;
    use crate::families::{named_family, Family};

    pub(crate) fn ctx(fam: Family) -> Arc<RepContext> {
        RepContext::new(named_family(fam).unwrap(), 101).unwrap()
    }

    #[test]
    fn projectives_of_lambda4() {
        let c = ctx(Family::Lambda { n: 4 });
        let p1 = Representation::projective(&c, 0);
        assert_eq!(p1.dims(), &[1, 1, 1, 1]);
        let p4 = Representation::projective(&c, 3);
        assert_eq!(p4, Representation::simple(&c, 3));
        for i in 0..4 {
            let p = Representation::projective(&c, i);
            assert!(p.satisfies_relations());
            assert_eq!(p.top().iter().sum::<usize>(), 1);
            assert_eq!(p.top()[i], 1);
            let inj = Representation::injective(&c, i);
            assert!(inj.satisfies_relations());
        }
        let lin = ctx(Family::LinearA { n: 3 });
        assert_eq!(Representation::projective(&lin, 2), Representation::simple(&lin, 2));
    }

    #[test]
    fn hom_dimensions() {
        let c = ctx(Family::Lambda { n: 4 });
        let p: Vec<_> = (0..4).map(|i| Representation::projective(&c, i)).collect();
        assert_eq!(dim_hom(&p[1], &p[0]), 1);
        let m = Representation::direct_sum(&[&p[0], &p[2]]);
        for i in 0..4 {
            assert_eq!(dim_hom(&p[i], &m), m.dim(i));
        }
        for map in hom_basis(&p[0], &m) {
            assert!(p[0].is_homomorphism(&m, &map));
        }
        let a2 = ctx(Family::LinearA { n: 2 });
        assert_eq!(dim_hom(&Representation::simple(&a2, 0), &Representation::simple(&a2, 1)), 0);
    }

    #[test]
    fn radical_of_p1() {
        let c = ctx(Family::Lambda { n: 4 });
        let p1 = Representation::projective(&c, 0);
        let (rad, top) = p1.radical_and_top();
        assert_eq!(rad.dims(), &[0, 1, 1, 1]);
        assert_eq!(top, vec![1, 0, 0, 0]);
        assert_eq!(rad.top(), vec![0, 1, 1, 0]);
        let s = Representation::simple(&c, 2);
        assert!(s.radical_and_top().0.is_zero());
    }

    #[test]
    fn fac_examples() {
        let c = ctx(Family::Lambda { n: 4 });
        let p: Vec<_> = (0..4).map(|i| Representation::projective(&c, i)).collect();
        let s1 = Representation::simple(&c, 0);
        assert!(fac_membership(&s1, &p[0]));
        assert!(!fac_membership(&p[0], &s1));
        let rad = p[0].radical_and_top().0;
        assert!(fac_membership(&rad, &Representation::direct_sum(&[&p[1], &p[2]])));
        assert!(fac_membership(&rad, &Representation::direct_sum(&[&p[1], &p[2], &s1])));
    }
}
