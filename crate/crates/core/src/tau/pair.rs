//! Support τ-tilting pairs and left mutation.

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, RwLock};

use itertools::Itertools;

use crate::error::{Error, Result};
use crate::field::Mat;
use crate::rep::{
    cokernel, hom_basis, hom_to_tau_vanishes, is_indecomposable_certified, minimal_projective_presentation, ModuleMap,
    Presentation, RepContext, Representation,
};

/// An indecomposable τ-rigid module, interned by its g-vector.
pub struct TauRigidModule {
    id: usize,
    g_vector: Vec<i64>,
    module: Representation,
    presentation: Presentation,
}

impl TauRigidModule {
    pub fn id(&self) -> usize {
        self.id
    }

    pub fn g_vector(&self) -> &[i64] {
        &self.g_vector
    }

    pub fn module(&self) -> &Representation {
        &self.module
    }

    pub fn presentation(&self) -> &Presentation {
        &self.presentation
    }

    pub fn dims(&self) -> &[usize] {
        self.module.dims()
    }
}

impl fmt::Debug for TauRigidModule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "TauRigidModule(g={:?}, dims={:?})", self.g_vector, self.module.dims())
    }
}

/// Canonical key: g-vectors of the summands and `-e_j` for each complement vertex, sorted.
pub type PairKey = Vec<Vec<i64>>;

/// `(M, P)` with `M` basic support τ-tilting and `P = ⊕_{j ∈ complement} P_j`.
#[derive(Clone)]
pub struct SupportTauTiltingPair {
    summands: Vec<Arc<TauRigidModule>>,
    complement: Vec<usize>,
    n: usize,
}

impl fmt::Debug for SupportTauTiltingPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("SupportTauTiltingPair")
            .field("summands", &self.summands.iter().map(|m| &m.g_vector).collect_vec())
            .field("complement", &self.complement)
            .finish()
    }
}

impl SupportTauTiltingPair {
    fn from_summands(mut summands: Vec<Arc<TauRigidModule>>, n: usize) -> Self {
        summands.sort_by(|a, b| a.g_vector.cmp(&b.g_vector));
        let mut supported = vec![false; n];
        for m in &summands {
            for v in m.module.support() {
                supported[v] = true;
            }
        }
        let complement = (0..n).filter(|&v| !supported[v]).collect();
        SupportTauTiltingPair { summands, complement, n }
    }

    /// Summands ordered by g-vector.
    pub fn summands(&self) -> &[Arc<TauRigidModule>] {
        &self.summands
    }

    pub fn complement_vertices(&self) -> &[usize] {
        &self.complement
    }

    pub fn support(&self) -> Vec<usize> {
        (0..self.n).filter(|v| !self.complement.contains(v)).collect()
    }

    /// `|M|`, which equals the number of supported vertices.
    pub fn support_rank(&self) -> usize {
        self.summands.len()
    }

    pub fn is_tau_tilting(&self) -> bool {
        self.complement.is_empty()
    }

    pub fn key(&self) -> PairKey {
        let mut key: PairKey = self.summands.iter().map(|m| m.g_vector.clone()).collect();
        for &j in &self.complement {
            let mut e = vec![0; self.n];
            e[j] = -1;
            key.push(e);
        }
        key.sort();
        key
    }

    /// `M` as a single module (zero when there are no summands).
    pub fn module(&self, ctx: &Arc<RepContext>) -> Representation {
        if self.summands.is_empty() {
            return Representation::zero(ctx);
        }
        Representation::direct_sum(&self.summands.iter().map(|m| &m.module).collect_vec())
    }

    /// Dimension vectors of the summands, sorted.
    pub fn dimension_vectors(&self) -> Vec<Vec<usize>> {
        self.summands.iter().map(|m| m.module.dims().to_vec()).sorted().collect()
    }
}

#[derive(Default)]
struct Interner {
    modules: Vec<Arc<TauRigidModule>>,
    by_g: HashMap<Vec<i64>, usize>,
}

/// Interned τ-rigid modules with cached Hom spaces and τ-orthogonality checks,
/// shared across worker threads.
pub struct ModuleRegistry {
    ctx: Arc<RepContext>,
    validate: bool,
    interner: RwLock<Interner>,
    homs: RwLock<HashMap<(usize, usize), Arc<Vec<ModuleMap>>>>,
    rad_ends: RwLock<HashMap<usize, Arc<Vec<ModuleMap>>>>,
    tau_free: RwLock<HashMap<(usize, usize), bool>>,
}

impl ModuleRegistry {
    /// With `validate`, every new module is certified indecomposable and
    /// τ-rigid, and every new pair is re-checked for pairwise τ-rigidity.
    pub fn new(ctx: Arc<RepContext>, validate: bool) -> Self {
        ModuleRegistry {
            ctx,
            validate,
            interner: RwLock::default(),
            homs: RwLock::default(),
            rad_ends: RwLock::default(),
            tau_free: RwLock::default(),
        }
    }

    pub fn ctx(&self) -> &Arc<RepContext> {
        &self.ctx
    }

    pub fn len(&self) -> usize {
        self.interner.read().unwrap().modules.len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// All interned modules, sorted by g-vector.
    pub fn modules(&self) -> Vec<Arc<TauRigidModule>> {
        let guard = self.interner.read().unwrap();
        guard.modules.iter().cloned().sorted_by(|a, b| a.g_vector.cmp(&b.g_vector)).collect()
    }

    pub fn get(&self, g: &[i64]) -> Option<Arc<TauRigidModule>> {
        let guard = self.interner.read().unwrap();
        guard.by_g.get(g).map(|&i| guard.modules[i].clone())
    }

    /// Interns a nonzero module assumed indecomposable τ-rigid; an existing
    /// entry with the same g-vector is returned instead.
    pub fn intern(&self, module: Representation) -> Result<Arc<TauRigidModule>> {
        let presentation = minimal_projective_presentation(&module)?;
        let g = presentation.g_vector(self.ctx.n());
        if let Some(found) = self.get(&g) {
            return Ok(found);
        }
        if self.validate {
            if !is_indecomposable_certified(&module)? {
                return Err(Error::Uncertified(format!("module with g-vector {g:?} decomposes")));
            }
            if !hom_to_tau_vanishes(&module, &presentation) {
                return Err(Error::Uncertified(format!("module with g-vector {g:?} is not τ-rigid")));
            }
        }
        let mut guard = self.interner.write().unwrap();
        if let Some(&i) = guard.by_g.get(&g) {
            return Ok(guard.modules[i].clone());
        }
        let id = guard.modules.len();
        let entry = Arc::new(TauRigidModule { id, g_vector: g.clone(), module, presentation });
        guard.modules.push(entry.clone());
        guard.by_g.insert(g, id);
        Ok(entry)
    }

    /// The pair `(A, 0)`.
    pub fn initial_pair(&self) -> Result<SupportTauTiltingPair> {
        let summands = (0..self.ctx.n())
            .map(|i| self.intern(Representation::projective(&self.ctx, i)))
            .collect::<Result<Vec<_>>>()?;
        Ok(SupportTauTiltingPair::from_summands(summands, self.ctx.n()))
    }

    pub fn hom(&self, x: &TauRigidModule, y: &TauRigidModule) -> Arc<Vec<ModuleMap>> {
        let key = (x.id, y.id);
        if let Some(h) = self.homs.read().unwrap().get(&key) {
            return h.clone();
        }
        let h = Arc::new(hom_basis(&x.module, &y.module));
        self.homs.write().unwrap().entry(key).or_insert(h).clone()
    }

    /// Basis of `rad End(X)`: the trace-free parts of a basis of `End(X)`.
    fn rad_end(&self, x: &TauRigidModule) -> Arc<Vec<ModuleMap>> {
        if let Some(r) = self.rad_ends.read().unwrap().get(&x.id) {
            return r.clone();
        }
        let f = self.ctx.field();
        let end = self.hom(x, x);
        let d = x.module.total_dim() as u32;
        let dinv = f.inv(d % f.p());
        let id = ModuleMap::identity(&x.module);
        let parts = end
            .iter()
            .map(|b| {
                let mut r = b.clone();
                r.add_scaled(&id, f.neg(f.mul(b.trace(f), dinv)), f);
                r
            })
            .collect_vec();
        let r = Arc::new(independent(&parts, f));
        self.rad_ends.write().unwrap().entry(x.id).or_insert(r).clone()
    }

    /// `Hom(X, τY) = 0`.
    pub fn tau_orthogonal(&self, x: &TauRigidModule, y: &TauRigidModule) -> bool {
        let key = (x.id, y.id);
        if let Some(&b) = self.tau_free.read().unwrap().get(&key) {
            return b;
        }
        let b = hom_to_tau_vanishes(&x.module, &y.presentation);
        self.tau_free.write().unwrap().insert(key, b);
        b
    }

    /// Whether `X` is generated by the images of maps from the given modules.
    pub fn in_fac(&self, x: &TauRigidModule, gens: &[&TauRigidModule]) -> bool {
        let homs = gens.iter().map(|n| self.hom(n, x)).collect_vec();
        let maps = homs.iter().flat_map(|h| h.iter()).collect_vec();
        let img = x.module.image_bases(&maps);
        img.iter().zip(x.module.dims()).all(|(b, &d)| b.cols() == d)
    }

    /// Minimal left `add(N)`-approximation `X → N'` as a list of `(i, φ)`
    /// with `φ : X → N_i`, one entry per copy of `N_i` in `N'`.
    pub fn minimal_left_approximation(&self, x: &TauRigidModule, rest: &[&TauRigidModule]) -> Vec<(usize, ModuleMap)> {
        let f = self.ctx.field();
        let to_rest = rest.iter().map(|n| self.hom(x, n)).collect_vec();
        let mut out = Vec::new();
        for (i, ni) in rest.iter().enumerate() {
            if to_rest[i].is_empty() {
                continue;
            }
            // Maps X → N_i that factor through a radical map N_j → N_i.
            let mut through_rad: Vec<Vec<u32>> = Vec::new();
            for (j, nj) in rest.iter().enumerate() {
                if to_rest[j].is_empty() {
                    continue;
                }
                let rad = if i == j { self.rad_end(ni) } else { self.hom(nj, ni) };
                for g in rad.iter() {
                    for h in to_rest[j].iter() {
                        let c = h.then(g, f);
                        if !c.is_zero() {
                            through_rad.push(c.flatten());
                        }
                    }
                }
            }
            let len = to_rest[i][0].flatten().len();
            let s = through_rad.len();
            let mut cols = through_rad;
            cols.extend(to_rest[i].iter().map(ModuleMap::flatten));
            let pivots = Mat::from_columns(len, &cols).echelon(f).pivots;
            for &c in pivots.iter().filter(|&&c| c >= s) {
                out.push((i, to_rest[i][c - s].clone()));
            }
        }
        out
    }

    /// Left mutation of `T` at its `idx`-th summand.
    pub fn left_mutation(&self, t: &SupportTauTiltingPair, idx: usize) -> Result<SupportTauTiltingPair> {
        let x = &t.summands[idx];
        let rest = t.summands.iter().enumerate().filter(|&(k, _)| k != idx).map(|(_, m)| m.as_ref()).collect_vec();
        if self.in_fac(x, &rest) {
            return Err(Error::NotDescent(idx));
        }
        let approx = self.minimal_left_approximation(x, &rest);
        let mut summands =
            t.summands.iter().enumerate().filter(|&(k, _)| k != idx).map(|(_, m)| m.clone()).collect_vec();
        let mut fresh = None;
        if !approx.is_empty() {
            let parts = approx.iter().map(|(i, _)| &rest[*i].module).collect_vec();
            let target = Representation::direct_sum(&parts);
            let comps = (0..self.ctx.n())
                .map(|v| {
                    approx
                        .iter()
                        .map(|(_, phi)| phi.comps[v].clone())
                        .reduce(|a, b| a.vstack(&b))
                        .expect("nonempty approximation")
                })
                .collect();
            let (y, _) = cokernel(&target, &ModuleMap { comps });
            if !y.is_zero() {
                let y = self.intern(y)?;
                summands.push(y.clone());
                fresh = Some(y);
            }
        }
        let pair = SupportTauTiltingPair::from_summands(summands, self.ctx.n());
        self.check_pair(&pair, fresh.as_deref())?;
        Ok(pair)
    }

    /// Structural invariants, plus τ-rigidity against `fresh` in validate mode.
    fn check_pair(&self, pair: &SupportTauTiltingPair, fresh: Option<&TauRigidModule>) -> Result<()> {
        if pair.summands.len() + pair.complement.len() != self.ctx.n() {
            return Err(Error::Uncertified(format!(
                "pair {:?} has {} summands and {} complement vertices",
                pair.key(),
                pair.summands.len(),
                pair.complement.len()
            )));
        }
        if let (true, Some(y)) = (self.validate, fresh) {
            for m in &pair.summands {
                if !self.tau_orthogonal(m, y) || !self.tau_orthogonal(y, m) {
                    return Err(Error::Uncertified(format!(
                        "g-vectors {:?} and {:?} are not τ-orthogonal",
                        m.g_vector, y.g_vector
                    )));
                }
            }
        }
        Ok(())
    }

    /// Full invariant check of a pair: pairwise τ-rigidity, disjoint support
    /// and complement, `|M| + |P| = |A|`.
    pub fn validate_pair(&self, pair: &SupportTauTiltingPair) -> bool {
        let n = self.ctx.n();
        let count_ok = pair.summands.len() + pair.complement.len() == n;
        let disjoint = pair.summands.iter().all(|m| pair.complement.iter().all(|&j| m.module.dim(j) == 0));
        let rigid =
            pair.summands.iter().cartesian_product(pair.summands.iter()).all(|(a, b)| self.tau_orthogonal(a, b));
        count_ok && disjoint && rigid
    }
}

/// A linearly independent subset spanning the same space.
fn independent(maps: &[ModuleMap], f: &crate::field::Fp) -> Vec<ModuleMap> {
    let nonzero = maps.iter().filter(|m| !m.is_zero()).collect_vec();
    if nonzero.is_empty() {
        return Vec::new();
    }
    let cols = nonzero.iter().map(|m| m.flatten()).collect_vec();
    let pivots = Mat::from_columns(cols[0].len(), &cols).echelon(f).pivots;
    pivots.into_iter().map(|c| nonzero[c].clone()).collect()
}
