//! Direct-sum decomposition by splitting with endomorphisms.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::field::Mat;
use crate::poly;

use super::{hom_basis, ModuleMap, Representation};

/// Indecomposable summands with multiplicities, in order of discovery.
pub type Decomposition = Vec<(Representation, usize)>;

const SPLIT_ATTEMPTS: usize = 24;
const ISO_ATTEMPTS: usize = 32;

fn rng_for(m: &Representation, salt: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(m.content_hash() ^ salt.wrapping_mul(0x9e37_79b9_7f4a_7c15))
}

fn check_field(m: &Representation) -> Result<()> {
    let p = m.field().p() as usize;
    if p <= m.total_dim() {
        return Err(Error::InvalidParameter(format!(
            "field characteristic {p} must exceed the module dimension {}",
            m.total_dim()
        )));
    }
    Ok(())
}

/// `End(M)` is local with residue field `F_p`: the trace-free parts of a basis
/// of `End(M)` generate a nilpotent algebra.
fn local_certificate(m: &Representation, end: &[ModuleMap]) -> bool {
    let f = m.field();
    let d = m.total_dim() as u32;
    let dinv = f.inv(d % f.p());
    let id = ModuleMap::identity(m);
    let nil: Vec<ModuleMap> = end
        .iter()
        .map(|b| {
            let lambda = f.mul(b.trace(f), dinv);
            let mut x = b.clone();
            x.add_scaled(&id, f.neg(lambda), f);
            x
        })
        .collect();
    let span = |maps: Vec<ModuleMap>| -> Vec<ModuleMap> {
        if maps.is_empty() {
            return maps;
        }
        let rows: Vec<Vec<u32>> = maps.iter().map(ModuleMap::flatten).collect();
        let mat = Mat::from_columns(rows[0].len(), &rows);
        mat.echelon(f).pivots.iter().map(|&c| maps[c].clone()).collect()
    };
    let gens = span(nil);
    let mut words = gens.clone();
    for _ in 0..=d {
        if words.iter().all(ModuleMap::is_zero) {
            return true;
        }
        let mut next = Vec::with_capacity(words.len() * gens.len());
        for w in &words {
            for g in &gens {
                next.push(w.then(g, f));
            }
        }
        words = span(next.into_iter().filter(|x| !x.is_zero()).collect());
    }
    words.is_empty()
}

fn random_combination<R: Rng>(end: &[ModuleMap], m: &Representation, rng: &mut R) -> ModuleMap {
    let p = m.field().p();
    let coeffs: Vec<u32> = end.iter().map(|_| rng.gen_range(0..p)).collect();
    ModuleMap::combination(end, &coeffs, m.field())
}

/// Tries to split `M` along a random endomorphism; `None` if this one does not split it.
fn try_split(m: &Representation, phi: &ModuleMap) -> Option<(Vec<Mat>, Vec<Mat>)> {
    let f = m.field();
    let mut chi: poly::Poly = vec![1];
    for c in &phi.comps {
        if c.rows() > 0 {
            chi = poly::mul(&chi, &c.charpoly(f), f);
        }
    }
    let s = poly::squarefree(&chi, f);
    let mut rng = rng_for(m, 17);
    let a = poly::proper_factor(&s, f, &mut rng)?;
    let b = poly::divrem(&s, &a, f).0;
    let gen_kernel = |q: &poly::Poly| -> Vec<Mat> {
        phi.comps
            .iter()
            .map(|c| {
                let e = poly::eval_mat(q, c, f).pow(c.rows().max(1) as u64, f);
                e.kernel(f)
            })
            .collect()
    };
    Some((gen_kernel(&a), gen_kernel(&b)))
}

fn split_rec(m: &Representation, out: &mut Vec<Representation>) -> Result<()> {
    if m.is_zero() {
        return Ok(());
    }
    let end = hom_basis(m, m);
    if end.len() == 1 || local_certificate(m, &end) {
        out.push(m.clone());
        return Ok(());
    }
    let mut rng = rng_for(m, 1);
    for _ in 0..SPLIT_ATTEMPTS {
        let phi = random_combination(&end, m, &mut rng);
        if let Some((ka, kb)) = try_split(m, &phi) {
            let (x, _) = m.submodule(&ka);
            let (y, _) = m.submodule(&kb);
            debug_assert_eq!(x.total_dim() + y.total_dim(), m.total_dim());
            split_rec(&x, out)?;
            split_rec(&y, out)?;
            return Ok(());
        }
    }
    Err(Error::Uncertified(format!("no splitting endomorphism found for module with dimension vector {:?}", m.dims())))
}

/// Splits `M` into certified indecomposables and groups isomorphic ones.
pub fn decompose(m: &Representation) -> Result<Decomposition> {
    check_field(m)?;
    let mut pieces = Vec::new();
    split_rec(m, &mut pieces)?;
    let mut groups: Decomposition = Vec::new();
    'next: for piece in pieces {
        for (rep, mult) in groups.iter_mut() {
            if is_isomorphic(rep, &piece) {
                *mult += 1;
                continue 'next;
            }
        }
        groups.push((piece, 1));
    }
    Ok(groups)
}

/// `Ok(true)` for a certified indecomposable, `Ok(false)` when a splitting exists.
pub fn is_indecomposable_certified(m: &Representation) -> Result<bool> {
    if m.is_zero() {
        return Ok(false);
    }
    check_field(m)?;
    let end = hom_basis(m, m);
    if end.len() == 1 || local_certificate(m, &end) {
        return Ok(true);
    }
    let mut rng = rng_for(m, 1);
    for _ in 0..SPLIT_ATTEMPTS {
        let phi = random_combination(&end, m, &mut rng);
        if try_split(m, &phi).is_some() {
            return Ok(false);
        }
    }
    Err(Error::Uncertified(format!("module with dimension vector {:?}", m.dims())))
}

/// Exhibits an invertible homomorphism `M → N` if one is found.
pub fn find_isomorphism(m: &Representation, n: &Representation) -> Option<ModuleMap> {
    if m.dims() != n.dims() {
        return None;
    }
    if m.is_zero() {
        return Some(ModuleMap::zero(m, n));
    }
    let f = m.field();
    let hom = hom_basis(m, n);
    if hom.is_empty() {
        return None;
    }
    let mut rng = ChaCha8Rng::seed_from_u64(m.content_hash() ^ n.content_hash().rotate_left(1));
    for _ in 0..ISO_ATTEMPTS {
        let phi = random_combination(&hom, m, &mut rng);
        if phi.is_invertible(f) {
            return Some(phi);
        }
    }
    // Small spaces: every line of the span.
    if hom.len() == 1 {
        return hom[0].is_invertible(f).then(|| hom[0].clone());
    }
    if hom.len() == 2 {
        if hom[1].is_invertible(f) {
            return Some(hom[1].clone());
        }
        for t in 0..f.p() {
            let phi = ModuleMap::combination(&hom, &[1, t], f);
            if phi.is_invertible(f) {
                return Some(phi);
            }
        }
    }
    None
}

pub fn is_isomorphic(m: &Representation, n: &Representation) -> bool {
    if m.dims() != n.dims() {
        return false;
    }
    if !m.is_zero() {
        let gm = super::g_vector(m).expect("nonzero");
        let gn = super::g_vector(n).expect("nonzero");
        if gm != gn {
            return false;
        }
    }
    find_isomorphism(m, n).is_some()
}
