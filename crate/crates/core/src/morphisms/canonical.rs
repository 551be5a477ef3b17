//! Functors between canonical extensions.

use crate::constructions::CanonicalExtension;
use crate::error::MorphismError;
use crate::magma::Elem;
use crate::morphisms::radiant::{check_functor, check_radiant, compose_maps, MorphismWitness};
use crate::structure::{Category, Constellation};

/// Largest category for which uniqueness of the universal functor is
/// confirmed by exhaustive search.
pub const UNIQUENESS_LIMIT: usize = 8;

/// The radiant `C(P) → P`, `(s, e) ↦ s`.
pub fn projection_radiant(cp: &CanonicalExtension) -> Vec<Elem> {
    cp.pairs.iter().map(|&(s, _)| s).collect()
}

fn require_radiant(map: &[Elem], p: &Constellation, q: &Constellation) -> Result<MorphismWitness, MorphismError> {
    let w = check_radiant(map, p, q)?;
    if w.radiant {
        Ok(w)
    } else {
        Err(MorphismError::NotARadiant)
    }
}

/// `F_ρ: C(P) → C(Q)`, `(s, e) ↦ (sρ, eρ)`.
pub fn canonical_functor(
    rho: &[Elem],
    cp: &CanonicalExtension,
    cq: &CanonicalExtension,
) -> Result<MorphismWitness, MorphismError> {
    require_radiant(rho, &cp.base, &cq.base)?;
    let map: Vec<Elem> = cp
        .pairs
        .iter()
        .map(|&(s, e)| {
            cq.pair_index(rho[s], rho[e])
                .expect("a radiant sends pairs of C(P) to pairs of C(Q)")
        })
        .collect();
    check_functor(&map, &cp.category, &cq.category)
}

#[derive(Clone, Debug)]
pub struct UniversalFunctor {
    pub witness: MorphismWitness,
    /// `F` followed by `C(P) → P` equals `f`, element by element.
    pub factorizes: bool,
    /// Whether `F` is the only functor that factorizes `f`; `None` when the
    /// search was skipped.
    pub unique: Option<bool>,
}

/// `F: K → C(P)`, `a ↦ (af, R(a)f)`, for a radiant `f: K → P`. With
/// `check_uniqueness`, categories of at most [`UNIQUENESS_LIMIT`]
/// elements are searched exhaustively for other factorizing functors.
pub fn universal_functor(
    f: &[Elem],
    k: &Category,
    cp: &CanonicalExtension,
    check_uniqueness: bool,
) -> Result<UniversalFunctor, MorphismError> {
    require_radiant(f, &k.reduct(), &cp.base)?;
    let map: Vec<Elem> = (0..k.len())
        .map(|a| {
            cp.pair_index(f[a], f[k.r(a)])
                .expect("(af, R(a)f) is a pair of C(P)")
        })
        .collect();
    let factorizes = compose_maps(&map, &projection_radiant(cp)) == f;
    let witness = check_functor(&map, k, &cp.category)?;
    let unique = (check_uniqueness && k.len() <= UNIQUENESS_LIMIT).then(|| count_factorizing(f, k, cp, 2) == 1);
    Ok(UniversalFunctor {
        witness,
        factorizes,
        unique,
    })
}

/// Number of functors `G: K → C(P)` with `G` then `C(P) → P` equal to `f`,
/// stopping once `limit` are found.
fn count_factorizing(f: &[Elem], k: &Category, cp: &CanonicalExtension, limit: usize) -> usize {
    let n = k.len();
    let candidates: Vec<Vec<Elem>> = (0..n)
        .map(|a| {
            cp.base
                .right_projections(f[a])
                .map(|e| cp.pair_index(f[a], e).expect("right projection gives a pair"))
                .collect()
        })
        .collect();
    let mut g: Vec<Option<Elem>> = vec![None; n];
    let mut found = 0;
    search(0, k, cp, &candidates, &mut g, &mut found, limit);
    found
}

fn consistent(a: Elem, k: &Category, cp: &CanonicalExtension, g: &[Option<Elem>]) -> bool {
    let c = &cp.category;
    let ga = g[a].expect("a is assigned");
    if g[k.d(a)].is_some_and(|gd| gd != c.d(ga)) || g[k.r(a)].is_some_and(|gr| gr != c.r(ga)) {
        return false;
    }
    for x in 0..k.len() {
        if k.d(x) == a && g[x].is_some_and(|gx| c.d(gx) != ga) {
            return false;
        }
        if k.r(x) == a && g[x].is_some_and(|gx| c.r(gx) != ga) {
            return false;
        }
    }
    for x in 0..k.len() {
        for y in 0..k.len() {
            let Some(xy) = k.mul(x, y) else { continue };
            if x != a && y != a && xy != a {
                continue;
            }
            if let (Some(gx), Some(gy), Some(gxy)) = (g[x], g[y], g[xy]) {
                if c.mul(gx, gy) != Some(gxy) {
                    return false;
                }
            }
        }
    }
    true
}

fn search(
    a: Elem,
    k: &Category,
    cp: &CanonicalExtension,
    candidates: &[Vec<Elem>],
    g: &mut Vec<Option<Elem>>,
    found: &mut usize,
    limit: usize,
) {
    if *found >= limit {
        return;
    }
    if a == k.len() {
        *found += 1;
        return;
    }
    for &cand in &candidates[a] {
        g[a] = Some(cand);
        if consistent(a, k, cp, g) {
            search(a + 1, k, cp, candidates, g, found, limit);
        }
    }
    g[a] = None;
}
