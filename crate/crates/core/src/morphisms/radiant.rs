//! Radiants (homomorphisms of constellations) and functors.

use crate::error::MorphismError;
use crate::magma::Elem;
use crate::partition::Partition;
use crate::structure::{Category, Constellation};

/// Why a map fails to be a radiant.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RadiantFailure {
    /// `s · t` exists but `sρ · tρ` does not.
    ProductLost { s: Elem, t: Elem },
    /// `sρ · tρ` exists but differs from `(s · t)ρ`.
    ProductMismatch { s: Elem, t: Elem },
    /// `D(s)ρ ≠ D(sρ)`.
    DomainMismatch { s: Elem },
}

/// Every property of a total map `P → Q`, each computed from scratch.
/// `strong`, `full` and `projection_separating` are only ever true for
/// radiants.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MorphismWitness {
    pub map: Vec<Elem>,
    pub radiant: bool,
    pub strong: bool,
    pub full: bool,
    pub projection_separating: bool,
    pub injective: bool,
    pub surjective: bool,
    /// Set only by functor checks: radiant and `R(s)ρ = R(sρ)`.
    pub functor: Option<bool>,
    pub radiant_failure: Option<RadiantFailure>,
    /// `(s, t)` with `sρ · tρ` defined but `s · t` undefined.
    pub strong_failure: Option<(Elem, Elem)>,
    /// `(s, t)` whose image product is not reached by any fibre pair.
    pub full_failure: Option<(Elem, Elem)>,
    /// Distinct projections with the same image.
    pub separation_failure: Option<(Elem, Elem)>,
    /// Distinct elements with the same image.
    pub collision: Option<(Elem, Elem)>,
    /// First element of `Q` outside the image.
    pub missed: Option<Elem>,
    /// First `s` with `R(s)ρ ≠ R(sρ)` (functor checks only).
    pub range_failure: Option<Elem>,
}

impl MorphismWitness {
    pub fn embedding(&self) -> bool {
        self.radiant && self.strong && self.injective
    }

    pub fn isomorphism(&self) -> bool {
        self.embedding() && self.surjective
    }
}

pub(crate) fn validate_map(map: &[Elem], source: usize, target: usize) -> Result<(), MorphismError> {
    if map.len() != source {
        return Err(MorphismError::MapLength {
            expected: source,
            got: map.len(),
        });
    }
    if let Some((element, &image)) = map.iter().enumerate().find(|(_, &y)| y >= target) {
        return Err(MorphismError::MapOutOfRange { element, image });
    }
    Ok(())
}

fn radiant_failure(map: &[Elem], p: &Constellation, q: &Constellation) -> Option<RadiantFailure> {
    for s in 0..p.len() {
        if map[p.d(s)] != q.d(map[s]) {
            return Some(RadiantFailure::DomainMismatch { s });
        }
    }
    for (s, t, st) in p.magma().products() {
        match q.mul(map[s], map[t]) {
            None => return Some(RadiantFailure::ProductLost { s, t }),
            Some(u) if u != map[st] => return Some(RadiantFailure::ProductMismatch { s, t }),
            _ => {}
        }
    }
    None
}

fn strong_failure(map: &[Elem], p: &Constellation, q: &Constellation) -> Option<(Elem, Elem)> {
    (0..p.len())
        .flat_map(|s| (0..p.len()).map(move |t| (s, t)))
        .find(|&(s, t)| q.defined(map[s], map[t]) && !p.defined(s, t))
}

fn full_failure(map: &[Elem], p: &Constellation, q: &Constellation) -> Option<(Elem, Elem)> {
    let m = q.len();
    let mut in_image = vec![false; m];
    let mut reached = vec![false; m * m];
    for &y in map {
        in_image[y] = true;
    }
    for (s, t, _) in p.magma().products() {
        reached[map[s] * m + map[t]] = true;
    }
    (0..p.len())
        .flat_map(|s| (0..p.len()).map(move |t| (s, t)))
        .find(|&(s, t)| {
            let (u, v) = (map[s], map[t]);
            matches!(q.mul(u, v), Some(w) if in_image[w]) && !reached[u * m + v]
        })
}

fn collision(map: &[Elem], candidates: &[Elem]) -> Option<(Elem, Elem)> {
    candidates.iter().enumerate().find_map(|(i, &a)| {
        candidates[i + 1..]
            .iter()
            .find(|&&b| map[a] == map[b])
            .map(|&b| (a, b))
    })
}

/// Checks every property of `map: P → Q`.
pub fn check_radiant(map: &[Elem], p: &Constellation, q: &Constellation) -> Result<MorphismWitness, MorphismError> {
    validate_map(map, p.len(), q.len())?;
    let radiant_failure = radiant_failure(map, p, q);
    let radiant = radiant_failure.is_none();
    let strong_failure = strong_failure(map, p, q);
    let full_failure = full_failure(map, p, q);
    let separation_failure = collision(map, p.projections());
    let all: Vec<Elem> = (0..p.len()).collect();
    let collision = collision(map, &all);
    let mut hit = vec![false; q.len()];
    for &y in map {
        hit[y] = true;
    }
    let missed = hit.iter().position(|&h| !h);
    Ok(MorphismWitness {
        map: map.to_vec(),
        radiant,
        strong: radiant && strong_failure.is_none(),
        full: radiant && full_failure.is_none(),
        projection_separating: radiant && separation_failure.is_none(),
        injective: collision.is_none(),
        surjective: missed.is_none(),
        functor: None,
        radiant_failure,
        strong_failure,
        full_failure,
        separation_failure,
        collision,
        missed,
        range_failure: None,
    })
}

fn require_radiant(map: &[Elem], p: &Constellation, q: &Constellation) -> Result<MorphismWitness, MorphismError> {
    let w = check_radiant(map, p, q)?;
    if w.radiant {
        Ok(w)
    } else {
        Err(MorphismError::NotARadiant)
    }
}

pub fn check_strong(map: &[Elem], p: &Constellation, q: &Constellation) -> Result<bool, MorphismError> {
    Ok(require_radiant(map, p, q)?.strong)
}

pub fn check_full(map: &[Elem], p: &Constellation, q: &Constellation) -> Result<bool, MorphismError> {
    Ok(require_radiant(map, p, q)?.full)
}

pub fn check_projection_separating(map: &[Elem], p: &Constellation, q: &Constellation) -> Result<bool, MorphismError> {
    Ok(require_radiant(map, p, q)?.projection_separating)
}

/// Radiant check on the reducts, plus `R(s)ρ = R(sρ)`.
pub fn check_functor(map: &[Elem], k: &Category, l: &Category) -> Result<MorphismWitness, MorphismError> {
    let mut w = check_radiant(map, &k.reduct(), &l.reduct())?;
    w.range_failure = (0..k.len()).find(|&s| map[k.r(s)] != l.r(map[s]));
    w.functor = Some(w.radiant && w.range_failure.is_none());
    Ok(w)
}

/// `ker(ρ)`: elements with equal images.
pub fn kernel_partition(map: &[Elem]) -> Partition {
    Partition::from_class_ids(map)
}

/// `x ↦ g(f(x))`.
pub fn compose_maps(f: &[Elem], g: &[Elem]) -> Vec<Elem> {
    f.iter().map(|&y| g[y]).collect()
}

pub fn identity_map(n: usize) -> Vec<Elem> {
    (0..n).collect()
}
