//! Passing between composable constellations and categories with a
//! distinguished canonical congruence.

use crate::congruences::quotient::quotient;
use crate::congruences::report::analyze_partition;
use crate::constructions::{canonical_extension, CanonicalExtension};
use crate::derived::incomposable_witness;
use crate::error::CongruenceError;
use crate::magma::Elem;
use crate::morphisms::{check_functor, MorphismWitness};
use crate::partition::Partition;
use crate::structure::{Category, Constellation};

/// A category with a canonical congruence on it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DeltaCategory {
    pub category: Category,
    pub delta: Partition,
}

impl DeltaCategory {
    pub fn new(category: Category, delta: Partition) -> Result<Self, CongruenceError> {
        if delta.len() != category.len() {
            return Err(CongruenceError::BadPartition(format!(
                "partition covers {} elements, category has {}",
                delta.len(),
                category.len()
            )));
        }
        if !analyze_partition(&category.reduct(), &delta).canonical {
            return Err(CongruenceError::NotCanonical);
        }
        Ok(Self { category, delta })
    }

    /// `K/δ`, always a composable constellation.
    pub fn quotient(&self) -> Constellation {
        quotient(&self.category.reduct(), &self.delta)
            .expect("canonical congruences are congruences")
            .outcome
            .expect("canonical quotients are constellations")
    }
}

/// A functor that also maps `δ₁`-related elements to `δ₂`-related ones.
pub fn is_delta_functor(map: &[Elem], a: &DeltaCategory, b: &DeltaCategory) -> Result<bool, CongruenceError> {
    let w = check_functor(map, &a.category, &b.category)?;
    Ok(w.functor == Some(true) && a.delta.pairs().all(|(x, y)| b.delta.related(map[x], map[y])))
}

/// `∼` on `C(P)`: `(a, e) ∼ (b, f)` iff `a = b`.
pub fn canonical_tilde(p: &Constellation) -> Result<(CanonicalExtension, Partition), CongruenceError> {
    if let Some(x) = incomposable_witness(p) {
        return Err(CongruenceError::NotComposable(p.label(x).to_string()));
    }
    let cp = canonical_extension(p);
    let ids: Vec<usize> = cp.pairs.iter().map(|&(s, _)| s).collect();
    let tilde = Partition::from_class_ids(&ids);
    Ok((cp, tilde))
}

/// `(C(P), ∼)`.
pub fn delta_category_of(p: &Constellation) -> Result<DeltaCategory, CongruenceError> {
    let (cp, tilde) = canonical_tilde(p)?;
    Ok(DeltaCategory {
        category: cp.category,
        delta: tilde,
    })
}

#[derive(Clone, Debug)]
pub struct Reconstruction {
    pub quotient: Constellation,
    pub extension: CanonicalExtension,
    /// `s ↦ ([s], [R(s)])` checked as a functor `K → C(K/δ)`.
    pub witness: MorphismWitness,
    /// `s δ t` iff the images are `∼`-related, for all `s, t`.
    pub delta_isomorphism: bool,
}

impl Reconstruction {
    pub fn category_isomorphism(&self) -> bool {
        self.witness.functor == Some(true) && self.witness.isomorphism()
    }
}

/// Rebuilds `K` as `C(K/δ)` through `s ↦ ([s], [R(s)])`.
pub fn canonical_reconstruction(k: &Category, delta: &Partition) -> Result<Reconstruction, CongruenceError> {
    let dk = DeltaCategory::new(k.clone(), delta.clone())?;
    let q = dk.quotient();
    let extension = canonical_extension(&q);
    let map: Vec<Elem> = (0..k.len())
        .map(|s| {
            extension
                .pair_index(delta.class_of(s), delta.class_of(k.r(s)))
                .expect("([s], [R(s)]) is a pair of C(K/δ)")
        })
        .collect();
    let witness = check_functor(&map, k, &extension.category)?;
    let n = k.len();
    let delta_isomorphism = (0..n).all(|s| {
        (0..n).all(|t| delta.related(s, t) == (extension.pairs[map[s]].0 == extension.pairs[map[t]].0))
    });
    Ok(Reconstruction {
        quotient: q,
        extension,
        witness,
        delta_isomorphism,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::axioms::{verify_category, verify_constellation};
    use crate::magma::PartialMagma;
    use crate::morphisms::find_isomorphism;

    fn k6() -> Category {
        let m = PartialMagma::from_products(
            ["b", "c", "e", "a", "f", "g"],
            &[
                ("b", "f", "b"),
                ("c", "g", "c"),
                ("e", "b", "b"),
                ("e", "c", "c"),
                ("e", "e", "e"),
                ("e", "a", "a"),
                ("a", "f", "a"),
                ("f", "f", "f"),
                ("g", "g", "g"),
            ],
        )
        .unwrap();
        verify_category(&m).unwrap()
    }

    #[test]
    fn k6_delta1_reconstruction() {
        let k = k6();
        let delta1 = Partition::from_blocks(6, vec![vec![0, 1, 2], vec![3], vec![4], vec![5]]).unwrap();
        let r = canonical_reconstruction(&k, &delta1).unwrap();
        assert!(r.category_isomorphism());
        assert!(r.delta_isomorphism);
        let label = |x: Elem| r.extension.category.label(r.witness.map[x]).to_string();
        assert_eq!(label(0), "([e],f)");
        assert_eq!(label(1), "([e],g)");
        assert_eq!(label(2), "([e],[e])");
        assert_eq!(label(3), "(a,f)");
    }

    #[test]
    fn rejects_non_canonical() {
        let k = k6();
        let bad = Partition::from_blocks(6, vec![vec![0, 3], vec![1], vec![2], vec![4], vec![5]]).unwrap();
        assert!(matches!(
            canonical_reconstruction(&k, &bad),
            Err(CongruenceError::NotCanonical)
        ));
    }

    #[test]
    fn tilde_quotient_recovers_poset() {
        let m = PartialMagma::from_products(["e", "f"], &[("e", "e", "e"), ("f", "f", "f"), ("e", "f", "e")])
            .unwrap();
        let p = verify_constellation(&m, None).unwrap();
        let dc = delta_category_of(&p).unwrap();
        assert_eq!(dc.delta.blocks(), &[vec![0, 1], vec![2]]);
        let q = dc.quotient();
        assert!(find_isomorphism(&p, &q).unwrap().is_some());
        let id: Vec<Elem> = (0..dc.category.len()).collect();
        assert!(is_delta_functor(&id, &dc, &dc).unwrap());
    }

    #[test]
    fn tilde_requires_composable() {
        let m = PartialMagma::from_products(["e", "x"], &[("e", "e", "e"), ("e", "x", "x")]).unwrap();
        let p = verify_constellation(&m, None).unwrap();
        assert_eq!(
            canonical_tilde(&p).unwrap_err(),
            CongruenceError::NotComposable("x".into())
        );
    }
}
