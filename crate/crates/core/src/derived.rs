//! Structural facts derived from a valid constellation.

use std::collections::BTreeSet;

use crate::axioms::cat1_tally;
use crate::error::ConstructionError;
use crate::magma::Elem;
use crate::structure::{Category, Constellation};

/// The standard quasiorder on projections: `e ≲ f` iff `e · f` is defined.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuasiOrder {
    projections: Vec<Elem>,
    pairs: BTreeSet<(Elem, Elem)>,
}

impl QuasiOrder {
    pub fn projections(&self) -> &[Elem] {
        &self.projections
    }

    /// All related pairs, reflexive ones included.
    pub fn pairs(&self) -> &BTreeSet<(Elem, Elem)> {
        &self.pairs
    }

    pub fn leq(&self, e: Elem, f: Elem) -> bool {
        self.pairs.contains(&(e, f))
    }

    /// `e ≈ f`: related both ways.
    pub fn equivalent(&self, e: Elem, f: Elem) -> bool {
        self.leq(e, f) && self.leq(f, e)
    }

    pub fn strict_pairs(&self) -> impl Iterator<Item = (Elem, Elem)> + '_ {
        self.pairs.iter().copied().filter(|(e, f)| e != f)
    }

    pub fn is_reflexive(&self) -> bool {
        self.projections.iter().all(|&e| self.leq(e, e))
    }

    pub fn is_transitive(&self) -> bool {
        self.pairs.iter().all(|&(e, f)| {
            self.pairs
                .range((f, 0)..(f + 1, 0))
                .all(|&(_, g)| self.leq(e, g))
        })
    }

    /// First pair of distinct `≈`-related projections, if any.
    pub fn antisymmetry_witness(&self) -> Option<(Elem, Elem)> {
        self.pairs
            .iter()
            .copied()
            .find(|&(e, f)| e < f && self.leq(f, e))
    }
}

pub fn standard_quasiorder(c: &Constellation) -> QuasiOrder {
    let projections = c.projections().to_vec();
    let pairs = projections
        .iter()
        .flat_map(|&e| projections.iter().map(move |&f| (e, f)))
        .filter(|&(e, f)| c.defined(e, f))
        .collect();
    QuasiOrder { projections, pairs }
}

/// `None` when `≲` is antisymmetric; otherwise a pair `e ≠ f` with
/// `e · f` and `f · e` both defined.
pub fn normality_witness(c: &Constellation) -> Option<(Elem, Elem)> {
    standard_quasiorder(c).antisymmetry_witness()
}

pub fn is_normal(c: &Constellation) -> bool {
    normality_witness(c).is_none()
}

pub fn is_composable_element(c: &Constellation, s: Elem) -> bool {
    (0..c.len()).any(|t| c.defined(s, t))
}

pub fn is_composable(c: &Constellation) -> bool {
    (0..c.len()).all(|s| is_composable_element(c, s))
}

/// First incomposable element, if any.
pub fn incomposable_witness(c: &Constellation) -> Option<Elem> {
    (0..c.len()).find(|&s| !is_composable_element(c, s))
}

/// The range map, when every element right-multiplies exactly one
/// projection.
pub fn categorial_range(c: &Constellation) -> Option<Vec<Elem>> {
    (0..c.len())
        .map(|s| {
            let mut it = c.right_projections(s);
            match (it.next(), it.next()) {
                (Some(e), None) => Some(e),
                _ => None,
            }
        })
        .collect()
}

pub fn is_categorial(c: &Constellation) -> bool {
    categorial_range(c).is_some()
}

/// The category whose reduct is `c`, when `c` is categorial.
pub fn as_category(c: &Constellation) -> Option<Category> {
    categorial_range(c)
        .map(|r| Category::new_unchecked(c.magma().clone(), c.domain_map().to_vec(), r))
}

/// Outcome of the category-embeddability test.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Embeddability {
    /// First (Cat1) witness `(x, y, z)`.
    pub cat1_witness: Option<(Elem, Elem, Elem)>,
    /// First element `s` with two projections `e < f` such that `s · e`
    /// and `s · f` are both defined.
    pub multiple_projections: Option<(Elem, Elem, Elem)>,
}

impl Embeddability {
    pub fn embeddable(&self) -> bool {
        self.cat1_witness.is_none() && self.multiple_projections.is_none()
    }
}

pub fn embeddability(c: &Constellation) -> Embeddability {
    let cat1_witness = cat1_tally(c.magma()).0.map(|w| (w[0], w[1], w[2]));
    let multiple_projections = (0..c.len()).find_map(|s| {
        let mut it = c.right_projections(s);
        match (it.next(), it.next()) {
            (Some(e), Some(f)) => Some((s, e, f)),
            _ => None,
        }
    });
    Embeddability {
        cat1_witness,
        multiple_projections,
    }
}

pub fn embeddable_in_category(c: &Constellation) -> bool {
    embeddability(c).embeddable()
}

/// Nonempty, closed under defined products and under `D`.
pub fn is_subconstellation(c: &Constellation, subset: &[Elem]) -> bool {
    if subset.is_empty() {
        return false;
    }
    let mut member = vec![false; c.len()];
    for &x in subset {
        member[x] = true;
    }
    subset.iter().all(|&a| {
        member[c.d(a)]
            && subset
                .iter()
                .all(|&b| c.mul(a, b).is_none_or(|p| member[p]))
    })
}

/// Least subconstellation containing `seed`, in index order.
pub fn generated_subconstellation(c: &Constellation, seed: &[Elem]) -> Result<Vec<Elem>, ConstructionError> {
    if seed.is_empty() {
        return Err(ConstructionError::EmptySeed);
    }
    let mut member = vec![false; c.len()];
    let mut members: Vec<Elem> = Vec::new();
    let push = |x: Elem, member: &mut Vec<bool>, members: &mut Vec<Elem>| {
        if !member[x] {
            member[x] = true;
            members.push(x);
        }
    };
    for &x in seed {
        push(x, &mut member, &mut members);
    }
    let mut done = 0;
    while done < members.len() {
        let a = members[done];
        push(c.d(a), &mut member, &mut members);
        let mut i = 0;
        while i <= done {
            let b = members[i];
            if let Some(p) = c.mul(a, b) {
                push(p, &mut member, &mut members);
            }
            if let Some(p) = c.mul(b, a) {
                push(p, &mut member, &mut members);
            }
            i += 1;
        }
        done += 1;
    }
    members.sort_unstable();
    Ok(members)
}

/// The subconstellation on `subset` (which must be closed), with elements
/// renumbered in the given order.
pub fn restrict(c: &Constellation, subset: &[Elem]) -> Option<Constellation> {
    if !is_subconstellation(c, subset) {
        return None;
    }
    let mut position = vec![usize::MAX; c.len()];
    for (i, &x) in subset.iter().enumerate() {
        position[x] = i;
    }
    let magma = c.magma().restrict(subset);
    let domain = subset.iter().map(|&x| position[c.d(x)]).collect();
    Some(Constellation::new_unchecked(magma, domain))
}
