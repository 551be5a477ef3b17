//! Congruence properties of a partition.

use crate::magma::Elem;
use crate::partition::Partition;
use crate::structure::{Category, Constellation};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CongruenceFailure {
    /// `s1 δ s2`, `t1 δ t2`, both products defined but in different classes.
    Product { s1: Elem, t1: Elem, s2: Elem, t2: Elem },
    /// `s1 δ s2` but `D(s1)` and `D(s2)` are not related.
    Domain { s1: Elem, s2: Elem },
}

/// All congruence properties of one partition, each with a failure
/// witness. `strong`, `right_strong`, `projection_separating` and
/// `canonical` are only true for congruences.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CongruenceReport {
    pub partition: Partition,
    pub congruence: bool,
    pub strong: bool,
    pub right_strong: bool,
    pub projection_separating: bool,
    pub canonical: bool,
    pub congruence_failure: Option<CongruenceFailure>,
    /// `(s1, t1, s2, t2)`: related pairs where `s1 · t1` exists and
    /// `s2 · t2` does not.
    pub strong_failure: Option<(Elem, Elem, Elem, Elem)>,
    /// `(s, t, t1)`: `s · t` exists, `t1 δ t`, and no `s1 δ s` has
    /// `s1 · t1` defined.
    pub right_strong_failure: Option<(Elem, Elem, Elem)>,
    pub separation_failure: Option<(Elem, Elem)>,
    /// `(a, b, e)`: distinct related elements with `a · e` and `b · e`.
    pub canonical_failure: Option<(Elem, Elem, Elem)>,
}

/// Checks every congruence property of `part` on `p`. The partition must
/// be on a carrier of the same size.
pub fn analyze_partition(p: &Constellation, part: &Partition) -> CongruenceReport {
    assert_eq!(p.len(), part.len(), "partition carrier differs from the constellation");
    let congruence_failure = congruence_failure(p, part);
    let strong_failure = strong_failure(p, part);
    let right_strong_failure = right_strong_failure(p, part);
    let separation_failure = separation_failure(p, part);
    let canonical_failure = shared_projection(p, part);
    let congruence = congruence_failure.is_none();
    let projection_separating = congruence && separation_failure.is_none();
    CongruenceReport {
        partition: part.clone(),
        congruence,
        strong: congruence && strong_failure.is_none(),
        right_strong: congruence && right_strong_failure.is_none(),
        projection_separating,
        canonical: projection_separating && canonical_failure.is_none(),
        congruence_failure,
        strong_failure,
        right_strong_failure,
        separation_failure,
        canonical_failure,
    }
}

fn congruence_failure(p: &Constellation, part: &Partition) -> Option<CongruenceFailure> {
    for block in part.blocks() {
        let d0 = p.d(block[0]);
        if let Some(&s2) = block.iter().find(|&&s| !part.related(p.d(s), d0)) {
            return Some(CongruenceFailure::Domain { s1: block[0], s2 });
        }
    }
    let k = part.num_blocks();
    let mut first: Vec<Option<(Elem, Elem, Elem)>> = vec![None; k * k];
    for (s, t, u) in p.magma().products() {
        let slot = &mut first[part.class_of(s) * k + part.class_of(t)];
        match *slot {
            None => *slot = Some((s, t, u)),
            Some((s1, t1, u1)) if !part.related(u, u1) => {
                return Some(CongruenceFailure::Product { s1, t1, s2: s, t2: t });
            }
            Some(_) => {}
        }
    }
    None
}

fn strong_failure(p: &Constellation, part: &Partition) -> Option<(Elem, Elem, Elem, Elem)> {
    for bs in part.blocks() {
        for bt in part.blocks() {
            let defined = bs
                .iter()
                .flat_map(|&s| bt.iter().map(move |&t| (s, t)))
                .find(|&(s, t)| p.defined(s, t));
            let undefined = bs
                .iter()
                .flat_map(|&s| bt.iter().map(move |&t| (s, t)))
                .find(|&(s, t)| !p.defined(s, t));
            if let (Some((s1, t1)), Some((s2, t2))) = (defined, undefined) {
                return Some((s1, t1, s2, t2));
            }
        }
    }
    None
}

fn right_strong_failure(p: &Constellation, part: &Partition) -> Option<(Elem, Elem, Elem)> {
    for (s, t, _) in p.magma().products() {
        let bs = part.block_of(s);
        if let Some(&t1) = part
            .block_of(t)
            .iter()
            .find(|&&t1| !bs.iter().any(|&s1| p.defined(s1, t1)))
        {
            return Some((s, t, t1));
        }
    }
    None
}

fn separation_failure(p: &Constellation, part: &Partition) -> Option<(Elem, Elem)> {
    let e = p.projections();
    e.iter()
        .enumerate()
        .find_map(|(i, &a)| e[i + 1..].iter().find(|&&b| part.related(a, b)).map(|&b| (a, b)))
}

/// Distinct class-mates with a common right projection.
pub(crate) fn shared_projection(p: &Constellation, part: &Partition) -> Option<(Elem, Elem, Elem)> {
    for block in part.blocks() {
        for (i, &a) in block.iter().enumerate() {
            for &b in &block[i + 1..] {
                if let Some(e) = p.right_projections(a).find(|&e| p.defined(b, e)) {
                    return Some((a, b, e));
                }
            }
        }
    }
    None
}

/// The three-clause form of canonicity for an equivalence: class-mates
/// share `D`, distinct class-mates share no right projection, and
/// `b δ c` with `a · b` defined gives `a · b δ a · c`.
pub fn satisfies_canonical_clauses(p: &Constellation, part: &Partition) -> bool {
    same_domains(p, part) && shared_projection(p, part).is_none() && left_compatible(p, part)
}

/// The category form: class-mates share `D`, distinct class-mates have
/// distinct `R`, and left compatibility.
pub fn satisfies_category_canonical_clauses(k: &Category, part: &Partition) -> bool {
    let p = k.reduct();
    let distinct_ranges = part.blocks().iter().all(|b| {
        b.iter()
            .enumerate()
            .all(|(i, &x)| b[i + 1..].iter().all(|&y| k.r(x) != k.r(y)))
    });
    same_domains(&p, part) && distinct_ranges && left_compatible(&p, part)
}

/// The two-clause definition restated for categories: projection
/// separating, and related elements with equal range are equal.
pub fn category_canonical_by_range(k: &Category, part: &Partition) -> bool {
    let p = k.reduct();
    let report = analyze_partition(&p, part);
    report.projection_separating && part.pairs().all(|(a, b)| k.r(a) != k.r(b))
}

fn same_domains(p: &Constellation, part: &Partition) -> bool {
    part.blocks().iter().all(|b| b.iter().all(|&x| p.d(x) == p.d(b[0])))
}

fn left_compatible(p: &Constellation, part: &Partition) -> bool {
    part.pairs().all(|(b, c)| {
        (0..p.len()).all(|a| match (p.mul(a, b), p.mul(a, c)) {
            (Some(ab), Some(ac)) => part.related(ab, ac),
            (None, None) => true,
            _ => false,
        })
    })
}
