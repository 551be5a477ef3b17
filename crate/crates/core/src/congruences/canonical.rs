//! Canonical congruences: kernels, principal congruences, closure,
//! enumeration, maximality and simplicity.

use std::collections::BTreeSet;

use crate::congruences::report::{analyze_partition, shared_projection};
use crate::error::{CongruenceError, Unrelatable};
use crate::magma::Elem;
use crate::partition::{Partition, UnionFind};
use crate::structure::{Category, Constellation};

/// Default carrier-size cap for brute-force enumeration.
pub const ENUMERATION_LIMIT: usize = 10;

/// `ker(a)`: pairs `(x, y)` with `x · a` and `y · a` defined and equal.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KernelRelation {
    pub element: Elem,
    pub pairs: BTreeSet<(Elem, Elem)>,
}

pub fn kernel(k: &Category, a: Elem) -> KernelRelation {
    let left: Vec<(Elem, Elem)> = (0..k.len()).filter_map(|x| k.mul(x, a).map(|xa| (x, xa))).collect();
    let pairs = left
        .iter()
        .flat_map(|&(x, xa)| left.iter().filter(move |&&(_, ya)| ya == xa).map(move |&(y, _)| (x, y)))
        .collect();
    KernelRelation { element: a, pairs }
}

/// Why `a` and `b` cannot be related, if they cannot.
pub fn relatability(k: &Category, a: Elem, b: Elem) -> Result<(), Unrelatable> {
    if k.d(a) != k.d(b) {
        return Err(Unrelatable::DomainsDiffer);
    }
    if k.r(a) == k.r(b) {
        return Err(Unrelatable::RangesEqual);
    }
    if kernel(k, a).pairs != kernel(k, b).pairs {
        return Err(Unrelatable::KernelsDiffer);
    }
    Ok(())
}

/// `δ_{a,b}`: the diagonal plus the pairs `{x · a, x · b}`.
pub fn principal_canonical(k: &Category, a: Elem, b: Elem) -> Result<Partition, CongruenceError> {
    if a == b {
        return Err(CongruenceError::EqualElements);
    }
    relatability(k, a, b).map_err(CongruenceError::NotRelatable)?;
    let mut uf = UnionFind::new(k.len());
    for x in 0..k.len() {
        if let (Some(xa), Some(xb)) = (k.mul(x, a), k.mul(x, b)) {
            uf.union(xa, xb);
        }
    }
    Ok(uf.partition())
}

/// The least canonical congruence containing `seed`, if one exists. It
/// is the closure of `seed` under `b δ c ⇒ a · b δ a · c`; that closure is
/// canonical exactly when its classes lie in `D`-fibres and no two
/// class-mates share a right projection.
pub fn canonical_closure(p: &Constellation, seed: &Partition) -> Option<Partition> {
    let mut uf = UnionFind::from_partition(seed);
    let n = p.len();
    loop {
        let mut changed = false;
        for b in 0..n {
            let r = uf.find(b);
            if r == b {
                continue;
            }
            if p.d(r) != p.d(b) {
                return None;
            }
            for a in 0..n {
                if let Some(ab) = p.mul(a, b) {
                    let ar = p.mul(a, r)?;
                    changed |= uf.union(ab, ar);
                }
            }
        }
        if !changed {
            break;
        }
    }
    let closure = uf.partition();
    shared_projection(p, &closure).is_none().then_some(closure)
}

fn join_pair(base: &Partition, x: Elem, y: Elem) -> Partition {
    let mut uf = UnionFind::from_partition(base);
    uf.union(x, y);
    uf.partition()
}

/// Every canonical congruence, sorted. Candidates are built block by
/// block, keeping class-mates inside one `D`-fibre and without a shared
/// right projection, then checked in full.
pub fn enumerate_canonical(p: &Constellation, limit: usize) -> Result<Vec<Partition>, CongruenceError> {
    let n = p.len();
    if n > limit {
        return Err(CongruenceError::SizeCap { size: n, limit });
    }
    let compatible: Vec<Vec<bool>> = (0..n)
        .map(|x| {
            (0..n)
                .map(|y| x == y || (p.d(x) == p.d(y) && !p.right_projections(x).any(|e| p.defined(y, e))))
                .collect()
        })
        .collect();
    let mut out = Vec::new();
    let mut blocks: Vec<Vec<Elem>> = Vec::new();
    enumerate_rec(0, n, &compatible, &mut blocks, &mut |blocks| {
        let part = Partition::from_blocks(n, blocks.to_vec()).expect("blocks cover the carrier");
        if analyze_partition(p, &part).canonical {
            out.push(part);
        }
    });
    out.sort();
    Ok(out)
}

/// Every congruence, sorted. Exhaustive over set partitions.
pub fn enumerate_congruences(p: &Constellation, limit: usize) -> Result<Vec<Partition>, CongruenceError> {
    let n = p.len();
    if n > limit {
        return Err(CongruenceError::SizeCap { size: n, limit });
    }
    let compatible = vec![vec![true; n]; n];
    let mut out = Vec::new();
    let mut blocks: Vec<Vec<Elem>> = Vec::new();
    enumerate_rec(0, n, &compatible, &mut blocks, &mut |blocks| {
        let part = Partition::from_blocks(n, blocks.to_vec()).expect("blocks cover the carrier");
        if analyze_partition(p, &part).congruence {
            out.push(part);
        }
    });
    out.sort();
    Ok(out)
}

fn enumerate_rec(
    x: Elem,
    n: usize,
    compatible: &[Vec<bool>],
    blocks: &mut Vec<Vec<Elem>>,
    visit: &mut dyn FnMut(&[Vec<Elem>]),
) {
    if x == n {
        visit(blocks);
        return;
    }
    for i in 0..blocks.len() {
        if blocks[i].iter().all(|&y| compatible[x][y]) {
            blocks[i].push(x);
            enumerate_rec(x + 1, n, compatible, blocks, visit);
            blocks[i].pop();
        }
    }
    blocks.push(vec![x]);
    enumerate_rec(x + 1, n, compatible, blocks, visit);
    blocks.pop();
}

/// Members of `list` not strictly contained in another member.
pub fn maximal_elements(list: &[Partition]) -> Vec<Partition> {
    list.iter()
        .filter(|a| !list.iter().any(|b| b != *a && a.refines(b)))
        .cloned()
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MaximalCanonical {
    /// Reached by repeatedly adding the least unrelated pair whose closure
    /// is canonical.
    pub greedy: Partition,
    /// Every maximal canonical congruence, when the carrier is within the
    /// enumeration cap.
    pub all: Option<Vec<Partition>>,
}

pub fn maximal_canonical(p: &Constellation, limit: usize) -> MaximalCanonical {
    MaximalCanonical {
        greedy: greedy_maximal(p),
        all: enumerate_canonical(p, limit).ok().map(|l| maximal_elements(&l)),
    }
}

fn greedy_maximal(p: &Constellation) -> Partition {
    let n = p.len();
    let mut current = Partition::diagonal(n);
    'grow: loop {
        for x in 0..n {
            for y in x + 1..n {
                if current.related(x, y) || p.d(x) != p.d(y) {
                    continue;
                }
                if let Some(next) = canonical_closure(p, &join_pair(&current, x, y)) {
                    current = next;
                    continue 'grow;
                }
            }
        }
        return current;
    }
}

/// Maximal members among the canonical congruences whose quotient is
/// normal.
pub fn maximal_canonical_with_normal_quotient(
    p: &Constellation,
    limit: usize,
) -> Result<Vec<Partition>, CongruenceError> {
    let normal: Vec<Partition> = enumerate_canonical(p, limit)?
        .into_iter()
        .filter(|part| {
            crate::congruences::quotient(p, part)
                .ok()
                .and_then(|q| q.outcome.ok())
                .is_some_and(|c| crate::derived::is_normal(&c))
        })
        .collect();
    Ok(maximal_elements(&normal))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SimplicityCheck {
    /// Every two elements with equal `D` share a right projection.
    SharedProjection,
    /// No pair generates a canonical congruence.
    PairClosure,
    /// No relatable pair in a category.
    KernelCriterion,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Simplicity {
    pub simple: bool,
    /// A non-trivial canonical congruence when not simple.
    pub witness: Option<Partition>,
    pub check: SimplicityCheck,
}

/// A constellation is canonically simple when no pair `x ≠ y` lies in a
/// canonical congruence; each pair is tested through its closure.
pub fn is_canonically_simple(p: &Constellation) -> Simplicity {
    let n = p.len();
    let fibre_pairs = || {
        (0..n)
            .flat_map(move |x| (x + 1..n).map(move |y| (x, y)))
            .filter(|&(x, y)| p.d(x) == p.d(y))
    };
    if fibre_pairs().all(|(x, y)| p.right_projections(x).any(|e| p.defined(y, e))) {
        return Simplicity {
            simple: true,
            witness: None,
            check: SimplicityCheck::SharedProjection,
        };
    }
    let witness = fibre_pairs().find_map(|(x, y)| canonical_closure(p, &join_pair(&Partition::diagonal(n), x, y)));
    Simplicity {
        simple: witness.is_none(),
        witness,
        check: SimplicityCheck::PairClosure,
    }
}

/// Categories: simple iff `D(a) = D(b)` and `ker(a) = ker(b)` force
/// `R(a) = R(b)`. The witness is `δ_{a,b}` for the first failing pair.
pub fn is_canonically_simple_category(k: &Category) -> Simplicity {
    let n = k.len();
    let witness = (0..n)
        .flat_map(|a| (a + 1..n).map(move |b| (a, b)))
        .find(|&(a, b)| relatability(k, a, b).is_ok())
        .map(|(a, b)| principal_canonical(k, a, b).expect("relatable pair"));
    Simplicity {
        simple: witness.is_none(),
        witness,
        check: SimplicityCheck::KernelCriterion,
    }
}

/// `▽` is canonical iff there is one projection and it is the only
/// element with a defined right product.
pub fn full_relation_canonical(p: &Constellation) -> bool {
    match p.projections() {
        [e] => (0..p.len()).all(|s| s == *e || (0..p.len()).all(|t| !p.defined(s, t))),
        _ => false,
    }
}
