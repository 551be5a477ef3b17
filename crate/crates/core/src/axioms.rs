//! Axiom checkers.
//!
//! Three independent routes are provided:
//!
//! * [`verify_constellation`] checks (C1)–(C4) against a domain map that is
//!   either supplied or derived from the table;
//! * [`verify_constellation_alt`] checks (Const1)–(Const3), which mention
//!   only the partial product;
//! * [`verify_category`] checks (Cat1)–(Cat3).
//!
//! Every failed axiom is reported with the first witness in lexicographic
//! index order and the total number of witnesses.

use std::fmt;

use crate::error::VerifyError;
use crate::magma::{Elem, PartialMagma};
use crate::structure::{Category, Constellation};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Axiom {
    /// `e · e = e` for every projection `e`.
    ProjectionIdempotent,
    C1,
    C2,
    C3,
    C4,
    Const1,
    Const2,
    Const3,
    Cat1,
    Cat2,
    /// Reported when some element lacks an identity on one side.
    Cat3,
}

impl fmt::Display for Axiom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Axiom::ProjectionIdempotent => "(E) projections idempotent",
            Axiom::C1 => "(C1)",
            Axiom::C2 => "(C2)",
            Axiom::C3 => "(C3)",
            Axiom::C4 => "(C4)",
            Axiom::Const1 => "(Const1)",
            Axiom::Const2 => "(Const2)",
            Axiom::Const3 => "(Const3)",
            Axiom::Cat1 => "(Cat1)",
            Axiom::Cat2 => "(Cat2)",
            Axiom::Cat3 => "(Cat3) no identity",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Violation {
    pub axiom: Axiom,
    /// First witness tuple in lexicographic index order.
    pub witness: Vec<Elem>,
    pub witness_labels: Vec<String>,
    /// Number of witness tuples found.
    pub count: usize,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ViolationReport {
    pub violations: Vec<Violation>,
}

impl ViolationReport {
    pub fn is_empty(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn get(&self, axiom: Axiom) -> Option<&Violation> {
        self.violations.iter().find(|v| v.axiom == axiom)
    }

    pub fn has(&self, axiom: Axiom) -> bool {
        self.get(axiom).is_some()
    }
}

impl fmt::Display for ViolationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, v) in self.violations.iter().enumerate() {
            if i > 0 {
                f.write_str("; ")?;
            }
            write!(
                f,
                "{} violated at ({}) [{} witness{}]",
                v.axiom,
                v.witness_labels.join(", "),
                v.count,
                if v.count == 1 { "" } else { "es" }
            )?;
        }
        Ok(())
    }
}

/// Accumulates the first witness and the count for one axiom.
struct Tally {
    axiom: Axiom,
    first: Option<Vec<Elem>>,
    count: usize,
}

impl Tally {
    fn new(axiom: Axiom) -> Self {
        Self {
            axiom,
            first: None,
            count: 0,
        }
    }

    fn hit(&mut self, witness: &[Elem]) {
        if self.first.is_none() {
            self.first = Some(witness.to_vec());
        }
        self.count += 1;
    }

    fn finish(self, m: &PartialMagma, report: &mut ViolationReport) {
        if let Some(witness) = self.first {
            report.violations.push(Violation {
                axiom: self.axiom,
                witness_labels: witness.iter().map(|&x| m.label(x).to_string()).collect(),
                witness,
                count: self.count,
            });
        }
    }
}

/// `x · (y · z)` exists implies `(x · y) · z` exists and equals it.
fn left_assoc_tally(m: &PartialMagma, axiom: Axiom) -> Tally {
    let n = m.len();
    let mut t = Tally::new(axiom);
    for x in 0..n {
        for y in 0..n {
            let xy = m.mul(x, y);
            for z in 0..n {
                let Some(yz) = m.mul(y, z) else { continue };
                let Some(lhs) = m.mul(x, yz) else { continue };
                if xy.and_then(|xy| m.mul(xy, z)) != Some(lhs) {
                    t.hit(&[x, y, z]);
                }
            }
        }
    }
    t
}

/// `x · y` and `y · z` exist implies `x · (y · z)` exists.
fn chain_tally(m: &PartialMagma, axiom: Axiom) -> Tally {
    let n = m.len();
    let mut t = Tally::new(axiom);
    for x in 0..n {
        for y in 0..n {
            if !m.defined(x, y) {
                continue;
            }
            for z in 0..n {
                if let Some(yz) = m.mul(y, z) {
                    if !m.defined(x, yz) {
                        t.hit(&[x, y, z]);
                    }
                }
            }
        }
    }
    t
}

/// Right identities `e` with `e · x = x`, for each `x`.
fn left_identity_candidates(m: &PartialMagma) -> Vec<Vec<Elem>> {
    let rids = m.right_identities();
    (0..m.len())
        .map(|x| rids.iter().copied().filter(|&e| m.mul(e, x) == Some(x)).collect())
        .collect()
}

/// `D` as forced by the table: the unique right identity `e` with `e · x = x`.
pub fn derive_domain(m: &PartialMagma) -> Result<Vec<Elem>, VerifyError> {
    left_identity_candidates(m)
        .into_iter()
        .enumerate()
        .map(|(x, c)| match c.as_slice() {
            [e] => Ok(*e),
            _ => Err(VerifyError::AmbiguousDomain {
                element: x,
                label: m.label(x).to_string(),
                candidates: c,
            }),
        })
        .collect()
}

/// Checks (C1)–(C4) plus the projection conditions for the given `D`.
pub fn constellation_violations(m: &PartialMagma, d: &[Elem]) -> ViolationReport {
    let n = m.len();
    let mut is_proj = vec![false; n];
    for &e in d {
        is_proj[e] = true;
    }
    let projections: Vec<Elem> = (0..n).filter(|&e| is_proj[e]).collect();
    let mut report = ViolationReport::default();

    let mut idem = Tally::new(Axiom::ProjectionIdempotent);
    for &e in &projections {
        if m.mul(e, e) != Some(e) {
            idem.hit(&[e]);
        }
    }
    idem.finish(m, &mut report);

    left_assoc_tally(m, Axiom::C1).finish(m, &mut report);

    let mut c2 = Tally::new(Axiom::C2);
    for x in 0..n {
        for y in 0..n {
            let xy = m.defined(x, y);
            for z in 0..n {
                let yz = m.mul(y, z);
                let nested = yz.is_some_and(|yz| m.defined(x, yz));
                if nested != (xy && yz.is_some()) {
                    c2.hit(&[x, y, z]);
                }
            }
        }
    }
    c2.finish(m, &mut report);

    let mut c3 = Tally::new(Axiom::C3);
    for x in 0..n {
        for &e in &projections {
            let is_left_identity = m.mul(e, x) == Some(x);
            if (e == d[x]) != is_left_identity {
                c3.hit(&[x, e]);
            }
        }
    }
    c3.finish(m, &mut report);

    let mut c4 = Tally::new(Axiom::C4);
    for a in 0..n {
        for &g in &projections {
            if let Some(p) = m.mul(a, g) {
                if p != a {
                    c4.hit(&[a, g]);
                }
            }
        }
    }
    c4.finish(m, &mut report);

    report
}

/// Verifies (C1)–(C4).
///
/// When `d` is absent, `D(x)` is taken to be the unique right identity `e`
/// with `e · x = x`. When `d` is supplied and the table also determines
/// `D`, the two must agree.
pub fn verify_constellation(m: &PartialMagma, d: Option<&[Elem]>) -> Result<Constellation, VerifyError> {
    let n = m.len();
    let domain = match d {
        Some(d) => {
            if d.len() != n {
                return Err(VerifyError::DomainShape {
                    expected: n,
                    got: d.len(),
                });
            }
            if let Some(x) = d.iter().position(|&e| e >= n) {
                return Err(VerifyError::DomainOutOfRange { element: x });
            }
            if let Ok(derived) = derive_domain(m) {
                if let Some(x) = (0..n).find(|&x| derived[x] != d[x]) {
                    return Err(VerifyError::DomainMismatch {
                        element: x,
                        label: m.label(x).to_string(),
                        supplied: d[x],
                        supplied_label: m.label(d[x]).to_string(),
                        derived: derived[x],
                        derived_label: m.label(derived[x]).to_string(),
                    });
                }
            }
            d.to_vec()
        }
        None => derive_domain(m)?,
    };
    let report = constellation_violations(m, &domain);
    if report.is_empty() {
        Ok(Constellation::new_unchecked(m.clone(), domain))
    } else {
        Err(VerifyError::Axioms(report))
    }
}

/// Verifies (Const1)–(Const3); `D` comes from (Const3).
pub fn verify_constellation_alt(m: &PartialMagma) -> Result<Constellation, VerifyError> {
    let mut report = ViolationReport::default();
    left_assoc_tally(m, Axiom::Const1).finish(m, &mut report);
    chain_tally(m, Axiom::Const2).finish(m, &mut report);
    let candidates = left_identity_candidates(m);
    let mut c3 = Tally::new(Axiom::Const3);
    for (x, c) in candidates.iter().enumerate() {
        if c.len() != 1 {
            c3.hit(&[x]);
        }
    }
    c3.finish(m, &mut report);
    if report.is_empty() {
        let domain = candidates.into_iter().map(|c| c[0]).collect();
        Ok(Constellation::new_unchecked(m.clone(), domain))
    } else {
        Err(VerifyError::Axioms(report))
    }
}

/// (Cat1) witnesses: triples where exactly one bracketing exists, or both
/// exist and differ.
pub(crate) fn cat1_tally(m: &PartialMagma) -> (Option<Vec<Elem>>, usize) {
    let n = m.len();
    let mut t = Tally::new(Axiom::Cat1);
    for x in 0..n {
        for y in 0..n {
            let xy = m.mul(x, y);
            for z in 0..n {
                let lhs = m.mul(y, z).and_then(|yz| m.mul(x, yz));
                let rhs = xy.and_then(|xy| m.mul(xy, z));
                if lhs != rhs {
                    t.hit(&[x, y, z]);
                }
            }
        }
    }
    (t.first, t.count)
}

/// Verifies (Cat1)–(Cat3) and derives `D` and `R`.
pub fn verify_category(m: &PartialMagma) -> Result<Category, VerifyError> {
    let n = m.len();
    let mut report = ViolationReport::default();

    let (first, count) = cat1_tally(m);
    if let Some(witness) = first {
        report.violations.push(Violation {
            axiom: Axiom::Cat1,
            witness_labels: witness.iter().map(|&x| m.label(x).to_string()).collect(),
            witness,
            count,
        });
    }
    chain_tally(m, Axiom::Cat2).finish(m, &mut report);

    let identities: Vec<Elem> = (0..n)
        .filter(|&e| m.is_left_identity(e) && m.is_right_identity(e))
        .collect();
    let mut domain = vec![0; n];
    let mut range = vec![0; n];
    let mut cat3 = Tally::new(Axiom::Cat3);
    for x in 0..n {
        let left = identities.iter().copied().find(|&e| m.defined(e, x));
        let right = identities.iter().copied().find(|&f| m.defined(x, f));
        match (left, right) {
            (Some(e), Some(f)) => {
                domain[x] = e;
                range[x] = f;
            }
            _ => cat3.hit(&[x]),
        }
    }
    cat3.finish(m, &mut report);

    if report.is_empty() {
        Ok(Category::new_unchecked(m.clone(), domain, range))
    } else {
        Err(VerifyError::Axioms(report))
    }
}

/// Verifies the right-handed axioms (C1′)–(C4′) by checking the opposite
/// table. On success returns the range map `R`. Witness triples refer to
/// the opposite table, so `(x, y, z)` there is `(z, y, x)` here.
pub fn verify_right_constellation(m: &PartialMagma) -> Result<Vec<Elem>, VerifyError> {
    verify_constellation(&m.dual(), None).map(|c| c.domain_map().to_vec())
}
