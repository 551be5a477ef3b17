//! Quotients and the maps between them.

use std::collections::HashSet;

use crate::axioms::verify_constellation;
use crate::congruences::report::analyze_partition;
use crate::error::{CongruenceError, VerifyError};
use crate::magma::{Elem, PartialMagma};
use crate::morphisms::{check_radiant, MorphismWitness};
use crate::partition::Partition;
use crate::structure::Constellation;

/// `P/δ` as a partial magma with its class-level `D`, and the result of
/// checking the constellation axioms on it.
#[derive(Clone, Debug)]
pub struct Quotient {
    pub partition: Partition,
    pub magma: PartialMagma,
    pub domain: Vec<Elem>,
    pub outcome: Result<Constellation, VerifyError>,
}

impl Quotient {
    pub fn constellation(&self) -> Option<&Constellation> {
        self.outcome.as_ref().ok()
    }

    /// `x ↦ [x]`.
    pub fn natural_map(&self) -> Vec<Elem> {
        self.partition.class_ids().to_vec()
    }
}

/// Class labels: a singleton keeps its element's label; a larger class is
/// `[r]` with `r` its projection if it has one, otherwise its least
/// element. Clashes are primed.
pub fn class_labels(p: &Constellation, part: &Partition) -> Vec<String> {
    let mut used: HashSet<String> = HashSet::new();
    part.blocks()
        .iter()
        .map(|b| {
            let mut label = if b.len() == 1 {
                p.label(b[0]).to_string()
            } else {
                let rep = b.iter().copied().find(|&x| p.is_projection(x)).unwrap_or(b[0]);
                format!("[{}]", p.label(rep))
            };
            while used.contains(&label) {
                label.push('\'');
            }
            used.insert(label.clone());
            label
        })
        .collect()
}

/// `[s] · [t] = [s1 · t1]` for any representatives with a defined product,
/// `D([s]) = [D(s)]`. Well-definedness is checked product by product.
pub fn quotient(p: &Constellation, part: &Partition) -> Result<Quotient, CongruenceError> {
    if part.len() != p.len() {
        return Err(CongruenceError::BadPartition(format!(
            "partition covers {} elements, structure has {}",
            part.len(),
            p.len()
        )));
    }
    let report = analyze_partition(p, part);
    if !report.congruence {
        return Err(CongruenceError::NotACongruence);
    }
    let labels = class_labels(p, part);
    let k = part.num_blocks();
    let mut table: Vec<Option<Elem>> = vec![None; k * k];
    for (s, t, u) in p.magma().products() {
        let (cs, ct, cu) = (part.class_of(s), part.class_of(t), part.class_of(u));
        match table[cs * k + ct] {
            None => table[cs * k + ct] = Some(cu),
            Some(prev) if prev != cu => {
                return Err(CongruenceError::WellDefinednessClash {
                    left: labels[cs].clone(),
                    right: labels[ct].clone(),
                });
            }
            Some(_) => {}
        }
    }
    let domain: Vec<Elem> = part.blocks().iter().map(|b| part.class_of(p.d(b[0]))).collect();
    let magma = PartialMagma::from_table(labels, table).expect("class labels are unique");
    let outcome = verify_constellation(&magma, Some(&domain));
    Ok(Quotient {
        partition: part.clone(),
        magma,
        domain,
        outcome,
    })
}

/// The partition of `P` by `D`-fibres.
pub fn largest_projection_separating(p: &Constellation) -> Partition {
    Partition::from_class_ids(p.domain_map())
}

fn require_projection_separating(p: &Constellation, part: &Partition) -> Result<(), CongruenceError> {
    if analyze_partition(p, part).projection_separating {
        Ok(())
    } else {
        Err(CongruenceError::NotProjectionSeparating)
    }
}

fn quotient_constellation(p: &Constellation, part: &Partition) -> Result<Constellation, CongruenceError> {
    quotient(p, part)?
        .outcome
        .map_err(CongruenceError::Verify)
}

/// `[s]_δ ↦ [s]_γ` from `P/δ` to `P/γ`, for projection-separating
/// congruences `δ ⊆ γ`.
pub fn quotient_map(
    p: &Constellation,
    delta: &Partition,
    gamma: &Partition,
) -> Result<(Constellation, Constellation, MorphismWitness), CongruenceError> {
    if !delta.refines(gamma) {
        return Err(CongruenceError::NotNested);
    }
    require_projection_separating(p, delta)?;
    require_projection_separating(p, gamma)?;
    let q1 = quotient_constellation(p, delta)?;
    let q2 = quotient_constellation(p, gamma)?;
    let map: Vec<Elem> = delta.blocks().iter().map(|b| gamma.class_of(b[0])).collect();
    let witness = check_radiant(&map, &q1, &q2)?;
    Ok((q1, q2, witness))
}

/// `γ` on `P` from `ε` on `P/δ`: `s γ t` iff `[s]_δ ε [t]_δ`.
pub fn lift_partition(delta: &Partition, epsilon: &Partition) -> Result<Partition, CongruenceError> {
    if epsilon.len() != delta.num_blocks() {
        return Err(CongruenceError::BadPartition(format!(
            "partition covers {} classes, quotient has {}",
            epsilon.len(),
            delta.num_blocks()
        )));
    }
    let ids: Vec<usize> = delta.class_ids().iter().map(|&c| epsilon.class_of(c)).collect();
    Ok(Partition::from_class_ids(&ids))
}

/// `ε` on `P/δ` from `γ ⊇ δ` on `P`: `[s]_δ ε [t]_δ` iff `s γ t`.
pub fn push_partition(delta: &Partition, gamma: &Partition) -> Result<Partition, CongruenceError> {
    if !delta.refines(gamma) {
        return Err(CongruenceError::NotNested);
    }
    let ids: Vec<usize> = delta.blocks().iter().map(|b| gamma.class_of(b[0])).collect();
    Ok(Partition::from_class_ids(&ids))
}
