//! Constellations from quasiorders and monoids, and the size formulas for
//! the function generators.

use crate::error::ConstructionError;
use crate::magma::{Elem, PartialMagma};
use crate::structure::Constellation;

/// `e · f = e` whenever `e ≤ f`. Every element is a projection.
pub fn from_quasiorder<S: Into<String>>(
    labels: Vec<S>,
    leq: &[(Elem, Elem)],
) -> Result<Constellation, ConstructionError> {
    let labels: Vec<String> = labels.into_iter().map(Into::into).collect();
    let n = labels.len();
    let mut rel = vec![false; n * n];
    for &(e, f) in leq {
        if e >= n || f >= n {
            return Err(ConstructionError::NotQuasiorder(format!(
                "pair ({e}, {f}) is outside the carrier"
            )));
        }
        rel[e * n + f] = true;
    }
    let mut magma = PartialMagma::new(labels)?;
    if let Some(e) = (0..n).find(|&e| !rel[e * n + e]) {
        return Err(ConstructionError::NotQuasiorder(format!(
            "not reflexive at {}",
            magma.label(e)
        )));
    }
    for e in 0..n {
        for f in 0..n {
            for g in 0..n {
                if rel[e * n + f] && rel[f * n + g] && !rel[e * n + g] {
                    return Err(ConstructionError::NotQuasiorder(format!(
                        "not transitive at {} <= {} <= {}",
                        magma.label(e),
                        magma.label(f),
                        magma.label(g)
                    )));
                }
            }
        }
    }
    for e in 0..n {
        for f in 0..n {
            if rel[e * n + f] {
                magma.set(e, f, Some(e));
            }
        }
    }
    Ok(Constellation::new_unchecked(magma, (0..n).collect()))
}

/// A monoid as a constellation: all products defined, `D ≡ 1`. The table is
/// row-major and total.
pub fn from_monoid<S: Into<String>>(labels: Vec<S>, table: &[Elem]) -> Result<Constellation, ConstructionError> {
    let labels: Vec<String> = labels.into_iter().map(Into::into).collect();
    let n = labels.len();
    if table.len() != n * n {
        return Err(ConstructionError::NotMonoid(format!(
            "table has {} entries, expected {}",
            table.len(),
            n * n
        )));
    }
    if let Some(&v) = table.iter().find(|&&v| v >= n) {
        return Err(ConstructionError::NotMonoid(format!("entry {v} is outside the carrier")));
    }
    let magma = PartialMagma::from_table(labels, table.iter().map(|&v| Some(v)).collect())?;
    let mul = |a: Elem, b: Elem| table[a * n + b];
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                if mul(mul(a, b), c) != mul(a, mul(b, c)) {
                    return Err(ConstructionError::NotMonoid(format!(
                        "not associative at ({}, {}, {})",
                        magma.label(a),
                        magma.label(b),
                        magma.label(c)
                    )));
                }
            }
        }
    }
    let one = (0..n)
        .find(|&e| (0..n).all(|a| mul(e, a) == a && mul(a, e) == a))
        .ok_or_else(|| ConstructionError::NotMonoid("no two-sided identity".into()))?;
    Ok(Constellation::new_unchecked(magma, vec![one; n]))
}

/// `|𝒞_X| = (n+1)^n`.
pub fn count_cx(n: usize) -> Result<u128, ConstructionError> {
    if n == 0 {
        return Err(ConstructionError::ZeroSize);
    }
    pow(n as u128 + 1, n)
}

/// `|COD_X| = Σ_{m=0}^{n} C(n,m) (m+1)^n`.
pub fn count_codx(n: usize) -> Result<u128, ConstructionError> {
    if n == 0 {
        return Err(ConstructionError::ZeroSize);
    }
    let mut total: u128 = 0;
    let mut binom: u128 = 1;
    for m in 0..=n {
        let term = binom.checked_mul(pow(m as u128 + 1, n)?).ok_or(ConstructionError::Overflow)?;
        total = total.checked_add(term).ok_or(ConstructionError::Overflow)?;
        binom = binom
            .checked_mul((n - m) as u128)
            .ok_or(ConstructionError::Overflow)?
            / (m as u128 + 1);
    }
    Ok(total)
}

fn pow(base: u128, exp: usize) -> Result<u128, ConstructionError> {
    let exp = u32::try_from(exp).map_err(|_| ConstructionError::Overflow)?;
    base.checked_pow(exp).ok_or(ConstructionError::Overflow)
}
