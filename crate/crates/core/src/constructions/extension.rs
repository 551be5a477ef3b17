//! Extensions of a constellation: adjoining a global right identity,
//! adjoining a sink for incomposable elements, and the canonical extension
//! to a category.

use std::collections::HashMap;

use crate::axioms::cat1_tally;
use crate::derived::is_composable_element;
use crate::error::ConstructionError;
use crate::magma::{Elem, PartialMagma};
use crate::structure::{Category, Constellation};

/// A constellation enlarged by one element.
#[derive(Clone, Debug)]
pub struct Extension {
    pub constellation: Constellation,
    /// Index of the adjoined element (always the last one).
    pub new_element: Elem,
}

impl Extension {
    pub fn new_label(&self) -> &str {
        self.constellation.label(self.new_element)
    }
}

fn enlarge(p: &Constellation, label: String) -> (PartialMagma, Vec<Elem>, Elem) {
    let n = p.len();
    let mut labels = p.magma().labels().to_vec();
    labels.push(label);
    let mut table = vec![None; (n + 1) * (n + 1)];
    for (a, b, c) in p.magma().products() {
        table[a * (n + 1) + b] = Some(c);
    }
    let mut m = PartialMagma::from_table(labels, table).expect("labels stay unique");
    m.set(n, n, Some(n));
    let mut domain = p.domain_map().to_vec();
    domain.push(n);
    (m, domain, n)
}

/// `P¹`: a new element `1` with `s · 1 = s` for every `s`, `1 · 1 = 1`, and
/// `1 · s` undefined for old `s`. The label is `1`, primed until fresh.
pub fn adjoin_identity(p: &Constellation) -> Extension {
    let label = p.magma().fresh_label("1");
    let (mut m, domain, one) = enlarge(p, label);
    for s in 0..p.len() {
        m.set(s, one, Some(s));
    }
    Extension {
        constellation: Constellation::new_unchecked(m, domain),
        new_element: one,
    }
}

/// `P*`: a new projection `*` with `x · * = x` for each incomposable `x`.
/// Requires (Cat1).
pub fn star_extension(p: &Constellation) -> Result<Extension, ConstructionError> {
    if let Some(w) = cat1_tally(p.magma()).0 {
        return Err(ConstructionError::Cat1Violated {
            x: p.label(w[0]).to_string(),
            y: p.label(w[1]).to_string(),
            z: p.label(w[2]).to_string(),
        });
    }
    let incomposable: Vec<Elem> = (0..p.len()).filter(|&x| !is_composable_element(p, x)).collect();
    let label = p.magma().fresh_label("*");
    let (mut m, domain, star) = enlarge(p, label);
    for x in incomposable {
        m.set(x, star, Some(x));
    }
    Ok(Extension {
        constellation: Constellation::new_unchecked(m, domain),
        new_element: star,
    })
}

/// The category `C(P)` of pairs `(s, e)` with `e ∈ D(P)` and `s · e = s`.
#[derive(Clone, Debug)]
pub struct CanonicalExtension {
    pub base: Constellation,
    pub category: Category,
    /// `pairs[i]` is the pair represented by element `i` of the category.
    pub pairs: Vec<(Elem, Elem)>,
    index: HashMap<(Elem, Elem), Elem>,
}

impl CanonicalExtension {
    pub fn pair_index(&self, s: Elem, e: Elem) -> Option<Elem> {
        self.index.get(&(s, e)).copied()
    }

    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }
}

/// Builds `C(P)`. Pairs are ordered lexicographically by `(s, e)` and
/// labelled `(s,e)`. `(s, e) ∘ (t, f) = (s · t, f)` when `e = D(t)`.
pub fn canonical_extension(p: &Constellation) -> CanonicalExtension {
    let pairs: Vec<(Elem, Elem)> = (0..p.len())
        .flat_map(|s| p.right_projections(s).map(move |e| (s, e)))
        .collect();
    let index: HashMap<(Elem, Elem), Elem> = pairs.iter().enumerate().map(|(i, &pr)| (pr, i)).collect();
    let labels: Vec<String> = pairs
        .iter()
        .map(|&(s, e)| format!("({},{})", p.label(s), p.label(e)))
        .collect();
    let k = pairs.len();
    let mut table = vec![None; k * k];
    for (i, &(s, e)) in pairs.iter().enumerate() {
        for (j, &(t, f)) in pairs.iter().enumerate() {
            if e == p.d(t) {
                let st = p.mul(s, t).expect("s·e and e·t defined imply s·t defined");
                table[i * k + j] = Some(index[&(st, f)]);
            }
        }
    }
    let domain = pairs.iter().map(|&(s, _)| index[&(p.d(s), p.d(s))]).collect();
    let range = pairs.iter().map(|&(_, e)| index[&(e, e)]).collect();
    let magma = PartialMagma::from_table(labels, table).expect("pair labels are unique");
    CanonicalExtension {
        base: p.clone(),
        category: Category::new_unchecked(magma, domain, range),
        pairs,
        index,
    }
}
