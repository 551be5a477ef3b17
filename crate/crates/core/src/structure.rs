//! Validated structures. Values of these types are only produced by the
//! checkers in [`crate::axioms`] or by constructions known to satisfy the
//! axioms, and are immutable afterwards.

use crate::magma::{Elem, PartialMagma};

/// A partial magma together with its domain map `D`, satisfying (C1)–(C4).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Constellation {
    magma: PartialMagma,
    domain: Vec<Elem>,
    projections: Vec<Elem>,
    is_projection: Vec<bool>,
}

impl Constellation {
    pub(crate) fn new_unchecked(magma: PartialMagma, domain: Vec<Elem>) -> Self {
        debug_assert_eq!(magma.len(), domain.len());
        let mut is_projection = vec![false; magma.len()];
        for &e in &domain {
            is_projection[e] = true;
        }
        let projections = (0..magma.len()).filter(|&e| is_projection[e]).collect();
        Self {
            magma,
            domain,
            projections,
            is_projection,
        }
    }

    pub fn magma(&self) -> &PartialMagma {
        &self.magma
    }

    pub fn into_magma(self) -> PartialMagma {
        self.magma
    }

    pub fn len(&self) -> usize {
        self.magma.len()
    }

    pub fn is_empty(&self) -> bool {
        self.magma.is_empty()
    }

    #[inline]
    pub fn mul(&self, a: Elem, b: Elem) -> Option<Elem> {
        self.magma.mul(a, b)
    }

    #[inline]
    pub fn defined(&self, a: Elem, b: Elem) -> bool {
        self.magma.defined(a, b)
    }

    #[inline]
    pub fn d(&self, x: Elem) -> Elem {
        self.domain[x]
    }

    pub fn domain_map(&self) -> &[Elem] {
        &self.domain
    }

    /// `E = D(P)`, in index order.
    pub fn projections(&self) -> &[Elem] {
        &self.projections
    }

    pub fn is_projection(&self, x: Elem) -> bool {
        self.is_projection[x]
    }

    pub fn label(&self, x: Elem) -> &str {
        self.magma.label(x)
    }

    pub fn index_of(&self, label: &str) -> Option<Elem> {
        self.magma.index_of(label)
    }

    /// Projections `e` with `x · e` defined.
    pub fn right_projections(&self, x: Elem) -> impl Iterator<Item = Elem> + '_ {
        self.projections
            .iter()
            .copied()
            .filter(move |&e| self.defined(x, e))
    }
}

/// A partial magma satisfying (Cat1)–(Cat3), with its derived `D` and `R`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Category {
    magma: PartialMagma,
    domain: Vec<Elem>,
    range: Vec<Elem>,
    identities: Vec<Elem>,
}

impl Category {
    pub(crate) fn new_unchecked(magma: PartialMagma, domain: Vec<Elem>, range: Vec<Elem>) -> Self {
        let mut identities: Vec<Elem> = domain.clone();
        identities.sort_unstable();
        identities.dedup();
        Self {
            magma,
            domain,
            range,
            identities,
        }
    }

    pub fn magma(&self) -> &PartialMagma {
        &self.magma
    }

    pub fn len(&self) -> usize {
        self.magma.len()
    }

    pub fn is_empty(&self) -> bool {
        self.magma.is_empty()
    }

    #[inline]
    pub fn mul(&self, a: Elem, b: Elem) -> Option<Elem> {
        self.magma.mul(a, b)
    }

    #[inline]
    pub fn d(&self, x: Elem) -> Elem {
        self.domain[x]
    }

    #[inline]
    pub fn r(&self, x: Elem) -> Elem {
        self.range[x]
    }

    pub fn domain_map(&self) -> &[Elem] {
        &self.domain
    }

    pub fn range_map(&self) -> &[Elem] {
        &self.range
    }

    pub fn identities(&self) -> &[Elem] {
        &self.identities
    }

    pub fn label(&self, x: Elem) -> &str {
        self.magma.label(x)
    }

    pub fn index_of(&self, label: &str) -> Option<Elem> {
        self.magma.index_of(label)
    }

    /// The constellation obtained by forgetting `R`.
    pub fn reduct(&self) -> Constellation {
        Constellation::new_unchecked(self.magma.clone(), self.domain.clone())
    }
}
