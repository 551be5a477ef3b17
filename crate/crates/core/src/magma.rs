//! Finite carriers with a partial binary operation.
//!
//! Elements are addressed by index (`0..n`) and carry a label used for all
//! human-facing input and output. The table is dense: entry `(a, b)` is
//! `Some(c)` when `a · b = c` and `None` when the product is undefined.

use std::collections::HashMap;

use crate::error::MagmaError;

/// Index of an element in its carrier.
pub type Elem = usize;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PartialMagma {
    labels: Vec<String>,
    table: Vec<Option<Elem>>,
}

impl PartialMagma {
    /// A carrier with the given labels and no defined products.
    pub fn new<I, S>(labels: I) -> Result<Self, MagmaError>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let labels: Vec<String> = labels.into_iter().map(Into::into).collect();
        check_labels(&labels)?;
        let n = labels.len();
        Ok(Self {
            labels,
            table: vec![None; n * n],
        })
    }

    /// Builds a magma from a row-major `n × n` table.
    pub fn from_table<I, S>(labels: I, table: Vec<Option<Elem>>) -> Result<Self, MagmaError>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let mut m = Self::new(labels)?;
        let n = m.len();
        if table.len() != n * n {
            return Err(MagmaError::TableShape {
                expected: n * n,
                got: table.len(),
            });
        }
        for (i, entry) in table.iter().enumerate() {
            if let Some(c) = *entry {
                if c >= n {
                    return Err(MagmaError::EntryOutOfRange {
                        row: i / n,
                        col: i % n,
                        value: c,
                    });
                }
            }
        }
        m.table = table;
        Ok(m)
    }

    /// Builds a magma from labelled product triples `a · b = c`.
    pub fn from_products<I, S>(labels: I, products: &[(&str, &str, &str)]) -> Result<Self, MagmaError>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let mut m = Self::new(labels)?;
        for &(a, b, c) in products {
            let a = m.require(a)?;
            let b = m.require(b)?;
            let c = m.require(c)?;
            if m.mul(a, b).is_some() {
                return Err(MagmaError::DuplicateProduct {
                    left: m.labels[a].clone(),
                    right: m.labels[b].clone(),
                });
            }
            m.set(a, b, Some(c));
        }
        Ok(m)
    }

    fn require(&self, label: &str) -> Result<Elem, MagmaError> {
        self.index_of(label)
            .ok_or_else(|| MagmaError::UnknownLabel(label.to_string()))
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, x: Elem) -> &str {
        &self.labels[x]
    }

    pub fn index_of(&self, label: &str) -> Option<Elem> {
        self.labels.iter().position(|l| l == label)
    }

    /// Label lookup table, for callers resolving many labels at once.
    pub fn label_index(&self) -> HashMap<&str, Elem> {
        self.labels
            .iter()
            .enumerate()
            .map(|(i, l)| (l.as_str(), i))
            .collect()
    }

    #[inline]
    pub fn mul(&self, a: Elem, b: Elem) -> Option<Elem> {
        self.table[a * self.labels.len() + b]
    }

    #[inline]
    pub fn defined(&self, a: Elem, b: Elem) -> bool {
        self.mul(a, b).is_some()
    }

    /// Sets or clears a table entry. Panics if an index is out of range.
    pub fn set(&mut self, a: Elem, b: Elem, value: Option<Elem>) {
        let n = self.labels.len();
        assert!(a < n && b < n, "element index out of range");
        if let Some(c) = value {
            assert!(c < n, "product index out of range");
        }
        self.table[a * n + b] = value;
    }

    pub fn table(&self) -> &[Option<Elem>] {
        &self.table
    }

    /// All defined products `(a, b, a·b)` in row-major order.
    pub fn products(&self) -> impl Iterator<Item = (Elem, Elem, Elem)> + '_ {
        let n = self.labels.len();
        self.table
            .iter()
            .enumerate()
            .filter_map(move |(i, c)| c.map(|c| (i / n, i % n, c)))
    }

    pub fn product_count(&self) -> usize {
        self.table.iter().filter(|c| c.is_some()).count()
    }

    /// The opposite magma: `a ·' b = b · a`.
    pub fn dual(&self) -> Self {
        let n = self.len();
        let mut table = vec![None; n * n];
        for a in 0..n {
            for b in 0..n {
                table[b * n + a] = self.mul(a, b);
            }
        }
        Self {
            labels: self.labels.clone(),
            table,
        }
    }

    /// `e` such that whenever `x · e` is defined it equals `x`.
    pub fn is_right_identity(&self, e: Elem) -> bool {
        (0..self.len()).all(|x| self.mul(x, e).is_none_or(|p| p == x))
    }

    /// `e` such that whenever `e · x` is defined it equals `x`.
    pub fn is_left_identity(&self, e: Elem) -> bool {
        (0..self.len()).all(|x| self.mul(e, x).is_none_or(|p| p == x))
    }

    pub fn right_identities(&self) -> Vec<Elem> {
        (0..self.len()).filter(|&e| self.is_right_identity(e)).collect()
    }

    pub fn left_identities(&self) -> Vec<Elem> {
        (0..self.len()).filter(|&e| self.is_left_identity(e)).collect()
    }

    /// The restriction of the table to `subset`, with elements renumbered in
    /// the order given. Products landing outside `subset` are dropped.
    pub fn restrict(&self, subset: &[Elem]) -> Self {
        let mut position = vec![None; self.len()];
        for (i, &x) in subset.iter().enumerate() {
            position[x] = Some(i);
        }
        let k = subset.len();
        let mut table = vec![None; k * k];
        for (i, &a) in subset.iter().enumerate() {
            for (j, &b) in subset.iter().enumerate() {
                table[i * k + j] = self.mul(a, b).and_then(|c| position[c]);
            }
        }
        Self {
            labels: subset.iter().map(|&x| self.labels[x].clone()).collect(),
            table,
        }
    }

    /// Same table, new labels.
    pub fn relabel<I, S>(&self, labels: I) -> Result<Self, MagmaError>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let labels: Vec<String> = labels.into_iter().map(Into::into).collect();
        if labels.len() != self.len() {
            return Err(MagmaError::TableShape {
                expected: self.len(),
                got: labels.len(),
            });
        }
        check_labels(&labels)?;
        Ok(Self {
            labels,
            table: self.table.clone(),
        })
    }

    /// Picks `base`, or `base'`, `base''`, … until the label is unused.
    pub fn fresh_label(&self, base: &str) -> String {
        let mut candidate = base.to_string();
        while self.index_of(&candidate).is_some() {
            candidate.push('\'');
        }
        candidate
    }
}

fn check_labels(labels: &[String]) -> Result<(), MagmaError> {
    if labels.is_empty() {
        return Err(MagmaError::EmptyCarrier);
    }
    let mut seen = HashMap::with_capacity(labels.len());
    for (i, l) in labels.iter().enumerate() {
        if l.is_empty() {
            return Err(MagmaError::EmptyLabel { index: i });
        }
        if seen.insert(l.as_str(), i).is_some() {
            return Err(MagmaError::DuplicateLabel(l.clone()));
        }
    }
    Ok(())
}
