//! Equivalence relations on a carrier, stored as canonical block lists.

use std::fmt;

use crate::magma::{Elem, PartialMagma};

/// A partition of `0..n`. Blocks are sorted internally and ordered by their
/// least element, so equal relations have equal representations and the
/// derived `Ord` is lexicographic on blocks.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    blocks: Vec<Vec<Elem>>,
    class: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PartitionError {
    Empty,
    EmptyBlock,
    OutOfRange(Elem),
    Repeated(Elem),
    Missing(Elem),
    UnknownLabel(String),
}

impl fmt::Display for PartitionError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PartitionError::Empty => write!(f, "no blocks"),
            PartitionError::EmptyBlock => write!(f, "empty block"),
            PartitionError::OutOfRange(x) => write!(f, "element {x} out of range"),
            PartitionError::Repeated(x) => write!(f, "element {x} appears twice"),
            PartitionError::Missing(x) => write!(f, "element {x} is not covered"),
            PartitionError::UnknownLabel(l) => write!(f, "unknown element `{l}`"),
        }
    }
}

impl std::error::Error for PartitionError {}

impl Partition {
    pub fn from_blocks(n: usize, blocks: Vec<Vec<Elem>>) -> Result<Self, PartitionError> {
        if n > 0 && blocks.is_empty() {
            return Err(PartitionError::Empty);
        }
        let mut class = vec![usize::MAX; n];
        for (i, block) in blocks.iter().enumerate() {
            if block.is_empty() {
                return Err(PartitionError::EmptyBlock);
            }
            for &x in block {
                if x >= n {
                    return Err(PartitionError::OutOfRange(x));
                }
                if class[x] != usize::MAX {
                    return Err(PartitionError::Repeated(x));
                }
                class[x] = i;
            }
        }
        if let Some(x) = class.iter().position(|&c| c == usize::MAX) {
            return Err(PartitionError::Missing(x));
        }
        Ok(Self::from_class_ids(&class))
    }

    /// Blocks given by label, resolved against `m`.
    pub fn from_labels<S: AsRef<str>>(m: &PartialMagma, blocks: &[Vec<S>]) -> Result<Self, PartitionError> {
        let index = m.label_index();
        let blocks = blocks
            .iter()
            .map(|b| {
                b.iter()
                    .map(|l| {
                        index
                            .get(l.as_ref())
                            .copied()
                            .ok_or_else(|| PartitionError::UnknownLabel(l.as_ref().to_string()))
                    })
                    .collect::<Result<Vec<_>, _>>()
            })
            .collect::<Result<Vec<_>, _>>()?;
        Self::from_blocks(m.len(), blocks)
    }

    /// Elements with equal ids share a block. Ids are arbitrary.
    pub fn from_class_ids(ids: &[usize]) -> Self {
        let mut remap: Vec<(usize, usize)> = Vec::new();
        let mut blocks: Vec<Vec<Elem>> = Vec::new();
        for (x, &id) in ids.iter().enumerate() {
            match remap.iter().find(|(k, _)| *k == id) {
                Some(&(_, b)) => blocks[b].push(x),
                None => {
                    remap.push((id, blocks.len()));
                    blocks.push(vec![x]);
                }
            }
        }
        let mut class = vec![0; ids.len()];
        for (b, block) in blocks.iter().enumerate() {
            for &x in block {
                class[x] = b;
            }
        }
        Self { blocks, class }
    }

    pub fn diagonal(n: usize) -> Self {
        Self::from_class_ids(&(0..n).collect::<Vec<_>>())
    }

    pub fn full(n: usize) -> Self {
        Self::from_class_ids(&vec![0; n])
    }

    pub fn blocks(&self) -> &[Vec<Elem>] {
        &self.blocks
    }

    /// Carrier size.
    pub fn len(&self) -> usize {
        self.class.len()
    }

    pub fn is_empty(&self) -> bool {
        self.class.is_empty()
    }

    pub fn num_blocks(&self) -> usize {
        self.blocks.len()
    }

    /// Block number of `x` (blocks numbered by least element).
    pub fn class_of(&self, x: Elem) -> usize {
        self.class[x]
    }

    pub fn class_ids(&self) -> &[usize] {
        &self.class
    }

    pub fn related(&self, x: Elem, y: Elem) -> bool {
        self.class[x] == self.class[y]
    }

    pub fn block_of(&self, x: Elem) -> &[Elem] {
        &self.blocks[self.class[x]]
    }

    pub fn is_diagonal(&self) -> bool {
        self.blocks.len() == self.class.len()
    }

    /// `self ⊆ other` as relations.
    pub fn refines(&self, other: &Partition) -> bool {
        self.len() == other.len()
            && self
                .blocks
                .iter()
                .all(|b| b.iter().all(|&x| other.related(x, b[0])))
    }

    /// Intersection of the two relations.
    pub fn meet(&self, other: &Partition) -> Partition {
        let ids: Vec<usize> = (0..self.len())
            .map(|x| self.class[x] * other.num_blocks() + other.class[x])
            .collect();
        Self::from_class_ids(&ids)
    }

    /// Least equivalence containing both relations.
    pub fn join(&self, other: &Partition) -> Partition {
        let mut uf = UnionFind::new(self.len());
        for p in [self, other] {
            for b in &p.blocks {
                for &x in &b[1..] {
                    uf.union(b[0], x);
                }
            }
        }
        uf.partition()
    }

    /// Related pairs `(x, y)` with `x < y`.
    pub fn pairs(&self) -> impl Iterator<Item = (Elem, Elem)> + '_ {
        self.blocks.iter().flat_map(|b| {
            b.iter()
                .enumerate()
                .flat_map(move |(i, &x)| b[i + 1..].iter().map(move |&y| (x, y)))
        })
    }

    /// `{a b} {c} …` using labels from `m`.
    pub fn render(&self, m: &PartialMagma) -> String {
        self.blocks
            .iter()
            .map(|b| {
                let inner: Vec<&str> = b.iter().map(|&x| m.label(x)).collect();
                format!("{{{}}}", inner.join(" "))
            })
            .collect::<Vec<_>>()
            .join(" ")
    }
}

/// Plain union-find used when closing relations.
#[derive(Clone, Debug)]
pub(crate) struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    pub(crate) fn new(n: usize) -> Self {
        Self {
            parent: (0..n).collect(),
        }
    }

    pub(crate) fn from_partition(p: &Partition) -> Self {
        let mut uf = Self::new(p.len());
        for b in p.blocks() {
            for &x in &b[1..] {
                uf.union(b[0], x);
            }
        }
        uf
    }

    pub(crate) fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    /// Returns true when two distinct classes were merged.
    pub(crate) fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        let (lo, hi) = if ra < rb { (ra, rb) } else { (rb, ra) };
        self.parent[hi] = lo;
        true
    }

    pub(crate) fn partition(&mut self) -> Partition {
        let ids: Vec<usize> = (0..self.parent.len()).map(|x| self.find(x)).collect();
        Partition::from_class_ids(&ids)
    }
}
