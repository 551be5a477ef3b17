//! Isomorphism search by colour refinement and backtracking.
//!
//! Elements are assigned in index order and candidates tried in ascending
//! order, with forced images propagated through products and unary maps.
//! Refinement only discards candidates no isomorphism can use, so the
//! first complete assignment is the lexicographically least isomorphism.

use std::collections::HashMap;

use crate::error::MorphismError;
use crate::magma::{Elem, PartialMagma};
use crate::partition::Partition;
use crate::structure::{Category, Constellation};

const NONE: usize = usize::MAX;

struct Shape<'a> {
    magma: &'a PartialMagma,
    unary: Vec<&'a [Elem]>,
    classes: Option<&'a Partition>,
}

impl Shape<'_> {
    fn len(&self) -> usize {
        self.magma.len()
    }

    fn initial_colour(&self, x: Elem) -> Vec<u64> {
        let n = self.len();
        let row = (0..n).filter(|&y| self.magma.defined(x, y)).count();
        let col = (0..n).filter(|&y| self.magma.defined(y, x)).count();
        let mut sig = vec![
            u64::from(self.magma.mul(x, x) == Some(x)),
            row as u64,
            col as u64,
            self.classes.map_or(0, |p| p.block_of(x).len() as u64),
        ];
        sig.extend(self.unary.iter().map(|u| u64::from(u[x] == x)));
        sig
    }

    fn signature(&self, x: Elem, colour: &[u32]) -> Vec<u64> {
        let n = self.len();
        let mut sig = vec![u64::from(colour[x])];
        sig.extend(self.unary.iter().map(|u| u64::from(colour[u[x]])));
        let mut right: Vec<u64> = (0..n)
            .filter_map(|y| self.magma.mul(x, y).map(|z| pack(colour[y], colour[z])))
            .collect();
        let mut left: Vec<u64> = (0..n)
            .filter_map(|y| self.magma.mul(y, x).map(|z| pack(colour[y], colour[z])))
            .collect();
        right.sort_unstable();
        left.sort_unstable();
        sig.push(u64::MAX);
        sig.extend(right);
        sig.push(u64::MAX);
        sig.extend(left);
        if let Some(p) = self.classes {
            let mut mates: Vec<u64> = p.block_of(x).iter().map(|&y| u64::from(colour[y])).collect();
            mates.sort_unstable();
            sig.push(u64::MAX);
            sig.extend(mates);
        }
        sig
    }
}

fn pack(a: u32, b: u32) -> u64 {
    (u64::from(a) << 32) | u64::from(b)
}

fn recolour(a: &[Vec<u64>], b: &[Vec<u64>]) -> Option<(Vec<u32>, Vec<u32>, usize)> {
    let mut ids: HashMap<&[u64], u32> = HashMap::new();
    let mut sigs: Vec<&[u64]> = a.iter().chain(b.iter()).map(Vec::as_slice).collect();
    sigs.sort_unstable();
    sigs.dedup();
    for (i, s) in sigs.iter().enumerate() {
        ids.insert(s, i as u32);
    }
    let ca: Vec<u32> = a.iter().map(|s| ids[s.as_slice()]).collect();
    let cb: Vec<u32> = b.iter().map(|s| ids[s.as_slice()]).collect();
    let mut ha = ca.clone();
    let mut hb = cb.clone();
    ha.sort_unstable();
    hb.sort_unstable();
    (ha == hb).then_some((ca, cb, sigs.len()))
}

fn refine(a: &Shape, b: &Shape) -> Option<(Vec<u32>, Vec<u32>)> {
    let sa: Vec<Vec<u64>> = (0..a.len()).map(|x| a.initial_colour(x)).collect();
    let sb: Vec<Vec<u64>> = (0..b.len()).map(|x| b.initial_colour(x)).collect();
    let (mut ca, mut cb, mut classes) = recolour(&sa, &sb)?;
    loop {
        let sa: Vec<Vec<u64>> = (0..a.len()).map(|x| a.signature(x, &ca)).collect();
        let sb: Vec<Vec<u64>> = (0..b.len()).map(|x| b.signature(x, &cb)).collect();
        let (na, nb, count) = recolour(&sa, &sb)?;
        ca = na;
        cb = nb;
        if count == classes {
            return Some((ca, cb));
        }
        classes = count;
    }
}

struct Search<'a> {
    a: &'a Shape<'a>,
    b: &'a Shape<'a>,
    ca: Vec<u32>,
    cb: Vec<u32>,
    fwd: Vec<usize>,
    bwd: Vec<usize>,
    trail: Vec<usize>,
}

impl Search<'_> {
    fn undo(&mut self, mark: usize) {
        while self.trail.len() > mark {
            let x = self.trail.pop().expect("trail longer than mark");
            self.bwd[self.fwd[x]] = NONE;
            self.fwd[x] = NONE;
        }
    }

    fn assign(&mut self, x: Elem, y: Elem) -> bool {
        let mut queue = vec![(x, y)];
        while let Some((x, y)) = queue.pop() {
            if self.fwd[x] != NONE {
                if self.fwd[x] != y {
                    return false;
                }
                continue;
            }
            if self.bwd[y] != NONE || self.ca[x] != self.cb[y] {
                return false;
            }
            self.fwd[x] = y;
            self.bwd[y] = x;
            self.trail.push(x);
            for (ua, ub) in self.a.unary.iter().zip(&self.b.unary) {
                queue.push((ua[x], ub[y]));
            }
            for &p in &self.trail {
                let q = self.fwd[p];
                for (s, t, s2, t2) in [(p, x, q, y), (x, p, y, q)] {
                    match (self.a.magma.mul(s, t), self.b.magma.mul(s2, t2)) {
                        (None, None) => {}
                        (Some(u), Some(v)) => queue.push((u, v)),
                        _ => return false,
                    }
                }
                if let (Some(pa), Some(pb)) = (self.a.classes, self.b.classes) {
                    if pa.related(p, x) != pb.related(q, y) {
                        return false;
                    }
                }
            }
        }
        true
    }

    fn dfs(&mut self) -> bool {
        let Some(x) = self.fwd.iter().position(|&y| y == NONE) else {
            return true;
        };
        for y in 0..self.b.len() {
            if self.bwd[y] != NONE || self.cb[y] != self.ca[x] {
                continue;
            }
            let mark = self.trail.len();
            if self.assign(x, y) && self.dfs() {
                return true;
            }
            self.undo(mark);
        }
        false
    }
}

fn search(a: &Shape, b: &Shape) -> Result<Option<Vec<Elem>>, MorphismError> {
    if a.len() != b.len() {
        return Err(MorphismError::SizeMismatch {
            left: a.len(),
            right: b.len(),
        });
    }
    let Some((ca, cb)) = refine(a, b) else {
        return Ok(None);
    };
    let n = a.len();
    let mut s = Search {
        a,
        b,
        ca,
        cb,
        fwd: vec![NONE; n],
        bwd: vec![NONE; n],
        trail: Vec::with_capacity(n),
    };
    Ok(s.dfs().then_some(s.fwd))
}

/// The lexicographically least constellation isomorphism `a → b`, if any.
pub fn find_isomorphism(a: &Constellation, b: &Constellation) -> Result<Option<Vec<Elem>>, MorphismError> {
    search(
        &Shape {
            magma: a.magma(),
            unary: vec![a.domain_map()],
            classes: None,
        },
        &Shape {
            magma: b.magma(),
            unary: vec![b.domain_map()],
            classes: None,
        },
    )
}

pub fn find_category_isomorphism(a: &Category, b: &Category) -> Result<Option<Vec<Elem>>, MorphismError> {
    search(
        &Shape {
            magma: a.magma(),
            unary: vec![a.domain_map(), a.range_map()],
            classes: None,
        },
        &Shape {
            magma: b.magma(),
            unary: vec![b.domain_map(), b.range_map()],
            classes: None,
        },
    )
}

/// A category isomorphism that also matches the distinguished congruences
/// in both directions.
pub fn find_delta_isomorphism(
    a: &Category,
    delta_a: &Partition,
    b: &Category,
    delta_b: &Partition,
) -> Result<Option<Vec<Elem>>, MorphismError> {
    search(
        &Shape {
            magma: a.magma(),
            unary: vec![a.domain_map(), a.range_map()],
            classes: Some(delta_a),
        },
        &Shape {
            magma: b.magma(),
            unary: vec![b.domain_map(), b.range_map()],
            classes: Some(delta_b),
        },
    )
}
