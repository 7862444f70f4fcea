//! Depth-first enumeration of canonical patterns.
//!
//! The search grows one closed walk on an implicit tree. At each step the
//! walk may cross its parent edge, re-enter an existing child edge, or open a
//! new child edge, tried in that order; since parent edges are older than
//! child edges and a new edge receives the next free label, this order
//! emits patterns lexicographically. A branch is cut as soon as the current
//! depth exceeds the remaining length, so every leaf of the search is a
//! valid pattern.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::error::{Error, Result};

use super::{Capp, MultiplicityPoly, Signature, SignatureClass, Symbol, MAX_REPRESENTABLE_LENGTH};

pub const DEFAULT_MAX_LENGTH: usize = 20;

/// Borrowed view of the pattern currently held by the search.
pub struct CappView<'a> {
    /// Canonical symbols.
    pub symbols: &'a [Symbol],
    /// Traversal count per edge, in first-traversal order (the signature).
    pub counts: &'a [u32],
    /// `alpha_j` per edge.
    pub roots: &'a [u32],
    /// Tree vertex from which each edge was opened; edge `j` leads to
    /// vertex `j + 1`.
    pub parents: &'a [usize],
}

impl CappView<'_> {
    pub fn to_capp(&self) -> Capp {
        Capp::from_canonical(self.symbols.to_vec())
    }

    pub fn signature(&self) -> Signature {
        Signature(self.counts.to_vec())
    }

    pub fn class(&self) -> SignatureClass {
        self.signature().class()
    }

    pub fn adjacent(&self, a: usize, b: usize) -> bool {
        let (pa, ca) = (self.parents[a], a + 1);
        let (pb, cb) = (self.parents[b], b + 1);
        a != b && (pa == pb || pa == cb || ca == pb || ca == cb)
    }
}

/// One exported enumeration row.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CappRecord {
    pub pattern: Capp,
    pub signature: Signature,
    pub multiplicity_roots: Vec<u32>,
}

/// `(pattern, x, y)`: an all-2 pattern with two adjacent edges, `x` first
/// traversed before `y`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct DistinguishedTriple {
    pub pattern: Capp,
    pub x: Symbol,
    pub y: Symbol,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClassCount {
    pub signature: SignatureClass,
    pub count: usize,
}

/// Pattern counts of one length, grouped by signature class.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SignatureCounts {
    pub length: usize,
    pub total: usize,
    /// Largest class first.
    pub classes: Vec<ClassCount>,
    /// Signature `(2, ..., 2)`.
    pub all_twos: usize,
    /// Signature `(4, 2, ..., 2)` in any order.
    pub one_four: usize,
    /// Everything except the single-symbol pattern.
    pub without_single: usize,
}

impl SignatureCounts {
    pub fn get(&self, class: &SignatureClass) -> usize {
        self.classes
            .iter()
            .find(|c| &c.signature == class)
            .map_or(0, |c| c.count)
    }
}

#[derive(Clone, Copy, Debug)]
pub struct Enumerator {
    max_length: usize,
}

impl Default for Enumerator {
    fn default() -> Self {
        Self {
            max_length: DEFAULT_MAX_LENGTH,
        }
    }
}

impl Enumerator {
    pub fn with_max_length(max_length: usize) -> Self {
        Self {
            max_length: max_length.min(MAX_REPRESENTABLE_LENGTH),
        }
    }

    pub fn max_length(&self) -> usize {
        self.max_length
    }

    fn check(&self, length: usize) -> Result<()> {
        if length > self.max_length {
            return Err(Error::LengthLimit {
                length,
                max: self.max_length,
            });
        }
        Ok(())
    }

    /// Calls `visit` once per canonical pattern of `length`, in
    /// lexicographic order. Odd lengths visit nothing.
    pub fn for_each<F: FnMut(&CappView<'_>)>(&self, length: usize, mut visit: F) -> Result<()> {
        self.check(length)?;
        if length % 2 == 1 {
            return Ok(());
        }
        let mut search = Search::new(length);
        search.run(0, &mut visit);
        Ok(())
    }

    pub fn enumerate(&self, length: usize) -> Result<Vec<Capp>> {
        let mut out = Vec::new();
        self.for_each(length, |view| out.push(view.to_capp()))?;
        Ok(out)
    }

    pub fn records(&self, length: usize) -> Result<Vec<CappRecord>> {
        let mut out = Vec::new();
        self.for_each(length, |view| {
            out.push(CappRecord {
                pattern: view.to_capp(),
                signature: view.signature(),
                multiplicity_roots: view.roots.to_vec(),
            })
        })?;
        Ok(out)
    }

    pub fn count_by_signature(&self, length: usize) -> Result<SignatureCounts> {
        let mut by_class: BTreeMap<SignatureClass, usize> = BTreeMap::new();
        let mut total = 0;
        self.for_each(length, |view| {
            total += 1;
            *by_class.entry(view.class()).or_default() += 1;
        })?;
        let all_twos = by_class
            .iter()
            .filter(|(c, _)| c.is_all_twos())
            .map(|(_, n)| n)
            .sum();
        let one_four = by_class
            .iter()
            .filter(|(c, _)| c.is_one_four())
            .map(|(_, n)| n)
            .sum();
        let classes = by_class
            .into_iter()
            .rev()
            .map(|(signature, count)| ClassCount { signature, count })
            .collect();
        Ok(SignatureCounts {
            length,
            total,
            classes,
            all_twos,
            one_four,
            without_single: total.saturating_sub(1),
        })
    }

    pub fn triples(&self, length: usize) -> Result<Vec<DistinguishedTriple>> {
        let mut out = Vec::new();
        self.for_each(length, |view| {
            if !view.counts.iter().all(|&c| c == 2) {
                return;
            }
            let r = view.counts.len();
            for x in 0..r {
                for y in x + 1..r {
                    if view.adjacent(x, y) {
                        out.push(DistinguishedTriple {
                            pattern: view.to_capp(),
                            x: x as Symbol,
                            y: y as Symbol,
                        });
                    }
                }
            }
        })?;
        Ok(out)
    }

    /// Multiplicity polynomial of every pattern, without materializing the
    /// patterns.
    pub fn multiplicities(&self, length: usize) -> Result<Vec<MultiplicityPoly>> {
        let mut out = Vec::new();
        self.for_each(length, |view| out.push(MultiplicityPoly::from_roots(view.roots.to_vec())))?;
        Ok(out)
    }
}

pub fn enumerate_capps(length: usize) -> Result<Vec<Capp>> {
    Enumerator::default().enumerate(length)
}

pub fn count_by_signature(length: usize) -> Result<SignatureCounts> {
    Enumerator::default().count_by_signature(length)
}

pub fn enumerate_triples(length: usize) -> Result<Vec<DistinguishedTriple>> {
    Enumerator::default().triples(length)
}

struct Search {
    length: usize,
    symbols: Vec<Symbol>,
    // per edge
    parents: Vec<usize>,
    counts: Vec<u32>,
    roots: Vec<u32>,
    // per vertex
    children: Vec<Vec<usize>>,
    depth: Vec<usize>,
}

impl Search {
    fn new(length: usize) -> Self {
        let edges = length / 2;
        Self {
            length,
            symbols: Vec::with_capacity(length),
            parents: Vec::with_capacity(edges),
            counts: Vec::with_capacity(edges),
            roots: Vec::with_capacity(edges),
            children: vec![Vec::new()],
            depth: vec![0],
        }
    }

    fn emit<F: FnMut(&CappView<'_>)>(&self, visit: &mut F) {
        visit(&CappView {
            symbols: &self.symbols,
            counts: &self.counts,
            roots: &self.roots,
            parents: &self.parents,
        });
    }

    fn cross<F: FnMut(&CappView<'_>)>(&mut self, edge: usize, to: usize, visit: &mut F) {
        self.symbols.push(edge as Symbol);
        self.counts[edge] += 1;
        self.run(to, visit);
        self.counts[edge] -= 1;
        self.symbols.pop();
    }

    fn run<F: FnMut(&CappView<'_>)>(&mut self, current: usize, visit: &mut F) {
        let remaining = self.length - self.symbols.len();
        if remaining == 0 {
            debug_assert_eq!(current, 0);
            self.emit(visit);
            return;
        }
        let after = remaining - 1;

        if current != 0 {
            let edge = current - 1;
            let parent = self.parents[edge];
            // depth(parent) < depth(current) <= remaining, always feasible
            self.cross(edge, parent, visit);
        }

        for i in 0..self.children[current].len() {
            let edge = self.children[current][i];
            if self.depth[edge + 1] <= after {
                self.cross(edge, edge + 1, visit);
            }
        }

        if self.depth[current] < after {
            let edge = self.parents.len();
            let child = edge + 1;
            // every edge already at `current` is adjacent to the new one
            let alpha = self.children[current].len() + usize::from(current != 0);
            self.parents.push(current);
            self.counts.push(0);
            self.roots.push(alpha as u32);
            self.children[current].push(edge);
            self.children.push(Vec::new());
            self.depth.push(self.depth[current] + 1);

            self.cross(edge, child, visit);

            self.depth.pop();
            self.children.pop();
            self.children[current].pop();
            self.roots.pop();
            self.counts.pop();
            self.parents.pop();
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn strings(length: usize) -> Vec<String> {
        enumerate_capps(length)
            .unwrap()
            .iter()
            .map(|p| p.to_string().replace(' ', ""))
            .collect()
    }

    #[test]
    fn small_lengths() {
        assert_eq!(strings(0), vec![""]);
        assert_eq!(strings(2), vec!["00"]);
        assert_eq!(strings(4), vec!["0000", "0011", "0110"]);
        assert!(strings(3).is_empty());
        assert_eq!(strings(6).len(), 12);
        assert_eq!(strings(8).len(), 57);
    }

    #[test]
    fn counts_by_class() {
        let c = count_by_signature(6).unwrap();
        let get = |s: &str| c.get(&s.parse().unwrap());
        assert_eq!((get("6"), get("4,2"), get("2,2,2")), (1, 6, 5));
        assert_eq!((c.all_twos, c.one_four, c.without_single), (5, 6, 11));

        let c = count_by_signature(4).unwrap();
        assert_eq!(c.get(&"4".parse().unwrap()), 1);
        assert_eq!(c.get(&"2,2".parse().unwrap()), 2);

        let c = count_by_signature(10).unwrap();
        assert_eq!(c.get(&"2,2,2,2,2".parse().unwrap()), 42);
    }

    #[test]
    fn triples_small() {
        assert_eq!(enumerate_triples(4).unwrap().len(), 2);
        assert_eq!(enumerate_triples(6).unwrap().len(), 12);
        assert_eq!(enumerate_triples(8).unwrap().len(), 56);
    }

    #[test]
    fn limit_enforced() {
        assert!(matches!(
            enumerate_capps(22),
            Err(Error::LengthLimit { length: 22, max: 20 })
        ));
        assert!(Enumerator::with_max_length(22).count_by_signature(2).is_ok());
    }

    #[test]
    fn incremental_roots_match_diagram() {
        Enumerator::default()
            .for_each(10, |view| {
                let p = view.to_capp();
                assert_eq!(p.multiplicity().roots(), view.roots);
                assert_eq!(p.signature().0, view.counts);
            })
            .unwrap();
    }
}
