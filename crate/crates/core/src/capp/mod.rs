//! Closed acyclic path patterns.
//!
//! A pattern is a string of edge symbols describing a closed walk on a
//! tree: every symbol occurs an even number of times, and between two
//! consecutive occurrences of any symbol every symbol occurs an even number
//! of times. Patterns are kept in canonical form, where symbols are
//! numbered `0, 1, 2, ...` in order of first occurrence, so that two
//! patterns differing only by a relabeling compare equal.

mod diagram;
mod enumerate;

use std::collections::HashMap;
use std::fmt;
use std::hash::Hash;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::poly::PolyInD;

pub use diagram::{diagram_of, WalkDiagram};
pub use enumerate::{
    count_by_signature, enumerate_capps, enumerate_triples, CappRecord, CappView,
    DistinguishedTriple, Enumerator, SignatureCounts, DEFAULT_MAX_LENGTH,
};

/// Symbol ids are bounded by half the pattern length.
pub type Symbol = u8;

/// Longest pattern representable with [`Symbol`] ids.
pub const MAX_REPRESENTABLE_LENGTH: usize = 2 * (Symbol::MAX as usize + 1);

/// A canonical closed acyclic path pattern.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Capp {
    symbols: Vec<Symbol>,
}

impl Capp {
    /// Validates and canonicalizes an arbitrary symbol sequence.
    pub fn new<T: Eq + Hash>(seq: &[T]) -> Result<Self> {
        canonicalize(seq)
    }

    /// Caller guarantees `symbols` is valid and canonical.
    pub(crate) fn from_canonical(symbols: Vec<Symbol>) -> Self {
        debug_assert!(is_valid_capp(&symbols));
        debug_assert!(is_canonical(&symbols));
        Self { symbols }
    }

    pub fn symbols(&self) -> &[Symbol] {
        &self.symbols
    }

    pub fn len(&self) -> usize {
        self.symbols.len()
    }

    pub fn is_empty(&self) -> bool {
        self.symbols.is_empty()
    }

    /// Number of distinct symbols (edges of the diagram).
    pub fn distinct(&self) -> usize {
        self.symbols.iter().map(|&s| s as usize + 1).max().unwrap_or(0)
    }

    pub fn signature(&self) -> Signature {
        signature_of(self)
    }

    pub fn multiplicity(&self) -> MultiplicityPoly {
        multiplicity_poly(self)
    }
}

impl fmt::Display for Capp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut it = self.symbols.iter();
        if let Some(s) = it.next() {
            write!(f, "{s}")?;
        }
        for s in it {
            write!(f, " {s}")?;
        }
        Ok(())
    }
}

/// Whitespace-separated tokens; any token text is accepted as a symbol and
/// the result is canonicalized (`"b b a a"` parses to `0 0 1 1`).
impl FromStr for Capp {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let tokens: Vec<&str> = s.split_whitespace().collect();
        if tokens.len() > MAX_REPRESENTABLE_LENGTH {
            return Err(Error::parse("pattern", s, "too long"));
        }
        canonicalize(&tokens)
    }
}

impl Serialize for Capp {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Capp {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// Checks both pattern conditions directly on the string. The empty
/// sequence is a valid pattern.
pub fn is_valid_capp<T: Eq + Hash>(seq: &[T]) -> bool {
    if seq.len() % 2 == 1 {
        return false;
    }
    let ids = dense_ids(seq);
    let alphabet = ids.iter().copied().max().map_or(0, |m| m + 1);
    let words = alphabet.div_ceil(64);

    // prefix[i] holds the occurrence parity of every symbol in seq[..i].
    let mut prefix = vec![0u64; (seq.len() + 1) * words];
    for (i, &id) in ids.iter().enumerate() {
        let (cur, next) = prefix.split_at_mut((i + 1) * words);
        next[..words].copy_from_slice(&cur[i * words..]);
        next[id / 64] ^= 1 << (id % 64);
    }
    let parity = |i: usize| &prefix[i * words..(i + 1) * words];

    if parity(seq.len()).iter().any(|&w| w != 0) {
        return false;
    }
    let mut last_seen: Vec<Option<usize>> = vec![None; alphabet];
    for (pos, &id) in ids.iter().enumerate() {
        if let Some(prev) = last_seen[id] {
            // substring strictly between prev and pos
            if parity(prev + 1) != parity(pos) {
                return false;
            }
        }
        last_seen[id] = Some(pos);
    }
    true
}

fn dense_ids<T: Eq + Hash>(seq: &[T]) -> Vec<usize> {
    let mut map: HashMap<&T, usize> = HashMap::new();
    seq.iter()
        .map(|s| {
            let next = map.len();
            *map.entry(s).or_insert(next)
        })
        .collect()
}

fn is_canonical(symbols: &[Symbol]) -> bool {
    let mut next = 0usize;
    symbols.iter().all(|&s| {
        let s = s as usize;
        if s == next {
            next += 1;
            true
        } else {
            s < next
        }
    })
}

/// Relabels symbols in first-occurrence order.
pub fn canonicalize<T: Eq + Hash>(seq: &[T]) -> Result<Capp> {
    if !is_valid_capp(seq) {
        return Err(Error::InvalidPattern(format!(
            "sequence of length {} violates the even-occurrence conditions",
            seq.len()
        )));
    }
    if seq.len() > MAX_REPRESENTABLE_LENGTH {
        return Err(Error::InvalidPattern(format!(
            "length {} exceeds the representable maximum {MAX_REPRESENTABLE_LENGTH}",
            seq.len()
        )));
    }
    let symbols = dense_ids(seq).into_iter().map(|id| id as Symbol).collect();
    Ok(Capp { symbols })
}

/// Traversal counts `(n_1, ..., n_r)` of each edge, in order of first
/// traversal.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct Signature(pub Vec<u32>);

impl Signature {
    /// The multiset of entries, sorted in decreasing order. Patterns with
    /// the same class contribute the same moment product.
    pub fn class(&self) -> SignatureClass {
        let mut entries = self.0.clone();
        entries.sort_unstable_by(|a, b| b.cmp(a));
        SignatureClass(entries)
    }

    pub fn total(&self) -> u32 {
        self.0.iter().sum()
    }
}

impl fmt::Display for Signature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_tuple(f, &self.0)
    }
}

/// A signature up to reordering: a partition of the pattern length into
/// even parts, stored in decreasing order.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct SignatureClass(pub Vec<u32>);

impl SignatureClass {
    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    pub fn is_all_twos(&self) -> bool {
        self.0.iter().all(|&n| n == 2)
    }

    /// `(4, 2, ..., 2)`.
    pub fn is_one_four(&self) -> bool {
        self.0.first() == Some(&4) && self.0[1..].iter().all(|&n| n == 2)
    }

    /// Human-readable moment monomial, e.g. `mu(4)*mu(2)^2`.
    pub fn monomial(&self) -> String {
        let mut out = Vec::new();
        let mut i = 0;
        while i < self.0.len() {
            let part = self.0[i];
            let run = self.0[i..].iter().take_while(|&&p| p == part).count();
            out.push(if run == 1 {
                format!("mu({part})")
            } else {
                format!("mu({part})^{run}")
            });
            i += run;
        }
        if out.is_empty() {
            "1".to_owned()
        } else {
            out.join("*")
        }
    }
}

impl fmt::Display for SignatureClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_tuple(f, &self.0)
    }
}

impl FromStr for SignatureClass {
    type Err = Error;

    /// Comma-separated parts, optionally parenthesized: `"4,2,2"` or `"(2,4,2)"`.
    fn from_str(s: &str) -> Result<Self> {
        let inner = s.trim().trim_start_matches('(').trim_end_matches(')');
        let mut parts = Vec::new();
        for tok in inner.split(',').map(str::trim).filter(|t| !t.is_empty()) {
            let n: u32 = tok
                .parse()
                .map_err(|_| Error::parse("signature", s, "expected comma-separated integers"))?;
            if n == 0 {
                return Err(Error::parse("signature", s, "entries must be positive"));
            }
            parts.push(n);
        }
        Ok(Signature(parts).class())
    }
}

fn write_tuple(f: &mut fmt::Formatter<'_>, entries: &[u32]) -> fmt::Result {
    f.write_str("(")?;
    for (i, n) in entries.iter().enumerate() {
        if i > 0 {
            f.write_str(",")?;
        }
        write!(f, "{n}")?;
    }
    f.write_str(")")
}

pub fn signature_of(pattern: &Capp) -> Signature {
    let mut counts = vec![0u32; pattern.distinct()];
    for &s in pattern.symbols() {
        counts[s as usize] += 1;
    }
    Signature(counts)
}

/// `m(d) = prod_j (d - alpha_j)` where `alpha_j` counts earlier edges that
/// share a tree vertex with edge `j`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct MultiplicityPoly {
    roots: Vec<u32>,
}

impl MultiplicityPoly {
    pub fn from_roots(roots: Vec<u32>) -> Self {
        Self { roots }
    }

    pub fn roots(&self) -> &[u32] {
        &self.roots
    }

    pub fn degree(&self) -> usize {
        self.roots.len()
    }

    pub fn eval(&self, d: i64) -> i128 {
        self.roots.iter().map(|&a| (d - a as i64) as i128).product()
    }

    pub fn to_poly(&self) -> PolyInD {
        PolyInD::from_roots(&self.roots)
    }
}

impl fmt::Display for MultiplicityPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, &a) in self.roots.iter().enumerate() {
            if i > 0 {
                f.write_str("*")?;
            }
            if a == 0 {
                f.write_str("d")?;
            } else {
                write!(f, "(d-{a})")?;
            }
        }
        Ok(())
    }
}

pub fn multiplicity_poly(pattern: &Capp) -> MultiplicityPoly {
    let diagram = diagram_of(pattern).expect("canonical patterns always have a diagram");
    MultiplicityPoly::from_roots(diagram.edge_multiplicities())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn letters(s: &str) -> Vec<&str> {
        s.split_whitespace().collect()
    }

    #[test]
    fn validity_examples() {
        assert!(is_valid_capp(&letters("e1 e1 e2 e2")));
        assert!(!is_valid_capp(&letters("x y x y")));
        assert!(is_valid_capp::<u8>(&[]));
        assert!(is_valid_capp(&letters("a b c c b d d b e e b a")));
        assert!(!is_valid_capp(&letters("a a a")));
        assert!(!is_valid_capp(&letters("a b b")));
        assert!(!is_valid_capp(&letters("a b c a c b")));
    }

    #[test]
    fn canonical_relabeling() {
        assert_eq!(Capp::new(&letters("b b a a")).unwrap().to_string(), "0 0 1 1");
        assert_eq!(Capp::new(&[0, 0, 1, 1]).unwrap().to_string(), "0 0 1 1");
        assert_eq!(Capp::new(&letters("c d d c")).unwrap().to_string(), "0 1 1 0");
        assert!(matches!(
            Capp::new(&letters("x y x y")),
            Err(Error::InvalidPattern(_))
        ));
    }

    #[test]
    fn signature_examples() {
        let sig = |s: &str| s.parse::<Capp>().unwrap().signature();
        assert_eq!(sig("0 0 0 0"), Signature(vec![4]));
        assert_eq!(sig("0 1 1 0"), Signature(vec![2, 2]));
        assert_eq!(sig("a b c c b d d b e e b a"), Signature(vec![2, 4, 2, 2, 2]));
        assert_eq!(sig("a b c c b d d b e e b a").class().to_string(), "(4,2,2,2,2)");
    }

    #[test]
    fn multiplicity_examples() {
        let m = |s: &str| s.parse::<Capp>().unwrap().multiplicity();
        assert_eq!(m("0 0 0 0").roots(), &[0]);
        assert_eq!(m("0 0 0 0").to_poly(), PolyInD::from_integers([0, 1]));
        assert_eq!(m("0 1 1 2 2 0").roots(), &[0, 1, 2]);
        let ex = m("a b c c b d d b e e b a");
        assert_eq!(ex.roots(), &[0, 1, 1, 2, 2]);
        assert_eq!(ex.to_string(), "d*(d-1)*(d-1)*(d-2)*(d-2)");
        assert_eq!(ex.eval(4), 4 * 9 * 4);
    }

    #[test]
    fn signature_class_parsing() {
        let c: SignatureClass = "2,4,2".parse().unwrap();
        assert_eq!(c.parts(), &[4, 2, 2]);
        assert!(c.is_one_four());
        assert_eq!(c.monomial(), "mu(4)*mu(2)^2");
        assert!("2,x".parse::<SignatureClass>().is_err());
        assert!("0".parse::<SignatureClass>().is_err());
    }
}
