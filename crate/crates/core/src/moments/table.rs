use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use serde::Serialize;

use crate::capp::{Enumerator, SignatureClass};
use crate::error::Result;
use crate::poly::PolyInD;
use crate::rational::Rational;

/// Sum of multiplicity polynomials over all patterns of one signature class.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ExpansionTerm {
    #[serde(rename = "signature")]
    pub class: SignatureClass,
    pub monomial: String,
    pub patterns: usize,
    pub coefficient: PolyInD,
}

/// All terms of the moment expansion at one length, largest class first.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ExpansionTable {
    pub order: usize,
    terms: Vec<ExpansionTerm>,
}

impl ExpansionTable {
    pub fn terms(&self) -> &[ExpansionTerm] {
        &self.terms
    }

    pub fn term(&self, class: &SignatureClass) -> Option<&ExpansionTerm> {
        self.terms.iter().find(|t| &t.class == class)
    }

    pub fn pattern_count(&self) -> usize {
        self.terms.iter().map(|t| t.patterns).sum()
    }

    fn build(order: usize, enumerator: &Enumerator) -> Result<Self> {
        // integer coefficients, lowest power first
        let mut groups: BTreeMap<SignatureClass, (usize, Vec<i128>)> = BTreeMap::new();
        let mut scratch: Vec<i128> = Vec::with_capacity(order / 2 + 1);
        enumerator.for_each(order, |view| {
            scratch.clear();
            scratch.push(1);
            for &alpha in view.roots {
                scratch.push(0);
                for i in (0..scratch.len()).rev() {
                    let lower = if i > 0 { scratch[i - 1] } else { 0 };
                    scratch[i] = lower - i128::from(alpha) * scratch[i];
                }
            }
            let entry = groups.entry(view.class()).or_default();
            entry.0 += 1;
            if entry.1.len() < scratch.len() {
                entry.1.resize(scratch.len(), 0);
            }
            for (acc, c) in entry.1.iter_mut().zip(&scratch) {
                *acc += c;
            }
        })?;
        let terms = groups
            .into_iter()
            .rev()
            .map(|(class, (patterns, coeffs))| ExpansionTerm {
                monomial: class.monomial(),
                coefficient: PolyInD::from_coefficients(
                    coeffs
                        .into_iter()
                        .map(|c| Rational::from_integer(BigInt::from(c)))
                        .collect(),
                ),
                class,
                patterns,
            })
            .collect();
        Ok(Self { order, terms })
    }
}

type Cache = Mutex<HashMap<usize, Arc<ExpansionTable>>>;

fn cache() -> &'static Cache {
    static TABLES: OnceLock<Cache> = OnceLock::new();
    TABLES.get_or_init(Default::default)
}

/// Cached per length. The limit is checked on every call, so a cached
/// table is never handed out past the caller's limit.
pub(crate) fn expansion_table(order: usize, enumerator: &Enumerator) -> Result<Arc<ExpansionTable>> {
    if let Some(hit) = cache().lock().expect("table cache poisoned").get(&order) {
        if order <= enumerator.max_length() {
            return Ok(Arc::clone(hit));
        }
    }
    let table = Arc::new(ExpansionTable::build(order, enumerator)?);
    let mut guard = cache().lock().expect("table cache poisoned");
    Ok(Arc::clone(guard.entry(order).or_insert(table)))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fourth_order_terms() {
        let t = expansion_table(4, &Enumerator::default()).unwrap();
        assert_eq!(t.terms().len(), 2);
        let four = t.term(&"4".parse().unwrap()).unwrap();
        assert_eq!(four.coefficient, PolyInD::from_integers([0, 1]));
        let twos = t.term(&"2,2".parse().unwrap()).unwrap();
        // 2d(d-1)
        assert_eq!(twos.coefficient, PolyInD::from_integers([0, -2, 2]));
        assert_eq!(twos.monomial, "mu(2)^2");
        assert_eq!(t.pattern_count(), 3);
    }

    #[test]
    fn limit_applies_to_cached_tables() {
        expansion_table(6, &Enumerator::default()).unwrap();
        assert!(expansion_table(6, &Enumerator::with_max_length(4)).is_err());
    }
}
