//! Exact moment computations.
//!
//! The expected `k`-th spectral moment of a large random `d`-regular graph
//! with i.i.d. edge weights `W` is a sum over all patterns `pi` of length
//! `k` of `m_pi(d) * prod_i mu_W(n_i)`. Patterns are grouped by signature
//! class first, so each length reduces to a short table of
//! `(class, polynomial in d)` terms that is computed once and cached.

mod eigen;
mod table;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::capp::{Enumerator, SignatureClass};
use crate::error::{Error, Result};
use crate::poly::PolyInD;
use crate::rational::{binomial, format_rational, Rational};

pub use eigen::{eighth_moment_closed_form, eigenmoments, DeviationRow, EigenmomentTable};
pub use table::{ExpansionTable, ExpansionTerm};

/// `c_k`: moments of the semicircle law with variance 1/4,
/// `c_{2k} = binom(2k, k) / (4^k (k+1))`, zero for odd orders.
pub fn semicircle_moment(order: u32) -> Rational {
    if order % 2 == 1 {
        return Rational::zero();
    }
    let k = u64::from(order / 2);
    let den = BigInt::from(k + 1) * num_traits::pow(BigInt::from(4u32), k as usize);
    Rational::new(binomial(2 * k, k), den)
}

/// Moments `mu(1), ..., mu(K)` of a distribution; `mu(0) = 1` implicitly.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MomentSequence {
    label: String,
    values: Vec<Rational>,
}

impl MomentSequence {
    /// `values[i]` is `mu(i + 1)`.
    pub fn new(label: impl Into<String>, values: Vec<Rational>) -> Self {
        Self {
            label: label.into(),
            values,
        }
    }

    pub fn from_fn(label: impl Into<String>, max_order: u32, f: impl Fn(u32) -> Rational) -> Self {
        Self::new(label, (1..=max_order).map(f).collect())
    }

    /// Unweighted graphs: every weight is 1.
    pub fn all_ones(max_order: u32) -> Self {
        Self::from_fn("constant 1", max_order, |_| Rational::one())
    }

    pub fn semicircle(max_order: u32) -> Self {
        Self::from_fn("semicircle var 1/4", max_order, semicircle_moment)
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn max_order(&self) -> usize {
        self.values.len()
    }

    pub fn values(&self) -> &[Rational] {
        &self.values
    }

    pub fn get(&self, order: u32) -> Result<Rational> {
        if order == 0 {
            return Ok(Rational::one());
        }
        self.values
            .get(order as usize - 1)
            .cloned()
            .ok_or(Error::MissingMoment {
                requested: order as usize,
                available: self.values.len(),
            })
    }

    /// `prod_i mu(n_i)` over the parts of a signature class.
    pub fn product(&self, class: &SignatureClass) -> Result<Rational> {
        let mut acc = Rational::one();
        for &part in class.parts() {
            acc *= self.get(part)?;
        }
        Ok(acc)
    }
}

/// Exact value as exported to JSON; numerator and denominator are decimal
/// integer strings.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MomentValue {
    pub d: u64,
    pub order: u32,
    pub value_num: String,
    pub value_den: String,
}

impl MomentValue {
    pub fn new(d: u64, order: u32, value: &Rational) -> Self {
        Self {
            d,
            order,
            value_num: value.numer().to_string(),
            value_den: value.denom().to_string(),
        }
    }

    pub fn as_fraction(&self) -> String {
        format!("{}/{}", self.value_num, self.value_den)
    }
}

fn d_rational(d: u64) -> Rational {
    Rational::from_integer(BigInt::from(d))
}

/// Entry point carrying the enumeration limit.
#[derive(Clone, Copy, Debug, Default)]
pub struct MomentEngine {
    enumerator: Enumerator,
}

impl MomentEngine {
    pub fn new(enumerator: Enumerator) -> Self {
        Self { enumerator }
    }

    pub fn enumerator(&self) -> Enumerator {
        self.enumerator
    }

    /// Grouped expansion terms for patterns of length `order`.
    pub fn table(&self, order: u32) -> Result<std::sync::Arc<ExpansionTable>> {
        table::expansion_table(order as usize, &self.enumerator)
    }

    /// `sum_pi m_pi(d) mu_W(sigma(pi))` at a fixed integer `d >= 1`.
    pub fn moment_expansion(&self, order: u32, d: u64, weights: &MomentSequence) -> Result<Rational> {
        if d == 0 {
            return Err(Error::domain("d", d, "regularity must be at least 1"));
        }
        if order % 2 == 1 {
            self.enumerator.for_each(order as usize, |_| {})?;
            return Ok(Rational::zero());
        }
        let d = d_rational(d);
        let mut acc = Rational::zero();
        for term in self.table(order)?.terms() {
            acc += term.coefficient.eval(&d) * weights.product(&term.class)?;
        }
        Ok(acc)
    }

    /// The same sum with `d` left symbolic.
    pub fn moment_expansion_symbolic(&self, order: u32, weights: &MomentSequence) -> Result<PolyInD> {
        if order % 2 == 1 {
            self.enumerator.for_each(order as usize, |_| {})?;
            return Ok(PolyInD::zero());
        }
        let mut acc = PolyInD::zero();
        for term in self.table(order)?.terms() {
            acc += &term.coefficient.scale(&weights.product(&term.class)?);
        }
        Ok(acc)
    }

    /// Moments of Kesten's measure: the expansion with every weight 1.
    pub fn kesten_moment_exact(&self, d: u64, order: u32) -> Result<Rational> {
        self.moment_expansion(order, d, &MomentSequence::all_ones(order))
    }

    pub fn eigenmoments(&self, d: u64, max_order: u32) -> Result<EigenmomentTable> {
        eigen::eigenmoments_with(self, d, max_order)
    }

    /// Rows `d^2 (mu_{W_d}(2k) - c_{2k})` for every `d` and even order.
    pub fn deviation_table(
        &self,
        ds: impl IntoIterator<Item = u64>,
        orders: &[u32],
    ) -> Result<Vec<DeviationRow>> {
        eigen::deviation_table_with(self, ds, orders)
    }
}

pub fn moment_expansion(order: u32, d: u64, weights: &MomentSequence) -> Result<Rational> {
    MomentEngine::default().moment_expansion(order, d, weights)
}

pub fn moment_expansion_symbolic(order: u32, weights: &MomentSequence) -> Result<PolyInD> {
    MomentEngine::default().moment_expansion_symbolic(order, weights)
}

pub fn kesten_moment_exact(d: u64, order: u32) -> Result<Rational> {
    MomentEngine::default().kesten_moment_exact(d, order)
}

pub fn deviation_table(ds: impl IntoIterator<Item = u64>, orders: &[u32]) -> Result<Vec<DeviationRow>> {
    MomentEngine::default().deviation_table(ds, orders)
}

pub fn expansion_table(order: u32) -> Result<std::sync::Arc<ExpansionTable>> {
    MomentEngine::default().table(order)
}

/// `"p/q"` form used in every exact output column.
pub fn exact_string(value: &Rational) -> String {
    format_rational(value)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{int, rat};

    #[test]
    fn semicircle_values() {
        assert_eq!(semicircle_moment(0), int(1));
        assert_eq!(semicircle_moment(2), rat(1, 4));
        assert_eq!(semicircle_moment(4), rat(1, 8));
        assert_eq!(semicircle_moment(6), rat(5, 64));
        assert_eq!(semicircle_moment(8), rat(7, 128));
        assert_eq!(semicircle_moment(3), int(0));
    }

    #[test]
    fn second_moment_is_d_mu2() {
        let w = MomentSequence::new("w", vec![int(0), rat(3, 7)]);
        for d in 1..6 {
            assert_eq!(moment_expansion(2, d, &w).unwrap(), rat(3 * d as i64, 7));
        }
    }

    #[test]
    fn fourth_moment_all_ones() {
        assert_eq!(moment_expansion(4, 4, &MomentSequence::all_ones(4)).unwrap(), int(28));
        for d in 1..8i64 {
            assert_eq!(kesten_moment_exact(d as u64, 4).unwrap(), int(2 * d * d - d));
            assert_eq!(kesten_moment_exact(d as u64, 2).unwrap(), int(d));
        }
    }

    #[test]
    fn odd_orders_vanish() {
        let w = MomentSequence::all_ones(5);
        assert!(moment_expansion(5, 3, &w).unwrap().is_zero());
        assert!(moment_expansion_symbolic(5, &w).unwrap().is_zero());
    }

    #[test]
    fn missing_weight_moments_error() {
        let w = MomentSequence::all_ones(4);
        assert!(matches!(
            moment_expansion(6, 3, &w),
            Err(Error::MissingMoment { requested: 6, .. })
        ));
        assert!(moment_expansion(2, 0, &w).is_err());
    }

    #[test]
    fn json_value_shape() {
        let v = MomentValue::new(3, 8, &rat(23, 416));
        assert_eq!(
            serde_json::to_string(&v).unwrap(),
            r#"{"d":3,"order":8,"value_num":"23","value_den":"416"}"#
        );
        assert_eq!(v.as_fraction(), "23/416");
    }
}
