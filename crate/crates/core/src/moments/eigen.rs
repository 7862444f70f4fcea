//! Moments of the eigendistribution `W_d`.
//!
//! If `T_d W = W^(lambda)` then matching second moments forces
//! `lambda = d^(-1/2)`, so the even spectral moments satisfy
//! `mu_{d,W}(2k) = d^k mu_W(2k)`. Substituting into the expansion and moving
//! the single-symbol pattern (coefficient `d`) to the left gives
//! `(d^k - d) mu(2k) = sum over the remaining patterns`, and every signature
//! on the right only involves orders below `2k`.

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::rational::{format_rational, rat, Rational};

use super::{semicircle_moment, MomentEngine, MomentSequence};

/// `mu_{W_d}(2), ..., mu_{W_d}(2K)` at a fixed regularity `d`, normalized so
/// that `mu(2) = 1/4`. Odd moments are zero.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EigenmomentTable {
    d: u64,
    even: Vec<Rational>,
}

impl EigenmomentTable {
    pub fn d(&self) -> u64 {
        self.d
    }

    pub fn max_order(&self) -> u32 {
        2 * self.even.len() as u32
    }

    /// `mu(order)`; `None` past the computed range.
    pub fn get(&self, order: u32) -> Option<Rational> {
        match order {
            0 => Some(Rational::one()),
            o if o % 2 == 1 => (o <= self.max_order()).then(Rational::zero),
            o => self.even.get(o as usize / 2 - 1).cloned(),
        }
    }

    /// `(order, value)` for the even orders.
    pub fn even_moments(&self) -> impl Iterator<Item = (u32, &Rational)> {
        self.even.iter().enumerate().map(|(i, v)| (2 * i as u32 + 2, v))
    }

    /// Full sequence `mu(1..=2K)` including the zero odd moments.
    pub fn as_moment_sequence(&self) -> MomentSequence {
        MomentSequence::from_fn(format!("eigendistribution d={}", self.d), self.max_order(), |k| {
            self.get(k).expect("within range")
        })
    }
}

pub(super) fn eigenmoments_with(engine: &MomentEngine, d: u64, max_order: u32) -> Result<EigenmomentTable> {
    if d < 2 {
        return Err(Error::domain("d", d, "eigenmoments need d >= 2 (d^k - d vanishes at d = 1)"));
    }
    if max_order as usize > engine.enumerator().max_length() {
        return Err(Error::LengthLimit {
            length: max_order as usize,
            max: engine.enumerator().max_length(),
        });
    }
    let dq = Rational::from_integer(BigInt::from(d));
    let mut table = EigenmomentTable {
        d,
        even: Vec::new(),
    };
    if max_order >= 2 {
        table.even.push(rat(1, 4));
    }
    for order in (4..=max_order).step_by(2) {
        let k = order / 2;
        let known = table.as_moment_sequence();
        let mut rhs = Rational::zero();
        for term in engine.table(order)?.terms() {
            if term.class.parts() == [order] {
                continue;
            }
            rhs += term.coefficient.eval(&dq) * known.product(&term.class)?;
        }
        let scale = crate::rational::pow(&dq, k) - &dq;
        table.even.push(rhs / scale);
    }
    Ok(table)
}

pub fn eigenmoments(d: u64, max_order: u32) -> Result<EigenmomentTable> {
    MomentEngine::default().eigenmoments(d, max_order)
}

/// `7/128 + 1/(128 (d^2 + d + 1))`.
pub fn eighth_moment_closed_form(d: u64) -> Result<Rational> {
    if d < 2 {
        return Err(Error::domain("d", d, "closed form is stated for d >= 2"));
    }
    let d = BigInt::from(d);
    let den = BigInt::from(128) * (&d * &d + &d + BigInt::one());
    Ok(rat(7, 128) + Rational::new(BigInt::one(), den))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DeviationRow {
    pub d: u64,
    pub order: u32,
    pub eigenmoment: Rational,
    pub semicircle: Rational,
    /// `d^2 (mu_{W_d}(order) - c_order)`.
    pub scaled_deviation: Rational,
}

#[derive(Serialize)]
struct DeviationRecord {
    d: u64,
    order: u32,
    eigenmoment: String,
    semicircle: String,
    scaled_deviation: String,
}

impl Serialize for DeviationRow {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        DeviationRecord {
            d: self.d,
            order: self.order,
            eigenmoment: format_rational(&self.eigenmoment),
            semicircle: format_rational(&self.semicircle),
            scaled_deviation: format_rational(&self.scaled_deviation),
        }
        .serialize(serializer)
    }
}

pub(super) fn deviation_table_with(
    engine: &MomentEngine,
    ds: impl IntoIterator<Item = u64>,
    orders: &[u32],
) -> Result<Vec<DeviationRow>> {
    let max_order = orders.iter().copied().max().unwrap_or(0);
    let mut rows = Vec::new();
    for d in ds {
        let table = engine.eigenmoments(d, max_order)?;
        let d2 = Rational::from_integer(BigInt::from(d * d));
        for &order in orders {
            let eigenmoment = table.get(order).expect("computed up to max order");
            let semicircle = semicircle_moment(order);
            let scaled_deviation = &d2 * (&eigenmoment - &semicircle);
            rows.push(DeviationRow {
                d,
                order,
                eigenmoment,
                semicircle,
                scaled_deviation,
            });
        }
    }
    Ok(rows)
}
