//! Univariate polynomials in the regularity `d` with exact rational
//! coefficients.

use std::fmt;
use std::ops::{Add, AddAssign, Mul};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Serialize, Serializer};

use crate::rational::{format_rational, Rational};

/// `coefficients()[i]` is the coefficient of `d^i`. The leading coefficient
/// is nonzero unless the polynomial is zero, in which case the coefficient
/// list is empty.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct PolyInD {
    coeffs: Vec<Rational>,
}

impl PolyInD {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn constant(c: Rational) -> Self {
        Self::from_coefficients(vec![c])
    }

    pub fn from_coefficients(coeffs: Vec<Rational>) -> Self {
        let mut p = Self { coeffs };
        p.trim();
        p
    }

    pub fn from_integers<I: IntoIterator<Item = i64>>(coeffs: I) -> Self {
        Self::from_coefficients(
            coeffs
                .into_iter()
                .map(|c| Rational::from_integer(BigInt::from(c)))
                .collect(),
        )
    }

    /// `prod_j (d - roots[j])`.
    pub fn from_roots(roots: &[u32]) -> Self {
        let mut coeffs = vec![BigInt::one()];
        for &root in roots {
            // multiply by (d - root)
            let mut next = vec![BigInt::zero(); coeffs.len() + 1];
            for (i, c) in coeffs.iter().enumerate() {
                next[i + 1] += c;
                next[i] -= c * BigInt::from(root);
            }
            coeffs = next;
        }
        Self::from_coefficients(coeffs.into_iter().map(Rational::from_integer).collect())
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(Zero::is_zero) {
            self.coeffs.pop();
        }
    }

    pub fn coefficients(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn coefficient(&self, power: usize) -> Rational {
        self.coeffs.get(power).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn eval(&self, d: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * d + c;
        }
        acc
    }

    pub fn eval_int(&self, d: i64) -> Rational {
        self.eval(&Rational::from_integer(BigInt::from(d)))
    }

    pub fn scale(&self, factor: &Rational) -> Self {
        Self::from_coefficients(self.coeffs.iter().map(|c| c * factor).collect())
    }
}

impl AddAssign<&PolyInD> for PolyInD {
    fn add_assign(&mut self, rhs: &PolyInD) {
        if self.coeffs.len() < rhs.coeffs.len() {
            self.coeffs.resize(rhs.coeffs.len(), Rational::zero());
        }
        for (a, b) in self.coeffs.iter_mut().zip(&rhs.coeffs) {
            *a += b;
        }
        self.trim();
    }
}

impl Add<&PolyInD> for &PolyInD {
    type Output = PolyInD;

    fn add(self, rhs: &PolyInD) -> PolyInD {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Mul<&PolyInD> for &PolyInD {
    type Output = PolyInD;

    fn mul(self, rhs: &PolyInD) -> PolyInD {
        if self.is_zero() || rhs.is_zero() {
            return PolyInD::zero();
        }
        let mut out = vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        PolyInD::from_coefficients(out)
    }
}

impl fmt::Display for PolyInD {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (power, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let sign = if c.is_negative() { "-" } else { "+" };
            if first {
                if c.is_negative() {
                    f.write_str("-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            let mag = c.abs();
            let unit = mag.is_one();
            match (power, unit) {
                (0, _) => write!(f, "{mag}")?,
                (_, true) => {}
                (_, false) => write!(f, "{mag}*")?,
            }
            match power {
                0 => {}
                1 => f.write_str("d")?,
                p => write!(f, "d^{p}")?,
            }
        }
        Ok(())
    }
}

/// Serialized as an array of `"p/q"` strings, lowest power first.
impl Serialize for PolyInD {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_seq(self.coeffs.iter().map(format_rational))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{int, rat};

    #[test]
    fn roots_expand() {
        // d(d-1)(d-2) = d^3 - 3d^2 + 2d
        let p = PolyInD::from_roots(&[0, 1, 2]);
        assert_eq!(p, PolyInD::from_integers([0, 2, -3, 1]));
        assert_eq!(p.eval_int(4), int(24));
        assert_eq!(p.degree(), Some(3));
    }

    #[test]
    fn arithmetic_and_display() {
        let a = PolyInD::from_integers([0, -1, 2]);
        let b = PolyInD::from_integers([0, 1, -2]);
        assert!((&a + &b).is_zero());
        assert_eq!(a.to_string(), "2*d^2 - d");
        let sq = &a * &a;
        assert_eq!(sq.eval_int(3), int(225));
        assert_eq!(a.scale(&rat(1, 2)).to_string(), "d^2 - 1/2*d");
        assert_eq!(PolyInD::zero().degree(), None);
    }
}
