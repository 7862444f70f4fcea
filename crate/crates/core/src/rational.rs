//! Exact rational numbers and their text forms.
//!
//! Exact values are always written as `"p/q"` with `q > 0`, including
//! integers (`"4/1"`), so that a reader never has to guess whether a cell
//! was rounded.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

pub type Rational = BigRational;

/// Largest decimal exponent accepted by [`parse_rational`].
const MAX_EXPONENT: i64 = 4096;

pub fn rat(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

pub fn int(value: i64) -> Rational {
    Rational::from_integer(BigInt::from(value))
}

pub fn format_rational(value: &Rational) -> String {
    format!("{}/{}", value.numer(), value.denom())
}

pub fn to_f64(value: &Rational) -> f64 {
    value.to_f64().unwrap_or_else(|| {
        if value.is_negative() {
            f64::NEG_INFINITY
        } else {
            f64::INFINITY
        }
    })
}

/// Parses `"p/q"`, an integer, or a finite decimal such as `"-0.25"` or
/// `"2.5e-3"` into an exact rational.
pub fn parse_rational(input: &str) -> Result<Rational> {
    let s = input.trim();
    if s.is_empty() {
        return Err(Error::parse("rational", input, "empty"));
    }
    if let Some((p, q)) = s.split_once('/') {
        let num = parse_integer(p.trim(), input)?;
        let den = parse_integer(q.trim(), input)?;
        if den.is_zero() {
            return Err(Error::parse("rational", input, "zero denominator"));
        }
        return Ok(Rational::new(num, den));
    }
    parse_decimal(s, input)
}

fn parse_integer(s: &str, input: &str) -> Result<BigInt> {
    let digits = s.strip_prefix(['+', '-']).unwrap_or(s);
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return Err(Error::parse("rational", input, "expected an integer"));
    }
    s.parse::<BigInt>()
        .map_err(|e| Error::parse("rational", input, e.to_string()))
}

fn parse_decimal(s: &str, input: &str) -> Result<Rational> {
    let (mantissa, exponent) = match s.find(['e', 'E']) {
        Some(pos) => {
            let exp = &s[pos + 1..];
            let exp_digits = exp.strip_prefix(['+', '-']).unwrap_or(exp);
            if exp_digits.is_empty()
                || exp_digits.len() > 6
                || !exp_digits.bytes().all(|b| b.is_ascii_digit())
            {
                return Err(Error::parse("rational", input, "malformed exponent"));
            }
            let e: i64 = exp
                .parse()
                .map_err(|_| Error::parse("rational", input, "malformed exponent"))?;
            (&s[..pos], e)
        }
        None => (s, 0),
    };
    let (negative, body) = match mantissa.as_bytes().first() {
        Some(b'-') => (true, &mantissa[1..]),
        Some(b'+') => (false, &mantissa[1..]),
        _ => (false, mantissa),
    };
    let (int_part, frac_part) = body.split_once('.').unwrap_or((body, ""));
    if int_part.is_empty() && frac_part.is_empty() {
        return Err(Error::parse("rational", input, "no digits"));
    }
    if !int_part.bytes().chain(frac_part.bytes()).all(|b| b.is_ascii_digit()) {
        return Err(Error::parse("rational", input, "unexpected character"));
    }
    let scale = exponent - frac_part.len() as i64;
    if scale.abs() > MAX_EXPONENT {
        return Err(Error::parse("rational", input, "exponent out of range"));
    }
    let digits = format!("{int_part}{frac_part}");
    let mut value = Rational::from_integer(digits.parse::<BigInt>().unwrap_or_default());
    let ten = BigInt::from(10u32);
    let power = num_traits::pow(ten, scale.unsigned_abs() as usize);
    if scale >= 0 {
        value *= Rational::from_integer(power);
    } else {
        value /= Rational::from_integer(power);
    }
    if negative {
        value = -value;
    }
    Ok(value)
}

/// Integer power of a rational, `base^exp`.
pub fn pow(base: &Rational, exp: u32) -> Rational {
    let mut acc = Rational::one();
    for _ in 0..exp {
        acc *= base;
    }
    acc
}

pub fn binomial(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

pub fn catalan(k: u64) -> BigInt {
    binomial(2 * k, k) / BigInt::from(k + 1)
}
