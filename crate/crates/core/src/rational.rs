//! Rational helpers: parsing `p/q` and decimal text, and rendering.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Pow, Signed, Zero};

use crate::error::{Error, Result};

pub type Rational = num_rational::BigRational;

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn ratio(p: i64, q: i64) -> Rational {
    Rational::new(BigInt::from(p), BigInt::from(q))
}

pub fn pow10(k: u32) -> BigInt {
    BigInt::from(10u32).pow(k)
}

/// Parses `7`, `-3/4`, `2.50`, `1e-10` or `-0.125`.
pub fn parse_rational(text: &str) -> Result<Rational> {
    let s = text.trim();
    let bad = || Error::Parse(format!("not a rational number: `{text}`"));
    if s.is_empty() {
        return Err(bad());
    }
    if let Some((p, q)) = s.split_once('/') {
        let p: BigInt = p.trim().parse().map_err(|_| bad())?;
        let q: BigInt = q.trim().parse().map_err(|_| bad())?;
        if q.is_zero() {
            return Err(Error::DivisionByZero);
        }
        return Ok(Rational::new(p, q));
    }
    let (mantissa, exponent) = match s.find(['e', 'E']) {
        Some(i) => {
            let e: i32 = s[i + 1..].parse().map_err(|_| bad())?;
            (&s[..i], e)
        }
        None => (s, 0),
    };
    let (negative, body) = match mantissa.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, mantissa.strip_prefix('+').unwrap_or(mantissa)),
    };
    let (whole, frac) = body.split_once('.').unwrap_or((body, ""));
    if whole.is_empty() && frac.is_empty() {
        return Err(bad());
    }
    if !whole.chars().chain(frac.chars()).all(|c| c.is_ascii_digit()) {
        return Err(bad());
    }
    let digits = format!("{whole}{frac}");
    let n: BigInt = if digits.is_empty() {
        BigInt::zero()
    } else {
        digits.parse().map_err(|_| bad())?
    };
    let mut value = Rational::new(n, pow10(frac.len() as u32));
    if exponent >= 0 {
        value *= Rational::from_integer(pow10(exponent as u32));
    } else {
        value /= Rational::from_integer(pow10(exponent.unsigned_abs()));
    }
    Ok(if negative { -value } else { value })
}

/// `p/q` text, or just `p` for integers.
pub fn format_rational(q: &Rational) -> String {
    if q.is_integer() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

/// Rounds to the nearest multiple of `10^-digits` (ties away from zero).
pub fn round_to_digits(q: &Rational, digits: u32) -> Rational {
    let scale = pow10(digits);
    let scaled = q * Rational::from_integer(scale.clone());
    let half = Rational::new(BigInt::one(), BigInt::from(2));
    let n = if scaled.is_negative() {
        -((-scaled) + half).floor().to_integer()
    } else {
        (scaled + half).floor().to_integer()
    };
    Rational::new(n, scale)
}

/// Fixed-point decimal rendering truncated toward zero, `digits` places.
pub fn format_decimal(q: &Rational, digits: u32) -> String {
    let negative = q.is_negative();
    let scale = pow10(digits);
    let scaled = (q.abs() * Rational::from_integer(scale.clone()))
        .floor()
        .to_integer();
    let (whole, frac) = scaled.div_rem(&scale);
    let sign = if negative && !scaled.is_zero() { "-" } else { "" };
    if digits == 0 {
        format!("{sign}{whole}")
    } else {
        format!("{sign}{whole}.{:0>width$}", frac, width = digits as usize)
    }
}
