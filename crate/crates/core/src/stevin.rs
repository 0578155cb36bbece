//! Unending decimals and Stevin's ten-subinterval root extraction.
//!
//! A polynomial changing sign on `[lo, hi]` has a root there. Split the
//! interval at the decimal grid one digit finer, keep the leftmost piece on
//! which the sign still changes, and repeat: every pass fixes one more digit.

use std::fmt;
use std::str::FromStr;

use num_bigint::{BigInt, BigUint, Sign};
use num_integer::Integer;
use num_traits::{Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::expr::Expr;
use crate::poly::Poly;
use crate::rational::{pow10, Rational};

/// A truncated decimal expansion `±integer_part.d1 d2 ... dn`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct DecimalRep {
    pub negative: bool,
    pub integer_part: BigUint,
    pub digits: Vec<u8>,
    /// The expansion stops here: the value is exactly what is written.
    pub terminating: bool,
    /// The source text ended in a repeating 9 that was carried upward.
    pub repeating_nine: bool,
}

impl DecimalRep {
    /// The rational value of the written digits.
    pub fn value(&self) -> Rational {
        let scale = pow10(self.digits.len() as u32);
        let mut n = BigInt::from(self.integer_part.clone()) * &scale;
        let mut place = scale.clone();
        for &d in &self.digits {
            place /= 10;
            n += &place * d;
        }
        let v = Rational::new(n, scale);
        if self.negative {
            -v
        } else {
            v
        }
    }

    /// Pads or cuts the fractional digits to `n`.
    pub fn with_digits(&self, n: usize) -> DecimalRep {
        let mut out = self.clone();
        if n < out.digits.len() {
            let dropped = out.digits.split_off(n);
            out.terminating &= dropped.iter().all(|&d| d == 0);
        } else {
            out.digits.resize(n, 0);
        }
        out
    }
}

impl fmt::Display for DecimalRep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.negative {
            f.write_str("-")?;
        }
        write!(f, "{}", self.integer_part)?;
        if !self.digits.is_empty() {
            f.write_str(".")?;
            for d in &self.digits {
                write!(f, "{d}")?;
            }
        }
        Ok(())
    }
}

/// Accepts `sign? digits ("." digits)? ("(9)")?`, e.g. `0.4(9)`.
impl FromStr for DecimalRep {
    type Err = Error;
    fn from_str(text: &str) -> Result<Self> {
        let bad = |why: &str| Error::Parse(format!("`{text}`: {why}"));
        let s = text.trim();
        let (negative, body) = match s.strip_prefix('-') {
            Some(rest) => (true, rest),
            None => (false, s.strip_prefix('+').unwrap_or(s)),
        };
        let (body, nines) = match body.strip_suffix("(9)") {
            Some(rest) => (rest, true),
            None => (body, false),
        };
        let (whole, frac) = match body.split_once('.') {
            Some((w, f)) => (w, f),
            None => (body, ""),
        };
        if whole.is_empty() || !whole.bytes().all(|b| b.is_ascii_digit()) {
            return Err(bad("expected digits before the point"));
        }
        if !frac.bytes().all(|b| b.is_ascii_digit()) {
            return Err(bad("expected digits after the point"));
        }
        if body.contains('.') && frac.is_empty() && !nines {
            return Err(bad("expected digits after the point"));
        }
        let integer_part: BigUint = whole.parse().map_err(|_| bad("bad integer part"))?;
        let digits: Vec<u8> = frac.bytes().map(|b| b - b'0').collect();
        let written = DecimalRep {
            negative,
            integer_part,
            digits,
            terminating: true,
            repeating_nine: false,
        };
        if !nines {
            return Ok(normalize_sign(written));
        }
        // x.ddd(9) = x.ddd + 10^-n
        let n = written.digits.len();
        let mut value = written.value().abs() + Rational::new(1.into(), pow10(n as u32));
        if negative {
            value = -value;
        }
        let mut rep = from_rational(&value, n as u32);
        rep.repeating_nine = true;
        Ok(rep)
    }
}

fn normalize_sign(mut rep: DecimalRep) -> DecimalRep {
    if rep.integer_part.is_zero() && rep.digits.iter().all(|&d| d == 0) {
        rep.negative = false;
    }
    rep
}

/// Truncated (not rounded) expansion of `q` to `ndigits` places.
pub fn from_rational(q: &Rational, ndigits: u32) -> DecimalRep {
    let negative = q.is_negative();
    let a = q.abs();
    let (whole, mut rem) = a.numer().div_rem(a.denom());
    let mut digits = Vec::with_capacity(ndigits as usize);
    for _ in 0..ndigits {
        rem *= 10;
        let (d, r) = rem.div_rem(a.denom());
        digits.push(d.to_u8().unwrap_or(0));
        rem = r;
    }
    normalize_sign(DecimalRep {
        negative,
        integer_part: whole.to_biguint().unwrap_or_default(),
        digits,
        terminating: rem.is_zero(),
        repeating_nine: false,
    })
}

/// Equality of the values after carrying any repeating-9 tail.
pub fn decimal_equal(a: &DecimalRep, b: &DecimalRep) -> bool {
    a.value() == b.value()
}

pub fn decimal_equal_text(a: &str, b: &str) -> Result<bool> {
    Ok(decimal_equal(&a.parse()?, &b.parse()?))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootBracket {
    pub lo: Rational,
    pub hi: Rational,
}

impl RootBracket {
    pub fn new(lo: Rational, hi: Rational) -> Result<Self> {
        if lo >= hi {
            return Err(Error::InvalidArgument(format!("empty bracket [{lo}, {hi}]")));
        }
        Ok(RootBracket { lo, hi })
    }

    /// `p(lo) p(hi) <= 0`.
    pub fn sign_change(&self, p: &Poly) -> bool {
        !(p.eval(&self.lo) * p.eval(&self.hi)).is_positive()
    }
}

fn sign(v: &Rational) -> Sign {
    if v.is_zero() {
        Sign::NoSign
    } else if v.is_positive() {
        Sign::Plus
    } else {
        Sign::Minus
    }
}

/// Stevin's digit extraction. The result is the root truncated toward zero
/// at `ndigits` places, so `|value - root| < 10^-ndigits`; a root landing
/// exactly on a grid point comes back as a terminating decimal.
pub fn root_digits(p: &Poly, bracket: &RootBracket, ndigits: u32) -> Result<DecimalRep> {
    let (mut lo, mut hi) = (bracket.lo.clone(), bracket.hi.clone());
    let (mut s_lo, s_hi) = (sign(&p.eval(&lo)), sign(&p.eval(&hi)));
    if s_lo == Sign::NoSign {
        return Ok(from_rational(&lo, ndigits));
    }
    if s_hi == Sign::NoSign {
        return Ok(from_rational(&hi, ndigits));
    }
    if s_lo == s_hi {
        return Err(Error::NoSignChange);
    }
    // start with the coarsest grid whose spacing does not exceed the width
    let width = &hi - &lo;
    let mut level: i64 = 0;
    let ten = Rational::from_integer(10.into());
    let spacing = |level: i64| -> Rational {
        if level >= 0 {
            Rational::new(1.into(), pow10(level as u32))
        } else {
            Rational::from_integer(pow10((-level) as u32))
        }
    };
    while spacing(level) > width {
        level += 1;
    }
    while spacing(level - 1) <= width {
        level -= 1;
    }
    let level = level.min(ndigits as i64);
    for level in level..=ndigits as i64 {
        let step = spacing(level);
        // grid points strictly inside (lo, hi), then hi
        let mut k = (&lo / &step).floor() + Rational::from_integer(1.into());
        let mut points = Vec::new();
        loop {
            let x = &k * &step;
            if x >= hi {
                break;
            }
            points.push(x);
            k += Rational::from_integer(1.into());
        }
        points.push(hi.clone());
        let mut left = lo.clone();
        for x in points {
            let s = sign(&p.eval(&x));
            if s == Sign::NoSign {
                return Ok(from_rational(&x, ndigits));
            }
            if s != s_lo {
                lo = left;
                hi = x;
                break;
            }
            left = x;
        }
        s_lo = sign(&p.eval(&lo));
        debug_assert!(&hi - &lo <= step * &ten);
    }
    // root strictly inside (lo, hi), which sits in one cell [k s, (k+1) s]
    let scale = pow10(ndigits);
    let k: BigInt = (&lo * Rational::from_integer(scale.clone())).floor().to_integer();
    let negative = k.is_negative();
    // truncation toward zero
    let magnitude: BigInt = if negative { -(k + 1u32) } else { k };
    let (whole, frac) = magnitude.div_rem(&scale);
    let frac = frac.to_string();
    let mut digits = vec![0u8; ndigits as usize - if frac == "0" { 0 } else { frac.len() }];
    if frac != "0" {
        digits.extend(frac.bytes().map(|b| b - b'0'));
    }
    Ok(DecimalRep {
        negative,
        integer_part: whole.to_biguint().unwrap_or_default(),
        digits,
        terminating: false,
        repeating_nine: false,
    })
}

/// [`root_digits`] for a polynomial given as an expression.
pub fn root_digits_expr(
    p: &Expr,
    var: &str,
    bracket: &RootBracket,
    ndigits: u32,
) -> Result<DecimalRep> {
    root_digits(&Poly::from_expr(p, var)?, bracket, ndigits)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{int, ratio};

    fn root(cs: &[i64], lo: Rational, hi: Rational, n: u32) -> String {
        let p = Poly::new(cs.iter().map(|&c| int(c)).collect());
        root_digits(&p, &RootBracket::new(lo, hi).unwrap(), n)
            .unwrap()
            .to_string()
    }

    #[test]
    fn square_root_of_two() {
        assert_eq!(root(&[-2, 0, 1], int(1), int(2), 8), "1.41421356");
        assert_eq!(root(&[-2, 0, 1], int(-2), int(-1), 4), "-1.4142");
        assert_eq!(root(&[-2, 0, 1], ratio(13, 10), ratio(3, 2), 3), "1.414");
    }

    #[test]
    fn exact_grid_hit_terminates() {
        let p = Poly::new(vec![int(-1), int(2)]);
        let r = root_digits(&p, &RootBracket::new(int(0), int(1)).unwrap(), 3).unwrap();
        assert_eq!(r.to_string(), "0.500");
        assert!(r.terminating);
    }

    #[test]
    fn plastic_number() {
        // bisection at 30 digits gives 1.324717957...
        assert_eq!(root(&[-1, -1, 0, 1], int(1), int(2), 6), "1.324717");
    }

    #[test]
    fn no_sign_change() {
        let p = Poly::new(vec![int(1), int(0), int(1)]);
        let b = RootBracket::new(int(-1), int(1)).unwrap();
        assert_eq!(root_digits(&p, &b, 3), Err(Error::NoSignChange));
        assert!(RootBracket::new(int(1), int(1)).is_err());
    }

    #[test]
    fn repeating_nines() {
        assert_eq!(decimal_equal_text("1.0", "0.(9)"), Ok(true));
        assert_eq!(decimal_equal_text("0.5", "0.4(9)"), Ok(true));
        assert_eq!(decimal_equal_text("0.5", "0.50001"), Ok(false));
        let r: DecimalRep = "0.4(9)".parse().unwrap();
        assert!(r.repeating_nine);
        assert_eq!(r.to_string(), "0.5");
        assert!("1.2.3".parse::<DecimalRep>().is_err());
        assert!("abc".parse::<DecimalRep>().is_err());
    }

    #[test]
    fn expansions() {
        assert_eq!(from_rational(&ratio(1, 4), 3).to_string(), "0.250");
        assert!(from_rational(&ratio(1, 4), 3).terminating);
        assert_eq!(from_rational(&ratio(1, 3), 5).to_string(), "0.33333");
        assert!(!from_rational(&ratio(1, 3), 5).terminating);
        assert_eq!(from_rational(&ratio(22, 7), 6).to_string(), "3.142857");
        assert_eq!(from_rational(&ratio(-7, 4), 2).to_string(), "-1.75");
    }
}
