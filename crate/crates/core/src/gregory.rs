//! Termination of convergent sequences.
//!
//! A sequence given by a formula is evaluated at the infinite index
//! `H = eps^-1`; a finite value there terminates the sequence at its standard
//! part. The circle is squared the other way round: inscribed and
//! circumscribed polygons are doubled until their semiperimeters agree to the
//! requested tolerance.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::expr::Expr;
use crate::lc::{LcNumber, Tag};
use crate::rational::{pow10, Rational};
use crate::Settings;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TerminationMode {
    SymbolicInfiniteIndex,
    PolygonBracket,
}

impl TerminationMode {
    pub fn as_str(self) -> &'static str {
        match self {
            TerminationMode::SymbolicInfiniteIndex => "SYMBOLIC_INFINITE_INDEX",
            TerminationMode::PolygonBracket => "POLYGON_BRACKET",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TerminationResult {
    pub limit: Rational,
    pub mode: TerminationMode,
    /// Doublings performed (polygon mode only).
    pub iterations: u32,
    /// Final `(inscribed, circumscribed)` bracket (polygon mode only).
    pub certificate: Option<(Rational, Rational)>,
    /// The term at `H` (symbolic mode only).
    pub value_at_infinite_index: Option<LcNumber>,
}

/// Evaluates `term` at `n = H`. The variable is the expression's only free
/// variable, `n` if it has none.
pub fn terminate_symbolic(term: &Expr, settings: &Settings) -> Result<TerminationResult> {
    let var = term.sole_variable("n")?;
    let h = LcNumber::infinite_unit(settings.window);
    let value = term.eval_lc_at(&var, &h, settings).map_err(|e| match e {
        Error::PoleOrDomain(why) => Error::NotSupported(why),
        other => other,
    })?;
    let class = value
        .classify()
        .map_err(|_| Error::NotSupported(format!("value at the infinite index is {value}")))?;
    if class.tag == Tag::Infinite {
        return Err(Error::Divergent);
    }
    Ok(TerminationResult {
        limit: value.standard_part()?,
        mode: TerminationMode::SymbolicInfiniteIndex,
        iterations: 0,
        certificate: None,
        value_at_infinite_index: Some(value),
    })
}

/// Semiperimeters of the regular `sides`-gons inscribed in and
/// circumscribed about the unit circle, rounded outward at a fixed number of
/// decimal places.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolygonState {
    pub sides: u128,
    pub inscribed: Rational,
    pub circumscribed: Rational,
}

/// Outward-rounded bracket in units of `10^-precision`.
#[derive(Clone, Debug)]
struct Bracket {
    i_lo: BigInt,
    i_hi: BigInt,
    c_lo: BigInt,
    c_hi: BigInt,
}

fn ceil_sqrt(x: &BigInt) -> BigInt {
    let r = x.sqrt();
    if &r * &r < *x {
        r + 1u32
    } else {
        r
    }
}

impl Bracket {
    /// Hexagon: `i = 3`, `c = 2 sqrt(3)`.
    fn hexagon(scale: &BigInt) -> Self {
        let three = BigInt::from(3) * scale;
        let twelve = BigInt::from(12) * scale * scale;
        Bracket {
            i_lo: three.clone(),
            i_hi: three,
            c_lo: twelve.sqrt(),
            c_hi: ceil_sqrt(&twelve),
        }
    }

    /// `c' = 2ic/(i+c)`, `i' = sqrt(i c')`; both increase in each argument,
    /// so bounds map to bounds.
    fn double(&self) -> Self {
        let harmonic = |i: &BigInt, c: &BigInt, up: bool| {
            let (q, r) = (BigInt::from(2) * i * c).div_rem(&(i + c));
            if up && !r.is_zero() {
                q + 1u32
            } else {
                q
            }
        };
        let c_lo = harmonic(&self.i_lo, &self.c_lo, false);
        let c_hi = harmonic(&self.i_hi, &self.c_hi, true);
        Bracket {
            i_lo: (&self.i_lo * &c_lo).sqrt(),
            i_hi: ceil_sqrt(&(&self.i_hi * &c_hi)),
            c_lo,
            c_hi,
        }
    }

    fn width(&self) -> BigInt {
        &self.c_hi - &self.i_lo
    }

    fn state(&self, sides: u128, scale: &BigInt) -> PolygonState {
        PolygonState {
            sides,
            inscribed: Rational::new(self.i_lo.clone(), scale.clone()),
            circumscribed: Rational::new(self.c_hi.clone(), scale.clone()),
        }
    }
}

const MAX_DOUBLINGS: u32 = 120;

/// The hexagon followed by `doublings` successive doublings.
pub fn polygon_states(doublings: u32, precision: u32) -> Vec<PolygonState> {
    let scale = pow10(precision);
    let mut b = Bracket::hexagon(&scale);
    let mut sides = 6u128;
    let mut out = vec![b.state(sides, &scale)];
    for _ in 0..doublings.min(MAX_DOUBLINGS) {
        b = b.double();
        sides *= 2;
        out.push(b.state(sides, &scale));
    }
    out
}

/// Doubles polygons until the bracket is no wider than `tolerance`. The
/// limit is the bracket's midpoint. Each doubling shrinks the true width
/// about fourfold; once rounding stops it from shrinking by half that, the
/// working precision is spent.
pub fn terminate_polygon(tolerance: &Rational, precision: u32) -> Result<TerminationResult> {
    if !tolerance.is_positive() {
        return Err(Error::InvalidArgument(format!("tolerance must be positive, got {tolerance}")));
    }
    let scale = pow10(precision);
    let scaled_tol = (tolerance * Rational::from_integer(scale.clone())).floor().to_integer();
    let mut b = Bracket::hexagon(&scale);
    let mut iterations = 0;
    while b.width() > scaled_tol {
        let next = b.double();
        let stalled = BigInt::from(2) * next.width() * 3u32 > b.width() * 4u32;
        if stalled || iterations >= MAX_DOUBLINGS {
            let width = Rational::new(next.width(), scale.clone());
            return Err(Error::PrecisionExhausted {
                width: crate::rational::format_rational(&width),
            });
        }
        b = next;
        iterations += 1;
    }
    let lo = Rational::new(b.i_lo.clone(), scale.clone());
    let hi = Rational::new(b.c_hi.clone(), scale.clone());
    let two = Rational::from_integer(2.into());
    Ok(TerminationResult {
        limit: (&lo + &hi) / two,
        mode: TerminationMode::PolygonBracket,
        iterations,
        certificate: Some((lo, hi)),
        value_at_infinite_index: None,
    })
}

/// `10^-k`.
pub fn tolerance_digits(k: u32) -> Rational {
    Rational::new(BigInt::one(), pow10(k))
}
