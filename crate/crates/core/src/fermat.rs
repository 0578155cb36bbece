//! Adequality: extrema and subtangents by the five-step procedure.
//!
//! Write `f(A)`, write it again at `A + E`, cancel what the two have in
//! common, divide by the highest power of `E` that divides every remaining
//! term, then suppress whatever still contains `E`. Here `E` is the formal
//! infinitesimal `eps`, so the suppression is the standard part.

use std::fmt;

use num_integer::binomial;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::expr::Expr;
use crate::lc::LcNumber;
use crate::poly::{Poly, RatFn};
use crate::rational::Rational;
use crate::stevin::{self, DecimalRep, RootBracket};
use crate::Settings;

/// A polynomial in `A` whose coefficients are finite series in `E`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EPoly {
    coeffs: Vec<LcNumber>,
    window: u32,
}

impl EPoly {
    fn new(mut coeffs: Vec<LcNumber>, window: u32) -> Self {
        while coeffs.last().is_some_and(LcNumber::is_zero) {
            coeffs.pop();
        }
        EPoly { coeffs, window }
    }

    /// `p(A)` with no `E` at all.
    pub fn from_poly(p: &Poly, window: u32) -> Self {
        let coeffs = p
            .coeffs()
            .iter()
            .map(|c| LcNumber::from_rational(c.clone(), window))
            .collect();
        EPoly::new(coeffs, window)
    }

    /// Coefficient of `A^j`.
    pub fn coeffs(&self) -> &[LcNumber] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn sub(&self, other: &EPoly) -> EPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        let zero = LcNumber::zero(self.window);
        let coeffs = (0..n)
            .map(|j| {
                let a = self.coeffs.get(j).unwrap_or(&zero);
                let b = other.coeffs.get(j).unwrap_or(&zero);
                a - b
            })
            .collect();
        EPoly::new(coeffs, self.window)
    }

    pub fn mul(&self, other: &EPoly) -> EPoly {
        if self.is_zero() || other.is_zero() {
            return EPoly::new(Vec::new(), self.window);
        }
        let mut coeffs = vec![LcNumber::zero(self.window); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] = &coeffs[i + j] + a * b;
            }
        }
        EPoly::new(coeffs, self.window)
    }

    /// Value at `A = a`, still a series in `E`.
    pub fn eval(&self, a: &Rational) -> LcNumber {
        let a = LcNumber::from_rational(a.clone(), self.window);
        self.coeffs
            .iter()
            .rev()
            .fold(LcNumber::zero(self.window), |acc, c| acc * &a + c)
    }

    /// Smallest power of `E` among all terms; `None` for zero.
    pub fn min_order(&self) -> Option<i64> {
        self.coeffs.iter().filter_map(LcNumber::leading_exponent).min()
    }
}

/// Terms `c*A^j*E^k`, highest power of `A` first.
impl fmt::Display for EPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (j, c) in self.coeffs.iter().enumerate().rev() {
            for (k, q) in c.terms() {
                let negative = q.is_negative();
                match (first, negative) {
                    (true, true) => f.write_str("-")?,
                    (true, false) => {}
                    (false, true) => f.write_str(" - ")?,
                    (false, false) => f.write_str(" + ")?,
                }
                first = false;
                let mut factors = Vec::new();
                let mag = q.abs();
                if !mag.is_one() || (j == 0 && k == 0) {
                    factors.push(crate::rational::format_rational(&mag));
                }
                match j {
                    0 => {}
                    1 => factors.push("A".into()),
                    _ => factors.push(format!("A^{j}")),
                }
                match k {
                    0 => {}
                    1 => factors.push("E".into()),
                    _ => factors.push(format!("E^{k}")),
                }
                f.write_str(&factors.join("*"))?;
            }
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

/// Every intermediate value of the procedure.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AdequalityTrace {
    pub original: Expr,
    pub var: String,
    /// Numerator and denominator of `f(A)` after clearing fractions.
    pub numerator: Poly,
    pub denominator: Poly,
    /// Step 2: numerator and denominator at `A + E`.
    pub shifted_numerator: EPoly,
    pub shifted_denominator: EPoly,
    /// Step 3: `N(A+E) D(A) - N(A) D(A+E)`.
    pub cancelled: EPoly,
    /// Step 4: the power of `E` divided out, and what is left.
    pub divided_power: u32,
    pub divided: EPoly,
    /// Step 5.
    pub suppressed: Poly,
}

impl AdequalityTrace {
    /// Named steps in order, rendered as text.
    pub fn steps(&self) -> Vec<(&'static str, String)> {
        let mut out = vec![("original", self.original.to_string())];
        if self.denominator.degree() == Some(0) {
            out.push(("shifted", self.shifted_numerator.to_string()));
        } else {
            out.push((
                "shifted",
                format!("({}) / ({})", self.shifted_numerator, self.shifted_denominator),
            ));
        }
        out.push(("cancelled", self.cancelled.to_string()));
        out.push(("divided_power", self.divided_power.to_string()));
        out.push(("divided", self.divided.to_string()));
        out.push(("suppressed", self.suppressed.to_expr(&self.var).to_string()));
        out
    }
}

/// Step 2: `p(A + E)`.
pub fn shift(p: &Poly, window: u32) -> EPoly {
    let n = p.coeffs().len();
    let coeffs = (0..n)
        .map(|j| {
            let terms = (j..n).map(|k| {
                let c = &p.coeffs()[k] * Rational::from_integer(binomial(k as u64, j as u64).into());
                ((k - j) as i64, c)
            });
            LcNumber::from_terms(terms, window)
        })
        .collect();
    EPoly::new(coeffs, window)
}

/// Step 3: cross-multiply and cancel the common terms.
pub fn cancel(num: &Poly, den: &Poly, shifted_num: &EPoly, shifted_den: &EPoly, window: u32) -> EPoly {
    let n = EPoly::from_poly(num, window);
    let d = EPoly::from_poly(den, window);
    shifted_num.mul(&d).sub(&n.mul(shifted_den))
}

/// Step 4: divide by the highest power of `E` common to every term.
pub fn divide_out(cancelled: &EPoly) -> Result<(u32, EPoly)> {
    let k = cancelled.min_order().ok_or(Error::ZeroDifference)?;
    let coeffs = cancelled.coeffs.iter().map(|c| c.shift(-k)).collect();
    Ok((k as u32, EPoly::new(coeffs, cancelled.window)))
}

/// Step 5: drop every term still containing `E`.
pub fn suppress(divided: &EPoly) -> Result<Poly> {
    let coeffs = divided
        .coeffs
        .iter()
        .map(LcNumber::standard_part)
        .collect::<Result<Vec<_>>>()?;
    Ok(Poly::new(coeffs))
}

/// Runs the five steps on `f`, a rational function of `var`. For a
/// polynomial the result is `f'`; for `N/D` it is `N' D - N D'`, which has
/// the same zeros wherever `D` does not vanish.
pub fn adequality_derivative(f: &Expr, var: &str, settings: &Settings) -> Result<(AdequalityTrace, Expr)> {
    if let Some(func) = f.first_apply() {
        return Err(Error::NonAlgebraicInput(func.name().to_string()));
    }
    let RatFn { num, den } = RatFn::from_expr(f, var)?;
    let degree = num.degree().unwrap_or(0) + den.degree().unwrap_or(0);
    let window = settings.window.max(degree as u32 + 1);
    let shifted_numerator = shift(&num, window);
    let shifted_denominator = shift(&den, window);
    let cancelled = cancel(&num, &den, &shifted_numerator, &shifted_denominator, window);
    let (divided_power, divided) = divide_out(&cancelled)?;
    let suppressed = suppress(&divided)?;
    let result = suppressed.to_expr(var);
    let trace = AdequalityTrace {
        original: f.clone(),
        var: var.to_string(),
        numerator: num,
        denominator: den,
        shifted_numerator,
        shifted_denominator,
        cancelled,
        divided_power,
        divided,
        suppressed,
    };
    Ok((trace, result))
}

/// Zeros of the suppressed expression in `[lo, hi]`, each to `digits`
/// decimal places.
pub fn extremum_candidates(
    f: &Expr,
    var: &str,
    lo: &Rational,
    hi: &Rational,
    digits: u32,
    settings: &Settings,
) -> Result<Vec<DecimalRep>> {
    if lo >= hi {
        return Err(Error::InvalidArgument(format!("empty interval [{lo}, {hi}]")));
    }
    let (trace, _) = adequality_derivative(f, var, settings)?;
    let q = trace.suppressed.square_free();
    q.isolate_roots(lo, hi)
        .into_iter()
        .map(|(a, b)| {
            if a == b {
                Ok(stevin::from_rational(&a, digits).with_digits(digits as usize))
            } else {
                stevin::root_digits(&q, &RootBracket::new(a, b)?, digits)
            }
        })
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TangentLine {
    pub point: (Rational, Rational),
    pub slope: Rational,
    /// Distance from the origin to where the tangent meets the `y` axis,
    /// `x0 * slope - y0`; equal to `y0` on the parabola `y = x^2`.
    pub subtangent_r: Rational,
    /// Projection of the tangent segment on the `x` axis, `y0 / slope`.
    pub axis_subtangent: Rational,
}

/// Tangent to `y = f(x)` at `x0`, the slope found by adequality.
pub fn subtangent(curve: &Expr, var: &str, x0: &Rational, settings: &Settings) -> Result<TangentLine> {
    if let Some(func) = curve.first_apply() {
        return Err(Error::NonAlgebraicInput(func.name().to_string()));
    }
    let p = Poly::from_expr(curve, var)?;
    let y0 = p.eval(x0);
    if y0.is_zero() {
        return Err(Error::InvalidArgument(format!("the curve meets the axis at {var} = {x0}")));
    }
    let window = settings.window.max(p.degree().unwrap_or(0) as u32 + 1);
    let settings = Settings { window, ..*settings };
    let at = |x: LcNumber| curve.eval_lc_at(var, &x, &settings);
    let base = LcNumber::from_rational(x0.clone(), window);
    let eps = LcNumber::eps(window);
    let quotient = (at(&base + &eps)? - at(base)?).checked_div(&eps)?;
    let slope = quotient.standard_part()?;
    if slope.is_zero() {
        return Err(Error::InfiniteSubtangent);
    }
    Ok(TangentLine {
        subtangent_r: x0 * &slope - &y0,
        axis_subtangent: &y0 / &slope,
        point: (x0.clone(), y0),
        slope,
    })
}
