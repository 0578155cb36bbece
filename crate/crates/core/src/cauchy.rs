//! Continuity, derivative and center of curvature with an infinitesimal
//! increment `eps`.

use crate::error::{Error, Result};
use crate::expr::Expr;
use crate::lc::{LcNumber, Tag};
use crate::numeric;
use crate::rational::Rational;
use crate::Settings;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ContinuityVerdict {
    pub continuous: bool,
    /// `f(x0 + eps) - f(x0)`.
    pub increment: LcNumber,
    pub classification: Tag,
}

fn at(f: &Expr, var: &str, x: LcNumber, settings: &Settings) -> Result<LcNumber> {
    f.eval_lc_at(var, &x, settings)
}

fn base_and_shifted(f: &Expr, var: &str, x0: &Rational, settings: &Settings) -> Result<(LcNumber, LcNumber)> {
    let w = settings.window;
    let base = LcNumber::from_rational(x0.clone(), w);
    let y0 = at(f, var, base.clone(), settings)?;
    let y1 = at(f, var, base + LcNumber::eps(w), settings)?;
    Ok((y0, y1))
}

/// `f` is continuous at `x0` when the increment produced by `eps` is
/// infinitesimal.
pub fn continuity_check(f: &Expr, var: &str, x0: &Rational, settings: &Settings) -> Result<ContinuityVerdict> {
    let (y0, y1) = base_and_shifted(f, var, x0, settings)?;
    let increment = y1 - y0;
    let classification = increment.classify()?.tag;
    Ok(ContinuityVerdict {
        continuous: matches!(classification, Tag::Zero | Tag::Infinitesimal),
        increment,
        classification,
    })
}

/// [`continuity_check`] at each sample point, in order.
pub fn continuity_sweep(
    f: &Expr,
    var: &str,
    points: &[Rational],
    settings: &Settings,
) -> Vec<Result<ContinuityVerdict>> {
    points.iter().map(|x| continuity_check(f, var, x, settings)).collect()
}

/// `st((f(x0 + eps) - f(x0)) / eps)`. Exact for algebraic `f`; otherwise
/// good to the working precision.
pub fn derivative(f: &Expr, var: &str, x0: &Rational, settings: &Settings) -> Result<Rational> {
    let (y0, y1) = base_and_shifted(f, var, x0, settings)?;
    let quotient = (y1 - y0).checked_div(&LcNumber::eps(settings.window))?;
    if quotient.classify()?.tag == Tag::Infinite {
        return Err(Error::NonFiniteQuotient);
    }
    quotient.standard_part()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CurvatureCenter {
    pub center: (Rational, Rational),
    /// Distance from the center to the curve, to the working precision.
    pub radius: Rational,
}

/// Intersects the normals to `y = f(x)` at `x0` and `x0 + eps`. Each normal
/// is `X + m Y = x + m y` with `m` the slope there; the slope at `x0 + eps`
/// is the eps-derivative of `f(x0 + eps)`.
pub fn curvature_center(f: &Expr, var: &str, x0: &Rational, settings: &Settings) -> Result<CurvatureCenter> {
    let w = settings.window;
    let (y0, y1) = base_and_shifted(f, var, x0, settings)?;
    let m1 = y1.derive_eps();
    let m0 = LcNumber::from_rational(m1.standard_part()?, w);
    let x_0 = LcNumber::from_rational(x0.clone(), w);
    let x_1 = &x_0 + LcNumber::eps(w);
    let c0 = &x_0 + &m0 * &y0;
    let c1 = &x_1 + &m1 * &y1;
    let dm = &m1 - &m0;
    if dm.leading_exponent() != Some(1) {
        return Err(Error::FlatPoint);
    }
    let y = (&c1 - &c0).checked_div(&dm)?;
    if y.classify()?.tag == Tag::Infinite {
        return Err(Error::FlatPoint);
    }
    let x = &c0 - &m0 * &y;
    let center = (x.standard_part()?, y.standard_part()?);
    let y_0 = y0.standard_part()?;
    let dx = &center.0 - x0;
    let dy = &center.1 - &y_0;
    let radius = numeric::sqrt(&(&dx * &dx + &dy * &dy), settings.precision)?;
    Ok(CurvatureCenter { center, radius })
}
