//! Equality up to negligible terms.
//!
//! Two values are *adequal* when their difference is infinitesimal (or
//! zero), and *geometrically equal* when their ratio is adequal to 1. The
//! transcendental law of homogeneity discards whatever is negligible against
//! the assignable part, which for a finite value is its standard part.

use crate::error::{Error, Result};
use crate::lc::{LcNumber, Tag};
use crate::rational::Rational;

/// Outcome of comparing two values both ways.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComparisonVerdict {
    pub arithmetic_equal: bool,
    pub geometric_equal: bool,
    /// The difference (arithmetic) or the ratio (geometric) that was judged.
    pub witness: LcNumber,
}

fn negligible(x: &LcNumber) -> bool {
    matches!(x.classify(), Ok(c) if matches!(c.tag, Tag::Zero | Tag::Infinitesimal))
}

/// `a - b` is zero or infinitesimal.
pub fn adequal(a: &LcNumber, b: &LcNumber) -> bool {
    negligible(&(a - b))
}

/// `a / b` is adequal to 1.
pub fn geometric_equal(a: &LcNumber, b: &LcNumber) -> Result<bool> {
    let ratio = a.checked_div(b)?;
    Ok(adequal(&ratio, &LcNumber::one(ratio.window())))
}

/// Both modes at once; `witness` is the difference.
pub fn compare_arithmetic(a: &LcNumber, b: &LcNumber) -> ComparisonVerdict {
    ComparisonVerdict {
        arithmetic_equal: adequal(a, b),
        geometric_equal: geometric_equal(a, b).unwrap_or(false),
        witness: a - b,
    }
}

/// Both modes at once; `witness` is the ratio `a / b`.
pub fn compare_geometric(a: &LcNumber, b: &LcNumber) -> Result<ComparisonVerdict> {
    let ratio = a.checked_div(b)?;
    Ok(ComparisonVerdict {
        arithmetic_equal: adequal(a, b),
        geometric_equal: adequal(&ratio, &LcNumber::one(ratio.window())),
        witness: ratio,
    })
}

/// Transcendental law of homogeneity: the assignable value left once the
/// negligible terms of a finite quantity are dropped.
pub fn tlh(a: &LcNumber) -> Result<Rational> {
    a.standard_part()
}

/// The leading monomial, i.e. what survives when everything of higher
/// order is neglected relative to it.
pub fn dominant_part(a: &LcNumber) -> Result<LcNumber> {
    a.dominant_part().map_err(|_| Error::ZeroOperand)
}
