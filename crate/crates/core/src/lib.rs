//! Exact arithmetic on a truncated non-Archimedean field, and the classical
//! infinitesimal procedures built on top of it.
//!
//! The base type is [`LcNumber`], a finite Laurent series in a single positive
//! infinitesimal `eps` with exact rational coefficients. Infinite numbers are
//! negative powers of `eps`; the standard part is the `eps^0` coefficient.
//!
//! On top of that sit the procedures:
//!
//! * [`stevin`]: unending decimals and ten-way subdivision root finding,
//! * [`fermat`]: adequality, extrema and subtangents,
//! * [`gregory`]: limits by evaluation at an infinite index, and polygon
//!   quadrature of the circle,
//! * [`leibniz`]: adequality, the transcendental law of homogeneity,
//! * [`euler`]: the binomial at an infinite power and the pentagonal identity,
//! * [`cauchy`]: continuity, derivative and center of curvature.
//!
//! ```
//! use infinitesimal::{rational::int, LcNumber};
//!
//! let eps = LcNumber::eps(16);
//! let x = LcNumber::from_int(3, 16) + &eps;
//! let sq = &x * &x;
//! assert_eq!(sq.to_string(), "9 + 6*eps + eps^2");
//! assert_eq!(sq.standard_part().unwrap(), int(9));
//! ```

pub mod cauchy;
pub mod error;
pub mod euler;
pub mod expr;
pub mod fermat;
pub mod gregory;
pub mod lc;
pub mod leibniz;
pub mod numeric;
pub mod poly;
pub mod rational;
pub mod stevin;

pub use error::{Error, Result};
pub use expr::{Bindings, Expr, Func};
pub use lc::{Classification, LcNumber, Tag};
pub use rational::Rational;

pub const DEFAULT_WINDOW: u32 = 16;
pub const DEFAULT_PRECISION: u32 = 50;

/// Truncation window and decimal precision shared by every procedure.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Settings {
    /// Exponent slots kept above the leading exponent of an [`LcNumber`].
    pub window: u32,
    /// Digits after the decimal point for transcendental values.
    pub precision: u32,
}

impl Default for Settings {
    fn default() -> Self {
        Settings {
            window: DEFAULT_WINDOW,
            precision: DEFAULT_PRECISION,
        }
    }
}

impl Settings {
    pub fn new(window: u32, precision: u32) -> Self {
        Settings { window, precision }
    }
}
