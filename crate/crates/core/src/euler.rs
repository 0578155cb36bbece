//! The exponential series from the binomial at an infinite power, and the
//! pentagonal number identity checked coefficient by coefficient.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::lc::LcNumber;
use crate::rational::Rational;

/// Coefficient of `x^k` in `(1 + x/H)^H` at `H = eps^-1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoeffReport {
    pub k: u32,
    /// `H (H-1) ... (H-k+1) / (k! H^k)` before taking the standard part.
    pub lc_value: LcNumber,
    pub coefficient: Rational,
}

/// Falling factorial of `H` over `k! H^k`; its standard part is `1/k!`.
pub fn exp_coeff_via_infinite_binomial(k: u32, window: u32) -> Result<CoeffReport> {
    if window < k + 2 {
        return Err(Error::WindowTooSmall { window, needed: k + 2 });
    }
    let h = LcNumber::infinite_unit(window);
    let mut falling = LcNumber::one(window);
    let mut factorial = BigInt::one();
    for j in 0..k {
        falling = falling * (&h - LcNumber::from_int(j as i64, window));
        factorial *= j + 1;
    }
    let denom = h.powi(k as i64)?.scale(&Rational::from_integer(factorial));
    let lc_value = falling.checked_div(&denom)?;
    let coefficient = lc_value.standard_part()?;
    Ok(CoeffReport { k, lc_value, coefficient })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PentagonalReport {
    pub degree: usize,
    /// `prod_{m=1..D} (1 - x^m)` up to `x^D`.
    pub lhs: Vec<BigInt>,
    /// `sum_m (-1)^m x^((3m^2+m)/2)` over all integers `m`, up to `x^D`.
    pub rhs: Vec<BigInt>,
    pub mismatches: Vec<usize>,
}

impl PentagonalReport {
    pub fn holds(&self) -> bool {
        self.mismatches.is_empty()
    }
}

/// Generalized pentagonal numbers `(3m^2+m)/2` up to `degree`, with the
/// sign `(-1)^m`, for `m = 0, -1, 1, -2, 2, ...`.
pub fn pentagonal_terms(degree: usize) -> Vec<(usize, i32)> {
    let mut out = Vec::new();
    for m in 0i64.. {
        let mut any = false;
        for mm in if m == 0 { vec![0] } else { vec![-m, m] } {
            let e = (3 * mm * mm + mm) / 2;
            if e as usize <= degree {
                any = true;
                out.push((e as usize, if mm % 2 == 0 { 1 } else { -1 }));
            }
        }
        if !any {
            break;
        }
    }
    out
}

pub fn pentagonal_check(degree: usize) -> PentagonalReport {
    let mut lhs = vec![BigInt::zero(); degree + 1];
    lhs[0] = BigInt::one();
    for m in 1..=degree {
        // multiply by (1 - x^m), top down so each term is read before it is changed
        for e in (m..=degree).rev() {
            let t = lhs[e - m].clone();
            lhs[e] -= t;
        }
    }
    let mut rhs = vec![BigInt::zero(); degree + 1];
    for (e, s) in pentagonal_terms(degree) {
        rhs[e] += s;
    }
    let mismatches = (0..=degree).filter(|&e| lhs[e] != rhs[e]).collect();
    PentagonalReport { degree, lhs, rhs, mismatches }
}
