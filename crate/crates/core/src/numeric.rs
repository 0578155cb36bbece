//! Decimal approximations of the elementary functions on rationals.
//!
//! Everything runs in `BigInt` fixed point at `digits + GUARD` decimal places
//! and is rounded once at the end, so the returned rational is the nearest
//! multiple of `10^-digits` up to a final-ulp tie.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::expr::Func;
use crate::rational::{pow10, round_to_digits, Rational};

const GUARD: u32 = 12;

/// Largest `|x|` accepted by `exp`; the result would need millions of digits.
const EXP_LIMIT: i64 = 100_000;

/// A fixed-point number `value / 10^scale`.
#[derive(Clone, Debug)]
struct Fixed {
    value: BigInt,
    scale: u32,
}

impl Fixed {
    fn one(scale: u32) -> Self {
        Fixed {
            value: pow10(scale),
            scale,
        }
    }

    fn from_rational(q: &Rational, scale: u32) -> Self {
        let n = q.numer() * pow10(scale);
        Fixed {
            value: div_round(&n, q.denom()),
            scale,
        }
    }

    fn to_rational(&self) -> Rational {
        Rational::new(self.value.clone(), pow10(self.scale))
    }

    fn mul(&self, other: &Fixed) -> Fixed {
        Fixed {
            value: div_round(&(&self.value * &other.value), &pow10(self.scale)),
            scale: self.scale,
        }
    }

    fn div_int(&self, k: &BigInt) -> Fixed {
        Fixed {
            value: div_round(&self.value, k),
            scale: self.scale,
        }
    }
}

fn div_round(n: &BigInt, d: &BigInt) -> BigInt {
    let two = BigInt::from(2);
    let (q, r) = n.div_mod_floor(d);
    if (&r * &two).abs() >= d.abs() {
        q + BigInt::one()
    } else {
        q
    }
}

/// Σ x^k / k!, |x| small.
fn exp_series(x: &Fixed) -> Fixed {
    let mut sum = Fixed::one(x.scale);
    let mut term = Fixed::one(x.scale);
    let mut k = 1u64;
    loop {
        term = term.mul(x).div_int(&BigInt::from(k));
        if term.value.is_zero() {
            break;
        }
        sum.value += &term.value;
        k += 1;
    }
    sum
}

/// Σ z^(2k+1) / (2k+1), |z| <= 1/3.
fn atanh_series(z: &Fixed) -> Fixed {
    let z2 = z.mul(z);
    let mut power = z.clone();
    let mut sum = z.clone();
    let mut k = 3u64;
    loop {
        power = power.mul(&z2);
        let term = power.div_int(&BigInt::from(k));
        if term.value.is_zero() {
            break;
        }
        sum.value += &term.value;
        k += 2;
    }
    sum
}

/// atan(1/n) for integer n >= 2.
fn atan_inv(n: u32, scale: u32) -> Fixed {
    let n = BigInt::from(n);
    let n2 = &n * &n;
    let mut power = Fixed::one(scale).div_int(&n);
    let mut sum = power.clone();
    let mut k = 1u64;
    loop {
        power = power.div_int(&n2);
        let term = power.div_int(&BigInt::from(2 * k + 1));
        if term.value.is_zero() {
            break;
        }
        if k % 2 == 1 {
            sum.value -= &term.value;
        } else {
            sum.value += &term.value;
        }
        k += 1;
    }
    sum
}

fn pi_fixed(scale: u32) -> Fixed {
    let s = scale + 4;
    let a = atan_inv(5, s);
    let b = atan_inv(239, s);
    let value = (a.value * 16 - b.value * 4) / BigInt::from(10_000);
    Fixed { value, scale }
}

fn ln2_fixed(scale: u32) -> Fixed {
    let z = Fixed::from_rational(&Rational::new(1.into(), 3.into()), scale);
    let mut r = atanh_series(&z);
    r.value *= 2;
    r
}

/// Decimal digits needed to hold `|n|`.
fn digits_of(n: &BigInt) -> u32 {
    ((n.bits() as f64) * std::f64::consts::LOG10_2).ceil() as u32 + 1
}

fn exp_fixed(x: &Rational, digits: u32) -> Result<Rational> {
    if x.abs() > Rational::from_integer(EXP_LIMIT.into()) {
        return Err(Error::PoleOrDomain(format!("exp argument {x} out of range")));
    }
    if x.is_zero() {
        return Ok(Rational::one());
    }
    let approx = x.to_f64().unwrap_or(0.0);
    let m = (approx / std::f64::consts::LN_2).round() as i64;
    let grow = if m > 0 {
        (m as f64 * std::f64::consts::LOG10_2).ceil() as u32
    } else {
        0
    };
    let scale = digits + GUARD + grow + digits_of(&BigInt::from(m));
    let ln2 = ln2_fixed(scale);
    let mut r = Fixed::from_rational(x, scale);
    r.value -= &ln2.value * m;
    let mut e = exp_series(&r);
    if m >= 0 {
        e.value <<= m as usize;
    } else {
        e.value = div_round(&e.value, &(BigInt::one() << (-m) as usize));
    }
    Ok(round_to_digits(&e.to_rational(), digits))
}

fn ln_fixed(x: &Rational, digits: u32) -> Result<Rational> {
    if !x.is_positive() {
        return Err(Error::PoleOrDomain(format!("ln of non-positive value {x}")));
    }
    if x.is_one() {
        return Ok(Rational::zero());
    }
    // x = 2^m y with y in [1, 2)
    let mut m = x.numer().bits() as i64 - x.denom().bits() as i64;
    let two = Rational::from_integer(2.into());
    let mut y = x / two.pow(m as i32);
    while y >= two {
        y /= &two;
        m += 1;
    }
    while y < Rational::one() {
        y *= &two;
        m -= 1;
    }
    let scale = digits + GUARD + digits_of(&BigInt::from(m));
    let z = Fixed::from_rational(&((&y - Rational::one()) / (&y + Rational::one())), scale);
    let mut result = atanh_series(&z);
    result.value *= 2;
    result.value += ln2_fixed(scale).value * m;
    Ok(round_to_digits(&result.to_rational(), digits))
}

/// (sin x, cos x) to `digits` places.
fn sin_cos_fixed(x: &Rational, digits: u32) -> (Rational, Rational) {
    let quarter_turns = (x.to_f64().unwrap_or(0.0) / std::f64::consts::FRAC_PI_2).round();
    let k = BigInt::from(quarter_turns as i64);
    let scale = digits + GUARD + digits_of(&k);
    let half_pi = pi_fixed(scale).div_int(&BigInt::from(2));
    let mut r = Fixed::from_rational(x, scale);
    r.value -= &half_pi.value * &k;
    let r2 = r.mul(&r);
    // sin r = Σ (-1)^j r^(2j+1)/(2j+1)!, cos r = Σ (-1)^j r^(2j)/(2j)!
    let mut sin = r.clone();
    let mut cos = Fixed::one(scale);
    let mut term_s = r.clone();
    let mut term_c = Fixed::one(scale);
    let mut j = 1u64;
    loop {
        term_s = term_s.mul(&r2).div_int(&BigInt::from((2 * j) * (2 * j + 1)));
        term_c = term_c.mul(&r2).div_int(&BigInt::from((2 * j - 1) * (2 * j)));
        if term_s.value.is_zero() && term_c.value.is_zero() {
            break;
        }
        if j % 2 == 1 {
            sin.value -= &term_s.value;
            cos.value -= &term_c.value;
        } else {
            sin.value += &term_s.value;
            cos.value += &term_c.value;
        }
        j += 1;
    }
    let (s, c) = (sin.to_rational(), cos.to_rational());
    let (s, c) = match k.mod_floor(&BigInt::from(4)).to_u8().unwrap_or(0) {
        0 => (s, c),
        1 => (c, -s),
        2 => (-s, -c),
        _ => (-c, s),
    };
    (round_to_digits(&s, digits), round_to_digits(&c, digits))
}

/// sqrt to `digits` places, rounded to nearest.
pub fn sqrt(x: &Rational, digits: u32) -> Result<Rational> {
    if x.is_negative() {
        return Err(Error::PoleOrDomain(format!("sqrt of negative value {x}")));
    }
    let scale = digits + GUARD;
    let radicand = (x.numer() * pow10(2 * scale)) / x.denom();
    let root = radicand.sqrt();
    Ok(round_to_digits(&Rational::new(root, pow10(scale)), digits))
}

pub fn pi(digits: u32) -> Rational {
    round_to_digits(&pi_fixed(digits + GUARD).to_rational(), digits)
}

/// `f(x)` to `digits` decimal places.
pub fn eval(f: Func, x: &Rational, digits: u32) -> Result<Rational> {
    match f {
        Func::Sin => Ok(sin_cos_fixed(x, digits).0),
        Func::Cos => Ok(sin_cos_fixed(x, digits).1),
        Func::Exp => exp_fixed(x, digits),
        Func::Ln => ln_fixed(x, digits),
        Func::Sqrt => sqrt(x, digits),
    }
}

/// Whether `s` lies strictly inside the domain where `f` is analytic.
pub fn analytic_at(f: Func, s: &Rational) -> bool {
    match f {
        Func::Ln | Func::Sqrt => s.is_positive(),
        Func::Sin | Func::Cos | Func::Exp => true,
    }
}

/// `f^(k)(s) / k!` for `k = 0..=n`, derivatives taken in closed form and each
/// evaluated to `digits` places before the exact division by `k!`.
pub fn taylor_coefficients(f: Func, s: &Rational, n: u32, digits: u32) -> Result<Vec<Rational>> {
    if !analytic_at(f, s) {
        return Err(Error::PoleOrDomain(format!("{} is not analytic at {s}", f.name())));
    }
    let mut factorial = Rational::one();
    let mut derivatives: Vec<Rational> = Vec::with_capacity(n as usize + 1);
    match f {
        Func::Sin | Func::Cos => {
            let (sin, cos) = sin_cos_fixed(s, digits);
            // sin: sin, cos, -sin, -cos; cos: cos, -sin, -cos, sin
            let cycle = match f {
                Func::Sin => [sin.clone(), cos.clone(), -sin, -cos],
                _ => [cos.clone(), -sin.clone(), -cos, sin],
            };
            for k in 0..=n {
                derivatives.push(cycle[(k % 4) as usize].clone());
            }
        }
        Func::Exp => {
            let e = exp_fixed(s, digits)?;
            derivatives.extend(std::iter::repeat_n(e, n as usize + 1));
        }
        Func::Ln => {
            derivatives.push(ln_fixed(s, digits)?);
            // (-1)^(k-1) (k-1)! / s^k, exact
            let mut value = s.recip();
            for k in 1..=n {
                derivatives.push(value.clone());
                value = -value * Rational::from_integer(k.into()) / s;
            }
        }
        Func::Sqrt => {
            // d^k/ds^k s^(1/2) = c_k s^(1/2 - k), c_k = Π_{j<k} (1/2 - j)
            let mut factors = Vec::with_capacity(n as usize + 1);
            let mut c = Rational::one();
            let mut s_pow = Rational::one();
            for k in 0..=n {
                factors.push(&c / &s_pow);
                c *= Rational::new(1.into(), 2.into()) - Rational::from_integer(k.into());
                s_pow *= s;
            }
            let largest = factors
                .iter()
                .map(|q| q.abs().ceil().to_integer())
                .max()
                .unwrap_or_else(BigInt::one);
            let root = sqrt(s, digits + digits_of(&largest))?;
            for factor in factors {
                derivatives.push(round_to_digits(&(factor * &root), digits));
            }
        }
    }
    Ok(derivatives
        .into_iter()
        .enumerate()
        .map(|(k, d)| {
            if k > 0 {
                factorial *= Rational::from_integer(k.into());
            }
            d / &factorial
        })
        .collect())
}
