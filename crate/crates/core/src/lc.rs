//! Truncated Levi-Civita style numbers in one infinitesimal `eps`.
//!
//! A value is a finite sum `Σ c_e eps^e` over integer exponents with exact
//! rational coefficients. Only `window` exponent slots above the leading
//! exponent are kept: multiplying two values with long tails would otherwise
//! grow without bound. When a term is dropped the value remembers the
//! exponent from which it is no longer known (its *horizon*); such a value is
//! called inexact and behaves like `Σ c_e eps^e + O(eps^h)`.
//!
//! The order is lexicographic on the leading term of the difference, so
//! `eps` is positive yet below every positive rational, and `1/eps` is above
//! every rational.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::rational::{format_rational, parse_rational, Rational};
use crate::DEFAULT_WINDOW;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LcNumber {
    terms: BTreeMap<i64, Rational>,
    window: u32,
    horizon: Option<i64>,
}

/// Size class of a value.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Tag {
    Zero,
    Infinitesimal,
    Appreciable,
    Infinite,
}

impl Tag {
    pub fn as_str(self) -> &'static str {
        match self {
            Tag::Zero => "ZERO",
            Tag::Infinitesimal => "INFINITESIMAL",
            Tag::Appreciable => "APPRECIABLE",
            Tag::Infinite => "INFINITE",
        }
    }
}

impl fmt::Display for Tag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Leibniz's split: assignable values are ordinary rationals, everything
/// carrying an `eps` term is inassignable.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Classification {
    pub tag: Tag,
    pub assignable: bool,
}

impl LcNumber {
    fn build(terms: BTreeMap<i64, Rational>, window: u32, horizon: Option<i64>) -> Self {
        let mut terms = terms;
        terms.retain(|_, c| !c.is_zero());
        let mut horizon = horizon;
        if let Some(h) = horizon {
            terms.retain(|&e, _| e < h);
        }
        if let Some(&lead) = terms.keys().next() {
            let cut = lead + window as i64;
            if terms.keys().next_back().is_some_and(|&e| e > cut) {
                terms.retain(|&e, _| e <= cut);
                horizon = Some(horizon.map_or(cut + 1, |h| h.min(cut + 1)));
            }
        }
        LcNumber {
            terms,
            window,
            horizon,
        }
    }

    pub fn zero(window: u32) -> Self {
        LcNumber {
            terms: BTreeMap::new(),
            window,
            horizon: None,
        }
    }

    pub fn one(window: u32) -> Self {
        Self::from_rational(Rational::one(), window)
    }

    pub fn from_rational(q: Rational, window: u32) -> Self {
        Self::monomial(q, 0, window)
    }

    pub fn from_int(n: i64, window: u32) -> Self {
        Self::from_rational(Rational::from_integer(n.into()), window)
    }

    /// `coeff * eps^exponent`.
    pub fn monomial(coeff: Rational, exponent: i64, window: u32) -> Self {
        Self::build(BTreeMap::from([(exponent, coeff)]), window, None)
    }

    /// The positive infinitesimal `eps`.
    pub fn eps(window: u32) -> Self {
        Self::monomial(Rational::one(), 1, window)
    }

    /// The infinite number `H = 1/eps`.
    pub fn infinite_unit(window: u32) -> Self {
        Self::monomial(Rational::one(), -1, window)
    }

    /// Collects `(exponent, coefficient)` pairs; repeated exponents are summed.
    pub fn from_terms<I>(terms: I, window: u32) -> Self
    where
        I: IntoIterator<Item = (i64, Rational)>,
    {
        let mut map = BTreeMap::new();
        for (e, c) in terms {
            *map.entry(e).or_insert_with(Rational::zero) += c;
        }
        Self::build(map, window, None)
    }

    /// Forgets every term from `eps^h` on and marks the value inexact there.
    pub fn truncated_at(&self, h: i64) -> Self {
        let horizon = Some(self.horizon.map_or(h, |old| old.min(h)));
        Self::build(self.terms.clone(), self.window, horizon)
    }

    /// Re-truncates to a different window.
    pub fn with_window(&self, window: u32) -> Self {
        Self::build(self.terms.clone(), window, self.horizon)
    }

    pub fn window(&self) -> u32 {
        self.window
    }

    /// Exponent from which the value is unknown; `None` when exact.
    pub fn horizon(&self) -> Option<i64> {
        self.horizon
    }

    pub fn is_exact(&self) -> bool {
        self.horizon.is_none()
    }

    /// No known terms. An inexact zero is only zero up to its horizon.
    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (i64, &Rational)> + '_ {
        self.terms.iter().map(|(&e, c)| (e, c))
    }

    pub fn coeff(&self, exponent: i64) -> Rational {
        self.terms.get(&exponent).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn leading_exponent(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    pub fn leading_term(&self) -> Result<(i64, Rational)> {
        self.terms
            .iter()
            .next()
            .map(|(&e, c)| (e, c.clone()))
            .ok_or(Error::ZeroOperand)
    }

    /// The monomial at the leading exponent.
    pub fn dominant_part(&self) -> Result<LcNumber> {
        let (e, c) = self.leading_term()?;
        Ok(Self::monomial(c, e, self.window))
    }

    /// Lower bound on the eps-order: the leading exponent, the horizon for an
    /// inexact zero, `None` for exact zero (order +∞).
    fn order(&self) -> Option<i64> {
        self.leading_exponent().or(self.horizon)
    }

    fn combined_window(&self, other: &Self) -> u32 {
        match (self.is_zero() && self.is_exact(), other.is_zero() && other.is_exact()) {
            (true, false) => other.window,
            (false, true) => self.window,
            _ => self.window.min(other.window),
        }
    }

    pub fn scale(&self, k: &Rational) -> Self {
        if k.is_zero() {
            return Self::zero(self.window);
        }
        let terms = self.terms.iter().map(|(&e, c)| (e, c * k)).collect();
        Self::build(terms, self.window, self.horizon)
    }

    /// Multiplies by `eps^k`, which is always exact.
    pub fn shift(&self, k: i64) -> Self {
        let terms = self.terms.iter().map(|(&e, c)| (e + k, c.clone())).collect();
        Self::build(terms, self.window, self.horizon.map(|h| h + k))
    }

    fn add_impl(&self, other: &Self) -> Self {
        let mut terms = self.terms.clone();
        for (&e, c) in &other.terms {
            *terms.entry(e).or_insert_with(Rational::zero) += c;
        }
        let horizon = match (self.horizon, other.horizon) {
            (Some(a), Some(b)) => Some(a.min(b)),
            (a, b) => a.or(b),
        };
        Self::build(terms, self.combined_window(other), horizon)
    }

    fn mul_impl(&self, other: &Self) -> Self {
        let window = self.combined_window(other);
        // a = A + O(eps^ha), b = B + O(eps^hb): ab = AB + O(eps^(ha + ord b)) + O(eps^(hb + ord a))
        let bound = |h: Option<i64>, ord: Option<i64>| match (h, ord) {
            (Some(h), Some(o)) => Some(h + o),
            _ => None,
        };
        let horizon = match (
            bound(self.horizon, other.order()),
            bound(other.horizon, self.order()),
        ) {
            (Some(a), Some(b)) => Some(a.min(b)),
            (a, b) => a.or(b),
        };
        let mut terms: BTreeMap<i64, Rational> = BTreeMap::new();
        if let (Some(la), Some(lb)) = (self.leading_exponent(), other.leading_exponent()) {
            let cut = la + lb + window as i64;
            for (&ea, ca) in &self.terms {
                for (&eb, cb) in &other.terms {
                    if ea + eb > cut {
                        break;
                    }
                    *terms.entry(ea + eb).or_insert_with(Rational::zero) += ca * cb;
                }
            }
            let max_a = *self.terms.keys().next_back().unwrap();
            let max_b = *other.terms.keys().next_back().unwrap();
            let dropped = max_a + max_b > cut;
            let horizon = if dropped {
                Some(horizon.map_or(cut + 1, |h| h.min(cut + 1)))
            } else {
                horizon
            };
            return Self::build(terms, window, horizon);
        }
        Self::build(terms, window, horizon)
    }

    /// Multiplicative inverse, expanded as a geometric series around the
    /// leading term. Exact only for monomials.
    pub fn inv(&self) -> Result<LcNumber> {
        let (lead, c) = self.leading_term().map_err(|_| Error::DivisionByZero)?;
        let w = self.window as i64;
        let c_inv = c.recip();
        // self = c eps^lead (1 + u), ord(u) >= 1
        let u: BTreeMap<i64, Rational> = self
            .terms
            .iter()
            .skip(1)
            .map(|(&e, coeff)| (e - lead, coeff * &c_inv))
            .collect();
        let u_horizon = self.horizon.map(|h| h - lead);
        let mut horizon = u_horizon;
        let mut series: BTreeMap<i64, Rational> = BTreeMap::from([(0, Rational::one())]);
        if !u.is_empty() {
            horizon = Some(horizon.map_or(w + 1, |h| h.min(w + 1)));
            // (-u)^k accumulated for k = 1..=w, keeping exponents <= w
            let mut power: BTreeMap<i64, Rational> = BTreeMap::from([(0, Rational::one())]);
            for _ in 1..=w {
                let mut next: BTreeMap<i64, Rational> = BTreeMap::new();
                for (&ep, cp) in &power {
                    for (&eu, cu) in &u {
                        if ep + eu > w {
                            break;
                        }
                        *next.entry(ep + eu).or_insert_with(Rational::zero) -= cp * cu;
                    }
                }
                next.retain(|_, v| !v.is_zero());
                if next.is_empty() {
                    break;
                }
                for (&e, v) in &next {
                    *series.entry(e).or_insert_with(Rational::zero) += v;
                }
                power = next;
            }
        }
        let terms = series
            .into_iter()
            .map(|(e, v)| (e - lead, v * &c_inv))
            .collect();
        Ok(Self::build(terms, self.window, horizon.map(|h| h - lead)))
    }

    pub fn checked_div(&self, other: &Self) -> Result<LcNumber> {
        Ok(self * &other.inv()?)
    }

    /// Integer power; negative exponents go through [`LcNumber::inv`].
    pub fn powi(&self, n: i64) -> Result<LcNumber> {
        if n < 0 {
            return self.inv()?.powi(-n);
        }
        let mut result = Self::one(self.window);
        let mut base = self.clone();
        let mut k = n as u64;
        while k > 0 {
            if k & 1 == 1 {
                result = &result * &base;
            }
            k >>= 1;
            if k > 0 {
                base = &base * &base;
            }
        }
        Ok(result)
    }

    /// Sign of the leading coefficient of `self - other`.
    pub fn compare(&self, other: &Self) -> Result<Ordering> {
        let d = self - other;
        match d.leading_term() {
            Ok((_, c)) => Ok(if c.is_positive() {
                Ordering::Greater
            } else {
                Ordering::Less
            }),
            Err(_) if d.is_exact() => Ok(Ordering::Equal),
            Err(_) => Err(Error::IndeterminateOrder),
        }
    }

    pub fn classify(&self) -> Result<Classification> {
        let tag = match self.leading_exponent() {
            Some(e) if e < 0 => Tag::Infinite,
            Some(0) => Tag::Appreciable,
            Some(_) => Tag::Infinitesimal,
            None => match self.horizon {
                None => Tag::Zero,
                // O(eps^h) with h > 0: zero or infinitesimal, negligible either way
                Some(h) if h > 0 => Tag::Infinitesimal,
                Some(_) => return Err(Error::IndeterminateOrder),
            },
        };
        let assignable = matches!(tag, Tag::Zero | Tag::Appreciable)
            && self.is_exact()
            && self.terms.keys().all(|&e| e == 0);
        Ok(Classification { tag, assignable })
    }

    /// The rational infinitely close to a finite value: its `eps^0` coefficient.
    pub fn standard_part(&self) -> Result<Rational> {
        match self.leading_exponent() {
            Some(e) if e < 0 => Err(Error::InfiniteOperand),
            Some(_) => Ok(self.coeff(0)),
            None => match self.horizon {
                Some(h) if h <= 0 => Err(Error::IndeterminateOrder),
                _ => Ok(Rational::zero()),
            },
        }
    }

    /// Formal derivative with respect to `eps`. If `self = f(x0 + eps)` as a
    /// Taylor series, this is `f'(x0 + eps)`.
    pub fn derive_eps(&self) -> Self {
        let terms = self
            .terms
            .iter()
            .filter(|(&e, _)| e != 0)
            .map(|(&e, c)| (e - 1, c * Rational::from_integer(e.into())))
            .collect();
        Self::build(terms, self.window, self.horizon.map(|h| h - 1))
    }

    pub fn parse_with_window(text: &str, window: u32) -> Result<Self> {
        parse_lc(text, window)
    }
}

impl Default for LcNumber {
    fn default() -> Self {
        Self::zero(DEFAULT_WINDOW)
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident, $body:expr) => {
        impl<'a> $trait<&'a LcNumber> for &'a LcNumber {
            type Output = LcNumber;
            fn $method(self, rhs: &'a LcNumber) -> LcNumber {
                $body(self, rhs)
            }
        }
        impl $trait<LcNumber> for LcNumber {
            type Output = LcNumber;
            fn $method(self, rhs: LcNumber) -> LcNumber {
                $body(&self, &rhs)
            }
        }
        impl<'a> $trait<&'a LcNumber> for LcNumber {
            type Output = LcNumber;
            fn $method(self, rhs: &'a LcNumber) -> LcNumber {
                $body(&self, rhs)
            }
        }
        impl<'a> $trait<LcNumber> for &'a LcNumber {
            type Output = LcNumber;
            fn $method(self, rhs: LcNumber) -> LcNumber {
                $body(self, &rhs)
            }
        }
    };
}

forward_binop!(Add, add, LcNumber::add_impl);
forward_binop!(Mul, mul, LcNumber::mul_impl);
forward_binop!(Sub, sub, |a: &LcNumber, b: &LcNumber| a.add_impl(&-b));

impl Neg for &LcNumber {
    type Output = LcNumber;
    fn neg(self) -> LcNumber {
        LcNumber {
            terms: self.terms.iter().map(|(&e, c)| (e, -c)).collect(),
            window: self.window,
            horizon: self.horizon,
        }
    }
}

impl Neg for LcNumber {
    type Output = LcNumber;
    fn neg(self) -> LcNumber {
        -&self
    }
}

fn eps_power(e: i64) -> String {
    match e {
        1 => "eps".to_string(),
        _ => format!("eps^{e}"),
    }
}

/// `3 + 5*eps + 2*eps^2`, leading exponent first; inexact values end with
/// `O(eps^h)`.
impl fmt::Display for LcNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (&e, c) in &self.terms {
            let negative = c.is_negative();
            let magnitude = c.abs();
            let body = if e == 0 {
                format_rational(&magnitude)
            } else if magnitude.is_one() {
                eps_power(e)
            } else {
                format!("{}*{}", format_rational(&magnitude), eps_power(e))
            };
            match (first, negative) {
                (true, true) => write!(f, "-{body}")?,
                (true, false) => write!(f, "{body}")?,
                (false, true) => write!(f, " - {body}")?,
                (false, false) => write!(f, " + {body}")?,
            }
            first = false;
        }
        if let Some(h) = self.horizon {
            let tail = if h == 0 {
                "O(1)".to_string()
            } else {
                format!("O({})", eps_power(h))
            };
            if first {
                f.write_str(&tail)?;
            } else {
                write!(f, " + {tail}")?;
            }
            first = false;
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

impl FromStr for LcNumber {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        parse_lc(s, DEFAULT_WINDOW)
    }
}

struct LcParser<'a> {
    src: &'a str,
    pos: usize,
}

impl<'a> LcParser<'a> {
    fn err(&self, message: &str) -> Error {
        Error::Syntax {
            position: self.pos,
            message: message.to_string(),
        }
    }

    fn skip_ws(&mut self) {
        while self.src[self.pos..].starts_with(' ') {
            self.pos += 1;
        }
    }

    fn eat(&mut self, token: &str) -> bool {
        self.skip_ws();
        if self.src[self.pos..].starts_with(token) {
            self.pos += token.len();
            true
        } else {
            false
        }
    }

    fn number(&mut self) -> Option<Rational> {
        self.skip_ws();
        let rest = &self.src[self.pos..];
        let len = rest
            .find(|c: char| !(c.is_ascii_digit() || c == '.' || c == '/'))
            .unwrap_or(rest.len());
        if len == 0 {
            return None;
        }
        let q = parse_rational(&rest[..len]).ok()?;
        self.pos += len;
        Some(q)
    }

    fn integer(&mut self) -> Result<i64> {
        self.skip_ws();
        let rest = &self.src[self.pos..];
        let mut len = usize::from(rest.starts_with('-'));
        len += rest[len..]
            .find(|c: char| !c.is_ascii_digit())
            .unwrap_or(rest.len() - len);
        let n = rest[..len].parse().map_err(|_| self.err("expected an integer exponent"))?;
        self.pos += len;
        Ok(n)
    }

    fn eps_exponent(&mut self) -> Result<i64> {
        if !self.eat("eps") {
            return Err(self.err("expected `eps`"));
        }
        if self.eat("^") {
            self.integer()
        } else {
            Ok(1)
        }
    }
}

fn parse_lc(text: &str, window: u32) -> Result<LcNumber> {
    let mut p = LcParser { src: text, pos: 0 };
    let mut terms: Vec<(i64, Rational)> = Vec::new();
    let mut horizon: Option<i64> = None;
    let mut negative = p.eat("-");
    loop {
        if p.eat("O(") {
            let h = if p.eat("1") { 0 } else { p.eps_exponent()? };
            if !p.eat(")") {
                return Err(p.err("expected `)`"));
            }
            horizon = Some(horizon.map_or(h, |old: i64| old.min(h)));
        } else {
            let (coeff, exponent) = match p.number() {
                Some(c) => {
                    if p.eat("*") {
                        (c, p.eps_exponent()?)
                    } else {
                        (c, 0)
                    }
                }
                None => (Rational::one(), p.eps_exponent()?),
            };
            terms.push((exponent, if negative { -coeff } else { coeff }));
        }
        if p.eat("+") {
            negative = false;
        } else if p.eat("-") {
            negative = true;
        } else {
            break;
        }
    }
    p.skip_ws();
    if p.pos != text.len() {
        return Err(p.err("unexpected trailing input"));
    }
    let mut value = LcNumber::from_terms(terms, window);
    if let Some(h) = horizon {
        value = value.truncated_at(h);
    }
    Ok(value)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{int, ratio};

    fn lc(s: &str) -> LcNumber {
        s.parse().unwrap()
    }

    fn lcw(s: &str, w: u32) -> LcNumber {
        LcNumber::parse_with_window(s, w).unwrap()
    }

    #[test]
    fn addition_examples() {
        assert_eq!(lc("3 + eps") + lc("-3"), lc("eps"));
        let x = lc("2 - 1/3*eps^-2");
        assert_eq!(&x + &LcNumber::zero(4), x);
        assert_eq!(lc("1 + eps") + lc("1 - eps"), lc("2"));
    }

    #[test]
    fn multiplication_examples() {
        let dx = lc("2 + eps");
        let dv = lc("3 + eps");
        assert_eq!(dx * dv, lc("6 + 5*eps + eps^2"));
        assert_eq!(lc("eps") * lc("eps^-1"), lc("1"));
        assert_eq!(lc("1 + eps") * lc("1 - eps"), lc("1 - eps^2"));
    }

    #[test]
    fn multiplication_truncates_to_window() {
        let a = lcw("1 + eps^3", 4);
        let sq = &a * &a;
        // 1 + 2eps^3 + eps^6, window 4 keeps exponents <= 4
        assert_eq!(sq.to_string(), "1 + 2*eps^3 + O(eps^5)");
        assert!(!sq.is_exact());
    }

    #[test]
    fn inverse_examples() {
        assert_eq!(lc("eps").inv().unwrap(), lc("eps^-1"));
        assert_eq!(lc("2").inv().unwrap(), lc("1/2"));
        let inv = lcw("1 - eps", 3).inv().unwrap();
        assert_eq!(inv.to_string(), "1 + eps + eps^2 + eps^3 + O(eps^4)");
        // multiply-back oracle
        let back = &lcw("1 - eps", 3) * &inv;
        assert_eq!(back.to_string(), "1 + O(eps^4)");
        assert_eq!(LcNumber::zero(16).inv(), Err(Error::DivisionByZero));
    }

    #[test]
    fn inverse_of_infinite_value() {
        let h = lc("eps^-1 + 2");
        let inv = h.inv().unwrap();
        assert_eq!(inv.leading_term().unwrap(), (1, int(1)));
        assert_eq!(inv.coeff(2), int(-2));
        assert_eq!(inv.coeff(3), int(4));
        let back = &h * &inv;
        assert_eq!(back.standard_part().unwrap(), int(1));
        assert_eq!(back.leading_exponent(), Some(0));
        assert_eq!(back.terms().count(), 1);
    }

    #[test]
    fn comparison_examples() {
        let tiny = LcNumber::from_rational(ratio(1, 1_000_000_000), 16);
        assert_eq!(lc("2*eps").compare(&tiny), Ok(Ordering::Less));
        assert_eq!(lc("eps^-1").compare(&lc("1000000")), Ok(Ordering::Greater));
        assert_eq!(lc("3 + eps").compare(&lc("3")), Ok(Ordering::Greater));
        assert_eq!(lc("eps").compare(&lc("0")), Ok(Ordering::Greater));
        assert_eq!(lc("7").compare(&lc("7")), Ok(Ordering::Equal));
    }

    #[test]
    fn comparison_refuses_to_guess_below_horizon() {
        let a = lcw("1 - eps", 3).inv().unwrap();
        let b = lcw("1 + eps + eps^2 + eps^3", 3);
        assert_eq!(a.compare(&b), Err(Error::IndeterminateOrder));
    }

    #[test]
    fn classification_examples() {
        assert_eq!(lc("eps").classify().unwrap().tag, Tag::Infinitesimal);
        let c = lc("5 + 3*eps").classify().unwrap();
        assert_eq!(c.tag, Tag::Appreciable);
        assert!(!c.assignable);
        assert!(lc("5").classify().unwrap().assignable);
        assert_eq!(lc("eps^-1").classify().unwrap().tag, Tag::Infinite);
        assert_eq!(lc("0").classify().unwrap().tag, Tag::Zero);
        assert_eq!(lc("O(eps^2)").classify().unwrap().tag, Tag::Infinitesimal);
        assert_eq!(lc("O(eps^-1)").classify(), Err(Error::IndeterminateOrder));
    }

    #[test]
    fn standard_part_examples() {
        assert_eq!(lc("3 + 5*eps + 2*eps^2").standard_part(), Ok(int(3)));
        assert_eq!(lc("eps").standard_part(), Ok(int(0)));
        assert_eq!(lc("eps^-1").standard_part(), Err(Error::InfiniteOperand));
    }

    #[test]
    fn leading_term_examples() {
        assert_eq!(lc("eps - eps^2").leading_term(), Ok((1, int(1))));
        assert_eq!(lc("-2*eps^-1 + 7").leading_term(), Ok((-1, int(-2))));
        assert_eq!(lc("4").leading_term(), Ok((0, int(4))));
        assert_eq!(lc("0").leading_term(), Err(Error::ZeroOperand));
    }

    #[test]
    fn powers() {
        assert_eq!(lc("1 + eps").powi(3).unwrap(), lc("1 + 3*eps + 3*eps^2 + eps^3"));
        assert_eq!(lc("2*eps").powi(-2).unwrap(), lc("1/4*eps^-2"));
        assert_eq!(lc("0").powi(0).unwrap(), lc("1"));
        assert_eq!(lc("0").powi(-1), Err(Error::DivisionByZero));
    }

    #[test]
    fn derivative_in_eps() {
        // f(x) = x^3 at x0 = 2: f(2 + eps) = 8 + 12eps + 6eps^2 + eps^3
        let f = lc("8 + 12*eps + 6*eps^2 + eps^3");
        assert_eq!(f.derive_eps(), lc("12 + 12*eps + 3*eps^2"));
    }

    #[test]
    fn text_format() {
        assert_eq!(lc("3 + 5*eps + 2*eps^2").to_string(), "3 + 5*eps + 2*eps^2");
        assert_eq!(lc("-2*eps^-1+7").to_string(), "-2*eps^-1 + 7");
        assert_eq!(lc("1/2 - 1/3*eps").to_string(), "1/2 - 1/3*eps");
        assert_eq!(lc("0").to_string(), "0");
        assert_eq!(lc("eps + eps").to_string(), "2*eps");
        assert_eq!(lc("0.5*eps").to_string(), "1/2*eps");
        assert!("3 +".parse::<LcNumber>().is_err());
        assert!("3 * x".parse::<LcNumber>().is_err());
    }
}
