//! Dense univariate polynomials with rational coefficients, and rational
//! functions built from them.

use std::fmt;

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::expr::Expr;
use crate::rational::Rational;

/// Coefficients from the constant term upward; no trailing zeros.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Poly {
    coeffs: Vec<Rational>,
}

impl Poly {
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn constant(c: Rational) -> Self {
        Poly::new(vec![c])
    }

    /// The identity polynomial `x`.
    pub fn x() -> Self {
        Poly::new(vec![Rational::zero(), Rational::one()])
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> Rational {
        self.coeffs.get(k).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Rational {
        self.coeffs.last().cloned().unwrap_or_else(Rational::zero)
    }

    pub fn as_constant(&self) -> Option<Rational> {
        match self.coeffs.len() {
            0 => Some(Rational::zero()),
            1 => Some(self.coeffs[0].clone()),
            _ => None,
        }
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        self.coeffs
            .iter()
            .rev()
            .fold(Rational::zero(), |acc, c| acc * x + c)
    }

    pub fn scale(&self, k: &Rational) -> Poly {
        Poly::new(self.coeffs.iter().map(|c| c * k).collect())
    }

    pub fn add(&self, other: &Poly) -> Poly {
        let n = self.coeffs.len().max(other.coeffs.len());
        Poly::new((0..n).map(|i| self.coeff(i) + other.coeff(i)).collect())
    }

    pub fn sub(&self, other: &Poly) -> Poly {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Poly {
        Poly::new(self.coeffs.iter().map(|c| -c).collect())
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        if self.is_zero() || other.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![Rational::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Poly::new(out)
    }

    pub fn pow(&self, n: u32) -> Poly {
        (0..n).fold(Poly::constant(Rational::one()), |acc, _| acc.mul(self))
    }

    pub fn derivative(&self) -> Poly {
        Poly::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c * Rational::from_integer(k.into()))
                .collect(),
        )
    }

    /// Euclidean division; panics on a zero divisor.
    pub fn div_rem(&self, divisor: &Poly) -> (Poly, Poly) {
        let d = divisor.degree().expect("division by the zero polynomial");
        let lead = divisor.leading();
        let mut rem = self.coeffs.clone();
        let mut quot = vec![Rational::zero(); self.coeffs.len().saturating_sub(d)];
        while rem.len() > d {
            let k = rem.len() - 1 - d;
            let c = rem.last().unwrap() / &lead;
            for (i, dc) in divisor.coeffs.iter().enumerate() {
                rem[k + i] -= &c * dc;
            }
            quot[k] = c;
            rem.pop();
            while rem.last().is_some_and(Zero::is_zero) {
                rem.pop();
            }
        }
        (Poly::new(quot), Poly::new(rem))
    }

    pub fn monic(&self) -> Poly {
        if self.is_zero() {
            return Poly::zero();
        }
        self.scale(&self.leading().recip())
    }

    pub fn gcd(&self, other: &Poly) -> Poly {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.div_rem(&b).1;
            a = b;
            b = r;
        }
        a.monic()
    }

    /// `p / gcd(p, p')`: same roots, each simple.
    pub fn square_free(&self) -> Poly {
        if self.degree().unwrap_or(0) == 0 {
            return self.clone();
        }
        let g = self.gcd(&self.derivative());
        self.div_rem(&g).0
    }

    fn sturm_sequence(&self) -> Vec<Poly> {
        let mut seq = vec![self.clone(), self.derivative()];
        while !seq.last().unwrap().is_zero() {
            let n = seq.len();
            let r = seq[n - 2].div_rem(&seq[n - 1]).1.neg();
            seq.push(r);
        }
        seq.pop();
        seq
    }

    fn sign_changes(seq: &[Poly], x: &Rational) -> usize {
        let signs: Vec<bool> = seq
            .iter()
            .map(|p| p.eval(x))
            .filter(|v| !v.is_zero())
            .map(|v| v.is_positive())
            .collect();
        signs.windows(2).filter(|w| w[0] != w[1]).count()
    }

    /// Intervals each holding exactly one distinct root of `self` in
    /// `[lo, hi]`. A root found exactly comes back as a degenerate interval
    /// `(r, r)`; otherwise the endpoints are not roots and the square-free
    /// part changes sign across them.
    pub fn isolate_roots(&self, lo: &Rational, hi: &Rational) -> Vec<(Rational, Rational)> {
        if self.degree().unwrap_or(0) == 0 {
            return Vec::new();
        }
        let q = self.square_free();
        let seq = q.sturm_sequence();
        let count = |a: &Rational, b: &Rational| {
            Self::sign_changes(&seq, a).saturating_sub(Self::sign_changes(&seq, b))
        };
        let mut found = Vec::new();
        if q.eval(lo).is_zero() {
            found.push((lo.clone(), lo.clone()));
        }
        // half-open intervals (a, b]
        let mut stack = vec![(lo.clone(), hi.clone())];
        let two = Rational::from_integer(2.into());
        while let Some((a, b)) = stack.pop() {
            let n = count(&a, &b);
            if n == 0 {
                continue;
            }
            if n == 1 && q.eval(&b).is_zero() {
                found.push((b.clone(), b));
                continue;
            }
            if n == 1 && !q.eval(&a).is_zero() {
                found.push((a, b));
                continue;
            }
            let m = (&a + &b) / &two;
            stack.push((a, m.clone()));
            stack.push((m, b));
        }
        found.sort_by(|x, y| x.0.cmp(&y.0));
        found
    }

    pub fn to_expr(&self, var: &str) -> Expr {
        let mut acc: Option<Expr> = None;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let monomial = match k {
                0 => None,
                1 => Some(Expr::var(var)),
                _ => Some(Expr::var(var).pow(k as i64)),
            };
            let magnitude = c.abs();
            let term = match monomial {
                None => Expr::Const(magnitude),
                Some(m) if magnitude.is_one() => m,
                Some(m) => Expr::Mul(Box::new(Expr::Const(magnitude)), Box::new(m)),
            };
            acc = Some(match acc {
                None if c.is_negative() => match term {
                    Expr::Mul(k, m) => Expr::Mul(Box::new(Expr::Neg(k)), m),
                    t => Expr::Neg(Box::new(t)),
                },
                None => term,
                Some(a) if c.is_negative() => Expr::Sub(Box::new(a), Box::new(term)),
                Some(a) => Expr::Add(Box::new(a), Box::new(term)),
            });
        }
        acc.unwrap_or_else(|| Expr::int(0))
    }

    /// Reads an expression as a polynomial in `var`.
    pub fn from_expr(e: &Expr, var: &str) -> Result<Poly> {
        let f = RatFn::from_expr(e, var)?;
        match f.den.as_constant() {
            Some(c) => Ok(f.num.scale(&c.recip())),
            None => Err(Error::NotPolynomial(var.to_string())),
        }
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_expr("x"))
    }
}

/// `num / den`, not reduced beyond folding constant denominators.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RatFn {
    pub num: Poly,
    pub den: Poly,
}

impl RatFn {
    fn poly(p: Poly) -> Self {
        RatFn {
            num: p,
            den: Poly::constant(Rational::one()),
        }
    }

    fn normalized(num: Poly, den: Poly) -> Self {
        match den.as_constant() {
            Some(c) => RatFn::poly(num.scale(&c.recip())),
            None => RatFn { num, den },
        }
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.degree() == Some(0)
    }

    /// Rational function of `var`. Function applications and other variables
    /// are rejected.
    pub fn from_expr(e: &Expr, var: &str) -> Result<RatFn> {
        Ok(match e {
            Expr::Const(q) => RatFn::poly(Poly::constant(q.clone())),
            Expr::Var(v) if v == var => RatFn::poly(Poly::x()),
            Expr::Var(v) => return Err(Error::UnboundVariable(v.clone())),
            Expr::Neg(a) => {
                let a = Self::from_expr(a, var)?;
                RatFn { num: a.num.neg(), den: a.den }
            }
            Expr::Add(a, b) | Expr::Sub(a, b) => {
                let a = Self::from_expr(a, var)?;
                let mut b = Self::from_expr(b, var)?;
                if matches!(e, Expr::Sub(..)) {
                    b.num = b.num.neg();
                }
                if a.den == b.den {
                    Self::normalized(a.num.add(&b.num), a.den)
                } else {
                    Self::normalized(
                        a.num.mul(&b.den).add(&b.num.mul(&a.den)),
                        a.den.mul(&b.den),
                    )
                }
            }
            Expr::Mul(a, b) => {
                let (a, b) = (Self::from_expr(a, var)?, Self::from_expr(b, var)?);
                Self::normalized(a.num.mul(&b.num), a.den.mul(&b.den))
            }
            Expr::Div(a, b) => {
                let (a, b) = (Self::from_expr(a, var)?, Self::from_expr(b, var)?);
                if b.num.is_zero() {
                    return Err(Error::PoleOrDomain("division by the zero polynomial".into()));
                }
                Self::normalized(a.num.mul(&b.den), a.den.mul(&b.num))
            }
            Expr::Pow(a, n) => {
                let a = Self::from_expr(a, var)?;
                let k = n.unsigned_abs() as u32;
                if *n >= 0 {
                    Self::normalized(a.num.pow(k), a.den.pow(k))
                } else if a.num.is_zero() {
                    return Err(Error::PoleOrDomain("zero polynomial to a negative power".into()));
                } else {
                    Self::normalized(a.den.pow(k), a.num.pow(k))
                }
            }
            Expr::Apply(f, _) => return Err(Error::NonAlgebraicInput(f.name().to_string())),
        })
    }
}
