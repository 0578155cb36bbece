//! Expressions over named variables, with one set of evaluation rules applied
//! to both ordinary rationals and [`LcNumber`]s.
//!
//! Grammar:
//!
//! ```text
//! expr   := term (("+" | "-") term)*
//! term   := factor (("*" | "/") factor)*
//! factor := "-" factor | atom ("^" integer)?
//! atom   := number | ident | ident "(" expr ")" | "(" expr ")"
//! number := decimal | ratio "p/q" (no spaces)
//! ```
//!
//! Unary minus binds looser than `^`, so `-x^2` is `-(x^2)`.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;

use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::lc::LcNumber;
use crate::numeric;
use crate::rational::{format_rational, parse_rational, Rational};
use crate::Settings;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Func {
    Sin,
    Cos,
    Exp,
    Ln,
    Sqrt,
}

impl Func {
    pub const ALL: [Func; 5] = [Func::Sin, Func::Cos, Func::Exp, Func::Ln, Func::Sqrt];

    pub fn name(self) -> &'static str {
        match self {
            Func::Sin => "sin",
            Func::Cos => "cos",
            Func::Exp => "exp",
            Func::Ln => "ln",
            Func::Sqrt => "sqrt",
        }
    }

    pub fn from_name(name: &str) -> Option<Func> {
        Func::ALL.into_iter().find(|f| f.name() == name)
    }
}

/// Expression tree. `Const` holds non-negative values only; a negative
/// constant is `Neg(Const(..))`, which is what the parser produces.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Expr {
    Const(Rational),
    Var(String),
    Neg(Box<Expr>),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Div(Box<Expr>, Box<Expr>),
    Pow(Box<Expr>, i64),
    Apply(Func, Box<Expr>),
}

/// Variable name to value.
pub type Bindings<T> = BTreeMap<String, T>;

impl Expr {
    pub fn constant(q: Rational) -> Expr {
        if q.is_negative() {
            Expr::Neg(Box::new(Expr::Const(-q)))
        } else {
            Expr::Const(q)
        }
    }

    pub fn int(n: i64) -> Expr {
        Expr::constant(Rational::from_integer(n.into()))
    }

    pub fn var(name: &str) -> Expr {
        Expr::Var(name.to_string())
    }

    pub fn pow(self, n: i64) -> Expr {
        Expr::Pow(Box::new(self), n)
    }

    pub fn apply(f: Func, arg: Expr) -> Expr {
        Expr::Apply(f, Box::new(arg))
    }

    pub fn free_vars(&self) -> BTreeSet<String> {
        let mut out = BTreeSet::new();
        self.collect_vars(&mut out);
        out
    }

    fn collect_vars(&self, out: &mut BTreeSet<String>) {
        match self {
            Expr::Const(_) => {}
            Expr::Var(v) => {
                out.insert(v.clone());
            }
            Expr::Neg(a) | Expr::Pow(a, _) | Expr::Apply(_, a) => a.collect_vars(out),
            Expr::Add(a, b) | Expr::Sub(a, b) | Expr::Mul(a, b) | Expr::Div(a, b) => {
                a.collect_vars(out);
                b.collect_vars(out);
            }
        }
    }

    /// The first function application, if any.
    pub fn first_apply(&self) -> Option<Func> {
        match self {
            Expr::Const(_) | Expr::Var(_) => None,
            Expr::Apply(f, _) => Some(*f),
            Expr::Neg(a) | Expr::Pow(a, _) => a.first_apply(),
            Expr::Add(a, b) | Expr::Sub(a, b) | Expr::Mul(a, b) | Expr::Div(a, b) => {
                a.first_apply().or_else(|| b.first_apply())
            }
        }
    }

    /// Built from `+ - * /` and integer powers only.
    pub fn is_algebraic(&self) -> bool {
        self.first_apply().is_none()
    }

    /// The only free variable, or `default` when the expression is closed.
    pub fn sole_variable(&self, default: &str) -> Result<String> {
        let vars = self.free_vars();
        match vars.len() {
            0 => Ok(default.to_string()),
            1 => Ok(vars.into_iter().next().unwrap()),
            _ => Err(Error::InvalidArgument(format!(
                "expected one variable, found {}",
                vars.into_iter().collect::<Vec<_>>().join(", ")
            ))),
        }
    }

    fn precedence(&self) -> u8 {
        match self {
            Expr::Add(..) | Expr::Sub(..) => 1,
            Expr::Mul(..) | Expr::Div(..) => 2,
            Expr::Neg(_) => 3,
            Expr::Pow(..) => 4,
            Expr::Const(q) if !q.is_integer() => 4,
            Expr::Const(_) | Expr::Var(_) | Expr::Apply(..) => 5,
        }
    }

    fn render(&self, min: u8, out: &mut String) {
        let wrap = self.precedence() < min;
        if wrap {
            out.push('(');
        }
        match self {
            Expr::Const(q) => out.push_str(&format_rational(q)),
            Expr::Var(v) => out.push_str(v),
            Expr::Neg(a) => {
                out.push('-');
                a.render(3, out);
            }
            Expr::Add(a, b) | Expr::Sub(a, b) => {
                a.render(1, out);
                out.push_str(if matches!(self, Expr::Add(..)) { " + " } else { " - " });
                b.render(2, out);
            }
            Expr::Mul(a, b) | Expr::Div(a, b) => {
                a.render(2, out);
                out.push_str(if matches!(self, Expr::Mul(..)) { " * " } else { " / " });
                b.render(3, out);
            }
            Expr::Pow(a, n) => {
                a.render(5, out);
                out.push('^');
                out.push_str(&n.to_string());
            }
            Expr::Apply(f, a) => {
                out.push_str(f.name());
                out.push('(');
                a.render(0, out);
                out.push(')');
            }
        }
        if wrap {
            out.push(')');
        }
    }

    pub fn eval_real(&self, bindings: &Bindings<Rational>, settings: &Settings) -> Result<Rational> {
        eval(self, bindings, settings)
    }

    pub fn eval_lc(&self, bindings: &Bindings<LcNumber>, settings: &Settings) -> Result<LcNumber> {
        eval(self, bindings, settings)
    }

    /// Evaluates with a single variable bound.
    pub fn eval_real_at(&self, var: &str, x: &Rational, settings: &Settings) -> Result<Rational> {
        self.eval_real(&Bindings::from([(var.to_string(), x.clone())]), settings)
    }

    pub fn eval_lc_at(&self, var: &str, x: &LcNumber, settings: &Settings) -> Result<LcNumber> {
        self.eval_lc(&Bindings::from([(var.to_string(), x.clone())]), settings)
    }
}

impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut s = String::new();
        self.render(0, &mut s);
        f.write_str(&s)
    }
}

impl FromStr for Expr {
    type Err = Error;
    fn from_str(s: &str) -> Result<Expr> {
        parse(s)
    }
}

/// The arithmetic an evaluator needs from its number type.
trait Scalar: Clone {
    fn constant(q: &Rational, settings: &Settings) -> Self;
    fn add(&self, other: &Self) -> Self;
    fn sub(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn neg(&self) -> Self;
    fn div(&self, other: &Self) -> Result<Self>;
    fn powi(&self, n: i64) -> Result<Self>;
    fn apply(f: Func, x: &Self, settings: &Settings) -> Result<Self>;
}

impl Scalar for Rational {
    fn constant(q: &Rational, _: &Settings) -> Self {
        q.clone()
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn sub(&self, other: &Self) -> Self {
        self - other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn neg(&self) -> Self {
        -self
    }
    fn div(&self, other: &Self) -> Result<Self> {
        if other.is_zero() {
            return Err(Error::PoleOrDomain("division by zero".into()));
        }
        Ok(self / other)
    }
    fn powi(&self, n: i64) -> Result<Self> {
        if self.is_zero() && n < 0 {
            return Err(Error::PoleOrDomain("zero to a negative power".into()));
        }
        let n = i32::try_from(n).map_err(|_| Error::InvalidArgument("exponent too large".into()))?;
        Ok(num_traits::Pow::pow(self, n))
    }
    fn apply(f: Func, x: &Self, settings: &Settings) -> Result<Self> {
        numeric::eval(f, x, settings.precision)
    }
}

impl Scalar for LcNumber {
    fn constant(q: &Rational, settings: &Settings) -> Self {
        LcNumber::from_rational(q.clone(), settings.window)
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn sub(&self, other: &Self) -> Self {
        self - other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn neg(&self) -> Self {
        -self
    }
    fn div(&self, other: &Self) -> Result<Self> {
        if other.is_zero() {
            return Err(Error::PoleOrDomain(format!("division by {other}")));
        }
        self.checked_div(other)
    }
    fn powi(&self, n: i64) -> Result<Self> {
        if self.is_zero() && n < 0 {
            return Err(Error::PoleOrDomain(format!("{self} to a negative power")));
        }
        LcNumber::powi(self, n)
    }
    fn apply(f: Func, x: &Self, settings: &Settings) -> Result<Self> {
        taylor_apply(f, x, settings)
    }
}

/// `f(s + δ) = Σ_{k<=W} f^(k)(s) δ^k / k!` with `s` the standard part.
fn taylor_apply(f: Func, x: &LcNumber, settings: &Settings) -> Result<LcNumber> {
    let s = x.standard_part().map_err(|e| match e {
        Error::InfiniteOperand => Error::PoleOrDomain(format!("{}({x}): infinite argument", f.name())),
        other => Error::PoleOrDomain(format!("{}({x}): {other}", f.name())),
    })?;
    let window = x.window();
    let delta = x - &LcNumber::from_rational(s.clone(), window);
    let coeffs = numeric::taylor_coefficients(f, &s, window, settings.precision)?;
    let mut sum = LcNumber::zero(window);
    let mut power = LcNumber::one(window);
    for (k, a) in coeffs.iter().enumerate() {
        if k > 0 {
            power = &power * &delta;
            if power.is_zero() && power.is_exact() {
                break;
            }
        }
        sum = &sum + &power.scale(a);
    }
    let order = delta.leading_exponent().or(delta.horizon()).unwrap_or(1);
    Ok(sum.truncated_at(order * (window as i64 + 1)))
}

fn eval<T: Scalar>(e: &Expr, b: &Bindings<T>, settings: &Settings) -> Result<T> {
    Ok(match e {
        Expr::Const(q) => T::constant(q, settings),
        Expr::Var(v) => b.get(v).cloned().ok_or_else(|| Error::UnboundVariable(v.clone()))?,
        Expr::Neg(a) => eval(a, b, settings)?.neg(),
        Expr::Add(l, r) => eval(l, b, settings)?.add(&eval(r, b, settings)?),
        Expr::Sub(l, r) => eval(l, b, settings)?.sub(&eval(r, b, settings)?),
        Expr::Mul(l, r) => eval(l, b, settings)?.mul(&eval(r, b, settings)?),
        Expr::Div(l, r) => eval(l, b, settings)?.div(&eval(r, b, settings)?)?,
        Expr::Pow(a, n) => eval(a, b, settings)?.powi(*n)?,
        Expr::Apply(f, a) => T::apply(*f, &eval(a, b, settings)?, settings)?,
    })
}

#[derive(Clone, Debug, PartialEq)]
enum Token {
    Number(Rational),
    Ident(String),
    Sym(char),
}

fn tokenize(src: &str) -> Result<Vec<(usize, Token)>> {
    let bytes = src.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i] as char;
        if c.is_ascii_whitespace() {
            i += 1;
        } else if c.is_ascii_digit() || (c == '.' && bytes.get(i + 1).is_some_and(u8::is_ascii_digit)) {
            let start = i;
            while i < bytes.len() && (bytes[i].is_ascii_digit() || bytes[i] == b'.') {
                i += 1;
            }
            // p/q with no spaces is a single ratio literal, except as an exponent
            let after_caret = matches!(out.last(), Some((_, Token::Sym('^'))));
            if !after_caret
                && i + 1 < bytes.len() && bytes[i] == b'/' && bytes[i + 1].is_ascii_digit() && !src[start..i].contains('.') {
                i += 1;
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
            }
            let q = parse_rational(&src[start..i]).map_err(|_| Error::Syntax {
                position: start,
                message: format!("bad number `{}`", &src[start..i]),
            })?;
            out.push((start, Token::Number(q)));
        } else if c.is_ascii_alphabetic() {
            let start = i;
            while i < bytes.len() && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_') {
                i += 1;
            }
            out.push((start, Token::Ident(src[start..i].to_string())));
        } else if "+-*/^()".contains(c) {
            out.push((i, Token::Sym(c)));
            i += 1;
        } else {
            return Err(Error::Syntax {
                position: i,
                message: format!("unexpected character `{c}`"),
            });
        }
    }
    Ok(out)
}

struct Parser {
    tokens: Vec<(usize, Token)>,
    pos: usize,
    end: usize,
}

impl Parser {
    fn offset(&self) -> usize {
        self.tokens.get(self.pos).map_or(self.end, |(o, _)| *o)
    }

    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos).map(|(_, t)| t)
    }

    fn error<T>(&self, message: &str) -> Result<T> {
        Err(Error::Syntax {
            position: self.offset(),
            message: message.to_string(),
        })
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(&Token::Sym(c)) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expr(&mut self) -> Result<Expr> {
        let mut lhs = self.term()?;
        loop {
            if self.eat('+') {
                lhs = Expr::Add(Box::new(lhs), Box::new(self.term()?));
            } else if self.eat('-') {
                lhs = Expr::Sub(Box::new(lhs), Box::new(self.term()?));
            } else {
                return Ok(lhs);
            }
        }
    }

    fn term(&mut self) -> Result<Expr> {
        let mut lhs = self.factor()?;
        loop {
            if self.eat('*') {
                lhs = Expr::Mul(Box::new(lhs), Box::new(self.factor()?));
            } else if self.eat('/') {
                lhs = Expr::Div(Box::new(lhs), Box::new(self.factor()?));
            } else {
                return Ok(lhs);
            }
        }
    }

    fn factor(&mut self) -> Result<Expr> {
        if self.eat('-') {
            return Ok(Expr::Neg(Box::new(self.factor()?)));
        }
        let base = self.atom()?;
        if self.eat('^') {
            let negative = self.eat('-');
            match self.peek() {
                Some(Token::Number(q)) if q.is_integer() => {
                    let n: i64 = q
                        .to_integer()
                        .try_into()
                        .or_else(|_| self.error("exponent too large"))?;
                    self.pos += 1;
                    return Ok(base.pow(if negative { -n } else { n }));
                }
                _ => return self.error("expected an integer exponent"),
            }
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<Expr> {
        match self.peek().cloned() {
            Some(Token::Number(q)) => {
                self.pos += 1;
                Ok(Expr::Const(q))
            }
            Some(Token::Ident(name)) => {
                let at = self.offset();
                self.pos += 1;
                if self.eat('(') {
                    let Some(f) = Func::from_name(&name) else {
                        return Err(Error::Syntax {
                            position: at,
                            message: format!("unknown function `{name}`"),
                        });
                    };
                    let arg = self.expr()?;
                    if !self.eat(')') {
                        return self.error("expected `)`");
                    }
                    Ok(Expr::apply(f, arg))
                } else {
                    Ok(Expr::Var(name))
                }
            }
            Some(Token::Sym('(')) => {
                self.pos += 1;
                let inner = self.expr()?;
                if !self.eat(')') {
                    return self.error("expected `)`");
                }
                Ok(inner)
            }
            Some(_) => self.error("expected a number, variable or `(`"),
            None => self.error("unexpected end of input"),
        }
    }
}

/// Parses expression text; errors carry the byte offset of the offending token.
pub fn parse(text: &str) -> Result<Expr> {
    let mut p = Parser {
        tokens: tokenize(text)?,
        pos: 0,
        end: text.len(),
    };
    let e = p.expr()?;
    if p.pos != p.tokens.len() {
        return p.error("unexpected trailing input");
    }
    Ok(e)
}
