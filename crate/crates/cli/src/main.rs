//! `infcalc`: every procedure of the `infinitesimal` library behind one
//! command. Output is an envelope with the command, the parsed inputs, the
//! result and, for the stepwise procedures, a trace.

mod render;

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Map, Value};

use infinitesimal::rational::{format_decimal, format_rational, parse_rational, round_to_digits};
use infinitesimal::stevin::{self, RootBracket};
use infinitesimal::{
    cauchy, euler, expr, fermat, gregory, leibniz, Error, Expr, LcNumber, Rational, Settings,
};

#[derive(Parser, Debug)]
#[command(name = "infcalc", version, about = "Infinitesimal procedures on a truncated Levi-Civita field")]
struct Cli {
    /// Exponent slots kept above the leading term
    #[arg(long, global = true, default_value_t = infinitesimal::DEFAULT_WINDOW)]
    window: u32,
    /// Decimal places for transcendental values
    #[arg(long, global = true, default_value_t = infinitesimal::DEFAULT_PRECISION)]
    precision: u32,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    #[command(subcommand)]
    group: Group,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Subcommand, Debug)]
enum Group {
    /// Raw arithmetic on eps-series
    #[command(subcommand)]
    Core(CoreCmd),
    /// Adequality and the law of homogeneity
    #[command(subcommand)]
    Leibniz(LeibnizCmd),
    /// The five-step adequality procedure
    #[command(subcommand)]
    Fermat(FermatCmd),
    /// Limits at an infinite index and polygon quadrature
    #[command(subcommand)]
    Gregory(GregoryCmd),
    /// The binomial at an infinite power and the pentagonal identity
    #[command(subcommand)]
    Euler(EulerCmd),
    /// Continuity, derivative, curvature
    #[command(subcommand)]
    Cauchy(CauchyCmd),
    /// Decimal expansions and ten-way root extraction
    #[command(subcommand)]
    Stevin(StevinCmd),
}

#[derive(Args, Debug)]
struct One {
    /// A series such as `3 + 5*eps - eps^2`
    #[arg(long, allow_hyphen_values = true)]
    value: String,
}

#[derive(Args, Debug)]
struct Two {
    #[arg(long, allow_hyphen_values = true)]
    a: String,
    #[arg(long, allow_hyphen_values = true)]
    b: String,
}

#[derive(Subcommand, Debug)]
enum CoreCmd {
    /// Evaluate an expression; variables bound with `--bind x=3+eps`
    Eval {
        #[arg(long)]
        expr: String,
        #[arg(long = "bind", value_name = "NAME=SERIES")]
        bindings: Vec<String>,
    },
    /// Standard part
    St(One),
    /// Zero, infinitesimal, appreciable or infinite
    Classify(One),
    /// Order of two series
    Compare(Two),
    /// Leading exponent and coefficient
    Leading(One),
}

#[derive(Subcommand, Debug)]
enum LeibnizCmd {
    /// Difference infinitesimal?
    Adequal(Two),
    /// Ratio infinitely close to 1?
    Geq(Two),
    /// Drop the negligible part of a finite value
    Tlh(One),
    /// Leading monomial
    Dominant(One),
}

#[derive(Subcommand, Debug)]
enum FermatCmd {
    /// Run the five steps on a rational function
    Derive {
        #[arg(long)]
        expr: String,
        #[arg(long)]
        var: Option<String>,
    },
    /// Zeros of the adequality result on an interval
    Extremum {
        #[arg(long)]
        expr: String,
        #[arg(long)]
        var: Option<String>,
        #[arg(long, allow_hyphen_values = true)]
        lo: String,
        #[arg(long, allow_hyphen_values = true)]
        hi: String,
        #[arg(long, default_value_t = 6)]
        digits: u32,
    },
    /// Slope and subtangent of `y = f(x)`
    Subtangent {
        #[arg(long)]
        curve: String,
        #[arg(long, allow_hyphen_values = true)]
        at: String,
        #[arg(long)]
        var: Option<String>,
    },
}

#[derive(Subcommand, Debug)]
enum GregoryCmd {
    /// Standard part of the term at an infinite index
    Limit {
        #[arg(long)]
        term: String,
    },
    /// Double polygons around the unit circle until they agree
    Pi {
        #[arg(long, default_value = "1e-10")]
        tol: String,
    },
}

#[derive(Subcommand, Debug)]
enum EulerCmd {
    /// Coefficient of x^k in (1 + x/H)^H
    Exp {
        #[arg(long)]
        k: u32,
    },
    /// Product of (1 - x^m) against the pentagonal sum
    Pentagonal {
        #[arg(long, default_value_t = 40)]
        degree: usize,
    },
}

#[derive(Subcommand, Debug)]
enum CauchyCmd {
    /// Is the increment at each point infinitesimal?
    Continuity {
        #[arg(long)]
        expr: String,
        /// Sample points, repeated or comma separated
        #[arg(long, required = true, value_delimiter = ',', allow_hyphen_values = true)]
        at: Vec<String>,
        #[arg(long)]
        var: Option<String>,
    },
    /// Standard part of the difference quotient
    Derive {
        #[arg(long)]
        expr: String,
        #[arg(long, allow_hyphen_values = true)]
        at: String,
        #[arg(long)]
        var: Option<String>,
    },
    /// Meet of two infinitely close normals
    Curvature {
        #[arg(long)]
        expr: String,
        #[arg(long, allow_hyphen_values = true)]
        at: String,
        #[arg(long)]
        var: Option<String>,
    },
}

#[derive(Subcommand, Debug)]
enum StevinCmd {
    /// Digits of a root of a polynomial changing sign on [lo, hi]
    Root {
        #[arg(long)]
        poly: String,
        #[arg(long, allow_hyphen_values = true)]
        lo: String,
        #[arg(long, allow_hyphen_values = true)]
        hi: String,
        #[arg(long, default_value_t = 10)]
        digits: u32,
        #[arg(long)]
        var: Option<String>,
    },
    /// Compare two decimals, `0.(9)` style tails allowed
    DecimalEq(Two),
    /// Truncated decimal expansion of a rational
    Expand {
        #[arg(long, allow_hyphen_values = true)]
        value: String,
        #[arg(long, default_value_t = 10)]
        digits: u32,
    },
}

/// What a command produced before it is wrapped.
struct Outcome {
    result: Value,
    trace: Option<Value>,
    /// Set when the command recorded partial results and still failed.
    error: Option<Error>,
}

impl From<Value> for Outcome {
    fn from(result: Value) -> Self {
        Outcome { result, trace: None, error: None }
    }
}

fn q(x: &Rational) -> Value {
    Value::String(format_rational(x))
}

fn s<T: ToString>(x: T) -> Value {
    Value::String(x.to_string())
}

fn lc(text: &str, settings: &Settings) -> Result<LcNumber, Error> {
    LcNumber::parse_with_window(text, settings.window)
}

fn rational(text: &str) -> Result<Rational, Error> {
    parse_rational(text)
}

fn var_of(e: &Expr, given: &Option<String>, default: &str) -> Result<String, Error> {
    match given {
        Some(v) => Ok(v.clone()),
        None => e.sole_variable(default),
    }
}

/// Accepts `f(x)` or `y = f(x)`.
fn curve_rhs(text: &str) -> &str {
    match text.split_once('=') {
        Some((lhs, rhs)) if lhs.trim() == "y" => rhs,
        _ => text,
    }
}

/// Exact values as `p/q`; values that went through a transcendental
/// function as decimals at the working precision.
fn number(x: &Rational, exact: bool, settings: &Settings) -> Value {
    if exact {
        q(x)
    } else {
        s(format_decimal(&round_to_digits(x, settings.precision), settings.precision))
    }
}

fn core(cmd: &CoreCmd, settings: &Settings, inputs: &mut Map<String, Value>) -> Result<Outcome, Error> {
    Ok(match cmd {
        CoreCmd::Eval { expr: text, bindings } => {
            inputs.insert("expr".into(), s(text));
            inputs.insert("bind".into(), json!(bindings));
            let e = expr::parse(text)?;
            let mut env = infinitesimal::Bindings::new();
            for b in bindings {
                let (name, value) = b
                    .split_once('=')
                    .ok_or_else(|| Error::InvalidArgument(format!("expected NAME=SERIES, got `{b}`")))?;
                env.insert(name.trim().to_string(), lc(value, settings)?);
            }
            let v = e.eval_lc(&env, settings)?;
            json!({ "value": s(&v), "exact": v.is_exact() }).into()
        }
        CoreCmd::St(One { value }) => {
            inputs.insert("value".into(), s(value));
            json!({ "standard_part": q(&lc(value, settings)?.standard_part()?) }).into()
        }
        CoreCmd::Classify(One { value }) => {
            inputs.insert("value".into(), s(value));
            let c = lc(value, settings)?.classify()?;
            json!({ "tag": c.tag.as_str(), "assignable": c.assignable }).into()
        }
        CoreCmd::Compare(Two { a, b }) => {
            inputs.insert("a".into(), s(a));
            inputs.insert("b".into(), s(b));
            let ord = lc(a, settings)?.compare(&lc(b, settings)?)?;
            let name = match ord {
                std::cmp::Ordering::Less => "LT",
                std::cmp::Ordering::Equal => "EQ",
                std::cmp::Ordering::Greater => "GT",
            };
            json!({ "ordering": name }).into()
        }
        CoreCmd::Leading(One { value }) => {
            inputs.insert("value".into(), s(value));
            let (exponent, coefficient) = lc(value, settings)?.leading_term()?;
            json!({ "exponent": s(exponent), "coefficient": q(&coefficient) }).into()
        }
    })
}

fn verdict(v: &leibniz::ComparisonVerdict) -> Value {
    json!({
        "arithmetic": v.arithmetic_equal,
        "geometric": v.geometric_equal,
        "witness": s(&v.witness),
    })
}

fn leibniz_cmd(cmd: &LeibnizCmd, settings: &Settings, inputs: &mut Map<String, Value>) -> Result<Outcome, Error> {
    Ok(match cmd {
        LeibnizCmd::Adequal(Two { a, b }) | LeibnizCmd::Geq(Two { a, b }) => {
            inputs.insert("a".into(), s(a));
            inputs.insert("b".into(), s(b));
            let (a, b) = (lc(a, settings)?, lc(b, settings)?);
            let v = match cmd {
                LeibnizCmd::Adequal(_) => leibniz::compare_arithmetic(&a, &b),
                _ => leibniz::compare_geometric(&a, &b)?,
            };
            verdict(&v).into()
        }
        LeibnizCmd::Tlh(One { value }) => {
            inputs.insert("value".into(), s(value));
            json!({ "value": q(&leibniz::tlh(&lc(value, settings)?)?) }).into()
        }
        LeibnizCmd::Dominant(One { value }) => {
            inputs.insert("value".into(), s(value));
            json!({ "dominant": s(leibniz::dominant_part(&lc(value, settings)?)?) }).into()
        }
    })
}

fn trace_steps(t: &fermat::AdequalityTrace) -> Value {
    Value::Array(
        t.steps()
            .into_iter()
            .map(|(step, value)| json!({ "step": step, "value": value }))
            .collect(),
    )
}

fn fermat_cmd(cmd: &FermatCmd, settings: &Settings, inputs: &mut Map<String, Value>) -> Result<Outcome, Error> {
    Ok(match cmd {
        FermatCmd::Derive { expr: text, var } => {
            inputs.insert("expr".into(), s(text));
            let e = expr::parse(text)?;
            let var = var_of(&e, var, "A")?;
            inputs.insert("var".into(), s(&var));
            let (trace, d) = fermat::adequality_derivative(&e, &var, settings)?;
            Outcome {
                result: json!({ "suppressed": s(d), "divided_power": trace.divided_power }),
                trace: Some(trace_steps(&trace)),
                error: None,
            }
        }
        FermatCmd::Extremum { expr: text, var, lo, hi, digits } => {
            inputs.insert("expr".into(), s(text));
            inputs.insert("lo".into(), s(lo));
            inputs.insert("hi".into(), s(hi));
            inputs.insert("digits".into(), s(digits));
            let e = expr::parse(text)?;
            let var = var_of(&e, var, "A")?;
            inputs.insert("var".into(), s(&var));
            let (lo, hi) = (rational(lo)?, rational(hi)?);
            let (trace, _) = fermat::adequality_derivative(&e, &var, settings)?;
            let roots = fermat::extremum_candidates(&e, &var, &lo, &hi, *digits, settings)?;
            Outcome {
                result: json!({ "candidates": roots.iter().map(s).collect::<Vec<_>>() }),
                trace: Some(trace_steps(&trace)),
                error: None,
            }
        }
        FermatCmd::Subtangent { curve, at, var } => {
            inputs.insert("curve".into(), s(curve));
            inputs.insert("at".into(), s(at));
            let e = expr::parse(curve_rhs(curve))?;
            let var = var_of(&e, var, "x")?;
            inputs.insert("var".into(), s(&var));
            let t = fermat::subtangent(&e, &var, &rational(at)?, settings)?;
            json!({
                "point": { "x": q(&t.point.0), "y": q(&t.point.1) },
                "slope": q(&t.slope),
                "r": q(&t.subtangent_r),
                "axis_subtangent": q(&t.axis_subtangent),
            })
            .into()
        }
    })
}

fn gregory_cmd(cmd: &GregoryCmd, settings: &Settings, inputs: &mut Map<String, Value>) -> Result<Outcome, Error> {
    Ok(match cmd {
        GregoryCmd::Limit { term } => {
            inputs.insert("term".into(), s(term));
            let e = expr::parse(term)?;
            let r = gregory::terminate_symbolic(&e, settings)?;
            let at_h = r.value_at_infinite_index.as_ref().map(s).unwrap_or(Value::Null);
            json!({
                "limit": number(&r.limit, e.is_algebraic(), settings),
                "mode": r.mode.as_str(),
                "value_at_infinite_index": at_h,
            })
            .into()
        }
        GregoryCmd::Pi { tol } => {
            inputs.insert("tol".into(), s(tol));
            let p = settings.precision;
            let r = gregory::terminate_polygon(&rational(tol)?, p)?;
            let (lo, hi) = r.certificate.clone().expect("polygon mode has a certificate");
            let states = gregory::polygon_states(r.iterations, p);
            let trace = states
                .iter()
                .map(|st| {
                    json!({
                        "sides": s(st.sides),
                        "inscribed": s(format_decimal(&st.inscribed, p)),
                        "circumscribed": s(format_decimal(&st.circumscribed, p)),
                    })
                })
                .collect();
            Outcome {
                result: json!({
                    "limit": s(format_decimal(&r.limit, p + 1)),
                    "mode": r.mode.as_str(),
                    "iterations": r.iterations,
                    "certificate": {
                        "inscribed": s(format_decimal(&lo, p)),
                        "circumscribed": s(format_decimal(&hi, p)),
                    },
                }),
                trace: Some(Value::Array(trace)),
                error: None,
            }
        }
    })
}

fn euler_cmd(cmd: &EulerCmd, settings: &Settings, inputs: &mut Map<String, Value>) -> Result<Outcome, Error> {
    Ok(match cmd {
        EulerCmd::Exp { k } => {
            inputs.insert("k".into(), s(k));
            let r = euler::exp_coeff_via_infinite_binomial(*k, settings.window)?;
            json!({ "k": r.k, "lc_value": s(&r.lc_value), "coefficient": q(&r.coefficient) }).into()
        }
        EulerCmd::Pentagonal { degree } => {
            inputs.insert("degree".into(), s(degree));
            let r = euler::pentagonal_check(*degree);
            json!({
                "degree": r.degree,
                "lhs": r.lhs.iter().map(s).collect::<Vec<_>>(),
                "rhs": r.rhs.iter().map(s).collect::<Vec<_>>(),
                "mismatches": r.mismatches,
            })
            .into()
        }
    })
}

fn error_value(e: &Error) -> Value {
    json!({ "code": e.code(), "message": e.to_string() })
}

fn cauchy_cmd(cmd: &CauchyCmd, settings: &Settings, inputs: &mut Map<String, Value>) -> Result<Outcome, Error> {
    Ok(match cmd {
        CauchyCmd::Continuity { expr: text, at, var } => {
            inputs.insert("expr".into(), s(text));
            inputs.insert("at".into(), json!(at));
            let e = expr::parse(text)?;
            let var = var_of(&e, var, "x")?;
            inputs.insert("var".into(), s(&var));
            let points = at.iter().map(|a| rational(a)).collect::<Result<Vec<_>, _>>()?;
            let mut first_error = None;
            let rows = cauchy::continuity_sweep(&e, &var, &points, settings)
                .into_iter()
                .zip(&points)
                .map(|(r, x)| match r {
                    Ok(v) => json!({
                        "at": q(x),
                        "continuous": v.continuous,
                        "increment": s(&v.increment),
                        "classification": v.classification.as_str(),
                    }),
                    Err(err) => {
                        let row = json!({ "at": q(x), "error": error_value(&err) });
                        first_error.get_or_insert(err);
                        row
                    }
                })
                .collect::<Vec<_>>();
            Outcome {
                result: json!({ "points": rows }),
                trace: None,
                error: first_error,
            }
        }
        CauchyCmd::Derive { expr: text, at, var } => {
            inputs.insert("expr".into(), s(text));
            inputs.insert("at".into(), s(at));
            let e = expr::parse(text)?;
            let var = var_of(&e, var, "x")?;
            inputs.insert("var".into(), s(&var));
            let d = cauchy::derivative(&e, &var, &rational(at)?, settings)?;
            json!({ "derivative": number(&d, e.is_algebraic(), settings) }).into()
        }
        CauchyCmd::Curvature { expr: text, at, var } => {
            inputs.insert("expr".into(), s(text));
            inputs.insert("at".into(), s(at));
            let e = expr::parse(curve_rhs(text))?;
            let var = var_of(&e, var, "x")?;
            inputs.insert("var".into(), s(&var));
            let c = cauchy::curvature_center(&e, &var, &rational(at)?, settings)?;
            let exact = e.is_algebraic();
            json!({
                "center": {
                    "x": number(&c.center.0, exact, settings),
                    "y": number(&c.center.1, exact, settings),
                },
                "radius": s(format_decimal(&c.radius, settings.precision)),
            })
            .into()
        }
    })
}

fn stevin_cmd(cmd: &StevinCmd, _settings: &Settings, inputs: &mut Map<String, Value>) -> Result<Outcome, Error> {
    Ok(match cmd {
        StevinCmd::Root { poly, lo, hi, digits, var } => {
            inputs.insert("poly".into(), s(poly));
            inputs.insert("lo".into(), s(lo));
            inputs.insert("hi".into(), s(hi));
            inputs.insert("digits".into(), s(digits));
            let e = expr::parse(poly)?;
            let var = var_of(&e, var, "x")?;
            inputs.insert("var".into(), s(&var));
            let bracket = RootBracket::new(rational(lo)?, rational(hi)?)?;
            let r = stevin::root_digits_expr(&e, &var, &bracket, *digits)?;
            json!({ "root": s(&r), "terminating": r.terminating }).into()
        }
        StevinCmd::DecimalEq(Two { a, b }) => {
            inputs.insert("a".into(), s(a));
            inputs.insert("b".into(), s(b));
            json!({ "equal": stevin::decimal_equal_text(a, b)? }).into()
        }
        StevinCmd::Expand { value, digits } => {
            inputs.insert("value".into(), s(value));
            inputs.insert("digits".into(), s(digits));
            let r = stevin::from_rational(&rational(value)?, *digits);
            json!({ "decimal": s(&r), "terminating": r.terminating }).into()
        }
    })
}

fn command_name(group: &Group) -> String {
    let (g, c) = match group {
        Group::Core(c) => ("core", format!("{c:?}")),
        Group::Leibniz(c) => ("leibniz", format!("{c:?}")),
        Group::Fermat(c) => ("fermat", format!("{c:?}")),
        Group::Gregory(c) => ("gregory", format!("{c:?}")),
        Group::Euler(c) => ("euler", format!("{c:?}")),
        Group::Cauchy(c) => ("cauchy", format!("{c:?}")),
        Group::Stevin(c) => ("stevin", format!("{c:?}")),
    };
    let variant: String = c.chars().take_while(|ch| ch.is_alphanumeric()).collect();
    let mut kebab = String::new();
    for (i, ch) in variant.chars().enumerate() {
        if ch.is_uppercase() && i > 0 {
            kebab.push('-');
        }
        kebab.push(ch.to_ascii_lowercase());
    }
    format!("{g} {kebab}")
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    let settings = Settings::new(cli.window, cli.precision);
    let mut inputs = Map::new();
    inputs.insert("window".into(), s(settings.window));
    inputs.insert("precision".into(), s(settings.precision));
    let outcome = match &cli.group {
        Group::Core(c) => core(c, &settings, &mut inputs),
        Group::Leibniz(c) => leibniz_cmd(c, &settings, &mut inputs),
        Group::Fermat(c) => fermat_cmd(c, &settings, &mut inputs),
        Group::Gregory(c) => gregory_cmd(c, &settings, &mut inputs),
        Group::Euler(c) => euler_cmd(c, &settings, &mut inputs),
        Group::Cauchy(c) => cauchy_cmd(c, &settings, &mut inputs),
        Group::Stevin(c) => stevin_cmd(c, &settings, &mut inputs),
    };
    let mut envelope = Map::new();
    envelope.insert("command".into(), s(command_name(&cli.group)));
    envelope.insert("inputs".into(), Value::Object(inputs));
    let failed = match outcome {
        Ok(o) => {
            envelope.insert("result".into(), o.result);
            if let Some(t) = o.trace {
                envelope.insert("trace".into(), t);
            }
            match o.error {
                Some(e) => {
                    envelope.insert("status".into(), s("error"));
                    envelope.insert("error".into(), error_value(&e));
                    true
                }
                None => {
                    envelope.insert("status".into(), s("ok"));
                    false
                }
            }
        }
        Err(e) => {
            envelope.insert("status".into(), s("error"));
            envelope.insert("error".into(), error_value(&e));
            true
        }
    };
    let envelope = Value::Object(envelope);
    match cli.format {
        Format::Json => println!("{}", serde_json::to_string_pretty(&envelope).expect("plain JSON values")),
        Format::Text => print!("{}", render::text(&envelope)),
    }
    ExitCode::from(if failed { 1 } else { 0 })
}
