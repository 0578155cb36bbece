use infinitesimal::expr::parse;
use infinitesimal::rational::{pow10, ratio};
use infinitesimal::{Bindings, Expr, Func, LcNumber, Rational, Settings};
use num_traits::Signed;
use proptest::prelude::*;

fn constant() -> impl Strategy<Value = Expr> {
    (0i64..=20, 1i64..=6).prop_map(|(p, q)| Expr::Const(ratio(p, q)))
}

fn tree(vars: &'static [&'static str], funcs: bool) -> impl Strategy<Value = Expr> {
    let leaf = prop_oneof![
        constant(),
        prop::sample::select(vars).prop_map(Expr::var),
    ];
    leaf.prop_recursive(6, 48, 2, move |inner| {
        let b = |e: Expr| Box::new(e);
        let mut options = vec![
            inner.clone().prop_map(move |a| Expr::Neg(b(a))).boxed(),
            (inner.clone(), inner.clone()).prop_map(move |(x, y)| Expr::Add(b(x), b(y))).boxed(),
            (inner.clone(), inner.clone()).prop_map(move |(x, y)| Expr::Sub(b(x), b(y))).boxed(),
            (inner.clone(), inner.clone()).prop_map(move |(x, y)| Expr::Mul(b(x), b(y))).boxed(),
            (inner.clone(), inner.clone()).prop_map(move |(x, y)| Expr::Div(b(x), b(y))).boxed(),
            (inner.clone(), -3i64..=3).prop_map(move |(x, n)| Expr::Pow(b(x), n)).boxed(),
        ];
        if funcs {
            options.push(
                (prop::sample::select(Func::ALL.to_vec()), inner)
                    .prop_map(move |(f, x)| Expr::Apply(f, b(x)))
                    .boxed(),
            );
        }
        prop::strategy::Union::new(options)
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn parse_render_round_trip(e in tree(&["x", "y", "n"], true)) {
        let text = e.to_string();
        prop_assert_eq!(parse(&text).unwrap(), e, "rendered as {}", text);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn transfer_on_rational_trees(
        e in tree(&["x", "y"], false),
        x in (-9i64..=9, 1i64..=5),
        y in (-9i64..=9, 1i64..=5),
    ) {
        let s = Settings::default();
        let (x, y) = (ratio(x.0, x.1), ratio(y.0, y.1));
        let real: Bindings<Rational> = [("x".to_string(), x.clone()), ("y".to_string(), y.clone())].into();
        let lc: Bindings<LcNumber> = [
            ("x".to_string(), LcNumber::from_rational(x, s.window)),
            ("y".to_string(), LcNumber::from_rational(y, s.window)),
        ]
        .into();
        match (e.eval_real(&real, &s), e.eval_lc(&lc, &s)) {
            (Ok(r), Ok(l)) => {
                prop_assert!(l.is_exact());
                prop_assert_eq!(l, LcNumber::from_rational(r, s.window));
            }
            (Err(a), Err(b)) => prop_assert_eq!(a.code(), b.code()),
            (a, b) => prop_assert!(false, "real {:?} vs lc {:?}", a, b),
        }
    }
}

#[test]
fn taylor_consistency() {
    let s = Settings::new(6, 30);
    let tolerance = Rational::new(1.into(), pow10(s.precision - 2));
    for i in 1..=50i64 {
        // interior points of every domain: 0.07 .. 3.5
        let x = ratio(7 * i, 100);
        for f in Func::ALL {
            let e = Expr::apply(f, Expr::var("x"));
            let real = e.eval_real_at("x", &x, &s).unwrap();
            let shifted = LcNumber::from_rational(x.clone(), s.window) + LcNumber::eps(s.window);
            let st = e.eval_lc_at("x", &shifted, &s).unwrap().standard_part().unwrap();
            assert!((&st - &real).abs() <= tolerance, "{f:?} at {x}");
        }
    }
}

#[test]
fn infinite_arguments() {
    let s = Settings::default();
    let h = LcNumber::infinite_unit(s.window);
    let e = parse("(x^2 + 1)/(2*x^2 - x)").unwrap();
    let v = e.eval_lc_at("x", &h, &s).unwrap();
    assert_eq!(v.standard_part().unwrap(), ratio(1, 2));
    assert!(parse("exp(x)").unwrap().eval_lc_at("x", &h, &s).is_err());
}
