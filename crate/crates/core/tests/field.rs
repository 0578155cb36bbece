use std::cmp::Ordering;

use infinitesimal::rational::{int, ratio};
use infinitesimal::{Error, LcNumber, Rational, Tag};
use num_traits::Zero;
use proptest::prelude::*;

const W: u32 = 16;

fn rational() -> impl Strategy<Value = Rational> {
    (-50i64..=50, 1i64..=12).prop_map(|(p, q)| ratio(p, q))
}

/// Exact values with exponents in `[lo, hi]`.
fn lc_in(lo: i64, hi: i64) -> impl Strategy<Value = LcNumber> {
    prop::collection::vec((lo..=hi, rational()), 0..5)
        .prop_map(|terms| LcNumber::from_terms(terms, W))
}

fn lc() -> impl Strategy<Value = LcNumber> {
    lc_in(-(W as i64) / 3, W as i64 / 3)
}

fn finite() -> impl Strategy<Value = LcNumber> {
    lc_in(0, 5)
}

fn terms(x: &LcNumber) -> Vec<(i64, Rational)> {
    x.terms().map(|(e, c)| (e, c.clone())).collect()
}

proptest! {
    #[test]
    fn ring_laws(a in lc(), b in lc(), c in lc()) {
        prop_assert_eq!(terms(&((&a + &b) + &c)), terms(&(&a + (&b + &c))));
        prop_assert_eq!(terms(&(&a * &b)), terms(&(&b * &a)));
        let lhs = &a * (&b + &c);
        let rhs = &a * &b + &a * &c;
        // both sides keep W slots; compare where both are known
        let known = lhs.horizon().unwrap_or(i64::MAX).min(rhs.horizon().unwrap_or(i64::MAX));
        let cut = |x: &LcNumber| terms(x).into_iter().filter(|(e, _)| *e < known).collect::<Vec<_>>();
        prop_assert_eq!(cut(&lhs), cut(&rhs));
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert!((&a - &a).is_zero());
    }

    #[test]
    fn order_is_compatible(a in lc(), b in lc(), c in lc()) {
        let ab = a.compare(&b).unwrap();
        prop_assert_eq!(b.compare(&a).unwrap(), ab.reverse());
        prop_assert_eq!((&a + &c).compare(&(&b + &c)).unwrap(), ab);
        if c.compare(&LcNumber::zero(W)).unwrap() == Ordering::Greater {
            prop_assert_eq!((&a * &c).compare(&(&b * &c)).unwrap(), ab);
        }
    }

    #[test]
    fn standard_part_is_a_homomorphism(a in finite(), b in finite()) {
        let (sa, sb) = (a.standard_part().unwrap(), b.standard_part().unwrap());
        prop_assert_eq!((&a + &b).standard_part().unwrap(), &sa + &sb);
        prop_assert_eq!((&a * &b).standard_part().unwrap(), sa * sb);
    }

    #[test]
    fn inverse_agrees_with_one(a in lc()) {
        prop_assume!(!a.is_zero());
        let lead = a.leading_exponent().unwrap();
        let product = &a * &a.inv().unwrap();
        let upto = lead + W as i64 - lead.abs();
        for (e, c) in product.terms() {
            if e <= upto {
                let want = if e == 0 { int(1) } else { Rational::zero() };
                prop_assert_eq!(c.clone(), want, "exponent {}", e);
            }
        }
        prop_assert_eq!(product.coeff(0), int(1));
        prop_assert_eq!(product.leading_exponent(), Some(0));
    }
}

#[test]
fn archimedean_property_fails() {
    let eps = LcNumber::eps(W);
    let one = LcNumber::one(W);
    assert_eq!(eps.compare(&LcNumber::zero(W)), Ok(Ordering::Greater));
    let mut n: u64 = 1;
    while n <= 1_000_000 {
        for k in [n, n + 1, 2 * n, 5 * n] {
            if k <= 1_000_000 {
                let multiple = eps.scale(&Rational::from_integer(k.into()));
                assert_eq!(multiple.compare(&one), Ok(Ordering::Less), "{k} eps");
            }
        }
        n *= 10;
    }
}

#[test]
fn inexact_cancellation_is_refused() {
    let w = 3;
    let a = LcNumber::parse_with_window("1 - eps", w).unwrap().inv().unwrap();
    let b = a.clone();
    let d = &a - &b;
    assert!(d.is_zero() && !d.is_exact());
    assert_eq!(d.compare(&LcNumber::zero(w)), Err(Error::IndeterminateOrder));
    assert_eq!(d.classify().unwrap().tag, Tag::Infinitesimal);
}
