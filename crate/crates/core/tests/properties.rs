//! Property tests: field axioms for the coefficient field, well-definedness
//! of torus normal forms, and serialization round trips.

use num_rational::BigRational;
use proptest::prelude::*;

use skein_core::coeff::{LaurentPoly, RatFunc};
use skein_core::torus::{word_normal_form, CurveClass, RewriteStrategy, SkeinElement, Word};

fn arb_laurent() -> impl Strategy<Value = LaurentPoly> {
    proptest::collection::vec(((-3i64..=3, -2i64..=2), -5i64..=5), 0..5).prop_map(|terms| {
        let mut p = LaurentPoly::zero();
        for ((es, ev), c) in terms {
            p = &p + &LaurentPoly::monomial(BigRational::from_integer(c.into()), es, ev);
        }
        p
    })
}

fn arb_ratfunc() -> impl Strategy<Value = RatFunc> {
    (arb_laurent(), arb_laurent())
        .prop_filter("nonzero denominator", |(_, d)| !d.is_zero())
        .prop_map(|(n, d)| RatFunc::new(n, d).unwrap())
}

fn arb_curve() -> impl Strategy<Value = CurveClass> {
    ((-3i64..=3), (-3i64..=3))
        .prop_filter("nonzero", |&(a, b)| (a, b) != (0, 0))
        .prop_map(|(a, b)| CurveClass::new(a, b).unwrap())
}

fn arb_word(max_len: usize) -> impl Strategy<Value = Vec<CurveClass>> {
    proptest::collection::vec(arb_curve(), 0..=max_len)
}

fn eval_points() -> Vec<(BigRational, BigRational)> {
    [(2, 3), (3, 2), (5, 7), (2, 5), (7, 3)]
        .iter()
        .map(|&(s, v)| {
            (
                BigRational::from_integer(s.into()),
                BigRational::from_integer(v.into()),
            )
        })
        .collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn field_axioms(a in arb_ratfunc(), b in arb_ratfunc(), c in arb_ratfunc()) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert!((&a - &a).is_zero());
        if !a.is_zero() {
            prop_assert_eq!(&a * &a.inverse().unwrap(), RatFunc::one());
        }
    }

    #[test]
    fn structural_equality_agrees_with_evaluation(a in arb_ratfunc(), b in arb_ratfunc()) {
        // Canonical forms make equality decidable structurally; evaluation at
        // rational points must agree wherever both are defined.
        let equal = a == b;
        let mut disagreed = false;
        for (s0, v0) in eval_points() {
            match (a.eval(&s0, &v0), b.eval(&s0, &v0)) {
                (Ok(x), Ok(y)) => {
                    if x != y {
                        disagreed = true;
                    }
                }
                _ => continue,
            }
        }
        if equal {
            prop_assert!(!disagreed);
        }
        if disagreed {
            prop_assert!(!equal);
        }
    }

    #[test]
    fn bar_is_a_field_automorphism(a in arb_ratfunc(), b in arb_ratfunc()) {
        prop_assert_eq!((&a + &b).bar(), &a.bar() + &b.bar());
        prop_assert_eq!((&a * &b).bar(), &a.bar() * &b.bar());
        prop_assert_eq!(a.bar().bar(), a);
    }

    #[test]
    fn ratfunc_json_round_trip(a in arb_ratfunc()) {
        prop_assert_eq!(RatFunc::from_json(&a.to_json()).unwrap(), a);
    }

    #[test]
    fn normal_form_is_strategy_independent(w in arb_word(4)) {
        let l = word_normal_form(w.clone(), RatFunc::one(), RewriteStrategy::LeftmostFirst);
        let r = word_normal_form(w, RatFunc::one(), RewriteStrategy::RightmostFirst);
        prop_assert_eq!(l, r);
    }

    #[test]
    fn multiplication_is_associative(
        a in arb_word(2),
        b in arb_word(2),
        c in arb_word(2),
    ) {
        let p = SkeinElement::from_word(Word::from_gens(a), RatFunc::one());
        let q = SkeinElement::from_word(Word::from_gens(b), RatFunc::one());
        let r = SkeinElement::from_word(Word::from_gens(c), RatFunc::one());
        prop_assert_eq!(p.multiply(&q).multiply(&r), p.multiply(&q.multiply(&r)));
    }

    #[test]
    fn skein_json_round_trip(a in arb_word(3), b in arb_word(3)) {
        let p = &SkeinElement::from_word(Word::from_gens(a), RatFunc::one())
            + &SkeinElement::from_word(Word::from_gens(b), RatFunc::s());
        prop_assert_eq!(SkeinElement::from_json(&p.to_json()).unwrap(), p);
    }
}
