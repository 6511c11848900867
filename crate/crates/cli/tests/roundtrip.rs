//! Parse/render round-trip properties over the three evaluation contexts.

use proptest::prelude::*;

use skein_cli::eval::{evaluate, Value};
use skein_cli::expr::{parse, Context};
use skein_core::annulus::{AnnulusElement, Hook};
use skein_core::bracket::BracketElement;
use skein_core::coeff::{brace, RatFunc};
use skein_core::torus::{CurveClass, SkeinElement, Word};

fn arb_curve() -> impl Strategy<Value = CurveClass> {
    ((-3i64..=3), (-3i64..=3))
        .prop_filter("nonzero", |&(a, b)| (a, b) != (0, 0))
        .prop_map(|(a, b)| CurveClass::new(a, b).unwrap())
}

fn arb_coeff() -> impl Strategy<Value = RatFunc> {
    (-4i64..=4, -3i64..=3, 0i64..=4)
        .prop_filter("nonzero", |&(c, _, _)| c != 0)
        .prop_map(|(c, e, b)| {
            let base = RatFunc::from_int(c);
            let mono = RatFunc::monomial(e, 0);
            if b == 0 {
                &base * &mono
            } else {
                &(&base * &mono) + &brace(b)
            }
        })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn torus_render_parse_round_trip(
        words in proptest::collection::vec((proptest::collection::vec(arb_curve(), 0..3), arb_coeff()), 1..4)
    ) {
        let mut p = SkeinElement::zero();
        for (gens, c) in words {
            p = &p + &SkeinElement::from_word(Word::from_gens(gens), c);
        }
        let text = p.to_string();
        let ast = parse(&text).unwrap_or_else(|e| panic!("`{text}` failed to parse: {e}"));
        match evaluate(&ast, Context::Torus).unwrap().into_element(Context::Torus) {
            Value::Skein(q) => prop_assert_eq!(p, q),
            other => prop_assert!(false, "unexpected value {:?}", other),
        }
    }

    #[test]
    fn bracket_render_parse_round_trip(
        curves in proptest::collection::vec((arb_curve(), arb_coeff()), 1..4),
        unit in arb_coeff(),
    ) {
        let mut p = BracketElement::unit(unit);
        for (x, c) in curves {
            p = &p + &BracketElement::generator(x).scale(&c);
        }
        let text = p.to_string();
        let ast = parse(&text).unwrap_or_else(|e| panic!("`{text}` failed to parse: {e}"));
        match evaluate(&ast, Context::Bracket).unwrap().into_element(Context::Bracket) {
            Value::Bracket(q) => prop_assert_eq!(p, q),
            other => prop_assert!(false, "unexpected value {:?}", other),
        }
    }

    #[test]
    fn annulus_render_parse_round_trip(
        hooks in proptest::collection::vec(((0u32..4, 0u32..4), arb_coeff()), 1..4),
        unit in arb_coeff(),
    ) {
        let mut p = AnnulusElement::unit(unit);
        for ((arm, leg), c) in hooks {
            p = &p + &AnnulusElement::hook(Hook::new(arm, leg), c);
        }
        let text = p.to_string();
        let ast = parse(&text).unwrap_or_else(|e| panic!("`{text}` failed to parse: {e}"));
        match evaluate(&ast, Context::Annulus).unwrap().into_element(Context::Annulus) {
            Value::Annulus(q) => prop_assert_eq!(p, q),
            other => prop_assert!(false, "unexpected value {:?}", other),
        }
    }
}
