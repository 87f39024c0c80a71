use num::{BigInt, BigRational};
use proptest::prelude::*;

use quantcore::{CoeffMono, Coefficient, PhaseMono, PhasePoly, Scalar};
use quantlab::parse_poly;

fn rational() -> impl Strategy<Value = BigRational> {
    (-40i64..=40, 1i64..=12).prop_map(|(n, d)| BigRational::new(BigInt::from(n), BigInt::from(d)))
}

fn coeff() -> impl Strategy<Value = Coefficient> {
    prop::collection::vec((0u32..=3, 0u32..=3, 0u8..=1, rational(), rational()), 0..4).prop_map(|terms| {
        terms.into_iter().fold(Coefficient::zero(), |acc, (h, w, r, re, im)| {
            acc + Coefficient::term(Scalar::new(re, im), CoeffMono::new(h, w, r))
        })
    })
}

fn poly() -> impl Strategy<Value = PhasePoly> {
    prop::collection::vec(((0u32..=4, 0u32..=4, 0u32..=4, 0u32..=4), coeff()), 0..6)
        .prop_map(|t| PhasePoly::from_terms(t.into_iter().map(|((a, b, c, d), k)| (PhaseMono::new(a, b, c, d), k))))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(2_000))]

    #[test]
    fn render_then_parse_is_identity(f in poly()) {
        prop_assert_eq!(parse_poly(&f.to_string()).unwrap(), f);
    }

    #[test]
    fn rendering_is_stable(f in poly()) {
        prop_assert_eq!(f.to_string(), f.clone().to_string());
        prop_assert_eq!(parse_poly(&f.to_string()).unwrap().to_string(), f.to_string());
    }
}
