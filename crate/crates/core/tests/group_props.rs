//! Property tests for the unit-sequence group and its operators.

use motzkin_core::scalar::{rat, ratio, ExactScalar};
use motzkin_core::transform::{
    binomial_interp, binomial_interp_via_group, bullet, epsilon, eta, gamma,
    invert_interp, invert_interp_via_group, lambda_embed, lambda_extract,
    UnitSequence,
};
use num_traits::One;
use proptest::prelude::*;

fn unit_sequence_of(len: usize) -> impl Strategy<Value = UnitSequence> {
    prop::collection::vec((-6i64..=6, 1i64..=3), len).prop_map(|v| {
        let mut terms: Vec<ExactScalar> =
            v.into_iter().map(|(p, q)| ratio(p, q)).collect();
        terms[0] = ExactScalar::one();
        UnitSequence::new(terms).expect("starts with one")
    })
}

fn small_rational() -> impl Strategy<Value = ExactScalar> {
    (-5i64..=5, 1i64..=3).prop_map(|(p, q)| ratio(p, q))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn lambda_is_a_bijection(a in unit_sequence_of(7)) {
        prop_assert_eq!(lambda_extract(&lambda_embed(&a)).unwrap(), a);
    }

    #[test]
    fn bullet_associates(
        a in unit_sequence_of(7),
        b in unit_sequence_of(7),
        c in unit_sequence_of(7),
    ) {
        let lhs = bullet(&bullet(&a, &b).unwrap(), &c).unwrap();
        let rhs = bullet(&a, &bullet(&b, &c).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn eta_gives_two_sided_inverses(a in unit_sequence_of(8)) {
        let e = UnitSequence::identity(8);
        let inv = eta(&a);
        prop_assert_eq!(bullet(&a, &inv).unwrap(), e.clone());
        prop_assert_eq!(bullet(&inv, &a).unwrap(), e);
    }

    #[test]
    fn eta_reverses_products(a in unit_sequence_of(7), b in unit_sequence_of(7)) {
        let lhs = eta(&bullet(&a, &b).unwrap());
        let rhs = bullet(&eta(&b), &eta(&a)).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn epsilon_is_an_automorphism(
        a in unit_sequence_of(7),
        b in unit_sequence_of(7),
    ) {
        let lhs = epsilon(&bullet(&a, &b).unwrap());
        let rhs = bullet(&epsilon(&a), &epsilon(&b)).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn involutions_compose_to_gamma(a in unit_sequence_of(7)) {
        prop_assert_eq!(eta(&epsilon(&a)), gamma(&a));
        prop_assert_eq!(gamma(&gamma(&a)), a);
    }

    #[test]
    fn invert_implementations_agree(
        a in unit_sequence_of(8),
        x in small_rational(),
    ) {
        prop_assert_eq!(
            invert_interp(&a, &x),
            invert_interp_via_group(&a, &x)
        );
    }

    #[test]
    fn binomial_implementations_agree(
        a in unit_sequence_of(8),
        y in small_rational(),
    ) {
        prop_assert_eq!(
            binomial_interp(&a, &y),
            binomial_interp_via_group(&a, &y)
        );
    }

    #[test]
    fn invert_is_a_group_action(
        a in unit_sequence_of(7),
        x in small_rational(),
        y in small_rational(),
    ) {
        let stacked = invert_interp(&invert_interp(&a, &x), &y);
        prop_assert_eq!(stacked, invert_interp(&a, &(&x + &y)));
        prop_assert_eq!(invert_interp(&a, &rat(0)), a);
    }

    #[test]
    fn binomial_is_a_group_action(
        a in unit_sequence_of(7),
        x in small_rational(),
        y in small_rational(),
    ) {
        let stacked = binomial_interp(&binomial_interp(&a, &x), &y);
        prop_assert_eq!(stacked, binomial_interp(&a, &(&x + &y)));
        prop_assert_eq!(binomial_interp(&a, &rat(0)), a);
    }

    #[test]
    fn actions_commute(
        a in unit_sequence_of(7),
        x in small_rational(),
        y in small_rational(),
    ) {
        let lhs = invert_interp(&binomial_interp(&a, &y), &x);
        let rhs = binomial_interp(&invert_interp(&a, &x), &y);
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn eta_conjugates_the_actions(
        a in unit_sequence_of(7),
        x in small_rational(),
    ) {
        let lhs = eta(&invert_interp(&a, &x));
        let rhs = binomial_interp(&eta(&a), &-&x);
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn gamma_swaps_the_actions(
        a in unit_sequence_of(7),
        x in small_rational(),
    ) {
        prop_assert_eq!(
            gamma(&invert_interp(&a, &x)),
            binomial_interp(&gamma(&a), &x)
        );
        prop_assert_eq!(
            gamma(&binomial_interp(&a, &x)),
            invert_interp(&gamma(&a), &x)
        );
    }

    #[test]
    fn geometric_sequences_are_a_subgroup(
        x in small_rational(),
        y in small_rational(),
    ) {
        let gx = UnitSequence::geometric(&x, 8);
        let gy = UnitSequence::geometric(&y, 8);
        prop_assert_eq!(
            bullet(&gx, &gy).unwrap(),
            UnitSequence::geometric(&(&x + &y), 8)
        );
        prop_assert_eq!(eta(&gx), UnitSequence::geometric(&-&x, 8));
    }
}
