//! Property tests: the scalars form a field and canonicalization is stable
//! under arithmetic and display round trips.

use hopfmod::scalar::{Poly, Scalar};
use num::BigRational;
use proptest::prelude::*;

fn poly_strategy() -> impl Strategy<Value = Poly> {
    prop::collection::vec(-4i64..=4, 1..=3).prop_map(|coeffs| {
        Poly::from_coeffs(
            coeffs
                .into_iter()
                .map(|c| BigRational::from_integer(c.into()))
                .collect(),
        )
    })
}

fn scalar_strategy() -> impl Strategy<Value = Scalar> {
    (poly_strategy(), poly_strategy())
        .prop_filter("nonzero denominator", |(_, d)| !d.is_zero())
        .prop_map(|(n, d)| Scalar::new(n, d))
}

proptest! {
    #[test]
    fn addition_commutes(a in scalar_strategy(), b in scalar_strategy()) {
        prop_assert_eq!(&a + &b, &b + &a);
    }

    #[test]
    fn multiplication_commutes(a in scalar_strategy(), b in scalar_strategy()) {
        prop_assert_eq!(&a * &b, &b * &a);
    }

    #[test]
    fn addition_associates(
        a in scalar_strategy(),
        b in scalar_strategy(),
        c in scalar_strategy(),
    ) {
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
    }

    #[test]
    fn multiplication_associates(
        a in scalar_strategy(),
        b in scalar_strategy(),
        c in scalar_strategy(),
    ) {
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
    }

    #[test]
    fn distributivity(
        a in scalar_strategy(),
        b in scalar_strategy(),
        c in scalar_strategy(),
    ) {
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
    }

    #[test]
    fn additive_inverse(a in scalar_strategy()) {
        let neg = &Scalar::zero() - &a;
        prop_assert!((&a + &neg).is_zero());
    }

    #[test]
    fn multiplicative_inverse(a in scalar_strategy()) {
        if !a.is_zero() {
            let inv = a.inv().unwrap();
            prop_assert!((&a * &inv).is_one());
        }
    }

    #[test]
    fn units_behave(a in scalar_strategy()) {
        prop_assert_eq!(&a + &Scalar::zero(), a.clone());
        prop_assert_eq!(&a * &Scalar::one(), a.clone());
        prop_assert!((&a * &Scalar::zero()).is_zero());
    }

    /// Canonical form: equal values are structurally equal, so building the
    /// same value from unreduced data collapses to one representation.
    #[test]
    fn canonicalization_is_stable(a in scalar_strategy(), m in poly_strategy()) {
        if !m.is_zero() {
            let blown = Scalar::new(a.numerator().mul(&m), a.denominator().mul(&m));
            prop_assert_eq!(&blown, &a);
        }
    }

    #[test]
    fn display_parse_roundtrip(a in scalar_strategy()) {
        let text = a.to_string();
        let back = Scalar::parse(&text).unwrap();
        prop_assert_eq!(back, a);
    }
}

#[test]
fn parse_rejects_double_slash() {
    assert!(Scalar::parse("1//2").is_err());
}

#[test]
fn parse_accepts_rational_functions() {
    let a = Scalar::parse("(q^2 - 1)/(q - 1)").unwrap();
    let b = Scalar::parse("q + 1").unwrap();
    assert_eq!(a, b);
}
