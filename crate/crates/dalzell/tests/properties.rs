//! Randomized invariants: field axioms and normalization of the rational
//! type, decimal round-trips, the division identity behind the integral
//! evaluation, classification locks, and the 2× scaling lock.

use dalzell::bounds::{dalzell_bounds, johnsonbaugh_bounds, partial_sum, SeriesKind};
use dalzell::exactnum::{parse_decimal, pow10, rat_int, to_decimal, ExactRational};
use dalzell::integral::{
    classify, dalzell_integral, divide_by_circle, expand_integrand, BackhouseClass, Polynomial,
};
use num::bigint::BigInt;
use num::integer::Integer;
use num::rational::BigRational;
use num::{One, Signed, Zero};
use proptest::prelude::*;

fn arb_rational() -> impl Strategy<Value = ExactRational> {
    (any::<i32>(), 1..1_000_000i64, any::<bool>()).prop_map(|(num, den, flip)| {
        let den = if flip { -den } else { den };
        BigRational::new(BigInt::from(num), BigInt::from(den))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn field_axioms(a in arb_rational(), b in arb_rational(), c in arb_rational()) {
        prop_assert_eq!((&a + &b) + &c, &a + (&b + &c));
        prop_assert_eq!(&a * (&b + &c), &a * &b + &a * &c);
        prop_assert_eq!(&a + (-&a), ExactRational::zero());
        prop_assert_eq!((&a * &b) * &c, &a * (&b * &c));
    }

    #[test]
    fn construction_normalizes(num in any::<i64>(), den in 1..1_000_000_000i64, flip in any::<bool>()) {
        let den = if flip { -den } else { den };
        let x = BigRational::new(BigInt::from(num), BigInt::from(den));
        prop_assert!(x.denom() > &BigInt::zero());
        prop_assert_eq!(x.numer().abs().gcd(x.denom()), BigInt::one());
    }

    #[test]
    fn decimal_round_trip(x in arb_rational(), digits in 1u32..=30) {
        let rendered = to_decimal(&x, digits);
        let back = parse_decimal(rendered.text()).expect("rendered decimals parse");
        let half_ulp = BigRational::new(BigInt::one(), pow10(digits) * BigInt::from(2));
        prop_assert!((back - &x).abs() <= half_ulp);
    }

    #[test]
    fn division_identity(m in 0u64..=40, n in 0u64..=40) {
        let p = expand_integrand(m, n);
        let (q, r) = divide_by_circle(&p);
        prop_assert!(r.degree().unwrap_or(0) <= 1);
        let circle = Polynomial::from_i64(&[1, 0, 1]);
        prop_assert_eq!(q.mul(&circle).add(&r), p);
    }

    #[test]
    fn classification_coefficient_lock(m in 0u64..=40, n in 0u64..=40) {
        let v = dalzell_integral(m, n);
        match classify(m, n) {
            BackhouseClass::PiClass => prop_assert!(v.l.is_zero() && !v.p.is_zero()),
            BackhouseClass::Ln2Class => prop_assert!(v.p.is_zero() && !v.l.is_zero()),
            BackhouseClass::MixedClass => prop_assert!(!v.p.is_zero() && !v.l.is_zero()),
        }
    }

    #[test]
    fn integrals_certified_positive(m in 0u64..=24, n in 0u64..=24) {
        prop_assert!(dalzell_integral(m, n).certified_positive());
    }

    #[test]
    fn ahs_doubles_half_scale(k in 1u64..=30, n_half in 1u64..=4) {
        let n = 2 * n_half;
        prop_assert_eq!(
            partial_sum(SeriesKind::Ahs, k),
            partial_sum(SeriesKind::HalfLn2, k) * rat_int(2)
        );
        let ahs = dalzell_bounds(SeriesKind::Ahs, k, n).expect("valid arguments");
        let half = dalzell_bounds(SeriesKind::HalfLn2, k, n).expect("valid arguments");
        prop_assert_eq!(ahs.upper, half.upper * rat_int(2));
        prop_assert_eq!(
            ahs.lower.expect("has lower"),
            half.lower.expect("has lower") * rat_int(2)
        );
    }

    #[test]
    fn johnsonbaugh_first_order_closed_form(k in 1u64..=100) {
        let pair = johnsonbaugh_bounds(SeriesKind::Gls, k, 1).expect("valid arguments");
        let k_i = k as i64;
        prop_assert_eq!(
            pair.lower.expect("has lower"),
            BigRational::new(BigInt::from(k_i + 2), BigInt::from(4 * k_i * k_i + 8 * k_i + 3))
        );
        prop_assert_eq!(
            pair.upper,
            BigRational::new(BigInt::from(k_i), BigInt::from(4 * k_i * k_i - 1))
        );
    }
}
