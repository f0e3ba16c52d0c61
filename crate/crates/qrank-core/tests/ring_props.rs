//! Randomized ring-axiom checks for the cyclotomic fields and the
//! specialization homomorphism, all exact.

use proptest::prelude::*;
use qrank_core::{CycloField, CycloNum, LaurentRing, Rat, RatRing, Ring};

fn small_rat() -> impl Strategy<Value = Rat> {
    (-12i64..=12, 1i64..=6).prop_map(|(n, d)| Rat::new(n.into(), d.into()))
}

fn cyclo(p: u32) -> impl Strategy<Value = CycloNum> {
    proptest::collection::vec(small_rat(), (p - 1) as usize)
        .prop_map(move |coeffs| CycloNum { order: p, coeffs })
}

fn laurent() -> impl Strategy<Value = qrank_core::LaurentPoly<Rat>> {
    proptest::collection::vec((-6i64..=6, small_rat()), 0..6)
        .prop_map(|pairs| LaurentRing::new(RatRing).from_pairs(pairs))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn cyclo_ring_axioms(a in cyclo(5), b in cyclo(5), c in cyclo(5)) {
        let f = CycloField::new(5);
        prop_assert_eq!(f.mul(&a, &b), f.mul(&b, &a));
        prop_assert_eq!(f.mul(&f.mul(&a, &b), &c), f.mul(&a, &f.mul(&b, &c)));
        prop_assert_eq!(
            f.mul(&a, &f.add(&b, &c)),
            f.add(&f.mul(&a, &b), &f.mul(&a, &c))
        );
    }

    #[test]
    fn cyclo_ring_axioms_order7(a in cyclo(7), b in cyclo(7), c in cyclo(7)) {
        let f = CycloField::new(7);
        prop_assert_eq!(f.mul(&f.mul(&a, &b), &c), f.mul(&a, &f.mul(&b, &c)));
        prop_assert_eq!(
            f.mul(&a, &f.add(&b, &c)),
            f.add(&f.mul(&a, &b), &f.mul(&a, &c))
        );
    }

    #[test]
    fn cyclo_inverse_roundtrip(a in cyclo(5)) {
        let f = CycloField::new(5);
        if !a.is_zero() {
            let inv = f.try_inv(&a).unwrap();
            prop_assert_eq!(f.mul(&a, &inv), f.one());
        }
    }

    #[test]
    fn cyclo_inverse_roundtrip_order11(a in cyclo(11)) {
        let f = CycloField::new(11);
        if !a.is_zero() {
            let inv = f.try_inv(&a).unwrap();
            prop_assert_eq!(f.mul(&a, &inv), f.one());
        }
    }

    #[test]
    fn specialization_is_a_ring_map(f in laurent(), g in laurent(), k in 0i64..5) {
        let field = CycloField::new(5);
        let zr = LaurentRing::new(RatRing);
        let prod = field.specialize_laurent(&zr.mul(&f, &g), k);
        let split = field.mul(
            &field.specialize_laurent(&f, k),
            &field.specialize_laurent(&g, k),
        );
        prop_assert_eq!(prod, split);
        let sum = field.specialize_laurent(&zr.add(&f, &g), k);
        let split_sum = field.add(
            &field.specialize_laurent(&f, k),
            &field.specialize_laurent(&g, k),
        );
        prop_assert_eq!(sum, split_sum);
    }

    #[test]
    fn laurent_mul_commutes_and_keeps_canonical_form(f in laurent(), g in laurent()) {
        let zr = LaurentRing::new(RatRing);
        let fg = zr.mul(&f, &g);
        prop_assert_eq!(&fg, &zr.mul(&g, &f));
        for (_, c) in fg.iter() {
            prop_assert!(!RatRing.is_zero(c), "stored zero coefficient");
        }
    }

    #[test]
    fn fused_multiply_add_matches_separate_ops(
        acc in cyclo(5),
        a in cyclo(5),
        b in cyclo(5),
        e in 0i64..5,
        neg in proptest::bool::ANY,
    ) {
        // the rotation fast path for single-term factors must agree with the
        // generic convolution, for monomial and dense operands alike
        let f = CycloField::new(5);
        let mono = if neg { f.neg(&f.zeta(e)) } else { f.zeta(e) };
        for (x, y) in [(a.clone(), b.clone()), (mono.clone(), b.clone()), (a.clone(), mono)] {
            let mut fused = acc.clone();
            f.mul_add_assign(&mut fused, &x, &y);
            let split = f.add(&acc, &f.mul(&x, &y));
            prop_assert_eq!(fused, split);
        }
    }
}
