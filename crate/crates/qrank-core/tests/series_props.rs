//! Randomized truncated-series invariants: associativity within tracked
//! precision, inverse roundtrips, dissection/reassembly, operator relations.

use proptest::prelude::*;
use qrank_core::series::{series_equal, QSeries};
use qrank_core::Ring;
use qrank_core::{Int, IntRing};

#[derive(Debug, Clone)]
struct S(QSeries<IntRing>);

fn series(units_lead: bool) -> impl Strategy<Value = S> {
    (
        -3i64..=3,
        proptest::collection::vec(-4i64..=4, 1..=14),
    )
        .prop_map(move |(lower, mut coeffs)| {
            if units_lead {
                coeffs[0] = if coeffs[0] >= 0 { 1 } else { -1 };
            }
            let trunc = lower + coeffs.len() as i64 - 1;
            S(QSeries::from_fn(IntRing, lower, trunc, |e| {
                Int::from(coeffs[(e - lower) as usize])
            }))
        })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn mul_is_associative_up_to_tracked_precision(a in series(false), b in series(false), c in series(false)) {
        let x = a.0.mul(&b.0).mul(&c.0);
        let y = a.0.mul(&b.0.mul(&c.0));
        let order = x.trunc().min(y.trunc());
        prop_assert!(series_equal(&x, &y, order).unwrap().is_pass());
    }

    #[test]
    fn inverse_roundtrip(a in series(true)) {
        let inv = a.0.inv().unwrap();
        let prod = inv.mul(&a.0);
        let order = prod.trunc();
        let one = QSeries::one(IntRing, order.max(0));
        if order >= 0 {
            prop_assert!(series_equal(&prod, &one, order).unwrap().is_pass());
        }
    }

    #[test]
    fn dissect_reassemble_roundtrip(a in series(false), p in 1i64..=6) {
        let parts = a.0.dissect(p);
        let mut back = QSeries::zero(IntRing, a.0.trunc());
        for (r, comp) in parts.iter().enumerate() {
            back = back.add(&comp.substitute_qpower(p).shift(r as i64));
        }
        prop_assert!(series_equal(&back, &a.0, a.0.trunc()).unwrap().is_pass());
    }

    #[test]
    fn substitution_then_u_operator(a in series(false), p in 2i64..=5) {
        // U_{p,0} inverts q -> q^p; other residues are identically zero
        if a.0.lower() >= 0 {
            let f = a.0.substitute_qpower(p);
            let u0 = f.atkin_u(p, 0);
            prop_assert!(series_equal(&u0, &a.0, a.0.trunc()).unwrap().is_pass());
            for r in 1..p {
                prop_assert!(f.atkin_u(p, r).is_zero_series());
            }
        }
    }

    #[test]
    fn comparison_beyond_precision_errors(a in series(false)) {
        let n = a.0.trunc();
        prop_assert!(series_equal(&a.0, &a.0, n + 1).is_err());
        prop_assert!(series_equal(&a.0, &a.0, n).unwrap().is_pass());
    }

    #[test]
    fn binomial_division_roundtrip(a in series(false), c in -3i64..=3, d in 1i64..=4) {
        let c = Int::from(c);
        let divided = a.0.div_binomial(&c, d);
        let neg = IntRing.neg(&c);
        let back = divided.mul_binomial(&neg, d);
        prop_assert!(series_equal(&back, &a.0, a.0.trunc()).unwrap().is_pass());
    }

    #[test]
    fn in_place_binomial_multiply_matches(a in series(false), c in -3i64..=3, d in 1i64..=4) {
        let c = Int::from(c);
        let out_of_place = a.0.mul_binomial(&c, d);
        let mut in_place = a.0.clone();
        in_place.mul_binomial_in_place(&c, d);
        prop_assert!(series_equal(&in_place, &out_of_place, out_of_place.trunc())
            .unwrap()
            .is_pass());
    }
}


