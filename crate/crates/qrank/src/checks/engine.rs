//! Engine self-consistency: the two theta routes, the J-product presets, the
//! rank generating function against the combinatorial oracle, operator
//! algebra, and the classical partition congruences.

use num_traits::Zero;
use qrank_core::appell::f_abc;
use qrank_core::rank::{partition_counts, rank_oracle, rank_series, RankForm, RankMethod};
use qrank_core::series::QSeries;
use qrank_core::theta::{euler_e, j_b, jtheta, theta4, ParamSpec, ThetaForm};
use qrank_core::{Int, IntRing, LaurentRing, Rat, RatRing, Ring};

use super::{cmp, err, f5, f7, jq};
use crate::memo::Memo;
use crate::result::CheckOutcome;

fn zr() -> LaurentRing<RatRing> {
    LaurentRing::new(RatRing)
}

/// j(arg; base) sum form == product form on a fixed battery of argument
/// shapes covering symbolic z, roots of unity, negative q-powers, and
/// base-multiple normalization.
pub fn jacobi_triple(order: i64, _memo: &Memo) -> CheckOutcome {
    let run = || -> Result<CheckOutcome, qrank_core::KernelError> {
        let mut out = CheckOutcome::Pass { order };
        let zring = zr();
        for arg in [ParamSpec::zq(1, 0), ParamSpec::zq(2, 1), ParamSpec::zq(-2, 1)] {
            let p = jtheta(&zring, &arg, 1, ThetaForm::Product, order)?;
            let s = jtheta(&zring, &arg, 1, ThetaForm::Sum, order)?;
            out = out.and(|| cmp(&p, &s, order));
        }
        let field5 = f5();
        for (a, e, b) in [(1, 1, 1), (3, -2, 3), (2, 0, 2), (4, 7, 3), (1, 4, 2)] {
            let arg = ParamSpec::wq(a, e);
            let p = jtheta(&field5, &arg, b, ThetaForm::Product, order)?;
            let s = jtheta(&field5, &arg, b, ThetaForm::Sum, order)?;
            out = out.and(|| cmp(&p, &s, order));
        }
        let field7 = f7();
        for (a, e, b) in [(2, 4, 3), (5, 1, 1)] {
            let arg = ParamSpec::wq(a, e);
            let p = jtheta(&field7, &arg, b, ThetaForm::Product, order)?;
            let s = jtheta(&field7, &arg, b, ThetaForm::Sum, order)?;
            out = out.and(|| cmp(&p, &s, order));
        }
        Ok(out)
    };
    run().unwrap_or_else(err)
}

/// The J-product presets: E = J_1 equals the pentagonal theta j(q;q^3), and
/// theta_4 = J_{2,1} equals its bilateral square sum.
pub fn jba_products(order: i64, _memo: &Memo) -> CheckOutcome {
    let run = || -> Result<CheckOutcome, qrank_core::KernelError> {
        let e = euler_e(&IntRing, order);
        let pent = jtheta(&IntRing, &ParamSpec::q(1), 3, ThetaForm::Sum, order)?;
        let mut out = cmp(&e, &pent, order);

        // theta_4 both ways
        let t4 = theta4(&IntRing, order);
        let t4_sum = jtheta(&IntRing, &ParamSpec::q(1), 2, ThetaForm::Sum, order)?;
        out = out.and(|| cmp(&t4, &t4_sum, order));

        // a two-parameter J against its defining triple product
        let j103 = jq(&IntRing, &[(10, 3, 1)], order)?;
        let j103_sum = jtheta(&IntRing, &ParamSpec::q(3), 10, ThetaForm::Sum, order)?;
        out = out.and(|| cmp(&j103, &j103_sum, order));
        Ok(out)
    };
    run().unwrap_or_else(err)
}

/// R(z;q): the q^{k^2}-quotient form, the Lambert form, and the dp oracle all
/// agree; at z = 1 all collapse to the partition generating function.
pub fn rank_forms(order: i64, memo: &Memo) -> CheckOutcome {
    let run = || -> Result<CheckOutcome, qrank_core::KernelError> {
        let zring = zr();
        let z = ParamSpec::zq(1, 0);
        let quot = rank_series(&zring, z, 1, RankForm::Quotient, order)?;
        let lam = rank_series(&zring, z, 1, RankForm::Lambert, order)?;
        let mut out = cmp(&quot, &lam, order);

        // coefficients against the dp table
        let table_to = order.min(160);
        let table = memo.dp_table(table_to);
        'outer: for n in 0..=table_to {
            let coeff = quot.coeff(n);
            for m in -n.max(1)..=n.max(1) {
                let got = coeff.get(m).cloned().unwrap_or_else(Rat::zero);
                let want = Rat::from_integer(table.count(m, n));
                if got != want {
                    out = out.and(|| CheckOutcome::Fail {
                        exponent: n,
                        lhs: format!("coefficient of z^{m}: {got}"),
                        rhs: format!("N({m},{n}) = {want}"),
                    });
                    break 'outer;
                }
            }
        }

        // z = 1: the partition series, via both forms
        let p = partition_counts(order);
        for form in [RankForm::Quotient, RankForm::Lambert] {
            let r1 = rank_series(&IntRing, ParamSpec::one(), 1, form, order)?;
            let part = QSeries::from_fn(IntRing, 0, order, |e| p[e as usize].clone());
            out = out.and(|| cmp(&r1, &part, order));
        }
        Ok(out)
    };
    run().unwrap_or_else(err)
}

/// Exhaustive enumeration and the dp fill produce identical rank tables.
pub fn oracle_agreement(order: i64, _memo: &Memo) -> CheckOutcome {
    let max_n = order.min(40);
    let run = || -> Result<CheckOutcome, qrank_core::KernelError> {
        let a = rank_oracle(max_n, RankMethod::Enumerate)?;
        let b = rank_oracle(max_n, RankMethod::Dp)?;
        for n in 0..=max_n {
            for m in -n.max(1)..=n.max(1) {
                if a.count(m, n) != b.count(m, n) {
                    return Ok(CheckOutcome::Fail {
                        exponent: n,
                        lhs: format!("enumerate N({m},{n}) = {}", a.count(m, n)),
                        rhs: format!("dp N({m},{n}) = {}", b.count(m, n)),
                    });
                }
            }
        }
        Ok(CheckOutcome::Pass { order: max_n })
    };
    run().unwrap_or_else(err)
}

/// p(5n+4), p(7n+5), p(11n+6) divisible by 5, 7, 11 on the partition series.
pub fn ram_congruences(order: i64, _memo: &Memo) -> CheckOutcome {
    let run = || -> Result<CheckOutcome, qrank_core::KernelError> {
        let p = euler_e(&IntRing, order).inv()?;
        for (modulus, residue) in [(5i64, 4i64), (7, 5), (11, 6)] {
            let u = p.atkin_u(modulus, residue);
            for (n, c) in u.terms() {
                if !(c % Int::from(modulus)).is_zero() {
                    return Ok(CheckOutcome::Fail {
                        exponent: modulus * n + residue,
                        lhs: format!("p({}) = {c}", modulus * n + residue),
                        rhs: format!("0 mod {modulus}"),
                    });
                }
            }
        }
        Ok(CheckOutcome::Pass { order })
    };
    run().unwrap_or_else(err)
}

/// f_{1,2,1} against a plain box double loop, on symbolic and specialized
/// arguments.
pub fn f121_brute(order: i64, _memo: &Memo) -> CheckOutcome {
    let run = || -> Result<CheckOutcome, qrank_core::KernelError> {
        let zring = zr();
        let mut out = CheckOutcome::Pass { order };
        for (x, y) in [
            (ParamSpec::zq(-1, 1), ParamSpec::zq(-2, 1)),
            (ParamSpec::zq(1, 1), ParamSpec::zq(2, 1)),
        ] {
            let fast = f_abc(&zring, 1, 2, 1, x, y, order)?;
            let slow = f_brute(&zring, 1, 2, 1, x, y, order);
            out = out.and(|| cmp(&fast, &slow, order));
        }
        let field = f5();
        for (x, y) in [
            (ParamSpec::wq(-1, 1), ParamSpec::wq(-2, 1)),
            (ParamSpec::wq(1, 1), ParamSpec::wq(2, 1)),
        ] {
            let fast = f_abc(&field, 1, 2, 1, x, y, order)?;
            let slow = f_brute(&field, 1, 2, 1, x, y, order);
            out = out.and(|| cmp(&fast, &slow, order));
        }
        let fast = f_abc(&IntRing, 1, 2, 1, ParamSpec::q(1), ParamSpec::q(1), order)?;
        let slow = f_brute(&IntRing, 1, 2, 1, ParamSpec::q(1), ParamSpec::q(1), order);
        out = out.and(|| cmp(&fast, &slow, order));
        Ok(out)
    };
    run().unwrap_or_else(err)
}

/// Naive double loop over a box big enough that the boundary ring cannot
/// reach the truncation order (asserted).
fn f_brute<R: Ring>(
    ring: &R,
    a: i64,
    b: i64,
    c: i64,
    x: ParamSpec,
    y: ParamSpec,
    trunc: i64,
) -> QSeries<R> {
    let binom2 = |t: i64| t * (t - 1) / 2;
    let exp = |r: i64, s: i64| a * binom2(r) + b * r * s + c * binom2(s) + x.q_exp * r + y.q_exp * s;
    let mut half = 8;
    loop {
        let boundary_reaches = (-half..=half).any(|r| {
            [(r, half), (r, -half), (half, r), (-half, r)]
                .iter()
                .any(|&(rr, ss)| {
                    let sg_r = if rr >= 0 { 1 } else { -1 };
                    let sg_s = if ss >= 0 { 1 } else { -1 };
                    sg_r == sg_s && exp(rr, ss) <= trunc
                })
        });
        if !boundary_reaches {
            break;
        }
        half += 4;
        assert!(half < 4000, "brute-force box exploded");
    }
    let mut out = QSeries::zero(ring.clone(), trunc);
    for r in -half..=half {
        for s in -half..=half {
            let sg = if r >= 0 { 1 } else { -1 };
            if sg != (if s >= 0 { 1 } else { -1 }) {
                continue;
            }
            let e = exp(r, s);
            if e > trunc {
                continue;
            }
            let mut coeff = ring.mul(&x.unit_pow_in(ring, r), &y.unit_pow_in(ring, s));
            if sg * qrank_core::ring::sign_pow(r + s) < 0 {
                coeff = ring.neg(&coeff);
            }
            out = out.add(&QSeries::monomial_scaled(ring.clone(), coeff, e, trunc));
        }
    }
    out
}

/// Dissect/reassemble is the identity, on the partition series and on a
/// two-variable product.
pub fn dissect_roundtrip(order: i64, memo: &Memo) -> CheckOutcome {
    let run = || -> Result<CheckOutcome, qrank_core::KernelError> {
        let p = euler_e(&IntRing, order).inv()?.truncate_to(order)?;
        let mut out = CheckOutcome::Pass { order };
        for m in [2i64, 5, 7] {
            let parts = p.dissect(m);
            let mut back = QSeries::zero(IntRing, order);
            for (r, comp) in parts.iter().enumerate() {
                back = back.add(&comp.substitute_qpower(m).shift(r as i64));
            }
            out = out.and(|| cmp(&back, &p, order));
        }
        // geometric series splits into two geometric halves
        let geo = QSeries::from_fn(IntRing, 0, order, |_| Int::from(1));
        for comp in geo.dissect(2) {
            let expect = QSeries::from_fn(IntRing, 0, comp.trunc(), |_| Int::from(1));
            out = out.and(|| cmp(&comp, &expect, comp.trunc()));
        }
        // cyclotomic case: R(zeta5, q) reassembles too
        let r5 = memo.r_zeta5_q(order);
        let parts = r5.dissect(5);
        let mut back = QSeries::zero(f5(), order);
        for (r, comp) in parts.iter().enumerate() {
            back = back.add(&comp.substitute_qpower(5).shift(r as i64));
        }
        let safe = back.trunc().min(order);
        let r5_cut = r5.truncate_to(safe)?;
        out = out.and(|| cmp(&back, &r5_cut, safe));
        Ok(out)
    };
    run().unwrap_or_else(err)
}

/// Operator algebra: U_{p,m} = A_{p,m} after U*_{p,m}; the U*'s tile the
/// series; U_{p,0} inverts q -> q^p.
pub fn atkin_ops(order: i64, _memo: &Memo) -> CheckOutcome {
    let run = || -> Result<CheckOutcome, qrank_core::KernelError> {
        let e2 = {
            let e = euler_e(&IntRing, order);
            e.mul(&e)
        };
        let mut out = CheckOutcome::Pass { order };
        for p in [5i64, 7] {
            let mut tiled = QSeries::zero(IntRing, order);
            for r in 0..p {
                let star = e2.atkin_u_star(p, r);
                tiled = tiled.add(&star);
                let composed = star.atkin_a(p, r)?;
                out = out.and(|| cmp(&composed, &e2.atkin_u(p, r), composed.trunc()));
            }
            out = out.and(|| cmp(&tiled, &e2, order));
        }
        let base = j_b(&IntRing, 1, order.div_euclid(5).max(1));
        let up = base.substitute_qpower(5);
        out = out.and(|| cmp(&up.atkin_u(5, 0), &base, base.trunc()));
        for r in 1..5 {
            let zero = QSeries::zero(IntRing, up.atkin_u(5, r).trunc());
            out = out.and(|| cmp(&up.atkin_u(5, r), &zero, zero.trunc()));
        }
        Ok(out)
    };
    run().unwrap_or_else(err)
}
