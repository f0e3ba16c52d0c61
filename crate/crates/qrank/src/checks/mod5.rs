//! The mod-5 pipeline: 5-dissections of theta products, the sifted product
//! forms, the U-operator lemmas on both bases, the three linear equations for
//! the dissection components of R(zeta_5, q^2), and the vanishing of the
//! component that encodes the mod-5 rank congruence.

use qrank_core::hecke::{hr_rhs, residue_filtered_sum, HrName, PartSel};
use qrank_core::series::QSeries;
use qrank_core::theta::{dissection_lemma_rhs, euler_e, theta4, ParamSpec};
use qrank_core::{CycloField, IntRing, KernelError, Ring};

use super::{cmp, err, f5, jq, jq_in, unit_kernel_product, unit_kernel_times, zeta_sum};
use crate::memo::Memo;
use crate::result::CheckOutcome;

/// (zeta q)(zeta^{-1} q)(q)_inf = J_{25,10} + q (zeta^2 + zeta^{-2}) J_{25,5}.
pub fn diss5_1(order: i64, _memo: &Memo) -> CheckOutcome {
    let run = || -> Result<CheckOutcome, KernelError> {
        let f = f5();
        let lhs = unit_kernel_product(&f, 1, order)?;
        let rhs = dissection_lemma_rhs("5diss1", f, order)?;
        Ok(cmp(&lhs, &rhs, order))
    };
    run().unwrap_or_else(err)
}

/// E(q) = J_25 ( J_{25,10}/J_{25,5} - q - q^2 J_{25,5}/J_{25,10} ).
pub fn diss5_2(order: i64, _memo: &Memo) -> CheckOutcome {
    let run = || -> Result<CheckOutcome, KernelError> {
        let f = f5();
        let lhs = euler_e(&IntRing, order).embed(f);
        let rhs = dissection_lemma_rhs("5diss2", f, order)?;
        Ok(cmp(&lhs, &rhs, order))
    };
    run().unwrap_or_else(err)
}

/// theta_4(q) = J_{50,25} - 2q J_{50,15} + 2q^4 J_{50,5}.
pub fn diss5_3(order: i64, _memo: &Memo) -> CheckOutcome {
    let run = || -> Result<CheckOutcome, KernelError> {
        let f = f5();
        let lhs = theta4(&IntRing, order).embed(f);
        let rhs = dissection_lemma_rhs("5diss3", f, order)?;
        Ok(cmp(&lhs, &rhs, order))
    };
    run().unwrap_or_else(err)
}

/// U_{5,2}(E^2) = -J_5^2.
pub fn sift5_1(order: i64, _memo: &Memo) -> CheckOutcome {
    let run = || -> Result<CheckOutcome, KernelError> {
        let work = 5 * order + 2;
        let e = euler_e(&IntRing, work);
        let lhs = e.mul(&e).atkin_u(5, 2);
        let rhs = jq(&IntRing, &[(5, 0, 2)], order)?.neg();
        Ok(cmp(&lhs, &rhs, order))
    };
    run().unwrap_or_else(err)
}

/// U_{5,3}(theta_4 E) = 2 J_5 J_{5,1} J_{10,3} / J_{5,2}.
pub fn sift5_2(order: i64, _memo: &Memo) -> CheckOutcome {
    let run = || -> Result<CheckOutcome, KernelError> {
        let work = 5 * order + 3;
        let lhs = theta4(&IntRing, work).mul(&euler_e(&IntRing, work)).atkin_u(5, 3);
        let rhs = jq(&IntRing, &[(5, 0, 1), (5, 1, 1), (10, 3, 1), (5, 2, -1)], order)?
            .scale(&IntRing.from_i64(2));
        Ok(cmp(&lhs, &rhs, order))
    };
    run().unwrap_or_else(err)
}

/// U_{5,4}(theta_4 E) = 2 J_5 J_{5,2} J_{10,1} / J_{5,1}.
pub fn sift5_3(order: i64, _memo: &Memo) -> CheckOutcome {
    let run = || -> Result<CheckOutcome, KernelError> {
        let work = 5 * order + 4;
        let lhs = theta4(&IntRing, work).mul(&euler_e(&IntRing, work)).atkin_u(5, 4);
        let rhs = jq(&IntRing, &[(5, 0, 1), (5, 2, 1), (10, 1, 1), (5, 1, -1)], order)?
            .scale(&IntRing.from_i64(2));
        Ok(cmp(&lhs, &rhs, order))
    };
    run().unwrap_or_else(err)
}

/// U_{5,2} of (zeta q)(zeta^{-1}q)(q)_inf R(zeta, q) = -J_5^2, by three
/// routes: the assembled product, the double sum, and the residue-class
/// filtered lattice the proof actually sifts.
pub fn zr5dis(order: i64, memo: &Memo) -> CheckOutcome {
    let run = || -> Result<CheckOutcome, KernelError> {
        let f = f5();
        let work = 5 * order + 2;
        let rhs = jq_in(&f, &[(5, 0, 2)], order)?.neg();

        let route1 = unit_kernel_times(&f, 1, &memo.r_zeta5_q(work), work)?
            .atkin_u(5, 2)
            .truncate_to(order)?;
        let mut out = cmp(&route1, &rhs, order);

        let route2 = hr_rhs(&f, HrName::Rankid1, ParamSpec::wq(1, 0), work)?
            .atkin_u(5, 2)
            .truncate_to(order)?;
        out = out.and(|| cmp(&route2, &rhs, order));

        // residue sifting: only (n,j) = (2,4) survives in the first j-range
        // and (2,1) in the second; on those classes the z-powers are
        // multiples of 5, so zeta drops out
        let part0 = residue_filtered_sum(
            &f,
            HrName::Rankid1,
            PartSel::One(0),
            5,
            &[(2, 4)],
            ParamSpec::wq(1, 0),
            work,
        )?;
        let part1 = residue_filtered_sum(
            &f,
            HrName::Rankid1,
            PartSel::One(1),
            5,
            &[(2, 1)],
            ParamSpec::wq(1, 0),
            work,
        )?;
        let sifted = part0.add(&part1);
        // everything the filter keeps must sit on exponents = 2 mod 5
        let star = hr_rhs(&f, HrName::Rankid1, ParamSpec::wq(1, 0), work)?.atkin_u_star(5, 2);
        out = out.and(|| cmp(&sifted, &star, work));
        let route3 = sifted.atkin_a(5, 2)?.truncate_to(order)?;
        out = out.and(|| cmp(&route3, &rhs, order));
        Ok(out)
    };
    run().unwrap_or_else(err)
}

fn zr52dis(order: i64, memo: &Memo, residue: i64) -> CheckOutcome {
    let run = || -> Result<CheckOutcome, KernelError> {
        let f = f5();
        let work = 5 * order + residue;
        // J-product side, with the zeta coefficient from the sifting step
        let (coeff, factors): (_, &[(i64, i64, i64)]) = if residue == 3 {
            (zeta_sum(&f, &[2, 3]), &[(5, 0, 1), (5, 1, 1), (10, 3, 1), (5, 2, -1)])
        } else {
            (zeta_sum(&f, &[1, 4]), &[(5, 0, 1), (5, 2, 1), (10, 1, 1), (5, 1, -1)])
        };
        let rhs = jq_in(&f, factors, order)?.scale(&coeff);

        let route1 = unit_kernel_times(&f, 1, &memo.r_zeta5_q2(work), work)?
            .atkin_u(5, residue)
            .truncate_to(order)?;
        let mut out = cmp(&route1, &rhs, order);

        // the sifted route: the surviving residue classes carry
        // (zeta^2+zeta^3)/2 for U_{5,3} and (zeta+zeta^4)/2 for U_{5,4},
        // applied to U of theta_4 E
        let half = qrank_core::ring::rat(1, 2);
        let sift_coeff = if residue == 3 {
            f.scale_rat(&zeta_sum(&f, &[2, 3]), &half)
        } else {
            f.scale_rat(&zeta_sum(&f, &[1, 4]), &half)
        };
        let t4e = theta4(&IntRing, work).mul(&euler_e(&IntRing, work));
        let route2 = t4e.atkin_u(5, residue).embed(f).scale(&sift_coeff).truncate_to(order)?;
        out = out.and(|| cmp(&route2, &rhs, order));
        Ok(out)
    };
    run().unwrap_or_else(err)
}

/// U_{5,3} of (zeta q)(zeta^{-1}q)(q)_inf R(zeta, q^2)
/// = (zeta^2+zeta^3) J_5 J_{5,1} J_{10,3} / J_{5,2}.
pub fn zr52dis_a(order: i64, memo: &Memo) -> CheckOutcome {
    zr52dis(order, memo, 3)
}

/// U_{5,4} of the same product = (zeta+zeta^4) J_5 J_{5,2} J_{10,1} / J_{5,1}.
pub fn zr52dis_b(order: i64, memo: &Memo) -> CheckOutcome {
    zr52dis(order, memo, 4)
}

/// U_{5,4}(R(zeta_5, q)) = 0: the rank congruence in generating-function form.
pub fn drc5a(order: i64, memo: &Memo) -> CheckOutcome {
    let run = || -> Result<CheckOutcome, KernelError> {
        let f = f5();
        let r = memo.r_zeta5_q(5 * order + 4);
        let u = r.atkin_u(5, 4).truncate_to(order)?;
        Ok(cmp(&u, &QSeries::zero(f, order), order))
    };
    run().unwrap_or_else(err)
}

/// U_{5,3}(R(zeta_5, q^2)) = 0: the equivalent statement on base q^2.
pub fn drc5b(order: i64, memo: &Memo) -> CheckOutcome {
    let run = || -> Result<CheckOutcome, KernelError> {
        let f = f5();
        let r = memo.r_zeta5_q2(5 * order + 3);
        let u = r.atkin_u(5, 3).truncate_to(order)?;
        Ok(cmp(&u, &QSeries::zero(f, order), order))
    };
    run().unwrap_or_else(err)
}

/// Dissection components of R(zeta_5, q^2): R_k with R = sum q^k R_k(q^5).
fn r52_components(order: i64, memo: &Memo) -> Vec<QSeries<CycloField>> {
    memo.r_zeta5_q2(5 * order + 4).dissect(5)
}

/// (zeta^2+zeta^3) J_{10,2} R_2 + J_{10,4} R_4 = -J_10^2.
pub fn eq1(order: i64, memo: &Memo) -> CheckOutcome {
    let run = || -> Result<CheckOutcome, KernelError> {
        let f = f5();
        let rk = r52_components(order, memo);
        let beta = zeta_sum(&f, &[2, 3]);
        let lhs = jq_in(&f, &[(10, 2, 1)], order)?
            .scale(&beta)
            .mul(&rk[2])
            .add(&jq_in(&f, &[(10, 4, 1)], order)?.mul(&rk[4]))
            .truncate_to(order)?;
        let rhs = jq_in(&f, &[(10, 0, 2)], order)?.neg();
        Ok(cmp(&lhs, &rhs, order))
    };
    run().unwrap_or_else(err)
}

/// (zeta^2+zeta^3) J_{5,1} R_2 + J_{5,2} R_3
/// = (zeta^2+zeta^3) J_{5,1} J_5 J_{10,3} / J_{5,2}.
pub fn eq2(order: i64, memo: &Memo) -> CheckOutcome {
    let run = || -> Result<CheckOutcome, KernelError> {
        let f = f5();
        let rk = r52_components(order, memo);
        let beta = zeta_sum(&f, &[2, 3]);
        let lhs = jq_in(&f, &[(5, 1, 1)], order)?
            .scale(&beta)
            .mul(&rk[2])
            .add(&jq_in(&f, &[(5, 2, 1)], order)?.mul(&rk[3]))
            .truncate_to(order)?;
        let rhs = jq_in(&f, &[(5, 1, 1), (5, 0, 1), (10, 3, 1), (5, 2, -1)], order)?.scale(&beta);
        Ok(cmp(&lhs, &rhs, order))
    };
    run().unwrap_or_else(err)
}

/// (zeta^2+zeta^3) J_{5,1} R_3 + J_{5,2} R_4
/// = (zeta+zeta^4) J_{5,2} J_5 J_{10,1} / J_{5,1}.
pub fn eq3(order: i64, memo: &Memo) -> CheckOutcome {
    let run = || -> Result<CheckOutcome, KernelError> {
        let f = f5();
        let rk = r52_components(order, memo);
        let lhs = jq_in(&f, &[(5, 1, 1)], order)?
            .scale(&zeta_sum(&f, &[2, 3]))
            .mul(&rk[3])
            .add(&jq_in(&f, &[(5, 2, 1)], order)?.mul(&rk[4]))
            .truncate_to(order)?;
        let rhs = jq_in(&f, &[(5, 2, 1), (5, 0, 1), (10, 1, 1), (5, 1, -1)], order)?
            .scale(&zeta_sum(&f, &[1, 4]));
        Ok(cmp(&lhs, &rhs, order))
    };
    run().unwrap_or_else(err)
}

/// The detD combination J_{5,1}^4 J_{10,4}^2 + J_{5,1}^2 J_{5,2}^2 J_{10,2}
/// J_{10,4} - J_{5,2}^4 J_{10,2}^2 over Z.
pub(crate) fn detd_series(order: i64) -> Result<QSeries<IntRing>, KernelError> {
    let t1 = jq(&IntRing, &[(5, 1, 4), (10, 4, 2)], order)?;
    let t2 = jq(&IntRing, &[(5, 1, 2), (5, 2, 2), (10, 2, 1), (10, 4, 1)], order)?;
    let t3 = jq(&IntRing, &[(5, 2, 4), (10, 2, 2)], order)?;
    Ok(t1.add(&t2).sub(&t3))
}

/// R_3 = 0 by two routes: directly from the dissection, and through the
/// solved linear system (the explicit J-product quotient over detD).
pub fn r3_zero(order: i64, memo: &Memo) -> CheckOutcome {
    let run = || -> Result<CheckOutcome, KernelError> {
        let f = f5();
        let zero = QSeries::zero(f, order);
        let rk = r52_components(order, memo);
        let mut out = cmp(&rk[3].truncate_to(order)?, &zero, order);

        // solved form: (g1 - (zeta^2+zeta^3) J_{5,2} g2) / detD
        let g1 = jq_in(&f, &[(5, 0, 1), (5, 1, 3), (10, 2, 1), (10, 3, 1), (10, 4, 1)], order)?
            .add(&jq_in(&f, &[(5, 0, 1), (5, 1, 2), (5, 2, 1), (10, 1, 1), (10, 4, 2)], order)?
                .scale(&f.from_i64(-2)))
            .add(&jq_in(&f, &[(5, 0, 1), (5, 2, 3), (10, 1, 1), (10, 2, 1), (10, 4, 1)], order)?)
            .add(&jq_in(&f, &[(10, 0, 2), (5, 1, 3), (5, 2, 1), (10, 4, 1)], order)?)
            .sub(&jq_in(&f, &[(10, 0, 2), (5, 1, 1), (5, 2, 3), (10, 2, 1)], order)?);
        let g2 = jq_in(&f, &[(5, 0, 1), (5, 1, 2), (10, 1, 1), (10, 4, 2)], order)?
            .add(&jq_in(&f, &[(5, 0, 1), (5, 1, 1), (5, 2, 1), (10, 2, 2), (10, 3, 1)], order)?)
            .sub(&jq_in(&f, &[(5, 0, 1), (5, 2, 2), (10, 1, 1), (10, 2, 1), (10, 4, 1)], order)?)
            .sub(&jq_in(&f, &[(10, 0, 2), (5, 1, 3), (10, 4, 1)], order)?);
        let j52 = jq_in(&f, &[(5, 2, 1)], order)?;
        let numer = g1.sub(&j52.mul(&g2).scale(&zeta_sum(&f, &[2, 3])).truncate_to(order)?);
        let solved = numer.mul(&detd_series(order)?.embed(f).inv()?).truncate_to(order)?;
        out = out.and(|| cmp(&solved, &zero, order));
        Ok(out)
    };
    run().unwrap_or_else(err)
}

/// The printed expansion of detD through q^11.
pub fn detd_expansion(_order: i64, _memo: &Memo) -> CheckOutcome {
    let run = || -> Result<CheckOutcome, KernelError> {
        let order = 11;
        let d = detd_series(order)?;
        let printed = [1, -6, 10, 4, -19, 0, -10, 64, -9, -66, 0, -40];
        let expect = QSeries::from_fn(IntRing, 0, order, |e| {
            qrank_core::ring::int(printed[e as usize])
        });
        Ok(cmp(&d, &expect, order))
    };
    run().unwrap_or_else(err)
}

/// detD = J_10^3 J_1^6 / (J_5^2 J_2).
pub fn detd_eta(order: i64, _memo: &Memo) -> CheckOutcome {
    let run = || -> Result<CheckOutcome, KernelError> {
        let d = detd_series(order)?;
        let eta = jq(&IntRing, &[(10, 0, 3), (1, 0, 6), (5, 0, -2), (2, 0, -1)], order)?;
        Ok(cmp(&d, &eta, order))
    };
    run().unwrap_or_else(err)
}

/// J_{10,1} J_{10,4} / J_10^2 = J_{5,1}/J_5 and
/// J_{10,2} J_{10,3} / J_10^2 = J_{5,3}/J_5.
pub fn jsimp(order: i64, _memo: &Memo) -> CheckOutcome {
    let run = || -> Result<CheckOutcome, KernelError> {
        let f = f5();
        let lhs_a = jq_in(&f, &[(10, 1, 1), (10, 4, 1), (10, 0, -2)], order)?;
        let rhs_a = dissection_lemma_rhs("jsimp_a", f, order)?;
        let mut out = cmp(&lhs_a, &rhs_a, order);
        let lhs_b = jq_in(&f, &[(10, 2, 1), (10, 3, 1), (10, 0, -2)], order)?;
        let rhs_b = dissection_lemma_rhs("jsimp_b", f, order)?;
        out = out.and(|| cmp(&lhs_b, &rhs_b, order));
        Ok(out)
    };
    run().unwrap_or_else(err)
}

/// With R_3 = 0 the system forces product forms:
/// R_2 = J_10^2/J_{10,2} and R_4 = -(1+zeta^2+zeta^3) J_10^2/J_{10,4}.
pub fn r2r4_products(order: i64, memo: &Memo) -> CheckOutcome {
    let run = || -> Result<CheckOutcome, KernelError> {
        let f = f5();
        let rk = r52_components(order, memo);
        let r2 = jq_in(&f, &[(10, 0, 2), (10, 2, -1)], order)?;
        let mut out = cmp(&rk[2].truncate_to(order)?, &r2, order);
        let coeff = f.neg(&f.add(&f.one(), &zeta_sum(&f, &[2, 3])));
        let r4 = jq_in(&f, &[(10, 0, 2), (10, 4, -1)], order)?.scale(&coeff);
        let rk4 = rk[4].truncate_to(order)?;
        out = out.and(|| cmp(&rk4, &r4, order));
        Ok(out)
    };
    run().unwrap_or_else(err)
}
