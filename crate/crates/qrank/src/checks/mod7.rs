//! The mod-7 system: the 7-dissection of the zeta-kernel product, the three
//! U-operator lemmas from the three usable rank identities, the linear
//! equations they induce for the dissection components of R(zeta_7, q), and
//! the resulting product forms.

use qrank_core::hecke::{hr_rhs, HrName};
use qrank_core::series::QSeries;
use qrank_core::theta::{dissection_lemma_rhs, mul_pochhammer, ParamSpec};
use qrank_core::{CycloField, KernelError, Ring};

use super::{cmp, err, f7, jq_in, unit_kernel_product, unit_kernel_times, zeta_sum};
use crate::memo::Memo;
use crate::result::CheckOutcome;

/// (zeta q)(zeta^{-1} q)(q)_inf =
/// J_{49,21} + q (zeta^2+zeta^3+zeta^4+zeta^5) J_{49,14} - q^3 (zeta^3+zeta^4) J_{49,7}.
pub fn zth7dis(order: i64, _memo: &Memo) -> CheckOutcome {
    let run = || -> Result<CheckOutcome, KernelError> {
        let f = f7();
        let lhs = unit_kernel_product(&f, 1, order)?;
        let rhs = dissection_lemma_rhs("zth7dis", f, order)?;
        Ok(cmp(&lhs, &rhs, order))
    };
    run().unwrap_or_else(err)
}

/// The (1+zeta)(zeta^2 q^b)(zeta^{-2} q^b)(q^b)_inf R(zeta,q) product on
/// base b, built factor by factor onto the memoized rank series.
fn squared_kernel(
    f: &CycloField,
    base: i64,
    work: i64,
    memo: &Memo,
) -> Result<QSeries<CycloField>, KernelError> {
    let mut s = mul_pochhammer(f, &memo.r_zeta7_q(work), &ParamSpec::wq(2, base), base, work)?;
    s = mul_pochhammer(f, &s, &ParamSpec::wq(-2, base), base, work)?;
    s = mul_pochhammer(f, &s, &ParamSpec::q(base), base, work)?;
    let one_plus_z = f.add(&f.one(), &f.zeta(1));
    Ok(s.scale(&one_plus_z))
}

/// U_{7,4} of (zeta q)(zeta^{-1}q)(q)_inf R(zeta,q) = J_7^2,
/// by product assembly and by the double sum.
pub fn zr7dis1_a(order: i64, memo: &Memo) -> CheckOutcome {
    let run = || -> Result<CheckOutcome, KernelError> {
        let f = f7();
        let work = 7 * order + 4;
        let rhs = jq_in(&f, &[(7, 0, 2)], order)?;
        let route1 = unit_kernel_times(&f, 1, &memo.r_zeta7_q(work), work)?
            .atkin_u(7, 4)
            .truncate_to(order)?;
        let mut out = cmp(&route1, &rhs, order);
        let route2 = hr_rhs(&f, HrName::Rankid1, ParamSpec::wq(1, 0), work)?
            .atkin_u(7, 4)
            .truncate_to(order)?;
        out = out.and(|| cmp(&route2, &rhs, order));
        Ok(out)
    };
    run().unwrap_or_else(err)
}

/// U_{7,4} of (1+zeta)(zeta^2 q)(zeta^{-2}q)(q)_inf R(zeta,q) = 2 zeta^4 J_7^2.
pub fn zr7dis1_b(order: i64, memo: &Memo) -> CheckOutcome {
    let run = || -> Result<CheckOutcome, KernelError> {
        let f = f7();
        let work = 7 * order + 4;
        let rhs = jq_in(&f, &[(7, 0, 2)], order)?
            .scale(&f.scale_rat(&f.zeta(4), &qrank_core::ring::rat(2, 1)));
        let route1 = squared_kernel(&f, 1, work, memo)?.atkin_u(7, 4).truncate_to(order)?;
        let mut out = cmp(&route1, &rhs, order);
        let route2 = hr_rhs(&f, HrName::Rankid3, ParamSpec::wq(1, 0), work)?
            .atkin_u(7, 4)
            .truncate_to(order)?;
        out = out.and(|| cmp(&route2, &rhs, order));
        Ok(out)
    };
    run().unwrap_or_else(err)
}

/// U_{7,3} of (1+zeta)(zeta^2 q^2;q^2)(zeta^{-2}q^2;q^2)(q^2;q^2)_inf R(zeta,q)
/// = 2 zeta^4 q J_14^3 / J_7. The factor q is forced by the constant term
/// (the product has no q^3 coefficient) and matches the q that the linear
/// equation eqn73 carries on its right side.
pub fn zr7dis1_c(order: i64, memo: &Memo) -> CheckOutcome {
    let run = || -> Result<CheckOutcome, KernelError> {
        let f = f7();
        let work = 7 * order + 3;
        let rhs = jq_in(&f, &[(14, 0, 3), (7, 0, -1)], order + 1)?
            .scale(&f.scale_rat(&f.zeta(4), &qrank_core::ring::rat(2, 1)))
            .shift(1)
            .truncate_to(order)?;
        let route1 = squared_kernel(&f, 2, work, memo)?.atkin_u(7, 3).truncate_to(order)?;
        let mut out = cmp(&route1, &rhs, order);
        let route2 = hr_rhs(&f, HrName::Rankid4, ParamSpec::wq(1, 0), work)?
            .atkin_u(7, 3)
            .truncate_to(order)?;
        out = out.and(|| cmp(&route2, &rhs, order));
        Ok(out)
    };
    run().unwrap_or_else(err)
}

fn r7_components(order: i64, memo: &Memo) -> Vec<QSeries<CycloField>> {
    memo.r_zeta7_q(7 * order + 6).dissect(7)
}

/// -(z^4+z^3) J_{7,1} R_1 + (z^5+z^4+z^3+z^2) J_{7,2} R_3 + J_{7,3} R_4 = J_7^2.
pub fn eqn71(order: i64, memo: &Memo) -> CheckOutcome {
    let run = || -> Result<CheckOutcome, KernelError> {
        let f = f7();
        let rk = r7_components(order, memo);
        let lhs = jq_in(&f, &[(7, 1, 1)], order)?
            .scale(&f.neg(&zeta_sum(&f, &[4, 3])))
            .mul(&rk[1])
            .add(&jq_in(&f, &[(7, 2, 1)], order)?
                .scale(&zeta_sum(&f, &[5, 4, 3, 2]))
                .mul(&rk[3]))
            .add(&jq_in(&f, &[(7, 3, 1)], order)?.mul(&rk[4]))
            .truncate_to(order)?;
        let rhs = jq_in(&f, &[(7, 0, 2)], order)?;
        Ok(cmp(&lhs, &rhs, order))
    };
    run().unwrap_or_else(err)
}

/// (z^5+z^4+z^3) J_{7,1} R_1 + z^4 J_{7,2} R_3 + (z+1) J_{7,3} R_4 = 2 z^4 J_7^2.
pub fn eqn72(order: i64, memo: &Memo) -> CheckOutcome {
    let run = || -> Result<CheckOutcome, KernelError> {
        let f = f7();
        let rk = r7_components(order, memo);
        let lhs = jq_in(&f, &[(7, 1, 1)], order)?
            .scale(&zeta_sum(&f, &[5, 4, 3]))
            .mul(&rk[1])
            .add(&jq_in(&f, &[(7, 2, 1)], order)?.scale(&f.zeta(4)).mul(&rk[3]))
            .add(&jq_in(&f, &[(7, 3, 1)], order)?
                .scale(&f.add(&f.zeta(1), &f.one()))
                .mul(&rk[4]))
            .truncate_to(order)?;
        let rhs = jq_in(&f, &[(7, 0, 2)], order)?
            .scale(&f.scale_rat(&f.zeta(4), &qrank_core::ring::rat(2, 1)));
        Ok(cmp(&lhs, &rhs, order))
    };
    run().unwrap_or_else(err)
}

/// z^4 J_{14,4} R_1 + (z+1) J_{14,6} R_3 + (z^5+z^4+z^3) q J_{14,2} R_4
/// = 2 z^4 q J_14^3 / J_7.
pub fn eqn73(order: i64, memo: &Memo) -> CheckOutcome {
    let run = || -> Result<CheckOutcome, KernelError> {
        let f = f7();
        let rk = r7_components(order + 1, memo);
        let lhs = jq_in(&f, &[(14, 4, 1)], order + 1)?
            .scale(&f.zeta(4))
            .mul(&rk[1])
            .add(&jq_in(&f, &[(14, 6, 1)], order + 1)?
                .scale(&f.add(&f.zeta(1), &f.one()))
                .mul(&rk[3]))
            .add(&jq_in(&f, &[(14, 2, 1)], order + 1)?
                .scale(&zeta_sum(&f, &[5, 4, 3]))
                .mul(&rk[4])
                .shift(1))
            .truncate_to(order)?;
        let rhs = jq_in(&f, &[(14, 0, 3), (7, 0, -1)], order + 1)?
            .scale(&f.scale_rat(&f.zeta(4), &qrank_core::ring::rat(2, 1)))
            .shift(1)
            .truncate_to(order)?;
        Ok(cmp(&lhs, &rhs, order))
    };
    run().unwrap_or_else(err)
}

/// R_1 = J_7^2/J_{7,1}, R_3 = (z^5+z^2+1) J_7^2/J_{7,2},
/// R_4 = -(z^5+z^2) J_7^2/J_{7,3}.
pub fn mod7_products(order: i64, memo: &Memo) -> CheckOutcome {
    let run = || -> Result<CheckOutcome, KernelError> {
        let f = f7();
        let rk = r7_components(order, memo);
        let r1 = jq_in(&f, &[(7, 0, 2), (7, 1, -1)], order)?;
        let mut out = cmp(&rk[1].truncate_to(order)?, &r1, order);
        let r3 = jq_in(&f, &[(7, 0, 2), (7, 2, -1)], order)?
            .scale(&f.add(&zeta_sum(&f, &[5, 2]), &f.one()));
        let rk3 = rk[3].truncate_to(order)?;
        out = out.and(|| cmp(&rk3, &r3, order));
        let r4 = jq_in(&f, &[(7, 0, 2), (7, 3, -1)], order)?
            .scale(&f.neg(&zeta_sum(&f, &[5, 2])));
        let rk4 = rk[4].truncate_to(order)?;
        out = out.and(|| cmp(&rk4, &r4, order));
        Ok(out)
    };
    run().unwrap_or_else(err)
}
