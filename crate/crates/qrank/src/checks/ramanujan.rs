//! The mod-5 dissection of R(zeta_5, q) itself: the product forms of its
//! components, the two U-operator lemmas connecting the remaining components
//! to the fifth-order false-theta-like sums phi and psi, and the assembled
//! Lost Notebook identity.

use qrank_core::hecke::{hr_rhs_base, residue_filtered_sum, HrName, PartSel};
use qrank_core::rank::{ramanujan_phi, ramanujan_psi};
use qrank_core::series::QSeries;
use qrank_core::theta::{euler_e, mul_pochhammer, pochhammer, ParamSpec, PochLen};
use qrank_core::{CycloField, IntRing, KernelError, Ring};

use super::{cmp, err, f5, jq, jq_in, jw, rtwid, zeta_sum};
use crate::memo::Memo;
use crate::result::CheckOutcome;

/// Classes (n mod 5, j mod 5) where the exponent of the E^2 double sum is
/// divisible by 5, and the subset whose z-weight is not 1 + zeta.
const S1: [(i64, i64); 6] = [(0, 0), (0, 3), (1, 4), (3, 4), (4, 0), (4, 3)];
const S2: [(i64, i64); 2] = [(1, 4), (3, 4)];

fn r5_components(order: i64, memo: &Memo) -> Vec<QSeries<CycloField>> {
    memo.r_zeta5_q(5 * order + 4).dissect(5)
}

/// (1+zeta)(zeta^2 q)(zeta^{-2} q)(q)_inf R(zeta, q), built factor by factor
/// onto the memoized rank series.
fn rtwid_zeta5(order: i64, memo: &Memo) -> Result<QSeries<CycloField>, KernelError> {
    let f = f5();
    let mut s = mul_pochhammer(&f, &memo.r_zeta5_q(order), &ParamSpec::wq(2, 1), 1, order)?;
    s = mul_pochhammer(&f, &s, &ParamSpec::wq(-2, 1), 1, order)?;
    s = mul_pochhammer(&f, &s, &ParamSpec::q(1), 1, order)?;
    let one_plus_z = f.add(&f.one(), &f.zeta(1));
    Ok(s.scale(&one_plus_z))
}

/// The fifth-order sums on base q^5, as q-power Pochhammer products.
fn ram_products(order: i64) -> Result<[QSeries<IntRing>; 4], KernelError> {
    let p = |e: i64, n: i64| pochhammer(&IntRing, &ParamSpec::q(e), PochLen::Infinite, 5, n);
    let a = p(2, order)?
        .mul(&p(3, order)?)
        .mul(&p(5, order)?)
        .mul(&p(1, order)?.mul(&p(4, order)?).inv()?)
        .mul(&p(1, order)?.mul(&p(4, order)?).inv()?)
        .truncate_to(order)?;
    let b = p(5, order)?
        .mul(&p(1, order)?.mul(&p(4, order)?).inv()?)
        .truncate_to(order)?;
    let c = p(5, order)?
        .mul(&p(2, order)?.mul(&p(3, order)?).inv()?)
        .truncate_to(order)?;
    let d = p(1, order)?
        .mul(&p(4, order)?)
        .mul(&p(5, order)?)
        .mul(&p(2, order)?.mul(&p(3, order)?).inv()?)
        .mul(&p(2, order)?.mul(&p(3, order)?).inv()?)
        .truncate_to(order)?;
    Ok([a, b, c, d])
}

/// R_1 = J_5^2/J_{5,1}, R_2 = (zeta+zeta^4) J_5^2/J_{5,2}, R_4 = 0, for the
/// components of R(zeta_5, q).
pub fn ram_r1r2r4(order: i64, memo: &Memo) -> CheckOutcome {
    let run = || -> Result<CheckOutcome, KernelError> {
        let f = f5();
        let rk = r5_components(order, memo);
        let r1 = jq_in(&f, &[(5, 0, 2), (5, 1, -1)], order)?;
        let mut out = cmp(&rk[1].truncate_to(order)?, &r1, order);
        let r2 = jq_in(&f, &[(5, 0, 2), (5, 2, -1)], order)?.scale(&zeta_sum(&f, &[1, 4]));
        let rk2 = rk[2].truncate_to(order)?;
        out = out.and(|| cmp(&rk2, &r2, order));
        let rk4 = rk[4].truncate_to(order)?;
        out = out.and(|| cmp(&rk4, &QSeries::zero(f, order), order));
        Ok(out)
    };
    run().unwrap_or_else(err)
}

/// R_0 = J_5^2 J_{5,2}/J_{5,1}^2 + (zeta^4 + zeta - 2) phi.
pub fn ram_r0(order: i64, memo: &Memo) -> CheckOutcome {
    let run = || -> Result<CheckOutcome, KernelError> {
        let f = f5();
        let rk = r5_components(order, memo);
        let coeff = f.sub(&zeta_sum(&f, &[4, 1]), &f.from_i64(2));
        let rhs = jq_in(&f, &[(5, 0, 2), (5, 2, 1), (5, 1, -2)], order)?
            .add(&ramanujan_phi(&IntRing, order)?.embed(f).scale(&coeff));
        Ok(cmp(&rk[0].truncate_to(order)?, &rhs, order))
    };
    run().unwrap_or_else(err)
}

/// R_3 = -(zeta^4 + zeta) J_{5,1} J_5^2/J_{5,2}^2 + (2 zeta^3 + 2 zeta^2 + 1) psi/q.
pub fn ram_r3(order: i64, memo: &Memo) -> CheckOutcome {
    let run = || -> Result<CheckOutcome, KernelError> {
        let f = f5();
        let rk = r5_components(order, memo);
        let t1 = jq_in(&f, &[(5, 1, 1), (5, 0, 2), (5, 2, -2)], order)?
            .scale(&f.neg(&zeta_sum(&f, &[4, 1])));
        let coeff = f.add(
            &f.scale_rat(&zeta_sum(&f, &[3, 2]), &qrank_core::ring::rat(2, 1)),
            &f.one(),
        );
        let t2 = ramanujan_psi(&IntRing, order + 1)?.embed(f).scale(&coeff).shift(-1);
        let rhs = t1.add(&t2).truncate_to(order)?;
        Ok(cmp(&rk[3].truncate_to(order)?, &rhs, order))
    };
    run().unwrap_or_else(err)
}

/// The full Lost Notebook 5-dissection of R(zeta, q), with the A, B, C, D
/// products built directly from their base-q^5 Pochhammer definitions, and
/// integrality over Z\[zeta\] asserted on both sides.
pub fn ram_full(order: i64, memo: &Memo) -> CheckOutcome {
    let run = || -> Result<CheckOutcome, KernelError> {
        let f = f5();
        let lhs = memo.r_zeta5_q(order);
        let inner = order / 5 + 2;
        let [a, b, c, d] = ram_products(inner)?;
        let phi = ramanujan_phi(&IntRing, inner)?;
        let psi = ramanujan_psi(&IntRing, inner + 1)?;
        let up5 = |s: &QSeries<IntRing>| s.substitute_qpower(5).embed(f);

        let alpha = zeta_sum(&f, &[1, 4]); // zeta + zeta^{-1}
        let beta2 = zeta_sum(&f, &[2, 3]); // zeta^2 + zeta^{-2}
        let mut rhs = up5(&a);
        rhs = rhs.add(&up5(&phi).scale(&f.sub(&alpha, &f.from_i64(2))));
        rhs = rhs.add(&up5(&b).shift(1));
        rhs = rhs.add(&up5(&c).shift(2).scale(&alpha));
        // - (zeta+zeta^{-1}) q^3 { D(q^5) - (zeta^2+zeta^{-2}-2) psi(q^5)/q^5 }
        let brace = up5(&d).sub(
            &up5(&psi)
                .shift(-5)
                .scale(&f.sub(&beta2, &f.from_i64(2))),
        );
        rhs = rhs.sub(&brace.shift(3).scale(&alpha));
        let rhs = rhs.truncate_to(order)?;

        if !lhs.is_integral() || !rhs.is_integral() {
            return Ok(CheckOutcome::Fail {
                exponent: -1,
                lhs: "coefficients in Z[zeta]".into(),
                rhs: "a non-integral coefficient appeared".into(),
            });
        }
        Ok(cmp(&lhs, &rhs, order))
    };
    run().unwrap_or_else(err)
}

/// The two assemblies of (1+z)(z^2q)(z^{-2}q)(q)_inf R(z,q) at z = zeta
/// agree: Pochhammer form and j(zeta^2;q)/(1-zeta) form.
pub fn rtwid_def(order: i64, memo: &Memo) -> CheckOutcome {
    let run = || -> Result<CheckOutcome, KernelError> {
        let f = f5();
        let lhs = rtwid_zeta5(order, memo)?;
        let scale = f.try_inv(&f.sub(&f.one(), &f.zeta(1)))?;
        let rhs = jw(&f, 2, 0, 1, order)?
            .mul(&memo.r_zeta5_q(order))
            .scale(&scale)
            .truncate_to(order)?;
        Ok(cmp(&lhs, &rhs, order))
    };
    run().unwrap_or_else(err)
}

/// U_{5,0} of the (1+zeta)-kernel product =
/// (1+zeta) J_5^2 J_{5,2}^2/J_{5,1}^2 - (2+2zeta+zeta^3)(Rt(q,q^5) - J_{5,2}).
pub fn u50_lemma(order: i64, memo: &Memo) -> CheckOutcome {
    let run = || -> Result<CheckOutcome, KernelError> {
        let f = f5();
        let lhs = rtwid_zeta5(5 * order, memo)?.atkin_u(5, 0).truncate_to(order)?;
        let t1 = jq_in(&f, &[(5, 0, 2), (5, 2, 2), (5, 1, -2)], order)?
            .scale(&f.add(&f.one(), &f.zeta(1)));
        let rt = rtwid(&IntRing, ParamSpec::q(1), 5, order)?.embed(f);
        let j52 = jq_in(&f, &[(5, 2, 1)], order)?;
        let coeff = f.add(
            &f.add(&f.from_i64(2), &f.scale_rat(&f.zeta(1), &qrank_core::ring::rat(2, 1))),
            &f.zeta(3),
        );
        let rhs = t1.sub(&rt.sub(&j52).scale(&coeff)).truncate_to(order)?;
        Ok(cmp(&lhs, &rhs, order))
    };
    run().unwrap_or_else(err)
}

/// U_{5,4} of the same product =
/// (zeta^2+zeta^4) J_5^2 J_{5,1}^2/J_{5,2}^2 - (2+2zeta+zeta^3)(Rt(q^2,q^5) - J_{5,1})/q.
pub fn u54_lemma(order: i64, memo: &Memo) -> CheckOutcome {
    let run = || -> Result<CheckOutcome, KernelError> {
        let f = f5();
        let lhs = rtwid_zeta5(5 * order + 4, memo)?.atkin_u(5, 4).truncate_to(order)?;
        let t1 = jq_in(&f, &[(5, 0, 2), (5, 1, 2), (5, 2, -2)], order)?
            .scale(&zeta_sum(&f, &[2, 4]));
        let rt = rtwid(&IntRing, ParamSpec::q(2), 5, order + 1)?.embed(f);
        let j51 = jq_in(&f, &[(5, 1, 1)], order + 1)?;
        let coeff = f.add(
            &f.add(&f.from_i64(2), &f.scale_rat(&f.zeta(1), &qrank_core::ring::rat(2, 1))),
            &f.zeta(3),
        );
        let rhs = t1.sub(&rt.sub(&j51).scale(&coeff).shift(-1)).truncate_to(order)?;
        Ok(cmp(&lhs, &rhs, order))
    };
    run().unwrap_or_else(err)
}

/// The reindexing identities behind the U-operator lemmas:
/// V(5n+1, -5j-1) = 5(5V(n,j) - n) and V(5n+3, -5j-1) = 5(5V(n,j) + n + 1),
/// plus the two j-range equivalences, verified exactly on a grid.
#[allow(clippy::int_plus_one)] // the conditions transcribe the displayed inequalities
pub fn v513_reindex(order: i64, _memo: &Memo) -> CheckOutcome {
    use qrank_core::hecke::v_quadratic as v;
    let grid = order.max(40);
    for n in -grid..=grid {
        for j in -grid..=grid {
            if v(5 * n + 1, -5 * j - 1) != 5 * (5 * v(n, j) - n) {
                return CheckOutcome::Fail {
                    exponent: n,
                    lhs: format!("V(5n+1,-5j-1) at (n,j)=({n},{j}): {}", v(5 * n + 1, -5 * j - 1)),
                    rhs: format!("{}", 5 * (5 * v(n, j) - n)),
                };
            }
            if v(5 * n + 3, -5 * j - 1) != 5 * (5 * v(n, j) + n + 1) {
                return CheckOutcome::Fail {
                    exponent: n,
                    lhs: format!("V(5n+3,-5j-1) at (n,j)=({n},{j}): {}", v(5 * n + 3, -5 * j - 1)),
                    rhs: format!("{}", 5 * (5 * v(n, j) + n + 1)),
                };
            }
        }
    }
    // range equivalences for the two substituted index sets
    for n in 0..=grid {
        let m = n / 2;
        for j in -(grid + 2)..=(grid + 2) {
            let in1 = (-((5 * n + 1) / 2) <= -5 * j - 1) && (-5 * j - 1 <= (5 * n + 1) / 2);
            let want1 = if n % 2 == 0 { -m <= j && j < m } else { -m <= j && j <= m };
            if in1 != want1 {
                return CheckOutcome::Fail {
                    exponent: n,
                    lhs: format!("range test (5n+1) at (n,j)=({n},{j}): {in1}"),
                    rhs: format!("{want1}"),
                };
            }
            let in2 = (-((5 * n + 3) / 2) <= -5 * j - 1) && (-5 * j - 1 <= (5 * n + 3) / 2);
            let want2 = if n % 2 == 0 { -m <= j && j <= m } else { -m - 1 <= j && j <= m };
            if in2 != want2 {
                return CheckOutcome::Fail {
                    exponent: n,
                    lhs: format!("range test (5n+3) at (n,j)=({n},{j}): {in2}"),
                    rhs: format!("{want2}"),
                };
            }
        }
    }
    CheckOutcome::Pass { order: grid }
}

/// A_{5,0} of the S2-filtered double sum = Rt(q, q^5) - J_{5,2}, with
/// Rt(q,q^5) built two independent ways (product route and scaled lattice).
pub fn a50(order: i64, _memo: &Memo) -> CheckOutcome {
    let run = || -> Result<CheckOutcome, KernelError> {
        let work = 5 * order;
        let filtered = residue_filtered_sum(
            &IntRing,
            HrName::Hre12,
            PartSel::All,
            5,
            &S2,
            ParamSpec::one(),
            work,
        )?;
        let lhs = filtered.atkin_a(5, 0)?.truncate_to(order)?;
        let rt_prod = rtwid(&IntRing, ParamSpec::q(1), 5, order)?;
        let rt_lattice = hr_rhs_base(&IntRing, HrName::Rankid3, ParamSpec::q(1), 5, order)?;
        let mut out = cmp(&rt_prod, &rt_lattice, order);
        let j52 = jq(&IntRing, &[(5, 2, 1)], order)?;
        out = out.and(|| cmp(&lhs, &rt_prod.sub(&j52), order));
        Ok(out)
    };
    run().unwrap_or_else(err)
}

/// The S1-filtered double sum keeps exactly the exponents divisible by 5 and
/// equals U*_{5,0}(E^2) = J_25^2 J_{25,10}^2 / J_{25,5}^2.
pub fn bigsum50(order: i64, _memo: &Memo) -> CheckOutcome {
    let run = || -> Result<CheckOutcome, KernelError> {
        let work = 5 * order;
        let filtered = residue_filtered_sum(
            &IntRing,
            HrName::Hre12,
            PartSel::All,
            5,
            &S1,
            ParamSpec::one(),
            work,
        )?;
        let e = euler_e(&IntRing, work);
        let star = e.mul(&e).atkin_u_star(5, 0).truncate_to(work)?;
        let mut out = cmp(&filtered, &star, work);
        let prods = jq(&IntRing, &[(25, 0, 2), (25, 10, 2), (25, 5, -2)], work)?;
        out = out.and(|| cmp(&filtered, &prods, work));
        Ok(out)
    };
    run().unwrap_or_else(err)
}

/// Rt(q, q^5) = J_{5,2} (1 + phi(q)).
pub fn rtwid_phi(order: i64, _memo: &Memo) -> CheckOutcome {
    let run = || -> Result<CheckOutcome, KernelError> {
        let lhs = rtwid(&IntRing, ParamSpec::q(1), 5, order)?;
        let phi = ramanujan_phi(&IntRing, order)?;
        let rhs = jq(&IntRing, &[(5, 2, 1)], order)?
            .mul(&QSeries::one(IntRing, order).add(&phi))
            .truncate_to(order)?;
        Ok(cmp(&lhs, &rhs, order))
    };
    run().unwrap_or_else(err)
}

/// U_{5,0} of the (1+zeta)-kernel product = (1+zeta) J_{5,2} R_0(q).
pub fn u50_left(order: i64, memo: &Memo) -> CheckOutcome {
    let run = || -> Result<CheckOutcome, KernelError> {
        let f = f5();
        let lhs = rtwid_zeta5(5 * order, memo)?.atkin_u(5, 0).truncate_to(order)?;
        let r0 = r5_components(order, memo)[0].truncate_to(order)?;
        let rhs = jq_in(&f, &[(5, 2, 1)], order)?
            .mul(&r0)
            .scale(&f.add(&f.one(), &f.zeta(1)))
            .truncate_to(order)?;
        Ok(cmp(&lhs, &rhs, order))
    };
    run().unwrap_or_else(err)
}
