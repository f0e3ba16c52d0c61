//! The Appell-Lerch identity suite, verified at rotating specializations
//! z -> zeta^w q^t. Every comparison demands a nonzero coefficient on each
//! side, so a specialization that collapses an identity to 0 = 0 counts as
//! non-generic and rotates instead of passing vacuously.

use qrank_core::appell::{appell_m, f_abc, g_abc, with_precision, AppellSpec};
use qrank_core::error::KernelError;
use qrank_core::rank::{g_series, rank_series, RankForm};
use qrank_core::series::QSeries;
use qrank_core::theta::{j_b, jtheta, ParamSpec, ThetaForm};
use qrank_core::{CycloField, Ring};

use super::{cmp_nonzero, rotate_specs};
use crate::memo::Memo;
use crate::result::CheckOutcome;

type Mono = (i64, i64); // (zeta power, q power)

fn w(field: &CycloField, m: Mono) -> ParamSpec {
    let _ = field;
    ParamSpec::wq(m.0, m.1)
}

/// m(x, Q, z) = m(x, Q, Qz).
pub fn mid1a(order: i64, _memo: &Memo) -> CheckOutcome {
    let cands: &[(u32, Mono, i64, Mono)] = &[
        (5, (0, 1), 3, (1, 1)),
        (5, (1, 1), 3, (2, 1)),
        (5, (2, 2), 3, (1, 1)),
        (7, (3, 1), 3, (1, 1)),
        (5, (3, 1), 2, (1, 1)),
    ];
    rotate_specs(cands, 3, order, |(p, x, base, z)| {
        let f = CycloField::new(p);
        let (x, z) = (w(&f, x), w(&f, z));
        let a = appell_m(&f, &AppellSpec::new(x, base, z), order)?;
        let b = appell_m(&f, &AppellSpec::new(x, base, z.times_q(base)), order)?;
        cmp_nonzero(&a, &b, order)
    })
}

/// m(x, Q, z) = x^{-1} m(x^{-1}, Q, z^{-1}).
pub fn mid1b(order: i64, _memo: &Memo) -> CheckOutcome {
    let cands: &[(u32, Mono, i64, Mono)] = &[
        (5, (1, 1), 3, (2, 1)),
        (5, (0, 1), 3, (1, 1)),
        (5, (2, 2), 3, (1, 1)),
        (7, (3, 1), 3, (1, 1)),
    ];
    rotate_specs(cands, 3, order, |(p, x, base, z)| {
        let f = CycloField::new(p);
        let (x, z) = (w(&f, x), w(&f, z));
        let lhs = appell_m(&f, &AppellSpec::new(x, base, z), order)?;
        let xi = x.inv();
        let rhs = appell_m(&f, &AppellSpec::new(xi, base, z.inv()), order + xi.q_exp.abs())?
            .mul_monomial(&xi.unit_in(&f), xi.q_exp)
            .truncate_to(order)?;
        cmp_nonzero(&lhs, &rhs, order)
    })
}

/// m(Qx, Q, z) = 1 - x m(x, Q, z).
pub fn mid1c(order: i64, _memo: &Memo) -> CheckOutcome {
    let cands: &[(u32, Mono, i64, Mono)] = &[
        (5, (1, 1), 3, (2, 1)),
        (5, (0, 1), 3, (1, 1)),
        (5, (2, 1), 3, (1, 2)),
        (7, (3, 1), 3, (1, 1)),
        (5, (1, 1), 2, (2, 1)),
    ];
    rotate_specs(cands, 3, order, |(p, x, base, z)| {
        let f = CycloField::new(p);
        let (x, z) = (w(&f, x), w(&f, z));
        let lhs = appell_m(&f, &AppellSpec::new(x.times_q(base), base, z), order)?;
        let m = appell_m(&f, &AppellSpec::new(x, base, z), order + x.q_exp.abs())?;
        let rhs = QSeries::one(f, order)
            .sub(&m.mul_monomial(&x.unit_in(&f), x.q_exp).truncate_to(order)?);
        cmp_nonzero(&lhs, &rhs, order)
    })
}

/// The change-of-z formula:
/// m(x,Q,z1) - m(x,Q,z0) = z0 (Q;Q)^3 j(z1/z0;Q) j(x z0 z1;Q)
///                         / (j(z0;Q) j(z1;Q) j(x z0;Q) j(x z1;Q)).
pub fn mid1d(order: i64, _memo: &Memo) -> CheckOutcome {
    let cands: &[(u32, Mono, i64, Mono, Mono)] = &[
        (5, (1, 1), 3, (2, 1), (3, 2)),
        (5, (0, 1), 3, (1, 1), (2, 2)),
        (7, (1, 1), 3, (2, 1), (3, 2)),
        (5, (1, 2), 3, (4, 1), (2, 1)),
        (5, (2, 1), 2, (1, 1), (3, 2)),
    ];
    rotate_specs(cands, 3, order, |(p, x, base, z1, z0)| {
        let f = CycloField::new(p);
        let (x, z1, z0) = (w(&f, x), w(&f, z1), w(&f, z0));
        let lhs = appell_m(&f, &AppellSpec::new(x, base, z1), order)?
            .sub(&appell_m(&f, &AppellSpec::new(x, base, z0), order)?);
        let rhs = with_precision(order, |wk| {
            let jp = |arg: ParamSpec| jtheta(&f, &arg, base, ThetaForm::Product, wk);
            let e3 = {
                let e = j_b(&f, base, wk);
                e.mul(&e).mul(&e)
            };
            let numer = e3
                .mul(&jp(z1.div(z0))?)
                .mul(&jp(x.mul(z0).mul(z1))?);
            let mut denom = jp(z0)?.mul(&jp(z1)?).mul(&jp(x.mul(z0))?).mul(&jp(x.mul(z1))?);
            denom.trim();
            if denom.is_zero_series() {
                return Err(KernelError::NonGeneric("theta in denominator vanishes".into()));
            }
            let quot = numer.mul(&denom.inv()?);
            Ok(quot.mul_monomial(&z0.unit_in(&f), z0.q_exp))
        })?;
        cmp_nonzero(&lhs, &rhs, order)
    })
}

/// The three-term theta relation: for units a, b, c, d,
/// j(d)j(b/c)j(abc)j(ad) - j(b)j(d/c)j(acd)j(ab) + (b/c) j(c)j(abd)j(ac)j(d/b) = 0.
pub fn weier(order: i64, _memo: &Memo) -> CheckOutcome {
    // every power of zeta sums to 0 mod p on some of the twelve argument
    // combinations when the base is q itself, so these specializations put
    // the thetas on base q^B with q-powers chosen to dodge the zeros
    let cands: &[(u32, i64, Mono, Mono, Mono, Mono)] = &[
        (5, 3, (1, 1), (2, 1), (3, 2), (4, 3)),
        (5, 3, (0, 1), (1, 2), (4, 1), (2, 2)),
        (7, 3, (2, 2), (3, 1), (5, 3), (1, 1)),
        (7, 3, (1, 1), (4, 2), (2, 1), (3, 3)),
        (5, 4, (1, 1), (2, 3), (3, 1), (4, 2)),
    ];
    rotate_specs(cands, 3, order, |(p, base, a, b, c, d)| {
        let f = CycloField::new(p);
        let (a, b, c, d) = (w(&f, a), w(&f, b), w(&f, c), w(&f, d));
        let quad = |args: [ParamSpec; 4], target: i64| -> Result<QSeries<CycloField>, KernelError> {
            with_precision(target, |wk| {
                let mut acc = QSeries::one(f, wk);
                for arg in args {
                    acc = acc.mul(&jtheta(&f, &arg, base, ThetaForm::Product, wk)?);
                }
                Ok(acc)
            })
        };
        let t1 = quad([d, b.div(c), a.mul(b).mul(c), a.mul(d)], order)?;
        let t2 = quad([b, d.div(c), a.mul(c).mul(d), a.mul(b)], order)?;
        let bc = b.div(c);
        let t3 = quad([c, a.mul(b).mul(d), a.mul(c), d.div(b)], order + bc.q_exp.abs())?
            .mul_monomial(&bc.unit_in(&f), bc.q_exp)
            .truncate_to(order)?;
        if !t1.has_nonzero_up_to(order) || !t2.has_nonzero_up_to(order) || !t3.has_nonzero_up_to(order)
        {
            return Err(KernelError::NonGeneric("a theta term vanishes".into()));
        }
        let lhs = t1.sub(&t2).add(&t3).truncate_to(order)?;
        let zero = QSeries::zero(f, order);
        Ok(super::cmp(&lhs, &zero, order))
    })
}

/// Per-term builder for identities written in a formal z later pinned to
/// zeta^w q^t: prefactor z^k times j(arg(z); q) times m(x(z), q^3, zm(z)).
struct ZTerm {
    pre_z: i64,
    j_arg: ParamSpec,
    m_x: ParamSpec,
    m_z: ParamSpec,
    negate: bool,
}

fn z_term_value(
    f: &CycloField,
    t: &ZTerm,
    wz: i64,
    tz: i64,
    order: i64,
) -> Result<QSeries<CycloField>, KernelError> {
    let j_arg = t.j_arg.specialize_z(wz, tz);
    let m_x = t.m_x.specialize_z(wz, tz);
    let m_z = t.m_z.specialize_z(wz, tz);
    let pre = ParamSpec::zq(t.pre_z, 0).specialize_z(wz, tz);
    let val = with_precision(order + pre.q_exp.abs(), |wk| {
        let j = jtheta(f, &j_arg, 1, ThetaForm::Product, wk)?;
        let m = appell_m(f, &AppellSpec::new(m_x, 3, m_z), wk)?;
        Ok(j.mul(&m))
    })?;
    let mut out = val.mul_monomial(&pre.unit_in(f), pre.q_exp).truncate_to(order)?;
    if t.negate {
        out = out.neg();
    }
    Ok(out)
}

/// The four-term / two-term rearrangement lemma for base-q^3 Appell sums:
///
/// ```text
/// z j(z^{-1}q;q) m(q,q^3,z) + z j(z^{-2}q;q) m(z^3q,q^3,z^{-1})
///   + z^2 j(zq;q) m(q,q^3,z^{-1}) + z^2 j(z^2q;q) m(z^{-3}q,q^3,z)
/// = -j(z^2;q) m(z^{-3}q,q^3,z^2) + z j(z^2;q) m(z^3q,q^3,z^{-2})
/// ```
pub fn jzqm(order: i64, _memo: &Memo) -> CheckOutcome {
    let cands: &[(u32, i64, i64)] = &[(5, 1, 1), (7, 1, 2), (5, 1, 2), (5, 2, 1)];
    let lhs_terms = [
        ZTerm { pre_z: 1, j_arg: ParamSpec::zq(-1, 1), m_x: ParamSpec::q(1), m_z: ParamSpec::zq(1, 0), negate: false },
        ZTerm { pre_z: 1, j_arg: ParamSpec::zq(-2, 1), m_x: ParamSpec::zq(3, 1), m_z: ParamSpec::zq(-1, 0), negate: false },
        ZTerm { pre_z: 2, j_arg: ParamSpec::zq(1, 1), m_x: ParamSpec::q(1), m_z: ParamSpec::zq(-1, 0), negate: false },
        ZTerm { pre_z: 2, j_arg: ParamSpec::zq(2, 1), m_x: ParamSpec::zq(-3, 1), m_z: ParamSpec::zq(1, 0), negate: false },
    ];
    let rhs_terms = [
        ZTerm { pre_z: 0, j_arg: ParamSpec::zq(2, 0), m_x: ParamSpec::zq(-3, 1), m_z: ParamSpec::zq(2, 0), negate: true },
        ZTerm { pre_z: 1, j_arg: ParamSpec::zq(2, 0), m_x: ParamSpec::zq(3, 1), m_z: ParamSpec::zq(-2, 0), negate: false },
    ];
    rotate_specs(cands, 3, order, |(p, wz, tz)| {
        let f = CycloField::new(p);
        let mut lhs = QSeries::zero(f, order);
        for t in &lhs_terms {
            lhs = lhs.add(&z_term_value(&f, t, wz, tz, order)?);
        }
        let mut rhs = QSeries::zero(f, order);
        for t in &rhs_terms {
            rhs = rhs.add(&z_term_value(&f, t, wz, tz, order)?);
        }
        cmp_nonzero(&lhs, &rhs, order)
    })
}

/// R(z;q) = (1-z)(1 + z g(z,q)) at roots of unity.
pub fn rzq_g(order: i64, _memo: &Memo) -> CheckOutcome {
    let cands: &[(u32, i64)] = &[(5, 1), (5, 2), (7, 1), (7, 3)];
    rotate_specs(cands, 3, order, |(p, k)| {
        let f = CycloField::new(p);
        let z = ParamSpec::wq(k, 0);
        let lhs = rank_series(&f, z, 1, RankForm::Quotient, order)?;
        let g = g_series(&f, z, 1, order)?;
        let zu = z.unit_in(&f);
        let rhs = QSeries::one(f, order)
            .add(&g.scale(&zu))
            .scale(&f.sub(&f.one(), &zu));
        cmp_nonzero(&lhs, &rhs, order)
    })
}

/// g(z,q) = -z^{-2} m(z^{-3}q, q^3, z^2) - z^{-1} m(z^{-3}q^2, q^3, z^2).
pub fn g_m(order: i64, _memo: &Memo) -> CheckOutcome {
    let cands: &[(u32, i64, i64)] = &[(5, 1, 1), (5, 1, 2), (7, 1, 1), (5, 2, 1)];
    rotate_specs(cands, 3, order, |(p, wz, tz)| {
        let f = CycloField::new(p);
        let z = ParamSpec::wq(wz, tz);
        let lhs = g_series(&f, z, 1, order)?;
        let m1 = appell_m(
            &f,
            &AppellSpec::new(z.pow(-3).times_q(1), 3, z.pow(2)),
            order + 2 * tz.abs(),
        )?;
        let m2 = appell_m(
            &f,
            &AppellSpec::new(z.pow(-3).times_q(2), 3, z.pow(2)),
            order + 2 * tz.abs(),
        )?;
        let p2 = z.pow(-2);
        let p1 = z.pow(-1);
        let rhs = m1
            .mul_monomial(&p2.unit_in(&f), p2.q_exp)
            .neg()
            .sub(&m2.mul_monomial(&p1.unit_in(&f), p1.q_exp))
            .truncate_to(order)?;
        cmp_nonzero(&lhs, &rhs, order)
    })
}

/// The g-combination behind the (1+z)-kernel identity equals
/// j(z^2;q) ( m(z^3q,q^3,z^{-2}) - z^{-1} m(z^{-3}q,q^3,z^2) ).
pub fn fgjzmid(order: i64, _memo: &Memo) -> CheckOutcome {
    let cands: &[(u32, i64, i64)] = &[(5, 1, 1), (5, 1, 2), (7, 1, 1), (5, 2, 1)];
    rotate_specs(cands, 3, order, |(p, wz, tz)| {
        let f = CycloField::new(p);
        let sp = |zp: i64, qe: i64| ParamSpec::zq(zp, qe).specialize_z(wz, tz);
        // g_{1,2,1}(z^{-1}q, z^{-2}q, q, z^{-1}, z) + z g_{1,2,1}(zq, z^2q, q, z, z^{-1})
        let g1 = g_abc(&f, 1, 2, 1, sp(-1, 1), sp(-2, 1), sp(-1, 0), sp(1, 0), order)?;
        let zm = sp(1, 0);
        let g2 = g_abc(&f, 1, 2, 1, sp(1, 1), sp(2, 1), sp(1, 0), sp(-1, 0), order + zm.q_exp.abs())?
            .mul_monomial(&zm.unit_in(&f), zm.q_exp)
            .truncate_to(order)?;
        let lhs = g1.add(&g2);

        let rhs = with_precision(order, |wk| {
            let j2 = jtheta(&f, &sp(2, 0), 1, ThetaForm::Product, wk)?;
            let ma = appell_m(&f, &AppellSpec::new(sp(3, 1), 3, sp(-2, 0)), wk)?;
            let mb = appell_m(&f, &AppellSpec::new(sp(-3, 1), 3, sp(2, 0)), wk)?;
            let zi = sp(-1, 0);
            let diff = ma.sub(&mb.mul_monomial(&zi.unit_in(&f), zi.q_exp));
            Ok(j2.mul(&diff))
        })?;
        cmp_nonzero(&lhs, &rhs, order)
    })
}

/// f_{1,2,1}(x,y,q) = g_{1,2,1}(x,y,q, y/x, x/y) for generic x, y.
///
/// The z1 slot is y/x, the form the derivation of the g-combination actually
/// substitutes; low-order oracle data rejects y/x^2 already at the constant
/// term.
pub fn himo_f121(order: i64, _memo: &Memo) -> CheckOutcome {
    let cands: &[(u32, Mono, Mono)] = &[
        (5, (-1, 1), (-2, 1)),
        (5, (1, 1), (2, 1)),
        (7, (-1, 1), (-2, 1)),
        (5, (2, 1), (4, 1)),
    ];
    rotate_specs(cands, 3, order, |(p, xm, ym)| {
        let f = CycloField::new(p);
        let (x, y) = (w(&f, xm), w(&f, ym));
        let lhs = f_abc(&f, 1, 2, 1, x, y, order)?;
        let z1 = y.div(x);
        let z0 = x.div(y);
        let rhs = g_abc(&f, 1, 2, 1, x, y, z1, z0, order)?;
        cmp_nonzero(&lhs, &rhs, order)
    })
}
