//! The four two-variable Hecke-Rogers identities for the rank generating
//! function, their z = 1 degenerations, and the instantiated theta-kernel
//! identity that proves the base-q^2 one.

use qrank_core::appell::f_abc;
use qrank_core::hecke::{hr_lhs, hr_rhs, HrName};
use qrank_core::ring::legendre3;
use qrank_core::series::QSeries;
use qrank_core::theta::{j_b, jtheta, ParamSpec, ThetaForm};
use qrank_core::{IntRing, LaurentRing, RatRing, Ring};

use super::{cmp, err, jq};
use crate::memo::Memo;
use crate::result::CheckOutcome;

fn zr() -> LaurentRing<RatRing> {
    LaurentRing::new(RatRing)
}

fn rank_identity(name: HrName, order: i64, check_integral: bool) -> CheckOutcome {
    let run = || -> Result<CheckOutcome, qrank_core::KernelError> {
        let ring = zr();
        let z = ParamSpec::zq(1, 0);
        let lhs = hr_lhs(&ring, name, z, order)?;
        let rhs = hr_rhs(&ring, name, z, order)?;
        if check_integral {
            // the sum accumulates in halves; the assembled coefficients must
            // still be integers
            for (e, poly) in rhs.terms() {
                for (zp, c) in poly.iter() {
                    if !c.is_integer() {
                        return Ok(CheckOutcome::Fail {
                            exponent: e,
                            lhs: format!("coefficient of z^{zp}: {c}"),
                            rhs: "an integer".into(),
                        });
                    }
                }
            }
        }
        Ok(cmp(&lhs, &rhs, order))
    };
    run().unwrap_or_else(err)
}

pub fn rankid1(order: i64, _memo: &Memo) -> CheckOutcome {
    rank_identity(HrName::Rankid1, order, true)
}

pub fn rankid2(order: i64, _memo: &Memo) -> CheckOutcome {
    rank_identity(HrName::Rankid2, order, false)
}

pub fn rankid3(order: i64, _memo: &Memo) -> CheckOutcome {
    rank_identity(HrName::Rankid3, order, false)
}

pub fn rankid4(order: i64, _memo: &Memo) -> CheckOutcome {
    rank_identity(HrName::Rankid4, order, false)
}

/// f_{1,2,1}(z^{-1}q, z^{-2}q, q) + z f_{1,2,1}(zq, z^2q, q) equals the
/// two-variable double sum on the right of the (1+z)-kernel identity,
/// symbolically in z.
pub fn fhrid(order: i64, _memo: &Memo) -> CheckOutcome {
    let run = || -> Result<CheckOutcome, qrank_core::KernelError> {
        let ring = zr();
        let a = f_abc(&ring, 1, 2, 1, ParamSpec::zq(-1, 1), ParamSpec::zq(-2, 1), order)?;
        let b = f_abc(&ring, 1, 2, 1, ParamSpec::zq(1, 1), ParamSpec::zq(2, 1), order)?;
        let z = ring.z_pow(1).unwrap();
        let lhs = a.add(&b.scale(&z));
        let rhs = hr_rhs(&ring, HrName::Rankid3, ParamSpec::zq(1, 0), order)?;
        Ok(cmp(&lhs, &rhs, order))
    };
    run().unwrap_or_else(err)
}

/// Rogers' classical double-sum expansion of E(q)^2, and its agreement with
/// the two-variable identity at z = 1.
pub fn hre_eta2(order: i64, _memo: &Memo) -> CheckOutcome {
    let run = || -> Result<CheckOutcome, qrank_core::KernelError> {
        let e2 = hr_lhs(&IntRing, HrName::HreEta2, ParamSpec::one(), order)?;
        let sum = hr_rhs(&IntRing, HrName::HreEta2, ParamSpec::one(), order)?;
        let mut out = cmp(&sum, &e2, order);
        let at_one = hr_rhs(&RatRing, HrName::Rankid1, ParamSpec::one(), order)?;
        let as_int = at_one.map_ring(IntRing, |c| c.to_integer());
        out = out.and(|| cmp(&as_int, &e2, order));
        Ok(out)
    };
    run().unwrap_or_else(err)
}

/// The one-sided form of the same E(q)^2 double sum.
pub fn hre12(order: i64, _memo: &Memo) -> CheckOutcome {
    let run = || -> Result<CheckOutcome, qrank_core::KernelError> {
        let e2 = hr_lhs(&IntRing, HrName::Hre12, ParamSpec::one(), order)?;
        let sum = hr_rhs(&IntRing, HrName::Hre12, ParamSpec::one(), order)?;
        Ok(cmp(&sum, &e2, order))
    };
    run().unwrap_or_else(err)
}

/// theta_4(q) E(q) = E^3/(q^2;q^2)_inf = the z = 1 case of the base-q^2
/// identity, three independent builds.
pub fn t4e(order: i64, _memo: &Memo) -> CheckOutcome {
    let run = || -> Result<CheckOutcome, qrank_core::KernelError> {
        let prod = hr_lhs(&IntRing, HrName::T4e, ParamSpec::one(), order)?;
        let sum = hr_rhs(&IntRing, HrName::T4e, ParamSpec::one(), order)?;
        let mut out = cmp(&sum, &prod, order);
        let eta_quot = jq(&IntRing, &[(1, 0, 3), (2, 0, -1)], order)?;
        out = out.and(|| cmp(&eta_quot, &prod, order));
        Ok(out)
    };
    run().unwrap_or_else(err)
}

/// The theta-kernel bilateral identity at the parameters that produce the
/// base-q^2 rank identity: (i) the closed form of j(q^{2-2n}; q^6) as a
/// signed power of q times (q^2;q^2)_inf, and (ii) the reindexed
/// Legendre-weighted double sum equating the assembled product side.
pub fn jbt_k2(order: i64, _memo: &Memo) -> CheckOutcome {
    let run = || -> Result<CheckOutcome, qrank_core::KernelError> {
        let mut out = CheckOutcome::Pass { order };
        // (i): for a range of n, j(q^{2-2n}; q^6) = (-1)^{n+1} leg3(n-1)
        //      q^{-n(n+1)/3} (q^2;q^2)_inf
        let probe = order.min(30);
        for n in 0..=12i64 {
            let lhs = jtheta(&IntRing, &ParamSpec::q(2 - 2 * n), 6, ThetaForm::Sum, probe)?;
            let sign = qrank_core::ring::sign_pow(n + 1) * legendre3(n - 1);
            let rhs = if sign == 0 {
                QSeries::zero(IntRing, probe)
            } else {
                debug_assert_eq!((n * (n + 1)) % 3, 0);
                j_b(&IntRing, 2, probe + n * (n + 1) / 3)
                    .mul_monomial(&IntRing.from_i64(sign), -n * (n + 1) / 3)
                    .truncate_to(probe)?
            };
            out = out.and(|| cmp(&lhs, &rhs, probe));
        }

        // (ii): sum_{n>=0} sum_{|m| <= n/3} (-1)^{m+1} leg3(n-1)
        //       q^{n(n+1)/6 - m^2} z^m  ==  (zq)(z^{-1}q)(q)_inf R(z;q^2)
        let ring = zr();
        let mut acc = QSeries::zero(ring, order);
        let mut n = 0i64;
        let mut beyond = 0;
        loop {
            let row_min = n * (n + 1) / 6 - (n / 3) * (n / 3);
            if row_min > order {
                beyond += 1;
                if beyond >= 2 {
                    break;
                }
            } else {
                beyond = 0;
            }
            let lg = legendre3(n - 1);
            if lg != 0 {
                // n = 0 or 2 mod 3 makes n(n+1) divisible by both 2 and 3
                debug_assert_eq!((n * (n + 1)) % 6, 0);
                for m in -(n / 3)..=(n / 3) {
                    let e = n * (n + 1) / 6 - m * m;
                    if e > order {
                        continue;
                    }
                    assert!(e >= 0, "negative exponent in reindexed sum");
                    let sign = -qrank_core::ring::sign_pow(m) * lg;
                    let c = ring.monomial(m, qrank_core::ring::rat(sign, 1));
                    acc = acc.add(&QSeries::monomial_scaled(ring, c, e, order));
                }
            }
            n += 1;
            if n > 4_000_000 {
                return Err(qrank_core::KernelError::Bound("row cap".into()));
            }
        }
        let lhs = hr_lhs(&ring, HrName::Rankid2, ParamSpec::zq(1, 0), order)?;
        out = out.and(|| cmp(&acc, &lhs, order));
        Ok(out)
    };
    run().unwrap_or_else(err)
}
