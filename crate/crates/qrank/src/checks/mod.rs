//! The named verifications, grouped the way the underlying material groups
//! them: engine self-consistency, the four Hecke-Rogers identities, the
//! Appell-Lerch suite, the mod-5 dissection pipeline, the Lost-Notebook
//! identity, and the mod-7 system.

pub mod appell;
pub mod engine;
pub mod hecke;
pub mod mod5;
pub mod mod7;
pub mod ramanujan;

use qrank_core::error::KernelError;
use qrank_core::series::{series_equal, QSeries, SeriesCmp};
use qrank_core::theta::{j_b, j_ba, jtheta, mul_pochhammer, ParamSpec, ThetaForm};
use qrank_core::{CycloField, CycloNum, IntRing, Ring};

use crate::result::CheckOutcome;

pub(crate) fn f5() -> CycloField {
    CycloField::new(5)
}

pub(crate) fn f7() -> CycloField {
    CycloField::new(7)
}

/// zeta^a + zeta^b + ... in the given field.
pub(crate) fn zeta_sum(field: &CycloField, pows: &[i64]) -> CycloNum {
    let mut acc = field.zero();
    for &k in pows {
        acc = field.add(&acc, &field.zeta(k));
    }
    acc
}

pub(crate) fn err(e: KernelError) -> CheckOutcome {
    CheckOutcome::Error { reason: e.to_string() }
}

/// Exact comparison as a check outcome.
pub(crate) fn cmp<R: Ring>(lhs: &QSeries<R>, rhs: &QSeries<R>, order: i64) -> CheckOutcome {
    match series_equal(lhs, rhs, order) {
        Ok(SeriesCmp::Pass { order }) => CheckOutcome::Pass { order },
        Ok(SeriesCmp::Fail { exponent, lhs, rhs }) => CheckOutcome::Fail { exponent, lhs, rhs },
        Err(e) => err(e),
    }
}

/// Comparison that additionally demands each side shows life: at least one
/// nonzero coefficient up to `order`. Guards specialization checks against
/// silently degenerating to 0 = 0.
pub(crate) fn cmp_nonzero<R: Ring>(
    lhs: &QSeries<R>,
    rhs: &QSeries<R>,
    order: i64,
) -> Result<CheckOutcome, KernelError> {
    if !lhs.has_nonzero_up_to(order) || !rhs.has_nonzero_up_to(order) {
        return Err(KernelError::NonGeneric(
            "specialization degenerates to 0 = 0".into(),
        ));
    }
    Ok(cmp(lhs, rhs, order))
}

/// Run `eval` over a specialization set, skipping non-generic points, until
/// `need` of them have been verified. Any hard failure reports immediately.
pub(crate) fn rotate_specs<T: Copy + std::fmt::Debug>(
    candidates: &[T],
    need: usize,
    order: i64,
    mut eval: impl FnMut(T) -> Result<CheckOutcome, KernelError>,
) -> CheckOutcome {
    let mut passed = 0usize;
    for &cand in candidates {
        match eval(cand) {
            Ok(CheckOutcome::Pass { .. }) => {
                passed += 1;
                if passed >= need {
                    return CheckOutcome::Pass { order };
                }
            }
            Ok(fail @ CheckOutcome::Fail { .. }) => return fail,
            Ok(e @ CheckOutcome::Error { .. }) => return e,
            Err(KernelError::NonGeneric(_)) => continue,
            Err(e) => return err(e),
        }
    }
    CheckOutcome::Error {
        reason: format!(
            "only {passed} of the required {need} specializations were generic"
        ),
    }
}

/// J-product combination: entries (base, offset, exponent), offset 0 meaning
/// the one-parameter product J_base.
pub(crate) fn jq<R: Ring>(
    ring: &R,
    factors: &[(i64, i64, i64)],
    trunc: i64,
) -> Result<QSeries<R>, KernelError> {
    let mut acc = QSeries::one(ring.clone(), trunc);
    for &(b, a, e) in factors {
        let j = if a == 0 { j_b(ring, b, trunc) } else { j_ba(ring, b, a, trunc) };
        let f = if e >= 0 { j } else { j.inv()? };
        for _ in 0..e.abs() {
            acc = acc.mul(&f).truncate_to(trunc)?;
        }
    }
    Ok(acc)
}

/// (u q; q)_inf (u^{-1} q; q)_inf (q; q)_inf for a unit u = zeta^a: the
/// product that multiplies R in the base-q rank identities.
pub(crate) fn unit_kernel_product(
    field: &CycloField,
    a: i64,
    trunc: i64,
) -> Result<QSeries<CycloField>, KernelError> {
    let one = QSeries::one(*field, trunc);
    unit_kernel_times(field, a, &one, trunc)
}

/// Multiply a series by (zeta^a q;q)_inf (zeta^{-a} q;q)_inf (q;q)_inf,
/// factor by factor (linear in the truncation per factor, no dense product).
pub(crate) fn unit_kernel_times(
    field: &CycloField,
    a: i64,
    series: &QSeries<CycloField>,
    trunc: i64,
) -> Result<QSeries<CycloField>, KernelError> {
    let mut s = mul_pochhammer(field, series, &ParamSpec::wq(a, 1), 1, trunc)?;
    s = mul_pochhammer(field, &s, &ParamSpec::wq(-a, 1), 1, trunc)?;
    mul_pochhammer(field, &s, &ParamSpec::q(1), 1, trunc)
}

/// (1+z)(z^2 Q; Q)_inf (z^{-2} Q; Q)_inf (Q; Q)_inf R(z; Q) for Q = q^big_q
/// and a monomial z — the two-variable combination behind the U-operator
/// lemmas, on any base.
pub(crate) fn rtwid<R: Ring>(
    ring: &R,
    z: ParamSpec,
    big_q: i64,
    trunc: i64,
) -> Result<QSeries<R>, KernelError> {
    use qrank_core::rank::{rank_series, RankForm};
    qrank_core::appell::with_precision(trunc, |wk| {
        let r = rank_series(ring, z, big_q, RankForm::Quotient, wk)?;
        let mut body = mul_pochhammer(ring, &r, &z.pow(2).times_q(big_q), big_q, wk)?;
        body = mul_pochhammer(ring, &body, &z.pow(-2).times_q(big_q), big_q, wk)?;
        body = mul_pochhammer(ring, &body, &ParamSpec::q(big_q), big_q, wk)?;
        if z.q_exp == 0 {
            Ok(body.scale(&ring.add(&ring.one(), &z.unit_in(ring))))
        } else {
            Ok(body.mul_binomial(&z.unit_in(ring), z.q_exp))
        }
    })
}

/// j(zeta^a q^e; q^base) in a cyclotomic field, product form.
pub(crate) fn jw(
    field: &CycloField,
    a: i64,
    e: i64,
    base: i64,
    trunc: i64,
) -> Result<QSeries<CycloField>, KernelError> {
    jtheta(field, &ParamSpec::wq(a, e), base, ThetaForm::Product, trunc)
}

/// Embed an integer J-product combination into a cyclotomic field.
pub(crate) fn jq_in(
    field: &CycloField,
    factors: &[(i64, i64, i64)],
    trunc: i64,
) -> Result<QSeries<CycloField>, KernelError> {
    Ok(jq(&IntRing, factors, trunc)?.embed(*field))
}
