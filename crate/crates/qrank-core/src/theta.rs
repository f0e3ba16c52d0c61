//! Pochhammer symbols, the theta function j(z;q), and J-products.
//!
//! The theta function has two independent implementations on purpose:
//!
//! - product form: j(z;q) = (z;q)_inf (z^{-1}q;q)_inf (q;q)_inf
//! - sum form:     j(z;q) = sum_{n in Z} (-1)^n z^n q^{n(n-1)/2}
//!
//! Every theta value used anywhere can be computed by either route, and the
//! harness cross-validates them; an indexing slip in one cannot pass silently.
//!
//! Arguments are [`ParamSpec`] monomials `sign * zeta^a * z^b * q^e` — every
//! argument appearing in the verified identities has this shape.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::cyclo::CycloField;
use crate::error::KernelError;
use crate::ring::{sign_pow, IntRing, Ring};
use crate::series::QSeries;

/// A monomial argument: `sign * zeta^zeta_pow * z^z_exp * q^q_exp`.
///
/// `zeta` is the distinguished root of unity of the target coefficient ring
/// (its power is reduced there), and `z` is the formal rank variable of
/// Laurent-polynomial coefficient rings. Embedding a spec into a ring that
/// lacks the needed symbol is a programming error and panics.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ParamSpec {
    pub negated: bool,
    pub zeta_pow: i64,
    pub z_exp: i64,
    pub q_exp: i64,
}

#[allow(clippy::should_implement_trait)] // monomial algebra on a Copy spec, by value
impl ParamSpec {
    pub const fn one() -> Self {
        ParamSpec { negated: false, zeta_pow: 0, z_exp: 0, q_exp: 0 }
    }

    /// q^e
    pub const fn q(e: i64) -> Self {
        ParamSpec { negated: false, zeta_pow: 0, z_exp: 0, q_exp: e }
    }

    /// z^b * q^e
    pub const fn zq(b: i64, e: i64) -> Self {
        ParamSpec { negated: false, zeta_pow: 0, z_exp: b, q_exp: e }
    }

    /// zeta^a * q^e
    pub const fn wq(a: i64, e: i64) -> Self {
        ParamSpec { negated: false, zeta_pow: a, z_exp: 0, q_exp: e }
    }

    pub fn negate(self) -> Self {
        ParamSpec { negated: !self.negated, ..self }
    }

    pub fn mul(self, other: Self) -> Self {
        ParamSpec {
            negated: self.negated ^ other.negated,
            zeta_pow: self.zeta_pow + other.zeta_pow,
            z_exp: self.z_exp + other.z_exp,
            q_exp: self.q_exp + other.q_exp,
        }
    }

    pub fn inv(self) -> Self {
        ParamSpec {
            negated: self.negated,
            zeta_pow: -self.zeta_pow,
            z_exp: -self.z_exp,
            q_exp: -self.q_exp,
        }
    }

    pub fn div(self, other: Self) -> Self {
        self.mul(other.inv())
    }

    pub fn pow(self, k: i64) -> Self {
        ParamSpec {
            negated: self.negated && k.rem_euclid(2) == 1,
            zeta_pow: self.zeta_pow * k,
            z_exp: self.z_exp * k,
            q_exp: self.q_exp * k,
        }
    }

    pub fn times_q(self, e: i64) -> Self {
        ParamSpec { q_exp: self.q_exp + e, ..self }
    }

    /// Substitute the rank variable: z -> zeta^a * q^e.
    pub fn specialize_z(self, a: i64, e: i64) -> Self {
        ParamSpec {
            negated: self.negated,
            zeta_pow: self.zeta_pow + a * self.z_exp,
            z_exp: 0,
            q_exp: self.q_exp + e * self.z_exp,
        }
    }

    /// The unit part (everything except the q-power) as a ring element.
    pub fn unit_in<R: Ring>(&self, ring: &R) -> R::Elem {
        let w = ring
            .zeta_pow(self.zeta_pow)
            .unwrap_or_else(|| panic!("ring {ring:?} has no root of unity for {self:?}"));
        let z = ring
            .z_pow(self.z_exp)
            .unwrap_or_else(|| panic!("ring {ring:?} has no rank variable for {self:?}"));
        let u = ring.mul(&w, &z);
        if self.negated {
            ring.neg(&u)
        } else {
            u
        }
    }

    /// (unit)^k embedded in the ring.
    pub fn unit_pow_in<R: Ring>(&self, ring: &R, k: i64) -> R::Elem {
        self.pow(k).unit_in(ring)
    }

    pub fn describe(&self) -> String {
        format!(
            "{}w^{}*z^{}*q^{}",
            if self.negated { "-" } else { "" },
            self.zeta_pow,
            self.z_exp,
            self.q_exp
        )
    }
}

/// Length of a Pochhammer product.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PochLen {
    Finite(i64),
    Infinite,
}

/// (a; q^base)_len as a truncated series: the product of factors
/// (1 - a q^{base*k}). Finite lengths multiply exactly `len` factors;
/// the infinite product needs base >= 1 so factor orders eventually exceed
/// the truncation.
pub fn pochhammer<R: Ring>(
    ring: &R,
    a: &ParamSpec,
    len: PochLen,
    base: i64,
    trunc: i64,
) -> Result<QSeries<R>, KernelError> {
    let ks: Vec<i64> = match len {
        PochLen::Finite(n) => {
            assert!(n >= 0, "negative Pochhammer length");
            (0..n).collect()
        }
        PochLen::Infinite => {
            if base < 1 {
                return Err(KernelError::Bound(format!(
                    "infinite product with base q^{base} never reaches positive q-order"
                )));
            }
            // factors of q-order > trunc are 1 + O(q^{trunc+1})
            let mut ks = Vec::new();
            let mut k = 0;
            while a.q_exp + base * k <= trunc {
                ks.push(k);
                k += 1;
            }
            ks
        }
    };
    // factors of negative q-order cost precision; pre-pad so the result
    // still carries `trunc`
    let pad: i64 = ks
        .iter()
        .map(|&k| {
            let d = a.q_exp + base * k;
            if d < 0 {
                -d
            } else {
                0
            }
        })
        .sum();
    let unit = a.unit_in(ring);
    let neg_unit = ring.neg(&unit);
    let mut s = QSeries::one(ring.clone(), trunc + pad);
    for &k in &ks {
        let d = a.q_exp + base * k;
        if d == 0 {
            // scalar factor (1 - u)
            let c = ring.sub(&ring.one(), &unit);
            s = s.scale(&c);
        } else {
            s = s.mul_binomial(&neg_unit, d);
        }
    }
    s.truncate_to(trunc)
}

/// Multiply an existing series by (a; q^base)_inf factor by factor. Each
/// factor is a sparse binomial, so this costs O(trunc * support) per factor
/// instead of a dense convolution — the cheap way to attach Pochhammer
/// kernels to an already-expanded series.
pub fn mul_pochhammer<R: Ring>(
    ring: &R,
    series: &QSeries<R>,
    a: &ParamSpec,
    base: i64,
    trunc: i64,
) -> Result<QSeries<R>, KernelError> {
    if base < 1 {
        return Err(KernelError::Bound(format!(
            "infinite product with base q^{base} never reaches positive q-order"
        )));
    }
    let unit = a.unit_in(ring);
    let neg_unit = ring.neg(&unit);
    let mut s = series.truncate_to(trunc.min(series.trunc()))?;
    let mut k = 0;
    while a.q_exp + base * k <= s.trunc() {
        let d = a.q_exp + base * k;
        assert!(d > 0, "kernel factors must have positive q-order");
        s.mul_binomial_in_place(&neg_unit, d);
        k += 1;
    }
    Ok(s)
}

/// Which of the two independent theta implementations to use.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ThetaForm {
    Product,
    Sum,
}

/// j(arg; q^base), by the requested route, truncated at `trunc`.
///
/// j vanishes identically exactly when arg is an integral power of the base;
/// that zero series is legal output here (callers that cannot tolerate it
/// check for it).
pub fn jtheta<R: Ring>(
    ring: &R,
    arg: &ParamSpec,
    base: i64,
    form: ThetaForm,
    trunc: i64,
) -> Result<QSeries<R>, KernelError> {
    assert!(base >= 1, "theta base must be a positive q-power");
    match form {
        ThetaForm::Sum => jtheta_sum(ring, arg, base, trunc),
        ThetaForm::Product => jtheta_product(ring, arg, base, trunc),
    }
}

fn jtheta_sum<R: Ring>(
    ring: &R,
    arg: &ParamSpec,
    base: i64,
    trunc: i64,
) -> Result<QSeries<R>, KernelError> {
    // term n: (-1)^n arg^n q^{base*n(n-1)/2}
    let exp = |n: i64| -> i64 { arg.q_exp * n + base * n * (n - 1) / 2 };
    let terms = bilateral_terms(exp, trunc)?;
    let lower = terms.iter().map(|&(_, e)| e).min().unwrap_or(trunc).min(trunc);
    let mut s = QSeries::from_fn(ring.clone(), lower, trunc, |_| ring.zero());
    for (n, e) in terms {
        let mut c = arg.unit_pow_in(ring, n);
        if sign_pow(n) < 0 {
            c = ring.neg(&c);
        }
        let m = QSeries::monomial_scaled(ring.clone(), c, e, trunc);
        s = s.add(&m);
    }
    Ok(s)
}

fn jtheta_product<R: Ring>(
    ring: &R,
    arg: &ParamSpec,
    base: i64,
    trunc: i64,
) -> Result<QSeries<R>, KernelError> {
    // Normalize the q-power of the argument into [0, base) with the
    // functional equation j(q^{base*s} a; q^base) = (-1)^s a^{-s} q^{-base*s(s-1)/2} j(a; q^base).
    let s_shift = arg.q_exp.div_euclid(base);
    let e0 = arg.q_exp.rem_euclid(base);
    let a0 = ParamSpec { q_exp: e0, ..*arg };
    // prefactor exponent from iterating j(q^base * a; q^base) = -a^{-1} j(a; q^base)
    let d = -e0 * s_shift - base * s_shift * (s_shift - 1) / 2;

    let work = trunc + (-d).max(0);
    let p1 = pochhammer(ring, &a0, PochLen::Infinite, base, work)?;
    let p2 = pochhammer(ring, &a0.inv().times_q(base), PochLen::Infinite, base, work)?;
    let p3 = pochhammer(ring, &ParamSpec::q(base), PochLen::Infinite, base, work)?;
    let body = p1.mul(&p2).mul(&p3);

    if s_shift == 0 {
        return body.truncate_to(trunc);
    }
    // prefactor (-1)^s a0^{-s} q^d
    let mut c = a0.unit_pow_in(ring, -s_shift);
    if sign_pow(s_shift) < 0 {
        c = ring.neg(&c);
    }
    body.mul_monomial(&c, d).truncate_to(trunc)
}

/// Enumerate all integers n with exp(n) <= trunc, for an eventually-quadratic
/// exponent function, asserting on a two-row boundary layer in each direction
/// that nothing beyond the enumerated range can contribute.
pub fn bilateral_terms(
    exp: impl Fn(i64) -> i64,
    trunc: i64,
) -> Result<Vec<(i64, i64)>, KernelError> {
    const HARD_CAP: i64 = 2_000_000;
    let mut out = Vec::new();
    for dir in [1i64, -1] {
        let mut n = if dir == 1 { 0 } else { -1 };
        let mut beyond = 0;
        let mut last = i64::MIN;
        loop {
            let e = exp(n);
            if e <= trunc {
                out.push((n, e));
                beyond = 0;
            } else if e >= last {
                beyond += 1;
                if beyond >= 2 {
                    break;
                }
            } else {
                beyond = 0;
            }
            last = e;
            n += dir;
            if n.abs() > HARD_CAP {
                return Err(KernelError::Bound(
                    "bilateral sum does not truncate".into(),
                ));
            }
        }
    }
    Ok(out)
}

/// J_{b,a} = j(q^a; q^b), with 0 < a < b.
pub fn j_ba<R: Ring>(ring: &R, b: i64, a: i64, trunc: i64) -> QSeries<R> {
    assert!(0 < a && a < b, "J_{{b,a}} needs 0 < a < b, got b={b}, a={a}");
    jtheta(ring, &ParamSpec::q(a), b, ThetaForm::Product, trunc).expect("J product")
}

/// J_b = (q^b; q^b)_inf.
pub fn j_b<R: Ring>(ring: &R, b: i64, trunc: i64) -> QSeries<R> {
    assert!(b >= 1);
    pochhammer(ring, &ParamSpec::q(b), PochLen::Infinite, b, trunc).expect("J_b product")
}

/// One factor of an eta-quotient-style product.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum JFactor {
    /// J_{base,off}^exp
    Two { base: i64, off: i64, exp: i64 },
    /// J_base^exp
    One { base: i64, exp: i64 },
}

/// A scalar * q^shift * product of J factors with integer exponents.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProductSpec {
    pub scalar: i64,
    pub q_shift: i64,
    pub factors: Vec<JFactor>,
}

impl ProductSpec {
    pub fn new(factors: Vec<JFactor>) -> Self {
        ProductSpec { scalar: 1, q_shift: 0, factors }
    }

    pub fn scaled(scalar: i64, q_shift: i64, factors: Vec<JFactor>) -> Self {
        ProductSpec { scalar, q_shift, factors }
    }

    /// Expand exactly to order `trunc`. Negative exponents go through series
    /// inversion; every J has leading coefficient 1, so this stays exact over Z.
    pub fn build<R: Ring>(&self, ring: &R, trunc: i64) -> Result<QSeries<R>, KernelError> {
        let mut acc = QSeries::one(ring.clone(), trunc);
        for f in &self.factors {
            let (series, exp) = match *f {
                JFactor::Two { base, off, exp } => {
                    assert!(exp != 0, "zero exponent in product spec");
                    (j_ba(ring, base, off, trunc), exp)
                }
                JFactor::One { base, exp } => {
                    assert!(exp != 0, "zero exponent in product spec");
                    (j_b(ring, base, trunc), exp)
                }
            };
            let factor = if exp > 0 { series } else { series.inv()? };
            for _ in 0..exp.abs() {
                acc = acc.mul(&factor);
            }
        }
        let c = ring.from_i64(self.scalar);
        Ok(acc.mul_monomial(&c, self.q_shift))
    }
}

/// E(q) = (q;q)_inf, as the J_1 preset.
pub fn euler_e<R: Ring>(ring: &R, trunc: i64) -> QSeries<R> {
    j_b(ring, 1, trunc)
}

/// theta_4(q) = sum (-1)^n q^{n^2}, as the J_{2,1} preset.
pub fn theta4<R: Ring>(ring: &R, trunc: i64) -> QSeries<R> {
    j_ba(ring, 2, 1, trunc)
}

/// The right sides of the named dissection lemmas, with zeta coefficients
/// where one appears. `field` must carry the matching root of unity
/// (order 5 for the 5diss names, 7 for zth7dis; jsimp works in any).
pub fn dissection_lemma_rhs(
    name: &str,
    field: CycloField,
    trunc: i64,
) -> Result<QSeries<CycloField>, KernelError> {
    let embed = |s: &ProductSpec| -> Result<QSeries<CycloField>, KernelError> {
        Ok(s.build(&IntRing, trunc)?.embed(field))
    };
    match name {
        "5diss1" => {
            assert_eq!(field.order(), 5, "5diss1 needs zeta_5");
            // J_{25,10} + q (zeta^2 + zeta^-2) J_{25,5}
            let a = embed(&ProductSpec::new(alloc::vec![JFactor::Two { base: 25, off: 10, exp: 1 }]))?;
            let b = embed(&ProductSpec::new(alloc::vec![JFactor::Two { base: 25, off: 5, exp: 1 }]))?;
            let c = field.add(&field.zeta(2), &field.zeta(-2));
            Ok(a.add(&b.mul_monomial(&c, 1)))
        }
        "5diss2" => {
            // J_25 ( J_{25,10}/J_{25,5} - q - q^2 J_{25,5}/J_{25,10} )
            let t1 = ProductSpec::new(alloc::vec![
                JFactor::One { base: 25, exp: 1 },
                JFactor::Two { base: 25, off: 10, exp: 1 },
                JFactor::Two { base: 25, off: 5, exp: -1 },
            ]);
            let t2 = ProductSpec::scaled(-1, 1, alloc::vec![JFactor::One { base: 25, exp: 1 }]);
            let t3 = ProductSpec::scaled(
                -1,
                2,
                alloc::vec![
                    JFactor::One { base: 25, exp: 1 },
                    JFactor::Two { base: 25, off: 5, exp: 1 },
                    JFactor::Two { base: 25, off: 10, exp: -1 },
                ],
            );
            Ok(embed(&t1)?.add(&embed(&t2)?).add(&embed(&t3)?))
        }
        "5diss3" => {
            // J_{50,25} - 2q J_{50,15} + 2q^4 J_{50,5}
            let t1 = ProductSpec::new(alloc::vec![JFactor::Two { base: 50, off: 25, exp: 1 }]);
            let t2 = ProductSpec::scaled(-2, 1, alloc::vec![JFactor::Two { base: 50, off: 15, exp: 1 }]);
            let t3 = ProductSpec::scaled(2, 4, alloc::vec![JFactor::Two { base: 50, off: 5, exp: 1 }]);
            Ok(embed(&t1)?.add(&embed(&t2)?).add(&embed(&t3)?))
        }
        "zth7dis" => {
            assert_eq!(field.order(), 7, "zth7dis needs zeta_7");
            // J_{49,21} + q (z^2+z^3+z^4+z^5) J_{49,14} - q^3 (z^3+z^4) J_{49,7}
            let a = embed(&ProductSpec::new(alloc::vec![JFactor::Two { base: 49, off: 21, exp: 1 }]))?;
            let b = embed(&ProductSpec::new(alloc::vec![JFactor::Two { base: 49, off: 14, exp: 1 }]))?;
            let c = embed(&ProductSpec::new(alloc::vec![JFactor::Two { base: 49, off: 7, exp: 1 }]))?;
            let cb = field.add(
                &field.add(&field.zeta(2), &field.zeta(3)),
                &field.add(&field.zeta(4), &field.zeta(5)),
            );
            let cc = field.neg(&field.add(&field.zeta(3), &field.zeta(4)));
            Ok(a.add(&b.mul_monomial(&cb, 1)).add(&c.mul_monomial(&cc, 3)))
        }
        "jsimp_a" => {
            // J_{5,1} / J_5
            embed(&ProductSpec::new(alloc::vec![
                JFactor::Two { base: 5, off: 1, exp: 1 },
                JFactor::One { base: 5, exp: -1 },
            ]))
        }
        "jsimp_b" => {
            // J_{5,3} / J_5
            embed(&ProductSpec::new(alloc::vec![
                JFactor::Two { base: 5, off: 3, exp: 1 },
                JFactor::One { base: 5, exp: -1 },
            ]))
        }
        other => Err(KernelError::Support(format!(
            "unknown dissection lemma name: {other}"
        ))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::laurent::LaurentRing;
    use crate::ring::{int, rat, RatRing};
    use crate::series::series_equal;

    #[test]
    fn finite_pochhammer_hand_expansion() {
        // (q;q)_3 = (1-q)(1-q^2)(1-q^3) = 1 - q - q^2 + q^4 + q^5 - q^6
        let s = pochhammer(&IntRing, &ParamSpec::q(1), PochLen::Finite(3), 1, 8).unwrap();
        let expect = [1, -1, -1, 0, 1, 1, -1, 0, 0];
        for (n, v) in expect.iter().enumerate() {
            assert_eq!(s.coeff(n as i64), int(*v));
        }
        // empty product
        let e = pochhammer(&IntRing, &ParamSpec::q(1), PochLen::Finite(0), 1, 5).unwrap();
        assert!(series_equal(&e, &QSeries::one(IntRing, 5), 5).unwrap().is_pass());
    }

    #[test]
    fn bivariate_pochhammer_head() {
        // (zq;q)_inf = 1 - zq - zq^2 + (z^2 - z)q^3 + ...
        let zr = LaurentRing::new(RatRing);
        let s = pochhammer(&zr, &ParamSpec::zq(1, 1), PochLen::Infinite, 1, 3).unwrap();
        assert_eq!(s.coeff(0), zr.one());
        assert_eq!(s.coeff(1), zr.monomial(1, rat(-1, 1)));
        assert_eq!(s.coeff(2), zr.monomial(1, rat(-1, 1)));
        assert_eq!(
            s.coeff(3),
            zr.from_pairs([(2, rat(1, 1)), (1, rat(-1, 1))])
        );
    }

    #[test]
    fn euler_pentagonal_and_theta4() {
        let e = euler_e(&IntRing, 13);
        let expect = [1, -1, -1, 0, 0, 1, 0, 1, 0, 0, 0, 0, -1, 0];
        for (n, v) in expect.iter().enumerate() {
            assert_eq!(e.coeff(n as i64), int(*v), "E coefficient q^{n}");
        }
        let t4 = theta4(&IntRing, 10);
        let expect4 = [1, -2, 0, 0, 2, 0, 0, 0, 0, -2, 0];
        for (n, v) in expect4.iter().enumerate() {
            assert_eq!(t4.coeff(n as i64), int(*v), "theta4 coefficient q^{n}");
        }
    }

    #[test]
    fn theta_sum_equals_product() {
        let f5 = CycloField::new(5);
        let specs = [
            ParamSpec::q(1),
            ParamSpec::q(2),
            ParamSpec::wq(1, 1),
            ParamSpec::wq(3, -2),
            ParamSpec::wq(2, 0),
            ParamSpec::wq(4, 7),
        ];
        for arg in specs {
            for base in [1i64, 2, 3, 5] {
                let p = jtheta(&f5, &arg, base, ThetaForm::Product, 30).unwrap();
                let s = jtheta(&f5, &arg, base, ThetaForm::Sum, 30).unwrap();
                assert!(
                    series_equal(&p, &s, 30).unwrap().is_pass(),
                    "mismatch for {} base {base}",
                    arg.describe()
                );
            }
        }
    }

    #[test]
    fn theta_sum_equals_product_symbolic() {
        let zr = LaurentRing::new(RatRing);
        for arg in [ParamSpec::zq(1, 0), ParamSpec::zq(2, 1), ParamSpec::zq(-2, 1)] {
            let p = jtheta(&zr, &arg, 1, ThetaForm::Product, 20).unwrap();
            let s = jtheta(&zr, &arg, 1, ThetaForm::Sum, 20).unwrap();
            assert!(series_equal(&p, &s, 20).unwrap().is_pass());
        }
        // constant coefficient of j(z;q) is 1 - z
        let j = jtheta(&zr, &ParamSpec::zq(1, 0), 1, ThetaForm::Sum, 10).unwrap();
        assert_eq!(j.coeff(0), zr.from_pairs([(0, rat(1, 1)), (1, rat(-1, 1))]));
    }

    #[test]
    fn theta_zero_at_base_powers() {
        // j(q^{2t}; q) = 0
        for t in [0i64, 1, 3] {
            let j = jtheta(&IntRing, &ParamSpec::q(2 * t), 1, ThetaForm::Product, 15).unwrap();
            assert!(j.is_zero_series(), "j(q^{}; q) should vanish", 2 * t);
            let s = jtheta(&IntRing, &ParamSpec::q(2 * t), 1, ThetaForm::Sum, 15).unwrap();
            assert!(s.is_zero_series());
        }
    }

    #[test]
    fn interleaved_product_is_euler() {
        // j(q; q^3) = (q;q^3)(q^2;q^3)(q^3;q^3) = E(q)
        let j = jtheta(&IntRing, &ParamSpec::q(1), 3, ThetaForm::Product, 25).unwrap();
        let e = euler_e(&IntRing, 25);
        assert!(series_equal(&j, &e, 25).unwrap().is_pass());
    }

    #[test]
    fn detd_eta_quotient_head() {
        // J_10^3 J_1^6 / (J_5^2 J_2) begins 1 - 6q + 10q^2 + 4q^3 - 19q^4
        let spec = ProductSpec::new(alloc::vec![
            JFactor::One { base: 10, exp: 3 },
            JFactor::One { base: 1, exp: 6 },
            JFactor::One { base: 5, exp: -2 },
            JFactor::One { base: 2, exp: -1 },
        ]);
        let s = spec.build(&IntRing, 4).unwrap();
        for (n, v) in [1, -6, 10, 4, -19].iter().enumerate() {
            assert_eq!(s.coeff(n as i64), int(*v));
        }
    }

    #[test]
    fn divergent_infinite_product_rejected() {
        assert!(matches!(
            pochhammer(&IntRing, &ParamSpec::q(1), PochLen::Infinite, 0, 5),
            Err(KernelError::Bound(_))
        ));
    }

    #[test]
    fn kernel_multiply_matches_dense_product() {
        use crate::cyclo::CycloField;
        let f = CycloField::new(5);
        let n = 24;
        let base = euler_e(&f, n).inv().unwrap().truncate_to(n).unwrap();
        for arg in [ParamSpec::wq(1, 1), ParamSpec::wq(3, 2), ParamSpec::q(1)] {
            let fast = mul_pochhammer(&f, &base, &arg, 1, n).unwrap();
            let poch = pochhammer(&f, &arg, PochLen::Infinite, 1, n).unwrap();
            let slow = base.mul(&poch).truncate_to(n).unwrap();
            assert!(
                series_equal(&fast, &slow, n).unwrap().is_pass(),
                "kernel multiply mismatch for {}",
                arg.describe()
            );
        }
    }

    #[test]
    fn unknown_dissection_name() {
        assert!(dissection_lemma_rhs("nope", CycloField::new(5), 5).is_err());
    }
}
