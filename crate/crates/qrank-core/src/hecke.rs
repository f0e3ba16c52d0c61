//! Indefinite-quadratic-form double sums (Hecke-Rogers series).
//!
//! Each named identity pairs a product side (`hr_lhs`: infinite products
//! times the rank generating function, assembled from the theta and rank
//! engines) with a lattice side (`hr_rhs`: a double sum over a region where
//! the quadratic exponent is nonnegative, enumerated here directly).
//!
//! Enumeration is bounded by rows n <= B, where B starts from a cheap
//! closed-form bound and is then *proved* sufficient at runtime: the two rows
//! beyond B are fully scanned and every term must land beyond the truncation
//! order (including the exponent shift a monomial z-specialization induces).
//! A failed boundary check grows the bound and retries; it never silently
//! truncates.

use alloc::collections::BTreeMap;

use crate::error::KernelError;
use crate::ring::{sign_pow, Ring};
use crate::series::QSeries;
use crate::theta::{pochhammer, ParamSpec, PochLen};

/// The named double-sum identities.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum HrName {
    /// (zq)(z^{-1}q)(q)_inf R(z;q) = (1/2) sum of two j-ranges with
    /// z^{n-3j}+z^{3j-n} resp. z^{n-3j+1}+z^{3j-n-1} weights
    Rankid1,
    /// (zq)(z^{-1}q)(q)_inf R(z;q^2) = sum (-1)^j z^j q^{n(3n+1)/2-j^2}(1-q^{2n+1})
    Rankid2,
    /// (1+z)(z^2 q)(z^{-2}q)(q)_inf R(z;q) = sum (-1)^{n+j}(z^{n+1}+z^{-n}) q^{V(n,j)}
    Rankid3,
    /// (1+z)(z^2q^2;q^2)(z^{-2}q^2;q^2)(q^2;q^2)_inf R(z;q), two j-triangles
    Rankid4,
    /// E(q)^2 as the classical double sum over n with |m| <= n/2
    HreEta2,
    /// E(q)^2 as the one-sided sum with weight q^{(n^2-3j^2)/2 + (n-j)/2}
    Hre12,
    /// theta_4(q) E(q) = E^3/(q^2;q^2)_inf as the z = 1 double sum
    T4e,
}

impl HrName {
    pub fn parse(s: &str) -> Option<Self> {
        Some(match s {
            "rankid1" => HrName::Rankid1,
            "rankid2" => HrName::Rankid2,
            "rankid3" => HrName::Rankid3,
            "rankid4" => HrName::Rankid4,
            "hre_eta2" => HrName::HreEta2,
            "hre12" => HrName::Hre12,
            "t4e" => HrName::T4e,
            _ => return None,
        })
    }

    pub fn part_count(&self) -> usize {
        match self {
            HrName::Rankid1 | HrName::Rankid2 | HrName::Rankid4 | HrName::T4e => 2,
            _ => 1,
        }
    }

    /// Whether the printed sum carries a global 1/2.
    fn halved(&self) -> bool {
        matches!(self, HrName::Rankid1)
    }

    fn base_bound(&self, trunc: i64) -> i64 {
        let s = match self {
            HrName::Rankid1 | HrName::Rankid3 | HrName::HreEta2 | HrName::Hre12 => 8 * trunc,
            HrName::Rankid2 | HrName::T4e => 2 * trunc,
            HrName::Rankid4 => trunc,
        };
        isqrt(s.max(0)) + 4
    }
}

/// The quadratic exponent V(n,j) = (n^2 - 3j^2)/2 + (n-j)/2 shared by the
/// rank identities on base q.
pub fn v_quadratic(n: i64, j: i64) -> i64 {
    debug_assert_eq!((n * n - 3 * j * j + n - j) % 2, 0);
    (n * n - 3 * j * j + n - j) / 2
}

fn isqrt(s: i64) -> i64 {
    s.max(0).isqrt()
}

/// Select which printed sub-sums of an identity to enumerate.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PartSel {
    All,
    One(usize),
}

impl PartSel {
    fn includes(&self, idx: usize) -> bool {
        match self {
            PartSel::All => true,
            PartSel::One(k) => *k == idx,
        }
    }
}

/// One enumerated lattice term: lattice point, exponent, sign, and the list
/// of z-exponents it carries (each with weight 1).
struct Term {
    n: i64,
    j: i64,
    exp: i64,
    sign: i64,
    zpows: [i64; 2],
    zlen: usize,
}

fn for_each_term(name: HrName, part: usize, n: i64, mut f: impl FnMut(Term)) {
    match (name, part) {
        (HrName::Rankid1, 0) => {
            for j in 0..=n / 2 {
                f(Term {
                    n,
                    j,
                    exp: v_quadratic(n, j),
                    sign: sign_pow(n + j),
                    zpows: [n - 3 * j, 3 * j - n],
                    zlen: 2,
                });
            }
        }
        (HrName::Rankid1, 1) => {
            for j in 1..=n / 2 {
                f(Term {
                    n,
                    j,
                    exp: (n * n - 3 * j * j + n + j) / 2,
                    sign: sign_pow(n + j),
                    zpows: [n - 3 * j + 1, 3 * j - n - 1],
                    zlen: 2,
                });
            }
        }
        (HrName::Rankid2, p @ (0 | 1)) | (HrName::T4e, p @ (0 | 1)) => {
            for j in -n..=n {
                let mut exp = n * (3 * n + 1) / 2 - j * j;
                let mut sign = sign_pow(j);
                if p == 1 {
                    exp += 2 * n + 1;
                    sign = -sign;
                }
                f(Term { n, j, exp, sign, zpows: [j, 0], zlen: 1 });
            }
        }
        (HrName::Rankid3, 0) => {
            for j in -(n / 2)..=n / 2 {
                f(Term {
                    n,
                    j,
                    exp: v_quadratic(n, j),
                    sign: sign_pow(n + j),
                    zpows: [n + 1, -n],
                    zlen: 2,
                });
            }
        }
        (HrName::Rankid4, p @ (0 | 1)) => {
            if p == 1 && n == 0 {
                return;
            }
            let (top, shift, flip) = if p == 0 { (2 * n, 2 * n, 1) } else { (2 * n - 2, -2 * n, -1) };
            for j in 0..=top {
                f(Term {
                    n,
                    j,
                    exp: 3 * n * n + shift - j * (j + 1) / 2,
                    sign: flip * sign_pow(n),
                    zpows: [j + 1, -j],
                    zlen: 2,
                });
            }
        }
        (HrName::HreEta2, 0) => {
            // rows with n < 0 are empty as printed; only n >= 0 contributes
            for m in -(n / 2)..=n / 2 {
                f(Term {
                    n,
                    j: m,
                    exp: (n * n - 3 * m * m + n + m) / 2,
                    sign: sign_pow(n + m),
                    zpows: [0, 0],
                    zlen: 1,
                });
            }
        }
        (HrName::Hre12, 0) => {
            for j in -(n / 2)..=n / 2 {
                f(Term {
                    n,
                    j,
                    exp: v_quadratic(n, j),
                    sign: sign_pow(n + j),
                    zpows: [0, 0],
                    zlen: 1,
                });
            }
        }
        _ => panic!("{name:?} has no part {part}"),
    }
}

/// T4e carries no z; its weight per lattice point is 1.
fn term_zpows(name: HrName, t: &Term) -> &[i64] {
    if name == HrName::T4e {
        &t.zpows[1..2] // the fixed 0 entry
    } else {
        &t.zpows[..t.zlen]
    }
}

/// Find a row bound B whose two-row boundary layer provably cannot reach the
/// truncation order, accounting for the base change q -> q^qbase and the
/// exponent shift t*w from a monomial z-specialization with q-power t.
fn verified_bound(name: HrName, qbase: i64, z_qexp: i64, trunc: i64) -> Result<i64, KernelError> {
    let mut b = name.base_bound(trunc);
    loop {
        let mut clear = true;
        for row in [b + 1, b + 2] {
            for part in 0..name.part_count() {
                for_each_term(name, part, row, |t| {
                    assert!(t.exp >= 0, "negative quadratic exponent at ({}, {})", t.n, t.j);
                    for &w in term_zpows(name, &t) {
                        if qbase * t.exp + z_qexp * w <= trunc {
                            clear = false;
                        }
                    }
                });
            }
        }
        if clear {
            return Ok(b);
        }
        b *= 2;
        if b > 4_000_000 {
            return Err(KernelError::Bound(
                "lattice row bound grew past the hard cap".into(),
            ));
        }
    }
}

fn accumulate<R: Ring>(
    ring: &R,
    name: HrName,
    part: PartSel,
    z: ParamSpec,
    qbase: i64,
    trunc: i64,
    filter: Option<(i64, &[(i64, i64)])>,
) -> Result<QSeries<R>, KernelError> {
    assert!(z.z_exp == 0 || z.z_exp == 1, "z must be symbolic or a monomial");
    assert!(qbase >= 1);
    let half = if name.halved() {
        Some(ring.try_inv(&ring.from_i64(2))?)
    } else {
        None
    };
    let bound = verified_bound(name, qbase, z.q_exp, trunc)?;
    let mut acc: BTreeMap<i64, R::Elem> = BTreeMap::new();
    for idx in 0..name.part_count() {
        if !part.includes(idx) {
            continue;
        }
        for n in 0..=bound {
            for_each_term(name, idx, n, |t| {
                assert!(t.exp >= 0, "negative quadratic exponent at ({}, {})", t.n, t.j);
                if let Some((p, classes)) = filter {
                    let key = (t.n.rem_euclid(p), t.j.rem_euclid(p));
                    if !classes.contains(&key) {
                        return;
                    }
                }
                for &w in term_zpows(name, &t) {
                    let e = qbase * t.exp + z.q_exp * w;
                    if e > trunc {
                        continue;
                    }
                    let mut coeff = z.unit_pow_in(ring, w);
                    if t.sign < 0 {
                        coeff = ring.neg(&coeff);
                    }
                    if let Some(h) = &half {
                        coeff = ring.mul(&coeff, h);
                    }
                    match acc.remove(&e) {
                        None => {
                            acc.insert(e, coeff);
                        }
                        Some(old) => {
                            acc.insert(e, ring.add(&old, &coeff));
                        }
                    }
                }
            });
        }
    }
    let lower = acc.keys().next().copied().unwrap_or(trunc).min(trunc);
    let mut acc = acc;
    Ok(QSeries::from_fn(ring.clone(), lower, trunc, |e| {
        acc.remove(&e).unwrap_or_else(|| ring.zero())
    }))
}

/// The lattice side of a named identity, exactly as printed, truncated at
/// `trunc`. `z` may be the symbolic variable, a root of unity, or a monomial.
pub fn hr_rhs<R: Ring>(
    ring: &R,
    name: HrName,
    z: ParamSpec,
    trunc: i64,
) -> Result<QSeries<R>, KernelError> {
    accumulate(ring, name, PartSel::All, z, 1, trunc, None)
}

/// The lattice sum with base q replaced by q^qbase (the quadratic exponent
/// scales; z-weights keep their own q-power).
pub fn hr_rhs_base<R: Ring>(
    ring: &R,
    name: HrName,
    z: ParamSpec,
    qbase: i64,
    trunc: i64,
) -> Result<QSeries<R>, KernelError> {
    accumulate(ring, name, PartSel::All, z, qbase, trunc, None)
}

/// The same enumeration restricted to lattice points with
/// (n mod p, j mod p) in `classes` — the building block for applying Atkin
/// operators to a double sum. An empty class set gives 0.
pub fn residue_filtered_sum<R: Ring>(
    ring: &R,
    name: HrName,
    part: PartSel,
    p: i64,
    classes: &[(i64, i64)],
    z: ParamSpec,
    trunc: i64,
) -> Result<QSeries<R>, KernelError> {
    assert!(p >= 1);
    accumulate(ring, name, part, z, 1, trunc, Some((p, classes)))
}

/// The product side of a named identity, assembled from the Pochhammer and
/// rank-series engines.
pub fn hr_lhs<R: Ring>(
    ring: &R,
    name: HrName,
    z: ParamSpec,
    trunc: i64,
) -> Result<QSeries<R>, KernelError> {
    use crate::rank::{rank_series, RankForm};
    let poch = |arg: ParamSpec, base: i64, wk: i64| pochhammer(ring, &arg, PochLen::Infinite, base, wk);
    crate::appell::with_precision(trunc, |wk| match name {
        HrName::Rankid1 | HrName::Rankid2 => {
            let pre = poch(z.times_q(1), 1, wk)?
                .mul(&poch(z.inv().times_q(1), 1, wk)?)
                .mul(&poch(ParamSpec::q(1), 1, wk)?);
            let rbase = if name == HrName::Rankid1 { 1 } else { 2 };
            let r = rank_series(ring, z, rbase, RankForm::Quotient, wk)?;
            Ok(pre.mul(&r))
        }
        HrName::Rankid3 | HrName::Rankid4 => {
            let b = if name == HrName::Rankid3 { 1 } else { 2 };
            let pre = poch(z.pow(2).times_q(b), b, wk)?
                .mul(&poch(z.pow(-2).times_q(b), b, wk)?)
                .mul(&poch(ParamSpec::q(b), b, wk)?);
            let r = rank_series(ring, z, 1, RankForm::Quotient, wk)?;
            let body = pre.mul(&r);
            // times (1 + z)
            if z.q_exp == 0 {
                let c = ring.add(&ring.one(), &z.unit_in(ring));
                Ok(body.scale(&c))
            } else {
                Ok(body.mul_binomial(&z.unit_in(ring), z.q_exp))
            }
        }
        HrName::HreEta2 | HrName::Hre12 => {
            let e = crate::theta::euler_e(ring, wk);
            Ok(e.mul(&e))
        }
        HrName::T4e => {
            let t4 = crate::theta::theta4(ring, wk);
            Ok(t4.mul(&crate::theta::euler_e(ring, wk)))
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::laurent::LaurentRing;
    use crate::ring::{rat, IntRing, RatRing};
    use crate::series::series_equal;

    type ZRing = LaurentRing<RatRing>;

    fn zr() -> ZRing {
        LaurentRing::new(RatRing)
    }

    #[test]
    fn rankid1_rhs_low_order_by_hand() {
        // at z = 1 the q^1 coefficient is -2, from lattice points (1,0) and (2,1)
        let s = hr_rhs(&RatRing, HrName::Rankid1, ParamSpec::one(), 6).unwrap();
        assert_eq!(s.coeff(0), rat(1, 1));
        assert_eq!(s.coeff(1), rat(-2, 1));
        // symbolic: coefficient of q^1 is -(z + z^{-1})
        let r = zr();
        let sy = hr_rhs(&r, HrName::Rankid1, ParamSpec::zq(1, 0), 4).unwrap();
        assert_eq!(sy.coeff(1), r.from_pairs([(1, rat(-1, 1)), (-1, rat(-1, 1))]));
    }

    #[test]
    fn rankid1_lhs_low_order() {
        let r = zr();
        let s = hr_lhs(&r, HrName::Rankid1, ParamSpec::zq(1, 0), 4).unwrap();
        assert_eq!(s.coeff(0), r.one());
        assert_eq!(s.coeff(1), r.from_pairs([(1, rat(-1, 1)), (-1, rat(-1, 1))]));
    }

    #[test]
    fn rankid3_constant_terms() {
        let r = zr();
        let rhs = hr_rhs(&r, HrName::Rankid3, ParamSpec::zq(1, 0), 5).unwrap();
        // (n,j) = (0,0): z^{0+1} + z^{-0} = z + 1
        assert_eq!(rhs.coeff(0), r.from_pairs([(0, rat(1, 1)), (1, rat(1, 1))]));
        let lhs = hr_lhs(&r, HrName::Rankid3, ParamSpec::zq(1, 0), 5).unwrap();
        assert_eq!(lhs.coeff(0), rhs.coeff(0));
        let lhs4 = hr_lhs(&r, HrName::Rankid4, ParamSpec::zq(1, 0), 5).unwrap();
        assert_eq!(lhs4.coeff(0), r.from_pairs([(0, rat(1, 1)), (1, rat(1, 1))]));
    }

    #[test]
    fn hre_sums_equal_euler_squared() {
        let n = 45;
        let e2 = hr_lhs(&IntRing, HrName::Hre12, ParamSpec::one(), n).unwrap();
        for name in [HrName::Hre12, HrName::HreEta2] {
            let s = hr_rhs(&IntRing, name, ParamSpec::one(), n).unwrap();
            assert!(series_equal(&s, &e2, n).unwrap().is_pass(), "{name:?}");
        }
        // and rankid1 at z = 1 agrees, with integer coefficients
        let r1 = hr_rhs(&RatRing, HrName::Rankid1, ParamSpec::one(), n).unwrap();
        assert!(r1.is_integral());
        let r1z = r1.map_ring(IntRing, |c| c.to_integer());
        assert!(series_equal(&r1z, &e2, n).unwrap().is_pass());
    }

    #[test]
    fn t4e_three_ways() {
        let n = 40;
        let lhs = hr_lhs(&IntRing, HrName::T4e, ParamSpec::one(), n).unwrap();
        let rhs = hr_rhs(&IntRing, HrName::T4e, ParamSpec::one(), n).unwrap();
        assert!(series_equal(&lhs, &rhs, n).unwrap().is_pass());
        // E^3 / (q^2;q^2)_inf
        let e = crate::theta::euler_e(&IntRing, n);
        let alt = e
            .mul(&e)
            .mul(&e)
            .mul(&crate::theta::j_b(&IntRing, 2, n).inv().unwrap())
            .truncate_to(n)
            .unwrap();
        assert!(series_equal(&alt, &rhs, n).unwrap().is_pass());
    }

    #[test]
    fn lattice_partition_property() {
        // summing the residue-filtered pieces over all classes recovers the sum
        let n = 25;
        let p = 5;
        let full = hr_rhs(&RatRing, HrName::Rankid1, ParamSpec::one(), n).unwrap();
        let mut back = QSeries::zero(RatRing, n);
        for a in 0..p {
            for b in 0..p {
                let piece = residue_filtered_sum(
                    &RatRing,
                    HrName::Rankid1,
                    PartSel::All,
                    p,
                    &[(a, b)],
                    ParamSpec::one(),
                    n,
                )
                .unwrap();
                back = back.add(&piece);
            }
        }
        assert!(series_equal(&back, &full, n).unwrap().is_pass());
        // the empty class set gives zero
        let empty = residue_filtered_sum(
            &RatRing,
            HrName::Rankid1,
            PartSel::All,
            p,
            &[],
            ParamSpec::one(),
            n,
        )
        .unwrap();
        assert!(empty.is_zero_series());
    }

    #[test]
    fn rankid2_lhs_at_one_is_t4e() {
        let n = 30;
        let a = hr_lhs(&IntRing, HrName::Rankid2, ParamSpec::one(), n).unwrap();
        let b = hr_lhs(&IntRing, HrName::T4e, ParamSpec::one(), n).unwrap();
        assert!(series_equal(&a, &b, n).unwrap().is_pass());
    }

    #[test]
    fn monomial_specialization_matches_symbolic_substitution() {
        // z -> q folded into the enumeration must agree with substituting
        // z -> q in the symbolic sum. Rows with V(n,j) > 40 satisfy
        // V - (n+1) > 10, so the symbolic run at order 40 covers every
        // lattice point that can reach exponent <= 10 after the shift.
        let r = zr();
        let safe = 10;
        let sym = hr_rhs(&r, HrName::Rankid3, ParamSpec::zq(1, 0), 40).unwrap();
        let spec = hr_rhs(&IntRing, HrName::Rankid3, ParamSpec::q(1), safe).unwrap();
        let mut expect = QSeries::zero(IntRing, safe);
        for (e, poly) in sym.terms() {
            for (w, c) in poly.iter() {
                let ee = e + *w;
                if ee <= safe {
                    assert!(c.is_integer());
                    expect = expect.add(&QSeries::monomial_scaled(IntRing, c.to_integer(), ee, safe));
                }
            }
        }
        assert!(series_equal(&spec, &expect, safe).unwrap().is_pass());
    }
}
