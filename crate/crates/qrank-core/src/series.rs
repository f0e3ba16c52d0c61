//! Truncated Laurent series in q over a generic coefficient ring.
//!
//! A `QSeries` stores a dense coefficient window for the exponents
//! `lower ..= trunc` together with the ring tag. The series is known exactly
//! modulo q^{trunc+1}: every operation propagates `trunc` conservatively so a
//! comparison can never silently claim more precision than the operands carry.
//!
//! Truncation propagation:
//! - add/sub: min of the truncations;
//! - mul: `min(f.trunc + g.lower, g.trunc + f.lower)` (with `lower` taken
//!   after trimming known-zero leading coefficients);
//! - inversion preserves the relative precision of the input;
//! - `substitute_qpower(k)` extends to `k*trunc + (k-1)` since the
//!   intermediate exponents are known zero.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use crate::error::KernelError;
use crate::ring::{IntRing, Ring};

/// Truncated Laurent series in q.
#[derive(Clone, Debug)]
pub struct QSeries<R: Ring> {
    ring: R,
    lower: i64,
    trunc: i64,
    coeffs: Vec<R::Elem>,
}

/// Outcome of an exact coefficient comparison up to a stated order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SeriesCmp {
    Pass {
        order: i64,
    },
    /// First disagreeing exponent, with both coefficients rendered exactly.
    Fail {
        exponent: i64,
        lhs: String,
        rhs: String,
    },
}

impl SeriesCmp {
    pub fn is_pass(&self) -> bool {
        matches!(self, SeriesCmp::Pass { .. })
    }
}

fn floor_div(a: i64, b: i64) -> i64 {
    a.div_euclid(b)
}

fn ceil_div(a: i64, b: i64) -> i64 {
    -((-a).div_euclid(b))
}

impl<R: Ring> QSeries<R> {
    /// The zero series, known through q^trunc.
    pub fn zero(ring: R, trunc: i64) -> Self {
        let z = ring.zero();
        QSeries { ring, lower: trunc, trunc, coeffs: vec![z] }
    }

    /// The constant 1, known through q^trunc (trunc >= 0).
    pub fn one(ring: R, trunc: i64) -> Self {
        Self::monomial(ring, 0, trunc)
    }

    /// q^e, known through q^trunc.
    pub fn monomial(ring: R, e: i64, trunc: i64) -> Self {
        assert!(e <= trunc, "monomial exponent {e} beyond truncation {trunc}");
        let one = ring.one();
        let mut s = QSeries { ring, lower: e, trunc, coeffs: Vec::new() };
        let len = (trunc - e + 1) as usize;
        s.coeffs.resize(len, s.ring.zero());
        s.coeffs[0] = one;
        s
    }

    /// c * q^e, known through q^trunc.
    pub fn monomial_scaled(ring: R, c: R::Elem, e: i64, trunc: i64) -> Self {
        let mut s = Self::monomial(ring, e, trunc);
        s.coeffs[0] = c;
        s.trim();
        s
    }

    pub fn from_fn(ring: R, lower: i64, trunc: i64, mut f: impl FnMut(i64) -> R::Elem) -> Self {
        assert!(lower <= trunc);
        let coeffs = (lower..=trunc).map(&mut f).collect();
        QSeries { ring, lower, trunc, coeffs }
    }

    pub fn ring(&self) -> &R {
        &self.ring
    }

    pub fn lower(&self) -> i64 {
        self.lower
    }

    pub fn trunc(&self) -> i64 {
        self.trunc
    }

    /// Coefficient of q^e. Panics if e exceeds the known precision; exponents
    /// below the window are known zero.
    pub fn coeff(&self, e: i64) -> R::Elem {
        assert!(e <= self.trunc, "coefficient of q^{e} beyond truncation {}", self.trunc);
        if e < self.lower {
            self.ring.zero()
        } else {
            self.coeffs[(e - self.lower) as usize].clone()
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (i64, &R::Elem)> {
        self.coeffs.iter().enumerate().map(move |(i, c)| (self.lower + i as i64, c))
    }

    /// Raise `lower` past leading coefficients that are exactly zero. This is
    /// always sound (those coefficients are known, not merely unassigned) and
    /// it sharpens the truncation bound of subsequent products.
    pub fn trim(&mut self) {
        let mut skip = 0;
        while skip < self.coeffs.len() - 1 && self.ring.is_zero(&self.coeffs[skip]) {
            skip += 1;
        }
        if skip > 0 {
            self.coeffs.drain(..skip);
            self.lower += skip as i64;
        }
    }

    fn trimmed_lower(&self) -> i64 {
        let mut lo = self.lower;
        for c in &self.coeffs {
            if self.ring.is_zero(c) && lo < self.trunc {
                lo += 1;
            } else {
                break;
            }
        }
        lo
    }

    /// True if every known coefficient is zero.
    pub fn is_zero_series(&self) -> bool {
        self.coeffs.iter().all(|c| self.ring.is_zero(c))
    }

    /// True if some coefficient with exponent <= up_to is nonzero.
    pub fn has_nonzero_up_to(&self, up_to: i64) -> bool {
        self.terms().any(|(e, c)| e <= up_to && !self.ring.is_zero(c))
    }

    fn assert_same_ring(&self, other: &Self) {
        assert!(
            self.ring == other.ring,
            "coefficient ring mismatch: {:?} vs {:?}",
            self.ring,
            other.ring
        );
    }

    pub fn add(&self, other: &Self) -> Self {
        self.assert_same_ring(other);
        let trunc = self.trunc.min(other.trunc);
        let lower = self.lower.min(other.lower).min(trunc);
        let mut out = QSeries {
            ring: self.ring.clone(),
            lower,
            trunc,
            coeffs: vec![self.ring.zero(); (trunc - lower + 1) as usize],
        };
        for (e, c) in self.terms() {
            if e >= lower && e <= trunc {
                out.coeffs[(e - lower) as usize] = c.clone();
            }
        }
        for (e, c) in other.terms() {
            if e >= lower && e <= trunc {
                let slot = &mut out.coeffs[(e - lower) as usize];
                *slot = out.ring.add(slot, c);
            }
        }
        out
    }

    pub fn neg(&self) -> Self {
        QSeries {
            ring: self.ring.clone(),
            lower: self.lower,
            trunc: self.trunc,
            coeffs: self.coeffs.iter().map(|c| self.ring.neg(c)).collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn scale(&self, c: &R::Elem) -> Self {
        QSeries {
            ring: self.ring.clone(),
            lower: self.lower,
            trunc: self.trunc,
            coeffs: self.coeffs.iter().map(|x| self.ring.mul(x, c)).collect(),
        }
    }

    /// Multiply by q^d: shifts the window.
    pub fn shift(&self, d: i64) -> Self {
        QSeries {
            ring: self.ring.clone(),
            lower: self.lower + d,
            trunc: self.trunc + d,
            coeffs: self.coeffs.clone(),
        }
    }

    /// Multiply by the exact monomial c * q^d.
    pub fn mul_monomial(&self, c: &R::Elem, d: i64) -> Self {
        self.shift(d).scale(c)
    }

    /// Cauchy product with conservative truncation.
    pub fn mul(&self, other: &Self) -> Self {
        self.assert_same_ring(other);
        let alo = self.trimmed_lower();
        let blo = other.trimmed_lower();
        let trunc = (self.trunc + blo).min(other.trunc + alo);
        let lower = (alo + blo).min(trunc);
        let mut coeffs = vec![self.ring.zero(); (trunc - lower + 1) as usize];
        for (ea, ca) in self.terms() {
            if ea < alo || self.ring.is_zero(ca) {
                continue;
            }
            if ea + blo > trunc {
                break;
            }
            for (eb, cb) in other.terms() {
                let e = ea + eb;
                if e > trunc {
                    break;
                }
                if eb >= blo {
                    self.ring.mul_add_assign(&mut coeffs[(e - lower) as usize], ca, cb);
                }
            }
        }
        QSeries { ring: self.ring.clone(), lower, trunc, coeffs }
    }

    /// In-place multiply by (1 + c * q^d) for d >= 1: a descending scan can
    /// reuse the buffer because position e only reads the not-yet-updated
    /// position e - d. This is the workhorse of long Pochhammer kernels.
    pub fn mul_binomial_in_place(&mut self, c: &R::Elem, d: i64) {
        assert!(d >= 1, "in-place binomial multiply needs positive q-order");
        let lower = self.lower;
        for i in (0..self.coeffs.len()).rev() {
            let src = i as i64 + lower - d;
            if src >= lower {
                let (head, tail) = self.coeffs.split_at_mut(i);
                let x = &head[(src - lower) as usize];
                let ring = self.ring.clone();
                ring.mul_add_assign(&mut tail[0], c, x);
            }
        }
    }

    /// Multiply by the exact binomial (1 + c * q^d), d != 0.
    pub fn mul_binomial(&self, c: &R::Elem, d: i64) -> Self {
        assert!(d != 0, "binomial factor must move in q");
        let shift = d.min(0);
        let lower = self.lower + shift;
        let trunc = self.trunc + shift;
        let mut out = QSeries {
            ring: self.ring.clone(),
            lower,
            trunc,
            coeffs: vec![self.ring.zero(); (trunc - lower + 1) as usize],
        };
        for (e, x) in self.terms() {
            if e <= trunc && e >= lower {
                out.coeffs[(e - lower) as usize] = x.clone();
            }
        }
        for (e, x) in self.terms() {
            let t = e + d;
            if t <= trunc && t >= lower {
                let slot = &mut out.coeffs[(t - lower) as usize];
                out.ring.mul_add_assign(slot, c, x);
            }
        }
        out
    }

    /// Divide by (1 - c * q^d) for d >= 1, via the geometric recurrence
    /// `r[e] = f[e] + c * r[e-d]`. Exact, no ring inversion needed.
    pub fn div_binomial(&self, c: &R::Elem, d: i64) -> Self {
        assert!(d >= 1, "geometric expansion needs positive q-order, got {d}");
        let mut out = self.clone();
        for i in 0..out.coeffs.len() {
            let prev = i as i64 - d;
            if prev >= 0 {
                let (head, tail) = out.coeffs.split_at_mut(i);
                let r_prev = &head[prev as usize];
                let ring = self.ring.clone();
                ring.mul_add_assign(&mut tail[0], c, r_prev);
            }
        }
        out
    }

    /// Divide by (1 - c * q^d) for any d, where c must be a unit when d <= 0:
    /// - d > 0: geometric recurrence;
    /// - d = 0: scalar division by (1 - c), an error when c = 1 (a true pole);
    /// - d < 0: rewrite 1/(1-u) = -u^{-1}/(1 - u^{-1}) and recurse.
    pub fn div_one_minus_monomial(&self, c: &R::Elem, d: i64) -> Result<Self, KernelError> {
        if d > 0 {
            return Ok(self.div_binomial(c, d));
        }
        if d == 0 {
            let denom = self.ring.sub(&self.ring.one(), c);
            if self.ring.is_zero(&denom) {
                return Err(KernelError::NonGeneric(
                    "pole: denominator 1 - u with u = 1 at q-order 0".into(),
                ));
            }
            let inv = self.ring.try_inv(&denom).map_err(|e| {
                KernelError::NonGeneric(format!("constant denominator not invertible: {e}"))
            })?;
            return Ok(self.scale(&inv));
        }
        // 1/(1 - c q^d) = -c^{-1} q^{-d} / (1 - c^{-1} q^{-d}) with -d > 0
        let cinv = self.ring.try_inv(c).map_err(|e| {
            KernelError::NonGeneric(format!("cannot rewrite negative-order denominator: {e}"))
        })?;
        let neg_cinv = self.ring.neg(&cinv);
        Ok(self.mul_monomial(&neg_cinv, -d).div_binomial(&cinv, -d))
    }

    /// Multiplicative inverse. The lowest known nonzero coefficient must be a
    /// unit; the result keeps the relative precision of the input.
    pub fn inv(&self) -> Result<Self, KernelError> {
        let mut f = self.clone();
        f.trim();
        if f.is_zero_series() {
            return Err(KernelError::NotInvertible(
                "zero series (to its known precision)".into(),
            ));
        }
        let lead = f.coeffs[0].clone();
        let lead_inv = self.ring.try_inv(&lead)?;
        let n_rel = (f.trunc - f.lower) as usize;
        // normalized g = 1 + g_1 q + ...; invert by the convolution recurrence
        let g: Vec<R::Elem> = f.coeffs.iter().map(|c| self.ring.mul(c, &lead_inv)).collect();
        let mut b: Vec<R::Elem> = Vec::with_capacity(n_rel + 1);
        b.push(self.ring.one());
        for n in 1..=n_rel {
            let mut acc = self.ring.zero();
            for k in 1..=n {
                self.ring.mul_add_assign(&mut acc, &g[k], &b[n - k]);
            }
            b.push(self.ring.neg(&acc));
        }
        let coeffs: Vec<R::Elem> = b.iter().map(|c| self.ring.mul(c, &lead_inv)).collect();
        Ok(QSeries {
            ring: self.ring.clone(),
            lower: -f.lower,
            trunc: -f.lower + n_rel as i64,
            coeffs,
        })
    }

    /// q -> q^k for k >= 1. All intermediate exponents are known zero, so the
    /// precision extends to k*trunc + (k-1).
    pub fn substitute_qpower(&self, k: i64) -> Self {
        assert!(k >= 1, "substitution power must be >= 1");
        if k == 1 {
            return self.clone();
        }
        let lower = self.lower * k;
        let trunc = self.trunc * k + (k - 1);
        let mut coeffs = vec![self.ring.zero(); (trunc - lower + 1) as usize];
        for (e, c) in self.terms() {
            coeffs[((e * k) - lower) as usize] = c.clone();
        }
        QSeries { ring: self.ring.clone(), lower, trunc, coeffs }
    }

    /// Restrict the precision claim to `n` (which must not exceed what is known).
    pub fn truncate_to(&self, n: i64) -> Result<Self, KernelError> {
        if n > self.trunc {
            return Err(KernelError::Precision(format!(
                "requested order {n} exceeds known truncation {}",
                self.trunc
            )));
        }
        let lower = self.lower.min(n);
        let len = (n - lower + 1) as usize;
        let mut coeffs = Vec::with_capacity(len);
        for e in lower..=n {
            coeffs.push(if e < self.lower {
                self.ring.zero()
            } else {
                self.coeffs[(e - self.lower) as usize].clone()
            });
        }
        Ok(QSeries { ring: self.ring.clone(), lower, trunc: n, coeffs })
    }

    /// The p-dissection: series F_r with f(q) = sum_r q^r F_r(q^p).
    /// Reassembling with `substitute_qpower` and shifts is the identity.
    pub fn dissect(&self, p: i64) -> Vec<Self> {
        assert!(p >= 1);
        (0..p).map(|r| self.component(p, r)).collect()
    }

    fn component(&self, p: i64, r: i64) -> Self {
        let lower = ceil_div(self.lower - r, p);
        let trunc = floor_div(self.trunc - r, p);
        let lower = lower.min(trunc);
        let mut coeffs = vec![self.ring.zero(); (trunc - lower + 1) as usize];
        for (e, c) in self.terms() {
            if e.rem_euclid(p) == r.rem_euclid(p) {
                let n = floor_div(e - r, p);
                if n >= lower && n <= trunc {
                    coeffs[(n - lower) as usize] = c.clone();
                }
            }
        }
        QSeries { ring: self.ring.clone(), lower, trunc, coeffs }
    }

    /// U_{p,r}: picks the coefficients a(pn+r) as a series in q.
    pub fn atkin_u(&self, p: i64, r: i64) -> Self {
        assert!((0..p).contains(&r), "residue {r} out of range for modulus {p}");
        self.component(p, r)
    }

    /// U*_{p,m}: keeps only exponents congruent to m, without renormalizing.
    pub fn atkin_u_star(&self, p: i64, m: i64) -> Self {
        assert!((0..p).contains(&m), "residue {m} out of range for modulus {p}");
        let mut out = self.clone();
        for (i, c) in out.coeffs.iter_mut().enumerate() {
            let e = out.lower + i as i64;
            if e.rem_euclid(p) != m.rem_euclid(p) {
                *c = self.ring.zero();
            }
        }
        out
    }

    /// A_{p,m}: maps q^e to q^{(e-m)/p}. Every nonzero coefficient must sit on
    /// an exponent congruent to m mod p.
    pub fn atkin_a(&self, p: i64, m: i64) -> Result<Self, KernelError> {
        for (e, c) in self.terms() {
            if !self.ring.is_zero(c) && e.rem_euclid(p) != m.rem_euclid(p) {
                return Err(KernelError::Support(format!(
                    "A_{{{p},{m}}} applied to a series with support at q^{e}"
                )));
            }
        }
        Ok(self.component(p, m.rem_euclid(p)))
    }

    /// Re-express in another coefficient ring via an element embedding.
    pub fn map_ring<T: Ring>(&self, target: T, f: impl Fn(&R::Elem) -> T::Elem) -> QSeries<T> {
        QSeries {
            lower: self.lower,
            trunc: self.trunc,
            coeffs: self.coeffs.iter().map(f).collect(),
            ring: target,
        }
    }

    /// True when every known coefficient is integral in the ring's sense.
    pub fn is_integral(&self) -> bool {
        self.coeffs.iter().all(|c| self.ring.is_integral(c))
    }

    pub fn render_coeff(&self, e: i64) -> String {
        self.ring.render(&self.coeff(e))
    }
}

impl QSeries<IntRing> {
    /// Embed an integer series into any ring.
    pub fn embed<T: Ring>(&self, target: T) -> QSeries<T> {
        let t2 = target.clone();
        self.map_ring(target, move |c| t2.from_int(c))
    }
}

/// Exact comparison of all coefficients with exponent <= `up_to`.
/// Asking for more precision than either side carries is an error, never a
/// silent pass.
pub fn series_equal<R: Ring>(
    f: &QSeries<R>,
    g: &QSeries<R>,
    up_to: i64,
) -> Result<SeriesCmp, KernelError> {
    assert!(f.ring == g.ring, "coefficient ring mismatch in comparison");
    let avail = f.trunc.min(g.trunc);
    if up_to > avail {
        return Err(KernelError::Precision(format!(
            "comparison to order {up_to} requested, but only {avail} is known"
        )));
    }
    let lo = f.lower.min(g.lower);
    for e in lo..=up_to {
        let a = f.coeff(e);
        let b = g.coeff(e);
        if a != b {
            return Ok(SeriesCmp::Fail {
                exponent: e,
                lhs: f.ring.render(&a),
                rhs: g.ring.render(&b),
            });
        }
    }
    Ok(SeriesCmp::Pass { order: up_to })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::{int, Int, IntRing};

    fn geometric(trunc: i64) -> QSeries<IntRing> {
        QSeries::from_fn(IntRing, 0, trunc, |_| int(1))
    }

    /// Pentagonal-number expansion of (q;q)_inf, as an independent builder.
    fn euler(trunc: i64) -> QSeries<IntRing> {
        let mut s = QSeries::zero(IntRing, trunc);
        let mut k = 0i64;
        loop {
            for kk in [k, -k] {
                let e = kk * (3 * kk - 1) / 2;
                if e <= trunc {
                    let sign = if kk.rem_euclid(2) == 0 { 1 } else { -1 };
                    s = s.add(&QSeries::monomial_scaled(IntRing, int(sign), e, trunc));
                }
                if kk == 0 {
                    break;
                }
            }
            if k * (3 * k - 1) / 2 > trunc && k * (3 * k + 1) / 2 > trunc {
                break;
            }
            k += 1;
        }
        s
    }

    #[test]
    fn telescoping() {
        let n = 30;
        let f = QSeries::one(IntRing, n).mul_binomial(&int(-1), 1); // 1 - q
        let prod = f.mul(&geometric(n));
        assert!(series_equal(&prod, &QSeries::one(IntRing, n), n).unwrap().is_pass());
    }

    #[test]
    fn euler_square_low_order() {
        // hand-computed: E(q)^2 = 1 - 2q - q^2 + 2q^3 + q^4 + 2q^5 + ...
        let e = euler(12);
        let sq = e.mul(&e);
        let expect = [1, -2, -1, 2, 1, 2];
        for (n, v) in expect.iter().enumerate() {
            assert_eq!(sq.coeff(n as i64), int(*v), "coefficient of q^{n}");
        }
    }

    #[test]
    fn inverse_of_one_minus_q() {
        let n = 25;
        let f = QSeries::one(IntRing, n).mul_binomial(&int(-1), 1);
        let inv = f.inv().unwrap();
        assert!(series_equal(&inv, &geometric(n), n).unwrap().is_pass());
    }

    #[test]
    fn partition_series_from_euler() {
        let n = 30;
        let p = euler(n).inv().unwrap();
        assert_eq!(p.coeff(4), int(5));
        assert_eq!(p.coeff(10), int(42));
        assert_eq!(p.coeff(30), int(5604));
    }

    #[test]
    fn inverse_with_laurent_shift() {
        // inv(q - q^2) = q^{-1} (1 + q + q^2 + ...)
        let n = 10;
        let f = QSeries::monomial(IntRing, 1, n).mul_binomial(&int(-1), 1);
        let inv = f.inv().unwrap();
        assert_eq!(inv.lower(), -1);
        for e in -1..=inv.trunc() {
            assert_eq!(inv.coeff(e), int(1));
        }
        // non-unit leading coefficient over Z is an error
        let g = QSeries::monomial_scaled(IntRing, int(2), 0, n);
        assert!(g.inv().is_err());
        assert!(QSeries::<IntRing>::zero(IntRing, n).inv().is_err());
    }

    #[test]
    fn substitution_and_support() {
        let n = 8;
        let f = QSeries::one(IntRing, n).mul_binomial(&int(1), 1); // 1 + q
        let g = f.substitute_qpower(2);
        assert_eq!(g.coeff(0), int(1));
        assert_eq!(g.coeff(1), int(0));
        assert_eq!(g.coeff(2), int(1));
        assert_eq!(g.trunc(), 2 * n + 1);
        // E(q^5) is supported on multiples of 5
        let e5 = euler(12).substitute_qpower(5);
        for (e, c) in e5.terms() {
            if !IntRing.is_zero(c) {
                assert_eq!(e % 5, 0);
            }
        }
    }

    #[test]
    fn dissect_roundtrip() {
        let n = 37;
        let p = euler(n).inv().unwrap();
        for m in [2i64, 3, 5] {
            let parts = p.dissect(m);
            let mut back = QSeries::zero(IntRing, n);
            for (r, comp) in parts.iter().enumerate() {
                back = back.add(&comp.substitute_qpower(m).shift(r as i64));
            }
            assert!(series_equal(&back, &p, n).unwrap().is_pass());
        }
        // dissecting the geometric series in 2 gives two geometric series
        let g = geometric(21);
        let parts = g.dissect(2);
        for part in parts {
            assert!(series_equal(&part, &geometric(part.trunc()), part.trunc()).unwrap().is_pass());
        }
    }

    #[test]
    fn ramanujan_mod5_on_partition_coefficients() {
        use num_traits::Zero;
        let n = 120;
        let p = euler(n).inv().unwrap();
        let u = p.atkin_u(5, 4);
        for (_, c) in u.terms() {
            assert!((c % Int::from(5)).is_zero(), "p(5n+4) not divisible by 5");
        }
    }

    #[test]
    fn atkin_operator_relations() {
        let n = 40;
        let g = euler(n).inv().unwrap();
        let f = g.substitute_qpower(3);
        // U_{3,0} recovers g, other residues give 0
        let u0 = f.atkin_u(3, 0);
        assert!(series_equal(&u0, &g, g.trunc().min(u0.trunc())).unwrap().is_pass());
        for r in 1..3 {
            let ur = f.atkin_u(3, r);
            assert!(ur.is_zero_series());
        }
        // U_{p,m} = A_{p,m} after U*_{p,m}
        let star = f.atkin_u_star(3, 2).atkin_a(3, 2).unwrap();
        assert!(series_equal(&star, &f.atkin_u(3, 2), star.trunc()).unwrap().is_pass());
        // A on mixed support is an error
        assert!(f.add(&QSeries::monomial(IntRing, 1, f.trunc())).atkin_a(3, 0).is_err());
        // U_{p,0} of a constant is the constant
        let one = QSeries::one(IntRing, 12);
        assert!(series_equal(&one.atkin_u(5, 0), &QSeries::one(IntRing, 2), 2)
            .unwrap()
            .is_pass());
    }

    #[test]
    fn comparison_reports_first_mismatch() {
        let n = 10;
        let f = QSeries::one(IntRing, n);
        assert!(series_equal(&f, &f, n).unwrap().is_pass());
        let g = f.add(&QSeries::monomial(IntRing, 7, n));
        match series_equal(&f, &g, n).unwrap() {
            SeriesCmp::Fail { exponent, lhs, rhs } => {
                assert_eq!(exponent, 7);
                assert_eq!(lhs, "0");
                assert_eq!(rhs, "1");
            }
            SeriesCmp::Pass { .. } => panic!("expected mismatch"),
        }
        // precision is never silently clipped
        assert!(series_equal(&f, &g, n + 1).is_err());
    }

    #[test]
    fn truncation_bookkeeping_in_products() {
        // f known to q^10 with lower 2, g known to q^7 with lower 0:
        // product claims min(10+0, 7+2) = 9
        let f = QSeries::monomial(IntRing, 2, 10);
        let g = geometric(7);
        assert_eq!(f.mul(&g).trunc(), 9);
        // trimming a known-zero head sharpens the claim
        let mut h = QSeries::zero(IntRing, 10).add(&QSeries::monomial(IntRing, 3, 10));
        h.trim();
        assert_eq!(h.lower(), 3);
    }

    #[test]
    #[should_panic(expected = "ring mismatch")]
    fn ring_mismatch_panics() {
        use crate::cyclo::CycloField;
        let a = QSeries::one(CycloField::new(5), 5);
        let b = QSeries::one(CycloField::new(7), 5);
        let _ = a.add(&b);
    }
}
