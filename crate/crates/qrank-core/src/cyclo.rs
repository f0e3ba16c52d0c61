//! The cyclotomic fields Q(zeta_p) for prime p.
//!
//! Elements are stored in the reduced basis 1, zeta, ..., zeta^{p-2}; the
//! reduction rule is the single linear relation
//! zeta^{p-1} = -(1 + zeta + ... + zeta^{p-2}), which is all that is needed
//! because the p-th cyclotomic polynomial of a prime is 1 + x + ... + x^{p-1}.
//! The representation modulo that polynomial is unique, so an element is zero
//! exactly when all stored coefficients are zero, and equality is structural.
//!
//! Coefficients are rationals so that inversion stays inside the type;
//! checks that must land in Z\[zeta\] assert integrality at the end.

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;

use num_traits::{One, Signed, Zero};

use crate::error::KernelError;
use crate::laurent::LaurentPoly;
use crate::ring::{Int, Rat, Ring};

/// An element of Q(zeta_p), reduced: coefficients of 1, zeta, ..., zeta^{p-2}.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CycloNum {
    /// The prime order p of the root of unity.
    pub order: u32,
    /// Exactly p-1 rational coefficients.
    pub coeffs: Vec<Rat>,
}

impl CycloNum {
    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    /// True when every coefficient is an integer, i.e. the element lies in Z\[zeta\].
    pub fn is_integral(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_integer())
    }
}

/// The field Q(zeta_p); the ring tag carried by cyclotomic-coefficient series.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CycloField {
    p: u32,
}

impl CycloField {
    /// Field of order `p`. Panics unless p is a prime >= 3: for prime p the
    /// reduction rule above is complete, and nothing else is supported.
    pub fn new(p: u32) -> Self {
        assert!(p >= 3 && is_prime(p), "cyclotomic order must be a prime >= 3, got {p}");
        CycloField { p }
    }

    pub fn order(&self) -> u32 {
        self.p
    }

    fn dim(&self) -> usize {
        (self.p - 1) as usize
    }

    fn check(&self, a: &CycloNum) {
        assert_eq!(
            a.order, self.p,
            "cyclotomic order mismatch: element of Q(zeta_{}) used in Q(zeta_{})",
            a.order, self.p
        );
        debug_assert_eq!(a.coeffs.len(), self.dim());
    }

    fn make(&self, coeffs: Vec<Rat>) -> CycloNum {
        debug_assert_eq!(coeffs.len(), self.dim());
        CycloNum { order: self.p, coeffs }
    }

    pub fn from_rat(&self, r: Rat) -> CycloNum {
        let mut coeffs = vec![Rat::zero(); self.dim()];
        coeffs[0] = r;
        self.make(coeffs)
    }

    /// zeta^k, reduced (k may be any integer).
    pub fn zeta(&self, k: i64) -> CycloNum {
        let e = k.rem_euclid(self.p as i64) as usize;
        let mut coeffs = vec![Rat::zero(); self.dim()];
        if e == self.dim() {
            // zeta^{p-1} = -(1 + zeta + ... + zeta^{p-2})
            for c in coeffs.iter_mut() {
                *c = -Rat::one();
            }
        } else {
            coeffs[e] = Rat::one();
        }
        self.make(coeffs)
    }

    /// Reduce a polynomial-in-zeta coefficient vector of any length.
    fn reduce(&self, raw: &[Rat]) -> CycloNum {
        let p = self.p as usize;
        let mut folded = vec![Rat::zero(); p];
        for (e, c) in raw.iter().enumerate() {
            if !c.is_zero() {
                folded[e % p] += c;
            }
        }
        let top = folded[p - 1].clone();
        let mut coeffs = Vec::with_capacity(p - 1);
        for item in folded.iter().take(p - 1) {
            coeffs.push(item - &top);
        }
        self.make(coeffs)
    }

    /// Evaluate a Laurent polynomial in z at z = zeta^k. Ring homomorphism:
    /// addition and multiplication commute with this map.
    pub fn specialize_laurent(&self, f: &LaurentPoly<Rat>, k: i64) -> CycloNum {
        let mut acc = self.zero();
        for (&e, c) in f.iter() {
            let term = self.scale_rat(&self.zeta(k * e), c);
            acc = self.add(&acc, &term);
        }
        acc
    }

    /// Same for integer-coefficient Laurent polynomials.
    pub fn specialize_laurent_int(&self, f: &LaurentPoly<Int>, k: i64) -> CycloNum {
        let mut acc = self.zero();
        for (&e, c) in f.iter() {
            let term = self.scale_rat(&self.zeta(k * e), &Rat::from_integer(c.clone()));
            acc = self.add(&acc, &term);
        }
        acc
    }

    pub fn scale_rat(&self, a: &CycloNum, r: &Rat) -> CycloNum {
        self.check(a);
        if r.is_zero() {
            return self.zero();
        }
        self.make(a.coeffs.iter().map(|c| c * r).collect())
    }
}

impl Ring for CycloField {
    type Elem = CycloNum;

    fn zero(&self) -> CycloNum {
        self.make(vec![Rat::zero(); self.dim()])
    }

    fn one(&self) -> CycloNum {
        self.from_rat(Rat::one())
    }

    fn is_zero(&self, a: &CycloNum) -> bool {
        self.check(a);
        a.is_zero()
    }

    fn neg(&self, a: &CycloNum) -> CycloNum {
        self.check(a);
        self.make(a.coeffs.iter().map(|c| -c).collect())
    }

    fn add(&self, a: &CycloNum, b: &CycloNum) -> CycloNum {
        self.check(a);
        self.check(b);
        self.make(a.coeffs.iter().zip(&b.coeffs).map(|(x, y)| x + y).collect())
    }

    fn sub(&self, a: &CycloNum, b: &CycloNum) -> CycloNum {
        self.check(a);
        self.check(b);
        self.make(a.coeffs.iter().zip(&b.coeffs).map(|(x, y)| x - y).collect())
    }

    fn mul(&self, a: &CycloNum, b: &CycloNum) -> CycloNum {
        self.check(a);
        self.check(b);
        let d = self.dim();
        let mut raw = vec![Rat::zero(); 2 * d - 1];
        for (i, x) in a.coeffs.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.coeffs.iter().enumerate() {
                if !y.is_zero() {
                    raw[i + j] += x * y;
                }
            }
        }
        self.reduce(&raw)
    }

    fn from_int(&self, n: &Int) -> CycloNum {
        self.from_rat(Rat::from_integer(n.clone()))
    }

    /// Extended Euclidean algorithm on the representative polynomial and
    /// Phi_p = 1 + x + ... + x^{p-1} over Q. Phi_p is irreducible for prime p,
    /// so every nonzero element is a unit.
    fn try_inv(&self, a: &CycloNum) -> Result<CycloNum, KernelError> {
        self.check(a);
        if a.is_zero() {
            return Err(KernelError::NotInvertible(
                "zero cyclotomic number".to_string(),
            ));
        }
        let phi = vec![Rat::one(); self.p as usize];
        let a_poly = trim_poly(a.coeffs.clone());

        // invariant: r0 = t0*a + s0*phi, r1 = t1*a + s1*phi (s's not tracked)
        let mut r0 = phi;
        let mut r1 = a_poly;
        let mut t0: Vec<Rat> = Vec::new(); // 0
        let mut t1: Vec<Rat> = vec![Rat::one()];
        while !r1.is_empty() {
            let (q, rem) = poly_divmod(&r0, &r1);
            let t2 = poly_sub(&t0, &poly_mul(&q, &t1));
            r0 = r1;
            r1 = rem;
            t0 = t1;
            t1 = t2;
        }
        // r0 is a nonzero constant gcd; divide through.
        debug_assert_eq!(r0.len(), 1);
        let c = r0[0].recip();
        let scaled: Vec<Rat> = t0.iter().map(|x| x * &c).collect();
        let inv = self.reduce(&scaled);
        debug_assert_eq!(self.mul(a, &inv), self.one());
        Ok(inv)
    }

    fn render(&self, a: &CycloNum) -> String {
        self.check(a);
        let mut out = String::new();
        for (e, c) in a.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            let part = if e == 0 {
                mag.to_string()
            } else {
                let pow = if e == 1 {
                    "w".to_string()
                } else {
                    format!("w^{e}")
                };
                if mag.is_one() {
                    pow
                } else {
                    format!("{mag}*{pow}")
                }
            };
            if out.is_empty() {
                if c.is_negative() {
                    out.push('-');
                }
            } else {
                out.push_str(if c.is_negative() { " - " } else { " + " });
            }
            out.push_str(&part);
        }
        if out.is_empty() {
            out.push('0');
        }
        out
    }

    fn zeta_pow(&self, k: i64) -> Option<CycloNum> {
        Some(self.zeta(k))
    }

    /// Accumulation fast path: when one factor is a single term r*zeta^e,
    /// the product is a coefficient rotation (with the zeta^{p-1} fold-back),
    /// which skips the full convolution and its temporaries. This is the
    /// inner loop of every binomial multiplication and geometric division
    /// with root-of-unity coefficients.
    fn mul_add_assign(&self, acc: &mut CycloNum, a: &CycloNum, b: &CycloNum) {
        self.check(acc);
        self.check(a);
        self.check(b);
        let single = |x: &CycloNum| -> Option<usize> {
            let mut found = None;
            for (i, c) in x.coeffs.iter().enumerate() {
                if !c.is_zero() {
                    if found.is_some() {
                        return None;
                    }
                    found = Some(i);
                }
            }
            found
        };
        let (mono, dense) = if let Some(i) = single(a) {
            ((i, &a.coeffs[i]), b)
        } else if let Some(i) = single(b) {
            ((i, &b.coeffs[i]), a)
        } else {
            let p = self.mul(a, b);
            *acc = self.add(acc, &p);
            return;
        };
        let p = self.p as usize;
        let (e, r) = mono;
        for (i, c) in dense.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let t = (i + e) % p;
            let v = c * r;
            if t == p - 1 {
                // zeta^{p-1} = -(1 + zeta + ... + zeta^{p-2})
                for slot in acc.coeffs.iter_mut() {
                    *slot -= &v;
                }
            } else {
                acc.coeffs[t] += v;
            }
        }
    }

    fn is_integral(&self, a: &CycloNum) -> bool {
        self.check(a);
        a.is_integral()
    }
}

fn is_prime(n: u32) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u32;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

// --- dense polynomial helpers over Q (no trailing zeros, empty = 0) ---

fn trim_poly(mut v: Vec<Rat>) -> Vec<Rat> {
    while v.last().is_some_and(|c| c.is_zero()) {
        v.pop();
    }
    v
}

fn poly_sub(a: &[Rat], b: &[Rat]) -> Vec<Rat> {
    let n = a.len().max(b.len());
    let mut out = vec![Rat::zero(); n];
    for (i, x) in a.iter().enumerate() {
        out[i] += x;
    }
    for (i, y) in b.iter().enumerate() {
        out[i] -= y;
    }
    trim_poly(out)
}

fn poly_mul(a: &[Rat], b: &[Rat]) -> Vec<Rat> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![Rat::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            if !y.is_zero() {
                out[i + j] += x * y;
            }
        }
    }
    trim_poly(out)
}

/// Division with remainder in Q[x]; `b` must be nonzero.
fn poly_divmod(a: &[Rat], b: &[Rat]) -> (Vec<Rat>, Vec<Rat>) {
    assert!(!b.is_empty(), "polynomial division by zero");
    let mut rem = a.to_vec();
    if a.len() < b.len() {
        return (Vec::new(), trim_poly(rem));
    }
    let mut quot = vec![Rat::zero(); a.len() - b.len() + 1];
    let lead_inv = b[b.len() - 1].recip();
    for k in (0..quot.len()).rev() {
        let idx = k + b.len() - 1;
        if rem.len() <= idx || rem[idx].is_zero() {
            continue;
        }
        let f = &rem[idx] * &lead_inv;
        for (j, bc) in b.iter().enumerate() {
            let t = bc * &f;
            rem[k + j] -= t;
        }
        quot[k] = f;
    }
    (trim_poly(quot), trim_poly(rem))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::rat;

    fn f5() -> CycloField {
        CycloField::new(5)
    }

    #[test]
    fn zeta_powers_multiply() {
        let f = f5();
        // zeta^2 * zeta^3 = 1
        assert_eq!(f.mul(&f.zeta(2), &f.zeta(3)), f.one());
        // zeta^3 * zeta^3 = zeta
        assert_eq!(f.mul(&f.zeta(3), &f.zeta(3)), f.zeta(1));
    }

    #[test]
    fn golden_product() {
        // (zeta + zeta^4)(zeta^2 + zeta^3) = zeta + zeta^2 + zeta^3 + zeta^4 = -1
        let f = f5();
        let a = f.add(&f.zeta(1), &f.zeta(4));
        let b = f.add(&f.zeta(2), &f.zeta(3));
        assert_eq!(f.mul(&a, &b), f.from_rat(rat(-1, 1)));
    }

    #[test]
    fn inverse_of_roots() {
        let f = f5();
        for k in 1..5 {
            assert_eq!(f.try_inv(&f.zeta(k)).unwrap(), f.zeta(5 - k));
        }
        // inv(zeta + zeta^4) = -(zeta^2 + zeta^3), from the product above
        let a = f.add(&f.zeta(1), &f.zeta(4));
        let b = f.neg(&f.add(&f.zeta(2), &f.zeta(3)));
        assert_eq!(f.try_inv(&a).unwrap(), b);
    }

    #[test]
    fn inverse_of_one_minus_zeta() {
        let f = f5();
        let a = f.sub(&f.one(), &f.zeta(1));
        let v = f.try_inv(&a).unwrap();
        assert_eq!(f.mul(&a, &v), f.one());
        assert!(f.try_inv(&f.zero()).is_err());
    }

    #[test]
    fn vanishing_cyclotomic_sum() {
        for p in [3u32, 5, 7, 11] {
            let f = CycloField::new(p);
            let mut s = f.zero();
            for k in 0..p as i64 {
                s = f.add(&s, &f.zeta(k));
            }
            assert!(s.is_zero());
        }
    }

    #[test]
    fn norm_of_one_minus_zeta_is_p() {
        for p in [5u32, 7, 11] {
            let f = CycloField::new(p);
            let mut prod = f.one();
            for k in 1..p as i64 {
                prod = f.mul(&prod, &f.sub(&f.one(), &f.zeta(k)));
            }
            assert_eq!(prod, f.from_int(&Int::from(p)));
        }
    }

    #[test]
    #[should_panic(expected = "order mismatch")]
    fn mixed_orders_panic() {
        let a = f5().zeta(1);
        let b = CycloField::new(7).zeta(1);
        let _ = f5().add(&a, &b);
    }

    #[test]
    #[should_panic(expected = "prime")]
    fn composite_order_rejected() {
        let _ = CycloField::new(9);
    }

    #[test]
    fn render_reads_naturally() {
        let f = f5();
        let x = f.sub(&f.from_rat(rat(1, 2)), &f.zeta(3));
        assert_eq!(f.render(&x), "1/2 - w^3");
        assert_eq!(f.render(&f.zero()), "0");
    }
}
