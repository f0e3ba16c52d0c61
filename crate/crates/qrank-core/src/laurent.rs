//! Laurent polynomials in the formal rank variable z.
//!
//! Finite support, canonical form: no stored zero coefficients, so equality
//! is map equality. Exponents are unrestricted in sign; negative powers of z
//! occur on the right side of every two-variable rank identity.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;

use crate::error::KernelError;
use crate::ring::{Int, Ring};

/// A Laurent polynomial with coefficients in `E`, keyed by z-exponent.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LaurentPoly<E> {
    coeffs: BTreeMap<i64, E>,
}

impl<E> LaurentPoly<E> {
    pub fn zero() -> Self {
        LaurentPoly { coeffs: BTreeMap::new() }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&i64, &E)> {
        self.coeffs.iter()
    }

    pub fn get(&self, exp: i64) -> Option<&E> {
        self.coeffs.get(&exp)
    }

    pub fn support_len(&self) -> usize {
        self.coeffs.len()
    }

    /// Smallest and largest z-exponent, if nonzero.
    pub fn exp_range(&self) -> Option<(i64, i64)> {
        let lo = self.coeffs.keys().next()?;
        let hi = self.coeffs.keys().next_back()?;
        Some((*lo, *hi))
    }
}

/// Laurent polynomials over a base ring, as a ring themselves.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct LaurentRing<R: Ring> {
    pub base: R,
}

impl<R: Ring> LaurentRing<R> {
    pub fn new(base: R) -> Self {
        LaurentRing { base }
    }

    /// Build from (z-exponent, coefficient) pairs, dropping zeros and
    /// summing repeats.
    pub fn from_pairs(&self, pairs: impl IntoIterator<Item = (i64, R::Elem)>) -> LaurentPoly<R::Elem> {
        let mut coeffs: BTreeMap<i64, R::Elem> = BTreeMap::new();
        for (e, c) in pairs {
            if self.base.is_zero(&c) {
                continue;
            }
            match coeffs.remove(&e) {
                None => {
                    coeffs.insert(e, c);
                }
                Some(old) => {
                    let s = self.base.add(&old, &c);
                    if !self.base.is_zero(&s) {
                        coeffs.insert(e, s);
                    }
                }
            }
        }
        LaurentPoly { coeffs }
    }

    /// The monomial c * z^e.
    pub fn monomial(&self, e: i64, c: R::Elem) -> LaurentPoly<R::Elem> {
        self.from_pairs([(e, c)])
    }
}

impl<R: Ring> Ring for LaurentRing<R> {
    type Elem = LaurentPoly<R::Elem>;

    fn zero(&self) -> Self::Elem {
        LaurentPoly::zero()
    }

    fn one(&self) -> Self::Elem {
        self.monomial(0, self.base.one())
    }

    fn is_zero(&self, a: &Self::Elem) -> bool {
        a.is_zero()
    }

    fn neg(&self, a: &Self::Elem) -> Self::Elem {
        LaurentPoly {
            coeffs: a.coeffs.iter().map(|(&e, c)| (e, self.base.neg(c))).collect(),
        }
    }

    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        let mut out = a.coeffs.clone();
        for (&e, c) in &b.coeffs {
            match out.remove(&e) {
                None => {
                    out.insert(e, c.clone());
                }
                Some(old) => {
                    let s = self.base.add(&old, c);
                    if !self.base.is_zero(&s) {
                        out.insert(e, s);
                    }
                }
            }
        }
        LaurentPoly { coeffs: out }
    }

    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        self.add(a, &self.neg(b))
    }

    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        let (Some((alo, ahi)), Some((blo, bhi))) = (a.exp_range(), b.exp_range()) else {
            return LaurentPoly::zero();
        };
        // dense window for the convolution, then strip zeros
        let lo = alo + blo;
        let len = (ahi + bhi - lo + 1) as usize;
        let mut window: Vec<R::Elem> = Vec::with_capacity(len);
        window.resize(len, self.base.zero());
        for (&ea, ca) in &a.coeffs {
            for (&eb, cb) in &b.coeffs {
                let idx = (ea + eb - lo) as usize;
                self.base.mul_add_assign(&mut window[idx], ca, cb);
            }
        }
        let coeffs = window
            .into_iter()
            .enumerate()
            .filter(|(_, c)| !self.base.is_zero(c))
            .map(|(i, c)| (lo + i as i64, c))
            .collect();
        LaurentPoly { coeffs }
    }

    fn from_int(&self, n: &Int) -> Self::Elem {
        self.monomial(0, self.base.from_int(n))
    }

    /// Only monomials with a unit coefficient are invertible.
    fn try_inv(&self, a: &Self::Elem) -> Result<Self::Elem, KernelError> {
        if a.coeffs.len() != 1 {
            return Err(KernelError::NotInvertible(
                "non-monomial Laurent polynomial".to_string(),
            ));
        }
        let (&e, c) = a.coeffs.iter().next().unwrap();
        let ci = self.base.try_inv(c)?;
        Ok(self.monomial(-e, ci))
    }

    fn render(&self, a: &Self::Elem) -> String {
        if a.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (&e, c) in &a.coeffs {
            let cs = self.base.render(c);
            let wrapped = if cs.contains(' ') { format!("({cs})") } else { cs };
            if !out.is_empty() {
                out.push_str(" + ");
            }
            if e == 0 {
                out.push_str(&wrapped);
            } else {
                let zp = if e == 1 { "z".to_string() } else { format!("z^{e}") };
                if wrapped == "1" {
                    out.push_str(&zp);
                } else {
                    out.push_str(&format!("{wrapped}*{zp}"));
                }
            }
        }
        out
    }

    fn zeta_pow(&self, k: i64) -> Option<Self::Elem> {
        self.base.zeta_pow(k).map(|c| self.monomial(0, c))
    }

    fn z_pow(&self, k: i64) -> Option<Self::Elem> {
        Some(self.monomial(k, self.base.one()))
    }

    fn is_integral(&self, a: &Self::Elem) -> bool {
        a.coeffs.values().all(|c| self.base.is_integral(c))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cyclo::CycloField;
    use crate::ring::{rat, RatRing};

    fn zr() -> LaurentRing<RatRing> {
        LaurentRing::new(RatRing)
    }

    #[test]
    fn square_of_z_plus_inverse() {
        let r = zr();
        let f = r.from_pairs([(1, rat(1, 1)), (-1, rat(1, 1))]);
        let sq = r.mul(&f, &f);
        let expect = r.from_pairs([(2, rat(1, 1)), (0, rat(2, 1)), (-2, rat(1, 1))]);
        assert_eq!(sq, expect);
    }

    #[test]
    fn telescoping_product() {
        let r = zr();
        let a = r.from_pairs([(0, rat(1, 1)), (1, rat(-1, 1))]);
        let b = r.from_pairs([(0, rat(1, 1)), (1, rat(1, 1)), (2, rat(1, 1))]);
        let prod = r.mul(&a, &b);
        assert_eq!(prod, r.from_pairs([(0, rat(1, 1)), (3, rat(-1, 1))]));
        // multiplying by one is the identity
        assert_eq!(r.mul(&b, &r.one()), b);
    }

    #[test]
    fn no_zero_coefficients_survive() {
        let r = zr();
        let a = r.from_pairs([(0, rat(1, 1)), (1, rat(1, 1))]);
        let b = r.from_pairs([(0, rat(1, 1)), (1, rat(-1, 1))]);
        // (1+z)(1-z) = 1 - z^2: the z^1 slot cancels and must not be stored
        let prod = r.mul(&a, &b);
        assert_eq!(prod.support_len(), 2);
        assert!(prod.get(1).is_none());
        let diff = r.sub(&a, &a);
        assert!(diff.is_zero());
    }

    #[test]
    fn specialization_values() {
        let f5 = CycloField::new(5);
        let r = zr();
        // z^5 at zeta
        assert_eq!(f5.specialize_laurent(&r.z_pow(5).unwrap(), 1), f5.one());
        // 1 + z + z^2 + z^3 + z^4 vanishes at zeta
        let all = r.from_pairs((0..5).map(|e| (e, rat(1, 1))));
        assert!(f5.specialize_laurent(&all, 1).is_zero());
        // 1 + z^2 + z^3 at zeta
        let g = r.from_pairs([(0, rat(1, 1)), (2, rat(1, 1)), (3, rat(1, 1))]);
        let expect = f5.add(&f5.one(), &f5.add(&f5.zeta(2), &f5.zeta(3)));
        assert_eq!(f5.specialize_laurent(&g, 1), expect);
    }

    #[test]
    fn specialization_is_multiplicative() {
        let f5 = CycloField::new(5);
        let r = zr();
        let f = r.from_pairs([(-1, rat(2, 3)), (2, rat(1, 1))]);
        let g = r.from_pairs([(0, rat(1, 2)), (3, rat(-1, 1)), (4, rat(1, 1))]);
        let lhs = f5.specialize_laurent(&r.mul(&f, &g), 2);
        let rhs = f5.mul(&f5.specialize_laurent(&f, 2), &f5.specialize_laurent(&g, 2));
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn monomial_inverse() {
        let r = zr();
        let m = r.monomial(3, rat(2, 1));
        let inv = r.try_inv(&m).unwrap();
        assert_eq!(r.mul(&m, &inv), r.one());
        let poly = r.from_pairs([(0, rat(1, 1)), (1, rat(1, 1))]);
        assert!(r.try_inv(&poly).is_err());
    }
}
