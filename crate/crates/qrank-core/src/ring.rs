//! Coefficient rings.
//!
//! The series layer is generic over a small ring interface. A ring is a cheap
//! tag value (unit struct, or a struct carrying the cyclotomic order) whose
//! methods implement exact arithmetic on its element type. Keeping the ring as
//! a value rather than a type parameter of the element is what lets Q(zeta_p)
//! exist for runtime p without every element dragging its own context around
//! redundantly.
//!
//! Two rings interoperate only if they are equal as values; series and
//! polynomial operations assert this and panic on a mismatch (a mismatch is a
//! bug in the calling code, never a property of the data).

use alloc::string::{String, ToString};
use core::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::KernelError;

/// Exact arbitrary-precision signed integer.
pub type Int = BigInt;
/// Exact rational, always in lowest terms with positive denominator
/// (maintained by the representation itself).
pub type Rat = BigRational;

/// Shorthand for an integer literal.
pub fn int(n: i64) -> Int {
    Int::from(n)
}

/// Shorthand for a rational literal n/d.
pub fn rat(n: i64, d: i64) -> Rat {
    Rat::new(Int::from(n), Int::from(d))
}

/// A commutative ring with exact arithmetic, used as the coefficient domain
/// of Laurent polynomials and truncated q-series.
///
/// Embedding methods take `&self` because the ring is a value, not a type.
#[allow(clippy::wrong_self_convention)]
pub trait Ring: Clone + PartialEq + fmt::Debug {
    type Elem: Clone + PartialEq + fmt::Debug;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn is_zero(&self, a: &Self::Elem) -> bool;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn from_int(&self, n: &Int) -> Self::Elem;

    fn from_i64(&self, n: i64) -> Self::Elem {
        self.from_int(&Int::from(n))
    }

    /// Multiplicative inverse, if `a` is a unit of the ring.
    fn try_inv(&self, a: &Self::Elem) -> Result<Self::Elem, KernelError>;

    /// Exact human-readable form, used in mismatch reports.
    fn render(&self, a: &Self::Elem) -> String;

    /// Embed a root of unity zeta^k, when the ring contains one.
    /// Rings without a distinguished root accept only k = 0.
    fn zeta_pow(&self, k: i64) -> Option<Self::Elem> {
        if k == 0 {
            Some(self.one())
        } else {
            None
        }
    }

    /// Embed z^k for the formal rank variable z; only Laurent rings have one.
    fn z_pow(&self, k: i64) -> Option<Self::Elem> {
        if k == 0 {
            Some(self.one())
        } else {
            None
        }
    }

    fn add_assign(&self, acc: &mut Self::Elem, x: &Self::Elem) {
        *acc = self.add(acc, x);
    }

    fn mul_add_assign(&self, acc: &mut Self::Elem, a: &Self::Elem, b: &Self::Elem) {
        if !self.is_zero(a) && !self.is_zero(b) {
            let p = self.mul(a, b);
            self.add_assign(acc, &p);
        }
    }

    /// True when the element lies in the image of Z under `from_int`.
    /// Used by integrality assertions on rationally-accumulated results.
    fn is_integral(&self, a: &Self::Elem) -> bool;
}

/// The ring of integers Z.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct IntRing;

impl Ring for IntRing {
    type Elem = Int;

    fn zero(&self) -> Int {
        Int::zero()
    }
    fn one(&self) -> Int {
        Int::one()
    }
    fn is_zero(&self, a: &Int) -> bool {
        a.is_zero()
    }
    fn neg(&self, a: &Int) -> Int {
        -a
    }
    fn add(&self, a: &Int, b: &Int) -> Int {
        a + b
    }
    fn sub(&self, a: &Int, b: &Int) -> Int {
        a - b
    }
    fn mul(&self, a: &Int, b: &Int) -> Int {
        a * b
    }
    fn from_int(&self, n: &Int) -> Int {
        n.clone()
    }

    fn try_inv(&self, a: &Int) -> Result<Int, KernelError> {
        if a.is_one() || (-a).is_one() {
            Ok(a.clone())
        } else if a.is_zero() {
            Err(KernelError::NotInvertible("zero integer".to_string()))
        } else {
            Err(KernelError::NotInvertible(alloc::format!(
                "integer {a} is not a unit (only +-1 are)"
            )))
        }
    }

    fn render(&self, a: &Int) -> String {
        a.to_string()
    }

    fn is_integral(&self, _a: &Int) -> bool {
        true
    }
}

/// The field of rationals Q.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct RatRing;

impl Ring for RatRing {
    type Elem = Rat;

    fn zero(&self) -> Rat {
        Rat::zero()
    }
    fn one(&self) -> Rat {
        Rat::one()
    }
    fn is_zero(&self, a: &Rat) -> bool {
        a.is_zero()
    }
    fn neg(&self, a: &Rat) -> Rat {
        -a
    }
    fn add(&self, a: &Rat, b: &Rat) -> Rat {
        a + b
    }
    fn sub(&self, a: &Rat, b: &Rat) -> Rat {
        a - b
    }
    fn mul(&self, a: &Rat, b: &Rat) -> Rat {
        a * b
    }
    fn from_int(&self, n: &Int) -> Rat {
        Rat::from_integer(n.clone())
    }

    fn try_inv(&self, a: &Rat) -> Result<Rat, KernelError> {
        if a.is_zero() {
            Err(KernelError::NotInvertible("zero rational".to_string()))
        } else {
            Ok(a.recip())
        }
    }

    fn render(&self, a: &Rat) -> String {
        a.to_string()
    }

    fn is_integral(&self, a: &Rat) -> bool {
        a.is_integer()
    }
}

/// Sign helper: (-1)^n without constructing bignums.
pub fn sign_pow(n: i64) -> i64 {
    if n.rem_euclid(2) == 0 {
        1
    } else {
        -1
    }
}

/// Legendre-type residue symbol mod 3: +1, -1, 0 for n = 1, 2, 0 mod 3.
pub fn legendre3(n: i64) -> i64 {
    match n.rem_euclid(3) {
        0 => 0,
        1 => 1,
        _ => -1,
    }
}

/// True if `a` is a nonnegative rational with denominator 1.
pub fn rat_is_nonneg_integer(a: &Rat) -> bool {
    a.is_integer() && !a.is_negative()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn integer_units() {
        let r = IntRing;
        assert_eq!(r.try_inv(&int(1)).unwrap(), int(1));
        assert_eq!(r.try_inv(&int(-1)).unwrap(), int(-1));
        assert!(r.try_inv(&int(2)).is_err());
        assert!(r.try_inv(&int(0)).is_err());
    }

    #[test]
    fn rational_normalized() {
        // lowest terms, positive denominator
        let x = rat(4, -6);
        assert_eq!(x, rat(-2, 3));
        assert_eq!(x.to_string(), "-2/3");
        let r = RatRing;
        assert_eq!(r.mul(&x, &r.try_inv(&x).unwrap()), r.one());
    }

    #[test]
    fn big_magnitudes_are_exact() {
        // products of partition-scale counts must not overflow
        let p200 = Int::parse_bytes(b"3972999029388", 10).unwrap();
        let r = IntRing;
        let sq = r.mul(&p200, &p200);
        assert_eq!(sq.to_string(), "15784721287517990087654544");
    }

    #[test]
    fn legendre3_values() {
        assert_eq!(legendre3(0), 0);
        assert_eq!(legendre3(1), 1);
        assert_eq!(legendre3(2), -1);
        assert_eq!(legendre3(-1), -1);
        assert_eq!(legendre3(-4), -1);
        assert_eq!(legendre3(7), 1);
    }
}
