//! Exact-arithmetic kernel for q-series identity verification.
//!
//! Everything here is formal and exact: coefficients live in Z, Q, Q(zeta_p)
//! or in Laurent polynomials over those rings, and series are truncated Laurent
//! series in q with explicit precision tracking. There are no floats anywhere;
//! an identity "holds to order N" means every coefficient up to q^N agrees
//! exactly.
//!
//! Module map:
//! - [`ring`]: the coefficient-ring abstraction plus the integer and rational rings
//! - [`cyclo`]: the cyclotomic fields Q(zeta_p) for prime p
//! - [`laurent`]: Laurent polynomials in the rank variable z
//! - [`series`]: truncated Laurent series in q, dissection and Atkin operators
//! - [`theta`]: Pochhammer symbols, the theta function j(z;q), J-products
//! - [`rank`]: the partition-rank oracle and the rank generating function R(z;q)
//! - [`appell`]: Appell-Lerch sums m(x,q,z) and the f/g functions built from them
//! - [`hecke`]: indefinite-quadratic-form double sums (Hecke-Rogers series)
//!
//! The crate is `no_std` (alloc only); all values are immutable after
//! construction and safe to share across threads.

#![no_std]

extern crate alloc;

#[cfg(test)]
extern crate std;

pub mod appell;
pub mod cyclo;
pub mod error;
pub mod hecke;
pub mod laurent;
pub mod rank;
pub mod ring;
pub mod series;
pub mod theta;

pub use cyclo::{CycloField, CycloNum};
pub use error::KernelError;
pub use laurent::{LaurentPoly, LaurentRing};
pub use ring::{Int, IntRing, Rat, RatRing, Ring};
pub use series::QSeries;
pub use theta::ParamSpec;
