//! Exact computations with linear systems of hypersurfaces through fat points.
//!
//! The crate is `no_std` (it needs `alloc`) and is organized bottom-up:
//!
//! - [`exact`]: rationals, the Eisenstein field `Q(w)` with `w^2 + w + 1 = 0`,
//!   and a seeded generator for "general" points.
//! - [`mpoly`]: sparse multivariate polynomials in graded-lex order.
//! - [`linalg`]: dense exact matrices, fraction-free rank and kernels, plus an
//!   independent Gaussian-elimination rank used as a cross-check.
//! - [`systems`]: conditions matrices for fat-point schemes, actual and
//!   expected dimensions, unexpectedness probes, multiplicity and speciality
//!   indices.
//! - [`witness`]: explicit configurations and closed-form hypersurfaces (the
//!   B3 arrangement, the Fermat configuration in P^3, the plane
//!   parametrization of the unexpected quartic surface) with exact checks.
//! - [`syzygy`]: graded syzygies of Jacobian ideals and the plane map built
//!   from a pair of syzygies.
#![cfg_attr(not(test), no_std)]
#![forbid(unsafe_code)]

extern crate alloc;

mod error;
pub mod exact;
pub mod linalg;
pub mod mpoly;
pub mod syzygy;
pub mod systems;
pub mod witness;

pub use error::{Error, Result};
pub use exact::{Eisenstein, Field, ParseError, Rational, Rng, Scalar};
pub use linalg::{ExactMatrix, KernelBasis};
pub use mpoly::{Monomial, MultiPoly, RingContext};
pub use systems::{FatPoint, FatPointConfig, LinearSystemResult};

pub(crate) fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * u128::from(n - i) / u128::from(i + 1);
    }
    acc as u64
}

#[cfg(test)]
mod tests {
    use super::binomial;

    #[test]
    fn binomials() {
        assert_eq!(binomial(6, 2), 15);
        assert_eq!(binomial(7, 3), 35);
        assert_eq!(binomial(3, 5), 0);
        assert_eq!(binomial(0, 0), 1);
        assert_eq!(binomial(34, 3), 5984);
    }
}
