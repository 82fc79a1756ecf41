//! Exact computer algebra for the equivariant K-theory of the based loop
//! space of SU(2).
//!
//! Everything here is computed over exact arithmetic (arbitrary-precision
//! integers and rationals); there are no floating-point tolerances anywhere.
//! The main pieces are:
//!
//! - [`coefficients`]: the representation rings R(T) = `Z[b, b^-1]` and
//!   R(G) = `Z[v]`, the Weyl involution b -> b^-1, restriction v -> b + b^-1,
//!   and the non-equivariant augmentation b -> 1.
//! - [`quotient`]: a normal-form engine for multilinear quotient rings
//!   `C[L_1..L_n]` / (L_j^2 = alpha L_j + beta), covering the K-theory and
//!   rational-cohomology rings of (P^1)^n as well as the square-zero ring,
//!   together with elementary-symmetric machinery.
//! - [`series`]: truncated one-variable power series over exact rationals
//!   and the named series p, q, g_1, g_2 and Todd.
//! - [`tower`]: the restriction maps i* between levels, their banded
//!   matrices, the rank-2 symmetric kernels, a canonical section, and
//!   truncated inverse-limit elements with levelwise multiplication.
//! - [`chern`]: the Chern character into series-coefficient cohomology,
//!   the Thom-space quotient ring in xb and ab, and the 2x2 matrix chain
//!   ending in det ch(Q) = 1.
//! - [`gamma`]: the divided polynomial algebra `Gamma[x]`, its truncation
//!   onto symmetric square-zero polynomials, and the specialization bridge
//!   from K-theory towers.
//! - [`verify`]: the full identity-verification suite used by the CLI and
//!   the acceptance tests.

pub mod chern;
pub mod coefficients;
pub mod gamma;
pub mod poly;
pub mod quotient;
pub mod series;
pub mod tower;
pub mod verify;

use thiserror::Error;

/// Errors shared across the algebra modules.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// A Laurent element was not fixed by the Weyl involution.
    #[error("element is not Weyl-invariant")]
    NotInvariant,
    /// Two elements of distinct quotient rings were combined.
    #[error("ring mismatch: {0}")]
    RingMismatch(String),
    /// A symmetric-polynomial index was outside 0..=n.
    #[error("index {index} out of range for n = {n}")]
    IndexOutOfRange { index: usize, n: usize },
    /// symmetric_reduce was applied to a non-symmetric element.
    #[error("element is not symmetric")]
    NotSymmetric,
    /// i* was requested below level 1.
    #[error("level too low: i* is only defined for r >= 1")]
    LevelTooLow,
    /// A tower violated the compatibility condition i*(sigma_r) = sigma_{r-1}.
    #[error("incompatible tower: {0}")]
    IncompatibleTower(String),
    /// Basis elimination in the kernel left a nonzero remainder.
    #[error("nonzero residue after kernel-basis elimination: {0}")]
    ResidueNonzero(String),
    /// Series inversion requires a nonzero constant term.
    #[error("cannot invert a series with zero constant term")]
    NonUnitConstantTerm,
    /// Series composition and exponentials require a zero constant term.
    #[error("inner series must have zero constant term")]
    NonzeroConstantTerm,
}

pub use coefficients::{LaurentElt, RepGElt};
pub use quotient::{CoeffRing, MultiElt, RingDescriptor, SymVec};
pub use series::{Rational, TruncSeries};
pub use tower::{IStarMatrix, KernelBasis, TowerElt};

#[cfg(test)]
mod thread_safety {
    // Every value type is immutable after construction and safe to share
    // across threads.
    fn assert_send_sync<T: Send + Sync>() {}

    #[test]
    fn value_types_are_send_sync() {
        assert_send_sync::<crate::LaurentElt>();
        assert_send_sync::<crate::RepGElt>();
        assert_send_sync::<crate::Rational>();
        assert_send_sync::<crate::TruncSeries>();
        assert_send_sync::<crate::poly::RatPoly>();
        assert_send_sync::<crate::MultiElt<crate::quotient::LaurentRing>>();
        assert_send_sync::<crate::MultiElt<crate::quotient::SeriesRing>>();
        assert_send_sync::<crate::SymVec<crate::quotient::RepGRing>>();
        assert_send_sync::<crate::IStarMatrix<crate::quotient::QPolyRing>>();
        assert_send_sync::<crate::TowerElt>();
        assert_send_sync::<crate::chern::ThomElt>();
        assert_send_sync::<crate::chern::XAPoly>();
        assert_send_sync::<crate::chern::SeriesMatrix2>();
        assert_send_sync::<crate::gamma::GammaElt>();
        assert_send_sync::<crate::gamma::TruncGamma>();
    }
}
