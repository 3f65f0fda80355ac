//! Discrete Weyl operators for qudits.
//!
//! The crate builds the Weyl pair `U`, `V` and the generalized Pauli triple
//! `X`, `Y`, `Z` in any dimension `d ≥ 2`, lifts them to `n`-qudit registers,
//! certifies universality of Hamiltonian sets by Lie-algebra closure, and
//! implements MUB-based state tomography and SIC fiducial search on top.
//!
//! The narrative guide lives in `book/`; its code listings are compiled as
//! doc-tests of this crate.

pub mod error;
pub mod matrix;
pub mod optimize;
pub mod register;
pub mod rng;
pub mod sic;
pub mod tomography;
pub mod universality;
pub mod weyl;

pub use error::{Error, Result};
pub use matrix::{c64, expm_hermitian, hermitian_eig, unitary_eig, ComplexMatrix};
pub use rng::RandomSource;
pub use weyl::{build_weyl, check_weyl_relation, weyl_monomial, WeylOperators};

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../README.md")]
    mod readme {}
    #[doc = include_str!("../../../book/src/intro.md")]
    mod intro {}
    #[doc = include_str!("../../../book/src/matrices.md")]
    mod matrices {}
    #[doc = include_str!("../../../book/src/weyl.md")]
    mod weyl {}
    #[doc = include_str!("../../../book/src/registers.md")]
    mod registers {}
    #[doc = include_str!("../../../book/src/universality.md")]
    mod universality {}
    #[doc = include_str!("../../../book/src/tomography.md")]
    mod tomography {}
    #[doc = include_str!("../../../book/src/sic.md")]
    mod sic {}
    #[doc = include_str!("../../../book/src/cli.md")]
    mod cli {}
}
