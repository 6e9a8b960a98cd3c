//! Exact computations in the q-Brauer algebra `B_n(q, z)`.

pub mod cellular;
pub mod coefficients;
pub mod combinatorics;
pub mod error;
pub mod hecke;
pub mod qbrauer;
pub mod semisimplicity;

pub use error::{Error, Result};

/// The book's listings, compiled and run as doctests.
#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../README.md")]
    mod readme {}
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/coefficients.md")]
    mod coefficients {}
    #[doc = include_str!("../../../book/src/combinatorics.md")]
    mod combinatorics {}
    #[doc = include_str!("../../../book/src/algebra.md")]
    mod algebra {}
    #[doc = include_str!("../../../book/src/cell-modules.md")]
    mod cell_modules {}
    #[doc = include_str!("../../../book/src/restriction.md")]
    mod restriction {}
    #[doc = include_str!("../../../book/src/radicals.md")]
    mod radicals {}
    #[doc = include_str!("../../../book/src/semisimplicity.md")]
    mod semisimplicity {}
    #[doc = include_str!("../../../book/src/cli.md")]
    mod cli {}
    #[doc = include_str!("../../../book/src/verification.md")]
    mod verification {}
}
