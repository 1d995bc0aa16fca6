//! Exact-arithmetic calculus of the falling factorial and its relatives:
//! Stirling numbers of both kinds (including negative-parameter extensions),
//! falling factorials with missing factors, elementary symmetric harmonic
//! sums, r-Stirling numbers, and a four-route solver for higher derivatives
//! of the falling factorial at integer points.
//!
//! Every quantity is an exact rational; every identity the crate exposes is
//! checked by [`identities::run_all`] against an independent brute-force
//! polynomial oracle ([`poly::Poly`]).

pub mod combinations;
pub mod derivative;
pub mod harmonic;
pub mod identities;
pub mod missing_factor;
pub mod poly;
pub mod rational;
pub mod stirling;

pub use combinations::{enumerate_subsets, rank_value, MissingFactorSet};
pub use poly::Poly;
pub use rational::{Int, Rat};

use thiserror::Error;

/// Domain errors for the few partial operations in the crate.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum Error {
    #[error("cannot choose {l} elements from a universe of {n}")]
    SubsetTooLarge { n: usize, l: usize },
    #[error("missing-factor members must be strictly increasing and below {n}")]
    InvalidMissingSet { n: usize },
    #[error("cannot divide the zero polynomial")]
    ZeroPolynomialDivision,
    #[error("r-Stirling derivative form requires m >= n (got n={n}, m={m})")]
    RequiresLargePoint { n: usize, m: i64 },
    #[error("prefactor has a pole at the requested evaluation point")]
    PrefactorPole,
    #[error("not a valid rational: {0}")]
    BadRational(String),
}
