//! Category **O** numerics for Dynkin Borel subalgebras of `gl_n` and `gl(∞)`.
//!
//! Weights live in ρ-shifted coordinates ([`weights::Weight`]), so the dot
//! action of the Weyl group is a plain permutation of values ([`weyl`]).
//! Multiplicities and Ext groups reduce to Kazhdan–Lusztig polynomials of a
//! finite symmetric group ([`hecke`], [`mult`]); truncated blocks and Ringel
//! duality are built on top ([`trunc`], [`ringel`]). The [`oracle`] module
//! recomputes the same numbers from scratch in small rank.

pub mod cli;
pub mod error;
pub mod hecke;
pub mod linalg;
pub mod mult;
pub mod oracle;
pub mod ringel;
pub mod trunc;
pub mod weights;
pub mod weyl;

pub use error::{Error, Result};
