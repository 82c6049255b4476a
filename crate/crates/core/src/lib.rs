//! Exact analysis of the positive and negative β-transformations on [0, 1].
//!
//! Everything here is computed in ℚ(β) without floating point: branch
//! decompositions of iterates, preimage counting, Markov partitions and the
//! isomorphism / non-isomorphism decision between the two maps.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod classify;
pub mod error;
pub mod field;
pub mod interval;
pub mod linalg;
pub mod log;
mod irreducible;
pub mod maps;
pub mod markov;
pub mod monotone;
pub mod orbit;
pub mod parse;
pub mod poly;
pub mod report;
pub mod verdict;

pub use classify::{classify_beta, multinacci_field, multinacci_poly, rational_field, BetaClass};
pub use error::{Error, Result};
pub use field::{make_field, AlgebraicField, FieldElement};
pub use interval::RationalInterval;
pub use maps::{Orientation, PLMap};
pub use parse::BetaSpec;
pub use poly::{IntPolynomial, QPoly};

pub const VERSION: &str = env!("CARGO_PKG_VERSION");
