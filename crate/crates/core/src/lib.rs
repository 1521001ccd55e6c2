//! Core algorithms for finite topologies on small ground sets.
//!
//! A topology on `X_n = {0, .., n-1}` is a family of subsets (encoded as
//! [`SetMask`] bit patterns) containing the empty set and `X_n`, closed under
//! pairwise union and intersection. Its *open-set polynomial* is the
//! coefficient sequence `(u_0, .., u_n)` where `u_j` counts open sets of
//! cardinality `j`.
//!
//! This crate provides:
//!
//! - [`Topology`]: validated construction, subbasis closure, cotopology,
//!   minimal open sets, partition detection, disjoint unions, relabeling and
//!   canonical forms ([`topology`]);
//! - [`CoeffSeq`]: exact big-integer coefficient sequences with unimodality,
//!   log-concavity, Newton-inequality and real-rootedness checks ([`coeffs`],
//!   [`realroots`]);
//! - exhaustive enumeration of all topologies on up to 7 points via two
//!   independent strategies ([`enumerate`]);
//! - an executable catalog of named topology constructions together with
//!   their claimed closed-form polynomials and cardinalities ([`families`]).
//!
//! The crate is `no_std` (allocation required); IO, parallelism and file
//! formats live in the companion `topolab` crate.

#![no_std]
#![forbid(unsafe_code)]

extern crate alloc;

#[cfg(test)]
#[macro_use]
extern crate std;

pub mod coeffs;
pub mod enumerate;
mod error;
pub mod families;
pub mod mask;
pub mod partition;
pub mod realroots;
pub mod topology;

pub use coeffs::CoeffSeq;
pub use error::{Error, SetOp};
pub use mask::SetMask;
pub use partition::PartitionType;
pub use topology::Topology;

/// Largest supported ground-set size. Keeps every subset in one machine word.
pub const MAX_GROUND_SIZE: u32 = 16;

/// Crate-wide result type.
pub type Result<T> = core::result::Result<T, Error>;
