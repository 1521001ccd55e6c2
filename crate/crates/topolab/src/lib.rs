//! IO, parallel enumeration, theorem verification and the `topolab` CLI.
//!
//! The algorithms live in [`topolab_core`]; this crate adds the JSON file
//! formats, a multi-threaded enumeration driver, the named theorem checks,
//! and the command-line front end.

pub mod cli;
pub mod json;
pub mod run;
pub mod verify;

pub use topolab_core as core;
pub use topolab_core::{CoeffSeq, PartitionType, SetMask, Topology};
