use crate::mask::SetMask;
use thiserror::Error;

/// Which closure operation a pair of opens failed.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SetOp {
    Union,
    Intersection,
}

impl core::fmt::Display for SetOp {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        match self {
            SetOp::Union => f.write_str("union"),
            SetOp::Intersection => f.write_str("intersection"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("ground size {n} outside supported range 1..={max}")]
    GroundSizeOutOfRange { n: u32, max: u32 },

    #[error("mask {mask:?} uses bits outside ground set of size {n}")]
    MaskOutOfRange { mask: SetMask, n: u32 },

    #[error("family does not contain both the empty set and the full set")]
    MissingEmptyOrFull,

    #[error("family not closed: {op} of {a:?} and {b:?} gives {missing:?}, which is absent")]
    NotClosed {
        a: SetMask,
        b: SetMask,
        op: SetOp,
        missing: SetMask,
    },

    #[error("blocks are not a partition of the ground set")]
    BlocksNotAPartition,

    #[error("permutation is not a bijection on 0..n")]
    InvalidPermutation,

    #[error("canonical form by brute force is limited to n <= {max}, got n = {n}")]
    PermutationSpaceTooLarge { n: u32, max: u32 },

    #[error("sequence of degree {degree} too short for Newton inequalities (need degree >= 2)")]
    DegreeTooSmall { degree: usize },

    #[error("the zero polynomial has no root count")]
    ZeroPolynomial,

    #[error("coefficient index {index} out of range 0..={degree}")]
    IndexOutOfRange { index: usize, degree: usize },

    #[error("invalid partition type: {reason}")]
    InvalidPartitionType { reason: &'static str },

    #[error("unknown family key `{key}`")]
    UnknownFamily { key: alloc::string::String },

    #[error("family `{key}`: parameter {param} = {value} outside {lo}..={hi}")]
    ParamOutOfRange {
        key: &'static str,
        param: &'static str,
        value: i64,
        lo: i64,
        hi: i64,
    },

    #[error("strategy `{strategy}` supports n <= {max}, got n = {n}")]
    StrategyOutOfRange {
        strategy: &'static str,
        n: u32,
        max: u32,
    },
}
