//! Subsets of the ground set as bit patterns.

use crate::{Error, Result, MAX_GROUND_SIZE};
use core::cmp::Ordering;
use core::fmt;

/// A subset of the ground set `X_n`, bit `i` set iff element `i` is in the
/// subset. Orders by `(cardinality, bit pattern)`, the order in which a
/// topology stores its open sets.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct SetMask(u32);

impl SetMask {
    pub const EMPTY: SetMask = SetMask(0);

    pub const fn from_bits(bits: u32) -> SetMask {
        SetMask(bits)
    }

    pub const fn bits(self) -> u32 {
        self.0
    }

    pub const fn singleton(element: u32) -> SetMask {
        SetMask(1 << element)
    }

    /// The full ground set of size `n`.
    pub const fn full(n: u32) -> SetMask {
        SetMask(if n >= 32 { u32::MAX } else { (1 << n) - 1 })
    }

    pub fn from_elements(elements: &[u32]) -> SetMask {
        let mut bits = 0;
        for &e in elements {
            bits |= 1 << e;
        }
        SetMask(bits)
    }

    pub const fn card(self) -> u32 {
        self.0.count_ones()
    }

    pub const fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub const fn contains(self, element: u32) -> bool {
        self.0 & (1 << element) != 0
    }

    pub const fn union(self, other: SetMask) -> SetMask {
        SetMask(self.0 | other.0)
    }

    pub const fn inter(self, other: SetMask) -> SetMask {
        SetMask(self.0 & other.0)
    }

    pub const fn is_subset_of(self, other: SetMask) -> bool {
        self.0 & !other.0 == 0
    }

    pub const fn complement(self, n: u32) -> SetMask {
        SetMask(!self.0 & SetMask::full(n).0)
    }

    pub const fn with(self, element: u32) -> SetMask {
        SetMask(self.0 | (1 << element))
    }

    /// Shift every element up by `k` positions.
    pub const fn shifted_up(self, k: u32) -> SetMask {
        SetMask(self.0 << k)
    }

    /// Checks the mask only uses bits `0..n`.
    pub fn check_within(self, n: u32) -> Result<()> {
        if self.is_subset_of(SetMask::full(n)) {
            Ok(())
        } else {
            Err(Error::MaskOutOfRange { mask: self, n })
        }
    }

    /// Elements of the subset in increasing order.
    pub fn elements(self) -> impl Iterator<Item = u32> {
        let mut bits = self.0;
        core::iter::from_fn(move || {
            if bits == 0 {
                None
            } else {
                let e = bits.trailing_zeros();
                bits &= bits - 1;
                Some(e)
            }
        })
    }

    /// Applies a relabeling of elements: bit `i` moves to bit `perm[i]`.
    pub fn relabel(self, perm: &[u32]) -> SetMask {
        let mut out = 0;
        for e in self.elements() {
            out |= 1 << perm[e as usize];
        }
        SetMask(out)
    }
}

impl Ord for SetMask {
    fn cmp(&self, other: &SetMask) -> Ordering {
        (self.card(), self.0).cmp(&(other.card(), other.0))
    }
}

impl PartialOrd for SetMask {
    fn partial_cmp(&self, other: &SetMask) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for SetMask {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        let mut first = true;
        for e in self.elements() {
            if !first {
                write!(f, ",")?;
            }
            write!(f, "{e}")?;
            first = false;
        }
        write!(f, "}}")
    }
}

/// Validates a ground-set size against [`MAX_GROUND_SIZE`].
pub fn check_ground_size(n: u32) -> Result<()> {
    if (1..=MAX_GROUND_SIZE).contains(&n) {
        Ok(())
    } else {
        Err(Error::GroundSizeOutOfRange {
            n,
            max: MAX_GROUND_SIZE,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ordering_is_by_cardinality_then_bits() {
        let a = SetMask::from_bits(0b100); // {2}
        let b = SetMask::from_bits(0b011); // {0,1}
        assert!(a < b);
        let c = SetMask::from_bits(0b101); // {0,2}
        assert!(b < c);
    }

    #[test]
    fn complement_and_elements() {
        let m = SetMask::from_elements(&[0, 2]);
        assert_eq!(m.complement(3), SetMask::singleton(1));
        let es: alloc::vec::Vec<u32> = m.elements().collect();
        assert_eq!(es, [0, 2]);
    }

    #[test]
    fn relabel_moves_bits() {
        // swap elements 0 and 2 on a 3-element ground set
        let m = SetMask::from_elements(&[0, 1]);
        assert_eq!(m.relabel(&[2, 1, 0]), SetMask::from_elements(&[1, 2]));
    }

    #[test]
    fn out_of_range_mask_rejected() {
        assert!(SetMask::from_bits(0b1000).check_within(3).is_err());
        assert!(SetMask::from_bits(0b111).check_within(3).is_ok());
    }
}
