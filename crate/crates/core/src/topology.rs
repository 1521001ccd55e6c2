//! Validated topologies on finite ground sets and their operations.

use crate::error::SetOp;
use crate::mask::check_ground_size;
use crate::{CoeffSeq, Error, PartitionType, Result, SetMask};
use alloc::vec;
use alloc::vec::Vec;

/// A topology on `X_n`: a family of open sets containing the empty and full
/// sets, closed under pairwise union and intersection. Open sets are stored
/// strictly sorted by `(cardinality, bit pattern)`, which fixes the
/// serialization and makes coefficient extraction a single pass.
///
/// Values are immutable after construction; operations are pure functions.
///
/// ```
/// use topolab_core::{SetMask, Topology};
///
/// // the chain {}, {a}, {a,b}, X_3
/// let chain = Topology::from_subbasis(3, &[SetMask::from_bits(0b001), SetMask::from_bits(0b011)])?;
/// assert_eq!(chain.card(), 4);
/// assert_eq!(chain.open_polynomial().coeffs().len(), 4);
/// assert!(chain.is_t0());
/// assert_eq!(chain.cotopology().cotopology(), chain);
/// # Ok::<(), topolab_core::Error>(())
/// ```
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Topology {
    n: u32,
    opens: Vec<SetMask>,
}

fn sort_dedup(mut masks: Vec<SetMask>) -> Vec<SetMask> {
    masks.sort_unstable();
    masks.dedup();
    masks
}

impl Topology {
    /// Checks that `masks` form a topology on `X_n` and normalizes them.
    pub fn validate(n: u32, masks: &[SetMask]) -> Result<Topology> {
        check_ground_size(n)?;
        for m in masks {
            m.check_within(n)?;
        }
        let opens = sort_dedup(masks.to_vec());
        let full = SetMask::full(n);
        if opens.first() != Some(&SetMask::EMPTY) || opens.last() != Some(&full) {
            return Err(Error::MissingEmptyOrFull);
        }
        if opens.len() == 1usize << n {
            // the whole power set; closure is immediate
            return Ok(Topology { n, opens });
        }
        let mut present = vec![false; 1usize << n];
        for m in &opens {
            present[m.bits() as usize] = true;
        }
        for (i, &a) in opens.iter().enumerate() {
            for &b in &opens[..i] {
                let u = a.union(b);
                if !present[u.bits() as usize] {
                    return Err(Error::NotClosed {
                        a,
                        b,
                        op: SetOp::Union,
                        missing: u,
                    });
                }
                let v = a.inter(b);
                if !present[v.bits() as usize] {
                    return Err(Error::NotClosed {
                        a,
                        b,
                        op: SetOp::Intersection,
                        missing: v,
                    });
                }
            }
        }
        Ok(Topology { n, opens })
    }

    /// The smallest topology containing all of `masks`: closure under
    /// pairwise union and intersection, plus the empty and full sets.
    /// The result depends only on the set of input masks, not their order.
    pub fn from_subbasis(n: u32, masks: &[SetMask]) -> Result<Topology> {
        check_ground_size(n)?;
        for m in masks {
            m.check_within(n)?;
        }
        let mut present = vec![false; 1usize << n];
        let mut members: Vec<SetMask> = Vec::new();
        let mut push = |m: SetMask, members: &mut Vec<SetMask>| {
            if !present[m.bits() as usize] {
                present[m.bits() as usize] = true;
                members.push(m);
            }
        };
        push(SetMask::EMPTY, &mut members);
        push(SetMask::full(n), &mut members);
        for &m in masks {
            push(m, &mut members);
        }
        // worklist: each member meets every earlier member exactly once
        let mut i = 0;
        while i < members.len() {
            let a = members[i];
            for j in 0..i {
                let b = members[j];
                push(a.union(b), &mut members);
                push(a.inter(b), &mut members);
            }
            i += 1;
        }
        Ok(Topology {
            n,
            opens: sort_dedup(members),
        })
    }

    /// Construct from opens already known to be a valid sorted topology.
    pub(crate) fn from_sorted_opens_unchecked(n: u32, opens: Vec<SetMask>) -> Topology {
        debug_assert!(opens.windows(2).all(|w| w[0] < w[1]));
        Topology { n, opens }
    }

    /// All `2^n` subsets.
    pub fn discrete(n: u32) -> Topology {
        let opens = sort_dedup((0..1u32 << n).map(SetMask::from_bits).collect());
        Topology { n, opens }
    }

    /// Just the empty and full sets.
    pub fn indiscrete(n: u32) -> Topology {
        let mut opens = vec![SetMask::EMPTY, SetMask::full(n)];
        opens.dedup();
        Topology { n, opens }
    }

    pub fn ground_size(&self) -> u32 {
        self.n
    }

    pub fn opens(&self) -> &[SetMask] {
        &self.opens
    }

    /// Number of open sets.
    pub fn card(&self) -> u64 {
        self.opens.len() as u64
    }

    pub fn is_discrete(&self) -> bool {
        self.opens.len() == 1usize << self.n
    }

    pub fn contains(&self, m: SetMask) -> bool {
        self.opens.binary_search(&m).is_ok()
    }

    /// The open-set polynomial `(u_0, .., u_n)`: `u_j` counts opens of
    /// cardinality `j`.
    pub fn open_polynomial(&self) -> CoeffSeq {
        let mut counts = vec![0u64; self.n as usize + 1];
        for m in &self.opens {
            counts[m.card() as usize] += 1;
        }
        CoeffSeq::from_u64s(&counts)
    }

    /// The family of complements of the opens, itself a topology. Applying
    /// it twice is the identity, and its open polynomial is the reversal of
    /// this one's.
    pub fn cotopology(&self) -> Topology {
        let opens = sort_dedup(
            self.opens
                .iter()
                .map(|m| m.complement(self.n))
                .collect::<Vec<_>>(),
        );
        Topology { n: self.n, opens }
    }

    /// Nonempty opens `A` with `A /\ U` either empty or `A` for every open
    /// `U`; equivalently the minimal nonempty opens under inclusion.
    pub fn minimal_open_sets(&self) -> Vec<SetMask> {
        self.opens
            .iter()
            .copied()
            .filter(|&a| {
                !a.is_empty()
                    && self.opens.iter().all(|&u| {
                        let i = a.inter(u);
                        i.is_empty() || i == a
                    })
            })
            .collect()
    }

    /// The partition type if this topology is induced by a partition (its
    /// minimal opens cover the ground set and generate it), else `None`.
    pub fn induced_partition(&self) -> Option<PartitionType> {
        let mins = self.minimal_open_sets();
        let union = mins
            .iter()
            .fold(SetMask::EMPTY, |acc, &m| acc.union(m));
        if union != SetMask::full(self.n) {
            return None;
        }
        let generated = Topology::partition_topology(self.n, &mins).ok()?;
        if generated == *self {
            PartitionType::of_blocks(&mins).ok()
        } else {
            None
        }
    }

    /// The topology whose opens are exactly the `2^l` unions of the given
    /// pairwise-disjoint covering blocks.
    pub fn partition_topology(n: u32, blocks: &[SetMask]) -> Result<Topology> {
        check_ground_size(n)?;
        let mut union = SetMask::EMPTY;
        for b in blocks {
            b.check_within(n)?;
            if b.is_empty() || !union.inter(*b).is_empty() {
                return Err(Error::BlocksNotAPartition);
            }
            union = union.union(*b);
        }
        if union != SetMask::full(n) {
            return Err(Error::BlocksNotAPartition);
        }
        let l = blocks.len();
        let mut opens = Vec::with_capacity(1 << l);
        for choice in 0..1u32 << l {
            let mut m = SetMask::EMPTY;
            for (i, &b) in blocks.iter().enumerate() {
                if choice & (1 << i) != 0 {
                    m = m.union(b);
                }
            }
            opens.push(m);
        }
        Ok(Topology {
            n,
            opens: sort_dedup(opens),
        })
    }

    /// The disjoint-union topology on `n1 + n2` points (`other`'s elements
    /// shifted above `self`'s): opens are all unions of one open from each
    /// side, so cardinalities multiply and polynomials convolve.
    pub fn disjoint_union(&self, other: &Topology) -> Result<Topology> {
        let n = self.n + other.n;
        check_ground_size(n)?;
        let mut opens = Vec::with_capacity(self.opens.len() * other.opens.len());
        for &v in &other.opens {
            let shifted = v.shifted_up(self.n);
            for &u in &self.opens {
                opens.push(u.union(shifted));
            }
        }
        Ok(Topology {
            n,
            opens: sort_dedup(opens),
        })
    }

    /// T0 separation: every pair of distinct elements lies apart in some open.
    pub fn is_t0(&self) -> bool {
        for i in 0..self.n {
            for j in i + 1..self.n {
                let separated = self
                    .opens
                    .iter()
                    .any(|u| u.contains(i) != u.contains(j));
                if !separated {
                    return false;
                }
            }
        }
        true
    }

    /// Applies a relabeling of the ground set: element `i` becomes `perm[i]`.
    pub fn relabel(&self, perm: &[u32]) -> Result<Topology> {
        if perm.len() != self.n as usize {
            return Err(Error::InvalidPermutation);
        }
        let mut seen = 0u32;
        for &p in perm {
            if p >= self.n || seen & (1 << p) != 0 {
                return Err(Error::InvalidPermutation);
            }
            seen |= 1 << p;
        }
        let opens = sort_dedup(self.opens.iter().map(|m| m.relabel(perm)).collect());
        Ok(Topology { n: self.n, opens })
    }

    /// The lexicographically least opens list over all `n!` relabelings.
    /// Two topologies are homeomorphic iff their canonical forms are equal.
    /// Brute force, so limited to `n <= 8`.
    pub fn canonical_form(&self) -> Result<Topology> {
        let mut best: Option<Vec<SetMask>> = None;
        self.for_each_relabeling(|opens| {
            if best.as_ref().is_none_or(|b| opens < b.as_slice()) {
                best = Some(opens.to_vec());
            }
            true
        })?;
        Ok(Topology {
            n: self.n,
            opens: best.expect("at least the identity relabeling"),
        })
    }

    /// Whether this topology equals its own canonical form. Aborts the
    /// permutation scan as soon as a smaller relabeling is found.
    pub fn is_canonical(&self) -> Result<bool> {
        let mut canonical = true;
        self.for_each_relabeling(|opens| {
            if opens < self.opens.as_slice() {
                canonical = false;
                false
            } else {
                true
            }
        })?;
        Ok(canonical)
    }

    /// Feeds the sorted opens of every relabeling to `f`; `f` returns
    /// whether to continue.
    fn for_each_relabeling(&self, mut f: impl FnMut(&[SetMask]) -> bool) -> Result<()> {
        const CANONICAL_MAX: u32 = 8;
        if self.n > CANONICAL_MAX {
            return Err(Error::PermutationSpaceTooLarge {
                n: self.n,
                max: CANONICAL_MAX,
            });
        }
        let n = self.n as usize;
        let mut perm: Vec<u32> = (0..self.n).collect();
        let mut stack = vec![0usize; n];
        let mut scratch: Vec<SetMask> = Vec::with_capacity(self.opens.len());

        let mut apply = |perm: &[u32], scratch: &mut Vec<SetMask>| -> bool {
            scratch.clear();
            scratch.extend(self.opens.iter().map(|m| m.relabel(perm)));
            scratch.sort_unstable();
            f(scratch)
        };

        // Heap's algorithm, iterative
        if !apply(&perm, &mut scratch) {
            return Ok(());
        }
        let mut i = 1;
        while i < n {
            if stack[i] < i {
                if i % 2 == 0 {
                    perm.swap(0, i);
                } else {
                    perm.swap(stack[i], i);
                }
                if !apply(&perm, &mut scratch) {
                    return Ok(());
                }
                stack[i] += 1;
                i = 1;
            } else {
                stack[i] = 0;
                i += 1;
            }
        }
        Ok(())
    }

    /// The minimal open set containing each element: row `i` is the
    /// intersection of all opens containing `i`. These rows are the
    /// specialization preorder of the topology.
    pub fn element_rows(&self) -> Vec<SetMask> {
        let full = SetMask::full(self.n);
        (0..self.n)
            .map(|i| {
                self.opens
                    .iter()
                    .filter(|u| u.contains(i))
                    .fold(full, |acc, &u| acc.inter(u))
            })
            .collect()
    }
}
