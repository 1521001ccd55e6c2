//! Exhaustive enumeration of all topologies on `X_n`.
//!
//! Two independent strategies cross-validate each other:
//!
//! - **closure-brute** iterates every family of subsets containing the empty
//!   and full sets and keeps the ones closed under pairwise union and
//!   intersection. The search space is `2^(2^n - 2)`, so it is capped at
//!   `n <= 4`. It exists as an oracle for the production strategy.
//! - **preorder-backtrack** enumerates reflexive transitive relations row by
//!   row with transitivity pruning and maps each to its Alexandrov topology
//!   (opens are the up-closed sets). This correspondence is a bijection onto
//!   all topologies on a finite set, and the backtracking handles `n <= 7`.
//!
//! Row `i` of a preorder is the up-set `{j : i <= j}`, a mask containing bit
//! `i`; transitivity is exactly `j in row[i] => row[j] subset of row[i]`.
//! Rows are assigned in index order and emitted in lexicographic row order.
//! The top-level branches (choices of row 0) partition the search space, so
//! callers can run branches independently and concatenate in branch order to
//! recover the sequential emission order.

use crate::{Error, Result, SetMask, Topology};
use alloc::vec;
use alloc::vec::Vec;

/// Largest `n` for which the brute-force family scan is feasible.
pub const CLOSURE_BRUTE_MAX: u32 = 4;
/// Largest `n` the preorder backtracking is allowed to attempt.
pub const PREORDER_MAX: u32 = 7;

fn check_limit(strategy: &'static str, n: u32, max: u32) -> Result<()> {
    if n == 0 || n > max {
        return Err(Error::StrategyOutOfRange { strategy, n, max });
    }
    Ok(())
}

/// Iterates all subset families containing the empty and full sets, visiting
/// the ones that are topologies, in increasing family-bitmask order.
pub fn closure_brute(n: u32, mut visit: impl FnMut(&Topology)) -> Result<()> {
    check_limit("closure-brute", n, CLOSURE_BRUTE_MAX)?;
    let size = 1usize << n; // number of subsets of X_n
    let full = size - 1;
    let mut members: Vec<u32> = Vec::with_capacity(size);
    for combo in 0..1u32 << (size - 2) {
        let family: u32 = 1 | (combo << 1) | (1 << full);
        members.clear();
        let mut bits = family;
        while bits != 0 {
            members.push(bits.trailing_zeros());
            bits &= bits - 1;
        }
        let closed = members.iter().enumerate().all(|(i, &a)| {
            members[..i].iter().all(|&b| {
                family & (1 << (a | b)) != 0 && family & (1 << (a & b)) != 0
            })
        });
        if closed {
            let opens: Vec<SetMask> = members.iter().map(|&m| SetMask::from_bits(m)).collect();
            let mut opens = opens;
            opens.sort_unstable();
            visit(&Topology::from_sorted_opens_unchecked(n, opens));
        }
    }
    Ok(())
}

struct Backtrack<'a, F: FnMut(&[u32])> {
    n: usize,
    full: u32,
    require_antisymmetry: bool,
    rows: [u32; PREORDER_MAX as usize],
    emit: &'a mut F,
}

impl<F: FnMut(&[u32])> Backtrack<'_, F> {
    fn descend(&mut self, k: usize) {
        if k == self.n {
            let rows = self.rows;
            (self.emit)(&rows[..self.n]);
            return;
        }
        let bit = 1u32 << k;
        // rows j with k in row[j] force row[k] inside their intersection
        let mut allowed = self.full;
        for j in 0..k {
            if self.rows[j] & bit != 0 {
                allowed &= self.rows[j];
            }
        }
        if allowed & bit == 0 {
            return;
        }
        let free = allowed & !bit;
        let mut s = 0u32;
        loop {
            let m = s | bit;
            if self.admissible(k, m) {
                self.rows[k] = m;
                self.descend(k + 1);
            }
            if s == free {
                break;
            }
            s = s.wrapping_sub(free) & free;
        }
    }

    /// `j in m` forces `row[j] subset of m` for every assigned row; with
    /// antisymmetry, `j in m` and `k in row[j]` may not both hold.
    fn admissible(&self, k: usize, m: u32) -> bool {
        let mut low = m & ((1u32 << k) - 1);
        let mut required = 0u32;
        while low != 0 {
            let j = low.trailing_zeros() as usize;
            if self.require_antisymmetry && self.rows[j] & (1 << k) != 0 {
                return false;
            }
            required |= self.rows[j];
            if required & !m != 0 {
                return false;
            }
            low &= low - 1;
        }
        true
    }
}

/// Visits the row vectors of every preorder on `n` points, rows in
/// lexicographic order. With `require_antisymmetry`, only partial orders
/// (equivalently, the T0 topologies) are produced.
pub fn preorder_rows(
    n: u32,
    require_antisymmetry: bool,
    mut emit: impl FnMut(&[u32]),
) -> Result<()> {
    check_limit("preorder-backtrack", n, PREORDER_MAX)?;
    let mut search = Backtrack {
        n: n as usize,
        full: SetMask::full(n).bits(),
        require_antisymmetry,
        rows: [0; PREORDER_MAX as usize],
        emit: &mut emit,
    };
    search.descend(0);
    Ok(())
}

/// The top-level branch keys of the preorder backtracking: every candidate
/// row for element 0, in the order the sequential search takes them.
pub fn preorder_branches(n: u32) -> Result<Vec<SetMask>> {
    check_limit("preorder-backtrack", n, PREORDER_MAX)?;
    let full = SetMask::full(n).bits();
    let free = full & !1;
    let mut out = Vec::with_capacity(1 << (n - 1));
    let mut s = 0u32;
    loop {
        out.push(SetMask::from_bits(s | 1));
        if s == free {
            break;
        }
        s = s.wrapping_sub(free) & free;
    }
    Ok(out)
}

/// Materializes Alexandrov topologies from preorder rows.
///
/// Holds the `2^n` scratch table used to test which subsets are up-closed,
/// so a single builder can serve a whole enumeration run.
pub struct TopologyBuilder {
    n: u32,
    or_rows: Vec<u32>,
}

impl TopologyBuilder {
    pub fn new(n: u32) -> TopologyBuilder {
        TopologyBuilder {
            n,
            or_rows: vec![0u32; 1 << n],
        }
    }

    /// The topology whose opens are the up-closed sets of `rows`.
    pub fn build(&mut self, rows: &[u32]) -> Topology {
        debug_assert_eq!(rows.len(), self.n as usize);
        let size = 1usize << self.n;
        let mut opens = Vec::new();
        opens.push(SetMask::EMPTY);
        for u in 1..size {
            let low = u.trailing_zeros() as usize;
            let reach = self.or_rows[u & (u - 1)] | rows[low];
            self.or_rows[u] = reach;
            if reach == u as u32 {
                opens.push(SetMask::from_bits(u as u32));
            }
        }
        opens.sort_unstable();
        Topology::from_sorted_opens_unchecked(self.n, opens)
    }
}

/// Enumerates all topologies on `X_n` (or only the T0 ones) through the
/// preorder bijection, in a deterministic order.
pub fn preorder_backtrack(
    n: u32,
    require_t0: bool,
    mut visit: impl FnMut(&Topology),
) -> Result<()> {
    let mut builder = TopologyBuilder::new(n);
    preorder_rows(n, require_t0, |rows| visit(&builder.build(rows)))
}

/// Runs a single top-level branch (a fixed row for element 0) of the
/// preorder backtracking. Concatenating all branches in the order returned
/// by [`preorder_branches`] reproduces [`preorder_backtrack`] exactly.
pub fn preorder_backtrack_branch(
    n: u32,
    row0: SetMask,
    require_t0: bool,
    mut visit: impl FnMut(&Topology),
) -> Result<()> {
    check_limit("preorder-backtrack", n, PREORDER_MAX)?;
    row0.check_within(n)?;
    assert!(row0.contains(0), "branch key must contain element 0");
    let mut builder = TopologyBuilder::new(n);
    let mut emit = |rows: &[u32]| visit(&builder.build(rows));
    let mut search = Backtrack {
        n: n as usize,
        full: SetMask::full(n).bits(),
        require_antisymmetry: require_t0,
        rows: [0; PREORDER_MAX as usize],
        emit: &mut emit,
    };
    search.rows[0] = row0.bits();
    search.descend(1);
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::collections::BTreeSet;

    fn brute_count(n: u32) -> u64 {
        let mut count = 0;
        closure_brute(n, |_| count += 1).unwrap();
        count
    }

    fn preorder_count(n: u32, t0: bool) -> u64 {
        let mut count = 0;
        preorder_backtrack(n, t0, |_| count += 1).unwrap();
        count
    }

    #[test]
    fn strategies_agree_on_labeled_counts() {
        let expected = [1u64, 4, 29, 355];
        for n in 1..=4u32 {
            assert_eq!(brute_count(n), expected[n as usize - 1], "brute n={n}");
            assert_eq!(preorder_count(n, false), expected[n as usize - 1]);
        }
    }

    #[test]
    fn strategies_emit_identical_sets() {
        for n in 1..=4u32 {
            let mut brute = BTreeSet::new();
            closure_brute(n, |t| {
                brute.insert(t.clone());
            })
            .unwrap();
            let mut pre = BTreeSet::new();
            preorder_backtrack(n, false, |t| {
                assert!(pre.insert(t.clone()), "duplicate emission");
            })
            .unwrap();
            assert_eq!(brute, pre, "n = {n}");
        }
    }

    #[test]
    fn five_points_count() {
        assert_eq!(preorder_count(5, false), 6942);
    }

    #[test]
    fn t0_counts_match_partial_orders() {
        let expected = [1u64, 3, 19, 219];
        for n in 1..=4u32 {
            assert_eq!(preorder_count(n, true), expected[n as usize - 1]);
        }
    }

    #[test]
    fn branches_concatenate_to_the_sequential_order() {
        let n = 4;
        let mut sequential = Vec::new();
        preorder_backtrack(n, false, |t| sequential.push(t.clone())).unwrap();
        let mut concatenated = Vec::new();
        for row0 in preorder_branches(n).unwrap() {
            preorder_backtrack_branch(n, row0, false, |t| concatenated.push(t.clone())).unwrap();
        }
        assert_eq!(sequential, concatenated);
    }

    #[test]
    fn emitted_topologies_are_closed_and_recover_their_preorder() {
        let mut builder = TopologyBuilder::new(4);
        preorder_rows(4, false, |rows| {
            let t = builder.build(rows);
            // closure retraction
            let again = Topology::from_subbasis(4, t.opens()).unwrap();
            assert_eq!(again, t);
            // specialization preorder round-trip
            let recovered: Vec<u32> = t.element_rows().iter().map(|m| m.bits()).collect();
            assert_eq!(recovered, rows);
        })
        .unwrap();
    }

    #[test]
    fn limits_are_enforced() {
        assert!(matches!(
            closure_brute(5, |_| {}),
            Err(Error::StrategyOutOfRange { .. })
        ));
        assert!(matches!(
            preorder_rows(8, false, |_| {}),
            Err(Error::StrategyOutOfRange { .. })
        ));
    }

    #[test]
    fn iso_classes_on_two_points() {
        let mut classes = BTreeSet::new();
        preorder_backtrack(2, false, |t| {
            classes.insert(t.canonical_form().unwrap());
        })
        .unwrap();
        assert_eq!(classes.len(), 3);
    }
}
