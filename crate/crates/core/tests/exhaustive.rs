//! Exhaustive small-n cross-checks that tie the modules together.

use std::collections::BTreeMap;
use topolab_core::enumerate::preorder_backtrack;
use topolab_core::Topology;

/// Self-cotopological topologies are exactly the partition-induced ones.
#[test]
fn partition_criterion_both_directions() {
    for n in 1..=5 {
        preorder_backtrack(n, false, |t| {
            let self_co = t.cotopology() == *t;
            let induced = t.induced_partition();
            assert_eq!(
                self_co,
                induced.is_some(),
                "n={n} opens={:?}",
                t.opens()
            );
            if let Some(ty) = induced {
                assert_eq!(ty.ground_size(), n);
                let rebuilt = Topology::partition_topology(n, &ty.canonical_blocks()).unwrap();
                // same type, possibly different labeling
                assert_eq!(
                    rebuilt.open_polynomial(),
                    t.open_polynomial(),
                    "type realization must preserve the polynomial"
                );
            }
        })
        .unwrap();
    }
}

/// The antisymmetry filter used during search agrees with the T0 predicate.
#[test]
fn t0_filter_equals_t0_predicate() {
    for n in 1..=4 {
        let mut filtered = Vec::new();
        preorder_backtrack(n, true, |t| filtered.push(t.clone())).unwrap();
        let mut by_predicate = Vec::new();
        preorder_backtrack(n, false, |t| {
            if t.is_t0() {
                by_predicate.push(t.clone());
            }
        })
        .unwrap();
        assert_eq!(filtered, by_predicate, "n = {n}");
    }
}

/// Grouping labeled topologies by canonical form partitions the count.
#[test]
fn isomorph_rejection_is_sound() {
    let expected_classes = [1usize, 3, 9, 33];
    for n in 1..=4u32 {
        let mut classes: BTreeMap<Topology, u64> = BTreeMap::new();
        let mut labeled = 0u64;
        preorder_backtrack(n, false, |t| {
            labeled += 1;
            *classes.entry(t.canonical_form().unwrap()).or_insert(0) += 1;
        })
        .unwrap();
        assert_eq!(classes.len(), expected_classes[n as usize - 1]);
        assert_eq!(classes.values().sum::<u64>(), labeled);
        // every class representative is canonical and class sizes divide n!
        let factorial: u64 = (1..=n as u64).product();
        for (rep, size) in &classes {
            assert!(rep.is_canonical().unwrap());
            assert_eq!(factorial % size, 0, "orbit size must divide n!");
        }
    }
}
