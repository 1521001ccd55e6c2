//! Property tests for the structural invariants.

use proptest::prelude::*;
use topolab_core::coeffs::expand_binomial_product;
use topolab_core::{CoeffSeq, SetMask, Topology};

fn arb_subbasis(n: u32) -> impl Strategy<Value = Vec<SetMask>> {
    let full = (1u32 << n) - 1;
    prop::collection::vec((0..=full).prop_map(SetMask::from_bits), 0..6)
}

fn arb_topology(n: u32) -> impl Strategy<Value = Topology> {
    arb_subbasis(n).prop_map(move |sub| Topology::from_subbasis(n, &sub).unwrap())
}

fn arb_perm(n: u32) -> impl Strategy<Value = Vec<u32>> {
    Just((0..n).collect::<Vec<u32>>()).prop_shuffle()
}

proptest! {
    #[test]
    fn closure_output_validates_and_is_a_retraction(
        n in 1u32..=5,
        sub in arb_subbasis(5),
    ) {
        let sub: Vec<SetMask> = sub
            .into_iter()
            .map(|m| SetMask::from_bits(m.bits() & ((1 << n) - 1)))
            .collect();
        let t = Topology::from_subbasis(n, &sub).unwrap();
        let validated = Topology::validate(n, t.opens()).unwrap();
        prop_assert_eq!(&validated, &t);
        // closing a closed family changes nothing
        let again = Topology::from_subbasis(n, t.opens()).unwrap();
        prop_assert_eq!(again, t);
    }

    #[test]
    fn cotopology_is_an_involution_with_reversed_polynomial(t in arb_topology(5)) {
        let co = t.cotopology();
        prop_assert_eq!(Topology::validate(5, co.opens()).unwrap(), co.clone());
        prop_assert_eq!(co.cotopology(), t.clone());
        prop_assert_eq!(co.open_polynomial(), t.open_polynomial().reversed());
    }

    #[test]
    fn disjoint_union_multiplies(ta in arb_topology(3), tb in arb_topology(3)) {
        let du = ta.disjoint_union(&tb).unwrap();
        prop_assert_eq!(du.card(), ta.card() * tb.card());
        prop_assert_eq!(
            du.open_polynomial(),
            ta.open_polynomial().convolve(&tb.open_polynomial())
        );
    }

    #[test]
    fn open_polynomial_bounds(t in arb_topology(5)) {
        let poly = t.open_polynomial();
        prop_assert_eq!(poly.sum(), t.card().into());
        prop_assert_eq!(poly.coeffs()[0].clone(), 1u32.into());
        prop_assert_eq!(poly.coeffs()[5].clone(), 1u32.into());
        let row = CoeffSeq::binomial_row(5);
        for j in 0..=5 {
            prop_assert!(poly.coeffs()[j] <= row.coeffs()[j]);
        }
    }

    #[test]
    fn canonical_form_is_relabeling_invariant(t in arb_topology(4), perm in arb_perm(4)) {
        let relabeled = t.relabel(&perm).unwrap();
        prop_assert_eq!(
            relabeled.canonical_form().unwrap(),
            t.canonical_form().unwrap()
        );
        let c = t.canonical_form().unwrap();
        prop_assert_eq!(c.canonical_form().unwrap(), c);
    }

    #[test]
    fn reversal_is_an_involution_preserving_real_rootedness(
        coeffs in prop::collection::vec(0u64..50, 1..8),
    ) {
        let seq = CoeffSeq::from_u64s(&coeffs);
        prop_assert_eq!(seq.reversed().reversed(), seq.clone());
        if coeffs[0] != 0 && coeffs.iter().any(|&c| c != 0) {
            prop_assert_eq!(
                seq.is_real_rooted().unwrap(),
                seq.reversed().is_real_rooted().unwrap()
            );
        }
    }

    #[test]
    fn convolving_log_concave_niz_sequences_preserves_both(
        a in prop::collection::vec(0u64..9, 2..6),
        b in prop::collection::vec(0u64..9, 2..6),
    ) {
        let a = CoeffSeq::from_u64s(&a);
        let b = CoeffSeq::from_u64s(&b);
        prop_assume!(a.is_log_concave() && a.is_niz());
        prop_assume!(b.is_log_concave() && b.is_niz());
        let c = a.convolve(&b);
        prop_assert!(c.is_log_concave());
        prop_assert!(c.is_niz());
    }

    #[test]
    fn convolving_unimodal_with_log_concave_niz_stays_unimodal(
        a in prop::collection::vec(0u64..9, 2..6),
        b in prop::collection::vec(0u64..9, 2..6),
    ) {
        let a = CoeffSeq::from_u64s(&a);
        let b = CoeffSeq::from_u64s(&b);
        prop_assume!(a.is_unimodal());
        prop_assume!(b.is_log_concave() && b.is_niz());
        prop_assert!(a.convolve(&b).is_unimodal());
    }

    #[test]
    fn expansion_matches_partition_topology(n in 1u32..=7) {
        for ty in topolab_core::partition::partition_types_of(n) {
            let t = Topology::partition_topology(n, &ty.canonical_blocks()).unwrap();
            prop_assert_eq!(t.open_polynomial(), expand_binomial_product(&ty).unwrap());
        }
    }
}
