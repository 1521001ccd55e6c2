//! On-disk JSON formats.
//!
//! A topology is `{"n": <int>, "opens": [<int>, ...]}` with each open set a
//! nonnegative integer whose bit `i` stands for element `i`. Opens may
//! arrive unsorted or with duplicates and are normalized (and fully
//! validated) on load. Coefficient sequences serialize as arrays of decimal
//! strings so arbitrary-precision values survive the trip.

use serde::{Deserialize, Serialize};
use topolab_core::{CoeffSeq, Error, SetMask, Topology};

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct TopologyJson {
    pub n: u32,
    pub opens: Vec<u64>,
}

impl From<&Topology> for TopologyJson {
    fn from(t: &Topology) -> TopologyJson {
        TopologyJson {
            n: t.ground_size(),
            opens: t.opens().iter().map(|m| m.bits() as u64).collect(),
        }
    }
}

impl TopologyJson {
    /// Validates and normalizes into a [`Topology`].
    pub fn into_topology(&self) -> Result<Topology, Error> {
        let masks: Vec<SetMask> = self
            .opens
            .iter()
            .map(|&bits| {
                u32::try_from(bits)
                    .map(SetMask::from_bits)
                    .map_err(|_| Error::MaskOutOfRange {
                        mask: SetMask::from_bits(u32::MAX),
                        n: self.n,
                    })
            })
            .collect::<Result<_, _>>()?;
        Topology::validate(self.n, &masks)
    }
}

/// Decimal-string form of a coefficient sequence, e.g. `["1","3","3","1"]`.
pub fn coeffs_to_strings(seq: &CoeffSeq) -> Vec<String> {
    seq.coeffs().iter().map(|c| c.to_string()).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    proptest! {
        #[test]
        fn any_closure_round_trips_through_json(
            sub in prop::collection::vec(0u32..32, 0..5),
            mut order in prop::collection::vec(0usize..64, 8),
        ) {
            let masks: Vec<SetMask> = sub.iter().map(|&b| SetMask::from_bits(b)).collect();
            let t = Topology::from_subbasis(5, &masks).unwrap();
            let mut j = TopologyJson::from(&t);
            prop_assert_eq!(j.into_topology().unwrap(), t.clone());
            // loading tolerates arbitrary open order and duplicates
            order.push(0);
            let dup = order[0] % j.opens.len();
            let dup = j.opens[dup];
            j.opens.sort_by_key(|&o| order[o as usize % order.len()]);
            j.opens.push(dup);
            prop_assert_eq!(j.into_topology().unwrap(), t);
        }
    }

    #[test]
    fn round_trip_and_normalization() {
        let t = Topology::discrete(3);
        let j = TopologyJson::from(&t);
        assert_eq!(j.into_topology().unwrap(), t);

        // unsorted, duplicated opens normalize on load
        let j = TopologyJson {
            n: 2,
            opens: vec![3, 0, 1, 1],
        };
        let t = j.into_topology().unwrap();
        assert_eq!(t.card(), 3);

        let bad = TopologyJson {
            n: 2,
            opens: vec![0, 3, 4],
        };
        assert!(bad.into_topology().is_err());
    }

    #[test]
    fn coefficients_serialize_as_decimal_strings() {
        let seq = CoeffSeq::from_u64s(&[1, 4, 7, 7, 4, 1]);
        assert_eq!(coeffs_to_strings(&seq), ["1", "4", "7", "7", "4", "1"]);
        assert_eq!(
            serde_json::to_string(&coeffs_to_strings(&seq)).unwrap(),
            r#"["1","4","7","7","4","1"]"#
        );
    }
}
