//! Hypergraphs built from in- and out-neighborhoods of a digraph.

use std::collections::BTreeSet;
use std::fmt;

use crate::digraph::Digraph;
use crate::ei::ei;
use crate::error::Error;
use crate::hypergraph::{Edge, Hypergraph, VertexId};
use crate::laws::{LawId, LawParams, LawReport, LawValue};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum NeighborhoodKind {
    /// Edges `N^-(v)`.
    Competition,
    /// Edges `N^+(v)`.
    CommonEnemy,
    /// Edges `N^+(v1) ∩ N^-(v2)`.
    DoubleCompetition,
    /// Edges `N^-(v)` or `N^+(v)`.
    Niche,
    /// Edges `e` with `e = N^-(v1) = N^+(v2)`.
    HPrime,
}

impl NeighborhoodKind {
    pub const ALL: [NeighborhoodKind; 5] = [
        NeighborhoodKind::Competition,
        NeighborhoodKind::CommonEnemy,
        NeighborhoodKind::DoubleCompetition,
        NeighborhoodKind::Niche,
        NeighborhoodKind::HPrime,
    ];

    pub fn name(self) -> &'static str {
        match self {
            NeighborhoodKind::Competition => "competition",
            NeighborhoodKind::CommonEnemy => "common-enemy",
            NeighborhoodKind::DoubleCompetition => "double-competition",
            NeighborhoodKind::Niche => "niche",
            NeighborhoodKind::HPrime => "h-prime",
        }
    }
}

impl fmt::Display for NeighborhoodKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl std::str::FromStr for NeighborhoodKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        let normalized = s.replace('_', "-");
        NeighborhoodKind::ALL
            .into_iter()
            .find(|k| k.name() == normalized)
            .ok_or_else(|| Error::InvalidSpec(format!("unknown neighborhood kind {s:?}")))
    }
}

/// Edges of the chosen kind with at least two vertices, on the vertex set of `d`.
pub fn neighborhood_hypergraph(d: &Digraph, kind: NeighborhoodKind) -> Hypergraph {
    let ins: Vec<BTreeSet<VertexId>> = d.vertices().iter().map(|&v| d.in_neighbors(v)).collect();
    let outs: Vec<BTreeSet<VertexId>> = d.vertices().iter().map(|&v| d.out_neighbors(v)).collect();
    let mut edges: BTreeSet<Edge> = BTreeSet::new();
    let mut add = |set: &BTreeSet<VertexId>| {
        if set.len() >= 2 {
            edges.insert(Edge::new(set.iter().copied()));
        }
    };
    match kind {
        NeighborhoodKind::Competition => ins.iter().for_each(&mut add),
        NeighborhoodKind::CommonEnemy => outs.iter().for_each(&mut add),
        NeighborhoodKind::Niche => ins.iter().chain(&outs).for_each(&mut add),
        NeighborhoodKind::DoubleCompetition => {
            for out in &outs {
                for inn in &ins {
                    add(&out.intersection(inn).copied().collect());
                }
            }
        }
        NeighborhoodKind::HPrime => {
            let out_sets: BTreeSet<&BTreeSet<VertexId>> = outs.iter().collect();
            ins.iter()
                .filter(|s| out_sets.contains(s))
                .for_each(&mut add);
        }
    }
    Hypergraph::from_parts(d.vertices().clone(), edges)
}

/// Compares `EI(NH) ∪ H'` with `DCH ∪ EI(CH) ∪ EI(CEH)`.
pub fn check_neighborhood_identity(d: &Digraph) -> LawReport {
    let nh = |kind| neighborhood_hypergraph(d, kind);
    let union = |a: Hypergraph, b: &Hypergraph| a.union(b).expect("same vertex set");
    let left = union(
        ei(&nh(NeighborhoodKind::Niche)),
        &nh(NeighborhoodKind::HPrime),
    );
    let right = union(
        union(
            nh(NeighborhoodKind::DoubleCompetition),
            &ei(&nh(NeighborhoodKind::Competition)),
        ),
        &ei(&nh(NeighborhoodKind::CommonEnemy)),
    );
    LawReport::new(
        LawId::NeighborhoodIdentity,
        LawParams::new(d.vertices().len(), 0),
        LawValue::Hypergraph(left),
        LawValue::Hypergraph(right),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn sample() -> Digraph {
        Digraph::from_labels(&[1, 2, 3, 5], &[(1, 2), (1, 3), (2, 5), (3, 5)]).unwrap()
    }

    #[test]
    fn all_kinds_on_sample() {
        let expected = Hypergraph::from_labels(&[1, 2, 3, 5], &[&[2, 3]]).unwrap();
        for kind in NeighborhoodKind::ALL {
            assert_eq!(neighborhood_hypergraph(&sample(), kind), expected, "{kind}");
        }
        let report = check_neighborhood_identity(&sample());
        assert!(report.agrees);
        assert_eq!(report.predicted, LawValue::Hypergraph(expected));
    }

    #[test]
    fn arcless_is_edgeless() {
        let d = Digraph::from_labels(&[1, 2, 3], &[]).unwrap();
        for kind in NeighborhoodKind::ALL {
            assert_eq!(neighborhood_hypergraph(&d, kind).edge_count(), 0);
        }
        assert!(check_neighborhood_identity(&d).agrees);
    }

    #[test]
    fn shared_prey() {
        let d = Digraph::from_labels(&[1, 2, 3], &[(1, 3), (2, 3)]).unwrap();
        assert_eq!(
            neighborhood_hypergraph(&d, NeighborhoodKind::Competition),
            Hypergraph::from_labels(&[1, 2, 3], &[&[1, 2]]).unwrap()
        );
        assert_eq!(
            neighborhood_hypergraph(&d, NeighborhoodKind::CommonEnemy).edge_count(),
            0
        );
    }

    #[test]
    fn kind_names_parse() {
        for kind in NeighborhoodKind::ALL {
            assert_eq!(kind.name().parse::<NeighborhoodKind>().unwrap(), kind);
        }
        assert_eq!(
            "common_enemy".parse::<NeighborhoodKind>().unwrap(),
            NeighborhoodKind::CommonEnemy
        );
        assert!("food-web".parse::<NeighborhoodKind>().is_err());
    }

    fn arb_digraph() -> impl Strategy<Value = Digraph> {
        (1u32..=8).prop_flat_map(|n| {
            let pairs: Vec<(u32, u32)> = (1..=n)
                .flat_map(|u| (1..=n).filter(move |&v| v != u).map(move |v| (u, v)))
                .collect();
            let len = pairs.len();
            proptest::collection::vec(any::<bool>(), len).prop_map(move |mask| {
                let arcs: Vec<(u32, u32)> = pairs
                    .iter()
                    .zip(mask)
                    .filter_map(|(&a, keep)| keep.then_some(a))
                    .collect();
                let vs: Vec<u32> = (1..=n).collect();
                Digraph::from_labels(&vs, &arcs).unwrap()
            })
        })
    }

    proptest! {
        #[test]
        fn niche_is_union_of_competition_and_common_enemy(d in arb_digraph()) {
            let c = neighborhood_hypergraph(&d, NeighborhoodKind::Competition);
            let ce = neighborhood_hypergraph(&d, NeighborhoodKind::CommonEnemy);
            prop_assert_eq!(
                neighborhood_hypergraph(&d, NeighborhoodKind::Niche),
                c.union(&ce).unwrap()
            );
        }

        #[test]
        fn h_prime_inside_double_competition(d in arb_digraph()) {
            let hp = neighborhood_hypergraph(&d, NeighborhoodKind::HPrime);
            let dc = neighborhood_hypergraph(&d, NeighborhoodKind::DoubleCompetition);
            prop_assert!(hp.edges().is_subset(dc.edges()));
        }

        #[test]
        fn identity_holds(d in arb_digraph()) {
            let report = check_neighborhood_identity(&d);
            prop_assert!(report.agrees, "{}", report);
        }
    }
}
