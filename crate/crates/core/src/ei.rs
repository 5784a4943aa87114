//! The edge intersection operator and its iteration.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::hypergraph::{Edge, Hypergraph};

/// Edge intersection hypergraph: same vertex set, edges are the pairwise
/// intersections of distinct edges that keep at least two vertices.
///
/// An intersection that happens to coincide with an edge of `h` is kept.
pub fn ei(h: &Hypergraph) -> Hypergraph {
    let edges: Vec<&Edge> = h.edges().iter().collect();
    let mut out = BTreeSet::new();
    for (i, a) in edges.iter().enumerate() {
        for b in &edges[i + 1..] {
            if a.intersection_len(b) >= 2 {
                out.insert(a.intersection(b));
            }
        }
    }
    Hypergraph::from_parts(h.vertices().clone(), out)
}

/// `k`-fold application of [`ei`]; `k = 0` is the identity.
pub fn ei_iterate(h: &Hypergraph, k: usize) -> Hypergraph {
    let mut cur = h.clone();
    for _ in 0..k {
        if cur.edge_count() == 0 {
            break;
        }
        cur = ei(&cur);
    }
    cur
}

/// Smallest `k` such that the `k`-th iterate has no edges.
pub fn ei_number(h: &Hypergraph) -> usize {
    let mut cur = h.clone();
    let mut k = 0;
    while cur.edge_count() > 0 {
        let next = ei(&cur);
        assert!(
            next.max_edge_cardinality() < cur.max_edge_cardinality(),
            "maximum edge cardinality must drop under EI"
        );
        cur = next;
        k += 1;
    }
    k
}

/// Necessary condition for `h` to be the EI hypergraph of something: whenever
/// two incomparable edges share at least two vertices, a third edge contains
/// their intersection.
pub fn satisfies_necessary_condition(h: &Hypergraph) -> bool {
    let edges: Vec<&Edge> = h.edges().iter().collect();
    for (i, a) in edges.iter().enumerate() {
        for (j, b) in edges.iter().enumerate().skip(i + 1) {
            if a.intersection_len(b) < 2 || a.is_subset(b) || b.is_subset(a) {
                continue;
            }
            let common = a.intersection(b);
            let covered = edges
                .iter()
                .enumerate()
                .any(|(t, e)| t != i && t != j && common.is_subset(e));
            if !covered {
                return false;
            }
        }
    }
    true
}

/// Adds the full vertex set as an edge to a linear hypergraph. The result `h'`
/// satisfies `ei(h') == h`.
pub fn augment_linear(h: &Hypergraph) -> Result<Hypergraph> {
    if h.vertex_count() < 2 {
        return Err(Error::TooFewVertices);
    }
    if !h.is_linear() {
        return Err(Error::NotLinear);
    }
    let full = Edge::new(h.vertices().iter().copied());
    if h.contains_edge(&full) {
        return Err(Error::FullVertexSetAlreadyEdge);
    }
    let augmented = h.with_edges([full.vertices().to_vec()])?;
    let back = ei(&augmented);
    if &back != h {
        return Err(Error::InternalVerificationFailure(format!(
            "EI of the augmented hypergraph is {back}, expected {h}"
        )));
    }
    Ok(augmented)
}
