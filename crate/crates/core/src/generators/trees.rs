//! Isomorph-free enumeration of free trees.

use std::collections::BTreeMap;

use crate::hypergraph::{Graph, VertexId};
use crate::realizer::{canonical_tree, tree_canonical_form};

fn vid(i: u32) -> VertexId {
    VertexId::new(i).expect("positive label")
}

/// One canonical representative per isomorphism class of trees on `n`
/// vertices, ordered by canonical code. Grows every tree on `n - 1` vertices
/// by a leaf at each vertex and keeps the new classes.
pub fn all_trees(n: usize) -> Vec<Graph> {
    if n == 0 {
        return Vec::new();
    }
    let mut layer = vec![Graph::from_labels(&[1], &[]).expect("single vertex")];
    for size in 2..=n as u32 {
        let mut next: BTreeMap<String, Graph> = BTreeMap::new();
        for t in &layer {
            for &v in t.vertices() {
                let grown = t
                    .with_vertices([vid(size)])
                    .and_then(|h| h.with_edges([[v, vid(size)]]))
                    .and_then(Graph::try_from)
                    .expect("adding a leaf keeps a tree");
                let code = tree_canonical_form(&grown).expect("tree").code;
                next.entry(code)
                    .or_insert_with(|| canonical_tree(&grown).expect("tree"));
            }
        }
        layer = next.into_values().collect();
    }
    layer
}
