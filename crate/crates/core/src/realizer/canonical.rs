//! AHU canonical codes for free trees, rooted at the center.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::hypergraph::{Graph, VertexId};

/// Isomorphism-invariant code of a tree plus the relabeling that carries the
/// tree onto its canonical labeled representative.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CanonicalForm {
    pub code: String,
    /// Original label to canonical label; canonical labels are `1..=n` in
    /// preorder from the root with children visited in code order.
    pub relabeling: BTreeMap<VertexId, VertexId>,
}

struct IndexedTree {
    labels: Vec<VertexId>,
    adj: Vec<Vec<usize>>,
}

impl IndexedTree {
    fn new(t: &Graph) -> Self {
        let labels: Vec<VertexId> = t.vertices().iter().copied().collect();
        let index: BTreeMap<VertexId, usize> =
            labels.iter().enumerate().map(|(i, &v)| (v, i)).collect();
        let mut adj = vec![Vec::new(); labels.len()];
        for (a, b) in t.pairs() {
            adj[index[&a]].push(index[&b]);
            adj[index[&b]].push(index[&a]);
        }
        IndexedTree { labels, adj }
    }

    /// One or two central vertices, by repeated leaf stripping.
    fn centers(&self) -> Vec<usize> {
        let n = self.labels.len();
        if n <= 2 {
            return (0..n).collect();
        }
        let mut degree: Vec<usize> = self.adj.iter().map(Vec::len).collect();
        let mut layer: Vec<usize> = (0..n).filter(|&v| degree[v] == 1).collect();
        let mut remaining = n;
        while remaining > 2 {
            remaining -= layer.len();
            let mut next = Vec::new();
            for &leaf in &layer {
                for &w in &self.adj[leaf] {
                    degree[w] -= 1;
                    if degree[w] == 1 {
                        next.push(w);
                    }
                }
            }
            layer = next;
        }
        let mut centers = layer;
        centers.sort_unstable();
        centers
    }

    /// Rooted AHU codes of every vertex's subtree, hanging from `root`.
    fn codes(&self, root: usize) -> (Vec<String>, Vec<Option<usize>>) {
        let n = self.labels.len();
        let mut parent = vec![None; n];
        let mut order = vec![root];
        let mut visited = vec![false; n];
        visited[root] = true;
        let mut i = 0;
        while i < order.len() {
            let v = order[i];
            for &w in &self.adj[v] {
                if !visited[w] {
                    visited[w] = true;
                    parent[w] = Some(v);
                    order.push(w);
                }
            }
            i += 1;
        }
        let mut codes = vec![String::new(); n];
        for &v in order.iter().rev() {
            let mut child: Vec<&str> = self.adj[v]
                .iter()
                .filter(|&&w| parent[w] == Some(v))
                .map(|&w| codes[w].as_str())
                .collect();
            child.sort_unstable();
            let code = format!("({})", child.concat());
            codes[v] = code;
        }
        (codes, parent)
    }
}

pub fn tree_canonical_form(t: &Graph) -> Result<CanonicalForm> {
    if !t.is_tree() {
        return Err(Error::NotATree);
    }
    let tree = IndexedTree::new(t);
    let (root, codes, parent) = tree
        .centers()
        .into_iter()
        .map(|c| {
            let (codes, parent) = tree.codes(c);
            (c, codes, parent)
        })
        .min_by(|a, b| a.1[a.0].cmp(&b.1[b.0]))
        .expect("a tree has a center");

    let mut relabeling = BTreeMap::new();
    let mut stack = vec![root];
    let mut next = 1u32;
    while let Some(v) = stack.pop() {
        relabeling.insert(tree.labels[v], VertexId::new(next).expect("positive"));
        next += 1;
        let mut children: Vec<usize> = tree.adj[v]
            .iter()
            .copied()
            .filter(|&w| parent[w] == Some(v))
            .collect();
        children.sort_by(|&a, &b| codes[a].cmp(&codes[b]));
        stack.extend(children.into_iter().rev());
    }
    Ok(CanonicalForm {
        code: codes[root].clone(),
        relabeling,
    })
}

/// The canonical labeled representative of `t`'s isomorphism class.
pub fn canonical_tree(t: &Graph) -> Result<Graph> {
    let form = tree_canonical_form(t)?;
    Graph::try_from(t.relabel(&form.relabeling)?)
}

pub fn is_isomorphic(a: &Graph, b: &Graph) -> Result<bool> {
    Ok(tree_canonical_form(a)?.code == tree_canonical_form(b)?.code)
}
