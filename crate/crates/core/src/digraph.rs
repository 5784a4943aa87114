use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::hypergraph::{labels, VertexId};

/// A loopless digraph. Arcs are kept sorted by `(tail, head)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Digraph {
    vertices: BTreeSet<VertexId>,
    arcs: BTreeSet<(VertexId, VertexId)>,
}

impl Digraph {
    pub fn new<V, A>(vertices: V, arcs: A) -> Result<Self>
    where
        V: IntoIterator<Item = VertexId>,
        A: IntoIterator<Item = (VertexId, VertexId)>,
    {
        let mut vset = BTreeSet::new();
        for v in vertices {
            if !vset.insert(v) {
                return Err(Error::DuplicateVertexLabel(v));
            }
        }
        let mut aset = BTreeSet::new();
        for (u, v) in arcs {
            if u == v {
                return Err(Error::SelfArc(u, v));
            }
            if !vset.contains(&u) || !vset.contains(&v) {
                return Err(Error::ArcOutsideVertexSet(u, v));
            }
            aset.insert((u, v));
        }
        Ok(Digraph {
            vertices: vset,
            arcs: aset,
        })
    }

    pub fn from_labels(vertices: &[u32], arcs: &[(u32, u32)]) -> Result<Self> {
        let arcs = arcs
            .iter()
            .map(|&(u, v)| Ok((VertexId::new(u)?, VertexId::new(v)?)))
            .collect::<Result<Vec<_>>>()?;
        Digraph::new(labels(vertices)?, arcs)
    }

    pub fn vertices(&self) -> &BTreeSet<VertexId> {
        &self.vertices
    }

    pub fn arcs(&self) -> &BTreeSet<(VertexId, VertexId)> {
        &self.arcs
    }

    /// Tails of arcs entering `v`.
    pub fn in_neighbors(&self, v: VertexId) -> BTreeSet<VertexId> {
        self.arcs
            .iter()
            .filter(|&&(_, h)| h == v)
            .map(|&(t, _)| t)
            .collect()
    }

    /// Heads of arcs leaving `v`.
    pub fn out_neighbors(&self, v: VertexId) -> BTreeSet<VertexId> {
        self.arcs
            .range((v, VertexId::new(1).expect("positive"))..)
            .take_while(|&&(t, _)| t == v)
            .map(|&(_, h)| h)
            .collect()
    }
}
