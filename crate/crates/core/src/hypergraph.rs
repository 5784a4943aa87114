//! Value types: vertices, hyperedges, hypergraphs and graphs.
//!
//! All structures are canonical after construction: vertex sets are stored in
//! ascending order and edge families are ordered lexicographically by their
//! sorted vertex lists. Derived equality is therefore set equality of the
//! vertex set together with set equality of the edge family.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::ops::Deref;

use crate::error::{Error, Result};

/// A vertex label. Labels are positive integers.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct VertexId(u32);

impl VertexId {
    pub fn new(label: u32) -> Result<Self> {
        if label == 0 {
            return Err(Error::InvalidLabel(label));
        }
        Ok(VertexId(label))
    }

    pub fn get(self) -> u32 {
        self.0
    }
}

impl TryFrom<u32> for VertexId {
    type Error = Error;

    fn try_from(label: u32) -> Result<Self> {
        VertexId::new(label)
    }
}

impl fmt::Display for VertexId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

/// Builds vertex ids from raw labels, rejecting zero.
pub fn labels(raw: &[u32]) -> Result<Vec<VertexId>> {
    raw.iter().map(|&l| VertexId::new(l)).collect()
}

/// A set of vertices, stored sorted and without repetition.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Edge(Vec<VertexId>);

impl Edge {
    pub fn new<I: IntoIterator<Item = VertexId>>(vertices: I) -> Self {
        let mut v: Vec<VertexId> = vertices.into_iter().collect();
        v.sort_unstable();
        v.dedup();
        Edge(v)
    }

    pub fn from_labels(raw: &[u32]) -> Result<Self> {
        Ok(Edge::new(labels(raw)?))
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn vertices(&self) -> &[VertexId] {
        &self.0
    }

    pub fn contains(&self, v: VertexId) -> bool {
        self.0.binary_search(&v).is_ok()
    }

    pub fn is_subset(&self, other: &Edge) -> bool {
        self.0.iter().all(|&v| other.contains(v))
    }

    /// Intersection by a linear merge of the two sorted lists.
    pub fn intersection(&self, other: &Edge) -> Edge {
        let (a, b) = (&self.0, &other.0);
        let mut out = Vec::with_capacity(a.len().min(b.len()));
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            match a[i].cmp(&b[j]) {
                std::cmp::Ordering::Less => i += 1,
                std::cmp::Ordering::Greater => j += 1,
                std::cmp::Ordering::Equal => {
                    out.push(a[i]);
                    i += 1;
                    j += 1;
                }
            }
        }
        Edge(out)
    }

    pub fn intersection_len(&self, other: &Edge) -> usize {
        let (a, b) = (&self.0, &other.0);
        let (mut i, mut j, mut n) = (0, 0, 0);
        while i < a.len() && j < b.len() {
            match a[i].cmp(&b[j]) {
                std::cmp::Ordering::Less => i += 1,
                std::cmp::Ordering::Greater => j += 1,
                std::cmp::Ordering::Equal => {
                    n += 1;
                    i += 1;
                    j += 1;
                }
            }
        }
        n
    }

    pub fn iter(&self) -> impl Iterator<Item = VertexId> + '_ {
        self.0.iter().copied()
    }
}

impl fmt::Display for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, v) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "}}")
    }
}

/// A finite hypergraph without loops or multiple edges.
///
/// Isolated vertices are allowed and take part in equality.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Hypergraph {
    vertices: BTreeSet<VertexId>,
    edges: BTreeSet<Edge>,
}

impl Hypergraph {
    /// Validating constructor. Repeated edges collapse into one; a vertex
    /// listed twice is an error.
    pub fn new<V, E, I>(vertices: V, edges: E) -> Result<Self>
    where
        V: IntoIterator<Item = VertexId>,
        E: IntoIterator<Item = I>,
        I: IntoIterator<Item = VertexId>,
    {
        let mut vset = BTreeSet::new();
        for v in vertices {
            if !vset.insert(v) {
                return Err(Error::DuplicateVertexLabel(v));
            }
        }
        let mut eset = BTreeSet::new();
        for e in edges {
            let edge = Edge::new(e);
            if let Some(&v) = edge.vertices().iter().find(|v| !vset.contains(v)) {
                return Err(Error::EdgeOutsideVertexSet {
                    edge: edge.0,
                    vertex: v,
                });
            }
            if edge.len() < 2 {
                return Err(Error::EdgeTooSmall(edge.0));
            }
            eset.insert(edge);
        }
        Ok(Hypergraph {
            vertices: vset,
            edges: eset,
        })
    }

    pub fn from_labels(vertices: &[u32], edges: &[&[u32]]) -> Result<Self> {
        let edges = edges
            .iter()
            .map(|e| labels(e))
            .collect::<Result<Vec<_>>>()?;
        Hypergraph::new(labels(vertices)?, edges)
    }

    pub fn edgeless<V: IntoIterator<Item = VertexId>>(vertices: V) -> Result<Self> {
        Hypergraph::new(vertices, std::iter::empty::<Vec<VertexId>>())
    }

    /// Vertex set `1..=n` with the given edges.
    pub fn on_range<E, I>(n: u32, edges: E) -> Result<Self>
    where
        E: IntoIterator<Item = I>,
        I: IntoIterator<Item = VertexId>,
    {
        Hypergraph::new((1..=n).map(VertexId), edges)
    }

    /// Callers must uphold the invariants; checked in debug builds.
    pub(crate) fn from_parts(vertices: BTreeSet<VertexId>, edges: BTreeSet<Edge>) -> Self {
        debug_assert!(edges
            .iter()
            .all(|e| e.len() >= 2 && e.iter().all(|v| vertices.contains(&v))));
        Hypergraph { vertices, edges }
    }

    pub fn vertices(&self) -> &BTreeSet<VertexId> {
        &self.vertices
    }

    pub fn edges(&self) -> &BTreeSet<Edge> {
        &self.edges
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn has_vertex(&self, v: VertexId) -> bool {
        self.vertices.contains(&v)
    }

    pub fn contains_edge(&self, e: &Edge) -> bool {
        self.edges.contains(e)
    }

    pub fn max_edge_cardinality(&self) -> usize {
        self.edges.iter().map(Edge::len).max().unwrap_or(0)
    }

    /// True iff every two distinct edges share at most one vertex.
    pub fn is_linear(&self) -> bool {
        let edges: Vec<&Edge> = self.edges.iter().collect();
        edges
            .iter()
            .enumerate()
            .all(|(i, a)| edges[i + 1..].iter().all(|b| a.intersection_len(b) <= 1))
    }

    pub fn is_k_uniform(&self, k: usize) -> bool {
        self.edges.iter().all(|e| e.len() == k)
    }

    pub fn degree(&self, v: VertexId) -> Result<usize> {
        if !self.vertices.contains(&v) {
            return Err(Error::UnknownVertex(v));
        }
        Ok(self.edges.iter().filter(|e| e.contains(v)).count())
    }

    pub fn isolated_vertices(&self) -> BTreeSet<VertexId> {
        let covered: BTreeSet<VertexId> = self.edges.iter().flat_map(|e| e.iter()).collect();
        self.vertices.difference(&covered).copied().collect()
    }

    /// Union of edge families over a shared vertex set.
    pub fn union(&self, other: &Hypergraph) -> Result<Hypergraph> {
        if self.vertices != other.vertices {
            return Err(Error::VertexSetMismatch);
        }
        let edges = self.edges.union(&other.edges).cloned().collect();
        Ok(Hypergraph::from_parts(self.vertices.clone(), edges))
    }

    /// Same vertex set, edges restricted to those satisfying `keep`.
    pub fn filter_edges<F: FnMut(&Edge) -> bool>(&self, mut keep: F) -> Hypergraph {
        let edges = self.edges.iter().filter(|e| keep(e)).cloned().collect();
        Hypergraph::from_parts(self.vertices.clone(), edges)
    }

    /// Adds edges to a copy of this hypergraph, validating each one.
    pub fn with_edges<E, I>(&self, extra: E) -> Result<Hypergraph>
    where
        E: IntoIterator<Item = I>,
        I: IntoIterator<Item = VertexId>,
    {
        let edges = self
            .edges
            .iter()
            .map(|e| e.0.clone())
            .chain(extra.into_iter().map(|e| e.into_iter().collect::<Vec<_>>()));
        Hypergraph::new(self.vertices.iter().copied(), edges)
    }

    /// Extends the vertex set, keeping every edge.
    pub fn with_vertices<V: IntoIterator<Item = VertexId>>(&self, extra: V) -> Result<Hypergraph> {
        let mut vertices = self.vertices.clone();
        for v in extra {
            if !vertices.insert(v) {
                return Err(Error::DuplicateVertexLabel(v));
            }
        }
        Ok(Hypergraph::from_parts(vertices, self.edges.clone()))
    }

    /// Applies a vertex bijection. Every vertex must be mapped and the images
    /// must be distinct.
    pub fn relabel(&self, map: &BTreeMap<VertexId, VertexId>) -> Result<Hypergraph> {
        let image = |v: VertexId| map.get(&v).copied().ok_or(Error::UnknownVertex(v));
        let vertices = self
            .vertices
            .iter()
            .map(|&v| image(v))
            .collect::<Result<Vec<_>>>()?;
        let edges = self
            .edges
            .iter()
            .map(|e| e.iter().map(image).collect::<Result<Vec<_>>>())
            .collect::<Result<Vec<_>>>()?;
        Hypergraph::new(vertices, edges)
    }
}

impl fmt::Display for Hypergraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "V={{")?;
        for (i, v) in self.vertices.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "}} E={{")?;
        for (i, e) in self.edges.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{e}")?;
        }
        write!(f, "}}")
    }
}

/// A 2-uniform hypergraph.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Graph(Hypergraph);

impl Graph {
    pub fn new<V, E>(vertices: V, edges: E) -> Result<Self>
    where
        V: IntoIterator<Item = VertexId>,
        E: IntoIterator<Item = (VertexId, VertexId)>,
    {
        let h = Hypergraph::new(vertices, edges.into_iter().map(|(a, b)| [a, b]))?;
        Graph::try_from(h)
    }

    pub fn from_labels(vertices: &[u32], edges: &[(u32, u32)]) -> Result<Self> {
        let edges = edges
            .iter()
            .map(|&(a, b)| Ok((VertexId::new(a)?, VertexId::new(b)?)))
            .collect::<Result<Vec<_>>>()?;
        Graph::new(labels(vertices)?, edges)
    }

    pub fn as_hypergraph(&self) -> &Hypergraph {
        &self.0
    }

    pub fn into_hypergraph(self) -> Hypergraph {
        self.0
    }

    /// Edges as ordered pairs `(a, b)` with `a < b`.
    pub fn pairs(&self) -> impl Iterator<Item = (VertexId, VertexId)> + '_ {
        self.0
            .edges()
            .iter()
            .map(|e| (e.vertices()[0], e.vertices()[1]))
    }

    /// Sorted neighbor lists for every vertex, isolated ones included.
    pub fn adjacency(&self) -> BTreeMap<VertexId, Vec<VertexId>> {
        let mut adj: BTreeMap<VertexId, Vec<VertexId>> =
            self.0.vertices().iter().map(|&v| (v, Vec::new())).collect();
        for (a, b) in self.pairs() {
            adj.get_mut(&a).expect("edge endpoint").push(b);
            adj.get_mut(&b).expect("edge endpoint").push(a);
        }
        for list in adj.values_mut() {
            list.sort_unstable();
        }
        adj
    }

    /// Connected, nonempty and acyclic.
    pub fn is_tree(&self) -> bool {
        let n = self.0.vertex_count();
        if n == 0 || self.0.edge_count() != n - 1 {
            return false;
        }
        let adj = self.adjacency();
        let start = *self.0.vertices().iter().next().expect("nonempty");
        let mut seen = BTreeSet::from([start]);
        let mut stack = vec![start];
        while let Some(v) = stack.pop() {
            for &w in &adj[&v] {
                if seen.insert(w) {
                    stack.push(w);
                }
            }
        }
        seen.len() == n
    }
}

impl TryFrom<Hypergraph> for Graph {
    type Error = Error;

    fn try_from(h: Hypergraph) -> Result<Self> {
        if !h.is_k_uniform(2) {
            return Err(Error::NotAGraph);
        }
        Ok(Graph(h))
    }
}

impl Deref for Graph {
    type Target = Hypergraph;

    fn deref(&self) -> &Hypergraph {
        &self.0
    }
}

impl fmt::Display for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}
