use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::hypergraph::{Graph, Hypergraph, VertexId};

/// A path `(v0, v1, ..., vs)` in a tree whose joint `v0` has degree at least
/// three, whose inner vertices have degree two and whose end `vs` is a leaf.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Leg {
    vertices: Vec<VertexId>,
}

impl Leg {
    /// Checks the degree profile and adjacency against `t`.
    pub fn new(t: &Graph, vertices: Vec<VertexId>) -> Result<Leg> {
        let leg = Leg { vertices };
        if leg.is_leg_of(&t.adjacency()) {
            Ok(leg)
        } else {
            Err(Error::NotALegOfThisTree)
        }
    }

    fn is_leg_of(&self, adj: &BTreeMap<VertexId, Vec<VertexId>>) -> bool {
        let vs = &self.vertices;
        if vs.len() < 2 || vs.iter().any(|v| !adj.contains_key(v)) {
            return false;
        }
        let deg = |v: &VertexId| adj[v].len();
        let s = vs.len() - 1;
        let distinct = {
            let mut sorted = vs.clone();
            sorted.sort_unstable();
            sorted.dedup();
            sorted.len() == vs.len()
        };
        distinct
            && vs
                .windows(2)
                .all(|w| adj[&w[0]].binary_search(&w[1]).is_ok())
            && deg(&vs[0]) >= 3
            && vs[1..s].iter().all(|v| deg(v) == 2)
            && deg(&vs[s]) == 1
    }

    pub fn vertices(&self) -> &[VertexId] {
        &self.vertices
    }

    pub fn len(&self) -> usize {
        self.vertices.len() - 1
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn joint(&self) -> VertexId {
        self.vertices[0]
    }

    pub fn end(&self) -> VertexId {
        *self
            .vertices
            .last()
            .expect("legs have at least two vertices")
    }
}

impl fmt::Display for Leg {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, v) in self.vertices.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, ")")
    }
}

/// Every leg of `t`, shortest first, ties broken by vertex sequence.
pub fn find_legs(t: &Graph) -> Result<Vec<Leg>> {
    if !t.is_tree() {
        return Err(Error::NotATree);
    }
    let adj = t.adjacency();
    let mut legs = Vec::new();
    for (&leaf, nbrs) in &adj {
        if nbrs.len() != 1 {
            continue;
        }
        let mut walk = vec![leaf];
        let (mut prev, mut cur) = (leaf, nbrs[0]);
        loop {
            walk.push(cur);
            match adj[&cur].len() {
                2 => {
                    let next = adj[&cur]
                        .iter()
                        .copied()
                        .find(|&w| w != prev)
                        .expect("degree two");
                    prev = cur;
                    cur = next;
                }
                1 => break,
                _ => {
                    walk.reverse();
                    legs.push(Leg { vertices: walk });
                    break;
                }
            }
        }
    }
    legs.sort_by(|a, b| {
        a.len()
            .cmp(&b.len())
            .then_with(|| a.vertices.cmp(&b.vertices))
    });
    Ok(legs)
}

/// Removes `v1, ..., vs` and their edges, keeping the joint.
pub fn delete_leg(t: &Graph, leg: &Leg) -> Result<Graph> {
    if !t.is_tree() {
        return Err(Error::NotATree);
    }
    if !leg.is_leg_of(&t.adjacency()) {
        return Err(Error::NotALegOfThisTree);
    }
    let gone = &leg.vertices[1..];
    let vertices = t.vertices().iter().copied().filter(|v| !gone.contains(v));
    let edges = t
        .edges()
        .iter()
        .filter(|e| !e.iter().any(|v| gone.contains(&v)))
        .map(|e| e.vertices().to_vec());
    Graph::try_from(Hypergraph::new(vertices, edges)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{catalog_tree, generate_graph, FamilySpec};
    use crate::hypergraph::labels;

    fn leg_labels(legs: &[Leg]) -> Vec<Vec<u32>> {
        legs.iter()
            .map(|l| l.vertices().iter().map(|v| v.get()).collect())
            .collect()
    }

    fn g(v: &[u32], e: &[(u32, u32)]) -> Graph {
        Graph::from_labels(v, e).unwrap()
    }

    /// Center 1 with legs of the given lengths, labeled outward.
    fn spider(lengths: &[u32]) -> Graph {
        let mut edges = Vec::new();
        let mut next = 2;
        for &len in lengths {
            let mut prev = 1;
            for _ in 0..len {
                edges.push((prev, next));
                prev = next;
                next += 1;
            }
        }
        let vs: Vec<u32> = (1..next).collect();
        g(&vs, &edges)
    }

    #[test]
    fn star_legs() {
        let k13 = generate_graph(FamilySpec::star(3)).unwrap();
        assert_eq!(
            leg_labels(&find_legs(&k13).unwrap()),
            vec![vec![1, 2], vec![1, 3], vec![1, 4]]
        );
    }

    #[test]
    fn paths_have_no_legs() {
        for n in 1..8 {
            assert!(find_legs(&generate_graph(FamilySpec::path(n)).unwrap())
                .unwrap()
                .is_empty());
        }
    }

    #[test]
    fn t12_legs() {
        let t12 = catalog_tree(12).unwrap();
        assert_eq!(
            leg_labels(&find_legs(&t12).unwrap()),
            vec![vec![2, 1], vec![2, 3, 4], vec![2, 5, 6]]
        );
    }

    #[test]
    fn delete_examples() {
        let t12 = catalog_tree(12).unwrap();
        let leg = Leg::new(&t12, labels(&[2, 1]).unwrap()).unwrap();
        assert_eq!(
            delete_leg(&t12, &leg).unwrap(),
            g(&[2, 3, 4, 5, 6], &[(2, 3), (3, 4), (2, 5), (5, 6)])
        );

        let k13 = generate_graph(FamilySpec::star(3)).unwrap();
        let leg = Leg::new(&k13, labels(&[1, 2]).unwrap()).unwrap();
        assert_eq!(
            delete_leg(&k13, &leg).unwrap(),
            g(&[1, 3, 4], &[(1, 3), (1, 4)])
        );

        let s = spider(&[3, 3, 2]);
        let shortest = find_legs(&s).unwrap().remove(0);
        assert_eq!(shortest.len(), 2);
        let rest = delete_leg(&s, &shortest).unwrap();
        assert_eq!(rest, spider(&[3, 3]));
    }

    #[test]
    fn rejects_non_legs() {
        let t12 = catalog_tree(12).unwrap();
        // joint of degree two
        assert_eq!(
            Leg::new(&t12, labels(&[3, 4]).unwrap()),
            Err(Error::NotALegOfThisTree)
        );
        // stops before the leaf
        assert_eq!(
            Leg::new(&t12, labels(&[2, 3]).unwrap()),
            Err(Error::NotALegOfThisTree)
        );
        let leg = find_legs(&t12).unwrap().remove(0);
        let other = catalog_tree(10).unwrap();
        assert_eq!(delete_leg(&other, &leg), Err(Error::NotALegOfThisTree));
        let c3 = g(&[1, 2, 3], &[(1, 2), (2, 3), (1, 3)]);
        assert_eq!(find_legs(&c3), Err(Error::NotATree));
    }

    #[test]
    fn deletion_keeps_a_tree() {
        for t in crate::generators::all_trees(9) {
            for leg in find_legs(&t).unwrap() {
                let rest = delete_leg(&t, &leg).unwrap();
                assert!(rest.is_tree());
                assert_eq!(rest.vertex_count(), t.vertex_count() - leg.len());
            }
        }
    }
}
