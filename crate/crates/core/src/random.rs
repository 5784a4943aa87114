//! Seeded random instances for fuzzing: digraphs, hypergraphs, linear
//! hypergraphs and Helly hypergraphs.

use rand::seq::index::sample;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::digraph::Digraph;
use crate::error::Result;
use crate::helly::{is_helly, is_helly_bruteforce, BRUTEFORCE_MAX_EDGES};
use crate::hypergraph::{Edge, Hypergraph, VertexId};

pub fn seeded(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn vid(i: usize) -> VertexId {
    VertexId::new(i as u32).expect("labels start at 1")
}

/// A random `size`-subset of `1..=n`.
fn random_edge<R: Rng + ?Sized>(rng: &mut R, n: usize, size: usize) -> Edge {
    Edge::new(sample(rng, n, size).into_iter().map(|i| vid(i + 1)))
}

/// Each of the `n(n-1)` possible arcs on `1..=n` is present with probability `p`.
pub fn random_digraph<R: Rng + ?Sized>(rng: &mut R, n: usize, p: f64) -> Digraph {
    let arcs: Vec<(VertexId, VertexId)> = (1..=n)
        .flat_map(|u| {
            (1..=n)
                .filter(move |&v| v != u)
                .map(move |v| (vid(u), vid(v)))
        })
        .filter(|_| rng.random_bool(p))
        .collect();
    Digraph::new((1..=n).map(vid), arcs).expect("arcs stay inside the vertex set")
}

/// `m` edge draws on `1..=n` (duplicates collapse), sizes uniform in
/// `2..=max_size`. Needs `n >= 2`.
pub fn random_hypergraph<R: Rng + ?Sized>(
    rng: &mut R,
    n: usize,
    m: usize,
    max_size: usize,
) -> Hypergraph {
    let top = max_size.clamp(2, n.max(2));
    let edges: Vec<Edge> = (0..m)
        .map(|_| {
            let size = rng.random_range(2..=top);
            random_edge(rng, n, size)
        })
        .collect();
    Hypergraph::on_range(n as u32, edges.iter().map(|e| e.vertices().to_vec()))
        .expect("edges drawn from the vertex set")
}

/// Random linear hypergraph on `1..=n` that does not contain the full vertex
/// set as an edge. Built from `attempts` candidate edges, each kept only if it
/// meets every kept edge in at most one vertex. Needs `n >= 3`.
pub fn random_linear_hypergraph<R: Rng + ?Sized>(
    rng: &mut R,
    n: usize,
    attempts: usize,
) -> Hypergraph {
    let top = (n - 1).clamp(2, 5);
    let mut kept: Vec<Edge> = Vec::new();
    for _ in 0..attempts {
        let size = rng.random_range(2..=top);
        let e = random_edge(rng, n, size);
        if kept.iter().all(|k| k.intersection_len(&e) <= 1) {
            kept.push(e);
        }
    }
    Hypergraph::on_range(n as u32, kept.iter().map(|e| e.vertices().to_vec()))
        .expect("edges drawn from the vertex set")
}

/// Random Helly hypergraph on `1..=n` with at most `m` edges (`m <= 20`,
/// `n >= 3`).
///
/// Starts from a kernel of edges through one common vertex, then proposes
/// random edges and keeps those that leave the family Helly. The result is
/// confirmed with the subfamily oracle; a disagreement discards the sample.
pub fn random_helly_hypergraph<R: Rng + ?Sized>(
    rng: &mut R,
    n: usize,
    m: usize,
) -> Result<Hypergraph> {
    let m = m.min(BRUTEFORCE_MAX_EDGES);
    loop {
        let center = rng.random_range(1..=n);
        let kernel = rng.random_range(1..=m.max(1)).min(m);
        let mut h = Hypergraph::on_range(n as u32, Vec::<Vec<VertexId>>::new())?;
        for _ in 0..kernel {
            let size = rng.random_range(1..=(n - 1).min(4));
            let mut vs = sample(rng, n - 1, size)
                .into_iter()
                .map(|i| {
                    if i + 1 >= center {
                        vid(i + 2)
                    } else {
                        vid(i + 1)
                    }
                })
                .collect::<Vec<_>>();
            vs.push(vid(center));
            h = h.with_edges([vs])?;
        }
        for _ in 0..4 * m {
            if h.edge_count() >= m {
                break;
            }
            let size = rng.random_range(2..=n.min(5));
            let candidate = h.with_edges([random_edge(rng, n, size).vertices().to_vec()])?;
            if is_helly(&candidate) {
                h = candidate;
            }
        }
        if is_helly_bruteforce(&h)? {
            return Ok(h);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn same_seed_same_instance() {
        let a = random_hypergraph(&mut seeded(7), 8, 10, 4);
        let b = random_hypergraph(&mut seeded(7), 8, 10, 4);
        assert_eq!(a, b);
        let c = random_digraph(&mut seeded(7), 6, 0.3);
        assert_eq!(c, random_digraph(&mut seeded(7), 6, 0.3));
    }

    #[test]
    fn digraph_density_extremes() {
        let mut rng = seeded(1);
        assert!(random_digraph(&mut rng, 5, 0.0).arcs().is_empty());
        assert_eq!(random_digraph(&mut rng, 5, 1.0).arcs().len(), 20);
    }

    #[test]
    fn linear_instances_are_linear() {
        let mut rng = seeded(2);
        for n in 3..10 {
            let h = random_linear_hypergraph(&mut rng, n, 12);
            assert!(h.is_linear());
            assert_eq!(h.vertex_count(), n);
            assert!(h.max_edge_cardinality() < n);
        }
    }

    #[test]
    fn helly_instances_pass_the_oracle() {
        let mut rng = seeded(3);
        for n in 3..9 {
            let h = random_helly_hypergraph(&mut rng, n, 10).unwrap();
            assert!(h.edge_count() <= 10);
            assert!(h.edge_count() >= 1);
            assert!(is_helly_bruteforce(&h).unwrap());
        }
    }

    #[test]
    fn helly_instances_are_not_all_stars() {
        let mut rng = seeded(4);
        let without_common_vertex = (0..100)
            .filter(|i| {
                let h = random_helly_hypergraph(&mut rng, 5 + i % 4, 10).unwrap();
                let mut edges = h.edges().iter();
                let first = edges.next().unwrap().clone();
                edges.fold(first, |acc, e| acc.intersection(e)).is_empty()
            })
            .count();
        assert!(without_common_vertex > 20, "{without_common_vertex}");
    }
}
