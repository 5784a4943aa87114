//! The Helly property: every pairwise intersecting subfamily of edges has a
//! common vertex.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::hypergraph::{Hypergraph, VertexId};

/// Largest edge count accepted by [`is_helly_bruteforce`].
pub const BRUTEFORCE_MAX_EDGES: usize = 20;

#[derive(Clone, PartialEq, Eq)]
struct Bits(Vec<u64>);

impl Bits {
    fn empty(width: usize) -> Bits {
        Bits(vec![0; width.div_ceil(64).max(1)])
    }

    fn set(&mut self, i: usize) {
        self.0[i / 64] |= 1 << (i % 64);
    }

    fn and(&self, other: &Bits) -> Bits {
        Bits(self.0.iter().zip(&other.0).map(|(a, b)| a & b).collect())
    }

    fn is_zero(&self) -> bool {
        self.0.iter().all(|&w| w == 0)
    }
}

fn edge_bits(h: &Hypergraph) -> Vec<Bits> {
    let index: BTreeMap<VertexId, usize> = h
        .vertices()
        .iter()
        .enumerate()
        .map(|(i, &v)| (v, i))
        .collect();
    h.edges()
        .iter()
        .map(|e| {
            let mut b = Bits::empty(index.len());
            e.iter().for_each(|v| b.set(index[&v]));
            b
        })
        .collect()
}

/// Decides the Helly property through vertex triples: `h` is Helly iff for
/// any three vertices, the edges containing at least two of them share a
/// vertex. Runs in `O(|V|^3 |E|)`.
pub fn is_helly(h: &Hypergraph) -> bool {
    let vs: Vec<VertexId> = h.vertices().iter().copied().collect();
    let bits = edge_bits(h);
    let edges: Vec<_> = h.edges().iter().collect();
    let n = vs.len();
    for a in 0..n {
        for b in a + 1..n {
            for c in b + 1..n {
                let mut common: Option<Bits> = None;
                for (e, eb) in edges.iter().zip(&bits) {
                    let hits = [vs[a], vs[b], vs[c]]
                        .iter()
                        .filter(|&&v| e.contains(v))
                        .count();
                    if hits >= 2 {
                        let next = match &common {
                            None => eb.clone(),
                            Some(acc) => acc.and(eb),
                        };
                        if next.is_zero() {
                            return false;
                        }
                        common = Some(next);
                    }
                }
            }
        }
    }
    true
}

/// Checks the definition directly by walking every pairwise intersecting
/// subfamily of edges.
pub fn is_helly_bruteforce(h: &Hypergraph) -> Result<bool> {
    let m = h.edge_count();
    if m > BRUTEFORCE_MAX_EDGES {
        return Err(Error::TooManyEdges {
            edges: m,
            limit: BRUTEFORCE_MAX_EDGES,
        });
    }
    let bits = edge_bits(h);
    let meets: Vec<Vec<bool>> = bits
        .iter()
        .map(|a| bits.iter().map(|b| !a.and(b).is_zero()).collect())
        .collect();

    fn extend(
        chosen: &mut Vec<usize>,
        common: &Bits,
        next: usize,
        bits: &[Bits],
        meets: &[Vec<bool>],
    ) -> bool {
        for j in next..bits.len() {
            if chosen.iter().all(|&i| meets[i][j]) {
                let narrowed = common.and(&bits[j]);
                if narrowed.is_zero() {
                    return false;
                }
                chosen.push(j);
                let ok = extend(chosen, &narrowed, j + 1, bits, meets);
                chosen.pop();
                if !ok {
                    return false;
                }
            }
        }
        true
    }

    let mut everything = Bits::empty(h.vertex_count());
    (0..h.vertex_count()).for_each(|i| everything.set(i));
    Ok(extend(&mut Vec::new(), &everything, 0, &bits, &meets))
}
