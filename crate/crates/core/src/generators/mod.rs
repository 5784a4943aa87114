//! Constructors for the standard families: strong uniform hypercycles and
//! hyperpaths, complete uniform hypergraphs, paths, cycles and stars.
//!
//! Vertices are labeled `1..=n` in their natural order (`v_i` becomes `i`).
//! Stars `K_{1,n}` use center `1` and leaves `2..=n+1`.

mod catalog;
mod trees;

pub use catalog::{
    catalog_key_tree, catalog_realization, catalog_tree, catalog_tree_ids, exception_name,
    fixture_ids, CatalogKey, Fixture, CATALOG_TEXT, EXCEPTION_IDS, FIXTURE_IDS,
};
pub use trees::all_trees;

use std::fmt;

use crate::error::{Error, Result};
use crate::hypergraph::{Graph, Hypergraph, VertexId};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Family {
    Hypercycle,
    Hyperpath,
    CompleteUniform,
    Path,
    Cycle,
    Star,
}

impl Family {
    pub const ALL: [Family; 6] = [
        Family::Hypercycle,
        Family::Hyperpath,
        Family::CompleteUniform,
        Family::Path,
        Family::Cycle,
        Family::Star,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Family::Hypercycle => "hypercycle",
            Family::Hyperpath => "hyperpath",
            Family::CompleteUniform => "complete",
            Family::Path => "path",
            Family::Cycle => "cycle",
            Family::Star => "star",
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl std::str::FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Family::ALL
            .into_iter()
            .find(|f| f.name() == s)
            .ok_or_else(|| Error::InvalidSpec(format!("unknown family {s:?}")))
    }
}

/// Family plus size parameters. For paths and cycles `n` is the vertex
/// count; for stars `K_{1,n}` it is the number of leaves. `d` is only read
/// by the uniform families.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct FamilySpec {
    pub family: Family,
    pub n: usize,
    pub d: usize,
}

impl FamilySpec {
    pub fn hypercycle(n: usize, d: usize) -> Self {
        FamilySpec {
            family: Family::Hypercycle,
            n,
            d,
        }
    }

    pub fn hyperpath(n: usize, d: usize) -> Self {
        FamilySpec {
            family: Family::Hyperpath,
            n,
            d,
        }
    }

    pub fn complete(n: usize, d: usize) -> Self {
        FamilySpec {
            family: Family::CompleteUniform,
            n,
            d,
        }
    }

    pub fn path(n: usize) -> Self {
        FamilySpec {
            family: Family::Path,
            n,
            d: 2,
        }
    }

    pub fn cycle(n: usize) -> Self {
        FamilySpec {
            family: Family::Cycle,
            n,
            d: 2,
        }
    }

    pub fn star(n: usize) -> Self {
        FamilySpec {
            family: Family::Star,
            n,
            d: 2,
        }
    }

    pub fn validate(&self) -> Result<()> {
        let FamilySpec { family, n, d } = *self;
        let ok = match family {
            Family::Hypercycle | Family::Hyperpath | Family::CompleteUniform => 2 <= d && d <= n,
            Family::Path => n >= 1,
            Family::Cycle => n >= 3,
            Family::Star => n >= 1,
        };
        if n >= u32::MAX as usize {
            return Err(Error::InvalidSpec(format!("n = {n} is too large")));
        }
        if ok {
            Ok(())
        } else {
            Err(Error::InvalidSpec(format!(
                "{family} with n = {n}, d = {d}"
            )))
        }
    }
}

fn vid(i: usize) -> VertexId {
    VertexId::new(i as u32).expect("labels start at 1")
}

/// `v_i, ..., v_{i+len-1}` with indices taken modulo `n` (1-based).
fn cyclic_window(i: usize, len: usize, n: usize) -> Vec<VertexId> {
    (0..len).map(|j| vid((i - 1 + j) % n + 1)).collect()
}

pub fn generate(spec: FamilySpec) -> Result<Hypergraph> {
    spec.validate()?;
    let FamilySpec { family, n, d } = spec;
    let on = |edges: Vec<Vec<VertexId>>| Hypergraph::on_range(n as u32, edges);
    match family {
        Family::Hypercycle => on((1..=n).map(|i| cyclic_window(i, d, n)).collect()),
        Family::Hyperpath => on((1..=n - d + 1)
            .map(|i| (i..i + d).map(vid).collect())
            .collect()),
        Family::CompleteUniform => on(combinations(n, d)
            .into_iter()
            .map(|c| c.into_iter().map(|i| vid(i + 1)).collect())
            .collect()),
        Family::Path => on((1..n).map(|i| vec![vid(i), vid(i + 1)]).collect()),
        Family::Cycle => on((1..=n).map(|i| cyclic_window(i, 2, n)).collect()),
        Family::Star => {
            Hypergraph::on_range(n as u32 + 1, (2..=n + 1).map(|i| vec![vid(1), vid(i)]))
        }
    }
}

/// Like [`generate`] for the 2-uniform families.
pub fn generate_graph(spec: FamilySpec) -> Result<Graph> {
    match spec.family {
        Family::Path | Family::Cycle | Family::Star => Graph::try_from(generate(spec)?),
        _ if spec.d == 2 => Graph::try_from(generate(spec)?),
        other => Err(Error::InvalidSpec(format!(
            "{other} with d = {} is not a graph",
            spec.d
        ))),
    }
}

/// All `k`-subsets of `0..n` in lexicographic order.
pub fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    if k > n {
        return out;
    }
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        out.push(idx.clone());
        let Some(i) = (0..k).rev().find(|&i| idx[i] != i + n - k) else {
            return out;
        };
        idx[i] += 1;
        for j in i + 1..k {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

/// 3-uniform hypergraph whose EI is the star `K_{1,n}` (center 1), `n >= 3`:
/// the triples `{1, i, i+1}` for consecutive leaves, closed around.
pub fn star_realization(n: usize) -> Result<Hypergraph> {
    if n < 3 {
        return Err(Error::InvalidSpec(format!(
            "star realization needs n >= 3, got {n}"
        )));
    }
    let leaves: Vec<usize> = (2..=n + 1).collect();
    let edges = (0..n).map(|i| vec![vid(1), vid(leaves[i]), vid(leaves[(i + 1) % n])]);
    Hypergraph::on_range(n as u32 + 1, edges)
}

/// 3-uniform hypergraph whose EI is the path `P_n` on `1..=n`, for `n = 1`
/// or `n >= 7`: consecutive triples plus `{1, 2, n-2}` and `{n-1, n, 3}`.
pub fn path_realization(n: usize) -> Result<Hypergraph> {
    match n {
        1 => Hypergraph::on_range(1, Vec::<Vec<VertexId>>::new()),
        7.. => {
            let mut edges: Vec<Vec<VertexId>> = (1..=n - 2)
                .map(|i| vec![vid(i), vid(i + 1), vid(i + 2)])
                .collect();
            edges.push(vec![vid(1), vid(2), vid(n - 2)]);
            edges.push(vec![vid(n - 1), vid(n), vid(3)]);
            Hypergraph::on_range(n as u32, edges)
        }
        _ => Err(Error::InvalidSpec(format!(
            "path realization exists only for n = 1 or n >= 7, got {n}"
        ))),
    }
}
