//! Labeled trees on at most eight vertices, indexed by their atlas number,
//! together with explicit 3-uniform realizations.
//!
//! The data lives in `data/catalog.txt` so that the library, the CLI and the
//! tests read the same fixtures.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::OnceLock;

use super::{generate, path_realization, star_realization, FamilySpec};
use crate::ei::ei;
use crate::error::{Error, Result};
use crate::format::parse_sections;
use crate::hypergraph::{Graph, Hypergraph};

pub const CATALOG_TEXT: &str = include_str!("../../data/catalog.txt");

/// Atlas ids that come with an explicit realization in the data file.
pub const FIXTURE_IDS: [u32; 33] = [
    10, 11, 13, 16, 17, 18, 19, 20, 21, 22, 23, 24, 27, 28, 29, 30, 31, 32, 33, 34, 35, 36, 37, 38,
    39, 40, 41, 42, 43, 44, 45, 46, 47,
];

/// The seven trees that are not EI hypergraphs of any 3-uniform hypergraph.
pub const EXCEPTION_IDS: [u32; 7] = [2, 3, 5, 7, 8, 12, 14];

pub fn exception_name(id: u32) -> Option<&'static str> {
    Some(match id {
        2 => "P2",
        3 => "P3",
        5 => "P4",
        7 => "T7",
        8 => "P5",
        12 => "T12",
        14 => "P6",
        _ => return None,
    })
}

fn unrealizable(id: u32) -> Error {
    Error::KnownUnrealizable {
        catalog_id: id,
        name: exception_name(id).expect("exception id").to_string(),
    }
}

/// Atlas id of the path on `n` vertices when it is one of the exceptions.
fn path_exception(n: usize) -> Option<u32> {
    match n {
        2 => Some(2),
        3 => Some(3),
        4 => Some(5),
        5 => Some(8),
        6 => Some(14),
        _ => None,
    }
}

struct Catalog {
    trees: BTreeMap<u32, Graph>,
    realizations: BTreeMap<u32, Hypergraph>,
}

fn catalog() -> &'static Catalog {
    static CATALOG: OnceLock<Catalog> = OnceLock::new();
    CATALOG.get_or_init(|| {
        let sections = parse_sections(CATALOG_TEXT).expect("catalog data file is well formed");
        let mut trees = BTreeMap::new();
        let mut realizations = BTreeMap::new();
        for s in sections {
            match s.kind.as_str() {
                "tree" => {
                    let g = Graph::try_from(s.hypergraph).expect("catalog tree is a graph");
                    assert!(g.is_tree(), "catalog entry T{} is not a tree", s.id);
                    trees.insert(s.id, g);
                }
                "realization" => {
                    assert!(
                        s.hypergraph.is_k_uniform(3),
                        "realization {} is not 3-uniform",
                        s.id
                    );
                    realizations.insert(s.id, s.hypergraph);
                }
                other => panic!("unknown catalog section kind {other:?}"),
            }
        }
        Catalog {
            trees,
            realizations,
        }
    })
}

/// A catalog tree with its explicit realization.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Fixture {
    pub id: u32,
    pub tree: Graph,
    pub realization: Hypergraph,
}

/// Every explicit realization in the data file, in id order.
pub fn fixture_ids() -> Vec<u32> {
    catalog().realizations.keys().copied().collect()
}

impl Fixture {
    pub fn load(id: u32) -> Option<Fixture> {
        let c = catalog();
        Some(Fixture {
            id,
            tree: c.trees.get(&id)?.clone(),
            realization: c.realizations.get(&id)?.clone(),
        })
    }
}

/// Atlas ids with a tree in the catalog (all of `1..=48` except the paths
/// and stars on seven and eight vertices).
pub fn catalog_tree_ids() -> Vec<u32> {
    catalog().trees.keys().copied().collect()
}

pub fn catalog_tree(id: u32) -> Result<Graph> {
    catalog()
        .trees
        .get(&id)
        .cloned()
        .ok_or(Error::UnknownCatalogId(id))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CatalogKey {
    /// Atlas number of a tree on at most eight vertices.
    Atlas(u32),
    /// The star `K_{1,n}`.
    Star(usize),
    /// The path on `n` vertices.
    Path(usize),
}

impl fmt::Display for CatalogKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CatalogKey::Atlas(id) => write!(f, "T{id}"),
            CatalogKey::Star(n) => write!(f, "K_{{1,{n}}}"),
            CatalogKey::Path(n) => write!(f, "P{n}"),
        }
    }
}

/// The tree a key designates.
pub fn catalog_key_tree(key: CatalogKey) -> Result<Graph> {
    match key {
        CatalogKey::Atlas(id) => catalog_tree(id),
        CatalogKey::Star(n) => Graph::try_from(generate(FamilySpec::star(n))?),
        CatalogKey::Path(n) => Graph::try_from(generate(FamilySpec::path(n))?),
    }
}

/// A 3-uniform hypergraph whose EI is the designated tree; the equality is
/// checked before returning.
pub fn catalog_realization(key: CatalogKey) -> Result<Hypergraph> {
    let realization = match key {
        CatalogKey::Star(n) => match n {
            0 => return Err(Error::InvalidSpec("star with no leaves".into())),
            1 => return Err(unrealizable(2)),
            2 => return Err(unrealizable(3)),
            _ => star_realization(n)?,
        },
        CatalogKey::Path(n) => match (n, path_exception(n)) {
            (0, _) => return Err(Error::InvalidSpec("path with no vertices".into())),
            (_, Some(id)) => return Err(unrealizable(id)),
            _ => path_realization(n)?,
        },
        CatalogKey::Atlas(id) => {
            if exception_name(id).is_some() {
                return Err(unrealizable(id));
            }
            let c = catalog();
            match (c.realizations.get(&id), c.trees.get(&id)) {
                (Some(r), _) => r.clone(),
                (None, Some(t)) => match star_leaves(t) {
                    Some(n) if n >= 3 => star_realization(n)?,
                    _ if t.vertex_count() == 1 => path_realization(1)?,
                    _ => return Err(Error::NotInCatalog(key.to_string())),
                },
                (None, None) => return Err(Error::NotInCatalog(key.to_string())),
            }
        }
    };
    let tree = catalog_key_tree(key)?;
    if ei(&realization) != *tree.as_hypergraph() {
        return Err(Error::InternalVerificationFailure(format!(
            "catalog realization of {key} does not reproduce the tree"
        )));
    }
    Ok(realization)
}

/// Leaf count if `t` is a star centered at vertex 1.
fn star_leaves(t: &Graph) -> Option<usize> {
    let n = t.vertex_count();
    let center = *t.vertices().iter().next()?;
    (n >= 2 && t.degree(center).ok()? == n - 1 && t.edge_count() == n - 1).then_some(n - 1)
}
