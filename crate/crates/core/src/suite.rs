//! Fixture verification suite: every shipped fixture, the path and star
//! constructions, the closed-form laws, the neighborhood identity, Helly
//! heredity, linear augmentation and the small-tree classification.
//!
//! Items are independent and may run in parallel; the report keeps a fixed
//! order.

use std::fmt;

use crate::decider::{decide_3uniform, Verdict};
use crate::digraph_ops::check_neighborhood_identity;
use crate::ei::{augment_linear, ei, satisfies_necessary_condition};
use crate::exec::Execution;
use crate::generators::{
    all_trees, catalog_tree, fixture_ids, generate_graph, path_realization, star_realization,
    FamilySpec, Fixture, EXCEPTION_IDS,
};
use crate::helly::is_helly;
use crate::hypergraph::Hypergraph;
use crate::laws::{sweep, LawId};
use crate::random::{
    random_digraph, random_helly_hypergraph, random_hypergraph, random_linear_hypergraph, seeded,
};
use crate::realizer::{is_isomorphic, realize_tree};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SuiteItem {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

impl fmt::Display for SuiteItem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = if self.passed { "PASS" } else { "FAIL" };
        write!(f, "{status} {}", self.name)?;
        if !self.detail.is_empty() {
            write!(f, ": {}", self.detail)?;
        }
        Ok(())
    }
}

#[derive(Clone, Copy)]
enum Check {
    Fixture(u32),
    StarRealizations,
    PathRealizations,
    NecessaryConditionCounterexample,
    LinearAugmentation,
    NecessaryConditionOfEi,
    NeighborhoodIdentity,
    HellyHeredity,
    Law(LawId),
    SmallTreeClassification,
    NineVertexRealizations,
}

impl Check {
    fn name(self) -> String {
        match self {
            Check::Fixture(id) => format!("fixture T{id}"),
            Check::StarRealizations => "star realizations K_{1,n}, n = 3..50".into(),
            Check::PathRealizations => "path realizations P_n, n = 1 and 7..50".into(),
            Check::NecessaryConditionCounterexample => {
                "necessary condition rejects {123, 234}".into()
            }
            Check::LinearAugmentation => "linear augmentation, 200 random instances".into(),
            Check::NecessaryConditionOfEi => {
                "EI hypergraphs meet the necessary condition, 200 random instances".into()
            }
            Check::NeighborhoodIdentity => "neighborhood identity, 200 random digraphs".into(),
            Check::HellyHeredity => "Helly heredity, 100 random Helly hypergraphs".into(),
            Check::Law(law) => format!("law {law}"),
            Check::SmallTreeClassification => {
                "3-uniform classification of all trees on at most 8 vertices".into()
            }
            Check::NineVertexRealizations => "realizations of all trees on 9 vertices".into(),
        }
    }

    fn run(self) -> (bool, String) {
        match self {
            Check::Fixture(id) => {
                let f = Fixture::load(id).expect("listed fixture");
                let got = ei(&f.realization);
                let ok = got == *f.tree.as_hypergraph();
                (
                    ok,
                    if ok {
                        String::new()
                    } else {
                        format!("EI gave {got}")
                    },
                )
            }
            Check::StarRealizations => count_failures((3..=50).map(|n| {
                let star = generate_graph(FamilySpec::star(n)).expect("star");
                star_realization(n).is_ok_and(|h| ei(&h) == *star.as_hypergraph())
            })),
            Check::PathRealizations => count_failures(std::iter::once(1).chain(7..=50).map(|n| {
                let path = generate_graph(FamilySpec::path(n)).expect("path");
                path_realization(n).is_ok_and(|h| ei(&h) == *path.as_hypergraph())
            })),
            Check::NecessaryConditionCounterexample => {
                let h = Hypergraph::from_labels(&[1, 2, 3, 4], &[&[1, 2, 3], &[2, 3, 4]])
                    .expect("valid");
                (!satisfies_necessary_condition(&h), String::new())
            }
            Check::LinearAugmentation => {
                let mut rng = seeded(0x11);
                count_failures((0..200).map(|i| {
                    let h = random_linear_hypergraph(&mut rng, 3 + i % 8, 10);
                    augment_linear(&h).is_ok_and(|a| ei(&a) == h)
                }))
            }
            Check::NecessaryConditionOfEi => {
                let mut rng = seeded(0x12);
                count_failures((0..200).map(|i| {
                    let h = random_hypergraph(&mut rng, 3 + i % 8, 2 + i % 9, 5);
                    satisfies_necessary_condition(&ei(&h))
                }))
            }
            Check::NeighborhoodIdentity => {
                let mut rng = seeded(0x13);
                count_failures((0..200).map(|i| {
                    let p = [0.1, 0.3, 0.5][i % 3];
                    check_neighborhood_identity(&random_digraph(&mut rng, 1 + i % 8, p)).agrees
                }))
            }
            Check::HellyHeredity => {
                let mut rng = seeded(0x14);
                count_failures((0..100).map(|i| {
                    random_helly_hypergraph(&mut rng, 3 + i % 7, 12)
                        .is_ok_and(|h| is_helly(&ei(&h)))
                }))
            }
            Check::Law(law) => {
                let max_n = match law {
                    LawId::CompleteIterate | LawId::CompleteEiNumber => 9,
                    _ => 12,
                };
                match sweep(law, max_n, 5, Execution::Sequential) {
                    Ok(reports) => {
                        let bad: Vec<String> = reports
                            .iter()
                            .filter(|r| !r.agrees)
                            .map(|r| r.to_string())
                            .collect();
                        if bad.is_empty() {
                            (true, format!("{} tuples", reports.len()))
                        } else {
                            (false, bad.join("; "))
                        }
                    }
                    Err(e) => (false, e.to_string()),
                }
            }
            Check::SmallTreeClassification => small_tree_classification(),
            Check::NineVertexRealizations => count_failures(
                all_trees(9)
                    .iter()
                    .map(|t| realize_tree(t).is_ok_and(|c| c.verified)),
            ),
        }
    }
}

fn count_failures(results: impl Iterator<Item = bool>) -> (bool, String) {
    let (mut total, mut failed) = (0, 0);
    for ok in results {
        total += 1;
        failed += usize::from(!ok);
    }
    (failed == 0, format!("{}/{total} ok", total - failed))
}

fn small_tree_classification() -> (bool, String) {
    let exceptions: Vec<_> = EXCEPTION_IDS
        .iter()
        .map(|&id| catalog_tree(id).expect("exception tree"))
        .collect();
    let mut mismatches = Vec::new();
    let mut unrealizable = 0;
    let mut total = 0;
    for n in 1..=8 {
        for t in all_trees(n) {
            total += 1;
            let expected_exception = exceptions
                .iter()
                .any(|e| is_isomorphic(e, &t).expect("trees"));
            match decide_3uniform(&t) {
                Ok(outcome) => {
                    let negative = outcome.verdict == Verdict::Unrealizable;
                    unrealizable += usize::from(negative);
                    if negative != expected_exception {
                        mismatches.push(format!("{t} decided {}", outcome.verdict));
                    }
                }
                Err(e) => mismatches.push(format!("{t}: {e}")),
            }
        }
    }
    if mismatches.is_empty() {
        (
            true,
            format!("{unrealizable} unrealizable among {total} trees"),
        )
    } else {
        (false, mismatches.join("; "))
    }
}

fn checks() -> Vec<Check> {
    let mut out: Vec<Check> = fixture_ids().into_iter().map(Check::Fixture).collect();
    out.extend([
        Check::StarRealizations,
        Check::PathRealizations,
        Check::NecessaryConditionCounterexample,
        Check::LinearAugmentation,
        Check::NecessaryConditionOfEi,
        Check::NeighborhoodIdentity,
        Check::HellyHeredity,
    ]);
    out.extend(LawId::SWEEPABLE.into_iter().map(Check::Law));
    out.extend([
        Check::SmallTreeClassification,
        Check::NineVertexRealizations,
    ]);
    out
}

/// Runs every item; the result order is fixed regardless of `exec`.
pub fn run_suite(exec: Execution) -> Vec<SuiteItem> {
    exec.map(&checks(), |&c| {
        let (passed, detail) = c.run();
        SuiteItem {
            name: c.name(),
            passed,
            detail,
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn item_names_are_unique() {
        let names: Vec<String> = checks().iter().map(|c| c.name()).collect();
        let mut sorted = names.clone();
        sorted.sort();
        sorted.dedup();
        assert_eq!(sorted.len(), names.len());
        assert_eq!(names.len(), 33 + 7 + 7 + 2);
    }

    #[test]
    fn cheap_items_pass() {
        for c in [
            Check::Fixture(10),
            Check::StarRealizations,
            Check::PathRealizations,
            Check::NecessaryConditionCounterexample,
        ] {
            let (ok, detail) = c.run();
            assert!(ok, "{}: {detail}", c.name());
        }
    }
}
