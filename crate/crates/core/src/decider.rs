//! Exhaustive decision whether a graph is the EI hypergraph of some 3-uniform
//! hypergraph on the same vertex set.
//!
//! Two triples meet in at most two vertices, so `EI(S) = G` for a family `S`
//! of triples exactly when
//!
//! * every edge of `G` lies in at least two members of `S`, and
//! * any two members of `S` sharing two vertices share an edge of `G`.
//!
//! A triple containing no edge of `G` can only share single vertices with
//! the rest of a valid family, so dropping it keeps the family valid. The
//! search therefore runs over *useful* triples (those containing an edge).

use std::collections::BTreeSet;
use std::fmt;

use crate::ei::ei;
use crate::error::{Error, Result};
use crate::exec::Execution;
use crate::generators::combinations;
use crate::hypergraph::{Edge, Graph, Hypergraph, VertexId};

pub const DEFAULT_MAX_VERTICES: usize = 10;
pub const EXHAUSTIVE_MAX_VERTICES: usize = 6;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Verdict {
    Realizable,
    Unrealizable,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Realizable => "realizable",
            Verdict::Unrealizable => "unrealizable",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DecisionOutcome {
    pub verdict: Verdict,
    pub witness: Option<Hypergraph>,
    /// Search nodes visited (subsets tried, for the exhaustive oracle).
    pub explored: u64,
    /// Number of candidate triples the search ranged over.
    pub useful_count: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DeciderConfig {
    pub max_vertices: usize,
    pub node_budget: Option<u64>,
    pub execution: Execution,
}

impl Default for DeciderConfig {
    fn default() -> Self {
        DeciderConfig {
            max_vertices: DEFAULT_MAX_VERTICES,
            node_budget: None,
            execution: Execution::default(),
        }
    }
}

/// All triples of vertices containing at least one edge, in lexicographic
/// order.
pub fn useful_hyperedges(g: &Graph) -> Vec<Edge> {
    let labels: Vec<VertexId> = g.vertices().iter().copied().collect();
    let mut out = BTreeSet::new();
    for (a, b) in g.pairs() {
        for &c in &labels {
            if c != a && c != b {
                out.insert(Edge::new([a, b, c]));
            }
        }
    }
    out.into_iter().collect()
}

struct Problem {
    labels: Vec<VertexId>,
    triples: Vec<Edge>,
    /// Edge indices contained in each candidate.
    contains: Vec<Vec<usize>>,
    /// Candidates containing each edge, ascending.
    covering: Vec<Vec<usize>>,
    /// Candidates sharing a non-edge pair with each candidate.
    conflicts: Vec<Vec<usize>>,
}

impl Problem {
    fn new(g: &Graph) -> Self {
        let labels: Vec<VertexId> = g.vertices().iter().copied().collect();
        let edges: Vec<Edge> = g.edges().iter().cloned().collect();
        let triples = useful_hyperedges(g);
        let contains: Vec<Vec<usize>> = triples
            .iter()
            .map(|t| {
                edges
                    .iter()
                    .enumerate()
                    .filter(|(_, e)| e.is_subset(t))
                    .map(|(i, _)| i)
                    .collect()
            })
            .collect();
        let mut covering = vec![Vec::new(); edges.len()];
        for (c, es) in contains.iter().enumerate() {
            for &e in es {
                covering[e].push(c);
            }
        }
        let mut conflicts = vec![Vec::new(); triples.len()];
        for i in 0..triples.len() {
            for j in i + 1..triples.len() {
                if triples[i].intersection_len(&triples[j]) == 2
                    && !g.contains_edge(&triples[i].intersection(&triples[j]))
                {
                    conflicts[i].push(j);
                    conflicts[j].push(i);
                }
            }
        }
        Problem {
            labels,
            triples,
            contains,
            covering,
            conflicts,
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Status {
    Open,
    Included,
    Excluded,
}

struct BudgetExhausted;

struct Search<'a> {
    p: &'a Problem,
    status: Vec<Status>,
    blocked: Vec<u32>,
    cover: Vec<u32>,
    chosen: Vec<usize>,
    explored: u64,
    budget: u64,
}

/// What the next node should do.
enum Step {
    Solved,
    Dead,
    Branch { edge: usize },
}

impl<'a> Search<'a> {
    fn new(p: &'a Problem, budget: u64) -> Self {
        Search {
            p,
            status: vec![Status::Open; p.triples.len()],
            blocked: vec![0; p.triples.len()],
            cover: vec![0; p.covering.len()],
            chosen: Vec::new(),
            explored: 0,
            budget,
        }
    }

    fn is_available(&self, c: usize) -> bool {
        self.status[c] == Status::Open && self.blocked[c] == 0
    }

    fn available(&self, edge: usize) -> impl Iterator<Item = usize> + '_ {
        self.p.covering[edge]
            .iter()
            .copied()
            .filter(|&c| self.is_available(c))
    }

    /// Fail-first: the uncovered edge with the fewest usable candidates.
    fn step(&self) -> Step {
        let mut best: Option<(usize, usize)> = None;
        for edge in 0..self.cover.len() {
            let have = self.cover[edge] as usize;
            if have >= 2 {
                continue;
            }
            let avail = self.available(edge).count();
            if have + avail < 2 {
                return Step::Dead;
            }
            if best.is_none_or(|(a, _)| avail < a) {
                best = Some((avail, edge));
            }
        }
        match best {
            None => Step::Solved,
            Some((_, edge)) => Step::Branch { edge },
        }
    }

    fn include(&mut self, c: usize) {
        debug_assert!(self.is_available(c));
        self.status[c] = Status::Included;
        self.chosen.push(c);
        for &e in &self.p.contains[c] {
            self.cover[e] += 1;
        }
        for &x in &self.p.conflicts[c] {
            self.blocked[x] += 1;
        }
    }

    fn undo_include(&mut self, c: usize) {
        self.status[c] = Status::Open;
        self.chosen.pop();
        for &e in &self.p.contains[c] {
            self.cover[e] -= 1;
        }
        for &x in &self.p.conflicts[c] {
            self.blocked[x] -= 1;
        }
    }

    /// Depth-first search; on success `chosen` holds the family.
    fn run(&mut self) -> Result<bool, BudgetExhausted> {
        self.explored += 1;
        if self.explored > self.budget {
            return Err(BudgetExhausted);
        }
        let edge = match self.step() {
            Step::Solved => return Ok(true),
            Step::Dead => return Ok(false),
            Step::Branch { edge } => edge,
        };
        let c = self
            .available(edge)
            .next()
            .expect("branch edge has a candidate");
        self.include(c);
        if self.run()? {
            return Ok(true);
        }
        self.undo_include(c);
        self.status[c] = Status::Excluded;
        let found = self.run();
        if !matches!(found, Ok(true)) {
            self.status[c] = Status::Open;
        }
        found
    }
}

struct BranchResult {
    witness: Option<Vec<usize>>,
    explored: u64,
    exhausted: bool,
}

fn witness_hypergraph(p: &Problem, chosen: &[usize]) -> Result<Hypergraph> {
    Hypergraph::new(
        p.labels.iter().copied(),
        chosen.iter().map(|&c| p.triples[c].vertices().to_vec()),
    )
}

fn check_witness(g: &Graph, witness: &Hypergraph) -> Result<()> {
    if !witness.is_k_uniform(3) || ei(witness) != *g.as_hypergraph() {
        return Err(Error::InternalVerificationFailure(format!(
            "decider witness {witness} does not reproduce {g}"
        )));
    }
    Ok(())
}

pub fn decide_3uniform(g: &Graph) -> Result<DecisionOutcome> {
    decide_3uniform_with(g, &DeciderConfig::default())
}

/// Backtracking over useful triples. The root's candidate list for the most
/// constrained edge is split into disjoint branches (include the `i`-th
/// candidate, exclude the earlier ones) that may run in parallel. Each
/// branch reports its first witness; the lexicographically least of those is
/// returned, so the outcome does not depend on scheduling.
pub fn decide_3uniform_with(g: &Graph, config: &DeciderConfig) -> Result<DecisionOutcome> {
    let n = g.vertex_count();
    if n > config.max_vertices {
        return Err(Error::TooLarge {
            vertices: n,
            limit: config.max_vertices,
        });
    }
    let p = Problem::new(g);
    let budget = config.node_budget.unwrap_or(u64::MAX);
    let root = Search::new(&p, budget);
    let useful_count = p.triples.len();

    let edge = match root.step() {
        Step::Solved => {
            let witness = witness_hypergraph(&p, &[])?;
            check_witness(g, &witness)?;
            return Ok(DecisionOutcome {
                verdict: Verdict::Realizable,
                witness: Some(witness),
                explored: 1,
                useful_count,
            });
        }
        Step::Dead => {
            return Ok(DecisionOutcome {
                verdict: Verdict::Unrealizable,
                witness: None,
                explored: 1,
                useful_count,
            })
        }
        Step::Branch { edge } => edge,
    };
    let firsts: Vec<usize> = root.available(edge).collect();
    let branches: Vec<usize> = (0..firsts.len()).collect();

    let results = config.execution.map(&branches, |&i| {
        let mut s = Search::new(&p, budget);
        for &c in &firsts[..i] {
            s.status[c] = Status::Excluded;
        }
        s.include(firsts[i]);
        match s.run() {
            Ok(true) => BranchResult {
                witness: Some(s.chosen.clone()),
                explored: s.explored,
                exhausted: false,
            },
            Ok(false) => BranchResult {
                witness: None,
                explored: s.explored,
                exhausted: false,
            },
            Err(BudgetExhausted) => BranchResult {
                witness: None,
                explored: s.explored,
                exhausted: true,
            },
        }
    });

    let explored = 1 + results.iter().map(|r| r.explored).sum::<u64>();
    if results.iter().any(|r| r.exhausted) || explored > budget {
        return Err(Error::BudgetExhausted {
            budget,
            explored: explored.min(budget),
        });
    }
    let best = results
        .iter()
        .filter_map(|r| r.witness.as_deref())
        .map(|w| witness_hypergraph(&p, w))
        .collect::<Result<Vec<_>>>()?
        .into_iter()
        .min_by(|a, b| a.edges().iter().cmp(b.edges().iter()));

    let outcome = match best {
        Some(witness) => {
            check_witness(g, &witness)?;
            DecisionOutcome {
                verdict: Verdict::Realizable,
                witness: Some(witness),
                explored,
                useful_count,
            }
        }
        None => DecisionOutcome {
            verdict: Verdict::Unrealizable,
            witness: None,
            explored,
            useful_count,
        },
    };
    Ok(outcome)
}

/// Brute-force oracle: tries every family of triples (useful or not) in
/// increasing bitmask order. Limited to six vertices (at most 2^20 families).
pub fn decide_exhaustive(g: &Graph) -> Result<DecisionOutcome> {
    let n = g.vertex_count();
    if n > EXHAUSTIVE_MAX_VERTICES {
        return Err(Error::TooLarge {
            vertices: n,
            limit: EXHAUSTIVE_MAX_VERTICES,
        });
    }
    let labels: Vec<VertexId> = g.vertices().iter().copied().collect();
    let pair_bit = |a: usize, b: usize| 1u32 << (a * n + b);
    let index = |v: VertexId| labels.iter().position(|&x| x == v).expect("vertex");
    let target: u32 = g
        .pairs()
        .map(|(a, b)| pair_bit(index(a), index(b)))
        .fold(0, |acc, bit| acc | bit);

    let triples = combinations(n, 3);
    let masks: Vec<u32> = triples
        .iter()
        .map(|t| t.iter().fold(0u32, |m, &v| m | 1 << v))
        .collect();
    let t = triples.len();
    // Pair generated by two triples, or 0 if they share fewer than two vertices.
    let mut generated = vec![vec![0u32; t]; t];
    for i in 0..t {
        for j in i + 1..t {
            let common = masks[i] & masks[j];
            if common.count_ones() == 2 {
                let a = common.trailing_zeros() as usize;
                let b = 31 - common.leading_zeros() as usize;
                generated[i][j] = pair_bit(a, b);
            }
        }
    }

    let mut explored = 0u64;
    let mut members = Vec::with_capacity(t);
    for family in 0u64..(1u64 << t) {
        explored += 1;
        members.clear();
        members.extend((0..t).filter(|&i| family >> i & 1 == 1));
        let mut produced = 0u32;
        let mut stray = false;
        'pairs: for (x, &i) in members.iter().enumerate() {
            for &j in &members[x + 1..] {
                produced |= generated[i][j];
                if produced & !target != 0 {
                    stray = true;
                    break 'pairs;
                }
            }
        }
        if !stray && produced == target {
            let witness = Hypergraph::new(
                labels.iter().copied(),
                members
                    .iter()
                    .map(|&i| triples[i].iter().map(|&v| labels[v]).collect::<Vec<_>>()),
            )?;
            check_witness(g, &witness)?;
            return Ok(DecisionOutcome {
                verdict: Verdict::Realizable,
                witness: Some(witness),
                explored,
                useful_count: t,
            });
        }
    }
    Ok(DecisionOutcome {
        verdict: Verdict::Unrealizable,
        witness: None,
        explored,
        useful_count: t,
    })
}
