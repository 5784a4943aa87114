//! Closed forms for EI iterates and EI numbers of uniform hypercycles,
//! hyperpaths and complete uniform hypergraphs, and checkers comparing them
//! against direct computation.

use std::fmt;

use crate::ei::{ei, ei_iterate, ei_number};
use crate::error::{Error, Result};
use crate::exec::Execution;
use crate::generators::{generate, Family, FamilySpec};
use crate::hypergraph::{Hypergraph, VertexId};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum LawId {
    /// `EI^k` of a hypercycle is the union of hypercycles of uniformity
    /// `2..=d-k`.
    HypercycleIterate,
    /// A hypercycle with `n >= 2d-1` has EI number `d-1`.
    HypercycleEiNumber,
    /// Hyperpath EI number: `d-1` if `n >= 2d-1`, else `n-d+1`.
    HyperpathEiNumber,
    /// What is left of a hyperpath one step before its EI number.
    HyperpathResidue,
    /// `EI^k` of `K_n^d` is the union of `K_n^j` for `t_k <= j <= d-k`.
    CompleteIterate,
    /// `K_n^d` has EI number `d-1`.
    CompleteEiNumber,
    /// The 3-uniform hypercycle on `n >= 5` vertices has the cycle `C_n` as EI.
    CycleFromHypercycle,
    /// Identity between EI hypergraphs of neighborhood hypergraphs of a
    /// digraph; checked by `digraph_ops::check_neighborhood_identity`.
    NeighborhoodIdentity,
}

impl LawId {
    pub const SWEEPABLE: [LawId; 7] = [
        LawId::HypercycleIterate,
        LawId::HypercycleEiNumber,
        LawId::HyperpathEiNumber,
        LawId::HyperpathResidue,
        LawId::CompleteIterate,
        LawId::CompleteEiNumber,
        LawId::CycleFromHypercycle,
    ];

    pub fn name(self) -> &'static str {
        match self {
            LawId::HypercycleIterate => "hypercycle-iterate",
            LawId::HypercycleEiNumber => "hypercycle-ei-number",
            LawId::HyperpathEiNumber => "hyperpath-ei-number",
            LawId::HyperpathResidue => "hyperpath-residue",
            LawId::CompleteIterate => "complete-iterate",
            LawId::CompleteEiNumber => "complete-ei-number",
            LawId::CycleFromHypercycle => "cycle-from-hypercycle",
            LawId::NeighborhoodIdentity => "neighborhood-identity",
        }
    }
}

impl fmt::Display for LawId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl std::str::FromStr for LawId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        LawId::SWEEPABLE
            .into_iter()
            .chain([LawId::NeighborhoodIdentity])
            .find(|l| l.name() == s)
            .ok_or_else(|| Error::InvalidSpec(format!("unknown law {s:?}")))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct LawParams {
    pub n: usize,
    pub d: usize,
    pub k: Option<usize>,
}

impl LawParams {
    pub fn new(n: usize, d: usize) -> Self {
        LawParams { n, d, k: None }
    }

    pub fn with_k(n: usize, d: usize, k: usize) -> Self {
        LawParams { n, d, k: Some(k) }
    }
}

impl fmt::Display for LawParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "n={} d={}", self.n, self.d)?;
        if let Some(k) = self.k {
            write!(f, " k={k}")?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LawValue {
    Hypergraph(Hypergraph),
    Number(usize),
}

impl fmt::Display for LawValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LawValue::Hypergraph(h) => write!(f, "{} edges", h.edge_count()),
            LawValue::Number(x) => write!(f, "{x}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LawReport {
    pub law: LawId,
    pub params: LawParams,
    pub predicted: LawValue,
    pub computed: LawValue,
    pub agrees: bool,
}

impl LawReport {
    pub fn new(law: LawId, params: LawParams, predicted: LawValue, computed: LawValue) -> Self {
        let agrees = predicted == computed;
        LawReport {
            law,
            params,
            predicted,
            computed,
            agrees,
        }
    }
}

impl fmt::Display for LawReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} {} predicted={} computed={} agrees={}",
            self.law, self.params, self.predicted, self.computed, self.agrees
        )
    }
}

fn out_of_range(what: impl Into<String>) -> Error {
    Error::OutOfTheoremRange(what.into())
}

fn union_of(
    family: Family,
    n: usize,
    uniformities: impl Iterator<Item = usize>,
) -> Result<Hypergraph> {
    let mut acc = Hypergraph::on_range(n as u32, Vec::<Vec<VertexId>>::new())?;
    for j in uniformities {
        acc = acc.union(&generate(FamilySpec { family, n, d: j })?)?;
    }
    Ok(acc)
}

/// Smallest surviving edge size in `EI^k(K_n^d)`: `max{2, 2^k (d - n) + n}`.
pub fn complete_lower_uniformity(n: usize, d: usize, k: usize) -> usize {
    let scaled = (d as i128 - n as i128) * (1i128 << k.min(100)) + n as i128;
    scaled.max(2) as usize
}

/// Closed form for `EI^k` of a hypercycle or complete uniform hypergraph.
pub fn predicted_ei_iter(family: Family, n: usize, d: usize, k: usize) -> Result<Hypergraph> {
    match family {
        Family::Hypercycle => {
            if d < 3 || n < 2 * d - 1 || k < 1 || k > d - 2 {
                return Err(out_of_range(format!(
                    "hypercycle iterate needs d >= 3, n >= 2d-1, 1 <= k <= d-2 (n={n} d={d} k={k})"
                )));
            }
            union_of(Family::Hypercycle, n, 2..=d - k)
        }
        Family::CompleteUniform => {
            if d < 3 || n < d + 1 || k < 1 || k > d - 2 {
                return Err(out_of_range(format!(
                    "complete iterate needs n-1 >= d >= 3, 1 <= k <= d-2 (n={n} d={d} k={k})"
                )));
            }
            let low = complete_lower_uniformity(n, d, k);
            union_of(Family::CompleteUniform, n, low..=d - k)
        }
        other => Err(out_of_range(format!("no iterate closed form for {other}"))),
    }
}

pub fn predicted_ei_number(family: Family, n: usize, d: usize) -> Result<usize> {
    match family {
        Family::Hypercycle if d >= 2 && n >= 2 * d - 1 => Ok(d - 1),
        Family::Hyperpath if d >= 2 && n >= d => Ok(if n >= 2 * d - 1 { d - 1 } else { n - d + 1 }),
        Family::CompleteUniform if d >= 2 && n > d => Ok(d - 1),
        _ => Err(out_of_range(format!(
            "no EI number closed form for {family} n={n} d={d}"
        ))),
    }
}

/// Hyperpath `EI^{d-2}` for `n >= 2d-1` (a path on `v_{d-1}..v_{n-d+2}` plus
/// `2d-4` isolated vertices), or `EI^{n-d}` for `d <= n < 2d-1` (the single
/// edge `{v_{n-d+1}, ..., v_d}`). Returns the iteration count and the result.
pub fn predicted_hyperpath_residue(n: usize, d: usize) -> Result<(usize, Hypergraph)> {
    if d < 2 || n < d {
        return Err(out_of_range(format!(
            "hyperpath needs 2 <= d <= n (n={n} d={d})"
        )));
    }
    let v = |i: usize| VertexId::new(i as u32).expect("positive");
    if n >= 2 * d - 1 {
        let edges = (d - 1..n - d + 2).map(|i| vec![v(i), v(i + 1)]);
        Ok((d - 2, Hypergraph::on_range(n as u32, edges)?))
    } else {
        let edge: Vec<VertexId> = (n - d + 1..=d).map(v).collect();
        Ok((n - d, Hypergraph::on_range(n as u32, [edge])?))
    }
}

pub fn verify_law(law: LawId, params: LawParams) -> Result<LawReport> {
    let LawParams { n, d, k } = params;
    let need_k = || k.ok_or_else(|| Error::InvalidSpec(format!("{law} needs k")));
    let hg = LawValue::Hypergraph;
    let num = LawValue::Number;
    let (predicted, computed) = match law {
        LawId::HypercycleIterate => {
            let k = need_k()?;
            let predicted = predicted_ei_iter(Family::Hypercycle, n, d, k)?;
            (
                hg(predicted),
                hg(ei_iterate(&generate(FamilySpec::hypercycle(n, d))?, k)),
            )
        }
        LawId::CompleteIterate => {
            let k = need_k()?;
            let predicted = predicted_ei_iter(Family::CompleteUniform, n, d, k)?;
            (
                hg(predicted),
                hg(ei_iterate(&generate(FamilySpec::complete(n, d))?, k)),
            )
        }
        LawId::HypercycleEiNumber => (
            num(predicted_ei_number(Family::Hypercycle, n, d)?),
            num(ei_number(&generate(FamilySpec::hypercycle(n, d))?)),
        ),
        LawId::HyperpathEiNumber => (
            num(predicted_ei_number(Family::Hyperpath, n, d)?),
            num(ei_number(&generate(FamilySpec::hyperpath(n, d))?)),
        ),
        LawId::CompleteEiNumber => (
            num(predicted_ei_number(Family::CompleteUniform, n, d)?),
            num(ei_number(&generate(FamilySpec::complete(n, d))?)),
        ),
        LawId::HyperpathResidue => {
            let (steps, predicted) = predicted_hyperpath_residue(n, d)?;
            (
                hg(predicted),
                hg(ei_iterate(&generate(FamilySpec::hyperpath(n, d))?, steps)),
            )
        }
        LawId::CycleFromHypercycle => {
            if n < 5 || d != 3 {
                return Err(out_of_range(format!(
                    "cycle law needs n >= 5, d = 3 (n={n} d={d})"
                )));
            }
            (
                hg(generate(FamilySpec::cycle(n))?),
                hg(ei(&generate(FamilySpec::hypercycle(n, 3))?)),
            )
        }
        LawId::NeighborhoodIdentity => {
            return Err(Error::InvalidSpec(
                "the neighborhood identity is checked on a digraph, not on parameters".into(),
            ))
        }
    };
    Ok(LawReport::new(law, params, predicted, computed))
}

/// Every parameter tuple inside the law's range with `n <= max_n` and
/// `d <= max_d`.
pub fn in_range_params(law: LawId, max_n: usize, max_d: usize) -> Vec<LawParams> {
    let mut out = Vec::new();
    match law {
        LawId::HypercycleIterate => {
            for d in 3..=max_d {
                for n in 2 * d - 1..=max_n {
                    out.extend((1..=d - 2).map(|k| LawParams::with_k(n, d, k)));
                }
            }
        }
        LawId::HypercycleEiNumber => {
            for d in 2..=max_d {
                out.extend((2 * d - 1..=max_n).map(|n| LawParams::new(n, d)));
            }
        }
        LawId::HyperpathEiNumber | LawId::HyperpathResidue => {
            for d in 2..=max_d {
                out.extend((d..=max_n).map(|n| LawParams::new(n, d)));
            }
        }
        LawId::CompleteIterate => {
            for d in 3..=max_d {
                for n in d + 1..=max_n {
                    out.extend((1..=d - 2).map(|k| LawParams::with_k(n, d, k)));
                }
            }
        }
        LawId::CompleteEiNumber => {
            for d in 2..=max_d {
                out.extend((d + 1..=max_n).map(|n| LawParams::new(n, d)));
            }
        }
        LawId::CycleFromHypercycle => {
            out.extend((5..=max_n).map(|n| LawParams::new(n, 3)));
        }
        LawId::NeighborhoodIdentity => {}
    }
    out
}

/// Verifies `law` on every in-range tuple; reports come back in tuple order.
pub fn sweep(law: LawId, max_n: usize, max_d: usize, exec: Execution) -> Result<Vec<LawReport>> {
    let params = in_range_params(law, max_n, max_d);
    exec.map(&params, |&p| verify_law(law, p))
        .into_iter()
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn hypercycle_10_4_1() {
        let predicted = predicted_ei_iter(Family::Hypercycle, 10, 4, 1).unwrap();
        let c3 = generate(FamilySpec::hypercycle(10, 3)).unwrap();
        let c2 = generate(FamilySpec::hypercycle(10, 2)).unwrap();
        assert_eq!(predicted, c3.union(&c2).unwrap());
        assert_eq!(predicted.edge_count(), 20);
    }

    #[test]
    fn complete_7_4_1_against_bruteforce() {
        assert_eq!(complete_lower_uniformity(7, 4, 1), 2);
        let predicted = predicted_ei_iter(Family::CompleteUniform, 7, 4, 1).unwrap();
        let k3 = generate(FamilySpec::complete(7, 3)).unwrap();
        let k2 = generate(FamilySpec::complete(7, 2)).unwrap();
        assert_eq!(predicted, k3.union(&k2).unwrap());
        assert_eq!(
            predicted,
            ei(&generate(FamilySpec::complete(7, 4)).unwrap())
        );
    }

    #[test]
    fn small_hypercycle_gives_cycle() {
        let predicted = predicted_ei_iter(Family::Hypercycle, 5, 3, 1).unwrap();
        assert_eq!(predicted, generate(FamilySpec::cycle(5)).unwrap());
    }

    #[test]
    fn ei_number_examples() {
        assert_eq!(predicted_ei_number(Family::Hyperpath, 10, 4).unwrap(), 3);
        assert_eq!(predicted_ei_number(Family::Hyperpath, 7, 5).unwrap(), 3);
        assert_eq!(
            predicted_ei_number(Family::CompleteUniform, 9, 5).unwrap(),
            4
        );
    }

    #[test]
    fn verify_examples() {
        let r = verify_law(LawId::HypercycleIterate, LawParams::with_k(10, 4, 2)).unwrap();
        assert!(r.agrees);
        assert_eq!(
            r.computed,
            LawValue::Hypergraph(generate(FamilySpec::hypercycle(10, 2)).unwrap())
        );
        let r = verify_law(LawId::HyperpathEiNumber, LawParams::new(7, 5)).unwrap();
        assert!(r.agrees);
        assert_eq!(r.predicted, LawValue::Number(3));
        let r = verify_law(LawId::CompleteIterate, LawParams::with_k(5, 4, 1)).unwrap();
        assert!(r.agrees);
        assert_eq!(
            r.predicted,
            LawValue::Hypergraph(generate(FamilySpec::complete(5, 3)).unwrap())
        );
    }

    #[test]
    fn out_of_range_is_rejected() {
        assert!(matches!(
            predicted_ei_iter(Family::Hypercycle, 6, 4, 1),
            Err(Error::OutOfTheoremRange(_))
        ));
        assert!(matches!(
            predicted_ei_iter(Family::CompleteUniform, 4, 4, 1),
            Err(Error::OutOfTheoremRange(_))
        ));
        assert!(matches!(
            predicted_ei_number(Family::Hypercycle, 4, 3),
            Err(Error::OutOfTheoremRange(_))
        ));
        assert!(matches!(
            verify_law(LawId::CycleFromHypercycle, LawParams::new(4, 3)),
            Err(Error::OutOfTheoremRange(_))
        ));
        assert!(verify_law(LawId::HypercycleIterate, LawParams::new(10, 4)).is_err());
    }

    #[test]
    fn hyperpath_residue_shapes() {
        let (steps, residue) = predicted_hyperpath_residue(7, 5).unwrap();
        assert_eq!(steps, 2);
        assert_eq!(
            residue,
            Hypergraph::from_labels(&[1, 2, 3, 4, 5, 6, 7], &[&[3, 4, 5]]).unwrap()
        );
        let (steps, residue) = predicted_hyperpath_residue(10, 4).unwrap();
        assert_eq!(steps, 2);
        // P_{n-2d+4} = P_6 on v_3..v_8, with 2d-4 = 4 isolated vertices
        assert_eq!(residue.edge_count(), 5);
        assert_eq!(residue.isolated_vertices().len(), 4);
    }

    #[test]
    fn sweeps_agree_at_desk_scale() {
        for law in LawId::SWEEPABLE {
            let max_n = if matches!(law, LawId::CompleteIterate | LawId::CompleteEiNumber) {
                9
            } else {
                12
            };
            let reports = sweep(law, max_n, 5, Execution::Sequential).unwrap();
            assert!(!reports.is_empty(), "{law}");
            for r in reports {
                assert!(r.agrees, "{r}");
            }
        }
    }

    #[test]
    fn law_names_round_trip() {
        for law in LawId::SWEEPABLE {
            assert_eq!(law.name().parse::<LawId>().unwrap(), law);
        }
    }
}
