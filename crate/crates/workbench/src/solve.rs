//! Algorithm dispatch and the JSON form of a solution.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use cvd_core::oracle::{exact_cluster_vd, exact_p3_subgraph_hitting};
use cvd_core::{
    cluster_vd_apx, hitting_p3_subgraphs_apx_traced, naive_3apx_traced, verify_feasible, verify_minimal,
    verify_p3_subgraph_feasible, verify_p3_subgraph_minimal, HittingSet, LocalRatioTrace, OracleBudget, Rational,
    TraceStep, VertexId, WeightedGraph,
};
use serde::{Deserialize, Serialize};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Algo {
    /// Local ratio with the 9/4 weightings.
    Lr94,
    /// Star local ratio for the P3-subgraph variant.
    P3Sub,
    /// Unit weights on induced P3s.
    Naive3,
    /// Exact branching oracle.
    Exact,
}

impl Algo {
    pub const ALL: [Algo; 4] = [Algo::Lr94, Algo::P3Sub, Algo::Naive3, Algo::Exact];

    pub fn name(self) -> &'static str {
        match self {
            Algo::Lr94 => "lr94",
            Algo::P3Sub => "p3sub",
            Algo::Naive3 => "naive3",
            Algo::Exact => "exact",
        }
    }

    /// True when the algorithm targets 3-vertex path subgraphs rather than
    /// induced ones.
    pub fn hits_subgraphs(self) -> bool {
        self == Algo::P3Sub
    }
}

impl fmt::Display for Algo {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Algo {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        Algo::ALL
            .into_iter()
            .find(|a| a.name() == s)
            .ok_or_else(|| format!("unknown algorithm `{s}` (expected lr94, p3sub, naive3 or exact)"))
    }
}

#[derive(Clone, Debug)]
pub struct Outcome {
    pub solution: HittingSet,
    pub trace: Option<LocalRatioTrace>,
}

pub fn run_algo(algo: Algo, wg: &WeightedGraph, budget: &OracleBudget) -> anyhow::Result<Outcome> {
    let (solution, trace) = match algo {
        Algo::Lr94 => {
            let (x, t) = cluster_vd_apx(wg)?;
            (x, Some(t))
        }
        Algo::P3Sub => {
            let (x, t) = hitting_p3_subgraphs_apx_traced(wg);
            (x, Some(t))
        }
        Algo::Naive3 => {
            let (x, t) = naive_3apx_traced(wg);
            (x, Some(t))
        }
        Algo::Exact => (exact_cluster_vd(wg, budget)?.0, None),
    };
    Ok(Outcome { solution, trace })
}

/// Optimum for the problem `algo` solves.
pub fn oracle_cost(algo: Algo, wg: &WeightedGraph, budget: &OracleBudget) -> anyhow::Result<Rational> {
    Ok(if algo.hits_subgraphs() {
        exact_p3_subgraph_hitting(wg, budget)?.1
    } else {
        exact_cluster_vd(wg, budget)?.1
    })
}

/// (feasible, minimal) for the problem `algo` solves.
pub fn check(algo: Algo, wg: &WeightedGraph, x: &HittingSet) -> anyhow::Result<(bool, bool)> {
    let g = wg.graph();
    Ok(if algo.hits_subgraphs() {
        let f = verify_p3_subgraph_feasible(g, x)?;
        (f, f && verify_p3_subgraph_minimal(g, x)?)
    } else {
        let f = verify_feasible(g, x)?;
        (f, f && verify_minimal(g, x)?)
    })
}

/// Always `p/q`, so `3` is written `3/1`.
pub fn rational_string(r: &Rational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum TraceEntry {
    ZeroCostRemoval {
        vertex: u32,
    },
    TwinMerge {
        kept: u32,
        removed: u32,
    },
    WeightSubtraction {
        rule: String,
        alpha: String,
        lambda: String,
        weights: BTreeMap<u32, String>,
        zeroed: Vec<u32>,
    },
}

impl From<&TraceStep> for TraceEntry {
    fn from(step: &TraceStep) -> Self {
        match step {
            TraceStep::ZeroCostRemoval(v) => TraceEntry::ZeroCostRemoval { vertex: v.0 },
            TraceStep::TwinMerge { kept, removed } => TraceEntry::TwinMerge { kept: kept.0, removed: removed.0 },
            TraceStep::WeightSubtraction { weighting, lambda, zeroed } => TraceEntry::WeightSubtraction {
                rule: weighting.provenance().label(),
                alpha: rational_string(weighting.alpha()),
                lambda: rational_string(lambda),
                weights: weighting.weights().iter().map(|(v, w)| (v.0, rational_string(w))).collect(),
                zeroed: zeroed.iter().map(|v| v.0).collect(),
            },
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SolutionJson {
    pub vertices: Vec<u32>,
    pub cost: String,
    pub feasible: bool,
    pub minimal: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub trace: Option<Vec<TraceEntry>>,
}

impl SolutionJson {
    pub fn new(algo: Algo, wg: &WeightedGraph, outcome: &Outcome, with_trace: bool) -> anyhow::Result<Self> {
        let (feasible, minimal) = check(algo, wg, &outcome.solution)?;
        Ok(SolutionJson {
            vertices: outcome.solution.vertices().iter().map(|v| v.0).collect(),
            cost: rational_string(&outcome.solution.cost(wg)),
            feasible,
            minimal,
            trace: match (&outcome.trace, with_trace) {
                (Some(t), true) => Some(t.steps().iter().map(TraceEntry::from).collect()),
                _ => None,
            },
        })
    }

    pub fn hitting_set(&self) -> HittingSet {
        self.vertices.iter().map(|&v| VertexId(v)).collect()
    }
}
