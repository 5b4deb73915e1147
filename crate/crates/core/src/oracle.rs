//! Exact solvers used as reference oracles.
//!
//! Two independent routes are provided for each problem: a memoised three-way
//! branching search and plain subset enumeration. They share nothing but the
//! bitmask encoding of the instance, so agreement between them is a real check.

use std::collections::{BTreeSet, HashMap};

use num_traits::Zero;
use thiserror::Error;

use crate::graph::{Graph, Rational, VertexId, WeightedGraph};
use crate::hitting_set::HittingSet;

/// Hard limit from the `u64` bitmask encoding.
pub const MAX_ORACLE_VERTICES: usize = 64;

/// Caps on the size of instances an oracle accepts and the work it may do.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct OracleBudget {
    pub max_vertices: usize,
    /// Search nodes for branching; subsets visited for enumeration.
    pub max_branch_nodes: u64,
}

impl Default for OracleBudget {
    fn default() -> Self {
        OracleBudget { max_vertices: 40, max_branch_nodes: 20_000_000 }
    }
}

impl OracleBudget {
    pub fn with_max_vertices(max_vertices: usize) -> Self {
        OracleBudget { max_vertices, ..Self::default() }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("instance with {vertices} vertices exceeds the oracle limit of {limit}")]
    TooManyVertices { vertices: usize, limit: usize },
    #[error("oracle exceeded its budget of {0} nodes")]
    BudgetExceeded(u64),
}

/// Which family of 3-vertex paths must be hit.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Target {
    InducedP3,
    P3Subgraph,
}

struct Indexed {
    ids: Vec<VertexId>,
    adj: Vec<u64>,
    cost: Vec<Rational>,
}

impl Indexed {
    fn new(g: &Graph, cost: impl Fn(VertexId) -> Rational, budget: &OracleBudget) -> Result<Self, OracleError> {
        let n = g.vertex_count();
        let limit = budget.max_vertices.min(MAX_ORACLE_VERTICES);
        if n > limit {
            return Err(OracleError::TooManyVertices { vertices: n, limit });
        }
        let ids: Vec<VertexId> = g.vertices().collect();
        let index: HashMap<VertexId, usize> = ids.iter().enumerate().map(|(i, &v)| (v, i)).collect();
        let adj = ids
            .iter()
            .map(|&v| g.neighbors(v).iter().fold(0u64, |m, w| m | 1 << index[w]))
            .collect();
        let cost = ids.iter().map(|&v| cost(v)).collect();
        Ok(Indexed { ids, adj, cost })
    }

    fn full(&self) -> u64 {
        if self.ids.len() == 64 {
            u64::MAX
        } else {
            (1u64 << self.ids.len()) - 1
        }
    }

    fn find_path(&self, alive: u64, target: Target) -> Option<[usize; 3]> {
        let mut rest = alive;
        while rest != 0 {
            let b = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            let mut nb = self.adj[b] & alive;
            match target {
                Target::P3Subgraph => {
                    if nb.count_ones() >= 2 {
                        let a = nb.trailing_zeros() as usize;
                        nb &= nb - 1;
                        return Some([a, b, nb.trailing_zeros() as usize]);
                    }
                }
                Target::InducedP3 => {
                    while nb != 0 {
                        let a = nb.trailing_zeros() as usize;
                        nb &= nb - 1;
                        let far = nb & !self.adj[a];
                        if far != 0 {
                            return Some([a, b, far.trailing_zeros() as usize]);
                        }
                    }
                }
            }
        }
        None
    }

    fn mask_to_set(&self, mask: u64) -> BTreeSet<VertexId> {
        (0..self.ids.len()).filter(|i| mask >> i & 1 == 1).map(|i| self.ids[i]).collect()
    }

    fn mask_cost(&self, mask: u64) -> Rational {
        (0..self.ids.len())
            .filter(|i| mask >> i & 1 == 1)
            .fold(Rational::zero(), |acc, i| acc + &self.cost[i])
    }

    /// Drops members of a feasible deletion set whose removal keeps it
    /// feasible, so the result is inclusionwise minimal. The cost does not
    /// rise, and from an optimum only zero-cost members are dropped.
    fn prune(&self, mut chosen: u64, target: Target) -> u64 {
        let full = self.full();
        for v in (0..self.ids.len()).rev() {
            let bit = 1u64 << v;
            if chosen & bit != 0 && self.find_path(full & !(chosen & !bit), target).is_none() {
                chosen &= !bit;
            }
        }
        chosen
    }

    /// Feasibility of every deletion set, indexed by mask. Requires `n <= 24`.
    fn feasibility_table(&self, target: Target) -> Vec<bool> {
        let full = self.full();
        (0..=full).map(|removed| self.find_path(full & !removed, target).is_none()).collect()
    }
}

struct Brancher<'a> {
    inst: &'a Indexed,
    target: Target,
    memo: HashMap<u64, (Rational, Option<usize>)>,
    nodes: u64,
    limit: u64,
}

impl Brancher<'_> {
    fn solve(&mut self, alive: u64) -> Result<Rational, OracleError> {
        if let Some((value, _)) = self.memo.get(&alive) {
            return Ok(value.clone());
        }
        self.nodes += 1;
        if self.nodes > self.limit {
            return Err(OracleError::BudgetExceeded(self.limit));
        }
        let entry = match self.inst.find_path(alive, self.target) {
            None => (Rational::zero(), None),
            Some(path) => {
                let mut order = path;
                order.sort_by(|&x, &y| self.inst.cost[x].cmp(&self.inst.cost[y]).then(x.cmp(&y)));
                let mut best: Option<(Rational, usize)> = None;
                for v in order {
                    let own = &self.inst.cost[v];
                    // remaining optimum is nonnegative, so this branch cannot win
                    if best.as_ref().is_some_and(|(b, _)| own >= b) {
                        continue;
                    }
                    let value = own + self.solve(alive & !(1u64 << v))?;
                    if best.as_ref().is_none_or(|(b, _)| value < *b) {
                        best = Some((value, v));
                    }
                }
                let (value, v) = best.expect("at least one branch explored");
                (value, Some(v))
            }
        };
        let value = entry.0.clone();
        self.memo.insert(alive, entry);
        Ok(value)
    }

    fn reconstruct(&self, mut alive: u64) -> u64 {
        let mut chosen = 0u64;
        while let Some((_, Some(v))) = self.memo.get(&alive) {
            chosen |= 1 << v;
            alive &= !(1u64 << v);
        }
        chosen
    }
}

fn branch(wg: &WeightedGraph, budget: &OracleBudget, target: Target) -> Result<(HittingSet, Rational), OracleError> {
    let inst = Indexed::new(wg.graph(), |v| wg.cost(v).clone(), budget)?;
    let mut brancher = Brancher {
        inst: &inst,
        target,
        memo: HashMap::new(),
        nodes: 0,
        limit: budget.max_branch_nodes,
    };
    let full = inst.full();
    let value = brancher.solve(full)?;
    let chosen = inst.prune(brancher.reconstruct(full), target);
    Ok((HittingSet::new(inst.mask_to_set(chosen)), value))
}

fn check_enumerable(n: usize, budget: &OracleBudget) -> Result<(), OracleError> {
    let limit = budget.max_vertices.min(24);
    if n > limit {
        return Err(OracleError::TooManyVertices { vertices: n, limit });
    }
    if (1u64 << n) > budget.max_branch_nodes {
        return Err(OracleError::BudgetExceeded(budget.max_branch_nodes));
    }
    Ok(())
}

fn enumerate_min(wg: &WeightedGraph, budget: &OracleBudget, target: Target) -> Result<(HittingSet, Rational), OracleError> {
    check_enumerable(wg.graph().vertex_count(), budget)?;
    let inst = Indexed::new(wg.graph(), |v| wg.cost(v).clone(), budget)?;
    let feasible = inst.feasibility_table(target);
    let (mask, value) = feasible
        .iter()
        .enumerate()
        .filter(|(_, &ok)| ok)
        .map(|(mask, _)| (mask as u64, inst.mask_cost(mask as u64)))
        .min_by(|(ma, ca), (mb, cb)| ca.cmp(cb).then(ma.cmp(mb)))
        .expect("deleting every vertex is feasible");
    Ok((HittingSet::new(inst.mask_to_set(inst.prune(mask, target))), value))
}

/// Minimum-cost set hitting every induced P3, by memoised branching on a P3.
/// The returned set is inclusionwise minimal.
pub fn exact_cluster_vd(wg: &WeightedGraph, budget: &OracleBudget) -> Result<(HittingSet, Rational), OracleError> {
    branch(wg, budget, Target::InducedP3)
}

/// Minimum-cost set meeting every 3-vertex path subgraph, by memoised branching.
pub fn exact_p3_subgraph_hitting(wg: &WeightedGraph, budget: &OracleBudget) -> Result<(HittingSet, Rational), OracleError> {
    branch(wg, budget, Target::P3Subgraph)
}

/// Same optimum as [`exact_cluster_vd`], by scanning all `2^n` vertex subsets.
pub fn brute_force_cluster_vd(wg: &WeightedGraph, budget: &OracleBudget) -> Result<(HittingSet, Rational), OracleError> {
    enumerate_min(wg, budget, Target::InducedP3)
}

/// Same optimum as [`exact_p3_subgraph_hitting`], by scanning all subsets.
pub fn brute_force_p3_subgraph_hitting(
    wg: &WeightedGraph,
    budget: &OracleBudget,
) -> Result<(HittingSet, Rational), OracleError> {
    enumerate_min(wg, budget, Target::P3Subgraph)
}

/// Every inclusionwise minimal hitting set of `g`, in ascending mask order.
pub fn enumerate_minimal_hitting_sets(g: &Graph, budget: &OracleBudget) -> Result<Vec<BTreeSet<VertexId>>, OracleError> {
    let n = g.vertex_count();
    check_enumerable(n, budget)?;
    let inst = Indexed::new(g, |_| Rational::zero(), budget)?;
    let feasible = inst.feasibility_table(Target::InducedP3);
    let out = feasible
        .iter()
        .enumerate()
        .filter(|&(mask, &ok)| {
            ok && (0..n).all(|v| mask >> v & 1 == 0 || !feasible[mask ^ (1 << v)])
        })
        .map(|(mask, _)| inst.mask_to_set(mask as u64))
        .collect();
    Ok(out)
}

#[cfg(test)]
mod tests {
    use std::collections::BTreeMap;

    use super::*;
    use crate::graph::int;

    fn v(i: u32) -> VertexId {
        VertexId(i)
    }

    fn weighted(n: u32, edges: &[(u32, u32)], costs: &[i64]) -> WeightedGraph {
        let g = Graph::from_index_edges(n, edges).unwrap();
        let costs: BTreeMap<_, _> = costs.iter().enumerate().map(|(i, &c)| (v(i as u32), int(c))).collect();
        WeightedGraph::new(g, costs).unwrap()
    }

    fn set(ids: &[u32]) -> BTreeSet<VertexId> {
        ids.iter().map(|&i| v(i)).collect()
    }

    const C5: &[(u32, u32)] = &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)];

    #[test]
    fn cluster_graph_costs_nothing() {
        let wg = weighted(5, &[(0, 1), (2, 3), (3, 4), (2, 4)], &[1; 5]);
        let (x, c) = exact_cluster_vd(&wg, &OracleBudget::default()).unwrap();
        assert!(x.is_empty());
        assert_eq!(c, int(0));
    }

    #[test]
    fn p3_takes_cheap_middle() {
        let wg = weighted(3, &[(0, 1), (1, 2)], &[5, 1, 5]);
        let (x, c) = exact_cluster_vd(&wg, &OracleBudget::default()).unwrap();
        assert_eq!(x.vertices(), &set(&[1]));
        assert_eq!(c, int(1));
    }

    #[test]
    fn zero_cost_vertices_are_not_padded_in() {
        // triangle 0,1,3 plus pendant 2 on 0, with vertex 1 free
        let wg = weighted(4, &[(0, 1), (0, 2), (0, 3), (1, 3)], &[5, 0, 1, 5]);
        let b = OracleBudget::default();
        for (x, c) in [exact_cluster_vd(&wg, &b).unwrap(), brute_force_cluster_vd(&wg, &b).unwrap()] {
            assert_eq!(c, int(1));
            assert_eq!(x.vertices(), &set(&[2]));
        }
    }

    #[test]
    fn c5_unit_costs_two() {
        let wg = weighted(5, C5, &[1; 5]);
        let b = OracleBudget::default();
        assert_eq!(exact_cluster_vd(&wg, &b).unwrap().1, int(2));
        assert_eq!(brute_force_cluster_vd(&wg, &b).unwrap().1, int(2));
    }

    #[test]
    fn subgraph_variant_examples() {
        let b = OracleBudget::default();
        let star = weighted(4, &[(0, 1), (0, 2), (0, 3)], &[1; 4]);
        let (x, c) = exact_p3_subgraph_hitting(&star, &b).unwrap();
        assert_eq!((x.vertices().clone(), c), (set(&[0]), int(1)));
        let tri = weighted(3, &[(0, 1), (1, 2), (0, 2)], &[1; 3]);
        assert_eq!(exact_p3_subgraph_hitting(&tri, &b).unwrap().1, int(1));
        assert_eq!(brute_force_p3_subgraph_hitting(&tri, &b).unwrap().1, int(1));
        let matching = weighted(4, &[(0, 1), (2, 3)], &[1; 4]);
        assert_eq!(exact_p3_subgraph_hitting(&matching, &b).unwrap().1, int(0));
    }

    #[test]
    fn minimal_hitting_sets_examples() {
        let b = OracleBudget::default();
        let p3 = Graph::from_index_edges(3, &[(0, 1), (1, 2)]).unwrap();
        assert_eq!(
            enumerate_minimal_hitting_sets(&p3, &b).unwrap(),
            vec![set(&[0]), set(&[1]), set(&[2])]
        );
        let k3 = Graph::from_index_edges(3, &[(0, 1), (1, 2), (0, 2)]).unwrap();
        assert_eq!(enumerate_minimal_hitting_sets(&k3, &b).unwrap(), vec![set(&[])]);
        let p4 = Graph::from_index_edges(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        // both middles, and the two ends together (leaving the edge 1-2)
        assert_eq!(
            enumerate_minimal_hitting_sets(&p4, &b).unwrap(),
            vec![set(&[1]), set(&[2]), set(&[0, 3])]
        );
    }

    #[test]
    fn budget_is_enforced() {
        let wg = weighted(5, C5, &[1; 5]);
        let tiny = OracleBudget { max_vertices: 4, max_branch_nodes: 1000 };
        assert!(matches!(exact_cluster_vd(&wg, &tiny), Err(OracleError::TooManyVertices { .. })));
        let few_nodes = OracleBudget { max_vertices: 10, max_branch_nodes: 2 };
        assert_eq!(exact_cluster_vd(&wg, &few_nodes), Err(OracleError::BudgetExceeded(2)));
        assert!(enumerate_minimal_hitting_sets(wg.graph(), &few_nodes).is_err());
    }
}
