//! Weighting on the second neighbourhood of a maximum-degree vertex `v0`.
//!
//! `H` is induced by `v0`, its neighbourhood and every vertex at distance two.
//! The neighbourhood splits into components `A_1..A_k` of `G[N(v0)]`; `B_i` is
//! the set of distance-two vertices seeing `A_i` (pairwise disjoint in a
//! C4-free graph). Neighbourhood vertices carry unit weight except in the bull
//! case. The weights on `v0` and on the `B_i` depend on the shape of the
//! components, and `v0` always gets weight at least one, so a minimal hitting
//! set (which must leave out some vertex of `{v0} ∪ N(v0)`) misses at least one
//! unit of weight.
//!
//! With several components the weight on `v0` has to sit in an interval whose
//! endpoints involve the optima of the pieces `A_i ∪ B_i`. Those optima are
//! replaced by lower bounds that follow from the shape of each component, and
//! the smallest admissible weight is taken. Feasibility of the interval is
//! checked at runtime.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use num_traits::One;

use crate::graph::{int, Graph, Rational, VertexId};
use crate::structure::{
    are_true_twins, clique_number, distinguishes, find_induced_c4, find_k5, find_true_twins,
    is_clique, is_cluster_graph, is_diamond_free, neighborhood_decomposition,
};

use super::{
    distinguishing_set_weights, ratio_two, DistinguishingInstance, LocalWeighting, Provenance,
    WeightingError,
};

/// Shape of one neighbourhood component when there are several.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ComponentKind {
    Clique,
    /// Not a clique, no triangle.
    TriangleFree,
    /// Largest clique is a triangle and no single vertex hits every induced P3.
    TriangleNoSingleHitter,
    /// Largest clique is a triangle and one vertex hits every induced P3.
    TriangleSingleHitter,
}

impl fmt::Display for ComponentKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            ComponentKind::Clique => "clique",
            ComponentKind::TriangleFree => "triangle-free",
            ComponentKind::TriangleNoSingleHitter => "triangle-no-single-hitter",
            ComponentKind::TriangleSingleHitter => "triangle-single-hitter",
        };
        f.write_str(s)
    }
}

/// Which branch of the construction fired.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum SecondNeighborhoodCase {
    /// Connected neighbourhood that is a clique.
    SingleClique,
    /// Connected triangle-free neighbourhood on at least four vertices.
    SingleTriangleFree,
    /// Neighbourhood is an induced P3.
    SinglePath,
    /// Largest clique a triangle, no single hitter, at least six vertices.
    SingleNoSingleHitter,
    /// Largest clique a triangle and one vertex hits every induced P3.
    SingleSingleHitter,
    /// Neighbourhood is a bull.
    SingleBull,
    /// Several components, with the shape of each.
    Multi(Vec<ComponentKind>),
}

impl SecondNeighborhoodCase {
    /// True for the cases where every neighbourhood component is a clique.
    pub fn is_clique_case(&self) -> bool {
        match self {
            SecondNeighborhoodCase::SingleClique => true,
            SecondNeighborhoodCase::Multi(kinds) => kinds.iter().all(|k| *k == ComponentKind::Clique),
            _ => false,
        }
    }
}

impl fmt::Display for SecondNeighborhoodCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SecondNeighborhoodCase::SingleClique => f.write_str("single-clique"),
            SecondNeighborhoodCase::SingleTriangleFree => f.write_str("single-triangle-free"),
            SecondNeighborhoodCase::SinglePath => f.write_str("single-path"),
            SecondNeighborhoodCase::SingleNoSingleHitter => f.write_str("single-no-single-hitter"),
            SecondNeighborhoodCase::SingleSingleHitter => f.write_str("single-single-hitter"),
            SecondNeighborhoodCase::SingleBull => f.write_str("single-bull"),
            SecondNeighborhoodCase::Multi(kinds) => {
                f.write_str("multi[")?;
                for (i, k) in kinds.iter().enumerate() {
                    if i > 0 {
                        f.write_str(",")?;
                    }
                    write!(f, "{k}")?;
                }
                f.write_str("]")
            }
        }
    }
}

/// Second-neighbourhood weighting at `v0`. The graph must be twin-free,
/// C4-free, K5-free and not a cluster graph, and `v0` must have maximum degree.
pub fn second_neighborhood_weighting(g: &Graph, v0: VertexId) -> Result<LocalWeighting, WeightingError> {
    check_preconditions(g, v0)?;
    if let Some((u, w)) = find_true_twins(g) {
        return Err(WeightingError::Precondition(format!("vertices {u} and {w} are true twins")));
    }
    if find_induced_c4(g).is_some() {
        return Err(WeightingError::Precondition("graph has an induced 4-cycle".into()));
    }
    if find_k5(g).is_some() {
        return Err(WeightingError::Precondition("graph has a 5-clique".into()));
    }
    build(g, v0, false)
}

/// Diamond-free variant: the graph may contain 5-cliques but no diamond.
pub fn second_neighborhood_weighting_diamond_free(g: &Graph, v0: VertexId) -> Result<LocalWeighting, WeightingError> {
    check_preconditions(g, v0)?;
    if find_true_twins(g).is_some() || find_induced_c4(g).is_some() || !is_diamond_free(g) {
        return Err(WeightingError::Precondition(
            "graph must be twin-free, C4-free and diamond-free".into(),
        ));
    }
    build(g, v0, true)
}

fn check_preconditions(g: &Graph, v0: VertexId) -> Result<(), WeightingError> {
    if !g.contains(v0) {
        return Err(WeightingError::Precondition(format!("vertex {v0} is not in the graph")));
    }
    if g.degree(v0) != g.max_degree() {
        return Err(WeightingError::Precondition(format!("vertex {v0} does not have maximum degree")));
    }
    if is_cluster_graph(g) {
        return Err(WeightingError::Precondition("graph is a cluster graph".into()));
    }
    Ok(())
}

fn invariant(msg: impl Into<String>) -> WeightingError {
    WeightingError::Invariant(msg.into())
}

/// Builds the weighting assuming the preconditions hold. In `clique_only` mode
/// any non-clique neighbourhood component is an invariant failure.
pub(super) fn build(g: &Graph, v0: VertexId, clique_only: bool) -> Result<LocalWeighting, WeightingError> {
    let dec = neighborhood_decomposition(g, v0).map_err(|e| WeightingError::Precondition(e.to_string()))?;
    if dec.is_empty() {
        return Err(invariant(format!("vertex {v0} has no neighbours in a non-cluster graph")));
    }
    if !dec.outside_pairwise_disjoint() {
        return Err(invariant("distance-two sets of different components overlap; graph has a C4"));
    }

    let mut weights: BTreeMap<VertexId, Rational> =
        dec.all_vertices().into_iter().map(|v| (v, int(0))).collect();
    for comp in &dec.components {
        for &a in comp {
            weights.insert(a, Rational::one());
        }
    }

    let case = if dec.len() == 1 {
        single_component(g, v0, &dec.components[0], &dec.outside[0], clique_only, &mut weights)?
    } else {
        multi_component(g, v0, &dec.components, &dec.outside, clique_only, &mut weights)?
    };
    LocalWeighting::new(weights, ratio_two(), Provenance::SecondNeighborhood(case))
}

fn set_weight(weights: &mut BTreeMap<VertexId, Rational>, v: VertexId, w: i64) {
    weights.insert(v, int(w));
}

/// Shape of a connected, non-clique neighbourhood component.
enum Shape {
    TriangleFree,
    Triangle { single_hitter: Option<VertexId> },
}

fn shape(g: &Graph, comp: &BTreeSet<VertexId>) -> Result<Shape, WeightingError> {
    let sub = g.induced_subgraph(comp);
    match clique_number(&sub) {
        2 => Ok(Shape::TriangleFree),
        3 => Ok(Shape::Triangle { single_hitter: single_hitter(&sub) }),
        w => Err(invariant(format!(
            "neighbourhood component with clique number {w}; the graph has a 5-clique"
        ))),
    }
}

/// Least vertex whose deletion leaves a cluster graph.
fn single_hitter(sub: &Graph) -> Option<VertexId> {
    sub.vertices().find(|&v| is_cluster_graph(&sub.without_vertex(v)))
}

/// One distinguisher from `outside` per true-twin pair of `G[comp]`, the least
/// one for each pair. Pairs are vertex-disjoint and no vertex splits two pairs.
fn twin_pair_distinguishers(
    g: &Graph,
    comp: &BTreeSet<VertexId>,
    outside: &BTreeSet<VertexId>,
) -> Result<BTreeSet<VertexId>, WeightingError> {
    let sub = g.induced_subgraph(comp);
    let pairs: Vec<(VertexId, VertexId)> = sub
        .edges()
        .filter(|&(u, v)| are_true_twins(&sub, u, v))
        .collect();
    if pairs.is_empty() {
        return Err(invariant("component with a triangle has no pair of true twins"));
    }
    let touched: BTreeSet<VertexId> = pairs.iter().flat_map(|&(u, v)| [u, v]).collect();
    if touched.len() != 2 * pairs.len() {
        return Err(invariant("true-twin pairs of a neighbourhood component overlap"));
    }
    let mut chosen = BTreeSet::new();
    for &(u, v) in &pairs {
        let w = outside
            .iter()
            .copied()
            .find(|&w| distinguishes(g, w, u, v))
            .ok_or_else(|| invariant(format!("twin pair {u}-{v} has no distinguisher at distance two")))?;
        if !chosen.insert(w) {
            return Err(invariant(format!("vertex {w} distinguishes two twin pairs; the graph has a C4")));
        }
    }
    Ok(chosen)
}

/// A triangle with two pendant vertices attached to distinct triangle vertices.
/// Returns the two pendant vertices in ascending order.
fn bull_legs(sub: &Graph) -> Option<(VertexId, VertexId)> {
    if sub.vertex_count() != 5 || sub.edge_count() != 5 {
        return None;
    }
    let legs: Vec<VertexId> = sub.vertices().filter(|&v| sub.degree(v) == 1).collect();
    if legs.len() != 2 {
        return None;
    }
    let feet: BTreeSet<VertexId> = legs.iter().map(|&l| *sub.neighbors(l).first().unwrap()).collect();
    let body: BTreeSet<VertexId> = sub.vertices().filter(|v| !legs.contains(v)).collect();
    let ok = feet.len() == 2 && feet.is_subset(&body) && is_clique(sub, &body);
    ok.then(|| (legs[0], legs[1]))
}

fn single_component(
    g: &Graph,
    v0: VertexId,
    comp: &BTreeSet<VertexId>,
    outside: &BTreeSet<VertexId>,
    clique_only: bool,
    weights: &mut BTreeMap<VertexId, Rational>,
) -> Result<SecondNeighborhoodCase, WeightingError> {
    let size = comp.len() as i64;
    if is_clique(g, comp) {
        set_weight(weights, v0, 1);
        let mut clique = comp.clone();
        clique.insert(v0);
        let d = distinguishing_set_weights(g, &DistinguishingInstance::new(clique, outside.clone()))?;
        for (w, x) in d {
            set_weight(weights, w, x as i64);
        }
        return Ok(SecondNeighborhoodCase::SingleClique);
    }
    if clique_only {
        return Err(invariant("non-clique neighbourhood component in diamond-free mode"));
    }
    match shape(g, comp)? {
        Shape::TriangleFree if size >= 4 => {
            set_weight(weights, v0, size - 3);
            Ok(SecondNeighborhoodCase::SingleTriangleFree)
        }
        Shape::TriangleFree => {
            // a connected triangle-free non-clique on three vertices is an induced P3
            let sub = g.induced_subgraph(comp);
            let middle = sub
                .vertices()
                .find(|&v| sub.degree(v) == 2)
                .ok_or_else(|| invariant("three-vertex neighbourhood is not a path"))?;
            let v2 = outside
                .iter()
                .copied()
                .find(|&w| g.adjacent(w, middle))
                .ok_or_else(|| invariant(format!("{v0} and {middle} are true twins")))?;
            set_weight(weights, v0, 1);
            set_weight(weights, v2, 1);
            Ok(SecondNeighborhoodCase::SinglePath)
        }
        Shape::Triangle { single_hitter: None } if size >= 6 => {
            set_weight(weights, v0, size - 5);
            Ok(SecondNeighborhoodCase::SingleNoSingleHitter)
        }
        Shape::Triangle { single_hitter: Some(_) } => {
            let b_prime = twin_pair_distinguishers(g, comp, outside)?;
            let w0 = size - b_prime.len() as i64 - 3;
            if w0 < 1 {
                return Err(invariant(format!(
                    "weight {w0} on {v0} with {} neighbours and {} twin distinguishers; \
                     {v0} should have a true twin",
                    size,
                    b_prime.len()
                )));
            }
            set_weight(weights, v0, w0);
            for w in b_prime {
                set_weight(weights, w, 1);
            }
            Ok(SecondNeighborhoodCase::SingleSingleHitter)
        }
        Shape::Triangle { single_hitter: None } => {
            let sub = g.induced_subgraph(comp);
            let (leg, _) = bull_legs(&sub)
                .ok_or_else(|| invariant("small neighbourhood without a single hitter is not a bull"))?;
            set_weight(weights, v0, 1);
            set_weight(weights, leg, 2);
            Ok(SecondNeighborhoodCase::SingleBull)
        }
    }
}

struct ComponentPlan {
    kind: ComponentKind,
    size: i64,
    outside_weight: i64,
    /// Lower bound on the optimum of `A_i ∪ B_i`.
    lb: i64,
    /// Lower bound on the optimum of `{v0} ∪ A_i ∪ B_i` avoiding `v0`.
    lb_avoiding: i64,
}

fn multi_component(
    g: &Graph,
    v0: VertexId,
    comps: &[BTreeSet<VertexId>],
    outsides: &[BTreeSet<VertexId>],
    clique_only: bool,
    weights: &mut BTreeMap<VertexId, Rational>,
) -> Result<SecondNeighborhoodCase, WeightingError> {
    let mut plans = Vec::with_capacity(comps.len());
    for (comp, outside) in comps.iter().zip(outsides) {
        let size = comp.len() as i64;
        let plan = if is_clique(g, comp) {
            let d = distinguishing_set_weights(g, &DistinguishingInstance::new(comp.clone(), outside.clone()))?;
            let mut total = 0;
            for (w, x) in d {
                set_weight(weights, w, x as i64);
                total += x as i64;
            }
            ComponentPlan { kind: ComponentKind::Clique, size, outside_weight: total, lb: size - 1, lb_avoiding: size - 1 }
        } else if clique_only {
            return Err(invariant("non-clique neighbourhood component in diamond-free mode"));
        } else {
            match shape(g, comp)? {
                Shape::TriangleFree => ComponentPlan {
                    kind: ComponentKind::TriangleFree,
                    size,
                    outside_weight: 0,
                    lb: 1,
                    lb_avoiding: size - 2,
                },
                Shape::Triangle { single_hitter: None } => ComponentPlan {
                    kind: ComponentKind::TriangleNoSingleHitter,
                    size,
                    outside_weight: 0,
                    lb: 2,
                    lb_avoiding: size - 3,
                },
                Shape::Triangle { single_hitter: Some(_) } => {
                    let b_prime = twin_pair_distinguishers(g, comp, outside)?;
                    let count = b_prime.len() as i64;
                    for w in b_prime {
                        set_weight(weights, w, 1);
                    }
                    ComponentPlan {
                        kind: ComponentKind::TriangleSingleHitter,
                        size,
                        outside_weight: count,
                        lb: count + 1,
                        lb_avoiding: size - 2,
                    }
                }
            }
        };
        if plan.outside_weight > plan.lb || plan.outside_weight > plan.size - 1 {
            return Err(invariant(format!(
                "component of kind {} puts weight {} on its distance-two set",
                plan.kind, plan.outside_weight
            )));
        }
        plans.push(plan);
    }

    let lower: i64 = plans.iter().map(|p| p.size + p.outside_weight - 2 * p.lb).sum::<i64>() - 1;
    let w0 = lower.max(1);
    let slack_total: i64 = plans.iter().map(|p| p.size - p.outside_weight).sum();
    let upper = plans
        .iter()
        .map(|p| {
            let others = slack_total - (p.size - p.outside_weight);
            others + 2 * p.lb_avoiding - p.size - p.outside_weight + 1
        })
        .min()
        .expect("at least two components");
    if w0 > upper {
        return Err(invariant(format!(
            "no admissible weight for {v0}: need at least {w0}, at most {upper}"
        )));
    }
    set_weight(weights, v0, w0);
    Ok(SecondNeighborhoodCase::Multi(plans.iter().map(|p| p.kind).collect()))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(i: u32) -> VertexId {
        VertexId(i)
    }

    fn weights_of(w: &LocalWeighting) -> Vec<(u32, i64)> {
        w.weights()
            .iter()
            .map(|(k, x)| (k.0, x.to_integer().try_into().unwrap()))
            .collect()
    }

    #[test]
    fn path_on_four_vertices() {
        let g = Graph::from_index_edges(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        let w = second_neighborhood_weighting(&g, v(1)).unwrap();
        assert_eq!(weights_of(&w), vec![(0, 1), (1, 1), (2, 1), (3, 0)]);
        assert_eq!(
            w.provenance(),
            &Provenance::SecondNeighborhood(SecondNeighborhoodCase::Multi(vec![
                ComponentKind::Clique,
                ComponentKind::Clique
            ]))
        );
    }

    #[test]
    fn bull_neighbourhood() {
        // v0 = 0; bull: triangle 1,2,3, leg 4 on 1, leg 5 on 2
        let mut edges = vec![(1, 2), (1, 3), (2, 3), (1, 4), (2, 5)];
        edges.extend((1..=5).map(|i| (0, i)));
        let g = Graph::from_index_edges(6, &edges).unwrap();
        let w = second_neighborhood_weighting(&g, v(0)).unwrap();
        assert_eq!(w.provenance(), &Provenance::SecondNeighborhood(SecondNeighborhoodCase::SingleBull));
        assert_eq!(w.weight(v(0)), int(1));
        assert_eq!(w.weight(v(4)), int(2));
        assert_eq!(w.weight(v(5)), int(1));
        assert_eq!(w.total(), int(7));
    }

    #[test]
    fn induced_path_neighbourhood() {
        // v0 = 0 sees the path 1-2-3 and 4 sees the middle 2. The middle then
        // outranks v0 in degree, so only the builder itself can be exercised.
        let g = Graph::from_index_edges(5, &[(0, 1), (0, 2), (0, 3), (1, 2), (2, 3), (2, 4)]).unwrap();
        assert!(matches!(
            second_neighborhood_weighting(&g, v(0)),
            Err(WeightingError::Precondition(_))
        ));
        let w = build(&g, v(0), false).unwrap();
        assert_eq!(w.provenance(), &Provenance::SecondNeighborhood(SecondNeighborhoodCase::SinglePath));
        assert_eq!(weights_of(&w), vec![(0, 1), (1, 1), (2, 1), (3, 1), (4, 1)]);
        assert_eq!(w.total(), int(5));
    }

    #[test]
    fn rejects_non_max_degree() {
        let g = Graph::from_index_edges(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        assert!(matches!(
            second_neighborhood_weighting(&g, v(0)),
            Err(WeightingError::Precondition(_))
        ));
    }
}
