//! Structural queries: induced paths, cluster test, twins, small patterns and
//! the neighbourhood decomposition around a vertex.
//!
//! Every search is deterministic and returns the least witness in the order
//! documented on the function.

use std::collections::{BTreeSet, VecDeque};
use std::ops::Bound::{Excluded, Unbounded};

use crate::graph::{Graph, GraphError, VertexId};

/// Three vertices `a - middle - b` with `a` and `b` nonadjacent.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct InducedP3 {
    pub endpoint_a: VertexId,
    pub middle: VertexId,
    pub endpoint_b: VertexId,
}

impl InducedP3 {
    pub fn vertices(&self) -> [VertexId; 3] {
        [self.endpoint_a, self.middle, self.endpoint_b]
    }
}

/// Induced 4-cycle stored in cyclic order: edges `v[0]v[1]`, `v[1]v[2]`,
/// `v[2]v[3]`, `v[3]v[0]`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct InducedC4(pub [VertexId; 4]);

impl InducedC4 {
    pub fn vertices(&self) -> BTreeSet<VertexId> {
        self.0.iter().copied().collect()
    }

    /// True iff the four vertices induce exactly the cycle in `g`.
    pub fn is_induced_in(&self, g: &Graph) -> bool {
        let v = self.0;
        let distinct = self.vertices().len() == 4;
        distinct
            && v.iter().all(|&x| g.contains(x))
            && (0..4).all(|i| g.adjacent(v[i], v[(i + 1) % 4]))
            && !g.adjacent(v[0], v[2])
            && !g.adjacent(v[1], v[3])
    }
}

/// Least induced P3 ordered by `(middle, endpoint_a, endpoint_b)` with
/// `endpoint_a < endpoint_b`.
pub fn find_induced_p3(g: &Graph) -> Option<InducedP3> {
    for middle in g.vertices() {
        let nbrs = g.neighbors(middle);
        for &a in nbrs {
            for &b in nbrs.range((Excluded(a), Unbounded)) {
                if !g.adjacent(a, b) {
                    return Some(InducedP3 { endpoint_a: a, middle, endpoint_b: b });
                }
            }
        }
    }
    None
}

/// Connected components, each sorted, listed by least vertex.
pub fn connected_components(g: &Graph) -> Vec<BTreeSet<VertexId>> {
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    for start in g.vertices() {
        if !seen.insert(start) {
            continue;
        }
        let mut comp = BTreeSet::from([start]);
        let mut queue = VecDeque::from([start]);
        while let Some(v) = queue.pop_front() {
            for &w in g.neighbors(v) {
                if seen.insert(w) {
                    comp.insert(w);
                    queue.push_back(w);
                }
            }
        }
        out.push(comp);
    }
    out
}

/// True iff every connected component is complete.
pub fn is_cluster_graph(g: &Graph) -> bool {
    connected_components(g)
        .iter()
        .all(|comp| comp.iter().all(|&v| g.degree(v) + 1 == comp.len()))
}

/// True iff `set` is pairwise adjacent in `g`.
pub fn is_clique(g: &Graph, set: &BTreeSet<VertexId>) -> bool {
    set.iter()
        .all(|&u| set.range((Excluded(u), Unbounded)).all(|&v| g.adjacent(u, v)))
}

/// Adjacent `u`, `v` with `N(u) \ {v} = N(v) \ {u}`.
pub fn are_true_twins(g: &Graph, u: VertexId, v: VertexId) -> bool {
    if u == v || !g.adjacent(u, v) || g.degree(u) != g.degree(v) {
        return false;
    }
    let nu = g.neighbors(u);
    let nv = g.neighbors(v);
    nu.iter().filter(|&&w| w != v).all(|w| nv.contains(w))
}

/// Least pair `u < u'` of true twins.
pub fn find_true_twins(g: &Graph) -> Option<(VertexId, VertexId)> {
    for u in g.vertices() {
        for &v in g.neighbors(u).range((Excluded(u), Unbounded)) {
            if are_true_twins(g, u, v) {
                return Some((u, v));
            }
        }
    }
    None
}

/// Vertices adjacent to exactly one endpoint of the edge `uv`.
pub fn distinguishers(g: &Graph, u: VertexId, v: VertexId) -> Result<BTreeSet<VertexId>, GraphError> {
    g.check_vertex(u)?;
    g.check_vertex(v)?;
    if !g.adjacent(u, v) {
        return Err(GraphError::NotAdjacent(u, v));
    }
    Ok(g.neighbors(u)
        .symmetric_difference(g.neighbors(v))
        .filter(|&&w| w != u && w != v)
        .copied()
        .collect())
}

/// True iff `w` is adjacent to exactly one of `u`, `v`.
pub fn distinguishes(g: &Graph, w: VertexId, u: VertexId, v: VertexId) -> bool {
    w != u && w != v && g.adjacent(w, u) != g.adjacent(w, v)
}

/// Components `A_i` of `G[N(v0)]` and, for each, the set `B_i` of vertices at
/// distance two from `v0` that see `A_i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NeighborhoodDecomposition {
    pub v0: VertexId,
    pub components: Vec<BTreeSet<VertexId>>,
    pub outside: Vec<BTreeSet<VertexId>>,
}

impl NeighborhoodDecomposition {
    pub fn len(&self) -> usize {
        self.components.len()
    }

    pub fn is_empty(&self) -> bool {
        self.components.is_empty()
    }

    /// `{v0} ∪ N(v0) ∪ ⋃ B_i`.
    pub fn all_vertices(&self) -> BTreeSet<VertexId> {
        let mut all = BTreeSet::from([self.v0]);
        for set in self.components.iter().chain(&self.outside) {
            all.extend(set.iter().copied());
        }
        all
    }

    pub fn outside_pairwise_disjoint(&self) -> bool {
        let total: usize = self.outside.iter().map(BTreeSet::len).sum();
        let union: BTreeSet<_> = self.outside.iter().flatten().collect();
        total == union.len()
    }
}

pub fn neighborhood_decomposition(g: &Graph, v0: VertexId) -> Result<NeighborhoodDecomposition, GraphError> {
    g.check_vertex(v0)?;
    let nbhd = g.neighbors(v0);
    let components = connected_components(&g.induced_subgraph(nbhd));
    let outside = components
        .iter()
        .map(|comp| {
            comp.iter()
                .flat_map(|&a| g.neighbors(a).iter().copied())
                .filter(|&w| w != v0 && !nbhd.contains(&w))
                .collect()
        })
        .collect();
    Ok(NeighborhoodDecomposition { v0, components, outside })
}

/// All induced 4-cycles, each reported once as `[a, b, c, d]` where `a` is the
/// least vertex of the cycle, `b < d` are its cycle neighbours and `c` is
/// opposite. Ordered lexicographically by `(a, b, d, c)`.
pub fn induced_c4s(g: &Graph) -> Vec<InducedC4> {
    let mut out = Vec::new();
    visit_induced_c4s(g, |c| {
        out.push(c);
        false
    });
    out
}

/// The first induced 4-cycle in the order of [`induced_c4s`].
pub fn find_induced_c4(g: &Graph) -> Option<InducedC4> {
    let mut found = None;
    visit_induced_c4s(g, |c| {
        found = Some(c);
        true
    });
    found
}

fn visit_induced_c4s(g: &Graph, mut visit: impl FnMut(InducedC4) -> bool) {
    for a in g.vertices() {
        let na = g.neighbors(a);
        let higher: Vec<VertexId> = na.range((Excluded(a), Unbounded)).copied().collect();
        for (i, &b) in higher.iter().enumerate() {
            for &d in &higher[i + 1..] {
                if g.adjacent(b, d) {
                    continue;
                }
                for &c in g.neighbors(b).range((Excluded(a), Unbounded)) {
                    if g.adjacent(c, d) && !na.contains(&c) && visit(InducedC4([a, b, c, d])) {
                        return;
                    }
                }
            }
        }
    }
}

/// All 5-cliques as sorted vertex lists, in lexicographic order.
pub fn k5s(g: &Graph) -> Vec<[VertexId; 5]> {
    let mut out = Vec::new();
    visit_cliques_of_size(g, 5, &mut |c| {
        out.push([c[0], c[1], c[2], c[3], c[4]]);
        false
    });
    out
}

/// Lexicographically least 5-clique.
pub fn find_k5(g: &Graph) -> Option<[VertexId; 5]> {
    let mut found = None;
    visit_cliques_of_size(g, 5, &mut |c| {
        found = Some([c[0], c[1], c[2], c[3], c[4]]);
        true
    });
    found
}

/// True iff `g` contains a clique on `size` vertices.
pub fn has_clique_of_size(g: &Graph, size: usize) -> bool {
    if size == 0 {
        return true;
    }
    let mut found = false;
    visit_cliques_of_size(g, size, &mut |_| {
        found = true;
        true
    });
    found
}

fn visit_cliques_of_size(g: &Graph, size: usize, visit: &mut dyn FnMut(&[VertexId]) -> bool) {
    fn extend(
        g: &Graph,
        size: usize,
        current: &mut Vec<VertexId>,
        candidates: &[VertexId],
        visit: &mut dyn FnMut(&[VertexId]) -> bool,
    ) -> bool {
        if current.len() == size {
            return visit(current);
        }
        if current.len() + candidates.len() < size {
            return false;
        }
        for (i, &v) in candidates.iter().enumerate() {
            let next: Vec<VertexId> = candidates[i + 1..]
                .iter()
                .copied()
                .filter(|&w| g.adjacent(v, w))
                .collect();
            current.push(v);
            let stop = extend(g, size, current, &next, visit);
            current.pop();
            if stop {
                return true;
            }
        }
        false
    }
    let all: Vec<VertexId> = g.vertices().collect();
    extend(g, size, &mut Vec::with_capacity(size), &all, visit);
}

/// Size of a largest clique.
pub fn clique_number(g: &Graph) -> usize {
    let mut size = 0;
    while has_clique_of_size(g, size + 1) {
        size += 1;
    }
    size
}

/// True iff no four vertices induce `K4` minus an edge. Checked edge by edge:
/// a diamond is an edge `uv` with two nonadjacent common neighbours.
pub fn is_diamond_free(g: &Graph) -> bool {
    g.edges().all(|(u, v)| {
        let common: Vec<VertexId> = g.neighbors(u).intersection(g.neighbors(v)).copied().collect();
        common
            .iter()
            .enumerate()
            .all(|(i, &x)| common[i + 1..].iter().all(|&y| g.adjacent(x, y)))
    })
}

/// True iff the open neighbourhood of every vertex induces a cluster graph.
pub fn neighborhoods_are_clusters(g: &Graph) -> bool {
    g.vertices()
        .all(|v| is_cluster_graph(&g.induced_subgraph(g.neighbors(v))))
}

/// True iff `G - removed` has an induced P3 containing `u`. `u` itself must be
/// present and not in `removed`.
pub fn has_induced_p3_through(g: &Graph, removed: &BTreeSet<VertexId>, u: VertexId) -> bool {
    let alive = |w: &&VertexId| !removed.contains(*w);
    let nbrs: Vec<VertexId> = g.neighbors(u).iter().filter(alive).copied().collect();
    // u in the middle
    for (i, &a) in nbrs.iter().enumerate() {
        if nbrs[i + 1..].iter().any(|&b| !g.adjacent(a, b)) {
            return true;
        }
    }
    // u at an end
    nbrs.iter().any(|&w| {
        g.neighbors(w)
            .iter()
            .filter(alive)
            .any(|&z| z != u && !g.adjacent(u, z))
    })
}

/// True iff `G - removed` has a (not necessarily induced) 3-vertex path through `u`.
pub fn has_p3_subgraph_through(g: &Graph, removed: &BTreeSet<VertexId>, u: VertexId) -> bool {
    let alive: Vec<VertexId> = g.neighbors(u).iter().filter(|w| !removed.contains(w)).copied().collect();
    alive.len() >= 2
        || alive.iter().any(|&w| {
            g.neighbors(w).iter().any(|z| *z != u && !removed.contains(z))
        })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(i: u32) -> VertexId {
        VertexId(i)
    }

    fn set(ids: &[u32]) -> BTreeSet<VertexId> {
        ids.iter().map(|&i| VertexId(i)).collect()
    }

    fn complete(n: u32) -> Graph {
        let edges: Vec<_> = (0..n).flat_map(|a| (a + 1..n).map(move |b| (a, b))).collect();
        Graph::from_index_edges(n, &edges).unwrap()
    }

    fn cycle(n: u32) -> Graph {
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Graph::from_index_edges(n, &edges).unwrap()
    }

    #[test]
    fn p3_on_path_and_triangle() {
        let path = Graph::from_index_edges(3, &[(0, 1), (1, 2)]).unwrap();
        assert_eq!(
            find_induced_p3(&path),
            Some(InducedP3 { endpoint_a: v(0), middle: v(1), endpoint_b: v(2) })
        );
        assert_eq!(find_induced_p3(&complete(3)), None);
    }

    #[test]
    fn p3_on_c4_is_least_triple() {
        // 1-2-3-4-1
        let g = Graph::from_edges(
            (1..=4).map(VertexId),
            [(1, 2), (2, 3), (3, 4), (4, 1)].map(|(a, b)| (v(a), v(b))),
        )
        .unwrap();
        assert_eq!(
            find_induced_p3(&g),
            Some(InducedP3 { endpoint_a: v(2), middle: v(1), endpoint_b: v(4) })
        );
    }

    #[test]
    fn cluster_graph_examples() {
        assert!(is_cluster_graph(&Graph::new()));
        // K3 + K1 + K5 on 0..9
        let mut edges = vec![(0, 1), (0, 2), (1, 2)];
        for a in 4..9 {
            for b in a + 1..9 {
                edges.push((a, b));
            }
        }
        let g = Graph::from_index_edges(9, &edges).unwrap();
        assert!(is_cluster_graph(&g));
        let p3 = Graph::from_index_edges(3, &[(0, 1), (1, 2)]).unwrap();
        assert!(!is_cluster_graph(&p3));
    }

    #[test]
    fn twins_examples() {
        assert_eq!(find_true_twins(&complete(2)), Some((v(0), v(1))));
        let p3 = Graph::from_index_edges(3, &[(0, 1), (1, 2)]).unwrap();
        assert_eq!(find_true_twins(&p3), None);
        assert_eq!(find_true_twins(&complete(4)), Some((v(0), v(1))));
    }

    #[test]
    fn distinguisher_examples() {
        let p3 = Graph::from_index_edges(3, &[(0, 1), (1, 2)]).unwrap();
        assert_eq!(distinguishers(&p3, v(0), v(1)).unwrap(), set(&[2]));
        assert!(distinguishers(&complete(3), v(0), v(1)).unwrap().is_empty());
        // paw: triangle x=0,y=1,z=2 with pendant p=3 on x
        let paw = Graph::from_index_edges(4, &[(0, 1), (0, 2), (1, 2), (0, 3)]).unwrap();
        assert_eq!(distinguishers(&paw, v(0), v(1)).unwrap(), set(&[3]));
        assert_eq!(
            distinguishers(&p3, v(0), v(2)),
            Err(GraphError::NotAdjacent(v(0), v(2)))
        );
    }

    #[test]
    fn decomposition_examples() {
        // P4 a-b-c-d as 0-1-2-3, v0 = b
        let p4 = Graph::from_index_edges(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        let d = neighborhood_decomposition(&p4, v(1)).unwrap();
        assert_eq!(d.components, vec![set(&[0]), set(&[2])]);
        assert_eq!(d.outside, vec![set(&[]), set(&[3])]);

        let star = Graph::from_index_edges(4, &[(0, 1), (0, 2), (0, 3)]).unwrap();
        let d = neighborhood_decomposition(&star, v(0)).unwrap();
        assert_eq!(d.components, vec![set(&[1]), set(&[2]), set(&[3])]);
        assert!(d.outside.iter().all(BTreeSet::is_empty));

        let d = neighborhood_decomposition(&complete(4), v(2)).unwrap();
        assert_eq!(d.components, vec![set(&[0, 1, 3])]);
        assert_eq!(d.outside, vec![set(&[])]);
    }

    #[test]
    fn c4_examples() {
        assert_eq!(find_induced_c4(&cycle(4)), Some(InducedC4([v(0), v(1), v(2), v(3)])));
        assert_eq!(find_induced_c4(&complete(4)), None);
        assert_eq!(find_induced_c4(&cycle(5)), None);
        // two C4 sharing an edge: 0-1-2-3-0 and 0-1-4-5-0
        let g = Graph::from_index_edges(6, &[(0, 1), (1, 2), (2, 3), (3, 0), (1, 4), (4, 5), (5, 0)])
            .unwrap();
        let all = induced_c4s(&g);
        assert_eq!(all.len(), 2);
        assert!(all.iter().all(|c| c.is_induced_in(&g)));
    }

    #[test]
    fn k5_examples() {
        assert_eq!(find_k5(&complete(5)), Some([v(0), v(1), v(2), v(3), v(4)]));
        assert_eq!(find_k5(&complete(4)), None);
        assert_eq!(find_k5(&complete(6)), Some([v(0), v(1), v(2), v(3), v(4)]));
        assert_eq!(k5s(&complete(6)).len(), 6);
        assert_eq!(clique_number(&complete(6)), 6);
        assert_eq!(clique_number(&cycle(5)), 2);
    }

    #[test]
    fn diamond_examples() {
        let diamond = Graph::from_index_edges(4, &[(0, 1), (0, 2), (1, 2), (1, 3), (2, 3)]).unwrap();
        assert!(!is_diamond_free(&diamond));
        assert!(!neighborhoods_are_clusters(&diamond));
        assert!(is_diamond_free(&cycle(6)));
        assert!(is_diamond_free(&complete(5)));
        assert!(neighborhoods_are_clusters(&complete(5)));
    }

    #[test]
    fn p3_through_vertex() {
        let p3 = Graph::from_index_edges(3, &[(0, 1), (1, 2)]).unwrap();
        assert!(has_induced_p3_through(&p3, &set(&[]), v(0)));
        assert!(has_induced_p3_through(&p3, &set(&[]), v(1)));
        assert!(!has_induced_p3_through(&p3, &set(&[2]), v(0)));
        assert!(has_p3_subgraph_through(&complete(3), &set(&[]), v(0)));
        assert!(!has_induced_p3_through(&complete(3), &set(&[]), v(0)));
    }
}
