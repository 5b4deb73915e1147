//! Seeded random instance generators. Vertex ids are always 1..n.

use std::fmt;
use std::ops::RangeInclusive;
use std::str::FromStr;

use cvd_core::{int, Graph, VertexId, WeightedGraph};
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

pub const DEFAULT_SEED: u64 = 0x5eed;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GenError {
    #[error("invalid parameter: {0}")]
    InvalidParams(String),
    #[error("cannot parse model `{0}`; expected gnp:N:P, planted:N:K:NOISE, vc-pendant:<model>, bull or k5")]
    UnknownModel(String),
}

#[derive(Clone, Debug, PartialEq)]
pub enum Model {
    Gnp { n: u32, p: f64 },
    /// `n` vertices dealt round-robin into `k` cliques, then every vertex pair
    /// flipped with probability `noise`.
    PlantedClusters { n: u32, k: u32, noise: f64 },
    /// The inner graph with one pendant vertex attached to each vertex.
    VcPendant(Box<Model>),
    /// A vertex adjacent to all five vertices of a bull.
    BullNeighborhood,
    /// `K5` with pendants on four of its vertices.
    K5Gadget,
}

impl fmt::Display for Model {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Model::Gnp { n, p } => write!(f, "gnp:{n}:{p}"),
            Model::PlantedClusters { n, k, noise } => write!(f, "planted:{n}:{k}:{noise}"),
            Model::VcPendant(inner) => write!(f, "vc-pendant:{inner}"),
            Model::BullNeighborhood => write!(f, "bull"),
            Model::K5Gadget => write!(f, "k5"),
        }
    }
}

impl FromStr for Model {
    type Err = GenError;

    fn from_str(s: &str) -> Result<Self, GenError> {
        let bad = || GenError::UnknownModel(s.to_string());
        let parts: Vec<&str> = s.split(':').collect();
        let model = match parts.as_slice() {
            ["gnp", n, p] => Model::Gnp { n: n.parse().map_err(|_| bad())?, p: p.parse().map_err(|_| bad())? },
            ["planted", n, k, noise] => Model::PlantedClusters {
                n: n.parse().map_err(|_| bad())?,
                k: k.parse().map_err(|_| bad())?,
                noise: noise.parse().map_err(|_| bad())?,
            },
            ["vc-pendant", ..] => Model::VcPendant(Box::new(s["vc-pendant:".len().min(s.len())..].parse()?)),
            ["bull"] => Model::BullNeighborhood,
            ["k5"] => Model::K5Gadget,
            _ => return Err(bad()),
        };
        Ok(model)
    }
}

fn probability(name: &str, p: f64) -> Result<(), GenError> {
    if (0.0..=1.0).contains(&p) {
        Ok(())
    } else {
        Err(GenError::InvalidParams(format!("{name} = {p} is not in [0, 1]")))
    }
}

/// Edges on vertices `1..=n`.
fn edges_of(model: &Model, rng: &mut ChaCha8Rng) -> Result<(u32, Vec<(u32, u32)>), GenError> {
    Ok(match model {
        Model::Gnp { n, p } => {
            probability("p", *p)?;
            let n = *n;
            let edges = (1..=n)
                .flat_map(|u| (u + 1..=n).map(move |v| (u, v)))
                .filter(|_| rng.gen_bool(*p))
                .collect();
            (n, edges)
        }
        Model::PlantedClusters { n, k, noise } => {
            probability("noise", *noise)?;
            if *k == 0 || k > n {
                return Err(GenError::InvalidParams(format!("cluster count {k} must be in 1..={n}")));
            }
            let (n, k) = (*n, *k);
            let mut edges = Vec::new();
            for u in 1..=n {
                for v in u + 1..=n {
                    let same = u % k == v % k;
                    if same != rng.gen_bool(*noise) {
                        edges.push((u, v));
                    }
                }
            }
            (n, edges)
        }
        Model::VcPendant(inner) => {
            let (n, mut edges) = edges_of(inner, rng)?;
            edges.extend((1..=n).map(|v| (v, v + n)));
            (2 * n, edges)
        }
        Model::BullNeighborhood => {
            // bull: triangle 2,3,4 with legs 5 on 2 and 6 on 3; hub 1 sees all
            let mut edges = vec![(2, 3), (2, 4), (3, 4), (2, 5), (3, 6)];
            edges.extend((2..=6).map(|v| (1, v)));
            (6, edges)
        }
        Model::K5Gadget => {
            let mut edges: Vec<(u32, u32)> = (1..=5).flat_map(|u| (u + 1..=5).map(move |v| (u, v))).collect();
            edges.extend((1..=4).map(|v| (v, v + 5)));
            (9, edges)
        }
    })
}

/// Builds an instance from `model`, drawing integer weights from `weights`.
/// The same arguments always give the same instance.
pub fn generate(model: &Model, weights: RangeInclusive<u64>, seed: u64) -> Result<WeightedGraph, GenError> {
    if weights.is_empty() {
        return Err(GenError::InvalidParams(format!("empty weight range {weights:?}")));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let (n, edges) = edges_of(model, &mut rng)?;
    let graph = Graph::from_edges(
        (1..=n).map(VertexId),
        edges.into_iter().map(|(u, v)| (VertexId(u), VertexId(v))),
    )
    .expect("generated edges are simple");
    let costs = graph
        .vertices()
        .map(|v| (v, int(rng.gen_range(weights.clone()) as i64)))
        .collect();
    Ok(WeightedGraph::new(graph, costs).expect("generated weights are nonnegative"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use cvd_core::oracle::exact_cluster_vd;
    use cvd_core::structure::{connected_components, find_k5, is_clique};
    use cvd_core::OracleBudget;

    #[test]
    fn vc_pendant_over_triangle() {
        let k3 = Model::PlantedClusters { n: 3, k: 1, noise: 0.0 };
        let wg = generate(&Model::VcPendant(Box::new(k3)), 1..=1, 7).unwrap();
        assert_eq!(wg.graph().vertex_count(), 6);
        assert_eq!(wg.graph().edge_count(), 6);
    }

    #[test]
    fn planted_without_noise_is_three_triangles() {
        let wg = generate(&Model::PlantedClusters { n: 9, k: 3, noise: 0.0 }, 1..=1, 1).unwrap();
        let comps = connected_components(wg.graph());
        assert_eq!(comps.len(), 3);
        assert!(comps.iter().all(|c| c.len() == 3 && is_clique(wg.graph(), c)));
        assert_eq!(exact_cluster_vd(&wg, &OracleBudget::default()).unwrap().1, int(0));
    }

    #[test]
    fn gnp_is_deterministic() {
        let m = Model::Gnp { n: 10, p: 0.3 };
        assert_eq!(generate(&m, 1..=5, 1).unwrap(), generate(&m, 1..=5, 1).unwrap());
        assert_ne!(generate(&m, 1..=5, 1).unwrap(), generate(&m, 1..=5, 2).unwrap());
    }

    #[test]
    fn gadgets() {
        let bull = generate(&Model::BullNeighborhood, 1..=1, 0).unwrap();
        assert_eq!((bull.graph().vertex_count(), bull.graph().edge_count()), (6, 10));
        let k5 = generate(&Model::K5Gadget, 1..=1, 0).unwrap();
        assert!(find_k5(k5.graph()).is_some());
    }

    #[test]
    fn parses_models() {
        for s in ["gnp:10:0.3", "planted:9:3:0.1", "vc-pendant:gnp:4:0.5", "bull", "k5"] {
            assert_eq!(s.parse::<Model>().unwrap().to_string(), s);
        }
        assert!("gnp:10".parse::<Model>().is_err());
        assert!(generate(&Model::Gnp { n: 3, p: 1.5 }, 1..=1, 0).is_err());
        assert!(generate(&Model::PlantedClusters { n: 3, k: 0, noise: 0.0 }, 1..=1, 0).is_err());
    }
}
