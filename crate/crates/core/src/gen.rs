//! Seeded random instances.

use std::collections::BTreeSet;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::{Graph, Topology};
use crate::scenario::{Request, Scenario};
use crate::weight::Weight;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GenConfig {
    pub topology: Topology,
    pub n: usize,
    /// Number of requests drawn; duplicates collapse, so the scenario may hold fewer.
    pub requests: usize,
    pub min_weight: u64,
    pub max_weight: u64,
    /// Extra edges beyond a spanning tree, general graphs only.
    pub extra_edges: usize,
}

impl GenConfig {
    pub fn new(topology: Topology, n: usize, requests: usize) -> Self {
        GenConfig {
            topology,
            n,
            requests,
            min_weight: 1,
            max_weight: 1,
            extra_edges: n,
        }
    }

    pub fn weights(mut self, min: u64, max: u64) -> Self {
        self.min_weight = min;
        self.max_weight = max;
        self
    }
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn weight<R: Rng>(rng: &mut R, cfg: &GenConfig) -> Weight {
    Weight::integer(rng.gen_range(cfg.min_weight..=cfg.max_weight))
}

pub fn random_graph<R: Rng>(rng: &mut R, cfg: &GenConfig) -> Result<Graph> {
    if cfg.min_weight > cfg.max_weight {
        return Err(Error::InvalidWeight(format!(
            "empty weight range {}..={}",
            cfg.min_weight, cfg.max_weight
        )));
    }
    let n = cfg.n;
    match cfg.topology {
        Topology::Path => {
            if n == 0 {
                return Err(Error::InvalidGraph("a path needs at least one node".into()));
            }
            Ok(Graph::path((1..n).map(|_| weight(rng, cfg)).collect()))
        }
        Topology::Cycle => Graph::cycle((0..n).map(|_| weight(rng, cfg)).collect()),
        Topology::General => {
            // random spanning tree over a shuffled order, then extra edges
            let mut order: Vec<usize> = (1..=n).collect();
            order.shuffle(rng);
            let mut edges = Vec::with_capacity(n + cfg.extra_edges);
            for i in 1..n {
                let parent = order[rng.gen_range(0..i)];
                edges.push((parent, order[i], weight(rng, cfg)));
            }
            if n >= 2 {
                for _ in 0..cfg.extra_edges {
                    let u = rng.gen_range(1..=n);
                    let v = rng.gen_range(1..=n);
                    if u != v {
                        edges.push((u, v, weight(rng, cfg)));
                    }
                }
            }
            Graph::general(n, edges)
        }
    }
}

/// Uniform start, end and request endpoints on a random graph.
pub fn random_scenario<R: Rng>(rng: &mut R, cfg: &GenConfig) -> Result<Scenario> {
    if cfg.requests == 0 {
        return Err(Error::EmptyRequests);
    }
    let graph = random_graph(rng, cfg)?;
    let n = cfg.n;
    let start = rng.gen_range(1..=n);
    let end = rng.gen_range(1..=n);
    let requests: Vec<Request> = (0..cfg.requests)
        .map(|_| Request::new(rng.gen_range(1..=n), rng.gen_range(1..=n)))
        .collect();
    Scenario::new(graph, start, end, requests)
}

/// Reproducible instance for `seed`.
pub fn generate(cfg: &GenConfig, seed: u64) -> Result<Scenario> {
    random_scenario(&mut rng(seed), cfg)
}

/// A cycle whose requests use exactly `pool` distinct endpoints, with
/// `requests` distinct requests; start and end are drawn from the pool.
pub fn cycle_with_endpoint_pool<R: Rng>(
    rng: &mut R,
    n: usize,
    pool: usize,
    requests: usize,
    max_weight: u64,
) -> Result<Scenario> {
    if pool == 0 || pool > n {
        return Err(Error::Precondition(format!(
            "endpoint pool {pool} must lie in 1..={n}"
        )));
    }
    if requests < pool.div_ceil(2) || requests > pool * pool {
        return Err(Error::Precondition(format!(
            "{requests} distinct requests cannot cover exactly {pool} endpoints"
        )));
    }
    let mut nodes: Vec<usize> = (1..=n).collect();
    nodes.shuffle(rng);
    nodes.truncate(pool);
    // pair up the pool so every node is an endpoint, then fill at random
    let mut chosen: BTreeSet<Request> = nodes
        .chunks(2)
        .map(|c| Request::new(c[0], c[c.len() - 1]))
        .collect();
    while chosen.len() < requests {
        chosen.insert(Request::new(
            *nodes.choose(rng).unwrap(),
            *nodes.choose(rng).unwrap(),
        ));
    }
    let cfg = GenConfig::new(Topology::Cycle, n, requests).weights(1, max_weight);
    let graph = random_graph(rng, &cfg)?;
    Scenario::new(graph, nodes[0], nodes[pool - 1], chosen)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn deterministic() {
        let cfg = GenConfig::new(Topology::General, 8, 4).weights(1, 9);
        assert_eq!(generate(&cfg, 3).unwrap(), generate(&cfg, 3).unwrap());
    }

    #[test]
    fn shapes() {
        let mut r = rng(1);
        for topology in [Topology::Path, Topology::Cycle, Topology::General] {
            let cfg = GenConfig::new(topology, 6, 3).weights(2, 4);
            let sc = random_scenario(&mut r, &cfg).unwrap();
            assert_eq!(sc.topology(), topology);
            assert_eq!(sc.n(), 6);
            for (u, v, w) in sc.graph().edge_list() {
                assert!(u != v);
                assert!((Weight::integer(2)..=Weight::integer(4)).contains(&w));
            }
        }
    }

    #[test]
    fn general_graphs_are_connected() {
        let mut r = rng(5);
        for _ in 0..50 {
            let cfg = GenConfig::new(Topology::General, 7, 1);
            let g = random_graph(&mut r, &cfg).unwrap();
            let mut seen = [false; 8];
            let mut stack = vec![1];
            seen[1] = true;
            while let Some(v) = stack.pop() {
                for (u, _) in g.neighbors(v) {
                    if !seen[u] {
                        seen[u] = true;
                        stack.push(u);
                    }
                }
            }
            assert!(seen[1..].iter().all(|&b| b));
        }
    }

    #[test]
    fn rejects_bad_configs() {
        let cfg = GenConfig::new(Topology::Path, 5, 0);
        assert_eq!(generate(&cfg, 0), Err(Error::EmptyRequests));
        let cfg = GenConfig::new(Topology::Path, 5, 2).weights(3, 2);
        assert!(matches!(generate(&cfg, 0), Err(Error::InvalidWeight(_))));
        let cfg = GenConfig::new(Topology::Cycle, 2, 2);
        assert!(matches!(generate(&cfg, 0), Err(Error::InvalidGraph(_))));
    }

    #[test]
    fn endpoint_pool() {
        let sc = cycle_with_endpoint_pool(&mut rng(4), 100, 10, 30, 5).unwrap();
        assert_eq!(sc.endpoint_nodes().len(), 10);
        assert_eq!(sc.requests().len(), 30);
        assert!(sc.endpoint_nodes().contains(&sc.start()));
        assert!(cycle_with_endpoint_pool(&mut rng(4), 100, 10, 101, 5).is_err());
    }
}
