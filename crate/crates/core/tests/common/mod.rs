#![allow(dead_code)]

use rand::Rng;
use rand_chacha::ChaCha8Rng;
use rideshare_core::gen::rng;
use rideshare_core::{Graph, Request, Scenario, Weight};

pub type Rand = ChaCha8Rng;

pub fn seeded(seed: u64) -> Rand {
    rng(seed)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PathShape {
    OuterForward,
    OuterReversed,
    Inner,
    SingleNode,
    SameSide,
    Uniform,
}

pub const PATH_SHAPES: [PathShape; 6] = [
    PathShape::OuterForward,
    PathShape::OuterReversed,
    PathShape::Inner,
    PathShape::SingleNode,
    PathShape::SameSide,
    PathShape::Uniform,
];

pub fn weights(rng: &mut Rand, count: usize, max: u64) -> Vec<Weight> {
    (0..count)
        .map(|_| Weight::integer(rng.gen_range(1..=max)))
        .collect()
}

pub fn random_path(rng: &mut Rand, n: usize, max_weight: u64) -> Graph {
    Graph::path(weights(rng, n - 1, max_weight))
}

pub fn random_cycle(rng: &mut Rand, n: usize, max_weight: u64) -> Graph {
    Graph::cycle(weights(rng, n, max_weight)).unwrap()
}

fn pairs_in(rng: &mut Rand, k: usize, lo: usize, hi: usize) -> Vec<Request> {
    (0..k)
        .map(|_| Request::new(rng.gen_range(lo..=hi), rng.gen_range(lo..=hi)))
        .collect()
}

fn span(reqs: &[Request]) -> (usize, usize) {
    let lo = reqs.iter().map(|r| r.s.min(r.t)).min().unwrap();
    let hi = reqs.iter().map(|r| r.s.max(r.t)).max().unwrap();
    (lo, hi)
}

/// A path scenario of the given shape with `n <= max_n` and at most `max_k` requests.
pub fn path_instance(
    rng: &mut Rand,
    shape: PathShape,
    max_n: usize,
    max_k: usize,
    max_weight: u64,
) -> Scenario {
    loop {
        let n = rng.gen_range(2..=max_n);
        let k = rng.gen_range(1..=max_k);
        let g = random_path(rng, n, max_weight);
        let (s0, t0, reqs) = match shape {
            PathShape::OuterForward | PathShape::OuterReversed => {
                let a = rng.gen_range(1..=n);
                let b = rng.gen_range(a..=n);
                let reqs = pairs_in(rng, k, a, b);
                if shape == PathShape::OuterForward {
                    (a, b, reqs)
                } else {
                    (b, a, reqs)
                }
            }
            PathShape::Inner => {
                let reqs = pairs_in(rng, k, 1, n);
                let (lo, hi) = span(&reqs);
                if hi - lo < 2 {
                    continue;
                }
                let inside = rng.gen_range(lo + 1..hi);
                let other = rng.gen_range(1..=n);
                if rng.gen_bool(0.5) {
                    (inside, other, reqs)
                } else {
                    (other, inside, reqs)
                }
            }
            PathShape::SingleNode => {
                let v = rng.gen_range(1..=n);
                (
                    rng.gen_range(1..=n),
                    rng.gen_range(1..=n),
                    vec![Request::new(v, v)],
                )
            }
            PathShape::SameSide => {
                let reqs = pairs_in(rng, k, 1, n);
                let (lo, hi) = span(&reqs);
                let (a, b) = if rng.gen_bool(0.5) {
                    (rng.gen_range(1..=lo), rng.gen_range(1..=lo))
                } else {
                    (rng.gen_range(hi..=n), rng.gen_range(hi..=n))
                };
                (a, b, reqs)
            }
            PathShape::Uniform => (
                rng.gen_range(1..=n),
                rng.gen_range(1..=n),
                pairs_in(rng, k, 1, n),
            ),
        };
        let sc = Scenario::new(g, s0, t0, reqs).unwrap();
        if shape == PathShape::SameSide {
            // skip instances that happen to be outer
            let outer = (sc.start() <= sc.left() && sc.right() <= sc.end())
                || (sc.end() <= sc.left() && sc.right() <= sc.start());
            if outer || sc.left() == sc.right() {
                continue;
            }
        }
        return sc;
    }
}

pub fn cycle_instance(
    rng: &mut Rand,
    min_n: usize,
    max_n: usize,
    max_k: usize,
    max_weight: u64,
) -> Scenario {
    let n = rng.gen_range(min_n..=max_n);
    let k = rng.gen_range(1..=max_k);
    let g = random_cycle(rng, n, max_weight);
    Scenario::new(
        g,
        rng.gen_range(1..=n),
        rng.gen_range(1..=n),
        pairs_in(rng, k, 1, n),
    )
    .unwrap()
}

/// Same graph with every edge weight multiplied by `c`.
pub fn scale_graph(g: &Graph, c: Weight) -> Graph {
    let w: Vec<Weight> = g.line_weights().unwrap().iter().map(|&w| w * c).collect();
    match g.topology() {
        rideshare_core::Topology::Path => Graph::path(w),
        rideshare_core::Topology::Cycle => Graph::cycle(w).unwrap(),
        rideshare_core::Topology::General => unreachable!(),
    }
}

pub fn rescaled(sc: &Scenario, c: Weight) -> Scenario {
    Scenario::new(
        scale_graph(sc.graph(), c),
        sc.start(),
        sc.end(),
        sc.requests().to_vec(),
    )
    .unwrap()
}

/// Set-definition reference implementations for the sweep-based routines.
pub mod naive {
    use rideshare_core::{Request, Scenario};

    fn candidates(sc: &Scenario, extra: &[usize]) -> Vec<usize> {
        let mut v: Vec<usize> = sc
            .requests()
            .iter()
            .flat_map(|r| [r.s, r.t])
            .chain(extra.iter().copied())
            .collect();
        v.sort_unstable();
        v.dedup();
        v
    }

    fn any(sc: &Scenario, p: impl Fn(&Request) -> bool) -> bool {
        sc.requests().iter().any(p)
    }

    pub fn phase1_bounds(sc: &Scenario) -> (usize, usize) {
        let x_hat = candidates(sc, &[sc.start()])
            .into_iter()
            .filter(|&x| x >= sc.start() && !any(sc, |r| r.t <= x && x < r.s))
            .min()
            .unwrap();
        let y_hat = candidates(sc, &[sc.end()])
            .into_iter()
            .filter(|&y| y <= sc.end() && !any(sc, |r| r.t < y && y <= r.s))
            .max()
            .unwrap();
        (x_hat, y_hat)
    }

    /// `(m, min Z_m)` for each key node `m <= end`.
    pub fn m_map(sc: &Scenario) -> Vec<(usize, usize)> {
        let keys = candidates(sc, &[sc.start(), sc.end()]);
        keys.iter()
            .copied()
            .filter(|&m| m <= sc.end())
            .map(|m| {
                let z = keys
                    .iter()
                    .copied()
                    .filter(|&z| m <= z && sc.start() <= z && !any(sc, |r| r.t < m && z < r.s))
                    .min()
                    .unwrap();
                (m, z)
            })
            .collect()
    }
}
