//! Optimal rides on cycles.
//!
//! Some optimal ride winds less than three times around the cycle, so it can
//! be read as a ride on a path of `3n` nodes whose node `v` stands for cycle
//! node `wrap(v)`. A tuple fixes the window `[alpha, beta]` the ride sweeps,
//! the copies of the start and end nodes and the sweep direction; each tuple
//! yields a path scenario, and the cheapest path solution over all tuples
//! projects back to an optimal cycle ride.

use std::ops::RangeInclusive;
use std::sync::Arc;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::graph::{Graph, Topology};
use crate::path::solve_path_unchecked;
use crate::ride::{check_ride, is_feasible, waypoint_cost, Ride, Solution};
use crate::scenario::{wrap, Request, Scenario};
use crate::weight::Weight;

/// One window/direction choice.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Tuple {
    pub alpha: usize,
    pub beta: usize,
    pub v_start: usize,
    pub v_end: usize,
    /// Sweep `alpha -> beta` when set, `beta -> alpha` otherwise.
    pub forward: bool,
}

impl Tuple {
    pub fn direction_request(&self) -> Request {
        if self.forward {
            Request::new(self.alpha, self.beta)
        } else {
            Request::new(self.beta, self.alpha)
        }
    }
}

/// The path scenario for one tuple.
#[derive(Debug, Clone)]
pub struct UnrolledScenario {
    pub tuple: Tuple,
    /// Unrolled nodes whose cycle node occurs only once in the window.
    pub window: Option<RangeInclusive<usize>>,
    /// Requests lifted into the window, without the direction request.
    pub lifted: Vec<Request>,
    /// Path scenario on the `3n`-node unrolled graph.
    pub scenario: Scenario,
}

/// Nodes of `[alpha, beta]` whose residue mod `n` occurs once in it.
pub fn window_nodes(alpha: usize, beta: usize, n: usize) -> Option<RangeInclusive<usize>> {
    debug_assert!(alpha <= beta);
    if beta < alpha + n {
        Some(alpha..=beta)
    } else if beta < alpha + 2 * n - 1 {
        Some(beta - n + 1..=alpha + n - 1)
    } else {
        None
    }
}

/// The `3n`-node path whose edge `{v, v+1}` copies cycle edge `{wrap(v), wrap(v+1)}`.
pub fn unrolled_graph(cycle: &Graph) -> Result<Graph> {
    if cycle.topology() != Topology::Cycle {
        return Err(Error::WrongTopology {
            expected: Topology::Cycle,
            found: cycle.topology(),
        });
    }
    let n = cycle.n();
    let w = cycle.line_weights().unwrap();
    Ok(Graph::path((1..3 * n).map(|v| w[wrap(v, n) - 1]).collect()))
}

/// Offset of the representative of `x` in a window starting at `from`.
fn offset(x: usize, from: usize, n: usize) -> usize {
    (x + n - from % n) % n
}

fn lift(requests: &[Request], window: Option<&RangeInclusive<usize>>, n: usize) -> Vec<Request> {
    let Some(window) = window else {
        return Vec::new();
    };
    let (a, b) = (*window.start(), *window.end());
    let rep = |x: usize| Some(a + offset(x, a, n)).filter(|&v| v <= b);
    requests
        .iter()
        .filter_map(|r| Some(Request::new(rep(r.s)?, rep(r.t)?)))
        .collect()
}

/// Shared state for unrolling one cycle scenario under many tuples.
pub struct Unroller {
    source: Scenario,
    keys: Vec<usize>,
    graph: Arc<Graph>,
}

impl Unroller {
    pub fn new(scenario: &Scenario) -> Result<Self> {
        scenario.require(Topology::Cycle)?;
        Ok(Unroller {
            source: scenario.clone(),
            keys: scenario.key_nodes(),
            graph: Arc::new(unrolled_graph(scenario.graph())?),
        })
    }

    pub fn graph(&self) -> &Arc<Graph> {
        &self.graph
    }

    fn n(&self) -> usize {
        self.source.n()
    }

    /// Smallest `beta` for which every key node has a copy in `[alpha, beta]`.
    fn min_beta(&self, alpha: usize) -> usize {
        alpha
            + self
                .keys
                .iter()
                .map(|&x| offset(x, alpha, self.n()))
                .max()
                .unwrap_or(0)
    }

    fn copies(&self, x: usize, lo: usize, hi: usize) -> impl Iterator<Item = usize> {
        let n = self.n();
        (0..3)
            .map(move |j| x + j * n)
            .filter(move |v| (lo..=hi).contains(v))
    }

    fn is_key(&self, v: usize) -> bool {
        self.keys.binary_search(&wrap(v, self.n())).is_ok()
    }

    pub fn check(&self, t: &Tuple) -> Result<()> {
        let n = self.n();
        let reject = |why: String| Err(Error::TupleRejected(format!("{t:?}: {why}")));
        if !(1..=n).contains(&t.alpha) || !(t.alpha..=3 * n).contains(&t.beta) {
            return reject("window out of range".into());
        }
        if !self.is_key(t.alpha) || !self.is_key(t.beta) {
            return reject("window ends are not request endpoints, start or end".into());
        }
        if t.beta < self.min_beta(t.alpha) {
            return reject("window misses a key node".into());
        }
        for (v, target) in [
            (t.v_start, self.source.start()),
            (t.v_end, self.source.end()),
        ] {
            if !(t.alpha..=t.beta).contains(&v) || wrap(v, n) != target {
                return reject(format!("{v} is not a copy of {target} inside the window"));
            }
        }
        Ok(())
    }

    pub fn unroll(&self, tuple: Tuple) -> Result<UnrolledScenario> {
        self.check(&tuple)?;
        let window = window_nodes(tuple.alpha, tuple.beta, self.n());
        let lifted = lift(self.source.requests(), window.as_ref(), self.n());
        let scenario = self.build(&tuple, &lifted)?;
        Ok(UnrolledScenario {
            tuple,
            window,
            lifted,
            scenario,
        })
    }

    fn build(&self, t: &Tuple, lifted: &[Request]) -> Result<Scenario> {
        Scenario::new(
            self.graph.clone(),
            t.v_start,
            t.v_end,
            lifted.iter().copied().chain([t.direction_request()]),
        )
    }

    /// Tuples with window start `alpha`, in enumeration order.
    fn tuples_from(&self, alpha: usize) -> Vec<Tuple> {
        let n = self.n();
        let lo = self.min_beta(alpha);
        let mut betas: Vec<usize> = self
            .keys
            .iter()
            .flat_map(|&x| self.copies(x, lo, 3 * n))
            .collect();
        betas.sort_unstable();
        let mut out = Vec::new();
        for beta in betas {
            for v_start in self.copies(self.source.start(), alpha, beta) {
                for v_end in self.copies(self.source.end(), alpha, beta) {
                    for forward in [true, false] {
                        out.push(Tuple {
                            alpha,
                            beta,
                            v_start,
                            v_end,
                            forward,
                        });
                    }
                }
            }
        }
        out
    }

    pub fn tuples(&self) -> Vec<Tuple> {
        self.keys
            .iter()
            .flat_map(|&alpha| self.tuples_from(alpha))
            .collect()
    }
}

/// Every admissible tuple, ordered by `alpha`, `beta`, start copy, end copy,
/// forward before backward.
pub fn enumerate_tuples(scenario: &Scenario) -> Result<Vec<Tuple>> {
    Ok(Unroller::new(scenario)?.tuples())
}

/// Builds the path scenario for one tuple.
pub fn unroll(scenario: &Scenario, tuple: Tuple) -> Result<UnrolledScenario> {
    Unroller::new(scenario)?.unroll(tuple)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CycleOptions {
    /// Solve window starts on the rayon pool.
    pub parallel: bool,
    /// Project every tuple's path ride back to the cycle and check it.
    pub check_every_tuple: bool,
}

impl Default for CycleOptions {
    fn default() -> Self {
        CycleOptions {
            parallel: true,
            check_every_tuple: false,
        }
    }
}

/// Optimal ride and exact cost on a cycle.
///
/// The ride is returned in [`Frame::Winding`](crate::ride::Frame) form.
pub fn solve_cycle(scenario: &Scenario) -> Result<Solution> {
    solve_cycle_with(scenario, &CycleOptions::default())
}

struct Best {
    cost: Weight,
    waypoints: Vec<usize>,
}

pub fn solve_cycle_with(scenario: &Scenario, options: &CycleOptions) -> Result<Solution> {
    scenario.require(Topology::Cycle)?;
    let n = scenario.n();
    let shift = scenario.start() - 1;
    let rotated = scenario.rotate(shift)?;
    let unroller = Unroller::new(&rotated)?;
    let table = unroller.graph().prefix_table().unwrap();

    let per_alpha = |&alpha: &usize| -> Result<(usize, Option<Best>)> {
        let tuples = unroller.tuples_from(alpha);
        let mut best: Option<Best> = None;
        let mut lifted_for: Option<(usize, Vec<Request>)> = None;
        for t in &tuples {
            if lifted_for.as_ref().is_none_or(|(b, _)| *b != t.beta) {
                let window = window_nodes(alpha, t.beta, n);
                lifted_for = Some((t.beta, lift(rotated.requests(), window.as_ref(), n)));
            }
            let lifted = &lifted_for.as_ref().unwrap().1;
            let path = unroller.build(t, lifted)?;
            let (ride, _) = solve_path_unchecked(&path)?;
            if options.check_every_tuple {
                let projected = Ride::winding(ride.waypoints().iter().copied(), n);
                if let Err(v) = is_feasible(&projected.expand(), &rotated)? {
                    return Err(Error::Internal(format!(
                        "tuple {t:?} projects to an infeasible ride: {v}"
                    )));
                }
            }
            let cost = waypoint_cost(ride.waypoints(), table);
            if best.as_ref().is_none_or(|b| cost < b.cost) {
                best = Some(Best {
                    cost,
                    waypoints: ride.waypoints().to_vec(),
                });
            }
        }
        Ok((tuples.len(), best))
    };

    let alphas = unroller.keys.clone();
    let results: Vec<Result<(usize, Option<Best>)>> = if options.parallel {
        alphas.par_iter().map(per_alpha).collect()
    } else {
        alphas.iter().map(per_alpha).collect()
    };

    let mut count = 0usize;
    let mut best: Option<Best> = None;
    for r in results {
        let (c, b) = r?;
        count += c;
        if let Some(b) = b {
            if best.as_ref().is_none_or(|cur| b.cost < cur.cost) {
                best = Some(b);
            }
        }
    }
    let bound = 9 * (3 * unroller.keys.len()).pow(2);
    if count > bound {
        return Err(Error::Internal(format!(
            "{count} tuples exceed the bound {bound}"
        )));
    }
    let best = best.ok_or_else(|| Error::Internal("no admissible tuple".into()))?;

    let ride = Ride::winding(best.waypoints.iter().map(|&u| u + shift), n);
    if let Err(v) = check_ride(&ride, scenario)? {
        return Err(Error::Internal(format!(
            "cycle ride {ride} is infeasible: {v}"
        )));
    }
    let cost = scenario.ride_cost(&ride)?;
    if cost != best.cost {
        return Err(Error::Internal(format!(
            "cycle ride costs {cost} but its unrolled ride cost {}",
            best.cost
        )));
    }
    Ok(Solution { ride, cost })
}
