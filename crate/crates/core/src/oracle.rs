//! Exhaustive shortest-path search over `(node, request statuses)` states.
//!
//! Every request is in one of three statuses: origin not yet visited,
//! origin visited with the destination pending, or satisfied. Arriving at a
//! node first promotes the requests picked up there and then those dropped
//! off there, so a request with `s == t` is settled by a single visit. The
//! cheapest way to reach the end node with every request satisfied is an
//! optimal ride. Works on any topology, at a cost exponential in `|C|`.

use std::cmp::Reverse;
use std::collections::hash_map::Entry;
use std::collections::{BinaryHeap, HashMap};

use crate::error::{Error, Result};
use crate::ride::{Ride, Solution};
use crate::scenario::Scenario;
use crate::weight::Weight;

type State = (usize, u64);
/// distance, predecessor, settled
type Labels = HashMap<State, (Weight, Option<State>, bool)>;

pub const DEFAULT_STATE_BUDGET: u64 = 5_000_000;

const WAITING: u8 = 0;
const CARRIED: u8 = 1;
const DONE: u8 = 2;

struct Encoder {
    requests: usize,
    /// Pickup and drop-off request indices per node.
    picks: Vec<Vec<usize>>,
    drops: Vec<Vec<usize>>,
    pow3: Vec<u64>,
}

impl Encoder {
    fn new(scenario: &Scenario) -> Self {
        let n = scenario.n();
        let mut picks = vec![Vec::new(); n + 1];
        let mut drops = vec![Vec::new(); n + 1];
        for (i, r) in scenario.requests().iter().enumerate() {
            picks[r.s].push(i);
            drops[r.t].push(i);
        }
        let k = scenario.requests().len();
        let pow3 = (0..k).map(|i| 3u64.pow(i as u32)).collect();
        Encoder {
            requests: k,
            picks,
            drops,
            pow3,
        }
    }

    fn digit(&self, code: u64, i: usize) -> u8 {
        ((code / self.pow3[i]) % 3) as u8
    }

    /// Status code after arriving at `v`.
    fn arrive(&self, mut code: u64, v: usize) -> u64 {
        for &i in &self.picks[v] {
            if self.digit(code, i) == WAITING {
                code += self.pow3[i];
            }
        }
        for &i in &self.drops[v] {
            if self.digit(code, i) == CARRIED {
                code += self.pow3[i];
            }
        }
        code
    }

    fn goal(&self) -> u64 {
        (0..self.requests).map(|i| DONE as u64 * self.pow3[i]).sum()
    }
}

/// Optimal ride and cost under the default state budget.
pub fn brute_force_optimal(scenario: &Scenario) -> Result<Solution> {
    brute_force_optimal_with_budget(scenario, DEFAULT_STATE_BUDGET)
}

/// Optimal ride and cost; refuses instances with more than `budget`
/// potential states.
///
/// The witness is an explicit node sequence.
pub fn brute_force_optimal_with_budget(scenario: &Scenario, budget: u64) -> Result<Solution> {
    let n = scenario.n();
    let k = scenario.requests().len();
    let states = 3u128
        .checked_pow(k as u32)
        .and_then(|p| p.checked_mul(n as u128))
        .unwrap_or(u128::MAX);
    if states > budget as u128 {
        return Err(Error::OracleTooLarge { states, budget });
    }

    let enc = Encoder::new(scenario);
    let goal = (scenario.end(), enc.goal());
    let graph = scenario.graph();
    let adjacency: Vec<Vec<(usize, Weight)>> = (0..=n)
        .map(|v| {
            if v == 0 {
                Vec::new()
            } else {
                graph.neighbors(v)
            }
        })
        .collect();

    let start = (scenario.start(), enc.arrive(0, scenario.start()));
    let mut seen: Labels = HashMap::new();
    let mut queue = BinaryHeap::new();
    let mut seq = 0u64;
    seen.insert(start, (Weight::ZERO, None, false));
    queue.push(Reverse((Weight::ZERO, seq, start)));

    while let Some(Reverse((dist, _, state))) = queue.pop() {
        let entry = seen.get_mut(&state).unwrap();
        if entry.2 || entry.0 < dist {
            continue;
        }
        entry.2 = true;
        if state == goal {
            return Ok(Solution {
                ride: Ride::explicit(trace(&seen, goal)),
                cost: dist,
            });
        }
        let (v, code) = state;
        for &(u, w) in &adjacency[v] {
            let next = (u, enc.arrive(code, u));
            let nd = dist + w;
            let improved = match seen.entry(next) {
                Entry::Vacant(slot) => {
                    slot.insert((nd, Some(state), false));
                    true
                }
                Entry::Occupied(mut slot) => {
                    let e = slot.get_mut();
                    if !e.2 && nd < e.0 {
                        *e = (nd, Some(state), false);
                        true
                    } else {
                        false
                    }
                }
            };
            if improved {
                seq += 1;
                queue.push(Reverse((nd, seq, next)));
            }
        }
    }
    Err(Error::Infeasible)
}

fn trace(seen: &Labels, goal: (usize, u64)) -> Vec<usize> {
    let mut nodes = vec![goal.0];
    let mut cur = goal;
    while let Some(prev) = seen[&cur].1 {
        nodes.push(prev.0);
        cur = prev;
    }
    nodes.reverse();
    nodes
}
