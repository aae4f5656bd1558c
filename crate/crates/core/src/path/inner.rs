//! Canonical-ride enumeration for path scenarios whose start or end lies
//! inside the span of the requests (and the same-side boundary cases).
//!
//! An `(M, m)`-canonical ride runs `start -> M -> left`, comes back to `M`,
//! crosses to `right` and finishes `right -> m -> end`. When `M < m` the
//! crossing from `M` to `m` is itself an optimal outer ride over the
//! requests inside `[M, m]`. An optimal ride is found among one such ride
//! for a fixed pair `(M^, m^)`, one ride per candidate `m` with its
//! smallest admissible `M`, and the same two families on the mirrored path.

use std::cmp::Reverse;
use std::collections::BinaryHeap;

use crate::error::{Error, Result};
use crate::graph::{PrefixTable, Topology};
use crate::heap::MinMaxHeap;
use crate::path::outer_waypoints;
use crate::ride::{waypoint_cost, Ride};
use crate::scenario::{Request, Scenario};
use crate::weight::Weight;

/// Phase I pair and the per-`m` choices of `M` for one orientation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InnerCandidates {
    pub big_m: usize,
    pub small_m: usize,
    /// `(m, M^_m)` for every key node `m <= end`, ascending in `m`.
    pub m_to_big_m: Vec<(usize, usize)>,
}

/// A path scenario stripped to what the sweeps need, in its own coordinates.
struct View {
    start: usize,
    end: usize,
    requests: Vec<Request>,
    /// Sorted distinct request endpoints.
    endpoints: Vec<usize>,
    /// `Some(n)` when coordinates are mirrored (`v -> n - v + 1`).
    mirror: Option<usize>,
}

impl View {
    fn direct(sc: &Scenario) -> Self {
        View {
            start: sc.start(),
            end: sc.end(),
            requests: sc.requests().to_vec(),
            endpoints: sc.endpoint_nodes(),
            mirror: None,
        }
    }

    /// The mirror image of a direct view on an `n`-node path.
    fn mirrored(direct: &View, n: usize) -> Self {
        let sym = |v: usize| n - v + 1;
        View {
            start: sym(direct.start),
            end: sym(direct.end),
            requests: direct
                .requests
                .iter()
                .map(|r| Request::new(sym(r.s), sym(r.t)))
                .collect(),
            endpoints: direct.endpoints.iter().rev().map(|&v| sym(v)).collect(),
            mirror: Some(n),
        }
    }

    fn to_original(&self, v: usize) -> usize {
        match self.mirror {
            Some(n) => n - v + 1,
            None => v,
        }
    }

    fn span(&self) -> (usize, usize) {
        let left = self.requests.iter().map(|r| r.s.min(r.t)).min().unwrap();
        let right = self.requests.iter().map(|r| r.s.max(r.t)).max().unwrap();
        (left, right)
    }

    fn backward(&self) -> Vec<Request> {
        self.requests
            .iter()
            .copied()
            .filter(Request::is_backward)
            .collect()
    }

    /// Sorted request endpoints plus `extra`.
    fn nodes_with(&self, extra: &[usize]) -> Vec<usize> {
        let mut nodes = Vec::with_capacity(self.endpoints.len() + extra.len());
        nodes.extend_from_slice(&self.endpoints);
        for &v in extra {
            if let Err(at) = nodes.binary_search(&v) {
                nodes.insert(at, v);
            }
        }
        nodes
    }

    fn cost(&self, waypoints: &[usize], table: &PrefixTable) -> Weight {
        match self.mirror {
            None => waypoint_cost(waypoints, table),
            Some(_) => waypoints
                .windows(2)
                .map(|w| table.dist(self.to_original(w[0]), self.to_original(w[1])))
                .sum(),
        }
    }

    /// `M^`: smallest `x` in `{start} ∪ V_C`, `x >= start`, that no backward
    /// request straddles as `t <= x < s`.
    fn big_m_hat(&self) -> Result<usize> {
        let mut backward = self.backward();
        backward.sort_unstable_by_key(|r| r.t);
        let mut pending = backward.iter().peekable();
        // pickup nodes of requests with t <= x < s
        let mut open: BinaryHeap<Reverse<usize>> = BinaryHeap::new();
        for x in self.nodes_with(&[self.start]) {
            while let Some(r) = pending.next_if(|r| r.t <= x) {
                open.push(Reverse(r.s));
            }
            while open.peek().is_some_and(|&Reverse(s)| s <= x) {
                open.pop();
            }
            if x >= self.start && open.is_empty() {
                return Ok(x);
            }
        }
        Err(Error::Internal("no admissible M^ candidate".into()))
    }

    /// `m^`: largest `y` in `{end} ∪ V_C`, `y <= end`, that no backward
    /// request straddles as `t < y <= s`.
    fn small_m_hat(&self) -> Result<usize> {
        let mut backward = self.backward();
        backward.sort_unstable_by_key(|r| Reverse(r.s));
        let mut pending = backward.iter().peekable();
        // delivery nodes of requests with t < y <= s
        let mut open: BinaryHeap<usize> = BinaryHeap::new();
        for y in self.nodes_with(&[self.end]).into_iter().rev() {
            while let Some(r) = pending.next_if(|r| r.s >= y) {
                open.push(r.t);
            }
            while open.peek().is_some_and(|&t| t >= y) {
                open.pop();
            }
            if y <= self.end && open.is_empty() {
                return Ok(y);
            }
        }
        Err(Error::Internal("no admissible m^ candidate".into()))
    }

    /// `(m, M^_m)` for every key node `m <= end`. `M^_m` is `max(m, start)`
    /// unless some backward request satisfies `t < m < s`, in which case it
    /// is the largest such `s` (but at least `start`).
    fn m_map(&self) -> Vec<(usize, usize)> {
        let mut backward = self.backward();
        backward.sort_unstable_by_key(|r| r.t);
        let mut pending = backward.iter().peekable();
        let mut open: MinMaxHeap<usize> = MinMaxHeap::with_capacity(backward.len());
        let mut out = Vec::new();
        for m in self.nodes_with(&[self.start, self.end]) {
            if m > self.end {
                break;
            }
            while let Some(r) = pending.next_if(|r| r.t < m) {
                open.push(r.s);
            }
            while open.peek_min().is_some_and(|&s| s <= m) {
                open.pop_min();
            }
            let big_m = match open.peek_max() {
                None => m.max(self.start),
                Some(&s) => s.max(self.start),
            };
            out.push((m, big_m));
        }
        out
    }

    fn candidates(&self) -> Result<InnerCandidates> {
        Ok(InnerCandidates {
            big_m: self.big_m_hat()?,
            small_m: self.small_m_hat()?,
            m_to_big_m: self.m_map(),
        })
    }

    /// Waypoints of an `(M, m)`-canonical ride in view coordinates.
    fn canonical(&self, big_m: usize, small_m: usize) -> Result<Vec<usize>> {
        let (left, right) = self.span();
        if small_m <= big_m {
            return Ok(vec![self.start, big_m, left, right, small_m, self.end]);
        }
        let inside: Vec<Request> = self
            .requests
            .iter()
            .copied()
            .filter(|r| (big_m..=small_m).contains(&r.s) && (big_m..=small_m).contains(&r.t))
            .collect();
        let mut waypoints = vec![self.start, big_m, left];
        waypoints.extend(outer_waypoints(&inside, big_m, small_m)?);
        waypoints.extend([right, small_m, self.end]);
        Ok(waypoints)
    }
}

fn require_span(sc: &Scenario) -> Result<()> {
    sc.require(Topology::Path)?;
    if sc.left() < sc.right() {
        Ok(())
    } else {
        Err(Error::Precondition(format!(
            "requests must span at least two nodes, all lie on {}",
            sc.left()
        )))
    }
}

/// The pair `(M^, m^)`.
pub fn phase1_bounds(scenario: &Scenario) -> Result<(usize, usize)> {
    scenario.require(Topology::Path)?;
    let view = View::direct(scenario);
    Ok((view.big_m_hat()?, view.small_m_hat()?))
}

/// `(m, M^_m)` for every `m` in `V_C ∪ {start, end}` with `m <= end`.
pub fn inner_m_map(scenario: &Scenario) -> Result<Vec<(usize, usize)>> {
    scenario.require(Topology::Path)?;
    Ok(View::direct(scenario).m_map())
}

impl InnerCandidates {
    pub fn compute(scenario: &Scenario) -> Result<Self> {
        scenario.require(Topology::Path)?;
        View::direct(scenario).candidates()
    }
}

/// An `(M, m)`-canonical ride. Both nodes must be request endpoints, the
/// start or the end.
pub fn canonical_ride(scenario: &Scenario, big_m: usize, small_m: usize) -> Result<Ride> {
    require_span(scenario)?;
    scenario.graph().check_node(big_m)?;
    scenario.graph().check_node(small_m)?;
    let keys = scenario.key_nodes();
    for v in [big_m, small_m] {
        if keys.binary_search(&v).is_err() {
            return Err(Error::Precondition(format!(
                "{v} is neither a request endpoint nor the start or end"
            )));
        }
    }
    Ok(Ride::on_line(
        View::direct(scenario).canonical(big_m, small_m)?,
    ))
}

/// Cheapest canonical ride over both orientations.
///
/// Ties keep the first candidate in the order: Phase I pair, Phase II by
/// ascending `m`, then the same on the mirrored path.
pub fn solve_inner(scenario: &Scenario) -> Result<Ride> {
    require_span(scenario)?;
    let table = scenario.graph().prefix_table().unwrap();
    let mut best: Option<(Weight, Vec<usize>, Option<usize>)> = None;

    let direct = View::direct(scenario);
    let mirrored = View::mirrored(&direct, scenario.n());
    for view in [direct, mirrored] {
        let InnerCandidates {
            big_m,
            small_m,
            m_to_big_m,
        } = view.candidates()?;
        let mut consider = |waypoints: &[usize]| {
            let cost = view.cost(waypoints, table);
            if best.as_ref().is_none_or(|(c, _, _)| cost < *c) {
                best = Some((cost, waypoints.to_vec(), view.mirror));
            }
        };
        let (left, right) = view.span();
        // a pair with M^ >= m^ is covered by the Phase II family
        if big_m < small_m {
            // turning back short of the span only adds a detour
            consider(&view.canonical(big_m.max(left), small_m.min(right))?);
        }
        for (m, big_m) in m_to_big_m {
            debug_assert!(m <= big_m);
            consider(&[view.start, big_m, left, right, m, view.end]);
        }
    }

    let (_, waypoints, mirror) = best.expect("Phase II always yields a candidate");
    Ok(match mirror {
        None => Ride::on_line(waypoints),
        Some(n) => Ride::on_line(waypoints.into_iter().map(|v| n - v + 1)),
    })
}
