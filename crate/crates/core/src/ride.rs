//! Rides in succinct waypoint form, their expansion, cost and feasibility.

use std::fmt;

use crate::error::{Error, Result};
use crate::graph::{PrefixTable, Topology};
use crate::scenario::{wrap, Request, Scenario};
use crate::weight::Weight;

/// How the waypoints of a [`Ride`] are to be read.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Frame {
    /// Turning points on a path; consecutive waypoints are joined by the
    /// straight walk between them.
    Line,
    /// Turning points on the unrolled cover of an `n`-node cycle. Coordinates
    /// may exceed `n`; every expanded node is read through [`wrap`].
    Winding { n: usize },
    /// Every node of the ride, in order.
    Explicit,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Ride {
    waypoints: Vec<usize>,
    frame: Frame,
}

/// Drops repeated waypoints and waypoints that lie between their neighbours.
fn turning_points(raw: impl IntoIterator<Item = usize>) -> Vec<usize> {
    let mut out: Vec<usize> = Vec::new();
    for v in raw {
        if out.last() == Some(&v) {
            continue;
        }
        if let [.., a, b] = out[..] {
            if (a < b && b < v) || (a > b && b > v) {
                *out.last_mut().unwrap() = v;
                continue;
            }
        }
        out.push(v);
    }
    out
}

impl Ride {
    pub fn on_line(waypoints: impl IntoIterator<Item = usize>) -> Self {
        let waypoints = turning_points(waypoints);
        assert!(!waypoints.is_empty(), "a ride has at least one node");
        Ride {
            waypoints,
            frame: Frame::Line,
        }
    }

    pub fn winding(waypoints: impl IntoIterator<Item = usize>, n: usize) -> Self {
        let waypoints = turning_points(waypoints);
        assert!(!waypoints.is_empty(), "a ride has at least one node");
        Ride {
            waypoints,
            frame: Frame::Winding { n },
        }
    }

    pub fn explicit(nodes: Vec<usize>) -> Self {
        assert!(!nodes.is_empty(), "a ride has at least one node");
        Ride {
            waypoints: nodes,
            frame: Frame::Explicit,
        }
    }

    pub fn waypoints(&self) -> &[usize] {
        &self.waypoints
    }

    pub fn frame(&self) -> Frame {
        self.frame
    }

    pub fn first(&self) -> usize {
        self.project(self.waypoints[0])
    }

    pub fn last(&self) -> usize {
        self.project(*self.waypoints.last().unwrap())
    }

    fn project(&self, v: usize) -> usize {
        match self.frame {
            Frame::Winding { n } => wrap(v, n),
            _ => v,
        }
    }

    /// Maps every waypoint through `f`, keeping the frame.
    pub fn map_nodes(&self, f: impl Fn(usize) -> usize) -> Ride {
        let mapped = self.waypoints.iter().map(|&v| f(v));
        match self.frame {
            Frame::Line => Ride::on_line(mapped),
            Frame::Winding { n } => Ride::winding(mapped, n),
            Frame::Explicit => Ride::explicit(mapped.collect()),
        }
    }

    /// Number of nodes in the full ride, without materializing it.
    pub fn expanded_len(&self) -> usize {
        match self.frame {
            Frame::Explicit => self.waypoints.len(),
            _ => {
                1 + self
                    .waypoints
                    .windows(2)
                    .map(|w| w[0].abs_diff(w[1]))
                    .sum::<usize>()
            }
        }
    }

    /// The full node sequence.
    pub fn expand(&self) -> Vec<usize> {
        if self.frame == Frame::Explicit {
            return self.waypoints.clone();
        }
        let mut out = Vec::with_capacity(self.expanded_len());
        out.push(self.waypoints[0]);
        for w in self.waypoints.windows(2) {
            let (a, b) = (w[0], w[1]);
            if a < b {
                out.extend(a + 1..=b);
            } else {
                out.extend((b..a).rev());
            }
        }
        if let Frame::Winding { n } = self.frame {
            for v in &mut out {
                *v = wrap(*v, n);
            }
        }
        out
    }
}

impl fmt::Display for Ride {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sep = if self.frame == Frame::Explicit {
            ", "
        } else {
            " -> "
        };
        for (i, v) in self.waypoints.iter().enumerate() {
            if i > 0 {
                f.write_str(sep)?;
            }
            write!(f, "{v}")?;
        }
        Ok(())
    }
}

/// A ride together with its exact cost.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Solution {
    pub ride: Ride,
    pub cost: Weight,
}

/// Cost of a line ride, summed over consecutive waypoints.
pub fn ride_cost(ride: &Ride, table: &PrefixTable) -> Result<Weight> {
    if ride.frame() != Frame::Line {
        return Err(Error::MalformedRide(format!(
            "prefix-table costing needs a line ride, got {:?}",
            ride.frame()
        )));
    }
    let n = table.len();
    if let Some(&bad) = ride.waypoints().iter().find(|&&v| v == 0 || v > n) {
        return Err(Error::MalformedRide(format!(
            "waypoint {bad} outside 1..={n}"
        )));
    }
    Ok(waypoint_cost(ride.waypoints(), table))
}

pub(crate) fn waypoint_cost(waypoints: &[usize], table: &PrefixTable) -> Weight {
    waypoints.windows(2).map(|w| table.dist(w[0], w[1])).sum()
}

/// Position of unrolled coordinate `u` on the infinite cover of a cycle.
fn winding_position(u: usize, table: &PrefixTable) -> Weight {
    // table spans nodes 1..=n+1 of the cycle read as a path
    let n = table.len() - 1;
    let laps = (u - 1) / n;
    let r = wrap(u, n);
    Weight::integer(laps as u64) * table.total() + table.cw(r)
}

impl Scenario {
    /// Exact cost of `ride` on this scenario's graph.
    pub fn ride_cost(&self, ride: &Ride) -> Result<Weight> {
        match (ride.frame(), self.topology()) {
            (Frame::Line, Topology::Path) => ride_cost(ride, self.graph().prefix_table().unwrap()),
            (Frame::Winding { n }, Topology::Cycle) if n == self.n() => {
                if ride.waypoints().contains(&0) {
                    return Err(Error::MalformedRide("winding coordinate 0".into()));
                }
                let table = self.graph().prefix_table().unwrap();
                Ok(ride
                    .waypoints()
                    .windows(2)
                    .map(|w| winding_position(w[0], table).abs_diff(winding_position(w[1], table)))
                    .sum())
            }
            (Frame::Explicit, _) => walk_cost(&ride.expand(), self),
            (frame, topo) => Err(Error::MalformedRide(format!(
                "a {frame:?} ride cannot live on a {topo} graph"
            ))),
        }
    }
}

/// Edge-weight sum of an explicit node sequence.
pub fn walk_cost(nodes: &[usize], scenario: &Scenario) -> Result<Weight> {
    let g = scenario.graph();
    for &v in nodes {
        g.check_node(v)
            .map_err(|e| Error::MalformedRide(e.to_string()))?;
    }
    nodes
        .windows(2)
        .map(|w| {
            g.edge_weight(w[0], w[1]).ok_or_else(|| {
                Error::MalformedRide(format!("nodes {} and {} are not adjacent", w[0], w[1]))
            })
        })
        .sum()
}

/// Why a ride is not feasible.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Violation {
    WrongStart { expected: usize, found: usize },
    WrongEnd { expected: usize, found: usize },
    Unsatisfied(Request),
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::WrongStart { expected, found } => {
                write!(f, "ride starts at {found}, expected {expected}")
            }
            Violation::WrongEnd { expected, found } => {
                write!(f, "ride ends at {found}, expected {expected}")
            }
            Violation::Unsatisfied(r) => write!(f, "request {r} is not satisfied"),
        }
    }
}

/// Checks an expanded ride against `scenario`.
///
/// `Ok(Ok(()))` means feasible; `Ok(Err(v))` reports the first violation
/// (start, then end, then requests in sorted order). Non-adjacent consecutive
/// nodes are a malformed ride and yield `Err`.
pub fn is_feasible(
    nodes: &[usize],
    scenario: &Scenario,
) -> Result<std::result::Result<(), Violation>> {
    let g = scenario.graph();
    if nodes.is_empty() {
        return Err(Error::MalformedRide("empty ride".into()));
    }
    for &v in nodes {
        g.check_node(v)
            .map_err(|e| Error::MalformedRide(e.to_string()))?;
    }
    for w in nodes.windows(2) {
        if g.edge_weight(w[0], w[1]).is_none() {
            return Err(Error::MalformedRide(format!(
                "nodes {} and {} are not adjacent",
                w[0], w[1]
            )));
        }
    }
    let (first, last) = (nodes[0], *nodes.last().unwrap());
    if first != scenario.start() {
        return Ok(Err(Violation::WrongStart {
            expected: scenario.start(),
            found: first,
        }));
    }
    if last != scenario.end() {
        return Ok(Err(Violation::WrongEnd {
            expected: scenario.end(),
            found: last,
        }));
    }
    // request (s, t) holds iff the first visit to s is no later than the last visit to t
    let n = g.n();
    let mut first_seen = vec![usize::MAX; n + 1];
    let mut last_seen = vec![usize::MAX; n + 1];
    for (i, &v) in nodes.iter().enumerate() {
        if first_seen[v] == usize::MAX {
            first_seen[v] = i;
        }
        last_seen[v] = i;
    }
    for &r in scenario.requests() {
        let ok = first_seen[r.s] != usize::MAX
            && last_seen[r.t] != usize::MAX
            && first_seen[r.s] <= last_seen[r.t];
        if !ok {
            return Ok(Err(Violation::Unsatisfied(r)));
        }
    }
    Ok(Ok(()))
}

/// [`is_feasible`] on the expansion of `ride`.
pub fn check_ride(ride: &Ride, scenario: &Scenario) -> Result<std::result::Result<(), Violation>> {
    is_feasible(&ride.expand(), scenario)
}
