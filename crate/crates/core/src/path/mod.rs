//! Optimal rides on path graphs.
//!
//! A path scenario falls into one of four cases. When every request endpoint
//! sits between the start and the end (in either direction) the request set
//! is normalized and the ride sweeps across it once. When all requests share a
//! single node the ride simply detours through it. Everything else goes to the
//! canonical-ride enumeration in [`inner`].

pub mod inner;
pub mod normalize;

use crate::error::{Error, Result};
use crate::graph::Topology;
use crate::ride::{check_ride, waypoint_cost, Ride, Solution};
use crate::scenario::{Request, Scenario};

pub use inner::{canonical_ride, inner_m_map, phase1_bounds, solve_inner, InnerCandidates};
pub use normalize::{normalize, normalize_naive, NormalForm};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CaseLabel {
    /// `start <= left <= right <= end`
    OuterForward,
    /// `end <= left <= right <= start`
    OuterReversed,
    /// Start or end strictly inside `(left, right)`, or both on the same side.
    InnerOrBoundary,
    /// All request endpoints coincide.
    Trivial,
}

pub fn classify(scenario: &Scenario) -> CaseLabel {
    let (s0, t0) = (scenario.start(), scenario.end());
    let (left, right) = (scenario.left(), scenario.right());
    if left == right {
        CaseLabel::Trivial
    } else if s0 <= left && right <= t0 {
        CaseLabel::OuterForward
    } else if t0 <= left && right <= s0 {
        CaseLabel::OuterReversed
    } else {
        CaseLabel::InnerOrBoundary
    }
}

/// `start -> s_1 -> t_1 -> ... -> s_h -> t_h -> end` over the normal form.
/// Assumes `start <= end` and that every request lies in `[start, end]`.
pub(crate) fn outer_waypoints(
    requests: &[Request],
    start: usize,
    end: usize,
) -> Result<Vec<usize>> {
    let nf = normalize(requests, start, end)?;
    let mut waypoints = Vec::with_capacity(2 * nf.len() + 2);
    waypoints.push(start);
    for r in nf.pairs() {
        waypoints.extend([r.s, r.t]);
    }
    waypoints.push(end);
    Ok(waypoints)
}

/// Optimal ride for an outer scenario of either orientation.
pub fn solve_outer(scenario: &Scenario) -> Result<Ride> {
    scenario.require(Topology::Path)?;
    let (s0, t0) = (scenario.start(), scenario.end());
    let (left, right) = (scenario.left(), scenario.right());
    if s0 <= left && right <= t0 {
        Ok(Ride::on_line(outer_waypoints(scenario.requests(), s0, t0)?))
    } else if t0 <= left && right <= s0 {
        let n = scenario.n();
        let sym = |v: usize| n - v + 1;
        let mirrored: Vec<Request> = scenario
            .requests()
            .iter()
            .map(|r| Request::new(sym(r.s), sym(r.t)))
            .collect();
        let waypoints = outer_waypoints(&mirrored, sym(s0), sym(t0))?;
        Ok(Ride::on_line(waypoints.into_iter().map(sym)))
    } else {
        Err(Error::Precondition(format!(
            "not an outer scenario: start={s0}, end={t0}, requests span [{left}, {right}]"
        )))
    }
}

/// Dispatches on the case label without expanding or re-checking the ride.
pub(crate) fn solve_path_unchecked(scenario: &Scenario) -> Result<(Ride, CaseLabel)> {
    let label = classify(scenario);
    let ride = match label {
        CaseLabel::Trivial => Ride::on_line([scenario.start(), scenario.left(), scenario.end()]),
        CaseLabel::OuterForward | CaseLabel::OuterReversed => solve_outer(scenario)?,
        CaseLabel::InnerOrBoundary => solve_inner(scenario)?,
    };
    Ok((ride, label))
}

/// Optimal ride and its exact cost for a path scenario.
///
/// The ride is expanded and checked for feasibility before it is returned.
pub fn solve_path(scenario: &Scenario) -> Result<Solution> {
    scenario.require(Topology::Path)?;
    let (ride, label) = solve_path_unchecked(scenario)?;
    if let Err(v) = check_ride(&ride, scenario)? {
        return Err(Error::Internal(format!(
            "{label:?} ride {ride} is infeasible: {v}"
        )));
    }
    let cost = waypoint_cost(ride.waypoints(), scenario.graph().prefix_table().unwrap());
    Ok(Solution { ride, cost })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Graph;
    use crate::weight::Weight;

    fn unit(n: usize, s0: usize, t0: usize, pairs: &[(usize, usize)]) -> Scenario {
        Scenario::new(
            Graph::unit_path(n).unwrap(),
            s0,
            t0,
            pairs.iter().map(|&p| Request::from(p)),
        )
        .unwrap()
    }

    fn seven_requests() -> Scenario {
        unit(
            7,
            1,
            7,
            &[(2, 3), (4, 4), (4, 2), (3, 1), (2, 1), (6, 5), (5, 7)],
        )
    }

    #[test]
    fn labels() {
        assert_eq!(classify(&seven_requests()), CaseLabel::OuterForward);
        assert_eq!(
            classify(&unit(7, 7, 1, &[(3, 5)])),
            CaseLabel::OuterReversed
        );
        assert_eq!(
            classify(&unit(7, 3, 7, &[(1, 5)])),
            CaseLabel::InnerOrBoundary
        );
        assert_eq!(
            classify(&unit(7, 1, 1, &[(3, 5)])),
            CaseLabel::InnerOrBoundary
        );
        assert_eq!(classify(&unit(7, 2, 3, &[(5, 5)])), CaseLabel::Trivial);
    }

    #[test]
    fn outer_example_ride() {
        let ride = solve_outer(&seven_requests()).unwrap();
        assert_eq!(ride.waypoints(), &[1, 4, 1, 6, 5, 7]);
        let sol = solve_path(&seven_requests()).unwrap();
        assert_eq!(sol.cost, Weight::integer(14));
    }

    #[test]
    fn outer_without_backward_requests() {
        let sc = unit(6, 2, 5, &[(2, 4), (3, 5)]);
        assert_eq!(solve_outer(&sc).unwrap().waypoints(), &[2, 5]);
    }

    #[test]
    fn outer_reversed_mirrors() {
        // mirror image of the worked example
        let sc = seven_requests().symmetrize().unwrap();
        let ride = solve_outer(&sc).unwrap();
        assert_eq!(ride.waypoints(), &[7, 4, 7, 2, 3, 1]);
        assert_eq!(solve_path(&sc).unwrap().cost, Weight::integer(14));
    }

    #[test]
    fn outer_rejects_inner() {
        assert!(matches!(
            solve_outer(&unit(7, 3, 7, &[(1, 5)])),
            Err(Error::Precondition(_))
        ));
    }

    #[test]
    fn single_node_requests() {
        let sol = solve_path(&unit(6, 2, 3, &[(5, 5)])).unwrap();
        assert_eq!(sol.ride.waypoints(), &[2, 5, 3]);
        assert_eq!(sol.cost, Weight::integer(5));

        let sol = solve_path(&unit(6, 4, 4, &[(4, 4)])).unwrap();
        assert_eq!(sol.ride.waypoints(), &[4]);
        assert_eq!(sol.cost, Weight::ZERO);

        let sol = solve_path(&unit(6, 1, 6, &[(3, 3)])).unwrap();
        assert_eq!(sol.ride.waypoints(), &[1, 6]);
    }

    #[test]
    fn rejects_cycles() {
        let g = Graph::unit_cycle(4).unwrap();
        let sc = Scenario::new(g, 1, 1, [Request::new(2, 3)]).unwrap();
        assert!(matches!(solve_path(&sc), Err(Error::WrongTopology { .. })));
    }
}
