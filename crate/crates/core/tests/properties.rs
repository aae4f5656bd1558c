mod common;

use proptest::prelude::*;
use rideshare_core::cycle::{enumerate_tuples, unrolled_graph, window_nodes};
use rideshare_core::*;

fn weights(n: usize) -> impl Strategy<Value = Vec<Weight>> {
    prop::collection::vec((1u64..=5).prop_map(Weight::integer), n)
}

fn nodes(n: usize, k: usize) -> impl Strategy<Value = (usize, usize, Vec<(usize, usize)>)> {
    (1..=n, 1..=n, prop::collection::vec((1..=n, 1..=n), 1..=k))
}

fn path_scenario(max_n: usize, max_k: usize) -> impl Strategy<Value = Scenario> {
    (2..=max_n)
        .prop_flat_map(move |n| (weights(n - 1), nodes(n, max_k)))
        .prop_map(|(w, (s0, t0, reqs))| {
            Scenario::new(Graph::path(w), s0, t0, reqs.into_iter().map(Request::from)).unwrap()
        })
}

fn cycle_scenario(max_n: usize, max_k: usize) -> impl Strategy<Value = Scenario> {
    (3..=max_n)
        .prop_flat_map(move |n| (weights(n), nodes(n, max_k)))
        .prop_map(|(w, (s0, t0, reqs))| {
            Scenario::new(
                Graph::cycle(w).unwrap(),
                s0,
                t0,
                reqs.into_iter().map(Request::from),
            )
            .unwrap()
        })
}

/// Unrolled coordinates of an explicit cycle ride, shifted so the lowest is in `1..=n`.
fn virtual_nodes(ride: &[usize], n: usize) -> Vec<usize> {
    let mut laps = vec![0i64];
    for w in ride.windows(2) {
        let last = *laps.last().unwrap();
        laps.push(match (w[0], w[1]) {
            (a, 1) if a == n => last + 1,
            (1, b) if b == n => last - 1,
            _ => last,
        });
    }
    let low = *laps.iter().min().unwrap();
    ride.iter()
        .zip(&laps)
        .map(|(&v, &l)| v + (l - low) as usize * n)
        .collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(400))]

    #[test]
    fn path_solver_is_optimal(sc in path_scenario(12, 6)) {
        let sol = solve_path(&sc).unwrap();
        prop_assert!(check_ride(&sol.ride, &sc).unwrap().is_ok());
        prop_assert_eq!(sc.ride_cost(&sol.ride).unwrap(), sol.cost);
        prop_assert_eq!(sol.cost, brute_force_optimal(&sc).unwrap().cost);
    }

    #[test]
    fn cycle_solver_is_optimal(sc in cycle_scenario(8, 4)) {
        let strict = CycleOptions { parallel: false, check_every_tuple: true };
        let sol = solve_cycle_with(&sc, &strict).unwrap();
        prop_assert!(check_ride(&sol.ride, &sc).unwrap().is_ok());
        prop_assert_eq!(sol.cost, brute_force_optimal(&sc).unwrap().cost);
    }

    #[test]
    fn oracle_witness_is_valid(sc in cycle_scenario(7, 4)) {
        let sol = brute_force_optimal(&sc).unwrap();
        prop_assert!(is_feasible(sol.ride.waypoints(), &sc).unwrap().is_ok());
        prop_assert_eq!(walk_cost(sol.ride.waypoints(), &sc).unwrap(), sol.cost);
    }

    #[test]
    fn normal_form_is_well_formed(
        lo in 1usize..10,
        span in 0usize..15,
        raw in prop::collection::vec((0usize..16, 0usize..16), 1..12),
    ) {
        let hi = lo + span;
        let reqs: Vec<Request> = raw
            .into_iter()
            .map(|(a, b)| Request::new(lo + a % (span + 1), lo + b % (span + 1)))
            .collect();
        let nf = normalize(&reqs, 1, hi + 1).unwrap();
        prop_assert!(nf.is_well_formed());
        prop_assert_eq!(nf, normalize_naive(&reqs, 1, hi + 1).unwrap());
    }

    #[test]
    fn tuple_count_is_bounded(sc in cycle_scenario(10, 5)) {
        let k = sc.key_nodes().len();
        prop_assert!(enumerate_tuples(&sc).unwrap().len() <= 9 * (3 * k).pow(2));
    }

    /// An optimal cycle ride read on the unrolled path is feasible for the
    /// lifted requests of its own window plus the direction request.
    #[test]
    fn optimal_rides_lift_to_the_unrolled_path(sc in cycle_scenario(7, 4)) {
        let n = sc.n();
        let ride = brute_force_optimal(&sc).unwrap().ride;
        let tau = virtual_nodes(ride.waypoints(), n);
        let alpha = *tau.iter().min().unwrap();
        let beta = *tau.iter().max().unwrap();
        prop_assert!((1..=n).contains(&alpha));
        prop_assume!(beta <= 3 * n);
        for w in tau.windows(2) {
            prop_assert_eq!(w[0].abs_diff(w[1]), 1);
        }
        let first_low = tau.iter().position(|&v| v == alpha).unwrap();
        let first_high = tau.iter().position(|&v| v == beta).unwrap();
        let direction = if first_low <= first_high {
            Request::new(alpha, beta)
        } else {
            Request::new(beta, alpha)
        };
        let window: Vec<usize> = window_nodes(alpha, beta, n).map(|r| r.collect()).unwrap_or_default();
        let copy = |x: usize| window.iter().copied().find(|&v| wrap(v, n) == x);
        let mut lifted: Vec<Request> = sc
            .requests()
            .iter()
            .filter_map(|r| Some(Request::new(copy(r.s)?, copy(r.t)?)))
            .collect();
        lifted.push(direction);
        let unrolled = Scenario::new(unrolled_graph(sc.graph()).unwrap(), tau[0], *tau.last().unwrap(), lifted).unwrap();
        prop_assert!(is_feasible(&tau, &unrolled).unwrap().is_ok());
        prop_assert_eq!(walk_cost(&tau, &unrolled).unwrap(), walk_cost(ride.waypoints(), &sc).unwrap());
    }
}

#[test]
fn stratified_boundary_cases_are_optimal() {
    let mut rng = common::seeded(99);
    for shape in [common::PathShape::SameSide, common::PathShape::SingleNode] {
        for _ in 0..300 {
            let sc = common::path_instance(&mut rng, shape, 10, 5, 4);
            assert_eq!(
                solve_path(&sc).unwrap().cost,
                brute_force_optimal(&sc).unwrap().cost,
                "{sc:?}"
            );
        }
    }
}
