//! Exact single-vehicle ride sharing on paths and cycles.
//!
//! A vehicle with unlimited capacity must carry every request `(s, t)` from
//! `s` to `t` while driving from a start node to an end node. [`solve_path`]
//! and [`solve_cycle`] compute optimal rides in near-linear and
//! `O(|V_C|^2 (|C| log |C| + |V|))` time. [`oracle`] searches the full state
//! space and works on any small graph.

pub mod cycle;
pub mod error;
pub mod gen;
pub mod graph;
pub mod heap;
pub mod oracle;
pub mod path;
pub mod ride;
pub mod scenario;
pub mod weight;

pub use cycle::{solve_cycle, solve_cycle_with, CycleOptions};
pub use error::{Error, Result};
pub use graph::{Graph, PrefixTable, Topology};
pub use oracle::{brute_force_optimal, brute_force_optimal_with_budget};
pub use path::normalize::{normalize, normalize_naive, NormalForm};
pub use path::{classify, solve_inner, solve_outer, solve_path, CaseLabel};
pub use ride::{check_ride, is_feasible, walk_cost, Frame, Ride, Solution, Violation};
pub use scenario::{wrap, Request, Scenario};
pub use weight::Weight;
