use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde::Serialize;

use rideshare_core::gen::{cycle_with_endpoint_pool, generate, rng, GenConfig};
use rideshare_core::oracle::{brute_force_optimal_with_budget, DEFAULT_STATE_BUDGET};
use rideshare_core::{check_ride, solve_cycle, solve_path, Scenario, Solution, Topology, Weight};

use crate::error::CliError;
use crate::files::{instance_file, ride_of, solution_file, SolutionFile, SolverKind};

pub fn solve(sc: &Scenario, emit_ride: bool, force_oracle: bool) -> Result<SolutionFile, CliError> {
    match sc.topology() {
        Topology::Path => Ok(solution_file(&solve_path(sc)?, SolverKind::Path, emit_ride)),
        Topology::Cycle => Ok(solution_file(
            &solve_cycle(sc)?,
            SolverKind::Cycle,
            emit_ride,
        )),
        Topology::General if force_oracle => oracle(sc, None, true, emit_ride),
        Topology::General => Err(CliError::Usage(
            "general graphs have no exact fast solver; run `oracle` or pass --force-oracle".into(),
        )),
    }
}

/// `force` lifts the state budget entirely.
pub fn oracle(
    sc: &Scenario,
    budget: Option<u64>,
    force: bool,
    emit_ride: bool,
) -> Result<SolutionFile, CliError> {
    let budget = if force {
        u64::MAX
    } else {
        budget.unwrap_or(DEFAULT_STATE_BUDGET)
    };
    let sol = brute_force_optimal_with_budget(sc, budget)?;
    Ok(solution_file(&sol, SolverKind::Oracle, emit_ride))
}

/// Checks a solution against its instance and returns the confirmed cost.
pub fn verify(sc: &Scenario, file: &SolutionFile) -> Result<Weight, CliError> {
    let claimed: Weight = file
        .cost
        .parse()
        .map_err(|e| CliError::Schema(format!("bad cost {:?}: {e}", file.cost)))?;
    let ride = ride_of(file, sc)?;
    if let Err(v) = check_ride(&ride, sc)? {
        return Err(CliError::Infeasible(v.to_string()));
    }
    if !file.feasible {
        return Err(CliError::CostMismatch(
            "the ride is feasible but the file says otherwise".into(),
        ));
    }
    if let Some(nodes) = &file.ride {
        if *nodes != ride.expand() {
            return Err(CliError::CostMismatch(
                "`ride` does not expand `waypoints`".into(),
            ));
        }
    }
    let actual = sc.ride_cost(&ride)?;
    if actual != claimed {
        return Err(CliError::CostMismatch(format!(
            "file claims {claimed}, ride costs {actual}"
        )));
    }
    Ok(actual)
}

pub fn gen(cfg: &GenConfig, seed: u64) -> Result<String, CliError> {
    let sc = generate(cfg, seed)?;
    Ok(to_json(&instance_file(&sc)))
}

pub fn to_json<T: Serialize>(value: &T) -> String {
    let mut text = serde_json::to_string_pretty(value).expect("plain data serializes");
    text.push('\n');
    text
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Suite {
    Path,
    Cycle,
}

#[derive(Debug, Clone)]
pub struct BenchPlan {
    pub suite: Suite,
    /// Node counts for `path`, endpoint counts for `cycle`.
    pub sizes: Vec<usize>,
    pub reps: usize,
    pub seed: u64,
    /// Requests per node for `path` is `1 / request_ratio`.
    pub request_ratio: usize,
    /// Fixed cycle length and request count for `cycle`.
    pub cycle_n: usize,
    pub cycle_requests: usize,
    pub threads: usize,
}

#[derive(Debug, Clone, Serialize)]
pub struct BenchRow {
    pub suite: &'static str,
    pub n: usize,
    pub requests: usize,
    pub endpoints: usize,
    pub reps: usize,
    pub median_ms: f64,
    pub min_ms: f64,
    pub max_ms: f64,
    pub cost: String,
}

fn ms(d: Duration) -> f64 {
    d.as_secs_f64() * 1e3
}

fn measure(
    sc: &Scenario,
    reps: usize,
    solve: fn(&Scenario) -> rideshare_core::Result<Solution>,
) -> Result<(Vec<Duration>, Weight), CliError> {
    let mut times = Vec::with_capacity(reps);
    let mut cost = Weight::ZERO;
    for _ in 0..reps {
        let clock = Instant::now();
        cost = solve(sc)?.cost;
        times.push(clock.elapsed());
    }
    times.sort();
    Ok((times, cost))
}

fn bench_one(plan: &BenchPlan, size: usize) -> Result<BenchRow, CliError> {
    let seed = plan.seed.wrapping_add(size as u64);
    let (sc, suite, solve): (
        Scenario,
        _,
        fn(&Scenario) -> rideshare_core::Result<Solution>,
    ) = match plan.suite {
        Suite::Path => {
            let cfg = GenConfig::new(Topology::Path, size, (size / plan.request_ratio).max(1));
            (generate(&cfg, seed)?, "path", solve_path)
        }
        Suite::Cycle => {
            let sc = cycle_with_endpoint_pool(
                &mut rng(seed),
                plan.cycle_n,
                size,
                plan.cycle_requests,
                1,
            )?;
            (sc, "cycle", solve_cycle)
        }
    };
    let (times, cost) = measure(&sc, plan.reps, solve)?;
    Ok(BenchRow {
        suite,
        n: sc.n(),
        requests: sc.requests().len(),
        endpoints: sc.endpoint_nodes().len(),
        reps: plan.reps,
        median_ms: ms(times[times.len() / 2]),
        min_ms: ms(times[0]),
        max_ms: ms(*times.last().unwrap()),
        cost: cost.to_string(),
    })
}

/// One JSON line per size, in the order given.
pub fn bench(plan: &BenchPlan) -> Result<String, CliError> {
    if plan.sizes.is_empty() || plan.reps == 0 || plan.request_ratio == 0 {
        return Err(CliError::Usage(
            "bench needs sizes, --reps >= 1 and --request-ratio >= 1".into(),
        ));
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(plan.threads.max(1))
        .build()
        .map_err(|e| CliError::Usage(e.to_string()))?;
    let rows: Vec<Result<BenchRow, CliError>> = pool.install(|| {
        plan.sizes
            .par_iter()
            .map(|&size| bench_one(plan, size))
            .collect()
    });
    let mut out = String::new();
    for row in rows {
        out.push_str(&serde_json::to_string(&row?).expect("plain data serializes"));
        out.push('\n');
    }
    Ok(out)
}
