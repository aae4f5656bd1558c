//! JSON instance and solution files.
//!
//! Weights are written as exact rational strings (`"3"`, `"1/2"`); plain
//! JSON integers are accepted on input.

use serde::{Deserialize, Serialize};

use rideshare_core::{Graph, Request, Ride, Scenario, Solution, Topology, Weight};

use crate::error::CliError;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum WeightText {
    Int(i64),
    Text(String),
}

impl WeightText {
    fn parse(&self) -> Result<Weight, CliError> {
        let text = match self {
            WeightText::Int(v) if *v < 0 => {
                return Err(CliError::Instance(format!("negative weight {v}")))
            }
            WeightText::Int(v) => return Ok(Weight::integer(*v as u64)),
            WeightText::Text(s) => s.trim(),
        };
        if text.starts_with('-') {
            return Err(CliError::Instance(format!("negative weight {text:?}")));
        }
        text.parse()
            .map_err(|e| CliError::Instance(format!("bad weight {text:?}: {e}")))
    }
}

impl From<Weight> for WeightText {
    fn from(w: Weight) -> Self {
        WeightText::Text(w.to_string())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct InstanceFile {
    pub topology: String,
    pub n: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub weights: Option<Vec<WeightText>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub edges: Option<Vec<(usize, usize, WeightText)>>,
    pub start: usize,
    pub end: usize,
    pub requests: Vec<(usize, usize)>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SolverKind {
    Path,
    Cycle,
    Oracle,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SolutionFile {
    pub cost: String,
    /// Turning points for `path`, unrolled turning points for `cycle`
    /// (every node read modulo `n`), every node for `oracle`.
    pub waypoints: Vec<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub ride: Option<Vec<usize>>,
    pub feasible: bool,
    pub solver: SolverKind,
}

fn topology(name: &str) -> Result<Topology, CliError> {
    match name {
        "path" => Ok(Topology::Path),
        "cycle" => Ok(Topology::Cycle),
        "general" => Ok(Topology::General),
        other => Err(CliError::Schema(format!(
            "unknown topology {other:?} (expected path, cycle or general)"
        ))),
    }
}

fn weights(list: &[WeightText]) -> Result<Vec<Weight>, CliError> {
    list.iter().map(WeightText::parse).collect()
}

pub fn build_scenario(file: &InstanceFile) -> Result<Scenario, CliError> {
    let topo = topology(&file.topology)?;
    let n = file.n;
    if n == 0 {
        return Err(CliError::Instance("n must be at least 1".into()));
    }
    let graph = match (topo, &file.weights, &file.edges) {
        (Topology::General, None, Some(edges)) => {
            let parsed = edges
                .iter()
                .map(|(u, v, w)| Ok((*u, *v, w.parse()?)))
                .collect::<Result<Vec<_>, CliError>>()?;
            Graph::general(n, parsed)?
        }
        (Topology::General, _, _) => {
            return Err(CliError::Schema(
                "a general graph needs `edges` and no `weights`".into(),
            ))
        }
        (_, Some(list), None) => {
            let want = if topo == Topology::Path { n - 1 } else { n };
            if topo == Topology::Cycle && n <= 2 {
                return Err(CliError::Instance(format!(
                    "a cycle needs at least 3 nodes, got n = {n}"
                )));
            }
            if list.len() != want {
                return Err(CliError::Schema(format!(
                    "a {topo} with n = {n} needs {want} weights, got {}",
                    list.len()
                )));
            }
            let w = weights(list)?;
            if topo == Topology::Path {
                Graph::path(w)
            } else {
                Graph::cycle(w)?
            }
        }
        _ => {
            return Err(CliError::Schema(format!(
                "a {topo} needs `weights` and no `edges`"
            )))
        }
    };
    Ok(Scenario::new(
        graph,
        file.start,
        file.end,
        file.requests.iter().map(|&p| Request::from(p)),
    )?)
}

pub fn parse_instance(bytes: &[u8]) -> Result<Scenario, CliError> {
    let file: InstanceFile =
        serde_json::from_slice(bytes).map_err(|e| CliError::Schema(e.to_string()))?;
    build_scenario(&file)
}

pub fn instance_file(sc: &Scenario) -> InstanceFile {
    let g = sc.graph();
    let (weights, edges) = match g.topology() {
        Topology::General => (
            None,
            Some(
                g.edge_list()
                    .into_iter()
                    .map(|(u, v, w)| (u, v, w.into()))
                    .collect(),
            ),
        ),
        _ => (
            Some(
                g.line_weights()
                    .unwrap()
                    .iter()
                    .map(|&w| w.into())
                    .collect(),
            ),
            None,
        ),
    };
    InstanceFile {
        topology: g.topology().to_string(),
        n: g.n(),
        weights,
        edges,
        start: sc.start(),
        end: sc.end(),
        requests: sc.requests().iter().map(|r| (r.s, r.t)).collect(),
    }
}

pub fn solution_file(sol: &Solution, solver: SolverKind, emit_ride: bool) -> SolutionFile {
    SolutionFile {
        cost: sol.cost.to_string(),
        waypoints: sol.ride.waypoints().to_vec(),
        ride: emit_ride.then(|| sol.ride.expand()),
        feasible: true,
        solver,
    }
}

/// The ride a solution file describes, checked for well-formed coordinates.
pub fn ride_of(file: &SolutionFile, sc: &Scenario) -> Result<Ride, CliError> {
    let n = sc.n();
    if file.waypoints.is_empty() {
        return Err(CliError::Schema(
            "a ride needs at least one waypoint".into(),
        ));
    }
    let (limit, ride) = match file.solver {
        SolverKind::Path => (n, Ride::on_line(file.waypoints.iter().copied())),
        // cycle solutions stay within four laps of the unrolled cover
        SolverKind::Cycle => (4 * n, Ride::winding(file.waypoints.iter().copied(), n)),
        SolverKind::Oracle => (n, Ride::explicit(file.waypoints.clone())),
    };
    if let Some(bad) = file.waypoints.iter().find(|&&v| v == 0 || v > limit) {
        return Err(CliError::Infeasible(format!(
            "waypoint {bad} is outside 1..={limit}"
        )));
    }
    let applies = matches!(
        (file.solver, sc.topology()),
        (SolverKind::Path, Topology::Path)
            | (SolverKind::Cycle, Topology::Cycle)
            | (SolverKind::Oracle, _)
    );
    if !applies {
        return Err(CliError::Usage(format!(
            "a {:?} solution does not apply to a {} instance",
            file.solver,
            sc.topology()
        )));
    }
    Ok(ride)
}
