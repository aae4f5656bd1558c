use thiserror::Error;

use crate::graph::Topology;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("node {node} is outside 1..={n}")]
    NodeOutOfRange { node: usize, n: usize },

    #[error("a scenario needs at least one request")]
    EmptyRequests,

    #[error("invalid graph: {0}")]
    InvalidGraph(String),

    #[error("invalid weight {0:?}")]
    InvalidWeight(String),

    #[error("expected a {expected} graph, got a {found} graph")]
    WrongTopology { expected: Topology, found: Topology },

    #[error("malformed ride: {0}")]
    MalformedRide(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("tuple rejected: {0}")]
    TupleRejected(String),

    #[error("oracle state space of {states} states exceeds the budget of {budget}")]
    OracleTooLarge { states: u128, budget: u64 },

    #[error("no feasible ride exists")]
    Infeasible,

    #[error("internal invariant violated: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
