//! Command implementations behind the `rideshare` binary.

pub mod commands;
pub mod error;
pub mod files;

pub use error::CliError;
pub use files::{
    build_scenario, instance_file, parse_instance, InstanceFile, SolutionFile, SolverKind,
};
