//! Scenario-driven front end for the `gspace` library: load a group and a
//! binary action from JSON, run queries and render deterministic reports.

pub mod error;
pub mod exec;
pub mod report;
pub mod reproduce;
pub mod scenario;

pub use error::CliError;
pub use exec::{normalizer_sweep, run_query, run_scenario};
pub use report::{Format, Report};
pub use reproduce::{reproduce, Options, EXAMPLES};
pub use scenario::Scenario;
