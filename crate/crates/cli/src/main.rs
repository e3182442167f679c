use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use gspace::catalog;
use gspace_cli::error::{CliError, EXIT_MISMATCH, EXIT_OK};
use gspace_cli::exec::{normalizer_sweep, run_query, run_scenario};
use gspace_cli::report::{Format, Report};
use gspace_cli::reproduce::{reproduce, Options, EXAMPLES};
use gspace_cli::scenario::{Query, Scenario};

#[derive(Parser)]
#[command(name = "gspace", version, about = "Binary G-space toolkit: orbits, bi-invariant sets and distributivity")]
struct Cli {
    /// Report format.
    #[arg(long, value_enum, global = true, default_value_t = Format::Text)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check the binary action axioms; runs the scenario's verify_axioms
    /// queries, or one over the whole carrier.
    VerifyAxioms { scenario: PathBuf },
    /// Compute the orbit layers of one point.
    Orbit {
        scenario: PathBuf,
        #[arg(long)]
        point: String,
        #[arg(long)]
        max_depth: Option<usize>,
    },
    /// Decide distributivity; runs the scenario's check_distributive
    /// queries, or one over the whole carrier.
    CheckDistributive { scenario: PathBuf },
    /// Compare both sides of the normalizer criterion at one point, at the
    /// scenario's listed points, or at every point of a finite carrier.
    CheckNormalizerCriterion {
        scenario: PathBuf,
        #[arg(long)]
        point: Option<String>,
    },
    /// Run every query of a scenario in order.
    Run { scenario: PathBuf },
    /// Run a built-in example and compare with the published values.
    Reproduce {
        /// Example id; `gspace reproduce list` prints them.
        id: String,
        /// Catalog group for group-dependent examples.
        #[arg(long)]
        group: Option<String>,
        /// Layer depth for layer examples.
        #[arg(long)]
        depth: Option<usize>,
    },
    /// List the built-in groups.
    Catalog,
}

/// Runs the scenario's queries named `op`, or `fallback` when it has none.
fn run_selected(scenario: &Scenario, op: &str, fallback: Query) -> Result<Report, CliError> {
    let instance = scenario.build()?;
    let mut queries: Vec<&Query> = scenario.queries.iter().filter(|q| q.name() == op).collect();
    if queries.is_empty() {
        queries.push(&fallback);
    }
    let entries =
        queries.into_iter().map(|q| run_query(&instance, q, &scenario.limits)).collect::<Result<Vec<_>, _>>()?;
    Ok(Report::new(scenario.title(), entries))
}

fn catalog_report() -> Report {
    let mut entry = gspace_cli::report::Entry::new("catalog");
    for (name, g) in catalog::all() {
        entry.line(format!("{name}: order {}{}", g.order(), if g.is_abelian() { ", abelian" } else { "" }));
    }
    Report::new("catalog", vec![entry])
}

fn examples_report() -> Report {
    let mut entry = gspace_cli::report::Entry::new("examples");
    for (id, about) in EXAMPLES {
        entry.line(format!("{id}: {about}"));
    }
    Report::new("reproduce list", vec![entry])
}

fn execute(command: Command) -> Result<Report, CliError> {
    match command {
        Command::VerifyAxioms { scenario } => run_selected(
            &Scenario::load(&scenario)?,
            "verify_axioms",
            Query::VerifyAxioms { domain: Vec::new(), expect: None },
        ),
        Command::Orbit { scenario, point, max_depth } => {
            let scenario = Scenario::load(&scenario)?;
            let instance = scenario.build()?;
            let query = Query::Orbit { point, max_depth, expect_layers: None, expect_converged_at: None };
            let entry = run_query(&instance, &query, &scenario.limits)?;
            Ok(Report::new(scenario.title(), vec![entry]))
        }
        Command::CheckDistributive { scenario } => run_selected(
            &Scenario::load(&scenario)?,
            "check_distributive",
            Query::CheckDistributive { domain: Vec::new(), expect: None },
        ),
        Command::CheckNormalizerCriterion { scenario, point } => {
            let scenario = Scenario::load(&scenario)?;
            match point {
                Some(point) => {
                    let instance = scenario.build()?;
                    let query = Query::NormalizerCriterion { point, expect_bi_invariant: None };
                    let entry = run_query(&instance, &query, &scenario.limits)?;
                    Ok(Report::new(scenario.title(), vec![entry]))
                }
                None if scenario.queries.iter().any(|q| q.name() == "normalizer_criterion") => {
                    let instance = scenario.build()?;
                    let entries = scenario
                        .queries
                        .iter()
                        .filter(|q| q.name() == "normalizer_criterion")
                        .map(|q| run_query(&instance, q, &scenario.limits))
                        .collect::<Result<Vec<_>, _>>()?;
                    Ok(Report::new(scenario.title(), entries))
                }
                None => normalizer_sweep(&scenario),
            }
        }
        Command::Run { scenario } => run_scenario(&Scenario::load(&scenario)?),
        Command::Reproduce { id, .. } if id == "list" => Ok(examples_report()),
        Command::Reproduce { id, group, depth } => reproduce(&id, &Options { group, depth }),
        Command::Catalog => Ok(catalog_report()),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match execute(cli.command) {
        Ok(report) => {
            print!("{}", report.render(cli.format));
            ExitCode::from(if report.passed { EXIT_OK } else { EXIT_MISMATCH } as u8)
        }
        Err(e) => {
            eprintln!("gspace: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
