//! Verification suites, their configuration, report formats and the value
//! tables the command-line tool prints.

mod config;
mod report;
mod runners;
mod tables;

pub use config::{
    BesselConfig, ContractionConfig, GroupsConfig, HermiteConfig, OutputFormat, SuiteConfig,
    Tolerances, CONFIG_ENV,
};
pub use report::{CheckRecord, ResidualValue, RunReport, Status, SuiteReport};
pub use runners::{run_suite, SuiteName, FLOW_DIAGNOSTIC_POINTS};
pub use tables::{emit_table, format_sig15, TableKind};

use crate::error::Result;

/// Run every suite in `names` in order.
pub fn run(names: &[SuiteName], config: &SuiteConfig) -> Result<RunReport> {
    let suites = names
        .iter()
        .map(|&n| run_suite(n, config))
        .collect::<Result<_>>()?;
    Ok(RunReport {
        config: config.clone(),
        suites,
    })
}
