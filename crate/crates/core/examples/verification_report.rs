//! Run a suite programmatically and print the report as CSV.
use liegen::suite::{run, OutputFormat, SuiteConfig, SuiteName};

fn main() -> liegen::Result<()> {
    let mut cfg = SuiteConfig::default();
    cfg.cap_max_n(16);
    let report = run(&[SuiteName::Groups, SuiteName::Hermite], &cfg)?;
    print!("{}", report.render(OutputFormat::Csv));
    println!("passed: {}", report.passed());
    Ok(())
}
