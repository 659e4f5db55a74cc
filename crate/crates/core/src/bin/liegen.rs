use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use liegen::suite::{
    emit_table, run_suite, OutputFormat, RunReport, SuiteConfig, SuiteName, TableKind,
};
use liegen::Error;

#[derive(Parser)]
#[command(
    name = "liegen",
    version,
    about = "Verify Hermite, Bessel and contraction identities from Lie group representations"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run a verification suite: groups, hermite, bessel, contraction, diagnostics or all.
    Verify {
        suite: String,
        #[arg(long)]
        max_n: Option<u32>,
        /// Override every absolute residual tolerance.
        #[arg(long)]
        tol: Option<f64>,
        #[arg(long)]
        format: Option<Format>,
        #[arg(long)]
        out: Option<PathBuf>,
        /// Config file; defaults to $LIEGEN_CONFIG.
        #[arg(long)]
        config: Option<PathBuf>,
        #[arg(long)]
        seed: Option<u64>,
        /// Record wall time per suite (makes output non-reproducible).
        #[arg(long)]
        timing: bool,
    },
    /// Print a table: hermite_coeffs, bessel_values, contraction_convergence or group_demo.
    Table {
        kind: String,
        /// key=value parameters.
        params: Vec<String>,
    },
    /// Worked examples.
    Demo {
        #[command(subcommand)]
        what: Demo,
    },
}

#[derive(Subcommand)]
enum Demo {
    Group { group: GroupArg },
}

#[derive(Clone, Copy, ValueEnum)]
enum GroupArg {
    H3,
    E2,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Csv,
    Text,
}

impl From<Format> for OutputFormat {
    fn from(f: Format) -> Self {
        match f {
            Format::Json => OutputFormat::Json,
            Format::Csv => OutputFormat::Csv,
            Format::Text => OutputFormat::Text,
        }
    }
}

fn exit_code(e: &Error) -> u8 {
    match e {
        Error::Config(_) => 2,
        Error::Envelope(_) | Error::Precondition(_) | Error::OrderTooLarge { .. } => 3,
        _ => 1,
    }
}

fn run(cli: Cli) -> Result<u8, Error> {
    match cli.command {
        Command::Verify {
            suite,
            max_n,
            tol,
            format,
            out,
            config,
            seed,
            timing,
        } => {
            let names = SuiteName::parse_selection(&suite)?;
            let mut cfg = SuiteConfig::load(config.as_deref())?;
            if let Some(n) = max_n {
                cfg.cap_max_n(n);
            }
            if let Some(t) = tol {
                cfg.tolerances.override_residuals(t);
            }
            if let Some(s) = seed {
                cfg.seed = s;
            }
            if let Some(f) = format {
                cfg.format = f.into();
            }
            cfg.validate()?;
            let mut suites = Vec::new();
            for name in names {
                let start = Instant::now();
                let mut rep = run_suite(name, &cfg)?;
                if timing {
                    rep.wall_time_ms = Some(start.elapsed().as_millis() as u64);
                }
                suites.push(rep);
            }
            let report = RunReport {
                config: cfg.clone(),
                suites,
            };
            let text = report.render(cfg.format);
            match out {
                Some(path) => std::fs::write(&path, text)
                    .map_err(|e| Error::Config(format!("{}: {e}", path.display())))?,
                None => print!("{text}"),
            }
            Ok(if report.passed() { 0 } else { 1 })
        }
        Command::Table { kind, params } => {
            print!("{}", emit_table(kind.parse::<TableKind>()?, &params)?);
            Ok(0)
        }
        Command::Demo {
            what: Demo::Group { group },
        } => {
            let g = match group {
                GroupArg::H3 => "group=h3",
                GroupArg::E2 => "group=e2",
            };
            print!("{}", emit_table(TableKind::GroupDemo, &[g.to_string()])?);
            Ok(0)
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code(&e))
        }
    }
}
