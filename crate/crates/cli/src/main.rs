use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use hgauge::Q;
use hgauge_cli::{execute, load_scenario, Command, Format, Overrides};

#[derive(Parser)]
#[command(name = "hgauge", version, about = "Exact checks for generalized forms and higher gauge theory")]
struct Cli {
    #[command(subcommand)]
    command: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Run the scenario's checks (all registered checks when none are listed).
    Check(Common),
    /// Curvature of the scenario connection, with Bianchi and slot checks.
    Curvature(Common),
    /// Gauge-transformed connection, with covariance checks.
    Gauge(Common),
    /// Value of an action functional.
    Action {
        #[command(flatten)]
        common: Common,
        #[arg(long, value_parser = ["2cs", "3cs", "ym", "2ym", "3ym"])]
        kind: String,
    },
    /// Axiom checks for the algebra and its group.
    Validate(Common),
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Text,
    Json,
}

#[derive(Args)]
struct Common {
    scenario: PathBuf,
    #[arg(long)]
    seed: Option<u64>,
    #[arg(long)]
    max_degree: Option<u32>,
    #[arg(long)]
    dim: Option<usize>,
    #[arg(long, value_enum, default_value = "text")]
    format: FormatArg,
    #[arg(long, allow_hyphen_values = true)]
    k: Option<Q>,
    #[arg(long, allow_hyphen_values = true)]
    k1: Option<Q>,
    #[arg(long, allow_hyphen_values = true)]
    k2: Option<Q>,
}

fn invalid(errors: &[String]) -> ExitCode {
    for e in errors {
        eprintln!("error: {e}");
    }
    ExitCode::from(2)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let (command, common) = match cli.command {
        Cmd::Check(c) => (Command::Check, c),
        Cmd::Curvature(c) => (Command::Curvature, c),
        Cmd::Gauge(c) => (Command::Gauge, c),
        Cmd::Action { common, kind } => (Command::Action(kind), common),
        Cmd::Validate(c) => (Command::Validate, c),
    };
    let overrides = Overrides {
        seed: common.seed,
        max_degree: common.max_degree,
        dim: common.dim,
        k: common.k,
        k1: common.k1,
        k2: common.k2,
    };
    let resolved = match load_scenario(&common.scenario).and_then(|s| s.resolve(&overrides)) {
        Ok(r) => r,
        Err(errors) => return invalid(&errors),
    };
    let report = match execute(&command, &resolved) {
        Ok(r) => r,
        Err(e) => return invalid(&[e]),
    };
    let format = match common.format {
        FormatArg::Text => Format::Text,
        FormatArg::Json => Format::Json,
    };
    print!("{}", report.emit(format));
    ExitCode::from(report.exit_code() as u8)
}
