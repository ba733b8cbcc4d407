use std::process::ExitCode;

use clap::Parser;
use special_cocycles::verify::{parse_checks, run, CheckConfig, Format, ParamRange};

/// Verify the special cocycles over a parameter grid.
#[derive(Parser, Debug)]
#[command(name = "special-cocycles", version)]
struct Cli {
    /// Range of p: `N`, `A-B`, `A..B` or `A..=B` (inclusive)
    #[arg(long, default_value = "1-3")]
    p: ParamRange,
    /// Range of q
    #[arg(long, default_value = "1-2")]
    q: ParamRange,
    /// Range of a
    #[arg(long, default_value = "0-3")]
    a: ParamRange,
    /// Range of b
    #[arg(long, default_value = "0-3")]
    b: ParamRange,
    /// Comma-separated check names, or `all`
    #[arg(long, default_value = "all")]
    checks: String,
    /// Output format: `text` or `json`
    #[arg(long, default_value = "text")]
    format: Format,
    /// Worker thread bound
    #[arg(long, default_value_t = default_jobs())]
    jobs: usize,
    /// Skip multiplicity cells of higher degree
    #[arg(long)]
    max_degree: Option<u32>,
    /// List check names and exit
    #[arg(long)]
    list: bool,
}

fn default_jobs() -> usize {
    std::thread::available_parallelism().map_or(1, |n| n.get())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if cli.list {
        for c in special_cocycles::verify::Check::ALL {
            println!("{c}");
        }
        return ExitCode::SUCCESS;
    }
    let checks = match parse_checks(&cli.checks) {
        Ok(c) => c,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    };
    let config = CheckConfig {
        p: cli.p,
        q: cli.q,
        a: cli.a,
        b: cli.b,
        checks,
        jobs: cli.jobs,
        max_degree: cli.max_degree,
    };
    match run(&config) {
        Ok(report) => {
            print!("{}", report.render(cli.format));
            if cli.format == Format::Json {
                println!();
            }
            if report.success() {
                ExitCode::SUCCESS
            } else {
                ExitCode::FAILURE
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
