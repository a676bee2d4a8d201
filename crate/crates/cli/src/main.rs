//! `uqdyn verify` runs verification suites; `uqdyn eval` prints a catalog element.

use std::process::ExitCode;

use clap::{CommandFactory, Parser, Subcommand, ValueEnum};
use uqdyn::suites::{self, Format, SuiteConfig};

#[derive(Parser)]
#[command(name = "uqdyn", version, about = "Exact verification of U_q(sl2) dynamical twist identities")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum OutputFormat {
    Json,
    Text,
}

#[derive(Subcommand)]
enum Command {
    /// Run verification suites and report every case.
    Verify {
        /// Suite name or `all`; repeat or comma-separate for several.
        #[arg(long, value_delimiter = ',', default_value = "all")]
        suite: Vec<String>,
        /// Largest single module V_P.
        #[arg(long, default_value_t = 4)]
        max_dim: u32,
        /// Largest leg of a tensor pair.
        #[arg(long, default_value_t = 4)]
        pair_dim: u32,
        /// Largest leg of a tensor triple.
        #[arg(long, default_value_t = 3)]
        triple_dim: u32,
        /// Largest truncation K of infinite products.
        #[arg(long, default_value_t = 8)]
        trunc: u32,
        /// Expansion cap L in powers of y = x^{1/2}.
        #[arg(long, default_value_t = 40)]
        expand_order: u32,
        #[arg(long, value_enum, default_value = "text")]
        format: OutputFormat,
        /// Write the report here instead of stdout.
        #[arg(long)]
        out: Option<String>,
        /// Worker threads; all cores when omitted.
        #[arg(long)]
        jobs: Option<usize>,
        /// Keep per-case runtimes in the report.
        #[arg(long)]
        timing: bool,
    },
    /// Print a catalog element on V_{p1} ⊗ V_{p2} ⊗ ...
    Eval {
        /// Catalog name, e.g. `F_series`.
        element: String,
        /// Comma-separated leg labels p_i.
        #[arg(value_delimiter = ',')]
        dims: Vec<u32>,
        /// Truncation K for truncated products.
        #[arg(long, default_value_t = 8)]
        trunc: u32,
    },
}

fn usage_error(msg: &str) -> ExitCode {
    eprintln!("error: {msg}\n");
    eprintln!("{}", Cli::command().render_usage());
    eprintln!("suites: {} (also: {})", suites::SUITES.join(", "), suites::EXTRA_SUITES.join(", "));
    ExitCode::from(2)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match cli.command {
        Command::Verify { suite, max_dim, pair_dim, triple_dim, trunc, expand_order, format, out, jobs, timing } => {
            let config = SuiteConfig {
                suites: suite,
                max_dim,
                pair_dim,
                triple_dim,
                trunc,
                expand_order,
                format: match format {
                    OutputFormat::Json => Format::Json,
                    OutputFormat::Text => Format::Text,
                },
                out: out.clone(),
                timing,
            };
            if let Err(e) = config.validate() {
                return usage_error(&e.to_string());
            }
            let report = match suites::run(&config, jobs) {
                Ok(r) => r,
                Err(e) => return usage_error(&e.to_string()),
            };
            let text = match config.format {
                Format::Json => report.to_json() + "\n",
                Format::Text => report.to_text(),
            };
            match out {
                Some(path) => {
                    if let Err(e) = std::fs::write(&path, text) {
                        eprintln!("error: cannot write {path}: {e}");
                        return ExitCode::from(2);
                    }
                }
                None => print!("{text}"),
            }
            ExitCode::from(report.exit_code() as u8)
        }
        Command::Eval { element, dims, trunc } => match uqdyn::elements::render(&element, &dims, trunc) {
            Ok(s) => {
                print!("{s}");
                ExitCode::SUCCESS
            }
            Err(e) => usage_error(&e.to_string()),
        },
    }
}
