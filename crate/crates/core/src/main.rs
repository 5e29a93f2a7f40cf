use std::fs;
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use bicyc::certificate::verify_certificate;
use bicyc::cli::{
    exit, export_graph, info_json, parse_params, verify_cmd, CertificateFile, ExportFormat,
};
use bicyc::dispatch::{sweep, Outcome, StrategyRegistry, SweepOptions};
use bicyc::oracle::SearchBudget;
use bicyc::params::BicirculantParams;

/// Strategies run by `find --strategy construct`.
const CONSTRUCTIONS: &[&str] = &[
    "disconnected",
    "known-exception",
    "single-spoke",
    "half-type",
    "pipeline",
    "two-spoke-subgraph",
];

#[derive(Parser)]
#[command(
    name = "bicyc",
    version,
    about = "Hamilton cycles in bicirculant graphs B(m; R; S; T)"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone, Copy)]
struct BudgetArgs {
    /// Search nodes per oracle call.
    #[arg(long, env = "BICYC_BUDGET_NODES", default_value_t = 50_000_000)]
    budget_nodes: u64,
    /// Wall-clock limit per oracle call, in milliseconds.
    #[arg(long, env = "BICYC_BUDGET_MS", default_value_t = 60_000)]
    budget_ms: u64,
    /// Seed for the heuristic search.
    #[arg(long, default_value_t = 1)]
    seed: u64,
}

impl BudgetArgs {
    fn budget(self) -> SearchBudget {
        SearchBudget {
            max_nodes: self.budget_nodes,
            max_millis: self.budget_ms,
            seed: self.seed,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Structural summary: components, quotient, spoke gcd, pipeline plan.
    Info { params: String },
    /// Find a hamilton cycle and print its certificate.
    Find {
        #[arg(required_unless_present = "list")]
        params: Option<String>,
        /// Run only this strategy (see `--list`), or `construct` for the
        /// constructions without oracle fallback.
        #[arg(long)]
        strategy: Option<String>,
        /// List strategy names and exit.
        #[arg(long)]
        list: bool,
        /// Also write the graph with the cycle in bold as DOT.
        #[arg(long)]
        emit_dot: Option<PathBuf>,
        #[command(flatten)]
        budget: BudgetArgs,
    },
    /// Run the strategy cascade and print the outcome.
    Classify {
        params: String,
        /// Try the exact oracle before the constructions.
        #[arg(long)]
        prefer_oracle: bool,
        /// Include the construction trace.
        #[arg(long)]
        trace: bool,
        #[command(flatten)]
        budget: BudgetArgs,
    },
    /// Check a certificate file against parameters.
    Verify {
        params: String,
        certificate: PathBuf,
    },
    /// Classify every parameter set up to the given order and degree.
    Sweep {
        #[arg(long)]
        m_max: usize,
        #[arg(long)]
        d_max: usize,
        #[arg(long)]
        jobs: Option<usize>,
        #[arg(long)]
        out: Option<PathBuf>,
        /// Confirm every non-oracle verdict with the exact oracle.
        #[arg(long)]
        cross_check: bool,
        #[arg(long)]
        prefer_oracle: bool,
        #[command(flatten)]
        budget: BudgetArgs,
    },
    /// Write the graph as DOT or an edge list.
    Export {
        params: String,
        #[arg(long, value_enum, default_value_t = Format::Dot)]
        format: Format,
        /// Certificate whose edges are drawn bold.
        #[arg(long)]
        cycle: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Dot,
    Edgelist,
}

struct Failure {
    code: i32,
    message: String,
}

fn fail(code: i32, message: impl Into<String>) -> Failure {
    Failure {
        code,
        message: message.into(),
    }
}

fn params(text: &str) -> Result<BicirculantParams, Failure> {
    parse_params(text).map_err(|e| fail(exit::INPUT, format!("{text}: {e}")))
}

fn read(path: &PathBuf) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| fail(exit::USAGE, format!("{}: {e}", path.display())))
}

fn write(path: &PathBuf, text: &str) -> Result<(), Failure> {
    fs::write(path, text).map_err(|e| fail(exit::USAGE, format!("{}: {e}", path.display())))
}

/// Writes to stdout, ignoring a closed pipe.
fn emit(text: &str) {
    let _ = std::io::stdout().lock().write_all(text.as_bytes());
}

fn print_json(value: &impl serde::Serialize) {
    emit(&format!(
        "{}\n",
        serde_json::to_string_pretty(value).expect("serializable")
    ));
}

fn outcome_code(out: &Outcome) -> i32 {
    match out {
        Outcome::Hamiltonian { .. } => exit::OK,
        Outcome::NonHamiltonian { .. } | Outcome::Disconnected { .. } => exit::REJECTED,
        Outcome::Unknown { .. } => exit::BUDGET,
    }
}

fn run(cli: Cli) -> Result<i32, Failure> {
    match cli.command {
        Command::Info { params: text } => {
            print_json(&info_json(&params(&text)?));
            Ok(exit::OK)
        }
        Command::Find {
            params: text,
            strategy,
            list,
            emit_dot,
            budget,
        } => {
            if list {
                for name in StrategyRegistry::standard().names() {
                    emit(&format!("{name}\n"));
                }
                return Ok(exit::OK);
            }
            let p = params(&text.unwrap_or_default())?;
            let registry = match strategy.as_deref() {
                Some("construct") => StrategyRegistry::standard().with_order(CONSTRUCTIONS),
                Some(name) => StrategyRegistry::standard().with_order(&[name]),
                None => Ok(StrategyRegistry::standard()),
            }
            .map_err(|n| fail(exit::USAGE, format!("unknown strategy {n}")))?;
            let out = registry.classify(&p, budget.budget());
            let Outcome::Hamiltonian {
                certificate,
                strategy,
                trace,
            } = &out
            else {
                eprintln!("{p}: {}", out.label());
                print_json(&out);
                return Ok(outcome_code(&out));
            };
            eprintln!(
                "{p}: hamilton cycle by {strategy}, {:?}",
                certificate.counts()
            );
            if let Some(trace) = trace {
                eprintln!("{}", serde_json::to_string(trace).expect("serializable"));
            }
            if let Some(path) = emit_dot {
                let dot = export_graph(&p, Some(certificate), ExportFormat::Dot)
                    .map_err(|e| fail(exit::REJECTED, e.to_string()))?;
                write(&path, &dot)?;
            }
            print_json(&CertificateFile::new(&p, certificate));
            Ok(exit::OK)
        }
        Command::Classify {
            params: text,
            prefer_oracle,
            trace,
            budget,
        } => {
            let p = params(&text)?;
            let registry = if prefer_oracle {
                StrategyRegistry::prefer_oracle()
            } else {
                StrategyRegistry::standard()
            };
            let mut out = registry.classify(&p, budget.budget());
            if let Outcome::Hamiltonian { trace: t, .. } = &mut out {
                if !trace {
                    *t = None;
                }
            }
            eprintln!(
                "{p}: {}{}",
                out.label(),
                out.strategy()
                    .map(|s| format!(" by {s}"))
                    .unwrap_or_default()
            );
            print_json(&out);
            Ok(if out.is_unknown() {
                exit::BUDGET
            } else {
                exit::OK
            })
        }
        Command::Verify {
            params: text,
            certificate,
        } => {
            let report = verify_cmd(&text, &read(&certificate)?);
            print_json(&report);
            Ok(report.exit_code)
        }
        Command::Sweep {
            m_max,
            d_max,
            jobs,
            out,
            cross_check,
            prefer_oracle,
            budget,
        } => {
            if jobs == Some(0) {
                return Err(fail(exit::USAGE, "--jobs must be positive"));
            }
            let opts = SweepOptions {
                m_max,
                d_max,
                budget: budget.budget(),
                jobs,
                cross_check,
                prefer_oracle,
            };
            let report = sweep(&opts);
            eprintln!(
                "{} parameter sets, {} exceptions, {} unknown, {} agreement failures",
                report.universe_size,
                report.exceptions.len(),
                report.unknown.len(),
                report.agreement_failures.len()
            );
            let text = serde_json::to_string_pretty(&report).expect("serializable");
            match out {
                Some(path) => write(&path, &format!("{text}\n"))?,
                None => emit(&format!("{text}\n")),
            }
            Ok(if report.unknown.is_empty() {
                exit::OK
            } else {
                exit::BUDGET
            })
        }
        Command::Export {
            params: text,
            format,
            cycle,
        } => {
            let p = params(&text)?;
            let cert = match cycle {
                Some(path) => {
                    let file: CertificateFile = serde_json::from_str(&read(&path)?)
                        .map_err(|e| fail(exit::INPUT, e.to_string()))?;
                    Some(
                        verify_certificate(&p, &file.cycle)
                            .map_err(|e| fail(exit::REJECTED, e.to_string()))?,
                    )
                }
                None => None,
            };
            let format = match format {
                Format::Dot => ExportFormat::Dot,
                Format::Edgelist => ExportFormat::EdgeList,
            };
            let text = export_graph(&p, cert.as_ref(), format)
                .map_err(|e| fail(exit::REJECTED, e.to_string()))?;
            emit(&text);
            Ok(exit::OK)
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { exit::USAGE as u8 } else { 0 });
        }
    };
    match run(cli) {
        Ok(code) => ExitCode::from(code as u8),
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code as u8)
        }
    }
}
