mod error;
mod query;
mod run;

use std::io::{self, BufRead, Write};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use error::{exit, CliError};
use query::{parse_list, Basis, Command, QueryRecord};

/// Exact weight multiplicities, tensor-product coefficients and Kostant
/// partition values for type A_r.
#[derive(Parser)]
#[command(name = "kostant", version)]
struct Cli {
    /// Worker threads for the inner sums (default: all available cores).
    #[arg(long, global = true)]
    threads: Option<usize>,
    /// Print results as JSON.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Sub,
}

#[derive(Args)]
struct Common {
    #[arg(long)]
    rank: usize,
    /// Basis the weights are written in.
    #[arg(long, value_enum, default_value_t = Basis::Canonical)]
    basis: Basis,
    /// Cross-check against the brute-force reference when the input is small enough.
    #[arg(long)]
    oracle: bool,
    /// Report wall-clock time.
    #[arg(long)]
    timing: bool,
}

#[derive(Args)]
struct MultArgs {
    #[command(flatten)]
    common: Common,
    /// Highest weight, comma-separated integers or p/q rationals.
    #[arg(long, allow_hyphen_values = true)]
    lambda: String,
    #[arg(long, allow_hyphen_values = true)]
    mu: String,
}

#[derive(Args)]
struct TensorArgs {
    #[command(flatten)]
    common: Common,
    #[arg(long, allow_hyphen_values = true)]
    lambda: String,
    #[arg(long, allow_hyphen_values = true)]
    mu: String,
    #[arg(long, allow_hyphen_values = true)]
    nu: String,
}

#[derive(Subcommand)]
enum Sub {
    /// Multiplicity of the weight mu in V(lambda).
    Mult(MultArgs),
    /// Multiplicity of V(nu) in V(lambda) ⊗ V(mu).
    Tensor(TensorArgs),
    /// Kostant partition function of a root-lattice vector.
    Kostant {
        #[command(flatten)]
        common: Common,
        #[arg(allow_hyphen_values = true)]
        vector: String,
    },
    /// Convert a vector between the canonical and fundamental bases.
    Convert {
        #[arg(long)]
        rank: usize,
        /// Target basis; the input is read in the other one.
        #[arg(long, value_enum)]
        to: Basis,
        #[arg(long)]
        oracle: bool,
        #[arg(long)]
        timing: bool,
        #[arg(allow_hyphen_values = true)]
        vector: String,
    },
    /// Polynomial N ↦ multiplicity of N·mu in V(N·lambda).
    PolyMult(MultArgs),
    /// Polynomial N ↦ multiplicity of V(N·nu) in V(N·lambda) ⊗ V(N·mu).
    PolyTensor(TensorArgs),
    /// Read JSON query records from stdin, one per line, and answer each on one line.
    Batch,
}

fn record_with(command: Command, common: &Common) -> QueryRecord {
    QueryRecord {
        basis: common.basis,
        oracle: common.oracle,
        timing: common.timing,
        ..QueryRecord::new(command, common.rank)
    }
}

fn mult_record(command: Command, args: &MultArgs) -> Result<QueryRecord, CliError> {
    Ok(QueryRecord {
        lambda: Some(parse_list("lambda", &args.lambda)?),
        mu: Some(parse_list("mu", &args.mu)?),
        ..record_with(command, &args.common)
    })
}

fn tensor_record(command: Command, args: &TensorArgs) -> Result<QueryRecord, CliError> {
    Ok(QueryRecord {
        lambda: Some(parse_list("lambda", &args.lambda)?),
        mu: Some(parse_list("mu", &args.mu)?),
        nu: Some(parse_list("nu", &args.nu)?),
        ..record_with(command, &args.common)
    })
}

fn to_record(sub: &Sub) -> Result<QueryRecord, CliError> {
    match sub {
        Sub::Mult(a) => mult_record(Command::Mult, a),
        Sub::PolyMult(a) => mult_record(Command::PolyMult, a),
        Sub::Tensor(a) => tensor_record(Command::Tensor, a),
        Sub::PolyTensor(a) => tensor_record(Command::PolyTensor, a),
        Sub::Kostant { common, vector } => {
            Ok(QueryRecord { vector: Some(parse_list("vector", vector)?), ..record_with(Command::Kostant, common) })
        }
        Sub::Convert { rank, to, oracle, timing, vector } => Ok(QueryRecord {
            vector: Some(parse_list("vector", vector)?),
            to: Some(*to),
            oracle: *oracle,
            timing: *timing,
            ..QueryRecord::new(Command::Convert, *rank)
        }),
        Sub::Batch => unreachable!("batch has no single record"),
    }
}

fn report_error(e: &CliError) -> u8 {
    let diagnostic = serde_json::to_string(&e.diagnostic()).expect("diagnostic serializes");
    eprintln!("{diagnostic}");
    e.exit_code()
}

fn single(sub: &Sub, json: bool) -> u8 {
    let outcome = to_record(sub).and_then(|record| run::run(&record).map(|report| (record, report)));
    match outcome {
        Ok((record, report)) => {
            if json {
                println!("{}", serde_json::to_string(&report).expect("report serializes"));
            } else {
                println!("{}", report.to_text(record.timing));
            }
            if report.oracle.as_ref().is_some_and(|o| o.disagrees()) {
                eprintln!(r#"{{"error":"oracle_mismatch","message":"result disagrees with the reference oracle","exit_code":3}}"#);
                return exit::ORACLE_MISMATCH;
            }
            exit::SUCCESS
        }
        Err(e) => report_error(&e),
    }
}

/// Answers each line in order. Failed lines produce an error object in place;
/// the exit code is the most severe one seen.
fn batch() -> u8 {
    let stdin = io::stdin();
    let mut out = io::stdout().lock();
    let mut code = exit::SUCCESS;
    for (index, line) in stdin.lock().lines().enumerate() {
        let line = match line {
            Ok(l) => l,
            Err(e) => return report_error(&CliError::Io(e)).max(code),
        };
        if line.trim().is_empty() {
            continue;
        }
        let json = match query::parse_json_record(&line).and_then(|r| run::run(&r)) {
            Ok(report) => {
                if report.oracle.as_ref().is_some_and(|o| o.disagrees()) {
                    code = code.max(exit::ORACLE_MISMATCH);
                }
                serde_json::to_string(&report).expect("report serializes")
            }
            Err(e) => {
                code = code.max(e.exit_code());
                let mut diagnostic = serde_json::to_value(e.diagnostic()).expect("diagnostic serializes");
                diagnostic["line"] = (index + 1).into();
                let diagnostic = diagnostic.to_string();
                eprintln!("{diagnostic}");
                diagnostic
            }
        };
        if writeln!(out, "{json}").and_then(|_| out.flush()).is_err() {
            return code.max(exit::INTERNAL);
        }
    }
    code
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(n) = cli.threads {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(n).build_global() {
            eprintln!(r#"{{"error":"thread_pool","message":"{e}","exit_code":1}}"#);
            return ExitCode::from(exit::INTERNAL);
        }
    }
    let code = match &cli.command {
        Sub::Batch => batch(),
        sub => single(sub, cli.json),
    };
    ExitCode::from(code)
}
