//! `topann`: annihilators and attached primes of top local cohomology for
//! monomial ideals, from the command line.
//!
//! Every run prints one JSON report on stdout and a one-line summary on
//! stderr. Exit codes: 0 ok, 1 usage or parse error, 2 hypothesis not met,
//! 3 failed verification, 4 size limit or overflow.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use topann_core::cli_io::{run, Command, Limits, Report, Request};
use topann_core::Error;

#[derive(Parser, Debug)]
#[command(name = "topann", version, about = "Top local cohomology of monomial ideals")]
struct Cli {
    /// Read the whole request from a JSON file (`-` for stdin).
    #[arg(long, value_name = "FILE", exclusive = true)]
    json: Option<PathBuf>,

    #[command(subcommand)]
    command: Option<Sub>,
}

#[derive(Subcommand, Debug)]
enum Sub {
    /// Irreducible and primary decompositions, Ass, minAss, Assh.
    Decompose(Common),
    /// Cohomological dimension cd(a, R/I).
    Cd(Common),
    /// Krull dimension and height.
    Dim(Common),
    /// Annihilator of the top local cohomology module.
    AnnTop(Common),
    /// Largest submodule of lower cohomological dimension, by two routes.
    TSubmodule(Common),
    /// Attached primes of the top local cohomology module.
    AttTop(Common),
    /// Bounds and membership tests for one prime.
    AttTest(Common),
    /// Attached primes when a is one-dimensional.
    AttOnedim(Common),
    /// Radical criterion for cd(a, R/p) = dim R/p.
    Lhv(Common),
    /// Multigraded Betti numbers of R/I.
    Betti(Common),
    /// Randomized self-check against the Čech oracle.
    Verify(Common),
}

#[derive(Args, Debug, Default)]
struct Common {
    /// Comma-separated variable names, e.g. `x,y,z`.
    #[arg(long, value_name = "VARS")]
    ring: Option<String>,
    /// Field characteristic: 0 or a prime.
    #[arg(long = "char", default_value_t = 0)]
    characteristic: u64,
    /// Generators of a, comma-separated.
    #[arg(long, value_name = "GENS")]
    a: Option<String>,
    /// Generators of I, comma-separated; empty means the zero ideal.
    #[arg(long, value_name = "GENS")]
    i: Option<String>,
    /// Variables generating a monomial prime; empty means (0).
    #[arg(long, value_name = "VARS")]
    prime: Option<String>,
    /// A monomial, for the multiplication criterion.
    #[arg(long, value_name = "MONOMIAL")]
    x: Option<String>,
    /// Depth of the degree box scanned by the Čech oracle.
    #[arg(long, default_value_t = 1)]
    box_depth: u32,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Number of random instances for `verify`.
    #[arg(long)]
    count: Option<usize>,
    #[arg(long)]
    max_vars: Option<usize>,
    #[arg(long)]
    max_gens: Option<usize>,
    /// Cross-check `cd` against the Čech oracle.
    #[arg(long)]
    oracle: bool,
    /// Include wall-clock timing in the report.
    #[arg(long)]
    timing: bool,
}

fn split_list(text: &str) -> Vec<String> {
    text.split(',').map(str::trim).filter(|s| !s.is_empty()).map(String::from).collect()
}

fn build_request(command: Command, args: Common) -> Request {
    let ring = args.ring.as_deref().map(split_list).unwrap_or_default();
    Request {
        command,
        ring,
        characteristic: args.characteristic,
        ideal_a: args.a.as_deref().map(split_list).unwrap_or_default(),
        ideal_i: args.i.as_deref().map(split_list).unwrap_or_default(),
        prime: args.prime.as_deref().map(split_list),
        monomial_x: args.x,
        box_depth: args.box_depth,
        limits: Limits { max_vars: args.max_vars, max_gens: args.max_gens },
        seed: args.seed,
        count: args.count,
        oracle: args.oracle,
        timing: args.timing,
    }
}

fn from_sub(sub: Sub) -> Request {
    let (command, args) = match sub {
        Sub::Decompose(a) => (Command::Decompose, a),
        Sub::Cd(a) => (Command::Cd, a),
        Sub::Dim(a) => (Command::Dim, a),
        Sub::AnnTop(a) => (Command::AnnTop, a),
        Sub::TSubmodule(a) => (Command::TSubmodule, a),
        Sub::AttTop(a) => (Command::AttTop, a),
        Sub::AttTest(a) => (Command::AttTest, a),
        Sub::AttOnedim(a) => (Command::AttOnedim, a),
        Sub::Lhv(a) => (Command::Lhv, a),
        Sub::Betti(a) => (Command::Betti, a),
        Sub::Verify(a) => (Command::Verify, a),
    };
    build_request(command, args)
}

fn read_json(path: &PathBuf) -> Result<Request, Error> {
    let text = if path.as_os_str() == "-" {
        std::io::read_to_string(std::io::stdin())
    } else {
        std::fs::read_to_string(path)
    }
    .map_err(|e| Error::Usage(format!("cannot read {}: {e}", path.display())))?;
    Request::from_json(&text)
}

fn fail(e: Error) -> ExitCode {
    eprintln!("topann: {e}");
    ExitCode::from(e.exit_code() as u8)
}

fn emit(report: &Report) -> ExitCode {
    print!("{}", report.to_json());
    eprintln!("{}", report.summary);
    ExitCode::from(report.exit_code as u8)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let request = match (cli.json, cli.command) {
        (Some(path), _) => match read_json(&path) {
            Ok(r) => r,
            Err(e) => return fail(e),
        },
        (None, Some(sub)) => from_sub(sub),
        (None, None) => return fail(Error::Usage("expected a command or --json FILE".into())),
    };
    emit(&run(&request))
}
