use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use linqh::dot::{borel_dot, presentations_dot};
use linqh::report::structure_json;
use linqh::verify::{run_all, Scope};
use linqh_core::linquiver::parse_orientation;
use linqh_core::rep_oracle::IntervalOracle;
use linqh_core::treeorder::enumerate_trees;
use linqh_core::{Error, LinearQh, LinearQuiver};

const MAX_VERIFY_N: usize = 8;

#[derive(Parser)]
#[command(name = "linqh", version, about = "Quasi-hereditary structures on linear quivers")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// List all binary trees with n nodes.
    Trees {
        #[arg(long)]
        n: i64,
        #[arg(long)]
        count_only: bool,
    },
    /// Print the JSON structure report.
    Structure {
        /// Edge directions over {R, L}; empty for a single vertex.
        #[arg(long, default_value = "")]
        orientation: String,
        /// One tree per segment, separated by ';'.
        #[arg(long)]
        trees: String,
    },
    /// Run the verification suites.
    Verify {
        #[arg(long, default_value_t = 7)]
        max_n: usize,
        /// Restrict the sweep to one orientation.
        #[arg(long)]
        orientation: Option<String>,
        #[arg(long, hide = true)]
        inject_fault: bool,
    },
    /// Export a presentation as a Graphviz digraph.
    Dot {
        #[arg(long, value_enum)]
        what: What,
        #[arg(long, default_value = "")]
        orientation: String,
        #[arg(long)]
        trees: String,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum What {
    Ext,
    Ringel,
    Borel,
}

fn fail(e: &Error) -> ExitCode {
    eprintln!("error: {e}");
    ExitCode::from(if e.is_input_error() { 2 } else { 1 })
}

fn input_error(msg: &str) -> ExitCode {
    eprintln!("error: {msg}");
    ExitCode::from(2)
}

/// Writes to stdout; a closed pipe is not an error.
fn emit(text: &str) {
    let _ = io::stdout().lock().write_all(text.as_bytes());
}

fn trees(n: i64, count_only: bool) -> ExitCode {
    if n < 1 {
        return input_error("--n must be at least 1");
    }
    let trees = enumerate_trees(n as usize);
    if count_only {
        emit(&format!("{}\n", trees.len()));
    } else {
        emit(&trees.iter().map(|t| format!("{t}\n")).collect::<String>());
    }
    ExitCode::SUCCESS
}

fn structure(orientation: &str, trees: &str) -> ExitCode {
    match LinearQh::parse(orientation, trees).and_then(|qh| structure_json(&qh)) {
        Ok(json) => {
            emit(&format!("{json}\n"));
            ExitCode::SUCCESS
        }
        Err(e) => fail(&e),
    }
}

fn verify(max_n: usize, orientation: Option<String>, inject_fault: bool) -> ExitCode {
    if !(1..=MAX_VERIFY_N).contains(&max_n) {
        return input_error(&format!("--max-n must lie in 1..={MAX_VERIFY_N}"));
    }
    let mut scope = match orientation {
        None => Scope::up_to(max_n),
        Some(o) if o.is_empty() => Scope::single(LinearQuiver::single()),
        Some(o) => match parse_orientation(&o) {
            Ok(q) => Scope::single(q),
            Err(e) => return fail(&e),
        },
    };
    scope.inject_fault = inject_fault;
    let results = run_all(&scope);
    for r in &results {
        emit(&format!("{r}\n"));
    }
    if results.iter().all(|r| r.passed()) {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}

fn dot(what: What, orientation: &str, trees: &str, out: Option<PathBuf>) -> ExitCode {
    let text = LinearQh::parse(orientation, trees).and_then(|qh| match what {
        What::Ext => Ok(presentations_dot("ext", &[qh.ext_algebra()?])),
        What::Ringel => Ok(presentations_dot("ringel", &qh.ringel_duals())),
        What::Borel => {
            let oracle = IntervalOracle::new(qh.quiver());
            Ok(borel_dot(&qh.borel(&qh.borel_report(&oracle)?)?))
        }
    });
    let text = match text {
        Ok(t) => t,
        Err(e) => return fail(&e),
    };
    match out {
        Some(path) => {
            if let Err(e) = std::fs::write(&path, text) {
                eprintln!("error: cannot write {}: {e}", path.display());
                return ExitCode::from(2);
            }
        }
        None => emit(&text),
    }
    ExitCode::SUCCESS
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match cli.command {
        Command::Trees { n, count_only } => trees(n, count_only),
        Command::Structure { orientation, trees } => structure(&orientation, &trees),
        Command::Verify { max_n, orientation, inject_fault } => verify(max_n, orientation, inject_fault),
        Command::Dot { what, orientation, trees, out } => dot(what, &orientation, &trees, out),
    }
}
