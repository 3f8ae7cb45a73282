//! `superbraid`: evaluate virtual knot invariants from the command line.
//!
//! Exit codes: 0 on success, 2 on bad input, 3 when two routes that must
//! agree do not.

mod commands;
mod input;
mod table;

use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Result};
use clap::{Args, Parser, Subcommand};
use superbraid::SuperDim;
use thiserror::Error;

use commands::{InvariantArgs, Route};
use input::Input;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("consistency failure: {0}")]
    Inconsistent(String),
}

#[derive(Parser)]
#[command(name = "superbraid", version, about = "Virtual and semi-welded U_q(gl(m|n)) invariants")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Args, Clone, Copy)]
struct Dim {
    #[arg(long, default_value_t = 1)]
    m: usize,
    #[arg(long, default_value_t = 1)]
    n: usize,
}

impl Dim {
    fn get(self) -> Result<SuperDim> {
        Ok(SuperDim::new(self.m, self.n)?)
    }
}

#[derive(Subcommand)]
enum Cmd {
    /// Evaluate the functor on a braid closure, tangle document or Gauss document.
    Invariant {
        input: PathBuf,
        #[command(flatten)]
        dim: Dim,
        #[arg(long)]
        semi_welded: bool,
        #[arg(long)]
        deframe: bool,
        /// Use the trace formula (braids only).
        #[arg(long, conflicts_with = "direct")]
        trace: bool,
        /// Evaluate the closure diagram directly (the default).
        #[arg(long)]
        direct: bool,
    },
    /// Generalized Alexander polynomial of a braid closure.
    Gap {
        input: PathBuf,
        /// Report in q, w, normalized as the 1|1 trace.
        #[arg(long)]
        qw: bool,
        /// Compare the determinant and trace routes.
        #[arg(long)]
        verify: bool,
    },
    /// Alexander polynomial of an almost classical braid closure.
    Alexander {
        input: PathBuf,
        /// Look for a conservative numbering first and warn if none exists.
        #[arg(long)]
        check: bool,
    },
    /// Almost-classical certification and obstruction report.
    Ac {
        input: PathBuf,
        #[command(flatten)]
        dim: Dim,
    },
    /// Table of deframed semi-welded invariants for a list of knots.
    Table {
        list: PathBuf,
        /// Comma-separated m values, paired with --n.
        #[arg(long, value_delimiter = ',', default_value = "1")]
        m: Vec<usize>,
        #[arg(long, value_delimiter = ',', default_value = "1")]
        n: Vec<usize>,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
        #[arg(long)]
        out: Option<PathBuf>,
        /// Fill the elapsed column (otherwise `-`, keeping output reproducible).
        #[arg(long)]
        timing: bool,
    },
    /// Skein triple at a classical crossing and the relation residual.
    Skein {
        input: PathBuf,
        /// 1-based letter index (braids) or generator index (documents).
        #[arg(long)]
        site: usize,
        #[command(flatten)]
        dim: Dim,
    },
}

fn dims(m: &[usize], n: &[usize]) -> Result<Vec<SuperDim>> {
    if m.len() != n.len() {
        bail!("--m and --n list {} and {} values", m.len(), n.len());
    }
    m.iter().zip(n).map(|(&a, &b)| Ok(SuperDim::new(a, b)?)).collect()
}

fn run(cli: Cli) -> Result<String> {
    match cli.cmd {
        Cmd::Invariant { input, dim, semi_welded, deframe, trace, direct: _ } => {
            let route = if trace { Route::Trace } else { Route::Direct };
            let args = InvariantArgs { d: dim.get()?, semiwelded: semi_welded, deframe, route };
            commands::invariant(&Input::load(&input)?, &args)
        }
        Cmd::Gap { input, qw, verify } => commands::gap_cmd(&Input::load(&input)?, qw, verify),
        Cmd::Alexander { input, check } => commands::alexander_cmd(&Input::load(&input)?, check),
        Cmd::Ac { input, dim } => commands::ac_cmd(&Input::load(&input)?, dim.get()?),
        Cmd::Skein { input, site, dim } => commands::skein_cmd(&Input::load(&input)?, site, dim.get()?),
        Cmd::Table { list, m, n, jobs, out, timing } => {
            let text = std::fs::read_to_string(&list)?;
            let base = list.parent().map(PathBuf::from).unwrap_or_default();
            let (doc, failed) = table::run(&text, &base, &dims(&m, &n)?, jobs.max(1), timing)?;
            match out {
                Some(p) => std::fs::write(p, &doc)?,
                None => print!("{doc}"),
            }
            if failed {
                bail!("some rows failed");
            }
            Ok(String::new())
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(text) => {
            if !text.is_empty() {
                println!("{text}");
            }
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            if e.downcast_ref::<CliError>().is_some() {
                ExitCode::from(3)
            } else {
                ExitCode::from(2)
            }
        }
    }
}
