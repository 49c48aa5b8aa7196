//! Fermat real workbench: expression normalization, comparison and
//! sorting, monad queries, the numeric oracle, and convergence checks.

use std::cmp::Ordering;
use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::{Parser, Subcommand};
use num_traits::{Signed, Zero};
use serde::Deserialize;

use fermat::expr::parse_real;
use fermat::topology::{monad_contains, SequenceSpec};
use fermat::{compare, FermatPoint};
use fermat_cli::{default_grid, emit, finish, parse_grid, parse_rational, read_file, CliError, Output};

#[derive(Parser)]
#[command(name = "fr", about = "Exact arithmetic and order on the Fermat real line")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the canonical form of an expression
    Normalize { expr: String },
    /// Compare two expressions; prints LT, EQ or GT
    Cmp { left: String, right: String },
    /// Sort expressions into ascending order; prints canonical forms
    Sort { exprs: Vec<String> },
    /// Standard part of an expression
    St { expr: String },
    /// Does the expression lie in the monad of the given rational?
    Monad { rational: String, expr: String },
    /// Compare two expressions with the numeric evaluation oracle
    OracleCmp {
        left: String,
        right: String,
        /// comma-separated exponents k, evaluation points t = 10^-k
        #[arg(long)]
        grid: Option<String>,
        /// how many of the smallest grid points must agree
        #[arg(long, default_value_t = 3)]
        probes: usize,
    },
    /// Check convergence of an eventually-constant sequence (JSON file)
    Converge { file: String },
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct SequenceFile {
    prefix: Vec<String>,
    tail: String,
    limit: String,
}

fn ordering_name(o: Ordering) -> &'static str {
    match o {
        Ordering::Less => "LT",
        Ordering::Equal => "EQ",
        Ordering::Greater => "GT",
    }
}

fn run(cmd: Command) -> Result<(), CliError> {
    match cmd {
        Command::Normalize { expr } => {
            let x = parse_real(&expr)?;
            emit(&Output {
                verdict: x.to_string(),
                witness: (),
                detail: "canonical form".to_string(),
            });
        }
        Command::Cmp { left, right } => {
            let x = parse_real(&left)?;
            let y = parse_real(&right)?;
            println!("{}", ordering_name(compare(&x, &y)));
        }
        Command::Sort { exprs } => {
            let mut values = exprs
                .iter()
                .map(|s| parse_real(s))
                .collect::<Result<Vec<_>, _>>()?;
            values.sort_by(compare);
            for v in values {
                println!("{v}");
            }
        }
        Command::St { expr } => {
            let x = parse_real(&expr)?;
            emit(&Output {
                verdict: x.standard_part().to_string(),
                witness: (),
                detail: "standard part".to_string(),
            });
        }
        Command::Monad { rational, expr } => {
            let r = parse_rational(&rational)?;
            let x = parse_real(&expr)?;
            emit(&Output {
                verdict: monad_contains(&r, &x),
                witness: x.standard_part().to_string(),
                detail: format!("standard part of '{x}' against {r}"),
            });
        }
        Command::OracleCmp {
            left,
            right,
            grid,
            probes,
        } => {
            let x = parse_real(&left)?;
            let y = parse_real(&right)?;
            let grid = match grid {
                Some(g) => parse_grid(&g)?,
                None => default_grid(),
            };
            if probes == 0 || probes > grid.len() {
                return Err(CliError::invalid(format!(
                    "probes must be between 1 and the grid size {}",
                    grid.len()
                )));
            }
            let diff = &y - &x;
            let mut verdict: Option<Ordering> = None;
            let mut samples = Vec::new();
            for t in grid.iter().take(probes) {
                let v = diff
                    .eval_at(t)
                    .map_err(|e| CliError::invalid(e.to_string()))?;
                let s = if v.is_zero() {
                    Ordering::Equal
                } else if v.is_positive() {
                    Ordering::Less
                } else {
                    Ordering::Greater
                };
                samples.push(format!("t={t}: {}", ordering_name(s)));
                match verdict {
                    None => verdict = Some(s),
                    Some(prev) if prev != s => {
                        return Err(CliError::invalid(format!(
                            "oracle unstable across the grid: {}",
                            samples.join(", ")
                        )))
                    }
                    _ => {}
                }
            }
            emit(&Output {
                verdict: ordering_name(verdict.expect("probes >= 1")),
                witness: samples,
                detail: format!("numeric sign of ({right}) - ({left})"),
            });
        }
        Command::Converge { file } => {
            let src = read_file(&file)?;
            let spec: SequenceFile = serde_json::from_str(&src)
                .map_err(|e| CliError::invalid(format!("bad sequence file: {e}")))?;
            let prefix = spec
                .prefix
                .iter()
                .map(|s| Ok(FermatPoint::base(parse_real(s)?)))
                .collect::<Result<Vec<_>, CliError>>()?;
            let tail = FermatPoint::base(parse_real(&spec.tail)?);
            let limit = FermatPoint::base(parse_real(&spec.limit)?);
            let seq = SequenceSpec { prefix, tail };
            emit(&Output {
                verdict: seq.converges_to(&limit),
                witness: seq.tail.to_string(),
                detail: format!("eventually-constant tail against limit {limit}"),
            });
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) => {
            e.exit()
        }
        Err(e) => return finish(Err(CliError::invalid(e))),
    };
    finish(run(cli.command))
}
