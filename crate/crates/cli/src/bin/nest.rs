//! Nest laboratory front end: separation/interlocking checks, theorem
//! verdicts, van Dalen–Wattel verdicts, and nest-decomposition search on
//! JSON instances.

use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::{Parser, Subcommand};
use serde::Serialize;

use fermat_cli::{emit, finish, read_file, CliError, Output};
use nestlab::{neight, search_nest_pair, theorem21_check, theorem22_check, vdw_check, Instance};

#[derive(Parser)]
#[command(name = "nest", about = "Finite nest and topology instance checkers")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Nest, separation, interlocking and induced-order report for "family"
    Check { file: String },
    /// Both sides of the two-nest T1 equivalence on "family"/"family2"
    Thm21 { file: String },
    /// Interlocking vs complement-endpoint condition on "family"
    Thm22 { file: String },
    /// GO/LOTS verdict for "family"/"family2" against "topology"
    Vdw { file: String },
    /// Two-nest decomposition witness for "topology"
    Search {
        file: String,
        #[arg(long, default_value_t = nestlab::DEFAULT_BOUND)]
        bound: usize,
    },
    /// Minimal nest count for "topology"
    Neight {
        file: String,
        #[arg(long, default_value_t = nestlab::DEFAULT_BOUND)]
        bound: usize,
    },
}

fn load(file: &str) -> Result<Instance, CliError> {
    let src = read_file(file)?;
    serde_json::from_str(&src).map_err(|e| CliError::invalid(format!("bad instance file: {e}")))
}

#[derive(Serialize)]
struct CheckReport {
    is_nest: bool,
    t0: bool,
    t1: bool,
    interlocking: Option<bool>,
    order: Option<Vec<String>>,
}

fn run(cmd: Command) -> Result<(), CliError> {
    match cmd {
        Command::Check { file } => {
            let f = load(&file)?.family()?;
            let is_nest = f.is_nest();
            let t0 = f.t0_separates();
            let order = (is_nest && t0).then(|| {
                let o = f.induced_order();
                o.sorted_points()
                    .into_iter()
                    .map(|i| f.ground()[i].clone())
                    .collect()
            });
            let report = CheckReport {
                is_nest,
                t0,
                t1: f.t1_separates(),
                interlocking: if is_nest {
                    Some(f.is_interlocking()?)
                } else {
                    None
                },
                order,
            };
            emit(&Output {
                verdict: report,
                witness: (),
                detail: "family report".to_string(),
            });
        }
        Command::Thm21 { file } => {
            let inst = load(&file)?;
            let v = theorem21_check(&inst.family()?, &inst.family2()?)?;
            emit(&Output {
                verdict: v,
                witness: (),
                detail: "two-nest T1 equivalence".to_string(),
            });
        }
        Command::Thm22 { file } => {
            let v = theorem22_check(&load(&file)?.family()?)?;
            emit(&Output {
                verdict: v,
                witness: (),
                detail: "interlocking vs complement endpoints".to_string(),
            });
        }
        Command::Vdw { file } => {
            let inst = load(&file)?;
            let v = vdw_check(&inst.topology()?, &inst.family()?, &inst.family2()?)?;
            emit(&Output {
                verdict: v,
                witness: (),
                detail: "van Dalen-Wattel verdict".to_string(),
            });
        }
        Command::Search { file, bound } => {
            let t = load(&file)?.topology()?;
            match search_nest_pair(&t, bound)? {
                Some((l, r)) => emit(&Output {
                    verdict: true,
                    witness: vec![l.member_labels(), r.member_labels()],
                    detail: "two-nest decomposition".to_string(),
                }),
                None => emit(&Output {
                    verdict: false,
                    witness: Vec::<Vec<Vec<String>>>::new(),
                    detail: "no two-nest decomposition exists".to_string(),
                }),
            }
        }
        Command::Neight { file, bound } => {
            let t = load(&file)?.topology()?;
            match neight(&t, bound)? {
                Some(w) => emit(&Output {
                    verdict: Some(w.neight),
                    witness: w.nests,
                    detail: "minimal nest decomposition".to_string(),
                }),
                None => emit(&Output {
                    verdict: None::<usize>,
                    witness: Vec::<Vec<Vec<String>>>::new(),
                    detail: "no nest decomposition exists".to_string(),
                }),
            }
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
