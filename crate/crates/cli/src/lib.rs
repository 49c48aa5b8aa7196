//! Shared plumbing for the `fr` and `nest` binaries: the single-object
//! JSON output shape, exit-code policy, and scalar parsing helpers.

use std::process::ExitCode;

use num_bigint::BigInt;
use serde::Serialize;

use fermat::real::Rational;

/// Exit code 1: parse or validation failure. Exit code 2: refused
/// (search bound exceeded).
#[derive(Debug)]
pub enum CliError {
    Invalid(String),
    Refused(String),
}

impl CliError {
    pub fn invalid(msg: impl ToString) -> Self {
        CliError::Invalid(msg.to_string())
    }

    pub fn refused(msg: impl ToString) -> Self {
        CliError::Refused(msg.to_string())
    }
}

impl From<nestlab::NestError> for CliError {
    fn from(e: nestlab::NestError) -> Self {
        match e {
            nestlab::NestError::BoundExceeded { .. } => CliError::Refused(e.to_string()),
            other => CliError::Invalid(other.to_string()),
        }
    }
}

impl From<fermat::expr::ExprError> for CliError {
    fn from(e: fermat::expr::ExprError) -> Self {
        CliError::Invalid(e.to_string())
    }
}

/// One JSON object per invocation, fields in fixed order.
#[derive(Serialize)]
pub struct Output<V: Serialize, W: Serialize> {
    pub verdict: V,
    pub witness: W,
    pub detail: String,
}

pub fn emit<V: Serialize, W: Serialize>(out: &Output<V, W>) {
    println!("{}", serde_json::to_string(out).expect("serializable output"));
}

pub fn finish(result: Result<(), CliError>) -> ExitCode {
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(CliError::Invalid(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(CliError::Refused(msg)) => {
            eprintln!("refused: {msg}");
            ExitCode::from(2)
        }
    }
}

/// Exact rational from an expression string that must be term-free.
pub fn parse_rational(src: &str) -> Result<Rational, CliError> {
    let x = fermat::expr::parse_real(src)?;
    if !x.terms().is_empty() {
        return Err(CliError::invalid(format!(
            "expected a rational constant, got '{x}'"
        )));
    }
    Ok(x.standard_part().clone())
}

/// Grid of evaluation points t = 10^-k from comma-separated exponents.
pub fn parse_grid(spec: &str) -> Result<Vec<Rational>, CliError> {
    let mut grid = Vec::new();
    for part in spec.split(',') {
        let k: u32 = part
            .trim()
            .parse()
            .map_err(|_| CliError::invalid(format!("bad grid exponent '{part}'")))?;
        if k == 0 {
            return Err(CliError::invalid("grid exponent must be positive"));
        }
        grid.push(Rational::new(
            BigInt::from(1),
            BigInt::from(10u32).pow(k),
        ));
    }
    grid.sort();
    Ok(grid)
}

/// Default oracle grid: t = 10⁻³ … 10⁻¹², ascending.
pub fn default_grid() -> Vec<Rational> {
    (3..=12u32)
        .rev()
        .map(|k| Rational::new(BigInt::from(1), BigInt::from(10u32).pow(k)))
        .collect()
}

pub fn read_file(path: &str) -> Result<String, CliError> {
    std::fs::read_to_string(path)
        .map_err(|e| CliError::invalid(format!("cannot read '{path}': {e}")))
}
