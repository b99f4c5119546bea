//! Argument parsing and subcommand dispatch.

use std::ffi::OsString;
use std::io::{self, Write};

use clap::{Parser, Subcommand, ValueEnum};
use hybridhopf_core::integrals::{derived_integral_space, paper_integral_system, solve_integral_system, IntegralError};
use hybridhopf_core::{
    build_structure, run_checks, Element, Field, GaussianRational, HybridElement, ParameterMode, ScalarError, Side,
    Source, StructureMaps, SymbolicMaps, Variant,
};
use thiserror::Error;

use crate::expr::{parse_constant, parse_element, ExprError};
use crate::report::{self, IntegralOutput, OperationOutput};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILED_CHECK: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Clone, Copy, PartialEq, Eq, Debug, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Parser, Debug)]
#[command(
    name = "hybridhopf",
    version,
    about = "Exact checks of the weak Hopf algebra structures on the hybrid numbers"
)]
pub struct Cli {
    /// Which of the two structures to use: `a` or `b`.
    #[arg(long, global = true, default_value = "a")]
    pub variant: Variant,

    /// Substitute a nonzero Gaussian rational for b, e.g. `3/5` or `1 + 2*i`.
    #[arg(long = "b", global = true, value_name = "VALUE", value_parser = parse_parameter, allow_hyphen_values = true)]
    pub b: Option<GaussianRational>,

    /// Output format.
    #[arg(long, global = true, env = "HYBRIDHOPF_FORMAT", value_enum, default_value = "text")]
    pub format: Format,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Run every axiom check; exits 1 if any fails.
    Check,
    /// Print the multiplication table.
    Table,
    /// Comultiplication of an element.
    Delta {
        #[arg(allow_hyphen_values = true)]
        expr: String,
    },
    /// Counit of an element.
    Counit {
        #[arg(allow_hyphen_values = true)]
        expr: String,
    },
    /// Antipode of an element.
    Antipode {
        #[arg(allow_hyphen_values = true)]
        expr: String,
    },
    /// Target counital map.
    Et {
        #[arg(allow_hyphen_values = true)]
        expr: String,
    },
    /// Source counital map.
    Es {
        #[arg(allow_hyphen_values = true)]
        expr: String,
    },
    /// Print an element in canonical form.
    Eval {
        #[arg(allow_hyphen_values = true)]
        expr: String,
    },
    /// Product of two elements.
    Mul {
        #[arg(allow_hyphen_values = true)]
        left: String,
        #[arg(allow_hyphen_values = true)]
        right: String,
    },
    /// Basis of the left or right integrals.
    Integrals {
        #[arg(long, default_value = "left")]
        side: Side,
        #[arg(long, default_value = "derived")]
        source: Source,
    },
}

fn parse_parameter(src: &str) -> Result<GaussianRational, String> {
    let b0 = parse_constant(src).map_err(|e| e.to_string())?;
    if num_traits::Zero::is_zero(&b0) {
        return Err(ScalarError::ZeroParameter.to_string());
    }
    Ok(b0)
}

#[derive(Debug, Error)]
pub enum AppError {
    #[error(transparent)]
    Expr(#[from] ExprError),
    #[error(transparent)]
    Scalar(#[from] ScalarError),
    #[error(transparent)]
    Integral(#[from] IntegralError),
    #[error(transparent)]
    Io(#[from] io::Error),
}

impl Cli {
    pub fn mode(&self) -> ParameterMode {
        match &self.b {
            None => ParameterMode::Symbolic,
            Some(b0) => ParameterMode::Numeric(b0.clone()),
        }
    }
}

/// Runs `check` against caller-supplied structure maps.
pub fn check_structure(
    s: &SymbolicMaps,
    mode: &ParameterMode,
    format: Format,
    out: &mut dyn Write,
) -> Result<i32, AppError> {
    let reports = match mode {
        ParameterMode::Symbolic => run_checks(s),
        ParameterMode::Numeric(b0) => run_checks(&s.evaluate(b0)?),
    };
    let summary = report::write_checks(out, format, &reports, s.variant, mode)?;
    Ok(if summary.all_passed() {
        EXIT_OK
    } else {
        EXIT_FAILED_CHECK
    })
}

#[derive(Clone, Copy, Debug)]
enum Operation {
    Delta,
    Counit,
    Antipode,
    Et,
    Es,
    Eval,
}

impl Operation {
    fn name(self) -> &'static str {
        match self {
            Operation::Delta => "delta",
            Operation::Counit => "counit",
            Operation::Antipode => "antipode",
            Operation::Et => "et",
            Operation::Es => "es",
            Operation::Eval => "eval",
        }
    }

    fn apply<F: Field>(self, s: &StructureMaps<F>, x: &HybridElement<F>) -> String {
        match self {
            Operation::Delta => s.delta_ext(x).to_string(),
            Operation::Counit => s.counit_ext(x).to_string(),
            Operation::Antipode => s.antipode_ext(x).to_string(),
            Operation::Et => s.eps_t(x).to_string(),
            Operation::Es => s.eps_s(x).to_string(),
            Operation::Eval => x.to_string(),
        }
    }
}

fn unary(cli: &Cli, op: Operation, src: &str, out: &mut dyn Write) -> Result<i32, AppError> {
    let x = parse_element(src)?;
    let s = build_structure(cli.variant);
    let (input, result) = match &cli.b {
        None => (x.to_string(), op.apply(&s, &x)),
        Some(b0) => {
            let x = x.evaluate(b0)?;
            (x.to_string(), op.apply(&s.evaluate(b0)?, &x))
        }
    };
    let o = OperationOutput {
        operation: op.name(),
        variant: cli.variant,
        mode: cli.mode(),
        inputs: vec![input],
        result,
    };
    report::write_operation(out, cli.format, &o)?;
    Ok(EXIT_OK)
}

fn product(cli: &Cli, left: &str, right: &str, out: &mut dyn Write) -> Result<i32, AppError> {
    let (x, y) = (parse_element(left)?, parse_element(right)?);
    let (inputs, result) = match &cli.b {
        None => (vec![x.to_string(), y.to_string()], (&x * &y).to_string()),
        Some(b0) => {
            let (x, y) = (x.evaluate(b0)?, y.evaluate(b0)?);
            (vec![x.to_string(), y.to_string()], (&x * &y).to_string())
        }
    };
    let o = OperationOutput {
        operation: "mul",
        variant: cli.variant,
        mode: cli.mode(),
        inputs,
        result,
    };
    report::write_operation(out, cli.format, &o)?;
    Ok(EXIT_OK)
}

fn quadruples<F: Field>(basis: &[HybridElement<F>]) -> (Vec<[String; 4]>, Vec<String>) {
    (
        basis
            .iter()
            .map(|v| v.coeffs().clone().map(|c| c.to_string()))
            .collect(),
        basis.iter().map(ToString::to_string).collect(),
    )
}

fn integrals(cli: &Cli, side: Side, source: Source, out: &mut dyn Write) -> Result<i32, AppError> {
    let ((coordinates, elements), exceptional) = match (&cli.b, source) {
        (None, Source::Derived) => {
            let space = derived_integral_space(side, &build_structure(cli.variant));
            let exceptional = space
                .exceptional_denominators()
                .iter()
                .map(ToString::to_string)
                .collect();
            (quadruples(&space.basis), exceptional)
        }
        (None, Source::Paper) => {
            let basis: Vec<Element> = solve_integral_system(&paper_integral_system(side, cli.variant)?);
            (quadruples(&basis), Vec::new())
        }
        (Some(b0), Source::Derived) => {
            let space = derived_integral_space(side, &build_structure(cli.variant).evaluate(b0)?);
            (quadruples(&space.basis), Vec::new())
        }
        (Some(b0), Source::Paper) => {
            let system = paper_integral_system(side, cli.variant)?.try_map(|c| c.eval(b0))?;
            (quadruples(&solve_integral_system(&system)), Vec::new())
        }
    };
    let o = IntegralOutput {
        side,
        source,
        variant: cli.variant,
        mode: cli.mode(),
        coordinates,
        elements,
        exceptional_denominators: exceptional,
    };
    report::write_integrals(out, cli.format, &o)?;
    Ok(EXIT_OK)
}

pub fn dispatch(cli: &Cli, out: &mut dyn Write) -> Result<i32, AppError> {
    match &cli.command {
        Command::Check => check_structure(&build_structure(cli.variant), &cli.mode(), cli.format, out),
        Command::Table => {
            report::write_table(out, cli.format)?;
            Ok(EXIT_OK)
        }
        Command::Delta { expr } => unary(cli, Operation::Delta, expr, out),
        Command::Counit { expr } => unary(cli, Operation::Counit, expr, out),
        Command::Antipode { expr } => unary(cli, Operation::Antipode, expr, out),
        Command::Et { expr } => unary(cli, Operation::Et, expr, out),
        Command::Es { expr } => unary(cli, Operation::Es, expr, out),
        Command::Eval { expr } => unary(cli, Operation::Eval, expr, out),
        Command::Mul { left, right } => product(cli, left, right, out),
        Command::Integrals { side, source } => integrals(cli, *side, *source, out),
    }
}

/// Parses `args` (including the program name), runs the command and returns
/// the process exit code. Diagnostics go to `err`.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let target: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = write!(target, "{}", e.render());
            return code;
        }
    };
    match dispatch(&cli, out) {
        Ok(code) => code,
        Err(AppError::Io(e)) if e.kind() == io::ErrorKind::BrokenPipe => EXIT_OK,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_USAGE
        }
    }
}
