mod commands;
mod input;

use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use cubica::Error;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Text,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Subcommand)]
pub enum Command {
    /// Hessian determinant of a cubic.
    Hessian,
    /// Lines of the cubic through a point, with multiplicities.
    LinesThrough,
    /// First or second type of a line on the cubic.
    ClassifyLine,
    /// Whether a point of the cubic is an Eckardt point.
    Eckardt,
    /// Lines meeting a line of the cubic at one of its points.
    Fiber,
    /// Points where a line of the cubic meets the Hessian.
    HessianTrace,
    /// Classify 3 to 5 lines in P4 with respect to 2-planes.
    SpecialPosition,
    /// Rank of the Plücker points of 3 to 6 lines.
    CbRank,
    /// Common transversals of a set of lines.
    Transversals,
    /// Certify the scheme invariants of the Hessian modulo two primes.
    KleinCertify,
    /// Smoothness of a cubic modulo primes.
    SmoothCheck,
}

#[derive(Debug, Parser)]
#[command(name = "cubica", version, about = "Exact geometry of cubic threefolds in P4 and their lines")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    /// A polynomial, a file, or builtin:klein / builtin:fermat.
    #[arg(long, global = true)]
    pub cubic: Option<String>,
    /// Comma-separated coordinates or a JSON file.
    #[arg(long, global = true)]
    pub point: Option<String>,
    /// Two points `p;q` or a JSON file.
    #[arg(long, global = true)]
    pub line: Option<String>,
    /// Lines separated by `|` or a JSON file.
    #[arg(long, global = true)]
    pub lines: Option<String>,
    /// qq or fp:P.
    #[arg(long, global = true, default_value = "fp:32003")]
    pub field: String,
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    #[arg(long, global = true)]
    pub trials: Option<usize>,
    /// Two primes, e.g. 101,32003.
    #[arg(long, global = true)]
    pub primes: Option<String>,
    #[arg(long, global = true, value_enum, default_value = "json")]
    pub format: Format,
    /// Exit with status 1 unless the configuration is special.
    #[arg(long, global = true)]
    pub expect_special: bool,
}

#[derive(Debug)]
pub struct CliError {
    pub code: u8,
    pub message: String,
}

impl CliError {
    pub fn input(message: impl Into<String>) -> Self {
        CliError { code: 2, message: message.into() }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::ResourceCap(_) => 3,
            Error::SingularPoint
            | Error::EckardtPoint
            | Error::SingularAlongLine(_)
            | Error::BadReduction { .. }
            | Error::DegeneratePencil(_)
            | Error::EmptyScheme
            | Error::SamplingExhausted(_) => 1,
            _ => 2,
        };
        CliError { code, message: e.to_string() }
    }
}

/// What a command writes and the status it exits with.
pub struct Report {
    pub json: serde_json::Value,
    pub text: Option<String>,
    pub code: u8,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match commands::run(&cli) {
        Ok(r) => {
            let out = match (cli.format, r.text) {
                (Format::Text, Some(t)) => t,
                (Format::Text, None) => commands::render_text(&r.json),
                (Format::Json, _) => serde_json::to_string_pretty(&r.json).expect("serializable") + "\n",
            };
            print!("{out}");
            ExitCode::from(r.code)
        }
        Err(e) => {
            eprintln!("error: {}", e.message);
            ExitCode::from(e.code)
        }
    }
}
