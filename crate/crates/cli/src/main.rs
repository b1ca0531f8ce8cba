mod args;
mod commands;
mod report;

use std::process::ExitCode;

use clap::Parser;
use torsionlab::{DoubleDouble, Error, Precision};

use crate::args::{Cli, Command, RunConfig};
use crate::report::Report;

/// Exit 2 for rejected input, exit 1 for failed checks or computations.
#[derive(Debug)]
pub enum CliError {
    Invalid(String),
    Failed(String),
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        match e {
            Error::ExcludedTwist(_)
            | Error::IndexOutOfRange { .. }
            | Error::EmptySweep
            | Error::Parse { .. }
            | Error::UnknownGenerator(_)
            | Error::UnknownGeneratorName(_) => CliError::Invalid(e.to_string()),
            other => CliError::Failed(other.to_string()),
        }
    }
}

macro_rules! at_precision {
    ($precision:expr, $f:ident ( $($arg:expr),* )) => {
        match $precision {
            Precision::Binary64 => commands::$f::<f64>($($arg),*),
            Precision::DoubleDouble => commands::$f::<DoubleDouble>($($arg),*),
        }
    };
}

fn run(cli: &Cli) -> Result<(Report, Vec<String>), CliError> {
    let cfg = RunConfig::from_cli(cli)?;
    let p = cfg.precision;
    match &cli.command {
        Command::Reps { n, k, j, presentation_file } => {
            Ok((at_precision!(p, reps(*n, *k, *j, presentation_file.as_deref()))?, vec![]))
        }
        Command::Torsion { n, j, big_n, oracle } => {
            let (report, failed) = at_precision!(p, torsion(*n, *j, *big_n, *oracle, cfg.seed))?;
            let failures = if failed { vec!["oracle disagreement above 1e-9".to_string()] } else { vec![] };
            Ok((report, failures))
        }
        Command::Asymptotics { n, j, n_max } => Ok((at_precision!(p, asymptotics(*n, *j, *n_max))?, vec![])),
        Command::Limits { n } => Ok((at_precision!(p, limits(*n))?, vec![])),
        Command::Verify { n } => commands::verify(n, cfg.seed),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok((report, failures)) => {
            print!("{}", report.render(cli.common.format));
            if failures.is_empty() {
                ExitCode::SUCCESS
            } else {
                for f in failures {
                    eprintln!("FAIL {f}");
                }
                ExitCode::from(1)
            }
        }
        Err(CliError::Invalid(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(CliError::Failed(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn error_classes_map_to_exit_codes() {
        assert!(matches!(CliError::from(Error::ExcludedTwist(0)), CliError::Invalid(_)));
        assert!(matches!(CliError::from(Error::EmptySweep), CliError::Invalid(_)));
        assert!(matches!(
            CliError::from(Error::Parse { line: 1, msg: "x".into() }),
            CliError::Invalid(_)
        ));
        assert!(matches!(CliError::from(Error::NotAcyclic { degree: 1 }), CliError::Failed(_)));
        assert!(matches!(CliError::from(Error::KleinFactor("2".into())), CliError::Failed(_)));
    }
}
