mod analytic;
mod bijection;
mod count;
mod criterion;
mod recur;
mod series;
mod verify;

use crate::output::CliError;
use crate::{Cli, Command};

pub fn run(cli: Cli) -> Result<i32, CliError> {
    match cli.command {
        Command::Criterion(args) => criterion::run(args),
        Command::Count(args) => count::run(args),
        Command::Bijection(args) => bijection::run(args),
        Command::Series(args) => series::run(args),
        Command::Verify(args) => verify::run(args),
        Command::Analytic(args) => analytic::run(args),
        Command::Recur(args) => recur::run(args),
    }
}
