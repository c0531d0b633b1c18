use serde::Serialize;

use crate::output::{emit, fail, parse_steps, to_json, CliError};
use crate::{CriterionArgs, OutputFormat};

#[derive(Serialize)]
struct CriterionReport {
    steps: String,
    x_symmetric: bool,
    small_height_variation: bool,
    verdict: String,
}

pub fn run(args: CriterionArgs) -> Result<i32, CliError> {
    let steps = parse_steps(&args.steps)?;
    let report = CriterionReport {
        steps: steps.to_string(),
        x_symmetric: steps.is_x_symmetric(),
        small_height_variation: steps.has_small_height_variation(),
        verdict: steps.holonomy_criterion().to_string(),
    };
    match args.format {
        OutputFormat::Pretty => emit(&None, &report.verdict)?,
        OutputFormat::Json => emit(&None, &to_json(&report))?,
        OutputFormat::Csv => return fail("criterion has no csv form"),
    }
    Ok(0)
}
