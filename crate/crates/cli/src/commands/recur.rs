use std::fmt::Write as _;
use std::fs;

use serde::Serialize;
use walks_core::recurrence::{evaluate_box, validate, RecurrenceSpec, Validation};

use crate::output::{emit, fail, to_json, CliError};
use crate::{OutputFormat, RecurArgs};

#[derive(Serialize)]
struct ValidationReport {
    valid: bool,
    apex: Vec<i64>,
    class: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    ranking_weight: Option<Vec<String>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    witness: Option<Vec<String>>,
}

#[derive(Serialize)]
struct ValueRow {
    n: Vec<i64>,
    value: String,
}

#[derive(Serialize)]
struct EvalReport {
    validation: ValidationReport,
    values: Vec<ValueRow>,
}

fn parse_box(text: &str, dim: usize) -> Result<(Vec<i64>, Vec<i64>), CliError> {
    let mut lo = Vec::new();
    let mut hi = Vec::new();
    for part in text.split(',') {
        let (a, b) = part
            .trim()
            .split_once(':')
            .ok_or_else(|| CliError(format!("--box: expected lo:hi, got {part:?}")))?;
        lo.push(a.trim().parse::<i64>().map_err(|e| CliError(format!("--box: {e}")))?);
        hi.push(b.trim().parse::<i64>().map_err(|e| CliError(format!("--box: {e}")))?);
    }
    if lo.len() != dim {
        return fail(format!("--box has {} ranges, spec has dimension {dim}", lo.len()));
    }
    Ok((lo, hi))
}

fn coordinate_names(dim: usize) -> Vec<String> {
    match dim {
        1 => vec!["i".into()],
        2 => vec!["i".into(), "j".into()],
        3 => vec!["i".into(), "j".into(), "n".into()],
        d => (1..=d).map(|k| format!("n{k}")).collect(),
    }
}

pub fn run(args: RecurArgs) -> Result<i32, CliError> {
    let text = fs::read_to_string(&args.spec)
        .map_err(|e| CliError(format!("--spec {}: {e}", args.spec.display())))?;
    let spec: RecurrenceSpec =
        serde_json::from_str(&text).map_err(|e| CliError(format!("--spec: {e}")))?;

    let validation = validate(&spec);
    let validation_report = match &validation {
        Validation::Valid(w) => ValidationReport {
            valid: true,
            apex: spec.apex(),
            class: spec.classification().to_string(),
            ranking_weight: Some(w.weights.iter().map(|q| q.to_string()).collect()),
            witness: None,
        },
        Validation::Invalid(witness) => ValidationReport {
            valid: false,
            apex: spec.apex(),
            class: spec.classification().to_string(),
            ranking_weight: None,
            witness: Some(witness.lambda.iter().map(|q| q.to_string()).collect()),
        },
    };

    if args.validate_only || args.r#box.is_none() {
        match args.format {
            OutputFormat::Json => emit(&args.out, &to_json(&validation_report))?,
            _ => {
                let mut text = String::new();
                writeln!(
                    text,
                    "apex {:?}, class {}",
                    validation_report.apex, validation_report.class
                )
                .unwrap();
                match &validation {
                    Validation::Valid(w) => {
                        let ws: Vec<String> = w.weights.iter().map(|q| q.to_string()).collect();
                        write!(text, "valid: ranking weight ({})", ws.join(", ")).unwrap();
                    }
                    Validation::Invalid(witness) => {
                        let ls: Vec<String> =
                            witness.lambda.iter().map(|q| q.to_string()).collect();
                        write!(text, "invalid: orthant witness ({})", ls.join(", ")).unwrap();
                    }
                }
                emit(&args.out, &text)?;
            }
        }
        return Ok(0);
    }

    let box_text = args.r#box.as_deref().expect("checked above");
    let (lo, hi) = parse_box(box_text, spec.dim())?;
    let values = evaluate_box(&spec, &lo, &hi).map_err(|e| CliError(e.to_string()))?;

    let rendered = match args.format {
        OutputFormat::Csv => {
            let names = coordinate_names(spec.dim());
            let mut out = names.join(",");
            out.push_str(",value\n");
            for (point, value) in &values {
                let coords: Vec<String> = point.iter().map(|v| v.to_string()).collect();
                writeln!(out, "{},{}", coords.join(","), value).unwrap();
            }
            out
        }
        OutputFormat::Json => {
            let report = EvalReport {
                validation: validation_report,
                values: values
                    .iter()
                    .map(|(point, value)| ValueRow {
                        n: point.clone(),
                        value: value.to_string(),
                    })
                    .collect(),
            };
            to_json(&report)
        }
        OutputFormat::Pretty => {
            if spec.dim() == 2 {
                // j decreasing rows, i increasing columns, like the tables
                let width = values
                    .values()
                    .map(|v| v.to_string().len())
                    .max()
                    .unwrap_or(1)
                    .max(2);
                let mut out = String::new();
                for j in (lo[1]..=hi[1]).rev() {
                    write!(out, "{j:>3} |").unwrap();
                    for i in lo[0]..=hi[0] {
                        let cell = values
                            .get(&vec![i, j])
                            .map(|v| v.to_string())
                            .unwrap_or_default();
                        write!(out, " {cell:>width$}").unwrap();
                    }
                    out.push('\n');
                }
                write!(out, "    +").unwrap();
                for _ in lo[0]..=hi[0] {
                    write!(out, "-{:->width$}", "").unwrap();
                }
                out.push('\n');
                write!(out, "     ").unwrap();
                for i in lo[0]..=hi[0] {
                    write!(out, " {i:>width$}").unwrap();
                }
                out
            } else {
                let mut out = String::new();
                for (point, value) in &values {
                    writeln!(out, "{point:?} -> {value}").unwrap();
                }
                out
            }
        }
    };
    emit(&args.out, &rendered)?;
    Ok(0)
}
