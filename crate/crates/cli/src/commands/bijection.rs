use std::collections::BTreeMap;

use serde::Serialize;
use walks_core::bijection::{flip_down, flip_up, Walk};

use crate::output::{emit, fail, parse_point, parse_steps, to_json, CliError};
use crate::{BijectionArgs, FlipDirection, OutputFormat};

const DEFAULT_LEGEND: &[(&str, (i64, i64))] = &[
    ("N", (0, 1)),
    ("E", (1, 0)),
    ("S", (0, -1)),
    ("W", (-1, 0)),
    ("NE", (1, 1)),
    ("NW", (-1, 1)),
    ("SE", (1, -1)),
    ("SW", (-1, -1)),
];

fn parse_legend(text: Option<&str>) -> Result<BTreeMap<String, (i64, i64)>, CliError> {
    let mut legend: BTreeMap<String, (i64, i64)> = DEFAULT_LEGEND
        .iter()
        .map(|&(name, v)| (name.to_string(), v))
        .collect();
    if let Some(text) = text {
        for item in text.split(';') {
            let item = item.trim();
            if item.is_empty() {
                continue;
            }
            let (name, vector) = item
                .split_once('=')
                .ok_or_else(|| CliError(format!("--legend: expected NAME=dx,dy, got {item:?}")))?;
            let v = parse_point(vector)?;
            legend.insert(name.trim().to_string(), v);
        }
    }
    Ok(legend)
}

fn step_name(legend: &BTreeMap<String, (i64, i64)>, step: (i64, i64)) -> String {
    legend
        .iter()
        .find(|(_, &v)| v == step)
        .map(|(name, _)| name.clone())
        .unwrap_or_else(|| format!("({},{})", step.0, step.1))
}

#[derive(Serialize)]
struct BijectionReport {
    direction: String,
    input: Vec<String>,
    image: Vec<String>,
    image_vectors: Vec<[i64; 2]>,
    flipped: Vec<usize>,
    start: [i64; 2],
    end: [i64; 2],
}

pub fn run(args: BijectionArgs) -> Result<i32, CliError> {
    let steps = parse_steps(&args.steps)?;
    let start = parse_point(&args.start)?;
    let legend = parse_legend(args.legend.as_deref())?;
    let mut vectors = Vec::new();
    for name in args.walk.split(',') {
        let name = name.trim();
        match legend.get(name) {
            Some(&v) => vectors.push(v),
            None => return fail(format!("--walk: unknown step name {name:?}")),
        }
    }
    let walk =
        Walk::new(start, vectors, &steps).map_err(|e| CliError(format!("--walk: {e}")))?;
    let result = match args.direction {
        FlipDirection::Down => flip_down(&walk, &steps),
        FlipDirection::Up => flip_up(&walk, &steps),
    }
    .map_err(|e| CliError(e.to_string()))?;

    let report = BijectionReport {
        direction: match args.direction {
            FlipDirection::Down => "down".into(),
            FlipDirection::Up => "up".into(),
        },
        input: walk.steps().iter().map(|&s| step_name(&legend, s)).collect(),
        image: result
            .walk
            .steps()
            .iter()
            .map(|&s| step_name(&legend, s))
            .collect(),
        image_vectors: result.walk.steps().iter().map(|&(a, b)| [a, b]).collect(),
        flipped: result.flipped.clone(),
        start: [start.0, start.1],
        end: [result.walk.end().0, result.walk.end().1],
    };
    match args.format {
        OutputFormat::Pretty => {
            let mut text = String::new();
            text.push_str(&format!("input:   {}\n", report.input.join(",")));
            text.push_str(&format!(
                "image:   {}  (ends at ({}, {}))\n",
                report.image.join(","),
                report.end[0],
                report.end[1]
            ));
            text.push_str(&format!("flipped: {:?}", report.flipped));
            emit(&None, &text)?;
        }
        OutputFormat::Json => emit(&None, &to_json(&report))?,
        OutputFormat::Csv => return fail("bijection has no csv form"),
    }
    Ok(0)
}
