use std::fmt::Write as _;

use serde::Serialize;
use walks_core::enumerate::{count_half_plane, count_quadrant, CountGrid};

use crate::output::{emit, parse_point, parse_steps, to_json, CliError};
use crate::{CountArgs, OutputFormat, RegionArg};

#[derive(Serialize)]
struct AggregateEntry {
    i: i64,
    j: i64,
    count: String,
}

#[derive(Serialize)]
struct LayerEntry {
    i: i64,
    j: i64,
    n: usize,
    count: String,
}

#[derive(Serialize)]
struct CountReport {
    steps: String,
    start: [i64; 2],
    region: String,
    n_max: usize,
    aggregate: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    entries: Option<Vec<AggregateEntry>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    layers: Option<Vec<LayerEntry>>,
}

pub fn run(args: CountArgs) -> Result<i32, CliError> {
    let steps = parse_steps(&args.steps)?;
    let start = parse_point(&args.start)?;
    let grid = match args.region {
        RegionArg::Quadrant => count_quadrant(&steps, start, args.nmax),
        RegionArg::HalfPlane => count_half_plane(&steps, start, args.nmax),
    }
    .map_err(|e| CliError(e.to_string()))?;

    let rendered = match (args.format, args.aggregate) {
        (OutputFormat::Csv, true) => {
            let mut out = String::from("i,j,count\n");
            for ((i, j), c) in grid.aggregated() {
                writeln!(out, "{i},{j},{c}").unwrap();
            }
            out
        }
        (OutputFormat::Csv, false) => {
            let mut out = String::from("i,j,n,count\n");
            for n in 0..=grid.n_max() {
                for (&(i, j), c) in grid.layer(n) {
                    writeln!(out, "{i},{j},{n},{c}").unwrap();
                }
            }
            out
        }
        (OutputFormat::Json, aggregate) => {
            let report = CountReport {
                steps: steps.to_string(),
                start: [start.0, start.1],
                region: match args.region {
                    RegionArg::Quadrant => "quadrant".into(),
                    RegionArg::HalfPlane => "half-plane".into(),
                },
                n_max: grid.n_max(),
                aggregate,
                entries: aggregate.then(|| {
                    grid.aggregated()
                        .into_iter()
                        .map(|((i, j), c)| AggregateEntry {
                            i,
                            j,
                            count: c.to_string(),
                        })
                        .collect()
                }),
                layers: (!aggregate).then(|| {
                    let mut rows = Vec::new();
                    for n in 0..=grid.n_max() {
                        for (&(i, j), c) in grid.layer(n) {
                            rows.push(LayerEntry {
                                i,
                                j,
                                n,
                                count: c.to_string(),
                            });
                        }
                    }
                    rows
                }),
            };
            to_json(&report)
        }
        (OutputFormat::Pretty, true) => render_table(&grid),
        (OutputFormat::Pretty, false) => {
            let mut out = String::new();
            for n in 0..=grid.n_max() {
                let layer = grid.layer(n);
                if layer.is_empty() {
                    continue;
                }
                writeln!(out, "length {n}:").unwrap();
                for (&(i, j), c) in layer {
                    writeln!(out, "  ({i},{j}) -> {c}").unwrap();
                }
            }
            out
        }
    };
    emit(&args.out, &rendered)?;
    Ok(0)
}

/// Grid layout with j decreasing top to bottom, like the published tables;
/// zero cells stay blank.
fn render_table(grid: &CountGrid) -> String {
    let agg = grid.aggregated();
    if agg.is_empty() {
        return "(no reachable cells)".into();
    }
    let max_i = agg.keys().map(|&(i, _)| i).max().unwrap();
    let min_j = agg.keys().map(|&(_, j)| j).min().unwrap();
    let max_j = agg.keys().map(|&(_, j)| j).max().unwrap();
    let width = agg
        .values()
        .map(|c| c.to_string().len())
        .max()
        .unwrap()
        .max(2);
    let jwidth = max_j.to_string().len().max(min_j.to_string().len()).max(1);
    let mut out = String::new();
    for j in (min_j..=max_j).rev() {
        write!(out, "{j:>jwidth$} |").unwrap();
        for i in 0..=max_i {
            match agg.get(&(i, j)) {
                Some(c) => write!(out, " {:>width$}", c.to_string()).unwrap(),
                None => write!(out, " {:>width$}", "").unwrap(),
            }
        }
        out.push('\n');
    }
    write!(out, "{:>jwidth$} +", "").unwrap();
    for _ in 0..=max_i {
        write!(out, "-{:->width$}", "").unwrap();
    }
    out.push('\n');
    write!(out, "{:>jwidth$}  ", "").unwrap();
    for i in 0..=max_i {
        write!(out, " {i:>width$}").unwrap();
    }
    out.push('\n');
    out
}
