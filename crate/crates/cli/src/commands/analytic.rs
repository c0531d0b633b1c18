use num_complex::Complex64;
use serde::Serialize;
use walks_core::analytic::{
    gprime_bound_check, radius_estimate, singularity_chain_rec2, singularity_survey,
    AnalyticConstants, KernelBranches, Tolerances,
};
use walks_core::enumerate::count_quadrant;
use walks_core::recurrence::f_sequence;
use walks_core::stepset::StepSet;

use crate::output::{complex_pair, emit, fail, to_json, CliError};
use crate::{AnalyticArgs, AnalyticCmd, RadiusSeries};

#[derive(Serialize)]
struct SurveyRow {
    branch: String,
    candidate: [f64; 2],
    classification: String,
    derivative_exponents: [f64; 2],
    #[serde(skip_serializing_if = "Option::is_none")]
    fit: Option<FitRow>,
}

#[derive(Serialize)]
struct FitRow {
    location: [f64; 2],
    limit: [f64; 2],
    slope: f64,
    exponent: f64,
}

#[derive(Serialize)]
struct ChainRow {
    points: Vec<[f64; 2]>,
    moduli: Vec<f64>,
    roots_at_x1: Vec<[f64; 2]>,
}

#[derive(Serialize)]
struct RadiusRow {
    which: String,
    index_used: usize,
    estimate: f64,
    reference: f64,
    relative_error: f64,
}

#[derive(Serialize)]
struct GboundRow {
    bound_value: f64,
    threshold: f64,
    comparison_value: f64,
    passes: bool,
}

#[derive(Serialize)]
struct EvalRow {
    at: [f64; 2],
    xi0: [f64; 2],
    xi1: [f64; 2],
    xi2: [f64; 2],
    method: String,
}

pub fn run(args: AnalyticArgs) -> Result<i32, CliError> {
    let tol = Tolerances::default();
    match args.check {
        AnalyticCmd::Survey => {
            let reports = singularity_survey(&tol).map_err(|e| CliError(e.to_string()))?;
            let rows: Vec<SurveyRow> = reports
                .iter()
                .map(|r| SurveyRow {
                    branch: format!("{:?}", r.branch).to_lowercase(),
                    candidate: complex_pair(r.candidate),
                    classification: format!("{:?}", r.classification).to_lowercase(),
                    derivative_exponents: r.derivative_exponents,
                    fit: r.fit.map(|f| FitRow {
                        location: complex_pair(f.location),
                        limit: complex_pair(f.limit),
                        slope: f.slope,
                        exponent: f.exponent,
                    }),
                })
                .collect();
            if args.json {
                emit(&None, &to_json(&rows))?;
            } else {
                let mut text = String::new();
                for row in &rows {
                    text.push_str(&format!(
                        "{:4} at ({:+.4}, {:+.4}): {}{}\n",
                        row.branch,
                        row.candidate[0],
                        row.candidate[1],
                        row.classification,
                        row.fit
                            .as_ref()
                            .map(|f| format!(" (exponent {:.3}, slope {:.4})", f.exponent, f.slope))
                            .unwrap_or_default()
                    ));
                }
                emit(&None, text.trim_end())?;
            }
            Ok(0)
        }
        AnalyticCmd::Chain => {
            let chain = singularity_chain_rec2(&tol).map_err(|e| CliError(e.to_string()))?;
            let row = ChainRow {
                points: chain.points.iter().map(|&p| complex_pair(p)).collect(),
                moduli: chain.points.iter().map(|p| p.norm()).collect(),
                roots_at_x1: chain.roots_at_x1.iter().map(|&p| complex_pair(p)).collect(),
            };
            if args.json {
                emit(&None, &to_json(&row))?;
            } else {
                let mut text = String::new();
                for (k, (p, m)) in row.points.iter().zip(&row.moduli).enumerate() {
                    text.push_str(&format!(
                        "x{k} = {:+.6} {:+.6}i   |x{k}| = {m:.6}\n",
                        p[0], p[1]
                    ));
                }
                emit(&None, text.trim_end())?;
            }
            Ok(0)
        }
        AnalyticCmd::Radius { which, order } => {
            let consts = AnalyticConstants::new();
            let (name, seq, stride) = match which {
                RadiusSeries::G => {
                    let grid = count_quadrant(&StepSet::knight(), (1, 1), order)
                        .map_err(|e| CliError(e.to_string()))?;
                    let mut g = grid.axis_sequence();
                    g.truncate(order + 1);
                    ("G", g, 3)
                }
                RadiusSeries::F => ("F", f_sequence(order), 1),
            };
            let est = radius_estimate(&seq, stride).map_err(|e| CliError(e.to_string()))?;
            let row = RadiusRow {
                which: name.into(),
                index_used: est.index_used,
                estimate: est.estimate,
                reference: consts.x_c,
                relative_error: (est.estimate - consts.x_c).abs() / consts.x_c,
            };
            if args.json {
                emit(&None, &to_json(&row))?;
            } else {
                emit(
                    &None,
                    &format!(
                        "{} radius estimate at index {}: {:.6} (x_c = {:.6}, rel. error {:.2}%)",
                        row.which,
                        row.index_used,
                        row.estimate,
                        row.reference,
                        100.0 * row.relative_error
                    ),
                )?;
            }
            Ok(0)
        }
        AnalyticCmd::Gbound => {
            let report = gprime_bound_check();
            let row = GboundRow {
                bound_value: report.bound_value,
                threshold: report.threshold,
                comparison_value: report.comparison_value,
                passes: report.passes,
            };
            if args.json {
                emit(&None, &to_json(&row))?;
            } else {
                emit(
                    &None,
                    &format!(
                        "majorant sum = {:.6} (< {}), 2*x_c^2*y_c = {:.6}: {}",
                        row.bound_value,
                        row.threshold,
                        row.comparison_value,
                        if row.passes { "pass" } else { "FAIL" }
                    ),
                )?;
            }
            Ok(if row.passes { 0 } else { 1 })
        }
        AnalyticCmd::Eval { at } => {
            let parts: Vec<&str> = at.split(',').map(str::trim).collect();
            if parts.len() != 2 {
                return fail(format!("--at: expected \"re,im\", got {at:?}"));
            }
            let re: f64 = parts[0]
                .parse()
                .map_err(|e| CliError(format!("--at: {e}")))?;
            let im: f64 = parts[1]
                .parse()
                .map_err(|e| CliError(format!("--at: {e}")))?;
            let ctx = KernelBranches::new(tol);
            let values = ctx
                .eval(Complex64::new(re, im))
                .map_err(|e| CliError(e.to_string()))?;
            let row = EvalRow {
                at: complex_pair(values.at),
                xi0: complex_pair(values.values[0]),
                xi1: complex_pair(values.values[1]),
                xi2: complex_pair(values.values[2]),
                method: format!("{:?}", values.method),
            };
            if args.json {
                emit(&None, &to_json(&row))?;
            } else {
                emit(
                    &None,
                    &format!(
                        "xi0 = {:+.12} {:+.12}i\nxi1 = {:+.12} {:+.12}i\nxi2 = {:+.12} {:+.12}i\n({})",
                        row.xi0[0], row.xi0[1], row.xi1[0], row.xi1[1], row.xi2[0], row.xi2[1], row.method
                    ),
                )?;
            }
            Ok(0)
        }
    }
}
