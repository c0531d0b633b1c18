use serde::Serialize;
use walks_core::series::{f_series, g_series_iterated, phi_series, psi_series, xi_series, USeries};

use crate::output::{emit, fail, to_json, CliError};
use crate::{OutputFormat, SeriesArgs, SeriesName};

#[derive(Serialize)]
struct SeriesReport {
    which: String,
    order: usize,
    /// `coeffs[k]` is the coefficient of `x^k` as an exact `[num, den]` pair.
    coeffs: Vec<[String; 2]>,
}

pub fn run(args: SeriesArgs) -> Result<i32, CliError> {
    let (name, series): (&str, USeries) = match args.which {
        SeriesName::Xi => {
            if args.order < 2 {
                return fail("--order: xi starts at x^2, need order >= 2");
            }
            ("xi", xi_series(args.order))
        }
        SeriesName::Psi => ("psi", psi_series(args.order)),
        SeriesName::Phi => {
            if args.order < 2 {
                return fail("--order: phi starts at x^2, need order >= 2");
            }
            ("phi", phi_series(args.order))
        }
        SeriesName::G => {
            if args.order < 6 {
                return fail("--order: G starts at x^6, need order >= 6");
            }
            ("G", g_series_iterated(args.order))
        }
        SeriesName::F => ("F", f_series(args.order)),
    };
    let report = SeriesReport {
        which: name.to_string(),
        order: series.order(),
        coeffs: series
            .coeffs()
            .iter()
            .map(|c| [c.numer().to_string(), c.denom().to_string()])
            .collect(),
    };
    match args.format {
        OutputFormat::Json => emit(&None, &to_json(&report))?,
        OutputFormat::Pretty => emit(&None, &format!("{name} = {series}"))?,
        OutputFormat::Csv => return fail("series has no csv form"),
    }
    Ok(0)
}
