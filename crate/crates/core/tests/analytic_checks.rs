//! Numeric branch behavior against the exact series and along continued
//! paths.

use num_complex::Complex64;
use num_traits::ToPrimitive;
use walks_core::analytic::{
    closed_form, dominant_root_check, AnalyticConstants, ClosedFormTarget, EvalMethod,
    KernelBranches, Tolerances,
};
use walks_core::series::{kernel_root_series, xi_series, KernelBranch};

fn eval_useries(series: &walks_core::series::USeries, x: f64) -> f64 {
    let mut acc = 0.0;
    for c in series.coeffs().iter().rev() {
        let v = c.numer().to_f64().unwrap() / c.denom().to_f64().unwrap();
        acc = acc * x + v;
    }
    acc
}

fn eval_sqrt_series(series: &walks_core::series::SqrtSeries, x: f64) -> f64 {
    eval_useries(series.even(), x) + x.sqrt() * eval_useries(series.odd(), x)
}

#[test]
fn branch_values_match_series_at_a_small_point() {
    let ctx = KernelBranches::new(Tolerances::default());
    let x = 0.01;
    let values = ctx.eval(Complex64::new(x, 0.0)).unwrap();
    assert_eq!(values.method, EvalMethod::SeriesNearZero);
    let branches = [
        kernel_root_series(KernelBranch::Xi0, 20),
        kernel_root_series(KernelBranch::Xi1, 20),
        kernel_root_series(KernelBranch::Xi2, 20),
    ];
    for (i, series) in branches.iter().enumerate() {
        let expect = eval_sqrt_series(series, x);
        assert!(
            (values.values[i].re - expect).abs() < 1e-12,
            "branch {i}: {} vs series {expect}",
            values.values[i].re
        );
        assert!(values.values[i].im.abs() < 1e-14);
    }
}

#[test]
fn closed_forms_match_series_oracle() {
    let xi = xi_series(30);
    let value = closed_form(ClosedFormTarget::Xi, Complex64::new(0.1, 0.0));
    assert!((value.re - eval_useries(&xi, 0.1)).abs() < 1e-12);
    assert!(value.im.abs() < 1e-14);
    // ψ at the critical point: √x_c ψ(x_c) = 3y_c/2
    let c = AnalyticConstants::new();
    let psi_c = closed_form(ClosedFormTarget::Psi, Complex64::new(c.x_c, 0.0));
    let product = c.x_c.sqrt() * psi_c.re;
    assert!((product - 1.5 * c.y_c).abs() < 1e-9);
    assert!(psi_c.im.abs() < 1e-12);
}

#[test]
fn rotated_critical_values_follow_the_cube_root_symmetry() {
    let ctx = KernelBranches::new(Tolerances::default());
    let c = AnalyticConstants::new();
    let j = c.j;
    let j2 = j * j;
    let table = [
        (j * c.x_c, [j2 * c.y_c, -2.0 * j2 * c.y_c, j2 * c.y_c]),
        (j2 * c.x_c, [j * c.y_c, -2.0 * j * c.y_c, j * c.y_c]),
    ];
    for (point, expect) in table {
        let values = ctx.eval(point).unwrap().values;
        for i in 0..3 {
            assert!(
                (values[i] - expect[i]).norm() < 1e-8,
                "branch {i} at {point}: {} vs {}",
                values[i],
                expect[i]
            );
        }
    }
}

#[test]
fn labels_are_continuous_along_a_sampled_arc() {
    // quarter arc at radius 0.3: consecutive evaluations of one label stay
    // far closer together than the local root separation
    let ctx = KernelBranches::new(Tolerances::default());
    let mut previous: Option<[Complex64; 3]> = None;
    for k in 0..=40 {
        let theta = 0.5 * std::f64::consts::PI * k as f64 / 40.0;
        let x = Complex64::from_polar(0.3, theta);
        let values = ctx.eval(x).unwrap().values;
        if let Some(prev) = previous {
            for i in 0..3 {
                let moved = (values[i] - prev[i]).norm();
                let mut separation = f64::INFINITY;
                for m in 0..3 {
                    for n in (m + 1)..3 {
                        separation = separation.min((values[m] - values[n]).norm());
                    }
                }
                assert!(
                    moved < 0.5 * separation,
                    "label {i} jumped by {moved} (separation {separation}) at θ={theta}"
                );
            }
        }
        previous = Some(values);
    }
}

#[test]
fn dominant_root_everywhere_on_a_coarse_grid() {
    let tol = Tolerances::default();
    for re in -10..=10 {
        for im in -10..=10 {
            let x = Complex64::new(re as f64 / 3.0, im as f64 / 3.0);
            if x.norm() < 1e-9 {
                continue;
            }
            assert!(
                dominant_root_check(x, &tol).unwrap(),
                "no dominant root at {x}"
            );
        }
    }
}
