//! Per-point numeric roots of the kernel cubic `y³ − xy + x³ = 0`.

use num_complex::Complex64;

use super::Tolerances;

/// `|y³ − xy + x³|` at a candidate root.
pub fn residual(x: Complex64, y: Complex64) -> f64 {
    (y * y * y - x * y + x * x * x).norm()
}

/// Acceptable residual at `x`: relative to `max(1, |x|³)`.
pub fn residual_tolerance(x: Complex64, tol: &Tolerances) -> f64 {
    tol.residual_rel * x.norm().powi(3).max(1.0)
}

fn newton_polish(x: Complex64, mut y: Complex64) -> Complex64 {
    for _ in 0..4 {
        let f = y * y * y - x * y + x * x * x;
        let df = 3.0 * y * y - x;
        if df.norm() < 1e-14 {
            break;
        }
        let step = f / df;
        y -= step;
        if step.norm() < 1e-16 * y.norm().max(1.0) {
            break;
        }
    }
    y
}

/// Cardano roots with Newton polish, in no particular order.
pub fn kernel_roots_raw(x: Complex64) -> [Complex64; 3] {
    if x.norm() == 0.0 {
        return [Complex64::new(0.0, 0.0); 3];
    }
    // depressed cubic y³ + p y + q with p = −x, q = x³
    let p = -x;
    let q = x * x * x;
    let half_q = 0.5 * q;
    let discriminant = half_q * half_q + (p / 3.0).powu(3);
    let sq = discriminant.sqrt();
    // pick the branch that avoids cancellation
    let mut u3 = -half_q + sq;
    if (-half_q - sq).norm() > u3.norm() {
        u3 = -half_q - sq;
    }
    if u3.norm() == 0.0 {
        // p = q = 0 handled above; a zero here means q/2 = ±sq exactly,
        // fall back to the other combination
        u3 = -q;
    }
    let u = u3.cbrt();
    let omega = Complex64::from_polar(1.0, 2.0 * std::f64::consts::PI / 3.0);
    let mut roots = [Complex64::default(); 3];
    let mut uk = u;
    for slot in roots.iter_mut() {
        *slot = newton_polish(x, uk - p / (3.0 * uk));
        uk *= omega;
    }
    roots
}

/// Roots with the critical-point collapse: when two roots nearly coincide
/// the cluster is replaced by `±√(x/3)` (whichever sign matches) and the
/// third by `∓2√(x/3)`, provided that strictly improves the worst residual.
/// Exactly at the four critical abscissas this recovers the double root to
/// machine precision, where generic root-finding loses half the digits.
pub fn kernel_roots(x: Complex64, tol: &Tolerances) -> [Complex64; 3] {
    let mut roots = kernel_roots_raw(x);
    let mut pair = (0usize, 1usize);
    let mut best = f64::INFINITY;
    for a in 0..3 {
        for b in (a + 1)..3 {
            let d = (roots[a] - roots[b]).norm();
            if d < best {
                best = d;
                pair = (a, b);
            }
        }
    }
    if best > tol.snap_separation * x.norm().max(1.0) {
        return roots;
    }
    let other = 3 - pair.0 - pair.1;
    // a genuine double-root cluster sits far away from the simple root
    let mean = 0.5 * (roots[pair.0] + roots[pair.1]);
    if (roots[other] - mean).norm() < 10.0 * best.max(1e-300) {
        return roots;
    }
    let mut double = (x / 3.0).sqrt();
    if (double - mean).norm() > (-double - mean).norm() {
        double = -double;
    }
    let third = -2.0 * double;
    let worst_new = residual(x, double).max(residual(x, third));
    if worst_new <= 0.1 * residual_tolerance(x, tol) {
        roots[pair.0] = double;
        roots[pair.1] = double;
        roots[other] = third;
    }
    roots
}
