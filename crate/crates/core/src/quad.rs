//! One-dimensional quadrature over finite intervals.
//!
//! Adaptive Simpson with Richardson acceptance is all the crate needs: the
//! integrands are smooth rational functions on closed intervals. The
//! composite rule is kept alongside so callers can demonstrate grid-halving
//! stability.

/// Adaptive Simpson integration of `f` over [a, b] to absolute tolerance
/// `tol`.
pub fn adaptive_simpson<F: Fn(f64) -> f64>(f: &F, a: f64, b: f64, tol: f64) -> f64 {
    if a == b {
        return 0.0;
    }
    let fa = f(a);
    let fb = f(b);
    let m = 0.5 * (a + b);
    let fm = f(m);
    let whole = simpson(a, b, fa, fm, fb);
    adaptive_step(f, a, b, fa, fm, fb, whole, tol, 50)
}

/// Composite Simpson rule with `panels` equal panels (each panel is one
/// Simpson parabola, i.e. 2·panels subintervals).
pub fn composite_simpson<F: Fn(f64) -> f64>(f: &F, a: f64, b: f64, panels: usize) -> f64 {
    assert!(panels >= 1, "composite Simpson needs at least one panel");
    if a == b {
        return 0.0;
    }
    let h = (b - a) / panels as f64;
    let mut total = 0.0;
    for i in 0..panels {
        let lo = a + i as f64 * h;
        let hi = lo + h;
        let mid = 0.5 * (lo + hi);
        total += simpson(lo, hi, f(lo), f(mid), f(hi));
    }
    total
}

fn simpson(a: f64, b: f64, fa: f64, fm: f64, fb: f64) -> f64 {
    (b - a) / 6.0 * (fa + 4.0 * fm + fb)
}

#[allow(clippy::too_many_arguments)]
fn adaptive_step<F: Fn(f64) -> f64>(
    f: &F,
    a: f64,
    b: f64,
    fa: f64,
    fm: f64,
    fb: f64,
    whole: f64,
    tol: f64,
    depth: u32,
) -> f64 {
    let m = 0.5 * (a + b);
    let lm = 0.5 * (a + m);
    let rm = 0.5 * (m + b);
    let flm = f(lm);
    let frm = f(rm);
    let left = simpson(a, m, fa, flm, fm);
    let right = simpson(m, b, fm, frm, fb);
    let delta = left + right - whole;
    if depth == 0 || delta.abs() <= 15.0 * tol {
        // Richardson extrapolation of the two half-panel estimates.
        return left + right + delta / 15.0;
    }
    adaptive_step(f, a, m, fa, flm, fm, left, 0.5 * tol, depth - 1)
        + adaptive_step(f, m, b, fm, frm, fb, right, 0.5 * tol, depth - 1)
}
