//! Acceptance suite: one test per release criterion, each printing a
//! PASS line when it holds (run with `-- --nocapture` to see them).
//!
//! Everything here runs at fixed, pinned tolerances; nothing is tuned at
//! runtime.

use approx::assert_abs_diff_eq;
use nmpauli::channels::{alpha_pm, kappa_toy, weights_depolarizing, ChannelParams, TimeParam};
use nmpauli::dynmap::{
    channel_intermediate, choi, intermediate_kraus, lambda_closed_form, IntermediateWindow,
};
use nmpauli::measures::{
    gamma_dephasing, gamma_from_kappa, gamma_normalized, n_blp, n_hcla_normalized,
    n_hcla_normalized_panels, trace_distance_pair, trace_distance_pi2,
};
use nmpauli::oracle::{evolve, helstrom_td, pair_states, DensityMatrix, PureStatePair};
use nmpauli::{tol, Error};
use std::f64::consts::{FRAC_PI_2, PI};
use std::process::Command;

fn tp(x: f64) -> TimeParam {
    TimeParam::new(x).unwrap()
}

fn window(lo: f64, hi: f64) -> IntermediateWindow {
    IntermediateWindow::from_values(lo.clamp(0.0, 0.5), hi.clamp(lo, 0.5)).unwrap()
}

#[test]
fn criterion_01_singularity_location() {
    let (a_minus_07, _) = alpha_pm(0.7).unwrap();
    assert_abs_diff_eq!(a_minus_07, 0.34238, epsilon = 5e-3);

    let (a_minus_03, _) = alpha_pm(0.3).unwrap();
    assert_abs_diff_eq!(a_minus_03 - 0.2, 0.2266, epsilon = 5e-3);
    assert_abs_diff_eq!(a_minus_03 + 0.03, 0.4566, epsilon = 5e-3);

    println!(
        "PASS criterion 1: singularity locations (alpha_minus(0.7) = {a_minus_07:.5}, \
         alpha_minus(0.3) = {a_minus_03:.5})"
    );
}

#[test]
fn criterion_02_blp_exactness() {
    let theta_grid = 201;
    let grid_step = PI / (theta_grid - 1) as f64;
    for i in 1..=10 {
        let alpha = i as f64 / 10.0;
        let report = n_blp(alpha, theta_grid).unwrap();
        assert!(
            (report.n_blp - alpha / 2.0).abs() < 1e-6,
            "alpha = {alpha}: N_BLP = {} vs {}",
            report.n_blp,
            alpha / 2.0
        );
        assert!(
            (report.theta_opt - FRAC_PI_2).abs() <= grid_step,
            "alpha = {alpha}: theta_opt = {}",
            report.theta_opt
        );
    }
    println!("PASS criterion 2: N_BLP = alpha/2 within 1e-6 with theta_opt at pi/2");
}

#[test]
fn criterion_03_eigenvalue_crossover() {
    let alpha = 0.3;
    let params = ChannelParams::dephasing(alpha).unwrap();
    let (a_minus, _) = alpha_pm(alpha).unwrap();
    let p_lo = a_minus - 0.2;

    // Numeric pipeline at the window's two distinguished endpoints.
    let eigs_at_lo =
        choi(&channel_intermediate(&params, window(p_lo, p_lo)).unwrap()).eigenvalues();
    assert_abs_diff_eq!(eigs_at_lo[0], 2.0, epsilon = 1e-9);
    assert_abs_diff_eq!(eigs_at_lo[3], 0.0, epsilon = 1e-9);

    let eigs_at_cross =
        choi(&channel_intermediate(&params, window(p_lo, a_minus)).unwrap()).eigenvalues();
    assert_abs_diff_eq!(eigs_at_cross[0], 1.0, epsilon = 1e-9);
    assert_abs_diff_eq!(eigs_at_cross[1], 1.0, epsilon = 1e-9);

    // Closed form against the numeric pipeline over a 50×50 window grid.
    for i in 0..50 {
        let w_lo = 0.5 * i as f64 / 49.0;
        if (w_lo - a_minus).abs() < 5e-3 {
            continue;
        }
        for j in 0..50 {
            let w_hi = w_lo + (0.5 - w_lo) * j as f64 / 49.0;
            let numeric =
                choi(&channel_intermediate(&params, window(w_lo, w_hi)).unwrap()).eigenvalues();
            let (li, lz) = lambda_closed_form(alpha, w_hi, w_lo).unwrap();
            let mut expected = [li, lz, 0.0, 0.0];
            expected.sort_by(|a, b| b.partial_cmp(a).unwrap());
            for k in 0..4 {
                assert!(
                    (numeric[k] - expected[k]).abs() <= tol::PIPELINE,
                    "window ({w_lo:.4}, {w_hi:.4}), eigenvalue {k}"
                );
            }
        }
    }
    println!("PASS criterion 3: eigenvalue crossover at (1,1); closed form = numeric to 1e-10");
}

#[test]
fn criterion_04_ncp_witness() {
    let alpha = 0.3;
    let params = ChannelParams::dephasing(alpha).unwrap();
    let (a_minus, _) = alpha_pm(alpha).unwrap();
    let p_lo = a_minus + 0.03;

    // Every window opening past the crossover is NCP, on a 200-point grid.
    for i in 1..=200 {
        let p_hi = p_lo + (0.5 - p_lo) * i as f64 / 200.0;
        let c = choi(&channel_intermediate(&params, window(p_lo, p_hi)).unwrap());
        assert!(c.min_eigenvalue() < 0.0, "window ({p_lo:.4}, {p_hi:.4})");
    }

    // Every window closing at or before the crossover is CP
    // (min eigenvalue >= -1e-12).
    for i in 0..20 {
        let w_lo = a_minus * i as f64 / 20.0;
        for j in 1..=10 {
            let w_hi = w_lo + (a_minus - w_lo) * j as f64 / 10.0;
            let c = choi(&channel_intermediate(&params, window(w_lo, w_hi)).unwrap());
            assert!(c.is_cp(), "window ({w_lo:.4}, {w_hi:.4}) should be CP");
        }
    }
    println!("PASS criterion 4: NCP witnessed past the crossover, CP verdicts before it");
}

#[test]
fn criterion_05_rate_sign_structure() {
    for alpha in [0.3, 0.5, 0.7, 0.9] {
        let (a_minus, _) = alpha_pm(alpha).unwrap();
        let kappa = |x: f64| (1.0 + alpha * (1.0 - x)) * x;
        for i in 1..=1000 {
            let p = 0.5 * i as f64 / 1000.0;
            if (p - a_minus).abs() < 1e-9 {
                continue;
            }
            let gamma = gamma_dephasing(alpha, p).unwrap();
            assert_eq!(
                gamma > 0.0,
                p < a_minus,
                "alpha = {alpha}, p = {p}: gamma = {gamma}"
            );
            if (p - a_minus).abs() > 1e-3 {
                let fd = gamma_from_kappa(kappa, p).unwrap();
                assert!(
                    (gamma - fd).abs() <= 1e-6,
                    "alpha = {alpha}, p = {p}: closed {gamma} vs fd {fd}"
                );
            }
        }
    }
    println!("PASS criterion 5: gamma sign structure and closed-form/FD agreement to 1e-6");
}

#[test]
fn criterion_06_normalized_rate_and_hcla() {
    // Boundary values of gamma'.
    for i in 1..=10 {
        let alpha = i as f64 / 10.0;
        let (a_minus, _) = alpha_pm(alpha).unwrap();
        assert_abs_diff_eq!(gamma_normalized(alpha, a_minus), 1.0, epsilon = 1e-9);
        assert_abs_diff_eq!(
            gamma_normalized(alpha, 0.5),
            1.0 / (1.0 + alpha / 2.0),
            epsilon = 1e-9
        );
    }

    // Quadrature stability under grid halving, and the gamma' <= 1 bound.
    for i in 1..=10 {
        let alpha = i as f64 / 10.0;
        let (a_minus, _) = alpha_pm(alpha).unwrap();
        let coarse = n_hcla_normalized_panels(alpha, 1024).unwrap();
        let fine = n_hcla_normalized_panels(alpha, 2048).unwrap();
        let adaptive = n_hcla_normalized(alpha).unwrap();
        assert!((coarse - fine).abs() < 1e-9, "alpha = {alpha}");
        assert!((adaptive - fine).abs() < 1e-9, "alpha = {alpha}");
        assert!(adaptive <= 0.5 - a_minus, "alpha = {alpha}");
    }

    // Strict monotonicity on the 0.05-step alpha grid.
    let mut last = 0.0;
    for i in 1..=20 {
        let alpha = 0.05 * i as f64;
        let value = n_hcla_normalized(alpha).unwrap();
        assert!(value > last, "HCLA not increasing at alpha = {alpha}");
        last = value;
    }
    println!("PASS criterion 6: gamma' boundary values, HCLA stability and monotonicity");
}

#[test]
fn criterion_07_trace_distance_oracle() {
    // Closed form against explicitly evolved states.
    for alpha in [0.1, 0.3, 0.5, 0.7, 0.9] {
        let params = ChannelParams::dephasing(alpha).unwrap();
        for i in 0..20 {
            let theta = PI * i as f64 / 19.0;
            let (rho0, rho1) = pair_states(PureStatePair::new(theta, 0.0).unwrap());
            for j in 0..50 {
                let p = 0.5 * j as f64 / 49.0;
                let w = params.weights(tp(p)).unwrap();
                let oracle = helstrom_td(&evolve(&w, &rho0), &evolve(&w, &rho1));
                assert!(
                    (oracle - trace_distance_pair(alpha, p, theta)).abs() <= 1e-10,
                    "alpha = {alpha}, theta = {theta:.4}, p = {p:.4}"
                );
            }
        }
        // Equatorial boundary values.
        let (a_minus, _) = alpha_pm(alpha).unwrap();
        assert_abs_diff_eq!(trace_distance_pi2(alpha, 0.0), 1.0, epsilon = 1e-10);
        assert_abs_diff_eq!(trace_distance_pi2(alpha, a_minus), 0.0, epsilon = 1e-10);
        assert_abs_diff_eq!(trace_distance_pi2(alpha, 0.5), alpha / 2.0, epsilon = 1e-10);
    }

    // Markovian curve never recurs.
    let mut last = f64::INFINITY;
    for i in 0..=1000 {
        let p = 0.5 * i as f64 / 1000.0;
        let td = trace_distance_pair(0.0, p, FRAC_PI_2);
        assert!(td <= last + 1e-15, "recurrence at p = {p}");
        last = td;
    }
    println!("PASS criterion 7: trace distance matches the Helstrom oracle to 1e-10");
}

#[test]
fn criterion_08_singularity_harmlessness() {
    let alpha = 0.7;
    let params = ChannelParams::dephasing(alpha).unwrap();
    let (a_minus, _) = alpha_pm(alpha).unwrap();

    let inter = channel_intermediate(&params, window(a_minus - 1e-6, 0.5)).unwrap();
    let c = choi(&inter);
    let max_lambda = c.eigenvalues().iter().fold(0.0f64, |m, &e| m.max(e.abs()));
    // The divergent Choi eigenvalues reach 1e5; the
    // completeness-normalized Kraus coefficients are half that.
    let kraus = intermediate_kraus(&c).unwrap();
    assert!(max_lambda >= 1e5, "eigenvalue magnitude {max_lambda:.3e}");
    assert!(
        kraus.max_coeff() >= 5e4,
        "coefficient {:.3e}",
        kraus.max_coeff()
    );

    for a in [0.0, 0.25, 0.5, 0.75, 1.0] {
        let rho = DensityMatrix::diagonal(a).unwrap();
        let out = kraus.apply(rho.matrix());
        assert!(
            (out - rho.matrix()).norm() <= 1e-4,
            "diagonal state a = {a} moved by {:.3e}",
            (out - rho.matrix()).norm()
        );
    }

    // Asking for the window exactly at the singularity must fail loudly.
    assert!(matches!(
        channel_intermediate(&params, window(a_minus, 0.5)),
        Err(Error::MapNonInvertible { .. })
    ));
    println!(
        "PASS criterion 8: divergent window (|lambda| = {max_lambda:.2e}) fixes diagonal states; \
         exact singularity rejected"
    );
}

#[test]
fn criterion_09_depolarizing_family() {
    // Completeness across the whole (alpha, p) rectangle.
    for i in 0..=50 {
        let alpha = (2.0 / 3.0) * i as f64 / 50.0;
        for j in 0..=50 {
            let p = 0.5 * j as f64 / 50.0;
            let w = weights_depolarizing(alpha, tp(p)).unwrap();
            assert!(
                w.completeness_residual() <= 1e-12,
                "alpha = {alpha}, p = {p}"
            );
        }
    }

    // Generic pipeline locates the instantaneous NCP threshold by
    // bisection; it must sit at the Bloch-contraction zero
    // (5 - sqrt 7)/6 for alpha = 1/2.
    let alpha = 0.5;
    let params = ChannelParams::depolarizing(alpha).unwrap();
    let delta = 1e-4;
    let ncp_at = |p: f64| -> bool {
        match channel_intermediate(&params, window(p, (p + delta).min(0.5))) {
            Ok(inter) => !choi(&inter).is_cp(),
            Err(_) => true,
        }
    };
    let mut lo = 1e-3;
    let mut hi = 0.499;
    assert!(!ncp_at(lo) && ncp_at(hi));
    while hi - lo > 1e-9 {
        let mid = 0.5 * (lo + hi);
        if ncp_at(mid) {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    let threshold = 0.5 * (lo + hi);
    let contraction_zero = (5.0 - 7.0f64.sqrt()) / 6.0;
    assert_abs_diff_eq!(threshold, contraction_zero, epsilon = 1e-3);
    assert!(ncp_at(threshold + 0.01));
    println!(
        "PASS criterion 9: depolarizing completeness to 1e-12; instantaneous NCP past \
         p = {threshold:.5}"
    );
}

#[test]
fn criterion_10_toy_channel() {
    let (eta, omega) = (0.5, 50.0);
    assert_eq!(kappa_toy(tp(0.0), eta, omega), 0.0);
    assert_eq!(kappa_toy(tp(0.5), eta, omega), 0.5);

    let kappa = |x: f64| {
        x * (1.0 + eta * (omega * x).sin() * (1.0 - 2.0 * x)) / (1.0 + eta * (1.0 - 2.0 * x))
    };
    let h = 1e-6;
    let mut negative_slope_seen = false;
    for i in 1..1000 {
        let p = 0.5 * i as f64 / 1000.0;
        let slope = (kappa(p + h) - kappa(p - h)) / (2.0 * h);
        if slope.abs() < 1e-6 {
            continue;
        }
        let gamma = gamma_from_kappa(kappa, p).unwrap();
        assert!(kappa(p) < 0.5, "toy kappa reached 1/2 inside the interval");
        assert_eq!(gamma < 0.0, slope < 0.0, "at p = {p}");
        negative_slope_seen |= slope < 0.0;
    }
    assert!(negative_slope_seen, "expected negative-slope intervals");
    println!("PASS criterion 10: toy channel endpoints exact; gamma < 0 exactly where dk/dp < 0");
}

#[test]
fn criterion_11_cli_determinism_and_roundtrip() {
    let dir = tempfile::tempdir().unwrap();
    let figures = [
        "crossover",
        "ncp-window",
        "gamma-rate",
        "measures-vs-alpha",
        "trace-distance",
        "toy-kappa",
    ];
    for figure in figures {
        let run = |path: &std::path::Path| {
            let status = Command::new(env!("CARGO_BIN_EXE_nmpauli"))
                .args(["figure", figure, "--grid", "50", "--out"])
                .arg(path)
                .status()
                .expect("binary runs");
            assert!(status.success(), "figure {figure}");
        };
        let first = dir.path().join(format!("{figure}_a.csv"));
        let second = dir.path().join(format!("{figure}_b.csv"));
        run(&first);
        run(&second);
        assert_eq!(
            std::fs::read(&first).unwrap(),
            std::fs::read(&second).unwrap(),
            "figure {figure} not byte-identical"
        );
    }

    // Row-level round trip through the library on a sampled figure.
    let text = std::fs::read_to_string(dir.path().join("crossover_a.csv")).unwrap();
    let mut p_lo = None;
    let mut rows_checked = 0;
    for line in text.lines() {
        if let Some(rest) = line.strip_prefix("# p lo: ") {
            p_lo = Some(rest.parse::<f64>().unwrap());
        } else if !line.starts_with('#') && !line.starts_with("p_star_hi") && !line.is_empty() {
            let cells: Vec<f64> = line.split(',').map(|c| c.parse().unwrap()).collect();
            let (li, lz) = lambda_closed_form(0.3, cells[0], p_lo.unwrap()).unwrap();
            assert!((cells[1] - li).abs() <= 1e-10 * li.abs().max(1.0));
            assert!((cells[2] - lz).abs() <= 1e-10 * lz.abs().max(1.0));
            rows_checked += 1;
        }
    }
    assert_eq!(rows_checked, 50);
    println!("PASS criterion 11: byte-identical figure reruns; rows re-derive through the library");
}
