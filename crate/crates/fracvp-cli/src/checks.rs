//! The invariant suite behind `fracvp verify`.
//!
//! Every check cross-validates one piece of the library against an
//! independent route to the same quantity: quadrature against closed forms,
//! certified radii against the brute-force zero scanner, exact operator
//! dispatch against finite differences, decomposed bounds against their
//! classical special cases. Randomized checks use fixed seeds so a verify
//! run is reproducible byte for byte.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::f64::consts::PI;

use fracvp::bounds::{
    self, crossing_point, g_envelope, green_kernel, kernel_majorant, majorant_diag,
    majorant_edge, reconstruct_solution, ProblemSpec,
};
use fracvp::fracops::{
    power_rule_derivative, rl_derivative_numeric, rl_integral, OrderPair, RealFn,
};
use fracvp::quad::{integrate, integrate_points, QuadConfig, QuadPoint};
use fracvp::report::fmt_float;
use fracvp::specfun::{beta as euler_beta, MlSeries};
use fracvp::zeros;

/// Scan window shared by the radius-vs-scanner checks.
const LAMBDA_MAX: f64 = 60.0;
const REFINE_TOL: f64 = 1e-9;

type Check = fn(&QuadConfig) -> Result<(), String>;

/// Run every check in a fixed order; returns the plain-text report and the
/// number of failures.
pub fn run_all(cfg: &QuadConfig) -> (String, usize) {
    let checks: &[(&str, Check)] = &[
        ("quad_beta_identity", quad_beta_identity),
        ("quad_interval_additivity", quad_interval_additivity),
        ("ml_closed_form_agreement", ml_closed_form_agreement),
        ("ml_truncation_certificate", ml_truncation_certificate),
        ("operator_semigroup_identity", operator_semigroup_identity),
        ("operator_power_rule_cross_check", operator_power_rule_cross_check),
        ("kernel_majorization", kernel_majorization),
        ("kernel_single_crossing", kernel_single_crossing),
        ("envelope_endpoint_maximum", envelope_endpoint_maximum),
        ("damping_bound_beta_one_consistency", damping_bound_beta_one_consistency),
        ("classic_recovery_from_fractional", classic_recovery_from_fractional),
        ("green_reconstruction_residual", green_reconstruction_residual),
        ("threshold_constant_bracket", threshold_constant_bracket),
        ("comparison_function_shape", comparison_function_shape),
        ("scan_matches_sine_anchor", scan_matches_sine_anchor),
        ("scan_vs_classic_radius", scan_vs_classic_radius),
        ("scan_vs_improved_radius", scan_vs_improved_radius),
        ("scan_vs_general_radius", scan_vs_general_radius),
        ("scan_vs_lyapunov_threshold", scan_vs_lyapunov_threshold),
        ("classical_eigenvalue_margin", classical_eigenvalue_margin),
        ("float_format_roundtrip", float_format_roundtrip),
    ];
    let mut out = String::new();
    let mut failed = 0usize;
    for (name, check) in checks {
        match check(cfg) {
            Ok(()) => out.push_str(&format!("ok {name}\n")),
            Err(reason) => {
                failed += 1;
                out.push_str(&format!("FAIL {name}: {reason}\n"));
            }
        }
    }
    out.push_str(&format!("passed {} failed {failed}\n", checks.len() - failed));
    (out, failed)
}

fn err(e: fracvp::Error) -> String {
    e.to_string()
}

/// Singular endpoint quadrature against the Euler beta function.
fn quad_beta_identity(cfg: &QuadConfig) -> Result<(), String> {
    for (x, y) in [(0.5, 0.5), (0.75, 1.25), (0.3, 1.8), (1.5, 2.5)] {
        let exact = euler_beta(x, y).map_err(err)?;
        let quad = integrate_points(
            |p: QuadPoint| p.from_a.powf(x - 1.0) * p.from_b.powf(y - 1.0),
            0.0,
            1.0,
            cfg,
        )
        .map_err(err)?;
        let diff = (quad.value - exact).abs();
        if diff > 1e-8 * exact.max(1.0) {
            return Err(format!("B({x},{y}): quad {} vs exact {exact}", quad.value));
        }
    }
    Ok(())
}

/// ∫_0^1 + ∫_1^2 must equal ∫_0^2 for a smooth integrand.
fn quad_interval_additivity(cfg: &QuadConfig) -> Result<(), String> {
    let f = |s: f64| (s * s) * (-s).exp();
    let left = integrate(f, 0.0, 1.0, cfg).map_err(err)?.value;
    let right = integrate(f, 1.0, 2.0, cfg).map_err(err)?.value;
    let whole = integrate(f, 0.0, 2.0, cfg).map_err(err)?.value;
    let diff = (left + right - whole).abs();
    if diff > 1e-10 {
        return Err(format!("additivity residual {diff:.3e}"));
    }
    Ok(())
}

/// Series evaluation against exp, (e^x − 1)/x, cos(√·) and sin(√·)/√·.
fn ml_closed_form_agreement(_cfg: &QuadConfig) -> Result<(), String> {
    let close = |got: f64, want: f64| (got - want).abs() <= 5e-12 + 5e-12 * want.abs();

    let mut e11 = MlSeries::new(1.0, 1.0).map_err(err)?;
    for x in [-80.0, -10.0, -1.0, 0.5, 3.0, 30.0] {
        let got = e11.eval(x).map_err(err)?.value;
        if !close(got, x.exp()) {
            return Err(format!("order 1 shift 1 at {x}: {got} vs {}", x.exp()));
        }
    }

    let mut e12 = MlSeries::new(1.0, 2.0).map_err(err)?;
    for x in [-50.0f64, -3.0, -0.7, 0.9, 20.0] {
        let want = x.exp_m1() / x;
        let got = e12.eval(x).map_err(err)?.value;
        if !close(got, want) {
            return Err(format!("order 1 shift 2 at {x}: {got} vs {want}"));
        }
    }

    let mut e22 = MlSeries::new(2.0, 2.0).map_err(err)?;
    for lam in [0.25, 2.0, PI * PI, 50.0, 100.0] {
        let rt = lam.sqrt();
        let want = rt.sin() / rt;
        let got = e22.eval(-lam).map_err(err)?.value;
        if (got - want).abs() > 5e-12 {
            return Err(format!("order 2 shift 2 at -{lam}: {got} vs {want}"));
        }
    }

    let mut e21 = MlSeries::new(2.0, 1.0).map_err(err)?;
    for lam in [1.0f64, 4.0, 25.0] {
        let want = lam.sqrt().cos();
        let got = e21.eval(-lam).map_err(err)?.value;
        if (got - want).abs() > 5e-12 {
            return Err(format!("order 2 shift 1 at -{lam}: {got} vs {want}"));
        }
    }
    Ok(())
}

/// A coarse evaluation must sit within its own certified tail bound of a
/// much finer one.
fn ml_truncation_certificate(_cfg: &QuadConfig) -> Result<(), String> {
    let samples = [
        (1.5, 2.0, -30.0),
        (2.0, 2.0, -60.0),
        (1.0, 2.0, -100.0),
        (1.2, 1.7, -12.0),
        (1.8, 1.1, 5.0),
    ];
    for (order, shift, x) in samples {
        let mut series = MlSeries::new(order, shift).map_err(err)?;
        let coarse = series.eval_with_tol(x, 1e-8).map_err(err)?;
        let fine = series.eval_with_tol(x, 1e-14).map_err(err)?;
        let diff = (coarse.value - fine.value).abs();
        if diff > coarse.tail_bound + 2e-14 {
            return Err(format!(
                "({order},{shift}) at {x}: drift {diff:.3e} exceeds certificate {:.3e}",
                coarse.tail_bound
            ));
        }
    }
    Ok(())
}

/// D^p I^q f = I^(q−p) f, with the left side assembled from quadrature plus
/// an independent central difference (D^p v = d/dt I^(1−p) v for p < 1).
fn operator_semigroup_identity(_cfg: &QuadConfig) -> Result<(), String> {
    let tight = QuadConfig::with_tolerance(1e-13);
    let f = RealFn::polynomial(vec![0.0, 0.0, 1.0]);
    let h = 1e-5;
    for (p, q) in [(0.4, 1.1), (0.7, 0.9), (0.25, 1.75)] {
        for t in [0.8, 1.6] {
            let w = |u: f64| rl_integral(&f, 1.0 + q - p, 0.0, u, &tight);
            let lhs = (w(t + h).map_err(err)? - w(t - h).map_err(err)?) / (2.0 * h);
            let rhs = rl_integral(&f, q - p, 0.0, t, &tight).map_err(err)?;
            if (lhs - rhs).abs() > 1e-6 {
                return Err(format!("p={p} q={q} t={t}: {lhs} vs {rhs}"));
            }
        }
    }
    Ok(())
}

/// Exact power-rule dispatch against the finite-difference route.
fn operator_power_rule_cross_check(_cfg: &QuadConfig) -> Result<(), String> {
    let tight = QuadConfig::with_tolerance(1e-14);
    // Orders stay below 0.7: the finite-difference route divides the
    // quadrature noise of I^(1−μ) by the step, and the (t−s)^(−μ) weight
    // steepens as μ → 1.
    for p in [1.3, 2.0, 2.6] {
        for mu in [0.25, 0.4, 0.6] {
            for t in [1.0, 2.5] {
                let f = RealFn::power(p, 0.0).map_err(err)?;
                let exact = power_rule_derivative(p, mu, 0.0, t).map_err(err)?;
                let numeric = rl_derivative_numeric(&f, mu, 0.0, t, &tight).map_err(err)?;
                if (exact - numeric).abs() > 1e-8 {
                    return Err(format!("p={p} mu={mu} t={t}: {exact} vs {numeric}"));
                }
            }
        }
    }
    Ok(())
}

/// Random fractional-leading samples with a positive diagonal exponent.
fn kernel_samples(n: usize, seed: u64) -> Vec<(OrderPair, f64, f64)> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..n)
        .map(|_| {
            let alpha = rng.gen_range(1.2..2.0);
            let beta = rng.gen_range(0.0..(alpha - 1.05));
            let a = rng.gen_range(-1.0..1.0);
            let b = a + rng.gen_range(0.5..2.5);
            let orders = OrderPair::fractional_leading(alpha, beta)
                .expect("sampled orders are in regime");
            (orders, a, b)
        })
        .collect()
}

/// |kernel(t, s)| ≤ Δ(s) across a (t, s) grid for 20 random samples.
fn kernel_majorization(_cfg: &QuadConfig) -> Result<(), String> {
    for (orders, a, b) in kernel_samples(20, 41) {
        for i in 0..24 {
            let s = a + (b - a) * i as f64 / 24.0;
            let bound = kernel_majorant(s, &orders, a, b).map_err(err)?;
            for j in 0..=24 {
                let t = if j == 24 { b } else { s + (b - s) * j as f64 / 24.0 };
                let k = green_kernel(t, s, &orders, a, b).map_err(err)?;
                if k.abs() > bound + 1e-12 {
                    return Err(format!(
                        "alpha={} beta={}: |kernel({t},{s})| = {} > {bound}",
                        orders.alpha(),
                        orders.beta(),
                        k.abs()
                    ));
                }
            }
        }
    }
    Ok(())
}

/// The diagonal and edge majorants cross exactly once, past the midpoint.
///
/// For small β the crossing sits exponentially close to b, so the scan
/// grid is log-spaced towards both ends of (mid, b).
fn kernel_single_crossing(_cfg: &QuadConfig) -> Result<(), String> {
    for (orders, a, b) in kernel_samples(20, 42) {
        let c = crossing_point(&orders, a, b, 1e-10).map_err(err)?;
        let mid = 0.5 * (a + b);
        if !(mid < c && c < b) {
            return Err(format!("crossing {c} outside ({mid}, {b})"));
        }
        let d_at = |s: f64| -> Result<f64, String> {
            Ok(majorant_diag(s, &orders, a, b).map_err(err)?
                - majorant_edge(s, &orders, a, b).map_err(err)?)
        };
        if d_at(c)?.abs() > 1e-9 {
            return Err(format!("majorants differ by {} at crossing {c}", d_at(c)?));
        }
        let span = b - mid;
        let mut pts: Vec<f64> = (1..=46)
            .flat_map(|j| {
                let off = span * 0.5f64.powi(j);
                [mid + off, b - off]
            })
            .chain((1..200).map(|i| mid + span * i as f64 / 200.0))
            .collect();
        pts.sort_by(f64::total_cmp);
        pts.dedup();
        let mut changes = 0usize;
        let mut prev: Option<bool> = None;
        for s in pts {
            let d = d_at(s)?;
            if d == 0.0 {
                continue;
            }
            let sign = d > 0.0;
            if let Some(p) = prev {
                if p != sign {
                    changes += 1;
                }
            }
            prev = Some(sign);
        }
        if changes != 1 {
            return Err(format!(
                "alpha={} beta={} on [{a},{b}]: {changes} sign changes",
                orders.alpha(),
                orders.beta()
            ));
        }
    }
    Ok(())
}

/// The damping envelope S attains its maximum at an interval endpoint.
fn envelope_endpoint_maximum(cfg: &QuadConfig) -> Result<(), String> {
    let mut rng = ChaCha8Rng::seed_from_u64(43);
    for _ in 0..10 {
        let beta = rng.gen_range(0.05..=1.0);
        let a = rng.gen_range(-1.0..1.0);
        let b = a + rng.gen_range(0.5..2.0);
        let g = RealFn::constant(rng.gen_range(-4.0..4.0));
        let spec = ProblemSpec::new(
            a,
            b,
            RealFn::constant(0.0),
            g,
            OrderPair::integer_leading(beta).map_err(err)?,
            true,
        )
        .map_err(err)?;
        let cap = g_envelope(a, &spec, cfg)
            .map_err(err)?
            .max(g_envelope(b, &spec, cfg).map_err(err)?);
        for i in 1..=19 {
            let t = a + (b - a) * i as f64 / 20.0;
            let s = g_envelope(t, &spec, cfg).map_err(err)?;
            if s > cap + 1e-9 {
                return Err(format!("beta={beta}: S({t}) = {s} exceeds endpoints {cap}"));
            }
        }
    }
    Ok(())
}

/// At β = 1 the mixed-order bound must coincide with the first-order one.
fn damping_bound_beta_one_consistency(cfg: &QuadConfig) -> Result<(), String> {
    let mut rng = ChaCha8Rng::seed_from_u64(44);
    for i in 0..100 {
        let a = rng.gen_range(-2.0..2.0);
        let b = a + rng.gen_range(0.3..3.0);
        let g = RealFn::constant(rng.gen_range(-5.0..5.0));
        let f = RealFn::constant(rng.gen_range(-5.0..5.0));
        let orders = OrderPair::integer_leading(1.0).map_err(err)?;
        let spec = ProblemSpec::new(a, b, f, g, orders, true).map_err(err)?;
        let mixed = bounds::mixed_rhs(&spec, cfg).map_err(err)?;
        let first = bounds::hw_rhs(&spec, cfg).map_err(err)?;
        let worst = (mixed.g_term - first.g_term)
            .abs()
            .max((mixed.f_term - first.f_term).abs())
            .max((mixed.total - first.total).abs());
        if worst > 1e-10 {
            return Err(format!("sample {i}: divergence {worst:.3e}"));
        }
    }
    Ok(())
}

/// The fractional-leading bound at (α, β) = (2, 1) never exceeds the
/// classical constant-coefficient right-hand side.
fn classic_recovery_from_fractional(cfg: &QuadConfig) -> Result<(), String> {
    let mut rng = ChaCha8Rng::seed_from_u64(45);
    for i in 0..100 {
        let a = rng.gen_range(-2.0..2.0);
        let b = a + rng.gen_range(0.2..3.0);
        let m1 = rng.gen_range(0.0..5.0);
        let m2 = rng.gen_range(0.0..5.0);
        let orders = OrderPair::fractional_leading(2.0, 1.0).map_err(err)?;
        let spec = ProblemSpec::new(
            a,
            b,
            RealFn::constant(m2),
            RealFn::constant(m1),
            orders,
            false,
        )
        .map_err(err)?;
        let frac = bounds::fractional_rhs(&spec, cfg).map_err(err)?;
        let classic = bounds::vp_rhs(m1, m2, a, b).map_err(err)?;
        if frac.total > classic + 1e-10 {
            return Err(format!(
                "sample {i}: fractional {} above classical {classic}",
                frac.total
            ));
        }
    }
    Ok(())
}

/// Green reconstruction reproduces x'' + source = 0 solutions.
fn green_reconstruction_residual(cfg: &QuadConfig) -> Result<(), String> {
    let one = RealFn::constant(1.0);
    for i in 0..=10 {
        let t = i as f64 / 10.0;
        let x = reconstruct_solution(&one, 0.0, 1.0, t, cfg).map_err(err)?;
        if (x - 0.5 * t * (1.0 - t)).abs() > 1e-9 {
            return Err(format!("constant source at {t}: {x}"));
        }
    }
    let sine = RealFn::tabulate(|s| s.sin(), 0.0, PI, 4001).map_err(err)?;
    for t in [0.3, 1.1, 2.0, 2.9] {
        let x = reconstruct_solution(&sine, 0.0, PI, t, cfg).map_err(err)?;
        if (x - t.sin()).abs() > 1e-5 {
            return Err(format!("sine source at {t}: {x} vs {}", t.sin()));
        }
    }
    Ok(())
}

/// The threshold order lands near 1.447 and tighter runs nest inside it.
fn threshold_constant_bracket(_cfg: &QuadConfig) -> Result<(), String> {
    let coarse = zeros::alpha_bar(1e-6).map_err(err)?;
    if (coarse - 1.447).abs() > 5e-4 {
        return Err(format!("alpha_bar(1e-6) = {coarse}"));
    }
    let fine = zeros::alpha_bar(1e-9).map_err(err)?;
    if (coarse - fine).abs() > 1e-5 {
        return Err(format!("nesting violated: {coarse} vs {fine}"));
    }
    let residual = zeros::vallee_f(fine).map_err(err)? - (fine + 1.0);
    if residual.abs() > 1e-6 {
        return Err(format!("defining-equation residual {residual:.3e}"));
    }
    Ok(())
}

/// x^x/(x−1)^(x−1) is increasing on (1, 2] with the expected anchors.
fn comparison_function_shape(_cfg: &QuadConfig) -> Result<(), String> {
    let mut prev = f64::NEG_INFINITY;
    for i in 0..=800 {
        let x = 1.0 + 1e-6 + (1.0 - 1e-6) * i as f64 / 800.0;
        let v = zeros::vallee_f(x).map_err(err)?;
        if v <= prev {
            return Err(format!("not increasing at x = {x}"));
        }
        prev = v;
    }
    let at2 = zeros::vallee_f(2.0).map_err(err)?;
    if (at2 - 4.0).abs() > 1e-12 {
        return Err(format!("f(2) = {at2}"));
    }
    let near1 = zeros::vallee_f(1.0 + 1e-9).map_err(err)?;
    if (near1 - 1.0).abs() > 1e-6 {
        return Err(format!("f(1+) = {near1}"));
    }
    Ok(())
}

/// The scanner reproduces the analytically known zero π² of sin(√λ)/√λ.
fn scan_matches_sine_anchor(_cfg: &QuadConfig) -> Result<(), String> {
    let scan = zeros::ml_first_zero(2.0, 2.0, 50.0, 1e-9).map_err(err)?;
    match scan.first_zero {
        Some(z) if (z - PI * PI).abs() <= 1e-8 => Ok(()),
        Some(z) => Err(format!("zero at {z} vs pi^2 = {}", PI * PI)),
        None => Err("no zero found below 50".into()),
    }
}

fn alphas_tenths() -> impl Iterator<Item = f64> {
    (11..=20).map(|k| k as f64 / 10.0)
}

/// No scanned zero may undercut the certified single-order radius.
fn scan_vs_classic_radius(_cfg: &QuadConfig) -> Result<(), String> {
    for alpha in alphas_tenths() {
        let radius = zeros::radius_classic(alpha).map_err(err)?;
        let scan = zeros::ml_first_zero(alpha, 2.0, LAMBDA_MAX, REFINE_TOL).map_err(err)?;
        match scan.first_zero {
            Some(z) if z < radius - 1e-6 => {
                return Err(format!("alpha={alpha}: zero {z} inside radius {radius}"));
            }
            None if scan.scanned_up_to < radius => {
                return Err(format!("alpha={alpha}: window ended before {radius}"));
            }
            _ => {}
        }
    }
    Ok(())
}

/// Below the threshold order, the larger certified radius must also hold
/// and must strictly beat the single-order one.
fn scan_vs_improved_radius(_cfg: &QuadConfig) -> Result<(), String> {
    let alphas: Vec<f64> = (21..=28).map(|k| k as f64 / 20.0).chain([1.44]).collect();
    for alpha in alphas {
        let classic = zeros::radius_classic(alpha).map_err(err)?;
        let improved = zeros::radius_improved(alpha)
            .map_err(err)?
            .ok_or_else(|| format!("alpha={alpha}: expected the improved radius"))?;
        if improved <= classic {
            return Err(format!(
                "alpha={alpha}: improved {improved} does not beat {classic}"
            ));
        }
        let scan = zeros::ml_first_zero(alpha, 2.0, LAMBDA_MAX, REFINE_TOL).map_err(err)?;
        if let Some(z) = scan.first_zero {
            if z < improved - 1e-6 {
                return Err(format!("alpha={alpha}: zero {z} inside radius {improved}"));
            }
        }
    }
    Ok(())
}

/// The two-order radius ν on a 5×5 (α, β) grid, anchored at ν(2, 1) = 2.
fn scan_vs_general_radius(cfg: &QuadConfig) -> Result<(), String> {
    let anchor = zeros::radius_general(
        &OrderPair::fractional_leading(2.0, 1.0).map_err(err)?,
        cfg,
    )
    .map_err(err)?;
    if (anchor - 2.0).abs() > 1e-9 {
        return Err(format!("nu(2,1) = {anchor}"));
    }
    for i in 0..5 {
        let alpha = 1.5 + 0.125 * i as f64;
        for j in 0..5 {
            let beta = j as f64 * (alpha - 1.0) / 4.0;
            let orders = OrderPair::fractional_leading(alpha, beta).map_err(err)?;
            let nu = zeros::radius_general(&orders, cfg).map_err(err)?;
            let scan = zeros::ml_first_zero(alpha - beta, alpha, LAMBDA_MAX, REFINE_TOL)
                .map_err(err)?;
            if let Some(z) = scan.first_zero {
                if z < nu - 1e-6 {
                    return Err(format!(
                        "alpha={alpha} beta={beta}: zero {z} inside nu {nu}"
                    ));
                }
            }
        }
    }
    Ok(())
}

/// The eigenvalue-style threshold on (0, 1) stays strictly below the first
/// zero of its own Mittag-Leffler family.
fn scan_vs_lyapunov_threshold(_cfg: &QuadConfig) -> Result<(), String> {
    for alpha in alphas_tenths() {
        let threshold = bounds::lyapunov_rhs(alpha, 0.0, 1.0).map_err(err)?;
        let scan = zeros::ml_first_zero(alpha, alpha, LAMBDA_MAX, REFINE_TOL).map_err(err)?;
        match scan.first_zero {
            Some(z) if z <= threshold => {
                return Err(format!("alpha={alpha}: zero {z} at or below {threshold}"));
            }
            None if scan.scanned_up_to <= threshold => {
                return Err(format!("alpha={alpha}: window ended at {threshold}"));
            }
            _ => {}
        }
    }
    Ok(())
}

/// π²/2 > 1: the classical bound holds on the unit interval for sin(πt).
fn classical_eigenvalue_margin(_cfg: &QuadConfig) -> Result<(), String> {
    let rhs = bounds::vp_rhs(0.0, PI * PI, 0.0, 1.0).map_err(err)?;
    if (rhs - PI * PI / 2.0).abs() > 1e-12 {
        return Err(format!("rhs = {rhs} vs pi^2/2"));
    }
    if rhs <= 1.0 {
        return Err("eigenvalue margin lost".into());
    }
    Ok(())
}

/// Every finite double survives fmt → parse → fmt bit-exactly.
fn float_format_roundtrip(_cfg: &QuadConfig) -> Result<(), String> {
    let mut samples = vec![
        0.0,
        -0.0,
        1.0,
        -1.0,
        1e-9,
        PI,
        PI * PI,
        f64::MAX,
        f64::MIN_POSITIVE,
        5e-324,
        2.0_f64.powi(-60),
    ];
    let mut rng = ChaCha8Rng::seed_from_u64(46);
    while samples.len() < 400 {
        let x = f64::from_bits(rng.gen::<u64>());
        if x.is_finite() {
            samples.push(x);
        }
    }
    for x in samples {
        let s = fmt_float(x);
        let y: f64 = s
            .parse()
            .map_err(|e| format!("{s} did not re-parse: {e}"))?;
        if y.to_bits() != x.to_bits() {
            return Err(format!("{s} re-parsed to a different double"));
        }
        if fmt_float(y) != s {
            return Err(format!("{s} not a fixed point of the formatter"));
        }
    }
    Ok(())
}
