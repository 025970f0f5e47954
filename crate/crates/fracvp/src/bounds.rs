//! Interval-length bounds (disconjugacy criteria) and the Green's-kernel
//! majorants they are built from.
//!
//! Every calculator here decomposes the right-hand side of one inequality of
//! the form `lhs < g_term + f_term` (or `≤`): if the inequality fails, no
//! nontrivial solution of the corresponding boundary-value problem can vanish
//! at both ends of [a, b]. The pointwise kernels (`green_kernel`,
//! `majorant_diag`, `majorant_edge`, `kernel_majorant`, `crossing_point`) are
//! exposed so the extremal facts the bounds rely on can be checked directly.

use crate::error::{Error, Result};
use crate::fracops::{OrderPair, RealFn, Regime};
use crate::quad::{integrate_points, QuadConfig, QuadOutcome, QuadPoint};
use crate::report::fmt_float;
use crate::specfun::gamma;

/// Which argument of the outer maximum over the two |g|-weighted integrals
/// produced `g_term`; ties resolve to the first.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BoundBranch {
    GFirstIntegral,
    GSecondIntegral,
}

impl BoundBranch {
    pub fn as_str(&self) -> &'static str {
        match self {
            BoundBranch::GFirstIntegral => "G_FIRST_INTEGRAL",
            BoundBranch::GSecondIntegral => "G_SECOND_INTEGRAL",
        }
    }
}

/// One boundary-value problem instance on [a, b] with coefficient functions
/// g (damping) and f (potential).
///
/// `strict` selects the comparison used for `satisfied` in the calculators
/// that admit both variants: `true` compares `lhs < total`, `false` compares
/// `lhs ≤ total`.
#[derive(Debug, Clone)]
pub struct ProblemSpec {
    pub a: f64,
    pub b: f64,
    pub f_coeff: RealFn,
    pub g_coeff: RealFn,
    pub orders: OrderPair,
    pub strict: bool,
}

impl ProblemSpec {
    /// Requires a < b (both finite).
    pub fn new(
        a: f64,
        b: f64,
        f_coeff: RealFn,
        g_coeff: RealFn,
        orders: OrderPair,
        strict: bool,
    ) -> Result<Self> {
        if !a.is_finite() || !b.is_finite() || !(a < b) {
            return Err(Error::InvalidInterval { a, b });
        }
        Ok(ProblemSpec {
            a,
            b,
            f_coeff,
            g_coeff,
            orders,
            strict,
        })
    }
}

/// Decomposed right-hand side of one interval-length inequality.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BoundReport {
    /// Left-hand side of the inequality (interval length or Γ value).
    pub lhs: f64,
    /// The |g|-weighted contribution (outer max already taken).
    pub g_term: f64,
    /// The |f|-weighted contribution.
    pub f_term: f64,
    /// g_term + f_term.
    pub total: f64,
    /// Whether `lhs < total` (strict) or `lhs ≤ total` (non-strict) holds.
    pub satisfied: bool,
    /// Which |g| integral won the outer maximum.
    pub branch_taken: BoundBranch,
    /// Summed quadrature error estimates of the integrals that entered
    /// `total`. Reported for audit; not folded into `satisfied`.
    pub quad_error_estimate: f64,
    /// The comparison convention actually used for `satisfied`.
    pub strict: bool,
}

impl BoundReport {
    fn assemble(
        lhs: f64,
        g_term: f64,
        f_term: f64,
        branch_taken: BoundBranch,
        quad_error_estimate: f64,
        strict: bool,
    ) -> BoundReport {
        let total = g_term + f_term;
        let satisfied = if strict { lhs < total } else { lhs <= total };
        BoundReport {
            lhs,
            g_term,
            f_term,
            total,
            satisfied,
            branch_taken,
            quad_error_estimate,
            strict,
        }
    }

    /// Stable JSON rendering (fixed key order, 17 significant digits).
    pub fn to_json(&self) -> String {
        format!(
            "{{\"lhs\": {}, \"g_term\": {}, \"f_term\": {}, \"total\": {}, \"satisfied\": {}, \"branch_taken\": \"{}\", \"quad_error_estimate\": {}}}",
            fmt_float(self.lhs),
            fmt_float(self.g_term),
            fmt_float(self.f_term),
            fmt_float(self.total),
            self.satisfied,
            self.branch_taken.as_str(),
            fmt_float(self.quad_error_estimate)
        )
    }
}

/// ∫_a^b (s−a)^pa (b−s)^pb |h(s)| ds, singular factors formed from the exact
/// endpoint distances.
fn abs_weighted(
    h: &RealFn,
    pa: f64,
    pb: f64,
    a: f64,
    b: f64,
    cfg: &QuadConfig,
) -> Result<QuadOutcome> {
    integrate_points(
        |p: QuadPoint| p.from_a.powf(pa) * p.from_b.powf(pb) * h.eval(p.s).abs(),
        a,
        b,
        cfg,
    )
}

/// Classical constant-coefficient bound: M1(b−a) + M2(b−a)²/2, compared
/// against 1 in the disconjugacy criterion. Requires M1, M2 ≥ 0 and a < b.
pub fn vp_rhs(m1: f64, m2: f64, a: f64, b: f64) -> Result<f64> {
    if !(m1 >= 0.0) || !(m2 >= 0.0) {
        return Err(Error::domain(
            "vp_rhs",
            format!("coefficient bounds must be nonnegative, got ({m1}, {m2})"),
        ));
    }
    if !a.is_finite() || !b.is_finite() || !(a < b) {
        return Err(Error::InvalidInterval { a, b });
    }
    let len = b - a;
    Ok(m1 * len + m2 * len * len / 2.0)
}

/// Interval-length bound for x'' + g·D^β x + f·x = 0 (integer-leading
/// regime):
///
/// ```text
/// lhs = b − a
/// g_term = max{ ∫ (s−a)^(2−β)/Γ(2−β) |g| ds, ∫ (s−a)^(1−β)/Γ(2−β) (b−s)|g| ds }
/// f_term = ∫ (s−a)(b−s) |f| ds
/// ```
pub fn mixed_rhs(spec: &ProblemSpec, cfg: &QuadConfig) -> Result<BoundReport> {
    spec.orders.expect_regime(Regime::IntegerLeading)?;
    let beta = spec.orders.beta();
    let inv_gamma = 1.0 / gamma(2.0 - beta)?;
    let (a, b) = (spec.a, spec.b);

    let g1 = abs_weighted(&spec.g_coeff, 2.0 - beta, 0.0, a, b, cfg)?;
    let g2 = abs_weighted(&spec.g_coeff, 1.0 - beta, 1.0, a, b, cfg)?;
    let ff = abs_weighted(&spec.f_coeff, 1.0, 1.0, a, b, cfg)?;

    let (g_term, g_err, branch) = if g1.value >= g2.value {
        (g1.value * inv_gamma, g1.error_estimate * inv_gamma, BoundBranch::GFirstIntegral)
    } else {
        (g2.value * inv_gamma, g2.error_estimate * inv_gamma, BoundBranch::GSecondIntegral)
    };
    Ok(BoundReport::assemble(
        b - a,
        g_term,
        ff.value,
        branch,
        g_err + ff.error_estimate,
        spec.strict,
    ))
}

/// Interval-length bound with first-order damping (the β = 1 case written
/// out directly):
///
/// ```text
/// g_term = max{ ∫ (s−a)|g| ds, ∫ (b−s)|g| ds },   f_term = ∫ (s−a)(b−s)|f| ds
/// ```
///
/// Independent of `spec.orders`; kept as a separate code path so it can
/// cross-check [`mixed_rhs`] at β = 1.
pub fn hw_rhs(spec: &ProblemSpec, cfg: &QuadConfig) -> Result<BoundReport> {
    let (a, b) = (spec.a, spec.b);
    let g1 = abs_weighted(&spec.g_coeff, 1.0, 0.0, a, b, cfg)?;
    let g2 = abs_weighted(&spec.g_coeff, 0.0, 1.0, a, b, cfg)?;
    let ff = abs_weighted(&spec.f_coeff, 1.0, 1.0, a, b, cfg)?;

    let (g_term, g_err, branch) = if g1.value >= g2.value {
        (g1.value, g1.error_estimate, BoundBranch::GFirstIntegral)
    } else {
        (g2.value, g2.error_estimate, BoundBranch::GSecondIntegral)
    };
    Ok(BoundReport::assemble(
        b - a,
        g_term,
        ff.value,
        branch,
        g_err + ff.error_estimate,
        spec.strict,
    ))
}

/// The |g|-weighted envelope whose endpoint values dominate its interior:
///
/// ```text
/// S(t) = ∫_a^t (s−a)^(2−β)/Γ(2−β) |g| ds + ∫_t^b (s−a)^(1−β)/Γ(2−β) (b−s)|g| ds
/// ```
///
/// for a ≤ t ≤ b in the integer-leading regime. `max S = max{S(a), S(b)}`,
/// which is exactly why the outer max in [`mixed_rhs`] has two arguments.
pub fn g_envelope(t: f64, spec: &ProblemSpec, cfg: &QuadConfig) -> Result<f64> {
    spec.orders.expect_regime(Regime::IntegerLeading)?;
    if !(spec.a..=spec.b).contains(&t) {
        return Err(Error::domain(
            "g_envelope",
            format!("t = {t} outside [{}, {}]", spec.a, spec.b),
        ));
    }
    let beta = spec.orders.beta();
    let inv_gamma = 1.0 / gamma(2.0 - beta)?;
    let (a, b) = (spec.a, spec.b);
    let g = &spec.g_coeff;
    // On [a, t] the (s−a) factor is the exact from_a distance.
    let first = integrate_points(
        |p: QuadPoint| p.from_a.powf(2.0 - beta) * g.eval(p.s).abs(),
        a,
        t,
        cfg,
    )?;
    // On [t, b] the (s−a) factor is smooth (a < t ≤ s); (b−s) is from_b.
    let second = integrate_points(
        |p: QuadPoint| (p.s - a).powf(1.0 - beta) * p.from_b * g.eval(p.s).abs(),
        t,
        b,
        cfg,
    )?;
    Ok((first.value + second.value) * inv_gamma)
}

fn check_fractional_domain(orders: &OrderPair, a: f64, b: f64, s: f64) -> Result<()> {
    orders.expect_regime(Regime::FractionalLeading)?;
    if !a.is_finite() || !b.is_finite() || !(a < b) {
        return Err(Error::InvalidInterval { a, b });
    }
    if !(a..=b).contains(&s) {
        return Err(Error::domain(
            "kernel",
            format!("point {s} outside [{a}, {b}]"),
        ));
    }
    Ok(())
}

/// Two-variable Green-type kernel of the fractional-leading problem:
///
/// ```text
/// f(t, s) = (t−a)^(α−β−1) (b−s)^(α−1) / (b−a)^(α−1) − (t−s)^(α−β−1)
/// ```
///
/// for a ≤ s ≤ t ≤ b, with the 0⁰ = 1 convention when α−β−1 = 0 (both
/// power terms then degenerate to constants).
pub fn green_kernel(t: f64, s: f64, orders: &OrderPair, a: f64, b: f64) -> Result<f64> {
    check_fractional_domain(orders, a, b, s)?;
    if !(s..=b).contains(&t) {
        return Err(Error::domain(
            "green_kernel",
            format!("needs s <= t <= b, got t = {t}, s = {s}"),
        ));
    }
    let gam = orders.gamma_exponent();
    let am1 = orders.alpha() - 1.0;
    Ok((t - a).powf(gam) * (b - s).powf(am1) / (b - a).powf(am1) - (t - s).powf(gam))
}

/// Diagonal majorant p(s) = (s−a)^(α−β−1) (b−s)^(α−1) / (b−a)^(α−1).
pub fn majorant_diag(s: f64, orders: &OrderPair, a: f64, b: f64) -> Result<f64> {
    check_fractional_domain(orders, a, b, s)?;
    let am1 = orders.alpha() - 1.0;
    Ok((s - a).powf(orders.gamma_exponent()) * (b - s).powf(am1) / (b - a).powf(am1))
}

/// Edge majorant r(s) = (b−s)^(α−β−1) − (b−s)^(α−1) / (b−a)^β.
pub fn majorant_edge(s: f64, orders: &OrderPair, a: f64, b: f64) -> Result<f64> {
    check_fractional_domain(orders, a, b, s)?;
    let am1 = orders.alpha() - 1.0;
    Ok((b - s).powf(orders.gamma_exponent()) - (b - s).powf(am1) / (b - a).powf(orders.beta()))
}

/// Pointwise kernel majorant
///
/// ```text
/// Δ_{a,b}(s) = max{ p(s) [participates only when α−β−1 > 0], r(s) }
/// ```
///
/// — the diagonal branch drops out entirely at α−β−1 = 0, it is not merely
/// zero there.
pub fn kernel_majorant(s: f64, orders: &OrderPair, a: f64, b: f64) -> Result<f64> {
    let r = majorant_edge(s, orders, a, b)?;
    if orders.gamma_exponent() > 0.0 {
        Ok(r.max(majorant_diag(s, orders, a, b)?))
    } else {
        Ok(r)
    }
}

/// The unique interior point t* ∈ ((a+b)/2, b) where the two majorants
/// cross, located by bisection until |p(t*) − r(t*)| ≤ tol.
///
/// Requires α−β−1 > 0 (otherwise the diagonal branch never participates and
/// there is nothing to cross); failure to bracket a sign change is reported
/// loudly since it would contradict the crossing's uniqueness.
pub fn crossing_point(orders: &OrderPair, a: f64, b: f64, tol: f64) -> Result<f64> {
    orders.expect_regime(Regime::FractionalLeading)?;
    if !a.is_finite() || !b.is_finite() || !(a < b) {
        return Err(Error::InvalidInterval { a, b });
    }
    if !(tol > 0.0) {
        return Err(Error::domain("crossing_point", "tol must be positive"));
    }
    if orders.gamma_exponent() <= 0.0 {
        return Err(Error::BracketFailure {
            message: format!(
                "majorants only cross for alpha - beta - 1 > 0, got {}",
                orders.gamma_exponent()
            ),
        });
    }
    let diff = |t: f64| -> Result<f64> {
        Ok(majorant_diag(t, orders, a, b)? - majorant_edge(t, orders, a, b)?)
    };
    let mut lo = 0.5 * (a + b);
    let d_lo = diff(lo)?;
    if d_lo == 0.0 {
        return Ok(lo);
    }
    if d_lo < 0.0 {
        return Err(Error::BracketFailure {
            message: format!("expected p >= r at the midpoint, got p - r = {d_lo}"),
        });
    }
    // Walk toward b until the difference turns negative; r dominates p near
    // b, so a short geometric walk finds the bracket.
    let mut hi = f64::NAN;
    let mut step = 0.25 * (b - a);
    loop {
        let cand = b - step;
        if diff(cand)? < 0.0 {
            hi = cand;
            break;
        }
        lo = cand;
        step *= 0.25;
        if step < f64::EPSILON * (b - a) {
            break;
        }
    }
    if hi.is_nan() {
        return Err(Error::BracketFailure {
            message: "no sign change of p - r found left of b".into(),
        });
    }
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        let d = diff(mid)?;
        if d.abs() <= tol {
            return Ok(mid);
        }
        if d > 0.0 {
            lo = mid;
        } else {
            hi = mid;
        }
        if hi - lo < f64::EPSILON * (b - a) {
            break;
        }
    }
    let mid = 0.5 * (lo + hi);
    if (diff(mid)?).abs() <= tol {
        Ok(mid)
    } else {
        Err(Error::BracketFailure {
            message: format!("tolerance {tol} unreachable in floating point at t = {mid}"),
        })
    }
}

/// Interval-length bound for D^α x + g·D^β x + f·x = 0 (fractional-leading
/// regime):
///
/// ```text
/// lhs = Γ(α−β)
/// g_term = max{ ∫ Δ_{a,b}(s) |g| ds, ∫ p(s) |g| ds }
/// f_term = max{ ∫ Δ_{a,b}(s) w(s) ds, ∫ p(s) w(s) ds },  w = (s−a)^β |f| / Γ(β+1)
/// ```
///
/// The comparison is non-strict (`lhs ≤ total`) regardless of
/// `spec.strict`: this criterion rules on merely nontrivial solutions.
pub fn fractional_rhs(spec: &ProblemSpec, cfg: &QuadConfig) -> Result<BoundReport> {
    spec.orders.expect_regime(Regime::FractionalLeading)?;
    let (a, b) = (spec.a, spec.b);
    let alpha = spec.orders.alpha();
    let beta = spec.orders.beta();
    let gam = spec.orders.gamma_exponent();
    let am1 = alpha - 1.0;
    let width_pow = (b - a).powf(am1);
    let width_beta = (b - a).powf(beta);
    let inv_gamma_b1 = 1.0 / gamma(beta + 1.0)?;
    let p_of = move |p: &QuadPoint| p.from_a.powf(gam) * p.from_b.powf(am1) / width_pow;
    let delta_of = move |p: &QuadPoint| {
        let r = p.from_b.powf(gam) - p.from_b.powf(am1) / width_beta;
        if gam > 0.0 {
            r.max(p_of(p))
        } else {
            r
        }
    };
    let g = &spec.g_coeff;
    let f = &spec.f_coeff;
    let w_of = move |p: &QuadPoint, h: &RealFn, with_beta: bool| {
        let base = h.eval(p.s).abs();
        if with_beta {
            base * p.from_a.powf(beta) * inv_gamma_b1
        } else {
            base
        }
    };

    let pick =
        |h: &RealFn, with_beta: bool| -> Result<(f64, f64, BoundBranch)> {
            let first = integrate_points(
                |p: QuadPoint| delta_of(&p) * w_of(&p, h, with_beta),
                a,
                b,
                cfg,
            )?;
            let second = integrate_points(
                |p: QuadPoint| p_of(&p) * w_of(&p, h, with_beta),
                a,
                b,
                cfg,
            )?;
            Ok(if first.value >= second.value {
                (first.value, first.error_estimate, BoundBranch::GFirstIntegral)
            } else {
                (second.value, second.error_estimate, BoundBranch::GSecondIntegral)
            })
        };

    let (g_term, g_err, branch) = pick(g, false)?;
    let (f_term, f_err, _) = pick(f, true)?;
    Ok(BoundReport::assemble(
        gamma(alpha - beta)?,
        g_term,
        f_term,
        branch,
        g_err + f_err,
        false,
    ))
}

/// Classical eigenvalue-style threshold Γ(α)(4/(b−a))^(α−1): the β = 0,
/// g ≡ 0 specialization of the fractional-leading bound with the maximum of
/// the diagonal majorant folded in. Requires 1 < α ≤ 2 and a < b.
pub fn lyapunov_rhs(alpha: f64, a: f64, b: f64) -> Result<f64> {
    if !(alpha > 1.0 && alpha <= 2.0) {
        return Err(Error::domain(
            "lyapunov_rhs",
            format!("needs 1 < alpha <= 2, got {alpha}"),
        ));
    }
    if !a.is_finite() || !b.is_finite() || !(a < b) {
        return Err(Error::InvalidInterval { a, b });
    }
    Ok(gamma(alpha)? * (4.0 / (b - a)).powf(alpha - 1.0))
}

/// Reconstruct x(t) from the source term G = g·D^β x + f·x via the Green
/// representation of x'' + G = 0 with x(a) = x(b) = 0:
///
/// ```text
/// (b−a)·x(t) = (b−t)∫_a^t (s−a) G(s) ds + (t−a)∫_t^b (b−s) G(s) ds
/// ```
///
/// Exists for verification — it lets the identities behind the bounds be
/// exercised numerically; it is not a boundary-value solver.
pub fn reconstruct_solution(
    source: &RealFn,
    a: f64,
    b: f64,
    t: f64,
    cfg: &QuadConfig,
) -> Result<f64> {
    if !a.is_finite() || !b.is_finite() || !(a < b) {
        return Err(Error::InvalidInterval { a, b });
    }
    if !(a..=b).contains(&t) {
        return Err(Error::domain(
            "reconstruct_solution",
            format!("t = {t} outside [{a}, {b}]"),
        ));
    }
    let left = integrate_points(|p: QuadPoint| p.from_a * source.eval(p.s), a, t, cfg)?;
    let right = integrate_points(|p: QuadPoint| p.from_b * source.eval(p.s), t, b, cfg)?;
    Ok(((b - t) * left.value + (t - a) * right.value) / (b - a))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cfg() -> QuadConfig {
        QuadConfig::default()
    }

    fn integer_spec(beta: f64, g: RealFn, f: RealFn) -> ProblemSpec {
        ProblemSpec::new(
            0.0,
            1.0,
            f,
            g,
            OrderPair::integer_leading(beta).unwrap(),
            true,
        )
        .unwrap()
    }

    fn fractional_spec(alpha: f64, beta: f64, a: f64, b: f64, g: RealFn, f: RealFn) -> ProblemSpec {
        ProblemSpec::new(
            a,
            b,
            f,
            g,
            OrderPair::fractional_leading(alpha, beta).unwrap(),
            false,
        )
        .unwrap()
    }

    #[test]
    fn vp_rhs_arithmetic() {
        assert_eq!(vp_rhs(0.0, 1.0, 0.0, 1.0).unwrap(), 0.5);
        assert_eq!(vp_rhs(1.0, 0.0, 0.0, 1.0).unwrap(), 1.0);
        let pi2 = std::f64::consts::PI.powi(2);
        let v = vp_rhs(0.0, pi2, 0.0, 1.0).unwrap();
        assert!((v - pi2 / 2.0).abs() < 1e-15);
        assert!(v > 1.0); // the classical eigenvalue case clears the threshold
        assert!(vp_rhs(-1.0, 0.0, 0.0, 1.0).is_err());
        assert!(vp_rhs(0.0, 0.0, 1.0, 1.0).is_err());
    }

    #[test]
    fn mixed_rhs_constant_damping() {
        // g ≡ λ on [0,1]: winning branch is ∫ s^(2−β) λ/Γ(2−β) = λ/(Γ(2−β)(3−β))
        let lambda = 2.3;
        let beta = 0.4;
        let spec = integer_spec(beta, RealFn::constant(lambda), RealFn::constant(0.0));
        let rep = mixed_rhs(&spec, &cfg()).unwrap();
        let expect = lambda / (gamma(2.0 - beta).unwrap() * (3.0 - beta));
        assert!((rep.g_term - expect).abs() < 1e-10, "{} vs {expect}", rep.g_term);
        assert_eq!(rep.branch_taken, BoundBranch::GFirstIntegral);
        assert_eq!(rep.f_term, 0.0);
        assert!((rep.lhs - 1.0).abs() < 1e-15);
        assert!(rep.satisfied == (rep.lhs < rep.total));
    }

    #[test]
    fn mixed_rhs_constant_potential() {
        // g ≡ 0, f ≡ M2: f_term = M2 ∫ s(1−s) = M2/6
        let spec = integer_spec(0.7, RealFn::constant(0.0), RealFn::constant(3.0));
        let rep = mixed_rhs(&spec, &cfg()).unwrap();
        assert!((rep.f_term - 0.5).abs() < 1e-10);
        assert_eq!(rep.g_term, 0.0);
        assert!((rep.total - 0.5).abs() < 1e-10);
        assert!(!rep.satisfied); // 1 < 0.5 fails: interval too short for zeros
    }

    #[test]
    fn mixed_rhs_rejects_wrong_regime() {
        let spec = fractional_spec(
            1.8,
            0.5,
            0.0,
            1.0,
            RealFn::constant(1.0),
            RealFn::constant(0.0),
        );
        assert!(matches!(
            mixed_rhs(&spec, &cfg()),
            Err(Error::WrongRegime { .. })
        ));
        assert!(matches!(
            g_envelope(0.5, &spec, &cfg()),
            Err(Error::WrongRegime { .. })
        ));
    }

    #[test]
    fn hw_matches_mixed_at_first_order_damping() {
        // two independent code paths must agree at β = 1
        let g = RealFn::polynomial(vec![0.3, 1.1, -0.4]);
        let f = RealFn::polynomial(vec![0.9, -0.2]);
        let spec = integer_spec(1.0, g, f);
        let via_mixed = mixed_rhs(&spec, &cfg()).unwrap();
        let via_hw = hw_rhs(&spec, &cfg()).unwrap();
        assert!((via_mixed.g_term - via_hw.g_term).abs() < 1e-12);
        assert!((via_mixed.f_term - via_hw.f_term).abs() < 1e-12);
        assert!((via_mixed.total - via_hw.total).abs() < 1e-12);
        assert_eq!(via_mixed.branch_taken, via_hw.branch_taken);
    }

    #[test]
    fn hw_reference_values() {
        // g ≡ 2: max{∫2s, ∫2(1−s)} = 1
        let spec = integer_spec(1.0, RealFn::constant(2.0), RealFn::constant(0.0));
        let rep = hw_rhs(&spec, &cfg()).unwrap();
        assert!((rep.g_term - 1.0).abs() < 1e-10);
        assert!((rep.total - 1.0).abs() < 1e-10);
        // f ≡ π²: total = π²/6 > 1 = lhs, so the bound holds
        let pi2 = std::f64::consts::PI.powi(2);
        let spec = integer_spec(1.0, RealFn::constant(0.0), RealFn::constant(pi2));
        let rep = hw_rhs(&spec, &cfg()).unwrap();
        assert!((rep.total - pi2 / 6.0).abs() < 1e-9);
        assert!(rep.satisfied);
    }

    #[test]
    fn g_envelope_endpoints_and_midpoint() {
        // g ≡ 1, β = 1: S(0.5) = ∫₀^0.5 s ds + ∫_0.5^1 (1−s) ds = 0.25
        let spec = integer_spec(1.0, RealFn::constant(1.0), RealFn::constant(0.0));
        let s_mid = g_envelope(0.5, &spec, &cfg()).unwrap();
        assert!((s_mid - 0.25).abs() < 1e-10);
        // S(a) = second integral over the whole interval; S(b) = first
        let s_a = g_envelope(0.0, &spec, &cfg()).unwrap();
        let s_b = g_envelope(1.0, &spec, &cfg()).unwrap();
        assert!((s_a - 0.5).abs() < 1e-10);
        assert!((s_b - 0.5).abs() < 1e-10);
        // interior never beats the endpoint max
        for i in 1..20 {
            let t = i as f64 / 20.0;
            let s_t = g_envelope(t, &spec, &cfg()).unwrap();
            assert!(s_t <= s_a.max(s_b) + 1e-9, "S({t}) = {s_t}");
        }
    }

    #[test]
    fn green_kernel_boundary_identities() {
        let orders = OrderPair::fractional_leading(1.8, 0.5).unwrap();
        let (a, b) = (0.0, 1.0);
        // on the diagonal the kernel equals the diagonal majorant (γ > 0)
        for s in [0.1, 0.37, 0.82] {
            let on_diag = green_kernel(s, s, &orders, a, b).unwrap();
            let p = majorant_diag(s, &orders, a, b).unwrap();
            assert!((on_diag - p).abs() < 1e-14);
        }
        // at t = b the kernel equals −r(s)
        for s in [0.15, 0.5, 0.9] {
            let at_b = green_kernel(b, s, &orders, a, b).unwrap();
            let r = majorant_edge(s, &orders, a, b).unwrap();
            assert!((at_b + r).abs() < 1e-14);
        }
        // α = 2, β = 1 (γ = 0, the 0⁰ = 1 convention): f(1, 0) = 1/1 − 1 = 0
        let o21 = OrderPair::fractional_leading(2.0, 1.0).unwrap();
        assert_eq!(green_kernel(1.0, 0.0, &o21, 0.0, 1.0).unwrap(), 0.0);
        // ordering violation rejected
        assert!(green_kernel(0.2, 0.5, &orders, a, b).is_err());
    }

    #[test]
    fn kernel_majorant_reference_values() {
        let orders = OrderPair::fractional_leading(1.8, 0.5).unwrap();
        // Δ(0.5) = max{0.5^1.1, 0.5^0.3 − 0.5^0.8} — diagonal branch wins
        let d = kernel_majorant(0.5, &orders, 0.0, 1.0).unwrap();
        assert!((d - 0.4665164957684037).abs() < 1e-15, "got {d}");
        // both branches vanish at s = a
        assert!(kernel_majorant(0.0, &orders, 0.0, 1.0).unwrap().abs() < 1e-15);
        // γ = 0: the diagonal branch does not participate; Δ(s) = r(s) = s−a
        let o21 = OrderPair::fractional_leading(2.0, 1.0).unwrap();
        for s in [0.0, 0.25, 0.5, 0.75] {
            let d = kernel_majorant(s, &o21, 0.0, 1.0).unwrap();
            assert!((d - s).abs() < 1e-14, "Δ({s}) = {d}");
            // even where p(s) = (b−s) would be larger
            let p = majorant_diag(s, &o21, 0.0, 1.0).unwrap();
            assert!((p - (1.0 - s)).abs() < 1e-14);
        }
    }

    #[test]
    fn kernel_majorant_dominates_green_kernel() {
        // |f(t,s)| ≤ Δ(s) over a triangular grid, several order pairs
        for (alpha, beta) in [(1.8, 0.5), (2.0, 0.3), (1.6, 0.2), (2.0, 1.0), (1.9, 0.0)] {
            let orders = OrderPair::fractional_leading(alpha, beta).unwrap();
            let (a, b) = (0.5, 2.5);
            let n = 50;
            for i in 0..=n {
                let s = a + (b - a) * i as f64 / n as f64;
                let delta = kernel_majorant(s, &orders, a, b).unwrap();
                for j in i..=n {
                    let t = a + (b - a) * j as f64 / n as f64;
                    let k = green_kernel(t, s, &orders, a, b).unwrap();
                    assert!(
                        k.abs() <= delta + 1e-12,
                        "|f({t},{s})| = {} > Δ = {delta} at α={alpha}, β={beta}",
                        k.abs()
                    );
                }
            }
        }
    }

    #[test]
    fn crossing_point_location_and_residual() {
        let orders = OrderPair::fractional_leading(2.0, 0.5).unwrap();
        let tol = 1e-12;
        let t = crossing_point(&orders, 0.0, 1.0, tol).unwrap();
        assert!(t > 0.5 && t < 1.0, "t* = {t}");
        let p = majorant_diag(t, &orders, 0.0, 1.0).unwrap();
        let r = majorant_edge(t, &orders, 0.0, 1.0).unwrap();
        assert!((p - r).abs() <= tol);
        // a dense scan confirms exactly one sign change of p − r on (a, b)
        let mut changes = 0;
        let mut prev = 0.0f64;
        for i in 1..10_000 {
            let s = i as f64 / 10_000.0;
            let d = majorant_diag(s, &orders, 0.0, 1.0).unwrap()
                - majorant_edge(s, &orders, 0.0, 1.0).unwrap();
            if prev != 0.0 && d != 0.0 && d.signum() != prev.signum() {
                changes += 1;
            }
            if d != 0.0 {
                prev = d;
            }
        }
        assert_eq!(changes, 1);
    }

    #[test]
    fn crossing_point_affine_invariance() {
        let orders = OrderPair::fractional_leading(1.7, 0.3).unwrap();
        let t_unit = crossing_point(&orders, 0.0, 1.0, 1e-11).unwrap();
        let t_shift = crossing_point(&orders, 2.0, 4.0, 1e-11).unwrap();
        // kernels are affine-covariant, so t* maps with the interval
        assert!(
            (t_shift - (2.0 + 2.0 * t_unit)).abs() < 1e-7,
            "{t_shift} vs {}",
            2.0 + 2.0 * t_unit
        );
    }

    #[test]
    fn crossing_point_needs_positive_gamma() {
        let orders = OrderPair::fractional_leading(1.5, 0.5).unwrap(); // γ = 0
        assert!(matches!(
            crossing_point(&orders, 0.0, 1.0, 1e-10),
            Err(Error::BracketFailure { .. })
        ));
    }

    #[test]
    fn fractional_rhs_recovers_first_order_case() {
        // α = 2, β = 1, g ≡ 1, f ≡ 0: both integrals equal 1/2 — a tie,
        // resolved to the first branch
        let spec = fractional_spec(
            2.0,
            1.0,
            0.0,
            1.0,
            RealFn::constant(1.0),
            RealFn::constant(0.0),
        );
        let rep = fractional_rhs(&spec, &cfg()).unwrap();
        assert!((rep.g_term - 0.5).abs() < 1e-10, "{}", rep.g_term);
        assert_eq!(rep.f_term, 0.0);
        assert!((rep.lhs - 1.0).abs() < 1e-14); // Γ(1)
        assert_eq!(rep.branch_taken, BoundBranch::GFirstIntegral);
    }

    #[test]
    fn fractional_rhs_degenerate_damping_order() {
        // α = 2, β = 0, f ≡ 1 on [0,1]: the edge branch vanishes identically
        // and f_term = ∫ s(1−s) ds = 1/6
        let spec = fractional_spec(
            2.0,
            0.0,
            0.0,
            1.0,
            RealFn::constant(0.0),
            RealFn::constant(1.0),
        );
        let rep = fractional_rhs(&spec, &cfg()).unwrap();
        assert!((rep.f_term - 1.0 / 6.0).abs() < 1e-10, "{}", rep.f_term);
        assert_eq!(rep.g_term, 0.0);
        assert!((rep.lhs - 1.0).abs() < 1e-14); // Γ(2)
        assert!(!rep.satisfied); // 1 ≤ 1/6 fails
    }

    #[test]
    fn fractional_rhs_zero_coefficients_unsatisfied() {
        let spec = fractional_spec(
            1.8,
            0.5,
            0.0,
            1.0,
            RealFn::constant(0.0),
            RealFn::constant(0.0),
        );
        let rep = fractional_rhs(&spec, &cfg()).unwrap();
        assert_eq!(rep.total, 0.0);
        assert!(!rep.satisfied);
        assert!(rep.lhs > 0.0);
    }

    #[test]
    fn fractional_total_stays_below_classical_bound() {
        // at α = 2, β = 1 with constant coefficients the refined bound is
        // at most the classical one
        for (m1, m2, a, b) in [(1.0, 1.0, 0.0, 1.0), (0.4, 2.5, 1.0, 3.5), (2.0, 0.0, -1.0, 0.5)] {
            let spec = ProblemSpec::new(
                a,
                b,
                RealFn::constant(m2),
                RealFn::constant(m1),
                OrderPair::fractional_leading(2.0, 1.0).unwrap(),
                false,
            )
            .unwrap();
            let rep = fractional_rhs(&spec, &cfg()).unwrap();
            let classical = vp_rhs(m1, m2, a, b).unwrap();
            assert!(
                rep.total <= classical + 1e-10,
                "{} > {classical}",
                rep.total
            );
        }
    }

    #[test]
    fn lyapunov_reference_values() {
        assert!((lyapunov_rhs(2.0, 0.0, 1.0).unwrap() - 4.0).abs() < 1e-14);
        assert!((lyapunov_rhs(2.0, 0.0, 4.0).unwrap() - 1.0).abs() < 1e-14);
        let v = lyapunov_rhs(1.5, 0.0, 1.0).unwrap();
        assert!((v - gamma(1.5).unwrap() * 2.0).abs() < 1e-14);
        assert!(lyapunov_rhs(1.0, 0.0, 1.0).is_err());
        assert!(lyapunov_rhs(2.5, 0.0, 1.0).is_err());
    }

    #[test]
    fn reconstruct_constant_source() {
        // x'' + 1 = 0, x(0) = x(1) = 0 ⇒ x(t) = t(1−t)/2
        let one = RealFn::constant(1.0);
        for i in 0..=10 {
            let t = i as f64 / 10.0;
            let x = reconstruct_solution(&one, 0.0, 1.0, t, &cfg()).unwrap();
            assert!((x - 0.5 * t * (1.0 - t)).abs() < 1e-9, "x({t}) = {x}");
        }
    }

    #[test]
    fn reconstruct_sine_source() {
        // x'' + sin = 0 on [0, π] with Dirichlet ends ⇒ x = sin
        let pi = std::f64::consts::PI;
        let sine = RealFn::tabulate(|s| s.sin(), 0.0, pi, 4001).unwrap();
        for t in [0.0, 0.3, 1.1, 2.0, 2.9, pi] {
            let x = reconstruct_solution(&sine, 0.0, pi, t, &cfg()).unwrap();
            assert!((x - t.sin()).abs() < 1e-5, "x({t}) = {x} vs {}", t.sin());
        }
    }

    #[test]
    fn bound_report_json_shape() {
        let spec = integer_spec(1.0, RealFn::constant(2.0), RealFn::constant(0.0));
        let rep = hw_rhs(&spec, &cfg()).unwrap();
        let json = rep.to_json();
        assert!(json.starts_with("{\"lhs\": "));
        assert!(json.contains("\"branch_taken\": \"G_FIRST_INTEGRAL\""));
        assert!(json.contains("\"satisfied\": false"));
        assert!(json.ends_with('}'));
    }
}
