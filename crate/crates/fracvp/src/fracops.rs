//! Riemann-Liouville fractional calculus on [a, b]:
//!
//! ```text
//! I_a^μ f(t) = (1/Γ(μ)) ∫_a^t (t−s)^(μ−1) f(s) ds          (integral)
//! D_a^μ f(t) = (d/dt)^n I_a^(n−μ) f(t),  n = ⌈μ⌉           (derivative)
//! ```
//!
//! plus the coefficient-function type the bound calculators consume and the
//! order-pair regimes of the two problem families.

use std::io::BufRead;

use crate::error::{Error, Result};
use crate::quad::{integrate_points, QuadConfig, QuadPoint};
use crate::specfun::gamma;

/// Which leading derivative the underlying boundary-value problem has.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Regime {
    /// x'' + g·D^β x + f·x = 0 with damping order 0 < β ≤ 1 (α is fixed at 2).
    IntegerLeading,
    /// D^α x + g·D^β x + f·x = 0 with 1 < α ≤ 2, 0 ≤ β ≤ 1 and α − β − 1 ≥ 0.
    FractionalLeading,
}

/// Validated (α, β) pair together with its [`Regime`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OrderPair {
    alpha: f64,
    beta: f64,
    regime: Regime,
}

impl OrderPair {
    /// Integer-leading family: requires 0 < β ≤ 1; α is fixed at 2.
    pub fn integer_leading(beta: f64) -> Result<Self> {
        if !(beta > 0.0 && beta <= 1.0) {
            return Err(Error::domain(
                "OrderPair",
                format!("integer-leading regime needs 0 < beta <= 1, got {beta}"),
            ));
        }
        Ok(OrderPair {
            alpha: 2.0,
            beta,
            regime: Regime::IntegerLeading,
        })
    }

    /// Fractional-leading family: requires 1 < α ≤ 2, 0 ≤ β ≤ 1 and
    /// α − β − 1 ≥ 0. β = 0 is the degenerate no-damping case (the kernel
    /// majorant then collapses to the diagonal branch, which is exactly the
    /// Lyapunov specialisation).
    pub fn fractional_leading(alpha: f64, beta: f64) -> Result<Self> {
        if !(alpha > 1.0 && alpha <= 2.0) {
            return Err(Error::domain(
                "OrderPair",
                format!("fractional-leading regime needs 1 < alpha <= 2, got {alpha}"),
            ));
        }
        if !(0.0..=1.0).contains(&beta) {
            return Err(Error::domain(
                "OrderPair",
                format!("fractional-leading regime needs 0 <= beta <= 1, got {beta}"),
            ));
        }
        if alpha - beta - 1.0 < 0.0 {
            return Err(Error::domain(
                "OrderPair",
                format!("needs alpha - beta - 1 >= 0, got alpha = {alpha}, beta = {beta}"),
            ));
        }
        Ok(OrderPair {
            alpha,
            beta,
            regime: Regime::FractionalLeading,
        })
    }

    pub fn alpha(&self) -> f64 {
        self.alpha
    }

    pub fn beta(&self) -> f64 {
        self.beta
    }

    pub fn regime(&self) -> Regime {
        self.regime
    }

    /// The kernel exponent α − β − 1 (≥ 0 in the fractional-leading regime).
    pub fn gamma_exponent(&self) -> f64 {
        self.alpha - self.beta - 1.0
    }

    pub(crate) fn expect_regime(&self, expected: Regime) -> Result<()> {
        if self.regime == expected {
            Ok(())
        } else {
            Err(Error::WrongRegime { expected })
        }
    }
}

/// A real-valued coefficient function on an interval.
#[derive(Debug, Clone, PartialEq)]
pub enum RealFn {
    /// f(t) = c
    Constant(f64),
    /// f(t) = c₀ + c₁t + c₂t² + … (coefficients in ascending degree)
    Polynomial(Vec<f64>),
    /// Piecewise-linear interpolation of samples on a strictly increasing
    /// grid; evaluation outside the grid extrapolates the boundary segment.
    Tabulated { grid: Vec<f64>, values: Vec<f64> },
    /// f(t) = (t − origin)^exponent with exponent > −1
    Power { exponent: f64, origin: f64 },
}

impl RealFn {
    pub fn constant(c: f64) -> RealFn {
        RealFn::Constant(c)
    }

    pub fn polynomial(coefficients: Vec<f64>) -> RealFn {
        RealFn::Polynomial(coefficients)
    }

    /// Requires exponent > −1 (integrability at the origin).
    pub fn power(exponent: f64, origin: f64) -> Result<RealFn> {
        if !(exponent > -1.0) || !origin.is_finite() {
            return Err(Error::domain(
                "RealFn::power",
                format!("needs exponent > -1 and finite origin, got ({exponent}, {origin})"),
            ));
        }
        Ok(RealFn::Power { exponent, origin })
    }

    /// Requires at least two samples, a strictly increasing grid, and finite
    /// values.
    pub fn tabulated(grid: Vec<f64>, values: Vec<f64>) -> Result<RealFn> {
        if grid.len() != values.len() {
            return Err(Error::domain(
                "RealFn::tabulated",
                format!("grid/value lengths differ: {} vs {}", grid.len(), values.len()),
            ));
        }
        if grid.len() < 2 {
            return Err(Error::domain(
                "RealFn::tabulated",
                "needs at least two samples",
            ));
        }
        for w in grid.windows(2) {
            if !(w[1] > w[0]) {
                return Err(Error::domain(
                    "RealFn::tabulated",
                    format!("grid not strictly increasing at t = {}", w[1]),
                ));
            }
        }
        if grid.iter().chain(values.iter()).any(|v| !v.is_finite()) {
            return Err(Error::domain(
                "RealFn::tabulated",
                "grid and values must be finite",
            ));
        }
        Ok(RealFn::Tabulated { grid, values })
    }

    /// Sample a function onto `n` equispaced points of [a, b].
    pub fn tabulate<F: Fn(f64) -> f64>(f: F, a: f64, b: f64, n: usize) -> Result<RealFn> {
        if n < 2 || !(b > a) {
            return Err(Error::domain(
                "RealFn::tabulate",
                "needs n >= 2 and b > a",
            ));
        }
        let grid: Vec<f64> = (0..n)
            .map(|i| a + (b - a) * i as f64 / (n - 1) as f64)
            .collect();
        let values = grid.iter().map(|&t| f(t)).collect();
        RealFn::tabulated(grid, values)
    }

    /// Read a tabulated function from CSV with the exact header `t,value`.
    /// Any malformed row aborts with its 1-based line number.
    pub fn tabulated_from_csv<R: BufRead>(reader: R) -> Result<RealFn> {
        let mut grid = Vec::new();
        let mut values = Vec::new();
        for (idx, line) in reader.lines().enumerate() {
            let line_no = idx + 1;
            let line = line.map_err(|e| Error::CsvFormat {
                line: line_no,
                message: e.to_string(),
            })?;
            let trimmed = line.trim();
            if idx == 0 {
                if trimmed != "t,value" {
                    return Err(Error::CsvFormat {
                        line: 1,
                        message: format!("expected header `t,value`, got `{trimmed}`"),
                    });
                }
                continue;
            }
            if trimmed.is_empty() {
                continue;
            }
            let mut fields = trimmed.split(',');
            let (t_str, v_str) = match (fields.next(), fields.next(), fields.next()) {
                (Some(t), Some(v), None) => (t, v),
                _ => {
                    return Err(Error::CsvFormat {
                        line: line_no,
                        message: "expected exactly two comma-separated fields".into(),
                    })
                }
            };
            let parse = |s: &str, what: &str| -> Result<f64> {
                let x: f64 = s.trim().parse().map_err(|_| Error::CsvFormat {
                    line: line_no,
                    message: format!("cannot parse {what} `{}` as a number", s.trim()),
                })?;
                if !x.is_finite() {
                    return Err(Error::CsvFormat {
                        line: line_no,
                        message: format!("{what} must be finite"),
                    });
                }
                Ok(x)
            };
            let t = parse(t_str, "t")?;
            let v = parse(v_str, "value")?;
            if let Some(&last) = grid.last() {
                if t <= last {
                    return Err(Error::CsvFormat {
                        line: line_no,
                        message: format!("t = {t} does not increase past {last}"),
                    });
                }
            }
            grid.push(t);
            values.push(v);
        }
        if grid.len() < 2 {
            return Err(Error::CsvFormat {
                line: grid.len() + 1,
                message: "need at least two data rows".into(),
            });
        }
        RealFn::tabulated(grid, values)
    }

    /// Evaluate at `t`.
    pub fn eval(&self, t: f64) -> f64 {
        match self {
            RealFn::Constant(c) => *c,
            RealFn::Polynomial(coeffs) => {
                coeffs.iter().rev().fold(0.0, |acc, &c| acc * t + c)
            }
            RealFn::Tabulated { grid, values } => {
                let n = grid.len();
                let seg = grid.partition_point(|&g| g <= t).clamp(1, n - 1) - 1;
                let (t0, t1) = (grid[seg], grid[seg + 1]);
                let (v0, v1) = (values[seg], values[seg + 1]);
                v0 + (v1 - v0) * (t - t0) / (t1 - t0)
            }
            RealFn::Power { exponent, origin } => (t - origin).powf(*exponent),
        }
    }
}

/// Fractional integral I_a^order f(t), via adaptive quadrature with the
/// weakly singular kernel folded into the integrand. Requires order > 0 and
/// a ≤ t.
pub fn rl_integral(f: &RealFn, order: f64, a: f64, t: f64, cfg: &QuadConfig) -> Result<f64> {
    if !(order > 0.0) {
        return Err(Error::domain(
            "rl_integral",
            format!("order must be positive, got {order}"),
        ));
    }
    if t < a {
        return Err(Error::InvalidInterval { a, b: t });
    }
    if t == a {
        return Ok(0.0);
    }
    let g = gamma(order)?;
    let out = integrate_points(
        |p: QuadPoint| p.from_b.powf(order - 1.0) * f.eval(p.s),
        a,
        t,
        cfg,
    )?;
    Ok(out.value / g)
}

/// Fractional derivative D_a^order f(t) for 0 < order ≤ 2 and t > a.
///
/// Constant, power and polynomial inputs dispatch to the exact power rule;
/// tabulated inputs go through [`rl_derivative_numeric`]. For tabulated
/// inputs prefer `cfg` tolerances at 1e-12 or tighter: the finite-difference
/// step divides the quadrature noise.
pub fn rl_derivative(f: &RealFn, order: f64, a: f64, t: f64, cfg: &QuadConfig) -> Result<f64> {
    check_derivative_args(order, a, t)?;
    match f {
        RealFn::Constant(c) => Ok(c * power_rule_derivative(0.0, order, a, t)?),
        RealFn::Power { exponent, origin } if *origin == a => {
            Ok(power_rule_derivative(*exponent, order, a, t)?)
        }
        RealFn::Polynomial(coeffs) => {
            // Rebase c₀ + c₁t + … onto powers of (t − a), then differentiate
            // term by term with the power rule.
            let shifted = rebase_polynomial(coeffs, a);
            let mut sum = 0.0;
            for (i, &d) in shifted.iter().enumerate() {
                if d != 0.0 {
                    sum += d * power_rule_derivative(i as f64, order, a, t)?;
                }
            }
            Ok(sum)
        }
        _ => rl_derivative_numeric(f, order, a, t, cfg),
    }
}

/// Numeric route for the fractional derivative: compute φ = I_a^(n−order) f
/// by quadrature on a centred stencil and apply finite differences,
/// step h = max(1e−5·(t−a), 1e−7). Exposed so the exact dispatch in
/// [`rl_derivative`] can be cross-checked against it on the same input.
pub fn rl_derivative_numeric(
    f: &RealFn,
    order: f64,
    a: f64,
    t: f64,
    cfg: &QuadConfig,
) -> Result<f64> {
    check_derivative_args(order, a, t)?;
    let n = order.ceil().max(1.0);
    let mu = n - order;
    let h = (1e-5 * (t - a)).max(1e-7);
    if t - n * h <= a {
        return Err(Error::StepUnderflow { step: h, t });
    }
    if h <= 4.0 * f64::EPSILON * t.abs().max(1.0) {
        return Err(Error::StepUnderflow { step: h, t });
    }
    let phi = |u: f64| -> Result<f64> {
        if mu == 0.0 {
            Ok(f.eval(u))
        } else {
            rl_integral(f, mu, a, u, cfg)
        }
    };
    if n == 1.0 {
        Ok((phi(t + h)? - phi(t - h)?) / (2.0 * h))
    } else {
        Ok((phi(t + h)? - 2.0 * phi(t)? + phi(t - h)?) / (h * h))
    }
}

/// Exact fractional derivative of (t−a)^p:
///
/// ```text
/// D_a^order (s−a)^p (t) = Γ(p+1)/Γ(p+1−order) · (t−a)^(p−order)
/// ```
///
/// by analytic continuation in the exponent; when p+1−order is a nonpositive
/// integer the reciprocal gamma vanishes and the derivative is identically 0
/// (e.g. D^μ (t−a)^(μ−1) = 0). Requires p > −1, order > 0 and t ≥ a; at
/// t = a the value is the limit when one exists, otherwise a domain error.
pub fn power_rule_derivative(p: f64, order: f64, a: f64, t: f64) -> Result<f64> {
    if !(p > -1.0) {
        return Err(Error::domain(
            "power_rule_derivative",
            format!("needs p > -1, got {p}"),
        ));
    }
    if !(order > 0.0) {
        return Err(Error::domain(
            "power_rule_derivative",
            format!("order must be positive, got {order}"),
        ));
    }
    if t < a {
        return Err(Error::InvalidInterval { a, b: t });
    }
    let v = p + 1.0 - order;
    // 1/Γ at a nonpositive integer is exactly zero: the whole term vanishes.
    if v <= 0.5 && (v - v.round()).abs() < 1e-12 && v.round() <= 0.0 {
        return Ok(0.0);
    }
    let coeff = gamma(p + 1.0)? / gamma(v)?;
    let e = p - order;
    if t == a {
        return if e > 0.0 {
            Ok(0.0)
        } else if e == 0.0 {
            Ok(coeff)
        } else {
            Err(Error::domain(
                "power_rule_derivative",
                format!("no finite limit at t = a for p - order = {e}"),
            ))
        };
    }
    Ok(coeff * (t - a).powf(e))
}

fn check_derivative_args(order: f64, a: f64, t: f64) -> Result<()> {
    if !(order > 0.0 && order <= 2.0) {
        return Err(Error::domain(
            "rl_derivative",
            format!("order must lie in (0, 2], got {order}"),
        ));
    }
    if !(t > a) {
        return Err(Error::domain(
            "rl_derivative",
            format!("needs t > a, got t = {t}, a = {a}"),
        ));
    }
    Ok(())
}

/// Coefficients of the same polynomial written in powers of (t − a).
fn rebase_polynomial(coeffs: &[f64], a: f64) -> Vec<f64> {
    let deg = coeffs.len();
    let mut out = vec![0.0; deg];
    // t^j = ((t−a) + a)^j = Σ_i C(j,i) a^(j−i) (t−a)^i
    for (j, &c) in coeffs.iter().enumerate() {
        if c == 0.0 {
            continue;
        }
        let mut binom = 1.0; // C(j, 0)
        let mut apow = a.powi(j as i32);
        for (i, slot) in out.iter_mut().enumerate().take(j + 1) {
            *slot += c * binom * apow;
            if i < j {
                binom *= (j - i) as f64 / (i + 1) as f64;
                apow /= if a != 0.0 { a } else { 1.0 };
                if a == 0.0 {
                    // only the i = j term survives when a = 0
                    apow = if i + 1 == j { 1.0 } else { 0.0 };
                }
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::io::Cursor;

    fn cfg() -> QuadConfig {
        QuadConfig::with_tolerance(1e-12)
    }

    #[test]
    fn order_pair_validation() {
        assert!(OrderPair::integer_leading(0.5).is_ok());
        assert!(OrderPair::integer_leading(1.0).is_ok());
        assert!(OrderPair::integer_leading(0.0).is_err());
        assert!(OrderPair::integer_leading(1.2).is_err());
        let p = OrderPair::fractional_leading(1.8, 0.5).unwrap();
        assert!((p.gamma_exponent() - 0.3).abs() < 1e-15);
        assert!(OrderPair::fractional_leading(1.5, 0.5).is_ok()); // boundary γ = 0
        assert!(OrderPair::fractional_leading(1.4, 0.5).is_err()); // γ < 0
        assert!(OrderPair::fractional_leading(2.0, 0.0).is_ok()); // degenerate β
        assert!(OrderPair::fractional_leading(1.0, 0.0).is_err());
        assert!(OrderPair::fractional_leading(2.2, 0.5).is_err());
    }

    #[test]
    fn realfn_eval_all_kinds() {
        assert_eq!(RealFn::constant(3.5).eval(7.0), 3.5);
        // 1 − 2t + t² at t = 3 → 4
        let p = RealFn::polynomial(vec![1.0, -2.0, 1.0]);
        assert!((p.eval(3.0) - 4.0).abs() < 1e-15);
        let pw = RealFn::power(0.5, 1.0).unwrap();
        assert!((pw.eval(5.0) - 2.0).abs() < 1e-15);
        let tab = RealFn::tabulated(vec![0.0, 1.0, 2.0], vec![0.0, 2.0, 6.0]).unwrap();
        assert!((tab.eval(0.5) - 1.0).abs() < 1e-15);
        assert!((tab.eval(1.5) - 4.0).abs() < 1e-15);
        // boundary-segment extrapolation
        assert!((tab.eval(-1.0) + 2.0).abs() < 1e-15);
        assert!((tab.eval(3.0) - 10.0).abs() < 1e-15);
    }

    #[test]
    fn realfn_validation() {
        assert!(RealFn::power(-1.0, 0.0).is_err());
        assert!(RealFn::tabulated(vec![0.0, 0.0], vec![1.0, 2.0]).is_err());
        assert!(RealFn::tabulated(vec![0.0, 1.0], vec![1.0]).is_err());
        assert!(RealFn::tabulated(vec![0.0], vec![1.0]).is_err());
        assert!(RealFn::tabulated(vec![0.0, 1.0], vec![1.0, f64::NAN]).is_err());
    }

    #[test]
    fn csv_happy_path() {
        let f = RealFn::tabulated_from_csv(Cursor::new("t,value\n0.0,1.0\n0.5,2.0\n1.0,0.5\n"))
            .unwrap();
        assert!((f.eval(0.25) - 1.5).abs() < 1e-15);
    }

    #[test]
    fn csv_errors_carry_line_numbers() {
        let bad_header = RealFn::tabulated_from_csv(Cursor::new("time,value\n0,1\n1,2\n"));
        assert!(matches!(bad_header, Err(Error::CsvFormat { line: 1, .. })));
        let bad_float = RealFn::tabulated_from_csv(Cursor::new("t,value\n0,1\nx,2\n"));
        assert!(matches!(bad_float, Err(Error::CsvFormat { line: 3, .. })));
        let not_increasing = RealFn::tabulated_from_csv(Cursor::new("t,value\n0,1\n1,2\n1,3\n"));
        assert!(matches!(not_increasing, Err(Error::CsvFormat { line: 4, .. })));
        let wrong_arity = RealFn::tabulated_from_csv(Cursor::new("t,value\n0,1,9\n1,2\n"));
        assert!(matches!(wrong_arity, Err(Error::CsvFormat { line: 2, .. })));
        let too_short = RealFn::tabulated_from_csv(Cursor::new("t,value\n0,1\n"));
        assert!(matches!(too_short, Err(Error::CsvFormat { .. })));
    }

    #[test]
    fn rl_integral_reference_values() {
        // I¹ of 1 on [0, 2] is 2
        let one = RealFn::constant(1.0);
        assert!((rl_integral(&one, 1.0, 0.0, 2.0, &cfg()).unwrap() - 2.0).abs() < 1e-11);
        // I^0.5 of t at t = 1: Γ(2)/Γ(2.5) = 1/Γ(2.5) = 0.7522527780636751
        let t1 = RealFn::polynomial(vec![0.0, 1.0]);
        let v = rl_integral(&t1, 0.5, 0.0, 1.0, &cfg()).unwrap();
        assert!((v - 0.7522527780636751).abs() < 1e-11, "got {v}");
        // degenerate point
        assert_eq!(rl_integral(&one, 0.7, 1.0, 1.0, &cfg()).unwrap(), 0.0);
        assert!(rl_integral(&one, 0.0, 0.0, 1.0, &cfg()).is_err());
        assert!(rl_integral(&one, 1.0, 1.0, 0.0, &cfg()).is_err());
    }

    #[test]
    fn rl_integral_twice_of_sine_recovers_t_minus_sin() {
        // I² sin(t) = t − sin t, so at t = π the value is π
        let tab = RealFn::tabulate(|s| s.sin(), 0.0, std::f64::consts::PI, 4001).unwrap();
        let v = rl_integral(&tab, 2.0, 0.0, std::f64::consts::PI, &cfg()).unwrap();
        assert!((v - std::f64::consts::PI).abs() < 1e-6, "got {v}");
    }

    #[test]
    fn rl_derivative_exact_paths() {
        let c = cfg();
        // D^0.5 t at t = 1 (a = 0): Γ(2)/Γ(1.5) = 2/√π
        let t1 = RealFn::polynomial(vec![0.0, 1.0]);
        let v = rl_derivative(&t1, 0.5, 0.0, 1.0, &c).unwrap();
        assert!((v - std::f64::consts::FRAC_2_SQRT_PI).abs() < 1e-13);
        // D^0.5 (t−a)^0.8 at t−a = 1: Γ(1.8)/Γ(1.3) = 1.0377873893972713
        let pw = RealFn::power(0.8, 0.0).unwrap();
        let v = rl_derivative(&pw, 0.5, 0.0, 1.0, &c).unwrap();
        assert!((v - 1.0377873893972713).abs() < 1e-13);
        // integer orders collapse to classical derivatives: D² t³ = 6t
        let t3 = RealFn::polynomial(vec![0.0, 0.0, 0.0, 1.0]);
        let v = rl_derivative(&t3, 2.0, 0.0, 1.5, &c).unwrap();
        assert!((v - 9.0).abs() < 1e-12);
        // D¹ of a constant vanishes (reciprocal gamma pole at 0)
        let v = rl_derivative(&RealFn::constant(1.0), 1.0, 0.0, 1.0, &c).unwrap();
        assert_eq!(v, 0.0);
        // D^0.5 of a constant does not: c·(t−a)^(−0.5)/Γ(0.5)
        let v = rl_derivative(&RealFn::constant(3.0), 0.5, 0.0, 4.0, &c).unwrap();
        assert!((v - 3.0 / (2.0 * 1.772453850905516)).abs() < 1e-13);
    }

    #[test]
    fn power_rule_annihilates_eigenfunction() {
        // D^μ (t−a)^(μ−1) = 0 for every admissible μ
        for mu in [0.3, 0.5, 0.99, 1.0, 1.5] {
            let v = power_rule_derivative(mu - 1.0, mu, 0.0, 2.3).unwrap();
            assert_eq!(v, 0.0, "mu = {mu}");
        }
    }

    #[test]
    fn power_rule_at_left_endpoint() {
        // exponent p − order decides the limit at t = a
        assert_eq!(power_rule_derivative(1.5, 0.5, 0.0, 0.0).unwrap(), 0.0);
        // p = order: constant Γ(p+1)
        let v = power_rule_derivative(0.5, 0.5, 0.0, 0.0).unwrap();
        assert!((v - gamma(1.5).unwrap()).abs() < 1e-14);
        assert!(power_rule_derivative(0.2, 0.5, 0.0, 0.0).is_err());
        // analytic continuation below p − order = −1 still evaluates off a
        let v = power_rule_derivative(0.2, 1.5, 0.0, 2.0).unwrap();
        assert!(v.is_finite());
    }

    #[test]
    fn numeric_derivative_matches_power_rule() {
        let c = QuadConfig::with_tolerance(1e-14);
        let pw = RealFn::power(1.3, 0.0).unwrap();
        let exact = power_rule_derivative(1.3, 0.4, 0.0, 2.5).unwrap();
        let numeric = rl_derivative_numeric(&pw, 0.4, 0.0, 2.5, &c).unwrap();
        assert!(
            (exact - numeric).abs() < 1e-8,
            "exact {exact} vs numeric {numeric}"
        );
    }

    #[test]
    fn numeric_derivative_step_guards() {
        let f = RealFn::constant(1.0);
        let r = rl_derivative_numeric(&f, 0.5, 0.0, 5e-8, &cfg());
        assert!(matches!(r, Err(Error::StepUnderflow { .. })));
        assert!(rl_derivative(&f, 0.5, 0.0, 0.0, &cfg()).is_err());
        assert!(rl_derivative(&f, 2.5, 0.0, 1.0, &cfg()).is_err());
    }

    #[test]
    fn polynomial_rebase_is_exact() {
        // (t−2)² + 1 = t² − 4t + 5 rebased at a = 2 → [1, 0, 1]
        let out = rebase_polynomial(&[5.0, -4.0, 1.0], 2.0);
        assert_eq!(out, vec![1.0, 0.0, 1.0]);
        let out = rebase_polynomial(&[1.0, 2.0, 3.0], 0.0);
        assert_eq!(out, vec![1.0, 2.0, 3.0]);
    }
}
