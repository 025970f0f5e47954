//! Zero-free intervals of Mittag-Leffler functions on the negative real
//! axis, and a brute-force first-zero scanner that cross-checks them.
//!
//! The radii here answer "how large may λ grow before E(−λ) can vanish?"
//! for the function families that arise as characteristic solutions of the
//! two problem regimes:
//!
//! * [`radius_classic`] and [`radius_improved`] cover E_{α,2} (the
//!   integer-shift family of the order-α problem on an interval),
//! * [`radius_general`] covers E_{α−β,α} (the two-order family), and
//! * [`ml_first_zero`] scans λ ↦ E(−λ) directly, serving as the
//!   independent check on every closed-form radius above.

use crate::error::{Error, Result};
use crate::fracops::{OrderPair, Regime};
use crate::quad::{integrate_points, QuadConfig, QuadPoint};
use crate::report::fmt_float;
use crate::specfun::{beta, gamma, MlSeries, ARG_MAX};

/// Number of uniform grid points the scanner places on (0, lambda_max].
const SCAN_GRID_POINTS: usize = 10_000;

fn check_unit_order(context: &'static str, x: f64) -> Result<()> {
    if !(x > 1.0 && x <= 2.0) {
        return Err(Error::domain(
            context,
            format!("needs an order in (1, 2], got {x}"),
        ));
    }
    Ok(())
}

/// The comparison function x ↦ x^x / (x−1)^{x−1} on (1, 2].
///
/// Computed as exp(x·ln x − (x−1)·ln(x−1)), which is stable all the way
/// down to the left endpoint: as x → 1⁺ the exponent vanishes and the value
/// tends to 1. On this interval the function increases strictly from 1 to
/// f(2) = 4 and is concave.
pub fn vallee_f(x: f64) -> Result<f64> {
    check_unit_order("vallee_f", x)?;
    Ok((x * x.ln() - (x - 1.0) * (x - 1.0).ln()).exp())
}

/// The unique order in (1, 2) where [`vallee_f`] crosses x + 1, located by
/// bisection to within `tol`.
///
/// Below this threshold (≈ 1.4474) the improved zero-free radius
/// Γ(α)(1+α) applies; above it only the classic radius does. Bisection is
/// used instead of Newton because the curvature of the comparison function
/// degenerates near 1⁺; the bracket is sign-definite (f − (x+1) is negative
/// near 1⁺ and equals 4 − 3 = 1 at x = 2), so bisection cannot fail. A
/// 200-iteration cap guards against a `tol` below floating-point
/// resolution.
pub fn alpha_bar(tol: f64) -> Result<f64> {
    if !(tol > 0.0) {
        return Err(Error::domain("alpha_bar", "tol must be positive"));
    }
    let mut lo = 1.0f64;
    let mut hi = 2.0f64;
    for _ in 0..200 {
        if hi - lo <= tol {
            break;
        }
        let mid = 0.5 * (lo + hi);
        if vallee_f(mid)? < mid + 1.0 {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    Ok(0.5 * (lo + hi))
}

/// Classic zero-free radius for E_{α,2} on the negative axis:
///
/// ```text
/// ρ(α) = Γ(α) · α^α / (α−1)^{α−1},    1 < α ≤ 2.
/// ```
///
/// E_{α,2}(x) has no real zero for x ∈ [−ρ(α), 0).
pub fn radius_classic(alpha: f64) -> Result<f64> {
    check_unit_order("radius_classic", alpha)?;
    Ok(gamma(alpha)? * vallee_f(alpha)?)
}

/// Improved zero-free radius Γ(α)(1+α) for E_{α,2}, valid only for orders
/// below [`alpha_bar`]; returns `None` when the hypothesis α < ᾱ fails.
///
/// Where it applies, the improved radius strictly exceeds the classic one
/// (that is exactly the sign structure defining ᾱ), so the zero-free
/// interval it certifies contains the classic one.
pub fn radius_improved(alpha: f64) -> Result<Option<f64>> {
    check_unit_order("radius_improved", alpha)?;
    if alpha < alpha_bar(1e-12)? {
        Ok(Some(gamma(alpha)? * (1.0 + alpha)))
    } else {
        Ok(None)
    }
}

/// The larger of the two zero-free radii certified for E_{α,2}: the
/// improved one where it applies, the classic one otherwise.
pub fn best_radius(alpha: f64) -> Result<f64> {
    let classic = radius_classic(alpha)?;
    Ok(match radius_improved(alpha)? {
        Some(improved) => classic.max(improved),
        None => classic,
    })
}

/// Zero-free radius for the two-order family E_{α−β,α}:
///
/// ```text
/// ν = Γ(α−β) / max{ ∫₀¹ Δ(s) ds, B(α−β, α) }
/// ```
///
/// where Δ is the kernel majorant of the order pair on the unit interval
/// (the same Δ as `bounds::kernel_majorant` with (a, b) = (0, 1)).
/// E_{α−β,α}(−λ) has no zero for 0 < λ < ν.
pub fn radius_general(orders: &OrderPair, cfg: &QuadConfig) -> Result<f64> {
    orders.expect_regime(Regime::FractionalLeading)?;
    let gam = orders.gamma_exponent();
    let am1 = orders.alpha() - 1.0;
    // On (0, 1) both width normalizations equal one, so the majorant is
    //   Δ(s) = max{ s^γ (1−s)^{α−1}  [only when γ > 0],
    //               (1−s)^γ − (1−s)^{α−1} }.
    let delta_integral = integrate_points(
        |p: QuadPoint| {
            let edge = p.from_b.powf(gam) - p.from_b.powf(am1);
            if gam > 0.0 {
                edge.max(p.from_a.powf(gam) * p.from_b.powf(am1))
            } else {
                edge
            }
        },
        0.0,
        1.0,
        cfg,
    )?;
    let order_gap = orders.alpha() - orders.beta();
    let euler_beta = beta(order_gap, orders.alpha())?;
    Ok(gamma(order_gap)? / delta_integral.value.max(euler_beta))
}

/// Outcome of a brute-force scan for the first zero of λ ↦ E(−λ).
#[derive(Debug, Clone, PartialEq)]
pub struct ZeroScanResult {
    /// Location of the first sign change, refined by bisection; `None`
    /// when the scan saw no sign change on (0, `scanned_up_to`].
    pub first_zero: Option<f64>,
    /// Largest λ the scan examined. Equals the requested maximum when no
    /// zero was found; stops at the bracketing grid point otherwise.
    pub scanned_up_to: f64,
    /// Bisection refinement width requested by the caller.
    pub refine_tol: f64,
    /// Total number of series evaluations spent (grid plus refinement).
    pub evaluations: usize,
}

impl ZeroScanResult {
    /// JSON encoding with `null` for an absent zero; floats use the
    /// round-trip format of [`fmt_float`].
    pub fn to_json(&self) -> String {
        let first = match self.first_zero {
            Some(z) => fmt_float(z),
            None => "null".to_owned(),
        };
        format!(
            "{{\"first_zero\": {}, \"scanned_up_to\": {}, \"refine_tol\": {}, \"evaluations\": {}}}",
            first,
            fmt_float(self.scanned_up_to),
            fmt_float(self.refine_tol),
            self.evaluations
        )
    }
}

/// Brute-force first zero of λ ↦ E_{order,shift}(−λ) on (0, lambda_max].
///
/// The scan walks a short geometric prefix (probing the near-zero region
/// below the uniform resolution) followed by a uniform grid of
/// [`SCAN_GRID_POINTS`] points, evaluating the series at each λ, and
/// refines the first sign change by bisection until the bracket is
/// narrower than `refine_tol`. The sign reference at λ = 0 is
/// E(0) = 1/Γ(shift) > 0.
///
/// Requires order ∈ [1, 2], shift ∈ [1, 2], 0 < lambda_max ≤ [`ARG_MAX`]
/// and refine_tol > 0.
///
/// A *sign change* is required for a zero to be reported: a zero of even
/// multiplicity that touches the axis without crossing would be missed.
/// The families scanned here are certified zero-free strictly inside the
/// radii above, so the first crossing — when one exists at all — is the
/// quantity of interest.
pub fn ml_first_zero(
    order: f64,
    shift: f64,
    lambda_max: f64,
    refine_tol: f64,
) -> Result<ZeroScanResult> {
    if !(1.0..=2.0).contains(&order) {
        return Err(Error::domain(
            "ml_first_zero",
            format!("order must lie in [1, 2], got {order}"),
        ));
    }
    if !(1.0..=2.0).contains(&shift) {
        return Err(Error::domain(
            "ml_first_zero",
            format!("shift must lie in [1, 2], got {shift}"),
        ));
    }
    if !(lambda_max > 0.0) {
        return Err(Error::domain(
            "ml_first_zero",
            format!("lambda_max must be positive, got {lambda_max}"),
        ));
    }
    if lambda_max > ARG_MAX {
        return Err(Error::ArgumentTooLarge {
            argument: lambda_max,
            max: ARG_MAX,
        });
    }
    if !(refine_tol > 0.0) {
        return Err(Error::domain(
            "ml_first_zero",
            format!("refine_tol must be positive, got {refine_tol}"),
        ));
    }

    let mut series = MlSeries::new(order, shift)?;
    let mut evaluations = 0usize;

    let step = lambda_max / SCAN_GRID_POINTS as f64;
    // Geometric prefix step/2^10, …, step/2, then the uniform ladder
    // step, 2·step, …, lambda_max. The last point is forced to
    // lambda_max exactly so rounding in step·n can neither overshoot the
    // argument cap nor undershoot the certified range.
    let grid = (1..=10)
        .map(move |k| step / 2f64.powi(11 - k))
        .chain((1..=SCAN_GRID_POINTS).map(move |i| {
            if i == SCAN_GRID_POINTS {
                lambda_max
            } else {
                step * i as f64
            }
        }));

    let mut prev_lam = 0.0f64;
    let mut prev_val = 1.0 / gamma(shift)?;
    for lam in grid {
        evaluations += 1;
        let val = series.eval(-lam)?.value;
        if val == 0.0 {
            // Landed exactly on the zero; nothing to refine.
            return Ok(ZeroScanResult {
                first_zero: Some(lam),
                scanned_up_to: lam,
                refine_tol,
                evaluations,
            });
        }
        if (prev_val > 0.0) != (val > 0.0) {
            let lo_positive = prev_val > 0.0;
            let (mut lo, mut hi) = (prev_lam, lam);
            while hi - lo > refine_tol {
                let mid = 0.5 * (lo + hi);
                if mid <= lo || mid >= hi {
                    // refine_tol below floating-point resolution here.
                    break;
                }
                evaluations += 1;
                let mid_val = series.eval(-mid)?.value;
                if mid_val == 0.0 {
                    lo = mid;
                    hi = mid;
                    break;
                }
                if (mid_val > 0.0) == lo_positive {
                    lo = mid;
                } else {
                    hi = mid;
                }
            }
            return Ok(ZeroScanResult {
                first_zero: Some(0.5 * (lo + hi)),
                scanned_up_to: lam,
                refine_tol,
                evaluations,
            });
        }
        prev_lam = lam;
        prev_val = val;
    }

    Ok(ZeroScanResult {
        first_zero: None,
        scanned_up_to: lambda_max,
        refine_tol,
        evaluations,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    const PI_SQUARED: f64 = 9.869604401089358;

    #[test]
    fn vallee_endpoint_and_interior_values() {
        assert!((vallee_f(2.0).unwrap() - 4.0).abs() < 1e-12);
        // 1.5^1.5 / 0.5^0.5 = 1.5·√3
        assert!((vallee_f(1.5).unwrap() - 2.598076211353316).abs() < 1e-12);
        // The left-endpoint limit is 1.
        assert!((vallee_f(1.0 + 1e-12).unwrap() - 1.0).abs() < 1e-9);
    }

    #[test]
    fn vallee_rejects_arguments_outside_its_interval() {
        assert!(vallee_f(1.0).is_err());
        assert!(vallee_f(0.5).is_err());
        assert!(vallee_f(2.0000001).is_err());
        assert!(vallee_f(f64::NAN).is_err());
    }

    #[test]
    fn vallee_is_increasing_and_concave_on_a_grid() {
        let f = |i: usize| vallee_f(1.0 + i as f64 / 1000.0).unwrap();
        for i in 1..1000 {
            assert!(f(i + 1) > f(i), "not increasing at grid index {i}");
        }
        for i in 2..1000 {
            let second_difference = f(i + 1) - 2.0 * f(i) + f(i - 1);
            assert!(
                second_difference <= 1e-9,
                "second difference {second_difference} at index {i}"
            );
        }
    }

    #[test]
    fn vallee_crosses_the_affine_comparison_exactly_once() {
        let threshold = alpha_bar(1e-12).unwrap();
        for i in 1..=999 {
            let x = 1.0 + i as f64 / 1000.0;
            let value = vallee_f(x).unwrap();
            if x < threshold - 1e-6 {
                assert!(value < x + 1.0, "expected f < x+1 at {x}");
            } else if x > threshold + 1e-6 {
                assert!(value > x + 1.0, "expected f > x+1 at {x}");
            }
        }
    }

    #[test]
    fn alpha_bar_matches_frozen_root_and_nests() {
        let fine = alpha_bar(1e-10).unwrap();
        assert!((fine - 1.4473712537144368).abs() < 1e-9);
        let coarse = alpha_bar(1e-3).unwrap();
        assert!((coarse - 1.447).abs() < 2e-3);
        assert!((fine - coarse).abs() <= 1e-3);
        // Residual at the returned point: |f(x) − (x+1)| ≲ slope · tol.
        let residual = vallee_f(fine).unwrap() - (fine + 1.0);
        assert!(residual.abs() < 1e-9, "residual {residual}");
        assert!(alpha_bar(0.0).is_err());
        assert!(alpha_bar(-1.0).is_err());
    }

    #[test]
    fn classic_radius_reference_values() {
        assert!((radius_classic(2.0).unwrap() - 4.0).abs() < 1e-12);
        assert!((radius_classic(1.5).unwrap() - 2.302485092879599).abs() < 1e-12);
        assert!((radius_classic(1.3).unwrap() - 1.811382879885494).abs() < 1e-12);
        // Both factors tend to 1 as the order approaches 1 from above.
        assert!((radius_classic(1.0 + 1e-9).unwrap() - 1.0).abs() < 1e-6);
        assert!(radius_classic(1.0).is_err());
        assert!(radius_classic(2.5).is_err());
    }

    #[test]
    fn improved_radius_present_only_below_the_threshold() {
        let at_1_3 = radius_improved(1.3).unwrap().unwrap();
        assert!((at_1_3 - 2.0641826015044376).abs() < 1e-12);
        assert!(at_1_3 > radius_classic(1.3).unwrap());
        assert!(radius_improved(1.44).unwrap().is_some());
        assert!(radius_improved(1.45).unwrap().is_none());
        assert!(radius_improved(1.5).unwrap().is_none());
        assert!(radius_improved(2.0).unwrap().is_none());
        assert!(radius_improved(0.9).is_err());
    }

    #[test]
    fn best_radius_picks_the_larger_certificate() {
        assert_eq!(
            best_radius(1.3).unwrap(),
            radius_improved(1.3).unwrap().unwrap()
        );
        assert_eq!(best_radius(1.5).unwrap(), radius_classic(1.5).unwrap());
        assert!((best_radius(2.0).unwrap() - 4.0).abs() < 1e-12);
    }

    #[test]
    fn general_radius_frozen_cases() {
        let cfg = QuadConfig::default();
        // α=2, β=1: Δ(s) = s on (0,1), so ∫Δ = 1/2 = B(1,2) and ν = 2.
        let pair = OrderPair::fractional_leading(2.0, 1.0).unwrap();
        assert!((radius_general(&pair, &cfg).unwrap() - 2.0).abs() < 1e-9);
        // α=2, β=0: Δ(s) = s(1−s), ∫Δ = 1/6 = B(2,2) and ν = 6.
        let pair = OrderPair::fractional_leading(2.0, 0.0).unwrap();
        assert!((radius_general(&pair, &cfg).unwrap() - 6.0).abs() < 1e-9);
        // Interior order pair with an active diagonal branch.
        let pair = OrderPair::fractional_leading(1.8, 0.3).unwrap();
        assert!((radius_general(&pair, &cfg).unwrap() - 2.8460258982485676).abs() < 1e-8);
    }

    #[test]
    fn general_radius_rejects_the_other_regime() {
        let pair = OrderPair::integer_leading(0.5).unwrap();
        assert!(matches!(
            radius_general(&pair, &QuadConfig::default()),
            Err(Error::WrongRegime { .. })
        ));
    }

    #[test]
    fn scanner_finds_the_sine_zero() {
        // E_{2,2}(−λ) = sin(√λ)/√λ vanishes first at λ = π².
        let scan = ml_first_zero(2.0, 2.0, 50.0, 1e-9).unwrap();
        let zero = scan.first_zero.expect("zero exists");
        assert!((zero - PI_SQUARED).abs() < 1e-7, "got {zero}");
        assert!(scan.scanned_up_to <= 50.0);
        assert!(scan.scanned_up_to >= zero);
        assert!(scan.evaluations > 0);
        assert_eq!(scan.refine_tol, 1e-9);
    }

    #[test]
    fn scanner_certifies_absence_for_the_exponential_family() {
        // E_{1,2}(−λ) = (1 − e^{−λ})/λ > 0 for every λ > 0.
        let scan = ml_first_zero(1.0, 2.0, 100.0, 1e-9).unwrap();
        assert_eq!(scan.first_zero, None);
        assert_eq!(scan.scanned_up_to, 100.0);
    }

    #[test]
    fn scanner_outcomes_across_the_order_range() {
        // At order 1.5 the scan stays positive throughout (0, 50]; the
        // minimum of E_{1.5,2}(−λ) over that range is ≈ +1.1e−2.
        let scan = ml_first_zero(1.5, 2.0, 50.0, 1e-9).unwrap();
        assert_eq!(scan.first_zero, None);
        // By order 1.6 a crossing has appeared.
        let scan = ml_first_zero(1.6, 2.0, 50.0, 1e-9).unwrap();
        let zero = scan.first_zero.expect("zero exists at order 1.6");
        assert!((zero - 13.420473988367277).abs() < 1e-6, "got {zero}");
        // Equal order and shift (the Lyapunov family).
        let scan = ml_first_zero(1.5, 1.5, 60.0, 1e-9).unwrap();
        let zero = scan.first_zero.expect("zero exists for order=shift=1.5");
        assert!((zero - 5.075430029543422).abs() < 1e-6, "got {zero}");
    }

    #[test]
    fn scanner_found_zero_exceeds_every_certified_radius() {
        for tenths in 11..=20 {
            let alpha = tenths as f64 / 10.0;
            let scan = ml_first_zero(alpha, 2.0, 60.0, 1e-9).unwrap();
            if let Some(zero) = scan.first_zero {
                assert!(
                    zero >= best_radius(alpha).unwrap() - 1e-6,
                    "zero {zero} inside certified radius at order {alpha}"
                );
            }
        }
    }

    #[test]
    fn scanner_rejects_bad_parameters() {
        assert!(ml_first_zero(0.9, 2.0, 50.0, 1e-9).is_err());
        assert!(ml_first_zero(2.1, 2.0, 50.0, 1e-9).is_err());
        assert!(ml_first_zero(1.5, 0.9, 50.0, 1e-9).is_err());
        assert!(ml_first_zero(1.5, 2.5, 50.0, 1e-9).is_err());
        assert!(matches!(
            ml_first_zero(1.5, 2.0, 250.0, 1e-9),
            Err(Error::ArgumentTooLarge { .. })
        ));
        assert!(ml_first_zero(1.5, 2.0, 0.0, 1e-9).is_err());
        assert!(ml_first_zero(1.5, 2.0, 50.0, 0.0).is_err());
    }

    #[test]
    fn scanner_accepts_the_full_argument_range() {
        // lambda_max at the argument cap must not trip the cap through
        // grid-point rounding.
        let scan = ml_first_zero(1.0, 2.0, ARG_MAX, 1e-6).unwrap();
        assert_eq!(scan.first_zero, None);
        assert_eq!(scan.scanned_up_to, ARG_MAX);
    }

    #[test]
    fn scan_result_serializes_with_null_for_absence() {
        let absent = ZeroScanResult {
            first_zero: None,
            scanned_up_to: 50.0,
            refine_tol: 1e-9,
            evaluations: 123,
        };
        assert_eq!(
            absent.to_json(),
            "{\"first_zero\": null, \"scanned_up_to\": 5.0000000000000000e1, \
             \"refine_tol\": 1.0000000000000001e-9, \"evaluations\": 123}"
        );
        let found = ZeroScanResult {
            first_zero: Some(0.5),
            scanned_up_to: 1.0,
            refine_tol: 1e-9,
            evaluations: 7,
        };
        assert!(found.to_json().starts_with("{\"first_zero\": 5.0000000000000000e-1,"));
    }
}
