//! Shared formatting for machine-readable output.

/// Render a finite f64 with 17 significant digits (scientific notation).
///
/// 17 digits pin down a binary64 value exactly, so emit → parse → emit is
/// byte-identical and parsers recover the original bits.
pub fn fmt_float(x: f64) -> String {
    format!("{x:.16e}")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trips_exactly() {
        for &x in &[
            0.0,
            0.5,
            1.0 / 3.0,
            std::f64::consts::PI,
            -2.718281828459045e-15,
            6.02e23,
            f64::MIN_POSITIVE,
            1.447371253714437,
        ] {
            let s = fmt_float(x);
            let back: f64 = s.parse().unwrap();
            assert_eq!(back.to_bits(), x.to_bits(), "{x} → {s} → {back}");
            assert_eq!(fmt_float(back), s);
        }
    }

    #[test]
    fn shape_is_json_compatible() {
        assert_eq!(fmt_float(0.5), "5.0000000000000000e-1");
        assert_eq!(fmt_float(4.0), "4.0000000000000000e0");
        assert_eq!(fmt_float(0.0), "0.0000000000000000e0");
    }
}
