//! Entire functions of the squared frequency used throughout the transfer
//! machinery: `cos_sqrt(z) = cos(sqrt z)`, `sinc_sqrt(z) = sin(sqrt z)/sqrt z`
//! and `versinc_sqrt(z) = (1 - cos(sqrt z))/z`.
//!
//! All three are entire in z, so a single formula covers the oscillatory
//! (z > 0), hyperbolic (z < 0) and degenerate (z = 0) regimes without branch
//! selection. Near z = 0 the closed forms lose digits, so a short Taylor
//! series takes over.

use num_complex::Complex64;

const SERIES_CUT: f64 = 1e-3;

/// cos(sqrt z) for real z, trigonometric/hyperbolic away from zero.
pub fn cos_sqrt(z: f64) -> f64 {
    if z.abs() < SERIES_CUT {
        return cos_sqrt_series(z);
    }
    if z > 0.0 {
        z.sqrt().cos()
    } else {
        (-z).sqrt().cosh()
    }
}

/// sin(sqrt z)/sqrt z for real z.
pub fn sinc_sqrt(z: f64) -> f64 {
    if z.abs() < SERIES_CUT {
        return sinc_sqrt_series(z);
    }
    if z > 0.0 {
        let w = z.sqrt();
        w.sin() / w
    } else {
        let w = (-z).sqrt();
        w.sinh() / w
    }
}

/// (1 - cos(sqrt z))/z for real z.
pub fn versinc_sqrt(z: f64) -> f64 {
    if z.abs() < SERIES_CUT {
        return versinc_sqrt_series(z);
    }
    (1.0 - cos_sqrt(z)) / z
}

fn cos_sqrt_series(z: f64) -> f64 {
    // cos sqrt(z) = 1 - z/2 + z^2/24 - z^3/720 + z^4/40320
    1.0 + z * (-0.5 + z * (1.0 / 24.0 + z * (-1.0 / 720.0 + z / 40320.0)))
}

fn sinc_sqrt_series(z: f64) -> f64 {
    // sin sqrt(z)/sqrt(z) = 1 - z/6 + z^2/120 - z^3/5040 + z^4/362880
    1.0 + z * (-1.0 / 6.0 + z * (1.0 / 120.0 + z * (-1.0 / 5040.0 + z / 362880.0)))
}

fn versinc_sqrt_series(z: f64) -> f64 {
    // (1 - cos sqrt z)/z = 1/2 - z/24 + z^2/720 - z^3/40320
    0.5 + z * (-1.0 / 24.0 + z * (1.0 / 720.0 - z / 40320.0))
}

/// cos(sqrt z) for complex z.
pub fn cos_sqrt_c(z: Complex64) -> Complex64 {
    if z.norm() < SERIES_CUT {
        let one = Complex64::new(1.0, 0.0);
        return one
            + z * (Complex64::new(-0.5, 0.0)
                + z * (Complex64::new(1.0 / 24.0, 0.0)
                    + z * (Complex64::new(-1.0 / 720.0, 0.0) + z / 40320.0)));
    }
    z.sqrt().cos()
}

/// sin(sqrt z)/sqrt z for complex z.
pub fn sinc_sqrt_c(z: Complex64) -> Complex64 {
    if z.norm() < SERIES_CUT {
        let one = Complex64::new(1.0, 0.0);
        return one
            + z * (Complex64::new(-1.0 / 6.0, 0.0)
                + z * (Complex64::new(1.0 / 120.0, 0.0)
                    + z * (Complex64::new(-1.0 / 5040.0, 0.0) + z / 362880.0)));
    }
    let w = z.sqrt();
    w.sin() / w
}

/// (1 - cos(sqrt z))/z for complex z.
pub fn versinc_sqrt_c(z: Complex64) -> Complex64 {
    if z.norm() < SERIES_CUT {
        let half = Complex64::new(0.5, 0.0);
        return half
            + z * (Complex64::new(-1.0 / 24.0, 0.0)
                + z * (Complex64::new(1.0 / 720.0, 0.0) - z / 40320.0));
    }
    (Complex64::new(1.0, 0.0) - z.sqrt().cos()) / z
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    #[test]
    fn matches_direct_evaluation_away_from_zero() {
        for &z in &[0.5, 2.0, 9.8696, -0.5, -4.0, 100.0] {
            let w = (z as f64).abs().sqrt();
            let (c_ref, s_ref) = if z > 0.0 {
                (w.cos(), w.sin() / w)
            } else {
                (w.cosh(), w.sinh() / w)
            };
            assert_relative_eq!(cos_sqrt(z), c_ref, max_relative = 1e-14);
            assert_relative_eq!(sinc_sqrt(z), s_ref, max_relative = 1e-14);
        }
    }

    #[test]
    fn series_is_continuous_across_the_cut() {
        for &z in &[SERIES_CUT * 0.999, -SERIES_CUT * 0.999] {
            let w = z.abs().sqrt();
            let c_ref = if z > 0.0 { w.cos() } else { w.cosh() };
            assert_relative_eq!(cos_sqrt(z), c_ref, max_relative = 1e-13);
            assert_relative_eq!(versinc_sqrt(z), (1.0 - c_ref) / z, max_relative = 1e-9);
        }
    }

    #[test]
    fn zero_limits() {
        assert_eq!(cos_sqrt(0.0), 1.0);
        assert_eq!(sinc_sqrt(0.0), 1.0);
        assert_eq!(versinc_sqrt(0.0), 0.5);
    }

    #[test]
    fn complex_agrees_with_real_on_the_real_axis() {
        for &z in &[3.0, -3.0, 1e-5, 40.0] {
            let zc = Complex64::new(z, 0.0);
            assert_relative_eq!(cos_sqrt_c(zc).re, cos_sqrt(z), max_relative = 1e-13);
            assert_relative_eq!(sinc_sqrt_c(zc).re, sinc_sqrt(z), max_relative = 1e-13);
            assert!(cos_sqrt_c(zc).im.abs() < 1e-15);
        }
    }
}
