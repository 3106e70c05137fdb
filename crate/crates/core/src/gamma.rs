//! Complex log-gamma via the Lanczos approximation.
//!
//! Only needed on the right half plane (the theta function evaluates
//! ln Gamma(1/4 + it/2)), so no reflection formula is carried.

use num_complex::Complex64;

// Lanczos g = 7, 9-term coefficient set.
const LANCZOS_G: f64 = 7.0;
const LANCZOS_C: [f64; 9] = [
    0.99999999999980993,
    676.5203681218851,
    -1259.1392167224028,
    771.32342877765313,
    -176.61502916214059,
    12.507343278686905,
    -0.13857109526572012,
    9.9843695780195716e-6,
    1.5056327351493116e-7,
];

/// Principal branch of ln Gamma(z) for Re(z) > 0.
///
/// Arguments with small real part are shifted up by the recurrence
/// ln Gamma(z) = ln Gamma(z+1) - ln z before the kernel is applied; the
/// subtracted logarithms are principal and never cross the cut because the
/// argument stays in the right half plane.
pub fn ln_gamma(mut z: Complex64) -> Complex64 {
    debug_assert!(z.re > 0.0, "ln_gamma needs Re(z) > 0, got {z}");
    let mut shift = Complex64::new(0.0, 0.0);
    while z.re < 2.0 {
        shift -= z.ln();
        z += 1.0;
    }
    let zm1 = z - 1.0;
    let mut acc = Complex64::new(LANCZOS_C[0], 0.0);
    for (i, &c) in LANCZOS_C.iter().enumerate().skip(1) {
        acc += c / (zm1 + i as f64);
    }
    let t = zm1 + LANCZOS_G + 0.5;
    let half_ln_2pi = 0.5 * crate::constants::LN_2PI;
    half_ln_2pi + (zm1 + 0.5) * t.ln() - t + acc.ln() + shift
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn real_axis_factorials() {
        for n in 1..10u32 {
            let exact: f64 = (1..n).map(|k| (k as f64).ln()).sum();
            let got = ln_gamma(Complex64::new(n as f64, 0.0));
            assert!((got.re - exact).abs() < 1e-12, "n={n}");
            assert!(got.im.abs() < 1e-13);
        }
    }

    #[test]
    fn half_integer_value() {
        // Gamma(1/2) = sqrt(pi)
        let got = ln_gamma(Complex64::new(0.5, 0.0));
        let exact = 0.5 * std::f64::consts::PI.ln();
        assert!((got.re - exact).abs() < 1e-13);
    }

    #[test]
    fn recurrence_consistency_complex() {
        // ln Gamma(z+1) = ln Gamma(z) + ln z at a complex point.
        let z = Complex64::new(0.25, 8.0);
        let lhs = ln_gamma(z + 1.0);
        let rhs = ln_gamma(z) + z.ln();
        assert!((lhs - rhs).norm() < 1e-11);
    }
}
