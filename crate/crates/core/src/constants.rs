//! Pinned numeric constants.
//!
//! Everything downstream (transfer function, functional substitutions,
//! asymptotic leading terms) pulls its constants from here, so the whole
//! pipeline agrees on one value of Euler's constant.

/// Euler-Mascheroni constant.
pub const EULER: f64 = 0.5772156649015328606;

/// ln(2 pi).
pub const LN_2PI: f64 = 1.8378770664093454836;

/// zeta(2) = pi^2 / 6.
pub const ZETA_2: f64 = 1.6449340668482264365;

/// zeta(4) = pi^4 / 90.
pub const ZETA_4: f64 = 1.0823232337111381916;

/// zeta(8) = pi^8 / 9450.
pub const ZETA_8: f64 = 1.0040773561979443394;

/// B_{2k} / (2k)! for k = 0..=30, feeding the Euler-Maclaurin tail.
pub(crate) const BERN2K_OVER_FACT: [f64; 31] =
    include!("../const_table/bernoulli_over_factorial.rs");

/// Scalar evaluation constants grouped per the artifact configuration.
#[derive(Debug, Clone, Copy)]
pub struct Constants {
    /// Euler's constant c.
    pub euler_c: f64,
    /// 1 - c, the slope of the critical-line increment law.
    pub one_minus_c: f64,
    /// ln(2 pi).
    pub ln_two_pi: f64,
    /// Absolute tolerance for scalar special-function evaluations.
    pub precision_target: f64,
}

impl Default for Constants {
    fn default() -> Self {
        Self {
            euler_c: EULER,
            one_minus_c: 1.0 - EULER,
            ln_two_pi: LN_2PI,
            precision_target: 1e-10,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn euler_in_published_interval() {
        assert!(EULER > 0.577215 && EULER < 0.577216);
    }

    #[test]
    fn one_minus_c_is_exact_arithmetic() {
        let c = Constants::default();
        assert_eq!(c.one_minus_c, 1.0 - c.euler_c);
    }

    #[test]
    fn zeta_even_values_match_pi_powers() {
        let pi = std::f64::consts::PI;
        assert!((ZETA_2 - pi * pi / 6.0).abs() < 1e-15);
        assert!((ZETA_4 - pi.powi(4) / 90.0).abs() < 1e-15);
        assert!((ZETA_8 - pi.powi(8) / 9450.0).abs() < 1e-15);
    }

    // The table values must agree with the independent identity
    // B_{2k}/(2k)! = (-1)^{k+1} * 2 * zeta(2k) / (2 pi)^{2k},
    // with zeta(2k) summed directly.
    #[test]
    fn bernoulli_table_matches_zeta_identity() {
        for k in 1..=30usize {
            let two_k = (2 * k) as i32;
            let zeta_2k: f64 = (1..200).map(|n| (n as f64).powi(-two_k)).sum();
            let expected = if k % 2 == 1 { 2.0 } else { -2.0 } * zeta_2k
                / (2.0 * std::f64::consts::PI).powi(two_k);
            let got = BERN2K_OVER_FACT[k];
            assert!(
                (got - expected).abs() <= 1e-15 * expected.abs(),
                "k={k}: table {got:e} vs identity {expected:e}"
            );
        }
    }
}
