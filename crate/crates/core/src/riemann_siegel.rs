//! Riemann-Siegel theta and the Hardy Z function.
//!
//! Z(t) = exp(i theta(t)) zeta(1/2 + it) is real for real t and |Z| = |zeta|
//! on the critical line. Below `T_SWITCH` the value comes straight from the
//! Euler-Maclaurin zeta (cheap there, and exact to the precision target);
//! above it the Riemann-Siegel main sum plus correction terms C_0..C_4 take
//! over. The correction tables live in const_table/ and reproduce the
//! arbitrary-precision oracle to ~3e-11 everywhere above t = 200.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::zeta::zeta_em;

/// Crossover between the Euler-Maclaurin route and the Riemann-Siegel
/// expansion. The five-term expansion is only trusted above t = 200 (where
/// the generated tables were validated); Euler-Maclaurin needs just a few
/// dozen terms below this height, so the crossover is placed with margin.
pub const T_SWITCH: f64 = 250.0;

/// Below this height theta comes from the exact log-Gamma expression; above
/// it the asymptotic series is already past double precision.
const THETA_ASYM_SWITCH: f64 = 40.0;

/// Chebyshev coefficients (in 2p - 1) of the correction terms C_0..C_4.
const RS_CHEB: (&[f64], &[f64], &[f64], &[f64], &[f64]) =
    include!("../const_table/rs_correction_cheb.rs");

/// Riemann-Siegel theta: the phase making exp(i theta) zeta(1/2+it) real.
pub fn rs_theta(t: f64) -> Result<f64> {
    if t <= 0.0 {
        return Err(Error::Domain(format!("rs_theta needs t > 0, got {t}")));
    }
    Ok(theta_unchecked(t))
}

pub(crate) fn theta_unchecked(t: f64) -> f64 {
    if t < THETA_ASYM_SWITCH {
        let lg = crate::gamma::ln_gamma(Complex64::new(0.25, 0.5 * t));
        lg.im - 0.5 * t * std::f64::consts::PI.ln()
    } else {
        let t2 = t * t;
        t / 2.0 * ((t / (2.0 * std::f64::consts::PI)).ln() - 1.0)
            - std::f64::consts::FRAC_PI_8
            + 1.0 / (48.0 * t)
            + 7.0 / (5760.0 * t * t2)
            + 31.0 / (80640.0 * t * t2 * t2)
            + 127.0 / (430080.0 * t * t2 * t2 * t2)
    }
}

fn clenshaw(coeffs: &[f64], x: f64) -> f64 {
    let mut b0 = 0.0;
    let mut b1 = 0.0;
    for &c in coeffs.iter().skip(1).rev() {
        let next = 2.0 * x * b0 - b1 + c;
        b1 = b0;
        b0 = next;
    }
    x * b0 - b1 + coeffs[0]
}

/// Hardy Z at t >= 0. |Z(t)| = |zeta(1/2 + it)| up to the evaluation error
/// stated per route (<= 1e-10 below the switch, ~3e-11 above).
pub fn hardy_z(t: f64) -> f64 {
    debug_assert!(t >= 0.0, "hardy_z needs t >= 0, got {t}");
    if t < T_SWITCH {
        let z = zeta_em(0.5, t).expect("zeta_em on the critical line");
        let theta = theta_unchecked(t.max(f64::MIN_POSITIVE));
        (Complex64::from_polar(1.0, theta) * z).re
    } else {
        riemann_siegel_z(t)
    }
}

/// Z(t)^2, the integrand of every critical-line moment here.
pub fn z_squared(t: f64) -> f64 {
    let z = hardy_z(t);
    z * z
}

fn riemann_siegel_z(t: f64) -> f64 {
    let a = (t / (2.0 * std::f64::consts::PI)).sqrt();
    let nu = a.floor();
    let p = a - nu;
    let theta = theta_unchecked(t);

    let mut main = 0.0;
    let mut n = 1.0f64;
    while n <= nu {
        main += (theta - t * n.ln()).cos() / n.sqrt();
        n += 1.0;
    }

    let x = 2.0 * p - 1.0;
    let a_inv = 1.0 / a;
    let mut corr = 0.0;
    let mut scale = 1.0;
    for table in [RS_CHEB.0, RS_CHEB.1, RS_CHEB.2, RS_CHEB.3, RS_CHEB.4] {
        corr += clenshaw(table, x) * scale;
        scale *= a_inv;
    }
    let sign = if (nu as i64) % 2 == 1 { 1.0 } else { -1.0 };
    2.0 * main + sign * corr / a.sqrt()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn theta_rejects_nonpositive() {
        assert!(rs_theta(0.0).is_err());
        assert!(rs_theta(-3.0).is_err());
    }

    #[test]
    fn theta_routes_agree_at_crossover() {
        // log-Gamma route vs asymptotic series around the interior switch
        for t in [35.0, 39.9, 40.1, 45.0, 80.0] {
            let lg = {
                let g = crate::gamma::ln_gamma(Complex64::new(0.25, 0.5 * t));
                g.im - 0.5 * t * std::f64::consts::PI.ln()
            };
            let asym = {
                let t2 = t * t;
                t / 2.0 * ((t / (2.0 * std::f64::consts::PI)).ln() - 1.0)
                    - std::f64::consts::FRAC_PI_8
                    + 1.0 / (48.0 * t)
                    + 7.0 / (5760.0 * t * t2)
                    + 31.0 / (80640.0 * t * t2 * t2)
                    + 127.0 / (430080.0 * t * t2 * t2 * t2)
            };
            assert!((lg - asym).abs() < 1e-11, "t={t}: {lg} vs {asym}");
        }
    }

    #[test]
    fn theta_has_minimum_near_6_29() {
        let tm = 6.289836;
        assert!(theta_unchecked(tm) < theta_unchecked(tm - 0.05));
        assert!(theta_unchecked(tm) < theta_unchecked(tm + 0.05));
        // increasing beyond t = 10
        let mut prev = theta_unchecked(10.0);
        for i in 1..50 {
            let cur = theta_unchecked(10.0 + i as f64);
            assert!(cur > prev);
            prev = cur;
        }
    }

    #[test]
    fn rotated_zeta_is_real_on_critical_line() {
        // exp(i theta) zeta(1/2 + it) has negligible imaginary part
        for t in [14.0, 50.0, 123.0, 249.0] {
            let z = zeta_em(0.5, t).unwrap();
            let rot = Complex64::from_polar(1.0, theta_unchecked(t)) * z;
            assert!(rot.im.abs() < 1e-8, "t={t}: im={}", rot.im);
        }
    }

    #[test]
    fn z_vanishes_at_first_zero() {
        assert!(hardy_z(14.1347251417).abs() < 1e-6);
    }

    #[test]
    fn z_at_origin_is_zeta_half() {
        assert!((hardy_z(0.0).abs() - 1.4603545088).abs() < 1e-7);
    }

    #[test]
    fn routes_agree_across_switch() {
        // Euler-Maclaurin route vs Riemann-Siegel route straddling T_SWITCH
        for t in [251.0, 300.0, 411.3, 997.0] {
            let rs = riemann_siegel_z(t);
            let em = {
                let z = zeta_em(0.5, t).unwrap();
                (Complex64::from_polar(1.0, theta_unchecked(t)) * z).re
            };
            assert!((rs - em).abs() < 5e-10, "t={t}: {rs} vs {em}");
        }
    }
}
