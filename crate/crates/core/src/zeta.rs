//! Euler-Maclaurin evaluation of zeta(sigma + it).
//!
//! The workhorse for sigma >= 1/2 and desk-scale heights (t up to ~1e5).
//! Truncation length and the number of Bernoulli correction terms are chosen
//! from the requested absolute tolerance, with the rigorous remainder factor
//! |s + 2K + 1| / (sigma + 2K + 1) applied to the first omitted term.

use num_complex::Complex64;

use crate::constants::BERN2K_OVER_FACT;
use crate::error::{Error, Result};

const MAX_BERNOULLI_TERMS: usize = 28;
const MAX_TRUNCATION: usize = 1 << 23;

/// zeta(sigma + it) to the default precision target (1e-10 absolute).
pub fn zeta_em(sigma: f64, t: f64) -> Result<Complex64> {
    zeta_em_with(sigma, t, crate::constants::Constants::default().precision_target)
}

/// zeta(sigma + it) to an explicit absolute tolerance.
///
/// Negative t is served by reflection: zeta(conj s) = conj zeta(s).
pub fn zeta_em_with(sigma: f64, t: f64, target: f64) -> Result<Complex64> {
    if t < 0.0 {
        return Ok(zeta_em_with(sigma, -t, target)?.conj());
    }
    if sigma < 0.5 {
        return Err(Error::Domain(format!(
            "zeta_em needs sigma >= 0.5, got {sigma}"
        )));
    }
    if sigma == 1.0 && t == 0.0 {
        return Err(Error::PoleAtOne);
    }

    let s = Complex64::new(sigma, t);
    // Euler-Maclaurin enters its asymptotic regime once the cutoff exceeds
    // |t| / 2pi; a factor-two margin makes each Bernoulli term shrink by
    // roughly ((sigma + 2k) / 2t)^2.
    let mut n = ((t / std::f64::consts::PI).ceil() as usize).max(16);
    let mut best_bound = f64::INFINITY;
    while n <= MAX_TRUNCATION {
        if let Some((value, bound)) = attempt(s, sigma, t, n, target) {
            if bound <= target {
                return Ok(value);
            }
            best_bound = best_bound.min(bound);
        }
        n *= 2;
    }
    Err(Error::PrecisionUnreachable {
        target,
        best: best_bound,
    })
}

/// One Euler-Maclaurin pass at truncation length n. Returns the value and
/// the rigorous remainder bound, or None if the correction series failed to
/// start decreasing (cutoff too small).
fn attempt(s: Complex64, sigma: f64, t: f64, n: usize, target: f64) -> Option<(Complex64, f64)> {
    let nf = n as f64;
    let mut sum = Complex64::new(0.0, 0.0);
    for k in 1..n {
        let kf = k as f64;
        let ln_k = kf.ln();
        let (im, re) = (-t * ln_k).sin_cos();
        let mag = (-sigma * ln_k).exp();
        sum += Complex64::new(mag * re, mag * im);
    }
    let ln_n = nf.ln();
    let (im, re) = (-t * ln_n).sin_cos();
    let n_pow_minus_s = Complex64::new(re, im) * (-sigma * ln_n).exp();

    // N^{1-s}/(s-1) + N^{-s}/2
    let mut value = sum + n_pow_minus_s * nf / (s - 1.0) + n_pow_minus_s * 0.5;

    // Correction terms T_k = B_{2k}/(2k)! * N^{1-s-2k} * prod_{j=0}^{2k-2}(s+j).
    let n_inv_sq = 1.0 / (nf * nf);
    let mut poch = s; // product of (s + j) up to the current order
    let mut n_factor = n_pow_minus_s / nf; // N^{-s-2k+1} at k = 1
    let mut prev_mag = f64::INFINITY;
    for k in 1..=MAX_BERNOULLI_TERMS {
        let term = poch * n_factor * BERN2K_OVER_FACT[k];
        value += term;

        // Remainder bound: first omitted term times |s+2K+1|/(sigma+2K+1).
        let next_poch = poch * (s + (2 * k - 1) as f64) * (s + (2 * k) as f64);
        let next_term_mag =
            (next_poch * n_factor * n_inv_sq * BERN2K_OVER_FACT[k + 1]).norm();
        let two_k1 = (2 * k + 1) as f64;
        let factor = (s + two_k1).norm() / (sigma + two_k1);
        let bound = next_term_mag * factor;
        if bound <= target {
            return Some((value, bound));
        }
        if next_term_mag > prev_mag {
            // asymptotic series turned; a larger cutoff is needed
            return None;
        }
        prev_mag = next_term_mag;
        poch = next_poch;
        n_factor *= n_inv_sq;
    }
    None
}
