//! The argument function S(t) = pi^-1 arg zeta(1/2 + it) and its integral.
//!
//! Two routes exist and are cross-validated:
//!
//! * [`s_of_t`] tracks the argument continuously along sigma: 2+it -> 1/2+it,
//!   starting from the principal argument at sigma = 2 (where Re zeta > 0
//!   is guaranteed by the series bound). This is the defining route.
//! * Inside an interval between consecutive zero ordinates the counting
//!   identity N(t) = theta(t)/pi + 1 + S(t) pins S(t) = N - 1 - theta(t)/pi
//!   exactly, so the integral S1 is assembled from per-interval quadratures
//!   of that closed expression. The identity itself is what the counting
//!   tests verify against the continuation route.

use crate::error::{Error, Result};
use crate::quad::integrate_adaptive;
use crate::riemann_siegel::{hardy_z, theta_unchecked};
use crate::zeros;
use crate::zeta::zeta_em;

const PI: f64 = std::f64::consts::PI;

/// |Z(t)| below this is treated as "on a zero ordinate".
const ON_ZERO_TOL: f64 = 1e-7;

/// S(t) by continuous argument variation. Errors when t sits on (or
/// numerically indistinguishably close to) a zero ordinate.
pub fn s_of_t(t: f64) -> Result<f64> {
    if t <= 0.0 {
        return Err(Error::Domain(format!("s_of_t needs t > 0, got {t}")));
    }
    if hardy_z(t).abs() < ON_ZERO_TOL {
        return Err(Error::OnZeroOrdinate { t });
    }

    let z0 = zeta_em(2.0, t)?;
    debug_assert!(z0.re > 0.0, "Re zeta(2+it) must be positive");
    let mut total = z0.im.atan2(z0.re);
    let mut sigma = 2.0;
    let mut cur = z0;
    let mut h = 0.25;
    while sigma > 0.5 {
        let next_sigma = (sigma - h).max(0.5);
        let next = zeta_em(next_sigma, t)?;
        let delta = (next / cur).arg();
        if delta.abs() >= PI / 2.0 {
            h /= 2.0;
            if h < 1e-7 {
                return Err(Error::ContinuationStepFailure { t, sigma });
            }
            continue;
        }
        total += delta;
        cur = next;
        sigma = next_sigma;
        h = (h * 1.6).min(0.25);
    }
    Ok(total / PI)
}

/// S on the interval between the (count)-th and (count+1)-th zero, from the
/// counting identity. Exact given a complete zero list.
pub(crate) fn s_identity(t: f64, count_below: usize) -> f64 {
    count_below as f64 - 1.0 - theta_unchecked(t) / PI
}

/// S1(t) = int_0^t S(u) du, quadrature split at every zero ordinate.
pub fn s1_of_t(t: f64) -> Result<f64> {
    if t < 0.0 {
        return Err(Error::Domain(format!("s1_of_t needs t >= 0, got {t}")));
    }
    if t == 0.0 {
        return Ok(0.0);
    }
    zeros::with_global(|table| {
        table.ensure(t)?;
        let mut engine = S1Engine::attach(table);
        engine.value(t)
    })
}

/// Per-interval prefix integrals of S, grown lazily over the shared zero
/// table. Holder of the expensive state behind `s1_of_t` and the S1 moment
/// integrals.
pub(crate) struct S1Engine<'a> {
    table: &'a mut zeros::ZeroTable,
}

impl<'a> S1Engine<'a> {
    pub(crate) fn attach(table: &'a mut zeros::ZeroTable) -> Self {
        Self { table }
    }

    /// S1 at t; the zero table must already cover t.
    pub(crate) fn value(&mut self, t: f64) -> Result<f64> {
        let idx = self.table.count_below(t);
        let prefix = self.prefix_through(idx)?;
        let start = if idx == 0 {
            0.0
        } else {
            self.table.ordinates()[idx - 1]
        };
        Ok(prefix + integrate_s_over(start, t, idx)?)
    }

    pub(crate) fn table(&self) -> &zeros::ZeroTable {
        self.table
    }

    /// Integral of S from 0 through the idx-th zero (cached cumulative).
    pub(crate) fn prefix_through(&mut self, idx: usize) -> Result<f64> {
        while self.table.s1_prefix.len() < idx {
            let j = self.table.s1_prefix.len(); // building entry for zero j+1
            let lo = if j == 0 {
                0.0
            } else {
                self.table.ordinates()[j - 1]
            };
            let hi = self.table.ordinates()[j];
            let prev = self.table.s1_prefix.last().copied().unwrap_or(0.0);
            let seg = integrate_s_over(lo, hi, j)?;
            self.table.s1_prefix.push(prev + seg);
        }
        Ok(if idx == 0 {
            0.0
        } else {
            self.table.s1_prefix[idx - 1]
        })
    }
}

/// Integral of S over [lo, hi] lying inside one inter-zero interval with
/// `count` zeros below it: S(u) = count - 1 - theta(u)/pi there.
pub(crate) fn integrate_s_over(lo: f64, hi: f64, count: usize) -> Result<f64> {
    if hi <= lo {
        return Ok(0.0);
    }
    let tol = 1e-8 * (hi - lo).max(0.05);
    let r = integrate_adaptive(
        |u| s_identity(u.max(f64::MIN_POSITIVE), count),
        lo,
        hi,
        tol,
        &[],
    )?;
    Ok(r.value)
}
