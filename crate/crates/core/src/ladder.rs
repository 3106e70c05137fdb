//! Operational ladder: J(T), the transfer function V, phi1 and its inverse,
//! reverse-iteration chains, and the partition diagnostics.
//!
//! phi1 is defined operationally as the solution of V(phi1(T)) = J(T) with
//! V(y) = y ln y + (c - ln 2pi) y. This model reproduces the spacing law
//! U - T ~ (1-c) T / ln T, the almost-linear segment increments, and the
//! cross-mode agreement the rest of the pipeline relies on; it is a model of
//! the true slowly-varying ladder, not a reconstruction of it.

use serde::{Deserialize, Serialize};

use crate::constants::{EULER, LN_2PI};
use crate::error::{Error, Result};
use crate::moments::MomentEngine;
use crate::quad::MomentIntegralResult;

/// Below this the transfer function is not safely monotone; kept well above
/// its actual turning point.
pub const Y_MIN: f64 = 10.0;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum LadderMode {
    /// J(T) by actual quadrature of Z^2.
    Quadrature,
    /// J(T) by its asymptotic main terms (fast; default for functionals).
    Asymptotic,
}

impl std::fmt::Display for LadderMode {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            LadderMode::Quadrature => write!(f, "quadrature"),
            LadderMode::Asymptotic => write!(f, "asymptotic"),
        }
    }
}

#[derive(Debug, Clone, Copy, Serialize, Deserialize)]
pub struct LadderConfig {
    pub mode: LadderMode,
    /// Absolute quadrature tolerance for J in quadrature mode.
    pub j_tol: f64,
    /// Absolute tolerance for ladder root-finds.
    pub root_tol: f64,
}

impl Default for LadderConfig {
    fn default() -> Self {
        Self {
            mode: LadderMode::Asymptotic,
            j_tol: 0.05,
            root_tol: 1e-9,
        }
    }
}

impl LadderConfig {
    pub fn quadrature() -> Self {
        Self {
            mode: LadderMode::Quadrature,
            ..Self::default()
        }
    }

    fn validate(&self) -> Result<()> {
        if self.j_tol > 0.0 && self.root_tol > 0.0 {
            Ok(())
        } else {
            Err(Error::Domain(format!(
                "ladder tolerances must be positive: j_tol={}, root_tol={}",
                self.j_tol, self.root_tol
            )))
        }
    }
}

/// Reverse-iteration chain T = T^0 < T^1 < ... < T^k.
#[derive(Debug, Clone)]
pub struct LadderSequence {
    pub base: f64,
    pub iterates: Vec<f64>,
    pub increments: Vec<f64>,
    pub segment_integrals: Option<Vec<MomentIntegralResult>>,
}

impl LadderSequence {
    pub fn k(&self) -> usize {
        self.iterates.len() - 1
    }
}

/// Partition diagnostics over a chain.
#[derive(Debug, Clone, Serialize)]
pub struct PartitionReport {
    /// (T^{r+1} - T^r) / (T^r - T^{r-1})
    pub increment_ratios: Vec<f64>,
    /// segment integral ratios, consecutive
    pub segment_ratios: Vec<f64>,
    /// segment integral r over (1-c) T^{r-1}
    pub segment_over_leading: Vec<f64>,
    pub telescoping: Option<TelescopingCheck>,
}

#[derive(Debug, Clone, Copy, Serialize)]
pub struct TelescopingCheck {
    pub sum_of_segments: f64,
    pub whole_integral: f64,
    pub difference: f64,
    pub error_budget: f64,
}

/// Asymptotic Hardy-Littlewood integral: T ln T + (2c - 1 - ln 2pi) T.
pub fn j_hat(t: f64) -> f64 {
    if t == 0.0 {
        0.0
    } else {
        t * (t.ln() + 2.0 * EULER - 1.0 - LN_2PI)
    }
}

/// Transfer function V(y) = y ln y + (c - ln 2pi) y, strictly increasing on
/// the working domain y > Y_MIN.
pub fn transfer_v(y: f64) -> Result<f64> {
    if y <= Y_MIN {
        return Err(Error::Domain(format!(
            "transfer_v needs y > {Y_MIN}, got {y}"
        )));
    }
    Ok(y * (y.ln() + EULER - LN_2PI))
}

/// V'(y) = ln y + 1 + c - ln 2pi.
pub fn transfer_v_deriv(y: f64) -> f64 {
    y.ln() + 1.0 + EULER - LN_2PI
}

pub struct Ladder<'a> {
    engine: &'a MomentEngine,
    cfg: LadderConfig,
}

impl<'a> Ladder<'a> {
    pub fn new(engine: &'a MomentEngine, cfg: LadderConfig) -> Result<Self> {
        cfg.validate()?;
        Ok(Self { engine, cfg })
    }

    pub fn config(&self) -> LadderConfig {
        self.cfg
    }

    /// J(T) = int_0^T |zeta(1/2+it)|^2 dt in the configured mode.
    pub fn j_integral(&self, t: f64) -> Result<f64> {
        if t < 0.0 {
            return Err(Error::Domain(format!("j_integral needs T >= 0, got {t}")));
        }
        match self.cfg.mode {
            LadderMode::Asymptotic => Ok(j_hat(t)),
            LadderMode::Quadrature => Ok(self.engine.crit_integral(0.0, t, self.cfg.j_tol)?.value),
        }
    }

    /// The unique y with V(y) = J(T).
    pub fn phi1(&self, t: f64) -> Result<f64> {
        let target = self.j_integral(t)?;
        if target <= transfer_v(Y_MIN * 1.001)? {
            return Err(Error::Domain(format!(
                "phi1: J({t}) = {target} not above V(y_min)"
            )));
        }
        let mut hi = t.max(Y_MIN * 2.0);
        let mut grow = 0;
        while transfer_v(hi)? < target {
            hi *= 1.25;
            grow += 1;
            if grow > 60 {
                return Err(Error::BracketFailure {
                    context: format!("phi1({t})"),
                    lo: Y_MIN,
                    hi,
                });
            }
        }
        solve_monotone(
            &|y| Ok(transfer_v(y)? - target),
            &|y| Ok(transfer_v_deriv(y)),
            Y_MIN * 1.001,
            hi,
            self.cfg.root_tol,
            &format!("phi1({t})"),
        )
    }

    /// The unique U > T with J(U) = V(T), i.e. phi1(U) = T.
    pub fn phi1_inv(&self, t: f64) -> Result<f64> {
        let target = transfer_v(t)?;
        // Expected increment ~ (1-c) T / ln T; bracket with margin and grow
        // geometrically if J has not caught up.
        let mut inc = 3.0 * (1.0 - EULER) * t / t.ln();
        let mut hi = t + inc;
        let mut grow = 0;
        while self.j_value_minus(hi, target)? < 0.0 {
            inc *= 1.6;
            hi = t + inc;
            grow += 1;
            if grow > 60 {
                return Err(Error::BracketFailure {
                    context: format!("phi1_inv({t})"),
                    lo: t,
                    hi,
                });
            }
        }
        let f = |u: f64| self.j_value_minus(u, target);
        // J' = Z^2 vanishes at zeros, so the solver falls back to bisection
        // whenever a derivative step misbehaves.
        let df = |u: f64| -> Result<f64> {
            Ok(match self.cfg.mode {
                LadderMode::Asymptotic => u.ln() + 2.0 * EULER - LN_2PI,
                LadderMode::Quadrature => crate::riemann_siegel::z_squared(u),
            })
        };
        solve_monotone(&f, &df, t, hi, self.cfg.root_tol, &format!("phi1_inv({t})"))
    }

    fn j_value_minus(&self, u: f64, target: f64) -> Result<f64> {
        Ok(self.j_integral(u)? - target)
    }

    /// The chain [T, phi1_inv(T), ..., iterated k times].
    pub fn reverse_iterates(&self, t: f64, k: usize) -> Result<LadderSequence> {
        if k > 20 {
            return Err(Error::Domain(format!(
                "reverse_iterates supports k <= 20 at desk scale, got {k}"
            )));
        }
        let mut iterates = vec![t];
        for _ in 0..k {
            let prev = *iterates.last().unwrap();
            let next = self.phi1_inv(prev)?;
            iterates.push(next);
        }
        let increments = iterates.windows(2).map(|w| w[1] - w[0]).collect();
        Ok(LadderSequence {
            base: t,
            iterates,
            increments,
            segment_integrals: None,
        })
    }

    /// Fill int_{T^{r-1}}^{T^r} Z^2 for every segment, by real quadrature.
    pub fn fill_segment_integrals(&self, seq: &mut LadderSequence) -> Result<()> {
        let mut out = Vec::with_capacity(seq.k());
        for w in seq.iterates.windows(2) {
            out.push(self.engine.crit_integral(w[0], w[1], self.cfg.j_tol)?);
        }
        seq.segment_integrals = Some(out);
        Ok(())
    }

    /// Increment/segment diagnostics plus the telescoping identity check.
    pub fn partition_report(&self, seq: &LadderSequence) -> Result<PartitionReport> {
        if seq.k() < 2 {
            return Err(Error::Domain(format!(
                "partition_report needs k >= 2, got {}",
                seq.k()
            )));
        }
        let increment_ratios = seq
            .increments
            .windows(2)
            .map(|w| w[1] / w[0])
            .collect::<Vec<_>>();

        let mut segment_ratios = Vec::new();
        let mut segment_over_leading = Vec::new();
        let mut telescoping = None;
        if let Some(segs) = &seq.segment_integrals {
            segment_ratios = segs.windows(2).map(|w| w[1].value / w[0].value).collect();
            segment_over_leading = segs
                .iter()
                .zip(&seq.iterates)
                .map(|(s, t_prev)| s.value / ((1.0 - EULER) * t_prev))
                .collect();
            let whole = self.engine.crit_integral(
                seq.iterates[0],
                *seq.iterates.last().unwrap(),
                self.cfg.j_tol,
            )?;
            let sum: f64 = segs.iter().map(|s| s.value).sum();
            let budget: f64 =
                whole.abs_error_estimate + segs.iter().map(|s| s.abs_error_estimate).sum::<f64>();
            telescoping = Some(TelescopingCheck {
                sum_of_segments: sum,
                whole_integral: whole.value,
                difference: sum - whole.value,
                error_budget: budget,
            });
        }
        Ok(PartitionReport {
            increment_ratios,
            segment_ratios,
            segment_over_leading,
            telescoping,
        })
    }
}

/// Safeguarded Newton on an increasing function with a maintained bracket:
/// any step that leaves the bracket, or a vanishing derivative, falls back
/// to bisection. f(lo) <= 0 <= f(hi) is required on entry.
fn solve_monotone(
    f: &dyn Fn(f64) -> Result<f64>,
    df: &dyn Fn(f64) -> Result<f64>,
    mut lo: f64,
    mut hi: f64,
    xtol: f64,
    context: &str,
) -> Result<f64> {
    let flo = f(lo)?;
    let fhi = f(hi)?;
    if flo > 0.0 || fhi < 0.0 {
        return Err(Error::BracketFailure {
            context: context.to_string(),
            lo,
            hi,
        });
    }
    if flo == 0.0 {
        return Ok(lo);
    }
    let mut x = 0.5 * (lo + hi);
    for _ in 0..220 {
        let fx = f(x)?;
        if fx <= 0.0 {
            lo = x;
        } else {
            hi = x;
        }
        if hi - lo <= xtol {
            return Ok(0.5 * (lo + hi));
        }
        let d = df(x)?;
        let newton = x - fx / d;
        x = if d > 0.0 && newton > lo && newton < hi && newton.is_finite() {
            newton
        } else {
            0.5 * (lo + hi)
        };
        // keep strictly inside to guarantee bracket progress
        if x <= lo || x >= hi {
            x = 0.5 * (lo + hi);
        }
    }
    Err(Error::BracketFailure {
        context: format!("{context}: no convergence"),
        lo,
        hi,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn asymptotic() -> (MomentEngine, LadderConfig) {
        (MomentEngine::default(), LadderConfig::default())
    }

    #[test]
    fn j_hat_examples() {
        assert_eq!(j_hat(0.0), 0.0);
        // J_hat(1e4) = 1e4 (ln 1e4 - 1.68345...)
        let v = j_hat(1e4);
        assert!((v - 7.5269e4).abs() < 10.0, "{v}");
    }

    #[test]
    fn transfer_v_example_and_monotonicity() {
        let v = transfer_v(1e4).unwrap();
        assert!((v - 7.950e4).abs() < 10.0, "{v}");
        assert!(transfer_v(9.0).is_err());
        let mut prev = transfer_v(11.0).unwrap();
        for i in 1..200 {
            let y = 11.0 + i as f64 * 137.0;
            let cur = transfer_v(y).unwrap();
            assert!(cur > prev);
            prev = cur;
        }
    }

    #[test]
    fn transfer_v_derivative_matches_finite_differences() {
        for y in [12.0, 100.0, 5000.0] {
            let h = 1e-5 * y;
            let fd = (transfer_v(y + h).unwrap() - transfer_v(y - h).unwrap()) / (2.0 * h);
            assert!((fd - transfer_v_deriv(y)).abs() < 1e-6 * transfer_v_deriv(y).abs());
        }
    }

    #[test]
    fn phi1_inv_asymptotic_pinned() {
        let (eng, cfg) = asymptotic();
        let ladder = Ladder::new(&eng, cfg).unwrap();
        let u = ladder.phi1_inv(1e4).unwrap();
        // bisection oracle on J_hat(U) = V(1e4), frozen
        assert!((u - 10494.41).abs() < 0.05, "{u}");
    }

    #[test]
    fn phi1_asymptotic_pinned() {
        let (eng, cfg) = asymptotic();
        let ladder = Ladder::new(&eng, cfg).unwrap();
        let y = ladder.phi1(1e4).unwrap();
        assert!((y - 9530.0).abs() < 5.0, "{y}");
        assert!(y < 1e4);
    }

    #[test]
    fn round_trip_inverse() {
        let (eng, cfg) = asymptotic();
        let ladder = Ladder::new(&eng, cfg).unwrap();
        for t in [500.0, 2000.0, 1e4] {
            let u = ladder.phi1_inv(t).unwrap();
            let back = ladder.phi1(u).unwrap();
            assert!((back - t).abs() <= 10.0 * cfg.root_tol, "t={t}: back={back}");
        }
    }

    #[test]
    fn spacing_law_at_1e4() {
        let (eng, cfg) = asymptotic();
        let ladder = Ladder::new(&eng, cfg).unwrap();
        let t = 1e4;
        let u = ladder.phi1_inv(t).unwrap();
        let expected = (1.0 - EULER) * t / t.ln();
        let ratio = (u - t) / expected;
        assert!((0.9..=1.2).contains(&ratio), "ratio {ratio}");
        // and T - phi1(T) likewise
        let y = ladder.phi1(t).unwrap();
        let ratio2 = (t - y) / expected;
        assert!((0.85..=1.25).contains(&ratio2), "ratio2 {ratio2}");
    }

    #[test]
    fn reverse_iterates_strictly_increasing() {
        let (eng, cfg) = asymptotic();
        let ladder = Ladder::new(&eng, cfg).unwrap();
        let seq = ladder.reverse_iterates(1e4, 5).unwrap();
        assert_eq!(seq.iterates.len(), 6);
        for w in seq.iterates.windows(2) {
            assert!(w[0] < w[1]);
        }
        // all iterates ~ T
        let ratio = seq.iterates[5] / 1e4;
        assert!((1.0..=1.1).contains(&ratio), "{ratio}");
        // k = 1 reduces to [T, phi1_inv(T)]
        let seq1 = ladder.reverse_iterates(1e4, 1).unwrap();
        assert_eq!(seq1.iterates[1], ladder.phi1_inv(1e4).unwrap());
    }

    #[test]
    fn k_zero_is_single_row() {
        let (eng, cfg) = asymptotic();
        let ladder = Ladder::new(&eng, cfg).unwrap();
        let seq = ladder.reverse_iterates(1e4, 0).unwrap();
        assert_eq!(seq.iterates, vec![1e4]);
        assert!(seq.increments.is_empty());
    }

    #[test]
    fn partition_needs_k_at_least_two() {
        let (eng, cfg) = asymptotic();
        let ladder = Ladder::new(&eng, cfg).unwrap();
        let seq = ladder.reverse_iterates(1e4, 1).unwrap();
        assert!(ladder.partition_report(&seq).is_err());
    }

    #[test]
    fn increment_ratios_near_one_at_1e4() {
        let (eng, cfg) = asymptotic();
        let ladder = Ladder::new(&eng, cfg).unwrap();
        let seq = ladder.reverse_iterates(1e4, 5).unwrap();
        let report = ladder.partition_report(&seq).unwrap();
        for r in &report.increment_ratios {
            assert!((0.95..=1.05).contains(r), "ratio {r}");
        }
    }

    #[test]
    fn invalid_config_rejected() {
        let eng = MomentEngine::default();
        let bad = LadderConfig {
            j_tol: 0.0,
            ..Default::default()
        };
        assert!(Ladder::new(&eng, bad).is_err());
    }
}
