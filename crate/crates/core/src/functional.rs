//! The limit functionals: triple product, linear combination, Dirichlet
//! product, the Selberg-constant estimator, the Fermat scan, and the chain
//! comparison.
//!
//! Each functional rescales its integral bundle by a substitution chosen so
//! the limit is exactly the target x. The synthetic backend replaces every
//! integral by its proven leading term, which makes the algebra exact and
//! testable to rounding; the real backend runs the actual quadratures.
//!
//! The Selberg constant cbar(l) is never hardcoded: it is estimated from the
//! artifact's own moment integrals and threaded explicitly through the
//! functional parameters, so every run is reproducible from its config.

use rayon::prelude::*;
use serde::Serialize;

use crate::constants::EULER;
use crate::dirichlet::SeriesFamily;
use crate::divisor;
use crate::error::{Error, Result};
use crate::fermat::{FermatRational, ScanBounds};
use crate::ladder::{Ladder, LadderConfig, LadderMode, Y_MIN};
use crate::moments::{synthetic, MomentEngine};
use crate::quad::Backend;
use crate::zeta::zeta_em;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum FunctionalKind {
    Prod3,
    Lin3,
    Dprod,
    Divisor,
}

impl std::fmt::Display for FunctionalKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            FunctionalKind::Prod3 => write!(f, "prod3"),
            FunctionalKind::Lin3 => write!(f, "lin3"),
            FunctionalKind::Dprod => write!(f, "dprod"),
            FunctionalKind::Divisor => write!(f, "divisor"),
        }
    }
}

/// Everything that determines a functional run.
#[derive(Debug, Clone, Serialize)]
pub struct FunctionalParams {
    pub l: Option<u32>,
    pub sigma: Option<f64>,
    pub family: Option<String>,
    pub mode: LadderMode,
    pub backend: Backend,
    pub cbar: Option<f64>,
    pub tol: f64,
}

/// Finite-tau estimate of one limit functional.
#[derive(Debug, Clone, Serialize)]
pub struct FunctionalEstimate {
    pub kind: FunctionalKind,
    pub target_x: f64,
    pub tau: f64,
    pub estimate: f64,
    pub deviation: f64,
    pub params: FunctionalParams,
    pub note: Option<String>,
}

/// Empirical estimate of the Selberg constant cbar(l).
#[derive(Debug, Clone, Serialize)]
pub struct SelbergConstantEstimate {
    pub l: u32,
    /// (T, value/T) along the grid.
    pub estimates: Vec<(f64, f64)>,
    /// value/T at the largest grid point.
    pub adopted: f64,
    /// max pairwise relative spread across the grid.
    pub spread: f64,
}

/// cbar(l) from int_1^T |S1|^{2l} dt / T along an increasing T grid.
pub fn estimate_cbar(
    engine: &MomentEngine,
    l: u32,
    t_grid: &[f64],
) -> Result<SelbergConstantEstimate> {
    if t_grid.is_empty() {
        return Err(Error::Domain("estimate_cbar needs a nonempty grid".into()));
    }
    if t_grid.windows(2).any(|w| w[0] >= w[1]) {
        return Err(Error::Domain("estimate_cbar grid must be increasing".into()));
    }
    let mut estimates = Vec::with_capacity(t_grid.len());
    for &t in t_grid {
        if t <= 1.0 {
            return Err(Error::Domain(format!("cbar grid points must exceed 1, got {t}")));
        }
        let r = engine.s1_moment_integral(l, t, moment_tol(t))?;
        estimates.push((t, r.value / t));
    }
    let adopted = estimates.last().unwrap().1;
    let lo = estimates.iter().map(|e| e.1).fold(f64::INFINITY, f64::min);
    let hi = estimates.iter().map(|e| e.1).fold(f64::NEG_INFINITY, f64::max);
    let spread = (hi - lo) / adopted;
    if adopted <= 0.0 {
        return Err(Error::Domain("cbar estimate must be positive".into()));
    }
    Ok(SelbergConstantEstimate {
        l,
        estimates,
        adopted,
        spread,
    })
}

/// Default quadrature tolerance for a moment integral reaching T: loose
/// enough to ride the chunk cache, far below the trend scales under test.
fn moment_tol(t: f64) -> f64 {
    (1e-4 * (t + 1.0)).max(1e-3)
}

fn check_common(x: f64, tau: f64, l: u32, sigma: f64) -> Result<()> {
    if x <= 0.0 {
        return Err(Error::Domain(format!("functional needs x > 0, got {x}")));
    }
    if tau <= 0.0 {
        return Err(Error::Domain(format!("functional needs tau > 0, got {tau}")));
    }
    if !(1..=3).contains(&l) {
        return Err(Error::Domain(format!("l must be in 1..=3, got {l}")));
    }
    if sigma < 0.55 {
        return Err(Error::Domain(format!(
            "sigma must be >= 0.55 (eps = 0.05 band), got {sigma}"
        )));
    }
    Ok(())
}

/// (1/tau) { crit(X, X^1) * hl(sigma, X) * s1(l, X) }^{1/3} with
/// X = x tau / ((1-c) cbar(l) zeta(2 sigma))^{1/3}; tends to x.
#[allow(clippy::too_many_arguments)]
pub fn functional_prod3(
    engine: &MomentEngine,
    x: f64,
    l: u32,
    sigma: f64,
    tau: f64,
    cfg: LadderConfig,
    backend: Backend,
    cbar: f64,
) -> Result<FunctionalEstimate> {
    check_common(x, tau, l, sigma)?;
    let zeta_2s = zeta_em(2.0 * sigma, 0.0)?.re;
    let denom = ((1.0 - EULER) * cbar * zeta_2s).cbrt();
    let big_x = x * tau / denom;
    let params = FunctionalParams {
        l: Some(l),
        sigma: Some(sigma),
        family: None,
        mode: cfg.mode,
        backend,
        cbar: Some(cbar),
        tol: moment_tol(big_x),
    };
    let estimate = match backend {
        Backend::Synthetic => {
            let a = synthetic::crit_pair(big_x, big_x).value;
            let b = synthetic::hl_sigma_integral(zeta_2s, big_x).value;
            let c = synthetic::s1_moment_integral(cbar, big_x).value;
            (a * b * c).cbrt() / tau
        }
        Backend::Real => {
            ladder_domain_check(big_x)?;
            let ladder = Ladder::new(engine, cfg)?;
            let upper = ladder.phi1_inv(big_x)?;
            let a = engine.crit_integral(big_x, upper, moment_tol(big_x))?.value;
            let b = engine.hl_sigma_integral(sigma, big_x, moment_tol(big_x))?.value;
            let c = engine.s1_moment_integral(l, big_x, moment_tol(big_x))?.value;
            (a * b * c).cbrt() / tau
        }
    };
    Ok(FunctionalEstimate {
        kind: FunctionalKind::Prod3,
        target_x: x,
        tau,
        estimate,
        deviation: estimate - x,
        params,
        note: None,
    })
}

/// (1/tau) { crit(X, X^1)/(1-c) + hl(sigma, X)/zeta(2 sigma)
///          + s1(l, X)/cbar(l) } with X = x tau / 3; tends to x.
#[allow(clippy::too_many_arguments)]
pub fn functional_lin3(
    engine: &MomentEngine,
    x: f64,
    l: u32,
    sigma: f64,
    tau: f64,
    cfg: LadderConfig,
    backend: Backend,
    cbar: f64,
) -> Result<FunctionalEstimate> {
    check_common(x, tau, l, sigma)?;
    let zeta_2s = zeta_em(2.0 * sigma, 0.0)?.re;
    let big_x = x * tau / 3.0;
    let params = FunctionalParams {
        l: Some(l),
        sigma: Some(sigma),
        family: None,
        mode: cfg.mode,
        backend,
        cbar: Some(cbar),
        tol: moment_tol(big_x),
    };
    let estimate = match backend {
        Backend::Synthetic => {
            let a = synthetic::crit_pair(big_x, big_x).value / (1.0 - EULER);
            let b = synthetic::hl_sigma_integral(zeta_2s, big_x).value / zeta_2s;
            let c = synthetic::s1_moment_integral(cbar, big_x).value / cbar;
            (a + b + c) / tau
        }
        Backend::Real => {
            ladder_domain_check(big_x)?;
            let ladder = Ladder::new(engine, cfg)?;
            let upper = ladder.phi1_inv(big_x)?;
            let a = engine.crit_integral(big_x, upper, moment_tol(big_x))?.value / (1.0 - EULER);
            let b = engine.hl_sigma_integral(sigma, big_x, moment_tol(big_x))?.value / zeta_2s;
            let c = engine.s1_moment_integral(l, big_x, moment_tol(big_x))?.value / cbar;
            (a + b + c) / tau
        }
    };
    Ok(FunctionalEstimate {
        kind: FunctionalKind::Lin3,
        target_x: x,
        tau,
        estimate,
        deviation: estimate - x,
        params,
        note: None,
    })
}

/// (1/tau) prod_m { int_0^X |f_m|^2 }^{1/M} with
/// X = x tau / (prod F_m)^{1/M}; tends to x, no ladder involved.
pub fn functional_dprod(
    engine: &MomentEngine,
    x: f64,
    fam: &SeriesFamily,
    tau: f64,
    backend: Backend,
) -> Result<FunctionalEstimate> {
    let _ = engine; // dprod needs no moment engine; kept for call symmetry
    if x <= 0.0 || tau <= 0.0 {
        return Err(Error::Domain(format!(
            "functional needs x > 0 and tau > 0, got x = {x}, tau = {tau}"
        )));
    }
    let f_prod = fam.big_f_product()?;
    let geo = f_prod.powf(1.0 / fam.m() as f64);
    let big_x = x * tau / geo;
    let params = FunctionalParams {
        l: None,
        sigma: None,
        family: Some(fam.id()),
        mode: LadderMode::Asymptotic,
        backend,
        cbar: None,
        tol: 1e-4 * (big_x + 1.0),
    };
    let estimate = match backend {
        Backend::Synthetic => {
            // each member integral replaced by F_m X; geometric mean is geo * X
            let mut prod = 1.0f64;
            for s in &fam.members {
                prod *= (s.big_f()? * big_x).powf(1.0 / fam.m() as f64);
            }
            prod / tau
        }
        Backend::Real => fam.family_product_integral(big_x, 1e-4)? / tau,
    };
    Ok(FunctionalEstimate {
        kind: FunctionalKind::Dprod,
        target_x: x,
        tau,
        estimate,
        deviation: estimate - x,
        params,
        note: None,
    })
}

fn ladder_domain_check(big_x: f64) -> Result<()> {
    if big_x < 4.0 * Y_MIN {
        return Err(Error::Domain(format!(
            "upper limit X = {big_x} below the ladder working domain; increase tau"
        )));
    }
    Ok(())
}

/// One row of a Fermat scan report.
#[derive(Debug, Clone, Serialize)]
pub struct ScanRow {
    pub x: u64,
    pub y: u64,
    pub z: u64,
    pub n: u32,
    pub exact_value: f64,
    pub estimate: f64,
    pub estimate_dev_from_one: f64,
    pub exact_dev_from_one: f64,
}

#[derive(Debug, Clone, Copy, Serialize)]
pub struct ScanSummary {
    pub tuples_checked: u64,
    pub equalities_found: u64,
    /// closest exact approach to 1 seen in range
    pub min_exact_dev_from_one: f64,
    pub min_dev_tuple: (u64, u64, u64, u32),
}

/// Exhaustive scan over 1 <= x,y,z <= bounds, n in [n_min, n_max]: the exact
/// big-integer predicate for every tuple, plus the chosen functional
/// evaluated at the tuple's float value. Rows stream in tuple order.
pub fn fermat_scan(
    bounds: &ScanBounds,
    eval: &(dyn Fn(f64) -> Result<f64> + Sync),
    mut on_row: impl FnMut(&ScanRow),
) -> Result<ScanSummary> {
    if bounds.x_max == 0 || bounds.y_max == 0 || bounds.z_max == 0 || bounds.n_min < 3 {
        return Err(Error::Domain("scan bounds must be positive with n_min >= 3".into()));
    }
    let mut summary = ScanSummary {
        tuples_checked: 0,
        equalities_found: 0,
        min_exact_dev_from_one: f64::INFINITY,
        min_dev_tuple: (0, 0, 0, 0),
    };
    // parallel over y,z,n within each x slice; rows emitted in tuple order
    for x in 1..=bounds.x_max {
        let slice: Vec<Result<ScanRow>> = (1..=bounds.y_max)
            .into_par_iter()
            .flat_map_iter(|y| {
                let mut rows = Vec::with_capacity((bounds.z_max * 10) as usize);
                for z in 1..=bounds.z_max {
                    for n in bounds.n_min..=bounds.n_max {
                        rows.push(scan_one(x, y, z, n, eval));
                    }
                }
                rows
            })
            .collect();
        for item in slice {
            match item {
                Ok(row) => {
                    summary.tuples_checked += 1;
                    if row.exact_dev_from_one < summary.min_exact_dev_from_one {
                        summary.min_exact_dev_from_one = row.exact_dev_from_one;
                        summary.min_dev_tuple = (row.x, row.y, row.z, row.n);
                    }
                    on_row(&row);
                }
                Err(Error::FermatEquality { .. }) => {
                    summary.tuples_checked += 1;
                    summary.equalities_found += 1;
                }
                Err(e) => return Err(e),
            }
        }
    }
    Ok(summary)
}

fn scan_one(
    x: u64,
    y: u64,
    z: u64,
    n: u32,
    eval: &(dyn Fn(f64) -> Result<f64> + Sync),
) -> Result<ScanRow> {
    let fr = FermatRational::new(x, y, z, n)?;
    let estimate = eval(fr.float_value)?;
    Ok(ScanRow {
        x,
        y,
        z,
        n,
        exact_value: fr.float_value,
        estimate,
        estimate_dev_from_one: (estimate - 1.0).abs(),
        exact_dev_from_one: fr.exact_distance_from_one(),
    })
}

/// The three chained inner quantities (before 1/tau) and their ratios.
#[derive(Debug, Clone, Serialize)]
pub struct ChainComparison {
    pub tau: f64,
    pub prod3_inner: f64,
    pub dprod_inner: f64,
    pub divisor_inner: f64,
    pub prod3_over_dprod: f64,
    pub prod3_over_divisor: f64,
    pub dprod_over_divisor: f64,
}

/// Quotient chain: the prod3 inner expression, the dprod inner expression,
/// and the divisor segment sum, all at the same x and tau. Every ratio tends
/// to 1.
#[allow(clippy::too_many_arguments)]
pub fn chain_compare(
    engine: &MomentEngine,
    x: f64,
    l: u32,
    sigma: f64,
    fam: &SeriesFamily,
    tau: f64,
    cfg: LadderConfig,
    backend: Backend,
    cbar: f64,
) -> Result<ChainComparison> {
    let p = functional_prod3(engine, x, l, sigma, tau, cfg, backend, cbar)?.estimate * tau;
    let q = functional_dprod(engine, x, fam, tau, backend)?.estimate * tau;
    let ladder = Ladder::new(engine, cfg)?;
    let r = divisor::divisor_functional(x, tau, &ladder, backend)?.estimate * tau;
    Ok(ChainComparison {
        tau,
        prod3_inner: p,
        dprod_inner: q,
        divisor_inner: r,
        prod3_over_dprod: p / q,
        prod3_over_divisor: p / r,
        dprod_over_divisor: q / r,
    })
}
