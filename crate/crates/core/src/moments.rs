//! The three moment integrals and their cache.
//!
//! Every moment integral is assembled from chunk integrals on a fixed
//! absolute grid (width 128), each computed at a fixed per-length error
//! density and cached, so a larger upper limit reuses all previously
//! computed chunks. Partial end pieces go through the same keyed cache.
//! If a caller asks for a tolerance tighter than the chunk density can
//! guarantee, the integral is computed fresh in one piece at that tolerance
//! and bypasses the chunk grid.
//!
//! The synthetic backend replaces each integral by its proven leading term,
//! exactly, which lets the functional algebra be tested free of numerics.

use std::collections::HashMap;
use std::sync::RwLock;

use crate::argument::S1Engine;
use crate::constants::EULER;
use crate::error::{Error, Result};
use crate::quad::{integrate_adaptive_opts, MomentIntegralResult, QuadOptions};
use crate::riemann_siegel::z_squared;
use crate::zeros;
use crate::zeta::zeta_em_with;

const CHUNK: f64 = 128.0;

/// Absolute error allowance per unit length for cached chunks.
const DENSITY: f64 = 2e-7;

/// Which moment integral a cache record belongs to.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum MomentKind {
    /// int |zeta(sigma+it)|^2 dt (sigma stored bit-exact).
    HlSigma { sigma_bits: u64 },
    /// int |zeta(1/2+it)|^2 dt.
    Crit,
    /// int |S1(t)|^{2l} dt.
    S1Moment { l: u32 },
}

impl MomentKind {
    pub fn hl(sigma: f64) -> Self {
        MomentKind::HlSigma {
            sigma_bits: sigma.to_bits(),
        }
    }

    pub fn s1(l: u32) -> Self {
        MomentKind::S1Moment { l }
    }

    /// Human-readable parameter echo for store records.
    pub fn describe(&self) -> String {
        match self {
            MomentKind::HlSigma { sigma_bits } => {
                format!("hl sigma={}", f64::from_bits(*sigma_bits))
            }
            MomentKind::Crit => "crit".to_string(),
            MomentKind::S1Moment { l } => format!("s1moment l={l}"),
        }
    }
}

/// Cache key: kind plus bit-exact bounds and tolerance.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CacheKey {
    pub kind: MomentKind,
    pub lower_bits: u64,
    pub upper_bits: u64,
    pub tol_bits: u64,
}

impl CacheKey {
    fn new(kind: &MomentKind, lower: f64, upper: f64, tol: f64) -> Self {
        Self {
            kind: kind.clone(),
            lower_bits: lower.to_bits(),
            upper_bits: upper.to_bits(),
            tol_bits: tol.to_bits(),
        }
    }
}

/// Stored pair: value and its error estimate.
pub type CacheValue = (f64, f64);

/// Pluggable persistence for moment-integral records. Lookups must return
/// exactly the stored pair.
pub trait MomentStore: Send + Sync {
    fn get(&self, key: &CacheKey) -> Option<CacheValue>;
    fn put(&self, key: &CacheKey, value: CacheValue);
}

/// Process-local store.
#[derive(Default)]
pub struct MemoryStore {
    map: RwLock<HashMap<CacheKey, CacheValue>>,
}

impl MomentStore for MemoryStore {
    fn get(&self, key: &CacheKey) -> Option<CacheValue> {
        self.map.read().expect("store lock").get(key).copied()
    }

    fn put(&self, key: &CacheKey, value: CacheValue) {
        self.map.write().expect("store lock").insert(key.clone(), value);
    }
}

/// Computes and caches the moment integrals.
pub struct MomentEngine {
    store: Box<dyn MomentStore>,
}

impl Default for MomentEngine {
    fn default() -> Self {
        Self::new(Box::<MemoryStore>::default())
    }
}

impl MomentEngine {
    pub fn new(store: Box<dyn MomentStore>) -> Self {
        Self { store }
    }

    /// int_1^T |zeta(sigma+it)|^2 dt for sigma >= 1/2 + eps.
    pub fn hl_sigma_integral(&self, sigma: f64, t_upper: f64, tol: f64) -> Result<MomentIntegralResult> {
        const EPS_MIN: f64 = 0.05;
        if sigma < 0.5 + EPS_MIN {
            return Err(Error::Domain(format!(
                "hl_sigma_integral needs sigma >= {}, got {sigma}",
                0.5 + EPS_MIN
            )));
        }
        self.integral(&MomentKind::hl(sigma), 1.0, t_upper.max(1.0), tol)
    }

    /// int_{t1}^{t2} |zeta(1/2+it)|^2 dt.
    pub fn crit_integral(&self, t1: f64, t2: f64, tol: f64) -> Result<MomentIntegralResult> {
        if !(0.0 <= t1 && t1 <= t2) {
            return Err(Error::Domain(format!(
                "crit_integral needs 0 <= T1 <= T2, got [{t1}, {t2}]"
            )));
        }
        self.integral(&MomentKind::Crit, t1, t2, tol)
    }

    /// int_1^T |S1(t)|^{2l} dt for l in {1, 2, 3}.
    pub fn s1_moment_integral(&self, l: u32, t_upper: f64, tol: f64) -> Result<MomentIntegralResult> {
        if !(1..=3).contains(&l) {
            return Err(Error::Domain(format!(
                "s1_moment_integral supports l in 1..=3 at desk scale, got {l}"
            )));
        }
        self.integral(&MomentKind::s1(l), 1.0, t_upper.max(1.0), tol)
    }

    fn integral(&self, kind: &MomentKind, lower: f64, upper: f64, tol: f64) -> Result<MomentIntegralResult> {
        if upper <= lower {
            return Ok(MomentIntegralResult {
                value: 0.0,
                lower,
                upper,
                abs_error_estimate: 0.0,
                panels_used: 0,
                backend: crate::quad::Backend::Real,
            });
        }

        // Too tight for the chunk density: compute in one piece, uncached.
        if tol < 1.5 * DENSITY * (upper - lower) {
            let (value, err, panels) = compute_piece(kind, lower, upper, tol)?;
            if err > tol {
                return Err(Error::ToleranceNotMet {
                    lower,
                    upper,
                    tol,
                    estimate: err,
                });
            }
            return Ok(MomentIntegralResult {
                value,
                lower,
                upper,
                abs_error_estimate: err,
                panels_used: panels,
                backend: crate::quad::Backend::Real,
            });
        }

        // Piece boundaries on the absolute chunk grid.
        let k_lo = (lower / CHUNK).ceil() as i64;
        let k_hi = (upper / CHUNK).floor() as i64;
        let mut bounds = vec![lower];
        for k in k_lo..=k_hi {
            let b = k as f64 * CHUNK;
            if b > lower && b < upper {
                bounds.push(b);
            }
        }
        bounds.push(upper);

        let mut value = 0.0;
        let mut err = 0.0;
        let mut panels = 0usize;
        for w in bounds.windows(2) {
            let (lo, hi) = (w[0], w[1]);
            let piece_tol = DENSITY * (hi - lo);
            let key = CacheKey::new(kind, lo, hi, piece_tol);
            let (v, e) = match self.store.get(&key) {
                Some(pair) => pair,
                None => {
                    let (v, e, p) = compute_piece(kind, lo, hi, piece_tol)?;
                    panels += p;
                    self.store.put(&key, (v, e));
                    (v, e)
                }
            };
            value += v;
            err += e;
        }

        if err > tol {
            return Err(Error::ToleranceNotMet {
                lower,
                upper,
                tol,
                estimate: err,
            });
        }
        Ok(MomentIntegralResult {
            value,
            lower,
            upper,
            abs_error_estimate: err,
            panels_used: panels,
            backend: crate::quad::Backend::Real,
        })
    }
}

/// Compute one piece of a moment integral. Returns (value, error, panels).
fn compute_piece(kind: &MomentKind, lo: f64, hi: f64, tol: f64) -> Result<(f64, f64, usize)> {
    match kind {
        MomentKind::HlSigma { sigma_bits } => {
            let sigma = f64::from_bits(*sigma_bits);
            // points evaluated a touch tighter than the piece budget needs
            let point_tol = (tol / (hi - lo) / 64.0).clamp(1e-12, 1e-8);
            let opts = QuadOptions {
                max_panel_width: Some(2.0),
                ..Default::default()
            };
            let r = integrate_adaptive_opts(
                |t| {
                    let z = zeta_em_with(sigma, t, point_tol).expect("zeta_em in hl integrand");
                    z.norm_sqr()
                },
                lo,
                hi,
                tol,
                &[],
                &opts,
            )?;
            Ok((r.value, r.abs_error_estimate, r.panels_used))
        }
        MomentKind::Crit => {
            // Z oscillates with local wavelength ~ 2 pi / ln(t/2pi); the cap
            // keeps panels fine enough above t = 1e3.
            let cap = if hi <= 1000.0 { 1.0 } else { 0.25 };
            let opts = QuadOptions {
                max_panel_width: Some(cap),
                ..Default::default()
            };
            let r = integrate_adaptive_opts(z_squared, lo, hi, tol, &[], &opts)?;
            Ok((r.value, r.abs_error_estimate, r.panels_used))
        }
        MomentKind::S1Moment { l } => {
            let two_l = (2 * l) as i32;
            // Snapshot the zero/prefix state this piece needs, then integrate
            // outside the table lock.
            let snap = zeros::with_global(|table| -> Result<S1Snapshot> {
                table.ensure(hi)?;
                let k0 = table.count_below(lo);
                let k1 = table.count_below(hi);
                let mut engine = S1Engine::attach(table);
                engine.prefix_through(k1)?;
                let mut gammas = Vec::with_capacity(k1 - k0 + 1);
                let mut prefixes = Vec::with_capacity(k1 - k0 + 1);
                for k in k0..=k1 {
                    if k == 0 {
                        gammas.push(0.0);
                        prefixes.push(0.0);
                    } else {
                        gammas.push(engine.table().ordinates()[k - 1]);
                        prefixes.push(engine.table().s1_prefix[k - 1]);
                    }
                }
                Ok(S1Snapshot {
                    base_count: k0,
                    gammas,
                    prefixes,
                })
            })?;
            let breakpoints: Vec<f64> = snap.gammas.iter().copied().filter(|&g| g > lo && g < hi).collect();
            let r = integrate_adaptive_opts(
                |t| snap.s1(t).powi(two_l),
                lo,
                hi,
                tol,
                &breakpoints,
                &QuadOptions::default(),
            )?;
            Ok((r.value, r.abs_error_estimate, r.panels_used))
        }
    }
}

/// Zero/prefix state captured for one S1 piece, indexable without the table
/// lock: entry i corresponds to zero count base_count + i, holding that
/// zero's ordinate and the cumulative integral of S through it.
struct S1Snapshot {
    base_count: usize,
    gammas: Vec<f64>,
    prefixes: Vec<f64>,
}

impl S1Snapshot {
    fn s1(&self, t: f64) -> f64 {
        let i = self.gammas[1..].partition_point(|&g| g <= t);
        let count = self.base_count + i;
        let start = self.gammas[i];
        self.prefixes[i]
            + crate::argument::integrate_s_over(start, t, count)
                .expect("local S integral inside an inter-zero interval")
    }
}

/// Synthetic stand-ins: each integral replaced by its proven leading term.
pub mod synthetic {
    use super::MomentIntegralResult;

    /// int_1^T |zeta(sigma+it)|^2 ~ zeta(2 sigma) T.
    pub fn hl_sigma_integral(zeta_two_sigma: f64, t_upper: f64) -> MomentIntegralResult {
        MomentIntegralResult::synthetic(zeta_two_sigma * t_upper, 1.0, t_upper)
    }

    /// int_T^{phi1_inv(T)} |zeta(1/2+it)|^2 ~ (1-c) T over a ladder pair.
    pub fn crit_pair(t_lower: f64, t_upper: f64) -> MomentIntegralResult {
        MomentIntegralResult::synthetic((1.0 - super::EULER) * t_lower, t_lower, t_upper)
    }

    /// int_1^T |S1|^{2l} ~ cbar(l) T, with the supplied cbar.
    pub fn s1_moment_integral(cbar: f64, t_upper: f64) -> MomentIntegralResult {
        MomentIntegralResult::synthetic(cbar * t_upper, 1.0, t_upper)
    }
}
