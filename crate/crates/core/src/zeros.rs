//! Critical-line zero location with completeness verification.
//!
//! Zeros are found by sign-change scanning of Z plus bisection, block by
//! block, and every block is validated against the zero-counting identity
//! N(t) = theta(t)/pi + 1 + S(t) with S from the argument-continuation
//! route. A failed count triggers rescans at a four-times finer step
//! (close pairs); if refinement cannot reconcile the count, that is a hard
//! error, because S1 integration depends on completeness.
//!
//! The table is process-global and append-only: blocks are always verified
//! in order with a deterministic step policy, so the cached table is
//! identical to what any cold scan would produce.

use once_cell::sync::Lazy;
use std::sync::Mutex;

use crate::argument::s_of_t;
use crate::error::{Error, Result};
use crate::riemann_siegel::{hardy_z, theta_unchecked};

const PI: f64 = std::f64::consts::PI;

/// Verified block length.
const BLOCK: f64 = 128.0;

/// Bisection width for ordinates.
const ZERO_WIDTH: f64 = 1e-11;

/// Zeros of Z on an interval, with the interval recorded.
#[derive(Debug, Clone)]
pub struct ZeroList {
    /// Strictly increasing ordinates in (interval.0, interval.1].
    pub ordinates: Vec<f64>,
    pub interval: (f64, f64),
}

impl ZeroList {
    pub fn count(&self) -> usize {
        self.ordinates.len()
    }
}

/// All sign changes of Z on (t_lo, t_hi], bisected to 1e-11 and validated
/// against the counting identity blockwise.
pub fn find_zeros(t_lo: f64, t_hi: f64) -> Result<ZeroList> {
    if !(0.0 < t_lo && t_lo < t_hi) {
        return Err(Error::Domain(format!(
            "find_zeros needs 0 < t_lo < t_hi, got [{t_lo}, {t_hi}]"
        )));
    }
    with_global(|table| {
        table.ensure(t_hi)?;
        Ok(ZeroList {
            ordinates: table.range(t_lo, t_hi).to_vec(),
            interval: (t_lo, t_hi),
        })
    })
}

/// N(t): zeros with ordinate <= t, from the verified table.
pub fn zero_count(t: f64) -> Result<usize> {
    if t <= 0.0 {
        return Ok(0);
    }
    with_global(|table| {
        table.ensure(t)?;
        Ok(table.count_below(t))
    })
}

static GLOBAL: Lazy<Mutex<ZeroTable>> = Lazy::new(|| Mutex::new(ZeroTable::new()));

pub(crate) fn with_global<R>(f: impl FnOnce(&mut ZeroTable) -> R) -> R {
    let mut guard = GLOBAL.lock().expect("zero table poisoned");
    f(&mut guard)
}

/// Verified, monotonically growing zero table.
pub(crate) struct ZeroTable {
    ordinates: Vec<f64>,
    /// Verification anchors: (position, exact zero count at position).
    edges: Vec<(f64, usize)>,
    /// Cumulative integrals of S through each zero, grown by the S1 engine.
    pub(crate) s1_prefix: Vec<f64>,
}

impl ZeroTable {
    fn new() -> Self {
        Self {
            ordinates: Vec::new(),
            edges: vec![(1.0, 0)],
            s1_prefix: Vec::new(),
        }
    }

    pub(crate) fn ordinates(&self) -> &[f64] {
        &self.ordinates
    }

    /// Number of table zeros <= t (t must be within the verified range).
    pub(crate) fn count_below(&self, t: f64) -> usize {
        debug_assert!(t <= self.verified_to() + 1e-9);
        self.ordinates.partition_point(|&g| g <= t)
    }

    pub(crate) fn range(&self, lo: f64, hi: f64) -> &[f64] {
        let a = self.ordinates.partition_point(|&g| g <= lo);
        let b = self.ordinates.partition_point(|&g| g <= hi);
        &self.ordinates[a..b]
    }

    pub(crate) fn verified_to(&self) -> f64 {
        self.edges.last().expect("edge list nonempty").0
    }

    /// Extend verified coverage through t.
    pub(crate) fn ensure(&mut self, t: f64) -> Result<()> {
        while self.verified_to() < t {
            self.extend_block()?;
        }
        Ok(())
    }

    fn extend_block(&mut self) -> Result<()> {
        let (prev_pos, prev_count) = *self.edges.last().unwrap();
        let target = (prev_pos / BLOCK).floor() * BLOCK + BLOCK;
        let edge = pick_anchor(target);
        let expected = count_at(edge)?;

        let mean_gap = 2.0 * PI / (edge.max(20.0) / (2.0 * PI)).ln();
        let mut step = (mean_gap / 3.0).clamp(1e-4, 1.0);
        for _attempt in 0..5 {
            let found = scan_zeros(prev_pos, edge, step)?;
            if prev_count + found.len() == expected {
                self.ordinates.extend_from_slice(&found);
                self.edges.push((edge, expected));
                return Ok(());
            }
            step /= 4.0;
        }
        let found = scan_zeros(prev_pos, edge, step)?;
        Err(Error::MissedZeros {
            lo: prev_pos,
            hi: edge,
            found: prev_count + found.len(),
            expected,
        })
    }
}

/// First point at or after `target` where |Z| is comfortably large, so the
/// counting identity can be evaluated away from any ordinate.
fn pick_anchor(target: f64) -> f64 {
    let mut best = (target, hardy_z(target).abs());
    for j in 0..40 {
        let x = target + j as f64 * 0.0375;
        let z = hardy_z(x).abs();
        if z >= 0.05 {
            return x;
        }
        if z > best.1 {
            best = (x, z);
        }
    }
    best.0
}

/// Exact N at an anchor via theta/pi + 1 + S with continuation S.
fn count_at(x: f64) -> Result<usize> {
    let n = theta_unchecked(x) / PI + 1.0 + s_of_t(x)?;
    let rounded = n.round();
    if (n - rounded).abs() > 1e-4 || rounded < 0.0 {
        return Err(Error::Domain(format!(
            "counting identity gave non-integer {n} at t = {x}"
        )));
    }
    Ok(rounded as usize)
}

/// Sign-change scan of Z on (lo, hi] at the given step, each bracket
/// refined by bisection.
fn scan_zeros(lo: f64, hi: f64, step: f64) -> Result<Vec<f64>> {
    let mut out = Vec::new();
    let n_steps = ((hi - lo) / step).ceil() as usize;
    let mut t_prev = lo;
    let mut z_prev = hardy_z(t_prev);
    for i in 1..=n_steps {
        let t = if i == n_steps {
            hi
        } else {
            lo + (hi - lo) * i as f64 / n_steps as f64
        };
        let z = hardy_z(t);
        if z_prev * z < 0.0 {
            out.push(bisect(t_prev, t, z_prev));
        } else if z == 0.0 && z_prev != 0.0 {
            out.push(t);
        }
        t_prev = t;
        z_prev = z;
    }
    Ok(out)
}

fn bisect(mut a: f64, mut b: f64, mut za: f64) -> f64 {
    for _ in 0..64 {
        if b - a < ZERO_WIDTH {
            break;
        }
        let m = 0.5 * (a + b);
        let zm = hardy_z(m);
        if za * zm <= 0.0 {
            b = m;
        } else {
            a = m;
            za = zm;
        }
    }
    0.5 * (a + b)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_bad_interval() {
        assert!(find_zeros(10.0, 5.0).is_err());
        assert!(find_zeros(0.0, 5.0).is_err());
    }

    #[test]
    fn no_zeros_below_fourteen() {
        let z = find_zeros(1.0, 10.0).unwrap();
        assert!(z.ordinates.is_empty());
    }

    #[test]
    fn three_zeros_between_10_and_30() {
        let z = find_zeros(10.0, 30.0).unwrap();
        assert_eq!(z.count(), 3);
        let expect = [14.13, 21.02, 25.01];
        for (g, e) in z.ordinates.iter().zip(expect) {
            assert!((g - e).abs() < 0.01, "{g} vs {e}");
        }
    }

    #[test]
    fn ordinates_are_zeros_of_z() {
        let z = find_zeros(10.0, 100.0).unwrap();
        for &g in &z.ordinates {
            assert!(hardy_z(g).abs() < 1e-9, "Z({g}) = {}", hardy_z(g));
        }
        for w in z.ordinates.windows(2) {
            assert!(w[0] < w[1]);
        }
    }

    #[test]
    fn twenty_nine_zeros_below_100() {
        assert_eq!(zero_count(100.0).unwrap(), 29);
    }
}
