//! Divisor function, the summatory Dirichlet sum D(x), ladder segment sums,
//! and the divisor functional.
//!
//! Everything up to the final 1/tau scaling stays in exact integer
//! arithmetic: D(x) uses the hyperbola method, segment sums are differences
//! of D, and only the functional estimate converts to float.

use crate::constants::EULER;
use crate::error::{Error, Result};
use crate::functional::{FunctionalEstimate, FunctionalKind, FunctionalParams};
use crate::ladder::Ladder;
use crate::quad::Backend;

/// Number of divisors of n, by trial division up to sqrt(n).
pub fn divisor_d(n: u64) -> u64 {
    debug_assert!(n >= 1);
    let mut count = 0;
    let mut k = 1u64;
    while k * k < n {
        if n % k == 0 {
            count += 2;
        }
        k += 1;
    }
    if k * k == n {
        count += 1;
    }
    count
}

fn isqrt(n: u64) -> u64 {
    let mut s = (n as f64).sqrt() as u64;
    while (s + 1) * (s + 1) <= n {
        s += 1;
    }
    while s * s > n {
        s -= 1;
    }
    s
}

/// D(x) = sum_{n <= x} d(n), exact, by the hyperbola method:
/// 2 sum_{k <= sqrt(x)} floor(x/k) - floor(sqrt(x))^2.
pub fn dirichlet_sum_d(x: f64) -> Result<u128> {
    if x < 0.0 {
        return Err(Error::Domain(format!("dirichlet_sum_d needs x >= 0, got {x}")));
    }
    if !x.is_finite() || x >= 9.0e18 {
        return Err(Error::Domain(format!("dirichlet_sum_d out of range: {x}")));
    }
    let n = x.floor() as u64;
    if n == 0 {
        return Ok(0);
    }
    let s = isqrt(n);
    let mut acc: u128 = 0;
    for k in 1..=s {
        acc += (n / k) as u128;
    }
    Ok(2 * acc - (s as u128) * (s as u128))
}

/// Sum_{A < n <= B} d(n), exact.
#[derive(Debug, Clone, Copy)]
pub struct SegmentSum {
    pub lower: f64,
    pub upper: f64,
    pub value: u128,
}

pub fn segment_sum(lower: f64, upper: f64) -> Result<SegmentSum> {
    if !(0.0 <= lower && lower <= upper) {
        return Err(Error::Domain(format!(
            "segment_sum needs 0 <= A <= B, got [{lower}, {upper}]"
        )));
    }
    let value = dirichlet_sum_d(upper)? - dirichlet_sum_d(lower)?;
    Ok(SegmentSum {
        lower,
        upper,
        value,
    })
}

/// (1/tau) sum_{X < n <= phi1_inv(X)} d(n) with X = x tau / (1-c);
/// approaches x as tau grows.
pub fn divisor_functional(
    x: f64,
    tau: f64,
    ladder: &Ladder<'_>,
    backend: Backend,
) -> Result<FunctionalEstimate> {
    if x <= 0.0 || tau <= 0.0 {
        return Err(Error::Domain(format!(
            "divisor functional needs x > 0 and tau > 0, got x = {x}, tau = {tau}"
        )));
    }
    let big_x = x * tau / (1.0 - EULER);
    let params = FunctionalParams {
        l: None,
        sigma: None,
        family: None,
        mode: ladder.config().mode,
        backend,
        cbar: None,
        tol: 0.0,
    };
    let (estimate, note) = match backend {
        Backend::Synthetic => ((1.0 - EULER) * big_x / tau, None),
        Backend::Real => {
            let upper = ladder.phi1_inv(big_x)?;
            if upper.floor() <= big_x.floor() {
                (0.0, Some("empty divisor segment at this tau".to_string()))
            } else {
                let seg = segment_sum(big_x, upper)?;
                (seg.value as f64 / tau, None)
            }
        }
    };
    Ok(FunctionalEstimate {
        kind: FunctionalKind::Divisor,
        target_x: x,
        tau,
        estimate,
        deviation: estimate - x,
        params,
        note,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn divisor_counts_small() {
        assert_eq!(divisor_d(1), 1);
        assert_eq!(divisor_d(12), 6); // {1,2,3,4,6,12}
        for p in [2u64, 3, 5, 7, 11, 97, 8191] {
            assert_eq!(divisor_d(p), 2, "prime {p}");
        }
        assert_eq!(divisor_d(36), 9); // perfect square
    }

    #[test]
    fn dirichlet_sum_examples() {
        assert_eq!(dirichlet_sum_d(0.0).unwrap(), 0);
        assert_eq!(dirichlet_sum_d(0.9).unwrap(), 0);
        // D(10) = 27 by direct enumeration
        let brute: u128 = (1..=10).map(|n| divisor_d(n) as u128).sum();
        assert_eq!(brute, 27);
        assert_eq!(dirichlet_sum_d(10.0).unwrap(), 27);
        // non-integer upper bound truncates
        assert_eq!(dirichlet_sum_d(10.7).unwrap(), 27);
        assert!(dirichlet_sum_d(-1.0).is_err());
    }

    #[test]
    fn hyperbola_matches_brute_force_to_1e5() {
        let n = 100_000u64;
        let mut d = vec![0u32; (n + 1) as usize];
        for k in 1..=n as usize {
            let mut m = k;
            while m <= n as usize {
                d[m] += 1;
                m += k;
            }
        }
        let mut prefix: u128 = 0;
        for m in 1..=n as usize {
            prefix += d[m] as u128;
            if m % 9973 == 0 || m == n as usize {
                assert_eq!(
                    dirichlet_sum_d(m as f64).unwrap(),
                    prefix,
                    "mismatch at x = {m}"
                );
            }
        }
    }

    #[test]
    fn segment_sum_matches_brute_force() {
        let (a, b) = (5000.0, 7500.0);
        let brute: u128 = (5001..=7500u64).map(|n| divisor_d(n) as u128).sum();
        let seg = segment_sum(a, b).unwrap();
        assert_eq!(seg.value, brute);
        assert!(segment_sum(10.0, 5.0).is_err());
    }

    #[test]
    fn classical_mean_trend() {
        // |D(x)/x - (ln x + 2c - 1)| decreases along x = 1e3, 1e4, 1e5
        let dev = |x: f64| {
            let d = dirichlet_sum_d(x).unwrap() as f64;
            (d / x - (x.ln() + 2.0 * EULER - 1.0)).abs()
        };
        let (a, b, c) = (dev(1e3), dev(1e4), dev(1e5));
        assert!(a > b && b > c, "{a} {b} {c}");
    }
}
