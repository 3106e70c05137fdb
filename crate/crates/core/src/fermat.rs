//! Exact Fermat rationals (x^n + y^n) / z^n.
//!
//! The defining predicate x^n + y^n != z^n is checked in big-integer
//! arithmetic for every instance constructed; an equality is an error, never
//! a rounding question.

use num::bigint::BigInt;
use num::rational::BigRational;
use num::traits::{One, ToPrimitive, Zero};
use num::BigUint;

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FermatRational {
    pub x: BigUint,
    pub y: BigUint,
    pub z: BigUint,
    pub n: u32,
    /// (x^n + y^n) / z^n, exact.
    pub exact_value: BigRational,
    /// Nearest double to the exact value.
    pub float_value: f64,
}

impl FermatRational {
    pub fn new(x: u64, y: u64, z: u64, n: u32) -> Result<Self> {
        Self::from_big(BigUint::from(x), BigUint::from(y), BigUint::from(z), n)
    }

    pub fn from_big(x: BigUint, y: BigUint, z: BigUint, n: u32) -> Result<Self> {
        if n < 3 {
            return Err(Error::Domain(format!("Fermat exponent needs n >= 3, got {n}")));
        }
        if x.is_zero() || y.is_zero() || z.is_zero() {
            return Err(Error::Domain("Fermat rationals need x, y, z >= 1".into()));
        }
        let num = x.pow(n) + y.pow(n);
        let den = z.pow(n);
        if num == den {
            // would contradict the theorem; surfaced loudly
            return Err(Error::FermatEquality {
                x: big_to_u64(&x),
                y: big_to_u64(&y),
                z: big_to_u64(&z),
                n,
            });
        }
        let exact_value = BigRational::new(BigInt::from(num), BigInt::from(den));
        let float_value = exact_value.to_f64().unwrap_or(f64::NAN);
        if !float_value.is_finite() || float_value <= 0.0 {
            return Err(Error::Domain(
                "Fermat rational out of double range at desk scale".into(),
            ));
        }
        Ok(Self {
            x,
            y,
            z,
            n,
            exact_value,
            float_value,
        })
    }

    /// |exact - 1| as a rational, converted to double at the end.
    pub fn exact_distance_from_one(&self) -> f64 {
        let one = BigRational::one();
        let diff = if self.exact_value > one {
            &self.exact_value - &one
        } else {
            &one - &self.exact_value
        };
        diff.to_f64().unwrap_or(f64::NAN)
    }
}

fn big_to_u64(v: &BigUint) -> u64 {
    v.to_u64().unwrap_or(u64::MAX)
}

/// Desk-scale exhaustive scan bounds.
#[derive(Debug, Clone, Copy, serde::Serialize, serde::Deserialize)]
pub struct ScanBounds {
    pub x_max: u64,
    pub y_max: u64,
    pub z_max: u64,
    pub n_min: u32,
    pub n_max: u32,
}

impl ScanBounds {
    pub fn new(x_max: u64, y_max: u64, z_max: u64, n_max: u32) -> Self {
        Self {
            x_max,
            y_max,
            z_max,
            n_min: 3,
            n_max,
        }
    }

    pub fn tuple_count(&self) -> u64 {
        self.x_max * self.y_max * self.z_max * (self.n_max - self.n_min + 1) as u64
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn classic_pythagoras_lifted() {
        // (3^3 + 4^3) / 5^3 = 91/125 = 0.728 exactly
        let f = FermatRational::new(3, 4, 5, 3).unwrap();
        assert_eq!(f.float_value, 0.728);
        assert_eq!(
            f.exact_value,
            BigRational::new(BigInt::from(91), BigInt::from(125))
        );
    }

    #[test]
    fn ones_give_two() {
        for n in 3..=12 {
            let f = FermatRational::new(1, 1, 1, n).unwrap();
            assert_eq!(f.float_value, 2.0);
        }
    }

    #[test]
    fn exponent_below_three_rejected() {
        assert!(FermatRational::new(3, 4, 5, 2).is_err());
    }

    #[test]
    fn zero_sides_rejected() {
        assert!(FermatRational::new(0, 4, 5, 3).is_err());
    }

    #[test]
    fn near_miss_is_not_equality() {
        // 6^3 + 8^3 = 728 vs 9^3 = 729: off by one, exactly
        let f = FermatRational::new(6, 8, 9, 3).unwrap();
        let dist = f.exact_distance_from_one();
        assert!((dist - 1.0 / 729.0).abs() < 1e-18);
    }
}
