//! Numerical laboratory for critical-line zeta moments, ladder-style reverse
//! iterations, Dirichlet-series mean values, divisor segment sums, and the
//! limit functionals built from them, evaluated at Fermat rationals.
//!
//! Layering, bottom up:
//!
//! * [`zeta`], [`gamma`], [`riemann_siegel`] — scalar special functions;
//! * [`zeros`], [`argument`] — verified zero lists, S(t) and S1(t);
//! * [`quad`], [`moments`] — adaptive panels and the cached moment integrals;
//! * [`ladder`] — the transfer model, phi1 and reverse iterations;
//! * [`dirichlet`], [`divisor`] — series mean values and divisor sums;
//! * [`fermat`], [`functional`] — exact Fermat rationals and the assembled
//!   limit functionals;
//! * [`checkpoint`] — the persistent moment-integral store.

pub mod argument;
pub mod checkpoint;
pub mod constants;
pub mod dirichlet;
pub mod divisor;
pub mod error;
pub mod fermat;
pub mod functional;
pub mod gamma;
pub mod ladder;
pub mod moments;
pub mod quad;
pub mod riemann_siegel;
pub mod zeros;
pub mod zeta;

pub use constants::Constants;
pub use error::{Error, Result};
pub use quad::{Backend, MomentIntegralResult};
