//! Exact Veronese transforms of rational generating series `h(t) / (1 - t)^d`
//! together with certificates for real-rootedness and interlacing of the
//! transformed numerators, Ehrhart `h*`-polynomials of dilated polytopes and
//! constructive tightness witnesses.

pub mod cli;
pub mod ehrhart;
pub mod error;
pub mod eulerian;
pub mod optimality;
pub mod poly;
pub mod realroots;
pub mod sections;
pub mod veronese;

mod serde_util;

pub use error::{Error, Result};
pub use poly::{numerator_from_values, series_coeffs, Polynomial, Rational, RationalGenSeries};
