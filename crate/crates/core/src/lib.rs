//! Exact computations around the Ceresa cycle of bielliptic Picard curves
//! `y^3 = x^4 + a x^2 + b`.
//!
//! The torsion question for the Ceresa cycle reduces to whether the marked
//! point `Q = (a^2 - 4b, a(a^2 - 4b))` on `E^Δ : y^2 = x^3 + 4b(a^2 - 4b)^2`
//! is torsion. This crate decides that question over `Q`, enumerates the
//! algebraic parameters `t` of `y^3 = x^4 + 2t x^2 + 1` where the cycle is
//! torsion of a given order, computes Néron–Tate heights of `Q`, and builds
//! finite-field certificates that the cycle has infinite order.
//!
//! Modules, bottom-up:
//!
//! * [`arith`]: rationals, prime fields, polynomials, exact matrices.
//! * [`elliptic`]: `y^2 = x^3 + d` over `Q` and `F_p`, torsion, division polynomials.
//! * [`heights`]: canonical heights and the Northcott scan.
//! * [`picard`]: the curve family, the torsion decision, the torsion locus.
//! * [`ffcert`]: point counts, L-polynomials, and infinite-order certificates.

pub mod arith;
pub mod elliptic;
mod error;
pub mod ffcert;
pub mod heights;
pub mod picard;

pub use error::{Error, Result};
