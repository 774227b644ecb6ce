//! One-dimensional wave–structure interaction solvers.
//!
//! Nonlinear shallow water and Boussinesq finite-volume schemes coupled to a
//! partially immersed rigid body moving vertically. The pressure under the
//! hull acts as a discrete Lagrange multiplier: with a compatible start, the
//! free surface coincides with the hull over the wetted cells to machine
//! precision at every step. Exact references (contact-point root, free-decay
//! ODE, solitary waves) live in [`exact`].
//!
//! All numerical kernels are generic over the scalar type through
//! [`scalar::Real`]; the `*64` aliases below fix `f64`, which is what the
//! validation tolerances assume.

// Validation guards compare as `!(x > 0)` so NaN inputs are rejected too.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod average;
pub mod bouss;
pub mod error;
pub mod exact;
pub mod flux;
pub mod geometry;
pub mod grid;
pub mod nsw;
pub mod params;
pub mod quad;
pub mod scalar;
pub mod solid;
pub mod state;
pub mod tridiag;

pub use error::{Error, Result};
pub use scalar::Real;

/// Double-precision aliases for the main model types.
pub type Params64 = params::PhysicalParams<f64>;
pub type Grid64 = grid::Grid<f64>;
pub type Region64 = grid::InteriorRegion<f64>;
pub type State64 = state::FluidState<f64>;
pub type Body64 = geometry::BodyGeometry<f64>;
pub type BodyState64 = solid::BodyState<f64>;
