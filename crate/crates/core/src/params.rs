//! Physical constants of the water column.

use crate::error::{Error, Result};
use crate::scalar::Real;

/// Rest depth, gravity and water density.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PhysicalParams<T> {
    /// Depth at rest (m).
    pub h0: T,
    /// Gravitational acceleration (m/s²).
    pub g: T,
    /// Water density (kg/m³).
    pub rho: T,
}

impl<T: Real> PhysicalParams<T> {
    pub fn new(h0: T, g: T, rho: T) -> Result<Self> {
        if !(h0 > T::zero()) || !(g > T::zero()) || !(rho > T::zero()) {
            return Err(Error::domain(format!(
                "physical parameters must be positive: h0 = {h0}, g = {g}, rho = {rho}"
            )));
        }
        Ok(Self { h0, g, rho })
    }

    /// Long-wave speed at rest, `sqrt(g h0)`.
    pub fn rest_celerity(&self) -> T {
        (self.g * self.h0).sqrt()
    }
}
