//! Per-cell fluid state.

use crate::error::{Error, Result};
use crate::params::PhysicalParams;
use crate::scalar::Real;

/// Surface elevation and discharge of one cell (also used for ghost cells).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CellState<T> {
    pub zeta: T,
    pub q: T,
}

impl<T: Real> CellState<T> {
    pub fn rest() -> Self {
        Self {
            zeta: T::zero(),
            q: T::zero(),
        }
    }

    pub fn depth(&self, params: &PhysicalParams<T>) -> T {
        params.h0 + self.zeta
    }
}

/// Fluid state at one time level: elevation `zeta` and discharge `q` per cell.
///
/// The water depth is derived as `h = h0 + zeta` (flat bottom).
#[derive(Debug, Clone, PartialEq)]
pub struct FluidState<T> {
    pub zeta: Vec<T>,
    pub q: Vec<T>,
    pub t: T,
}

impl<T: Real> FluidState<T> {
    /// Fluid at rest on `n_cells` cells.
    pub fn rest(n_cells: usize) -> Self {
        Self {
            zeta: vec![T::zero(); n_cells],
            q: vec![T::zero(); n_cells],
            t: T::zero(),
        }
    }

    pub fn n_cells(&self) -> usize {
        self.zeta.len()
    }

    pub fn depth(&self, params: &PhysicalParams<T>, j: usize) -> T {
        params.h0 + self.zeta[j]
    }

    pub fn cell(&self, j: usize) -> CellState<T> {
        CellState {
            zeta: self.zeta[j],
            q: self.q[j],
        }
    }

    /// Total water column `sum_j h_j dx` (uniform cell weights).
    pub fn total_mass(&self, params: &PhysicalParams<T>, dx: T) -> T {
        let sum: T = self.zeta.iter().map(|&z| params.h0 + z).sum();
        sum * dx
    }

    /// Fail if any depth is non-positive.
    pub fn check_depths(&self, params: &PhysicalParams<T>) -> Result<()> {
        for (j, &z) in self.zeta.iter().enumerate() {
            let h = params.h0 + z;
            if !(h > T::zero()) {
                return Err(Error::Blowup {
                    time: self.t.as_f64(),
                    cell: j,
                    depth: h.as_f64(),
                });
            }
        }
        Ok(())
    }
}
