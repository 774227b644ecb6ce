//! Ghost-cell boundary closure.
//!
//! Sinusoidal inflow enters through the linear incoming-characteristic
//! relation `q = zeta sqrt(g h0)`; outflow copies the adjacent cell
//! (zero-order extrapolation).

use crate::config::ForcingKind;
use heave_core::nsw::GhostPair;
use heave_core::params::PhysicalParams;
use heave_core::state::{CellState, FluidState};

/// Boundary forcing of a run.
#[derive(Debug, Clone, Copy)]
pub enum Forcing {
    /// Outflow on both ends.
    None,
    /// Sinusoidal inflow on the left end, outflow on the right.
    Sine { amplitude: f64, period: f64 },
}

impl Forcing {
    pub fn from_config(kind: ForcingKind, amplitude: f64, period: f64) -> Self {
        match kind {
            // A solitary scenario is an initial condition; both ends outflow.
            ForcingKind::None | ForcingKind::Solitary => Forcing::None,
            ForcingKind::Sine => Forcing::Sine { amplitude, period },
        }
    }

    /// Inflow state at time `t` (left end only).
    pub fn inflow(&self, t: f64, params: &PhysicalParams<f64>) -> Option<CellState<f64>> {
        match *self {
            Forcing::None => None,
            Forcing::Sine { amplitude, period } => {
                let zeta = amplitude * (2.0 * std::f64::consts::PI * t / period).sin();
                Some(CellState {
                    zeta,
                    q: zeta * params.rest_celerity(),
                })
            }
        }
    }

    /// Ghost pair for the state at time `t`.
    pub fn ghosts(
        &self,
        t: f64,
        state: &FluidState<f64>,
        params: &PhysicalParams<f64>,
    ) -> GhostPair<f64> {
        let n = state.n_cells();
        let left = self.inflow(t, params).unwrap_or_else(|| state.cell(0));
        GhostPair {
            left,
            right: state.cell(n - 1),
        }
    }
}
