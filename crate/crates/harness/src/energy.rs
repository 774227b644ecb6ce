//! Energy diagnostics (trapezoidal quadrature of the densities).

use crate::config::Model;
use heave_core::params::PhysicalParams;
use heave_core::state::FluidState;

fn trapezoid(vals: impl ExactSizeIterator<Item = f64>, dx: f64) -> f64 {
    let n = vals.len();
    let mut acc = 0.0;
    for (i, v) in vals.enumerate() {
        let w = if i == 0 || i == n - 1 { 0.5 } else { 1.0 };
        acc += w * v;
    }
    acc * dx
}

/// Fluid energy: `E_SW = rho (1/2 int q^2/h + 1/2 int g zeta^2)`, with the
/// Boussinesq variant replacing `q^2/h` by `q^2/h0 + (h0/3)(dq/dx)^2`.
///
/// The density factor puts the fluid and body energies in the same units, so
/// the coupled total is the monotone ledger quantity.
pub fn fluid_energy(
    state: &FluidState<f64>,
    params: &PhysicalParams<f64>,
    dx: f64,
    model: Model,
) -> f64 {
    let n = state.n_cells();
    let kinetic = |j: usize| -> f64 {
        let q = state.q[j];
        match model {
            Model::Nsw => q * q / state.depth(params, j),
            Model::Boussinesq => {
                let dq = if j == 0 {
                    (state.q[1] - state.q[0]) / dx
                } else if j == n - 1 {
                    (state.q[n - 1] - state.q[n - 2]) / dx
                } else {
                    (state.q[j + 1] - state.q[j - 1]) / (2.0 * dx)
                };
                q * q / params.h0 + params.h0 / 3.0 * dq * dq
            }
        }
    };
    let kin = trapezoid((0..n).map(kinetic), dx);
    let pot = trapezoid((0..n).map(|j| params.g * state.zeta[j] * state.zeta[j]), dx);
    0.5 * params.rho * (kin + pot)
}

/// Body energy `m g z_G + 1/2 m delta_dot^2`, with the potential measured
/// from the equilibrium height (`z_G := delta`).
pub fn solid_energy(mass: f64, g: f64, delta: f64, delta_dot: f64) -> f64 {
    mass * g * delta + 0.5 * mass * delta_dot * delta_dot
}
