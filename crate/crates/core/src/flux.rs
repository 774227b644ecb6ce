//! Adapted Lax–Friedrichs interface fluxes.
//!
//! The mass flux drops its diffusive term on interfaces under the body
//! (`j_- <= j < j_+`); the momentum flux keeps the standard form everywhere.

use crate::params::PhysicalParams;
use crate::scalar::Real;
use crate::state::CellState;

/// Momentum flux variant: the advective term divides by `h` for the shallow
/// water system and by the rest depth `h0` for the Boussinesq system.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FluxForm {
    Nsw,
    Boussinesq,
}

/// Physical momentum flux `q^2 / h (or h0) + g h^2 / 2` of one state.
pub fn physical_momentum_flux<T: Real>(
    cell: CellState<T>,
    form: FluxForm,
    params: &PhysicalParams<T>,
) -> T {
    let h = params.h0 + cell.zeta;
    let advect = match form {
        FluxForm::Nsw => cell.q * cell.q / h,
        FluxForm::Boussinesq => cell.q * cell.q / params.h0,
    };
    advect + T::half() * params.g * h * h
}

/// Mass flux `(q_l + q_r)/2 - (h_r - h_l)/(2 alpha)`, with the diffusive term
/// dropped when `interior_interface` is set.
pub fn lf_mass_flux<T: Real>(
    left: CellState<T>,
    right: CellState<T>,
    interior_interface: bool,
    alpha: T,
) -> T {
    let centered = T::half() * (right.q + left.q);
    if interior_interface {
        centered
    } else {
        centered - (right.zeta - left.zeta) / (T::two() * alpha)
    }
}

/// Momentum flux `(F2_l + F2_r)/2 - (q_r - q_l)/(2 alpha)`.
pub fn lf_momentum_flux<T: Real>(
    left: CellState<T>,
    right: CellState<T>,
    alpha: T,
    form: FluxForm,
    params: &PhysicalParams<T>,
) -> T {
    T::half()
        * (physical_momentum_flux(right, form, params) + physical_momentum_flux(left, form, params))
        - (right.q - left.q) / (T::two() * alpha)
}
