//! Finite-volume stepper for the shallow water system with the floating body.
//!
//! The update is `U^{n+1}_j = U^n_j - alpha (F_{j+1/2} - F_{j-1/2}) + dt (0, S_j)`
//! with the adapted fluxes of [`crate::flux`]. The source `S_j` on the cells
//! `j_- <= j <= j_+` is the discrete Lagrange multiplier
//!
//! ```text
//! S_j = (D0 F2)*_j - zdd (x - <x>)_j - g [(h_{j+} - h_{j+-1}) - (h_{j-} - h_{j-+1})]
//!                                        / (dx * sharp_sum(1/h))
//! ```
//!
//! where starred parts and `<x>` use the half-weighted averages of
//! [`crate::average`]. On the source cells the flux gradient cancels the
//! unstarred `D0 F2` algebraically, so the momentum update is applied in the
//! cancelled form; this keeps the wetted-cell constraint exact in floating
//! point instead of merely up to flux-gradient roundoff.

use crate::average::{discrete_average, sharp_inverse_depth_sum};
use crate::error::{Error, Result};
use crate::flux::{lf_mass_flux, lf_momentum_flux, FluxForm};
use crate::grid::{Grid, InteriorRegion};
use crate::params::PhysicalParams;
use crate::scalar::Real;
use crate::state::{CellState, FluidState};

/// Ghost states closing the domain at both ends.
#[derive(Debug, Clone, Copy)]
pub struct GhostPair<T> {
    pub left: CellState<T>,
    pub right: CellState<T>,
}

impl<T: Real> GhostPair<T> {
    pub fn rest() -> Self {
        Self {
            left: CellState::rest(),
            right: CellState::rest(),
        }
    }
}

/// Body data entering one fluid step: the wetted range and the second
/// difference of the vertical position, `zdd = (d^{n+2} - 2 d^{n+1} + d^n)/dt^2`.
#[derive(Debug, Clone, Copy)]
pub struct BodyForcing<'a, T> {
    pub region: &'a InteriorRegion<T>,
    pub zdd: T,
}

/// Reusable interface-flux buffers.
#[derive(Debug, Default)]
pub struct Workspace<T> {
    pub(crate) f1: Vec<T>,
    pub(crate) f2: Vec<T>,
}

impl<T: Real> Workspace<T> {
    pub fn new() -> Self {
        Self {
            f1: Vec::new(),
            f2: Vec::new(),
        }
    }

    fn resize(&mut self, n_interfaces: usize) {
        self.f1.resize(n_interfaces, T::zero());
        self.f2.resize(n_interfaces, T::zero());
    }
}

/// Diagnostics of an accepted step.
#[derive(Debug, Clone, Copy)]
pub struct StepInfo<T> {
    /// `alpha * max_j (|u_j| + sqrt(g h_j))` actually realised.
    pub cfl: T,
    /// Mass fluxes through the domain ends (for the mass ledger).
    pub boundary_mass_flux: (T, T),
}

pub(crate) fn max_signal_speed<T: Real>(
    state: &FluidState<T>,
    ghosts: &GhostPair<T>,
    params: &PhysicalParams<T>,
) -> T {
    let speed = |c: CellState<T>| {
        let h = params.h0 + c.zeta;
        (c.q / h).abs() + (params.g * h).sqrt()
    };
    let mut m = speed(ghosts.left).max(speed(ghosts.right));
    for j in 0..state.n_cells() {
        m = m.max(speed(state.cell(j)));
    }
    m
}

/// Largest stable time step for the given state under `cfl_limit`, with a
/// roundoff guard so the per-step check cannot trip on the same state.
pub fn stable_dt<T: Real>(
    state: &FluidState<T>,
    ghosts: &GhostPair<T>,
    grid: &Grid<T>,
    params: &PhysicalParams<T>,
    cfl_limit: T,
) -> T {
    cfl_limit * grid.dx() / max_signal_speed(state, ghosts, params) * (T::one() - T::of(1e-12))
}

/// Fill the interface fluxes and return the largest signal speed seen.
#[allow(clippy::too_many_arguments)]
pub(crate) fn fill_fluxes<T: Real>(
    state: &FluidState<T>,
    params: &PhysicalParams<T>,
    region: Option<&InteriorRegion<T>>,
    ghosts: &GhostPair<T>,
    alpha: T,
    form: FluxForm,
    ws: &mut Workspace<T>,
) -> T {
    let n = state.n_cells();
    ws.resize(n + 1);
    let speed = |c: CellState<T>| {
        let h = params.h0 + c.zeta;
        (c.q / h).abs() + (params.g * h).sqrt()
    };
    let mut max_speed = speed(ghosts.right);
    for i in 0..=n {
        let left = if i == 0 {
            ghosts.left
        } else {
            state.cell(i - 1)
        };
        let right = if i == n { ghosts.right } else { state.cell(i) };
        max_speed = max_speed.max(speed(left));
        // Interface i sits between cells i-1 and i (flux index j + 1/2 with j = i - 1).
        let interior = region.is_some_and(|r| i >= 1 && r.interface_is_interior(i - 1));
        ws.f1[i] = lf_mass_flux(left, right, interior, alpha);
        ws.f2[i] = lf_momentum_flux(left, right, alpha, form, params);
    }
    max_speed
}

/// Constants of the pressure source, computed once per step.
#[derive(Debug, Clone, Copy)]
pub struct SourceConstants<T> {
    /// Half-weighted average of the flux gradient `<D0 F2>`.
    pub avg_d0f2: T,
    /// Vertical-wall jump term (constant over the source cells).
    pub jump: T,
    /// Half-weighted average abscissa `<x>`.
    pub x_avg: T,
}

pub(crate) fn source_constants<T: Real>(
    state: &FluidState<T>,
    grid: &Grid<T>,
    params: &PhysicalParams<T>,
    region: &InteriorRegion<T>,
    f2: &[T],
) -> Result<SourceConstants<T>> {
    let span = region.span();
    let dx = grid.dx();
    let h: Vec<T> = span.clone().map(|j| state.depth(params, j)).collect();
    let d0f2: Vec<T> = span.clone().map(|j| (f2[j + 1] - f2[j]) / dx).collect();
    let x: Vec<T> = span.clone().map(|j| grid.x(j)).collect();
    let inv_sum = sharp_inverse_depth_sum(&h)?;
    let avg_d0f2 = discrete_average(&d0f2, &h)?;
    let x_avg = discrete_average(&x, &h)?;
    let (jm, jp) = (region.j_minus, region.j_plus);
    let jump_num = (state.depth(params, jp) - state.depth(params, jp - 1))
        - (state.depth(params, jm) - state.depth(params, jm + 1));
    let jump = params.g * jump_num / (dx * inv_sum);
    Ok(SourceConstants {
        avg_d0f2,
        jump,
        x_avg,
    })
}

/// The discrete Lagrange-multiplier source `S_j` for `j_- <= j <= j_+`, given
/// the interface momentum fluxes `f2` (`f2[i]` between cells `i-1` and `i`).
pub fn pressure_source<T: Real>(
    state: &FluidState<T>,
    grid: &Grid<T>,
    params: &PhysicalParams<T>,
    region: &InteriorRegion<T>,
    zdd: T,
    f2: &[T],
) -> Result<Vec<T>> {
    let k = source_constants(state, grid, params, region, f2)?;
    let dx = grid.dx();
    Ok(region
        .span()
        .map(|j| {
            let d0f2 = (f2[j + 1] - f2[j]) / dx;
            d0f2 - k.avg_d0f2 - zdd * (grid.x(j) - k.x_avg) - k.jump
        })
        .collect())
}

#[allow(clippy::too_many_arguments)]
pub(crate) fn step_conservative<T: Real>(
    state: &FluidState<T>,
    next: &mut FluidState<T>,
    grid: &Grid<T>,
    params: &PhysicalParams<T>,
    body: Option<BodyForcing<'_, T>>,
    ghosts: GhostPair<T>,
    dt: T,
    cfl_limit: T,
    form: FluxForm,
    ws: &mut Workspace<T>,
) -> Result<StepInfo<T>> {
    let n = state.n_cells();
    assert_eq!(next.n_cells(), n, "state buffers must have matching sizes");
    let alpha = dt / grid.dx();
    let max_speed = fill_fluxes(
        state,
        params,
        body.as_ref().map(|b| b.region),
        &ghosts,
        alpha,
        form,
        ws,
    );
    let cfl = alpha * max_speed;
    if cfl > cfl_limit {
        return Err(Error::Cfl {
            time: state.t.as_f64(),
            cfl: cfl.as_f64(),
            limit: cfl_limit.as_f64(),
        });
    }

    for j in 0..n {
        next.zeta[j] = state.zeta[j] - alpha * (ws.f1[j + 1] - ws.f1[j]);
        next.q[j] = state.q[j] - alpha * (ws.f2[j + 1] - ws.f2[j]);
    }

    if let Some(b) = body {
        let k = source_constants(state, grid, params, b.region, &ws.f2)?;
        // On the source cells the flux gradient cancels against the unstarred
        // D0 F2 of S_j; apply the cancelled form.
        for j in b.region.span() {
            next.q[j] = state.q[j] - dt * (k.avg_d0f2 + k.jump + b.zdd * (grid.x(j) - k.x_avg));
        }
    }

    next.t = state.t + dt;
    next.check_depths(params)?;
    Ok(StepInfo {
        cfl,
        boundary_mass_flux: (ws.f1[0], ws.f1[n]),
    })
}

/// One shallow-water step. `body` carries the wetted range and the body
/// acceleration; `ghosts` close the domain.
#[allow(clippy::too_many_arguments)]
pub fn step_nsw<T: Real>(
    state: &FluidState<T>,
    next: &mut FluidState<T>,
    grid: &Grid<T>,
    params: &PhysicalParams<T>,
    body: Option<BodyForcing<'_, T>>,
    ghosts: GhostPair<T>,
    dt: T,
    cfl_limit: T,
    ws: &mut Workspace<T>,
) -> Result<StepInfo<T>> {
    step_conservative(
        state,
        next,
        grid,
        params,
        body,
        ghosts,
        dt,
        cfl_limit,
        FluxForm::Nsw,
        ws,
    )
}

/// Compatibility of the initial data with the wetted-cell constraint.
#[derive(Debug, Clone, Copy)]
pub struct CompatReport<T> {
    /// Max over interior cells of `|h^0_j - h_w(x_j; delta0)|`.
    pub surface_mismatch: T,
    /// Max over interior cells of `|(delta1 - delta0) + alpha/2 (q_{j+1} - q_{j-1})|`.
    pub divergence_mismatch: T,
    pub ok: bool,
}

impl<T: Real> CompatReport<T> {
    pub fn max_violation(&self) -> T {
        self.surface_mismatch.max(self.divergence_mismatch)
    }
}

/// Check the two-level compatibility condition: the interior surface matches
/// the hull and the first body move matches the initial interior discharge
/// divergence. Reports, never mutates.
#[allow(clippy::too_many_arguments)]
pub fn check_compatibility<T: Real>(
    state0: &FluidState<T>,
    grid: &Grid<T>,
    params: &PhysicalParams<T>,
    region: &InteriorRegion<T>,
    hull_zeta_eq: impl Fn(T) -> T,
    delta0: T,
    delta1: T,
    dt: T,
) -> CompatReport<T> {
    let alpha = dt / grid.dx();
    let dd = delta1 - delta0;
    let mut surface = T::zero();
    let mut diverg = T::zero();
    for j in region.interior_cells() {
        let hw = params.h0 + hull_zeta_eq(grid.x(j)) + delta0;
        surface = surface.max((state0.depth(params, j) - hw).abs());
        let flux_div = alpha * T::half() * (state0.q[j + 1] - state0.q[j - 1]);
        diverg = diverg.max((dd + flux_div).abs());
    }
    let tol = T::of(1e-11) * params.h0;
    CompatReport {
        surface_mismatch: surface,
        divergence_mismatch: diverg,
        ok: surface <= tol && diverg <= tol,
    }
}
