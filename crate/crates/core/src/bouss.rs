//! Boussinesq extension: dispersive momentum operator with interior zeroing,
//! implicit banded solve, modified flux, and the same pressure source.
//!
//! The momentum unknown is `(D q)_j = q_j - (h0^2/3) d2_j q`, where `d2` is
//! the centred second difference divided by `dx^2` except on the band
//! `j_- - 2 ..= j_+ + 2` around the body and on the two outermost cells,
//! where it is zero (identity rows). The update
//! `(D U)^{n+1} = (D U)^n - alpha (F_{j+1/2} - F_{j-1/2}) + dt (0, S)` then
//! needs one tridiagonal solve per step; the factorisation is cached.

use crate::error::{Error, Result};
use crate::flux::FluxForm;
use crate::grid::{Grid, InteriorRegion};
use crate::nsw::{fill_fluxes, source_constants, BodyForcing, GhostPair, StepInfo, Workspace};
use crate::params::PhysicalParams;
use crate::scalar::Real;
use crate::state::FluidState;
use crate::tridiag::TridiagFactor;

/// The discrete operator `1 - (h0^2/3) d2` acting on discharge vectors.
#[derive(Debug, Clone)]
pub struct DispersiveOperator<T> {
    n_cells: usize,
    /// `h0^2 / (3 dx^2)`.
    coeff: T,
    /// Zeroed band `[band_lo, band_hi]` (empty when no body is present).
    band: Option<(usize, usize)>,
    factor: TridiagFactor<T>,
}

impl<T: Real> DispersiveOperator<T> {
    pub fn new(
        grid: &Grid<T>,
        params: &PhysicalParams<T>,
        region: Option<&InteriorRegion<T>>,
    ) -> Result<Self> {
        let n = grid.n_cells();
        let coeff = params.h0 * params.h0 / (T::of(3.0) * grid.dx() * grid.dx());
        let band = region.map(|r| (r.j_minus - 2, r.j_plus + 2));
        let mut lower = vec![T::zero(); n];
        let mut diag = vec![T::one(); n];
        let mut upper = vec![T::zero(); n];
        for j in 0..n {
            if Self::row_is_identity(n, band, j) {
                continue;
            }
            lower[j] = -coeff;
            diag[j] = T::one() + T::two() * coeff;
            upper[j] = -coeff;
        }
        let factor = TridiagFactor::new(&lower, &diag, &upper)?;
        Ok(Self {
            n_cells: n,
            coeff,
            band,
            factor,
        })
    }

    fn row_is_identity(n: usize, band: Option<(usize, usize)>, j: usize) -> bool {
        j == 0 || j == n - 1 || band.is_some_and(|(lo, hi)| lo <= j && j <= hi)
    }

    /// Whether `d2` is zeroed on cell `j`.
    pub fn is_zeroed(&self, j: usize) -> bool {
        Self::row_is_identity(self.n_cells, self.band, j)
    }

    /// Apply `q - (h0^2/3) d2 q` into `out`.
    pub fn apply(&self, q: &[T], out: &mut Vec<T>) {
        assert_eq!(q.len(), self.n_cells);
        out.resize(self.n_cells, T::zero());
        for j in 0..self.n_cells {
            out[j] = if self.is_zeroed(j) {
                q[j]
            } else {
                q[j] - self.coeff * (q[j - 1] - T::two() * q[j] + q[j + 1])
            };
        }
    }

    /// Solve `(1 - (h0^2/3) d2) q = rhs` in place.
    pub fn solve_in_place(&self, rhs: &mut [T]) {
        self.factor.solve_in_place(rhs);
    }
}

/// Boussinesq stepper with a cached dispersive factorisation.
#[derive(Debug)]
pub struct BoussStepper<T> {
    op: DispersiveOperator<T>,
    region: Option<InteriorRegion<T>>,
    rhs: Vec<T>,
    ws: Workspace<T>,
}

impl<T: Real> BoussStepper<T> {
    pub fn new(
        grid: &Grid<T>,
        params: &PhysicalParams<T>,
        region: Option<InteriorRegion<T>>,
    ) -> Result<Self> {
        let op = DispersiveOperator::new(grid, params, region.as_ref())?;
        Ok(Self {
            op,
            region,
            rhs: Vec::new(),
            ws: Workspace::new(),
        })
    }

    pub fn operator(&self) -> &DispersiveOperator<T> {
        &self.op
    }

    /// One Boussinesq step; `zdd` is the body acceleration second difference
    /// (required exactly when the stepper was built with a region).
    #[allow(clippy::too_many_arguments)]
    pub fn step(
        &mut self,
        state: &FluidState<T>,
        next: &mut FluidState<T>,
        grid: &Grid<T>,
        params: &PhysicalParams<T>,
        zdd: Option<T>,
        ghosts: GhostPair<T>,
        dt: T,
        cfl_limit: T,
    ) -> Result<StepInfo<T>> {
        if zdd.is_some() != self.region.is_some() {
            return Err(Error::config(
                "body acceleration must be supplied exactly when a wetted region exists"
                    .to_string(),
            ));
        }
        let n = state.n_cells();
        assert_eq!(next.n_cells(), n, "state buffers must have matching sizes");
        let alpha = dt / grid.dx();
        let Self {
            op,
            region,
            rhs,
            ws,
        } = self;
        let max_speed = fill_fluxes(
            state,
            params,
            region.as_ref(),
            &ghosts,
            alpha,
            FluxForm::Boussinesq,
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

        // Momentum right-hand side (D q)^n - alpha dF2 (+ source on the span).
        op.apply(&state.q, rhs);
        for (j, r) in rhs.iter_mut().enumerate() {
            *r -= alpha * (ws.f2[j + 1] - ws.f2[j]);
        }
        if let (Some(region), Some(zdd)) = (region.as_ref(), zdd) {
            let k = source_constants(state, grid, params, region, &ws.f2)?;
            // Span rows are identity rows of D, and the flux gradient cancels
            // against the unstarred D0 F2 of the source, as in the NSW step.
            for j in region.span() {
                rhs[j] = state.q[j] - dt * (k.avg_d0f2 + k.jump + zdd * (grid.x(j) - k.x_avg));
            }
        }
        op.solve_in_place(rhs);

        let (f1_l, f1_r) = (ws.f1[0], ws.f1[n]);
        for (j, (z, q)) in next.zeta.iter_mut().zip(next.q.iter_mut()).enumerate() {
            *z = state.zeta[j] - alpha * (ws.f1[j + 1] - ws.f1[j]);
            *q = rhs[j];
        }
        next.t = state.t + dt;
        next.check_depths(params)?;
        Ok(StepInfo {
            cfl,
            boundary_mass_flux: (f1_l, f1_r),
        })
    }
}

/// Convenience wrapper mirroring [`crate::nsw::step_nsw`]; assembles the
/// operator on every call, so prefer [`BoussStepper`] inside time loops.
#[allow(clippy::too_many_arguments)]
pub fn step_boussinesq<T: Real>(
    state: &FluidState<T>,
    next: &mut FluidState<T>,
    grid: &Grid<T>,
    params: &PhysicalParams<T>,
    body: Option<BodyForcing<'_, T>>,
    ghosts: GhostPair<T>,
    dt: T,
    cfl_limit: T,
) -> Result<StepInfo<T>> {
    let mut stepper = BoussStepper::new(grid, params, body.as_ref().map(|b| *b.region))?;
    stepper.step(
        state,
        next,
        grid,
        params,
        body.map(|b| b.zdd),
        ghosts,
        dt,
        cfl_limit,
    )
}


#[cfg(test)]
mod linearity_tests {
    use super::*;
    use crate::state::FluidState;

    /// step(U + V) - step(U) - step(V) + step(0) on zero-discharge states:
    /// the mass component is exactly additive (its flux is linear), and the
    /// momentum defect is purely the quadratic part of g h^2 / 2, so it
    /// scales as the product of the amplitudes.
    #[test]
    fn step_is_additive_up_to_the_quadratic_flux_term() {
        let p = crate::params::PhysicalParams::new(15.0, 9.81, 1000.0).unwrap();
        let grid = crate::grid::Grid::new(40.0_f64, 80).unwrap();
        let n = grid.n_cells();
        let make = |amp: f64, wavenumber: f64| {
            let mut s = FluidState::rest(n);
            for j in 0..n {
                s.zeta[j] = amp * (wavenumber * j as f64).sin();
            }
            s
        };
        let step = |s: &FluidState<f64>| {
            let mut out = s.clone();
            let mut stepper = BoussStepper::new(&grid, &p, None).unwrap();
            stepper
                .step(s, &mut out, &grid, &p, None, GhostPair::rest(), 0.01, 0.9)
                .unwrap();
            out
        };
        let defect = |eps: f64| {
            let u = make(0.4 * eps, 0.31);
            let v = make(0.7 * eps, 0.17);
            let mut uv = u.clone();
            for j in 0..n {
                uv.zeta[j] += v.zeta[j];
            }
            let (su, sv, suv, s0) = (step(&u), step(&v), step(&uv), step(&FluidState::rest(n)));
            let mut mass: f64 = 0.0;
            let mut momentum: f64 = 0.0;
            for j in 0..n {
                mass = mass.max((suv.zeta[j] - su.zeta[j] - sv.zeta[j] + s0.zeta[j]).abs());
                momentum = momentum.max((suv.q[j] - su.q[j] - sv.q[j] + s0.q[j]).abs());
            }
            (mass, momentum)
        };
        let (mass1, mom1) = defect(1.0);
        assert!(mass1 <= 1e-12, "mass update must be linear, defect {mass1}");
        assert!(
            mom1 > 1e-6,
            "momentum defect should expose the quadratic term"
        );
        let (_, mom_half) = defect(0.5);
        let ratio = mom1 / mom_half;
        assert!(
            (ratio - 4.0).abs() < 0.2,
            "quadratic scaling, got ratio {ratio}"
        );
    }
}
