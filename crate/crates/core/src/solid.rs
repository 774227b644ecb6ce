//! Body kinematics and dynamics: prescribed heave, the free-float coupling,
//! and the vertical force decomposition.
//!
//! The body advances on three time levels: with `delta^n` and `delta^{n+1}`
//! known, the coupled acceleration gives `delta^{n+2}`, and the second
//! difference `(delta^{n+2} - 2 delta^{n+1} + delta^n)/dt^2` is exactly the
//! `zdd` fed to the pressure source of the fluid step.

use crate::average::discrete_average;
use crate::error::{Error, Result};
use crate::flux::FluxForm;
use crate::geometry::BodyGeometry;
use crate::grid::{Grid, InteriorRegion};
use crate::params::PhysicalParams;
use crate::scalar::Real;
use crate::state::FluidState;

/// Two consecutive displacement levels of the body.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BodyState<T> {
    /// `delta_G^n` (m).
    pub delta_n: T,
    /// `delta_G^{n+1}` (m).
    pub delta_np1: T,
}

impl<T: Real> BodyState<T> {
    /// Rest start: `delta^1 = delta^0`.
    pub fn at_rest(delta0: T) -> Self {
        Self {
            delta_n: delta0,
            delta_np1: delta0,
        }
    }

    /// Start with velocity `v0`: `delta^1 = delta^0 + dt v0`.
    pub fn with_velocity(delta0: T, v0: T, dt: T) -> Self {
        Self {
            delta_n: delta0,
            delta_np1: delta0 + dt * v0,
        }
    }

    /// Discrete velocity `(delta^{n+1} - delta^n)/dt`.
    pub fn velocity(&self, dt: T) -> T {
        (self.delta_np1 - self.delta_n) / dt
    }
}

/// Sinusoidal heave profile `z(t) = z0 + (A/2)(cos(2 pi t / T) - 1)`.
///
/// `amplitude` is the peak-to-peak excursion; the start is at rest
/// (`z(0) = z0`, `z'(0) = 0`), compatible with still water.
#[derive(Debug, Clone, Copy)]
pub struct HeaveProfile<T> {
    pub z0: T,
    pub amplitude: T,
    pub period: T,
}

impl<T: Real> HeaveProfile<T> {
    pub fn new(z0: T, amplitude: T, period: T) -> Result<Self> {
        if !(period > T::zero()) {
            return Err(Error::config(format!(
                "oscillation period must be positive, got {period}"
            )));
        }
        Ok(Self {
            z0,
            amplitude,
            period,
        })
    }

    fn omega(&self) -> T {
        T::two() * T::PI() / self.period
    }

    /// Displacement from the start position, `delta(t) = z(t) - z0`.
    pub fn delta(&self, t: T) -> T {
        self.amplitude * T::half() * ((self.omega() * t).cos() - T::one())
    }

    /// `(z, z', z'')` at time `t`.
    pub fn evaluate(&self, t: T) -> (T, T, T) {
        let w = self.omega();
        let (s, c) = (w * t).sin_cos();
        let half_a = self.amplitude * T::half();
        (
            self.z0 + half_a * (c - T::one()),
            -half_a * w * s,
            -half_a * w * w * c,
        )
    }
}

/// Vertical force components per unit width (N/m).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ForceBreakdown<T> {
    /// Restoring force `-c delta` (weight plus Archimedes).
    pub restoring: T,
    /// Added-mass force `-m_a(delta) ddot delta`.
    pub added_mass: T,
    /// Damping and excitation `rho g (zeta_{e,+} x*_+ - zeta_{e,-} x*_-)`.
    pub damping_excitation: T,
    /// Nonlinear correction `F_NL`.
    pub nonlinear: T,
}

impl<T: Real> ForceBreakdown<T> {
    pub fn zero() -> Self {
        Self {
            restoring: T::zero(),
            added_mass: T::zero(),
            damping_excitation: T::zero(),
            nonlinear: T::zero(),
        }
    }

    /// Total vertical force; equals `m ddot delta` exactly by construction.
    pub fn total(&self) -> T {
        self.restoring + self.added_mass + self.damping_excitation + self.nonlinear
    }
}

/// Discrete nonlinear force `F_NL = rho alpha(delta) < x* D(q_i^2 / h) >`.
///
/// The advective denominator is the local depth for the shallow water model
/// and `h0` for the Boussinesq model. Every stencil stays strictly inside
/// the wetted range `j_- + 1 ..= j_+ - 1`: the bracketing cells carry the
/// exterior surface, and the wall jump in `q^2/h` is O(1), so touching them
/// would pollute the force by an O(1) amount that refinement cannot remove.
/// The derivative is centred, one-sided at the first/last interior cell.
pub fn nonlinear_force<T: Real>(
    state: &FluidState<T>,
    grid: &Grid<T>,
    params: &PhysicalParams<T>,
    region: &InteriorRegion<T>,
    alpha_coeff: T,
    form: FluxForm,
) -> Result<T> {
    let interior = region.interior_cells();
    let dx = grid.dx();
    let h: Vec<T> = interior.clone().map(|j| state.depth(params, j)).collect();
    let g: Vec<T> = interior
        .clone()
        .map(|j| {
            let q = state.q[j];
            match form {
                FluxForm::Nsw => q * q / state.depth(params, j),
                FluxForm::Boussinesq => q * q / params.h0,
            }
        })
        .collect();
    let m = g.len();
    // <x> over the full span, as in the damping term.
    let h_span: Vec<T> = region.span().map(|j| state.depth(params, j)).collect();
    let x_span: Vec<T> = region.span().map(|j| grid.x(j)).collect();
    let x_avg = discrete_average(&x_span, &h_span)?;
    let mut prod = vec![T::zero(); m];
    for i in 0..m {
        let d = if i == 0 {
            (g[1] - g[0]) / dx
        } else if i == m - 1 {
            (g[m - 1] - g[m - 2]) / dx
        } else {
            (g[i + 1] - g[i - 1]) / (T::two() * dx)
        };
        prod[i] = (grid.x(region.j_minus + 1 + i) - x_avg) * d;
    }
    Ok(params.rho * alpha_coeff * discrete_average(&prod, &h)?)
}

/// Acceleration-independent pieces of the vertical force balance.
#[derive(Debug, Clone, Copy)]
pub struct ForceInputs<T> {
    pub restoring: T,
    pub damping_excitation: T,
    pub nonlinear: T,
    /// `m_a(delta)`.
    pub added_mass: T,
}

impl<T: Real> ForceInputs<T> {
    /// Complete the decomposition once the acceleration is known.
    pub fn breakdown(&self, accel: T) -> ForceBreakdown<T> {
        ForceBreakdown {
            restoring: self.restoring,
            added_mass: -self.added_mass * accel,
            damping_excitation: self.damping_excitation,
            nonlinear: self.nonlinear,
        }
    }
}

/// Evaluate `-c delta`, the damping-excitation term, `F_NL` and `m_a(delta)`
/// on the current fluid state.
pub fn force_inputs<T: Real>(
    state: &FluidState<T>,
    grid: &Grid<T>,
    params: &PhysicalParams<T>,
    region: &InteriorRegion<T>,
    body: &BodyGeometry<T>,
    delta: T,
    form: FluxForm,
) -> Result<ForceInputs<T>> {
    let m_a = body.added_mass(delta)?;
    let alpha_coeff = body.alpha_coefficient(delta)?;
    let f_nl = nonlinear_force(state, grid, params, region, alpha_coeff, form)?;

    let h: Vec<T> = region.span().map(|j| state.depth(params, j)).collect();
    let x: Vec<T> = region.span().map(|j| grid.x(j)).collect();
    let x_avg = discrete_average(&x, &h)?;
    let (jm, jp) = (region.j_minus, region.j_plus);
    let x_star_minus = grid.x(jm) - x_avg;
    let x_star_plus = grid.x(jp) - x_avg;
    let f_de =
        params.rho * params.g * (state.zeta[jp] * x_star_plus - state.zeta[jm] * x_star_minus);

    Ok(ForceInputs {
        restoring: -body.stiffness() * delta,
        damping_excitation: f_de,
        nonlinear: f_nl,
        added_mass: m_a,
    })
}

/// Depth-weighted average discharge `<q>` over the span.
pub fn average_discharge<T: Real>(
    state: &FluidState<T>,
    params: &PhysicalParams<T>,
    region: &InteriorRegion<T>,
) -> Result<T> {
    let h: Vec<T> = region.span().map(|j| state.depth(params, j)).collect();
    let q: Vec<T> = region.span().map(|j| state.q[j]).collect();
    discrete_average(&q, &h)
}

/// Diagnostic nonlinear term of the averaged interior momentum balance
/// `d<q>/dt = -g (zeta_{e,+} - zeta_{e,-}) / alpha + H_NL`, with
/// `H_NL = (<x/h> - <x><1/h>) delta_dot^2 - <D(q_i^2/h)>`.
///
/// The interior discharge evolves through the fluid stepper itself, which is
/// equivalent; this term exists only to cross-check that evolution in tests.
pub fn h_nl_diagnostic<T: Real>(
    state: &FluidState<T>,
    grid: &Grid<T>,
    params: &PhysicalParams<T>,
    region: &InteriorRegion<T>,
    delta_dot: T,
    form: FluxForm,
) -> Result<T> {
    let h: Vec<T> = region.span().map(|j| state.depth(params, j)).collect();
    let x: Vec<T> = region.span().map(|j| grid.x(j)).collect();
    let x_over_h: Vec<T> = x.iter().zip(&h).map(|(&x, &h)| x / h).collect();
    let inv_h: Vec<T> = h.iter().map(|&h| T::one() / h).collect();
    let drift = (discrete_average(&x_over_h, &h)?
        - discrete_average(&x, &h)? * discrete_average(&inv_h, &h)?)
        * delta_dot
        * delta_dot;
    // <D(q^2/h)> on the interior stencil, as in the nonlinear force.
    let interior = region.interior_cells();
    let dx = grid.dx();
    let h_int: Vec<T> = interior.clone().map(|j| state.depth(params, j)).collect();
    let g: Vec<T> = interior
        .clone()
        .map(|j| {
            let q = state.q[j];
            match form {
                FluxForm::Nsw => q * q / state.depth(params, j),
                FluxForm::Boussinesq => q * q / params.h0,
            }
        })
        .collect();
    let m = g.len();
    let d: Vec<T> = (0..m)
        .map(|i| {
            if i == 0 {
                (g[1] - g[0]) / dx
            } else if i == m - 1 {
                (g[m - 1] - g[m - 2]) / dx
            } else {
                (g[i + 1] - g[i - 1]) / (T::two() * dx)
            }
        })
        .collect();
    Ok(drift - discrete_average(&d, &h_int)?)
}

/// Result of the coupled body update at one step.
#[derive(Debug, Clone, Copy)]
pub struct BodyDynamics<T> {
    /// `ddot delta^{n+1}` from the implicit added-mass balance.
    pub accel: T,
    pub forces: ForceBreakdown<T>,
    /// `m_a(delta^n)` used in the balance.
    pub added_mass: T,
}

/// Solve `(m + m_a(delta)) ddot delta = -c delta + rho g (zeta_{e,+} x*_+ -
/// zeta_{e,-} x*_-) + F_NL` for the acceleration; the added-mass term stays
/// on the left (implicit treatment).
pub fn coupled_acceleration<T: Real>(
    state: &FluidState<T>,
    grid: &Grid<T>,
    params: &PhysicalParams<T>,
    region: &InteriorRegion<T>,
    body: &BodyGeometry<T>,
    delta: T,
    form: FluxForm,
) -> Result<BodyDynamics<T>> {
    let inputs = force_inputs(state, grid, params, region, body, delta, form)?;
    let accel = (inputs.restoring + inputs.damping_excitation + inputs.nonlinear)
        / (body.mass + inputs.added_mass);
    Ok(BodyDynamics {
        accel,
        forces: inputs.breakdown(accel),
        added_mass: inputs.added_mass,
    })
}

/// Leapfrog advance `delta^{n+2} = 2 delta^{n+1} - delta^n + dt^2 ddot delta^{n+1}`,
/// with the grounding guard applied to the new level.
pub fn advance_body<T: Real>(
    bs: &BodyState<T>,
    accel: T,
    dt: T,
    body: &BodyGeometry<T>,
    t_next: T,
) -> Result<BodyState<T>> {
    let delta_npp = T::two() * bs.delta_np1 - bs.delta_n + dt * dt * accel;
    if body.check_admissible(delta_npp).is_err() {
        return Err(Error::Grounding {
            time: t_next.as_f64(),
            min_depth: body.min_wetted_depth(delta_npp).as_f64(),
        });
    }
    Ok(BodyState {
        delta_n: bs.delta_np1,
        delta_np1: delta_npp,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{contact_elevation, damping_nu};

    fn params() -> PhysicalParams<f64> {
        PhysicalParams::new(15.0, 9.81, 1000.0).unwrap()
    }

    #[test]
    fn prescribed_profile_values() {
        let prof = HeaveProfile::new(4.57_f64, 2.0, 10.0).unwrap();
        let (z, v, a) = prof.evaluate(0.0);
        assert_eq!(z, 4.57);
        assert_eq!(v, 0.0);
        let w = 2.0 * std::f64::consts::PI / 10.0;
        assert!((a + w * w).abs() < 1e-12);
        let (z_half, _, _) = prof.evaluate(5.0);
        assert!((z_half - (4.57 - 2.0)).abs() < 1e-12);
        assert!(HeaveProfile::new(4.57_f64, 2.0, 0.0).is_err());
    }

    #[test]
    fn prescribed_acceleration_matches_second_difference() {
        let prof = HeaveProfile::new(4.57_f64, 2.0, 10.0).unwrap();
        let dt = 1e-4;
        for t in [0.0, 1.3, 4.9] {
            let (_, _, a) = prof.evaluate(t);
            let dd = (prof.delta(t + dt) - 2.0 * prof.delta(t) + prof.delta(t - dt)) / (dt * dt);
            assert!(
                (dd - a).abs() < 1e-6 * a.abs().max(1.0),
                "t = {t}: {dd} vs {a}"
            );
        }
    }

    fn setup() -> (Grid<f64>, InteriorRegion<f64>, BodyGeometry<f64>) {
        let grid = Grid::new(40.0, 80).unwrap();
        let region = InteriorRegion::locate(&grid, 10.0, 30.0).unwrap();
        let body = BodyGeometry::arc_body(params(), 10.0, 20.0, 0.5).unwrap();
        (grid, region, body)
    }

    fn hull_state(
        grid: &Grid<f64>,
        region: &InteriorRegion<f64>,
        body: &BodyGeometry<f64>,
        delta: f64,
    ) -> FluidState<f64> {
        let mut s = FluidState::rest(grid.n_cells());
        for j in region.interior_cells() {
            s.zeta[j] = body.hull_elevation(grid.x(j), delta).unwrap();
        }
        s
    }

    #[test]
    fn nonlinear_force_vanishes_at_rest() {
        let (grid, region, body) = setup();
        let state = hull_state(&grid, &region, &body, 0.0);
        let f = nonlinear_force(&state, &grid, &params(), &region, 1.9, FluxForm::Nsw).unwrap();
        assert_eq!(f, 0.0);
    }

    #[test]
    fn nonlinear_force_golden_vector() {
        let p = params();
        let grid = Grid::new(4.0, 8).unwrap();
        let region = InteriorRegion::locate(&grid, 1.1, 2.9).unwrap();
        let state = FluidState {
            zeta: [15.0, 15.2, 14.9, 13.7, 12.9, 13.3, 14.6, 15.1, 15.0]
                .iter()
                .map(|h| h - 15.0)
                .collect(),
            q: vec![0.0, 0.3, -0.2, 0.5, 0.1, -0.4, 0.2, 0.0, 0.1],
            t: 0.0,
        };
        let f = nonlinear_force(&state, &grid, &p, &region, 1.37, FluxForm::Nsw).unwrap();
        assert!((f - 9.636051021258206).abs() < 1e-9, "{f}");
    }

    #[test]
    fn nonlinear_force_rigid_heave_closed_form() {
        // q = -(x - x0) v over constant depth H: F_NL ~ 2 rho alpha v^2 Var / H.
        let p = params();
        let grid = Grid::new(40.0, 800).unwrap();
        let region = InteriorRegion::locate(&grid, 10.0, 30.0).unwrap();
        let hh = 10.0;
        let mut state = FluidState::rest(grid.n_cells());
        for z in state.zeta.iter_mut() {
            *z = hh - 15.0;
        }
        let v = 0.3;
        for j in region.span() {
            state.q[j] = -(grid.x(j) - 20.0) * v;
        }
        let alpha = 20.0 / hh;
        let expect = 2.0 * 1000.0 * alpha * v * v * (400.0 / 12.0) / hh;
        let f = nonlinear_force(&state, &grid, &p, &region, alpha, FluxForm::Nsw).unwrap();
        assert!((f - expect).abs() < 0.01 * expect, "{f} vs {expect}");
    }

    #[test]
    fn equilibrium_rest_has_zero_acceleration_and_forces() {
        let (grid, region, body) = setup();
        let state = hull_state(&grid, &region, &body, 0.0);
        let dyn_ =
            coupled_acceleration(&state, &grid, &params(), &region, &body, 0.0, FluxForm::Nsw)
                .unwrap();
        assert_eq!(dyn_.accel, 0.0);
        assert_eq!(dyn_.forces.total(), 0.0);
    }

    #[test]
    fn displaced_rest_restores_toward_equilibrium() {
        let (grid, region, body) = setup();
        let delta = 0.5;
        let state = hull_state(&grid, &region, &body, delta);
        let dyn_ = coupled_acceleration(
            &state,
            &grid,
            &params(),
            &region,
            &body,
            delta,
            FluxForm::Nsw,
        )
        .unwrap();
        assert!(dyn_.accel < 0.0);
        let expect = -body.stiffness() * delta / (body.mass + dyn_.added_mass);
        assert!((dyn_.accel - expect).abs() < 1e-12 * expect.abs());
    }

    #[test]
    fn newton_residual_is_roundoff() {
        let (grid, region, body) = setup();
        let mut state = hull_state(&grid, &region, &body, -0.3);
        // Some arbitrary exterior wave field and interior discharge.
        for j in 0..state.n_cells() {
            if !(region.interior_cells()).contains(&j) {
                state.zeta[j] = 0.2 * (0.17 * j as f64).sin();
            }
            state.q[j] = 0.4 * (0.11 * j as f64).cos();
        }
        let dyn_ = coupled_acceleration(
            &state,
            &grid,
            &params(),
            &region,
            &body,
            -0.3,
            FluxForm::Nsw,
        )
        .unwrap();
        let resid = body.mass * dyn_.accel - dyn_.forces.total();
        let scale = dyn_
            .forces
            .total()
            .abs()
            .max(body.mass * dyn_.accel.abs())
            .max(1.0);
        assert!(resid.abs() <= 1e-10 * scale, "residual {resid}");
    }

    #[test]
    fn symmetric_contact_elevation_reproduces_the_nonlinear_damping() {
        // Both contact cells carry zeta_e from the contact-root relation: the
        // damping-excitation term must equal -nu(v) since the contacts sit on
        // cell centres here.
        let (grid, region, body) = setup();
        let p = params();
        let v = 0.4;
        let zeta_e = contact_elevation(v, &body).unwrap();
        let mut state = hull_state(&grid, &region, &body, 0.0);
        state.zeta[region.j_minus] = zeta_e;
        state.zeta[region.j_plus] = zeta_e;
        let dyn_ =
            coupled_acceleration(&state, &grid, &p, &region, &body, 0.0, FluxForm::Nsw).unwrap();
        let nu = damping_nu(v, &body).unwrap();
        assert!(
            (dyn_.forces.damping_excitation + nu).abs() <= 1e-10 * nu.abs(),
            "{} vs {}",
            dyn_.forces.damping_excitation,
            -nu
        );
    }

    #[test]
    fn advance_recursions() {
        let (_, _, body) = setup();
        // Zero acceleration: linear continuation.
        let bs = BodyState {
            delta_n: 0.1,
            delta_np1: 0.3,
        };
        let next = advance_body(&bs, 0.0, 0.01, &body, 0.01).unwrap();
        assert!((next.delta_np1 - 0.5).abs() < 1e-15);
        assert_eq!(next.delta_n, 0.3);
        // Rest start with acceleration a: delta^2 = delta^0 + dt^2 a.
        let bs = BodyState::at_rest(-1.0);
        let next = advance_body(&bs, 2.0, 0.1, &body, 0.1).unwrap();
        assert!((next.delta_np1 - (-1.0 + 0.01 * 2.0)).abs() < 1e-15);
        // Constant acceleration from rest: delta^n = delta^0 + a dt^2 n(n-1)/2.
        let a = 0.05;
        let dt = 0.02;
        let mut bs = BodyState::at_rest(0.0);
        for n in 0..50 {
            bs = advance_body(&bs, a, dt, &body, dt * n as f64).unwrap();
        }
        // After 50 advances delta_np1 is the level n = 51.
        let n = 51.0;
        let expect = a * dt * dt * n * (n - 1.0) / 2.0;
        assert!(
            (bs.delta_np1 - expect).abs() < 1e-12,
            "{} vs {expect}",
            bs.delta_np1
        );
    }

    #[test]
    fn grounding_is_detected_with_a_timestamp() {
        let (_, _, body) = setup();
        let bs = BodyState::at_rest(0.0);
        let err = advance_body(&bs, -1e6, 0.1, &body, 7.5).unwrap_err();
        match err {
            Error::Grounding { time, .. } => assert_eq!(time, 7.5),
            other => panic!("expected grounding, got {other}"),
        }
    }

    #[test]
    fn body_state_constructors() {
        let bs = BodyState::at_rest(-2.0_f64);
        assert_eq!(bs.velocity(0.1), 0.0);
        let bs = BodyState::with_velocity(-2.0_f64, 0.5, 0.1);
        assert!((bs.velocity(0.1) - 0.5).abs() < 1e-12);
    }
}
