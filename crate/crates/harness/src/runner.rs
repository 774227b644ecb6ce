//! Scenario assembly and the coupled time loop.
//!
//! Per step: compute the body acceleration (free bodies through the implicit
//! added-mass balance), advance the body two-level window, feed the second
//! difference into the fluid source, step the fluid, then check the wetted
//! constraint and the mass ledger. The run never continues silently past an
//! invariant breach.

use crate::boundary::Forcing;
use crate::config::{BodyMode, ForcingKind, Model, ScenarioConfig};
use crate::energy;
use crate::error::{HarnessError, Result};
use crate::output::OutputWriter;
use heave_core::bouss::BoussStepper;
use heave_core::exact::SolitaryWave;
use heave_core::flux::FluxForm;
use heave_core::geometry::BodyGeometry;
use heave_core::nsw::{check_compatibility, step_nsw, BodyForcing, Workspace};
use heave_core::solid::{
    advance_body, coupled_acceleration, force_inputs, BodyState, ForceBreakdown, HeaveProfile,
};
use heave_core::{Body64, Grid64, Params64, Region64, State64};

/// Body placement plus its motion law.
#[derive(Debug, Clone)]
pub struct BodySetup {
    pub geometry: Body64,
    pub region: Region64,
    pub motion: BodyMotion,
}

#[derive(Debug, Clone)]
pub enum BodyMotion {
    Fixed {
        delta: f64,
    },
    Prescribed {
        profile: HeaveProfile<f64>,
        offset: f64,
    },
    Free {
        delta0: f64,
    },
}

/// A validated, ready-to-run scenario.
#[derive(Debug, Clone)]
pub struct Scenario {
    pub config: ScenarioConfig,
    pub params: Params64,
    pub grid: Grid64,
    pub body: Option<BodySetup>,
    pub forcing: Forcing,
    /// Fixed time step (`alpha * dx`); `None` means adaptive from `cfl`.
    pub fixed_dt: Option<f64>,
}

impl Scenario {
    pub fn build(config: &ScenarioConfig) -> Result<Self> {
        let params = Params64::new(config.h0, config.g, config.rho)
            .map_err(|e| HarnessError::config(e.to_string()))?;
        let grid = Grid64::from_spacing(config.length, config.dx)
            .map_err(|e| HarnessError::config(e.to_string()))?;
        let body = match config.body {
            BodyMode::Absent => None,
            mode => {
                let geometry =
                    BodyGeometry::arc_body(params, config.radius, config.x0, config.density_ratio)
                        .map_err(|e| HarnessError::config(e.to_string()))?;
                let region = Region64::locate(&grid, geometry.x_minus(), geometry.x_plus())
                    .map_err(|e| HarnessError::config(e.to_string()))?;
                let motion = match mode {
                    BodyMode::Fixed => BodyMotion::Fixed {
                        delta: config.delta0,
                    },
                    BodyMode::Prescribed => BodyMotion::Prescribed {
                        profile: HeaveProfile::new(
                            geometry.z_c_eq,
                            config.heave_amplitude,
                            config.heave_period,
                        )
                        .map_err(|e| HarnessError::config(e.to_string()))?,
                        offset: config.delta0,
                    },
                    BodyMode::Free => BodyMotion::Free {
                        delta0: config.delta0,
                    },
                    BodyMode::Absent => unreachable!(),
                };
                geometry
                    .check_admissible(config.delta0)
                    .map_err(|e| HarnessError::config(e.to_string()))?;
                Some(BodySetup {
                    geometry,
                    region,
                    motion,
                })
            }
        };
        let forcing = Forcing::from_config(
            config.forcing,
            config.forcing_amplitude,
            config.forcing_period,
        );
        // Body runs need a uniform dt for the acceleration second differences.
        let fixed_dt = if body.is_some() || config.alpha.is_some() {
            Some(config.fixed_alpha() * grid.dx())
        } else {
            None
        };
        Ok(Self {
            config: config.clone(),
            params,
            grid,
            body,
            forcing,
            fixed_dt,
        })
    }

    /// Displacement of the body at discrete level `n` for prescribed motion.
    fn prescribed_delta(profile: &HeaveProfile<f64>, offset: f64, t: f64) -> f64 {
        offset + profile.delta(t)
    }

    /// Assemble the initial state (and the body's first two levels).
    pub fn initial_state(&self) -> Result<(State64, Option<BodyState<f64>>)> {
        let n = self.grid.n_cells();
        let mut state = State64::rest(n);

        if self.config.forcing == ForcingKind::Solitary {
            let wave = SolitaryWave::new(&self.params, self.config.solitary_amplitude)
                .map_err(HarnessError::Model)?;
            let window = self.config.solitary_window;
            for j in 0..n {
                let xi = self.grid.x(j) - self.config.solitary_center;
                let (zeta, q) = wave.eval(xi, 0.0);
                let w = if window > 0.0 {
                    let d = xi.abs();
                    if d <= 0.5 * window {
                        1.0
                    } else if d >= window {
                        0.0
                    } else {
                        let s = (d - 0.5 * window) / window * std::f64::consts::PI;
                        s.cos().powi(2)
                    }
                } else {
                    1.0
                };
                state.zeta[j] = zeta * w;
                state.q[j] = q * w;
            }
        }

        let Some(body) = &self.body else {
            return Ok((state, None));
        };

        let dt = self.fixed_dt.expect("body runs always fix dt");
        let (delta0, body_state) = match &body.motion {
            BodyMotion::Fixed { delta } => (*delta, BodyState::at_rest(*delta)),
            BodyMotion::Free { delta0 } => (*delta0, BodyState::at_rest(*delta0)),
            BodyMotion::Prescribed { profile, offset } => {
                let d0 = Self::prescribed_delta(profile, *offset, 0.0);
                let d1 = Self::prescribed_delta(profile, *offset, dt);
                (
                    d0,
                    BodyState {
                        delta_n: d0,
                        delta_np1: d1,
                    },
                )
            }
        };

        // Interior surface pinned to the hull; interior discharge set to the
        // linear ramp matching the first body move so the constraint
        // propagates exactly.
        for j in body.region.interior_cells() {
            state.zeta[j] = body
                .geometry
                .hull_elevation(self.grid.x(j), delta0)
                .map_err(HarnessError::Model)?;
        }
        let v1 = (body_state.delta_np1 - body_state.delta_n) / dt;
        for j in body.region.span() {
            state.q[j] = -(self.grid.x(j) - body.geometry.x0) * v1;
        }
        Ok((state, Some(body_state)))
    }

    fn flux_form(&self) -> FluxForm {
        match self.config.model {
            Model::Nsw => FluxForm::Nsw,
            Model::Boussinesq => FluxForm::Boussinesq,
        }
    }
}

/// Body quantities sampled at one time level.
#[derive(Debug, Clone, Copy)]
pub struct BodySample {
    pub delta: f64,
    /// Discrete velocity `(delta^{n+1} - delta^n)/dt`.
    pub delta_dot: f64,
    pub forces: ForceBreakdown<f64>,
    pub accel: f64,
    pub added_mass: f64,
}

/// Per-level view passed to observers (level `n` before the step is taken).
pub struct StepView<'a> {
    pub step: usize,
    pub t: f64,
    pub dt: f64,
    pub state: &'a State64,
    pub body: Option<BodySample>,
}

/// Aggregate results of one run.
#[derive(Debug, Clone)]
pub struct RunSummary {
    pub steps: usize,
    pub final_state: State64,
    pub final_body: Option<BodySample>,
    /// Max over steps of the interior constraint residual `max_j |h_j - h_w,j|`.
    pub max_constraint_residual: f64,
    /// Max over steps of the relative mass-ledger residual.
    pub max_mass_residual: f64,
    pub max_cfl: f64,
}

/// Run a scenario, writing CSV artifacts when `outdir` is set.
pub fn run_scenario(config: &ScenarioConfig) -> Result<RunSummary> {
    run_scenario_observed(config, |_| {})
}

/// Run a scenario, calling `observer` once per time level (including the
/// initial and final ones).
pub fn run_scenario_observed(
    config: &ScenarioConfig,
    mut observer: impl FnMut(&StepView<'_>),
) -> Result<RunSummary> {
    let scenario = Scenario::build(config)?;
    let (mut state, mut body_state) = scenario.initial_state()?;
    let form = scenario.flux_form();
    let params = scenario.params;
    let grid = scenario.grid;
    let t_end = config.t_end;

    // Startup compatibility: required whenever a body is present.
    if let (Some(setup), Some(bs)) = (&scenario.body, &body_state) {
        let dt = scenario.fixed_dt.expect("body runs fix dt");
        let report = check_compatibility(
            &state,
            &grid,
            &params,
            &setup.region,
            |x| setup.geometry.hull_elevation_eq(x).unwrap_or(f64::NAN),
            bs.delta_n,
            bs.delta_np1,
            dt,
        );
        if !report.ok {
            return Err(HarnessError::Compatibility(format!(
                "initial data violates the wetted constraint by {:.3e} (surface {:.3e}, divergence {:.3e})",
                report.max_violation(),
                report.surface_mismatch,
                report.divergence_mismatch
            )));
        }
    }

    let mut writer = match &config.outdir {
        Some(dir) => Some(OutputWriter::create(dir)?),
        None => None,
    };

    let mut bouss = match config.model {
        Model::Boussinesq => Some(
            BoussStepper::new(&grid, &params, scenario.body.as_ref().map(|b| b.region))
                .map_err(HarnessError::Model)?,
        ),
        Model::Nsw => None,
    };
    let mut ws = Workspace::new();
    let mut next = state.clone();

    let mass0 = state.total_mass(&params, grid.dx());
    let mut cumulative_flux = 0.0;
    let mut max_mass_residual: f64 = 0.0;
    let mut max_constraint: f64 = 0.0;
    let mut max_cfl: f64 = 0.0;
    let mut steps = 0usize;
    let mut next_output = 0.0_f64;
    let mut next_snapshot = 0.0_f64;
    let mut last_constraint = 0.0_f64;
    let mut last_sample: Option<BodySample>;

    let body_sample = |state: &State64,
                       bs: &BodyState<f64>,
                       setup: &BodySetup,
                       accel: f64,
                       dt: f64|
     -> Result<BodySample> {
        let inputs = force_inputs(
            state,
            &grid,
            &params,
            &setup.region,
            &setup.geometry,
            bs.delta_n,
            form,
        )
        .map_err(HarnessError::Model)?;
        Ok(BodySample {
            delta: bs.delta_n,
            delta_dot: bs.velocity(dt),
            forces: inputs.breakdown(accel),
            accel,
            added_mass: inputs.added_mass,
        })
    };

    loop {
        let t = state.t;
        let dt = match scenario.fixed_dt {
            Some(dt) => dt,
            None => {
                let ghosts = scenario.forcing.ghosts(t, &state, &params);
                heave_core::nsw::stable_dt(&state, &ghosts, &grid, &params, config.cfl)
                    .min(t_end - t)
                    .max(1e-12)
            }
        };

        // Body update at level n: acceleration and the new level n+2.
        let (zdd, sample) = match (&scenario.body, &mut body_state) {
            (Some(setup), Some(bs)) => match &setup.motion {
                BodyMotion::Fixed { .. } => {
                    let s = body_sample(&state, bs, setup, 0.0, dt)?;
                    (Some(0.0), Some(s))
                }
                BodyMotion::Prescribed { profile, offset } => {
                    let n = steps as f64;
                    let d_n = Scenario::prescribed_delta(profile, *offset, n * dt);
                    let d_np1 = Scenario::prescribed_delta(profile, *offset, (n + 1.0) * dt);
                    let d_np2 = Scenario::prescribed_delta(profile, *offset, (n + 2.0) * dt);
                    debug_assert!((bs.delta_n - d_n).abs() < 1e-9);
                    let zdd = (d_np2 - 2.0 * d_np1 + d_n) / (dt * dt);
                    let s = body_sample(&state, bs, setup, zdd, dt)?;
                    *bs = BodyState {
                        delta_n: d_np1,
                        delta_np1: d_np2,
                    };
                    (Some(zdd), Some(s))
                }
                BodyMotion::Free { .. } => {
                    let dynamics = coupled_acceleration(
                        &state,
                        &grid,
                        &params,
                        &setup.region,
                        &setup.geometry,
                        bs.delta_n,
                        form,
                    )
                    .map_err(HarnessError::Model)?;
                    let s = BodySample {
                        delta: bs.delta_n,
                        delta_dot: bs.velocity(dt),
                        forces: dynamics.forces,
                        accel: dynamics.accel,
                        added_mass: dynamics.added_mass,
                    };
                    *bs = advance_body(bs, dynamics.accel, dt, &setup.geometry, t + 2.0 * dt)
                        .map_err(HarnessError::Model)?;
                    (Some(dynamics.accel), Some(s))
                }
            },
            _ => (None, None),
        };
        last_sample = sample;

        // Observe and emit the level-n view.
        observer(&StepView {
            step: steps,
            t,
            dt,
            state: &state,
            body: sample,
        });
        let is_final = t >= t_end - 1e-9 * t_end.max(1.0);
        let row_due = t + 1e-12 >= next_output || is_final;
        if row_due {
            next_output = if config.output_every > 0.0 {
                next_output.max(t) + config.output_every
            } else {
                f64::INFINITY
            };
        }
        let mass_residual = if row_due {
            let mass = state.total_mass(&params, grid.dx());
            let r = ((mass - mass0) + cumulative_flux).abs() / mass0;
            max_mass_residual = max_mass_residual.max(r);
            r
        } else {
            f64::NAN
        };
        if let Some(w) = writer.as_mut() {
            if row_due {
                let e_fluid = energy::fluid_energy(&state, &params, grid.dx(), config.model);
                let e_solid = sample
                    .map(|s| {
                        energy::solid_energy(
                            scenario.body.as_ref().unwrap().geometry.mass,
                            params.g,
                            s.delta,
                            s.delta_dot,
                        )
                    })
                    .unwrap_or(0.0);
                w.timeseries_row(t, &sample, e_fluid, e_solid, mass_residual, last_constraint)?;
            }
            if config.snapshot_every > 0.0 && t + 1e-12 >= next_snapshot {
                w.snapshot(t, &state, &grid, scenario.body.as_ref().map(|b| &b.region))?;
                next_snapshot = next_snapshot.max(t) + config.snapshot_every;
            }
        }

        if is_final {
            break;
        }

        // Fluid step.
        let ghosts = scenario.forcing.ghosts(t, &state, &params);
        let step_result = match (&mut bouss, &scenario.body) {
            (Some(stepper), _) => stepper.step(
                &state, &mut next, &grid, &params, zdd, ghosts, dt, config.cfl,
            ),
            (None, Some(setup)) => step_nsw(
                &state,
                &mut next,
                &grid,
                &params,
                zdd.map(|z| BodyForcing {
                    region: &setup.region,
                    zdd: z,
                }),
                ghosts,
                dt,
                config.cfl,
                &mut ws,
            ),
            (None, None) => step_nsw(
                &state, &mut next, &grid, &params, None, ghosts, dt, config.cfl, &mut ws,
            ),
        };
        let info = match step_result {
            Ok(info) => info,
            Err(e) => {
                if let Some(w) = writer.as_mut() {
                    w.abort_snapshot(&state, &grid, scenario.body.as_ref().map(|b| &b.region))?;
                }
                return Err(HarnessError::Model(e));
            }
        };
        max_cfl = max_cfl.max(info.cfl);
        cumulative_flux += dt * (info.boundary_mass_flux.1 - info.boundary_mass_flux.0);
        std::mem::swap(&mut state, &mut next);
        steps += 1;

        // Constraint residual of the new level against the hull at delta^{n+1}.
        if let (Some(setup), Some(bs)) = (&scenario.body, &body_state) {
            let delta_np1 = bs.delta_n;
            let mut worst: f64 = 0.0;
            for j in setup.region.interior_cells() {
                let hw = params.h0
                    + setup
                        .geometry
                        .hull_elevation(grid.x(j), delta_np1)
                        .map_err(HarnessError::Model)?;
                worst = worst.max((state.depth(&params, j) - hw).abs());
            }
            last_constraint = worst;
            max_constraint = max_constraint.max(worst);
            if worst > 1e-10 * params.h0 {
                if let Some(w) = writer.as_mut() {
                    w.abort_snapshot(&state, &grid, Some(&setup.region))?;
                }
                return Err(HarnessError::Model(heave_core::Error::numerical(format!(
                    "wetted constraint broke at t = {}: residual {worst:.3e}",
                    state.t
                ))));
            }
        }
    }

    if let Some(w) = writer.as_mut() {
        w.snapshot(
            state.t,
            &state,
            &grid,
            scenario.body.as_ref().map(|b| &b.region),
        )?;
        w.finish()?;
    }

    Ok(RunSummary {
        steps,
        final_body: last_sample,
        max_constraint_residual: max_constraint,
        max_mass_residual,
        max_cfl,
        final_state: state,
    })
}
