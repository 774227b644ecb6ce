//! Canned scenario configurations for the standard experiments.

use crate::config::{BodyMode, ForcingKind, Model, ScenarioConfig};

fn base() -> ScenarioConfig {
    ScenarioConfig::default()
}

/// Incoming swell (1 m, 15 s) on the fixed body.
pub fn fixed_body_wave() -> ScenarioConfig {
    let mut c = base();
    c.body = BodyMode::Fixed;
    c.forcing = ForcingKind::Sine;
    c.forcing_amplitude = 1.0;
    c.forcing_period = 15.0;
    c.t_end = 30.0;
    c
}

/// Forced heave: 2 m peak-to-peak, 10 s period, one period horizon.
pub fn forced_heave(dx: f64) -> ScenarioConfig {
    let mut c = base();
    c.body = BodyMode::Prescribed;
    c.heave_amplitude = 2.0;
    c.heave_period = 10.0;
    c.t_end = 10.0;
    c.dx = dx;
    c
}

/// Release from z_C = 2 m (below the 4.57 m equilibrium), still water.
pub fn return_release(dx: f64) -> ScenarioConfig {
    let mut c = base();
    c.body = BodyMode::Free;
    c.z_c_start = Some(2.0);
    c.validate().expect("preset must be valid");
    c.t_end = 10.0;
    c.dx = dx;
    c
}

/// Near-breaking swell (3.5 m, 20 s) arriving on the freely floating body.
pub fn wave_on_free_body() -> ScenarioConfig {
    let mut c = base();
    c.body = BodyMode::Free;
    c.forcing = ForcingKind::Sine;
    c.forcing_amplitude = 3.5;
    c.forcing_period = 20.0;
    c.t_end = 30.0;
    c
}

/// Solitary wave (3 m) arriving on the freely floating body, dispersive model.
///
/// The initial profile is tapered to compact support away from the body: the
/// sech^2 tails are global, and any initial discharge under the contact cells
/// would violate the startup compatibility condition.
pub fn solitary_on_free_body() -> ScenarioConfig {
    let mut c = base();
    c.model = Model::Boussinesq;
    c.body = BodyMode::Free;
    c.forcing = ForcingKind::Solitary;
    c.solitary_amplitude = 3.0;
    c.length = 600.0;
    c.x0 = 400.0;
    c.solitary_center = 200.0;
    c.solitary_window = 140.0;
    c.t_end = 35.0;
    c
}

/// Solitary propagation without a body (dispersive benchmark).
pub fn solitary_propagation(dx: f64) -> ScenarioConfig {
    let mut c = base();
    c.model = Model::Boussinesq;
    c.body = BodyMode::Absent;
    c.forcing = ForcingKind::Solitary;
    c.solitary_amplitude = 3.0;
    c.length = 600.0;
    c.solitary_center = 200.0;
    c.solitary_window = 0.0;
    c.t_end = 5.0;
    c.dx = dx;
    // Fix dt/dx so refinement sweeps scale the step with the mesh.
    c.alpha = Some(c.cfl / c.speed_bound());
    c
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::runner::Scenario;

    #[test]
    fn all_presets_build() {
        for config in [
            fixed_body_wave(),
            forced_heave(0.25),
            return_release(0.25),
            wave_on_free_body(),
            solitary_on_free_body(),
            solitary_propagation(0.4),
        ] {
            let scenario = Scenario::build(&config).expect("preset must build");
            let (state, _) = scenario.initial_state().expect("initial state");
            assert_eq!(state.n_cells(), scenario.grid.n_cells());
        }
    }

    #[test]
    fn return_release_starts_below_equilibrium() {
        let c = return_release(0.25);
        assert!((c.delta0 - (2.0 - 4.566114774905181)).abs() < 1e-12);
    }

    #[test]
    fn solitary_taper_keeps_the_body_range_clean() {
        let config = solitary_on_free_body();
        let scenario = Scenario::build(&config).unwrap();
        let (state, _) = scenario.initial_state().unwrap();
        let region = scenario.body.as_ref().unwrap().region;
        for j in region.j_minus - 2..=region.j_plus + 2 {
            assert_eq!(state.q[j], 0.0, "discharge must vanish near the body");
        }
        // The tapered crest is intact.
        let j_crest = (config.solitary_center / config.dx).round() as usize;
        assert!((state.zeta[j_crest] - 3.0).abs() < 1e-6);
    }
}
