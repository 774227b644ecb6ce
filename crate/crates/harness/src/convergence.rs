//! Grid-refinement studies against the exact references.

use crate::config::ScenarioConfig;
use crate::error::{HarnessError, Result};
use crate::presets;
use crate::runner::{run_scenario_observed, Scenario};
use heave_core::exact::{contact_elevation, return_to_equilibrium_reference};
use heave_core::solid::HeaveProfile;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum StudyKind {
    /// Forced heave: contact-cell elevation against the contact-root relation.
    Forced,
    /// Free release: body position against the free-decay ODE.
    Return,
}

impl std::str::FromStr for StudyKind {
    type Err = String;
    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        match s {
            "forced" => Ok(StudyKind::Forced),
            "return" => Ok(StudyKind::Return),
            _ => Err(format!("unknown study `{s}` (expected forced|return)")),
        }
    }
}

#[derive(Debug, Clone, Copy)]
pub struct ConvergenceRow {
    pub dx: f64,
    /// Sup-norm error over the study window.
    pub error: f64,
    /// Order against the previous (finer) row; NaN on the first row.
    pub order_local: f64,
}

#[derive(Debug, Clone)]
pub struct ConvergenceTable {
    pub rows: Vec<ConvergenceRow>,
    /// Least-squares slope of `ln error` against `ln dx`.
    pub fitted_order: f64,
}

impl ConvergenceTable {
    fn from_pairs(mut pairs: Vec<(f64, f64)>) -> Self {
        pairs.sort_by(|a, b| a.0.total_cmp(&b.0));
        let mut rows = Vec::with_capacity(pairs.len());
        for (i, &(dx, error)) in pairs.iter().enumerate() {
            let order_local = if i == 0 {
                f64::NAN
            } else {
                let (dx_prev, err_prev) = pairs[i - 1];
                (error / err_prev).ln() / (dx / dx_prev).ln()
            };
            rows.push(ConvergenceRow {
                dx,
                error,
                order_local,
            });
        }
        let n = pairs.len() as f64;
        let fitted_order = if pairs.len() >= 2 {
            let (mut sx, mut sy, mut sxx, mut sxy) = (0.0, 0.0, 0.0, 0.0);
            for &(dx, err) in &pairs {
                let (x, y) = (dx.ln(), err.ln());
                sx += x;
                sy += y;
                sxx += x * x;
                sxy += x * y;
            }
            (n * sxy - sx * sy) / (n * sxx - sx * sx)
        } else {
            f64::NAN
        };
        Self { rows, fitted_order }
    }

    pub fn as_tuples(&self) -> Vec<(f64, f64, f64)> {
        self.rows
            .iter()
            .map(|r| (r.dx, r.error, r.order_local))
            .collect()
    }
}

fn forced_error(dx: f64) -> Result<f64> {
    let config = presets::forced_heave(dx);
    let scenario = Scenario::build(&config)?;
    let setup = scenario.body.as_ref().expect("forced scenario has a body");
    let j_contact = setup.region.j_minus;
    let geometry = setup.geometry;
    let profile = HeaveProfile::new(geometry.z_c_eq, config.heave_amplitude, config.heave_period)
        .map_err(HarnessError::Model)?;
    let mut worst: f64 = 0.0;
    let mut failure: Option<heave_core::Error> = None;
    run_scenario_observed(&config, |view| {
        if failure.is_some() || view.t > config.t_end + 1e-9 {
            return;
        }
        let (_, v, _) = profile.evaluate(view.t);
        match contact_elevation(v, &geometry) {
            Ok(exact) => worst = worst.max((view.state.zeta[j_contact] - exact).abs()),
            Err(e) => failure = Some(e),
        }
    })?;
    match failure {
        Some(e) => Err(HarnessError::Model(e)),
        None => Ok(worst),
    }
}

fn return_error(dx: f64, reference: &heave_core::exact::ReturnTrajectory<f64>) -> Result<f64> {
    let config = presets::return_release(dx);
    let mut worst: f64 = 0.0;
    run_scenario_observed(&config, |view| {
        if view.t > config.t_end + 1e-9 {
            return;
        }
        if let Some(body) = view.body {
            worst = worst.max((body.delta - reference.delta(view.t)).abs());
        }
    })?;
    Ok(worst)
}

/// Run the forced or return study over the spacing list.
pub fn convergence_study(kind: StudyKind, dx_list: &[f64]) -> Result<ConvergenceTable> {
    if dx_list.is_empty() {
        return Err(HarnessError::config("empty dx list".to_string()));
    }
    let reference = match kind {
        StudyKind::Forced => None,
        StudyKind::Return => {
            let config = presets::return_release(dx_list[0]);
            let scenario = Scenario::build(&config)?;
            let geometry = scenario
                .body
                .as_ref()
                .expect("return scenario has a body")
                .geometry;
            Some(
                return_to_equilibrium_reference(&geometry, config.delta0, config.t_end, 1e-10)
                    .map_err(HarnessError::Model)?,
            )
        }
    };

    // Each run owns its state; aggregate deterministically by sorting.
    let mut pairs: Vec<(f64, f64)> = Vec::with_capacity(dx_list.len());
    let results: Vec<Result<f64>> = std::thread::scope(|scope| {
        let reference = reference.as_ref();
        let handles: Vec<_> = dx_list
            .iter()
            .map(|&dx| {
                scope.spawn(move || match kind {
                    StudyKind::Forced => forced_error(dx),
                    StudyKind::Return => return_error(dx, reference.unwrap()),
                })
            })
            .collect();
        handles
            .into_iter()
            .map(|h| h.join().expect("study thread panicked"))
            .collect()
    });
    for (&dx, res) in dx_list.iter().zip(results) {
        pairs.push((dx, res?));
    }
    Ok(ConvergenceTable::from_pairs(pairs))
}

/// Dispersive benchmark: solitary-wave profile error at the 5 s horizon.
pub fn solitary_study(dx_list: &[f64]) -> Result<ConvergenceTable> {
    let mut pairs = Vec::with_capacity(dx_list.len());
    for &dx in dx_list {
        let config = presets::solitary_propagation(dx);
        pairs.push((dx, solitary_profile_error(&config)?));
    }
    Ok(ConvergenceTable::from_pairs(pairs))
}

fn solitary_profile_error(config: &ScenarioConfig) -> Result<f64> {
    let scenario = Scenario::build(config)?;
    let params = scenario.params;
    let wave = heave_core::exact::SolitaryWave::new(&params, config.solitary_amplitude)
        .map_err(HarnessError::Model)?;
    let summary = crate::runner::run_scenario(config)?;
    let state = &summary.final_state;
    let mut worst: f64 = 0.0;
    for j in 0..state.n_cells() {
        let xi = scenario.grid.x(j) - config.solitary_center;
        let (exact, _) = wave.eval(xi, state.t);
        worst = worst.max((state.zeta[j] - exact).abs());
    }
    Ok(worst)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn table_sorts_and_fits_orders() {
        let t = ConvergenceTable::from_pairs(vec![(0.4, 0.08), (0.1, 0.02), (0.2, 0.04)]);
        assert_eq!(t.rows[0].dx, 0.1);
        assert!(t.rows[0].order_local.is_nan());
        assert!((t.rows[1].order_local - 1.0).abs() < 1e-12);
        assert!((t.rows[2].order_local - 1.0).abs() < 1e-12);
        assert!((t.fitted_order - 1.0).abs() < 1e-12);
    }

    #[test]
    fn study_kind_parses() {
        assert_eq!("forced".parse::<StudyKind>().unwrap(), StudyKind::Forced);
        assert_eq!("return".parse::<StudyKind>().unwrap(), StudyKind::Return);
        assert!("diagonal".parse::<StudyKind>().is_err());
    }
}
