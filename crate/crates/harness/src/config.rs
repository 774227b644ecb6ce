//! Scenario configuration: flat `key = value` text files.
//!
//! Unknown keys are rejected. Lines starting with `#` are comments. Defaults
//! reproduce the standard setup: 300 m domain, 15 m rest depth, the 10 m
//! box-plus-arc body centred at 150 m with density ratio 0.5.

use crate::error::{HarnessError, Result};
use std::collections::BTreeMap;
use std::path::{Path, PathBuf};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Model {
    Nsw,
    Boussinesq,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BodyMode {
    Absent,
    Fixed,
    Prescribed,
    Free,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ForcingKind {
    None,
    Sine,
    Solitary,
}

/// Full description of one run.
#[derive(Debug, Clone)]
pub struct ScenarioConfig {
    pub model: Model,
    pub body: BodyMode,
    // fluid
    pub h0: f64,
    pub g: f64,
    pub rho: f64,
    // body geometry
    pub radius: f64,
    pub x0: f64,
    pub density_ratio: f64,
    // discretisation
    pub length: f64,
    pub dx: f64,
    pub cfl: f64,
    /// Fixed ratio `dt/dx`; if absent it is derived from `cfl` and a signal
    /// speed bound. Body runs always use a fixed ratio so the acceleration
    /// second differences see a uniform `dt`.
    pub alpha: Option<f64>,
    pub t_end: f64,
    pub output_every: f64,
    pub snapshot_every: f64,
    pub outdir: Option<PathBuf>,
    // boundary forcing
    pub forcing: ForcingKind,
    pub forcing_amplitude: f64,
    pub forcing_period: f64,
    pub solitary_amplitude: f64,
    pub solitary_center: f64,
    /// Taper radius of the initial solitary profile (0 keeps the full tails).
    pub solitary_window: f64,
    // prescribed heave
    pub heave_amplitude: f64,
    pub heave_period: f64,
    // free release
    pub delta0: f64,
    /// Alternative to `delta0`: initial elevation of the hull-top midpoint.
    pub z_c_start: Option<f64>,
}

impl Default for ScenarioConfig {
    fn default() -> Self {
        Self {
            model: Model::Nsw,
            body: BodyMode::Absent,
            h0: 15.0,
            g: 9.81,
            rho: 1000.0,
            radius: 10.0,
            x0: 150.0,
            density_ratio: 0.5,
            length: 300.0,
            dx: 0.05,
            cfl: 0.5,
            alpha: None,
            t_end: 10.0,
            output_every: 0.1,
            snapshot_every: 0.0,
            outdir: None,
            forcing: ForcingKind::None,
            forcing_amplitude: 1.0,
            forcing_period: 15.0,
            solitary_amplitude: 3.0,
            solitary_center: 150.0,
            solitary_window: 0.0,
            heave_amplitude: 2.0,
            heave_period: 10.0,
            delta0: 0.0,
            z_c_start: None,
        }
    }
}

fn parse_f64(key: &str, v: &str) -> Result<f64> {
    v.parse::<f64>()
        .map_err(|_| HarnessError::config(format!("key `{key}`: expected a number, got `{v}`")))
}

impl ScenarioConfig {
    /// Parse the flat `key = value` format.
    pub fn parse_str(text: &str) -> Result<Self> {
        let mut cfg = ScenarioConfig::default();
        let mut seen = BTreeMap::new();
        for (lineno, raw) in text.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let Some((key, value)) = line.split_once('=') else {
                return Err(HarnessError::config(format!(
                    "line {}: expected `key = value`, got `{line}`",
                    lineno + 1
                )));
            };
            let key = key.trim();
            let value = value.trim();
            if seen.insert(key.to_string(), lineno).is_some() {
                return Err(HarnessError::config(format!("duplicate key `{key}`")));
            }
            match key {
                "model" => {
                    cfg.model = match value {
                        "nsw" => Model::Nsw,
                        "boussinesq" => Model::Boussinesq,
                        _ => {
                            return Err(HarnessError::config(format!(
                                "model must be `nsw` or `boussinesq`, got `{value}`"
                            )))
                        }
                    }
                }
                "body" => {
                    cfg.body = match value {
                        "absent" => BodyMode::Absent,
                        "fixed" => BodyMode::Fixed,
                        "prescribed" => BodyMode::Prescribed,
                        "free" => BodyMode::Free,
                        _ => {
                            return Err(HarnessError::config(format!(
                                "body must be absent|fixed|prescribed|free, got `{value}`"
                            )))
                        }
                    }
                }
                "forcing" => {
                    cfg.forcing = match value {
                        "none" => ForcingKind::None,
                        "sine" => ForcingKind::Sine,
                        "solitary" => ForcingKind::Solitary,
                        _ => {
                            return Err(HarnessError::config(format!(
                                "forcing must be none|sine|solitary, got `{value}`"
                            )))
                        }
                    }
                }
                "outdir" => cfg.outdir = Some(PathBuf::from(value)),
                "h0" => cfg.h0 = parse_f64(key, value)?,
                "g" => cfg.g = parse_f64(key, value)?,
                "rho" => cfg.rho = parse_f64(key, value)?,
                "radius" => cfg.radius = parse_f64(key, value)?,
                "x0" => cfg.x0 = parse_f64(key, value)?,
                "density_ratio" => cfg.density_ratio = parse_f64(key, value)?,
                "length" => cfg.length = parse_f64(key, value)?,
                "dx" => cfg.dx = parse_f64(key, value)?,
                "cfl" => cfg.cfl = parse_f64(key, value)?,
                "alpha" => cfg.alpha = Some(parse_f64(key, value)?),
                "t_end" => cfg.t_end = parse_f64(key, value)?,
                "output_every" => cfg.output_every = parse_f64(key, value)?,
                "snapshot_every" => cfg.snapshot_every = parse_f64(key, value)?,
                "forcing_amplitude" => cfg.forcing_amplitude = parse_f64(key, value)?,
                "forcing_period" => cfg.forcing_period = parse_f64(key, value)?,
                "solitary_amplitude" => cfg.solitary_amplitude = parse_f64(key, value)?,
                "solitary_center" => cfg.solitary_center = parse_f64(key, value)?,
                "solitary_window" => cfg.solitary_window = parse_f64(key, value)?,
                "heave_amplitude" => cfg.heave_amplitude = parse_f64(key, value)?,
                "heave_period" => cfg.heave_period = parse_f64(key, value)?,
                "delta0" => cfg.delta0 = parse_f64(key, value)?,
                "z_c_start" => {
                    // Convenience: initial elevation of the hull-top midpoint;
                    // converted to delta0 against the equilibrium elevation.
                    let z = parse_f64(key, value)?;
                    cfg.delta0 = f64::NAN; // placeholder, resolved in validate()
                    cfg.z_c_start = Some(z);
                }
                _ => {
                    return Err(HarnessError::config(format!("unknown key `{key}`")));
                }
            }
        }
        cfg.validate()?;
        Ok(cfg)
    }

    pub fn from_file(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path).map_err(|e| {
            HarnessError::config(format!("cannot read config `{}`: {e}", path.display()))
        })?;
        Self::parse_str(&text)
    }

    pub fn validate(&mut self) -> Result<()> {
        if let Some(z) = self.z_c_start {
            let zeq = heave_core::geometry::equilibrium_elevation(self.radius, self.density_ratio)
                .map_err(|e| HarnessError::config(e.to_string()))?;
            self.delta0 = z - zeq;
        }
        for (name, v) in [
            ("h0", self.h0),
            ("g", self.g),
            ("rho", self.rho),
            ("length", self.length),
            ("dx", self.dx),
            ("cfl", self.cfl),
            ("t_end", self.t_end),
        ] {
            if !(v > 0.0) || !v.is_finite() {
                return Err(HarnessError::config(format!(
                    "`{name}` must be positive, got {v}"
                )));
            }
        }
        if self.cfl >= 1.0 {
            return Err(HarnessError::config(format!(
                "cfl must be below 1 for the scheme to be stable, got {}",
                self.cfl
            )));
        }
        if let Some(a) = self.alpha {
            if !(a > 0.0) {
                return Err(HarnessError::config(format!(
                    "alpha must be positive, got {a}"
                )));
            }
        }
        if self.forcing == ForcingKind::Solitary && self.solitary_amplitude <= 0.0 {
            return Err(HarnessError::config("solitary_amplitude must be positive"));
        }
        Ok(())
    }

    /// Signal-speed bound used to derive a fixed `alpha` from `cfl`.
    pub fn speed_bound(&self) -> f64 {
        let mut amp: f64 = 0.0;
        match self.forcing {
            ForcingKind::Sine => amp = amp.max(self.forcing_amplitude),
            ForcingKind::Solitary => amp = amp.max(self.solitary_amplitude),
            ForcingKind::None => {}
        }
        match self.body {
            BodyMode::Prescribed => amp = amp.max(self.heave_amplitude),
            BodyMode::Free => amp = amp.max(self.delta0.abs()),
            _ => {}
        }
        let a2 = 2.0 * amp;
        // 10% headroom over the superposition estimate; startup transients and
        // nonlinear steepening must not trip the per-step CFL rejection.
        1.1 * ((self.g * (self.h0 + a2)).sqrt() + a2 * (self.g / self.h0).sqrt())
    }

    /// The fixed time-step ratio `dt/dx` for this run.
    pub fn fixed_alpha(&self) -> f64 {
        self.alpha.unwrap_or_else(|| self.cfl / self.speed_bound())
    }
}
