//! CSV artifacts with frozen schemas.
//!
//! `timeseries.csv`: t, delta, delta_dot, F_restor, F_added, F_DE, F_NL,
//! E_fluid, E_solid, mass_residual, constraint_residual.
//! `snapshot_<t>.csv`: x, zeta, q, is_interior.
//! `convergence.csv`: dx, error, order_local.
//! Full double precision, `.` decimal, comma separator, header row mandatory.

use crate::error::Result;
use crate::runner::BodySample;
use heave_core::{Grid64, Region64, State64};
use std::fs::File;
use std::io::{BufWriter, Write};
use std::path::{Path, PathBuf};

pub const TIMESERIES_HEADER: &str =
    "t,delta,delta_dot,F_restor,F_added,F_DE,F_NL,E_fluid,E_solid,mass_residual,constraint_residual";
pub const SNAPSHOT_HEADER: &str = "x,zeta,q,is_interior";
pub const CONVERGENCE_HEADER: &str = "dx,error,order_local";

/// Streams run artifacts into `outdir`.
pub struct OutputWriter {
    outdir: PathBuf,
    timeseries: BufWriter<File>,
}

impl OutputWriter {
    pub fn create(outdir: &Path) -> Result<Self> {
        std::fs::create_dir_all(outdir)?;
        let file = File::create(outdir.join("timeseries.csv"))?;
        let mut timeseries = BufWriter::new(file);
        writeln!(timeseries, "{TIMESERIES_HEADER}")?;
        Ok(Self {
            outdir: outdir.to_path_buf(),
            timeseries,
        })
    }

    pub fn timeseries_row(
        &mut self,
        t: f64,
        body: &Option<BodySample>,
        e_fluid: f64,
        e_solid: f64,
        mass_residual: f64,
        constraint_residual: f64,
    ) -> Result<()> {
        let (delta, delta_dot, fr, fa, fde, fnl) = match body {
            Some(s) => (
                s.delta,
                s.delta_dot,
                s.forces.restoring,
                s.forces.added_mass,
                s.forces.damping_excitation,
                s.forces.nonlinear,
            ),
            None => (0.0, 0.0, 0.0, 0.0, 0.0, 0.0),
        };
        writeln!(
            self.timeseries,
            "{t},{delta},{delta_dot},{fr},{fa},{fde},{fnl},{e_fluid},{e_solid},{mass_residual},{constraint_residual}"
        )?;
        Ok(())
    }

    fn write_snapshot(
        &self,
        name: &str,
        state: &State64,
        grid: &Grid64,
        region: Option<&Region64>,
    ) -> Result<()> {
        let file = File::create(self.outdir.join(name))?;
        let mut w = BufWriter::new(file);
        writeln!(w, "{SNAPSHOT_HEADER}")?;
        for j in 0..state.n_cells() {
            let interior = region.is_some_and(|r| r.interior_cells().contains(&j));
            writeln!(
                w,
                "{},{},{},{}",
                grid.x(j),
                state.zeta[j],
                state.q[j],
                u8::from(interior)
            )?;
        }
        w.flush()?;
        Ok(())
    }

    pub fn snapshot(
        &mut self,
        t: f64,
        state: &State64,
        grid: &Grid64,
        region: Option<&Region64>,
    ) -> Result<()> {
        self.write_snapshot(&format!("snapshot_{t:.3}.csv"), state, grid, region)
    }

    /// Last-good state emitted when a run aborts on an invariant breach.
    pub fn abort_snapshot(
        &mut self,
        state: &State64,
        grid: &Grid64,
        region: Option<&Region64>,
    ) -> Result<()> {
        self.write_snapshot("snapshot_abort.csv", state, grid, region)
    }

    pub fn finish(&mut self) -> Result<()> {
        self.timeseries.flush()?;
        Ok(())
    }
}

/// Write the convergence table; `order_local` of the first row is NaN.
pub fn write_convergence(path: &Path, rows: &[(f64, f64, f64)]) -> Result<()> {
    if let Some(parent) = path.parent() {
        if !parent.as_os_str().is_empty() {
            std::fs::create_dir_all(parent)?;
        }
    }
    let file = File::create(path)?;
    let mut w = BufWriter::new(file);
    writeln!(w, "{CONVERGENCE_HEADER}")?;
    for (dx, error, order) in rows {
        writeln!(w, "{dx},{error},{order}")?;
    }
    w.flush()?;
    Ok(())
}
