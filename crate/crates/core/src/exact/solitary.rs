//! Solitary-wave solution of the dispersive (Boussinesq) system.

use crate::error::{Error, Result};
use crate::params::PhysicalParams;
use crate::scalar::Real;

/// Right-going solitary wave `zeta = a sech^2(K (x - c t))`, `q = c zeta`.
#[derive(Debug, Clone, Copy)]
pub struct SolitaryWave<T> {
    pub amplitude: T,
    /// Inverse decay length `K = sqrt(9 a / (12 h0^3 + 4 a h0^2))` (1/m).
    pub k: T,
    /// Propagation speed `c = sqrt(g h0 / (1 - 4 h0^2 K^2 / 3))` (m/s).
    pub c: T,
}

impl<T: Real> SolitaryWave<T> {
    pub fn new(params: &PhysicalParams<T>, amplitude: T) -> Result<Self> {
        if !(amplitude > T::zero()) {
            return Err(Error::domain(format!(
                "solitary amplitude must be positive, got {amplitude}"
            )));
        }
        let h0 = params.h0;
        let k2 = T::of(9.0) * amplitude
            / (T::of(12.0) * h0 * h0 * h0 + T::of(4.0) * amplitude * h0 * h0);
        let k = k2.sqrt();
        let denom = T::one() - T::of(4.0 / 3.0) * h0 * h0 * k2;
        if !(denom > T::zero()) {
            return Err(Error::domain(format!(
                "solitary speed undefined: 1 - 4 h0^2 K^2 / 3 = {denom}"
            )));
        }
        let c = (params.g * h0 / denom).sqrt();
        Ok(Self { amplitude, k, c })
    }

    /// Elevation and discharge at `(x, t)` for a crest passing `x = 0` at `t = 0`.
    pub fn eval(&self, x: T, t: T) -> (T, T) {
        let theta = self.k * (x - self.c * t);
        let sech = T::one() / theta.cosh();
        let zeta = self.amplitude * sech * sech;
        (zeta, self.c * zeta)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn params() -> PhysicalParams<f64> {
        PhysicalParams::new(15.0, 9.81, 1000.0).unwrap()
    }

    #[test]
    fn frozen_wavenumber_and_speed() {
        let w = SolitaryWave::new(&params(), 3.0).unwrap();
        assert!((w.k - 0.025).abs() < 1e-15);
        assert!((w.c - 13.457625805010789).abs() < 1e-10);
    }

    #[test]
    fn crest_tracks_ct_and_tails_decay() {
        let w = SolitaryWave::new(&params(), 3.0).unwrap();
        for t in [0.0, 1.7, 12.0] {
            let (z, q) = w.eval(w.c * t, t);
            assert!((z - 3.0).abs() < 1e-12);
            assert!((q - w.c * 3.0).abs() < 1e-11);
        }
        let (far, _) = w.eval(w.c * 2.0 + 800.0, 2.0);
        assert!(far < 1e-15);
    }

    #[test]
    fn discrete_dispersive_residual_is_second_order() {
        // Substitute the wave into the continuous system with central
        // differences in x (time derivatives analytic via the travelling
        // structure): residual must shrink at order >= 2 in dx.
        let p = params();
        let w = SolitaryWave::new(&p, 3.0).unwrap();
        let h0 = p.h0;
        let resid_norm = |dx: f64| -> f64 {
            let mut worst: f64 = 0.0;
            let n = (240.0 / dx) as i64;
            for i in -n..=n {
                let x = i as f64 * dx;
                let (zm, qm) = w.eval(x - dx, 0.0);
                let (_z, _q) = w.eval(x, 0.0);
                let (zp, qp) = w.eval(x + dx, 0.0);
                // d/dt of the travelling wave: partial_t f = -c partial_x f.
                let dq_dt = |x: f64| {
                    let (zl, _) = w.eval(x - dx, 0.0);
                    let (zr, _) = w.eval(x + dx, 0.0);
                    -w.c * w.c * (zr - zl) / (2.0 * dx)
                };
                let dtq = dq_dt(x);
                let d2_dtq = (dq_dt(x + dx) - 2.0 * dtq + dq_dt(x - dx)) / (dx * dx);
                let flux = |z: f64, q: f64| q * q / h0 + 0.5 * p.g * (h0 + z) * (h0 + z);
                let dflux = (flux(zp, qp) - flux(zm, qm)) / (2.0 * dx);
                let momentum = dtq - h0 * h0 / 3.0 * d2_dtq + dflux;
                let mass = -w.c * (zp - zm) / (2.0 * dx) + (qp - qm) / (2.0 * dx);
                worst = worst.max(momentum.abs()).max(mass.abs());
            }
            worst
        };
        let r1 = resid_norm(0.8);
        let r2 = resid_norm(0.4);
        let r3 = resid_norm(0.2);
        let order12 = (r1 / r2).log2();
        let order23 = (r2 / r3).log2();
        assert!(order12 >= 1.9, "order {order12} (r1 = {r1}, r2 = {r2})");
        assert!(order23 >= 1.9, "order {order23} (r2 = {r2}, r3 = {r3})");
    }

    #[test]
    fn rejects_bad_amplitude() {
        assert!(SolitaryWave::new(&params(), 0.0).is_err());
        assert!(SolitaryWave::new(&params(), -1.0).is_err());
    }
}
