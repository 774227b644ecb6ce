//! The contact-point depth root: tau^3 - sqrt(h0) tau^2 + r = 0.
//!
//! In still water the outgoing Riemann invariant ties the water depth at a
//! contact point to the body velocity: `sqrt(h)` solves the cubic above with
//! `r` the scaled contact discharge. The physical branch `tau_0` passes
//! through `(0, sqrt(h0))`; it exists for `r < r0 = (4/27) h0^{3/2}`.

use crate::error::{Error, Result};
use crate::geometry::BodyGeometry;
use crate::scalar::Real;

/// Rest depth, its square root and the admissible bound `r0`.
#[derive(Debug, Clone, Copy)]
pub struct CubicContext<T> {
    pub h0: T,
    sqrt_h0: T,
    /// Largest admissible scaled discharge, `(4/27) h0^{3/2}`.
    pub r0: T,
}

impl<T: Real> CubicContext<T> {
    pub fn new(h0: T) -> Result<Self> {
        if !(h0 > T::zero()) {
            return Err(Error::domain(format!(
                "rest depth must be positive, got {h0}"
            )));
        }
        let sqrt_h0 = h0.sqrt();
        let r0 = T::of(4.0 / 27.0) * h0 * sqrt_h0;
        Ok(Self { h0, sqrt_h0, r0 })
    }

    fn poly(&self, tau: T, r: T) -> T {
        tau * tau * (tau - self.sqrt_h0) + r
    }

    /// The physical root of the cubic: the larger positive root for
    /// `0 < r < r0`, the unique positive root for `r <= 0`.
    ///
    /// Safeguarded Newton with continuation from `tau_0(0) = sqrt(h0)`,
    /// falling back to bisection on `[2 sqrt(h0) / 3, hi]`.
    pub fn tau0(&self, r: T) -> Result<T> {
        if r >= self.r0 {
            return Err(Error::branch(format!(
                "scaled discharge r = {r} >= r0 = {} (velocity smallness condition violated)",
                self.r0
            )));
        }
        let scale = self.h0 * self.sqrt_h0;
        if r == T::zero() {
            return Ok(self.sqrt_h0);
        }
        // p is strictly increasing on (2 sqrt(h0) / 3, infinity) and tau0 is
        // its unique root there for every r < r0.
        let mut lo = T::two() * self.sqrt_h0 / T::of(3.0);
        let mut hi = self.sqrt_h0.max(lo) + T::one();
        while self.poly(hi, r) <= T::zero() {
            hi *= T::two();
            if hi > T::of(1e30) {
                return Err(Error::numerical(
                    "tau0 bracket expansion failed".to_string(),
                ));
            }
        }
        let tol = T::of(1e-14) * scale;
        let mut x = self.sqrt_h0.max(lo).min(hi);
        for _ in 0..200 {
            let p = self.poly(x, r);
            if p.abs() <= tol {
                return Ok(x);
            }
            if p > T::zero() {
                hi = x;
            } else {
                lo = x;
            }
            let dp = x * (T::of(3.0) * x - T::two() * self.sqrt_h0);
            let newton = x - p / dp;
            x = if dp != T::zero() && newton > lo && newton < hi {
                newton
            } else {
                (lo + hi) * T::half()
            };
            if hi - lo <= T::epsilon() * x.abs().max(T::one()) {
                return Ok(x);
            }
        }
        Ok(x)
    }
}

/// Water elevation at the contact points for body vertical velocity `delta_dot`:
/// `zeta_e = tau0((x_+ - x_-) delta_dot / (4 sqrt(g)))^2 - h0`.
pub fn contact_elevation<T: Real>(delta_dot: T, body: &BodyGeometry<T>) -> Result<T> {
    let p = body.params();
    let ctx = CubicContext::new(p.h0)?;
    let r = body.width() / (T::of(4.0) * p.g.sqrt()) * delta_dot;
    let tau = ctx.tau0(r)?;
    // tau^2 - h0 in difference-of-squares form: exactly zero at rest.
    let s = p.h0.sqrt();
    Ok((tau - s) * (tau + s))
}

/// Nonlinear wave-radiation damping `nu(v) = rho g (x_+ - x_-) [h0 - tau0(.)^2]`.
pub fn damping_nu<T: Real>(delta_dot: T, body: &BodyGeometry<T>) -> Result<T> {
    let p = body.params();
    let zeta_e = contact_elevation(delta_dot, body)?;
    Ok(-(p.rho * p.g * body.width() * zeta_e))
}


#[cfg(test)]
mod f32_tests {
    use super::*;

    #[test]
    fn root_solve_works_at_single_precision() {
        let c = CubicContext::<f32>::new(15.0).unwrap();
        assert_eq!(c.tau0(0.0).unwrap(), 15.0_f32.sqrt());
        let tau = c.tau0(-1.0).unwrap();
        assert!((tau - 3.9374838).abs() < 1e-4, "{tau}");
    }
}
