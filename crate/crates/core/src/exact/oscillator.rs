//! Reference body trajectories: the nonlinear return-to-equilibrium ODE and
//! its damped-harmonic-oscillator linearisation.

use crate::error::{Error, Result};
use crate::exact::cubic::{damping_nu, CubicContext};
use crate::exact::rk::{integrate_adaptive, OdeSolution};
use crate::geometry::BodyGeometry;
use crate::scalar::Real;

/// Reference trajectory `(delta, delta_dot)(t)` of a released body.
#[derive(Debug, Clone)]
pub struct ReturnTrajectory<T> {
    sol: OdeSolution<T, 2>,
}

impl<T: Real> ReturnTrajectory<T> {
    pub fn delta(&self, t: T) -> T {
        self.sol.eval(t)[0]
    }

    pub fn delta_dot(&self, t: T) -> T {
        self.sol.eval(t)[1]
    }

    pub fn state(&self, t: T) -> (T, T) {
        let y = self.sol.eval(t);
        (y[0], y[1])
    }

    pub fn t_end(&self) -> T {
        self.sol.t_end()
    }
}

/// Solve the free-decay ODE
/// `(m + m_a(delta)) delta'' = -c delta - nu(delta') + beta(delta) delta'^2`
/// from `(delta0, 0)` with an adaptive high-order solver.
pub fn return_to_equilibrium_reference<T: Real>(
    body: &BodyGeometry<T>,
    delta0: T,
    t_end: T,
    tol: T,
) -> Result<ReturnTrajectory<T>> {
    body.check_admissible(delta0)?;
    let stiffness = body.stiffness();
    let mass = body.mass;
    let ctx = CubicContext::new(body.params().h0)?;
    let r_of_v = body.width() / (T::of(4.0) * body.params().g.sqrt());
    let rhs = move |t: T, y: &[T; 2]| -> Result<[T; 2]> {
        let (delta, v) = (y[0], y[1]);
        if r_of_v * v >= ctx.r0 {
            return Err(Error::branch_at(
                format!("body velocity {v} violates the smallness condition"),
                t.as_f64(),
            ));
        }
        let nu = damping_nu(v, body)?;
        let beta = body.beta_coefficient(delta)?;
        let m_a = body.added_mass(delta)?;
        let acc = (-stiffness * delta - nu + beta * v * v) / (mass + m_a);
        Ok([v, acc])
    };
    let sol = integrate_adaptive(rhs, T::zero(), [delta0, T::zero()], t_end, tol, tol)?;
    Ok(ReturnTrajectory { sol })
}

/// Damping coefficient of the linearised ODE,
/// `rho g (x_+ - x_-)^2 / (2 sqrt(g h0))`.
pub fn linear_damping_coefficient<T: Real>(body: &BodyGeometry<T>) -> T {
    let p = body.params();
    p.rho * p.g * body.width() * body.width() / (T::two() * p.rest_celerity())
}

/// Closed-form solution of the linearised return problem,
/// `(m + m_a(0)) delta'' = -c delta - gamma delta'` with `delta(0) = delta0`,
/// `delta'(0) = 0`.
#[derive(Debug, Clone, Copy)]
pub struct LinearOscillator<T> {
    /// Effective inertia `m + m_a(0)`.
    pub m_eff: T,
    pub stiffness: T,
    pub gamma: T,
}

impl<T: Real> LinearOscillator<T> {
    pub fn new(body: &BodyGeometry<T>) -> Result<Self> {
        Ok(Self {
            m_eff: body.mass + body.added_mass(T::zero())?,
            stiffness: body.stiffness(),
            gamma: linear_damping_coefficient(body),
        })
    }

    /// Exponential decay rate `gamma / (2 (m + m_a(0)))`.
    pub fn decay_rate(&self) -> T {
        self.gamma / (T::two() * self.m_eff)
    }

    /// `(delta, delta_dot)` at time `t` for initial displacement `delta0`.
    pub fn eval(&self, t: T, delta0: T) -> (T, T) {
        let lam = self.decay_rate();
        let w0_sq = self.stiffness / self.m_eff;
        let disc = w0_sq - lam * lam;
        let e = (-lam * t).exp();
        if disc > T::zero() {
            // Underdamped.
            let w = disc.sqrt();
            let (s, c) = (w * t).sin_cos();
            let delta = delta0 * e * (c + lam / w * s);
            let ddot = -delta0 * e * (w0_sq / w) * s;
            (delta, ddot)
        } else if disc == T::zero() {
            let delta = delta0 * e * (T::one() + lam * t);
            let ddot = -delta0 * e * lam * lam * t;
            (delta, ddot)
        } else {
            // Overdamped.
            let mu = (-disc).sqrt();
            let (ep, em) = ((mu * t).exp(), (-mu * t).exp());
            let cosh = (ep + em) * T::half();
            let sinh = (ep - em) * T::half();
            let delta = delta0 * e * (cosh + lam / mu * sinh);
            let ddot = -delta0 * e * (w0_sq / mu) * sinh;
            (delta, ddot)
        }
    }
}

/// Trajectory of the linear oscillator sampled like the nonlinear reference.
pub fn linear_oscillator_reference<T: Real>(
    body: &BodyGeometry<T>,
    delta0: T,
    t_end: T,
    n_samples: usize,
) -> Result<Vec<(T, T, T)>> {
    let osc = LinearOscillator::new(body)?;
    let n = n_samples.max(2);
    Ok((0..n)
        .map(|i| {
            let t = t_end * T::from_usize(i).unwrap() / T::from_usize(n - 1).unwrap();
            let (d, v) = osc.eval(t, delta0);
            (t, d, v)
        })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::params::PhysicalParams;

    fn body() -> BodyGeometry<f64> {
        let p = PhysicalParams::new(15.0, 9.81, 1000.0).unwrap();
        BodyGeometry::arc_body(p, 10.0, 150.0, 0.5).unwrap()
    }

    fn local_extrema(traj: &ReturnTrajectory<f64>, t_end: f64) -> Vec<f64> {
        let mut out = Vec::new();
        let n = 4000;
        let dt = t_end / n as f64;
        let mut prev_v = traj.delta_dot(0.0);
        for i in 1..=n {
            let t = i as f64 * dt;
            let v = traj.delta_dot(t);
            if prev_v * v < 0.0 {
                out.push(traj.delta(t).abs());
            }
            prev_v = v;
        }
        out
    }

    #[test]
    fn equilibrium_start_stays_at_rest() {
        let traj = return_to_equilibrium_reference(&body(), 0.0, 5.0, 1e-10).unwrap();
        for t in [0.0, 1.0, 4.9] {
            assert!(traj.delta(t).abs() < 1e-12);
        }
    }

    #[test]
    fn release_decays_with_shrinking_extrema() {
        let traj =
            return_to_equilibrium_reference(&body(), -2.566114774905181, 10.0, 1e-10).unwrap();
        let ext = local_extrema(&traj, 10.0);
        assert!(ext.len() >= 2, "expected several oscillations, got {ext:?}");
        for w in ext.windows(2) {
            assert!(w[1] < w[0], "extrema must decrease: {ext:?}");
        }
        assert!(traj.delta(10.0).abs() < 2.566);
    }

    #[test]
    fn tolerance_refinement_is_consistent() {
        let b = body();
        let coarse = return_to_equilibrium_reference(&b, -1.0, 8.0, 1e-8).unwrap();
        let fine = return_to_equilibrium_reference(&b, -1.0, 8.0, 1e-11).unwrap();
        for i in 0..40 {
            let t = 0.2 * i as f64;
            assert!((coarse.delta(t) - fine.delta(t)).abs() < 1e-6);
        }
    }

    #[test]
    fn linear_limit_for_small_releases() {
        let b = body();
        let osc = LinearOscillator::new(&b).unwrap();
        let mut gaps = Vec::new();
        for delta0 in [0.1, 0.01] {
            let traj = return_to_equilibrium_reference(&b, -delta0, 8.0, 1e-11).unwrap();
            let mut worst: f64 = 0.0;
            for i in 0..=400 {
                let t = 8.0 * i as f64 / 400.0;
                let (lin, _) = osc.eval(t, -delta0);
                worst = worst.max((traj.delta(t) - lin).abs());
            }
            gaps.push(worst / delta0);
        }
        assert!(
            gaps[1] < 0.5 * gaps[0],
            "relative gap must shrink with delta0: {gaps:?}"
        );
    }

    #[test]
    fn linear_oscillator_is_underdamped_here_and_decays_at_rate() {
        let b = body();
        let osc = LinearOscillator::new(&b).unwrap();
        assert!(osc.decay_rate() > 0.0);
        let (d0, _) = osc.eval(0.0, 1.0);
        assert!((d0 - 1.0).abs() < 1e-14);
        // Envelope decay between successive same-phase samples.
        let w = (osc.stiffness / osc.m_eff - osc.decay_rate().powi(2)).sqrt();
        let period = 2.0 * std::f64::consts::PI / w;
        let (d1, _) = osc.eval(period, 1.0);
        let expect = (-osc.decay_rate() * period).exp();
        assert!((d1 - expect).abs() < 1e-10);
    }

    #[test]
    fn sampled_linear_reference_shape() {
        let rows = linear_oscillator_reference(&body(), -1.0, 5.0, 11).unwrap();
        assert_eq!(rows.len(), 11);
        assert_eq!(rows[0].0, 0.0);
        assert!((rows[0].1 + 1.0).abs() < 1e-14);
        assert!((rows[10].0 - 5.0).abs() < 1e-12);
    }

    #[test]
    fn inadmissible_release_is_rejected() {
        assert!(return_to_equilibrium_reference(&body(), -9.5, 1.0, 1e-8).is_err());
    }
}
