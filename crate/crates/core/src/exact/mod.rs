//! Closed-form and ODE-based reference solutions used for validation.

mod cubic;
mod oscillator;
mod riemann;
mod rk;
mod solitary;

pub use cubic::{contact_elevation, damping_nu, CubicContext};
pub use oscillator::{
    linear_damping_coefficient, linear_oscillator_reference, return_to_equilibrium_reference,
    LinearOscillator, ReturnTrajectory,
};
pub use riemann::riemann_invariants;
pub use rk::{integrate_adaptive, OdeSolution};
pub use solitary::SolitaryWave;
