//! Riemann invariants of the shallow water system about the rest state.

use crate::error::{Error, Result};
use crate::params::PhysicalParams;
use crate::scalar::Real;

/// Right and left Riemann invariants
/// `R = q/h + 2(sqrt(g h) - sqrt(g h0))`, `L = q/h - 2(sqrt(g h) - sqrt(g h0))`.
pub fn riemann_invariants<T: Real>(h: T, q: T, params: &PhysicalParams<T>) -> Result<(T, T)> {
    if !(h > T::zero()) {
        return Err(Error::domain(format!(
            "non-positive depth {h} in Riemann invariants"
        )));
    }
    let u = q / h;
    let wave = T::two() * ((params.g * h).sqrt() - params.rest_celerity());
    Ok((u + wave, u - wave))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn params() -> PhysicalParams<f64> {
        PhysicalParams::new(15.0, 9.81, 1000.0).unwrap()
    }

    #[test]
    fn rest_state_vanishes() {
        let (r, l) = riemann_invariants(15.0, 0.0, &params()).unwrap();
        assert_eq!(r, 0.0);
        assert_eq!(l, 0.0);
    }

    #[test]
    fn zero_discharge_is_antisymmetric() {
        let (r, l) = riemann_invariants(17.3, 0.0, &params()).unwrap();
        assert_eq!(r, -l);
    }

    #[test]
    fn frozen_value() {
        let (r, l) = riemann_invariants(16.0, 3.0, &params()).unwrap();
        assert!((r - 0.9831556783984468).abs() < 1e-14);
        assert!((l - (-0.6081556783984468)).abs() < 1e-14);
    }

    #[test]
    fn simple_wave_families_are_annihilated() {
        // On h -> (h, -2 h (sqrt(g h) - sqrt(g h0))) the right invariant vanishes;
        // with the opposite sign the left invariant vanishes.
        let p = params();
        for i in 0..50 {
            let h = 10.0 + 10.0 * i as f64 / 49.0;
            let wave = 2.0 * ((p.g * h).sqrt() - (p.g * p.h0).sqrt());
            let (r, _) = riemann_invariants(h, -h * wave, &p).unwrap();
            assert!(r.abs() < 1e-12, "R = {r} at h = {h}");
            let (_, l) = riemann_invariants(h, h * wave, &p).unwrap();
            assert!(l.abs() < 1e-12, "L = {l} at h = {h}");
        }
    }

    #[test]
    fn rejects_dry_state() {
        assert!(riemann_invariants(0.0, 0.0, &params()).is_err());
        assert!(riemann_invariants(-1.0, 0.0, &params()).is_err());
    }
}
