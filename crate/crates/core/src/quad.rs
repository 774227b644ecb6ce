//! Adaptive Gauss–Legendre quadrature for the smooth hull integrals.

use crate::error::{Error, Result};
use crate::scalar::Real;

/// 15-point Gauss–Legendre rule on [-1, 1]: (node, weight).
const GL15: [(f64, f64); 15] = [
    (-0.9879925180204854, 0.030753241996118647),
    (-0.937273392400706, 0.07036604748810807),
    (-0.8482065834104272, 0.10715922046717177),
    (-0.7244177313601701, 0.1395706779261539),
    (-0.5709721726085388, 0.16626920581699378),
    (-0.3941513470775634, 0.18616100001556188),
    (-0.20119409399743451, 0.19843148532711125),
    (0.0, 0.2025782419255609),
    (0.20119409399743451, 0.19843148532711125),
    (0.3941513470775634, 0.18616100001556188),
    (0.5709721726085388, 0.16626920581699378),
    (0.7244177313601701, 0.1395706779261539),
    (0.8482065834104272, 0.10715922046717177),
    (0.937273392400706, 0.07036604748810807),
    (0.9879925180204854, 0.030753241996118647),
];

fn gl15_panel<T: Real, F: Fn(T) -> T>(f: &F, a: T, b: T) -> T {
    let mid = (a + b) * T::half();
    let hal = (b - a) * T::half();
    let mut acc = T::zero();
    for &(x, w) in GL15.iter() {
        acc += T::of(w) * f(mid + hal * T::of(x));
    }
    acc * hal
}

fn refine<T: Real, F: Fn(T) -> T>(f: &F, a: T, b: T, whole: T, tol: T, depth: usize) -> Result<T> {
    if depth == 0 {
        return Err(Error::numerical(format!(
            "adaptive quadrature failed to converge on [{a}, {b}]"
        )));
    }
    let mid = (a + b) * T::half();
    let left = gl15_panel(f, a, mid);
    let right = gl15_panel(f, mid, b);
    let sum = left + right;
    if (sum - whole).abs() <= tol {
        return Ok(sum);
    }
    let half_tol = tol * T::half();
    Ok(refine(f, a, mid, left, half_tol, depth - 1)?
        + refine(f, mid, b, right, half_tol, depth - 1)?)
}

/// Integrate `f` over `[a, b]` to the requested relative tolerance.
///
/// The tolerance is relative to `int |f|`, so odd integrands with a vanishing
/// integral still terminate.
pub fn integrate<T: Real, F: Fn(T) -> T>(f: F, a: T, b: T, rel_tol: T) -> Result<T> {
    if a == b {
        return Ok(T::zero());
    }
    let whole = gl15_panel(&f, a, b);
    let magnitude = gl15_panel(&|x| f(x).abs(), a, b).abs();
    let scale = whole
        .abs()
        .max(magnitude)
        .max((b - a).abs() * T::of(1e-300));
    refine(&f, a, b, whole, rel_tol * scale, 48)
}

/// Default tolerance used for the hull shape integrals.
pub fn shape_tolerance<T: Real>() -> T {
    T::of(1e-10)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn polynomial_is_exact() {
        let v = integrate(|x: f64| 3.0 * x * x, 0.0, 2.0, 1e-12).unwrap();
        assert!((v - 8.0).abs() < 1e-12);
    }

    #[test]
    fn arc_area_matches_closed_form() {
        // int_{-R}^{R} sqrt(4R^2 - s^2) ds = (sqrt(3) + 2 pi / 3) R^2
        let r = 10.0_f64;
        let v = integrate(|s: f64| (4.0 * r * r - s * s).sqrt(), -r, r, 1e-12).unwrap();
        let exact = (3.0_f64.sqrt() + 2.0 * std::f64::consts::PI / 3.0) * r * r;
        assert!((v - exact).abs() < 1e-9 * exact);
    }

    #[test]
    fn oscillatory_integrand_converges() {
        let v = integrate(|x: f64| (40.0 * x).sin(), 0.0, 1.0, 1e-12).unwrap();
        let exact = (1.0 - 40.0_f64.cos()) / 40.0;
        assert!((v - exact).abs() < 1e-11);
    }

    #[test]
    fn empty_interval_is_zero() {
        assert_eq!(integrate(|x: f64| x, 1.0, 1.0, 1e-10).unwrap(), 0.0);
    }
}
