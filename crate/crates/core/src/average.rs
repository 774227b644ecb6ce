//! Depth-weighted averaging over the wetted range.
//!
//! All sums over `j_- ..= j_+` use half weights at both end cells; the
//! average of `f` weighs each cell by `1/h_j`. Every interior sum in the
//! scheme (average, variance, pressure constant) uses these same weights.

use crate::error::{Error, Result};
use crate::scalar::Real;

fn check_segment<T: Real>(f: &[T], h: &[T]) -> Result<()> {
    if f.len() != h.len() || f.len() < 2 {
        return Err(Error::domain(format!(
            "segment lengths invalid: f has {}, h has {}",
            f.len(),
            h.len()
        )));
    }
    if let Some(&bad) = h.iter().find(|&&v| !(v > T::zero())) {
        return Err(Error::domain(format!(
            "non-positive depth {bad} in averaging segment"
        )));
    }
    Ok(())
}

/// Sum with half weights on the first and last entry.
pub fn sharp_sum<T: Real>(a: impl IntoIterator<Item = T>) -> T {
    let vals: Vec<T> = a.into_iter().collect();
    let n = vals.len();
    let mut acc = T::zero();
    for (i, v) in vals.into_iter().enumerate() {
        let w = if i == 0 || i == n - 1 {
            T::half()
        } else {
            T::one()
        };
        acc += w * v;
    }
    acc
}

/// Half-weighted sum of `1/h_j` over the segment (the pressure-constant denominator).
pub fn sharp_inverse_depth_sum<T: Real>(h: &[T]) -> Result<T> {
    check_segment(h, h)?;
    Ok(sharp_sum(h.iter().map(|&v| T::one() / v)))
}

/// Depth-weighted average of `f` over the segment `[j_-, j_+]`.
pub fn discrete_average<T: Real>(f: &[T], h: &[T]) -> Result<T> {
    check_segment(f, h)?;
    let num = sharp_sum(f.iter().zip(h).map(|(&fv, &hv)| fv / hv));
    let den = sharp_sum(h.iter().map(|&hv| T::one() / hv));
    Ok(num / den)
}

/// Oscillating component `f*_j = f_j - <f>`.
pub fn oscillating_part<T: Real>(f: &[T], h: &[T]) -> Result<Vec<T>> {
    let avg = discrete_average(f, h)?;
    Ok(f.iter().map(|&v| v - avg).collect())
}

/// Variance `Var(f) = <f^2> - <f>^2` with the same weights.
pub fn discrete_variance<T: Real>(f: &[T], h: &[T]) -> Result<T> {
    let avg = discrete_average(f, h)?;
    // <(f - <f>)^2> is algebraically <f^2> - <f>^2 and better conditioned.
    let sq: Vec<T> = f.iter().map(|&v| (v - avg) * (v - avg)).collect();
    discrete_average(&sq, h)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn average_of_constant_is_constant() {
        let f = [3.7_f64; 5];
        let h = [12.0, 9.0, 8.5, 9.0, 14.0];
        assert!((discrete_average(&f, &h).unwrap() - 3.7).abs() < 1e-15);
    }

    #[test]
    fn hand_case_from_half_weights() {
        // f = (1,2,3), h = (1,2,1): (0.5*1 + 2/2 + 0.5*3) / (0.5 + 0.5 + 0.5) = 2.
        let f = [1.0_f64, 2.0, 3.0];
        let h = [1.0, 2.0, 1.0];
        assert_eq!(discrete_average(&f, &h).unwrap(), 2.0);
        let star = oscillating_part(&f, &h).unwrap();
        assert_eq!(star, vec![-1.0, 0.0, 1.0]);
    }

    #[test]
    fn symmetric_abscissae_average_to_centre() {
        let x: Vec<f64> = (0..9).map(|j| 2.0 + 0.25 * j as f64).collect();
        let h = [9.0, 8.0, 7.5, 7.1, 7.0, 7.1, 7.5, 8.0, 9.0];
        assert!((discrete_average(&x, &h).unwrap() - 3.0).abs() < 1e-14);
    }

    #[test]
    fn variance_of_abscissae_with_flat_depth() {
        // Uniform weights: <x^2> - <x>^2 over symmetric centres about x0.
        let x: Vec<f64> = (0..5).map(|j| j as f64).collect();
        let h = [15.0_f64; 5];
        // sharp sums: (0.5*0 + 1 + 4 + 9 + 0.5*16)/4 - 2^2 = 22/4 - 4 = 1.5
        let v = discrete_variance(&x, &h).unwrap();
        assert!((v - 1.5).abs() < 1e-14);
    }

    #[test]
    fn variance_scales_quadratically() {
        let f = [0.3_f64, -1.2, 2.5, 0.0, 1.1];
        let h = [15.0, 14.2, 13.1, 14.8, 15.5];
        let v1 = discrete_variance(&f, &h).unwrap();
        let fa: Vec<f64> = f.iter().map(|v| 3.0 * v).collect();
        let v9 = discrete_variance(&fa, &h).unwrap();
        assert!((v9 - 9.0 * v1).abs() < 1e-12 * v9.abs().max(1.0));
    }

    #[test]
    fn non_positive_depth_is_rejected() {
        let f = [1.0_f64, 2.0, 3.0];
        assert!(discrete_average(&f, &[1.0, -2.0, 1.0]).is_err());
        assert!(discrete_average(&f, &[1.0, 0.0, 1.0]).is_err());
        assert!(discrete_average(&f, &[1.0, 1.0]).is_err());
    }

    proptest! {
        #[test]
        fn starred_sharp_sum_vanishes(
            f in proptest::collection::vec(-1e3_f64..1e3, 3..40),
            hseed in proptest::collection::vec(0.1_f64..50.0, 3..40),
        ) {
            let n = f.len().min(hseed.len());
            let f = &f[..n];
            let h = &hseed[..n];
            let star = oscillating_part(f, h).unwrap();
            let resid: f64 = sharp_sum(star.iter().zip(h).map(|(&s, &hv)| s / hv));
            let scale = f.iter().fold(0.0_f64, |a, &v| a.max(v.abs())).max(1.0);
            prop_assert!(resid.abs() <= 1e-12 * scale);
        }

        #[test]
        fn variance_is_nonnegative(
            f in proptest::collection::vec(-1e3_f64..1e3, 3..40),
            hseed in proptest::collection::vec(0.1_f64..50.0, 3..40),
        ) {
            let n = f.len().min(hseed.len());
            let v = discrete_variance(&f[..n], &hseed[..n]).unwrap();
            let scale = f.iter().fold(0.0_f64, |a, &x| a.max(x.abs())).max(1.0);
            prop_assert!(v >= -1e-14 * scale * scale);
        }

        #[test]
        fn average_is_linear_and_normalised(
            f in proptest::collection::vec(-1e2_f64..1e2, 5..20),
            g in proptest::collection::vec(-1e2_f64..1e2, 5..20),
            hseed in proptest::collection::vec(0.5_f64..30.0, 5..20),
            a in -3.0_f64..3.0,
        ) {
            let n = f.len().min(g.len()).min(hseed.len());
            let (f, g, h) = (&f[..n], &g[..n], &hseed[..n]);
            let ones = vec![1.0; n];
            prop_assert!((discrete_average(&ones, h).unwrap() - 1.0).abs() < 1e-13);
            let comb: Vec<f64> = f.iter().zip(g).map(|(&x, &y)| a * x + y).collect();
            let lhs = discrete_average(&comb, h).unwrap();
            let rhs = a * discrete_average(f, h).unwrap() + discrete_average(g, h).unwrap();
            prop_assert!((lhs - rhs).abs() < 1e-10 * lhs.abs().max(1.0));
        }
    }
}
