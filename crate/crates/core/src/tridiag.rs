//! Factored tridiagonal solves (Thomas algorithm, no pivoting).
//!
//! Valid for the diagonally dominant systems assembled by the dispersive
//! operator; the factorisation is computed once and reused every step.

use crate::error::{Error, Result};
use crate::scalar::Real;

/// LU-style factorisation of a tridiagonal matrix.
#[derive(Debug, Clone)]
pub struct TridiagFactor<T> {
    lower: Vec<T>,
    /// Modified upper coefficients `c'_i`.
    cp: Vec<T>,
    /// Inverse pivots `1 / (d_i - a_i c'_{i-1})`.
    pivot_inv: Vec<T>,
}

impl<T: Real> TridiagFactor<T> {
    /// Factor the matrix with sub-diagonal `lower` (len n, `lower[0]` unused),
    /// diagonal `diag` (len n) and super-diagonal `upper` (len n, last unused).
    pub fn new(lower: &[T], diag: &[T], upper: &[T]) -> Result<Self> {
        let n = diag.len();
        if n == 0 || lower.len() != n || upper.len() != n {
            return Err(Error::numerical(
                "tridiagonal bands must share the length".to_string(),
            ));
        }
        let mut cp = vec![T::zero(); n];
        let mut pivot_inv = vec![T::zero(); n];
        let mut pivot = diag[0];
        for i in 0..n {
            if i > 0 {
                pivot = diag[i] - lower[i] * cp[i - 1];
            }
            if pivot.abs() <= T::epsilon() * T::of(16.0) {
                return Err(Error::numerical(format!(
                    "singular tridiagonal pivot at row {i}"
                )));
            }
            pivot_inv[i] = T::one() / pivot;
            if i + 1 < n {
                cp[i] = upper[i] * pivot_inv[i];
            }
        }
        Ok(Self {
            lower: lower.to_vec(),
            cp,
            pivot_inv,
        })
    }

    pub fn len(&self) -> usize {
        self.pivot_inv.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pivot_inv.is_empty()
    }

    /// Solve in place: `rhs` enters as the right-hand side, leaves as the solution.
    pub fn solve_in_place(&self, rhs: &mut [T]) {
        let n = self.len();
        assert_eq!(rhs.len(), n, "rhs length must match the factorisation");
        rhs[0] *= self.pivot_inv[0];
        for i in 1..n {
            rhs[i] = (rhs[i] - self.lower[i] * rhs[i - 1]) * self.pivot_inv[i];
        }
        for i in (0..n - 1).rev() {
            let next = rhs[i + 1];
            rhs[i] -= self.cp[i] * next;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mat_vec(lower: &[f64], diag: &[f64], upper: &[f64], x: &[f64]) -> Vec<f64> {
        let n = diag.len();
        (0..n)
            .map(|i| {
                let mut v = diag[i] * x[i];
                if i > 0 {
                    v += lower[i] * x[i - 1];
                }
                if i + 1 < n {
                    v += upper[i] * x[i + 1];
                }
                v
            })
            .collect()
    }

    #[test]
    fn solves_a_dominant_system() {
        let n = 40;
        let lower = vec![-1.0; n];
        let diag = vec![4.0; n];
        let upper = vec![-1.0; n];
        let f = TridiagFactor::new(&lower, &diag, &upper).unwrap();
        let x_true: Vec<f64> = (0..n).map(|i| ((i * 37) % 11) as f64 - 5.0).collect();
        let mut rhs = mat_vec(&lower, &diag, &upper, &x_true);
        f.solve_in_place(&mut rhs);
        for (a, b) in rhs.iter().zip(&x_true) {
            assert!((a - b).abs() < 1e-12);
        }
    }

    #[test]
    fn identity_rows_pass_through() {
        let n = 9;
        let mut lower = vec![-2.0; n];
        let mut diag = vec![5.0; n];
        let mut upper = vec![-2.0; n];
        for i in 3..=5 {
            lower[i] = 0.0;
            diag[i] = 1.0;
            upper[i] = 0.0;
        }
        let f = TridiagFactor::new(&lower, &diag, &upper).unwrap();
        let rhs_in: Vec<f64> = vec![1.0, 2.0, 3.0, 4.0, 5.0, 6.0, 7.0, 8.0, 9.0];
        let mut x = rhs_in.clone();
        f.solve_in_place(&mut x);
        // Identity rows return their right-hand side unchanged.
        for i in 3..=5 {
            assert!((x[i] - rhs_in[i]).abs() < 1e-13, "row {i}");
        }
        // And the full residual vanishes.
        let ax = mat_vec(&lower, &diag, &upper, &x);
        for (a, b) in ax.iter().zip(&rhs_in) {
            assert!((a - b).abs() < 1e-12);
        }
    }

    #[test]
    fn rejects_singular_matrix() {
        let lower = vec![0.0, 1.0];
        let diag = vec![1.0, 1.0];
        let upper = vec![1.0, 0.0];
        assert!(TridiagFactor::new(&lower, &diag, &upper).is_err());
    }
}
