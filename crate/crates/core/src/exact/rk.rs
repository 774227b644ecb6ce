//! Adaptive Dormand–Prince 5(4) integrator with Hermite dense output.
//!
//! Used only to produce reference trajectories; the tolerance should be set
//! far below the error of whatever scheme the trajectory validates.

use crate::error::{Error, Result};
use crate::scalar::Real;

/// Accepted steps of an adaptive solve: knots, states and derivatives.
#[derive(Debug, Clone)]
pub struct OdeSolution<T, const N: usize> {
    ts: Vec<T>,
    ys: Vec<[T; N]>,
    fs: Vec<[T; N]>,
}

impl<T: Real, const N: usize> OdeSolution<T, N> {
    pub fn t_start(&self) -> T {
        self.ts[0]
    }

    pub fn t_end(&self) -> T {
        *self.ts.last().unwrap()
    }

    pub fn knots(&self) -> &[T] {
        &self.ts
    }

    /// Cubic Hermite interpolation of the state at `t` (clamped to the span).
    pub fn eval(&self, t: T) -> [T; N] {
        let t = t.max(self.t_start()).min(self.t_end());
        // Binary search for the bracketing knot interval.
        let mut lo = 0usize;
        let mut hi = self.ts.len() - 1;
        while hi - lo > 1 {
            let mid = (lo + hi) / 2;
            if self.ts[mid] <= t {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        let (t0, t1) = (self.ts[lo], self.ts[hi]);
        let h = t1 - t0;
        if h == T::zero() {
            return self.ys[lo];
        }
        let s = (t - t0) / h;
        let s2 = s * s;
        let s3 = s2 * s;
        let h00 = T::two() * s3 - T::of(3.0) * s2 + T::one();
        let h10 = s3 - T::two() * s2 + s;
        let h01 = -T::two() * s3 + T::of(3.0) * s2;
        let h11 = s3 - s2;
        let mut out = [T::zero(); N];
        for (i, v) in out.iter_mut().enumerate() {
            *v = h00 * self.ys[lo][i]
                + h10 * h * self.fs[lo][i]
                + h01 * self.ys[hi][i]
                + h11 * h * self.fs[hi][i];
        }
        out
    }
}

const MAX_STEPS: usize = 50_000_000;

/// Integrate `y' = f(t, y)` from `t0` to `t_end` with local tolerance
/// `atol + rtol |y|` per component.
pub fn integrate_adaptive<T: Real, const N: usize>(
    mut f: impl FnMut(T, &[T; N]) -> Result<[T; N]>,
    t0: T,
    y0: [T; N],
    t_end: T,
    rtol: T,
    atol: T,
) -> Result<OdeSolution<T, N>> {
    if !(t_end > t0) {
        return Err(Error::domain(format!(
            "empty integration span [{t0}, {t_end}]"
        )));
    }
    // Dormand-Prince coefficients.
    let a21 = T::of(1.0 / 5.0);
    let (a31, a32) = (T::of(3.0 / 40.0), T::of(9.0 / 40.0));
    let (a41, a42, a43) = (T::of(44.0 / 45.0), T::of(-56.0 / 15.0), T::of(32.0 / 9.0));
    let (a51, a52, a53, a54) = (
        T::of(19372.0 / 6561.0),
        T::of(-25360.0 / 2187.0),
        T::of(64448.0 / 6561.0),
        T::of(-212.0 / 729.0),
    );
    let (a61, a62, a63, a64, a65) = (
        T::of(9017.0 / 3168.0),
        T::of(-355.0 / 33.0),
        T::of(46732.0 / 5247.0),
        T::of(49.0 / 176.0),
        T::of(-5103.0 / 18656.0),
    );
    let (b1, b3, b4, b5, b6) = (
        T::of(35.0 / 384.0),
        T::of(500.0 / 1113.0),
        T::of(125.0 / 192.0),
        T::of(-2187.0 / 6784.0),
        T::of(11.0 / 84.0),
    );
    // Error weights: 5th-order minus embedded 4th-order solution.
    let (e1, e3, e4, e5, e6, e7) = (
        T::of(35.0 / 384.0 - 5179.0 / 57600.0),
        T::of(500.0 / 1113.0 - 7571.0 / 16695.0),
        T::of(125.0 / 192.0 - 393.0 / 640.0),
        T::of(-2187.0 / 6784.0 + 92097.0 / 339200.0),
        T::of(11.0 / 84.0 - 187.0 / 2100.0),
        T::of(-1.0 / 40.0),
    );
    let (c2, c3, c4, c5) = (
        T::of(1.0 / 5.0),
        T::of(3.0 / 10.0),
        T::of(4.0 / 5.0),
        T::of(8.0 / 9.0),
    );

    let span = t_end - t0;
    let mut h = span * T::of(1e-4);
    let h_min = span * T::epsilon() * T::of(16.0);
    let mut t = t0;
    let mut y = y0;
    let mut k1 = f(t, &y)?;

    let mut ts = vec![t];
    let mut ys = vec![y];
    let mut fs = vec![k1];

    let comb = |y: &[T; N], terms: &[(T, &[T; N])], h: T| -> [T; N] {
        let mut out = *y;
        for i in 0..N {
            let mut acc = T::zero();
            for (w, k) in terms {
                acc += *w * k[i];
            }
            out[i] += h * acc;
        }
        out
    };

    for _ in 0..MAX_STEPS {
        if t >= t_end {
            return Ok(OdeSolution { ts, ys, fs });
        }
        h = h.min(t_end - t);
        let k2 = f(t + c2 * h, &comb(&y, &[(a21, &k1)], h))?;
        let k3 = f(t + c3 * h, &comb(&y, &[(a31, &k1), (a32, &k2)], h))?;
        let k4 = f(
            t + c4 * h,
            &comb(&y, &[(a41, &k1), (a42, &k2), (a43, &k3)], h),
        )?;
        let k5 = f(
            t + c5 * h,
            &comb(&y, &[(a51, &k1), (a52, &k2), (a53, &k3), (a54, &k4)], h),
        )?;
        let k6 = f(
            t + h,
            &comb(
                &y,
                &[(a61, &k1), (a62, &k2), (a63, &k3), (a64, &k4), (a65, &k5)],
                h,
            ),
        )?;
        let y_new = comb(
            &y,
            &[(b1, &k1), (b3, &k3), (b4, &k4), (b5, &k5), (b6, &k6)],
            h,
        );
        let k7 = f(t + h, &y_new)?;

        let mut err = T::zero();
        for i in 0..N {
            let e = e1 * k1[i] + e3 * k3[i] + e4 * k4[i] + e5 * k5[i] + e6 * k6[i] + e7 * k7[i];
            let scale = atol + rtol * y[i].abs().max(y_new[i].abs());
            let r = h * e / scale;
            err += r * r;
        }
        err = (err / T::from_usize(N).unwrap()).sqrt();

        if err <= T::one() {
            t += h;
            y = y_new;
            k1 = k7;
            ts.push(t);
            ys.push(y);
            fs.push(k1);
        }
        let factor = if err == T::zero() {
            T::of(5.0)
        } else {
            (T::of(0.9) * err.powf(T::of(-0.2)))
                .max(T::of(0.2))
                .min(T::of(5.0))
        };
        h *= factor;
        if h < h_min {
            return Err(Error::numerical(format!(
                "adaptive step collapsed at t = {t} (h = {h})"
            )));
        }
    }
    Err(Error::numerical(
        "adaptive solver exceeded the step budget".to_string(),
    ))
}
