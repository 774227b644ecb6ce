//! Floating-body geometry, hydrostatic equilibrium and shape quadratures.
//!
//! The production hull is the union of a rectangular box of width `2R` and a
//! circular-arc bottom cut from a disk of radius `2R` whose centre lies on
//! the vertical through the hull-top midpoint `C`. Writing `z_C` for the
//! elevation of `C`, the disk centre sits at `z_C + R` (the arc subtends a
//! half-angle of pi/6, its corners are `sqrt(3) R` below the centre and the
//! box height is `R(sqrt(3) - 1)`, so the total body height is `R`). The
//! wetted surface is therefore
//!
//! ```text
//! zeta_w(x) = z_C + R - sqrt(4 R^2 - (x - x0)^2),   |x - x0| <= R,
//! ```
//!
//! with the fixed vertical side walls at `x_± = x0 ± R`. Balancing the weight
//! against the displaced column gives the equilibrium elevation
//! `z_C,eq = (R/2)(1 - rho_s/rho)(sqrt(3) + 2 pi / 3 - 2)` and the volume per
//! unit width `V = R^2 (sqrt(3) + 2 pi / 3 - 2)`.
//!
//! A flat-bottomed hull with prescribed draft is provided for closed-form
//! unit tests.

use crate::error::{Error, Result};
use crate::params::PhysicalParams;
use crate::quad;
use crate::scalar::Real;

/// `sqrt(3) + 2 pi / 3 - 2`, the shape constant of the box-plus-arc hull.
fn shape_constant<T: Real>() -> T {
    T::of(3.0).sqrt() + T::two() * T::PI() / T::of(3.0) - T::two()
}

/// Submerged cross-section area of the box-plus-arc body (per unit width).
pub fn body_volume<T: Real>(radius: T) -> T {
    radius * radius * shape_constant()
}

/// Equilibrium elevation of the hull-top midpoint for a given density ratio.
pub fn equilibrium_elevation<T: Real>(radius: T, density_ratio: T) -> Result<T> {
    if !(density_ratio > T::zero() && density_ratio < T::one()) {
        return Err(Error::domain(format!(
            "density ratio must lie in (0, 1) for a floating body, got {density_ratio}"
        )));
    }
    Ok(radius * T::half() * (T::one() - density_ratio) * shape_constant())
}

/// Hull bottom profile.
#[derive(Debug, Clone, Copy, PartialEq)]
enum HullProfile<T> {
    /// Circular-arc bottom of radius `2 R`; stores `R`.
    Arc { radius: T },
    /// Flat bottom at constant equilibrium draft (test hull).
    Flat { draft: T },
}

/// A partially immersed rigid body with vertical side walls.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BodyGeometry<T> {
    params: PhysicalParams<T>,
    profile: HullProfile<T>,
    /// Horizontal centre of the hull (m).
    pub x0: T,
    /// Half-width, so the contact points are `x0 ± half_width` (m).
    pub half_width: T,
    /// Solid-to-water density ratio (1 for the flat test hull).
    pub density_ratio: T,
    /// Equilibrium elevation of the hull-top midpoint `C` (m); 0 for the flat hull.
    pub z_c_eq: T,
    /// Body mass per unit transverse width (kg/m).
    pub mass: T,
}

impl<T: Real> BodyGeometry<T> {
    /// The box-plus-arc body with shape parameter `radius` centred at `x0`.
    pub fn arc_body(params: PhysicalParams<T>, radius: T, x0: T, density_ratio: T) -> Result<Self> {
        if !(radius > T::zero()) {
            return Err(Error::domain(format!(
                "shape radius must be positive, got {radius}"
            )));
        }
        let z_c_eq = equilibrium_elevation(radius, density_ratio)?;
        let mass = params.rho * density_ratio * body_volume(radius);
        let body = Self {
            params,
            profile: HullProfile::Arc { radius },
            x0,
            half_width: radius,
            density_ratio,
            z_c_eq,
            mass,
        };
        if !(body.min_wetted_depth(T::zero()) > T::zero()) {
            return Err(Error::domain(
                "equilibrium draft exceeds the water depth".to_string(),
            ));
        }
        Ok(body)
    }

    /// Flat-bottomed hull floating at the given equilibrium `draft` (test hull).
    pub fn flat_hull(params: PhysicalParams<T>, half_width: T, draft: T, x0: T) -> Result<Self> {
        if !(half_width > T::zero()) || !(draft > T::zero()) || !(draft < params.h0) {
            return Err(Error::domain(format!(
                "flat hull needs 0 < draft < h0 and positive half-width (draft = {draft})"
            )));
        }
        let mass = params.rho * T::two() * half_width * draft;
        Ok(Self {
            params,
            profile: HullProfile::Flat { draft },
            x0,
            half_width,
            density_ratio: T::one(),
            z_c_eq: T::zero(),
            mass,
        })
    }

    pub fn params(&self) -> &PhysicalParams<T> {
        &self.params
    }

    /// Left contact abscissa `x_- = x0 - R`.
    pub fn x_minus(&self) -> T {
        self.x0 - self.half_width
    }

    /// Right contact abscissa `x_+ = x0 + R`.
    pub fn x_plus(&self) -> T {
        self.x0 + self.half_width
    }

    /// Wetted width `x_+ - x_-`.
    pub fn width(&self) -> T {
        T::two() * self.half_width
    }

    fn check_abscissa(&self, x: T) -> Result<()> {
        if (x - self.x0).abs() > self.half_width * (T::one() + T::of(1e-12)) {
            return Err(Error::domain(format!(
                "abscissa {x} outside the wetted range [{}, {}]",
                self.x_minus(),
                self.x_plus()
            )));
        }
        Ok(())
    }

    /// Equilibrium hull elevation at `x`.
    pub fn hull_elevation_eq(&self, x: T) -> Result<T> {
        self.check_abscissa(x)?;
        Ok(self.zeta_w_eq_unchecked(x))
    }

    /// Hull elevation at `x` for displacement `delta` (rigid vertical shift).
    pub fn hull_elevation(&self, x: T, delta: T) -> Result<T> {
        Ok(self.hull_elevation_eq(x)? + delta)
    }

    fn zeta_w_eq_unchecked(&self, x: T) -> T {
        let s = x - self.x0;
        match self.profile {
            HullProfile::Arc { radius } => {
                let two_r = T::two() * radius;
                self.z_c_eq + radius - (two_r * two_r - s * s).max(T::zero()).sqrt()
            }
            HullProfile::Flat { draft } => -draft,
        }
    }

    /// Hull slope `d zeta_w / dx` at `x` (independent of `delta`).
    pub fn hull_slope(&self, x: T) -> Result<T> {
        self.check_abscissa(x)?;
        let s = x - self.x0;
        Ok(match self.profile {
            HullProfile::Arc { radius } => {
                let two_r = T::two() * radius;
                s / (two_r * two_r - s * s).max(T::zero()).sqrt()
            }
            HullProfile::Flat { .. } => T::zero(),
        })
    }

    /// Wetted depth `h_w(x; delta) = h0 + zeta_w,eq(x) + delta`.
    pub fn wetted_depth(&self, x: T, delta: T) -> Result<T> {
        Ok(self.params.h0 + self.hull_elevation(x, delta)?)
    }

    /// Minimum wetted depth over the hull for displacement `delta`.
    pub fn min_wetted_depth(&self, delta: T) -> T {
        match self.profile {
            // The arc is lowest at x0.
            HullProfile::Arc { radius } => self.params.h0 + self.z_c_eq - radius + delta,
            HullProfile::Flat { draft } => self.params.h0 - draft + delta,
        }
    }

    /// Reject displacements with `min h_w < 0.05 h0` (grounding is out of scope).
    pub fn check_admissible(&self, delta: T) -> Result<()> {
        let min = self.min_wetted_depth(delta);
        if min < T::of(0.05) * self.params.h0 {
            return Err(Error::domain(format!(
                "inadmissible displacement delta = {delta}: min wetted depth {min} < 0.05 h0"
            )));
        }
        Ok(())
    }

    /// A view of the wetted surface at a fixed displacement.
    pub fn wetted(&self, delta: T) -> Result<WettedSurface<'_, T>> {
        self.check_admissible(delta)?;
        Ok(WettedSurface { body: self, delta })
    }

    fn depth_positive(&self, delta: T) -> Result<()> {
        if !(self.min_wetted_depth(delta) > T::zero()) {
            return Err(Error::domain(format!(
                "hull touches the bottom at delta = {delta}"
            )));
        }
        Ok(())
    }

    /// `alpha(delta) = int 1/h_w` over the wetted range.
    pub fn alpha_coefficient(&self, delta: T) -> Result<T> {
        self.depth_positive(delta)?;
        quad::integrate(
            |x| T::one() / self.depth_unchecked(x, delta),
            self.x_minus(),
            self.x_plus(),
            quad::shape_tolerance(),
        )
    }

    fn depth_unchecked(&self, x: T, delta: T) -> T {
        self.params.h0 + self.zeta_w_eq_unchecked(x) + delta
    }

    /// Centred moments `I_k = int (x - x0)^k / h_w`, k = 0, 1, 2.
    fn centred_moments(&self, delta: T) -> Result<(T, T, T)> {
        self.depth_positive(delta)?;
        let tol = quad::shape_tolerance();
        let (a, b) = (self.x_minus(), self.x_plus());
        let i0 = quad::integrate(|x| T::one() / self.depth_unchecked(x, delta), a, b, tol)?;
        let i1 = quad::integrate(
            |x| (x - self.x0) / self.depth_unchecked(x, delta),
            a,
            b,
            tol,
        )?;
        let i2 = quad::integrate(
            |x| {
                let s = x - self.x0;
                s * s / self.depth_unchecked(x, delta)
            },
            a,
            b,
            tol,
        )?;
        Ok((i0, i1, i2))
    }

    /// Added mass `m_a(delta) = rho alpha(delta) Var(x)` with `1/h_w` weights.
    pub fn added_mass(&self, delta: T) -> Result<T> {
        let (i0, i1, i2) = self.centred_moments(delta)?;
        Ok(self.params.rho * (i2 - i1 * i1 / i0))
    }

    /// Depth-weighted average abscissa `<x>` of the wetted range.
    pub fn average_x(&self, delta: T) -> Result<T> {
        let (i0, i1, _) = self.centred_moments(delta)?;
        Ok(self.x0 + i1 / i0)
    }

    /// Hydrostatic stiffness `c = rho g (x_+ - x_-)`.
    pub fn stiffness(&self) -> T {
        self.params.rho * self.params.g * self.width()
    }

    /// `beta(delta) = rho int (x - x0)/h_w d/dx[(x - x0)^2 / h_w]`.
    pub fn beta_coefficient(&self, delta: T) -> Result<T> {
        self.depth_positive(delta)?;
        let integrand = |x: T| {
            let s = x - self.x0;
            let h = self.depth_unchecked(x, delta);
            let slope = match self.profile {
                HullProfile::Arc { radius } => {
                    let two_r = T::two() * radius;
                    s / (two_r * two_r - s * s).max(T::zero()).sqrt()
                }
                HullProfile::Flat { .. } => T::zero(),
            };
            s / h * (T::two() * s / h - s * s * slope / (h * h))
        };
        let v = quad::integrate(
            integrand,
            self.x_minus(),
            self.x_plus(),
            quad::shape_tolerance(),
        )?;
        Ok(self.params.rho * v)
    }

    /// `m g + rho g int zeta_w(x; delta)`: zero at equilibrium (`delta = 0`).
    pub fn buoyancy_residual_at(&self, delta: T) -> Result<T> {
        let integral = quad::integrate(
            |x| self.zeta_w_eq_unchecked(x) + delta,
            self.x_minus(),
            self.x_plus(),
            quad::shape_tolerance(),
        )?;
        Ok(self.mass * self.params.g + self.params.rho * self.params.g * integral)
    }

    /// Equilibrium buoyancy residual (should vanish to quadrature tolerance).
    pub fn buoyancy_residual(&self) -> Result<T> {
        self.buoyancy_residual_at(T::zero())
    }
}

/// Wetted surface at a fixed displacement; admissibility already checked.
#[derive(Debug, Clone, Copy)]
pub struct WettedSurface<'a, T> {
    body: &'a BodyGeometry<T>,
    delta: T,
}

impl<'a, T: Real> WettedSurface<'a, T> {
    pub fn delta(&self) -> T {
        self.delta
    }

    pub fn zeta(&self, x: T) -> Result<T> {
        self.body.hull_elevation(x, self.delta)
    }

    pub fn depth(&self, x: T) -> Result<T> {
        self.body.wetted_depth(x, self.delta)
    }
}
