//! Uniform 1D finite-volume mesh and the wetted index range under the body.

use crate::error::{Error, Result};
use crate::scalar::Real;

/// Uniform mesh of `[0, L]` with `n_intervals + 1` cells centred at `x_j = j dx`.
///
/// The first and last cells are half cells `[0, dx/2]` and `[L - dx/2, L]`;
/// all updates treat cells uniformly and boundary closure is done through
/// ghost states.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Grid<T> {
    length: T,
    n_intervals: usize,
    dx: T,
}

impl<T: Real> Grid<T> {
    pub fn new(length: T, n_intervals: usize) -> Result<Self> {
        if !(length > T::zero()) || n_intervals == 0 {
            return Err(Error::config(format!(
                "grid needs positive length and at least one interval (L = {length}, N = {n_intervals})"
            )));
        }
        let dx = length / T::from_usize(n_intervals).unwrap();
        Ok(Self {
            length,
            n_intervals,
            dx,
        })
    }

    /// Build from a requested spacing; `dx` must divide `L` to within 1e-9 relative.
    pub fn from_spacing(length: T, dx: T) -> Result<Self> {
        if !(dx > T::zero()) {
            return Err(Error::config(format!("non-positive grid spacing {dx}")));
        }
        let ratio = (length / dx).as_f64();
        let n = ratio.round();
        if n < 1.0 || (ratio - n).abs() > 1e-9 * n.max(1.0) {
            return Err(Error::config(format!(
                "spacing {dx} does not divide the domain length {length}"
            )));
        }
        Grid::new(length, n as usize)
    }

    pub fn length(&self) -> T {
        self.length
    }

    pub fn dx(&self) -> T {
        self.dx
    }

    /// Number of cells (`N + 1`).
    pub fn n_cells(&self) -> usize {
        self.n_intervals + 1
    }

    /// Cell centre abscissa `x_j = j dx`.
    pub fn x(&self, j: usize) -> T {
        T::from_usize(j).unwrap() * self.dx
    }
}

/// Index range of the cells bracketing the wetted region `(x_-, x_+)`.
///
/// `j_minus`/`j_plus` are the nearest cells *outside* the region on each
/// side; the constrained (interior) cells are `j_minus + 1 ..= j_plus - 1`.
/// When a contact abscissa falls exactly on a cell centre, the tie is broken
/// toward the exterior, with a 1e-9-cell guard against roundoff in `x/dx`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct InteriorRegion<T> {
    pub j_minus: usize,
    pub j_plus: usize,
    /// Left contact abscissa (m).
    pub x_minus: T,
    /// Right contact abscissa (m).
    pub x_plus: T,
}

impl<T: Real> InteriorRegion<T> {
    pub fn locate(grid: &Grid<T>, x_minus: T, x_plus: T) -> Result<Self> {
        if !(x_minus < x_plus) {
            return Err(Error::config(format!(
                "contact points out of order: x_- = {x_minus}, x_+ = {x_plus}"
            )));
        }
        let guard = 1e-9;
        let jm = (x_minus / grid.dx()).as_f64() + guard;
        let jp = (x_plus / grid.dx()).as_f64() - guard;
        if jm < 0.0 {
            return Err(Error::config(
                "left contact point outside the domain".to_string(),
            ));
        }
        let j_minus = jm.floor() as usize;
        let j_plus = jp.ceil() as usize;
        let region = Self {
            j_minus,
            j_plus,
            x_minus,
            x_plus,
        };
        region.validate(grid)?;
        Ok(region)
    }

    fn validate(&self, grid: &Grid<T>) -> Result<()> {
        if self.j_plus < self.j_minus + 4 {
            return Err(Error::config(format!(
                "wetted region too narrow: j_+ - j_- = {} (need at least 3 interior cells)",
                self.j_plus - self.j_minus.min(self.j_plus)
            )));
        }
        if self.j_minus < 2 || self.j_plus + 2 > grid.n_cells() - 1 {
            return Err(Error::config(
                "body too close to a domain boundary (need two exterior cells each side)"
                    .to_string(),
            ));
        }
        Ok(())
    }

    /// Cells carrying the pressure source, `j_minus ..= j_plus`.
    pub fn span(&self) -> std::ops::RangeInclusive<usize> {
        self.j_minus..=self.j_plus
    }

    /// Number of cells in [`Self::span`].
    pub fn span_len(&self) -> usize {
        self.j_plus - self.j_minus + 1
    }

    /// Strictly interior (constrained) cells, `j_minus + 1 .. j_plus`.
    pub fn interior_cells(&self) -> std::ops::Range<usize> {
        self.j_minus + 1..self.j_plus
    }

    /// Whether the interface between cells `j` and `j + 1` lies under the body
    /// (these interfaces carry no mass-flux diffusion).
    pub fn interface_is_interior(&self, j: usize) -> bool {
        self.j_minus <= j && j < self.j_plus
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn grid_basics() {
        let g = Grid::new(300.0_f64, 6000).unwrap();
        assert_eq!(g.n_cells(), 6001);
        assert!((g.dx() - 0.05).abs() < 1e-15);
        assert!((g.x(3000) - 150.0).abs() < 1e-12);
    }

    #[test]
    fn from_spacing_requires_divisibility() {
        assert!(Grid::from_spacing(300.0_f64, 0.05).is_ok());
        assert!(Grid::from_spacing(300.0_f64, 0.07).is_err());
        assert!(Grid::from_spacing(300.0_f64, -1.0).is_err());
    }

    #[test]
    fn region_ties_break_toward_exterior() {
        let g = Grid::new(300.0_f64, 6000).unwrap();
        // Contact points on cell centres: those cells are exterior.
        let r = InteriorRegion::locate(&g, 140.0, 160.0).unwrap();
        assert_eq!(r.j_minus, 2800);
        assert_eq!(r.j_plus, 3200);
        assert_eq!(r.interior_cells(), 2801..3200);
        // Off-centre contacts floor/ceil outward.
        let r = InteriorRegion::locate(&g, 140.02, 159.98).unwrap();
        assert_eq!(r.j_minus, 2800);
        assert_eq!(r.j_plus, 3200);
    }

    #[test]
    fn region_rejects_narrow_or_boundary_bodies() {
        let g = Grid::new(10.0_f64, 20).unwrap();
        assert!(InteriorRegion::locate(&g, 4.9, 5.1).is_err());
        assert!(InteriorRegion::locate(&g, 0.2, 5.0).is_err());
    }

    #[test]
    fn interface_flags() {
        let g = Grid::new(4.0_f64, 8).unwrap();
        let r = InteriorRegion::locate(&g, 1.1, 2.9).unwrap();
        assert_eq!((r.j_minus, r.j_plus), (2, 6));
        assert!(!r.interface_is_interior(1));
        assert!(r.interface_is_interior(2));
        assert!(r.interface_is_interior(5));
        assert!(!r.interface_is_interior(6));
    }
}
