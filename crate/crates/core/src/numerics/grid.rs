use crate::error::{Error, Result};

/// Strictly increasing finite sample points.
#[derive(Debug, Clone, PartialEq)]
pub struct Grid {
    points: Vec<f64>,
}

impl Grid {
    pub fn new(points: Vec<f64>) -> Result<Self> {
        if points.iter().any(|p| !p.is_finite()) {
            return Err(Error::InvalidParams("grid points must be finite".into()));
        }
        if points.windows(2).any(|w| w[1] <= w[0]) {
            return Err(Error::InvalidParams(
                "grid points must be strictly increasing".into(),
            ));
        }
        Ok(Grid { points })
    }

    /// `count` evenly spaced points from `lo` to `hi` inclusive.
    pub fn linspace(lo: f64, hi: f64, count: usize) -> Result<Self> {
        if count == 0 {
            return Err(Error::InvalidParams("grid needs at least one point".into()));
        }
        if count == 1 {
            return Grid::new(vec![lo]);
        }
        let step = (hi - lo) / (count - 1) as f64;
        Grid::new((0..count).map(|i| lo + step * i as f64).collect())
    }

    pub fn points(&self) -> &[f64] {
        &self.points
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }
}
