//! Ivory's theorem: the diagonals of a quadrilateral cut out by two confocal
//! ellipses and two confocal hyperbolas have equal length.

use crate::error::{Error, Result};
use crate::sides::Geometry;
use crate::space::{self, Point};
use serde::{Deserialize, Serialize};
use std::f64::consts::PI;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ConfocalSpec {
    pub geometry: Geometry,
    /// Half the focal separation.
    pub c: f64,
    /// Ellipse parameters: focal distances sum to `2λ`.
    pub lambda: (f64, f64),
    /// Hyperbola parameters: focal distances differ by `2μ`.
    pub mu: (f64, f64),
}

impl ConfocalSpec {
    pub fn validate(&self) -> Result<()> {
        let c = self.c;
        let good = |x: f64| x.is_finite() && x > 0.0;
        if !good(c) {
            return Err(Error::OutOfRange(c));
        }
        for m in [self.mu.0, self.mu.1] {
            if !good(m) || m >= c {
                return Err(Error::OutOfRange(m));
            }
        }
        for l in [self.lambda.0, self.lambda.1] {
            if !good(l) || l <= c || (self.geometry == Geometry::Spherical && l + c >= PI) {
                return Err(Error::OutOfRange(l));
            }
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct IvoryReport {
    pub d1: f64,
    pub d2: f64,
    pub difference: f64,
}

/// Intersection of the ellipse `λ` and hyperbola branch `μ` on the positive side of the focal axis.
pub fn confocal_point(g: Geometry, c: f64, lambda: f64, mu: f64) -> Result<Point> {
    if g == Geometry::Euclidean {
        let h = (lambda * lambda - c * c) * (c * c - mu * mu);
        if h < 0.0 {
            return Err(Error::NoIntersection);
        }
        return Ok(Point::new(lambda * mu / c, h.sqrt() / c, 0.0));
    }
    let (base, t0, t1) = space::base_frame(g);
    let f1 = space::exp(g, &base, &-t0, c);
    let f2 = space::exp(g, &base, &t0, c);
    [1.0, -1.0]
        .into_iter()
        .filter_map(|side| {
            space::circle_intersection(g, &f1, lambda + mu, &f2, lambda - mu, side).ok()
        })
        .find(|p| p.dot(&t1) > 0.0)
        .ok_or(Error::NoIntersection)
}

/// Lengths of the two diagonals `P(λ1,μ1)P(λ2,μ2)` and `P(λ1,μ2)P(λ2,μ1)`.
pub fn ivory_check(spec: &ConfocalSpec) -> Result<IvoryReport> {
    spec.validate()?;
    let g = spec.geometry;
    let p = |l: f64, m: f64| confocal_point(g, spec.c, l, m);
    let (l1, l2) = spec.lambda;
    let (m1, m2) = spec.mu;
    let d1 = space::distance(g, &p(l1, m1)?, &p(l2, m2)?);
    let d2 = space::distance(g, &p(l1, m2)?, &p(l2, m1)?);
    Ok(IvoryReport {
        d1,
        d2,
        difference: (d1 - d2).abs(),
    })
}
