//! Geodesic primitives in the three model spaces.
//!
//! Points are stored as 3-vectors: Euclidean points as `(x, y, 0)`, spherical
//! points on the unit sphere, hyperbolic points on the upper sheet of
//! `⟨p,p⟩ = −1` with `⟨p,q⟩ = −p0q0 + p1q1 + p2q2`.

use crate::error::{Error, Result};
use crate::sides::Geometry;
use nalgebra::{Matrix3, Vector3};

pub type Point = Vector3<f64>;

/// Inner product of the model: dot product, or the Minkowski form.
pub fn inner(g: Geometry, p: &Point, q: &Point) -> f64 {
    match g {
        Geometry::Hyperbolic => -p[0] * q[0] + p[1] * q[1] + p[2] * q[2],
        _ => p.dot(q),
    }
}

pub fn det(p: &Point, q: &Point, r: &Point) -> f64 {
    Matrix3::from_columns(&[*p, *q, *r]).determinant()
}

fn cross2(u: &Point, v: &Point) -> f64 {
    u[0] * v[1] - u[1] * v[0]
}

/// Base point and orthonormal tangent frame `(t0, t1)` at it; `t1` is to the left of `t0`.
pub fn base_frame(g: Geometry) -> (Point, Point, Point) {
    match g {
        Geometry::Euclidean => (Point::zeros(), Point::x(), Point::y()),
        Geometry::Spherical => (Point::x(), Point::y(), Point::z()),
        Geometry::Hyperbolic => (Point::x(), Point::y(), Point::z()),
    }
}

pub fn distance(g: Geometry, p: &Point, q: &Point) -> f64 {
    match g {
        Geometry::Euclidean => (p - q).norm(),
        Geometry::Spherical => p.cross(q).norm().atan2(p.dot(q)),
        Geometry::Hyperbolic => {
            let w = p - q;
            let m = inner(g, &w, &w).max(0.0);
            2.0 * (0.5 * m.sqrt()).asinh()
        }
    }
}

/// Unit tangent at `p` of the geodesic towards `q`.
pub fn tangent_towards(g: Geometry, p: &Point, q: &Point) -> Point {
    let t = match g {
        Geometry::Euclidean => q - p,
        Geometry::Spherical => q - p * p.dot(q),
        Geometry::Hyperbolic => q + p * inner(g, p, q),
    };
    let n = inner(g, &t, &t).max(0.0).sqrt();
    t / n
}

/// Point at distance `d` from `p` along the unit tangent `t`.
pub fn exp(g: Geometry, p: &Point, t: &Point, d: f64) -> Point {
    match g {
        Geometry::Euclidean => p + t * d,
        Geometry::Spherical => p * d.cos() + t * d.sin(),
        Geometry::Hyperbolic => p * d.cosh() + t * d.sinh(),
    }
}

/// Signed angle at `p` turning the unit tangent `u` into `v`, in `(−π, π]`.
pub fn signed_angle(g: Geometry, p: &Point, u: &Point, v: &Point) -> f64 {
    let (s, c) = match g {
        Geometry::Euclidean => (cross2(u, v), u.dot(v)),
        _ => (det(p, u, v), inner(g, u, v)),
    };
    let phi = s.atan2(c);
    if phi == -std::f64::consts::PI {
        std::f64::consts::PI
    } else {
        phi
    }
}

/// Orientation of the triple `(p, q, r)`: positive when `r` lies left of `p → q`.
pub fn orientation(g: Geometry, p: &Point, q: &Point, r: &Point) -> f64 {
    match g {
        Geometry::Euclidean => cross2(&(q - p), &(r - p)),
        _ => det(p, q, r),
    }
}

/// Projects a point back onto its model surface after rounding drift.
pub fn renormalize(g: Geometry, p: &Point) -> Point {
    match g {
        Geometry::Euclidean => Point::new(p[0], p[1], 0.0),
        Geometry::Spherical => p.normalize(),
        Geometry::Hyperbolic => Point::new((1.0 + p[1] * p[1] + p[2] * p[2]).sqrt(), p[1], p[2]),
    }
}

/// Reflection of `p` in the geodesic through `a` and `b`.
pub fn reflect(g: Geometry, p: &Point, a: &Point, b: &Point) -> Option<Point> {
    match g {
        Geometry::Euclidean => {
            let d = b - a;
            let n2 = d.norm_squared();
            if n2 == 0.0 {
                return None;
            }
            let w = p - a;
            Some(a + d * (2.0 * w.dot(&d) / n2) - w)
        }
        _ => {
            let mut n = a.cross(b);
            if g == Geometry::Hyperbolic {
                n[0] = -n[0];
            }
            let nn = inner(g, &n, &n);
            if nn <= 1e-300 {
                return None;
            }
            Some(renormalize(g, &(p - n * (2.0 * inner(g, p, &n) / nn))))
        }
    }
}

/// Point at distance `r1` from `c1` and `r2` from `c2` with
/// `sign(orientation(c1, x, c2)) = side`.
pub fn circle_intersection(
    g: Geometry,
    c1: &Point,
    r1: f64,
    c2: &Point,
    r2: f64,
    side: f64,
) -> Result<Point> {
    match g {
        Geometry::Euclidean => {
            let w = c2 - c1;
            let d = w.norm();
            if d <= 1e-15 * (r1 + r2).max(1.0) {
                return Err(Error::DegeneratePivot);
            }
            let e = w / d;
            let perp = Point::new(-e[1], e[0], 0.0);
            let along = (r1 * r1 - r2 * r2 + d * d) / (2.0 * d);
            let h2 = r1 * r1 - along * along;
            if h2 < -1e-12 * r1 * r1 {
                return Err(Error::NoClosing);
            }
            let h = h2.max(0.0).sqrt();
            // orientation(c1, x, c2) = cross(x − c1, c2 − c1) = −h·d for x = c1 + along·e + h·perp.
            let hs = if side > 0.0 { -h } else { h };
            Ok(c1 + e * along + perp * hs)
        }
        _ => {
            let kappa = if g == Geometry::Spherical { 1.0 } else { -1.0 };
            let (k1, k2) = if g == Geometry::Spherical {
                (r1.cos(), r2.cos())
            } else {
                (-r1.cosh(), -r2.cosh())
            };
            let g12 = inner(g, c1, c2);
            let det2 = kappa * kappa - g12 * g12;
            if det2.abs() <= 1e-15 {
                return Err(Error::DegeneratePivot);
            }
            let alpha = (k1 * kappa - g12 * k2) / det2;
            let beta = (kappa * k2 - g12 * k1) / det2;
            let base = c1 * alpha + c2 * beta;
            let mut n = c1.cross(c2);
            if g == Geometry::Hyperbolic {
                n[0] = -n[0];
            }
            let nn = inner(g, &n, &n);
            let gamma2 = (kappa - inner(g, &base, &base)) / nn;
            if gamma2 < -1e-12 {
                return Err(Error::NoClosing);
            }
            let gamma = gamma2.max(0.0).sqrt();
            let s = det(c1, &n, c2);
            let gamma = if (s > 0.0) == (side > 0.0) {
                gamma
            } else {
                -gamma
            };
            let x = base + n * gamma;
            if g == Geometry::Hyperbolic && x[0] < 0.0 {
                return Err(Error::NoClosing);
            }
            Ok(renormalize(g, &x))
        }
    }
}

/// Checks that `p` lies on the model surface within `tol`.
pub fn on_model(g: Geometry, p: &Point, tol: f64) -> bool {
    match g {
        Geometry::Euclidean => p[2] == 0.0 && p.iter().all(|c| c.is_finite()),
        Geometry::Spherical => (p.norm_squared() - 1.0).abs() <= tol,
        Geometry::Hyperbolic => {
            (inner(g, p, p) + 1.0).abs() <= tol * p[0].abs().max(1.0) && p[0] > 0.0
        }
    }
}
