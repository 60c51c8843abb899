//! Conjugate quadrilaterals (sides `ā_i = s − a_i`, same diagonals) and the
//! algebraic identities behind them.

use crate::error::{Error, Result};
use crate::quad::Quadrilateral;
use crate::sides::{validate_and_classify, Geometry, Kind};
use crate::space::Point;
use crate::tol;

/// Apex of the triangle over `(0,0)–(x,0)` with legs `r1`, `r2`, above the axis.
fn apex(x: f64, r1: f64, r2: f64) -> Result<Point> {
    let px = (r1 * r1 - r2 * r2 + x * x) / (2.0 * x);
    let h2 = r1 * r1 - px * px;
    if h2 < -tol::CONGRUENCE * r1 * r1 {
        return Err(Error::ConstructionFailed(-h2));
    }
    Ok(Point::new(px, h2.max(0.0).sqrt(), 0.0))
}

/// The quadrilateral with conjugate sides and the same diagonal pair, with
/// `V1` at the origin, `V2` on the positive first axis and `V3` above it.
pub fn conjugate_quad(q: &Quadrilateral) -> Result<Quadrilateral> {
    if q.geometry() != Geometry::Euclidean {
        return Err(Error::Unsupported("conjugate quadrilaterals are Euclidean"));
    }
    let a = q.sides()?;
    // The rhombus is self-conjugate, so the construction applies to it as well.
    match validate_and_classify(&a).kind {
        Kind::Elliptic | Kind::Rhombus => {}
        k => return Err(Error::NotElliptic(k)),
    }
    let b = a.bar();
    let d = q.diagonals();
    let v2 = apex(d.x, b[0], b[1])?;
    let up = apex(d.x, b[3], b[2])?;
    let down = Point::new(up.x, -up.y, 0.0);
    let v4 = if ((v2 - up).norm() - d.y).abs() <= ((v2 - down).norm() - d.y).abs() {
        up
    } else {
        down
    };
    let mismatch = ((v2 - v4).norm() - d.y).abs() / d.y;
    if mismatch > tol::CONGRUENCE {
        return Err(Error::ConstructionFailed(mismatch));
    }
    let v = [Point::zeros(), v2, Point::new(d.x, 0.0, 0.0), v4];
    let e = v[1] / v[1].norm();
    let rot = |p: &Point| Point::new(p.x * e.x + p.y * e.y, p.y * e.x - p.x * e.y, 0.0);
    let mut w = v.map(|p| rot(&p));
    if w[2].y < 0.0 {
        w = w.map(|p| Point::new(p.x, -p.y, 0.0));
    }
    Quadrilateral::from_vertices(Geometry::Euclidean, w)
}

type Unary = fn(f64) -> f64;

/// `|Σ lhs − Σ rhs|` relative to the largest term, floored at 1.
fn scaled(lhs: &[f64], rhs: &[f64]) -> f64 {
    let diff = lhs.iter().sum::<f64>() - rhs.iter().sum::<f64>();
    let scale = lhs.iter().chain(rhs).fold(1.0f64, |m, t| m.max(t.abs()));
    diff.abs() / scale
}

/// Residuals of the conjugate-side identities for `(a, b, c, d)`, each
/// relative to its largest term. Six in the Euclidean case, four otherwise.
pub fn identity_residuals(values: [f64; 4], geometry: Geometry) -> Vec<f64> {
    let [a, b, c, d] = values;
    let s = 0.5 * (a + b + c + d);
    let [ab, bb, cb, db] = values.map(|x| s - x);
    match geometry {
        Geometry::Euclidean => vec![
            scaled(&[a * b, -cb * db], &[(s - a - c) * (s - b - c)]),
            scaled(&[a * b, -ab * bb], &[s * (s - c - d)]),
            scaled(
                &[a * b * c * d, -ab * bb * cb * db],
                &[s * (s - a - b) * (s - b - c) * (s - a - c)],
            ),
            scaled(
                &[a * a, b * b, c * c, d * d],
                &[ab * ab, bb * bb, cb * cb, db * db],
            ),
            scaled(&[a * b, c * d], &[ab * bb, cb * db]),
            scaled(
                &[a * b, -c * d],
                &[0.5 * cb * cb, 0.5 * db * db, -0.5 * ab * ab, -0.5 * bb * bb],
            ),
        ],
        Geometry::Spherical | Geometry::Hyperbolic => {
            let (f, g): (Unary, Unary) = if geometry == Geometry::Spherical {
                (f64::sin, f64::cos)
            } else {
                (f64::sinh, f64::cosh)
            };
            // The hyperbolic difference identity carries the opposite sign.
            let flip = if geometry == Geometry::Spherical {
                1.0
            } else {
                -1.0
            };
            vec![
                scaled(&[g(a) * g(b), g(c) * g(d)], &[g(ab) * g(bb), g(cb) * g(db)]),
                scaled(&[f(a) * f(b), f(c) * f(d)], &[f(ab) * f(bb), f(cb) * f(db)]),
                scaled(
                    &[g(a) * g(b), -g(c) * g(d)],
                    &[flip * f(ab) * f(bb), -flip * f(cb) * f(db)],
                ),
                scaled(
                    &[f(a) * f(b) * f(c) * f(d), g(a) * g(b) * g(c) * g(d)],
                    &[f(ab) * f(bb) * f(cb) * f(db), g(ab) * g(bb) * g(cb) * g(db)],
                ),
            ]
        }
    }
}

/// Worst scaled residual of the identity suite.
pub fn identity_suite(values: [f64; 4], geometry: Geometry) -> f64 {
    identity_residuals(values, geometry)
        .into_iter()
        .fold(0.0, f64::max)
}
