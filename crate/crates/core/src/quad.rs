//! Embedded quadrilaterals, their turning angles and diagonals.

use crate::error::{Error, Result};
use crate::sides::{Geometry, SideLengths};
use crate::space::{self, Point};
use crate::tol;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use std::f64::consts::PI;

/// A real number or the point at infinity of the projective line.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum ExtReal {
    Finite(f64),
    Infinity,
}

impl ExtReal {
    /// `tan(φ/2)`, with `Infinity` exactly at `φ = π`.
    pub fn half_tangent(phi: f64) -> Self {
        if phi == PI || phi == -PI {
            ExtReal::Infinity
        } else {
            ExtReal::Finite((0.5 * phi).tan())
        }
    }

    /// Inverse of [`ExtReal::half_tangent`], in `(−π, π]`.
    pub fn angle(self) -> f64 {
        match self {
            ExtReal::Finite(z) => 2.0 * z.atan(),
            ExtReal::Infinity => PI,
        }
    }

    pub fn finite(self) -> Option<f64> {
        match self {
            ExtReal::Finite(z) => Some(z),
            ExtReal::Infinity => None,
        }
    }

    /// Homogeneous coordinates `(z, w)` of unit length.
    pub fn homogeneous(self) -> (f64, f64) {
        match self {
            ExtReal::Finite(z) => {
                let r = z.hypot(1.0);
                (z / r, 1.0 / r)
            }
            ExtReal::Infinity => (1.0, 0.0),
        }
    }

    pub fn recip(self) -> Self {
        match self {
            ExtReal::Finite(0.0) => ExtReal::Infinity,
            ExtReal::Finite(z) => ExtReal::Finite(1.0 / z),
            ExtReal::Infinity => ExtReal::Finite(0.0),
        }
    }
}

impl std::ops::Neg for ExtReal {
    type Output = Self;
    fn neg(self) -> Self {
        match self {
            ExtReal::Finite(z) => ExtReal::Finite(-z),
            ExtReal::Infinity => ExtReal::Infinity,
        }
    }
}

impl From<f64> for ExtReal {
    fn from(z: f64) -> Self {
        if z.is_infinite() {
            ExtReal::Infinity
        } else {
            ExtReal::Finite(z)
        }
    }
}

impl Serialize for ExtReal {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            ExtReal::Finite(z) => s.serialize_f64(*z),
            ExtReal::Infinity => s.serialize_str("inf"),
        }
    }
}

impl<'de> Deserialize<'de> for ExtReal {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Raw {
            Num(f64),
            Text(String),
        }
        match Raw::deserialize(d)? {
            Raw::Num(z) => Ok(ExtReal::Finite(z)),
            Raw::Text(t) if t == "inf" => Ok(ExtReal::Infinity),
            Raw::Text(t) => Err(serde::de::Error::custom(format!(
                "expected number or \"inf\", got {t:?}"
            ))),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct AngleData {
    pub phi: [f64; 4],
    pub z: [ExtReal; 4],
}

impl AngleData {
    pub fn from_phi(phi: [f64; 4]) -> Self {
        AngleData {
            phi,
            z: phi.map(ExtReal::half_tangent),
        }
    }

    pub fn from_z(z: [ExtReal; 4]) -> Self {
        AngleData {
            phi: z.map(ExtReal::angle),
            z,
        }
    }

    /// Largest wrapped difference of turning angles.
    pub fn angle_distance(&self, other: &AngleData) -> f64 {
        self.phi
            .iter()
            .zip(other.phi.iter())
            .map(|(a, b)| wrap(a - b).abs())
            .fold(0.0, f64::max)
    }
}

/// Reduces an angle to `(−π, π]`.
pub fn wrap(x: f64) -> f64 {
    let y = x - std::f64::consts::TAU * (x / std::f64::consts::TAU).round();
    if y <= -PI {
        y + std::f64::consts::TAU
    } else {
        y
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct DiagonalPair {
    /// `d(V1, V3)`.
    pub x: f64,
    /// `d(V2, V4)`.
    pub y: f64,
}

impl DiagonalPair {
    /// The curve coordinates `(u, v)`: squares in the plane, `cos`/`cosh` otherwise.
    pub fn uv(&self, g: Geometry) -> (f64, f64) {
        match g {
            Geometry::Euclidean => (self.x * self.x, self.y * self.y),
            Geometry::Spherical => (self.x.cos(), self.y.cos()),
            Geometry::Hyperbolic => (self.x.cosh(), self.y.cosh()),
        }
    }

    pub fn relative_distance(&self, other: &DiagonalPair) -> f64 {
        let dx = (self.x - other.x).abs() / self.x.abs().max(1.0);
        let dy = (self.y - other.y).abs() / self.y.abs().max(1.0);
        dx.max(dy)
    }
}

/// Which of the two closing positions of `V3` to take.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Branch {
    /// `V3` left of the directed line `V2 → V4`.
    Plus,
    Minus,
}

impl Branch {
    fn sign(self) -> f64 {
        match self {
            Branch::Plus => 1.0,
            Branch::Minus => -1.0,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(into = "QuadRecord", try_from = "QuadRecord")]
pub struct Quadrilateral {
    geometry: Geometry,
    vertices: [Point; 4],
}

#[derive(Serialize, Deserialize)]
struct QuadRecord {
    geometry: Geometry,
    vertices: [[f64; 3]; 4],
}

impl From<Quadrilateral> for QuadRecord {
    fn from(q: Quadrilateral) -> Self {
        QuadRecord {
            geometry: q.geometry,
            vertices: q.vertices.map(|p| [p[0], p[1], p[2]]),
        }
    }
}

impl TryFrom<QuadRecord> for Quadrilateral {
    type Error = Error;
    fn try_from(r: QuadRecord) -> Result<Self> {
        Quadrilateral::from_vertices(r.geometry, r.vertices.map(|c| Point::new(c[0], c[1], c[2])))
    }
}

impl Quadrilateral {
    /// Validates model membership and distinctness of adjacent vertices.
    pub fn from_vertices(geometry: Geometry, vertices: [Point; 4]) -> Result<Self> {
        for (i, p) in vertices.iter().enumerate() {
            if !space::on_model(geometry, p, tol::CONSTRUCTION) {
                return Err(Error::InvalidSides {
                    index: i + 1,
                    reason: "vertex is off the model surface".into(),
                });
            }
        }
        for i in 0..4 {
            if space::distance(geometry, &vertices[i], &vertices[(i + 1) % 4]) == 0.0 {
                return Err(Error::InvalidSides {
                    index: i + 1,
                    reason: "side has zero length".into(),
                });
            }
        }
        Ok(Quadrilateral { geometry, vertices })
    }

    pub(crate) fn from_parts(geometry: Geometry, vertices: [Point; 4]) -> Self {
        Quadrilateral { geometry, vertices }
    }

    pub fn geometry(&self) -> Geometry {
        self.geometry
    }

    pub fn vertices(&self) -> &[Point; 4] {
        &self.vertices
    }

    /// Vertex `i`, zero-based and cyclic.
    pub fn vertex(&self, i: usize) -> &Point {
        &self.vertices[i % 4]
    }

    /// Measured side lengths `d(V_i, V_{i+1})`.
    pub fn side_values(&self) -> [f64; 4] {
        std::array::from_fn(|i| {
            space::distance(
                self.geometry,
                &self.vertices[i],
                &self.vertices[(i + 1) % 4],
            )
        })
    }

    pub fn sides(&self) -> Result<SideLengths> {
        SideLengths::new(self.side_values(), self.geometry)
    }

    pub fn angles(&self) -> AngleData {
        let g = self.geometry;
        let phi = std::array::from_fn(|i| {
            let p = &self.vertices[i];
            let prev = &self.vertices[(i + 3) % 4];
            let next = &self.vertices[(i + 1) % 4];
            let d_in = -space::tangent_towards(g, p, prev);
            let d_out = space::tangent_towards(g, p, next);
            space::signed_angle(g, p, &d_in, &d_out)
        });
        AngleData::from_phi(phi)
    }

    pub fn diagonals(&self) -> DiagonalPair {
        let g = self.geometry;
        DiagonalPair {
            x: space::distance(g, &self.vertices[0], &self.vertices[2]),
            y: space::distance(g, &self.vertices[1], &self.vertices[3]),
        }
    }

    /// Image under the reflection fixing the base point and the first frame direction.
    pub fn mirror(&self) -> Self {
        let k = if self.geometry == Geometry::Euclidean {
            1
        } else {
            2
        };
        let vertices = self.vertices.map(|mut p| {
            p[k] = -p[k];
            p
        });
        Quadrilateral {
            geometry: self.geometry,
            vertices,
        }
    }

    /// Worst relative deviation of the measured sides from `a`.
    pub fn side_residual(&self, a: &SideLengths) -> f64 {
        self.side_values()
            .iter()
            .zip(a.values().iter())
            .map(|(m, d)| (m - d).abs() / d)
            .fold(0.0, f64::max)
    }
}

/// Angles and diagonals of `q`.
pub fn measure(q: &Quadrilateral) -> (AngleData, DiagonalPair) {
    (q.angles(), q.diagonals())
}

/// Places `V1` at the base point with side 1 along the first frame direction,
/// `V4` determined by `φ1`, and `V3` on the requested side of `V2 V4`.
pub fn embed(a: &SideLengths, phi1: f64, branch: Branch) -> Result<Quadrilateral> {
    let g = a.geometry();
    let (base, t0, t1) = space::base_frame(g);
    let v1 = base;
    let v2 = space::exp(g, &base, &t0, a.get(0));
    // Incoming direction at V1 is t0 rotated by −φ1; V4 lies behind it.
    let d_in = t0 * phi1.cos() - t1 * phi1.sin();
    let v4 = space::exp(g, &base, &(-d_in), a.get(3));
    let v3 = space::circle_intersection(g, &v2, a.get(1), &v4, a.get(2), branch.sign())?;
    let q = Quadrilateral {
        geometry: g,
        vertices: [v1, v2, v3, v4],
    };
    let r = q.side_residual(a);
    if r > tol::CONSTRUCTION * 1e2 {
        return Err(Error::NoClosing);
    }
    Ok(q)
}

/// The embedded quadrilateral whose turning angles match `angles`.
pub fn realize(a: &SideLengths, angles: &AngleData) -> Result<Quadrilateral> {
    let mut best: Option<(f64, Quadrilateral)> = None;
    for b in [Branch::Plus, Branch::Minus] {
        if let Ok(q) = embed(a, angles.phi[0], b) {
            let d = q.angles().angle_distance(angles);
            if best.as_ref().is_none_or(|(bd, _)| d < *bd) {
                best = Some((d, q));
            }
        }
    }
    best.map(|(_, q)| q).ok_or(Error::NoClosing)
}

/// The closing range of `φ1`: all angles for which `embed` succeeds, sampled.
pub fn admissible_phi1(a: &SideLengths, samples: usize) -> Vec<f64> {
    (0..samples)
        .map(|i| -PI + (i as f64 + 0.5) * std::f64::consts::TAU / samples as f64)
        .filter(|&phi| embed(a, phi, Branch::Plus).is_ok())
        .collect()
}
