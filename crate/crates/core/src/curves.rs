//! Angle curves in the half-angle tangents, the diagonal curve, and the
//! normal form of the opposite-angle curve.

use crate::error::{Error, Result};
use crate::quad::{embed, AngleData, Branch, ExtReal};
use crate::sides::{validate_and_classify, DeltoidPair, Geometry, Kind, SideLengths};
use crate::surd::QuadSurd;
use crate::tol;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

/// `c22 z²w² + c20 z² + c02 w² + 2 c11 z w + c00 = 0` in `(z_i, z_j)`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct BiquadraticCoeffs {
    /// One-based vertex labels `(i, j)`.
    pub pair: (usize, usize),
    pub c22: f64,
    pub c20: f64,
    pub c02: f64,
    pub c11: f64,
    pub c00: f64,
}

impl BiquadraticCoeffs {
    fn max_abs(&self) -> f64 {
        [self.c22, self.c20, self.c02, self.c11, self.c00]
            .iter()
            .fold(0.0f64, |m, c| m.max(c.abs()))
    }

    /// The curve evaluated at the angle vector `angles`.
    pub fn residual_at(&self, angles: &AngleData) -> f64 {
        residual(self, angles.z[self.pair.0 - 1], angles.z[self.pair.1 - 1])
    }
}

/// Half-side factor: the side combination itself, or `sin`/`sinh` of its half.
fn factor(g: Geometry, x: f64) -> f64 {
    match g {
        Geometry::Euclidean => x,
        Geometry::Spherical => (0.5 * x).sin(),
        Geometry::Hyperbolic => (0.5 * x).sinh(),
    }
}

fn mixed(g: Geometry, a2: f64, a4: f64) -> f64 {
    match g {
        Geometry::Euclidean => -4.0 * a2 * a4,
        Geometry::Spherical => -a2.sin() * a4.sin(),
        Geometry::Hyperbolic => -a2.sinh() * a4.sinh(),
    }
}

/// Adjacent-angle curve for `(z1, z2)` of the quadruple `a`.
fn adjacent(g: Geometry, a: [f64; 4], pair: (usize, usize)) -> BiquadraticCoeffs {
    let [a1, a2, a3, a4] = a;
    let f = |x| factor(g, x);
    BiquadraticCoeffs {
        pair,
        c22: f(a1 - a2 - a3 - a4) * f(a1 - a2 + a3 - a4),
        c20: f(a1 + a2 + a3 - a4) * f(a1 + a2 - a3 - a4),
        c02: f(a1 - a2 + a3 + a4) * f(a1 - a2 - a3 + a4),
        c11: mixed(g, a2, a4),
        c00: f(a1 + a2 - a3 + a4) * f(a1 + a2 + a3 + a4),
    }
}

/// Opposite-angle curve for `(z1, z3)` of the quadruple `a`.
fn opposite(g: Geometry, a: [f64; 4], pair: (usize, usize)) -> BiquadraticCoeffs {
    let [a1, a2, a3, a4] = a;
    let f = |x| factor(g, x);
    BiquadraticCoeffs {
        pair,
        c22: f(a1 + a2 - a3 - a4) * f(a1 - a2 + a3 - a4),
        c20: f(a1 + a2 + a3 - a4) * f(a1 - a2 - a3 - a4),
        c02: f(a1 - a2 + a3 + a4) * f(a1 + a2 - a3 + a4),
        c11: 0.0,
        c00: f(a1 - a2 - a3 + a4) * f(a1 + a2 + a3 + a4),
    }
}

fn shifted(a: [f64; 4], r: usize) -> [f64; 4] {
    std::array::from_fn(|i| a[(i + r) % 4])
}

/// The six angle curves, in the order `(1,3), (2,4), (1,2), (2,3), (3,4), (4,1)`.
pub fn angle_curves(a: &SideLengths) -> [BiquadraticCoeffs; 6] {
    let g = a.geometry();
    let v = a.values();
    [
        opposite(g, v, (1, 3)),
        opposite(g, shifted(v, 1), (2, 4)),
        adjacent(g, v, (1, 2)),
        adjacent(g, shifted(v, 1), (2, 3)),
        adjacent(g, shifted(v, 2), (3, 4)),
        adjacent(g, shifted(v, 3), (4, 1)),
    ]
}

/// Value of the curve at `(z_i, z_j)` in unit homogeneous coordinates,
/// divided by the largest coefficient.
pub fn residual(c: &BiquadraticCoeffs, zi: ExtReal, zj: ExtReal) -> f64 {
    let (s, w) = zi.homogeneous();
    let (t, x) = zj.homogeneous();
    let value = c.c22 * s * s * t * t
        + c.c20 * s * s * x * x
        + c.c02 * w * w * t * t
        + 2.0 * c.c11 * s * w * t * x
        + c.c00 * w * w * x * x;
    let scale = c.max_abs();
    if scale == 0.0 {
        value.abs()
    } else {
        value.abs() / scale
    }
}

/// Worst residual of all six angle curves at `angles`.
pub fn max_residual(a: &SideLengths, angles: &AngleData) -> f64 {
    angle_curves(a)
        .iter()
        .map(|c| c.residual_at(angles))
        .fold(0.0, f64::max)
}

/// `(z3, z4)` completing a point `(z1, z2)` of the adjacent curve.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Completion {
    pub z3: ExtReal,
    pub z4: ExtReal,
    /// Set when a 0/0 forced recovery through the embedding.
    pub via_embedding: bool,
}

/// `tan(φ3/2)` by projecting the closing condition onto side 2; Euclidean.
pub fn birational_z3(a: [f64; 4], phi1: f64, phi2: f64) -> Result<ExtReal> {
    let [a1, a2, a3, a4] = a;
    let num = a1 * phi2.cos() + a2 + a3 + a4 * (phi1 + phi2).cos();
    let den = a1 * phi2.sin() + a4 * (phi1 + phi2).sin();
    let scale = 1e-12 * (a1 + a2 + a3 + a4);
    if num.abs() <= scale && den.abs() <= scale {
        return Err(Error::IndeterminateFraction);
    }
    Ok(if den == 0.0 {
        ExtReal::Infinity
    } else {
        ExtReal::Finite(num / den)
    })
}

pub fn complete_solution(a: &SideLengths, z1: ExtReal, z2: ExtReal) -> Result<Completion> {
    if a.geometry() != Geometry::Euclidean {
        return Err(Error::Unsupported("birational completion is Euclidean"));
    }
    let r = residual(&angle_curves(a)[2], z1, z2);
    if r > tol::ON_CURVE {
        return Err(Error::OffCurve(r));
    }
    let v = a.values();
    let (phi1, phi2) = (z1.angle(), z2.angle());
    let direct = birational_z3(v, phi1, phi2)
        .and_then(|z3| birational_z3(shifted(v, 1), phi2, z3.angle()).map(|z4| (z3, z4)));
    match direct {
        Ok((z3, z4)) => Ok(Completion {
            z3,
            z4,
            via_embedding: false,
        }),
        Err(Error::IndeterminateFraction) => {
            let mut best: Option<(f64, AngleData)> = None;
            for b in [Branch::Plus, Branch::Minus] {
                if let Ok(q) = embed(a, phi1, b) {
                    let ang = q.angles();
                    let d = crate::quad::wrap(ang.phi[1] - phi2).abs();
                    if best.as_ref().is_none_or(|(bd, _)| d < *bd) {
                        best = Some((d, ang));
                    }
                }
            }
            let (_, ang) = best.ok_or(Error::NoClosing)?;
            Ok(Completion {
                z3: ang.z[2],
                z4: ang.z[3],
                via_embedding: true,
            })
        }
        Err(e) => Err(e),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum LeadingForm {
    /// `u²v + uv²`.
    Euclid,
    /// `u²v² − u² − v²`.
    Curved,
}

/// `lead(u, v) + 2 d11 uv + d10 u + d01 v + d00 = 0` in the diagonal coordinates.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct DiagonalCurveCoeffs {
    pub geometry: Geometry,
    pub d11: f64,
    pub d10: f64,
    pub d01: f64,
    pub d00: f64,
    pub leading_form: LeadingForm,
}

impl DiagonalCurveCoeffs {
    fn terms(&self, u: f64, v: f64) -> [f64; 7] {
        let lead = match self.leading_form {
            LeadingForm::Euclid => [u * u * v, u * v * v, 0.0],
            LeadingForm::Curved => [u * u * v * v, -u * u, -v * v],
        };
        [
            lead[0],
            lead[1],
            lead[2],
            2.0 * self.d11 * u * v,
            self.d10 * u,
            self.d01 * v,
            self.d00,
        ]
    }

    pub fn evaluate(&self, u: f64, v: f64) -> f64 {
        self.terms(u, v).iter().sum()
    }

    /// Value relative to the sum of the absolute values of its terms.
    pub fn residual(&self, u: f64, v: f64) -> f64 {
        let t = self.terms(u, v);
        let scale: f64 = t.iter().map(|x| x.abs()).sum();
        let value: f64 = t.iter().sum();
        if scale == 0.0 {
            0.0
        } else {
            value.abs() / scale
        }
    }
}

pub fn diagonal_curve(a: &SideLengths) -> DiagonalCurveCoeffs {
    let g = a.geometry();
    let [a1, a2, a3, a4] = a.values();
    match g {
        Geometry::Euclidean => {
            let [s1, s2, s3, s4] = [a1 * a1, a2 * a2, a3 * a3, a4 * a4];
            DiagonalCurveCoeffs {
                geometry: g,
                d11: -0.5 * (s1 + s2 + s3 + s4),
                d10: (s1 - s4) * (s2 - s3),
                d01: (s1 - s2) * (s4 - s3),
                d00: (s1 - s2 + s3 - s4) * (s1 * s3 - s2 * s4),
                leading_form: LeadingForm::Euclid,
            }
        }
        _ => {
            let c = a.values().map(|x| {
                if g == Geometry::Spherical {
                    x.cos()
                } else {
                    x.cosh()
                }
            });
            let [c1, c2, c3, c4] = c;
            let e = c1 * c3 - c2 * c4;
            DiagonalCurveCoeffs {
                geometry: g,
                d11: -(c1 * c3 + c2 * c4),
                d10: 2.0 * (c1 * c2 + c3 * c4),
                d01: 2.0 * (c1 * c4 + c2 * c3),
                d00: 1.0 - c.iter().map(|x| x * x).sum::<f64>() + e * e,
                leading_form: LeadingForm::Curved,
            }
        }
    }
}

/// Euclidean diagonal-curve coefficients `(d11, d10, d01, d00)` in exact arithmetic.
pub fn diagonal_curve_exact(a: &SideLengths) -> Option<[QuadSurd; 4]> {
    let x = a.exact_values()?;
    let s: [QuadSurd; 4] = std::array::from_fn(|i| &x[i] * &x[i]);
    let half = QuadSurd::from_ratio(-1, 2);
    let sum = s.iter().fold(QuadSurd::zero(), |acc, v| acc + v);
    Some([
        half * sum,
        (&s[0] - &s[3]) * (&s[1] - &s[2]),
        (&s[0] - &s[1]) * (&s[3] - &s[2]),
        (&s[0] - &s[1] + &s[2] - &s[3]) * (&s[0] * &s[2] - &s[1] * &s[3]),
    ])
}

/// Real roots `u` of the diagonal curve at fixed `v`, ascending.
pub fn solve_diagonal_curve(d: &DiagonalCurveCoeffs, v: f64) -> Result<Vec<f64>> {
    let (qa, qb, qc) = match d.leading_form {
        LeadingForm::Euclid => (v, v * v + 2.0 * d.d11 * v + d.d10, d.d01 * v + d.d00),
        LeadingForm::Curved => (
            v * v - 1.0,
            2.0 * d.d11 * v + d.d10,
            -v * v + d.d01 * v + d.d00,
        ),
    };
    if qa == 0.0 {
        return Err(Error::DegenerateLeading);
    }
    let disc = qb * qb - 4.0 * qa * qc;
    if disc < 0.0 {
        return Ok(vec![]);
    }
    if disc == 0.0 {
        return Ok(vec![-qb / (2.0 * qa)]);
    }
    let q = -0.5 * (qb + qb.signum() * disc.sqrt());
    let (r1, r2) = if q == 0.0 {
        (0.0, 0.0)
    } else {
        (q / qa, qc / q)
    };
    Ok(if r1 <= r2 { vec![r1, r2] } else { vec![r2, r1] })
}

/// An amplitude `√x` of a real `x`: real for `x ≥ 0`, in `i·ℝ₊` otherwise.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub enum Amplitude {
    Real(f64),
    Imaginary(f64),
}

impl Amplitude {
    pub fn sqrt_of(x: f64) -> Self {
        if x >= 0.0 {
            Amplitude::Real(x.sqrt())
        } else {
            Amplitude::Imaginary((-x).sqrt())
        }
    }

    pub fn magnitude(self) -> f64 {
        match self {
            Amplitude::Real(m) | Amplitude::Imaginary(m) => m,
        }
    }

    pub fn is_real(self) -> bool {
        matches!(self, Amplitude::Real(_))
    }

    pub fn complex(self) -> num_complex::Complex64 {
        match self {
            Amplitude::Real(m) => num_complex::Complex64::new(m, 0.0),
            Amplitude::Imaginary(m) => num_complex::Complex64::new(0.0, m),
        }
    }
}

/// `u² + v² = 1 + m u²v²` after `z1 = p1 u`, `z3 = p3 v`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct NormalForm {
    pub m: f64,
    pub p: [Amplitude; 4],
}

impl NormalForm {
    /// Modulus of the `sn` form, `√m` (meaningful for `0 < m < 1`).
    pub fn sn_modulus(&self) -> f64 {
        self.m.sqrt()
    }

    /// Modulus of the `cn` form, `√(m/(m−1))` (meaningful for `m < 0`).
    pub fn cn_modulus(&self) -> f64 {
        (self.m / (self.m - 1.0)).sqrt()
    }
}

fn require_elliptic_euclidean(a: &SideLengths) -> Result<()> {
    if a.geometry() != Geometry::Euclidean {
        return Err(Error::Unsupported("Euclidean side lengths required"));
    }
    match validate_and_classify(a).kind {
        Kind::Elliptic => Ok(()),
        k => Err(Error::NotElliptic(k)),
    }
}

/// Cyclic amplitudes `p_i = √(a_i a_{i−1} / (ā_i ā_{i−1}) − 1)`.
pub fn amplitudes(a: [f64; 4], bar: [f64; 4]) -> [Amplitude; 4] {
    std::array::from_fn(|i| {
        let j = (i + 3) % 4;
        Amplitude::sqrt_of(a[i] * a[j] / (bar[i] * bar[j]) - 1.0)
    })
}

pub fn normal_form(a: &SideLengths) -> Result<NormalForm> {
    require_elliptic_euclidean(a)?;
    let v = a.values();
    let bar = a.bar();
    let m = 1.0 - v.iter().product::<f64>() / bar.iter().product::<f64>();
    Ok(NormalForm {
        m,
        p: amplitudes(v, bar),
    })
}

/// `m = 1 − Πa/Πā` in exact arithmetic.
pub fn normal_form_m_exact(a: &SideLengths) -> Result<Option<QuadSurd>> {
    require_elliptic_euclidean(a)?;
    let Some(x) = a.exact_values() else {
        return Ok(None);
    };
    let s = x.iter().fold(QuadSurd::zero(), |acc, v| acc + v) * QuadSurd::from_ratio(1, 2);
    let prod = x.iter().fold(QuadSurd::from_integer(1), |acc, v| acc * v);
    let prod_bar = x
        .iter()
        .fold(QuadSurd::from_integer(1), |acc, v| acc * (&s - v));
    Ok(Some(QuadSurd::from_integer(1) - prod / prod_bar))
}

/// One irreducible piece of a reducible angle curve in `(z_i, z_j)`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub enum CurveComponent {
    /// `z_vertex = ∞`.
    AtInfinity { vertex: usize },
    /// `z_i z_j = product`.
    Hyperbola { i: usize, j: usize, product: f64 },
    /// `z_j = (quad z_i² + constant) / (linear z_i)`.
    Rational {
        i: usize,
        j: usize,
        quad: f64,
        constant: f64,
        linear: f64,
    },
}

/// Components of the adjacent-angle curve for rhombi, deltoids and isograms.
pub fn degenerate_components(a: &SideLengths) -> Result<Vec<CurveComponent>> {
    if a.geometry() != Geometry::Euclidean {
        return Err(Error::Unsupported("component description is Euclidean"));
    }
    let [a1, a2, a3, a4] = a.values();
    match validate_and_classify(a).kind {
        Kind::Rhombus => Ok(vec![
            CurveComponent::AtInfinity { vertex: 1 },
            CurveComponent::AtInfinity { vertex: 2 },
            CurveComponent::Hyperbola {
                i: 1,
                j: 2,
                product: 1.0,
            },
        ]),
        Kind::Deltoid(DeltoidPair::FirstSecond) => Ok(vec![
            CurveComponent::AtInfinity { vertex: 2 },
            CurveComponent::Rational {
                i: 1,
                j: 2,
                quad: a1 - a3,
                constant: a1 + a3,
                linear: 2.0 * a3,
            },
        ]),
        // a2 = a3, a4 = a1: the same picture one step further round, in (z2, z3).
        Kind::Deltoid(DeltoidPair::FourthFirst) => Ok(vec![
            CurveComponent::AtInfinity { vertex: 3 },
            CurveComponent::Rational {
                i: 2,
                j: 3,
                quad: a2 - a4,
                constant: a2 + a4,
                linear: 2.0 * a4,
            },
        ]),
        Kind::Isogram => Ok(vec![
            CurveComponent::Hyperbola {
                i: 1,
                j: 2,
                product: 1.0,
            },
            CurveComponent::Hyperbola {
                i: 1,
                j: 2,
                product: -(a1 + a2) / (a1 - a2),
            },
        ]),
        _ => Err(Error::NotDegenerate),
    }
}
