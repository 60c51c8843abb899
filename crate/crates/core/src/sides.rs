//! Side-length quadruples, their validation and type classification.

use crate::error::{Error, Result};
use crate::surd::QuadSurd;
use crate::tol;
use num_traits::Zero;
use serde::{Deserialize, Serialize};
use std::f64::consts::{PI, TAU};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Geometry {
    Euclidean,
    Spherical,
    Hyperbolic,
}

/// A validated quadruple `(a1, a2, a3, a4)`; side `i` joins `V_i` and `V_{i+1}`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SideLengths {
    values: [f64; 4],
    geometry: Geometry,
    #[serde(skip)]
    exact: Option<[QuadSurd; 4]>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum ConicVariant {
    /// `a1 + a3 = a2 + a4`.
    Circumscribable,
    /// `a1 + a2 = a3 + a4` or `a1 + a4 = a2 + a3`.
    AdjacentSum,
    /// Spherical only: perimeter `2π`.
    FullTurn,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum DeltoidPair {
    /// `a1 = a2`, `a3 = a4`.
    FirstSecond,
    /// `a1 = a4`, `a2 = a3`.
    FourthFirst,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Kind {
    Elliptic,
    Conic(ConicVariant),
    Isogram,
    Deltoid(DeltoidPair),
    Rhombus,
    AntiIsogram,
    AntiDeltoid,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Lattice {
    Rectangular,
    Rhombic,
    NotApplicable,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Classification {
    pub kind: Kind,
    pub grashof: bool,
    pub lattice: Lattice,
    pub zero_count: u32,
}

/// Sign patterns `(ε2, ε3, ε4)` of `a1 + ε2 a2 + ε3 a3 + ε4 a4`.
const SIGNS: [[i32; 3]; 8] = [
    [1, 1, 1],
    [1, 1, -1],
    [1, -1, 1],
    [1, -1, -1],
    [-1, 1, 1],
    [-1, 1, -1],
    [-1, -1, 1],
    [-1, -1, -1],
];

fn invalid(index: usize, reason: impl Into<String>) -> Error {
    Error::InvalidSides {
        index,
        reason: reason.into(),
    }
}

impl SideLengths {
    pub fn new(values: [f64; 4], geometry: Geometry) -> Result<Self> {
        let s = values.iter().sum::<f64>();
        for (i, &a) in values.iter().enumerate() {
            if !a.is_finite() || a <= 0.0 {
                return Err(invalid(i + 1, format!("length {a} is not positive")));
            }
        }
        for (i, &a) in values.iter().enumerate() {
            if geometry == Geometry::Spherical && a >= PI {
                return Err(invalid(
                    i + 1,
                    format!("spherical length {a} is not below π"),
                ));
            }
            if 2.0 * a >= s {
                return Err(invalid(i + 1, "quadrilateral inequality fails"));
            }
            if geometry == Geometry::Spherical && s - 2.0 * a >= TAU {
                return Err(invalid(i + 1, "spherical perimeter bound fails"));
            }
        }
        Ok(SideLengths {
            values,
            geometry,
            exact: None,
        })
    }

    pub fn euclidean(values: [f64; 4]) -> Result<Self> {
        Self::new(values, Geometry::Euclidean)
    }

    /// Euclidean sides with exact values in one quadratic field.
    pub fn exact(values: [QuadSurd; 4]) -> Result<Self> {
        for i in 0..4 {
            for j in 0..4 {
                if !values[i].compatible(&values[j]) {
                    return Err(Error::MixedRadicands);
                }
            }
        }
        let s = values.iter().fold(QuadSurd::zero(), |acc, v| acc + v);
        for (i, a) in values.iter().enumerate() {
            if a.signum() <= 0 {
                return Err(invalid(i + 1, format!("length {a} is not positive")));
            }
        }
        for (i, a) in values.iter().enumerate() {
            if (a + a - &s).signum() >= 0 {
                return Err(invalid(i + 1, "quadrilateral inequality fails"));
            }
        }
        let floats = [
            values[0].to_f64(),
            values[1].to_f64(),
            values[2].to_f64(),
            values[3].to_f64(),
        ];
        Ok(SideLengths {
            values: floats,
            geometry: Geometry::Euclidean,
            exact: Some(values),
        })
    }

    pub fn values(&self) -> [f64; 4] {
        self.values
    }

    /// Side `i`, zero-based and taken cyclically.
    pub fn get(&self, i: usize) -> f64 {
        self.values[i % 4]
    }

    pub fn geometry(&self) -> Geometry {
        self.geometry
    }

    pub fn exact_values(&self) -> Option<&[QuadSurd; 4]> {
        self.exact.as_ref()
    }

    pub fn half_perimeter(&self) -> f64 {
        0.5 * self.values.iter().sum::<f64>()
    }

    /// `ā_i = s − a_i`.
    pub fn bar(&self) -> [f64; 4] {
        let s = self.half_perimeter();
        self.values.map(|a| s - a)
    }

    pub fn min(&self) -> f64 {
        self.values.iter().copied().fold(f64::INFINITY, f64::min)
    }

    pub fn max(&self) -> f64 {
        self.values
            .iter()
            .copied()
            .fold(f64::NEG_INFINITY, f64::max)
    }

    /// Sides multiplied by `lambda`, keeping exactness only for exact `lambda`.
    pub fn scaled(&self, lambda: f64) -> Result<Self> {
        Self::new(self.values.map(|a| a * lambda), self.geometry)
    }

    /// Cyclic shift: side `i` of the result is side `i + r` of `self`.
    pub fn rotated(&self, r: usize) -> Self {
        let values = std::array::from_fn(|i| self.values[(i + r) % 4]);
        let exact = self
            .exact
            .as_ref()
            .map(|e| std::array::from_fn(|i| e[(i + r) % 4].clone()));
        SideLengths {
            values,
            geometry: self.geometry,
            exact,
        }
    }

    /// Whether the two quadruples agree within relative tolerance `tol`.
    pub fn approx_eq(&self, other: &SideLengths, tol: f64) -> bool {
        self.geometry == other.geometry
            && self
                .values
                .iter()
                .zip(other.values.iter())
                .all(|(a, b)| (a - b).abs() <= tol * a.abs().max(b.abs()).max(1.0))
    }

    fn signed_sum(&self, e: &[i32; 3]) -> f64 {
        let a = &self.values;
        a[0] + e[0] as f64 * a[1] + e[1] as f64 * a[2] + e[2] as f64 * a[3]
    }

    fn signed_sum_vanishes(&self, e: &[i32; 3]) -> bool {
        if let Some(x) = &self.exact {
            let sum = &x[0] + &(QuadSurd::from_integer(e[0] as i64) * &x[1]);
            let sum = sum + QuadSurd::from_integer(e[1] as i64) * &x[2];
            let sum = sum + QuadSurd::from_integer(e[2] as i64) * &x[3];
            return sum.is_zero();
        }
        let v = self.signed_sum(e);
        let scale = tol::SIDE_SUM * self.half_perimeter().max(1.0);
        match self.geometry {
            Geometry::Spherical => (v - TAU * (v / TAU).round()).abs() <= scale,
            _ => v.abs() <= scale,
        }
    }

    fn equal(&self, i: usize, j: usize) -> bool {
        if let Some(x) = &self.exact {
            return x[i] == x[j];
        }
        (self.values[i] - self.values[j]).abs() <= tol::SIDE_SUM * self.half_perimeter().max(1.0)
    }

    fn sums_to_pi(&self, i: usize, j: usize) -> bool {
        (self.values[i] + self.values[j] - PI).abs()
            <= tol::SIDE_SUM * self.half_perimeter().max(1.0)
    }

    /// `a_min + a_max < s`, compared exactly when exact values are present.
    pub fn is_grashof(&self) -> bool {
        if let Some(x) = &self.exact {
            let mut sorted: Vec<&QuadSurd> = x.iter().collect();
            sorted.sort_by(|p, q| p.partial_cmp(q).expect("common field"));
            // min + max < s  ⟺  min + max < the two middle ones.
            return (sorted[0] + sorted[3] - sorted[1] - sorted[2]).signum() < 0;
        }
        self.min() + self.max() < self.half_perimeter()
    }
}

/// Classification by the vanishing signed sums `a1 ± a2 ± a3 ± a4`
/// (taken mod 2π on the sphere).
pub fn validate_and_classify(a: &SideLengths) -> Classification {
    let zeros: Vec<&[i32; 3]> = SIGNS.iter().filter(|e| a.signed_sum_vanishes(e)).collect();
    let zero_count = zeros.len() as u32;
    let kind = match zeros.len() {
        0 => Kind::Elliptic,
        1 => Kind::Conic(match zeros[0] {
            [-1, 1, -1] => ConicVariant::Circumscribable,
            [1, 1, 1] => ConicVariant::FullTurn,
            _ => ConicVariant::AdjacentSum,
        }),
        _ => degenerate_kind(a),
    };
    let grashof = a.is_grashof();
    let lattice = match (kind, a.geometry()) {
        (Kind::Elliptic, Geometry::Euclidean) if grashof => Lattice::Rectangular,
        (Kind::Elliptic, Geometry::Euclidean) => Lattice::Rhombic,
        _ => Lattice::NotApplicable,
    };
    Classification {
        kind,
        grashof,
        lattice,
        zero_count,
    }
}

fn degenerate_kind(a: &SideLengths) -> Kind {
    let (e12, e23, e34, e41, e13, e24) = (
        a.equal(0, 1),
        a.equal(1, 2),
        a.equal(2, 3),
        a.equal(3, 0),
        a.equal(0, 2),
        a.equal(1, 3),
    );
    if e12 && e23 && e34 {
        Kind::Rhombus
    } else if e13 && e24 {
        Kind::Isogram
    } else if e12 && e34 {
        Kind::Deltoid(DeltoidPair::FirstSecond)
    } else if e41 && e23 {
        Kind::Deltoid(DeltoidPair::FourthFirst)
    } else if a.sums_to_pi(0, 2) && a.sums_to_pi(1, 3) {
        Kind::AntiIsogram
    } else {
        Kind::AntiDeltoid
    }
}

/// `ā_i = s − a_i`; an involution preserving `s` and `a1a3 + a2a4`.
pub fn conjugate_sides(a: &SideLengths) -> Result<SideLengths> {
    if let Some(x) = a.exact_values() {
        let s = x.iter().fold(QuadSurd::zero(), |acc, v| acc + v) * QuadSurd::from_ratio(1, 2);
        let bar: [QuadSurd; 4] = std::array::from_fn(|i| &s - &x[i]);
        return SideLengths::exact(bar);
    }
    SideLengths::new(a.bar(), a.geometry())
}
