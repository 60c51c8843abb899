//! Folding maps, orbits and numeric period detection.

use crate::error::{Error, Result};
use crate::quad::Quadrilateral;
use crate::sides::{validate_and_classify, Kind};
use crate::space;
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Vertex {
    V1,
    V2,
    V3,
    V4,
}

impl Vertex {
    pub fn index(self) -> usize {
        self as usize
    }
}

/// A composed pair of foldings: `CD = F3 ∘ F4`, `BC = F2 ∘ F3`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum FoldPair {
    CD,
    BC,
}

impl FoldPair {
    /// `(first, second)`: the map is `F_first ∘ F_second`.
    pub fn vertices(self) -> (Vertex, Vertex) {
        match self {
            FoldPair::CD => (Vertex::V3, Vertex::V4),
            FoldPair::BC => (Vertex::V2, Vertex::V3),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum PeriodMethod {
    NumericFold,
    SigmaRational,
    Hankel,
    ClosedForm,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct PeriodReport {
    pub non_oriented: Option<u32>,
    /// Orders of `F3 ∘ F4` and `F2 ∘ F3`.
    pub oriented: Option<(u32, u32)>,
    pub method: PeriodMethod,
    pub margin: f64,
}

impl PeriodReport {
    pub fn none(method: PeriodMethod, margin: f64) -> Self {
        PeriodReport {
            non_oriented: None,
            oriented: None,
            method,
            margin,
        }
    }
}

/// Reflects `vertex` in the geodesic through its two neighbours.
pub fn fold(q: &Quadrilateral, vertex: Vertex) -> Result<Quadrilateral> {
    let i = vertex.index();
    let g = q.geometry();
    let axis_a = q.vertex(i + 3);
    let axis_b = q.vertex(i + 1);
    if space::distance(g, axis_a, axis_b) == 0.0 {
        return Err(Error::DegenerateAxis { step: None });
    }
    let image = space::reflect(g, q.vertex(i), axis_a, axis_b)
        .ok_or(Error::DegenerateAxis { step: None })?;
    let mut v = *q.vertices();
    v[i] = image;
    Ok(Quadrilateral::from_parts(g, v))
}

/// Applies `F_first ∘ F_second` once.
pub fn fold_pair(q: &Quadrilateral, pair: FoldPair) -> Result<Quadrilateral> {
    let (first, second) = pair.vertices();
    fold(&fold(q, second)?, first)
}

/// `[q, P(q), P²(q), …, Pⁿ(q)]` for the composed pair `P`.
pub fn fold_orbit(q: &Quadrilateral, pair: FoldPair, n: usize) -> Result<Vec<Quadrilateral>> {
    let mut orbit = Vec::with_capacity(n + 1);
    orbit.push(q.clone());
    for k in 0..n {
        let next = fold_pair(&orbit[k], pair).map_err(|e| match e {
            Error::DegenerateAxis { .. } => Error::DegenerateAxis { step: Some(k) },
            e => e,
        })?;
        orbit.push(next);
    }
    Ok(orbit)
}

fn oriented_order(
    q: &Quadrilateral,
    pair: FoldPair,
    max: u32,
    tol: f64,
) -> Result<Option<(u32, f64)>> {
    let start = q.angles();
    let mut cur = q.clone();
    for n in 1..=max {
        cur = fold_pair(&cur, pair)?;
        let d = cur.angles().angle_distance(&start);
        if d <= tol {
            return Ok(Some((n, d)));
        }
    }
    Ok(None)
}

/// Least return times of the folding orbit, up to `max_n` for the
/// non-oriented period and `2·max_n` for each oriented order.
pub fn detect_period_numeric(q: &Quadrilateral, max_n: u32, tol: f64) -> Result<PeriodReport> {
    let a = q.sides()?;
    match validate_and_classify(&a).kind {
        Kind::Elliptic => {}
        Kind::Conic(_) => return Err(Error::ConicInput),
        k => return Err(Error::NotElliptic(k)),
    }
    let start = q.diagonals();
    let mut cur = q.clone();
    let mut non_oriented = None;
    let mut margin = f64::INFINITY;
    for n in 1..=max_n {
        cur = fold_pair(&cur, FoldPair::CD)?;
        let d = cur.diagonals().relative_distance(&start);
        margin = margin.min(d);
        if d <= tol {
            non_oriented = Some(n);
            margin = d;
            break;
        }
    }
    let Some(n) = non_oriented else {
        return Ok(PeriodReport::none(crate::PeriodMethod::NumericFold, margin));
    };
    let first = oriented_order(q, FoldPair::CD, 2 * max_n, tol)?;
    let second = oriented_order(q, FoldPair::BC, 2 * max_n, tol)?;
    let oriented = match (first, second) {
        (Some((n1, d1)), Some((n2, d2))) => {
            margin = margin.max(d1).max(d2);
            Some((n1, n2))
        }
        _ => None,
    };
    Ok(PeriodReport {
        non_oriented: Some(n),
        oriented,
        method: PeriodMethod::NumericFold,
        margin,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum CongruenceMode {
    Oriented,
    NonOriented,
}

/// Congruence of two quadrilaterals with the same side lengths.
pub fn congruent(
    q1: &Quadrilateral,
    q2: &Quadrilateral,
    mode: CongruenceMode,
    tol: f64,
) -> Result<bool> {
    if q1.geometry() != q2.geometry() {
        return Err(Error::MixedGeometry);
    }
    let (s1, s2) = (q1.side_values(), q2.side_values());
    if s1
        .iter()
        .zip(s2.iter())
        .any(|(a, b)| (a - b).abs() > tol * a.max(1.0))
    {
        return Ok(false);
    }
    Ok(match mode {
        CongruenceMode::NonOriented => q1.diagonals().relative_distance(&q2.diagonals()) <= tol,
        CongruenceMode::Oriented => q1.angles().angle_distance(&q2.angles()) <= tol,
    })
}
