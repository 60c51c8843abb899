#![allow(dead_code)]

use num_rational::BigRational;
use quadfold::quad::embed;
use quadfold::sides::validate_and_classify;
use quadfold::{Branch, Geometry, Kind, QuadSurd, Quadrilateral, SideLengths};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::f64::consts::PI;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn e(v: [f64; 4]) -> SideLengths {
    SideLengths::euclidean(v).unwrap()
}

pub fn exact_int(v: [i64; 4]) -> SideLengths {
    SideLengths::exact(v.map(QuadSurd::from_integer)).unwrap()
}

/// `(1, 3, 3√5, 5)` with exact values.
pub fn three_periodic() -> SideLengths {
    let r = QuadSurd::new(
        BigRational::from_integer(0.into()),
        BigRational::from_integer(3.into()),
        5.into(),
    );
    SideLengths::exact([
        QuadSurd::from_integer(1),
        QuadSurd::from_integer(3),
        r,
        QuadSurd::from_integer(5),
    ])
    .unwrap()
}

pub fn three_periodic_f64() -> [f64; 4] {
    [1.0, 3.0, 3.0 * 5f64.sqrt(), 5.0]
}

/// Smallest `|a1 ± a2 ± a3 ± a4|` relative to the half-perimeter.
pub fn elliptic_margin(v: [f64; 4]) -> f64 {
    let s = 0.5 * v.iter().sum::<f64>();
    let mut m = f64::INFINITY;
    for e2 in [-1.0, 1.0] {
        for e3 in [-1.0, 1.0] {
            for e4 in [-1.0, 1.0] {
                m = m.min((v[0] + e2 * v[1] + e3 * v[2] + e4 * v[3]).abs());
            }
        }
    }
    m / s
}

/// Random Euclidean elliptic sides, kept away from the conic walls.
pub fn random_elliptic(r: &mut ChaCha8Rng) -> SideLengths {
    loop {
        let v: [f64; 4] = std::array::from_fn(|_| r.gen_range(0.5..10.0));
        if elliptic_margin(v) < 0.02 {
            continue;
        }
        if let Ok(a) = SideLengths::euclidean(v) {
            if validate_and_classify(&a).kind == Kind::Elliptic {
                return a;
            }
        }
    }
}

/// Random valid sides for any geometry.
pub fn random_sides(r: &mut ChaCha8Rng, g: Geometry) -> SideLengths {
    let hi = match g {
        Geometry::Euclidean => 10.0,
        Geometry::Spherical => 1.5,
        Geometry::Hyperbolic => 2.5,
    };
    loop {
        let v: [f64; 4] = std::array::from_fn(|_| r.gen_range(0.1..hi));
        if elliptic_margin(v) < 0.02 {
            continue;
        }
        if let Ok(a) = SideLengths::new(v, g) {
            if validate_and_classify(&a).kind == Kind::Elliptic {
                return a;
            }
        }
    }
}

/// A random embedded quadrilateral with sides `a`.
pub fn random_quad(r: &mut ChaCha8Rng, a: &SideLengths) -> Quadrilateral {
    loop {
        let phi = r.gen_range(-PI..PI);
        let branch = if r.gen_bool(0.5) {
            Branch::Plus
        } else {
            Branch::Minus
        };
        if let Ok(q) = embed(a, phi, branch) {
            let d = q.diagonals();
            let scale = a.values().iter().cloned().fold(0.0, f64::max);
            // Stay away from flattened shapes, where fold axes degenerate.
            if d.x > 1e-3 * scale && d.y > 1e-3 * scale {
                return q;
            }
        }
    }
}
