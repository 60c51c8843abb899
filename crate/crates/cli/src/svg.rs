//! SVG 1.1 rendering of folding orbits, one polygon per step.

use quadfold::space::Point;
use quadfold::{Geometry, Quadrilateral};
use std::fmt::Write;

/// Planar image: identity in the plane, stereographic projection for the
/// sphere, the Poincaré disk for the hyperboloid.
fn project(g: Geometry, p: &Point) -> (f64, f64) {
    match g {
        Geometry::Euclidean => (p.x, p.y),
        Geometry::Spherical | Geometry::Hyperbolic => (p.y / (1.0 + p.x), p.z / (1.0 + p.x)),
    }
}

pub fn render_orbit(orbit: &[Quadrilateral]) -> String {
    let pts: Vec<[(f64, f64); 4]> = orbit
        .iter()
        .map(|q| q.vertices().map(|v| project(q.geometry(), &v)))
        .collect();
    let (mut x0, mut y0, mut x1, mut y1) = (
        f64::INFINITY,
        f64::INFINITY,
        f64::NEG_INFINITY,
        f64::NEG_INFINITY,
    );
    for &(x, y) in pts.iter().flatten() {
        x0 = x0.min(x);
        y0 = y0.min(y);
        x1 = x1.max(x);
        y1 = y1.max(y);
    }
    if !x0.is_finite() {
        (x0, y0, x1, y1) = (0.0, 0.0, 1.0, 1.0);
    }
    let pad = 0.05 * (x1 - x0).max(y1 - y0).max(1e-9);
    let (w, h) = (x1 - x0 + 2.0 * pad, y1 - y0 + 2.0 * pad);
    let stroke = 0.004 * w.max(h);
    let mut s = String::new();
    s.push_str("<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n");
    s.push_str("<!DOCTYPE svg PUBLIC \"-//W3C//DTD SVG 1.1//EN\" \"http://www.w3.org/Graphics/SVG/1.1/DTD/svg11.dtd\">\n");
    let _ = writeln!(
        s,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" viewBox=\"{:.6} {:.6} {:.6} {:.6}\" width=\"800\" height=\"{:.0}\">",
        x0 - pad,
        -(y1 + pad),
        w,
        h,
        800.0 * h / w
    );
    let n = pts.len().max(1);
    for (i, quad) in pts.iter().enumerate() {
        let t = i as f64 / n as f64;
        let (r, b) = ((40.0 + 180.0 * t) as u8, (220.0 - 180.0 * t) as u8);
        let coords: Vec<String> = quad
            .iter()
            .map(|(x, y)| format!("{x:.6},{:.6}", -y))
            .collect();
        let _ = writeln!(
            s,
            "  <polygon id=\"step{i}\" points=\"{}\" fill=\"none\" stroke=\"rgb({r},60,{b})\" stroke-width=\"{stroke:.6}\"/>",
            coords.join(" ")
        );
    }
    s.push_str("</svg>\n");
    s
}
