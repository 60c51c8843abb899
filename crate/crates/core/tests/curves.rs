mod common;

use common::*;
use proptest::prelude::*;
use quadfold::curves::{
    angle_curves, complete_solution, degenerate_components, diagonal_curve, diagonal_curve_exact,
    max_residual, normal_form, normal_form_m_exact, residual, solve_diagonal_curve, Amplitude,
    CurveComponent, LeadingForm,
};
use quadfold::quad::{embed, measure};
use quadfold::sides::conjugate_sides;
use quadfold::{Branch, Error, ExtReal, Geometry, QuadSurd, SideLengths};
use std::f64::consts::FRAC_PI_2;

fn rational(n: i64, d: i64) -> QuadSurd {
    QuadSurd::from_ratio(n, d)
}

#[test]
fn coefficient_examples() {
    let c = angle_curves(&e([10.0, 5.0, 6.0, 3.0]));
    let pairs: Vec<_> = c.iter().map(|x| x.pair).collect();
    assert_eq!(pairs, vec![(1, 3), (2, 4), (1, 2), (2, 3), (3, 4), (4, 1)]);
    assert_eq!(c[2].c11, -60.0);
    assert_eq!(c[0].c22, 48.0);
    assert_eq!(c[0].c11, 0.0);
    let r = angle_curves(&e([1.0; 4]))[2];
    assert_eq!(
        [r.c22, r.c20, r.c02, r.c11, r.c00],
        [0.0, 0.0, 0.0, -4.0, 8.0]
    );
}

#[test]
fn residual_examples() {
    let r = angle_curves(&e([1.0; 4]))[2];
    assert_eq!(
        residual(&r, ExtReal::Finite(1.0), ExtReal::Finite(1.0)),
        0.0
    );
    assert_eq!(residual(&r, ExtReal::Infinity, ExtReal::Finite(-2.5)), 0.0);
    assert_eq!(residual(&r, ExtReal::Finite(0.7), ExtReal::Infinity), 0.0);
    // Both at infinity: only c22 survives, and it vanishes for the rhombus.
    assert_eq!(residual(&r, ExtReal::Infinity, ExtReal::Infinity), 0.0);
    let c = angle_curves(&e([10.0, 5.0, 6.0, 3.0]))[2];
    assert_eq!(
        residual(&c, ExtReal::Infinity, ExtReal::Infinity),
        (c.c22
            / [c.c22, c.c20, c.c02, c.c11, c.c00]
                .iter()
                .fold(0.0f64, |m, x| m.max(x.abs())))
        .abs()
    );
}

#[test]
fn embedded_shapes_lie_on_every_curve() {
    let mut r = rng(11);
    for g in [
        Geometry::Euclidean,
        Geometry::Spherical,
        Geometry::Hyperbolic,
    ] {
        for _ in 0..300 {
            let a = random_sides(&mut r, g);
            let q = random_quad(&mut r, &a);
            let (ang, d) = measure(&q);
            assert!(max_residual(&a, &ang) < 1e-9, "{g:?} {:?}", a.values());
            let (u, v) = d.uv(g);
            assert!(
                diagonal_curve(&a).residual(u, v) < 1e-9,
                "{g:?} {:?}",
                a.values()
            );
        }
    }
}

#[test]
fn thousand_random_elliptic_shapes() {
    let mut r = rng(12);
    for _ in 0..1000 {
        let a = random_elliptic(&mut r);
        let q = random_quad(&mut r, &a);
        let (ang, d) = measure(&q);
        assert!(max_residual(&a, &ang) < 1e-9);
        let (u, v) = d.uv(Geometry::Euclidean);
        assert!(diagonal_curve(&a).residual(u, v) < 1e-9);
    }
}

#[test]
fn completion_examples() {
    let sq = complete_solution(&e([1.0; 4]), ExtReal::Finite(1.0), ExtReal::Finite(1.0)).unwrap();
    assert!((sq.z3.finite().unwrap() - 1.0).abs() < 1e-15);
    let a = e([3.0, 4.0, 5.0, 4.0]);
    let (ang, _) = measure(&embed(&a, FRAC_PI_2, Branch::Plus).unwrap());
    let c = complete_solution(&a, ang.z[0], ang.z[1]).unwrap();
    assert!((c.z3.finite().unwrap() - ang.z[2].finite().unwrap()).abs() < 1e-9);
    assert!((c.z4.finite().unwrap() - ang.z[3].finite().unwrap()).abs() < 1e-9);
    let m = complete_solution(&a, -ang.z[0], -ang.z[1]).unwrap();
    assert!((m.z3.finite().unwrap() + ang.z[2].finite().unwrap()).abs() < 1e-9);
    assert!((m.z4.finite().unwrap() + ang.z[3].finite().unwrap()).abs() < 1e-9);
    assert!(matches!(
        complete_solution(&a, ExtReal::Finite(0.1), ExtReal::Finite(5.0)),
        Err(Error::OffCurve(_))
    ));
    let s = SideLengths::new([0.5, 0.6, 0.7, 0.8], Geometry::Spherical).unwrap();
    assert!(matches!(
        complete_solution(&s, ExtReal::Finite(0.0), ExtReal::Finite(0.0)),
        Err(Error::Unsupported(_))
    ));
}

#[test]
fn completion_satisfies_all_curves() {
    let mut r = rng(13);
    for _ in 0..200 {
        let a = random_elliptic(&mut r);
        let (ang, _) = measure(&random_quad(&mut r, &a));
        let c = complete_solution(&a, ang.z[0], ang.z[1]).unwrap();
        let full = quadfold::AngleData::from_z([ang.z[0], ang.z[1], c.z3, c.z4]);
        assert!(max_residual(&a, &full) < 1e-8, "{:?}", a.values());
    }
}

#[test]
fn diagonal_curve_examples() {
    let d = diagonal_curve(&e([3.0, 4.0, 3.0, 4.0]));
    assert_eq!(d.leading_form, LeadingForm::Euclid);
    assert_eq!((d.d11, d.d10, d.d01, d.d00), (-25.0, -49.0, -49.0, 2450.0));
    assert_eq!(d.evaluate(25.0, 25.0), 0.0);
    assert!(solve_diagonal_curve(&d, 25.0)
        .unwrap()
        .iter()
        .any(|u| (u - 25.0).abs() < 1e-12));

    let ex = diagonal_curve_exact(&exact_int([10, 5, 6, 3])).unwrap();
    let expect = [
        rational(-85, 1),
        rational(-1001, 1),
        rational(-2025, 1),
        rational(344250, 1),
    ];
    assert_eq!(ex, expect);
    assert_eq!(
        diagonal_curve_exact(&exact_int([2, 7, 6, 9])).unwrap(),
        expect
    );

    let roots = solve_diagonal_curve(&diagonal_curve(&e([10.0, 5.0, 6.0, 3.0])), 57.0).unwrap();
    assert_eq!(roots.len(), 2);
    assert!((roots[0] - 2825.0 / 57.0).abs() < 1e-12);
    assert!((roots[1] - 81.0).abs() < 1e-12);
    assert_eq!(
        solve_diagonal_curve(&d, 0.0).unwrap_err(),
        Error::DegenerateLeading
    );
}

#[test]
fn negative_discriminant_is_empty() {
    let d = diagonal_curve(&e([10.0, 5.0, 6.0, 3.0]));
    let v = (1..4000).map(|i| i as f64 * 0.1).find(|&v| {
        let qb = v * v + 2.0 * d.d11 * v + d.d10;
        qb * qb - 4.0 * v * (d.d01 * v + d.d00) < 0.0
    });
    assert!(solve_diagonal_curve(&d, v.unwrap()).unwrap().is_empty());
}

#[test]
fn curved_diagonal_leading_form() {
    let s = SideLengths::new([0.5, 0.6, 0.7, 0.8], Geometry::Spherical).unwrap();
    let d = diagonal_curve(&s);
    assert_eq!(d.leading_form, LeadingForm::Curved);
    assert_eq!(
        solve_diagonal_curve(&d, 1.0).unwrap_err(),
        Error::DegenerateLeading
    );
    let mut r = rng(14);
    let q = random_quad(&mut r, &s);
    let (u, v) = q.diagonals().uv(Geometry::Spherical);
    let roots = solve_diagonal_curve(&d, v).unwrap();
    assert!(roots.iter().any(|x| (x - u).abs() < 1e-9), "{roots:?} {u}");
}

#[test]
fn normal_form_examples() {
    let a = exact_int([10, 5, 6, 3]);
    assert_eq!(normal_form_m_exact(&a).unwrap().unwrap(), rational(-4, 21));
    let n = normal_form(&a).unwrap();
    assert!((n.m + 4.0 / 21.0).abs() < 1e-15);
    assert!((n.cn_modulus() - 0.4).abs() < 1e-15);
    assert_eq!(n.p[0], Amplitude::Real((2.0f64 / 3.0).sqrt()));
    assert!((n.p[1].magnitude() - (18.0f64 / 7.0).sqrt()).abs() < 1e-14);
    assert_eq!(n.p.iter().filter(|p| p.is_real()).count(), 2);
    let g = normal_form(&three_periodic()).unwrap();
    assert!(g.m > 0.0 && g.m < 1.0);
    assert!(matches!(
        normal_form(&e([4.0, 3.0, 2.0, 3.0])),
        Err(Error::NotElliptic(_))
    ));
}

#[test]
fn degenerate_component_examples() {
    assert_eq!(
        degenerate_components(&e([1.0; 4])).unwrap(),
        vec![
            CurveComponent::AtInfinity { vertex: 1 },
            CurveComponent::AtInfinity { vertex: 2 },
            CurveComponent::Hyperbola {
                i: 1,
                j: 2,
                product: 1.0
            },
        ]
    );
    let iso = degenerate_components(&e([3.0, 4.0, 3.0, 4.0])).unwrap();
    assert_eq!(
        iso[1],
        CurveComponent::Hyperbola {
            i: 1,
            j: 2,
            product: 7.0
        }
    );
    let del = degenerate_components(&e([2.0, 2.0, 5.0, 5.0])).unwrap();
    assert_eq!(del[0], CurveComponent::AtInfinity { vertex: 2 });
    assert_eq!(
        del[1],
        CurveComponent::Rational {
            i: 1,
            j: 2,
            quad: -3.0,
            constant: 7.0,
            linear: 10.0
        }
    );
    assert_eq!(
        degenerate_components(&e([10.0, 5.0, 6.0, 3.0])).unwrap_err(),
        Error::NotDegenerate
    );
}

#[test]
fn deltoid_components_contain_embedded_shapes() {
    let a = e([2.0, 2.0, 5.0, 5.0]);
    let Some(CurveComponent::Rational {
        quad,
        constant,
        linear,
        ..
    }) = degenerate_components(&a).unwrap().get(1).copied()
    else {
        panic!("rational component expected")
    };
    let mut hits = 0;
    for k in 1..40 {
        for b in [Branch::Plus, Branch::Minus] {
            let Ok(q) = embed(&a, -3.0 + 0.15 * k as f64, b) else {
                continue;
            };
            let z = q.angles().z;
            let (Some(z1), Some(z2)) = (z[0].finite(), z[1].finite()) else {
                continue;
            };
            if (z2 - (quad * z1 * z1 + constant) / (linear * z1)).abs() < 1e-9 * (1.0 + z2.abs()) {
                hits += 1;
            }
        }
    }
    assert!(hits > 0);
}

#[test]
fn isogram_factorization_expands_to_the_curve() {
    for (a1, a2) in [(3i64, 4i64), (5, 2), (7, 3)] {
        let c = angle_curves(&e([a1 as f64, a2 as f64, a1 as f64, a2 as f64]))[2];
        // (z1z2 − 1)((a1−a2) z1z2 + (a1+a2)) = (a1−a2) z²w² + 2 a2 zw − (a1+a2).
        let expanded = [(a1 - a2) as f64, 0.0, 0.0, a2 as f64, -(a1 + a2) as f64];
        let k = c.c22 / expanded[0];
        let got = [c.c22, c.c20, c.c02, c.c11, c.c00];
        for (g, x) in got.iter().zip(expanded) {
            assert_eq!(*g, k * x);
        }
        let comps =
            degenerate_components(&e([a1 as f64, a2 as f64, a1 as f64, a2 as f64])).unwrap();
        assert_eq!(
            comps[1],
            CurveComponent::Hyperbola {
                i: 1,
                j: 2,
                product: -((a1 + a2) as f64) / (a1 - a2) as f64
            }
        );
    }
}

fn small_int() -> impl Strategy<Value = i64> {
    1i64..40
}

proptest! {
    #[test]
    fn diagonal_curve_is_conjugation_invariant(v in [small_int(), small_int(), small_int(), small_int()]) {
        let Ok(a) = SideLengths::exact(v.map(QuadSurd::from_integer)) else { return Ok(()) };
        let b = conjugate_sides(&a).unwrap();
        if b.exact_values().is_some() && b.values().iter().all(|x| *x > 0.0) {
            prop_assert_eq!(diagonal_curve_exact(&a).unwrap(), diagonal_curve_exact(&b).unwrap());
        }
    }

    #[test]
    fn curved_diagonal_curve_is_conjugation_invariant(
        v in [0.05f64..1.4, 0.05f64..1.4, 0.05f64..1.4, 0.05f64..1.4],
        hyperbolic in any::<bool>(),
    ) {
        let g = if hyperbolic { Geometry::Hyperbolic } else { Geometry::Spherical };
        let Ok(a) = SideLengths::new(v, g) else { return Ok(()) };
        let Ok(b) = conjugate_sides(&a) else { return Ok(()) };
        let (d, e) = (diagonal_curve(&a), diagonal_curve(&b));
        let scale = [d.d11, d.d10, d.d01, d.d00].iter().fold(1.0f64, |m, x| m.max(x.abs()));
        for (x, y) in [(d.d11, e.d11), (d.d10, e.d10), (d.d01, e.d01), (d.d00, e.d00)] {
            prop_assert!((x - y).abs() < 1e-12 * scale, "{:?} {:?}", d, e);
        }
    }

    #[test]
    fn m_matches_the_corner_ratio(v in [1i64..30, 1i64..30, 1i64..30, 1i64..30]) {
        let a = SideLengths::euclidean(v.map(|x| x as f64));
        let Ok(a) = a else { return Ok(()) };
        let Ok(n) = normal_form(&a) else { return Ok(()) };
        let b = angle_curves(&a)[0];
        let ratio = b.c22 * b.c00 / (b.c20 * b.c02);
        prop_assert!((n.m - ratio).abs() < 1e-12 * n.m.abs().max(1.0));
        prop_assert!(n.m < 1.0 && n.m != 0.0);
        prop_assert_eq!(n.m > 0.0, a.is_grashof());
        // Elliptic sides keep all four corners of the opposite curve nonzero.
        prop_assert!(b.c22 != 0.0 && b.c20 != 0.0 && b.c02 != 0.0 && b.c00 != 0.0);
    }

    #[test]
    fn exact_m_agrees_with_float(v in [1i64..30, 1i64..30, 1i64..30, 1i64..30]) {
        let Ok(a) = SideLengths::exact(v.map(QuadSurd::from_integer)) else { return Ok(()) };
        let Ok(Some(m)) = normal_form_m_exact(&a) else { return Ok(()) };
        let f = normal_form(&a).unwrap().m;
        prop_assert!((m.to_f64() - f).abs() < 1e-12 * f.abs().max(1.0));
    }
}
