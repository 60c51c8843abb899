mod common;

use common::*;
use proptest::prelude::*;
use quadfold::fold::{
    congruent, detect_period_numeric, fold, fold_orbit, fold_pair, CongruenceMode,
};
use quadfold::param::{build, Sheet};
use quadfold::periodicity::invariants;
use quadfold::quad::{embed, measure, realize};
use quadfold::sides::{conjugate_sides, validate_and_classify};
use quadfold::space::{self, Point};
use quadfold::{
    tol, Branch, ConicVariant, Error, ExtReal, FoldPair, Geometry, Kind, Lattice, Quadrilateral,
    Vertex,
};
use std::f64::consts::{FRAC_PI_2, PI};

#[test]
fn classification_examples() {
    let c = validate_and_classify(&e([10.0, 5.0, 6.0, 3.0]));
    assert_eq!(
        (c.kind, c.grashof, c.lattice, c.zero_count),
        (Kind::Elliptic, false, Lattice::Rhombic, 0)
    );
    let c = validate_and_classify(&e([4.0, 3.0, 2.0, 3.0]));
    assert_eq!(c.kind, Kind::Conic(ConicVariant::Circumscribable));
    assert_eq!(c.zero_count, 1);
    assert_eq!(
        validate_and_classify(&e([3.0, 4.0, 3.0, 4.0])).kind,
        Kind::Isogram
    );
    assert_eq!(
        validate_and_classify(&e([1.0, 1.0, 1.0, 1.0])).kind,
        Kind::Rhombus
    );
    let c = validate_and_classify(&three_periodic());
    assert_eq!(
        (c.kind, c.grashof, c.lattice),
        (Kind::Elliptic, true, Lattice::Rectangular)
    );
}

#[test]
fn invalid_sides_report_the_index() {
    assert!(matches!(
        quadfold::SideLengths::euclidean([1.0, -1.0, 1.0, 1.0]),
        Err(Error::InvalidSides { index: 2, .. })
    ));
    assert!(matches!(
        quadfold::SideLengths::euclidean([1.0, 1.0, 1.0, 3.0]),
        Err(Error::InvalidSides { index: 4, .. })
    ));
    assert!(matches!(
        quadfold::SideLengths::new([3.2, 1.0, 1.0, 1.0], Geometry::Spherical),
        Err(Error::InvalidSides { index: 1, .. })
    ));
}

#[test]
fn conjugate_side_examples() {
    let b = conjugate_sides(&exact_int([10, 5, 6, 3])).unwrap();
    assert_eq!(b.values(), [2.0, 7.0, 6.0, 9.0]);
    assert!(b.exact_values().is_some());
    assert_eq!(conjugate_sides(&e([1.0; 4])).unwrap().values(), [1.0; 4]);
}

#[test]
fn embed_examples() {
    let q = embed(&e([1.0; 4]), FRAC_PI_2, Branch::Plus).unwrap();
    let (ang, d) = measure(&q);
    for z in ang.z {
        assert!((z.finite().unwrap() - 1.0).abs() < 1e-15);
    }
    assert!((d.x - 2f64.sqrt()).abs() < 1e-15 && (d.y - 2f64.sqrt()).abs() < 1e-15);

    let q = embed(&e([3.0, 4.0, 5.0, 4.0]), FRAC_PI_2, Branch::Plus).unwrap();
    let v3 = q.vertex(2);
    assert!((v3.x - 4.9728).abs() < 1e-4 && (v3.y - 3.4796).abs() < 1e-4);
    let d = q.diagonals();
    assert!((d.x - 6.0694).abs() < 1e-4);
    assert!((d.y - 5.0).abs() < 1e-14);

    assert_eq!(
        embed(&e([1.0, 1.0, 1.0, 2.0]), 0.01, Branch::Plus).unwrap_err(),
        Error::NoClosing
    );
}

#[test]
fn mirror_negates_angles() {
    let q = embed(&e([3.0, 4.0, 5.0, 4.0]), 1.2, Branch::Plus).unwrap();
    let m = q.mirror();
    let (a, d) = measure(&q);
    let (b, dm) = measure(&m);
    for i in 0..4 {
        assert!((a.phi[i] + b.phi[i]).abs() < 1e-12);
    }
    assert!(d.relative_distance(&dm) < 1e-14);
}

#[test]
fn fold_examples() {
    let sq = Quadrilateral::from_vertices(
        Geometry::Euclidean,
        [
            Point::new(0.0, 0.0, 0.0),
            Point::new(1.0, 0.0, 0.0),
            Point::new(1.0, 1.0, 0.0),
            Point::new(0.0, 1.0, 0.0),
        ],
    )
    .unwrap();
    let f = fold(&sq, Vertex::V4).unwrap();
    assert!((f.vertex(3) - Point::new(1.0, 0.0, 0.0)).norm() < 1e-15);

    let a = e([2.0, 3.0, 6.0, 31f64.sqrt()]);
    let mut r = rng(3);
    for _ in 0..10 {
        let q = random_quad(&mut r, &a);
        let back = fold_pair(&fold_pair(&q, FoldPair::CD).unwrap(), FoldPair::CD).unwrap();
        assert!(back.diagonals().relative_distance(&q.diagonals()) < tol::FOLD_RETURN);
    }
}

#[test]
fn orbit_examples() {
    let a = e(three_periodic_f64());
    let q = embed(&a, 2.0, Branch::Plus).unwrap();
    assert_eq!(fold_orbit(&q, FoldPair::CD, 0).unwrap().len(), 1);
    let orbit = fold_orbit(&q, FoldPair::CD, 3).unwrap();
    assert_eq!(orbit.len(), 4);
    assert!(congruent(&orbit[0], &orbit[3], CongruenceMode::NonOriented, 1e-9).unwrap());
    assert!(!congruent(&orbit[0], &orbit[1], CongruenceMode::NonOriented, 1e-9).unwrap());

    // Conic sides: |z1| grows by e^{2σ} per step. Start far out on the other
    // end so six steps stay where doubles resolve the near-flat shapes.
    let c = e([4.0, 3.0, 2.0, 3.0]);
    let p = build(&c).unwrap();
    let start = realize(&c, &p.eval(-10.0, Sheet::Upper).unwrap()).unwrap();
    let orbit = fold_orbit(&start, FoldPair::CD, 6).unwrap();
    let z: Vec<f64> = orbit
        .iter()
        .map(|q| q.angles().z[0].finite().unwrap().abs())
        .collect();
    let target = (3.0 + 2.0 * 2f64.sqrt()).powi(2);
    assert!((z[6] / z[5] / target - 1.0).abs() < 0.01, "{z:?}");
}

#[test]
fn numeric_period_examples() {
    let mut r = rng(5);
    let a = e(three_periodic_f64());
    for _ in 0..20 {
        let rep = detect_period_numeric(&random_quad(&mut r, &a), 8, tol::FOLD_RETURN).unwrap();
        assert_eq!((rep.non_oriented, rep.oriented), (Some(3), Some((3, 6))));
    }
    let rep = detect_period_numeric(
        &random_quad(&mut r, &e([2.0, 3.0, 6.0, 31f64.sqrt()])),
        8,
        tol::FOLD_RETURN,
    )
    .unwrap();
    assert_eq!((rep.non_oriented, rep.oriented), (Some(2), Some((2, 2))));
    let rep = detect_period_numeric(
        &random_quad(&mut r, &e([10.0, 5.0, 6.0, 3.0])),
        4,
        tol::FOLD_RETURN,
    )
    .unwrap();
    assert_eq!(rep.non_oriented, None);
    let conic = embed(&e([4.0, 3.0, 2.0, 3.0]), 2.0, Branch::Plus).unwrap();
    assert_eq!(
        detect_period_numeric(&conic, 4, tol::FOLD_RETURN).unwrap_err(),
        Error::ConicInput
    );
}

#[test]
fn congruence_examples() {
    let q = embed(&e([3.0, 4.0, 5.0, 4.0]), 1.1, Branch::Plus).unwrap();
    let m = q.mirror();
    assert!(congruent(&q, &m, CongruenceMode::NonOriented, 1e-9).unwrap());
    assert!(!congruent(&q, &m, CongruenceMode::Oriented, 1e-9).unwrap());
    // A rigid motion of the plane.
    let (c, s) = (0.3f64.cos(), 0.3f64.sin());
    let moved = q
        .vertices()
        .map(|p| Point::new(c * p.x - s * p.y + 2.0, s * p.x + c * p.y - 1.0, 0.0));
    let moved = Quadrilateral::from_vertices(Geometry::Euclidean, moved).unwrap();
    assert!(congruent(&q, &moved, CongruenceMode::Oriented, 1e-9).unwrap());
    assert!(congruent(&q, &moved, CongruenceMode::NonOriented, 1e-9).unwrap());

    let a = e([3.0, 4.0, 5.0, 4.0]);
    let p = embed(&a, FRAC_PI_2, Branch::Plus).unwrap();
    let n = embed(&a, FRAC_PI_2, Branch::Minus).unwrap();
    assert!((p.diagonals().x - n.diagonals().x).abs() > 1e-3);
    assert!(!congruent(&p, &n, CongruenceMode::NonOriented, 1e-9).unwrap());

    let sph = embed(
        &quadfold::SideLengths::new([0.5, 0.6, 0.7, 0.8], Geometry::Spherical).unwrap(),
        1.0,
        Branch::Plus,
    )
    .unwrap();
    assert_eq!(
        congruent(&q, &sph, CongruenceMode::Oriented, 1e-9).unwrap_err(),
        Error::MixedGeometry
    );
}

#[test]
fn degenerate_pivot_is_distinct() {
    // Deltoid with a1 = a4 folded flat at V1 puts V4 on V2.
    assert_eq!(
        embed(&e([2.0, 5.0, 5.0, 2.0]), PI, Branch::Plus).unwrap_err(),
        Error::DegeneratePivot
    );
}

#[test]
fn curved_embeddings_stay_on_the_model() {
    let mut r = rng(11);
    for g in [Geometry::Spherical, Geometry::Hyperbolic] {
        for _ in 0..50 {
            let a = random_sides(&mut r, g);
            let q = random_quad(&mut r, &a);
            for p in q.vertices() {
                assert!(space::on_model(g, p, 1e-12));
            }
            assert!(q.side_residual(&a) < 1e-12);
            let f = fold(&q, Vertex::V3).unwrap();
            assert!(f.side_residual(&a) < 1e-12);
        }
    }
}

fn arb_elliptic() -> impl Strategy<Value = quadfold::SideLengths> {
    any::<u64>().prop_map(|seed| random_elliptic(&mut rng(seed)))
}

fn arb_sides(g: Geometry) -> impl Strategy<Value = quadfold::SideLengths> {
    any::<u64>().prop_map(move |seed| random_sides(&mut rng(seed), g))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn folds_are_isometric_involutions(seed in any::<u64>(), g in prop::sample::select(vec![Geometry::Euclidean, Geometry::Spherical, Geometry::Hyperbolic])) {
        let mut r = rng(seed);
        let a = random_sides(&mut r, g);
        let q = random_quad(&mut r, &a);
        for v in [Vertex::V3, Vertex::V4] {
            let f = fold(&q, v).unwrap();
            prop_assert!(f.side_residual(&a) < 1e-12);
            let back = fold(&f, v).unwrap();
            let scale = a.values().iter().cloned().fold(0.0, f64::max);
            for i in 0..4 {
                prop_assert!((back.vertex(i) - q.vertex(i)).norm() < 1e-10 * scale.max(1.0));
            }
        }
        // The fold axis diagonal is untouched.
        let f = fold(&q, Vertex::V4).unwrap();
        prop_assert!((f.diagonals().x - q.diagonals().x).abs() <= 1e-12 * q.diagonals().x.max(1.0));
    }

    #[test]
    fn embed_measure_round_trip(a in arb_sides(Geometry::Euclidean), seed in any::<u64>()) {
        let q = random_quad(&mut rng(seed), &a);
        let phi1 = q.angles().phi[0];
        let again = embed(&a, phi1, Branch::Plus).or_else(|_| embed(&a, phi1, Branch::Minus)).unwrap();
        prop_assert!((again.angles().phi[0] - phi1).abs() < 1e-10);
        prop_assert!(q.side_residual(&a) < 1e-12);
    }

    #[test]
    fn conjugation_is_an_involution_preserving_s_and_delta(a in arb_elliptic()) {
        let b = conjugate_sides(&a).unwrap();
        let bb = conjugate_sides(&b).unwrap();
        prop_assert!(bb.approx_eq(&a, 1e-12));
        prop_assert!((b.half_perimeter() - a.half_perimeter()).abs() < 1e-12 * a.half_perimeter());
        let (da, db) = (invariants(&a).unwrap().big_delta, invariants(&b).unwrap().big_delta);
        prop_assert!((da - db).abs() < 1e-12 * da);
    }

    #[test]
    fn classification_invariants(a in arb_sides(Geometry::Euclidean)) {
        let c = validate_and_classify(&a);
        prop_assert_eq!(c.kind == Kind::Elliptic, c.zero_count == 0);
        let s = a.half_perimeter();
        let expected = if a.min() + a.max() < s { Lattice::Rectangular } else { Lattice::Rhombic };
        prop_assert_eq!(c.lattice, expected);
        prop_assert_eq!(c.grashof, a.min() + a.max() < s);
    }

    #[test]
    fn curved_lattice_not_applicable(a in arb_sides(Geometry::Spherical)) {
        prop_assert_eq!(validate_and_classify(&a).lattice, Lattice::NotApplicable);
    }

    #[test]
    fn mirror_congruence(a in arb_elliptic(), seed in any::<u64>()) {
        let q = random_quad(&mut rng(seed), &a);
        let m = q.mirror();
        prop_assert!(congruent(&q, &m, CongruenceMode::NonOriented, 1e-9).unwrap());
        let z = q.angles().z;
        let zm = m.angles().z;
        for i in 0..4 {
            match (z[i], zm[i]) {
                (ExtReal::Finite(x), ExtReal::Finite(y)) => prop_assert!((x + y).abs() <= 1e-9 * x.abs().max(1.0)),
                (x, y) => prop_assert_eq!(x, y),
            }
        }
    }
}

#[test]
fn porism_same_period_for_many_starts() {
    let mut r = rng(21);
    for v in [[1.0, 1.0, 1.0, 2.0], [6.0, 4.0, 2.0, 3.0]] {
        let a = e(v);
        let first = detect_period_numeric(&random_quad(&mut r, &a), 8, tol::FOLD_RETURN)
            .unwrap()
            .non_oriented;
        assert!(first.is_some());
        for _ in 0..20 {
            let rep = detect_period_numeric(&random_quad(&mut r, &a), 8, tol::FOLD_RETURN).unwrap();
            assert_eq!(rep.non_oriented, first);
            if let (Some(n), Some((n1, n2))) = (rep.non_oriented, rep.oriented) {
                assert!(n1 % n == 0 && n2 % n == 0);
            }
        }
    }
}
