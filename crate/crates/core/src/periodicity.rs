//! Folding invariants, the power-series Hankel criterion, closed-form tests
//! for small periods, and the branch data of the diagonal coordinate.

use crate::error::{Error, Result};
use crate::fold::{detect_period_numeric, PeriodMethod, PeriodReport};
use crate::param::{build, Parametrization};
use crate::quad::{admissible_phi1, embed, Branch};
use crate::sides::{validate_and_classify, Geometry, Kind, SideLengths};
use crate::surd::QuadSurd;
use crate::tol;
use nalgebra::DMatrix;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

/// Minimal field interface shared by the float and exact paths.
trait Field: Clone {
    fn int(n: i64) -> Self;
    fn add(&self, o: &Self) -> Self;
    fn sub(&self, o: &Self) -> Self;
    fn mul(&self, o: &Self) -> Self;
    fn div(&self, o: &Self) -> Self;
    fn is_zero(&self) -> bool;
    /// Equality, exact or to the closed-form relative tolerance.
    fn same(&self, o: &Self) -> bool;
}

impl Field for f64 {
    fn int(n: i64) -> Self {
        n as f64
    }
    fn add(&self, o: &Self) -> Self {
        self + o
    }
    fn sub(&self, o: &Self) -> Self {
        self - o
    }
    fn mul(&self, o: &Self) -> Self {
        self * o
    }
    fn div(&self, o: &Self) -> Self {
        self / o
    }
    fn is_zero(&self) -> bool {
        *self == 0.0
    }
    fn same(&self, o: &Self) -> bool {
        (self - o).abs() <= tol::CLOSED_FORM * self.abs().max(o.abs()).max(f64::MIN_POSITIVE)
    }
}

impl Field for QuadSurd {
    fn int(n: i64) -> Self {
        QuadSurd::from_integer(n)
    }
    fn add(&self, o: &Self) -> Self {
        self + o
    }
    fn sub(&self, o: &Self) -> Self {
        self - o
    }
    fn mul(&self, o: &Self) -> Self {
        self * o
    }
    fn div(&self, o: &Self) -> Self {
        self / o
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn same(&self, o: &Self) -> bool {
        self == o
    }
}

fn bar<T: Field>(a: &[T; 4]) -> [T; 4] {
    let sum = a[0].add(&a[1]).add(&a[2]).add(&a[3]);
    let s = sum.div(&T::int(2));
    std::array::from_fn(|i| s.sub(&a[i]))
}

/// `(Δ, δ, δ̄)`.
fn deltas<T: Field>(a: &[T; 4]) -> [T; 3] {
    let b = bar(a);
    let (p, q) = (a[0].mul(&a[2]), a[1].mul(&a[3]));
    [p.add(&q), p.sub(&q), b[0].mul(&b[2]).sub(&b[1].mul(&b[3]))]
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct FoldInvariants {
    #[serde(rename = "Delta")]
    pub big_delta: f64,
    pub delta: f64,
    pub delta_bar: f64,
    /// `(Δ², δ², δ̄²)`.
    pub branch_values: [f64; 3],
}

impl FoldInvariants {
    pub fn branch_values_descending(&self) -> [f64; 3] {
        let mut b = self.branch_values;
        b.sort_by(|x, y| y.total_cmp(x));
        b
    }
}

fn require_euclidean(a: &SideLengths) -> Result<()> {
    if a.geometry() != Geometry::Euclidean {
        return Err(Error::Unsupported("periodicity tests are Euclidean"));
    }
    Ok(())
}

fn require_elliptic(a: &SideLengths) -> Result<()> {
    require_euclidean(a)?;
    match validate_and_classify(a).kind {
        Kind::Elliptic => Ok(()),
        k => Err(Error::NotElliptic(k)),
    }
}

/// Exact `(Δ, δ, δ̄)` when the sides carry exact values.
pub fn invariants_exact(a: &SideLengths) -> Option<[QuadSurd; 3]> {
    a.exact_values().map(deltas)
}

pub fn invariants(a: &SideLengths) -> Result<FoldInvariants> {
    require_euclidean(a)?;
    let [big_delta, delta, delta_bar] = match invariants_exact(a) {
        Some(x) => x.map(|v| v.to_f64()),
        None => deltas(&a.values()),
    };
    let branch_values = match invariants_exact(a) {
        Some(x) => x.map(|v| (&v * &v).to_f64()),
        None => [big_delta, delta, delta_bar].map(|v| v * v),
    };
    Ok(FoldInvariants {
        big_delta,
        delta,
        delta_bar,
        branch_values,
    })
}

/// Coefficients `h` of `√(P(x))` with `P(0) = 1`, for
/// `P = (1 − x/α)(1 − x/β)(1 − x/γ)`.
fn unit_series<T: Field>(branch: &[T; 3], m: usize) -> Vec<T> {
    let (al, be, ga) = (&branch[0], &branch[1], &branch[2]);
    let e1 = al.add(be).add(ga);
    let e2 = al.mul(be).add(&be.mul(ga)).add(&al.mul(ga));
    let e3 = al.mul(be).mul(ga);
    let p = [
        T::int(1),
        T::int(0).sub(&e2.div(&e3)),
        e1.div(&e3),
        T::int(-1).div(&e3),
    ];
    let two = T::int(2);
    let mut h = vec![T::int(1)];
    for n in 1..=m {
        let mut acc = if n < 4 { p[n].clone() } else { T::int(0) };
        for i in 1..n {
            acc = acc.sub(&h[i].mul(&h[n - i]));
        }
        h.push(acc.div(&two));
    }
    h
}

/// Taylor coefficients `A_0..A_M` at `x = 0` of `√((α−x)(β−x)(γ−x))`.
pub fn series_coefficients(branch: [f64; 3], m: usize) -> Vec<f64> {
    let root = (branch[0] * branch[1] * branch[2]).sqrt();
    unit_series(&branch, m)
        .into_iter()
        .map(|h| root * h)
        .collect()
}

/// Offset and size of the Hankel block for period `n`.
fn hankel_shape(n: u32) -> (usize, usize) {
    let n = n as usize;
    if n % 2 == 1 {
        (2, (n - 1) / 2)
    } else {
        (3, n / 2 - 1)
    }
}

fn exact_det(mut m: Vec<Vec<QuadSurd>>) -> QuadSurd {
    let k = m.len();
    let mut det = QuadSurd::from_integer(1);
    for c in 0..k {
        let Some(p) = (c..k).find(|&r| !Zero::is_zero(&m[r][c])) else {
            return QuadSurd::zero();
        };
        if p != c {
            m.swap(p, c);
            det = -det;
        }
        let pivot = m[c][c].clone();
        det = &det * &pivot;
        for r in c + 1..k {
            let f = &m[r][c] / &pivot;
            let (top, bottom) = m.split_at_mut(r);
            for (x, y) in bottom[0][c..k].iter_mut().zip(&top[c][c..k]) {
                *x = &*x - &(&f * y);
            }
        }
    }
    det
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct HankelOutcome {
    pub periodic: bool,
    /// `|det|` relative to its offset neighbours; 0 for an exact zero.
    pub margin: f64,
    /// The decision is certified by exact arithmetic.
    pub exact: bool,
}

/// Largest period accepted by the floating-point Hankel path. Beyond it,
/// aperiodic sides reach margins near 1e-10, so only exact inputs are decided.
pub const HANKEL_MAX_FLOAT_N: u32 = 8;

/// `|H_k^(c)|` over the larger of itself and its offset neighbours
/// `H_k^(c±1)`, which share its `ρ^{k²}` decay.
fn float_margin(branch: [f64; 3], n: u32) -> f64 {
    let t = branch.iter().cloned().fold(f64::INFINITY, f64::min);
    let (c, k) = hankel_shape(n);
    let h = unit_series(&branch.map(|b| b / t), c + 2 * k);
    let det = |off: usize| {
        DMatrix::from_fn(k, k, |i, j| h[off + i + j])
            .determinant()
            .abs()
    };
    let d = det(c);
    let scale = det(c - 1).max(det(c + 1)).max(d);
    if scale == 0.0 {
        0.0
    } else {
        d / scale
    }
}

/// Whether sides `a` are `n`-periodic disregarding orientation.
pub fn hankel_test(a: &SideLengths, n: u32, tol: f64) -> Result<HankelOutcome> {
    require_elliptic(a)?;
    if n < 2 {
        return Err(Error::OutOfRange(n as f64));
    }
    let exact = invariants_exact(a);
    let inv = invariants(a)?;
    // A vanishing δ or δ̄ makes every orbit close after two folds.
    let exact_two = matches!(&exact, Some([_, d, db]) if Zero::is_zero(d) || Zero::is_zero(db));
    let two_periodic = exact_two || (inv.delta * inv.delta_bar).abs() <= tol * inv.branch_values[0];
    if two_periodic || n == 2 {
        let periodic = two_periodic && n.is_multiple_of(2);
        return Ok(HankelOutcome {
            periodic,
            margin: if periodic { 0.0 } else { 1.0 },
            exact: exact_two,
        });
    }
    if n > HANKEL_MAX_FLOAT_N && exact.is_none() {
        return Err(Error::OutOfRange(n as f64));
    }
    // An exact zero certifies periodicity; otherwise the float margin decides,
    // so decimal approximations of periodic sides behave as in floating point.
    if let Some(x) = exact {
        let sq = x.map(|v| &v * &v);
        let (c, k) = hankel_shape(n);
        let h = unit_series(&sq, c + 2 * k);
        let m = (0..k)
            .map(|i| (0..k).map(|j| h[c + i + j].clone()).collect())
            .collect();
        if Zero::is_zero(&exact_det(m)) {
            return Ok(HankelOutcome {
                periodic: true,
                margin: 0.0,
                exact: true,
            });
        }
        if n > HANKEL_MAX_FLOAT_N {
            return Ok(HankelOutcome {
                periodic: false,
                margin: f64::NAN,
                exact: true,
            });
        }
    }
    let margin = float_margin(inv.branch_values, n);
    Ok(HankelOutcome {
        periodic: margin <= tol,
        margin,
        exact: false,
    })
}

/// `(a1a3, a2a4, ā1ā3, ā2ā4)`.
fn products<T: Field>(a: &[T; 4]) -> [T; 4] {
    let b = bar(a);
    [
        a[0].mul(&a[2]),
        a[1].mul(&a[3]),
        b[0].mul(&b[2]),
        b[1].mul(&b[3]),
    ]
}

fn closed_generic<T: Field>(a: &[T; 4], n: u32, grashof: bool) -> bool {
    let sq: [T; 4] = std::array::from_fn(|i| a[i].mul(&a[i]));
    let [p, q, pb, qb] = products(a);
    let four = T::int(4);
    match n {
        2 => sq[0].add(&sq[2]).same(&sq[1].add(&sq[3])),
        3 => {
            let lhs = p.add(&q).mul(&p.add(&q));
            [p.mul(&qb), q.mul(&pb), p.mul(&pb), q.mul(&qb)]
                .iter()
                .any(|r| lhs.same(&four.mul(r)))
        }
        _ if !grashof => p.same(&q),
        _ => {
            // sn 4σ = ±1 with sn, cn, dn of 2σ from the side products, squared:
            // 16ĀB̄(Ā−B̄)²(A−B)²(A+B)² = ((A+B)⁴ − 16ABĀB̄)².
            let (s, d, db) = (p.add(&q), p.sub(&q), pb.sub(&qb));
            let s2 = s.mul(&s);
            let t = T::int(16).mul(&p).mul(&q).mul(&pb).mul(&qb);
            let lhs = T::int(16)
                .mul(&pb)
                .mul(&qb)
                .mul(&db)
                .mul(&db)
                .mul(&d)
                .mul(&d)
                .mul(&s2);
            let rhs = s2.mul(&s2).sub(&t);
            lhs.same(&rhs.mul(&rhs))
        }
    }
}

/// Non-oriented period 4 for non-Grashof sides: `4√(AB)|A−B| = (A+B)|Ā−B̄|`, squared.
fn cn_four_generic<T: Field>(a: &[T; 4]) -> bool {
    let [p, q, pb, qb] = products(a);
    let d = p.sub(&q);
    let db = pb.sub(&qb);
    let s = p.add(&q);
    T::int(16)
        .mul(&p)
        .mul(&q)
        .mul(&d)
        .mul(&d)
        .same(&s.mul(&s).mul(&db).mul(&db))
}

/// Closed-form conditions for periods 2, 3 and 4.
pub fn closed_form_test(a: &SideLengths, n: u32) -> Result<bool> {
    require_elliptic(a)?;
    if !(2..=4).contains(&n) {
        return Err(Error::OutOfRange(n as f64));
    }
    let grashof = a.is_grashof();
    Ok(match a.exact_values() {
        Some(x) => closed_generic(x, n, grashof),
        None => closed_generic(&a.values(), n, grashof),
    })
}

fn closed_form_report(a: &SideLengths, max_n: u32) -> Result<PeriodReport> {
    require_elliptic(a)?;
    let grashof = a.is_grashof();
    let cn_four = !grashof
        && match a.exact_values() {
            Some(x) => cn_four_generic(x),
            None => cn_four_generic(&a.values()),
        };
    let non_oriented = if closed_form_test(a, 2)? || (!grashof && closed_form_test(a, 4)?) {
        Some(2)
    } else if closed_form_test(a, 3)? {
        Some(3)
    } else if (grashof && closed_form_test(a, 4)?) || cn_four {
        Some(4)
    } else {
        None
    };
    let non_oriented = non_oriented.filter(|&n| n <= max_n);
    // Oriented orders need the calibrated parametrization; the closed forms fix only the period.
    let oriented = match (non_oriented, build(a)) {
        (Some(n), Ok(Parametrization::Elliptic(p))) => {
            let r = p.period_report(tol::SIGMA_RATIONAL, tol::MAX_DENOMINATOR);
            r.oriented.filter(|_| r.non_oriented == Some(n))
        }
        _ => None,
    };
    Ok(PeriodReport {
        non_oriented,
        oriented,
        method: PeriodMethod::ClosedForm,
        margin: 0.0,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct PqData {
    pub u_p: f64,
    pub v_p: f64,
    pub u_q: f64,
    /// `a1 + a2 ≥ a3 + a4`: the aligned configuration lies on the real locus.
    pub feasible: bool,
}

fn pq_generic<T: Field>(a: &[T; 4]) -> Result<[T; 3]> {
    let sq: [T; 4] = std::array::from_fn(|i| a[i].mul(&a[i]));
    let s34 = a[2].add(&a[3]);
    let u_p = s34.mul(&s34);
    let num = a[2]
        .mul(&sq[0].sub(&sq[3]))
        .add(&a[3].mul(&sq[1].sub(&sq[2])));
    if num.is_zero() {
        return Err(Error::DegenerateDenominator);
    }
    let v_p = num.div(&s34);
    let d12 = sq[0].sub(&sq[1]);
    let first = a[3].sub(&a[2]).mul(&d12).div(&s34);
    let second = d12
        .add(&sq[2])
        .sub(&sq[3])
        .mul(&sq[0].mul(&sq[2]).sub(&sq[1].mul(&sq[3])))
        .div(&s34.mul(&num));
    Ok([u_p, v_p, first.add(&second)])
}

/// Exact `(u_p, v_p, u_q)` when the sides carry exact values.
pub fn p_q_data_exact(a: &SideLengths) -> Result<Option<[QuadSurd; 3]>> {
    require_elliptic(a)?;
    a.exact_values().map(pq_generic).transpose()
}

/// The double pole `p = (u_p, v_p)` of the diagonal coordinate and the `u` value of its zero `q`.
pub fn p_q_data(a: &SideLengths) -> Result<PqData> {
    require_elliptic(a)?;
    let [u_p, v_p, u_q] = match p_q_data_exact(a)? {
        Some(x) => x.map(|v| v.to_f64()),
        None => pq_generic(&a.values())?,
    };
    let v = a.values();
    let feasible = match a.exact_values() {
        Some(x) => (&x[0] + &x[1] - &x[2] - &x[3]).signum() >= 0,
        None => v[0] + v[1] >= v[2] + v[3],
    };
    Ok(PqData {
        u_p,
        v_p,
        u_q,
        feasible,
    })
}

/// Residuals `x(u)·u_p·v_p − b` at the three branch points of `u`,
/// paired with `(Δ², δ², δ̄²)`.
fn crosscheck_generic<T: Field>(a: &[T; 4]) -> Result<[(T, T); 3]> {
    let [u_p, v_p, u_q] = pq_generic(a)?;
    let sq = |x: T| x.mul(&x);
    let points = [
        sq(a[0].add(&a[1])),
        sq(a[0].sub(&a[1])),
        sq(a[2].sub(&a[3])),
    ];
    let targets = deltas(a).map(sq);
    let scale = u_p.mul(&v_p);
    let mut out = Vec::with_capacity(3);
    for (u, b) in points.into_iter().zip(targets) {
        let den = u.sub(&u_p);
        if den.is_zero() {
            return Err(Error::DegenerateDenominator);
        }
        out.push((u.sub(&u_q).div(&den).mul(&scale), b));
    }
    Ok(out.try_into().unwrap_or_else(|_| unreachable!()))
}

/// Worst relative mismatch between the values of `x` at the branch points
/// of `u` and the folding branch values.
pub fn branch_value_crosscheck(a: &SideLengths) -> Result<f64> {
    require_elliptic(a)?;
    let pairs: [(f64, f64); 3] = match a.exact_values() {
        Some(x) => {
            let r = crosscheck_generic(x)?;
            if r.iter().all(|(l, b)| l == b) {
                return Ok(0.0);
            }
            r.map(|(l, b)| (l.to_f64(), b.to_f64()))
        }
        None => crosscheck_generic(&a.values())?,
    };
    let scale = pairs.iter().map(|p| p.1.abs()).fold(0.0, f64::max);
    Ok(pairs
        .iter()
        .map(|(l, b)| (l - b).abs() / scale)
        .fold(0.0, f64::max))
}

/// One side's range `lo, lo + step, …, ≤ hi`, in exact decimals.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SideRange {
    pub lo: BigRational,
    pub hi: BigRational,
    pub step: BigRational,
}

impl SideRange {
    pub fn new(lo: BigRational, hi: BigRational, step: BigRational) -> Result<Self> {
        if !step.is_positive() && lo != hi {
            return Err(Error::OutOfRange(0.0));
        }
        if hi < lo {
            return Err(Error::OutOfRange(0.0));
        }
        Ok(SideRange { lo, hi, step })
    }

    pub fn single(v: BigRational) -> Self {
        SideRange {
            lo: v.clone(),
            hi: v,
            step: BigRational::from_integer(BigInt::from(1)),
        }
    }

    pub fn points(&self) -> Vec<BigRational> {
        let mut out = vec![self.lo.clone()];
        if self.step.is_positive() {
            let mut x = &self.lo + &self.step;
            while x <= self.hi {
                out.push(x.clone());
                x += &self.step;
            }
        }
        out
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GridSpec {
    pub ranges: [SideRange; 4],
}

impl GridSpec {
    /// Grid points in lexicographic order (first side slowest).
    pub fn points(&self) -> Vec<[BigRational; 4]> {
        let axes = self.ranges.clone().map(|r| r.points());
        let mut out = Vec::new();
        for p0 in &axes[0] {
            for p1 in &axes[1] {
                for p2 in &axes[2] {
                    for p3 in &axes[3] {
                        out.push([p0.clone(), p1.clone(), p2.clone(), p3.clone()]);
                    }
                }
            }
        }
        out
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SearchHit {
    pub index: usize,
    pub sides: [f64; 4],
    pub report: PeriodReport,
}

/// Least non-oriented period `≤ max_n` by the chosen method.
pub fn period_report(a: &SideLengths, method: PeriodMethod, max_n: u32) -> Result<PeriodReport> {
    require_elliptic(a)?;
    match method {
        PeriodMethod::NumericFold => {
            let phis = admissible_phi1(a, 64);
            let phi = *phis.get(phis.len() / 3).ok_or(Error::NoClosing)?;
            let q = embed(a, phi, Branch::Plus)?;
            detect_period_numeric(&q, max_n, tol::FOLD_RETURN)
        }
        PeriodMethod::SigmaRational => match build(a)? {
            Parametrization::Elliptic(p) => Ok(p.period_report(tol::SIGMA_RATIONAL, max_n)),
            Parametrization::Conic(_) => Err(Error::ConicInput),
        },
        PeriodMethod::Hankel => {
            let mut margin = f64::INFINITY;
            for n in 2..=max_n {
                let h = hankel_test(a, n, tol::HANKEL)?;
                if h.periodic {
                    return Ok(PeriodReport {
                        non_oriented: Some(n),
                        oriented: None,
                        method,
                        margin: h.margin,
                    });
                }
                if n > 2 {
                    margin = margin.min(h.margin);
                }
            }
            Ok(PeriodReport::none(method, margin))
        }
        PeriodMethod::ClosedForm => closed_form_report(a, max_n),
    }
}

/// Elliptic grid points whose least non-oriented period is `n`, in grid order.
pub fn find_periodic(grid: &GridSpec, n: u32, method: PeriodMethod) -> Result<Vec<SearchHit>> {
    if n < 2 || (method == PeriodMethod::ClosedForm && n > 4) {
        return Err(Error::OutOfRange(n as f64));
    }
    let points = grid.points();
    let mut hits: Vec<SearchHit> = points
        .into_par_iter()
        .enumerate()
        .filter_map(|(index, p)| {
            let a = SideLengths::exact(p.map(QuadSurd::from_rational)).ok()?;
            if validate_and_classify(&a).kind != Kind::Elliptic {
                return None;
            }
            let report = period_report(&a, method, n).ok()?;
            if report.non_oriented != Some(n) {
                return None;
            }
            Some(SearchHit {
                index,
                sides: a.values(),
                report,
            })
        })
        .collect();
    hits.sort_by_key(|h| h.index);
    Ok(hits)
}
