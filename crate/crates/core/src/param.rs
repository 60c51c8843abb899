//! Real-form parametrizations of the configuration space: Jacobi-elliptic
//! for elliptic sides, hyperbolic-trigonometric for conic sides.

use crate::curves::{amplitudes, Amplitude};
use crate::elliptic::{complete_k, incomplete_f, inverse_sn, jacobi};
use crate::error::{Error, Result};
use crate::fold::{fold_pair, FoldPair, PeriodMethod, PeriodReport};
use crate::quad::{realize, AngleData, ExtReal, Quadrilateral};
use crate::sides::{validate_and_classify, ConicVariant, Geometry, Kind, SideLengths};
use crate::tol;
use num_complex::Complex64;
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum ParamCase {
    /// Grashof sides; canonical `a3 = a_min`.
    Sn,
    /// Non-Grashof sides; canonical `a1 = a_max`.
    Cn,
}

/// Canonical relabeling: canonical vertex `i` is original vertex
/// `i + shift`, or `shift − i` when the traversal is reversed.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Relabel {
    pub shift: usize,
    pub reversed: bool,
}

impl Relabel {
    pub fn cyclic(shift: usize) -> Self {
        Relabel {
            shift: shift % 4,
            reversed: false,
        }
    }

    /// Original index of canonical vertex `i` (zero-based).
    pub fn vertex(self, i: usize) -> usize {
        if self.reversed {
            (self.shift + 4 - i % 4) % 4
        } else {
            (i + self.shift) % 4
        }
    }

    /// Original index of canonical side `i` (zero-based).
    pub fn side(self, i: usize) -> usize {
        if self.reversed {
            (self.shift + 7 - i % 4) % 4
        } else {
            (i + self.shift) % 4
        }
    }

    pub fn canonical_sides(self, a: [f64; 4]) -> [f64; 4] {
        std::array::from_fn(|i| a[self.side(i)])
    }

    fn sign(self) -> f64 {
        if self.reversed {
            -1.0
        } else {
            1.0
        }
    }

    /// Reversing the traversal negates every turning angle.
    pub fn to_canonical(self, z: [ExtReal; 4]) -> [ExtReal; 4] {
        std::array::from_fn(|i| {
            let v = z[self.vertex(i)];
            if self.reversed {
                -v
            } else {
                v
            }
        })
    }

    pub fn to_original(self, zc: [ExtReal; 4]) -> [ExtReal; 4] {
        let mut z = [ExtReal::Finite(0.0); 4];
        for (i, v) in zc.iter().enumerate() {
            z[self.vertex(i)] = if self.sign() < 0.0 { -*v } else { *v };
        }
        z
    }
}

/// Real component selector; `Lower` is the mirror image of `Upper`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Sheet {
    Upper,
    Lower,
}

impl Sheet {
    pub fn sign(self) -> f64 {
        match self {
            Sheet::Upper => 1.0,
            Sheet::Lower => -1.0,
        }
    }

    fn of(x: f64) -> Self {
        if x < 0.0 {
            Sheet::Lower
        } else {
            Sheet::Upper
        }
    }
}

/// Action of a composed fold pair on the real parameter.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct FoldShift {
    /// Parameter translation, reduced to `(−T/2, T/2]` for the real period `T`.
    pub shift: f64,
    pub flips_sheet: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct EllipticParametrization {
    pub case: ParamCase,
    pub k_prime: f64,
    /// `K(k′)`.
    pub quarter: f64,
    pub sigma: f64,
    /// The complex-form shift is `i·tau_imag`.
    pub tau_imag: f64,
    /// Canonical amplitudes.
    pub p: [Amplitude; 4],
    pub relabel: Relabel,
    /// Shifts of `F3∘F4` and `F2∘F3`, in that order.
    pub fold_calibration: [FoldShift; 2],
    pub sides: SideLengths,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ConicParametrization {
    pub variant: ConicVariant,
    pub p: [Amplitude; 4],
    pub sigma: f64,
    pub relabel: Relabel,
    pub sides: SideLengths,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub enum Parametrization {
    Elliptic(EllipticParametrization),
    Conic(ConicParametrization),
}

fn same(x: f64, y: f64, scale: f64) -> bool {
    (x - y).abs() <= tol::SIDE_SUM * scale
}

fn find_relabel(
    a: [f64; 4],
    allow_reversal: bool,
    ok: impl Fn([f64; 4]) -> bool,
) -> Option<Relabel> {
    let reversals: &[bool] = if allow_reversal {
        &[false, true]
    } else {
        &[false]
    };
    reversals
        .iter()
        .flat_map(|&reversed| (0..4).map(move |shift| Relabel { shift, reversed }))
        .find(|r| ok(r.canonical_sides(a)))
}

pub fn build(a: &SideLengths) -> Result<Parametrization> {
    if a.geometry() != Geometry::Euclidean {
        return Err(Error::Unsupported("parametrizations are Euclidean"));
    }
    let class = validate_and_classify(a);
    let v = a.values();
    let scale = a.half_perimeter();
    let min = a.min();
    let max = a.max();
    match class.kind {
        Kind::Elliptic => {
            let case = if class.grashof {
                ParamCase::Sn
            } else {
                ParamCase::Cn
            };
            let relabel = match case {
                ParamCase::Sn => find_relabel(v, false, |c| c[2] == min),
                ParamCase::Cn => find_relabel(v, false, |c| c[0] == max),
            }
            .expect("a rotation reaches the extreme side");
            let c = relabel.canonical_sides(v);
            let s = 0.5 * c.iter().sum::<f64>();
            let cb = c.map(|x| s - x);
            let prod = c.iter().product::<f64>();
            let prod_bar = cb.iter().product::<f64>();
            let (k_prime, w) = match case {
                ParamCase::Sn => (
                    (prod / prod_bar).sqrt(),
                    (cb[0] * cb[2] / (c[1] * c[3])).sqrt(),
                ),
                ParamCase::Cn => (
                    (prod_bar / prod).sqrt(),
                    (c[0] * c[2] / (cb[1] * cb[3])).sqrt(),
                ),
            };
            let quarter = complete_k(k_prime)?;
            let sigma = inverse_sn(w.min(1.0), k_prime)?;
            let mut p = EllipticParametrization {
                case,
                k_prime,
                quarter,
                sigma,
                tau_imag: sigma,
                p: amplitudes(c, cb),
                relabel,
                fold_calibration: [FoldShift {
                    shift: 0.0,
                    flips_sheet: false,
                }; 2],
                sides: a.clone(),
            };
            p.fold_calibration = p.calibrate()?;
            Ok(Parametrization::Elliptic(p))
        }
        Kind::Conic(variant @ (ConicVariant::Circumscribable | ConicVariant::AdjacentSum)) => {
            let relabel = match variant {
                ConicVariant::Circumscribable => find_relabel(v, false, |c| c[2] == min),
                _ => find_relabel(v, true, |c| {
                    c[2] == min && same(c[0] + c[1], c[2] + c[3], scale)
                }),
            }
            .expect("a dihedral relabeling reaches the canonical form");
            let c = relabel.canonical_sides(v);
            let p = std::array::from_fn(|i| {
                let j = (i + 3) % 4;
                Amplitude::sqrt_of(c[i] * c[j] / (c[(i + 1) % 4] * c[(i + 2) % 4]) - 1.0)
            });
            let (aa, bb) = (c[0] * c[2], c[1] * c[3]);
            let sigma = ((bb / (bb - aa)).sqrt() + (aa / (bb - aa)).sqrt()).ln();
            Ok(Parametrization::Conic(ConicParametrization {
                variant,
                p,
                sigma,
                relabel,
                sides: a.clone(),
            }))
        }
        k => Err(Error::DegenerateKind(k)),
    }
}

fn quotient(num: Complex64, den: f64) -> ExtReal {
    if den == 0.0 {
        ExtReal::Infinity
    } else {
        ExtReal::Finite(num.re / den)
    }
}

/// `x` reduced to `[0, period)`.
fn reduce(x: f64, period: f64) -> f64 {
    let r = x.rem_euclid(period);
    if r >= period {
        0.0
    } else {
        r
    }
}

/// `x` reduced to `(−period/2, period/2]`.
fn centered(x: f64, period: f64) -> f64 {
    let r = reduce(x, period);
    if r > 0.5 * period {
        r - period
    } else {
        r
    }
}

const I: Complex64 = Complex64::new(0.0, 1.0);

impl EllipticParametrization {
    /// `2K(k′)` for the sn case (per sheet), `4K(k′)` for the cn case.
    pub fn real_period(&self) -> f64 {
        match self.case {
            ParamCase::Sn => 2.0 * self.quarter,
            ParamCase::Cn => 4.0 * self.quarter,
        }
    }

    /// Canonical tangents at parameter `u`.
    pub fn eval_canonical(&self, u: f64, sheet: Sheet) -> Result<[ExtReal; 4]> {
        if !u.is_finite() {
            return Err(Error::PoleAtParameter(u));
        }
        let kp = self.k_prime;
        let j0 = jacobi(u, kp)?;
        let j1 = jacobi(u + self.sigma, kp)?;
        let s = sheet.sign();
        let p = self.p.map(|x| x.complex() * s);
        Ok(match self.case {
            ParamCase::Sn => [
                quotient(p[0], j0.dn),
                quotient(p[1], j1.dn),
                quotient(I * p[2] * j0.sn, j0.cn),
                quotient(-I * p[3] * j1.sn, j1.cn),
            ],
            ParamCase::Cn => [
                quotient(p[0], j0.cn),
                quotient(p[1], j1.cn),
                quotient(I * kp * p[2] * j0.sn, j0.dn),
                quotient(-I * kp * p[3] * j1.sn, j1.dn),
            ],
        })
    }

    pub fn eval(&self, u: f64, sheet: Sheet) -> Result<AngleData> {
        Ok(AngleData::from_z(
            self.relabel.to_original(self.eval_canonical(u, sheet)?),
        ))
    }

    /// Parameter and sheet of a quadrilateral with these sides.
    pub fn locate_angles(&self, angles: &AngleData) -> Result<(f64, Sheet)> {
        let zc = self.relabel.to_canonical(angles.z);
        let kp = self.k_prime;
        let (u, sheet) = match self.case {
            ParamCase::Sn => {
                let z1 = zc[0].finite().ok_or(Error::NoMatch(f64::INFINITY))?;
                let sheet = Sheet::of(z1);
                let c3 = (I * self.p[2].complex()).re * sheet.sign();
                let phi = match zc[2] {
                    ExtReal::Finite(z3) => (z3 / c3).atan(),
                    ExtReal::Infinity => std::f64::consts::FRAC_PI_2,
                };
                (reduce(incomplete_f(phi, kp)?, self.real_period()), sheet)
            }
            ParamCase::Cn => {
                let cn = match zc[0] {
                    ExtReal::Finite(z1) => self.p[0].magnitude() / z1,
                    ExtReal::Infinity => 0.0,
                };
                let c3 = (I * kp * self.p[2].complex()).re;
                let sd = zc[2].finite().ok_or(Error::NoMatch(f64::INFINITY))? / c3;
                let sn = sd / (1.0 + kp * kp * sd * sd).sqrt();
                let phi = sn.atan2(cn);
                (
                    reduce(incomplete_f(phi, kp)?, self.real_period()),
                    Sheet::Upper,
                )
            }
        };
        let mismatch = self.eval(u, sheet)?.angle_distance(angles);
        if mismatch > tol::LOCATE {
            return Err(Error::NoMatch(mismatch));
        }
        Ok((u, sheet))
    }

    pub fn locate(&self, q: &Quadrilateral) -> Result<(f64, Sheet)> {
        self.locate_angles(&q.angles())
    }

    fn calibrate(&self) -> Result<[FoldShift; 2]> {
        // A generic start, away from the quarter-period marks.
        let u0 = std::f64::consts::FRAC_1_PI * self.quarter;
        let q = realize(&self.sides, &self.eval(u0, Sheet::Upper)?)?;
        let t = self.real_period();
        let mut out = [FoldShift {
            shift: 0.0,
            flips_sheet: false,
        }; 2];
        for (k, pair) in [FoldPair::CD, FoldPair::BC].into_iter().enumerate() {
            let (u1, sheet) = self.locate(&fold_pair(&q, pair)?)?;
            out[k] = FoldShift {
                shift: centered(u1 - u0, t),
                flips_sheet: sheet == Sheet::Lower,
            };
        }
        Ok(out)
    }

    /// Whether the calibrated shift of `pair` is `±2σ` (rather than the complementary shift).
    fn is_sigma_shift(&self, pair: usize) -> bool {
        let f = self.fold_calibration[pair];
        match self.case {
            ParamCase::Sn => !f.flips_sheet,
            ParamCase::Cn => {
                let t = self.real_period();
                let d = |target: f64| {
                    centered(f.shift - target, t)
                        .abs()
                        .min(centered(f.shift + target, t).abs())
                };
                d(2.0 * self.sigma) <= d(2.0 * self.quarter - 2.0 * self.sigma)
            }
        }
    }

    /// Period report from the ratio `σ/K(k′)`, oriented orders in original labels.
    pub fn period_report(&self, tol: f64, max_den: u32) -> PeriodReport {
        let mut r = period_from_sigma(self.sigma, self.quarter, self.case, tol, max_den);
        if let Some((n1, n2)) = r.oriented {
            if !self.is_sigma_shift(0) {
                r.oriented = Some((n2, n1));
            }
        }
        r
    }
}

impl ConicParametrization {
    pub fn eval_canonical(&self, u: f64, sheet: Sheet) -> Result<[ExtReal; 4]> {
        if !u.is_finite() {
            return Err(Error::PoleAtParameter(u));
        }
        let s = sheet.sign();
        let p = self.p.map(|x| x.complex() * s);
        let (c0, c1, s0, s1) = (
            u.cosh(),
            (u + self.sigma).cosh(),
            u.sinh(),
            (u + self.sigma).sinh(),
        );
        Ok(match self.variant {
            ConicVariant::Circumscribable => [
                ExtReal::Finite((p[0] * c0).re),
                ExtReal::Finite((p[1] * c1).re),
                ExtReal::Finite((I * p[2] * s0).re),
                ExtReal::Finite((-I * p[3] * s1).re),
            ],
            _ => [
                ExtReal::Finite((p[0] * c0).re),
                quotient(Complex64::new(s * s, 0.0), (p[1] * c1).re),
                ExtReal::Finite((-I * p[2] * s0).re),
                quotient(Complex64::new(s * s, 0.0), (-I * p[3] * s1).re),
            ],
        })
    }

    pub fn eval(&self, u: f64, sheet: Sheet) -> Result<AngleData> {
        Ok(AngleData::from_z(
            self.relabel.to_original(self.eval_canonical(u, sheet)?),
        ))
    }

    pub fn locate_angles(&self, angles: &AngleData) -> Result<(f64, Sheet)> {
        let zc = self.relabel.to_canonical(angles.z);
        let z1 = zc[0].finite().ok_or(Error::NoMatch(f64::INFINITY))?;
        let sheet = Sheet::of(z1);
        let c3 = match self.variant {
            ConicVariant::Circumscribable => (I * self.p[2].complex()).re,
            _ => (-I * self.p[2].complex()).re,
        };
        let z3 = zc[2].finite().ok_or(Error::NoMatch(f64::INFINITY))?;
        let u = (z3 / (c3 * sheet.sign())).asinh();
        let mismatch = self.eval(u, sheet)?.angle_distance(angles);
        if mismatch > tol::LOCATE {
            return Err(Error::NoMatch(mismatch));
        }
        Ok((u, sheet))
    }
}

impl Parametrization {
    pub fn sides(&self) -> &SideLengths {
        match self {
            Parametrization::Elliptic(p) => &p.sides,
            Parametrization::Conic(p) => &p.sides,
        }
    }

    pub fn sigma(&self) -> f64 {
        match self {
            Parametrization::Elliptic(p) => p.sigma,
            Parametrization::Conic(p) => p.sigma,
        }
    }

    pub fn amplitudes(&self) -> [Amplitude; 4] {
        match self {
            Parametrization::Elliptic(p) => p.p,
            Parametrization::Conic(p) => p.p,
        }
    }

    /// Real period of the parameter, `None` for the non-periodic conic case.
    pub fn real_period(&self) -> Option<f64> {
        match self {
            Parametrization::Elliptic(p) => Some(p.real_period()),
            Parametrization::Conic(_) => None,
        }
    }

    pub fn eval(&self, u: f64, sheet: Sheet) -> Result<AngleData> {
        match self {
            Parametrization::Elliptic(p) => p.eval(u, sheet),
            Parametrization::Conic(p) => p.eval(u, sheet),
        }
    }

    pub fn locate(&self, q: &Quadrilateral) -> Result<(f64, Sheet)> {
        let angles = q.angles();
        match self {
            Parametrization::Elliptic(p) => p.locate_angles(&angles),
            Parametrization::Conic(p) => p.locate_angles(&angles),
        }
    }
}

/// Calibrated parameter shifts of `F3∘F4` and `F2∘F3`; conic sides have none.
pub fn folding_shifts(p: &Parametrization) -> Option<[FoldShift; 2]> {
    match p {
        Parametrization::Elliptic(e) => Some(e.fold_calibration),
        Parametrization::Conic(_) => None,
    }
}

/// Smallest-denominator fraction within `tol` of `x`.
pub fn rational_approximation(x: f64, tol: f64, max_den: u32) -> Option<(u32, u32)> {
    (1..=max_den).find_map(|n| {
        let m = (x * n as f64).round();
        ((x - m / n as f64).abs() <= tol && m >= 0.0).then_some((m as u32, n))
    })
}

fn gcd(a: u32, b: u32) -> u32 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// Periods from `σ/K′ = m/n`. The oriented pair lists the order of the
/// `2σ` translation first, then that of the complementary shift.
pub fn period_from_sigma(
    sigma: f64,
    quarter: f64,
    case: ParamCase,
    tol: f64,
    max_den: u32,
) -> PeriodReport {
    let ratio = sigma / quarter;
    let Some((m, n)) = rational_approximation(ratio, tol, max_den) else {
        return PeriodReport::none(PeriodMethod::SigmaRational, f64::INFINITY);
    };
    let margin = (ratio - m as f64 / n as f64).abs();
    let oriented = match case {
        ParamCase::Sn => (n, if n % 2 == 0 { n } else { 2 * n }),
        ParamCase::Cn => {
            let first = 2 * n / gcd(m, 2 * n);
            let second = 2 * n / gcd(n.abs_diff(m), 2 * n);
            (first, second)
        }
    };
    PeriodReport {
        non_oriented: Some(n),
        oriented: Some(oriented),
        method: PeriodMethod::SigmaRational,
        margin,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::curves::max_residual;

    fn e(v: [f64; 4]) -> SideLengths {
        SideLengths::euclidean(v).unwrap()
    }

    fn elliptic(v: [f64; 4]) -> EllipticParametrization {
        match build(&e(v)).unwrap() {
            Parametrization::Elliptic(p) => p,
            _ => panic!("expected elliptic"),
        }
    }

    #[test]
    fn three_periodic_example() {
        let p = elliptic([1.0, 3.0, 3.0 * 5f64.sqrt(), 5.0]);
        assert_eq!(p.case, ParamCase::Sn);
        assert_eq!(p.relabel, Relabel::cyclic(2));
        assert!((p.k_prime - 0.961_637_300_211_711_7).abs() < 1e-14);
        assert!((p.quarter - 2.712_609_870_315_12).abs() < 1e-12);
        assert!((p.sigma - 0.904_203_290_105_039_7).abs() < 1e-12);
        assert!((p.sigma / p.quarter - 1.0 / 3.0).abs() < 1e-12);
        let z = p.eval_canonical(0.0, Sheet::Upper).unwrap();
        assert!((z[0].finite().unwrap() - 1.618_033_988_749_895).abs() < 1e-12);
        assert_eq!(z[2], ExtReal::Finite(0.0));
    }

    #[test]
    fn cn_example() {
        let p = elliptic([10.0, 5.0, 6.0, 3.0]);
        assert_eq!(p.case, ParamCase::Cn);
        assert_eq!(p.relabel, Relabel::cyclic(0));
        assert!((p.k_prime - 0.84f64.sqrt()).abs() < 1e-15);
        let sn = jacobi(p.sigma, p.k_prime).unwrap().sn;
        assert!((sn - (60.0f64 / 63.0).sqrt()).abs() < 1e-12);
    }

    #[test]
    fn conic_example() {
        let Parametrization::Conic(p) = build(&e([4.0, 3.0, 2.0, 3.0])).unwrap() else {
            panic!()
        };
        assert_eq!(p.variant, ConicVariant::Circumscribable);
        assert_eq!(p.p[0], Amplitude::Real(1.0));
        assert!(matches!(p.p[2], Amplitude::Imaginary(m) if (m - 0.5f64.sqrt()).abs() < 1e-15));
        assert!((p.sigma - (3.0 + 2.0 * 2f64.sqrt()).ln()).abs() < 1e-12);
        let z = p.eval(0.0, Sheet::Upper).unwrap().z;
        assert_eq!(z[0], ExtReal::Finite(1.0));
        assert_eq!(z[2].finite().unwrap().abs(), 0.0);
    }

    #[test]
    fn adjacent_sum_needing_reversal() {
        let a = e([3.0, 2.0, 4.0, 1.0]);
        let Parametrization::Conic(p) = build(&a).unwrap() else {
            panic!()
        };
        assert!(p.relabel.reversed);
        for u in [-1.3, -0.2, 0.4, 2.0] {
            let ang = p.eval(u, Sheet::Upper).unwrap();
            assert!(max_residual(&a, &ang) < 1e-9);
            let (v, _) = p.locate_angles(&ang).unwrap();
            assert!((u - v).abs() < 1e-9);
        }
    }

    #[test]
    fn degenerate_kinds_are_rejected() {
        assert!(matches!(
            build(&e([3.0, 4.0, 3.0, 4.0])),
            Err(Error::DegenerateKind(Kind::Isogram))
        ));
    }

    #[test]
    fn sigma_table() {
        let k = 2.0;
        let r = period_from_sigma(k / 3.0, k, ParamCase::Sn, 1e-9, 64);
        assert_eq!((r.non_oriented, r.oriented), (Some(3), Some((3, 6))));
        let r = period_from_sigma(k / 2.0, k, ParamCase::Sn, 1e-9, 64);
        assert_eq!((r.non_oriented, r.oriented), (Some(2), Some((2, 2))));
        let r = period_from_sigma(k / 2.0, k, ParamCase::Cn, 1e-9, 64);
        assert_eq!((r.non_oriented, r.oriented), (Some(2), Some((4, 4))));
        let r = period_from_sigma(k * 0.123_456_789_1, k, ParamCase::Cn, 1e-9, 64);
        assert_eq!(r.non_oriented, None);
    }

    #[test]
    fn locate_round_trip() {
        for v in [
            [1.0, 3.0, 3.0 * 5f64.sqrt(), 5.0],
            [10.0, 5.0, 6.0, 3.0],
            [2.0, 2.5, 3.1, 1.7],
        ] {
            let p = elliptic(v);
            let t = p.real_period();
            for sheet in [Sheet::Upper, Sheet::Lower] {
                for k in 0..7 {
                    let u = t * (k as f64 + 0.3) / 7.0;
                    let ang = p.eval(u, sheet).unwrap();
                    assert!(max_residual(&p.sides, &ang) < 1e-9);
                    let (w, s) = p.locate_angles(&ang).unwrap();
                    let back = p.eval(w, s).unwrap();
                    assert!(back.angle_distance(&ang) < 1e-9, "{v:?} {u}");
                }
            }
        }
    }

    #[test]
    fn fold_orders_from_sigma() {
        let cases: [([f64; 4], u32, (u32, u32)); 4] = [
            ([1.0, 3.0, 3.0 * 5f64.sqrt(), 5.0], 3, (3, 6)),
            ([2.0, 3.0, 6.0, 31f64.sqrt()], 2, (2, 2)),
            ([6.0, 4.0, 2.0, 3.0], 2, (4, 4)),
            ([1.0, 1.0, 1.0, 2.0], 3, (6, 3)),
        ];
        for (v, n, pair) in cases {
            let r = elliptic(v).period_report(1e-9, 64);
            assert_eq!((r.non_oriented, r.oriented), (Some(n), Some(pair)), "{v:?}");
        }
        assert_eq!(
            elliptic([10.0, 5.0, 6.0, 3.0])
                .period_report(1e-9, 64)
                .non_oriented,
            None
        );
    }
}
