//! Exact arithmetic in a real quadratic field Q(√d).
//!
//! Side lengths such as `3√5` or `√31` stay exact through the periodicity
//! tests, so vanishing determinants can be certified rather than estimated.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

/// `a + b√d` with rational `a`, `b` and a squarefree integer `d > 1`.
/// Rational values carry `b = 0` and `d = 1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct QuadSurd {
    a: BigRational,
    b: BigRational,
    d: BigInt,
}

const TRIAL_LIMIT: u64 = 1_000_000;

/// Splits `n > 0` into `(c, d)` with `n = c²·d`, `d` squarefree up to the trial limit.
fn square_split(n: &BigInt) -> (BigInt, BigInt) {
    let mut rest = n.clone();
    let mut c = BigInt::one();
    let mut p: u64 = 2;
    while p <= TRIAL_LIMIT {
        let pb = BigInt::from(p);
        if &pb * &pb > rest {
            break;
        }
        let sq = &pb * &pb;
        while (&rest % &sq).is_zero() {
            rest /= &sq;
            c *= &pb;
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if let Some(r) = integer_sqrt(&rest) {
        c *= r;
        rest = BigInt::one();
    }
    (c, rest)
}

fn integer_sqrt(n: &BigInt) -> Option<BigInt> {
    if n.is_negative() {
        return None;
    }
    let r = n.sqrt();
    (&r * &r == *n).then_some(r)
}

impl QuadSurd {
    pub fn from_rational(a: BigRational) -> Self {
        QuadSurd {
            a,
            b: BigRational::zero(),
            d: BigInt::one(),
        }
    }

    pub fn from_integer(n: i64) -> Self {
        Self::from_rational(BigRational::from_integer(BigInt::from(n)))
    }

    pub fn from_ratio(num: i64, den: i64) -> Self {
        Self::from_rational(BigRational::new(BigInt::from(num), BigInt::from(den)))
    }

    /// `a + b√d`; `d` need not be squarefree, square factors are pulled out.
    pub fn new(a: BigRational, b: BigRational, d: BigInt) -> Self {
        if b.is_zero() || d.is_one() {
            return Self::from_rational(a + b);
        }
        assert!(d.is_positive(), "radicand must be positive");
        let (c, d) = square_split(&d);
        let b = b * BigRational::from_integer(c);
        if d.is_one() {
            Self::from_rational(a + b)
        } else {
            QuadSurd { a, b, d }
        }
    }

    /// Square root of a non-negative rational, always representable as `c√d`.
    pub fn sqrt_rational(q: &BigRational) -> Option<Self> {
        if q.is_negative() {
            return None;
        }
        if q.is_zero() {
            return Some(Self::zero());
        }
        let num = q.numer() * q.denom();
        let den = q.denom().clone();
        let (c, d) = square_split(&num);
        let coef = BigRational::new(c, den);
        Some(if d.is_one() {
            Self::from_rational(coef)
        } else {
            QuadSurd {
                a: BigRational::zero(),
                b: coef,
                d,
            }
        })
    }

    /// Exact square root when the value is a non-negative rational.
    pub fn sqrt(&self) -> Option<Self> {
        if self.is_rational() {
            Self::sqrt_rational(&self.a)
        } else {
            None
        }
    }

    pub fn rational_part(&self) -> &BigRational {
        &self.a
    }

    pub fn surd_part(&self) -> &BigRational {
        &self.b
    }

    pub fn radicand(&self) -> &BigInt {
        &self.d
    }

    pub fn is_rational(&self) -> bool {
        self.b.is_zero()
    }

    /// The rational value, if the number is rational.
    pub fn to_rational(&self) -> Option<BigRational> {
        self.is_rational().then(|| self.a.clone())
    }

    /// Whether `self` and `other` live in a common field.
    pub fn compatible(&self, other: &Self) -> bool {
        self.is_rational() || other.is_rational() || self.d == other.d
    }

    fn field(&self, other: &Self) -> BigInt {
        if self.is_rational() {
            other.d.clone()
        } else if other.is_rational() || self.d == other.d {
            self.d.clone()
        } else {
            panic!(
                "arithmetic across different quadratic fields: √{} and √{}",
                self.d, other.d
            )
        }
    }

    fn make(a: BigRational, b: BigRational, d: BigInt) -> Self {
        if b.is_zero() {
            Self::from_rational(a)
        } else {
            QuadSurd { a, b, d }
        }
    }

    /// Galois conjugate `a − b√d`.
    pub fn conjugate(&self) -> Self {
        Self::make(self.a.clone(), -self.b.clone(), self.d.clone())
    }

    /// Field norm `a² − d·b²`.
    pub fn norm(&self) -> BigRational {
        &self.a * &self.a - &self.b * &self.b * BigRational::from_integer(self.d.clone())
    }

    pub fn signum(&self) -> i32 {
        let sa = sign_of(&self.a);
        let sb = sign_of(&self.b);
        if sb == 0 {
            return sa;
        }
        if sa == 0 || sa == sb {
            return sb;
        }
        // Opposite signs: the larger square wins.
        let a2 = &self.a * &self.a;
        let b2d = &self.b * &self.b * BigRational::from_integer(self.d.clone());
        match a2.cmp(&b2d) {
            Ordering::Greater => sa,
            Ordering::Less => sb,
            Ordering::Equal => 0,
        }
    }

    pub fn abs(&self) -> Self {
        if self.signum() < 0 {
            -self.clone()
        } else {
            self.clone()
        }
    }

    pub fn recip(&self) -> Self {
        assert!(!self.is_zero(), "division by zero");
        let n = self.norm();
        Self::make(&self.a / &n, -(&self.b / &n), self.d.clone())
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut r = Self::one();
        for _ in 0..e {
            r = &r * self;
        }
        r
    }

    pub fn to_f64(&self) -> f64 {
        let a = self.a.to_f64().unwrap_or(f64::NAN);
        if self.is_rational() {
            return a;
        }
        let root = self.d.to_f64().unwrap_or(f64::NAN).sqrt();
        let b = self.b.to_f64().unwrap_or(f64::NAN);
        if sign_of(&self.a) * sign_of(&self.b) >= 0 {
            a + b * root
        } else {
            // a + b√d = norm / (a − b√d), free of cancellation.
            self.norm().to_f64().unwrap_or(f64::NAN) / (a - b * root)
        }
    }
}

fn sign_of(q: &BigRational) -> i32 {
    if q.is_positive() {
        1
    } else if q.is_negative() {
        -1
    } else {
        0
    }
}

impl Zero for QuadSurd {
    fn zero() -> Self {
        Self::from_rational(BigRational::zero())
    }
    fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }
}

impl One for QuadSurd {
    fn one() -> Self {
        Self::from_rational(BigRational::one())
    }
}

impl PartialOrd for QuadSurd {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        if !self.compatible(other) {
            return None;
        }
        Some((self - other).signum().cmp(&0))
    }
}

impl From<i64> for QuadSurd {
    fn from(n: i64) -> Self {
        Self::from_integer(n)
    }
}

impl From<BigRational> for QuadSurd {
    fn from(q: BigRational) -> Self {
        Self::from_rational(q)
    }
}

impl fmt::Display for QuadSurd {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_rational() {
            write!(f, "{}", self.a)
        } else if self.a.is_zero() {
            write!(f, "{}*sqrt({})", self.b, self.d)
        } else {
            write!(f, "{} + {}*sqrt({})", self.a, self.b, self.d)
        }
    }
}

impl Neg for QuadSurd {
    type Output = QuadSurd;
    fn neg(self) -> QuadSurd {
        QuadSurd {
            a: -self.a,
            b: -self.b,
            d: self.d,
        }
    }
}

impl Neg for &QuadSurd {
    type Output = QuadSurd;
    fn neg(self) -> QuadSurd {
        -self.clone()
    }
}

impl Add<&QuadSurd> for &QuadSurd {
    type Output = QuadSurd;
    fn add(self, rhs: &QuadSurd) -> QuadSurd {
        let d = self.field(rhs);
        QuadSurd::make(&self.a + &rhs.a, &self.b + &rhs.b, d)
    }
}

impl Sub<&QuadSurd> for &QuadSurd {
    type Output = QuadSurd;
    fn sub(self, rhs: &QuadSurd) -> QuadSurd {
        let d = self.field(rhs);
        QuadSurd::make(&self.a - &rhs.a, &self.b - &rhs.b, d)
    }
}

impl Mul<&QuadSurd> for &QuadSurd {
    type Output = QuadSurd;
    fn mul(self, rhs: &QuadSurd) -> QuadSurd {
        let d = self.field(rhs);
        let dq = BigRational::from_integer(d.clone());
        let a = &self.a * &rhs.a + &self.b * &rhs.b * dq;
        let b = &self.a * &rhs.b + &self.b * &rhs.a;
        QuadSurd::make(a, b, d)
    }
}

impl Div<&QuadSurd> for &QuadSurd {
    type Output = QuadSurd;
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn div(self, rhs: &QuadSurd) -> QuadSurd {
        self * &rhs.recip()
    }
}

macro_rules! owned_ops {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr<QuadSurd> for QuadSurd {
            type Output = QuadSurd;
            fn $m(self, rhs: QuadSurd) -> QuadSurd { (&self).$m(&rhs) }
        }
        impl $tr<&QuadSurd> for QuadSurd {
            type Output = QuadSurd;
            fn $m(self, rhs: &QuadSurd) -> QuadSurd { (&self).$m(rhs) }
        }
        impl $tr<QuadSurd> for &QuadSurd {
            type Output = QuadSurd;
            fn $m(self, rhs: QuadSurd) -> QuadSurd { self.$m(&rhs) }
        }
    )*};
}
owned_ops!(Add add, Sub sub, Mul mul, Div div);
