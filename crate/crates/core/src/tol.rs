//! Default tolerances. Every operation taking a tolerance accepts an override.

/// Relative residual allowed for constructed side lengths.
pub const CONSTRUCTION: f64 = 1e-12;
/// Relative tolerance for congruence of quadrilaterals.
pub const CONGRUENCE: f64 = 1e-9;
/// Relative tolerance used to detect vanishing signed side sums.
pub const SIDE_SUM: f64 = 1e-12;
/// Residual above which a point is considered off an angle curve.
pub const ON_CURVE: f64 = 1e-9;
/// Tolerance for recognising the orbit returning to its start.
pub const FOLD_RETURN: f64 = 1e-8;
/// Distance of a shift ratio to a rational before it is accepted.
pub const SIGMA_RATIONAL: f64 = 1e-9;
/// Largest denominator searched for a rational shift ratio.
pub const MAX_DENOMINATOR: u32 = 64;
/// Threshold on the normalized Hankel determinant.
pub const HANKEL: f64 = 1e-9;
/// Relative tolerance for floating-point closed-form period tests.
pub const CLOSED_FORM: f64 = 1e-10;
/// Angle mismatch accepted when locating a quadrilateral on a parametrization.
pub const LOCATE: f64 = 1e-8;
