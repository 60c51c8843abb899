//! Configuration spaces of quadrilaterals with fixed side lengths.
//!
//! Four-bar linkages in the Euclidean plane, on the unit sphere and on the
//! hyperboloid model of the hyperbolic plane: angle and diagonal curves,
//! Jacobi-elliptic parametrizations, folding dynamics, periodicity tests,
//! conjugate quadrilaterals and Ivory's theorem.

pub mod conjugacy;
pub mod curves;
pub mod elliptic;
pub mod error;
pub mod fold;
pub mod ivory;
pub mod param;
pub mod periodicity;
pub mod quad;
pub mod sides;
pub mod space;
pub mod surd;
pub mod tol;

pub use error::{Error, Result};
pub use fold::{FoldPair, PeriodMethod, PeriodReport, Vertex};
pub use quad::{AngleData, Branch, DiagonalPair, ExtReal, Quadrilateral};
pub use sides::{Classification, ConicVariant, DeltoidPair, Geometry, Kind, Lattice, SideLengths};
pub use surd::QuadSurd;
