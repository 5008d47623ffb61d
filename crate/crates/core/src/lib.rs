//! Exact moment-level computation of the boolean, monotone, orthogonal,
//! s-free and free additive convolutions of compactly supported measures,
//! with partition-sum and operator-model oracles.
//!
//! Most items are generic over [`Scalar`]; the aliases below fix the scalar
//! to exact rationals or `f64`.

pub mod convolve;
pub mod error;
pub mod measure;
pub mod opmodel;
pub mod partitions;
pub mod poly;
pub mod random;
pub mod scalar;
pub mod series;
pub mod verify;

pub use error::{Error, Result};
pub use measure::{JacobiParams, MeasureRep, MomentSequence, TailPolicy};
pub use scalar::Scalar;
pub use series::TailSeries;

/// Arbitrary-precision rational.
pub type Rational = num_rational::BigRational;

pub type ExactSeries = TailSeries<Rational>;
pub type FloatSeries = TailSeries<f64>;
pub type ExactMeasure = MeasureRep<Rational>;
pub type FloatMeasure = MeasureRep<f64>;
pub type ExactJacobi = JacobiParams<Rational>;
pub type FloatJacobi = JacobiParams<f64>;
