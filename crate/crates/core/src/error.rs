use num_bigint::BigInt;
use thiserror::Error;

use crate::lattice::LatticePoint;
use crate::spectra::Certificate;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GeometryError {
    #[error("degenerate vector")]
    DegenerateVector,
    #[error("degenerate angle: rays are collinear")]
    DegenerateAngle,
    #[error("angle ray coincides with its vertex")]
    RayAtVertex,
    #[error("line direction {0} is not a primitive nonzero vector")]
    NonPrimitiveDirection(String),
    #[error("radius must be positive, got {0}")]
    NonPositiveRadius(BigInt),
    #[error("line period {0} exceeds the enumeration limit")]
    PeriodTooLarge(BigInt),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TorusError {
    #[error("torus modulus must be at least 2, got {0}")]
    BadModulus(BigInt),
    #[error("operation needs at least two points, got {0}")]
    TooFewPoints(usize),
    #[error("divisor must be positive, got {0}")]
    NonPositiveDivisor(BigInt),
    #[error("set is not shift-divisible by {k}: {} and {} differ mod {k}", .pair.0, .pair.1)]
    NotShiftDivisible { k: BigInt, pair: Box<(LatticePoint, LatticePoint)> },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SpectrumError {
    #[error("spectrum unbounded or undefined for a set of {0} point(s)")]
    TooFewPoints(usize),
    #[error("radius must be positive, got {0}")]
    NonPositiveRadius(BigInt),
    #[error("primorial argument must be at least 1, got {0}")]
    BadPrimorialArgument(BigInt),
    #[error("{0} is not in the integer spectrum")]
    NotInSpectrum(BigInt),
    #[error(transparent)]
    Torus(#[from] TorusError),
    #[error(transparent)]
    Construct(#[from] ConstructError),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ConstructError {
    #[error("set covers the torus T_{prime}; no unit circumscribed circle exists")]
    Covering { prime: u64 },
    #[error("CRT trace too large: lcm(1..{n}) exceeds the configured limit {limit}")]
    TraceTooLarge { n: u64, limit: u64 },
    #[error("no circle of radius {radius}")]
    Refuted { radius: BigInt, certificate: Box<Certificate> },
    #[error("unit center search and CRT construction both exhausted their limits")]
    Exhausted,
    #[error("point set is empty")]
    EmptySet,
    #[error("radius must be positive, got {0}")]
    NonPositiveRadius(BigInt),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PolygonError {
    #[error("expected {expected} vertices, got {got}")]
    Arity { expected: &'static str, got: usize },
    #[error("triangle is degenerate (collinear vertices)")]
    Collinear,
    #[error("starburst bound must be positive")]
    ZeroBound,
    #[error(transparent)]
    Spectrum(#[from] SpectrumError),
}
