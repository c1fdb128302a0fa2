//! Lattice lines and their intersections with integer circles.

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive, Zero};

use crate::arith;
use crate::error::GeometryError;
use crate::lattice::{IntegerCircle, LatticePoint, LatticeVector};

/// Upper bound on `|det|` for which periodic intersections are enumerated.
pub const MAX_ENUMERATED_PERIOD: u64 = 1 << 20;

/// The lattice points `base + t·dir`, `t ∈ Z`, for a primitive `dir`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LatticeLine {
    base: LatticePoint,
    dir: LatticeVector,
}

impl LatticeLine {
    pub fn new(base: LatticePoint, dir: LatticeVector) -> Result<Self, GeometryError> {
        if !dir.is_primitive() {
            return Err(GeometryError::NonPrimitiveDirection(dir.to_string()));
        }
        Ok(Self { base, dir })
    }

    pub fn base(&self) -> &LatticePoint {
        &self.base
    }

    pub fn dir(&self) -> &LatticeVector {
        &self.dir
    }

    pub fn point_at(&self, t: &BigInt) -> LatticePoint {
        self.base.translate(&self.dir.scale(t))
    }

    /// Integer distance from `p` to the line: the index `|det(base − p, dir)|`.
    pub fn distance_to(&self, p: &LatticePoint) -> BigInt {
        (&self.base - p).det(&self.dir).abs()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Classification {
    Empty,
    /// The two intersection points of a radial line.
    TwoPoints(LatticePoint, LatticePoint),
    /// `base + t·dir` lies on the circle exactly when `t mod period` is one
    /// of `residues` (ascending, in `[0, period)`).
    Periodic {
        period: u64,
        residues: Vec<u64>,
    },
}

/// Classifies `line ∩ circle`.
///
/// With `D = det(base − center, dir)`, every distance from the center to a
/// point of the line divides `D` and depends on `t` only modulo `|D|`, so one
/// sweep of `[0, |D|)` decides the intersection. The period reported is the
/// smallest divisor of `|D|` under which the residue set is invariant.
pub fn line_circle_classify(line: &LatticeLine, circle: &IntegerCircle) -> Result<Classification, GeometryError> {
    let offset = &line.base - circle.center();
    let det = offset.det(&line.dir);
    let r = circle.radius();
    if det.is_zero() {
        let p1 = circle.center().translate(&line.dir.scale(r));
        let p2 = circle.center().translate(&(-&line.dir).scale(r));
        return Ok(Classification::TwoPoints(p1, p2));
    }
    if !(&det % r).is_zero() {
        return Ok(Classification::Empty);
    }
    let full = det.abs();
    let n = full
        .to_u64()
        .filter(|&n| n <= MAX_ENUMERATED_PERIOD)
        .ok_or_else(|| GeometryError::PeriodTooLarge(full.clone()))?;

    let hits: Vec<u64> = (0..n)
        .filter(|&t| {
            let w = &offset + &line.dir.scale(&BigInt::from(t));
            &arith::gcd(&w.dx, &w.dy) == r
        })
        .collect();
    debug_assert!(!hits.is_empty(), "r | D always yields an intersection");

    let period = minimal_period(n, &hits);
    let residues = hits.into_iter().filter(|&t| t < period).collect();
    Ok(Classification::Periodic { period, residues })
}

fn minimal_period(n: u64, hits: &[u64]) -> u64 {
    let mut divisors: Vec<u64> = (1..=n).filter(|d| n.is_multiple_of(*d)).collect();
    divisors.sort_unstable();
    for d in divisors {
        let base: Vec<u64> = hits.iter().copied().filter(|&t| t < d).collect();
        let expected = base.len() as u64 * (n / d);
        if expected == hits.len() as u64 && hits.iter().all(|t| base.binary_search(&(t % d)).is_ok()) {
            return d;
        }
    }
    n
}

/// A line is tangent when its integer distance to the center equals the
/// radius.
pub fn is_tangent(line: &LatticeLine, circle: &IntegerCircle) -> bool {
    &line.distance_to(circle.center()) == circle.radius()
}
