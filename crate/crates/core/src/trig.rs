//! Integer trigonometry of rational angles.
//!
//! Every angle not contained in a line is congruent to the angle between
//! `(1, 0)` and `(p, q)` with `gcd(p, q) = 1` and `1 <= p <= q`. The integer
//! sine is `q`, the integer cosine is `p` and the integer tangent `q / p`.
//!
//! Congruence is taken under the full group of lattice-preserving affine
//! maps, with the angle's two rays unordered. Exchanging the rays sends
//! `p` to its inverse modulo `q`, so both values name the same angle and the
//! canonical representative keeps the smaller one.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::arith;
use crate::error::GeometryError;
use crate::lattice::{int_area, int_length, LatticePoint, LatticeVector};

/// The angle `∠AOB` with vertex `O`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RationalAngle {
    pub vertex: LatticePoint,
    pub ray_a: LatticePoint,
    pub ray_b: LatticePoint,
}

impl RationalAngle {
    pub fn new(vertex: LatticePoint, ray_a: LatticePoint, ray_b: LatticePoint) -> Result<Self, GeometryError> {
        if ray_a == vertex || ray_b == vertex {
            return Err(GeometryError::RayAtVertex);
        }
        Ok(Self { vertex, ray_a, ray_b })
    }

    /// The angle between `(1, 0)` and `(p, q)` at the origin.
    pub fn arctangent(p: impl Into<BigInt>, q: impl Into<BigInt>) -> Self {
        Self { vertex: LatticePoint::origin(), ray_a: LatticePoint::new(1, 0), ray_b: LatticePoint::new(p, q) }
    }

    fn rays(&self) -> (LatticeVector, LatticeVector) {
        (&self.ray_a - &self.vertex, &self.ray_b - &self.vertex)
    }
}

/// Canonical integer arctangent `(p, q)`: `gcd(p, q) = 1`, `1 <= p <= q`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CanonicalAngle {
    p: BigInt,
    q: BigInt,
}

impl CanonicalAngle {
    pub fn p(&self) -> &BigInt {
        &self.p
    }

    pub fn q(&self) -> &BigInt {
        &self.q
    }

    pub fn isin(&self) -> &BigInt {
        &self.q
    }

    pub fn icos(&self) -> &BigInt {
        &self.p
    }

    pub fn itan(&self) -> BigRational {
        BigRational::new(self.q.clone(), self.p.clone())
    }
}

/// Integer sine: `is(OAB) / (il(OA)·il(OB))`, zero for an angle in a line.
pub fn isin(angle: &RationalAngle) -> Result<BigInt, GeometryError> {
    let (a, b) = angle.rays();
    let la = int_length(&a).map_err(|_| GeometryError::RayAtVertex)?;
    let lb = int_length(&b).map_err(|_| GeometryError::RayAtVertex)?;
    let area = int_area(&angle.vertex, &angle.ray_a, &angle.ray_b);
    let (quot, rem) = area.div_rem(&(la * lb));
    assert!(rem.is_zero(), "integer area is always divisible by the ray lengths");
    Ok(quot)
}

/// Reduces an angle to its canonical integer arctangent.
pub fn canonical_angle(angle: &RationalAngle) -> Result<CanonicalAngle, GeometryError> {
    let (a, b) = angle.rays();
    let a = a.primitive().map_err(|_| GeometryError::RayAtVertex)?;
    let b = b.primitive().map_err(|_| GeometryError::RayAtVertex)?;

    // M = [[s, t], [-a.dy, a.dx]] has det 1 and sends a to (1, 0).
    let e = a.dx.extended_gcd(&a.dy);
    let (s, t) = if e.gcd.is_negative() { (-e.x, -e.y) } else { (e.x, e.y) };
    let x = &s * &b.dx + &t * &b.dy;
    let y = a.det(&b);
    if y.is_zero() {
        return Err(GeometryError::DegenerateAngle);
    }
    // reflection across the first ray fixes (1, 0) and flips the sign of y
    let q = y.abs();
    let p = shear_into_window(&x, &q);
    let p_swapped = if q.is_one() { p.clone() } else { arith::mod_inverse(&p, &q).expect("p is coprime to q") };
    let p = p.min(p_swapped);
    Ok(CanonicalAngle { p, q })
}

/// Representative of `x mod q` in `[1, q]`.
fn shear_into_window(x: &BigInt, q: &BigInt) -> BigInt {
    (x - BigInt::one()).mod_floor(q) + BigInt::one()
}
