//! Lattice points, vectors and their integer invariants.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::arith;
use crate::error::GeometryError;

/// A point of `Z²` with unbounded coordinates.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LatticePoint {
    pub x: BigInt,
    pub y: BigInt,
}

/// A vector between two lattice points.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LatticeVector {
    pub dx: BigInt,
    pub dy: BigInt,
}

impl LatticePoint {
    pub fn new(x: impl Into<BigInt>, y: impl Into<BigInt>) -> Self {
        Self { x: x.into(), y: y.into() }
    }

    pub fn origin() -> Self {
        Self::new(0, 0)
    }

    /// Position vector `self - origin`.
    pub fn to_vector(&self) -> LatticeVector {
        LatticeVector { dx: self.x.clone(), dy: self.y.clone() }
    }

    pub fn translate(&self, v: &LatticeVector) -> LatticePoint {
        LatticePoint { x: &self.x + &v.dx, y: &self.y + &v.dy }
    }

    /// Image under `p ↦ M·p + b` with `M = [[a, b], [c, d]]` row-major.
    pub fn affine_image(&self, m: &[[BigInt; 2]; 2], shift: &LatticeVector) -> LatticePoint {
        LatticePoint {
            x: &m[0][0] * &self.x + &m[0][1] * &self.y + &shift.dx,
            y: &m[1][0] * &self.x + &m[1][1] * &self.y + &shift.dy,
        }
    }
}

impl fmt::Display for LatticePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.x, self.y)
    }
}

impl LatticeVector {
    pub fn new(dx: impl Into<BigInt>, dy: impl Into<BigInt>) -> Self {
        Self { dx: dx.into(), dy: dy.into() }
    }

    pub fn is_zero(&self) -> bool {
        self.dx.is_zero() && self.dy.is_zero()
    }

    /// `det(self, other) = dx·other.dy − dy·other.dx`.
    pub fn det(&self, other: &LatticeVector) -> BigInt {
        &self.dx * &other.dy - &self.dy * &other.dx
    }

    /// True when the coordinates are coprime (in particular nonzero).
    pub fn is_primitive(&self) -> bool {
        arith::gcd(&self.dx, &self.dy).is_one()
    }

    /// The primitive vector along `self`, or an error for the zero vector.
    pub fn primitive(&self) -> Result<LatticeVector, GeometryError> {
        let len = int_length(self)?;
        Ok(LatticeVector { dx: &self.dx / &len, dy: &self.dy / &len })
    }

    pub fn scale(&self, k: &BigInt) -> LatticeVector {
        LatticeVector { dx: &self.dx * k, dy: &self.dy * k }
    }
}

impl fmt::Display for LatticeVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "<{}, {}>", self.dx, self.dy)
    }
}

impl Sub for &LatticePoint {
    type Output = LatticeVector;
    fn sub(self, rhs: &LatticePoint) -> LatticeVector {
        LatticeVector { dx: &self.x - &rhs.x, dy: &self.y - &rhs.y }
    }
}

impl Add<&LatticeVector> for &LatticePoint {
    type Output = LatticePoint;
    fn add(self, rhs: &LatticeVector) -> LatticePoint {
        self.translate(rhs)
    }
}

impl Add for &LatticeVector {
    type Output = LatticeVector;
    fn add(self, rhs: &LatticeVector) -> LatticeVector {
        LatticeVector { dx: &self.dx + &rhs.dx, dy: &self.dy + &rhs.dy }
    }
}

impl Neg for &LatticeVector {
    type Output = LatticeVector;
    fn neg(self) -> LatticeVector {
        LatticeVector { dx: -&self.dx, dy: -&self.dy }
    }
}

impl Mul<&BigInt> for &LatticeVector {
    type Output = LatticeVector;
    fn mul(self, k: &BigInt) -> LatticeVector {
        self.scale(k)
    }
}

/// Integer length: number of lattice points on the vector minus one, i.e.
/// `gcd(|dx|, |dy|)`.
pub fn int_length(v: &LatticeVector) -> Result<BigInt, GeometryError> {
    if v.is_zero() {
        return Err(GeometryError::DegenerateVector);
    }
    Ok(arith::gcd(&v.dx, &v.dy))
}

/// Integer distance; zero for coincident points.
pub fn int_distance(a: &LatticePoint, b: &LatticePoint) -> BigInt {
    let v = b - a;
    arith::gcd(&v.dx, &v.dy)
}

/// Integer area of the triangle `abc`: `|det(b − a, c − a)|`, the index of
/// the sublattice spanned by the two edges.
pub fn int_area(a: &LatticePoint, b: &LatticePoint, c: &LatticePoint) -> BigInt {
    (b - a).det(&(c - a)).abs()
}

/// Circle of all lattice points at integer distance `radius` from `center`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct IntegerCircle {
    center: LatticePoint,
    radius: BigInt,
}

impl IntegerCircle {
    pub fn new(center: LatticePoint, radius: impl Into<BigInt>) -> Result<Self, GeometryError> {
        let radius = radius.into();
        if !radius.is_positive() {
            return Err(GeometryError::NonPositiveRadius(radius));
        }
        Ok(Self { center, radius })
    }

    pub fn center(&self) -> &LatticePoint {
        &self.center
    }

    pub fn radius(&self) -> &BigInt {
        &self.radius
    }

    pub fn contains(&self, p: &LatticePoint) -> bool {
        circle_contains(self, p)
    }
}

impl fmt::Display for IntegerCircle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "circle(center {}, radius {})", self.center, self.radius)
    }
}

pub fn circle_contains(c: &IntegerCircle, p: &LatticePoint) -> bool {
    int_distance(&c.center, p) == c.radius
}
