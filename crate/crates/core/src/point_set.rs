use std::collections::HashSet;
use std::fmt;

use num_bigint::BigInt;

use crate::lattice::{LatticePoint, LatticeVector};

/// A finite set of distinct lattice points kept in first-occurrence order.
///
/// The first point is the anchor: quotients `S / k` are represented with the
/// anchor moved to the origin.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct PointSet {
    points: Vec<LatticePoint>,
}

impl PointSet {
    /// Builds a set, dropping repeated points after their first occurrence.
    pub fn new(points: impl IntoIterator<Item = LatticePoint>) -> Self {
        let mut seen = HashSet::new();
        let points = points.into_iter().filter(|p| seen.insert(p.clone())).collect();
        Self { points }
    }

    pub fn from_coords<T: Into<BigInt> + Copy>(coords: &[(T, T)]) -> Self {
        Self::new(coords.iter().map(|&(x, y)| LatticePoint::new(x, y)))
    }

    pub fn points(&self) -> &[LatticePoint] {
        &self.points
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn anchor(&self) -> Option<&LatticePoint> {
        self.points.first()
    }

    pub fn contains(&self, p: &LatticePoint) -> bool {
        self.points.contains(p)
    }

    pub fn iter(&self) -> std::slice::Iter<'_, LatticePoint> {
        self.points.iter()
    }

    pub fn translate(&self, v: &LatticeVector) -> PointSet {
        PointSet { points: self.points.iter().map(|p| p.translate(v)).collect() }
    }

    /// `k·S`, scaling about the origin.
    pub fn scale(&self, k: &BigInt) -> PointSet {
        PointSet::new(self.points.iter().map(|p| LatticePoint::new(&p.x * k, &p.y * k)))
    }

    /// Image under `p ↦ M·p + shift`.
    pub fn affine_image(&self, m: &[[BigInt; 2]; 2], shift: &LatticeVector) -> PointSet {
        PointSet::new(self.points.iter().map(|p| p.affine_image(m, shift)))
    }

    /// Componentwise minimum and maximum, `None` for the empty set.
    pub fn bounding_box(&self) -> Option<(LatticePoint, LatticePoint)> {
        let first = self.points.first()?;
        let mut lo = first.clone();
        let mut hi = first.clone();
        for p in &self.points[1..] {
            lo.x = lo.x.min(p.x.clone());
            lo.y = lo.y.min(p.y.clone());
            hi.x = hi.x.max(p.x.clone());
            hi.y = hi.y.max(p.y.clone());
        }
        Some((lo, hi))
    }
}

impl<'a> IntoIterator for &'a PointSet {
    type Item = &'a LatticePoint;
    type IntoIter = std::slice::Iter<'a, LatticePoint>;
    fn into_iter(self) -> Self::IntoIter {
        self.points.iter()
    }
}

impl FromIterator<LatticePoint> for PointSet {
    fn from_iter<I: IntoIterator<Item = LatticePoint>>(iter: I) -> Self {
        PointSet::new(iter)
    }
}

impl fmt::Display for PointSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, p) in self.points.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, "}}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn dedup_keeps_first_occurrence_order() {
        let s = PointSet::from_coords(&[(2, 2), (0, 0), (2, 2), (1, 0), (0, 0)]);
        assert_eq!(s.points(), &[LatticePoint::new(2, 2), LatticePoint::new(0, 0), LatticePoint::new(1, 0)]);
        assert_eq!(s.anchor(), Some(&LatticePoint::new(2, 2)));
    }

    #[test]
    fn bounding_box() {
        let s = PointSet::from_coords(&[(2, -1), (0, 5), (-3, 1)]);
        assert_eq!(s.bounding_box(), Some((LatticePoint::new(-3, -1), LatticePoint::new(2, 5))));
        assert_eq!(PointSet::default().bounding_box(), None);
    }
}
