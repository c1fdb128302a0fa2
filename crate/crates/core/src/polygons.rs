//! Shape-specific criteria for segments, triangles, quadrangles and
//! general polygons, plus the Farey starburst.
//!
//! Polygons are handled through their vertex sets; convexity and
//! self-intersection play no role.

use std::cmp::Ordering;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::Zero;

use crate::arith;
use crate::error::PolygonError;
use crate::lattice::{int_area, int_distance, LatticePoint};
use crate::point_set::PointSet;
use crate::spectra::{self, RationalSpectrum};
use crate::tori;
use crate::trig::{isin, RationalAngle};

/// A polygon given by its distinct vertices in order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Polygon {
    vertices: PointSet,
}

impl Polygon {
    pub fn new(vertices: impl IntoIterator<Item = LatticePoint>) -> Result<Self, PolygonError> {
        let vertices = PointSet::new(vertices);
        if vertices.len() < 2 {
            return Err(PolygonError::Arity { expected: "at least 2", got: vertices.len() });
        }
        Ok(Self { vertices })
    }

    pub fn from_coords<T: Into<BigInt> + Copy>(coords: &[(T, T)]) -> Result<Self, PolygonError> {
        Self::new(coords.iter().map(|&(x, y)| LatticePoint::new(x, y)))
    }

    pub fn vertices(&self) -> &PointSet {
        &self.vertices
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }
}

/// Segments and triangles always admit a unit circle: the integer spectrum
/// is the set of divisors of `g` and the rational spectrum is `{ g/c }`.
pub fn segment_triangle_spectrum(p: &Polygon) -> Result<(Vec<BigInt>, RationalSpectrum), PolygonError> {
    if !(2..=3).contains(&p.len()) {
        return Err(PolygonError::Arity { expected: "2 or 3", got: p.len() });
    }
    let rational = spectra::rational_spectrum(&p.vertices)?;
    debug_assert!(rational.tau() == &BigInt::from(1));
    Ok((arith::divisors(rational.g()), rational))
}

/// A quadrangle has an integer circumscribed circle iff its vertices miss
/// some class of `T_2`, equivalently iff some pairwise integer distance is
/// even.
pub fn quadrangle_has_circle(q: &Polygon) -> Result<bool, PolygonError> {
    if q.len() != 4 {
        return Err(PolygonError::Arity { expected: "4", got: q.len() });
    }
    let by_torus = !tori::is_covering(&q.vertices, 2).expect("modulus 2");
    let vs = q.vertices.points();
    let by_parity = (0..4).any(|i| (i + 1..4).any(|j| int_distance(&vs[i], &vs[j]).is_even()));
    assert_eq!(by_torus, by_parity, "T_2 and parity criteria disagree on {}", q.vertices);
    Ok(by_torus)
}

/// Existence of an integer circumscribed circle for an `n`-gon: no covering
/// of `T_t` for `t <= √n`. For `n <= 8` only `T_2` can be covered.
pub fn ngon_has_circle(p: &Polygon) -> bool {
    if p.len() <= 8 {
        let answer = !tori::is_covering(&p.vertices, 2).expect("modulus 2");
        debug_assert_eq!(answer, tori::is_tori_transparent(&p.vertices));
        answer
    } else {
        tori::is_tori_transparent(&p.vertices)
    }
}

/// `(il(AB)/isin∠C, il(BC)/isin∠A, il(CA)/isin∠B)` for the triangle `ABC`.
pub fn sine_rule_ratios(t: &Polygon) -> Result<[BigRational; 3], PolygonError> {
    if t.len() != 3 {
        return Err(PolygonError::Arity { expected: "3", got: t.len() });
    }
    let [a, b, c] = [0, 1, 2].map(|i| t.vertices.points()[i].clone());
    if int_area(&a, &b, &c).is_zero() {
        return Err(PolygonError::Collinear);
    }
    let ratio = |side: (&LatticePoint, &LatticePoint), vertex: &LatticePoint| {
        let angle = RationalAngle::new(vertex.clone(), side.0.clone(), side.1.clone()).expect("distinct vertices");
        let sine = isin(&angle).expect("non-degenerate");
        BigRational::new(int_distance(side.0, side.1), sine)
    };
    Ok([ratio((&a, &b), &c), ratio((&b, &c), &a), ratio((&c, &a), &b)])
}

/// 0 for the upper half-plane with the positive x-axis, 1 for the rest.
fn half(x: i64, y: i64) -> u8 {
    if y > 0 || (y == 0 && x > 0) {
        0
    } else {
        1
    }
}

fn by_argument(a: &(i64, i64), b: &(i64, i64)) -> Ordering {
    half(a.0, a.1).cmp(&half(b.0, b.1)).then_with(|| {
        let cross = a.0 as i128 * b.1 as i128 - a.1 as i128 * b.0 as i128;
        0.cmp(&cross)
    })
}

/// Points of the unit integer circle about the origin with both coordinates
/// in `[-bound, bound]`, counterclockwise by argument starting at `(1, 0)`.
pub fn farey_starburst(bound: u64) -> Result<Vec<LatticePoint>, PolygonError> {
    if bound == 0 {
        return Err(PolygonError::ZeroBound);
    }
    let b = i64::try_from(bound).expect("bound fits in i64");
    let mut pts: Vec<(i64, i64)> =
        (-b..=b).flat_map(|x| (-b..=b).map(move |y| (x, y))).filter(|&(x, y)| x.gcd(&y) == 1).collect();
    pts.sort_by(by_argument);
    Ok(pts.into_iter().map(|(x, y)| LatticePoint::new(x, y)).collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn poly(c: &[(i64, i64)]) -> Polygon {
        Polygon::from_coords(c).unwrap()
    }

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&n| BigInt::from(n)).collect()
    }

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn segment_and_triangle_spectra() {
        let (z, r) = segment_triangle_spectrum(&poly(&[(0, 0), (6, 0)])).unwrap();
        assert_eq!(z, ints(&[1, 2, 3, 6]));
        assert_eq!((r.g(), r.tau()), (&BigInt::from(6), &BigInt::from(1)));
        let (z, r) = segment_triangle_spectrum(&poly(&[(0, 0), (1, 0), (0, 1)])).unwrap();
        assert_eq!(z, ints(&[1]));
        assert_eq!(r.g(), &BigInt::from(1));
        let (z, r) = segment_triangle_spectrum(&poly(&[(0, 0), (2, 0), (0, 2)])).unwrap();
        assert_eq!(z, ints(&[1, 2]));
        assert_eq!(r.g(), &BigInt::from(2));
        assert!(segment_triangle_spectrum(&poly(&[(0, 0), (1, 0), (0, 1), (1, 1)])).is_err());
    }

    #[test]
    fn quadrangles() {
        assert!(quadrangle_has_circle(&poly(&[(0, 0), (1, 0), (0, 1), (2, 2)])).unwrap());
        assert!(!quadrangle_has_circle(&poly(&[(0, 0), (1, 0), (1, 1), (0, 1)])).unwrap());
        assert!(quadrangle_has_circle(&poly(&[(-1, 0), (-1, 1), (0, 1), (1, 0)])).unwrap());
        assert!(quadrangle_has_circle(&poly(&[(0, 0), (1, 0), (0, 1)])).is_err());
    }

    #[test]
    fn ngons() {
        // pentagon containing all four classes mod 2
        assert!(!ngon_has_circle(&poly(&[(0, 0), (1, 0), (2, 1), (1, 1), (0, 1)])));
        assert!(ngon_has_circle(&poly(&[(0, 0), (1, 0), (2, 1), (0, 1), (2, 2)])));
        let grid: Vec<(i64, i64)> = (1..=3).flat_map(|x| (1..=3).map(move |y| (x, y))).collect();
        assert!(!ngon_has_circle(&poly(&grid)));
    }

    #[test]
    fn sine_rule() {
        assert_eq!(sine_rule_ratios(&poly(&[(0, 0), (1, 0), (0, 1)])).unwrap(), [q(1, 1), q(1, 1), q(1, 1)]);
        assert_eq!(sine_rule_ratios(&poly(&[(0, 0), (1, 2), (2, 1)])).unwrap(), [q(1, 3), q(1, 3), q(1, 3)]);
        // il(AB)·il(BC)·il(CA) / is(ABC) = 2·2·2 / 4
        assert_eq!(sine_rule_ratios(&poly(&[(0, 0), (2, 0), (0, 2)])).unwrap(), [q(2, 1), q(2, 1), q(2, 1)]);
        assert!(matches!(sine_rule_ratios(&poly(&[(0, 0), (1, 1), (3, 3)])), Err(PolygonError::Collinear)));
    }

    #[test]
    fn starburst_bound_one() {
        let expected = [(1, 0), (1, 1), (0, 1), (-1, 1), (-1, 0), (-1, -1), (0, -1), (1, -1)];
        let got = farey_starburst(1).unwrap();
        assert_eq!(got, expected.iter().map(|&(x, y)| LatticePoint::new(x, y)).collect::<Vec<_>>());
        assert!(farey_starburst(0).is_err());
    }

    #[test]
    fn starburst_counts() {
        // 8·Σ φ(k) over k <= bound
        let totient = |k: i64| (1..=k).filter(|j| j.gcd(&k) == 1).count();
        for bound in 1..=8 {
            let expected: usize = 8 * (1..=bound).map(totient).sum::<usize>();
            assert_eq!(farey_starburst(bound as u64).unwrap().len(), expected);
        }
        assert_eq!(farey_starburst(2).unwrap().len(), 16);
    }
}
