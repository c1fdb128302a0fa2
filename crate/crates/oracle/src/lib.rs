//! Brute-force reference implementations for the `intcircle` test suites.
//!
//! Nothing here shares a code path with the structural results it checks:
//! coverings are decided by looping over every residue pair, spectra by
//! searching for centers and checking refutations directly, and angle
//! congruence by walking words in the generators of `GL(2, Z)`.
//! Coordinates are small in every test corpus, so the oracles work in `i64`.

pub mod corpus;

use std::collections::{HashSet, VecDeque};

use intcircle::construct::center_for_radius;
use intcircle::{Certificate, ConstructError, LatticePoint, PointSet, RationalAngle};
use num_integer::Integer;
use num_traits::ToPrimitive;

fn coords(p: &LatticePoint) -> (i64, i64) {
    (p.x.to_i64().expect("oracle coordinates fit in i64"), p.y.to_i64().expect("oracle coordinates fit in i64"))
}

fn small(s: &PointSet) -> Vec<(i64, i64)> {
    s.iter().map(coords).collect()
}

fn gcd_dist(a: (i64, i64), b: (i64, i64)) -> i64 {
    (b.0 - a.0).gcd(&(b.1 - a.1))
}

/// Covering of `T_m` decided by checking every residue pair for a preimage.
pub fn brute_covering(s: &PointSet, m: i64) -> bool {
    assert!(m >= 2);
    let pts = small(s);
    (0..m).all(|i| (0..m).all(|j| pts.iter().any(|p| p.0.mod_floor(&m) == i && p.1.mod_floor(&m) == j)))
}

/// A radius the oracle could neither prove nor refute.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Undecided {
    pub radius: i64,
    pub reason: String,
}

/// How a radius was decided.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Verdict {
    /// Center found by the oracle's own scan.
    ScannedCenter((i64, i64)),
    /// Center produced by the library, re-checked here.
    LibraryCenter((i64, i64)),
    /// Two points whose integer distance `r` does not divide.
    Indivisible((i64, i64), (i64, i64)),
    /// Library refutation, re-checked here.
    CoveringRefutation(u64),
}

impl Verdict {
    pub fn included(&self) -> bool {
        matches!(self, Verdict::ScannedCenter(_) | Verdict::LibraryCenter(_))
    }
}

/// Checks a covering refutation for radius `r` without the library: all
/// points congruent mod `r`, witnesses drawn from `(S − anchor)/r`, and the
/// witnesses hitting all `t²` classes.
fn covering_refutation_holds(pts: &[(i64, i64)], r: i64, cert: &Certificate) -> Option<u64> {
    let Certificate::NoCovering { prime, witnesses } = cert else {
        return None;
    };
    let t = i64::try_from(*prime).ok()?;
    let anchor = pts[0];
    if pts.iter().any(|p| (p.0 - anchor.0) % r != 0 || (p.1 - anchor.1) % r != 0) {
        return None;
    }
    let quotient: Vec<(i64, i64)> = pts.iter().map(|p| ((p.0 - anchor.0) / r, (p.1 - anchor.1) / r)).collect();
    let mut hit = HashSet::new();
    for (_, w) in witnesses {
        let w = coords(w);
        if !quotient.contains(&w) {
            return None;
        }
        hit.insert((w.0.mod_floor(&t), w.1.mod_floor(&t)));
    }
    (t >= 2 && hit.len() as i64 == t * t).then_some(*prime)
}

/// Decides one radius, or reports it undecided.
pub fn brute_radius(s: &PointSet, r: i64) -> Result<Verdict, Undecided> {
    let pts = small(s);
    for (i, &a) in pts.iter().enumerate() {
        for &b in &pts[i + 1..] {
            if gcd_dist(a, b) % r != 0 {
                return Ok(Verdict::Indivisible(a, b));
            }
        }
    }

    let reach = 10 * r + 8;
    let (x0, x1) = (pts.iter().map(|p| p.0).min().unwrap() - reach, pts.iter().map(|p| p.0).max().unwrap() + reach);
    let (y0, y1) = (pts.iter().map(|p| p.1).min().unwrap() - reach, pts.iter().map(|p| p.1).max().unwrap() + reach);
    for x in x0..=x1 {
        for y in y0..=y1 {
            if pts.iter().all(|&p| gcd_dist((x, y), p) == r) {
                return Ok(Verdict::ScannedCenter((x, y)));
            }
        }
    }

    match center_for_radius(s, &r.into()) {
        Ok(circle) => {
            let c = coords(circle.center());
            if pts.iter().all(|&p| gcd_dist(c, p) == r) {
                Ok(Verdict::LibraryCenter(c))
            } else {
                Err(Undecided { radius: r, reason: format!("library center {c:?} fails the distance check") })
            }
        }
        Err(ConstructError::Refuted { certificate, .. }) => covering_refutation_holds(&pts, r, &certificate)
            .map(Verdict::CoveringRefutation)
            .ok_or_else(|| Undecided { radius: r, reason: format!("refutation does not check: {certificate}") }),
        Err(e) => Err(Undecided { radius: r, reason: e.to_string() }),
    }
}

/// Integer spectrum restricted to `r <= rmax`, every verdict proven.
pub fn brute_spectrum(s: &PointSet, rmax: i64) -> Result<Vec<i64>, Undecided> {
    assert!(s.len() >= 2 && rmax >= 1);
    let mut out = Vec::new();
    for r in 1..=rmax {
        if brute_radius(s, r)?.included() {
            out.push(r);
        }
    }
    Ok(out)
}

type Mat = [[i64; 2]; 2];

fn mul(a: &Mat, b: &Mat) -> Mat {
    [
        [a[0][0] * b[0][0] + a[0][1] * b[1][0], a[0][0] * b[0][1] + a[0][1] * b[1][1]],
        [a[1][0] * b[0][0] + a[1][1] * b[1][0], a[1][0] * b[0][1] + a[1][1] * b[1][1]],
    ]
}

fn apply(m: &Mat, v: (i64, i64)) -> (i64, i64) {
    (m[0][0] * v.0 + m[0][1] * v.1, m[1][0] * v.0 + m[1][1] * v.1)
}

fn primitive_ray(v: (i64, i64)) -> (i64, i64) {
    let g = v.0.gcd(&v.1);
    (v.0 / g, v.1 / g)
}

fn angle_rays(a: &RationalAngle) -> ((i64, i64), (i64, i64)) {
    let o = coords(&a.vertex);
    let pa = coords(&a.ray_a);
    let pb = coords(&a.ray_b);
    (primitive_ray((pa.0 - o.0, pa.1 - o.1)), primitive_ray((pb.0 - o.0, pb.1 - o.1)))
}

/// Searches words of length `<= word_bound` in `T, T⁻¹, S, R` (shear,
/// inverse shear, quarter turn, reflection) for a linear map sending the
/// rays of `a1` onto the rays of `a2`, in either order. Translations align
/// the vertices, so only the linear part matters. `false` is advisory.
///
/// Visited matrices are capped at twice the largest ray coordinate plus 2.
/// Between two arctangents any connecting map has entries within that bound,
/// and Euclidean reduction by shears never grows entries, so some word for
/// it stays under the cap.
pub fn brute_angle_congruent(a1: &RationalAngle, a2: &RationalAngle, word_bound: usize) -> bool {
    let (u1, v1) = angle_rays(a1);
    let (u2, v2) = angle_rays(a2);
    let cap = 2 * [u1, v1, u2, v2].iter().map(|v| v.0.abs().max(v.1.abs())).max().unwrap_or(1) + 2;
    let hits = |m: &Mat| {
        let (mu, mv) = (apply(m, u1), apply(m, v1));
        (mu == u2 && mv == v2) || (mu == v2 && mv == u2)
    };
    let generators: [Mat; 4] = [[[1, 1], [0, 1]], [[1, -1], [0, 1]], [[0, -1], [1, 0]], [[1, 0], [0, -1]]];
    let identity: Mat = [[1, 0], [0, 1]];
    let mut seen = HashSet::from([identity]);
    let mut queue = VecDeque::from([(identity, 0usize)]);
    while let Some((m, depth)) = queue.pop_front() {
        if hits(&m) {
            return true;
        }
        if depth == word_bound {
            continue;
        }
        for g in &generators {
            let next = mul(g, &m);
            if next.iter().flatten().all(|e| e.abs() <= cap) && seen.insert(next) {
                queue.push_back((next, depth + 1));
            }
        }
    }
    false
}
