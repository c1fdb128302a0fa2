//! Deterministic pseudo-random inputs shared by the test suites.

use intcircle::tori::is_tori_transparent;
use intcircle::{LatticePoint, LatticeVector, PointSet};
use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Between 2 and `max_points` distinct points in `[lo, hi]²`.
pub fn random_set(rng: &mut impl Rng, max_points: usize, lo: i64, hi: i64) -> PointSet {
    assert!(max_points >= 2 && ((hi - lo + 1) * (hi - lo + 1)) as usize >= max_points);
    let target = rng.gen_range(2..=max_points);
    let mut pts = Vec::with_capacity(target);
    while pts.len() < target {
        let p = (rng.gen_range(lo..=hi), rng.gen_range(lo..=hi));
        if !pts.contains(&p) {
            pts.push(p);
        }
    }
    PointSet::from_coords(&pts)
}

/// `count` tori-transparent sets, drawn by rejection.
pub fn transparent_sets(seed: u64, count: usize, max_points: usize, lo: i64, hi: i64) -> Vec<PointSet> {
    let mut rng = rng(seed);
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        let s = random_set(&mut rng, max_points, lo, hi);
        if is_tori_transparent(&s) {
            out.push(s);
        }
    }
    out
}

pub type Mat = [[i64; 2]; 2];

/// A random element of `GL(2, Z)` with entries bounded by `cap`, built as a
/// random word in the elementary shears; `orientation_preserving` restricts
/// to `SL(2, Z)`.
pub fn random_unimodular(rng: &mut impl Rng, cap: i64, orientation_preserving: bool) -> Mat {
    let mut m: Mat = [[1, 0], [0, 1]];
    for _ in 0..rng.gen_range(1..=16) {
        let k = rng.gen_range(-3..=3);
        let next = if rng.gen_bool(0.5) {
            [[m[0][0] + k * m[1][0], m[0][1] + k * m[1][1]], m[1]]
        } else {
            [m[0], [m[1][0] + k * m[0][0], m[1][1] + k * m[0][1]]]
        };
        if next.iter().flatten().all(|e| e.abs() <= cap) {
            m = next;
        }
    }
    if !orientation_preserving && rng.gen_bool(0.5) {
        m = [m[1], m[0]];
    }
    if rng.gen_bool(0.5) {
        m = [[-m[0][0], -m[0][1]], [-m[1][0], -m[1][1]]];
    }
    debug_assert_eq!((m[0][0] * m[1][1] - m[0][1] * m[1][0]).abs(), 1);
    m
}

pub fn big_matrix(m: &Mat) -> [[BigInt; 2]; 2] {
    m.map(|row| row.map(BigInt::from))
}

/// A random map `p ↦ M·p + shift` applied to `s`.
pub fn random_affine_image(rng: &mut impl Rng, s: &PointSet, cap: i64) -> PointSet {
    let m = random_unimodular(rng, cap, false);
    let shift = LatticeVector::new(rng.gen_range(-100..=100), rng.gen_range(-100..=100));
    s.affine_image(&big_matrix(&m), &shift)
}

pub fn point(x: i64, y: i64) -> LatticePoint {
    LatticePoint::new(x, y)
}

/// Moduli ranges of the CRT construction for a set in `[1, N]²` and a
/// center `(alpha, beta)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RangeCase {
    UpToN,
    PrimeUpToBeta,
    CompositeUpToBeta,
    BeyondBeta,
}

/// Samples moduli from each range case (all of `[2, N]`, up to `per_case`
/// from the others, `m <= 2·beta`) and checks that the center's residue is
/// missed by the translated set. Returns the number of moduli checked per
/// case, or the first failing modulus.
pub fn check_range_cases(
    rng: &mut impl Rng,
    trace: &intcircle::construct::CrtTrace,
    s: &PointSet,
    per_case: usize,
) -> Result<[usize; 4], (RangeCase, u64)> {
    use num_integer::Integer;
    use num_traits::ToPrimitive;

    let moved = s.translate(&trace.shift);
    let center = trace.translated_center();
    let beta = trace.beta.to_u64().expect("beta fits in u64");
    let n = trace.n;
    let is_prime = |m: u64| m >= 2 && (2..).take_while(|d| d * d <= m).all(|d| !m.is_multiple_of(d));
    let misses = |m: u64| {
        let mb = BigInt::from(m);
        let c = (center.x.mod_floor(&mb), center.y.mod_floor(&mb));
        moved.iter().all(|p| (p.x.mod_floor(&mb), p.y.mod_floor(&mb)) != c)
    };

    let mut counts = [0usize; 4];
    let check = |case: RangeCase, m: u64, counts: &mut [usize; 4]| {
        if misses(m) {
            counts[case as usize] += 1;
            Ok(())
        } else {
            Err((case, m))
        }
    };
    for m in 2..=n {
        check(RangeCase::UpToN, m, &mut counts)?;
    }
    let mid: Vec<u64> = (n + 1..=beta).collect();
    let primes: Vec<u64> = mid.iter().copied().filter(|&m| is_prime(m)).collect();
    let composites: Vec<u64> = mid.iter().copied().filter(|&m| !is_prime(m)).collect();
    for (case, pool) in [(RangeCase::PrimeUpToBeta, &primes), (RangeCase::CompositeUpToBeta, &composites)] {
        for _ in 0..per_case.min(pool.len()) {
            check(case, pool[rng.gen_range(0..pool.len())], &mut counts)?;
        }
    }
    for _ in 0..per_case {
        check(RangeCase::BeyondBeta, rng.gen_range(beta + 1..=2 * beta), &mut counts)?;
    }
    Ok(counts)
}
