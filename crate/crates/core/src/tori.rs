//! Projections to the residue tori `T_m = Z² / mZ²`, covering tests and
//! shift-divisibility of finite point sets.
//!
//! A set covers `T_m` only if it covers `T_p` for every prime `p | m`, and a
//! covering needs at least `p²` points. Tori-transparency of a finite set is
//! therefore decided by the finitely many primes `p <= √|S|`.

use std::collections::{BTreeMap, HashSet};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::arith;
use crate::error::TorusError;
use crate::lattice::LatticePoint;
use crate::point_set::PointSet;

/// Class of a point in `T_m`, coordinates in `[0, m)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TorusResidue {
    pub m: BigInt,
    pub rx: BigInt,
    pub ry: BigInt,
}

impl std::fmt::Display for TorusResidue {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "[{}, {}]_{}", self.rx, self.ry, self.m)
    }
}

/// `S = anchor + scale·reduced` with `reduced` primitive and anchored at the
/// origin.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PrimitiveDecomposition {
    pub anchor: LatticePoint,
    pub scale: BigInt,
    pub reduced: PointSet,
}

impl PrimitiveDecomposition {
    pub fn reconstruct(&self) -> PointSet {
        self.reduced
            .iter()
            .map(|p| LatticePoint::new(&self.anchor.x + &self.scale * &p.x, &self.anchor.y + &self.scale * &p.y))
            .collect()
    }
}

pub fn project(p: &LatticePoint, m: &BigInt) -> Result<TorusResidue, TorusError> {
    if *m < BigInt::from(2) {
        return Err(TorusError::BadModulus(m.clone()));
    }
    Ok(TorusResidue { m: m.clone(), rx: p.x.mod_floor(m), ry: p.y.mod_floor(m) })
}

/// Residue classes of `s` modulo a small `m`, each with its first witness.
pub(crate) fn residue_witnesses(s: &PointSet, m: u64) -> BTreeMap<(u64, u64), &LatticePoint> {
    let mb = BigInt::from(m);
    let mut out = BTreeMap::new();
    for p in s {
        let rx = arith::to_u64(&p.x.mod_floor(&mb)).expect("residue below m");
        let ry = arith::to_u64(&p.y.mod_floor(&mb)).expect("residue below m");
        out.entry((rx, ry)).or_insert(p);
    }
    out
}

pub(crate) fn residue_set(s: &PointSet, m: u64) -> HashSet<(u64, u64)> {
    residue_witnesses(s, m).into_keys().collect()
}

/// True when the residues of `s` modulo `m` fill all of `T_m`.
pub fn is_covering(s: &PointSet, m: u64) -> Result<bool, TorusError> {
    if m < 2 {
        return Err(TorusError::BadModulus(BigInt::from(m)));
    }
    // m² > |s| rules out a covering without touching the points
    match m.checked_mul(m) {
        Some(sq) if sq <= s.len() as u64 => Ok(residue_set(s, m).len() as u64 == sq),
        _ => Ok(false),
    }
}

/// All primes `t` for which `s` covers `T_t`, ascending.
pub fn covering_primes(s: &PointSet) -> Vec<u64> {
    arith::primes_up_to(arith::isqrt(s.len() as u64))
        .into_iter()
        .filter(|&t| is_covering(s, t).expect("prime modulus"))
        .collect()
}

/// Product of the covering primes (1 when there are none).
pub fn covering_radical(s: &PointSet) -> BigInt {
    covering_primes(s).into_iter().map(BigInt::from).product()
}

/// True when `s` covers no torus `T_m`, `m >= 2`. Vacuously true for empty
/// and singleton sets.
pub fn is_tori_transparent(s: &PointSet) -> bool {
    covering_primes(s).is_empty()
}

/// Largest `k` such that `s` is shift-divisible by `k`: the gcd of all
/// coordinate differences from the anchor, equal to the gcd of all pairwise
/// integer distances.
pub fn shift_divisor_gcd(s: &PointSet) -> Result<BigInt, TorusError> {
    if s.len() < 2 {
        return Err(TorusError::TooFewPoints(s.len()));
    }
    let anchor = s.anchor().expect("nonempty");
    Ok(s.iter().skip(1).fold(BigInt::zero(), |g, p| {
        let v = p - anchor;
        arith::gcd(&arith::gcd(&g, &v.dx), &v.dy)
    }))
}

fn check_divisor(k: &BigInt) -> Result<(), TorusError> {
    if k.is_positive() {
        Ok(())
    } else {
        Err(TorusError::NonPositiveDivisor(k.clone()))
    }
}

fn first_incongruent<'a>(s: &'a PointSet, k: &BigInt) -> Option<(&'a LatticePoint, &'a LatticePoint)> {
    let anchor = s.anchor()?;
    s.iter().skip(1).find_map(|p| {
        let v = p - anchor;
        if (&v.dx % k).is_zero() && (&v.dy % k).is_zero() {
            None
        } else {
            Some((anchor, p))
        }
    })
}

/// True when all points of `s` are congruent modulo `k`.
pub fn is_shift_divisible(s: &PointSet, k: &BigInt) -> Result<bool, TorusError> {
    check_divisor(k)?;
    Ok(first_incongruent(s, k).is_none())
}

/// The anchored representative of `S / k`: `(p − anchor) / k` for each `p`.
pub fn divide(s: &PointSet, k: &BigInt) -> Result<PointSet, TorusError> {
    check_divisor(k)?;
    if let Some((a, b)) = first_incongruent(s, k) {
        return Err(TorusError::NotShiftDivisible { k: k.clone(), pair: Box::new((a.clone(), b.clone())) });
    }
    let Some(anchor) = s.anchor() else {
        return Ok(PointSet::default());
    };
    Ok(s.iter()
        .map(|p| {
            let v = p - anchor;
            LatticePoint::new(&v.dx / k, &v.dy / k)
        })
        .collect())
}

pub fn primitive_decomposition(s: &PointSet) -> Result<PrimitiveDecomposition, TorusError> {
    let g = shift_divisor_gcd(s)?;
    let reduced = divide(s, &g)?;
    debug_assert!(shift_divisor_gcd(&reduced).map(|g| g.is_one()).unwrap_or(false));
    Ok(PrimitiveDecomposition { anchor: s.anchor().expect("two points").clone(), scale: g, reduced })
}
