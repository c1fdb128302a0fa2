//! Explicit centers of circumscribed circles.
//!
//! [`unit_center_crt`] follows the constructive existence argument for
//! tori-transparent sets step by step and records every choice in a
//! [`CrtTrace`]. The product `N!` of that argument is replaced by
//! `L = lcm(1, ..., N)`: every congruence involved is modulo some `m <= N`,
//! and each such `m` divides `L`.
//!
//! [`unit_center_search`] is the practical route: scan rings around the
//! bounding box and return the first point at unit distance from the set.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::arith;
use crate::error::ConstructError;
use crate::lattice::{int_distance, IntegerCircle, LatticePoint, LatticeVector};
use crate::point_set::PointSet;
use crate::spectra::Certificate;
use crate::tori::{self, TorusResidue};

/// Ring half-width used by [`center_for_radius`] before falling back to CRT.
pub const DEFAULT_SEARCH_BOUND: u64 = 64;

/// Candidate budget for the search step of [`center_for_radius`].
const SEARCH_CANDIDATE_BUDGET: usize = 1 << 18;

/// Resource limits for the CRT construction.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CrtLimits {
    /// Largest admissible `L = lcm(1..N)`; the prime scan covers a range of
    /// about this length.
    pub max_lcm: u64,
}

impl Default for CrtLimits {
    fn default() -> Self {
        // admits N <= 12 (lcm = 27720); the prime scan then stays near 3000 primes
        Self { max_lcm: 30_000 }
    }
}

/// Every choice made by [`unit_center_crt`], in the coordinates of the
/// translated set (contained in `[1, N]²`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CrtTrace {
    /// Translation applied to the input set before construction.
    pub shift: LatticeVector,
    pub n: u64,
    /// `lcm(1, ..., n)`.
    pub modulus_l: BigInt,
    /// Point avoiding the residues of the set modulo every `m` in `[2, n]`.
    pub avoided: LatticePoint,
    pub beta: BigInt,
    /// All primes in `[n + 1, beta]`.
    pub primes: Vec<u64>,
    /// `residues[i]` is the least residue modulo `primes[i]` hit by no first
    /// coordinate of the set.
    pub residues: Vec<u64>,
    pub alpha: BigInt,
}

impl CrtTrace {
    /// The congruence system `alpha ≡ a (mod L)`, `alpha ≡ c_i (mod p_i)`.
    pub fn congruences(&self) -> Vec<(BigInt, BigInt)> {
        let mut out = vec![(self.avoided.x.clone(), self.modulus_l.clone())];
        out.extend(self.primes.iter().zip(&self.residues).map(|(&p, &c)| (BigInt::from(c), BigInt::from(p))));
        out
    }

    /// Recomputes `alpha` from the recorded congruences.
    pub fn replay_alpha(&self) -> Option<BigInt> {
        arith::crt(&self.congruences()).map(|(x, _)| x)
    }

    /// The constructed center in translated coordinates.
    pub fn translated_center(&self) -> LatticePoint {
        LatticePoint::new(self.alpha.clone(), self.beta.clone())
    }

    /// The constructed center in the input's coordinates.
    pub fn center(&self) -> LatticePoint {
        self.translated_center().translate(&-&self.shift)
    }
}

impl fmt::Display for CrtTrace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "crt trace:")?;
        writeln!(f, "  shift      = {}", self.shift)?;
        writeln!(f, "  N          = {}", self.n)?;
        writeln!(f, "  L          = lcm(1..N) = {}", self.modulus_l)?;
        writeln!(f, "  (a, b)     = {}", self.avoided)?;
        writeln!(f, "  beta       = b + L = {}", self.beta)?;
        writeln!(f, "  primes     = {} in [{}, {}]", self.primes.len(), self.n + 1, self.beta)?;
        let shown: Vec<String> =
            self.primes.iter().zip(&self.residues).take(12).map(|(p, c)| format!("{c} mod {p}")).collect();
        let more = if self.primes.len() > 12 { ", ..." } else { "" };
        writeln!(f, "  residues   = [{}{}]", shown.join(", "), more)?;
        write!(f, "  alpha      = {}", self.alpha)
    }
}

/// Finds `v` with `π_m(v) ∉ π_m(s)` for every `m` in `moduli`.
///
/// For each prime dividing some modulus the least residue pair missed by `s`
/// is chosen; the pairs are combined coordinate-wise by CRT. The result has
/// coordinates in `[0, P)` with `P` the product of those primes.
pub fn avoid_residues(s: &PointSet, moduli: &[u64]) -> Result<LatticePoint, ConstructError> {
    let mut primes: Vec<u64> = moduli.iter().flat_map(|&m| arith::prime_divisors(m)).collect();
    primes.sort_unstable();
    primes.dedup();

    let mut xs = Vec::with_capacity(primes.len());
    let mut ys = Vec::with_capacity(primes.len());
    for p in primes {
        let hit = tori::residue_set(s, p);
        let (i, j) = (0..p)
            .flat_map(|i| (0..p).map(move |j| (i, j)))
            .find(|pair| !hit.contains(pair))
            .ok_or(ConstructError::Covering { prime: p })?;
        xs.push((BigInt::from(i), BigInt::from(p)));
        ys.push((BigInt::from(j), BigInt::from(p)));
    }
    let (x, _) = arith::crt(&xs).expect("distinct primes are coprime");
    let (y, _) = arith::crt(&ys).expect("distinct primes are coprime");
    Ok(LatticePoint::new(x, y))
}

/// Unit circumscribed center of a tori-transparent set via the CRT
/// construction, with default limits.
pub fn unit_center_crt(s: &PointSet) -> Result<(LatticePoint, CrtTrace), ConstructError> {
    unit_center_crt_with(s, CrtLimits::default())
}

pub fn unit_center_crt_with(s: &PointSet, limits: CrtLimits) -> Result<(LatticePoint, CrtTrace), ConstructError> {
    let (lo, hi) = s.bounding_box().ok_or(ConstructError::EmptySet)?;
    if let Some(&prime) = tori::covering_primes(s).first() {
        return Err(ConstructError::Covering { prime });
    }

    // move the set into [1, N]²
    let shift = LatticeVector::new(BigInt::one() - &lo.x, BigInt::one() - &lo.y);
    let moved = s.translate(&shift);
    let extent = (&hi.x - &lo.x).max(&hi.y - &lo.y) + BigInt::one();
    let n = extent.max(BigInt::from(s.len()));
    let n = n.to_u64().unwrap_or(u64::MAX);
    if n > 64 {
        return Err(ConstructError::TraceTooLarge { n, limit: limits.max_lcm });
    }

    let modulus_l = arith::lcm_upto(n);
    if modulus_l > BigInt::from(limits.max_lcm) {
        return Err(ConstructError::TraceTooLarge { n, limit: limits.max_lcm });
    }

    let moduli: Vec<u64> = (2..=n).collect();
    let mut avoided = avoid_residues(&moved, &moduli)?;
    // b >= 1 keeps beta = b + L > N, which the m > beta case relies on
    if avoided.y.is_zero() {
        avoided.y = arith::primorial(n);
    }
    let beta = &avoided.y + &modulus_l;
    let beta_u64 = beta.to_u64().expect("beta is bounded by L plus a primorial of N <= 64");

    let primes = arith::primes_in_range(n + 1, beta_u64);
    let first_coords: Vec<&BigInt> = moved.iter().map(|p| &p.x).collect();
    let residues: Vec<u64> = primes
        .iter()
        .map(|&p| {
            let pb = BigInt::from(p);
            let hit: std::collections::HashSet<u64> = first_coords
                .iter()
                .map(|x| arith::to_u64(&num_integer::Integer::mod_floor(*x, &pb)).unwrap())
                .collect();
            // |S| <= N < p, so some residue is free
            (0..p).find(|c| !hit.contains(c)).expect("fewer points than the prime")
        })
        .collect();

    let mut trace = CrtTrace { shift, n, modulus_l, avoided, beta, primes, residues, alpha: BigInt::zero() };
    trace.alpha = trace.replay_alpha().expect("moduli are pairwise coprime");

    let center = trace.center();
    debug_assert!(s.iter().all(|p| int_distance(&center, p).is_one()));
    Ok((center, trace))
}

/// Candidates in ring order: ring `k` is the boundary of the bounding box
/// grown by `k`, ring 0 is the whole box; each ring is scanned by `x` then
/// `y` ascending.
fn ring_candidates(lo: LatticePoint, hi: LatticePoint, bound: u64) -> impl Iterator<Item = LatticePoint> {
    (0..=bound).flat_map(move |k| {
        let k = BigInt::from(k);
        let (x0, x1) = (&lo.x - &k, &hi.x + &k);
        let (y0, y1) = (&lo.y - &k, &hi.y + &k);
        let full_ring = k.is_zero();
        range_inclusive(x0.clone(), x1.clone()).flat_map(move |x| {
            let ys: Box<dyn Iterator<Item = BigInt>> = if full_ring || x == x0 || x == x1 {
                Box::new(range_inclusive(y0.clone(), y1.clone()))
            } else if y0 == y1 {
                Box::new(std::iter::once(y0.clone()))
            } else {
                Box::new([y0.clone(), y1.clone()].into_iter())
            };
            ys.map(move |y| LatticePoint::new(x.clone(), y))
        })
    })
}

fn range_inclusive(lo: BigInt, hi: BigInt) -> impl Iterator<Item = BigInt> {
    let mut next = lo;
    std::iter::from_fn(move || {
        if next > hi {
            return None;
        }
        let out = next.clone();
        next += 1;
        Some(out)
    })
}

fn is_unit_center(c: &LatticePoint, s: &PointSet) -> bool {
    s.iter().all(|p| int_distance(c, p).is_one())
}

/// First unit circumscribed center in ring order within `bound` rings.
/// `None` is not a proof that no center exists.
pub fn unit_center_search(s: &PointSet, bound: u64) -> Option<LatticePoint> {
    let (lo, hi) = s.bounding_box()?;
    ring_candidates(lo, hi, bound).find(|c| is_unit_center(c, s))
}

fn unit_center_search_budgeted(s: &PointSet, bound: u64, budget: usize) -> Option<LatticePoint> {
    let (lo, hi) = s.bounding_box()?;
    ring_candidates(lo, hi, bound).take(budget).find(|c| is_unit_center(c, s))
}

/// A refutation of radius `r` for `s`, if one exists.
///
/// Either two points whose integer distance `r` does not divide, or a prime
/// `t` whose torus `S / r` covers, with one witness per residue class.
pub fn refute_radius(s: &PointSet, r: &BigInt) -> Option<Certificate> {
    s.anchor()?;
    match tori::divide(s, r) {
        Err(crate::error::TorusError::NotShiftDivisible { k, pair }) => {
            let (a, b) = *pair;
            Some(Certificate::NoDivisibility { a, b, r: k })
        }
        Err(_) => None,
        Ok(quotient) => {
            let prime = *tori::covering_primes(&quotient).first()?;
            let tb = BigInt::from(prime);
            let witnesses = tori::residue_witnesses(&quotient, prime)
                .into_iter()
                .map(|((rx, ry), p)| (TorusResidue { m: tb.clone(), rx: rx.into(), ry: ry.into() }, p.clone()))
                .collect();
            Some(Certificate::NoCovering { prime, witnesses })
        }
    }
}

/// A circumscribed circle of radius `r`: `anchor + r·ĉ` for a unit center
/// `ĉ` of `S / r` (search first, CRT as fallback). When no such circle exists
/// the error carries the refuting certificate.
pub fn center_for_radius(s: &PointSet, r: &BigInt) -> Result<IntegerCircle, ConstructError> {
    let anchor = s.anchor().ok_or(ConstructError::EmptySet)?;
    if !r.is_positive() {
        return Err(ConstructError::NonPositiveRadius(r.clone()));
    }
    if let Some(certificate) = refute_radius(s, r) {
        return Err(ConstructError::Refuted { radius: r.clone(), certificate: Box::new(certificate) });
    }
    let quotient = tori::divide(s, r).expect("not refuted, so shift-divisible");
    let unit = match unit_center_search_budgeted(&quotient, DEFAULT_SEARCH_BOUND, SEARCH_CANDIDATE_BUDGET) {
        Some(c) => c,
        None => unit_center_crt(&quotient)?.0,
    };
    let center = anchor.translate(&unit.to_vector().scale(r));
    let circle = IntegerCircle::new(center, r.clone()).expect("positive radius");
    debug_assert!(s.iter().all(|p| circle.contains(p)));
    Ok(circle)
}
