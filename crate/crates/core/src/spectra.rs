//! Integer and rational circumscribed spectra.
//!
//! For a finite set `S = x + g·Ŝ` with `Ŝ` primitive, let `τ` be the product
//! of the primes `t` for which `Ŝ` covers `T_t`. Then the rational spectrum
//! is `{ g / (c·τ) : c ∈ Z+ }` and the integer spectrum is its intersection
//! with `Z`, i.e. the divisors of `g / τ` (empty when `τ ∤ g`).
//!
//! Every radius query comes with a [`Certificate`] that [`verify_certificate`]
//! checks without consulting the structural description.

use std::collections::HashSet;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::arith;
use crate::construct;
use crate::error::{ConstructError, SpectrumError};
use crate::lattice::{int_distance, IntegerCircle, LatticePoint};
use crate::point_set::PointSet;
use crate::tori::{self, TorusResidue};

/// A positive fraction in lowest terms.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ReducedFraction {
    num: BigInt,
    den: BigInt,
}

impl ReducedFraction {
    /// Reduces `num / den`; `None` unless both are positive.
    pub fn new(num: impl Into<BigInt>, den: impl Into<BigInt>) -> Option<Self> {
        let (num, den) = (num.into(), den.into());
        if !num.is_positive() || !den.is_positive() {
            return None;
        }
        let g = num.gcd(&den);
        Some(Self { num: num / &g, den: den / &g })
    }

    pub fn integer(n: impl Into<BigInt>) -> Option<Self> {
        Self::new(n, 1)
    }

    pub fn num(&self) -> &BigInt {
        &self.num
    }

    pub fn den(&self) -> &BigInt {
        &self.den
    }
}

impl fmt::Display for ReducedFraction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "{}/{}", self.num, self.den)
        }
    }
}

/// The set `{ g / (c·τ) : c ∈ Z+ }`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RationalSpectrum {
    g: BigInt,
    tau: BigInt,
}

impl RationalSpectrum {
    pub fn g(&self) -> &BigInt {
        &self.g
    }

    pub fn tau(&self) -> &BigInt {
        &self.tau
    }

    /// The largest member, `g / τ` in lowest terms.
    pub fn max(&self) -> ReducedFraction {
        ReducedFraction::new(self.g.clone(), self.tau.clone()).expect("g and tau are positive")
    }

    /// Membership: `p/q = g/(c·τ)` for a positive integer `c`.
    pub fn contains(&self, r: &ReducedFraction) -> bool {
        let lhs = &self.g * &r.den;
        let rhs = &r.num * &self.tau;
        (&lhs % &rhs).is_zero()
    }

    /// The member `g / (c·τ)` for the given `c >= 1`.
    pub fn member(&self, c: &BigInt) -> Option<ReducedFraction> {
        ReducedFraction::new(self.g.clone(), &self.tau * c)
    }

    /// The integer members, ascending: divisors of `g / τ`.
    pub fn integer_members(&self) -> Vec<BigInt> {
        let (q, rem) = self.g.div_rem(&self.tau);
        if rem.is_zero() {
            arith::divisors(&q)
        } else {
            Vec::new()
        }
    }
}

impl fmt::Display for RationalSpectrum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.tau.is_one() {
            write!(f, "{{ {}/c : c >= 1 }}", self.g)
        } else {
            write!(f, "{{ {}/(c*{}) : c >= 1 }}", self.g, self.tau)
        }
    }
}

/// Evidence for or against "S has a circumscribed circle of radius r".
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Certificate {
    /// A circle of radius `r` through every point.
    Yes(IntegerCircle),
    /// `r` does not divide `id(a, b)`.
    NoDivisibility { a: LatticePoint, b: LatticePoint, r: BigInt },
    /// `S / r` covers `T_prime`; one witness point of `S / r` per residue.
    NoCovering { prime: u64, witnesses: Vec<(TorusResidue, LatticePoint)> },
}

impl Certificate {
    pub fn is_yes(&self) -> bool {
        matches!(self, Certificate::Yes(_))
    }
}

impl fmt::Display for Certificate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Certificate::Yes(c) => write!(f, "yes: {c}"),
            Certificate::NoDivisibility { a, b, r } => {
                write!(f, "no: {r} does not divide id({a}, {b}) = {}", int_distance(a, b))
            }
            Certificate::NoCovering { prime, witnesses } => {
                write!(f, "no: quotient covers T_{prime} (")?;
                for (i, (res, p)) in witnesses.iter().enumerate() {
                    if i > 0 {
                        write!(f, ", ")?;
                    }
                    write!(f, "{res} <- {p}")?;
                }
                write!(f, ")")
            }
        }
    }
}

fn require_two(s: &PointSet) -> Result<(), SpectrumError> {
    if s.len() < 2 {
        Err(SpectrumError::TooFewPoints(s.len()))
    } else {
        Ok(())
    }
}

pub fn rational_spectrum(s: &PointSet) -> Result<RationalSpectrum, SpectrumError> {
    require_two(s)?;
    let decomposition = tori::primitive_decomposition(s)?;
    let tau = tori::covering_radical(&decomposition.reduced);
    Ok(RationalSpectrum { g: decomposition.scale, tau })
}

/// Integer radii of circumscribed circles, ascending.
pub fn integer_spectrum(s: &PointSet) -> Result<Vec<BigInt>, SpectrumError> {
    Ok(rational_spectrum(s)?.integer_members())
}

pub fn max_radius(s: &PointSet) -> Result<ReducedFraction, SpectrumError> {
    let max = rational_spectrum(s)?.max();
    // The maximum's reduced denominator is the covering radical of S itself.
    assert_eq!(max.den, tori::covering_radical(s), "max radius denominator must be the covering radical of the set");
    Ok(max)
}

/// Decides whether `s` has a circumscribed circle of radius `r`, with proof.
pub fn has_radius(s: &PointSet, r: &BigInt) -> Result<(bool, Certificate), SpectrumError> {
    require_two(s)?;
    if !r.is_positive() {
        return Err(SpectrumError::NonPositiveRadius(r.clone()));
    }
    match construct::center_for_radius(s, r) {
        Ok(circle) => Ok((true, Certificate::Yes(circle))),
        Err(ConstructError::Refuted { certificate, .. }) => Ok((false, *certificate)),
        Err(e) => Err(e.into()),
    }
}

/// `p/q ∈ Λ_Q(S)` iff `q·S` has a circumscribed circle of radius `p`.
pub fn has_rational_radius(s: &PointSet, radius: &ReducedFraction) -> Result<bool, SpectrumError> {
    Ok(has_radius(&s.scale(&radius.den), &radius.num)?.0)
}

/// Checks a certificate against the set directly. Never panics on
/// malformed input; anything inconsistent is rejected.
pub fn verify_certificate(s: &PointSet, r: &BigInt, cert: &Certificate) -> bool {
    if !r.is_positive() {
        return false;
    }
    match cert {
        Certificate::Yes(circle) => circle.radius() == r && s.iter().all(|p| circle.contains(p)),
        Certificate::NoDivisibility { a, b, r: cr } => {
            cr == r && s.contains(a) && s.contains(b) && !(int_distance(a, b) % r).is_zero()
        }
        Certificate::NoCovering { prime, witnesses } => {
            let t = *prime;
            if t < 2 {
                return false;
            }
            let Ok(quotient) = tori::divide(s, r) else {
                return false;
            };
            let tb = BigInt::from(t);
            let mut seen = HashSet::new();
            for (res, p) in witnesses {
                if res.m != tb || !quotient.contains(p) {
                    return false;
                }
                match tori::project(p, &tb) {
                    Ok(actual) if &actual == res => {
                        seen.insert((res.rx.clone(), res.ry.clone()));
                    }
                    _ => return false,
                }
            }
            t.checked_mul(t).is_some_and(|sq| seen.len() as u64 == sq)
        }
    }
}

/// For `a, b` in the integer spectrum, reports whether `lcm(a, b)` is too.
pub fn lcm_closure_check(s: &PointSet, a: &BigInt, b: &BigInt) -> Result<bool, SpectrumError> {
    let spectrum = integer_spectrum(s)?;
    for x in [a, b] {
        if !spectrum.contains(x) {
            return Err(SpectrumError::NotInSpectrum(x.clone()));
        }
    }
    Ok(has_radius(s, &arith::lcm(a, b))?.0)
}

/// Product of all primes `<= d`.
pub fn primorial(d: &BigInt) -> Result<BigInt, SpectrumError> {
    if *d < BigInt::one() {
        return Err(SpectrumError::BadPrimorialArgument(d.clone()));
    }
    let d = arith::to_u64(d).expect("primorial argument fits in u64");
    Ok(arith::primorial(d))
}

/// Checks that `1 / ⌊√|S|⌋#` is a rational circumscribed radius of `s`.
pub fn primorial_member_check(s: &PointSet) -> Result<bool, SpectrumError> {
    require_two(s)?;
    let k = arith::isqrt(s.len() as u64);
    let den = arith::primorial(k);
    has_rational_radius(s, &ReducedFraction::new(1, den).expect("positive"))
}
