//! Exact integer helpers: sieves, divisors, primorials and a Chinese
//! Remainder solver over unbounded integers.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// Non-negative gcd.
pub fn gcd(a: &BigInt, b: &BigInt) -> BigInt {
    a.gcd(b)
}

/// Non-negative lcm; `lcm(0, x) = 0`.
pub fn lcm(a: &BigInt, b: &BigInt) -> BigInt {
    a.lcm(b)
}

/// `lcm(1, 2, ..., n)`, with `lcm() = 1` for `n = 0`.
pub fn lcm_upto(n: u64) -> BigInt {
    let mut acc = BigInt::one();
    for p in primes_up_to(n) {
        let mut pk = p;
        while let Some(next) = pk.checked_mul(p) {
            if next > n {
                break;
            }
            pk = next;
        }
        acc *= pk;
    }
    acc
}

/// Floor of the square root.
pub fn isqrt(n: u64) -> u64 {
    n.isqrt()
}

/// All primes `<= n`, ascending.
pub fn primes_up_to(n: u64) -> Vec<u64> {
    if n < 2 {
        return Vec::new();
    }
    let n = n as usize;
    let mut composite = vec![false; n + 1];
    let mut out = Vec::new();
    for i in 2..=n {
        if composite[i] {
            continue;
        }
        out.push(i as u64);
        let mut j = i * i;
        while j <= n {
            composite[j] = true;
            j += i;
        }
    }
    out
}

/// All primes in the closed range `[lo, hi]`, via a segmented sieve.
pub fn primes_in_range(lo: u64, hi: u64) -> Vec<u64> {
    if hi < 2 || lo > hi {
        return Vec::new();
    }
    let lo = lo.max(2);
    let len = (hi - lo + 1) as usize;
    let mut composite = vec![false; len];
    for p in primes_up_to(isqrt(hi)) {
        let start = (p * p).max(lo.div_ceil(p) * p);
        let mut m = start;
        while m <= hi {
            composite[(m - lo) as usize] = true;
            m += p;
        }
    }
    composite.iter().enumerate().filter(|(_, &c)| !c).map(|(i, _)| lo + i as u64).collect()
}

/// Deterministic trial-division primality test.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n.is_multiple_of(2) {
        return n == 2;
    }
    let mut d = 3;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

/// Distinct prime divisors of `n`, ascending. `n = 0` and `n = 1` have none.
pub fn prime_divisors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            out.push(d);
            while n.is_multiple_of(d) {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// Product of all primes `<= d`; the empty product for `d < 2` is 1.
pub fn primorial(d: u64) -> BigInt {
    primes_up_to(d).into_iter().map(BigInt::from).product()
}

/// Positive divisors of `|n|`, ascending. Trial division, so intended for
/// moderate magnitudes.
pub fn divisors(n: &BigInt) -> Vec<BigInt> {
    let n = n.abs();
    if n.is_zero() {
        return Vec::new();
    }
    let mut factors: Vec<(BigInt, u32)> = Vec::new();
    let mut rest = n;
    let mut d = BigInt::from(2);
    while &d * &d <= rest {
        if (&rest % &d).is_zero() {
            let mut k = 0;
            while (&rest % &d).is_zero() {
                rest /= &d;
                k += 1;
            }
            factors.push((d.clone(), k));
        }
        d += 1;
    }
    if rest > BigInt::one() {
        factors.push((rest, 1));
    }
    let mut out = vec![BigInt::one()];
    for (p, k) in factors {
        let current = out.clone();
        let mut pk = BigInt::one();
        for _ in 0..k {
            pk *= &p;
            out.extend(current.iter().map(|d| d * &pk));
        }
    }
    out.sort();
    out
}

/// Inverse of `a` modulo `m > 0`, in `[0, m)`.
pub fn mod_inverse(a: &BigInt, m: &BigInt) -> Option<BigInt> {
    let e = a.mod_floor(m).extended_gcd(m);
    if !e.gcd.is_one() {
        return None;
    }
    Some(e.x.mod_floor(m))
}

/// Solves the system `x ≡ r_i (mod m_i)` for positive moduli.
///
/// Moduli need not be coprime. Returns the least non-negative solution and
/// the lcm of the moduli, or `None` when the system is inconsistent.
pub fn crt(congruences: &[(BigInt, BigInt)]) -> Option<(BigInt, BigInt)> {
    let mut x = BigInt::zero();
    let mut m = BigInt::one();
    for (r, n) in congruences {
        assert!(n.is_positive(), "crt modulus must be positive");
        let e = m.extended_gcd(n);
        let diff = r - &x;
        if !(&diff % &e.gcd).is_zero() {
            return None;
        }
        let n_red = n / &e.gcd;
        // m * k ≡ diff (mod n)  =>  k ≡ (diff / g) * (m / g)^{-1} (mod n / g)
        let k = ((&diff / &e.gcd) * &e.x).mod_floor(&n_red);
        x += &m * k;
        m *= &n_red;
        x = x.mod_floor(&m);
    }
    Some((x, m))
}

/// `n` as `u64` when it fits.
pub(crate) fn to_u64(n: &BigInt) -> Option<u64> {
    n.to_u64()
}
