use intcircle::arith::{lcm, prime_divisors};
use intcircle::tori::{divide, is_covering, is_shift_divisible, is_tori_transparent, project, shift_divisor_gcd};
use intcircle::{LatticePoint, LatticeVector, PointSet};
use intcircle_oracle::brute_covering;
use intcircle_oracle::corpus::{random_affine_image, random_set, rng};
use num_bigint::BigInt;
use proptest::prelude::*;
use rand::Rng;

proptest! {
    #[test]
    fn projection_equality_descends_to_divisors(
        a in (-500i64..500, -500i64..500), b in (-500i64..500, -500i64..500), m in 2u64..40,
    ) {
        let (a, b) = (LatticePoint::new(a.0, a.1), LatticePoint::new(b.0, b.1));
        let big_m = BigInt::from(m);
        if project(&a, &big_m).unwrap() == project(&b, &big_m).unwrap() {
            for d in (2..=m).filter(|d| m % d == 0) {
                let d = BigInt::from(d);
                let (pa, pb) = (project(&a, &d).unwrap(), project(&b, &d).unwrap());
                prop_assert_eq!((pa.rx, pa.ry), (pb.rx, pb.ry));
            }
        }
    }

    #[test]
    fn shift_divisibility_is_lcm_closed(seed in any::<u64>(), a in 1i64..8, b in 1i64..8) {
        let mut rng = rng(seed);
        let base = random_set(&mut rng, 6, -20, 20);
        let anchor = LatticeVector::new(rng.gen_range(-9..=9), rng.gen_range(-9..=9));
        // multiples of lcm(a, b) with a random offset are divisible by both
        let l = lcm(&a.into(), &b.into());
        let s = base.scale(&l).translate(&anchor);
        prop_assert!(is_shift_divisible(&s, &a.into()).unwrap());
        prop_assert!(is_shift_divisible(&s, &b.into()).unwrap());
        prop_assert!(is_shift_divisible(&s, &l).unwrap());
        // and on arbitrary sets the implication holds whenever its premise does
        let t = random_set(&mut rng, 5, -6, 6).scale(&BigInt::from(rng.gen_range(1..=12)));
        if is_shift_divisible(&t, &a.into()).unwrap() && is_shift_divisible(&t, &b.into()).unwrap() {
            prop_assert!(is_shift_divisible(&t, &l).unwrap());
        }
    }

    #[test]
    fn divide_round_trips(seed in any::<u64>(), k in 1i64..10) {
        let mut rng = rng(seed);
        let s = random_set(&mut rng, 7, -15, 15).scale(&BigInt::from(k)).translate(&LatticeVector::new(3, -5));
        let anchor = s.anchor().unwrap().clone();
        let q = divide(&s, &BigInt::from(k)).unwrap();
        let back: PointSet = q.iter().map(|p| anchor.translate(&p.to_vector().scale(&BigInt::from(k)))).collect();
        prop_assert_eq!(back, s.clone());
        let g = shift_divisor_gcd(&s).unwrap();
        prop_assert!(g.clone() % BigInt::from(k) == BigInt::from(0));
    }

    #[test]
    fn coverings_are_affine_invariant(seed in any::<u64>()) {
        let mut rng = rng(seed);
        let s = random_set(&mut rng, 12, 0, 5);
        let image = random_affine_image(&mut rng, &s, 20);
        for m in 2..=3 {
            prop_assert_eq!(is_covering(&s, m).unwrap(), is_covering(&image, m).unwrap());
        }
        prop_assert_eq!(is_tori_transparent(&s), is_tori_transparent(&image));
    }
}

#[test]
fn covering_passes_to_prime_divisors() {
    let mut rng = rng(3);
    for m in 2u64..=12 {
        let mut coverings = 0;
        for _ in 0..300 {
            // a full residue system plus noise, or a random blob
            let s: PointSet = if rng.gen_bool(0.5) {
                (0..m as i64)
                    .flat_map(|i| (0..m as i64).map(move |j| (i, j)))
                    .map(|(i, j)| {
                        LatticePoint::new(i + m as i64 * rng.gen_range(-2..=2), j + m as i64 * rng.gen_range(-2..=2))
                    })
                    .collect()
            } else {
                random_set(&mut rng, (m * m + 4) as usize, 0, m as i64 + 2)
            };
            assert_eq!(is_covering(&s, m).unwrap(), brute_covering(&s, m as i64));
            if is_covering(&s, m).unwrap() {
                coverings += 1;
                for p in prime_divisors(m) {
                    assert!(is_covering(&s, p).unwrap(), "covers T_{m} but not T_{p}: {s}");
                    assert!(brute_covering(&s, p as i64));
                }
            }
        }
        assert!(coverings > 0, "no covering sets drawn for m = {m}");
    }
}

/// Sets of at most 9 points from `[0,4]²`, sampled deterministically,
/// against the brute residue loop for `m <= 5`.
#[test]
fn covering_matches_brute_force_on_small_grid() {
    let mut rng = rng(5);
    for _ in 0..3000 {
        let s = random_set(&mut rng, 9, 0, 4);
        for m in 2..=5u64 {
            assert_eq!(is_covering(&s, m).unwrap(), brute_covering(&s, m as i64), "{s} mod {m}");
        }
    }
}
