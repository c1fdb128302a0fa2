use intcircle::{
    canonical_angle, int_area, int_distance, int_length, isin, line_circle_classify, Classification, IntegerCircle,
    LatticeLine, LatticePoint, LatticeVector, RationalAngle,
};
use intcircle_oracle::brute_angle_congruent;
use intcircle_oracle::corpus::{big_matrix, random_unimodular, rng, Mat};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};
use proptest::prelude::*;
use rand::Rng;

fn pt(x: i64, y: i64) -> LatticePoint {
    LatticePoint::new(x, y)
}

fn unimodular() -> impl Strategy<Value = Mat> {
    any::<u64>().prop_map(|seed| random_unimodular(&mut rng(seed), 20, false))
}

fn special_linear() -> impl Strategy<Value = Mat> {
    any::<u64>().prop_map(|seed| random_unimodular(&mut rng(seed), 50, true))
}

fn map(m: &Mat, shift: (i64, i64), p: &LatticePoint) -> LatticePoint {
    p.affine_image(&big_matrix(m), &LatticeVector::new(shift.0, shift.1))
}

fn coord() -> impl Strategy<Value = i64> {
    -60i64..=60
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn length_scales(dx in coord(), dy in coord(), k in -40i64..=40) {
        prop_assume!((dx, dy) != (0, 0) && k != 0);
        let v = LatticeVector::new(dx, dy);
        let scaled = v.scale(&BigInt::from(k));
        prop_assert_eq!(int_length(&scaled).unwrap(), int_length(&v).unwrap() * BigInt::from(k.abs()));
    }

    #[test]
    fn distance_and_area_are_affine_invariant(
        a in (coord(), coord()), b in (coord(), coord()), c in (coord(), coord()),
        m in unimodular(), shift in (coord(), coord()),
    ) {
        let (a, b, c) = (pt(a.0, a.1), pt(b.0, b.1), pt(c.0, c.1));
        let (ma, mb, mc) = (map(&m, shift, &a), map(&m, shift, &b), map(&m, shift, &c));
        prop_assert_eq!(int_distance(&a, &b), int_distance(&ma, &mb));
        prop_assert_eq!(int_area(&a, &b, &c), int_area(&ma, &mb, &mc));
        let area = int_area(&a, &b, &c);
        for (x, y, z) in [(&a, &c, &b), (&b, &a, &c), (&b, &c, &a), (&c, &a, &b), (&c, &b, &a)] {
            prop_assert_eq!(&int_area(x, y, z), &area);
        }
    }

    #[test]
    fn sine_is_symmetric(o in (coord(), coord()), a in (coord(), coord()), b in (coord(), coord())) {
        prop_assume!(a != o && b != o);
        let ab = RationalAngle::new(pt(o.0, o.1), pt(a.0, a.1), pt(b.0, b.1)).unwrap();
        let ba = RationalAngle::new(pt(o.0, o.1), pt(b.0, b.1), pt(a.0, a.1)).unwrap();
        prop_assert_eq!(isin(&ab).unwrap(), isin(&ba).unwrap());
    }

    #[test]
    fn canonical_angle_is_sl_invariant(
        o in (coord(), coord()), a in (coord(), coord()), b in (coord(), coord()),
        m in special_linear(), shift in (coord(), coord()),
    ) {
        let (o, a, b) = (pt(o.0, o.1), pt(a.0, a.1), pt(b.0, b.1));
        prop_assume!(a != o && b != o && !int_area(&o, &a, &b).is_zero());
        let angle = RationalAngle::new(o.clone(), a.clone(), b.clone()).unwrap();
        let image = RationalAngle::new(map(&m, shift, &o), map(&m, shift, &a), map(&m, shift, &b)).unwrap();
        let c = canonical_angle(&angle).unwrap();
        prop_assert_eq!(&c, &canonical_angle(&image).unwrap());
        prop_assert_eq!(c.isin(), &isin(&angle).unwrap());
    }
}

#[test]
fn sine_formula_divides_exactly() {
    let mut rng = rng(7);
    let mut checked = 0;
    while checked < 1000 {
        let [a, b, c] = [(); 3].map(|_| pt(rng.gen_range(-50..=50), rng.gen_range(-50..=50)));
        let area = int_area(&a, &b, &c);
        if area.is_zero() {
            continue;
        }
        let lengths = int_distance(&a, &b) * int_distance(&a, &c);
        assert!(area.is_multiple_of(&lengths), "{a} {b} {c}");
        let angle = RationalAngle::new(a.clone(), b.clone(), c.clone()).unwrap();
        assert_eq!(isin(&angle).unwrap() * lengths, area);
        checked += 1;
    }
}

#[test]
fn line_circle_classification_matches_enumeration() {
    let mut rng = rng(11);
    let mut checked = 0;
    while checked < 500 {
        let dir = LatticeVector::new(rng.gen_range(-6..=6), rng.gen_range(-6..=6));
        if dir.is_zero() || !dir.is_primitive() {
            continue;
        }
        let base = pt(rng.gen_range(-15..=15), rng.gen_range(-15..=15));
        let center = pt(rng.gen_range(-15..=15), rng.gen_range(-15..=15));
        let r: i64 = rng.gen_range(1..=6);
        let line = LatticeLine::new(base, dir).unwrap();
        let circle = IntegerCircle::new(center.clone(), r).unwrap();
        let class = line_circle_classify(&line, &circle).unwrap();

        let det = (line.base() - &center).det(line.dir());
        let span: i64 = 10 * i64::try_from(det.abs()).unwrap().max(r);
        for t in -span..=span {
            let p = line.point_at(&BigInt::from(t));
            let on = circle.contains(&p);
            let predicted = match &class {
                Classification::Empty => false,
                Classification::TwoPoints(p1, p2) => p == *p1 || p == *p2,
                Classification::Periodic { period, residues } => {
                    residues.contains(&(t.rem_euclid(*period as i64) as u64))
                }
            };
            assert_eq!(on, predicted, "t = {t} for {class:?}");
        }
        if let Classification::TwoPoints(p1, p2) = &class {
            assert!(circle.contains(p1) && circle.contains(p2));
        }
        checked += 1;
    }
}

/// `arctan(p/q)` and `arctan(p'/q)` are congruent exactly when `p' = p` or
/// `p·p' ≡ 1 (mod q)`; the canonical representative is the smaller of the two.
#[test]
fn canonical_angle_matches_orbit_search() {
    for q in 1i64..=12 {
        let reps: Vec<i64> = (1..=q).filter(|p| p.gcd(&q) == 1).collect();
        for &p in &reps {
            let c = canonical_angle(&RationalAngle::arctangent(p, q)).unwrap();
            let inverse = (1..=q).find(|x| (x * p) % q == 1 % q).unwrap();
            assert_eq!(c.p(), &BigInt::from(p.min(inverse)), "arctan({p}/{q})");
            assert_eq!(c.q(), &BigInt::from(q));
            for &p2 in &reps {
                let expected = p2 == p || (p * p2) % q == 1 % q;
                let found =
                    brute_angle_congruent(&RationalAngle::arctangent(p, q), &RationalAngle::arctangent(p2, q), 64);
                assert_eq!(found, expected, "arctan({p}/{q}) vs arctan({p2}/{q})");
            }
        }
    }
}
