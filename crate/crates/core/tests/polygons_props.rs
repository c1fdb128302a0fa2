use intcircle::polygons::{
    farey_starburst, ngon_has_circle, quadrangle_has_circle, segment_triangle_spectrum, sine_rule_ratios, Polygon,
};
use intcircle::spectra::{integer_spectrum, rational_spectrum};
use intcircle::tori::{is_covering, is_tori_transparent};
use intcircle::trig::{isin, RationalAngle};
use intcircle::{canonical_angle, int_distance, LatticePoint};
use intcircle_oracle::corpus::{random_set, rng};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;

fn poly(c: &[(i64, i64)]) -> Polygon {
    Polygon::from_coords(c).unwrap()
}

fn sines(p: &Polygon) -> Vec<BigInt> {
    let v = p.vertices().points();
    let n = v.len();
    let mut out: Vec<BigInt> = (0..n)
        .map(|i| {
            let angle = RationalAngle::new(v[i].clone(), v[(i + n - 1) % n].clone(), v[(i + 1) % n].clone()).unwrap();
            isin(&angle).unwrap()
        })
        .collect();
    out.sort();
    out
}

#[test]
fn shape_answers_match_spectra() {
    let mut rng = rng(61);
    for _ in 0..300 {
        let s = random_set(&mut rng, 9, -6, 6);
        let p = Polygon::new(s.iter().cloned()).unwrap();
        let spectrum = integer_spectrum(&s).unwrap();
        assert_eq!(ngon_has_circle(&p), is_tori_transparent(&s));
        assert_eq!(ngon_has_circle(&p), spectrum.first() == Some(&BigInt::from(1)));
        match p.len() {
            2 | 3 => {
                let (z, q) = segment_triangle_spectrum(&p).unwrap();
                assert_eq!(z, spectrum);
                assert_eq!(q, rational_spectrum(&s).unwrap());
            }
            4 => assert_eq!(quadrangle_has_circle(&p).unwrap(), !spectrum.is_empty()),
            _ => {}
        }
    }
}

#[test]
fn quadrangle_parity_matches_torus() {
    let mut rng = rng(62);
    let mut seen = [0; 2];
    for _ in 0..500 {
        let s = loop {
            let s = random_set(&mut rng, 4, -20, 20);
            if s.len() == 4 {
                break s;
            }
        };
        let q = Polygon::new(s.iter().cloned()).unwrap();
        let v = s.points();
        let even = (0..4).any(|i| (i + 1..4).any(|j| int_distance(&v[i], &v[j]).is_even()));
        let answer = quadrangle_has_circle(&q).unwrap();
        assert_eq!(answer, even);
        assert_eq!(answer, !is_covering(&s, 2).unwrap());
        seen[answer as usize] += 1;
    }
    assert!(seen[0] > 0 && seen[1] > 0);
}

#[test]
fn spectra_ignore_angles() {
    let unit = poly(&[(0, 0), (1, 0), (0, 1)]);
    let wide = poly(&[(0, 0), (1, 2), (2, 1)]);
    assert_eq!(sines(&unit), vec![BigInt::from(1); 3]);
    assert_eq!(sines(&wide), vec![BigInt::from(3); 3]);
    assert_eq!(segment_triangle_spectrum(&unit).unwrap(), segment_triangle_spectrum(&wide).unwrap());
    assert_eq!(integer_spectrum(unit.vertices()).unwrap(), integer_spectrum(wide.vertices()).unwrap());
}

#[test]
fn congruent_angles_different_answers() {
    let square = poly(&[(0, 0), (0, 1), (1, 1), (1, 0)]);
    let kite = poly(&[(-1, 0), (-1, 1), (0, 1), (1, 0)]);
    let angles = |p: &Polygon| {
        let v = p.vertices().points();
        let mut out: Vec<_> = (0..4)
            .map(|i| {
                let a = RationalAngle::new(v[i].clone(), v[(i + 3) % 4].clone(), v[(i + 1) % 4].clone()).unwrap();
                canonical_angle(&a).unwrap()
            })
            .collect();
        out.sort_by(|a, b| (a.q(), a.p()).cmp(&(b.q(), b.p())));
        out
    };
    assert_eq!(angles(&square), angles(&kite));
    assert!(!quadrangle_has_circle(&square).unwrap());
    assert!(quadrangle_has_circle(&kite).unwrap());
    // the circle about the origin
    assert!(kite.vertices().iter().all(|p| int_distance(&LatticePoint::origin(), p) == BigInt::from(1)));
}

#[test]
fn sine_rule_on_random_triangles() {
    use rand::Rng;
    let mut rng = rng(63);
    let mut checked = 0;
    while checked < 1000 {
        let c: Vec<(i64, i64)> = (0..3).map(|_| (rng.gen_range(-50..=50), rng.gen_range(-50..=50))).collect();
        let Ok(t) = Polygon::from_coords(&c) else { continue };
        let Ok(r) = sine_rule_ratios(&t) else { continue };
        assert!(r[0] == r[1] && r[1] == r[2], "{c:?}: {r:?}");
        checked += 1;
    }
}

#[test]
fn starburst_is_sorted_and_symmetric() {
    for bound in 1..=7u64 {
        let pts: Vec<(BigInt, BigInt)> = farey_starburst(bound).unwrap().into_iter().map(|p| (p.x, p.y)).collect();
        let upper = |p: &(BigInt, BigInt)| p.1 > BigInt::zero() || (p.1.is_zero() && p.0 > BigInt::zero());
        for w in pts.windows(2) {
            let (a, b) = (&w[0], &w[1]);
            if upper(a) == upper(b) {
                assert!(&a.0 * &b.1 - &a.1 * &b.0 > BigInt::zero(), "{a:?} then {b:?}");
            } else {
                assert!(upper(a) && !upper(b));
            }
        }
        let rotated: std::collections::BTreeSet<_> = pts.iter().map(|(x, y)| (-y.clone(), x.clone())).collect();
        let original: std::collections::BTreeSet<_> = pts.iter().cloned().collect();
        assert_eq!(rotated, original);
        // a quarter turn advances the cyclic order by a quarter
        let n = pts.len();
        for (i, (x, y)) in pts.iter().enumerate() {
            assert_eq!(pts[(i + n / 4) % n], (-y.clone(), x.clone()));
        }
    }
}
