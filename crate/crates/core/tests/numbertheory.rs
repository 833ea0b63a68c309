mod common;

use fusionring::numbertheory::{factor, quad_sign, scan_phi_ratio_bound, squarefree_part};
use fusionring::Rational;
use num_bigint::BigInt;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

#[test]
fn squarefree_round_trip_sampled() {
    let mut rng = StdRng::seed_from_u64(0x5eed);
    for _ in 0..100_000 {
        let n: u64 = rng.random_range(1..=10_000_000_000_000);
        let d = squarefree_part(n);
        assert_eq!(u128::from(d.x) * u128::from(d.y) * u128::from(d.y), u128::from(n), "n={n}");
        assert!(factor(d.x).iter().all(|&(_, e)| e == 1), "n={n}");
    }
}

#[test]
fn quad_sign_matches_interval_evaluation() {
    let mut rng = StdRng::seed_from_u64(0xabcd);
    let draw = |rng: &mut StdRng| {
        let num: i64 = rng.random_range(-1_000_000..=1_000_000);
        let den: i64 = rng.random_range(1..=1_000);
        Rational::new(BigInt::from(num), BigInt::from(den))
    };
    for _ in 0..100_000 {
        let a = draw(&mut rng);
        let b = draw(&mut rng);
        let d: u64 = rng.random_range(0..=1_000_000);
        let sign = common::enclose(&a, &b, d).sign().expect("128 bits separate the value from zero");
        assert_eq!(quad_sign(&a, &b, d), sign, "a={a} b={b} d={d}");
    }
}

#[test]
fn ratio_bound_to_a_hundred_thousand() {
    let s = scan_phi_ratio_bound(100_000);
    assert!(s.violations.is_empty());
    assert_eq!(s.equality_at, vec![3]);
}
