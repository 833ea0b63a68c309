//! Integer utilities: factorisation, Euler's totient, square-free parts and
//! exact sign tests for quadratic irrationals.

use std::cmp::Ordering;

use num_bigint::BigInt;
use num_integer::{Integer, Roots};
use serde::Serialize;

use crate::error::{FusionError, Result};
use crate::numbers::Rational;

const SMALL_PRIME_BOUND: u64 = 1 << 12;

/// `n = x·y²` with `x` square-free.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct SquareFreeDecomposition {
    pub n: u64,
    pub x: u64,
    pub y: u64,
}

fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

fn pow_mod(mut b: u64, mut e: u64, m: u64) -> u64 {
    let mut r = 1 % m;
    b %= m;
    while e > 0 {
        if e & 1 == 1 {
            r = mul_mod(r, b, m);
        }
        b = mul_mod(b, b, m);
        e >>= 1;
    }
    r
}

/// Deterministic Miller–Rabin, exact for every `u64`.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for p in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n % p == 0 {
            return n == p;
        }
    }
    let s = (n - 1).trailing_zeros();
    let d = (n - 1) >> s;
    'witness: for a in [2u64, 325, 9375, 28178, 450775, 9780504, 1795265022] {
        let a = a % n;
        if a == 0 {
            continue;
        }
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// A nontrivial factor of the odd composite `n` (Pollard–Brent rho).
fn rho(n: u64) -> u64 {
    let mut c = 1u64;
    loop {
        let f = |x: u64| ((mul_mod(x, x, n) as u128 + c as u128) % n as u128) as u64;
        let (mut x, mut y, mut g, mut q) = (2u64, 2u64, 1u64, 1u64);
        let mut ys = 2u64;
        let mut r = 1u64;
        let m = 128u64;
        while g == 1 {
            x = y;
            for _ in 0..r {
                y = f(y);
            }
            let mut k = 0;
            while k < r && g == 1 {
                ys = y;
                for _ in 0..m.min(r - k) {
                    y = f(y);
                    q = mul_mod(q, x.abs_diff(y), n);
                }
                g = q.gcd(&n);
                k += m;
            }
            r *= 2;
        }
        if g == n {
            loop {
                ys = f(ys);
                g = x.abs_diff(ys).gcd(&n);
                if g > 1 {
                    break;
                }
            }
        }
        if g != n {
            return g;
        }
        c += 1;
    }
}

/// Prime factorisation with exponents, primes increasing. `factor(1)` is
/// empty.
pub fn factor(mut n: u64) -> Vec<(u64, u32)> {
    assert!(n >= 1, "factor(0) is undefined");
    let mut out = Vec::new();
    let mut p = 2u64;
    while p < SMALL_PRIME_BOUND && p * p <= n {
        if n % p == 0 {
            let mut e = 0;
            while n % p == 0 {
                n /= p;
                e += 1;
            }
            out.push((p, e));
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if n > 1 {
        let mut stack = vec![n];
        let mut big = Vec::new();
        while let Some(m) = stack.pop() {
            if is_prime(m) {
                big.push(m);
            } else {
                let d = rho(m);
                stack.push(d);
                stack.push(m / d);
            }
        }
        big.sort_unstable();
        for q in big {
            match out.last_mut() {
                Some((last, e)) if *last == q => *e += 1,
                _ => out.push((q, 1)),
            }
        }
    }
    out
}

pub fn totient(n: u64) -> u64 {
    assert!(n >= 1);
    factor(n)
        .into_iter()
        .fold(n, |acc, (p, _)| acc / p * (p - 1))
}

pub fn is_squarefree(n: u64) -> bool {
    n >= 1 && factor(n).iter().all(|&(_, e)| e == 1)
}

pub fn squarefree_part(n: u64) -> SquareFreeDecomposition {
    assert!(n >= 1, "square-free part of 0 is undefined");
    let (mut x, mut y) = (1u64, 1u64);
    for (p, e) in factor(n) {
        if e % 2 == 1 {
            x *= p;
        }
        y *= p.pow(e / 2);
    }
    SquareFreeDecomposition { n, x, y }
}

/// Integer square root if `n` is a perfect square.
pub fn exact_sqrt(n: u128) -> Option<u128> {
    let r = n.sqrt();
    (r * r == n).then_some(r)
}

/// Lower bound `|b|·φ(2c)` on the number of roots of unity needed to write
/// `a + b√c` as their sum.
pub fn min_roots_of_unity(b: i64, c: u64) -> Result<u64> {
    if c < 2 || !is_squarefree(c) {
        return Err(FusionError::InvalidArgument(format!(
            "c = {c} must be square-free and at least 2"
        )));
    }
    Ok(b.unsigned_abs() * totient(2 * c))
}

/// Exact sign of `a + b√d` for a nonnegative integer `d`.
pub fn quad_sign(a: &Rational, b: &Rational, d: u64) -> Ordering {
    crate::numbers::quadratic::sign_of(a, b, &BigInt::from(d))
}

/// Threshold `(num/den)·√t` for [`phi_ratio_cmp`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SurdThreshold {
    pub num: u64,
    pub den: u64,
    pub t: u64,
}

impl SurdThreshold {
    /// `2/√3 = (2/3)·√3`, the minimum of `φ(2c)/√c` over square-free `c ≥ 2`.
    pub const TWO_OVER_ROOT_THREE: SurdThreshold = SurdThreshold { num: 2, den: 3, t: 3 };
}

/// Compares `φ(2c)/√c` with `(num/den)·√t` exactly, by squaring.
pub fn phi_ratio_cmp(c: u64, threshold: SurdThreshold) -> Ordering {
    phi_ratio_cmp_with(totient(2 * c), c, threshold)
}

fn phi_ratio_cmp_with(phi2c: u64, c: u64, th: SurdThreshold) -> Ordering {
    let lhs = BigInt::from(phi2c).pow(2) * BigInt::from(th.den).pow(2);
    let rhs = BigInt::from(th.num).pow(2) * BigInt::from(th.t) * BigInt::from(c);
    lhs.cmp(&rhs)
}

/// Outcome of the exhaustive check of `φ(2c)/√c ≥ 2/√3`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RatioBoundScan {
    pub limit: u64,
    pub squarefree_checked: u64,
    pub violations: Vec<u64>,
    pub equality_at: Vec<u64>,
}

/// Checks `φ(2c)/√c ≥ 2/√3` for every square-free `2 ≤ c ≤ limit` with a
/// sieve for `φ` and square-freeness, comparing exactly.
pub fn scan_phi_ratio_bound(limit: u64) -> RatioBoundScan {
    let n = limit as usize;
    let mut phi: Vec<u64> = (0..=limit).collect();
    let mut squarefree = vec![true; n + 1];
    for p in 2..=n {
        if phi[p] == p as u64 {
            for m in (p..=n).step_by(p) {
                phi[m] -= phi[m] / p as u64;
            }
            let sq = p.saturating_mul(p);
            if sq <= n {
                for m in (sq..=n).step_by(sq) {
                    squarefree[m] = false;
                }
            }
        }
    }
    let mut out = RatioBoundScan { limit, squarefree_checked: 0, violations: vec![], equality_at: vec![] };
    for c in 2..=n {
        if !squarefree[c] {
            continue;
        }
        out.squarefree_checked += 1;
        let phi2c = if c % 2 == 0 { 2 * phi[c] } else { phi[c] };
        match phi_ratio_cmp_with(phi2c, c as u64, SurdThreshold::TWO_OVER_ROOT_THREE) {
            Ordering::Less => out.violations.push(c as u64),
            Ordering::Equal => out.equality_at.push(c as u64),
            Ordering::Greater => {}
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numbers::rat;
    use proptest::prelude::*;

    fn naive_factor(mut n: u64) -> Vec<(u64, u32)> {
        let mut out = Vec::new();
        let mut p = 2;
        while p * p <= n {
            let mut e = 0;
            while n % p == 0 {
                n /= p;
                e += 1;
            }
            if e > 0 {
                out.push((p, e));
            }
            p += 1;
        }
        if n > 1 {
            out.push((n, 1));
        }
        out
    }

    #[test]
    fn totient_fixtures() {
        assert_eq!(totient(1), 1);
        assert_eq!(totient(6), 2);
        assert_eq!(totient(28), 12);
    }

    #[test]
    fn squarefree_fixtures() {
        assert_eq!(squarefree_part(32).x, 2);
        assert_eq!(squarefree_part(64).x, 1);
        assert_eq!(squarefree_part(176), SquareFreeDecomposition { n: 176, x: 11, y: 4 });
    }

    #[test]
    fn large_semiprimes_factor() {
        let p = 1_000_000_007u64;
        let q = 998_244_353u64;
        assert_eq!(factor(p * q), vec![(q, 1), (p, 1)]);
        assert_eq!(factor(p * p), vec![(p, 2)]);
        assert!(is_prime(18_446_744_073_709_551_557));
    }

    #[test]
    fn roots_of_unity_bound() {
        assert_eq!(min_roots_of_unity(1, 3).unwrap(), 2);
        assert_eq!(min_roots_of_unity(0, 5).unwrap(), 0);
        // 7·φ(4) = 14
        assert_eq!(min_roots_of_unity(7, 2).unwrap(), 14);
        assert!(min_roots_of_unity(1, 12).is_err());
        assert!(min_roots_of_unity(1, 1).is_err());
    }

    #[test]
    fn ratio_fixtures() {
        let th = SurdThreshold::TWO_OVER_ROOT_THREE;
        assert_eq!(phi_ratio_cmp(3, th), Ordering::Equal);
        assert_eq!(phi_ratio_cmp(2, th), Ordering::Greater);
        assert_eq!(phi_ratio_cmp(11, SurdThreshold { num: 8, den: 3, t: 2 }), Ordering::Less);
    }

    #[test]
    fn quad_sign_fixtures() {
        assert_eq!(quad_sign(&rat(0, 1), &rat(0, 1), 7), Ordering::Equal);
        assert_eq!(quad_sign(&rat(-6, 1), &rat(2, 1), 3), Ordering::Less);
        let f41 = -349 + 1024 + 160 + 1024 + 512;
        assert_eq!(quad_sign(&rat(f41, 1), &rat(0, 1), 5), Ordering::Greater);
    }

    #[test]
    fn ratio_scan_small() {
        let s = scan_phi_ratio_bound(10_000);
        assert!(s.violations.is_empty());
        assert_eq!(s.equality_at, vec![3]);
    }

    proptest! {
        #[test]
        fn factor_matches_trial_division(n in 1u64..2_000_000) {
            prop_assert_eq!(factor(n), naive_factor(n));
        }

        #[test]
        fn squarefree_round_trip(n in 1u64..10_000_000_000_000) {
            let d = squarefree_part(n);
            prop_assert_eq!(d.x * d.y * d.y, n);
            prop_assert!(factor(d.x).iter().all(|&(_, e)| e == 1));
        }

        #[test]
        fn quad_sign_matches_float(a in -1000i64..1000, b in -1000i64..1000, d in 0u64..500) {
            let exact = quad_sign(&rat(a, 7), &rat(b, 3), d);
            let approx = a as f64 / 7.0 + b as f64 / 3.0 * (d as f64).sqrt();
            if approx.abs() > 1e-9 {
                prop_assert_eq!(exact, approx.partial_cmp(&0.0).unwrap());
            }
        }
    }
}
