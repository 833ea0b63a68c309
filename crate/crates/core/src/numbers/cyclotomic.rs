//! Elements of the cyclotomic field `Q(ζ_n)` in the power basis
//! `1, ζ, …, ζ^(n−1)`.
//!
//! The power basis is redundant; equality and zero tests reduce modulo the
//! cyclotomic polynomial `Φ_n` first.

use std::collections::HashMap;
use std::fmt;
use std::sync::{Mutex, OnceLock};
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_complex::Complex64;
use num_traits::{One, ToPrimitive, Zero};

use super::Rational;

#[derive(Clone, Debug)]
pub struct Cyclotomic {
    n: usize,
    c: Vec<Rational>,
}

/// Integer coefficients of `Φ_n`, lowest degree first.
pub fn cyclotomic_poly(n: usize) -> Vec<i64> {
    static CACHE: OnceLock<Mutex<HashMap<usize, Vec<i64>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(p) = cache.lock().expect("cache poisoned").get(&n) {
        return p.clone();
    }
    let p = compute_cyclotomic_poly(n);
    cache.lock().expect("cache poisoned").insert(n, p.clone());
    p
}

fn compute_cyclotomic_poly(n: usize) -> Vec<i64> {
    assert!(n >= 1);
    // Φ_n = (x^n − 1) / Π_{d | n, d < n} Φ_d
    let mut num = vec![0i64; n + 1];
    num[0] = -1;
    num[n] = 1;
    for d in 1..n {
        if n % d == 0 {
            num = div_monic(&num, &cyclotomic_poly(d));
        }
    }
    num
}

fn div_monic(a: &[i64], b: &[i64]) -> Vec<i64> {
    let mut r = a.to_vec();
    let db = b.len() - 1;
    let mut q = vec![0i64; a.len() - db];
    for shift in (0..q.len()).rev() {
        let t = r[shift + db];
        q[shift] = t;
        for (i, bc) in b.iter().enumerate() {
            r[i + shift] -= t * bc;
        }
    }
    debug_assert!(r.iter().all(|&x| x == 0));
    q
}

impl Cyclotomic {
    pub fn zero(n: usize) -> Self {
        Cyclotomic { n, c: vec![Rational::zero(); n] }
    }

    pub fn from_rational(n: usize, q: Rational) -> Self {
        let mut z = Self::zero(n);
        z.c[0] = q;
        z
    }

    pub fn from_int(n: usize, k: i64) -> Self {
        Self::from_rational(n, Rational::from_integer(k.into()))
    }

    /// `ζ_n^e` for any integer exponent.
    pub fn root_of_unity(n: usize, e: i64) -> Self {
        let mut z = Self::zero(n);
        z.c[e.rem_euclid(n as i64) as usize] = Rational::one();
        z
    }

    pub fn from_int_coeffs(n: usize, coeffs: &[i64]) -> Self {
        let mut z = Self::zero(n);
        for (j, &v) in coeffs.iter().enumerate() {
            z.c[j % n] += Rational::from_integer(v.into());
        }
        z
    }

    /// `√m` for an integer `m ≥ 0`, as an element of `Q(ζ_{4m})` (or a
    /// smaller field), built from quadratic Gauss sums.
    pub fn sqrt_int(m: u64) -> Self {
        if m == 0 {
            return Self::from_int(1, 0);
        }
        let sf = crate::numbertheory::squarefree_part(m);
        let mut out = Self::from_int(1, sf.y as i64);
        for (p, _) in crate::numbertheory::factor(sf.x) {
            out = &out * &Self::sqrt_prime(p);
        }
        out
    }

    fn sqrt_prime(p: u64) -> Self {
        if p == 2 {
            // √2 = ζ₈ + ζ₈⁻¹
            return &Self::root_of_unity(8, 1) + &Self::root_of_unity(8, -1);
        }
        let n = p as usize;
        let mut g = Self::zero(n);
        for a in 1..n {
            g.c[a] = Rational::from_integer(legendre(a as u64, p).into());
        }
        if p % 4 == 1 {
            g
        } else {
            // g² = −p, so √p = −i·g
            &g.lift(4 * n) * &Self::root_of_unity(4 * n, 3 * n as i64)
        }
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.c
    }

    /// Re-expresses the number in `Q(ζ_m)` for a multiple `m` of `n`.
    pub fn lift(&self, m: usize) -> Self {
        assert!(m % self.n == 0, "cannot lift Q(ζ_{}) into Q(ζ_{m})", self.n);
        let step = m / self.n;
        let mut z = Self::zero(m);
        for (j, v) in self.c.iter().enumerate() {
            z.c[j * step] = v.clone();
        }
        z
    }

    fn common(&self, other: &Self) -> (Self, Self) {
        if self.n == other.n {
            return (self.clone(), other.clone());
        }
        let m = num_integer::lcm(self.n, other.n);
        (self.lift(m), other.lift(m))
    }

    /// Complex conjugate, `ζ^j ↦ ζ^(n−j)`.
    pub fn conj(&self) -> Self {
        let mut z = Self::zero(self.n);
        for (j, v) in self.c.iter().enumerate() {
            z.c[(self.n - j) % self.n] = v.clone();
        }
        z
    }

    /// Canonical coefficients: the remainder modulo `Φ_n`, length `φ(n)`.
    pub fn reduced(&self) -> Vec<Rational> {
        let phi = cyclotomic_poly(self.n);
        let deg = phi.len() - 1;
        let mut r = self.c.clone();
        for top in (deg..r.len()).rev() {
            let t = std::mem::take(&mut r[top]);
            if t.is_zero() {
                continue;
            }
            for (i, pc) in phi.iter().enumerate().take(deg) {
                r[top - deg + i] -= &t * Rational::from_integer((*pc).into());
            }
        }
        r.truncate(deg);
        r
    }

    pub fn is_zero(&self) -> bool {
        self.reduced().iter().all(Zero::is_zero)
    }

    /// The rational value, if the number is rational.
    pub fn as_rational(&self) -> Option<Rational> {
        let r = self.reduced();
        r[1..].iter().all(Zero::is_zero).then(|| r[0].clone())
    }

    pub fn scale(&self, q: &Rational) -> Self {
        Cyclotomic { n: self.n, c: self.c.iter().map(|v| v * q).collect() }
    }

    pub fn to_complex(&self) -> Complex64 {
        let mut z = Complex64::new(0.0, 0.0);
        for (j, v) in self.c.iter().enumerate() {
            if v.is_zero() {
                continue;
            }
            let f = v.to_f64().unwrap_or(f64::NAN);
            let ang = 2.0 * std::f64::consts::PI * j as f64 / self.n as f64;
            z += Complex64::from_polar(f, ang);
        }
        z
    }

    /// Reduced coefficients as integers scaled by a common denominator.
    pub fn to_integer_form(&self) -> (Vec<BigInt>, BigInt) {
        let r = self.reduced();
        let den = r
            .iter()
            .fold(BigInt::one(), |acc, q| num_integer::Integer::lcm(&acc, q.denom()));
        let nums = r
            .iter()
            .map(|q| (q * Rational::from_integer(den.clone())).to_integer())
            .collect();
        (nums, den)
    }
}

fn legendre(a: u64, p: u64) -> i64 {
    let mut r = 1u64;
    let mut base = a % p;
    let mut e = (p - 1) / 2;
    while e > 0 {
        if e & 1 == 1 {
            r = r * base % p;
        }
        base = base * base % p;
        e >>= 1;
    }
    match r {
        0 => 0,
        1 => 1,
        _ => -1,
    }
}

impl PartialEq for Cyclotomic {
    fn eq(&self, other: &Self) -> bool {
        (self - other).is_zero()
    }
}

impl Eq for Cyclotomic {}

impl Neg for &Cyclotomic {
    type Output = Cyclotomic;
    fn neg(self) -> Cyclotomic {
        Cyclotomic { n: self.n, c: self.c.iter().map(|v| -v).collect() }
    }
}

impl Add for &Cyclotomic {
    type Output = Cyclotomic;
    fn add(self, rhs: &Cyclotomic) -> Cyclotomic {
        let (mut a, b) = self.common(rhs);
        for (x, y) in a.c.iter_mut().zip(b.c) {
            *x += y;
        }
        a
    }
}

impl Sub for &Cyclotomic {
    type Output = Cyclotomic;
    fn sub(self, rhs: &Cyclotomic) -> Cyclotomic {
        self + &(-rhs)
    }
}

impl Mul for &Cyclotomic {
    type Output = Cyclotomic;
    fn mul(self, rhs: &Cyclotomic) -> Cyclotomic {
        let (a, b) = self.common(rhs);
        let n = a.n;
        let mut z = Cyclotomic::zero(n);
        for (i, x) in a.c.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.c.iter().enumerate() {
                if !y.is_zero() {
                    z.c[(i + j) % n] += x * y;
                }
            }
        }
        z
    }
}

impl fmt::Display for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let r = self.reduced();
        let mut terms = Vec::new();
        for (j, v) in r.iter().enumerate() {
            if v.is_zero() {
                continue;
            }
            let coeff = if v.denom().is_one() { v.numer().to_string() } else { format!("{v}") };
            terms.push(match j {
                0 => coeff,
                _ => format!("{coeff}·ζ{}^{j}", self.n),
            });
        }
        if terms.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", terms.join(" + "))
        }
    }
}
