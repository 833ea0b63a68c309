//! Elements `a + b√D` of a real quadratic field with rational `a`, `b`.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::{IntPoly, Rational};

/// `a + b√d` with `d` square-free. Rationals are stored with `b = 0` and
/// `d = 1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct QuadraticNumber {
    a: Rational,
    b: Rational,
    d: u64,
}

/// Exact sign of `a + b√d` for any `d ≥ 0` (not necessarily square-free).
pub fn sign_of(a: &Rational, b: &Rational, d: &BigInt) -> Ordering {
    let zero = Rational::zero();
    let sa = a.cmp(&zero);
    let sb = if d.is_zero() { Ordering::Equal } else { b.cmp(&zero) };
    if sb == Ordering::Equal {
        return sa;
    }
    if sa == Ordering::Equal || sa == sb {
        return sb;
    }
    let a2 = a * a;
    let b2d = b * b * Rational::from_integer(d.clone());
    match a2.cmp(&b2d) {
        Ordering::Greater => sa,
        Ordering::Less => sb,
        Ordering::Equal => Ordering::Equal,
    }
}

impl QuadraticNumber {
    /// Builds `a + b√d`; `d` must be square-free (checked in debug builds).
    pub fn new(a: Rational, b: Rational, d: u64) -> Self {
        debug_assert!(crate::numbertheory::is_squarefree(d) || d == 0);
        let mut q = QuadraticNumber { a, b, d };
        q.normalize();
        q
    }

    /// `a + b√n` for an arbitrary `n ≥ 0`, extracting square factors.
    pub fn with_radicand(a: Rational, b: Rational, n: u64) -> Self {
        if n == 0 {
            return Self::rational(a);
        }
        let sf = crate::numbertheory::squarefree_part(n);
        Self::new(a, b * Rational::from_integer(BigInt::from(sf.y)), sf.x)
    }

    pub fn rational(a: Rational) -> Self {
        QuadraticNumber { a, b: Rational::zero(), d: 1 }
    }

    pub fn from_int(n: i64) -> Self {
        Self::rational(Rational::from_integer(n.into()))
    }

    pub fn zero() -> Self {
        Self::from_int(0)
    }

    pub fn one() -> Self {
        Self::from_int(1)
    }

    /// `√n` for `n ≥ 0`.
    pub fn sqrt(n: u64) -> Self {
        Self::with_radicand(Rational::zero(), Rational::one(), n)
    }

    fn normalize(&mut self) {
        if self.d == 0 {
            self.b = Rational::zero();
            self.d = 1;
        } else if self.d == 1 {
            self.a = &self.a + &self.b;
            self.b = Rational::zero();
        } else if self.b.is_zero() {
            self.d = 1;
        }
    }

    pub fn a(&self) -> &Rational {
        &self.a
    }

    pub fn b(&self) -> &Rational {
        &self.b
    }

    /// Radicand; `1` for rationals.
    pub fn radicand(&self) -> u64 {
        self.d
    }

    pub fn is_rational(&self) -> bool {
        self.b.is_zero()
    }

    pub fn as_rational(&self) -> Option<&Rational> {
        self.is_rational().then_some(&self.a)
    }

    pub fn conj(&self) -> Self {
        QuadraticNumber { a: self.a.clone(), b: -&self.b, d: self.d }
    }

    /// Field norm `a² − b²d`.
    pub fn norm(&self) -> Rational {
        &self.a * &self.a - &self.b * &self.b * Rational::from_integer(self.d.into())
    }

    pub fn trace(&self) -> Rational {
        &self.a + &self.a
    }

    pub fn signum(&self) -> Ordering {
        sign_of(&self.a, &self.b, &BigInt::from(self.d))
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    /// Common radicand of two numbers, if they live in one field.
    pub fn common_field(&self, other: &Self) -> Option<u64> {
        match (self.is_rational(), other.is_rational()) {
            (true, _) => Some(other.d),
            (_, true) => Some(self.d),
            _ if self.d == other.d => Some(self.d),
            _ => None,
        }
    }

    pub fn checked_add(&self, rhs: &Self) -> Option<Self> {
        let d = self.common_field(rhs)?;
        Some(Self::new(&self.a + &rhs.a, &self.b + &rhs.b, d))
    }

    pub fn checked_mul(&self, rhs: &Self) -> Option<Self> {
        let d = self.common_field(rhs)?;
        let dd = Rational::from_integer(d.into());
        Some(Self::new(
            &self.a * &rhs.a + &self.b * &rhs.b * dd,
            &self.a * &rhs.b + &self.b * &rhs.a,
            d,
        ))
    }

    pub fn inverse(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        let n = self.norm();
        Some(Self::new(&self.a / &n, -&self.b / &n, self.d))
    }

    /// Exact comparison. Panics if the numbers lie in different quadratic
    /// fields; use [`AlgebraicReal`](super::AlgebraicReal) for those.
    pub fn cmp_exact(&self, other: &Self) -> Ordering {
        (self - other).signum()
    }

    /// Primitive integer minimal polynomial, positive leading coefficient.
    pub fn minimal_poly(&self) -> IntPoly {
        if self.is_rational() {
            return IntPoly::linear_root(&self.a);
        }
        // x² − 2a x + (a² − b²d), cleared of denominators.
        let c1 = -self.trace();
        let c0 = self.norm();
        let den = c1.denom().lcm(c0.denom());
        let scale = Rational::from_integer(den.clone());
        let p = IntPoly::new(vec![
            (c0 * &scale).to_integer(),
            (c1 * &scale).to_integer(),
            den,
        ]);
        p.normalized()
    }

    pub fn to_f64(&self) -> f64 {
        let a = self.a.to_f64().unwrap_or(f64::NAN);
        let b = self.b.to_f64().unwrap_or(f64::NAN);
        a + b * (self.d as f64).sqrt()
    }

    pub fn floor(&self) -> BigInt {
        // Start from the float estimate, then correct exactly.
        let mut n = BigInt::from(self.to_f64().floor() as i128);
        loop {
            let nq = Self::rational(Rational::from_integer(n.clone()));
            if self.cmp_exact(&nq) == Ordering::Less {
                n -= 1;
                continue;
            }
            let n1 = Self::rational(Rational::from_integer(&n + 1));
            if self.cmp_exact(&n1) != Ordering::Less {
                n += 1;
                continue;
            }
            return n;
        }
    }
}

fn fmt_rat(q: &Rational) -> String {
    if q.denom().is_one() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

impl fmt::Display for QuadraticNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_rational() {
            return write!(f, "{}", fmt_rat(&self.a));
        }
        let bmag = self.b.abs();
        let surd = if bmag.is_one() {
            format!("√{}", self.d)
        } else {
            format!("{}√{}", fmt_rat(&bmag), self.d)
        };
        if self.a.is_zero() {
            let sign = if self.b.is_negative() { "-" } else { "" };
            write!(f, "{sign}{surd}")
        } else {
            let sign = if self.b.is_negative() { '-' } else { '+' };
            write!(f, "{} {sign} {surd}", fmt_rat(&self.a))
        }
    }
}

impl Neg for &QuadraticNumber {
    type Output = QuadraticNumber;
    fn neg(self) -> QuadraticNumber {
        QuadraticNumber { a: -&self.a, b: -&self.b, d: self.d }
    }
}

impl Neg for QuadraticNumber {
    type Output = QuadraticNumber;
    fn neg(self) -> QuadraticNumber {
        -&self
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident, $body:expr) => {
        impl $trait<&QuadraticNumber> for &QuadraticNumber {
            type Output = QuadraticNumber;
            fn $method(self, rhs: &QuadraticNumber) -> QuadraticNumber {
                let f: fn(&QuadraticNumber, &QuadraticNumber) -> QuadraticNumber = $body;
                f(self, rhs)
            }
        }
        impl $trait<QuadraticNumber> for QuadraticNumber {
            type Output = QuadraticNumber;
            fn $method(self, rhs: QuadraticNumber) -> QuadraticNumber {
                (&self).$method(&rhs)
            }
        }
        impl $trait<&QuadraticNumber> for QuadraticNumber {
            type Output = QuadraticNumber;
            fn $method(self, rhs: &QuadraticNumber) -> QuadraticNumber {
                (&self).$method(rhs)
            }
        }
    };
}

forward_binop!(Add, add, |x, y| x
    .checked_add(y)
    .expect("mismatched quadratic fields"));
forward_binop!(Sub, sub, |x, y| x
    .checked_add(&-y)
    .expect("mismatched quadratic fields"));
forward_binop!(Mul, mul, |x, y| x
    .checked_mul(y)
    .expect("mismatched quadratic fields"));
forward_binop!(Div, div, |x, y| x
    .checked_mul(&y.inverse().expect("division by zero"))
    .expect("mismatched quadratic fields"));
