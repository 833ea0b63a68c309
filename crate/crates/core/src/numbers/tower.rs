//! Numbers `a + b√D` with `a, b ∈ Q(ζ_N)` and `D` square-free.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::Zero;

use super::cyclotomic::Cyclotomic;
use super::Rational;

#[derive(Clone, Debug)]
pub struct TowerNumber {
    a: Cyclotomic,
    b: Cyclotomic,
    d: u64,
}

impl TowerNumber {
    pub fn new(a: Cyclotomic, b: Cyclotomic, d: u64) -> Self {
        if d == 1 {
            return TowerNumber { a: &a + &b, b: Cyclotomic::zero(1), d: 1 };
        }
        TowerNumber { a, b, d }
    }

    pub fn from_cyclotomic(a: Cyclotomic) -> Self {
        TowerNumber { a, b: Cyclotomic::zero(1), d: 1 }
    }

    pub fn from_int(k: i64) -> Self {
        Self::from_cyclotomic(Cyclotomic::from_int(1, k))
    }

    pub fn zero() -> Self {
        Self::from_int(0)
    }

    /// `√m`, with the square part of `m` moved into the coefficient.
    pub fn sqrt(m: u64) -> Self {
        let sf = crate::numbertheory::squarefree_part(m);
        let y = Cyclotomic::from_int(1, sf.y as i64);
        if sf.x == 1 {
            Self::from_cyclotomic(y)
        } else {
            TowerNumber { a: Cyclotomic::zero(1), b: y, d: sf.x }
        }
    }

    pub fn parts(&self) -> (&Cyclotomic, &Cyclotomic, u64) {
        (&self.a, &self.b, self.d)
    }

    pub fn radicand(&self) -> u64 {
        self.d
    }

    fn has_surd(&self) -> bool {
        self.d != 1 && !self.b.is_zero()
    }

    fn common_radicand(&self, other: &Self) -> u64 {
        match (self.has_surd(), other.has_surd()) {
            (true, true) => {
                assert_eq!(self.d, other.d, "radicands differ: {} and {}", self.d, other.d);
                self.d
            }
            (true, false) => self.d,
            (false, true) => other.d,
            (false, false) => 1,
        }
    }

    pub fn scale(&self, q: &Rational) -> Self {
        TowerNumber { a: self.a.scale(q), b: self.b.scale(q), d: self.d }
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero() || self.to_cyclotomic().is_zero()
    }

    /// The same number inside a single cyclotomic field.
    pub fn to_cyclotomic(&self) -> Cyclotomic {
        if !self.has_surd() {
            return self.a.clone();
        }
        &self.a + &(&self.b * &Cyclotomic::sqrt_int(self.d))
    }

    pub fn to_complex(&self) -> num_complex::Complex64 {
        let s = (self.d as f64).sqrt();
        self.a.to_complex() + self.b.to_complex() * s
    }

    pub fn as_rational(&self) -> Option<Rational> {
        if self.b.is_zero() || self.d == 1 {
            return (&self.a + &self.b).as_rational();
        }
        self.to_cyclotomic().as_rational()
    }
}

impl PartialEq for TowerNumber {
    fn eq(&self, other: &Self) -> bool {
        // Componentwise equality is sufficient; otherwise compare in a
        // common cyclotomic field, since √D may lie in Q(ζ_N).
        if self.a == other.a && (self.b == other.b && self.d == other.d) {
            return true;
        }
        (self - other).is_zero()
    }
}

impl Eq for TowerNumber {}

impl Add for &TowerNumber {
    type Output = TowerNumber;
    fn add(self, rhs: &TowerNumber) -> TowerNumber {
        let d = self.common_radicand(rhs);
        TowerNumber { a: &self.a + &rhs.a, b: &self.b + &rhs.b, d }
    }
}

impl Sub for &TowerNumber {
    type Output = TowerNumber;
    fn sub(self, rhs: &TowerNumber) -> TowerNumber {
        self + &(-rhs)
    }
}

impl Neg for &TowerNumber {
    type Output = TowerNumber;
    fn neg(self) -> TowerNumber {
        TowerNumber { a: -&self.a, b: -&self.b, d: self.d }
    }
}

impl Mul for &TowerNumber {
    type Output = TowerNumber;
    fn mul(self, rhs: &TowerNumber) -> TowerNumber {
        let d = self.common_radicand(rhs);
        if d == 1 {
            let x = &self.a + &self.b;
            let y = &rhs.a + &rhs.b;
            return TowerNumber::from_cyclotomic(&x * &y);
        }
        let dd = Rational::from_integer(d.into());
        let bb = &self.b * &rhs.b;
        let a = &(&self.a * &rhs.a) + &bb.scale(&dd);
        let b = &(&self.a * &rhs.b) + &(&self.b * &rhs.a);
        TowerNumber { a, b, d }
    }
}

impl fmt::Display for TowerNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if !self.has_surd() {
            return write!(f, "{}", self.a);
        }
        if self.a.is_zero() {
            write!(f, "({})·√{}", self.b, self.d)
        } else {
            write!(f, "{} + ({})·√{}", self.a, self.b, self.d)
        }
    }
}

impl Zero for TowerNumber {
    fn zero() -> Self {
        TowerNumber::zero()
    }
    fn is_zero(&self) -> bool {
        TowerNumber::is_zero(self)
    }
}

impl Add for TowerNumber {
    type Output = TowerNumber;
    fn add(self, rhs: TowerNumber) -> TowerNumber {
        &self + &rhs
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn surd_arithmetic() {
        let s3 = TowerNumber::sqrt(3);
        assert_eq!(&s3 * &s3, TowerNumber::from_int(3));
        let s12 = TowerNumber::sqrt(12);
        assert_eq!(s12, &TowerNumber::from_int(2) * &s3);
        assert_eq!(TowerNumber::sqrt(9), TowerNumber::from_int(3));
    }

    #[test]
    fn surd_inside_cyclotomic_field() {
        // √5 = 1 + 2(ζ₅ + ζ₅⁴)
        let z = &Cyclotomic::root_of_unity(5, 1) + &Cyclotomic::root_of_unity(5, 4);
        let inside = TowerNumber::from_cyclotomic(&Cyclotomic::from_int(5, 1) + &z.scale(&Rational::from_integer(2.into())));
        assert_eq!(inside, TowerNumber::sqrt(5));
        assert_ne!(inside, TowerNumber::sqrt(3).scale(&Rational::from_integer(1.into())));
    }
}
