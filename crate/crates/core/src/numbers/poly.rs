//! Dense integer polynomials with exact real-root isolation.
//!
//! Root isolation uses signed primitive Sturm sequences over `Z[x]`, so no
//! rational arithmetic is needed except at evaluation points.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// Integer polynomial, coefficients stored lowest degree first, never with a
/// trailing zero.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct IntPoly {
    coeffs: Vec<BigInt>,
}

/// Half-open isolating interval `(lo, hi]` for a single real root. When
/// `lo == hi` the root is exactly that rational number.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootInterval {
    pub lo: BigRational,
    pub hi: BigRational,
}

impl RootInterval {
    pub fn is_exact(&self) -> bool {
        self.lo == self.hi
    }

    pub fn width(&self) -> BigRational {
        &self.hi - &self.lo
    }

    pub fn midpoint(&self) -> BigRational {
        (&self.lo + &self.hi) / BigRational::from_integer(BigInt::from(2))
    }
}

impl IntPoly {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        IntPoly { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    /// Builds a polynomial from coefficients listed highest degree first.
    pub fn from_high_first(coeffs: &[BigInt]) -> Self {
        Self::new(coeffs.iter().rev().cloned().collect())
    }

    pub fn zero() -> Self {
        IntPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        IntPoly { coeffs: vec![BigInt::one()] }
    }

    pub fn constant(c: BigInt) -> Self {
        Self::new(vec![c])
    }

    /// `den * x - num`, the primitive linear polynomial vanishing at `q`.
    pub fn linear_root(q: &BigRational) -> Self {
        Self::new(vec![-q.numer().clone(), q.denom().clone()])
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Degree with the zero polynomial treated as degree 0.
    pub fn deg(&self) -> usize {
        self.degree().unwrap_or(0)
    }

    pub fn leading(&self) -> BigInt {
        self.coeffs.last().cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn content(&self) -> BigInt {
        self.coeffs
            .iter()
            .fold(BigInt::zero(), |acc, c| acc.gcd(c))
    }

    /// Divides out the (positive) content. Signs are preserved.
    pub fn primitive_part(&self) -> Self {
        let c = self.content();
        if c.is_zero() || c.is_one() {
            return self.clone();
        }
        IntPoly {
            coeffs: self.coeffs.iter().map(|a| a / &c).collect(),
        }
    }

    /// Primitive part scaled so the leading coefficient is positive.
    pub fn normalized(&self) -> Self {
        let p = self.primitive_part();
        if p.leading().is_negative() {
            -p
        } else {
            p
        }
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * BigInt::from(i))
                .collect(),
        )
    }

    pub fn scale(&self, k: &BigInt) -> Self {
        Self::new(self.coeffs.iter().map(|c| c * k).collect())
    }

    pub fn eval_int(&self, x: &BigInt) -> BigInt {
        self.coeffs
            .iter()
            .rev()
            .fold(BigInt::zero(), |acc, c| acc * x + c)
    }

    /// Sign of `p(q)`, computed from the homogenised integer form
    /// `sum a_i num^i den^(n-i)` so no fractions are built.
    pub fn sign_at(&self, q: &BigRational) -> Ordering {
        if self.is_zero() {
            return Ordering::Equal;
        }
        let num = q.numer();
        let den = q.denom();
        let n = self.coeffs.len() - 1;
        let mut acc = BigInt::zero();
        let mut num_pow = BigInt::one();
        let mut den_pows = Vec::with_capacity(n + 1);
        let mut d = BigInt::one();
        for _ in 0..=n {
            den_pows.push(d.clone());
            d *= den;
        }
        for (i, c) in self.coeffs.iter().enumerate() {
            if !c.is_zero() {
                acc += c * &num_pow * &den_pows[n - i];
            }
            num_pow *= num;
        }
        acc.sign_ord()
    }

    pub fn eval_f64(&self, x: f64) -> f64 {
        self.coeffs
            .iter()
            .rev()
            .fold(0.0, |acc, c| acc * x + c.to_f64().unwrap_or(f64::NAN))
    }

    /// Pseudo-remainder: `lc(b)^(deg a - deg b + 1) * a mod b`.
    pub fn pseudo_rem(&self, b: &IntPoly) -> IntPoly {
        assert!(!b.is_zero(), "pseudo-remainder by zero polynomial");
        let db = b.deg();
        if self.is_zero() || self.deg() < db {
            return self.clone();
        }
        let lb = b.leading();
        let mut r = self.coeffs.clone();
        let mut steps = self.deg() - db + 1;
        while r.len() > db && !r.is_empty() {
            let shift = r.len() - 1 - db;
            let lr = r.last().cloned().unwrap();
            for c in r.iter_mut() {
                *c *= &lb;
            }
            for (i, bc) in b.coeffs.iter().enumerate() {
                r[i + shift] -= &lr * bc;
            }
            r.pop();
            while r.last().is_some_and(Zero::is_zero) {
                r.pop();
            }
            steps -= 1;
        }
        let mut out = IntPoly::new(r);
        if steps > 0 {
            out = out.scale(&num_traits::pow(lb, steps));
        }
        out
    }

    /// Exact quotient over `Z[x]`, or `None` if `b` does not divide `self`
    /// with an integral quotient.
    pub fn div_exact(&self, b: &IntPoly) -> Option<IntPoly> {
        if b.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(IntPoly::zero());
        }
        if self.deg() < b.deg() {
            return None;
        }
        let db = b.deg();
        let lb = b.leading();
        let mut r = self.coeffs.clone();
        let mut q = vec![BigInt::zero(); self.deg() - db + 1];
        for shift in (0..q.len()).rev() {
            let top = r[shift + db].clone();
            if top.is_zero() {
                continue;
            }
            let (quot, rem) = top.div_rem(&lb);
            if !rem.is_zero() {
                return None;
            }
            for (i, bc) in b.coeffs.iter().enumerate() {
                r[i + shift] -= &quot * bc;
            }
            q[shift] = quot;
        }
        if r.iter().all(Zero::is_zero) {
            Some(IntPoly::new(q))
        } else {
            None
        }
    }

    /// Greatest common divisor, normalized (primitive, positive leading
    /// coefficient). The gcd of two constants is `1`.
    pub fn gcd(&self, other: &IntPoly) -> IntPoly {
        let mut a = self.primitive_part();
        let mut b = other.primitive_part();
        if a.is_zero() {
            return if b.is_zero() { IntPoly::one() } else { b.normalized() };
        }
        if a.deg() < b.deg() {
            std::mem::swap(&mut a, &mut b);
        }
        while !b.is_zero() {
            let r = a.pseudo_rem(&b);
            a = b;
            b = r.primitive_part();
        }
        if a.deg() == 0 {
            IntPoly::one()
        } else {
            a.normalized()
        }
    }

    pub fn squarefree_part(&self) -> IntPoly {
        if self.deg() == 0 {
            return self.normalized();
        }
        let g = self.gcd(&self.derivative());
        self.normalized()
            .div_exact(&g)
            .expect("gcd divides polynomial")
            .normalized()
    }

    /// Square-free decomposition: returns `(g_i, i)` with each `g_i`
    /// square-free, pairwise coprime and `self = c * prod g_i^i`. Factors
    /// equal to `1` are skipped. All divisors are primitive, so every
    /// division below is exact over `Z[x]`.
    pub fn squarefree_decomposition(&self) -> Vec<(IntPoly, usize)> {
        let mut out = Vec::new();
        if self.deg() == 0 {
            return out;
        }
        let a = self.normalized();
        let mut c = a.gcd(&a.derivative());
        let mut w = a.div_exact(&c).expect("gcd divides").normalized();
        let mut i = 1;
        while w.deg() > 0 {
            let y = w.gcd(&c);
            let z = w.div_exact(&y).expect("gcd divides w").normalized();
            if z.deg() > 0 {
                out.push((z, i));
            }
            c = c.div_exact(&y).expect("gcd divides c").normalized();
            w = y;
            i += 1;
        }
        out
    }

    /// Signed primitive Sturm sequence of `self`.
    pub fn sturm_chain(&self) -> Vec<IntPoly> {
        let p0 = self.primitive_part();
        let p1 = p0.derivative().primitive_part();
        let mut chain = vec![p0];
        if p1.is_zero() {
            return chain;
        }
        chain.push(p1);
        loop {
            let n = chain.len();
            let a = &chain[n - 2];
            let b = &chain[n - 1];
            if b.deg() == 0 {
                break;
            }
            let delta = a.deg() - b.deg() + 1;
            let r = a.pseudo_rem(b);
            if r.is_zero() {
                break;
            }
            // rem over Q is r / lc(b)^delta; Sturm needs -rem.
            let flip = b.leading().is_negative() && delta % 2 == 1;
            let next = if flip { r } else { -r };
            chain.push(next.primitive_part());
        }
        chain
    }

    /// Strict upper bound on the absolute value of every complex root.
    pub fn root_bound(&self) -> BigInt {
        let lc = self.leading().abs();
        let max = self.coeffs[..self.coeffs.len().saturating_sub(1)]
            .iter()
            .map(|c| c.abs())
            .max()
            .unwrap_or_else(BigInt::zero);
        let (q, r) = max.div_rem(&lc);
        q + if r.is_zero() { 1 } else { 2 }
    }

    /// Number of distinct real roots of a square-free polynomial.
    pub fn count_real_roots(&self) -> usize {
        if self.deg() == 0 {
            return 0;
        }
        let chain = self.sturm_chain();
        let at_neg: Vec<Ordering> = chain
            .iter()
            .map(|p| {
                let s = p.leading().sign_ord();
                if p.deg() % 2 == 1 {
                    s.reverse()
                } else {
                    s
                }
            })
            .collect();
        let at_pos: Vec<Ordering> = chain.iter().map(|p| p.leading().sign_ord()).collect();
        variations(&at_neg) - variations(&at_pos)
    }

    /// Isolates every real root of a square-free polynomial. Intervals come
    /// back sorted; inexact ones have non-root endpoints.
    pub fn isolate_real_roots(&self) -> Vec<RootInterval> {
        if self.deg() == 0 {
            return Vec::new();
        }
        let chain = self.sturm_chain();
        let bound = BigRational::from_integer(self.root_bound());
        let lo = -bound.clone();
        let hi = bound;
        let vlo = sturm_variations(&chain, &lo);
        let vhi = sturm_variations(&chain, &hi);
        let mut out = Vec::new();
        let mut stack = vec![(lo, hi, vlo, vhi)];
        while let Some((a, b, va, vb)) = stack.pop() {
            let count = va - vb;
            if count == 0 {
                continue;
            }
            if count == 1 {
                out.push(RootInterval { lo: a, hi: b });
                continue;
            }
            let m = self.split_point(&a, &b);
            let vm = sturm_variations(&chain, &m);
            stack.push((a, m.clone(), va, vm));
            stack.push((m, b, vm, vb));
        }
        out.sort_by(|x, y| x.lo.cmp(&y.lo));
        out
    }

    /// A rational strictly between `a` and `b` that is not a root.
    fn split_point(&self, a: &BigRational, b: &BigRational) -> BigRational {
        let two = BigInt::from(2);
        let mut num = BigInt::one();
        let mut den = two.clone();
        loop {
            let m = a + (b - a) * BigRational::new(num.clone(), den.clone());
            if self.sign_at(&m) != Ordering::Equal {
                return m;
            }
            // Walk through 1/2, 1/3, 2/5, 3/7, ... until off a root.
            num += 1;
            den = &den * &two + BigInt::one();
        }
    }

    /// Bisects an isolating interval (non-root endpoints, single root)
    /// until its width is at most `width`, or returns an exact root.
    pub fn refine(&self, iv: &RootInterval, width: &BigRational) -> RootInterval {
        if iv.is_exact() {
            return iv.clone();
        }
        let mut lo = iv.lo.clone();
        let mut hi = iv.hi.clone();
        let slo = self.sign_at(&lo);
        debug_assert!(slo != Ordering::Equal);
        while &(&hi - &lo) > width {
            let m = (&lo + &hi) / BigRational::from_integer(BigInt::from(2));
            match self.sign_at(&m) {
                Ordering::Equal => {
                    return RootInterval { lo: m.clone(), hi: m };
                }
                s if s == slo => lo = m,
                _ => hi = m,
            }
        }
        RootInterval { lo, hi }
    }

    /// Number of roots of `self` in the open interval `(a, b)`.
    pub fn count_roots_open(&self, a: &BigRational, b: &BigRational) -> usize {
        if self.deg() == 0 || a >= b {
            return 0;
        }
        let sf = self.squarefree_part();
        let chain = sf.sturm_chain();
        let va = sturm_variations(&chain, a);
        let vb = sturm_variations(&chain, b);
        let mut n = va - vb;
        if sf.sign_at(b) == Ordering::Equal {
            n -= 1;
        }
        n
    }
}

fn variations(signs: &[Ordering]) -> usize {
    let mut last = Ordering::Equal;
    let mut n = 0;
    for &s in signs {
        if s == Ordering::Equal {
            continue;
        }
        if last != Ordering::Equal && s != last {
            n += 1;
        }
        last = s;
    }
    n
}

fn sturm_variations(chain: &[IntPoly], x: &BigRational) -> usize {
    let signs: Vec<Ordering> = chain.iter().map(|p| p.sign_at(x)).collect();
    variations(&signs)
}

trait SignOrd {
    fn sign_ord(&self) -> Ordering;
}

impl SignOrd for BigInt {
    fn sign_ord(&self) -> Ordering {
        self.cmp(&BigInt::zero())
    }
}

impl Neg for IntPoly {
    type Output = IntPoly;
    fn neg(self) -> IntPoly {
        IntPoly {
            coeffs: self.coeffs.into_iter().map(|c| -c).collect(),
        }
    }
}

impl Add for &IntPoly {
    type Output = IntPoly;
    fn add(self, rhs: &IntPoly) -> IntPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut out = vec![BigInt::zero(); n];
        for (i, c) in self.coeffs.iter().enumerate() {
            out[i] += c;
        }
        for (i, c) in rhs.coeffs.iter().enumerate() {
            out[i] += c;
        }
        IntPoly::new(out)
    }
}

impl Sub for &IntPoly {
    type Output = IntPoly;
    fn sub(self, rhs: &IntPoly) -> IntPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut out = vec![BigInt::zero(); n];
        for (i, c) in self.coeffs.iter().enumerate() {
            out[i] += c;
        }
        for (i, c) in rhs.coeffs.iter().enumerate() {
            out[i] -= c;
        }
        IntPoly::new(out)
    }
}

impl Mul for &IntPoly {
    type Output = IntPoly;
    fn mul(self, rhs: &IntPoly) -> IntPoly {
        if self.is_zero() || rhs.is_zero() {
            return IntPoly::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        IntPoly::new(out)
    }
}

impl fmt::Display for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let mag = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            first = false;
            let show_coeff = !mag.is_one() || i == 0;
            if show_coeff {
                write!(f, "{mag}")?;
            }
            match i {
                0 => {}
                1 => write!(f, "x")?,
                _ => write!(f, "x^{i}")?,
            }
        }
        Ok(())
    }
}
