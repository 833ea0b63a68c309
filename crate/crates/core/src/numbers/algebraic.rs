//! Exact real algebraic numbers: quadratic irrationals in closed form, and
//! roots of higher-degree integer polynomials given by isolating intervals.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::{IntPoly, QuadraticNumber, Rational, RootInterval};

/// Default isolating-interval width, `2⁻⁶⁴`.
pub fn default_width() -> Rational {
    Rational::new(BigInt::one(), BigInt::one() << 64)
}

#[derive(Clone, Debug)]
pub enum AlgebraicReal {
    Quadratic(QuadraticNumber),
    /// The unique root of a square-free `poly` in the open interval
    /// `(lo, hi)`; neither endpoint is a root.
    Isolated { poly: IntPoly, lo: Rational, hi: Rational },
}

/// One distinct real root of a polynomial together with its multiplicity.
#[derive(Clone, Debug)]
pub struct RealRoot {
    pub value: AlgebraicReal,
    pub multiplicity: usize,
}

/// All roots of an integer polynomial, with real roots in exact form.
#[derive(Clone, Debug)]
pub struct RootFactorization {
    /// Distinct real roots in increasing order.
    pub real: Vec<RealRoot>,
    /// Number of non-real roots counted with multiplicity.
    pub nonreal: usize,
}

impl AlgebraicReal {
    pub fn rational(q: Rational) -> Self {
        AlgebraicReal::Quadratic(QuadraticNumber::rational(q))
    }

    pub fn from_int(n: i64) -> Self {
        AlgebraicReal::Quadratic(QuadraticNumber::from_int(n))
    }

    pub fn as_quadratic(&self) -> Option<&QuadraticNumber> {
        match self {
            AlgebraicReal::Quadratic(q) => Some(q),
            AlgebraicReal::Isolated { .. } => None,
        }
    }

    pub fn as_rational(&self) -> Option<&Rational> {
        self.as_quadratic().and_then(QuadraticNumber::as_rational)
    }

    pub fn is_rational(&self) -> bool {
        self.as_rational().is_some()
    }

    /// Degree of the number over the rationals, when known exactly. An
    /// isolated root reports the degree of its defining polynomial, an upper
    /// bound.
    pub fn degree_bound(&self) -> usize {
        match self {
            AlgebraicReal::Quadratic(q) if q.is_rational() => 1,
            AlgebraicReal::Quadratic(_) => 2,
            AlgebraicReal::Isolated { poly, .. } => poly.deg(),
        }
    }

    pub fn to_f64(&self) -> f64 {
        match self {
            AlgebraicReal::Quadratic(q) => q.to_f64(),
            AlgebraicReal::Isolated { poly, lo, hi } => {
                let r = poly.refine(
                    &RootInterval { lo: lo.clone(), hi: hi.clone() },
                    &Rational::new(BigInt::one(), BigInt::one() << 60),
                );
                let m = r.midpoint();
                m.numer().to_f64().unwrap_or(f64::NAN) / m.denom().to_f64().unwrap_or(f64::NAN)
            }
        }
    }

    /// A polynomial and interval pinning the number down. For rationals the
    /// interval is the exact point.
    pub fn isolating_data(&self) -> (IntPoly, RootInterval) {
        match self {
            AlgebraicReal::Isolated { poly, lo, hi } => {
                (poly.clone(), RootInterval { lo: lo.clone(), hi: hi.clone() })
            }
            AlgebraicReal::Quadratic(q) => {
                let p = q.minimal_poly();
                if let Some(r) = q.as_rational() {
                    return (p, RootInterval { lo: r.clone(), hi: r.clone() });
                }
                let target = AlgebraicReal::Quadratic(q.clone());
                let iv = p
                    .isolate_real_roots()
                    .into_iter()
                    .find(|iv| target.cmp_rational(&iv.lo) == Ordering::Greater
                        && target.cmp_rational(&iv.hi) != Ordering::Greater)
                    .expect("quadratic lies in one of its isolating intervals");
                (p, iv)
            }
        }
    }

    /// Compares with a rational number exactly.
    pub fn cmp_rational(&self, r: &Rational) -> Ordering {
        match self {
            AlgebraicReal::Quadratic(q) => {
                q.cmp_exact(&QuadraticNumber::rational(r.clone()))
            }
            AlgebraicReal::Isolated { poly, lo, hi } => {
                if r <= lo {
                    return Ordering::Greater;
                }
                if r >= hi {
                    return Ordering::Less;
                }
                let s = poly.sign_at(r);
                if s == Ordering::Equal {
                    Ordering::Equal
                } else if s == poly.sign_at(lo) {
                    Ordering::Greater
                } else {
                    Ordering::Less
                }
            }
        }
    }

    /// `self / n` for a positive integer `n`.
    pub fn div_int(&self, n: u64) -> Self {
        assert!(n > 0, "division by zero");
        let nq = Rational::from_integer(n.into());
        match self {
            AlgebraicReal::Quadratic(q) => {
                AlgebraicReal::Quadratic(q / &QuadraticNumber::rational(nq))
            }
            AlgebraicReal::Isolated { poly, lo, hi } => {
                // α/n is a root of p(n·y).
                let nb = BigInt::from(n);
                let mut pow = BigInt::one();
                let mut coeffs = Vec::with_capacity(poly.coeffs().len());
                for c in poly.coeffs() {
                    coeffs.push(c * &pow);
                    pow *= &nb;
                }
                AlgebraicReal::Isolated {
                    poly: IntPoly::new(coeffs).primitive_part(),
                    lo: lo / &nq,
                    hi: hi / &nq,
                }
            }
        }
    }

    /// The other real roots of the defining polynomial (for a quadratic, its
    /// conjugate). These include every real Galois conjugate.
    pub fn real_conjugates(&self) -> Vec<AlgebraicReal> {
        match self {
            AlgebraicReal::Quadratic(q) if q.is_rational() => Vec::new(),
            AlgebraicReal::Quadratic(q) => vec![AlgebraicReal::Quadratic(q.conj())],
            AlgebraicReal::Isolated { poly, .. } => {
                let sf = poly.squarefree_part();
                let roots = sf.isolate_real_roots();
                (0..roots.len())
                    .map(|i| AlgebraicReal::from_interval(&sf, roots[i].clone()))
                    .filter(|r| r != self)
                    .collect()
            }
        }
    }

    /// Narrows an isolating interval; quadratics are returned unchanged.
    pub fn refined(&self, width: &Rational) -> Self {
        match self {
            AlgebraicReal::Quadratic(_) => self.clone(),
            AlgebraicReal::Isolated { poly, lo, hi } => {
                let r = poly.refine(&RootInterval { lo: lo.clone(), hi: hi.clone() }, width);
                if r.is_exact() {
                    AlgebraicReal::rational(r.lo)
                } else {
                    AlgebraicReal::Isolated { poly: poly.clone(), lo: r.lo, hi: r.hi }
                }
            }
        }
    }

    /// Exact total order on real algebraic numbers.
    pub fn cmp_exact(&self, other: &Self) -> Ordering {
        if let (AlgebraicReal::Quadratic(a), AlgebraicReal::Quadratic(b)) = (self, other) {
            if a.common_field(b).is_some() {
                return a.cmp_exact(b);
            }
        }
        if let Some(r) = other.as_rational() {
            return self.cmp_rational(r);
        }
        if let Some(r) = self.as_rational() {
            return other.cmp_rational(r).reverse();
        }
        let (p, mut a) = self.isolating_data();
        let (q, mut b) = other.isolating_data();
        let g = p.gcd(&q);
        loop {
            if a.hi <= b.lo {
                return Ordering::Less;
            }
            if b.hi <= a.lo {
                return Ordering::Greater;
            }
            if g.deg() > 0 {
                let lo = (&a.lo).max(&b.lo).clone();
                let hi = (&a.hi).min(&b.hi).clone();
                if g.count_roots_open(&lo, &hi) > 0 {
                    return Ordering::Equal;
                }
            }
            let wa = a.width() / Rational::from_integer(4.into());
            let wb = b.width() / Rational::from_integer(4.into());
            a = p.refine(&a, &wa);
            b = q.refine(&b, &wb);
            if a.is_exact() || b.is_exact() {
                let x = AlgebraicReal::from_interval(&p, a.clone());
                let y = AlgebraicReal::from_interval(&q, b.clone());
                return x.cmp_exact(&y);
            }
        }
    }

    fn from_interval(p: &IntPoly, iv: RootInterval) -> Self {
        if iv.is_exact() {
            AlgebraicReal::rational(iv.lo)
        } else {
            AlgebraicReal::Isolated { poly: p.clone(), lo: iv.lo, hi: iv.hi }
        }
    }

    /// Largest real root of `p`, or `None` if `p` has no real root.
    pub fn largest_real_root(p: &IntPoly, width: &Rational) -> Option<Self> {
        let sf = p.squarefree_part();
        let roots = sf.isolate_real_roots();
        let idx = roots.len().checked_sub(1)?;
        Some(classify_root(&sf, &roots, idx, width))
    }

    /// Every root of `p` with multiplicity; real roots exact and sorted.
    pub fn roots_of(p: &IntPoly, width: &Rational) -> RootFactorization {
        let mut real: Vec<RealRoot> = Vec::new();
        let mut nonreal = 0;
        for (g, mult) in p.squarefree_decomposition() {
            let roots = g.isolate_real_roots();
            nonreal += (g.deg() - roots.len()) * mult;
            for idx in 0..roots.len() {
                real.push(RealRoot {
                    value: classify_root(&g, &roots, idx, width),
                    multiplicity: mult,
                });
            }
        }
        real.sort_by(|a, b| a.value.cmp_exact(&b.value));
        RootFactorization { real, nonreal }
    }
}

/// Identifies the root `roots[idx]` of the square-free `p` as rational,
/// quadratic, or (failing both) an isolated root at the requested width.
/// Rational and quadratic factors are only detected for monic `p`.
fn classify_root(p: &IntPoly, roots: &[RootInterval], idx: usize, width: &Rational) -> AlgebraicReal {
    let iv = &roots[idx];
    if iv.is_exact() {
        return AlgebraicReal::rational(iv.lo.clone());
    }
    if p.deg() == 1 {
        let c = p.coeffs();
        return AlgebraicReal::rational(Rational::new(-c[0].clone(), c[1].clone()));
    }
    if p.deg() == 2 {
        if let Some(q) = quadratic_root_in(p, iv) {
            return AlgebraicReal::Quadratic(q);
        }
    }
    if p.leading().is_one() {
        let bound = p.root_bound();
        let w = Rational::new(BigInt::one(), BigInt::from(8) * (&bound + 1));
        let mine = p.refine(iv, &w);
        if let Some(r) = exact_or_integer(p, &mine) {
            return AlgebraicReal::rational(r);
        }
        for (j, other) in roots.iter().enumerate() {
            if j == idx {
                continue;
            }
            let theirs = p.refine(other, &w);
            let s = round(&(mine.midpoint() + theirs.midpoint()));
            let t = round(&(mine.midpoint() * theirs.midpoint()));
            let quad = IntPoly::new(vec![t, -s, BigInt::one()]);
            if p.div_exact(&quad).is_none() {
                continue;
            }
            if !changes_sign(&quad, &mine) || !changes_sign(&quad, &theirs) {
                continue;
            }
            if let Some(q) = quadratic_root_in(&quad, &mine) {
                return AlgebraicReal::Quadratic(q);
            }
        }
    }
    let r = p.refine(iv, width);
    AlgebraicReal::from_interval(p, r)
}

fn round(q: &Rational) -> BigInt {
    (q + Rational::new(BigInt::one(), BigInt::from(2))).floor().to_integer()
}

fn exact_or_integer(p: &IntPoly, iv: &RootInterval) -> Option<Rational> {
    if iv.is_exact() {
        return Some(iv.lo.clone());
    }
    let n = round(&iv.midpoint());
    let nq = Rational::from_integer(n.clone());
    (p.eval_int(&n).is_zero() && nq > iv.lo && nq <= iv.hi).then_some(nq)
}

fn changes_sign(q: &IntPoly, iv: &RootInterval) -> bool {
    if iv.is_exact() {
        return q.sign_at(&iv.lo) == Ordering::Equal;
    }
    let a = q.sign_at(&iv.lo);
    let b = q.sign_at(&iv.hi);
    a != Ordering::Equal && b != Ordering::Equal && a != b
}

/// The root of the quadratic `q` lying in `iv`, in closed form. Returns
/// `None` when the discriminant's square-free part does not fit in `u64`.
fn quadratic_root_in(q: &IntPoly, iv: &RootInterval) -> Option<QuadraticNumber> {
    let c = q.coeffs();
    let (c0, c1, c2) = (&c[0], &c[1], &c[2]);
    let disc: BigInt = c1 * c1 - BigInt::from(4) * c2 * c0;
    if disc.is_negative() {
        return None;
    }
    let two_a = Rational::from_integer(BigInt::from(2) * c2);
    let base = Rational::from_integer(-c1.clone()) / &two_a;
    let s = disc.sqrt();
    let candidates: Vec<QuadraticNumber> = if &s * &s == disc {
        let r = Rational::from_integer(s) / &two_a;
        vec![QuadraticNumber::rational(&base + &r), QuadraticNumber::rational(&base - &r)]
    } else {
        let n = disc.to_u64()?;
        let plus = QuadraticNumber::with_radicand(base.clone(), Rational::one() / &two_a, n);
        let minus = QuadraticNumber::with_radicand(base, -Rational::one() / &two_a, n);
        vec![plus, minus]
    };
    candidates.into_iter().find(|x| {
        let lo = QuadraticNumber::rational(iv.lo.clone());
        let hi = QuadraticNumber::rational(iv.hi.clone());
        if iv.is_exact() {
            x.cmp_exact(&lo) == Ordering::Equal
        } else {
            x.cmp_exact(&lo) == Ordering::Greater && x.cmp_exact(&hi) != Ordering::Greater
        }
    })
}

impl PartialEq for AlgebraicReal {
    fn eq(&self, other: &Self) -> bool {
        self.cmp_exact(other) == Ordering::Equal
    }
}

impl Eq for AlgebraicReal {}

impl PartialOrd for AlgebraicReal {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for AlgebraicReal {
    fn cmp(&self, other: &Self) -> Ordering {
        self.cmp_exact(other)
    }
}

impl From<QuadraticNumber> for AlgebraicReal {
    fn from(q: QuadraticNumber) -> Self {
        AlgebraicReal::Quadratic(q)
    }
}

impl fmt::Display for AlgebraicReal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AlgebraicReal::Quadratic(q) => write!(f, "{q}"),
            AlgebraicReal::Isolated { poly, .. } => {
                write!(f, "root of {poly} ≈ {:.12}", self.to_f64())
            }
        }
    }
}
