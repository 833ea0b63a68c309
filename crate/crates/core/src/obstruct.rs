//! Categorifiability obstructions as exact predicates with re-checkable
//! witnesses.
//!
//! Every test returns an [`ObstructionVerdict`]. A verdict only ever
//! eliminates a ring; passing every test says nothing about existence.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use serde::Serialize;
use serde_json::{json, Value};

use crate::dims::dimension_profile;
use crate::error::{FusionError, Result};
use crate::numbers::{AlgebraicReal, QuadraticNumber, Rational};
use crate::numbertheory::{exact_sqrt, is_prime, squarefree_part, totient};
use crate::ring::FusionRing;
use crate::serial::ser_quadratic;
use crate::structure::two_orbit_data;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum TestName {
    Noncommutative,
    Divisibility,
    SmallLevel,
    Elementary2Coarse,
    Elementary2Endgame,
    PrimeParity,
    PrimeXBound,
}

impl TestName {
    pub fn as_str(self) -> &'static str {
        match self {
            TestName::Noncommutative => "noncommutative",
            TestName::Divisibility => "divisibility",
            TestName::SmallLevel => "small_level",
            TestName::Elementary2Coarse => "elementary2_coarse",
            TestName::Elementary2Endgame => "elementary2_endgame",
            TestName::PrimeParity => "prime_parity",
            TestName::PrimeXBound => "prime_xbound",
        }
    }

    fn anchor(self) -> &'static str {
        match self {
            TestName::Noncommutative => "commutative two-orbit rings need r = 0 or r >= |H| - 1",
            TestName::Divisibility => "Galois conjugation of the double forces s | r when d is irrational",
            TestName::SmallLevel => "Siehler 2003 (MR1997336), Theorem 1.2",
            TestName::Elementary2Coarse => "induction budget vs. the 2/sqrt(3) roots-of-unity bound",
            TestName::Elementary2Endgame => "induction budget vs. the phi(2c)/sqrt(c) roots-of-unity bound",
            TestName::PrimeParity => "conductor of the double is even iff k is even",
            TestName::PrimeXBound => "phi(x)/sqrt(x) <= ((p+1)/(p-1)) sqrt(p + 1/m^2)",
        }
    }
}

impl fmt::Display for TestName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.pad(self.as_str())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Outcome {
    Eliminates,
    Passes,
    NotApplicable,
}

impl fmt::Display for Outcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.pad(match self {
            Outcome::Eliminates => "eliminates",
            Outcome::Passes => "passes",
            Outcome::NotApplicable => "not_applicable",
        })
    }
}

/// `lhs < rhs`, compared exactly.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Inequality {
    #[serde(serialize_with = "ser_quadratic")]
    pub lhs: QuadraticNumber,
    #[serde(serialize_with = "ser_quadratic")]
    pub rhs: QuadraticNumber,
}

impl Inequality {
    pub fn holds(&self) -> bool {
        let l = AlgebraicReal::Quadratic(self.lhs.clone());
        let r = AlgebraicReal::Quadratic(self.rhs.clone());
        l.cmp_exact(&r).is_lt()
    }
}

/// The data a verdict was decided from. [`Witness::decides`] recomputes
/// the outcome from it alone.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Witness {
    /// Eliminates iff `0 < r < order_h − 1`.
    OrbitBound { r: u64, order_h: u64 },
    /// Eliminates iff `r² + 4s` is not a square and `s ∤ r`.
    Divisibility { r: u64, s: u64 },
    /// Eliminates iff `0 < level < order` and not
    /// (`level = order − 1`, `G` cyclic, `order + 1` a prime power).
    SmallLevel { order: u64, level: u64, cyclic: bool },
    /// Eliminates iff every listed inequality holds.
    Inequalities { sides: Vec<Inequality> },
    /// Eliminates iff `k` is odd and `k ≠ 1`.
    Parity { k: u64 },
    /// No decision was made.
    Precondition,
}

impl Witness {
    pub fn decides(&self) -> Outcome {
        let elim = |b: bool| if b { Outcome::Eliminates } else { Outcome::Passes };
        match self {
            Witness::OrbitBound { r, order_h } => elim(*r > 0 && r + 1 < *order_h),
            Witness::Divisibility { r, s } => {
                let disc = u128::from(*r) * u128::from(*r) + 4 * u128::from(*s);
                elim(exact_sqrt(disc).is_none() && r % s != 0)
            }
            Witness::SmallLevel { order, level, cyclic } => {
                let small = *level > 0 && level < order;
                let exception = *level + 1 == *order && *cyclic && is_prime_power(order + 1);
                elim(small && !exception)
            }
            Witness::Inequalities { sides } => elim(!sides.is_empty() && sides.iter().all(Inequality::holds)),
            Witness::Parity { k } => elim(k % 2 == 1 && *k != 1),
            Witness::Precondition => Outcome::NotApplicable,
        }
    }
}

fn is_prime_power(n: u64) -> bool {
    n >= 2 && crate::numbertheory::factor(n).len() == 1
}

#[derive(Clone, Debug, Serialize)]
pub struct ObstructionVerdict {
    pub test_name: TestName,
    pub outcome: Outcome,
    /// Integer parameters the test was run with.
    pub certificate: Value,
    pub witness: Witness,
    pub anchor: &'static str,
    /// Human-readable explanation; names the failed precondition for
    /// `not_applicable`.
    pub reason: String,
}

impl ObstructionVerdict {
    fn decided(test_name: TestName, certificate: Value, witness: Witness, reason: String) -> Self {
        let outcome = witness.decides();
        ObstructionVerdict { test_name, outcome, certificate, witness, anchor: test_name.anchor(), reason }
    }

    fn not_applicable(test_name: TestName, reason: impl Into<String>) -> Self {
        ObstructionVerdict {
            test_name,
            outcome: Outcome::NotApplicable,
            certificate: Value::Null,
            witness: Witness::Precondition,
            anchor: test_name.anchor(),
            reason: reason.into(),
        }
    }

    /// Recomputes the outcome from the witness.
    pub fn recheck(&self) -> bool {
        self.witness.decides() == self.outcome
    }

    pub fn eliminates(&self) -> bool {
        self.outcome == Outcome::Eliminates
    }
}

fn q(n: impl Into<BigInt>) -> Rational {
    Rational::from_integer(n.into())
}

fn frac(n: impl Into<BigInt>, d: impl Into<BigInt>) -> Rational {
    Rational::new(n.into(), d.into())
}

// ---------------------------------------------------------------------
// Two-orbit and two-dimension tests

/// Closed form of [`obstruct_noncommutative`] for a commutative two-orbit
/// ring with parameters `r` and `|H|`.
pub fn noncommutative_criterion(r: u64, order_h: u64) -> ObstructionVerdict {
    let w = Witness::OrbitBound { r, order_h };
    let reason = if w.decides() == Outcome::Eliminates {
        format!("commutative with 0 < r = {r} < |H| - 1 = {}", order_h - 1)
    } else {
        format!("r = {r} is 0 or at least |H| - 1 = {}", order_h.saturating_sub(1))
    };
    ObstructionVerdict::decided(TestName::Noncommutative, json!({ "r": r, "order_h": order_h }), w, reason)
}

pub fn obstruct_noncommutative(ring: &FusionRing) -> ObstructionVerdict {
    let t = TestName::Noncommutative;
    let data = match two_orbit_data(ring) {
        Ok(d) => d,
        Err(e) => return ObstructionVerdict::not_applicable(t, format!("not a two-orbit ring: {e}")),
    };
    if !ring.is_commutative() {
        return ObstructionVerdict::not_applicable(t, "ring is noncommutative");
    }
    match dimension_profile(ring) {
        Ok(p) => noncommutative_criterion(p.r, data.order_h() as u64),
        Err(e) => ObstructionVerdict::not_applicable(t, format!("no two-dimension profile: {e}")),
    }
}

/// Closed form of [`obstruct_divisibility`] for `d² = rd + s`.
pub fn divisibility_criterion(r: u64, s: u64) -> ObstructionVerdict {
    let t = TestName::Divisibility;
    let disc = u128::from(r) * u128::from(r) + 4 * u128::from(s);
    if exact_sqrt(disc).is_some() {
        return ObstructionVerdict::not_applicable(t, format!("d is rational (r^2 + 4s = {disc} is a square)"));
    }
    let reason = if r % s == 0 { format!("s = {s} divides r = {r}") } else { format!("d irrational and s = {s} does not divide r = {r}") };
    ObstructionVerdict::decided(t, json!({ "r": r, "s": s }), Witness::Divisibility { r, s }, reason)
}

pub fn obstruct_divisibility(ring: &FusionRing) -> ObstructionVerdict {
    match dimension_profile(ring) {
        Ok(p) if p.is_two_dimension => divisibility_criterion(p.r, p.s),
        Ok(_) => ObstructionVerdict::not_applicable(TestName::Divisibility, "every basis element is invertible"),
        Err(e) => ObstructionVerdict::not_applicable(TestName::Divisibility, format!("not two-dimension: {e}")),
    }
}

/// Partner coefficients under `d ↦ d₋` for an element of dimension `a + bd`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct GaloisPartner {
    pub a: i64,
    pub b: i64,
    pub partner_b: i64,
    /// `b < 0` or `b > ak`.
    pub violation: bool,
}

/// With `d` a root of `x² − k|H|x − |H|`, the element of dimension
/// `a + bd` is paired with one of dimension `a + (ak − b)d`.
pub fn galois_partner(a: i64, b: i64, k: i64) -> GaloisPartner {
    let partner_b = a * k - b;
    GaloisPartner { a, b, partner_b, violation: b < 0 || b > a * k }
}

// ---------------------------------------------------------------------
// Elementary abelian 2-groups

/// Budget data for a hypothetical categorification of `R(G, kn)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BudgetModel {
    pub n: u64,
    pub k: u64,
    pub nu2: i8,
    /// Square-free part of `k²n² + 4n`.
    pub c: u64,
    #[serde(serialize_with = "crate::serial::ser_rational")]
    pub budget_rhs: Rational,
}

impl BudgetModel {
    pub fn new(n: u64, k: u64, nu2: i8) -> Self {
        assert!(nu2 == 1 || nu2 == -1, "nu2 must be ±1");
        BudgetModel { n, k, nu2, c: squarefree_part(disc(n, k)).x, budget_rhs: budget_bound(n, k) }
    }
}

/// `k²n² + 4n`.
fn disc(n: u64, k: u64) -> u64 {
    k.checked_mul(n)
        .and_then(|kn| kn.checked_mul(kn))
        .and_then(|x| x.checked_add(4 * n))
        .expect("k^2 n^2 + 4n overflows u64")
}

/// `½k²(n+1)(n−1) + 2n`.
pub fn budget_bound(n: u64, k: u64) -> Rational {
    let n = q(n);
    let k = q(k);
    &k * &k * (&n + q(1)) * (&n - q(1)) / q(2) + q(2) * n
}

/// Coefficients of `f(n, ·)`, highest power of `k` first.
pub fn quartic_coefficients(n: u64) -> [BigInt; 5] {
    let n = BigInt::from(n);
    let n2 = &n * &n;
    let n3 = &n2 * &n;
    let n4 = &n3 * &n;
    [
        -&n4 - BigInt::from(6) * &n2 + 3,
        BigInt::from(16) * &n3,
        BigInt::from(8) * &n3 - BigInt::from(16) * &n2 - BigInt::from(24) * &n,
        BigInt::from(64) * &n2,
        BigInt::from(48) * &n2 - BigInt::from(64) * &n,
    ]
}

/// `f(n, k)`; negative exactly when the coarse test eliminates at `ν₂ = +1`.
pub fn quartic_f(n: u64, k: u64) -> BigInt {
    let k = BigInt::from(k);
    quartic_coefficients(n).iter().fold(BigInt::zero(), |acc, c| acc * &k + c)
}

fn is_power_of_two_at_least_4(n: u64) -> bool {
    n >= 4 && n.is_power_of_two()
}

/// `½kn − ν₂`.
fn half_kn_minus(n: u64, k: u64, nu2: i8) -> Rational {
    frac(k * n, 2) - q(nu2)
}

/// Both sides of the coarse inequality at one sign.
pub fn coarse_inequality(n: u64, k: u64, nu2: i8) -> Inequality {
    // (2/√3)·t·√D = (2t/3)·√(3D)
    let t = half_kn_minus(n, k, nu2);
    let rhs = QuadraticNumber::with_radicand(Rational::zero(), t * frac(2, 3), 3 * disc(n, k));
    Inequality { lhs: QuadraticNumber::rational(budget_bound(n, k)), rhs }
}

fn nu_list(nu2: i8) -> Vec<i8> {
    assert!(nu2 == 1 || nu2 == -1, "nu2 must be ±1");
    vec![nu2]
}

fn coarse_verdict(n: u64, k: u64, signs: &[i8]) -> ObstructionVerdict {
    let t = TestName::Elementary2Coarse;
    if !is_power_of_two_at_least_4(n) || k == 0 {
        return ObstructionVerdict::not_applicable(t, format!("needs n = 2^m >= 4 and k >= 1 (n = {n}, k = {k})"));
    }
    let sides: Vec<Inequality> = signs.iter().map(|&s| coarse_inequality(n, k, s)).collect();
    let f = quartic_f(n, k);
    if let Some(i) = signs.iter().position(|&s| s == 1) {
        assert_eq!(sides[i].holds(), f.is_negative(), "coarse inequality disagrees with f({n},{k}) = {f}");
    }
    let cert = json!({
        "n": n, "k": k, "nu2": signs, "c": squarefree_part(disc(n, k)).x,
        "quartic_f": f.to_string(),
    });
    let w = Witness::Inequalities { sides };
    let reason = match w.decides() {
        Outcome::Eliminates => format!("budget is below the roots-of-unity bound for every sign (f = {f})"),
        _ => format!("budget is at least the roots-of-unity bound for some sign (f = {f})"),
    };
    ObstructionVerdict::decided(t, cert, w, reason)
}

/// The coarse test at a single sign `ν₂`.
pub fn elementary2_coarse(n: u64, k: u64, nu2: i8) -> ObstructionVerdict {
    coarse_verdict(n, k, &nu_list(nu2))
}

/// The coarse test with `ν₂` unknown: eliminates only if both signs do.
pub fn elementary2_coarse_both(n: u64, k: u64) -> ObstructionVerdict {
    let v = coarse_verdict(n, k, &[1, -1]);
    if let Witness::Inequalities { sides } = &v.witness {
        assert!(!sides[0].holds() || sides[1].holds(), "nu2 = -1 weaker than +1 at n = {n}, k = {k}");
    }
    v
}

/// Both sides of the endgame inequality at one sign, or `None` when
/// `k²n² + 4n` is a perfect square.
pub fn endgame_inequality(n: u64, k: u64, nu2: i8) -> Option<(Inequality, u64)> {
    let sf = squarefree_part(disc(n, k));
    let c = sf.x;
    if c < 2 {
        return None;
    }
    let phi = totient(2 * c);
    // (φ(2c)/√c)·√(cy²) = φ(2c)·y
    let ratio = QuadraticNumber::new(Rational::zero(), frac(phi, c), c);
    let root = QuadraticNumber::new(Rational::zero(), q(sf.y), c);
    let scale = QuadraticNumber::rational(half_kn_minus(n, k, nu2));
    let rhs = ratio.checked_mul(&root).and_then(|x| x.checked_mul(&scale)).expect("same field");
    Some((Inequality { lhs: QuadraticNumber::rational(budget_bound(n, k)), rhs }, c))
}

fn endgame_verdict(n: u64, k: u64, signs: &[i8]) -> ObstructionVerdict {
    let t = TestName::Elementary2Endgame;
    if !is_power_of_two_at_least_4(n) || k == 0 {
        return ObstructionVerdict::not_applicable(t, format!("needs n = 2^m >= 4 and k >= 1 (n = {n}, k = {k})"));
    }
    let mut sides = Vec::new();
    let mut c = 0;
    for &s in signs {
        match endgame_inequality(n, k, s) {
            Some((ineq, cc)) => {
                sides.push(ineq);
                c = cc;
            }
            None => return ObstructionVerdict::not_applicable(t, "k^2 n^2 + 4n is a perfect square"),
        }
    }
    let cert = json!({ "n": n, "k": k, "nu2": signs, "c": c, "phi_2c": totient(2 * c) });
    let w = Witness::Inequalities { sides };
    let reason = match w.decides() {
        Outcome::Eliminates => format!("budget below phi(2c)/sqrt(c) bound with c = {c}"),
        _ => format!("budget meets phi(2c)/sqrt(c) bound with c = {c}"),
    };
    ObstructionVerdict::decided(t, cert, w, reason)
}

/// The endgame test in its `ν₂ = +1` form.
pub fn endgame_check(n: u64, k: u64) -> ObstructionVerdict {
    endgame_verdict(n, k, &[1])
}

pub fn endgame_check_signed(n: u64, k: u64, nu2: i8) -> ObstructionVerdict {
    endgame_verdict(n, k, &nu_list(nu2))
}

/// The endgame test with `ν₂` unknown: eliminates only if both signs do.
pub fn endgame_check_both(n: u64, k: u64) -> ObstructionVerdict {
    let v = endgame_verdict(n, k, &[1, -1]);
    if let Witness::Inequalities { sides } = &v.witness {
        assert!(!sides[0].holds() || sides[1].holds(), "nu2 = -1 weaker than +1 at n = {n}, k = {k}");
    }
    v
}

// ---------------------------------------------------------------------
// Cyclic groups of prime order p ≡ 3 (mod 4)

fn prime_3_mod_4(p: u64) -> bool {
    p % 4 == 3 && is_prime(p)
}

pub fn prime_parity(p: u64, k: u64) -> ObstructionVerdict {
    let t = TestName::PrimeParity;
    if !prime_3_mod_4(p) || k == 0 {
        return ObstructionVerdict::not_applicable(t, format!("needs p prime, p = 3 mod 4, k >= 1 (p = {p}, k = {k})"));
    }
    let reason = if k % 2 == 1 && k != 1 { format!("k = {k} is odd and not 1") } else { format!("k = {k} is 1 or even") };
    ObstructionVerdict::decided(t, json!({ "p": p, "k": k }), Witness::Parity { k }, reason)
}

/// Square-free part of `m²p + 1`.
pub fn xbound_x(p: u64, m: u64) -> u64 {
    let v = m.checked_mul(m).and_then(|x| x.checked_mul(p)).and_then(|x| x.checked_add(1)).expect("m^2 p + 1 overflows u64");
    squarefree_part(v).x
}

/// `φ(x)²(p−1)²m² > x(p+1)²(pm²+1)`, in integers.
pub fn xbound_violated(p: u64, m: u64, x: u64, phi_x: u64) -> bool {
    let b = BigInt::from;
    let lhs = b(phi_x).pow(2) * b(p - 1).pow(2) * b(m).pow(2);
    let rhs = b(x) * b(p + 1).pow(2) * (b(p) * b(m).pow(2) + 1);
    lhs > rhs
}

/// The level `k = 2m` test, with `x` the square-free part of `m²p + 1`.
pub fn prime_xbound(p: u64, m: u64) -> ObstructionVerdict {
    let t = TestName::PrimeXBound;
    if !prime_3_mod_4(p) || m == 0 {
        return ObstructionVerdict::not_applicable(t, format!("needs p prime, p = 3 mod 4, m >= 1 (p = {p}, m = {m})"));
    }
    let v = m * m * p + 1;
    let sf = squarefree_part(v);
    let (x, y) = (sf.x, sf.y);
    let phi = totient(x);
    // Bound ((p+1)/((p−1)m))·√(m²p+1) = ((p+1)y/((p−1)m))·√x against φ(x)/√x = (φ(x)/x)·√x.
    let bound = QuadraticNumber::new(Rational::zero(), frac((p + 1) * y, (p - 1) * m), x);
    let ratio = QuadraticNumber::new(Rational::zero(), frac(phi, x), x);
    let ineq = Inequality { lhs: bound, rhs: ratio };
    let violated = xbound_violated(p, m, x, phi);
    assert_eq!(ineq.holds(), violated, "xbound routes disagree at p = {p}, m = {m}");
    let reason = if violated {
        format!("phi(x)/sqrt(x) exceeds the bound with x = {x}")
    } else {
        format!("phi(x)/sqrt(x) within the bound with x = {x}")
    };
    let cert = json!({ "p": p, "m": m, "k": 2 * m, "x": x, "phi_x": phi });
    ObstructionVerdict::decided(t, cert, Witness::Inequalities { sides: vec![ineq] }, reason)
}

// ---------------------------------------------------------------------
// Near-group dispatch

/// What the obstructions need to know about `R(G, ℓ)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct NearGroupShape {
    pub order: u64,
    pub level: u64,
    pub abelian: bool,
    pub cyclic: bool,
    /// `m` when `G ≅ C₂^m`.
    pub elementary2_rank: Option<u32>,
}

impl NearGroupShape {
    pub fn elementary2(m: u32, level: u64) -> Self {
        NearGroupShape { order: 1 << m, level, abelian: true, cyclic: m <= 1, elementary2_rank: Some(m) }
    }

    pub fn cyclic(n: u64, level: u64) -> Self {
        let e2 = match n {
            1 => Some(0),
            2 => Some(1),
            _ => None,
        };
        NearGroupShape { order: n, level, abelian: true, cyclic: true, elementary2_rank: e2 }
    }

    /// Recognises near-group rings: two orbits, one noninvertible `ρ`
    /// fixed by all of `G`.
    pub fn of_ring(ring: &FusionRing) -> Option<Self> {
        let data = two_orbit_data(ring).ok()?;
        if data.noninvertibles.len() != 1 || data.order_h() != data.order_g() {
            return None;
        }
        let rho = data.noninvertibles[0];
        let g = &data.group;
        let elem2 = (g.is_abelian() && g.exponent() <= 2).then(|| g.order().trailing_zeros());
        Some(NearGroupShape {
            order: g.order() as u64,
            level: u64::from(ring.c(rho, rho, rho)),
            abelian: g.is_abelian(),
            cyclic: g.is_cyclic(),
            elementary2_rank: elem2,
        })
    }
}

/// Literature test for `0 < ℓ < |G|`.
pub fn small_level(shape: &NearGroupShape) -> ObstructionVerdict {
    let t = TestName::SmallLevel;
    let (n, l) = (shape.order, shape.level);
    if l == 0 || l >= n {
        return ObstructionVerdict::not_applicable(t, format!("needs 0 < level < |G| (level {l}, |G| = {n})"));
    }
    let w = Witness::SmallLevel { order: n, level: l, cyclic: shape.cyclic };
    let reason = if w.decides() == Outcome::Eliminates {
        "0 < level < |G| requires level = |G| - 1 with G the unit group of a finite field".to_string()
    } else {
        "level = |G| - 1 with G cyclic of order q - 1, q a prime power".to_string()
    };
    ObstructionVerdict::decided(t, json!({ "order": n, "level": l, "cyclic": shape.cyclic }), w, reason)
}

/// All obstructions for `R(G, ℓ)`, from the shape alone.
pub fn near_group_verdicts(shape: &NearGroupShape) -> Vec<ObstructionVerdict> {
    let (n, l) = (shape.order, shape.level);
    let mut out = Vec::with_capacity(7);
    out.push(if shape.abelian {
        noncommutative_criterion(l, n)
    } else {
        ObstructionVerdict::not_applicable(TestName::Noncommutative, "ring is noncommutative")
    });
    out.push(divisibility_criterion(l, n));
    out.push(small_level(shape));
    out.extend(elementary2_verdicts(shape));
    out.extend(prime_verdicts(shape));
    out
}

fn elementary2_verdicts(shape: &NearGroupShape) -> [ObstructionVerdict; 2] {
    let (n, l) = (shape.order, shape.level);
    let applicable = matches!(shape.elementary2_rank, Some(m) if m >= 2) && l > 0 && l % n == 0;
    if !applicable {
        let why = "needs G = C2^m with m >= 2 and level = k|G|, k >= 1";
        return [
            ObstructionVerdict::not_applicable(TestName::Elementary2Coarse, why),
            ObstructionVerdict::not_applicable(TestName::Elementary2Endgame, why),
        ];
    }
    let k = l / n;
    let coarse = elementary2_coarse_both(n, k);
    let endgame = if coarse.eliminates() {
        ObstructionVerdict::not_applicable(TestName::Elementary2Endgame, "already eliminated by the coarse test")
    } else {
        endgame_check_both(n, k)
    };
    [coarse, endgame]
}

fn prime_verdicts(shape: &NearGroupShape) -> [ObstructionVerdict; 2] {
    let (p, l) = (shape.order, shape.level);
    let applicable = shape.cyclic && prime_3_mod_4(p) && l > 0 && l % p == 0;
    if !applicable {
        let why = "needs G = C_p with p prime, p = 3 mod 4, and level = kp, k >= 1";
        return [
            ObstructionVerdict::not_applicable(TestName::PrimeParity, why),
            ObstructionVerdict::not_applicable(TestName::PrimeXBound, why),
        ];
    }
    let k = l / p;
    let parity = prime_parity(p, k);
    let xb = if k % 2 == 0 {
        prime_xbound(p, k / 2)
    } else {
        ObstructionVerdict::not_applicable(TestName::PrimeXBound, format!("k = {k} is odd"))
    };
    [parity, xb]
}

/// The verdict list for one ring and the overall result.
#[derive(Clone, Debug, Serialize)]
pub struct ObstructionReport {
    pub eliminated: bool,
    pub eliminated_by: Option<TestName>,
    pub verdicts: Vec<ObstructionVerdict>,
}

impl ObstructionReport {
    pub fn from_verdicts(verdicts: Vec<ObstructionVerdict>) -> Self {
        let eliminated_by = verdicts.iter().find(|v| v.eliminates()).map(|v| v.test_name);
        ObstructionReport { eliminated: eliminated_by.is_some(), eliminated_by, verdicts }
    }
}

/// Runs every obstruction in the fixed order of [`TestName`].
///
/// The noncommutativity and divisibility tests read the ring directly;
/// the rest apply only to recognised near-group rings.
pub fn run_all(ring: &FusionRing) -> Result<ObstructionReport> {
    ring.ensure_verified()?;
    let mut verdicts = vec![obstruct_noncommutative(ring), obstruct_divisibility(ring)];
    match NearGroupShape::of_ring(ring) {
        Some(shape) => verdicts.extend(near_group_verdicts(&shape).into_iter().skip(2)),
        None => {
            for t in [
                TestName::SmallLevel,
                TestName::Elementary2Coarse,
                TestName::Elementary2Endgame,
                TestName::PrimeParity,
                TestName::PrimeXBound,
            ] {
                verdicts.push(ObstructionVerdict::not_applicable(t, "not a near-group ring"));
            }
        }
    }
    for v in &verdicts {
        if !v.recheck() {
            return Err(FusionError::CertificationFailed(format!("{} witness does not reproduce its outcome", v.test_name)));
        }
    }
    Ok(ObstructionReport::from_verdicts(verdicts))
}
