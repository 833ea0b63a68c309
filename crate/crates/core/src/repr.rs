//! Formal codegrees, characters, and explicit irreducible representations
//! of uniform two-orbit rings.

use nalgebra::DMatrix;
use num_bigint::BigInt;
use num_complex::Complex64;
use serde::Serialize;

use crate::dims::casimir_matrix;
use crate::error::{FusionError, Result};
use crate::group::{FiniteGroup, LinearCharacter};
use crate::numbers::algebraic::default_width;
use crate::numbers::matrix::charpoly;
use crate::numbers::{AlgebraicReal, Cyclotomic, IntPoly, Rational, TowerNumber};
use crate::ring::FusionRing;
use crate::structure::{two_orbit_data, TwoOrbitData};

/// A formal codegree `f_ψ`, recorded through the eigenvalue `dim(ψ)·f_ψ`
/// of `M = Σ_x N_x N_{x*}`.
#[derive(Clone, Debug, Serialize)]
pub struct Codegree {
    #[serde(serialize_with = "crate::serial::ser_algebraic")]
    pub eigenvalue: AlgebraicReal,
    /// Multiplicity of `eigenvalue` in `M`.
    pub eigen_multiplicity: usize,
    /// `dim(ψ)`, when determined.
    pub dim_hint: Option<usize>,
    /// Number of irreducible representations with this dimension and
    /// codegree, when determined.
    pub irreps: Option<usize>,
}

impl Codegree {
    /// `f_ψ = eigenvalue / dim(ψ)`, when the dimension is known.
    pub fn value(&self) -> Option<AlgebraicReal> {
        self.dim_hint.map(|d| self.eigenvalue.div_int(d as u64))
    }
}

/// Distinct eigenvalues of `M` with multiplicities, increasing.
pub fn casimir_spectrum(ring: &FusionRing) -> Result<Vec<(AlgebraicReal, usize)>> {
    ring.ensure_verified()?;
    let p = charpoly(&casimir_matrix(ring)?);
    let f = AlgebraicReal::roots_of(&p, &default_width());
    if f.nonreal != 0 {
        return Err(FusionError::CertificationFailed(
            "Σ N_x N_x* has non-real eigenvalues".into(),
        ));
    }
    Ok(f.real.into_iter().map(|r| (r.value, r.multiplicity)).collect())
}

/// The codegree spectrum. Commutative rings get one codegree per
/// eigenvalue; noncommutative rings get dimensions only when the uniform
/// irreducible models apply, and are otherwise reported as bare
/// eigenvalues.
pub fn codegree_spectrum(ring: &FusionRing) -> Result<Vec<Codegree>> {
    let spectrum = casimir_spectrum(ring)?;
    if ring.is_commutative() {
        return Ok(spectrum
            .into_iter()
            .map(|(eigenvalue, m)| Codegree {
                eigenvalue,
                eigen_multiplicity: m,
                dim_hint: Some(1),
                irreps: Some(m),
            })
            .collect());
    }
    if let Ok(models) = uniform_irreps(ring) {
        if let Some(out) = attach_dimensions(ring, &spectrum, &models) {
            return Ok(out);
        }
    }
    Ok(spectrum
        .into_iter()
        .map(|(eigenvalue, m)| Codegree { eigenvalue, eigen_multiplicity: m, dim_hint: None, irreps: None })
        .collect())
}

/// Matches each model's `dim·f` to an eigenvalue of `M`: the defining
/// polynomial must vanish exactly at `dim·f`, the nearest root is taken,
/// and the multiplicity of every eigenvalue must equal `Σ dim²`.
fn attach_dimensions(
    ring: &FusionRing,
    spectrum: &[(AlgebraicReal, usize)],
    models: &[IrrepModel],
) -> Option<Vec<Codegree>> {
    let approx: Vec<f64> = spectrum.iter().map(|(v, _)| v.to_f64()).collect();
    // counts[e][dim] = number of irreps
    let mut counts: Vec<std::collections::BTreeMap<usize, usize>> = vec![Default::default(); spectrum.len()];
    for m in models {
        let f = m.codegree(ring)?;
        let df = f.scale(&Rational::from_integer(m.dim.into()));
        let z = df.to_complex();
        let e = (0..approx.len())
            .min_by(|&a, &b| (approx[a] - z.re).abs().total_cmp(&(approx[b] - z.re).abs()))?;
        let (poly, _) = spectrum[e].0.isolating_data();
        if !eval_tower(&poly, &df).is_zero() {
            return None;
        }
        *counts[e].entry(m.dim).or_default() += 1;
    }
    let mut out = Vec::new();
    for (e, (value, mult)) in spectrum.iter().enumerate() {
        let total: usize = counts[e].iter().map(|(d, c)| d * d * c).sum();
        if total != *mult {
            return None;
        }
        for (&d, &c) in &counts[e] {
            out.push(Codegree {
                eigenvalue: value.clone(),
                eigen_multiplicity: *mult,
                dim_hint: Some(d),
                irreps: Some(c),
            });
        }
    }
    Some(out)
}

fn eval_tower(p: &IntPoly, x: &TowerNumber) -> TowerNumber {
    let mut acc = TowerNumber::zero();
    for c in p.coeffs().iter().rev() {
        let c = TowerNumber::from_cyclotomic(Cyclotomic::from_rational(1, Rational::from_integer(c.clone())));
        acc = &(&acc * x) + &c;
    }
    acc
}

/// Characters of an abelian `G` that are nontrivial on `H`.
pub fn irr_h_of_g(g: &FiniteGroup, h: &[usize]) -> Result<Vec<LinearCharacter>> {
    if !g.is_subgroup(h) {
        return Err(FusionError::InvalidArgument("H is not a subgroup".into()));
    }
    Ok(g.abelian_characters()?.into_iter().filter(|c| !c.is_trivial_on(h)).collect())
}

fn root_multiplicity(p: &IntPoly, root: i64) -> usize {
    let lin = IntPoly::from_i64(&[-root, 1]);
    let mut q = p.clone();
    let mut m = 0;
    while let Some(next) = q.div_exact(&lin) {
        q = next;
        m += 1;
    }
    m
}

/// Codegrees of the representations vanishing off the invertibles: one per
/// character in `Irr_H(G)`, each equal to `|G|`.
pub fn irr0_codegrees(ring: &FusionRing) -> Result<Vec<Codegree>> {
    let data = two_orbit_data(ring)?;
    if !data.group.is_abelian() {
        return Err(FusionError::HypothesesNotMet("the invertible group is not abelian".into()));
    }
    let chars = irr_h_of_g(&data.group, &data.h_local)?;
    let order = data.order_g() as i64;
    let mult = root_multiplicity(&charpoly(&casimir_matrix(ring)?), order);
    Ok(chars
        .iter()
        .map(|_| Codegree {
            eigenvalue: AlgebraicReal::from_int(order),
            eigen_multiplicity: mult,
            dim_hint: Some(1),
            irreps: Some(1),
        })
        .collect())
}

/// An irreducible representation of `K ⋊_θ C₂` for abelian `K`, with
/// multiplication `(a, s)(b, t) = (a·θ^s(b), s + t)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum SemidirectIrrep {
    /// A `θ`-fixed character `λ` extended by `(0, 1) ↦ sign`.
    Extension { character: LinearCharacter, sign: i8 },
    /// Induced from a character with `λ∘θ ≠ λ`; basis `e₀, e₁` on which
    /// `(a, 0)` acts by `diag(λ(a), λ(θa))` and `(0, 1)` swaps.
    Induced { character: LinearCharacter, partner: LinearCharacter },
}

impl SemidirectIrrep {
    pub fn dim(&self) -> usize {
        match self {
            SemidirectIrrep::Extension { .. } => 1,
            SemidirectIrrep::Induced { .. } => 2,
        }
    }

    pub fn is_trivial_on_kernel(&self) -> bool {
        matches!(self, SemidirectIrrep::Extension { character, .. } if character.is_trivial())
    }

    /// The matrix of `(a, s)` with entries in `Q(ζ_e)`.
    pub fn matrix(&self, a: usize, s: u8) -> Vec<Vec<Cyclotomic>> {
        let z = |c: &LinearCharacter, g: usize| {
            Cyclotomic::root_of_unity(c.exponent as usize, c.values[g] as i64)
        };
        match self {
            SemidirectIrrep::Extension { character, sign } => {
                let mut v = z(character, a);
                if s == 1 && *sign < 0 {
                    v = -&v;
                }
                vec![vec![v]]
            }
            SemidirectIrrep::Induced { character, partner } => {
                let n = character.exponent as usize;
                let (x, y) = (z(character, a), z(partner, a));
                let zero = Cyclotomic::zero(n);
                if s == 0 {
                    vec![vec![x, zero.clone()], vec![zero, y]]
                } else {
                    vec![vec![zero.clone(), x], vec![y, zero]]
                }
            }
        }
    }
}

fn compose(c: &LinearCharacter, theta: &[usize]) -> LinearCharacter {
    LinearCharacter {
        exponent: c.exponent,
        values: theta.iter().map(|&t| c.values[t]).collect(),
    }
}

/// Irreducible representations of `K ⋊_θ C₂`: the two extensions of the
/// trivial character first, then other fixed characters, then induced
/// pairs.
pub fn semidirect_irr(k: &FiniteGroup, theta: &[usize]) -> Result<Vec<SemidirectIrrep>> {
    if !k.is_abelian() {
        return Err(FusionError::NonAbelian);
    }
    if !k.is_automorphism(theta) || (0..theta.len()).any(|i| theta[theta[i]] != i) {
        return Err(FusionError::InvalidArgument("theta is not an involutive automorphism".into()));
    }
    let chars = k.abelian_characters()?;
    let mut fixed = Vec::new();
    let mut induced = Vec::new();
    for c in &chars {
        let t = compose(c, theta);
        if &t == c {
            for sign in [1i8, -1] {
                fixed.push(SemidirectIrrep::Extension { character: c.clone(), sign });
            }
        } else if c < &t {
            induced.push(SemidirectIrrep::Induced { character: c.clone(), partner: t });
        }
    }
    fixed.extend(induced);
    Ok(fixed)
}

/// Where an irreducible model comes from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum IrrepSource {
    #[serde(rename = "from_Irr_H(G)")]
    FromIrrH,
    #[serde(rename = "from_semidirect")]
    FromSemidirect,
    #[serde(rename = "one_dimensional_d_plus")]
    OneDimensionalDPlus,
    #[serde(rename = "one_dimensional_d_minus")]
    OneDimensionalDMinus,
}

impl std::fmt::Display for IrrepSource {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.pad(match self {
            IrrepSource::FromIrrH => "from_Irr_H(G)",
            IrrepSource::FromSemidirect => "from_semidirect",
            IrrepSource::OneDimensionalDPlus => "one_dimensional_d_plus",
            IrrepSource::OneDimensionalDMinus => "one_dimensional_d_minus",
        })
    }
}

type TowerMatrix = Vec<Vec<TowerNumber>>;

/// An explicit irreducible representation: one matrix per basis element,
/// entries `a + b√D` with `a, b ∈ Q(ζ_N)`.
#[derive(Clone, Debug)]
pub struct IrrepModel {
    pub dim: usize,
    pub root_order: usize,
    pub radicand: u64,
    pub matrices: Vec<TowerMatrix>,
    pub source: IrrepSource,
}

fn tower_mul(a: &TowerMatrix, b: &TowerMatrix) -> TowerMatrix {
    let n = a.len();
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| (0..n).fold(TowerNumber::zero(), |acc, l| &acc + &(&a[i][l] * &b[l][j])))
                .collect()
        })
        .collect()
}

impl IrrepModel {
    /// Checks `ψ(i)ψ(j) = Σ_k c_{ij}^k ψ(k)` exactly for every pair, and
    /// that the unit acts as the identity.
    pub fn is_homomorphism(&self, ring: &FusionRing) -> bool {
        let n = self.dim;
        let one = TowerNumber::from_int(1);
        let unit_ok = (0..n).all(|a| {
            (0..n).all(|b| {
                let want = if a == b { one.clone() } else { TowerNumber::zero() };
                self.matrices[0][a][b] == want
            })
        });
        unit_ok
            && (0..ring.rank()).all(|i| {
                (0..ring.rank()).all(|j| {
                    let lhs = tower_mul(&self.matrices[i], &self.matrices[j]);
                    let mut rhs = vec![vec![TowerNumber::zero(); n]; n];
                    for (k, c) in ring.product(i, j) {
                        let c = Rational::from_integer(c.into());
                        for a in 0..n {
                            for b in 0..n {
                                rhs[a][b] = &rhs[a][b] + &self.matrices[k][a][b].scale(&c);
                            }
                        }
                    }
                    lhs == rhs
                })
            })
    }

    /// Traces `Tr ψ(i)`.
    pub fn character(&self) -> Vec<TowerNumber> {
        self.matrices
            .iter()
            .map(|m| (0..self.dim).fold(TowerNumber::zero(), |acc, a| &acc + &m[a][a]))
            .collect()
    }

    /// The scalar `f_ψ` by which `Σ_x Tr(ψ(x))·x*` acts, or `None` if the
    /// element does not act by a scalar.
    pub fn codegree(&self, ring: &FusionRing) -> Option<TowerNumber> {
        let chi = self.character();
        let n = self.dim;
        let mut z = vec![vec![TowerNumber::zero(); n]; n];
        for x in 0..ring.rank() {
            let m = &self.matrices[ring.dual(x)];
            for a in 0..n {
                for b in 0..n {
                    z[a][b] = &z[a][b] + &(&chi[x] * &m[a][b]);
                }
            }
        }
        let f = z[0][0].clone();
        let scalar = (0..n).all(|a| (0..n).all(|b| if a == b { z[a][b] == f } else { z[a][b].is_zero() }));
        scalar.then_some(f)
    }
}

fn hypotheses(ring: &FusionRing) -> Result<(TwoOrbitData, u64)> {
    let unmet = |m: &str| FusionError::HypothesesNotMet(m.into());
    let data = match two_orbit_data(ring) {
        Ok(d) => d,
        Err(FusionError::NotTwoOrbit { orbits }) => {
            return Err(FusionError::HypothesesNotMet(format!("not two-orbit ({orbits} orbits)")))
        }
        Err(FusionError::ThetaInconsistent(m)) => {
            return Err(FusionError::HypothesesNotMet(format!("not two-orbit: {m}")))
        }
        Err(e) => return Err(e),
    };
    if !data.group.is_abelian() {
        return Err(unmet("the invertible group is not abelian"));
    }
    let Some(k) = data.uniform_k else {
        return Err(unmet("fusion rules are not uniform"));
    };
    if !data.noninv_selfdual {
        return Err(unmet("noninvertible basis elements are not self-dual"));
    }
    Ok((data, k))
}

/// Explicit irreducible representations of a uniform two-orbit ring with
/// abelian invertible group and self-dual noninvertibles: the characters
/// `x ↦ d₊`, `x ↦ d₋`, the characters of `G` nontrivial on `H` (vanishing
/// off `G`), and `g ↦ ψ(ḡ, 0)`, `gx ↦ √|H|·ψ(ḡ, 1)` for the remaining
/// irreducibles `ψ` of `(G/H) ⋊_θ C₂`. Every model is checked exactly.
pub fn uniform_irreps(ring: &FusionRing) -> Result<Vec<IrrepModel>> {
    let (data, k) = hypotheses(ring)?;
    let g = &data.group;
    let q = g.quotient(&data.h_local)?;
    let n = ring.rank();
    let ord_h = data.order_h() as u64;
    let index = data.index() as u64;
    let x0 = data.chosen_x;
    // Coset of each noninvertible y = g·x0.
    let mut coset_of_basis = vec![None; n];
    for a in 0..g.order() {
        let y = ring.product_basis(data.g_indices[a], x0).expect("g·x is basic");
        coset_of_basis[y].get_or_insert(q.coset_of[a]);
    }
    let local = |b: usize| data.g_indices.binary_search(&b).ok();

    let mut models = Vec::new();

    // ψ±: x ↦ (r ± √(r² + 4s))/2
    let r = k * index;
    let disc = r * r + 4 * ord_h;
    let half = Rational::new(1.into(), 2.into());
    for (sign, source) in [(1i64, IrrepSource::OneDimensionalDPlus), (-1, IrrepSource::OneDimensionalDMinus)] {
        let surd = TowerNumber::sqrt(disc).scale(&Rational::from_integer(sign.into()));
        let d = (&TowerNumber::from_int(r as i64) + &surd).scale(&half);
        let matrices = (0..n)
            .map(|b| vec![vec![if local(b).is_some() { TowerNumber::from_int(1) } else { d.clone() }]])
            .collect();
        models.push(IrrepModel { dim: 1, root_order: 1, radicand: surd.radicand(), matrices, source });
    }

    for chi in irr_h_of_g(g, &data.h_local)? {
        let e = chi.exponent as usize;
        let matrices = (0..n)
            .map(|b| {
                let v = match local(b) {
                    Some(a) => TowerNumber::from_cyclotomic(Cyclotomic::root_of_unity(e, chi.values[a] as i64)),
                    None => TowerNumber::zero(),
                };
                vec![vec![v]]
            })
            .collect();
        models.push(IrrepModel { dim: 1, root_order: e, radicand: 1, matrices, source: IrrepSource::FromIrrH });
    }

    let root_h = TowerNumber::sqrt(ord_h);
    for psi in semidirect_irr(&q.group, &data.theta)? {
        if psi.is_trivial_on_kernel() {
            continue;
        }
        let matrices = (0..n)
            .map(|b| {
                let (c, s) = match local(b) {
                    Some(a) => (q.coset_of[a], 0),
                    None => (coset_of_basis[b].expect("noninvertible lies in G·x"), 1),
                };
                psi.matrix(c, s)
                    .into_iter()
                    .map(|row| {
                        row.into_iter()
                            .map(|v| {
                                let t = TowerNumber::from_cyclotomic(v);
                                if s == 1 { &t * &root_h } else { t }
                            })
                            .collect()
                    })
                    .collect()
            })
            .collect();
        let root_order = match &psi {
            SemidirectIrrep::Extension { character, .. } | SemidirectIrrep::Induced { character, .. } => {
                character.exponent as usize
            }
        };
        models.push(IrrepModel {
            dim: psi.dim(),
            root_order,
            radicand: root_h.radicand(),
            matrices,
            source: IrrepSource::FromSemidirect,
        });
    }

    let dim_sq: usize = models.iter().map(|m| m.dim * m.dim).sum();
    if dim_sq != n {
        return Err(FusionError::CertificationFailed(format!(
            "irreducible dimensions square-sum to {dim_sq}, rank is {n}"
        )));
    }
    if let Some(bad) = models.iter().position(|m| !m.is_homomorphism(ring)) {
        return Err(FusionError::CertificationFailed(format!(
            "model {bad} ({}) is not a homomorphism",
            models[bad].source
        )));
    }
    Ok(models)
}

/// A character of a commutative ring computed in floating point, with a
/// bound on `‖N_i v − χ(i) v‖` over all basis elements.
#[derive(Clone, Debug, Serialize)]
pub struct CertifiedCharacter {
    pub values: Vec<(f64, f64)>,
    pub residual_bound: f64,
}

impl CertifiedCharacter {
    pub fn value(&self, i: usize) -> Complex64 {
        Complex64::new(self.values[i].0, self.values[i].1)
    }
}

/// Characters of a commutative ring by simultaneous diagonalization of a
/// generic Hermitian combination of the `N_i`. Each value is within
/// `residual_bound` of an eigenvalue of `N_i`; fails if that bound exceeds
/// `width`.
pub fn characters_commutative(ring: &FusionRing, width: f64) -> Result<Vec<CertifiedCharacter>> {
    ring.ensure_verified()?;
    if !ring.is_commutative() {
        return Err(FusionError::HypothesesNotMet("ring is not commutative".into()));
    }
    let n = ring.rank();
    let mats: Vec<DMatrix<Complex64>> = (0..n)
        .map(|i| {
            let f = ring.fusion_matrix(i).expect("index in range");
            DMatrix::from_fn(n, n, |r, c| Complex64::new(f[c][r] as f64, 0.0))
        })
        .collect();
    // Deterministic generic coefficients from fractional parts of √p.
    let primes = [2.0f64, 3.0, 5.0, 7.0, 11.0, 13.0, 17.0, 19.0, 23.0, 29.0, 31.0, 37.0];
    let coef = |i: usize, shift: usize| {
        let p = primes[(i + shift) % primes.len()] + (i / primes.len()) as f64 * 41.0;
        0.5 + p.sqrt().fract()
    };
    let mut best: Option<(f64, DMatrix<Complex64>)> = None;
    for shift in 0..4 {
        let mut h = DMatrix::<Complex64>::zeros(n, n);
        for (i, m) in mats.iter().enumerate() {
            let a = coef(i, shift);
            let b = coef(i + 7, shift);
            let t = m.adjoint();
            h += (m + &t) * Complex64::new(a, 0.0) + (m - &t) * Complex64::new(0.0, b);
        }
        let eig = h.symmetric_eigen();
        let mut ev: Vec<f64> = eig.eigenvalues.iter().copied().collect();
        ev.sort_by(f64::total_cmp);
        let gap = ev.windows(2).map(|w| w[1] - w[0]).fold(f64::INFINITY, f64::min);
        if best.as_ref().is_none_or(|(g, _)| gap > *g) {
            best = Some((gap, eig.eigenvectors));
        }
        if gap > 1e-6 {
            break;
        }
    }
    let (_, vecs) = best.expect("at least one attempt");
    let eps = f64::EPSILON * (n as f64) * 8.0;
    let mut out = Vec::with_capacity(n);
    for col in 0..n {
        let v = vecs.column(col).into_owned();
        let norm = v.norm();
        let v = v / Complex64::new(norm, 0.0);
        let mut values = Vec::with_capacity(n);
        let mut residual = 0.0f64;
        for m in &mats {
            let mv = m * &v;
            let lambda = v.dotc(&mv);
            let r = (&mv - &v * lambda).norm();
            let scale = m.iter().map(|z| z.norm()).sum::<f64>();
            residual = residual.max(r + eps * (1.0 + scale));
            values.push((lambda.re, lambda.im));
        }
        if residual > width {
            return Err(FusionError::CertificationFailed(format!(
                "character residual {residual:e} exceeds width {width:e}"
            )));
        }
        out.push(CertifiedCharacter { values, residual_bound: residual });
    }
    // Perron character first, then by decreasing real sum.
    out.sort_by(|a, b| {
        let s = |c: &CertifiedCharacter| c.values.iter().map(|v| v.0).sum::<f64>();
        s(b).total_cmp(&s(a))
    });
    Ok(out)
}

/// Exact `Σ_ψ dim(ψ)²·(dim(ψ) f_ψ)` over a list of codegrees with known
/// dimensions, as a floating-point value for cross-checks.
pub fn weighted_codegree_sum(codegrees: &[Codegree]) -> Option<f64> {
    codegrees
        .iter()
        .map(|c| Some(c.eigenvalue.to_f64() * (c.dim_hint? * c.dim_hint? * c.irreps?) as f64))
        .sum()
}

/// Trace of `M`, equal to `Σ` of its eigenvalues with multiplicity.
pub fn casimir_trace(ring: &FusionRing) -> Result<BigInt> {
    let m = casimir_matrix(ring)?;
    Ok((0..m.len()).map(|i| BigInt::from(m[i][i])).sum())
}

/// Floating value of an exact tower number known to be real.
pub fn tower_to_f64(t: &TowerNumber) -> f64 {
    t.to_complex().re
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct::{group_ring, haagerup_izumi, near_group, uniform_two_orbit};
    use crate::group::AbelianGroupSpec;
    use crate::numbers::{rat, QuadraticNumber};
    use num_traits::ToPrimitive;

    fn cyc(n: usize) -> FiniteGroup {
        AbelianGroupSpec::cyclic(n).to_group()
    }

    fn dims(models: &[IrrepModel]) -> Vec<usize> {
        let mut d: Vec<usize> = models.iter().map(|m| m.dim).collect();
        d.sort_unstable();
        d
    }

    #[test]
    fn group_ring_spectrum_is_scalar() {
        let s = codegree_spectrum(&group_ring(&cyc(5))).unwrap();
        assert_eq!(s.len(), 1);
        assert_eq!(s[0].eigenvalue, AlgebraicReal::from_int(5));
        assert_eq!(s[0].eigen_multiplicity, 5);
    }

    #[test]
    fn near_group_c2_2_codegrees() {
        let s = codegree_spectrum(&near_group(&cyc(2), 2)).unwrap();
        let vals: Vec<AlgebraicReal> = s.iter().map(|c| c.value().unwrap()).collect();
        let plus = QuadraticNumber::new(rat(6, 1), rat(2, 1), 3);
        assert_eq!(vals[0], AlgebraicReal::from_int(2));
        assert_eq!(vals[1], AlgebraicReal::Quadratic(plus.conj()));
        assert_eq!(vals[2], AlgebraicReal::Quadratic(plus));
    }

    #[test]
    fn haagerup_c3_spectrum_has_two_dimensional_codegree() {
        let r = haagerup_izumi(&cyc(3)).unwrap();
        let s = codegree_spectrum(&r).unwrap();
        let two = s.iter().find(|c| c.dim_hint == Some(2)).expect("a 2-dimensional irrep");
        assert_eq!(two.eigen_multiplicity, 4);
        assert_eq!(two.irreps, Some(1));
        let total: usize = s.iter().map(|c| c.dim_hint.unwrap().pow(2) * c.irreps.unwrap()).sum();
        assert_eq!(total, 6);
        let trace = casimir_trace(&r).unwrap().to_f64().unwrap();
        assert!((weighted_codegree_sum(&s).unwrap() - trace).abs() < 1e-6);
    }

    #[test]
    fn irr_h_counts() {
        assert_eq!(irr_h_of_g(&cyc(2), &[0, 1]).unwrap().len(), 1);
        assert_eq!(irr_h_of_g(&cyc(4), &[0, 2]).unwrap().len(), 2);
        assert!(irr_h_of_g(&cyc(6), &[0]).unwrap().is_empty());
    }

    #[test]
    fn irr0_examples() {
        let c = irr0_codegrees(&near_group(&cyc(3), 3)).unwrap();
        assert_eq!(c.len(), 2);
        assert!(c.iter().all(|x| x.value() == Some(AlgebraicReal::from_int(3))));
        assert!(irr0_codegrees(&haagerup_izumi(&cyc(3)).unwrap()).unwrap().is_empty());
        let c = irr0_codegrees(&near_group(&AbelianGroupSpec::elementary2(2).to_group(), 4)).unwrap();
        assert_eq!(c.len(), 3);
        assert!(c.iter().all(|x| x.value() == Some(AlgebraicReal::from_int(4))));
    }

    #[test]
    fn semidirect_dims() {
        let d = |k: usize| {
            let g = cyc(k);
            let mut v: Vec<usize> =
                semidirect_irr(&g, &g.inversion_map()).unwrap().iter().map(|p| p.dim()).collect();
            v.sort_unstable();
            v
        };
        assert_eq!(d(3), vec![1, 1, 2]);
        assert_eq!(d(1), vec![1, 1]);
        assert_eq!(d(4), vec![1, 1, 1, 1, 2]);
    }

    #[test]
    fn uniform_irreps_examples() {
        let hi3 = uniform_irreps(&haagerup_izumi(&cyc(3)).unwrap()).unwrap();
        assert_eq!(dims(&hi3), vec![1, 1, 2]);
        let ng = uniform_irreps(&near_group(&cyc(2), 2)).unwrap();
        assert_eq!(dims(&ng), vec![1, 1, 1]);
        assert_eq!(ng.iter().filter(|m| m.source == IrrepSource::FromIrrH).count(), 1);
        let hi2 = uniform_irreps(&haagerup_izumi(&cyc(2)).unwrap()).unwrap();
        assert_eq!(dims(&hi2), vec![1, 1, 1, 1]);
    }

    #[test]
    fn uniform_irreps_with_nontrivial_stabilizer() {
        // G = C4, H = {0, 2}, θ = identity on G/H ≅ C2, k = 2
        let g = cyc(4);
        let r = uniform_two_orbit(&g, &[0, 2], &[0, 1], 2).unwrap();
        let models = uniform_irreps(&r).unwrap();
        assert_eq!(dims(&models), vec![1; 6]);
        assert!(models.iter().any(|m| m.radicand == 2));
    }

    #[test]
    fn uniform_irreps_refuses_unmet_hypotheses() {
        let r = group_ring(&cyc(3));
        assert!(matches!(uniform_irreps(&r), Err(FusionError::HypothesesNotMet(_))));
    }

    #[test]
    fn d_plus_character_takes_perron_value() {
        let ng = uniform_irreps(&near_group(&cyc(2), 1)).unwrap();
        let plus = ng.iter().find(|m| m.source == IrrepSource::OneDimensionalDPlus).unwrap();
        assert_eq!(plus.matrices[2][0][0], TowerNumber::from_int(2));
        let minus = ng.iter().find(|m| m.source == IrrepSource::OneDimensionalDMinus).unwrap();
        assert_eq!(minus.matrices[2][0][0], TowerNumber::from_int(-1));
    }

    #[test]
    fn commutative_characters() {
        let c = characters_commutative(&group_ring(&cyc(2)), 1e-9).unwrap();
        assert_eq!(c.len(), 2);
        assert!((c[0].value(1).re - 1.0).abs() < 1e-9);
        assert!((c[1].value(1).re + 1.0).abs() < 1e-9);
        let c = characters_commutative(&near_group(&cyc(2), 1), 1e-9).unwrap();
        let mut rho: Vec<f64> = c.iter().map(|x| x.value(2).re).collect();
        rho.sort_by(f64::total_cmp);
        for (got, want) in rho.iter().zip([-1.0, 0.0, 2.0]) {
            assert!((got - want).abs() < 1e-9, "{rho:?}");
        }
        assert!(characters_commutative(&group_ring(&FiniteGroup::symmetric3()), 1e-9).is_err());
    }
}
