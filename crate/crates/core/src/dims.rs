//! Frobenius–Perron dimensions, invertible elements and two-dimension
//! profiles.

use serde::Serialize;

use crate::error::{FusionError, Result};
use crate::group::FiniteGroup;
use crate::numbers::algebraic::default_width;
use crate::numbers::matrix::{charpoly, mat_add, mat_mul};
use crate::numbers::{AlgebraicReal, QuadraticNumber, Rational};
use crate::ring::FusionRing;

/// Perron root of `N_i` at the default isolating width.
pub fn fpdim_basis(ring: &FusionRing, i: usize) -> Result<AlgebraicReal> {
    fpdim_basis_with_width(ring, i, &default_width())
}

pub fn fpdim_basis_with_width(ring: &FusionRing, i: usize, width: &Rational) -> Result<AlgebraicReal> {
    ring.ensure_verified()?;
    let m = ring.fusion_matrix(i)?;
    Ok(AlgebraicReal::largest_real_root(&charpoly(&m), width)
        .expect("a nonnegative integer matrix has a real Perron root"))
}

/// Frobenius–Perron dimensions of every basis element.
pub fn fpdims(ring: &FusionRing) -> Result<Vec<AlgebraicReal>> {
    (0..ring.rank()).map(|i| fpdim_basis(ring, i)).collect()
}

/// `M = Σ_x N_x N_{x*}`, the matrix of multiplication by `Σ_x x x*`.
pub fn casimir_matrix(ring: &FusionRing) -> Result<Vec<Vec<i64>>> {
    let n = ring.rank();
    let mut m = vec![vec![0i64; n]; n];
    for x in 0..n {
        let a = ring.fusion_matrix(x)?;
        let b = ring.fusion_matrix(ring.dual(x))?;
        m = mat_add(&m, &mat_mul(&a, &b));
    }
    Ok(m)
}

/// `FPdim(R) = Σ_x FPdim(x)²`, computed as the Perron root of
/// `Σ_x N_x N_{x*}` (the dimension vector is its positive eigenvector).
pub fn fpdim_total(ring: &FusionRing) -> Result<AlgebraicReal> {
    ring.ensure_verified()?;
    let m = casimir_matrix(ring)?;
    Ok(AlgebraicReal::largest_real_root(&charpoly(&m), &default_width())
        .expect("Perron root exists"))
}

/// The invertible basis elements and the group they form.
#[derive(Clone, Debug)]
pub struct Invertibles {
    /// Basis indices, increasing; `indices[0] = 0`.
    pub indices: Vec<usize>,
    /// Group on local positions into `indices`.
    pub group: FiniteGroup,
}

impl Invertibles {
    pub fn order(&self) -> usize {
        self.indices.len()
    }

    pub fn local(&self, basis: usize) -> Option<usize> {
        self.indices.binary_search(&basis).ok()
    }

    pub fn contains(&self, basis: usize) -> bool {
        self.local(basis).is_some()
    }
}

/// Basis elements with `x·x* = 1`, equivalently `FPdim(x) = 1`.
pub fn invertibles(ring: &FusionRing) -> Result<Invertibles> {
    ring.ensure_verified()?;
    let indices: Vec<usize> = (0..ring.rank())
        .filter(|&x| ring.product_basis(x, ring.dual(x)) == Some(0))
        .collect();
    let local = |b: usize| indices.binary_search(&b).expect("closed under products");
    let table = indices
        .iter()
        .map(|&a| {
            indices
                .iter()
                .map(|&b| local(ring.product_basis(a, b).expect("invertible product is basic")))
                .collect()
        })
        .collect();
    let labels = indices.iter().map(|&i| ring.labels()[i].clone()).collect();
    let group = FiniteGroup::from_labeled_table(table, labels)
        .map_err(|e| FusionError::NotVerified(format!("invertibles do not form a group: {e}")))?;
    Ok(Invertibles { indices, group })
}

/// Data of a ring whose basis dimensions are `1` and a single `d > 1`.
#[derive(Clone, Debug, Serialize)]
pub struct DimensionProfile {
    pub is_two_dimension: bool,
    #[serde(serialize_with = "crate::serial::ser_algebraic")]
    pub d: AlgebraicReal,
    pub r: u64,
    pub s: u64,
    pub d_is_rational: bool,
}

impl DimensionProfile {
    /// `d` in closed form. Always available: `d` is a root of `x² − rx − s`.
    pub fn d_quadratic(&self) -> &QuadraticNumber {
        self.d.as_quadratic().expect("profile dimension is quadratic")
    }

    /// The other root `d₋ = r − d` of `x² − rx − s`.
    pub fn d_minus(&self) -> QuadraticNumber {
        &QuadraticNumber::from_int(self.r as i64) - self.d_quadratic()
    }
}

/// The positive root of `x² − rx − s`.
pub fn positive_root(r: u64, s: u64) -> QuadraticNumber {
    let disc = r * r + 4 * s;
    QuadraticNumber::with_radicand(
        Rational::new((r as i64).into(), 2.into()),
        Rational::new(1.into(), 2.into()),
        disc,
    )
}

/// Reads `r` and `s` from `x x*` for the lowest noninvertible `x`, then
/// confirms exactly that every basis dimension is `1` or `d`.
pub fn dimension_profile(ring: &FusionRing) -> Result<DimensionProfile> {
    let inv = invertibles(ring)?;
    let Some(x) = (0..ring.rank()).find(|&i| !inv.contains(i)) else {
        return Ok(DimensionProfile {
            is_two_dimension: false,
            d: AlgebraicReal::from_int(1),
            r: 0,
            s: 1,
            d_is_rational: true,
        });
    };
    let (mut r, mut s) = (0u64, 0u64);
    for (k, c) in ring.product(x, ring.dual(x)) {
        if inv.contains(k) {
            s += u64::from(c);
        } else {
            r += u64::from(c);
        }
    }
    let d = positive_root(r, s);
    let dim = |i: usize| if inv.contains(i) { QuadraticNumber::one() } else { d.clone() };
    let n = ring.rank();
    for y in 0..n {
        for j in 0..n {
            let mut lhs = QuadraticNumber::zero();
            for (k, c) in ring.product(y, j) {
                lhs = &lhs + &(&dim(k) * &QuadraticNumber::from_int(i64::from(c)));
            }
            if lhs != &dim(y) * &dim(j) {
                return Err(FusionError::NotTwoDimension(format!(
                    "dimension vector with d = {d} is not a character at ({y}, {j})"
                )));
            }
        }
    }
    Ok(DimensionProfile {
        is_two_dimension: true,
        d_is_rational: d.is_rational(),
        d: AlgebraicReal::Quadratic(d),
        r,
        s,
    })
}
