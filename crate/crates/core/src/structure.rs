//! Orbits of the invertible group and the structure of two-orbit rings.

use serde::Serialize;

use crate::dims::{invertibles, Invertibles};
use crate::error::{FusionError, Result};
use crate::group::FiniteGroup;
use crate::ring::FusionRing;

/// Orbits of the basis under multiplication by invertible elements.
#[derive(Clone, Debug, Serialize)]
pub struct OrbitStructure {
    /// Basis indices of the invertible elements.
    pub invertibles: Vec<usize>,
    /// Orbits under `x ↦ gx`, each sorted, ordered by least element (so the
    /// group itself comes first).
    pub left_orbits: Vec<Vec<usize>>,
    /// Left stabilizer `{g : gx = x}` of the least element of each orbit,
    /// as basis indices.
    pub stabilizers: Vec<Vec<usize>>,
    /// Orbits under `x ↦ xg`.
    pub right_orbits: Vec<Vec<usize>>,
    /// The stabilizer shared by every noninvertible element, if there is one.
    pub common_stabilizer: Option<Vec<usize>>,
}

impl OrbitStructure {
    pub fn orbit_count(&self) -> usize {
        self.left_orbits.len()
    }
}

fn left_stabilizer(ring: &FusionRing, inv: &Invertibles, x: usize) -> Vec<usize> {
    inv.indices.iter().copied().filter(|&g| ring.product_basis(g, x) == Some(x)).collect()
}

fn orbits(ring: &FusionRing, inv: &Invertibles, left: bool) -> Vec<Vec<usize>> {
    let n = ring.rank();
    let mut seen = vec![false; n];
    let mut out = Vec::new();
    for x in 0..n {
        if seen[x] {
            continue;
        }
        let mut orbit: Vec<usize> = inv
            .indices
            .iter()
            .map(|&g| {
                let y = if left { ring.product_basis(g, x) } else { ring.product_basis(x, g) };
                y.expect("invertible times basis element is basic")
            })
            .collect();
        orbit.sort_unstable();
        orbit.dedup();
        for &y in &orbit {
            seen[y] = true;
        }
        out.push(orbit);
    }
    out
}

pub fn orbit_structure(ring: &FusionRing) -> Result<OrbitStructure> {
    let inv = invertibles(ring)?;
    let left_orbits = orbits(ring, &inv, true);
    let right_orbits = orbits(ring, &inv, false);
    let stabilizers = left_orbits.iter().map(|o| left_stabilizer(ring, &inv, o[0])).collect();
    let noninv: Vec<usize> = (0..ring.rank()).filter(|&x| !inv.contains(x)).collect();
    let common_stabilizer = match noninv.first() {
        None => None,
        Some(&x0) => {
            let h = left_stabilizer(ring, &inv, x0);
            noninv.iter().all(|&x| left_stabilizer(ring, &inv, x) == h).then_some(h)
        }
    };
    Ok(OrbitStructure {
        invertibles: inv.indices,
        left_orbits,
        stabilizers,
        right_orbits,
        common_stabilizer,
    })
}

/// Structure of a ring with exactly two left orbits.
#[derive(Clone, Debug, Serialize)]
pub struct TwoOrbitData {
    /// Basis indices of `G`; local group element `i` is basis element
    /// `g_indices[i]`.
    pub g_indices: Vec<usize>,
    #[serde(skip)]
    pub group: FiniteGroup,
    /// The common stabilizer `H` as basis indices.
    pub h: Vec<usize>,
    /// `H` as local group elements.
    #[serde(skip)]
    pub h_local: Vec<usize>,
    /// Cosets `gH` as basis indices, ordered by least element.
    pub cosets: Vec<Vec<usize>>,
    /// Whether `G/H` is abelian.
    pub quotient_abelian: bool,
    /// `θ` as a permutation of coset indices, from the chosen `x`.
    pub theta: Vec<usize>,
    /// `θ_x` for every noninvertible `x`, in basis order.
    pub theta_family: Vec<(usize, Vec<usize>)>,
    /// The noninvertible basis element used to compute `θ`.
    pub chosen_x: usize,
    pub noninvertibles: Vec<usize>,
    /// `k` with `x x* = Σ_H h + k·Σ_y y` for every noninvertible `x`.
    pub uniform_k: Option<u64>,
    pub noninv_selfdual: bool,
}

impl TwoOrbitData {
    pub fn order_g(&self) -> usize {
        self.g_indices.len()
    }

    pub fn order_h(&self) -> usize {
        self.h.len()
    }

    pub fn index(&self) -> usize {
        self.cosets.len()
    }

    /// The uniform coefficient divided by `|H|`, when integral.
    pub fn uniform_k_per_stabilizer(&self) -> Option<u64> {
        let k = self.uniform_k?;
        let h = self.order_h() as u64;
        (k % h == 0).then_some(k / h)
    }
}

/// Computes `θ_x : gH ↦ g'H` where `g'x = xg`, checking it is well defined,
/// bijective and multiplicative.
fn theta_for(
    ring: &FusionRing,
    inv: &Invertibles,
    q: &crate::group::Quotient,
    x: usize,
) -> Result<Vec<usize>> {
    let g = &inv.group;
    let m = q.cosets.len();
    let mut theta = vec![usize::MAX; m];
    for a in 0..g.order() {
        let xg = ring
            .product_basis(x, inv.indices[a])
            .expect("noninvertible times invertible is basic");
        let lifts: Vec<usize> =
            (0..g.order()).filter(|&b| ring.product_basis(inv.indices[b], x) == Some(xg)).collect();
        let Some(&b) = lifts.first() else {
            return Err(FusionError::ThetaInconsistent(format!(
                "x{x}·g is not in G·x for g = {}",
                inv.indices[a]
            )));
        };
        let target = q.coset_of[b];
        if lifts.iter().any(|&l| q.coset_of[l] != target) {
            return Err(FusionError::ThetaInconsistent("g' spans several cosets".into()));
        }
        let ca = q.coset_of[a];
        if theta[ca] == usize::MAX {
            theta[ca] = target;
        } else if theta[ca] != target {
            return Err(FusionError::ThetaInconsistent(format!(
                "θ_{x} is not well defined on coset {ca}"
            )));
        }
    }
    if !q.group.is_automorphism(&theta) {
        return Err(FusionError::ThetaInconsistent(format!("θ_{x} is not an automorphism of G/H")));
    }
    Ok(theta)
}

pub fn two_orbit_data(ring: &FusionRing) -> Result<TwoOrbitData> {
    let orbits = orbit_structure(ring)?;
    if orbits.orbit_count() != 2 {
        return Err(FusionError::NotTwoOrbit { orbits: orbits.orbit_count() });
    }
    let inv = invertibles(ring)?;
    let noninvertibles = orbits.left_orbits[1].clone();
    let chosen_x = noninvertibles[0];
    let h = orbits.common_stabilizer.clone().ok_or_else(|| {
        FusionError::ThetaInconsistent("noninvertible stabilizers differ".into())
    })?;
    let h_local: Vec<usize> = h.iter().map(|&b| inv.local(b).expect("stabilizer in G")).collect();
    let g = &inv.group;
    if !g.is_normal(&h_local) {
        return Err(FusionError::ThetaInconsistent("stabilizer is not normal".into()));
    }
    let q = g.quotient(&h_local)?;
    let quotient_abelian = q.group.is_abelian();
    let theta = theta_for(ring, &inv, &q, chosen_x)?;
    let mut theta_family = Vec::with_capacity(noninvertibles.len());
    for &x in &noninvertibles {
        let t = theta_for(ring, &inv, &q, x)?;
        if quotient_abelian && t != theta {
            return Err(FusionError::ThetaInconsistent(format!(
                "θ_{x} differs from θ_{chosen_x} although G/H is abelian"
            )));
        }
        theta_family.push((x, t));
    }
    if quotient_abelian && (0..theta.len()).any(|i| theta[theta[i]] != i) {
        return Err(FusionError::ThetaInconsistent("θ does not square to the identity".into()));
    }
    let uniform_k = if quotient_abelian { uniform_coefficient(ring, &inv, &h, &noninvertibles) } else { None };
    let cosets = q
        .cosets
        .iter()
        .map(|c| c.iter().map(|&l| inv.indices[l]).collect())
        .collect();
    Ok(TwoOrbitData {
        g_indices: inv.indices.clone(),
        group: inv.group.clone(),
        h,
        h_local,
        cosets,
        quotient_abelian,
        theta,
        theta_family,
        chosen_x,
        noninv_selfdual: noninvertibles.iter().all(|&x| ring.dual(x) == x),
        noninvertibles,
        uniform_k,
    })
}

fn uniform_coefficient(
    ring: &FusionRing,
    inv: &Invertibles,
    h: &[usize],
    noninv: &[usize],
) -> Option<u64> {
    let mut k = None;
    for &x in noninv {
        let xx = ring.product(x, ring.dual(x));
        let coeff = |b: usize| xx.iter().find(|&&(i, _)| i == b).map_or(0, |&(_, c)| u64::from(c));
        if inv.indices.iter().any(|&g| coeff(g) != u64::from(h.contains(&g))) {
            return None;
        }
        for &y in noninv {
            let c = coeff(y);
            match k {
                None => k = Some(c),
                Some(k0) if k0 != c => return None,
                _ => {}
            }
        }
    }
    k
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct::{dihedral_character_ring, haagerup_izumi, near_group};
    use crate::group::AbelianGroupSpec;

    fn cyc(n: usize) -> FiniteGroup {
        AbelianGroupSpec::cyclic(n).to_group()
    }

    #[test]
    fn near_group_orbits() {
        let r = near_group(&cyc(3), 3);
        let o = orbit_structure(&r).unwrap();
        assert_eq!(o.left_orbits, vec![vec![0, 1, 2], vec![3]]);
        assert_eq!(o.stabilizers[1], vec![0, 1, 2]);
        let t = two_orbit_data(&r).unwrap();
        assert_eq!(t.h, vec![0, 1, 2]);
        assert_eq!(t.theta, vec![0]);
        assert_eq!(t.uniform_k, Some(3));
        assert_eq!(t.uniform_k_per_stabilizer(), Some(1));
        assert!(t.noninv_selfdual);
    }

    #[test]
    fn haagerup_theta_is_inversion() {
        let r = haagerup_izumi(&cyc(3)).unwrap();
        let t = two_orbit_data(&r).unwrap();
        assert_eq!(t.h, vec![0]);
        assert_eq!(t.theta, vec![0, 2, 1]);
        assert_eq!(t.uniform_k, Some(1));
        assert_eq!(orbit_structure(&r).unwrap().common_stabilizer, Some(vec![0]));
    }

    #[test]
    fn dihedral_nine_is_not_two_orbit() {
        let r = dihedral_character_ring(9).unwrap();
        let o = orbit_structure(&r).unwrap();
        assert_eq!(o.orbit_count(), 5);
        assert!(matches!(two_orbit_data(&r), Err(FusionError::NotTwoOrbit { orbits: 5 })));
    }
}
