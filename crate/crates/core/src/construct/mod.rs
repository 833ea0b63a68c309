//! Builders for the standard families of fusion rings.

mod chartable;

pub use chartable::{character_ring, dihedral_character_ring, dihedral_character_table, CharacterTable};
pub use crate::group::AbelianGroupSpec;

use crate::error::{FusionError, Result};
use crate::group::FiniteGroup;
use crate::ring::{FusionRing, Violation};

fn element_label(g: &FiniteGroup, i: usize) -> String {
    if i == 0 {
        "1".into()
    } else {
        g.labels()[i].clone()
    }
}

fn orbit_label(g: &FiniteGroup, rep: usize) -> String {
    if rep == 0 {
        "x".into()
    } else {
        format!("{}x", g.labels()[rep])
    }
}

struct Builder {
    n: usize,
    tensor: Vec<u32>,
}

impl Builder {
    fn new(n: usize) -> Self {
        Builder { n, tensor: vec![0; n * n * n] }
    }

    fn add(&mut self, i: usize, j: usize, k: usize, v: u32) {
        self.tensor[(i * self.n + j) * self.n + k] += v;
    }
}

/// The integral group ring `ZG`.
pub fn group_ring(g: &FiniteGroup) -> FusionRing {
    let n = g.order();
    let mut b = Builder::new(n);
    for x in 0..n {
        for y in 0..n {
            b.add(x, y, g.mul(x, y), 1);
        }
    }
    let labels = (0..n).map(|i| element_label(g, i)).collect();
    let dual = (0..n).map(|i| g.inv(i)).collect();
    FusionRing::from_flat(labels, dual, b.tensor).expect("group ring shape")
}

/// `ZG` for an explicit multiplication table, validated first.
pub fn group_ring_from_table(table: Vec<Vec<usize>>) -> Result<FusionRing> {
    Ok(group_ring(&FiniteGroup::from_table(table)?))
}

/// The near-group ring `R(G, ℓ)`: basis `G ∪ {ρ}` with `gρ = ρg = ρ` and
/// `ρ² = ℓρ + Σ_g g`.
pub fn near_group(g: &FiniteGroup, level: u32) -> FusionRing {
    let n = g.order();
    let rho = n;
    let mut b = Builder::new(n + 1);
    for x in 0..n {
        for y in 0..n {
            b.add(x, y, g.mul(x, y), 1);
        }
        b.add(x, rho, rho, 1);
        b.add(rho, x, rho, 1);
        b.add(rho, rho, x, 1);
    }
    b.add(rho, rho, rho, level);
    let mut labels: Vec<String> = (0..n).map(|i| element_label(g, i)).collect();
    labels.push("rho".into());
    let mut dual: Vec<usize> = (0..n).map(|i| g.inv(i)).collect();
    dual.push(rho);
    FusionRing::from_flat(labels, dual, b.tensor).expect("near-group shape")
}

/// The Haagerup–Izumi ring of an abelian group: basis `G ∪ {gx}` with
/// `(gx)(hx) = gh⁻¹ + Σ_f fx`, `xg = g⁻¹x`, every `gx` self-dual.
pub fn haagerup_izumi(g: &FiniteGroup) -> Result<FusionRing> {
    if !g.is_abelian() {
        return Err(FusionError::NonAbelian);
    }
    let n = g.order();
    let mut b = Builder::new(2 * n);
    for a in 0..n {
        for c in 0..n {
            b.add(a, c, g.mul(a, c), 1);
            b.add(a, n + c, n + g.mul(a, c), 1);
            b.add(n + c, a, n + g.mul(c, g.inv(a)), 1);
            b.add(n + a, n + c, g.mul(a, g.inv(c)), 1);
            for f in 0..n {
                b.add(n + a, n + c, n + f, 1);
            }
        }
    }
    let mut labels: Vec<String> = (0..n).map(|i| element_label(g, i)).collect();
    labels.extend((0..n).map(|i| orbit_label(g, i)));
    let dual = (0..n).map(|i| g.inv(i)).chain(n..2 * n).collect();
    Ok(FusionRing::from_flat(labels, dual, b.tensor).expect("Haagerup–Izumi shape"))
}

/// The uniform two-orbit ring for an abelian `G`, subgroup `H`, involutive
/// automorphism `θ` of `G/H` (a permutation of coset indices, cosets
/// ordered by least element) and coefficient `k`:
/// basis `G ∪ {κx : κ ∈ K}` with `K` the least coset representatives,
/// `xg = θ(g)x`, and `x² = Σ_H h + k·Σ_κ κx`.
///
/// Associativity is checked; a failure is reported with a witness.
pub fn uniform_two_orbit(g: &FiniteGroup, h: &[usize], theta: &[usize], k: u32) -> Result<FusionRing> {
    if !g.is_abelian() {
        return Err(FusionError::NonAbelian);
    }
    let mut h = h.to_vec();
    h.sort_unstable();
    h.dedup();
    if !g.is_subgroup(&h) {
        return Err(FusionError::InvalidArgument("H is not a subgroup".into()));
    }
    let q = g.quotient(&h)?;
    let m = q.cosets.len();
    if !q.group.is_automorphism(theta) {
        return Err(FusionError::InvalidArgument("theta is not an automorphism of G/H".into()));
    }
    if (0..m).any(|i| theta[theta[i]] != i) {
        return Err(FusionError::InvalidArgument("theta is not an involution".into()));
    }
    let n = g.order();
    let qg = &q.group;
    let mut b = Builder::new(n + m);
    for a in 0..n {
        let ca = q.coset_of[a];
        for c in 0..n {
            b.add(a, c, g.mul(a, c), 1);
        }
        for i in 0..m {
            b.add(a, n + i, n + qg.mul(ca, i), 1);
            b.add(n + i, a, n + qg.mul(i, theta[ca]), 1);
        }
    }
    for i in 0..m {
        for j in 0..m {
            let target = qg.mul(i, theta[j]);
            for &e in &q.cosets[target] {
                b.add(n + i, n + j, e, 1);
            }
            for l in 0..m {
                b.add(n + i, n + j, n + l, k);
            }
        }
    }
    let mut labels: Vec<String> = (0..n).map(|i| element_label(g, i)).collect();
    labels.extend(q.cosets.iter().map(|c| orbit_label(g, c[0])));
    let dual = (0..n)
        .map(|i| g.inv(i))
        .chain((0..m).map(|i| n + theta[qg.inv(i)]))
        .collect();
    let ring = FusionRing::from_flat(labels, dual, b.tensor).expect("uniform ring shape");
    let report = ring.verify_axioms();
    if let Some(v) = report.violations.iter().find_map(|v| match v {
        Violation::Associativity { i, j, k, l, .. } => Some(FusionError::AssociativityFailure {
            i: *i,
            j: *j,
            k: *k,
            l: *l,
        }),
        _ => None,
    }) {
        return Err(v);
    }
    if let Some(v) = report.violations.first() {
        return Err(FusionError::NotVerified(v.to_string()));
    }
    Ok(ring)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::AbelianGroupSpec;

    fn cyc(n: usize) -> FiniteGroup {
        AbelianGroupSpec::cyclic(n).to_group()
    }

    #[test]
    fn near_group_c2_1_fusion_matrix() {
        let r = near_group(&cyc(2), 1);
        assert!(r.is_fusion_ring());
        assert_eq!(r.fusion_matrix(2).unwrap(), vec![vec![0, 0, 1], vec![0, 0, 1], vec![1, 1, 1]]);
    }

    #[test]
    fn haagerup_izumi_commutativity() {
        for n in 1..=5 {
            let r = haagerup_izumi(&cyc(n)).unwrap();
            assert!(r.is_fusion_ring(), "n = {n}");
            assert_eq!(r.is_commutative(), n <= 2, "n = {n}");
            assert_eq!(r.rank(), 2 * n);
        }
        assert!(haagerup_izumi(&FiniteGroup::symmetric3()).is_err());
    }

    #[test]
    fn uniform_reproduces_haagerup() {
        let g = cyc(3);
        let u = uniform_two_orbit(&g, &[0], &g.inversion_map(), 1).unwrap();
        let h = haagerup_izumi(&g).unwrap();
        assert_eq!(u, h);
    }

    #[test]
    fn uniform_with_full_stabilizer_is_near_group() {
        for n in 1..=4 {
            let g = cyc(n);
            let all: Vec<usize> = (0..n).collect();
            for k in 0..4 {
                let u = uniform_two_orbit(&g, &all, &[0], k).unwrap();
                assert!(u.same_rules(&near_group(&g, k)), "n = {n}, k = {k}");
            }
        }
    }

    #[test]
    fn uniform_k0_with_identity_theta_is_pointed() {
        let g = cyc(4);
        let r = uniform_two_orbit(&g, &[0], &[0, 1, 2, 3], 0).unwrap();
        assert_eq!(r.rank(), 8);
        assert!((0..8).all(|i| r.product_basis(i, r.dual(i)) == Some(0)));
        assert!(r.is_commutative());
    }

    #[test]
    fn s3_group_ring_is_noncommutative() {
        let r = group_ring(&FiniteGroup::symmetric3());
        assert_eq!(r.rank(), 6);
        assert!(r.is_fusion_ring());
        assert!(!r.is_commutative());
    }
}
