mod common;

use common::{abelian, axioms_hold};
use fusionring::construct::{dihedral_character_ring, group_ring, haagerup_izumi, near_group};
use fusionring::{FiniteGroup, FusionRing};
use proptest::prelude::*;

/// Abelian invariant-factor lists of every abelian group of order ≤ 16.
fn abelian_factor_lists() -> Vec<Vec<usize>> {
    let mut out: Vec<Vec<usize>> = (1..=16).map(|n| vec![n]).collect();
    for f in [[2, 2].as_slice(), &[2, 4], &[2, 2, 2], &[3, 3], &[2, 6], &[2, 8], &[4, 4], &[2, 2, 4], &[2, 2, 2, 2]] {
        out.push(f.to_vec());
    }
    out
}

fn groups_up_to_16() -> Vec<FiniteGroup> {
    let mut out: Vec<FiniteGroup> = abelian_factor_lists().iter().map(|f| abelian(f)).collect();
    out.push(FiniteGroup::symmetric3());
    out
}

#[test]
fn corpus_satisfies_axioms() {
    for e in common::corpus() {
        let report = e.ring.verify_axioms();
        assert!(report.is_ok(), "{}: {:?}", e.name, report);
        assert!(axioms_hold(&e.ring), "{}", e.name);
    }
}

#[test]
fn group_and_haagerup_izumi_grid() {
    for g in groups_up_to_16() {
        assert!(group_ring(&g).verify_axioms().is_ok());
        if g.is_abelian() {
            assert!(haagerup_izumi(&g).unwrap().verify_axioms().is_ok(), "HI of order {}", g.order());
        }
    }
}

#[test]
fn dihedral_grid() {
    for n in 3..=20 {
        let r = dihedral_character_ring(n).unwrap();
        assert!(r.verify_axioms().is_ok(), "D{n}");
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn near_group_grid(gi in 0usize..26, level in 0u32..=40) {
        let groups = groups_up_to_16();
        let g = &groups[gi % groups.len()];
        let r = near_group(g, level);
        prop_assert!(r.verify_axioms().is_ok());
    }

    #[test]
    fn mutation_verdict_matches_oracle(pick in any::<prop::sample::Index>(), i in any::<prop::sample::Index>(),
                                       j in any::<prop::sample::Index>(), k in any::<prop::sample::Index>(),
                                       bump in 1u32..4) {
        let corpus: Vec<FusionRing> = common::corpus().into_iter().map(|e| e.ring).collect();
        let ring = pick.get(&corpus);
        let n = ring.rank();
        let (i, j, k) = (i.index(n), j.index(n), k.index(n));
        let old = ring.c(i, j, k);
        let new = if old >= bump { old - bump } else { old + bump };
        let mutated = ring.with_entry(i, j, k, new);
        prop_assert_eq!(mutated.verify_axioms().is_ok(), axioms_hold(&mutated));
    }
}

#[test]
fn oracle_rejects_obvious_breakage() {
    let r = group_ring(&FiniteGroup::cyclic(3));
    assert!(!axioms_hold(&r.with_entry(1, 1, 2, 0)));
    assert!(!axioms_hold(&r.with_entry(0, 1, 1, 2)));
}
