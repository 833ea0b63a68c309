mod common;

use common::two_orbit::Raw;
use fusionring::construct::haagerup_izumi;
use fusionring::structure::two_orbit_data;

fn two_orbit_corpus() -> Vec<common::Entry> {
    common::corpus().into_iter().filter(|e| Raw::new(&e.ring).is_two_orbit()).collect()
}

#[test]
fn structure_recognises_the_same_rings() {
    let mut count = 0;
    for e in common::corpus() {
        let two = Raw::new(&e.ring).is_two_orbit();
        assert_eq!(two, two_orbit_data(&e.ring).is_ok(), "{}", e.name);
        count += usize::from(two);
    }
    assert!(count > 60, "{count}");
}

#[test]
fn dual_orbit_and_stabilizer_properties() {
    for e in two_orbit_corpus() {
        Raw::new(&e.ring).check_orbits().unwrap_or_else(|m| panic!("{}: {m}", e.name));
    }
}

#[test]
fn theta_is_an_automorphism_and_an_involution() {
    for e in two_orbit_corpus() {
        Raw::new(&e.ring).check_theta().unwrap_or_else(|m| panic!("{}: {m}", e.name));
    }
}

#[test]
fn index_two_commutative_iff_abelian() {
    let mut seen = 0;
    for e in two_orbit_corpus() {
        if let Some(ok) = Raw::new(&e.ring).index_two_commutativity() {
            assert!(ok, "{}", e.name);
            seen += 1;
        }
    }
    assert!(seen >= 3, "{seen}");
}

/// `xg = g⁻¹x`, so the ring is commutative exactly when inversion is
/// trivial on `G`. For cyclic `G` that is `|G| ≤ 2`; `C₂²` is a
/// commutative exception to the order bound.
#[test]
fn haagerup_izumi_commutative_iff_exponent_two() {
    for (name, g) in common::small_groups().into_iter().filter(|(_, g)| g.is_abelian()) {
        let r = haagerup_izumi(&g).unwrap();
        assert_eq!(r.is_commutative(), g.exponent() <= 2, "HI({name})");
        if g.is_cyclic() {
            assert_eq!(r.is_commutative(), g.order() <= 2, "HI({name})");
        }
    }
    assert!(haagerup_izumi(&common::abelian(&[2, 2])).unwrap().is_commutative());
}
