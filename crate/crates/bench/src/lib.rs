//! Fixture rings shared by the benchmarks.

use fusionring::construct::{dihedral_character_ring, haagerup_izumi, near_group};
use fusionring::{AbelianGroupSpec, FiniteGroup, FusionRing};

/// Named rings of moderate rank covering each constructor.
pub fn fixtures() -> Vec<(&'static str, FusionRing)> {
    let c2_3 = AbelianGroupSpec::elementary2(3).to_group();
    vec![
        ("near_group_c2^3_8", near_group(&c2_3, 8)),
        ("near_group_c7_14", near_group(&FiniteGroup::cyclic(7), 14)),
        ("haagerup_izumi_c3", haagerup_izumi(&FiniteGroup::cyclic(3)).expect("abelian")),
        ("haagerup_izumi_c2^3", haagerup_izumi(&c2_3).expect("abelian")),
        ("dihedral_15", dihedral_character_ring(15).expect("n >= 3")),
    ]
}
