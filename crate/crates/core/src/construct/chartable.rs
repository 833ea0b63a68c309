//! Character tables with exact cyclotomic entries and the fusion rings
//! they define.

use crate::error::{FusionError, Result};
use crate::group::AbelianGroupSpec;
use crate::numbers::cyclotomic::cyclotomic_poly;
use crate::ring::FusionRing;

/// Character table of a finite group. Entry `values[i][c]` is `χ_i` on
/// class `c`, given by integer coefficients in the basis `1, ζ_N, …,
/// ζ_N^(N−1)` with `N = root_order`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CharacterTable {
    pub group_order: u64,
    pub root_order: usize,
    pub class_sizes: Vec<u64>,
    pub values: Vec<Vec<Vec<i64>>>,
    pub labels: Option<Vec<String>>,
}

type Cyc = Vec<i128>;

impl CharacterTable {
    fn entry(&self, i: usize, c: usize) -> Cyc {
        let n = self.root_order;
        let mut v = vec![0i128; n];
        for (e, &x) in self.values[i][c].iter().enumerate() {
            v[e % n] += i128::from(x);
        }
        v
    }

    fn conj(&self, v: &Cyc) -> Cyc {
        let n = self.root_order;
        let mut w = vec![0i128; n];
        for (e, &x) in v.iter().enumerate() {
            w[(n - e) % n] += x;
        }
        w
    }

    fn mul(&self, a: &Cyc, b: &Cyc) -> Cyc {
        let n = self.root_order;
        let mut w = vec![0i128; n];
        for (i, &x) in a.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in b.iter().enumerate() {
                if y != 0 {
                    w[(i + j) % n] += x * y;
                }
            }
        }
        w
    }

    /// Canonical form modulo `Φ_N`.
    fn reduce(&self, v: &Cyc) -> Cyc {
        let phi = cyclotomic_poly(self.root_order);
        let deg = phi.len() - 1;
        let mut r = v.clone();
        for top in (deg..r.len()).rev() {
            let t = r[top];
            if t == 0 {
                continue;
            }
            for (i, &pc) in phi.iter().enumerate() {
                r[top - deg + i] -= t * i128::from(pc);
            }
        }
        r.truncate(deg);
        r
    }

    fn as_integer(&self, v: &Cyc) -> Option<i128> {
        let r = self.reduce(v);
        r[1..].iter().all(|&x| x == 0).then_some(r[0])
    }

    /// `Σ_c |c| · a(c) · conj(b(c))` as a cyclotomic number.
    fn pairing(&self, a: &[Cyc], b: &[Cyc]) -> Cyc {
        let mut s = vec![0i128; self.root_order];
        for (c, size) in self.class_sizes.iter().enumerate() {
            let t = self.mul(&a[c], &self.conj(&b[c]));
            for (x, y) in s.iter_mut().zip(t) {
                *x += i128::from(*size) * y;
            }
        }
        s
    }

    fn row(&self, i: usize) -> Vec<Cyc> {
        (0..self.class_sizes.len()).map(|c| self.entry(i, c)).collect()
    }

    /// Checks shape, class sizes, trivial first row, degrees and row
    /// orthogonality.
    pub fn validate(&self) -> Result<()> {
        let bad = |m: String| Err(FusionError::InvalidCharacterTable(m));
        let r = self.class_sizes.len();
        if r == 0 || self.root_order == 0 {
            return bad("empty table".into());
        }
        if self.values.len() != r || self.values.iter().any(|row| row.len() != r) {
            return bad(format!("table must be {r}×{r}"));
        }
        if self.class_sizes.iter().sum::<u64>() != self.group_order {
            return bad("class sizes do not sum to the group order".into());
        }
        if self.class_sizes[0] != 1 {
            return bad("first class must be the identity".into());
        }
        if let Some(l) = &self.labels {
            if l.len() != r {
                return bad("label count differs from rank".into());
            }
        }
        for c in 0..r {
            if self.as_integer(&self.entry(0, c)) != Some(1) {
                return bad("first row is not the trivial character".into());
            }
        }
        let mut dim_sq = 0i128;
        for i in 0..r {
            match self.as_integer(&self.entry(i, 0)) {
                Some(d) if d > 0 => dim_sq += d * d,
                _ => return bad(format!("character {i} has no positive integer degree")),
            }
        }
        if dim_sq != i128::from(self.group_order) {
            return bad(format!("sum of squared degrees is {dim_sq}, not {}", self.group_order));
        }
        let rows: Vec<Vec<Cyc>> = (0..r).map(|i| self.row(i)).collect();
        for i in 0..r {
            for j in i..r {
                let want = if i == j { i128::from(self.group_order) } else { 0 };
                if self.as_integer(&self.pairing(&rows[i], &rows[j])) != Some(want) {
                    return bad(format!("rows {i} and {j} are not orthonormal"));
                }
            }
        }
        Ok(())
    }

    /// Character table of a finite abelian group, characters ordered as in
    /// [`AbelianGroupSpec::characters`] (trivial first) and one class per
    /// element.
    pub fn abelian(spec: &AbelianGroupSpec) -> Self {
        let chars = spec.characters();
        let e = chars.first().map_or(1, |c| c.exponent) as usize;
        let n = spec.order();
        let values = chars
            .iter()
            .map(|ch| {
                ch.values
                    .iter()
                    .map(|&v| {
                        let mut coeffs = vec![0i64; e];
                        coeffs[v as usize] = 1;
                        coeffs
                    })
                    .collect()
            })
            .collect();
        CharacterTable { group_order: n as u64, root_order: e, class_sizes: vec![1; n], values, labels: None }
    }
}

/// The character ring: basis the irreducible characters, structure
/// constants the multiplicities `⟨χ_i χ_j, χ_k⟩`, duality complex
/// conjugation.
pub fn character_ring(table: &CharacterTable) -> Result<FusionRing> {
    table.validate()?;
    let r = table.class_sizes.len();
    let rows: Vec<Vec<Cyc>> = (0..r).map(|i| table.row(i)).collect();
    let order = i128::from(table.group_order);
    let mut tensor = vec![0u32; r * r * r];
    for i in 0..r {
        for j in 0..r {
            let prod: Vec<Cyc> = (0..r).map(|c| table.mul(&rows[i][c], &rows[j][c])).collect();
            for k in 0..r {
                let s = table.as_integer(&table.pairing(&prod, &rows[k]));
                let m = match s {
                    Some(v) if v >= 0 && v % order == 0 => v / order,
                    _ => {
                        return Err(FusionError::InvalidCharacterTable(format!(
                            "multiplicity of χ{k} in χ{i}·χ{j} is not a nonnegative integer"
                        )))
                    }
                };
                tensor[(i * r + j) * r + k] = u32::try_from(m).map_err(|_| {
                    FusionError::InvalidCharacterTable("multiplicity overflow".into())
                })?;
            }
        }
    }
    let mut dual = Vec::with_capacity(r);
    for i in 0..r {
        let conj: Vec<Cyc> = rows[i].iter().map(|v| table.reduce(&table.conj(v))).collect();
        let d = (0..r)
            .find(|&j| (0..r).all(|c| table.reduce(&rows[j][c]) == conj[c]))
            .ok_or_else(|| {
                FusionError::InvalidCharacterTable(format!("conjugate of χ{i} is not a row"))
            })?;
        dual.push(d);
    }
    let labels = table
        .labels
        .clone()
        .unwrap_or_else(|| (0..r).map(|i| if i == 0 { "1".into() } else { format!("chi{i}") }).collect());
    FusionRing::from_flat(labels, dual, tensor)
}

/// Closed-form character table of the dihedral group of order `2n`.
/// Classes: identity, (for even `n`) the central rotation, rotation pairs
/// `r^{±a}`, then the reflection classes.
pub fn dihedral_character_table(n: usize) -> Result<CharacterTable> {
    if n < 3 {
        return Err(FusionError::InvalidArgument(format!("dihedral order parameter n = {n} < 3")));
    }
    let even = n % 2 == 0;
    let pairs: Vec<usize> = (1..=(n - 1) / 2).collect();
    let zeta_sum = |e: usize| {
        let mut v = vec![0i64; n];
        v[e % n] += 1;
        v[(n - e % n) % n] += 1;
        v
    };
    let constant = |x: i64| {
        let mut v = vec![0i64; n];
        v[0] = x;
        v
    };
    // Class list: (rotation exponent or reflection parity, size)
    let mut rot_classes: Vec<usize> = vec![0];
    let mut sizes: Vec<u64> = vec![1];
    if even {
        rot_classes.push(n / 2);
        sizes.push(1);
    }
    for &a in &pairs {
        rot_classes.push(a);
        sizes.push(2);
    }
    let refl_classes: Vec<usize> = if even { vec![0, 1] } else { vec![0] };
    for _ in &refl_classes {
        sizes.push(if even { (n / 2) as u64 } else { n as u64 });
    }
    let mut values: Vec<Vec<Vec<i64>>> = Vec::new();
    let mut labels: Vec<String> = Vec::new();
    // Linear characters: (value on r, value on s, value on sr).
    let linear: Vec<(i64, i64, i64, &str)> = if even {
        vec![(1, 1, 1, "1"), (1, -1, -1, "sgn"), (-1, 1, -1, "eps1"), (-1, -1, 1, "eps2")]
    } else {
        vec![(1, 1, 1, "1"), (1, -1, -1, "sgn")]
    };
    for &(vr, vs, vsr, name) in &linear {
        let mut row: Vec<Vec<i64>> =
            rot_classes.iter().map(|&a| constant(if a % 2 == 0 { 1 } else { vr })).collect();
        for &p in &refl_classes {
            row.push(constant(if p == 0 { vs } else { vsr }));
        }
        values.push(row);
        labels.push(name.into());
    }
    let two_dim = if even { n / 2 - 1 } else { (n - 1) / 2 };
    for h in 1..=two_dim {
        let mut row: Vec<Vec<i64>> = rot_classes.iter().map(|&a| zeta_sum(h * a)).collect();
        for _ in &refl_classes {
            row.push(constant(0));
        }
        values.push(row);
        labels.push(format!("psi{h}"));
    }
    Ok(CharacterTable {
        group_order: 2 * n as u64,
        root_order: n,
        class_sizes: sizes,
        values,
        labels: Some(labels),
    })
}

/// The character ring of the dihedral group of order `2n`.
pub fn dihedral_character_ring(n: usize) -> Result<FusionRing> {
    character_ring(&dihedral_character_table(n)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct::group_ring;

    #[test]
    fn dihedral_ranks() {
        for (n, rank) in [(3, 3), (4, 5), (9, 6), (10, 8)] {
            let r = dihedral_character_ring(n).unwrap();
            assert_eq!(r.rank(), rank, "n = {n}");
            assert!(r.is_fusion_ring());
            assert!(r.is_commutative());
        }
        assert!(dihedral_character_ring(2).is_err());
    }

    #[test]
    fn s3_character_ring() {
        let r = dihedral_character_ring(3).unwrap();
        let sigma = r.index_of("psi1").unwrap();
        let sgn = r.index_of("sgn").unwrap();
        // σ² = 1 + sgn + σ
        let mut expect = vec![(0, 1), (sgn, 1), (sigma, 1)];
        expect.sort();
        assert_eq!(r.product(sigma, sigma), expect);
    }

    #[test]
    fn abelian_table_gives_dual_group_ring() {
        let spec = AbelianGroupSpec::cyclic(2);
        let r = character_ring(&CharacterTable::abelian(&spec)).unwrap();
        assert!(r.same_rules(&group_ring(&spec.to_group())));
    }

    #[test]
    fn invalid_tables_are_rejected() {
        let mut t = CharacterTable::abelian(&AbelianGroupSpec::cyclic(3));
        t.values[1][1] = vec![1, 0, 0];
        assert!(character_ring(&t).is_err());
        let mut t = CharacterTable::abelian(&AbelianGroupSpec::cyclic(2));
        t.class_sizes = vec![1, 2];
        assert!(character_ring(&t).is_err());
    }
}
