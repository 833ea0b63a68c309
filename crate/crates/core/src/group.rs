//! Finite groups given by multiplication tables.

use std::collections::VecDeque;

use serde::{Deserialize, Serialize};

use crate::error::{FusionError, Result};

/// A finite group on `{0, …, n−1}` with identity `0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteGroup {
    table: Vec<Vec<usize>>,
    inv: Vec<usize>,
    labels: Vec<String>,
}

/// A linear character of an abelian group: `χ(g) = ζ_e^{values[g]}`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct LinearCharacter {
    pub exponent: u64,
    pub values: Vec<u64>,
}

impl LinearCharacter {
    pub fn is_trivial_on(&self, elements: &[usize]) -> bool {
        elements.iter().all(|&g| self.values[g] == 0)
    }

    pub fn is_trivial(&self) -> bool {
        self.values.iter().all(|&v| v == 0)
    }
}

/// A quotient `G/N` with the map from elements to cosets.
#[derive(Clone, Debug)]
pub struct Quotient {
    pub group: FiniteGroup,
    /// Cosets ordered by least element, each sorted.
    pub cosets: Vec<Vec<usize>>,
    pub coset_of: Vec<usize>,
}

impl FiniteGroup {
    /// Validates a multiplication table. If the identity is not element
    /// `0`, elements `0` and the identity are swapped.
    pub fn from_table(table: Vec<Vec<usize>>) -> Result<Self> {
        let labels = (0..table.len()).map(|i| format!("g{i}")).collect();
        Self::from_labeled_table(table, labels)
    }

    pub fn from_labeled_table(table: Vec<Vec<usize>>, labels: Vec<String>) -> Result<Self> {
        let n = table.len();
        if n == 0 {
            return Err(FusionError::InvalidGroup("empty table".into()));
        }
        if labels.len() != n {
            return Err(FusionError::InvalidGroup("label count differs from order".into()));
        }
        for (i, row) in table.iter().enumerate() {
            if row.len() != n {
                return Err(FusionError::InvalidGroup(format!("row {i} has length {}", row.len())));
            }
            if row.iter().any(|&v| v >= n) {
                return Err(FusionError::InvalidGroup(format!("row {i} has an entry out of range")));
            }
        }
        let e = (0..n)
            .find(|&e| (0..n).all(|g| table[e][g] == g && table[g][e] == g))
            .ok_or_else(|| FusionError::InvalidGroup("no identity element".into()))?;
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if table[table[a][b]][c] != table[a][table[b][c]] {
                        return Err(FusionError::InvalidGroup(format!(
                            "not associative at ({a}, {b}, {c})"
                        )));
                    }
                }
            }
        }
        let mut inv = vec![usize::MAX; n];
        for a in 0..n {
            inv[a] = (0..n)
                .find(|&b| table[a][b] == e)
                .ok_or_else(|| FusionError::InvalidGroup(format!("element {a} has no inverse")))?;
        }
        let mut g = FiniteGroup { table, inv, labels };
        if e != 0 {
            let mut perm: Vec<usize> = (0..n).collect();
            perm.swap(0, e);
            g = g.relabel(&perm);
        }
        Ok(g)
    }

    /// Renames element `i` to `perm[i]`.
    fn relabel(&self, perm: &[usize]) -> Self {
        let n = self.order();
        let mut table = vec![vec![0; n]; n];
        let mut inv = vec![0; n];
        let mut labels = vec![String::new(); n];
        for a in 0..n {
            for b in 0..n {
                table[perm[a]][perm[b]] = perm[self.table[a][b]];
            }
            inv[perm[a]] = perm[self.inv[a]];
            labels[perm[a]] = self.labels[a].clone();
        }
        FiniteGroup { table, inv, labels }
    }

    pub fn cyclic(n: usize) -> Self {
        assert!(n >= 1);
        let table = (0..n).map(|a| (0..n).map(|b| (a + b) % n).collect()).collect();
        Self::from_table(table).expect("cyclic table is a group")
    }

    /// The symmetric group on three letters, elements in the order
    /// `e, (12), (13), (23), (123), (132)`.
    pub fn symmetric3() -> Self {
        let perms: [[usize; 3]; 6] =
            [[0, 1, 2], [1, 0, 2], [2, 1, 0], [0, 2, 1], [1, 2, 0], [2, 0, 1]];
        let idx = |p: [usize; 3]| perms.iter().position(|q| *q == p).unwrap();
        let table = (0..6)
            .map(|a| {
                (0..6)
                    .map(|b| {
                        // (a·b)(i) = a(b(i))
                        let p = [perms[a][perms[b][0]], perms[a][perms[b][1]], perms[a][perms[b][2]]];
                        idx(p)
                    })
                    .collect()
            })
            .collect();
        let labels = ["e", "(12)", "(13)", "(23)", "(123)", "(132)"].map(String::from).to_vec();
        Self::from_labeled_table(table, labels).expect("S3 table is a group")
    }

    pub fn order(&self) -> usize {
        self.table.len()
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a][b]
    }

    pub fn inv(&self, a: usize) -> usize {
        self.inv[a]
    }

    pub fn table(&self) -> &[Vec<usize>] {
        &self.table
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn is_abelian(&self) -> bool {
        let n = self.order();
        (0..n).all(|a| (0..n).all(|b| self.table[a][b] == self.table[b][a]))
    }

    pub fn element_order(&self, a: usize) -> usize {
        let mut x = a;
        let mut k = 1;
        while x != 0 {
            x = self.table[x][a];
            k += 1;
        }
        k
    }

    /// Least common multiple of element orders.
    pub fn exponent(&self) -> usize {
        (0..self.order()).fold(1, |acc, a| num_integer::lcm(acc, self.element_order(a)))
    }

    pub fn is_cyclic(&self) -> bool {
        (0..self.order()).any(|a| self.element_order(a) == self.order())
    }

    /// The subgroup generated by `gens`, sorted.
    pub fn generated_subgroup(&self, gens: &[usize]) -> Vec<usize> {
        let mut seen = vec![false; self.order()];
        seen[0] = true;
        let mut queue = VecDeque::from([0usize]);
        while let Some(x) = queue.pop_front() {
            for &g in gens {
                let y = self.table[x][g];
                if !seen[y] {
                    seen[y] = true;
                    queue.push_back(y);
                }
            }
        }
        (0..self.order()).filter(|&i| seen[i]).collect()
    }

    pub fn is_subgroup(&self, h: &[usize]) -> bool {
        let mut member = vec![false; self.order()];
        for &x in h {
            if x >= self.order() {
                return false;
            }
            member[x] = true;
        }
        member[0]
            && h.iter()
                .all(|&a| member[self.inv[a]] && h.iter().all(|&b| member[self.table[a][b]]))
    }

    pub fn is_normal(&self, h: &[usize]) -> bool {
        let mut member = vec![false; self.order()];
        for &x in h {
            member[x] = true;
        }
        self.is_subgroup(h)
            && (0..self.order()).all(|g| {
                h.iter().all(|&x| member[self.table[self.table[g][x]][self.inv[g]]])
            })
    }

    /// Left cosets `gH`, ordered by least element, each sorted.
    pub fn left_cosets(&self, h: &[usize]) -> Vec<Vec<usize>> {
        let mut assigned = vec![false; self.order()];
        let mut out = Vec::new();
        for g in 0..self.order() {
            if assigned[g] {
                continue;
            }
            let mut coset: Vec<usize> = h.iter().map(|&x| self.table[g][x]).collect();
            coset.sort_unstable();
            for &y in &coset {
                assigned[y] = true;
            }
            out.push(coset);
        }
        out
    }

    /// The quotient by a normal subgroup; coset `i` becomes element `i`.
    pub fn quotient(&self, h: &[usize]) -> Result<Quotient> {
        if !self.is_normal(h) {
            return Err(FusionError::InvalidGroup("quotient by a non-normal subgroup".into()));
        }
        let cosets = self.left_cosets(h);
        let mut coset_of = vec![0; self.order()];
        for (i, c) in cosets.iter().enumerate() {
            for &g in c {
                coset_of[g] = i;
            }
        }
        let table = cosets
            .iter()
            .map(|a| cosets.iter().map(|b| coset_of[self.table[a[0]][b[0]]]).collect())
            .collect();
        let labels = cosets.iter().map(|c| format!("{}H", self.labels[c[0]])).collect();
        let group = FiniteGroup::from_labeled_table(table, labels)?;
        Ok(Quotient { group, cosets, coset_of })
    }

    pub fn is_automorphism(&self, perm: &[usize]) -> bool {
        let n = self.order();
        if perm.len() != n {
            return false;
        }
        let mut seen = vec![false; n];
        for &p in perm {
            if p >= n || seen[p] {
                return false;
            }
            seen[p] = true;
        }
        (0..n).all(|a| (0..n).all(|b| perm[self.table[a][b]] == self.table[perm[a]][perm[b]]))
    }

    pub fn inversion_map(&self) -> Vec<usize> {
        self.inv.clone()
    }

    /// All linear characters of an abelian group, sorted by value vector.
    pub fn abelian_characters(&self) -> Result<Vec<LinearCharacter>> {
        if !self.is_abelian() {
            return Err(FusionError::NonAbelian);
        }
        let e = self.exponent() as u64;
        // Greedy generating set.
        let mut gens = Vec::new();
        let mut span = vec![0usize];
        for g in 0..self.order() {
            if span.binary_search(&g).is_err() {
                gens.push(g);
                span = self.generated_subgroup(&gens);
            }
        }
        // Admissible images: v with order(g)·v ≡ 0 (mod e).
        let choices: Vec<Vec<u64>> = gens
            .iter()
            .map(|&g| {
                let o = self.element_order(g) as u64;
                (0..o).map(|j| j * (e / o)).collect()
            })
            .collect();
        let mut out = Vec::new();
        let mut idx = vec![0usize; gens.len()];
        loop {
            let images: Vec<u64> = idx.iter().zip(&choices).map(|(&i, c)| c[i]).collect();
            if let Some(values) = self.extend_character(&gens, &images, e) {
                out.push(LinearCharacter { exponent: e, values });
            }
            // Odometer increment.
            let mut pos = 0;
            loop {
                if pos == idx.len() {
                    out.sort();
                    return Ok(out);
                }
                idx[pos] += 1;
                if idx[pos] < choices[pos].len() {
                    break;
                }
                idx[pos] = 0;
                pos += 1;
            }
        }
    }

    fn extend_character(&self, gens: &[usize], images: &[u64], e: u64) -> Option<Vec<u64>> {
        let n = self.order();
        let mut val: Vec<Option<u64>> = vec![None; n];
        val[0] = Some(0);
        let mut queue = VecDeque::from([0usize]);
        while let Some(x) = queue.pop_front() {
            let vx = val[x].unwrap();
            for (&g, &v) in gens.iter().zip(images) {
                let y = self.table[x][g];
                let vy = (vx + v) % e;
                match val[y] {
                    None => {
                        val[y] = Some(vy);
                        queue.push_back(y);
                    }
                    Some(w) if w != vy => return None,
                    Some(_) => {}
                }
            }
        }
        let vals: Vec<u64> = val.into_iter().map(|v| v.unwrap()).collect();
        let hom = (0..n).all(|a| (0..n).all(|b| vals[self.table[a][b]] == (vals[a] + vals[b]) % e));
        hom.then_some(vals)
    }
}

/// A finite abelian group `C_{n₁} × … × C_{n_r}`. Elements are mixed-radix
/// tuples with the first factor most significant, so element indices follow
/// lexicographic tuple order.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct AbelianGroupSpec {
    pub cyclic_factors: Vec<usize>,
}

impl AbelianGroupSpec {
    /// Factors equal to `1` are dropped; `0` is rejected.
    pub fn new(factors: Vec<usize>) -> Result<Self> {
        if factors.contains(&0) {
            return Err(FusionError::InvalidArgument("cyclic factor 0".into()));
        }
        Ok(AbelianGroupSpec { cyclic_factors: factors.into_iter().filter(|&f| f > 1).collect() })
    }

    pub fn cyclic(n: usize) -> Self {
        Self::new(vec![n]).expect("positive order")
    }

    /// `C₂^m`.
    pub fn elementary2(m: usize) -> Self {
        Self::new(vec![2; m]).expect("positive order")
    }

    pub fn order(&self) -> usize {
        self.cyclic_factors.iter().product()
    }

    pub fn encode(&self, tuple: &[usize]) -> usize {
        tuple
            .iter()
            .zip(&self.cyclic_factors)
            .fold(0, |acc, (&t, &f)| acc * f + t % f)
    }

    pub fn decode(&self, mut index: usize) -> Vec<usize> {
        let mut out = vec![0; self.cyclic_factors.len()];
        for (slot, &f) in out.iter_mut().zip(&self.cyclic_factors).rev() {
            *slot = index % f;
            index /= f;
        }
        out
    }

    pub fn label(&self, index: usize) -> String {
        if self.cyclic_factors.is_empty() {
            return "e".into();
        }
        let t = self.decode(index);
        let parts: Vec<String> = t.iter().map(usize::to_string).collect();
        format!("g{}", parts.join("_"))
    }

    pub fn to_group(&self) -> FiniteGroup {
        let n = self.order();
        let table = (0..n)
            .map(|a| {
                let ta = self.decode(a);
                (0..n)
                    .map(|b| {
                        let tb = self.decode(b);
                        let sum: Vec<usize> = ta.iter().zip(&tb).map(|(x, y)| x + y).collect();
                        self.encode(&sum)
                    })
                    .collect()
            })
            .collect();
        let labels = (0..n).map(|i| self.label(i)).collect();
        FiniteGroup::from_labeled_table(table, labels).expect("product of cyclic groups")
    }

    /// Linear characters by the closed form `χ_a(g) = Π ζ_{n_i}^{a_i g_i}`.
    pub fn characters(&self) -> Vec<LinearCharacter> {
        let n = self.order();
        let e = self.cyclic_factors.iter().fold(1, |acc, &f| num_integer::lcm(acc, f)) as u64;
        let mut out: Vec<LinearCharacter> = (0..n)
            .map(|a| {
                let ta = self.decode(a);
                let values = (0..n)
                    .map(|g| {
                        let tg = self.decode(g);
                        ta.iter()
                            .zip(&tg)
                            .zip(&self.cyclic_factors)
                            .map(|((&x, &y), &f)| (x * y % f) as u64 * (e / f as u64))
                            .sum::<u64>()
                            % e
                    })
                    .collect();
                LinearCharacter { exponent: e, values }
            })
            .collect();
        out.sort();
        out
    }
}

impl std::fmt::Display for AbelianGroupSpec {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.cyclic_factors.is_empty() {
            return write!(f, "C1");
        }
        let parts: Vec<String> = self.cyclic_factors.iter().map(|n| format!("C{n}")).collect();
        write!(f, "{}", parts.join("×"))
    }
}
