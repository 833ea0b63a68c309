//! Fusion rings: finite-rank based rings with nonnegative integer structure
//! constants and a duality involution.

use std::fmt;
use std::sync::OnceLock;

use serde::Serialize;

use crate::error::{FusionError, Result};
use crate::numbers::matrix::IntMatrix;

/// A based ring with basis `b_0 = 1, b_1, …, b_{n−1}`. The structure
/// constant `c(i, j, k)` is the coefficient of `b_k` in `b_i·b_j`.
#[derive(Clone, Debug)]
pub struct FusionRing {
    labels: Vec<String>,
    dual: Vec<usize>,
    tensor: Vec<u32>,
    verified: OnceLock<bool>,
}

impl PartialEq for FusionRing {
    fn eq(&self, other: &Self) -> bool {
        self.labels == other.labels && self.dual == other.dual && self.tensor == other.tensor
    }
}

impl Eq for FusionRing {}

/// One failed axiom with the indices that witness it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "axiom", rename_all = "snake_case")]
pub enum Violation {
    /// `c(0, j, k) ≠ δ_{jk}`.
    LeftUnit { j: usize, k: usize, found: u32 },
    /// `c(i, 0, k) ≠ δ_{ik}`.
    RightUnit { i: usize, k: usize, found: u32 },
    /// `dual(0) ≠ 0`.
    DualFixesUnit { found: usize },
    /// `dual(dual(i)) ≠ i`.
    DualInvolution { i: usize },
    /// `c(i, j, 0) ≠ [j = dual(i)]`.
    DualityPairing { i: usize, j: usize, k: usize, found: u32, expected: u32 },
    /// `c(i, j, k) ≠ c(dual j, dual i, dual k)`.
    AntiInvolution { i: usize, j: usize, k: usize },
    /// `((b_i b_j) b_k)` and `(b_i (b_j b_k))` differ in the `b_l` coefficient.
    Associativity { i: usize, j: usize, k: usize, l: usize, left: u64, right: u64 },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::LeftUnit { j, k, found } => {
                write!(f, "left unit law: c(0,{j},{k}) = {found}")
            }
            Violation::RightUnit { i, k, found } => {
                write!(f, "right unit law: c({i},0,{k}) = {found}")
            }
            Violation::DualFixesUnit { found } => write!(f, "dual(0) = {found}, expected 0"),
            Violation::DualInvolution { i } => write!(f, "dual is not an involution at {i}"),
            Violation::DualityPairing { i, j, k, found, expected } => {
                write!(f, "duality pairing: c({i},{j},{k}) = {found}, expected {expected}")
            }
            Violation::AntiInvolution { i, j, k } => {
                write!(f, "anti-involution: c({i},{j},{k}) differs from its dual triple")
            }
            Violation::Associativity { i, j, k, l, left, right } => write!(
                f,
                "associativity at ({i},{j},{k}) coefficient {l}: {left} vs {right}"
            ),
        }
    }
}

/// All axiom violations of a candidate ring; empty iff it is a fusion ring.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub violations: Vec<Violation>,
}

impl VerificationReport {
    pub fn is_ok(&self) -> bool {
        self.violations.is_empty()
    }
}

impl FusionRing {
    /// Builds a candidate ring from nested data `tensor[i][j][k]`. Only the
    /// shape and the duality map are checked here; see
    /// [`verify_axioms`](Self::verify_axioms).
    pub fn new(labels: Vec<String>, dual: Vec<usize>, tensor: Vec<Vec<Vec<u32>>>) -> Result<Self> {
        let n = labels.len();
        if tensor.len() != n {
            return Err(FusionError::Malformed(format!(
                "tensor has {} slices, expected {n}",
                tensor.len()
            )));
        }
        let mut flat = Vec::with_capacity(n * n * n);
        for (i, slice) in tensor.iter().enumerate() {
            if slice.len() != n {
                return Err(FusionError::Malformed(format!("tensor[{i}] has {} rows", slice.len())));
            }
            for (j, row) in slice.iter().enumerate() {
                if row.len() != n {
                    return Err(FusionError::Malformed(format!(
                        "tensor[{i}][{j}] has {} entries",
                        row.len()
                    )));
                }
                flat.extend_from_slice(row);
            }
        }
        Self::from_flat(labels, dual, flat)
    }

    /// Builds a candidate ring from a flat tensor indexed `(i·n + j)·n + k`.
    pub fn from_flat(labels: Vec<String>, dual: Vec<usize>, tensor: Vec<u32>) -> Result<Self> {
        let n = labels.len();
        if n == 0 {
            return Err(FusionError::Malformed("rank must be positive".into()));
        }
        if dual.len() != n {
            return Err(FusionError::Malformed(format!("dual has {} entries, expected {n}", dual.len())));
        }
        if let Some(&bad) = dual.iter().find(|&&d| d >= n) {
            return Err(FusionError::Malformed(format!("dual entry {bad} out of range")));
        }
        let mut seen = vec![false; n];
        for &d in &dual {
            if seen[d] {
                return Err(FusionError::Malformed("dual is not a permutation".into()));
            }
            seen[d] = true;
        }
        if tensor.len() != n * n * n {
            return Err(FusionError::Malformed(format!(
                "tensor has {} entries, expected {}",
                tensor.len(),
                n * n * n
            )));
        }
        Ok(FusionRing { labels, dual, tensor, verified: OnceLock::new() })
    }

    /// The rank-one ring `Z`.
    pub fn trivial() -> Self {
        Self::from_flat(vec!["1".into()], vec![0], vec![1]).expect("rank one ring")
    }

    pub fn rank(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn dual(&self, i: usize) -> usize {
        self.dual[i]
    }

    pub fn duals(&self) -> &[usize] {
        &self.dual
    }

    #[inline]
    pub fn c(&self, i: usize, j: usize, k: usize) -> u32 {
        let n = self.rank();
        self.tensor[(i * n + j) * n + k]
    }

    pub fn flat_tensor(&self) -> &[u32] {
        &self.tensor
    }

    pub fn nested_tensor(&self) -> Vec<Vec<Vec<u32>>> {
        let n = self.rank();
        (0..n)
            .map(|i| (0..n).map(|j| (0..n).map(|k| self.c(i, j, k)).collect()).collect())
            .collect()
    }

    /// `b_i·b_j` as `(k, coefficient)` pairs with nonzero coefficient.
    pub fn product(&self, i: usize, j: usize) -> Vec<(usize, u32)> {
        (0..self.rank())
            .filter_map(|k| {
                let c = self.c(i, j, k);
                (c != 0).then_some((k, c))
            })
            .collect()
    }

    /// The unique basis element `b_i·b_j`, if the product is a single basis
    /// element with coefficient one.
    pub fn product_basis(&self, i: usize, j: usize) -> Option<usize> {
        match self.product(i, j).as_slice() {
            [(k, 1)] => Some(*k),
            _ => None,
        }
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    /// A copy with one structure constant replaced.
    pub fn with_entry(&self, i: usize, j: usize, k: usize, value: u32) -> Self {
        let n = self.rank();
        let mut tensor = self.tensor.clone();
        tensor[(i * n + j) * n + k] = value;
        FusionRing { labels: self.labels.clone(), dual: self.dual.clone(), tensor, verified: OnceLock::new() }
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Self {
        assert_eq!(labels.len(), self.rank());
        self.labels = labels;
        self
    }

    /// `N_i` with rows `j` and columns `k`: entry `c(i, j, k)`.
    pub fn fusion_matrix(&self, i: usize) -> Result<IntMatrix> {
        let n = self.rank();
        if i >= n {
            return Err(FusionError::IndexOutOfRange { index: i, rank: n });
        }
        Ok((0..n).map(|j| (0..n).map(|k| i64::from(self.c(i, j, k))).collect()).collect())
    }

    pub fn is_commutative(&self) -> bool {
        let n = self.rank();
        (0..n).all(|i| (i + 1..n).all(|j| (0..n).all(|k| self.c(i, j, k) == self.c(j, i, k))))
    }

    pub fn verify_axioms(&self) -> VerificationReport {
        let n = self.rank();
        let mut v = Vec::new();
        for j in 0..n {
            for k in 0..n {
                let want = u32::from(j == k);
                let l = self.c(0, j, k);
                if l != want {
                    v.push(Violation::LeftUnit { j, k, found: l });
                }
                let r = self.c(j, 0, k);
                if r != want {
                    v.push(Violation::RightUnit { i: j, k, found: r });
                }
            }
        }
        if self.dual[0] != 0 {
            v.push(Violation::DualFixesUnit { found: self.dual[0] });
        }
        for i in 0..n {
            if self.dual[self.dual[i]] != i {
                v.push(Violation::DualInvolution { i });
            }
        }
        for i in 0..n {
            for j in 0..n {
                let expected = u32::from(j == self.dual[i]);
                let found = self.c(i, j, 0);
                if found != expected {
                    v.push(Violation::DualityPairing { i, j, k: 0, found, expected });
                }
            }
        }
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    if self.c(i, j, k) != self.c(self.dual[j], self.dual[i], self.dual[k]) {
                        v.push(Violation::AntiInvolution { i, j, k });
                    }
                }
            }
        }
        self.check_associativity(&mut v);
        VerificationReport { violations: v }
    }

    fn check_associativity(&self, out: &mut Vec<Violation>) {
        let n = self.rank();
        let prods: Vec<Vec<Vec<(usize, u64)>>> = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| self.product(i, j).into_iter().map(|(k, c)| (k, u64::from(c))).collect())
                    .collect()
            })
            .collect();
        let mut left = vec![0u64; n];
        let mut right = vec![0u64; n];
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    left.iter_mut().for_each(|x| *x = 0);
                    right.iter_mut().for_each(|x| *x = 0);
                    for &(m, a) in &prods[i][j] {
                        for &(l, b) in &prods[m][k] {
                            left[l] += a * b;
                        }
                    }
                    for &(m, a) in &prods[j][k] {
                        for &(l, b) in &prods[i][m] {
                            right[l] += a * b;
                        }
                    }
                    for l in 0..n {
                        if left[l] != right[l] {
                            out.push(Violation::Associativity { i, j, k, l, left: left[l], right: right[l] });
                        }
                    }
                }
            }
        }
    }

    /// Whether the axioms hold; the answer is cached.
    pub fn is_fusion_ring(&self) -> bool {
        *self.verified.get_or_init(|| self.verify_axioms().is_ok())
    }

    /// `Err(NotVerified)` naming the first violation, if any.
    pub fn ensure_verified(&self) -> Result<()> {
        if self.is_fusion_ring() {
            Ok(())
        } else {
            let report = self.verify_axioms();
            Err(FusionError::NotVerified(
                report.violations.first().map(ToString::to_string).unwrap_or_default(),
            ))
        }
    }

    /// Sparse product of two ring elements given as coefficient vectors.
    pub fn multiply(&self, a: &[i64], b: &[i64]) -> Vec<i64> {
        let n = self.rank();
        let mut out = vec![0i64; n];
        for i in 0..n {
            if a[i] == 0 {
                continue;
            }
            for j in 0..n {
                if b[j] == 0 {
                    continue;
                }
                for k in 0..n {
                    out[k] += a[i] * b[j] * i64::from(self.c(i, j, k));
                }
            }
        }
        out
    }

    /// Applies a basis permutation: basis element `i` becomes `perm[i]`.
    /// `perm[0]` must be `0`.
    pub fn permuted(&self, perm: &[usize]) -> Self {
        let n = self.rank();
        assert_eq!(perm.len(), n);
        assert_eq!(perm[0], 0, "the unit must stay at index 0");
        let mut tensor = vec![0u32; n * n * n];
        let mut dual = vec![0usize; n];
        let mut labels = vec![String::new(); n];
        for i in 0..n {
            dual[perm[i]] = perm[self.dual[i]];
            labels[perm[i]] = self.labels[i].clone();
            for j in 0..n {
                for k in 0..n {
                    tensor[(perm[i] * n + perm[j]) * n + perm[k]] = self.c(i, j, k);
                }
            }
        }
        FusionRing { labels, dual, tensor, verified: OnceLock::new() }
    }

    /// Structure constants agree (labels ignored).
    pub fn same_rules(&self, other: &Self) -> bool {
        self.dual == other.dual && self.tensor == other.tensor
    }
}
