//! Level tables for near-group rings, assembled from obstruction verdicts
//! and a table of known categorifications.

use std::fmt;

use num_traits::ToPrimitive;
use rayon::prelude::*;
use serde::Serialize;

use crate::dims::invertibles;
use crate::error::{FusionError, Result};
use crate::numbers::{AlgebraicReal, IntPoly, Rational};
use crate::numbertheory::{exact_sqrt, is_prime, squarefree_part};
use crate::obstruct::{
    near_group_verdicts, prime_parity, prime_xbound, run_all, NearGroupShape, ObstructionReport, ObstructionVerdict,
    Outcome, TestName, quartic_coefficients,
};
use crate::ring::FusionRing;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum LevelStatus {
    CategorifiableKnown,
    Eliminated,
    Candidate,
}

impl fmt::Display for LevelStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.pad(match self {
            LevelStatus::CategorifiableKnown => "categorifiable_known",
            LevelStatus::Eliminated => "eliminated",
            LevelStatus::Candidate => "candidate",
        })
    }
}

/// Known categorifications. Existence is imported, never computed.
pub fn known_categorification(shape: &NearGroupShape) -> Option<&'static str> {
    let (n, l) = (shape.order, shape.level);
    if l == 0 && shape.abelian {
        return Some("Tambara-Yamagami (MR1659954)");
    }
    if !shape.abelian {
        return None;
    }
    match (n, shape.cyclic, shape.elementary2_rank, l) {
        (1, _, _, 1) => Some("Ostrik, fusion categories of rank 2"),
        (2, _, _, 1) => Some("Rep(S3)"),
        (2, _, _, 2) => Some("Izumi (MR1832764)"),
        (4, _, Some(2), 4) => Some("Izumi (MR1832764)"),
        (3, true, _, 2 | 3 | 6) => Some("Larson (MR3229513)"),
        _ => None,
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct LevelEntry {
    pub level: u64,
    /// `ℓ / |G|` when it is an integer.
    pub k: Option<u64>,
    pub status: LevelStatus,
    pub literature: Option<&'static str>,
    pub eliminated_by: Option<TestName>,
    /// The applicable verdicts, in test order.
    pub certificates: Vec<ObstructionVerdict>,
    /// Square-free part used by the prime-level scan.
    pub x: Option<u64>,
    pub flags: Vec<String>,
}

impl LevelEntry {
    fn known(level: u64, k: Option<u64>, tag: &'static str) -> Self {
        LevelEntry {
            level,
            k,
            status: LevelStatus::CategorifiableKnown,
            literature: Some(tag),
            eliminated_by: None,
            certificates: vec![],
            x: None,
            flags: vec![],
        }
    }

    fn from_verdicts(level: u64, k: Option<u64>, verdicts: Vec<ObstructionVerdict>) -> Self {
        let certificates: Vec<_> = verdicts.into_iter().filter(|v| v.outcome != Outcome::NotApplicable).collect();
        let eliminated_by = certificates.iter().find(|v| v.eliminates()).map(|v| v.test_name);
        let status = if eliminated_by.is_some() { LevelStatus::Eliminated } else { LevelStatus::Candidate };
        LevelEntry { level, k, status, literature: None, eliminated_by, certificates, x: None, flags: vec![] }
    }
}

/// A statement about infinitely many levels at once.
#[derive(Clone, Debug, Serialize)]
pub struct LevelRule {
    pub levels: String,
    pub status: LevelStatus,
    pub reason: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct LevelReport {
    pub group: String,
    pub order: u64,
    pub levels: Vec<LevelEntry>,
    pub rules: Vec<LevelRule>,
    /// Largest `k` that still needs checking, proven or configured.
    pub scan_bound: u64,
    pub scan_bound_proven: bool,
    pub filters_applied: Vec<String>,
    /// Levels removed by a filter that the obstructions alone do not exclude.
    pub filtered_out: Vec<LevelEntry>,
    /// Admissible square-free parts for the prime scan.
    pub admissible_x: Option<Vec<u64>>,
}

impl LevelReport {
    /// Levels not eliminated: known categorifiable plus candidates.
    pub fn open_levels(&self) -> Vec<u64> {
        self.levels.iter().filter(|e| e.status != LevelStatus::Eliminated).map(|e| e.level).collect()
    }

    pub fn entry(&self, level: u64) -> Option<&LevelEntry> {
        self.levels.iter().find(|e| e.level == level)
    }
}

/// Entry for one near-group level: literature first, then obstructions.
pub fn near_group_level(shape: &NearGroupShape) -> LevelEntry {
    let k = (shape.level % shape.order == 0).then(|| shape.level / shape.order);
    match known_categorification(shape) {
        Some(tag) => LevelEntry::known(shape.level, k, tag),
        None => LevelEntry::from_verdicts(shape.level, k, near_group_verdicts(shape)),
    }
}

/// Largest `K ≥ 0` with `f(n, K) ≥ 0`; beyond it the quartic stays negative.
pub fn quartic_cutoff(n: u64) -> u64 {
    let mut coeffs = quartic_coefficients(n).to_vec();
    coeffs.reverse();
    let p = IntPoly::new(coeffs);
    let width = Rational::new(1.into(), 1024.into());
    match AlgebraicReal::largest_real_root(&p, &width) {
        Some(root) if root.cmp_rational(&Rational::from_integer(0.into())).is_gt() => {
            let (_, iv) = root.isolating_data();
            let mut k = iv.lo.floor().to_integer().to_u64().unwrap_or(0);
            // The isolating interval may straddle an integer.
            while root.cmp_rational(&Rational::from_integer((k + 1).into())).is_ge() {
                k += 1;
            }
            k
        }
        _ => 0,
    }
}

fn elementary2_name(m: u32) -> String {
    if m == 1 {
        "C2".into()
    } else {
        format!("C2^{m}")
    }
}

/// All levels of `R(C₂^m, ℓ)` that are not eliminated, with certificates
/// for every level up to one step past the proven cutoff.
pub fn classify_elementary2(m: u32) -> Result<LevelReport> {
    if m == 0 || m > 20 {
        return Err(FusionError::InvalidArgument(format!("m = {m} must be between 1 and 20")));
    }
    let n = 1u64 << m;
    let group = elementary2_name(m);
    if m == 1 {
        let levels = (0..=2).map(|l| near_group_level(&NearGroupShape::elementary2(1, l))).collect();
        return Ok(LevelReport {
            group,
            order: n,
            levels,
            rules: vec![LevelRule {
                levels: "l >= 3".into(),
                status: LevelStatus::Eliminated,
                reason: "Ostrik 2015: R(C2, l) categorifiable only for l in {0, 1, 2}".into(),
            }],
            scan_bound: 0,
            scan_bound_proven: true,
            filters_applied: vec![],
            filtered_out: vec![],
            admissible_x: None,
        });
    }
    let cutoff = quartic_cutoff(n);
    let top = (cutoff + 1) * n;
    let levels = (0..=top).map(|l| near_group_level(&NearGroupShape::elementary2(m, l))).collect();
    let rules = vec![
        LevelRule {
            levels: format!("l > {n}, {n} does not divide l"),
            status: LevelStatus::Eliminated,
            reason: "divisibility: d is irrational for l >= |G| and |G| does not divide l".into(),
        },
        LevelRule {
            levels: format!("l = k*{n}, k > {cutoff}"),
            status: LevelStatus::Eliminated,
            reason: format!("elementary2_coarse: f({n}, k) < 0 past its largest real root"),
        },
    ];
    Ok(LevelReport {
        group,
        order: n,
        levels,
        rules,
        scan_bound: cutoff,
        scan_bound_proven: true,
        filters_applied: vec![],
        filtered_out: vec![],
        admissible_x: None,
    })
}

/// Square-free `x` with `φ(x)²(p−1)² ≤ x(p+1)³`, i.e. admissible for the
/// prime-level bound at `m = 1` (the weakest case).
pub fn admissible_x(p: u64) -> Vec<u64> {
    let ok = |x: u64, phi: u64| -> bool {
        let l = u128::from(phi).pow(2) * u128::from(p - 1).pow(2);
        let r = u128::from(x) * u128::from(p + 1).pow(3);
        l <= r
    };
    let mut out = vec![1];
    // Depth-first over increasing primes; `(q−1)²/q` grows with `q ≥ 3`,
    // so the first failing odd prime ends the branch.
    fn dfs(x: u64, phi: u64, from: u64, ok: &dyn Fn(u64, u64) -> bool, out: &mut Vec<u64>) {
        let mut q = from;
        loop {
            if is_prime(q) {
                let (nx, nphi) = (x * q, phi * (q - 1));
                if ok(nx, nphi) {
                    out.push(nx);
                    dfs(nx, nphi, q + 1, ok, out);
                } else if q > 2 {
                    return;
                }
            }
            q += 1;
        }
    }
    dfs(1, 1, 2, &ok, &mut out);
    out.sort_unstable();
    out
}

/// The filter stated for `p = 7`: no `x` divisible by 2, 3, 5 or 13.
pub fn default_residue_filter(p: u64) -> Option<Vec<u64>> {
    (p == 7).then(|| vec![2, 3, 5, 13])
}

#[derive(Clone, Debug, Default)]
pub struct ScanOptions {
    /// Worker threads; `None` uses the rayon default.
    pub jobs: Option<usize>,
    /// Drop levels `ℓ ≥ p²` (conjectural, not proven).
    pub conjecture_cutoff: bool,
}

fn filter_hit(x: u64, filter: &[u64]) -> Option<u64> {
    filter.iter().copied().find(|&q| x % q == 0)
}

/// Levels `ℓ = kp ≤ k_max·p` of `R(C_p, ℓ)` that survive the parity and
/// square-free-part bounds, for a prime `p ≡ 3 (mod 4)`.
pub fn scan_prime_levels(p: u64, k_max: u64, residue_filter: Option<&[u64]>, opts: &ScanOptions) -> Result<LevelReport> {
    if k_max < 1 {
        return Err(FusionError::InvalidArgument("k_max must be at least 1".into()));
    }
    if p % 4 != 3 || !is_prime(p) {
        return Err(FusionError::InvalidArgument(format!("p = {p} must be a prime congruent to 3 mod 4")));
    }
    let m_max = k_max / 2;
    m_max
        .checked_mul(m_max)
        .and_then(|v| v.checked_mul(p))
        .and_then(|v| v.checked_add(1))
        .ok_or_else(|| FusionError::InvalidArgument("k_max^2 p overflows".into()))?;
    let xs = admissible_x(p);

    let scan = |range: std::ops::Range<u64>| -> Vec<(u64, u64)> {
        let mut hits = Vec::new();
        for m in range {
            let v = m * m * p + 1;
            for &x in &xs {
                if v % x == 0 && exact_sqrt(u128::from(v / x)).is_some() {
                    hits.push((m, x));
                    break;
                }
            }
        }
        hits
    };
    const CHUNK: u64 = 1 << 14;
    let chunks: Vec<std::ops::Range<u64>> =
        (0..m_max.div_ceil(CHUNK)).map(|c| (1 + c * CHUNK)..(1 + ((c + 1) * CHUNK).min(m_max))).collect();
    let run = || -> Vec<(u64, u64)> { chunks.par_iter().flat_map_iter(|r| scan(r.clone())).collect() };
    let hits = match opts.jobs {
        Some(j) => rayon::ThreadPoolBuilder::new()
            .num_threads(j.max(1))
            .build()
            .map_err(|e| FusionError::InvalidArgument(format!("thread pool: {e}")))?
            .install(run),
        None => run(),
    };

    let mut survivors: Vec<LevelEntry> = Vec::new();
    // k = 1 is allowed by parity and has no square-free-part bound.
    let x1 = squarefree_part(p + 4).x;
    let mut first = near_group_level(&NearGroupShape::cyclic(p, p));
    first.x = Some(x1);
    survivors.push(first);
    for (m, x) in hits {
        let k = 2 * m;
        let xb = prime_xbound(p, m);
        debug_assert_eq!(xb.certificate["x"], serde_json::json!(x));
        if xb.eliminates() {
            continue;
        }
        let shape = NearGroupShape::cyclic(p, k * p);
        let mut e = match known_categorification(&shape) {
            Some(tag) => LevelEntry::known(k * p, Some(k), tag),
            None => LevelEntry::from_verdicts(k * p, Some(k), vec![prime_parity(p, k), xb]),
        };
        e.x = Some(x);
        survivors.push(e);
    }

    let mut filters_applied = Vec::new();
    let mut levels = Vec::new();
    let mut filtered_out = Vec::new();
    let flag_against = residue_filter.map(<[u64]>::to_vec).or_else(|| default_residue_filter(p));
    if let Some(f) = residue_filter {
        filters_applied.push(format!("residue: x not divisible by {f:?}"));
    }
    for mut e in survivors {
        let x = e.x.expect("scan entries carry x");
        if let Some(q) = flag_against.as_deref().and_then(|f| filter_hit(x, f)) {
            e.flags.push(format!("excluded only by residue claim ({q} | x)"));
            if residue_filter.is_some() {
                filtered_out.push(e);
                continue;
            }
        }
        if opts.conjecture_cutoff && e.level >= p * p {
            e.flags.push("non-rigorous: excluded by the conjecture level < p^2".into());
            filtered_out.push(e);
            continue;
        }
        levels.push(e);
    }
    if opts.conjecture_cutoff {
        filters_applied.push("conjecture: level < p^2 (non-rigorous)".into());
    }

    let mut known_low: Vec<LevelEntry> = Vec::new();
    if let Some(tag) = known_categorification(&NearGroupShape::cyclic(p, 0)) {
        known_low.push(LevelEntry::known(0, Some(0), tag));
    }
    known_low.extend(levels);

    Ok(LevelReport {
        group: format!("C{p}"),
        order: p,
        levels: known_low,
        rules: vec![
            LevelRule {
                levels: "0 < l < p".into(),
                status: LevelStatus::Eliminated,
                reason: "small_level, except l = p - 1 when p + 1 is a prime power".into(),
            },
            LevelRule {
                levels: "p does not divide l, l > p".into(),
                status: LevelStatus::Eliminated,
                reason: "divisibility".into(),
            },
            LevelRule {
                levels: "l = kp, k odd, k > 1".into(),
                status: LevelStatus::Eliminated,
                reason: "prime_parity".into(),
            },
            LevelRule {
                levels: format!("l = 2mp, m <= {m_max}, not listed"),
                status: LevelStatus::Eliminated,
                reason: "prime_xbound".into(),
            },
        ],
        scan_bound: k_max,
        scan_bound_proven: false,
        filters_applied,
        filtered_out,
        admissible_x: Some(xs),
    })
}

/// Verdict for a single ring.
#[derive(Clone, Debug, Serialize)]
pub struct GenericReport {
    pub status: LevelStatus,
    pub literature: Option<&'static str>,
    pub obstructions: ObstructionReport,
}

pub fn classify_generic(ring: &FusionRing) -> Result<GenericReport> {
    let obstructions = run_all(ring)?;
    let inv = invertibles(ring)?;
    let literature = if inv.order() == ring.rank() {
        Some("group ring: Vec_G")
    } else {
        NearGroupShape::of_ring(ring).and_then(|s| known_categorification(&s))
    };
    let status = match (literature, obstructions.eliminated) {
        (Some(_), _) => LevelStatus::CategorifiableKnown,
        (None, true) => LevelStatus::Eliminated,
        (None, false) => LevelStatus::Candidate,
    };
    Ok(GenericReport { status, literature, obstructions })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numbertheory::totient;
    use crate::construct::{group_ring, near_group};
    use crate::group::{AbelianGroupSpec, FiniteGroup};

    fn phi_ratio_within(p: u64, x: u64) -> bool {
        let phi = totient(x);
        u128::from(phi).pow(2) * u128::from(p - 1).pow(2) <= u128::from(x) * u128::from(p + 1).pow(3)
    }

    #[test]
    fn elementary2_levels() {
        assert_eq!(classify_elementary2(1).unwrap().open_levels(), vec![0, 1, 2]);
        assert_eq!(classify_elementary2(2).unwrap().open_levels(), vec![0, 4]);
        for m in 3..=6 {
            assert_eq!(classify_elementary2(m).unwrap().open_levels(), vec![0], "m = {m}");
        }
    }

    #[test]
    fn elementary2_certificates() {
        let r = classify_elementary2(3).unwrap();
        assert_eq!(r.entry(2).unwrap().eliminated_by, Some(TestName::Noncommutative));
        assert_eq!(r.entry(7).unwrap().eliminated_by, Some(TestName::SmallLevel));
        assert_eq!(r.entry(8).unwrap().eliminated_by, Some(TestName::Elementary2Endgame));
        assert_eq!(r.entry(24).unwrap().eliminated_by, Some(TestName::Elementary2Coarse));
        assert_eq!(r.entry(9).unwrap().eliminated_by, Some(TestName::Divisibility));
        assert_eq!(r.entry(0).unwrap().literature, Some("Tambara-Yamagami (MR1659954)"));
        for e in &r.levels {
            assert!(e.certificates.iter().all(ObstructionVerdict::recheck));
        }
    }

    #[test]
    fn cutoffs_dominate_thresholds() {
        for (n, k) in [(4, 3), (8, 2), (16, 1), (32, 0)] {
            assert_eq!(quartic_cutoff(n), k, "n = {n}");
        }
    }

    #[test]
    fn admissible_set_for_seven() {
        let xs = admissible_x(7);
        assert!(xs.contains(&1) && xs.contains(&11) && xs.contains(&2));
        for &x in &xs {
            assert!(phi_ratio_within(7, x));
            assert_eq!(squarefree_part(x).x, x);
        }
        // Brute force over a range well past the largest admissible x.
        let top = *xs.last().unwrap();
        for x in 1..=(4 * top) {
            if squarefree_part(x).x == x && phi_ratio_within(7, x) {
                assert!(xs.contains(&x), "missing x = {x}");
            }
        }
    }

    #[test]
    fn prime_scan_small() {
        let f = [2, 3, 5, 13];
        let r = scan_prime_levels(7, 100, Some(&f), &ScanOptions::default()).unwrap();
        let ks: Vec<u64> = r.levels.iter().filter_map(|e| e.k).filter(|&k| k > 0).collect();
        assert_eq!(ks, vec![1, 6, 10, 96]);
        for e in &r.levels {
            if e.k != Some(0) {
                assert!(matches!(e.x, Some(1 | 11)));
            }
        }
        let open = scan_prime_levels(7, 100, None, &ScanOptions::default()).unwrap();
        let two = open.levels.iter().find(|e| e.k == Some(2)).unwrap();
        assert_eq!(two.x, Some(2));
        assert!(!two.flags.is_empty());
    }

    #[test]
    fn prime_scan_parallel_is_deterministic() {
        let f = [2, 3, 5, 13];
        let a = scan_prime_levels(7, 200_000, Some(&f), &ScanOptions { jobs: Some(1), ..Default::default() }).unwrap();
        let b = scan_prime_levels(7, 200_000, Some(&f), &ScanOptions { jobs: Some(4), ..Default::default() }).unwrap();
        assert_eq!(serde_json::to_string(&a).unwrap(), serde_json::to_string(&b).unwrap());
        let ks: Vec<u64> = a.levels.iter().filter_map(|e| e.k).filter(|&k| k > 0).collect();
        assert_eq!(ks, vec![1, 6, 10, 96, 1530, 7030, 24384]);
    }

    #[test]
    fn generic_examples() {
        let c3 = FiniteGroup::cyclic(3);
        let r = classify_generic(&near_group(&c3, 4)).unwrap();
        assert_eq!(r.status, LevelStatus::Eliminated);
        assert_eq!(r.obstructions.eliminated_by, Some(TestName::Divisibility));
        let v4 = AbelianGroupSpec::elementary2(2).to_group();
        assert_eq!(classify_generic(&near_group(&v4, 4)).unwrap().status, LevelStatus::CategorifiableKnown);
        assert_eq!(classify_generic(&group_ring(&c3)).unwrap().status, LevelStatus::CategorifiableKnown);
        assert_eq!(classify_generic(&near_group(&FiniteGroup::cyclic(5), 10)).unwrap().status, LevelStatus::Candidate);
    }
}
