//! Shared ring corpus for the integration tests.
#![allow(dead_code)]

pub mod two_orbit;

use fusionring::construct::{dihedral_character_ring, group_ring, haagerup_izumi, near_group, uniform_two_orbit};
use fusionring::{AbelianGroupSpec, FiniteGroup, FusionRing};

pub struct Entry {
    pub name: String,
    pub ring: FusionRing,
}

fn entry(name: impl Into<String>, ring: FusionRing) -> Entry {
    Entry { name: name.into(), ring }
}

pub fn abelian(factors: &[usize]) -> FiniteGroup {
    AbelianGroupSpec::new(factors.to_vec()).unwrap().to_group()
}

/// Groups of order at most 8 available to the constructors.
pub fn small_groups() -> Vec<(String, FiniteGroup)> {
    let mut out: Vec<(String, FiniteGroup)> = (1..=8).map(|n| (format!("C{n}"), FiniteGroup::cyclic(n))).collect();
    out.push(("C2xC2".into(), abelian(&[2, 2])));
    out.push(("C2xC4".into(), abelian(&[2, 4])));
    out.push(("C2xC2xC2".into(), abelian(&[2, 2, 2])));
    out.push(("S3".into(), FiniteGroup::symmetric3()));
    out
}

pub fn group_rings() -> Vec<Entry> {
    small_groups().into_iter().map(|(n, g)| entry(format!("Z[{n}]"), group_ring(&g))).collect()
}

/// Near-group rings with `|G| ≤ 4` and `ℓ ≤ 12`.
pub fn near_groups() -> Vec<Entry> {
    let mut out = Vec::new();
    for (name, g) in small_groups().into_iter().filter(|(_, g)| g.order() <= 4) {
        for l in 0..=12 {
            out.push(entry(format!("R({name},{l})"), near_group(&g, l)));
        }
    }
    out
}

/// Haagerup–Izumi rings with `|G| ≤ 4`.
pub fn haagerup_izumis() -> Vec<Entry> {
    small_groups()
        .into_iter()
        .filter(|(_, g)| g.order() <= 4 && g.is_abelian())
        .map(|(name, g)| entry(format!("HI({name})"), haagerup_izumi(&g).unwrap()))
        .collect()
}

/// Dihedral character rings for `3 ≤ n ≤ 9`.
pub fn dihedrals() -> Vec<Entry> {
    (3..=9).map(|n| entry(format!("Irr(D{n})"), dihedral_character_ring(n).unwrap())).collect()
}

/// A few uniform rings that are neither near-group nor Haagerup–Izumi.
pub fn uniforms() -> Vec<Entry> {
    let c4 = FiniteGroup::cyclic(4);
    let c2 = FiniteGroup::cyclic(2);
    vec![
        entry("U(C4,{0,2},id,2)", uniform_two_orbit(&c4, &[0, 2], &[0, 1], 2).unwrap()),
        entry("U(C4,{0,2},id,0)", uniform_two_orbit(&c4, &[0, 2], &[0, 1], 0).unwrap()),
        entry("U(C2,{0},inv,1)", uniform_two_orbit(&c2, &[0], &c2.inversion_map(), 1).unwrap()),
    ]
}

/// Everything above.
pub fn corpus() -> Vec<Entry> {
    let mut out = group_rings();
    out.extend(near_groups());
    out.extend(haagerup_izumis());
    out.extend(dihedrals());
    out.extend(uniforms());
    out
}

/// Independent check of the fusion ring axioms, straight from the
/// definition. Returns true iff every axiom holds.
pub fn axioms_hold(ring: &FusionRing) -> bool {
    let n = ring.rank();
    let c = |i: usize, j: usize, k: usize| u64::from(ring.c(i, j, k));
    let dual = |i: usize| ring.dual(i);
    if dual(0) != 0 {
        return false;
    }
    for i in 0..n {
        if dual(i) >= n || dual(dual(i)) != i {
            return false;
        }
        for k in 0..n {
            let delta = u64::from(i == k);
            if c(0, i, k) != delta || c(i, 0, k) != delta {
                return false;
            }
        }
        for j in 0..n {
            if c(i, j, 0) != u64::from(j == dual(i)) {
                return false;
            }
            for k in 0..n {
                if c(i, j, k) != c(dual(j), dual(i), dual(k)) {
                    return false;
                }
            }
        }
    }
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                for l in 0..n {
                    let left: u64 = (0..n).map(|m| c(i, j, m) * c(m, k, l)).sum();
                    let right: u64 = (0..n).map(|m| c(j, k, m) * c(i, m, l)).sum();
                    if left != right {
                        return false;
                    }
                }
            }
        }
    }
    true
}

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::cmp::Ordering;

/// Closed interval with rational endpoints.
#[derive(Clone, Debug)]
pub struct Interval {
    pub lo: BigRational,
    pub hi: BigRational,
}

impl Interval {
    pub fn point(q: BigRational) -> Self {
        Interval { lo: q.clone(), hi: q }
    }

    /// `√d` enclosed to 128 fractional bits.
    pub fn sqrt(d: u64) -> Self {
        let scale = BigInt::one() << 128u32;
        let s = (BigInt::from(d) << 256u32).sqrt();
        let lo = BigRational::new(s.clone(), scale.clone());
        if &s * &s == BigInt::from(d) << 256u32 {
            return Interval::point(lo);
        }
        Interval { lo, hi: BigRational::new(s + 1, scale) }
    }

    pub fn add(&self, o: &Self) -> Self {
        Interval { lo: &self.lo + &o.lo, hi: &self.hi + &o.hi }
    }

    pub fn scale(&self, q: &BigRational) -> Self {
        if q.is_negative() {
            Interval { lo: &self.hi * q, hi: &self.lo * q }
        } else {
            Interval { lo: &self.lo * q, hi: &self.hi * q }
        }
    }

    /// Sign if the interval excludes zero (or is the point zero).
    pub fn sign(&self) -> Option<Ordering> {
        if self.lo.is_positive() {
            Some(Ordering::Greater)
        } else if self.hi.is_negative() {
            Some(Ordering::Less)
        } else if self.lo.is_zero() && self.hi.is_zero() {
            Some(Ordering::Equal)
        } else {
            None
        }
    }
}

/// Encloses `a + b√d`.
pub fn enclose(a: &BigRational, b: &BigRational, d: u64) -> Interval {
    Interval::point(a.clone()).add(&Interval::sqrt(d).scale(b))
}

/// Characteristic polynomial `det(tI − A)` by Faddeev–LeVerrier over the
/// rationals, coefficients low degree first.
pub fn charpoly_faddeev(a: &[Vec<i64>]) -> Vec<BigInt> {
    let n = a.len();
    let am: Vec<Vec<BigRational>> =
        a.iter().map(|r| r.iter().map(|&x| BigRational::from_integer(x.into())).collect()).collect();
    let mul = |x: &Vec<Vec<BigRational>>, y: &Vec<Vec<BigRational>>| -> Vec<Vec<BigRational>> {
        (0..n)
            .map(|i| (0..n).map(|j| (0..n).fold(BigRational::zero(), |s, l| s + &x[i][l] * &y[l][j])).collect())
            .collect()
    };
    // coeffs[n - k] = c_k with c_0 = 1; M_k = A M_{k-1} + c_{k-1} I.
    let mut c = vec![BigRational::one()];
    let mut m = vec![vec![BigRational::zero(); n]; n];
    for k in 1..=n {
        let mut next = mul(&am, &m);
        for (i, row) in next.iter_mut().enumerate() {
            row[i] += &c[k - 1];
        }
        m = next;
        let am_m = mul(&am, &m);
        let tr = (0..n).fold(BigRational::zero(), |s, i| s + &am_m[i][i]);
        c.push(-tr / BigRational::from_integer(BigInt::from(k)));
    }
    c.iter()
        .rev()
        .map(|q| {
            assert!(q.is_integer(), "integer matrix has integral characteristic polynomial");
            q.to_integer()
        })
        .collect()
}

/// `M = Σ_x N_x N_{x*}` with `(N_x)_{k,j} = c_{x,j}^k`, built from raw
/// structure constants.
pub fn casimir_dense(ring: &FusionRing) -> Vec<Vec<i64>> {
    let n = ring.rank();
    let c = |i, j, k| i64::from(ring.c(i, j, k));
    let mut m = vec![vec![0i64; n]; n];
    for x in 0..n {
        let xd = ring.dual(x);
        for r in 0..n {
            for col in 0..n {
                m[r][col] += (0..n).map(|l| c(x, l, r) * c(xd, col, l)).sum::<i64>();
            }
        }
    }
    m
}

/// `ψ(i)ψ(j) = Σ_k c_{ij}^k ψ(k)` checked entry by entry.
pub fn homomorphism_holds(ring: &FusionRing, m: &fusionring::repr::IrrepModel) -> bool {
    use fusionring::numbers::TowerNumber;
    let d = m.dim;
    let n = ring.rank();
    (0..n).all(|i| {
        (0..n).all(|j| {
            (0..d).all(|a| {
                (0..d).all(|b| {
                    let lhs = (0..d).fold(TowerNumber::zero(), |s, l| &s + &(&m.matrices[i][a][l] * &m.matrices[j][l][b]));
                    let rhs = (0..n).fold(TowerNumber::zero(), |s, k| {
                        &s + &(&TowerNumber::from_int(i64::from(ring.c(i, j, k))) * &m.matrices[k][a][b])
                    });
                    (&lhs - &rhs).is_zero()
                })
            })
        })
    })
}

/// Multiplicity of the root pinned by `(p, iv)` in `chi`, read off the
/// squarefree decomposition of `chi`.
fn oracle_multiplicity(chi: &fusionring::IntPoly, p: &fusionring::IntPoly, iv: &fusionring::numbers::RootInterval) -> usize {
    chi.squarefree_decomposition()
        .iter()
        .filter(|(f, _)| {
            let g = p.gcd(f);
            if g.deg() == 0 {
                return false;
            }
            let at_hi = g.sign_at(&iv.hi) == Ordering::Equal;
            at_hi || (!iv.is_exact() && g.count_roots_open(&iv.lo, &iv.hi) > 0)
        })
        .map(|(_, e)| *e)
        .sum()
}

/// Compares `codegree_spectrum` with the roots of the Faddeev–LeVerrier
/// characteristic polynomial of `M`: every distinct eigenvalue with its
/// multiplicity, multiplicities summing to the rank.
pub fn spectrum_matches_oracle(ring: &FusionRing) -> std::result::Result<(), String> {
    let chi = fusionring::IntPoly::new(charpoly_faddeev(&casimir_dense(ring)));
    if chi.deg() != ring.rank() {
        return Err("characteristic polynomial degree".into());
    }
    let spec = fusionring::repr::codegree_spectrum(ring).map_err(|e| e.to_string())?;
    let mut seen: Vec<&fusionring::AlgebraicReal> = Vec::new();
    let mut total = 0;
    for cg in &spec {
        if seen.iter().any(|v| v.cmp_exact(&cg.eigenvalue) == Ordering::Equal) {
            continue;
        }
        seen.push(&cg.eigenvalue);
        let (p, iv) = cg.eigenvalue.isolating_data();
        let m = oracle_multiplicity(&chi, &p, &iv);
        if m != cg.eigen_multiplicity {
            return Err(format!("eigenvalue {:.6}: oracle {m}, reported {}", cg.eigenvalue.to_f64(), cg.eigen_multiplicity));
        }
        total += m;
    }
    if total != ring.rank() {
        return Err(format!("multiplicities sum to {total}, rank {}", ring.rank()));
    }
    Ok(())
}

/// `dim·f ≥ |G|` for every codegree with a known dimension.
pub fn codegrees_dominate_group(ring: &FusionRing) -> std::result::Result<(), String> {
    let order = fusionring::dims::invertibles(ring).map_err(|e| e.to_string())?.order() as i64;
    for cg in fusionring::repr::codegree_spectrum(ring).map_err(|e| e.to_string())? {
        if cg.dim_hint.is_some() && cg.eigenvalue.cmp_rational(&BigRational::from_integer(order.into())) == Ordering::Less {
            return Err(format!("eigenvalue {:.6} below |G| = {order}", cg.eigenvalue.to_f64()));
        }
    }
    Ok(())
}

/// Corpus entries of rank at most 8.
pub fn small_rank_corpus() -> Vec<Entry> {
    let mut out = group_rings();
    out.extend(near_groups());
    out.extend(haagerup_izumis());
    out.extend(dihedrals());
    out.retain(|e| e.ring.rank() <= 8);
    out
}
