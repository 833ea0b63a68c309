//! Structure of two-orbit rings, recomputed straight from the tensor.

use fusionring::structure::two_orbit_data;
use fusionring::FusionRing;
use std::collections::BTreeSet;

pub struct Raw<'a> {
    ring: &'a FusionRing,
    pub g: Vec<usize>,
    pub x: Vec<usize>,
}

type Check = Result<(), String>;

fn ensure(ok: bool, what: impl FnOnce() -> String) -> Check {
    if ok {
        Ok(())
    } else {
        Err(what())
    }
}

impl<'a> Raw<'a> {
    pub fn new(ring: &'a FusionRing) -> Self {
        let n = ring.rank();
        let invertible = |i: usize| (0..n).map(|k| ring.c(i, ring.dual(i), k)).sum::<u32>() == 1;
        let (g, x) = (0..n).partition(|&i| invertible(i));
        Raw { ring, g, x }
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        let p = self.ring.product(a, b);
        assert!(p.len() == 1 && p[0].1 == 1, "product with an invertible is basic");
        p[0].0
    }

    fn left_orbit(&self, x: usize) -> BTreeSet<usize> {
        self.g.iter().map(|&g| self.mul(g, x)).collect()
    }

    fn right_orbit(&self, x: usize) -> BTreeSet<usize> {
        self.g.iter().map(|&g| self.mul(x, g)).collect()
    }

    pub fn is_two_orbit(&self) -> bool {
        !self.x.is_empty() && self.left_orbit(self.x[0]).len() == self.x.len()
    }

    pub fn stabilizer(&self, x: usize) -> BTreeSet<usize> {
        self.g.iter().copied().filter(|&g| self.mul(g, x) == x).collect()
    }

    fn coset_min(&self, g: usize, h: &BTreeSet<usize>) -> usize {
        h.iter().map(|&e| self.mul(g, e)).min().unwrap()
    }

    /// `θ_x(g) = g'H` where `g'x = xg`, cosets named by least element.
    fn theta(&self, x: usize, h: &BTreeSet<usize>) -> Result<Vec<(usize, usize)>, String> {
        self.g
            .iter()
            .map(|&g| {
                let xg = self.mul(x, g);
                let lifts: BTreeSet<usize> = self
                    .g
                    .iter()
                    .copied()
                    .filter(|&gp| self.mul(gp, x) == xg)
                    .map(|gp| self.coset_min(gp, h))
                    .collect();
                ensure(lifts.len() == 1, || format!("θ_{x} not well defined at {g}"))?;
                Ok((g, *lifts.first().unwrap()))
            })
            .collect()
    }

    /// Dual, orbit, stabilizer and normality properties of the
    /// noninvertible basis.
    pub fn check_orbits(&self) -> Check {
        let ring = self.ring;
        let h0 = self.stabilizer(self.x[0]);
        for &x in &self.x {
            let xd = ring.dual(x);
            for &g in &self.g {
                if self.mul(g, x) == xd {
                    ensure(self.mul(x, g) == xd, || format!("gx = x* but xg != x* for x={x}, g={g}"))?;
                }
            }
            ensure(self.right_orbit(x).contains(&xd), || format!("x* not in xG for x={x}"))?;
            ensure(self.left_orbit(x) == self.right_orbit(x), || format!("Gx != xG for x={x}"))?;
            let xx = ring.product(x, xd);
            for y in self.left_orbit(x) {
                ensure(ring.product(y, ring.dual(y)) == xx, || format!("yy* != xx* for x={x}, y={y}"))?;
            }
            ensure(self.stabilizer(x) == h0, || format!("stabilizer of {x} differs"))?;
        }
        for &g in &self.g {
            for &h in &h0 {
                let conj = self.mul(self.mul(g, h), self.ring.dual(g));
                ensure(h0.contains(&conj), || format!("H not normal: {g}·{h}·{g}⁻¹"))?;
            }
        }
        Ok(())
    }

    /// `θ_x` is an automorphism of `G/H`; for abelian `G/H` it does not
    /// depend on `x` and squares to the identity. Also compared with
    /// `two_orbit_data`.
    pub fn check_theta(&self) -> Check {
        let h = self.stabilizer(self.x[0]);
        let quotient_abelian = self.g.iter().all(|&a| {
            self.g.iter().all(|&b| self.coset_min(self.mul(a, b), &h) == self.coset_min(self.mul(b, a), &h))
        });
        let cosets: BTreeSet<usize> = self.g.iter().map(|&g| self.coset_min(g, &h)).collect();
        let reference = self.theta(self.x[0], &h)?;
        for &x in &self.x {
            let th = self.theta(x, &h)?;
            let map = |g: usize| th.iter().find(|(a, _)| *a == g).unwrap().1;
            for &a in &self.g {
                for &b in &self.g {
                    let ok = map(self.mul(a, b)) == self.coset_min(self.mul(map(a), map(b)), &h);
                    ensure(ok, || format!("θ_{x} not multiplicative at ({a},{b})"))?;
                }
            }
            let image: BTreeSet<usize> = th.iter().map(|p| p.1).collect();
            ensure(image == cosets, || format!("θ_{x} not onto"))?;
            if quotient_abelian {
                ensure(th == reference, || format!("θ_{x} differs from θ_{}", self.x[0]))?;
                for &g in &self.g {
                    ensure(map(map(g)) == self.coset_min(g, &h), || format!("θ_{x}² != id at {g}"))?;
                }
            }
        }
        let data = two_orbit_data(self.ring).map_err(|e| e.to_string())?;
        ensure(data.h.iter().copied().collect::<BTreeSet<_>>() == h, || "stabilizer mismatch".into())?;
        let map = |g: usize| reference.iter().find(|(a, _)| *a == g).unwrap().1;
        for (ci, coset) in data.cosets.iter().enumerate() {
            let image = map(coset[0]);
            ensure(data.cosets[data.theta[ci]].contains(&image), || format!("θ mismatch on coset {ci}"))?;
        }
        Ok(())
    }

    /// `Some(symmetric == abelian)` when `[G:H] = 2`.
    pub fn index_two_commutativity(&self) -> Option<bool> {
        let h = self.stabilizer(self.x[0]);
        if self.g.len() != 2 * h.len() {
            return None;
        }
        let abelian = self.g.iter().all(|&a| self.g.iter().all(|&b| self.mul(a, b) == self.mul(b, a)));
        let n = self.ring.rank();
        let symmetric = (0..n).all(|i| (0..n).all(|j| self.ring.product(i, j) == self.ring.product(j, i)));
        Some(symmetric == abelian)
    }
}
