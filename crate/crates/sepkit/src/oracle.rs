//! Brute-force ground truth: lattice points in dilates of the polytope,
//! Ehrhart interpolation and h* extraction. Independent of the Gröbner and
//! triangulation machinery; only the facet description is shared.

use num_traits::Zero;
use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::exactpoly::{hstar_from_ehrhart, int, HStar, PolyError, Rat, RatPoly};
use crate::graphmodel::{enumerate_facet_labelings, Signature};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("signature total {total} exceeds the configured bound {bound}")]
    SizeExceeded { total: usize, bound: usize },
    #[error("interpolant predicts {predicted} points at k = {k} but {counted} were counted")]
    InterpolationGuardFailed { k: usize, predicted: String, counted: u64 },
    #[error(transparent)]
    Poly(#[from] PolyError),
}

/// Size bound on Σa_i. The default keeps test runs short; 7 is the opt-in ceiling.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OracleConfig {
    pub max_total: usize,
}

impl Default for OracleConfig {
    fn default() -> Self {
        OracleConfig { max_total: 6 }
    }
}

impl OracleConfig {
    pub fn extended() -> Self {
        OracleConfig { max_total: 7 }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct DilationCount {
    pub k: usize,
    pub count: u64,
}

struct Counter {
    n: usize,
    k: i64,
    facets: Vec<Vec<i64>>,
}

impl Counter {
    fn new(sig: &Signature, k: usize) -> Self {
        let facets = enumerate_facet_labelings(sig).into_iter().map(|l| l.values).collect();
        Counter { n: sig.total(), k: k as i64, facets }
    }

    fn inside(&self, x: &[i64]) -> bool {
        // x sums to zero, so shifting λ by a constant does not change ⟨λ,x⟩
        self.facets
            .iter()
            .all(|f| f.iter().zip(x).map(|(a, b)| a * b).sum::<i64>() <= self.k)
    }

    fn walk(&self, x: &mut [i64], depth: usize, sum: i64, visit: &mut dyn FnMut(&[i64])) {
        let last = self.n - 1;
        if depth == last {
            if sum.abs() <= self.k {
                x[last] = -sum;
                if self.inside(x) {
                    visit(x);
                }
            }
            return;
        }
        let slack = self.k * (last - depth) as i64;
        for v in -self.k..=self.k {
            let s = sum + v;
            if s.abs() > slack {
                continue;
            }
            x[depth] = v;
            self.walk(x, depth + 1, s, visit);
        }
    }

    fn count(&self) -> u64 {
        if self.n == 1 {
            return 1;
        }
        (-self.k..=self.k)
            .into_par_iter()
            .map(|v0| {
                let mut x = vec![0i64; self.n];
                x[0] = v0;
                let mut c = 0u64;
                self.walk(&mut x, 1, v0, &mut |_| c += 1);
                c
            })
            .sum()
    }
}

/// |kP ∩ Z^N| by depth-first enumeration with running-sum pruning.
pub fn count_lattice_points(sig: &Signature, k: usize) -> DilationCount {
    DilationCount { k, count: Counter::new(sig, k).count() }
}

/// The points themselves, in lexicographic order; for small cases and tests.
pub fn lattice_points(sig: &Signature, k: usize) -> Vec<Vec<i64>> {
    let c = Counter::new(sig, k);
    let mut out = Vec::new();
    let mut x = vec![0i64; c.n];
    if c.n == 1 {
        return vec![x];
    }
    c.walk(&mut x, 0, 0, &mut |p| out.push(p.to_vec()));
    out
}

fn check_bound(sig: &Signature, cfg: &OracleConfig) -> Result<(), OracleError> {
    if sig.total() > cfg.max_total {
        return Err(OracleError::SizeExceeded { total: sig.total(), bound: cfg.max_total });
    }
    Ok(())
}

/// Lagrange interpolation through (x_i, y_i).
pub fn lagrange(points: &[(Rat, Rat)]) -> RatPoly {
    let mut acc = RatPoly::zero();
    for (i, (xi, yi)) in points.iter().enumerate() {
        if yi.is_zero() {
            continue;
        }
        let mut basis = RatPoly::one();
        let mut denom = Rat::from_integer(1.into());
        for (j, (xj, _)) in points.iter().enumerate() {
            if i != j {
                basis = &basis * &RatPoly::linear(int(1), -xj.clone());
                denom *= xi - xj;
            }
        }
        acc = &acc + &basis.scale(&(yi / denom));
    }
    acc
}

/// Degree-d interpolant through the counts at k = 0..d, guarded by the count at d+1.
pub fn ehrhart_interpolate(sig: &Signature, cfg: &OracleConfig) -> Result<RatPoly, OracleError> {
    check_bound(sig, cfg)?;
    let d = sig.dim();
    let counts: Vec<u64> = (0..=d + 1).map(|k| count_lattice_points(sig, k).count).collect();
    let pts: Vec<(Rat, Rat)> = (0..=d).map(|k| (int(k as i64), int(counts[k] as i64))).collect();
    let e = lagrange(&pts);
    let predicted = e.eval(&int(d as i64 + 1));
    if predicted != int(counts[d + 1] as i64) {
        return Err(OracleError::InterpolationGuardFailed {
            k: d + 1,
            predicted: crate::exactpoly::rat_to_string(&predicted),
            counted: counts[d + 1],
        });
    }
    Ok(e)
}

pub fn hstar_oracle(sig: &Signature, cfg: &OracleConfig) -> Result<HStar, OracleError> {
    let e = ehrhart_interpolate(sig, cfg)?;
    Ok(hstar_from_ehrhart(&e, sig.dim())?)
}

/// (−1)^d E(−k) = E(k−1) for k = 1..d: one interior lattice point and a reflexive polytope.
pub fn reflexivity_check(e: &RatPoly, d: usize) -> bool {
    (1..=d as i64).all(|k| {
        let lhs = e.eval(&int(-k));
        let lhs = if d % 2 == 0 { lhs } else { -lhs };
        lhs == e.eval(&int(k - 1))
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::signatures::partitions;

    fn sig(p: &[usize]) -> Signature {
        Signature::of(p)
    }

    #[test]
    fn count_examples() {
        assert_eq!(count_lattice_points(&sig(&[1, 1]), 3).count, 7);
        assert_eq!(count_lattice_points(&sig(&[1, 1, 1]), 1).count, 7);
        assert_eq!(count_lattice_points(&sig(&[1, 1, 2]), 1).count, 11);
    }

    #[test]
    fn interpolation_examples() {
        let cfg = OracleConfig::default();
        assert_eq!(ehrhart_interpolate(&sig(&[1, 1]), &cfg).unwrap(), RatPoly::from_ints(&[1, 2]));
        assert_eq!(ehrhart_interpolate(&sig(&[1, 2]), &cfg).unwrap(), RatPoly::from_ints(&[1, 2, 2]));
        assert_eq!(ehrhart_interpolate(&sig(&[1, 1, 1]), &cfg).unwrap(), RatPoly::from_ints(&[1, 3, 3]));
    }

    #[test]
    fn hstar_examples() {
        let cfg = OracleConfig::default();
        assert_eq!(hstar_oracle(&sig(&[1, 1]), &cfg).unwrap().poly(), &RatPoly::from_ints(&[1, 1]));
        assert_eq!(hstar_oracle(&sig(&[2, 2]), &cfg).unwrap().poly(), &RatPoly::from_ints(&[1, 5, 5, 1]));
        assert_eq!(hstar_oracle(&sig(&[1, 1, 1]), &cfg).unwrap().poly(), &RatPoly::from_ints(&[1, 4, 1]));
    }

    #[test]
    fn bound_enforced() {
        let cfg = OracleConfig::default();
        assert_eq!(
            hstar_oracle(&sig(&[4, 3]), &cfg),
            Err(OracleError::SizeExceeded { total: 7, bound: 6 })
        );
    }

    #[test]
    fn small_dilates() {
        for s in partitions(2, 7) {
            assert_eq!(count_lattice_points(&s, 0).count, 1, "{s}");
            assert_eq!(count_lattice_points(&s, 1).count, 2 * s.num_edges() as u64 + 1, "{s}");
        }
    }

    #[test]
    fn central_symmetry() {
        for s in [sig(&[1, 1, 1]), sig(&[2, 2]), sig(&[1, 1, 2])] {
            for k in 0..4 {
                let pts = lattice_points(&s, k);
                assert_eq!(pts.len() as u64, count_lattice_points(&s, k).count);
                let set: std::collections::HashSet<_> = pts.iter().cloned().collect();
                for p in &pts {
                    let neg: Vec<i64> = p.iter().map(|v| -v).collect();
                    assert!(set.contains(&neg));
                    assert_eq!(p.iter().sum::<i64>(), 0);
                }
            }
        }
    }

    #[test]
    fn reflexive_up_to_five() {
        let cfg = OracleConfig::default();
        for s in partitions(2, 5) {
            let e = ehrhart_interpolate(&s, &cfg).unwrap();
            assert!(reflexivity_check(&e, s.dim()), "{s}");
        }
    }

    #[test]
    fn lagrange_recovers_cubic() {
        let p = RatPoly::from_ints(&[3, -1, 0, 2]);
        let pts: Vec<_> = (0..4).map(|k| (int(k), p.eval(&int(k)))).collect();
        assert_eq!(lagrange(&pts), p);
    }
}
