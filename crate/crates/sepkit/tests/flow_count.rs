//! Independent lattice-point count used to pin the closed forms far past the
//! triangulation range.
//!
//! The polytopes have unimodular triangulations, so a lattice point x lies in the
//! k-th dilate iff x is the divergence of an integer flow of cost ≤ k, edges
//! costing 1. In a complete multipartite graph two vertices are at distance 1
//! (different classes) or 2 (same class). With p_i, q_i the positive and
//! negative mass of x on class i and T = Σp_i, the cheapest transport costs
//! max(T, max_i p_i + q_i). So |kP ∩ Z^N| is a sum over per-class (p_i, q_i)
//! with T ≤ k and p_i + q_i ≤ k, weighted by the number of vectors on each class
//! with that positive and negative mass.

use num_bigint::BigInt;
use num_traits::{One, Zero};
use sepkit::closedforms::hstar_closed;
use sepkit::graphmodel::Signature;
use sepkit::oracle::{count_lattice_points, hstar_oracle, OracleConfig};
use sepkit::signatures::partitions;
use std::collections::HashMap;

fn binom(n: i64, k: i64) -> BigInt {
    if k < 0 || n < k || n < 0 {
        return BigInt::zero();
    }
    let mut r = BigInt::one();
    for i in 0..k {
        r = r * (n - i) / (i + 1);
    }
    r
}

/// Compositions of m into j positive parts (1 for m = j = 0).
fn comps(m: i64, j: i64) -> BigInt {
    if m == 0 && j == 0 {
        BigInt::one()
    } else if j == 0 {
        BigInt::zero()
    } else {
        binom(m - 1, j - 1)
    }
}

/// Integer vectors on a class of size a with positive mass p and negative mass q.
fn class_weight(a: i64, p: i64, q: i64) -> BigInt {
    let mut s = BigInt::zero();
    for j in 0..=a {
        for l in 0..=a - j {
            s += binom(a, j) * binom(a - j, l) * comps(p, j) * comps(q, l);
        }
    }
    s
}

fn flow_count(parts: &[usize], k: i64) -> BigInt {
    let mut dp: HashMap<(i64, i64), BigInt> = HashMap::from([((0, 0), BigInt::one())]);
    for &a in parts {
        let mut next: HashMap<(i64, i64), BigInt> = HashMap::new();
        for ((pp, qq), v) in &dp {
            for p in 0..=k - pp {
                for q in 0..=(k - qq).min(k - p) {
                    let w = class_weight(a as i64, p, q);
                    if !w.is_zero() {
                        *next.entry((pp + p, qq + q)).or_insert_with(BigInt::zero) += v * w;
                    }
                }
            }
        }
        dp = next;
    }
    dp.into_iter().filter(|((p, q), _)| p == q).map(|(_, v)| v).sum()
}

fn flow_hstar(parts: &[usize]) -> Vec<BigInt> {
    let d = parts.iter().sum::<usize>() as i64 - 1;
    let e: Vec<BigInt> = (0..=d).map(|k| flow_count(parts, k)).collect();
    (0..=d)
        .map(|i| {
            (0..=i)
                .map(|j| {
                    let t = binom(d + 1, j) * &e[(i - j) as usize];
                    if j % 2 == 0 {
                        t
                    } else {
                        -t
                    }
                })
                .sum()
        })
        .collect()
}

#[test]
fn flow_count_matches_enumeration() {
    for sig in partitions(2, 5) {
        for k in 0..=3 {
            let brute = count_lattice_points(&sig, k).count;
            assert_eq!(flow_count(sig.parts(), k as i64), BigInt::from(brute), "{sig} k={k}");
        }
    }
}

#[test]
fn flow_hstar_matches_oracle() {
    for sig in partitions(2, 6) {
        let h = hstar_oracle(&sig, &OracleConfig::default()).unwrap();
        assert_eq!(flow_hstar(sig.parts()), h.coefficients(), "{sig}");
    }
}

#[test]
fn closed_forms_match_flow_count_to_total_12() {
    let mut checked = 0;
    for sig in partitions(2, 12) {
        if let Some(h) = hstar_closed(&sig) {
            assert_eq!(h.coefficients(), flow_hstar(sig.parts()), "{sig}");
            checked += 1;
        }
    }
    assert_eq!(checked, 98);
}

#[test]
fn tripartite_order_independent() {
    for (a, b, c) in [(2, 3, 4), (3, 4, 2), (4, 2, 3), (3, 3, 5)] {
        let h = hstar_closed(&Signature::of(&[a, b, c])).unwrap();
        assert_eq!(h.coefficients(), flow_hstar(&[c, a, b]));
    }
}
