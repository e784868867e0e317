//! Exact root location on the line Re z = −1/2 and interlacing along it.
//!
//! With u = 2z+1 a symmetric E becomes F(u) = 2^d E((u−1)/2) = u^parity H(u²).
//! A root z = −1/2 + is has w = u² = −4s², so E has every root on the line iff
//! every root of H is real and ≤ 0. Everything below is Sturm sequences and
//! bisection over the rationals.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::Serialize;
use thiserror::Error;

use crate::exactpoly::{int, is_symmetric_about_cl, rat_to_string, Rat, RatPoly};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ClError {
    #[error("polynomial is not symmetric about the line Re z = -1/2")]
    NotSymmetric,
    #[error("{0} does not have all its roots on the line Re z = -1/2")]
    NotCL(String),
    #[error("degrees {f} and {g} do not differ by one")]
    DegreeMismatch { f: usize, g: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CLTransform {
    pub source: RatPoly,
    pub parity: usize,
    pub h: RatPoly,
}

pub fn cl_transform(e: &RatPoly) -> Result<CLTransform, ClError> {
    if !is_symmetric_about_cl(e) {
        return Err(ClError::NotSymmetric);
    }
    let d = e.degree().unwrap_or(0);
    let half = Rat::new(1.into(), 2.into());
    let f = e.compose_affine(&half, &-half.clone()).scale(&Rat::from_integer(BigInt::from(2).pow(d as u32)));
    let parity = d % 2;
    let hc: Vec<Rat> = f.coeffs().iter().skip(parity).step_by(2).cloned().collect();
    Ok(CLTransform { source: e.clone(), parity, h: RatPoly::new(hc) })
}

/// Where a polynomial is evaluated in a Sturm count.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Bound {
    NegInf,
    At(Rat),
    PosInf,
}

fn sign_at(p: &RatPoly, x: &Bound) -> i32 {
    let s = match x {
        Bound::At(v) => p.eval(v),
        Bound::PosInf => p.leading(),
        Bound::NegInf => {
            let l = p.leading();
            if p.degree().unwrap_or(0) % 2 == 1 {
                -l
            } else {
                l
            }
        }
    };
    if s.is_positive() {
        1
    } else if s.is_negative() {
        -1
    } else {
        0
    }
}

fn variations(chain: &[RatPoly], x: &Bound) -> usize {
    let signs: Vec<i32> = chain.iter().map(|p| sign_at(p, x)).filter(|&s| s != 0).collect();
    signs.windows(2).filter(|w| w[0] != w[1]).count()
}

/// p, p′, −rem(p_{k−1}, p_k), … over the rationals.
pub fn sturm_chain(p: &RatPoly) -> Vec<RatPoly> {
    let mut chain = vec![p.clone(), p.derivative()];
    while !chain.last().unwrap().is_zero() && chain.last().unwrap().degree() != Some(0) {
        let n = chain.len();
        let (_, r) = chain[n - 2].div_rem(&chain[n - 1]);
        chain.push(-&r);
    }
    if chain.last().unwrap().is_zero() {
        chain.pop();
    }
    chain
}

/// Integer coefficients with positive content 1; sign is preserved.
pub fn primitive(p: &RatPoly) -> RatPoly {
    if p.is_zero() {
        return p.clone();
    }
    let l = p.coeffs().iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let nums: Vec<BigInt> = p.coeffs().iter().map(|c| (c * Rat::from_integer(l.clone())).to_integer()).collect();
    let g = nums.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
    RatPoly::from_bigints(&nums.iter().map(|c| c / &g).collect::<Vec<_>>())
}

/// Same signs as `sturm_chain`, but every member is an integer primitive polynomial
/// obtained through sign-preserving pseudo-remainders.
pub fn sturm_chain_primitive(p: &RatPoly) -> Vec<RatPoly> {
    let mut chain = vec![primitive(p), primitive(&p.derivative())];
    while !chain.last().unwrap().is_zero() && chain.last().unwrap().degree() != Some(0) {
        let n = chain.len();
        let (a, b) = (&chain[n - 2], &chain[n - 1]);
        let delta = a.degree().unwrap() - b.degree().unwrap();
        let lc = b.leading().abs();
        let mut scale = Rat::one();
        for _ in 0..=delta {
            scale *= &lc;
        }
        let (_, r) = a.scale(&scale).div_rem(b);
        chain.push(primitive(&-&r));
    }
    if chain.last().unwrap().is_zero() {
        chain.pop();
    }
    chain
}

/// Distinct real roots of p in (lo, hi]. p is reduced to its squarefree part first.
pub fn sturm_count(p: &RatPoly, lo: &Bound, hi: &Bound) -> usize {
    let chain = sturm_chain(&p.squarefree_part());
    variations(&chain, lo).saturating_sub(variations(&chain, hi))
}

pub fn sturm_count_primitive(p: &RatPoly, lo: &Bound, hi: &Bound) -> usize {
    let chain = sturm_chain_primitive(&p.squarefree_part());
    variations(&chain, lo).saturating_sub(variations(&chain, hi))
}

/// 1 + max |a_i / a_n|: every root has absolute value below it.
fn cauchy_bound(p: &RatPoly) -> Rat {
    let l = p.leading().abs();
    let m = p.coeffs().iter().map(|c| c.abs() / &l).max().unwrap_or_else(Rat::zero);
    m + Rat::one()
}

/// Disjoint half-open intervals (lo, hi], one per distinct real root, ascending.
/// No interval straddles 0, so a root at 0 is the one whose interval ends there.
pub fn isolate_real_roots(p: &RatPoly) -> Vec<(Rat, Rat)> {
    let q = p.squarefree_part();
    if q.degree().unwrap_or(0) == 0 {
        return Vec::new();
    }
    let chain = sturm_chain(&q);
    let count = |lo: &Rat, hi: &Rat| {
        variations(&chain, &Bound::At(lo.clone())) - variations(&chain, &Bound::At(hi.clone()))
    };
    let m = cauchy_bound(&q);
    let mut stack = vec![(-m.clone(), Rat::zero()), (Rat::zero(), m)];
    let mut out = Vec::new();
    while let Some((lo, hi)) = stack.pop() {
        match count(&lo, &hi) {
            0 => {}
            1 => out.push((lo, hi)),
            _ => {
                let mid = (&lo + &hi) / int(2);
                stack.push((lo, mid.clone()));
                stack.push((mid, hi));
            }
        }
    }
    out.sort();
    out
}

/// Shrink an isolating interval (lo, hi] of p by bisection until hi − lo ≤ width.
pub fn refine_root(p: &RatPoly, lo: &Rat, hi: &Rat, width: &Rat) -> (Rat, Rat) {
    let chain = sturm_chain(&p.squarefree_part());
    let (mut lo, mut hi) = (lo.clone(), hi.clone());
    while &(&hi - &lo) > width {
        let mid = (&lo + &hi) / int(2);
        let left = variations(&chain, &Bound::At(lo.clone())) - variations(&chain, &Bound::At(mid.clone()));
        if left == 1 {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    (lo, hi)
}

/// Yun's squarefree decomposition: p = c ∏ P_k^k with P_k squarefree, pairwise coprime.
pub fn squarefree_decomposition(p: &RatPoly) -> Vec<(RatPoly, usize)> {
    let mut out = Vec::new();
    if p.degree().unwrap_or(0) == 0 {
        return out;
    }
    let dp = p.derivative();
    let a0 = RatPoly::gcd(p, &dp);
    let mut b = p.div_rem(&a0).0;
    let mut c = dp.div_rem(&a0).0;
    let mut d = &c - &b.derivative();
    let mut k = 1;
    while b.degree().unwrap_or(0) > 0 {
        let a = RatPoly::gcd(&b, &d);
        if a.degree().unwrap_or(0) > 0 {
            out.push((a.monic(), k));
        }
        b = b.div_rem(&a).0;
        c = d.div_rem(&a).0;
        d = &c - &b.derivative();
        k += 1;
    }
    out
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RootInterval {
    #[serde(serialize_with = "ser_rat")]
    pub lo: Rat,
    #[serde(serialize_with = "ser_rat")]
    pub hi: Rat,
    pub multiplicity: usize,
}

fn ser_rat<S: serde::Serializer>(r: &Rat, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&rat_to_string(r))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RootCertificate {
    pub degree: usize,
    pub symmetric: bool,
    pub parity: usize,
    pub h: RatPoly,
    /// Isolating intervals for the real roots of H, in the w = u² coordinate.
    pub intervals: Vec<RootInterval>,
    pub on_cl: bool,
}

fn multiplicity_in(decomp: &[(RatPoly, usize)], lo: &Rat, hi: &Rat) -> usize {
    decomp
        .iter()
        .filter(|(p, _)| sturm_count(p, &Bound::At(lo.clone()), &Bound::At(hi.clone())) == 1)
        .map(|(_, k)| *k)
        .sum()
}

pub fn is_cl(e: &RatPoly) -> RootCertificate {
    let degree = e.degree().unwrap_or(0);
    let Ok(tr) = cl_transform(e) else {
        return RootCertificate {
            degree,
            symmetric: false,
            parity: degree % 2,
            h: RatPoly::zero(),
            intervals: Vec::new(),
            on_cl: false,
        };
    };
    let decomp = squarefree_decomposition(&tr.h);
    let sq = tr.h.squarefree_part();
    let intervals: Vec<RootInterval> = isolate_real_roots(&tr.h)
        .into_iter()
        .map(|(lo, hi)| {
            let multiplicity = multiplicity_in(&decomp, &lo, &hi);
            RootInterval { lo, hi, multiplicity }
        })
        .collect();
    let all_real = intervals.len() == sq.degree().unwrap_or(0);
    let nonpositive = sturm_count(&tr.h, &Bound::At(Rat::zero()), &Bound::PosInf) == 0;
    RootCertificate { degree, symmetric: true, parity: tr.parity, h: tr.h, intervals, on_cl: all_real && nonpositive }
}

/// One distinct root position on the line, ordered by imaginary part.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClPoint {
    /// −1 below the real axis, 0 at −1/2 itself, +1 above.
    pub side: i8,
    #[serde(serialize_with = "ser_rat")]
    pub w_lo: Rat,
    #[serde(serialize_with = "ser_rat")]
    pub w_hi: Rat,
    pub mult_f: usize,
    pub mult_g: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct InterlaceCertificate {
    pub points: Vec<ClPoint>,
    /// gcd of the squarefree parts of the two H polynomials.
    pub shared: RatPoly,
    pub interlaces: bool,
}

/// Does g interlace f along the line (roots a_1 ⪯ b_1 ⪯ a_2 ⪯ … ⪯ b_d ⪯ a_{d+1},
/// a from f, b from g)?
pub fn interlaces_on_cl(g: &RatPoly, f: &RatPoly) -> Result<InterlaceCertificate, ClError> {
    let (df, dg) = (f.degree().unwrap_or(0), g.degree().unwrap_or(0));
    if df != dg + 1 {
        return Err(ClError::DegreeMismatch { f: df, g: dg });
    }
    for p in [f, g] {
        if !is_cl(p).on_cl {
            return Err(ClError::NotCL(p.to_string()));
        }
    }
    let (tf, tg) = (cl_transform(f)?, cl_transform(g)?);
    let (sf, sg) = (tf.h.squarefree_part(), tg.h.squarefree_part());
    let shared = RatPoly::gcd(&sf, &sg);
    let (decf, decg) = (squarefree_decomposition(&tf.h), squarefree_decomposition(&tg.h));
    // every distinct w-root of either polynomial, isolated together so the intervals are disjoint
    let joint = (&sf * &sg).squarefree_part();
    let roots = isolate_real_roots(&joint);
    let zero = Rat::zero();
    let mut below = Vec::new();
    let mut center = (tf.parity, tg.parity);
    for (lo, hi) in &roots {
        let (mf, mg) = (multiplicity_in(&decf, lo, hi), multiplicity_in(&decg, lo, hi));
        if hi == &zero && joint.eval(&zero).is_zero() {
            // w = 0 is u = 0 counted twice per factor of w
            center.0 += 2 * mf;
            center.1 += 2 * mg;
        } else {
            below.push(ClPoint { side: -1, w_lo: lo.clone(), w_hi: hi.clone(), mult_f: mf, mult_g: mg });
        }
    }
    // ascending w is ascending (negative) imaginary part below the axis, descending above
    let mut points = below.clone();
    if center != (0, 0) {
        points.push(ClPoint { side: 0, w_lo: zero.clone(), w_hi: zero, mult_f: center.0, mult_g: center.1 });
    }
    points.extend(below.into_iter().rev().map(|p| ClPoint { side: 1, ..p }));
    let (mut fle, mut gle) = (0usize, 0usize);
    let mut ok = true;
    for p in &points {
        // strictly before this point
        let (flt, glt) = (fle, gle);
        if glt + 1 < flt {
            ok = false;
        }
        fle += p.mult_f;
        gle += p.mult_g;
        if gle > fle {
            ok = false;
        }
    }
    ok &= fle == df && gle == dg;
    Ok(InterlaceCertificate { points, shared, interlaces: ok })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::closedforms::{hstar_111n, hstar_1mn, hstar_bipartite};
    use crate::exactpoly::{ehrhart_from_hstar, ehrhart_from_numerator, one_plus_t_pow};
    use proptest::prelude::*;

    fn p(c: &[i64]) -> RatPoly {
        RatPoly::from_ints(c)
    }

    fn e1n(n: usize) -> RatPoly {
        ehrhart_from_numerator(&one_plus_t_pow(n), n)
    }

    #[test]
    fn transform_examples() {
        let t = cl_transform(&p(&[1, 2, 2])).unwrap();
        assert_eq!(t.h, p(&[2, 2]));
        let t = cl_transform(&p(&[1, 2])).unwrap();
        assert_eq!((t.parity, t.h.degree()), (1, Some(0)));
        let c3 = e1n(3);
        let t = cl_transform(&c3).unwrap();
        assert_eq!(t.h.monic(), p(&[5, 1]));
        assert_eq!(cl_transform(&p(&[0, 1])), Err(ClError::NotSymmetric));
    }

    #[test]
    fn sturm_examples() {
        use Bound::*;
        assert_eq!(sturm_count(&p(&[1, 1]), &NegInf, &At(int(0))), 1);
        assert_eq!(sturm_count(&p(&[-1, 0, 1]), &NegInf, &At(int(0))), 1);
        assert_eq!(sturm_count(&p(&[1, 0, 1]), &NegInf, &PosInf), 0);
        assert_eq!(sturm_count(&p(&[0, -1, 0, 1]), &At(int(-1)), &At(int(1))), 2);
    }

    #[test]
    fn cl_examples() {
        assert!(is_cl(&e1n(4)).on_cl);
        let k22 = ehrhart_from_hstar(&hstar_bipartite(1, 1));
        assert!(is_cl(&k22).on_cl);
        assert!(is_cl(&p(&[1, 1, 1])).on_cl);
        let off = is_cl(&p(&[-2, 1, 1]));
        assert!(off.symmetric && !off.on_cl);
        assert!(!is_cl(&p(&[0, 1, 1, 1])).on_cl);
    }

    #[test]
    fn proven_families_on_cl() {
        let fam = |h: crate::exactpoly::HStar| ehrhart_from_hstar(&h);
        for n in 1..=12 {
            let c = is_cl(&e1n(n));
            assert!(c.on_cl, "E_1,{n}");
            let total: usize = c.intervals.iter().map(|i| i.multiplicity).sum();
            assert_eq!(total, n / 2);
            assert!(c.intervals.iter().all(|i| i.hi <= Rat::zero()));
        }
        for n in 1..=10 {
            assert!(is_cl(&fam(hstar_bipartite(1, n - 1))).on_cl, "E_2,{n}");
            assert!(is_cl(&fam(hstar_bipartite(2, n - 1))).on_cl, "E_3,{n}");
            assert!(is_cl(&fam(hstar_1mn(1, n))).on_cl, "E_1,1,{n}");
            assert!(is_cl(&fam(hstar_1mn(2, n))).on_cl, "E_1,2,{n}");
            assert!(is_cl(&fam(hstar_111n(n))).on_cl, "E_1,1,1,{n}");
        }
    }

    #[test]
    fn interlace_examples() {
        let c = interlaces_on_cl(&p(&[1, 2]), &p(&[1, 2, 2])).unwrap();
        assert!(c.interlaces);
        assert_eq!(c.points.iter().map(|q| q.side).collect::<Vec<_>>(), vec![-1, 0, 1]);
        assert!(interlaces_on_cl(&e1n(2), &e1n(3)).unwrap().interlaces);
        let c = interlaces_on_cl(&p(&[1, 2]), &p(&[1, 4, 4])).unwrap();
        assert!(c.interlaces);
        assert_eq!(c.shared.degree(), Some(0));
        assert_eq!(c.points.len(), 1);
        assert!(matches!(interlaces_on_cl(&p(&[1, 2]), &p(&[-2, 1, 1])), Err(ClError::NotCL(_))));
    }

    #[test]
    fn cross_polytopes_interlace() {
        for n in 1..=12 {
            assert!(interlaces_on_cl(&e1n(n), &e1n(n + 1)).unwrap().interlaces, "{n}");
        }
    }

    #[test]
    fn non_interlacing_detected() {
        // x²+x+1 has s = ±√3/2, which sits between the roots s = 0, ±√5/2 of C_3
        assert!(interlaces_on_cl(&p(&[1, 1, 1]), &e1n(3)).unwrap().interlaces);
        assert!(matches!(interlaces_on_cl(&p(&[1, 1, 1]), &e1n(4)), Err(ClError::DegreeMismatch { .. })));
        // f has s = 0, ±1 and g has s = ±5/2, outside f's outer pair
        let f = &p(&[1, 2]) * &p(&[5, 4, 4]);
        let c = interlaces_on_cl(&p(&[26, 4, 4]), &f).unwrap();
        assert!(!c.interlaces);
    }

    proptest! {
        #[test]
        fn primitive_chain_agrees(roots in proptest::collection::vec(-6i64..6, 1..6), lo in -8i64..0, hi in 0i64..8, extra in 0i64..4) {
            let mut q = RatPoly::one();
            for r in &roots {
                q = &q * &RatPoly::from_ints(&[-r, 1]);
            }
            q = &q * &RatPoly::from_ints(&[extra, 0, 1]);
            let (a, b) = (Bound::At(int(lo)), Bound::At(int(hi)));
            prop_assert_eq!(sturm_count(&q, &a, &b), sturm_count_primitive(&q, &a, &b));
            prop_assert_eq!(sturm_count(&q, &Bound::NegInf, &Bound::PosInf), sturm_count_primitive(&q, &Bound::NegInf, &Bound::PosInf));
        }

        #[test]
        fn isolation_counts_distinct_roots(roots in proptest::collection::btree_set(-9i64..9, 1..7)) {
            let mut q = RatPoly::one();
            for r in &roots {
                q = &q * &RatPoly::from_ints(&[-r, 1]);
            }
            let iv = isolate_real_roots(&(&q * &q));
            prop_assert_eq!(iv.len(), roots.len());
            for ((lo, hi), r) in iv.iter().zip(&roots) {
                prop_assert!(lo < &int(*r) && &int(*r) <= hi);
            }
        }
    }
}
