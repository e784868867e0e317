//! Closed-form h* polynomials for complete multipartite families, including the
//! tripartite split into type (i) and type (ii) contributions.

use num_bigint::BigInt;
use num_traits::Zero;
use serde::Serialize;

use crate::graphmodel::Signature;
use crate::exactpoly::{big, binom, int, one_plus_t_pow, rat, HStar, PolyError, RatPoly};

fn b(n: i64, k: i64) -> BigInt {
    binom(n, k)
}

/// c · t^i · (1+t)^e
fn term(c: &BigInt, i: usize, e: usize) -> RatPoly {
    one_plus_t_pow(e).shift(i).scale(&big(c))
}

/// Adds c to the coefficients of t^lo and t^hi.
fn add_pair(h: &mut [BigInt], lo: usize, hi: usize, c: &BigInt) {
    h[lo] += c;
    h[hi] += c;
}

fn finish(h: RatPoly, dim: usize) -> HStar {
    HStar::new(h, dim).expect("closed forms have nonnegative integer coefficients")
}

/// K_{a+1,b+1}: Σ binom(2i,i)binom(a,i)binom(b,i) t^i (1+t)^{a+b+1−2i}.
pub fn hstar_bipartite(a: usize, b_: usize) -> HStar {
    let mut h = RatPoly::zero();
    for i in 0..=a.min(b_) {
        let c = b(2 * i as i64, i as i64) * b(a as i64, i as i64) * b(b_ as i64, i as i64);
        h = &h + &term(&c, i, a + b_ + 1 - 2 * i);
    }
    finish(h, a + b_ + 1)
}

/// K_{1,m,n}.
pub fn hstar_1mn(m: usize, n: usize) -> HStar {
    let mut h = RatPoly::zero();
    for i in 0..=m.min(n) {
        let c = b(2 * i as i64, i as i64) * b(m as i64, i as i64) * b(n as i64, i as i64);
        h = &h + &term(&c, i, m + n - 2 * i);
    }
    finish(h, m + n)
}

/// K_{1,1,1,n}.
pub fn hstar_111n(n: usize) -> HStar {
    let n_ = n as i64;
    let mut h = one_plus_t_pow(n + 2);
    h = &h + &term(&BigInt::from(2 * (2 * n_ + 1)), 1, n);
    if n >= 2 {
        h = &h + &term(&BigInt::from(3 * (n_ - 1) * n_), 2, n - 2);
    }
    finish(h, n + 2)
}

/// Interior polynomial of the suspension: (3(n−1)n/16)t² + ((2n+1)/2)t + 1.
pub fn f_g_111n(n: usize) -> RatPoly {
    let n = n as i64;
    RatPoly::new(vec![int(1), rat(2 * n + 1, 2), rat(3 * (n - 1) * n, 16)])
}

/// (1+t)^d f(4t/(1+t)²) for a polynomial f of degree ≤ d/2, expanded exactly.
pub fn suspension_substitute(f: &RatPoly, d: usize) -> RatPoly {
    let mut acc = RatPoly::zero();
    for (i, c) in f.coeffs().iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let four = int(4);
        let mut w = c.clone();
        for _ in 0..i {
            w *= &four;
        }
        acc = &acc + &one_plus_t_pow(d - 2 * i).shift(i).scale(&w);
    }
    acc
}

pub fn suspension_identity_check(n: usize) -> bool {
    &suspension_substitute(&f_g_111n(n), n + 2) == hstar_111n(n).poly()
}

/// K_{2,2,n}.
pub fn hstar_22n(n: usize) -> HStar {
    let n_ = n as i64;
    let mut h = one_plus_t_pow(n + 3);
    h = &h + &term(&BigInt::from(2 * (3 * n_ + 1)), 1, n + 1);
    h = &h + &term(&(BigInt::from(2) * b(3 * n_, 2)), 2, n - 1);
    if n >= 3 {
        h = &h + &term(&(BigInt::from(20) * b(n_, 3)), 3, n - 3);
    }
    finish(h, n + 3)
}

/// p(x,y,i,j) = binom(x−y−1,i) binom(y−1,j) binom(y+i−j−1,i).
pub fn aux_p(x: i64, y: i64, i: i64, j: i64) -> BigInt {
    b(x - y - 1, i) * b(y - 1, j) * b(y + i - j - 1, i)
}

/// q(ν) = binom(a−1,ν_1) binom(b,ν_2) binom(c,ν_3); the first class loses its root vertex.
pub fn aux_q(a: i64, b_: i64, c: i64, nu: [i64; 3]) -> BigInt {
    b(a - 1, nu[0]) * b(b_, nu[1]) * b(c, nu[2])
}

/// Chains of planar spanning trees along a class path of sizes c_1..c_n.
pub fn aux_c(cs: &[i64]) -> BigInt {
    let n = cs.len();
    match n {
        0 | 1 => return BigInt::from(1),
        2 => return b(cs[0] + cs[1] - 2, cs[1] - 1),
        _ => {}
    }
    // j[i] for path positions 1..=n−2 (0-based), each ranging over 0..cs[i]
    let mut j = vec![0i64; n];
    let mut total = BigInt::zero();
    loop {
        let mut v = b(cs[0] + j[1] - 1, j[1]) * b(cs[n - 2] - j[n - 2] + cs[n - 1] - 2, cs[n - 1] - 1);
        for i in 1..n - 2 {
            v *= b(cs[i] - j[i] + j[i + 1] - 1, j[i + 1]);
        }
        total += v;
        // odometer over positions 1..=n−2
        let mut pos = 1;
        loop {
            if pos > n - 2 {
                return total;
            }
            j[pos] += 1;
            if j[pos] < cs[pos] {
                break;
            }
            j[pos] = 0;
            pos += 1;
        }
    }
}

/// The fourteen-branch table for r(ν_1,ν_2,ν_3) on K_{a,b,c}.
pub fn aux_r(a: i64, b_: i64, c: i64, nu: [i64; 3]) -> BigInt {
    let [n1, n2, n3] = nu;
    let (z1, f1) = (n1 == 0, n1 == a);
    let (z2, f2) = (n2 == 0, n2 == b_);
    let (z3, f3) = (n3 == 0, n3 == c);
    let (m1, m2, m3) = (!z1 && !f1, !z2 && !f2, !z3 && !f3);
    if z1 && f2 && f3 {
        aux_c(&[b_, a, c])
    } else if z1 && f2 && z3 {
        aux_c(&[a, b_, c])
    } else if z1 && z2 && f3 {
        aux_c(&[a, c, b_])
    } else if z1 && f2 && m3 {
        aux_c(&[n3, a, b_, c - n3])
    } else if z1 && m2 && f3 {
        aux_c(&[n2, a, c, b_ - n2])
    } else if m1 && f2 && z3 {
        aux_c(&[n1, c, b_, a - n1])
    } else if m1 && z2 && f3 {
        aux_c(&[n1, b_, c, a - n1])
    } else if z1 && m2 && m3 {
        aux_c(&[b_ - n2, n3, a, n2, c - n3])
    } else if m1 && z2 && m3 {
        aux_c(&[a - n1, n3, b_, n1, c - n3])
    } else if m1 && f2 && m3 {
        aux_c(&[n1, c - n3, b_, a - n1, n3])
    } else if m1 && m2 && z3 {
        aux_c(&[a - n1, n2, c, n1, b_ - n2])
    } else if m1 && m2 && f3 {
        aux_c(&[n1, b_ - n2, c, a - n1, n2])
    } else if m1 && m2 && m3 {
        // one path per class edge dropped from the 6-cycle O1 I2 O3 I1 O2 I3
        aux_c(&[a - n1, n2, c - n3, n1, b_ - n2, n3])
            + aux_c(&[n1, c - n3, n2, a - n1, n3, b_ - n2])
            + aux_c(&[c - n3, n1, b_ - n2, n3, a - n1, n2])
    } else {
        BigInt::zero()
    }
}

/// Type (i) part for any number of classes.
pub fn h_i(parts: &[usize]) -> RatPoly {
    let a: i64 = parts.iter().map(|&x| x as i64).sum();
    let mut h = vec![BigInt::zero(); a as usize];
    let a1 = parts[0] as i64;
    for i in 0..a - a1 {
        for j in 1..a1 {
            let c = aux_p(a, a1, i, j) * b(a - a1 + j - i - 2, j - 1);
            if !c.is_zero() {
                add_pair(&mut h, (i + j + 1) as usize, (a - i - j - 2) as usize, &c);
            }
        }
    }
    for &am in &parts[1..] {
        let am = am as i64;
        for i in 0..a - am {
            for j in 1..am {
                let c = aux_p(a, am, i, j) * b(a - am + j - i - 2, a - am - i - 1);
                if !c.is_zero() {
                    add_pair(&mut h, (i + j) as usize, (a - i - j - 1) as usize, &c);
                }
            }
        }
    }
    RatPoly::from_bigints(&h)
}

/// Type (ii) part for K_{a,b,c}: Σ_ν q(ν) r(ν) (t^{|ν|} + t^{a+b+c−1−|ν|}).
pub fn h_ii(a: usize, b_: usize, c: usize) -> RatPoly {
    let (a, b_, c) = (a as i64, b_ as i64, c as i64);
    let s = a + b_ + c;
    let mut h = vec![BigInt::zero(); s as usize];
    for n1 in 0..a {
        for n2 in 0..=b_ {
            for n3 in 0..=c {
                let nu = [n1, n2, n3];
                let q = aux_q(a, b_, c, nu);
                if q.is_zero() {
                    continue;
                }
                let v = q * aux_r(a, b_, c, nu);
                if !v.is_zero() {
                    let e = n1 + n2 + n3;
                    add_pair(&mut h, e as usize, (s - 1 - e) as usize, &v);
                }
            }
        }
    }
    RatPoly::from_bigints(&h)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TripartiteHStar {
    pub h_i: RatPoly,
    pub h_ii: RatPoly,
    pub total: HStar,
}

pub fn hstar_tripartite(a: usize, b_: usize, c: usize) -> Result<TripartiteHStar, PolyError> {
    let h_i = h_i(&[a, b_, c]);
    let h_ii = h_ii(a, b_, c);
    let total = HStar::new(&h_i + &h_ii, a + b_ + c - 1)?;
    Ok(TripartiteHStar { h_i, h_ii, total })
}

/// h*(K_{m+1,n+1}) = (1+t) h*(K_{1,m,n}).
pub fn contraction_identity_check(m: usize, n: usize) -> bool {
    hstar_bipartite(m, n).poly() == &(&one_plus_t_pow(1) * hstar_1mn(m, n).poly())
}

/// Closed form for a signature when one applies: any two or three classes, or
/// classes 1,1,1,n in some order. h* depends only on the multiset of class sizes.
pub fn hstar_closed(sig: &Signature) -> Option<HStar> {
    let p = sig.sorted().parts().to_vec();
    match p.as_slice() {
        [a, b_] => Some(hstar_bipartite(a - 1, b_ - 1)),
        [a, b_, c] => hstar_tripartite(*a, *b_, *c).ok().map(|t| t.total),
        [1, 1, 1, n] => Some(hstar_111n(*n)),
        _ => None,
    }
}
