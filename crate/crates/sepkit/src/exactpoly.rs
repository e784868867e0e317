//! Exact rationals, dense univariate polynomials, Ehrhart / h* conversions,
//! gamma vectors and the cross-polynomial basis.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::ser::{Serialize, SerializeStruct, Serializer};
use thiserror::Error;

/// Reduced fraction with positive denominator.
pub type Rat = BigRational;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PolyError {
    #[error("E({k}) = {value} is not an integer")]
    NonIntegerCount { k: usize, value: String },
    #[error("h*_{index} = {value} is negative")]
    NegativeHStar { index: usize, value: String },
    #[error("not palindromic of degree {dim}: coefficient {index} differs from its mirror")]
    NotPalindromic { dim: usize, index: usize },
    #[error("invalid h*-polynomial: {0}")]
    InvalidHStar(String),
}

pub fn int(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

pub fn rat(n: i64, d: i64) -> Rat {
    Rat::new(BigInt::from(n), BigInt::from(d))
}

pub fn big(n: &BigInt) -> Rat {
    Rat::from_integer(n.clone())
}

/// Binomial coefficient; zero whenever an argument is negative or k > n.
pub fn binom(n: i64, k: i64) -> BigInt {
    if n < 0 || k < 0 || k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for j in 0..k {
        acc = acc * BigInt::from(n - j) / BigInt::from(j + 1);
    }
    acc
}

/// Fraction string: "p" for integers, "p/q" otherwise.
pub fn rat_to_string(r: &Rat) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

pub fn parse_rat(s: &str) -> Option<Rat> {
    let s = s.trim();
    match s.split_once('/') {
        Some((p, q)) => {
            let p: BigInt = p.trim().parse().ok()?;
            let q: BigInt = q.trim().parse().ok()?;
            if q.is_zero() {
                None
            } else {
                Some(Rat::new(p, q))
            }
        }
        None => s.parse::<BigInt>().ok().map(Rat::from_integer),
    }
}

/// Dense polynomial with exact rational coefficients, index = degree.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct RatPoly {
    coeffs: Vec<Rat>,
}

impl RatPoly {
    pub fn new(mut coeffs: Vec<Rat>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        RatPoly { coeffs }
    }

    pub fn from_ints(c: &[i64]) -> Self {
        Self::new(c.iter().map(|&v| int(v)).collect())
    }

    pub fn from_bigints(c: &[BigInt]) -> Self {
        Self::new(c.iter().map(big).collect())
    }

    pub fn zero() -> Self {
        RatPoly { coeffs: vec![] }
    }

    pub fn one() -> Self {
        Self::constant(Rat::one())
    }

    pub fn x() -> Self {
        Self::from_ints(&[0, 1])
    }

    pub fn constant(c: Rat) -> Self {
        Self::new(vec![c])
    }

    /// c * x^k
    pub fn monomial(c: Rat, k: usize) -> Self {
        let mut v = vec![Rat::zero(); k + 1];
        v[k] = c;
        Self::new(v)
    }

    /// a*x + b
    pub fn linear(a: Rat, b: Rat) -> Self {
        Self::new(vec![b, a])
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> Rat {
        self.coeffs.get(i).cloned().unwrap_or_else(Rat::zero)
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn leading(&self) -> Rat {
        self.coeffs.last().cloned().unwrap_or_else(Rat::zero)
    }

    pub fn eval(&self, x: &Rat) -> Rat {
        let mut acc = Rat::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn scale(&self, s: &Rat) -> Self {
        Self::new(self.coeffs.iter().map(|c| c * s).collect())
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * int(i as i64))
                .collect(),
        )
    }

    /// Multiply by x^k.
    pub fn shift(&self, k: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut v = vec![Rat::zero(); k];
        v.extend(self.coeffs.iter().cloned());
        Self::new(v)
    }

    pub fn pow(&self, e: usize) -> Self {
        let mut acc = Self::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// p(a*x + b)
    pub fn compose_affine(&self, a: &Rat, b: &Rat) -> Self {
        let lin = Self::linear(a.clone(), b.clone());
        let mut acc = Self::zero();
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * &lin) + &Self::constant(c.clone());
        }
        acc
    }

    /// Keep terms of degree ≤ n.
    pub fn truncate(&self, n: usize) -> Self {
        Self::new(self.coeffs.iter().take(n + 1).cloned().collect())
    }

    pub fn div_rem(&self, d: &RatPoly) -> (RatPoly, RatPoly) {
        assert!(!d.is_zero(), "division by the zero polynomial");
        let dd = d.degree().unwrap();
        let lc = d.leading();
        let mut r = self.coeffs.clone();
        if r.len() <= dd {
            return (Self::zero(), self.clone());
        }
        let mut q = vec![Rat::zero(); r.len() - dd];
        for i in (0..q.len()).rev() {
            let c = &r[i + dd] / &lc;
            if !c.is_zero() {
                for (j, dc) in d.coeffs.iter().enumerate() {
                    r[i + j] -= &c * dc;
                }
            }
            q[i] = c;
        }
        r.truncate(dd);
        (Self::new(q), Self::new(r))
    }

    pub fn monic(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        self.scale(&(Rat::one() / self.leading()))
    }

    /// Monic gcd; gcd(0, 0) = 0.
    pub fn gcd(a: &RatPoly, b: &RatPoly) -> RatPoly {
        let (mut a, mut b) = (a.clone(), b.clone());
        while !b.is_zero() {
            let r = a.div_rem(&b).1;
            a = b;
            b = r;
        }
        a.monic()
    }

    /// p / gcd(p, p'), monic.
    pub fn squarefree_part(&self) -> RatPoly {
        if self.degree().unwrap_or(0) == 0 {
            return self.monic();
        }
        let g = Self::gcd(self, &self.derivative());
        self.div_rem(&g).0.monic()
    }

    pub fn is_integral(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_integer())
    }

    /// Palindromic with respect to degree d: p_i = p_{d-i} for 0 ≤ i ≤ d.
    pub fn is_palindromic(&self, d: usize) -> bool {
        palindrome_defect(self, d).is_none()
    }

    pub fn to_strings(&self) -> Vec<String> {
        self.coeffs.iter().map(rat_to_string).collect()
    }

    /// Human form in the given variable, ascending degree.
    pub fn pretty(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut out = String::new();
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let a = c.abs();
            if out.is_empty() {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let body = rat_to_string(&a);
            match i {
                0 => out.push_str(&body),
                _ => {
                    if !a.is_one() {
                        if a.is_integer() {
                            out.push_str(&body);
                        } else {
                            out.push_str(&format!("({body})"));
                        }
                    }
                    out.push_str(var);
                    if i > 1 {
                        out.push_str(&format!("^{i}"));
                    }
                }
            }
        }
        out
    }
}

fn palindrome_defect(p: &RatPoly, d: usize) -> Option<usize> {
    if p.degree().is_some_and(|deg| deg > d) {
        return Some(d + 1);
    }
    (0..=d).find(|&i| p.coeff(i) != p.coeff(d - i))
}

impl fmt::Display for RatPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.pretty("x"))
    }
}

impl Add for &RatPoly {
    type Output = RatPoly;
    fn add(self, o: &RatPoly) -> RatPoly {
        let n = self.coeffs.len().max(o.coeffs.len());
        RatPoly::new((0..n).map(|i| self.coeff(i) + o.coeff(i)).collect())
    }
}

impl Sub for &RatPoly {
    type Output = RatPoly;
    fn sub(self, o: &RatPoly) -> RatPoly {
        let n = self.coeffs.len().max(o.coeffs.len());
        RatPoly::new((0..n).map(|i| self.coeff(i) - o.coeff(i)).collect())
    }
}

impl Mul for &RatPoly {
    type Output = RatPoly;
    fn mul(self, o: &RatPoly) -> RatPoly {
        if self.is_zero() || o.is_zero() {
            return RatPoly::zero();
        }
        let mut v = vec![Rat::zero(); self.coeffs.len() + o.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.coeffs.iter().enumerate() {
                v[i + j] += a * b;
            }
        }
        RatPoly::new(v)
    }
}

impl Neg for &RatPoly {
    type Output = RatPoly;
    fn neg(self) -> RatPoly {
        RatPoly::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

impl Add for RatPoly {
    type Output = RatPoly;
    fn add(self, o: RatPoly) -> RatPoly {
        &self + &o
    }
}

impl Sub for RatPoly {
    type Output = RatPoly;
    fn sub(self, o: RatPoly) -> RatPoly {
        &self - &o
    }
}

impl Mul for RatPoly {
    type Output = RatPoly;
    fn mul(self, o: RatPoly) -> RatPoly {
        &self * &o
    }
}

/// h*-polynomial of a d-dimensional lattice polytope.
/// Serialized as the coefficient list in ascending degree, each a fraction string.
impl Serialize for RatPoly {
    fn serialize<S: Serializer>(&self, ser: S) -> Result<S::Ok, S::Error> {
        self.to_strings().serialize(ser)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct HStar {
    poly: RatPoly,
    dim: usize,
}

impl HStar {
    pub fn new(poly: RatPoly, dim: usize) -> Result<Self, PolyError> {
        if let Some((i, c)) = poly.coeffs().iter().enumerate().find(|(_, c)| c.is_negative()) {
            return Err(PolyError::NegativeHStar { index: i, value: rat_to_string(c) });
        }
        if !poly.is_integral() {
            return Err(PolyError::InvalidHStar("non-integer coefficient".into()));
        }
        if poly.coeff(0) != Rat::one() {
            return Err(PolyError::InvalidHStar("constant term is not 1".into()));
        }
        if poly.degree().unwrap_or(0) > dim {
            return Err(PolyError::InvalidHStar(format!("degree exceeds dimension {dim}")));
        }
        Ok(HStar { poly, dim })
    }

    pub fn from_ints(c: &[i64], dim: usize) -> Result<Self, PolyError> {
        Self::new(RatPoly::from_ints(c), dim)
    }

    pub fn poly(&self) -> &RatPoly {
        &self.poly
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Coefficients h_0..h_dim, padded with zeros.
    pub fn coefficients(&self) -> Vec<BigInt> {
        (0..=self.dim).map(|i| self.poly.coeff(i).to_integer()).collect()
    }

    pub fn is_palindromic(&self) -> bool {
        self.poly.is_palindromic(self.dim)
    }

    /// h*(1), the normalized volume.
    pub fn volume(&self) -> BigInt {
        self.coefficients().iter().sum()
    }
}

impl Serialize for HStar {
    fn serialize<S: Serializer>(&self, ser: S) -> Result<S::Ok, S::Error> {
        let mut st = ser.serialize_struct("HStar", 2)?;
        st.serialize_field("dim", &self.dim)?;
        let coeffs: Vec<String> = self.coefficients().iter().map(|c| c.to_string()).collect();
        st.serialize_field("coefficients", &coeffs)?;
        st.end()
    }
}

impl fmt::Display for HStar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.poly.pretty("t"))
    }
}

/// binom(x + c, d) as a polynomial in x.
pub fn binomial_poly(c: i64, d: usize) -> RatPoly {
    let mut acc = RatPoly::one();
    let mut fact = BigInt::one();
    for j in 0..d as i64 {
        acc = &acc * &RatPoly::linear(Rat::one(), int(c - j));
        fact *= BigInt::from(j + 1);
    }
    acc.scale(&(Rat::one() / big(&fact)))
}

/// (1 + t)^n
pub fn one_plus_t_pow(n: usize) -> RatPoly {
    RatPoly::from_ints(&[1, 1]).pow(n)
}

/// E(x) = Σ h_i binom(d + x - i, d).
pub fn ehrhart_from_hstar(h: &HStar) -> RatPoly {
    ehrhart_from_numerator(h.poly(), h.dim())
}

/// Same conversion for an arbitrary rational numerator.
pub fn ehrhart_from_numerator(h: &RatPoly, d: usize) -> RatPoly {
    let mut acc = RatPoly::zero();
    for (i, c) in h.coeffs().iter().enumerate() {
        if !c.is_zero() {
            acc = &acc + &binomial_poly(d as i64 - i as i64, d).scale(c);
        }
    }
    acc
}

/// (1 - t)^{d+1} Σ_{k ≤ d} E(k) t^k truncated to degree d, with no validity checks.
pub fn series_numerator(e: &RatPoly, d: usize) -> RatPoly {
    let vals = RatPoly::new((0..=d).map(|k| e.eval(&int(k as i64))).collect());
    (&vals * &RatPoly::from_ints(&[1, -1]).pow(d + 1)).truncate(d)
}

pub fn hstar_from_ehrhart(e: &RatPoly, d: usize) -> Result<HStar, PolyError> {
    for k in 0..=d {
        let v = e.eval(&int(k as i64));
        if !v.is_integer() {
            return Err(PolyError::NonIntegerCount { k, value: rat_to_string(&v) });
        }
    }
    HStar::new(series_numerator(e, d), d)
}

/// (-1)^{deg E} E(x) = E(-1 - x).
pub fn is_symmetric_about_cl(e: &RatPoly) -> bool {
    let Some(deg) = e.degree() else { return true };
    let reflected = e.compose_affine(&int(-1), &int(-1));
    if deg % 2 == 0 {
        reflected == *e
    } else {
        reflected == -e
    }
}

/// γ with p = Σ γ_i (1+t)^{d-2i} t^i, for any palindromic rational p.
pub fn gamma_from_poly(p: &RatPoly, d: usize) -> Result<RatPoly, PolyError> {
    if let Some(index) = palindrome_defect(p, d) {
        return Err(PolyError::NotPalindromic { dim: d, index });
    }
    let mut rest = p.clone();
    let mut gamma = Vec::new();
    for i in 0..=d / 2 {
        let g = rest.coeff(i);
        if !g.is_zero() {
            rest = &rest - &one_plus_t_pow(d - 2 * i).shift(i).scale(&g);
        }
        gamma.push(g);
    }
    debug_assert!(rest.is_zero());
    Ok(RatPoly::new(gamma))
}

pub fn gamma_vector(h: &HStar) -> Result<RatPoly, PolyError> {
    gamma_from_poly(h.poly(), h.dim())
}

/// Σ γ_i (1+t)^{d-2i} t^i
pub fn gamma_recombine(gamma: &RatPoly, d: usize) -> RatPoly {
    let mut acc = RatPoly::zero();
    for (i, g) in gamma.coeffs().iter().enumerate() {
        if !g.is_zero() {
            acc = &acc + &one_plus_t_pow(d - 2 * i).shift(i).scale(g);
        }
    }
    acc
}

/// C_n(x) = Σ_k binom(n,k) binom(n + x - k, n).
pub fn cross_polynomial(n: usize) -> RatPoly {
    let mut acc = RatPoly::zero();
    for k in 0..=n {
        acc = &acc + &binomial_poly(n as i64 - k as i64, n).scale(&big(&binom(n as i64, k as i64)));
    }
    acc
}

/// Σ (-1)^i c_i x^i with E = Σ (-1)^i c_i C_{d-2i}.
pub fn cross_coefficients(e: &RatPoly, d: usize) -> Result<RatPoly, PolyError> {
    let gamma = gamma_from_poly(&series_numerator(e, d), d)?;
    let g = gamma.coeffs();
    let mut out = Vec::with_capacity(g.len());
    for i in 0..g.len() {
        let mut c = Rat::zero();
        for (j, gj) in g.iter().enumerate().skip(i) {
            c += gj * big(&binom(j as i64, i as i64)) / big(&BigInt::from(4).pow(j as u32));
        }
        out.push(if i % 2 == 0 { c } else { -c });
    }
    Ok(RatPoly::new(out))
}

/// Σ_i coeff_i C_{d-2i}, the inverse of `cross_coefficients`.
pub fn cross_recombine(coeffs: &RatPoly, d: usize) -> RatPoly {
    let mut acc = RatPoly::zero();
    for (i, c) in coeffs.coeffs().iter().enumerate() {
        if !c.is_zero() {
            acc = &acc + &cross_polynomial(d - 2 * i).scale(c);
        }
    }
    acc
}

/// Degree of the cross-polynomial expansion (the γ-degree).
pub fn cross_degree(e: &RatPoly, d: usize) -> Result<usize, PolyError> {
    Ok(cross_coefficients(e, d)?.degree().unwrap_or(0))
}

/// Numerator N with Σ (2k+1) E(k) t^k = N / (1-t)^{d+2}.
pub fn mul_2x_plus_1_series(h: &HStar) -> RatPoly {
    mul_2x_plus_1_numerator(h.poly(), h.dim())
}

pub fn mul_2x_plus_1_numerator(h: &RatPoly, d: usize) -> RatPoly {
    let one_minus_t = RatPoly::from_ints(&[1, -1]);
    let t = RatPoly::x();
    let a = &one_minus_t * h;
    let b = (&(&t * &one_minus_t) * &h.derivative()).scale(&int(2));
    let c = (&t * h).scale(&int(2 * (d as i64 + 1)));
    &(&a + &b) + &c
}

/// Power-series coefficients of num / (1-t)^p for degrees 0..=order.
pub fn series_coefficients(num: &RatPoly, p: usize, order: usize) -> Vec<Rat> {
    (0..=order)
        .map(|k| {
            let mut s = Rat::zero();
            for (j, c) in num.coeffs().iter().enumerate().take(k + 1) {
                if p == 0 {
                    if j == k {
                        s += c;
                    }
                } else {
                    s += c * big(&binom((k - j + p - 1) as i64, (p - 1) as i64));
                }
            }
            s
        })
        .collect()
}

/// Series check of Σ_i (-1)^i binom(n,i) C_{d+2(n-i)} against (1+t)^d (4t)^n / (1-t)^{d+2n+1}.
/// Both sides are rational with numerator degree ≤ d+2n and the same denominator, so
/// agreement through degree d+2n+2 is equality.
pub fn gammalemma_check(d: usize, n: usize) -> bool {
    let order = d + 2 * n + 2;
    let mut lhs_poly = RatPoly::zero();
    for i in 0..=n {
        let c = big(&binom(n as i64, i as i64));
        let c = if i % 2 == 0 { c } else { -c };
        lhs_poly = &lhs_poly + &cross_polynomial(d + 2 * (n - i)).scale(&c);
    }
    let lhs: Vec<Rat> = (0..=order).map(|k| lhs_poly.eval(&int(k as i64))).collect();
    let num = one_plus_t_pow(d).shift(n).scale(&int(4i64.pow(n as u32)));
    lhs == series_coefficients(&num, d + 2 * n + 1, order)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn p(c: &[i64]) -> RatPoly {
        RatPoly::from_ints(c)
    }

    #[test]
    fn binom_edges() {
        assert_eq!(binom(5, 2), BigInt::from(10));
        assert_eq!(binom(-1, 0), BigInt::zero());
        assert_eq!(binom(3, 4), BigInt::zero());
        assert_eq!(binom(0, 0), BigInt::one());
    }

    #[test]
    fn ehrhart_examples() {
        assert_eq!(ehrhart_from_hstar(&HStar::from_ints(&[1], 0).unwrap()), p(&[1]));
        assert_eq!(ehrhart_from_hstar(&HStar::from_ints(&[1, 1], 1).unwrap()), p(&[1, 2]));
        assert_eq!(ehrhart_from_hstar(&HStar::from_ints(&[1, 4, 1], 2).unwrap()), p(&[1, 3, 3]));
    }

    #[test]
    fn hstar_examples() {
        assert_eq!(hstar_from_ehrhart(&p(&[1, 2]), 1).unwrap().poly(), &p(&[1, 1]));
        assert_eq!(hstar_from_ehrhart(&p(&[1]), 0).unwrap().poly(), &p(&[1]));
        assert_eq!(hstar_from_ehrhart(&p(&[1, 2, 2]), 2).unwrap().poly(), &p(&[1, 2, 1]));
    }

    #[test]
    fn hstar_errors() {
        let half = RatPoly::new(vec![int(1), rat(1, 2)]);
        assert!(matches!(hstar_from_ehrhart(&half, 1), Err(PolyError::NonIntegerCount { k: 1, .. })));
        assert!(matches!(hstar_from_ehrhart(&p(&[1, -3]), 1), Err(PolyError::NegativeHStar { .. })));
    }

    #[test]
    fn symmetry_examples() {
        assert!(is_symmetric_about_cl(&p(&[1, 2])));
        assert!(is_symmetric_about_cl(&p(&[1, 2, 2])));
        assert!(!is_symmetric_about_cl(&p(&[1, 1])));
    }

    #[test]
    fn gamma_examples() {
        let h = HStar::from_ints(&[1, 5, 5, 1], 3).unwrap();
        assert_eq!(gamma_vector(&h).unwrap(), p(&[1, 2]));
        let h = HStar::new(one_plus_t_pow(4), 4).unwrap();
        assert_eq!(gamma_vector(&h).unwrap(), p(&[1]));
        let h = HStar::from_ints(&[1, 12, 28, 12, 1], 4).unwrap();
        assert_eq!(gamma_vector(&h).unwrap(), p(&[1, 8, 6]));
        let h = HStar::from_ints(&[1, 2, 3], 2).unwrap();
        assert!(matches!(gamma_vector(&h), Err(PolyError::NotPalindromic { .. })));
    }

    #[test]
    fn cross_polynomial_examples() {
        assert_eq!(cross_polynomial(0), p(&[1]));
        assert_eq!(cross_polynomial(2), p(&[1, 2, 2]));
        assert_eq!(cross_polynomial(3), p(&[3, 8, 6, 4]).scale(&rat(1, 3)));
    }

    #[test]
    fn cross_recursion_to_twenty() {
        for n in 2..=20usize {
            let lhs = cross_polynomial(n);
            let rhs = &(&p(&[1, 2]) * &cross_polynomial(n - 1)).scale(&rat(1, n as i64))
                + &cross_polynomial(n - 2).scale(&rat(n as i64 - 1, n as i64));
            assert_eq!(lhs, rhs, "n = {n}");
        }
    }

    #[test]
    fn cross_coefficient_examples() {
        let e22 = ehrhart_from_hstar(&HStar::from_ints(&[1, 5, 5, 1], 3).unwrap());
        let c = cross_coefficients(&e22, 3).unwrap();
        assert_eq!(c, RatPoly::new(vec![rat(3, 2), rat(-1, 2)]));
        assert_eq!(cross_recombine(&c, 3).eval(&int(1)), int(9));
        assert_eq!(cross_coefficients(&cross_polynomial(5), 5).unwrap(), p(&[1]));
        let e112 = ehrhart_from_hstar(&HStar::from_ints(&[1, 7, 7, 1], 3).unwrap());
        let c = cross_coefficients(&e112, 3).unwrap();
        assert_eq!(c, p(&[2, -1]));
        assert_eq!(cross_recombine(&c, 3), p(&[3, 10, 12, 8]).scale(&rat(1, 3)));
    }

    #[test]
    fn mul_2x_plus_1_examples() {
        let n0 = mul_2x_plus_1_series(&HStar::from_ints(&[1], 0).unwrap());
        assert_eq!(n0, p(&[1, 1]));
        let n1 = mul_2x_plus_1_series(&HStar::from_ints(&[1, 1], 1).unwrap());
        assert_eq!(n1, p(&[1, 6, 1]));
        // direct series of (2k+1)(2k^2+2k+1)
        let n2 = mul_2x_plus_1_series(&HStar::from_ints(&[1, 2, 1], 2).unwrap());
        let direct: Vec<Rat> = (0..6).map(|k| int((2 * k + 1) * (2 * k * k + 2 * k + 1))).collect();
        assert_eq!(series_coefficients(&n2, 4, 5), direct);
    }

    #[test]
    fn gammalemma_grid() {
        for d in 1..=6 {
            for n in 0..=3 {
                assert!(gammalemma_check(d, n), "d={d} n={n}");
            }
        }
    }

    #[test]
    fn squarefree_and_gcd() {
        let a = p(&[1, 2]);
        let sq = &a * &a;
        assert_eq!(sq.squarefree_part(), a.monic());
        assert_eq!(RatPoly::gcd(&sq, &p(&[-1, 0, 4])), a.monic());
    }

    #[test]
    fn rat_strings() {
        assert_eq!(rat_to_string(&rat(-6, 4)), "-3/2");
        assert_eq!(parse_rat("-3/2"), Some(rat(-3, 2)));
        assert_eq!(parse_rat("7"), Some(int(7)));
        assert_eq!(parse_rat("1/0"), None);
    }

    fn palindrome(half: Vec<u32>, d: usize) -> RatPoly {
        let mut c = vec![0i64; d + 1];
        c[0] = 1;
        c[d] = 1;
        for i in 1..=d / 2 {
            let v = half.get(i - 1).copied().unwrap_or(0) as i64;
            c[i] = v;
            c[d - i] = v;
        }
        RatPoly::from_ints(&c)
    }

    proptest! {
        #[test]
        fn hstar_round_trip(c in proptest::collection::vec(0u32..50, 0..9)) {
            let mut v = vec![1i64];
            v.extend(c.iter().map(|&x| x as i64));
            let d = v.len() - 1;
            let h = HStar::from_ints(&v, d).unwrap();
            let e = ehrhart_from_hstar(&h);
            prop_assert_eq!(e.eval(&int(0)), int(1));
            prop_assert_eq!(hstar_from_ehrhart(&e, d).unwrap(), h);
        }

        #[test]
        fn gamma_round_trip(half in proptest::collection::vec(0u32..40, 0..6), d in 0usize..=12) {
            let h = palindrome(half, d);
            let g = gamma_from_poly(&h, d).unwrap();
            prop_assert_eq!(gamma_recombine(&g, d), h);
        }

        #[test]
        fn cross_round_trip(half in proptest::collection::vec(0u32..40, 0..6), d in 0usize..=12) {
            let h = palindrome(half, d);
            let e = ehrhart_from_numerator(&h, d);
            let c = cross_coefficients(&e, d).unwrap();
            prop_assert_eq!(cross_recombine(&c, d), e);
        }

        #[test]
        fn div_rem_identity(a in proptest::collection::vec(-9i64..9, 0..7), b in proptest::collection::vec(-9i64..9, 1..5)) {
            let a = RatPoly::from_ints(&a);
            let b = RatPoly::from_ints(&b);
            prop_assume!(!b.is_zero());
            let (q, r) = a.div_rem(&b);
            prop_assert_eq!(&(&q * &b) + &r, a);
            prop_assert!(r.degree().map_or(true, |dr| dr < b.degree().unwrap()));
        }
    }
}
