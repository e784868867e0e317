//! Reduced Gröbner basis of the toric ideal of the symmetric edge polytope under
//! degrevlex, plus the checks around it: leading terms, reducedness, toric
//! membership, Buchberger's S-pair criterion and the K_{2,2,2} cubic obstruction.
//!
//! Variables: z (index 0, smallest), then for every edge {u<w} in edge order the
//! pair x_{u,w}, x_{w,u}. x_{a,b} is the directed edge a→b, i.e. the point e_b − e_a.

use std::cmp::Ordering;
use std::collections::{HashMap, HashSet};
use std::fmt;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::graphmodel::{edge_order, DirectedEdge, Signature};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GroebnerError {
    #[error("{edges} edges exceed the verification bound of {bound}")]
    SizeExceeded { edges: usize, bound: usize },
    #[error("need at least two classes")]
    TooFewClasses,
}

/// Default edge-count ceiling for S-pair verification.
pub const DEFAULT_EDGE_BOUND: usize = 9;

/// Variable layout for one signature and one edge order.
#[derive(Debug, Clone)]
pub struct VarMap {
    sig: Signature,
    /// directed edge of each variable; index 0 (z) has none
    dirs: Vec<Option<DirectedEdge>>,
    index: HashMap<(usize, usize), usize>,
}

impl VarMap {
    pub fn canonical(sig: &Signature) -> Self {
        let edges = edge_order(sig);
        let flips = vec![false; edges.len()];
        Self::with_order(sig, &edges, &flips)
    }

    /// Edges listed from smallest to largest; `flips[i]` puts x_{w,u} before x_{u,w}.
    pub fn with_order(sig: &Signature, edges: &[(usize, usize)], flips: &[bool]) -> Self {
        let mut dirs = vec![None];
        let mut index = HashMap::new();
        for (&(u, w), &f) in edges.iter().zip(flips) {
            let (p, q) = if f { (w, u) } else { (u, w) };
            for e in [DirectedEdge::new(p, q), DirectedEdge::new(q, p)] {
                index.insert((e.from, e.to), dirs.len());
                dirs.push(Some(e));
            }
        }
        VarMap { sig: sig.clone(), dirs, index }
    }

    pub fn signature(&self) -> &Signature {
        &self.sig
    }

    pub fn nvars(&self) -> usize {
        self.dirs.len()
    }

    pub fn var(&self, a: usize, b: usize) -> usize {
        self.index[&(a, b)]
    }

    pub fn directed(&self, var: usize) -> Option<DirectedEdge> {
        self.dirs[var]
    }

    pub fn name(&self, var: usize) -> String {
        match self.dirs[var] {
            None => "z".into(),
            Some(e) => format!("x[{},{}]", e.from, e.to),
        }
    }

    /// Rank of the undirected edge {a,b} in this order.
    pub fn edge_rank(&self, a: usize, b: usize) -> usize {
        (self.var(a, b) - 1) / 2
    }

    pub fn monomial(&self, edges: &[(usize, usize)], z: u16) -> Monomial {
        let mut m = Monomial::one(self.nvars());
        m.exps[0] = z;
        for &(a, b) in edges {
            m.exps[self.var(a, b)] += 1;
        }
        m
    }

    /// Image under the homogenized point map: (Σ points, degree).
    pub fn image(&self, m: &Monomial) -> (Vec<i64>, u32) {
        let mut v = vec![0i64; self.sig.total()];
        for (i, &k) in m.exps.iter().enumerate() {
            if let (Some(e), true) = (self.dirs[i], k > 0) {
                v[e.to - 1] += k as i64;
                v[e.from - 1] -= k as i64;
            }
        }
        (v, m.degree())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Monomial {
    exps: Vec<u16>,
}

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        Monomial { exps: vec![0; nvars] }
    }

    pub fn exps(&self) -> &[u16] {
        &self.exps
    }

    pub fn degree(&self) -> u32 {
        self.exps.iter().map(|&e| e as u32).sum()
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial { exps: self.exps.iter().zip(&other.exps).map(|(a, b)| *a.max(b)).collect() }
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial { exps: self.exps.iter().zip(&other.exps).map(|(a, b)| a + b).collect() }
    }

    /// self / other; caller guarantees divisibility.
    pub fn div(&self, other: &Monomial) -> Monomial {
        Monomial { exps: self.exps.iter().zip(&other.exps).map(|(a, b)| a - b).collect() }
    }

    pub fn is_squarefree(&self) -> bool {
        self.exps.iter().all(|&e| e <= 1)
    }

    pub fn coprime(&self, other: &Monomial) -> bool {
        self.exps.iter().zip(&other.exps).all(|(a, b)| *a == 0 || *b == 0)
    }

    /// Degrevlex: higher degree wins; on ties the smaller exponent in the
    /// smallest variable where they differ wins (variable 0 = z is smallest).
    pub fn cmp_degrevlex(&self, other: &Monomial) -> Ordering {
        match self.degree().cmp(&other.degree()) {
            Ordering::Equal => {}
            o => return o,
        }
        for (a, b) in self.exps.iter().zip(&other.exps) {
            if a != b {
                return b.cmp(a);
            }
        }
        Ordering::Equal
    }

    pub fn render(&self, vars: &VarMap) -> String {
        let mut parts = Vec::new();
        for (i, &e) in self.exps.iter().enumerate() {
            match e {
                0 => {}
                1 => parts.push(vars.name(i)),
                _ => parts.push(format!("{}^{}", vars.name(i), e)),
            }
        }
        if parts.is_empty() {
            "1".into()
        } else {
            parts.join("*")
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Kind {
    K1,
    K2,
    K3a,
    K3b,
    K4,
    K5,
}

impl fmt::Display for Kind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Kind::K1 => "1",
            Kind::K2 => "2",
            Kind::K3a => "3a",
            Kind::K3b => "3b",
            Kind::K4 => "4",
            Kind::K5 => "5",
        })
    }
}

/// The binomial lead − tail.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GBElement {
    pub lead: Monomial,
    pub tail: Monomial,
    pub kind: Kind,
}

#[derive(Debug, Clone)]
pub struct Basis {
    pub vars: VarMap,
    pub elements: Vec<GBElement>,
}

impl Basis {
    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn max_degree(&self) -> u32 {
        self.elements.iter().map(|e| e.lead.degree().max(e.tail.degree())).max().unwrap_or(0)
    }

    pub fn count_kind(&self, k: Kind) -> usize {
        self.elements.iter().filter(|e| e.kind == k).count()
    }

    /// One element per line: "lead - tail".
    pub fn to_text(&self) -> String {
        let mut s = String::new();
        for e in &self.elements {
            s.push_str(&format!("{} - {}\n", e.lead.render(&self.vars), e.tail.render(&self.vars)));
        }
        s
    }
}

fn cycles(sig: &Signature, len: usize) -> Vec<Vec<usize>> {
    // closed walks without repeated vertices, starting at their smallest vertex, both directions
    fn extend(sig: &Signature, len: usize, path: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        let last = *path.last().unwrap();
        if path.len() == len {
            if sig.adjacent(last, path[0]) {
                out.push(path.clone());
            }
            return;
        }
        for v in path[0] + 1..=sig.total() {
            if sig.adjacent(last, v) && !path.contains(&v) {
                path.push(v);
                extend(sig, len, path, out);
                path.pop();
            }
        }
    }
    let mut out = Vec::new();
    for s in 1..=sig.total() {
        extend(sig, len, &mut vec![s], &mut out);
    }
    out
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            rec(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    rec(0, n, k, &mut cur, &mut out);
    out
}

/// Every cycle binomial of length 2..=6, oriented by degrevlex: for a cycle with
/// directed edges d_i and reversals r_i, ∏_{i∈I} d_i − z^{L mod 2} ∏_{i∉I} r_i with |I| = ⌈L/2⌉.
pub fn cycle_binomials(vars: &VarMap) -> Vec<GBElement> {
    let sig = vars.signature();
    let mut out = Vec::new();
    let mut seen = HashSet::new();
    for (u, w) in edge_order(sig) {
        let lead = vars.monomial(&[(u, w), (w, u)], 0);
        let tail = vars.monomial(&[], 2);
        out.push(GBElement { lead, tail, kind: Kind::K1 });
    }
    for len in 3..=6 {
        for cyc in cycles(sig, len) {
            let d: Vec<(usize, usize)> = (0..len).map(|i| (cyc[i], cyc[(i + 1) % len])).collect();
            for sub in subsets(len, len.div_ceil(2)) {
                let fwd: Vec<_> = sub.iter().map(|&i| d[i]).collect();
                let back: Vec<_> = (0..len).filter(|i| !sub.contains(i)).map(|i| (d[i].1, d[i].0)).collect();
                let a = vars.monomial(&fwd, 0);
                let b = vars.monomial(&back, (len % 2) as u16);
                let (lead, tail) = if a.cmp_degrevlex(&b) == Ordering::Greater { (a, b) } else { (b, a) };
                if !seen.insert((lead.clone(), tail.clone())) {
                    continue;
                }
                let kind = match len {
                    3 => Kind::K2,
                    4 => {
                        let e: Vec<DirectedEdge> = (0..lead.exps.len())
                            .filter(|&i| lead.exps[i] > 0)
                            .filter_map(|i| vars.directed(i))
                            .collect();
                        if e[0].to == e[1].from || e[1].to == e[0].from {
                            Kind::K3a
                        } else {
                            Kind::K3b
                        }
                    }
                    5 => Kind::K4,
                    _ => Kind::K5,
                };
                out.push(GBElement { lead, tail, kind });
            }
        }
    }
    out
}

/// Keep the minimal leads; for each, take the degrevlex-smallest tail that no lead divides.
pub fn interreduce(vars: VarMap, cands: Vec<GBElement>) -> Basis {
    let mut by_lead: HashMap<Monomial, Vec<(Kind, Monomial)>> = HashMap::new();
    for c in cands {
        by_lead.entry(c.lead).or_default().push((c.kind, c.tail));
    }
    let leads: Vec<Monomial> = by_lead.keys().cloned().collect();
    let minimal: Vec<Monomial> = leads
        .iter()
        .filter(|l| !leads.iter().any(|o| o != *l && o.divides(l)))
        .cloned()
        .collect();
    let mut elements = Vec::with_capacity(minimal.len());
    for l in &minimal {
        let best = by_lead[l]
            .iter()
            .filter(|(_, t)| !minimal.iter().any(|m| m.divides(t)))
            .min_by(|a, b| a.1.cmp_degrevlex(&b.1))
            .expect("every minimal lead has a standard tail");
        elements.push(GBElement { lead: l.clone(), tail: best.1.clone(), kind: best.0 });
    }
    elements.sort_by(|a, b| a.lead.cmp_degrevlex(&b.lead).then_with(|| a.kind.cmp(&b.kind)));
    Basis { vars, elements }
}

/// Reduced Gröbner basis for the canonical order.
pub fn build_basis(sig: &Signature) -> Result<Basis, GroebnerError> {
    if sig.k() < 2 {
        return Err(GroebnerError::TooFewClasses);
    }
    let vars = VarMap::canonical(sig);
    let cands = cycle_binomials(&vars);
    Ok(interreduce(vars, cands))
}

/// How to read "b is the smallest vertex in A_1 or A_2".
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Kind4Reading {
    /// smallest vertex of A_1 ∪ A_2
    Union,
    /// smallest vertex of whichever of A_1, A_2 contains b
    PerClass,
}

/// The element list exactly as stated in the literature (kinds 1–5 with their side
/// conditions, lead = first-listed monomial), for comparison against `build_basis`.
pub fn stated_basis(sig: &Signature, reading: Kind4Reading) -> Basis {
    let vars = VarMap::canonical(sig);
    let n = sig.total();
    let c = |v: usize| sig.class_of(v);
    let adj = |a: usize, b: usize| sig.adjacent(a, b);
    let mut out: Vec<GBElement> = Vec::new();
    let mut push = |lead: Monomial, tail: Monomial, kind: Kind| out.push(GBElement { lead, tail, kind });
    let perms = |k: usize| -> Vec<Vec<usize>> {
        let mut res = Vec::new();
        let mut cur = Vec::new();
        fn rec(n: usize, k: usize, cur: &mut Vec<usize>, res: &mut Vec<Vec<usize>>) {
            if cur.len() == k {
                res.push(cur.clone());
                return;
            }
            for v in 1..=n {
                if !cur.contains(&v) {
                    cur.push(v);
                    rec(n, k, cur, res);
                    cur.pop();
                }
            }
        }
        rec(n, k, &mut cur, &mut res);
        res
    };
    for p in perms(2) {
        let (a, b) = (p[0], p[1]);
        if a < b && adj(a, b) {
            push(vars.monomial(&[(a, b), (b, a)], 0), vars.monomial(&[], 2), Kind::K1);
        }
    }
    for p in perms(3) {
        let (a, b, cc) = (p[0], p[1], p[2]);
        if c(a) != c(b) && c(b) != c(cc) && c(a) != c(cc) {
            push(vars.monomial(&[(a, b), (b, cc)], 0), vars.monomial(&[(a, cc)], 1), Kind::K2);
        }
    }
    for p in perms(4) {
        let (a, b, cc, d) = (p[0], p[1], p[2], p[3]);
        if !(adj(a, b) && adj(b, cc) && adj(cc, d) && adj(d, a)) || a != *p.iter().min().unwrap() {
            continue;
        }
        if c(b) == c(d) {
            push(vars.monomial(&[(b, cc), (cc, d)], 0), vars.monomial(&[(b, a), (a, d)], 0), Kind::K3a);
        }
        if b < d {
            push(vars.monomial(&[(b, cc), (d, a)], 0), vars.monomial(&[(b, a), (d, cc)], 0), Kind::K3b);
        }
    }
    let in12 = |v: usize| c(v) <= 1;
    let min_class = |v: usize| *sig.class_vertices(c(v)).start();
    for p in perms(5) {
        let (a, b, cc, d, e) = (p[0], p[1], p[2], p[3], p[4]);
        if !(adj(a, b) && adj(b, cc) && adj(cc, d) && adj(d, e) && adj(e, a)) {
            continue;
        }
        if !(in12(a) && in12(b) && in12(cc)) || c(a) != c(cc) {
            continue;
        }
        let ok = match reading {
            Kind4Reading::Union => b == 1,
            Kind4Reading::PerClass => b == min_class(b),
        };
        if ok {
            push(
                vars.monomial(&[(a, b), (b, cc), (d, e)], 0),
                vars.monomial(&[(d, cc), (a, e)], 1),
                Kind::K4,
            );
        }
    }
    for p in perms(6) {
        let (a, b, cc, d, e, f) = (p[0], p[1], p[2], p[3], p[4], p[5]);
        if ![(a, b), (b, cc), (cc, d), (d, e), (e, f), (f, a)].iter().all(|&(x, y)| adj(x, y)) {
            continue;
        }
        let c1 = c(cc) == c(f);
        let c2 = b > d || c(b) == c(e) || cc < e;
        let c3 = c(a) == c(d) || f < d;
        if c1 && c2 && c3 {
            push(
                vars.monomial(&[(b, cc), (d, e), (f, a)], 0),
                vars.monomial(&[(b, a), (d, cc), (f, e)], 0),
                Kind::K5,
            );
        }
    }
    let mut seen = HashSet::new();
    out.retain(|e| seen.insert((e.lead.clone(), e.tail.clone())));
    Basis { vars, elements: out }
}

/// Differences between the stated list and the reduced basis.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct StatedComparison {
    pub reading: Kind4Reading,
    pub stated_elements: usize,
    pub reduced_elements: usize,
    pub missing_leads: usize,
    pub extra_leads: usize,
    pub wrong_tails: usize,
    pub duplicate_leads: usize,
    pub misoriented: usize,
}

impl StatedComparison {
    pub fn agrees(&self) -> bool {
        self.missing_leads == 0
            && self.extra_leads == 0
            && self.wrong_tails == 0
            && self.duplicate_leads == 0
            && self.misoriented == 0
    }
}

pub fn compare_with_stated(sig: &Signature, reading: Kind4Reading) -> Result<StatedComparison, GroebnerError> {
    let reduced = build_basis(sig)?;
    let stated = stated_basis(sig, reading);
    let truth: HashMap<&Monomial, &Monomial> = reduced.elements.iter().map(|e| (&e.lead, &e.tail)).collect();
    let mut by_lead: HashMap<&Monomial, Vec<&Monomial>> = HashMap::new();
    for e in &stated.elements {
        by_lead.entry(&e.lead).or_default().push(&e.tail);
    }
    Ok(StatedComparison {
        reading,
        stated_elements: stated.len(),
        reduced_elements: reduced.len(),
        missing_leads: truth.keys().filter(|l| !by_lead.contains_key(*l)).count(),
        extra_leads: by_lead.keys().filter(|l| !truth.contains_key(*l)).count(),
        wrong_tails: by_lead
            .iter()
            .filter(|(l, ts)| truth.get(*l).is_some_and(|t| ts.iter().any(|x| x != t)))
            .count(),
        duplicate_leads: by_lead.values().filter(|ts| ts.len() > 1).count(),
        misoriented: stated.elements.iter().filter(|e| e.lead.cmp_degrevlex(&e.tail) != Ordering::Greater).count(),
    })
}

/// Kind-4 elements of each reading against the 5-cycle elements of the reduced basis.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Kind4Report {
    pub signature: String,
    pub union_matches: bool,
    pub per_class_matches: bool,
    pub selected: Option<Kind4Reading>,
}

pub fn kind4_reading_report(sig: &Signature) -> Result<Kind4Report, GroebnerError> {
    let reduced = build_basis(sig)?;
    let truth: HashSet<(Monomial, Monomial)> = reduced
        .elements
        .iter()
        .filter(|e| e.kind == Kind::K4)
        .map(|e| (e.lead.clone(), e.tail.clone()))
        .collect();
    let matches = |r: Kind4Reading| {
        let s: HashSet<(Monomial, Monomial)> = stated_basis(sig, r)
            .elements
            .into_iter()
            .filter(|e| e.kind == Kind::K4)
            .map(|e| (e.lead, e.tail))
            .collect();
        s == truth
    };
    let (u, p) = (matches(Kind4Reading::Union), matches(Kind4Reading::PerClass));
    let selected = match (u, p) {
        (_, true) => Some(Kind4Reading::PerClass),
        (true, false) => Some(Kind4Reading::Union),
        _ => None,
    };
    Ok(Kind4Report { signature: sig.to_string(), union_matches: u, per_class_matches: p, selected })
}

/// No element's lead divides another element's lead.
pub fn reducedness_check(basis: &Basis) -> bool {
    let el = &basis.elements;
    (0..el.len()).all(|i| (0..el.len()).all(|j| i == j || !el[i].lead.divides(&el[j].lead)))
}

/// No lead divides any tail.
pub fn tails_standard(basis: &Basis) -> bool {
    basis.elements.iter().all(|e| !basis.elements.iter().any(|o| o.lead.divides(&e.tail)))
}

/// Lead and tail have the same image under the homogenized point map.
pub fn toric_membership_check(vars: &VarMap, element: &GBElement) -> bool {
    vars.image(&element.lead) == vars.image(&element.tail)
}

/// Degrevlex really picks the stated lead of every element.
pub fn leading_term_consistency(basis: &Basis) -> bool {
    basis.elements.iter().all(|e| e.lead.cmp_degrevlex(&e.tail) == Ordering::Greater)
}

fn check_edges(sig: &Signature, bound: usize) -> Result<(), GroebnerError> {
    if sig.num_edges() > bound {
        return Err(GroebnerError::SizeExceeded { edges: sig.num_edges(), bound });
    }
    Ok(())
}

/// Bounded wrapper used by the CLI and the acceptance gate.
pub fn leading_term_consistency_for(sig: &Signature, bound: usize) -> Result<bool, GroebnerError> {
    check_edges(sig, bound)?;
    Ok(leading_term_consistency(&build_basis(sig)?))
}

/// Reduce the binomial a − b to normal form; true iff it vanishes.
/// The reducer is always the first element, in basis order, whose lead divides.
fn reduces_to_zero(basis: &Basis, a: Monomial, b: Monomial) -> bool {
    let (mut hi, mut lo) = (a, b);
    loop {
        match hi.cmp_degrevlex(&lo) {
            Ordering::Equal => return true,
            Ordering::Less => std::mem::swap(&mut hi, &mut lo),
            Ordering::Greater => {}
        }
        let Some(r) = basis.elements.iter().find(|e| e.lead.divides(&hi)) else {
            return false;
        };
        hi = hi.div(&r.lead).mul(&r.tail);
    }
}

/// Every S-polynomial of a basis pair reduces to zero.
pub fn buchberger_check(basis: &Basis) -> bool {
    let n = basis.len();
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect();
    pairs.par_iter().all(|&(i, j)| {
        let (f, g) = (&basis.elements[i], &basis.elements[j]);
        let l = f.lead.lcm(&g.lead);
        // S(f,g) = (l/lt g)·tail(g) − (l/lt f)·tail(f)
        let a = l.div(&f.lead).mul(&f.tail);
        let b = l.div(&g.lead).mul(&g.tail);
        reduces_to_zero(basis, a, b)
    })
}

pub fn buchberger_verify(sig: &Signature, bound: usize) -> Result<bool, GroebnerError> {
    check_edges(sig, bound)?;
    Ok(buchberger_check(&build_basis(sig)?))
}

/// A 6-cycle binomial x_{b,c}x_{d,e}x_{f,a} − x_{b,a}x_{d,c}x_{f,e} through the smallest edge
/// {a,b} whose lead no degree-2 leading monomial divides.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Obstruction {
    pub cycle: Vec<usize>,
    pub binomial: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OrderResult {
    pub index: usize,
    pub edges: Vec<String>,
    pub obstruction: Option<Obstruction>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct K222Report {
    pub seed: u64,
    pub canonical: OrderResult,
    pub orders: Vec<OrderResult>,
    pub all_found: bool,
}

/// All degree-2 monomials that are not the degrevlex minimum of their fiber.
pub fn degree2_leads(vars: &VarMap) -> Vec<Monomial> {
    let nv = vars.nvars();
    let mut fibers: HashMap<(Vec<i64>, u32), Vec<Monomial>> = HashMap::new();
    for i in 0..nv {
        for j in i..nv {
            let mut m = Monomial::one(nv);
            m.exps[i] += 1;
            m.exps[j] += 1;
            fibers.entry(vars.image(&m)).or_default().push(m);
        }
    }
    let mut out = Vec::new();
    for ms in fibers.into_values() {
        let min = ms.iter().min_by(|a, b| a.cmp_degrevlex(b)).unwrap().clone();
        out.extend(ms.into_iter().filter(|m| *m != min));
    }
    out
}

pub fn k222_obstruction(vars: &VarMap) -> Option<Obstruction> {
    let sig = vars.signature();
    let leads2 = degree2_leads(vars);
    let smallest = (1..vars.nvars()).step_by(2).map(|v| vars.directed(v).unwrap()).next()?;
    for cyc in cycles(sig, 6) {
        // rotate so that {a,b} is the smallest edge, in either orientation
        for start in 0..6 {
            let p: Vec<usize> = (0..6).map(|i| cyc[(start + i) % 6]).collect();
            let (a, b, c, d, e, f) = (p[0], p[1], p[2], p[3], p[4], p[5]);
            if DirectedEdge::new(a, b).key() != smallest.key() {
                continue;
            }
            let m1 = vars.monomial(&[(b, c), (d, e), (f, a)], 0);
            let m2 = vars.monomial(&[(b, a), (d, c), (f, e)], 0);
            let (lead, tail) = if m1.cmp_degrevlex(&m2) == Ordering::Greater { (m1, m2) } else { (m2, m1) };
            if !leads2.iter().any(|l| l.divides(&lead)) {
                return Some(Obstruction {
                    cycle: p.clone(),
                    binomial: format!("{} - {}", lead.render(vars), tail.render(vars)),
                });
            }
        }
    }
    None
}

fn order_result(index: usize, vars: &VarMap) -> OrderResult {
    let edges = (1..vars.nvars())
        .step_by(2)
        .map(|v| {
            let e = vars.directed(v).unwrap();
            format!("{}-{}", e.from, e.to)
        })
        .collect();
    OrderResult { index, edges, obstruction: k222_obstruction(vars) }
}

/// Canonical order plus `num_orders` seeded random edge orders of K_{2,2,2}.
pub fn k222_order_scan(num_orders: usize, seed: u64) -> K222Report {
    let sig = Signature::of(&[2, 2, 2]);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let base = edge_order(&sig);
    let mut vms = Vec::with_capacity(num_orders);
    for _ in 0..num_orders {
        let mut edges = base.clone();
        edges.shuffle(&mut rng);
        let flips: Vec<bool> = (0..edges.len()).map(|_| rng.gen()).collect();
        vms.push(VarMap::with_order(&sig, &edges, &flips));
    }
    let orders: Vec<OrderResult> = vms.par_iter().enumerate().map(|(i, v)| order_result(i, v)).collect();
    let canonical = order_result(0, &VarMap::canonical(&sig));
    let all_found = canonical.obstruction.is_some() && orders.iter().all(|o| o.obstruction.is_some());
    K222Report { seed, canonical, orders, all_found }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::signatures::compositions;

    fn sig(p: &[usize]) -> Signature {
        Signature::of(p)
    }

    /// Independent reduced basis up to degree `maxdeg`: a monomial is standard iff it is
    /// the degrevlex minimum of its fiber; minimal non-standard monomials are the leads,
    /// and each tail is its fiber's minimum.
    fn fiber_basis(vars: &VarMap, maxdeg: usize) -> HashMap<Monomial, Monomial> {
        let nv = vars.nvars();
        let mut leads: HashMap<Monomial, Monomial> = HashMap::new();
        for d in 1..=maxdeg {
            let mut fibers: HashMap<(Vec<i64>, u32), Vec<Monomial>> = HashMap::new();
            let mut idx = vec![0usize; d];
            loop {
                let mut m = Monomial::one(nv);
                for &i in &idx {
                    m.exps[i] += 1;
                }
                fibers.entry(vars.image(&m)).or_default().push(m);
                // next non-decreasing index tuple
                let mut p = d;
                while p > 0 && idx[p - 1] == nv - 1 {
                    p -= 1;
                }
                if p == 0 {
                    break;
                }
                idx[p - 1] += 1;
                for q in p..d {
                    idx[q] = idx[p - 1];
                }
            }
            let mut fresh = Vec::new();
            for ms in fibers.values() {
                let min = ms.iter().min_by(|a, b| a.cmp_degrevlex(b)).unwrap();
                for m in ms {
                    if m != min && !leads.keys().any(|l| l.divides(m)) {
                        fresh.push((m.clone(), min.clone()));
                    }
                }
            }
            leads.extend(fresh);
        }
        leads
    }

    #[test]
    fn single_edge() {
        let b = build_basis(&sig(&[1, 1])).unwrap();
        assert_eq!(b.to_text(), "x[1,2]*x[2,1] - z^2\n");
        assert!(reducedness_check(&b));
        assert!(leading_term_consistency(&b));
    }

    #[test]
    fn triangle() {
        let b = build_basis(&sig(&[1, 1, 1])).unwrap();
        assert_eq!(b.count_kind(Kind::K1), 3);
        assert_eq!(b.count_kind(Kind::K2), 6);
        assert_eq!(b.len(), 9);
    }

    #[test]
    fn matches_fiber_oracle() {
        for p in [
            &[1, 1][..],
            &[1, 2],
            &[2, 2],
            &[1, 1, 1],
            &[1, 1, 2],
            &[1, 2, 2],
            &[2, 2, 1],
            &[2, 1, 2],
            &[1, 1, 1, 1],
            &[2, 2, 2],
            &[2, 3],
            &[3, 3],
            &[1, 1, 3],
            &[1, 3, 1],
            &[2, 1, 1, 1],
            &[1, 1, 1, 1, 1],
        ] {
            let s = sig(p);
            let b = build_basis(&s).unwrap();
            let ours: HashMap<Monomial, Monomial> =
                b.elements.iter().map(|e| (e.lead.clone(), e.tail.clone())).collect();
            assert_eq!(ours, fiber_basis(&b.vars, 3), "{s}");
        }
    }

    #[test]
    fn k222_totals() {
        let b = build_basis(&sig(&[2, 2, 2])).unwrap();
        assert_eq!(b.len(), 132);
        assert_eq!(b.count_kind(Kind::K5), 8);
        assert!(reducedness_check(&b));
        assert!(b.elements.iter().all(|e| toric_membership_check(&b.vars, e)));
    }

    #[test]
    fn invariants_up_to_seven() {
        for s in compositions(2, 7) {
            let b = build_basis(&s).unwrap();
            assert!(reducedness_check(&b), "{s}");
            assert!(tails_standard(&b), "{s}");
            assert!(leading_term_consistency(&b), "{s}");
            assert!(b.max_degree() <= 3, "{s}");
            assert!(b.elements.iter().all(|e| toric_membership_check(&b.vars, e)), "{s}");
        }
    }

    #[test]
    fn buchberger_small() {
        for p in [&[1, 1][..], &[1, 2], &[2, 2], &[1, 1, 1], &[1, 1, 2], &[1, 2, 2], &[1, 1, 1, 1]] {
            assert!(buchberger_verify(&sig(p), DEFAULT_EDGE_BOUND).unwrap(), "{p:?}");
        }
        assert_eq!(
            buchberger_verify(&sig(&[2, 2, 2]), DEFAULT_EDGE_BOUND),
            Err(GroebnerError::SizeExceeded { edges: 12, bound: 9 })
        );
    }

    #[test]
    fn buchberger_detects_missing_element() {
        let mut b = build_basis(&sig(&[1, 1, 2])).unwrap();
        let i = b.elements.iter().position(|e| e.kind == Kind::K3b || e.kind == Kind::K3a).unwrap();
        b.elements.remove(i);
        assert!(!buchberger_check(&b));
    }

    #[test]
    fn stated_list_is_not_reduced_basis() {
        let c = compare_with_stated(&sig(&[1, 2, 2]), Kind4Reading::PerClass).unwrap();
        assert!(!c.agrees());
        assert!(c.missing_leads > 0);
        let c = compare_with_stated(&sig(&[1, 1]), Kind4Reading::PerClass).unwrap();
        assert!(c.agrees());
    }

    #[test]
    fn kind4_per_class_reading() {
        for p in [&[1, 1, 1][..], &[2, 2, 1], &[2, 2, 2], &[1, 2, 2], &[2, 1, 2], &[1, 1, 1, 1]] {
            let r = kind4_reading_report(&sig(p)).unwrap();
            assert!(r.per_class_matches, "{p:?}");
            assert_eq!(r.selected, Some(Kind4Reading::PerClass));
        }
        assert!(!kind4_reading_report(&sig(&[2, 2, 2])).unwrap().union_matches);
    }

    #[test]
    fn degrevlex_basics() {
        let v = VarMap::canonical(&sig(&[1, 1]));
        let zz = v.monomial(&[], 2);
        let xy = v.monomial(&[(1, 2), (2, 1)], 0);
        assert_eq!(xy.cmp_degrevlex(&zz), Ordering::Greater);
        let x1 = v.monomial(&[(1, 2)], 1);
        assert_eq!(x1.cmp_degrevlex(&zz), Ordering::Greater);
        assert_eq!(v.monomial(&[(1, 2), (1, 2)], 1).cmp_degrevlex(&xy), Ordering::Greater);
    }

    #[test]
    fn k222_scan() {
        let r = k222_order_scan(100, 7);
        assert!(r.canonical.obstruction.is_some());
        assert!(r.all_found);
        assert_eq!(k222_order_scan(1, 0), k222_order_scan(1, 0));
    }
}
