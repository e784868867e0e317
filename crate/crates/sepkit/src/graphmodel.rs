//! Complete multipartite graphs: signatures, vertex/edge order, directed edges
//! and facet-defining labelings of the symmetric edge polytope.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("invalid signature {0:?}: expected comma-separated positive integers")]
    BadSignature(String),
    #[error("labeling does not match any facet type")]
    Unclassifiable,
    #[error("facet types are only defined for at least three classes")]
    TooFewClasses,
}

/// Class sizes (a_1,…,a_k). Vertices are 1..=total, numbered class by class.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Signature {
    parts: Vec<usize>,
}

impl Signature {
    pub fn new(parts: Vec<usize>) -> Result<Self, GraphError> {
        if parts.is_empty() || parts.contains(&0) {
            return Err(GraphError::BadSignature(format!("{parts:?}")));
        }
        Ok(Signature { parts })
    }

    /// Panics on an empty list or a zero part; meant for literals.
    pub fn of(parts: &[usize]) -> Self {
        Self::new(parts.to_vec()).expect("valid signature")
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn k(&self) -> usize {
        self.parts.len()
    }

    pub fn total(&self) -> usize {
        self.parts.iter().sum()
    }

    /// Polytope dimension Σa_i − 1.
    pub fn dim(&self) -> usize {
        self.total() - 1
    }

    /// Class index (0-based) of vertex v (1-based).
    pub fn class_of(&self, v: usize) -> usize {
        let mut acc = 0;
        for (i, &a) in self.parts.iter().enumerate() {
            acc += a;
            if v <= acc {
                return i;
            }
        }
        panic!("vertex {v} out of range");
    }

    /// Vertex ids of class i, ascending.
    pub fn class_vertices(&self, i: usize) -> std::ops::RangeInclusive<usize> {
        let start: usize = self.parts[..i].iter().sum::<usize>() + 1;
        start..=start + self.parts[i] - 1
    }

    pub fn adjacent(&self, u: usize, w: usize) -> bool {
        u != w && self.class_of(u) != self.class_of(w)
    }

    pub fn num_edges(&self) -> usize {
        let t = self.total();
        (t * t - self.parts.iter().map(|a| a * a).sum::<usize>()) / 2
    }

    /// Sorted copy of the parts.
    pub fn sorted(&self) -> Signature {
        let mut p = self.parts.clone();
        p.sort_unstable();
        Signature { parts: p }
    }
}

impl FromStr for Signature {
    type Err = GraphError;
    fn from_str(s: &str) -> Result<Self, GraphError> {
        let parts: Result<Vec<usize>, _> = s.split(',').map(|t| t.trim().parse::<usize>()).collect();
        match parts {
            Ok(p) => Signature::new(p).map_err(|_| GraphError::BadSignature(s.to_string())),
            Err(_) => Err(GraphError::BadSignature(s.to_string())),
        }
    }
}

impl fmt::Display for Signature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.parts.iter().map(|a| a.to_string()).collect();
        f.write_str(&s.join(","))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct DirectedEdge {
    pub from: usize,
    pub to: usize,
}

impl DirectedEdge {
    pub fn new(from: usize, to: usize) -> Self {
        DirectedEdge { from, to }
    }

    pub fn reversed(self) -> Self {
        DirectedEdge { from: self.to, to: self.from }
    }

    /// Undirected key (smaller, larger).
    pub fn key(self) -> (usize, usize) {
        (self.from.min(self.to), self.from.max(self.to))
    }
}

impl fmt::Display for DirectedEdge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}>{}", self.from, self.to)
    }
}

/// All inter-class pairs, lexicographic by (smaller endpoint, larger endpoint).
pub fn edge_order(sig: &Signature) -> Vec<(usize, usize)> {
    let n = sig.total();
    let mut out = Vec::with_capacity(sig.num_edges());
    for u in 1..=n {
        for w in u + 1..=n {
            if sig.adjacent(u, w) {
                out.push((u, w));
            }
        }
    }
    out
}

/// The lattice points ±(e_v − e_w) over all edges, in edge order.
pub fn vertex_set(sig: &Signature) -> Vec<Vec<i64>> {
    let n = sig.total();
    let mut out = Vec::new();
    for (u, w) in edge_order(sig) {
        for (p, q) in [(u, w), (w, u)] {
            let mut v = vec![0i64; n];
            v[p - 1] = 1;
            v[q - 1] = -1;
            out.push(v);
        }
    }
    out
}

/// Integer labeling λ (index v−1) normalized to minimum 0.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct FacetLabeling {
    pub values: Vec<i64>,
}

impl FacetLabeling {
    pub fn value(&self, v: usize) -> i64 {
        self.values[v - 1]
    }

    /// The directed edge a→b is the point e_b − e_a, so it is tight iff λ(b) − λ(a) = 1.
    pub fn is_tight(&self, e: DirectedEdge) -> bool {
        self.value(e.to) - self.value(e.from) == 1
    }

    /// ⟨λ, x⟩
    pub fn pair(&self, x: &[i64]) -> i64 {
        self.values.iter().zip(x).map(|(a, b)| a * b).sum()
    }

    /// max − λ, the labeling of the antipodal facet.
    pub fn antipode(&self) -> FacetLabeling {
        let m = *self.values.iter().max().unwrap_or(&0);
        FacetLabeling { values: self.values.iter().map(|v| m - v).collect() }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum FacetType {
    TypeI,
    TypeIIa,
    TypeIIb,
}

fn tight_edges_connected(sig: &Signature, vals: &[i64]) -> bool {
    let n = sig.total();
    let mut parent: Vec<usize> = (0..=n).collect();
    fn find(p: &mut [usize], mut x: usize) -> usize {
        while p[x] != x {
            p[x] = p[p[x]];
            x = p[x];
        }
        x
    }
    let mut comps = n;
    for (u, w) in edge_order(sig) {
        if (vals[u - 1] - vals[w - 1]).abs() == 1 {
            let (a, b) = (find(&mut parent, u), find(&mut parent, w));
            if a != b {
                parent[a] = b;
                comps -= 1;
            }
        }
    }
    comps == 1
}

/// Every facet labeling with values in {0,1,2} and minimum 0.
///
/// Any two vertices are joined by a path of length ≤ 2, and labels move by at most
/// 1 along an edge, so the normalized range never exceeds 2. Condition (ii) is
/// read as: the tight edges form a connected spanning subgraph.
pub fn enumerate_facet_labelings(sig: &Signature) -> Vec<FacetLabeling> {
    let n = sig.total();
    let edges = edge_order(sig);
    let mut out = Vec::new();
    let mut vals = vec![0i64; n];
    let total = 3usize.pow(n as u32);
    for code in 0..total {
        let mut c = code;
        for v in vals.iter_mut() {
            *v = (c % 3) as i64;
            c /= 3;
        }
        if *vals.iter().min().unwrap() != 0 {
            continue;
        }
        if edges.iter().any(|&(u, w)| (vals[u - 1] - vals[w - 1]).abs() > 1) {
            continue;
        }
        if tight_edges_connected(sig, &vals) {
            out.push(FacetLabeling { values: vals.clone() });
        }
    }
    out.sort();
    out
}

/// Facet type for k ≥ 3 classes, up to an additive constant.
pub fn classify_labeling(sig: &Signature, lam: &FacetLabeling) -> Result<FacetType, GraphError> {
    if sig.k() < 3 {
        return Err(GraphError::TooFewClasses);
    }
    let class_vals: Vec<Vec<i64>> = (0..sig.k())
        .map(|i| sig.class_vertices(i).map(|v| lam.value(v)).collect())
        .collect();
    // type (i): one class carries {m−1, m+1}, every other vertex sits at m
    for (i, vals) in class_vals.iter().enumerate() {
        let lo = *vals.iter().min().unwrap();
        let hi = *vals.iter().max().unwrap();
        if hi - lo != 2 || vals.iter().any(|&v| v != lo && v != hi) {
            continue;
        }
        let m = lo + 1;
        let rest_ok = class_vals
            .iter()
            .enumerate()
            .filter(|(j, _)| *j != i)
            .all(|(_, vs)| vs.iter().all(|&v| v == m));
        if rest_ok {
            return Ok(FacetType::TypeI);
        }
    }
    let lo = *lam.values.iter().min().unwrap();
    if lam.values.iter().any(|&v| v != lo && v != lo + 1) {
        return Err(GraphError::Unclassifiable);
    }
    let mixed = class_vals.iter().any(|vs| vs.iter().any(|&v| v != vs[0]));
    if mixed {
        Ok(FacetType::TypeIIb)
    } else {
        Ok(FacetType::TypeIIa)
    }
}

/// The published facet count 2^N − Σ(2a_i − 2) − 2, taken literally.
/// It agrees with the true count only while every class has at most two vertices.
pub fn facet_count_formula(sig: &Signature) -> i64 {
    let n = sig.total() as u32;
    2i64.pow(n) - sig.parts().iter().map(|&a| 2 * a as i64 - 2).sum::<i64>() - 2
}

/// Facet count 2^N − Σ(2^{a_i} − 2) − 2 for k ≥ 3: {0,1}-labelings minus the constant
/// ones and those isolating a proper part of one class, plus the {0,2} type (i) facets.
pub fn facet_count(sig: &Signature) -> i64 {
    let n = sig.total() as u32;
    2i64.pow(n) - sig.parts().iter().map(|&a| 2i64.pow(a as u32) - 2).sum::<i64>() - 2
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_display() {
        let s: Signature = "1, 2,3".parse().unwrap();
        assert_eq!(s.parts(), &[1, 2, 3]);
        assert_eq!(s.to_string(), "1,2,3");
        assert!("1,0".parse::<Signature>().is_err());
        assert!("".parse::<Signature>().is_err());
        assert!("a,b".parse::<Signature>().is_err());
    }

    #[test]
    fn edge_order_examples() {
        assert_eq!(edge_order(&Signature::of(&[1, 1])), vec![(1, 2)]);
        assert_eq!(edge_order(&Signature::of(&[1, 1, 1])), vec![(1, 2), (1, 3), (2, 3)]);
        assert_eq!(edge_order(&Signature::of(&[2, 1])), vec![(1, 3), (2, 3)]);
    }

    #[test]
    fn vertex_set_examples() {
        assert_eq!(vertex_set(&Signature::of(&[1, 1])), vec![vec![1, -1], vec![-1, 1]]);
        assert_eq!(vertex_set(&Signature::of(&[1, 1, 1])).len(), 6);
        assert_eq!(vertex_set(&Signature::of(&[2, 2])).len(), 8);
    }

    #[test]
    fn labeling_counts() {
        assert_eq!(enumerate_facet_labelings(&Signature::of(&[1, 1])).len(), 2);
        assert_eq!(enumerate_facet_labelings(&Signature::of(&[1, 1, 1])).len(), 6);
        assert_eq!(enumerate_facet_labelings(&Signature::of(&[1, 1, 2])).len(), 12);
        // K_{2,2}: a 3-dimensional polytope with 6 facets
        assert_eq!(enumerate_facet_labelings(&Signature::of(&[2, 2])).len(), 6);
    }

    #[test]
    fn facet_formula_and_classification_up_to_seven() {
        for sig in crate::signatures::compositions(3, 7).into_iter().filter(|s| s.k() >= 3) {
            let labs = enumerate_facet_labelings(&sig);
            assert_eq!(labs.len() as i64, facet_count(&sig), "{sig}");
            if sig.parts().iter().all(|&a| a <= 2) {
                assert_eq!(facet_count(&sig), facet_count_formula(&sig));
            }
            for l in &labs {
                classify_labeling(&sig, l).unwrap();
            }
        }
    }

    #[test]
    fn labelings_support_all_vertices() {
        for sig in [Signature::of(&[2, 2, 1]), Signature::of(&[1, 1, 1, 1]), Signature::of(&[2, 3])] {
            let pts = vertex_set(&sig);
            let labs = enumerate_facet_labelings(&sig);
            for l in &labs {
                let mut covered = vec![false; sig.total()];
                for x in &pts {
                    let v = l.pair(x);
                    assert!(v <= 1);
                    if v == 1 {
                        for (i, &c) in x.iter().enumerate() {
                            if c != 0 {
                                covered[i] = true;
                            }
                        }
                    }
                }
                assert!(covered.iter().all(|&c| c));
                assert!(labs.contains(&l.antipode()));
            }
        }
    }

    #[test]
    fn literal_formula_overcounts_large_classes() {
        let s = Signature::of(&[1, 1, 3]);
        assert_eq!(enumerate_facet_labelings(&s).len(), 24);
        assert_eq!(facet_count_formula(&s), 26);
    }

    #[test]
    fn classify_examples() {
        let s = Signature::of(&[1, 1, 1]);
        let l = FacetLabeling { values: vec![1, 1, 0] };
        assert_eq!(classify_labeling(&s, &l).unwrap(), FacetType::TypeIIa);
        let s = Signature::of(&[2, 2, 2]);
        let l = FacetLabeling { values: vec![0, 2, 1, 1, 1, 1] };
        assert_eq!(classify_labeling(&s, &l).unwrap(), FacetType::TypeI);
        let l = FacetLabeling { values: vec![0, 1, 0, 1, 1, 0] };
        assert_eq!(classify_labeling(&s, &l).unwrap(), FacetType::TypeIIb);
        assert_eq!(
            classify_labeling(&Signature::of(&[1, 1]), &FacetLabeling { values: vec![0, 1] }),
            Err(GraphError::TooFewClasses)
        );
    }
}
