//! Unimodular boundary triangulation: directed spanning trees whose monomial
//! avoids every leading term, the inedge statistic, facet-type split and planar
//! spanning trees.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::exactpoly::{HStar, PolyError, RatPoly};
use crate::graphmodel::{classify_labeling, edge_order, enumerate_facet_labelings, DirectedEdge, FacetType, GraphError, Signature};
use crate::groebner::{build_basis, GroebnerError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TriangulationError {
    #[error("signature total {total} exceeds the configured bound {bound}")]
    SizeExceeded { total: usize, bound: usize },
    #[error("tree {tree} lies in {facets} facets instead of exactly one")]
    AmbiguousFacet { tree: String, facets: usize },
    #[error(transparent)]
    Groebner(#[from] GroebnerError),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error("malformed tree token {0:?}")]
    BadToken(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TriangulationConfig {
    pub max_total: usize,
}

impl Default for TriangulationConfig {
    fn default() -> Self {
        TriangulationConfig { max_total: 7 }
    }
}

/// Directed spanning tree, edges listed in edge order of their underlying pairs.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct DirTree {
    pub edges: Vec<DirectedEdge>,
}

impl DirTree {
    pub fn reversed(&self) -> DirTree {
        DirTree { edges: self.edges.iter().map(|e| e.reversed()).collect() }
    }
}

impl fmt::Display for DirTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let toks: Vec<String> = self.edges.iter().map(|e| e.to_string()).collect();
        f.write_str(&toks.join(" "))
    }
}

impl FromStr for DirTree {
    type Err = TriangulationError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let mut edges = Vec::new();
        for tok in s.split_whitespace() {
            let bad = || TriangulationError::BadToken(tok.to_string());
            let (a, b) = tok.split_once('>').ok_or_else(bad)?;
            edges.push(DirectedEdge::new(a.parse().map_err(|_| bad())?, b.parse().map_err(|_| bad())?));
        }
        Ok(DirTree { edges })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct InedgeCount {
    pub tree: DirTree,
    pub inedges: usize,
}

fn check_bound(sig: &Signature, cfg: &TriangulationConfig) -> Result<(), TriangulationError> {
    if sig.total() > cfg.max_total {
        return Err(TriangulationError::SizeExceeded { total: sig.total(), bound: cfg.max_total });
    }
    Ok(())
}

/// Spanning trees as index lists into `edge_order`, lexicographic.
pub fn spanning_trees(sig: &Signature) -> Vec<Vec<usize>> {
    let edges = edge_order(sig);
    let n = sig.total();
    let mut out = Vec::new();
    fn find(p: &[usize], mut x: usize) -> usize {
        while p[x] != x {
            x = p[x];
        }
        x
    }
    fn rec(
        edges: &[(usize, usize)],
        start: usize,
        need: usize,
        parent: &mut Vec<usize>,
        cur: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
    ) {
        if need == 0 {
            out.push(cur.clone());
            return;
        }
        for i in start..edges.len() {
            if edges.len() - i < need {
                break;
            }
            let (u, w) = edges[i];
            let (a, b) = (find(parent, u), find(parent, w));
            if a == b {
                continue;
            }
            parent[a] = b;
            cur.push(i);
            rec(edges, i + 1, need - 1, parent, cur, out);
            cur.pop();
            parent[a] = a;
        }
    }
    let mut parent: Vec<usize> = (0..=n).collect();
    rec(&edges, 0, n - 1, &mut parent, &mut Vec::new(), &mut out);
    out
}

/// Directed spanning trees whose monomial no leading term divides, in deterministic order:
/// spanning trees lexicographically, then orientations lexicographically (u→w before w→u).
pub fn enumerate_standard_trees(sig: &Signature, cfg: &TriangulationConfig) -> Result<Vec<DirTree>, TriangulationError> {
    check_bound(sig, cfg)?;
    let basis = build_basis(sig)?;
    let edges = edge_order(sig);
    // square-free z-free leads as (undirected edge mask, orientation mask) over edge indices
    let leads: Vec<(u64, u64)> = basis
        .elements
        .iter()
        .filter(|e| e.lead.is_squarefree() && e.lead.exps()[0] == 0)
        .filter_map(|e| {
            let (mut em, mut om) = (0u64, 0u64);
            for (v, &k) in e.lead.exps().iter().enumerate() {
                if k == 0 {
                    continue;
                }
                let idx = (v - 1) / 2;
                if em & (1 << idx) != 0 {
                    return None; // both orientations of one edge never occur in a tree
                }
                em |= 1 << idx;
                if v % 2 == 0 {
                    om |= 1 << idx;
                }
            }
            Some((em, om))
        })
        .collect();
    let trees = spanning_trees(sig);
    let per_tree: Vec<Vec<DirTree>> = trees
        .par_iter()
        .map(|t| {
            let tmask: u64 = t.iter().map(|&i| 1u64 << i).sum();
            let relevant: Vec<(u64, u64)> = leads.iter().copied().filter(|(em, _)| em & !tmask == 0).collect();
            let m = t.len();
            let mut found = Vec::new();
            for code in 0..(1u64 << m) {
                // edge t[j] is reversed iff bit (m-1-j) is set: lexicographic over orientations
                let mut omask = 0u64;
                for (j, &i) in t.iter().enumerate() {
                    if code >> (m - 1 - j) & 1 == 1 {
                        omask |= 1 << i;
                    }
                }
                if relevant.iter().any(|&(em, om)| omask & em == om) {
                    continue;
                }
                let dir = t
                    .iter()
                    .map(|&i| {
                        let (u, w) = edges[i];
                        if omask >> i & 1 == 1 {
                            DirectedEdge::new(w, u)
                        } else {
                            DirectedEdge::new(u, w)
                        }
                    })
                    .collect();
                found.push(DirTree { edges: dir });
            }
            found
        })
        .collect();
    Ok(per_tree.into_iter().flatten().collect())
}

/// Number of tree edges u→w with w the neighbour of u on the way to `root`.
pub fn inedge(tree: &DirTree, root: usize) -> usize {
    let n = tree.edges.iter().flat_map(|e| [e.from, e.to]).max().unwrap_or(root).max(root);
    let mut adj = vec![Vec::new(); n + 1];
    for e in &tree.edges {
        adj[e.from].push(e.to);
        adj[e.to].push(e.from);
    }
    let mut parent = vec![0usize; n + 1];
    let mut seen = vec![false; n + 1];
    seen[root] = true;
    let mut stack = vec![root];
    while let Some(x) = stack.pop() {
        for &y in &adj[x] {
            if !seen[y] {
                seen[y] = true;
                parent[y] = x;
                stack.push(y);
            }
        }
    }
    tree.edges.iter().filter(|e| e.from != root && parent[e.from] == e.to).count()
}

fn histogram(trees: &[DirTree], d: usize) -> Vec<i64> {
    let mut h = vec![0i64; d + 1];
    for t in trees {
        h[inedge(t, 1)] += 1;
    }
    h
}

pub fn inedge_counts(sig: &Signature, cfg: &TriangulationConfig) -> Result<Vec<InedgeCount>, TriangulationError> {
    Ok(enumerate_standard_trees(sig, cfg)?
        .into_iter()
        .map(|t| {
            let inedges = inedge(&t, 1);
            InedgeCount { tree: t, inedges }
        })
        .collect())
}

/// h*_i = #{standard trees T : inedge(T) = i}, rooted at vertex 1.
pub fn hstar_triangulation(sig: &Signature, cfg: &TriangulationConfig) -> Result<HStar, TriangulationError> {
    let trees = enumerate_standard_trees(sig, cfg)?;
    Ok(HStar::from_ints(&histogram(&trees, sig.dim()), sig.dim())?)
}

/// (h^(i), h^(ii)): inedge histograms of the trees lying in type (i) and type (ii) facets.
pub fn hstar_split_by_facet_type(
    sig: &Signature,
    cfg: &TriangulationConfig,
) -> Result<(RatPoly, RatPoly), TriangulationError> {
    if sig.k() < 3 {
        return Err(GraphError::TooFewClasses.into());
    }
    let trees = enumerate_standard_trees(sig, cfg)?;
    let labs = enumerate_facet_labelings(sig);
    let types: Vec<FacetType> = labs.iter().map(|l| classify_labeling(sig, l)).collect::<Result<_, _>>()?;
    let d = sig.dim();
    let (mut h1, mut h2) = (vec![0i64; d + 1], vec![0i64; d + 1]);
    for t in &trees {
        let hits: Vec<usize> = (0..labs.len()).filter(|&i| t.edges.iter().all(|&e| labs[i].is_tight(e))).collect();
        if hits.len() != 1 {
            return Err(TriangulationError::AmbiguousFacet { tree: t.to_string(), facets: hits.len() });
        }
        let bucket = if types[hits[0]] == FacetType::TypeI { &mut h1 } else { &mut h2 };
        bucket[inedge(t, 1)] += 1;
    }
    Ok((RatPoly::from_ints(&h1), RatPoly::from_ints(&h2)))
}

/// Planar spanning trees between A = {1..a} and B = {1..b}: a+b−1 pairs covering
/// both sides with (i,j), (i',j'), i < i' ⇒ j ≤ j'. Exhaustive search over pair
/// subsets in lexicographic order, pruned by the monotonicity condition.
pub fn planar_trees(a: usize, b: usize) -> (BigInt, Vec<Vec<(usize, usize)>>) {
    let cells: Vec<(usize, usize)> = (1..=a).flat_map(|i| (1..=b).map(move |j| (i, j))).collect();
    let need = a + b - 1;
    let mut out = Vec::new();
    fn rec(
        cells: &[(usize, usize)],
        start: usize,
        need: usize,
        a: usize,
        b: usize,
        cur: &mut Vec<(usize, usize)>,
        out: &mut Vec<Vec<(usize, usize)>>,
    ) {
        if cur.len() == need {
            let covers_a = (1..=a).all(|i| cur.iter().any(|c| c.0 == i));
            let covers_b = (1..=b).all(|j| cur.iter().any(|c| c.1 == j));
            if covers_a && covers_b {
                out.push(cur.clone());
            }
            return;
        }
        for k in start..cells.len() {
            if cells.len() - k < need - cur.len() {
                break;
            }
            let (i, j) = cells[k];
            if cur.iter().any(|&(i0, j0)| i0 < i && j0 > j) {
                continue;
            }
            cur.push((i, j));
            rec(cells, k + 1, need, a, b, cur, out);
            cur.pop();
        }
    }
    rec(&cells, 0, need, a, b, &mut Vec::new(), &mut out);
    (BigInt::from(out.len()), out)
}
