//! Exact Ehrhart theory for symmetric edge polytopes of complete multipartite graphs.
//!
//! h*-polynomials come from three independent routes (closed forms, a unimodular
//! triangulation driven by a reduced Gröbner basis, and brute-force lattice point
//! counting). On top of that sit γ-vectors, the cross-polynomial basis, exact
//! recursion solving, and Sturm-certified root location on the line Re(z) = -1/2.

pub mod exactpoly;

pub use exactpoly::{HStar, Rat, RatPoly};
pub mod graphmodel;
pub mod signatures;

pub use graphmodel::{DirectedEdge, FacetLabeling, FacetType, Signature};
pub mod oracle;
pub mod groebner;
pub mod triangulate;
pub mod closedforms;
pub mod clroots;
pub mod recursion;
pub mod cli;
