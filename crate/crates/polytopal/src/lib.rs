//! Combinatorics of polytopal digraphs.
//!
//! A polytopal digraph is an orientation of the skeleton of a convex
//! polytope, considered together with the polytope itself. This crate
//! decides the four properties such a digraph must have in order to be
//! induced by a linear function (an "LP digraph"):
//!
//! * acyclicity,
//! * the unique sink orientation property (every nonempty face has a
//!   unique source and a unique sink),
//! * the Holt-Klee property (every k-face carries k vertex-disjoint
//!   directed paths from its source to its sink),
//! * the shelling property (some — equivalently every — topological
//!   sort of the digraph orders the facets of the combinatorially
//!   polar polytope into a shelling).
//!
//! On top of the deciders it provides:
//!
//! * exact face-lattice construction from vertex-facet incidence data,
//!   with combinatorial polarity ([`lattice`]),
//! * vertex truncation and pyramid constructions that generate infinite
//!   families of digraphs separating the shelling property from the
//!   other three ([`constructions`]),
//! * the pair-sequence encoding of acyclic crosspolytope orientations,
//!   exact counting of good sequences, and integer bound checks
//!   ([`crosspolytope`]),
//! * exact rational verification of V/H-representations and line
//!   shellings ([`geometry`]),
//! * embedded datasets, most notably the 4-polytope `omega` whose
//!   canonical orientation is acyclic, USO and Holt-Klee but fails the
//!   shelling check ([`datasets`]).
//!
//! All computations are exact (bitmask set arithmetic, big integers,
//! big rationals) and deterministic: identical inputs produce identical
//! outputs, including witnesses and iteration orders. Values are
//! immutable after construction, so everything is safe to share across
//! threads.

pub mod constructions;
pub mod crosspolytope;
pub mod datasets;
pub mod digraph;
mod error;
mod flow;
pub mod geometry;
pub mod incidence;
pub mod json;
pub mod lattice;
mod set;
pub mod shelling;

pub use error::Error;
pub use incidence::VertexFacetIncidence;
pub use lattice::FaceLattice;
pub use set::IndexSet;

/// Crate-wide result type.
pub type Result<T, E = Error> = std::result::Result<T, E>;
