//! Symbolic computation for adaptable separated graphs.
//!
//! The crate models a finite adaptable separated graph `(E, C)` and the
//! objects built from it:
//!
//! - [`semigroup`]: exact normal forms `γ·m·η*` for the inverse semigroup
//!   `S(E, C)` and the product on them.
//! - [`lattice`]: the idempotent semilattice, expansions and orthogonal
//!   covers, and the Boolean algebra of compact open cylinder sets.
//! - [`filters`]: semifinite and infinite paths, filters on the idempotents,
//!   ultrafilters and separation witnesses.
//! - [`groupoid`]: germs `(x, n, y)` of the tight groupoid and the compact
//!   open bisections `Z(s)`.
//! - [`monoid`]: the commutative monoid `M(E, C)`, a bounded word problem,
//!   refinement witnesses and equidecomposition certificates for the type
//!   semigroup.
//!
//! Everything here is `no_std` with `alloc`; parsing, fixtures and the command
//! line front end live in the `sepgroid` crate.
#![no_std]
#![forbid(unsafe_code)]

extern crate alloc;

pub mod enumerate;
pub mod filters;
pub mod graph;
pub mod groupoid;
pub mod lattice;
pub mod monoid;
pub mod semigroup;
pub mod seq;

pub use graph::{EdgeId, EdgeKind, PrimeId, PrimeKind, SeparatedGraph, VertexId};
pub use semigroup::{CPath, Element, Monomial, Path, Step};
pub use seq::SparseSeq;
