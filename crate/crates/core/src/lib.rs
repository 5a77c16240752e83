//! Exact computations for four lattice polytopes attached to a finite poset:
//! the order polytope, the chain polytope, and their enriched (signed)
//! versions.
//!
//! * [`poset`]: posets, ideals, filters, antichains and chains.
//! * [`geometry`]: lattice points, facet systems, dilation counts, Ehrhart
//!   polynomials, reflexivity and facet-number bounds.
//! * [`partitions`]: order-preserving maps and left enriched P-partitions.
//! * [`toric`]: toric ideals, explicit Gröbner bases, monomial orders,
//!   S-pair verification, initial ideals and Hilbert function counts.
//! * [`reproduce`]: the bundled verification suite.
//!
//! Poset elements are 0-based inside the library; JSON input and output
//! use 1-based labels.

pub mod error;
pub mod geometry;
pub mod partitions;
pub mod polynomial;
pub mod poset;
pub mod reproduce;
pub mod toric;

pub use error::{Error, Result};
pub use geometry::{Halfspace, PolytopeKind, SignedPoint};
pub use polynomial::RationalPolynomial;
pub use poset::{ElementSet, Poset};
pub use toric::{ToricKind, VariableLabel};
