//! Weierstrass gap sequences at total inflection points of nodal plane curves.
//!
//! The crate has two halves. [`semigroups`] is the combinatorial side: the
//! families `N_d`, `N^(1)`, the maximal-weight families and the classification
//! table for up to five nodes. The geometric side ([`curvegeom`], [`linsys`],
//! [`constructions`]) builds explicit nodal curves, certifies their
//! singularities exactly, and reads gap sequences off the canonical adjoint
//! series. Everything runs over the rationals; there is no floating point.

pub mod cli;
pub mod constructions;
pub mod curvegeom;
pub mod error;
pub mod exactmath;
pub mod linsys;
mod sampling;
pub mod semigroups;

pub use error::{Error, Result};
