//! Exact rational scalars, polynomials, truncated series and matrices.

pub mod form;
pub mod matrix;
pub mod modular;
pub mod rational;
pub mod series;
pub mod unipoly;

pub use form::{eval_monomial, monomials, Exponent, TernaryForm};
pub use matrix::{exact_rank, Echelon, ExactMatrix};
pub use modular::{common_root_estimate, coprime_certificate};
pub use rational::{format_rational, parse_rational, q, q_frac, Rational};
pub use series::{TruncatedSeries, Valuation};
pub use unipoly::{resultant, resultant_in_x, squarefree_part, univariate_gcd, UniPoly};
