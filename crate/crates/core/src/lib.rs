//! Exact local invariants of zero-dimensional subschemes of the affine plane.
//!
//! The crate computes, for an ideal `I ⊂ k[x, y]` of finite colength over `Q`
//! or `F_p`, the local algebras `O_{ξ,p}` at rational support points and their
//! invariants: length, socle dimension, minimal number of generators, Betti
//! numbers and the universal-family multiplicity `C(b2 + 1, 2)`. The
//! [`staircase`] module covers monomial ideals as partitions, and [`verify`]
//! runs the identity checks over exhaustive and randomized inputs.

pub mod artinian;
pub mod corpus;
pub mod error;
pub mod field;
pub mod groebner;
pub mod linalg;
pub mod monomial;
pub mod parse;
pub mod polynomial;
pub mod report;
mod roots;
pub mod staircase;
pub mod verify;

pub use error::{Error, Result};
pub use field::{Field, FieldElement};
pub use groebner::{buchberger, GroebnerBasis};
pub use monomial::{Monomial, MonomialOrder, OrderKind, VarPrecedence};
pub use polynomial::Polynomial;
