//! Exact construction and verification of maximal commutative subalgebras of
//! `M_n(F)` and of the lengths of their generating systems.
//!
//! Everything is computed exactly over `Q` or `GF(p)`:
//!
//! - [`scalar`], [`matrix`], [`subspace`]: field elements, dense matrices and
//!   canonical (RREF) linear spans.
//! - [`constructions`]: the families `B_{k,m,l}` and `B_{k,m}` and their
//!   length-forcing generating systems.
//! - [`length`]: word filtrations, `ℓ(S)`, algebra closure, word enumeration and
//!   sampled generating systems.
//! - [`commute`]: centralizers and maximality verdicts.
//! - [`radical`]: radicals of local algebras, nilpotency index and the bound
//!   `ℓ(S) ≤ N - 1`.
//! - [`cli`]: the command-line front end and its JSON formats.

pub mod cli;
pub mod commute;
pub mod constructions;
pub mod error;
pub mod length;
pub mod matrix;
pub mod radical;
pub mod rational;
pub mod scalar;
pub mod subspace;
pub mod system;

pub use error::{Error, Result};
pub use matrix::Matrix;
pub use scalar::{Field, Scalar};
pub use subspace::Subspace;
pub use system::{GeneratingSystem, Generator};
