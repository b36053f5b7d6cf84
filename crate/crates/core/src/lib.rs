//! Exact verification of finite-dimensional Hopf-algebraic structures:
//! bialgebras by structure constants, Yetter-Drinfeld modules, covariant
//! bimodules, their duals, and first-order differential calculi. All
//! arithmetic is exact over ℚ(q); every "check" is a literal identity on
//! basis elements.

// Structure-constant code is index arithmetic by nature; iterator rewrites
// of these loops obscure the tensor index conventions.
#![allow(clippy::needless_range_loop)]

pub mod algebra;
pub mod bimodule;
pub mod calculus;
pub mod catalog;
pub mod defs;
pub mod duality;
pub mod error;
pub mod group;
pub mod linalg;
pub mod repcorep;
pub mod report;
pub mod scalar;
pub mod yd;

pub use algebra::{BialgebraData, Elem, FinAlgebra, FinCoalgebra, HopfAlgebraData};
pub use error::{Error, Result};
pub use linalg::{Matrix, Tensor};
pub use report::{Check, VerificationReport};
pub use scalar::Scalar;
