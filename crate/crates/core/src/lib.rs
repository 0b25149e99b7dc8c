//! Exact computations with racks, Yetter-Drinfel'd modules and braided
//! Leibniz algebras.
//!
//! All arithmetic is exact (rationals, or a prime field on request). Every
//! identity is verified by brute force over basis tuples; the identities in
//! scope are multilinear in the checked arguments, so basis tuples suffice.

pub mod error;
pub mod formats;
pub mod group_hopf;
pub mod leibniz;
pub mod linalg;
pub mod lm_env;
pub mod rack;
pub mod report;
pub mod yd;

pub use error::{Error, Result};
pub use group_hopf::{HElem, HopfDescriptor};
pub use leibniz::{LeibnizAlgebra, StructureConstants};
pub use linalg::{kron, mat_mul, Field, LinComb, Matrix, Scalar, Subspace, TensorIndex, Vector};
pub use lm_env::{EnvTetramodule, LieAlgebra, LieObject, TruncatedPBW};
pub use rack::{AugmentedRack, FiniteGroup, FiniteShelf, Perm};
pub use report::Witnesses;
pub use yd::{BraidedLeibnizData, BraidingMatrix, YdModule};
