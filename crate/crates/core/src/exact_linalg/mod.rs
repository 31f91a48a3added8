//! Exact linear algebra over ℚ: rationals, sparse vectors and matrices,
//! row reduction, eigenspaces and integer lattices.

mod eigen;
mod elimination;
mod lattice;
mod rational;
mod sparse;
mod subspace;

pub use eigen::{common_integer_eigenspaces, eigenspaces_within, Eigenspaces};
pub use elimination::{inverse, kernel_basis, rank, solve, Echelon};
pub use lattice::LatticeQuotient;
pub use rational::{ParseRationalError, Rational};
pub(crate) use sparse::DenseAccumulator;
pub use sparse::{SparseMatrix, SparseVector};
pub use subspace::Subspace;
