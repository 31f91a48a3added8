//! Invariant tensors attached to the gradings: the symplectic form, quartic
//! and trilinear map on W, and the Jordan pair with its cubic norm.

pub mod identify;
pub mod jordan;
pub mod poly;
pub mod symplectic;

pub use identify::{hyperdeterminant_match, smooth_point, type_a_square, HyperdetReport, SmoothPointReport, SquareReport};
pub use jordan::{determinant_match, DeterminantReport, JordanContext, NormData, Side};
pub use symplectic::{InvariantForm, SymplecticContext, INVARIANCE_SAMPLES};
