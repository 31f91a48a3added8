pub mod error;
pub mod exact_linalg;
pub mod chevalley;
pub mod embeddings;
pub mod gradings;
pub mod root_system;
pub mod sampling;
pub mod tensors;
pub mod verify;

pub use error::{Error, Result};
