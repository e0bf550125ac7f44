//! Exact computations with the Loday complex of a Leibniz algebra and its
//! subcomplex spanned by free graded Lie brackets.

pub mod caps;
pub mod complexes;
pub mod error;
pub mod eulerian;
pub mod hopf;
pub mod leibniz;
pub mod linalg;
pub mod sample;
pub mod tensor;
pub mod witt;

pub use caps::Caps;
pub use error::{Error, Result};
