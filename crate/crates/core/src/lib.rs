//! Numerical laboratory for one-dimensional Schrödinger operators:
//! transfer matrices, Floquet analysis of periodic parents, critical
//! energies, Prüfer-phase deviation sums, substitution trace maps, and
//! resolvent-based quantum transport moments, for continuum and discrete
//! models with two-valued (Bernoulli, substitution, dimer) potentials.

pub mod discrete;
pub mod dynamics;
pub mod error;
pub mod fit;
pub mod floquet;
pub mod mat2;
pub mod pruefer;
pub mod quad;
pub mod rng;
pub mod special;
pub mod tracemap;
pub mod transfer;
pub mod words;

pub use error::{Error, Result};
pub use mat2::Mat2;
