//! Exact computations with finite-dimensional Hopf algebras given by
//! structure constants.

pub mod comatrix;
pub mod coradical;
pub mod corpus;
pub mod error;
pub mod exactalg;
pub mod exponents;
pub mod format;
pub mod hopfcore;
pub mod report;
pub mod suite;

pub use error::{Error, Result};
