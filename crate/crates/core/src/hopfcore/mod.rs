//! Hopf algebras by structure constants and the constructions built on them.

pub mod algebra;
pub mod calculus;
pub mod constructions;
pub mod double;
pub mod verify;

pub use algebra::{DeclaredMatrix, HopfAlgebraData, SparseMap};
pub use calculus::{antipode_power, conjugation, convolution, is_grouplike, ord_s2, pivotal_check, LinearEndo};
pub use constructions::{dual, smash_pivot, smash_with_s2, sub_hopf, tensor_product};
pub use double::{drinfeld_double, DoubleData, DoubleEngine};
pub use verify::verify_hopf;
