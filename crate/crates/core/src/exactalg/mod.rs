//! Exact scalars and dense exact linear algebra.

pub mod field;
pub mod matrix;
pub mod rational;
pub mod roots;
pub mod subspace;

pub use field::{scalar_arith, ArithOp, FieldDescriptor, FieldKind, FieldScalar, Scalar};
pub use matrix::ExactMatrix;
pub use rational::Rational;
pub use subspace::Subspace;

/// `mat_kernel` in operation form.
pub fn mat_kernel(m: &ExactMatrix) -> Subspace {
    m.kernel()
}

/// `mat_kronecker` in operation form.
pub fn mat_kronecker(a: &ExactMatrix, b: &ExactMatrix) -> crate::error::Result<ExactMatrix> {
    a.kronecker(b)
}

/// `is_nilpotent` in operation form.
pub fn is_nilpotent(m: &ExactMatrix) -> crate::error::Result<bool> {
    m.is_nilpotent()
}
