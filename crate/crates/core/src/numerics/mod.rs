//! Small dense symmetric linear algebra with an explicit tolerance policy.

mod cholesky;
mod eigen;
mod matrix;
mod tolerance;

pub use cholesky::{cholesky_no_fill, CholeskyError, CholeskyFactor};
pub use eigen::{definiteness, spectrum_check, sym_eigenvalues, Definiteness, SpectrumCheck};
pub use matrix::{MatrixError, SymMatrix, SYMMETRY_TOLERANCE};
pub use tolerance::{ScaleMode, Tolerance, ToleranceError};
