//! Dense complex linear algebra sized for small Hilbert spaces.
//!
//! Everything is built on [`matrix::ComplexMatrix`], a row-major dense
//! matrix of `Complex<f64>`. System sizes in scope stay below a few
//! thousand, so there are no sparse formats and no blocking.

pub mod eig;
pub mod lu;
pub mod matrix;

pub use eig::{eigenvalues, hermitian_eigensystem};
pub use lu::{lu_factor, solve, LuFactors};
pub use matrix::{ComplexMatrix, C64};
