//! Exact computations in the type-A Iwahori-Hecke algebra over `Q(q)`, its
//! q-alternating subalgebra, and the super Schur-Weyl centralizers on
//! `V^{⊗r}` for a Z2-graded space `V`.

pub mod alt;
pub mod combinatorics;
pub mod commutant;
pub mod crossed;
pub mod error;
pub mod hecke;
pub mod linalg;
pub mod matrix;
pub mod qfield;
pub mod report;
pub mod suites;
pub mod tensor;

pub use error::{Error, Result};
