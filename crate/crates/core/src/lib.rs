//! Exact HOMFLYPT skein computations: Hecke algebras, quasi-idempotents,
//! curl eigenvalues, a brute-force skein oracle and connected-sum reductions.

pub mod coeff;
pub mod connectsum;
pub mod curls;
pub mod error;
pub mod hecke;
pub mod idempotents;
pub mod skeinrw;
pub mod young;

pub use error::{Error, Result};
