//! Exact computation of Kronecker coefficients, reduced Kronecker
//! coefficients, their hook-stable limits, and the linear quasipolynomials
//! that govern reduced Kronecker coefficients along two-row directions.

pub mod alphabet;
pub mod characters;
pub mod cli;
pub mod coefficients;
pub mod error;
pub mod finite;
pub mod fixtures;
pub mod identities;
pub mod laurent;
pub mod partition;
pub mod series;
pub mod stability;
pub mod straighten;

pub use alphabet::{Alphabet, AlphabetExpr};
pub use coefficients::{kronecker, littlewood_richardson, reduced_kronecker, ReducedMethod};
pub use error::{KronError, Result};
pub use laurent::LaurentPoly;
pub use partition::{ConePosition, IntSequence, Partition};
pub use series::PowerSumSeries;
