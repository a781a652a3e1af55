//! Exact computations in truncated power-series rings `k[[T1..TN]]/m^(D+1)`:
//! Artin-Rees indices, m-adic order functions, approximation solvers and a
//! catalog of Artin-function bounds.

pub mod artin;
pub mod bounds;
pub mod cli;
pub mod error;
mod linalg;
pub mod order;
pub mod parse;
pub mod scalar;
pub mod series;
pub mod subspace;
pub mod witness;

pub use error::{Error, Result};
pub use scalar::{Field, Scalar};
pub use series::{ExtOrder, Monomial, Ring, RingSpec, TruncatedSeries};
pub use subspace::{IdealSpec, ModuleSpec, Subspace};
