//! Artin-Rees indices, correction solvers and brute-force Artin-function bounds.

mod beta;
mod rees;
mod solve;

pub use beta::{beta_lower_bound_bruteforce, BetaResult, PolySystem};
pub use rees::{
    artin_rees_index, certified_range, stable_ar_scan, ArIndexResult, GridPoint, StableArEntry, StableArReport,
    TightWitness,
};
pub use solve::{solve_fx_hy, solve_linear_regular, Regularity, SolveCertificate};
