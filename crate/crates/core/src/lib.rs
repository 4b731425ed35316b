//! Exact computations around the S-unit criterion for the asymptotic Fermat
//! equation over number fields: number-field arithmetic, imaginary quadratic
//! class groups, S-unit equation solving, Frey-curve invariants and reports.

pub mod arith;
pub mod error;
pub mod frey;
pub mod class;
pub mod criterion;
pub mod nf;
pub mod report;
pub mod sunit;

pub use error::{Error, Result};
