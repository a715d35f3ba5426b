//! Scalar kernel: complex carriers and extended-precision summation.

pub mod cdd;
pub mod dd;

pub use cdd::DdComplex;
pub use dd::{compensated_sum, extended_add, DoubleDouble, ExtendedAccumulator};
