//! Exact-arithmetic toolkit for finite root supersystems: root sets that may
//! contain nonsingular (null-length) roots alongside ordinary reflective ones.
//!
//! The crate builds the classical families and their nonsingular extensions,
//! verifies the defining axioms over arbitrary-precision rationals, walks Weyl
//! orbits and root strings, searches for small orbits, and recognizes the type
//! of an unlabeled system. Everything is exact: no floats anywhere.

pub mod axioms;
pub mod catalog;
pub mod classify;
pub mod doc;
pub mod error;
pub mod exactlin;
pub mod orbits;
pub mod rational;
pub mod system;
pub mod weyl;

pub use error::Error;
pub use exactlin::{GramForm, Vector};
pub use rational::Rational;
pub use system::{RootPartition, RootSupersystem};

/// Crate-wide result type.
pub type Result<T> = std::result::Result<T, Error>;
