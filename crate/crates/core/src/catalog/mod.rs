//! The catalog: type labels, fixed realizations of every family, simple
//! subsystems with their fundamental weights, and the standard desk-scale
//! label list.

mod base;
mod build;
mod label;
mod standard;

pub use base::{fundamental_weights, root_base};
pub use build::{
    construct, make_exceptional, make_imaginary, make_real, make_root_system, ClassicalFamily,
    ExceptionalKind,
};
pub use label::TypeLabel;
pub use standard::standard_labels;
