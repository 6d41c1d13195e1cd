//! Adjoint rings of bimaps over finite fields, their structure theory, and the
//! normalizer groups that bound autotopism and pseudo-isometry groups.

pub mod adjoint;
pub mod algdecomp;
pub mod algebra;
pub mod bimap;
pub mod error;
pub mod field;
pub mod group;
pub mod matlin;
pub mod normalizer;
pub mod oracle;
pub mod pgroup;
pub mod random;
pub mod registry;
pub mod strategy;
pub mod starnorm;
pub mod tensor;
pub mod verify;

pub use error::{Error, Result};
