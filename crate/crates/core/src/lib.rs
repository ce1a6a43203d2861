//! Strong Shoda pair Wedderburn components of rational group algebras of
//! small finite groups, and detection of exceptional components.

pub mod error;
pub mod numtheory;
pub mod algebra;
pub mod classifier;
pub mod constructions;
pub mod groupalgebra;
pub mod io;
pub mod permgroup;

pub use error::{Error, Result};
