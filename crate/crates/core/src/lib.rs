//! Algebraic analysis of multiplex, signed and two-mode networks.

pub mod bundles;
pub mod decomp;
pub mod dot;
pub mod error;
pub mod fca;
pub mod io;
pub mod matrix;
pub mod netcore;
pub mod order;
pub mod positional;
pub mod semigroup;
pub mod signed;

pub use error::{Error, Result};
