//! Decision procedures for Z-partition dominance, coherent local systems and
//! the inclusion order of integrable primitive ideals of `U(sl(∞))`.
//!
//! Every closed-form criterion in the crate has an exhaustive counterpart in
//! [`verify`], which compares the two over bounded grids.

pub mod cls;
pub mod dominance;
pub mod error;
pub mod hasse;
pub mod ideals;
pub mod local_systems;
pub mod partition;
pub mod verify;

pub use error::{Error, Result};
