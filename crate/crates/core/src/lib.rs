//! Permutation-group engine for Sylow orbit-length questions.
//!
//! A group `G` acting on `Ω` has property `(*)_p` when, for a Sylow
//! p-subgroup `P`, every point stabilizer `P_ω` is a Sylow p-subgroup of
//! `G_ω`. For transitive `G` this holds exactly when every `P`-orbit has
//! length `n_p`, the p-part of `n = |Ω|`. [`star::has_star_p`] decides it.
//!
//! The crate is `no_std` and only needs `alloc`.

#![no_std]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod actions;
pub mod backtrack;
pub mod config;
pub mod constructions;
pub mod error;
pub mod field;
pub mod fixtures;
pub mod group;
pub mod numth;
pub mod orbit;
pub mod perm;
pub mod star;
pub mod sylow;
pub mod wreath;

pub use config::Config;
pub use error::{Error, Result};
pub use group::PermGroup;
pub use orbit::OrbitPartition;
pub use perm::Permutation;
