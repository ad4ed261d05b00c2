//! Difference ascent sequences, the d-hat modification map, the Burge
//! transpose, d-Fishburn permutations and their generating functions,
//! with an exhaustive verification harness.

pub mod burge;
pub mod cli;
pub mod enumerate;
pub mod error;
pub mod genfun;
pub mod hat;
pub mod perm;
pub mod tables;
pub mod verify;
pub mod word;

pub use burge::{burge_transpose, gamma, is_burge_word, phi, Biword, BurgeWord};
pub use error::{Error, Result};
pub use genfun::{BivarSeries, IntPolynomial};
pub use hat::{hat, is_self_modified, modify, unhat, HatResult};
pub use perm::{d_activity, ActivityTable, Permutation};
pub use verify::{verify_theorem, Bounds, Report};
pub use word::{IndexSet, Letter, Word};
