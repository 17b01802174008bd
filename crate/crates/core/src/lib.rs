//! Root clusters of permutation groups.

pub mod catalog;
pub mod clustercalc;
pub mod constructions;
pub mod error;
pub mod magnification;
pub mod permcore;
pub mod verify;

pub use clustercalc::{ExtensionPair, RootPair};
pub use error::{Error, Result};
pub use permcore::{DirectProduct, Group, Limits, Permutation, Subgroup};
