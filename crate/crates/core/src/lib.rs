pub mod caps;
pub mod centralizers;
pub mod corpusio;
pub mod error;
pub mod fusion;
pub mod permcore;
pub mod structure;
pub mod theorems;

#[cfg(test)]
pub(crate) mod testutil;

pub use error::{Error, Result};
pub use permcore::{PermGroup, Permutation};
