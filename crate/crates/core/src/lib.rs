pub mod applications;
pub mod arith;
pub mod combinatorics;
pub mod error;
mod memo;
pub mod characters;
pub mod schur;
pub mod verify;

pub use error::{Error, Result};

/// Drops every process-wide memo table.
pub fn clear_caches() {
    combinatorics::clear_cache();
    schur::clear_cache();
    characters::clear_cache();
}
