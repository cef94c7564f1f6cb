//! Exact coefficient arithmetic.

mod dense;
mod laurent;
pub mod matrix;
mod polyv;
mod rational;

pub use laurent::LaurentPoly;
pub use polyv::{polyv_product, PolyV};
pub use rational::RationalFn;
