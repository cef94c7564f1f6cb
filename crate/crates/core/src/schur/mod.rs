//! Schur-vector engine: straightening, the peeling operators and the
//! pairing polynomials `g^λ_μ(t)`.

mod newton;
mod oracle;
mod peel;
mod straighten;
mod vector;

pub use newton::newton_coeffs;
pub use oracle::{classical_character, g_oracle, q_power_sum_expansion};
pub use peel::{det_matrix, det_value, g_poly, peel_det, peel_iterative, peel_strips, Strategy};
pub(crate) use peel::check_weights;
pub use straighten::{straighten, StraightenResult};
pub use vector::SchurVector;

pub(crate) fn clear_cache() {
    newton::clear_cache();
    oracle::clear_cache();
    peel::clear_cache();
}
