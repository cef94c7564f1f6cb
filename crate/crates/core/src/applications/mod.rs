//! Derived identities: supercharacter sums and the bitrace.

mod bitrace;
mod phi;

pub use bitrace::{
    bitrace, bitrace_at_one, bitrace_consistency, bitrace_from_h, h_oracle, h_poly, identity_check, k_bracket,
    BitraceMethod, BitraceQuery,
};
pub use phi::{phi_hook_closed, phi_hook_explicit, phi_hook_sum, phi_two_closed, phi_two_explicit, phi_two_sum, SumCheck};
