//! The Hecke algebra `H_n` of type A in the positive permutation braid basis.
//!
//! Multiplication is the length recursion coming from the skein relation
//! `σ^2 = x(s - s^-1) σ + x^2`; the Markov trace computes the framed
//! invariant of a braid closure, normalized so the empty link is 1.

mod braid;
mod closure;
mod element;
mod perm;

pub use braid::{evaluate_braid, BraidWord};
pub use closure::{markov_trace, markov_trace_iterated, partial_closure, partial_closure_right};
pub use element::HeckeElement;
pub use perm::Perm;
