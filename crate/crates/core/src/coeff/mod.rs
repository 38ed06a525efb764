//! Exact coefficient arithmetic: Laurent polynomials in `x, v, s`, their
//! fraction field, quantum integers and localization certificates.

mod certificate;
mod laurent;
mod quantum;
mod rational;
mod text;

pub use certificate::{certify_membership, FactorTag, Monoid, MonoidCertificate};
pub use laurent::{Exponent, LaurentPoly, Var};
pub use quantum::{delta, framing_factor, quantum_factorial, quantum_integer, v_difference};
pub use rational::{arith, cyclotomic, ArithOp, RationalFunction};
