//! Quantum integers and the distinguished scalars of the skein relations.

use super::laurent::{LaurentPoly, Var};
use super::rational::RationalFunction;
use crate::error::{Error, Result};

/// `[n] = s^{n-1} + s^{n-3} + ... + s^{1-n}`.
pub fn quantum_integer(n: i64) -> Result<LaurentPoly> {
    if n <= 0 {
        return Err(Error::OutOfRange(format!("quantum integer [{n}] needs n >= 1")));
    }
    let n = n as i32;
    Ok(LaurentPoly::from_terms(
        (0..n).map(|k| ([0, 0, n - 1 - 2 * k], 1.into())),
    ))
}

/// `[n]! = [1][2]...[n]`, with `[0]! = 1`.
pub fn quantum_factorial(n: u32) -> LaurentPoly {
    (1..=n as i64).fold(LaurentPoly::one(), |acc, j| {
        &acc * &quantum_integer(j).expect("j >= 1")
    })
}

/// The value of a split unknot, `(v^-1 - v) / (s - s^-1)`.
pub fn delta() -> RationalFunction {
    RationalFunction::new(
        LaurentPoly::var_pow(Var::V, -1) - LaurentPoly::v(),
        LaurentPoly::z(),
    )
    .expect("s - s^-1 is nonzero")
}

/// `x v^-1`, the factor contributed by a positive curl.
pub fn framing_factor() -> LaurentPoly {
    LaurentPoly::monomial(1.into(), [1, -1, 0])
}

/// `v^-1 - v`.
pub fn v_difference() -> LaurentPoly {
    LaurentPoly::var_pow(Var::V, -1) - LaurentPoly::v()
}
