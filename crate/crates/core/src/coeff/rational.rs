use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::laurent::{forward_owned, LaurentPoly, Var};
use crate::error::{Error, Result};

/// Element of the fraction field of `Z[x^±1, v^±1, s^±1]`.
///
/// Fractions are only partially reduced: a Laurent monomial and the common
/// integer content are stripped and the denominator's leading coefficient is
/// made positive. Equality is decided by cross-multiplication.
#[derive(Clone, Debug)]
pub struct RationalFunction {
    num: LaurentPoly,
    den: LaurentPoly,
}

impl RationalFunction {
    pub fn zero() -> Self {
        Self { num: LaurentPoly::zero(), den: LaurentPoly::one() }
    }

    pub fn one() -> Self {
        Self::from_poly(LaurentPoly::one())
    }

    pub fn from_int(c: i64) -> Self {
        Self::from_poly(LaurentPoly::constant(c))
    }

    pub fn from_poly(p: LaurentPoly) -> Self {
        Self { num: p, den: LaurentPoly::one() }
    }

    pub fn new(num: LaurentPoly, den: LaurentPoly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::normalized(num, den))
    }

    /// Build without any normalization. Used by certificates, which must keep
    /// the denominator exactly as produced by their factor list.
    pub(crate) fn raw(num: LaurentPoly, den: LaurentPoly) -> Self {
        debug_assert!(!den.is_zero());
        Self { num, den }
    }

    fn normalized(num: LaurentPoly, den: LaurentPoly) -> Self {
        if num.is_zero() {
            return Self::zero();
        }
        let (lo, _) = den.exponent_bounds().expect("nonzero denominator");
        let shift = [-lo[0], -lo[1], -lo[2]];
        let (mut num, mut den) = if shift == [0, 0, 0] { (num, den) } else { (num.shift(shift), den.shift(shift)) };
        let g = num.content().gcd(&den.content());
        if !g.is_one() {
            num = num.div_integer_unchecked(&g);
            den = den.div_integer_unchecked(&g);
        }
        if den.leading().map(|(_, c)| c.is_negative()).unwrap_or(false) {
            num = -num;
            den = -den;
        }
        Self { num, den }
    }

    pub fn numerator(&self) -> &LaurentPoly {
        &self.num
    }

    pub fn denominator(&self) -> &LaurentPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num == self.den
    }

    /// The value as a Laurent polynomial when the denominator divides the
    /// numerator.
    pub fn as_poly(&self) -> Option<LaurentPoly> {
        if self.den.is_one() {
            return Some(self.num.clone());
        }
        self.num.div_exact(&self.den)
    }

    pub fn recip(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::normalized(self.den.clone(), self.num.clone()))
    }

    pub fn checked_div(&self, rhs: &Self) -> Result<Self> {
        if rhs.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(self * &rhs.recip()?)
    }

    pub fn mul_poly(&self, p: &LaurentPoly) -> Self {
        if p.is_zero() || self.is_zero() {
            return Self::zero();
        }
        if p.is_one() {
            return self.clone();
        }
        if *p == self.den {
            return Self::from_poly(self.num.clone());
        }
        if let Some((e, c)) = p.as_monomial() {
            if c.is_one() {
                return Self { num: self.num.shift(e), den: self.den.clone() };
            }
        }
        Self::normalized(&self.num * p, self.den.clone())
    }

    pub fn pow(&self, n: i32) -> Result<Self> {
        if n < 0 {
            return self.recip()?.pow(-n);
        }
        Ok(Self::normalized(self.num.pow(n as u32), self.den.pow(n as u32)))
    }

    pub fn invert_vars(&self, mask: [bool; 3]) -> Self {
        Self::normalized(self.num.invert_vars(mask), self.den.invert_vars(mask))
    }

    pub fn substitute(&self, var: Var, value: &LaurentPoly) -> Result<Self> {
        Self::new(self.num.substitute(var, value), self.den.substitute(var, value))
    }

    /// Cancel the denominator into the numerator when it divides exactly.
    pub fn reduce(&self) -> Self {
        match self.as_poly() {
            Some(p) => Self::from_poly(p),
            None => self.clone(),
        }
    }

    /// Cancel common cyclotomic factors in `s`, `v` and `x`.
    ///
    /// Not a general gcd, but every denominator the engine produces is a
    /// product of such factors times monomials, except for the explicit
    /// `c_{λ,μ}` and obstruction scalars, which are handled by [`reduce`].
    /// Gives a deterministic display form.
    ///
    /// [`reduce`]: RationalFunction::reduce
    pub fn simplified(&self) -> Self {
        if let Some(p) = self.as_poly() {
            return Self::from_poly(p);
        }
        let mut num = self.num.clone();
        let mut den = self.den.clone();
        for (var, max_k) in [(Var::S, 24), (Var::V, 12), (Var::X, 8)] {
            for k in 1..=max_k {
                let phi = cyclotomic(var, k);
                while let (Some(dq), Some(nq)) = (den.div_exact(&phi), num.div_exact(&phi)) {
                    num = nq;
                    den = dq;
                }
            }
        }
        let out = Self::normalized(num, den);
        out.reduce()
    }

    /// Evaluate modulo a prime; `None` when the denominator vanishes there.
    pub fn eval_mod(&self, point: [u64; 3], p: u64) -> Option<u64> {
        let d = self.den.eval_mod(point, p);
        if d == 0 {
            return None;
        }
        let n = self.num.eval_mod(point, p);
        Some(super::laurent::mul_mod(n, super::laurent::mod_pow(d, p - 2, p), p))
    }
}

/// The `k`-th cyclotomic polynomial in one variable.
pub fn cyclotomic(var: Var, k: u32) -> LaurentPoly {
    let mut p = LaurentPoly::var_pow(var, k as i32) - LaurentPoly::one();
    for d in 1..k {
        if k.is_multiple_of(d) {
            p = p.div_exact(&cyclotomic(var, d)).expect("cyclotomic factor divides t^k - 1");
        }
    }
    p
}

impl PartialEq for RationalFunction {
    fn eq(&self, other: &Self) -> bool {
        if self.num == other.num && self.den == other.den {
            return true;
        }
        if self.num.is_zero() || other.num.is_zero() {
            return self.num.is_zero() && other.num.is_zero();
        }
        &self.num * &other.den == &other.num * &self.den
    }
}

impl Eq for RationalFunction {}

impl From<LaurentPoly> for RationalFunction {
    fn from(p: LaurentPoly) -> Self {
        Self::from_poly(p)
    }
}

impl From<i64> for RationalFunction {
    fn from(c: i64) -> Self {
        Self::from_int(c)
    }
}

impl Add<&RationalFunction> for &RationalFunction {
    type Output = RationalFunction;
    fn add(self, rhs: &RationalFunction) -> RationalFunction {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        if self.den == rhs.den {
            return RationalFunction::normalized(&self.num + &rhs.num, self.den.clone());
        }
        if let Some(q) = rhs.den.div_exact(&self.den) {
            return RationalFunction::normalized(&(&self.num * &q) + &rhs.num, rhs.den.clone());
        }
        if let Some(q) = self.den.div_exact(&rhs.den) {
            return RationalFunction::normalized(&self.num + &(&rhs.num * &q), self.den.clone());
        }
        RationalFunction::normalized(
            &(&self.num * &rhs.den) + &(&rhs.num * &self.den),
            &self.den * &rhs.den,
        )
    }
}

impl Neg for &RationalFunction {
    type Output = RationalFunction;
    fn neg(self) -> RationalFunction {
        RationalFunction { num: -&self.num, den: self.den.clone() }
    }
}

impl Neg for RationalFunction {
    type Output = RationalFunction;
    fn neg(self) -> RationalFunction {
        -&self
    }
}

impl Sub<&RationalFunction> for &RationalFunction {
    type Output = RationalFunction;
    fn sub(self, rhs: &RationalFunction) -> RationalFunction {
        self + &(-rhs)
    }
}

impl Mul<&RationalFunction> for &RationalFunction {
    type Output = RationalFunction;
    fn mul(self, rhs: &RationalFunction) -> RationalFunction {
        if self.is_zero() || rhs.is_zero() {
            return RationalFunction::zero();
        }
        if rhs.den.is_one() {
            return self.mul_poly(&rhs.num);
        }
        if self.den.is_one() {
            return rhs.mul_poly(&self.num);
        }
        if self.num == rhs.den {
            return RationalFunction::normalized(rhs.num.clone(), self.den.clone());
        }
        if rhs.num == self.den {
            return RationalFunction::normalized(self.num.clone(), rhs.den.clone());
        }
        RationalFunction::normalized(&self.num * &rhs.num, &self.den * &rhs.den)
    }
}

/// Panics on a zero divisor; use [`RationalFunction::checked_div`] for a
/// fallible version.
impl Div<&RationalFunction> for &RationalFunction {
    type Output = RationalFunction;
    fn div(self, rhs: &RationalFunction) -> RationalFunction {
        self.checked_div(rhs).expect("division by zero rational function")
    }
}

forward_owned!(RationalFunction, Add, add);
forward_owned!(RationalFunction, Sub, sub);
forward_owned!(RationalFunction, Mul, mul);
forward_owned!(RationalFunction, Div, div);

/// Exact arithmetic dispatch used by the CLI and tests.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
    Div,
}

pub fn arith(a: &RationalFunction, b: &RationalFunction, op: ArithOp) -> Result<RationalFunction> {
    Ok(match op {
        ArithOp::Add => a + b,
        ArithOp::Sub => a - b,
        ArithOp::Mul => a * b,
        ArithOp::Div => a.checked_div(b)?,
    })
}

impl RationalFunction {
    /// Integer scalar multiple.
    pub fn scale(&self, k: &BigInt) -> Self {
        if k.is_zero() {
            return Self::zero();
        }
        Self::normalized(self.num.scale(k), self.den.clone())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rf(p: LaurentPoly) -> RationalFunction {
        RationalFunction::from_poly(p)
    }

    #[test]
    fn additive_identity() {
        let x = rf(LaurentPoly::x());
        assert_eq!(&x + &RationalFunction::zero(), x);
    }

    #[test]
    fn multiplicative_inverse() {
        let z = rf(LaurentPoly::z());
        let inv = z.recip().unwrap();
        let prod = &inv * &z;
        assert!(prod.is_one());
        assert_eq!(prod, RationalFunction::one());
    }

    #[test]
    fn division_by_zero_is_an_error() {
        let a = RationalFunction::one();
        assert_eq!(a.checked_div(&RationalFunction::zero()), Err(Error::DivisionByZero));
        assert_eq!(arith(&a, &RationalFunction::zero(), ArithOp::Div), Err(Error::DivisionByZero));
        assert!(RationalFunction::new(LaurentPoly::one(), LaurentPoly::zero()).is_err());
    }

    #[test]
    fn cross_multiplication_equality() {
        let z = LaurentPoly::z();
        let two = LaurentPoly::constant(2);
        let a = RationalFunction::new(&two * &z, &z * &z).unwrap();
        let b = RationalFunction::new(two, z).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn normalization_strips_monomial_and_content() {
        let z = LaurentPoly::z();
        let a = RationalFunction::new(LaurentPoly::constant(6), z.scale(&BigInt::from(-4))).unwrap();
        // den = s - s^-1 shifted by s: s^2 - 1, content 2 removed, sign made positive
        assert_eq!(a.denominator(), &(LaurentPoly::var_pow(Var::S, 2) - LaurentPoly::one()).scale(&BigInt::from(2)));
        assert_eq!(a.numerator(), &LaurentPoly::var_pow(Var::S, 1).scale(&BigInt::from(-3)));
    }

    #[test]
    fn simplified_cancels_cyclotomic_factors() {
        let z = LaurentPoly::z();
        let q2 = LaurentPoly::s() + LaurentPoly::var_pow(Var::S, -1);
        let a = RationalFunction::new(&q2 * &LaurentPoly::v(), &q2 * &z).unwrap();
        let b = a.simplified();
        assert_eq!(b, a);
        assert_eq!(b.denominator(), &(LaurentPoly::var_pow(Var::S, 2) - LaurentPoly::one()));
    }

    #[test]
    fn cyclotomic_values() {
        assert_eq!(cyclotomic(Var::S, 1), LaurentPoly::s() - LaurentPoly::one());
        assert_eq!(cyclotomic(Var::S, 2), LaurentPoly::s() + LaurentPoly::one());
        assert_eq!(
            cyclotomic(Var::S, 4),
            LaurentPoly::var_pow(Var::S, 2) + LaurentPoly::one()
        );
    }
}
