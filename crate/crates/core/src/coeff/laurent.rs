use std::collections::BTreeMap;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// Exponent triple `(e_x, e_v, e_s)`.
pub type Exponent = [i32; 3];

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Var {
    X,
    V,
    S,
}

impl Var {
    pub const ALL: [Var; 3] = [Var::X, Var::V, Var::S];

    pub fn index(self) -> usize {
        match self {
            Var::X => 0,
            Var::V => 1,
            Var::S => 2,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Var::X => "x",
            Var::V => "v",
            Var::S => "s",
        }
    }
}

/// Element of `Z[x^±1, v^±1, s^±1]`.
///
/// Terms are kept in a `BTreeMap` keyed by exponent triple, so iteration is
/// lexicographic in `(e_x, e_v, e_s)` and the representation is canonical:
/// no stored coefficient is ever zero.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct LaurentPoly {
    terms: BTreeMap<Exponent, BigInt>,
}

fn add_exp(a: Exponent, b: Exponent) -> Exponent {
    [a[0] + b[0], a[1] + b[1], a[2] + b[2]]
}

fn sub_exp(a: Exponent, b: Exponent) -> Exponent {
    [a[0] - b[0], a[1] - b[1], a[2] - b[2]]
}

impl LaurentPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(1)
    }

    pub fn constant(c: i64) -> Self {
        Self::monomial(BigInt::from(c), [0, 0, 0])
    }

    pub fn monomial(coeff: BigInt, exp: Exponent) -> Self {
        let mut terms = BTreeMap::new();
        if !coeff.is_zero() {
            terms.insert(exp, coeff);
        }
        Self { terms }
    }

    /// `var^e`.
    pub fn var_pow(var: Var, e: i32) -> Self {
        let mut exp = [0; 3];
        exp[var.index()] = e;
        Self::monomial(BigInt::one(), exp)
    }

    pub fn x() -> Self {
        Self::var_pow(Var::X, 1)
    }

    pub fn v() -> Self {
        Self::var_pow(Var::V, 1)
    }

    pub fn s() -> Self {
        Self::var_pow(Var::S, 1)
    }

    /// `s - s^-1`, the coefficient of the smoothing in the skein relation.
    pub fn z() -> Self {
        Self::var_pow(Var::S, 1) - Self::var_pow(Var::S, -1)
    }

    pub fn from_terms<I: IntoIterator<Item = (Exponent, BigInt)>>(it: I) -> Self {
        let mut p = Self::zero();
        for (e, c) in it {
            p.add_term(e, c);
        }
        p
    }

    pub fn add_term(&mut self, exp: Exponent, coeff: BigInt) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry(exp) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(coeff);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += coeff;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.get(&[0, 0, 0]).is_some_and(|c| c.is_one())
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Exponent, &BigInt)> {
        self.terms.iter()
    }

    pub fn coeff(&self, exp: &Exponent) -> BigInt {
        self.terms.get(exp).cloned().unwrap_or_default()
    }

    /// Lexicographically greatest term.
    pub fn leading(&self) -> Option<(&Exponent, &BigInt)> {
        self.terms.iter().next_back()
    }

    /// Single term, if the polynomial is a monomial.
    pub fn as_monomial(&self) -> Option<(Exponent, &BigInt)> {
        if self.terms.len() == 1 {
            self.terms.iter().next().map(|(e, c)| (*e, c))
        } else {
            None
        }
    }

    pub fn as_integer(&self) -> Option<BigInt> {
        if self.is_zero() {
            return Some(BigInt::zero());
        }
        match self.as_monomial() {
            Some(([0, 0, 0], c)) => Some(c.clone()),
            _ => None,
        }
    }

    /// Per-variable minimum and maximum exponents; `None` for zero.
    pub fn exponent_bounds(&self) -> Option<(Exponent, Exponent)> {
        let mut it = self.terms.keys();
        let first = *it.next()?;
        let (mut lo, mut hi) = (first, first);
        for e in it {
            for k in 0..3 {
                lo[k] = lo[k].min(e[k]);
                hi[k] = hi[k].max(e[k]);
            }
        }
        Some((lo, hi))
    }

    /// Multiply by the monomial `x^a v^b s^c`.
    pub fn shift(&self, exp: Exponent) -> Self {
        Self {
            terms: self.terms.iter().map(|(e, c)| (add_exp(*e, exp), c.clone())).collect(),
        }
    }

    pub fn scale(&self, k: &BigInt) -> Self {
        if k.is_zero() {
            return Self::zero();
        }
        Self {
            terms: self.terms.iter().map(|(e, c)| (*e, c * k)).collect(),
        }
    }

    /// Gcd of the integer coefficients (zero for the zero polynomial).
    pub fn content(&self) -> BigInt {
        self.terms.values().fold(BigInt::zero(), |g, c| g.gcd(c))
    }

    /// Divide every coefficient by `k`; caller guarantees divisibility.
    pub(crate) fn div_integer_unchecked(&self, k: &BigInt) -> Self {
        Self {
            terms: self.terms.iter().map(|(e, c)| (*e, c / k)).collect(),
        }
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = Self::one();
        let mut base = self.clone();
        let mut n = n;
        while n > 0 {
            if n & 1 == 1 {
                acc = &acc * &base;
            }
            n >>= 1;
            if n > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Substitute `var -> var^-1` for every variable flagged in `mask`
    /// (indexed x, v, s).
    pub fn invert_vars(&self, mask: [bool; 3]) -> Self {
        Self {
            terms: self
                .terms
                .iter()
                .map(|(e, c)| {
                    let mut e = *e;
                    for k in 0..3 {
                        if mask[k] {
                            e[k] = -e[k];
                        }
                    }
                    (e, c.clone())
                })
                .collect(),
        }
    }

    /// Substitute `var -> value` for a Laurent monomial or polynomial value
    /// of a single variable. Used for specializations like `x = v`.
    pub fn substitute(&self, var: Var, value: &LaurentPoly) -> Self {
        let k = var.index();
        let inv = if value.as_monomial().is_some() {
            let (e, c) = value.as_monomial().unwrap();
            if c.abs().is_one() {
                Some(LaurentPoly::monomial(c.clone(), [-e[0], -e[1], -e[2]]))
            } else {
                None
            }
        } else {
            None
        };
        let mut out = Self::zero();
        for (e, c) in &self.terms {
            let mut rest = *e;
            rest[k] = 0;
            let factor = if e[k] >= 0 {
                value.pow(e[k] as u32)
            } else {
                inv.as_ref()
                    .expect("negative power substitution requires a unit monomial")
                    .pow((-e[k]) as u32)
            };
            out += &(&LaurentPoly::monomial(c.clone(), rest) * &factor);
        }
        out
    }

    /// Exact quotient `self / d` in the Laurent ring, or `None` when `d`
    /// does not divide `self`.
    ///
    /// Lexicographic leading-term division; the quotient's exponents are
    /// confined to the box `[lo(self)-lo(d), hi(self)-hi(d)]`, which bounds
    /// the loop.
    pub fn div_exact(&self, d: &LaurentPoly) -> Option<LaurentPoly> {
        if d.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(Self::zero());
        }
        if let Some((de, dc)) = d.as_monomial() {
            let mut out = BTreeMap::new();
            for (e, c) in &self.terms {
                let (q, r) = c.div_rem(dc);
                if !r.is_zero() {
                    return None;
                }
                out.insert(sub_exp(*e, de), q);
            }
            return Some(Self { terms: out });
        }
        let (alo, ahi) = self.exponent_bounds()?;
        let (dlo, dhi) = d.exponent_bounds()?;
        let qlo = sub_exp(alo, dlo);
        let qhi = sub_exp(ahi, dhi);
        if (0..3).any(|k| qlo[k] > qhi[k]) {
            return None;
        }
        let (lde, ldc) = d.leading().map(|(e, c)| (*e, c.clone()))?;
        let mut rem = self.clone();
        let mut quot = Self::zero();
        while let Some((re, rc)) = rem.leading().map(|(e, c)| (*e, c.clone())) {
            let qe = sub_exp(re, lde);
            if (0..3).any(|k| qe[k] < qlo[k] || qe[k] > qhi[k]) {
                return None;
            }
            let (qc, r) = rc.div_rem(&ldc);
            if !r.is_zero() {
                return None;
            }
            for (e, c) in &d.terms {
                rem.add_term(add_exp(*e, qe), -(c * &qc));
            }
            quot.add_term(qe, qc);
        }
        Some(quot)
    }

    /// Evaluate at integer points modulo a prime.
    pub fn eval_mod(&self, point: [u64; 3], p: u64) -> u64 {
        let inv = |a: u64| mod_pow(a, p - 2, p);
        let mut acc: u64 = 0;
        for (e, c) in &self.terms {
            let mut t = {
                let r = c.mod_floor(&BigInt::from(p));
                let (_, digits) = r.to_u64_digits();
                digits.first().copied().unwrap_or(0)
            };
            for k in 0..3 {
                let base = if e[k] >= 0 { point[k] } else { inv(point[k]) };
                let f = mod_pow(base, e[k].unsigned_abs() as u64, p);
                t = mul_mod(t, f, p);
            }
            acc = (acc + t) % p;
        }
        acc
    }
}

pub(crate) fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

pub(crate) fn mod_pow(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1 % p;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = mul_mod(acc, b, p);
        }
        b = mul_mod(b, b, p);
        e >>= 1;
    }
    acc
}

impl From<i64> for LaurentPoly {
    fn from(c: i64) -> Self {
        Self::constant(c)
    }
}

impl AddAssign<&LaurentPoly> for LaurentPoly {
    fn add_assign(&mut self, rhs: &LaurentPoly) {
        for (e, c) in &rhs.terms {
            self.add_term(*e, c.clone());
        }
    }
}

impl SubAssign<&LaurentPoly> for LaurentPoly {
    fn sub_assign(&mut self, rhs: &LaurentPoly) {
        for (e, c) in &rhs.terms {
            self.add_term(*e, -c);
        }
    }
}

impl Add<&LaurentPoly> for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Sub<&LaurentPoly> for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Mul<&LaurentPoly> for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        let (small, large) = if self.len() <= rhs.len() { (self, rhs) } else { (rhs, self) };
        let mut out = LaurentPoly::zero();
        for (ea, ca) in &small.terms {
            for (eb, cb) in &large.terms {
                out.add_term(add_exp(*ea, *eb), ca * cb);
            }
        }
        out
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly {
            terms: self.terms.iter().map(|(e, c)| (*e, -c)).collect(),
        }
    }
}

macro_rules! forward_owned {
    ($t:ty, $tr:ident, $m:ident) => {
        impl $tr<$t> for $t {
            type Output = $t;
            fn $m(self, rhs: $t) -> $t {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&$t> for $t {
            type Output = $t;
            fn $m(self, rhs: &$t) -> $t {
                (&self).$m(rhs)
            }
        }
        impl $tr<$t> for &$t {
            type Output = $t;
            fn $m(self, rhs: $t) -> $t {
                self.$m(&rhs)
            }
        }
    };
}
pub(crate) use forward_owned;

forward_owned!(LaurentPoly, Add, add);
forward_owned!(LaurentPoly, Sub, sub);
forward_owned!(LaurentPoly, Mul, mul);

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        -&self
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s() -> LaurentPoly {
        LaurentPoly::s()
    }

    fn sinv() -> LaurentPoly {
        LaurentPoly::var_pow(Var::S, -1)
    }

    #[test]
    fn difference_of_squares() {
        let lhs = (s() - sinv()) * (s() + sinv());
        let rhs = LaurentPoly::var_pow(Var::S, 2) - LaurentPoly::var_pow(Var::S, -2);
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn zero_coefficients_are_dropped() {
        let p = s() - s();
        assert!(p.is_zero());
        assert_eq!(p.len(), 0);
    }

    #[test]
    fn exact_division() {
        let a = LaurentPoly::var_pow(Var::S, 2) - LaurentPoly::var_pow(Var::S, -2);
        let q = a.div_exact(&LaurentPoly::z()).unwrap();
        assert_eq!(q, s() + sinv());
        assert!(s().div_exact(&(s() + LaurentPoly::one())).is_none());
        let v = LaurentPoly::v();
        let prod = (&v - &s()) * (&v + &LaurentPoly::x()) * LaurentPoly::constant(3);
        assert_eq!(prod.div_exact(&(&v - &s())).unwrap(), (&v + &LaurentPoly::x()).scale(&3.into()));
        assert!(LaurentPoly::constant(3).div_exact(&LaurentPoly::constant(2)).is_none());
    }

    #[test]
    fn substitution_and_inversion() {
        let p = LaurentPoly::x() * LaurentPoly::var_pow(Var::S, -2);
        let q = p.substitute(Var::X, &LaurentPoly::v());
        assert_eq!(q, LaurentPoly::v() * LaurentPoly::var_pow(Var::S, -2));
        assert_eq!(p.invert_vars([false, false, true]), LaurentPoly::x() * LaurentPoly::var_pow(Var::S, 2));
    }

    #[test]
    fn modular_evaluation() {
        let p = LaurentPoly::z();
        // s = 2 mod 7: 2 - 4 = -2 = 5
        assert_eq!(p.eval_mod([1, 1, 2], 7), 5);
    }
}
