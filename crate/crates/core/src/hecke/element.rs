use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::coeff::{LaurentPoly, RationalFunction, Var};
use crate::error::{Error, Result};

use super::perm::Perm;

/// `x (s - s^-1)`, the linear coefficient of the quadratic relation.
pub(crate) fn quad_linear() -> LaurentPoly {
    &LaurentPoly::x() * &LaurentPoly::z()
}

/// `x^2`, the constant coefficient of the quadratic relation.
pub(crate) fn quad_constant() -> LaurentPoly {
    LaurentPoly::var_pow(Var::X, 2)
}

/// An element of `H_n`, written in the positive permutation braid basis.
#[derive(Clone, PartialEq, Eq)]
pub struct HeckeElement {
    n: usize,
    coeffs: BTreeMap<Perm, RationalFunction>,
}

impl HeckeElement {
    pub fn zero(n: usize) -> Self {
        Self { n, coeffs: BTreeMap::new() }
    }

    pub fn one(n: usize) -> Self {
        Self::basis(Perm::identity(n))
    }

    /// The positive permutation braid `T_π`.
    pub fn basis(p: Perm) -> Self {
        let n = p.n();
        let mut coeffs = BTreeMap::new();
        coeffs.insert(p, RationalFunction::one());
        Self { n, coeffs }
    }

    /// `σ_i ∈ H_n`, 1-based.
    pub fn generator(i: usize, n: usize) -> Result<Self> {
        Ok(Self::basis(Perm::transposition(i, n)?))
    }

    /// `σ_i^{-1} = x^-2 σ_i - x^-1 (s - s^-1)`.
    pub fn generator_inverse(i: usize, n: usize) -> Result<Self> {
        let mut e = Self::zero(n);
        e.add_term(Perm::transposition(i, n)?, LaurentPoly::var_pow(Var::X, -2).into());
        let lin = &LaurentPoly::var_pow(Var::X, -1) * &LaurentPoly::z();
        e.add_term(Perm::identity(n), (-lin).into());
        Ok(e)
    }

    /// `T_π^{-1}`: the reduced word reversed, every letter inverted.
    pub fn basis_inverse(p: &Perm) -> Self {
        let n = p.n();
        let mut e = Self::one(n);
        for &i in p.reduced_word().iter().rev() {
            e = e.mul(&Self::generator_inverse(i, n).expect("letter of a reduced word")).expect("same n");
        }
        e
    }

    pub fn scalar(n: usize, c: RationalFunction) -> Self {
        let mut e = Self::zero(n);
        e.add_term(Perm::identity(n), c);
        e
    }

    pub fn from_terms<I: IntoIterator<Item = (Perm, RationalFunction)>>(n: usize, terms: I) -> Result<Self> {
        let mut e = Self::zero(n);
        for (p, c) in terms {
            if p.n() != n {
                return Err(Error::StrandMismatch(n, p.n()));
            }
            e.add_term(p, c);
        }
        Ok(e)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Perm, &RationalFunction)> {
        self.coeffs.iter()
    }

    pub fn coeff(&self, p: &Perm) -> RationalFunction {
        self.coeffs.get(p).cloned().unwrap_or_else(RationalFunction::zero)
    }

    /// Coefficient of the identity braid.
    pub fn constant_term(&self) -> RationalFunction {
        self.coeff(&Perm::identity(self.n))
    }

    pub fn add_term(&mut self, p: Perm, c: RationalFunction) {
        debug_assert_eq!(p.n(), self.n);
        if c.is_zero() {
            return;
        }
        match self.coeffs.get_mut(&p) {
            Some(old) => {
                let sum = &*old + &c;
                if sum.is_zero() {
                    self.coeffs.remove(&p);
                } else {
                    *old = sum;
                }
            }
            None => {
                self.coeffs.insert(p, c);
            }
        }
    }

    pub fn scale(&self, c: &RationalFunction) -> Self {
        if c.is_zero() {
            return Self::zero(self.n);
        }
        let coeffs = self.coeffs.iter().map(|(p, a)| (p.clone(), a * c)).collect();
        Self { n: self.n, coeffs }
    }

    pub fn scale_poly(&self, c: &LaurentPoly) -> Self {
        if c.is_zero() {
            return Self::zero(self.n);
        }
        let coeffs = self.coeffs.iter().map(|(p, a)| (p.clone(), a.mul_poly(c))).collect();
        Self { n: self.n, coeffs }
    }

    /// Apply a function to every coefficient, dropping zeros.
    pub fn map_coeffs(&self, f: impl Fn(&RationalFunction) -> RationalFunction) -> Self {
        let mut e = Self::zero(self.n);
        for (p, c) in &self.coeffs {
            e.add_term(p.clone(), f(c));
        }
        e
    }

    /// Whether every coefficient is a Laurent polynomial.
    pub fn polynomial_coefficients(&self) -> Option<BTreeMap<Perm, LaurentPoly>> {
        self.coeffs.iter().map(|(p, c)| c.as_poly().map(|q| (p.clone(), q))).collect()
    }

    fn check_same(&self, other: &Self) -> Result<()> {
        if self.n != other.n {
            return Err(Error::StrandMismatch(self.n, other.n));
        }
        Ok(())
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.check_same(other)?;
        let mut e = self.clone();
        for (p, c) in &other.coeffs {
            e.add_term(p.clone(), c.clone());
        }
        Ok(e)
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        self.try_add(&-other)
    }

    /// `σ_i · self`.
    pub fn left_mul_generator(&self, i: usize) -> Self {
        let lin = quad_linear();
        let con = quad_constant();
        let mut e = Self::zero(self.n);
        for (p, c) in &self.coeffs {
            let q = p.left_mul_generator(i);
            if p.left_ascent(i) {
                e.add_term(q, c.clone());
            } else {
                e.add_term(p.clone(), c.mul_poly(&lin));
                e.add_term(q, c.mul_poly(&con));
            }
        }
        e
    }

    /// `self · σ_i`.
    pub fn right_mul_generator(&self, i: usize) -> Self {
        let lin = quad_linear();
        let con = quad_constant();
        let mut e = Self::zero(self.n);
        for (p, c) in &self.coeffs {
            let q = p.right_mul_generator(i);
            if p.right_ascent(i) {
                e.add_term(q, c.clone());
            } else {
                e.add_term(p.clone(), c.mul_poly(&lin));
                e.add_term(q, c.mul_poly(&con));
            }
        }
        e
    }

    /// The product `self · other`.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check_same(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Self::zero(self.n));
        }
        // T_π · other, built from shorter prefixes: T_{s_i π} b = σ_i (T_π b).
        let mut cache: HashMap<Perm, Self> = HashMap::new();
        cache.insert(Perm::identity(self.n), other.clone());
        let mut out = Self::zero(self.n);
        for (p, c) in &self.coeffs {
            let tb = basis_times(p, &mut cache);
            for (q, d) in &tb.coeffs {
                out.add_term(q.clone(), c * d);
            }
        }
        Ok(out)
    }

    pub fn pow(&self, k: u32) -> Self {
        (0..k).fold(Self::one(self.n), |acc, _| acc.mul(self).expect("same n"))
    }

    /// Algebra embedding `H_k → H_n` placing the strands at `offset..offset+k`.
    pub fn embed(&self, n: usize, offset: usize) -> Result<Self> {
        if offset + self.n > n {
            return Err(Error::OutOfRange(format!("cannot place {} strands at offset {offset} inside {n}", self.n)));
        }
        let mut e = Self::zero(n);
        for (p, c) in &self.coeffs {
            e.add_term(p.embed(n, offset)?, c.clone());
        }
        Ok(e)
    }

    /// The anti-automorphism `T_π ↦ T_{π^-1}` (reverse every braid word).
    pub fn anti_involution(&self) -> Self {
        let coeffs = self.coeffs.iter().map(|(p, c)| (p.inverse(), c.clone())).collect();
        Self { n: self.n, coeffs }
    }

    /// The automorphism `σ_i ↦ σ_{n-i}` (rotate the strands by π).
    pub fn flip(&self) -> Self {
        let coeffs = self.coeffs.iter().map(|(p, c)| (p.flip(), c.clone())).collect();
        Self { n: self.n, coeffs }
    }
}

fn basis_times(p: &Perm, cache: &mut HashMap<Perm, HeckeElement>) -> HeckeElement {
    if let Some(e) = cache.get(p) {
        return e.clone();
    }
    let word = p.reduced_word();
    let i = word[0];
    let shorter = p.left_mul_generator(i);
    let rest = basis_times(&shorter, cache);
    let e = rest.left_mul_generator(i);
    cache.insert(p.clone(), e.clone());
    e
}

impl fmt::Display for HeckeElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self.coeffs.iter().map(|(p, c)| format!("({c})*T{p}")).collect();
        write!(f, "{}", parts.join(" + "))
    }
}

impl fmt::Debug for HeckeElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "H{}[{self}]", self.n)
    }
}

impl Neg for &HeckeElement {
    type Output = HeckeElement;
    fn neg(self) -> HeckeElement {
        let coeffs = self.coeffs.iter().map(|(p, c)| (p.clone(), -c)).collect();
        HeckeElement { n: self.n, coeffs }
    }
}

/// Panics when the strand counts differ; see [`HeckeElement::try_add`].
impl Add<&HeckeElement> for &HeckeElement {
    type Output = HeckeElement;
    fn add(self, rhs: &HeckeElement) -> HeckeElement {
        self.try_add(rhs).expect("strand counts must agree")
    }
}

/// Panics when the strand counts differ; see [`HeckeElement::try_sub`].
impl Sub<&HeckeElement> for &HeckeElement {
    type Output = HeckeElement;
    fn sub(self, rhs: &HeckeElement) -> HeckeElement {
        self.try_sub(rhs).expect("strand counts must agree")
    }
}

/// Panics when the strand counts differ; see [`HeckeElement::mul`].
impl Mul<&HeckeElement> for &HeckeElement {
    type Output = HeckeElement;
    fn mul(self, rhs: &HeckeElement) -> HeckeElement {
        HeckeElement::mul(self, rhs).expect("strand counts must agree")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(i: usize, n: usize) -> HeckeElement {
        HeckeElement::generator(i, n).unwrap()
    }

    fn gi(i: usize, n: usize) -> HeckeElement {
        HeckeElement::generator_inverse(i, n).unwrap()
    }

    #[test]
    fn quadratic_relation() {
        for n in 2..=5 {
            for i in 1..n {
                let lhs = &g(i, n) * &g(i, n);
                let rhs = &g(i, n).scale_poly(&quad_linear()) + &HeckeElement::one(n).scale_poly(&quad_constant());
                assert_eq!(lhs, rhs);
            }
        }
    }

    #[test]
    fn braid_relations() {
        for n in 2..=5usize {
            for i in 1..n {
                for j in 1..n {
                    if i.abs_diff(j) >= 2 {
                        assert_eq!(&g(i, n) * &g(j, n), &g(j, n) * &g(i, n));
                    }
                }
                if i + 1 < n {
                    let a = &(&g(i, n) * &g(i + 1, n)) * &g(i, n);
                    let b = &(&g(i + 1, n) * &g(i, n)) * &g(i + 1, n);
                    assert_eq!(a, b);
                }
            }
        }
    }

    #[test]
    fn inverses() {
        for n in 2..=4 {
            for i in 1..n {
                assert_eq!(&gi(i, n) * &g(i, n), HeckeElement::one(n));
                assert_eq!(&g(i, n) * &gi(i, n), HeckeElement::one(n));
            }
        }
        let sq = &gi(1, 2) * &gi(1, 2);
        let by_hand = {
            // (x^-2 σ - x^-1 z)^2 = x^-4 σ^2 - 2 x^-3 z σ + x^-2 z^2
            let x = |e| LaurentPoly::var_pow(Var::X, e);
            let z = LaurentPoly::z();
            let sigma2 = &g(1, 2) * &g(1, 2);
            let a = sigma2.scale_poly(&x(-4));
            let b = g(1, 2).scale_poly(&(&x(-3) * &z).scale(&2.into()));
            let c = HeckeElement::one(2).scale_poly(&(&x(-2) * &(&z * &z)));
            &(&a - &b) + &c
        };
        assert_eq!(sq, by_hand);
        assert!(HeckeElement::generator_inverse(2, 2).is_err());
    }

    #[test]
    fn length_additive_products() {
        let p = &g(1, 3) * &g(2, 3);
        let expect = HeckeElement::basis(Perm::transposition(1, 3).unwrap().compose(&Perm::transposition(2, 3).unwrap()));
        assert_eq!(p, expect);
        for q in Perm::all(4) {
            let mut e = HeckeElement::one(4);
            for i in q.reduced_word() {
                e = &e * &g(i, 4);
            }
            assert_eq!(e, HeckeElement::basis(q));
        }
    }

    #[test]
    fn right_and_left_generator_actions_agree_with_mul() {
        let a = &(&g(1, 3) + &gi(2, 3)) * &g(1, 3);
        for i in 1..3 {
            assert_eq!(a.left_mul_generator(i), &g(i, 3) * &a);
            assert_eq!(a.right_mul_generator(i), &a * &g(i, 3));
        }
    }

    #[test]
    fn basis_inverses() {
        for p in Perm::all(4) {
            assert_eq!(&HeckeElement::basis(p.clone()) * &HeckeElement::basis_inverse(&p), HeckeElement::one(4));
        }
    }

    #[test]
    fn mismatched_strands() {
        assert!(matches!(HeckeElement::one(2).mul(&HeckeElement::one(3)), Err(Error::StrandMismatch(2, 3))));
        assert!(HeckeElement::one(2).try_add(&HeckeElement::one(3)).is_err());
    }

    #[test]
    fn involutions_respect_products() {
        let a = &(&g(1, 4) + &gi(3, 4)) * &g(2, 4);
        let b = &gi(2, 4) + &(&g(3, 4) * &g(1, 4));
        let ab = &a * &b;
        assert_eq!(ab.anti_involution(), &b.anti_involution() * &a.anti_involution());
        assert_eq!(ab.flip(), &a.flip() * &b.flip());
    }
}
