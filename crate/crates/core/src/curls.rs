//! Encircling strands: the eigenvalues of a strand looping around the cells
//! before it, the full twist, and the scalars of a closed circle around a
//! decorated bundle of strands.
//!
//! Strands follow the row-reading order of the cells. The strand of the cell
//! at row-reading position `p` encircles the `p - 1` strands to its left;
//! as an element of `H_n` that is
//! `J_p = σ_{p-1} ... σ_1 σ_1 ... σ_{p-1}`, the mirror image of
//! [`encircle`]`(n, n - p + 1)` under `σ_k ↦ σ_{n-k}`.

use serde::Serialize;

use crate::coeff::{delta, LaurentPoly, RationalFunction, Var};
use crate::error::{Error, Result};
use crate::hecke::{evaluate_braid, markov_trace, partial_closure, BraidWord, HeckeElement};
use crate::idempotents::{column_element, quasi_idempotent, row_element};
use crate::skeinrw::{decorated_closure, evaluate_decorated, Meridian};
use crate::young::{c_scalar, partitions, Cell, Sign, YoungDiagram};

/// The encircling braid (part a) or its inverse (part b).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Part {
    A,
    B,
}

impl std::str::FromStr for Part {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "a" | "A" => Ok(Part::A),
            "b" | "B" => Ok(Part::B),
            other => Err(Error::Parse(format!("part must be a or b, got {other:?}"))),
        }
    }
}

/// A pure braid in which strand `i` loops once around strands `i+1..=n`.
#[derive(Clone, Debug, PartialEq)]
pub struct EncirclingBraid {
    pub n: usize,
    pub i: usize,
    pub element: HeckeElement,
}

impl EncirclingBraid {
    pub fn new(n: usize, i: usize) -> Result<Self> {
        Ok(EncirclingBraid { n, i, element: encircle(n, i, false)? })
    }
}

fn check_index(n: usize, i: usize) -> Result<()> {
    if i == 0 || i > n {
        return Err(Error::OutOfRange(format!("encircling strand {i} outside 1..={n}")));
    }
    Ok(())
}

/// `(σ_i ... σ_{n-1})(σ_{n-1} ... σ_i)`, or its inverse. Equal to 1 when
/// `i = n`.
pub fn encircle(n: usize, i: usize, inverse: bool) -> Result<HeckeElement> {
    check_index(n, i)?;
    let mut e = HeckeElement::one(n);
    let order: Vec<usize> = (i..n).chain((i..n).rev()).collect();
    if inverse {
        // the inverse reads the same word backwards, so the palindrome
        // survives with each letter inverted
        let inv = |k| HeckeElement::generator_inverse(k, n).expect("k < n");
        for &k in &order {
            e = e.mul(&inv(k))?;
        }
    } else {
        for &k in &order {
            e = e.right_mul_generator(k);
        }
    }
    Ok(e)
}

/// `J_p`: the strand at position `p` looping around strands `1..p`.
fn encircle_left(n: usize, p: usize, inverse: bool) -> Result<HeckeElement> {
    check_index(n, p)?;
    Ok(encircle(n, n - p + 1, inverse)?.flip())
}

/// The cell whose strand encircles in the `i`-th step: the one followed by
/// `i - 1` cells in row-reading order.
pub fn encircling_cell(lambda: &YoungDiagram, i: usize) -> Result<Cell> {
    let n = lambda.size();
    check_index(n, i)?;
    Ok(lambda.cells()[n - i])
}

fn monomial(x: i32, s: i32) -> RationalFunction {
    LaurentPoly::monomial(1.into(), [x, 0, s]).into()
}

/// `x^{2(|λ|-i)} s^{2 cn(c)}` for part a, its inverse for part b.
pub fn encircling_eigenvalue(lambda: &YoungDiagram, i: usize, part: Part) -> Result<RationalFunction> {
    let c = encircling_cell(lambda, i)?;
    let (xe, se) = (2 * (lambda.size() - i) as i32, 2 * c.content());
    Ok(match part {
        Part::A => monomial(xe, se),
        Part::B => monomial(-xe, -se),
    })
}

/// Outcome of checking one eigenvalue exactly inside `H_{|λ|}`.
#[derive(Clone, Debug, Serialize)]
pub struct EigenCheck {
    pub shape: YoungDiagram,
    pub i: usize,
    pub cell: Cell,
    pub part: Part,
    pub eigenvalue: RationalFunction,
    /// `F_λ J G_λ = e F_λ G_λ`, the loop sitting between the symmetrizers.
    pub between: bool,
    /// `J y_λ = e y_λ`.
    pub on_idempotent: bool,
}

impl EigenCheck {
    pub fn holds(&self) -> bool {
        self.between && self.on_idempotent
    }
}

pub fn check_eigenvalue(lambda: &YoungDiagram, i: usize, part: Part) -> Result<EigenCheck> {
    let n = lambda.size();
    let cell = encircling_cell(lambda, i)?;
    let eigenvalue = encircling_eigenvalue(lambda, i, part)?;
    let j = encircle_left(n, n - i + 1, part == Part::B)?;
    let f = row_element(lambda)?;
    let g = column_element(lambda)?;
    let q = quasi_idempotent(lambda)?;
    let between = f.mul(&j)?.mul(&g)? == q.element.scale(&eigenvalue);
    let y = q.idempotent();
    let on_idempotent = j.mul(&y)? == y.scale(&eigenvalue);
    Ok(EigenCheck { shape: lambda.clone(), i, cell, part, eigenvalue, between, on_idempotent })
}

/// Whether the eigenvalue identity holds exactly for `(λ, i, part)`.
pub fn verify_eigenvalue(lambda: &YoungDiagram, i: usize, part: Part) -> bool {
    check_eigenvalue(lambda, i, part).map(|c| c.holds()).unwrap_or(false)
}

/// Every check for every shape of size `1..=max`, both parts.
pub fn eigen_table(max: usize) -> Result<Vec<EigenCheck>> {
    let mut out = Vec::new();
    for m in 1..=max {
        for lambda in partitions(m) {
            for i in 1..=m {
                for part in [Part::A, Part::B] {
                    out.push(check_eigenvalue(&lambda, i, part)?);
                }
            }
        }
    }
    Ok(out)
}

/// `Π_i encircling_eigenvalue(λ, i, a) = x^{n(n-1)} s^{2 Σ cn(c)}`.
pub fn full_twist_factor(lambda: &YoungDiagram) -> Result<RationalFunction> {
    let n = lambda.size();
    if n == 0 {
        return Err(Error::InvalidShape("the full twist needs at least one strand".into()));
    }
    Ok(monomial((n * (n - 1)) as i32, 2 * lambda.content_total()))
}

/// `Δ_n^2 = (σ_1 ... σ_{n-1})^n`.
pub fn full_twist(n: usize) -> Result<HeckeElement> {
    let word: Vec<i32> = (0..n).flat_map(|_| 1..n as i32).collect();
    Ok(evaluate_braid(&BraidWord::new(n, word)?))
}

/// The scalar by which `Δ^2` acts on `y_λ`, or a consistency error when it
/// does not act by a scalar.
pub fn full_twist_action(lambda: &YoungDiagram) -> Result<RationalFunction> {
    let y = quasi_idempotent(lambda)?.idempotent();
    proportionality(&full_twist(lambda.size())?.mul(&y)?, &y)
}

/// `k` with `a = k b`, checked on every coefficient.
fn proportionality(a: &HeckeElement, b: &HeckeElement) -> Result<RationalFunction> {
    let (p, c) = b.terms().next().ok_or_else(|| Error::Consistency("comparison against zero".into()))?;
    let k = a.coeff(p).checked_div(c)?;
    if *a != b.scale(&k) {
        return Err(Error::Consistency("elements are not proportional".into()));
    }
    Ok(k)
}

/// A circle around `|μ|` strands decorated by `y_μ`, oriented against them:
/// `x^{-2|μ|}(δ - v(s - s^-1) Σ_{c∈μ} s^{-2 cn(c)})`.
pub fn meridian_scalar_reversed(mu: &YoungDiagram) -> RationalFunction {
    let z = LaurentPoly::z();
    let v = LaurentPoly::v();
    let correction: RationalFunction = (&(&v * &z) * &mu.content_sum(Sign::Minus)).into();
    let inner = &delta() - &correction;
    inner.mul_poly(&LaurentPoly::var_pow(Var::X, -2 * mu.size() as i32))
}

/// The same-orientation analogue, computed in `H_{|λ|+1}`: an extra strand
/// on the right loops around the `y_λ` strands and is then closed off.
/// Errors if the result is not a multiple of `y_λ`.
pub fn meridian_scalar_same(lambda: &YoungDiagram) -> Result<RationalFunction> {
    let n = lambda.size();
    if n == 0 {
        return Ok(delta());
    }
    let y = quasi_idempotent(lambda)?.idempotent();
    let loop_around = encircle_left(n + 1, n + 1, false)?;
    let closed = partial_closure(&loop_around.mul(&y.embed(n + 1, 0)?)?)?;
    proportionality(&closed, &y)
        .map_err(|_| Error::Consistency(format!("the encircled closure for {lambda} is not a multiple of y")))
}

/// `x^{2|λ|}(δ + c(λ, ∅))`, the value the same-orientation scalar is
/// compared against.
pub fn meridian_same_closed_form(lambda: &YoungDiagram) -> RationalFunction {
    let c: RationalFunction = c_scalar(lambda, &YoungDiagram::empty()).into();
    (&delta() + &c).mul_poly(&LaurentPoly::var_pow(Var::X, 2 * lambda.size() as i32))
}

/// Evaluate with the skein oracle the closure of `y_λ`'s strands with a
/// circle around all of them, expanding `y_λ` in the braid basis.
pub fn oracle_meridian_closure(lambda: &YoungDiagram, meridian: Meridian) -> Result<RationalFunction> {
    let y = quasi_idempotent(lambda)?.idempotent();
    Ok(evaluate_decorated(&decorated_closure(&y, Some(meridian))?))
}

/// Oracle check of a meridian scalar: the circled closure equals the scalar
/// times the trace of `y_λ`.
pub fn oracle_meridian_check(lambda: &YoungDiagram, meridian: Meridian) -> Result<bool> {
    let scalar = match meridian {
        Meridian::Reversed => meridian_scalar_reversed(lambda),
        Meridian::Same => meridian_scalar_same(lambda)?,
    };
    let trace = markov_trace(&quasi_idempotent(lambda)?.idempotent());
    Ok(oracle_meridian_closure(lambda, meridian)? == &scalar * &trace)
}
