//! Symmetrizers, the Young-type idempotents `y_λ`, and the morphisms
//! `α_t`, `β_t` of the tableau basis, all realized inside `H_n`.
//!
//! The cells of `λ` are laid out on strands in row-reading order, so each
//! row is a contiguous block of strands and each column is not.

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use serde::Serialize;

use crate::coeff::{quantum_factorial, LaurentPoly, RationalFunction, Var};
use crate::error::{Error, Result};
use crate::hecke::{HeckeElement, Perm};
use crate::young::{standard_tableaux, StandardTableau, YoungDiagram};

/// `Σ_π c^{-l(π)} T_π` scaled by `s^e`: both symmetrizers, before dividing
/// by `[m]!`.
fn weighted_sum(m: usize, step: &LaurentPoly, s_exp: i32) -> HeckeElement {
    let mut e = HeckeElement::zero(m);
    let pref = LaurentPoly::var_pow(Var::S, s_exp);
    for p in Perm::all(m) {
        let c = &pref * &step.pow(p.length() as u32);
        e.add_term(p, c.into());
    }
    e
}

fn check_positive(n: usize) -> Result<()> {
    if n == 0 {
        return Err(Error::OutOfRange("symmetrizers need n >= 1".into()));
    }
    Ok(())
}

/// `[m]! f_m = s^{-m(m-1)/2} Σ_π (x s^-1)^{-l(π)} T_π`, with Laurent
/// polynomial coefficients.
pub fn f_scaled(m: usize) -> Result<HeckeElement> {
    check_positive(m)?;
    let step = LaurentPoly::monomial(1.into(), [-1, 0, 1]);
    Ok(weighted_sum(m, &step, -((m * (m - 1) / 2) as i32)))
}

/// `[m]! g_m = s^{m(m-1)/2} Σ_π (-x s)^{-l(π)} T_π`.
pub fn g_scaled(m: usize) -> Result<HeckeElement> {
    check_positive(m)?;
    let step = LaurentPoly::monomial(BigInt::from(-1), [-1, 0, -1]);
    Ok(weighted_sum(m, &step, (m * (m - 1) / 2) as i32))
}

fn divide_by_factorial(e: HeckeElement, m: usize) -> HeckeElement {
    let fact = RationalFunction::new(LaurentPoly::one(), quantum_factorial(m as u32)).expect("[m]! is nonzero");
    e.scale(&fact)
}

/// The symmetrizer `f_n`, with `σ_i f_n = x s f_n`.
pub fn f(n: usize) -> Result<HeckeElement> {
    Ok(divide_by_factorial(f_scaled(n)?, n))
}

/// The antisymmetrizer `g_n`, with `g_n σ_i = -x s^-1 g_n`.
pub fn g(n: usize) -> Result<HeckeElement> {
    Ok(divide_by_factorial(g_scaled(n)?, n))
}

/// Idempotency and generator absorption of `f_n` and `g_n`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SymmetrizerReport {
    pub n: usize,
    pub f_idempotent: bool,
    pub g_idempotent: bool,
    /// `σ_i f = f σ_i = x s f` for every `i < n`.
    pub f_absorbs: bool,
    /// `σ_i g = g σ_i = -x s^-1 g` for every `i < n`.
    pub g_absorbs: bool,
}

impl SymmetrizerReport {
    pub fn holds(&self) -> bool {
        self.f_idempotent && self.g_idempotent && self.f_absorbs && self.g_absorbs
    }
}

pub fn symmetrizer_report(n: usize) -> Result<SymmetrizerReport> {
    let (fe, ge) = (f(n)?, g(n)?);
    let xs: RationalFunction = LaurentPoly::monomial(1.into(), [1, 0, 1]).into();
    let neg_xs_inv: RationalFunction = LaurentPoly::monomial(BigInt::from(-1), [1, 0, -1]).into();
    let absorbs = |e: &HeckeElement, k: &RationalFunction| -> Result<bool> {
        let target = e.scale(k);
        for i in 1..n {
            let s = HeckeElement::generator(i, n)?;
            if s.mul(e)? != target || e.mul(&s)? != target {
                return Ok(false);
            }
        }
        Ok(true)
    };
    Ok(SymmetrizerReport {
        n,
        f_idempotent: fe.mul(&fe)? == fe,
        g_idempotent: ge.mul(&ge)? == ge,
        f_absorbs: absorbs(&fe, &xs)?,
        g_absorbs: absorbs(&ge, &neg_xs_inv)?,
    })
}

fn check_nonempty(lambda: &YoungDiagram) -> Result<()> {
    if lambda.is_empty() {
        return Err(Error::InvalidShape("the empty diagram has no strands".into()));
    }
    Ok(())
}

/// `F_λ`: a copy of `[λ_i]! f_{λ_i}` on the strands of each row.
pub fn row_element(lambda: &YoungDiagram) -> Result<HeckeElement> {
    check_nonempty(lambda)?;
    let n = lambda.size();
    let mut e = HeckeElement::one(n);
    let mut offset = 0;
    for &len in lambda.parts() {
        if len > 1 {
            e = e.mul(&f_scaled(len)?.embed(n, offset)?)?;
        }
        offset += len;
    }
    Ok(e)
}

/// The permutation sending each cell's column-reading position to its
/// row-reading position.
pub fn column_to_row(lambda: &YoungDiagram) -> Perm {
    let conj = lambda.conjugate();
    let mut images = vec![0u8; lambda.size()];
    for cell in lambda.cells() {
        let row_pos = lambda.position(cell).expect("cell of λ");
        let col_pos = conj.position(crate::young::Cell { row: cell.col, col: cell.row }).expect("cell of λ^∨");
        images[col_pos] = row_pos as u8;
    }
    Perm::from_one_line(images).expect("bijection between readings")
}

/// `G_λ`: a copy of `[λ^∨_j]! g_{λ^∨_j}` along each column, built on
/// contiguous strands and moved into place by conjugating with the positive
/// permutation braid `T_P`, `P` = [`column_to_row`].
pub fn column_element(lambda: &YoungDiagram) -> Result<HeckeElement> {
    check_nonempty(lambda)?;
    let n = lambda.size();
    let mut stacked = HeckeElement::one(n);
    let mut offset = 0;
    for &height in lambda.conjugate().parts() {
        if height > 1 {
            stacked = stacked.mul(&g_scaled(height)?.embed(n, offset)?)?;
        }
        offset += height;
    }
    let p = column_to_row(lambda);
    let conj = HeckeElement::basis(p.clone());
    let conj_inv = HeckeElement::basis_inverse(&p);
    conj.mul(&stacked)?.mul(&conj_inv)
}

/// `ỹ_λ = F_λ G_λ` together with the `k` such that `ỹ^2 = k ỹ`.
#[derive(Clone, Debug)]
pub struct QuasiIdempotent {
    pub shape: YoungDiagram,
    pub element: HeckeElement,
    pub normalizer: RationalFunction,
}

impl QuasiIdempotent {
    /// `ỹ / k`.
    pub fn idempotent(&self) -> HeckeElement {
        self.element.scale(&self.normalizer.recip().expect("normalizer is nonzero"))
    }
}

/// The scalar `k` with `a^2 = k a`, read off the least basis element in the
/// support and then checked on every coefficient.
pub fn normalizer_of(a: &HeckeElement) -> Result<RationalFunction> {
    let (p, c) = a.terms().next().ok_or_else(|| Error::Consistency("zero element has no normalizer".into()))?;
    let sq = a.mul(a)?;
    let k = sq.coeff(p).checked_div(c)?;
    if k.is_zero() {
        return Err(Error::Consistency("element squares to zero".into()));
    }
    if sq != a.scale(&k) {
        return Err(Error::Consistency("square is not proportional to the element".into()));
    }
    Ok(k)
}

fn quasi_cache() -> &'static Mutex<HashMap<YoungDiagram, Arc<QuasiIdempotent>>> {
    static CACHE: OnceLock<Mutex<HashMap<YoungDiagram, Arc<QuasiIdempotent>>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

/// Build and verify `ỹ_λ`; memoized per shape.
pub fn quasi_idempotent(lambda: &YoungDiagram) -> Result<Arc<QuasiIdempotent>> {
    if let Some(q) = quasi_cache().lock().expect("cache").get(lambda) {
        return Ok(q.clone());
    }
    let element = row_element(lambda)?.mul(&column_element(lambda)?)?;
    let normalizer = normalizer_of(&element).map_err(|e| match e {
        Error::Consistency(why) => Error::Consistency(format!("ỹ for {lambda}: {why}")),
        other => other,
    })?;
    let q = Arc::new(QuasiIdempotent { shape: lambda.clone(), element, normalizer });
    quasi_cache().lock().expect("cache").insert(lambda.clone(), q.clone());
    Ok(q)
}

/// The idempotent `y_λ`.
pub fn y(lambda: &YoungDiagram) -> Result<HeckeElement> {
    Ok(quasi_idempotent(lambda)?.idempotent())
}

/// Which element of the tableau basis.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Side {
    Alpha,
    Beta,
}

#[derive(Clone, Debug)]
pub struct BlanchetMorphism {
    pub tableau: StandardTableau,
    pub side: Side,
    pub element: HeckeElement,
}

/// The permutation `c = s_p ∘ ... ∘ s_{n-1}` moving the last strand to the
/// row-reading position `p` of the cell labeled `n`.
pub fn routing_permutation(t: &StandardTableau) -> Perm {
    let shape = t.shape();
    let n = shape.size();
    let p = shape.position(t.last_cell()).expect("cell of the shape") + 1;
    let mut c = Perm::identity(n);
    for i in (p..n).rev() {
        c = c.left_mul_generator(i);
    }
    c
}

/// `ρ_t = T_c^{-1}` and `ρ_t^{-1} = T_c`: the routing arc passes under the
/// strands it crosses. With the positive braid `T_c` in its place the
/// products `β_t α_t` come out as a nonzero scalar times `y_λ` rather than
/// `y_λ` itself (first seen for the tableau `[[1,3],[2]]`).
pub fn routing_braid(t: &StandardTableau) -> (HeckeElement, HeckeElement) {
    let c = routing_permutation(t);
    (HeckeElement::basis_inverse(&c), HeckeElement::basis(c))
}

fn morphism_cache() -> &'static Mutex<HashMap<(StandardTableau, bool), HeckeElement>> {
    static CACHE: OnceLock<Mutex<HashMap<(StandardTableau, bool), HeckeElement>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

fn morphism(t: &StandardTableau, side: Side) -> Result<HeckeElement> {
    let key = (t.clone(), side == Side::Alpha);
    if let Some(e) = morphism_cache().lock().expect("cache").get(&key) {
        return Ok(e.clone());
    }
    let n = t.size();
    let e = if n == 1 {
        HeckeElement::one(1)
    } else {
        let prev = morphism(&t.restrict()?, side)?.embed(n, 0)?;
        let yl = y(&t.shape())?;
        let (rho, rho_inv) = routing_braid(t);
        match side {
            // α_t = (α_{t'} ⊗ 1) ρ_t y_λ
            Side::Alpha => prev.mul(&rho)?.mul(&yl)?,
            // β_t = y_λ ρ_t^{-1} (β_{t'} ⊗ 1)
            Side::Beta => yl.mul(&rho_inv)?.mul(&prev)?,
        }
    };
    morphism_cache().lock().expect("cache").insert(key, e.clone());
    Ok(e)
}

pub fn alpha(t: &StandardTableau) -> Result<BlanchetMorphism> {
    Ok(BlanchetMorphism { tableau: t.clone(), side: Side::Alpha, element: morphism(t, Side::Alpha)? })
}

pub fn beta(t: &StandardTableau) -> Result<BlanchetMorphism> {
    Ok(BlanchetMorphism { tableau: t.clone(), side: Side::Beta, element: morphism(t, Side::Beta)? })
}

/// How [`basis_rank`] reached its answer.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RankReport {
    pub n: usize,
    pub vectors: usize,
    pub rank: usize,
    /// `"exact"` (fraction-free elimination over the polynomial ring) or
    /// `"modular"` (rank of a specialization, which bounds the true rank
    /// from below and so certifies full rank).
    pub method: String,
}

/// Coefficient rows of `α_t β_τ` over all same-shape pairs.
fn basis_rows(n: usize) -> Result<Vec<Vec<RationalFunction>>> {
    let perms = Perm::all(n);
    let mut rows = Vec::new();
    for lambda in crate::young::partitions(n) {
        let tabs = standard_tableaux(&lambda);
        for t in &tabs {
            let a = alpha(t)?.element;
            for tau in &tabs {
                let b = beta(tau)?.element;
                let prod = a.mul(&b)?;
                rows.push(perms.iter().map(|p| prod.coeff(p)).collect());
            }
        }
    }
    Ok(rows)
}

/// Rank of the `α_t β_τ` family in `H_n`.
///
/// Full rank is certified by one specialization modulo a large prime (a
/// specialization can only lower the rank). If that does not reach `n!`, a
/// second point is tried and then the exact elimination decides.
pub fn basis_rank(n: usize) -> Result<RankReport> {
    check_positive(n)?;
    let rows = basis_rows(n)?;
    let vectors = rows.len();
    let full = rows.first().map_or(0, Vec::len);
    for point in [[3u64, 5, 7], [11, 13, 17]] {
        if let Some(r) = modular_rank(&rows, point) {
            if r == full {
                return Ok(RankReport { n, vectors, rank: r, method: "modular".into() });
            }
        }
    }
    let rank = exact_rank(&rows);
    Ok(RankReport { n, vectors, rank, method: "exact".into() })
}

const PRIME: u64 = 2_147_483_647;

fn modular_rank(rows: &[Vec<RationalFunction>], point: [u64; 3]) -> Option<usize> {
    let mut m: Vec<Vec<u64>> = rows
        .iter()
        .map(|r| r.iter().map(|c| c.eval_mod(point, PRIME)).collect::<Option<Vec<_>>>())
        .collect::<Option<Vec<_>>>()?;
    let cols = m.first().map_or(0, Vec::len);
    let mut rank = 0;
    for col in 0..cols {
        let Some(piv) = (rank..m.len()).find(|&r| m[r][col] != 0) else { continue };
        m.swap(rank, piv);
        let inv = mod_inverse(m[rank][col]);
        let pivot_row = m[rank].clone();
        for (r, row) in m.iter_mut().enumerate() {
            if r != rank && row[col] != 0 {
                let f = (row[col] as u128 * inv as u128 % PRIME as u128) as u64;
                for (entry, &p) in row[col..].iter_mut().zip(&pivot_row[col..]) {
                    let sub = (f as u128 * p as u128 % PRIME as u128) as u64;
                    *entry = (*entry + PRIME - sub) % PRIME;
                }
            }
        }
        rank += 1;
    }
    Some(rank)
}

fn mod_inverse(a: u64) -> u64 {
    let mut result = 1u128;
    let mut base = a as u128;
    let mut e = PRIME - 2;
    while e > 0 {
        if e & 1 == 1 {
            result = result * base % PRIME as u128;
        }
        base = base * base % PRIME as u128;
        e >>= 1;
    }
    result as u64
}

/// Bareiss elimination after clearing each row's denominators.
pub fn exact_rank(rows: &[Vec<RationalFunction>]) -> usize {
    let mut m: Vec<Vec<LaurentPoly>> = rows.iter().map(|r| clear_denominators(r)).collect();
    let rows_n = m.len();
    let cols = m.first().map_or(0, Vec::len);
    let mut rank = 0;
    let mut prev = LaurentPoly::one();
    for col in 0..cols {
        let Some(piv) = (rank..rows_n).find(|&r| !m[r][col].is_zero()) else { continue };
        m.swap(rank, piv);
        for r in rank + 1..rows_n {
            for c in col + 1..cols {
                let num = &(&m[rank][col] * &m[r][c]) - &(&m[r][col] * &m[rank][c]);
                m[r][c] = num.div_exact(&prev).expect("Bareiss quotients are exact");
            }
            m[r][col] = LaurentPoly::zero();
        }
        prev = m[rank][col].clone();
        rank += 1;
    }
    rank
}

fn clear_denominators(row: &[RationalFunction]) -> Vec<LaurentPoly> {
    let mut dens: Vec<LaurentPoly> = Vec::new();
    for c in row {
        if !c.is_zero() && !c.denominator().is_one() && !dens.contains(c.denominator()) {
            dens.push(c.denominator().clone());
        }
    }
    let common = dens.iter().fold(LaurentPoly::one(), |a, d| &a * d);
    row.iter()
        .map(|c| (c.numerator() * &common).div_exact(c.denominator()).expect("denominator divides the product"))
        .collect()
}

/// One line of the per-shape verification table.
#[derive(Clone, Debug, Serialize)]
pub struct ShapeReport {
    pub shape: String,
    pub normalizer: RationalFunction,
    pub idempotent: bool,
    pub tableaux: usize,
    pub orthogonal: bool,
    pub beta_alpha_is_y: bool,
}

/// Verify `y_λ` and the tableau morphisms for every `λ ⊢ n`.
pub fn shape_reports(n: usize) -> Result<Vec<ShapeReport>> {
    let mut out = Vec::new();
    for lambda in crate::young::partitions(n) {
        let q = quasi_idempotent(&lambda)?;
        let yl = q.idempotent();
        let idempotent = yl.mul(&yl)? == yl;
        let tabs = standard_tableaux(&lambda);
        let mut orthogonal = true;
        let mut beta_alpha_is_y = true;
        for t in &tabs {
            let a = alpha(t)?.element;
            for tau in &tabs {
                let prod = beta(tau)?.element.mul(&a)?;
                if tau == t {
                    beta_alpha_is_y &= prod == yl;
                } else {
                    orthogonal &= prod.is_zero();
                }
            }
        }
        out.push(ShapeReport {
            shape: lambda.to_string(),
            normalizer: q.normalizer.clone(),
            idempotent,
            tableaux: tabs.len(),
            orthogonal,
            beta_alpha_is_y,
        });
    }
    Ok(out)
}
