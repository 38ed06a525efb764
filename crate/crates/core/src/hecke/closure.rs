//! Closing the last strand, and the Markov trace built from it.

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use crate::coeff::{delta, framing_factor, RationalFunction};
use crate::error::{Error, Result};

use super::element::HeckeElement;
use super::perm::Perm;

/// Factor `π = c ∘ ρ` with `c = s_k ∘ ... ∘ s_{n-1}` and `ρ` fixing the last
/// point; then `T_π = T_u σ_{n-1} T_ρ` with `u = s_k ∘ ... ∘ s_{n-2}`.
/// Returns `(u, ρ)` restricted to `n-1` points, or `None` when `π` fixes the
/// last point.
fn left_coset_split(p: &Perm) -> Option<(Perm, Perm)> {
    let n = p.n();
    let k = p.apply(n - 1) + 1;
    if k == n {
        return None;
    }
    // c^-1 ∘ π: apply s_{n-1}, ..., s_k on the left in turn
    let mut rho = p.clone();
    for i in k..n {
        rho = rho.left_mul_generator(i);
    }
    let mut u = Perm::identity(n - 1);
    for i in (k..n - 1).rev() {
        u = u.left_mul_generator(i);
    }
    Some((u, rho.restrict().expect("ρ fixes the last point")))
}

fn closure_of_basis(p: &Perm) -> HeckeElement {
    match left_coset_split(p) {
        None => HeckeElement::basis(p.restrict().expect("fixed point")).scale(&delta()),
        Some((u, rho)) => {
            let prod = HeckeElement::basis(u).mul(&HeckeElement::basis(rho)).expect("same n");
            prod.scale_poly(&framing_factor())
        }
    }
}

/// Close the last strand: `H_n → H_{n-1}`, with `a ↦ δ a` on `H_{n-1}` and
/// `u σ_{n-1} w ↦ x v^-1 u w`.
pub fn partial_closure(a: &HeckeElement) -> Result<HeckeElement> {
    let n = a.n();
    if n < 2 {
        return Err(Error::OutOfRange(format!("partial closure needs n >= 2, got {n}")));
    }
    let mut out = HeckeElement::zero(n - 1);
    for (p, c) in a.terms() {
        for (q, d) in closure_of_basis(p).terms() {
            out.add_term(q.clone(), c * d);
        }
    }
    Ok(out)
}

/// The same map computed through right cosets, `T_π = T_w σ_{n-1} T_u`,
/// obtained by conjugating with the anti-involution `T_π ↦ T_{π^-1}`.
pub fn partial_closure_right(a: &HeckeElement) -> Result<HeckeElement> {
    Ok(partial_closure(&a.anti_involution())?.anti_involution())
}

type TraceTable = HashMap<Perm, RationalFunction>;

fn trace_tables() -> &'static Mutex<HashMap<usize, Arc<TraceTable>>> {
    static TABLES: OnceLock<Mutex<HashMap<usize, Arc<TraceTable>>>> = OnceLock::new();
    TABLES.get_or_init(|| Mutex::new(HashMap::new()))
}

/// `tr(T_π)` for every `π ∈ S_n`, memoized per `n`.
fn trace_table(n: usize) -> Arc<TraceTable> {
    if let Some(t) = trace_tables().lock().expect("trace cache").get(&n) {
        return t.clone();
    }
    let table: TraceTable = if n == 1 {
        std::iter::once((Perm::identity(1), delta())).collect()
    } else {
        let lower = trace_table(n - 1);
        Perm::all(n)
            .into_iter()
            .map(|p| {
                let closed = closure_of_basis(&p);
                let mut t = RationalFunction::zero();
                for (q, c) in closed.terms() {
                    t = &t + &(c * &lower[q]);
                }
                (p, t)
            })
            .collect()
    };
    let table = Arc::new(table);
    trace_tables().lock().expect("trace cache").insert(n, table.clone());
    table
}

/// The framed invariant of the closure: close strands one at a time down to
/// `H_1`, then close the last strand into a circle worth `δ`.
pub fn markov_trace(a: &HeckeElement) -> RationalFunction {
    if a.n() == 0 {
        return a.constant_term();
    }
    let table = trace_table(a.n());
    let mut t = RationalFunction::zero();
    for (p, c) in a.terms() {
        t = &t + &(c * &table[p]);
    }
    t
}

/// Markov trace by literally iterating [`partial_closure`]; slower, kept as a
/// cross-check for the memoized table.
pub fn markov_trace_iterated(a: &HeckeElement) -> RationalFunction {
    let mut e = a.clone();
    while e.n() > 1 {
        e = partial_closure(&e).expect("n >= 2");
    }
    &e.constant_term() * &delta()
}
