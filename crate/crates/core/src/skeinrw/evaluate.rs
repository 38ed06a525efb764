//! Skein-tree evaluation by switching crossings until the diagram descends.

use std::collections::{BTreeMap, BTreeSet};

use crate::coeff::{delta, LaurentPoly, RationalFunction, Var};

use super::diagram::{rename_edge, Crossing, PlanarDiagram, Strand};

/// How each node of the skein tree is resolved. Both give the same value;
/// having two independent strategies makes that checkable.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum Policy {
    /// Strip curls, choose the stacking order and base points with the
    /// fewest wrong crossings, then resolve the first one.
    #[default]
    FirstWrong,
    /// Stack components by smallest edge, base each at its smallest edge,
    /// and resolve the last wrong crossing. No shortcuts.
    LastWrong,
}

/// `Σ_k p_k δ^k`, kept as polynomials so the tree never divides.
#[derive(Clone, Debug, Default)]
struct DeltaSeries(Vec<LaurentPoly>);

impl DeltaSeries {
    fn term(k: usize, p: LaurentPoly) -> Self {
        let mut v = vec![LaurentPoly::zero(); k + 1];
        v[k] = p;
        DeltaSeries(v)
    }

    fn add_scaled(&mut self, other: &DeltaSeries, c: &LaurentPoly) {
        if self.0.len() < other.0.len() {
            self.0.resize(other.0.len(), LaurentPoly::zero());
        }
        for (a, b) in self.0.iter_mut().zip(&other.0) {
            if !b.is_zero() {
                *a += &(b * c);
            }
        }
    }

    /// Sum over a common denominator `(s - s^-1)^K`.
    fn to_rational(&self) -> RationalFunction {
        let top = self.0.len().saturating_sub(1);
        let dv = &LaurentPoly::var_pow(Var::V, -1) - &LaurentPoly::v();
        let z = LaurentPoly::z();
        let mut num = LaurentPoly::zero();
        for (k, p) in self.0.iter().enumerate() {
            if !p.is_zero() {
                num += &(&(p * &dv.pow(k as u32)) * &z.pow((top - k) as u32));
            }
        }
        RationalFunction::new(num, z.pow(top as u32)).expect("z is nonzero")
    }
}

/// The framed invariant of `d`, with the empty diagram worth 1.
pub fn evaluate(d: &PlanarDiagram) -> RationalFunction {
    evaluate_with(d, Policy::default())
}

pub fn evaluate_with(d: &PlanarDiagram, policy: Policy) -> RationalFunction {
    resolve(d.crossings().to_vec(), d.free_loops(), policy).to_rational()
}

/// Indices of crossings that break the descending condition for the best
/// choice of stacking order and base points.
///
/// Components are stacked (earlier ones on top) and each one is traversed
/// from a base point; a diagram with no wrong crossing is a split union of
/// unknots. Any choice works, so each node picks the one with the fewest
/// wrong crossings, which keeps the skein tree small.
fn wrong_crossings(d: &PlanarDiagram, policy: Policy) -> Vec<usize> {
    let comps = d.components();
    let mut comp_of = BTreeMap::new();
    for (i, c) in comps.iter().enumerate() {
        for &e in &c.edges {
            comp_of.insert(e, i);
        }
    }
    let m = comps.len();
    let mut wrong = Vec::new();

    // self-crossings: best base point per component
    for comp in &comps {
        let len = comp.passages.len();
        let mut best: Option<Vec<usize>> = None;
        let starts: Vec<usize> = match policy {
            Policy::FirstWrong => (0..len).collect(),
            // the literal rule: base point at the smallest edge
            Policy::LastWrong => vec![0],
        };
        for start in starts {
            let mut seen = BTreeSet::new();
            let mut bad = Vec::new();
            for j in 0..len {
                let (k, strand) = comp.passages[(start + j) % len];
                let c = d.crossings()[k];
                if comp_of[&c.iu] != comp_of[&c.io] || !seen.insert(k) {
                    continue;
                }
                if strand == Strand::Under {
                    bad.push(k);
                }
            }
            if best.as_ref().is_none_or(|b| bad.len() < b.len()) {
                best = Some(bad);
            }
        }
        wrong.extend(best.unwrap_or_default());
    }

    // crossings between components: best stacking order
    let mut over_count = vec![vec![0usize; m]; m];
    for c in d.crossings() {
        let (a, b) = (comp_of[&c.io], comp_of[&c.iu]);
        if a != b {
            over_count[a][b] += 1;
        }
    }
    let order = match policy {
        Policy::FirstWrong if m <= 6 => best_stacking(&over_count),
        _ => (0..m).collect(),
    };
    let mut rank = vec![0; m];
    for (r, &c) in order.iter().enumerate() {
        rank[c] = r;
    }
    for (k, c) in d.crossings().iter().enumerate() {
        let (a, b) = (comp_of[&c.io], comp_of[&c.iu]);
        if a != b && rank[a] > rank[b] {
            wrong.push(k);
        }
    }
    wrong.sort_unstable();
    wrong
}

/// The component order (top first) minimizing crossings where a lower
/// component passes over a higher one.
fn best_stacking(over_count: &[Vec<usize>]) -> Vec<usize> {
    let m = over_count.len();
    let mut order: Vec<usize> = (0..m).collect();
    let cost = |o: &[usize]| -> usize {
        let mut total = 0;
        for i in 0..o.len() {
            for j in i + 1..o.len() {
                total += over_count[o[j]][o[i]];
            }
        }
        total
    };
    let mut best = order.clone();
    let mut best_cost = cost(&order);
    // Heap's algorithm over all orders
    let mut stack = vec![0usize; m];
    let mut i = 1;
    while i < m {
        if stack[i] < i {
            if i % 2 == 0 {
                order.swap(0, i);
            } else {
                order.swap(stack[i], i);
            }
            let c = cost(&order);
            if c < best_cost {
                best_cost = c;
                best = order.clone();
            }
            stack[i] += 1;
            i = 1;
        } else {
            stack[i] = 0;
            i += 1;
        }
    }
    best
}

/// Remove curls whose loop edge returns straight to its own crossing,
/// returning the total sign removed.
fn strip_curls(crossings: &mut Vec<Crossing>, loops: &mut usize) -> i64 {
    let mut framing = 0;
    while let Some(k) = crossings.iter().position(|c| c.iu == c.oo || c.io == c.ou) {
        let c = crossings.remove(k);
        framing += c.sign as i64;
        match (c.iu == c.oo, c.io == c.ou) {
            (true, true) => *loops += 1,
            (true, false) => rename_edge(crossings, c.ou, c.io),
            (false, true) => rename_edge(crossings, c.oo, c.iu),
            (false, false) => unreachable!(),
        }
    }
    framing
}

fn framing_power(w: i64) -> LaurentPoly {
    LaurentPoly::monomial(1.into(), [w as i32, -w as i32, 0])
}

fn resolve(mut crossings: Vec<Crossing>, mut loops: usize, policy: Policy) -> DeltaSeries {
    let curls = match policy {
        Policy::FirstWrong => strip_curls(&mut crossings, &mut loops),
        Policy::LastWrong => 0,
    };
    let d = PlanarDiagram::new_unchecked(crossings, loops);
    let wrong = wrong_crossings(&d, policy);
    let pick = match policy {
        Policy::FirstWrong => wrong.first(),
        Policy::LastWrong => wrong.last(),
    };
    let Some(&k) = pick else {
        // descending: a split union of framed unknots
        let writhe: i64 = d.self_writhes().iter().sum();
        return DeltaSeries::term(d.component_count(), framing_power(writhe + curls));
    };
    let c = d.crossings()[k];
    let mut switched = d.crossings().to_vec();
    switched[k] = c.switched();
    let (smoothed, extra) = smooth(d.crossings(), k);

    let x = |e: i32| LaurentPoly::var_pow(Var::X, e);
    let z = LaurentPoly::z();
    let f = framing_power(curls);
    // x^-1 L+ - x L- = z L0
    let (switch_coeff, smooth_coeff) = if c.sign > 0 {
        (&x(2) * &f, &(&x(1) * &z) * &f)
    } else {
        (&x(-2) * &f, -(&(&x(-1) * &z) * &f))
    };
    let mut out = DeltaSeries::default();
    out.add_scaled(&resolve(switched, loops, policy), &switch_coeff);
    out.add_scaled(&resolve(smoothed, loops + extra, policy), &smooth_coeff);
    out
}

/// Oriented smoothing at crossing `k`: incoming under joins outgoing over and
/// incoming over joins outgoing under. Returns the new crossing list and the
/// number of crossingless circles created.
fn smooth(crossings: &[Crossing], k: usize) -> (Vec<Crossing>, usize) {
    let c = crossings[k];
    let mut rest: Vec<Crossing> = crossings.iter().enumerate().filter(|&(j, _)| j != k).map(|(_, c)| *c).collect();
    let mut extra = 0;
    for (e_in, e_out) in [(c.iu, c.oo), (c.io, c.ou)] {
        if e_in == e_out {
            extra += 1;
        } else {
            rename_edge(&mut rest, e_out, e_in);
        }
    }
    (rest, extra)
}

/// `δ^k`, exposed for callers assembling expected values.
pub fn delta_power(k: usize) -> RationalFunction {
    delta().pow(k as i32).expect("delta is nonzero")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeff::framing_factor;
    use crate::hecke::{evaluate_braid, markov_trace, BraidWord};
    use crate::skeinrw::builder::{closure_of_braid, DiagramBuilder};

    fn kink(sign: i8) -> PlanarDiagram {
        let mut b = DiagramBuilder::new();
        let c = b.crossing(sign);
        b.component(vec![(c, Strand::Over), (c, Strand::Under)]);
        b.build().unwrap()
    }

    #[test]
    fn base_values() {
        assert_eq!(evaluate(&PlanarDiagram::empty()), RationalFunction::one());
        assert_eq!(evaluate(&PlanarDiagram::unlink(1)), delta());
        assert_eq!(evaluate(&PlanarDiagram::unlink(3)), delta_power(3));
        let f: RationalFunction = framing_factor().into();
        assert_eq!(evaluate(&kink(1)), &f * &delta());
        assert_eq!(evaluate(&kink(-1)), &f.recip().unwrap() * &delta());
    }

    #[test]
    fn kink_entered_under_first() {
        // same kink, but the base point sits so the under strand comes first
        let mut b = DiagramBuilder::new();
        let c = b.crossing(1);
        b.component(vec![(c, Strand::Under), (c, Strand::Over)]);
        let d = b.build().unwrap();
        let f: RationalFunction = framing_factor().into();
        assert_eq!(evaluate(&d), &f * &delta());
    }

    #[test]
    fn trefoil_matches_trace() {
        let w: BraidWord = "n=2 s1 s1 s1".parse().unwrap();
        let d = closure_of_braid(&w);
        assert_eq!(evaluate(&d), markov_trace(&evaluate_braid(&w)));
        assert_eq!(evaluate_with(&d, Policy::LastWrong), evaluate(&d));
    }

    #[test]
    fn split_unions_multiply() {
        let w: BraidWord = "n=2 s1 s1 s1".parse().unwrap();
        let t = closure_of_braid(&w);
        let k = kink(-1);
        assert_eq!(evaluate(&t.disjoint_union(&k)), &evaluate(&t) * &evaluate(&k));
    }
}
