//! The skein-tree oracle against the Hecke algebra trace.

use homflypt::coeff::{delta, LaurentPoly, RationalFunction, Var};
use homflypt::hecke::{evaluate_braid, markov_trace, BraidWord};
use homflypt::skeinrw::{closure_of_braid, closure_with_meridian, evaluate, evaluate_with, Meridian, Policy};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn corpus(count: usize) -> Vec<BraidWord> {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    (0..count)
        .map(|_| {
            let n = rng.gen_range(1..=4usize);
            let len = if n == 1 { 0 } else { rng.gen_range(0..=7usize) };
            let letters = (0..len)
                .map(|_| {
                    let i = rng.gen_range(1..n) as i32;
                    if rng.gen_bool(0.5) { i } else { -i }
                })
                .collect();
            BraidWord::new(n, letters).unwrap()
        })
        .collect()
}

#[test]
fn trace_matches_oracle_on_corpus() {
    for w in corpus(60) {
        let d = closure_of_braid(&w);
        assert_eq!(evaluate(&d), markov_trace(&evaluate_braid(&w)), "{w}");
    }
}

#[test]
fn selection_policy_is_irrelevant() {
    for w in corpus(40) {
        let d = closure_of_braid(&w);
        assert_eq!(evaluate_with(&d, Policy::FirstWrong), evaluate_with(&d, Policy::LastWrong), "{w}");
    }
    // the literal policy is slow on meridians; keep those small
    for w in corpus(40).into_iter().filter(|w| w.n() <= 2 && w.letters().len() <= 4) {
        let d = closure_with_meridian(&w, Meridian::Reversed);
        assert_eq!(evaluate_with(&d, Policy::FirstWrong), evaluate_with(&d, Policy::LastWrong), "{w}");
    }
}

#[test]
fn single_strand_meridians() {
    let w = BraidWord::new(1, vec![]).unwrap();
    let x2 = |e| RationalFunction::from(LaurentPoly::var_pow(Var::X, e));
    let z: RationalFunction = LaurentPoly::z().into();
    let v: RationalFunction = LaurentPoly::v().into();
    let vinv: RationalFunction = LaurentPoly::var_pow(Var::V, -1).into();
    let rev = &(&x2(-2) * &(&delta() - &(&v * &z))) * &delta();
    assert_eq!(evaluate(&closure_with_meridian(&w, Meridian::Reversed)), rev);
    let same = &(&x2(2) * &(&delta() + &(&vinv * &z))) * &delta();
    assert_eq!(evaluate(&closure_with_meridian(&w, Meridian::Same)), same);
}

fn letters(n: usize, max_len: usize) -> impl Strategy<Value = Vec<i32>> {
    let m = n as i32 - 1;
    prop::collection::vec((1..=m).prop_flat_map(|i| prop_oneof![Just(i), Just(-i)]), 0..=max_len)
}

fn closed(n: usize, w: Vec<i32>, meridian: Option<Meridian>) -> RationalFunction {
    let w = BraidWord::new(n, w).unwrap();
    match meridian {
        Some(m) => evaluate(&closure_with_meridian(&w, m)),
        None => evaluate(&closure_of_braid(&w)),
    }
}

fn spliced(w: &[i32], at: usize, piece: &[i32]) -> Vec<i32> {
    let at = at % (w.len() + 1);
    [&w[..at], piece, &w[at..]].concat()
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 24, ..ProptestConfig::default() })]

    /// Inserting `σ_i σ_i^-1` is a second Reidemeister move on the closed
    /// diagram, with or without a circle around the strands.
    #[test]
    fn second_move_preserves_the_value(
        w in letters(3, 4),
        at in 0usize..8,
        i in 1i32..=2,
        flip in any::<bool>(),
        meridian in prop_oneof![Just(None), Just(Some(Meridian::Reversed)), Just(Some(Meridian::Same))],
    ) {
        let pair = if flip { [-i, i] } else { [i, -i] };
        let longer = spliced(&w, at, &pair);
        prop_assert_eq!(closed(3, longer, meridian), closed(3, w, meridian));
    }

    /// `σ_1 σ_2 σ_1 = σ_2 σ_1 σ_2` (and its mirror) is a third move.
    #[test]
    fn third_move_preserves_the_value(w in letters(3, 3), at in 0usize..8, sign in prop_oneof![Just(1i32), Just(-1)]) {
        let a = spliced(&w, at, &[sign, 2 * sign, sign]);
        let b = spliced(&w, at, &[2 * sign, sign, 2 * sign]);
        prop_assert_eq!(closed(3, a, None), closed(3, b, None));
    }

    /// Cyclic rotation of the word is an isotopy of the closure, and adding
    /// a strand with `σ_n^±1` is a first move costing one kink factor.
    #[test]
    fn rotation_and_stabilization(w in letters(3, 5), k in 0usize..6, positive in any::<bool>()) {
        let base = closed(3, w.clone(), None);
        let k = if w.is_empty() { 0 } else { k % w.len() };
        let rotated = [&w[k..], &w[..k]].concat();
        prop_assert_eq!(closed(3, rotated, None), base.clone());
        let word = BraidWord::new(3, w).unwrap().stabilize(positive);
        let kink: RationalFunction = LaurentPoly::monomial(1.into(), [1, -1, 0]).into();
        let factor = if positive { kink } else { kink.recip().unwrap() };
        prop_assert_eq!(evaluate(&closure_of_braid(&word)), &base * &factor);
    }
}
