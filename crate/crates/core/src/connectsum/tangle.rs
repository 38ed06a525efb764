//! Four-ended tangles with two antiparallel strands, and the closures used
//! to compare them.
//!
//! The box has ends at its four corners. Strands enter at the top left and
//! the bottom right and leave at the top right and the bottom left. A
//! closure is the complementary tangle outside the box, whose arcs run from
//! the box's exits back to its entries.
//!
//! Relations between tangles are tested by closing both sides with every
//! closure in [`Closure::family`] and evaluating with the skein oracle. The
//! plat and side closures alone already separate the two-dimensional space
//! these tangles span generically; the others add twisted framings and a
//! clasp between the closing arcs.

use serde::Serialize;

use crate::coeff::RationalFunction;
use crate::error::{Error, Result};
use crate::skeinrw::{evaluate, DiagramBuilder, PlanarDiagram, Strand};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum End {
    TopLeft,
    TopRight,
    BottomLeft,
    BottomRight,
}

impl End {
    fn is_entry(self) -> bool {
        matches!(self, End::TopLeft | End::BottomRight)
    }
}

type Passage = (usize, Strand);

/// Crossings by sign, arcs between ends (each as the crossings it passes)
/// and closed loops.
#[derive(Clone, Debug, PartialEq)]
pub struct Tangle {
    signs: Vec<i8>,
    arcs: Vec<(End, End, Vec<Passage>)>,
    loops: Vec<Vec<Passage>>,
}

impl Tangle {
    fn new(signs: Vec<i8>, arcs: Vec<(End, End, Vec<Passage>)>, loops: Vec<Vec<Passage>>) -> Self {
        debug_assert_eq!(arcs.len(), 2);
        Tangle { signs, arcs, loops }
    }

    /// Two vertical strands: down on the left, up on the right.
    pub fn vertical() -> Self {
        Tangle::new(vec![], vec![(End::TopLeft, End::BottomLeft, vec![]), (End::BottomRight, End::TopRight, vec![])], vec![])
    }

    /// A cap joining the top ends and a cup joining the bottom ends.
    pub fn horizontal() -> Self {
        Tangle::new(vec![], vec![(End::TopLeft, End::TopRight, vec![]), (End::BottomRight, End::BottomLeft, vec![])], vec![])
    }

    /// The vertical pair with a counterclockwise circle around both, its
    /// upper arc over the strands and its lower arc under them.
    pub fn encircled() -> Self {
        // crossings: upper-left, upper-right, lower-left, lower-right
        let (ul, ur, ll, lr) = (0, 1, 2, 3);
        Tangle::new(
            vec![1, -1, 1, -1],
            vec![
                (End::TopLeft, End::BottomLeft, vec![(ul, Strand::Under), (ll, Strand::Over)]),
                (End::BottomRight, End::TopRight, vec![(lr, Strand::Over), (ur, Strand::Under)]),
            ],
            vec![vec![(ur, Strand::Over), (ul, Strand::Over), (ll, Strand::Under), (lr, Strand::Under)]],
        )
    }

    /// Glue a closure around this tangle.
    pub fn close(&self, closure: &Closure) -> Result<PlanarDiagram> {
        let outer = &closure.tangle;
        if self.arcs.iter().any(|a| !a.0.is_entry()) || outer.arcs.iter().any(|a| a.0.is_entry()) {
            return Err(Error::InvalidDiagram("tangle and closure ends do not match up".into()));
        }
        let shift = self.signs.len();
        let mut b = DiagramBuilder::new();
        for &s in self.signs.iter().chain(&outer.signs) {
            b.crossing(s);
        }
        let shifted = |p: &[Passage]| p.iter().map(|&(k, s)| (k + shift, s)).collect::<Vec<_>>();
        let mut used = [false; 2];
        for first in 0..2 {
            if used[first] {
                continue;
            }
            let mut passages = Vec::new();
            let mut i = first;
            while !used[i] {
                used[i] = true;
                let (_, exit, inner) = &self.arcs[i];
                passages.extend_from_slice(inner);
                let (_, entry, outside) = outer.arcs.iter().find(|a| a.0 == *exit).expect("every exit has an arc");
                passages.extend(shifted(outside));
                i = self.arcs.iter().position(|a| a.0 == *entry).expect("every entry has an arc");
            }
            b.component(passages);
        }
        for l in &self.loops {
            b.component(l.clone());
        }
        for l in &outer.loops {
            b.component(shifted(l));
        }
        b.build()
    }
}

/// A named tangle outside the box.
#[derive(Clone, Debug, PartialEq)]
pub struct Closure {
    pub name: String,
    tangle: Tangle,
}

impl Closure {
    fn new(name: &str, signs: Vec<i8>, arcs: Vec<(End, End, Vec<Passage>)>) -> Self {
        Closure { name: name.into(), tangle: Tangle::new(signs, arcs, vec![]) }
    }

    /// Cap over the top, cup under the bottom.
    pub fn plat() -> Self {
        Closure::new("plat", vec![], vec![(End::TopRight, End::TopLeft, vec![]), (End::BottomLeft, End::BottomRight, vec![])])
    }

    /// Each side closed around the outside of the box.
    pub fn side() -> Self {
        Closure::new("side", vec![], vec![(End::BottomLeft, End::TopLeft, vec![]), (End::TopRight, End::BottomRight, vec![])])
    }

    /// The plat closure with a curl of the given sign in the cup.
    pub fn plat_with_curl(sign: i8) -> Self {
        let name = if sign > 0 { "plat+curl" } else { "plat-curl" };
        Closure::new(
            name,
            vec![sign],
            vec![(End::TopRight, End::TopLeft, vec![]), (End::BottomLeft, End::BottomRight, vec![(0, Strand::Over), (0, Strand::Under)])],
        )
    }

    /// The side closure with a finger of the left arc hooked around the
    /// right arc: two crossings of the given sign. The finger reaches the
    /// right arc's outer side over the top of the box, and the right arc
    /// meets the finger's returning half first.
    pub fn side_with_clasp(sign: i8) -> Self {
        let name = if sign > 0 { "side+clasp" } else { "side-clasp" };
        let (first, second) = if sign > 0 { (Strand::Over, Strand::Under) } else { (Strand::Under, Strand::Over) };
        let other = |s: Strand| if s == Strand::Over { Strand::Under } else { Strand::Over };
        Closure::new(
            name,
            vec![sign, sign],
            vec![
                (End::BottomLeft, End::TopLeft, vec![(0, first), (1, second)]),
                (End::TopRight, End::BottomRight, vec![(1, other(second)), (0, other(first))]),
            ],
        )
    }

    /// The fixed probe family.
    pub fn family() -> Vec<Closure> {
        vec![
            Closure::plat(),
            Closure::side(),
            Closure::plat_with_curl(1),
            Closure::plat_with_curl(-1),
            Closure::side_with_clasp(1),
            Closure::side_with_clasp(-1),
        ]
    }
}

/// `Σ c_i T_i`.
#[derive(Clone, Debug, Default)]
pub struct TangleCombination(pub Vec<(RationalFunction, Tangle)>);

impl TangleCombination {
    pub fn single(t: Tangle) -> Self {
        TangleCombination(vec![(RationalFunction::one(), t)])
    }

    pub fn closed_value(&self, closure: &Closure) -> Result<RationalFunction> {
        let mut total = RationalFunction::zero();
        for (c, t) in &self.0 {
            total = &total + &(c * &evaluate(&t.close(closure)?));
        }
        Ok(total)
    }
}

/// Both sides of a relation evaluated in one closure.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Probe {
    pub closure: String,
    pub lhs: RationalFunction,
    pub rhs: RationalFunction,
    pub holds: bool,
}

/// Close `lhs` and `rhs` with every closure of the family.
pub fn probe_all(lhs: &TangleCombination, rhs: &TangleCombination) -> Result<Vec<Probe>> {
    Closure::family()
        .iter()
        .map(|c| {
            let (l, r) = (lhs.closed_value(c)?, rhs.closed_value(c)?);
            Ok(Probe { closure: c.name.clone(), holds: l == r, lhs: l, rhs: r })
        })
        .collect()
}
