//! Building diagrams from a description of how each component passes through
//! a set of signed crossings.

use crate::coeff::RationalFunction;
use crate::error::{Error, Result};
use crate::hecke::{BraidWord, HeckeElement};
use crate::young::YoungDiagram;

use super::diagram::{Crossing, PlanarDiagram, Strand};

/// Collects crossings (by sign) and components (as cyclic passage lists),
/// then numbers the edges along each component in order.
#[derive(Clone, Debug, Default)]
pub struct DiagramBuilder {
    signs: Vec<i8>,
    components: Vec<Vec<(usize, Strand)>>,
}

impl DiagramBuilder {
    pub fn new() -> Self {
        Self::default()
    }

    /// Declare a crossing and return its handle.
    pub fn crossing(&mut self, sign: i8) -> usize {
        self.signs.push(sign);
        self.signs.len() - 1
    }

    /// Add a component passing through the given crossings in order. An empty
    /// list is a crossingless circle.
    pub fn component(&mut self, passages: Vec<(usize, Strand)>) -> &mut Self {
        self.components.push(passages);
        self
    }

    pub fn build(&self) -> Result<PlanarDiagram> {
        let m = self.signs.len();
        let mut ends: Vec<[Option<usize>; 4]> = vec![[None; 4]; m];
        let mut free = 0;
        let mut next_edge = 0usize;
        for comp in &self.components {
            if comp.is_empty() {
                free += 1;
                continue;
            }
            let first = next_edge;
            let len = comp.len();
            for (j, &(k, strand)) in comp.iter().enumerate() {
                if k >= m {
                    return Err(Error::InvalidDiagram(format!("unknown crossing handle {k}")));
                }
                let e_in = first + (j + len - 1) % len;
                let e_out = first + j;
                let (a, b) = match strand {
                    Strand::Under => (0, 2),
                    Strand::Over => (1, 3),
                };
                if ends[k][a].is_some() {
                    return Err(Error::InvalidDiagram(format!("crossing {k} has two {strand:?} passages")));
                }
                ends[k][a] = Some(e_in);
                ends[k][b] = Some(e_out);
            }
            next_edge += len;
        }
        let crossings = ends
            .iter()
            .zip(&self.signs)
            .enumerate()
            .map(|(k, (e, &sign))| match e {
                [Some(iu), Some(io), Some(ou), Some(oo)] => Ok(Crossing { iu: *iu, io: *io, ou: *ou, oo: *oo, sign }),
                _ => Err(Error::InvalidDiagram(format!("crossing {k} needs one over and one under passage"))),
            })
            .collect::<Result<Vec<_>>>()?;
        PlanarDiagram::new(crossings, free)
    }
}

/// Encircling circle around every strand of a braid, placed above the
/// braid letters.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Meridian {
    /// Both crossings with each strand are negative.
    Reversed,
    /// Both crossings with each strand are positive.
    Same,
}

/// Strands run downward from position 1 (left) to `n`; a closing arc on the
/// right returns each bottom end to the top of the same position. In `σ_i`
/// the strand coming from position `i+1` passes over.
pub fn closure_of_braid(w: &BraidWord) -> PlanarDiagram {
    braid_closure_with_meridian(w, None)
}

/// The closure of `w` together with an unknotted circle linking every strand
/// once, just above the letters.
pub fn closure_with_meridian(w: &BraidWord, meridian: Meridian) -> PlanarDiagram {
    braid_closure_with_meridian(w, Some(meridian))
}

fn braid_closure_with_meridian(w: &BraidWord, meridian: Option<Meridian>) -> PlanarDiagram {
    let n = w.n();
    let mut b = DiagramBuilder::new();
    // upper[p] / lower[p]: where the circle's two arcs cross strand position p
    let circle = meridian.map(|m| {
        let sign = match m {
            Meridian::Reversed => -1,
            Meridian::Same => 1,
        };
        let upper: Vec<usize> = (0..n).map(|_| b.crossing(sign)).collect();
        let lower: Vec<usize> = (0..n).map(|_| b.crossing(sign)).collect();
        (m, upper, lower)
    });
    let letters: Vec<usize> = w.letters().iter().map(|&l| b.crossing(l.signum() as i8)).collect();

    let perm = w.strand_permutation();
    let mut seen = vec![false; n];
    for start in 0..n {
        if seen[start] {
            continue;
        }
        let mut passages = Vec::new();
        let mut p = start;
        while !seen[p] {
            seen[p] = true;
            if let Some((_, upper, lower)) = &circle {
                passages.push((upper[p], Strand::Over));
                passages.push((lower[p], Strand::Under));
            }
            let mut pos = p;
            for (k, &l) in w.letters().iter().enumerate() {
                let i = l.unsigned_abs() as usize;
                if pos + 1 == i || pos == i {
                    let from_right = pos == i;
                    let over = from_right == (l > 0);
                    passages.push((letters[k], if over { Strand::Over } else { Strand::Under }));
                    pos = if from_right { i - 1 } else { i };
                }
            }
            debug_assert_eq!(pos, perm[p]);
            p = pos;
        }
        b.component(passages);
    }
    if let Some((m, upper, lower)) = &circle {
        // counterclockwise (lower arc left to right) for the reversed circle
        let mut passages = Vec::with_capacity(2 * n);
        match m {
            Meridian::Reversed => {
                passages.extend((0..n).map(|p| (lower[p], Strand::Over)));
                passages.extend((0..n).rev().map(|p| (upper[p], Strand::Under)));
            }
            Meridian::Same => {
                passages.extend((0..n).rev().map(|p| (lower[p], Strand::Over)));
                passages.extend((0..n).map(|p| (upper[p], Strand::Under)));
            }
        }
        b.component(passages);
    }
    b.build().expect("braid closures are well formed")
}

/// Largest strand count [`decorated_closure`] will expand.
pub const DECORATION_MAX_STRANDS: usize = 6;

/// A closed diagram decorated by a Hecke element: one braid closure per
/// basis element in its expansion, with coefficients.
pub type Decorated = Vec<(RationalFunction, PlanarDiagram)>;

/// The closure of `element` (expanded in positive permutation braids), with
/// an optional circle around all strands.
pub fn decorated_closure(element: &HeckeElement, meridian: Option<Meridian>) -> Result<Decorated> {
    let n = element.n();
    if n > DECORATION_MAX_STRANDS {
        return Err(Error::OutOfRange(format!("decorations are expanded up to {DECORATION_MAX_STRANDS} strands, got {n}")));
    }
    element
        .terms()
        .map(|(p, c)| {
            let word = BraidWord::new(n, p.reduced_word().into_iter().map(|i| i as i32).collect())?;
            Ok((c.clone(), braid_closure_with_meridian(&word, meridian)))
        })
        .collect()
}

/// The closure of `|μ|` strands decorated by `y_μ`, with a circle around
/// them running against their orientation. For `μ = ∅` this is the circle
/// alone.
pub fn reversed_meridian_diagram(mu: &YoungDiagram) -> Result<Decorated> {
    if mu.is_empty() {
        return Ok(vec![(RationalFunction::one(), PlanarDiagram::unlink(1))]);
    }
    decorated_closure(&crate::idempotents::y(mu)?, Some(Meridian::Reversed))
}

/// `Σ c_i evaluate(D_i)`.
pub fn evaluate_decorated(d: &Decorated) -> RationalFunction {
    d.iter().fold(RationalFunction::zero(), |acc, (c, diagram)| &acc + &(c * &super::evaluate(diagram)))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reversed_meridian_examples() {
        use crate::coeff::{delta, LaurentPoly, Var};
        let empty = reversed_meridian_diagram(&YoungDiagram::empty()).unwrap();
        assert_eq!(evaluate_decorated(&empty), delta());
        let one = reversed_meridian_diagram(&YoungDiagram::box1()).unwrap();
        let vz: RationalFunction = (&LaurentPoly::v() * &LaurentPoly::z()).into();
        let expected = (&(&delta() - &vz) * &delta()).mul_poly(&LaurentPoly::var_pow(Var::X, -2));
        assert_eq!(evaluate_decorated(&one), expected);
        let big = HeckeElement::one(DECORATION_MAX_STRANDS + 1);
        assert!(decorated_closure(&big, None).is_err());
    }

    #[test]
    fn builder_errors() {
        let mut b = DiagramBuilder::new();
        let c = b.crossing(1);
        b.component(vec![(c, Strand::Over), (c, Strand::Over)]);
        assert!(b.build().is_err());
        let mut b = DiagramBuilder::new();
        let c = b.crossing(1);
        b.component(vec![(c, Strand::Over)]);
        assert!(b.build().is_err());
    }

    #[test]
    fn kink_from_builder() {
        let mut b = DiagramBuilder::new();
        let c = b.crossing(1);
        b.component(vec![(c, Strand::Over), (c, Strand::Under)]);
        b.component(vec![]);
        let d = b.build().unwrap();
        assert_eq!(d.free_loops(), 1);
        assert_eq!(d.self_writhes(), vec![1, 0]);
    }

    #[test]
    fn braid_closure_shapes() {
        let w: BraidWord = "n=3 s1 s2^-1 s1".parse().unwrap();
        let d = closure_of_braid(&w);
        assert_eq!(d.crossings().len(), 3);
        assert_eq!(d.component_count(), w.closure_components());
        assert_eq!(d.writhe(), w.writhe());
        let empty = closure_of_braid(&BraidWord::new(2, vec![]).unwrap());
        assert_eq!(empty, PlanarDiagram::unlink(2));
        let m = closure_with_meridian(&w, Meridian::Reversed);
        assert_eq!(m.crossings().len(), 9);
        assert_eq!(m.component_count(), w.closure_components() + 1);
        assert!(d.is_planar());
        assert!(m.is_planar());
        assert!(closure_with_meridian(&w, Meridian::Same).is_planar());
    }
}
