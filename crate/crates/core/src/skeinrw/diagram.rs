use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// One crossing: the four incident edge ends, named by role, and the sign.
///
/// `iu`/`ou` are the incoming and outgoing ends of the under strand, `io`/`oo`
/// those of the over strand. The sign is stored explicitly because role-named
/// ends carry no rotational information.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Crossing {
    pub iu: usize,
    pub io: usize,
    pub ou: usize,
    pub oo: usize,
    pub sign: i8,
}

impl Crossing {
    /// The same crossing with over and under exchanged.
    pub fn switched(self) -> Self {
        Crossing { iu: self.io, io: self.iu, ou: self.oo, oo: self.ou, sign: -self.sign }
    }
}

/// An oriented link diagram with blackboard framing.
///
/// Each edge runs from the outgoing end of one crossing to an incoming end of
/// the next one along the orientation. Crossingless circles are kept as a
/// bare count. Planarity of the underlying graph is the caller's
/// responsibility; every diagram built by this crate is planar.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
pub struct PlanarDiagram {
    crossings: Vec<Crossing>,
    free_loops: usize,
}

/// Which end of a crossing an edge enters.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Strand {
    Over,
    Under,
}

/// A component as the cyclic list of its edges, starting at the smallest id.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Component {
    pub edges: Vec<usize>,
    /// `(crossing index, strand)` for each edge's terminal end.
    pub passages: Vec<(usize, Strand)>,
}

impl PlanarDiagram {
    pub fn new(crossings: Vec<Crossing>, free_loops: usize) -> Result<Self> {
        let d = Self { crossings, free_loops };
        d.validate()?;
        Ok(d)
    }

    pub(crate) fn new_unchecked(crossings: Vec<Crossing>, free_loops: usize) -> Self {
        Self { crossings, free_loops }
    }

    pub fn empty() -> Self {
        Self::default()
    }

    /// `k` disjoint crossingless circles.
    pub fn unlink(k: usize) -> Self {
        Self { crossings: vec![], free_loops: k }
    }

    pub fn crossings(&self) -> &[Crossing] {
        &self.crossings
    }

    pub fn free_loops(&self) -> usize {
        self.free_loops
    }

    pub fn validate(&self) -> Result<()> {
        let mut incoming: BTreeMap<usize, usize> = BTreeMap::new();
        let mut outgoing: BTreeMap<usize, usize> = BTreeMap::new();
        for (k, c) in self.crossings.iter().enumerate() {
            if c.sign != 1 && c.sign != -1 {
                return Err(Error::InvalidDiagram(format!("crossing {k} has sign {}", c.sign)));
            }
            for e in [c.iu, c.io] {
                if incoming.insert(e, k).is_some() {
                    return Err(Error::InvalidDiagram(format!("edge {e} enters two crossing ends")));
                }
            }
            for e in [c.ou, c.oo] {
                if outgoing.insert(e, k).is_some() {
                    return Err(Error::InvalidDiagram(format!("edge {e} leaves two crossing ends")));
                }
            }
        }
        let ins: BTreeSet<_> = incoming.keys().collect();
        let outs: BTreeSet<_> = outgoing.keys().collect();
        if ins != outs {
            let bad = ins.symmetric_difference(&outs).next().expect("nonempty difference");
            return Err(Error::InvalidDiagram(format!("edge {bad} has only one end")));
        }
        Ok(())
    }

    /// Edge id → (crossing index, strand) of the end it enters.
    fn heads(&self) -> BTreeMap<usize, (usize, Strand)> {
        let mut m = BTreeMap::new();
        for (k, c) in self.crossings.iter().enumerate() {
            m.insert(c.iu, (k, Strand::Under));
            m.insert(c.io, (k, Strand::Over));
        }
        m
    }

    /// Components through crossings, ordered by smallest edge id. Free loops
    /// are not listed here; they come after these in the global numbering.
    pub fn components(&self) -> Vec<Component> {
        let heads = self.heads();
        let mut seen = BTreeSet::new();
        let mut out = Vec::new();
        for &start in heads.keys() {
            if seen.contains(&start) {
                continue;
            }
            let mut edges = Vec::new();
            let mut passages = Vec::new();
            let mut e = start;
            while seen.insert(e) {
                let (k, strand) = heads[&e];
                edges.push(e);
                passages.push((k, strand));
                let c = self.crossings[k];
                e = match strand {
                    Strand::Under => c.ou,
                    Strand::Over => c.oo,
                };
            }
            out.push(Component { edges, passages });
        }
        out
    }

    /// Total number of components, free loops included.
    pub fn component_count(&self) -> usize {
        self.components().len() + self.free_loops
    }

    /// Component index of every edge.
    pub fn edge_components(&self) -> BTreeMap<usize, usize> {
        let mut m = BTreeMap::new();
        for (i, comp) in self.components().iter().enumerate() {
            for &e in &comp.edges {
                m.insert(e, i);
            }
        }
        m
    }

    pub fn writhe(&self) -> i64 {
        self.crossings.iter().map(|c| c.sign as i64).sum()
    }

    /// Sum of the signs of crossings with both strands on one component.
    pub fn self_writhes(&self) -> Vec<i64> {
        let comp = self.edge_components();
        let mut w = vec![0i64; self.components().len()];
        for c in &self.crossings {
            if comp[&c.iu] == comp[&c.io] {
                w[comp[&c.iu]] += c.sign as i64;
            }
        }
        w.extend(std::iter::repeat_n(0, self.free_loops));
        w
    }

    /// Delete one component (0-based, free loops numbered last), keeping the
    /// other strands as they were.
    pub fn remove_component(&self, id: usize) -> Result<Self> {
        let comps = self.components();
        if id >= comps.len() + self.free_loops {
            return Err(Error::OutOfRange(format!("component {id} of {}", comps.len() + self.free_loops)));
        }
        if id >= comps.len() {
            return Ok(Self { crossings: self.crossings.clone(), free_loops: self.free_loops - 1 });
        }
        let doomed: BTreeSet<usize> = comps[id].edges.iter().copied().collect();
        let mut crossings = self.crossings.clone();
        let mut k = 0;
        while k < crossings.len() {
            let c = crossings[k];
            let under_gone = doomed.contains(&c.iu);
            let over_gone = doomed.contains(&c.io);
            if !under_gone && !over_gone {
                k += 1;
                continue;
            }
            crossings.remove(k);
            // reconnect the surviving strand straight through
            let surviving = if !under_gone {
                Some((c.iu, c.ou))
            } else if !over_gone {
                Some((c.io, c.oo))
            } else {
                None
            };
            if let Some((e_in, e_out)) = surviving {
                rename_edge(&mut crossings, e_out, e_in);
            }
        }
        let mut d = Self { crossings, free_loops: self.free_loops };
        // components that lost every crossing become free loops
        let before = comps.len() - 1;
        let after = d.components().len();
        d.free_loops += before - after;
        Ok(d)
    }

    /// Disjoint union; edge ids of `other` are shifted past ours.
    pub fn disjoint_union(&self, other: &Self) -> Self {
        let shift = self.max_edge().map_or(0, |m| m + 1);
        let mut crossings = self.crossings.clone();
        crossings.extend(other.crossings.iter().map(|c| Crossing {
            iu: c.iu + shift,
            io: c.io + shift,
            ou: c.ou + shift,
            oo: c.oo + shift,
            sign: c.sign,
        }));
        Self { crossings, free_loops: self.free_loops + other.free_loops }
    }

    /// Reverse the orientation of every component.
    pub fn reversed(&self) -> Self {
        let crossings =
            self.crossings.iter().map(|c| Crossing { iu: c.ou, io: c.oo, ou: c.iu, oo: c.io, sign: c.sign }).collect();
        Self { crossings, free_loops: self.free_loops }
    }

    /// The mirror image: every crossing switched.
    pub fn mirror(&self) -> Self {
        Self { crossings: self.crossings.iter().map(|c| c.switched()).collect(), free_loops: self.free_loops }
    }

    /// Whether the crossings, read with the rotation their signs imply,
    /// embed in the plane: Euler's formula `V - E + F = 2` on every
    /// connected piece.
    pub fn is_planar(&self) -> bool {
        let n = self.crossings.len();
        if n == 0 {
            return true;
        }
        // counterclockwise ends around each crossing, as (edge, incoming)
        let ends: Vec<[(usize, bool); 4]> = self
            .crossings
            .iter()
            .map(|c| {
                if c.sign > 0 {
                    [(c.iu, true), (c.oo, false), (c.ou, false), (c.io, true)]
                } else {
                    [(c.iu, true), (c.io, true), (c.ou, false), (c.oo, false)]
                }
            })
            .collect();
        let mut slot_of = BTreeMap::new();
        for (k, e) in ends.iter().enumerate() {
            for (j, &end) in e.iter().enumerate() {
                slot_of.insert(end, 4 * k + j);
            }
        }
        let partner = |slot: usize| {
            let (edge, incoming) = ends[slot / 4][slot % 4];
            slot_of[&(edge, !incoming)]
        };
        let step = |slot: usize| {
            let p = partner(slot);
            4 * (p / 4) + (p % 4 + 1) % 4
        };
        let mut seen = vec![false; 4 * n];
        let mut faces = 0;
        for start in 0..4 * n {
            if seen[start] {
                continue;
            }
            faces += 1;
            let mut s = start;
            while !seen[s] {
                seen[s] = true;
                s = step(s);
            }
        }
        // connected pieces of the crossing graph
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(parent: &mut [usize], mut a: usize) -> usize {
            while parent[a] != a {
                parent[a] = parent[parent[a]];
                a = parent[a];
            }
            a
        }
        for slot in 0..4 * n {
            let (a, b) = (find(&mut parent, slot / 4), find(&mut parent, partner(slot) / 4));
            parent[a] = b;
        }
        let pieces = (0..n).filter(|&k| find(&mut parent, k) == k).count();
        n as i64 - 2 * n as i64 + faces as i64 == 2 * pieces as i64
    }

    pub(crate) fn max_edge(&self) -> Option<usize> {
        self.crossings.iter().flat_map(|c| [c.iu, c.io, c.ou, c.oo]).max()
    }
}

/// Replace edge id `from` by `to` at the (single) end where `from` enters.
pub(crate) fn rename_edge(crossings: &mut [Crossing], from: usize, to: usize) {
    for c in crossings.iter_mut() {
        if c.iu == from {
            c.iu = to;
        }
        if c.io == from {
            c.io = to;
        }
        if c.ou == from {
            c.ou = to;
        }
        if c.oo == from {
            c.oo = to;
        }
    }
}

impl fmt::Display for PlanarDiagram {
    /// One crossing per line, `X <iu> <io> <ou> <oo> <+|->`, then one `loop`
    /// line per crossingless circle.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.crossings {
            writeln!(f, "X {} {} {} {} {}", c.iu, c.io, c.ou, c.oo, if c.sign > 0 { '+' } else { '-' })?;
        }
        for _ in 0..self.free_loops {
            writeln!(f, "loop")?;
        }
        Ok(())
    }
}

/// Parse one non-diagram line-aware body; `dotted:` and other keyed lines are
/// left to the caller through `extra`.
pub(crate) fn parse_pd_lines<'a>(
    text: &'a str,
    mut extra: impl FnMut(&'a str) -> Result<bool>,
) -> Result<PlanarDiagram> {
    let mut crossings = Vec::new();
    let mut loops = 0;
    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        if extra(line)? {
            continue;
        }
        let toks: Vec<&str> = line.split_whitespace().collect();
        match toks.as_slice() {
            ["loop"] => loops += 1,
            ["X", a, b, c, d, sign] => {
                let num = |t: &str| {
                    t.parse::<usize>().map_err(|_| Error::Parse(format!("line {}: bad edge id `{t}`", lineno + 1)))
                };
                let sign = match *sign {
                    "+" => 1,
                    "-" => -1,
                    other => return Err(Error::Parse(format!("line {}: sign must be + or -, got `{other}`", lineno + 1))),
                };
                crossings.push(Crossing { iu: num(a)?, io: num(b)?, ou: num(c)?, oo: num(d)?, sign });
            }
            _ => return Err(Error::Parse(format!("line {}: cannot read `{line}`", lineno + 1))),
        }
    }
    PlanarDiagram::new(crossings, loops)
}

impl FromStr for PlanarDiagram {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        parse_pd_lines(s, |_| Ok(false))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn hopf() -> PlanarDiagram {
        "X 0 3 1 2 +\nX 2 1 3 0 +".parse().unwrap()
    }

    #[test]
    fn components_and_writhe() {
        let d = hopf();
        let comps = d.components();
        assert_eq!(comps.len(), 2);
        assert_eq!(comps[0].edges, vec![0, 1]);
        assert_eq!(comps[1].edges, vec![2, 3]);
        assert_eq!(d.self_writhes(), vec![0, 0]);
        assert_eq!(d.writhe(), 2);
    }

    #[test]
    fn validation() {
        assert!("X 0 1 1 0 +".parse::<PlanarDiagram>().is_ok());
        assert!("X 0 0 1 1 +".parse::<PlanarDiagram>().is_err());
        assert!("X 0 1 2 3 +".parse::<PlanarDiagram>().is_err());
        assert!("X 0 1 1 0 *".parse::<PlanarDiagram>().is_err());
        assert!("Y 0 1 1 0 +".parse::<PlanarDiagram>().is_err());
    }

    #[test]
    fn planarity() {
        assert!(hopf().is_planar());
        assert!("X 0 1 1 0 +".parse::<PlanarDiagram>().unwrap().is_planar());
        assert!(PlanarDiagram::unlink(2).is_planar());
        // a Hopf link with one sign flipped has no planar realization
        assert!(!"X 0 3 1 2 +\nX 2 1 3 0 -".parse::<PlanarDiagram>().unwrap().is_planar());
    }

    #[test]
    fn text_round_trip() {
        let d: PlanarDiagram = "# kink\nX 0 1 1 0 -\nloop\n".parse().unwrap();
        assert_eq!(d.free_loops(), 1);
        assert_eq!(d.to_string().parse::<PlanarDiagram>().unwrap(), d);
        assert_eq!(d.component_count(), 2);
    }

    #[test]
    fn removing_components() {
        let d = hopf();
        let r = d.remove_component(0).unwrap();
        assert_eq!(r, PlanarDiagram::unlink(1));
        assert!(d.remove_component(2).is_err());
        let with_loop = d.disjoint_union(&PlanarDiagram::unlink(1));
        assert_eq!(with_loop.remove_component(2).unwrap(), d);
    }

    #[test]
    fn switching_twice_is_identity() {
        for c in hopf().crossings() {
            assert_eq!(c.switched().switched(), *c);
        }
        assert_eq!(hopf().mirror().mirror(), hopf());
        assert_eq!(hopf().reversed().reversed(), hopf());
    }
}
