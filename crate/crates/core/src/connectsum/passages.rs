//! Editing a diagram at the level of "which crossings does each component
//! pass, in order": erasing components and re-pairing strands where they
//! pierce a dotted circle.

use std::collections::{BTreeMap, BTreeSet};

use crate::error::{Error, Result};
use crate::skeinrw::{DiagramBuilder, PlanarDiagram, Strand};

type Passage = (usize, Strand);

/// Components as cyclic passage lists over a fixed table of crossing signs.
///
/// Component ids are those of the source diagram and stay valid through
/// edits: erased components leave a hole, new ones are appended.
#[derive(Clone, Debug)]
pub struct PassageModel {
    signs: Vec<i8>,
    comps: Vec<Option<Vec<Passage>>>,
}

/// One pass of a component through the disk of a dotted circle.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Piercing {
    pub component: usize,
    /// Position of the entering crossing in the component's passage list;
    /// the exit is the position right after it, cyclically.
    pub entry: usize,
    /// `+1` along the circle's positive normal, `-1` against it.
    pub direction: i8,
    /// Whether other crossings sit between the entry and the exit.
    pub interrupted: bool,
}

impl PassageModel {
    pub fn from_diagram(d: &PlanarDiagram) -> Self {
        let mut comps: Vec<Option<Vec<Passage>>> = d.components().into_iter().map(|c| Some(c.passages)).collect();
        comps.extend((0..d.free_loops()).map(|_| Some(Vec::new())));
        PassageModel { signs: d.crossings().iter().map(|c| c.sign).collect(), comps }
    }

    /// Live components with their ids.
    pub fn components(&self) -> Vec<(usize, &[Passage])> {
        self.comps.iter().enumerate().filter_map(|(i, c)| c.as_deref().map(|p| (i, p))).collect()
    }

    fn comp(&self, id: usize) -> Result<&[Passage]> {
        self.comps
            .get(id)
            .and_then(|c| c.as_deref())
            .ok_or_else(|| Error::OutOfRange(format!("no component {id}")))
    }

    /// The component passing each crossing as `(under, over)`.
    fn owners(&self) -> BTreeMap<usize, (usize, usize)> {
        let mut under = BTreeMap::new();
        let mut over = BTreeMap::new();
        for (id, passages) in self.components() {
            for &(k, strand) in passages {
                match strand {
                    Strand::Under => under.insert(k, id),
                    Strand::Over => over.insert(k, id),
                };
            }
        }
        under.into_iter().map(|(k, u)| (k, (u, over[&k]))).collect()
    }

    /// Where component `comp` pierces the disk of the counterclockwise circle
    /// `circle`, in order along `comp`.
    ///
    /// Crossings with the circle alternate between entering and leaving the
    /// disk; an entry followed by an exit on the other side of the circle's
    /// plane is a piercing, on the same side it passes above or below.
    pub fn piercings(&self, comp: usize, circle: usize) -> Result<Vec<Piercing>> {
        let owners = self.owners();
        let passages = self.comp(comp)?;
        self.comp(circle)?;
        let events: Vec<(usize, bool, Strand)> = passages
            .iter()
            .enumerate()
            .filter(|&(_, &(k, strand))| {
                let (u, o) = owners[&k];
                match strand {
                    Strand::Under => o == circle,
                    Strand::Over => u == circle,
                }
            })
            .map(|(pos, &(k, strand))| {
                let sign = self.signs[k];
                let entering = (strand == Strand::Under) == (sign > 0);
                (pos, entering, strand)
            })
            .collect();
        if events.is_empty() {
            return Ok(vec![]);
        }
        let start = events.iter().position(|e| e.1).unwrap_or(0);
        let n = events.len();
        let mut out = Vec::new();
        for j in (0..n).step_by(2) {
            let a = events[(start + j) % n];
            let b = events[(start + j + 1) % n];
            if !n.is_multiple_of(2) || !a.1 || b.1 {
                return Err(Error::NonGeneric(format!(
                    "component {comp} does not alternate in and out of the disk of circle {circle}; \
                     perturb the diagram or check that the circle runs counterclockwise"
                )));
            }
            if a.2 != b.2 {
                out.push(Piercing {
                    component: comp,
                    entry: a.0,
                    direction: if a.2 == Strand::Under { 1 } else { -1 },
                    interrupted: (a.0 + 1) % passages.len() != b.0,
                });
            }
        }
        out.sort_by_key(|p| p.entry);
        Ok(out)
    }

    /// Erase components together with every crossing they take part in.
    pub fn remove_components(&mut self, ids: &[usize]) -> Result<()> {
        for &id in ids {
            self.comp(id)?;
        }
        let owners = self.owners();
        let doomed: BTreeSet<usize> = ids.iter().copied().collect();
        let gone: BTreeSet<usize> = owners
            .iter()
            .filter(|(_, (u, o))| doomed.contains(u) || doomed.contains(o))
            .map(|(&k, _)| k)
            .collect();
        for (id, c) in self.comps.iter_mut().enumerate() {
            if doomed.contains(&id) {
                *c = None;
            } else if let Some(p) = c {
                p.retain(|(k, _)| !gone.contains(k));
            }
        }
        Ok(())
    }

    /// Replace the two antiparallel strands through `circle` by the other
    /// pairing of their ends (a cap and a cup beside the disk), then erase
    /// the circle.
    pub fn resolve_antiparallel_pair(&mut self, circle: usize) -> Result<()> {
        self.comp(circle)?;
        let mut pierce = Vec::new();
        for (id, _) in self.components() {
            if id != circle {
                pierce.extend(self.piercings(id, circle)?);
            }
        }
        let directions: Vec<i8> = pierce.iter().map(|p| p.direction).collect();
        if pierce.len() != 2 || directions[0] == directions[1] {
            return Err(Error::Unsupported(format!(
                "circle {circle} must be pierced exactly twice in opposite directions, found {directions:?}"
            )));
        }
        if pierce.iter().any(|p| p.interrupted) {
            return Err(Error::Unsupported(format!(
                "a strand crosses something inside the disk of circle {circle}"
            )));
        }
        // arcs run from the exit of one piercing to the entry of the next on
        // the same component; arc `j` starts at piercing `j`
        let next = |j: usize| -> usize {
            let c = pierce[j].component;
            let mine: Vec<usize> = (0..pierce.len()).filter(|&i| pierce[i].component == c).collect();
            let at = mine.iter().position(|&i| i == j).expect("own piercing");
            mine[(at + 1) % mine.len()]
        };
        let arc = |j: usize| -> Vec<Passage> {
            let passages = self.comps[pierce[j].component].as_ref().expect("live");
            let len = passages.len();
            let from = pierce[j].entry + 2;
            let end = pierce[next(j)].entry;
            let to = if end > pierce[j].entry { end } else { end + len };
            (from..to).map(|p| passages[p % len]).collect()
        };
        // arriving at piercing q, leave from the other one
        let mut cycles = Vec::new();
        let mut used = [false; 2];
        for first in 0..2 {
            if used[first] {
                continue;
            }
            let mut cycle = Vec::new();
            let mut j = first;
            while !used[j] {
                used[j] = true;
                cycle.extend(arc(j));
                j = 1 - next(j);
            }
            cycles.push(cycle);
        }
        // erase the circle while every crossing still has both owners
        let on_circle: BTreeSet<usize> = self.comp(circle)?.iter().map(|&(k, _)| k).collect();
        for c in &mut cycles {
            c.retain(|(k, _)| !on_circle.contains(k));
        }
        self.remove_components(&[circle])?;
        for p in &pierce {
            self.comps[p.component] = None;
        }
        self.comps.extend(cycles.into_iter().map(Some));
        Ok(())
    }

    pub fn to_diagram(&self) -> Result<PlanarDiagram> {
        let mut b = DiagramBuilder::new();
        let mut handle = BTreeMap::new();
        for (_, passages) in self.components() {
            for &(k, _) in passages {
                handle.entry(k).or_insert_with(|| b.crossing(self.signs[k]));
            }
        }
        for (_, passages) in self.components() {
            b.component(passages.iter().map(|&(k, s)| (handle[&k], s)).collect());
        }
        b.build()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeff::delta;
    use crate::skeinrw::evaluate;

    /// Unknot pierced down through the circle at one place and back up at
    /// another: a circle around two antiparallel strands of one unknot.
    fn clasp() -> PlanarDiagram {
        let mut b = DiagramBuilder::new();
        let (a1, a2, b1, b2) = (b.crossing(1), b.crossing(1), b.crossing(-1), b.crossing(-1));
        b.component(vec![(a1, Strand::Under), (a2, Strand::Over), (b1, Strand::Over), (b2, Strand::Under)]);
        b.component(vec![(a2, Strand::Under), (b1, Strand::Under), (b2, Strand::Over), (a1, Strand::Over)]);
        b.build().unwrap()
    }

    #[test]
    fn erase_and_rebuild() {
        let mut m = PassageModel::from_diagram(&clasp());
        let again = m.to_diagram().unwrap();
        assert_eq!(again.crossings().len(), 4);
        assert_eq!(evaluate(&again), evaluate(&clasp()));
        m.remove_components(&[1]).unwrap();
        assert_eq!(m.to_diagram().unwrap(), PlanarDiagram::unlink(1));
        assert!(m.remove_components(&[1]).is_err());
    }

    #[test]
    fn antiparallel_pair_splits_one_component() {
        let m = PassageModel::from_diagram(&clasp());
        let p = m.piercings(0, 1).unwrap();
        let mut dirs: Vec<i8> = p.iter().map(|p| p.direction).collect();
        dirs.sort_unstable();
        assert_eq!(dirs, vec![-1, 1]);
        let mut m = m;
        m.resolve_antiparallel_pair(1).unwrap();
        let d = m.to_diagram().unwrap();
        assert_eq!(d, PlanarDiagram::unlink(2));
        assert_eq!(evaluate(&d), &delta() * &delta());
    }

    #[test]
    fn coherent_pair_is_refused() {
        let mut b = DiagramBuilder::new();
        let (a1, a2, b1, b2) = (b.crossing(1), b.crossing(1), b.crossing(1), b.crossing(1));
        b.component(vec![(a1, Strand::Under), (a2, Strand::Over)]);
        b.component(vec![(b1, Strand::Under), (b2, Strand::Over)]);
        b.component(vec![(a2, Strand::Under), (b2, Strand::Under), (b1, Strand::Over), (a1, Strand::Over)]);
        let mut m = PassageModel::from_diagram(&b.build().unwrap());
        assert!(m.resolve_antiparallel_pair(2).is_err());
    }
}
