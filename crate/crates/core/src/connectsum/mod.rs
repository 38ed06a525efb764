//! Links in connected sums of `S^1 × S^2`, drawn as diagrams in `S^3`
//! together with dotted circles (0-framed surgery curves).
//!
//! # Presentation text format
//!
//! The diagram format of [`crate::skeinrw`] plus one line
//! `dotted: <id> <id> ...` naming the components that are surgery circles.
//! Component ids follow [`PlanarDiagram::components`] (ordered by smallest
//! edge id), with crossingless loops numbered after them.
//!
//! Dotted circles are read as drawn counterclockwise in the plane, so a link
//! strand enters the disk they bound where it passes under with sign `+` or
//! over with sign `-`.

mod passages;
mod s5;
mod tangle;

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::coeff::{certify_membership, FactorTag, LaurentPoly, Monoid, MonoidCertificate, RationalFunction};
use crate::error::{Error, Result};
use crate::skeinrw::{evaluate, parse_pd_lines, PlanarDiagram};
use crate::young::{partitions, YoungDiagram};

pub use passages::PassageModel;
pub use s5::{s5_knot, s5_pipeline, S5_VALUE_NOTE};
pub use tangle::{Closure, End, Probe, Tangle, TangleCombination};

/// A link diagram plus the components that are dotted surgery circles.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SurgeryPresentation {
    diagram: PlanarDiagram,
    dotted: Vec<usize>,
}

impl SurgeryPresentation {
    /// Checks that every dotted id names a component, that dotted circles
    /// have no self-crossings (so they are unknots of self-writhe 0) and that
    /// they are pairwise unlinked.
    pub fn new(diagram: PlanarDiagram, dotted: Vec<usize>) -> Result<Self> {
        let total = diagram.component_count();
        let mut seen = BTreeSet::new();
        for &id in &dotted {
            if id >= total {
                return Err(Error::InvalidDiagram(format!("dotted component {id} of {total}")));
            }
            if !seen.insert(id) {
                return Err(Error::InvalidDiagram(format!("component {id} listed twice as dotted")));
            }
        }
        let p = SurgeryPresentation { diagram, dotted };
        let comp_of = p.component_of_crossing_ends();
        for (k, &(under, over)) in comp_of.iter().enumerate() {
            if under == over && p.is_dotted(under) {
                return Err(Error::InvalidDiagram(format!("dotted component {under} crosses itself at crossing {k}")));
            }
        }
        for (a, &i) in p.dotted.iter().enumerate() {
            for &j in &p.dotted[a + 1..] {
                let lk: i64 = comp_of
                    .iter()
                    .zip(p.diagram.crossings())
                    .filter(|(&(u, o), _)| (u, o) == (i, j) || (u, o) == (j, i))
                    .map(|(_, c)| c.sign as i64)
                    .sum();
                if lk != 0 {
                    return Err(Error::InvalidDiagram(format!("dotted circles {i} and {j} are linked")));
                }
            }
        }
        Ok(p)
    }

    pub fn diagram(&self) -> &PlanarDiagram {
        &self.diagram
    }

    pub fn dotted(&self) -> &[usize] {
        &self.dotted
    }

    pub fn is_dotted(&self, id: usize) -> bool {
        self.dotted.contains(&id)
    }

    /// The same presentation with the dotted circles listed in another order.
    pub fn with_dotted_order(&self, dotted: Vec<usize>) -> Result<Self> {
        let (mut a, mut b) = (dotted.clone(), self.dotted.clone());
        a.sort_unstable();
        b.sort_unstable();
        if a != b {
            return Err(Error::OutOfRange("not a reordering of the dotted circles".into()));
        }
        Ok(SurgeryPresentation { diagram: self.diagram.clone(), dotted })
    }

    /// `(under component, over component)` for every crossing.
    fn component_of_crossing_ends(&self) -> Vec<(usize, usize)> {
        let comp = self.diagram.edge_components();
        self.diagram.crossings().iter().map(|c| (comp[&c.iu], comp[&c.io])).collect()
    }

    /// The link in `S^3` left after erasing every dotted circle.
    pub fn link(&self) -> Result<PlanarDiagram> {
        let mut m = PassageModel::from_diagram(&self.diagram);
        m.remove_components(&self.dotted)?;
        m.to_diagram()
    }
}

impl fmt::Display for SurgeryPresentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.diagram)?;
        let ids: Vec<String> = self.dotted.iter().map(|d| d.to_string()).collect();
        writeln!(f, "dotted: {}", ids.join(" "))
    }
}

impl FromStr for SurgeryPresentation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut dotted: Option<Vec<usize>> = None;
        let diagram = parse_pd_lines(s, |line| {
            let Some(rest) = line.strip_prefix("dotted:") else {
                return Ok(false);
            };
            if dotted.is_some() {
                return Err(Error::Parse("more than one `dotted:` line".into()));
            }
            let ids = rest
                .split(|c: char| c.is_whitespace() || c == ',')
                .filter(|t| !t.is_empty())
                .map(|t| t.parse::<usize>().map_err(|_| Error::Parse(format!("bad component id `{t}`"))))
                .collect::<Result<Vec<_>>>()?;
            dotted = Some(ids);
            Ok(true)
        })?;
        SurgeryPresentation::new(diagram, dotted.unwrap_or_default())
    }
}

/// How a link meets the sphere dual to one dotted circle.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct PassageCount {
    /// Number of times the link pierces the disk.
    pub geometric: usize,
    /// Piercings counted with sign (the linking number with the circle).
    pub algebraic: i64,
}

impl PassageCount {
    /// Every piercing goes the same way.
    pub fn is_coherent(&self) -> bool {
        self.algebraic.unsigned_abs() as usize == self.geometric
    }
}

/// Count the piercings of the disk bounded by dotted circle `circle`.
pub fn crossing_count(p: &SurgeryPresentation, circle: usize) -> Result<PassageCount> {
    let m = PassageModel::from_diagram(p.diagram());
    let mut count = PassageCount { geometric: 0, algebraic: 0 };
    for (comp, _) in m.components().iter().enumerate() {
        if p.is_dotted(comp) {
            continue;
        }
        for piercing in m.piercings(comp, circle_component(p, circle)?)? {
            count.geometric += 1;
            count.algebraic += piercing.direction as i64;
        }
    }
    Ok(count)
}

fn circle_component(p: &SurgeryPresentation, circle: usize) -> Result<usize> {
    if !p.is_dotted(circle) {
        return Err(Error::OutOfRange(format!("component {circle} is not a dotted circle")));
    }
    Ok(circle)
}

/// `x^r - 1 - c_{λ,μ}` for `|λ| - |μ| = r`, not both empty.
pub fn obstruction_factor(r: i64, lambda: &YoungDiagram, mu: &YoungDiagram) -> Result<LaurentPoly> {
    let tag = FactorTag::Obstruction { r, lambda: lambda.clone(), mu: mu.clone() };
    tag.check_in(Monoid::Ir(r)).map_err(|e| match e {
        Error::Certification(why) => Error::OutOfRange(why),
        other => other,
    })?;
    let p = tag.polynomial();
    if p.is_zero() {
        return Err(Error::Consistency(format!("{tag} vanishes identically")));
    }
    Ok(p)
}

/// Every `(λ, μ)` with `|λ| - |μ| = r`, `|λ| + |μ| ≤ bound`, not both empty.
pub fn obstruction_pairs(r: i64, bound: usize) -> Vec<(YoungDiagram, YoungDiagram)> {
    let mut out = Vec::new();
    for mu_size in 0..=bound {
        let lambda_size = mu_size as i64 + r;
        if lambda_size < 0 || lambda_size as usize + mu_size > bound {
            continue;
        }
        if lambda_size == 0 && mu_size == 0 {
            continue;
        }
        for lambda in partitions(lambda_size as usize) {
            for mu in partitions(mu_size) {
                out.push((lambda.clone(), mu));
            }
        }
    }
    out
}

/// The coefficient rings values are certified in.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "ring")]
pub enum Ring {
    /// `R[x, x^-1]`
    Laurent,
    /// `R'`
    RPrime,
    /// `k_r`
    Kr { r: i64 },
    /// The fraction field `F` of `Z[x, v, s]`.
    Fractions,
}

impl Ring {
    pub fn monoid(self) -> Option<Monoid> {
        match self {
            Ring::Laurent => Some(Monoid::I),
            Ring::RPrime => Some(Monoid::IPrime),
            Ring::Kr { r } => Some(Monoid::Ir(r)),
            Ring::Fractions => None,
        }
    }
}

impl fmt::Display for Ring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Ring::Laurent => write!(f, "R[x,x^-1]"),
            Ring::RPrime => write!(f, "R'"),
            Ring::Kr { r } => write!(f, "k_{r}"),
            Ring::Fractions => write!(f, "F"),
        }
    }
}

impl FromStr for Ring {
    type Err = Error;

    /// `R`, `R'`, `k_<r>` or `F`; `laurent`, `rprime`, `kr:<r>` and
    /// `fractions` are accepted for shells that dislike quotes.
    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        match t {
            "R" | "R[x,x^-1]" | "laurent" => return Ok(Ring::Laurent),
            "R'" | "rprime" => return Ok(Ring::RPrime),
            "F" | "fractions" => return Ok(Ring::Fractions),
            _ => {}
        }
        let r = t
            .strip_prefix("k_")
            .or_else(|| t.strip_prefix("kr:"))
            .and_then(|r| r.parse().ok())
            .ok_or_else(|| Error::Parse(format!("unknown ring `{t}`; use R, R', k_<r> or F")))?;
        Ok(Ring::Kr { r })
    }
}

/// Certify `value` in `ring` using the listed generators of its monoid.
pub fn certify_ring(value: &RationalFunction, ring: Ring, provenance: &[FactorTag]) -> Result<MonoidCertificate> {
    let monoid = ring
        .monoid()
        .ok_or_else(|| Error::Unsupported("the fraction field contains every value; there is nothing to certify".into()))?;
    certify_membership(value, monoid, provenance)
}

/// Certify a skein value whose only denominators are powers of `s - s^-1`.
pub fn certify_z_power(value: &RationalFunction, ring: Ring) -> Result<MonoidCertificate> {
    let bound = value.denominator().exponent_bounds().map_or(0, |(lo, hi)| (hi[2] - lo[2]) as usize);
    let mut provenance = Vec::new();
    for _ in 0..=bound {
        if let Ok(c) = certify_ring(value, ring, &provenance) {
            return Ok(c);
        }
        provenance.extend([FactorTag::S, FactorTag::SPowMinusOne { n: 1 }]);
    }
    certify_ring(value, ring, &provenance)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Method {
    CoherentVanishing,
    S5Pipeline,
}

/// One checked step of a reduction.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct StepReport {
    pub step: String,
    pub probes: Vec<Probe>,
    pub notes: Vec<String>,
}

impl StepReport {
    pub fn passed(&self) -> bool {
        self.probes.iter().all(|p| p.holds)
    }
}

/// The class of a presentation as `value · φ`, `φ` the empty link.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ReductionCertificate {
    pub input: SurgeryPresentation,
    pub value: RationalFunction,
    pub ring: Ring,
    pub denominators: Vec<MonoidCertificate>,
    pub method: Method,
    pub steps: Vec<StepReport>,
}

impl ReductionCertificate {
    /// Every denominator certificate and every recorded probe checks out.
    pub fn verify(&self) -> Result<()> {
        for d in &self.denominators {
            d.verify()?;
        }
        if let Some(bad) = self.steps.iter().find(|s| !s.passed()) {
            return Err(Error::Pipeline { step: bad.step.clone(), reason: "a closure probe failed".into() });
        }
        Ok(())
    }
}

/// Reduce a presentation in which every dotted circle is pierced in one
/// direction only.
///
/// If some circle is pierced (necessarily `r ≠ 0` times), the class vanishes
/// over `k_r`; the obstruction factors inverted by the filtration argument
/// are recorded. The circle used is the one with the smallest component id,
/// so the result does not depend on the order of the `dotted:` list.
/// Otherwise the link misses every sphere and its value is the ordinary
/// invariant of the link left after erasing the circles.
pub fn reduce_coherent(p: &SurgeryPresentation) -> Result<ReductionCertificate> {
    let mut counts = Vec::new();
    for &circle in p.dotted() {
        let c = crossing_count(p, circle)?;
        if !c.is_coherent() {
            return Err(Error::Unsupported(format!(
                "dotted circle {circle} is pierced in both directions ({} times, algebraically {}); \
                 only the built-in s5 pipeline handles antiparallel passages",
                c.geometric, c.algebraic
            )));
        }
        counts.push((circle, c));
    }
    counts.sort_by_key(|&(circle, _)| circle);
    if let Some(&(_, c)) = counts.iter().find(|(_, c)| c.algebraic != 0) {
        let r = c.algebraic;
        let mut denominators = Vec::new();
        for (lambda, mu) in obstruction_pairs(r, c.geometric) {
            let f = obstruction_factor(r, &lambda, &mu)?;
            let inverse = RationalFunction::new(LaurentPoly::one(), f)?;
            denominators.push(certify_membership(&inverse, Monoid::Ir(r), &[FactorTag::Obstruction { r, lambda, mu }])?);
        }
        return Ok(ReductionCertificate {
            input: p.clone(),
            value: RationalFunction::zero(),
            ring: Ring::Kr { r },
            denominators,
            method: Method::CoherentVanishing,
            steps: vec![],
        });
    }
    let value = evaluate(&p.link()?);
    let cert = certify_z_power(&value, Ring::RPrime)?;
    Ok(ReductionCertificate {
        input: p.clone(),
        value,
        ring: Ring::RPrime,
        denominators: vec![cert],
        method: Method::CoherentVanishing,
        steps: vec![],
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeff::{delta, Var};
    use crate::skeinrw::{DiagramBuilder, Strand};
    use crate::young::c_scalar;

    fn shape(s: &str) -> YoungDiagram {
        s.parse().unwrap()
    }

    /// A vertical unknot whose left side passes through `k` dotted circles,
    /// the `j`-th one pierced with sign `signs[j]`.
    fn pierced(signs: &[i8]) -> SurgeryPresentation {
        let mut b = DiagramBuilder::new();
        let mut link = Vec::new();
        let mut circles = Vec::new();
        for &s in signs {
            let (a, c) = (b.crossing(s), b.crossing(s));
            // entering under with sign + and leaving over, or the reverse
            if s > 0 {
                link.extend([(a, Strand::Under), (c, Strand::Over)]);
                circles.push(vec![(c, Strand::Under), (a, Strand::Over)]);
            } else {
                link.extend([(a, Strand::Over), (c, Strand::Under)]);
                circles.push(vec![(c, Strand::Over), (a, Strand::Under)]);
            }
        }
        b.component(link);
        for c in circles {
            b.component(c);
        }
        let d = b.build().unwrap();
        SurgeryPresentation::new(d, (1..=signs.len()).collect()).unwrap()
    }

    #[test]
    fn rings_read_back() {
        for r in [Ring::Laurent, Ring::RPrime, Ring::Kr { r: -2 }, Ring::Fractions] {
            assert_eq!(r.to_string().parse::<Ring>().unwrap(), r);
        }
        assert_eq!("kr:3".parse::<Ring>().unwrap(), Ring::Kr { r: 3 });
        assert!("k_".parse::<Ring>().is_err());
    }

    #[test]
    fn parse_and_print() {
        let p: SurgeryPresentation = "loop\nloop\ndotted: 0 1\n".parse().unwrap();
        assert_eq!(p.dotted(), &[0, 1]);
        let again: SurgeryPresentation = p.to_string().parse().unwrap();
        assert_eq!(again, p);
        assert!("loop\ndotted: 3".parse::<SurgeryPresentation>().is_err());
        assert!("loop\ndotted: 0 0".parse::<SurgeryPresentation>().is_err());
        assert!("loop\ndotted: 0\ndotted: 0".parse::<SurgeryPresentation>().is_err());
        // a dotted kink is not an unknotted 0-framed circle
        assert!("X 0 1 1 0 +\ndotted: 0".parse::<SurgeryPresentation>().is_err());
    }

    #[test]
    fn counting_piercings() {
        let empty: SurgeryPresentation = "loop\nloop\ndotted: 0 1".parse().unwrap();
        assert_eq!(crossing_count(&empty, 0).unwrap(), PassageCount { geometric: 0, algebraic: 0 });
        let once = pierced(&[1]);
        assert_eq!(crossing_count(&once, 1).unwrap(), PassageCount { geometric: 1, algebraic: 1 });
        let back = pierced(&[-1]);
        assert_eq!(crossing_count(&back, 1).unwrap(), PassageCount { geometric: 1, algebraic: -1 });
        assert!(crossing_count(&once, 0).is_err());
    }

    #[test]
    fn obstruction_examples() {
        let z = LaurentPoly::z();
        let vi = LaurentPoly::var_pow(Var::V, -1);
        let x = LaurentPoly::x();
        let box1 = shape("[1]");
        let empty = YoungDiagram::empty();
        assert_eq!(obstruction_factor(1, &box1, &empty).unwrap(), &(&x - &LaurentPoly::one()) - &(&vi * &z));
        assert_eq!(obstruction_factor(0, &box1, &box1).unwrap(), -c_scalar(&box1, &box1));
        let two = &LaurentPoly::one() + &LaurentPoly::var_pow(Var::S, 2);
        let expected = &(&x.pow(2) - &LaurentPoly::one()) - &(&(&vi * &z) * &two);
        assert_eq!(obstruction_factor(2, &shape("[2]"), &empty).unwrap(), expected);
        assert!(obstruction_factor(1, &box1, &box1).is_err());
        assert!(obstruction_factor(0, &empty, &empty).is_err());
    }

    #[test]
    fn pairs_by_level() {
        assert_eq!(obstruction_pairs(1, 1), vec![(shape("[1]"), YoungDiagram::empty())]);
        // level 3 adds λ ⊢ 2 with μ = □
        assert_eq!(obstruction_pairs(1, 3).len(), 1 + 2);
        assert_eq!(obstruction_pairs(-2, 2).len(), 2);
    }

    #[test]
    fn coherent_examples() {
        let empty: SurgeryPresentation = "dotted:".parse().unwrap();
        assert!(reduce_coherent(&empty).unwrap().value.is_one());
        let local: SurgeryPresentation = "loop\nloop\nloop\ndotted: 0 1".parse().unwrap();
        let cert = reduce_coherent(&local).unwrap();
        assert_eq!(cert.value, delta());
        assert_eq!(cert.ring, Ring::RPrime);
        cert.verify().unwrap();

        let once = pierced(&[1]);
        let cert = reduce_coherent(&once).unwrap();
        assert!(cert.value.is_zero());
        assert_eq!(cert.ring, Ring::Kr { r: 1 });
        assert_eq!(cert.denominators.len(), 1);
        assert_eq!(
            cert.denominators[0].factors,
            vec![FactorTag::Obstruction { r: 1, lambda: shape("[1]"), mu: YoungDiagram::empty() }]
        );
        cert.verify().unwrap();
    }

    #[test]
    fn coherent_order_independence() {
        let p = pierced(&[-1, 1]);
        let a = reduce_coherent(&p).unwrap();
        let b = reduce_coherent(&p.with_dotted_order(vec![2, 1]).unwrap()).unwrap();
        assert_eq!((a.value, a.ring, &a.denominators), (b.value, b.ring, &b.denominators));
        assert_eq!(a.ring, Ring::Kr { r: -1 });
    }

    #[test]
    fn rings_and_certificates() {
        let one = certify_ring(&RationalFunction::from_int(3), Ring::Laurent, &[]).unwrap();
        assert!(one.factors.is_empty());
        let box1 = shape("[1]");
        let c: RationalFunction = c_scalar(&box1, &box1).into();
        let inv = c.recip().unwrap();
        certify_ring(&inv, Ring::Laurent, &[FactorTag::C { lambda: box1.clone(), mu: box1 }]).unwrap();
        assert!(certify_ring(&inv, Ring::Laurent, &[]).is_err());
        assert!(certify_ring(&inv, Ring::Fractions, &[]).is_err());
        let d = delta();
        assert!(certify_z_power(&d, Ring::RPrime).unwrap().is_valid());
    }
}
