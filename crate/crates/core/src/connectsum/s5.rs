//! The knot in `S^1 × S^2 # S^1 × S^2` that passes twice, in opposite
//! directions, through each of the two non-separating spheres, and its
//! reduction to a multiple of the empty link.
//!
//! 1. Local expansion: a circle around two antiparallel strands equals
//!    `(δ - (v - v^-1) z) V - z^2 H`, checked by closure probes.
//! 2. Slide: when the two strands are all that pass through a sphere, the
//!    circle is a 0-framed push-off of the dotted circle, so it bounds a disk
//!    after surgery and equals `δ V`. With step 1 this gives
//!    `(v - v^-1) V ≡ -z H`. The probes check the part of this that lives in
//!    `S^3`; the slide itself is the modeling assumption.
//! 3. Assembly: both spheres are treated this way, leaving a link missing
//!    both spheres whose value the oracle computes.

use crate::coeff::{delta, FactorTag, LaurentPoly, RationalFunction, Var};
use crate::error::{Error, Result};
use crate::skeinrw::{evaluate, DiagramBuilder, Strand};

use super::passages::PassageModel;
use super::tangle::{probe_all, Probe, Tangle, TangleCombination};
use super::{certify_ring, crossing_count, Method, PassageCount, ReductionCertificate, Ring, StepReport, SurgeryPresentation};

/// What the output value is compared against.
pub const S5_VALUE_NOTE: &str = "expected (s - s^-1)/(v^-1 - v), which is 1/delta";

fn rf(p: LaurentPoly) -> RationalFunction {
    p.into()
}

fn z() -> RationalFunction {
    rf(LaurentPoly::z())
}

/// `v - v^-1`.
fn v_minus_inverse() -> RationalFunction {
    rf(&LaurentPoly::v() - &LaurentPoly::var_pow(Var::V, -1))
}

/// The knot `K` (component 0) with dotted circles `A` (1) and `B` (2).
///
/// `K` has no self-crossings; it passes down through `A`, down through `B`,
/// back up through `A` and back up through `B`. `A` lies above `B`
/// where they cross.
pub fn s5_knot() -> SurgeryPresentation {
    let mut b = DiagramBuilder::new();
    let mut x = |s: i8| b.crossing(s);
    let (c1, c2, c5, c6) = (x(1), x(1), x(-1), x(-1));
    let (c3, c4, c7, c8) = (x(-1), x(-1), x(1), x(1));
    let (d1, d2, d3, d4) = (x(-1), x(1), x(-1), x(1));
    use Strand::{Over as O, Under as U};
    b.component(vec![(c1, U), (c2, O), (c3, O), (c4, U), (c5, O), (c6, U), (c7, U), (c8, O)]);
    b.component(vec![(c2, U), (d1, O), (d2, O), (c5, U), (c6, O), (d3, O), (d4, O), (c1, O)]);
    b.component(vec![(c8, U), (d4, U), (d1, U), (c3, U), (c4, O), (d2, U), (d3, U), (c7, O)]);
    let d = b.build().expect("built-in diagram");
    SurgeryPresentation::new(d, vec![1, 2]).expect("built-in presentation")
}

fn fail(step: &str, reason: impl Into<String>) -> Error {
    Error::Pipeline { step: step.into(), reason: reason.into() }
}

fn require_all(step: &str, probes: &[Probe]) -> Result<()> {
    match probes.iter().find(|p| !p.holds) {
        Some(p) => Err(fail(step, format!("closure `{}`: {} != {}", p.closure, p.lhs, p.rhs))),
        None => Ok(()),
    }
}

fn local_expansion() -> Result<StepReport> {
    let step = "local expansion";
    let coeff_v = &delta() - &(&v_minus_inverse() * &z());
    let coeff_h = -&(&z() * &z());
    let lhs = TangleCombination::single(Tangle::encircled());
    let rhs = TangleCombination(vec![(coeff_v, Tangle::vertical()), (coeff_h, Tangle::horizontal())]);
    let probes = probe_all(&lhs, &rhs).map_err(|e| fail(step, e.to_string()))?;
    require_all(step, &probes)?;
    Ok(StepReport {
        step: step.into(),
        probes,
        notes: vec!["circle around V = (delta - (v - v^-1)(s - s^-1)) V - (s - s^-1)^2 H".into()],
    })
}

fn slide() -> Result<StepReport> {
    let step = "slide";
    let zz = &z() * &z();
    let lhs = TangleCombination(vec![(&v_minus_inverse() * &z(), Tangle::vertical()), (zz, Tangle::horizontal())]);
    let rhs = TangleCombination(vec![(delta(), Tangle::vertical()), (RationalFunction::from_int(-1), Tangle::encircled())]);
    let probes = probe_all(&lhs, &rhs).map_err(|e| fail(step, e.to_string()))?;
    require_all(step, &probes)?;
    Ok(StepReport {
        step: step.into(),
        probes,
        notes: vec![
            "checked in S^3: (v - v^-1) z V + z^2 H = delta V - (circle around V)".into(),
            "assumed: across the sphere the circle bounds a disk, so (circle around V) = delta V".into(),
            "hence (v - v^-1) V = -(s - s^-1) H through that sphere".into(),
        ],
    })
}

/// Apply the slide at every dotted circle in `order` and evaluate what is
/// left.
fn slid_value(p: &SurgeryPresentation, order: &[usize]) -> Result<RationalFunction> {
    let mut m = PassageModel::from_diagram(p.diagram());
    for &circle in order {
        m.resolve_antiparallel_pair(circle)?;
    }
    let d = m.to_diagram()?;
    if !d.is_planar() {
        return Err(Error::Consistency("slid diagram is not planar".into()));
    }
    Ok(evaluate(&d))
}

fn assembly(p: &SurgeryPresentation) -> Result<(StepReport, RationalFunction)> {
    let step = "assembly";
    if !p.diagram().is_planar() {
        return Err(fail(step, "the input diagram is not planar"));
    }
    for &circle in p.dotted() {
        let c = crossing_count(p, circle).map_err(|e| fail(step, e.to_string()))?;
        if c != (PassageCount { geometric: 2, algebraic: 0 }) {
            return Err(fail(step, format!("circle {circle} is pierced {c:?}, expected two antiparallel passages")));
        }
    }
    let forward: Vec<usize> = p.dotted().to_vec();
    let backward: Vec<usize> = forward.iter().rev().copied().collect();
    let a = slid_value(p, &forward).map_err(|e| fail(step, e.to_string()))?;
    let b = slid_value(p, &backward).map_err(|e| fail(step, e.to_string()))?;
    // each sphere trades V for -z/(v - v^-1) H
    let ratio = (-&z()).checked_div(&v_minus_inverse())?;
    let value = &ratio.pow(p.dotted().len() as i32)? * &a;
    let expected = rf(LaurentPoly::z()).checked_div(&rf(&LaurentPoly::var_pow(Var::V, -1) - &LaurentPoly::v()))?;
    let probes = vec![
        Probe { closure: "circles in listed order".into(), lhs: a.clone(), rhs: delta(), holds: a == delta() },
        Probe { closure: "circles in reverse order".into(), lhs: b.clone(), rhs: a.clone(), holds: a == b },
        Probe { closure: "final value".into(), lhs: value.clone(), rhs: expected.clone(), holds: value == expected },
        Probe {
            closure: "final value against 1/delta".into(),
            lhs: value.clone(),
            rhs: delta().recip()?,
            holds: value == delta().recip()?,
        },
    ];
    require_all(step, &probes)?;
    let report = StepReport {
        step: step.into(),
        probes,
        notes: vec![
            "(v - v^-1)^2 K = (s - s^-1)^2 K', K' the slid link, an unknot missing both spheres".into(),
            S5_VALUE_NOTE.into(),
        ],
    };
    Ok((report, value))
}

/// Replay the reduction of the built-in knot and certify its value over `R'`.
pub fn s5_pipeline() -> Result<ReductionCertificate> {
    let input = s5_knot();
    let steps = vec![local_expansion()?, slide()?];
    let (report, value) = assembly(&input)?;
    let cert = certify_ring(&value, Ring::RPrime, &[FactorTag::VFourMinusS { n: 0 }, FactorTag::S])
        .map_err(|e| fail("certificate", e.to_string()))?;
    let mut steps = steps;
    steps.push(report);
    Ok(ReductionCertificate { input, value, ring: Ring::RPrime, denominators: vec![cert], method: Method::S5Pipeline, steps })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn the_knot() {
        let p = s5_knot();
        assert!(p.diagram().is_planar());
        assert_eq!(p.diagram().component_count(), 3);
        for circle in [1, 2] {
            assert_eq!(crossing_count(&p, circle).unwrap(), PassageCount { geometric: 2, algebraic: 0 });
        }
        // erasing the circles leaves a crossingless unknot
        assert_eq!(evaluate(&p.link().unwrap()), delta());
        let text = p.to_string();
        assert_eq!(text.parse::<SurgeryPresentation>().unwrap(), p);
    }

    #[test]
    fn local_steps() {
        assert!(local_expansion().unwrap().passed());
        assert!(slide().unwrap().passed());
    }

    #[test]
    fn a_wrong_expansion_is_caught() {
        let lhs = TangleCombination::single(Tangle::encircled());
        let rhs = TangleCombination(vec![(delta(), Tangle::vertical())]);
        let probes = probe_all(&lhs, &rhs).unwrap();
        assert!(probes.iter().any(|p| !p.holds));
        assert!(require_all("x", &probes).is_err());
    }

    #[test]
    fn pipeline_value() {
        let cert = s5_pipeline().unwrap();
        cert.verify().unwrap();
        assert_eq!(cert.value, delta().recip().unwrap());
        assert_eq!(cert.steps.len(), 3);
        assert_eq!(cert.ring, Ring::RPrime);
    }
}
