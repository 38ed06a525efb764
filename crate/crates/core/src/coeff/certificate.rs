//! Invertibility certificates for the localized coefficient rings.
//!
//! A certificate records a value as `numerator / (product of generators)`,
//! where each generator is named by a [`FactorTag`] chosen by whoever
//! produced the value. Nothing here factors polynomials: the caller supplies
//! the tags and the certificate only checks the product.

use std::fmt;

use serde::{Deserialize, Serialize};

use super::laurent::{LaurentPoly, Var};
use super::rational::RationalFunction;
use crate::error::{Error, Result};
use crate::young::{c_scalar, YoungDiagram};

/// Which multiplicative set a certificate claims membership in.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "monoid", content = "r")]
pub enum Monoid {
    /// `v`, `s`, `s^{2n}-1` (n > 0) and `c_{λ,μ}` with `|λ| = |μ| > 0`.
    I,
    /// `I` together with `v^4 - s^{2n}`.
    IPrime,
    /// `x`, `v`, `s`, `s^{2n}-1` and `x^r - 1 - c_{λ,μ}` with `|λ| - |μ| = r`.
    Ir(i64),
}

impl fmt::Display for Monoid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Monoid::I => write!(f, "I"),
            Monoid::IPrime => write!(f, "I'"),
            Monoid::Ir(r) => write!(f, "I_{r}"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "tag")]
pub enum FactorTag {
    X,
    V,
    S,
    /// `s^{2n} - 1`
    SPowMinusOne { n: i64 },
    /// `v^4 - s^{2n}`
    VFourMinusS { n: i64 },
    /// `c_{λ,μ}`
    C { lambda: YoungDiagram, mu: YoungDiagram },
    /// `x^r - 1 - c_{λ,μ}`
    Obstruction { r: i64, lambda: YoungDiagram, mu: YoungDiagram },
    /// `-1`
    Unit,
}

impl FactorTag {
    pub fn polynomial(&self) -> LaurentPoly {
        match self {
            FactorTag::X => LaurentPoly::x(),
            FactorTag::V => LaurentPoly::v(),
            FactorTag::S => LaurentPoly::s(),
            FactorTag::SPowMinusOne { n } => {
                LaurentPoly::var_pow(Var::S, 2 * *n as i32) - LaurentPoly::one()
            }
            FactorTag::VFourMinusS { n } => {
                LaurentPoly::var_pow(Var::V, 4) - LaurentPoly::var_pow(Var::S, 2 * *n as i32)
            }
            FactorTag::C { lambda, mu } => c_scalar(lambda, mu),
            FactorTag::Obstruction { r, lambda, mu } => {
                LaurentPoly::var_pow(Var::X, *r as i32) - LaurentPoly::one() - c_scalar(lambda, mu)
            }
            FactorTag::Unit => LaurentPoly::constant(-1),
        }
    }

    /// Whether this tag names a generator of `monoid`.
    pub fn check_in(&self, monoid: Monoid) -> Result<()> {
        let fail = |why: &str| Err(Error::Certification(format!("{self} is not a generator of {monoid}: {why}")));
        match (self, monoid) {
            (FactorTag::Unit | FactorTag::V | FactorTag::S, _) => Ok(()),
            // x is a unit of R[x, x^-1], the ring every skein value lives in.
            (FactorTag::X, _) => Ok(()),
            (FactorTag::SPowMinusOne { n }, _) => {
                if *n > 0 {
                    Ok(())
                } else {
                    fail("needs n > 0")
                }
            }
            (FactorTag::VFourMinusS { .. }, Monoid::IPrime) => Ok(()),
            (FactorTag::VFourMinusS { .. }, _) => fail("only I' contains v^4 - s^2n"),
            (FactorTag::C { lambda, mu }, Monoid::I | Monoid::IPrime) => {
                if lambda.size() == mu.size() && !mu.is_empty() {
                    Ok(())
                } else {
                    fail("needs |λ| = |μ| > 0")
                }
            }
            (FactorTag::C { .. }, Monoid::Ir(_)) => fail("c_{λ,μ} alone is not a generator of I_r"),
            (FactorTag::Obstruction { r, lambda, mu }, Monoid::Ir(m)) => {
                if *r != m {
                    fail("level does not match the monoid")
                } else if lambda.size() as i64 - mu.size() as i64 != *r {
                    fail("needs |λ| - |μ| = r")
                } else if lambda.is_empty() && mu.is_empty() {
                    fail("λ and μ are both empty")
                } else {
                    Ok(())
                }
            }
            (FactorTag::Obstruction { .. }, _) => fail("obstruction factors belong to I_r"),
        }
    }
}

impl fmt::Display for FactorTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FactorTag::X => write!(f, "x"),
            FactorTag::V => write!(f, "v"),
            FactorTag::S => write!(f, "s"),
            FactorTag::SPowMinusOne { n } => write!(f, "s^{}-1", 2 * n),
            FactorTag::VFourMinusS { n } => write!(f, "v^4-s^{}", 2 * n),
            FactorTag::C { lambda, mu } => write!(f, "c({lambda},{mu})"),
            FactorTag::Obstruction { r, lambda, mu } => write!(f, "x^{r}-1-c({lambda},{mu})"),
            FactorTag::Unit => write!(f, "-1"),
        }
    }
}

impl std::str::FromStr for FactorTag {
    type Err = Error;

    /// Reads the printed form: `x`, `v`, `s`, `-1`, `s^<2n>-1`,
    /// `v^4-s^<2n>`, `c([..],[..])` or `x^<r>-1-c([..],[..])`.
    fn from_str(text: &str) -> Result<Self> {
        let t: String = text.chars().filter(|c| !c.is_whitespace()).collect();
        let bad = || Error::Parse(format!("unrecognized factor `{text}`"));
        let even = |e: &str| -> Result<i64> {
            let k: i64 = e.parse().map_err(|_| bad())?;
            if k % 2 != 0 {
                return Err(Error::Parse(format!("the s exponent in `{text}` must be even")));
            }
            Ok(k / 2)
        };
        let pair = |inner: &str| -> Result<(YoungDiagram, YoungDiagram)> {
            let body = inner.strip_prefix("c(").and_then(|r| r.strip_suffix(')')).ok_or_else(bad)?;
            let (l, m) = body.split_once("],").ok_or_else(bad)?;
            Ok((format!("{l}]").parse()?, m.parse()?))
        };
        match t.as_str() {
            "x" => return Ok(FactorTag::X),
            "v" => return Ok(FactorTag::V),
            "s" => return Ok(FactorTag::S),
            "-1" => return Ok(FactorTag::Unit),
            _ => {}
        }
        if let Some(e) = t.strip_prefix("s^").and_then(|r| r.strip_suffix("-1")) {
            return Ok(FactorTag::SPowMinusOne { n: even(e)? });
        }
        if let Some(e) = t.strip_prefix("v^4-s^") {
            return Ok(FactorTag::VFourMinusS { n: even(e)? });
        }
        if t.starts_with("c(") {
            let (lambda, mu) = pair(&t)?;
            return Ok(FactorTag::C { lambda, mu });
        }
        if let Some((r, c)) = t.strip_prefix("x^").and_then(|r| r.split_once("-1-c(")) {
            let r = r.parse().map_err(|_| bad())?;
            let (lambda, mu) = pair(&format!("c({c}"))?;
            return Ok(FactorTag::Obstruction { r, lambda, mu });
        }
        Err(bad())
    }
}

/// `value = numerator / Π factors`, with every factor a generator of `monoid`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct MonoidCertificate {
    pub value: RationalFunction,
    pub monoid: Monoid,
    pub factors: Vec<FactorTag>,
    pub numerator: LaurentPoly,
    pub notes: Vec<String>,
}

impl MonoidCertificate {
    pub fn denominator(&self) -> LaurentPoly {
        self.factors.iter().fold(LaurentPoly::one(), |acc, t| &acc * &t.polynomial())
    }

    /// The value written over exactly the certified denominator.
    pub fn target(&self) -> RationalFunction {
        RationalFunction::raw(self.numerator.clone(), self.denominator())
    }

    /// Re-check every tag and the defining product.
    pub fn verify(&self) -> Result<()> {
        for t in &self.factors {
            t.check_in(self.monoid)?;
        }
        let lhs = &self.numerator * self.value.denominator();
        let rhs = self.value.numerator() * &self.denominator();
        if lhs != rhs {
            return Err(Error::Certification(format!(
                "numerator * den(value) != num(value) * Π factors for {}",
                self.value
            )));
        }
        Ok(())
    }

    pub fn is_valid(&self) -> bool {
        self.verify().is_ok()
    }
}

/// Certify that `f` lies in the localization at `monoid`, using exactly the
/// generators listed in `provenance`.
pub fn certify_membership(
    f: &RationalFunction,
    monoid: Monoid,
    provenance: &[FactorTag],
) -> Result<MonoidCertificate> {
    for t in provenance {
        t.check_in(monoid)?;
    }
    let product = provenance.iter().fold(LaurentPoly::one(), |acc, t| &acc * &t.polynomial());
    let scaled = f.numerator() * &product;
    let numerator = scaled.div_exact(f.denominator()).ok_or_else(|| {
        Error::Certification(format!(
            "denominator {} does not divide num * Π[{}]",
            f.denominator(),
            provenance.iter().map(|t| t.to_string()).collect::<Vec<_>>().join(", ")
        ))
    })?;
    let mut notes = Vec::new();
    if provenance.iter().any(|t| matches!(t, FactorTag::VFourMinusS { .. })) {
        notes.push("v^4 - s^2n: the range of n is not fixed by the definition of I'; any integer n is accepted".into());
    }
    if provenance.iter().any(|t| matches!(t, FactorTag::X)) && !matches!(monoid, Monoid::Ir(_)) {
        notes.push("x is treated as a unit of the Laurent ring R[x, x^-1]".into());
    }
    let cert = MonoidCertificate { value: f.clone(), monoid, factors: provenance.to_vec(), numerator, notes };
    cert.verify()?;
    Ok(cert)
}

impl MonoidCertificate {
    /// The integer or Laurent polynomial case: no factors at all.
    pub fn trivial(p: LaurentPoly, monoid: Monoid) -> Self {
        Self { value: RationalFunction::from_poly(p.clone()), monoid, factors: vec![], numerator: p, notes: vec![] }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeff::delta;

    fn yd(p: &[usize]) -> YoungDiagram {
        YoungDiagram::new(p.to_vec()).unwrap()
    }

    #[test]
    fn tags_read_back() {
        let tags = [
            FactorTag::X,
            FactorTag::V,
            FactorTag::S,
            FactorTag::Unit,
            FactorTag::SPowMinusOne { n: 2 },
            FactorTag::VFourMinusS { n: 0 },
            FactorTag::VFourMinusS { n: -1 },
            FactorTag::C { lambda: yd(&[2, 1]), mu: yd(&[1, 1, 1]) },
            FactorTag::Obstruction { r: -1, lambda: yd(&[]), mu: yd(&[1]) },
        ];
        for t in tags {
            assert_eq!(t.to_string().parse::<FactorTag>().unwrap(), t);
        }
        assert!("s^3-1".parse::<FactorTag>().is_err());
        assert!("q".parse::<FactorTag>().is_err());
    }

    #[test]
    fn inverse_of_z_over_i() {
        let f = RationalFunction::new(LaurentPoly::one(), LaurentPoly::z()).unwrap();
        let cert = certify_membership(&f, Monoid::I, &[FactorTag::S, FactorTag::SPowMinusOne { n: 1 }]).unwrap();
        assert!(cert.is_valid());
        assert_eq!(cert.target(), f);
        assert_eq!(cert.numerator, LaurentPoly::s().pow(2));
    }

    #[test]
    fn empty_provenance_for_polynomials() {
        let f = RationalFunction::from_int(7);
        let cert = certify_membership(&f, Monoid::I, &[]).unwrap();
        assert!(cert.is_valid());
        assert_eq!(cert, MonoidCertificate::trivial(LaurentPoly::constant(7), Monoid::I));
    }

    #[test]
    fn c_box_box() {
        let b = yd(&[1]);
        let c = c_scalar(&b, &b);
        let f = RationalFunction::new(LaurentPoly::one(), c).unwrap();
        let cert = certify_membership(&f, Monoid::I, &[FactorTag::C { lambda: b.clone(), mu: b }]).unwrap();
        assert!(cert.is_valid());
    }

    #[test]
    fn inverse_delta_over_i_prime() {
        let f = delta().recip().unwrap();
        let tags = [FactorTag::VFourMinusS { n: 0 }, FactorTag::S];
        let cert = certify_membership(&f, Monoid::IPrime, &tags).unwrap();
        assert!(cert.is_valid());
        assert!(!cert.notes.is_empty());
        assert!(certify_membership(&f, Monoid::I, &tags).is_err());
    }

    #[test]
    fn wrong_provenance_is_rejected() {
        let f = RationalFunction::new(LaurentPoly::one(), LaurentPoly::z()).unwrap();
        assert!(matches!(certify_membership(&f, Monoid::I, &[FactorTag::S]), Err(Error::Certification(_))));
        assert!(certify_membership(&f, Monoid::I, &[FactorTag::SPowMinusOne { n: 0 }]).is_err());
        let e = YoungDiagram::empty();
        assert!(FactorTag::C { lambda: e.clone(), mu: e.clone() }.check_in(Monoid::I).is_err());
        assert!(FactorTag::Obstruction { r: 0, lambda: e.clone(), mu: e }.check_in(Monoid::Ir(0)).is_err());
        let ob = FactorTag::Obstruction { r: 1, lambda: yd(&[1]), mu: YoungDiagram::empty() };
        assert!(ob.check_in(Monoid::Ir(1)).is_ok());
        assert!(ob.check_in(Monoid::Ir(2)).is_err());
    }

    #[test]
    fn tampered_certificate_fails_verification() {
        let f = RationalFunction::new(LaurentPoly::one(), LaurentPoly::z()).unwrap();
        let mut cert = certify_membership(&f, Monoid::I, &[FactorTag::S, FactorTag::SPowMinusOne { n: 1 }]).unwrap();
        cert.factors.push(FactorTag::V);
        assert!(cert.verify().is_err());
    }

    #[test]
    fn obstruction_polynomials() {
        let b = yd(&[1]);
        let e = YoungDiagram::empty();
        let p = FactorTag::Obstruction { r: 1, lambda: b.clone(), mu: e }.polynomial();
        let expect: LaurentPoly = "x - 1 - v^-1*s + v^-1*s^-1".parse().unwrap();
        assert_eq!(p, expect);
        let q = FactorTag::Obstruction { r: 0, lambda: b.clone(), mu: b.clone() }.polynomial();
        assert_eq!(q, -c_scalar(&b, &b));
    }

    #[test]
    fn json_round_trip() {
        let f = RationalFunction::new(LaurentPoly::one(), LaurentPoly::z()).unwrap();
        let cert = certify_membership(&f, Monoid::I, &[FactorTag::S, FactorTag::SPowMinusOne { n: 1 }]).unwrap();
        let text = serde_json::to_string(&cert).unwrap();
        let back: MonoidCertificate = serde_json::from_str(&text).unwrap();
        assert_eq!(back, cert);
        assert!(back.is_valid());
    }
}
