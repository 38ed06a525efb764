//! Canonical text and JSON forms.
//!
//! Polynomials print as a signed sum of terms `c*x^a*v^b*s^c`, terms in
//! ascending lexicographic order of `(e_x, e_v, e_s)`, unit coefficients and
//! unit exponents omitted. Rational functions print as `(<num>)/(<den>)`, or as
//! the bare numerator when the denominator is 1.
//!
//! The JSON mirror is `{"terms": [[e_x, e_v, e_s, "<coeff>"], ...]}` for a
//! polynomial and `{"num": <poly>, "den": <poly>}` for a rational function.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::laurent::{Exponent, LaurentPoly, Var};
use super::rational::RationalFunction;
use crate::error::Error;

fn write_term(f: &mut fmt::Formatter<'_>, exp: &Exponent, abs: &BigInt) -> fmt::Result {
    let mut parts: Vec<String> = Vec::new();
    let is_const = *exp == [0, 0, 0];
    if is_const || !abs.is_one() {
        parts.push(abs.to_string());
    }
    for var in Var::ALL {
        let e = exp[var.index()];
        match e {
            0 => {}
            1 => parts.push(var.name().to_string()),
            _ => parts.push(format!("{}^{}", var.name(), e)),
        }
    }
    write!(f, "{}", parts.join("*"))
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (exp, c)) in self.terms().enumerate() {
            let neg = c.is_negative();
            match (i, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            write_term(f, exp, &c.abs())?;
        }
        Ok(())
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LaurentPoly({self})")
    }
}

impl fmt::Display for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.denominator().is_one() {
            write!(f, "{}", self.numerator())
        } else {
            write!(f, "({})/({})", self.numerator(), self.denominator())
        }
    }
}

fn parse_factor(tok: &str, exp: &mut Exponent, coeff: &mut BigInt) -> Result<(), Error> {
    let tok = tok.trim();
    if tok.is_empty() {
        return Err(Error::Parse("empty factor".into()));
    }
    if tok.chars().next().unwrap().is_ascii_digit() {
        let c: BigInt = tok.parse().map_err(|_| Error::Parse(format!("bad integer `{tok}`")))?;
        *coeff *= c;
        return Ok(());
    }
    let (name, power) = match tok.split_once('^') {
        Some((n, p)) => {
            let p: i32 = p.trim().parse().map_err(|_| Error::Parse(format!("bad exponent in `{tok}`")))?;
            (n.trim(), p)
        }
        None => (tok, 1),
    };
    let var = match name {
        "x" => Var::X,
        "v" => Var::V,
        "s" => Var::S,
        _ => return Err(Error::Parse(format!("unknown variable `{name}`"))),
    };
    exp[var.index()] += power;
    Ok(())
}

fn parse_poly(text: &str) -> Result<LaurentPoly, Error> {
    let text = text.trim();
    if text.is_empty() {
        return Err(Error::Parse("empty polynomial".into()));
    }
    // split on top-level + and - that are not exponent signs
    let mut terms: Vec<(bool, String)> = Vec::new();
    let mut cur = String::new();
    let mut neg = false;
    let mut signed = false;
    let mut prev: Option<char> = None;
    for ch in text.chars() {
        if (ch == '+' || ch == '-') && prev != Some('^') {
            if cur.trim().is_empty() {
                if signed || !terms.is_empty() {
                    return Err(Error::Parse(format!("dangling sign in `{text}`")));
                }
            } else {
                terms.push((neg, std::mem::take(&mut cur)));
            }
            cur.clear();
            neg = ch == '-';
            signed = true;
        } else {
            cur.push(ch);
        }
        if !ch.is_whitespace() {
            prev = Some(ch);
        }
    }
    if cur.trim().is_empty() {
        return Err(Error::Parse(format!("trailing sign in `{text}`")));
    }
    terms.push((neg, cur));
    let mut out = LaurentPoly::zero();
    for (neg, t) in terms {
        let mut exp = [0; 3];
        let mut coeff = BigInt::one();
        for factor in t.split('*') {
            parse_factor(factor, &mut exp, &mut coeff)?;
        }
        if neg {
            coeff = -coeff;
        }
        out.add_term(exp, coeff);
    }
    Ok(out)
}

impl FromStr for LaurentPoly {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self, Error> {
        parse_poly(s)
    }
}

impl FromStr for RationalFunction {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self, Error> {
        let t = s.trim();
        if let Some(rest) = t.strip_prefix('(') {
            if let Some((num, den)) = rest.split_once(")/(") {
                let den = den
                    .strip_suffix(')')
                    .ok_or_else(|| Error::Parse(format!("unbalanced parentheses in `{t}`")))?;
                return RationalFunction::new(parse_poly(num)?, parse_poly(den)?);
            }
        }
        Ok(RationalFunction::from_poly(parse_poly(t)?))
    }
}

#[derive(Serialize, Deserialize)]
struct PolyJson {
    terms: Vec<(i32, i32, i32, String)>,
}

impl From<&LaurentPoly> for PolyJson {
    fn from(p: &LaurentPoly) -> Self {
        PolyJson {
            terms: p.terms().map(|(e, c)| (e[0], e[1], e[2], c.to_string())).collect(),
        }
    }
}

impl TryFrom<PolyJson> for LaurentPoly {
    type Error = Error;
    fn try_from(j: PolyJson) -> Result<Self, Error> {
        let mut p = LaurentPoly::zero();
        for (a, b, c, coeff) in j.terms {
            let k: BigInt = coeff.parse().map_err(|_| Error::Parse(format!("bad coefficient `{coeff}`")))?;
            p.add_term([a, b, c], k);
        }
        Ok(p)
    }
}

impl Serialize for LaurentPoly {
    fn serialize<S: Serializer>(&self, ser: S) -> Result<S::Ok, S::Error> {
        PolyJson::from(self).serialize(ser)
    }
}

impl<'de> Deserialize<'de> for LaurentPoly {
    fn deserialize<D: Deserializer<'de>>(de: D) -> Result<Self, D::Error> {
        let j = PolyJson::deserialize(de)?;
        LaurentPoly::try_from(j).map_err(serde::de::Error::custom)
    }
}

#[derive(Serialize, Deserialize)]
struct RationalJson {
    num: LaurentPoly,
    den: LaurentPoly,
}

impl Serialize for RationalFunction {
    fn serialize<S: Serializer>(&self, ser: S) -> Result<S::Ok, S::Error> {
        RationalJson { num: self.numerator().clone(), den: self.denominator().clone() }.serialize(ser)
    }
}

impl<'de> Deserialize<'de> for RationalFunction {
    fn deserialize<D: Deserializer<'de>>(de: D) -> Result<Self, D::Error> {
        let j = RationalJson::deserialize(de)?;
        RationalFunction::new(j.num, j.den).map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_text() {
        let z = LaurentPoly::z();
        assert_eq!(z.to_string(), "-s^-1 + s");
        let p: LaurentPoly = "3*x^2*v^-1 - s + 1".parse().unwrap();
        assert_eq!(p.to_string(), "1 - s + 3*x^2*v^-1");
        assert_eq!(LaurentPoly::zero().to_string(), "0");
        let r = RationalFunction::new(LaurentPoly::one(), z).unwrap();
        assert_eq!(r.to_string(), "(s)/(-1 + s^2)");
    }

    #[test]
    fn parse_errors() {
        assert!("".parse::<LaurentPoly>().is_err());
        assert!("y^2".parse::<LaurentPoly>().is_err());
        assert!("s^a".parse::<LaurentPoly>().is_err());
        assert!("s +".parse::<LaurentPoly>().is_err());
        assert!("(s)/(0)".parse::<RationalFunction>().is_err());
    }

    #[test]
    fn json_mirror() {
        let p: LaurentPoly = "-123456789012345678901234567890*x*s^-3 + v".parse().unwrap();
        let j = serde_json::to_string(&p).unwrap();
        assert_eq!(j, r#"{"terms":[[0,1,0,"1"],[1,0,-3,"-123456789012345678901234567890"]]}"#);
        let back: LaurentPoly = serde_json::from_str(&j).unwrap();
        assert_eq!(back, p);
    }
}
