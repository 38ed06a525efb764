use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

use super::element::HeckeElement;

/// A braid word on `n` strands. Letters are signed 1-based generator
/// indices: `3` is `σ_3`, `-3` is `σ_3^{-1}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct BraidWord {
    n: usize,
    letters: Vec<i32>,
}

impl BraidWord {
    pub fn new(n: usize, letters: Vec<i32>) -> Result<Self> {
        if n == 0 {
            return Err(Error::OutOfRange("a braid needs at least one strand".into()));
        }
        for &l in &letters {
            if l == 0 || l.unsigned_abs() as usize >= n {
                return Err(Error::OutOfRange(format!("letter {l} on {n} strands")));
            }
        }
        Ok(Self { n, letters })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn letters(&self) -> &[i32] {
        &self.letters
    }

    pub fn writhe(&self) -> i64 {
        self.letters.iter().map(|&l| l.signum() as i64).sum()
    }

    /// The word read backwards with every letter inverted.
    pub fn inverse(&self) -> Self {
        Self { n: self.n, letters: self.letters.iter().rev().map(|&l| -l).collect() }
    }

    /// Append `σ_n^{±1}` on a new strand (Markov stabilization).
    pub fn stabilize(&self, positive: bool) -> Self {
        let mut letters = self.letters.clone();
        let l = self.n as i32;
        letters.push(if positive { l } else { -l });
        Self { n: self.n + 1, letters }
    }

    /// The permutation of strand positions, as the image of each start point.
    pub fn strand_permutation(&self) -> Vec<usize> {
        let mut at: Vec<usize> = (0..self.n).collect();
        for &l in &self.letters {
            let i = l.unsigned_abs() as usize;
            at.swap(i - 1, i);
        }
        let mut perm = vec![0; self.n];
        for (pos, &strand) in at.iter().enumerate() {
            perm[strand] = pos;
        }
        perm
    }

    /// Number of components of the closure.
    pub fn closure_components(&self) -> usize {
        let perm = self.strand_permutation();
        let mut seen = vec![false; self.n];
        let mut count = 0;
        for start in 0..self.n {
            if seen[start] {
                continue;
            }
            count += 1;
            let mut j = start;
            while !seen[j] {
                seen[j] = true;
                j = perm[j];
            }
        }
        count
    }
}

/// Product of the generators and inverses in word order.
pub fn evaluate_braid(w: &BraidWord) -> HeckeElement {
    let mut e = HeckeElement::one(w.n);
    for &l in &w.letters {
        let i = l.unsigned_abs() as usize;
        if l > 0 {
            e = e.right_mul_generator(i);
        } else {
            let inv = HeckeElement::generator_inverse(i, w.n).expect("validated letter");
            e = e.mul(&inv).expect("same n");
        }
    }
    e
}

impl fmt::Display for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "n={}", self.n)?;
        for &l in &self.letters {
            if l > 0 {
                write!(f, " s{l}")?;
            } else {
                write!(f, " s{}^-1", -l)?;
            }
        }
        Ok(())
    }
}

impl FromStr for BraidWord {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let mut n = None;
        let mut letters = Vec::new();
        for tok in s.split_whitespace() {
            if let Some(k) = tok.strip_prefix("n=") {
                if n.is_some() {
                    return Err(Error::Parse("duplicate `n=` header".into()));
                }
                n = Some(k.parse::<usize>().map_err(|_| Error::Parse(format!("bad strand count `{tok}`")))?);
                continue;
            }
            let body = tok
                .strip_prefix('s')
                .ok_or_else(|| Error::Parse(format!("expected `s<i>` or `s<i>^-1`, got `{tok}`")))?;
            let (idx, sign) = match body.split_once('^') {
                Some((i, "-1")) => (i, -1),
                Some((i, "1")) => (i, 1),
                Some(_) => return Err(Error::Parse(format!("only exponents 1 and -1 are allowed: `{tok}`"))),
                None => (body, 1),
            };
            let i: i32 = idx.parse().map_err(|_| Error::Parse(format!("bad generator index in `{tok}`")))?;
            letters.push(sign * i);
        }
        let n = n.ok_or_else(|| Error::Parse("missing `n=<strands>` header".into()))?;
        BraidWord::new(n, letters)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeff::LaurentPoly;

    #[test]
    fn parse_and_print() {
        let w: BraidWord = "n=3 s1 s2^-1 s1".parse().unwrap();
        assert_eq!(w.letters(), &[1, -2, 1]);
        assert_eq!(w.to_string(), "n=3 s1 s2^-1 s1");
        assert_eq!("n=3\ns1\ns2".parse::<BraidWord>().unwrap().letters(), &[1, 2]);
        assert!("s1".parse::<BraidWord>().is_err());
        assert!("n=2 s2".parse::<BraidWord>().is_err());
        assert!("n=2 t1".parse::<BraidWord>().is_err());
        assert!("n=2 s1^2".parse::<BraidWord>().is_err());
    }

    #[test]
    fn evaluation() {
        let empty = BraidWord::new(3, vec![]).unwrap();
        assert_eq!(evaluate_braid(&empty), HeckeElement::one(3));
        let cancel: BraidWord = "n=2 s1 s1^-1".parse().unwrap();
        assert_eq!(evaluate_braid(&cancel), HeckeElement::one(2));
        let cube: BraidWord = "n=2 s1 s1 s1".parse().unwrap();
        let s = HeckeElement::generator(1, 2).unwrap();
        assert_eq!(evaluate_braid(&cube), s.pow(3));
        // σ^3 = (x^2 z^2 + x^2) σ + x^3 z
        let x = LaurentPoly::x();
        let z = LaurentPoly::z();
        let x2 = &x * &x;
        let lin = &(&x2 * &(&z * &z)) + &x2;
        let expect = &s.scale_poly(&lin) + &HeckeElement::one(2).scale_poly(&(&x2 * &(&x * &z)));
        assert_eq!(evaluate_braid(&cube), expect);
    }

    #[test]
    fn components() {
        assert_eq!("n=2 s1".parse::<BraidWord>().unwrap().closure_components(), 1);
        assert_eq!("n=2 s1 s1".parse::<BraidWord>().unwrap().closure_components(), 2);
        assert_eq!("n=3 s1 s2".parse::<BraidWord>().unwrap().closure_components(), 1);
        assert_eq!(BraidWord::new(3, vec![]).unwrap().closure_components(), 3);
    }
}
