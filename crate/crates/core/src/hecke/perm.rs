use std::fmt;

use crate::error::{Error, Result};

/// A permutation of `{0, .., n-1}` in one-line notation: `self[j]` is the
/// image of `j`. Generator `s_i` (1-based, as in `σ_i`) swaps `i-1` and `i`.
///
/// Products follow function composition, so `T_π = T_{i1} ... T_{ik}` when
/// `π = s_{i1} ∘ ... ∘ s_{ik}` is reduced.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Perm(Vec<u8>);

impl Perm {
    pub fn identity(n: usize) -> Self {
        Perm((0..n as u8).collect())
    }

    pub fn from_one_line(images: Vec<u8>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &i in &images {
            if i as usize >= n || seen[i as usize] {
                return Err(Error::OutOfRange(format!("{images:?} is not a permutation")));
            }
            seen[i as usize] = true;
        }
        Ok(Perm(images))
    }

    /// From 1-based one-line notation, e.g. `[2, 1, 3]`.
    pub fn from_one_based(images: &[usize]) -> Result<Self> {
        let v = images
            .iter()
            .map(|&i| i.checked_sub(1).map(|j| j as u8).ok_or_else(|| Error::OutOfRange("zero entry".into())))
            .collect::<Result<Vec<_>>>()?;
        Self::from_one_line(v)
    }

    /// `s_i` as a permutation of `n` points, `1 ≤ i ≤ n-1`.
    pub fn transposition(i: usize, n: usize) -> Result<Self> {
        if i == 0 || i >= n {
            return Err(Error::OutOfRange(format!("generator s{i} needs 1 <= i <= {}", n.saturating_sub(1))));
        }
        let mut p = Self::identity(n);
        p.0.swap(i - 1, i);
        Ok(p)
    }

    pub fn n(&self) -> usize {
        self.0.len()
    }

    pub fn images(&self) -> &[u8] {
        &self.0
    }

    pub fn apply(&self, j: usize) -> usize {
        self.0[j] as usize
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().enumerate().all(|(j, &i)| j == i as usize)
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0u8; self.n()];
        for (j, &i) in self.0.iter().enumerate() {
            inv[i as usize] = j as u8;
        }
        Perm(inv)
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &Perm) -> Self {
        Perm(other.0.iter().map(|&j| self.0[j as usize]).collect())
    }

    pub fn length(&self) -> usize {
        let n = self.n();
        (0..n).map(|a| (a + 1..n).filter(|&b| self.0[a] > self.0[b]).count()).sum()
    }

    /// `s_i ∘ self`: swap the values `i-1` and `i`.
    pub fn left_mul_generator(&self, i: usize) -> Self {
        let mut p = self.0.clone();
        for x in p.iter_mut() {
            if *x as usize == i - 1 {
                *x = i as u8;
            } else if *x as usize == i {
                *x = (i - 1) as u8;
            }
        }
        Perm(p)
    }

    /// `self ∘ s_i`: swap the positions `i-1` and `i`.
    pub fn right_mul_generator(&self, i: usize) -> Self {
        let mut p = self.0.clone();
        p.swap(i - 1, i);
        Perm(p)
    }

    /// Whether `l(s_i ∘ self) > l(self)`.
    pub fn left_ascent(&self, i: usize) -> bool {
        let pos = |v: usize| self.0.iter().position(|&x| x as usize == v).expect("value present");
        pos(i - 1) < pos(i)
    }

    /// Whether `l(self ∘ s_i) > l(self)`.
    pub fn right_ascent(&self, i: usize) -> bool {
        self.0[i - 1] < self.0[i]
    }

    /// A reduced word `[i1, .., ik]` (1-based) with `self = s_{i1} ∘ ... ∘ s_{ik}`.
    pub fn reduced_word(&self) -> Vec<usize> {
        let mut word = Vec::with_capacity(self.length());
        let mut p = self.clone();
        while let Some(j) = (1..p.n()).find(|&j| !p.right_ascent(j)) {
            word.push(j);
            p = p.right_mul_generator(j);
        }
        word.reverse();
        word
    }

    /// Extend to `n` points, acting on `offset..offset+k` and fixing the rest.
    pub fn embed(&self, n: usize, offset: usize) -> Result<Self> {
        if offset + self.n() > n {
            return Err(Error::OutOfRange(format!(
                "cannot place {} strands at offset {offset} inside {n}",
                self.n()
            )));
        }
        let mut p = Self::identity(n);
        for (j, &i) in self.0.iter().enumerate() {
            p.0[j + offset] = i + offset as u8;
        }
        Ok(p)
    }

    /// Drop the last point, which must be fixed.
    pub fn restrict(&self) -> Option<Self> {
        let n = self.n();
        if n == 0 || self.0[n - 1] as usize != n - 1 {
            return None;
        }
        Some(Perm(self.0[..n - 1].to_vec()))
    }

    /// Conjugation by the longest element: `s_i ↦ s_{n-i}`.
    pub fn flip(&self) -> Self {
        let n = self.n();
        let mut p = vec![0u8; n];
        for (j, &i) in self.0.iter().enumerate() {
            p[n - 1 - j] = (n - 1 - i as usize) as u8;
        }
        Perm(p)
    }

    /// All permutations of `n` points in lexicographic order.
    pub fn all(n: usize) -> Vec<Perm> {
        let mut out = Vec::new();
        let mut cur = Self::identity(n).0;
        loop {
            out.push(Perm(cur.clone()));
            // next lexicographic permutation
            let Some(i) = (1..n).rev().find(|&i| cur[i - 1] < cur[i]) else { break };
            let j = (i..n).rev().find(|&j| cur[j] > cur[i - 1]).expect("pivot");
            cur.swap(i - 1, j);
            cur[i..].reverse();
        }
        out
    }
}

impl fmt::Debug for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Perm{self}")
    }
}

impl fmt::Display for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let one: Vec<String> = self.0.iter().map(|i| (i + 1).to_string()).collect();
        write!(f, "[{}]", one.join(","))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reduced_words_rebuild_the_permutation() {
        for n in 1..=5 {
            for p in Perm::all(n) {
                let w = p.reduced_word();
                assert_eq!(w.len(), p.length());
                let mut q = Perm::identity(n);
                for &i in w.iter().rev() {
                    q = q.left_mul_generator(i);
                }
                assert_eq!(q, p);
            }
        }
    }

    #[test]
    fn composition_conventions() {
        let s1 = Perm::transposition(1, 3).unwrap();
        let s2 = Perm::transposition(2, 3).unwrap();
        let p = s1.compose(&s2);
        assert_eq!(p, s2.left_mul_generator(1));
        assert_eq!(p, s1.right_mul_generator(2));
        assert_eq!(p.reduced_word(), vec![1, 2]);
        assert_eq!(p.apply(2), 0);
    }

    #[test]
    fn ascents_match_lengths() {
        for p in Perm::all(4) {
            for i in 1..4 {
                assert_eq!(p.left_ascent(i), p.left_mul_generator(i).length() > p.length());
                assert_eq!(p.right_ascent(i), p.right_mul_generator(i).length() > p.length());
            }
        }
    }

    #[test]
    fn counts_inverse_flip() {
        assert_eq!(Perm::all(4).len(), 24);
        for p in Perm::all(4) {
            assert!(p.compose(&p.inverse()).is_identity());
            assert_eq!(p.flip().flip(), p);
            assert_eq!(p.flip().length(), p.length());
        }
        assert_eq!(Perm::transposition(1, 4).unwrap().flip(), Perm::transposition(3, 4).unwrap());
        assert!(Perm::transposition(0, 3).is_err());
        assert!(Perm::transposition(3, 3).is_err());
        assert!(Perm::from_one_based(&[1, 1]).is_err());
    }

    #[test]
    fn embedding_shifts() {
        let s1 = Perm::transposition(1, 2).unwrap();
        assert_eq!(s1.embed(3, 1).unwrap(), Perm::transposition(2, 3).unwrap());
        assert!(s1.embed(2, 1).is_err());
    }
}
