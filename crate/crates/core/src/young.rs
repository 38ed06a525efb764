//! Young diagrams, standard tableaux and cell contents.
//!
//! Cells are linearized in row-reading order (left to right, top to bottom)
//! everywhere in the crate; strand `k` of `H_n` sits at the `k`-th cell.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::coeff::{LaurentPoly, Var};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct YoungDiagram {
    parts: Vec<usize>,
}

/// A cell `(row, col)`, both 1-based.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Cell {
    pub row: usize,
    pub col: usize,
}

impl Cell {
    pub fn content(self) -> i32 {
        self.col as i32 - self.row as i32
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Sign {
    Plus,
    Minus,
}

impl YoungDiagram {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::InvalidShape(format!("zero part in {parts:?}")));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidShape(format!("parts not weakly decreasing: {parts:?}")));
        }
        Ok(Self { parts })
    }

    pub fn empty() -> Self {
        Self::default()
    }

    /// The one-cell diagram.
    pub fn box1() -> Self {
        Self { parts: vec![1] }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn rows(&self) -> usize {
        self.parts.len()
    }

    /// Cells in row-reading order.
    pub fn cells(&self) -> Vec<Cell> {
        self.parts
            .iter()
            .enumerate()
            .flat_map(|(i, &len)| (1..=len).map(move |j| Cell { row: i + 1, col: j }))
            .collect()
    }

    /// 0-based row-reading position of a cell.
    pub fn position(&self, cell: Cell) -> Option<usize> {
        if cell.row == 0 || cell.row > self.rows() || cell.col == 0 || cell.col > self.parts[cell.row - 1] {
            return None;
        }
        Some(self.parts[..cell.row - 1].iter().sum::<usize>() + cell.col - 1)
    }

    pub fn contains(&self, cell: Cell) -> bool {
        self.position(cell).is_some()
    }

    pub fn conjugate(&self) -> Self {
        let width = self.parts.first().copied().unwrap_or(0);
        let parts = (1..=width).map(|j| self.parts.iter().filter(|&&p| p >= j).count()).collect();
        Self { parts }
    }

    /// Removable corners, top to bottom.
    pub fn corners(&self) -> Vec<Cell> {
        (0..self.rows())
            .filter(|&i| i + 1 == self.rows() || self.parts[i + 1] < self.parts[i])
            .map(|i| Cell { row: i + 1, col: self.parts[i] })
            .collect()
    }

    pub fn remove_corner(&self, cell: Cell) -> Result<Self> {
        if !self.corners().contains(&cell) {
            return Err(Error::InvalidShape(format!("{cell:?} is not a corner of {self}")));
        }
        let mut parts = self.parts.clone();
        parts[cell.row - 1] -= 1;
        if parts[cell.row - 1] == 0 {
            parts.pop();
        }
        Ok(Self { parts })
    }

    pub fn hook_length(&self, cell: Cell) -> usize {
        let arm = self.parts[cell.row - 1] - cell.col;
        let leg = self.parts[cell.row..].iter().filter(|&&p| p >= cell.col).count();
        arm + leg + 1
    }

    /// Number of standard tableaux by the hook length formula.
    pub fn hook_length_count(&self) -> u128 {
        let n = self.size() as u128;
        let fact: u128 = (1..=n).product();
        let hooks: u128 = self.cells().into_iter().map(|c| self.hook_length(c) as u128).product();
        fact / hooks
    }

    /// `Σ_{c∈λ} s^{±2 cn(c)}`.
    pub fn content_sum(&self, sign: Sign) -> LaurentPoly {
        let k = match sign {
            Sign::Plus => 2,
            Sign::Minus => -2,
        };
        LaurentPoly::from_terms(self.cells().into_iter().map(|c| ([0, 0, k * c.content()], 1.into())))
    }

    pub fn content_total(&self) -> i32 {
        self.cells().into_iter().map(Cell::content).sum()
    }
}

/// All partitions of `n`, in reverse lexicographic order (`(n)` first).
pub fn partitions(n: usize) -> Vec<YoungDiagram> {
    fn go(rem: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<YoungDiagram>) {
        if rem == 0 {
            out.push(YoungDiagram { parts: cur.clone() });
            return;
        }
        for p in (1..=rem.min(max)).rev() {
            cur.push(p);
            go(rem - p, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, &mut Vec::new(), &mut out);
    out
}

/// `c_{λ,μ} = v(s^-1 - s) Σ_{c∈μ} s^{-2cn(c)} + v^-1(s - s^-1) Σ_{c∈λ} s^{2cn(c)}`.
pub fn c_scalar(lambda: &YoungDiagram, mu: &YoungDiagram) -> LaurentPoly {
    let z = LaurentPoly::z();
    let mu_part = &(&LaurentPoly::v() * &(-&z)) * &mu.content_sum(Sign::Minus);
    let lambda_part = &(&LaurentPoly::var_pow(Var::V, -1) * &z) * &lambda.content_sum(Sign::Plus);
    &mu_part + &lambda_part
}

impl fmt::Display for YoungDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.parts.iter().map(|p| p.to_string()).collect();
        write!(f, "[{}]", parts.join(","))
    }
}

impl FromStr for YoungDiagram {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        let inner = t
            .strip_prefix('[')
            .and_then(|r| r.strip_suffix(']'))
            .ok_or_else(|| Error::Parse(format!("partition must look like [3,1,1], got `{t}`")))?;
        if inner.trim().is_empty() {
            return Ok(Self::empty());
        }
        let parts = inner
            .split(',')
            .map(|p| p.trim().parse::<usize>().map_err(|_| Error::Parse(format!("bad part `{p}`"))))
            .collect::<Result<Vec<_>>>()?;
        Self::new(parts)
    }
}

impl TryFrom<Vec<usize>> for YoungDiagram {
    type Error = Error;
    fn try_from(v: Vec<usize>) -> Result<Self> {
        Self::new(v)
    }
}

impl From<YoungDiagram> for Vec<usize> {
    fn from(y: YoungDiagram) -> Self {
        y.parts
    }
}

/// A standard tableau, stored as rows of labels `1..=n`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct StandardTableau {
    rows: Vec<Vec<usize>>,
}

impl StandardTableau {
    pub fn new(rows: Vec<Vec<usize>>) -> Result<Self> {
        let shape = YoungDiagram::new(rows.iter().map(Vec::len).collect())?;
        let n = shape.size();
        let mut seen = vec![false; n + 1];
        for &l in rows.iter().flatten() {
            if l == 0 || l > n || seen[l] {
                return Err(Error::InvalidShape(format!("labels must be a permutation of 1..{n}")));
            }
            seen[l] = true;
        }
        for (i, row) in rows.iter().enumerate() {
            if row.windows(2).any(|w| w[0] >= w[1]) {
                return Err(Error::InvalidShape(format!("row {} not increasing", i + 1)));
            }
            if i > 0 {
                for (j, &l) in row.iter().enumerate() {
                    if rows[i - 1][j] >= l {
                        return Err(Error::InvalidShape(format!("column {} not increasing", j + 1)));
                    }
                }
            }
        }
        Ok(Self { rows })
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    pub fn shape(&self) -> YoungDiagram {
        YoungDiagram { parts: self.rows.iter().map(Vec::len).collect() }
    }

    pub fn size(&self) -> usize {
        self.rows.iter().map(Vec::len).sum()
    }

    pub fn cell_of(&self, label: usize) -> Option<Cell> {
        self.rows.iter().enumerate().find_map(|(i, r)| {
            r.iter().position(|&l| l == label).map(|j| Cell { row: i + 1, col: j + 1 })
        })
    }

    /// The extreme cell carrying the largest label.
    pub fn last_cell(&self) -> Cell {
        self.cell_of(self.size()).expect("nonempty tableau")
    }

    /// Delete the cell labeled `n`.
    pub fn restrict(&self) -> Result<Self> {
        let n = self.size();
        if n < 2 {
            return Err(Error::OutOfRange("cannot restrict a tableau with fewer than 2 cells".into()));
        }
        let c = self.last_cell();
        let mut rows = self.rows.clone();
        rows[c.row - 1].pop();
        if rows[c.row - 1].is_empty() {
            rows.pop();
        }
        Ok(Self { rows })
    }

    /// The unique tableau of shape `(1)`.
    pub fn single() -> Self {
        Self { rows: vec![vec![1]] }
    }
}

/// Every standard tableau of shape `λ`, in a deterministic order.
pub fn standard_tableaux(shape: &YoungDiagram) -> Vec<StandardTableau> {
    if shape.is_empty() {
        return vec![StandardTableau { rows: vec![] }];
    }
    let n = shape.size();
    let mut out = Vec::new();
    for corner in shape.corners() {
        let smaller = shape.remove_corner(corner).expect("corner");
        for t in standard_tableaux(&smaller) {
            let mut rows = t.rows;
            if corner.row > rows.len() {
                rows.push(vec![n]);
            } else {
                rows[corner.row - 1].push(n);
            }
            out.push(StandardTableau { rows });
        }
    }
    out.sort();
    out
}

impl fmt::Display for StandardTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self
            .rows
            .iter()
            .map(|r| format!("[{}]", r.iter().map(|l| l.to_string()).collect::<Vec<_>>().join(",")))
            .collect();
        write!(f, "[{}]", rows.join(","))
    }
}

impl FromStr for StandardTableau {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let rows: Vec<Vec<usize>> =
            serde_json::from_str(s.trim()).map_err(|e| Error::Parse(format!("tableau: {e}")))?;
        Self::new(rows)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn yd(p: &[usize]) -> YoungDiagram {
        YoungDiagram::new(p.to_vec()).unwrap()
    }

    fn sp(e: i32) -> LaurentPoly {
        LaurentPoly::var_pow(Var::S, e)
    }

    #[test]
    fn conjugates() {
        assert_eq!(YoungDiagram::empty().conjugate(), YoungDiagram::empty());
        assert_eq!(yd(&[3, 1]).conjugate(), yd(&[2, 1, 1]));
        assert_eq!(yd(&[2, 2]).conjugate(), yd(&[2, 2]));
        for n in 0..=7 {
            for l in partitions(n) {
                assert_eq!(l.conjugate().conjugate(), l);
                assert_eq!(l.conjugate().size(), n);
            }
        }
    }

    #[test]
    fn invalid_shapes() {
        assert!(YoungDiagram::new(vec![1, 2]).is_err());
        assert!(YoungDiagram::new(vec![2, 0]).is_err());
        assert!("[2,a]".parse::<YoungDiagram>().is_err());
        assert!(StandardTableau::new(vec![vec![2, 1]]).is_err());
        assert!(StandardTableau::new(vec![vec![1, 2], vec![3, 4, 5]]).is_err());
        assert!(StandardTableau::new(vec![vec![1, 3], vec![2, 4]]).is_ok());
        assert!(StandardTableau::new(vec![vec![1, 2], vec![1]]).is_err());
    }

    #[test]
    fn content_sums() {
        assert!(YoungDiagram::empty().content_sum(Sign::Plus).is_zero());
        assert_eq!(yd(&[2, 1]).content_sum(Sign::Plus), sp(-2) + LaurentPoly::one() + sp(2));
        assert_eq!(yd(&[2]).content_sum(Sign::Minus), LaurentPoly::one() + sp(-2));
        for n in 0..=6 {
            for l in partitions(n) {
                assert_eq!(l.conjugate().content_sum(Sign::Plus), l.content_sum(Sign::Minus));
            }
        }
    }

    #[test]
    fn c_scalar_examples() {
        let e = YoungDiagram::empty();
        let b = YoungDiagram::box1();
        let z = LaurentPoly::z();
        let vinv = LaurentPoly::var_pow(Var::V, -1);
        assert!(c_scalar(&e, &e).is_zero());
        assert_eq!(c_scalar(&b, &e), &vinv * &z);
        assert_eq!(c_scalar(&b, &b), &z * &(&vinv - &LaurentPoly::v()));
    }

    #[test]
    fn c_scalar_swap_symmetry() {
        let all: Vec<YoungDiagram> = (0..=5).flat_map(partitions).collect();
        for l in &all {
            for m in &all {
                let lhs = c_scalar(l, m);
                let rhs = c_scalar(m, l).invert_vars([false, true, true]);
                assert_eq!(lhs, rhs, "λ={l} μ={m}");
            }
        }
    }

    #[test]
    fn tableau_counts_match_hook_formula() {
        for n in 0..=7 {
            let mut sum_sq = 0u128;
            for l in partitions(n) {
                let tabs = standard_tableaux(&l);
                assert_eq!(tabs.len() as u128, l.hook_length_count(), "λ = {l}");
                let mut dedup = tabs.clone();
                dedup.dedup();
                assert_eq!(dedup.len(), tabs.len());
                for t in &tabs {
                    assert_eq!(StandardTableau::new(t.rows().to_vec()).as_ref(), Ok(t));
                }
                sum_sq += (tabs.len() as u128).pow(2);
            }
            if n <= 6 {
                assert_eq!(sum_sq, (1..=n as u128).product::<u128>());
            }
        }
        assert_eq!(standard_tableaux(&yd(&[4])).len(), 1);
        assert_eq!(standard_tableaux(&yd(&[2, 1])).len(), 2);
    }

    #[test]
    fn restriction() {
        let t2 = StandardTableau::new(vec![vec![1, 2]]).unwrap();
        assert_eq!(t2.restrict().unwrap(), StandardTableau::single());
        let row = StandardTableau::new(vec![vec![1, 2], vec![3]]).unwrap();
        assert_eq!(row.restrict().unwrap().shape(), yd(&[2]));
        let col = StandardTableau::new(vec![vec![1, 3], vec![2]]).unwrap();
        assert_eq!(col.restrict().unwrap().shape(), yd(&[1, 1]));
        assert!(StandardTableau::single().restrict().is_err());
    }

    #[test]
    fn text_formats() {
        assert_eq!("[3,1,1]".parse::<YoungDiagram>().unwrap(), yd(&[3, 1, 1]));
        assert_eq!("[]".parse::<YoungDiagram>().unwrap(), YoungDiagram::empty());
        let t: StandardTableau = "[[1,3],[2]]".parse().unwrap();
        assert_eq!(t.to_string(), "[[1,3],[2]]");
        assert_eq!(yd(&[3, 1, 1]).to_string(), "[3,1,1]");
    }

    #[test]
    fn positions_follow_row_reading_order() {
        let l = yd(&[3, 2]);
        for (k, c) in l.cells().into_iter().enumerate() {
            assert_eq!(l.position(c), Some(k));
        }
        assert_eq!(l.position(Cell { row: 2, col: 3 }), None);
    }
}
