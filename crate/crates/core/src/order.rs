//! Labeled partial orders and their axioms.

use crate::error::{Error, Result};
use crate::matrix::BitMatrix;

/// `matrix(i, j)` holds iff element i is below or equal to element j.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Poset {
    pub labels: Vec<String>,
    pub matrix: BitMatrix,
}

impl Poset {
    pub fn new(labels: Vec<String>, matrix: BitMatrix) -> Result<Self> {
        if !matrix.is_square() || matrix.rows() != labels.len() {
            return Err(Error::DimensionMismatch(format!(
                "{} labels for a {}x{} order",
                labels.len(),
                matrix.rows(),
                matrix.cols()
            )));
        }
        Ok(Poset { labels, matrix })
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn leq(&self, i: usize, j: usize) -> bool {
        self.matrix.get(i, j)
    }

    pub fn is_reflexive(&self) -> bool {
        (0..self.len()).all(|i| self.leq(i, i))
    }

    pub fn antisymmetry_violations(&self) -> Vec<(usize, usize)> {
        let n = self.len();
        let mut out = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                if self.leq(i, j) && self.leq(j, i) {
                    out.push((i, j));
                }
            }
        }
        out
    }

    pub fn is_antisymmetric(&self) -> bool {
        self.antisymmetry_violations().is_empty()
    }

    pub fn is_transitive(&self) -> bool {
        self.matrix.transitive_closure() == self.matrix
    }

    pub fn validate(&self) -> Result<()> {
        if !self.is_reflexive() {
            return Err(Error::NotAPoset("not reflexive".into()));
        }
        if let Some(&(i, j)) = self.antisymmetry_violations().first() {
            return Err(Error::NotAPoset(format!("`{}` and `{}` are mutually related", self.labels[i], self.labels[j])));
        }
        if !self.is_transitive() {
            return Err(Error::NotAPoset("not transitive".into()));
        }
        Ok(())
    }

    /// Cover pairs (i, j): i < j with nothing strictly between.
    pub fn covers(&self) -> Vec<(usize, usize)> {
        let n = self.len();
        let mut out = Vec::new();
        for i in 0..n {
            for j in 0..n {
                if i == j || !self.leq(i, j) {
                    continue;
                }
                let between = (0..n).any(|k| k != i && k != j && self.leq(i, k) && self.leq(k, j));
                if !between {
                    out.push((i, j));
                }
            }
        }
        out
    }

    /// Elements comparable to at least one other element.
    pub fn comparable(&self) -> Vec<usize> {
        let n = self.len();
        (0..n).filter(|&i| (0..n).any(|j| j != i && (self.leq(i, j) || self.leq(j, i)))).collect()
    }

    pub fn upset(&self, i: usize) -> Vec<usize> {
        (0..self.len()).filter(|&j| self.leq(i, j)).collect()
    }

    pub fn downset(&self, i: usize) -> Vec<usize> {
        (0..self.len()).filter(|&j| self.leq(j, i)).collect()
    }

    /// 0/1 table with labeled rows and columns.
    pub fn render(&self) -> String {
        render_table(&self.labels, &self.labels, |i, j| if self.leq(i, j) { "1".into() } else { "0".into() })
    }
}

/// Right-aligned text table, one column width per column.
pub fn render_table(rows: &[String], cols: &[String], cell: impl Fn(usize, usize) -> String) -> String {
    let cells: Vec<Vec<String>> = (0..rows.len()).map(|i| (0..cols.len()).map(|j| cell(i, j)).collect()).collect();
    let lead = rows.iter().map(String::len).max().unwrap_or(0);
    let widths: Vec<usize> = (0..cols.len())
        .map(|j| cells.iter().map(|r| r[j].len()).chain(std::iter::once(cols[j].len())).max().unwrap_or(1))
        .collect();
    let mut out = format!("{:lead$}", "");
    for (c, w) in cols.iter().zip(&widths) {
        out.push_str(&format!(" {c:>w$}"));
    }
    out.push('\n');
    for (r, row) in rows.iter().zip(&cells) {
        out.push_str(&format!("{r:<lead$}"));
        for (v, w) in row.iter().zip(&widths) {
            out.push_str(&format!(" {v:>w$}"));
        }
        out.push('\n');
    }
    out
}
