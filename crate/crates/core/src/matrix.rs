//! Dense boolean matrices stored as packed bit rows.

use std::fmt;

const WORD: usize = 64;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BitMatrix {
    rows: usize,
    cols: usize,
    stride: usize,
    bits: Vec<u64>,
}

impl BitMatrix {
    pub fn new(rows: usize, cols: usize) -> Self {
        let stride = cols.div_ceil(WORD);
        BitMatrix { rows, cols, stride, bits: vec![0; rows * stride] }
    }

    pub fn square(n: usize) -> Self {
        Self::new(n, n)
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::square(n);
        for i in 0..n {
            m.set(i, i, true);
        }
        m
    }

    pub fn full(rows: usize, cols: usize) -> Self {
        let mut m = Self::new(rows, cols);
        for i in 0..rows {
            for j in 0..cols {
                m.set(i, j, true);
            }
        }
        m
    }

    /// Panics if the rows are ragged.
    pub fn from_rows<R: AsRef<[bool]>>(rows: &[R]) -> Self {
        let cols = rows.first().map_or(0, |r| r.as_ref().len());
        let mut m = Self::new(rows.len(), cols);
        for (i, r) in rows.iter().enumerate() {
            let r = r.as_ref();
            assert_eq!(r.len(), cols, "ragged rows");
            for (j, &v) in r.iter().enumerate() {
                m.set(i, j, v);
            }
        }
        m
    }

    pub fn to_rows(&self) -> Vec<Vec<bool>> {
        (0..self.rows).map(|i| (0..self.cols).map(|j| self.get(i, j)).collect()).collect()
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> bool {
        debug_assert!(i < self.rows && j < self.cols);
        self.bits[i * self.stride + j / WORD] >> (j % WORD) & 1 == 1
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: bool) {
        debug_assert!(i < self.rows && j < self.cols);
        let w = &mut self.bits[i * self.stride + j / WORD];
        let mask = 1u64 << (j % WORD);
        if v {
            *w |= mask;
        } else {
            *w &= !mask;
        }
    }

    fn row(&self, i: usize) -> &[u64] {
        &self.bits[i * self.stride..(i + 1) * self.stride]
    }

    fn or_row_from(&mut self, dst: usize, src: &[u64]) {
        let s = self.stride;
        for (d, w) in self.bits[dst * s..(dst + 1) * s].iter_mut().zip(src) {
            *d |= *w;
        }
    }

    pub fn row_is_zero(&self, i: usize) -> bool {
        self.row(i).iter().all(|&w| w == 0)
    }

    pub fn col_is_zero(&self, j: usize) -> bool {
        (0..self.rows).all(|i| !self.get(i, j))
    }

    pub fn is_zero(&self) -> bool {
        self.bits.iter().all(|&w| w == 0)
    }

    pub fn count_ones(&self) -> usize {
        self.bits.iter().map(|w| w.count_ones() as usize).sum()
    }

    /// Cells set in row `i`, ascending.
    pub fn row_ones(&self, i: usize) -> impl Iterator<Item = usize> + '_ {
        (0..self.cols).filter(move |&j| self.get(i, j))
    }

    /// Boolean product: (i,j) iff some k has self(i,k) and other(k,j).
    pub fn compose(&self, other: &BitMatrix) -> BitMatrix {
        assert_eq!(self.cols, other.rows, "dimension mismatch in compose");
        let mut out = BitMatrix::new(self.rows, other.cols);
        for i in 0..self.rows {
            for k in self.row_ones(i) {
                let src = other.row(k).to_vec();
                out.or_row_from(i, &src);
            }
        }
        out
    }

    pub fn transpose(&self) -> BitMatrix {
        let mut out = BitMatrix::new(self.cols, self.rows);
        for i in 0..self.rows {
            for j in self.row_ones(i) {
                out.set(j, i, true);
            }
        }
        out
    }

    pub fn union(&self, other: &BitMatrix) -> BitMatrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let mut out = self.clone();
        for (a, b) in out.bits.iter_mut().zip(&other.bits) {
            *a |= *b;
        }
        out
    }

    pub fn intersection(&self, other: &BitMatrix) -> BitMatrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let mut out = self.clone();
        for (a, b) in out.bits.iter_mut().zip(&other.bits) {
            *a &= *b;
        }
        out
    }

    /// Every set cell of `self` is set in `other`.
    pub fn is_subset(&self, other: &BitMatrix) -> bool {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        self.bits.iter().zip(&other.bits).all(|(a, b)| a & !b == 0)
    }

    /// Row `i` of self is contained in row `j` of other.
    pub fn row_subset(&self, i: usize, other: &BitMatrix, j: usize) -> bool {
        self.row(i).iter().zip(other.row(j)).all(|(a, b)| a & !b == 0)
    }

    /// Warshall closure, square matrices only.
    pub fn transitive_closure(&self) -> BitMatrix {
        assert!(self.is_square());
        let mut m = self.clone();
        for k in 0..m.rows {
            let rk = m.row(k).to_vec();
            for i in 0..m.rows {
                if m.get(i, k) {
                    m.or_row_from(i, &rk);
                }
            }
        }
        m
    }

    pub fn with_diagonal(&self) -> BitMatrix {
        assert!(self.is_square());
        let mut m = self.clone();
        for i in 0..m.rows {
            m.set(i, i, true);
        }
        m
    }

    /// Simultaneous row/column selection: result(a,b) = self(idx[a], idx[b]).
    pub fn select(&self, idx: &[usize]) -> BitMatrix {
        let mut out = BitMatrix::square(idx.len());
        for (a, &i) in idx.iter().enumerate() {
            for (b, &j) in idx.iter().enumerate() {
                if self.get(i, j) {
                    out.set(a, b, true);
                }
            }
        }
        out
    }
}

impl fmt::Debug for BitMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "BitMatrix {}x{}", self.rows, self.cols)?;
        for i in 0..self.rows {
            let line: String = (0..self.cols).map(|j| if self.get(i, j) { '1' } else { '0' }).collect();
            writeln!(f, "  {line}")?;
        }
        Ok(())
    }
}
