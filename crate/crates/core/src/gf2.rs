//! Dense GF(2) linear algebra.
//!
//! Vectors and matrix rows are packed into `u64` words, bit `i` of a vector
//! living in word `i / 64` at position `i % 64`. Elimination always picks the
//! lowest available pivot column and, within a column, the lowest row, so
//! reduced forms are reproducible across runs.

use std::fmt;

use crate::error::{Error, Result};

const WORD_BITS: usize = 64;

fn word_count(len: usize) -> usize {
    len.div_ceil(WORD_BITS)
}

/// A vector over GF(2).
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct GF2Vector {
    len: usize,
    words: Vec<u64>,
}

impl GF2Vector {
    #[must_use]
    pub fn zeros(len: usize) -> Self {
        Self {
            len,
            words: vec![0; word_count(len)],
        }
    }

    /// The standard basis vector with a single one at position `i` (0-based).
    #[must_use]
    pub fn unit(len: usize, i: usize) -> Self {
        let mut v = Self::zeros(len);
        v.set(i, true);
        v
    }

    /// Builds a vector with ones at the given 0-based positions. Repeated
    /// positions cancel, as they would in a GF(2) sum.
    ///
    /// # Panics
    /// Panics if a position is `>= len`.
    #[must_use]
    pub fn from_positions<I: IntoIterator<Item = usize>>(len: usize, positions: I) -> Self {
        let mut v = Self::zeros(len);
        for i in positions {
            v.flip(i);
        }
        v
    }

    #[must_use]
    pub fn from_bits(bits: &[bool]) -> Self {
        Self::from_positions(
            bits.len(),
            bits.iter().enumerate().filter(|(_, &b)| b).map(|(i, _)| i),
        )
    }

    #[must_use]
    pub const fn len(&self) -> usize {
        self.len
    }

    #[must_use]
    pub const fn is_empty(&self) -> bool {
        self.len == 0
    }

    /// # Panics
    /// Panics if `i >= self.len()`.
    #[must_use]
    pub fn get(&self, i: usize) -> bool {
        assert!(i < self.len, "bit {i} out of range (len={})", self.len);
        (self.words[i / WORD_BITS] >> (i % WORD_BITS)) & 1 == 1
    }

    /// # Panics
    /// Panics if `i >= self.len()`.
    pub fn set(&mut self, i: usize, value: bool) {
        assert!(i < self.len, "bit {i} out of range (len={})", self.len);
        let mask = 1u64 << (i % WORD_BITS);
        if value {
            self.words[i / WORD_BITS] |= mask;
        } else {
            self.words[i / WORD_BITS] &= !mask;
        }
    }

    /// # Panics
    /// Panics if `i >= self.len()`.
    pub fn flip(&mut self, i: usize) {
        assert!(i < self.len, "bit {i} out of range (len={})", self.len);
        self.words[i / WORD_BITS] ^= 1u64 << (i % WORD_BITS);
    }

    #[must_use]
    pub fn is_zero(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    /// Number of ones.
    #[must_use]
    pub fn weight(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    /// Position of the lowest set bit, if any.
    #[must_use]
    pub fn lowest_one(&self) -> Option<usize> {
        self.words
            .iter()
            .enumerate()
            .find(|(_, &w)| w != 0)
            .map(|(wi, &w)| wi * WORD_BITS + w.trailing_zeros() as usize)
    }

    /// Adds `other` into `self` (bitwise XOR).
    ///
    /// # Panics
    /// Panics on length mismatch.
    pub fn xor_assign(&mut self, other: &Self) {
        assert_eq!(self.len, other.len, "vector length mismatch");
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a ^= *b;
        }
    }

    /// Clears every position that is set in `mask`.
    ///
    /// # Panics
    /// Panics on length mismatch.
    pub fn clear_where(&mut self, mask: &Self) {
        assert_eq!(self.len, mask.len, "vector length mismatch");
        for (a, b) in self.words.iter_mut().zip(&mask.words) {
            *a &= !*b;
        }
    }

    /// Iterates over the positions of set bits in ascending order.
    pub fn ones(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(wi, &w)| {
            let mut rest = w;
            std::iter::from_fn(move || {
                if rest == 0 {
                    return None;
                }
                let bit = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                Some(wi * WORD_BITS + bit)
            })
        })
    }
}

impl fmt::Debug for GF2Vector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GF2Vector(")?;
        for i in 0..self.len {
            write!(f, "{}", u8::from(self.get(i)))?;
        }
        write!(f, ")")
    }
}

/// A dense `rows x cols` matrix over GF(2), stored row by row.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct GF2Matrix {
    rows: usize,
    cols: usize,
    data: Vec<GF2Vector>,
}

impl GF2Matrix {
    #[must_use]
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            data: vec![GF2Vector::zeros(cols); rows],
        }
    }

    #[must_use]
    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.data[i].set(i, true);
        }
        m
    }

    /// Builds a matrix from row vectors that all have length `cols`.
    pub fn from_rows(cols: usize, rows: Vec<GF2Vector>) -> Result<Self> {
        if let Some(bad) = rows.iter().find(|r| r.len() != cols) {
            return Err(Error::DimensionMismatch {
                expected: cols,
                got: bad.len(),
            });
        }
        Ok(Self {
            rows: rows.len(),
            cols,
            data: rows,
        })
    }

    /// Builds a matrix whose columns are the given vectors of length `rows`.
    pub fn from_columns(rows: usize, columns: &[GF2Vector]) -> Result<Self> {
        let as_rows = Self::from_rows(rows, columns.to_vec())?;
        Ok(as_rows.transpose())
    }

    /// Parses rows written as strings of `0`/`1`, e.g. `["110", "011"]`.
    ///
    /// # Panics
    /// Panics on jagged input or characters other than `0` and `1`.
    #[must_use]
    pub fn from_strs(rows: &[&str]) -> Self {
        let cols = rows.first().map_or(0, |r| r.len());
        let data = rows
            .iter()
            .map(|r| {
                assert_eq!(r.len(), cols, "jagged matrix literal");
                let bits: Vec<bool> = r
                    .chars()
                    .map(|c| match c {
                        '0' => false,
                        '1' => true,
                        other => panic!("invalid matrix character {other:?}"),
                    })
                    .collect();
                GF2Vector::from_bits(&bits)
            })
            .collect();
        Self {
            rows: rows.len(),
            cols,
            data,
        }
    }

    #[must_use]
    pub const fn rows(&self) -> usize {
        self.rows
    }

    #[must_use]
    pub const fn cols(&self) -> usize {
        self.cols
    }

    #[must_use]
    pub fn row(&self, i: usize) -> &GF2Vector {
        &self.data[i]
    }

    #[must_use]
    pub fn get(&self, r: usize, c: usize) -> bool {
        self.data[r].get(c)
    }

    pub fn set(&mut self, r: usize, c: usize, value: bool) {
        self.data[r].set(c, value);
    }

    #[must_use]
    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for (r, row) in self.data.iter().enumerate() {
            for c in row.ones() {
                t.data[c].set(r, true);
            }
        }
        t
    }

    /// Column `c` as a vector of length `rows`.
    #[must_use]
    pub fn column(&self, c: usize) -> GF2Vector {
        GF2Vector::from_positions(self.rows, (0..self.rows).filter(|&r| self.data[r].get(c)))
    }

    /// Appends `v` as a new last column.
    pub fn augment_column(&self, v: &GF2Vector) -> Result<Self> {
        if v.len() != self.rows {
            return Err(Error::DimensionMismatch {
                expected: self.rows,
                got: v.len(),
            });
        }
        let cols = self.cols + 1;
        let data = self
            .data
            .iter()
            .enumerate()
            .map(|(r, row)| {
                GF2Vector::from_positions(cols, row.ones().chain(v.get(r).then_some(self.cols)))
            })
            .collect();
        Ok(Self {
            rows: self.rows,
            cols,
            data,
        })
    }

    /// Reduced row echelon form together with the pivot column of each
    /// nonzero row.
    #[must_use]
    pub fn row_reduce(&self) -> (Self, Vec<usize>) {
        let mut work = self.data.clone();
        let mut pivots = Vec::new();
        let mut next = 0;
        for c in 0..self.cols {
            if next == self.rows {
                break;
            }
            let Some(found) = (next..self.rows).find(|&r| work[r].get(c)) else {
                continue;
            };
            work.swap(next, found);
            let pivot_row = work[next].clone();
            for (r, row) in work.iter_mut().enumerate() {
                if r != next && row.get(c) {
                    row.xor_assign(&pivot_row);
                }
            }
            pivots.push(c);
            next += 1;
        }
        let reduced = Self {
            rows: self.rows,
            cols: self.cols,
            data: work,
        };
        (reduced, pivots)
    }

    #[must_use]
    pub fn rank(&self) -> usize {
        let mut basis = RowBasis::new(self.cols);
        for row in &self.data {
            basis.insert(row.clone());
        }
        basis.rank()
    }

    /// Whether `v` lies in the column space of `self`.
    pub fn in_span(&self, v: &GF2Vector) -> Result<bool> {
        if v.len() != self.rows {
            return Err(Error::DimensionMismatch {
                expected: self.rows,
                got: v.len(),
            });
        }
        let mut basis = RowBasis::new(self.rows);
        for c in 0..self.cols {
            basis.insert(self.column(c));
        }
        Ok(basis.contains(v))
    }
}

impl fmt::Debug for GF2Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "GF2Matrix {}x{} [", self.rows, self.cols)?;
        for row in &self.data {
            let line: String = (0..self.cols)
                .map(|c| if row.get(c) { '1' } else { '0' })
                .collect();
            writeln!(f, "  {line}")?;
        }
        write!(f, "]")
    }
}

/// An incrementally built echelon basis of a subspace of GF(2)^dim.
///
/// Each stored row is reduced against all earlier rows before insertion, so
/// it is zero at their pivots; reducing a vector row by row in insertion
/// order therefore clears every pivot position.
#[derive(Clone, Debug, Default)]
pub struct RowBasis {
    dim: usize,
    rows: Vec<GF2Vector>,
    pivots: Vec<usize>,
}

impl RowBasis {
    #[must_use]
    pub fn new(dim: usize) -> Self {
        Self {
            dim,
            rows: Vec::new(),
            pivots: Vec::new(),
        }
    }

    #[must_use]
    pub const fn dim(&self) -> usize {
        self.dim
    }

    #[must_use]
    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Reduces `v` against the basis in place.
    pub fn reduce(&self, v: &mut GF2Vector) {
        debug_assert_eq!(v.len(), self.dim);
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            if v.get(p) {
                v.xor_assign(row);
            }
        }
    }

    /// Adds `v` to the spanning set. Returns `true` if the rank grew.
    pub fn insert(&mut self, mut v: GF2Vector) -> bool {
        self.reduce(&mut v);
        match v.lowest_one() {
            Some(p) => {
                self.rows.push(v);
                self.pivots.push(p);
                true
            }
            None => false,
        }
    }

    /// Removes the most recently inserted basis row.
    pub fn pop(&mut self) {
        self.rows.pop();
        self.pivots.pop();
    }

    #[must_use]
    pub fn contains(&self, v: &GF2Vector) -> bool {
        let mut w = v.clone();
        self.reduce(&mut w);
        w.is_zero()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn identity_has_full_rank() {
        assert_eq!(GF2Matrix::identity(3).rank(), 3);
    }

    #[test]
    fn zero_matrix_has_rank_zero() {
        assert_eq!(GF2Matrix::zeros(4, 4).rank(), 0);
    }

    #[test]
    fn dependent_third_row() {
        // row3 = row1 + row2
        let m = GF2Matrix::from_strs(&["110", "011", "101"]);
        assert_eq!(m.rank(), 2);
        assert_eq!(m.transpose().rank(), 2);
    }

    #[test]
    fn empty_matrices() {
        assert_eq!(GF2Matrix::zeros(0, 5).rank(), 0);
        assert_eq!(GF2Matrix::zeros(5, 0).rank(), 0);
        assert!(GF2Matrix::zeros(3, 0)
            .in_span(&GF2Vector::zeros(3))
            .unwrap());
    }

    #[test]
    fn zero_vector_is_always_in_span() {
        let m = GF2Matrix::from_strs(&["10", "01", "11"]);
        assert!(m.in_span(&GF2Vector::zeros(3)).unwrap());
    }

    #[test]
    fn sum_of_columns_is_in_span() {
        let e1 = GF2Vector::unit(3, 0);
        let e2 = GF2Vector::unit(3, 1);
        let m = GF2Matrix::from_columns(3, &[e1, e2]).unwrap();
        assert!(m.in_span(&GF2Vector::from_positions(3, [0, 1])).unwrap());
        assert!(!m.in_span(&GF2Vector::unit(3, 2)).unwrap());
    }

    #[test]
    fn orthogonal_coordinate_not_in_span() {
        let m = GF2Matrix::from_columns(2, &[GF2Vector::unit(2, 0)]).unwrap();
        assert!(!m.in_span(&GF2Vector::unit(2, 1)).unwrap());
    }

    #[test]
    fn in_span_rejects_wrong_length() {
        let m = GF2Matrix::identity(3);
        assert_eq!(
            m.in_span(&GF2Vector::zeros(4)),
            Err(Error::DimensionMismatch {
                expected: 3,
                got: 4
            })
        );
    }

    #[test]
    fn row_reduce_is_canonical() {
        let m = GF2Matrix::from_strs(&["011", "110", "101"]);
        let (r, pivots) = m.row_reduce();
        assert_eq!(pivots, vec![0, 1]);
        assert_eq!(r, GF2Matrix::from_strs(&["101", "011", "000"]));
    }

    #[test]
    fn wide_vectors_cross_word_boundaries() {
        let v = GF2Vector::from_positions(130, [0, 63, 64, 129]);
        assert_eq!(v.ones().collect::<Vec<_>>(), vec![0, 63, 64, 129]);
        assert_eq!(v.weight(), 4);
        assert_eq!(v.lowest_one(), Some(0));
        let m = GF2Matrix::from_rows(130, vec![v.clone(), GF2Vector::unit(130, 64)]).unwrap();
        assert_eq!(m.rank(), 2);
        assert_eq!(m.transpose().rank(), 2);
    }

    #[test]
    fn repeated_positions_cancel() {
        let v = GF2Vector::from_positions(4, [1, 2, 1]);
        assert_eq!(v.ones().collect::<Vec<_>>(), vec![2]);
    }
}
