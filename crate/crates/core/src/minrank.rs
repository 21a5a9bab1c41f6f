//! Exact minrank over GF(2) by exhaustive search of fitting matrices.
//!
//! A fitting matrix has ones on the diagonal, free entries wherever the
//! receiver of that row knows the message of that column, and zeros
//! elsewhere. Its minimum rank is the optimal scalar linear code length.
//!
//! The search fills rows in order (free bits in row-major order) while
//! maintaining an echelon basis of the rows chosen so far. Rank never
//! decreases as rows are added, so a partial assignment whose rank already
//! reaches the best complete value is cut off. The returned minimum does not
//! depend on this pruning.

use serde::Serialize;

use crate::gf2::{GF2Vector, RowBasis};
use crate::lift::length_lower_bound;
use crate::problem::IndexCodingProblem;

pub const DEFAULT_MAX_FREE_BITS: usize = 24;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct MinrankOptions {
    /// Refuse to search when the problem has more free entries than this.
    pub max_free_bits: usize,
    /// Stop as soon as a matrix reaches `length_lower_bound(p)`.
    pub early_exit: bool,
}

impl Default for MinrankOptions {
    fn default() -> Self {
        Self {
            max_free_bits: DEFAULT_MAX_FREE_BITS,
            early_exit: true,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "status", content = "value", rename_all = "snake_case")]
pub enum MinrankStatus {
    Exact(usize),
    BudgetExceeded,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct MinrankResult {
    #[serde(flatten)]
    pub status: MinrankStatus,
    pub free_bits: usize,
    /// Complete fitting matrices whose rank was evaluated. Pruned subtrees
    /// are not counted.
    pub evaluated: u64,
}

impl MinrankResult {
    #[must_use]
    pub fn value(&self) -> Option<usize> {
        match self.status {
            MinrankStatus::Exact(v) => Some(v),
            MinrankStatus::BudgetExceeded => None,
        }
    }
}

pub fn minrank(p: &IndexCodingProblem, max_free_bits: usize) -> MinrankResult {
    minrank_with(
        p,
        MinrankOptions {
            max_free_bits,
            ..MinrankOptions::default()
        },
    )
}

pub fn minrank_with(p: &IndexCodingProblem, opts: MinrankOptions) -> MinrankResult {
    let free_bits = p.free_bits();
    // enumeration counters are u64
    if free_bits > opts.max_free_bits || free_bits >= 64 {
        return MinrankResult {
            status: MinrankStatus::BudgetExceeded,
            free_bits,
            evaluated: 0,
        };
    }
    let k = p.k();
    // Row i (0-based): diagonal position plus free positions, ascending.
    let rows: Vec<(usize, Vec<usize>)> = (1..=k)
        .map(|receiver| {
            let mut free: Vec<usize> = p.known_messages(receiver).map(|j| j - 1).collect();
            free.sort_unstable();
            (receiver - 1, free)
        })
        .collect();
    let mut search = Search {
        k,
        rows: &rows,
        basis: RowBasis::new(k),
        best: usize::MAX,
        target: if opts.early_exit {
            length_lower_bound(p)
        } else {
            0
        },
        evaluated: 0,
        done: false,
    };
    search.descend(0);
    MinrankResult {
        status: MinrankStatus::Exact(search.best),
        free_bits,
        evaluated: search.evaluated,
    }
}

struct Search<'a> {
    k: usize,
    rows: &'a [(usize, Vec<usize>)],
    basis: RowBasis,
    best: usize,
    /// Stop once `best` reaches this value; 0 disables early exit.
    target: usize,
    evaluated: u64,
    done: bool,
}

impl Search<'_> {
    fn descend(&mut self, row: usize) {
        if row == self.rows.len() {
            self.evaluated += 1;
            let rank = self.basis.rank();
            if rank < self.best {
                self.best = rank;
                if rank <= self.target {
                    self.done = true;
                }
            }
            return;
        }
        let (diag, ref free) = self.rows[row];
        for choice in 0u64..(1u64 << free.len()) {
            if self.done {
                return;
            }
            let mut v = GF2Vector::unit(self.k, diag);
            for (bit, &col) in free.iter().enumerate() {
                if choice >> bit & 1 == 1 {
                    v.set(col, true);
                }
            }
            let grew = self.basis.insert(v);
            if self.basis.rank() < self.best {
                self.descend(row + 1);
            }
            if grew {
                self.basis.pop();
            }
        }
    }
}
