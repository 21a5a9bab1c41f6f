//! Multiple-unicast index coding problems and scalar linear codes.
//!
//! Receiver `k` (1-based) demands message `x_k`. Its side information is
//! stored as a set of offsets: offset `a` means the receiver knows the
//! message at cyclic index `k + a`, wrapped into `1..=K` by
//! [`cyclic_index`].

use std::collections::BTreeSet;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::gf2::GF2Vector;

const FORMAT_VERSION: u64 = 1;

/// Wraps a positive absolute index into `1..=k`.
///
/// `cyclic_index(20, 21) == 1`, `cyclic_index(20, 20) == 20`.
#[must_use]
pub fn cyclic_index(k: usize, index: usize) -> usize {
    debug_assert!(k > 0 && index > 0);
    (index - 1) % k + 1
}

/// A validated multiple-unicast index coding problem with `K` messages and
/// `K` receivers.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct IndexCodingProblem {
    k: usize,
    offsets: Vec<BTreeSet<usize>>,
}

impl IndexCodingProblem {
    /// Every receiver gets the same offset set.
    pub fn uniform<I: IntoIterator<Item = usize>>(k: usize, offsets: I) -> Result<Self> {
        let set = collect_offsets(k, 1, offsets)?;
        Ok(Self {
            k,
            offsets: vec![set; k],
        })
    }

    /// One offset set per receiver, in receiver order.
    pub fn per_receiver<I, S>(k: usize, sets: I) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: IntoIterator<Item = usize>,
    {
        if k == 0 {
            return Err(Error::EmptyProblem);
        }
        let offsets = sets
            .into_iter()
            .enumerate()
            .map(|(i, s)| collect_offsets(k, i + 1, s))
            .collect::<Result<Vec<_>>>()?;
        if offsets.len() != k {
            return Err(Error::WrongSetCount {
                expected: k,
                got: offsets.len(),
            });
        }
        Ok(Self { k, offsets })
    }

    /// Number of messages (and receivers).
    #[must_use]
    pub const fn k(&self) -> usize {
        self.k
    }

    /// Offset set of receiver `receiver` (1-based).
    ///
    /// # Panics
    /// Panics if `receiver` is outside `1..=K`.
    #[must_use]
    pub fn offsets(&self, receiver: usize) -> &BTreeSet<usize> {
        &self.offsets[receiver - 1]
    }

    /// All offset sets in receiver order.
    #[must_use]
    pub fn offset_sets(&self) -> &[BTreeSet<usize>] {
        &self.offsets
    }

    /// Absolute indices of the messages receiver `receiver` already knows.
    pub fn antidote_indices(&self, receiver: usize) -> Result<BTreeSet<usize>> {
        if receiver == 0 || receiver > self.k {
            return Err(Error::ReceiverOutOfRange {
                receiver,
                max: self.k,
            });
        }
        Ok(self.known_messages(receiver).collect())
    }

    pub(crate) fn known_messages(&self, receiver: usize) -> impl Iterator<Item = usize> + '_ {
        self.offsets[receiver - 1]
            .iter()
            .map(move |&a| cyclic_index(self.k, receiver + a))
    }

    /// Whether every receiver has the same offset set.
    #[must_use]
    pub fn is_uniform(&self) -> bool {
        self.offsets.windows(2).all(|w| w[0] == w[1])
    }

    /// Largest offset over all receivers, 0 if nobody has side information.
    #[must_use]
    pub fn max_offset(&self) -> usize {
        self.offsets
            .iter()
            .filter_map(|s| s.last().copied())
            .max()
            .unwrap_or(0)
    }

    /// Total number of side-information edges, i.e. the number of free
    /// entries in a fitting matrix.
    #[must_use]
    pub fn free_bits(&self) -> usize {
        self.offsets.iter().map(BTreeSet::len).sum()
    }

    #[must_use]
    pub fn to_json(&self) -> String {
        let doc = ProblemDoc {
            version: FORMAT_VERSION,
            k: self.k,
            antidotes: self
                .offsets
                .iter()
                .map(|s| s.iter().copied().collect())
                .collect(),
        };
        serde_json::to_string(&doc).expect("problem serialization cannot fail")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let doc: ProblemDoc = serde_json::from_str(text)?;
        Self::try_from(doc)
    }

    /// Side-information graph in Graphviz DOT: node `i` has an edge to
    /// every message receiver `i` knows.
    #[must_use]
    pub fn to_dot(&self) -> String {
        let mut out = String::from("digraph side_information {\n");
        for i in 1..=self.k {
            let _ = writeln!(out, "  {i} [label=\"{i}\"];");
        }
        for i in 1..=self.k {
            let known: BTreeSet<usize> = self.known_messages(i).collect();
            for j in known {
                let _ = writeln!(out, "  {i} -> {j};");
            }
        }
        out.push_str("}\n");
        out
    }
}

fn collect_offsets<I: IntoIterator<Item = usize>>(
    k: usize,
    receiver: usize,
    offsets: I,
) -> Result<BTreeSet<usize>> {
    if k == 0 {
        return Err(Error::EmptyProblem);
    }
    let mut set = BTreeSet::new();
    for offset in offsets {
        if offset == 0 || offset >= k {
            return Err(Error::OffsetOutOfRange {
                receiver,
                offset,
                max: k - 1,
            });
        }
        if !set.insert(offset) {
            return Err(Error::DuplicateOffset { receiver, offset });
        }
    }
    Ok(set)
}

/// Wire form of a problem.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ProblemDoc {
    pub version: u64,
    pub k: usize,
    pub antidotes: Vec<Vec<usize>>,
}

impl TryFrom<ProblemDoc> for IndexCodingProblem {
    type Error = Error;

    fn try_from(doc: ProblemDoc) -> Result<Self> {
        if doc.version != FORMAT_VERSION {
            return Err(Error::UnsupportedVersion(doc.version));
        }
        Self::per_receiver(doc.k, doc.antidotes)
    }
}

impl From<&IndexCodingProblem> for ProblemDoc {
    fn from(p: &IndexCodingProblem) -> Self {
        Self {
            version: FORMAT_VERSION,
            k: p.k,
            antidotes: p
                .offsets
                .iter()
                .map(|s| s.iter().copied().collect())
                .collect(),
        }
    }
}

/// A scalar linear index code over GF(2): each transmitted symbol is the
/// sum of the messages in its support.
///
/// Equality is multiset equality of supports; symbol order does not matter.
#[derive(Clone, Debug)]
pub struct LinearIndexCode {
    k: usize,
    symbols: Vec<BTreeSet<usize>>,
}

impl LinearIndexCode {
    pub fn new<I, S>(k: usize, symbols: I) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: IntoIterator<Item = usize>,
    {
        if k == 0 {
            return Err(Error::EmptyProblem);
        }
        let symbols = symbols
            .into_iter()
            .enumerate()
            .map(|(i, s)| {
                let symbol = i + 1;
                let mut support = BTreeSet::new();
                for index in s {
                    if index == 0 || index > k {
                        return Err(Error::IndexOutOfRange {
                            symbol,
                            index,
                            max: k,
                        });
                    }
                    if !support.insert(index) {
                        return Err(Error::DuplicateIndex { symbol, index });
                    }
                }
                if support.is_empty() {
                    return Err(Error::EmptySupport { symbol });
                }
                Ok(support)
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Self { k, symbols })
    }

    #[must_use]
    pub const fn k(&self) -> usize {
        self.k
    }

    /// Number of transmitted symbols.
    #[must_use]
    pub fn length(&self) -> usize {
        self.symbols.len()
    }

    #[must_use]
    pub fn symbols(&self) -> &[BTreeSet<usize>] {
        &self.symbols
    }

    /// Supports in a canonical order, for order-insensitive comparison.
    #[must_use]
    pub fn sorted_supports(&self) -> Vec<&BTreeSet<usize>> {
        let mut v: Vec<_> = self.symbols.iter().collect();
        v.sort();
        v
    }

    /// Characteristic vectors of the supports, indexed from 0.
    #[must_use]
    pub fn symbol_vectors(&self) -> Vec<GF2Vector> {
        self.symbols
            .iter()
            .map(|s| GF2Vector::from_positions(self.k, s.iter().map(|i| i - 1)))
            .collect()
    }

    /// Returns a copy with one more symbol appended.
    pub fn with_symbol<S: IntoIterator<Item = usize>>(&self, support: S) -> Result<Self> {
        let mut all: Vec<Vec<usize>> = self
            .symbols
            .iter()
            .map(|s| s.iter().copied().collect())
            .collect();
        all.push(support.into_iter().collect());
        Self::new(self.k, all)
    }

    #[must_use]
    pub fn to_json(&self) -> String {
        serde_json::to_string(&CodeDoc::from(self)).expect("code serialization cannot fail")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let doc: CodeDoc = serde_json::from_str(text)?;
        Self::try_from(doc)
    }
}

impl PartialEq for LinearIndexCode {
    fn eq(&self, other: &Self) -> bool {
        self.k == other.k && self.sorted_supports() == other.sorted_supports()
    }
}

impl Eq for LinearIndexCode {}

/// Renders a support as `x1+x5+x9`.
#[must_use]
pub fn format_symbol(support: &BTreeSet<usize>) -> String {
    support
        .iter()
        .map(|i| format!("x{i}"))
        .collect::<Vec<_>>()
        .join("+")
}

/// Wire form of a code.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct CodeDoc {
    pub version: u64,
    pub k: usize,
    pub length: usize,
    pub symbols: Vec<Vec<usize>>,
}

impl TryFrom<CodeDoc> for LinearIndexCode {
    type Error = Error;

    fn try_from(doc: CodeDoc) -> Result<Self> {
        if doc.version != FORMAT_VERSION {
            return Err(Error::UnsupportedVersion(doc.version));
        }
        if doc.length != doc.symbols.len() {
            return Err(Error::LengthMismatch {
                declared: doc.length,
                actual: doc.symbols.len(),
            });
        }
        Self::new(doc.k, doc.symbols)
    }
}

impl From<&LinearIndexCode> for CodeDoc {
    fn from(c: &LinearIndexCode) -> Self {
        Self {
            version: FORMAT_VERSION,
            k: c.k,
            length: c.symbols.len(),
            symbols: c
                .symbols
                .iter()
                .map(|s| s.iter().copied().collect())
                .collect(),
        }
    }
}
