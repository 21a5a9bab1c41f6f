//! Decodability check for a scalar linear code.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::gf2::{GF2Vector, RowBasis};
use crate::problem::{IndexCodingProblem, LinearIndexCode};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    /// `decodable[k-1]` is the verdict for receiver `k`.
    pub decodable: Vec<bool>,
}

impl VerificationReport {
    #[must_use]
    pub fn overall(&self) -> bool {
        self.decodable.iter().all(|&d| d)
    }

    /// Receivers (1-based) that cannot decode.
    #[must_use]
    pub fn failures(&self) -> Vec<usize> {
        self.decodable
            .iter()
            .enumerate()
            .filter(|(_, &ok)| !ok)
            .map(|(i, _)| i + 1)
            .collect()
    }
}

/// Receiver `k` decodes iff `e_k` lies in the span of the symbol vectors and
/// the unit vectors of its antidotes. Adding those unit vectors is the same
/// as zeroing the antidote coordinates of every symbol, which is what is
/// done here: `e_k` must then lie in the span of the masked symbols.
pub fn verify(p: &IndexCodingProblem, code: &LinearIndexCode) -> Result<VerificationReport> {
    let k = p.k();
    if code.k() != k {
        return Err(Error::KMismatch {
            problem: k,
            code: code.k(),
        });
    }
    let symbols = code.symbol_vectors();
    let decodable = (1..=k)
        .map(|receiver| {
            let known = GF2Vector::from_positions(k, p.known_messages(receiver).map(|j| j - 1));
            let mut basis = RowBasis::new(k);
            for s in &symbols {
                let mut masked = s.clone();
                masked.clear_where(&known);
                basis.insert(masked);
            }
            basis.contains(&GF2Vector::unit(k, receiver - 1))
        })
        .collect();
    Ok(VerificationReport { decodable })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn example1_decodes_everywhere() {
        let p = IndexCodingProblem::uniform(20, [4]).unwrap();
        let c = LinearIndexCode::new(20, (1..=16).map(|i| vec![i, i + 4])).unwrap();
        let report = verify(&p, &c).unwrap();
        assert_eq!(report.decodable.len(), 20);
        assert!(report.overall());
    }

    #[test]
    fn dropping_a_chain_link_breaks_decoding() {
        let p = IndexCodingProblem::uniform(20, [4]).unwrap();
        let c = LinearIndexCode::new(20, (1..=15).map(|i| vec![i, i + 4])).unwrap();
        let report = verify(&p, &c).unwrap();
        assert!(!report.overall());
        assert!(report.failures().contains(&16));
    }

    #[test]
    fn wrapped_antidote_enables_telescoping() {
        // Receiver 17 knows x1 (17+4 wraps); x1+x5, x5+x9, x9+x13, x13+x17
        // sum to x1+x17.
        let p = IndexCodingProblem::uniform(20, [4]).unwrap();
        let c = LinearIndexCode::new(20, vec![vec![1, 5], vec![5, 9], vec![9, 13], vec![13, 17]])
            .unwrap();
        let report = verify(&p, &c).unwrap();
        assert!(report.decodable[16]);
    }

    #[test]
    fn single_parity_with_full_side_information() {
        let p = IndexCodingProblem::uniform(2, [1]).unwrap();
        let c = LinearIndexCode::new(2, vec![vec![1, 2]]).unwrap();
        assert!(verify(&p, &c).unwrap().overall());
    }

    #[test]
    fn no_side_information_fails_everyone() {
        let p = IndexCodingProblem::uniform(3, []).unwrap();
        let c = LinearIndexCode::new(3, vec![vec![1, 2]]).unwrap();
        let report = verify(&p, &c).unwrap();
        assert_eq!(report.decodable, vec![false, false, false]);
        assert_eq!(report.failures(), vec![1, 2, 3]);
    }

    #[test]
    fn k_mismatch() {
        let p = IndexCodingProblem::uniform(3, []).unwrap();
        let c = LinearIndexCode::new(4, vec![vec![1]]).unwrap();
        assert_eq!(
            verify(&p, &c),
            Err(Error::KMismatch {
                problem: 3,
                code: 4
            })
        );
    }
}
