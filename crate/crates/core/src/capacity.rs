//! Symmetric capacity with neighboring antidotes.

use std::fmt;

use num_integer::Integer;
use serde::Serialize;

use crate::error::{Error, Result};

/// `K` messages; each receiver knows the `U` messages before and the `D`
/// messages after its demand.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CapacityQuery {
    pub k: usize,
    pub u: usize,
    pub d: usize,
}

impl CapacityQuery {
    pub fn new(k: usize, u: usize, d: usize) -> Result<Self> {
        if k == 0 {
            return Err(Error::EmptyProblem);
        }
        if u + d > k - 1 {
            return Err(Error::CapacityQuery {
                sum: u + d,
                max: k - 1,
            });
        }
        Ok(Self { k, u, d })
    }
}

/// A positive rational in lowest terms.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct RationalCapacity {
    pub numerator: u64,
    pub denominator: u64,
}

impl RationalCapacity {
    /// # Panics
    /// Panics if either part is zero.
    #[must_use]
    pub fn new(numerator: u64, denominator: u64) -> Self {
        assert!(
            numerator > 0 && denominator > 0,
            "capacity must be positive"
        );
        let g = numerator.gcd(&denominator);
        Self {
            numerator: numerator / g,
            denominator: denominator / g,
        }
    }
}

impl fmt::Display for RationalCapacity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.numerator, self.denominator)
    }
}

/// Capacity per message: 1 when every other message is known, otherwise
/// `(min(U,D)+1) / (K + min(U,D) - max(U,D))`.
#[must_use]
pub fn capacity(q: CapacityQuery) -> RationalCapacity {
    if q.u + q.d == q.k - 1 {
        return RationalCapacity::new(1, 1);
    }
    let lo = q.u.min(q.d) as u64;
    let hi = q.u.max(q.d) as u64;
    RationalCapacity::new(lo + 1, q.k as u64 + lo - hi)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cap(k: usize, u: usize, d: usize) -> RationalCapacity {
        capacity(CapacityQuery::new(k, u, d).unwrap())
    }

    #[test]
    fn one_sided_example() {
        assert_eq!(cap(21, 0, 17), RationalCapacity::new(1, 4));
        assert_eq!(cap(21, 0, 17).to_string(), "1/4");
    }

    #[test]
    fn full_side_information() {
        assert_eq!(cap(5, 2, 2), RationalCapacity::new(1, 1));
        assert_eq!(cap(1, 0, 0), RationalCapacity::new(1, 1));
    }

    #[test]
    fn two_sided_substitution() {
        // (2+1) / (10 + 2 - 3) = 3/9
        let c = cap(10, 2, 3);
        assert_eq!((c.numerator, c.denominator), (1, 3));
        // symmetric in U and D
        assert_eq!(cap(10, 3, 2), c);
    }

    #[test]
    fn no_side_information() {
        assert_eq!(cap(7, 0, 0), RationalCapacity::new(1, 7));
    }

    #[test]
    fn rejects_too_many_antidotes() {
        assert_eq!(
            CapacityQuery::new(5, 3, 2),
            Err(Error::CapacityQuery { sum: 5, max: 4 })
        );
        assert_eq!(CapacityQuery::new(0, 0, 0), Err(Error::EmptyProblem));
    }
}
