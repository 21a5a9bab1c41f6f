//! The lifting construction and its length certificate.
//!
//! Lifting a `K`-message problem by `m` gives an `mK`-message problem in
//! which receiver `k'` inherits the offsets of base receiver
//! `((k'-1) mod K) + 1`, repeated at every shift `iK`, and additionally
//! knows every other translate `x_{k'+iK}` of its own demand. A code for the
//! base problem lifts by substituting `y_k = x_k + x_{k+K} + ... + x_{k+(m-1)K}`,
//! which keeps the number of symbols unchanged.

use std::collections::BTreeSet;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::problem::{IndexCodingProblem, LinearIndexCode};

/// Lift multiplicity, always at least 1.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct LiftSpec(usize);

impl LiftSpec {
    pub fn new(m: usize) -> Result<Self> {
        if m == 0 {
            return Err(Error::ZeroMultiplicity);
        }
        Ok(Self(m))
    }

    #[must_use]
    pub const fn m(self) -> usize {
        self.0
    }
}

pub fn lift_problem(p: &IndexCodingProblem, spec: LiftSpec) -> IndexCodingProblem {
    let m = spec.m();
    if m == 1 {
        return p.clone();
    }
    let k = p.k();
    let sets = (1..=m * k).map(|receiver| {
        let base = p.offsets((receiver - 1) % k + 1);
        let mut set: BTreeSet<usize> = (1..m).map(|i| i * k).collect();
        for &a in base {
            set.extend((0..m).map(|i| a + i * k));
        }
        set
    });
    IndexCodingProblem::per_receiver(m * k, sets).expect("lifted offsets stay within 1..mK-1")
}

pub fn lift_code(
    base: &IndexCodingProblem,
    code: &LinearIndexCode,
    spec: LiftSpec,
) -> Result<LinearIndexCode> {
    let k = base.k();
    if code.k() != k {
        return Err(Error::KMismatch {
            problem: k,
            code: code.k(),
        });
    }
    let m = spec.m();
    let symbols = code
        .symbols()
        .iter()
        .map(|support| {
            support
                .iter()
                .flat_map(|&j| (0..m).map(move |i| j + i * k))
                .collect::<Vec<_>>()
        })
        .collect::<Vec<_>>();
    LinearIndexCode::new(m * k, symbols)
}

/// `K - a_max`: every receiver's side information is contained in the
/// consecutive window `{x_{k+1}, ..., x_{k+a_max}}`, whose optimal length is
/// `K - a_max`, so no valid code can be shorter.
#[must_use]
pub fn length_lower_bound(p: &IndexCodingProblem) -> usize {
    p.k() - p.max_offset()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum OptimalityStatus {
    Optimal,
    Unknown,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct OptimalityCertificate {
    pub status: OptimalityStatus,
    pub bound: usize,
    pub achieved: usize,
}

impl OptimalityCertificate {
    #[must_use]
    pub fn is_optimal(&self) -> bool {
        self.status == OptimalityStatus::Optimal
    }
}

/// Certifies optimality when the code meets the lower bound. A longer code
/// is reported as `Unknown`, never as suboptimal: the bound is one-sided.
/// The caller is expected to have verified the code first.
pub fn optimality_certificate(
    p: &IndexCodingProblem,
    code: &LinearIndexCode,
) -> Result<OptimalityCertificate> {
    if p.k() != code.k() {
        return Err(Error::KMismatch {
            problem: p.k(),
            code: code.k(),
        });
    }
    let bound = length_lower_bound(p);
    let achieved = code.length();
    let status = if achieved == bound {
        OptimalityStatus::Optimal
    } else {
        OptimalityStatus::Unknown
    };
    Ok(OptimalityCertificate {
        status,
        bound,
        achieved,
    })
}
