//! Antidote patterns and optimal codes for each family.
//!
//! Every code below has length `K - D`. Indices are computed as absolute
//! positions and then wrapped cyclically; repeated positions within one
//! symbol cancel, as they would in a GF(2) sum.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::family::{ClassDescriptor, Family};
use crate::lift::{lift_code, lift_problem, LiftSpec};
use crate::problem::{cyclic_index, IndexCodingProblem, LinearIndexCode};

/// The family's antidote pattern, lifted by the descriptor's `m`.
pub fn construct_problem_only(desc: &ClassDescriptor) -> Result<IndexCodingProblem> {
    let base = base_problem(desc)?;
    Ok(lift_problem(&base, LiftSpec::new(desc.m())?))
}

/// The family's problem together with its optimal code, both lifted by the
/// descriptor's `m`.
pub fn construct(desc: &ClassDescriptor) -> Result<(IndexCodingProblem, LinearIndexCode)> {
    if !desc.family().has_code() {
        return Err(Error::NoPrintedCode(desc.family()));
    }
    let base = base_problem(desc)?;
    let code = base_code(desc)?;
    let spec = LiftSpec::new(desc.m())?;
    let lifted_code = lift_code(&base, &code, spec)?;
    Ok((lift_problem(&base, spec), lifted_code))
}

fn multiples(step: usize, last: usize) -> Vec<usize> {
    (1..=last / step).map(|t| t * step).collect()
}

fn base_problem(desc: &ClassDescriptor) -> Result<IndexCodingProblem> {
    let k = desc.k();
    let d = desc.d();
    let lambda = desc.lambda().unwrap_or(0);
    let dv = desc.derived();
    let uniform = |offsets: Vec<usize>| IndexCodingProblem::uniform(k, offsets);
    match desc.family() {
        Family::Case1 => uniform(vec![d]),
        Family::Case2 => uniform(multiples(k - d, d)),
        Family::Case6 | Family::Case10 => uniform((1..=d).collect()),
        Family::CaseB => {
            let r = dv.r.expect("case-b has r");
            uniform(vec![k / 2, r, d])
        }
        Family::ClassI => {
            let r = dv.r.expect("class-i has r");
            uniform(multiples(r, d))
        }
        Family::ClassIII => uniform(multiples(lambda, d)),
        Family::Case8 => {
            let r = k - d;
            let p = dv.p.expect("case8 has p");
            let mut offsets: Vec<usize> = (1..=p).map(|i| i * lambda + (i - 1) * r).collect();
            offsets.extend((1..p).map(|i| i * (lambda + r)));
            uniform(offsets)
        }
        Family::ClassII => {
            let split = k - d - lambda;
            piecewise(k, split, d, lambda)
        }
        Family::ClassIV => {
            let split = k + lambda - 2 * d;
            piecewise(k, split, d, lambda)
        }
    }
}

/// `{D}` for receivers `1..=split`, `{λ, 2λ, ..., D}` for the rest.
fn piecewise(k: usize, split: usize, d: usize, lambda: usize) -> Result<IndexCodingProblem> {
    let sets = (1..=k).map(|receiver| {
        if receiver <= split {
            vec![d]
        } else {
            multiples(lambda, d)
        }
    });
    IndexCodingProblem::per_receiver(k, sets)
}

/// Accumulates symbols as GF(2) sums of absolute indices.
struct CodeBuilder {
    k: usize,
    symbols: Vec<BTreeSet<usize>>,
}

impl CodeBuilder {
    fn new(k: usize) -> Self {
        Self {
            k,
            symbols: Vec::new(),
        }
    }

    fn push<I: IntoIterator<Item = usize>>(&mut self, terms: I) {
        let mut support = BTreeSet::new();
        for t in terms {
            let idx = cyclic_index(self.k, t);
            if !support.remove(&idx) {
                support.insert(idx);
            }
        }
        self.symbols.push(support);
    }

    fn finish(self) -> Result<LinearIndexCode> {
        LinearIndexCode::new(self.k, self.symbols)
    }
}

fn base_code(desc: &ClassDescriptor) -> Result<LinearIndexCode> {
    let k = desc.k();
    let d = desc.d();
    let lambda = desc.lambda().unwrap_or(0);
    let dv = desc.derived();
    let mut b = CodeBuilder::new(k);
    match desc.family() {
        Family::Case1 => push_chains(&mut b, d, k / d - 1),
        Family::CaseB => {
            let r = dv.r.expect("case-b has r");
            let n = dv.n.expect("case-b has n");
            let half = k / 2;
            for j in 0..=n - 2 {
                for i in 1..=r {
                    b.push([
                        i + j * r,
                        half + i + j * r,
                        i + (j + 1) * r,
                        half + i + (j + 1) * r,
                    ]);
                }
            }
        }
        Family::Case2 => {
            let r = k - d;
            let n = dv.n.expect("case2 has n");
            for i in 1..=r {
                b.push((0..n).map(|t| i + t * r));
            }
        }
        Family::Case6 => {
            let r = k - d;
            let q = dv.q.expect("case6 has q");
            for i in 1..=r {
                let tail = q * r + 1 + (i - 1) % lambda;
                b.push((0..q).map(|t| i + t * r).chain([tail]));
            }
        }
        Family::Case10 => {
            let r = k - d;
            let q = dv.q.expect("case10 has q");
            let p = dv.p.expect("case10 has p");
            let s = dv.s.expect("case10 has s");
            for i in 1..=lambda {
                let top = i + (q - 1) * r;
                b.push(
                    (0..q)
                        .map(|t| i + t * r)
                        .chain((1..=s - 2).map(|t| top + t * lambda)),
                );
            }
            for i in lambda + 1..=p {
                b.push(
                    (0..q - 1)
                        .map(|t| i + t * r)
                        .chain([i + (q - 1) * r - lambda]),
                );
            }
            for i in p + 1..=r {
                let top = i + (q - 2) * r;
                b.push(
                    (0..q - 1)
                        .map(|t| i + t * r)
                        .chain((1..s).map(|t| top + t * lambda)),
                );
            }
        }
        Family::ClassI => {
            let r = dv.r.expect("class-i has r");
            let p = dv.p.expect("class-i has p");
            let n = dv.n.expect("class-i has n");
            for j in 0..n - p {
                for i in 1..=r {
                    b.push((0..=p).map(|t| i + (j + t) * r));
                }
            }
        }
        Family::ClassII => {
            let n = dv.n.expect("class-ii has n");
            push_chains(&mut b, d, n - 1);
            for r in 1..=lambda {
                let top = k - lambda + r;
                b.push((0..=d / lambda).map(|t| top - t * lambda));
            }
        }
        Family::ClassIII => {
            let p = dv.p.expect("class-iii has p");
            for j in 0..=(k - d - lambda) / lambda {
                for i in 1..=lambda {
                    b.push((0..=p).map(|t| i + (j + t) * lambda));
                }
            }
        }
        Family::ClassIV => {
            let n = dv.n.expect("class-iv has n");
            let p = dv.p.expect("class-iv has p");
            push_chains(&mut b, d, n - 2);
            for i in 0..p {
                b.push([
                    k + 1 + lambda + i - 2 * d,
                    k - d + 1 + i,
                    k - lambda + 1 + i % lambda,
                ]);
            }
        }
        Family::Case8 => return Err(Error::NoPrintedCode(Family::Case8)),
    }
    b.finish()
}

/// `x_{i+(j-1)D} + x_{i+jD}` for `i` in `1..=D`, `j` in `1..=links`.
fn push_chains(b: &mut CodeBuilder, d: usize, links: usize) {
    for j in 1..=links {
        for i in 1..=d {
            b.push([i + (j - 1) * d, i + j * d]);
        }
    }
}
