//! Rebuilds a printed example and compares it with the embedded copy.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt::Write as _;

use indexcode_core::{
    construct, format_symbol, lift_code, lift_problem, optimality_certificate, verify, LiftSpec,
    LinearIndexCode,
};
use serde::Serialize;

use crate::fixtures::DemoFixture;
use crate::Failure;

#[derive(Debug, Clone, Serialize)]
pub struct DemoReport {
    pub example: usize,
    pub m: usize,
    pub descriptor: String,
    pub k: usize,
    pub symbols: usize,
    pub problem_matches: bool,
    /// Receivers whose offsets differ from the printed pattern.
    pub problem_diff: Vec<usize>,
    pub code_matches: bool,
    /// Printed symbols the construction did not produce.
    pub missing: Vec<String>,
    /// Constructed symbols absent from the printed code.
    pub extra: Vec<String>,
    pub decodable: bool,
    pub optimal: bool,
}

impl DemoReport {
    #[must_use]
    pub fn passed(&self) -> bool {
        self.problem_matches && self.code_matches && self.decodable && self.optimal
    }

    #[must_use]
    pub fn summary(&self) -> String {
        let mut s = format!(
            "example {} m={}: {} ({}; {} symbols over K={})",
            self.example,
            self.m,
            if self.passed() { "pass" } else { "FAIL" },
            self.descriptor,
            self.symbols,
            self.k,
        );
        if !self.problem_matches {
            let _ = write!(
                s,
                "\n  antidote pattern differs at receivers {:?}",
                self.problem_diff
            );
        }
        for sym in &self.missing {
            let _ = write!(s, "\n  missing {sym}");
        }
        for sym in &self.extra {
            let _ = write!(s, "\n  extra   {sym}");
        }
        if !self.decodable {
            s.push_str("\n  verify failed");
        }
        if !self.optimal {
            s.push_str("\n  length does not meet the lower bound");
        }
        s
    }
}

/// Runs example `example` for one multiplicity, or for every multiplicity
/// the fixture carries when `m` is `None`.
pub fn demo(example: usize, m: Option<usize>) -> Result<Vec<DemoReport>, Failure> {
    let fixture = DemoFixture::get(example)
        .ok_or_else(|| Failure::Invalid(format!("no example {example} (expected 1..=7)")))?;
    let ms = match m {
        Some(m) if fixture.case(m).is_some() => vec![m],
        Some(m) => {
            return Err(Failure::Invalid(format!(
                "example {example} has no printed code for m={m} (available: {:?})",
                fixture.multiplicities()
            )))
        }
        None => fixture.multiplicities(),
    };
    ms.into_iter().map(|m| run_case(&fixture, m)).collect()
}

fn run_case(fixture: &DemoFixture, m: usize) -> Result<DemoReport, Failure> {
    let case = fixture.case(m).expect("caller checked m");
    let printed_problem = case.problem()?;
    let printed_code = case.code()?;

    // Build the base pair and lift it explicitly.
    let desc = fixture.descriptor(m)?;
    let (base_p, base_c) = construct(&desc.with_m(1)?)?;
    let spec = LiftSpec::new(m)?;
    let p = lift_problem(&base_p, spec);
    let c = lift_code(&base_p, &base_c, spec)?;
    debug_assert_eq!(construct(&desc)?, (p.clone(), c.clone()));

    let problem_diff: Vec<usize> = (1..=p.k().min(printed_problem.k()))
        .filter(|&k| p.offsets(k) != printed_problem.offsets(k))
        .collect();
    let problem_matches = p == printed_problem;
    let missing = difference(&printed_code, &c);
    let extra = difference(&c, &printed_code);
    let decodable = verify(&p, &c)?.overall();
    let optimal = optimality_certificate(&p, &c)?.is_optimal();
    Ok(DemoReport {
        example: fixture.example,
        m,
        descriptor: desc.to_string(),
        k: p.k(),
        symbols: c.length(),
        problem_matches,
        problem_diff,
        code_matches: c == printed_code,
        missing,
        extra,
        decodable,
        optimal,
    })
}

/// Symbols of `a` not matched by a symbol of `b`, counting multiplicity.
fn difference(a: &LinearIndexCode, b: &LinearIndexCode) -> Vec<String> {
    let mut counts: BTreeMap<&BTreeSet<usize>, isize> = BTreeMap::new();
    for s in a.symbols() {
        *counts.entry(s).or_default() += 1;
    }
    for s in b.symbols() {
        *counts.entry(s).or_default() -= 1;
    }
    counts
        .into_iter()
        .filter(|&(_, n)| n > 0)
        .flat_map(|(s, n)| std::iter::repeat_n(format_symbol(s), n as usize))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_fixture_passes() {
        for n in 1..=7 {
            for r in demo(n, None).unwrap() {
                assert!(r.passed(), "{}", r.summary());
            }
        }
    }

    #[test]
    fn example1_m3_symbols_have_six_terms() {
        let r = &demo(1, Some(3)).unwrap()[0];
        assert_eq!(r.symbols, 16);
        assert_eq!(r.k, 60);
        let fixture = DemoFixture::get(1).unwrap();
        let code = fixture.case(3).unwrap().code().unwrap();
        assert!(code.symbols().iter().all(|s| s.len() == 6));
        assert!(code
            .symbols()
            .iter()
            .any(|s| format_symbol(s) == "x1+x5+x21+x25+x41+x45"));
    }

    #[test]
    fn example3_m2_and_example6_m1() {
        let r = &demo(3, Some(2)).unwrap()[0];
        assert!(r.passed());
        assert_eq!((r.symbols, r.k), (10, 56));
        let r = &demo(6, Some(1)).unwrap()[0];
        assert_eq!(r.symbols, 13);
    }

    #[test]
    fn unsupported_pairs() {
        assert!(matches!(demo(2, Some(3)), Err(Failure::Invalid(_))));
        assert!(matches!(demo(8, None), Err(Failure::Invalid(_))));
    }

    #[test]
    fn diff_counts_multiplicity() {
        let a = LinearIndexCode::new(3, [vec![1], vec![1], vec![2]]).unwrap();
        let b = LinearIndexCode::new(3, [vec![1], vec![3]]).unwrap();
        assert_eq!(difference(&a, &b), ["x1", "x2"]);
        assert_eq!(difference(&b, &a), ["x3"]);
    }
}
