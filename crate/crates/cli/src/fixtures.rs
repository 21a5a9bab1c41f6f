//! Printed examples embedded as JSON, one file per example.

use indexcode_core::{
    ClassDescriptor, CodeDoc, Family, IndexCodingProblem, LinearIndexCode, ProblemDoc, Result,
};
use serde::Deserialize;

const SOURCES: [&str; 7] = [
    include_str!("../fixtures/example1.json"),
    include_str!("../fixtures/example2.json"),
    include_str!("../fixtures/example3.json"),
    include_str!("../fixtures/example4.json"),
    include_str!("../fixtures/example5.json"),
    include_str!("../fixtures/example6.json"),
    include_str!("../fixtures/example7.json"),
];

#[derive(Debug, Clone, Deserialize)]
pub struct DemoFixture {
    pub example: usize,
    pub family: Family,
    pub k: usize,
    pub d: usize,
    pub lambda: Option<usize>,
    pub cases: Vec<FixtureCase>,
}

#[derive(Debug, Clone, Deserialize)]
pub struct FixtureCase {
    pub m: usize,
    pub problem: ProblemDoc,
    pub code: CodeDoc,
}

impl DemoFixture {
    /// Example `n` in `1..=7`.
    #[must_use]
    pub fn get(n: usize) -> Option<Self> {
        let src = SOURCES.get(n.checked_sub(1)?)?;
        Some(serde_json::from_str(src).expect("embedded fixture parses"))
    }

    #[must_use]
    pub fn all() -> Vec<Self> {
        (1..=SOURCES.len()).filter_map(Self::get).collect()
    }

    #[must_use]
    pub fn multiplicities(&self) -> Vec<usize> {
        self.cases.iter().map(|c| c.m).collect()
    }

    pub fn case(&self, m: usize) -> Option<&FixtureCase> {
        self.cases.iter().find(|c| c.m == m)
    }

    pub fn descriptor(&self, m: usize) -> Result<ClassDescriptor> {
        ClassDescriptor::new(self.family, self.k, self.d, self.lambda, m)
    }
}

impl FixtureCase {
    pub fn problem(&self) -> Result<IndexCodingProblem> {
        self.problem.clone().try_into()
    }

    pub fn code(&self) -> Result<LinearIndexCode> {
        self.code.clone().try_into()
    }
}
