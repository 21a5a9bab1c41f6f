//! Named problem families and their parameter constraints.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A problem family with a symmetric (or piecewise symmetric) antidote
/// pattern. Variant order is the canonical sort order used by
/// classification.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Family {
    /// `{x_{k+D}}` with `D | K`.
    #[serde(rename = "case1")]
    Case1,
    /// `{x_{k+r}, x_{k+2r}, ..., x_{k+D}}` with `r = K-D` and `r | K`.
    #[serde(rename = "case2")]
    Case2,
    /// Consecutive `{x_{k+1}, ..., x_{k+D}}` with `(K-D) | (K-λ)`, `λ | (K-D)`.
    #[serde(rename = "case6")]
    Case6,
    /// Interleaved steps of `λ` and `K-D`; no code constructor.
    #[serde(rename = "case8")]
    Case8,
    /// Consecutive `{x_{k+1}, ..., x_{k+D}}` with `(K-D) | (K+λ)`, `λ | (K-D)`.
    #[serde(rename = "case10")]
    Case10,
    /// `{x_{k+K/2}, x_{k+D-K/2}, x_{k+D}}` with `(D-K/2) | (K/2)`.
    #[serde(rename = "case-b")]
    CaseB,
    /// `{x_{k+r}, ..., x_{k+D}}` with `r = K/2-D` and `r | D`.
    #[serde(rename = "class-i")]
    ClassI,
    /// `{x_{k+D}}` for `k <= K-D-λ`, else `{x_{k+λ}, ..., x_{k+D}}`.
    #[serde(rename = "class-ii")]
    ClassII,
    /// `{x_{k+λ}, x_{k+2λ}, ..., x_{k+D}}` with `(D+λ) | K`, `λ | D`.
    #[serde(rename = "class-iii")]
    ClassIII,
    /// `{x_{k+D}}` for `k <= K-2D+λ`, else `{x_{k+λ}, ..., x_{k+D}}`.
    #[serde(rename = "class-iv")]
    ClassIV,
}

impl Family {
    pub const ALL: [Family; 10] = [
        Family::Case1,
        Family::Case2,
        Family::Case6,
        Family::Case8,
        Family::Case10,
        Family::CaseB,
        Family::ClassI,
        Family::ClassII,
        Family::ClassIII,
        Family::ClassIV,
    ];

    #[must_use]
    pub const fn name(self) -> &'static str {
        match self {
            Family::Case1 => "case1",
            Family::Case2 => "case2",
            Family::Case6 => "case6",
            Family::Case8 => "case8",
            Family::Case10 => "case10",
            Family::CaseB => "case-b",
            Family::ClassI => "class-i",
            Family::ClassII => "class-ii",
            Family::ClassIII => "class-iii",
            Family::ClassIV => "class-iv",
        }
    }

    /// Whether descriptors of this family carry a λ parameter.
    #[must_use]
    pub const fn uses_lambda(self) -> bool {
        !matches!(
            self,
            Family::Case1 | Family::Case2 | Family::CaseB | Family::ClassI
        )
    }

    /// Whether an explicit optimal code is known for the family.
    #[must_use]
    pub const fn has_code(self) -> bool {
        !matches!(self, Family::Case8)
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Family::ALL
            .into_iter()
            .find(|f| f.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::UnknownFamily(s.to_string()))
    }
}

/// Quantities derived from `(K, D, λ)`. Which ones are present depends on
/// the family.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Derived {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub r: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub q: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub p: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub n: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub s: Option<usize>,
}

/// A validated family instance. `k` and `d` describe the base problem;
/// `m` is the lift multiplicity applied on top of it.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct ClassDescriptor {
    family: Family,
    k: usize,
    d: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    lambda: Option<usize>,
    m: usize,
    derived: Derived,
}

impl ClassDescriptor {
    pub fn new(
        family: Family,
        k: usize,
        d: usize,
        lambda: Option<usize>,
        m: usize,
    ) -> Result<Self> {
        if m == 0 {
            return Err(Error::ZeroMultiplicity);
        }
        let check = Checker {
            family,
            k,
            d,
            lambda,
        };
        let derived = check.validate()?;
        Ok(Self {
            family,
            k,
            d,
            lambda,
            m,
            derived,
        })
    }

    /// Shorthand for an unlifted instance.
    pub fn base(family: Family, k: usize, d: usize, lambda: Option<usize>) -> Result<Self> {
        Self::new(family, k, d, lambda, 1)
    }

    #[must_use]
    pub const fn family(&self) -> Family {
        self.family
    }

    #[must_use]
    pub const fn k(&self) -> usize {
        self.k
    }

    #[must_use]
    pub const fn d(&self) -> usize {
        self.d
    }

    #[must_use]
    pub const fn lambda(&self) -> Option<usize> {
        self.lambda
    }

    #[must_use]
    pub const fn m(&self) -> usize {
        self.m
    }

    #[must_use]
    pub const fn derived(&self) -> Derived {
        self.derived
    }

    /// Message count of the (possibly lifted) problem, `mK`.
    #[must_use]
    pub const fn total_k(&self) -> usize {
        self.m * self.k
    }

    /// Largest offset of the (possibly lifted) problem, `(m-1)K + D`.
    #[must_use]
    pub const fn total_d(&self) -> usize {
        (self.m - 1) * self.k + self.d
    }

    /// The same instance with a different multiplicity.
    pub fn with_m(&self, m: usize) -> Result<Self> {
        Self::new(self.family, self.k, self.d, self.lambda, m)
    }

    /// Sort key: family, D, λ, m.
    #[must_use]
    pub fn sort_key(&self) -> (Family, usize, usize, usize) {
        (self.family, self.d, self.lambda.unwrap_or(0), self.m)
    }
}

impl fmt::Display for ClassDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}(K={}, D={}", self.family, self.k, self.d)?;
        if let Some(l) = self.lambda {
            write!(f, ", λ={l}")?;
        }
        write!(f, ", m={})", self.m)
    }
}

/// Every valid unlifted instance with `K = k`, in sort-key order.
#[must_use]
pub fn instances_with_k(k: usize) -> Vec<ClassDescriptor> {
    let mut out = Vec::new();
    for family in Family::ALL {
        for d in 1..k {
            if family.uses_lambda() {
                out.extend(
                    (1..=k).filter_map(|l| ClassDescriptor::base(family, k, d, Some(l)).ok()),
                );
            } else {
                out.extend(ClassDescriptor::base(family, k, d, None).ok());
            }
        }
    }
    out
}

struct Checker {
    family: Family,
    k: usize,
    d: usize,
    lambda: Option<usize>,
}

impl Checker {
    fn fail(&self, constraint: impl Into<String>) -> Error {
        Error::Constraint {
            family: self.family,
            k: self.k,
            d: self.d,
            lambda: self.lambda,
            constraint: constraint.into(),
        }
    }

    /// Ok when `a | b`; `a` must be nonzero.
    fn divides(&self, a: usize, a_name: &str, b: usize, b_name: &str) -> Result<usize> {
        if a == 0 || !b.is_multiple_of(a) {
            return Err(self.fail(format!("{a_name} ∤ {b_name} ({a} ∤ {b})")));
        }
        Ok(b / a)
    }

    fn require(&self, ok: bool, constraint: &str) -> Result<()> {
        if ok {
            Ok(())
        } else {
            Err(self.fail(constraint))
        }
    }

    fn validate(&self) -> Result<Derived> {
        let (k, d) = (self.k, self.d);
        self.require(k >= 2, "K >= 2 required")?;
        self.require(d >= 1 && d < k, "1 <= D <= K-1 required")?;
        let lambda = match (self.family.uses_lambda(), self.lambda) {
            (true, Some(l)) => {
                self.require(l >= 1, "λ >= 1 required")?;
                l
            }
            (true, None) => return Err(self.fail("λ is required for this family")),
            (false, Some(_)) => return Err(self.fail("λ is not a parameter of this family")),
            (false, None) => 0,
        };
        let r = k - d;
        let derived = match self.family {
            Family::Case1 => {
                let n = self.divides(d, "D", k, "K")?;
                Derived {
                    n: Some(n),
                    ..Derived::default()
                }
            }
            Family::Case2 => {
                let n = self.divides(r, "(K-D)", k, "K")?;
                Derived {
                    r: Some(r),
                    n: Some(n),
                    ..Derived::default()
                }
            }
            Family::Case6 => {
                let s = self.divides(lambda, "λ", r, "(K-D)")?;
                let q = self.divides(r, "(K-D)", k - lambda, "(K-λ)")?;
                Derived {
                    r: Some(r),
                    q: Some(q),
                    s: Some(s),
                    ..Derived::default()
                }
            }
            Family::Case8 => {
                self.divides(lambda, "λ", r, "(K-D)")?;
                self.require(lambda < d, "λ < D required")?;
                let p = self.divides(r + lambda, "(K-D+λ)", k, "K")?;
                Derived {
                    r: Some(r),
                    p: Some(p),
                    ..Derived::default()
                }
            }
            Family::Case10 => {
                let s = self.divides(lambda, "λ", r, "(K-D)")?;
                let q = self.divides(r, "(K-D)", k + lambda, "(K+λ)")?;
                self.require(lambda < r, "λ < K-D required")?;
                Derived {
                    r: Some(r),
                    q: Some(q),
                    p: Some(r - lambda),
                    s: Some(s),
                    ..Derived::default()
                }
            }
            Family::CaseB => {
                self.divides(2, "2", k, "K")?;
                let half = k / 2;
                self.require(d > half, "D > K/2 required")?;
                let rb = d - half;
                let n = self.divides(rb, "(D-K/2)", half, "(K/2)")?;
                Derived {
                    r: Some(rb),
                    n: Some(n),
                    ..Derived::default()
                }
            }
            Family::ClassI => {
                self.divides(2, "2", k, "K")?;
                let half = k / 2;
                self.require(d < half, "D < K/2 required")?;
                let ri = half - d;
                let p = self.divides(ri, "(K/2-D)", d, "D")?;
                Derived {
                    r: Some(ri),
                    p: Some(p),
                    n: Some(k / ri),
                    ..Derived::default()
                }
            }
            Family::ClassII => {
                self.divides(lambda, "λ", d, "D")?;
                self.require(lambda < d, "λ < D required")?;
                let n = self.divides(d, "D", k - lambda, "(K-λ)")?;
                self.require(n > 1, "(K-λ)/D > 1 required")?;
                Derived {
                    n: Some(n),
                    ..Derived::default()
                }
            }
            Family::ClassIII => {
                let p = self.divides(lambda, "λ", d, "D")?;
                let n = self.divides(d + lambda, "(D+λ)", k, "K")?;
                Derived {
                    p: Some(p),
                    n: Some(n),
                    ..Derived::default()
                }
            }
            Family::ClassIV => {
                self.divides(lambda, "λ", d, "D")?;
                self.require(lambda < d, "λ < D required")?;
                let n = self.divides(d, "D", k + lambda, "(K+λ)")?;
                self.require(n > 2, "(K+λ)/D > 2 required")?;
                Derived {
                    n: Some(n),
                    p: Some(d - lambda),
                    ..Derived::default()
                }
            }
        };
        Ok(derived)
    }
}
