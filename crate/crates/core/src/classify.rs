//! Family recognition and closure of families under lifting.

use serde::Serialize;

use crate::construct::construct_problem_only;
use crate::error::{Error, Result};
use crate::family::{instances_with_k, ClassDescriptor, Family};
use crate::lift::{lift_problem, LiftSpec};
use crate::problem::IndexCodingProblem;

/// Every `(family, K, D, λ, m)` whose generated pattern equals `p` exactly,
/// sorted by family, then D, λ and m.
///
/// The search runs over `m | K` and the valid instances with `K/m`
/// messages, so it is bounded by the problem size.
#[must_use]
pub fn classify(p: &IndexCodingProblem) -> Vec<ClassDescriptor> {
    let total = p.k();
    let target_max = p.max_offset();
    let mut found = Vec::new();
    for m in (1..=total).filter(|m| total.is_multiple_of(*m)) {
        let k = total / m;
        for base in instances_with_k(k) {
            // The lifted pattern's largest offset is (m-1)K + D.
            if (m - 1) * k + base.d() != target_max {
                continue;
            }
            let Ok(desc) = base.with_m(m) else { continue };
            if matches!(construct_problem_only(&desc), Ok(q) if q == *p) {
                found.push(desc);
            }
        }
    }
    found.sort_by_key(ClassDescriptor::sort_key);
    found
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct ClosureResult {
    pub input: ClassDescriptor,
    pub m: usize,
    pub output: ClassDescriptor,
}

/// The family instance produced by lifting `desc` with multiplicity `m`:
///
/// * case2 (K, D) lifts to case2 (mK, (m-1)K + D);
/// * case8 (K, D, λ) lifts to case8 (mK, (m-1)K + D, λ);
/// * case1 (K, D) with `m = 2` lifts to case-b (2K, K + D).
///
/// The claim is checked by comparing the lifted pattern with the pattern
/// generated from the output descriptor.
pub fn check_closure(desc: &ClassDescriptor, m: usize) -> Result<ClosureResult> {
    let family = desc.family();
    let base = desc.with_m(1)?;
    let (out_family, ok_m) = match family {
        Family::Case2 | Family::Case8 => (family, m >= 2),
        Family::Case1 => (Family::CaseB, m == 2),
        other => return Err(Error::NoClosure(other)),
    };
    if !ok_m || desc.m() != 1 {
        return Err(Error::ClosureMultiplicity { family, m });
    }
    let output = ClassDescriptor::base(
        out_family,
        m * base.k(),
        (m - 1) * base.k() + base.d(),
        base.lambda(),
    )?;
    let lifted = lift_problem(&construct_problem_only(&base)?, LiftSpec::new(m)?);
    let direct = construct_problem_only(&output)?;
    if lifted != direct {
        return Err(Error::ClosureMismatch {
            input: base.to_string(),
            output: output.to_string(),
            m,
        });
    }
    Ok(ClosureResult {
        input: base,
        m,
        output,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn desc(family: Family, k: usize, d: usize, lambda: Option<usize>) -> ClassDescriptor {
        ClassDescriptor::base(family, k, d, lambda).unwrap()
    }

    #[test]
    fn example1_is_case1_only() {
        let p = IndexCodingProblem::uniform(20, [4]).unwrap();
        assert_eq!(classify(&p), vec![desc(Family::Case1, 20, 4, None)]);
    }

    #[test]
    fn lifted_case1_is_case_b() {
        let base = construct_problem_only(&desc(Family::Case1, 10, 2, None)).unwrap();
        let lifted = lift_problem(&base, LiftSpec::new(2).unwrap());
        let found = classify(&lifted);
        assert!(
            found.contains(&desc(Family::CaseB, 20, 12, None)),
            "{found:?}"
        );
        assert!(found.contains(&ClassDescriptor::new(Family::Case1, 10, 2, None, 2).unwrap()));
    }

    #[test]
    fn even_multiples_are_case2() {
        let p = IndexCodingProblem::uniform(6, [2, 4]).unwrap();
        assert!(classify(&p).contains(&desc(Family::Case2, 6, 4, None)));
    }

    #[test]
    fn unrelated_pattern_has_no_family() {
        let p = IndexCodingProblem::uniform(7, [2, 3]).unwrap();
        assert!(classify(&p).is_empty());
        let none = IndexCodingProblem::uniform(4, []).unwrap();
        assert!(classify(&none).is_empty());
    }

    #[test]
    fn classification_is_sorted() {
        // consecutive {1..5} with K=18 is class-iii with λ=1
        let p = IndexCodingProblem::uniform(18, 1..=5).unwrap();
        let found = classify(&p);
        assert!(found.contains(&desc(Family::ClassIII, 18, 5, Some(1))));
        let keys: Vec<_> = found.iter().map(ClassDescriptor::sort_key).collect();
        let mut sorted = keys.clone();
        sorted.sort();
        assert_eq!(keys, sorted);
    }

    #[test]
    fn case2_closure() {
        let r = check_closure(&desc(Family::Case2, 6, 4, None), 2).unwrap();
        assert_eq!(r.output, desc(Family::Case2, 12, 10, None));
        assert_eq!(r.output.k() - r.output.d(), 2);
    }

    #[test]
    fn case1_closure_is_case_b() {
        let r = check_closure(&desc(Family::Case1, 10, 2, None), 2).unwrap();
        assert_eq!(r.output, desc(Family::CaseB, 20, 12, None));
        assert!(matches!(
            check_closure(&desc(Family::Case1, 10, 2, None), 3),
            Err(Error::ClosureMultiplicity { .. })
        ));
    }

    #[test]
    fn case8_closure() {
        let r = check_closure(&desc(Family::Case8, 8, 5, Some(1)), 3).unwrap();
        assert_eq!(r.output, desc(Family::Case8, 24, 21, Some(1)));
    }

    #[test]
    fn families_without_closure() {
        assert_eq!(
            check_closure(&desc(Family::ClassIII, 18, 5, Some(1)), 2),
            Err(Error::NoClosure(Family::ClassIII))
        );
        assert!(matches!(
            check_closure(&desc(Family::Case2, 6, 4, None), 1),
            Err(Error::ClosureMultiplicity { .. })
        ));
    }
}
