//! Exhaustive identity checks over all basis tuples.
//!
//! Every registry identity is multilinear in each slot among elements of a
//! fixed parity, and homogeneous elements are combinations of equal-parity
//! basis vectors, so vanishing on all basis tuples is equivalent to the
//! identity holding for all homogeneous elements.

use crate::algebra::SuperAlgebra;
use crate::element::Element;
use crate::registry::{registry, IdentityDescriptor, IdentityId};
use crate::sign::SignStats;

/// Violation lists keep at most this many witnesses unless overridden.
pub const DEFAULT_VIOLATION_CAP: usize = 16;

/// A basis tuple with a nonzero defect.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TupleReport {
    pub tuple: Vec<usize>,
    pub defect: Element,
}

/// Outcome of checking one identity on one algebra.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdentityCheck {
    pub id: IdentityId,
    pub holds: bool,
    pub tuples_checked: u64,
    /// Lexicographically first violations, truncated to the cap.
    pub violations: Vec<TupleReport>,
    pub total_violations: u64,
}

/// How an identity fared, including the premise-gated skip case.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CheckStatus {
    Holds,
    Violated,
    Skipped,
}

/// One row of a [`VerificationReport`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdentityReport {
    pub id: IdentityId,
    pub status: CheckStatus,
    pub skip_reason: Option<String>,
    pub tuples_checked: u64,
    pub violations: Vec<TupleReport>,
    pub total_violations: u64,
}

impl IdentityReport {
    pub fn from_check(check: IdentityCheck) -> Self {
        IdentityReport {
            id: check.id,
            status: if check.holds {
                CheckStatus::Holds
            } else {
                CheckStatus::Violated
            },
            skip_reason: None,
            tuples_checked: check.tuples_checked,
            violations: check.violations,
            total_violations: check.total_violations,
        }
    }

    pub fn skipped(id: IdentityId, reason: impl Into<String>) -> Self {
        IdentityReport {
            id,
            status: CheckStatus::Skipped,
            skip_reason: Some(reason.into()),
            tuples_checked: 0,
            violations: Vec::new(),
            total_violations: 0,
        }
    }
}

/// Results for a batch of identities on one algebra.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerificationReport {
    pub algebra: String,
    pub identities: Vec<IdentityReport>,
}

impl VerificationReport {
    /// True when nothing was violated; skipped rows do not count against it.
    pub fn all_hold(&self) -> bool {
        self.identities
            .iter()
            .all(|r| r.status != CheckStatus::Violated)
    }
}

/// Checks one identity on all basis tuples with the default violation cap.
pub fn check_identity(algebra: &SuperAlgebra, id: IdentityId) -> IdentityCheck {
    check_identity_capped(algebra, id, DEFAULT_VIOLATION_CAP)
}

pub fn check_identity_capped(algebra: &SuperAlgebra, id: IdentityId, cap: usize) -> IdentityCheck {
    run_check(algebra, id, cap, None)
}

/// Same as [`check_identity_capped`] while recording sign usage.
pub fn check_identity_with_stats(
    algebra: &SuperAlgebra,
    id: IdentityId,
    cap: usize,
    stats: &mut SignStats,
) -> IdentityCheck {
    run_check(algebra, id, cap, Some(stats))
}

fn run_check(
    algebra: &SuperAlgebra,
    id: IdentityId,
    cap: usize,
    stats: Option<&mut SignStats>,
) -> IdentityCheck {
    let desc = registry().get(id);
    let mut tuples_checked = 0u64;
    let mut violations = Vec::new();
    let mut total_violations = 0u64;
    for_each_defect(
        algebra,
        desc,
        |tuple, defect| {
            tuples_checked += 1;
            if !defect.is_zero() {
                total_violations += 1;
                if violations.len() < cap {
                    violations.push(TupleReport {
                        tuple: tuple.to_vec(),
                        defect,
                    });
                }
            }
            true
        },
        stats,
    );
    IdentityCheck {
        id,
        holds: total_violations == 0,
        tuples_checked,
        violations,
        total_violations,
    }
}

/// Early-exit variant: true iff the identity holds on every basis tuple.
pub fn identity_holds(algebra: &SuperAlgebra, id: IdentityId) -> bool {
    let desc = registry().get(id);
    let mut ok = true;
    for_each_defect(
        algebra,
        desc,
        |_, defect| {
            if defect.is_zero() {
                true
            } else {
                ok = false;
                false
            }
        },
        None,
    );
    ok
}

/// Walks basis tuples in lexicographic order, feeding each defect to `visit`
/// until it returns false.
fn for_each_defect(
    algebra: &SuperAlgebra,
    desc: &IdentityDescriptor,
    mut visit: impl FnMut(&[usize], Element) -> bool,
    mut stats: Option<&mut SignStats>,
) {
    let dim = algebra.dim();
    if dim == 0 {
        return;
    }
    let basis: Vec<Element> = (0..dim).map(|i| algebra.basis_element(i)).collect();
    let mut tuple = vec![0usize; desc.arity];
    loop {
        let args: Vec<&Element> = tuple.iter().map(|&i| &basis[i]).collect();
        let defect = match stats.as_deref_mut() {
            Some(s) => desc.defect_with_stats(algebra, &args, s),
            None => desc.defect(algebra, &args),
        }
        .expect("basis tuples are homogeneous and match the arity");
        if !visit(&tuple, defect) {
            return;
        }
        if !increment(&mut tuple, dim) {
            return;
        }
    }
}

fn increment(tuple: &mut [usize], dim: usize) -> bool {
    for digit in tuple.iter_mut().rev() {
        *digit += 1;
        if *digit < dim {
            return true;
        }
        *digit = 0;
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::TableBuilder;
    use crate::even_map::EvenMap;
    use crate::parity::Parity::{Even, Odd};

    fn abelian2() -> SuperAlgebra {
        TableBuilder::new(vec![Even, Odd])
            .build("abelian", EvenMap::identity(2))
            .unwrap()
    }

    /// Anticommutative but not Lie: [e0,e1] = e2, [e1,e2] = e1, so the
    /// cyclic sum on (e0,e1,e2) is e1·e0 = −e2.
    fn non_lie3() -> SuperAlgebra {
        let mut b = TableBuilder::new(vec![Even, Even, Even]);
        b.bracket(0, 1, Element::basis(3, 2));
        b.bracket(1, 2, Element::basis(3, 1));
        b.build("non-lie", EvenMap::identity(3)).unwrap()
    }

    #[test]
    fn abelian_hom_malcev_checks_sixteen_tuples() {
        let report = check_identity(&abelian2(), IdentityId::HomMalcev);
        assert!(report.holds);
        assert_eq!(report.tuples_checked, 16);
        assert_eq!(report.total_violations, 0);
        assert!(report.violations.is_empty());
    }

    #[test]
    fn violations_are_collected_in_lexicographic_order() {
        let a = non_lie3();
        let report = check_identity(&a, IdentityId::HomLie);
        assert!(!report.holds);
        assert_eq!(report.tuples_checked, 27);
        // The cyclic sum is alternating here, so exactly the six orderings
        // of (0,1,2) violate.
        assert_eq!(report.total_violations, 6);
        assert_eq!(report.violations[0].tuple, vec![0, 1, 2]);
        assert!(!report.violations[0].defect.is_zero());
        let tuples: Vec<&[usize]> = report
            .violations
            .iter()
            .map(|v| v.tuple.as_slice())
            .collect();
        let mut sorted = tuples.clone();
        sorted.sort();
        assert_eq!(tuples, sorted);
    }

    #[test]
    fn caps_truncate_but_count_everything() {
        let a = non_lie3();
        let report = check_identity_capped(&a, IdentityId::HomLie, 2);
        assert_eq!(report.violations.len(), 2);
        assert_eq!(report.total_violations, 6);
        assert!(!report.holds);
    }

    #[test]
    fn identity_holds_matches_the_full_check() {
        let a = non_lie3();
        assert!(!identity_holds(&a, IdentityId::HomLie));
        assert!(identity_holds(&abelian2(), IdentityId::HomLie));
    }

    #[test]
    fn stats_are_accumulated_across_tuples() {
        let mut stats = SignStats::default();
        let a = abelian2();
        let report = check_identity_with_stats(&a, IdentityId::HomLie, 16, &mut stats);
        assert!(report.holds);
        // Three terms per tuple, 8 tuples; the lone even slot keeps two of
        // the three exponents even, so some signs are still negative.
        assert_eq!(stats.evaluated, 3 * 8);
    }

    #[test]
    fn reports_aggregate_checks() {
        let a = non_lie3();
        let report = VerificationReport {
            algebra: a.name().to_string(),
            identities: vec![
                IdentityReport::from_check(check_identity(&a, IdentityId::HomLie)),
                IdentityReport::skipped(IdentityId::S3, "premise not satisfied"),
            ],
        };
        assert!(!report.all_hold());
        assert_eq!(report.identities[1].status, CheckStatus::Skipped);

        let ok = VerificationReport {
            algebra: "abelian".into(),
            identities: vec![IdentityReport::from_check(check_identity(
                &abelian2(),
                IdentityId::HomMalcev,
            ))],
        };
        assert!(ok.all_hold());
    }
}
