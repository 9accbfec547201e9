//! Derived-identity suite with premise gating.
//!
//! The registry's lemma entries are consequences, not axioms: they are only
//! guaranteed on algebras satisfying their premise. Running them elsewhere
//! would report spurious "violations", so unmet premises skip the row and say
//! which assumption failed.

use crate::algebra::SuperAlgebra;
use crate::check::{check_identity, identity_holds, IdentityReport, VerificationReport};
use crate::registry::{registry, IdentityId, Premise};

/// Registry entries that are derived from the axioms rather than axioms
/// themselves, in registry order.
pub const LEMMA_IDS: [IdentityId; 13] = [
    IdentityId::L25_I_A,
    IdentityId::L25_I_B,
    IdentityId::L25_I_C,
    IdentityId::L25_II,
    IdentityId::L26_1,
    IdentityId::L26_2,
    IdentityId::L26_3,
    IdentityId::L26_4,
    IdentityId::L26_5,
    IdentityId::S3,
    IdentityId::S4,
    IdentityId::S5,
    IdentityId::S6,
];

/// Checks every lemma whose premise the algebra satisfies; the rest are
/// reported as skipped with the first failing assumption named.
pub fn lemma_suite(algebra: &SuperAlgebra) -> VerificationReport {
    let anticommutative = algebra.is_anticommutative();
    let multiplicative = algebra.is_multiplicative();
    // Only meaningful (and only computed) once the cheaper premises hold.
    let hom_malcev =
        anticommutative && multiplicative && identity_holds(algebra, IdentityId::HomMalcev);

    let reg = registry();
    let identities = LEMMA_IDS
        .into_iter()
        .map(|id| {
            let unmet = match reg.get(id).premise {
                Premise::None => None,
                Premise::AnticommutativeMultiplicative => {
                    premise_failure(anticommutative, multiplicative, true)
                }
                Premise::HomMalcev => premise_failure(anticommutative, multiplicative, hom_malcev),
            };
            match unmet {
                Some(reason) => IdentityReport::skipped(id, reason),
                None => IdentityReport::from_check(check_identity(algebra, id)),
            }
        })
        .collect();

    VerificationReport {
        algebra: algebra.name().to_string(),
        identities,
    }
}

fn premise_failure(
    anticommutative: bool,
    multiplicative: bool,
    hom_malcev: bool,
) -> Option<&'static str> {
    if !anticommutative {
        Some("premise not met: product is not super-anticommutative")
    } else if !multiplicative {
        Some("premise not met: twisting map is not multiplicative")
    } else if !hom_malcev {
        Some("premise not met: hom_malcev fails")
    } else {
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::TableBuilder;
    use crate::check::CheckStatus;
    use crate::element::Element;
    use crate::even_map::EvenMap;
    use crate::parity::Parity::Even;
    use crate::rational::int;

    fn abelian(dim: usize) -> SuperAlgebra {
        TableBuilder::new(vec![Even; dim])
            .build("abelian", EvenMap::identity(dim))
            .unwrap()
    }

    #[test]
    fn abelian_satisfies_every_lemma() {
        let report = lemma_suite(&abelian(2));
        assert_eq!(report.identities.len(), LEMMA_IDS.len());
        assert!(report.all_hold());
        for row in &report.identities {
            assert_eq!(row.status, CheckStatus::Holds, "{}", row.id);
        }
    }

    #[test]
    fn commutative_product_skips_everything() {
        // e0*e0 = e0 is commutative but not anticommutative.
        let mut b = TableBuilder::new(vec![Even]);
        b.set(0, 0, Element::basis(1, 0));
        let a = b.build("comm", EvenMap::identity(1)).unwrap();
        let report = lemma_suite(&a);
        for row in &report.identities {
            assert_eq!(row.status, CheckStatus::Skipped, "{}", row.id);
            assert_eq!(
                row.skip_reason.as_deref(),
                Some("premise not met: product is not super-anticommutative")
            );
        }
        // Skips are not failures.
        assert!(report.all_hold());
    }

    #[test]
    fn non_multiplicative_alpha_skips_everything() {
        let mut b = TableBuilder::new(vec![Even, Even, Even]);
        b.bracket(0, 1, Element::basis(3, 2));
        let alpha = EvenMap::diagonal(&[int(2), int(3), int(5)]);
        let a = b.build("bad-alpha", alpha).unwrap();
        assert!(a.is_anticommutative());
        assert!(!a.is_multiplicative());
        let report = lemma_suite(&a);
        for row in &report.identities {
            assert_eq!(
                row.skip_reason.as_deref(),
                Some("premise not met: twisting map is not multiplicative"),
                "{}",
                row.id
            );
        }
    }

    #[test]
    fn non_malcev_algebra_runs_first_block_and_skips_the_rest() {
        // Anticommutative with identity twist, but the cyclic sum on
        // (e0,e1,e2) is nonzero, so hom_malcev fails here.
        let mut b = TableBuilder::new(vec![Even, Even, Even]);
        b.bracket(0, 1, Element::basis(3, 2));
        b.bracket(1, 2, Element::basis(3, 1));
        let a = b.build("non-malcev", EvenMap::identity(3)).unwrap();
        assert!(a.is_anticommutative());
        assert!(a.is_multiplicative());
        assert!(!identity_holds(&a, IdentityId::HomMalcev));

        let report = lemma_suite(&a);
        for row in &report.identities {
            match registry().get(row.id).premise {
                Premise::AnticommutativeMultiplicative => {
                    assert_ne!(row.status, CheckStatus::Skipped, "{}", row.id)
                }
                Premise::HomMalcev => {
                    assert_eq!(row.status, CheckStatus::Skipped, "{}", row.id);
                    assert_eq!(
                        row.skip_reason.as_deref(),
                        Some("premise not met: hom_malcev fails")
                    );
                }
                Premise::None => unreachable!("lemma with no premise"),
            }
        }
    }
}
