//! Agreement scan for the three equivalent characterizations.
//!
//! On a super-anticommutative algebra with multiplicative twist, hom_malcev,
//! s1 and ident_c are three spellings of one condition, so they must agree on
//! every input. The scan evaluates all three on batches of generated algebras
//! and records each triple. A run is only conclusive when both truth values
//! showed up: seeing nothing but "all true" (or nothing but "all false")
//! exercises the equivalence in one direction only.

use rayon::prelude::*;

use crate::algebra::{SuperAlgebra, TableBuilder};
use crate::catalog::{catalog_entries, catalog_morphisms};
use crate::check::identity_holds;
use crate::element::Element;
use crate::error::Result;
use crate::even_map::EvenMap;
use crate::generator::{random_weighted_algebra, WeightedGenSpec};
use crate::parity::Parity;
use crate::registry::IdentityId;
use crate::twist::yau_twist;

/// One algebra's verdict triple.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EquivalenceRecord {
    pub label: String,
    pub hom_malcev: bool,
    pub s1_holds: bool,
    pub ident_c_holds: bool,
}

impl EquivalenceRecord {
    pub fn of(algebra: &SuperAlgebra, label: impl Into<String>) -> Self {
        EquivalenceRecord {
            label: label.into(),
            hom_malcev: identity_holds(algebra, IdentityId::HomMalcev),
            s1_holds: identity_holds(algebra, IdentityId::S1),
            ident_c_holds: identity_holds(algebra, IdentityId::IdentC),
        }
    }

    pub fn agreement(&self) -> bool {
        self.hom_malcev == self.s1_holds && self.s1_holds == self.ident_c_holds
    }

    pub fn all_true(&self) -> bool {
        self.hom_malcev && self.s1_holds && self.ident_c_holds
    }

    pub fn all_false(&self) -> bool {
        !self.hom_malcev && !self.s1_holds && !self.ident_c_holds
    }
}

/// Scan totals plus the two coverage counters.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ScanSummary {
    pub records: u64,
    pub disagreements: u64,
    pub all_true: u64,
    pub all_false: u64,
}

impl ScanSummary {
    /// Both sides of the equivalence were seen and nothing disagreed.
    pub fn conclusive(&self) -> bool {
        self.disagreements == 0 && self.all_true > 0 && self.all_false > 0
    }
}

pub fn summarize(records: &[EquivalenceRecord]) -> ScanSummary {
    let mut summary = ScanSummary {
        records: records.len() as u64,
        disagreements: 0,
        all_true: 0,
        all_false: 0,
    };
    for r in records {
        if !r.agreement() {
            summary.disagreements += 1;
        } else if r.all_true() {
            summary.all_true += 1;
        } else {
            summary.all_false += 1;
        }
    }
    summary
}

/// Evaluates the triple on `trials_per_spec` fresh algebras per spec, seeding
/// trial `t` of spec `s` with `s.seed + t`. Records come back ordered by
/// (spec index, trial) regardless of how the work was scheduled.
pub fn equivalence_scan(
    specs: &[WeightedGenSpec],
    trials_per_spec: u64,
) -> Result<Vec<EquivalenceRecord>> {
    for spec in specs {
        spec.validate()?;
    }
    let jobs: Vec<WeightedGenSpec> = specs
        .iter()
        .flat_map(|spec| {
            (0..trials_per_spec).map(move |t| spec.clone().with_seed(spec.seed.wrapping_add(t)))
        })
        .collect();
    jobs.par_iter()
        .map(|spec| {
            let algebra = random_weighted_algebra(spec)?;
            Ok(EquivalenceRecord::of(&algebra, spec.label()))
        })
        .collect()
}

/// Anticommutative with identity twist but outside the Malcev class, so all
/// three predicates come out false. The catalog scan appends it to guarantee
/// the false side is represented.
pub fn coverage_fixture() -> SuperAlgebra {
    let mut b = TableBuilder::new(vec![Parity::Even; 3]);
    b.bracket(0, 1, Element::basis(3, 2));
    b.bracket(1, 2, Element::basis(3, 1));
    b.build("non_malcev3", EvenMap::identity(3))
        .expect("fixture table is valid")
}

/// Triple records for every catalog algebra and every twist of one, plus the
/// coverage fixture.
pub fn catalog_scan() -> Result<Vec<EquivalenceRecord>> {
    let mut records = Vec::new();
    for entry in catalog_entries()? {
        records.push(EquivalenceRecord::of(&entry.algebra, entry.key.clone()));
        for (map_name, map) in catalog_morphisms(&entry.key)? {
            if map.is_identity() {
                continue; // already recorded untwisted
            }
            let twisted = yau_twist(&entry.algebra, &map)?;
            records.push(EquivalenceRecord::of(
                &twisted,
                format!("{}~{}", entry.key, map_name),
            ));
        }
    }
    let fixture = coverage_fixture();
    records.push(EquivalenceRecord::of(&fixture, fixture.name()));
    Ok(records)
}
