//! Exact verification of Malcev-type identities for finite-dimensional
//! two-graded algebras equipped with an even twisting map.
//!
//! Everything is computed over arbitrary-precision rationals with zero
//! tolerance: an identity holds exactly when its defect vanishes on every
//! basis tuple, which suffices by multilinearity. The crate provides the
//! algebra types, a data-driven identity registry, a verified catalog of
//! example algebras, Yau twisting, seeded random generators, and a scan that
//! exercises the agreement of the three Malcev-type characterizations.

pub mod algebra;
pub mod catalog;
pub mod cayley;
pub mod check;
pub mod classify;
pub mod element;
pub mod error;
pub mod even_map;
pub mod expr;
pub mod generator;
pub mod lemmas;
pub mod parity;
pub mod rational;
pub mod registry;
pub mod scan;
pub mod sign;
pub mod twist;

pub use algebra::{PairViolation, SuperAlgebra, TableBuilder};
pub use catalog::{
    catalog_algebra, catalog_entries, catalog_keys, catalog_morphisms, CatalogEntry, ExpectedClass,
};
pub use check::{
    check_identity, check_identity_capped, check_identity_with_stats, identity_holds, CheckStatus,
    IdentityCheck, IdentityReport, TupleReport, VerificationReport, DEFAULT_VIOLATION_CAP,
};
pub use classify::{classify, StructureClass};
pub use element::Element;
pub use error::{Error, Result};
pub use even_map::EvenMap;
pub use generator::{random_weighted_algebra, WeightedGenSpec};
pub use lemmas::{lemma_suite, LEMMA_IDS};
pub use parity::{Homogeneity, Parity};
pub use registry::{
    evaluate_defect, g_map, hom_super_jacobian, registry, super_jacobian, IdentityDescriptor,
    IdentityId, Premise,
};
pub use scan::{
    catalog_scan, coverage_fixture, equivalence_scan, summarize, EquivalenceRecord, ScanSummary,
};
pub use sign::{PairSet, Sign, SignStats, SlotSet};
pub use twist::yau_twist;
