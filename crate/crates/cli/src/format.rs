//! On-disk formats: algebra files in, report files out.
//!
//! Every number is an exact rational rendered as a decimal string ("3",
//! "-1/2"); floats never appear anywhere. Loading re-validates everything the
//! core constructors enforce and reports problems with entry-precise
//! positions ("products\[4\]: ..."), since a structure-constant file is usually
//! edited by hand.

use malcheck_core::{
    rational, CheckStatus, Element, EquivalenceRecord, EvenMap, IdentityReport, Parity,
    ScanSummary, StructureClass, SuperAlgebra, TupleReport,
};
use num_rational::BigRational;
use serde::{Deserialize, Serialize};

/// One structure constant: the e_k coefficient of e_i · e_j.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ProductEntry {
    pub i: usize,
    pub j: usize,
    pub k: usize,
    pub value: String,
}

/// Serialized algebra. Product entries not listed are zero.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AlgebraFile {
    pub name: String,
    pub dim: usize,
    pub parity: Vec<u8>,
    pub products: Vec<ProductEntry>,
    pub alpha: Vec<Vec<String>>,
}

pub fn algebra_to_file(algebra: &SuperAlgebra) -> AlgebraFile {
    let dim = algebra.dim();
    let mut products = Vec::new();
    for i in 0..dim {
        for j in 0..dim {
            for (k, value) in algebra.product(i, j).support() {
                products.push(ProductEntry {
                    i,
                    j,
                    k,
                    value: rational::format_rational(value),
                });
            }
        }
    }
    AlgebraFile {
        name: algebra.name().to_string(),
        dim,
        parity: algebra.parities().iter().map(|p| p.as_u8()).collect(),
        products,
        alpha: algebra
            .alpha()
            .rows()
            .iter()
            .map(|row| row.iter().map(rational::format_rational).collect())
            .collect(),
    }
}

pub fn algebra_from_file(file: &AlgebraFile) -> Result<SuperAlgebra, String> {
    if file.dim == 0 {
        return Err("dim: must be at least 1".into());
    }
    if file.parity.len() != file.dim {
        return Err(format!(
            "parity: has {} entries for dimension {}",
            file.parity.len(),
            file.dim
        ));
    }
    let mut parity = Vec::with_capacity(file.dim);
    for (idx, &bit) in file.parity.iter().enumerate() {
        parity.push(
            Parity::from_u8(bit)
                .map_err(|_| format!("parity[{idx}]: must be 0 or 1, got {bit}"))?,
        );
    }

    let dim = file.dim;
    let mut table = vec![Element::zero(dim); dim * dim];
    let mut seen = vec![false; dim * dim * dim];
    for (idx, entry) in file.products.iter().enumerate() {
        let at = |what: &str, got: usize| format!("products[{idx}]: {what} = {got} out of range");
        if entry.i >= dim {
            return Err(at("i", entry.i));
        }
        if entry.j >= dim {
            return Err(at("j", entry.j));
        }
        if entry.k >= dim {
            return Err(at("k", entry.k));
        }
        let flat = (entry.i * dim + entry.j) * dim + entry.k;
        if seen[flat] {
            return Err(format!(
                "products[{idx}]: duplicate entry for (i, j, k) = ({}, {}, {})",
                entry.i, entry.j, entry.k
            ));
        }
        seen[flat] = true;
        let value =
            rational::parse_rational(&entry.value).map_err(|e| format!("products[{idx}]: {e}"))?;
        table[entry.i * dim + entry.j].set_coeff(entry.k, value);
    }

    if file.alpha.len() != dim {
        return Err(format!(
            "alpha: has {} rows for dimension {}",
            file.alpha.len(),
            dim
        ));
    }
    let mut rows: Vec<Vec<BigRational>> = Vec::with_capacity(dim);
    for (r, row) in file.alpha.iter().enumerate() {
        if row.len() != dim {
            return Err(format!(
                "alpha[{r}]: has {} entries for dimension {dim}",
                row.len()
            ));
        }
        let mut out = Vec::with_capacity(dim);
        for (c, text) in row.iter().enumerate() {
            out.push(rational::parse_rational(text).map_err(|e| format!("alpha[{r}][{c}]: {e}"))?);
        }
        rows.push(out);
    }
    let alpha = EvenMap::from_rows(rows).map_err(|e| format!("alpha: {e}"))?;

    SuperAlgebra::new(file.name.clone(), parity, table, alpha).map_err(|e| e.to_string())
}

/// A violating tuple with its nonzero defect, coefficients as strings.
#[derive(Debug, Serialize)]
pub struct ViolationOut {
    pub tuple: Vec<usize>,
    pub defect: Vec<String>,
}

impl ViolationOut {
    pub fn from_tuple(report: &TupleReport) -> Self {
        ViolationOut {
            tuple: report.tuple.clone(),
            defect: element_strings(&report.defect),
        }
    }
}

fn element_strings(e: &Element) -> Vec<String> {
    e.coeffs().iter().map(rational::format_rational).collect()
}

/// One row of a check report: a registry identity or a structural premise.
#[derive(Debug, Serialize)]
pub struct CheckRow {
    pub id: String,
    pub holds: bool,
    pub tuples_checked: u64,
    pub total_violations: u64,
    pub violations: Vec<ViolationOut>,
}

impl CheckRow {
    pub fn from_identity(report: &IdentityReport) -> Self {
        CheckRow {
            id: report.id.name().to_string(),
            holds: report.status != CheckStatus::Violated,
            tuples_checked: report.tuples_checked,
            total_violations: report.total_violations,
            violations: report
                .violations
                .iter()
                .map(ViolationOut::from_tuple)
                .collect(),
        }
    }
}

#[derive(Debug, Serialize)]
pub struct CheckReport {
    pub algebra: String,
    pub checks: Vec<CheckRow>,
}

#[derive(Debug, Serialize)]
pub struct ClassifyReport {
    pub algebra: String,
    pub anticommutative: bool,
    pub multiplicative: bool,
    pub hom_lie: bool,
    pub hom_malcev: bool,
    pub s1_holds: bool,
    pub ident_c_holds: bool,
    pub malcev_plain: bool,
}

impl ClassifyReport {
    pub fn new(name: &str, class: &StructureClass) -> Self {
        ClassifyReport {
            algebra: name.to_string(),
            anticommutative: class.anticommutative,
            multiplicative: class.multiplicative,
            hom_lie: class.hom_lie,
            hom_malcev: class.hom_malcev,
            s1_holds: class.s1_holds,
            ident_c_holds: class.ident_c_holds,
            malcev_plain: class.malcev_plain,
        }
    }
}

#[derive(Debug, Serialize)]
pub struct ScanRecordOut {
    pub label: String,
    pub hom_malcev: bool,
    pub s1_holds: bool,
    pub ident_c_holds: bool,
    pub agreement: bool,
}

impl ScanRecordOut {
    pub fn from_record(record: &EquivalenceRecord) -> Self {
        ScanRecordOut {
            label: record.label.clone(),
            hom_malcev: record.hom_malcev,
            s1_holds: record.s1_holds,
            ident_c_holds: record.ident_c_holds,
            agreement: record.agreement(),
        }
    }
}

#[derive(Debug, Serialize)]
pub struct ScanSummaryOut {
    pub records: u64,
    pub all_true: u64,
    pub all_false: u64,
    pub disagreements: u64,
    pub conclusive: bool,
}

impl ScanSummaryOut {
    pub fn from_summary(summary: &ScanSummary) -> Self {
        ScanSummaryOut {
            records: summary.records,
            all_true: summary.all_true,
            all_false: summary.all_false,
            disagreements: summary.disagreements,
            conclusive: summary.conclusive(),
        }
    }
}

#[derive(Debug, Serialize)]
pub struct ScanReport {
    pub records: Vec<ScanRecordOut>,
    pub summary: ScanSummaryOut,
}

/// Stable rendering for every report the tool prints: two-space indents and
/// a trailing newline, so identical inputs give byte-identical files.
pub fn render_json<T: Serialize>(value: &T) -> String {
    let mut text = serde_json::to_string_pretty(value).expect("reports serialize");
    text.push('\n');
    text
}

#[cfg(test)]
mod tests {
    use super::*;
    use malcheck_core::catalog_algebra;

    #[test]
    fn catalog_entries_round_trip_exactly() {
        for key in malcheck_core::catalog_keys() {
            let algebra = catalog_algebra(key).unwrap().algebra;
            let file = algebra_to_file(&algebra);
            let back = algebra_from_file(&file).unwrap();
            assert_eq!(back, algebra, "{key}");
        }
    }

    #[test]
    fn json_round_trip_preserves_the_file() {
        let algebra = catalog_algebra("osp12").unwrap().algebra;
        let file = algebra_to_file(&algebra);
        let text = render_json(&file);
        let parsed: AlgebraFile = serde_json::from_str(&text).unwrap();
        assert_eq!(algebra_from_file(&parsed).unwrap(), algebra);
    }

    #[test]
    fn load_errors_name_the_offending_entry() {
        let algebra = catalog_algebra("sl2").unwrap().algebra;
        let mut file = algebra_to_file(&algebra);
        file.products[2].k = 9;
        let err = algebra_from_file(&file).unwrap_err();
        assert!(err.contains("products[2]"), "{err}");

        let mut file = algebra_to_file(&algebra);
        file.products[0].value = "1.5".into();
        let err = algebra_from_file(&file).unwrap_err();
        assert!(err.contains("products[0]"), "{err}");

        let mut file = algebra_to_file(&algebra);
        let dup = ProductEntry {
            i: file.products[0].i,
            j: file.products[0].j,
            k: file.products[0].k,
            value: "7".into(),
        };
        file.products.push(dup);
        let err = algebra_from_file(&file).unwrap_err();
        assert!(err.contains("duplicate"), "{err}");

        let mut file = algebra_to_file(&algebra);
        file.parity = vec![0, 1];
        let err = algebra_from_file(&file).unwrap_err();
        assert!(err.starts_with("parity"), "{err}");

        let mut file = algebra_to_file(&algebra);
        file.alpha[1] = vec!["1".into()];
        let err = algebra_from_file(&file).unwrap_err();
        assert!(err.contains("alpha[1]"), "{err}");
    }

    #[test]
    fn grading_violations_surface_from_the_core() {
        let algebra = catalog_algebra("osp12").unwrap().algebra;
        let mut file = algebra_to_file(&algebra);
        // Bend an even product onto an odd basis vector.
        file.products[0].k = 3;
        assert!(algebra_from_file(&file).is_err());
    }

    #[test]
    fn zero_valued_entries_are_legal_and_round_trip_drops_them() {
        let algebra = catalog_algebra("sl2").unwrap().algebra;
        let mut file = algebra_to_file(&algebra);
        file.products.push(ProductEntry {
            i: 1,
            j: 1,
            k: 0,
            value: "0".into(),
        });
        let back = algebra_from_file(&file).unwrap();
        assert_eq!(back, algebra);
        assert_eq!(
            algebra_to_file(&back).products.len(),
            file.products.len() - 1
        );
    }
}
