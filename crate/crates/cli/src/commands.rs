//! Command implementations. Each returns the process exit code, with usage
//! and input problems reported as `Err` (always exit 2 in main):
//! 0 = everything checked holds, 1 = a checked property fails, 2 = bad input.

use std::io::Read;

use malcheck_core::{
    catalog_algebra, catalog_keys, catalog_scan, check_identity_capped, classify, equivalence_scan,
    rational, summarize, EquivalenceRecord, EvenMap, IdentityId, IdentityReport, Parity,
    SuperAlgebra, WeightedGenSpec,
};
use num_rational::BigRational;

use malcheck_cli::format::{
    algebra_from_file, algebra_to_file, render_json, AlgebraFile, CheckReport, CheckRow,
    ClassifyReport, ScanRecordOut, ScanReport, ScanSummaryOut, ViolationOut,
};

/// Reads an algebra from a path, with "-" meaning standard input.
fn load_algebra(path: &str, assume_skew: bool) -> Result<SuperAlgebra, String> {
    let text = if path == "-" {
        let mut buf = String::new();
        std::io::stdin()
            .read_to_string(&mut buf)
            .map_err(|e| format!("standard input: {e}"))?;
        buf
    } else {
        std::fs::read_to_string(path).map_err(|e| format!("{path}: {e}"))?
    };
    let file: AlgebraFile = serde_json::from_str(&text).map_err(|e| format!("{path}: {e}"))?;
    let algebra = algebra_from_file(&file).map_err(|e| format!("{path}: {e}"))?;
    Ok(if assume_skew {
        algebra.super_antisymmetrized()
    } else {
        algebra
    })
}

/// What one selector names: a registry identity or the structural premises.
enum Selection {
    Identity(IdentityId),
    Premises,
}

fn expand_selectors(selectors: &[String]) -> Result<Vec<Selection>, String> {
    let mut out = Vec::new();
    let mut seen_ids = Vec::new();
    let mut seen_premises = false;
    let push_id = |out: &mut Vec<Selection>, seen: &mut Vec<IdentityId>, id: IdentityId| {
        if !seen.contains(&id) {
            seen.push(id);
            out.push(Selection::Identity(id));
        }
    };
    for selector in selectors {
        match selector.as_str() {
            "all" => {
                for id in IdentityId::ALL {
                    push_id(&mut out, &mut seen_ids, id);
                }
            }
            "premises" => {
                if !seen_premises {
                    seen_premises = true;
                    out.push(Selection::Premises);
                }
            }
            name => {
                let id = IdentityId::parse(name).map_err(|_| {
                    format!(
                        "unknown identity {name:?}; valid selectors are \"all\", \"premises\", {}",
                        registry_names()
                    )
                })?;
                push_id(&mut out, &mut seen_ids, id);
            }
        }
    }
    Ok(out)
}

fn registry_names() -> String {
    let names: Vec<&str> = IdentityId::ALL.iter().map(|id| id.name()).collect();
    names.join(", ")
}

/// The two structural rows for the "premises" selector, in report shape.
fn premise_rows(algebra: &SuperAlgebra, cap: usize) -> Vec<CheckRow> {
    let pairs = |violations: &[malcheck_core::PairViolation]| -> Vec<ViolationOut> {
        violations
            .iter()
            .take(cap)
            .map(|v| ViolationOut {
                tuple: vec![v.i, v.j],
                defect: v
                    .defect
                    .coeffs()
                    .iter()
                    .map(rational::format_rational)
                    .collect(),
            })
            .collect()
    };
    let anti = algebra.anticommutativity_violations();
    let dim = algebra.dim() as u64;
    let multi = algebra.multiplicativity_violations();
    vec![
        CheckRow {
            id: "anticommutative".into(),
            holds: anti.is_empty(),
            tuples_checked: dim * (dim + 1) / 2,
            total_violations: anti.len() as u64,
            violations: pairs(&anti),
        },
        CheckRow {
            id: "multiplicative".into(),
            holds: multi.is_empty(),
            tuples_checked: dim * dim,
            total_violations: multi.len() as u64,
            violations: pairs(&multi),
        },
    ]
}

pub fn cmd_check(
    path: &str,
    selectors: &[String],
    assume_skew: bool,
    max_violations: usize,
) -> Result<i32, String> {
    let algebra = load_algebra(path, assume_skew)?;
    let selections = expand_selectors(selectors)?;
    let mut checks = Vec::new();
    for selection in selections {
        match selection {
            Selection::Premises => checks.extend(premise_rows(&algebra, max_violations)),
            Selection::Identity(id) => {
                let check = check_identity_capped(&algebra, id, max_violations);
                checks.push(CheckRow::from_identity(&IdentityReport::from_check(check)));
            }
        }
    }
    let all_hold = checks.iter().all(|row| row.holds);
    let report = CheckReport {
        algebra: algebra.name().to_string(),
        checks,
    };
    print!("{}", render_json(&report));
    Ok(if all_hold { 0 } else { 1 })
}

pub fn cmd_classify(path: &str) -> Result<i32, String> {
    let algebra = load_algebra(path, false)?;
    let class = classify(&algebra);
    print!(
        "{}",
        render_json(&ClassifyReport::new(algebra.name(), &class))
    );
    Ok(0)
}

fn parse_map(source: &str, dim: usize) -> Result<EvenMap, String> {
    if source == "identity" {
        return Ok(EvenMap::identity(dim));
    }
    if let Some(list) = source.strip_prefix("diag:") {
        let mut entries = Vec::new();
        for (idx, part) in list.split(',').enumerate() {
            entries.push(
                rational::parse_rational(part)
                    .map_err(|e| format!("--map diag entry {idx}: {e}"))?,
            );
        }
        if entries.len() != dim {
            return Err(format!(
                "--map diag: has {} entries for dimension {dim}",
                entries.len()
            ));
        }
        return Ok(EvenMap::diagonal(&entries));
    }
    // Anything else is a file holding a square matrix of rational strings.
    let text = std::fs::read_to_string(source).map_err(|e| format!("{source}: {e}"))?;
    let rows_text: Vec<Vec<String>> =
        serde_json::from_str(&text).map_err(|e| format!("{source}: {e}"))?;
    let mut rows: Vec<Vec<BigRational>> = Vec::with_capacity(rows_text.len());
    for (r, row) in rows_text.iter().enumerate() {
        let mut out = Vec::with_capacity(row.len());
        for (c, cell) in row.iter().enumerate() {
            out.push(
                rational::parse_rational(cell)
                    .map_err(|e| format!("{source}: row {r}, column {c}: {e}"))?,
            );
        }
        rows.push(out);
    }
    EvenMap::from_rows(rows).map_err(|e| format!("{source}: {e}"))
}

pub fn cmd_twist(path: &str, map_source: &str) -> Result<i32, String> {
    let algebra = load_algebra(path, false)?;
    let map = parse_map(map_source, algebra.dim())?;
    let twisted = malcheck_core::yau_twist(&algebra, &map).map_err(|e| e.to_string())?;
    print!("{}", render_json(&algebra_to_file(&twisted)));
    Ok(0)
}

/// Graded weights used for scan algebras: 0, 0, 1, 2, ... keeps dimension-3
/// trials split between Malcev and non-Malcev products instead of collapsing
/// onto one verdict.
fn scan_weights(dim: usize) -> Vec<i64> {
    (0..dim as i64).map(|i| (i - 1).max(0)).collect()
}

pub struct ScanArgs {
    pub dim: usize,
    pub trials: u64,
    pub seed: u64,
    pub parities: Option<String>,
    pub lambda: String,
    pub catalog: bool,
    pub workers: Option<usize>,
}

fn scan_records(args: &ScanArgs) -> Result<Vec<EquivalenceRecord>, String> {
    if args.catalog {
        return catalog_scan().map_err(|e| e.to_string());
    }
    if args.dim == 0 || args.dim > 6 {
        return Err(format!("--dim {} out of range (1..=6)", args.dim));
    }
    let parity = match &args.parities {
        None => vec![Parity::Even; args.dim],
        Some(text) => {
            if text.len() != args.dim {
                return Err(format!(
                    "--parities {:?} has {} bits for dimension {}",
                    text,
                    text.len(),
                    args.dim
                ));
            }
            text.bytes()
                .map(|b| Parity::from_u8(b.wrapping_sub(b'0')))
                .collect::<Result<Vec<_>, _>>()
                .map_err(|_| format!("--parities {:?}: use only 0 and 1", text))?
        }
    };
    let lambda = rational::parse_rational(&args.lambda).map_err(|e| format!("--lambda: {e}"))?;
    if lambda == rational::int(0) {
        return Err("--lambda: must be nonzero".into());
    }
    let spec = WeightedGenSpec {
        dim: args.dim,
        parity,
        weights: scan_weights(args.dim),
        lambda,
        bound: 3,
        seed: args.seed,
    };
    equivalence_scan(std::slice::from_ref(&spec), args.trials).map_err(|e| e.to_string())
}

pub fn cmd_scan(args: &ScanArgs) -> Result<i32, String> {
    let records = match args.workers {
        None => scan_records(args)?,
        Some(workers) => {
            if workers == 0 {
                return Err("--workers: must be at least 1".into());
            }
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(workers)
                .build()
                .map_err(|e| format!("--workers: {e}"))?;
            pool.install(|| scan_records(args))?
        }
    };
    let summary = summarize(&records);
    let report = ScanReport {
        records: records.iter().map(ScanRecordOut::from_record).collect(),
        summary: ScanSummaryOut::from_summary(&summary),
    };
    print!("{}", render_json(&report));
    if summary.conclusive() {
        return Ok(0);
    }
    if summary.disagreements > 0 {
        let first = records
            .iter()
            .find(|r| !r.agreement())
            .expect("summary counted a disagreement");
        eprintln!(
            "disagreement found: the three characterizations split on {} \
             (hom_malcev={}, s1={}, ident_c={}); this should be impossible — report a bug",
            first.label, first.hom_malcev, first.s1_holds, first.ident_c_holds
        );
    } else {
        eprintln!(
            "coverage insufficient: {} records, {} all-true, {} all-false; \
             both verdicts must occur (try more --trials or another --seed)",
            summary.records, summary.all_true, summary.all_false
        );
    }
    Ok(1)
}

pub fn cmd_catalog_list() -> i32 {
    for key in catalog_keys() {
        println!("{key}");
    }
    0
}

pub fn cmd_catalog_emit(key: &str) -> Result<i32, String> {
    let entry = catalog_algebra(key).map_err(|e| e.to_string())?;
    print!("{}", render_json(&algebra_to_file(&entry.algebra)));
    Ok(0)
}
