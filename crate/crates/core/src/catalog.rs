//! A small catalog of verified example algebras.
//!
//! Every entry is checked at construction time: the Lie entries by a direct
//! brute-force super-Jacobi sum written out here (independent of the identity
//! registry), and the seven-dimensional Malcev entry by deriving its table
//! from the Cayley–Dickson octonions and then confirming the expected
//! identities. A failed gate is a hard error, not a warning.

use std::sync::OnceLock;

use num_rational::BigRational;
use num_traits::Zero;

use crate::algebra::{SuperAlgebra, TableBuilder};
use crate::cayley::CdElement;
use crate::check::identity_holds;
use crate::classify::StructureClass;
use crate::element::Element;
use crate::error::{Error, Result};
use crate::even_map::EvenMap;
use crate::parity::Parity;
use crate::rational::{int, rat};
use crate::registry::IdentityId;

/// Where an entry is expected to sit; re-verified by classification tests.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ExpectedClass {
    HomLie,
    HomMalcevNotHomLie,
    MalcevNotLie,
    NotHomMalcev,
}

impl ExpectedClass {
    pub fn name(self) -> &'static str {
        match self {
            ExpectedClass::HomLie => "hom_lie",
            ExpectedClass::HomMalcevNotHomLie => "hom_malcev_not_hom_lie",
            ExpectedClass::MalcevNotLie => "malcev_not_lie",
            ExpectedClass::NotHomMalcev => "not_hom_malcev",
        }
    }

    pub fn matches(self, class: &StructureClass) -> bool {
        match self {
            ExpectedClass::HomLie => class.anticommutative && class.multiplicative && class.hom_lie,
            ExpectedClass::HomMalcevNotHomLie => {
                class.anticommutative && class.multiplicative && class.hom_malcev && !class.hom_lie
            }
            ExpectedClass::MalcevNotLie => {
                class.anticommutative
                    && class.multiplicative
                    && class.malcev_plain
                    && !class.hom_lie
            }
            ExpectedClass::NotHomMalcev => !class.hom_malcev,
        }
    }
}

#[derive(Debug, Clone)]
pub struct CatalogEntry {
    pub key: String,
    pub algebra: SuperAlgebra,
    pub expected_class: ExpectedClass,
    pub provenance: String,
}

/// The canonical keys, in listing order. The abelian key is parameterized:
/// any `abelian:<evens>|<odds>` is accepted by [`catalog_algebra`].
pub fn catalog_keys() -> &'static [&'static str] {
    &["abelian:1|1", "heisenberg3", "sl2", "osp12", "m7"]
}

pub fn catalog_algebra(key: &str) -> Result<CatalogEntry> {
    if let Some(dims) = key.strip_prefix("abelian:") {
        return abelian_entry(key, dims);
    }
    match key {
        "heisenberg3" => heisenberg_entry(),
        "sl2" => sl2_entry(),
        "osp12" => osp12_entry(),
        "m7" => m7_entry(),
        other => Err(Error::UnknownCatalogKey(other.to_string())),
    }
}

/// The five canonical entries.
pub fn catalog_entries() -> Result<Vec<CatalogEntry>> {
    catalog_keys().iter().map(|k| catalog_algebra(k)).collect()
}

/// Algebra morphisms suitable for twisting each entry, identity included.
pub fn catalog_morphisms(key: &str) -> Result<Vec<(String, EvenMap)>> {
    let entry = catalog_algebra(key)?;
    let dim = entry.algebra.dim();
    let mut maps = vec![("identity".to_string(), EvenMap::identity(dim))];
    if let Some(dims) = key.strip_prefix("abelian:") {
        let (evens, odds) = parse_abelian_dims(key, dims)?;
        let diag: Vec<BigRational> = (0..evens)
            .map(|_| int(2))
            .chain((0..odds).map(|_| int(3)))
            .collect();
        maps.push(("scale".to_string(), EvenMap::diagonal(&diag)));
        return Ok(maps);
    }
    match key {
        "heisenberg3" => {
            maps.push((
                "weights".to_string(),
                EvenMap::diagonal(&[int(2), int(3), int(6)]),
            ));
        }
        "sl2" => {
            maps.push((
                "weights".to_string(),
                EvenMap::diagonal(&[int(1), int(2), rat(1, 2)]),
            ));
        }
        "osp12" => {
            maps.push((
                "weights".to_string(),
                EvenMap::diagonal(&[int(1), int(4), rat(1, 4), int(2), rat(1, 2)]),
            ));
        }
        "m7" => {
            maps.push(("quaternion_rotation".to_string(), m7_rotation()));
        }
        _ => {}
    }
    Ok(maps)
}

fn parse_abelian_dims(key: &str, dims: &str) -> Result<(usize, usize)> {
    let bad = || Error::UnknownCatalogKey(key.to_string());
    let (even_text, odd_text) = dims.split_once('|').ok_or_else(bad)?;
    let evens: usize = even_text.parse().map_err(|_| bad())?;
    let odds: usize = odd_text.parse().map_err(|_| bad())?;
    if evens + odds == 0 {
        return Err(bad());
    }
    Ok((evens, odds))
}

fn abelian_entry(key: &str, dims: &str) -> Result<CatalogEntry> {
    let (evens, odds) = parse_abelian_dims(key, dims)?;
    let parity: Vec<Parity> = (0..evens)
        .map(|_| Parity::Even)
        .chain((0..odds).map(|_| Parity::Odd))
        .collect();
    let dim = parity.len();
    let algebra = TableBuilder::new(parity).build(key, EvenMap::identity(dim))?;
    Ok(CatalogEntry {
        key: key.to_string(),
        algebra,
        expected_class: ExpectedClass::HomLie,
        provenance: "all products vanish, so every identity holds trivially".to_string(),
    })
}

fn heisenberg_entry() -> Result<CatalogEntry> {
    let mut b = TableBuilder::new(vec![Parity::Even; 3]);
    b.bracket(0, 1, Element::basis(3, 2));
    let algebra = b.build("heisenberg3", EvenMap::identity(3))?;
    super_jacobi_gate(&algebra, "heisenberg3")?;
    Ok(CatalogEntry {
        key: "heisenberg3".to_string(),
        algebra,
        expected_class: ExpectedClass::HomLie,
        provenance: "nilpotent bracket [e0,e1] = e2; super-Jacobi verified on all basis triples"
            .to_string(),
    })
}

fn sl2_entry() -> Result<CatalogEntry> {
    // Basis (h, e, f): [h,e] = 2e, [h,f] = −2f, [e,f] = h.
    let mut b = TableBuilder::new(vec![Parity::Even; 3]);
    b.bracket(0, 1, Element::basis(3, 1).scaled(&int(2)));
    b.bracket(0, 2, Element::basis(3, 2).scaled(&int(-2)));
    b.bracket(1, 2, Element::basis(3, 0));
    let algebra = b.build("sl2", EvenMap::identity(3))?;
    super_jacobi_gate(&algebra, "sl2")?;
    Ok(CatalogEntry {
        key: "sl2".to_string(),
        algebra,
        expected_class: ExpectedClass::HomLie,
        provenance: "classical (h,e,f) relations; super-Jacobi verified on all basis triples"
            .to_string(),
    })
}

fn osp12_entry() -> Result<CatalogEntry> {
    // Basis (h, e, f | x, y): the sl2 relations on the even part,
    // [h,x] = x, [h,y] = −y, [e,y] = x, [f,x] = y, and the symmetric odd
    // products xx = −2e, yy = 2f, xy = yx = h.
    use Parity::{Even, Odd};
    let mut b = TableBuilder::new(vec![Even, Even, Even, Odd, Odd]);
    b.bracket(0, 1, Element::basis(5, 1).scaled(&int(2)));
    b.bracket(0, 2, Element::basis(5, 2).scaled(&int(-2)));
    b.bracket(1, 2, Element::basis(5, 0));
    b.bracket(0, 3, Element::basis(5, 3));
    b.bracket(0, 4, Element::basis(5, 4).scaled(&int(-1)));
    b.bracket(1, 4, Element::basis(5, 3));
    b.bracket(2, 3, Element::basis(5, 4));
    b.set(3, 3, Element::basis(5, 1).scaled(&int(-2)));
    b.set(4, 4, Element::basis(5, 2).scaled(&int(2)));
    b.bracket(3, 4, Element::basis(5, 0));
    let algebra = b.build("osp12", EvenMap::identity(5))?;
    super_jacobi_gate(&algebra, "osp12")?;
    Ok(CatalogEntry {
        key: "osp12".to_string(),
        algebra,
        expected_class: ExpectedClass::HomLie,
        provenance: "orthosymplectic relations in dimension 3|2; super-Jacobi verified on all \
                     basis triples"
            .to_string(),
    })
}

/// Direct brute-force super-Jacobi check, written out independently of the
/// identity registry so a registry bug cannot hide a bad catalog entry.
fn super_jacobi_gate(algebra: &SuperAlgebra, key: &str) -> Result<()> {
    let n = algebra.dim();
    let odd = |i: usize| algebra.parity(i).is_odd();
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                let term1 = algebra.multiply(algebra.product(i, j), &algebra.basis_element(k))?;
                let mut term2 =
                    algebra.multiply(algebra.product(j, k), &algebra.basis_element(i))?;
                if odd(i) && (odd(j) ^ odd(k)) {
                    term2 = -&term2;
                }
                let mut term3 =
                    algebra.multiply(algebra.product(k, i), &algebra.basis_element(j))?;
                if odd(k) && (odd(i) ^ odd(j)) {
                    term3 = -&term3;
                }
                if !(&(&term1 + &term2) + &term3).is_zero() {
                    return Err(Error::CatalogGateFailed {
                        key: key.to_string(),
                        detail: format!("super-Jacobi sum is nonzero at ({i},{j},{k})"),
                    });
                }
            }
        }
    }
    Ok(())
}

/// Commutator algebra of the imaginary octonions, with the table derived
/// from Cayley–Dickson doubling at build time. Cached: the identity gates
/// below walk all 7^4 tuples once per process.
fn m7_entry() -> Result<CatalogEntry> {
    static ENTRY: OnceLock<Result<CatalogEntry>> = OnceLock::new();
    ENTRY.get_or_init(build_m7).clone()
}

fn build_m7() -> Result<CatalogEntry> {
    let mut b = TableBuilder::new(vec![Parity::Even; 7]);
    for i in 0..7 {
        for j in 0..7 {
            let comm = CdElement::unit(8, i + 1).commutator(&CdElement::unit(8, j + 1));
            if !comm.real_part().is_zero() {
                return Err(Error::CatalogGateFailed {
                    key: "m7".to_string(),
                    detail: format!(
                        "commutator of units {} and {} has a real part",
                        i + 1,
                        j + 1
                    ),
                });
            }
            b.set(i, j, comm.imaginary_part());
        }
    }
    let algebra = b.build("m7", EvenMap::identity(7))?;
    if !identity_holds(&algebra, IdentityId::MalcevSuper) {
        return Err(Error::CatalogGateFailed {
            key: "m7".to_string(),
            detail: "the Malcev identity fails on some basis tuple".to_string(),
        });
    }
    if identity_holds(&algebra, IdentityId::HomLie) {
        return Err(Error::CatalogGateFailed {
            key: "m7".to_string(),
            detail: "the cyclic Jacobi sum unexpectedly vanishes everywhere".to_string(),
        });
    }
    Ok(CatalogEntry {
        key: "m7".to_string(),
        algebra,
        expected_class: ExpectedClass::MalcevNotLie,
        provenance: "commutator algebra of imaginary Cayley–Dickson octonions; Malcev identity \
                     verified on all 7^4 basis tuples, Jacobi violation witnessed"
            .to_string(),
    })
}

/// Componentwise conjugation by the quaternion 1+i, restricted to the
/// imaginary octonions: an automorphism with integer matrix.
fn m7_rotation() -> EvenMap {
    // e1→e1, e2→e3, e3→−e2, e4→e4, e5→e5, e6→e7, e7→−e6 (1-based units).
    let mut rows = vec![vec![BigRational::zero(); 7]; 7];
    let images: [(usize, usize, i64); 7] = [
        (0, 0, 1),
        (1, 2, 1),
        (2, 1, -1),
        (3, 3, 1),
        (4, 4, 1),
        (5, 6, 1),
        (6, 5, -1),
    ];
    for (col, row, value) in images {
        rows[row][col] = int(value);
    }
    EvenMap::from_rows(rows).expect("square by construction")
}
