//! Finite-dimensional two-graded algebras carrying an even linear map.

use num_rational::BigRational;

use crate::element::Element;
use crate::error::{Error, Result};
use crate::even_map::EvenMap;
use crate::parity::{Homogeneity, Parity};

/// A graded algebra given by structure constants, together with an even
/// linear self-map used to twist identities.
///
/// The product table stores e_i · e_j for every ordered pair, so no symmetry
/// is assumed; anticommutativity is a checkable property, not an input
/// convention. Construction validates that the product respects the grading
/// and that the attached map is even.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SuperAlgebra {
    name: String,
    dim: usize,
    parity: Vec<Parity>,
    table: Vec<Element>,
    alpha: EvenMap,
}

impl SuperAlgebra {
    pub fn new(
        name: impl Into<String>,
        parity: Vec<Parity>,
        table: Vec<Element>,
        alpha: EvenMap,
    ) -> Result<Self> {
        let dim = parity.len();
        if table.len() != dim * dim {
            return Err(Error::BadTableSize {
                expected: dim * dim,
                got: table.len(),
            });
        }
        for (idx, product) in table.iter().enumerate() {
            if product.dim() != dim {
                return Err(Error::DimensionMismatch {
                    expected: dim,
                    got: product.dim(),
                });
            }
            let (i, j) = (idx / dim, idx % dim);
            let target = parity[i] + parity[j];
            for (k, _) in product.support() {
                if parity[k] != target {
                    return Err(Error::GradingViolation { i, j, k });
                }
            }
        }
        if alpha.dim() != dim {
            return Err(Error::DimensionMismatch {
                expected: dim,
                got: alpha.dim(),
            });
        }
        alpha.check_even(&parity)?;
        Ok(SuperAlgebra {
            name: name.into(),
            dim,
            parity,
            table,
            alpha,
        })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn parity(&self, i: usize) -> Parity {
        self.parity[i]
    }

    pub fn parities(&self) -> &[Parity] {
        &self.parity
    }

    pub fn alpha(&self) -> &EvenMap {
        &self.alpha
    }

    pub fn with_alpha(self, alpha: EvenMap) -> Result<Self> {
        SuperAlgebra::new(self.name, self.parity, self.table, alpha)
    }

    pub fn basis_element(&self, i: usize) -> Element {
        Element::basis(self.dim, i)
    }

    /// The structure constant row e_i · e_j.
    pub fn product(&self, i: usize, j: usize) -> &Element {
        &self.table[i * self.dim + j]
    }

    pub fn table(&self) -> &[Element] {
        &self.table
    }

    /// Bilinear product of two arbitrary elements.
    pub fn multiply(&self, u: &Element, v: &Element) -> Result<Element> {
        self.check_dim(u)?;
        self.check_dim(v)?;
        let mut out = Element::zero(self.dim);
        for (i, a) in u.support() {
            for (j, b) in v.support() {
                out.add_scaled(self.product(i, j), &(a * b));
            }
        }
        Ok(out)
    }

    /// Applies the attached map `power` times.
    pub fn apply_alpha(&self, u: &Element, power: u32) -> Result<Element> {
        self.check_dim(u)?;
        let mut out = u.clone();
        for _ in 0..power {
            out = self.alpha.apply(&out);
        }
        Ok(out)
    }

    pub fn parity_of(&self, u: &Element) -> Result<Homogeneity> {
        self.check_dim(u)?;
        let mut seen: Option<Parity> = None;
        for (i, _) in u.support() {
            match seen {
                None => seen = Some(self.parity[i]),
                Some(p) if p == self.parity[i] => {}
                Some(_) => return Ok(Homogeneity::Mixed),
            }
        }
        Ok(match seen {
            None => Homogeneity::Zero,
            Some(p) => Homogeneity::Homogeneous(p),
        })
    }

    /// Pairs (i, j) where α(e_i · e_j) differs from α(e_i) · α(e_j),
    /// with the nonzero difference as a witness.
    pub fn multiplicativity_violations(&self) -> Vec<PairViolation> {
        let mut out = Vec::new();
        for i in 0..self.dim {
            for j in 0..self.dim {
                if let Some(defect) = self.multiplicativity_defect(i, j) {
                    out.push(PairViolation { i, j, defect });
                }
            }
        }
        out
    }

    pub fn is_multiplicative(&self) -> bool {
        (0..self.dim).all(|i| (0..self.dim).all(|j| self.multiplicativity_defect(i, j).is_none()))
    }

    fn multiplicativity_defect(&self, i: usize, j: usize) -> Option<Element> {
        let lhs = self.alpha.apply(self.product(i, j));
        let rhs = self
            .multiply(&self.alpha.column(i), &self.alpha.column(j))
            .expect("columns have the algebra's dimension");
        let defect = &lhs - &rhs;
        if defect.is_zero() {
            None
        } else {
            Some(defect)
        }
    }

    /// Pairs (i, j) with i ≤ j where e_i · e_j + (−1)^{|e_i||e_j|} e_j · e_i
    /// is nonzero, with that sum as a witness.
    pub fn anticommutativity_violations(&self) -> Vec<PairViolation> {
        let mut out = Vec::new();
        for i in 0..self.dim {
            for j in i..self.dim {
                if let Some(defect) = self.anticommutativity_defect(i, j) {
                    out.push(PairViolation { i, j, defect });
                }
            }
        }
        out
    }

    pub fn is_anticommutative(&self) -> bool {
        (0..self.dim).all(|i| (i..self.dim).all(|j| self.anticommutativity_defect(i, j).is_none()))
    }

    fn anticommutativity_defect(&self, i: usize, j: usize) -> Option<Element> {
        let forward = self.product(i, j);
        let backward = self.product(j, i);
        let defect = if self.parity[i].is_odd() && self.parity[j].is_odd() {
            forward - backward
        } else {
            forward + backward
        };
        if defect.is_zero() {
            None
        } else {
            Some(defect)
        }
    }

    /// Rebuilds the table so the graded skew rule holds: entries with i < j
    /// are kept, entries with i > j are derived, even diagonal entries are
    /// zeroed, and odd diagonal entries are kept.
    pub fn super_antisymmetrized(&self) -> SuperAlgebra {
        let mut table = self.table.clone();
        for i in 0..self.dim {
            for j in 0..self.dim {
                if i < j {
                    let sign_flip = self.parity[i].is_odd() && self.parity[j].is_odd();
                    table[j * self.dim + i] = if sign_flip {
                        self.product(i, j).clone()
                    } else {
                        -self.product(i, j)
                    };
                } else if i == j && !self.parity[i].is_odd() {
                    table[i * self.dim + i] = Element::zero(self.dim);
                }
            }
        }
        SuperAlgebra::new(
            self.name.clone(),
            self.parity.clone(),
            table,
            self.alpha.clone(),
        )
        .expect("derived entries satisfy the same grading constraint")
    }

    fn check_dim(&self, u: &Element) -> Result<()> {
        if u.dim() != self.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                got: u.dim(),
            });
        }
        Ok(())
    }
}

/// A failed pairwise check, with the nonzero defect that witnessed it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PairViolation {
    pub i: usize,
    pub j: usize,
    pub defect: Element,
}

/// Incremental construction of a structure constant table.
pub struct TableBuilder {
    parity: Vec<Parity>,
    table: Vec<Element>,
}

impl TableBuilder {
    pub fn new(parity: Vec<Parity>) -> Self {
        let dim = parity.len();
        TableBuilder {
            parity,
            table: vec![Element::zero(dim); dim * dim],
        }
    }

    pub fn dim(&self) -> usize {
        self.parity.len()
    }

    pub fn set(&mut self, i: usize, j: usize, product: Element) {
        let dim = self.dim();
        self.table[i * dim + j] = product;
    }

    pub fn set_coeff(&mut self, i: usize, j: usize, k: usize, value: BigRational) {
        let dim = self.dim();
        self.table[i * dim + j].set_coeff(k, value);
    }

    /// Sets e_i · e_j and fills e_j · e_i by the graded skew rule.
    /// Panics if i == j; diagonal entries must be set explicitly.
    pub fn bracket(&mut self, i: usize, j: usize, product: Element) {
        assert_ne!(i, j, "bracket is for distinct indices");
        let mirrored = if self.parity[i].is_odd() && self.parity[j].is_odd() {
            product.clone()
        } else {
            -&product
        };
        self.set(i, j, product);
        self.set(j, i, mirrored);
    }

    pub fn build(self, name: impl Into<String>, alpha: EvenMap) -> Result<SuperAlgebra> {
        SuperAlgebra::new(name, self.parity, self.table, alpha)
    }
}
