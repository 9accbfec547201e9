//! Linear maps that preserve the grading.

use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::element::Element;
use crate::error::{Error, Result};
use crate::parity::Parity;

/// A square matrix over the rationals, acting on column vectors.
///
/// `mat[r][c]` is the e_r coordinate of the image of the basis vector e_c.
/// Constructors only enforce shape; evenness with respect to a particular
/// grading is checked where the map meets an algebra.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EvenMap {
    mat: Vec<Vec<BigRational>>,
}

impl EvenMap {
    pub fn identity(dim: usize) -> Self {
        let mut mat = vec![vec![BigRational::zero(); dim]; dim];
        for (r, row) in mat.iter_mut().enumerate() {
            row[r] = BigRational::one();
        }
        EvenMap { mat }
    }

    pub fn diagonal(entries: &[BigRational]) -> Self {
        let dim = entries.len();
        let mut mat = vec![vec![BigRational::zero(); dim]; dim];
        for (r, value) in entries.iter().enumerate() {
            mat[r][r] = value.clone();
        }
        EvenMap { mat }
    }

    pub fn from_rows(mat: Vec<Vec<BigRational>>) -> Result<Self> {
        let dim = mat.len();
        for (row, entries) in mat.iter().enumerate() {
            if entries.len() != dim {
                return Err(Error::RaggedMatrix {
                    row,
                    expected: dim,
                    got: entries.len(),
                });
            }
        }
        Ok(EvenMap { mat })
    }

    pub fn dim(&self) -> usize {
        self.mat.len()
    }

    pub fn entry(&self, row: usize, col: usize) -> &BigRational {
        &self.mat[row][col]
    }

    pub fn rows(&self) -> &[Vec<BigRational>] {
        &self.mat
    }

    /// Image of the basis vector e_i.
    pub fn column(&self, i: usize) -> Element {
        Element::from_coeffs(self.mat.iter().map(|row| row[i].clone()).collect())
    }

    pub fn apply(&self, u: &Element) -> Element {
        assert_eq!(self.dim(), u.dim(), "map and element dimensions differ");
        let mut out = Element::zero(self.dim());
        for (c, coeff) in u.support() {
            for r in 0..self.dim() {
                let entry = &self.mat[r][c];
                if !entry.is_zero() {
                    let updated = out.coeff(r) + entry * coeff;
                    out.set_coeff(r, updated);
                }
            }
        }
        out
    }

    /// First nonzero entry connecting basis vectors of different parity.
    pub fn evenness_violation(&self, parities: &[Parity]) -> Option<(usize, usize)> {
        for (r, row) in self.mat.iter().enumerate() {
            for (c, entry) in row.iter().enumerate() {
                if !entry.is_zero() && parities[r] != parities[c] {
                    return Some((r, c));
                }
            }
        }
        None
    }

    pub fn check_even(&self, parities: &[Parity]) -> Result<()> {
        match self.evenness_violation(parities) {
            Some((row, col)) => Err(Error::MapNotEven { row, col }),
            None => Ok(()),
        }
    }

    pub fn is_identity(&self) -> bool {
        self.mat.iter().enumerate().all(|(r, row)| {
            row.iter().enumerate().all(|(c, entry)| {
                if r == c {
                    entry.is_one()
                } else {
                    entry.is_zero()
                }
            })
        })
    }
}
