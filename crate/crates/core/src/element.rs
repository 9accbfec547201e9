//! Dense vectors with exact rational coordinates.

use std::fmt;
use std::ops::{Add, Neg, Sub};

use num_rational::BigRational;
use num_traits::Zero;

use crate::rational::format_rational;

/// A vector written in the fixed basis of its algebra.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Element {
    coeffs: Vec<BigRational>,
}

impl Element {
    pub fn zero(dim: usize) -> Self {
        Element {
            coeffs: vec![BigRational::zero(); dim],
        }
    }

    /// The i-th basis vector. Panics if i is out of range.
    pub fn basis(dim: usize, i: usize) -> Self {
        assert!(i < dim, "basis index {i} out of range for dimension {dim}");
        let mut e = Element::zero(dim);
        e.coeffs[i] = BigRational::from_integer(1.into());
        e
    }

    pub fn from_coeffs(coeffs: Vec<BigRational>) -> Self {
        Element { coeffs }
    }

    pub fn dim(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coeff(&self, i: usize) -> &BigRational {
        &self.coeffs[i]
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn set_coeff(&mut self, i: usize, value: BigRational) {
        self.coeffs[i] = value;
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    /// Nonzero coordinates, in basis order.
    pub fn support(&self) -> impl Iterator<Item = (usize, &BigRational)> {
        self.coeffs.iter().enumerate().filter(|(_, c)| !c.is_zero())
    }

    pub fn scaled(&self, factor: &BigRational) -> Element {
        if factor.is_zero() {
            return Element::zero(self.dim());
        }
        Element {
            coeffs: self.coeffs.iter().map(|c| c * factor).collect(),
        }
    }

    /// self += factor * other, skipping other's zero coordinates.
    pub fn add_scaled(&mut self, other: &Element, factor: &BigRational) {
        assert_eq!(self.dim(), other.dim(), "element dimensions differ");
        if factor.is_zero() {
            return;
        }
        for (i, c) in other.support() {
            self.coeffs[i] += c * factor;
        }
    }
}

impl Add for &Element {
    type Output = Element;

    fn add(self, rhs: &Element) -> Element {
        assert_eq!(self.dim(), rhs.dim(), "element dimensions differ");
        Element {
            coeffs: self
                .coeffs
                .iter()
                .zip(&rhs.coeffs)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }
}

impl Sub for &Element {
    type Output = Element;

    fn sub(self, rhs: &Element) -> Element {
        assert_eq!(self.dim(), rhs.dim(), "element dimensions differ");
        Element {
            coeffs: self
                .coeffs
                .iter()
                .zip(&rhs.coeffs)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }
}

impl Neg for &Element {
    type Output = Element;

    fn neg(self) -> Element {
        Element {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl fmt::Display for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (i, c) in self.support() {
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            write!(f, "{}*e{}", format_rational(c), i)?;
        }
        Ok(())
    }
}
