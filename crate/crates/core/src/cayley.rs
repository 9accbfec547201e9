//! Cayley–Dickson doubling over the rationals.
//!
//! Algebras of dimension 2^k are built recursively from the base field:
//! a pair (a, b) multiplies by (a, b)(c, d) = (ac − d̄b, da + bc̄), with
//! conjugation (a, b)̄ = (ā, −b). Dimension 8 gives the octonions, whose
//! commutator algebra on the imaginary part is the standard seven-dimensional
//! non-Lie Malcev algebra.

use num_rational::BigRational;
use num_traits::Zero;

use crate::element::Element;

/// An element of the 2^k-dimensional doubling, as coordinates over the basis
/// 1, i, j, ij, l, il, jl, (ij)l, ... in doubling order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CdElement {
    coeffs: Vec<BigRational>,
}

impl CdElement {
    /// The basis unit with index `idx` in an algebra of dimension `dim`.
    /// `dim` must be a power of two.
    pub fn unit(dim: usize, idx: usize) -> Self {
        assert!(dim.is_power_of_two(), "doubling dimension must be 2^k");
        assert!(idx < dim);
        let mut coeffs = vec![BigRational::zero(); dim];
        coeffs[idx] = BigRational::from_integer(1.into());
        CdElement { coeffs }
    }

    pub fn from_coeffs(coeffs: Vec<BigRational>) -> Self {
        assert!(coeffs.len().is_power_of_two());
        CdElement { coeffs }
    }

    pub fn dim(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn mul(&self, other: &CdElement) -> CdElement {
        assert_eq!(self.dim(), other.dim());
        CdElement {
            coeffs: mul_slices(&self.coeffs, &other.coeffs),
        }
    }

    pub fn conj(&self) -> CdElement {
        CdElement {
            coeffs: conj_slice(&self.coeffs),
        }
    }

    pub fn sub(&self, other: &CdElement) -> CdElement {
        assert_eq!(self.dim(), other.dim());
        CdElement {
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }

    /// Commutator xy − yx.
    pub fn commutator(&self, other: &CdElement) -> CdElement {
        self.mul(other).sub(&other.mul(self))
    }

    /// Drops the real coordinate, viewing the rest as a vector.
    pub fn imaginary_part(&self) -> Element {
        Element::from_coeffs(self.coeffs[1..].to_vec())
    }

    pub fn real_part(&self) -> &BigRational {
        &self.coeffs[0]
    }
}

fn mul_slices(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
    if a.len() == 1 {
        return vec![&a[0] * &b[0]];
    }
    let half = a.len() / 2;
    let (p, q) = a.split_at(half);
    let (r, s) = b.split_at(half);
    // (p, q)(r, s) = (pr − s̄q, sp + qr̄)
    let s_conj = conj_slice(s);
    let r_conj = conj_slice(r);
    let mut out = sub_slices(&mul_slices(p, r), &mul_slices(&s_conj, q));
    out.extend(add_slices(&mul_slices(s, p), &mul_slices(q, &r_conj)));
    out
}

fn conj_slice(a: &[BigRational]) -> Vec<BigRational> {
    let mut out: Vec<BigRational> = a.iter().map(|c| -c).collect();
    out[0] = a[0].clone();
    out
}

fn add_slices(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

fn sub_slices(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}
