//! Twisting a product along an algebra morphism.

use crate::algebra::SuperAlgebra;
use crate::error::{Error, Result};
use crate::even_map::EvenMap;

/// First ordered pair (i, j) where β(e_i · e_j) ≠ β(e_i) · β(e_j).
pub fn morphism_violation(algebra: &SuperAlgebra, beta: &EvenMap) -> Option<(usize, usize)> {
    for i in 0..algebra.dim() {
        for j in 0..algebra.dim() {
            let lhs = beta.apply(algebra.product(i, j));
            let rhs = algebra
                .multiply(&beta.column(i), &beta.column(j))
                .expect("columns have the algebra's dimension");
            if lhs != rhs {
                return Some((i, j));
            }
        }
    }
    None
}

/// Replaces the product μ by β∘μ and installs β as the twisting map.
///
/// The input must carry the identity map (twisting an already twisted
/// algebra is out of scope), and β must be even and an algebra morphism;
/// the morphism condition makes the result multiplicative. The name is
/// preserved, so twisting by the identity is a no-op.
pub fn yau_twist(algebra: &SuperAlgebra, beta: &EvenMap) -> Result<SuperAlgebra> {
    if beta.dim() != algebra.dim() {
        return Err(Error::DimensionMismatch {
            expected: algebra.dim(),
            got: beta.dim(),
        });
    }
    if !algebra.alpha().is_identity() {
        return Err(Error::TwistOverNontrivialMap);
    }
    beta.check_even(algebra.parities())?;
    if let Some((i, j)) = morphism_violation(algebra, beta) {
        return Err(Error::NotMorphism { i, j });
    }
    let table = algebra
        .table()
        .iter()
        .map(|product| beta.apply(product))
        .collect();
    SuperAlgebra::new(
        algebra.name().to_string(),
        algebra.parities().to_vec(),
        table,
        beta.clone(),
    )
}
