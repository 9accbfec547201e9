//! Formal multilinear expressions in named argument slots.
//!
//! An identity is stored as a list of terms. Each term is an integer
//! coefficient, a symbolic sign exponent ([`PairSet`]), and a product tree
//! whose leaves are argument slots; both leaves and internal nodes carry a
//! power of the twisting map. Keeping identities as data makes every sign
//! auditable and lets one evaluator serve all of them.

use num_rational::BigRational;
use num_traits::Zero;

use crate::algebra::SuperAlgebra;
use crate::element::Element;
use crate::error::Result;
use crate::parity::Parity;
use crate::sign::{PairSet, SignStats, SlotSet};

/// A parenthesized product of argument slots, with twisting-map powers
/// allowed on every node (so both α(x)·y and α(x·y) are expressible).
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ProductTree {
    Leaf {
        slot: u8,
        alpha: u8,
    },
    Prod {
        alpha: u8,
        left: Box<ProductTree>,
        right: Box<ProductTree>,
    },
}

impl ProductTree {
    pub fn eval(&self, algebra: &SuperAlgebra, args: &[&Element]) -> Result<Element> {
        match self {
            ProductTree::Leaf { slot, alpha } => {
                algebra.apply_alpha(args[*slot as usize], *alpha as u32)
            }
            ProductTree::Prod { alpha, left, right } => {
                let l = left.eval(algebra, args)?;
                let r = right.eval(algebra, args)?;
                let product = algebra.multiply(&l, &r)?;
                algebra.apply_alpha(&product, *alpha as u32)
            }
        }
    }

    /// Adds each leaf's slot to `counts`.
    pub fn count_slots(&self, counts: &mut [u32]) {
        match self {
            ProductTree::Leaf { slot, .. } => counts[*slot as usize] += 1,
            ProductTree::Prod { left, right, .. } => {
                left.count_slots(counts);
                right.count_slots(counts);
            }
        }
    }

    fn bump_alpha(&mut self, by: u8) {
        match self {
            ProductTree::Leaf { alpha, .. } => *alpha += by,
            ProductTree::Prod { alpha, .. } => *alpha += by,
        }
    }

    pub fn render(&self, names: &[&str]) -> String {
        match self {
            ProductTree::Leaf { slot, alpha } => {
                wrap_alpha(*alpha, names[*slot as usize].to_string())
            }
            ProductTree::Prod { alpha, left, right } => wrap_alpha(
                *alpha,
                format!("({}*{})", left.render(names), right.render(names)),
            ),
        }
    }
}

fn wrap_alpha(power: u8, inner: String) -> String {
    match power {
        0 => inner,
        1 => format!("a({inner})"),
        k => format!("a^{k}({inner})"),
    }
}

/// One summand of an identity's defect.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Term {
    pub coeff: i64,
    pub sign: PairSet,
    pub tree: ProductTree,
}

impl Term {
    pub fn render(&self, names: &[&str]) -> String {
        let mut out = String::new();
        if self.coeff >= 0 {
            out.push('+');
        }
        out.push_str(&self.coeff.to_string());
        out.push('*');
        if !self.sign.is_empty() {
            out.push_str(&render_sign(&self.sign, names));
            out.push('*');
        }
        out.push_str(&self.tree.render(names));
        out
    }
}

fn render_sign(sign: &PairSet, names: &[&str]) -> String {
    let mut out = String::from("(-1)^{");
    for (idx, (a, b)) in sign.pairs().iter().enumerate() {
        if idx > 0 {
            out.push('+');
        }
        out.push_str(&format!("|{}||{}|", names[*a as usize], names[*b as usize]));
    }
    out.push('}');
    out
}

/// Evaluates a term list on concrete arguments with the given slot parities.
///
/// Sign usage is recorded in `stats` when provided: one entry per term, +1 or
/// −1 as the term's symbolic exponent collapses under these parities.
pub fn eval_terms(
    terms: &[Term],
    algebra: &SuperAlgebra,
    args: &[&Element],
    parities: &[Parity],
    mut stats: Option<&mut SignStats>,
) -> Result<Element> {
    let mut acc = Element::zero(algebra.dim());
    for term in terms {
        let sign = term.sign.sign(parities)?;
        if let Some(s) = stats.as_deref_mut() {
            s.record(sign);
        }
        let scalar = BigRational::from_integer((term.coeff * sign.as_i64()).into());
        if scalar.is_zero() {
            continue;
        }
        let value = term.tree.eval(algebra, args)?;
        acc.add_scaled(&value, &scalar);
    }
    Ok(acc)
}

/// A formal sum of terms that is homogeneous: every term has the same total
/// slot content, recorded in `parity` for sign computations.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Formal {
    pub terms: Vec<Term>,
    pub parity: SlotSet,
}

impl Formal {
    pub fn slot(i: u8) -> Formal {
        Formal {
            terms: vec![Term {
                coeff: 1,
                sign: PairSet::empty(),
                tree: ProductTree::Leaf { slot: i, alpha: 0 },
            }],
            parity: SlotSet::slot(i),
        }
    }

    /// Applies the twisting map `power` more times to every term.
    pub fn alpha(&self, power: u8) -> Formal {
        let mut out = self.clone();
        for term in &mut out.terms {
            term.tree.bump_alpha(power);
        }
        out
    }

    pub fn mul(left: &Formal, right: &Formal) -> Formal {
        let mut terms = Vec::with_capacity(left.terms.len() * right.terms.len());
        for l in &left.terms {
            for r in &right.terms {
                terms.push(Term {
                    coeff: l.coeff * r.coeff,
                    sign: l.sign.clone().union(r.sign.clone()),
                    tree: ProductTree::Prod {
                        alpha: 0,
                        left: Box::new(l.tree.clone()),
                        right: Box::new(r.tree.clone()),
                    },
                });
            }
        }
        Formal {
            terms,
            parity: left.parity.xor(right.parity),
        }
    }

    pub fn add(&self, other: &Formal) -> Formal {
        debug_assert_eq!(self.parity, other.parity, "adding inhomogeneous sums");
        let mut terms = self.terms.clone();
        terms.extend(other.terms.clone());
        Formal {
            terms,
            parity: self.parity,
        }
    }

    pub fn sub(&self, other: &Formal) -> Formal {
        self.add(&other.scale(-1))
    }

    pub fn scale(&self, factor: i64) -> Formal {
        let mut out = self.clone();
        for term in &mut out.terms {
            term.coeff *= factor;
        }
        out
    }

    /// Multiplies every term by the sign (−1) raised to `exponent`.
    pub fn signed(&self, exponent: PairSet) -> Formal {
        let mut out = self.clone();
        for term in &mut out.terms {
            term.sign = exponent.clone().union(std::mem::take(&mut term.sign));
        }
        out
    }
}
