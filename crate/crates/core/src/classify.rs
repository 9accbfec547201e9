//! Aggregated structural classification of an algebra.

use crate::algebra::SuperAlgebra;
use crate::check::identity_holds;
use crate::even_map::EvenMap;
use crate::registry::IdentityId;

/// Exact flags describing where an algebra sits in the inclusion chain.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct StructureClass {
    pub anticommutative: bool,
    pub multiplicative: bool,
    pub hom_lie: bool,
    pub hom_malcev: bool,
    pub s1_holds: bool,
    pub ident_c_holds: bool,
    /// The untwisted Malcev identity, evaluated with the map replaced by Id.
    pub malcev_plain: bool,
}

pub fn classify(algebra: &SuperAlgebra) -> StructureClass {
    let plain = algebra
        .clone()
        .with_alpha(EvenMap::identity(algebra.dim()))
        .expect("the identity map is even");
    StructureClass {
        anticommutative: algebra.is_anticommutative(),
        multiplicative: algebra.is_multiplicative(),
        hom_lie: identity_holds(algebra, IdentityId::HomLie),
        hom_malcev: identity_holds(algebra, IdentityId::HomMalcev),
        s1_holds: identity_holds(algebra, IdentityId::S1),
        ident_c_holds: identity_holds(algebra, IdentityId::IdentC),
        malcev_plain: identity_holds(&plain, IdentityId::MalcevSuper),
    }
}

impl StructureClass {
    pub fn all_true(&self) -> bool {
        self.anticommutative
            && self.multiplicative
            && self.hom_lie
            && self.hom_malcev
            && self.s1_holds
            && self.ident_c_holds
            && self.malcev_plain
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::TableBuilder;
    use crate::element::Element;
    use crate::parity::Parity::{Even, Odd};
    use crate::rational::int;

    #[test]
    fn abelian_algebras_have_every_flag_set() {
        let a = TableBuilder::new(vec![Even, Odd])
            .build("abelian", EvenMap::diagonal(&[int(3), int(5)]))
            .unwrap();
        assert!(classify(&a).all_true());
    }

    #[test]
    fn a_lie_algebra_classifies_as_hom_lie() {
        let mut b = TableBuilder::new(vec![Even, Even, Even]);
        b.bracket(0, 1, Element::basis(3, 2));
        let a = b.build("heis", EvenMap::identity(3)).unwrap();
        let class = classify(&a);
        assert!(class.hom_lie && class.hom_malcev && class.malcev_plain);
        assert!(class.s1_holds && class.ident_c_holds);
    }

    #[test]
    fn a_symmetric_product_fails_anticommutativity_only_where_expected() {
        let mut b = TableBuilder::new(vec![Even, Even, Even]);
        b.set(0, 1, Element::basis(3, 2));
        b.set(1, 0, Element::basis(3, 2));
        let a = b.build("sym", EvenMap::identity(3)).unwrap();
        let class = classify(&a);
        assert!(!class.anticommutative);
        assert!(class.multiplicative);
    }
}
