//! The registry of checkable identities.
//!
//! Each identity is stored as data: a list of signed terms over named slots,
//! built once from the trilinear cyclic sum and the auxiliary map G. A
//! defect is the left side minus the right side of the identity's display;
//! an identity instance holds exactly when its defect vanishes.

use std::fmt;
use std::sync::OnceLock;

use crate::algebra::SuperAlgebra;
use crate::element::Element;
use crate::error::{Error, Result};
use crate::expr::{eval_terms, Formal, Term};
use crate::parity::Parity;
use crate::sign::{PairSet, SignStats, SlotSet};

/// Stable identifiers for the registry entries.
#[allow(non_camel_case_types)]
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum IdentityId {
    MalcevSuper,
    HomMalcev,
    IdentC,
    S1,
    HomLie,
    L25_I_A,
    L25_I_B,
    L25_I_C,
    L25_II,
    L26_1,
    L26_2,
    L26_3,
    L26_4,
    L26_5,
    S3,
    S4,
    S5,
    S6,
}

impl IdentityId {
    pub const ALL: [IdentityId; 18] = [
        IdentityId::MalcevSuper,
        IdentityId::HomMalcev,
        IdentityId::IdentC,
        IdentityId::S1,
        IdentityId::HomLie,
        IdentityId::L25_I_A,
        IdentityId::L25_I_B,
        IdentityId::L25_I_C,
        IdentityId::L25_II,
        IdentityId::L26_1,
        IdentityId::L26_2,
        IdentityId::L26_3,
        IdentityId::L26_4,
        IdentityId::L26_5,
        IdentityId::S3,
        IdentityId::S4,
        IdentityId::S5,
        IdentityId::S6,
    ];

    pub fn name(self) -> &'static str {
        match self {
            IdentityId::MalcevSuper => "malcev_super",
            IdentityId::HomMalcev => "hom_malcev",
            IdentityId::IdentC => "ident_c",
            IdentityId::S1 => "s1",
            IdentityId::HomLie => "hom_lie",
            IdentityId::L25_I_A => "l25_i_a",
            IdentityId::L25_I_B => "l25_i_b",
            IdentityId::L25_I_C => "l25_i_c",
            IdentityId::L25_II => "l25_ii",
            IdentityId::L26_1 => "l26_1",
            IdentityId::L26_2 => "l26_2",
            IdentityId::L26_3 => "l26_3",
            IdentityId::L26_4 => "l26_4",
            IdentityId::L26_5 => "l26_5",
            IdentityId::S3 => "s3",
            IdentityId::S4 => "s4",
            IdentityId::S5 => "s5",
            IdentityId::S6 => "s6",
        }
    }

    pub fn parse(text: &str) -> Result<IdentityId> {
        let lowered = text.to_ascii_lowercase();
        IdentityId::ALL
            .into_iter()
            .find(|id| id.name() == lowered)
            .ok_or_else(|| Error::UnknownIdentity(text.to_string()))
    }
}

impl fmt::Display for IdentityId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// What an identity assumes about the algebra. Advisory: evaluation never
/// enforces a premise, classification interprets it.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Premise {
    None,
    AnticommutativeMultiplicative,
    HomMalcev,
}

/// A registry entry: an evaluable defect functional.
#[derive(Debug)]
pub struct IdentityDescriptor {
    pub id: IdentityId,
    pub arity: usize,
    pub premise: Premise,
    pub slot_names: &'static [&'static str],
    terms: Vec<Term>,
}

impl IdentityDescriptor {
    pub fn terms(&self) -> &[Term] {
        &self.terms
    }

    /// Exact defect on a tuple of homogeneous elements; zero means this
    /// instance of the identity holds.
    pub fn defect(&self, algebra: &SuperAlgebra, args: &[&Element]) -> Result<Element> {
        self.defect_impl(algebra, args, None)
    }

    /// Same, recording every sign evaluation in `stats`.
    pub fn defect_with_stats(
        &self,
        algebra: &SuperAlgebra,
        args: &[&Element],
        stats: &mut SignStats,
    ) -> Result<Element> {
        self.defect_impl(algebra, args, Some(stats))
    }

    fn defect_impl(
        &self,
        algebra: &SuperAlgebra,
        args: &[&Element],
        stats: Option<&mut SignStats>,
    ) -> Result<Element> {
        if args.len() != self.arity {
            return Err(Error::BadArity {
                id: self.id.name(),
                expected: self.arity,
                got: args.len(),
            });
        }
        let mut parities = Vec::with_capacity(args.len());
        for arg in args {
            parities.push(algebra.parity_of(arg)?.sign_parity()?);
        }
        eval_terms(&self.terms, algebra, args, &parities, stats)
    }
}

/// Term-by-term audit rendering, one summand per line.
impl fmt::Display for IdentityDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{}({}):", self.id, self.slot_names.join(","))?;
        for term in &self.terms {
            writeln!(f, "  {}", term.render(self.slot_names))?;
        }
        Ok(())
    }
}

/// The trilinear cyclic sum with the twisting map raised to `power` on the
/// trailing factor: (xy)·a^p(z) + sign·(yz)·a^p(x) + sign·(zx)·a^p(y).
fn jac(x: &Formal, y: &Formal, z: &Formal, power: u8) -> Formal {
    let xy_z = Formal::mul(&Formal::mul(x, y), &z.alpha(power));
    let yz_x = Formal::mul(&Formal::mul(y, z), &x.alpha(power))
        .signed(PairSet::product(x.parity, y.parity.xor(z.parity)));
    let zx_y = Formal::mul(&Formal::mul(z, x), &y.alpha(power))
        .signed(PairSet::product(z.parity, x.parity.xor(y.parity)));
    xy_z.add(&yz_x).add(&zx_y)
}

/// The auxiliary map G(w,x,y,z) built from the twisted cyclic sum.
fn g_of(w: &Formal, x: &Formal, y: &Formal, z: &Formal) -> Formal {
    let lead = jac(&Formal::mul(w, x), &y.alpha(1), &z.alpha(1), 1);
    let mid =
        Formal::mul(&x.alpha(2), &jac(w, y, z, 1)).signed(PairSet::product(x.parity, w.parity));
    let tail = Formal::mul(&jac(x, y, z, 1), &w.alpha(2)).signed(PairSet::product(
        w.parity,
        x.parity.xor(y.parity).xor(z.parity),
    ));
    lead.sub(&mid).sub(&tail)
}

fn slots3() -> (Formal, Formal, Formal) {
    (Formal::slot(0), Formal::slot(1), Formal::slot(2))
}

fn slots4() -> (Formal, Formal, Formal, Formal) {
    (
        Formal::slot(0),
        Formal::slot(1),
        Formal::slot(2),
        Formal::slot(3),
    )
}

fn pp(a: SlotSet, b: SlotSet) -> PairSet {
    PairSet::product(a, b)
}

/// Linearization of J(x,y,xz) = J(x,y,z)x in the x slot (renamed t,x), with
/// Koszul signs fixed by extraction from the Grassmann envelope:
///   (-1)^{x̄ȳ} J(a(t),a(y),xz) + (-1)^{t̄(x̄+ȳ)} J(a(x),a(y),tz)
///     = (-1)^{x̄(ȳ+z̄)} J(t,y,z)·a²(x) + (-1)^{t̄(x̄+ȳ+z̄)} J(x,y,z)·a²(t).
/// Power 0 is the untwisted Malcev super identity, power 1 the twisted one.
fn malcev_defect(power: u8) -> Formal {
    let (t, x, y, z) = slots4();
    let lead = jac(
        &t.alpha(power),
        &y.alpha(power),
        &Formal::mul(&x, &z),
        power,
    )
    .signed(pp(x.parity, y.parity));
    let swapped = jac(
        &x.alpha(power),
        &y.alpha(power),
        &Formal::mul(&t, &z),
        power,
    )
    .signed(pp(t.parity, x.parity.xor(y.parity)));
    let rhs_x = Formal::mul(&jac(&t, &y, &z, power), &x.alpha(2 * power))
        .signed(pp(x.parity, y.parity.xor(z.parity)));
    let rhs_t = Formal::mul(&jac(&x, &y, &z, power), &t.alpha(2 * power))
        .signed(pp(t.parity, x.parity.xor(y.parity).xor(z.parity)));
    lead.add(&swapped).sub(&rhs_x).sub(&rhs_t)
}

fn s1_defect() -> Formal {
    let (w, x, y, z) = slots4();
    let lead = jac(&Formal::mul(&w, &x), &y.alpha(1), &z.alpha(1), 1);
    let hom_w = Formal::mul(&w.alpha(2), &jac(&x, &y, &z, 1));
    let hom_x =
        Formal::mul(&jac(&w, &y, &z, 1), &x.alpha(2)).signed(pp(x.parity, y.parity.xor(z.parity)));
    let wrap = jac(&Formal::mul(&y, &z), &w.alpha(1), &x.alpha(1), 1)
        .scale(2)
        .signed(pp(y.parity.xor(z.parity), x.parity.xor(w.parity)));
    lead.sub(&hom_w).sub(&hom_x).add(&wrap)
}

fn ident_c_defect() -> Formal {
    let (w, x, y, z) = slots4();
    let lhs = jac(&y.alpha(1), &z.alpha(1), &Formal::mul(&w, &x), 1).add(
        &jac(&w.alpha(1), &z.alpha(1), &Formal::mul(&y, &x), 1)
            .signed(pp(y.parity, z.parity).union(pp(w.parity, y.parity.xor(z.parity)))),
    );
    let rhs = Formal::mul(&jac(&y, &z, &x, 1), &w.alpha(2))
        .signed(pp(w.parity, x.parity))
        .add(&Formal::mul(&jac(&w, &z, &x, 1), &y.alpha(2)).signed(
            pp(y.parity, z.parity.xor(w.parity).xor(x.parity)).union(pp(z.parity, w.parity)),
        ));
    lhs.sub(&rhs)
}

type Permute3 = fn(&Formal, &Formal, &Formal) -> (Formal, Formal, Formal, PairSet);
type Permute4 = fn(&Formal, &Formal, &Formal, &Formal) -> ([Formal; 4], PairSet);

fn skew3_defect(choose: Permute3) -> Formal {
    let (x, y, z) = slots3();
    let (a, b, c, sign) = choose(&x, &y, &z);
    jac(&x, &y, &z, 1).add(&jac(&a, &b, &c, 1).signed(sign))
}

fn l25_ii_defect() -> Formal {
    let (w, x, y, z) = slots4();
    let xyz = x.parity.xor(y.parity).xor(z.parity);
    let xyw = x.parity.xor(y.parity).xor(w.parity);
    let lhs = Formal::mul(&w.alpha(2), &jac(&x, &y, &z, 1))
        .sub(&Formal::mul(&x.alpha(2), &jac(&y, &z, &w, 1)).signed(pp(w.parity, xyz)))
        .add(
            &Formal::mul(&y.alpha(2), &jac(&z, &w, &x, 1))
                .signed(pp(y.parity.xor(z.parity), w.parity.xor(x.parity))),
        )
        .sub(&Formal::mul(&z.alpha(2), &jac(&w, &x, &y, 1)).signed(pp(z.parity, xyw)));
    let rhs = jac(&Formal::mul(&w, &x), &y.alpha(1), &z.alpha(1), 1)
        .add(
            &jac(&Formal::mul(&y, &z), &w.alpha(1), &x.alpha(1), 1)
                .signed(pp(y.parity.xor(z.parity), x.parity.xor(w.parity))),
        )
        .add(
            &jac(&Formal::mul(&w, &y), &z.alpha(1), &x.alpha(1), 1)
                .signed(pp(x.parity, y.parity.xor(z.parity))),
        )
        .add(
            &jac(&Formal::mul(&z, &x), &w.alpha(1), &y.alpha(1), 1).signed(
                pp(z.parity, x.parity.xor(y.parity)).union(pp(w.parity, x.parity.xor(z.parity))),
            ),
        )
        .sub(&jac(&Formal::mul(&z, &w), &x.alpha(1), &y.alpha(1), 1).signed(pp(z.parity, xyw)))
        .sub(&jac(&Formal::mul(&x, &y), &z.alpha(1), &w.alpha(1), 1).signed(pp(w.parity, xyz)));
    lhs.sub(&rhs)
}

fn skew4_defect(choose: Permute4) -> Formal {
    let (w, x, y, z) = slots4();
    let ([a, b, c, d], sign) = choose(&w, &x, &y, &z);
    g_of(&w, &x, &y, &z).add(&g_of(&a, &b, &c, &d).signed(sign))
}

fn s3_defect() -> Formal {
    let (w, x, y, z) = slots4();
    let xyz = x.parity.xor(y.parity).xor(z.parity);
    let xyw = x.parity.xor(y.parity).xor(w.parity);
    jac(&Formal::mul(&w, &x), &y.alpha(1), &z.alpha(1), 1)
        .add(&jac(&Formal::mul(&x, &y), &z.alpha(1), &w.alpha(1), 1).signed(pp(w.parity, xyz)))
        .add(
            &jac(&Formal::mul(&y, &z), &w.alpha(1), &x.alpha(1), 1)
                .signed(pp(y.parity.xor(z.parity), x.parity.xor(w.parity))),
        )
        .add(&jac(&Formal::mul(&z, &w), &x.alpha(1), &y.alpha(1), 1).signed(pp(z.parity, xyw)))
}

fn s4_defect() -> Formal {
    let (w, x, y, z) = slots4();
    let xyw = x.parity.xor(y.parity).xor(w.parity);
    let lhs = g_of(&w, &x, &y, &z)
        .scale(2)
        .sub(&Formal::mul(&w.alpha(2), &jac(&x, &y, &z, 1)))
        .add(&Formal::mul(&x.alpha(2), &jac(&w, &y, &z, 1)).signed(pp(x.parity, w.parity)))
        .sub(
            &Formal::mul(&y.alpha(2), &jac(&z, &w, &x, 1))
                .signed(pp(y.parity.xor(z.parity), x.parity.xor(w.parity))),
        )
        .add(&Formal::mul(&z.alpha(2), &jac(&w, &x, &y, 1)).signed(pp(z.parity, xyw)));
    let rhs = jac(&Formal::mul(&w, &x), &y.alpha(1), &z.alpha(1), 1).add(
        &jac(&Formal::mul(&y, &z), &w.alpha(1), &x.alpha(1), 1)
            .signed(pp(x.parity.xor(w.parity), y.parity.xor(z.parity))),
    );
    lhs.sub(&rhs)
}

fn s5_defect() -> Formal {
    let (w, x, y, z) = slots4();
    let pair = jac(&Formal::mul(&w, &x), &y.alpha(1), &z.alpha(1), 1).add(
        &jac(&Formal::mul(&y, &z), &w.alpha(1), &x.alpha(1), 1)
            .signed(pp(y.parity.xor(z.parity), w.parity.xor(x.parity))),
    );
    g_of(&w, &x, &y, &z).sub(&pair.scale(2))
}

fn s6_defect() -> Formal {
    let (w, x, y, z) = slots4();
    let xyz = x.parity.xor(y.parity).xor(z.parity);
    let xyw = x.parity.xor(y.parity).xor(w.parity);
    let lhs = Formal::mul(&w.alpha(2), &jac(&x, &y, &z, 1))
        .sub(&Formal::mul(&x.alpha(2), &jac(&y, &z, &w, 1)).signed(pp(w.parity, xyz)))
        .add(
            &Formal::mul(&y.alpha(2), &jac(&z, &w, &x, 1))
                .signed(pp(y.parity.xor(z.parity), w.parity.xor(x.parity))),
        )
        .sub(&Formal::mul(&z.alpha(2), &jac(&w, &x, &y, 1)).signed(pp(z.parity, xyw)));
    let rhs = jac(&Formal::mul(&w, &x), &y.alpha(1), &z.alpha(1), 1)
        .scale(3)
        .add(
            &jac(&Formal::mul(&y, &z), &w.alpha(1), &x.alpha(1), 1)
                .scale(3)
                .signed(pp(y.parity.xor(z.parity), w.parity.xor(x.parity))),
        );
    lhs.sub(&rhs)
}

const SLOTS_TXYZ: &[&str] = &["t", "x", "y", "z"];
const SLOTS_WXYZ: &[&str] = &["w", "x", "y", "z"];
const SLOTS_XYZ: &[&str] = &["x", "y", "z"];

fn build(id: IdentityId) -> IdentityDescriptor {
    use IdentityId::*;
    let (premise, slot_names, formal) = match id {
        MalcevSuper => (Premise::None, SLOTS_TXYZ, malcev_defect(0)),
        HomMalcev => (Premise::None, SLOTS_TXYZ, malcev_defect(1)),
        IdentC => (Premise::None, SLOTS_WXYZ, ident_c_defect()),
        S1 => (Premise::None, SLOTS_WXYZ, s1_defect()),
        HomLie => (Premise::None, SLOTS_XYZ, {
            let (x, y, z) = slots3();
            jac(&x, &y, &z, 1)
        }),
        L25_I_A => (
            Premise::AnticommutativeMultiplicative,
            SLOTS_XYZ,
            skew3_defect(|x, y, z| (y.clone(), x.clone(), z.clone(), pp(x.parity, y.parity))),
        ),
        L25_I_B => (
            Premise::AnticommutativeMultiplicative,
            SLOTS_XYZ,
            skew3_defect(|x, y, z| (x.clone(), z.clone(), y.clone(), pp(y.parity, z.parity))),
        ),
        L25_I_C => (
            Premise::AnticommutativeMultiplicative,
            SLOTS_XYZ,
            skew3_defect(|x, y, z| {
                (
                    z.clone(),
                    y.clone(),
                    x.clone(),
                    pp(x.parity, y.parity.xor(z.parity)).union(pp(y.parity, z.parity)),
                )
            }),
        ),
        L25_II => (
            Premise::AnticommutativeMultiplicative,
            SLOTS_WXYZ,
            l25_ii_defect(),
        ),
        L26_1 => (
            Premise::HomMalcev,
            SLOTS_WXYZ,
            skew4_defect(|w, x, y, z| {
                (
                    [x.clone(), w.clone(), y.clone(), z.clone()],
                    pp(x.parity, w.parity),
                )
            }),
        ),
        L26_2 => (
            Premise::HomMalcev,
            SLOTS_WXYZ,
            skew4_defect(|w, x, y, z| {
                (
                    [w.clone(), x.clone(), z.clone(), y.clone()],
                    pp(y.parity, z.parity),
                )
            }),
        ),
        L26_3 => (
            Premise::HomMalcev,
            SLOTS_WXYZ,
            skew4_defect(|w, x, y, z| {
                (
                    [w.clone(), y.clone(), x.clone(), z.clone()],
                    pp(x.parity, y.parity),
                )
            }),
        ),
        L26_4 => (
            Premise::HomMalcev,
            SLOTS_WXYZ,
            skew4_defect(|w, x, y, z| {
                (
                    [y.clone(), x.clone(), w.clone(), z.clone()],
                    pp(w.parity, x.parity.xor(y.parity)).union(pp(x.parity, y.parity)),
                )
            }),
        ),
        L26_5 => (
            Premise::HomMalcev,
            SLOTS_WXYZ,
            skew4_defect(|w, x, y, z| {
                (
                    [z.clone(), x.clone(), y.clone(), w.clone()],
                    pp(w.parity, x.parity.xor(y.parity).xor(z.parity))
                        .union(pp(z.parity, x.parity.xor(y.parity))),
                )
            }),
        ),
        S3 => (Premise::HomMalcev, SLOTS_WXYZ, s3_defect()),
        S4 => (Premise::HomMalcev, SLOTS_WXYZ, s4_defect()),
        S5 => (Premise::HomMalcev, SLOTS_WXYZ, s5_defect()),
        S6 => (Premise::HomMalcev, SLOTS_WXYZ, s6_defect()),
    };
    IdentityDescriptor {
        id,
        arity: slot_names.len(),
        premise,
        slot_names,
        terms: formal.terms,
    }
}

/// All identity descriptors, built once.
pub struct Registry {
    items: Vec<IdentityDescriptor>,
}

impl Registry {
    pub fn get(&self, id: IdentityId) -> &IdentityDescriptor {
        &self.items[id as usize]
    }

    pub fn all(&self) -> &[IdentityDescriptor] {
        &self.items
    }
}

pub fn registry() -> &'static Registry {
    static REGISTRY: OnceLock<Registry> = OnceLock::new();
    REGISTRY.get_or_init(|| Registry {
        items: IdentityId::ALL.into_iter().map(build).collect(),
    })
}

/// Defect of one identity instance.
pub fn evaluate_defect(
    algebra: &SuperAlgebra,
    id: IdentityId,
    args: &[&Element],
) -> Result<Element> {
    registry().get(id).defect(algebra, args)
}

fn eval_formal(formal: &Formal, algebra: &SuperAlgebra, args: &[&Element]) -> Result<Element> {
    let mut parities: Vec<Parity> = Vec::with_capacity(args.len());
    for arg in args {
        parities.push(algebra.parity_of(arg)?.sign_parity()?);
    }
    eval_terms(&formal.terms, algebra, args, &parities, None)
}

/// (xy)·a(z) + sign·(yz)·a(x) + sign·(zx)·a(y) with a the algebra's map.
pub fn hom_super_jacobian(
    algebra: &SuperAlgebra,
    x: &Element,
    y: &Element,
    z: &Element,
) -> Result<Element> {
    let (fx, fy, fz) = slots3();
    eval_formal(&jac(&fx, &fy, &fz, 1), algebra, &[x, y, z])
}

/// The same cyclic sum with the map replaced by the identity.
pub fn super_jacobian(
    algebra: &SuperAlgebra,
    x: &Element,
    y: &Element,
    z: &Element,
) -> Result<Element> {
    let (fx, fy, fz) = slots3();
    eval_formal(&jac(&fx, &fy, &fz, 0), algebra, &[x, y, z])
}

/// The auxiliary quadrilinear map G.
pub fn g_map(
    algebra: &SuperAlgebra,
    w: &Element,
    x: &Element,
    y: &Element,
    z: &Element,
) -> Result<Element> {
    let (fw, fx, fy, fz) = slots4();
    eval_formal(&g_of(&fw, &fx, &fy, &fz), algebra, &[w, x, y, z])
}
