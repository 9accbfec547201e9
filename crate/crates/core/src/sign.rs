//! Sign bookkeeping for graded identities.
//!
//! A sign exponent like x̄(ȳ+z̄) is kept symbolically as the multiset of
//! parity products {x·y, x·z} and only collapsed to ±1 once concrete
//! argument parities are known. This keeps the identity definitions
//! data-only and lets evaluation report how often each branch fired.

use std::fmt;

use crate::error::{Error, Result};
use crate::parity::Parity;

/// A formal sum of argument slots modulo two, stored as a bitmask.
///
/// Slot i of an identity contributes bit i. XOR implements addition of
/// degrees, so the set tracks the parity of any product of slot elements.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SlotSet(u8);

impl SlotSet {
    pub const EMPTY: SlotSet = SlotSet(0);

    pub fn slot(i: u8) -> Self {
        assert!(i < 8, "slot index out of range");
        SlotSet(1 << i)
    }

    pub fn xor(self, other: SlotSet) -> SlotSet {
        SlotSet(self.0 ^ other.0)
    }

    pub fn contains(self, i: u8) -> bool {
        self.0 & (1 << i) != 0
    }

    pub fn slots(self) -> impl Iterator<Item = u8> {
        (0..8).filter(move |i| self.contains(*i))
    }

    /// Total degree of this slot combination under the given parities.
    pub fn parity(self, parities: &[Parity]) -> Result<Parity> {
        let mut acc = Parity::Even;
        for i in self.slots() {
            let p = parities
                .get(i as usize)
                .copied()
                .ok_or(Error::NotHomogeneous)?;
            acc = acc + p;
        }
        Ok(acc)
    }
}

/// A sign exponent: the sum over stored pairs (a, b) of |slot a|·|slot b|.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct PairSet {
    pairs: Vec<(u8, u8)>,
}

impl PairSet {
    pub fn empty() -> Self {
        PairSet::default()
    }

    pub fn from_pairs(pairs: &[(u8, u8)]) -> Self {
        PairSet {
            pairs: pairs.to_vec(),
        }
    }

    /// The exponent (Σ slots of a)·(Σ slots of b), expanded to slot pairs.
    pub fn product(a: SlotSet, b: SlotSet) -> Self {
        let mut pairs = Vec::new();
        for i in a.slots() {
            for j in b.slots() {
                pairs.push((i, j));
            }
        }
        PairSet { pairs }
    }

    pub fn union(mut self, other: PairSet) -> Self {
        self.pairs.extend(other.pairs);
        self
    }

    pub fn pairs(&self) -> &[(u8, u8)] {
        &self.pairs
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    /// Canonical form: pairs ordered within themselves and across the list,
    /// with pairs that occur an even number of times removed.
    pub fn reduced(&self) -> PairSet {
        let mut sorted: Vec<(u8, u8)> = self
            .pairs
            .iter()
            .map(|&(a, b)| if a <= b { (a, b) } else { (b, a) })
            .collect();
        sorted.sort_unstable();
        let mut out = Vec::new();
        let mut idx = 0;
        while idx < sorted.len() {
            let mut run = 1;
            while idx + run < sorted.len() && sorted[idx + run] == sorted[idx] {
                run += 1;
            }
            if run % 2 == 1 {
                out.push(sorted[idx]);
            }
            idx += run;
        }
        PairSet { pairs: out }
    }

    /// Evaluates the exponent against concrete parities and returns the sign.
    pub fn sign(&self, parities: &[Parity]) -> Result<Sign> {
        let mut odd_count = 0usize;
        for &(a, b) in &self.pairs {
            let pa = parities
                .get(a as usize)
                .copied()
                .ok_or(Error::NotHomogeneous)?;
            let pb = parities
                .get(b as usize)
                .copied()
                .ok_or(Error::NotHomogeneous)?;
            if pa.is_odd() && pb.is_odd() {
                odd_count += 1;
            }
        }
        Ok(if odd_count.is_multiple_of(2) {
            Sign::Plus
        } else {
            Sign::Minus
        })
    }
}

impl fmt::Display for PairSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.pairs.is_empty() {
            return f.write_str("1");
        }
        f.write_str("(-1)^{")?;
        for (idx, (a, b)) in self.pairs.iter().enumerate() {
            if idx > 0 {
                f.write_str("+")?;
            }
            write!(f, "|{a}||{b}|")?;
        }
        f.write_str("}")
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn as_i64(self) -> i64 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }

    pub fn is_negative(self) -> bool {
        self == Sign::Minus
    }
}

/// Counts how the graded sign rule fired during an evaluation.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct SignStats {
    /// Sign evaluations performed.
    pub evaluated: u64,
    /// Evaluations that produced −1.
    pub negative: u64,
}

impl SignStats {
    pub fn record(&mut self, sign: Sign) {
        self.evaluated += 1;
        if sign.is_negative() {
            self.negative += 1;
        }
    }

    pub fn merge(&mut self, other: &SignStats) {
        self.evaluated += other.evaluated;
        self.negative += other.negative;
    }
}
