//! Parity of basis vectors and homogeneous elements.

use std::fmt;
use std::ops::Add;

use crate::error::{Error, Result};

/// Degree of a homogeneous vector in a two-graded space.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Parity {
    Even,
    Odd,
}

impl Parity {
    pub fn from_u8(value: u8) -> Result<Self> {
        match value {
            0 => Ok(Parity::Even),
            1 => Ok(Parity::Odd),
            other => Err(Error::BadParity {
                value: other as u64,
            }),
        }
    }

    pub fn as_u8(self) -> u8 {
        match self {
            Parity::Even => 0,
            Parity::Odd => 1,
        }
    }

    pub fn is_odd(self) -> bool {
        self == Parity::Odd
    }
}

/// Degrees add modulo two.
impl Add for Parity {
    type Output = Parity;

    fn add(self, rhs: Parity) -> Parity {
        if self == rhs {
            Parity::Even
        } else {
            Parity::Odd
        }
    }
}

impl fmt::Display for Parity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Parity::Even => "even",
            Parity::Odd => "odd",
        })
    }
}

/// Result of asking for the parity of an arbitrary element.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Homogeneity {
    /// The zero element, homogeneous of every degree.
    Zero,
    /// Nonzero and supported on basis vectors of a single parity.
    Homogeneous(Parity),
    /// Mixes even and odd components.
    Mixed,
}

impl Homogeneity {
    /// The parity to use in sign computations, treating zero as even.
    pub fn sign_parity(self) -> Result<Parity> {
        match self {
            Homogeneity::Zero => Ok(Parity::Even),
            Homogeneity::Homogeneous(p) => Ok(p),
            Homogeneity::Mixed => Err(Error::NotHomogeneous),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parity_addition_is_mod_two() {
        use Parity::*;
        assert_eq!(Even + Even, Even);
        assert_eq!(Even + Odd, Odd);
        assert_eq!(Odd + Even, Odd);
        assert_eq!(Odd + Odd, Even);
    }

    #[test]
    fn from_u8_rejects_larger_values() {
        assert_eq!(Parity::from_u8(0).unwrap(), Parity::Even);
        assert_eq!(Parity::from_u8(1).unwrap(), Parity::Odd);
        assert!(Parity::from_u8(2).is_err());
    }

    #[test]
    fn zero_counts_as_even_for_signs() {
        assert_eq!(Homogeneity::Zero.sign_parity().unwrap(), Parity::Even);
        assert_eq!(
            Homogeneity::Homogeneous(Parity::Odd).sign_parity().unwrap(),
            Parity::Odd
        );
        assert!(Homogeneity::Mixed.sign_parity().is_err());
    }
}
