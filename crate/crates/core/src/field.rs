use std::fmt;

use crate::error::{Error, Result};

/// Coefficient field of the polynomial ring: the rationals or a prime field.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default)]
pub enum Field {
    #[default]
    Rational,
    Prime(u32),
}

impl Field {
    /// Field of the given characteristic; `0` means the rationals.
    pub fn from_char(c: u64) -> Result<Self> {
        if c == 0 {
            return Ok(Field::Rational);
        }
        if c > u32::MAX as u64 || !is_prime(c) {
            return Err(Error::Field(c));
        }
        Ok(Field::Prime(c as u32))
    }

    pub fn characteristic(self) -> u64 {
        match self {
            Field::Rational => 0,
            Field::Prime(p) => p as u64,
        }
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Field::Rational => write!(f, "QQ"),
            Field::Prime(p) => write!(f, "GF({p})"),
        }
    }
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn characteristics() {
        assert_eq!(Field::from_char(0).unwrap(), Field::Rational);
        assert_eq!(Field::from_char(2).unwrap(), Field::Prime(2));
        assert_eq!(Field::from_char(7919).unwrap(), Field::Prime(7919));
        assert_eq!(Field::from_char(1), Err(Error::Field(1)));
        assert_eq!(Field::from_char(9), Err(Error::Field(9)));
    }
}
