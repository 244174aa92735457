use alloc::format;
use core::fmt;
use core::str::FromStr;

use crate::error::{Error, Result};

/// Coefficients for (co)homology.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Coefficient {
    Integers,
    Rationals,
    PrimeField(u64),
    CyclicRing(u64),
}

impl Coefficient {
    pub fn prime_field(p: u64) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::InvalidCoefficient(format!("{p} is not prime")));
        }
        if p > u32::MAX as u64 {
            return Err(Error::InvalidCoefficient(format!("prime {p} is too large")));
        }
        Ok(Coefficient::PrimeField(p))
    }

    pub fn cyclic(n: u64) -> Result<Self> {
        if n < 2 {
            return Err(Error::InvalidCoefficient(format!("Z/{n} needs n >= 2")));
        }
        Ok(Coefficient::CyclicRing(n))
    }

    pub fn validate(self) -> Result<Self> {
        match self {
            Coefficient::PrimeField(p) => Self::prime_field(p),
            Coefficient::CyclicRing(n) => Self::cyclic(n),
            c => Ok(c),
        }
    }

    /// The `n` of `Z/n`; zero for `Z` and `Q`.
    pub fn modulus(self) -> u64 {
        match self {
            Coefficient::Integers | Coefficient::Rationals => 0,
            Coefficient::PrimeField(p) => p,
            Coefficient::CyclicRing(n) => n,
        }
    }

    pub fn is_field(self) -> bool {
        match self {
            Coefficient::Rationals | Coefficient::PrimeField(_) => true,
            Coefficient::CyclicRing(n) => is_prime(n),
            Coefficient::Integers => false,
        }
    }
}

impl fmt::Display for Coefficient {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Coefficient::Integers => f.write_str("Z"),
            Coefficient::Rationals => f.write_str("Q"),
            Coefficient::PrimeField(p) => write!(f, "F_{p}"),
            Coefficient::CyclicRing(n) => write!(f, "Z/{n}"),
        }
    }
}

/// Parses the command-line spellings `int`, `rat`, `f:p` and `mod:n`, and
/// the displayed forms `Z`, `Q`, `F_p` and `Z/n`.
impl FromStr for Coefficient {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::InvalidCoefficient(format!("unrecognized coefficient {s:?}"));
        match s {
            "int" | "Z" => Ok(Coefficient::Integers),
            "rat" | "Q" => Ok(Coefficient::Rationals),
            _ => {
                if let Some(p) = s.strip_prefix("f:") {
                    Self::prime_field(p.parse().map_err(|_| bad())?)
                } else if let Some(p) = s.strip_prefix("F_") {
                    Self::prime_field(p.parse().map_err(|_| bad())?)
                } else if let Some(n) = s.strip_prefix("mod:").or_else(|| s.strip_prefix("Z/")) {
                    Self::cyclic(n.parse().map_err(|_| bad())?)
                } else {
                    Err(bad())
                }
            }
        }
    }
}

#[cfg(feature = "serde")]
impl serde::Serialize for Coefficient {
    fn serialize<S: serde::Serializer>(&self, s: S) -> core::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

#[cfg(feature = "serde")]
impl<'de> serde::Deserialize<'de> for Coefficient {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> core::result::Result<Self, D::Error> {
        let s = alloc::string::String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d.saturating_mul(d) <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Prime factorization by trial division, primes ascending.
pub(crate) fn factorize(mut n: u64) -> alloc::vec::Vec<(u64, u32)> {
    let mut out = alloc::vec::Vec::new();
    let mut d = 2u64;
    while d.saturating_mul(d) <= n {
        let mut e = 0;
        while n.is_multiple_of(d) {
            n /= d;
            e += 1;
        }
        if e > 0 {
            out.push((d, e));
        }
        d += 1;
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse() {
        assert_eq!("int".parse::<Coefficient>().unwrap(), Coefficient::Integers);
        assert_eq!(
            "rat".parse::<Coefficient>().unwrap(),
            Coefficient::Rationals
        );
        assert_eq!(
            "f:3".parse::<Coefficient>().unwrap(),
            Coefficient::PrimeField(3)
        );
        assert_eq!(
            "mod:4".parse::<Coefficient>().unwrap(),
            Coefficient::CyclicRing(4)
        );
        assert!("f:4".parse::<Coefficient>().is_err());
        assert!("mod:1".parse::<Coefficient>().is_err());
        assert!("real".parse::<Coefficient>().is_err());
    }

    #[test]
    fn factorization() {
        assert_eq!(factorize(360), alloc::vec![(2, 3), (3, 2), (5, 1)]);
        assert_eq!(factorize(1), alloc::vec![]);
        assert_eq!(factorize(97), alloc::vec![(97, 1)]);
    }
}
