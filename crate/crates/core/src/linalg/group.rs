use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

/// A finitely generated abelian group `Z^free_rank ⊕ Z/t_1 ⊕ ... ⊕ Z/t_k`
/// with `t_1 | t_2 | ... | t_k` and every `t_i >= 2`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct AbelianGroup {
    pub free_rank: usize,
    #[cfg_attr(feature = "serde", serde(with = "crate::serde_util::bigint_vec"))]
    pub torsion: Vec<BigInt>,
}

impl AbelianGroup {
    pub fn trivial() -> Self {
        Self::default()
    }

    pub fn free(rank: usize) -> Self {
        AbelianGroup {
            free_rank: rank,
            torsion: Vec::new(),
        }
    }

    /// From the invariant factors of a presentation: entries equal to one
    /// are dropped, zeros count as free summands.
    pub fn from_factors(free_rank: usize, factors: impl IntoIterator<Item = BigInt>) -> Self {
        let mut g = AbelianGroup {
            free_rank,
            torsion: Vec::new(),
        };
        for f in factors {
            if f.is_zero() {
                g.free_rank += 1;
            } else if !f.is_one() {
                g.torsion.push(f);
            }
        }
        g
    }

    pub fn cyclic(n: u64) -> Self {
        Self::from_factors(0, [BigInt::from(n)])
    }

    pub fn is_trivial(&self) -> bool {
        self.free_rank == 0 && self.torsion.is_empty()
    }

    /// Largest torsion coefficient, or 1 when there is no torsion.
    pub fn exponent(&self) -> BigInt {
        self.torsion.last().cloned().unwrap_or_else(BigInt::one)
    }

    /// `None` for infinite groups.
    pub fn order(&self) -> Option<BigInt> {
        if self.free_rank > 0 {
            return None;
        }
        Some(self.torsion.iter().fold(BigInt::one(), |acc, t| acc * t))
    }

    /// Number of cyclic summands in the invariant-factor decomposition.
    pub fn num_generators(&self) -> usize {
        self.free_rank + self.torsion.len()
    }
}

impl fmt::Display for AbelianGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_trivial() {
            return f.write_str("0");
        }
        let mut first = true;
        let mut sep = |f: &mut fmt::Formatter<'_>| -> fmt::Result {
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            Ok(())
        };
        match self.free_rank {
            0 => {}
            1 => {
                sep(f)?;
                f.write_str("Z")?;
            }
            r => {
                sep(f)?;
                write!(f, "Z^{r}")?;
            }
        }
        let mut i = 0;
        while i < self.torsion.len() {
            let t = &self.torsion[i];
            let mut k = 1;
            while i + k < self.torsion.len() && &self.torsion[i + k] == t {
                k += 1;
            }
            sep(f)?;
            if k == 1 {
                write!(f, "Z/{t}")?;
            } else {
                write!(f, "(Z/{t})^{k}")?;
            }
            i += k;
        }
        Ok(())
    }
}
