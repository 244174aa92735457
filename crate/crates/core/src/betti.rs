//! Bigraded Betti numbers of Stanley–Reisner rings from full subcomplexes.
//!
//! `β_{i,I} = dim H̃^{i-|I|-1}(K_I; k)` for non-empty `I`; over a field
//! cohomology and homology have the same dimension, so ranks suffice.

use alloc::vec::Vec;

use crate::chain;
use crate::coeff::Coefficient;
use crate::complex::{SimplicialComplex, Vertex};
use crate::error::Result;
use crate::field::{self, Field};
use crate::golod::lex_subsets;
use crate::mask::{bits, size, Mask};

#[derive(Clone, Debug, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct BettiEntry {
    pub i: usize,
    pub subset: Vec<Vertex>,
    pub rank: usize,
}

/// Nonzero `β_{i,I}`, ordered by `i` and then lexicographically by `I`.
#[derive(Clone, Debug, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct BettiTable {
    pub field: Coefficient,
    pub entries: Vec<BettiEntry>,
}

impl BettiTable {
    pub fn get(&self, i: usize, subset: &[Vertex]) -> usize {
        self.entries
            .iter()
            .find(|e| e.i == i && e.subset == subset)
            .map_or(0, |e| e.rank)
    }

    /// `β_{i,j} = Σ_{|I| = j} β_{i,I}` as `((i, j), β)`, sorted.
    pub fn aggregated(&self) -> Vec<((usize, usize), usize)> {
        let mut out: Vec<((usize, usize), usize)> = Vec::new();
        for e in &self.entries {
            let key = (e.i, e.subset.len());
            match out.iter_mut().find(|(k, _)| *k == key) {
                Some((_, b)) => *b += e.rank,
                None => out.push((key, e.rank)),
            }
        }
        out.sort_unstable();
        out
    }

    /// `Σ_I β_{i,I}` as `(i, total)`, sorted.
    pub fn totals(&self) -> Vec<(usize, usize)> {
        let mut out: Vec<(usize, usize)> = Vec::new();
        for ((i, _), b) in self.aggregated() {
            match out.last_mut() {
                Some((j, t)) if *j == i => *t += b,
                _ => out.push((i, b)),
            }
        }
        out
    }
}

pub fn bigraded_betti(k: &SimplicialComplex, field: Coefficient) -> Result<BettiTable> {
    let field = field.validate()?;
    let f = Field::of(field)?;
    let betti = SubsetBetti::new(k, f);
    let mut entries = Vec::new();
    for s in lex_subsets(k.num_vertices())? {
        for d in -1..=betti.max_dim {
            let rank = betti.get(s, d);
            if rank > 0 {
                let i = (d + size(s) as isize + 1) as usize;
                entries.push(BettiEntry {
                    i,
                    subset: bits(s).map(|j| k.vertices()[j]).collect(),
                    rank,
                });
            }
        }
    }
    // stable sort keeps the lexicographic order of subsets within each i
    entries.sort_by_key(|e| e.i);
    Ok(BettiTable { field, entries })
}

/// Reduced Betti numbers of every full subcomplex, indexed by local mask and
/// then by degree `-1..=max_dim`.
pub(crate) struct SubsetBetti {
    pub max_dim: isize,
    table: Vec<Vec<usize>>,
}

impl SubsetBetti {
    pub fn new(k: &SimplicialComplex, f: Field) -> Self {
        let m = k.num_vertices();
        let max_dim = k.dim().max(0);
        let table = (0..1usize << m)
            .map(|s| {
                let ki = k.full_subcomplex_mask(s as Mask);
                (-1..=max_dim)
                    .map(|d| {
                        field::homology_dim(
                            chain::rank_in_degree(&ki, d, true),
                            &chain::boundary(&ki, d + 1, true),
                            &chain::boundary(&ki, d, true),
                            f,
                        )
                    })
                    .collect()
            })
            .collect();
        SubsetBetti { max_dim, table }
    }

    pub fn get(&self, s: Mask, d: isize) -> usize {
        if d < -1 || d > self.max_dim {
            return 0;
        }
        self.table[s as usize][(d + 1) as usize]
    }

    /// `(i, j)` with `i + j = n - 1` and both Betti numbers nonzero.
    pub fn pairing(&self, s1: Mask, s2: Mask, n: isize) -> Vec<(isize, isize)> {
        (0..n)
            .map(|i| (i, n - 1 - i))
            .filter(|&(i, j)| self.get(s1, i) > 0 && self.get(s2, j) > 0)
            .collect()
    }

    /// `dim H̃_n(K_{I₁} * K_{I₂})`.
    pub fn join_dim(&self, s1: Mask, s2: Mask, n: isize) -> usize {
        (-1..=n)
            .map(|i| self.get(s1, i) * self.get(s2, n - 1 - i))
            .sum()
    }
}
