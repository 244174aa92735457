//! Simplicial chain complexes with integer boundary matrices.
//!
//! Faces are oriented by their sorted vertex order; removing the i-th vertex
//! contributes sign `(-1)^i`. In the reduced complex the empty simplex spans
//! degree -1 and `∂_0` is the augmentation.

use alloc::vec::Vec;

use num_bigint::BigInt;

use crate::complex::{Simplex, SimplicialComplex};
use crate::linalg::IntMatrix;
use crate::mask::{bit, bits};

/// Sparse matrix as `(row, col, value)` triplets with a shape.
#[derive(Clone, Debug, Default)]
pub(crate) struct Sparse {
    pub rows: usize,
    pub cols: usize,
    pub entries: Vec<(usize, usize, i64)>,
}

impl Sparse {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Sparse {
            rows,
            cols,
            entries: Vec::new(),
        }
    }

    pub fn to_int(&self) -> IntMatrix {
        let mut m = IntMatrix::zeros(self.rows, self.cols);
        for &(i, j, x) in &self.entries {
            m[(i, j)] += BigInt::from(x);
        }
        m
    }

    pub fn transpose(&self) -> Self {
        Sparse {
            rows: self.cols,
            cols: self.rows,
            entries: self.entries.iter().map(|&(i, j, x)| (j, i, x)).collect(),
        }
    }
}

/// Number of faces in degree `d` of the (reduced or unreduced) chain complex.
pub(crate) fn rank_in_degree(k: &SimplicialComplex, d: isize, reduced: bool) -> usize {
    if d == -1 && !reduced {
        return 0;
    }
    k.face_masks(d).len()
}

/// `∂_d : C_d → C_{d-1}`.
pub(crate) fn boundary(k: &SimplicialComplex, d: isize, reduced: bool) -> Sparse {
    let cols = rank_in_degree(k, d, reduced);
    let rows = rank_in_degree(k, d - 1, reduced);
    let mut out = Sparse::zeros(rows, cols);
    if rows == 0 || cols == 0 {
        return out;
    }
    for (j, &f) in k.face_masks(d).iter().enumerate() {
        for (pos, v) in bits(f).enumerate() {
            let row = k
                .face_index(f & !bit(v))
                .expect("complex is closed under faces");
            out.entries
                .push((row, j, if pos % 2 == 0 { 1 } else { -1 }));
        }
    }
    out
}

/// One term `coefficient · simplex` of a chain.
#[derive(Clone, Debug, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct ChainTerm {
    pub simplex: Simplex,
    #[cfg_attr(feature = "serde", serde(with = "crate::serde_util::bigint"))]
    pub coefficient: BigInt,
}

/// The nonzero terms of the chain with entries `z` over `basis`.
pub fn chain_terms(basis: &[Simplex], z: &[BigInt]) -> Vec<ChainTerm> {
    basis
        .iter()
        .zip(z)
        .filter(|(_, c)| !num_traits::Zero::is_zero(*c))
        .map(|(s, c)| ChainTerm {
            simplex: s.clone(),
            coefficient: c.clone(),
        })
        .collect()
}

/// Dense coefficient vector over `basis` of a chain given by terms.
pub fn chain_vector(basis: &[Simplex], terms: &[ChainTerm]) -> Option<Vec<BigInt>> {
    let mut z = alloc::vec![BigInt::from(0); basis.len()];
    for t in terms {
        let i = basis.iter().position(|s| *s == t.simplex)?;
        z[i] += &t.coefficient;
    }
    Some(z)
}

#[derive(Clone, Debug)]
pub struct ChainComplex {
    reduced: bool,
    /// `bases[k]` spans degree `min_degree + k`.
    bases: Vec<Vec<Simplex>>,
    /// `boundaries[k]` is `∂` out of degree `min_degree + k`.
    boundaries: Vec<IntMatrix>,
}

impl ChainComplex {
    pub fn is_reduced(&self) -> bool {
        self.reduced
    }

    pub fn min_degree(&self) -> isize {
        if self.reduced {
            -1
        } else {
            0
        }
    }

    pub fn max_degree(&self) -> isize {
        self.min_degree() + self.bases.len() as isize - 1
    }

    pub fn basis(&self, d: isize) -> &[Simplex] {
        self.slot(d)
            .map(|k| self.bases[k].as_slice())
            .unwrap_or(&[])
    }

    pub fn rank(&self, d: isize) -> usize {
        self.basis(d).len()
    }

    /// `∂_d`, with the zero matrix of the right shape outside the range.
    pub fn boundary(&self, d: isize) -> IntMatrix {
        match self.slot(d) {
            Some(k) => self.boundaries[k].clone(),
            None => IntMatrix::zeros(self.rank(d - 1), self.rank(d)),
        }
    }

    fn slot(&self, d: isize) -> Option<usize> {
        let k = d - self.min_degree();
        (k >= 0 && (k as usize) < self.bases.len()).then_some(k as usize)
    }
}

pub fn chain_complex(k: &SimplicialComplex, reduced: bool) -> ChainComplex {
    let min = if reduced { -1 } else { 0 };
    let mut bases = Vec::new();
    let mut boundaries = Vec::new();
    for d in min..=k.dim().max(min) {
        bases.push(k.faces(d));
        boundaries.push(boundary(k, d, reduced).to_int());
    }
    if !reduced && k.dim() < 0 {
        bases.clear();
        boundaries.clear();
    }
    ChainComplex {
        reduced,
        bases,
        boundaries,
    }
}
