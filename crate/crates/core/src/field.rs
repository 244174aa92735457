//! Ranks of integer matrices over `Q` and `F_p`.
//!
//! This is the fast path for field coefficients. It never produces bases,
//! only ranks, and is checked against the Smith-form route in the tests.

use alloc::vec;
use alloc::vec::Vec;

use crate::chain::Sparse;
use crate::coeff::Coefficient;
use crate::error::{Error, Result};
use crate::linalg;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) enum Field {
    Rational,
    Prime(u64),
}

impl Field {
    pub fn of(c: Coefficient) -> Result<Self> {
        match c {
            Coefficient::Rationals => Ok(Field::Rational),
            Coefficient::PrimeField(p) => Ok(Field::Prime(p)),
            Coefficient::CyclicRing(n) if crate::coeff::is_prime(n) && n <= u32::MAX as u64 => {
                Ok(Field::Prime(n))
            }
            _ => Err(Error::FieldRequired),
        }
    }
}

pub(crate) fn rank(m: &Sparse, field: Field) -> usize {
    if m.rows == 0 || m.cols == 0 || m.entries.is_empty() {
        return 0;
    }
    match field {
        Field::Prime(p) => rank_mod_p(m, p),
        Field::Rational => rank_rational(m),
    }
}

fn rank_mod_p(m: &Sparse, p: u64) -> usize {
    let (rows, cols) = (m.rows, m.cols);
    let mut a = vec![0u64; rows * cols];
    for &(i, j, x) in &m.entries {
        let x = x.rem_euclid(p as i64) as u64;
        a[i * cols + j] = (a[i * cols + j] + x) % p;
    }
    let mut r = 0;
    for c in 0..cols {
        let Some(pr) = (r..rows).find(|&i| a[i * cols + c] != 0) else {
            continue;
        };
        if pr != r {
            for j in c..cols {
                a.swap(pr * cols + j, r * cols + j);
            }
        }
        let inv = inverse_mod(a[r * cols + c], p);
        for j in c..cols {
            a[r * cols + j] = a[r * cols + j] * inv % p;
        }
        for i in r + 1..rows {
            let f = a[i * cols + c];
            if f == 0 {
                continue;
            }
            for j in c..cols {
                let sub = f * a[r * cols + j] % p;
                a[i * cols + j] = (a[i * cols + j] + p - sub) % p;
            }
        }
        r += 1;
        if r == rows {
            break;
        }
    }
    r
}

fn inverse_mod(a: u64, p: u64) -> u64 {
    // p is prime, so a^(p-2)
    let (mut base, mut e, mut acc) = (a % p, p - 2, 1u64);
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * base % p;
        }
        base = base * base % p;
        e >>= 1;
    }
    acc
}

/// Fraction-free elimination in `i128`; falls back to the exact big-integer
/// route if anything overflows or a division is inexact.
fn rank_rational(m: &Sparse) -> usize {
    match bareiss_rank(m) {
        Some(r) => r,
        None => linalg::rank(&m.to_int()),
    }
}

fn bareiss_rank(m: &Sparse) -> Option<usize> {
    let (rows, cols) = (m.rows, m.cols);
    let mut a = vec![0i128; rows * cols];
    for &(i, j, x) in &m.entries {
        a[i * cols + j] += x as i128;
    }
    let mut prev: i128 = 1;
    let mut r = 0;
    for c in 0..cols {
        let Some(pr) = (r..rows).find(|&i| a[i * cols + c] != 0) else {
            continue;
        };
        if pr != r {
            for j in 0..cols {
                a.swap(pr * cols + j, r * cols + j);
            }
        }
        let piv = a[r * cols + c];
        for i in r + 1..rows {
            let f = a[i * cols + c];
            for j in c..cols {
                let x = a[i * cols + j]
                    .checked_mul(piv)?
                    .checked_sub(f.checked_mul(a[r * cols + j])?)?;
                if x % prev != 0 {
                    return None;
                }
                a[i * cols + j] = x / prev;
            }
        }
        prev = piv;
        r += 1;
        if r == rows {
            break;
        }
    }
    Some(r)
}

/// Places sparse blocks into one matrix at the given offsets.
pub(crate) fn assemble(rows: usize, cols: usize, blocks: &[(usize, usize, &Sparse)]) -> Sparse {
    let mut out = Sparse::zeros(rows, cols);
    for &(r0, c0, b) in blocks {
        out.entries
            .extend(b.entries.iter().map(|&(i, j, x)| (r0 + i, c0 + j, x)));
    }
    out
}

/// Dimension of the homology at a spot `A --d_in--> B --d_out--> C`.
pub(crate) fn homology_dim(b: usize, d_in: &Sparse, d_out: &Sparse, field: Field) -> usize {
    b - rank(d_out, field) - rank(d_in, field)
}

/// Rank of the map induced on homology by chain maps `F_k : X_k → Y`, summed
/// over sources. `∂^{X_k}` leaves the source spot, `∂^Y` enters the target spot.
///
/// With `G = [[∂^{X_1}, 0, …, 0], …, [F_1, …, F_s, ∂^Y]]` one has
/// `rank = rank G − Σ rank ∂^{X_k} − rank ∂^Y`.
pub(crate) fn induced_rank(
    sources: &[(&Sparse, &Sparse)],
    target_in: &Sparse,
    field: Field,
) -> usize {
    let rows: usize = sources.iter().map(|(d, _)| d.rows).sum::<usize>() + target_in.rows;
    let cols: usize = sources.iter().map(|(d, _)| d.cols).sum::<usize>() + target_in.cols;
    let mut blocks: Vec<(usize, usize, &Sparse)> = Vec::new();
    let (mut r, mut c) = (0, 0);
    let top: usize = sources.iter().map(|(d, _)| d.rows).sum();
    let mut sub = 0;
    for (d, f) in sources {
        blocks.push((r, c, d));
        blocks.push((top, c, f));
        sub += rank(d, field);
        r += d.rows;
        c += d.cols;
    }
    blocks.push((top, c, target_in));
    let g = assemble(rows, cols, &blocks);
    rank(&g, field) - sub - rank(target_in, field)
}
