use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::IntMatrix;

/// `U · A · V = D` with `D` diagonal, `d_1 | d_2 | ... | d_r`, all `d_i > 0`.
#[derive(Clone, Debug)]
pub struct SmithForm {
    pub u: IntMatrix,
    pub u_inv: IntMatrix,
    pub v: IntMatrix,
    pub v_inv: IntMatrix,
    /// Nonzero diagonal entries of `D`.
    pub invariants: Vec<BigInt>,
}

impl SmithForm {
    pub fn rank(&self) -> usize {
        self.invariants.len()
    }

    /// `D` padded with zeros to the shape of the input.
    pub fn diagonal(&self) -> IntMatrix {
        IntMatrix::diagonal(self.u.rows(), self.v.rows(), &self.invariants)
    }
}

pub fn smith_normal_form(a: &IntMatrix) -> SmithForm {
    let mut s = Reducer::new(a, true);
    let invariants = s.run();
    SmithForm {
        u: s.u,
        u_inv: s.u_inv,
        v: s.v,
        v_inv: s.v_inv,
        invariants,
    }
}

/// Invariant factors only, without the transformation matrices.
pub fn invariant_factors(a: &IntMatrix) -> Vec<BigInt> {
    Reducer::new(a, false).run()
}

struct Reducer {
    d: IntMatrix,
    u: IntMatrix,
    u_inv: IntMatrix,
    v: IntMatrix,
    v_inv: IntMatrix,
    track: bool,
}

impl Reducer {
    fn new(a: &IntMatrix, track: bool) -> Self {
        let (r, c) = if track { (a.rows(), a.cols()) } else { (0, 0) };
        Reducer {
            d: a.clone(),
            u: IntMatrix::identity(r),
            u_inv: IntMatrix::identity(r),
            v: IntMatrix::identity(c),
            v_inv: IntMatrix::identity(c),
            track,
        }
    }

    /// row[dst] += c * row[src]
    fn row_op(&mut self, dst: usize, src: usize, c: &BigInt) {
        self.d.add_row(dst, src, c);
        if self.track {
            self.u.add_row(dst, src, c);
            self.u_inv.add_col(src, dst, &-c);
        }
    }

    /// col[dst] += c * col[src]
    fn col_op(&mut self, dst: usize, src: usize, c: &BigInt) {
        self.d.add_col(dst, src, c);
        if self.track {
            self.v.add_col(dst, src, c);
            self.v_inv.add_row(src, dst, &-c);
        }
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        self.d.swap_rows(a, b);
        if self.track {
            self.u.swap_rows(a, b);
            self.u_inv.swap_cols(a, b);
        }
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        self.d.swap_cols(a, b);
        if self.track {
            self.v.swap_cols(a, b);
            self.v_inv.swap_rows(a, b);
        }
    }

    fn negate_row(&mut self, i: usize) {
        self.d.negate_row(i);
        if self.track {
            self.u.negate_row(i);
            self.u_inv.negate_col(i);
        }
    }

    fn run(&mut self) -> Vec<BigInt> {
        let (rows, cols) = (self.d.rows(), self.d.cols());
        let mut invariants = Vec::new();
        for t in 0..rows.min(cols) {
            let Some((pi, pj)) = self.smallest(t..rows, t..cols) else {
                break;
            };
            self.swap_rows(t, pi);
            self.swap_cols(t, pj);
            loop {
                if self.clear_column(t) {
                    let (i, _) = self.smallest(t + 1..rows, t..t + 1).unwrap();
                    self.swap_rows(t, i);
                    continue;
                }
                if self.clear_row(t) {
                    let (_, j) = self.smallest(t..t + 1, t + 1..cols).unwrap();
                    self.swap_cols(t, j);
                    continue;
                }
                // pivot must divide the whole remaining block
                let p = self.d[(t, t)].clone();
                let bad = (t + 1..rows)
                    .find(|&i| (t + 1..cols).any(|j| !self.d[(i, j)].is_multiple_of(&p)));
                match bad {
                    Some(i) => self.row_op(t, i, &BigInt::one()),
                    None => break,
                }
            }
            if self.d[(t, t)].is_negative() {
                self.negate_row(t);
            }
            invariants.push(self.d[(t, t)].clone());
        }
        invariants
    }

    /// Position of the nonzero entry of least magnitude in the block.
    fn smallest(
        &self,
        rows: core::ops::Range<usize>,
        cols: core::ops::Range<usize>,
    ) -> Option<(usize, usize)> {
        let mut best: Option<(usize, usize, BigInt)> = None;
        for i in rows {
            for j in cols.clone() {
                let x = &self.d[(i, j)];
                if x.is_zero() {
                    continue;
                }
                let a = x.abs();
                if best.as_ref().is_none_or(|(_, _, b)| a < *b) {
                    let one = a.is_one();
                    best = Some((i, j, a));
                    if one {
                        return best.map(|(i, j, _)| (i, j));
                    }
                }
            }
        }
        best.map(|(i, j, _)| (i, j))
    }

    /// Reduces column `t` below the pivot; `true` if remainders are left.
    fn clear_column(&mut self, t: usize) -> bool {
        let p = self.d[(t, t)].clone();
        let mut dirty = false;
        for i in t + 1..self.d.rows() {
            if self.d[(i, t)].is_zero() {
                continue;
            }
            let q = &self.d[(i, t)] / &p;
            self.row_op(i, t, &-q);
            dirty |= !self.d[(i, t)].is_zero();
        }
        dirty
    }

    fn clear_row(&mut self, t: usize) -> bool {
        let p = self.d[(t, t)].clone();
        let mut dirty = false;
        for j in t + 1..self.d.cols() {
            if self.d[(t, j)].is_zero() {
                continue;
            }
            let q = &self.d[(t, j)] / &p;
            self.col_op(j, t, &-q);
            dirty |= !self.d[(t, j)].is_zero();
        }
        dirty
    }
}
