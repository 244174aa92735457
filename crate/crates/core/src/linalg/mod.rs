//! Exact integer linear algebra: Smith normal form, kernels, cokernels and
//! solving in lattices. Everything is computed over `Z`; coefficients in
//! `Z/n` enter by augmenting with `n · I`.

mod group;
mod matrix;
mod smith;

use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;

pub use group::AbelianGroup;
pub use matrix::IntMatrix;
pub use smith::{invariant_factors, smith_normal_form, SmithForm};

pub fn rank(a: &IntMatrix) -> usize {
    invariant_factors(a).len()
}

/// `Z^rows / im(A)`.
pub fn cokernel(a: &IntMatrix) -> AbelianGroup {
    let inv = invariant_factors(a);
    AbelianGroup::from_factors(a.rows() - inv.len(), inv)
}

/// Basis of `ker(A) ⊆ Z^cols`, one basis vector per column.
pub fn kernel(a: &IntMatrix) -> IntMatrix {
    let s = smith_normal_form(a);
    let keep: Vec<usize> = (s.rank()..a.cols()).collect();
    s.v.select_columns(&keep)
}

/// Whether `(Z/n)^cols → (Z/n)^rows` induced by `A` is onto; `n == 0`
/// means over `Z`.
pub fn is_surjective_mod(a: &IntMatrix, n: u64) -> bool {
    if a.rows() == 0 || n == 1 {
        return true;
    }
    if n == 0 {
        return cokernel(a).is_trivial();
    }
    let aug = a.hcat(&IntMatrix::scalar(a.rows(), &BigInt::from(n)));
    cokernel(&aug).is_trivial()
}

/// Solves `L y = z` for a matrix `L` with independent columns.
#[derive(Clone, Debug)]
pub struct LatticeSolver {
    smith: SmithForm,
    cols: usize,
}

impl LatticeSolver {
    pub fn new(basis: &IntMatrix) -> Self {
        let smith = smith_normal_form(basis);
        assert_eq!(
            smith.rank(),
            basis.cols(),
            "lattice basis must have independent columns"
        );
        LatticeSolver {
            smith,
            cols: basis.cols(),
        }
    }

    /// Coordinates of `z` in the basis, or `None` when `z` is not in the lattice.
    pub fn solve(&self, z: &[BigInt]) -> Option<Vec<BigInt>> {
        let w = self.smith.u.mul_vec(z);
        let mut t = Vec::with_capacity(self.cols);
        for (i, wi) in w.iter().enumerate() {
            if i < self.cols {
                let (q, r) = wi.div_rem(&self.smith.invariants[i]);
                if !r.is_zero() {
                    return None;
                }
                t.push(q);
            } else if !wi.is_zero() {
                return None;
            }
        }
        Some(self.smith.v.mul_vec(&t))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;
    use num_traits::One;

    fn det_u(u: &IntMatrix) -> BigInt {
        // Bareiss on a copy
        let n = u.rows();
        let mut a = u.clone();
        let mut sign = BigInt::one();
        let mut prev = BigInt::one();
        for k in 0..n {
            if a[(k, k)].is_zero() {
                let Some(p) = (k + 1..n).find(|&i| !a[(i, k)].is_zero()) else {
                    return BigInt::zero();
                };
                a.swap_rows(k, p);
                sign = -sign;
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let x = &a[(i, j)] * &a[(k, k)] - &a[(i, k)] * &a[(k, j)];
                    a[(i, j)] = x / &prev;
                }
            }
            prev = a[(k, k)].clone();
        }
        if n == 0 {
            return BigInt::one();
        }
        sign * a[(n - 1, n - 1)].clone()
    }

    fn check(a: &IntMatrix) -> SmithForm {
        let s = smith_normal_form(a);
        assert_eq!(s.u.mul(a).mul(&s.v), s.diagonal());
        assert_eq!(s.u.mul(&s.u_inv), IntMatrix::identity(a.rows()));
        assert_eq!(s.v.mul(&s.v_inv), IntMatrix::identity(a.cols()));
        assert!(det_u(&s.u).magnitude().is_one());
        for w in s.invariants.windows(2) {
            assert!(w[1].is_multiple_of(&w[0]));
        }
        s
    }

    #[test]
    fn snf_examples() {
        assert_eq!(
            check(&IntMatrix::identity(3)).invariants,
            vec![BigInt::from(1); 3]
        );
        let s = check(&IntMatrix::from_rows(&[[2, 4], [6, 8]]));
        assert_eq!(s.invariants, vec![BigInt::from(2), BigInt::from(4)]);
        assert!(check(&IntMatrix::zeros(2, 3)).invariants.is_empty());
        let s = check(&IntMatrix::from_rows(&[[2, 0, 0], [0, 3, 0], [0, 0, 0]]));
        assert_eq!(s.invariants, vec![BigInt::from(1), BigInt::from(6)]);
    }

    #[test]
    fn cokernels() {
        let g = cokernel(&IntMatrix::from_rows(&[[2, 0], [0, 4]]));
        assert_eq!(
            (g.free_rank, g.torsion.clone()),
            (0, vec![BigInt::from(2), BigInt::from(4)])
        );
        assert_eq!(cokernel(&IntMatrix::zeros(2, 3)), AbelianGroup::free(2));
        assert_eq!(cokernel(&IntMatrix::zeros(0, 3)), AbelianGroup::trivial());
    }

    #[test]
    fn surjectivity_mod_n() {
        let id = IntMatrix::identity(2);
        for n in [0, 2, 4, 7] {
            assert!(is_surjective_mod(&id, n));
        }
        let two = IntMatrix::from_rows(&[[2]]);
        assert!(!is_surjective_mod(&two, 4));
        assert!(is_surjective_mod(&two, 3));
        assert!(!is_surjective_mod(&two, 0));
    }

    #[test]
    fn kernel_and_solver() {
        let a = IntMatrix::from_rows(&[[1, 1, 0], [0, 1, 1]]);
        let k = kernel(&a);
        assert_eq!(k.cols(), 1);
        assert!(a.mul(&k).is_zero());
        let basis = IntMatrix::from_rows(&[[2, 0], [0, 2], [0, 0]]);
        let s = LatticeSolver::new(&basis);
        assert_eq!(
            s.solve(&[BigInt::from(4), BigInt::from(-2), BigInt::zero()]),
            Some(vec![BigInt::from(2), BigInt::from(-1)])
        );
        assert_eq!(
            s.solve(&[BigInt::from(1), BigInt::zero(), BigInt::zero()]),
            None
        );
        assert_eq!(
            s.solve(&[BigInt::zero(), BigInt::zero(), BigInt::from(2)]),
            None
        );
    }

    #[test]
    fn group_display() {
        assert_eq!(alloc::format!("{}", AbelianGroup::trivial()), "0");
        assert_eq!(alloc::format!("{}", AbelianGroup::cyclic(4)), "Z/4");
        let g = AbelianGroup::from_factors(2, [BigInt::from(2), BigInt::from(2), BigInt::from(4)]);
        assert_eq!(alloc::format!("{g}"), "Z^2 + (Z/2)^2 + Z/4");
        assert_eq!(g.exponent(), BigInt::from(4));
        assert_eq!(g.order(), None);
        assert_eq!(AbelianGroup::cyclic(4).order(), Some(BigInt::from(4)));
    }
}
