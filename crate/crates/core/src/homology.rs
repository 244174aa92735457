//! (Co)homology over `Z`, `Q`, `F_p` and `Z/n`.
//!
//! For `Z/n` the cycle lattice is `L = {x ∈ Z^b : d_out x ∈ n Z^c}`, found as the
//! kernel of `[d_out | n I]`, and the boundary lattice is `im d_in + n Z^b`.
//! The homology group is `L / B`, presented by the Smith form of `B` written
//! in a basis of `L`. Rational homology is the free part of the integral one.

use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::chain;
use crate::coeff::Coefficient;
use crate::complex::{Simplex, SimplicialComplex};
use crate::error::{Error, Result};
use crate::linalg::{self, AbelianGroup, IntMatrix, LatticeSolver};

/// Homology at a spot `A --d_in--> B --d_out--> C` with `Z/n` coefficients
/// (`n == 0` for `Z`).
#[derive(Clone, Debug)]
pub(crate) struct Presentation {
    modulus: u64,
    solver: Option<LatticeSolver>,
    /// Row operations taking lattice coordinates to generator coordinates.
    u: IntMatrix,
    /// Indices into `u`'s rows of the nontrivial summands.
    coords: Vec<usize>,
    /// Order of each summand; zero for `Z`.
    orders: Vec<BigInt>,
    generators: Vec<Vec<BigInt>>,
    group: AbelianGroup,
}

impl Presentation {
    pub fn new(b: usize, d_in: &IntMatrix, d_out: &IntMatrix, modulus: u64) -> Self {
        debug_assert_eq!(d_in.rows(), b);
        debug_assert_eq!(d_out.cols(), b);
        let n = BigInt::from(modulus);
        let cycles = if d_out.rows() == 0 {
            IntMatrix::identity(b)
        } else if modulus == 0 {
            linalg::kernel(d_out)
        } else {
            let aug = d_out.hcat(&IntMatrix::scalar(d_out.rows(), &n));
            let k = linalg::kernel(&aug);
            k.select_rows(&(0..b).collect::<Vec<_>>())
        };
        let k = cycles.cols();
        if k == 0 {
            return Presentation {
                modulus,
                solver: None,
                u: IntMatrix::zeros(0, 0),
                coords: Vec::new(),
                orders: Vec::new(),
                generators: Vec::new(),
                group: AbelianGroup::trivial(),
            };
        }
        let solver = LatticeSolver::new(&cycles);
        let mut rel_cols: Vec<Vec<BigInt>> = Vec::new();
        for j in 0..d_in.cols() {
            let c = d_in.column(j);
            if c.iter().all(Zero::is_zero) {
                continue;
            }
            rel_cols.push(solver.solve(&c).expect("boundaries are cycles"));
        }
        if modulus != 0 {
            for i in 0..b {
                let mut e = alloc::vec![BigInt::zero(); b];
                e[i] = n.clone();
                rel_cols.push(solver.solve(&e).expect("n Z^b lies in the cycle lattice"));
            }
        }
        let rel = IntMatrix::from_columns(k, &rel_cols);
        let s = linalg::smith_normal_form(&rel);
        let r = s.rank();
        let mut coords = Vec::new();
        let mut orders = Vec::new();
        for (i, d) in s.invariants.iter().enumerate() {
            if !d.is_one() {
                coords.push(i);
                orders.push(d.clone());
            }
        }
        for i in r..k {
            coords.push(i);
            orders.push(BigInt::zero());
        }
        let generators = coords
            .iter()
            .map(|&i| cycles.mul_vec(&s.u_inv.column(i)))
            .collect();
        let group = AbelianGroup::from_factors(k - r, s.invariants.iter().cloned());
        Presentation {
            modulus,
            solver: Some(solver),
            u: s.u,
            coords,
            orders,
            generators,
            group,
        }
    }

    pub fn group(&self) -> &AbelianGroup {
        &self.group
    }

    pub fn orders(&self) -> &[BigInt] {
        &self.orders
    }

    pub fn generators(&self) -> &[Vec<BigInt>] {
        &self.generators
    }

    /// Coordinates of the class of the cycle `z`, each reduced modulo its
    /// summand's order.
    pub fn coordinates(&self, z: &[BigInt]) -> Result<Vec<BigInt>> {
        let Some(solver) = &self.solver else {
            if self.modulus == 0 && z.iter().any(|x| !x.is_zero()) {
                return Err(Error::NotACycle);
            }
            if self.modulus != 0 {
                // every element of n Z^b is a cycle, but a nonzero residue is not
                let n = BigInt::from(self.modulus);
                if z.iter().any(|x| !x.is_multiple_of(&n)) {
                    return Err(Error::NotACycle);
                }
            }
            return Ok(Vec::new());
        };
        let y = solver.solve(z).ok_or(Error::NotACycle)?;
        let w = self.u.mul_vec(&y);
        Ok(self
            .coords
            .iter()
            .zip(&self.orders)
            .map(|(&i, o)| {
                if o.is_zero() {
                    w[i].clone()
                } else {
                    w[i].mod_floor(o)
                }
            })
            .collect())
    }
}

/// The group (or vector space) found in one degree.
#[derive(Clone, Debug, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub enum HomologyGroup {
    Group(AbelianGroup),
    VectorSpace { dim: usize },
}

impl core::fmt::Display for HomologyGroup {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        match self {
            HomologyGroup::Group(g) => write!(f, "{g}"),
            HomologyGroup::VectorSpace { dim } => write!(f, "dim {dim}"),
        }
    }
}

#[derive(Clone, Debug)]
pub struct HomologyResult {
    pub coefficient: Coefficient,
    pub degree: isize,
    pub cohomology: bool,
    pub group: HomologyGroup,
    /// Faces indexing the entries of every chain below.
    pub basis: Vec<Simplex>,
    /// One integer (co)cycle per summand of `group`.
    pub cycle_basis: Vec<Vec<BigInt>>,
    /// Order of each summand (zero for free summands and for `Q`).
    pub orders: Vec<BigInt>,
    pres: Presentation,
    /// Which of `pres`'s summands are kept (all but torsion for `Q`).
    keep: Vec<usize>,
}

impl HomologyResult {
    pub fn dimension(&self) -> Option<usize> {
        match self.group {
            HomologyGroup::VectorSpace { dim } => Some(dim),
            HomologyGroup::Group(_) => None,
        }
    }

    pub fn is_trivial(&self) -> bool {
        self.cycle_basis.is_empty()
    }

    pub fn num_generators(&self) -> usize {
        self.cycle_basis.len()
    }

    /// The abelian group underlying the result (`Q^d` is reported as `Z^d`).
    pub fn abelian_group(&self) -> AbelianGroup {
        match &self.group {
            HomologyGroup::Group(g) => g.clone(),
            HomologyGroup::VectorSpace { dim } => match self.coefficient.modulus() {
                0 => AbelianGroup::free(*dim),
                p => AbelianGroup::from_factors(0, (0..*dim).map(|_| BigInt::from(p))),
            },
        }
    }

    /// Representatives reduced into `[0, n)` for `Z/n` coefficients.
    pub fn reduced_cycle_basis(&self) -> Vec<Vec<BigInt>> {
        let n = self.coefficient.modulus();
        if n == 0 {
            return self.cycle_basis.clone();
        }
        let n = BigInt::from(n);
        self.cycle_basis
            .iter()
            .map(|c| c.iter().map(|x| x.mod_floor(&n)).collect())
            .collect()
    }

    /// Coordinates of the class of `z` against `cycle_basis`.
    pub fn coordinates(&self, z: &[BigInt]) -> Result<Vec<BigInt>> {
        if z.len() != self.basis.len() {
            return Err(Error::ChainLength {
                expected: self.basis.len(),
                got: z.len(),
            });
        }
        let all = self.pres.coordinates(z)?;
        Ok(self.keep.iter().map(|&i| all[i].clone()).collect())
    }

    pub(crate) fn from_presentation(
        coefficient: Coefficient,
        degree: isize,
        cohomology: bool,
        basis: Vec<Simplex>,
        pres: Presentation,
    ) -> Self {
        let keep: Vec<usize> = match coefficient {
            Coefficient::Rationals => (0..pres.orders().len())
                .filter(|&i| pres.orders()[i].is_zero())
                .collect(),
            _ => (0..pres.orders().len()).collect(),
        };
        let cycle_basis = keep.iter().map(|&i| pres.generators()[i].clone()).collect();
        let orders = keep.iter().map(|&i| pres.orders()[i].clone()).collect();
        let group = match coefficient {
            Coefficient::Integers => HomologyGroup::Group(pres.group().clone()),
            Coefficient::CyclicRing(_) => HomologyGroup::Group(pres.group().clone()),
            _ => HomologyGroup::VectorSpace { dim: keep.len() },
        };
        HomologyResult {
            coefficient,
            degree,
            cohomology,
            group,
            basis,
            cycle_basis,
            orders,
            pres,
            keep,
        }
    }
}

pub(crate) fn homology_presentation(
    k: &SimplicialComplex,
    n: isize,
    modulus: u64,
    reduced: bool,
) -> Presentation {
    let b = chain::rank_in_degree(k, n, reduced);
    let d_in = chain::boundary(k, n + 1, reduced).to_int();
    let d_out = chain::boundary(k, n, reduced).to_int();
    Presentation::new(b, &d_in, &d_out, modulus)
}

fn cohomology_presentation(
    k: &SimplicialComplex,
    n: isize,
    modulus: u64,
    reduced: bool,
) -> Presentation {
    let b = chain::rank_in_degree(k, n, reduced);
    let d_in = chain::boundary(k, n, reduced).transpose().to_int();
    let d_out = chain::boundary(k, n + 1, reduced).transpose().to_int();
    Presentation::new(b, &d_in, &d_out, modulus)
}

/// Reduced homology `H̃_n(K; coeff)`.
pub fn homology(k: &SimplicialComplex, n: isize, coeff: Coefficient) -> Result<HomologyResult> {
    homology_with(k, n, coeff, true)
}

pub fn homology_with(
    k: &SimplicialComplex,
    n: isize,
    coeff: Coefficient,
    reduced: bool,
) -> Result<HomologyResult> {
    let coeff = coeff.validate()?;
    let pres = homology_presentation(k, n, coeff.modulus(), reduced);
    let basis = if n == -1 && !reduced {
        Vec::new()
    } else {
        k.faces(n)
    };
    Ok(HomologyResult::from_presentation(
        coeff, n, false, basis, pres,
    ))
}

/// Reduced cohomology `H̃^n(K; coeff)`, from the transposed boundaries.
pub fn cohomology(k: &SimplicialComplex, n: isize, coeff: Coefficient) -> Result<HomologyResult> {
    cohomology_with(k, n, coeff, true)
}

pub fn cohomology_with(
    k: &SimplicialComplex,
    n: isize,
    coeff: Coefficient,
    reduced: bool,
) -> Result<HomologyResult> {
    let coeff = coeff.validate()?;
    let pres = cohomology_presentation(k, n, coeff.modulus(), reduced);
    let basis = if n == -1 && !reduced {
        Vec::new()
    } else {
        k.faces(n)
    };
    Ok(HomologyResult::from_presentation(
        coeff, n, true, basis, pres,
    ))
}

/// Dimension of `H̃_n(K; k)` over a field by ranks alone.
pub fn betti_number(k: &SimplicialComplex, n: isize, field: Coefficient) -> Result<usize> {
    let f = crate::field::Field::of(field.validate()?)?;
    Ok(crate::field::homology_dim(
        chain::rank_in_degree(k, n, true),
        &chain::boundary(k, n + 1, true),
        &chain::boundary(k, n, true),
        f,
    ))
}
