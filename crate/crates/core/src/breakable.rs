//! Vertex-breakability: whether the classes carried by vertex deletions fail
//! to generate `H_n(K; A)`.
//!
//! A finitely generated `A` splits into `Z` and cyclic prime-power summands,
//! and homology together with the joint deletion map splits along them, so a
//! finite list of coefficients decides breakability over "some" `A`. For a
//! prime `p` only powers up to one past the largest `p`-power in the
//! relevant integral torsion are tried; beyond that the groups and maps
//! involved no longer change shape.

use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};

use crate::chain::{self, ChainTerm};
use crate::coeff::{factorize, Coefficient};
use crate::complex::{SimplicialComplex, Vertex};
use crate::error::{Error, Result};
use crate::field::{self, Field};
use crate::homology::{homology, HomologyResult};
use crate::linalg::{self, smith_normal_form, AbelianGroup, IntMatrix, SmithForm};
use crate::maps::{inclusion_chain, induced_map, product_map};

/// `⊕_v (i_v)_* : ⊕_v H_n(dl(v)) → H_n(K)` against generator bases.
#[derive(Clone, Debug)]
pub struct DeletionMap {
    pub target: HomologyResult,
    /// Deleted vertices, in the order of the column blocks.
    pub vertices: Vec<Vertex>,
    /// Column block widths, one per deleted vertex.
    pub block_sizes: Vec<usize>,
    pub matrix: IntMatrix,
    pub surjective: bool,
    pub cokernel: AbelianGroup,
    image: ImageTest,
}

impl DeletionMap {
    /// Whether the class of the cycle `z` lies in the image.
    pub fn hits(&self, z: &[BigInt]) -> Result<bool> {
        let x = self.target.coordinates(z)?;
        Ok(self.image.contains(&x))
    }

    /// Whether the deletions of `vertices` alone already cover the target.
    pub fn is_surjective_on(&self, vertices: &[Vertex]) -> bool {
        let mut cols = Vec::new();
        let mut start = 0;
        for (v, &w) in self.vertices.iter().zip(&self.block_sizes) {
            if vertices.contains(v) {
                cols.extend(start..start + w);
            }
            start += w;
        }
        let sub = self.matrix.select_columns(&cols);
        let rational = self.target.coefficient == Coefficient::Rationals;
        ImageTest::new(&sub, &self.target.orders, rational)
            .cokernel(sub.rows())
            .is_trivial()
    }

    /// The first target generator outside the image.
    pub fn unhit_generator(&self) -> Option<usize> {
        let rows = self.matrix.rows();
        (0..rows).find(|&i| {
            let mut e = vec![BigInt::zero(); rows];
            e[i] = BigInt::from(1);
            !self.image.contains(&e)
        })
    }
}

/// Membership in the image of a map into a presented group.
#[derive(Clone, Debug)]
enum ImageTest {
    Rational {
        matrix: IntMatrix,
        rank: usize,
    },
    /// Columns are the map together with the relations of the target.
    Integral(SmithForm),
}

impl ImageTest {
    fn new(matrix: &IntMatrix, orders: &[BigInt], rational: bool) -> Self {
        if rational {
            return ImageTest::Rational {
                matrix: matrix.clone(),
                rank: linalg::rank(matrix),
            };
        }
        let rels: Vec<usize> = (0..orders.len())
            .filter(|&i| !orders[i].is_zero())
            .collect();
        let mut diag = IntMatrix::zeros(matrix.rows(), rels.len());
        for (j, &i) in rels.iter().enumerate() {
            diag[(i, j)] = orders[i].clone();
        }
        ImageTest::Integral(smith_normal_form(&matrix.hcat(&diag)))
    }

    fn cokernel(&self, rows: usize) -> AbelianGroup {
        match self {
            ImageTest::Rational { rank, .. } => AbelianGroup::free(rows - rank),
            ImageTest::Integral(s) => {
                AbelianGroup::from_factors(rows - s.rank(), s.invariants.iter().cloned())
            }
        }
    }

    fn contains(&self, x: &[BigInt]) -> bool {
        match self {
            ImageTest::Rational { matrix, rank } => {
                let col = IntMatrix::from_columns(x.len(), &[x.to_vec()]);
                linalg::rank(&matrix.hcat(&col)) == *rank
            }
            ImageTest::Integral(s) => {
                let w = s.u.mul_vec(x);
                w.iter()
                    .enumerate()
                    .all(|(i, wi)| match s.invariants.get(i) {
                        Some(d) => wi.is_multiple_of(d),
                        None => wi.is_zero(),
                    })
            }
        }
    }
}

/// The joint deletion map over all vertices.
pub fn joint_deletion_map(
    k: &SimplicialComplex,
    n: isize,
    coeff: Coefficient,
) -> Result<DeletionMap> {
    deletion_map(k, k.vertices(), n, coeff)
}

/// The joint map restricted to the deletions of `vertices`.
pub fn deletion_map(
    k: &SimplicialComplex,
    vertices: &[Vertex],
    n: isize,
    coeff: Coefficient,
) -> Result<DeletionMap> {
    let target = homology(k, n, coeff)?;
    let mut cols: Vec<Vec<BigInt>> = Vec::new();
    let mut block_sizes = Vec::with_capacity(vertices.len());
    for &v in vertices {
        let dl = k.vertex_deletion(v)?;
        if target.is_trivial() {
            block_sizes.push(0);
            continue;
        }
        let source = homology(&dl, n, coeff)?;
        let f = inclusion_chain(&dl, k, n).to_int();
        for z in &source.cycle_basis {
            cols.push(target.coordinates(&f.mul_vec(z))?);
        }
        block_sizes.push(source.num_generators());
    }
    let matrix = IntMatrix::from_columns(target.num_generators(), &cols);
    let image = ImageTest::new(&matrix, &target.orders, coeff == Coefficient::Rationals);
    let cokernel = image.cokernel(matrix.rows());
    Ok(DeletionMap {
        surjective: cokernel.is_trivial(),
        target,
        vertices: vertices.to_vec(),
        block_sizes,
        matrix,
        cokernel,
        image,
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct BreakabilityResult {
    pub breakable: bool,
    pub witness_coefficient: Option<Coefficient>,
    pub cokernel: AbelianGroup,
    /// Integral lift of a cycle whose class is missed by the joint map.
    pub unhit_cycle: Option<Vec<ChainTerm>>,
}

impl BreakabilityResult {
    fn not_breakable() -> Self {
        BreakabilityResult {
            breakable: false,
            witness_coefficient: None,
            cokernel: AbelianGroup::trivial(),
            unhit_cycle: None,
        }
    }

    /// The unhit cycle reduced into `[0, n)` for `Z/n` coefficients.
    pub fn reduced_unhit_cycle(&self) -> Option<Vec<ChainTerm>> {
        let cycle = self.unhit_cycle.as_ref()?;
        let n = self.witness_coefficient.map_or(0, Coefficient::modulus);
        if n == 0 {
            return Some(cycle.clone());
        }
        let n = BigInt::from(n);
        Some(
            cycle
                .iter()
                .map(|t| ChainTerm {
                    simplex: t.simplex.clone(),
                    coefficient: t.coefficient.mod_floor(&n),
                })
                .filter(|t| !t.coefficient.is_zero())
                .collect(),
        )
    }
}

/// Breakability of `H_n(K; coeff)`.
pub fn vertex_breakable(
    k: &SimplicialComplex,
    n: isize,
    coeff: Coefficient,
) -> Result<BreakabilityResult> {
    let map = joint_deletion_map(k, n, coeff)?;
    if map.surjective {
        return Ok(BreakabilityResult::not_breakable());
    }
    let i = map
        .unhit_generator()
        .expect("a proper image misses a generator");
    let z = &map.target.cycle_basis[i];
    Ok(BreakabilityResult {
        breakable: true,
        witness_coefficient: Some(coeff),
        cokernel: map.cokernel.clone(),
        unhit_cycle: Some(chain::chain_terms(&map.target.basis, z)),
    })
}

/// Re-checks a breakability certificate: `cycle` is a cycle over `coeff`
/// whose class the joint deletion map misses.
pub fn check_unhit_cycle(
    k: &SimplicialComplex,
    n: isize,
    coeff: Coefficient,
    cycle: &[ChainTerm],
) -> Result<bool> {
    let map = joint_deletion_map(k, n, coeff)?;
    let Some(z) = chain::chain_vector(&map.target.basis, cycle) else {
        return Ok(false);
    };
    match map.hits(&z) {
        Ok(hit) => Ok(!hit),
        Err(Error::NotACycle) => Ok(false),
        Err(e) => Err(e),
    }
}

/// Coefficients that together decide breakability over every finitely
/// generated abelian group: `Z`, then `Z/p^r` for each prime `p` in the
/// torsion of `H_n` and `H_{n-1}` of `K` and its deletions, `r = 1..=r_max(p)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoefficientSchedule {
    entries: Vec<Coefficient>,
    caps: Vec<(u64, u32)>,
}

impl CoefficientSchedule {
    pub fn new(k: &SimplicialComplex, n: isize) -> Result<Self> {
        let mut torsion: Vec<BigInt> = Vec::new();
        let mut collect = |c: &SimplicialComplex| -> Result<()> {
            for d in [n, n - 1] {
                torsion.extend(
                    homology(c, d, Coefficient::Integers)?
                        .abelian_group()
                        .torsion,
                );
            }
            Ok(())
        };
        collect(k)?;
        for &v in k.vertices() {
            collect(&k.vertex_deletion(v)?)?;
        }
        // largest exponent of each prime
        let mut exps: Vec<(u64, u32)> = Vec::new();
        for t in torsion {
            let t = t.to_u64().ok_or(Error::Overflow("torsion coefficient"))?;
            for (p, e) in factorize(t) {
                match exps.iter_mut().find(|(q, _)| *q == p) {
                    Some((_, f)) => *f = (*f).max(e),
                    None => exps.push((p, e)),
                }
            }
        }
        exps.sort_unstable();
        let mut entries = vec![Coefficient::Integers];
        let mut caps = Vec::with_capacity(exps.len());
        for (p, e) in exps {
            let r_max = e + 1;
            for r in 1..=r_max {
                entries.push(Coefficient::CyclicRing(prime_power(p, r)?));
            }
            caps.push((p, r_max));
        }
        Ok(CoefficientSchedule { entries, caps })
    }

    pub fn entries(&self) -> &[Coefficient] {
        &self.entries
    }

    /// `(p, r_max(p))` for each prime in the schedule.
    pub fn caps(&self) -> &[(u64, u32)] {
        &self.caps
    }

    /// `Z/p^(r_max(p)+1)` for each prime: the first powers left out.
    pub fn beyond_cap(&self) -> Result<Vec<Coefficient>> {
        self.caps
            .iter()
            .map(|&(p, r)| Ok(Coefficient::CyclicRing(prime_power(p, r + 1)?)))
            .collect()
    }
}

fn prime_power(p: u64, r: u32) -> Result<u64> {
    p.checked_pow(r)
        .ok_or(Error::Overflow("prime power coefficient"))
}

/// Breakability over some finitely generated abelian group; the witness
/// coefficient is the first breakable entry of the schedule.
pub fn vertex_breakable_any(k: &SimplicialComplex, n: isize) -> Result<BreakabilityResult> {
    // H_n(K; A) = 0 for every A once H_n(K; Z) = 0 and H_{n-1}(K; Z) is free
    let top = homology(k, n, Coefficient::Integers)?.abelian_group();
    let below = homology(k, n - 1, Coefficient::Integers)?.abelian_group();
    if top.is_trivial() && below.torsion.is_empty() {
        return Ok(BreakabilityResult::not_breakable());
    }
    let schedule = CoefficientSchedule::new(k, n)?;
    for &c in schedule.entries() {
        let r = vertex_breakable(k, n, c)?;
        if r.breakable {
            return Ok(r);
        }
    }
    if cfg!(debug_assertions) {
        for c in schedule.beyond_cap()? {
            debug_assert!(
                !vertex_breakable(k, n, c)?.breakable,
                "breakable over {c} past the schedule cap"
            );
        }
    }
    Ok(BreakabilityResult::not_breakable())
}

/// Whether `(i_v)_* ⊕ (i_w)_*` misses part of `H_n(K; coeff)`.
pub fn pair_breakable(
    k: &SimplicialComplex,
    v: Vertex,
    w: Vertex,
    n: isize,
    coeff: Coefficient,
) -> Result<bool> {
    Ok(!deletion_map(k, &[v, w], n, coeff)?.surjective)
}

/// For a breakable pair `v, w`: whether `{v, w}` is an edge, and whether
/// `(m_{I,J})_*` vanishes on `H_n` for `I = {v, w}` and `J` the other
/// vertices. The two agree whenever the pair is breakable.
pub fn edge_product_criterion(
    k: &SimplicialComplex,
    v: Vertex,
    w: Vertex,
    n: isize,
    coeff: Coefficient,
) -> Result<(bool, bool)> {
    if !pair_breakable(k, v, w, n, coeff)? {
        return Err(Error::HypothesisNotMet(v, w));
    }
    let rest: Vec<Vertex> = k
        .vertices()
        .iter()
        .copied()
        .filter(|&u| u != v && u != w)
        .collect();
    let m = product_map(k, &[v, w].into(), &rest.into())?;
    let product_trivial = induced_map(&m, n, coeff)?.is_zero();
    let is_edge = k.has_edge(v, w);
    if is_edge != product_trivial {
        return Err(Error::CriterionMismatch(v, w));
    }
    Ok((is_edge, product_trivial))
}

/// Breakability over a field by ranks alone.
pub fn breakable_over_field(k: &SimplicialComplex, n: isize, coeff: Coefficient) -> Result<bool> {
    let f = Field::of(coeff.validate()?)?;
    Ok(breakable_fast(k, n, f))
}

pub(crate) fn breakable_fast(k: &SimplicialComplex, n: isize, f: Field) -> bool {
    let target_in = chain::boundary(k, n + 1, true);
    let h = field::homology_dim(
        chain::rank_in_degree(k, n, true),
        &target_in,
        &chain::boundary(k, n, true),
        f,
    );
    if h == 0 {
        return false;
    }
    let mut parts = Vec::with_capacity(k.num_vertices());
    for &v in k.vertices() {
        let dl = k.vertex_deletion(v).expect("vertex of k");
        parts.push((chain::boundary(&dl, n, true), inclusion_chain(&dl, k, n)));
    }
    let sources: Vec<_> = parts.iter().map(|(d, c)| (d, c)).collect();
    field::induced_rank(&sources, &target_in, f) < h
}

#[cfg(test)]
mod tests {
    use super::*;

    fn bd3() -> SimplicialComplex {
        SimplicialComplex::from_facets(4, [[1, 2, 3], [1, 2, 4], [1, 3, 4], [2, 3, 4]]).unwrap()
    }

    fn wedge() -> SimplicialComplex {
        bd3().wedge(&bd3(), 1, 1).unwrap()
    }

    fn rp2() -> SimplicialComplex {
        SimplicialComplex::from_facets(
            6,
            [
                [1, 3, 5],
                [1, 2, 5],
                [2, 4, 5],
                [2, 3, 4],
                [1, 3, 4],
                [1, 4, 6],
                [3, 5, 6],
                [1, 2, 6],
                [2, 3, 6],
                [4, 5, 6],
            ],
        )
        .unwrap()
    }

    #[test]
    fn sphere_is_breakable_over_z() {
        let r = vertex_breakable(&bd3(), 2, Coefficient::Integers).unwrap();
        assert!(r.breakable);
        assert_eq!(r.cokernel, AbelianGroup::free(1));
        assert!(check_unhit_cycle(
            &bd3(),
            2,
            Coefficient::Integers,
            r.unhit_cycle.as_ref().unwrap()
        )
        .unwrap());
        assert!(breakable_over_field(&bd3(), 2, Coefficient::Rationals).unwrap());
    }

    #[test]
    fn wedge_deletions_cover() {
        let m = joint_deletion_map(&wedge(), 2, Coefficient::Integers).unwrap();
        assert!(m.surjective);
        assert_eq!(m.target.abelian_group(), AbelianGroup::free(2));
        assert!(!vertex_breakable_any(&wedge(), 2).unwrap().breakable);
        assert_eq!(
            CoefficientSchedule::new(&wedge(), 2).unwrap().entries(),
            &[Coefficient::Integers]
        );
    }

    #[test]
    fn projective_plane_breaks_mod_two() {
        let s = CoefficientSchedule::new(&rp2(), 2).unwrap();
        assert_eq!(
            s.entries(),
            &[
                Coefficient::Integers,
                Coefficient::CyclicRing(2),
                Coefficient::CyclicRing(4)
            ]
        );
        let r = vertex_breakable_any(&rp2(), 2).unwrap();
        assert_eq!(r.witness_coefficient, Some(Coefficient::CyclicRing(2)));
        assert!(breakable_over_field(&rp2(), 2, Coefficient::PrimeField(2)).unwrap());
        assert!(!breakable_over_field(&rp2(), 2, Coefficient::PrimeField(3)).unwrap());
    }

    #[test]
    fn pair_and_edge_product() {
        assert!(pair_breakable(&bd3(), 1, 2, 2, Coefficient::Integers).unwrap());
        assert_eq!(
            edge_product_criterion(&bd3(), 1, 2, 2, Coefficient::Integers).unwrap(),
            (true, true)
        );
        let simplex = SimplicialComplex::from_facets(3, [[1, 2, 3]]).unwrap();
        assert!(!pair_breakable(&simplex, 1, 2, 2, Coefficient::Integers).unwrap());
        assert_eq!(
            edge_product_criterion(&simplex, 1, 2, 2, Coefficient::Integers),
            Err(Error::HypothesisNotMet(1, 2))
        );
    }

    #[test]
    fn fast_and_exact_agree_on_small_cases() {
        for k in [bd3(), wedge(), rp2()] {
            for c in [
                Coefficient::Rationals,
                Coefficient::PrimeField(2),
                Coefficient::PrimeField(3),
            ] {
                for n in 0..=2 {
                    assert_eq!(
                        breakable_over_field(&k, n, c).unwrap(),
                        vertex_breakable(&k, n, c).unwrap().breakable,
                        "{c} degree {n}"
                    );
                }
            }
        }
    }
}
