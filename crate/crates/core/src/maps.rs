//! Simplicial maps, their chain maps, and the maps they induce on
//! (co)homology against the stored generator bases.

use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;

use crate::chain::{self, Sparse};
use crate::coeff::Coefficient;
use crate::complex::{SimplicialComplex, Vertex, VertexSubset};
use crate::error::{Error, Result};
use crate::homology::{cohomology, homology, HomologyResult};
use crate::linalg::IntMatrix;
use crate::mask::{bit, bits, size};

#[derive(Clone, Debug, PartialEq, Eq)]
enum Kind {
    /// Target position of each source vertex.
    Vertex(Vec<usize>),
    /// Constant map to a base point; zero on reduced (co)homology.
    Collapse,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimplicialMap {
    source: SimplicialComplex,
    target: SimplicialComplex,
    kind: Kind,
}

impl SimplicialMap {
    /// The vertex map `f`; every face must land on a face of `target`.
    pub fn new(
        source: SimplicialComplex,
        target: SimplicialComplex,
        f: impl Fn(Vertex) -> Vertex,
    ) -> Result<Self> {
        let mut pos = Vec::with_capacity(source.num_vertices());
        for &v in source.vertices() {
            let w = f(v);
            pos.push(target.index_of(w).ok_or(Error::OutOfRange(w))?);
        }
        for d in 0..=source.dim() {
            for &face in source.face_masks(d) {
                let img = bits(face).fold(0, |acc, i| acc | bit(pos[i]));
                if !target.contains_mask(img) {
                    return Err(Error::NotSimplicial(source.simplex_of(face)));
                }
            }
        }
        Ok(SimplicialMap {
            source,
            target,
            kind: Kind::Vertex(pos),
        })
    }

    /// Inclusion of a subcomplex on the same labels.
    pub fn inclusion(sub: &SimplicialComplex, sup: &SimplicialComplex) -> Result<Self> {
        Self::new(sub.clone(), sup.clone(), |v| v)
    }

    pub fn identity(k: &SimplicialComplex) -> Self {
        let pos = (0..k.num_vertices()).collect();
        SimplicialMap {
            source: k.clone(),
            target: k.clone(),
            kind: Kind::Vertex(pos),
        }
    }

    pub fn collapse(source: SimplicialComplex, target: SimplicialComplex) -> Self {
        SimplicialMap {
            source,
            target,
            kind: Kind::Collapse,
        }
    }

    pub fn source(&self) -> &SimplicialComplex {
        &self.source
    }

    pub fn target(&self) -> &SimplicialComplex {
        &self.target
    }

    pub fn is_collapse(&self) -> bool {
        self.kind == Kind::Collapse
    }

    pub fn image_of(&self, v: Vertex) -> Option<Vertex> {
        match &self.kind {
            Kind::Vertex(pos) => Some(self.target.vertices()[pos[self.source.index_of(v)?]]),
            Kind::Collapse => None,
        }
    }

    /// `then ∘ self`.
    pub fn then(&self, then: &SimplicialMap) -> Result<SimplicialMap> {
        if self.target != then.source {
            return Err(Error::NotSimplicial(crate::complex::Simplex::empty()));
        }
        let kind = match (&self.kind, &then.kind) {
            (Kind::Vertex(a), Kind::Vertex(b)) => Kind::Vertex(a.iter().map(|&i| b[i]).collect()),
            _ => Kind::Collapse,
        };
        Ok(SimplicialMap {
            source: self.source.clone(),
            target: then.target.clone(),
            kind,
        })
    }

    /// Chain map in degree `d` of the reduced complexes; degenerate images
    /// go to zero and orientation follows the sorting permutation.
    pub(crate) fn chain_map(&self, d: isize) -> Sparse {
        let rows = chain::rank_in_degree(&self.target, d, true);
        let cols = chain::rank_in_degree(&self.source, d, true);
        let mut out = Sparse::zeros(rows, cols);
        let Kind::Vertex(pos) = &self.kind else {
            return out;
        };
        for (j, &face) in self.source.face_masks(d).iter().enumerate() {
            let imgs: Vec<usize> = bits(face).map(|i| pos[i]).collect();
            let img = imgs.iter().fold(0, |acc, &i| acc | bit(i));
            if size(img) != imgs.len() {
                continue;
            }
            let mut inversions = 0;
            for a in 0..imgs.len() {
                for b in a + 1..imgs.len() {
                    if imgs[a] > imgs[b] {
                        inversions += 1;
                    }
                }
            }
            let row = self.target.face_index(img).expect("map is simplicial");
            out.entries
                .push((row, j, if inversions % 2 == 0 { 1 } else { -1 }));
        }
        out
    }
}

/// Chain map in degree `d` of the inclusion of a complex whose faces are
/// all faces of `sup`; no validation.
pub(crate) fn inclusion_chain(
    sub: &SimplicialComplex,
    sup: &SimplicialComplex,
    d: isize,
) -> Sparse {
    let pos: Vec<usize> = sub
        .vertices()
        .iter()
        .map(|&v| sup.index_of(v).expect("vertex of sup"))
        .collect();
    let faces = sub.face_masks(d);
    let mut out = Sparse::zeros(chain::rank_in_degree(sup, d, true), faces.len());
    for (j, &f) in faces.iter().enumerate() {
        let img = bits(f).fold(0, |acc, i| acc | bit(pos[i]));
        out.entries
            .push((sup.face_index(img).expect("face of sup"), j, 1));
    }
    out
}

/// `m_{I,J} : K_{I∪J} → K_I * K_J`, `σ ↦ σ_I ⊔ σ_J`; the collapse when
/// `I ∩ J ≠ ∅`.
pub fn product_map(
    k: &SimplicialComplex,
    i: &VertexSubset,
    j: &VertexSubset,
) -> Result<SimplicialMap> {
    if i.is_empty() || j.is_empty() {
        return Err(Error::EmptySubset);
    }
    let ki = k.full_subcomplex(i)?;
    let kj = k.full_subcomplex(j)?;
    let mut union = i.members().to_vec();
    union.extend_from_slice(j.members());
    let source = k.full_subcomplex(&VertexSubset::new(union))?;
    match ki.join_disjoint(&kj) {
        Ok(target) => SimplicialMap::new(source, target, |v| v),
        Err(Error::NotDisjoint(_)) => Ok(SimplicialMap::collapse(source, ki.join(&kj))),
        Err(e) => Err(e),
    }
}

/// A map on (co)homology as a matrix against the generator bases: column `j`
/// holds the coordinates of the image of source generator `j`, reduced
/// modulo the orders of the target summands.
#[derive(Clone, Debug)]
pub struct InducedMap {
    pub source: HomologyResult,
    pub target: HomologyResult,
    pub matrix: IntMatrix,
}

impl InducedMap {
    pub fn is_zero(&self) -> bool {
        self.matrix.is_zero()
    }

    /// `self ∘ first` as a matrix, reduced modulo `self.target`'s orders.
    pub fn compose_after(&self, first: &InducedMap) -> IntMatrix {
        reduce_rows(self.matrix.mul(&first.matrix), &self.target.orders)
    }

    pub fn is_identity(&self) -> bool {
        self.matrix == reduce_rows(IntMatrix::identity(self.matrix.rows()), &self.target.orders)
            && self.matrix.rows() == self.matrix.cols()
    }
}

fn reduce_rows(mut m: IntMatrix, orders: &[BigInt]) -> IntMatrix {
    for (i, o) in orders.iter().enumerate() {
        if o.is_zero() {
            continue;
        }
        for j in 0..m.cols() {
            let x = m[(i, j)].mod_floor(o);
            m[(i, j)] = x;
        }
    }
    m
}

/// `f_* : H̃_n(source) → H̃_n(target)`.
pub fn induced_map(f: &SimplicialMap, n: isize, coeff: Coefficient) -> Result<InducedMap> {
    let source = homology(&f.source, n, coeff)?;
    let target = homology(&f.target, n, coeff)?;
    let chain = f.chain_map(n).to_int();
    let mut matrix = IntMatrix::zeros(target.num_generators(), source.num_generators());
    for (j, z) in source.cycle_basis.iter().enumerate() {
        let coords = target.coordinates(&chain.mul_vec(z))?;
        for (i, c) in coords.into_iter().enumerate() {
            matrix[(i, j)] = c;
        }
    }
    Ok(InducedMap {
        source,
        target,
        matrix,
    })
}

/// `f^* : H̃^n(target) → H̃^n(source)`.
pub fn induced_cohomology_map(
    f: &SimplicialMap,
    n: isize,
    coeff: Coefficient,
) -> Result<InducedMap> {
    let source = cohomology(&f.target, n, coeff)?;
    let target = cohomology(&f.source, n, coeff)?;
    let dual = f.chain_map(n).transpose().to_int();
    let mut matrix = IntMatrix::zeros(target.num_generators(), source.num_generators());
    for (j, z) in source.cycle_basis.iter().enumerate() {
        let coords = target.coordinates(&dual.mul_vec(z))?;
        for (i, c) in coords.into_iter().enumerate() {
            matrix[(i, j)] = c;
        }
    }
    Ok(InducedMap {
        source,
        target,
        matrix,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn bd3() -> SimplicialComplex {
        SimplicialComplex::from_facets(4, [[1, 2, 3], [1, 2, 4], [1, 3, 4], [2, 3, 4]]).unwrap()
    }

    fn c4() -> SimplicialComplex {
        SimplicialComplex::from_facets(4, [[1, 2], [2, 3], [3, 4], [1, 4]]).unwrap()
    }

    #[test]
    fn identity_induces_identity() {
        for c in [
            Coefficient::Integers,
            Coefficient::CyclicRing(4),
            Coefficient::Rationals,
        ] {
            let m = induced_map(&SimplicialMap::identity(&bd3()), 2, c).unwrap();
            assert!(m.is_identity());
        }
    }

    #[test]
    fn deletion_inclusion_is_zero() {
        let dl = bd3().vertex_deletion(4).unwrap();
        let m = induced_map(
            &SimplicialMap::inclusion(&dl, &bd3()).unwrap(),
            2,
            Coefficient::Integers,
        )
        .unwrap();
        assert_eq!((m.matrix.rows(), m.matrix.cols()), (1, 0));
        assert!(m.is_zero());
    }

    #[test]
    fn non_simplicial_rejected() {
        let s0 = SimplicialComplex::from_facets(2, [[1], [2]]).unwrap();
        let e = SimplicialComplex::from_facets(2, [[1, 2]]).unwrap();
        assert!(SimplicialMap::new(s0.clone(), e.clone(), |v| v).is_ok());
        assert!(matches!(
            SimplicialMap::new(e, s0, |v| v),
            Err(Error::NotSimplicial(_))
        ));
    }

    #[test]
    fn c4_product_map_is_an_isomorphism() {
        let m = product_map(&c4(), &[1, 3].into(), &[2, 4].into()).unwrap();
        assert_eq!(m.source().facets(), m.target().facets());
        let h = induced_map(&m, 1, Coefficient::Rationals).unwrap();
        assert_eq!((h.matrix.rows(), h.matrix.cols()), (1, 1));
        assert!(h.matrix[(0, 0)] == BigInt::from(1) || h.matrix[(0, 0)] == BigInt::from(-1));
        let hc = induced_cohomology_map(&m, 1, Coefficient::Rationals).unwrap();
        assert!(!hc.is_zero());
    }

    #[test]
    fn overlapping_subsets_collapse() {
        let m = product_map(&c4(), &[1, 2].into(), &[2, 3].into()).unwrap();
        assert!(m.is_collapse());
        for n in 0..=1 {
            assert!(induced_map(&m, n, Coefficient::Integers).unwrap().is_zero());
        }
        assert_eq!(
            product_map(&c4(), &vec![].into(), &[1].into()).unwrap_err(),
            Error::EmptySubset
        );
    }

    #[test]
    fn cone_targets_are_acyclic() {
        let m = product_map(&bd3(), &[1].into(), &[2, 3, 4].into()).unwrap();
        for n in -1..=3 {
            assert!(induced_map(&m, n, Coefficient::Integers).unwrap().is_zero());
        }
    }

    #[test]
    fn orientation_reversal_is_minus_one() {
        let c = c4();
        let flip = SimplicialMap::new(c.clone(), c.clone(), |v| match v {
            2 => 4,
            4 => 2,
            v => v,
        })
        .unwrap();
        let m = induced_map(&flip, 1, Coefficient::Integers).unwrap();
        assert_eq!(m.matrix[(0, 0)], BigInt::from(-1));
    }
}
