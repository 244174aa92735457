//! Finite abstract simplicial complexes.
//!
//! A complex lives on a sorted ground set of vertex labels. Internally each
//! face is a bitmask over the positions of its labels in that ground set, so
//! the ground set is limited to 128 vertices. Faces are kept per dimension in
//! lexicographic order of their sorted label sequences.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};
use crate::mask::{self, bit, bits, lex_cmp, Mask, MAX_BITS};

pub type Vertex = u32;

/// A face given by its strictly increasing vertex labels. The empty sequence
/// is the empty simplex.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
#[cfg_attr(feature = "serde", serde(transparent))]
pub struct Simplex(Vec<Vertex>);

impl Simplex {
    pub fn new(mut vertices: Vec<Vertex>) -> Self {
        vertices.sort_unstable();
        vertices.dedup();
        Simplex(vertices)
    }

    pub fn empty() -> Self {
        Simplex(Vec::new())
    }

    pub fn vertices(&self) -> &[Vertex] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn dim(&self) -> isize {
        self.0.len() as isize - 1
    }

    pub fn contains(&self, v: Vertex) -> bool {
        self.0.binary_search(&v).is_ok()
    }

    pub fn into_vec(self) -> Vec<Vertex> {
        self.0
    }
}

impl From<&[Vertex]> for Simplex {
    fn from(v: &[Vertex]) -> Self {
        Simplex::new(v.to_vec())
    }
}

impl<const N: usize> From<[Vertex; N]> for Simplex {
    fn from(v: [Vertex; N]) -> Self {
        Simplex::new(v.to_vec())
    }
}

impl From<Vec<Vertex>> for Simplex {
    fn from(v: Vec<Vertex>) -> Self {
        Simplex::new(v)
    }
}

impl fmt::Display for Simplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, v) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{v}")?;
        }
        f.write_str("}")
    }
}

/// A set of vertex labels, kept sorted.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
#[cfg_attr(feature = "serde", serde(transparent))]
pub struct VertexSubset(Vec<Vertex>);

impl VertexSubset {
    pub fn new(mut members: Vec<Vertex>) -> Self {
        members.sort_unstable();
        members.dedup();
        VertexSubset(members)
    }

    pub fn members(&self) -> &[Vertex] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

impl<const N: usize> From<[Vertex; N]> for VertexSubset {
    fn from(v: [Vertex; N]) -> Self {
        VertexSubset::new(v.to_vec())
    }
}

impl From<Vec<Vertex>> for VertexSubset {
    fn from(v: Vec<Vertex>) -> Self {
        VertexSubset::new(v)
    }
}

impl From<&[Vertex]> for VertexSubset {
    fn from(v: &[Vertex]) -> Self {
        VertexSubset::new(v.to_vec())
    }
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SimplicialComplex {
    labels: Vec<Vertex>,
    /// `faces[d + 1]` holds the d-faces; `faces[0] == [0]` is the empty simplex.
    faces: Vec<Vec<Mask>>,
    facets: Vec<Mask>,
    relative: bool,
}

impl fmt::Debug for SimplicialComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("SimplicialComplex")
            .field("vertices", &self.labels)
            .field("facets", &self.facets())
            .field("relative", &self.relative)
            .finish()
    }
}

impl SimplicialComplex {
    /// Complex on `1..=m` with the given facets. Redundant (non-maximal)
    /// facets are dropped.
    pub fn from_facets<I, S>(m: usize, facets: I) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: Into<Simplex>,
    {
        if m > MAX_BITS {
            return Err(Error::TooManyVertices(m));
        }
        let labels = (1..=m as Vertex).collect();
        Self::from_facets_on(labels, facets)
    }

    /// Complex on an arbitrary ground set of labels.
    pub fn from_facets_on<I, S>(mut labels: Vec<Vertex>, facets: I) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: Into<Simplex>,
    {
        labels.sort_unstable();
        labels.dedup();
        if labels.len() > MAX_BITS {
            return Err(Error::TooManyVertices(labels.len()));
        }
        let mut gens = Vec::new();
        for s in facets {
            let s: Simplex = s.into();
            let mut m = 0;
            for &v in s.vertices() {
                let i = labels.binary_search(&v).map_err(|_| Error::OutOfRange(v))?;
                m |= bit(i);
            }
            gens.push(m);
        }
        let covered = gens.iter().fold(0, |acc, g| acc | g);
        if covered != mask::full(labels.len()) {
            let missing = (0..labels.len()).find(|&i| covered & bit(i) == 0).unwrap();
            return Err(Error::GhostVertex(labels[missing]));
        }
        Ok(Self::from_masks(labels, gens, false))
    }

    /// The complex `{∅}` on no vertices.
    pub fn void() -> Self {
        Self::from_masks(Vec::new(), Vec::new(), false)
    }

    /// Builds the downward closure of `gens`. No ghost-vertex check.
    pub(crate) fn from_masks(labels: Vec<Vertex>, gens: Vec<Mask>, relative: bool) -> Self {
        let mut gens = gens;
        gens.sort_unstable();
        gens.dedup();
        let facets = maximal(&gens);
        let top = facets.iter().map(|&f| mask::size(f)).max().unwrap_or(0);
        let mut faces: Vec<Vec<Mask>> = vec![Vec::new(); top + 1];
        for &f in &facets {
            mask::for_each_submask(f, |s| faces[mask::size(s)].push(s));
        }
        for layer in faces.iter_mut() {
            layer.sort_unstable_by(|a, b| lex_cmp(*a, *b));
            layer.dedup();
        }
        let mut facets = facets;
        facets.sort_unstable_by(|a, b| lex_cmp(*a, *b));
        SimplicialComplex {
            labels,
            faces,
            facets,
            relative,
        }
    }

    pub fn vertices(&self) -> &[Vertex] {
        &self.labels
    }

    pub fn num_vertices(&self) -> usize {
        self.labels.len()
    }

    /// `true` for complexes (such as links) whose ground set may contain
    /// vertices that are not faces.
    pub fn is_relative(&self) -> bool {
        self.relative
    }

    pub fn dim(&self) -> isize {
        self.faces.len() as isize - 2
    }

    /// Maximal faces in lexicographic order (the void complex has none).
    pub fn facets(&self) -> Vec<Simplex> {
        self.facets
            .iter()
            .filter(|&&f| f != 0)
            .map(|&f| self.simplex_of(f))
            .collect()
    }

    /// All d-faces in lexicographic order; `d == -1` gives the empty simplex.
    pub fn faces(&self, d: isize) -> Vec<Simplex> {
        self.face_masks(d)
            .iter()
            .map(|&f| self.simplex_of(f))
            .collect()
    }

    pub fn contains(&self, s: &Simplex) -> bool {
        match self.mask_of(s.vertices()) {
            Some(m) => self.contains_mask(m),
            None => false,
        }
    }

    /// `(f_0, f_1, ..., f_dim)`.
    pub fn f_vector(&self) -> Vec<usize> {
        self.faces.iter().skip(1).map(Vec::len).collect()
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.f_vector()
            .iter()
            .enumerate()
            .map(|(d, &f)| if d % 2 == 0 { f as i64 } else { -(f as i64) })
            .sum()
    }

    pub fn skeleton(&self, d: isize) -> Self {
        let mut gens = Vec::new();
        for k in 0..self.faces.len() {
            if k as isize - 1 <= d {
                gens.extend_from_slice(&self.faces[k]);
            }
        }
        Self::from_masks(self.labels.clone(), gens, self.relative)
    }

    /// Faces of `self` contained in `subset`.
    pub fn full_subcomplex(&self, subset: &VertexSubset) -> Result<Self> {
        if subset.is_empty() {
            return Err(Error::EmptySubset);
        }
        let m = self.mask_of(subset.members()).ok_or_else(|| {
            let v = *subset
                .members()
                .iter()
                .find(|v| self.labels.binary_search(v).is_err())
                .unwrap();
            Error::OutOfRange(v)
        })?;
        Ok(self.full_subcomplex_mask(m))
    }

    /// `dl(v)`: the full subcomplex on all vertices but `v`.
    pub fn vertex_deletion(&self, v: Vertex) -> Result<Self> {
        let i = self.index_of(v).ok_or(Error::OutOfRange(v))?;
        Ok(self.full_subcomplex_mask(mask::full(self.labels.len()) & !bit(i)))
    }

    /// `lk(u) = {σ : u ∉ σ, σ ∪ u ∈ K}` on the ground set minus `u`,
    /// flagged relative.
    pub fn link(&self, u: Vertex) -> Result<Self> {
        let i = self.index_of(u).ok_or(Error::OutOfRange(u))?;
        let ground = mask::full(self.labels.len()) & !bit(i);
        let gens: Vec<Mask> = self
            .facets
            .iter()
            .filter(|&&f| f & bit(i) != 0)
            .map(|&f| mask::compress(f & !bit(i), ground))
            .collect();
        let labels = bits(ground).map(|k| self.labels[k]).collect();
        Ok(Self::from_masks(labels, gens, true))
    }

    /// Join with `other`, whose vertices are relabeled to follow the largest
    /// label of `self`.
    pub fn join(&self, other: &Self) -> Self {
        let offset = self.labels.last().copied().unwrap_or(0);
        let shifted = other.relabel(|v| offset + 1 + other.index_of(v).unwrap() as Vertex);
        self.join_disjoint(&shifted)
            .expect("relabeled ground sets are disjoint")
    }

    /// Join of complexes on disjoint ground sets, keeping all labels.
    pub fn join_disjoint(&self, other: &Self) -> Result<Self> {
        if let Some(&v) = self
            .labels
            .iter()
            .find(|v| other.labels.binary_search(v).is_ok())
        {
            return Err(Error::NotDisjoint(v));
        }
        let mut labels = self.labels.clone();
        labels.extend_from_slice(&other.labels);
        labels.sort_unstable();
        if labels.len() > MAX_BITS {
            return Err(Error::TooManyVertices(labels.len()));
        }
        let lift_a = self.lift_into(&labels);
        let lift_b = other.lift_into(&labels);
        let mut gens = Vec::with_capacity(self.facets.len() * other.facets.len().max(1));
        for &a in &self.facets {
            for &b in &other.facets {
                gens.push(lift_a(a) | lift_b(b));
            }
        }
        Ok(Self::from_masks(
            labels,
            gens,
            self.relative || other.relative,
        ))
    }

    /// Applies an injective relabeling of the vertices.
    pub fn relabel(&self, f: impl Fn(Vertex) -> Vertex) -> Self {
        let new: Vec<Vertex> = self.labels.iter().map(|&v| f(v)).collect();
        let mut sorted = new.clone();
        sorted.sort_unstable();
        sorted.dedup();
        assert_eq!(sorted.len(), new.len(), "relabeling must be injective");
        let pos: Vec<usize> = new
            .iter()
            .map(|v| sorted.binary_search(v).unwrap())
            .collect();
        let gens = self
            .facets
            .iter()
            .map(|&m| bits(m).fold(0, |acc, i| acc | bit(pos[i])))
            .collect();
        Self::from_masks(sorted, gens, self.relative)
    }

    /// Minimal non-faces in lexicographic order.
    pub fn minimal_nonfaces(&self) -> Vec<Simplex> {
        let n = self.labels.len();
        let mut out: Vec<Mask> = Vec::new();
        for layer in &self.faces {
            for &t in layer {
                let start = if t == 0 {
                    0
                } else {
                    128 - t.leading_zeros() as usize
                };
                for v in start..n {
                    let s = t | bit(v);
                    if self.contains_mask(s) {
                        continue;
                    }
                    if bits(s).all(|i| self.contains_mask(s & !bit(i))) {
                        out.push(s);
                    }
                }
            }
        }
        out.sort_unstable_by(|a, b| lex_cmp(*a, *b));
        out.into_iter().map(|m| self.simplex_of(m)).collect()
    }

    /// Every `k + 1` vertices span a face.
    pub fn is_k_neighborly(&self, k: usize) -> bool {
        let n = self.labels.len();
        if k + 1 > n {
            return true;
        }
        self.face_masks(k as isize).len() == binomial(n, k + 1)
    }

    pub fn edges(&self) -> Vec<(Vertex, Vertex)> {
        self.face_masks(1)
            .iter()
            .map(|&e| {
                let mut it = bits(e);
                (
                    self.labels[it.next().unwrap()],
                    self.labels[it.next().unwrap()],
                )
            })
            .collect()
    }

    pub fn has_edge(&self, v: Vertex, w: Vertex) -> bool {
        match (self.index_of(v), self.index_of(w)) {
            (Some(a), Some(b)) if a != b => self.contains_mask(bit(a) | bit(b)),
            _ => false,
        }
    }

    /// One-point union: `v` of `self` is identified with `w` of `other`;
    /// the remaining vertices of `other` are appended after `self`'s labels.
    pub fn wedge(&self, other: &Self, v: Vertex, w: Vertex) -> Result<Self> {
        self.index_of(v).ok_or(Error::OutOfRange(v))?;
        other.index_of(w).ok_or(Error::OutOfRange(w))?;
        let offset = self.labels.last().copied().unwrap_or(0);
        let mut next = offset;
        let mut map = Vec::with_capacity(other.labels.len());
        for &u in &other.labels {
            if u == w {
                map.push(v);
            } else {
                next += 1;
                map.push(next);
            }
        }
        let mut labels = self.labels.clone();
        labels.extend(map.iter().copied().filter(|&u| u != v));
        labels.sort_unstable();
        if labels.len() > MAX_BITS {
            return Err(Error::TooManyVertices(labels.len()));
        }
        let lift_a = self.lift_into(&labels);
        let pos: Vec<usize> = map
            .iter()
            .map(|u| labels.binary_search(u).unwrap())
            .collect();
        let mut gens: Vec<Mask> = self.facets.iter().map(|&f| lift_a(f)).collect();
        gens.extend(
            other
                .facets
                .iter()
                .map(|&f| bits(f).fold(0, |acc, i| acc | bit(pos[i]))),
        );
        Ok(Self::from_masks(
            labels,
            gens,
            self.relative || other.relative,
        ))
    }

    // ---- crate-internal mask interface ----

    pub(crate) fn index_of(&self, v: Vertex) -> Option<usize> {
        self.labels.binary_search(&v).ok()
    }

    pub(crate) fn mask_of(&self, vs: &[Vertex]) -> Option<Mask> {
        let mut m = 0;
        for v in vs {
            m |= bit(self.index_of(*v)?);
        }
        Some(m)
    }

    pub(crate) fn simplex_of(&self, m: Mask) -> Simplex {
        Simplex(bits(m).map(|i| self.labels[i]).collect())
    }

    pub(crate) fn face_masks(&self, d: isize) -> &[Mask] {
        if d < -1 {
            return &[];
        }
        self.faces
            .get((d + 1) as usize)
            .map(Vec::as_slice)
            .unwrap_or(&[])
    }

    pub(crate) fn contains_mask(&self, m: Mask) -> bool {
        match self.faces.get(mask::size(m)) {
            Some(layer) => layer.binary_search_by(|x| lex_cmp(*x, m)).is_ok(),
            None => false,
        }
    }

    /// Position of face `m` in its dimension's basis.
    pub(crate) fn face_index(&self, m: Mask) -> Option<usize> {
        self.faces
            .get(mask::size(m))?
            .binary_search_by(|x| lex_cmp(*x, m))
            .ok()
    }

    /// Full subcomplex on the local vertices in `m`; an empty mask gives the
    /// void complex.
    pub(crate) fn full_subcomplex_mask(&self, m: Mask) -> Self {
        let mut gens: Vec<Mask> = self
            .facets
            .iter()
            .map(|&f| mask::compress(f & m, m))
            .collect();
        gens.sort_unstable();
        gens.dedup();
        let labels = bits(m).map(|i| self.labels[i]).collect();
        Self::from_masks(labels, gens, self.relative)
    }

    /// Bit adjacency of the 1-skeleton.
    pub(crate) fn adjacency(&self) -> Vec<Mask> {
        let mut adj = vec![0; self.labels.len()];
        for &e in self.face_masks(1) {
            let mut it = bits(e);
            let (a, b) = (it.next().unwrap(), it.next().unwrap());
            adj[a] |= bit(b);
            adj[b] |= bit(a);
        }
        adj
    }

    /// Maps local masks of `self` into local masks over `labels` (a superset).
    fn lift_into(&self, labels: &[Vertex]) -> impl Fn(Mask) -> Mask {
        let pos: Vec<usize> = self
            .labels
            .iter()
            .map(|v| labels.binary_search(v).unwrap())
            .collect();
        move |m| bits(m).fold(0, |acc, i| acc | bit(pos[i]))
    }
}

fn maximal(gens: &[Mask]) -> Vec<Mask> {
    let mut by_size: Vec<Mask> = gens.to_vec();
    by_size.sort_unstable_by_key(|&g| core::cmp::Reverse(mask::size(g)));
    let mut out: Vec<Mask> = Vec::new();
    for g in by_size {
        if !out.iter().any(|&f| f & g == g) {
            out.push(g);
        }
    }
    if out.is_empty() {
        out.push(0);
    }
    out
}

pub(crate) fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut r: u128 = 1;
    for i in 0..k {
        r = r * (n - i) as u128 / (i + 1) as u128;
    }
    r as usize
}

#[cfg(test)]
mod tests {
    use super::*;

    fn bd3() -> SimplicialComplex {
        SimplicialComplex::from_facets(4, [[1, 2, 3], [1, 2, 4], [1, 3, 4], [2, 3, 4]]).unwrap()
    }

    fn c4() -> SimplicialComplex {
        SimplicialComplex::from_facets(4, [[1, 2], [2, 3], [3, 4], [1, 4]]).unwrap()
    }

    fn s(v: &[Vertex]) -> Simplex {
        Simplex::from(v)
    }

    #[test]
    fn build_drops_redundant_facets() {
        let k = SimplicialComplex::from_facets(3, [s(&[1, 2]), s(&[1, 2, 3])]).unwrap();
        assert_eq!(k.facets(), vec![s(&[1, 2, 3])]);
        assert_eq!(bd3().facets().len(), 4);
    }

    #[test]
    fn build_rejects_ghosts_and_out_of_range() {
        let e = SimplicialComplex::from_facets(5, [[1, 2, 3], [1, 2, 4], [1, 3, 4], [2, 3, 4]]);
        assert_eq!(e.unwrap_err(), Error::GhostVertex(5));
        let e = SimplicialComplex::from_facets(3, [[1, 2, 7]]);
        assert_eq!(e.unwrap_err(), Error::OutOfRange(7));
    }

    #[test]
    fn faces_in_lex_order() {
        assert_eq!(
            bd3().faces(2),
            vec![s(&[1, 2, 3]), s(&[1, 2, 4]), s(&[1, 3, 4]), s(&[2, 3, 4])]
        );
        assert_eq!(bd3().faces(-1), vec![Simplex::empty()]);
        assert_eq!(
            c4().faces(1),
            vec![s(&[1, 2]), s(&[1, 4]), s(&[2, 3]), s(&[3, 4])]
        );
        assert!(c4().faces(5).is_empty());
    }

    #[test]
    fn full_subcomplexes_and_deletion() {
        let k = bd3()
            .full_subcomplex(&VertexSubset::from([1, 2, 3]))
            .unwrap();
        assert_eq!(k.facets(), vec![s(&[1, 2, 3])]);
        let two = c4().full_subcomplex(&VertexSubset::from([1, 3])).unwrap();
        assert_eq!(two.facets(), vec![s(&[1]), s(&[3])]);
        assert_eq!(
            c4().full_subcomplex(&VertexSubset::new(vec![]))
                .unwrap_err(),
            Error::EmptySubset
        );
        assert_eq!(
            bd3().vertex_deletion(4).unwrap().facets(),
            vec![s(&[1, 2, 3])]
        );
        let path = c4().vertex_deletion(1).unwrap();
        assert_eq!(path.vertices(), &[2, 3, 4]);
        assert_eq!(path.facets(), vec![s(&[2, 3]), s(&[3, 4])]);
        assert_eq!(c4().vertex_deletion(9).unwrap_err(), Error::OutOfRange(9));
    }

    #[test]
    fn links() {
        let l = bd3().link(4).unwrap();
        assert!(l.is_relative());
        assert_eq!(l.facets(), vec![s(&[1, 2]), s(&[1, 3]), s(&[2, 3])]);
        let l = c4().link(1).unwrap();
        assert_eq!(l.facets(), vec![s(&[2]), s(&[4])]);
        assert_eq!(l.vertices(), &[2, 3, 4]);
        let tri = SimplicialComplex::from_facets(3, [[1, 2, 3]]).unwrap();
        assert_eq!(tri.link(1).unwrap().facets(), vec![s(&[2, 3])]);
    }

    #[test]
    fn joins() {
        let pt = SimplicialComplex::from_facets(1, [[1]]).unwrap();
        assert_eq!(pt.join(&pt).facets(), vec![s(&[1, 2])]);
        let s0 = SimplicialComplex::from_facets(2, [[1], [2]]).unwrap();
        let j = s0.join(&s0);
        assert_eq!(
            j.facets(),
            vec![s(&[1, 3]), s(&[1, 4]), s(&[2, 3]), s(&[2, 4])]
        );
        assert_eq!(j.f_vector(), vec![4, 4]);
        assert!(s0.join_disjoint(&s0).is_err());
        assert_eq!(SimplicialComplex::void().join(&s0).facets(), s0.facets());
    }

    #[test]
    fn minimal_nonfaces() {
        assert_eq!(bd3().minimal_nonfaces(), vec![s(&[1, 2, 3, 4])]);
        assert_eq!(c4().minimal_nonfaces(), vec![s(&[1, 3]), s(&[2, 4])]);
    }

    #[test]
    fn neighborliness_and_counts() {
        assert!(bd3().is_k_neighborly(1));
        assert!(bd3().is_k_neighborly(2));
        assert!(!bd3().is_k_neighborly(3));
        assert!(!c4().is_k_neighborly(1));
        assert_eq!(bd3().f_vector(), vec![4, 6, 4]);
        assert_eq!(bd3().euler_characteristic(), 2);
        assert_eq!(c4().euler_characteristic(), 0);
        assert_eq!(bd3().skeleton(1).f_vector(), vec![4, 6]);
    }

    #[test]
    fn wedge_identifies_one_vertex() {
        let w = bd3().wedge(&bd3(), 1, 1).unwrap();
        assert_eq!(w.num_vertices(), 7);
        assert_eq!(w.f_vector(), vec![7, 12, 8]);
        assert!(!w.is_k_neighborly(1));
    }

    #[test]
    fn void_complex() {
        let v = SimplicialComplex::void();
        assert_eq!(v.dim(), -1);
        assert_eq!(v.faces(-1), vec![Simplex::empty()]);
        assert!(v.facets().is_empty());
        let pt = SimplicialComplex::from_facets(1, [[1]]).unwrap();
        assert_eq!(pt.dim(), 0);
    }
}
