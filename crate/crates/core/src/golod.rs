//! Golodness of two-dimensional complexes.
//!
//! A complex of dimension at most two is Golod over every ring exactly when
//! its 1-skeleton is chordal and every full subcomplex with vertex-breakable
//! second homology (over some finitely generated abelian group) is
//! 1-neighborly. Over a field the same holds with breakability over that
//! field. Independently, over a field and in dimension at most three,
//! Golodness is the vanishing of every product map `m_{I₁,I₂}^*`, which
//! [`product_scan`] checks directly.

use alloc::vec;
use alloc::vec::Vec;

use crate::betti::SubsetBetti;
use crate::breakable::{
    breakable_fast, check_unhit_cycle, deletion_map, edge_product_criterion, vertex_breakable,
    vertex_breakable_any, BreakabilityResult,
};
use crate::chain;
use crate::chordal::Chordality;
use crate::coeff::Coefficient;
use crate::complex::{SimplicialComplex, Vertex, VertexSubset};
use crate::error::{Error, Result};
use crate::exec::{Executor, Sequential};
use crate::field::{self, Field};
use crate::maps::{inclusion_chain, induced_cohomology_map, induced_map, product_map};
use crate::mask::{bit, bits, size, Mask};

/// Largest vertex count for which all subsets are scanned.
pub const MAX_SCAN_VERTICES: usize = 24;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub enum Verdict {
    Golod,
    NotGolod,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
#[cfg_attr(feature = "serde", serde(rename_all = "snake_case"))]
pub enum Scope {
    /// Every ring, through breakability over every finitely generated group.
    Integral,
    /// One field, through breakability over that field.
    Field(Coefficient),
    /// Obstructions over `Z/n` found by the edge criterion; a positive
    /// verdict means no obstruction was found.
    Ring(u64),
    /// Products `m_{I₁,I₂}^*` over one field.
    Products(Coefficient),
}

#[derive(Clone, Debug, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
#[cfg_attr(feature = "serde", serde(tag = "kind", rename_all = "snake_case"))]
pub enum Witness {
    NonChordalCycle {
        cycle: Vec<Vertex>,
    },
    BreakableNotNeighborly {
        subset: Vec<Vertex>,
        missing_pair: (Vertex, Vertex),
        degree: isize,
        breakability: BreakabilityResult,
    },
    NonvanishingProduct(ProductWitness),
}

/// A product map `m_{I₁,I₂}` that is nonzero in one degree.
#[derive(Clone, Debug, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct ProductWitness {
    pub first: Vec<Vertex>,
    pub second: Vec<Vertex>,
    pub degree: isize,
    pub coefficient: Coefficient,
    /// `m^*` on cohomology when set, `m_*` on homology otherwise.
    pub cohomology: bool,
    /// Rank of the map, for field coefficients.
    pub rank: Option<usize>,
    /// Degrees `(i, j)`, `i + j = degree - 1`, with both `H̃^i(K_{I₁})` and
    /// `H̃^j(K_{I₂})` nonzero.
    pub pairing: Vec<(isize, isize)>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct GolodReport {
    pub verdict: Verdict,
    pub scope: Scope,
    pub witness: Option<Witness>,
}

impl GolodReport {
    pub fn is_golod(&self) -> bool {
        self.verdict == Verdict::Golod
    }

    fn golod(scope: Scope) -> Self {
        GolodReport {
            verdict: Verdict::Golod,
            scope,
            witness: None,
        }
    }

    fn not_golod(scope: Scope, witness: Witness) -> Self {
        GolodReport {
            verdict: Verdict::NotGolod,
            scope,
            witness: Some(witness),
        }
    }
}

fn require_dim(k: &SimplicialComplex, max: isize) -> Result<()> {
    if k.dim() > max {
        return Err(Error::DimensionTooHigh { dim: k.dim(), max });
    }
    Ok(())
}

/// Non-empty subsets of `0..m` in lexicographic order of their sorted
/// elements.
pub(crate) fn lex_subsets(m: usize) -> Result<Vec<Mask>> {
    if m > MAX_SCAN_VERTICES {
        return Err(Error::Overflow("too many vertices for a subset scan"));
    }
    let mut all = lex_submasks(crate::mask::full(m));
    all.remove(0);
    Ok(all)
}

/// Subsets of `within` in lexicographic order, the empty one first.
fn lex_submasks(within: Mask) -> Vec<Mask> {
    fn go(prefix: Mask, rest: &[usize], out: &mut Vec<Mask>) {
        for (k, &i) in rest.iter().enumerate() {
            let s = prefix | bit(i);
            out.push(s);
            go(s, &rest[k + 1..], out);
        }
    }
    let idx: Vec<usize> = bits(within).collect();
    let mut out = Vec::with_capacity(1 << idx.len());
    out.push(0);
    go(0, &idx, &mut out);
    out
}

/// The lexicographically smallest pair of vertices that is not an edge.
fn smallest_missing_pair(k: &SimplicialComplex) -> Option<(Vertex, Vertex)> {
    let vs = k.vertices();
    for (a, &v) in vs.iter().enumerate() {
        for &w in &vs[a + 1..] {
            if !k.has_edge(v, w) {
                return Some((v, w));
            }
        }
    }
    None
}

fn hole(k: &SimplicialComplex) -> Option<Witness> {
    match k.chordality() {
        Chordality::Chordal => None,
        Chordality::Hole(cycle) => Some(Witness::NonChordalCycle { cycle }),
    }
}

/// Full subcomplexes that can violate "breakable ⇒ 1-neighborly": at least
/// four vertices, some 2-face, some missing edge.
fn candidate(k: &SimplicialComplex, s: Mask) -> Option<SimplicialComplex> {
    if size(s) < 4 {
        return None;
    }
    let ki = k.full_subcomplex_mask(s);
    if ki.face_masks(2).is_empty() || ki.is_k_neighborly(1) {
        return None;
    }
    Some(ki)
}

fn breakable_scan<E: Executor>(
    k: &SimplicialComplex,
    exec: &E,
    scope: Scope,
    test: impl Fn(&SimplicialComplex) -> Result<Option<BreakabilityResult>> + Sync + Send,
) -> Result<GolodReport> {
    require_dim(k, 2)?;
    if let Some(w) = hole(k) {
        return Ok(GolodReport::not_golod(scope, w));
    }
    let subsets = lex_subsets(k.num_vertices())?;
    let found = exec.find_first(subsets.len(), |i| {
        let ki = candidate(k, subsets[i])?;
        match test(&ki) {
            Ok(Some(r)) => Some(Ok((ki, r))),
            Ok(None) => None,
            Err(e) => Some(Err(e)),
        }
    });
    match found {
        None => Ok(GolodReport::golod(scope)),
        Some((_, Err(e))) => Err(e),
        Some((_, Ok((ki, breakability)))) => {
            let missing_pair = smallest_missing_pair(&ki).expect("candidate is not 1-neighborly");
            Ok(GolodReport::not_golod(
                scope,
                Witness::BreakableNotNeighborly {
                    subset: ki.vertices().to_vec(),
                    missing_pair,
                    degree: 2,
                    breakability,
                },
            ))
        }
    }
}

/// Golodness over every ring for `dim K ≤ 2`.
pub fn check_golod_integral_2dim(k: &SimplicialComplex) -> Result<GolodReport> {
    check_golod_integral_2dim_with(k, &Sequential)
}

pub fn check_golod_integral_2dim_with<E: Executor>(
    k: &SimplicialComplex,
    exec: &E,
) -> Result<GolodReport> {
    breakable_scan(k, exec, Scope::Integral, |ki| {
        let r = vertex_breakable_any(ki, 2)?;
        Ok(r.breakable.then_some(r))
    })
}

/// Golodness over the field `field` for `dim K ≤ 2`.
pub fn check_golod_field(k: &SimplicialComplex, field: Coefficient) -> Result<GolodReport> {
    check_golod_field_with(k, field, &Sequential)
}

pub fn check_golod_field_with<E: Executor>(
    k: &SimplicialComplex,
    field: Coefficient,
    exec: &E,
) -> Result<GolodReport> {
    let field = field.validate()?;
    let f = Field::of(field)?;
    breakable_scan(k, exec, Scope::Field(field), |ki| {
        if !breakable_fast(ki, 2, f) {
            return Ok(None);
        }
        // the certificate comes from the exact route
        let r = vertex_breakable(ki, 2, field)?;
        debug_assert!(r.breakable);
        Ok(Some(r))
    })
}

/// Golodness over a field by the vanishing of all `m_{I₁,I₂}^*`, for
/// `dim K ≤ 3`.
pub fn product_scan(k: &SimplicialComplex, field: Coefficient) -> Result<GolodReport> {
    product_scan_with(k, field, &Sequential)
}

pub fn product_scan_with<E: Executor>(
    k: &SimplicialComplex,
    field: Coefficient,
    exec: &E,
) -> Result<GolodReport> {
    require_dim(k, 3)?;
    let field = field.validate()?;
    let f = Field::of(field)?;
    let scope = Scope::Products(field);
    let subsets = lex_subsets(k.num_vertices())?;
    let betti = SubsetBetti::new(k, f);
    let found = exec.find_first(subsets.len(), |idx| {
        let s = subsets[idx];
        if size(s) < 2 {
            return None;
        }
        let low = s & s.wrapping_neg();
        let top = (1..=betti.max_dim)
            .filter(|&n| betti.get(s, n) > 0)
            .collect::<Vec<_>>();
        if top.is_empty() {
            return None;
        }
        let ki = k.full_subcomplex_mask(s);
        for rest in lex_submasks(s & !low) {
            let (s1, s2) = (low | rest, s & !(low | rest));
            if s2 == 0 {
                continue;
            }
            for &n in &top {
                if betti.join_dim(s1, s2, n) == 0 {
                    continue;
                }
                let k1 = k.full_subcomplex_mask(s1);
                let k2 = k.full_subcomplex_mask(s2);
                let join = k1.join_disjoint(&k2).expect("disjoint subsets");
                let d = chain::boundary(&ki, n, true);
                let c = inclusion_chain(&ki, &join, n);
                let rank =
                    field::induced_rank(&[(&d, &c)], &chain::boundary(&join, n + 1, true), f);
                if rank > 0 {
                    return Some(ProductWitness {
                        first: k1.vertices().to_vec(),
                        second: k2.vertices().to_vec(),
                        degree: n,
                        coefficient: field,
                        cohomology: true,
                        rank: Some(rank),
                        pairing: betti.pairing(s1, s2, n),
                    });
                }
            }
        }
        None
    });
    Ok(match found {
        None => GolodReport::golod(scope),
        Some((_, w)) => GolodReport::not_golod(scope, Witness::NonvanishingProduct(w)),
    })
}

/// Searches for obstructions to Golodness over `Z/n`: a non-chordal
/// 1-skeleton, or a full subcomplex with a non-edge `{v, w}` whose two
/// deletions miss part of `H_2`, in which case `(m_{{v,w},J})_*` is nonzero.
pub fn check_golod_ring(k: &SimplicialComplex, n: u64) -> Result<GolodReport> {
    check_golod_ring_with(k, n, &Sequential)
}

pub fn check_golod_ring_with<E: Executor>(
    k: &SimplicialComplex,
    n: u64,
    exec: &E,
) -> Result<GolodReport> {
    let coeff = Coefficient::cyclic(n)?;
    let scope = Scope::Ring(n);
    if let Some(w) = hole(k) {
        return Ok(GolodReport::not_golod(scope, w));
    }
    let subsets = lex_subsets(k.num_vertices())?;
    let found = exec.find_first(subsets.len(), |i| {
        let ki = candidate(k, subsets[i])?;
        match breakable_pair(&ki, coeff) {
            Ok(None) => None,
            Ok(Some((v, w))) => {
                Some(edge_product_criterion(&ki, v, w, 2, coeff).map(|_| (ki, v, w)))
            }
            Err(e) => Some(Err(e)),
        }
    });
    match found {
        None => Ok(GolodReport::golod(scope)),
        Some((_, Err(e))) => Err(e),
        Some((_, Ok((ki, v, w)))) => {
            let second = ki
                .vertices()
                .iter()
                .copied()
                .filter(|&u| u != v && u != w)
                .collect();
            Ok(GolodReport::not_golod(
                scope,
                Witness::NonvanishingProduct(ProductWitness {
                    first: vec![v, w],
                    second,
                    degree: 2,
                    coefficient: coeff,
                    cohomology: false,
                    rank: None,
                    pairing: vec![(0, 1)],
                }),
            ))
        }
    }
}

/// The lexicographically smallest non-edge `{v, w}` with
/// `(i_v)_* ⊕ (i_w)_*` not onto `H_2(K; coeff)`.
fn breakable_pair(k: &SimplicialComplex, coeff: Coefficient) -> Result<Option<(Vertex, Vertex)>> {
    let map = deletion_map(k, k.vertices(), 2, coeff)?;
    if map.target.is_trivial() {
        return Ok(None);
    }
    let vs = k.vertices();
    for (a, &v) in vs.iter().enumerate() {
        for &w in &vs[a + 1..] {
            if !k.has_edge(v, w) && !map.is_surjective_on(&[v, w]) {
                return Ok(Some((v, w)));
            }
        }
    }
    Ok(None)
}

/// Re-checks a witness against `k` with the exact (lattice) routines.
pub fn verify_witness(k: &SimplicialComplex, witness: &Witness) -> Result<bool> {
    match witness {
        Witness::NonChordalCycle { cycle } => Ok(k.is_induced_cycle(cycle)),
        Witness::BreakableNotNeighborly {
            subset,
            missing_pair: (v, w),
            degree,
            breakability,
        } => {
            let ki = k.full_subcomplex(&VertexSubset::new(subset.clone()))?;
            if v == w || !subset.contains(v) || !subset.contains(w) || ki.has_edge(*v, *w) {
                return Ok(false);
            }
            let Some(coeff) = breakability.witness_coefficient else {
                return Ok(false);
            };
            if !vertex_breakable(&ki, *degree, coeff)?.breakable {
                return Ok(false);
            }
            match &breakability.unhit_cycle {
                Some(cycle) => check_unhit_cycle(&ki, *degree, coeff, cycle),
                None => Ok(true),
            }
        }
        Witness::NonvanishingProduct(p) => {
            if p.first.is_empty()
                || p.second.is_empty()
                || p.first.iter().any(|v| p.second.contains(v))
            {
                return Ok(false);
            }
            let m = product_map(k, &p.first.as_slice().into(), &p.second.as_slice().into())?;
            let map = if p.cohomology {
                induced_cohomology_map(&m, p.degree, p.coefficient)?
            } else {
                induced_map(&m, p.degree, p.coefficient)?
            };
            Ok(!map.is_zero())
        }
    }
}
