//! Named complexes with their expected invariants.
//!
//! Every expectation is recomputed by [`NamedComplex::mismatches`]; the test
//! suite requires the list to be empty for every fixture.

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;

use crate::coeff::Coefficient;
use crate::complex::{SimplicialComplex, Vertex};
use crate::error::Result;
use crate::golod::{check_golod_field, check_golod_integral_2dim, Scope};
use crate::homology::homology;
use crate::mask::{bit, bits};

/// `∂Δ^n` on `1..=n+1`.
pub fn boundary_simplex(n: usize) -> Result<SimplicialComplex> {
    let m = n + 1;
    let facets =
        (1..=m as Vertex).map(|skip| (1..=m as Vertex).filter(|&v| v != skip).collect::<Vec<_>>());
    SimplicialComplex::from_facets(m, facets)
}

/// The full simplex `Δ^n` on `1..=n+1`.
pub fn simplex(n: usize) -> Result<SimplicialComplex> {
    let m = n + 1;
    SimplicialComplex::from_facets(m, [(1..=m as Vertex).collect::<Vec<_>>()])
}

/// The cycle graph `C_m`, `m ≥ 3`.
pub fn cycle(m: usize) -> Result<SimplicialComplex> {
    let facets = (1..=m as Vertex).map(|i| vec![i, i % m as Vertex + 1]);
    SimplicialComplex::from_facets(m, facets)
}

/// `K ∨ L` with `v ∈ K` identified with `w ∈ L`.
pub fn wedge(
    k: &SimplicialComplex,
    l: &SimplicialComplex,
    v: Vertex,
    w: Vertex,
) -> Result<SimplicialComplex> {
    k.wedge(l, v, w)
}

const K1_FACETS: [[Vertex; 3]; 9] = [
    [1, 3, 5],
    [1, 2, 5],
    [2, 4, 5],
    [2, 3, 4],
    [1, 3, 4],
    [1, 4, 6],
    [3, 5, 6],
    [1, 2, 6],
    [2, 3, 6],
];

/// The Möbius band on `A..F = 1..6`: an antipodally identified hexagon with
/// the triangle `DEF` left open.
pub fn k1_moebius() -> SimplicialComplex {
    SimplicialComplex::from_facets(6, K1_FACETS).expect("valid facets")
}

/// The 6-vertex real projective plane on `P, Q, R, d, e, f = 1..6`: the
/// Möbius band with `DEF` filled in.
pub fn k2_rp2() -> SimplicialComplex {
    let mut facets: Vec<[Vertex; 3]> = K1_FACETS.to_vec();
    facets.push([4, 5, 6]);
    SimplicialComplex::from_facets(6, facets).expect("valid facets")
}

/// The Moore complex on `A..F = 1..6`, `d, e, f = 7..9`: [`k1_moebius`]
/// and [`k2_rp2`] glued along `DEF = PQR`.
pub fn moore_m() -> SimplicialComplex {
    let k2 = k2_rp2().relabel(|v| v + 3);
    let mut facets = k1_moebius().facets();
    facets.extend(k2.facets());
    SimplicialComplex::from_facets(9, facets).expect("valid facets")
}

/// Vertex names of [`moore_m`].
pub const MOORE_NAMES: [&str; 9] = ["A", "B", "C", "D", "E", "F", "d", "e", "f"];

/// The 9-vertex torus from the 3×3 grid with diagonals; `(i, j) ↦ 3i + j + 1`.
pub fn torus_9() -> SimplicialComplex {
    let v = |i: u32, j: u32| 3 * (i % 3) + (j % 3) + 1;
    let mut facets = Vec::new();
    for i in 0..3 {
        for j in 0..3 {
            facets.push(vec![v(i, j), v(i + 1, j), v(i + 1, j + 1)]);
            facets.push(vec![v(i, j), v(i, j + 1), v(i + 1, j + 1)]);
        }
    }
    SimplicialComplex::from_facets(9, facets).expect("valid facets")
}

/// The 7-vertex torus with facets `{i, i+1, i+3}` and `{i, i+2, i+3}` mod 7.
pub fn torus_7() -> SimplicialComplex {
    let v = |i: u32| i % 7 + 1;
    let facets = (0..7).flat_map(|i| {
        [
            vec![v(i), v(i + 1), v(i + 3)],
            vec![v(i), v(i + 2), v(i + 3)],
        ]
    });
    SimplicialComplex::from_facets(7, facets).expect("valid facets")
}

/// Whether `k` is a closed surface: pure of dimension two, every edge in
/// exactly two facets, every vertex link a single cycle.
pub fn is_closed_surface(k: &SimplicialComplex) -> bool {
    if k.dim() != 2 || k.facets().iter().any(|f| f.len() != 3) {
        return false;
    }
    let tris = k.face_masks(2);
    if k.face_masks(1)
        .iter()
        .any(|&e| tris.iter().filter(|&&t| t & e == e).count() != 2)
    {
        return false;
    }
    k.vertices().iter().all(|&v| {
        let link = k.link(v).expect("vertex of k");
        if link.facets().iter().any(|f| f.len() != 2) {
            return false;
        }
        // a connected 2-regular graph is a single cycle
        let edges = link.face_masks(1);
        let used = edges.iter().fold(0, |acc, &e| acc | e);
        let regular = bits(used).all(|i| edges.iter().filter(|&&e| e & bit(i) != 0).count() == 2);
        let mut reached = used & used.wrapping_neg();
        loop {
            let next = edges
                .iter()
                .filter(|&&e| e & reached != 0)
                .fold(reached, |acc, &e| acc | e);
            if next == reached {
                break;
            }
            reached = next;
        }
        regular && reached == used
    })
}

/// Where an expected value comes from.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Origin {
    /// Stated for this complex in the literature.
    Published,
    /// Worked out independently of this crate (by hand or an outside tool).
    Computed,
    /// Immediate from the definition.
    Immediate,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Claim {
    /// `H̃_degree(K; coefficient)` displays as `group`.
    Homology {
        degree: isize,
        coefficient: Coefficient,
        group: String,
    },
    FVector(Vec<usize>),
    Euler(i64),
    Chordal(bool),
    OneNeighborly(bool),
    ClosedSurface(bool),
    Golod {
        scope: Scope,
        golod: bool,
    },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Expectation {
    pub claim: Claim,
    pub origin: Origin,
}

#[derive(Clone, Debug)]
pub struct NamedComplex {
    pub name: &'static str,
    pub description: &'static str,
    pub complex: SimplicialComplex,
    /// Display names of the vertices, when they are not just numbers.
    pub vertex_names: Option<Vec<(Vertex, &'static str)>>,
    pub expected: Vec<Expectation>,
}

impl NamedComplex {
    /// Recomputes every expectation; returns a description of each failure.
    pub fn mismatches(&self) -> Result<Vec<String>> {
        let k = &self.complex;
        let mut out = Vec::new();
        for e in &self.expected {
            let (ok, got) = match &e.claim {
                Claim::Homology {
                    degree,
                    coefficient,
                    group,
                } => {
                    let got = homology(k, *degree, *coefficient)?.group.to_string();
                    (got == *group, got)
                }
                Claim::FVector(f) => (k.f_vector() == *f, format!("{:?}", k.f_vector())),
                Claim::Euler(x) => (
                    k.euler_characteristic() == *x,
                    format!("{}", k.euler_characteristic()),
                ),
                Claim::Chordal(b) => (k.is_chordal() == *b, format!("{}", k.is_chordal())),
                Claim::OneNeighborly(b) => (
                    k.is_k_neighborly(1) == *b,
                    format!("{}", k.is_k_neighborly(1)),
                ),
                Claim::ClosedSurface(b) => (
                    is_closed_surface(k) == *b,
                    format!("{}", is_closed_surface(k)),
                ),
                Claim::Golod { scope, golod } => {
                    let r = match scope {
                        Scope::Integral => check_golod_integral_2dim(k)?,
                        Scope::Field(c) => check_golod_field(k, *c)?,
                        Scope::Ring(n) => crate::golod::check_golod_ring(k, *n)?,
                        Scope::Products(c) => crate::golod::product_scan(k, *c)?,
                    };
                    (r.is_golod() == *golod, format!("{:?}", r.verdict))
                }
            };
            if !ok {
                out.push(format!(
                    "{}: {:?} does not hold (found {got})",
                    self.name, e.claim
                ));
            }
        }
        Ok(out)
    }

    pub fn vertex_name(&self, v: Vertex) -> Option<&'static str> {
        self.vertex_names
            .as_ref()?
            .iter()
            .find(|(u, _)| *u == v)
            .map(|(_, n)| *n)
    }
}

fn hom(degree: isize, coefficient: Coefficient, group: &str, origin: Origin) -> Expectation {
    Expectation {
        claim: Claim::Homology {
            degree,
            coefficient,
            group: group.to_string(),
        },
        origin,
    }
}

fn exp(claim: Claim, origin: Origin) -> Expectation {
    Expectation { claim, origin }
}

fn golod(scope: Scope, golod: bool, origin: Origin) -> Expectation {
    Expectation {
        claim: Claim::Golod { scope, golod },
        origin,
    }
}

fn named(vs: &[&'static str]) -> Option<Vec<(Vertex, &'static str)>> {
    Some(
        vs.iter()
            .enumerate()
            .map(|(i, n)| (i as Vertex + 1, *n))
            .collect(),
    )
}

const Z: Coefficient = Coefficient::Integers;
const Q: Coefficient = Coefficient::Rationals;
const F2: Coefficient = Coefficient::PrimeField(2);
const F3: Coefficient = Coefficient::PrimeField(3);

/// Names accepted by [`by_name`], in listing order.
pub const NAMES: [&str; 12] = [
    "point",
    "two_points",
    "path3",
    "c4",
    "simplex2",
    "bd_simplex3",
    "wedge2bd3",
    "k1_moebius",
    "k2_rp2",
    "moore_M",
    "torus_7",
    "torus_9",
];

/// `rp2_6` is accepted as another name for `k2_rp2`.
pub fn by_name(name: &str) -> Option<NamedComplex> {
    use Origin::*;
    let nc = |name, description, complex, vertex_names, expected| NamedComplex {
        name,
        description,
        complex,
        vertex_names,
        expected,
    };
    Some(match name {
        "point" => nc(
            "point",
            "a single vertex",
            SimplicialComplex::from_facets(1, [[1]]).ok()?,
            None,
            vec![
                hom(0, Z, "0", Immediate),
                hom(-1, Z, "0", Immediate),
                golod(Scope::Integral, true, Immediate),
            ],
        ),
        "two_points" => nc(
            "two_points",
            "two isolated vertices",
            SimplicialComplex::from_facets(2, [[1], [2]]).ok()?,
            None,
            vec![
                hom(0, Z, "Z", Immediate),
                exp(Claim::Chordal(true), Immediate),
                golod(Scope::Integral, true, Immediate),
                golod(Scope::Products(Q), true, Immediate),
            ],
        ),
        "path3" => nc(
            "path3",
            "the path 1-2-3",
            SimplicialComplex::from_facets(3, [[1, 2], [2, 3]]).ok()?,
            None,
            vec![
                hom(0, Z, "0", Immediate),
                exp(Claim::Chordal(true), Immediate),
                golod(Scope::Products(Q), true, Computed),
                golod(Scope::Products(F2), true, Computed),
            ],
        ),
        "c4" => nc(
            "c4",
            "the 4-cycle 1-2-3-4",
            cycle(4).ok()?,
            None,
            vec![
                hom(1, Z, "Z", Immediate),
                exp(Claim::Chordal(false), Immediate),
                golod(Scope::Integral, false, Computed),
                golod(Scope::Field(Q), false, Computed),
                golod(Scope::Products(Q), false, Computed),
            ],
        ),
        "simplex2" => nc(
            "simplex2",
            "the full 2-simplex",
            simplex(2).ok()?,
            None,
            vec![
                hom(2, Z, "0", Immediate),
                hom(1, Z, "0", Immediate),
                golod(Scope::Integral, true, Immediate),
            ],
        ),
        "bd_simplex3" => nc(
            "bd_simplex3",
            "boundary of the 3-simplex (a 2-sphere)",
            boundary_simplex(3).ok()?,
            None,
            vec![
                hom(2, Z, "Z", Immediate),
                hom(2, Q, "dim 1", Immediate),
                exp(Claim::FVector(vec![4, 6, 4]), Immediate),
                exp(Claim::OneNeighborly(true), Immediate),
                exp(Claim::ClosedSurface(true), Immediate),
                golod(Scope::Integral, true, Published),
            ],
        ),
        "wedge2bd3" => nc(
            "wedge2bd3",
            "two boundaries of the 3-simplex sharing vertex 1",
            wedge(&boundary_simplex(3).ok()?, &boundary_simplex(3).ok()?, 1, 1).ok()?,
            None,
            vec![
                hom(2, Z, "Z^2", Computed),
                exp(Claim::FVector(vec![7, 12, 8]), Computed),
                exp(Claim::OneNeighborly(false), Immediate),
                golod(Scope::Integral, true, Published),
            ],
        ),
        "k1_moebius" => nc(
            "k1_moebius",
            "a 6-vertex Moebius band",
            k1_moebius(),
            named(&["A", "B", "C", "D", "E", "F"]),
            vec![
                hom(1, Z, "Z", Published),
                hom(2, Z, "0", Computed),
                exp(Claim::FVector(vec![6, 15, 9]), Computed),
                exp(Claim::Euler(0), Computed),
            ],
        ),
        "k2_rp2" | "rp2_6" => nc(
            "k2_rp2",
            "the 6-vertex real projective plane",
            k2_rp2(),
            named(&["P", "Q", "R", "d", "e", "f"]),
            vec![
                hom(1, Z, "Z/2", Published),
                hom(2, Z, "0", Published),
                hom(2, F2, "dim 1", Computed),
                hom(2, Q, "dim 0", Computed),
                exp(Claim::FVector(vec![6, 15, 10]), Computed),
                exp(Claim::Euler(1), Computed),
                exp(Claim::OneNeighborly(true), Computed),
                exp(Claim::ClosedSurface(true), Computed),
                golod(Scope::Integral, true, Published),
            ],
        ),
        "moore_M" => nc(
            "moore_M",
            "a 9-vertex Moore space with H_1 = Z/4",
            moore_m(),
            named(&MOORE_NAMES),
            vec![
                hom(1, Z, "Z/4", Published),
                hom(2, Z, "0", Published),
                hom(2, Coefficient::CyclicRing(4), "Z/4", Published),
                exp(Claim::FVector(vec![9, 27, 19]), Computed),
                exp(Claim::OneNeighborly(false), Published),
                exp(Claim::Chordal(true), Computed),
                golod(Scope::Integral, false, Published),
                golod(Scope::Field(F2), true, Published),
                golod(Scope::Field(F3), true, Published),
                golod(Scope::Field(Q), true, Published),
                golod(Scope::Ring(4), false, Published),
            ],
        ),
        "torus_7" => nc(
            "torus_7",
            "the 7-vertex torus",
            torus_7(),
            None,
            vec![
                hom(1, Z, "Z^2", Computed),
                hom(2, Z, "Z", Computed),
                exp(Claim::FVector(vec![7, 21, 14]), Computed),
                exp(Claim::OneNeighborly(true), Computed),
                exp(Claim::ClosedSurface(true), Computed),
                golod(Scope::Integral, true, Computed),
            ],
        ),
        "torus_9" => nc(
            "torus_9",
            "the 9-vertex torus from a 3x3 grid",
            torus_9(),
            None,
            vec![
                hom(1, Z, "Z^2", Computed),
                hom(2, Z, "Z", Computed),
                exp(Claim::FVector(vec![9, 27, 18]), Computed),
                exp(Claim::OneNeighborly(false), Computed),
                exp(Claim::ClosedSurface(true), Computed),
                golod(Scope::Integral, false, Computed),
            ],
        ),
        _ => return None,
    })
}

/// Every fixture, in listing order.
pub fn all() -> Vec<NamedComplex> {
    NAMES
        .iter()
        .map(|n| by_name(n).expect("listed name"))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn constructors() {
        assert_eq!(boundary_simplex(3).unwrap().f_vector(), vec![4, 6, 4]);
        assert_eq!(cycle(4).unwrap().f_vector(), vec![4, 4]);
        assert_eq!(simplex(2).unwrap().facets().len(), 1);
        assert_eq!(moore_m().facets().len(), 19);
        assert!(by_name("rp2_6").is_some());
        assert!(by_name("nope").is_none());
    }

    #[test]
    fn surfaces_are_recognized() {
        for k in [k2_rp2(), torus_7(), torus_9(), boundary_simplex(3).unwrap()] {
            assert!(is_closed_surface(&k));
        }
        for k in [k1_moebius(), moore_m(), cycle(4).unwrap()] {
            assert!(!is_closed_surface(&k));
        }
    }
}
