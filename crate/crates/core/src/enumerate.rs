//! Exhaustive enumeration of small complexes of dimension at most two, one
//! per isomorphism class.
//!
//! A complex on `[m]` of dimension ≤ 2 is a set of triangles `T` together
//! with a graph containing the edges of `T`. Triangle sets are reduced to
//! orbit representatives under the symmetric group; for each representative
//! the remaining edge sets are reduced under its stabilizer.

use alloc::vec;
use alloc::vec::Vec;

use crate::complex::{SimplicialComplex, Vertex};
use crate::error::{Error, Result};

/// Largest vertex count supported by [`two_complexes`].
pub const MAX_VERTICES: usize = 6;

/// Edges and triangles of `[m]` with their index maps under every
/// permutation.
struct Setting {
    m: usize,
    edges: Vec<(usize, usize)>,
    triangles: Vec<(usize, usize, usize)>,
    /// `edge_perm[p][e]`, `tri_perm[p][t]`.
    edge_perm: Vec<Vec<usize>>,
    tri_perm: Vec<Vec<usize>>,
    /// Edge mask of each triangle.
    shadow: Vec<u32>,
}

impl Setting {
    fn new(m: usize) -> Self {
        let mut edges = Vec::new();
        let mut triangles = Vec::new();
        for a in 0..m {
            for b in a + 1..m {
                edges.push((a, b));
                for c in b + 1..m {
                    triangles.push((a, b, c));
                }
            }
        }
        let edge_index = |a: usize, b: usize| {
            edges
                .iter()
                .position(|&e| e == (a.min(b), a.max(b)))
                .unwrap()
        };
        let tri_index = |mut t: [usize; 3]| {
            t.sort_unstable();
            triangles
                .iter()
                .position(|&x| x == (t[0], t[1], t[2]))
                .unwrap()
        };
        let mut edge_perm = Vec::new();
        let mut tri_perm = Vec::new();
        for p in permutations(m) {
            edge_perm.push(edges.iter().map(|&(a, b)| edge_index(p[a], p[b])).collect());
            tri_perm.push(
                triangles
                    .iter()
                    .map(|&(a, b, c)| tri_index([p[a], p[b], p[c]]))
                    .collect(),
            );
        }
        let shadow = triangles
            .iter()
            .map(|&(a, b, c)| {
                (1 << edge_index(a, b)) | (1 << edge_index(a, c)) | (1 << edge_index(b, c))
            })
            .collect();
        Setting {
            m,
            edges,
            triangles,
            edge_perm,
            tri_perm,
            shadow,
        }
    }

    fn shadow_of(&self, t: u32) -> u32 {
        bit_indices(t).fold(0, |acc, i| acc | self.shadow[i])
    }

    fn complex(&self, t: u32, e: u32) -> SimplicialComplex {
        let v = |i: usize| i as Vertex + 1;
        let mut facets: Vec<Vec<Vertex>> = (0..self.m).map(|i| vec![v(i)]).collect();
        facets.extend(bit_indices(e).map(|i| vec![v(self.edges[i].0), v(self.edges[i].1)]));
        facets.extend(bit_indices(t).map(|i| {
            let (a, b, c) = self.triangles[i];
            vec![v(a), v(b), v(c)]
        }));
        SimplicialComplex::from_facets(self.m, facets).expect("valid facets")
    }
}

fn apply(map: &[usize], x: u32) -> u32 {
    bit_indices(x).fold(0, |acc, i| acc | (1 << map[i]))
}

fn bit_indices(mut x: u32) -> impl Iterator<Item = usize> {
    core::iter::from_fn(move || {
        if x == 0 {
            return None;
        }
        let i = x.trailing_zeros() as usize;
        x &= x - 1;
        Some(i)
    })
}

/// All permutations of `0..m` in lexicographic order.
fn permutations(m: usize) -> Vec<Vec<usize>> {
    let mut p: Vec<usize> = (0..m).collect();
    let mut out = vec![p.clone()];
    loop {
        let Some(i) = (1..m).rev().find(|&i| p[i - 1] < p[i]) else {
            return out;
        };
        let j = (i..m).rev().find(|&j| p[j] > p[i - 1]).unwrap();
        p.swap(i - 1, j);
        p[i..].reverse();
        out.push(p.clone());
    }
}

/// Calls `f` once per isomorphism class of complexes of dimension at most
/// two on exactly the vertices `1..=m`; stops early when `f` returns
/// `false`. Returns the number of complexes visited.
pub fn for_each_two_complex(
    m: usize,
    mut f: impl FnMut(SimplicialComplex) -> bool,
) -> Result<usize> {
    if m > MAX_VERTICES {
        return Err(Error::Overflow("too many vertices to enumerate"));
    }
    if m == 0 {
        return Ok(0);
    }
    let s = Setting::new(m);
    let nt = s.triangles.len();
    let ne = s.edges.len();
    let mut seen_t = vec![false; 1 << nt];
    let mut count = 0;
    for t in 0..1u32 << nt {
        if seen_t[t as usize] {
            continue;
        }
        let mut stab = Vec::new();
        for (p, map) in s.tri_perm.iter().enumerate() {
            let u = apply(map, t);
            seen_t[u as usize] = true;
            if u == t {
                stab.push(p);
            }
        }
        let required = s.shadow_of(t);
        let free = !required & ((1u32 << ne) - 1);
        let mut seen_e = vec![false; 1 << ne];
        // walk the subsets of the free edges
        let mut sub = 0u32;
        loop {
            let e = required | sub;
            if !seen_e[e as usize] {
                for &p in &stab {
                    seen_e[apply(&s.edge_perm[p], e) as usize] = true;
                }
                count += 1;
                if !f(s.complex(t, e)) {
                    return Ok(count);
                }
            }
            if sub == free {
                break;
            }
            sub = (sub.wrapping_sub(free)) & free;
        }
    }
    Ok(count)
}

/// Every complex of dimension at most two on `1..=m`, up to isomorphism,
/// for `m = 1..=max_vertices`, stopping after `cap` complexes. The flag
/// reports whether the cap cut the list short.
pub fn two_complexes(max_vertices: usize, cap: usize) -> Result<(Vec<SimplicialComplex>, bool)> {
    let mut out = Vec::new();
    for m in 1..=max_vertices {
        for_each_two_complex(m, |k| {
            out.push(k);
            out.len() < cap
        })?;
        if out.len() >= cap {
            return Ok((out, true));
        }
    }
    Ok((out, false))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_counts() {
        let counts: Vec<usize> = (1..=3)
            .map(|m| for_each_two_complex(m, |_| true).unwrap())
            .collect();
        // one point; two points or an edge; four graphs on three vertices plus the filled triangle
        assert_eq!(counts, vec![1, 2, 5]);
    }

    #[test]
    fn permutations_are_complete() {
        let p = permutations(4);
        assert_eq!(p.len(), 24);
        let mut q = p.clone();
        q.sort();
        q.dedup();
        assert_eq!(q.len(), 24);
    }

    #[test]
    fn cap_stops_the_walk() {
        let (ks, cut) = two_complexes(4, 7).unwrap();
        assert_eq!(ks.len(), 7);
        assert!(cut);
    }
}
