//! Chordality of the 1-skeleton.
//!
//! Recognition runs lexicographic breadth-first search and then checks that
//! the reverse visiting order is a perfect elimination ordering. On failure
//! the shortest chordless cycle is extracted as a certificate.

use alloc::vec;
use alloc::vec::Vec;

use crate::complex::{SimplicialComplex, Vertex};
use crate::mask::{bit, bits, Mask};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Chordality {
    Chordal,
    /// An induced cycle of length at least four, in cyclic order.
    Hole(Vec<Vertex>),
}

impl Chordality {
    pub fn is_chordal(&self) -> bool {
        matches!(self, Chordality::Chordal)
    }
}

impl SimplicialComplex {
    pub fn is_chordal(&self) -> bool {
        let adj = self.adjacency();
        is_peo(&adj, &lex_bfs(&adj))
    }

    /// Chordality with a witness cycle on failure.
    pub fn chordality(&self) -> Chordality {
        let adj = self.adjacency();
        if is_peo(&adj, &lex_bfs(&adj)) {
            return Chordality::Chordal;
        }
        let hole = shortest_hole(&adj).expect("a non-chordal graph has a hole");
        Chordality::Hole(hole.into_iter().map(|i| self.vertices()[i]).collect())
    }

    /// Whether `cycle` lists, in cyclic order, at least four distinct
    /// vertices forming a chordless cycle of the 1-skeleton.
    pub fn is_induced_cycle(&self, cycle: &[Vertex]) -> bool {
        let n = cycle.len();
        if n < 4 {
            return false;
        }
        let mut seen = cycle.to_vec();
        seen.sort_unstable();
        seen.dedup();
        if seen.len() != n {
            return false;
        }
        (0..n).all(|i| {
            (i + 1..n).all(|j| {
                let adjacent = j == i + 1 || (i == 0 && j == n - 1);
                self.has_edge(cycle[i], cycle[j]) == adjacent
            })
        })
    }
}

/// Visiting order of lexicographic BFS (partition refinement on label lists).
pub(crate) fn lex_bfs(adj: &[Mask]) -> Vec<usize> {
    let n = adj.len();
    // ordered partition of the unvisited vertices; front class has the largest label
    let mut classes: Vec<Mask> = if n == 0 {
        Vec::new()
    } else {
        vec![crate::mask::full(n)]
    };
    let mut order = Vec::with_capacity(n);
    while let Some(front) = classes.first_mut() {
        let v = front.trailing_zeros() as usize;
        *front &= !bit(v);
        if *front == 0 {
            classes.remove(0);
        }
        order.push(v);
        let mut next = Vec::with_capacity(classes.len() + 1);
        for &c in &classes {
            let inside = c & adj[v];
            let outside = c & !adj[v];
            if inside != 0 {
                next.push(inside);
            }
            if outside != 0 {
                next.push(outside);
            }
        }
        classes = next;
    }
    order
}

/// Each vertex's neighbours visited before it must form a clique.
pub(crate) fn is_peo(adj: &[Mask], order: &[usize]) -> bool {
    let mut seen: Mask = 0;
    for &v in order {
        let earlier = adj[v] & seen;
        for u in bits(earlier) {
            if (adj[u] | bit(u)) & earlier != earlier {
                return false;
            }
        }
        seen |= bit(v);
    }
    true
}

/// Shortest induced cycle of length ≥ 4, normalised to start at its smallest
/// vertex and continue towards the smaller neighbour.
pub(crate) fn shortest_hole(adj: &[Mask]) -> Option<Vec<usize>> {
    let n = adj.len();
    let mut best: Option<Vec<usize>> = None;
    for v in 0..n {
        let nb: Vec<usize> = bits(adj[v]).collect();
        for (x, &a) in nb.iter().enumerate() {
            for &b in &nb[x + 1..] {
                if adj[a] & bit(b) != 0 {
                    continue;
                }
                // path a ~> b avoiding v and its other neighbours
                let blocked = (adj[v] | bit(v)) & !(bit(a) | bit(b));
                if let Some(path) = bfs_path(adj, a, b, blocked) {
                    if best.as_ref().is_none_or(|h| path.len() + 1 < h.len()) {
                        let mut cyc = vec![v];
                        cyc.extend(path);
                        best = Some(cyc);
                    }
                }
            }
        }
    }
    best.map(normalize_cycle)
}

fn bfs_path(adj: &[Mask], from: usize, to: usize, blocked: Mask) -> Option<Vec<usize>> {
    let n = adj.len();
    let mut prev = vec![usize::MAX; n];
    let mut seen = bit(from) | blocked;
    let mut frontier = vec![from];
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for &u in &frontier {
            for w in bits(adj[u] & !seen) {
                seen |= bit(w);
                prev[w] = u;
                if w == to {
                    let mut path = vec![to];
                    let mut c = to;
                    while c != from {
                        c = prev[c];
                        path.push(c);
                    }
                    path.reverse();
                    return Some(path);
                }
                next.push(w);
            }
        }
        frontier = next;
    }
    None
}

pub(crate) fn normalize_cycle(mut c: Vec<usize>) -> Vec<usize> {
    let k = c.len();
    let start = (0..k).min_by_key(|&i| c[i]).unwrap();
    c.rotate_left(start);
    if k > 2 && c[k - 1] < c[1] {
        c[1..].reverse();
    }
    c
}
