mod common;

use common::complex_strategy;
use golod_core::{Simplex, SimplicialComplex, Vertex, VertexSubset};
use proptest::prelude::*;

fn subsets(vs: &[Vertex]) -> Vec<Vec<Vertex>> {
    (1u32..(1 << vs.len()))
        .map(|m| {
            (0..vs.len())
                .filter(|&i| m & (1 << i) != 0)
                .map(|i| vs[i])
                .collect()
        })
        .collect()
}

fn is_face(k: &SimplicialComplex, s: &[Vertex]) -> bool {
    k.contains(&Simplex::new(s.to_vec()))
}

/// `s` induces a cycle of length ≥ 4.
fn is_hole(k: &SimplicialComplex, s: &[Vertex]) -> bool {
    s.len() >= 4 && {
        let deg = |v: Vertex| s.iter().filter(|&&w| w != v && k.has_edge(v, w)).count();
        if !s.iter().all(|&v| deg(v) == 2) {
            return false;
        }
        // connected: walk from the first vertex
        let mut seen = vec![s[0]];
        let mut i = 0;
        while i < seen.len() {
            let v = seen[i];
            for &w in s {
                if k.has_edge(v, w) && !seen.contains(&w) {
                    seen.push(w);
                }
            }
            i += 1;
        }
        seen.len() == s.len()
    }
}

fn has_hole_brute(k: &SimplicialComplex) -> bool {
    subsets(k.vertices()).iter().any(|s| is_hole(k, s))
}

fn binom(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

proptest! {
    #[test]
    fn faces_are_closed_under_subsets(k in complex_strategy(7, 3)) {
        for f in k.facets() {
            for s in subsets(f.vertices()) {
                prop_assert!(is_face(&k, &s));
            }
        }
        let total: usize = k.f_vector().iter().sum();
        let brute = subsets(k.vertices()).iter().filter(|s| is_face(&k, s)).count();
        prop_assert_eq!(total, brute);
    }

    #[test]
    fn full_subcomplexes_compose(k in complex_strategy(7, 3), a in 1u32..128, b in 1u32..128) {
        let pick = |m: u32| -> Vec<Vertex> {
            k.vertices().iter().enumerate().filter(|(i, _)| m & (1 << i) != 0).map(|(_, &v)| v).collect()
        };
        let i = pick(a);
        let j: Vec<Vertex> = pick(a & b);
        prop_assume!(!i.is_empty() && !j.is_empty());
        let ki = k.full_subcomplex(&VertexSubset::new(i.clone())).unwrap();
        let kij = ki.full_subcomplex(&VertexSubset::new(j.clone())).unwrap();
        prop_assert_eq!(kij, k.full_subcomplex(&VertexSubset::new(j.clone())).unwrap());
        for s in subsets(&i) {
            prop_assert_eq!(is_face(&ki, &s), is_face(&k, &s));
        }
    }

    #[test]
    fn deletion_is_the_complementary_full_subcomplex(k in complex_strategy(7, 3)) {
        prop_assume!(k.num_vertices() >= 2);
        for &v in k.vertices() {
            let rest: Vec<Vertex> = k.vertices().iter().copied().filter(|&u| u != v).collect();
            prop_assert_eq!(k.vertex_deletion(v).unwrap(), k.full_subcomplex(&rest.into()).unwrap());
        }
    }

    #[test]
    fn chordality_matches_brute_force(k in complex_strategy(8, 1)) {
        prop_assert_eq!(k.is_chordal(), !has_hole_brute(&k));
        match k.chordality() {
            golod_core::chordal::Chordality::Chordal => prop_assert!(k.is_chordal()),
            golod_core::chordal::Chordality::Hole(c) => {
                prop_assert!(k.is_induced_cycle(&c));
                // the hole is a shortest one
                prop_assert!(!subsets(k.vertices()).iter().any(|s| s.len() < c.len() && is_hole(&k, s)));
            }
        }
    }

    #[test]
    fn minimal_nonfaces_match_brute_force(k in complex_strategy(7, 3)) {
        let brute: Vec<Simplex> = subsets(k.vertices())
            .into_iter()
            .filter(|s| !is_face(&k, s))
            .filter(|s| s.iter().all(|&v| {
                let t: Vec<Vertex> = s.iter().copied().filter(|&u| u != v).collect();
                t.is_empty() || is_face(&k, &t)
            }))
            .map(Simplex::new)
            .collect();
        let mut got = k.minimal_nonfaces();
        got.sort();
        let mut brute = brute;
        brute.sort();
        prop_assert_eq!(got, brute);
    }

    #[test]
    fn join_f_vector_is_a_convolution(k in complex_strategy(5, 2), l in complex_strategy(5, 2)) {
        let j = k.join(&l);
        let with_empty = |f: Vec<usize>| { let mut v = vec![1]; v.extend(f); v };
        let (a, b) = (with_empty(k.f_vector()), with_empty(l.f_vector()));
        let mut conv = vec![0; a.len() + b.len() - 1];
        for (i, x) in a.iter().enumerate() {
            for (jj, y) in b.iter().enumerate() {
                conv[i + jj] += x * y;
            }
        }
        prop_assert_eq!(with_empty(j.f_vector()), conv);
        prop_assert_eq!(j.num_vertices(), k.num_vertices() + l.num_vertices());
    }

    #[test]
    fn neighborliness_counts_faces(k in complex_strategy(7, 3), d in 0usize..3) {
        let n = k.num_vertices();
        let expect = d + 1 > n || k.f_vector().get(d).copied().unwrap_or(0) == binom(n, d + 1);
        prop_assert_eq!(k.is_k_neighborly(d), expect);
    }

    #[test]
    fn links_follow_the_definition(k in complex_strategy(6, 3)) {
        for &u in k.vertices() {
            let lk = k.link(u).unwrap();
            let others: Vec<Vertex> = k.vertices().iter().copied().filter(|&v| v != u).collect();
            for s in subsets(&others) {
                let mut su = s.clone();
                su.push(u);
                su.sort();
                prop_assert_eq!(lk.contains(&Simplex::new(s.clone())), is_face(&k, &su));
            }
        }
    }
}

#[test]
fn euler_characteristic_of_surfaces() {
    use golod_core::corpus;
    assert_eq!(corpus::torus_7().euler_characteristic(), 0);
    assert_eq!(corpus::torus_9().euler_characteristic(), 0);
    assert_eq!(corpus::k2_rp2().euler_characteristic(), 1);
    assert_eq!(
        corpus::boundary_simplex(3).unwrap().euler_characteristic(),
        2
    );
}
