#![allow(dead_code)]

use golod_core::{SimplicialComplex, Vertex};
use proptest::prelude::*;
use rand::Rng;

/// Complex on `1..=m` generated by facet bitmasks, each cut down to at most
/// `max_dim + 1` vertices; unused vertices become isolated points.
pub fn from_masks(m: usize, masks: &[u32], max_dim: usize) -> SimplicialComplex {
    let mut facets: Vec<Vec<Vertex>> = Vec::new();
    let mut used = 0u32;
    for &mask in masks {
        let mask = mask & ((1 << m) - 1);
        let vs: Vec<Vertex> = (0..m)
            .filter(|&i| mask & (1 << i) != 0)
            .take(max_dim + 1)
            .map(|i| i as Vertex + 1)
            .collect();
        if vs.is_empty() {
            continue;
        }
        for &v in &vs {
            used |= 1 << (v - 1);
        }
        facets.push(vs);
    }
    for i in 0..m {
        if used & (1 << i) == 0 {
            facets.push(vec![i as Vertex + 1]);
        }
    }
    SimplicialComplex::from_facets(m, facets).unwrap()
}

pub fn complex_strategy(max_m: usize, max_dim: usize) -> impl Strategy<Value = SimplicialComplex> {
    (1..=max_m).prop_flat_map(move |m| {
        prop::collection::vec(1u32..(1u32 << m), 1..9)
            .prop_map(move |masks| from_masks(m, &masks, max_dim))
    })
}

pub fn random_complex(rng: &mut impl Rng, max_m: usize, max_dim: usize) -> SimplicialComplex {
    let m = rng.gen_range(1..=max_m);
    let n = rng.gen_range(1..9);
    let masks: Vec<u32> = (0..n).map(|_| rng.gen_range(1..(1u32 << m))).collect();
    from_masks(m, &masks, max_dim)
}
