mod common;

use common::complex_strategy;
use golod_core::chain::chain_complex;
use golod_core::homology::{betti_number, cohomology, homology};
use golod_core::linalg::AbelianGroup;
use golod_core::maps::{induced_map, SimplicialMap};
use golod_core::{corpus, Coefficient, SimplicialComplex, Vertex};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use proptest::prelude::*;

const FIELDS: [Coefficient; 3] = [
    Coefficient::Rationals,
    Coefficient::PrimeField(2),
    Coefficient::PrimeField(3),
];

fn integral(k: &SimplicialComplex, n: isize) -> AbelianGroup {
    homology(k, n, Coefficient::Integers)
        .unwrap()
        .abelian_group()
}

fn order(g: &AbelianGroup) -> BigInt {
    g.order().expect("finite group")
}

/// `|G ⊗ Z/q|` and `|Tor(G, Z/q)|`, the latter as `|{x ∈ G : q x = 0}|`.
fn tensor_and_tor(g: &AbelianGroup, q: u64) -> (BigInt, BigInt) {
    let q = BigInt::from(q);
    let mut tensor = q.pow(g.free_rank as u32);
    let mut tor = BigInt::one();
    for t in &g.torsion {
        let d = t.gcd(&q);
        tensor *= &d;
        tor *= &d;
    }
    (tensor, tor)
}

fn check_uct(k: &SimplicialComplex) {
    for q in [2u64, 3, 4, 8, 9] {
        for n in -1..=k.dim() + 1 {
            let h = homology(k, n, Coefficient::CyclicRing(q))
                .unwrap()
                .abelian_group();
            let (tensor, _) = tensor_and_tor(&integral(k, n), q);
            let (_, tor) = tensor_and_tor(&integral(k, n - 1), q);
            assert_eq!(order(&h), tensor * tor, "Z/{q} degree {n} of {k:?}");
        }
    }
}

fn check_field_dims(k: &SimplicialComplex) {
    for n in -1..=k.dim() + 1 {
        let z = integral(k, n);
        let below = integral(k, n - 1);
        for f in FIELDS {
            let slow = homology(k, n, f).unwrap().dimension().unwrap();
            let fast = betti_number(k, n, f).unwrap();
            let p = BigInt::from(f.modulus());
            let uct = match f {
                Coefficient::Rationals => z.free_rank,
                _ => {
                    z.free_rank
                        + z.torsion.iter().filter(|t| t.is_multiple_of(&p)).count()
                        + below
                            .torsion
                            .iter()
                            .filter(|t| t.is_multiple_of(&p))
                            .count()
                }
            };
            assert_eq!((slow, fast), (uct, uct), "{f} degree {n}");
            assert_eq!(cohomology(k, n, f).unwrap().dimension().unwrap(), uct);
        }
    }
}

fn reduced_euler(k: &SimplicialComplex, f: Coefficient) -> i64 {
    (-1..=k.dim())
        .map(|n| {
            let d = betti_number(k, n, f).unwrap() as i64;
            if n.rem_euclid(2) == 0 {
                d
            } else {
                -d
            }
        })
        .sum()
}

/// A random vertex map from `k` into `l`, with `l` enlarged by the images of
/// the faces of `k` so that the map is simplicial.
fn random_map(k: &SimplicialComplex, l: &SimplicialComplex, images: &[usize]) -> SimplicialMap {
    let lv = l.vertices().to_vec();
    let phi = |v: Vertex| lv[images[(v - 1) as usize] % lv.len()];
    let mut facets = l.facets();
    for f in k.facets() {
        facets.push(
            f.vertices()
                .iter()
                .map(|&v| phi(v))
                .collect::<Vec<_>>()
                .into(),
        );
    }
    let target = SimplicialComplex::from_facets(lv.len(), facets).unwrap();
    SimplicialMap::new(k.clone(), target, phi).unwrap()
}

fn reduce(m: golod_core::linalg::IntMatrix, orders: &[BigInt]) -> golod_core::linalg::IntMatrix {
    let mut m = m;
    for (i, o) in orders.iter().enumerate() {
        if !o.is_zero() {
            for j in 0..m.cols() {
                let x = m[(i, j)].mod_floor(o);
                m[(i, j)] = x;
            }
        }
    }
    m
}

proptest! {
    #[test]
    fn boundary_squares_to_zero(k in complex_strategy(7, 3)) {
        for reduced in [true, false] {
            let c = chain_complex(&k, reduced);
            for d in c.min_degree()..=c.max_degree() {
                prop_assert!(c.boundary(d - 1).mul(&c.boundary(d)).is_zero());
            }
        }
    }

    #[test]
    fn universal_coefficient_orders(k in complex_strategy(6, 2)) {
        check_uct(&k);
    }

    #[test]
    fn field_dimensions(k in complex_strategy(6, 3)) {
        check_field_dims(&k);
    }

    #[test]
    fn euler_characteristic(k in complex_strategy(7, 3)) {
        for f in FIELDS {
            prop_assert_eq!(reduced_euler(&k, f), k.euler_characteristic() - 1);
        }
    }

    #[test]
    fn representatives_are_cycles(k in complex_strategy(6, 2), q in 2u64..6) {
        let c = chain_complex(&k, true);
        for coeff in [Coefficient::Integers, Coefficient::CyclicRing(q)] {
            for n in 0..=k.dim() {
                let h = homology(&k, n, coeff).unwrap();
                let d = c.boundary(n);
                for (i, z) in h.cycle_basis.iter().enumerate() {
                    let bz = d.mul_vec(z);
                    let m = BigInt::from(coeff.modulus());
                    let closed = bz.iter().all(|x| if m.is_zero() { x.is_zero() } else { x.is_multiple_of(&m) });
                    prop_assert!(closed);
                    // each generator has unit coordinates
                    let mut e = vec![BigInt::zero(); h.num_generators()];
                    e[i] = BigInt::one();
                    prop_assert_eq!(h.coordinates(z).unwrap(), e);
                }
            }
        }
    }

    #[test]
    fn integral_cohomology_shifts_torsion(k in complex_strategy(6, 2)) {
        for n in 0..=k.dim() + 1 {
            let h = cohomology(&k, n, Coefficient::Integers).unwrap().abelian_group();
            let expect = AbelianGroup::from_factors(integral(&k, n).free_rank, integral(&k, n - 1).torsion);
            prop_assert_eq!(h, expect);
        }
    }

    #[test]
    fn induced_maps_compose(
        k in complex_strategy(4, 2),
        l in complex_strategy(4, 2),
        m in complex_strategy(4, 2),
        a in prop::collection::vec(0usize..4, 4),
        b in prop::collection::vec(0usize..4, 4),
    ) {
        let f = random_map(&k, &l, &a);
        let g = random_map(f.target(), &m, &b);
        let gf = f.then(&g).unwrap();
        for coeff in [Coefficient::Integers, Coefficient::CyclicRing(4), Coefficient::PrimeField(2), Coefficient::Rationals] {
            for n in 0..=2 {
                let fs = induced_map(&f, n, coeff).unwrap();
                let gs = induced_map(&g, n, coeff).unwrap();
                let both = induced_map(&gf, n, coeff).unwrap();
                prop_assert_eq!(&both.matrix, &gs.compose_after(&fs));
                prop_assert_eq!(&both.matrix, &reduce(gs.matrix.mul(&fs.matrix), &both.target.orders));
                let id = induced_map(&SimplicialMap::identity(&k), n, coeff).unwrap();
                prop_assert!(id.is_identity());
            }
        }
    }

    #[test]
    fn join_follows_kunneth(k in complex_strategy(4, 2), l in complex_strategy(4, 2)) {
        let j = k.join(&l);
        for f in FIELDS {
            for n in -1..=j.dim() {
                let expect: usize = (-1..=n)
                    .map(|i| betti_number(&k, i, f).unwrap() * betti_number(&l, n - 1 - i, f).unwrap())
                    .sum();
                prop_assert_eq!(betti_number(&j, n, f).unwrap(), expect);
            }
        }
    }

    #[test]
    fn suspension_shifts_integral_homology(k in complex_strategy(5, 2)) {
        let s0 = SimplicialComplex::from_facets(2, [[1], [2]]).unwrap();
        let sk = s0.join(&k);
        for n in 0..=k.dim() + 1 {
            prop_assert_eq!(integral(&sk, n), integral(&k, n - 1));
        }
    }
}

#[test]
fn corpus_satisfies_the_identities() {
    for nc in corpus::all() {
        let k = &nc.complex;
        check_uct(k);
        check_field_dims(k);
        for f in FIELDS {
            assert_eq!(
                reduced_euler(k, f),
                k.euler_characteristic() - 1,
                "{}",
                nc.name
            );
        }
        let c = chain_complex(k, true);
        for d in c.min_degree()..=c.max_degree() {
            assert!(c.boundary(d - 1).mul(&c.boundary(d)).is_zero());
        }
    }
}
