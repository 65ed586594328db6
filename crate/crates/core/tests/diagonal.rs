mod common;

use coalgebra::diagonal::table::{
    check_chain_map, check_chain_map_on, check_coassociativity, check_counit, check_equivariance, check_naturality,
    check_vanishing,
};
use coalgebra::diagonal::{diagonal_top, grouplike_signs_top, higher_diagonal, DiagonalTable, Face};
use coalgebra::fixtures;
use coalgebra::simplicial::{
    minimal_circle, simplex_boundary, sphere, std_simplex, Simplex, SimplicialSetBuilder, SimplicialSetMap, Surjection,
};
use coalgebra::Tensor;
use common::characteristic_map;

#[test]
fn chain_map_and_equivariance_on_simplices() {
    let table = DiagonalTable::new();
    assert!(check_chain_map(&table, 5, 10).unwrap() > 0);
    assert!(check_equivariance(&table, 5, 10).unwrap() > 0);
}

#[test]
fn invariants_on_every_fixture() {
    for name in fixtures::NAMES {
        let x = fixtures::fixture(name).unwrap();
        check_chain_map_on(&x, x.dim() + 1).unwrap();
        check_vanishing(&x, 2).unwrap();
        check_counit(&x).unwrap();
        check_coassociativity(&x, 5).unwrap();
    }
}

#[test]
fn characteristic_maps_are_natural() {
    for name in ["rp2", "torus", "klein", "boundary3", "s1"] {
        let x = fixtures::fixture(name).unwrap();
        for n in 1..=x.dim() {
            for sigma in x.nondegenerate(n).take(3) {
                let (delta, g) = characteristic_map(&x, sigma);
                check_naturality(&g, &delta, &x, n).unwrap();
            }
        }
    }
}

#[test]
fn collapsing_maps_are_natural() {
    // a circle with two vertices and two edges, folded onto the minimal circle
    let mut b = SimplicialSetBuilder::new();
    let a = b.add_vertex("a");
    let c = b.add_vertex("b");
    b.add_simplex("ab", vec![Simplex::nondegenerate(c), Simplex::nondegenerate(a)])
        .unwrap();
    b.add_simplex("ba", vec![Simplex::nondegenerate(a), Simplex::nondegenerate(c)])
        .unwrap();
    let two = b.build().unwrap();
    let s1 = minimal_circle();
    let v = s1.find("v").unwrap();
    let e = Simplex::nondegenerate(s1.find("e").unwrap());
    let images = vec![vec![Simplex::nondegenerate(v); 2], vec![e, Simplex::constant(v, 1)]];
    let g = SimplicialSetMap::new(&two, &s1, images).unwrap();
    check_naturality(&g, &two, &s1, 2).unwrap();

    // ∂Δ³ onto the one-vertex 2-sphere, sending [1,2,3] to the top cell
    let bd = simplex_boundary(3);
    let s2 = sphere(2);
    let v = s2.find("v").unwrap();
    let top = s2.nondegenerate(2).next().unwrap();
    let images = (0..=2)
        .map(|k| {
            bd.nondegenerate(k)
                .map(|y| {
                    if bd.label(y) == "[1,2,3]" {
                        Simplex::nondegenerate(top)
                    } else {
                        Simplex::new(Surjection::constant(k), v)
                    }
                })
                .collect()
        })
        .collect();
    let g = SimplicialSetMap::new(&bd, &s2, images).unwrap();
    check_naturality(&g, &bd, &s2, 3).unwrap();
}

#[test]
fn values_on_small_simplices() {
    let f = |vs: &[usize]| Face::new(vs);
    assert_eq!(
        *diagonal_top(0, 1),
        Tensor::pure(vec![f(&[0]), f(&[0, 1])]) + Tensor::pure(vec![f(&[0, 1]), f(&[1])])
    );
    // transported to a complex along characteristic maps
    let x = std_simplex(2);
    let top = x.nondegenerate(2).next().unwrap();
    assert_eq!(higher_diagonal(2, top, &x), Tensor::pure(vec![top, top]));
    assert!(higher_diagonal(3, top, &x).is_zero());
}

#[test]
fn top_coefficients_are_units() {
    for s in grouplike_signs_top(8) {
        assert!(s.observed.is_some(), "f(e_k ⊗ ι_k) is not ±ι⊗ι for k = {}", s.k);
        if s.k >= 2 {
            // the sign law's inductive step: c_k = (−1)^{k−1} c_{k−1} up to the shift at k = 1
            let prev = grouplike_signs_top(s.k - 1)[s.k - 1].observed.unwrap();
            assert_eq!(s.observed.unwrap(), if s.k % 2 == 0 { -prev } else { prev });
        }
    }
}
