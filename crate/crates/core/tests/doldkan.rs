use coalgebra::doldkan::{
    check_gamma_pair, dold_kan_roundtrip, gamma, gamma_pair, gamma_tilde, integers_in_degree, level_ranks,
};
use coalgebra::exactalg::{homology_through, ChainComplex, HomologyGroup};
use coalgebra::fixtures;
use coalgebra::simplicial::{minimal_circle, normalized_chains, real_projective_space, LazySimplicialAbGroup};
use coalgebra::Chain;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

#[test]
fn roundtrip_on_integers_in_one_degree() {
    for k in 0..=3 {
        let report = dold_kan_roundtrip(integers_in_degree(k), 5).unwrap();
        assert!(report.passed(), "Z[{k}]: {report:?}");
        for d in &report.degrees {
            let expected = if d.degree == k {
                HomologyGroup::new(1, &[])
            } else {
                HomologyGroup::trivial()
            };
            assert_eq!(d.moore_homology, expected);
        }
    }
}

#[test]
fn roundtrip_on_chains_of_rp2() {
    let x = fixtures::fixture("rp2").unwrap();
    let report = dold_kan_roundtrip(normalized_chains(&x), 5).unwrap();
    assert!(report.passed(), "{report:?}");
    let h: Vec<_> = report.degrees.iter().map(|d| d.moore_homology.clone()).collect();
    assert_eq!(h[..3], homology_through(&normalized_chains(&x), 2).unwrap()[..]);
}

#[test]
fn level_sizes_of_gamma_of_a_point_in_degree_two() {
    // Γ(Z[2])_n has one generator per surjection [n] -> [2]
    let g = gamma(integers_in_degree(2));
    let sizes: Vec<usize> = (0..=5).map(|n| g.level_basis(n).unwrap().len()).collect();
    assert_eq!(sizes, vec![0, 0, 1, 3, 6, 10]);
}

#[test]
fn gamma_is_simplicial() {
    let x = real_projective_space(2);
    let g = gamma(normalized_chains(&x));
    for n in 1..=3 {
        for key in g.level_basis(n).unwrap() {
            for i in 0..n {
                for j in i + 1..=n {
                    // d_i d_j = d_{j-1} d_i
                    let a = g.face(n - 1, i, &g.face(n, j, &Chain::basis(key.clone())));
                    let b = g.face(n - 1, j - 1, &g.face(n, i, &Chain::basis(key.clone())));
                    assert_eq!(a, b);
                }
            }
        }
    }
}

#[test]
fn gamma_tilde_drops_the_augmentation() {
    let x = fixtures::fixture("boundary3").unwrap();
    let gt = gamma_tilde(normalized_chains(&x)).unwrap();
    assert_eq!(gt.complex().basis(0).unwrap().len(), x.count(0) - 1);
    assert_eq!(gt.complex().basis(1).unwrap().len(), x.count(1));
}

#[test]
fn gamma_correspondence_on_samples() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for x in [minimal_circle(), real_projective_space(2)] {
        let pair = gamma_pair(&x, 4).unwrap();
        for (n, (a, b)) in level_ranks(&pair).unwrap() {
            assert_eq!(a, b, "level {n}");
        }
        let report = check_gamma_pair(&pair, 50, &mut rng).unwrap();
        assert!(report.passed(), "{report:?}");
        assert!(report.levels.iter().all(|&(_, s, _)| s == 50));
    }
}

#[test]
fn gamma_pair_needs_a_reduced_set() {
    let x = fixtures::fixture("rp2").unwrap();
    assert!(gamma_pair(&x, 2).is_err());
    let s1 = minimal_circle();
    let pair = gamma_pair(&s1, 2).unwrap();
    assert!(pair.iota(3, &Chain::zero()).is_err());
}
