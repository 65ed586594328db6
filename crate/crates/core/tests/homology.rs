mod common;

use std::collections::{BTreeMap, BTreeSet};

use coalgebra::exactalg::{d_squared_vanishes, homology_through, HomologyGroup};
use coalgebra::fixtures;
use coalgebra::simplicial::{from_ordered_complex, normalized_chains};
use common::{betti_mod, LARGE_PRIME};
use proptest::prelude::*;

fn even_torsion(h: &HomologyGroup) -> usize {
    h.torsion.iter().filter(|t| (*t % 2u32) == 0u32.into()).count()
}

#[test]
fn fixtures_match_a_naive_oracle() {
    for name in ["delta3", "boundary3", "rp2", "rp3", "torus", "klein"] {
        let oc = fixtures::complex(name).unwrap();
        let x = oc.build().unwrap();
        let h = homology_through(&normalized_chains(&x), x.dim()).unwrap();
        let rational = betti_mod(&oc.facets, LARGE_PRIME);
        let mod2 = betti_mod(&oc.facets, 2);
        for n in 0..=x.dim() {
            assert_eq!(h[n].betti, rational[n], "{name} H_{n}");
            let below = if n == 0 { 0 } else { even_torsion(&h[n - 1]) };
            assert_eq!(h[n].betti + even_torsion(&h[n]) + below, mod2[n], "{name} H_{n}(F2)");
        }
    }
}

#[test]
fn known_groups() {
    let z = |b, t: &[i64]| HomologyGroup::new(b, t);
    let cases: &[(&str, Vec<HomologyGroup>)] = &[
        ("boundary3", vec![z(1, &[]), z(0, &[]), z(1, &[])]),
        ("rp2", vec![z(1, &[]), z(0, &[2]), z(0, &[])]),
        ("rp3", vec![z(1, &[]), z(0, &[2]), z(0, &[]), z(1, &[])]),
        ("torus", vec![z(1, &[]), z(2, &[]), z(1, &[])]),
        ("klein", vec![z(1, &[]), z(1, &[2]), z(0, &[])]),
        ("s1", vec![z(1, &[]), z(1, &[])]),
    ];
    for (name, expected) in cases {
        let x = fixtures::fixture(name).unwrap();
        assert_eq!(
            &homology_through(&normalized_chains(&x), x.dim()).unwrap(),
            expected,
            "{name}"
        );
    }
}

fn random_complex() -> impl Strategy<Value = Vec<Vec<usize>>> {
    prop::collection::vec(prop::collection::btree_set(0usize..6, 1..=4), 1..8)
        .prop_map(|fs| fs.into_iter().map(|f| f.into_iter().collect()).collect())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn random_complexes(facets in random_complex()) {
        let used: BTreeSet<usize> = facets.iter().flatten().copied().collect();
        let relabel: BTreeMap<usize, usize> = used.iter().enumerate().map(|(i, &v)| (v, i)).collect();
        let facets: Vec<Vec<usize>> = facets.iter().map(|f| f.iter().map(|v| relabel[v]).collect()).collect();
        let labels: Vec<String> = (0..used.len()).map(|i| i.to_string()).collect();
        let x = from_ordered_complex(&labels, &facets).unwrap();
        let c = normalized_chains(&x);
        prop_assert!(d_squared_vanishes(&c, x.dim() + 1));
        let h = homology_through(&c, x.dim()).unwrap();
        let oracle = betti_mod(&facets, LARGE_PRIME);
        for n in 0..=x.dim() {
            prop_assert_eq!(h[n].betti, oracle[n]);
        }
        let euler_f: i64 = x.f_vector().iter().enumerate().map(|(n, &f)| if n % 2 == 0 { f as i64 } else { -(f as i64) }).sum();
        let euler_h: i64 = h.iter().enumerate().map(|(n, g)| if n % 2 == 0 { g.betti as i64 } else { -(g.betti as i64) }).sum();
        prop_assert_eq!(euler_f, euler_h);
    }
}
