use coalgebra::exactalg::{d_squared_vanishes, homology_groups, homology_through, HomologyGroup};
use coalgebra::operads::{
    bar_differential, bar_generator, block_perm, s0_compose, BarResolution, GroupRingElement, Permutation,
};
use proptest::prelude::*;

fn permutation(n: usize) -> impl Strategy<Value = Permutation> {
    Just((0..n).collect::<Vec<_>>())
        .prop_shuffle()
        .prop_map(|v| Permutation::new(v).unwrap())
}

fn basis(p: &Permutation) -> GroupRingElement {
    GroupRingElement::basis(p.clone())
}

fn single(x: &GroupRingElement) -> Permutation {
    let mut terms = x.terms().terms();
    let (p, _) = terms.next().unwrap();
    assert!(terms.next().is_none());
    p.clone()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn composition_is_associative(
        sigma in permutation(2),
        t1 in permutation(2),
        t2 in permutation(1),
        rhos in prop::collection::vec((0usize..=2).prop_flat_map(permutation), 3),
    ) {
        // γ(γ(σ; τ_1, τ_2); ρ_1, ρ_2, ρ_3) = γ(σ; γ(τ_1; ρ_1, ρ_2), γ(τ_2; ρ_3))
        let rho: Vec<GroupRingElement> = rhos.iter().map(basis).collect();
        let inner = s0_compose(&sigma, &[basis(&t1), basis(&t2)]).unwrap();
        let lhs = s0_compose(&single(&inner), &rho).unwrap();
        let a = s0_compose(&t1, &rho[..2]).unwrap();
        let b = s0_compose(&t2, &rho[2..]).unwrap();
        let rhs = s0_compose(&sigma, &[a, b]).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn units(sigma in permutation(3)) {
        let ones = vec![GroupRingElement::identity(1); 3];
        prop_assert_eq!(s0_compose(&sigma, &ones).unwrap(), basis(&sigma));
        prop_assert_eq!(s0_compose(&Permutation::identity(1), &[basis(&sigma)]).unwrap(), basis(&sigma));
    }

    #[test]
    fn block_permutations_of_singletons(sigma in permutation(4)) {
        prop_assert_eq!(block_perm(&[1, 1, 1, 1], &sigma).unwrap(), sigma);
    }
}

#[test]
fn bar_generators_have_the_expected_boundary() {
    let t = Permutation::swap();
    for k in 1..=6 {
        let expected = bar_generator(k - 1).add(
            &bar_generator(k - 1)
                .act(&t)
                .scale(&(if k % 2 == 0 { 1 } else { -1 }).into()),
        );
        assert_eq!(bar_differential(&bar_generator(k)), expected, "k = {k}");
        assert!(bar_differential(&bar_differential(&bar_generator(k))).is_zero());
    }
}

#[test]
fn bar_resolution_is_acyclic() {
    for (n, top) in [(2, 6), (3, 2)] {
        let r = BarResolution::new(n, top + 1);
        assert!(d_squared_vanishes(&r, top + 1));
        let h = homology_through(&r, top).unwrap();
        assert_eq!(h[0], HomologyGroup::new(1, &[]));
        assert!(h[1..].iter().all(HomologyGroup::is_trivial), "S_{n}: {h:?}");
    }
}

#[test]
fn group_homology_from_coinvariants() {
    let r2 = BarResolution::coinvariants(2, 7);
    let h: Vec<_> = homology_through(&r2, 6).unwrap();
    let z2 = HomologyGroup::new(0, &[2]);
    let zero = HomologyGroup::trivial();
    assert_eq!(
        h,
        vec![
            HomologyGroup::new(1, &[]),
            z2.clone(),
            zero.clone(),
            z2.clone(),
            zero.clone(),
            z2,
            zero
        ]
    );
    let r3 = BarResolution::coinvariants(3, 4);
    assert_eq!(homology_groups(&r3, 1).unwrap(), HomologyGroup::new(0, &[2]));
    assert_eq!(homology_groups(&r3, 2).unwrap(), HomologyGroup::trivial());
    assert_eq!(homology_groups(&r3, 3).unwrap(), HomologyGroup::new(0, &[6]));
}
