mod common;

use coalgebra::diagonal::{bockstein, cohomology_f2, steenrod_square, Cochain, CochainClass};
use coalgebra::fixtures;
use coalgebra::simplicial::SimplicialSet;
use common::front_back_cup;

fn classes(x: &SimplicialSet, q: usize) -> Vec<CochainClass> {
    cohomology_f2(x, q).basis_classes()
}

const SPACES: &[&str] = &["rp2", "rp3", "klein", "torus", "boundary3", "s1"];

#[test]
fn sq0_is_the_identity() {
    for name in SPACES {
        let x = fixtures::fixture(name).unwrap();
        for q in 1..=x.dim() {
            for u in classes(&x, q) {
                assert_eq!(
                    steenrod_square(0, &u.representative, &x).unwrap().coordinates,
                    u.coordinates,
                    "{name}"
                );
            }
        }
    }
}

#[test]
fn top_square_is_the_cup_square() {
    for name in SPACES {
        let x = fixtures::fixture(name).unwrap();
        for q in 1..=x.dim() / 2 {
            let target = cohomology_f2(&x, 2 * q);
            for u in classes(&x, q) {
                let sq = steenrod_square(q as i64, &u.representative, &x).unwrap();
                let cup = target
                    .class_of(&front_back_cup(&u.representative, &u.representative, &x), &x)
                    .unwrap();
                assert_eq!(sq, cup, "{name}");
            }
        }
    }
}

#[test]
fn sq1_is_the_bockstein() {
    for name in SPACES {
        let x = fixtures::fixture(name).unwrap();
        for q in 1..x.dim() {
            let target = cohomology_f2(&x, q + 1);
            for u in classes(&x, q) {
                let beta = target.class_of(&bockstein(&u.representative, &x).unwrap(), &x).unwrap();
                assert_eq!(
                    steenrod_square(1, &u.representative, &x).unwrap(),
                    beta,
                    "{name} q = {q}"
                );
            }
        }
    }
}

#[test]
fn squares_above_the_degree_vanish() {
    for name in SPACES {
        let x = fixtures::fixture(name).unwrap();
        for q in 1..x.dim() {
            for u in classes(&x, q) {
                for i in q + 1..=x.dim() - q {
                    assert!(steenrod_square(i as i64, &u.representative, &x).unwrap().is_zero());
                }
            }
        }
    }
}

#[test]
fn known_squares() {
    // every target here is at most one-dimensional, so rank Sq^1 is 0 or 1
    let sq1_rank = |name: &str, q: usize| {
        let x = fixtures::fixture(name).unwrap();
        usize::from(
            classes(&x, q)
                .iter()
                .any(|u| !steenrod_square(1, &u.representative, &x).unwrap().is_zero()),
        )
    };
    assert_eq!(sq1_rank("rp2", 1), 1);
    assert_eq!(sq1_rank("rp3", 1), 1);
    assert_eq!(sq1_rank("rp3", 2), 0);
    assert_eq!(sq1_rank("klein", 1), 1);
    assert_eq!(sq1_rank("torus", 1), 0);
    assert!(steenrod_square(-1, &Cochain::zero(1), &fixtures::fixture("rp2").unwrap()).is_err());
}
