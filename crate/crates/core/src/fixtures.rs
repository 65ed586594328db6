//! Small triangulations used throughout the tests and the command line.

use crate::simplicial::{from_ordered_complex, minimal_circle, simplex_boundary, std_simplex, SimplicialSet};
use crate::Result;

/// Six-vertex real projective plane, f-vector `(6, 15, 10)`.
#[rustfmt::skip]
pub const RP2_FACETS: &[[usize; 3]] = &[
    [0, 1, 2], [0, 1, 5], [0, 2, 3], [0, 3, 4], [0, 4, 5],
    [1, 2, 4], [1, 3, 4], [1, 3, 5], [2, 3, 5], [2, 4, 5],
];

/// Eight-vertex torus.
#[rustfmt::skip]
pub const TORUS_FACETS: &[[usize; 3]] = &[
    [0, 1, 3], [0, 1, 6], [0, 2, 3], [0, 2, 7], [0, 4, 5], [0, 4, 7], [0, 5, 6], [1, 2, 4],
    [1, 2, 7], [1, 3, 4], [1, 6, 7], [2, 3, 6], [2, 4, 5], [2, 5, 6], [3, 4, 7], [3, 6, 7],
];

/// Nine-vertex Klein bottle.
#[rustfmt::skip]
pub const KLEIN_FACETS: &[[usize; 3]] = &[
    [0, 1, 4], [0, 1, 6], [0, 3, 4], [0, 3, 5], [0, 5, 8], [0, 6, 8], [1, 2, 5], [1, 2, 7], [1, 4, 5],
    [1, 6, 7], [2, 3, 5], [2, 3, 6], [2, 6, 8], [2, 7, 8], [3, 4, 7], [3, 6, 7], [4, 5, 8], [4, 7, 8],
];

/// Eleven-vertex real projective 3-space, f-vector `(11, 54, 86, 43)`.
#[rustfmt::skip]
pub const RP3_FACETS: &[[usize; 4]] = &[
    [0, 1, 2, 3], [0, 1, 2, 10], [0, 1, 3, 6], [0, 1, 6, 10], [0, 2, 3, 7], [0, 2, 7, 8],
    [0, 2, 8, 10], [0, 3, 5, 6], [0, 3, 5, 7], [0, 4, 5, 6], [0, 4, 5, 9], [0, 4, 6, 10],
    [0, 4, 9, 10], [0, 5, 7, 9], [0, 7, 8, 9], [0, 8, 9, 10], [1, 2, 3, 9], [1, 2, 4, 5],
    [1, 2, 4, 9], [1, 2, 5, 10], [1, 3, 6, 8], [1, 3, 8, 9], [1, 4, 5, 9], [1, 5, 7, 9],
    [1, 5, 7, 10], [1, 6, 7, 8], [1, 6, 7, 10], [1, 7, 8, 9], [2, 3, 4, 7], [2, 3, 4, 9],
    [2, 4, 5, 6], [2, 4, 6, 7], [2, 5, 6, 8], [2, 5, 8, 10], [2, 6, 7, 8], [3, 4, 7, 10],
    [3, 4, 8, 9], [3, 4, 8, 10], [3, 5, 6, 8], [3, 5, 7, 10], [3, 5, 8, 10], [4, 6, 7, 10],
    [4, 8, 9, 10],
];

/// Names of the bundled fixtures.
#[rustfmt::skip]
pub const NAMES: &[&str] = &[
    "delta0", "delta1", "delta2", "delta3", "delta4", "boundary3", "s1", "rp2", "rp3", "klein", "torus",
];

/// An ordered simplicial complex: vertex labels and facets as vertex indices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrderedComplex {
    pub vertices: Vec<String>,
    pub facets: Vec<Vec<usize>>,
}

impl OrderedComplex {
    fn numbered<F: AsRef<[usize]>>(n: usize, facets: &[F]) -> Self {
        OrderedComplex {
            vertices: (0..n).map(|i| i.to_string()).collect(),
            facets: facets.iter().map(|f| f.as_ref().to_vec()).collect(),
        }
    }

    pub fn build(&self) -> Result<SimplicialSet> {
        from_ordered_complex(&self.vertices, &self.facets)
    }
}

/// The complex behind a fixture; the minimal circle is not a simplicial complex.
pub fn complex(name: &str) -> Option<OrderedComplex> {
    Some(match name {
        "delta0" | "delta1" | "delta2" | "delta3" | "delta4" => {
            let n: usize = name[5..].parse().ok()?;
            OrderedComplex::numbered(n + 1, &[(0..=n).collect::<Vec<_>>()])
        }
        "boundary3" => {
            let facets: Vec<Vec<usize>> = (0..4).map(|skip| (0..4).filter(|&v| v != skip).collect()).collect();
            OrderedComplex::numbered(4, &facets)
        }
        "rp2" => OrderedComplex::numbered(6, RP2_FACETS),
        "rp3" => OrderedComplex::numbered(11, RP3_FACETS),
        "klein" => OrderedComplex::numbered(9, KLEIN_FACETS),
        "torus" => OrderedComplex::numbered(8, TORUS_FACETS),
        _ => return None,
    })
}

/// A bundled fixture by name, with vertex `0` as basepoint where one is needed.
pub fn fixture(name: &str) -> Option<SimplicialSet> {
    match name {
        "s1" => Some(minimal_circle()),
        "boundary3" => Some(simplex_boundary(3)),
        n if n.starts_with("delta") => n[5..].parse().ok().filter(|&k: &usize| k <= 4).map(std_simplex),
        _ => complex(name)?.build().ok(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn all_fixtures_build() {
        for name in NAMES {
            let x = fixture(name).unwrap();
            x.check_simplicial_identities(3).unwrap();
        }
        assert_eq!(fixture("rp2").unwrap().f_vector(), vec![6, 15, 10]);
        assert_eq!(fixture("rp3").unwrap().f_vector(), vec![11, 54, 86, 43]);
        assert!(fixture("delta5").is_none());
    }
}
