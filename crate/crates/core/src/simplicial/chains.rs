//! Integral chain complexes of a finite simplicial set.

use std::ops::Deref;

use num_traits::One;

use super::sset::{Simplex, SimplexId, SimplicialSet};
use crate::exactalg::ChainComplex;
use crate::scalar::sign;
use crate::{Chain, Integer, Result};

/// `NC(X)`: nondegenerate simplices, degenerate faces sent to zero.
#[derive(Clone, Debug)]
pub struct NormalizedChains<S> {
    set: S,
    reduced: bool,
}

impl<S: Deref<Target = SimplicialSet>> NormalizedChains<S> {
    pub fn new(set: S) -> Self {
        NormalizedChains { set, reduced: false }
    }

    /// `NC(X)/NC(*)`, with the basepoint vertex dropped; for reduced `X` this
    /// is the kernel of the augmentation.
    pub fn reduced(set: S) -> Result<Self> {
        set.require_pointed()?;
        Ok(NormalizedChains { set, reduced: true })
    }

    fn is_basepoint(&self, id: SimplexId) -> bool {
        self.reduced && Some(id) == self.set.basepoint()
    }

    pub fn set(&self) -> &SimplicialSet {
        &self.set
    }
}

pub fn normalized_chains(x: &SimplicialSet) -> NormalizedChains<&SimplicialSet> {
    NormalizedChains::new(x)
}

impl<S: Deref<Target = SimplicialSet>> ChainComplex for NormalizedChains<S> {
    type Key = SimplexId;

    fn basis(&self, degree: usize) -> Option<Vec<SimplexId>> {
        Some(
            self.set
                .nondegenerate(degree)
                .filter(|&id| !self.is_basepoint(id))
                .collect(),
        )
    }

    fn boundary(&self, degree: usize, key: &SimplexId) -> Chain<SimplexId> {
        let mut out = Chain::zero();
        if degree == 0 {
            return out;
        }
        for i in 0..=degree {
            let face = self.set.stored_face(*key, i);
            if !face.is_degenerate() && !self.is_basepoint(face.base()) {
                out.add_term(face.base(), sign(i));
            }
        }
        out
    }

    fn augmentation(&self, key: &SimplexId) -> Option<Integer> {
        if self.reduced {
            return None;
        }
        Some(if key.dim == 0 { Integer::one() } else { Integer::from(0) })
    }

    fn has_augmentation(&self) -> bool {
        !self.reduced
    }
}

/// `C(X)` (all simplices) through a maximal degree, or the reduced quotient
/// `C(X)/C(*)` in which the basepoint's degeneracies are zero.
#[derive(Clone, Debug)]
pub struct UnnormalizedChains<S> {
    set: S,
    max_degree: usize,
    reduced: bool,
}

impl<S: Deref<Target = SimplicialSet>> UnnormalizedChains<S> {
    pub fn new(set: S, max_degree: usize) -> Self {
        UnnormalizedChains {
            set,
            max_degree,
            reduced: false,
        }
    }

    /// Requires a basepoint.
    pub fn reduced(set: S, max_degree: usize) -> Result<Self> {
        set.require_pointed()?;
        Ok(UnnormalizedChains {
            set,
            max_degree,
            reduced: true,
        })
    }

    pub fn set(&self) -> &SimplicialSet {
        &self.set
    }

    pub fn max_degree(&self) -> usize {
        self.max_degree
    }

    pub fn is_reduced(&self) -> bool {
        self.reduced
    }

    fn is_basepoint(&self, x: &Simplex) -> bool {
        self.reduced && Some(x.base()) == self.set.basepoint()
    }

    /// The alternating face sum, valid in any degree.
    pub fn face_sum(&self, x: &Simplex) -> Chain<Simplex> {
        let mut out = Chain::zero();
        if x.dim() == 0 {
            return out;
        }
        for i in 0..=x.dim() {
            let face = self.set.face(x, i);
            if !self.is_basepoint(&face) {
                out.add_term(face, sign(i));
            }
        }
        out
    }
}

pub fn unnormalized_chains(x: &SimplicialSet, max_degree: usize) -> UnnormalizedChains<&SimplicialSet> {
    UnnormalizedChains::new(x, max_degree)
}

impl<S: Deref<Target = SimplicialSet>> ChainComplex for UnnormalizedChains<S> {
    type Key = Simplex;

    fn basis(&self, degree: usize) -> Option<Vec<Simplex>> {
        if degree > self.max_degree {
            return None;
        }
        let mut all = self.set.simplices(degree);
        all.retain(|x| !self.is_basepoint(x));
        Some(all)
    }

    fn boundary(&self, _degree: usize, key: &Simplex) -> Chain<Simplex> {
        self.face_sum(key)
    }

    fn augmentation(&self, key: &Simplex) -> Option<Integer> {
        if self.reduced {
            return None;
        }
        Some(if key.dim() == 0 {
            Integer::one()
        } else {
            Integer::from(0)
        })
    }

    fn has_augmentation(&self) -> bool {
        !self.reduced
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::complex::augmentation_is_chain_map;
    use crate::exactalg::{d_squared_vanishes, homology_groups};
    use crate::simplicial::sset::{minimal_circle, std_simplex};

    #[test]
    fn boundary_of_a_triangle() {
        let d2 = std_simplex(2);
        let c = normalized_chains(&d2);
        let t = d2.find("[0,1,2]").unwrap();
        let id = |l: &str| d2.find(l).unwrap();
        let expected = Chain::from_terms([
            (id("[1,2]"), 1.into()),
            (id("[0,2]"), (-1).into()),
            (id("[0,1]"), 1.into()),
        ]);
        assert_eq!(c.boundary(2, &t), expected);
    }

    #[test]
    fn circle_chains() {
        let s1 = minimal_circle();
        let n = normalized_chains(&s1);
        assert!(n.boundary(1, &s1.find("e").unwrap()).is_zero());
        assert_eq!(homology_groups(&n, 1).unwrap().betti, 1);
        let u = unnormalized_chains(&s1, 3);
        assert_eq!(u.basis(1).unwrap().len(), 2);
        assert_eq!(u.basis(2).unwrap().len(), 3);
        assert!(d_squared_vanishes(&u, 3));
        assert!(augmentation_is_chain_map(&u));
        let r = UnnormalizedChains::reduced(&s1, 3).unwrap();
        assert_eq!(r.basis(2).unwrap().len(), 2);
    }
}
