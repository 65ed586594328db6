use std::collections::{BTreeMap, HashMap};

use num_traits::Zero;

use super::free::BasisKey;
use super::matrix::Matrix;
use crate::{Chain, Error, Integer, Result};

/// A nonnegatively graded chain complex of free abelian groups.
pub trait ChainComplex {
    type Key: BasisKey;

    /// Basis in `degree`, or `None` if the degree is not finitely enumerated.
    fn basis(&self, degree: usize) -> Option<Vec<Self::Key>>;

    /// Boundary of a basis key of the given degree.
    fn boundary(&self, degree: usize, key: &Self::Key) -> Chain<Self::Key>;

    fn augmentation(&self, _key: &Self::Key) -> Option<Integer> {
        None
    }

    fn has_augmentation(&self) -> bool {
        false
    }

    fn boundary_of(&self, degree: usize, chain: &Chain<Self::Key>) -> Chain<Self::Key> {
        chain.map_linear(|k| self.boundary(degree, k))
    }
}

impl<C: ChainComplex + ?Sized> ChainComplex for &C {
    type Key = C::Key;
    fn basis(&self, degree: usize) -> Option<Vec<Self::Key>> {
        (**self).basis(degree)
    }
    fn boundary(&self, degree: usize, key: &Self::Key) -> Chain<Self::Key> {
        (**self).boundary(degree, key)
    }
    fn augmentation(&self, key: &Self::Key) -> Option<Integer> {
        (**self).augmentation(key)
    }
    fn has_augmentation(&self) -> bool {
        (**self).has_augmentation()
    }
}

/// Matrix of `d: C_n -> C_{n-1}` in the enumerated bases (rows index `C_{n-1}`).
pub fn boundary_matrix<C: ChainComplex>(complex: &C, n: usize) -> Result<Matrix<Integer>> {
    let source = complex.basis(n).ok_or(Error::InfiniteBasis(n))?;
    if n == 0 {
        return Ok(Matrix::zeros(0, source.len()));
    }
    let target = complex.basis(n - 1).ok_or(Error::InfiniteBasis(n - 1))?;
    let index: HashMap<&C::Key, usize> = target.iter().enumerate().map(|(i, k)| (k, i)).collect();
    let mut m = Matrix::zeros(target.len(), source.len());
    for (j, key) in source.iter().enumerate() {
        for (face, c) in complex.boundary(n, key).terms() {
            let &i = index.get(face).ok_or(Error::NotClosed { degree: n })?;
            m.set(i, j, c.clone());
        }
    }
    Ok(m)
}

/// First basis key (if any) in degrees `1..=top` whose boundary has nonzero boundary.
pub fn find_d_squared_failure<C: ChainComplex>(complex: &C, top: usize) -> Option<(usize, C::Key)> {
    for n in 2..=top {
        for key in complex.basis(n)? {
            let dd = complex.boundary_of(n - 1, &complex.boundary(n, &key));
            if !dd.is_zero() {
                return Some((n, key));
            }
        }
    }
    None
}

/// Checks `d∘d = 0` on every basis key through degree `top`.
pub fn d_squared_vanishes<C: ChainComplex>(complex: &C, top: usize) -> bool {
    find_d_squared_failure(complex, top).is_none()
}

/// Checks `ε∘d = 0` on degree-1 keys (vacuous without an augmentation).
pub fn augmentation_is_chain_map<C: ChainComplex>(complex: &C) -> bool {
    if !complex.has_augmentation() {
        return true;
    }
    let Some(keys) = complex.basis(1) else {
        return true;
    };
    keys.iter().all(|k| {
        let total = complex.boundary(1, k).terms().fold(Integer::zero(), |acc, (face, c)| {
            acc + c.clone() * complex.augmentation(face).unwrap_or_else(Integer::zero)
        });
        total.is_zero()
    })
}

/// An explicitly stored complex with finitely many basis keys per degree.
#[derive(Clone, Debug)]
pub struct FiniteComplex<K: BasisKey> {
    basis: Vec<Vec<K>>,
    boundary: BTreeMap<K, Chain<K>>,
    augmentation: Option<BTreeMap<K, Integer>>,
}

impl<K: BasisKey> FiniteComplex<K> {
    /// Basis keys by degree; all boundaries start at zero.
    pub fn new(basis: Vec<Vec<K>>) -> Self {
        FiniteComplex {
            basis,
            boundary: BTreeMap::new(),
            augmentation: None,
        }
    }

    /// The complex concentrated in one degree with the given rank.
    pub fn concentrated(degree: usize, keys: Vec<K>) -> Self {
        let mut basis = vec![Vec::new(); degree];
        basis.push(keys);
        Self::new(basis)
    }

    pub fn set_boundary(&mut self, key: K, value: Chain<K>) {
        self.boundary.insert(key, value);
    }

    pub fn set_augmentation(&mut self, values: BTreeMap<K, Integer>) {
        self.augmentation = Some(values);
    }

    pub fn top_degree(&self) -> usize {
        self.basis.len().saturating_sub(1)
    }

    /// Copies degrees `0..=top` of any complex with finite bases there.
    pub fn materialize<C: ChainComplex<Key = K>>(complex: &C, top: usize) -> Result<Self> {
        let mut basis = Vec::new();
        for n in 0..=top {
            basis.push(complex.basis(n).ok_or(Error::InfiniteBasis(n))?);
        }
        let mut out = Self::new(basis);
        for n in 1..=top {
            for key in out.basis[n].clone() {
                let b = complex.boundary(n, &key);
                out.set_boundary(key, b);
            }
        }
        if complex.has_augmentation() {
            out.augmentation = Some(
                out.basis[0]
                    .iter()
                    .map(|k| (k.clone(), complex.augmentation(k).unwrap_or_else(Integer::zero)))
                    .collect(),
            );
        }
        Ok(out)
    }
}

impl<K: BasisKey> ChainComplex for FiniteComplex<K> {
    type Key = K;

    fn basis(&self, degree: usize) -> Option<Vec<K>> {
        Some(self.basis.get(degree).cloned().unwrap_or_default())
    }

    fn boundary(&self, _degree: usize, key: &K) -> Chain<K> {
        self.boundary.get(key).cloned().unwrap_or_default()
    }

    fn augmentation(&self, key: &K) -> Option<Integer> {
        self.augmentation
            .as_ref()
            .map(|a| a.get(key).cloned().unwrap_or_else(Integer::zero))
    }

    fn has_augmentation(&self) -> bool {
        self.augmentation.is_some()
    }
}
