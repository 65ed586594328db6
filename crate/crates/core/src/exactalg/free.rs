use std::collections::BTreeMap;
use std::fmt;
use std::hash::Hash;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_traits::{One, Zero};

use crate::scalar::Coefficient;
use crate::Integer;

/// Opaque basis keys: anything hashable and totally ordered.
pub trait BasisKey: Clone + Ord + Hash + fmt::Debug + Send + Sync + 'static {}

impl<T> BasisKey for T where T: Clone + Ord + Hash + fmt::Debug + Send + Sync + 'static {}

/// A basis key that carries its own degree.
pub trait GradedKey: BasisKey {
    fn degree(&self) -> usize;
}

/// Attaches a stored degree to an arbitrary key.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Graded<K> {
    pub degree: usize,
    pub key: K,
}

impl<K> Graded<K> {
    pub fn new(degree: usize, key: K) -> Self {
        Graded { degree, key }
    }
}

impl<K: BasisKey> GradedKey for Graded<K> {
    fn degree(&self) -> usize {
        self.degree
    }
}

impl GradedKey for String {
    fn degree(&self) -> usize {
        0
    }
}

/// A finitely supported linear combination of basis keys.
///
/// Zero coefficients are never stored, so structural equality is equality
/// of elements and the type can itself serve as a basis key (elements of a
/// free abelian group are the generators of its chains).
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FreeElement<K, R = Integer> {
    terms: BTreeMap<K, R>,
}

impl<K: BasisKey, R: Coefficient> Default for FreeElement<K, R> {
    fn default() -> Self {
        Self::zero()
    }
}

impl<K: BasisKey, R: Coefficient> FreeElement<K, R> {
    pub fn zero() -> Self {
        FreeElement { terms: BTreeMap::new() }
    }

    pub fn basis(key: K) -> Self {
        Self::term(key, R::one())
    }

    pub fn term(key: K, coefficient: R) -> Self {
        let mut out = Self::zero();
        out.add_term(key, coefficient);
        out
    }

    pub fn from_terms<I: IntoIterator<Item = (K, R)>>(terms: I) -> Self {
        let mut out = Self::zero();
        for (k, c) in terms {
            out.add_term(k, c);
        }
        out
    }

    pub fn add_term(&mut self, key: K, coefficient: R) {
        if coefficient.is_zero() {
            return;
        }
        match self.terms.get_mut(&key) {
            Some(existing) => {
                let sum = existing.clone() + coefficient;
                if sum.is_zero() {
                    self.terms.remove(&key);
                } else {
                    *existing = sum;
                }
            }
            None => {
                self.terms.insert(key, coefficient);
            }
        }
    }

    pub fn coefficient(&self, key: &K) -> R {
        self.terms.get(key).cloned().unwrap_or_else(R::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Number of basis keys with nonzero coefficient.
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&K, &R)> {
        self.terms.iter()
    }

    pub fn into_terms(self) -> impl Iterator<Item = (K, R)> {
        self.terms.into_iter()
    }

    pub fn support(&self) -> impl Iterator<Item = &K> {
        self.terms.keys()
    }

    /// The single key of a one-term element with coefficient one.
    pub fn as_basis(&self) -> Option<&K> {
        match self.terms.iter().next() {
            Some((k, c)) if self.terms.len() == 1 && c.is_one() => Some(k),
            _ => None,
        }
    }

    pub fn scale(&self, factor: &R) -> Self {
        if factor.is_zero() {
            return Self::zero();
        }
        Self::from_terms(self.terms.iter().map(|(k, c)| (k.clone(), c.clone() * factor.clone())))
    }

    /// Linear extension of a map defined on basis keys.
    pub fn map_linear<L, F>(&self, mut f: F) -> FreeElement<L, R>
    where
        L: BasisKey,
        F: FnMut(&K) -> FreeElement<L, R>,
    {
        let mut out = FreeElement::zero();
        for (k, c) in &self.terms {
            out.add_scaled(&f(k), c);
        }
        out
    }

    /// Relabels keys; colliding keys are summed and `None` sends a key to zero.
    pub fn map_keys<L, F>(&self, mut f: F) -> FreeElement<L, R>
    where
        L: BasisKey,
        F: FnMut(&K) -> Option<L>,
    {
        FreeElement::from_terms(self.terms.iter().filter_map(|(k, c)| f(k).map(|l| (l, c.clone()))))
    }

    pub fn map_coefficients<S, F>(&self, mut f: F) -> FreeElement<K, S>
    where
        S: Coefficient,
        F: FnMut(&R) -> S,
    {
        FreeElement::from_terms(self.terms.iter().map(|(k, c)| (k.clone(), f(c))))
    }

    /// `self += factor * other`.
    pub fn add_scaled(&mut self, other: &Self, factor: &R) {
        if factor.is_zero() {
            return;
        }
        for (k, c) in &other.terms {
            self.add_term(k.clone(), c.clone() * factor.clone());
        }
    }

    /// Keeps only the terms whose key satisfies the predicate.
    pub fn filter<F: FnMut(&K) -> bool>(&self, mut keep: F) -> Self {
        FreeElement {
            terms: self
                .terms
                .iter()
                .filter(|(k, _)| keep(k))
                .map(|(k, c)| (k.clone(), c.clone()))
                .collect(),
        }
    }
}

impl<K: GradedKey, R: Coefficient> FreeElement<K, R> {
    /// The common degree of all terms, `None` for zero or mixed degrees.
    pub fn homogeneous_degree(&self) -> Option<usize> {
        let mut degrees = self.terms.keys().map(GradedKey::degree);
        let first = degrees.next()?;
        degrees.all(|d| d == first).then_some(first)
    }
}

impl<K: BasisKey, R: Coefficient> FromIterator<(K, R)> for FreeElement<K, R> {
    fn from_iter<I: IntoIterator<Item = (K, R)>>(iter: I) -> Self {
        Self::from_terms(iter)
    }
}

impl<K: BasisKey, R: Coefficient> AddAssign<&FreeElement<K, R>> for FreeElement<K, R> {
    fn add_assign(&mut self, rhs: &FreeElement<K, R>) {
        for (k, c) in &rhs.terms {
            self.add_term(k.clone(), c.clone());
        }
    }
}

impl<K: BasisKey, R: Coefficient> SubAssign<&FreeElement<K, R>> for FreeElement<K, R> {
    fn sub_assign(&mut self, rhs: &FreeElement<K, R>) {
        for (k, c) in &rhs.terms {
            self.add_term(k.clone(), -c.clone());
        }
    }
}

impl<K: BasisKey, R: Coefficient> Add for FreeElement<K, R> {
    type Output = Self;
    fn add(mut self, rhs: Self) -> Self {
        self += &rhs;
        self
    }
}

impl<K: BasisKey, R: Coefficient> Add<&FreeElement<K, R>> for &FreeElement<K, R> {
    type Output = FreeElement<K, R>;
    fn add(self, rhs: &FreeElement<K, R>) -> FreeElement<K, R> {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl<K: BasisKey, R: Coefficient> Sub for FreeElement<K, R> {
    type Output = Self;
    fn sub(mut self, rhs: Self) -> Self {
        self -= &rhs;
        self
    }
}

impl<K: BasisKey, R: Coefficient> Sub<&FreeElement<K, R>> for &FreeElement<K, R> {
    type Output = FreeElement<K, R>;
    fn sub(self, rhs: &FreeElement<K, R>) -> FreeElement<K, R> {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl<K: BasisKey, R: Coefficient> Neg for FreeElement<K, R> {
    type Output = Self;
    fn neg(self) -> Self {
        FreeElement {
            terms: self.terms.into_iter().map(|(k, c)| (k, -c)).collect(),
        }
    }
}

impl<K: BasisKey, R: Coefficient> Mul<&R> for &FreeElement<K, R> {
    type Output = FreeElement<K, R>;
    fn mul(self, rhs: &R) -> FreeElement<K, R> {
        self.scale(rhs)
    }
}

impl<K: BasisKey, R: Coefficient> std::iter::Sum for FreeElement<K, R> {
    fn sum<I: Iterator<Item = Self>>(iter: I) -> Self {
        iter.fold(Self::zero(), |acc, x| acc + x)
    }
}

impl<K: fmt::Debug, R: fmt::Display + Zero + One + PartialEq + Neg<Output = R> + Clone> fmt::Debug
    for FreeElement<K, R>
{
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (k, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            if c.is_one() {
                write!(f, "{k:?}")?;
            } else if c.clone() == -R::one() {
                write!(f, "-{k:?}")?;
            } else {
                write!(f, "{c}·{k:?}")?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    type E = FreeElement<u8, i64>;

    #[test]
    fn zero_coefficients_are_pruned() {
        let mut x = E::term(1, 3);
        x.add_term(1, -3);
        assert!(x.is_zero());
        assert_eq!(x, E::zero());
        assert!(E::term(4, 0).is_zero());
    }

    #[test]
    fn linear_map_extension() {
        let x = E::from_terms([(1, 2), (2, -1)]);
        let y = x.map_linear(|k| E::from_terms([(*k, 1), (k + 1, 1)]));
        assert_eq!(y, E::from_terms([(1, 2), (2, 1), (3, -1)]));
    }

    fn element() -> impl Strategy<Value = E> {
        proptest::collection::vec((0u8..6, -5i64..=5), 0..8).prop_map(E::from_terms)
    }

    proptest! {
        #[test]
        fn module_axioms(a in element(), b in element(), c in -4i64..=4) {
            prop_assert_eq!(&a + &b, &b + &a);
            prop_assert_eq!(&a - &a, E::zero());
            prop_assert_eq!((&a + &b).scale(&c), &a.scale(&c) + &b.scale(&c));
            prop_assert!(a.terms().all(|(_, c)| *c != 0));
        }
    }
}
