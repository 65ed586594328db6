//! Simplicial objects whose levels are produced on demand.
//!
//! `Z̃X` is infinite as a set in every positive level, so nothing here
//! enumerates a level: faces and degeneracies are evaluated element by element.

use std::collections::BTreeSet;
use std::ops::Deref;

use super::sset::{Simplex, SimplicialSet, SimplicialSetMap};
use crate::exactalg::{BasisKey, ChainComplex, Graded};
use crate::scalar::sign;
use crate::{Chain, Error, Result};

/// A pointed simplicial set given by element-level evaluators.
pub trait PointedSimplicialObject {
    type Element: BasisKey;

    fn face(&self, level: usize, i: usize, x: &Self::Element) -> Self::Element;
    fn degeneracy(&self, level: usize, i: usize, x: &Self::Element) -> Self::Element;
    fn basepoint(&self, level: usize) -> Self::Element;
}

/// A simplicial abelian group that is free on generators in each level and
/// whose faces and degeneracies are homomorphisms given on generators. The
/// basepoint is zero.
pub trait LazySimplicialAbGroup {
    type Generator: BasisKey;

    fn generator_face(&self, level: usize, i: usize, g: &Self::Generator) -> Chain<Self::Generator>;
    fn generator_degeneracy(&self, level: usize, i: usize, g: &Self::Generator) -> Chain<Self::Generator>;

    fn face(&self, level: usize, i: usize, x: &Chain<Self::Generator>) -> Chain<Self::Generator> {
        x.map_linear(|g| self.generator_face(level, i, g))
    }

    fn degeneracy(&self, level: usize, i: usize, x: &Chain<Self::Generator>) -> Chain<Self::Generator> {
        x.map_linear(|g| self.generator_degeneracy(level, i, g))
    }
}

impl<A: LazySimplicialAbGroup + ?Sized> LazySimplicialAbGroup for &A {
    type Generator = A::Generator;
    fn generator_face(&self, level: usize, i: usize, g: &Self::Generator) -> Chain<Self::Generator> {
        (**self).generator_face(level, i, g)
    }
    fn generator_degeneracy(&self, level: usize, i: usize, g: &Self::Generator) -> Chain<Self::Generator> {
        (**self).generator_degeneracy(level, i, g)
    }
}

/// The underlying pointed simplicial set of a simplicial abelian group.
#[derive(Clone, Debug)]
pub struct Underlying<A>(pub A);

impl<A: LazySimplicialAbGroup> PointedSimplicialObject for Underlying<A> {
    type Element = Chain<A::Generator>;

    fn face(&self, level: usize, i: usize, x: &Self::Element) -> Self::Element {
        self.0.face(level, i, x)
    }
    fn degeneracy(&self, level: usize, i: usize, x: &Self::Element) -> Self::Element {
        self.0.degeneracy(level, i, x)
    }
    fn basepoint(&self, _level: usize) -> Self::Element {
        Chain::zero()
    }
}

/// A pointed finite simplicial set, viewed element-wise.
#[derive(Clone, Debug)]
pub struct PointedSet<S> {
    set: S,
    base: Simplex,
}

impl<S: Deref<Target = SimplicialSet>> PointedSet<S> {
    pub fn new(set: S) -> Result<Self> {
        let b = set.require_pointed()?;
        Ok(PointedSet {
            set,
            base: Simplex::constant(b, 0),
        })
    }

    pub fn set(&self) -> &SimplicialSet {
        &self.set
    }
}

impl<S: Deref<Target = SimplicialSet>> PointedSimplicialObject for PointedSet<S> {
    type Element = Simplex;

    fn face(&self, _level: usize, i: usize, x: &Simplex) -> Simplex {
        self.set.face(x, i)
    }
    fn degeneracy(&self, _level: usize, i: usize, x: &Simplex) -> Simplex {
        self.set.degeneracy(x, i)
    }
    fn basepoint(&self, level: usize) -> Simplex {
        Simplex::constant(self.base.base(), level)
    }
}

/// `Z̃S = ZS/Z*`: free on the non-basepoint elements of each level.
#[derive(Clone, Debug)]
pub struct FreeAbelianization<S> {
    inner: S,
}

impl<S: PointedSimplicialObject> FreeAbelianization<S> {
    pub fn new(inner: S) -> Self {
        FreeAbelianization { inner }
    }

    pub fn inner(&self) -> &S {
        &self.inner
    }

    /// The class `[x]` of an element: zero for the basepoint.
    pub fn generator(&self, level: usize, x: &S::Element) -> Chain<S::Element> {
        if *x == self.inner.basepoint(level) {
            Chain::zero()
        } else {
            Chain::basis(x.clone())
        }
    }
}

impl<S: PointedSimplicialObject> LazySimplicialAbGroup for FreeAbelianization<S> {
    type Generator = S::Element;

    fn generator_face(&self, level: usize, i: usize, g: &S::Element) -> Chain<S::Element> {
        self.generator(level - 1, &self.inner.face(level, i, g))
    }

    fn generator_degeneracy(&self, level: usize, i: usize, g: &S::Element) -> Chain<S::Element> {
        self.generator(level + 1, &self.inner.degeneracy(level, i, g))
    }
}

pub type ReducedFreeAbelian<'a> = FreeAbelianization<PointedSet<&'a SimplicialSet>>;

/// `Z̃X` for a pointed, reduced simplicial set.
pub fn free_abelianization(x: &SimplicialSet) -> Result<ReducedFreeAbelian<'_>> {
    x.require_reduced()?;
    Ok(FreeAbelianization::new(PointedSet::new(x)?))
}

/// The Hurewicz map `h: X -> Z̃X`, `σ ↦ [σ]`.
#[derive(Clone, Debug)]
pub struct Hurewicz<'a> {
    target: FreeAbelianization<PointedSet<&'a SimplicialSet>>,
}

/// The Hurewicz map `X -> Z̃X`. Needs only a basepoint, not a reduced `X`.
pub fn hurewicz(x: &SimplicialSet) -> Result<Hurewicz<'_>> {
    Ok(Hurewicz {
        target: FreeAbelianization::new(PointedSet::new(x)?),
    })
}

impl<'a> Hurewicz<'a> {
    pub fn target(&self) -> &FreeAbelianization<PointedSet<&'a SimplicialSet>> {
        &self.target
    }

    pub fn apply(&self, x: &Simplex) -> Chain<Simplex> {
        self.target.generator(x.dim(), x)
    }

    /// Checks `h d_i = d_i h` and `h s_i = s_i h` on every simplex of
    /// dimension at most `max_level`.
    pub fn check_simplicial(&self, max_level: usize) -> Result<()> {
        let set = self.target.inner().set();
        for n in 0..=max_level {
            for x in set.simplices(n) {
                let hx = self.apply(&x);
                for i in 0..=n {
                    if n > 0 && self.apply(&set.face(&x, i)) != self.target.face(n, i, &hx) {
                        return Err(Error::InvalidArgument(format!("h does not commute with d{i} on {x:?}")));
                    }
                    if self.apply(&set.degeneracy(&x, i)) != self.target.degeneracy(n, i, &hx) {
                        return Err(Error::InvalidArgument(format!("h does not commute with s{i} on {x:?}")));
                    }
                }
            }
        }
        Ok(())
    }
}

/// `Z̃f: Z̃X -> Z̃Y` for a pointed simplicial map `f`.
pub fn induced_map(f: &SimplicialSetMap, target: &SimplicialSet, x: &Chain<Simplex>) -> Chain<Simplex> {
    let base = target.basepoint();
    x.map_keys(|s| {
        let y = f.apply(s);
        (Some(y.base()) != base).then_some(y)
    })
}

/// A finitely generated piece of the chain complex `C(A)` of the underlying
/// set of a lazy simplicial abelian group: every element is a basis key, and
/// the zero element (the basepoint) is dropped.
#[derive(Clone, Debug)]
pub struct LazyChains<A: LazySimplicialAbGroup> {
    group: A,
    registered: Vec<Graded<Chain<A::Generator>>>,
    basis: Vec<Vec<Graded<Chain<A::Generator>>>>,
}

/// Registers elements of `A` (with their levels) as basis keys of `C(A)`; the
/// basis is closed under faces so that the result is a finite subcomplex.
pub fn chains_of_lazy<A: LazySimplicialAbGroup>(
    group: A,
    keys: Vec<(usize, Chain<A::Generator>)>,
) -> Result<LazyChains<A>> {
    let mut seen = BTreeSet::new();
    let mut registered = Vec::new();
    for (level, element) in keys {
        if element.is_zero() {
            return Err(Error::InvalidArgument("the zero element is not a basis key".into()));
        }
        let key = Graded::new(level, element);
        if !seen.insert(key.clone()) {
            return Err(Error::InvalidArgument(format!("duplicate key {key:?}")));
        }
        registered.push(key);
    }
    let top = registered.iter().map(|k| k.degree).max().unwrap_or(0);
    let mut levels: Vec<BTreeSet<Chain<A::Generator>>> = vec![BTreeSet::new(); top + 1];
    for k in &registered {
        levels[k.degree].insert(k.key.clone());
    }
    for n in (1..=top).rev() {
        let faces: Vec<_> = levels[n]
            .iter()
            .flat_map(|x| (0..=n).map(|i| group.face(n, i, x)).collect::<Vec<_>>())
            .filter(|f| !f.is_zero())
            .collect();
        levels[n - 1].extend(faces);
    }
    let basis = levels
        .into_iter()
        .enumerate()
        .map(|(n, l)| l.into_iter().map(|x| Graded::new(n, x)).collect())
        .collect();
    Ok(LazyChains {
        group,
        registered,
        basis,
    })
}

impl<A: LazySimplicialAbGroup> LazyChains<A> {
    pub fn registered(&self) -> &[Graded<Chain<A::Generator>>] {
        &self.registered
    }

    pub fn group(&self) -> &A {
        &self.group
    }
}

impl<A: LazySimplicialAbGroup> ChainComplex for LazyChains<A> {
    type Key = Graded<Chain<A::Generator>>;

    fn basis(&self, degree: usize) -> Option<Vec<Self::Key>> {
        Some(self.basis.get(degree).cloned().unwrap_or_default())
    }

    fn boundary(&self, degree: usize, key: &Self::Key) -> Chain<Self::Key> {
        let mut out = Chain::zero();
        if degree == 0 {
            return out;
        }
        for i in 0..=degree {
            let face = self.group.face(degree, i, &key.key);
            if !face.is_zero() {
                out.add_term(Graded::new(degree - 1, face), sign(i));
            }
        }
        out
    }
}
