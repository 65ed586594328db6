//! The graded Hom complex between two chain complexes.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use super::complex::ChainComplex;
use super::free::{BasisKey, Graded};
use super::tensor::TensorElement;
use crate::scalar::sign;
use crate::{Chain, Error, Integer, Result};

pub type ComplexRef<K> = Arc<dyn ChainComplex<Key = K> + Send + Sync>;

type ComponentFn<K, L> = Arc<dyn Fn(usize, &K) -> Chain<L> + Send + Sync>;

/// A homogeneous element of `Hom(A, B)`: a family of maps `A_n -> B_{n+d}`.
///
/// Components are evaluated on demand, so the source may be lazily enumerated.
#[derive(Clone)]
pub struct GradedHomElement<K: BasisKey, L: BasisKey> {
    source: ComplexRef<K>,
    target: ComplexRef<L>,
    degree: i64,
    map: ComponentFn<K, L>,
}

fn parity(d: i64) -> usize {
    d.rem_euclid(2) as usize
}

impl<K: BasisKey, L: BasisKey> GradedHomElement<K, L> {
    /// `map(n, key)` is the image of a basis key of degree `n`.
    pub fn new<F>(source: ComplexRef<K>, target: ComplexRef<L>, degree: i64, map: F) -> Self
    where
        F: Fn(usize, &K) -> Chain<L> + Send + Sync + 'static,
    {
        GradedHomElement {
            source,
            target,
            degree,
            map: Arc::new(map),
        }
    }

    pub fn zero(source: ComplexRef<K>, target: ComplexRef<L>, degree: i64) -> Self {
        Self::new(source, target, degree, |_, _| Chain::zero())
    }

    /// A map given by a finite table; keys missing from the table go to zero.
    pub fn from_table(source: ComplexRef<K>, target: ComplexRef<L>, degree: i64, table: BTreeMap<K, Chain<L>>) -> Self {
        Self::new(source, target, degree, move |_, k| {
            table.get(k).cloned().unwrap_or_default()
        })
    }

    pub fn degree(&self) -> i64 {
        self.degree
    }

    pub fn source(&self) -> &ComplexRef<K> {
        &self.source
    }

    pub fn target(&self) -> &ComplexRef<L> {
        &self.target
    }

    /// Image of a basis key of degree `n`; zero whenever `n + d < 0`.
    pub fn apply(&self, n: usize, key: &K) -> Chain<L> {
        if n as i64 + self.degree < 0 {
            return Chain::zero();
        }
        (self.map)(n, key)
    }

    pub fn apply_chain(&self, n: usize, chain: &Chain<K>) -> Chain<L> {
        chain.map_linear(|k| self.apply(n, k))
    }

    /// Like [`apply`](Self::apply), but rejects keys that the source does not
    /// list in degree `n`.
    pub fn apply_checked(&self, n: usize, key: &K) -> Result<Chain<L>> {
        if let Some(basis) = self.source.basis(n) {
            if !basis.contains(key) {
                return Err(Error::DegreeMismatch(format!(
                    "{key:?} is not a basis key of degree {n}"
                )));
            }
        }
        Ok(self.apply(n, key))
    }

    pub fn scale(&self, factor: Integer) -> Self {
        let map = self.map.clone();
        Self::new(self.source.clone(), self.target.clone(), self.degree, move |n, k| {
            map(n, k).scale(&factor)
        })
    }

    /// Sum of two maps of the same degree.
    pub fn try_add(&self, other: &Self) -> Result<Self> {
        if self.degree != other.degree {
            return Err(Error::DegreeMismatch(format!(
                "cannot add maps of degree {} and {}",
                self.degree, other.degree
            )));
        }
        let (f, g) = (self.map.clone(), other.map.clone());
        let degree = self.degree;
        Ok(Self::new(
            self.source.clone(),
            self.target.clone(),
            degree,
            move |n, k| {
                if n as i64 + degree < 0 {
                    Chain::zero()
                } else {
                    f(n, k) + g(n, k)
                }
            },
        ))
    }

    /// The composite `self ∘ inner` (no sign: composition is not a reordering).
    pub fn compose<J: BasisKey>(&self, inner: &GradedHomElement<J, K>) -> GradedHomElement<J, L> {
        let (outer, inner_map) = (self.clone(), inner.clone());
        GradedHomElement::new(
            inner.source.clone(),
            self.target.clone(),
            self.degree + inner.degree,
            move |n, k| {
                let mid = n as i64 + inner_map.degree;
                if mid < 0 {
                    return Chain::zero();
                }
                outer.apply_chain(mid as usize, &inner_map.apply(n, k))
            },
        )
    }

    /// Agreement on every basis key of degrees `0..=top`.
    pub fn agrees_with(&self, other: &Self, top: usize) -> Result<bool> {
        for n in 0..=top {
            for k in self.source.basis(n).ok_or(Error::InfiniteBasis(n))? {
                if self.apply(n, &k) != other.apply(n, &k) {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    pub fn vanishes_through(&self, top: usize) -> Result<bool> {
        for n in 0..=top {
            for k in self.source.basis(n).ok_or(Error::InfiniteBasis(n))? {
                if !self.apply(n, &k).is_zero() {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }
}

impl<K: BasisKey> GradedHomElement<K, K> {
    pub fn identity(complex: ComplexRef<K>) -> Self {
        Self::new(complex.clone(), complex, 0, |_, k| Chain::basis(k.clone()))
    }

    /// The differential of the complex, as a map of degree −1.
    pub fn differential(complex: ComplexRef<K>) -> Self {
        let d = complex.clone();
        Self::new(complex.clone(), complex, -1, move |n, k| d.boundary(n, k))
    }
}

/// `∂f = f∘∂_A − (−1)^{deg f} ∂_B∘f`, a map of degree `deg f − 1`.
pub fn hom_differential<K: BasisKey, L: BasisKey>(f: &GradedHomElement<K, L>) -> GradedHomElement<K, L> {
    let g = f.clone();
    let s: Integer = sign(parity(f.degree));
    GradedHomElement::new(f.source.clone(), f.target.clone(), f.degree - 1, move |n, k| {
        let mut out = if n == 0 {
            Chain::zero()
        } else {
            g.apply_chain(n - 1, &g.source.boundary(n, k))
        };
        let image_degree = n as i64 + g.degree;
        if image_degree >= 1 {
            let image = g.apply(n, k);
            let boundary = g.target.boundary_of(image_degree as usize, &image);
            out.add_scaled(&boundary, &-s.clone());
        }
        out
    })
}

/// `(f ⊗ g)(a ⊗ b) = (−1)^{deg g · deg a} f(a) ⊗ g(b)`, extended bilinearly.
///
/// Each factor carries its degree; a factor that the corresponding source
/// does not list in that degree is a [`Error::DegreeMismatch`].
pub fn koszul_apply<K: BasisKey, L: BasisKey>(
    f: &GradedHomElement<K, L>,
    g: &GradedHomElement<K, L>,
    x: &TensorElement<Graded<K>>,
) -> Result<TensorElement<Graded<L>>> {
    if x.arity() != 2 {
        return Err(Error::ArityMismatch {
            expected: 2,
            found: x.arity(),
        });
    }
    let mut out = TensorElement::zero(2);
    for (factors, c) in x.terms() {
        let (a, b) = (&factors[0], &factors[1]);
        let fa = f.apply_checked(a.degree, &a.key)?;
        let gb = g.apply_checked(b.degree, &b.key)?;
        if fa.is_zero() || gb.is_zero() {
            continue;
        }
        let s: Integer = sign(parity(g.degree) * a.degree);
        let da = (a.degree as i64 + f.degree) as usize;
        let db = (b.degree as i64 + g.degree) as usize;
        let left = fa.map_keys(|k| Some(Graded::new(da, k.clone())));
        let right = gb.map_keys(|k| Some(Graded::new(db, k.clone())));
        out = out + TensorElement::tensor(&left, &right).scale(&(s * c.clone()));
    }
    Ok(out)
}

impl<K: BasisKey, L: BasisKey> fmt::Debug for GradedHomElement<K, L> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("GradedHomElement")
            .field("degree", &self.degree)
            .finish_non_exhaustive()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::complex::FiniteComplex;

    fn interval() -> ComplexRef<&'static str> {
        let mut c = FiniteComplex::new(vec![vec!["0", "1"], vec!["01"]]);
        c.set_boundary("01", Chain::from_terms([("1", 1.into()), ("0", (-1).into())]));
        Arc::new(c)
    }

    #[test]
    fn chain_maps_are_cycles() {
        let c = interval();
        let id = GradedHomElement::identity(c.clone());
        assert!(hom_differential(&id).vanishes_through(1).unwrap());
        let d = GradedHomElement::differential(c);
        assert!(hom_differential(&d).vanishes_through(1).unwrap());
    }

    #[test]
    fn degree_one_map_on_the_interval() {
        let c = interval();
        let table = BTreeMap::from([("0", Chain::basis("01"))]);
        let f = GradedHomElement::from_table(c.clone(), c, 1, table);
        let df = hom_differential(&f);
        assert_eq!(df.degree(), 0);
        let expected: Chain<&str> = Chain::from_terms([("1", 1.into()), ("0", (-1).into())]);
        assert_eq!(df.apply(0, &"0"), expected);
        assert!(df.apply(0, &"1").is_zero());
        // on the edge only the f∘∂ term survives: f(∂[01]) = −[01]
        assert_eq!(df.apply(1, &"01"), Chain::term("01", (-1).into()));
    }

    #[test]
    fn odd_maps_pick_up_koszul_signs() {
        let c = interval();
        let table = BTreeMap::from([("0", Chain::basis("01")), ("1", Chain::basis("01"))]);
        let g = GradedHomElement::from_table(c.clone(), c.clone(), 1, table);
        let f = GradedHomElement::identity(c);
        let x = TensorElement::pure(vec![Graded::new(1, "01"), Graded::new(0, "0")]);
        let y = koszul_apply(&f, &g, &x).unwrap();
        assert_eq!(
            y,
            TensorElement::term(vec![Graded::new(1, "01"), Graded::new(1, "01")], (-1).into())
        );
        let bad = TensorElement::pure(vec![Graded::new(0, "01"), Graded::new(0, "0")]);
        assert!(matches!(koszul_apply(&f, &g, &bad), Err(Error::DegreeMismatch(_))));
    }
}
