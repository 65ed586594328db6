//! Tensor powers of graded free modules under the Koszul sign rule.
//!
//! Moving a map of degree `p` past an element of degree `q` costs `(-1)^(pq)`;
//! every operation here that reorders maps and elements applies that sign.

use std::fmt;
use std::ops::{Add, Neg, Sub};

use super::free::{FreeElement, GradedKey};
use crate::scalar::{sign, Coefficient};
use crate::Integer;

#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct TensorElement<K, R = Integer> {
    arity: usize,
    terms: FreeElement<Vec<K>, R>,
}

fn term_degree<K: GradedKey>(factors: &[K]) -> usize {
    factors.iter().map(GradedKey::degree).sum()
}

impl<K: GradedKey, R: Coefficient> TensorElement<K, R> {
    pub fn zero(arity: usize) -> Self {
        TensorElement {
            arity,
            terms: FreeElement::zero(),
        }
    }

    /// The unit of the arity-0 tensor power, `Z`.
    pub fn scalar(value: R) -> Self {
        TensorElement {
            arity: 0,
            terms: FreeElement::term(Vec::new(), value),
        }
    }

    pub fn pure(factors: Vec<K>) -> Self {
        Self::term(factors, R::one())
    }

    pub fn term(factors: Vec<K>, coefficient: R) -> Self {
        TensorElement {
            arity: factors.len(),
            terms: FreeElement::term(factors, coefficient),
        }
    }

    /// Panics if a term has the wrong arity.
    pub fn from_terms<I: IntoIterator<Item = (Vec<K>, R)>>(arity: usize, terms: I) -> Self {
        let terms = FreeElement::from_terms(terms.into_iter().inspect(|(f, _)| {
            assert_eq!(f.len(), arity, "tensor term of the wrong arity");
        }));
        TensorElement { arity, terms }
    }

    pub fn from_element(x: &FreeElement<K, R>) -> Self {
        Self::from_terms(1, x.terms().map(|(k, c)| (vec![k.clone()], c.clone())))
    }

    /// `a ⊗ b`, extended bilinearly.
    pub fn tensor(a: &FreeElement<K, R>, b: &FreeElement<K, R>) -> Self {
        Self::from_element(a).product(&Self::from_element(b))
    }

    /// `x^{⊗n}`; the zeroth power is the scalar 1.
    pub fn power(x: &FreeElement<K, R>, n: usize) -> Self {
        let base = Self::from_element(x);
        (0..n).fold(Self::scalar(R::one()), |acc, _| acc.product(&base))
    }

    /// Juxtaposition `(a_1 ⊗ .. ⊗ a_p) ⊗ (b_1 ⊗ .. ⊗ b_q)`.
    pub fn product(&self, other: &Self) -> Self {
        let mut terms = FreeElement::zero();
        for (f, c) in self.terms.terms() {
            for (g, d) in other.terms.terms() {
                let mut key = f.clone();
                key.extend(g.iter().cloned());
                terms.add_term(key, c.clone() * d.clone());
            }
        }
        TensorElement {
            arity: self.arity + other.arity,
            terms,
        }
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_zero()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<K>, &R)> {
        self.terms.terms()
    }

    pub fn coefficient(&self, factors: &[K]) -> R {
        self.terms.coefficient(&factors.to_vec())
    }

    pub fn add_term(&mut self, factors: Vec<K>, coefficient: R) {
        assert_eq!(factors.len(), self.arity, "tensor term of the wrong arity");
        self.terms.add_term(factors, coefficient);
    }

    pub fn scale(&self, factor: &R) -> Self {
        TensorElement {
            arity: self.arity,
            terms: self.terms.scale(factor),
        }
    }

    /// The total degree shared by all terms, `None` if zero or inhomogeneous.
    pub fn homogeneous_degree(&self) -> Option<usize> {
        let mut degrees = self.terms.support().map(|f| term_degree(f));
        let first = degrees.next()?;
        degrees.all(|d| d == first).then_some(first)
    }

    pub fn map_coefficients<S: Coefficient, F: FnMut(&R) -> S>(&self, f: F) -> TensorElement<K, S> {
        TensorElement {
            arity: self.arity,
            terms: self.terms.map_coefficients(f),
        }
    }

    /// Applies the same degree-0 map to every factor; `None` sends a factor to zero.
    pub fn map_factors<L: GradedKey, F: FnMut(&K) -> Option<L>>(&self, mut f: F) -> TensorElement<L, R> {
        let mut out = TensorElement::zero(self.arity);
        'terms: for (factors, c) in self.terms.terms() {
            let mut key = Vec::with_capacity(factors.len());
            for k in factors {
                match f(k) {
                    Some(l) => key.push(l),
                    None => continue 'terms,
                }
            }
            out.terms.add_term(key, c.clone());
        }
        out
    }

    /// `(f_1 ⊗ .. ⊗ f_n)` applied with Koszul signs; `map_degrees[i]` is the
    /// degree of `f_i` (only its parity matters).
    pub fn apply_factorwise<L, F>(&self, maps: &mut [F], map_degrees: &[usize]) -> TensorElement<L, R>
    where
        L: GradedKey,
        F: FnMut(&K) -> FreeElement<L, R>,
    {
        assert_eq!(maps.len(), self.arity);
        assert_eq!(map_degrees.len(), self.arity);
        let mut out = TensorElement::zero(self.arity);
        for (factors, c) in self.terms.terms() {
            let mut exponent = 0;
            for j in 0..factors.len() {
                for a in &factors[..j] {
                    exponent += map_degrees[j] * a.degree();
                }
            }
            let mut partial = TensorElement::scalar(sign::<R>(exponent) * c.clone());
            for (k, f) in factors.iter().zip(maps.iter_mut()) {
                partial = partial.product(&TensorElement::from_element(&f(k)));
                if partial.is_zero() {
                    break;
                }
            }
            out = out + partial;
        }
        out
    }

    /// Replaces the factor in `slot` by the tensor `f(factor)`, where `f` has
    /// degree `map_degree`. The arity grows by `f`'s output arity minus one.
    pub fn expand_slot<F>(&self, slot: usize, map_degree: usize, mut f: F) -> Self
    where
        F: FnMut(&K) -> TensorElement<K, R>,
    {
        assert!(slot < self.arity);
        let mut out: Option<Self> = None;
        for (factors, c) in self.terms.terms() {
            let before: usize = term_degree(&factors[..slot]);
            let image = f(&factors[slot]);
            let s = sign::<R>(map_degree * before) * c.clone();
            let left = TensorElement::pure(factors[..slot].to_vec());
            let right = TensorElement::pure(factors[slot + 1..].to_vec());
            let piece = left.product(&image).product(&right).scale(&s);
            out = Some(match out {
                Some(acc) => acc + piece,
                None => piece,
            });
        }
        out.unwrap_or_else(|| Self::zero(self.arity))
    }

    /// Koszul-signed differential `Σ ± a_1 ⊗ .. ⊗ d(a_i) ⊗ .. ⊗ a_n`.
    pub fn differential<F: FnMut(&K) -> FreeElement<K, R>>(&self, mut d: F) -> Self {
        let mut out = Self::zero(self.arity);
        for (factors, c) in self.terms.terms() {
            let mut before = 0;
            for i in 0..factors.len() {
                let s = sign::<R>(before) * c.clone();
                for (face, e) in d(&factors[i]).terms() {
                    let mut key = factors.clone();
                    key[i] = face.clone();
                    out.terms.add_term(key, s.clone() * e.clone());
                }
                before += factors[i].degree();
            }
        }
        out
    }

    /// The factor swap `T(a ⊗ b) = (-1)^{|a||b|} b ⊗ a` on an arity-2 tensor.
    pub fn swap(&self) -> Self {
        assert_eq!(self.arity, 2, "swap needs arity 2");
        let terms = self.terms.terms().map(|(f, c)| {
            let s = sign::<R>(f[0].degree() * f[1].degree());
            (vec![f[1].clone(), f[0].clone()], s * c.clone())
        });
        Self::from_terms(2, terms)
    }

    /// Pairs `u_1 ⊗ .. ⊗ u_n` (cochains given as functions on basis keys, of
    /// degrees `cochain_degrees`) against this tensor with Koszul signs.
    pub fn evaluate<F>(&self, cochains: &mut [F], cochain_degrees: &[usize]) -> R
    where
        F: FnMut(&K) -> R,
    {
        assert_eq!(cochains.len(), self.arity);
        let mut total = R::zero();
        for (factors, c) in self.terms.terms() {
            if factors.iter().zip(cochain_degrees).any(|(a, &d)| a.degree() != d) {
                continue;
            }
            let mut exponent = 0;
            for j in 0..factors.len() {
                for a in &factors[..j] {
                    exponent += cochain_degrees[j] * a.degree();
                }
            }
            let mut value = sign::<R>(exponent) * c.clone();
            for (k, u) in factors.iter().zip(cochains.iter_mut()) {
                value = value * u(k);
                if value.is_zero() {
                    break;
                }
            }
            total = total + value;
        }
        total
    }
}

impl<K: GradedKey, R: Coefficient> Add for TensorElement<K, R> {
    type Output = Self;
    fn add(mut self, rhs: Self) -> Self {
        assert_eq!(self.arity, rhs.arity, "adding tensors of different arity");
        self.terms += &rhs.terms;
        self
    }
}

impl<K: GradedKey, R: Coefficient> Sub for TensorElement<K, R> {
    type Output = Self;
    fn sub(mut self, rhs: Self) -> Self {
        assert_eq!(self.arity, rhs.arity, "subtracting tensors of different arity");
        self.terms -= &rhs.terms;
        self
    }
}

impl<K: GradedKey, R: Coefficient> Neg for TensorElement<K, R> {
    type Output = Self;
    fn neg(self) -> Self {
        TensorElement {
            arity: self.arity,
            terms: -self.terms,
        }
    }
}

impl<K: GradedKey, R: Coefficient> fmt::Debug for TensorElement<K, R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (factors, c)) in self.terms.terms().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            if !c.is_one() {
                write!(f, "{c}·")?;
            }
            let parts: Vec<String> = factors.iter().map(|k| format!("{k:?}")).collect();
            write!(f, "{}", parts.join("⊗"))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::free::Graded;

    type K = Graded<&'static str>;
    type T = TensorElement<K, i64>;

    fn g(d: usize, s: &'static str) -> K {
        Graded::new(d, s)
    }

    #[test]
    fn swap_is_an_involution_with_signs() {
        let t = T::pure(vec![g(1, "a"), g(1, "b")]);
        assert_eq!(t.swap(), T::term(vec![g(1, "b"), g(1, "a")], -1));
        assert_eq!(t.swap().swap(), t);
        let even = T::pure(vec![g(2, "a"), g(1, "b")]);
        assert_eq!(even.swap(), T::pure(vec![g(1, "b"), g(2, "a")]));
    }

    #[test]
    fn differential_uses_koszul_signs() {
        let d = |k: &K| match k.key {
            "a" => FreeElement::basis(g(0, "x")),
            "b" => FreeElement::basis(g(0, "y")),
            _ => FreeElement::zero(),
        };
        let t = T::pure(vec![g(1, "a"), g(1, "b")]);
        let dt = t.differential(d);
        let expected = T::pure(vec![g(0, "x"), g(1, "b")]) - T::pure(vec![g(1, "a"), g(0, "y")]);
        assert_eq!(dt, expected);
    }

    #[test]
    fn evaluation_sign() {
        // (u ⊗ v)(a ⊗ b) = (-1)^{|v||a|} u(a) v(b)
        let t = T::pure(vec![g(1, "a"), g(1, "b")]);
        let mut cochains = [|_: &K| 1i64, |_: &K| 1i64];
        assert_eq!(t.evaluate(&mut cochains, &[1, 1]), -1);
    }

    #[test]
    fn powers() {
        let x = FreeElement::from_terms([(g(0, "b"), 2i64)]);
        let p = T::power(&x, 2);
        assert_eq!(p, T::term(vec![g(0, "b"), g(0, "b")], 4));
        assert_eq!(T::power(&x, 0), T::scalar(1));
    }
}
