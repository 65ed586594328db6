//! Symmetric groups, the operad of permutations, and the bar resolution.
//!
//! A [`Permutation`] of degree `n` is stored in one-line notation, 0-based:
//! entry `i` is the image of `i`. As an action on sequences, element `i`
//! moves to position `π(i)`, so the arrangement produced by `π` is `π⁻¹`
//! read in one-line notation.

use std::fmt;

use crate::exactalg::{ChainComplex, FreeElement, GradedKey};
use crate::scalar::sign;
use crate::{Chain, Error, Integer, Result};

#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Permutation(Vec<usize>);

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation((0..n).collect())
    }

    /// From 0-based images.
    pub fn new(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &i in &images {
            if i >= n || std::mem::replace(&mut seen[i], true) {
                return Err(Error::InvalidPermutation(images));
            }
        }
        Ok(Permutation(images))
    }

    /// From 1-based one-line notation, as usually written.
    pub fn from_one_line(images: &[usize]) -> Result<Self> {
        if images.contains(&0) {
            return Err(Error::InvalidPermutation(images.to_vec()));
        }
        Self::new(images.iter().map(|&i| i - 1).collect())
    }

    /// The transposition of `a` and `b` (0-based).
    pub fn transposition(n: usize, a: usize, b: usize) -> Self {
        let mut p = Self::identity(n);
        p.0.swap(a, b);
        p
    }

    /// The generator `T = (1 2)` of `S_2`.
    pub fn swap() -> Self {
        Self::transposition(2, 0, 1)
    }

    pub fn degree(&self) -> usize {
        self.0.len()
    }

    pub fn apply(&self, i: usize) -> usize {
        self.0[i]
    }

    pub fn images(&self) -> &[usize] {
        &self.0
    }

    pub fn one_line(&self) -> Vec<usize> {
        self.0.iter().map(|i| i + 1).collect()
    }

    /// The sequence `(1..n)` after moving each element `i` to position `π(i)`.
    pub fn arrangement(&self) -> Vec<usize> {
        self.inverse().one_line()
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().enumerate().all(|(i, &j)| i == j)
    }

    /// `self ∘ inner`: apply `inner` first.
    pub fn compose(&self, inner: &Permutation) -> Permutation {
        assert_eq!(
            self.degree(),
            inner.degree(),
            "composing permutations of different degree"
        );
        Permutation(inner.0.iter().map(|&i| self.0[i]).collect())
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.degree()];
        for (i, &j) in self.0.iter().enumerate() {
            inv[j] = i;
        }
        Permutation(inv)
    }

    /// Block sum `self ⊞ other`, acting on the first block and then the second.
    pub fn juxtapose(&self, other: &Permutation) -> Permutation {
        let n = self.degree();
        Permutation(self.0.iter().copied().chain(other.0.iter().map(|&i| i + n)).collect())
    }

    /// All permutations of degree `n`, in lexicographic order.
    pub fn all(n: usize) -> Vec<Permutation> {
        let mut out = Vec::new();
        let mut current: Vec<usize> = (0..n).collect();
        loop {
            out.push(Permutation(current.clone()));
            // next lexicographic permutation
            let Some(i) = (1..n).rev().find(|&i| current[i - 1] < current[i]) else {
                return out;
            };
            let j = (i..n)
                .rev()
                .find(|&j| current[j] > current[i - 1])
                .expect("successor exists");
            current.swap(i - 1, j);
            current[i..].reverse();
        }
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.one_line().iter().map(usize::to_string).collect();
        write!(f, "[{}]", parts.join(" "))
    }
}

/// `σ⟨k_1..k_n⟩`: moves the `n` consecutive blocks of sizes `k_i` as `σ`
/// moves `1..n`; blocks may be empty.
pub fn block_perm(sizes: &[usize], sigma: &Permutation) -> Result<Permutation> {
    if sizes.len() != sigma.degree() {
        return Err(Error::ArityMismatch {
            expected: sigma.degree(),
            found: sizes.len(),
        });
    }
    let n = sizes.len();
    let inv = sigma.inverse();
    // start of the slot that block `inv[s]` occupies
    let mut slot_start = vec![0; n];
    let mut offset = 0;
    for s in 0..n {
        slot_start[inv.apply(s)] = offset;
        offset += sizes[inv.apply(s)];
    }
    let mut images = Vec::with_capacity(offset);
    for (b, &size) in sizes.iter().enumerate() {
        images.extend((0..size).map(|j| slot_start[b] + j));
    }
    Ok(Permutation(images))
}

/// An element of the group ring `Z S_n`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct GroupRingElement {
    degree: usize,
    terms: FreeElement<Permutation>,
}

impl GroupRingElement {
    pub fn zero(degree: usize) -> Self {
        GroupRingElement {
            degree,
            terms: FreeElement::zero(),
        }
    }

    pub fn basis(p: Permutation) -> Self {
        GroupRingElement {
            degree: p.degree(),
            terms: FreeElement::basis(p),
        }
    }

    pub fn identity(n: usize) -> Self {
        Self::basis(Permutation::identity(n))
    }

    pub fn from_terms<I: IntoIterator<Item = (Permutation, Integer)>>(degree: usize, terms: I) -> Result<Self> {
        let terms: FreeElement<Permutation> = terms.into_iter().collect();
        if let Some(p) = terms.support().find(|p| p.degree() != degree) {
            return Err(Error::DegreeMismatch(format!("{p} in Z S_{degree}")));
        }
        Ok(GroupRingElement { degree, terms })
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn terms(&self) -> &FreeElement<Permutation> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_zero()
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.degree, other.degree);
        GroupRingElement {
            degree: self.degree,
            terms: &self.terms + &other.terms,
        }
    }

    /// Product in the group ring: `(Σ a_g g)(Σ b_h h) = Σ a_g b_h (g ∘ h)`.
    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.degree, other.degree);
        let terms = self.terms.map_linear(|g| other.terms.map_keys(|h| Some(g.compose(h))));
        GroupRingElement {
            degree: self.degree,
            terms,
        }
    }
}

impl fmt::Debug for GroupRingElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.terms)
    }
}

/// The composition of the operad of permutations,
/// `γ(σ; τ_1..τ_n) = σ⟨α_1..α_n⟩ ∘ (τ_1 ⊞ .. ⊞ τ_n)`, extended bilinearly.
pub fn s0_compose(sigma: &Permutation, inner: &[GroupRingElement]) -> Result<GroupRingElement> {
    if inner.len() != sigma.degree() {
        return Err(Error::ArityMismatch {
            expected: sigma.degree(),
            found: inner.len(),
        });
    }
    let sizes: Vec<usize> = inner.iter().map(GroupRingElement::degree).collect();
    let outer = block_perm(&sizes, sigma)?;
    let total: usize = sizes.iter().sum();
    // expand the product of the inner sums term by term
    let mut partial: Vec<(Permutation, Integer)> = vec![(Permutation::identity(0), Integer::from(1))];
    for t in inner {
        let mut next = Vec::new();
        for (p, c) in &partial {
            for (q, d) in t.terms.terms() {
                next.push((p.juxtapose(q), c * d));
            }
        }
        partial = next;
    }
    GroupRingElement::from_terms(total, partial.into_iter().map(|(p, c)| (outer.compose(&p), c)))
}

/// A basis tuple `(h_0, .., h_k)` of the normalized (homogeneous) bar
/// resolution of `Z` over `Z S_n`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct BarSimplex(Vec<Permutation>);

impl BarSimplex {
    /// `None` for degenerate tuples (two equal neighbours), which are zero.
    pub fn new(entries: Vec<Permutation>) -> Option<Self> {
        assert!(!entries.is_empty(), "a bar simplex needs at least one entry");
        if entries.windows(2).any(|w| w[0] == w[1]) {
            return None;
        }
        Some(BarSimplex(entries))
    }

    pub fn entries(&self) -> &[Permutation] {
        &self.0
    }

    pub fn arity(&self) -> usize {
        self.0[0].degree()
    }

    /// Right action `(h_0..h_k)·g = (h_0 g .. h_k g)`.
    pub fn act(&self, g: &Permutation) -> BarSimplex {
        BarSimplex(self.0.iter().map(|h| h.compose(g)).collect())
    }

    /// The inhomogeneous letters `[g_1|..|g_k]`, `g_i = h_{i-1} h_i⁻¹`.
    pub fn letters(&self) -> Vec<Permutation> {
        self.0.windows(2).map(|w| w[0].compose(&w[1].inverse())).collect()
    }
}

impl GradedKey for BarSimplex {
    fn degree(&self) -> usize {
        self.0.len() - 1
    }
}

impl fmt::Debug for BarSimplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let letters: Vec<String> = self.letters().iter().map(|p| p.to_string()).collect();
        write!(f, "[{}]·{}", letters.join("|"), self.0.last().expect("nonempty"))
    }
}

/// An element of `R S_n`, homogeneous of dimension `dim`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BarElement {
    arity: usize,
    dim: usize,
    terms: Chain<BarSimplex>,
}

impl BarElement {
    pub fn zero(arity: usize, dim: usize) -> Self {
        BarElement {
            arity,
            dim,
            terms: Chain::zero(),
        }
    }

    pub fn basis(s: BarSimplex) -> Self {
        BarElement {
            arity: s.arity(),
            dim: s.degree(),
            terms: Chain::basis(s),
        }
    }

    pub fn from_chain(arity: usize, dim: usize, terms: Chain<BarSimplex>) -> Result<Self> {
        if let Some(s) = terms.support().find(|s| s.arity() != arity || s.degree() != dim) {
            return Err(Error::DegreeMismatch(format!(
                "{s:?} in dimension {dim} of R S_{arity}"
            )));
        }
        Ok(BarElement { arity, dim, terms })
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn terms(&self) -> &Chain<BarSimplex> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_zero()
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!((self.arity, self.dim), (other.arity, other.dim));
        BarElement {
            arity: self.arity,
            dim: self.dim,
            terms: &self.terms + &other.terms,
        }
    }

    pub fn scale(&self, c: &Integer) -> Self {
        BarElement {
            arity: self.arity,
            dim: self.dim,
            terms: self.terms.scale(c),
        }
    }

    /// Right action of a permutation.
    pub fn act(&self, g: &Permutation) -> Self {
        BarElement {
            arity: self.arity,
            dim: self.dim,
            terms: self.terms.map_keys(|s| Some(s.act(g))),
        }
    }

    /// Right action of a group ring element.
    pub fn act_ring(&self, r: &GroupRingElement) -> Self {
        assert_eq!(r.degree(), self.arity);
        BarElement {
            arity: self.arity,
            dim: self.dim,
            terms: r.terms().map_linear(|g| self.act(g).terms),
        }
    }
}

impl fmt::Debug for BarElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.terms)
    }
}

fn bar_boundary_of_simplex(s: &BarSimplex) -> Chain<BarSimplex> {
    let k = s.degree();
    let mut out = Chain::zero();
    if k == 0 {
        return out;
    }
    for i in 0..=k {
        let mut entries = s.0.clone();
        entries.remove(i);
        if let Some(face) = BarSimplex::new(entries) {
            out.add_term(face, sign(i));
        }
    }
    out
}

/// `∂(h_0..h_k) = Σ (−1)^i (h_0..ĥ_i..h_k)`; zero in dimension 0.
pub fn bar_differential(x: &BarElement) -> BarElement {
    if x.dim == 0 {
        return BarElement::zero(x.arity, 0);
    }
    BarElement {
        arity: x.arity,
        dim: x.dim - 1,
        terms: x.terms.map_linear(bar_boundary_of_simplex),
    }
}

/// The generator `e_k = [T|..|T]` of `R S_2`, with homogeneous entries
/// `h_i = T^{k-i}`; then `∂e_k = e_{k-1} + (−1)^k e_{k-1}·T`.
pub fn bar_generator(k: usize) -> BarElement {
    BarElement::basis(generator_simplex(k))
}

fn generator_simplex(k: usize) -> BarSimplex {
    let (id, t) = (Permutation::identity(2), Permutation::swap());
    BarSimplex(
        (0..=k)
            .map(|i| if (k - i) % 2 == 1 { t.clone() } else { id.clone() })
            .collect(),
    )
}

/// Writes a nondegenerate arity-2 bar simplex as `e_k·g`.
pub fn decompose_arity_two(s: &BarSimplex) -> (usize, Permutation) {
    assert_eq!(s.arity(), 2, "only arity 2 decomposes over the generators e_k");
    let g = s.0.last().expect("nonempty").clone();
    debug_assert_eq!(s.act(&g.inverse()), generator_simplex(s.degree()));
    (s.degree(), g)
}

/// The symbolic operad composite `F_k = e_m ∘_1 e_m ∘_1 .. ∘_1 e_m` with
/// `count` factors: arity `count + 1`, dimension `m · count`. Its action on a
/// coalgebra is the iterate of the `e_m`-coproduct on the first tensor factor.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct FirstSlotIterate {
    pub generator_dim: usize,
    pub count: usize,
}

impl FirstSlotIterate {
    pub fn arity(&self) -> usize {
        self.count + 1
    }

    pub fn dim(&self) -> usize {
        self.generator_dim * self.count
    }
}

/// The bar resolution `R S_n` through `max_dim`, as a chain complex
/// augmented by `ε(h_0) = 1`.
#[derive(Clone, Debug)]
pub struct BarResolution {
    arity: usize,
    max_dim: usize,
    coinvariants: bool,
}

impl BarResolution {
    pub fn new(arity: usize, max_dim: usize) -> Self {
        BarResolution {
            arity,
            max_dim,
            coinvariants: false,
        }
    }

    /// `R S_n ⊗_{Z S_n} Z`, with orbit representatives `h_k = 1`.
    pub fn coinvariants(arity: usize, max_dim: usize) -> Self {
        BarResolution {
            arity,
            max_dim,
            coinvariants: true,
        }
    }

    fn normalize(&self, s: BarSimplex) -> BarSimplex {
        if self.coinvariants {
            let last = s.0.last().expect("nonempty").inverse();
            s.act(&last)
        } else {
            s
        }
    }
}

impl ChainComplex for BarResolution {
    type Key = BarSimplex;

    fn basis(&self, degree: usize) -> Option<Vec<BarSimplex>> {
        if degree > self.max_dim {
            return None;
        }
        let group = Permutation::all(self.arity);
        let mut tuples: Vec<Vec<Permutation>> = if self.coinvariants {
            vec![vec![Permutation::identity(self.arity)]]
        } else {
            group.iter().map(|g| vec![g.clone()]).collect()
        };
        // grow to the left, avoiding equal neighbours
        for _ in 0..degree {
            let mut next = Vec::new();
            for t in &tuples {
                for g in group.iter().filter(|g| **g != t[0]) {
                    let mut u = vec![g.clone()];
                    u.extend(t.iter().cloned());
                    next.push(u);
                }
            }
            tuples = next;
        }
        let mut out: Vec<BarSimplex> = tuples.into_iter().map(BarSimplex).collect();
        out.sort();
        Some(out)
    }

    fn boundary(&self, _degree: usize, key: &BarSimplex) -> Chain<BarSimplex> {
        bar_boundary_of_simplex(key).map_keys(|s| Some(self.normalize(s.clone())))
    }

    fn augmentation(&self, key: &BarSimplex) -> Option<Integer> {
        Some(Integer::from(i32::from(key.degree() == 0)))
    }

    fn has_augmentation(&self) -> bool {
        true
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(one_line: &[usize]) -> Permutation {
        Permutation::from_one_line(one_line).unwrap()
    }

    #[test]
    fn block_permutation_examples() {
        assert!(block_perm(&[2, 3], &Permutation::identity(2)).unwrap().is_identity());
        let b = block_perm(&[2, 1], &Permutation::swap()).unwrap();
        assert_eq!(b.arrangement(), vec![3, 1, 2]);
        assert_eq!(b.one_line(), vec![2, 3, 1]);
        assert!(block_perm(&[0, 3], &Permutation::swap()).unwrap().is_identity());
    }

    #[test]
    fn composition_examples() {
        let sw = GroupRingElement::basis(Permutation::swap());
        let one = GroupRingElement::identity(1);
        let out = s0_compose(&Permutation::identity(2), &[sw, one]).unwrap();
        assert_eq!(out, GroupRingElement::basis(p(&[2, 1, 3])));
        assert!(matches!(
            s0_compose(&Permutation::identity(2), &[GroupRingElement::identity(1)]),
            Err(Error::ArityMismatch { .. })
        ));
    }

    #[test]
    fn bar_generators() {
        let t = Permutation::swap();
        let e0 = bar_generator(0);
        assert_eq!(e0.terms().as_basis().unwrap().entries(), &[Permutation::identity(2)]);
        for k in 0..5 {
            assert_ne!(bar_generator(k).act(&t), bar_generator(k));
        }
        for k in 1..8 {
            let expected = bar_generator(k - 1).add(&bar_generator(k - 1).act(&t).scale(&sign(k)));
            assert_eq!(bar_differential(&bar_generator(k)), expected);
        }
        assert!(bar_differential(&bar_differential(&bar_generator(3))).is_zero());
    }

    #[test]
    fn permutation_enumeration() {
        assert_eq!(Permutation::all(3).len(), 6);
        assert_eq!(Permutation::all(0).len(), 1);
    }
}
