//! The equivariant higher diagonal `f: R S_2 ⊗ C(X) -> C(X) ⊗ C(X)`.
//!
//! On the top face `ι_k` of `Δ^k`:
//!
//! ```text
//! f(e_0 ⊗ ι_k) = Σ [0..i] ⊗ [i..k]
//! f(e_i ⊗ ι_k) = Φ_k( f(∂e_i ⊗ ι_k) + (−1)^i f(e_i ⊗ ∂ι_k) ),   1 ≤ i ≤ k
//! f(e_i ⊗ ι_k) = 0,                                              i > k
//! ```
//!
//! with `∂e_i = e_{i−1} + (−1)^i e_{i−1}·T` and `f(e_i·T ⊗ c) = T f(e_i ⊗ c)`.
//! Everything else follows by naturality along face inclusions and, for a
//! general simplicial set, along characteristic maps `Δ^k -> X`.

use std::collections::HashMap;
use std::sync::{Arc, OnceLock, RwLock};

use super::simplex::{aw_diagonal, face_boundary, tensor_homotopy, Face};
use crate::exactalg::{ChainComplex, GradedKey};
use crate::operads::{bar_differential, decompose_arity_two, BarElement, Permutation};
use crate::scalar::{grouplike_sign, sign};
use crate::simplicial::{Simplex, SimplexId, SimplicialSet, SimplicialSetMap};
use crate::{Chain, Error, Result, Tensor};

type Cache = HashMap<(usize, usize), Arc<Tensor<Face>>>;

/// Memoized values `f(e_i ⊗ ι_k)`. Fills are idempotent: a value depends
/// only on `(i, k)`, so concurrent fills of the same entry agree.
#[derive(Debug, Default)]
pub struct DiagonalTable {
    cache: RwLock<Cache>,
}

impl DiagonalTable {
    pub fn new() -> Self {
        Self::default()
    }

    /// The process-wide table.
    pub fn shared() -> &'static DiagonalTable {
        static TABLE: OnceLock<DiagonalTable> = OnceLock::new();
        TABLE.get_or_init(DiagonalTable::new)
    }

    /// `f(e_i ⊗ ι_k)`.
    pub fn top(&self, i: usize, k: usize) -> Arc<Tensor<Face>> {
        if let Some(v) = self.cache.read().expect("poisoned cache").get(&(i, k)) {
            return v.clone();
        }
        let value = Arc::new(self.compute(i, k));
        self.cache
            .write()
            .expect("poisoned cache")
            .entry((i, k))
            .or_insert(value)
            .clone()
    }

    fn compute(&self, i: usize, k: usize) -> Tensor<Face> {
        if i > k {
            return Tensor::zero(2);
        }
        if i == 0 {
            return aw_diagonal(Face::top(k));
        }
        let prev = self.top(i - 1, k);
        let mut z = (*prev).clone() + prev.swap().scale(&sign(i));
        let lower = self.top(i, k - 1);
        for j in 0..=k {
            let moved = lower.map_factors(|f| Some(f.coface(j)));
            z = z + moved.scale(&sign(i + j));
        }
        tensor_homotopy(k, &z)
    }

    /// `f(e_i ⊗ c)` for a face `c` of some standard simplex.
    pub fn on_face(&self, i: usize, face: Face) -> Tensor<Face> {
        let vs = face.vertices();
        self.top(i, face.dim()).map_factors(|f| Some(f.relabel(&vs)))
    }

    pub fn on_chain(&self, i: usize, c: &Chain<Face>) -> Tensor<Face> {
        let mut out = Tensor::zero(2);
        for (face, coeff) in c.terms() {
            out = out + self.on_face(i, *face).scale(coeff);
        }
        out
    }

    /// `f(x ⊗ c)` for an arbitrary element `x` of `R S_2`.
    pub fn on_bar(&self, x: &BarElement, c: &Chain<Face>) -> Tensor<Face> {
        assert_eq!(x.arity(), 2);
        let t = Permutation::swap();
        let mut out = Tensor::zero(2);
        for (s, coeff) in x.terms().terms() {
            let (j, g) = decompose_arity_two(s);
            let value = self.on_chain(j, c);
            let value = if g == t { value.swap() } else { value };
            out = out + value.scale(coeff);
        }
        out
    }
}

fn face_differential(x: &Tensor<Face>) -> Tensor<Face> {
    x.differential(|f| face_boundary(*f))
}

/// `f(e_i ⊗ ι_k)` from the shared table.
pub fn diagonal_top(i: usize, k: usize) -> Arc<Tensor<Face>> {
    DiagonalTable::shared().top(i, k)
}

/// The image of a face of `Δ^{dim σ}` under the characteristic map of `σ`;
/// `None` when it is degenerate (zero in normalized chains).
pub fn characteristic_image(x: &SimplicialSet, sigma: &Simplex, face: Face) -> Option<SimplexId> {
    let image = x.act(sigma, &face.vertices());
    (!image.is_degenerate()).then(|| image.base())
}

/// `f(e_i ⊗ σ)` for a nondegenerate simplex of `X`, transported along its
/// characteristic map with degenerate factors sent to zero.
pub fn higher_diagonal(i: usize, sigma: SimplexId, x: &SimplicialSet) -> Tensor<SimplexId> {
    let s = Simplex::nondegenerate(sigma);
    diagonal_top(i, sigma.dim).map_factors(|f| characteristic_image(x, &s, *f))
}

pub fn higher_diagonal_chain(i: usize, c: &Chain<SimplexId>, x: &SimplicialSet) -> Tensor<SimplexId> {
    let mut out = Tensor::zero(2);
    for (sigma, coeff) in c.terms() {
        out = out + higher_diagonal(i, *sigma, x).scale(coeff);
    }
    out
}

fn fail<T>(msg: String) -> Result<T> {
    Err(Error::InvariantFailed(msg))
}

/// `f(e_i ⊗ σ) = 0` for `i > dim σ`, on every simplex of `X`.
pub fn check_vanishing(x: &SimplicialSet, extra: usize) -> Result<()> {
    for n in 0..=x.dim() {
        for sigma in x.nondegenerate(n) {
            for i in n + 1..=n + extra {
                if !higher_diagonal(i, sigma, x).is_zero() {
                    return fail(format!("f(e_{i} ⊗ {}) ≠ 0", x.label(sigma)));
                }
            }
        }
    }
    Ok(())
}

/// `∂f(b) = f(∂b)` for every basis element `b = e_i·g ⊗ c` of
/// `R S_2 ⊗ C(Δ^k)`, `k ≤ max_k`, of total degree at most `max_total`.
pub fn check_chain_map(table: &DiagonalTable, max_k: usize, max_total: usize) -> Result<usize> {
    let mut checked = 0;
    let t = Permutation::swap();
    for k in 0..=max_k {
        let top = Face::top(k);
        for i in 0..=max_total.saturating_sub(k) {
            for g in [Permutation::identity(2), t.clone()] {
                let e = crate::operads::bar_generator(i).act(&g);
                let c = Chain::basis(top);
                let lhs = face_differential(&table.on_bar(&e, &c));
                let mut rhs = table.on_bar(&bar_differential(&e), &c);
                rhs = rhs + table.on_bar(&e, &face_boundary(top)).scale(&sign(i));
                if lhs != rhs {
                    return fail(format!("∂f ≠ f∂ on e_{i}·{g} ⊗ ι_{k}"));
                }
                checked += 1;
            }
        }
    }
    Ok(checked)
}

/// `∂f(e_i ⊗ σ) = f(∂e_i ⊗ σ) + (−1)^i f(e_i ⊗ ∂σ)` in `NC(X) ⊗ NC(X)` for
/// every nondegenerate `σ` and `i ≤ max_i`; the `e_i·T` case follows because
/// the swap commutes with `∂`.
pub fn check_chain_map_on(x: &SimplicialSet, max_i: usize) -> Result<usize> {
    let chains = crate::simplicial::normalized_chains(x);
    let d = |t: &Tensor<SimplexId>| t.differential(|s| chains.boundary(s.dim, s));
    let mut checked = 0;
    for n in 0..=x.dim() {
        for sigma in x.nondegenerate(n) {
            let boundary = chains.boundary(n, &sigma);
            for i in 0..=max_i {
                let lhs = d(&higher_diagonal(i, sigma, x));
                let mut rhs = higher_diagonal_chain(i, &boundary, x).scale(&sign(i));
                if i > 0 {
                    let prev = higher_diagonal(i - 1, sigma, x);
                    rhs = rhs + prev.swap().scale(&sign(i)) + prev;
                }
                if lhs != rhs {
                    return fail(format!("∂f ≠ f∂ on e_{i} ⊗ {}", x.label(sigma)));
                }
                checked += 1;
            }
        }
    }
    Ok(checked)
}

/// `f(e_i·T ⊗ c) = T f(e_i ⊗ c)` with the Koszul-signed swap.
pub fn check_equivariance(table: &DiagonalTable, max_k: usize, max_total: usize) -> Result<usize> {
    let t = Permutation::swap();
    let mut checked = 0;
    for k in 0..=max_k {
        let c = Chain::basis(Face::top(k));
        for i in 0..=max_total.saturating_sub(k) {
            let e = crate::operads::bar_generator(i);
            let twisted = table.on_bar(&e.act(&t), &c);
            let plain = table.on_bar(&e, &c);
            if twisted != plain.swap() || twisted.swap() != plain {
                return fail(format!("equivariance fails on e_{i} ⊗ ι_{k}"));
            }
            checked += 1;
        }
    }
    Ok(checked)
}

/// `(ε⊗1) f(e_0 ⊗ σ) = σ = (1⊗ε) f(e_0 ⊗ σ)` on every simplex of `X`.
pub fn check_counit(x: &SimplicialSet) -> Result<()> {
    for n in 0..=x.dim() {
        for sigma in x.nondegenerate(n) {
            let d = higher_diagonal(0, sigma, x);
            let mut left = Chain::zero();
            let mut right = Chain::zero();
            for (f, c) in d.terms() {
                if f[0].dim == 0 {
                    left.add_term(f[1], c.clone());
                }
                if f[1].dim == 0 {
                    right.add_term(f[0], c.clone());
                }
            }
            if left != Chain::basis(sigma) || right != Chain::basis(sigma) {
                return fail(format!("counit fails on {}", x.label(sigma)));
            }
        }
    }
    Ok(())
}

/// `(Δ⊗1)Δ = (1⊗Δ)Δ` for the Alexander-Whitney diagonal `Δ = f(e_0 ⊗ −)`.
pub fn check_coassociativity(x: &SimplicialSet, max_dim: usize) -> Result<()> {
    for n in 0..=max_dim.min(x.dim()) {
        for sigma in x.nondegenerate(n) {
            let d = higher_diagonal(0, sigma, x);
            let left = d.expand_slot(0, 0, |a| higher_diagonal(0, *a, x));
            let right = d.expand_slot(1, 0, |b| higher_diagonal(0, *b, x));
            if left != right {
                return fail(format!("coassociativity fails on {}", x.label(sigma)));
            }
        }
    }
    Ok(())
}

/// `(g⊗g) f_X(e_i ⊗ σ) = f_Y(e_i ⊗ g σ)` for all `σ` and `i ≤ max_i`.
pub fn check_naturality(
    g: &SimplicialSetMap,
    source: &SimplicialSet,
    target: &SimplicialSet,
    max_i: usize,
) -> Result<()> {
    let push = |s: &SimplexId| {
        let image = g.apply(&Simplex::nondegenerate(*s));
        (!image.is_degenerate()).then(|| image.base())
    };
    for n in 0..=source.dim() {
        for sigma in source.nondegenerate(n) {
            for i in 0..=max_i {
                let lhs = higher_diagonal(i, sigma, source).map_factors(push);
                let rhs = match push(&sigma) {
                    Some(image) => higher_diagonal(i, image, target),
                    None => Tensor::zero(2),
                };
                if lhs != rhs {
                    return fail(format!("naturality fails for e_{i} on {}", source.label(sigma)));
                }
            }
        }
    }
    Ok(())
}

/// The coefficient of `ι_k ⊗ ι_k` in `f(e_k ⊗ ι_k)` next to the expected
/// group-like sign `ε_k = (−1)^{k(k−1)/2}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct TopSign {
    pub k: usize,
    /// `Some(c)` when `f(e_k ⊗ ι_k) = c·ι_k ⊗ ι_k` with `c = ±1`.
    pub observed: Option<i64>,
    pub expected: i64,
}

impl TopSign {
    pub fn holds(&self) -> bool {
        self.observed == Some(self.expected)
    }
}

/// Observed and expected top signs for `k ≤ max_k`.
pub fn grouplike_signs_top(max_k: usize) -> Vec<TopSign> {
    (0..=max_k)
        .map(|k| {
            let top = Face::top(k);
            let value = diagonal_top(k, k);
            let observed = [1i64, -1]
                .into_iter()
                .find(|&c| *value == Tensor::term(vec![top, top], c.into()));
            TopSign {
                k,
                observed,
                expected: grouplike_sign(k),
            }
        })
        .collect()
}

/// Fails on the first `k ≤ max_k` where `f(e_k ⊗ ι_k) ≠ ε_k ι_k ⊗ ι_k`.
pub fn grouplike_certificate_top(max_k: usize) -> Result<Vec<i64>> {
    let mut signs = Vec::new();
    for s in grouplike_signs_top(max_k) {
        if !s.holds() {
            let value = diagonal_top(s.k, s.k);
            return fail(format!(
                "f(e_{k} ⊗ ι_{k}) = {value:?}, expected sign {e}",
                k = s.k,
                e = s.expected
            ));
        }
        signs.push(s.expected);
    }
    Ok(signs)
}

/// The bidegrees `(|a|, |b|)` present in `f(e_i ⊗ ι_k)`; all have `|a|+|b| = i+k`.
pub fn bidegrees(value: &Tensor<Face>) -> Vec<(usize, usize)> {
    let mut out: Vec<_> = value.terms().map(|(f, _)| (f[0].degree(), f[1].degree())).collect();
    out.sort_unstable();
    out.dedup();
    out
}
