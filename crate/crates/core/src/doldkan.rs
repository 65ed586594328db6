//! The Dold-Kan functor `Γ`, its pointed variant `Γ̃`, Moore complexes, and
//! the comparison `γ_X: Γ̃NC(X) ⇄ Z̃X: ι_X` for reduced `X`.
//!
//! `(ΓC)_n = ⊕_{η: [n] ↠ [k]} C_k`. For `θ: [m] -> [n]` factor `η∘θ = δ∘ε`
//! (epi then mono); then `θ*(η, c)` is `(ε, c)` if `δ = id`, `(ε, ∂c)` if `δ`
//! misses only `0`, and zero otherwise.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use num_traits::{One, Zero};
use rand::Rng;

use crate::exactalg::matrix::rank_over_field;
use crate::exactalg::{homology_groups, BasisKey, ChainComplex, Graded, GradedKey, HomologyGroup, Matrix};
use crate::scalar::sign;
use crate::simplicial::surjection::{coface, epi_mono};
use crate::simplicial::{
    free_abelianization, LazySimplicialAbGroup, NormalizedChains, Simplex, SimplexId, SimplicialSet, Surjection,
};
use crate::{Chain, Error, Integer, Rational, Result};

/// A generator `(η, c)` of `ΓC`: an ordered surjection `η: [n] ↠ [k]` and a
/// basis key `c` of `C_k`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct GammaKey<K> {
    pub op: Surjection,
    pub key: K,
}

impl<K> GammaKey<K> {
    pub fn new(op: Surjection, key: K) -> Self {
        GammaKey { op, key }
    }

    /// The summand `(id_n, c)`.
    pub fn identity(n: usize, key: K) -> Self {
        GammaKey::new(Surjection::identity(n), key)
    }

    pub fn level(&self) -> usize {
        self.op.source_dim()
    }

    pub fn target_degree(&self) -> usize {
        self.op.target_dim()
    }
}

impl<K: BasisKey> GradedKey for GammaKey<K> {
    fn degree(&self) -> usize {
        self.level()
    }
}

impl<K: fmt::Debug> fmt::Debug for GammaKey<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({:?}, {:?})", self.op, self.key)
    }
}

/// `ΓC` as a lazy simplicial abelian group.
#[derive(Clone, Debug)]
pub struct Gamma<C> {
    complex: C,
}

pub fn gamma<C: ChainComplex>(complex: C) -> Gamma<C> {
    Gamma { complex }
}

/// `Γ̃C = Γ(ker ε)` for an augmented complex, `ΓC` otherwise.
pub fn gamma_tilde<C: ChainComplex>(complex: C) -> Result<Gamma<AugmentationKernel<C>>> {
    Ok(gamma(augmentation_kernel(complex)?))
}

impl<C: ChainComplex> Gamma<C> {
    pub fn complex(&self) -> &C {
        &self.complex
    }

    /// All generators of level `n`.
    pub fn level_basis(&self, n: usize) -> Result<Vec<GammaKey<C::Key>>> {
        let mut out = Vec::new();
        for k in 0..=n {
            let keys = self.complex.basis(k).ok_or(Error::InfiniteBasis(k))?;
            for op in Surjection::all(n, k) {
                out.extend(keys.iter().map(|c| GammaKey::new(op.clone(), c.clone())));
            }
        }
        out.sort();
        Ok(out)
    }

    /// `θ*(η, c)` for a weakly increasing `θ: [m] -> [n]` given by its values.
    pub fn act(&self, theta: &[usize], g: &GammaKey<C::Key>) -> Chain<GammaKey<C::Key>> {
        let composite: Vec<usize> = theta.iter().map(|&t| g.op.values()[t]).collect();
        let (epi, image) = epi_mono(&composite);
        let k = g.target_degree();
        if image.len() == k + 1 {
            Chain::basis(GammaKey::new(epi, g.key.clone()))
        } else if image.len() == k && image.iter().copied().eq(1..=k) {
            self.complex
                .boundary(k, &g.key)
                .map_keys(|c| Some(GammaKey::new(epi.clone(), c.clone())))
        } else {
            Chain::zero()
        }
    }

    pub fn act_chain(&self, theta: &[usize], x: &Chain<GammaKey<C::Key>>) -> Chain<GammaKey<C::Key>> {
        x.map_linear(|g| self.act(theta, g))
    }

    /// The Moore complex on all generators of levels `0..=top`.
    pub fn moore(&self, top: usize) -> Result<Moore<&Self>> {
        let basis = (0..=top).map(|n| self.level_basis(n)).collect::<Result<Vec<_>>>()?;
        Ok(moore(self, basis))
    }
}

impl<C: ChainComplex> LazySimplicialAbGroup for Gamma<C> {
    type Generator = GammaKey<C::Key>;

    fn generator_face(&self, level: usize, i: usize, g: &Self::Generator) -> Chain<Self::Generator> {
        self.act(&coface(level, i), g)
    }

    fn generator_degeneracy(&self, level: usize, i: usize, g: &Self::Generator) -> Chain<Self::Generator> {
        self.act(Surjection::codegeneracy(level, i).values(), g)
    }
}

/// `ker(ε: C -> Z)`, keyed by elements of `C`. In positive degrees the keys
/// are the basis keys of `C`; in degree 0 they are `k − ε(k)·p` for a pivot
/// `p` with `ε(p) = 1`. A complex without augmentation is its own kernel.
#[derive(Clone, Debug)]
pub struct AugmentationKernel<C: ChainComplex> {
    complex: C,
    pivot: Option<C::Key>,
}

pub fn augmentation_kernel<C: ChainComplex>(complex: C) -> Result<AugmentationKernel<C>> {
    if !complex.has_augmentation() {
        return Ok(AugmentationKernel { complex, pivot: None });
    }
    let keys = complex.basis(0).ok_or(Error::InfiniteBasis(0))?;
    let pivot = keys
        .into_iter()
        .find(|k| complex.augmentation(k).is_some_and(|e| e.is_one()))
        .ok_or_else(|| Error::InvalidComplex("no degree-0 key with augmentation 1".into()))?;
    Ok(AugmentationKernel {
        complex,
        pivot: Some(pivot),
    })
}

impl<C: ChainComplex> AugmentationKernel<C> {
    fn epsilon(&self, k: &C::Key) -> Integer {
        self.complex.augmentation(k).unwrap_or_else(Integer::zero)
    }

    /// Rewrites a degree-0 element of the kernel in the kernel basis.
    fn in_kernel_basis(&self, x: &Chain<C::Key>) -> Chain<Chain<C::Key>> {
        let Some(p) = &self.pivot else {
            return x.map_keys(|k| Some(Chain::basis(k.clone())));
        };
        x.map_keys(|k| (k != p).then(|| self.kernel_key(k)))
    }

    fn kernel_key(&self, k: &C::Key) -> Chain<C::Key> {
        let mut key = Chain::basis(k.clone());
        if let Some(p) = &self.pivot {
            key.add_term(p.clone(), -self.epsilon(k));
        }
        key
    }
}

impl<C: ChainComplex> ChainComplex for AugmentationKernel<C> {
    type Key = Chain<C::Key>;

    fn basis(&self, degree: usize) -> Option<Vec<Self::Key>> {
        let keys = self.complex.basis(degree)?;
        let mut out: Vec<_> = keys
            .iter()
            .filter(|k| degree > 0 || Some(*k) != self.pivot.as_ref())
            .map(|k| {
                if degree == 0 {
                    self.kernel_key(k)
                } else {
                    Chain::basis(k.clone())
                }
            })
            .collect();
        out.sort();
        Some(out)
    }

    fn boundary(&self, degree: usize, key: &Self::Key) -> Chain<Self::Key> {
        if degree == 0 {
            return Chain::zero();
        }
        let b = self.complex.boundary_of(degree, key);
        if degree == 1 {
            self.in_kernel_basis(&b)
        } else {
            b.map_keys(|k| Some(Chain::basis(k.clone())))
        }
    }
}

/// The Moore complex of a simplicial abelian group on registered generators:
/// degree `n` is free on `basis[n]` and `∂ = Σ(−1)^i d_i`.
#[derive(Clone, Debug)]
pub struct Moore<A: LazySimplicialAbGroup> {
    group: A,
    basis: Vec<Vec<A::Generator>>,
}

pub fn moore<A: LazySimplicialAbGroup>(group: A, basis: Vec<Vec<A::Generator>>) -> Moore<A> {
    Moore { group, basis }
}

impl<A: LazySimplicialAbGroup> ChainComplex for Moore<A> {
    type Key = Graded<A::Generator>;

    fn basis(&self, degree: usize) -> Option<Vec<Self::Key>> {
        self.basis
            .get(degree)
            .map(|b| b.iter().map(|g| Graded::new(degree, g.clone())).collect())
    }

    fn boundary(&self, degree: usize, key: &Self::Key) -> Chain<Self::Key> {
        let mut out = Chain::zero();
        if degree == 0 {
            return out;
        }
        for i in 0..=degree {
            let face = self.group.generator_face(degree, i, &key.key);
            out.add_scaled(&face.map_keys(|g| Some(Graded::new(degree - 1, g.clone()))), &sign(i));
        }
        out
    }
}

/// Per-degree outcome of the Dold-Kan round trip.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RoundtripDegree {
    pub degree: usize,
    pub rank: usize,
    /// Rank of `N_n(ΓC) = ∩_{i≥1} ker d_i`.
    pub normalized_rank: usize,
    /// Every `(id_n, c)` lies in `N_n(ΓC)`.
    pub summand_normalized: bool,
    /// `d_0(id_n, c) = (id_{n−1}, ∂c)`.
    pub differential_matches: bool,
    pub homology: HomologyGroup,
    pub moore_homology: HomologyGroup,
}

impl RoundtripDegree {
    pub fn passed(&self) -> bool {
        self.rank == self.normalized_rank
            && self.summand_normalized
            && self.differential_matches
            && self.homology == self.moore_homology
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RoundtripReport {
    pub degrees: Vec<RoundtripDegree>,
}

impl RoundtripReport {
    pub fn passed(&self) -> bool {
        self.degrees.iter().all(RoundtripDegree::passed)
    }
}

/// Checks `N(ΓC) ≅ C` and `H_n(moore(ΓC)) = H_n(C)` for `n ≤ max_degree`.
///
/// The summands `(id_n, c)` are coordinate vectors, so they span a saturated
/// sublattice; equal rank with `N_n` then means they span all of `N_n`.
pub fn dold_kan_roundtrip<C: ChainComplex>(complex: C, max_degree: usize) -> Result<RoundtripReport> {
    let g = gamma(complex);
    let m = g.moore(max_degree + 1)?;
    let mut degrees = Vec::new();
    for n in 0..=max_degree {
        let keys = g.complex.basis(n).ok_or(Error::InfiniteBasis(n))?;
        let level = g.level_basis(n)?;
        let normalized_rank = if n == 0 {
            level.len()
        } else {
            level.len() - rank_over_field(&higher_faces_matrix(&g, n, &level)?)
        };
        let summand_normalized = keys.iter().all(|c| {
            let x = GammaKey::identity(n, c.clone());
            (1..=n).all(|i| g.generator_face(n, i, &x).is_zero())
        });
        let differential_matches = n == 0
            || keys.iter().all(|c| {
                let x = GammaKey::identity(n, c.clone());
                let expected = g
                    .complex
                    .boundary(n, c)
                    .map_keys(|b| Some(GammaKey::identity(n - 1, b.clone())));
                g.generator_face(n, 0, &x) == expected
            });
        degrees.push(RoundtripDegree {
            degree: n,
            rank: keys.len(),
            normalized_rank,
            summand_normalized,
            differential_matches,
            homology: homology_groups(&g.complex, n)?,
            moore_homology: homology_groups(&m, n)?,
        });
    }
    Ok(RoundtripReport { degrees })
}

/// The stacked matrix of `d_1, .., d_n` on level `n`, over the rationals.
fn higher_faces_matrix<C: ChainComplex>(
    g: &Gamma<C>,
    n: usize,
    level: &[GammaKey<C::Key>],
) -> Result<Matrix<Rational>> {
    let below = g.level_basis(n - 1)?;
    let index: HashMap<&GammaKey<C::Key>, usize> = below.iter().enumerate().map(|(i, k)| (k, i)).collect();
    let mut m = Matrix::zeros(n * below.len(), level.len());
    for (col, x) in level.iter().enumerate() {
        for i in 1..=n {
            for (y, c) in g.generator_face(n, i, x).terms() {
                let row = (i - 1) * below.len() + index[y];
                m.set(row, col, Rational::from_integer(c.clone()));
            }
        }
    }
    Ok(m)
}

/// The Moore normalization `P = (1 − s_0 d_1)···(1 − s_{n−1} d_n)` on `A_n`;
/// lands in `∩_{i≥1} ker d_i` and kills degenerate elements.
pub fn moore_projection<A: LazySimplicialAbGroup>(group: &A, n: usize, x: &Chain<A::Generator>) -> Chain<A::Generator> {
    let mut y = x.clone();
    for i in (1..=n).rev() {
        let back = group.degeneracy(n - 1, i - 1, &group.face(n, i, &y));
        y = y - back;
    }
    y
}

type ReducedChains<'a> = NormalizedChains<&'a SimplicialSet>;

/// The pair `γ_X: Γ̃NC(X) -> Z̃X` and `ι_X: Z̃X -> Γ̃NC(X)` for a reduced `X`.
///
/// `γ_X(η, σ) = η*(Pσ)` with `P` the Moore normalization in `Z̃X`; this is the
/// Dold-Kan isomorphism `ΓN(Z̃X) -> Z̃X` precomposed with `NC(X) ≅ N(Z̃X)`.
/// `ι_X` inverts it by peeling off summands of top nondegenerate dimension.
pub struct GammaPair<'a> {
    set: &'a SimplicialSet,
    gamma: Gamma<ReducedChains<'a>>,
    free: crate::simplicial::lazy::ReducedFreeAbelian<'a>,
    max_level: usize,
}

pub type ReducedGammaKey = GammaKey<SimplexId>;

pub fn gamma_pair(x: &SimplicialSet, max_level: usize) -> Result<GammaPair<'_>> {
    let free = free_abelianization(x)?;
    Ok(GammaPair {
        set: x,
        gamma: gamma(NormalizedChains::reduced(x)?),
        free,
        max_level,
    })
}

impl<'a> GammaPair<'a> {
    pub fn gamma_object(&self) -> &Gamma<ReducedChains<'a>> {
        &self.gamma
    }

    pub fn free(&self) -> &crate::simplicial::lazy::ReducedFreeAbelian<'a> {
        &self.free
    }

    pub fn max_level(&self) -> usize {
        self.max_level
    }

    /// The non-basepoint simplices of `X_n`: the generators of `Z̃X` in level `n`.
    pub fn free_generators(&self, n: usize) -> Vec<Simplex> {
        let base = self.set.basepoint();
        let mut out = self.set.simplices(n);
        out.retain(|s| Some(s.base()) != base);
        out
    }

    fn check_level(&self, n: usize) -> Result<()> {
        if n > self.max_level {
            return Err(Error::TruncationExceeded {
                level: n,
                bound: self.max_level,
            });
        }
        Ok(())
    }

    pub fn gamma_map(&self, n: usize, x: &Chain<ReducedGammaKey>) -> Result<Chain<Simplex>> {
        self.check_level(n)?;
        Ok(x.map_linear(|g| self.gamma_generator(g)))
    }

    fn gamma_generator(&self, g: &ReducedGammaKey) -> Chain<Simplex> {
        let k = g.target_degree();
        let p = moore_projection(&self.free, k, &Chain::basis(Simplex::nondegenerate(g.key)));
        p.map_linear(|s| {
            let moved = self.set.act(s, g.op.values());
            self.free.generator(moved.dim(), &moved)
        })
    }

    pub fn iota(&self, n: usize, x: &Chain<Simplex>) -> Result<Chain<ReducedGammaKey>> {
        self.check_level(n)?;
        let mut rest = x.clone();
        let mut out = Chain::zero();
        while let Some((s, c)) = rest
            .terms()
            .max_by_key(|(s, _)| (s.base().dim, (*s).clone()))
            .map(|(s, c)| (s.clone(), c.clone()))
        {
            let g = GammaKey::new(s.op().clone(), s.base());
            let image = self.gamma_generator(&g);
            debug_assert_eq!(image.coefficient(&s), Integer::one());
            rest.add_scaled(&image, &-c.clone());
            out.add_term(g, c);
        }
        Ok(out)
    }
}

/// A random nonzero element of `Z̃X_n` with up to `max_terms` terms and
/// coefficients in `[−bound, bound]`.
pub fn sample_element<R: Rng + ?Sized>(
    pair: &GammaPair<'_>,
    n: usize,
    max_terms: usize,
    bound: i64,
    rng: &mut R,
) -> Chain<Simplex> {
    let generators = pair.free_generators(n);
    if generators.is_empty() {
        return Chain::zero();
    }
    loop {
        let mut x = Chain::zero();
        for _ in 0..rng.gen_range(1..=max_terms) {
            let s = generators[rng.gen_range(0..generators.len())].clone();
            x.add_term(s, Integer::from(rng.gen_range(-bound..=bound)));
        }
        if !x.is_zero() {
            return x;
        }
    }
}

/// Outcome of the sampled `γ∘ι = id` check.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct GammaPairReport {
    /// `(level, samples checked, failures)`.
    pub levels: Vec<(usize, usize, usize)>,
    /// `ι∘γ = id` on every generator of `Γ̃NC(X)` through the top level.
    pub inverse_on_generators: bool,
    /// `γ` and `ι` commute with faces and degeneracies on the samples.
    pub simplicial: bool,
}

impl GammaPairReport {
    pub fn passed(&self) -> bool {
        self.inverse_on_generators && self.simplicial && self.levels.iter().all(|&(_, _, f)| f == 0)
    }
}

/// Samples `per_level` elements of each level `0..=max_level` of `Z̃X` and
/// checks `γ∘ι = id`, additivity and compatibility with the simplicial operators.
pub fn check_gamma_pair<R: Rng + ?Sized>(
    pair: &GammaPair<'_>,
    per_level: usize,
    rng: &mut R,
) -> Result<GammaPairReport> {
    let mut report = GammaPairReport {
        inverse_on_generators: true,
        simplicial: true,
        ..Default::default()
    };
    for n in 0..=pair.max_level {
        for g in pair.gamma.level_basis(n)? {
            let x = Chain::basis(g);
            if pair.iota(n, &pair.gamma_map(n, &x)?)? != x {
                report.inverse_on_generators = false;
            }
        }
        let mut failures = 0;
        let samples: Vec<_> = (0..per_level).map(|_| sample_element(pair, n, 4, 9, rng)).collect();
        for (j, a) in samples.iter().enumerate() {
            let ia = pair.iota(n, a)?;
            let b = &samples[(j + 1) % samples.len()];
            let additive = pair.iota(n, &(a.clone() + b.clone()))? == ia.clone() + pair.iota(n, b)?;
            if pair.gamma_map(n, &ia)? != *a || !additive {
                failures += 1;
            }
            if !commutes_with_operators(pair, n, a, &ia)? {
                report.simplicial = false;
            }
        }
        report.levels.push((n, samples.len(), failures));
    }
    Ok(report)
}

fn commutes_with_operators(
    pair: &GammaPair<'_>,
    n: usize,
    a: &Chain<Simplex>,
    ia: &Chain<ReducedGammaKey>,
) -> Result<bool> {
    for i in 0..=n {
        if n > 0 {
            let lhs = pair.iota(n - 1, &pair.free.face(n, i, a))?;
            if lhs != pair.gamma.face(n, i, ia) {
                return Ok(false);
            }
        }
        if n < pair.max_level {
            let lhs = pair.iota(n + 1, &pair.free.degeneracy(n, i, a))?;
            if lhs != pair.gamma.degeneracy(n, i, ia) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Counts generators of `Γ̃NC(X)` and `Z̃X` per level; the two agree.
pub fn level_ranks(pair: &GammaPair<'_>) -> Result<BTreeMap<usize, (usize, usize)>> {
    (0..=pair.max_level)
        .map(|n| Ok((n, (pair.gamma.level_basis(n)?.len(), pair.free_generators(n).len()))))
        .collect()
}

/// `C = Z` concentrated in one degree.
pub fn integers_in_degree(degree: usize) -> crate::exactalg::FiniteComplex<String> {
    crate::exactalg::FiniteComplex::concentrated(degree, vec![format!("z{degree}")])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::homology_through;
    use crate::simplicial::{minimal_circle, normalized_chains, real_projective_space, UnnormalizedChains};
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn constant_and_degree_one() {
        let g = gamma(integers_in_degree(0));
        assert_eq!(g.level_basis(3).unwrap().len(), 1);
        let g1 = gamma(integers_in_degree(1));
        assert_eq!(g1.level_basis(2).unwrap().len(), 2);
        let h = homology_through(&g1.moore(4).unwrap(), 3).unwrap();
        assert_eq!(
            h,
            vec![
                HomologyGroup::trivial(),
                HomologyGroup::new(1, &[]),
                HomologyGroup::trivial(),
                HomologyGroup::trivial()
            ]
        );
        let h0 = homology_through(&gamma(integers_in_degree(0)).moore(5).unwrap(), 4).unwrap();
        assert_eq!(h0[0], HomologyGroup::new(1, &[]));
        assert!(h0[1..].iter().all(HomologyGroup::is_trivial));
    }

    #[test]
    fn simplicial_identities_on_gamma() {
        let x = real_projective_space(2);
        let g = gamma(normalized_chains(&x));
        for n in 1..=3 {
            for a in g.level_basis(n).unwrap() {
                let a = Chain::basis(a);
                for i in 0..=n {
                    for j in i + 1..=n {
                        assert_eq!(
                            g.face(n - 1, i, &g.face(n, j, &a)),
                            g.face(n - 1, j - 1, &g.face(n, i, &a))
                        );
                    }
                    assert_eq!(g.face(n + 1, i, &g.degeneracy(n, i, &a)), a);
                    assert_eq!(g.face(n + 1, i + 1, &g.degeneracy(n, i, &a)), a);
                }
            }
        }
    }

    #[test]
    fn roundtrip_on_integers() {
        let r = dold_kan_roundtrip(integers_in_degree(3), 4).unwrap();
        assert!(r.passed(), "{r:?}");
        assert_eq!(r.degrees[3].normalized_rank, 1);
        assert_eq!(r.degrees[2].normalized_rank, 0);
    }

    #[test]
    fn projection_lands_in_normalized_part() {
        let x = real_projective_space(2);
        let z = free_abelianization(&x).unwrap();
        let pair = gamma_pair(&x, 4).unwrap();
        for n in 1..=4 {
            for s in pair.free_generators(n) {
                let p = moore_projection(&z, n, &Chain::basis(s.clone()));
                for i in 1..=n {
                    assert!(z.face(n, i, &p).is_zero());
                }
                if s.is_degenerate() {
                    assert!(p.is_zero());
                }
            }
        }
    }

    #[test]
    fn gamma_pair_on_models() {
        let mut rng = ChaCha8Rng::seed_from_u64(0);
        for x in [minimal_circle(), real_projective_space(2)] {
            let pair = gamma_pair(&x, 4).unwrap();
            for (_, (a, b)) in level_ranks(&pair).unwrap() {
                assert_eq!(a, b);
            }
            let r = check_gamma_pair(&pair, 10, &mut rng).unwrap();
            assert!(r.passed(), "{r:?}");
        }
        let s1 = minimal_circle();
        let pair = gamma_pair(&s1, 2).unwrap();
        let e = Chain::basis(Simplex::nondegenerate(s1.find("e").unwrap()));
        assert_eq!(pair.gamma_map(1, &pair.iota(1, &e).unwrap()).unwrap(), e);
        assert!(pair.iota(3, &e).is_err());
    }

    #[test]
    fn moore_of_free_abelianization_is_reduced_chains() {
        let x = real_projective_space(2);
        let pair = gamma_pair(&x, 4).unwrap();
        let basis = (0..=4).map(|n| pair.free_generators(n)).collect();
        let m = moore(pair.free(), basis);
        let c = UnnormalizedChains::reduced(&x, 4).unwrap();
        assert_eq!(homology_through(&m, 3).unwrap(), homology_through(&c, 3).unwrap());
    }

    #[test]
    fn augmentation_kernel_of_a_simplex() {
        let x = crate::simplicial::std_simplex(2);
        let k = augmentation_kernel(normalized_chains(&x)).unwrap();
        assert_eq!(k.basis(0).unwrap().len(), 2);
        let h = homology_through(&k, 2).unwrap();
        assert!(h.iter().all(HomologyGroup::is_trivial));
    }
}
