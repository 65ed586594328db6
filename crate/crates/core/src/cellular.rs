//! The cellular-coalgebra layer: iterated diagonals, group-like certificates,
//! the truncated cofree embedding `c ↦ (1, c, c⊗c, ..)` with its Vandermonde
//! injectivity certificate, the chain-level Hurewicz map, cogeneration, and
//! the first levels of the cosimplicial resolution `Q^n = C(Z̃^{n+1}X)`.

use std::collections::BTreeSet;
use std::fmt;

use num_traits::One;
use rand::Rng;

use crate::diagonal::higher_diagonal;
use crate::exactalg::{rational_rank, FreeElement, GradedKey, Matrix};
use crate::scalar::{grouplike_sign, sign};
use crate::simplicial::{Simplex, SimplexId, SimplicialSet};
use crate::{Chain, Error, Integer, Result, Tensor};

/// `F_k(c)`: the `e_m`-coproduct `σ ↦ f(e_m ⊗ σ)` applied `k − 1` times to
/// the first tensor factor, starting from a chain `c` of degree `m`.
pub fn iterated_diagonal(c: &Chain<SimplexId>, k: usize, x: &SimplicialSet) -> Result<Tensor<SimplexId>> {
    if k < 2 {
        return Err(Error::ArityMismatch { expected: 2, found: k });
    }
    let m = homogeneous_degree(c)?;
    let mut out = Tensor::from_element(c);
    for _ in 1..k {
        out = out.expand_slot(0, m, |s| higher_diagonal(m, *s, x));
    }
    Ok(out)
}

fn homogeneous_degree<K: GradedKey>(c: &Chain<K>) -> Result<usize> {
    if c.is_zero() {
        return Ok(0);
    }
    c.homogeneous_degree()
        .ok_or_else(|| Error::DegreeMismatch("chain is not homogeneous".into()))
}

/// One row of a group-like certificate.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GrouplikeRow {
    pub k: usize,
    /// `Some(s)` when `F_k(c) = s·c^{⊗k}` with `s = ±1`.
    pub observed: Option<i64>,
    /// `ε_m^{k−1}`.
    pub expected: i64,
}

impl GrouplikeRow {
    pub fn holds(&self) -> bool {
        self.observed == Some(self.expected)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GrouplikeReport {
    pub degree: usize,
    pub rows: Vec<GrouplikeRow>,
}

impl GrouplikeReport {
    /// `F_k(c) = ±c^{⊗k}` for every `k`, whatever the signs.
    pub fn grouplike_up_to_sign(&self) -> bool {
        self.rows.iter().all(|r| r.observed.is_some())
    }

    /// `F_k(c) = ε_m^{k−1} c^{⊗k}` for every `k`.
    pub fn passed(&self) -> bool {
        self.rows.iter().all(GrouplikeRow::holds)
    }
}

/// Compares `F_k(c)` with `ε_m^{k−1}·c^{⊗k}` for `2 ≤ k ≤ k_max`,
/// `ε_m = (−1)^{m(m−1)/2}`.
pub fn grouplike_certificate(c: &Chain<SimplexId>, k_max: usize, x: &SimplicialSet) -> Result<GrouplikeReport> {
    let m = homogeneous_degree(c)?;
    let eps: i64 = grouplike_sign(m);
    let mut rows = Vec::new();
    for k in 2..=k_max {
        let value = iterated_diagonal(c, k, x)?;
        let power = Tensor::power(c, k);
        let observed = [1i64, -1]
            .into_iter()
            .find(|&s| value == power.scale(&Integer::from(s)));
        rows.push(GrouplikeRow {
            k,
            observed,
            expected: eps.pow((k - 1) as u32),
        });
    }
    Ok(GrouplikeReport { degree: m, rows })
}

/// An element `(x_0, x_1, .., x_{t−1})` of the truncation of `Z ⊕ Π C^{⊗n}`.
#[derive(Clone, PartialEq, Eq)]
pub struct TruncatedCofreeElement<K: GradedKey> {
    pub unit: Integer,
    /// `components[n − 1] = x_n`, of arity `n`.
    pub components: Vec<Tensor<K>>,
}

impl<K: GradedKey> TruncatedCofreeElement<K> {
    pub fn bound(&self) -> usize {
        self.components.len() + 1
    }
}

impl<K: GradedKey> fmt::Debug for TruncatedCofreeElement<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_tuple("Truncated")
            .field(&self.unit)
            .field(&self.components)
            .finish()
    }
}

/// `e(c) = (1, c, c⊗c, .., c^{⊗(t−1)})`.
pub fn e_map<K: GradedKey>(c: &Chain<K>, t: usize) -> Result<TruncatedCofreeElement<K>> {
    if t < 2 {
        return Err(Error::TruncationExceeded { level: t, bound: 2 });
    }
    Ok(TruncatedCofreeElement {
        unit: Integer::one(),
        components: (1..t).map(|n| Tensor::power(c, n)).collect(),
    })
}

/// `(1, σ, ε_m F_2(σ), ε_m^2 F_3(σ), ..)`: the first `t` projections of the
/// classifying map on a simplex, with the group-like signs divided out. For a
/// group-like generator this equals `e_map(σ, t)`.
pub fn classifying_image(sigma: SimplexId, t: usize, x: &SimplicialSet) -> Result<TruncatedCofreeElement<SimplexId>> {
    if t < 2 {
        return Err(Error::TruncationExceeded { level: t, bound: 2 });
    }
    let c = Chain::basis(sigma);
    let eps: Integer = grouplike_sign(sigma.dim);
    let mut components = vec![Tensor::from_element(&c)];
    for n in 2..t {
        let s = if n % 2 == 0 { eps.clone() } else { Integer::one() };
        components.push(iterated_diagonal(&c, n, x)?.scale(&s));
    }
    Ok(TruncatedCofreeElement {
        unit: Integer::one(),
        components,
    })
}

/// Polynomials over `Z` in indeterminates `X_0, X_1, ..`, keyed by exponent vectors.
pub type Polynomial = FreeElement<Vec<u32>, Integer>;

fn poly_mul(a: &Polynomial, b: &Polynomial) -> Polynomial {
    let mut out = Polynomial::zero();
    for (ea, ca) in a.terms() {
        for (eb, cb) in b.terms() {
            let len = ea.len().max(eb.len());
            let e = (0..len)
                .map(|i| ea.get(i).copied().unwrap_or(0) + eb.get(i).copied().unwrap_or(0))
                .collect();
            out.add_term(e, ca * cb);
        }
    }
    out
}

fn poly_one(vars: usize) -> Polynomial {
    Polynomial::basis(vec![0; vars])
}

/// `g(x)` for a tensor `x`: each factor `b_α` becomes `X_α`, products of
/// factors become products of indeterminates.
fn substitute<K: GradedKey>(x: &Tensor<K>, vars: &[K]) -> Polynomial {
    let mut out = Polynomial::zero();
    for (factors, c) in x.terms() {
        let mut e = vec![0u32; vars.len()];
        for f in factors {
            let i = vars.binary_search(f).expect("factor is a known basis key");
            e[i] += 1;
        }
        out.add_term(e, c.clone());
    }
    out
}

fn monomials(vars: usize, degree: u32) -> Vec<Vec<u32>> {
    if vars == 0 {
        return if degree == 0 { vec![Vec::new()] } else { Vec::new() };
    }
    let mut out = Vec::new();
    for first in (0..=degree).rev() {
        for mut rest in monomials(vars - 1, degree - first) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InjectivityReport {
    pub t: usize,
    /// Number of basis indeterminates.
    pub variables: usize,
    /// Number of monomials of degree `< t`: the columns of the matrix.
    pub columns: usize,
    pub rank: usize,
    /// `det [g(c_i)^{t−1−j}]` for `t ≤ 3`.
    pub determinant: Option<Polynomial>,
    /// `Π_{i<j} (g(c_i) − g(c_j))` for `t ≤ 3`.
    pub vandermonde: Option<Polynomial>,
}

impl InjectivityReport {
    pub fn passed(&self) -> bool {
        self.rank == self.t && self.determinant == self.vandermonde
    }
}

/// Certifies that `e(c_1), .., e(c_t)`, truncated at `t`, are linearly
/// independent over `Q`: after the substitution `g` the row of `c_i` holds the
/// coefficients of `1, g(c_i), g(c_i)^2, ..`, and the `t × N` matrix has rank `t`.
pub fn injectivity_certificate<K: GradedKey>(cs: &[Chain<K>], t: usize) -> Result<InjectivityReport> {
    if t < 2 || t != cs.len() {
        return Err(Error::InvalidArgument(format!(
            "need t = {} ≥ 2 elements, got t = {t}",
            cs.len()
        )));
    }
    if cs.iter().any(Chain::is_zero) {
        return Err(Error::InvalidArgument("zero element".into()));
    }
    let distinct: BTreeSet<_> = cs.iter().collect();
    if distinct.len() != cs.len() {
        return Err(Error::InvalidArgument("duplicate elements".into()));
    }
    let vars: Vec<K> = cs
        .iter()
        .flat_map(|c| c.support().cloned())
        .collect::<BTreeSet<_>>()
        .into_iter()
        .collect();
    let columns: Vec<Vec<u32>> = (0..t as u32).flat_map(|d| monomials(vars.len(), d)).collect();
    let mut rows = Vec::with_capacity(t);
    let mut linear = Vec::with_capacity(t);
    for c in cs {
        let e = e_map(c, t)?;
        let mut image = poly_one(vars.len()).scale(&e.unit);
        for x in &e.components {
            image = image + substitute(x, &vars);
        }
        rows.push(columns.iter().map(|m| image.coefficient(m)).collect::<Vec<_>>());
        linear.push(substitute(&e.components[0], &vars));
    }
    let rank = rational_rank(&Matrix::from_rows(rows));
    let (determinant, vandermonde) = if t <= 3 {
        (
            Some(vandermonde_determinant(&linear, vars.len())),
            Some(difference_product(&linear)),
        )
    } else {
        (None, None)
    };
    Ok(InjectivityReport {
        t,
        variables: vars.len(),
        columns: columns.len(),
        rank,
        determinant,
        vandermonde,
    })
}

/// `det [L_i^{t−1−j}]_{i,j}` by cofactor expansion (powers in decreasing order).
fn vandermonde_determinant(linear: &[Polynomial], vars: usize) -> Polynomial {
    let t = linear.len();
    let entry = |i: usize, j: usize| (0..t - 1 - j).fold(poly_one(vars), |acc, _| poly_mul(&acc, &linear[i]));
    let m: Vec<Vec<Polynomial>> = (0..t).map(|i| (0..t).map(|j| entry(i, j)).collect()).collect();
    determinant(&m)
}

fn determinant(m: &[Vec<Polynomial>]) -> Polynomial {
    if m.len() == 1 {
        return m[0][0].clone();
    }
    let mut out = Polynomial::zero();
    for (j, a) in m[0].iter().enumerate() {
        let minor: Vec<Vec<Polynomial>> = m[1..]
            .iter()
            .map(|row| {
                row.iter()
                    .enumerate()
                    .filter(|&(c, _)| c != j)
                    .map(|(_, p)| p.clone())
                    .collect()
            })
            .collect();
        out.add_scaled(&poly_mul(a, &determinant(&minor)), &sign(j));
    }
    out
}

fn difference_product(linear: &[Polynomial]) -> Polynomial {
    let vars = linear.first().and_then(|p| p.support().next()).map_or(0, Vec::len);
    let mut out = poly_one(vars);
    for i in 0..linear.len() {
        for j in i + 1..linear.len() {
            out = poly_mul(&out, &(linear[i].clone() - linear[j].clone()));
        }
    }
    out
}

/// Basis keys `b_0, .., b_{r−1}` of the ambient lattice of random instances.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct LatticeKey(pub usize);

impl GradedKey for LatticeKey {
    fn degree(&self) -> usize {
        0
    }
}

/// `t` pairwise distinct nonzero vectors in `Z^rank`, entries in `[−bound, bound]`.
pub fn random_instance<R: Rng + ?Sized>(
    rank: usize,
    t: usize,
    bound: i64,
    rng: &mut R,
) -> Result<Vec<Chain<LatticeKey>>> {
    let available = (2 * bound + 1)
        .checked_pow(rank as u32)
        .map_or(usize::MAX, |n| n as usize - 1);
    if rank == 0 || t > available {
        return Err(Error::InvalidArgument(format!(
            "cannot draw {t} distinct nonzero vectors of rank {rank}"
        )));
    }
    let mut seen = BTreeSet::new();
    while seen.len() < t {
        let c = Chain::from_terms((0..rank).map(|i| (LatticeKey(i), Integer::from(rng.gen_range(-bound..=bound)))));
        if !c.is_zero() {
            seen.insert(c);
        }
    }
    let mut out: Vec<_> = seen.into_iter().collect();
    // draw order, not sorted order, so instances are not biased toward monotone rows
    for i in (1..out.len()).rev() {
        out.swap(i, rng.gen_range(0..=i));
    }
    Ok(out)
}

/// An element of `Z̃^d X` in canonical form: an atom is a simplex of `X`; a
/// sum is a formal combination of elements one level down, sorted, with zero
/// coefficients and basepoint summands removed.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Nested {
    Atom(Simplex),
    Sum(Chain<Nested>),
}

impl Nested {
    /// The generator `[x]` of `Z̃(..)`; the basepoint gives zero.
    pub fn bracket(x: Nested, set: &SimplicialSet) -> Nested {
        if x.is_basepoint(set) {
            Nested::Sum(Chain::zero())
        } else {
            Nested::Sum(Chain::basis(x))
        }
    }

    pub fn sum(terms: Chain<Nested>) -> Nested {
        Nested::Sum(terms)
    }

    /// Nesting depth: 0 for atoms.
    pub fn depth(&self) -> Option<usize> {
        match self {
            Nested::Atom(_) => Some(0),
            Nested::Sum(c) => c.support().next().and_then(Nested::depth).map(|d| d + 1),
        }
    }

    /// The simplicial level, read off the first atom.
    pub fn level(&self) -> Option<usize> {
        match self {
            Nested::Atom(s) => Some(s.dim()),
            Nested::Sum(c) => c.support().next().and_then(Nested::level),
        }
    }

    pub fn is_basepoint(&self, set: &SimplicialSet) -> bool {
        match self {
            Nested::Atom(s) => Some(s.base()) == set.basepoint(),
            Nested::Sum(c) => c.is_zero(),
        }
    }

    pub fn is_zero(&self) -> bool {
        matches!(self, Nested::Sum(c) if c.is_zero())
    }

    fn map_atoms<F: FnMut(&Simplex) -> Simplex>(&self, set: &SimplicialSet, f: &mut F) -> Nested {
        match self {
            Nested::Atom(s) => Nested::Atom(f(s)),
            Nested::Sum(c) => {
                let mut out = Chain::zero();
                for (y, a) in c.terms() {
                    let fy = y.map_atoms(set, f);
                    if !fy.is_basepoint(set) {
                        out.add_term(fy, a.clone());
                    }
                }
                Nested::Sum(out)
            }
        }
    }

    pub fn face(&self, i: usize, set: &SimplicialSet) -> Nested {
        self.map_atoms(set, &mut |s| set.face(s, i))
    }

    pub fn degeneracy(&self, i: usize, set: &SimplicialSet) -> Nested {
        self.map_atoms(set, &mut |s| set.degeneracy(s, i))
    }

    /// Applies `f` to every sub-element at depth `depth` below the top.
    fn at_depth<F: FnMut(&Nested) -> Nested>(&self, depth: usize, set: &SimplicialSet, f: &mut F) -> Nested {
        if depth == 0 {
            return f(self);
        }
        match self {
            Nested::Atom(_) => panic!("element is not nested deeply enough"),
            Nested::Sum(c) => {
                let mut out = Chain::zero();
                for (y, a) in c.terms() {
                    let fy = y.at_depth(depth - 1, set, f);
                    if !fy.is_basepoint(set) {
                        out.add_term(fy, a.clone());
                    }
                }
                Nested::Sum(out)
            }
        }
    }

    /// `[Σ a_i [Σ b_ij y_ij]] ↦ [Σ a_i b_ij y_ij]` at the top.
    pub fn flatten(&self) -> Nested {
        let Nested::Sum(outer) = self else {
            panic!("atoms cannot be flattened")
        };
        let mut out = Chain::zero();
        for (inner, a) in outer.terms() {
            let Nested::Sum(inner) = inner else {
                panic!("depth-one sums cannot be flattened")
            };
            out.add_scaled(inner, a);
        }
        Nested::Sum(out)
    }
}

impl GradedKey for Nested {
    fn degree(&self) -> usize {
        self.level().unwrap_or(0)
    }
}

impl fmt::Debug for Nested {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Nested::Atom(s) => write!(f, "{s:?}"),
            Nested::Sum(c) => {
                write!(f, "[")?;
                for (n, (y, a)) in c.terms().enumerate() {
                    if n > 0 {
                        write!(f, " + ")?;
                    }
                    if a.is_one() {
                        write!(f, "{y:?}")?;
                    } else {
                        write!(f, "{a}·{y:?}")?;
                    }
                }
                if c.is_zero() {
                    write!(f, "0")?;
                }
                write!(f, "]")
            }
        }
    }
}

/// Drops zero keys: the basepoint of `Z̃Y` is zero in the reduced chains.
fn key_chain(pairs: impl IntoIterator<Item = (Nested, Integer)>) -> Chain<Nested> {
    Chain::from_terms(pairs.into_iter().filter(|(n, _)| !n.is_zero()))
}

/// `C(X) -> C(Z̃X)`, `σ ↦ [σ]`: the linear extension of the Hurewicz set map
/// on generators. Chains of `X` are reduced unnormalized chains.
pub struct HurewiczChainMap<'a> {
    set: &'a SimplicialSet,
}

pub fn hurewicz_chain_map(x: &SimplicialSet) -> Result<HurewiczChainMap<'_>> {
    x.require_reduced()?;
    Ok(HurewiczChainMap { set: x })
}

impl<'a> HurewiczChainMap<'a> {
    pub fn set(&self) -> &'a SimplicialSet {
        self.set
    }

    pub fn on_simplex(&self, s: &Simplex) -> Chain<Nested> {
        let b = Nested::bracket(Nested::Atom(s.clone()), self.set);
        key_chain([(b, Integer::one())])
    }

    pub fn apply(&self, c: &Chain<Simplex>) -> Chain<Nested> {
        c.map_linear(|s| self.on_simplex(s))
    }

    /// `∂` on reduced chains of `X`: basepoint faces vanish.
    pub fn source_boundary(&self, c: &Chain<Simplex>) -> Chain<Simplex> {
        c.map_linear(|s| {
            let mut out = Chain::zero();
            for i in (0..=s.dim()).filter(|_| s.dim() > 0) {
                let f = self.set.face(s, i);
                if Some(f.base()) != self.set.basepoint() {
                    out.add_term(f, sign(i));
                }
            }
            out
        })
    }

    /// Checks `∂h = h∂` on every simplex of dimension at most `max_dim`.
    pub fn check_chain_map(&self, max_dim: usize) -> Result<usize> {
        let mut checked = 0;
        for n in 0..=max_dim {
            for s in self.set.simplices(n) {
                let c = Chain::basis(s);
                let lhs = nested_boundary(&self.apply(&c), self.set);
                let rhs = self.apply(&self.source_boundary(&c));
                if lhs != rhs {
                    return Err(Error::InvariantFailed(format!("∂h ≠ h∂ on {c:?}")));
                }
                checked += 1;
            }
        }
        Ok(checked)
    }
}

/// `∂ = Σ(−1)^i d_i` on chains whose keys are elements of `Z̃^d X`.
pub fn nested_boundary(c: &Chain<Nested>, set: &SimplicialSet) -> Chain<Nested> {
    c.map_linear(|y| {
        let n = y.level().unwrap_or(0);
        let mut out = Chain::zero();
        for i in (0..=n).filter(|_| n > 0) {
            let f = y.face(i, set);
            if !f.is_zero() {
                out.add_term(f, sign(i));
            }
        }
        out
    })
}

/// `ε(Σ a_i [Σ_j b_ij σ_ij]) = Σ a_i b_ij σ_ij`.
pub fn cogeneration_eval(x: &Chain<Nested>) -> Result<Chain<Simplex>> {
    let mut out = Chain::zero();
    for (key, a) in x.terms() {
        let Nested::Sum(inner) = key else {
            return Err(Error::InvalidArgument(format!("{key:?} is not a generator key")));
        };
        for (y, b) in inner.terms() {
            let Nested::Atom(s) = y else {
                return Err(Error::InvalidArgument(format!("{key:?} is nested too deeply")));
            };
            out.add_term(s.clone(), a * b);
        }
    }
    Ok(out)
}

/// `[Σ a_i [Σ_j b_ij σ_ij]] ↦ [Σ a_i b_ij σ_ij]` on chains of `Z̃²X`.
pub fn lcell_codegeneracy(x: &Chain<Nested>) -> Result<Chain<Nested>> {
    for key in x.support() {
        if key.depth().is_some_and(|d| d < 2) {
            return Err(Error::InvalidArgument(format!("{key:?} is not a nested generator")));
        }
    }
    Ok(key_chain(x.terms().map(|(k, c)| (k.flatten(), c.clone()))))
}

/// Level `n` of `Q^• = C(Z̃^{•+1}X)` with its element-level coface and
/// codegeneracy evaluators.
#[derive(Clone, Copy, Debug)]
pub struct QLevel<'a> {
    set: &'a SimplicialSet,
    n: usize,
}

pub fn q_level(x: &SimplicialSet, n: usize, max_level: usize) -> Result<QLevel<'_>> {
    x.require_reduced()?;
    if n > max_level {
        return Err(Error::TruncationExceeded {
            level: n,
            bound: max_level,
        });
    }
    Ok(QLevel { set: x, n })
}

impl<'a> QLevel<'a> {
    pub fn level(&self) -> usize {
        self.n
    }

    /// Elements of `Z̃^{n+1}X` have this depth.
    pub fn depth(&self) -> usize {
        self.n + 1
    }

    fn check(&self, x: &Nested) -> Result<()> {
        match x.depth() {
            Some(d) if d != self.depth() => Err(Error::InvalidArgument(format!(
                "{x:?} has depth {d}, level {} needs {}",
                self.n,
                self.depth()
            ))),
            _ if matches!(x, Nested::Atom(_)) => Err(Error::InvalidArgument("atoms are not chain keys".into())),
            _ => Ok(()),
        }
    }

    /// `δ^i = C(Z̃^i h Z̃^{n+1−i})`, `0 ≤ i ≤ n + 1`: a Hurewicz bracket at depth `i`.
    pub fn coface(&self, i: usize, x: &Nested) -> Result<Nested> {
        self.check(x)?;
        if i > self.n + 1 {
            return Err(Error::InvalidArgument(format!(
                "δ^{i} does not exist on level {}",
                self.n
            )));
        }
        Ok(x.at_depth(i, self.set, &mut |y| Nested::bracket(y.clone(), self.set)))
    }

    /// `s^i = C(Z̃^i γ Z̃^{n−1−i})`, `0 ≤ i < n`: multiplies out the bracket at depth `i`.
    pub fn codegeneracy(&self, i: usize, x: &Nested) -> Result<Nested> {
        self.check(x)?;
        if i >= self.n {
            return Err(Error::InvalidArgument(format!(
                "s^{i} does not exist on level {}",
                self.n
            )));
        }
        Ok(x.at_depth(i, self.set, &mut Nested::flatten))
    }

    pub fn coface_chain(&self, i: usize, c: &Chain<Nested>) -> Result<Chain<Nested>> {
        let mut out = Chain::zero();
        for (k, a) in c.terms() {
            let y = self.coface(i, k)?;
            if !y.is_zero() {
                out.add_term(y, a.clone());
            }
        }
        Ok(out)
    }

    pub fn codegeneracy_chain(&self, i: usize, c: &Chain<Nested>) -> Result<Chain<Nested>> {
        let mut out = Chain::zero();
        for (k, a) in c.terms() {
            let y = self.codegeneracy(i, k)?;
            if !y.is_zero() {
                out.add_term(y, a.clone());
            }
        }
        Ok(out)
    }

    /// A random nonzero element of `Z̃^{n+1}X` in simplicial level `dim`.
    pub fn sample<R: Rng + ?Sized>(&self, dim: usize, rng: &mut R) -> Nested {
        sample_nested(self.set, self.depth(), dim, rng)
    }
}

/// A random nonzero element of `Z̃^depth X` in simplicial level `dim`, with
/// up to three summands per level and coefficients in `[−3, 3]`. Panics if
/// every `dim`-simplex is at the basepoint.
pub fn sample_nested<R: Rng + ?Sized>(set: &SimplicialSet, depth: usize, dim: usize, rng: &mut R) -> Nested {
    let atoms: Vec<Simplex> = set
        .simplices(dim)
        .into_iter()
        .filter(|s| Some(s.base()) != set.basepoint())
        .collect();
    assert!(!atoms.is_empty(), "no non-basepoint simplices in dimension {dim}");
    loop {
        let x = if depth == 0 {
            Nested::Atom(atoms[rng.gen_range(0..atoms.len())].clone())
        } else {
            let mut c = Chain::zero();
            for _ in 0..rng.gen_range(1..=3) {
                let y = sample_nested(set, depth - 1, dim, rng);
                c.add_term(y, Integer::from(rng.gen_range(-3..=3)));
            }
            Nested::Sum(c)
        };
        if !x.is_basepoint(set) {
            return x;
        }
    }
}

/// One cosimplicial identity checked on one element.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdentityCheck {
    pub level: usize,
    pub identity: String,
    pub holds: bool,
}

/// Every cosimplicial identity among `δ^0..δ^{n+1}` and `s^0..s^{n−1}`
/// defined on level `n`, evaluated on `x`.
pub fn cosimplicial_identities(
    set: &SimplicialSet,
    n: usize,
    x: &Nested,
    max_level: usize,
) -> Result<Vec<IdentityCheck>> {
    // the identities pass through level n + 1, one above the sampled level
    let q = |m: usize| q_level(set, m, max_level + 1);
    let here = q(n)?;
    let mut out = Vec::new();
    let mut push = |identity: String, holds: bool| {
        out.push(IdentityCheck {
            level: n,
            identity,
            holds,
        })
    };
    // δ^j δ^i = δ^i δ^{j−1} for i < j, while the target stays within the bound
    let up = q(n + 1)?;
    if n + 2 <= max_level + 1 {
        for j in 1..=n + 2 {
            for i in 0..j {
                let lhs = up.coface(j, &here.coface(i, x)?)?;
                let rhs = up.coface(i, &here.coface(j - 1, x)?)?;
                push(format!("δ^{j}δ^{i} = δ^{i}δ^{}", j - 1), lhs == rhs);
            }
        }
    }
    // s^j δ^i on level n: δ^i: Q^n -> Q^{n+1}, then s^j: Q^{n+1} -> Q^n
    for j in 0..=n {
        for i in 0..=n + 1 {
            let lhs = up.codegeneracy(j, &here.coface(i, x)?)?;
            let (rhs, name) = if i == j || i == j + 1 {
                (x.clone(), format!("s^{j}δ^{i} = id"))
            } else if i < j {
                let below = q(n - 1)?;
                (
                    below.coface(i, &here.codegeneracy(j - 1, x)?)?,
                    format!("s^{j}δ^{i} = δ^{i}s^{}", j - 1),
                )
            } else {
                let below = q(n - 1)?;
                (
                    below.coface(i - 1, &here.codegeneracy(j, x)?)?,
                    format!("s^{j}δ^{i} = δ^{}s^{j}", i - 1),
                )
            };
            push(name, lhs == rhs);
        }
    }
    // s^j s^i = s^i s^{j+1} for i ≤ j, from level n down to n − 2
    if n >= 2 {
        let below = q(n - 1)?;
        for j in 0..n - 1 {
            for i in 0..=j {
                let lhs = below.codegeneracy(j, &here.codegeneracy(i, x)?)?;
                let rhs = below.codegeneracy(i, &here.codegeneracy(j + 1, x)?)?;
                push(format!("s^{j}s^{i} = s^{i}s^{}", j + 1), lhs == rhs);
            }
        }
    }
    Ok(out)
}

/// Flattening a depth-3 generator at the top or one level down, then once
/// more, gives the same depth-1 generator (associativity of `Z̃Z̃ -> Z̃`).
pub fn codegeneracy_commutation(x: &Nested, set: &SimplicialSet) -> Result<bool> {
    if x.depth() != Some(3) {
        return Err(Error::InvalidArgument(format!("{x:?} is not a depth-3 generator")));
    }
    let via_inner = x.at_depth(1, set, &mut Nested::flatten).flatten();
    Ok(via_inner == x.flatten().flatten())
}
