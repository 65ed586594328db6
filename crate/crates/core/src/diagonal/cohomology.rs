//! Cochains, cup-i products, mod-2 cohomology and Steenrod squares.

use num_integer::Integer as _;
use num_traits::Zero;

use super::table::higher_diagonal;
use crate::exactalg::matrix::{kernel_basis, EchelonSpan, Matrix};
use crate::exactalg::FreeElement;
use crate::scalar::{Coefficient, F2};
use crate::simplicial::{SimplexId, SimplicialSet};
use crate::{Error, Integer, Result};

/// A cochain on normalized chains: a value on each nondegenerate simplex of
/// one dimension.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Cochain<R = Integer> {
    degree: usize,
    values: FreeElement<SimplexId, R>,
}

impl<R: Coefficient> Cochain<R> {
    pub fn new(degree: usize, values: FreeElement<SimplexId, R>) -> Result<Self> {
        if let Some(s) = values.support().find(|s| s.dim != degree) {
            return Err(Error::DegreeMismatch(format!("{s:?} in a {degree}-cochain")));
        }
        Ok(Cochain { degree, values })
    }

    pub fn zero(degree: usize) -> Self {
        Cochain {
            degree,
            values: FreeElement::zero(),
        }
    }

    /// The dual basis element `σ*`.
    pub fn dual(sigma: SimplexId) -> Self {
        Cochain {
            degree: sigma.dim,
            values: FreeElement::basis(sigma),
        }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn values(&self) -> &FreeElement<SimplexId, R> {
        &self.values
    }

    pub fn is_zero(&self) -> bool {
        self.values.is_zero()
    }

    pub fn at(&self, sigma: &SimplexId) -> R {
        self.values.coefficient(sigma)
    }

    /// `(δu)(τ) = u(∂τ)`.
    pub fn coboundary(&self, x: &SimplicialSet) -> Cochain<R> {
        let n = self.degree + 1;
        let mut values = FreeElement::zero();
        for tau in x.nondegenerate(n) {
            let mut total = R::zero();
            for j in 0..=n {
                let face = x.stored_face(tau, j);
                if !face.is_degenerate() {
                    total = total + crate::scalar::sign::<R>(j) * self.at(&face.base());
                }
            }
            values.add_term(tau, total);
        }
        Cochain { degree: n, values }
    }

    pub fn is_cocycle(&self, x: &SimplicialSet) -> bool {
        self.coboundary(x).is_zero()
    }

    /// Coordinates in the nondegenerate simplices of the cochain's degree.
    pub fn to_vector(&self, x: &SimplicialSet) -> Vec<R> {
        x.nondegenerate(self.degree).map(|s| self.at(&s)).collect()
    }

    pub fn from_vector(x: &SimplicialSet, degree: usize, v: &[R]) -> Self {
        Cochain {
            degree,
            values: x.nondegenerate(degree).zip(v.iter().cloned()).collect(),
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        if self.degree != other.degree {
            return Err(Error::DegreeMismatch(format!("{} vs {}", self.degree, other.degree)));
        }
        Ok(Cochain {
            degree: self.degree,
            values: &self.values + &other.values,
        })
    }
}

impl Cochain<F2> {
    /// The 0/1 integer lift.
    pub fn lift(&self) -> Cochain<Integer> {
        Cochain {
            degree: self.degree,
            values: self.values.map_coefficients(|_| Integer::from(1)),
        }
    }
}

impl<R: Coefficient> std::fmt::Debug for Cochain<R> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "C^{}({:?})", self.degree, self.values)
    }
}

/// `(u ∪_i v)(σ) = (u ⊗ v)(f(e_i ⊗ σ))`, evaluated with the Koszul sign
/// `(u ⊗ v)(a ⊗ b) = (−1)^{|v||a|} u(a) v(b)`.
pub fn cup_i<R: Coefficient>(u: &Cochain<R>, v: &Cochain<R>, i: i64, x: &SimplicialSet) -> Result<Cochain<R>> {
    if i < 0 {
        return Err(Error::NegativeIndex(i));
    }
    let i = i as usize;
    let (p, q) = (u.degree, v.degree);
    if i > p + q {
        return Err(Error::DegreeMismatch(format!("∪_{i} of degrees {p} and {q}")));
    }
    let n = p + q - i;
    let pair = [u, v];
    let mut values = FreeElement::zero();
    for sigma in x.nondegenerate(n) {
        let diag = higher_diagonal(i, sigma, x).map_coefficients(R::from_integer);
        let mut evaluators: Vec<_> = pair.iter().map(|c| move |k: &SimplexId| c.at(k)).collect();
        values.add_term(sigma, diag.evaluate(&mut evaluators, &[p, q]));
    }
    Ok(Cochain { degree: n, values })
}

/// `H^q(X; F_2)` with chosen cocycle representatives.
#[derive(Clone, Debug)]
pub struct CohomologyF2 {
    degree: usize,
    span: EchelonSpan<F2>,
    // positions, among the vectors inserted into `span`, of the representatives
    rep_slots: Vec<usize>,
    representatives: Vec<Cochain<F2>>,
}

fn boundary_rows(x: &SimplicialSet, q: usize) -> Matrix<F2> {
    // row per (q+1)-simplex τ, column per q-simplex σ: coefficient of σ in ∂τ
    let cols: Vec<SimplexId> = x.nondegenerate(q).collect();
    let rows: Vec<Vec<F2>> = x
        .nondegenerate(q + 1)
        .map(|tau| {
            let mut row = vec![F2::ZERO; cols.len()];
            for j in 0..=q + 1 {
                let face = x.stored_face(tau, j);
                if !face.is_degenerate() {
                    row[face.base().index] = row[face.base().index] + F2::ONE;
                }
            }
            row
        })
        .collect();
    if rows.is_empty() {
        Matrix::zeros(0, cols.len())
    } else {
        Matrix::from_rows(rows)
    }
}

/// Row reduction of the mod-2 coboundaries; representatives extend a basis
/// of the coboundaries to one of the cocycles, taken from the kernel basis.
pub fn cohomology_f2(x: &SimplicialSet, q: usize) -> CohomologyF2 {
    let dim_q = x.count(q);
    let cocycles = kernel_basis(&boundary_rows(x, q));
    let mut span = EchelonSpan::new(dim_q);
    if q >= 1 {
        // column `ρ` of the previous boundary matrix is the coboundary of ρ*
        let previous = boundary_rows(x, q - 1);
        for col in 0..previous.cols() {
            let v: Vec<F2> = (0..previous.rows()).map(|r| *previous.get(r, col)).collect();
            span.insert(&v);
        }
    }
    let offset = if q >= 1 { x.count(q - 1) } else { 0 };
    let mut rep_slots = Vec::new();
    let mut representatives = Vec::new();
    for (j, z) in cocycles.iter().enumerate() {
        if span.insert(z) {
            rep_slots.push(offset + j);
            representatives.push(Cochain::from_vector(x, q, z));
        }
    }
    CohomologyF2 {
        degree: q,
        span,
        rep_slots,
        representatives,
    }
}

impl CohomologyF2 {
    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn rank(&self) -> usize {
        self.representatives.len()
    }

    pub fn representatives(&self) -> &[Cochain<F2>] {
        &self.representatives
    }

    /// Coordinates of the class of a cocycle in the representative basis.
    pub fn coordinates(&self, u: &Cochain<F2>, x: &SimplicialSet) -> Result<Vec<F2>> {
        if u.degree != self.degree {
            return Err(Error::DegreeMismatch(format!(
                "{}-cochain in H^{}",
                u.degree, self.degree
            )));
        }
        if !u.is_cocycle(x) {
            return Err(Error::NotACocycle);
        }
        let v = u.to_vector(x);
        let (rem, combo) = self.span.reduce(&v);
        debug_assert!(rem.iter().all(|c| *c == F2::ZERO));
        Ok(self
            .rep_slots
            .iter()
            .map(|&s| combo.get(s).copied().unwrap_or(F2::ZERO))
            .collect())
    }

    pub fn class_of(&self, u: &Cochain<F2>, x: &SimplicialSet) -> Result<CochainClass> {
        Ok(CochainClass {
            degree: self.degree,
            coordinates: self.coordinates(u, x)?,
            representative: u.clone(),
        })
    }

    /// The class with the given coordinates, represented by the matching sum
    /// of representatives.
    pub fn class_from_coordinates(&self, coordinates: &[F2]) -> CochainClass {
        assert_eq!(coordinates.len(), self.rank());
        let mut rep = Cochain::zero(self.degree);
        for (c, r) in coordinates.iter().zip(&self.representatives) {
            if c.bit() {
                rep = rep.add(r).expect("same degree");
            }
        }
        CochainClass {
            degree: self.degree,
            representative: rep,
            coordinates: coordinates.to_vec(),
        }
    }

    pub fn basis_classes(&self) -> Vec<CochainClass> {
        (0..self.rank())
            .map(|j| {
                let mut coords = vec![F2::ZERO; self.rank()];
                coords[j] = F2::ONE;
                self.class_from_coordinates(&coords)
            })
            .collect()
    }
}

/// An element of `H^q(X; F_2)`: a representative cocycle and its coordinates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CochainClass {
    pub degree: usize,
    pub representative: Cochain<F2>,
    pub coordinates: Vec<F2>,
}

impl CochainClass {
    pub fn is_zero(&self) -> bool {
        self.coordinates.iter().all(|c| !c.bit())
    }
}

/// `Sq^i u = u ∪_{q−i} u` in `H^{q+i}(X; F_2)`; zero for `i > q`.
pub fn steenrod_square(i: i64, u: &Cochain<F2>, x: &SimplicialSet) -> Result<CochainClass> {
    if i < 0 {
        return Err(Error::NegativeIndex(i));
    }
    let target = cohomology_f2(x, u.degree + i as usize);
    steenrod_square_in(i, u, x, &target)
}

/// As [`steenrod_square`], with a precomputed target cohomology group.
pub fn steenrod_square_in(i: i64, u: &Cochain<F2>, x: &SimplicialSet, target: &CohomologyF2) -> Result<CochainClass> {
    if i < 0 {
        return Err(Error::NegativeIndex(i));
    }
    let q = u.degree as i64;
    if !u.is_cocycle(x) {
        return Err(Error::NotACocycle);
    }
    if target.degree() as i64 != q + i {
        return Err(Error::DegreeMismatch(format!(
            "Sq^{i} of a degree-{q} class lands in degree {}",
            q + i
        )));
    }
    if i > q {
        return Ok(target.class_from_coordinates(&vec![F2::ZERO; target.rank()]));
    }
    let square = cup_i(u, u, q - i, x)?;
    target.class_of(&square, x)
}

/// The mod-2 Bockstein `β u = (δ ũ / 2) mod 2` of an integer lift `ũ`.
pub fn bockstein(u: &Cochain<F2>, x: &SimplicialSet) -> Result<Cochain<F2>> {
    if !u.is_cocycle(x) {
        return Err(Error::NotACocycle);
    }
    let du = u.lift().coboundary(x);
    let two = Integer::from(2);
    let mut values = FreeElement::zero();
    for (s, c) in du.values().terms() {
        let (half, rem) = c.div_rem(&two);
        debug_assert!(rem.is_zero(), "lift of a mod-2 cocycle has even coboundary");
        values.add_term(*s, F2::reduce(&half));
    }
    Cochain::new(u.degree + 1, values)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::simplicial::{simplex_boundary, std_simplex};

    #[test]
    fn cup_zero_on_the_interval() {
        let d1 = std_simplex(1);
        let v0 = Cochain::<Integer>::dual(d1.find("0").unwrap());
        let e = Cochain::<Integer>::dual(d1.find("[0,1]").unwrap());
        let w = cup_i(&v0, &e, 0, &d1).unwrap();
        assert_eq!(w.at(&d1.find("[0,1]").unwrap()), Integer::from(1));
        assert!(matches!(cup_i(&v0, &e, -1, &d1), Err(Error::NegativeIndex(-1))));
    }

    #[test]
    fn sphere_cohomology_ranks() {
        let s2 = simplex_boundary(3);
        let ranks: Vec<usize> = (0..=2).map(|q| cohomology_f2(&s2, q).rank()).collect();
        assert_eq!(ranks, vec![1, 0, 1]);
    }
}
