//! Chains on the standard simplex `Δ^k` in vertex notation.

use std::cmp::Ordering;
use std::fmt;

use crate::exactalg::{ChainComplex, GradedKey};
use crate::scalar::sign;
use crate::{Chain, Integer, Tensor};

/// A face `[i_0, .., i_t]` of a standard simplex, as a vertex bitmask.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Face(u32);

/// Largest supported standard simplex dimension.
pub const MAX_VERTEX: usize = 31;

impl Face {
    /// Panics on an empty or out-of-range vertex list.
    pub fn new(vertices: &[usize]) -> Self {
        assert!(!vertices.is_empty(), "a face needs a vertex");
        let mut mask = 0u32;
        for &v in vertices {
            assert!(v < MAX_VERTEX, "vertex {v} out of range");
            mask |= 1 << v;
        }
        Face(mask)
    }

    pub fn vertex(v: usize) -> Self {
        Face::new(&[v])
    }

    /// The top face `[0..k]` of `Δ^k`.
    pub fn top(k: usize) -> Self {
        assert!(k < MAX_VERTEX);
        Face(((1u64 << (k + 1)) - 1) as u32)
    }

    pub fn from_mask(mask: u32) -> Self {
        assert_ne!(mask, 0);
        Face(mask)
    }

    pub fn mask(self) -> u32 {
        self.0
    }

    pub fn dim(self) -> usize {
        self.0.count_ones() as usize - 1
    }

    pub fn contains(self, v: usize) -> bool {
        self.0 >> v & 1 == 1
    }

    pub fn vertices(self) -> Vec<usize> {
        (0..32).filter(|&v| self.contains(v)).collect()
    }

    pub fn last(self) -> usize {
        31 - self.0.leading_zeros() as usize
    }

    /// The face with its `j`-th vertex (in order) removed.
    pub fn remove_nth(self, j: usize) -> Option<Self> {
        let v = self.vertices()[j];
        let rest = self.0 & !(1 << v);
        (rest != 0).then_some(Face(rest))
    }

    /// Image under the vertex map `v ↦ map[v]` (assumed increasing).
    pub fn relabel(self, map: &[usize]) -> Self {
        Face::new(&self.vertices().iter().map(|&v| map[v]).collect::<Vec<_>>())
    }

    /// Image under the coface `δ^j: Δ^{k-1} -> Δ^k` (skip vertex `j`).
    pub fn coface(self, j: usize) -> Self {
        let low = self.0 & ((1u32 << j) - 1);
        let high = (self.0 >> j) << (j + 1);
        Face(low | high)
    }
}

impl Ord for Face {
    /// Lexicographic on vertex lists: `[0] < [0,1] < [0,1,2] < [0,2] < [1]`.
    fn cmp(&self, other: &Self) -> Ordering {
        let (mut a, mut b) = (self.0, other.0);
        loop {
            match (a == 0, b == 0) {
                (true, true) => return Ordering::Equal,
                (true, false) => return Ordering::Less,
                (false, true) => return Ordering::Greater,
                _ => {}
            }
            let (x, y) = (a.trailing_zeros(), b.trailing_zeros());
            if x != y {
                return x.cmp(&y);
            }
            a &= a - 1;
            b &= b - 1;
        }
    }
}

impl PartialOrd for Face {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl GradedKey for Face {
    fn degree(&self) -> usize {
        self.dim()
    }
}

impl fmt::Debug for Face {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let vs: Vec<String> = self.vertices().iter().map(usize::to_string).collect();
        write!(f, "[{}]", vs.join(","))
    }
}

/// Normalized chains `C(Δ^k)` on faces.
#[derive(Clone, Copy, Debug)]
pub struct SimplexChains {
    k: usize,
}

impl SimplexChains {
    pub fn new(k: usize) -> Self {
        assert!(k < MAX_VERTEX);
        SimplexChains { k }
    }

    pub fn dim(&self) -> usize {
        self.k
    }
}

pub fn face_boundary(face: Face) -> Chain<Face> {
    let t = face.dim();
    let mut out = Chain::zero();
    if t == 0 {
        return out;
    }
    for j in 0..=t {
        out.add_term(face.remove_nth(j).expect("positive dimension"), sign(j));
    }
    out
}

impl ChainComplex for SimplexChains {
    type Key = Face;

    fn basis(&self, degree: usize) -> Option<Vec<Face>> {
        let n = self.k + 1;
        let mut out: Vec<Face> = (1u32..(1u32 << n))
            .filter(|m| m.count_ones() as usize == degree + 1)
            .map(Face)
            .collect();
        out.sort();
        Some(out)
    }

    fn boundary(&self, _degree: usize, key: &Face) -> Chain<Face> {
        face_boundary(*key)
    }

    fn augmentation(&self, key: &Face) -> Option<Integer> {
        Some(Integer::from(i32::from(key.dim() == 0)))
    }

    fn has_augmentation(&self) -> bool {
        true
    }
}

/// `φ_k[i_0..i_t] = (−1)^{t+1}[i_0..i_t,k]` if `i_t ≠ k`, else 0.
pub fn phi(k: usize, face: Face) -> Chain<Face> {
    if face.contains(k) {
        return Chain::zero();
    }
    let t = face.dim();
    Chain::term(Face(face.0 | 1 << k), sign(t + 1))
}

/// The contracting homotopy of `C(Δ^k)` onto the vertex `[k]`, extended linearly.
pub fn contracting_homotopy(k: usize, c: &Chain<Face>) -> Chain<Face> {
    c.map_linear(|f| phi(k, *f))
}

/// `Φ_k = φ_k ⊗ 1 + iε ⊗ φ_k` on `C(Δ^k) ⊗ C(Δ^k)`; the Koszul sign of the
/// second term is trivial because `iε` is nonzero only in degree 0.
pub fn tensor_homotopy(k: usize, x: &Tensor<Face>) -> Tensor<Face> {
    let mut out = Tensor::zero(2);
    for (factors, c) in x.terms() {
        let (a, b) = (factors[0], factors[1]);
        for (pa, s) in phi(k, a).terms() {
            out.add_term(vec![*pa, b], c * s);
        }
        if a.dim() == 0 {
            for (pb, s) in phi(k, b).terms() {
                out.add_term(vec![Face::vertex(k), *pb], c * s);
            }
        }
    }
    out
}

/// The Alexander-Whitney diagonal of the top face of `Δ^k`,
/// `Σ_i [0..i] ⊗ [i..k]`.
pub fn aw_top(k: usize) -> Tensor<Face> {
    let mut out = Tensor::zero(2);
    for i in 0..=k {
        let front = Face::new(&(0..=i).collect::<Vec<_>>());
        let back = Face::new(&(i..=k).collect::<Vec<_>>());
        out.add_term(vec![front, back], Integer::from(1));
    }
    out
}

/// Alexander-Whitney diagonal of any face, by relabeling.
pub fn aw_diagonal(face: Face) -> Tensor<Face> {
    let vs = face.vertices();
    aw_top(face.dim()).map_factors(|f| Some(f.relabel(&vs)))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f(vs: &[usize]) -> Face {
        Face::new(vs)
    }

    #[test]
    fn homotopy_examples() {
        assert_eq!(phi(2, f(&[0, 1])), Chain::basis(f(&[0, 1, 2])));
        assert!(phi(2, f(&[0, 2])).is_zero());
        assert_eq!(phi(2, f(&[1])), Chain::term(f(&[1, 2]), (-1).into()));
    }

    #[test]
    fn homotopy_squares_to_zero_and_contracts() {
        for k in 0..=5 {
            let c = SimplexChains::new(k);
            for t in 0..=k {
                for face in c.basis(t).unwrap() {
                    let x = Chain::basis(face);
                    assert!(contracting_homotopy(k, &contracting_homotopy(k, &x)).is_zero());
                    // ∂φ + φ∂ = 1 − iε
                    let dphi = contracting_homotopy(k, &x).map_linear(|g| face_boundary(*g));
                    let phid = contracting_homotopy(k, &face_boundary(face));
                    let mut lhs = dphi + phid;
                    if t == 0 {
                        lhs.add_term(Face::vertex(k), 1.into());
                    }
                    assert_eq!(lhs, x, "failed on {face:?}");
                }
            }
        }
    }

    #[test]
    fn aw_examples() {
        let t = |a: &[usize], b: &[usize]| Tensor::pure(vec![f(a), f(b)]);
        assert_eq!(aw_diagonal(f(&[0])), t(&[0], &[0]));
        assert_eq!(aw_top(1), t(&[0], &[0, 1]) + t(&[0, 1], &[1]));
        assert_eq!(
            aw_top(2),
            t(&[0], &[0, 1, 2]) + t(&[0, 1], &[1, 2]) + t(&[0, 1, 2], &[2])
        );
        assert_eq!(aw_diagonal(f(&[1, 3])), t(&[1], &[1, 3]) + t(&[1, 3], &[3]));
    }

    #[test]
    fn face_order_and_cofaces() {
        let mut v = vec![f(&[1]), f(&[0, 2]), f(&[0, 1, 2]), f(&[0]), f(&[0, 1])];
        v.sort();
        assert_eq!(v, vec![f(&[0]), f(&[0, 1]), f(&[0, 1, 2]), f(&[0, 2]), f(&[1])]);
        assert_eq!(f(&[0, 1, 2]).coface(1), f(&[0, 2, 3]));
        assert_eq!(f(&[0, 1]).coface(2), f(&[0, 1]));
    }
}
