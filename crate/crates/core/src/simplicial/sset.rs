use std::collections::{BTreeMap, BTreeSet, VecDeque};
use std::fmt;

use super::surjection::{coface, epi_mono, Surjection};
use crate::exactalg::GradedKey;
use crate::{Error, Result};

/// A nondegenerate simplex of a particular simplicial set.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct SimplexId {
    pub dim: usize,
    pub index: usize,
}

impl SimplexId {
    pub fn new(dim: usize, index: usize) -> Self {
        SimplexId { dim, index }
    }
}

impl GradedKey for SimplexId {
    fn degree(&self) -> usize {
        self.dim
    }
}

/// An arbitrary simplex `η^* y`: a degeneracy operator applied to a
/// nondegenerate simplex (the Eilenberg-Zilber decomposition).
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Simplex {
    op: Surjection,
    base: SimplexId,
}

impl Simplex {
    pub fn new(op: Surjection, base: SimplexId) -> Self {
        assert_eq!(op.target_dim(), base.dim, "operator does not land on the base simplex");
        Simplex { op, base }
    }

    pub fn nondegenerate(base: SimplexId) -> Self {
        Simplex {
            op: Surjection::identity(base.dim),
            base,
        }
    }

    /// The totally degenerate `n`-simplex on a vertex.
    pub fn constant(vertex: SimplexId, n: usize) -> Self {
        assert_eq!(vertex.dim, 0);
        Simplex::new(Surjection::constant(n), vertex)
    }

    pub fn dim(&self) -> usize {
        self.op.source_dim()
    }

    pub fn op(&self) -> &Surjection {
        &self.op
    }

    pub fn base(&self) -> SimplexId {
        self.base
    }

    pub fn is_degenerate(&self) -> bool {
        !self.op.is_identity()
    }
}

impl GradedKey for Simplex {
    fn degree(&self) -> usize {
        self.dim()
    }
}

impl fmt::Debug for Simplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_degenerate() {
            write!(f, "{:?}·", self.op)?;
        }
        write!(f, "x{}_{}", self.base.dim, self.base.index)
    }
}

/// A finite simplicial set presented by its nondegenerate simplices and their faces.
#[derive(Clone, PartialEq, Eq)]
pub struct SimplicialSet {
    labels: Vec<Vec<String>>,
    faces: Vec<Vec<Vec<Simplex>>>,
    basepoint: Option<SimplexId>,
}

#[derive(Clone, Debug, Default)]
pub struct SimplicialSetBuilder {
    labels: Vec<Vec<String>>,
    faces: Vec<Vec<Vec<Simplex>>>,
}

impl SimplicialSetBuilder {
    pub fn new() -> Self {
        Self::default()
    }

    fn ensure_dim(&mut self, dim: usize) {
        while self.labels.len() <= dim {
            self.labels.push(Vec::new());
            self.faces.push(Vec::new());
        }
    }

    pub fn add_vertex(&mut self, label: impl Into<String>) -> SimplexId {
        self.ensure_dim(0);
        self.labels[0].push(label.into());
        self.faces[0].push(Vec::new());
        SimplexId::new(0, self.labels[0].len() - 1)
    }

    /// Adds a nondegenerate simplex of dimension `faces.len() - 1` with faces
    /// `d_0 .. d_n` (each possibly degenerate).
    pub fn add_simplex(&mut self, label: impl Into<String>, faces: Vec<Simplex>) -> Result<SimplexId> {
        if faces.len() < 2 {
            return Err(Error::InvalidSimplicialSet(
                "a positive-dimensional simplex needs at least two faces".into(),
            ));
        }
        let dim = faces.len() - 1;
        for (i, face) in faces.iter().enumerate() {
            let b = face.base();
            if face.dim() != dim - 1 || self.labels.get(b.dim).is_none_or(|l| b.index >= l.len()) {
                return Err(Error::InvalidSimplicialSet(format!(
                    "face d{i} of a {dim}-simplex is not a known ({})-simplex",
                    dim - 1
                )));
            }
        }
        self.ensure_dim(dim);
        self.labels[dim].push(label.into());
        self.faces[dim].push(faces);
        Ok(SimplexId::new(dim, self.labels[dim].len() - 1))
    }

    /// Validates the face identities `d_i d_j = d_{j-1} d_i` (`i < j`).
    pub fn build(self) -> Result<SimplicialSet> {
        let set = SimplicialSet {
            labels: self.labels,
            faces: self.faces,
            basepoint: None,
        };
        for n in 2..=set.dim() {
            for y in set.nondegenerate(n) {
                let x = Simplex::nondegenerate(y);
                for j in 1..=n {
                    for i in 0..j {
                        if set.face(&set.face(&x, j), i) != set.face(&set.face(&x, i), j - 1) {
                            return Err(Error::InvalidSimplicialSet(format!(
                                "d{i}d{j} != d{}d{i} on {}",
                                j - 1,
                                set.label(y)
                            )));
                        }
                    }
                }
            }
        }
        Ok(set)
    }
}

impl SimplicialSet {
    /// Top dimension with a nondegenerate simplex (0 for the empty set).
    pub fn dim(&self) -> usize {
        self.labels.iter().rposition(|l| !l.is_empty()).unwrap_or(0)
    }

    pub fn count(&self, n: usize) -> usize {
        self.labels.get(n).map_or(0, Vec::len)
    }

    /// The f-vector: nondegenerate simplices per dimension.
    pub fn f_vector(&self) -> Vec<usize> {
        (0..=self.dim()).map(|n| self.count(n)).collect()
    }

    pub fn nondegenerate(&self, n: usize) -> impl Iterator<Item = SimplexId> {
        (0..self.count(n)).map(move |i| SimplexId::new(n, i))
    }

    pub fn label(&self, id: SimplexId) -> &str {
        &self.labels[id.dim][id.index]
    }

    pub fn find(&self, label: &str) -> Option<SimplexId> {
        self.labels
            .iter()
            .enumerate()
            .find_map(|(d, ls)| ls.iter().position(|l| l == label).map(|i| SimplexId::new(d, i)))
    }

    /// `d_i` of a nondegenerate simplex, as stored.
    pub fn stored_face(&self, id: SimplexId, i: usize) -> &Simplex {
        &self.faces[id.dim][id.index][i]
    }

    /// `θ^* x` for a weakly increasing `θ: [p] -> [dim x]`.
    pub fn act(&self, x: &Simplex, theta: &[usize]) -> Simplex {
        let mut v: Vec<usize> = theta.iter().map(|&t| x.op.values()[t]).collect();
        let mut y = x.base;
        loop {
            let (epi, image) = epi_mono(&v);
            if image.len() == y.dim + 1 {
                return Simplex::new(epi, y);
            }
            let j = (0..=y.dim)
                .rev()
                .find(|k| image.binary_search(k).is_err())
                .expect("missing vertex");
            let face = self.stored_face(y, j);
            v = v
                .iter()
                .map(|&t| face.op.values()[if t > j { t - 1 } else { t }])
                .collect();
            y = face.base;
        }
    }

    pub fn face(&self, x: &Simplex, i: usize) -> Simplex {
        assert!(x.dim() >= 1 && i <= x.dim(), "face index out of range");
        self.act(x, &coface(x.dim(), i))
    }

    pub fn degeneracy(&self, x: &Simplex, i: usize) -> Simplex {
        assert!(i <= x.dim(), "degeneracy index out of range");
        Simplex::new(x.op.compose(&Surjection::codegeneracy(x.dim(), i)), x.base)
    }

    /// The `k`-th vertex of a simplex.
    pub fn vertex(&self, x: &Simplex, k: usize) -> SimplexId {
        self.act(x, &[k]).base
    }

    /// All `n`-simplices, degenerate ones included.
    pub fn simplices(&self, n: usize) -> Vec<Simplex> {
        let mut out = Vec::new();
        for m in 0..=n.min(self.dim()) {
            let ops = Surjection::all(n, m);
            for y in self.nondegenerate(m) {
                out.extend(ops.iter().map(|op| Simplex::new(op.clone(), y)));
            }
        }
        out
    }

    pub fn basepoint(&self) -> Option<SimplexId> {
        self.basepoint
    }

    pub fn with_basepoint(mut self, vertex: SimplexId) -> Result<Self> {
        if vertex.dim != 0 || vertex.index >= self.count(0) {
            return Err(Error::InvalidSimplicialSet("basepoint must be a vertex".into()));
        }
        self.basepoint = Some(vertex);
        Ok(self)
    }

    pub fn is_pointed(&self) -> bool {
        self.basepoint.is_some()
    }

    /// Pointed with exactly one vertex.
    pub fn is_reduced(&self) -> bool {
        self.is_pointed() && self.count(0) == 1
    }

    /// The basepoint's (totally degenerate) `n`-simplex.
    pub fn basepoint_simplex(&self, n: usize) -> Option<Simplex> {
        self.basepoint.map(|b| Simplex::constant(b, n))
    }

    pub fn require_reduced(&self) -> Result<()> {
        if self.is_reduced() {
            Ok(())
        } else {
            Err(Error::NotReduced(format!(
                "{} vertices{}",
                self.count(0),
                if self.is_pointed() { "" } else { ", no basepoint" }
            )))
        }
    }

    pub fn require_pointed(&self) -> Result<SimplexId> {
        self.basepoint.ok_or_else(|| Error::NotReduced("no basepoint".into()))
    }

    /// Checks all five families of simplicial identities on every simplex
    /// (degenerate ones included) of dimension at most `max_dim`.
    pub fn check_simplicial_identities(&self, max_dim: usize) -> Result<()> {
        let fail = |what: &str, x: &Simplex| Err(Error::InvalidSimplicialSet(format!("{what} fails on {x:?}")));
        for n in 0..=max_dim {
            for x in self.simplices(n) {
                for j in 0..=n {
                    for i in 0..=j {
                        if self.degeneracy(&self.degeneracy(&x, j), i)
                            != self.degeneracy(&self.degeneracy(&x, i), j + 1)
                        {
                            return fail("s_i s_j = s_{j+1} s_i", &x);
                        }
                    }
                    let sx = self.degeneracy(&x, j);
                    for i in 0..=n + 1 {
                        let lhs = self.face(&sx, i);
                        let rhs = if i == j || i == j + 1 {
                            x.clone()
                        } else if i < j {
                            self.degeneracy(&self.face(&x, i), j - 1)
                        } else {
                            self.degeneracy(&self.face(&x, i - 1), j)
                        };
                        if lhs != rhs {
                            return fail("d_i s_j", &x);
                        }
                    }
                }
                if n >= 2 {
                    for j in 1..=n {
                        for i in 0..j {
                            if self.face(&self.face(&x, j), i) != self.face(&self.face(&x, i), j - 1) {
                                return fail("d_i d_j = d_{j-1} d_i", &x);
                            }
                        }
                    }
                }
            }
        }
        Ok(())
    }

    /// The quotient by a spanning forest of the 1-skeleton grown from the
    /// basepoint. The result is reduced when the 1-skeleton is connected and
    /// has the same homotopy type.
    pub fn collapse_tree(&self) -> Result<SimplicialSet> {
        let base = self.require_pointed()?;
        let mut reached = BTreeSet::from([base.index]);
        let mut tree_edges = BTreeSet::new();
        let mut queue = VecDeque::from([base.index]);
        while let Some(v) = queue.pop_front() {
            for e in self.nondegenerate(1) {
                let (a, b) = (self.stored_face(e, 1).base.index, self.stored_face(e, 0).base.index);
                let other = if a == v {
                    b
                } else if b == v {
                    a
                } else {
                    continue;
                };
                if reached.insert(other) {
                    tree_edges.insert(e.index);
                    queue.push_back(other);
                }
            }
        }
        let collapsed = |id: SimplexId| match id.dim {
            0 => id != base && reached.contains(&id.index),
            1 => tree_edges.contains(&id.index),
            _ => false,
        };
        // new indices for survivors
        let mut renumber: BTreeMap<SimplexId, SimplexId> = BTreeMap::new();
        let mut b = SimplicialSetBuilder::new();
        for n in 0..=self.dim() {
            for y in self.nondegenerate(n) {
                if collapsed(y) {
                    continue;
                }
                let new_id = if n == 0 {
                    b.add_vertex(self.label(y))
                } else {
                    let faces = (0..=n)
                        .map(|i| {
                            let f = self.stored_face(y, i);
                            if collapsed(f.base) {
                                Simplex::constant(renumber[&base], n - 1)
                            } else {
                                Simplex::new(f.op.clone(), renumber[&f.base])
                            }
                        })
                        .collect();
                    b.add_simplex(self.label(y), faces)?
                };
                renumber.insert(y, new_id);
            }
        }
        b.build()?.with_basepoint(renumber[&base])
    }
}

impl fmt::Debug for SimplicialSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("SimplicialSet")
            .field("f_vector", &self.f_vector())
            .field("basepoint", &self.basepoint)
            .finish()
    }
}

/// Builds the simplicial set of an ordered simplicial complex: vertices are
/// ordered by index and every facet contributes all of its faces.
pub fn from_ordered_complex(vertex_labels: &[String], facets: &[Vec<usize>]) -> Result<SimplicialSet> {
    let n = vertex_labels.len();
    if n == 0 {
        return Err(Error::InvalidComplex("no vertices".into()));
    }
    let mut by_dim: Vec<BTreeSet<Vec<usize>>> = Vec::new();
    for facet in facets {
        let mut f = facet.clone();
        f.sort_unstable();
        if f.is_empty() || f.windows(2).any(|w| w[0] == w[1]) || f.iter().any(|&v| v >= n) {
            return Err(Error::InvalidComplex(format!("bad facet {facet:?}")));
        }
        // all nonempty subsets
        let k = f.len();
        for mask in 1u64..(1u64 << k) {
            let s: Vec<usize> = (0..k).filter(|i| mask >> i & 1 == 1).map(|i| f[i]).collect();
            let d = s.len() - 1;
            while by_dim.len() <= d {
                by_dim.push(BTreeSet::new());
            }
            by_dim[d].insert(s);
        }
    }
    let mut b = SimplicialSetBuilder::new();
    let mut ids: BTreeMap<Vec<usize>, SimplexId> = BTreeMap::new();
    for (v, label) in vertex_labels.iter().enumerate() {
        ids.insert(vec![v], b.add_vertex(label.clone()));
    }
    for simplices in by_dim.iter().skip(1) {
        for s in simplices {
            let faces = (0..s.len())
                .map(|i| {
                    let mut f = s.clone();
                    f.remove(i);
                    Simplex::nondegenerate(ids[&f])
                })
                .collect();
            let label = format!(
                "[{}]",
                s.iter()
                    .map(|&v| vertex_labels[v].as_str())
                    .collect::<Vec<_>>()
                    .join(",")
            );
            ids.insert(s.clone(), b.add_simplex(label, faces)?);
        }
    }
    b.build()
}

fn numeric_labels(n: usize) -> Vec<String> {
    (0..n).map(|i| i.to_string()).collect()
}

/// The standard simplex `Δ^n`, vertices `0..=n`.
pub fn std_simplex(n: usize) -> SimplicialSet {
    from_ordered_complex(&numeric_labels(n + 1), &[(0..=n).collect()]).expect("valid simplex")
}

/// The boundary `∂Δ^n` (`n ≥ 1`), a model of `S^{n-1}`.
pub fn simplex_boundary(n: usize) -> SimplicialSet {
    assert!(n >= 1);
    let facets: Vec<Vec<usize>> = (0..=n).map(|i| (0..=n).filter(|&v| v != i).collect()).collect();
    from_ordered_complex(&numeric_labels(n + 1), &facets).expect("valid complex")
}

/// `Δ^n/∂Δ^n`: one vertex and one nondegenerate `n`-simplex (`n ≥ 1`).
pub fn sphere(n: usize) -> SimplicialSet {
    assert!(n >= 1);
    let mut b = SimplicialSetBuilder::new();
    let v = b.add_vertex("v");
    let faces = vec![Simplex::constant(v, n - 1); n + 1];
    b.add_simplex(if n == 1 { "e".to_string() } else { format!("σ{n}") }, faces)
        .expect("valid faces");
    b.build().and_then(|s| s.with_basepoint(v)).expect("valid sphere")
}

/// The minimal circle: one vertex `v`, one edge `e`.
pub fn minimal_circle() -> SimplicialSet {
    sphere(1)
}

/// The `n`-skeleton of the bar construction `BZ/2`, a one-vertex model of
/// `RP^n` with a single nondegenerate simplex `x_k` in each dimension:
/// `d_0 x_k = d_k x_k = x_{k-1}` and `d_i x_k = s_{i-1} x_{k-2}` otherwise.
pub fn real_projective_space(n: usize) -> SimplicialSet {
    let mut b = SimplicialSetBuilder::new();
    let mut x = vec![b.add_vertex("v")];
    for k in 1..=n {
        let faces = (0..=k)
            .map(|i| {
                if i == 0 || i == k {
                    Simplex::nondegenerate(x[k - 1])
                } else {
                    Simplex::new(Surjection::codegeneracy(k - 2, i - 1), x[k - 2])
                }
            })
            .collect();
        x.push(b.add_simplex(format!("x{k}"), faces).expect("valid faces"));
    }
    b.build().and_then(|s| s.with_basepoint(x[0])).expect("valid model")
}

/// A simplicial map of finite simplicial sets, given on nondegenerate simplices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimplicialSetMap {
    images: Vec<Vec<Simplex>>,
}

impl SimplicialSetMap {
    /// Validates that the images have the right dimensions and commute with faces.
    pub fn new(source: &SimplicialSet, target: &SimplicialSet, images: Vec<Vec<Simplex>>) -> Result<Self> {
        let map = SimplicialSetMap { images };
        for n in 0..=source.dim() {
            if map.images.get(n).map_or(0, Vec::len) != source.count(n) {
                return Err(Error::InvalidSimplicialSet(format!("missing images in dimension {n}")));
            }
            for y in source.nondegenerate(n) {
                let fy = &map.images[n][y.index];
                if fy.dim() != n || fy.base.dim > target.dim() || fy.base.index >= target.count(fy.base.dim) {
                    return Err(Error::InvalidSimplicialSet(format!("bad image of {}", source.label(y))));
                }
                for i in (0..=n).filter(|_| n > 0) {
                    let lhs = map.apply(source.stored_face(y, i));
                    if lhs != target.face(fy, i) {
                        return Err(Error::InvalidSimplicialSet(format!(
                            "map does not commute with d{i} on {}",
                            source.label(y)
                        )));
                    }
                }
            }
        }
        Ok(map)
    }

    pub fn apply(&self, x: &Simplex) -> Simplex {
        let image = &self.images[x.base.dim][x.base.index];
        Simplex::new(image.op.compose(&x.op), image.base)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn standard_simplex_counts() {
        assert_eq!(std_simplex(0).f_vector(), vec![1]);
        assert_eq!(std_simplex(2).count(1), 3);
        let d3 = std_simplex(3);
        let two: Vec<&str> = d3.nondegenerate(2).map(|y| d3.label(y)).collect();
        assert_eq!(two, vec!["[0,1,2]", "[0,1,3]", "[0,2,3]", "[1,2,3]"]);
    }

    #[test]
    fn identities_hold_on_models() {
        for x in [
            std_simplex(3),
            simplex_boundary(3),
            sphere(2),
            real_projective_space(4),
            minimal_circle(),
        ] {
            x.check_simplicial_identities(4).unwrap();
        }
    }

    #[test]
    fn faces_of_degenerate_simplices() {
        let s1 = minimal_circle();
        let e = Simplex::nondegenerate(s1.find("e").unwrap());
        let s0e = s1.degeneracy(&e, 0);
        assert_eq!(s1.face(&s0e, 0), e);
        assert_eq!(s1.face(&s0e, 2), s1.degeneracy(&s1.face(&e, 1), 0));
    }

    #[test]
    fn inconsistent_faces_are_rejected() {
        let mut b = SimplicialSetBuilder::new();
        let v: Vec<_> = (0..3).map(|i| b.add_vertex(i.to_string())).collect();
        let e01 = b
            .add_simplex("a", vec![Simplex::nondegenerate(v[1]), Simplex::nondegenerate(v[0])])
            .unwrap();
        let e12 = b
            .add_simplex("b", vec![Simplex::nondegenerate(v[2]), Simplex::nondegenerate(v[1])])
            .unwrap();
        // d1 should be an edge from 0 to 2; reuse e01 instead
        b.add_simplex(
            "t",
            vec![
                Simplex::nondegenerate(e12),
                Simplex::nondegenerate(e01),
                Simplex::nondegenerate(e01),
            ],
        )
        .unwrap();
        assert!(b.build().is_err());
    }

    #[test]
    fn tree_collapse_gives_a_reduced_set() {
        let x = simplex_boundary(3).with_basepoint(SimplexId::new(0, 0)).unwrap();
        let y = x.collapse_tree().unwrap();
        assert!(y.is_reduced());
        assert_eq!(y.f_vector(), vec![1, 3, 4]);
        y.check_simplicial_identities(3).unwrap();
    }
}
