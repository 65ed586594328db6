//! Ordered surjections `[n] ↠ [m]`, the degeneracy operators of a simplicial set.
//!
//! A surjection is stored by its (weakly increasing) value list. It is in
//! bijection with the canonical decreasing degeneracy word `s_{i_1}..s_{i_k}`,
//! `i_1 > .. > i_k`, whose indices are the positions `j` with `η(j) = η(j+1)`.

use std::fmt;

#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Surjection(Vec<usize>);

impl Surjection {
    pub fn identity(n: usize) -> Self {
        Surjection((0..=n).collect())
    }

    /// The constant map `[n] -> [0]`.
    pub fn constant(n: usize) -> Self {
        Surjection(vec![0; n + 1])
    }

    /// Panics unless `values` starts at 0 and climbs in steps of 0 or 1.
    pub fn from_values(values: Vec<usize>) -> Self {
        assert!(is_ordered_surjection(&values), "not an ordered surjection: {values:?}");
        Surjection(values)
    }

    /// The codegeneracy `σ^j: [n+1] -> [n]` hitting `j` twice.
    pub fn codegeneracy(n: usize, j: usize) -> Self {
        assert!(j <= n);
        Surjection((0..=n + 1).map(|i| if i <= j { i } else { i - 1 }).collect())
    }

    /// The surjection of the operator `s_{w_1} .. s_{w_k}` applied to an
    /// `m`-simplex; the word may be in any order valid for iterated degeneracies.
    pub fn from_degeneracy_word(word: &[usize], m: usize) -> Self {
        // s_{w_1}..s_{w_k} x = x ∘ σ^{w_k} ∘ .. ∘ σ^{w_1}
        let mut eta = Surjection::identity(m);
        for (dim, &w) in (m..).zip(word.iter().rev()) {
            eta = eta.compose(&Surjection::codegeneracy(dim, w));
        }
        eta
    }

    /// The canonical decreasing degeneracy word.
    pub fn degeneracy_word(&self) -> Vec<usize> {
        (0..self.source_dim())
            .rev()
            .filter(|&j| self.0[j] == self.0[j + 1])
            .collect()
    }

    pub fn source_dim(&self) -> usize {
        self.0.len() - 1
    }

    pub fn target_dim(&self) -> usize {
        *self.0.last().expect("nonempty")
    }

    pub fn is_identity(&self) -> bool {
        self.source_dim() == self.target_dim()
    }

    pub fn values(&self) -> &[usize] {
        &self.0
    }

    /// The composite `self ∘ inner`.
    pub fn compose(&self, inner: &Surjection) -> Surjection {
        assert_eq!(inner.target_dim(), self.source_dim(), "surjections do not compose");
        Surjection(inner.0.iter().map(|&i| self.0[i]).collect())
    }

    /// Every ordered surjection `[n] ↠ [m]`, in lexicographic order.
    pub fn all(n: usize, m: usize) -> Vec<Surjection> {
        if m > n {
            return Vec::new();
        }
        // choose the m positions (among 1..=n) where the value steps up
        let mut out = Vec::new();
        let mut steps = Vec::with_capacity(m);
        fn rec(n: usize, m: usize, start: usize, steps: &mut Vec<usize>, out: &mut Vec<Surjection>) {
            if steps.len() == m {
                let mut v = Vec::with_capacity(n + 1);
                let mut value = 0;
                v.push(0);
                for i in 1..=n {
                    if steps.contains(&i) {
                        value += 1;
                    }
                    v.push(value);
                }
                out.push(Surjection(v));
                return;
            }
            let remaining = m - steps.len();
            for i in start..=n + 1 - remaining {
                steps.push(i);
                rec(n, m, i + 1, steps, out);
                steps.pop();
            }
        }
        rec(n, m, 1, &mut steps, &mut out);
        out.sort();
        out
    }
}

/// Epi-mono factorization of a weakly increasing map `θ: [p] -> [m]`:
/// returns the surjection `[p] ↠ [q]` and the increasing image list `[q] ↪ [m]`.
pub fn epi_mono(theta: &[usize]) -> (Surjection, Vec<usize>) {
    let mut image: Vec<usize> = Vec::new();
    let mut epi = Vec::with_capacity(theta.len());
    for &v in theta {
        if image.last() != Some(&v) {
            debug_assert!(image.last().is_none_or(|&l| l < v), "map is not monotone");
            image.push(v);
        }
        epi.push(image.len() - 1);
    }
    (Surjection(epi), image)
}

/// The coface `δ^i: [n-1] -> [n]` skipping `i`, as a value list.
pub fn coface(n: usize, i: usize) -> Vec<usize> {
    (0..=n).filter(|&v| v != i).collect()
}

fn is_ordered_surjection(values: &[usize]) -> bool {
    values.first() == Some(&0) && values.windows(2).all(|w| w[1] == w[0] || w[1] == w[0] + 1)
}

impl fmt::Debug for Surjection {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let word = self.degeneracy_word();
        if word.is_empty() {
            return write!(f, "id{}", self.source_dim());
        }
        for w in word {
            write!(f, "s{w}")?;
        }
        Ok(())
    }
}
