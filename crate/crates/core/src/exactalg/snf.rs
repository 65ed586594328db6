//! Smith normal form over Euclidean rings and integral homology.
//!
//! Boundary matrices are mostly sparse with unit entries, so the reduction
//! first eliminates unit pivots sparsely (cheapest pivot first) and only then
//! runs the dense Smith algorithm on whatever is left.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;

use num_traits::One;

use super::complex::{boundary_matrix, ChainComplex};
use super::matrix::Matrix;
use crate::scalar::EuclideanCoefficient;
use crate::{Integer, Result};

/// Nonzero invariant factors `d_1 | d_2 | ...`, all positive.
pub fn invariant_factors<R: EuclideanCoefficient>(m: &Matrix<R>) -> Vec<R> {
    let rows: Vec<BTreeMap<usize, R>> = (0..m.rows())
        .map(|i| {
            m.row(i)
                .iter()
                .enumerate()
                .filter(|(_, v)| !v.is_zero())
                .map(|(j, v)| (j, v.clone()))
                .collect()
        })
        .collect();
    sparse_invariant_factors(rows, m.cols())
}

fn sparse_invariant_factors<R: EuclideanCoefficient>(mut rows: Vec<BTreeMap<usize, R>>, ncols: usize) -> Vec<R> {
    let mut units = 0usize;
    let mut alive: BTreeSet<usize> = (0..rows.len()).filter(|&r| !rows[r].is_empty()).collect();
    let mut col_rows: HashMap<usize, BTreeSet<usize>> = HashMap::new();
    for &r in &alive {
        for &c in rows[r].keys() {
            col_rows.entry(c).or_default().insert(r);
        }
    }

    loop {
        // cheapest unit pivot by Markowitz count
        let mut best: Option<(usize, usize, usize)> = None;
        for &r in &alive {
            let rlen = rows[r].len();
            for (&c, v) in &rows[r] {
                if !v.abs().is_one() {
                    continue;
                }
                let cost = (rlen - 1) * (col_rows[&c].len() - 1);
                if best.is_none_or(|(_, _, b)| cost < b) {
                    best = Some((r, c, cost));
                }
            }
            if matches!(best, Some((_, _, 0))) {
                break;
            }
        }
        let Some((pr, pc, _)) = best else { break };

        let pivot_row = rows[pr].clone();
        let pivot = pivot_row[&pc].clone();
        let others: Vec<usize> = col_rows[&pc].iter().copied().filter(|&r| r != pr).collect();
        for r in others {
            let factor = rows[r][&pc].clone() * pivot.clone();
            for (&c, v) in &pivot_row {
                let entry = rows[r].entry(c).or_insert_with(R::zero);
                *entry = entry.clone() - factor.clone() * v.clone();
                if entry.is_zero() {
                    rows[r].remove(&c);
                    col_rows.get_mut(&c).unwrap().remove(&r);
                } else {
                    col_rows.get_mut(&c).unwrap().insert(r);
                }
            }
            if rows[r].is_empty() {
                alive.remove(&r);
            }
        }
        for &c in pivot_row.keys() {
            col_rows.get_mut(&c).unwrap().remove(&pr);
        }
        rows[pr].clear();
        alive.remove(&pr);
        units += 1;
    }

    let cols: Vec<usize> = {
        let set: BTreeSet<usize> = alive.iter().flat_map(|&r| rows[r].keys().copied()).collect();
        set.into_iter().collect()
    };
    let col_index: HashMap<usize, usize> = cols.iter().enumerate().map(|(i, &c)| (c, i)).collect();
    let mut dense = Matrix::zeros(alive.len(), cols.len());
    for (i, &r) in alive.iter().enumerate() {
        for (c, v) in &rows[r] {
            dense.set(i, col_index[c], v.clone());
        }
    }
    debug_assert!(cols.len() <= ncols);

    let mut factors = vec![R::one(); units];
    factors.extend(dense_smith_diagonal(dense));
    normalize_divisibility(factors)
}

/// Diagonalizes by unimodular row and column operations; returns the nonzero
/// diagonal entries (not yet in divisibility order).
fn dense_smith_diagonal<R: EuclideanCoefficient>(mut a: Matrix<R>) -> Vec<R> {
    let (nr, nc) = (a.rows(), a.cols());
    let mut diag = Vec::new();
    let mut t = 0;
    while t < nr.min(nc) {
        // smallest nonzero entry in the trailing block
        let mut best: Option<(usize, usize)> = None;
        for i in t..nr {
            for j in t..nc {
                let v = a.get(i, j);
                if v.is_zero() {
                    continue;
                }
                if best.is_none_or(|(bi, bj)| v.abs() < a.get(bi, bj).abs()) {
                    best = Some((i, j));
                }
            }
        }
        let Some((bi, bj)) = best else { break };
        swap_rows(&mut a, t, bi);
        swap_cols(&mut a, t, bj);

        let mut done = false;
        while !done {
            done = true;
            for i in t + 1..nr {
                if a.get(i, t).is_zero() {
                    continue;
                }
                let q = a.get(i, t).div_floor(a.get(t, t));
                row_axpy(&mut a, i, t, &q);
                if !a.get(i, t).is_zero() {
                    swap_rows(&mut a, t, i);
                    done = false;
                }
            }
            for j in t + 1..nc {
                if a.get(t, j).is_zero() {
                    continue;
                }
                let q = a.get(t, j).div_floor(a.get(t, t));
                col_axpy(&mut a, j, t, &q);
                if !a.get(t, j).is_zero() {
                    swap_cols(&mut a, t, j);
                    done = false;
                }
            }
        }
        diag.push(a.get(t, t).abs());
        t += 1;
    }
    diag
}

fn normalize_divisibility<R: EuclideanCoefficient>(mut d: Vec<R>) -> Vec<R> {
    d.retain(|x| !x.is_zero());
    for x in d.iter_mut() {
        *x = x.abs();
    }
    for i in 0..d.len() {
        for j in i + 1..d.len() {
            let g = d[i].gcd(&d[j]);
            let l = d[i].lcm(&d[j]);
            d[i] = g;
            d[j] = l;
        }
    }
    d
}

fn swap_rows<R: EuclideanCoefficient>(a: &mut Matrix<R>, x: usize, y: usize) {
    if x == y {
        return;
    }
    for j in 0..a.cols() {
        let tmp = a.get(x, j).clone();
        a.set(x, j, a.get(y, j).clone());
        a.set(y, j, tmp);
    }
}

fn swap_cols<R: EuclideanCoefficient>(a: &mut Matrix<R>, x: usize, y: usize) {
    if x == y {
        return;
    }
    for i in 0..a.rows() {
        let tmp = a.get(i, x).clone();
        a.set(i, x, a.get(i, y).clone());
        a.set(i, y, tmp);
    }
}

// row[target] -= q * row[source]
fn row_axpy<R: EuclideanCoefficient>(a: &mut Matrix<R>, target: usize, source: usize, q: &R) {
    for j in 0..a.cols() {
        let v = a.get(target, j).clone() - q.clone() * a.get(source, j).clone();
        a.set(target, j, v);
    }
}

fn col_axpy<R: EuclideanCoefficient>(a: &mut Matrix<R>, target: usize, source: usize, q: &R) {
    for i in 0..a.rows() {
        let v = a.get(i, target).clone() - q.clone() * a.get(i, source).clone();
        a.set(i, target, v);
    }
}

/// A finitely generated abelian group `Z^betti + Z/t_1 + ... + Z/t_r`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct HomologyGroup {
    pub betti: usize,
    /// Invariant factors greater than one, in divisibility order.
    pub torsion: Vec<Integer>,
}

impl HomologyGroup {
    pub fn new(betti: usize, torsion: &[i64]) -> Self {
        HomologyGroup {
            betti,
            torsion: torsion.iter().map(|&t| Integer::from(t)).collect(),
        }
    }

    pub fn trivial() -> Self {
        Self::new(0, &[])
    }

    pub fn is_trivial(&self) -> bool {
        self.betti == 0 && self.torsion.is_empty()
    }
}

impl fmt::Display for HomologyGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        match self.betti {
            0 => {}
            1 => parts.push("Z".to_string()),
            b => parts.push(format!("Z^{b}")),
        }
        parts.extend(self.torsion.iter().map(|t| format!("Z/{t}")));
        if parts.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", parts.join(" + "))
        }
    }
}

/// `H_n` of a chain complex with finite bases in degrees `n` and `n + 1`.
pub fn homology_groups<C: ChainComplex>(complex: &C, n: usize) -> Result<HomologyGroup> {
    let rank_n = complex.basis(n).ok_or(crate::Error::InfiniteBasis(n))?.len();
    let outgoing = if n == 0 {
        0
    } else {
        let d = boundary_matrix(complex, n)?;
        invariant_factors(&d).len()
    };
    let incoming = boundary_matrix(complex, n + 1)?;
    let factors = invariant_factors(&incoming);
    Ok(HomologyGroup {
        betti: rank_n - outgoing - factors.len(),
        torsion: factors.into_iter().filter(|f| !f.is_one()).collect(),
    })
}

/// `H_0 .. H_top`.
pub fn homology_through<C: ChainComplex>(complex: &C, top: usize) -> Result<Vec<HomologyGroup>> {
    (0..=top).map(|n| homology_groups(complex, n)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::complex::FiniteComplex;
    use crate::exactalg::matrix::rational_rank;
    use crate::Chain;
    use num_bigint::BigInt;
    use proptest::prelude::*;

    fn int(rows: &[&[i64]]) -> Matrix<BigInt> {
        Matrix::from_i64_rows(rows)
    }

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn smith_examples() {
        assert_eq!(invariant_factors(&int(&[&[2]])), ints(&[2]));
        assert_eq!(invariant_factors(&int(&[&[2, 0], &[0, 3]])), ints(&[1, 6]));
        assert_eq!(
            invariant_factors(&int(&[&[2, 4, 4], &[-6, 6, 12], &[10, -4, -16]])),
            ints(&[2, 6, 12])
        );
        assert_eq!(invariant_factors(&int(&[&[0, 0], &[0, 0]])), ints(&[]));
    }

    #[test]
    fn single_boundary_of_two() {
        // Z --2--> Z, degree 1 to degree 0
        let mut c = FiniteComplex::new(vec![vec!["v".to_string()], vec!["e".to_string()]]);
        c.set_boundary("e".to_string(), Chain::term("v".to_string(), BigInt::from(2)));
        assert_eq!(homology_groups(&c, 0).unwrap(), HomologyGroup::new(0, &[2]));
        assert_eq!(homology_groups(&c, 1).unwrap(), HomologyGroup::trivial());
    }

    #[test]
    fn display() {
        assert_eq!(HomologyGroup::new(2, &[2, 4]).to_string(), "Z^2 + Z/2 + Z/4");
        assert_eq!(HomologyGroup::trivial().to_string(), "0");
    }

    fn small_matrix() -> impl Strategy<Value = Matrix<BigInt>> {
        (1usize..7, 1usize..7).prop_flat_map(|(r, c)| {
            proptest::collection::vec(prop_oneof![3 => Just(0i64), 2 => -1i64..=1, 1 => -6i64..=6], r * c).prop_map(
                move |v| {
                    Matrix::from_rows(
                        v.chunks(c)
                            .map(|row| row.iter().map(|&x| BigInt::from(x)).collect())
                            .collect(),
                    )
                },
            )
        })
    }

    fn determinant_gcd_oracle(m: &Matrix<BigInt>, k: usize) -> BigInt {
        // gcd of all k x k minors, by cofactor expansion
        fn det(m: &Matrix<BigInt>, rows: &[usize], cols: &[usize]) -> BigInt {
            if rows.is_empty() {
                return BigInt::from(1);
            }
            let mut total = BigInt::from(0);
            for (i, &c) in cols.iter().enumerate() {
                let rest: Vec<usize> = cols.iter().copied().filter(|&x| x != c).collect();
                let term = m.get(rows[0], c) * det(m, &rows[1..], &rest);
                if i % 2 == 0 {
                    total += term
                } else {
                    total -= term
                }
            }
            total
        }
        fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
            if k == 0 {
                return vec![vec![]];
            }
            if n < k {
                return vec![];
            }
            let mut out = subsets(n - 1, k);
            for mut s in subsets(n - 1, k - 1) {
                s.push(n - 1);
                out.push(s);
            }
            out
        }
        let mut g = BigInt::from(0);
        for rs in subsets(m.rows(), k) {
            for cs in subsets(m.cols(), k) {
                g = num_integer::Integer::gcd(&g, &det(m, &rs, &cs));
            }
        }
        g
    }

    proptest! {
        #[test]
        fn factor_count_is_rank(m in small_matrix()) {
            prop_assert_eq!(invariant_factors(&m).len(), rational_rank(&m));
        }

        // d_1 ... d_k equals the gcd of the k x k minors
        #[test]
        fn factors_match_determinantal_divisors(m in small_matrix()) {
            let f = invariant_factors(&m);
            let mut prod = BigInt::from(1);
            for (k, d) in f.iter().enumerate().take(3) {
                prod *= d;
                prop_assert_eq!(&prod, &determinant_gcd_oracle(&m, k + 1));
            }
        }
    }
}
