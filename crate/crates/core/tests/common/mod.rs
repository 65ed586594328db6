//! Independent oracles shared by the integration tests.
#![allow(dead_code)]

use std::collections::{BTreeMap, BTreeSet};

use coalgebra::cellular::LatticeKey;
use coalgebra::diagonal::Cochain;
use coalgebra::exactalg::FreeElement;
use coalgebra::simplicial::{std_simplex, Simplex, SimplexId, SimplicialSet, SimplicialSetMap};
use coalgebra::{Chain, F2};
use num_traits::ToPrimitive;

fn pow_mod(mut b: i64, mut e: i64, p: i64) -> i64 {
    let mut r = 1;
    while e > 0 {
        if e & 1 == 1 {
            r = r * b % p;
        }
        b = b * b % p;
        e >>= 1;
    }
    r
}

/// Rank of an integer matrix modulo a prime `p < 2^31`, by Gaussian elimination.
pub fn rank_mod(mut rows: Vec<Vec<i64>>, p: i64) -> usize {
    for x in rows.iter_mut().flatten() {
        *x = x.rem_euclid(p);
    }
    let cols = rows.first().map_or(0, Vec::len);
    let mut rank = 0;
    for c in 0..cols {
        let Some(pivot) = (rank..rows.len()).find(|&r| rows[r][c] != 0) else {
            continue;
        };
        rows.swap(rank, pivot);
        let inv = pow_mod(rows[rank][c], p - 2, p);
        for r in 0..rows.len() {
            if r != rank && rows[r][c] != 0 {
                let f = rows[r][c] * inv % p;
                let pivot_row = rows[rank].clone();
                for (x, y) in rows[r][c..].iter_mut().zip(&pivot_row[c..]) {
                    *x = (*x - f * y).rem_euclid(p);
                }
            }
        }
        rank += 1;
    }
    rank
}

/// Face counts of a simplicial complex and its boundary matrices `d_1, d_2, ..`
/// (index 0 holds an empty matrix).
pub fn boundary_matrices(facets: &[Vec<usize>]) -> (Vec<usize>, Vec<Vec<Vec<i64>>>) {
    let mut faces: Vec<BTreeSet<Vec<usize>>> = Vec::new();
    for f in facets {
        for mask in 1u32..(1 << f.len()) {
            let face: Vec<usize> = (0..f.len()).filter(|i| mask >> i & 1 == 1).map(|i| f[i]).collect();
            let d = face.len() - 1;
            if faces.len() <= d {
                faces.resize(d + 1, BTreeSet::new());
            }
            faces[d].insert(face);
        }
    }
    let index: Vec<BTreeMap<&Vec<usize>, usize>> = faces
        .iter()
        .map(|s| s.iter().enumerate().map(|(i, f)| (f, i)).collect())
        .collect();
    let mut mats = vec![Vec::new()];
    for n in 1..faces.len() {
        let mut m = vec![vec![0i64; faces[n].len()]; faces[n - 1].len()];
        for (col, face) in faces[n].iter().enumerate() {
            for j in 0..face.len() {
                let mut g = face.clone();
                g.remove(j);
                m[index[n - 1][&g]][col] = if j % 2 == 0 { 1 } else { -1 };
            }
        }
        mats.push(m);
    }
    (faces.iter().map(BTreeSet::len).collect(), mats)
}

/// Betti numbers over `F_p`: `dim C_n − rank d_n − rank d_{n+1}`.
pub fn betti_mod(facets: &[Vec<usize>], p: i64) -> Vec<usize> {
    let (f, mats) = boundary_matrices(facets);
    let ranks: Vec<usize> = mats.into_iter().map(|m| rank_mod(m, p)).chain([0]).collect();
    (0..f.len()).map(|n| f[n] - ranks[n] - ranks[n + 1]).collect()
}

/// A prime large enough that ranks mod it agree with rational ranks for the
/// small complexes used here.
pub const LARGE_PRIME: i64 = 1_000_000_007;

fn vertices_of(x: &SimplicialSet, id: SimplexId) -> Vec<usize> {
    let label = x.label(id).trim_matches(|c| c == '[' || c == ']');
    label.split(',').map(|v| v.parse().unwrap()).collect()
}

/// The characteristic map `Δ^n -> X` of a nondegenerate `n`-simplex.
pub fn characteristic_map(x: &SimplicialSet, sigma: SimplexId) -> (SimplicialSet, SimplicialSetMap) {
    let delta = std_simplex(sigma.dim);
    let s = Simplex::nondegenerate(sigma);
    let images = (0..=delta.dim())
        .map(|k| {
            delta
                .nondegenerate(k)
                .map(|f| x.act(&s, &vertices_of(&delta, f)))
                .collect()
        })
        .collect();
    let map = SimplicialSetMap::new(&delta, x, images).unwrap();
    (delta, map)
}

/// `(u ∪ v)(σ) = u(σ[0..p]) v(σ[p..n])`, read off the front and back faces.
pub fn front_back_cup(u: &Cochain<F2>, v: &Cochain<F2>, x: &SimplicialSet) -> Cochain<F2> {
    let (p, q) = (u.degree(), v.degree());
    let mut values = FreeElement::zero();
    for sigma in x.nondegenerate(p + q) {
        let s = Simplex::nondegenerate(sigma);
        let front = x.act(&s, &(0..=p).collect::<Vec<_>>());
        let back = x.act(&s, &(p..=p + q).collect::<Vec<_>>());
        if !front.is_degenerate() && !back.is_degenerate() {
            values.add_term(sigma, u.at(&front.base()) * v.at(&back.base()));
        }
    }
    Cochain::new(p + q, values).unwrap()
}

/// Rank mod a large prime of the rows `(1, c, c⊗c, ..)` written in tensor
/// coordinates, for `c` in a lattice of the given rank.
pub fn tensor_rank(cs: &[Chain<LatticeKey>], rank: usize, t: usize) -> usize {
    let rows = cs
        .iter()
        .map(|c| {
            let v: Vec<i64> = (0..rank)
                .map(|i| c.coefficient(&LatticeKey(i)).to_i64().unwrap())
                .collect();
            let mut row = vec![1];
            let mut power = vec![1i64];
            for _ in 1..t {
                power = power
                    .iter()
                    .flat_map(|&p| v.iter().map(move |&x| (p * x).rem_euclid(LARGE_PRIME)))
                    .collect();
                row.extend(&power);
            }
            row
        })
        .collect();
    rank_mod(rows, LARGE_PRIME)
}
