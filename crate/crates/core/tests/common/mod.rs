//! Brute-force reference implementations shared by the integration tests.
#![allow(dead_code)]

use lpm::fence::{Labelling, Poset};
use lpm::{LatticePath, Lpm};
use num_rational::BigRational;
use num_traits::{One, Zero};

pub fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for x in start..=n {
            cur.push(x);
            rec(x + 1, n, k, cur, out);
            cur.pop();
        }
    }
    rec(1, n, k, &mut cur, &mut out);
    out
}

/// Every LPM on `n` elements, any rank.
pub fn all_lpms(n: usize) -> Vec<Lpm> {
    let mut out = Vec::new();
    for k in 0..=n {
        let sets = subsets(n, k);
        for u in &sets {
            for l in &sets {
                if let Ok(m) = Lpm::from_north_sets(n, u, l) {
                    out.push(m);
                }
            }
        }
    }
    out
}

pub fn connected_lpms(n: usize) -> Vec<Lpm> {
    all_lpms(n).into_iter().filter(Lpm::is_connected).collect()
}

/// Bases from the elementwise description: `u_i <= b_i <= l_i`.
pub fn brute_bases(m: &Lpm) -> Vec<Vec<usize>> {
    let u = m.upper().north_set();
    let l = m.lower().north_set();
    subsets(m.n(), m.k())
        .into_iter()
        .filter(|b| b.iter().zip(&u).zip(&l).all(|((x, lo), hi)| lo <= x && x <= hi))
        .collect()
}

pub fn brute_basis_paths(m: &Lpm) -> Vec<LatticePath> {
    brute_bases(m).iter().map(|b| LatticePath::from_north_set(m.n(), b).unwrap()).collect()
}

/// Rank of a rational matrix by Gaussian elimination.
pub fn rank(rows: Vec<Vec<BigRational>>) -> usize {
    let mut rows = rows;
    let cols = rows.first().map_or(0, Vec::len);
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else { continue };
        rows.swap(r, p);
        let pivot = rows[r][c].clone();
        for i in 0..rows.len() {
            if i != r && !rows[i][c].is_zero() {
                let f = &rows[i][c] / &pivot;
                for j in c..cols {
                    let t = &rows[r][j] * &f;
                    rows[i][j] -= t;
                }
            }
        }
        r += 1;
    }
    r
}

fn to_rational(v: &[u8]) -> Vec<BigRational> {
    v.iter().map(|&x| BigRational::from_integer(x.into())).collect()
}

/// Dimension of the affine hull of 0/1 points.
pub fn affine_dim(points: &[Vec<u8>]) -> Option<usize> {
    let first = points.first()?;
    let rows = points[1..]
        .iter()
        .map(|p| p.iter().zip(first).map(|(&a, &b)| BigRational::from_integer((a as i64 - b as i64).into())).collect())
        .collect();
    Some(rank(rows))
}

pub fn vertex_matrix(m: &Lpm) -> Vec<Vec<u8>> {
    brute_basis_paths(m).iter().map(LatticePath::indicator).collect()
}

/// |det| of the edge vectors of a simplex in the hyperplane `sum x = k`, first coordinate dropped.
pub fn simplex_abs_det(vertices: &[LatticePath]) -> BigRational {
    let base = vertices[0].indicator();
    let mut rows: Vec<Vec<BigRational>> = vertices[1..]
        .iter()
        .map(|v| {
            v.indicator()
                .iter()
                .zip(&base)
                .skip(1)
                .map(|(&a, &b)| BigRational::from_integer((a as i64 - b as i64).into()))
                .collect()
        })
        .collect();
    let n = rows.len();
    let mut det = BigRational::one();
    for c in 0..n {
        let Some(p) = (c..n).find(|&i| !rows[i][c].is_zero()) else { return BigRational::zero() };
        rows.swap(c, p);
        let pivot = rows[c][c].clone();
        det *= &pivot;
        for i in c + 1..n {
            let f = &rows[i][c] / &pivot;
            for j in c..n {
                let t = &rows[c][j] * &f;
                rows[i][j] -= t;
            }
        }
    }
    if det < BigRational::zero() {
        -det
    } else {
        det
    }
}

/// Linear extensions by testing every permutation.
pub fn brute_extensions(p: &Poset) -> Vec<Labelling> {
    let m = p.size();
    let mut perm: Vec<usize> = (1..=m).collect();
    let mut out = Vec::new();
    loop {
        let l = Labelling::new(perm.clone());
        if p.covers().iter().all(|&(lo, hi)| perm[lo] < perm[hi]) {
            out.push(l);
        }
        if !next_permutation(&mut perm) {
            break;
        }
    }
    out
}

pub fn next_permutation(v: &mut [usize]) -> bool {
    let Some(i) = (1..v.len()).rev().find(|&i| v[i - 1] < v[i]) else { return false };
    let j = (i..v.len()).rev().find(|&j| v[j] > v[i - 1]).unwrap();
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

/// Bases of a deletion `M \ i` straight from the definition, relabelled to `1..n-1`.
pub fn brute_delete(m: &Lpm, i: usize) -> Vec<Vec<usize>> {
    let bases = brute_bases(m);
    let avoid: Vec<&Vec<usize>> = bases.iter().filter(|b| !b.contains(&i)).collect();
    let chosen: Vec<&Vec<usize>> = if avoid.is_empty() { bases.iter().collect() } else { avoid };
    relabel(chosen, i)
}

pub fn brute_contract(m: &Lpm, i: usize) -> Vec<Vec<usize>> {
    let bases = brute_bases(m);
    let with: Vec<&Vec<usize>> = bases.iter().filter(|b| b.contains(&i)).collect();
    let chosen: Vec<&Vec<usize>> = if with.is_empty() { bases.iter().collect() } else { with };
    relabel(chosen, i)
}

fn relabel(sets: Vec<&Vec<usize>>, i: usize) -> Vec<Vec<usize>> {
    let mut out: Vec<Vec<usize>> = sets
        .into_iter()
        .map(|b| b.iter().filter(|&&x| x != i).map(|&x| if x > i { x - 1 } else { x }).collect())
        .collect();
    out.sort();
    out
}

/// Matroid connectivity from the bases: no separator `S` with r(S) + r(E-S) = r(E).
pub fn brute_connected(m: &Lpm) -> bool {
    let n = m.n();
    if n == 1 {
        return true;
    }
    let bases = brute_bases(m);
    let rank_of = |s: u32| bases.iter().map(|b| b.iter().filter(|&&x| s >> (x - 1) & 1 == 1).count()).max().unwrap();
    let full = (1u32 << n) - 1;
    (1..full).filter(|s| s & 1 == 1).all(|s| rank_of(s) + rank_of(full ^ s) != m.k())
}
