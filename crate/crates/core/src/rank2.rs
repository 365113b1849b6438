//! Rank-two LPMs `M_n[k,l]`: volumes, h*-vectors and one-descent permutations.

use std::collections::HashMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::fence::Labelling;
use crate::lpm::{LatticePath, Lpm};

/// Largest ground set for which the closed forms are evaluated in 64-bit arithmetic.
pub const MAX_N: usize = 60;

/// `C(a, b)`, zero outside `0 <= b <= a`.
pub fn binom(a: i64, b: i64) -> i64 {
    if a < 0 || b < 0 || b > a {
        return 0;
    }
    num_integer::binomial(a as u64, b as u64) as i64
}

fn check_n(n: usize) -> Result<()> {
    if n > MAX_N {
        return Err(Error::Range(format!("n = {n} exceeds {MAX_N}")));
    }
    Ok(())
}

/// `M_n[k,l]` with upper path `{1, n-l}` and lower path `{n-k, n}`.
pub fn rank2_lpm(n: usize, k: usize, l: usize) -> Result<Lpm> {
    if !(1 <= k && k <= l && l + 2 <= n) {
        return Err(Error::Range(format!("need 1 <= k <= l <= n-2, got n={n} k={k} l={l}")));
    }
    Lpm::from_north_sets(n, &[1, n - l], &[n - k, n])
}

/// `(n, k, l)` when `m` is a connected rank-two LPM.
pub fn rank2_params(m: &Lpm) -> Option<(usize, usize, usize)> {
    if m.k() != 2 || !m.is_connected() {
        return None;
    }
    let (u, l) = (m.upper().north_set(), m.lower().north_set());
    let n = m.n();
    (u[0] == 1 && l[1] == n).then(|| (n, n - l[0], n - u[1]))
}

/// A permutation of `1..=m` with exactly one descent.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct DescentPermutation {
    word: Vec<usize>,
    descent: usize,
}

impl DescentPermutation {
    pub fn new(word: Vec<usize>) -> Result<Self> {
        let m = word.len();
        let mut seen = vec![false; m + 1];
        if word.iter().any(|&x| x == 0 || x > m || std::mem::replace(&mut seen[x], true)) {
            return Err(Error::Parse(format!("{word:?} is not a permutation")));
        }
        let descents: Vec<usize> = (1..m).filter(|&i| word[i - 1] > word[i]).collect();
        match descents[..] {
            [d] => Ok(DescentPermutation { word, descent: d }),
            _ => Err(Error::Parse(format!("{word:?} has {} descents", descents.len()))),
        }
    }

    pub fn word(&self) -> &[usize] {
        &self.word
    }

    /// 1-based position `d` with `w_d > w_{d+1}`.
    pub fn descent_pos(&self) -> usize {
        self.descent
    }
}

impl TryFrom<Vec<usize>> for DescentPermutation {
    type Error = Error;

    fn try_from(v: Vec<usize>) -> Result<Self> {
        DescentPermutation::new(v)
    }
}

impl From<DescentPermutation> for Vec<usize> {
    fn from(p: DescentPermutation) -> Vec<usize> {
        p.word
    }
}

impl fmt::Display for DescentPermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let part = |s: &[usize]| s.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" ");
        write!(f, "{} | {}", part(&self.word[..self.descent]), part(&self.word[self.descent..]))
    }
}

/// All one-descent permutations of `1..=m`, sorted.
pub fn one_descent_permutations(m: usize) -> Vec<DescentPermutation> {
    let mut out = Vec::new();
    if !(2..64).contains(&m) {
        return out;
    }
    for mask in 1u64..(1 << m) - 1 {
        let first: Vec<usize> = (1..=m).filter(|&x| mask >> (x - 1) & 1 == 1).collect();
        let rest: Vec<usize> = (1..=m).filter(|&x| mask >> (x - 1) & 1 == 0).collect();
        if first.last() > rest.first() {
            let descent = first.len();
            out.push(DescentPermutation { word: [first, rest].concat(), descent });
        }
    }
    out.sort();
    out
}

/// Eulerian number `A_{1,m} = 2^m - m - 1`.
pub fn eulerian_one_descent(m: usize) -> u64 {
    assert!((1..64).contains(&m), "m out of range");
    (1u64 << m) - m as u64 - 1
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GapStats {
    /// initial gaps: positions before the descent not followed by the next integer
    pub ig: usize,
    /// final gaps, after the descent
    pub fg: usize,
}

pub fn gap_stats(p: &DescentPermutation) -> GapStats {
    let w = p.word();
    let d = p.descent_pos();
    let gap = |i: usize| w[i] != w[i - 1] + 1;
    GapStats {
        ig: (1..d).filter(|&i| gap(i)).count(),
        fg: (d + 1..w.len()).filter(|&i| gap(i)).count(),
    }
}

/// Snake `M_n[j,j]` and labelling of the one-descent permutation `p` of `1..=n-1`
/// with descent at `j`: the first block labels the upper row, the second the lower row.
pub fn labelling_of_permutation(n: usize, p: &DescentPermutation) -> Result<(Lpm, Labelling)> {
    if p.word().len() + 1 != n {
        return Err(Error::DimensionMismatch { expected: n - 1, got: p.word().len() });
    }
    let j = p.descent_pos();
    let snake = rank2_lpm(n, j, j)?;
    let (top, bottom) = p.word().split_at(j);
    let bottom_len = bottom.len();
    // labels decrease from left to right along each row
    let mut labels = Vec::with_capacity(n - 1);
    for cell in snake.cells() {
        let label = if cell.row == 0 {
            bottom[bottom_len - 1 - cell.col]
        } else {
            top[j - 1 - (cell.col + 1 - bottom_len)]
        };
        labels.push(label);
    }
    Ok((snake, Labelling::new(labels)))
}

/// Inverse of [`labelling_of_permutation`].
pub fn permutation_of_labelling(s: &Lpm, labelling: &Labelling) -> Result<DescentPermutation> {
    let cells = s.cells();
    if cells.len() != labelling.len() {
        return Err(Error::InvalidLabelling("labelling does not match the snake".into()));
    }
    let mut top = Vec::new();
    let mut bottom = Vec::new();
    for (cell, &x) in cells.iter().zip(labelling.labels()) {
        if cell.row == 0 {
            bottom.push(x);
        } else {
            top.push(x);
        }
    }
    top.sort_unstable();
    bottom.sort_unstable();
    DescentPermutation::new([top, bottom].concat())
}

/// Vertices of the simplex of `n-1 | 1 2 ... n-2`.
pub fn pi0_vertices(n: usize) -> Result<Vec<LatticePath>> {
    if n < 3 {
        return Err(Error::Range(format!("need n >= 3, got {n}")));
    }
    let word: Vec<usize> = std::iter::once(n - 1).chain(1..n - 1).collect();
    let (snake, labelling) = labelling_of_permutation(n, &DescentPermutation::new(word)?)?;
    crate::triangulation::simplex_of_labelling(&snake, &labelling)
}

fn sigma_in_range(n: usize, k: usize, l: usize) -> bool {
    n >= 4 && 1 <= k && k <= l && l + 2 <= n
}

fn sigma_snake_sum(n: usize, k: usize, l: usize) -> i64 {
    (k..=l).map(|j| binom(n as i64 - 1, j as i64) - 1).sum()
}

fn sigma_recursive(n: usize, k: usize, l: usize, memo: &mut HashMap<(usize, usize), i64>) -> i64 {
    if let Some(&v) = memo.get(&(n, l)) {
        return v;
    }
    let (ni, ki, li) = (n as i64, k as i64, l as i64);
    let v = if l < k {
        0
    } else if l == k {
        binom(ni - 1, ki) - 1
    } else if l + 1 >= n {
        // the snake M_n[n-1,n-1] would carry no labellings
        sigma_recursive(n, k, n - 2, memo)
    } else {
        sigma_recursive(n - 1, k, l - 1, memo)
            + sigma_recursive(n - 1, k, l, memo)
            + binom(ni - 2, ki - 1)
            + (li - ki)
    };
    memo.insert((n, l), v);
    v
}

/// Normalized volume of `M_n[k,l]`; zero outside `n >= 4`, `1 <= k <= l <= n-2`.
pub fn sigma(n: usize, k: usize, l: usize) -> Result<i64> {
    check_n(n)?;
    if !sigma_in_range(n, k, l) {
        return Ok(0);
    }
    let a = sigma_snake_sum(n, k, l);
    let b = sigma_recursive(n, k, l, &mut HashMap::new());
    if a != b {
        return Err(Error::Consistency(format!(
            "sigma_{n}({k},{l}): snake sum {a} but recursion {b}"
        )));
    }
    Ok(a)
}

/// `f_l(n)` for `0 <= n <= n_max`, `1 <= l <= l_max`: rows indexed by `n`.
/// Outside the geometric range the values continue the recursion in `n` backwards.
pub fn sigma_table(l_max: usize, n_max: usize) -> Result<Vec<Vec<i64>>> {
    if l_max == 0 || n_max == 0 {
        return Err(Error::Range("table bounds must be at least 1".into()));
    }
    let top = n_max.max(l_max + 2).max(4);
    check_n(top + 1)?;
    // f[n][l] with column l = 0 identically zero
    let mut f = vec![vec![0i64; l_max + 1]; top + 1];
    for l in 1..=l_max {
        for n in (0..=top).rev() {
            // the top row is always geometric, so n + 1 exists here
            f[n][l] = if sigma_in_range(n, 1, l) {
                sigma(n, 1, l)?
            } else {
                f[n + 1][l] - f[n][l - 1] - l as i64
            };
        }
    }
    Ok(f.into_iter().take(n_max + 1).map(|row| row[1..].to_vec()).collect())
}

/// h* of `U_{2,n}`: `1, C(n,2) - n, C(n,4), C(n,6), ...`, of length `n`.
pub fn hstar_uniform_closed(n: usize) -> Result<Vec<u64>> {
    if n < 4 {
        return Err(Error::Range(format!("need n >= 4, got {n}")));
    }
    check_n(n)?;
    let ni = n as i64;
    let mut h = vec![0u64; n];
    h[0] = 1;
    h[1] = (binom(ni, 2) - ni) as u64;
    for k in 2..n {
        h[k] = binom(ni, 2 * k as i64) as u64;
    }
    Ok(h)
}

/// h* of `M_n[1,l]` counted by one-descent permutations of `1..=n-1` with descent at
/// most `l`, graded by initial gaps; `l = n-2` gives `U_{2,n}`.
fn hstar_by_gaps(n: usize, l: usize) -> Vec<u64> {
    let mut h = vec![0u64; n];
    h[0] = 1;
    for p in one_descent_permutations(n - 1) {
        if p.descent_pos() <= l {
            h[gap_stats(&p).ig + 1] += 1;
        }
    }
    // the base permutation n-1 | 1 ... n-2 has no initial gaps and no incoming arcs
    h[1] -= 1;
    h
}

pub fn hstar_uniform_perms(n: usize) -> Result<Vec<u64>> {
    if n < 4 {
        return Err(Error::Range(format!("need n >= 4, got {n}")));
    }
    check_n(n)?;
    let h = hstar_by_gaps(n, n - 2);
    if h != hstar_uniform_closed(n)? {
        return Err(Error::Consistency(format!("permutation count {h:?} disagrees with closed form")));
    }
    Ok(h)
}

pub fn hstar_schubert(n: usize, l: usize) -> Result<Vec<u64>> {
    if !(1 <= l && l + 3 <= n) {
        return Err(Error::Range(format!("need 1 <= l <= n-3, got n={n} l={l}")));
    }
    check_n(n)?;
    Ok(hstar_by_gaps(n, l))
}

fn schubert_or_uniform(n: usize, l: usize) -> Result<Vec<u64>> {
    if l + 2 == n {
        hstar_uniform_closed(n)
    } else {
        hstar_schubert(n, l)
    }
}

/// h* of `M_n[k,l]` by inclusion-exclusion over Schubert matroids.
pub fn hstar_rank2(n: usize, k: usize, l: usize) -> Result<Vec<u64>> {
    if !(1 <= k && k <= l && l + 2 <= n && n >= 4) {
        return Err(Error::Range(format!("need n >= 4 and 1 <= k <= l <= n-2, got n={n} k={k} l={l}")));
    }
    let a = schubert_or_uniform(n, l)?;
    let b = schubert_or_uniform(n, n - k - 1)?;
    let u = hstar_uniform_closed(n)?;
    a.iter()
        .zip(&b)
        .zip(&u)
        .enumerate()
        .map(|(i, ((&x, &y), &z))| {
            let v = x as i64 + y as i64 - z as i64;
            if v < 0 {
                Err(Error::NegativityViolation { index: i, value: v.to_string() })
            } else {
                Ok(v as u64)
            }
        })
        .collect()
}
