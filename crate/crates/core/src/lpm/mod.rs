//! Lattice path matroids given by a pair of bounding paths.

mod parse;
mod path;
mod snake;

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub use path::{LatticePath, Step};
pub use snake::{snake_composition, snake_from_composition, snakes_inside, Composition, Move};

/// Unit cell of the diagram, `col` counted from the left and `row` from the bottom.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Cell {
    pub col: usize,
    pub row: usize,
}

impl Cell {
    pub fn new(col: usize, row: usize) -> Self {
        Cell { col, row }
    }

    /// Key of the sequential order: by anti-diagonal, then by column.
    pub fn sequence_key(&self) -> (usize, usize) {
        (self.col + self.row, self.col)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(into = "LpmRepr", try_from = "LpmRepr")]
pub struct Lpm {
    upper: LatticePath,
    lower: LatticePath,
}

#[derive(Serialize, Deserialize)]
struct LpmRepr {
    n: usize,
    k: usize,
    upper: Vec<usize>,
    lower: Vec<usize>,
}

impl From<Lpm> for LpmRepr {
    fn from(m: Lpm) -> Self {
        LpmRepr {
            n: m.n(),
            k: m.k(),
            upper: m.upper.north_set(),
            lower: m.lower.north_set(),
        }
    }
}

impl TryFrom<LpmRepr> for Lpm {
    type Error = Error;

    fn try_from(r: LpmRepr) -> Result<Self> {
        let m = Lpm::from_north_sets(r.n, &r.upper, &r.lower)?;
        if m.k() != r.k {
            return Err(Error::RankMismatch { upper: m.k(), lower: r.k });
        }
        Ok(m)
    }
}

impl Lpm {
    pub fn new(upper: LatticePath, lower: LatticePath) -> Result<Self> {
        if upper.len() != lower.len() {
            return Err(Error::LengthMismatch { upper: upper.len(), lower: lower.len() });
        }
        if upper.is_empty() {
            return Err(Error::EmptyGroundSet);
        }
        if upper.rank() != lower.rank() {
            return Err(Error::RankMismatch { upper: upper.rank(), lower: lower.rank() });
        }
        let (hu, hl) = (upper.heights(), lower.heights());
        if let Some(index) = (1..hu.len()).find(|&i| hu[i] < hl[i]) {
            return Err(Error::DominanceViolation { index });
        }
        Ok(Lpm { upper, lower })
    }

    pub fn from_north_sets(n: usize, upper: &[usize], lower: &[usize]) -> Result<Self> {
        Lpm::new(LatticePath::from_north_set(n, upper)?, LatticePath::from_north_set(n, lower)?)
    }

    /// The uniform matroid `U_{k,n}`.
    pub fn uniform(k: usize, n: usize) -> Result<Self> {
        if k > n {
            return Err(Error::Range(format!("rank {k} exceeds ground set size {n}")));
        }
        let upper: Vec<usize> = (1..=k).collect();
        let lower: Vec<usize> = (n - k + 1..=n).collect();
        Lpm::from_north_sets(n, &upper, &lower)
    }

    pub fn upper(&self) -> &LatticePath {
        &self.upper
    }

    pub fn lower(&self) -> &LatticePath {
        &self.lower
    }

    pub fn n(&self) -> usize {
        self.upper.len()
    }

    pub fn k(&self) -> usize {
        self.upper.rank()
    }

    /// Prefix height bounds `(lower, upper)` for `i = 0..=n`.
    pub fn height_bounds(&self) -> (Vec<usize>, Vec<usize>) {
        (self.lower.heights(), self.upper.heights())
    }

    pub fn contains_path(&self, p: &LatticePath) -> bool {
        self.upper.dominates(p) && p.dominates(&self.lower)
    }

    /// All bases as lattice paths, in lexicographic order of their index sets.
    pub fn bases(&self) -> Vec<LatticePath> {
        let (lo, hi) = self.height_bounds();
        let n = self.n();
        let mut out = Vec::new();
        let mut cur = Vec::with_capacity(n);
        fn rec(
            i: usize,
            h: usize,
            lo: &[usize],
            hi: &[usize],
            cur: &mut Vec<Step>,
            out: &mut Vec<LatticePath>,
        ) {
            if i == lo.len() - 1 {
                out.push(LatticePath::new(cur.clone()));
                return;
            }
            for (step, next) in [(Step::N, h + 1), (Step::E, h)] {
                if lo[i + 1] <= next && next <= hi[i + 1] {
                    cur.push(step);
                    rec(i + 1, next, lo, hi, cur, out);
                    cur.pop();
                }
            }
        }
        rec(0, 0, &lo, &hi, &mut cur, &mut out);
        out
    }

    /// Indices `0 < i < n` where the two paths meet.
    pub fn touch_points(&self) -> Vec<usize> {
        let (lo, hi) = self.height_bounds();
        (1..self.n()).filter(|&i| lo[i] == hi[i]).collect()
    }

    pub fn is_connected(&self) -> bool {
        self.touch_points().is_empty()
    }

    /// Number of connected components.
    pub fn components(&self) -> usize {
        self.touch_points().len() + 1
    }

    /// Unit cells between the two paths.
    pub fn cells(&self) -> Vec<Cell> {
        let hu = self.upper.column_heights();
        let hl = self.lower.column_heights();
        let mut out: Vec<Cell> = hu
            .iter()
            .zip(&hl)
            .enumerate()
            .flat_map(|(c, (&u, &l))| (l..u).map(move |r| Cell::new(c, r)))
            .collect();
        out.sort_by_key(Cell::sequence_key);
        out
    }

    pub fn has_cell(&self, cell: Cell) -> bool {
        let hu = self.upper.column_heights();
        let hl = self.lower.column_heights();
        cell.col < hu.len() && hl[cell.col] <= cell.row && cell.row < hu[cell.col]
    }

    /// Connected and free of 2x2 blocks of cells.
    pub fn is_snake(&self) -> bool {
        if !self.is_connected() {
            return false;
        }
        let hu = self.upper.column_heights();
        let hl = self.lower.column_heights();
        // two adjacent columns share at most one row
        hu.windows(2)
            .zip(hl.windows(2))
            .all(|(u, l)| u[0].min(u[1]) <= l[0].max(l[1]) + 1)
    }

    /// Reflection of the diagram across y = x; gives the dual matroid.
    pub fn reflected(&self) -> Lpm {
        Lpm { upper: self.lower.reflected(), lower: self.upper.reflected() }
    }

    fn check_element(&self, i: usize) -> Result<()> {
        if i == 0 || i > self.n() {
            return Err(Error::ElementOutOfRange { element: i, n: self.n() });
        }
        if self.n() == 1 {
            return Err(Error::EmptyGroundSet);
        }
        Ok(())
    }

    /// Deletion `M \ i` (1-based element).
    pub fn delete(&self, i: usize) -> Result<Lpm> {
        self.check_element(i)?;
        let bases = self.bases();
        let avoiding: Vec<&LatticePath> = bases.iter().filter(|b| b.step(i) == Step::E).collect();
        let chosen = if avoiding.is_empty() { bases.iter().collect() } else { avoiding };
        Ok(envelope(chosen.into_iter().map(|b| drop_step(b, i))))
    }

    /// Contraction `M / i` (1-based element).
    pub fn contract(&self, i: usize) -> Result<Lpm> {
        self.check_element(i)?;
        let bases = self.bases();
        let containing: Vec<&LatticePath> = bases.iter().filter(|b| b.step(i) == Step::N).collect();
        let chosen = if containing.is_empty() { bases.iter().collect() } else { containing };
        Ok(envelope(chosen.into_iter().map(|b| drop_step(b, i))))
    }

    /// Concatenation of diagrams: the ground set of `other` is shifted past this one.
    pub fn direct_sum(&self, other: &Lpm) -> Lpm {
        let join = |a: &LatticePath, b: &LatticePath| {
            LatticePath::new(a.steps().iter().chain(b.steps()).copied().collect())
        };
        Lpm { upper: join(&self.upper, &other.upper), lower: join(&self.lower, &other.lower) }
    }
}

fn drop_step(p: &LatticePath, i: usize) -> LatticePath {
    let mut steps = p.steps().to_vec();
    steps.remove(i - 1);
    LatticePath::new(steps)
}

/// Smallest LPM containing every given path (all of equal length and rank).
fn envelope(paths: impl Iterator<Item = LatticePath>) -> Lpm {
    let mut hi: Option<Vec<usize>> = None;
    let mut lo: Option<Vec<usize>> = None;
    for p in paths {
        let h = p.heights();
        hi = Some(match hi {
            None => h.clone(),
            Some(v) => v.iter().zip(&h).map(|(a, b)| *a.max(b)).collect(),
        });
        lo = Some(match lo {
            None => h,
            Some(v) => v.iter().zip(&h).map(|(a, b)| *a.min(b)).collect(),
        });
    }
    let from_heights = |h: Vec<usize>| {
        LatticePath::new(h.windows(2).map(|w| if w[1] > w[0] { Step::N } else { Step::E }).collect())
    };
    Lpm {
        upper: from_heights(hi.expect("a matroid has at least one basis")),
        lower: from_heights(lo.expect("a matroid has at least one basis")),
    }
}

impl fmt::Display for Lpm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let join = |v: Vec<usize>| v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",");
        write!(
            f,
            "U={}; L={}; n={}",
            join(self.upper.north_set()),
            join(self.lower.north_set()),
            self.n()
        )
    }
}
