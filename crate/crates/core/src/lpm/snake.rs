//! Snakes (connected ribbon diagrams) and their compositions.

use std::fmt;

use serde::{Deserialize, Serialize};

use super::{Cell, LatticePath, Lpm, Step};
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Move {
    Up,
    Right,
}

/// A composition: a sequence of positive parts.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Composition {
    parts: Vec<usize>,
}

impl Composition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::Parse("composition parts must be positive".into()));
        }
        Ok(Composition { parts })
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn total(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Moves between consecutive cells; the first run is `first`.
    pub fn moves(&self, first: Move) -> Vec<Move> {
        let mut out = Vec::with_capacity(self.total());
        for (t, &p) in self.parts.iter().enumerate() {
            let mv = match (t % 2 == 0, first) {
                (true, m) => m,
                (false, Move::Up) => Move::Right,
                (false, Move::Right) => Move::Up,
            };
            out.extend(std::iter::repeat_n(mv, p));
        }
        out
    }
}

impl TryFrom<Vec<usize>> for Composition {
    type Error = Error;

    fn try_from(v: Vec<usize>) -> Result<Self> {
        Composition::new(v)
    }
}

impl From<Composition> for Vec<usize> {
    fn from(c: Composition) -> Vec<usize> {
        c.parts
    }
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.parts.iter().map(|p| p.to_string()).collect();
        write!(f, "({})", s.join(","))
    }
}

/// The snake `S(alpha)`, or `S*(alpha)` when `starred`.
pub fn snake_from_composition(alpha: &Composition, starred: bool) -> Lpm {
    let first = if starred { Move::Right } else { Move::Up };
    let mut cells = vec![Cell::new(0, 0)];
    for mv in alpha.moves(first) {
        let last = *cells.last().unwrap();
        cells.push(match mv {
            Move::Up => Cell::new(last.col, last.row + 1),
            Move::Right => Cell::new(last.col + 1, last.row),
        });
    }
    let cols = cells.last().unwrap().col + 1;
    let mut hu = vec![0; cols];
    let mut hl = vec![usize::MAX; cols];
    for c in &cells {
        hu[c.col] = hu[c.col].max(c.row + 1);
        hl[c.col] = hl[c.col].min(c.row);
    }
    let k = cells.last().unwrap().row + 1;
    Lpm::new(LatticePath::from_column_heights(&hu, k), LatticePath::from_column_heights(&hl, k))
        .expect("ribbon paths are nested")
}

/// Inverse of [`snake_from_composition`]. The one-cell snake gives the empty
/// composition, unstarred.
pub fn snake_composition(m: &Lpm) -> Result<(Composition, bool)> {
    if !m.is_snake() {
        return Err(Error::NotASnake);
    }
    let cells = m.cells();
    if cells.is_empty() {
        return Err(Error::Degenerate("snake without cells".into()));
    }
    let moves: Vec<Move> = cells
        .windows(2)
        .map(|w| if w[1].col == w[0].col { Move::Up } else { Move::Right })
        .collect();
    let starred = moves.first() == Some(&Move::Right);
    let mut parts: Vec<usize> = Vec::new();
    let mut prev = None;
    for mv in moves {
        if prev == Some(mv) {
            *parts.last_mut().unwrap() += 1;
        } else {
            parts.push(1);
        }
        prev = Some(mv);
    }
    Ok((Composition { parts }, starred))
}

/// Every snake whose paths lie between the bounding paths of `m`.
pub fn snakes_inside(m: &Lpm) -> Result<Vec<Lpm>> {
    if !m.is_connected() {
        return Err(Error::NotConnected);
    }
    let n = m.n();
    if n == 1 {
        return Ok(vec![m.clone()]);
    }
    let k = m.k();
    let (lo, hi) = m.height_bounds();
    // A snake is determined by its upper path U' = N w E; its lower path is E w N.
    let mut out = Vec::new();
    let mut mid: Vec<Step> = Vec::with_capacity(n);
    fn rec(
        i: usize,
        h: usize,
        n: usize,
        k: usize,
        lo: &[usize],
        hi: &[usize],
        mid: &mut Vec<Step>,
        out: &mut Vec<Lpm>,
    ) {
        if i == n - 1 {
            if h == k {
                let wrap = |a: Step, b: Step| {
                    let mut s = vec![a];
                    s.extend_from_slice(mid);
                    s.push(b);
                    LatticePath::new(s)
                };
                out.push(
                    Lpm::new(wrap(Step::N, Step::E), wrap(Step::E, Step::N))
                        .expect("ribbon paths are nested"),
                );
            }
            return;
        }
        for (step, next) in [(Step::N, h + 1), (Step::E, h)] {
            if lo[i + 1] < next && next <= hi[i + 1] {
                mid.push(step);
                rec(i + 1, next, n, k, lo, hi, mid, out);
                mid.pop();
            }
        }
    }
    if hi[1] >= 1 && lo[1] == 0 {
        rec(1, 1, n, k, &lo, &hi, &mut mid, &mut out);
    }
    Ok(out)
}
