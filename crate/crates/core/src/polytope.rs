//! Inequality description and facets of the matroid polytope of an LPM.

use std::fmt;
use std::str::FromStr;

use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::lpm::{Cell, Lpm, Step};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoxBound {
    pub i: usize,
    pub lo: usize,
    pub hi: usize,
}

/// `lo <= x_1 + ... + x_i <= hi`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PrefixBound {
    pub i: usize,
    pub lo: usize,
    pub hi: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HDescription {
    pub n: usize,
    /// right-hand side of the equation `x_1 + ... + x_n = k`
    pub k: usize,
    pub boxes: Vec<BoxBound>,
    pub prefixes: Vec<PrefixBound>,
}

pub fn h_description(m: &Lpm) -> HDescription {
    let (lo, hi) = m.height_bounds();
    HDescription {
        n: m.n(),
        k: m.k(),
        boxes: (1..=m.n()).map(|i| BoxBound { i, lo: 0, hi: 1 }).collect(),
        prefixes: (1..m.n()).map(|i| PrefixBound { i, lo: lo[i], hi: hi[i] }).collect(),
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Boundary {
    Upper,
    Lower,
}

/// Boundary lattice point with exactly one of its four incident cells missing.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ConcavePoint {
    pub x: usize,
    pub y: usize,
    pub path: Boundary,
    /// number of steps of the path before reaching the point
    pub index: usize,
}

pub fn concave_points(m: &Lpm) -> Vec<ConcavePoint> {
    let mut out = Vec::new();
    for (path, p) in [(Boundary::Upper, m.upper()), (Boundary::Lower, m.lower())] {
        for (index, (x, y)) in p.points().into_iter().enumerate() {
            let around = [(x.wrapping_sub(1), y.wrapping_sub(1)), (x, y.wrapping_sub(1)), (x.wrapping_sub(1), y), (x, y)];
            let present = around
                .into_iter()
                .filter(|&(c, r)| c != usize::MAX && r != usize::MAX && m.has_cell(Cell::new(c, r)))
                .count();
            if present == 3 {
                out.push(ConcavePoint { x, y, path, index });
            }
        }
    }
    out
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum FacetKind {
    /// `x_1 + ... + x_i = L(i)` at a concave point of the lower path
    #[serde(rename = "a")]
    LowerPrefix,
    /// `x_1 + ... + x_i = U(i)` at a concave point of the upper path
    #[serde(rename = "b")]
    UpperPrefix,
    /// `x_i = 0`
    #[serde(rename = "c")]
    Zero,
    /// `x_i = 1`
    #[serde(rename = "d")]
    One,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct HyperplaneDescriptor {
    #[serde(rename = "type")]
    pub kind: FacetKind,
    pub i: usize,
    pub bound: usize,
}

impl HyperplaneDescriptor {
    /// Value of the left-hand side at a 0/1 or rational point.
    fn lhs<T: Clone + Zero + std::ops::Add<Output = T>>(&self, x: &[T]) -> T {
        match self.kind {
            FacetKind::LowerPrefix | FacetKind::UpperPrefix => {
                x[..self.i].iter().cloned().fold(T::zero(), |a, b| a + b)
            }
            FacetKind::Zero | FacetKind::One => x[self.i - 1].clone(),
        }
    }

    /// True when the point attains the bound.
    pub fn is_tight(&self, indicator: &[u8]) -> bool {
        let x: Vec<usize> = indicator.iter().map(|&b| b as usize).collect();
        self.lhs(&x) == self.bound
    }
}

impl fmt::Display for HyperplaneDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.kind {
            FacetKind::LowerPrefix | FacetKind::UpperPrefix => {
                let terms: Vec<String> = (1..=self.i).map(|j| format!("x{j}")).collect();
                write!(f, "{}={}", terms.join("+"), self.bound)
            }
            FacetKind::Zero | FacetKind::One => write!(f, "x{}={}", self.i, self.bound),
        }
    }
}

/// Facet-defining hyperplanes of a connected LPM polytope, grouped by kind.
pub fn facet_hyperplanes(m: &Lpm) -> Result<Vec<HyperplaneDescriptor>> {
    if !m.is_connected() {
        return Err(Error::NotConnected);
    }
    let n = m.n();
    if n == 1 {
        return Ok(Vec::new());
    }
    let (lo, hi) = m.height_bounds();
    let mut out = Vec::new();
    for i in 1..n {
        if m.lower().step(i) == Step::N && m.lower().step(i + 1) == Step::E {
            out.push(HyperplaneDescriptor { kind: FacetKind::LowerPrefix, i, bound: lo[i] });
        }
    }
    for i in 1..n {
        if m.upper().step(i) == Step::E && m.upper().step(i + 1) == Step::N {
            out.push(HyperplaneDescriptor { kind: FacetKind::UpperPrefix, i, bound: hi[i] });
        }
    }
    for i in 1..=n {
        if m.delete(i)?.is_connected() {
            out.push(HyperplaneDescriptor { kind: FacetKind::Zero, i, bound: 0 });
        }
    }
    for i in 1..=n {
        if m.contract(i)?.is_connected() {
            out.push(HyperplaneDescriptor { kind: FacetKind::One, i, bound: 1 });
        }
    }
    Ok(out)
}

/// Dimension of the polytope: `n` minus the number of connected components.
pub fn dimension(m: &Lpm) -> usize {
    m.n() - m.components()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RationalPoint {
    pub coords: Vec<BigRational>,
}

impl FromStr for RationalPoint {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let coords = s
            .split(',')
            .map(str::trim)
            .map(|t| {
                t.parse::<BigRational>().map_err(|e| Error::Parse(format!("bad coordinate {t:?}: {e}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(RationalPoint { coords })
    }
}

/// Membership in the polytope; with `strict`, membership in its relative interior.
pub fn contains_point(m: &Lpm, p: &RationalPoint, strict: bool) -> Result<bool> {
    let n = m.n();
    if p.coords.len() != n {
        return Err(Error::DimensionMismatch { expected: n, got: p.coords.len() });
    }
    let facets = if strict { facet_hyperplanes(m)? } else { Vec::new() };
    let (lo, hi) = m.height_bounds();
    let x = &p.coords;
    let one = BigRational::one();
    let zero = BigRational::zero();
    if x.iter().any(|v| *v < zero || *v > one) {
        return Ok(false);
    }
    let mut prefix = BigRational::zero();
    for i in 1..=n {
        prefix += &x[i - 1];
        let (l, u) = (BigRational::from_integer(lo[i].into()), BigRational::from_integer(hi[i].into()));
        if prefix < l || prefix > u {
            return Ok(false);
        }
    }
    if prefix != BigRational::from_integer(m.k().into()) {
        return Ok(false);
    }
    Ok(facets.iter().all(|f| f.lhs(x) != BigRational::from_integer(f.bound.into())))
}
