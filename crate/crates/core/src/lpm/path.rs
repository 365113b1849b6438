use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A unit step. `E` sorts before `N` so that paths compare like their 0/1 vectors.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Step {
    E,
    N,
}

impl Step {
    pub fn flipped(self) -> Step {
        match self {
            Step::E => Step::N,
            Step::N => Step::E,
        }
    }
}

/// A lattice path from (0,0) using unit north and east steps.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(into = "String", try_from = "String")]
pub struct LatticePath {
    steps: Vec<Step>,
}

impl LatticePath {
    pub fn new(steps: Vec<Step>) -> Self {
        LatticePath { steps }
    }

    /// Path of length `n` whose north steps sit at the given 1-based indices.
    pub fn from_north_set(n: usize, north: &[usize]) -> Result<Self> {
        let mut steps = vec![Step::E; n];
        for &i in north {
            if i == 0 || i > n {
                return Err(Error::ElementOutOfRange { element: i, n });
            }
            if steps[i - 1] == Step::N {
                return Err(Error::Parse(format!("index {i} repeated")));
            }
            steps[i - 1] = Step::N;
        }
        Ok(LatticePath { steps })
    }

    /// Inverse of [`LatticePath::indicator`].
    pub fn from_indicator(bits: &[u8]) -> Self {
        LatticePath {
            steps: bits.iter().map(|&b| if b == 0 { Step::E } else { Step::N }).collect(),
        }
    }

    /// Path that crosses column `c` at height `heights[c]` and ends at height `k`.
    pub fn from_column_heights(heights: &[usize], k: usize) -> Self {
        let mut steps = Vec::with_capacity(heights.len() + k);
        let mut h = 0;
        for &target in heights {
            debug_assert!(target >= h && target <= k);
            steps.extend(std::iter::repeat_n(Step::N, target - h));
            steps.push(Step::E);
            h = target;
        }
        steps.extend(std::iter::repeat_n(Step::N, k - h));
        LatticePath { steps }
    }

    pub fn steps(&self) -> &[Step] {
        &self.steps
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    /// Number of north steps.
    pub fn rank(&self) -> usize {
        self.steps.iter().filter(|&&s| s == Step::N).count()
    }

    /// 1-based step, panics when out of range.
    pub fn step(&self, i: usize) -> Step {
        self.steps[i - 1]
    }

    pub fn north_set(&self) -> Vec<usize> {
        self.steps
            .iter()
            .enumerate()
            .filter(|(_, &s)| s == Step::N)
            .map(|(i, _)| i + 1)
            .collect()
    }

    pub fn indicator(&self) -> Vec<u8> {
        self.steps.iter().map(|&s| u8::from(s == Step::N)).collect()
    }

    /// Prefix heights `h_0 = 0, h_1, ..., h_n`.
    pub fn heights(&self) -> Vec<usize> {
        let mut out = Vec::with_capacity(self.steps.len() + 1);
        let mut h = 0;
        out.push(0);
        for &s in &self.steps {
            if s == Step::N {
                h += 1;
            }
            out.push(h);
        }
        out
    }

    /// Height of each east step, in order.
    pub fn column_heights(&self) -> Vec<usize> {
        let mut out = Vec::new();
        let mut h = 0;
        for &s in &self.steps {
            match s {
                Step::N => h += 1,
                Step::E => out.push(h),
            }
        }
        out
    }

    /// Lattice points visited, starting at the origin.
    pub fn points(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.steps.len() + 1);
        let (mut x, mut y) = (0, 0);
        out.push((x, y));
        for &s in &self.steps {
            match s {
                Step::N => y += 1,
                Step::E => x += 1,
            }
            out.push((x, y));
        }
        out
    }

    /// Weakly above `other` at every prefix.
    pub fn dominates(&self, other: &LatticePath) -> bool {
        self.len() == other.len()
            && self.heights().iter().zip(other.heights()).all(|(a, b)| *a >= b)
    }

    /// Mirror image across the line y = x.
    pub fn reflected(&self) -> LatticePath {
        LatticePath {
            steps: self.steps.iter().map(|s| s.flipped()).collect(),
        }
    }

    /// Swap steps `i` and `i+1` (1-based).
    pub fn swapped(&self, i: usize) -> LatticePath {
        let mut steps = self.steps.clone();
        steps.swap(i - 1, i);
        LatticePath { steps }
    }
}

impl fmt::Display for LatticePath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in &self.steps {
            f.write_str(match s {
                Step::N => "N",
                Step::E => "E",
            })?;
        }
        Ok(())
    }
}

impl FromStr for LatticePath {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let steps = s
            .trim()
            .chars()
            .map(|c| match c.to_ascii_uppercase() {
                'N' => Ok(Step::N),
                'E' => Ok(Step::E),
                other => Err(Error::Parse(format!("unexpected step character {other:?}"))),
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(LatticePath { steps })
    }
}

impl From<LatticePath> for String {
    fn from(p: LatticePath) -> String {
        p.to_string()
    }
}

impl TryFrom<String> for LatticePath {
    type Error = Error;

    fn try_from(s: String) -> Result<Self> {
        s.parse()
    }
}
