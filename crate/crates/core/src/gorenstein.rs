//! Combinatorial test for Gorenstein LPM polytopes.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::lpm::{snake_composition, Lpm};
use crate::polytope::concave_points;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GorensteinVerdict {
    pub gorenstein: bool,
    pub delta: Option<u32>,
    pub witness: String,
}

/// Lattice points other than the two ends where the bounding paths meet `y = x`.
fn diagonal_hits(m: &Lpm) -> Vec<(usize, usize)> {
    let end = (m.n() - m.k(), m.k());
    let mut hits = Vec::new();
    for p in [m.upper(), m.lower()] {
        for w in p.points().windows(2) {
            let ((x0, y0), (x1, y1)) = (w[0], w[1]);
            let hit = if y0 == y1 {
                (x0 <= y0 && y0 <= x1).then_some((y0, y0))
            } else {
                (y0 <= x0 && x0 <= y1).then_some((x0, x0))
            };
            if let Some(h) = hit {
                if h != (0, 0) && h != end && !hits.contains(&h) {
                    hits.push(h);
                }
            }
        }
    }
    hits
}

/// The diagonal meets the boundary paths only at the origin and the far corner.
pub fn diagonal_clearance(m: &Lpm) -> bool {
    diagonal_hits(m).is_empty()
}

/// Every concave point is `(i, i+1)` or `(i+1, i)`.
pub fn concave_near_diagonal(m: &Lpm) -> bool {
    concave_points(m).iter().all(|p| p.x + 1 == p.y || p.y + 1 == p.x)
}

/// Gorenstein index read off a palindromic h*-vector of a `d`-dimensional polytope.
pub fn gorenstein_from_hstar(h: &[u64], d: usize) -> Option<u32> {
    let s = h.iter().rposition(|&x| x != 0)?;
    let palindromic = (0..=s).all(|i| h[i] == h[s - i]);
    palindromic.then(|| (d + 1 - s) as u32)
}

pub fn gorenstein_classify(m: &Lpm) -> Result<GorensteinVerdict> {
    if !m.is_connected() {
        return Err(Error::NotConnected);
    }
    if m.n() == 1 {
        return Err(Error::Degenerate("the polytope is a single point".into()));
    }
    let hits = diagonal_hits(m);
    let far: Vec<(usize, usize)> = concave_points(m)
        .into_iter()
        .filter(|p| p.x + 1 != p.y && p.y + 1 != p.x)
        .map(|p| (p.x, p.y))
        .collect();
    let index_two = hits.is_empty() && far.is_empty();
    let snake_delta = if m.is_snake() {
        let (alpha, starred) = snake_composition(m)?;
        let parts = alpha.parts();
        (!parts.is_empty() && parts.iter().all(|&p| p == parts[0]))
            .then(|| (parts[0] as u32 + 2, format!("snake {}{alpha}", if starred { "S*" } else { "S" })))
    } else {
        None
    };
    let verdict = match (index_two, snake_delta) {
        (true, other) => {
            if let Some((d, _)) = other {
                log::warn!("{m}: both the index-2 test and the snake test (delta {d}) apply");
            }
            GorensteinVerdict {
                gorenstein: true,
                delta: Some(2),
                witness: "diagonal clears the boundary and all concave points touch it".into(),
            }
        }
        (false, Some((d, w))) => GorensteinVerdict { gorenstein: true, delta: Some(d), witness: w },
        (false, None) => {
            let witness = if let Some((x, y)) = hits.first() {
                format!("diagonal meets the boundary at ({x},{y})")
            } else {
                let (x, y) = far[0];
                format!("concave point ({x},{y}) is away from the diagonal")
            };
            GorensteinVerdict { gorenstein: false, delta: None, witness }
        }
    };
    #[cfg(debug_assertions)]
    cross_check(m, &verdict)?;
    Ok(verdict)
}

#[cfg(debug_assertions)]
fn cross_check(m: &Lpm, verdict: &GorensteinVerdict) -> Result<()> {
    if m.n() > 10 {
        return Ok(());
    }
    let h = crate::ehrhart::hstar_from_ehrhart(m)?;
    let oracle = gorenstein_from_hstar(&h, crate::polytope::dimension(m));
    if oracle != verdict.delta {
        return Err(Error::Consistency(format!(
            "Gorenstein test gives {:?} but h* = {h:?} gives {oracle:?}",
            verdict.delta
        )));
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lpm::{snake_from_composition, Composition};

    fn m(n: usize, u: &[usize], l: &[usize]) -> Lpm {
        Lpm::from_north_sets(n, u, l).unwrap()
    }

    #[test]
    fn figure_examples() {
        let left = gorenstein_classify(&m(8, &[1, 2, 3, 4], &[3, 5, 7, 8])).unwrap();
        assert_eq!(left.delta, Some(2));
        let middle = m(8, &[1, 2, 3, 5], &[3, 5, 7, 8]);
        assert!(!concave_near_diagonal(&middle));
        assert!(!gorenstein_classify(&middle).unwrap().gorenstein);
        let right = m(8, &[1, 3, 4, 5], &[3, 5, 7, 8]);
        assert!(!concave_near_diagonal(&right));
        assert!(!gorenstein_classify(&right).unwrap().gorenstein);
    }

    #[test]
    fn uniform_rank_two() {
        let u = Lpm::uniform(2, 5).unwrap();
        assert!(!diagonal_clearance(&u));
        assert!(concave_near_diagonal(&u));
        assert!(!gorenstein_classify(&u).unwrap().gorenstein);
        assert_eq!(gorenstein_classify(&Lpm::uniform(2, 4).unwrap()).unwrap().delta, Some(2));
    }

    #[test]
    fn constant_snakes() {
        for a in 1..4 {
            for len in 1..4 {
                let alpha = Composition::new(vec![a; len]).unwrap();
                for starred in [false, true] {
                    let s = snake_from_composition(&alpha, starred);
                    let v = gorenstein_classify(&s).unwrap();
                    assert_eq!(v.delta, Some(a as u32 + 2), "{s}");
                }
            }
        }
    }

    #[test]
    fn simplices() {
        assert_eq!(gorenstein_classify(&Lpm::uniform(1, 2).unwrap()).unwrap().delta, Some(2));
        assert_eq!(gorenstein_classify(&Lpm::uniform(1, 5).unwrap()).unwrap().delta, Some(5));
        assert!(matches!(gorenstein_classify(&Lpm::uniform(1, 1).unwrap()), Err(Error::Degenerate(_))));
    }

    #[test]
    fn palindrome_oracle() {
        assert_eq!(gorenstein_from_hstar(&[1, 1, 1, 0], 3), Some(2));
        assert_eq!(gorenstein_from_hstar(&[1, 5, 5, 0, 0], 4), None);
        assert_eq!(gorenstein_from_hstar(&[1, 0, 0], 2), Some(3));
    }
}
