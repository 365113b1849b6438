//! Fence posets, their linear extensions, and labellings of snakes.

use std::collections::HashMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::lpm::{snake_composition, Composition, Lpm, Move};

/// Largest poset whose linear extensions we enumerate.
pub const MAX_POSET_SIZE: usize = 20;
/// Largest number of linear extensions we materialize.
pub const MAX_EXTENSIONS: usize = 1_000_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Relation {
    /// p_i below p_{i+1}
    Less,
    /// p_i above p_{i+1}
    Greater,
}

/// Finite poset on `0..size` given by cover relations `(lower, upper)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Poset {
    size: usize,
    covers: Vec<(usize, usize)>,
}

impl Poset {
    pub fn new(size: usize, covers: Vec<(usize, usize)>) -> Self {
        Poset { size, covers }
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn covers(&self) -> &[(usize, usize)] {
        &self.covers
    }

    /// All order-preserving bijections to `1..=size`, sorted lexicographically.
    pub fn linear_extensions(&self) -> Result<Vec<Labelling>> {
        if self.size > MAX_POSET_SIZE {
            return Err(Error::SizeGuard { limit: MAX_POSET_SIZE });
        }
        let mut below = vec![Vec::new(); self.size];
        for &(lo, hi) in &self.covers {
            below[hi].push(lo);
        }
        let mut labels = vec![0usize; self.size];
        let mut out = Vec::new();
        extend(1, &below, &mut labels, &mut out)?;
        out.sort();
        Ok(out)
    }

    pub fn is_extension(&self, l: &Labelling) -> bool {
        let labels = l.labels();
        let mut seen = vec![false; self.size];
        labels.len() == self.size
            && labels.iter().all(|&x| {
                x >= 1 && x <= self.size && !std::mem::replace(&mut seen[x - 1], true)
            })
            && self.covers.iter().all(|&(lo, hi)| labels[lo] < labels[hi])
    }
}

fn extend(
    next: usize,
    below: &[Vec<usize>],
    labels: &mut Vec<usize>,
    out: &mut Vec<Labelling>,
) -> Result<()> {
    if next > labels.len() {
        if out.len() >= MAX_EXTENSIONS {
            return Err(Error::SizeGuard { limit: MAX_EXTENSIONS });
        }
        out.push(Labelling { labels: labels.clone() });
        return Ok(());
    }
    for v in 0..labels.len() {
        if labels[v] == 0 && below[v].iter().all(|&u| labels[u] != 0) {
            labels[v] = next;
            extend(next + 1, below, labels, out)?;
            labels[v] = 0;
        }
    }
    Ok(())
}

/// Labels of the elements `p_1, ..., p_m` in order (position-sequence form).
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Labelling {
    labels: Vec<usize>,
}

impl Labelling {
    pub fn new(labels: Vec<usize>) -> Self {
        Labelling { labels }
    }

    pub fn labels(&self) -> &[usize] {
        &self.labels
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    /// Element carrying each label: `order()[j]` is the element labelled `j+1`.
    pub fn order(&self) -> Vec<usize> {
        let mut out = vec![0; self.labels.len()];
        for (i, &x) in self.labels.iter().enumerate() {
            out[x - 1] = i;
        }
        out
    }

    /// Exchange labels `t` and `t+1`.
    pub fn swap_labels(&self, t: usize) -> Labelling {
        let labels = self
            .labels
            .iter()
            .map(|&x| if x == t { t + 1 } else if x == t + 1 { t } else { x })
            .collect();
        Labelling { labels }
    }
}

impl fmt::Display for Labelling {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.labels.iter().map(|x| x.to_string()).collect();
        f.write_str(&s.join(" "))
    }
}

/// The fence `F(alpha)` or its dual `F*(alpha)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Fence {
    composition: Composition,
    dualized: bool,
}

impl Fence {
    pub fn new(composition: Composition, dualized: bool) -> Self {
        Fence { composition, dualized }
    }

    pub fn composition(&self) -> &Composition {
        &self.composition
    }

    pub fn dualized(&self) -> bool {
        self.dualized
    }

    pub fn size(&self) -> usize {
        self.composition.total() + 1
    }

    /// Relation between `p_i` and `p_{i+1}` for each `i`.
    pub fn relations(&self) -> Vec<Relation> {
        let first = if self.dualized { Move::Right } else { Move::Up };
        self.composition
            .moves(first)
            .into_iter()
            .map(|m| if m == Move::Up { Relation::Less } else { Relation::Greater })
            .collect()
    }

    pub fn poset(&self) -> Poset {
        let covers = self
            .relations()
            .into_iter()
            .enumerate()
            .map(|(i, r)| if r == Relation::Less { (i, i + 1) } else { (i + 1, i) })
            .collect();
        Poset::new(self.size(), covers)
    }

    pub fn linear_extensions(&self) -> Result<Vec<Labelling>> {
        self.poset().linear_extensions()
    }
}

/// Fence whose elements are the cells of the snake in sequential order.
pub fn fence_of_snake(s: &Lpm) -> Result<Fence> {
    let (alpha, starred) = snake_composition(s)?;
    Ok(Fence::new(alpha, starred))
}

/// The cells of a snake ordered bottom to top in columns and right to left in rows.
pub fn snake_cell_poset(s: &Lpm) -> Result<Poset> {
    if !s.is_snake() {
        return Err(Error::NotASnake);
    }
    let cells = s.cells();
    let mut covers = Vec::new();
    for (i, a) in cells.iter().enumerate() {
        for (j, b) in cells.iter().enumerate().skip(i + 1) {
            if a.col == b.col {
                covers.push(if a.row < b.row { (i, j) } else { (j, i) });
            } else if a.row == b.row {
                covers.push(if a.col > b.col { (i, j) } else { (j, i) });
            }
        }
    }
    Ok(Poset::new(cells.len(), covers))
}

/// Standard labellings of the cells of a snake, in position-sequence form.
pub fn labellings_of_snake(s: &Lpm) -> Result<Vec<Labelling>> {
    snake_cell_poset(s)?.linear_extensions()
}

/// Linear extensions joined when they differ by exchanging two consecutive labels.
#[derive(Clone, Debug)]
pub struct LinearExtensionGraph {
    pub extensions: Vec<Labelling>,
    pub graph: Graph,
}

impl LinearExtensionGraph {
    pub fn to_dot(&self) -> String {
        self.graph.to_dot("extensions", |v| self.extensions[v].to_string())
    }
}

pub fn linear_extension_graph(poset: &Poset) -> Result<LinearExtensionGraph> {
    let extensions = poset.linear_extensions()?;
    let index: HashMap<&Labelling, usize> =
        extensions.iter().enumerate().map(|(i, l)| (l, i)).collect();
    let mut edges = Vec::new();
    for (i, l) in extensions.iter().enumerate() {
        for t in 1..poset.size() {
            if let Some(&j) = index.get(&l.swap_labels(t)) {
                edges.push((i, j));
            }
        }
    }
    let graph = Graph::new(extensions.len(), edges);
    Ok(LinearExtensionGraph { extensions, graph })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lpm::snake_from_composition;

    fn comp(p: &[usize]) -> Composition {
        Composition::new(p.to_vec()).unwrap()
    }

    #[test]
    fn fence_relations() {
        let f = Fence::new(comp(&[2, 1, 1]), false);
        assert_eq!(f.size(), 5);
        use Relation::*;
        assert_eq!(f.relations(), vec![Less, Less, Greater, Less]);
        let d = Fence::new(comp(&[2, 1, 1]), true);
        assert_eq!(d.relations(), vec![Greater, Greater, Less, Greater]);
    }

    #[test]
    fn zigzag_counts() {
        // alternating fences are counted by Euler zigzag numbers
        let zigzag = [1usize, 1, 2, 5, 16, 61];
        for m in 1..6 {
            let f = Fence::new(comp(&vec![1; m]), false);
            assert_eq!(f.linear_extensions().unwrap().len(), zigzag[m]);
        }
    }

    #[test]
    fn chain_has_one_extension() {
        let f = Fence::new(comp(&[4]), false);
        assert_eq!(f.linear_extensions().unwrap(), vec![Labelling::new(vec![1, 2, 3, 4, 5])]);
    }

    #[test]
    fn labelling_of_11112_snake() {
        let s = snake_from_composition(&comp(&[1, 1, 1, 1, 2]), false);
        let ls = labellings_of_snake(&s).unwrap();
        let target = Labelling::new(vec![1, 7, 3, 5, 2, 4, 6]);
        assert!(ls.contains(&target));
        // p1 < p5 < p3 < p6 < p4 < p7 < p2
        assert_eq!(target.order(), vec![0, 4, 2, 5, 3, 6, 1]);
    }

    #[test]
    fn snake_cell_order_is_the_fence() {
        for (p, st) in [(&[1, 1, 1, 1, 2][..], false), (&[2, 3][..], true), (&[1][..], true)] {
            let s = snake_from_composition(&comp(p), st);
            assert_eq!(
                labellings_of_snake(&s).unwrap(),
                fence_of_snake(&s).unwrap().linear_extensions().unwrap()
            );
        }
    }

    #[test]
    fn size_guard() {
        let f = Fence::new(comp(&[1; 20]), false);
        assert_eq!(f.linear_extensions(), Err(Error::SizeGuard { limit: MAX_POSET_SIZE }));
    }

    #[test]
    fn extension_graph_of_small_fence() {
        // F(1,1): p1 < p2 > p3, extensions 132 and 231 differ by swapping 1 and 2
        let g = linear_extension_graph(&Fence::new(comp(&[1, 1]), false).poset()).unwrap();
        assert_eq!(g.extensions, vec![Labelling::new(vec![1, 3, 2]), Labelling::new(vec![2, 3, 1])]);
        assert_eq!(g.graph.edges(), &[(0, 1)]);
        assert!(g.to_dot().contains("0 -- 1"));
    }
}
