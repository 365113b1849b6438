//! The triangulation of an LPM polytope by snakes and labellings, its dual graph,
//! the orientation away from a base simplex, and shellings.

use std::cmp::Reverse;
use std::collections::{BinaryHeap, HashMap};
use std::fmt::Write;

use rand::Rng;

use crate::error::{Error, Result};
use crate::fence::{labellings_of_snake, snake_cell_poset, Labelling, MAX_EXTENSIONS};
use crate::graph::Graph;
use crate::lpm::{snakes_inside, Cell, LatticePath, Lpm, Step};
use crate::polytope::dimension;

/// Largest dual graph we build.
pub const MAX_NODES: usize = MAX_EXTENSIONS;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Simplex {
    /// index into [`DualGraph::snakes`]
    pub snake: usize,
    pub labelling: Labelling,
    /// vertices `B_1, ..., B_n` in flip order
    pub vertices: Vec<LatticePath>,
}

/// Vertices of the simplex of a labelled snake: start at the lower path and flip the
/// corner at the cell labelled `j` at step `j`.
pub fn simplex_of_labelling(s: &Lpm, labelling: &Labelling) -> Result<Vec<LatticePath>> {
    let poset = snake_cell_poset(s)?;
    if !poset.is_extension(labelling) {
        return Err(Error::InvalidLabelling(format!(
            "{labelling} is not a standard labelling of a snake with {} cells",
            poset.size()
        )));
    }
    let cells = s.cells();
    let order = labelling.order();
    let mut current = s.lower().clone();
    let mut out = Vec::with_capacity(s.n());
    out.push(current.clone());
    for &idx in &order {
        let Cell { col, row } = cells[idx];
        let e = col + row + 1;
        if current.step(e) != Step::E || current.step(e + 1) != Step::N {
            return Err(Error::Consistency(format!("no corner to flip at cell ({col},{row})")));
        }
        current = current.swapped(e);
        out.push(current.clone());
    }
    Ok(out)
}

#[derive(Clone, Debug)]
pub struct DualGraph {
    pub lpm: Lpm,
    pub snakes: Vec<Lpm>,
    pub nodes: Vec<Simplex>,
    pub graph: Graph,
    /// bases of the matroid; vertex ids index into this list
    pub bases: Vec<LatticePath>,
    /// sorted vertex ids of each node
    pub vertex_ids: Vec<Vec<usize>>,
}

impl DualGraph {
    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    /// Node whose vertex set equals `vertices`.
    pub fn find_simplex(&self, vertices: &[LatticePath]) -> Option<usize> {
        let index: HashMap<&LatticePath, usize> =
            self.bases.iter().enumerate().map(|(i, b)| (b, i)).collect();
        let mut ids = vertices.iter().map(|v| index.get(v).copied()).collect::<Option<Vec<_>>>()?;
        ids.sort_unstable();
        self.vertex_ids.iter().position(|v| *v == ids)
    }

    pub fn shared_vertices(&self, a: usize, b: usize) -> Vec<usize> {
        intersect(&self.vertex_ids[a], &self.vertex_ids[b])
    }

    pub fn to_dot(&self) -> String {
        self.graph.to_dot("dual", |v| {
            let s = &self.nodes[v];
            format!("(snake {}, {})", s.snake, s.labelling)
        })
    }
}

fn intersect(a: &[usize], b: &[usize]) -> Vec<usize> {
    let (mut i, mut j) = (0, 0);
    let mut out = Vec::new();
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => {
                out.push(a[i]);
                i += 1;
                j += 1;
            }
        }
    }
    out
}

fn is_subset(a: &[usize], b: &[usize]) -> bool {
    intersect(a, b).len() == a.len()
}

/// Dual graph of the snake triangulation: simplices joined when they share a facet.
pub fn dual_graph(m: &Lpm) -> Result<DualGraph> {
    let snakes = snakes_inside(m)?;
    let bases = m.bases();
    let index: HashMap<&LatticePath, usize> = bases.iter().enumerate().map(|(i, b)| (b, i)).collect();
    let mut nodes = Vec::new();
    let mut vertex_ids = Vec::new();
    for (si, s) in snakes.iter().enumerate() {
        for labelling in labellings_of_snake(s)? {
            if nodes.len() >= MAX_NODES {
                return Err(Error::SizeGuard { limit: MAX_NODES });
            }
            let vertices = simplex_of_labelling(s, &labelling)?;
            let mut ids = vertices
                .iter()
                .map(|v| {
                    index.get(v).copied().ok_or_else(|| {
                        Error::Consistency(format!("simplex vertex {v} is not a basis"))
                    })
                })
                .collect::<Result<Vec<_>>>()?;
            ids.sort_unstable();
            vertex_ids.push(ids);
            nodes.push(Simplex { snake: si, labelling, vertices });
        }
    }
    // two simplices are adjacent exactly when they share n-1 vertices
    let mut facets: HashMap<Vec<usize>, Vec<usize>> = HashMap::new();
    for (v, ids) in vertex_ids.iter().enumerate() {
        for skip in 0..ids.len() {
            let mut facet = ids.clone();
            facet.remove(skip);
            facets.entry(facet).or_default().push(v);
        }
    }
    let mut edges = Vec::new();
    for (facet, owners) in &facets {
        match owners.as_slice() {
            [_] => {}
            [a, b] => edges.push((*a, *b)),
            _ => {
                return Err(Error::Consistency(format!(
                    "facet {facet:?} is shared by {} simplices",
                    owners.len()
                )))
            }
        }
    }
    let graph = Graph::new(nodes.len(), edges);
    Ok(DualGraph { lpm: m.clone(), snakes, nodes, graph, bases, vertex_ids })
}

/// Adjacency from the labellings alone: exchanging consecutive labels inside a snake,
/// or moving the cell labelled 1 one step up and one step left into a new snake.
pub fn combinatorial_edges(g: &DualGraph) -> Vec<(usize, usize)> {
    let mut by_label: HashMap<(usize, &Labelling), usize> = HashMap::new();
    for (v, s) in g.nodes.iter().enumerate() {
        by_label.insert((s.snake, &s.labelling), v);
    }
    let snake_cells: Vec<Vec<Cell>> = g.snakes.iter().map(Lpm::cells).collect();
    let mut by_cells: HashMap<&[Cell], usize> = HashMap::new();
    for (i, cells) in snake_cells.iter().enumerate() {
        by_cells.insert(cells.as_slice(), i);
    }
    let mut edges = Vec::new();
    for (v, s) in g.nodes.iter().enumerate() {
        let m = s.labelling.len();
        for t in 1..m {
            if let Some(&w) = by_label.get(&(s.snake, &s.labelling.swap_labels(t))) {
                edges.push((v, w));
            }
        }
        let cells = &snake_cells[s.snake];
        let Some(first) = s.labelling.labels().iter().position(|&x| x == 1) else { continue };
        let Cell { col, row } = cells[first];
        if col == 0 {
            continue;
        }
        let moved = Cell::new(col - 1, row + 1);
        let mut relabelled: Vec<(Cell, usize)> = cells
            .iter()
            .zip(s.labelling.labels())
            .filter(|(c, _)| **c != cells[first])
            .map(|(c, &x)| (*c, x - 1))
            .collect();
        relabelled.push((moved, m));
        relabelled.sort_by_key(|(c, _)| c.sequence_key());
        let new_cells: Vec<Cell> = relabelled.iter().map(|(c, _)| *c).collect();
        if let Some(&target) = by_cells.get(new_cells.as_slice()) {
            let labels = Labelling::new(relabelled.iter().map(|(_, x)| *x).collect());
            if let Some(&w) = by_label.get(&(target, &labels)) {
                edges.push((v, w));
            }
        }
    }
    Graph::new(g.len(), edges).edges().to_vec()
}

/// Node with the lexicographically smallest sorted vertex list.
pub fn default_base(g: &DualGraph) -> usize {
    (0..g.len())
        .min_by_key(|&v| {
            let mut vs = g.nodes[v].vertices.clone();
            vs.sort();
            vs
        })
        .expect("dual graph has at least one node")
}

/// Arcs of the dual graph pointing away from a base simplex.
#[derive(Clone, Debug)]
pub struct Orientation<'g> {
    pub graph: &'g DualGraph,
    pub base: usize,
    pub distance: Vec<usize>,
    pub arcs: Vec<(usize, usize)>,
    pub in_degree: Vec<usize>,
}

impl Orientation<'_> {
    pub fn to_dot(&self) -> String {
        let mut out = String::from("digraph orientation {\n");
        for (v, s) in self.graph.nodes.iter().enumerate() {
            let _ = writeln!(out, "  {v} [label=\"(snake {}, {})\"];", s.snake, s.labelling);
        }
        for &(a, b) in &self.arcs {
            let _ = writeln!(out, "  {a} -> {b};");
        }
        out.push_str("}\n");
        out
    }
}

pub fn orient_away(g: &DualGraph, base: usize) -> Result<Orientation<'_>> {
    if base >= g.len() {
        return Err(Error::NodeNotFound(base));
    }
    let distance = g
        .graph
        .distances(base)
        .into_iter()
        .collect::<Option<Vec<_>>>()
        .ok_or_else(|| Error::Consistency("dual graph is disconnected".into()))?;
    let mut arcs = Vec::with_capacity(g.graph.edges().len());
    let mut in_degree = vec![0; g.len()];
    for &(a, b) in g.graph.edges() {
        let (from, to) = match distance[a].cmp(&distance[b]) {
            std::cmp::Ordering::Less => (a, b),
            std::cmp::Ordering::Greater => (b, a),
            std::cmp::Ordering::Equal => {
                return Err(Error::Consistency("dual graph is not bipartite".into()))
            }
        };
        arcs.push((from, to));
        in_degree[to] += 1;
    }
    Ok(Orientation { graph: g, base, distance, arcs, in_degree })
}

/// Orientation where an arc crosses each shared facet away from the side of the base.
pub fn separating_orientation(g: &DualGraph, base: usize) -> Result<Vec<(usize, usize)>> {
    if base >= g.len() {
        return Err(Error::NodeNotFound(base));
    }
    let heights: Vec<Vec<usize>> = g.bases.iter().map(LatticePath::heights).collect();
    let n = g.lpm.n();
    let diff = |v: usize, p: usize, q: usize| heights[v][q] as i64 - heights[v][p] as i64;
    let mut arcs = Vec::new();
    for &(a, b) in g.graph.edges() {
        let shared = g.shared_vertices(a, b);
        let mut planes = Vec::new();
        // y_q - y_p with q = n duplicates y_p on the hull, since y_n = k
        for p in 0..n {
            for q in p + 1..n {
                let c = diff(shared[0], p, q);
                if shared.iter().all(|&v| diff(v, p, q) == c) {
                    planes.push((p, q, c));
                }
            }
        }
        let [(p, q, c)] = planes[..] else {
            return Err(Error::Consistency(format!(
                "shared facet of {a} and {b} spans {} arrangement hyperplanes",
                planes.len()
            )));
        };
        let side = |v: usize| -> Option<std::cmp::Ordering> {
            g.vertex_ids[v].iter().map(|&x| diff(x, p, q).cmp(&c)).find(|o| o.is_ne())
        };
        let base_side = side(base).ok_or_else(|| Error::Consistency("base lies in a facet plane".into()))?;
        if side(a) == Some(base_side) {
            arcs.push((a, b));
        } else {
            arcs.push((b, a));
        }
    }
    arcs.sort_unstable();
    Ok(arcs)
}

/// Topological order of the orientation, smallest available node first.
pub fn shelling_order(o: &Orientation) -> Vec<usize> {
    topological(o, |avail| {
        let Reverse(v) = avail.pop().unwrap();
        v
    })
}

/// Uniformly chosen available node at each step of a topological sort.
pub fn random_shelling_order(o: &Orientation, rng: &mut impl Rng) -> Vec<usize> {
    let mut pool: Vec<usize> = Vec::new();
    topological(o, |avail| {
        pool.extend(avail.drain().map(|Reverse(v)| v));
        let v = pool.swap_remove(rng.gen_range(0..pool.len()));
        avail.extend(pool.drain(..).map(Reverse));
        v
    })
}

fn topological(
    o: &Orientation,
    mut pick: impl FnMut(&mut BinaryHeap<Reverse<usize>>) -> usize,
) -> Vec<usize> {
    let n = o.graph.len();
    let mut out_arcs = vec![Vec::new(); n];
    for &(a, b) in &o.arcs {
        out_arcs[a].push(b);
    }
    let mut remaining = o.in_degree.clone();
    let mut avail: BinaryHeap<Reverse<usize>> =
        (0..n).filter(|&v| remaining[v] == 0).map(Reverse).collect();
    let mut order = Vec::with_capacity(n);
    while !avail.is_empty() {
        let v = pick(&mut avail);
        order.push(v);
        for &w in &out_arcs[v] {
            remaining[w] -= 1;
            if remaining[w] == 0 {
                avail.push(Reverse(w));
            }
        }
    }
    order
}

/// Each simplex meets the union of its predecessors in a union of its facets.
pub fn verify_shelling(g: &DualGraph, order: &[usize]) -> bool {
    let mut seen = vec![false; g.len()];
    if order.len() != g.len() || order.iter().any(|&v| v >= g.len() || std::mem::replace(&mut seen[v], true)) {
        return false;
    }
    let facet_size = g.lpm.n() - 1;
    for (i, &v) in order.iter().enumerate().skip(1) {
        let meets: Vec<Vec<usize>> = order[..i]
            .iter()
            .map(|&u| g.shared_vertices(v, u))
            .filter(|s| !s.is_empty())
            .collect();
        let facets: Vec<&Vec<usize>> = meets.iter().filter(|s| s.len() == facet_size).collect();
        if facets.is_empty() {
            return false;
        }
        if !meets.iter().all(|s| facets.iter().any(|f| is_subset(s, f))) {
            return false;
        }
    }
    true
}

/// Normalized volume as the total number of labellings over all snakes.
pub fn volume_by_snakes(m: &Lpm) -> Result<u64> {
    let mut total = 0u64;
    for s in snakes_inside(m)? {
        total += labellings_of_snake(&s)?.len() as u64;
    }
    Ok(total)
}

/// h* read off an orientation: entry `k` counts simplices with `k` incoming arcs.
pub fn hstar_from_orientation(o: &Orientation) -> Vec<u64> {
    let mut h = vec![0u64; dimension(&o.graph.lpm) + 1];
    for &d in &o.in_degree {
        if d >= h.len() {
            h.resize(d + 1, 0);
        }
        h[d] += 1;
    }
    h
}
