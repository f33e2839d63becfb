//! Simple undirected graphs: construction, distances, powers, strong products
//! and complements.
//!
//! Adjacency is kept twice, as bitset rows (for the independence-number
//! search and set algebra) and as a sorted edge list (for serialization and
//! SDP export). Both views are immutable once the graph is built.

mod catalog;
mod graph6;

use std::collections::VecDeque;

pub use catalog::{catalog, catalog_from_spec, CATALOG_NAMES};
pub use graph6::{emit_graph6, parse_graph6, read_graph6_file};

use crate::bitset::Bitset;
use crate::error::{Error, Result};
use crate::matrix::DenseMatrix;

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Graph {
    n: usize,
    rows: Vec<Bitset>,
    edges: Vec<(usize, usize)>,
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Self {
        Graph { n, rows: vec![Bitset::new(n); n], edges: Vec::new() }
    }

    /// Builds a graph from an edge list. Duplicate edges (in either
    /// orientation) are merged; loops and out-of-range endpoints are rejected.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut rows = vec![Bitset::new(n); n];
        for (u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::arg(format!("edge ({u},{v}) out of range for n={n}")));
            }
            if u == v {
                return Err(Error::arg(format!("loop at vertex {u}")));
            }
            rows[u].insert(v);
            rows[v].insert(u);
        }
        Ok(Graph::from_rows(rows))
    }

    fn from_rows(rows: Vec<Bitset>) -> Self {
        let n = rows.len();
        let edges = rows
            .iter()
            .enumerate()
            .flat_map(|(u, r)| r.iter().filter(move |&v| v > u).map(move |v| (u, v)))
            .collect();
        Graph { n, rows, edges }
    }

    /// Builds from a symmetric adjacency predicate evaluated on `u < v`.
    pub fn from_fn(n: usize, mut adjacent: impl FnMut(usize, usize) -> bool) -> Self {
        let mut rows = vec![Bitset::new(n); n];
        for u in 0..n {
            for v in u + 1..n {
                if adjacent(u, v) {
                    rows[u].insert(v);
                    rows[v].insert(u);
                }
            }
        }
        Graph::from_rows(rows)
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    /// Edges as `(u, v)` with `u < v`, sorted lexicographically.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> &Bitset {
        &self.rows[v]
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.rows[u].contains(v)
    }

    pub fn degree(&self, v: usize) -> usize {
        self.rows[v].count()
    }

    pub fn degrees(&self) -> Vec<usize> {
        (0..self.n).map(|v| self.degree(v)).collect()
    }

    /// Common degree if the graph is regular.
    pub fn regular_degree(&self) -> Option<usize> {
        let mut degs = self.rows.iter().map(Bitset::count);
        let first = degs.next().unwrap_or(0);
        degs.all(|d| d == first).then_some(first)
    }

    pub fn is_connected(&self) -> bool {
        self.n == 0 || self.bfs(0).iter().all(|&d| d != UNREACHABLE)
    }

    fn bfs(&self, src: usize) -> Vec<u32> {
        let mut dist = vec![UNREACHABLE; self.n];
        let mut queue = VecDeque::new();
        dist[src] = 0;
        queue.push_back(src);
        while let Some(u) = queue.pop_front() {
            for v in self.rows[u].iter() {
                if dist[v] == UNREACHABLE {
                    dist[v] = dist[u] + 1;
                    queue.push_back(v);
                }
            }
        }
        dist
    }

    pub fn adjacency_matrix(&self) -> DenseMatrix {
        let mut a = DenseMatrix::zeros(self.n);
        for &(u, v) in &self.edges {
            a[(u, v)] = 1.0;
            a[(v, u)] = 1.0;
        }
        a
    }

    /// Is `set` independent (pairwise non-adjacent, no repeats)?
    pub fn is_independent(&self, set: &[usize]) -> bool {
        let mut seen = Bitset::new(self.n);
        for &v in set {
            if v >= self.n || seen.contains(v) || self.rows[v].intersection_count(&seen) > 0 {
                return false;
            }
            seen.insert(v);
        }
        true
    }

    /// Parameters `(n, k, a, c)` if the graph is strongly regular.
    ///
    /// Complete and edgeless graphs are not counted as strongly regular.
    pub fn strongly_regular_parameters(&self) -> Option<(usize, usize, usize, usize)> {
        let k = self.regular_degree()?;
        if k == 0 || k + 1 == self.n {
            return None;
        }
        let (mut a, mut c) = (None, None);
        for u in 0..self.n {
            for v in u + 1..self.n {
                let common = self.rows[u].intersection_count(&self.rows[v]);
                let slot = if self.has_edge(u, v) { &mut a } else { &mut c };
                match *slot {
                    None => *slot = Some(common),
                    Some(x) if x != common => return None,
                    _ => {}
                }
            }
        }
        Some((self.n, k, a?, c?))
    }
}

/// Distance value for vertex pairs in different components.
pub const UNREACHABLE: u32 = u32::MAX;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DistanceMatrix {
    n: usize,
    dist: Vec<u32>,
}

impl DistanceMatrix {
    #[inline]
    pub fn get(&self, u: usize, v: usize) -> u32 {
        self.dist[u * self.n + v]
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Largest finite distance (0 for graphs without edges).
    pub fn diameter(&self) -> u32 {
        self.dist.iter().copied().filter(|&d| d != UNREACHABLE).max().unwrap_or(0)
    }

    pub fn is_connected(&self) -> bool {
        self.dist.iter().all(|&d| d != UNREACHABLE)
    }
}

/// BFS from every vertex.
pub fn all_pairs_distances(g: &Graph) -> DistanceMatrix {
    let n = g.n();
    let mut dist = Vec::with_capacity(n * n);
    for s in 0..n {
        dist.extend(g.bfs(s));
    }
    DistanceMatrix { n, dist }
}

/// The k-th power: `u ~ v` iff `0 < dist(u, v) <= k`.
pub fn power(g: &Graph, k: usize) -> Result<Graph> {
    if k == 0 {
        return Err(Error::arg("graph power requires k >= 1"));
    }
    if k == 1 {
        return Ok(g.clone());
    }
    let d = all_pairs_distances(g);
    let k = u32::try_from(k).unwrap_or(u32::MAX - 1);
    Ok(Graph::from_fn(g.n(), |u, v| d.get(u, v) <= k))
}

/// Strong product; vertex `(u, v)` is numbered `u * h.n() + v`.
pub fn strong_product(g: &Graph, h: &Graph) -> Graph {
    let hn = h.n();
    let close_g = |a: usize, b: usize| a == b || g.has_edge(a, b);
    let close_h = |a: usize, b: usize| a == b || h.has_edge(a, b);
    Graph::from_fn(g.n() * hn, |x, y| {
        let (u1, v1) = (x / hn, x % hn);
        let (u2, v2) = (y / hn, y % hn);
        close_g(u1, u2) && close_h(v1, v2)
    })
}

pub fn complement(g: &Graph) -> Graph {
    Graph::from_fn(g.n(), |u, v| !g.has_edge(u, v))
}
