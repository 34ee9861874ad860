//! Simple undirected graphs on dense vertex indices, stored as adjacency bitsets.
//!
//! Every operation returns a new value; vertex indices are always `0..n`.

use std::fmt;

use thiserror::Error;

use crate::bits::{bit, low_mask, Bits};

/// Largest supported vertex count.
pub const MAX_VERTICES: usize = 64;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("vertex count {0} exceeds the bound of {MAX_VERTICES}")]
    TooManyVertices(usize),
    #[error("endpoint {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("loop at vertex {0}")]
    Loop(usize),
    #[error("edge {0} is not in the graph")]
    MissingEdge(Edge),
    #[error("edge {0} is already in the graph")]
    EdgeExists(Edge),
}

/// An unordered vertex pair, always stored with `u < v`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Edge {
    pub u: usize,
    pub v: usize,
}

impl Edge {
    /// Normalizes the endpoint order. Panics on a loop.
    pub fn new(a: usize, b: usize) -> Self {
        assert_ne!(a, b, "an edge needs two distinct endpoints");
        if a < b {
            Edge { u: a, v: b }
        } else {
            Edge { u: b, v: a }
        }
    }

    pub fn other(self, x: usize) -> usize {
        if x == self.u {
            self.v
        } else {
            self.u
        }
    }

    pub fn touches(self, x: usize) -> bool {
        self.u == x || self.v == x
    }
}

impl fmt::Display for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}-{}", self.u, self.v)
    }
}

impl From<(usize, usize)> for Edge {
    fn from((a, b): (usize, usize)) -> Self {
        Edge::new(a, b)
    }
}

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Graph {
    adj: Vec<u64>,
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph({}; ", self.order())?;
        let edges: Vec<String> = self.edges().iter().map(|e| e.to_string()).collect();
        write!(f, "{})", edges.join(" "))
    }
}

impl Graph {
    /// Builds a graph from an edge list; duplicate pairs collapse.
    pub fn new<I, E>(n: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = E>,
        E: Into<(usize, usize)>,
    {
        let mut g = Graph::empty(n)?;
        for e in edges {
            let (a, b) = e.into();
            for x in [a, b] {
                if x >= n {
                    return Err(GraphError::VertexOutOfRange { vertex: x, n });
                }
            }
            if a == b {
                return Err(GraphError::Loop(a));
            }
            g.insert(a, b);
        }
        Ok(g)
    }

    pub fn empty(n: usize) -> Result<Self, GraphError> {
        if n > MAX_VERTICES {
            return Err(GraphError::TooManyVertices(n));
        }
        Ok(Graph { adj: vec![0; n] })
    }

    /// Builds directly from adjacency rows. Rows must be symmetric and loop free.
    pub(crate) fn from_rows(adj: Vec<u64>) -> Self {
        debug_assert!(adj.len() <= MAX_VERTICES);
        debug_assert!(adj.iter().enumerate().all(|(v, &r)| r & bit(v) == 0));
        debug_assert!(adj
            .iter()
            .enumerate()
            .all(|(v, &r)| Bits(r).all(|u| adj[u] & bit(v) != 0)));
        Graph { adj }
    }

    pub fn complete(n: usize) -> Self {
        let all = low_mask(n);
        Graph::from_rows((0..n).map(|v| all & !bit(v)).collect())
    }

    pub fn cycle(n: usize) -> Self {
        assert!(n >= 3);
        let mut g = Graph { adj: vec![0; n] };
        for i in 0..n {
            g.insert(i, (i + 1) % n);
        }
        g
    }

    pub fn complete_bipartite(a: usize, b: usize) -> Self {
        let mut g = Graph { adj: vec![0; a + b] };
        for i in 0..a {
            for j in a..a + b {
                g.insert(i, j);
            }
        }
        g
    }

    #[inline]
    pub(crate) fn insert(&mut self, a: usize, b: usize) {
        self.adj[a] |= bit(b);
        self.adj[b] |= bit(a);
    }

    #[inline]
    pub(crate) fn remove(&mut self, a: usize, b: usize) {
        self.adj[a] &= !bit(b);
        self.adj[b] &= !bit(a);
    }

    /// Number of vertices.
    #[inline]
    pub fn order(&self) -> usize {
        self.adj.len()
    }

    /// Number of edges.
    pub fn size(&self) -> usize {
        self.adj.iter().map(|r| r.count_ones() as usize).sum::<usize>() / 2
    }

    #[inline]
    pub fn vertex_mask(&self) -> u64 {
        low_mask(self.order())
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> u64 {
        self.adj[v]
    }

    /// Neighborhood of a vertex set, excluding the set itself.
    pub fn set_neighbors(&self, set: u64) -> u64 {
        Bits(set).fold(0, |acc, v| acc | self.adj[v]) & !set
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    pub fn degrees(&self) -> Vec<usize> {
        (0..self.order()).map(|v| self.degree(v)).collect()
    }

    pub fn min_degree(&self) -> usize {
        (0..self.order()).map(|v| self.degree(v)).min().unwrap_or(0)
    }

    pub fn max_degree(&self) -> usize {
        (0..self.order()).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    pub fn is_regular(&self, d: usize) -> bool {
        (0..self.order()).all(|v| self.degree(v) == d)
    }

    #[inline]
    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        a < self.order() && b < self.order() && self.adj[a] & bit(b) != 0
    }

    pub fn rows(&self) -> &[u64] {
        &self.adj
    }

    /// All edges in lexicographic order.
    pub fn edges(&self) -> Vec<Edge> {
        let mut out = Vec::with_capacity(self.size());
        for u in 0..self.order() {
            for v in Bits(self.adj[u] & !low_mask(u + 1)) {
                out.push(Edge { u, v });
            }
        }
        out
    }

    /// All non-adjacent distinct pairs in lexicographic order.
    pub fn non_edges(&self) -> Vec<Edge> {
        let n = self.order();
        let mut out = Vec::new();
        for u in 0..n {
            for v in Bits(!self.adj[u] & low_mask(n) & !low_mask(u + 1)) {
                out.push(Edge { u, v });
            }
        }
        out
    }

    /// Number of edges with both ends in `set`.
    pub fn edges_within(&self, set: u64) -> usize {
        Bits(set).map(|v| (self.adj[v] & set).count_ones() as usize).sum::<usize>() / 2
    }

    fn check_vertex(&self, v: usize) -> Result<(), GraphError> {
        if v >= self.order() {
            Err(GraphError::VertexOutOfRange { vertex: v, n: self.order() })
        } else {
            Ok(())
        }
    }

    fn check_edge(&self, e: Edge) -> Result<(), GraphError> {
        self.check_vertex(e.u)?;
        self.check_vertex(e.v)?;
        if self.has_edge(e.u, e.v) {
            Ok(())
        } else {
            Err(GraphError::MissingEdge(e))
        }
    }

    pub fn delete_edge(&self, e: Edge) -> Result<Graph, GraphError> {
        self.check_edge(e)?;
        let mut g = self.clone();
        g.remove(e.u, e.v);
        Ok(g)
    }

    pub fn add_edge(&self, a: usize, b: usize) -> Result<Graph, GraphError> {
        self.check_vertex(a)?;
        self.check_vertex(b)?;
        if a == b {
            return Err(GraphError::Loop(a));
        }
        if self.has_edge(a, b) {
            return Err(GraphError::EdgeExists(Edge::new(a, b)));
        }
        let mut g = self.clone();
        g.insert(a, b);
        Ok(g)
    }

    /// Third vertices of all triangles through `e`, ascending.
    pub fn triangles_containing(&self, e: Edge) -> Result<Vec<usize>, GraphError> {
        self.check_edge(e)?;
        Ok(Bits(self.adj[e.u] & self.adj[e.v]).collect())
    }

    /// Number of triangles through vertex `v`.
    pub fn triangles_at(&self, v: usize) -> usize {
        Bits(self.adj[v])
            .map(|u| (self.adj[u] & self.adj[v]).count_ones() as usize)
            .sum::<usize>()
            / 2
    }

    /// Removes vertex `v`; higher indices shift down by one.
    pub fn remove_vertex(&self, v: usize) -> Graph {
        let rows = (0..self.order())
            .filter(|&u| u != v)
            .map(|u| squeeze(self.adj[u], v))
            .collect();
        Graph::from_rows(rows)
    }

    /// Induced subgraph on `set`, relabeled in increasing vertex order.
    pub fn induced(&self, set: u64) -> Graph {
        let verts: Vec<usize> = Bits(set).collect();
        let rows = verts
            .iter()
            .map(|&u| {
                let r = self.adj[u] & set;
                verts
                    .iter()
                    .enumerate()
                    .filter(|(_, &w)| r & bit(w) != 0)
                    .fold(0u64, |acc, (i, _)| acc | bit(i))
            })
            .collect();
        Graph::from_rows(rows)
    }

    /// Contracts `e` and drops the parallel edges created by triangles on `e`.
    ///
    /// The merged vertex keeps index `min(u, v)`; indices above `max(u, v)` shift
    /// down by one. `removed` lists, in the input labeling, the edge `max(u,v)–z`
    /// for every triangle `u v z`.
    pub fn contract_simplify(&self, e: Edge) -> Result<(Graph, Vec<Edge>), GraphError> {
        self.check_edge(e)?;
        let (keep, drop) = (e.u, e.v);
        let removed = Bits(self.adj[keep] & self.adj[drop])
            .map(|z| Edge::new(drop, z))
            .collect();
        let mut g = self.clone();
        let merged = (g.adj[keep] | g.adj[drop]) & !bit(keep) & !bit(drop);
        for u in Bits(g.adj[drop]) {
            g.adj[u] &= !bit(drop);
        }
        g.adj[drop] = 0;
        for u in Bits(merged) {
            g.adj[u] |= bit(keep);
        }
        g.adj[keep] = merged;
        Ok((g.remove_vertex(drop), removed))
    }

    /// Line graph; vertex `i` is the `i`-th edge of [`Graph::edges`].
    pub fn line_graph(&self) -> Graph {
        let edges = self.edges();
        assert!(edges.len() <= MAX_VERTICES, "line graph exceeds the vertex bound");
        let mut l = Graph { adj: vec![0; edges.len()] };
        for i in 0..edges.len() {
            for j in i + 1..edges.len() {
                let (a, b) = (edges[i], edges[j]);
                if a.touches(b.u) || a.touches(b.v) {
                    l.insert(i, j);
                }
            }
        }
        l
    }

    /// Applies a relabeling: vertex `v` becomes `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Graph {
        let n = self.order();
        debug_assert_eq!(perm.len(), n);
        let mut rows = vec![0u64; n];
        for v in 0..n {
            rows[perm[v]] = Bits(self.adj[v]).fold(0, |acc, u| acc | bit(perm[u]));
        }
        Graph::from_rows(rows)
    }

    /// Adds an isolated vertex with index `n`.
    pub fn append_vertex(&self) -> Graph {
        let mut rows = self.adj.clone();
        rows.push(0);
        Graph::from_rows(rows)
    }

    /// Vertices reachable from `start` without entering `blocked`.
    pub fn reach(&self, start: u64, blocked: u64) -> u64 {
        let mut seen = start & !blocked;
        let mut frontier = seen;
        while frontier != 0 {
            let next = self.set_neighbors(frontier) & !seen & !blocked;
            seen |= next;
            frontier = next;
        }
        seen
    }

    /// Components of the graph restricted to `within`, each as a mask, ordered by lowest vertex.
    pub fn components_within(&self, within: u64) -> Vec<u64> {
        let mut rest = within;
        let mut out = Vec::new();
        while rest != 0 {
            let c = self.reach(rest & rest.wrapping_neg(), !within);
            out.push(c);
            rest &= !c;
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.order() <= 1 || self.components_within(self.vertex_mask()).len() == 1
    }

    pub fn is_subgraph_of(&self, other: &Graph) -> bool {
        self.order() == other.order()
            && self.adj.iter().zip(&other.adj).all(|(a, b)| a & !b == 0)
    }
}

/// Deletes bit `v` from `row`, shifting higher bits down.
#[inline]
fn squeeze(row: u64, v: usize) -> u64 {
    let low = row & low_mask(v);
    let high = if v + 1 >= 64 { 0 } else { (row >> (v + 1)) << v };
    low | high
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn wheel4() -> Graph {
        // rim 0..3, hub 4
        Graph::new(5, [(0, 1), (1, 2), (2, 3), (3, 0), (0, 4), (1, 4), (2, 4), (3, 4)]).unwrap()
    }

    #[test]
    fn make_graph_examples() {
        let k4 = Graph::new(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
        assert_eq!(k4.size(), 6);
        assert_eq!(k4, Graph::complete(4));
        let single = Graph::new(1, Vec::<(usize, usize)>::new()).unwrap();
        assert_eq!((single.order(), single.size()), (1, 0));
        let dup = Graph::new(3, [(0, 1), (1, 0), (0, 1)]).unwrap();
        assert_eq!(dup.size(), 1);
    }

    #[test]
    fn make_graph_rejects_bad_input() {
        assert_eq!(Graph::new(3, [(0, 3)]), Err(GraphError::VertexOutOfRange { vertex: 3, n: 3 }));
        assert_eq!(Graph::new(3, [(1, 1)]), Err(GraphError::Loop(1)));
        assert_eq!(Graph::empty(65), Err(GraphError::TooManyVertices(65)));
    }

    #[test]
    fn delete_edge_examples() {
        let k4 = Graph::complete(4);
        let h = k4.delete_edge(Edge::new(0, 1)).unwrap();
        assert_eq!((h.order(), h.size()), (4, 5));
        assert_eq!(h.add_edge(0, 1).unwrap(), k4);
        assert!(matches!(h.delete_edge(Edge::new(0, 1)), Err(GraphError::MissingEdge(_))));
        let k6m = Graph::complete(6).delete_edge(Edge::new(2, 5)).unwrap();
        assert_eq!(k6m.size(), 14);
    }

    #[test]
    fn contract_rim_edge_of_w4_gives_k4() {
        let (h, removed) = wheel4().contract_simplify(Edge::new(0, 1)).unwrap();
        assert_eq!(h, Graph::complete(4));
        assert_eq!(removed, vec![Edge::new(1, 4)]);
        let (h, removed) = wheel4().contract_simplify(Edge::new(0, 4)).unwrap();
        assert_eq!((h.order(), h.size()), (4, 5));
        assert_eq!(removed, vec![Edge::new(4, 1), Edge::new(4, 3)]);
    }

    #[test]
    fn contract_edge_of_k5_gives_k4() {
        let (h, removed) = Graph::complete(5).contract_simplify(Edge::new(1, 3)).unwrap();
        assert_eq!(h, Graph::complete(4));
        assert_eq!(removed.len(), 3);
    }

    #[test]
    fn contract_triangle_free_cube_edge() {
        // cube: x1..x4 = 0..3, y1..y4 = 4..7
        let cube = Graph::new(
            8,
            [(0, 1), (1, 2), (2, 3), (3, 0), (4, 5), (5, 6), (6, 7), (7, 4), (0, 4), (1, 5), (2, 6), (3, 7)],
        )
        .unwrap();
        let (h, removed) = cube.contract_simplify(Edge::new(1, 2)).unwrap();
        assert!(removed.is_empty());
        assert_eq!((h.order(), h.size()), (7, 11));
    }

    #[test]
    fn contraction_renumbers_densely() {
        // path 0-1-2-3-4, contract 1-3 is not an edge; contract 2-3 instead
        let p = Graph::new(5, [(0, 1), (1, 2), (2, 3), (3, 4)]).unwrap();
        let (h, _) = p.contract_simplify(Edge::new(2, 3)).unwrap();
        assert_eq!(h, Graph::new(4, [(0, 1), (1, 2), (2, 3)]).unwrap());
        assert!(p.contract_simplify(Edge::new(1, 3)).is_err());
    }

    #[test]
    fn line_graph_examples() {
        let p3 = Graph::new(3, [(0, 1), (1, 2)]).unwrap();
        assert_eq!(p3.line_graph(), Graph::complete(2));
        let lk33 = Graph::complete_bipartite(3, 3).line_graph();
        assert_eq!(lk33.order(), 9);
        assert!(lk33.is_regular(4));
        let lk4 = Graph::complete(4).line_graph();
        assert_eq!((lk4.order(), lk4.size()), (6, 12));
        assert!(lk4.is_regular(4));
    }

    #[test]
    fn triangles_examples() {
        assert_eq!(Graph::complete(4).triangles_containing(Edge::new(0, 1)).unwrap(), vec![2, 3]);
        assert!(Graph::cycle(5).triangles_containing(Edge::new(0, 1)).unwrap().is_empty());
        assert!(Graph::cycle(5).triangles_containing(Edge::new(0, 2)).is_err());
    }

    fn arb_graph() -> impl Strategy<Value = Graph> {
        (2usize..10).prop_flat_map(|n| {
            proptest::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| {
                let mut g = Graph::empty(n).unwrap();
                let mut k = 0;
                for v in 1..n {
                    for u in 0..v {
                        if bits[k] {
                            g.insert(u, v);
                        }
                        k += 1;
                    }
                }
                g
            })
        })
    }

    proptest! {
        #[test]
        fn contraction_counts(g in arb_graph()) {
            for e in g.edges() {
                let t = g.triangles_containing(e).unwrap().len();
                let (h, removed) = g.contract_simplify(e).unwrap();
                prop_assert_eq!(h.order(), g.order() - 1);
                prop_assert_eq!(h.size(), g.size() - 1 - t);
                prop_assert_eq!(removed.len(), t);
            }
        }

        #[test]
        fn delete_add_inverse(g in arb_graph()) {
            for e in g.edges() {
                prop_assert_eq!(g.delete_edge(e).unwrap().add_edge(e.u, e.v).unwrap(), g.clone());
            }
            for e in g.non_edges() {
                prop_assert_eq!(g.add_edge(e.u, e.v).unwrap().delete_edge(e).unwrap(), g.clone());
            }
        }

        #[test]
        fn line_graph_of_regular(d in 1usize..4, half in 3usize..6) {
            // circulant graphs with offsets 1..=d/2 (+ antipodal if d odd) are d-regular
            let n = 2 * half;
            let mut g = Graph::empty(n).unwrap();
            for i in 0..n {
                for o in 1..=d / 2 {
                    g.insert(i, (i + o) % n);
                }
                if d % 2 == 1 {
                    g.insert(i, (i + half) % n);
                }
            }
            prop_assume!(g.is_regular(d));
            prop_assert!(g.line_graph().is_regular(2 * d - 2));
        }
    }
}
