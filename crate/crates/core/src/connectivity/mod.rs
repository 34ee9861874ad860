//! Connectivity predicates and separation witnesses.
//!
//! A separation is stored by its cut `S` and two nonempty, mutually
//! non-adjacent sides covering `V \ S`. Edges with an end in a side belong to
//! that side; edges inside `S` are distributed by `edge_assignment`.

mod menger;

use std::fmt;

use crate::bits::{bit, for_each_subset_of_size, Bits};
use crate::graph::{Edge, Graph};

use menger::FlowNet;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Side {
    A,
    B,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Separation {
    pub cut: u64,
    pub side_a: u64,
    pub side_b: u64,
    /// Placement of the edges with both ends in the cut. Empty means unresolved.
    pub edge_assignment: Vec<(Edge, Side)>,
}

impl Separation {
    pub fn order(&self) -> usize {
        self.cut.count_ones() as usize
    }

    /// Checks the separation invariants against `g`.
    pub fn validate(&self, g: &Graph) -> Result<(), String> {
        let all = g.vertex_mask();
        if self.side_a == 0 || self.side_b == 0 {
            return Err("a side is empty".into());
        }
        if self.cut & self.side_a != 0 || self.cut & self.side_b != 0 || self.side_a & self.side_b != 0 {
            return Err("cut and sides overlap".into());
        }
        if self.cut | self.side_a | self.side_b != all {
            return Err("cut and sides do not cover the vertex set".into());
        }
        if g.set_neighbors(self.side_a) & self.side_b != 0 {
            return Err("an edge joins the two sides".into());
        }
        for (e, _) in &self.edge_assignment {
            if !g.has_edge(e.u, e.v) || self.cut & bit(e.u) == 0 || self.cut & bit(e.v) == 0 {
                return Err(format!("assigned edge {e} is not an edge inside the cut"));
            }
        }
        Ok(())
    }

    /// Edge counts of the two sides `(‖G₁‖, ‖G₂‖)` under the current assignment.
    pub fn edge_counts(&self, g: &Graph) -> (usize, usize) {
        let inner = g.edges_within(self.cut);
        let a = g.edges_within(self.side_a | self.cut) - inner;
        let b = g.edges_within(self.side_b | self.cut) - inner;
        let to_a = self.edge_assignment.iter().filter(|(_, s)| *s == Side::A).count();
        let to_b = self.edge_assignment.len() - to_a;
        (a + to_a, b + to_b)
    }

    /// Vertex counts of the two sides, cut included.
    pub fn vertex_counts(&self) -> (usize, usize) {
        let k = self.order();
        (self.side_a.count_ones() as usize + k, self.side_b.count_ones() as usize + k)
    }

    /// Among all placements of the cut-internal edges, the one maximizing the
    /// smaller side's edge count. Returns that count and stores the placement.
    pub fn resolve_max_min_edges(&mut self, g: &Graph) -> usize {
        let inner: Vec<Edge> = g.induced_edges(self.cut);
        let mut best = (0usize, 0u32);
        let mut best_min = None;
        for mask in 0u32..(1 << inner.len()) {
            self.edge_assignment = inner
                .iter()
                .enumerate()
                .map(|(i, &e)| (e, if mask >> i & 1 == 0 { Side::A } else { Side::B }))
                .collect();
            let (a, b) = self.edge_counts(g);
            if best_min.is_none_or(|m| a.min(b) > m) {
                best_min = Some(a.min(b));
                best = (a.min(b), mask);
            }
        }
        self.edge_assignment = inner
            .iter()
            .enumerate()
            .map(|(i, &e)| (e, if best.1 >> i & 1 == 0 { Side::A } else { Side::B }))
            .collect();
        best.0
    }
}

fn fmt_set(f: &mut fmt::Formatter<'_>, set: u64) -> fmt::Result {
    let items: Vec<String> = Bits(set).map(|v| v.to_string()).collect();
    write!(f, "{{{}}}", items.join(","))
}

impl fmt::Display for Separation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "cut ")?;
        fmt_set(f, self.cut)?;
        write!(f, " sideA ")?;
        fmt_set(f, self.side_a)?;
        write!(f, " sideB ")?;
        fmt_set(f, self.side_b)
    }
}

impl Graph {
    /// Edges with both ends in `set`, lexicographic.
    pub fn induced_edges(&self, set: u64) -> Vec<Edge> {
        self.edges().into_iter().filter(|e| set & bit(e.u) != 0 && set & bit(e.v) != 0).collect()
    }
}

fn separation_from_cut(g: &Graph, cut: u64, seed: usize) -> Separation {
    let side_a = g.reach(bit(seed), cut);
    let side_b = g.vertex_mask() & !cut & !side_a;
    Separation { cut, side_a, side_b, edge_assignment: Vec::new() }
}

/// A separation of order below `k`, if one exists, found by max-flow.
///
/// Complete graphs have no separations at all and return `None` for every `k`.
pub fn find_separation_below(g: &Graph, k: usize) -> Option<Separation> {
    let n = g.order();
    if n == 0 || k == 0 {
        return None;
    }
    if n >= 2 && !g.is_connected() {
        let first = g.components_within(g.vertex_mask())[0];
        let seed = first.trailing_zeros() as usize;
        return Some(separation_from_cut(g, 0, seed));
    }
    let mut net = FlowNet::new(g);
    // a separator of size < k misses one of the first k vertices
    for s in 0..k.min(n) {
        for t in s + 1..n {
            if g.has_edge(s, t) {
                continue;
            }
            if net.disjoint_paths(s, t, k) < k {
                let cut = net.min_cut(s);
                return Some(separation_from_cut(g, cut, s));
            }
        }
    }
    None
}

/// `|G| > k` and no separation of order below `k`.
pub fn is_k_connected(g: &Graph, k: usize) -> bool {
    assert!(k >= 1);
    g.order() > k && find_separation_below(g, k).is_none()
}

/// Reference implementation: tries every vertex set of size below `k`.
pub fn find_separation_below_brute(g: &Graph, k: usize) -> Option<Separation> {
    let all = g.vertex_mask();
    for size in 0..k {
        let mut found = None;
        for_each_subset_of_size(all, size, |cut| {
            let rest = all & !cut;
            if rest.count_ones() >= 2 {
                let seed = rest.trailing_zeros() as usize;
                let sep = separation_from_cut(g, cut, seed);
                if sep.side_b != 0 {
                    found = Some(sep);
                    return false;
                }
            }
            true
        });
        if found.is_some() {
            return found;
        }
    }
    None
}

pub fn is_k_connected_brute(g: &Graph, k: usize) -> bool {
    assert!(k >= 1);
    g.order() > k && find_separation_below_brute(g, k).is_none()
}

/// Every 3-separation: one entry per (cut, grouping of the components of
/// `G - S` into two nonempty sides). Assignments are left unresolved.
/// Ordered by cut (colex), then by grouping.
pub fn enumerate_3_separations(g: &Graph) -> Vec<Separation> {
    let mut out = Vec::new();
    for_each_three_cut(g, |cut, comps| {
        for_each_grouping(comps, |a, b| {
            out.push(Separation { cut, side_a: a, side_b: b, edge_assignment: Vec::new() });
            true
        });
        true
    });
    out
}

fn for_each_three_cut(g: &Graph, mut f: impl FnMut(u64, &[u64]) -> bool) {
    let all = g.vertex_mask();
    for_each_subset_of_size(all, 3, |cut| {
        let comps = g.components_within(all & !cut);
        if comps.len() >= 2 {
            return f(cut, &comps);
        }
        true
    });
}

/// Groupings of components into two sides; the first component always goes to side A.
fn for_each_grouping(comps: &[u64], mut f: impl FnMut(u64, u64) -> bool) -> bool {
    let c = comps.len();
    for m in 0u64..(1 << (c - 1)) - 1 {
        let mut a = comps[0];
        let mut b = 0;
        for (i, &comp) in comps.iter().enumerate().skip(1) {
            if m >> (i - 1) & 1 == 1 {
                a |= comp;
            } else {
                b |= comp;
            }
        }
        if !f(a, b) {
            return false;
        }
    }
    true
}

/// A 3-separation whose sides both carry at least five edges under some
/// placement of the cut-internal edges. Assumes `g` is 3-connected.
pub fn find_weak_violation(g: &Graph) -> Option<Separation> {
    // both sides need five edges
    if g.size() < 10 {
        return None;
    }
    let mut found = None;
    for_each_three_cut(g, |cut, comps| {
        let inner = g.edges_within(cut);
        for_each_grouping(comps, |a, b| {
            let ea = g.edges_within(a | cut) - inner;
            let eb = g.edges_within(b | cut) - inner;
            let best = (0..=inner).map(|t| (ea + t).min(eb + inner - t)).max().unwrap_or(0);
            if best >= 5 {
                let mut sep = Separation { cut, side_a: a, side_b: b, edge_assignment: Vec::new() };
                sep.resolve_max_min_edges(g);
                found = Some(sep);
                return false;
            }
            true
        })
    });
    found
}

/// 3-connected and every 3-separation has a side with at most four edges.
pub fn is_weakly_4_connected(g: &Graph) -> bool {
    is_k_connected(g, 3) && find_weak_violation(g).is_none()
}

/// A 3-separation whose sides both have at least five vertices (cut included).
/// Assumes `g` is 3-connected.
pub fn find_quasi_violation(g: &Graph) -> Option<Separation> {
    let mut found = None;
    for_each_three_cut(g, |cut, comps| {
        for_each_grouping(comps, |a, b| {
            if a.count_ones() >= 2 && b.count_ones() >= 2 {
                found = Some(Separation { cut, side_a: a, side_b: b, edge_assignment: Vec::new() });
                return false;
            }
            true
        })
    });
    found
}

/// 3-connected and every 3-separation has a side with at most four vertices.
pub fn is_quasi_4_connected(g: &Graph) -> bool {
    is_k_connected(g, 3) && find_quasi_violation(g).is_none()
}

/// Cubic, at least six vertices, and the line graph is 4-connected.
///
/// # Panics
/// If the line graph would exceed the vertex bound (more than 42 cubic vertices).
pub fn is_internally_4c_cubic(q: &Graph) -> bool {
    if q.order() < 6 || !q.is_regular(3) {
        return false;
    }
    is_k_connected(&q.line_graph(), 4)
}

/// Edges `wx, xy, xz, yz` with `d(x) = 3`; stored with `y < z`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Paw {
    pub w: usize,
    pub x: usize,
    pub y: usize,
    pub z: usize,
}

impl Paw {
    pub fn edges(&self) -> [Edge; 4] {
        [
            Edge::new(self.w, self.x),
            Edge::new(self.x, self.y),
            Edge::new(self.x, self.z),
            Edge::new(self.y, self.z),
        ]
    }
}

/// All paws, sorted by `(x, w, y)`.
pub fn find_paws(g: &Graph) -> Vec<Paw> {
    let mut out = Vec::new();
    for x in 0..g.order() {
        if g.degree(x) != 3 {
            continue;
        }
        let nx = g.neighbors(x);
        for w in Bits(nx) {
            let mut rest = Bits(nx & !bit(w));
            let (y, z) = (rest.next().unwrap(), rest.next().unwrap());
            if g.has_edge(y, z) {
                out.push(Paw { w, x, y, z });
            }
        }
    }
    out
}

#[cfg(test)]
mod tests;
