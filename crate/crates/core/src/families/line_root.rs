//! Cubic roots of 4-regular line graphs.

use crate::bits::{bit, Bits};
use crate::graph::Graph;

/// A cubic `Q` whose line graph is isomorphic to `g`, if one exists.
///
/// Found as a partition of `E(g)` into triangles (one per root vertex); every
/// vertex of `g` then lies in exactly two of them, which become its ends.
/// Roots with fewer than six vertices (`K4` under the octahedron) are returned too.
pub fn root_of_line_graph(g: &Graph) -> Option<Graph> {
    let n = g.order();
    if n == 0 || !g.is_regular(4) || !g.size().is_multiple_of(3) {
        return None;
    }
    let mut covered = vec![0u64; n];
    let mut triangles = Vec::with_capacity(g.size() / 3);
    search(g, &mut covered, &mut triangles)
}

fn search(g: &Graph, covered: &mut [u64], triangles: &mut Vec<[usize; 3]>) -> Option<Graph> {
    let next = (0..g.order()).find_map(|u| {
        let open = g.neighbors(u) & !covered[u];
        (open != 0).then(|| (u, open.trailing_zeros() as usize))
    });
    let Some((u, v)) = next else {
        return build_root(g, triangles);
    };
    let open_u = g.neighbors(u) & !covered[u];
    let open_v = g.neighbors(v) & !covered[v];
    for w in Bits(open_u & open_v) {
        let t = [u, v, w];
        for &(a, b) in &[(u, v), (u, w), (v, w)] {
            covered[a] |= bit(b);
            covered[b] |= bit(a);
        }
        triangles.push(t);
        if let Some(q) = search(g, covered, triangles) {
            return Some(q);
        }
        triangles.pop();
        for &(a, b) in &[(u, v), (u, w), (v, w)] {
            covered[a] &= !bit(b);
            covered[b] &= !bit(a);
        }
    }
    None
}

fn build_root(g: &Graph, triangles: &[[usize; 3]]) -> Option<Graph> {
    let mut ends = vec![Vec::with_capacity(2); g.order()];
    for (i, t) in triangles.iter().enumerate() {
        for &x in t {
            ends[x].push(i);
        }
    }
    let mut q = Graph::empty(triangles.len()).ok()?;
    for e in &ends {
        let [a, b] = e[..] else { return None };
        if q.has_edge(a, b) {
            return None;
        }
        q.insert(a, b);
    }
    q.is_regular(3).then_some(q)
}
