//! Planarity by path addition on each block, with a Kuratowski-minor search
//! kept as an independent reference.

use std::collections::HashMap;

use crate::bits::{bit, for_each_subset_of_size, Bits};
use crate::enumeration::canonical_form;
use crate::graph::{Edge, Graph};

pub fn is_planar(g: &Graph) -> bool {
    let n = g.order();
    if n >= 3 && g.size() > 3 * n - 6 {
        return false;
    }
    blocks(g).into_iter().all(|b| b.count_ones() < 5 || block_is_planar(&g.induced(b)))
}

/// Vertex sets of the blocks with at least one edge.
fn blocks(g: &Graph) -> Vec<u64> {
    struct Dfs<'g> {
        g: &'g Graph,
        disc: Vec<usize>,
        low: Vec<usize>,
        time: usize,
        stack: Vec<Edge>,
        out: Vec<u64>,
    }
    impl Dfs<'_> {
        fn visit(&mut self, u: usize, parent: Option<usize>) {
            self.time += 1;
            self.disc[u] = self.time;
            self.low[u] = self.time;
            for v in Bits(self.g.neighbors(u)) {
                if self.disc[v] == 0 {
                    self.stack.push(Edge::new(u, v));
                    self.visit(v, Some(u));
                    self.low[u] = self.low[u].min(self.low[v]);
                    if self.low[v] >= self.disc[u] {
                        let mut block = 0;
                        while let Some(e) = self.stack.pop() {
                            block |= bit(e.u) | bit(e.v);
                            if e == Edge::new(u, v) {
                                break;
                            }
                        }
                        self.out.push(block);
                    }
                } else if Some(v) != parent && self.disc[v] < self.disc[u] {
                    self.stack.push(Edge::new(u, v));
                    self.low[u] = self.low[u].min(self.disc[v]);
                }
            }
        }
    }
    let n = g.order();
    let mut dfs = Dfs { g, disc: vec![0; n], low: vec![0; n], time: 0, stack: Vec::new(), out: Vec::new() };
    for v in 0..n {
        if dfs.disc[v] == 0 {
            dfs.visit(v, None);
        }
    }
    dfs.out
}

/// Path addition on a biconnected graph: keep a partial embedding as a list of
/// facial cycles and repeatedly route a path through a fragment whose
/// attachments all lie on one face, preferring fragments with a single such face.
fn block_is_planar(g: &Graph) -> bool {
    let n = g.order();
    if g.size() > 3 * n - 6 {
        return false;
    }
    let cycle = find_cycle(g);
    let mut placed = Graph::empty(n).expect("same order");
    for i in 0..cycle.len() {
        placed.insert(cycle[i], cycle[(i + 1) % cycle.len()]);
    }
    let mut placed_vertices = cycle.iter().fold(0u64, |m, &v| m | bit(v));
    let mut faces: Vec<Vec<usize>> = vec![cycle.clone(), cycle.iter().rev().copied().collect()];
    while placed.size() < g.size() {
        let fragments = fragments(g, &placed, placed_vertices);
        let mut choice: Option<(usize, usize)> = None;
        for (i, frag) in fragments.iter().enumerate() {
            let ok: Vec<usize> = (0..faces.len())
                .filter(|&f| {
                    let on_face = faces[f].iter().fold(0u64, |m, &v| m | bit(v));
                    frag.attachments & !on_face == 0
                })
                .collect();
            match ok.len() {
                0 => return false,
                1 => {
                    choice = Some((i, ok[0]));
                    break;
                }
                _ => {
                    if choice.is_none() {
                        choice = Some((i, ok[0]));
                    }
                }
            }
        }
        let (i, f) = choice.expect("an unplaced edge leaves a fragment");
        let path = fragment_path(g, &fragments[i]);
        for w in path.windows(2) {
            placed.insert(w[0], w[1]);
        }
        for &v in &path {
            placed_vertices |= bit(v);
        }
        let face = faces.swap_remove(f);
        let (a, b) = split_face(&face, &path);
        faces.push(a);
        faces.push(b);
    }
    true
}

fn find_cycle(g: &Graph) -> Vec<usize> {
    // a shortest u-v path avoiding the edge uv closes a cycle
    let e = g.edges()[0];
    let h = g.delete_edge(e).expect("edge of g");
    let n = g.order();
    let mut prev = vec![usize::MAX; n];
    prev[e.u] = e.u;
    let mut queue = std::collections::VecDeque::from([e.u]);
    while let Some(x) = queue.pop_front() {
        for y in Bits(h.neighbors(x)) {
            if prev[y] == usize::MAX {
                prev[y] = x;
                queue.push_back(y);
            }
        }
    }
    let mut cycle = vec![e.v];
    let mut x = e.v;
    while x != e.u {
        x = prev[x];
        cycle.push(x);
    }
    cycle
}

struct Fragment {
    /// Interior vertices; empty for a single chord between placed vertices.
    interior: u64,
    attachments: u64,
    chord: Option<(usize, usize)>,
}

fn fragments(g: &Graph, placed: &Graph, placed_vertices: u64) -> Vec<Fragment> {
    let mut out = Vec::new();
    for e in g.edges() {
        if placed_vertices & bit(e.u) != 0 && placed_vertices & bit(e.v) != 0 && !placed.has_edge(e.u, e.v) {
            out.push(Fragment { interior: 0, attachments: bit(e.u) | bit(e.v), chord: Some((e.u, e.v)) });
        }
    }
    for comp in g.components_within(g.vertex_mask() & !placed_vertices) {
        out.push(Fragment { interior: comp, attachments: g.set_neighbors(comp) & placed_vertices, chord: None });
    }
    out
}

/// A path between two distinct attachments through the fragment interior.
fn fragment_path(g: &Graph, frag: &Fragment) -> Vec<usize> {
    if let Some((u, v)) = frag.chord {
        return vec![u, v];
    }
    let mut atts = Bits(frag.attachments);
    let a = atts.next().expect("fragments of a block have two attachments");
    let b = atts.next().expect("fragments of a block have two attachments");
    // BFS inside the interior from the neighbors of a to a neighbor of b
    let n = g.order();
    let mut prev = vec![usize::MAX; n];
    let mut queue = std::collections::VecDeque::new();
    for x in Bits(g.neighbors(a) & frag.interior) {
        prev[x] = a;
        queue.push_back(x);
    }
    while let Some(x) = queue.pop_front() {
        if g.has_edge(x, b) {
            let mut path = vec![b, x];
            let mut y = x;
            while prev[y] != a {
                y = prev[y];
                path.push(y);
            }
            path.push(a);
            path.reverse();
            return path;
        }
        for y in Bits(g.neighbors(x) & frag.interior) {
            if prev[y] == usize::MAX {
                prev[y] = x;
                queue.push_back(y);
            }
        }
    }
    unreachable!("fragment interiors are connected to every attachment")
}

/// Splits a facial cycle along a path joining two of its vertices.
fn split_face(face: &[usize], path: &[usize]) -> (Vec<usize>, Vec<usize>) {
    let a = path[0];
    let b = *path.last().expect("paths have two ends");
    let len = face.len();
    let i = face.iter().position(|&v| v == a).expect("attachment on face");
    let j = face.iter().position(|&v| v == b).expect("attachment on face");
    let inner = &path[1..path.len() - 1];
    let walk = |from: usize, to: usize| {
        let mut out = Vec::new();
        let mut k = from;
        loop {
            out.push(face[k]);
            if k == to {
                break;
            }
            k = (k + 1) % len;
        }
        out
    };
    let mut first = walk(i, j);
    first.extend(inner.iter().rev());
    let mut second = walk(j, i);
    second.extend(inner.iter());
    (first, second)
}

/// Reference test: no `K5` or `K3,3` minor, searched by deletions and
/// contractions memoized on canonical forms. Exponential; meant for small graphs.
pub fn is_planar_by_minors(g: &Graph) -> bool {
    let mut memo = HashMap::new();
    !has_kuratowski_minor(&reduce(g), &mut memo)
}

fn has_kuratowski_minor(g: &Graph, memo: &mut HashMap<String, bool>) -> bool {
    let n = g.order();
    if n < 5 {
        return false;
    }
    if n == 5 && g.size() == 10 {
        return true;
    }
    if n == 6 && contains_k33(g) {
        return true;
    }
    let key = canonical_form(g).as_str().to_owned();
    if let Some(&known) = memo.get(&key) {
        return known;
    }
    let mut found = false;
    for e in g.edges() {
        let del = reduce(&g.delete_edge(e).expect("edge of g"));
        if has_kuratowski_minor(&del, memo) {
            found = true;
            break;
        }
        let (con, _) = g.contract_simplify(e).expect("edge of g");
        if has_kuratowski_minor(&reduce(&con), memo) {
            found = true;
            break;
        }
    }
    memo.insert(key, found);
    found
}

fn contains_k33(g: &Graph) -> bool {
    let all = g.vertex_mask();
    let mut found = false;
    for_each_subset_of_size(all, 3, |side| {
        let other = all & !side;
        if Bits(side).all(|v| g.neighbors(v) & other == other) {
            found = true;
            return false;
        }
        true
    });
    found
}

/// Drops vertices of degree at most one and suppresses degree-two vertices;
/// neither changes whether a `K5` or `K3,3` minor exists.
fn reduce(g: &Graph) -> Graph {
    let mut g = g.clone();
    'outer: loop {
        for v in 0..g.order() {
            match g.degree(v) {
                0 | 1 => {
                    g = g.remove_vertex(v);
                    continue 'outer;
                }
                2 => {
                    let mut nb = Bits(g.neighbors(v));
                    let (a, b) = (nb.next().unwrap(), nb.next().unwrap());
                    if !g.has_edge(a, b) {
                        g.insert(a, b);
                    }
                    g = g.remove_vertex(v);
                    continue 'outer;
                }
                _ => {}
            }
        }
        return g;
    }
}
