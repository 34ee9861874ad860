//! Canonical labeling by equitable partition refinement and a search tree
//! over individualized vertices, pruned with the automorphisms found so far.

use std::fmt;

use crate::bits::{bit, Bits};
use crate::graph::Graph;
use crate::graph6;

/// graph6 string of the canonically relabeled graph.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalForm(String);

impl CanonicalForm {
    pub fn as_str(&self) -> &str {
        &self.0
    }

    pub fn to_graph(&self) -> Graph {
        graph6::decode(&self.0).expect("canonical forms are valid graph6")
    }
}

impl fmt::Display for CanonicalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl fmt::Debug for CanonicalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CanonicalForm({})", self.0)
    }
}

pub fn canonical_form(g: &Graph) -> CanonicalForm {
    CanonicalForm(graph6::encode(&canonical_graph(g)))
}

pub fn canonical_graph(g: &Graph) -> Graph {
    g.relabel(&canonical_labeling(g))
}

pub fn is_isomorphic(a: &Graph, b: &Graph) -> bool {
    a.order() == b.order()
        && a.size() == b.size()
        && {
            let (mut da, mut db) = (a.degrees(), b.degrees());
            da.sort_unstable();
            db.sort_unstable();
            da == db
        }
        && canonical_graph(a) == canonical_graph(b)
}

/// Permutation taking `g` to its canonical labeling: vertex `v` goes to `lab[v]`.
pub fn canonical_labeling(g: &Graph) -> Vec<usize> {
    let n = g.order();
    if n <= 1 {
        return (0..n).collect();
    }
    let mut search = Search { g, best: None, first: None, autos: Vec::new() };
    let mut cells = vec![g.vertex_mask()];
    refine(g, &mut cells);
    let mut prefix = Vec::new();
    search.descend(cells, &mut prefix);
    search.best.expect("search reaches a leaf").1
}

struct Search<'g> {
    g: &'g Graph,
    best: Option<(Vec<u64>, Vec<usize>)>,
    first: Option<(Vec<u64>, Vec<usize>)>,
    autos: Vec<Vec<usize>>,
}

impl Search<'_> {
    fn descend(&mut self, cells: Vec<u64>, prefix: &mut Vec<usize>) {
        let Some(target) = cells.iter().position(|c| c.count_ones() > 1) else {
            self.leaf(&cells);
            return;
        };
        let cell = cells[target];
        let mut explored: Vec<usize> = Vec::new();
        for v in Bits(cell) {
            if !explored.is_empty() && self.same_orbit(prefix, &explored, v) {
                continue;
            }
            let mut child = Vec::with_capacity(cells.len() + 1);
            child.extend_from_slice(&cells[..target]);
            child.push(bit(v));
            child.push(cell & !bit(v));
            child.extend_from_slice(&cells[target + 1..]);
            refine(self.g, &mut child);
            prefix.push(v);
            self.descend(child, prefix);
            prefix.pop();
            explored.push(v);
        }
    }

    /// Whether `v` shares an orbit with an explored vertex under the found
    /// automorphisms that fix `prefix` pointwise.
    fn same_orbit(&self, prefix: &[usize], explored: &[usize], v: usize) -> bool {
        let n = self.g.order();
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(p: &mut [usize], mut x: usize) -> usize {
            while p[x] != x {
                p[x] = p[p[x]];
                x = p[x];
            }
            x
        }
        let mut any = false;
        for gamma in &self.autos {
            if prefix.iter().all(|&p| gamma[p] == p) {
                any = true;
                for x in 0..n {
                    let (a, b) = (find(&mut parent, x), find(&mut parent, gamma[x]));
                    if a != b {
                        parent[a] = b;
                    }
                }
            }
        }
        if !any {
            return false;
        }
        let rv = find(&mut parent, v);
        explored.iter().any(|&u| find(&mut parent, u) == rv)
    }

    fn leaf(&mut self, cells: &[u64]) {
        let n = self.g.order();
        let mut lab = vec![0; n];
        for (i, &c) in cells.iter().enumerate() {
            lab[c.trailing_zeros() as usize] = i;
        }
        let code = self.g.relabel(&lab).rows().to_vec();
        for reference in [&self.first, &self.best].into_iter().flatten() {
            if reference.0 == code {
                // lab followed by the inverse of the reference labeling fixes g
                let mut inv = vec![0; n];
                for (v, &p) in reference.1.iter().enumerate() {
                    inv[p] = v;
                }
                let gamma: Vec<usize> = (0..n).map(|v| inv[lab[v]]).collect();
                if gamma.iter().enumerate().any(|(i, &x)| i != x) {
                    self.autos.push(gamma);
                }
                return;
            }
        }
        if self.first.is_none() {
            self.first = Some((code.clone(), lab.clone()));
        }
        if self.best.as_ref().is_none_or(|(b, _)| code > *b) {
            self.best = Some((code, lab));
        }
    }
}

/// Refines an ordered partition to the coarsest equitable refinement.
/// Fragments of a split cell are ordered by their neighbor count into the splitter.
pub(crate) fn refine(g: &Graph, cells: &mut Vec<u64>) {
    let mut counts = [0u64; 65];
    loop {
        let mut changed = false;
        let mut s = 0;
        while s < cells.len() {
            let splitter = cells[s];
            let mut i = 0;
            while i < cells.len() {
                let c = cells[i];
                if c.count_ones() <= 1 {
                    i += 1;
                    continue;
                }
                let mut lo = usize::MAX;
                let mut hi = 0;
                for v in Bits(c) {
                    let k = (g.neighbors(v) & splitter).count_ones() as usize;
                    counts[k] |= bit(v);
                    lo = lo.min(k);
                    hi = hi.max(k);
                }
                if lo == hi {
                    counts[lo] = 0;
                    i += 1;
                    continue;
                }
                let frags: Vec<u64> = (lo..=hi)
                    .filter_map(|k| {
                        let f = std::mem::take(&mut counts[k]);
                        (f != 0).then_some(f)
                    })
                    .collect();
                let len = frags.len();
                cells.splice(i..=i, frags);
                changed = true;
                i += len;
            }
            s += 1;
        }
        if !changed {
            break;
        }
    }
}
