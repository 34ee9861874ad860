//! Local vertex connectivity by unit-capacity max-flow on the split digraph.

use std::collections::VecDeque;

use crate::graph::Graph;

const BIG: i32 = 1 << 20;

/// Max-flow workspace for one graph. Vertex `v` becomes `2v` (in) and `2v+1` (out).
pub(crate) struct FlowNet<'g> {
    g: &'g Graph,
    width: usize,
    cap: Vec<i32>,
    prev: Vec<usize>,
}

impl<'g> FlowNet<'g> {
    pub(crate) fn new(g: &'g Graph) -> Self {
        let width = 2 * g.order();
        FlowNet { g, width, cap: vec![0; width * width], prev: vec![usize::MAX; width] }
    }

    fn reset(&mut self, s: usize, t: usize) {
        self.cap.iter_mut().for_each(|c| *c = 0);
        let w = self.width;
        for v in 0..self.g.order() {
            let through = if v == s || v == t { BIG } else { 1 };
            self.cap[(2 * v) * w + 2 * v + 1] = through;
            for u in crate::bits::Bits(self.g.neighbors(v)) {
                self.cap[(2 * v + 1) * w + 2 * u] = BIG;
            }
        }
    }

    fn augment(&mut self, source: usize, sink: usize) -> bool {
        let w = self.width;
        self.prev.iter_mut().for_each(|p| *p = usize::MAX);
        self.prev[source] = source;
        let mut queue = VecDeque::from([source]);
        while let Some(a) = queue.pop_front() {
            let row = &self.cap[a * w..(a + 1) * w];
            for (b, &c) in row.iter().enumerate() {
                if c > 0 && self.prev[b] == usize::MAX {
                    self.prev[b] = a;
                    if b == sink {
                        let mut x = sink;
                        while x != source {
                            let p = self.prev[x];
                            self.cap[p * w + x] -= 1;
                            self.cap[x * w + p] += 1;
                            x = p;
                        }
                        return true;
                    }
                    queue.push_back(b);
                }
            }
        }
        false
    }

    /// Number of internally disjoint `s`–`t` paths, counting at most `limit`.
    /// `s` and `t` must be distinct and non-adjacent.
    pub(crate) fn disjoint_paths(&mut self, s: usize, t: usize, limit: usize) -> usize {
        debug_assert!(s != t && !self.g.has_edge(s, t));
        self.reset(s, t);
        let mut flow = 0;
        while flow < limit && self.augment(2 * s + 1, 2 * t) {
            flow += 1;
        }
        flow
    }

    /// After a saturating run from `s`, the vertices of a minimum `s`–`t` separator.
    pub(crate) fn min_cut(&self, s: usize) -> u64 {
        let w = self.width;
        let mut seen = vec![false; w];
        let start = 2 * s + 1;
        seen[start] = true;
        let mut queue = VecDeque::from([start]);
        while let Some(a) = queue.pop_front() {
            for b in 0..w {
                if self.cap[a * w + b] > 0 && !seen[b] {
                    seen[b] = true;
                    queue.push_back(b);
                }
            }
        }
        (0..self.g.order())
            .filter(|&v| seen[2 * v] && !seen[2 * v + 1])
            .fold(0u64, |acc, v| acc | crate::bits::bit(v))
    }
}
