//! Named graph families and sporadic graphs.
//!
//! Labeling conventions for constructed graphs: rim or path vertices come
//! first, hubs last. Ladders use `x_i = i - 1` and `y_i = n + i - 1`.

mod line_root;
mod planarity;

use std::collections::BTreeSet;
use std::fmt;

use thiserror::Error;

use crate::bits::{bit, Bits};
use crate::connectivity::{is_internally_4c_cubic, is_k_connected};
use crate::enumeration::canonical_form;
use crate::graph::{Graph, MAX_VERTICES};

pub use line_root::root_of_line_graph;
pub use planarity::{is_planar, is_planar_by_minors};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum FamilyId {
    Wheel(usize),
    SquaredCycle(usize),
    Biwheel { n: usize, axle: bool },
    LineOfCubic,
    LadderA { n: usize, twisted: bool },
    Pyramid,
    Kite,
    K6,
    K6Minus,
    K33Plus,
    Small3Connected,
}

impl fmt::Display for FamilyId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            FamilyId::Wheel(n) => write!(f, "wheel({n})"),
            FamilyId::SquaredCycle(n) => write!(f, "squared-cycle({n})"),
            FamilyId::Biwheel { n, axle: true } => write!(f, "biwheel({n},axle)"),
            FamilyId::Biwheel { n, axle: false } => write!(f, "biwheel({n})"),
            FamilyId::LineOfCubic => f.write_str("line-of-cubic"),
            FamilyId::LadderA { n, twisted: true } => write!(f, "ladder({n},twisted)"),
            FamilyId::LadderA { n, twisted: false } => write!(f, "ladder({n})"),
            FamilyId::Pyramid => f.write_str("pyramid"),
            FamilyId::Kite => f.write_str("kite"),
            FamilyId::K6 => f.write_str("k6"),
            FamilyId::K6Minus => f.write_str("k6-minus"),
            FamilyId::K33Plus => f.write_str("k33-plus"),
            FamilyId::Small3Connected => f.write_str("small-3-connected"),
        }
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FamilyError {
    #[error("parameter out of range for {0:?}")]
    ParameterOutOfRange(FamilyId),
    #[error("{0:?} exceeds the vertex bound")]
    TooLarge(FamilyId),
    #[error("{0} names a class, not a single graph")]
    NotConstructible(FamilyId),
}

pub fn construct(id: FamilyId) -> Result<Graph, FamilyError> {
    let fits = |n: usize| if n <= MAX_VERTICES { Ok(()) } else { Err(FamilyError::TooLarge(id)) };
    match id {
        FamilyId::Wheel(n) => {
            if n < 3 {
                return Err(FamilyError::ParameterOutOfRange(id));
            }
            fits(n + 1)?;
            Ok(wheel(n))
        }
        FamilyId::SquaredCycle(n) => {
            if n < 5 {
                return Err(FamilyError::ParameterOutOfRange(id));
            }
            fits(n)?;
            Ok(squared_cycle(n))
        }
        FamilyId::Biwheel { n, axle } => {
            if n < 3 {
                return Err(FamilyError::ParameterOutOfRange(id));
            }
            fits(n + 2)?;
            Ok(biwheel(n, axle))
        }
        FamilyId::LadderA { n, twisted } => {
            if n < 3 {
                return Err(FamilyError::ParameterOutOfRange(id));
            }
            fits(2 * n)?;
            Ok(ladder(n, twisted))
        }
        FamilyId::Pyramid => Ok(pyramid()),
        FamilyId::Kite => Ok(kite()),
        FamilyId::K6 => Ok(Graph::complete(6)),
        FamilyId::K6Minus => Ok(Graph::complete(6).delete_edge((4, 5).into()).expect("edge of K6")),
        FamilyId::K33Plus => Ok(Graph::complete_bipartite(3, 3).add_edge(0, 1).expect("non-edge of K33")),
        FamilyId::LineOfCubic | FamilyId::Small3Connected => Err(FamilyError::NotConstructible(id)),
    }
}

fn wheel(n: usize) -> Graph {
    let mut g = Graph::cycle(n).append_vertex();
    for v in 0..n {
        g.insert(v, n);
    }
    g
}

fn squared_cycle(n: usize) -> Graph {
    let mut g = Graph::cycle(n);
    for v in 0..n {
        let u = (v + 2) % n;
        if !g.has_edge(v, u) {
            g.insert(v, u);
        }
    }
    g
}

fn biwheel(n: usize, axle: bool) -> Graph {
    let mut g = Graph::cycle(n).append_vertex().append_vertex();
    for v in 0..n {
        g.insert(v, n);
        g.insert(v, n + 1);
    }
    if axle {
        g.insert(n, n + 1);
    }
    g
}

fn ladder(n: usize, twisted: bool) -> Graph {
    let mut g = Graph::empty(2 * n).expect("bounded by caller");
    for i in 0..n {
        g.insert(i, n + i);
        if i + 1 < n {
            g.insert(i, i + 1);
            g.insert(n + i, n + i + 1);
        }
    }
    if twisted {
        g.insert(0, 2 * n - 1);
        g.insert(n, n - 1);
    } else {
        g.insert(0, n - 1);
        g.insert(n, 2 * n - 1);
    }
    g
}

/// Triangle `0 1 2`, vertices `3 4 5` on its sides `01 12 20`, apex `6`
/// adjacent to `3 4 5`.
fn pyramid() -> Graph {
    Graph::new(
        7,
        [(0, 1), (1, 2), (0, 2), (0, 3), (1, 3), (1, 4), (2, 4), (0, 5), (2, 5), (3, 6), (4, 6), (5, 6)],
    )
    .expect("fixed edge list")
}

fn kite() -> Graph {
    Graph::new(
        7,
        [(0, 1), (1, 4), (1, 2), (1, 5), (0, 2), (0, 3), (0, 5), (2, 6), (3, 4), (4, 5), (5, 6), (3, 6)],
    )
    .expect("fixed edge list")
}

/// Every family membership of `g`.
pub fn recognize(g: &Graph) -> BTreeSet<FamilyId> {
    let mut out = BTreeSet::new();
    let n = g.order();
    if let Some(k) = wheel_rim(g) {
        out.insert(FamilyId::Wheel(k));
    }
    if is_squared_cycle(g) {
        out.insert(FamilyId::SquaredCycle(n));
    }
    if let Some(axle) = biwheel_axle(g) {
        out.insert(FamilyId::Biwheel { n: n - 2, axle });
    }
    if is_line_of_internally_4c_cubic(g) {
        out.insert(FamilyId::LineOfCubic);
    }
    if let Some(twisted) = ladder_kind(g) {
        out.insert(FamilyId::LadderA { n: n / 2, twisted });
    }
    for id in [FamilyId::Pyramid, FamilyId::Kite, FamilyId::K6, FamilyId::K6Minus, FamilyId::K33Plus] {
        let h = construct(id).expect("sporadic graphs are constructible");
        if h.order() == n && h.size() == g.size() && canonical_form(&h) == canonical_form(g) {
            out.insert(id);
        }
    }
    if n <= 6 && is_k_connected(g, 3) {
        out.insert(FamilyId::Small3Connected);
    }
    out
}

/// Whether `rest` induces a single cycle through all its vertices.
fn induces_cycle(g: &Graph, rest: u64) -> bool {
    rest.count_ones() >= 3
        && Bits(rest).all(|v| (g.neighbors(v) & rest).count_ones() == 2)
        && g.reach(bit(rest.trailing_zeros() as usize), !rest) == rest
}

/// Rim length `k` when `g` is the wheel `W_k`.
fn wheel_rim(g: &Graph) -> Option<usize> {
    let n = g.order();
    if n < 4 || g.size() != 2 * (n - 1) {
        return None;
    }
    let all = g.vertex_mask();
    (0..n)
        .find(|&h| g.degree(h) == n - 1 && induces_cycle(g, all & !bit(h)))
        .map(|_| n - 1)
}

pub fn is_squared_cycle(g: &Graph) -> bool {
    let n = g.order();
    if n < 5 || !g.is_regular(4) {
        return false;
    }
    // v_0 = 0; every later v_i must be adjacent to v_{i-1} and v_{i-2}
    let mut order = vec![0usize];
    fn extend(g: &Graph, order: &mut Vec<usize>, used: u64) -> bool {
        let n = g.order();
        let k = order.len();
        if k == n {
            let mut h = Graph::empty(n).expect("same order");
            for i in 0..n {
                for d in [1, 2] {
                    let (a, b) = (order[i], order[(i + d) % n]);
                    if !h.has_edge(a, b) {
                        h.insert(a, b);
                    }
                }
            }
            return h == *g;
        }
        let mut cand = g.neighbors(order[k - 1]) & !used;
        if k >= 2 {
            cand &= g.neighbors(order[k - 2]);
        }
        for v in Bits(cand) {
            order.push(v);
            if extend(g, order, used | bit(v)) {
                return true;
            }
            order.pop();
        }
        false
    }
    extend(g, &mut order, 1)
}

/// `Some(axle)` when `g` is `B_k` or `B_k^+` for some `k >= 3`.
fn biwheel_axle(g: &Graph) -> Option<bool> {
    let n = g.order();
    if n < 5 {
        return None;
    }
    let all = g.vertex_mask();
    let hubs: Vec<usize> = (0..n).filter(|&v| g.degree(v) >= n - 2).collect();
    for (i, &h1) in hubs.iter().enumerate() {
        for &h2 in &hubs[i + 1..] {
            let rest = all & !bit(h1) & !bit(h2);
            if g.neighbors(h1) & rest == rest && g.neighbors(h2) & rest == rest && induces_cycle(g, rest) {
                return Some(g.has_edge(h1, h2));
            }
        }
    }
    None
}

/// `Some(twisted)` when `g` is `A_k` or `A_k'` for some `k >= 3`.
fn ladder_kind(g: &Graph) -> Option<bool> {
    let n = g.order();
    if n < 6 || n % 2 == 1 || !g.is_regular(3) {
        return None;
    }
    let k = n / 2;
    let targets = [(false, ladder(k, false)), (true, ladder(k, true))];
    // ladders are vertex-transitive, so x_1 = 0 loses nothing
    let x1 = 0;
    for y1 in Bits(g.neighbors(x1)) {
        for x2 in Bits(g.neighbors(x1) & !bit(y1)) {
            for y2 in Bits(g.neighbors(y1) & !bit(x1)) {
                let Some(perm) = walk_ladder(g, k, [x1, y1, x2, y2]) else {
                    continue;
                };
                let h = g.relabel(&perm);
                for (twisted, t) in &targets {
                    if h == *t {
                        return Some(*twisted);
                    }
                }
            }
        }
    }
    None
}

/// Follows both paths from a starting rung; returns the labeling `x_i -> i-1`, `y_i -> k+i-1`.
fn walk_ladder(g: &Graph, k: usize, start: [usize; 4]) -> Option<Vec<usize>> {
    let [x1, y1, x2, y2] = start;
    let mut xs = vec![x1, x2];
    let mut ys = vec![y1, y2];
    let mut used = bit(x1) | bit(y1) | bit(x2) | bit(y2);
    if used.count_ones() != 4 {
        return None;
    }
    while xs.len() < k {
        let i = xs.len() - 1;
        let nx = g.neighbors(xs[i]) & !bit(xs[i - 1]) & !bit(ys[i]);
        let ny = g.neighbors(ys[i]) & !bit(ys[i - 1]) & !bit(xs[i]);
        if nx.count_ones() != 1 || ny.count_ones() != 1 || (nx | ny) & used != 0 || nx == ny {
            return None;
        }
        used |= nx | ny;
        xs.push(nx.trailing_zeros() as usize);
        ys.push(ny.trailing_zeros() as usize);
    }
    let mut perm = vec![0; 2 * k];
    for i in 0..k {
        perm[xs[i]] = i;
        perm[ys[i]] = k + i;
    }
    Some(perm)
}

fn is_line_of_internally_4c_cubic(g: &Graph) -> bool {
    g.order() >= 9
        && g.is_regular(4)
        && root_of_line_graph(g).is_some_and(|q| is_internally_4c_cubic(&q))
}

/// `W_k` for some `k >= 3`.
pub fn is_wheel(g: &Graph) -> bool {
    wheel_rim(g).is_some()
}

/// Member of `{C^2_n : n >= 5}`.
pub fn in_squared_cycles(g: &Graph) -> bool {
    is_squared_cycle(g)
}

/// Line graph of an internally 4-connected cubic graph.
pub fn in_line_graphs(g: &Graph) -> bool {
    is_line_of_internally_4c_cubic(g)
}

/// Member of `{B_n, B_n^+ : n >= min_n}`.
pub fn in_biwheels(g: &Graph, min_n: usize) -> bool {
    g.order() >= min_n + 2 && biwheel_axle(g).is_some()
}

/// Member of `{A_n, A_n' : n >= min_n}`.
pub fn in_ladders(g: &Graph, min_n: usize) -> bool {
    g.order() >= 2 * min_n && ladder_kind(g).is_some()
}

pub fn is_family(g: &Graph, id: FamilyId) -> bool {
    match id {
        FamilyId::LineOfCubic => in_line_graphs(g),
        FamilyId::Small3Connected => g.order() <= 6 && is_k_connected(g, 3),
        _ => construct(id).is_ok_and(|h| {
            h.order() == g.order() && h.size() == g.size() && canonical_form(&h) == canonical_form(g)
        }),
    }
}
