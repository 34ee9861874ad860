//! Reduction operations O1, O2, O3 and the generating moves that undo them.
//!
//! Each `O_i` contracts an edge lying in exactly one triangle and drops the
//! resulting parallel edge, so it coincides with [`Graph::contract_simplify`]
//! on the witnessed edge. Inverses place the new vertex at index `n`, so
//! applying the forward operation to a preimage reproduces the input labeling.

use std::fmt;

use thiserror::Error;

use crate::bits::{bit, Bits};
use crate::graph::{Edge, Graph, GraphError};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum OpError {
    #[error("invalid {op} witness: {reason}")]
    InvalidWitness { op: &'static str, reason: String },
    #[error("split parts must be subsets of N({vertex}) whose union is N({vertex})")]
    BadSplit { vertex: usize },
    #[error(transparent)]
    Graph(#[from] GraphError),
}

fn invalid(op: &'static str, reason: impl Into<String>) -> OpError {
    OpError::InvalidWitness { op, reason: reason.into() }
}

fn in_range(g: &Graph, op: &'static str, vs: &[usize]) -> Result<(), OpError> {
    if let Some(&v) = vs.iter().find(|&&v| v >= g.order()) {
        return Err(invalid(op, format!("vertex {v} out of range")));
    }
    let mask = vs.iter().fold(0u64, |m, &v| m | bit(v));
    if mask.count_ones() as usize != vs.len() {
        return Err(invalid(op, "vertices are not distinct"));
    }
    Ok(())
}

/// `d(x) = d(y) = 4`, `xy` an edge, and `xyz` the only triangle on `xy`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct O1Witness {
    pub x: usize,
    pub y: usize,
    pub z: usize,
}

impl O1Witness {
    pub fn check(&self, g: &Graph) -> Result<(), OpError> {
        const OP: &str = "O1";
        let Self { x, y, z } = *self;
        in_range(g, OP, &[x, y, z])?;
        if !g.has_edge(x, y) {
            return Err(invalid(OP, format!("{x}{y} is not an edge")));
        }
        if g.degree(x) != 4 || g.degree(y) != 4 {
            return Err(invalid(OP, "d(x) = d(y) = 4 fails"));
        }
        if g.neighbors(x) & g.neighbors(y) != bit(z) {
            return Err(invalid(OP, format!("{x}{y}{z} is not the only triangle on {x}{y}")));
        }
        Ok(())
    }
}

/// Paws `wx, xy, xz, yz` and `w'x', x'y', x'z, y'z` with `d(x) = d(x') = 3`
/// and `N(z) = {x, y, x', y'}`; seven distinct vertices.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct O2Witness {
    pub w: usize,
    pub x: usize,
    pub y: usize,
    pub z: usize,
    pub w2: usize,
    pub x2: usize,
    pub y2: usize,
}

impl O2Witness {
    pub fn check(&self, g: &Graph) -> Result<(), OpError> {
        const OP: &str = "O2";
        let Self { w, x, y, z, w2, x2, y2 } = *self;
        in_range(g, OP, &[w, x, y, z, w2, x2, y2])?;
        if g.neighbors(x) != bit(w) | bit(y) | bit(z) {
            return Err(invalid(OP, "N(x) = {w, y, z} fails"));
        }
        if g.neighbors(x2) != bit(w2) | bit(y2) | bit(z) {
            return Err(invalid(OP, "N(x') = {w', y', z} fails"));
        }
        if g.neighbors(z) != bit(x) | bit(y) | bit(x2) | bit(y2) {
            return Err(invalid(OP, "N(z) = {x, y, x', y'} fails"));
        }
        Ok(())
    }
}

/// `N(w) = {x, y, z}`, `xz, yz` edges, `xy` not, `d(x), d(y) >= 4`, `d(z) >= 5`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct O3Witness {
    pub w: usize,
    pub x: usize,
    pub y: usize,
    pub z: usize,
}

impl O3Witness {
    pub fn check(&self, g: &Graph) -> Result<(), OpError> {
        const OP: &str = "O3";
        let Self { w, x, y, z } = *self;
        in_range(g, OP, &[w, x, y, z])?;
        if g.neighbors(w) != bit(x) | bit(y) | bit(z) {
            return Err(invalid(OP, "N(w) = {x, y, z} fails"));
        }
        if !g.has_edge(x, z) || !g.has_edge(y, z) {
            return Err(invalid(OP, "xz and yz must be edges"));
        }
        if g.has_edge(x, y) {
            return Err(invalid(OP, "xy must not be an edge"));
        }
        if g.degree(x) < 4 || g.degree(y) < 4 {
            return Err(invalid(OP, "d(x) >= 4 and d(y) >= 4 fail"));
        }
        if g.degree(z) < 5 {
            return Err(invalid(OP, "d(z) >= 5 fails"));
        }
        Ok(())
    }
}

impl fmt::Display for O1Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {} {}", self.x, self.y, self.z)
    }
}

impl fmt::Display for O2Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {} {} {} {} {} {}", self.w, self.x, self.y, self.z, self.w2, self.x2, self.y2)
    }
}

impl fmt::Display for O3Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {} {} {}", self.w, self.x, self.y, self.z)
    }
}

/// All O1 sites, both orientations, sorted.
pub fn find_o1_sites(g: &Graph) -> Vec<O1Witness> {
    let mut out = Vec::new();
    for x in (0..g.order()).filter(|&x| g.degree(x) == 4) {
        for y in Bits(g.neighbors(x)).filter(|&y| g.degree(y) == 4) {
            let common = g.neighbors(x) & g.neighbors(y);
            if common.count_ones() == 1 {
                out.push(O1Witness { x, y, z: common.trailing_zeros() as usize });
            }
        }
    }
    out
}

/// All O2 sites, sorted.
pub fn find_o2_sites(g: &Graph) -> Vec<O2Witness> {
    let mut out = Vec::new();
    for z in (0..g.order()).filter(|&z| g.degree(z) == 4) {
        let nz = g.neighbors(z);
        for x in Bits(nz).filter(|&x| g.degree(x) == 3) {
            for y in Bits(nz & g.neighbors(x)) {
                let w = (g.neighbors(x) & !bit(y) & !bit(z)).trailing_zeros() as usize;
                for x2 in Bits(nz & !bit(x) & !bit(y)).filter(|&v| g.degree(v) == 3) {
                    let y2 = (nz & !bit(x) & !bit(y) & !bit(x2)).trailing_zeros() as usize;
                    if !g.has_edge(x2, y2) {
                        continue;
                    }
                    let w2 = (g.neighbors(x2) & !bit(y2) & !bit(z)).trailing_zeros() as usize;
                    let site = O2Witness { w, x, y, z, w2, x2, y2 };
                    if site.check(g).is_ok() {
                        out.push(site);
                    }
                }
            }
        }
    }
    out.sort_unstable();
    out
}

/// All O3 sites, both orientations of `x, y`, sorted.
pub fn find_o3_sites(g: &Graph) -> Vec<O3Witness> {
    let mut out = Vec::new();
    for w in (0..g.order()).filter(|&w| g.degree(w) == 3) {
        let nw = g.neighbors(w);
        for z in Bits(nw) {
            for x in Bits(nw & !bit(z)) {
                let y = (nw & !bit(z) & !bit(x)).trailing_zeros() as usize;
                let site = O3Witness { w, x, y, z };
                if site.check(g).is_ok() {
                    out.push(site);
                }
            }
        }
    }
    out.sort_unstable();
    out
}

pub fn apply_o1(g: &Graph, site: O1Witness) -> Result<Graph, OpError> {
    site.check(g)?;
    Ok(g.contract_simplify(Edge::new(site.x, site.y))?.0)
}

pub fn apply_o2(g: &Graph, site: O2Witness) -> Result<Graph, OpError> {
    site.check(g)?;
    Ok(g.contract_simplify(Edge::new(site.x, site.z))?.0)
}

pub fn apply_o3(g: &Graph, site: O3Witness) -> Result<Graph, OpError> {
    site.check(g)?;
    Ok(g.contract_simplify(Edge::new(site.x, site.w))?.0)
}

/// `G + uv`.
pub fn add_edge(g: &Graph, u: usize, v: usize) -> Result<Graph, OpError> {
    Ok(g.add_edge(u, v)?)
}

/// Replaces `v` by adjacent `x = v` and `y = n` with `N(x) = part_a + y` and
/// `N(y) = part_b + x`. Parts may overlap; together they must cover `N(v)`.
pub fn split_vertex(g: &Graph, v: usize, part_a: u64, part_b: u64) -> Result<Graph, OpError> {
    if v >= g.order() {
        return Err(GraphError::VertexOutOfRange { vertex: v, n: g.order() }.into());
    }
    let nv = g.neighbors(v);
    if (part_a | part_b) != nv {
        return Err(OpError::BadSplit { vertex: v });
    }
    if g.order() == crate::graph::MAX_VERTICES {
        return Err(GraphError::TooManyVertices(g.order() + 1).into());
    }
    let mut h = g.append_vertex();
    let y = g.order();
    for u in Bits(nv & !part_a) {
        h.remove(v, u);
    }
    for u in Bits(part_b) {
        h.insert(y, u);
    }
    h.insert(v, y);
    Ok(h)
}

/// Preimages under O1 whose merged vertex is `v`: pick `z` in `N(v)` and split
/// the other four neighbors into two pairs.
pub fn inverse_o1(h: &Graph, v: usize) -> Vec<(Graph, O1Witness)> {
    let mut out = Vec::new();
    if v >= h.order() || h.degree(v) != 5 || h.order() == crate::graph::MAX_VERTICES {
        return out;
    }
    let y = h.order();
    for z in Bits(h.neighbors(v)) {
        let rest = h.neighbors(v) & !bit(z);
        let first = rest.trailing_zeros() as usize;
        for partner in Bits(rest & !bit(first)) {
            let pair_x = bit(first) | bit(partner);
            let g = split_vertex(h, v, pair_x | bit(z), (rest & !pair_x) | bit(z)).expect("parts cover N(v)");
            out.push((g, O1Witness { x: v, y, z }));
        }
    }
    out
}

/// Preimages under O2 whose merged vertex is `m` (it plays `z`; the new vertex is `x`).
pub fn inverse_o2(h: &Graph, m: usize) -> Vec<(Graph, O2Witness)> {
    let mut out = Vec::new();
    if m >= h.order() || h.degree(m) != 4 || h.order() == crate::graph::MAX_VERTICES {
        return out;
    }
    let nm = h.neighbors(m);
    let x = h.order();
    for x2 in Bits(nm).filter(|&u| h.degree(u) == 3) {
        for y2 in Bits(nm & h.neighbors(x2)) {
            let w2_set = h.neighbors(x2) & !bit(y2) & !bit(m);
            let w2 = w2_set.trailing_zeros() as usize;
            if w2_set & nm != 0 {
                continue;
            }
            let pair = nm & !bit(x2) & !bit(y2);
            for w in Bits(pair) {
                let y = (pair & !bit(w)).trailing_zeros() as usize;
                let mut g = h.append_vertex();
                g.remove(m, w);
                for u in [w, y, m] {
                    g.insert(x, u);
                }
                out.push((g, O2Witness { w, x, y, z: m, w2, x2, y2 }));
            }
        }
    }
    out
}

/// Preimages under O3 whose merged vertex is `m` (it plays `x`; the new vertex is `w`).
pub fn inverse_o3(h: &Graph, m: usize) -> Vec<(Graph, O3Witness)> {
    let mut out = Vec::new();
    if m >= h.order() || h.degree(m) < 4 || h.order() == crate::graph::MAX_VERTICES {
        return out;
    }
    let nm = h.neighbors(m);
    let w = h.order();
    for y in Bits(nm).filter(|&y| h.degree(y) >= 4) {
        for z in Bits(nm & h.neighbors(y)).filter(|&z| h.degree(z) >= 4) {
            let mut g = h.append_vertex();
            g.remove(m, y);
            for u in [m, y, z] {
                g.insert(w, u);
            }
            out.push((g, O3Witness { w, x: m, y, z }));
        }
    }
    out
}

#[cfg(test)]
mod tests;
