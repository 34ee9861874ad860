//! Growing a theorem's class back up from its targets with inverse steps.

use std::collections::{BTreeMap, HashSet};
use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;

use super::canon::{canonical_form, CanonicalForm};
use super::generate::{EnumError, EXHAUSTIVE_BOUND};
use crate::chains::TheoremId;
use crate::families::{in_biwheels, in_line_graphs, in_squared_cycles, is_planar};
use crate::graph::Graph;
use crate::operations::{inverse_o1, inverse_o2, inverse_o3, split_vertex};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum GenerationMode {
    /// Every expansion must lie in the class and avoid the exclusions.
    ClassChecked,
    /// Only `δ >= 4` is required of expansions; 4-connectivity theorem only.
    DegreeOnly,
}

impl GenerationMode {
    pub fn tag(self) -> &'static str {
        match self {
            GenerationMode::ClassChecked => "class-checked",
            GenerationMode::DegreeOnly => "degree-only",
        }
    }
}

impl fmt::Display for GenerationMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

impl FromStr for GenerationMode {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "class-checked" => Ok(GenerationMode::ClassChecked),
            "degree-only" => Ok(GenerationMode::DegreeOnly),
            other => Err(format!("unknown generation mode `{other}`")),
        }
    }
}

/// Minimum degree every graph of the theorem's class has.
pub fn class_min_degree(t: TheoremId) -> usize {
    if t == TheoremId::FourConn {
        4
    } else {
        3
    }
}

/// Graphs `G` with `|G| <= max_n` from which one step of `t` reaches `h`
/// (before any class or exclusion filtering).
pub fn inverse_steps(h: &Graph, t: TheoremId, max_n: usize) -> Vec<Graph> {
    let mut out: Vec<Graph> = h.non_edges().into_iter().map(|e| h.add_edge(e.u, e.v).expect("non-edge")).collect();
    if h.order() >= max_n {
        return out;
    }
    let part = class_min_degree(t) - 1;
    for v in 0..h.order() {
        let nv = h.neighbors(v);
        if nv.count_ones() as usize >= 2 * part {
            // subsets containing the lowest neighbour, so each unordered split appears once
            let low = nv & nv.wrapping_neg();
            let rest = nv & !low;
            let mut sub = rest;
            loop {
                let a = sub | low;
                let b = nv & !a;
                if a.count_ones() as usize >= part && b.count_ones() as usize >= part {
                    out.push(split_vertex(h, v, a, b).expect("disjoint parts of N(v)"));
                }
                if sub == 0 {
                    break;
                }
                sub = (sub - 1) & rest;
            }
        }
        match t {
            TheoremId::TuttePlus => {}
            TheoremId::FourConn => out.extend(inverse_o1(h, v).into_iter().map(|(g, _)| g)),
            TheoremId::Weak4 => out.extend(inverse_o2(h, v).into_iter().map(|(g, _)| g)),
            TheoremId::Quasi4 => out.extend(inverse_o3(h, v).into_iter().map(|(g, _)| g)),
        }
    }
    out
}

fn excluded_four_conn(g: &Graph) -> bool {
    in_biwheels(g, 4) || in_squared_cycles(g) || in_line_graphs(g)
}

/// Breadth-first closure of the targets of `t` under [`inverse_steps`],
/// keeping a child when `keep(parent, child)` holds. Keyed and sorted by
/// canonical form.
fn closure<K>(t: TheoremId, max_n: usize, keep: K) -> BTreeMap<CanonicalForm, Graph>
where
    K: Fn(&Graph, &Graph) -> bool + Sync,
{
    let mut found: BTreeMap<CanonicalForm, Graph> = BTreeMap::new();
    let mut frontier = Vec::new();
    for g in t.targets() {
        if g.order() <= max_n {
            let f = canonical_form(&g);
            found.insert(f.clone(), f.to_graph());
            frontier.push(f.to_graph());
        }
    }
    while !frontier.is_empty() {
        let children: Vec<Vec<CanonicalForm>> = frontier
            .par_iter()
            .map(|h| {
                let mut local: Vec<CanonicalForm> = Vec::new();
                let mut seen = HashSet::new();
                for g in inverse_steps(h, t, max_n) {
                    let f = canonical_form(&g);
                    if !seen.insert(f.clone()) || found.contains_key(&f) {
                        continue;
                    }
                    if keep(h, &g) {
                        local.push(f);
                    }
                }
                local
            })
            .collect();
        let mut next = Vec::new();
        for f in children.into_iter().flatten() {
            if let std::collections::btree_map::Entry::Vacant(slot) = found.entry(f) {
                let canon = slot.key().to_graph();
                next.push(canon.clone());
                slot.insert(canon);
            }
        }
        frontier = next;
    }
    found
}

/// Every graph with minimum degree 4 and at most `max_n` vertices reachable
/// from `B4+` or `B5` by edge additions, splits into parts of size at least 3,
/// and inverse O1, in canonical labeling and sorted by canonical form.
pub fn degree_only_closure(max_n: usize) -> Result<Vec<Graph>, EnumError> {
    check(max_n)?;
    let found = closure(TheoremId::FourConn, max_n, |_, g| g.min_degree() >= 4);
    Ok(found.into_values().collect())
}

fn check(max_n: usize) -> Result<(), EnumError> {
    if max_n > EXHAUSTIVE_BOUND {
        Err(EnumError::BoundExceeded { n: max_n, bound: EXHAUSTIVE_BOUND })
    } else {
        Ok(())
    }
}

/// The theorem's targets closed under inverse steps up to `max_n` vertices, in
/// canonical labeling and sorted by canonical form.
///
/// `ClassChecked` keeps an expansion `G` of `H` when `G` lies in the class, is a
/// target or outside the excluded families, and (4-connected case) is planar
/// whenever `H` is. `DegreeOnly` keeps every expansion with `δ >= 4` and then
/// collects the closure minus biwheels, squared cycles and line graphs, plus
/// the targets.
pub fn generate_from_base(t: TheoremId, max_n: usize, mode: GenerationMode) -> Result<Vec<Graph>, EnumError> {
    check(max_n)?;
    match mode {
        GenerationMode::ClassChecked => {
            let found = closure(t, max_n, |h, g| {
                if t == TheoremId::FourConn && (g.min_degree() < 4 || (is_planar(h) && !is_planar(g))) {
                    return false;
                }
                t.in_class(g) && (t.is_target(g) || !t.is_excluded_input(g))
            });
            Ok(found.into_values().collect())
        }
        GenerationMode::DegreeOnly => {
            if t != TheoremId::FourConn {
                return Err(EnumError::DegreeOnlyUnsupported(t));
            }
            Ok(degree_only_closure(max_n)?
                .into_iter()
                .filter(|g| t.is_target(g) || !excluded_four_conn(g))
                .collect())
        }
    }
}
