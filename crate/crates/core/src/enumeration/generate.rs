//! Exhaustive generation of unlabeled graphs.

use std::collections::HashSet;

use rayon::prelude::*;
use thiserror::Error;

use super::canon::{canonical_form, CanonicalForm};
use crate::bits::{bit, low_mask, Bits};
use crate::chains::TheoremId;
use crate::graph::Graph;

/// Largest order accepted by [`enumerate_graphs`].
pub const EXHAUSTIVE_BOUND: usize = 9;

/// Largest order accepted by [`enumerate_graphs_brute`].
pub const BRUTE_FORCE_BOUND: usize = 6;

#[derive(Debug, Error, Clone, Copy, PartialEq, Eq)]
pub enum EnumError {
    #[error("order {n} exceeds the exhaustive bound {bound}")]
    BoundExceeded { n: usize, bound: usize },
    #[error("degree-only generation is defined for the 4-connected theorem only, not {0}")]
    DegreeOnlyUnsupported(TheoremId),
}

fn check_bound(n: usize, bound: usize) -> Result<(), EnumError> {
    if n > bound {
        Err(EnumError::BoundExceeded { n, bound })
    } else {
        Ok(())
    }
}

/// One graph per isomorphism class on `n` vertices with minimum degree at
/// least `min_degree` that passes `filter`, in canonical labeling, sorted by
/// canonical form.
///
/// Graphs are grown one vertex at a time. A graph on `m` vertices is kept only
/// if every degree is at least `min_degree - (n - m)`, since each later vertex
/// raises a degree by at most one.
pub fn enumerate_graphs<F>(n: usize, min_degree: usize, filter: F) -> Result<Vec<Graph>, EnumError>
where
    F: Fn(&Graph) -> bool + Sync,
{
    check_bound(n, EXHAUSTIVE_BOUND)?;
    let mut level: Vec<Graph> = vec![Graph::empty(0).expect("empty graph")];
    for m in 0..n {
        let need = min_degree.saturating_sub(n - m - 1);
        let children: Vec<Vec<CanonicalForm>> = level
            .par_iter()
            .map(|g| {
                let mut local = Vec::new();
                let base = g.append_vertex();
                for nbrs in 0..=low_mask(m) {
                    if (nbrs.count_ones() as usize) < need {
                        continue;
                    }
                    if Bits(low_mask(m) & !nbrs).any(|v| g.degree(v) < need) {
                        continue;
                    }
                    let mut h = base.clone();
                    for v in Bits(nbrs) {
                        h.insert(v, m);
                    }
                    local.push(canonical_form(&h));
                }
                local
            })
            .collect();
        let mut seen: HashSet<CanonicalForm> = HashSet::new();
        let mut forms: Vec<CanonicalForm> = children.into_iter().flatten().filter(|f| seen.insert(f.clone())).collect();
        forms.sort_unstable();
        level = forms.iter().map(CanonicalForm::to_graph).collect();
    }
    let kept: Vec<bool> = level.par_iter().map(|g| g.min_degree() >= min_degree && filter(g)).collect();
    Ok(level.into_iter().zip(kept).filter_map(|(g, k)| k.then_some(g)).collect())
}

/// Every isomorphism class with `min_degree`, over orders `lo..=hi`.
pub fn enumerate_range<F>(lo: usize, hi: usize, min_degree: usize, filter: F) -> Result<Vec<Graph>, EnumError>
where
    F: Fn(&Graph) -> bool + Sync,
{
    let mut out = Vec::new();
    for n in lo..=hi {
        out.extend(enumerate_graphs(n, min_degree, &filter)?);
    }
    Ok(out)
}

/// Labeled enumeration of all `2^C(n,2)` graphs, reduced to classes by the
/// largest adjacency code over all `n!` relabelings. Independent of the
/// canonical labeling search; used to check [`enumerate_graphs`].
///
/// Returns one representative per class (the code-maximal labeling), sorted
/// by code.
pub fn enumerate_graphs_brute<F>(n: usize, filter: F) -> Result<Vec<Graph>, EnumError>
where
    F: Fn(&Graph) -> bool,
{
    check_bound(n, BRUTE_FORCE_BOUND)?;
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|v| (0..v).map(move |u| (u, v))).collect();
    let perms = permutations(n);
    let mut codes: HashSet<u64> = HashSet::new();
    for labeled in 0u64..1 << pairs.len() {
        let best = perms
            .iter()
            .map(|p| {
                pairs.iter().enumerate().fold(0u64, |acc, (i, &(u, v))| {
                    if labeled >> i & 1 == 1 {
                        let (a, b) = (p[u].min(p[v]), p[u].max(p[v]));
                        acc | bit(pair_index(a, b))
                    } else {
                        acc
                    }
                })
            })
            .max()
            .expect("at least one permutation");
        codes.insert(best);
    }
    let mut codes: Vec<u64> = codes.into_iter().collect();
    codes.sort_unstable();
    Ok(codes
        .into_iter()
        .map(|code| {
            let edges = pairs.iter().enumerate().filter(|(i, _)| code >> i & 1 == 1).map(|(_, &e)| e);
            Graph::new(n, edges).expect("valid pairs")
        })
        .filter(|g| filter(g))
        .collect())
}

/// Index of the pair `a < b` in the column-major upper triangle.
fn pair_index(a: usize, b: usize) -> usize {
    b * (b - 1) / 2 + a
}

pub(crate) fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut p: Vec<usize> = (0..n).collect();
    heap(n, &mut p, &mut out);
    out
}

fn heap(k: usize, p: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
    if k <= 1 {
        out.push(p.clone());
        return;
    }
    for i in 0..k {
        heap(k - 1, p, out);
        let j = if k.is_multiple_of(2) { i } else { 0 };
        if i + 1 < k {
            p.swap(j, k - 1);
        }
    }
}
