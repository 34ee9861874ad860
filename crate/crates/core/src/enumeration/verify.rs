//! Exhaustive checks of the chain theorems and the supporting lemmas.

use std::fmt;
use std::str::FromStr;
use std::time::{Duration, Instant};

use rayon::prelude::*;

use super::canon::{canonical_form, is_isomorphic};
use super::closure::class_min_degree;
use super::generate::{enumerate_graphs, EnumError, EXHAUSTIVE_BOUND};
use crate::chains::{find_chain, seven_vertex_endgame, spanning_copy, verify_chain, TheoremId};
use crate::connectivity::{find_paws, is_k_connected, is_quasi_4_connected, is_weakly_4_connected, Paw};
use crate::families::{construct, is_planar, FamilyId};
use crate::graph::{Edge, Graph};
use crate::graph6;

/// Outcome of an exhaustive run. Counts come from the enumeration itself.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerificationReport {
    pub id: String,
    pub max_n: usize,
    /// `(key, value)` in the order they were recorded.
    pub counts: Vec<(String, u64)>,
    /// One entry per failing graph: graph6 followed by a reason.
    pub violations: Vec<String>,
    pub duration: Duration,
}

impl VerificationReport {
    fn new(id: String, max_n: usize) -> Self {
        VerificationReport { id, max_n, counts: Vec::new(), violations: Vec::new(), duration: Duration::ZERO }
    }

    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn count(&self, key: &str) -> Option<u64> {
        self.counts.iter().find(|(k, _)| k == key).map(|&(_, v)| v)
    }

    fn add(&mut self, key: impl Into<String>, by: u64) {
        let key = key.into();
        match self.counts.iter_mut().find(|(k, _)| *k == key) {
            Some((_, v)) => *v += by,
            None => self.counts.push((key, by)),
        }
    }

    fn violation(&mut self, g: &Graph, reason: impl fmt::Display) {
        self.violations.push(format!("{} {reason}", graph6::encode(g)));
    }
}

/// `key value` lines; the duration is left out so equal runs print equal text.
impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "id {}", self.id)?;
        writeln!(f, "max-n {}", self.max_n)?;
        writeln!(f, "counts-source exhaustive-enumeration")?;
        for (k, v) in &self.counts {
            writeln!(f, "count {k} {v}")?;
        }
        writeln!(f, "violations {}", self.violations.len())?;
        for v in &self.violations {
            writeln!(f, "violation {v}")?;
        }
        writeln!(f, "pass {}", self.passed())
    }
}

/// Chain length, target reached, and whether the input is nonplanar.
type ChainSummary = (usize, Option<FamilyId>, bool);

fn check_max_n(max_n: usize) -> Result<(), EnumError> {
    if max_n > EXHAUSTIVE_BOUND {
        return Err(EnumError::BoundExceeded { n: max_n, bound: EXHAUSTIVE_BOUND });
    }
    Ok(())
}

/// Builds and replays a chain for every eligible graph with at most `max_n`
/// vertices. Failures are collected, never fatal.
pub fn verify_theorem(t: TheoremId, max_n: usize) -> Result<VerificationReport, EnumError> {
    check_max_n(max_n)?;
    let start = Instant::now();
    let mut report = VerificationReport::new(format!("theorem:{t}"), max_n);
    let targets: Vec<(FamilyId, Graph)> =
        t.target_ids().iter().map(|&id| (id, construct(id).expect("constructible"))).collect();
    for n in 1..=max_n {
        let graphs = enumerate_graphs(n, class_min_degree(t), |g| t.is_eligible(g))?;
        report.add(format!("eligible.n{n}"), graphs.len() as u64);
        let outcomes: Vec<Result<ChainSummary, String>> = graphs
            .par_iter()
            .map(|g| match find_chain(g, t) {
                Err(e) => Err(e.to_string()),
                Ok(chain) => {
                    let r = verify_chain(&chain);
                    if !r.is_clean() {
                        return Err(r.violations.join("; "));
                    }
                    let last = chain.last();
                    let hit = targets.iter().find(|(_, tg)| is_isomorphic(tg, last)).map(|&(id, _)| id);
                    Ok((chain.len(), hit, !is_planar(g)))
                }
            })
            .collect();
        for (g, o) in graphs.iter().zip(outcomes) {
            match o {
                Err(reason) => report.violation(g, reason),
                Ok((len, hit, nonplanar)) => {
                    report.add("steps", len as u64);
                    if let Some(id) = hit {
                        report.add(format!("terminal.{id}"), 1);
                    }
                    if nonplanar {
                        report.add("nonplanar-inputs", 1);
                    }
                }
            }
        }
    }
    report.duration = start.elapsed();
    Ok(report)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum LemmaId {
    Split,
    Degree,
    Side,
    PyramidUnique,
    SevenVertex,
    W4cIffEdgeBound,
    Q4cIffVertexBound,
    W4cImpliesQ4c,
    CubicTriangleCharacterization,
}

pub const ALL_LEMMAS: [LemmaId; 9] = [
    LemmaId::Split,
    LemmaId::Degree,
    LemmaId::Side,
    LemmaId::PyramidUnique,
    LemmaId::SevenVertex,
    LemmaId::W4cIffEdgeBound,
    LemmaId::Q4cIffVertexBound,
    LemmaId::W4cImpliesQ4c,
    LemmaId::CubicTriangleCharacterization,
];

impl LemmaId {
    pub fn tag(self) -> &'static str {
        match self {
            LemmaId::Split => "split",
            LemmaId::Degree => "degree",
            LemmaId::Side => "side",
            LemmaId::PyramidUnique => "pyramid-unique",
            LemmaId::SevenVertex => "seven-vertex",
            LemmaId::W4cIffEdgeBound => "w4c-iff-edgebound",
            LemmaId::Q4cIffVertexBound => "q4c-iff-vertexbound",
            LemmaId::W4cImpliesQ4c => "w4c-implies-q4c",
            LemmaId::CubicTriangleCharacterization => "cubic-triangle-characterization",
        }
    }
}

impl fmt::Display for LemmaId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

impl FromStr for LemmaId {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        ALL_LEMMAS.into_iter().find(|l| l.tag() == s).ok_or_else(|| format!("unknown lemma `{s}`"))
    }
}

/// 3-connected graphs of every order up to `max_n`.
fn three_connected(max_n: usize) -> Result<Vec<Graph>, EnumError> {
    let mut out = Vec::new();
    for n in 4..=max_n {
        out.extend(enumerate_graphs(n, 3, |g| is_k_connected(g, 3))?);
    }
    Ok(out)
}

fn si_contract(g: &Graph, x: usize, y: usize) -> Graph {
    g.contract_simplify(Edge::new(x, y)).expect("edge").0
}

/// Checks `lemma` on every graph (with every edge or triangle where the
/// statement quantifies over them) with at most `max_n` vertices.
pub fn verify_lemma(lemma: LemmaId, max_n: usize) -> Result<VerificationReport, EnumError> {
    check_max_n(max_n)?;
    let start = Instant::now();
    let mut report = VerificationReport::new(format!("lemma:{lemma}"), max_n);
    match lemma {
        LemmaId::Split | LemmaId::Degree | LemmaId::Side => {
            for k in [3usize, 4] {
                for n in k + 2..=max_n {
                    let graphs = enumerate_graphs(n, k, |_| true)?;
                    let results: Vec<(u64, Vec<String>)> =
                        graphs.par_iter().map(|g| connectivity_lemma(lemma, g, k)).collect();
                    for (g, (hyp, bad)) in graphs.iter().zip(results) {
                        report.add(format!("instances.k{k}"), hyp);
                        for b in bad {
                            report.violation(g, b);
                        }
                    }
                }
            }
        }
        LemmaId::PyramidUnique => {
            if max_n >= 7 {
                let graphs = enumerate_graphs(7, 3, is_weakly_4_connected)?;
                report.add("w4c.n7", graphs.len() as u64);
                let hits: Vec<&Graph> = graphs.iter().filter(|g| partitions_into_three_paws(g)).collect();
                report.add("three-paw-classes", hits.len() as u64);
                let pi = construct(FamilyId::Pyramid).expect("constructible");
                if hits.len() != 1 {
                    for g in &hits {
                        report.violation(g, "one of several three-paw classes");
                    }
                    if hits.is_empty() {
                        report.violation(&pi, "no weakly 4-connected 7-vertex graph splits into three paws");
                    }
                } else if !is_isomorphic(hits[0], &pi) {
                    report.violation(hits[0], "the only three-paw class is not the pyramid");
                }
            }
        }
        LemmaId::SevenVertex => {
            if max_n >= 7 {
                let pi = construct(FamilyId::Pyramid).expect("constructible");
                let kite = construct(FamilyId::Kite).expect("constructible");
                let graphs = enumerate_graphs(7, 3, is_quasi_4_connected)?;
                for g in &graphs {
                    let planar = is_planar(g);
                    report.add(if planar { "planar" } else { "nonplanar" }, 1);
                    let want = if planar { &pi } else { &kite };
                    if spanning_copy(g, want).is_none() {
                        report.violation(g, if planar { "no spanning pyramid" } else { "no spanning kite" });
                    } else if let Err(e) = seven_vertex_endgame(g) {
                        report.violation(g, e);
                    }
                }
            }
        }
        LemmaId::W4cIffEdgeBound => {
            for g in three_connected(max_n)?.iter().filter(|g| g.size() <= 9) {
                report.add("three-connected-at-most-9-edges", 1);
                if !is_weakly_4_connected(g) {
                    report.violation(g, "3-connected with at most 9 edges but not weakly 4-connected");
                }
            }
        }
        LemmaId::Q4cIffVertexBound => {
            for g in three_connected(max_n.min(6))? {
                report.add("three-connected-at-most-6-vertices", 1);
                if !is_quasi_4_connected(&g) {
                    report.violation(&g, "3-connected on at most 6 vertices but not quasi 4-connected");
                }
            }
        }
        LemmaId::W4cImpliesQ4c => {
            for g in three_connected(max_n)? {
                let (w, q) = (is_weakly_4_connected(&g), is_quasi_4_connected(&g));
                report.add("three-connected", 1);
                if w {
                    report.add("weak", 1);
                }
                if q && !w {
                    report.add("quasi-not-weak", 1);
                }
                if w && !q {
                    report.violation(&g, "weakly but not quasi 4-connected");
                }
            }
        }
        LemmaId::CubicTriangleCharacterization => {
            for g in three_connected(max_n)?.iter().filter(|g| g.size() >= 10 && is_quasi_4_connected(g)) {
                report.add("quasi-at-least-10-edges", 1);
                let cubic_ok = (0..g.order()).all(|v| g.degree(v) != 3 || g.triangles_at(v) <= 1);
                if cubic_ok != is_weakly_4_connected(g) {
                    report.violation(g, format!("cubic-triangle condition {cubic_ok} disagrees with weak 4-connectivity"));
                }
            }
        }
    }
    report.duration = start.elapsed();
    Ok(report)
}

/// Number of hypothesis instances and the failures among them.
fn connectivity_lemma(lemma: LemmaId, g: &Graph, k: usize) -> (u64, Vec<String>) {
    let mut hyp = 0;
    let mut bad = Vec::new();
    let g_kc = is_k_connected(g, k);
    if lemma != LemmaId::Split && !g_kc {
        return (0, bad);
    }
    for e in g.edges() {
        for (x, y) in [(e.u, e.v), (e.v, e.u)] {
            match lemma {
                LemmaId::Split => {
                    if x > y || g.degree(x).min(g.degree(y)) < k || !is_k_connected(&si_contract(g, x, y), k) {
                        continue;
                    }
                    hyp += 1;
                    if !g_kc {
                        bad.push(format!("split k={k} edge {x} {y}: G not {k}-connected"));
                    }
                }
                LemmaId::Degree => {
                    let common = g.neighbors(x) & g.neighbors(y);
                    if common == 0 || !is_k_connected(&si_contract(g, x, y), k) {
                        continue;
                    }
                    for z in crate::bits::Bits(common) {
                        if is_k_connected(&g.delete_edge(Edge::new(x, z)).expect("edge"), k) {
                            continue;
                        }
                        hyp += 1;
                        if g.degree(x) != k || g.degree(z) <= k {
                            bad.push(format!("degree k={k} triangle {x} {y} {z}"));
                        }
                    }
                }
                _ => {
                    let diff = g.neighbors(x) & !g.neighbors(y);
                    if diff.count_ones() != 2 || !is_k_connected(&si_contract(g, x, y), k) {
                        continue;
                    }
                    let z = crate::bits::Bits(diff & !crate::bits::bit(y)).next().expect("two elements");
                    hyp += 1;
                    if !is_k_connected(&si_contract(g, x, z), k) {
                        bad.push(format!("side k={k} x {x} y {y} z {z}"));
                    }
                }
            }
        }
    }
    (hyp, bad)
}

/// Whether the edges split into three edge-disjoint paws.
pub fn partitions_into_three_paws(g: &Graph) -> bool {
    if g.size() != 12 {
        return false;
    }
    let paws = find_paws(g);
    let mask = |p: &Paw| -> u64 {
        let edges = g.edges();
        p.edges().iter().fold(0u64, |m, e| m | 1 << edges.iter().position(|f| f == e).expect("paw edge"))
    };
    let masks: Vec<u64> = paws.iter().map(mask).collect();
    for i in 0..masks.len() {
        for j in i + 1..masks.len() {
            if masks[i] & masks[j] != 0 {
                continue;
            }
            for l in j + 1..masks.len() {
                if masks[l] & (masks[i] | masks[j]) == 0 {
                    return true;
                }
            }
        }
    }
    false
}

/// Canonical forms of a graph list, for set comparisons.
pub fn canonical_set(graphs: &[Graph]) -> std::collections::BTreeSet<String> {
    graphs.iter().map(|g| canonical_form(g).as_str().to_string()).collect()
}
