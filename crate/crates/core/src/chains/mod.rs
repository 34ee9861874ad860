//! Chains of reductions down to a theorem's target graphs.
//!
//! Each [`TheoremId`] fixes a graph class, the graphs excluded as inputs, the
//! graphs a single step may not land on, the targets, and the special
//! operation it allows besides single-edge deletion and contraction.

mod text;

use std::fmt;
use std::sync::OnceLock;

use thiserror::Error;

use crate::connectivity::{is_k_connected, is_quasi_4_connected, is_weakly_4_connected};
use crate::enumeration::{canonical_form, CanonicalForm};
use crate::families::{
    construct, in_biwheels, in_ladders, in_line_graphs, in_squared_cycles, is_planar, is_wheel, recognize,
    FamilyId,
};
use crate::graph::{Edge, Graph};
use crate::graph6;
use crate::operations::{
    apply_o1, apply_o2, apply_o3, find_o1_sites, find_o2_sites, find_o3_sites, O1Witness, O2Witness, O3Witness,
};

pub use text::ChainParseError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum TheoremId {
    /// 3-connected non-wheels reduce to `W4` one edge at a time.
    TuttePlus,
    /// 4-connected graphs outside biwheels, squared cycles and line graphs reduce to `B4+` or `B5`.
    FourConn,
    /// Weakly 4-connected graphs reduce to `K33+` or the pyramid.
    Weak4,
    /// Quasi 4-connected graphs on seven or more vertices reduce to the pyramid or the kite.
    Quasi4,
}

pub const ALL_THEOREMS: [TheoremId; 4] = [TheoremId::TuttePlus, TheoremId::FourConn, TheoremId::Weak4, TheoremId::Quasi4];

impl TheoremId {
    pub fn tag(self) -> &'static str {
        match self {
            TheoremId::TuttePlus => "tutte+",
            TheoremId::FourConn => "4c",
            TheoremId::Weak4 => "w4c",
            TheoremId::Quasi4 => "q4c",
        }
    }

    pub fn from_tag(tag: &str) -> Option<Self> {
        ALL_THEOREMS.into_iter().find(|t| t.tag() == tag)
    }

    pub fn in_class(self, g: &Graph) -> bool {
        match self {
            TheoremId::TuttePlus => is_k_connected(g, 3),
            TheoremId::FourConn => is_k_connected(g, 4),
            TheoremId::Weak4 => is_weakly_4_connected(g),
            TheoremId::Quasi4 => is_quasi_4_connected(g),
        }
    }

    pub fn target_ids(self) -> &'static [FamilyId] {
        match self {
            TheoremId::TuttePlus => &[FamilyId::Wheel(4)],
            TheoremId::FourConn => &[FamilyId::Biwheel { n: 4, axle: true }, FamilyId::Biwheel { n: 5, axle: false }],
            TheoremId::Weak4 => &[FamilyId::K33Plus, FamilyId::Pyramid],
            TheoremId::Quasi4 => &[FamilyId::Pyramid, FamilyId::Kite],
        }
    }

    pub fn targets(self) -> Vec<Graph> {
        self.target_ids().iter().map(|&id| construct(id).expect("targets are constructible")).collect()
    }

    fn target_forms(self) -> &'static [(usize, usize, CanonicalForm)] {
        static FORMS: [OnceLock<Vec<(usize, usize, CanonicalForm)>>; 4] =
            [OnceLock::new(), OnceLock::new(), OnceLock::new(), OnceLock::new()];
        FORMS[self as usize].get_or_init(|| {
            self.targets().iter().map(|t| (t.order(), t.size(), canonical_form(t))).collect()
        })
    }

    pub fn is_target(self, g: &Graph) -> bool {
        let forms = self.target_forms();
        let (n, m) = (g.order(), g.size());
        if !forms.iter().any(|(tn, tm, _)| *tn == n && *tm == m) {
            return false;
        }
        let form = canonical_form(g);
        forms.iter().any(|(_, _, f)| *f == form)
    }

    /// Graphs in the class that the theorem does not cover as inputs.
    pub fn is_excluded_input(self, g: &Graph) -> bool {
        match self {
            TheoremId::TuttePlus => is_wheel(g),
            TheoremId::FourConn => in_biwheels(g, 4) || in_squared_cycles(g) || in_line_graphs(g),
            TheoremId::Weak4 => weak4_excluded(g),
            TheoremId::Quasi4 => g.order() <= 6 || in_ladders(g, 4),
        }
    }

    /// Graphs a single step may not land on, unless they are targets.
    pub fn is_excluded_step(self, h: &Graph) -> bool {
        match self {
            TheoremId::TuttePlus => is_wheel(h),
            TheoremId::FourConn => in_biwheels(h, 4) || in_squared_cycles(h) || in_line_graphs(h),
            TheoremId::Weak4 => weak4_excluded(h),
            TheoremId::Quasi4 => {
                let small = h.order() <= 7
                    && recognize(h).iter().any(|id| {
                        matches!(id, FamilyId::Wheel(3..=5) | FamilyId::Biwheel { n: 3, .. })
                    });
                small || in_ladders(h, 4)
            }
        }
    }

    /// Class member outside the excluded inputs.
    pub fn is_eligible(self, g: &Graph) -> bool {
        self.in_class(g) && !self.is_excluded_input(g)
    }

    pub fn allows(self, kind: &StepKind) -> bool {
        match kind {
            StepKind::Delete(_) | StepKind::ContractTriangleFree(_) => true,
            StepKind::O1(_) => self == TheoremId::FourConn,
            StepKind::O2(_) => self == TheoremId::Weak4,
            StepKind::O3(_) => self == TheoremId::Quasi4,
        }
    }
}

impl fmt::Display for TheoremId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

fn weak4_excluded(g: &Graph) -> bool {
    let n = g.order();
    if n <= 6 {
        let ids = recognize(g);
        if ids.iter().any(|id| {
            matches!(id, FamilyId::Wheel(3) | FamilyId::Wheel(4) | FamilyId::K6 | FamilyId::K6Minus)
        }) {
            return true;
        }
    }
    in_ladders(g, 3) || in_biwheels(g, 3)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum StepKind {
    Delete(Edge),
    ContractTriangleFree(Edge),
    O1(O1Witness),
    O2(O2Witness),
    O3(O3Witness),
}

impl StepKind {
    /// Replays the step; `None` if it does not apply to `g`.
    pub fn apply(&self, g: &Graph) -> Option<Graph> {
        match *self {
            StepKind::Delete(e) => g.delete_edge(e).ok(),
            StepKind::ContractTriangleFree(e) => {
                let (h, removed) = g.contract_simplify(e).ok()?;
                removed.is_empty().then_some(h)
            }
            StepKind::O1(w) => apply_o1(g, w).ok(),
            StepKind::O2(w) => apply_o2(g, w).ok(),
            StepKind::O3(w) => apply_o3(g, w).ok(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChainStep {
    pub kind: StepKind,
    pub result: Graph,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Chain {
    pub theorem: TheoremId,
    /// `G_0 ... G_t`; `graphs[i + 1] == steps[i].result`.
    pub graphs: Vec<Graph>,
    pub steps: Vec<ChainStep>,
}

impl Chain {
    pub fn start(theorem: TheoremId, g0: Graph) -> Self {
        Chain { theorem, graphs: vec![g0], steps: Vec::new() }
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    pub fn last(&self) -> &Graph {
        self.graphs.last().expect("a chain has a first graph")
    }

    fn push(&mut self, step: ChainStep) {
        self.graphs.push(step.result.clone());
        self.steps.push(step);
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ChainError {
    #[error("input not covered by {theorem}: {reason} (graph {graph6})")]
    IneligibleInput { theorem: TheoremId, reason: &'static str, graph6: String },
    #[error("no admissible step under {theorem} from eligible non-target graph {graph6}")]
    TheoremViolation { theorem: TheoremId, graph6: String },
    #[error("seven-vertex graph {graph6} has no spanning {expected}")]
    SpanningTargetMissing { expected: &'static str, graph6: String },
}

/// Single steps from `g` that stay in the class and avoid the step exclusions,
/// in the order deletions, triangle-free contractions, special operation.
pub fn step_candidates(g: &Graph, t: TheoremId) -> Vec<ChainStep> {
    let mut out = Vec::new();
    for_each_candidate(g, t, |step| {
        out.push(step);
        true
    });
    out
}

/// Every raw step in canonical order, before class and exclusion filtering.
fn raw_steps(g: &Graph, t: TheoremId) -> Vec<StepKind> {
    let mut kinds: Vec<StepKind> = g.edges().into_iter().map(StepKind::Delete).collect();
    for e in g.edges() {
        if g.neighbors(e.u) & g.neighbors(e.v) == 0 {
            kinds.push(StepKind::ContractTriangleFree(e));
        }
    }
    match t {
        TheoremId::TuttePlus => {}
        TheoremId::FourConn => kinds.extend(find_o1_sites(g).into_iter().map(StepKind::O1)),
        TheoremId::Weak4 => kinds.extend(find_o2_sites(g).into_iter().map(StepKind::O2)),
        TheoremId::Quasi4 => kinds.extend(find_o3_sites(g).into_iter().map(StepKind::O3)),
    }
    kinds
}

/// Whether `h`, reached from `g` in one step, is admissible under `t`.
pub fn admissible_step(g: &Graph, h: &Graph, t: TheoremId) -> bool {
    if t == TheoremId::FourConn && !is_planar(g) && is_planar(h) {
        return false;
    }
    if t == TheoremId::FourConn && h.min_degree() < 4 {
        return false;
    }
    t.in_class(h) && (t.is_target(h) || !t.is_excluded_step(h))
}

fn for_each_candidate(g: &Graph, t: TheoremId, mut f: impl FnMut(ChainStep) -> bool) {
    for kind in raw_steps(g, t) {
        let h = kind.apply(g).expect("raw steps apply");
        if admissible_step(g, &h, t) && !f(ChainStep { kind, result: h }) {
            return;
        }
    }
}

fn first_candidate(g: &Graph, t: TheoremId) -> Option<ChainStep> {
    let mut found = None;
    for_each_candidate(g, t, |step| {
        found = Some(step);
        false
    });
    found
}

/// Greedy chain from an eligible `g` to one of the theorem's targets.
pub fn find_chain(g: &Graph, t: TheoremId) -> Result<Chain, ChainError> {
    let ineligible = |reason| ChainError::IneligibleInput { theorem: t, reason, graph6: graph6::encode(g) };
    if !t.in_class(g) {
        return Err(ineligible("not in the theorem's graph class"));
    }
    if t.is_excluded_input(g) {
        return Err(ineligible("in an excluded family"));
    }
    let mut chain = Chain::start(t, g.clone());
    loop {
        let cur = chain.last().clone();
        if t.is_target(&cur) {
            return Ok(chain);
        }
        if t == TheoremId::Quasi4 && cur.order() == 7 {
            let tail = seven_vertex_endgame(&cur)?;
            for step in tail.steps {
                chain.push(step);
            }
            return Ok(chain);
        }
        match first_candidate(&cur, t) {
            Some(step) => chain.push(step),
            None => return Err(ChainError::TheoremViolation { theorem: t, graph6: graph6::encode(&cur) }),
        }
    }
}

/// Deletes edges from a quasi 4-connected 7-vertex graph down to a spanning
/// pyramid (planar input) or kite (nonplanar input).
pub fn seven_vertex_endgame(g: &Graph) -> Result<Chain, ChainError> {
    if g.order() != 7 || !is_quasi_4_connected(g) {
        return Err(ChainError::IneligibleInput {
            theorem: TheoremId::Quasi4,
            reason: "the endgame needs a quasi 4-connected graph on seven vertices",
            graph6: graph6::encode(g),
        });
    }
    let (id, name) = if is_planar(g) { (FamilyId::Pyramid, "pyramid") } else { (FamilyId::Kite, "kite") };
    let target = construct(id).expect("sporadic graphs are constructible");
    let Some(image) = spanning_copy(g, &target) else {
        return Err(ChainError::SpanningTargetMissing { expected: name, graph6: graph6::encode(g) });
    };
    let mut chain = Chain::start(TheoremId::Quasi4, g.clone());
    for e in g.edges() {
        if !image.has_edge(e.u, e.v) {
            let result = chain.last().delete_edge(e).expect("edge still present");
            chain.push(ChainStep { kind: StepKind::Delete(e), result });
        }
    }
    Ok(chain)
}

/// The first spanning subgraph of `g` isomorphic to `t`, in the labeling of `g`,
/// trying vertex maps in lexicographic order.
pub(crate) fn spanning_copy(g: &Graph, t: &Graph) -> Option<Graph> {
    let n = g.order();
    if t.order() != n || t.size() > g.size() {
        return None;
    }
    let mut map = vec![usize::MAX; n];
    fn extend(g: &Graph, t: &Graph, map: &mut Vec<usize>, k: usize, used: u64) -> bool {
        let n = g.order();
        if k == n {
            return true;
        }
        for v in 0..n {
            if used >> v & 1 == 1 {
                continue;
            }
            // every earlier t-neighbor of k must map to a g-neighbor of v
            let ok = (0..k).all(|j| !t.has_edge(j, k) || g.has_edge(map[j], v));
            if ok {
                map[k] = v;
                if extend(g, t, map, k + 1, used | 1 << v) {
                    return true;
                }
            }
        }
        false
    }
    if !extend(g, t, &mut map, 0, 0) {
        return None;
    }
    Some(t.relabel(&map))
}

/// Outcome of replaying a chain.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ChainReport {
    pub violations: Vec<String>,
}

impl ChainReport {
    pub fn is_clean(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Replays `c` from `G_0` and re-checks every condition of its theorem.
pub fn verify_chain(c: &Chain) -> ChainReport {
    let t = c.theorem;
    let mut v = Vec::new();
    if c.graphs.len() != c.steps.len() + 1 {
        v.push(format!("{} graphs for {} steps", c.graphs.len(), c.steps.len()));
        return ChainReport { violations: v };
    }
    let g0 = &c.graphs[0];
    if t.is_excluded_input(g0) {
        v.push(format!("G_0 {} is an excluded input", graph6::encode(g0)));
    }
    for (i, g) in c.graphs.iter().enumerate() {
        if !t.in_class(g) {
            v.push(format!("G_{i} {} is not in the class of {t}", graph6::encode(g)));
        }
    }
    for (i, step) in c.steps.iter().enumerate() {
        let prev = &c.graphs[i];
        let idx = i + 1;
        if !t.allows(&step.kind) {
            v.push(format!("step {idx} uses an operation {t} does not allow"));
        }
        match step.kind.apply(prev) {
            None => v.push(format!("step {idx} does not apply to G_{i}")),
            Some(h) => {
                if h != step.result || h != c.graphs[idx] {
                    v.push(format!("step {idx} replays to {} not {}", graph6::encode(&h), graph6::encode(&step.result)));
                }
            }
        }
        let cur = &c.graphs[idx];
        if idx < c.steps.len() && !t.is_target(cur) && t.is_excluded_step(cur) {
            v.push(format!("G_{idx} {} lies in an excluded family", graph6::encode(cur)));
        }
        if t == TheoremId::FourConn && !is_planar(prev) && is_planar(cur) {
            v.push(format!("step {idx} turns a nonplanar graph planar"));
        }
    }
    let last = c.graphs.last().expect("checked length");
    if !t.is_target(last) {
        v.push(format!("terminal graph {} is not a target of {t}", graph6::encode(last)));
    }
    if t == TheoremId::FourConn && !is_planar(g0) {
        let b4p = construct(FamilyId::Biwheel { n: 4, axle: true }).expect("constructible");
        if last.order() != b4p.order() || canonical_form(last) != canonical_form(&b4p) {
            v.push("nonplanar G_0 does not end at B4+".to_string());
        }
    }
    ChainReport { violations: v }
}
