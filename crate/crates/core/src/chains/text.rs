//! Line-oriented chain format.
//!
//! ```text
//! theorem q4c
//! g0 <graph6>
//! del 0 3 -> <graph6>
//! con 1 4 -> <graph6>
//! o3 w x y z -> <graph6>
//! ```

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use super::{Chain, ChainStep, StepKind, TheoremId};
use crate::graph::Edge;
use crate::graph6;
use crate::operations::{O1Witness, O2Witness, O3Witness};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("line {line}: {message}")]
pub struct ChainParseError {
    pub line: usize,
    pub message: String,
}

fn err(line: usize, message: impl Into<String>) -> ChainParseError {
    ChainParseError { line, message: message.into() }
}

impl fmt::Display for StepKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            StepKind::Delete(e) => write!(f, "del {} {}", e.u, e.v),
            StepKind::ContractTriangleFree(e) => write!(f, "con {} {}", e.u, e.v),
            StepKind::O1(w) => write!(f, "o1 {w}"),
            StepKind::O2(w) => write!(f, "o2 {w}"),
            StepKind::O3(w) => write!(f, "o3 {w}"),
        }
    }
}

impl fmt::Display for Chain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "theorem {}", self.theorem)?;
        writeln!(f, "g0 {}", graph6::encode(&self.graphs[0]))?;
        for step in &self.steps {
            writeln!(f, "{} -> {}", step.kind, graph6::encode(&step.result))?;
        }
        Ok(())
    }
}

fn parse_kind(line: usize, head: &str) -> Result<StepKind, ChainParseError> {
    let mut words = head.split_whitespace();
    let op = words.next().ok_or_else(|| err(line, "empty step"))?;
    let nums = words
        .map(|w| w.parse::<usize>().map_err(|_| err(line, format!("bad vertex `{w}`"))))
        .collect::<Result<Vec<_>, _>>()?;
    let want = match op {
        "del" | "con" => 2,
        "o1" => 3,
        "o2" => 7,
        "o3" => 4,
        other => return Err(err(line, format!("unknown step `{other}`"))),
    };
    if nums.len() != want {
        return Err(err(line, format!("`{op}` takes {want} vertices, got {}", nums.len())));
    }
    let edge = || {
        if nums[0] == nums[1] {
            Err(err(line, "edge endpoints coincide"))
        } else {
            Ok(Edge::new(nums[0], nums[1]))
        }
    };
    Ok(match op {
        "del" => StepKind::Delete(edge()?),
        "con" => StepKind::ContractTriangleFree(edge()?),
        "o1" => StepKind::O1(O1Witness { x: nums[0], y: nums[1], z: nums[2] }),
        "o2" => StepKind::O2(O2Witness {
            w: nums[0],
            x: nums[1],
            y: nums[2],
            z: nums[3],
            w2: nums[4],
            x2: nums[5],
            y2: nums[6],
        }),
        _ => StepKind::O3(O3Witness { w: nums[0], x: nums[1], y: nums[2], z: nums[3] }),
    })
}

impl FromStr for Chain {
    type Err = ChainParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let mut lines = s
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.trim()))
            .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
        let (ln, first) = lines.next().ok_or_else(|| err(1, "missing `theorem` line"))?;
        let tag = first.strip_prefix("theorem ").ok_or_else(|| err(ln, "expected `theorem <tag>`"))?;
        let theorem =
            TheoremId::from_tag(tag.trim()).ok_or_else(|| err(ln, format!("unknown theorem `{}`", tag.trim())))?;
        let (ln, second) = lines.next().ok_or_else(|| err(ln + 1, "missing `g0` line"))?;
        let g6 = second.strip_prefix("g0 ").ok_or_else(|| err(ln, "expected `g0 <graph6>`"))?;
        let g0 = graph6::decode(g6.trim()).map_err(|e| err(ln, e.to_string()))?;
        let mut chain = Chain::start(theorem, g0);
        for (ln, l) in lines {
            let (head, tail) = l.split_once("->").ok_or_else(|| err(ln, "expected `<step> -> <graph6>`"))?;
            let kind = parse_kind(ln, head)?;
            let result = graph6::decode(tail.trim()).map_err(|e| err(ln, e.to_string()))?;
            chain.push(ChainStep { kind, result });
        }
        Ok(chain)
    }
}
