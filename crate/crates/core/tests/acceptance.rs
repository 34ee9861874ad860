//! Acceptance suite: one line per criterion, nonzero exit if any fails.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use chainthm::chains::{TheoremId, ALL_THEOREMS};
use chainthm::connectivity::{is_k_connected, is_k_connected_brute, is_quasi_4_connected, is_weakly_4_connected};
use chainthm::enumeration::{
    canonical_form, canonical_set, degree_only_closure, enumerate_graphs, generate_from_base, verify_lemma,
    verify_theorem, GenerationMode, LemmaId, VerificationReport,
};
use chainthm::families::{construct, FamilyId};
use chainthm::{graph6, Graph};
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// Largest order for the theorem runs.
const THEOREM_MAX_N: usize = 8;
/// Largest order for the lemma, generation and infrastructure runs.
const LEMMA_MAX_N: usize = 7;
/// Wall-clock budget for the 3-connected theorem run.
const TUTTE_BUDGET: Duration = Duration::from_secs(600);
/// Random relabelings per graph in the canonical form check.
const RELABELINGS: usize = 1000;
const SEED: u64 = 0x5eed_c4a1;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn report_outcome(r: &VerificationReport) -> Outcome {
    let summary = r.counts.iter().map(|(k, v)| format!("{k}={v}")).collect::<Vec<_>>().join(" ");
    if r.passed() {
        Ok(summary)
    } else {
        Err(format!("{} violations, first: {}", r.violations.len(), r.violations[0]))
    }
}

fn theorem(t: TheoremId) -> Outcome {
    let r = verify_theorem(t, THEOREM_MAX_N).map_err(|e| e.to_string())?;
    report_outcome(&r)
}

fn c1() -> Outcome {
    let start = Instant::now();
    let detail = theorem(TheoremId::TuttePlus)?;
    let took = start.elapsed();
    if took > TUTTE_BUDGET {
        return Err(format!("took {took:?}, budget {TUTTE_BUDGET:?}"));
    }
    Ok(format!("{detail} in {:.1}s", took.as_secs_f64()))
}

fn c2() -> Outcome {
    let r = verify_theorem(TheoremId::FourConn, THEOREM_MAX_N).map_err(|e| e.to_string())?;
    let detail = report_outcome(&r)?;
    let nonplanar = r.count("nonplanar-inputs").unwrap_or(0);
    let at_b4p = r.count("terminal.biwheel(4,axle)").unwrap_or(0);
    if at_b4p < nonplanar {
        return Err(format!("{nonplanar} nonplanar inputs but {at_b4p} chains end at B4+"));
    }
    Ok(detail)
}

fn c5() -> Outcome {
    report_outcome(&verify_lemma(LemmaId::SevenVertex, LEMMA_MAX_N).map_err(|e| e.to_string())?)
}

fn c6() -> Outcome {
    let r = verify_lemma(LemmaId::PyramidUnique, LEMMA_MAX_N).map_err(|e| e.to_string())?;
    let detail = report_outcome(&r)?;
    match r.count("three-paw-classes") {
        Some(1) => Ok(detail),
        other => Err(format!("three-paw classes: {other:?}")),
    }
}

fn c7() -> Outcome {
    let mut parts = Vec::new();
    for l in [LemmaId::Split, LemmaId::Degree, LemmaId::Side] {
        let r = verify_lemma(l, LEMMA_MAX_N).map_err(|e| e.to_string())?;
        parts.push(format!("{l}: {}", report_outcome(&r).map_err(|e| format!("{l}: {e}"))?));
    }
    Ok(parts.join("; "))
}

fn c8() -> Outcome {
    let mut parts = Vec::new();
    for (l, n) in [
        (LemmaId::W4cIffEdgeBound, THEOREM_MAX_N),
        (LemmaId::Q4cIffVertexBound, 6),
        (LemmaId::CubicTriangleCharacterization, THEOREM_MAX_N),
        (LemmaId::W4cImpliesQ4c, THEOREM_MAX_N),
    ] {
        let r = verify_lemma(l, n).map_err(|e| e.to_string())?;
        parts.push(format!("{l}: {}", report_outcome(&r).map_err(|e| format!("{l}: {e}"))?));
    }
    let w5 = construct(FamilyId::Wheel(5)).map_err(|e| e.to_string())?;
    if !is_quasi_4_connected(&w5) || is_weakly_4_connected(&w5) {
        return Err("W5 is not quasi-but-not-weakly 4-connected".into());
    }
    Ok(parts.join("; "))
}

fn eligible_up_to(t: TheoremId, max_n: usize) -> Result<Vec<Graph>, String> {
    let mut out = Vec::new();
    for n in 1..=max_n {
        out.extend(enumerate_graphs(n, 0, |g| t.is_eligible(g) || t.is_target(g)).map_err(|e| e.to_string())?);
    }
    Ok(out)
}

fn c9() -> Outcome {
    let mut parts = Vec::new();
    for t in ALL_THEOREMS {
        let generated = generate_from_base(t, LEMMA_MAX_N, GenerationMode::ClassChecked).map_err(|e| e.to_string())?;
        let expected = eligible_up_to(t, LEMMA_MAX_N)?;
        let (a, b) = (canonical_set(&generated), canonical_set(&expected));
        if a != b {
            return Err(format!(
                "{t}: generated {} vs enumerated {} ({} missing, {} extra)",
                a.len(),
                b.len(),
                b.difference(&a).count(),
                a.difference(&b).count()
            ));
        }
        parts.push(format!("{t}={}", a.len()));
    }
    let checked = generate_from_base(TheoremId::FourConn, LEMMA_MAX_N, GenerationMode::ClassChecked)
        .map_err(|e| e.to_string())?;
    let degree = generate_from_base(TheoremId::FourConn, LEMMA_MAX_N, GenerationMode::DegreeOnly)
        .map_err(|e| e.to_string())?;
    if canonical_set(&checked) != canonical_set(&degree) {
        return Err("degree-only and class-checked sets differ".into());
    }
    let raw = degree_only_closure(LEMMA_MAX_N).map_err(|e| e.to_string())?;
    if let Some(g) = raw.iter().find(|g| !is_k_connected(g, 4)) {
        return Err(format!("degree-only closure holds {} which is not 4-connected", graph6::encode(g)));
    }
    parts.push(format!("degree-only={} raw={}", degree.len(), raw.len()));
    Ok(parts.join(" "))
}

fn c10() -> Outcome {
    let mut round_trips = 0;
    for n in 0..=THEOREM_MAX_N {
        for g in enumerate_graphs(n, 0, |_| true).map_err(|e| e.to_string())? {
            let s = graph6::encode(&g);
            let back = graph6::decode(&s).map_err(|e| format!("{s}: {e}"))?;
            if back != g || graph6::encode(&back) != s {
                return Err(format!("graph6 round trip fails on {s}"));
            }
            round_trips += 1;
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    let mut relabeled = 0;
    let mut conn_checks = 0;
    for n in 1..=LEMMA_MAX_N {
        for g in enumerate_graphs(n, 0, |_| true).map_err(|e| e.to_string())? {
            let form = canonical_form(&g);
            let mut perm: Vec<usize> = (0..n).collect();
            for _ in 0..RELABELINGS {
                perm.shuffle(&mut rng);
                if canonical_form(&g.relabel(&perm)) != form {
                    return Err(format!("canonical form of {} changes under {perm:?}", graph6::encode(&g)));
                }
                relabeled += 1;
            }
            for k in 1..=4 {
                if is_k_connected(&g, k) != is_k_connected_brute(&g, k) {
                    return Err(format!("{}-connectivity of {} disagrees with brute force", k, graph6::encode(&g)));
                }
                conn_checks += 1;
            }
        }
    }
    Ok(format!("graph6={round_trips} relabelings={relabeled} connectivity={conn_checks}"))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 10] = [
        ("3-connected non-wheels reach W4 by single-edge steps", c1),
        ("4-connected graphs reach B4+ or B5, nonplanar ones B4+", c2),
        ("weakly 4-connected graphs reach K33+ or the pyramid", || theorem(TheoremId::Weak4)),
        ("quasi 4-connected graphs reach the pyramid or the kite", || theorem(TheoremId::Quasi4)),
        ("seven-vertex quasi 4-connected graphs span the pyramid or the kite", c5),
        ("the pyramid is the only three-paw weakly 4-connected 7-vertex graph", c6),
        ("split, degree and side lemmas", c7),
        ("weak and quasi 4-connectivity equivalences", c8),
        ("generation from targets matches enumeration", c9),
        ("graph6, canonical form and connectivity infrastructure", c10),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = run();
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("[PASS] {}. {name} ({detail}) [{secs:.1}s]", i + 1),
            Err(why) => {
                failed += 1;
                println!("[FAIL] {}. {name}: {why} [{secs:.1}s]", i + 1);
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
