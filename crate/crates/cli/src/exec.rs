//! Runs scenario queries against a built instance.

use std::collections::BTreeSet;

use serde_json::json;

use gspace::action::verify_axioms;
use gspace::laws::{
    distributive_image_law, induced_distributivity_criterion, is_distributive, left_translation_counterexample,
    normalizer_criterion_finite, normalizer_criterion_matrix, NormalizerReport,
};
use gspace::orbit::{is_bi_invariant, orbit_layers, orbits_intersect, Intersection};
use gspace::{BinaryAction, DWord, Mat2, Verdict};

use crate::error::CliError;
use crate::report::{Entry, Report};
use crate::scenario::{ConjAction, ConjKind, FiniteContext, Instance, Limits, Query, Scenario};

macro_rules! with_conj {
    ($conj:expr, $a:ident => $body:expr) => {
        match $conj {
            ConjAction::One($a) => $body,
            ConjAction::Two($a) => $body,
        }
    };
}

pub fn render_set<A: BinaryAction>(action: &A, set: &BTreeSet<A::Point>) -> String {
    let items: Vec<String> = set.iter().map(|p| action.render(p)).collect();
    format!("{{{}}}", items.join(", "))
}

fn verdict_word(v: Verdict) -> &'static str {
    match v {
        Verdict::Holds => "holds",
        Verdict::Fails => "fails",
    }
}

/// Normalises point names for lookup: whitespace is ignored.
fn squash(s: &str) -> String {
    s.chars().filter(|c| !c.is_whitespace()).collect()
}

fn finite_parser(names: &[String]) -> impl Fn(&str) -> Result<usize, CliError> + '_ {
    move |text| {
        let wanted = squash(text);
        names
            .iter()
            .position(|n| squash(n) == wanted)
            .ok_or_else(|| CliError::Validation(format!("unknown point {text:?}")))
    }
}

fn matrix_parser(text: &str) -> Result<Mat2, CliError> {
    Ok(text.parse::<Mat2>()?)
}

fn word_parser(text: &str) -> Result<DWord, CliError> {
    Ok(text.parse::<DWord>()?)
}

fn domain<A: BinaryAction>(
    action: &A,
    listed: &[String],
    parse: &dyn Fn(&str) -> Result<A::Point, CliError>,
) -> Result<Vec<A::Point>, CliError> {
    if listed.is_empty() {
        action.points().ok_or_else(|| CliError::Validation("an infinite carrier needs an explicit domain".into()))
    } else {
        listed.iter().map(|t| parse(t)).collect()
    }
}

/// Queries that only need the action itself.
fn run_generic<A: BinaryAction>(
    action: &A,
    query: &Query,
    limits: &Limits,
    parse: &dyn Fn(&str) -> Result<A::Point, CliError>,
) -> Result<Option<Entry>, CliError> {
    let mut entry = Entry::new(query.name());
    let r = |p: &A::Point| action.render(p);
    match query {
        Query::VerifyAxioms { domain: listed, expect } => {
            let points = domain(action, listed, parse)?;
            let report = verify_axioms(action, &points)?;
            let verdict = Verdict::from_bool(report.holds());
            entry.line(format!(
                "{} over {} points: {} composition and {} identity violations",
                verdict_word(verdict),
                points.len(),
                report.eq1_violations.len(),
                report.eq2_violations.len()
            ));
            if let Some(v) = report.eq1_violations.first() {
                let (g, h) = (action.group().name(v.g), action.group().name(v.h));
                entry.line(format!(
                    "first: ({g}{h})({}, {}) = {} but {g}({}, {h}({}, {})) = {}",
                    r(&v.x1),
                    r(&v.x2),
                    r(&v.lhs),
                    r(&v.x1),
                    r(&v.x1),
                    r(&v.x2),
                    r(&v.rhs)
                ));
            }
            if let Some(v) = report.eq2_violations.first() {
                entry.line(format!("first: e({}, {}) = {}", r(&v.x1), r(&v.x2), r(&v.value)));
            }
            entry.data = json!({
                "verdict": verdict,
                "points": points.len(),
                "composition_violations": report.eq1_violations.len(),
                "identity_violations": report.eq2_violations.len(),
            });
            if let Some(e) = expect {
                entry.check("verdict", verdict_word(*e), verdict_word(verdict));
            }
        }
        Query::Orbit { point, max_depth, expect_layers, expect_converged_at } => {
            let x = parse(point)?;
            let depth = max_depth.unwrap_or(limits.max_depth);
            let layers = orbit_layers(action, &x, depth)?;
            let rendered: Vec<String> = layers.layers.iter().map(|l| render_set(action, l)).collect();
            for (k, layer) in rendered.iter().enumerate() {
                entry.line(format!("G^{}({p}, {p}) = {layer}", k + 1, p = r(&x)));
            }
            match layers.converged_at() {
                Some(n) => {
                    entry.line(format!("orbit finitely generated: [{}] = G^{n}, {} points", r(&x), layers.last().len()))
                }
                None => entry.line(format!("no fixpoint within {depth} layers; sizes {:?}", layers.sizes())),
            };
            entry.data = json!({
                "point": r(&x),
                "layers": layers.layers.iter().map(|l| l.iter().map(r).collect::<Vec<_>>()).collect::<Vec<_>>(),
                "sizes": layers.sizes(),
                "converged_at": layers.converged_at(),
            });
            if let Some(expected) = expect_layers {
                for (k, want) in expected.iter().enumerate() {
                    let want: BTreeSet<A::Point> = want.iter().map(|t| parse(t)).collect::<Result<_, _>>()?;
                    let got = rendered.get(k).cloned().unwrap_or_else(|| "(not computed)".into());
                    entry.check(format!("layer {}", k + 1), render_set(action, &want), got);
                }
            }
            if let Some(n) = expect_converged_at {
                let got = layers.converged_at().map_or("none".to_string(), |c| c.to_string());
                entry.check("converged_at", n, got);
            }
        }
        Query::Intersect { x, y, max_depth, expect_witness, expect_disjoint } => {
            let (px, py) = (parse(x)?, parse(y)?);
            let depth = max_depth.unwrap_or(limits.max_depth);
            let outcome = orbits_intersect(action, &px, &py, depth)?;
            let (witness, disjoint) = match &outcome {
                Intersection::Witness { point } => {
                    entry.line(format!("[{}] and [{}] meet at {}", r(&px), r(&py), r(point)));
                    (Some(r(point)), false)
                }
                Intersection::Disjoint { depth, certified } => {
                    let how = if *certified { "disjoint (both orbits stabilised)" } else { "no common point found" };
                    entry.line(format!("[{}] and [{}]: {how} within {depth} layers", r(&px), r(&py)));
                    (None, true)
                }
            };
            entry.data = json!({ "x": r(&px), "y": r(&py), "witness": witness, "disjoint": disjoint });
            if let Some(w) = expect_witness {
                let want = r(&parse(w)?);
                entry.check("witness", want, witness.unwrap_or_else(|| "none".into()));
            }
            if let Some(d) = expect_disjoint {
                entry.check("disjoint", d, disjoint);
            }
        }
        Query::BiInvariant { set, expect } => {
            let s: BTreeSet<A::Point> = set.iter().map(|t| parse(t)).collect::<Result<_, _>>()?;
            let holds = is_bi_invariant(action, &s)?;
            entry.line(format!("{} is {}bi-invariant", render_set(action, &s), if holds { "" } else { "not " }));
            entry.data = json!({ "set": s.iter().map(r).collect::<Vec<_>>(), "bi_invariant": holds });
            if let Some(e) = expect {
                entry.check("bi_invariant", e, holds);
            }
        }
        Query::CheckDistributive { domain: listed, expect } => {
            let points = domain(action, listed, parse)?;
            let report = is_distributive(action, &points)?;
            entry.line(format!("distributivity {} over {} points", verdict_word(report.verdict), points.len()));
            let witness = report.counterexample.as_ref().map(|w| {
                entry.line(format!("counterexample: {}", w.describe(action)));
                json!({
                    "g": action.group().name(w.g),
                    "h": action.group().name(w.h),
                    "x": r(&w.x),
                    "x1": r(&w.x1),
                    "x2": r(&w.x2),
                    "lhs": r(&w.lhs),
                    "rhs": r(&w.rhs),
                    "confirmed": w.confirms(action),
                })
            });
            entry.data = json!({ "verdict": report.verdict, "counterexample": witness });
            if let Some(e) = expect {
                entry.check("verdict", verdict_word(*e), verdict_word(report.verdict));
            }
        }
        Query::DistributiveImage { x, x_prime, expect } => {
            let (px, pp) = (parse(x)?, parse(x_prime)?);
            let (report, sides) = distributive_image_law(action, &px, &pp)?;
            entry.line(format!("G(G(x,x), G(x,x')) = {}", render_set(action, &sides.lhs)));
            entry.line(format!("G(x,x') = {}", render_set(action, &sides.rhs)));
            entry.data = json!({
                "verdict": report.verdict,
                "lhs": sides.lhs.iter().map(r).collect::<Vec<_>>(),
                "rhs": sides.rhs.iter().map(r).collect::<Vec<_>>(),
            });
            if let Some(e) = expect {
                entry.check("verdict", verdict_word(*e), verdict_word(report.verdict));
            }
        }
        _ => return Ok(None),
    }
    Ok(Some(entry))
}

fn normalizer_entry<P>(
    report: &NormalizerReport<P>,
    render: &dyn Fn(&P) -> String,
    point: &str,
    expect_bi_invariant: Option<bool>,
) -> Entry {
    let mut entry = Entry::new("normalizer_criterion");
    entry.line(format!(
        "x = {point}: H(x,x) bi-invariant: {}; x^-1 H x in N(H): {} (by {})",
        report.bi_invariant, report.condition, report.method
    ));
    let escape = report.escape.as_ref().map(|w| {
        entry.line(format!(
            "escape: h = {}, h1 = {}, h2 = {}: h(h1(x,x), h2(x,x)) = {} is outside H(x,x)",
            render(&w.h),
            render(&w.h1),
            render(&w.h2),
            render(&w.value)
        ));
        json!({ "h": render(&w.h), "h1": render(&w.h1), "h2": render(&w.h2), "value": render(&w.value) })
    });
    let condition = report.condition_witness.as_ref().map(|w| {
        entry.line(format!(
            "x^-1 h1 x = {} for h1 = {}; its conjugate of h = {} is {}, outside H",
            render(&w.conjugated),
            render(&w.h1),
            render(&w.h),
            render(&w.result)
        ));
        json!({
            "h1": render(&w.h1),
            "conjugated": render(&w.conjugated),
            "h": render(&w.h),
            "result": render(&w.result),
        })
    });
    entry.data = json!({
        "point": point,
        "method": report.method,
        "bi_invariant": report.bi_invariant,
        "condition": report.condition,
        "escape": escape,
        "condition_witness": condition,
    });
    entry.check("sides agree", true, report.bi_invariant == report.condition);
    if let Some(e) = expect_bi_invariant {
        entry.check("bi_invariant", e, report.bi_invariant);
    }
    entry
}

/// Runs one query against a built instance.
pub fn run_query(instance: &Instance, query: &Query, limits: &Limits) -> Result<Entry, CliError> {
    let generic = match instance {
        Instance::Finite(f) => run_generic(&f.action, query, limits, &finite_parser(f.action.names()))?,
        Instance::Matrix(m) => match (&m.action, query) {
            (
                _,
                Query::NormalizerCriterion { .. }
                | Query::InducedCriterion { .. }
                | Query::LeftTranslationCounterexample,
            ) => None,
            (Some(conj), _) => with_conj!(conj, a => run_generic(a, query, limits, &matrix_parser)?),
            (None, _) => {
                return Err(CliError::Validation(format!(
                    "{} needs a finite acting subgroup; {} is infinite",
                    query.name(),
                    m.predicate.kind()
                )))
            }
        },
        Instance::Words(conj) => with_conj!(conj, a => run_generic(a, query, limits, &word_parser)?),
    };
    if let Some(entry) = generic {
        return Ok(entry);
    }
    match (instance, query) {
        (Instance::Finite(f), Query::NormalizerCriterion { point, expect_bi_invariant }) => {
            let FiniteContext::Conjugation { kind: ConjKind::One, carrier, subgroup } = &f.context else {
                return Err(CliError::Validation("normalizer_criterion needs a conjugation_i action".into()));
            };
            let x = carrier.index_of(point)?;
            let report = normalizer_criterion_finite(carrier, subgroup, x)?;
            Ok(normalizer_entry(
                &report,
                &|p: &usize| carrier.name(*p).to_string(),
                carrier.name(x),
                *expect_bi_invariant,
            ))
        }
        (Instance::Matrix(m), Query::NormalizerCriterion { point, expect_bi_invariant }) => {
            if m.kind != ConjKind::One {
                return Err(CliError::Validation("normalizer_criterion needs a conjugation_i action".into()));
            }
            let x = matrix_parser(point)?;
            let report = normalizer_criterion_matrix(&m.predicate, &x)?;
            Ok(normalizer_entry(&report, &|p: &Mat2| p.to_string(), &x.to_string(), *expect_bi_invariant))
        }
        (Instance::Finite(f), Query::InducedCriterion { expect_distributive }) => {
            let FiniteContext::Induced { unary } = &f.context else {
                return Err(CliError::Validation("induced_criterion needs an induced action".into()));
            };
            let report = induced_distributivity_criterion(unary)?;
            let g = f.action.group();
            let mut entry = Entry::new(query.name());
            entry.line(format!("induced action distributive: {}", report.distributive));
            entry.line(format!(
                "G' = {} inside Ker = {}: {}",
                g.render_set(&report.commutator_subgroup),
                g.render_set(&report.kernel),
                report.commutator_in_kernel
            ));
            if let Some(c) = report.commutator_outside_kernel {
                entry.line(format!("{} lies in G' but moves a point", g.name(c)));
            }
            entry.data = json!({
                "distributive": report.distributive,
                "commutator_in_kernel": report.commutator_in_kernel,
                "commutator_subgroup": report.commutator_subgroup.iter().map(|&c| g.name(c)).collect::<Vec<_>>(),
                "kernel": report.kernel.iter().map(|&c| g.name(c)).collect::<Vec<_>>(),
            });
            entry.check("sides agree", true, report.verdict.holds());
            if let Some(e) = expect_distributive {
                entry.check("distributive", e, report.distributive);
            }
            Ok(entry)
        }
        (Instance::Finite(f), Query::LeftTranslationCounterexample) => {
            let g = f.action.group();
            Ok(left_translation_entry(g)?)
        }
        _ => Err(CliError::Validation(format!("{} is not available for this carrier", query.name()))),
    }
}

pub fn left_translation_entry(g: &gspace::FiniteGroup) -> Result<Entry, CliError> {
    let cert = left_translation_counterexample(g)?;
    let mut entry = Entry::new("left_translation_counterexample");
    let sets_ok = cert.diagonal_sets.iter().filter(|(_, s)| s.len() == g.order()).count();
    entry.line(format!(
        "all {} sets G(x,x) bi-invariant: {} ({} equal G)",
        cert.diagonal_sets.len(),
        cert.all_bi_invariant,
        sets_ok
    ));
    let action = gspace::action::induced_action(gspace::action::TableUnary::left_translation(g));
    if let Some(w) = &cert.distributivity.counterexample {
        entry.line(format!("distributivity fails: {}", w.describe(&action)));
    }
    entry.data = json!({
        "all_bi_invariant": cert.all_bi_invariant,
        "distributivity": cert.distributivity.verdict,
        "witness_confirmed": cert.witness_confirmed,
        "counterexample": cert.distributivity.counterexample.as_ref().map(|w| json!({
            "g": g.name(w.g), "h": g.name(w.h),
            "x": g.name(w.x), "x1": g.name(w.x1), "x2": g.name(w.x2),
            "lhs": g.name(w.lhs), "rhs": g.name(w.rhs),
        })),
    });
    entry.check("certified", true, cert.certified);
    Ok(entry)
}

pub fn run_scenario(scenario: &Scenario) -> Result<Report, CliError> {
    let instance = scenario.build()?;
    let entries =
        scenario.queries.iter().map(|q| run_query(&instance, q, &scenario.limits)).collect::<Result<Vec<_>, _>>()?;
    Ok(Report::new(scenario.title(), entries))
}

/// Every point of a finite conjugation_i instance against the criterion.
pub fn normalizer_sweep(scenario: &Scenario) -> Result<Report, CliError> {
    let instance = scenario.build()?;
    let Instance::Finite(f) = &instance else {
        return Err(CliError::Validation("a sweep needs a finite carrier; pass --point".into()));
    };
    let entries = f
        .action
        .names()
        .iter()
        .map(|name| {
            let q = Query::NormalizerCriterion { point: name.clone(), expect_bi_invariant: None };
            run_query(&instance, &q, &scenario.limits)
        })
        .collect::<Result<Vec<_>, _>>()?;
    Ok(Report::new(scenario.title(), entries))
}
