//! Scenario files: a group, a carrier, an action, a list of queries and
//! limits, read from JSON.

use std::path::Path;

use serde::{Deserialize, Serialize};

use gspace::action::{induced_action, ConjugationI, ConjugationII, FiniteCarrier, Gl2, TableAction, TableUnary};
use gspace::catalog;
use gspace::word::InfiniteDihedral;
use gspace::{DWord, FiniteGroup, Mat2, Subgroup, SubgroupPredicate, Verdict};

use crate::error::CliError;

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Scenario {
    #[serde(default)]
    pub name: Option<String>,
    #[serde(default)]
    pub group: Option<GroupSpec>,
    #[serde(default)]
    pub carrier: CarrierSpec,
    pub action: ActionSpec,
    #[serde(default)]
    pub queries: Vec<Query>,
    #[serde(default)]
    pub limits: Limits,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum GroupSpec {
    Catalog(String),
    /// Cayley table over element indices.
    Table {
        elements: Vec<String>,
        rows: Vec<Vec<usize>>,
    },
    /// Permutations in one-line notation, 0- or 1-based.
    Permutations(Vec<Vec<usize>>),
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CarrierSpec {
    /// The group itself, or the points of a table/induced action.
    #[default]
    Finite,
    /// GL(2, Q) with exact rational entries.
    Gl2,
    /// Words in two involutions `h`, `x`.
    Words,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SubgroupSpec {
    Whole,
    Trivial,
    UpperUnitriangular,
    WholeGl2,
    Generators(Vec<String>),
    Members(Vec<String>),
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum UnarySpec {
    LeftTranslation,
    Trivial(usize),
    Cosets(SubgroupSpec),
    Table { points: Vec<String>, rows: Vec<Vec<usize>> },
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum ActionSpec {
    /// `h(x1, x2) = x1^-1 h x1 x2`.
    ConjugationI { subgroup: SubgroupSpec },
    /// `h(x, y) = x h x^-1 y`.
    ConjugationIi { subgroup: SubgroupSpec },
    /// `g(x1, x2) = g x2` for an ordinary action.
    Induced { unary: UnarySpec },
    /// Explicit `entries[g][x1][x2]` over point indices.
    Table { points: Vec<String>, entries: Vec<Vec<Vec<usize>>> },
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(tag = "op", rename_all = "snake_case", deny_unknown_fields)]
pub enum Query {
    VerifyAxioms {
        #[serde(default)]
        domain: Vec<String>,
        #[serde(default)]
        expect: Option<Verdict>,
    },
    Orbit {
        point: String,
        #[serde(default)]
        max_depth: Option<usize>,
        #[serde(default)]
        expect_layers: Option<Vec<Vec<String>>>,
        #[serde(default)]
        expect_converged_at: Option<usize>,
    },
    Intersect {
        x: String,
        y: String,
        #[serde(default)]
        max_depth: Option<usize>,
        #[serde(default)]
        expect_witness: Option<String>,
        #[serde(default)]
        expect_disjoint: Option<bool>,
    },
    BiInvariant {
        set: Vec<String>,
        #[serde(default)]
        expect: Option<bool>,
    },
    CheckDistributive {
        #[serde(default)]
        domain: Vec<String>,
        #[serde(default)]
        expect: Option<Verdict>,
    },
    DistributiveImage {
        x: String,
        x_prime: String,
        #[serde(default)]
        expect: Option<Verdict>,
    },
    NormalizerCriterion {
        point: String,
        #[serde(default)]
        expect_bi_invariant: Option<bool>,
    },
    InducedCriterion {
        #[serde(default)]
        expect_distributive: Option<bool>,
    },
    LeftTranslationCounterexample,
}

impl Query {
    pub fn name(&self) -> &'static str {
        match self {
            Query::VerifyAxioms { .. } => "verify_axioms",
            Query::Orbit { .. } => "orbit",
            Query::Intersect { .. } => "intersect",
            Query::BiInvariant { .. } => "bi_invariant",
            Query::CheckDistributive { .. } => "check_distributive",
            Query::DistributiveImage { .. } => "distributive_image",
            Query::NormalizerCriterion { .. } => "normalizer_criterion",
            Query::InducedCriterion { .. } => "induced_criterion",
            Query::LeftTranslationCounterexample => "left_translation_counterexample",
        }
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Limits {
    /// Default number of orbit layers.
    #[serde(default = "default_depth")]
    pub max_depth: usize,
    /// Largest finite carrier accepted.
    #[serde(default = "default_size_cap")]
    pub size_cap: usize,
}

fn default_depth() -> usize {
    gspace::orbit::DEFAULT_MAX_DEPTH
}

fn default_size_cap() -> usize {
    4096
}

impl Default for Limits {
    fn default() -> Self {
        Limits { max_depth: default_depth(), size_cap: default_size_cap() }
    }
}

impl Scenario {
    pub fn from_json(text: &str) -> Result<Self, CliError> {
        Ok(serde_json::from_str(text)?)
    }

    pub fn load(path: &Path) -> Result<Self, CliError> {
        let text = std::fs::read_to_string(path)
            .map_err(|source| CliError::Io { path: path.display().to_string(), source })?;
        Self::from_json(&text)
    }

    pub fn title(&self) -> String {
        self.name.clone().unwrap_or_else(|| "scenario".to_string())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ConjKind {
    One,
    Two,
}

/// What a finite instance was built from, for the criteria that need it.
#[derive(Clone, Debug)]
pub enum FiniteContext {
    Conjugation { kind: ConjKind, carrier: FiniteGroup, subgroup: Subgroup },
    Induced { unary: TableUnary },
    Table,
}

#[derive(Clone, Debug)]
pub struct FiniteInstance {
    pub action: TableAction,
    pub context: FiniteContext,
}

pub enum ConjAction<C: gspace::action::CarrierGroup> {
    One(ConjugationI<C>),
    Two(ConjugationII<C>),
}

pub struct MatrixInstance {
    pub kind: ConjKind,
    pub predicate: SubgroupPredicate,
    /// Present when the acting subgroup is finite.
    pub action: Option<ConjAction<Gl2>>,
}

pub enum Instance {
    Finite(FiniteInstance),
    Matrix(MatrixInstance),
    Words(ConjAction<InfiniteDihedral>),
}

pub fn build_group(spec: &GroupSpec) -> Result<FiniteGroup, CliError> {
    match spec {
        GroupSpec::Catalog(name) => catalog::by_name(name)
            .ok_or_else(|| CliError::Validation(format!("unknown catalog group {name:?}; try `gspace catalog`"))),
        GroupSpec::Table { elements, rows } => Ok(FiniteGroup::from_table(elements.clone(), rows.clone())?),
        GroupSpec::Permutations(gens) => Ok(FiniteGroup::from_permutations(gens)?),
    }
}

fn finite_subgroup(g: &FiniteGroup, spec: &SubgroupSpec) -> Result<Subgroup, CliError> {
    let indices =
        |names: &[String]| -> Result<Vec<usize>, CliError> { names.iter().map(|n| Ok(g.index_of(n)?)).collect() };
    match spec {
        SubgroupSpec::Whole => Ok(g.whole()),
        SubgroupSpec::Trivial => Ok(g.trivial_subgroup()),
        SubgroupSpec::Generators(names) => Ok(g.subgroup_generated(&indices(names)?)?),
        SubgroupSpec::Members(names) => Ok(g.subgroup_from_members(&indices(names)?)?),
        other => Err(CliError::Validation(format!("{other:?} needs the gl2 carrier"))),
    }
}

fn unary(g: &FiniteGroup, spec: &UnarySpec) -> Result<TableUnary, CliError> {
    Ok(match spec {
        UnarySpec::LeftTranslation => TableUnary::left_translation(g),
        UnarySpec::Trivial(n) if *n > 0 => TableUnary::trivial(g, *n),
        UnarySpec::Trivial(_) => return Err(CliError::Validation("trivial action needs at least one point".into())),
        UnarySpec::Cosets(sub) => TableUnary::on_left_cosets(g, &finite_subgroup(g, sub)?)?,
        UnarySpec::Table { points, rows } => TableUnary::new(g.clone(), points.clone(), rows.clone())?,
    })
}

fn parse_matrices(texts: &[String]) -> Result<Vec<Mat2>, CliError> {
    texts.iter().map(|t| Ok(t.parse::<Mat2>()?)).collect()
}

fn parse_words(texts: &[String]) -> Result<Vec<DWord>, CliError> {
    texts.iter().map(|t| Ok(t.parse::<DWord>()?)).collect()
}

fn conj<C: gspace::action::CarrierGroup>(
    kind: ConjKind,
    carrier: C,
    gens: &[C::Point],
) -> Result<ConjAction<C>, CliError> {
    Ok(match kind {
        ConjKind::One => ConjAction::One(ConjugationI::generated(carrier, gens)?),
        ConjKind::Two => ConjAction::Two(ConjugationII::generated(carrier, gens)?),
    })
}

impl Scenario {
    /// Resolves the group, subgroup and action into something executable.
    pub fn build(&self) -> Result<Instance, CliError> {
        if self.limits.max_depth == 0 || self.limits.size_cap == 0 {
            return Err(CliError::Validation("limits must be positive".into()));
        }
        let conj_parts = match &self.action {
            ActionSpec::ConjugationI { subgroup } => Some((ConjKind::One, subgroup)),
            ActionSpec::ConjugationIi { subgroup } => Some((ConjKind::Two, subgroup)),
            _ => None,
        };
        match self.carrier {
            CarrierSpec::Gl2 => {
                let (kind, sub) = conj_parts
                    .ok_or_else(|| CliError::Validation("the gl2 carrier supports conjugation actions only".into()))?;
                let (predicate, action) = match sub {
                    SubgroupSpec::UpperUnitriangular => (SubgroupPredicate::UpperUnitriangular, None),
                    SubgroupSpec::WholeGl2 => (SubgroupPredicate::WholeGl2, None),
                    SubgroupSpec::Generators(texts) => {
                        let gens = parse_matrices(texts)?;
                        let action = conj(kind, Gl2, &gens)?;
                        let members = match &action {
                            ConjAction::One(a) => a.members().to_vec(),
                            ConjAction::Two(a) => a.members().to_vec(),
                        };
                        (SubgroupPredicate::FiniteListed(members), Some(action))
                    }
                    other => return Err(CliError::Validation(format!("{other:?} is not a GL(2) subgroup"))),
                };
                Ok(Instance::Matrix(MatrixInstance { kind, predicate, action }))
            }
            CarrierSpec::Words => {
                let (kind, sub) = conj_parts.ok_or_else(|| {
                    CliError::Validation("the words carrier supports conjugation actions only".into())
                })?;
                let SubgroupSpec::Generators(texts) = sub else {
                    return Err(CliError::Validation("the words carrier needs subgroup generators".into()));
                };
                Ok(Instance::Words(conj(kind, InfiniteDihedral, &parse_words(texts)?)?))
            }
            CarrierSpec::Finite => self.build_finite().map(Instance::Finite),
        }
    }

    fn build_finite(&self) -> Result<FiniteInstance, CliError> {
        let group = self
            .group
            .as_ref()
            .map(build_group)
            .transpose()?
            .ok_or_else(|| CliError::Validation("a finite carrier needs a group".into()))?;
        let instance = match &self.action {
            ActionSpec::ConjugationI { subgroup } | ActionSpec::ConjugationIi { subgroup } => {
                let h = finite_subgroup(&group, subgroup)?;
                let (kind, action) = if matches!(self.action, ActionSpec::ConjugationI { .. }) {
                    (ConjKind::One, TableAction::tabulate(&ConjugationI::<FiniteCarrier>::from_subgroup(&group, &h)?)?)
                } else {
                    (ConjKind::Two, TableAction::tabulate(&ConjugationII::<FiniteCarrier>::from_subgroup(&group, &h)?)?)
                };
                FiniteInstance { action, context: FiniteContext::Conjugation { kind, carrier: group, subgroup: h } }
            }
            ActionSpec::Induced { unary: spec } => {
                let u = unary(&group, spec)?;
                let action = TableAction::tabulate(&induced_action(&u))?;
                FiniteInstance { action, context: FiniteContext::Induced { unary: u } }
            }
            ActionSpec::Table { points, entries } => {
                if entries.iter().flatten().flatten().any(|&v| v >= points.len()) {
                    return Err(CliError::Validation("table entry outside the point list".into()));
                }
                let action = TableAction::new(group, points.clone(), entries.clone())?;
                FiniteInstance { action, context: FiniteContext::Table }
            }
        };
        if instance.action.size() > self.limits.size_cap {
            return Err(CliError::Validation(format!(
                "carrier has {} points, above size_cap {}",
                instance.action.size(),
                self.limits.size_cap
            )));
        }
        Ok(instance)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn minimal_scenario_parses() {
        let s = Scenario::from_json(
            r#"{"group": {"catalog": "S3"}, "action": {"kind": "conjugation_i", "subgroup": "whole"}}"#,
        )
        .unwrap();
        assert!(s.queries.is_empty());
        assert_eq!(s.limits.max_depth, 8);
        assert!(matches!(s.build().unwrap(), Instance::Finite(_)));
    }

    #[test]
    fn unknown_fields_are_rejected() {
        let err = Scenario::from_json(r#"{"action": {"kind": "conjugation_i", "subgroup": "whole"}, "bogus": 1}"#);
        assert!(matches!(err, Err(CliError::Parse(_))));
    }

    #[test]
    fn unknown_group_is_a_validation_error() {
        let s = Scenario::from_json(
            r#"{"group": {"catalog": "S9"}, "action": {"kind": "conjugation_i", "subgroup": "whole"}}"#,
        )
        .unwrap();
        assert!(matches!(s.build(), Err(CliError::Validation(_))));
    }

    #[test]
    fn gl2_predicate_subgroups() {
        let s = Scenario::from_json(
            r#"{"carrier": "gl2", "action": {"kind": "conjugation_i", "subgroup": "upper_unitriangular"}}"#,
        )
        .unwrap();
        let Instance::Matrix(m) = s.build().unwrap() else { panic!("matrix instance") };
        assert!(m.action.is_none());
    }
}
