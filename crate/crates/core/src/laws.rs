//! Executable criteria: distributivity, the image law for distributive
//! actions, the normalizer criterion for `H(x, x)`, the commutator/kernel
//! criterion for induced actions, and the left-translation counterexample
//! showing that bi-invariant `G(x, x)` does not force distributivity.
//!
//! Every failing report carries a witness that can be re-evaluated through
//! [`BinaryAction::apply`].

use std::collections::BTreeSet;
use std::fmt;

use num_rational::BigRational;
use num_traits::{One, Zero};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::action::{
    induced_action, kernel, ActionError, BinaryAction, CarrierGroup, ConjugationI, FiniteCarrier, Gl2, TableUnary,
    UnaryAction,
};
use crate::group::{FiniteGroup, GroupError, Subgroup};
use crate::matrix::{Mat2, MatrixError, SubgroupPredicate};
use crate::orbit::{image_of, PointSet};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LawError {
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("unsupported instance: {0}")]
    Unsupported(String),
    #[error(transparent)]
    Action(#[from] ActionError),
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error(transparent)]
    Matrix(#[from] MatrixError),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Law {
    Distributivity,
    DistributiveImage,
    NormalizerCriterion,
    InducedDistributivity,
    LeftTranslationCounterexample,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    Holds,
    Fails,
}

impl Verdict {
    pub fn from_bool(holds: bool) -> Self {
        if holds {
            Verdict::Holds
        } else {
            Verdict::Fails
        }
    }

    pub fn holds(self) -> bool {
        self == Verdict::Holds
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LawReport<W> {
    pub law: Law,
    pub verdict: Verdict,
    pub counterexample: Option<W>,
}

/// `g(h(x, x1), h(x, x2)) != h(x, g(x1, x2))`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DistributivityWitness<P> {
    pub g: usize,
    pub h: usize,
    pub x: P,
    pub x1: P,
    pub x2: P,
    pub lhs: P,
    pub rhs: P,
}

impl<P: Clone + PartialEq> DistributivityWitness<P> {
    /// Both sides recomputed from the quintuple.
    pub fn reevaluate<A: BinaryAction<Point = P>>(&self, action: &A) -> Result<(P, P), ActionError> {
        distributivity_sides(action, self.g, self.h, &self.x, &self.x1, &self.x2)
    }

    /// The recomputed sides match the stored ones and differ from each other.
    pub fn confirms<A: BinaryAction<Point = P>>(&self, action: &A) -> bool {
        matches!(self.reevaluate(action), Ok((l, r)) if l == self.lhs && r == self.rhs && l != r)
    }

    pub fn describe<A: BinaryAction<Point = P>>(&self, action: &A) -> String {
        let name = |g| action.group().name(g).to_string();
        format!(
            "g={}, h={}, x={}, x'={}, x''={}: g(h(x,x'),h(x,x''))={} but h(x,g(x',x''))={}",
            name(self.g),
            name(self.h),
            action.render(&self.x),
            action.render(&self.x1),
            action.render(&self.x2),
            action.render(&self.lhs),
            action.render(&self.rhs)
        )
    }
}

fn distributivity_sides<A: BinaryAction>(
    action: &A,
    g: usize,
    h: usize,
    x: &A::Point,
    x1: &A::Point,
    x2: &A::Point,
) -> Result<(A::Point, A::Point), ActionError> {
    let lhs = action.apply(g, &action.apply(h, x, x1)?, &action.apply(h, x, x2)?)?;
    let rhs = action.apply(h, x, &action.apply(g, x1, x2)?)?;
    Ok((lhs, rhs))
}

/// Checks distributivity over all `(g, h, x, x1, x2)` with points from
/// `domain`. The reported counterexample is the least one in the order
/// `(g, h, x, x1, x2)` of group indices and domain positions.
pub fn is_distributive<A: BinaryAction>(
    action: &A,
    domain: &[A::Point],
) -> Result<LawReport<DistributivityWitness<A::Point>>, LawError> {
    let n = action.group().order();
    let found = (0..n * n).into_par_iter().find_map_first(|pair| {
        let (g, h) = (pair / n, pair % n);
        scan_pair(action, g, h, domain).transpose()
    });
    let counterexample = found.transpose()?;
    Ok(LawReport { law: Law::Distributivity, verdict: Verdict::from_bool(counterexample.is_none()), counterexample })
}

fn scan_pair<A: BinaryAction>(
    action: &A,
    g: usize,
    h: usize,
    domain: &[A::Point],
) -> Result<Option<DistributivityWitness<A::Point>>, ActionError> {
    for x in domain {
        let h_row: Vec<A::Point> = domain.iter().map(|p| action.apply(h, x, p)).collect::<Result<_, _>>()?;
        for x1 in domain {
            let first = &h_row[position(domain, x1)];
            for (j, x2) in domain.iter().enumerate() {
                let lhs = action.apply(g, first, &h_row[j])?;
                let rhs = action.apply(h, x, &action.apply(g, x1, x2)?)?;
                if lhs != rhs {
                    return Ok(Some(DistributivityWitness {
                        g,
                        h,
                        x: x.clone(),
                        x1: x1.clone(),
                        x2: x2.clone(),
                        lhs,
                        rhs,
                    }));
                }
            }
        }
    }
    Ok(None)
}

fn position<P: PartialEq>(domain: &[P], p: &P) -> usize {
    domain.iter().position(|q| q == p).expect("point drawn from the domain")
}

/// [`is_distributive`] over the whole (finite) carrier.
pub fn is_distributive_exhaustive<A: BinaryAction>(
    action: &A,
) -> Result<LawReport<DistributivityWitness<A::Point>>, LawError> {
    let points = action.points().ok_or(ActionError::InfiniteCarrier)?;
    is_distributive(action, &points)
}

/// The two sides of `G(G(x, x), G(x, x')) = G(x, x')`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ImageSides<P: Ord> {
    pub lhs: BTreeSet<P>,
    pub rhs: BTreeSet<P>,
}

/// Checks `G(G(x, x), G(x, x')) = G(x, x')` for a distributive action on a
/// finite carrier. Sides are always reported; the counterexample slot is
/// filled only when they differ.
pub fn distributive_image_law<A: BinaryAction>(
    action: &A,
    x: &A::Point,
    x_prime: &A::Point,
) -> Result<ImageOutcome<A::Point>, LawError> {
    let pre = is_distributive_exhaustive(action)?;
    if let Some(w) = pre.counterexample {
        return Err(LawError::Precondition(format!("action is not distributive: {}", w.describe(action))));
    }
    let all: Vec<usize> = action.group().elements().collect();
    let single = |p: &A::Point| PointSet::from([p.clone()]);
    let diagonal = image_of(action, &all, &single(x), &single(x))?;
    let rhs = image_of(action, &all, &single(x), &single(x_prime))?;
    let lhs = image_of(action, &all, &diagonal, &rhs)?;
    let sides = ImageSides { lhs, rhs };
    let holds = sides.lhs == sides.rhs;
    let report = LawReport {
        law: Law::DistributiveImage,
        verdict: Verdict::from_bool(holds),
        counterexample: (!holds).then(|| sides.clone()),
    };
    Ok((report, sides))
}

type ImageOutcome<P> = (LawReport<ImageSides<P>>, ImageSides<P>);

/// How the bi-invariance side of the normalizer criterion was decided.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Method {
    Enumeration,
    AlgebraicReduction,
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Method::Enumeration => "enumeration",
            Method::AlgebraicReduction => "algebraic reduction",
        })
    }
}

/// `h(h1(x, x), h2(x, x))` lies outside `H(x, x)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EscapeWitness<P> {
    pub h: P,
    pub h1: P,
    pub h2: P,
    pub value: P,
}

/// `x^-1 h1 x` is not in `N(H)`: conjugating `h` by it leaves `H`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ConditionWitness<P> {
    pub h1: P,
    pub conjugated: P,
    pub h: P,
    pub result: P,
}

/// Both sides of: `H(x, x)` is bi-invariant iff `x^-1 H x ⊆ N(H)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct NormalizerReport<P> {
    pub law: Law,
    /// The two sides agree.
    pub verdict: Verdict,
    pub method: Method,
    pub bi_invariant: bool,
    pub condition: bool,
    pub escape: Option<EscapeWitness<P>>,
    pub condition_witness: Option<ConditionWitness<P>>,
}

impl<P> NormalizerReport<P> {
    fn new(method: Method, escape: Option<EscapeWitness<P>>, condition_witness: Option<ConditionWitness<P>>) -> Self {
        let bi_invariant = escape.is_none();
        let condition = condition_witness.is_none();
        NormalizerReport {
            law: Law::NormalizerCriterion,
            verdict: Verdict::from_bool(bi_invariant == condition),
            method,
            bi_invariant,
            condition,
            escape,
            condition_witness,
        }
    }
}

/// Decides both sides by enumerating a finite acting subgroup.
fn enumerate_criterion<C, F>(
    action: &ConjugationI<C>,
    x: &C::Point,
    in_normalizer: F,
) -> Result<NormalizerReport<C::Point>, LawError>
where
    C: CarrierGroup,
    F: Fn(&C::Point) -> Result<bool, LawError>,
{
    let carrier = action.carrier();
    if !carrier.contains(x) {
        return Err(ActionError::OutsideCarrier(carrier.render(x)).into());
    }
    let members = action.members();
    let diagonal: Vec<C::Point> = members.iter().map(|h| action.apply_member(h, x, x)).collect::<Result<_, _>>()?;
    let set: BTreeSet<C::Point> = diagonal.iter().cloned().collect();

    let mut escape = None;
    'outer: for (i1, h1) in members.iter().enumerate() {
        for (i2, h2) in members.iter().enumerate() {
            for (g, h) in members.iter().enumerate() {
                let value = action.apply(g, &diagonal[i1], &diagonal[i2])?;
                if !set.contains(&value) {
                    escape = Some(EscapeWitness { h: h.clone(), h1: h1.clone(), h2: h2.clone(), value });
                    break 'outer;
                }
            }
        }
    }

    let x_inv = carrier.inv(x)?;
    let mut condition_witness = None;
    for h1 in members {
        let conjugated = carrier.mul(&carrier.mul(&x_inv, h1), x);
        if in_normalizer(&conjugated)? {
            continue;
        }
        let c_inv = carrier.inv(&conjugated)?;
        for h in members {
            let result = carrier.mul(&carrier.mul(&c_inv, h), &conjugated);
            if action.member_index(&result).is_err() {
                condition_witness = Some(ConditionWitness { h1: h1.clone(), conjugated, h: h.clone(), result });
                break;
            }
        }
        break;
    }
    Ok(NormalizerReport::new(Method::Enumeration, escape, condition_witness))
}

/// The criterion for `H <= G` finite, with `x` an element index of `G`.
/// Bi-invariance is decided by enumerating `H(H(x, x), H(x, x))`; the
/// condition by computing the normalizer in `G`.
pub fn normalizer_criterion_finite(
    group: &FiniteGroup,
    h: &Subgroup,
    x: usize,
) -> Result<NormalizerReport<usize>, LawError> {
    let normalizer = group.normalizer(h)?;
    let action = ConjugationI::<FiniteCarrier>::from_subgroup(group, h)?;
    enumerate_criterion(&action, &x, |c| Ok(normalizer.contains(*c)))
}

/// The criterion for a subgroup of GL(2, Q) given by a predicate.
///
/// Finite subgroups are enumerated. The unitriangular group is infinite, so
/// both sides are reduced to finitely many exact evaluations; see
/// [`unitriangular_criterion`].
pub fn normalizer_criterion_matrix(
    predicate: &SubgroupPredicate,
    x: &Mat2,
) -> Result<NormalizerReport<Mat2>, LawError> {
    if !x.is_invertible() {
        return Err(MatrixError::Singular(x.to_string()).into());
    }
    match predicate {
        SubgroupPredicate::WholeGl2 => Ok(NormalizerReport::new(Method::AlgebraicReduction, None, None)),
        SubgroupPredicate::UpperUnitriangular => unitriangular_criterion(x),
        SubgroupPredicate::FiniteListed(members) => {
            let action = ConjugationI::generated(Gl2, members)?;
            if action.members() != members.as_slice() {
                return Err(LawError::Unsupported("listed matrices are not a closed subgroup".into()));
            }
            enumerate_criterion(&action, x, |c| Ok(predicate.normalizer_contains(c)?))
        }
    }
}

fn unitriangular(t: i64) -> Mat2 {
    Mat2::unitriangular(BigRational::from_integer(t.into()))
}

fn is_unitriangular(m: &Mat2) -> bool {
    m.a.is_one() && m.d.is_one() && m.c.is_zero()
}

/// Decides the criterion for `H = { [[1, t], [0, 1]] }`.
///
/// Condition side: `x^-1 [[1, t], [0, 1]] x = 1 + t N'` with `N'` fixed, and
/// the normalizer of `H` is the upper triangular group, so `t = 1` decides.
///
/// Bi-invariance side: with `y_i = h_i(x, x)`, `h(y1, y2)` lies in `H(x, x)`
/// iff `x h(y1, y2) x^-2` lies in `H`; that element is
/// `(x^-1 h1 x)^-1 h (x^-1 h1 x) h2`, so `h2 = e` suffices. Its entries are
/// polynomials of degree at most 1 in `t` and 2 in `t1` (for `h = U(t)`,
/// `h1 = U(t1)`), so vanishing on `{1, 0} x {1, -1, 0}` is exact.
fn unitriangular_criterion(x: &Mat2) -> Result<NormalizerReport<Mat2>, LawError> {
    let x_inv = x.inv()?;
    let square_inv = (x * x).inv()?;

    let mut escape = None;
    'grid: for t in [1, 0] {
        for t1 in [1, -1, 0] {
            let (h, h1, h2) = (unitriangular(t), unitriangular(t1), Mat2::identity());
            let y1 = &(&(&x_inv * &h1) * x) * x;
            let y2 = &(&(&x_inv * &h2) * x) * x;
            let value = &(&(&y1.inv()? * &h) * &y1) * &y2;
            if !is_unitriangular(&(&(x * &value) * &square_inv)) {
                escape = Some(EscapeWitness { h, h1, h2, value });
                break 'grid;
            }
        }
    }

    let generator = unitriangular(1);
    let conjugated = &(&x_inv * &generator) * x;
    let condition_witness = if conjugated.c.is_zero() {
        None
    } else {
        let result = &(&conjugated.inv()? * &generator) * &conjugated;
        debug_assert!(!is_unitriangular(&result));
        Some(ConditionWitness { h1: generator.clone(), conjugated, h: generator, result })
    };
    Ok(NormalizerReport::new(Method::AlgebraicReduction, escape, condition_witness))
}

/// Both sides of: the induced action is distributive iff `G' ⊆ Ker`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct InducedReport<P> {
    pub law: Law,
    /// The two sides agree.
    pub verdict: Verdict,
    pub distributive: bool,
    pub commutator_in_kernel: bool,
    pub counterexample: Option<DistributivityWitness<P>>,
    /// An element of `G'` outside the kernel.
    pub commutator_outside_kernel: Option<usize>,
    pub commutator_subgroup: Vec<usize>,
    pub kernel: Vec<usize>,
}

pub fn induced_distributivity_criterion<U: UnaryAction>(u: &U) -> Result<InducedReport<U::Point>, LawError> {
    let dist = is_distributive_exhaustive(&induced_action(u))?;
    let derived = u.group().commutator_subgroup();
    let ker = kernel(u)?;
    let outside = derived.members().iter().copied().find(|&g| !ker.contains(g));
    let distributive = dist.verdict.holds();
    let commutator_in_kernel = outside.is_none();
    Ok(InducedReport {
        law: Law::InducedDistributivity,
        verdict: Verdict::from_bool(distributive == commutator_in_kernel),
        distributive,
        commutator_in_kernel,
        counterexample: dist.counterexample,
        commutator_outside_kernel: outside,
        commutator_subgroup: derived.members().to_vec(),
        kernel: ker.members().to_vec(),
    })
}

/// Evidence that an induced action can have every `G(x, x)` bi-invariant
/// without being distributive.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LeftTranslationCertificate {
    pub law: Law,
    /// For each point `x`, the set `G(x, x)`.
    pub diagonal_sets: Vec<(usize, Vec<usize>)>,
    pub all_bi_invariant: bool,
    pub distributivity: LawReport<DistributivityWitness<usize>>,
    pub witness_confirmed: bool,
    pub certified: bool,
}

/// Runs the certificate on left translation of `G` on itself.
pub fn left_translation_counterexample(group: &FiniteGroup) -> Result<LeftTranslationCertificate, LawError> {
    left_translation_counterexample_with(&TableUnary::left_translation(group))
}

/// Runs the certificate on any effective action of a non-Abelian group.
pub fn left_translation_counterexample_with(u: &TableUnary) -> Result<LeftTranslationCertificate, LawError> {
    let group = u.group();
    if group.is_abelian() {
        return Err(LawError::Precondition("group is Abelian, so every induced action is distributive".into()));
    }
    let ker = kernel(u)?;
    if ker.order() != 1 {
        return Err(LawError::Precondition(format!("action is not effective: kernel has order {}", ker.order())));
    }
    let action = induced_action(u);
    let all: Vec<usize> = group.elements().collect();
    let mut diagonal_sets = Vec::new();
    let mut all_bi_invariant = true;
    for x in u.points() {
        let set = image_of(&action, &all, &PointSet::from([x]), &PointSet::from([x]))?;
        all_bi_invariant &= crate::orbit::is_bi_invariant(&action, &set)?;
        diagonal_sets.push((x, set.into_iter().collect()));
    }
    let distributivity = is_distributive_exhaustive(&action)?;
    let witness_confirmed = distributivity.counterexample.as_ref().is_some_and(|w| w.confirms(&action));
    Ok(LeftTranslationCertificate {
        law: Law::LeftTranslationCounterexample,
        certified: all_bi_invariant && witness_confirmed,
        diagonal_sets,
        all_bi_invariant,
        distributivity,
        witness_confirmed,
    })
}
