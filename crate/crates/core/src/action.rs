//! Binary actions `G x X^2 -> X` and ordinary (unary) actions `G x X -> X`.
//!
//! The acting group is always a [`FiniteGroup`]; its elements are addressed
//! by index. Carriers may be infinite (matrices, words), in which case
//! exhaustive checks take an explicit finite domain.

use std::collections::{BTreeSet, HashMap};
use std::fmt::Debug;
use std::hash::Hash;
use std::sync::RwLock;

use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::group::{FiniteGroup, GroupError, Subgroup};
use crate::matrix::{Mat2, MatrixError, MATRIX_CLOSURE_CAP};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ActionError {
    #[error("{g}({x1}, {x2}) = {value} leaves the carrier")]
    CarrierEscape { g: String, x1: String, x2: String, value: String },
    #[error("point {0} is not in the carrier")]
    OutsideCarrier(String),
    #[error("{0} is not an element of the acting subgroup")]
    NotInSubgroup(String),
    #[error("operation needs a finite carrier")]
    InfiniteCarrier,
    #[error("malformed action table: {0}")]
    BadTable(String),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error(transparent)]
    Matrix(#[from] MatrixError),
}

/// Point type bounds shared by all carriers.
pub trait Point: Clone + Ord + Hash + Debug + Send + Sync {}

impl<T: Clone + Ord + Hash + Debug + Send + Sync> Point for T {}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum CarrierKind {
    FiniteSet,
    MatrixSet,
    WordSet,
}

/// A binary action `(g, x1, x2) -> g(x1, x2)`.
pub trait BinaryAction: Sync {
    type Point: Point;

    fn group(&self) -> &FiniteGroup;

    /// Evaluates `g(x1, x2)`. Results outside the carrier are reported as
    /// [`ActionError::CarrierEscape`].
    fn apply(&self, g: usize, x1: &Self::Point, x2: &Self::Point) -> Result<Self::Point, ActionError>;

    /// Every carrier point, when the carrier is finite.
    fn points(&self) -> Option<Vec<Self::Point>>;

    fn render(&self, p: &Self::Point) -> String;

    fn carrier_kind(&self) -> CarrierKind;
}

/// An ordinary action `(g, x) -> gx` on a finite carrier.
pub trait UnaryAction: Sync {
    type Point: Point;

    fn group(&self) -> &FiniteGroup;

    fn points(&self) -> Vec<Self::Point>;

    fn act(&self, g: usize, x: &Self::Point) -> Result<Self::Point, ActionError>;

    fn render(&self, p: &Self::Point) -> String;
}

/// A group in which carrier points live, used by the conjugation actions.
pub trait CarrierGroup: Sync {
    type Point: Point;

    fn mul(&self, a: &Self::Point, b: &Self::Point) -> Self::Point;

    fn inv(&self, a: &Self::Point) -> Result<Self::Point, ActionError>;

    fn identity(&self) -> Self::Point;

    fn contains(&self, a: &Self::Point) -> bool;

    fn points(&self) -> Option<Vec<Self::Point>>;

    fn render(&self, a: &Self::Point) -> String;

    fn kind(&self) -> CarrierKind;
}

/// A finite group used as a carrier; points are element indices.
#[derive(Clone, Debug)]
pub struct FiniteCarrier(pub FiniteGroup);

impl CarrierGroup for FiniteCarrier {
    type Point = usize;

    fn mul(&self, a: &usize, b: &usize) -> usize {
        self.0.mul(*a, *b)
    }

    fn inv(&self, a: &usize) -> Result<usize, ActionError> {
        if *a < self.0.order() {
            Ok(self.0.inv(*a))
        } else {
            Err(ActionError::OutsideCarrier(a.to_string()))
        }
    }

    fn identity(&self) -> usize {
        self.0.identity()
    }

    fn contains(&self, a: &usize) -> bool {
        *a < self.0.order()
    }

    fn points(&self) -> Option<Vec<usize>> {
        Some(self.0.elements().collect())
    }

    fn render(&self, a: &usize) -> String {
        self.0.names().get(*a).cloned().unwrap_or_else(|| format!("#{a}"))
    }

    fn kind(&self) -> CarrierKind {
        CarrierKind::FiniteSet
    }
}

/// GL(2, Q) as a carrier.
#[derive(Clone, Copy, Debug, Default)]
pub struct Gl2;

impl CarrierGroup for Gl2 {
    type Point = Mat2;

    fn mul(&self, a: &Mat2, b: &Mat2) -> Mat2 {
        a * b
    }

    fn inv(&self, a: &Mat2) -> Result<Mat2, ActionError> {
        a.inv().map_err(|_| ActionError::OutsideCarrier(a.to_string()))
    }

    fn identity(&self) -> Mat2 {
        Mat2::identity()
    }

    fn contains(&self, a: &Mat2) -> bool {
        a.is_invertible()
    }

    fn points(&self) -> Option<Vec<Mat2>> {
        None
    }

    fn render(&self, a: &Mat2) -> String {
        a.to_string()
    }

    fn kind(&self) -> CarrierKind {
        CarrierKind::MatrixSet
    }
}

/// A finite subgroup `H` of a carrier group, with `H` also available as an
/// abstract [`FiniteGroup`] whose index `i` is `members[i]`.
#[derive(Clone, Debug)]
struct ActingSubgroup<C: CarrierGroup> {
    carrier: C,
    acting: FiniteGroup,
    members: Vec<C::Point>,
}

impl<C: CarrierGroup> ActingSubgroup<C> {
    fn generated(carrier: C, gens: &[C::Point], cap: usize) -> Result<Self, ActionError> {
        for g in gens {
            if !carrier.contains(g) {
                return Err(ActionError::OutsideCarrier(carrier.render(g)));
            }
        }
        let (acting, members) =
            FiniteGroup::from_closure(gens, carrier.identity(), |a, b| carrier.mul(a, b), |a| carrier.render(a), cap)?;
        Ok(ActingSubgroup { carrier, acting, members })
    }

    fn index_of(&self, h: &C::Point) -> Result<usize, ActionError> {
        self.members.binary_search(h).map_err(|_| ActionError::NotInSubgroup(self.carrier.render(h)))
    }

    fn check_point(&self, p: &C::Point) -> Result<(), ActionError> {
        if self.carrier.contains(p) {
            Ok(())
        } else {
            Err(ActionError::OutsideCarrier(self.carrier.render(p)))
        }
    }

    fn escape_check(&self, g: usize, x1: &C::Point, x2: &C::Point, value: C::Point) -> Result<C::Point, ActionError> {
        if self.carrier.contains(&value) {
            Ok(value)
        } else {
            Err(ActionError::CarrierEscape {
                g: self.acting.name(g).to_string(),
                x1: self.carrier.render(x1),
                x2: self.carrier.render(x2),
                value: self.carrier.render(&value),
            })
        }
    }
}

fn finite_subgroup_carrier(g: &FiniteGroup, h: &Subgroup) -> Result<ActingSubgroup<FiniteCarrier>, ActionError> {
    let acting = g.restrict(h)?;
    Ok(ActingSubgroup { carrier: FiniteCarrier(g.clone()), acting, members: h.members().to_vec() })
}

macro_rules! conjugation_action {
    ($(#[$doc:meta])* $name:ident, |$s:ident, $h:ident, $x1:ident, $x2:ident| $body:expr) => {
        $(#[$doc])*
        #[derive(Clone, Debug)]
        pub struct $name<C: CarrierGroup> {
            inner: ActingSubgroup<C>,
        }

        impl<C: CarrierGroup> $name<C> {
            /// Acts by the (finite) subgroup of the carrier generated by `gens`.
            pub fn generated(carrier: C, gens: &[C::Point]) -> Result<Self, ActionError> {
                Ok($name { inner: ActingSubgroup::generated(carrier, gens, MATRIX_CLOSURE_CAP)? })
            }

            pub fn carrier(&self) -> &C {
                &self.inner.carrier
            }

            /// Members of the acting subgroup, index-aligned with [`BinaryAction::group`].
            pub fn members(&self) -> &[C::Point] {
                &self.inner.members
            }

            pub fn member_index(&self, h: &C::Point) -> Result<usize, ActionError> {
                self.inner.index_of(h)
            }

            /// Applies the subgroup element `h` given as a carrier point.
            pub fn apply_member(&self, h: &C::Point, x1: &C::Point, x2: &C::Point) -> Result<C::Point, ActionError> {
                let g = self.inner.index_of(h)?;
                self.apply(g, x1, x2)
            }
        }

        impl $name<FiniteCarrier> {
            pub fn from_subgroup(g: &FiniteGroup, h: &Subgroup) -> Result<Self, ActionError> {
                Ok($name { inner: finite_subgroup_carrier(g, h)? })
            }
        }

        impl<C: CarrierGroup> BinaryAction for $name<C> {
            type Point = C::Point;

            fn group(&self) -> &FiniteGroup {
                &self.inner.acting
            }

            fn apply(&self, g: usize, $x1: &C::Point, $x2: &C::Point) -> Result<C::Point, ActionError> {
                self.inner.check_point($x1)?;
                self.inner.check_point($x2)?;
                let $s = &self.inner.carrier;
                let $h = self
                    .inner
                    .members
                    .get(g)
                    .ok_or_else(|| ActionError::InvalidArgument(format!("no acting element #{g}")))?;
                let value = $body;
                self.inner.escape_check(g, $x1, $x2, value)
            }

            fn points(&self) -> Option<Vec<C::Point>> {
                self.inner.carrier.points()
            }

            fn render(&self, p: &C::Point) -> String {
                self.inner.carrier.render(p)
            }

            fn carrier_kind(&self) -> CarrierKind {
                self.inner.carrier.kind()
            }
        }
    };
}

conjugation_action!(
    /// `h(x1, x2) = x1^-1 h x1 x2` for `h` in a subgroup `H`.
    ConjugationI,
    |c, h, x1, x2| c.mul(&c.mul(&c.mul(&c.inv(x1)?, h), x1), x2)
);

conjugation_action!(
    /// `h(x, y) = x h x^-1 y` for `h` in a subgroup `H`. Always distributive;
    /// its orbits are the left cosets `xH`.
    ConjugationII,
    |c, h, x, y| c.mul(&c.mul(&c.mul(x, h), &c.inv(x)?), y)
);

/// A binary action on `{0, .., n-1}` given by an explicit table
/// `table[g][x1][x2]`. Entries are not range-checked on construction, so a
/// table can describe a map that escapes the carrier.
#[derive(Clone, Debug)]
pub struct TableAction {
    group: FiniteGroup,
    names: Vec<String>,
    table: Vec<usize>,
}

impl TableAction {
    pub fn new(group: FiniteGroup, names: Vec<String>, table: Vec<Vec<Vec<usize>>>) -> Result<Self, ActionError> {
        let n = names.len();
        if table.len() != group.order() {
            return Err(ActionError::BadTable(format!(
                "{} group slices for a group of order {}",
                table.len(),
                group.order()
            )));
        }
        let mut flat = Vec::with_capacity(group.order() * n * n);
        for (g, slice) in table.iter().enumerate() {
            if slice.len() != n || slice.iter().any(|row| row.len() != n) {
                return Err(ActionError::BadTable(format!("slice {g} is not {n}x{n}")));
            }
            flat.extend(slice.iter().flatten().copied());
        }
        Ok(TableAction { group, names, table: flat })
    }

    /// `g(x1, x2) = x2` for every `g`.
    pub fn projection(group: FiniteGroup, names: Vec<String>) -> Self {
        let n = names.len();
        let table = (0..group.order() * n * n).map(|i| i % n).collect();
        TableAction { group, names, table }
    }

    /// Tabulates any finite binary action.
    pub fn tabulate<A: BinaryAction>(action: &A) -> Result<Self, ActionError> {
        let points = action.points().ok_or(ActionError::InfiniteCarrier)?;
        let index: HashMap<&A::Point, usize> = points.iter().enumerate().map(|(i, p)| (p, i)).collect();
        let mut table = Vec::with_capacity(action.group().order() * points.len() * points.len());
        for g in action.group().elements() {
            for x1 in &points {
                for x2 in &points {
                    let v = action.apply(g, x1, x2)?;
                    table.push(index[&v]);
                }
            }
        }
        let names = points.iter().map(|p| action.render(p)).collect();
        Ok(TableAction { group: action.group().clone(), names, table })
    }

    /// Overwrites one entry.
    pub fn with_entry(mut self, g: usize, x1: usize, x2: usize, value: usize) -> Self {
        let n = self.names.len();
        self.table[(g * n + x1) * n + x2] = value;
        self
    }

    pub fn size(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }
}

impl BinaryAction for TableAction {
    type Point = usize;

    fn group(&self) -> &FiniteGroup {
        &self.group
    }

    fn apply(&self, g: usize, x1: &usize, x2: &usize) -> Result<usize, ActionError> {
        let n = self.size();
        for x in [x1, x2] {
            if *x >= n {
                return Err(ActionError::OutsideCarrier(x.to_string()));
            }
        }
        if g >= self.group.order() {
            return Err(ActionError::InvalidArgument(format!("no acting element #{g}")));
        }
        let value = self.table[(g * n + x1) * n + x2];
        if value >= n {
            return Err(ActionError::CarrierEscape {
                g: self.group.name(g).to_string(),
                x1: self.names[*x1].clone(),
                x2: self.names[*x2].clone(),
                value: format!("#{value}"),
            });
        }
        Ok(value)
    }

    fn points(&self) -> Option<Vec<usize>> {
        Some((0..self.size()).collect())
    }

    fn render(&self, p: &usize) -> String {
        self.names.get(*p).cloned().unwrap_or_else(|| format!("#{p}"))
    }

    fn carrier_kind(&self) -> CarrierKind {
        CarrierKind::FiniteSet
    }
}

/// An ordinary action on `{0, .., n-1}` given by `table[g][x] = gx`.
#[derive(Clone, Debug)]
pub struct TableUnary {
    group: FiniteGroup,
    names: Vec<String>,
    table: Vec<Vec<usize>>,
}

impl TableUnary {
    /// Validates shape and the unary action axioms `ex = x`, `(gh)x = g(hx)`.
    pub fn new(group: FiniteGroup, names: Vec<String>, table: Vec<Vec<usize>>) -> Result<Self, ActionError> {
        let n = names.len();
        if table.len() != group.order() || table.iter().any(|row| row.len() != n || row.iter().any(|&v| v >= n)) {
            return Err(ActionError::BadTable(format!("expected {} rows of {n} point indices", group.order())));
        }
        let action = TableUnary { group, names, table };
        if let Some(v) = unary_axiom_violations(&action)?.into_iter().next() {
            return Err(ActionError::BadTable(format!("not an action: {v}")));
        }
        Ok(action)
    }

    /// `g . x = g x` on the group itself.
    pub fn left_translation(group: &FiniteGroup) -> Self {
        let table = group.elements().map(|g| group.elements().map(|x| group.mul(g, x)).collect()).collect();
        TableUnary { group: group.clone(), names: group.names().to_vec(), table }
    }

    /// `g . x = x` on `n` points.
    pub fn trivial(group: &FiniteGroup, n: usize) -> Self {
        let names = (0..n).map(|i| format!("p{i}")).collect();
        TableUnary { group: group.clone(), names, table: vec![(0..n).collect(); group.order()] }
    }

    /// Left multiplication on the left cosets of `h`; the kernel is the
    /// largest normal subgroup of `G` inside `h`.
    pub fn on_left_cosets(group: &FiniteGroup, h: &Subgroup) -> Result<Self, ActionError> {
        let blocks = group.left_cosets(h)?;
        let mut block_of = vec![0; group.order()];
        for (i, block) in blocks.iter().enumerate() {
            for &g in block {
                block_of[g] = i;
            }
        }
        let table =
            group.elements().map(|g| blocks.iter().map(|block| block_of[group.mul(g, block[0])]).collect()).collect();
        let names = blocks.iter().map(|b| format!("{}H", group.name(b[0]))).collect();
        Ok(TableUnary { group: group.clone(), names, table })
    }
}

impl UnaryAction for TableUnary {
    type Point = usize;

    fn group(&self) -> &FiniteGroup {
        &self.group
    }

    fn points(&self) -> Vec<usize> {
        (0..self.names.len()).collect()
    }

    fn act(&self, g: usize, x: &usize) -> Result<usize, ActionError> {
        self.table.get(g).and_then(|row| row.get(*x)).copied().ok_or_else(|| ActionError::OutsideCarrier(x.to_string()))
    }

    fn render(&self, p: &usize) -> String {
        self.names.get(*p).cloned().unwrap_or_else(|| format!("#{p}"))
    }
}

impl<U: UnaryAction> UnaryAction for &U {
    type Point = U::Point;

    fn group(&self) -> &FiniteGroup {
        (**self).group()
    }

    fn points(&self) -> Vec<U::Point> {
        (**self).points()
    }

    fn act(&self, g: usize, x: &U::Point) -> Result<U::Point, ActionError> {
        (**self).act(g, x)
    }

    fn render(&self, p: &U::Point) -> String {
        (**self).render(p)
    }
}

/// The binary action `g(x1, x2) = g x2` induced by an ordinary action.
#[derive(Clone, Debug)]
pub struct Induced<U>(pub U);

pub fn induced_action<U: UnaryAction>(u: U) -> Induced<U> {
    Induced(u)
}

impl<U: UnaryAction> BinaryAction for Induced<U> {
    type Point = U::Point;

    fn group(&self) -> &FiniteGroup {
        self.0.group()
    }

    fn apply(&self, g: usize, _x1: &U::Point, x2: &U::Point) -> Result<U::Point, ActionError> {
        self.0.act(g, x2)
    }

    fn points(&self) -> Option<Vec<U::Point>> {
        Some(self.0.points())
    }

    fn render(&self, p: &U::Point) -> String {
        self.0.render(p)
    }

    fn carrier_kind(&self) -> CarrierKind {
        CarrierKind::FiniteSet
    }
}

/// The ordinary action `g . (x1, x2) = (x1, g(x1, x2))` on `X x X`.
#[derive(Clone, Debug)]
pub struct GSquare<A: BinaryAction> {
    action: A,
    points: Vec<A::Point>,
}

pub fn natural_g_square<A: BinaryAction>(action: A) -> Result<GSquare<A>, ActionError> {
    let points = action.points().ok_or(ActionError::InfiniteCarrier)?;
    Ok(GSquare { action, points })
}

impl<A: BinaryAction> GSquare<A> {
    pub fn action(&self) -> &A {
        &self.action
    }
}

impl<A: BinaryAction> UnaryAction for GSquare<A> {
    type Point = (A::Point, A::Point);

    fn group(&self) -> &FiniteGroup {
        self.action.group()
    }

    fn points(&self) -> Vec<Self::Point> {
        self.points.iter().flat_map(|a| self.points.iter().map(move |b| (a.clone(), b.clone()))).collect()
    }

    fn act(&self, g: usize, (x1, x2): &Self::Point) -> Result<Self::Point, ActionError> {
        Ok((x1.clone(), self.action.apply(g, x1, x2)?))
    }

    fn render(&self, (x1, x2): &Self::Point) -> String {
        format!("({}, {})", self.action.render(x1), self.action.render(x2))
    }
}

type MemoTable<P> = RwLock<HashMap<(usize, P, P), P>>;

/// Caches `apply` results; safe for concurrent use.
pub struct Memoized<A: BinaryAction> {
    inner: A,
    memo: MemoTable<A::Point>,
}

impl<A: BinaryAction> Memoized<A> {
    pub fn new(inner: A) -> Self {
        Memoized { inner, memo: RwLock::new(HashMap::new()) }
    }

    pub fn cached(&self) -> usize {
        self.memo.read().expect("memo lock").len()
    }

    pub fn inner(&self) -> &A {
        &self.inner
    }
}

impl<A: BinaryAction> BinaryAction for Memoized<A> {
    type Point = A::Point;

    fn group(&self) -> &FiniteGroup {
        self.inner.group()
    }

    fn apply(&self, g: usize, x1: &A::Point, x2: &A::Point) -> Result<A::Point, ActionError> {
        let key = (g, x1.clone(), x2.clone());
        if let Some(v) = self.memo.read().expect("memo lock").get(&key) {
            return Ok(v.clone());
        }
        let v = self.inner.apply(g, x1, x2)?;
        self.memo.write().expect("memo lock").insert(key, v.clone());
        Ok(v)
    }

    fn points(&self) -> Option<Vec<A::Point>> {
        self.inner.points()
    }

    fn render(&self, p: &A::Point) -> String {
        self.inner.render(p)
    }

    fn carrier_kind(&self) -> CarrierKind {
        self.inner.carrier_kind()
    }
}

/// `gh(x1, x2) != g(x1, h(x1, x2))`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CompositionViolation<P> {
    pub g: usize,
    pub h: usize,
    pub x1: P,
    pub x2: P,
    pub lhs: P,
    pub rhs: P,
}

/// `e(x1, x2) != x2`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IdentityViolation<P> {
    pub x1: P,
    pub x2: P,
    pub value: P,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AxiomReport<P> {
    pub eq1_violations: Vec<CompositionViolation<P>>,
    pub eq2_violations: Vec<IdentityViolation<P>>,
    /// Number of `(g, h, x1, x2)` quadruples checked for the composition law.
    pub checked: usize,
}

impl<P> AxiomReport<P> {
    pub fn holds(&self) -> bool {
        self.eq1_violations.is_empty() && self.eq2_violations.is_empty()
    }
}

/// Checks both binary action axioms on every pair of `domain` points and every
/// pair of group elements. Violations are listed in canonical order
/// (group indices, then domain order) regardless of thread count.
pub fn verify_axioms<A: BinaryAction>(action: &A, domain: &[A::Point]) -> Result<AxiomReport<A::Point>, ActionError> {
    let group = action.group();
    let e = group.identity();

    let mut eq2_violations = Vec::new();
    for x1 in domain {
        for x2 in domain {
            let value = action.apply(e, x1, x2)?;
            if &value != x2 {
                eq2_violations.push(IdentityViolation { x1: x1.clone(), x2: x2.clone(), value });
            }
        }
    }

    let n = group.order();
    let per_pair: Vec<Result<Vec<CompositionViolation<A::Point>>, ActionError>> = (0..n * n)
        .into_par_iter()
        .map(|gh| {
            let (g, h) = (gh / n, gh % n);
            let product = group.mul(g, h);
            let mut found = Vec::new();
            for x1 in domain {
                for x2 in domain {
                    let lhs = action.apply(product, x1, x2)?;
                    let inner = action.apply(h, x1, x2)?;
                    let rhs = action.apply(g, x1, &inner)?;
                    if lhs != rhs {
                        found.push(CompositionViolation { g, h, x1: x1.clone(), x2: x2.clone(), lhs, rhs });
                    }
                }
            }
            Ok(found)
        })
        .collect();
    let mut eq1_violations = Vec::new();
    for chunk in per_pair {
        eq1_violations.extend(chunk?);
    }
    Ok(AxiomReport { eq1_violations, eq2_violations, checked: n * n * domain.len() * domain.len() })
}

/// [`verify_axioms`] over the whole (finite) carrier.
pub fn verify_axioms_exhaustive<A: BinaryAction>(action: &A) -> Result<AxiomReport<A::Point>, ActionError> {
    let points = action.points().ok_or(ActionError::InfiniteCarrier)?;
    verify_axioms(action, &points)
}

/// Human-readable descriptions of every failure of `ex = x` or `(gh)x = g(hx)`.
pub fn unary_axiom_violations<U: UnaryAction>(u: &U) -> Result<Vec<String>, ActionError> {
    let group = u.group();
    let points = u.points();
    let mut out = Vec::new();
    for x in &points {
        if &u.act(group.identity(), x)? != x {
            out.push(format!("e . {} != {}", u.render(x), u.render(x)));
        }
    }
    for g in group.elements() {
        for h in group.elements() {
            for x in &points {
                let lhs = u.act(group.mul(g, h), x)?;
                let rhs = u.act(g, &u.act(h, x)?)?;
                if lhs != rhs {
                    out.push(format!(
                        "({} {}) . {} = {} but {} . ({} . {}) = {}",
                        group.name(g),
                        group.name(h),
                        u.render(x),
                        u.render(&lhs),
                        group.name(g),
                        group.name(h),
                        u.render(x),
                        u.render(&rhs)
                    ));
                }
            }
        }
    }
    Ok(out)
}

/// `Ker = { g : gx = x for all x }`.
pub fn kernel<U: UnaryAction>(u: &U) -> Result<Subgroup, ActionError> {
    let points = u.points();
    let mut members = Vec::new();
    for g in u.group().elements() {
        let mut fixes_all = true;
        for x in &points {
            if &u.act(g, x)? != x {
                fixes_all = false;
                break;
            }
        }
        if fixes_all {
            members.push(g);
        }
    }
    Ok(u.group().subgroup_from_members(&members)?)
}

/// Whether `set` is invariant under an ordinary action.
pub fn is_invariant<U: UnaryAction>(u: &U, set: &BTreeSet<U::Point>) -> Result<bool, ActionError> {
    for g in u.group().elements() {
        for x in set {
            if !set.contains(&u.act(g, x)?) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}
