//! Image sets, the layers `G^n(x, x)` and orbits.
//!
//! `G^1(x, x) = G(x, x)` and `G^n(x, x) = G(G^{n-1}(x, x), G^{n-1}(x, x))`.
//! The layers increase, and the orbit `[x]` (the least bi-invariant set
//! containing `x`) is their union. A finite carrier always stabilises; an
//! infinite one may not, in which case the engine only reports that no
//! fixpoint was reached within the depth bound.

use std::collections::BTreeSet;

use rayon::prelude::*;
use serde::Serialize;

use crate::action::{ActionError, BinaryAction};

pub type PointSet<P> = BTreeSet<P>;

pub const DEFAULT_MAX_DEPTH: usize = 8;

/// `K(A, B) = { g(a, b) : g in K, a in A, b in B }`.
pub fn image_of<A: BinaryAction>(
    action: &A,
    k: &[usize],
    first: &PointSet<A::Point>,
    second: &PointSet<A::Point>,
) -> Result<PointSet<A::Point>, ActionError> {
    let firsts: Vec<&A::Point> = first.iter().collect();
    let parts: Vec<Result<PointSet<A::Point>, ActionError>> = firsts
        .par_iter()
        .map(|a| {
            let mut out = PointSet::new();
            for &g in k {
                for b in second {
                    out.insert(action.apply(g, a, b)?);
                }
            }
            Ok(out)
        })
        .collect();
    let mut image = PointSet::new();
    for part in parts {
        image.extend(part?);
    }
    Ok(image)
}

/// `K(S, S)`.
pub fn image_set<A: BinaryAction>(
    action: &A,
    k: &[usize],
    s: &PointSet<A::Point>,
) -> Result<PointSet<A::Point>, ActionError> {
    image_of(action, k, s, s)
}

/// `G(S, S)` for the whole acting group.
pub fn full_image<A: BinaryAction>(action: &A, s: &PointSet<A::Point>) -> Result<PointSet<A::Point>, ActionError> {
    let all: Vec<usize> = action.group().elements().collect();
    image_set(action, &all, s)
}

/// `G(S, S) = S`.
pub fn is_bi_invariant<A: BinaryAction>(action: &A, s: &PointSet<A::Point>) -> Result<bool, ActionError> {
    Ok(&full_image(action, s)? == s)
}

/// The chain `G^1(x, x) ⊆ G^2(x, x) ⊆ ...`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OrbitLayers<P> {
    pub base: P,
    /// `layers[0]` is `G^1(x, x)`.
    pub layers: Vec<PointSet<P>>,
    /// The last two layers are equal.
    pub converged: bool,
    /// Number of layers computed.
    pub depth_reached: usize,
}

impl<P: Clone + Ord> OrbitLayers<P> {
    /// The least `n` with `G^n(x, x) = G^{n+1}(x, x)`, if reached.
    pub fn converged_at(&self) -> Option<usize> {
        self.converged.then(|| self.layers.len() - 1)
    }

    pub fn last(&self) -> &PointSet<P> {
        self.layers.last().expect("at least one layer")
    }

    /// The union of the computed layers, which is the last one.
    pub fn union(&self) -> &PointSet<P> {
        self.last()
    }

    /// The orbit, when the layers stabilised.
    pub fn orbit(&self) -> Option<&PointSet<P>> {
        self.converged.then(|| self.last())
    }

    pub fn sizes(&self) -> Vec<usize> {
        self.layers.iter().map(BTreeSet::len).collect()
    }
}

fn check_depth(max_depth: usize) -> Result<(), ActionError> {
    if max_depth == 0 {
        Err(ActionError::InvalidArgument("max_depth must be at least 1".into()))
    } else {
        Ok(())
    }
}

/// Computes up to `max_depth` layers, stopping once two consecutive layers
/// agree.
///
/// Each step only evaluates pairs with at least one point new in the
/// previous step: pairs inside the older layer were already expanded, and
/// `e(a1, a2) = a2` keeps the previous layer inside the next. The result
/// therefore matches [`orbit_layers_naive`] for any map satisfying the action
/// axioms.
pub fn orbit_layers<A: BinaryAction>(
    action: &A,
    x: &A::Point,
    max_depth: usize,
) -> Result<OrbitLayers<A::Point>, ActionError> {
    check_depth(max_depth)?;
    let group: Vec<usize> = action.group().elements().collect();
    let mut current: PointSet<A::Point> = PointSet::from([x.clone()]);
    let mut delta: Vec<A::Point> = vec![x.clone()];
    let mut layers: Vec<PointSet<A::Point>> = Vec::new();
    let mut converged = false;

    while layers.len() < max_depth {
        let old: Vec<&A::Point> = current.iter().collect();
        let parts: Vec<Result<Vec<A::Point>, ActionError>> = delta
            .par_iter()
            .map(|fresh| {
                let mut out = Vec::new();
                for &g in &group {
                    for &other in &old {
                        out.push(action.apply(g, fresh, other)?);
                        if other != fresh {
                            out.push(action.apply(g, other, fresh)?);
                        }
                    }
                }
                Ok(out)
            })
            .collect();
        let mut next = current.clone();
        for part in parts {
            next.extend(part?);
        }
        delta = next.difference(&current).cloned().collect();
        layers.push(next.clone());
        if layers.len() >= 2 && delta.is_empty() {
            converged = true;
            break;
        }
        current = next;
    }

    let depth_reached = layers.len();
    Ok(OrbitLayers { base: x.clone(), layers, converged, depth_reached })
}

/// Layers straight from the definition, recomputing every pair each step.
pub fn orbit_layers_naive<A: BinaryAction>(
    action: &A,
    x: &A::Point,
    max_depth: usize,
) -> Result<OrbitLayers<A::Point>, ActionError> {
    check_depth(max_depth)?;
    let mut layers = vec![full_image(action, &PointSet::from([x.clone()]))?];
    let mut converged = false;
    while layers.len() < max_depth {
        let next = full_image(action, layers.last().expect("non-empty"))?;
        let same = &next == layers.last().expect("non-empty");
        layers.push(next);
        if same {
            converged = true;
            break;
        }
    }
    let depth_reached = layers.len();
    Ok(OrbitLayers { base: x.clone(), layers, converged, depth_reached })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case", tag = "class", content = "depth")]
pub enum OrbitClass {
    /// `[x] = G^n(x, x)` with `n` minimal.
    FinitelyGenerated(usize),
    /// No fixpoint within the bound. This is not a proof of infinite
    /// generation.
    UndeterminedAt(usize),
}

pub fn classify_orbit<A: BinaryAction>(action: &A, x: &A::Point, max_depth: usize) -> Result<OrbitClass, ActionError> {
    let layers = orbit_layers(action, x, max_depth)?;
    Ok(match layers.converged_at() {
        Some(n) => OrbitClass::FinitelyGenerated(n),
        None => OrbitClass::UndeterminedAt(max_depth),
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case", tag = "verdict")]
pub enum Intersection<P> {
    /// A common point of the two layer unions: `x` or `y` themselves when
    /// possible, otherwise the least common point.
    Witness { point: P },
    /// No common point within `depth` layers. `certified` when both orbits
    /// stabilised, so they are disjoint outright.
    Disjoint { depth: usize, certified: bool },
}

/// Looks for a common point of `[x]` and `[y]` within `max_depth` layers.
pub fn orbits_intersect<A: BinaryAction>(
    action: &A,
    x: &A::Point,
    y: &A::Point,
    max_depth: usize,
) -> Result<Intersection<A::Point>, ActionError> {
    let lx = orbit_layers(action, x, max_depth)?;
    let ly = orbit_layers(action, y, max_depth)?;
    let common = if ly.union().contains(x) {
        Some(x)
    } else if lx.union().contains(y) {
        Some(y)
    } else {
        lx.union().intersection(ly.union()).next()
    };
    Ok(match common {
        Some(p) => Intersection::Witness { point: p.clone() },
        None => Intersection::Disjoint {
            depth: lx.depth_reached.max(ly.depth_reached),
            certified: lx.converged && ly.converged,
        },
    })
}

/// `S ∩ T` for bi-invariant `S` and `T`; the result is bi-invariant.
pub fn intersect_bi_invariant<A: BinaryAction>(
    action: &A,
    s: &PointSet<A::Point>,
    t: &PointSet<A::Point>,
) -> Result<PointSet<A::Point>, ActionError> {
    for set in [s, t] {
        if !is_bi_invariant(action, set)? {
            let names: Vec<String> = set.iter().map(|p| action.render(p)).collect();
            return Err(ActionError::InvalidArgument(format!("{{{}}} is not bi-invariant", names.join(", "))));
        }
    }
    Ok(s.intersection(t).cloned().collect())
}
