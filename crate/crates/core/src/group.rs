//! Finite groups given by explicit Cayley tables.
//!
//! Elements are identified by their index in the group's element list; the
//! list order is the canonical order used for every iteration and report.

use std::collections::{BTreeSet, HashMap, VecDeque};
use std::fmt;
use std::hash::Hash;
use std::sync::atomic::{AtomicU64, Ordering};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

/// Groups up to this order have their associativity checked on every triple.
pub const DEFAULT_EXHAUSTIVE_BOUND: usize = 64;

/// Number of random triples checked for larger groups.
const SAMPLED_TRIPLES: usize = 20_000;
const SAMPLE_SEED: u64 = 0x6772_6f75_7073;

/// Hard cap on closures computed from generators.
pub const DEFAULT_CLOSURE_CAP: usize = 100_000;

static NEXT_GROUP_ID: AtomicU64 = AtomicU64::new(1);

fn fresh_id() -> u64 {
    NEXT_GROUP_ID.fetch_add(1, Ordering::Relaxed)
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GroupError {
    #[error("a group needs at least one element")]
    Empty,
    #[error("duplicate element name {0:?}")]
    DuplicateName(String),
    #[error("table row {row} has {len} entries, expected {expected}")]
    RaggedTable { row: usize, len: usize, expected: usize },
    #[error("table has {rows} rows, expected {expected}")]
    TableRows { rows: usize, expected: usize },
    #[error("table entry {value} at ({row}, {col}) is not an element index")]
    EntryOutOfRange { row: usize, col: usize, value: usize },
    #[error("operation is not associative: ({a} {b}) {c} != {a} ({b} {c})")]
    NotAssociative { a: String, b: String, c: String },
    #[error("no two-sided identity element")]
    NoIdentity,
    #[error("element {0} has no two-sided inverse")]
    NoInverse(String),
    #[error("unknown element {0:?}")]
    UnknownElement(String),
    #[error("element index {0} is out of range")]
    IndexOutOfRange(usize),
    #[error("elements belong to different groups")]
    ForeignElement,
    #[error("subgroup belongs to a different group")]
    ForeignSubgroup,
    #[error("{0:?} is not closed under the group operation")]
    NotClosed(Vec<String>),
    #[error("invalid permutation {0:?}")]
    InvalidPermutation(Vec<usize>),
    #[error("permutations act on different numbers of points")]
    MixedDegrees,
    #[error("generated group exceeds {0} elements")]
    TooLarge(usize),
}

/// An element tagged with the group it belongs to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct GroupElement {
    group: u64,
    index: usize,
}

impl GroupElement {
    pub fn index(self) -> usize {
        self.index
    }
}

/// A finite group with a total multiplication table.
#[derive(Clone, Debug)]
pub struct FiniteGroup {
    id: u64,
    names: Vec<String>,
    /// Row-major: `table[a * n + b] = a * b`.
    table: Vec<usize>,
    identity: usize,
    inverses: Vec<usize>,
}

impl FiniteGroup {
    /// Builds a group from element names and a row-major Cayley table,
    /// validating all group axioms.
    pub fn from_table(names: Vec<String>, table: Vec<Vec<usize>>) -> Result<Self, GroupError> {
        Self::from_table_with_bound(names, table, DEFAULT_EXHAUSTIVE_BOUND)
    }

    /// Like [`FiniteGroup::from_table`], checking associativity exhaustively
    /// only when the order is at most `exhaustive_bound` and on a fixed-seed
    /// sample of triples otherwise.
    pub fn from_table_with_bound(
        names: Vec<String>,
        table: Vec<Vec<usize>>,
        exhaustive_bound: usize,
    ) -> Result<Self, GroupError> {
        let n = names.len();
        if n == 0 {
            return Err(GroupError::Empty);
        }
        let mut seen = BTreeSet::new();
        for name in &names {
            if !seen.insert(name.as_str()) {
                return Err(GroupError::DuplicateName(name.clone()));
            }
        }
        if table.len() != n {
            return Err(GroupError::TableRows { rows: table.len(), expected: n });
        }
        let mut flat = Vec::with_capacity(n * n);
        for (row, entries) in table.iter().enumerate() {
            if entries.len() != n {
                return Err(GroupError::RaggedTable { row, len: entries.len(), expected: n });
            }
            for (col, &value) in entries.iter().enumerate() {
                if value >= n {
                    return Err(GroupError::EntryOutOfRange { row, col, value });
                }
                flat.push(value);
            }
        }

        let at = |a: usize, b: usize| flat[a * n + b];
        let identity =
            (0..n).find(|&e| (0..n).all(|g| at(e, g) == g && at(g, e) == g)).ok_or(GroupError::NoIdentity)?;
        let mut inverses = Vec::with_capacity(n);
        for (g, name) in names.iter().enumerate() {
            let inv = (0..n)
                .find(|&h| at(g, h) == identity && at(h, g) == identity)
                .ok_or_else(|| GroupError::NoInverse(name.clone()))?;
            inverses.push(inv);
        }

        let assoc_fail = |a: usize, b: usize, c: usize| at(at(a, b), c) != at(a, at(b, c));
        let failure = if n <= exhaustive_bound {
            (0..n)
                .flat_map(|a| (0..n).flat_map(move |b| (0..n).map(move |c| (a, b, c))))
                .find(|&(a, b, c)| assoc_fail(a, b, c))
        } else {
            let mut rng = ChaCha8Rng::seed_from_u64(SAMPLE_SEED);
            (0..SAMPLED_TRIPLES)
                .map(|_| (rng.gen_range(0..n), rng.gen_range(0..n), rng.gen_range(0..n)))
                .find(|&(a, b, c)| assoc_fail(a, b, c))
        };
        if let Some((a, b, c)) = failure {
            return Err(GroupError::NotAssociative { a: names[a].clone(), b: names[b].clone(), c: names[c].clone() });
        }

        Ok(FiniteGroup { id: fresh_id(), names, table: flat, identity, inverses })
    }

    /// Closes `gens` under `mul` and builds the resulting group. Elements are
    /// listed in ascending `Ord` order of their values; the values are
    /// returned alongside, index-aligned with the group.
    pub fn from_closure<T, M, N>(
        gens: &[T],
        identity: T,
        mul: M,
        name: N,
        cap: usize,
    ) -> Result<(Self, Vec<T>), GroupError>
    where
        T: Clone + Ord + Hash,
        M: Fn(&T, &T) -> T,
        N: Fn(&T) -> String,
    {
        let mut found: BTreeSet<T> = BTreeSet::new();
        let mut queue = VecDeque::new();
        found.insert(identity.clone());
        queue.push_back(identity);
        while let Some(current) = queue.pop_front() {
            for g in gens {
                let next = mul(&current, g);
                if !found.contains(&next) {
                    if found.len() >= cap {
                        return Err(GroupError::TooLarge(cap));
                    }
                    found.insert(next.clone());
                    queue.push_back(next);
                }
            }
        }
        let values: Vec<T> = found.into_iter().collect();
        let position: HashMap<&T, usize> = values.iter().enumerate().map(|(i, v)| (v, i)).collect();
        let table = values.iter().map(|a| values.iter().map(|b| position[&mul(a, b)]).collect()).collect();
        let names = values.iter().map(name).collect();
        // Closure under a finite set of generators of a finite monoid is a
        // group; table validation still runs to catch a non-associative `mul`.
        let group = FiniteGroup::from_table(names, table)?;
        Ok((group, values))
    }

    /// The permutation group generated by `gens`, each given in one-line
    /// notation. Images may be 0-based (`[1, 0, 2]`) or 1-based
    /// (`[2, 1, 3]`); the two are told apart by whether `0` occurs.
    ///
    /// Products compose right to left: `(p q)(i) = p(q(i))`. Element names are
    /// 1-based cycle notation, e.g. `(1 2 3)`, with `()` for the identity.
    pub fn from_permutations(gens: &[Vec<usize>]) -> Result<Self, GroupError> {
        let mut normalized = Vec::with_capacity(gens.len());
        for perm in gens {
            normalized.push(normalize_permutation(perm)?);
        }
        let degree = normalized.first().map_or(0, Vec::len);
        if normalized.iter().any(|p| p.len() != degree) {
            return Err(GroupError::MixedDegrees);
        }
        let identity: Vec<usize> = (0..degree).collect();
        let (group, _) = FiniteGroup::from_closure(
            &normalized,
            identity,
            |p, q| q.iter().map(|&i| p[i]).collect(),
            |p| cycle_notation(p),
            DEFAULT_CLOSURE_CAP,
        )?;
        Ok(group)
    }

    pub fn order(&self) -> usize {
        self.names.len()
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, g: usize) -> &str {
        &self.names[g]
    }

    /// Looks up an element by name. Whitespace is ignored when no exact match
    /// exists, so `(12)` finds `(1 2)`.
    pub fn index_of(&self, name: &str) -> Result<usize, GroupError> {
        if let Some(i) = self.names.iter().position(|n| n == name) {
            return Ok(i);
        }
        let squash = |s: &str| s.chars().filter(|c| !c.is_whitespace()).collect::<String>();
        let wanted = squash(name);
        self.names.iter().position(|n| squash(n) == wanted).ok_or_else(|| GroupError::UnknownElement(name.to_string()))
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a * self.order() + b]
    }

    #[inline]
    pub fn inv(&self, a: usize) -> usize {
        self.inverses[a]
    }

    /// `x^-1 g x`.
    pub fn conjugate(&self, g: usize, by: usize) -> usize {
        self.mul(self.mul(self.inv(by), g), by)
    }

    /// `g^-1 h^-1 g h` on raw indices.
    pub fn commutator_of(&self, g: usize, h: usize) -> usize {
        self.mul(self.mul(self.inv(g), self.inv(h)), self.mul(g, h))
    }

    pub fn element(&self, index: usize) -> Result<GroupElement, GroupError> {
        if index < self.order() {
            Ok(GroupElement { group: self.id, index })
        } else {
            Err(GroupError::IndexOutOfRange(index))
        }
    }

    pub fn element_named(&self, name: &str) -> Result<GroupElement, GroupError> {
        self.element(self.index_of(name)?)
    }

    /// The commutator `[g, h] = g^-1 h^-1 g h`.
    pub fn commutator(&self, g: GroupElement, h: GroupElement) -> Result<GroupElement, GroupError> {
        if g.group != self.id || h.group != self.id {
            return Err(GroupError::ForeignElement);
        }
        self.element(self.commutator_of(g.index, h.index))
    }

    pub fn is_abelian(&self) -> bool {
        let n = self.order();
        (0..n).all(|a| (a + 1..n).all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.order()
    }

    fn check_index(&self, g: usize) -> Result<(), GroupError> {
        if g < self.order() {
            Ok(())
        } else {
            Err(GroupError::IndexOutOfRange(g))
        }
    }

    fn check_owned(&self, h: &Subgroup) -> Result<(), GroupError> {
        if h.group == self.id {
            Ok(())
        } else {
            Err(GroupError::ForeignSubgroup)
        }
    }

    fn subgroup_unchecked(&self, members: BTreeSet<usize>) -> Subgroup {
        Subgroup { group: self.id, members: members.into_iter().collect() }
    }

    pub fn whole(&self) -> Subgroup {
        self.subgroup_unchecked(self.elements().collect())
    }

    pub fn trivial_subgroup(&self) -> Subgroup {
        self.subgroup_unchecked([self.identity].into())
    }

    /// The smallest subgroup containing `gens`.
    pub fn subgroup_generated(&self, gens: &[usize]) -> Result<Subgroup, GroupError> {
        for &g in gens {
            self.check_index(g)?;
        }
        let mut members = BTreeSet::from([self.identity]);
        let mut queue = VecDeque::from([self.identity]);
        while let Some(current) = queue.pop_front() {
            for &g in gens {
                let next = self.mul(current, g);
                if members.insert(next) {
                    queue.push_back(next);
                }
            }
        }
        Ok(self.subgroup_unchecked(members))
    }

    /// Wraps an explicit member list, checking that it is a subgroup.
    pub fn subgroup_from_members(&self, members: &[usize]) -> Result<Subgroup, GroupError> {
        for &g in members {
            self.check_index(g)?;
        }
        let set: BTreeSet<usize> = members.iter().copied().collect();
        let closed = set.contains(&self.identity)
            && set.iter().all(|&a| set.contains(&self.inv(a)) && set.iter().all(|&b| set.contains(&self.mul(a, b))));
        if !closed {
            return Err(GroupError::NotClosed(set.iter().map(|&g| self.names[g].clone()).collect()));
        }
        Ok(self.subgroup_unchecked(set))
    }

    /// `N_G(H) = { g : g^-1 H g = H }`.
    pub fn normalizer(&self, h: &Subgroup) -> Result<Subgroup, GroupError> {
        self.check_owned(h)?;
        let members =
            self.elements().filter(|&g| h.members.iter().all(|&k| h.contains(self.conjugate(k, g)))).collect();
        Ok(self.subgroup_unchecked(members))
    }

    pub fn is_normal(&self, h: &Subgroup) -> Result<bool, GroupError> {
        Ok(self.normalizer(h)?.order() == self.order())
    }

    /// `G' = <[g, h] : g, h in G>`.
    pub fn commutator_subgroup(&self) -> Subgroup {
        let commutators: BTreeSet<usize> = self
            .elements()
            .flat_map(|g| self.elements().map(move |h| (g, h)))
            .map(|(g, h)| self.commutator_of(g, h))
            .collect();
        let gens: Vec<usize> = commutators.into_iter().collect();
        self.subgroup_generated(&gens).expect("commutators are group elements")
    }

    /// The left cosets `xH`, each sorted, listed in order of their smallest
    /// element.
    pub fn left_cosets(&self, h: &Subgroup) -> Result<Vec<Vec<usize>>, GroupError> {
        self.check_owned(h)?;
        let mut assigned = vec![false; self.order()];
        let mut blocks = Vec::new();
        for x in self.elements() {
            if assigned[x] {
                continue;
            }
            let block: BTreeSet<usize> = h.members.iter().map(|&k| self.mul(x, k)).collect();
            for &y in &block {
                assigned[y] = true;
            }
            blocks.push(block.into_iter().collect());
        }
        Ok(blocks)
    }

    /// Every subgroup, sorted by order and then by member list.
    pub fn all_subgroups(&self) -> Vec<Subgroup> {
        let cyclic: BTreeSet<Vec<usize>> =
            self.elements().map(|g| self.subgroup_generated(&[g]).expect("in range").members).collect();
        let mut all = cyclic.clone();
        let mut frontier: Vec<Vec<usize>> = cyclic.iter().cloned().collect();
        // Every subgroup is the join of its cyclic subgroups.
        while !frontier.is_empty() {
            let mut next = Vec::new();
            for a in &frontier {
                for b in &cyclic {
                    let gens: Vec<usize> = a.iter().chain(b.iter()).copied().collect();
                    let joined = self.subgroup_generated(&gens).expect("in range").members;
                    if all.insert(joined.clone()) {
                        next.push(joined);
                    }
                }
            }
            frontier = next;
        }
        let mut subgroups: Vec<Subgroup> =
            all.into_iter().map(|members| Subgroup { group: self.id, members }).collect();
        subgroups.sort_by(|a, b| a.order().cmp(&b.order()).then_with(|| a.members.cmp(&b.members)));
        subgroups
    }

    /// The subgroup `h` as a group in its own right. Index `i` of the result
    /// corresponds to `h.members()[i]`.
    pub fn restrict(&self, h: &Subgroup) -> Result<FiniteGroup, GroupError> {
        self.check_owned(h)?;
        let position: HashMap<usize, usize> = h.members.iter().enumerate().map(|(i, &g)| (g, i)).collect();
        let m = h.order();
        let mut table = Vec::with_capacity(m * m);
        for &a in &h.members {
            for &b in &h.members {
                table.push(position[&self.mul(a, b)]);
            }
        }
        Ok(FiniteGroup {
            id: fresh_id(),
            names: h.members.iter().map(|&g| self.names[g].clone()).collect(),
            table,
            identity: position[&self.identity],
            inverses: h.members.iter().map(|&g| position[&self.inv(g)]).collect(),
        })
    }

    /// Row-major copy of the Cayley table.
    pub fn table(&self) -> Vec<Vec<usize>> {
        self.table.chunks(self.order()).map(<[usize]>::to_vec).collect()
    }

    pub fn render_set(&self, members: &[usize]) -> String {
        let names: Vec<&str> = members.iter().map(|&g| self.name(g)).collect();
        format!("{{{}}}", names.join(", "))
    }
}

impl fmt::Display for FiniteGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "group of order {}", self.order())
    }
}

/// A subgroup of a specific [`FiniteGroup`]; members are sorted indices.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Subgroup {
    group: u64,
    members: Vec<usize>,
}

impl Subgroup {
    pub fn members(&self) -> &[usize] {
        &self.members
    }

    pub fn order(&self) -> usize {
        self.members.len()
    }

    pub fn contains(&self, g: usize) -> bool {
        self.members.binary_search(&g).is_ok()
    }

    pub fn is_subset_of(&self, other: &Subgroup) -> bool {
        self.group == other.group && self.members.iter().all(|&g| other.contains(g))
    }
}

fn normalize_permutation(perm: &[usize]) -> Result<Vec<usize>, GroupError> {
    let one_based = !perm.is_empty() && !perm.contains(&0);
    let shifted: Vec<usize> = if one_based { perm.iter().map(|&i| i - 1).collect() } else { perm.to_vec() };
    let mut hit = vec![false; shifted.len()];
    for &i in &shifted {
        if i >= shifted.len() || std::mem::replace(&mut hit[i], true) {
            return Err(GroupError::InvalidPermutation(perm.to_vec()));
        }
    }
    Ok(shifted)
}

/// 1-based cycle notation, fixed points omitted.
pub fn cycle_notation(perm: &[usize]) -> String {
    let mut seen = vec![false; perm.len()];
    let mut out = String::new();
    for start in 0..perm.len() {
        if seen[start] || perm[start] == start {
            continue;
        }
        let mut cycle = Vec::new();
        let mut i = start;
        while !seen[i] {
            seen[i] = true;
            cycle.push((i + 1).to_string());
            i = perm[i];
        }
        out.push('(');
        out.push_str(&cycle.join(" "));
        out.push(')');
    }
    if out.is_empty() {
        out.push_str("()");
    }
    out
}
