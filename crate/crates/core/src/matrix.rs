//! Exact 2x2 rational matrices and structural subgroups of GL(2).

use std::collections::BTreeSet;
use std::fmt;
use std::ops::Mul;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Serialize, Serializer};
use thiserror::Error;

use crate::group::{FiniteGroup, GroupError};

/// Largest finite matrix group generated before giving up.
pub const MATRIX_CLOSURE_CAP: usize = 4096;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum MatrixError {
    #[error("matrix {0} is singular")]
    Singular(String),
    #[error("cannot parse matrix literal {0:?}")]
    Parse(String),
    #[error("cannot parse rational entry {0:?}")]
    Entry(String),
    #[error("generated matrix group is not finite within {0} elements")]
    NotFinite(usize),
}

/// A 2x2 matrix `[[a, b], [c, d]]` over the rationals.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Mat2 {
    pub a: BigRational,
    pub b: BigRational,
    pub c: BigRational,
    pub d: BigRational,
}

fn int(v: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(v))
}

impl Mat2 {
    pub fn new(a: BigRational, b: BigRational, c: BigRational, d: BigRational) -> Self {
        Mat2 { a, b, c, d }
    }

    /// Integer entries, row-major.
    pub fn from_ints(a: i64, b: i64, c: i64, d: i64) -> Self {
        Mat2::new(int(a), int(b), int(c), int(d))
    }

    pub fn identity() -> Self {
        Mat2::from_ints(1, 0, 0, 1)
    }

    /// `[[1, t], [0, 1]]`.
    pub fn unitriangular(t: BigRational) -> Self {
        Mat2::new(BigRational::one(), t, BigRational::zero(), BigRational::one())
    }

    pub fn det(&self) -> BigRational {
        &self.a * &self.d - &self.b * &self.c
    }

    pub fn is_invertible(&self) -> bool {
        !self.det().is_zero()
    }

    pub fn is_identity(&self) -> bool {
        *self == Mat2::identity()
    }

    pub fn inv(&self) -> Result<Mat2, MatrixError> {
        let det = self.det();
        if det.is_zero() {
            return Err(MatrixError::Singular(self.to_string()));
        }
        Ok(Mat2::new(&self.d / &det, -&self.b / &det, -&self.c / &det, &self.a / &det))
    }

    /// `self^k` by repeated squaring; negative exponents invert first.
    pub fn pow(&self, k: i64) -> Result<Mat2, MatrixError> {
        let mut base = if k < 0 { self.inv()? } else { self.clone() };
        let mut e = k.unsigned_abs();
        let mut acc = Mat2::identity();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        Ok(acc)
    }

    /// Smallest `n <= bound` with `self^n = I`.
    pub fn order_bounded(&self, bound: u64) -> Result<OrderVerdict, MatrixError> {
        if !self.is_invertible() {
            return Err(MatrixError::Singular(self.to_string()));
        }
        let mut power = self.clone();
        for n in 1..=bound {
            if power.is_identity() {
                return Ok(OrderVerdict::Finite(n));
            }
            power = &power * self;
        }
        Ok(OrderVerdict::ExceedsBound(bound))
    }

    /// `x^-1 m x`.
    pub fn conjugate_by(&self, x: &Mat2) -> Result<Mat2, MatrixError> {
        Ok(&(&x.inv()? * self) * x)
    }
}

impl Mul for &Mat2 {
    type Output = Mat2;

    fn mul(self, rhs: &Mat2) -> Mat2 {
        Mat2::new(
            &self.a * &rhs.a + &self.b * &rhs.c,
            &self.a * &rhs.b + &self.b * &rhs.d,
            &self.c * &rhs.a + &self.d * &rhs.c,
            &self.c * &rhs.b + &self.d * &rhs.d,
        )
    }
}

impl Mul for Mat2 {
    type Output = Mat2;

    fn mul(self, rhs: Mat2) -> Mat2 {
        &self * &rhs
    }
}

fn fmt_entry(q: &BigRational) -> String {
    if q.is_integer() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

impl fmt::Display for Mat2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[[{},{}],[{},{}]]", fmt_entry(&self.a), fmt_entry(&self.b), fmt_entry(&self.c), fmt_entry(&self.d))
    }
}

impl Serialize for Mat2 {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

/// Parses `p`, `-p` or `p/q`, optionally wrapped in double quotes.
pub fn parse_rational(text: &str) -> Result<BigRational, MatrixError> {
    let t = text.trim().trim_matches('"').trim();
    let bad = || MatrixError::Entry(text.to_string());
    match t.split_once('/') {
        Some((p, q)) => {
            let p = BigInt::from_str(p.trim()).map_err(|_| bad())?;
            let q = BigInt::from_str(q.trim()).map_err(|_| bad())?;
            if q.is_zero() {
                return Err(bad());
            }
            Ok(BigRational::new(p, q))
        }
        None => Ok(BigRational::from_integer(BigInt::from_str(t).map_err(|_| bad())?)),
    }
}

impl FromStr for Mat2 {
    type Err = MatrixError;

    /// Accepts `[[a,b],[c,d]]` where each entry is an integer or `p/q`,
    /// quoted or not.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || MatrixError::Parse(s.to_string());
        let inner = s.trim().strip_prefix('[').and_then(|r| r.strip_suffix(']')).ok_or_else(bad)?;
        let mut entries = Vec::with_capacity(4);
        for row in inner.split(']') {
            let row = row.trim().trim_start_matches(',').trim();
            if row.is_empty() {
                continue;
            }
            let row = row.strip_prefix('[').ok_or_else(bad)?;
            let cells: Vec<&str> = row.split(',').collect();
            if cells.len() != 2 {
                return Err(bad());
            }
            for cell in cells {
                entries.push(parse_rational(cell)?);
            }
        }
        let [a, b, c, d]: [BigRational; 4] = entries.try_into().map_err(|_| bad())?;
        Ok(Mat2::new(a, b, c, d))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum OrderVerdict {
    Finite(u64),
    ExceedsBound(u64),
}

/// A subgroup of GL(2, Q) described by a membership rule.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SubgroupPredicate {
    /// `{ [[1, t], [0, 1]] }`.
    UpperUnitriangular,
    /// A finite subgroup given by its elements (closed, sorted).
    FiniteListed(Vec<Mat2>),
    WholeGl2,
}

impl SubgroupPredicate {
    /// The finite subgroup generated by `gens`.
    pub fn finite(gens: &[Mat2]) -> Result<Self, MatrixError> {
        let (_, members) = finite_matrix_group(gens)?;
        Ok(SubgroupPredicate::FiniteListed(members))
    }

    pub fn kind(&self) -> &'static str {
        match self {
            SubgroupPredicate::UpperUnitriangular => "upper_unitriangular",
            SubgroupPredicate::FiniteListed(_) => "finite_listed",
            SubgroupPredicate::WholeGl2 => "whole_gl2",
        }
    }

    pub fn contains(&self, m: &Mat2) -> bool {
        match self {
            SubgroupPredicate::UpperUnitriangular => m.a.is_one() && m.d.is_one() && m.c.is_zero(),
            SubgroupPredicate::FiniteListed(members) => members.binary_search(m).is_ok(),
            SubgroupPredicate::WholeGl2 => m.is_invertible(),
        }
    }

    /// Membership in the normalizer `N(H) = { g : g^-1 H g = H }`.
    ///
    /// The normalizer of the unitriangular group in GL(2) is the group of
    /// invertible upper triangular matrices.
    pub fn normalizer_contains(&self, m: &Mat2) -> Result<bool, MatrixError> {
        if !m.is_invertible() {
            return Ok(false);
        }
        match self {
            SubgroupPredicate::UpperUnitriangular => Ok(m.c.is_zero()),
            SubgroupPredicate::WholeGl2 => Ok(true),
            SubgroupPredicate::FiniteListed(members) => {
                let inv = m.inv()?;
                let conjugated: BTreeSet<Mat2> = members.iter().map(|k| &(&inv * k) * m).collect();
                Ok(conjugated.len() == members.len() && conjugated.iter().all(|k| self.contains(k)))
            }
        }
    }
}

/// Closes `gens` under multiplication, returning the abstract group and the
/// matrices index-aligned with it.
pub fn finite_matrix_group(gens: &[Mat2]) -> Result<(FiniteGroup, Vec<Mat2>), MatrixError> {
    for g in gens {
        if !g.is_invertible() {
            return Err(MatrixError::Singular(g.to_string()));
        }
    }
    FiniteGroup::from_closure(gens, Mat2::identity(), |p, q| p * q, Mat2::to_string, MATRIX_CLOSURE_CAP).map_err(|e| {
        match e {
            GroupError::TooLarge(cap) => MatrixError::NotFinite(cap),
            other => unreachable!("matrix multiplication is a group law: {other}"),
        }
    })
}

/// Absolute value of the largest numerator or denominator, for reports.
pub fn height(m: &Mat2) -> BigInt {
    [&m.a, &m.b, &m.c, &m.d].iter().flat_map(|q| [q.numer().abs(), q.denom().abs()]).max().expect("four entries")
}
