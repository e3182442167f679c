//! Normal forms in the group generated by two involutions `h` and `x` whose
//! product `xh` has infinite order (the infinite dihedral group).
//!
//! Every element other than `e, x, h, hx` has exactly one of the forms
//!
//! * `(xh)^i`
//! * `(xh)^i x`
//! * `h(xh)^i`
//! * `h(xh)^i x`
//!
//! with `i >= 1`. The four short words are kept as separate base cases so
//! that the four long forms keep their positive exponents.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};
use thiserror::Error;

use crate::action::{ActionError, CarrierGroup, CarrierKind, ConjugationI};
use crate::matrix::Mat2;
use crate::orbit::{orbit_layers, OrbitLayers};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum WordError {
    #[error("form {0:?} needs an exponent of at least 1")]
    ZeroExponent(Shape),
    #[error("{0:?} takes no exponent")]
    UnexpectedExponent(Shape),
    #[error("cannot parse word {0:?}")]
    Parse(String),
    #[error("{0} is not one of e, h")]
    NotActing(String),
    #[error(transparent)]
    Action(#[from] ActionError),
}

/// The shape of a normal form. Declaration order is the tie-break order
/// used when several words share the largest power of `xh`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Shape {
    Identity,
    X,
    H,
    HX,
    XhPow,
    XhPowX,
    HXhPow,
    HXhPowX,
}

impl Shape {
    fn is_form(self) -> bool {
        matches!(self, Shape::XhPow | Shape::XhPowX | Shape::HXhPow | Shape::HXhPowX)
    }

    /// The shape as a word pattern in the exponent `i`.
    pub fn label(self) -> &'static str {
        match self {
            Shape::Identity => "e",
            Shape::X => "x",
            Shape::H => "h",
            Shape::HX => "hx",
            Shape::XhPow => "(xh)^i",
            Shape::XhPowX => "(xh)^i x",
            Shape::HXhPow => "h(xh)^i",
            Shape::HXhPowX => "h(xh)^i x",
        }
    }
}

/// A group element in normal form.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DWord {
    shape: Shape,
    exp: u64,
}

impl DWord {
    pub fn new(shape: Shape, exp: u64) -> Result<Self, WordError> {
        match (shape.is_form(), exp) {
            (true, 0) => Err(WordError::ZeroExponent(shape)),
            (false, e) if e != 0 => Err(WordError::UnexpectedExponent(shape)),
            _ => Ok(DWord { shape, exp }),
        }
    }

    pub const fn identity() -> Self {
        DWord { shape: Shape::Identity, exp: 0 }
    }

    pub const fn x() -> Self {
        DWord { shape: Shape::X, exp: 0 }
    }

    pub const fn h() -> Self {
        DWord { shape: Shape::H, exp: 0 }
    }

    /// `(xh)^i`.
    pub fn xh_pow(i: u64) -> Self {
        Self::from_coords(i as i64, false)
    }

    pub fn shape(&self) -> Shape {
        self.shape
    }

    /// The power of `xh` in the normal form; 0 for the base cases.
    pub fn power(&self) -> u64 {
        self.exp
    }

    /// Writes the element as `(xh)^n x^r`, `r` in {0, 1}. Uses `x (xh) = (xh)^-1 x`
    /// and `h = x (xh)`.
    fn coords(&self) -> (i64, bool) {
        let i = self.exp as i64;
        match self.shape {
            Shape::Identity => (0, false),
            Shape::X => (0, true),
            Shape::H => (-1, true),
            Shape::HX => (-1, false),
            Shape::XhPow => (i, false),
            Shape::XhPowX => (i, true),
            Shape::HXhPow => (-(i + 1), true),
            Shape::HXhPowX => (-(i + 1), false),
        }
    }

    fn from_coords(n: i64, reflect: bool) -> Self {
        let (shape, exp) = match (n, reflect) {
            (0, false) => (Shape::Identity, 0),
            (0, true) => (Shape::X, 0),
            (-1, false) => (Shape::HX, 0),
            (-1, true) => (Shape::H, 0),
            (n, false) if n > 0 => (Shape::XhPow, n as u64),
            (n, true) if n > 0 => (Shape::XhPowX, n as u64),
            (n, false) => (Shape::HXhPowX, (-n - 1) as u64),
            (n, true) => (Shape::HXhPow, (-n - 1) as u64),
        };
        DWord { shape, exp }
    }

    /// Length of the reduced word over `{h, x}`.
    pub fn length(&self) -> u64 {
        match self.shape {
            Shape::Identity => 0,
            Shape::X | Shape::H => 1,
            Shape::HX => 2,
            Shape::XhPow => 2 * self.exp,
            Shape::XhPowX | Shape::HXhPow => 2 * self.exp + 1,
            Shape::HXhPowX => 2 * self.exp + 2,
        }
    }

    /// The reduced word spelled out over `{h, x}`; `e` for the identity.
    pub fn letters(&self) -> String {
        let body = "xh".repeat(self.exp as usize);
        match self.shape {
            Shape::Identity => "e".into(),
            Shape::X => "x".into(),
            Shape::H => "h".into(),
            Shape::HX => "hx".into(),
            Shape::XhPow => body,
            Shape::XhPowX => body + "x",
            Shape::HXhPow => format!("h{body}"),
            Shape::HXhPowX => format!("h{body}x"),
        }
    }

    pub fn inverse(&self) -> Self {
        let (n, r) = self.coords();
        if r {
            *self
        } else {
            Self::from_coords(-n, false)
        }
    }

    /// Substitutes `h = [[1,0],[0,-1]]` and `x = [[-1,0],[1,1]]`.
    pub fn to_matrix(&self) -> Mat2 {
        let (n, r) = self.coords();
        let xh = &matrix_x() * &matrix_h();
        let t = xh.pow(n).expect("xh is invertible");
        if r {
            &t * &matrix_x()
        } else {
            t
        }
    }

    /// All elements whose reduced word has length at most `max_len`.
    pub fn up_to_length(max_len: u64) -> Vec<DWord> {
        let mut out = vec![DWord::identity()];
        for len in 1..=max_len {
            for first in ['h', 'x'] {
                let word: String = (0..len).map(|i| if (i % 2 == 0) == (first == 'x') { 'x' } else { 'h' }).collect();
                out.push(word.parse().expect("alternating word"));
            }
        }
        out.sort();
        out
    }
}

pub fn matrix_h() -> Mat2 {
    Mat2::from_ints(1, 0, 0, -1)
}

pub fn matrix_x() -> Mat2 {
    Mat2::from_ints(-1, 0, 1, 1)
}

/// Product of normal forms: `(xh)^a x^p (xh)^b x^q = (xh)^(a ± b) x^(p+q)`.
pub fn word_mul(u: &DWord, v: &DWord) -> DWord {
    let (a, p) = u.coords();
    let (b, q) = v.coords();
    let n = if p { a - b } else { a + b };
    DWord::from_coords(n, p ^ q)
}

impl std::ops::Mul for DWord {
    type Output = DWord;

    fn mul(self, rhs: DWord) -> DWord {
        word_mul(&self, &rhs)
    }
}

/// `hgen(x1, x2) = x1^-1 hgen x1 x2` for `hgen` in `{e, h}`.
pub fn word_apply(hgen: &DWord, x1: &DWord, x2: &DWord) -> Result<DWord, WordError> {
    if *hgen != DWord::identity() && *hgen != DWord::h() {
        return Err(WordError::NotActing(hgen.to_string()));
    }
    Ok(x1.inverse() * *hgen * *x1 * *x2)
}

impl fmt::Display for DWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.exp <= 1 {
            return f.write_str(&self.letters());
        }
        let i = self.exp;
        match self.shape {
            Shape::XhPow => write!(f, "(xh)^{i}"),
            Shape::XhPowX => write!(f, "(xh)^{i} x"),
            Shape::HXhPow => write!(f, "h(xh)^{i}"),
            Shape::HXhPowX => write!(f, "h(xh)^{i} x"),
            _ => unreachable!("base cases have exponent 0"),
        }
    }
}

impl Serialize for DWord {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl FromStr for DWord {
    type Err = WordError;

    /// Accepts words over `h`, `x` (and `e`), with `(xh)^k` and `(hx)^k`
    /// blocks, in any combination: `hxhx`, `h(xh)^3 x`, `e`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || WordError::Parse(s.to_string());
        let chars: Vec<char> = s.chars().filter(|c| !c.is_whitespace()).collect();
        let mut acc = DWord::identity();
        let mut i = 0;
        while i < chars.len() {
            match chars[i] {
                'h' => acc = acc * DWord::h(),
                'x' => acc = acc * DWord::x(),
                'e' | '1' if chars.len() == 1 => {}
                '(' => {
                    let close = chars[i..].iter().position(|&c| c == ')').ok_or_else(bad)? + i;
                    let inner: String = chars[i + 1..close].iter().collect();
                    let block: DWord = if inner.is_empty() { return Err(bad()) } else { inner.parse()? };
                    i = close + 1;
                    let mut k: i64 = 1;
                    if chars.get(i) == Some(&'^') {
                        let digits: String =
                            chars[i + 1..].iter().take_while(|c| c.is_ascii_digit() || **c == '-').collect();
                        k = digits.parse().map_err(|_| bad())?;
                        i += 1 + digits.len();
                    }
                    let (n, r) = block.coords();
                    let power = if r {
                        // An involution: odd powers give the block back.
                        if k.rem_euclid(2) == 1 {
                            block
                        } else {
                            DWord::identity()
                        }
                    } else {
                        DWord::from_coords(n.checked_mul(k).ok_or_else(bad)?, false)
                    };
                    acc = acc * power;
                    continue;
                }
                _ => return Err(bad()),
            }
            i += 1;
        }
        Ok(acc)
    }
}

/// The infinite dihedral group as a carrier.
#[derive(Clone, Copy, Debug, Default)]
pub struct InfiniteDihedral;

impl CarrierGroup for InfiniteDihedral {
    type Point = DWord;

    fn mul(&self, a: &DWord, b: &DWord) -> DWord {
        word_mul(a, b)
    }

    fn inv(&self, a: &DWord) -> Result<DWord, ActionError> {
        Ok(a.inverse())
    }

    fn identity(&self) -> DWord {
        DWord::identity()
    }

    fn contains(&self, _: &DWord) -> bool {
        true
    }

    fn points(&self) -> Option<Vec<DWord>> {
        None
    }

    fn render(&self, a: &DWord) -> String {
        a.to_string()
    }

    fn kind(&self) -> CarrierKind {
        CarrierKind::WordSet
    }
}

/// `H = {e, h}` acting on the infinite dihedral group by `x1^-1 h x1 x2`.
pub fn involution_action() -> ConjugationI<InfiniteDihedral> {
    ConjugationI::generated(InfiniteDihedral, &[DWord::h()]).expect("h is an involution")
}

/// The layers `H^1(x, x), .., H^n(x, x)` over the word carrier.
pub fn symbolic_layers(n: usize) -> Result<Vec<BTreeSet<DWord>>, WordError> {
    let layers: OrbitLayers<DWord> = orbit_layers(&involution_action(), &DWord::x(), n)?;
    Ok(layers.layers)
}

/// One step of the growth argument: from the element of `H^k` with the
/// largest power of `xh`, one of `h(x, y)` or `h(xh, y)` has a larger power
/// and so lies in `H^{k+1}` but not in `H^k`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GrowthStep {
    pub k: usize,
    /// Largest power of `xh` in `H^k`.
    pub y: DWord,
    pub form: Shape,
    /// 1 to 4: which of `h(xh, y)` (forms i, ii) or `h(x, y)` (forms iii, iv)
    /// is used.
    pub case: u8,
    /// The first argument, `xh` or `x`.
    pub first: DWord,
    pub produced: DWord,
    /// `produced` is in `H^{k+1}`.
    pub in_next: bool,
    /// `produced` is not in `H^k`.
    pub new: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GrowthCertificate {
    pub steps: Vec<GrowthStep>,
}

impl GrowthCertificate {
    /// Every step produced a new element of power `k + 2`.
    pub fn is_valid(&self) -> bool {
        self.steps.iter().all(|s| s.in_next && s.new && s.produced.power() == s.y.power() + 2)
    }
}

/// Replays the growth argument for `k = 1..=n`.
pub fn growth_certificate(n: usize) -> Result<GrowthCertificate, WordError> {
    let layers = symbolic_layers(n + 1)?;
    let h = DWord::h();
    let mut steps = Vec::with_capacity(n);
    for k in 1..=n {
        let layer = &layers[k - 1];
        let next = &layers[k];
        let y = *layer
            .iter()
            .max_by(|a, b| a.power().cmp(&b.power()).then(b.shape.cmp(&a.shape)))
            .expect("layers are non-empty");
        let (case, first) = match y.shape {
            Shape::XhPow | Shape::Identity => (1, DWord::xh_pow(1)),
            Shape::XhPowX | Shape::X => (2, DWord::xh_pow(1)),
            Shape::HXhPow | Shape::H => (3, DWord::x()),
            Shape::HXhPowX | Shape::HX => (4, DWord::x()),
        };
        let produced = word_apply(&h, &first, &y)?;
        steps.push(GrowthStep {
            k,
            y,
            form: y.shape,
            case,
            first,
            produced,
            in_next: next.contains(&produced),
            new: !layer.contains(&produced),
        });
    }
    Ok(GrowthCertificate { steps })
}

/// Whether every element of `set` is `x` or has one of the four long forms.
pub fn all_in_listed_forms(set: &BTreeSet<DWord>) -> bool {
    set.iter().all(|w| *w == DWord::x() || w.shape.is_form())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::action::BinaryAction;

    fn w(s: &str) -> DWord {
        s.parse().unwrap()
    }

    /// Product of letter matrices, independent of the normal form code.
    fn letters_matrix(s: &str) -> Mat2 {
        s.chars().fold(Mat2::identity(), |acc, c| match c {
            'h' => &acc * &matrix_h(),
            'x' => &acc * &matrix_x(),
            _ => acc,
        })
    }

    #[test]
    fn involutions() {
        assert_eq!(DWord::h() * DWord::h(), DWord::identity());
        assert_eq!(DWord::x() * DWord::x(), DWord::identity());
    }

    #[test]
    fn identity_is_neutral() {
        for u in DWord::up_to_length(7) {
            assert_eq!(u * DWord::identity(), u);
            assert_eq!(DWord::identity() * u, u);
            assert_eq!(u * u.inverse(), DWord::identity());
        }
    }

    #[test]
    fn rewriting_steps_from_the_growth_cases() {
        for k in 1..6 {
            let y = DWord::xh_pow(k);
            let xh = DWord::xh_pow(1);
            // (xh)^-1 h (xh) (xh)^k = h(xh)^{k+2}
            assert_eq!(xh.inverse() * DWord::h() * xh * y, DWord::new(Shape::HXhPow, k + 2).unwrap());
            // x^-1 h x h (xh)^k = (xh)^{k+2}
            assert_eq!(DWord::x().inverse() * DWord::h() * DWord::x() * DWord::h() * y, DWord::xh_pow(k + 2));
        }
    }

    #[test]
    fn apply_examples() {
        let (e, h, x) = (DWord::identity(), DWord::h(), DWord::x());
        assert_eq!(word_apply(&e, &x, &h).unwrap(), h);
        assert_eq!(word_apply(&h, &x, &x).unwrap(), w("xh"));
        assert_eq!(word_apply(&h, &x, &word_apply(&h, &x, &x).unwrap()).unwrap(), x);
        assert_eq!(word_apply(&h, &w("xh"), &x).unwrap(), w("h(xh)^2 x"));
        assert_eq!(word_apply(&h, &w("xh"), &w("xh")).unwrap(), w("h(xh)^3"));
        assert!(matches!(word_apply(&x, &x, &x), Err(WordError::NotActing(_))));
    }

    #[test]
    fn normal_forms_are_unique() {
        let words = DWord::up_to_length(20);
        let distinct: BTreeSet<DWord> = words.iter().copied().collect();
        assert_eq!(distinct.len(), words.len());
        assert_eq!(words.len(), 41);
        let matrices: BTreeSet<Mat2> = words.iter().map(DWord::to_matrix).collect();
        assert_eq!(matrices.len(), words.len());
    }

    #[test]
    fn rendering_round_trips() {
        for u in DWord::up_to_length(12) {
            assert_eq!(u.to_string().parse::<DWord>().unwrap(), u, "{u}");
            assert_eq!(u.letters().parse::<DWord>().unwrap(), u);
            assert_eq!(u.letters().len() as u64, u.length().max(1));
        }
        assert_eq!(DWord::new(Shape::HXhPowX, 3).unwrap().to_string(), "h(xh)^3 x");
        assert_eq!(DWord::new(Shape::XhPowX, 1).unwrap().to_string(), "xhx");
        assert_eq!(w("(hx)^2"), w("hxhx"));
        assert_eq!(w("(xh)^-2"), w("hxhx"));
        assert!("xy".parse::<DWord>().is_err());
        assert!("(xh".parse::<DWord>().is_err());
    }

    #[test]
    fn constructor_validates_exponents() {
        assert!(DWord::new(Shape::XhPow, 0).is_err());
        assert!(DWord::new(Shape::X, 1).is_err());
        assert!(DWord::new(Shape::HXhPow, 4).is_ok());
    }

    #[test]
    fn matrices_agree_with_letters() {
        for u in DWord::up_to_length(15) {
            assert_eq!(u.to_matrix(), letters_matrix(&u.letters()));
        }
    }

    #[test]
    fn first_two_layers() {
        let layers = symbolic_layers(2).unwrap();
        assert_eq!(layers[0], BTreeSet::from([w("x"), w("xh")]));
        assert_eq!(layers[1], BTreeSet::from([w("x"), w("xh"), w("h(xh)^2 x"), w("h(xh)^3")]));
    }

    #[test]
    fn third_layer_grows() {
        let layers = symbolic_layers(3).unwrap();
        assert!(layers[1].is_subset(&layers[2]) && layers[1] != layers[2]);
        assert!(layers[2].iter().any(|u| u.power() >= 5));
        assert!(layers.iter().all(all_in_listed_forms));
    }

    #[test]
    fn certificate_first_steps() {
        let cert = growth_certificate(2).unwrap();
        let first = &cert.steps[0];
        assert_eq!((first.y, first.case, first.produced), (w("xh"), 1, w("h(xh)^3")));
        let second = &cert.steps[1];
        assert_eq!((second.y, second.case, second.produced), (w("h(xh)^3"), 3, w("(xh)^5")));
        assert!(cert.is_valid());
    }

    #[test]
    fn action_matches_word_apply() {
        let action = involution_action();
        assert_eq!(action.group().order(), 2);
        let sample = DWord::up_to_length(6);
        for x1 in &sample {
            for x2 in &sample {
                assert_eq!(action.apply_member(&DWord::h(), x1, x2).unwrap(), word_apply(&DWord::h(), x1, x2).unwrap());
            }
        }
    }
}
