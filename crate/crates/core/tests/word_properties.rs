use std::collections::BTreeSet;

use gspace::action::{ConjugationI, Gl2};
use gspace::orbit::orbit_layers;
use gspace::word::{matrix_h, matrix_x, symbolic_layers, word_mul};
use gspace::{DWord, Mat2};
use proptest::prelude::*;

fn letters() -> impl Strategy<Value = String> {
    prop::collection::vec(prop::sample::select(vec!['h', 'x']), 0..=40).prop_map(|v| v.into_iter().collect())
}

/// Product of generator matrices, letter by letter.
fn letter_product(word: &str) -> Mat2 {
    word.chars().fold(Mat2::identity(), |acc, c| match c {
        'h' => &acc * &matrix_h(),
        _ => &acc * &matrix_x(),
    })
}

fn parse(word: &str) -> DWord {
    if word.is_empty() {
        DWord::identity()
    } else {
        word.parse().unwrap()
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn products_agree_with_matrices(u in letters(), v in letters()) {
        let product = word_mul(&parse(&u), &parse(&v));
        prop_assert_eq!(product.to_matrix(), &letter_product(&u) * &letter_product(&v));
    }

    #[test]
    fn normal_form_is_no_longer_than_the_input(u in letters()) {
        prop_assert!(parse(&u).length() as usize <= u.len());
    }

    #[test]
    fn multiplication_is_associative(a in letters(), b in letters(), c in letters()) {
        let (a, b, c) = (parse(&a), parse(&b), parse(&c));
        prop_assert_eq!((a * b) * c, a * (b * c));
    }
}

#[test]
fn generators_are_involutions() {
    assert_eq!(DWord::h() * DWord::h(), DWord::identity());
    assert_eq!(DWord::x() * DWord::x(), DWord::identity());
    assert!((&matrix_h() * &matrix_h()).is_identity());
    assert!((&matrix_x() * &matrix_x()).is_identity());
}

#[test]
fn xh_has_no_small_order() {
    let xh = &matrix_x() * &matrix_h();
    let mut power = Mat2::identity();
    for i in 1..=1000 {
        power = &power * &xh;
        assert!(!power.is_identity(), "(xh)^{i} = e");
        assert_ne!(DWord::xh_pow(i), DWord::identity());
    }
}

#[test]
fn symbolic_layers_match_matrix_layers() {
    let depth = 6;
    let symbolic = symbolic_layers(depth).unwrap();
    let action = ConjugationI::generated(Gl2, &[matrix_h()]).unwrap();
    let numeric = orbit_layers(&action, &matrix_x(), depth).unwrap();
    assert_eq!(numeric.layers.len(), depth);
    for (words, matrices) in symbolic.iter().zip(&numeric.layers) {
        let substituted: BTreeSet<Mat2> = words.iter().map(DWord::to_matrix).collect();
        assert_eq!(&substituted, matrices);
        assert_eq!(substituted.len(), words.len());
    }
}
