use gspace::{Mat2, SubgroupPredicate};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use proptest::prelude::*;

fn rational() -> impl Strategy<Value = BigRational> {
    (-1000i64..=1000, 1i64..=1000).prop_map(|(n, d)| BigRational::new(BigInt::from(n), BigInt::from(d)))
}

fn matrix() -> impl Strategy<Value = Mat2> {
    (rational(), rational(), rational(), rational()).prop_map(|(a, b, c, d)| Mat2::new(a, b, c, d))
}

fn invertible() -> impl Strategy<Value = Mat2> {
    matrix().prop_filter("singular", |m| !m.det().is_zero())
}

fn unitriangular() -> impl Strategy<Value = Mat2> {
    rational().prop_map(Mat2::unitriangular)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn determinant_is_multiplicative(a in matrix(), b in matrix()) {
        prop_assert_eq!((&a * &b).det(), a.det() * b.det());
    }

    #[test]
    fn inverse_is_an_involution(m in invertible()) {
        let inv = m.inv().unwrap();
        prop_assert!((&m * &inv).is_identity());
        prop_assert!((&inv * &m).is_identity());
        prop_assert_eq!(inv.inv().unwrap(), m);
    }

    #[test]
    fn multiplication_is_associative(a in matrix(), b in matrix(), c in matrix()) {
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
    }

    #[test]
    fn unitriangular_is_closed(a in unitriangular(), b in unitriangular()) {
        let pred = SubgroupPredicate::UpperUnitriangular;
        prop_assert!(pred.contains(&a) && pred.contains(&b));
        prop_assert!(pred.contains(&(&a * &b)));
        prop_assert!(pred.contains(&a.inv().unwrap()));
    }

    #[test]
    fn display_round_trips(m in matrix()) {
        prop_assert_eq!(m.to_string().parse::<Mat2>().unwrap(), m);
    }

    #[test]
    fn integer_powers_add(m in invertible(), i in -4i64..=4, j in -4i64..=4) {
        prop_assert_eq!(&m.pow(i).unwrap() * &m.pow(j).unwrap(), m.pow(i + j).unwrap());
    }
}

#[test]
fn singular_matrices_have_no_inverse() {
    assert!(Mat2::from_ints(1, 2, 2, 4).inv().is_err());
    assert!(Mat2::from_ints(0, 0, 0, 0).inv().is_err());
}
