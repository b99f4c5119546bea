mod common;

use common::{nonzero_scalar, sample_point, scalar};
use hybridhopf_core::{Field, GaussianRational, Scalar, ScalarError};
use num_traits::{One, Zero};
use proptest::prelude::*;

fn canonical(x: &Scalar) -> bool {
    let den = x.denominator();
    !den.is_zero()
        && den.leading().is_some_and(|c| c.is_one())
        && x.numerator().gcd(den).is_one()
        && (!x.numerator().is_zero() || den.is_one())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn addition_is_associative_and_commutative(x in scalar(), y in scalar(), z in scalar()) {
        prop_assert_eq!((x.clone() + y.clone()) + z.clone(), x.clone() + (y.clone() + z));
        prop_assert_eq!(x.clone() + y.clone(), y + x);
    }

    #[test]
    fn multiplication_is_associative_and_commutative(x in scalar(), y in scalar(), z in scalar()) {
        prop_assert_eq!((x.clone() * y.clone()) * z.clone(), x.clone() * (y.clone() * z));
        prop_assert_eq!(x.clone() * y.clone(), y * x);
    }

    #[test]
    fn distributivity(x in scalar(), y in scalar(), z in scalar()) {
        prop_assert_eq!(x.clone() * (y.clone() + z.clone()), x.clone() * y + x * z);
    }

    #[test]
    fn identities_and_inverses(x in scalar(), y in nonzero_scalar()) {
        prop_assert_eq!(x.clone() + Scalar::zero(), x.clone());
        prop_assert_eq!(x.clone() * Scalar::one(), x.clone());
        prop_assert!((x.clone() + (-x.clone())).is_zero());
        prop_assert_eq!(x.clone() - x, Scalar::zero());
        let inv = y.checked_inv().unwrap();
        prop_assert_eq!(y * inv, Scalar::one());
    }

    #[test]
    fn results_stay_canonical(x in scalar(), y in nonzero_scalar()) {
        for r in [x.clone() + y.clone(), x.clone() * y.clone(), x.clone() - y.clone(), x / y] {
            prop_assert!(canonical(&r), "{r:?}");
        }
    }

    #[test]
    fn normalize_is_idempotent(x in scalar()) {
        prop_assert_eq!(x.normalize(), x.clone());
        prop_assert_eq!(x.normalize().normalize(), x.normalize());
    }

    #[test]
    fn evaluation_is_a_homomorphism(x in scalar(), y in nonzero_scalar(), b0 in sample_point()) {
        let (Ok(xv), Ok(yv)) = (x.eval(&b0), y.eval(&b0)) else {
            return Err(TestCaseError::reject("pole"));
        };
        prop_assert_eq!((x.clone() + y.clone()).eval(&b0).unwrap(), xv.clone() + yv.clone());
        prop_assert_eq!((x * y.clone()).eval(&b0).unwrap(), xv * yv.clone());
        if let Some(yinv) = yv.checked_inv() {
            prop_assert_eq!(y.checked_inv().unwrap().eval(&b0).unwrap(), yinv);
        }
    }
}

#[test]
fn worked_examples() {
    let half = Scalar::ratio(1, 2);
    let i = Scalar::i();
    let b = Scalar::b();
    assert_eq!(
        half.clone() + half.clone() * i.clone(),
        (Scalar::one() + i.clone()) / Scalar::from_i64(2)
    );
    assert!((b.clone() + -b.clone()).is_zero());
    let inv_2b = (Scalar::from_i64(2) * b.clone()).checked_inv().unwrap();
    assert_eq!(inv_2b.clone() + inv_2b.clone(), b.checked_inv().unwrap());
    assert_eq!(b.clone() * inv_2b.clone(), half);
    assert_eq!(i.clone() * i.clone(), -Scalar::one());
    assert_eq!(i.checked_inv().unwrap(), -i.clone());
    assert!(Scalar::zero().checked_inv().is_none());
    assert_eq!(
        inv_2b.eval(&GaussianRational::one()).unwrap(),
        GaussianRational::from_ratio(1, 2)
    );
    let two_b2 = Scalar::from_i64(2) * b.pow(2);
    assert_eq!(two_b2.eval(&GaussianRational::i()).unwrap(), GaussianRational::from(-2));
    assert!(matches!(
        b.checked_inv().unwrap().eval(&GaussianRational::zero()),
        Err(ScalarError::EvalPole { .. })
    ));
}

#[test]
fn display_forms() {
    let b = Scalar::b();
    let two_b2 = Scalar::from_i64(2) * b.pow(2);
    let x = (two_b2.clone() - Scalar::one()) / two_b2;
    assert_eq!(x.to_string(), "(2*b^2 - 1)/(2*b^2)");
    assert_eq!((Scalar::from_i64(2) * b).checked_inv().unwrap().to_string(), "1/(2*b)");
    assert_eq!(Scalar::ratio(3, 4).to_string(), "3/4");
    assert_eq!(Scalar::i().to_string(), "i");
    assert_eq!(
        (Scalar::one() - Scalar::from_i64(2) * Scalar::i()).to_string(),
        "1 - 2*i"
    );
}
