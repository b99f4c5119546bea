#![allow(dead_code)]

use hybridhopf_core::{BPolynomial, Element, Field, GaussianRational, Scalar, Tensor2};
use proptest::prelude::*;

pub fn gaussian() -> impl Strategy<Value = GaussianRational> {
    (-4i64..=4, 1i64..=3, -4i64..=4, 1i64..=3).prop_map(|(a, da, c, dc)| {
        GaussianRational::from_ratio(a, da) + GaussianRational::from_ratio(c, dc) * GaussianRational::i()
    })
}

pub fn polynomial(max_degree: usize) -> impl Strategy<Value = BPolynomial> {
    prop::collection::vec(gaussian(), 0..=max_degree + 1).prop_map(BPolynomial::new)
}

pub fn nonzero_polynomial(max_degree: usize) -> impl Strategy<Value = BPolynomial> {
    polynomial(max_degree).prop_filter("nonzero", |p| !p.is_zero())
}

pub fn scalar() -> impl Strategy<Value = Scalar> {
    (polynomial(2), nonzero_polynomial(2)).prop_map(|(n, d)| Scalar::new(n, d).unwrap())
}

pub fn nonzero_scalar() -> impl Strategy<Value = Scalar> {
    scalar().prop_filter("nonzero", |x| !num_traits::Zero::is_zero(x))
}

/// Mostly zero, otherwise a polynomial of degree at most 2.
pub fn sparse_entry() -> impl Strategy<Value = Scalar> {
    prop_oneof![
        2 => Just(Scalar::from_i64(0)),
        3 => polynomial(2).prop_map(Scalar::from_polynomial),
    ]
}

pub fn small_int_scalar() -> impl Strategy<Value = Scalar> {
    prop_oneof![
        (-3i64..=3).prop_map(Scalar::from_i64),
        (-3i64..=3).prop_map(|n| Scalar::from_i64(n) * Scalar::b()),
        (-3i64..=3).prop_map(|n| Scalar::from_i64(n) * Scalar::i()),
    ]
}

pub fn element() -> impl Strategy<Value = Element> {
    prop::array::uniform4(prop_oneof![1 => Just(Scalar::from_i64(0)), 2 => small_int_scalar()]).prop_map(Element::new)
}

pub fn tensor2() -> impl Strategy<Value = Tensor2<Scalar>> {
    prop::collection::vec((small_int_scalar(), 0usize..4, 0usize..4), 0..5).prop_map(|terms| {
        Tensor2::from_terms(terms.into_iter().map(|(c, i, j)| {
            (
                c,
                hybridhopf_core::BasisIndex::from_index(i).unwrap(),
                hybridhopf_core::BasisIndex::from_index(j).unwrap(),
            )
        }))
    })
}

/// Nonzero parameter values used for evaluation.
pub fn sample_point() -> impl Strategy<Value = GaussianRational> {
    gaussian().prop_filter("nonzero", |x| !num_traits::Zero::is_zero(x))
}
