use hybridhopf_core::checker::elements_span_equal;
use hybridhopf_core::integrals::{
    compare_systems, derive_integral_system, derived_integral_space, integral_space, is_integral,
    paper_integral_system, reference_integral_basis, IntegralError,
};
use hybridhopf_core::{build_structure, Element, GaussianRational, Side, Source, Variant};

#[test]
fn derived_spaces_are_two_dimensional_and_match_reference_bases() {
    let a = build_structure(Variant::A);
    for side in [Side::Left, Side::Right] {
        let space = integral_space(side, Variant::A, Source::Derived).unwrap();
        assert_eq!(space.dim(), 2, "{side}");
        let reference = reference_integral_basis(side);
        assert!(elements_span_equal(&space.basis, &reference), "{side}");
        assert_eq!(
            space.basis, reference,
            "{side}: echelon basis reproduces the reference one"
        );
        for v in space.basis.iter().chain(&reference) {
            assert!(is_integral(v, side, &a));
        }
        assert!(space.exceptional_denominators().is_empty());
    }
}

#[test]
fn reference_systems_have_the_derived_kernels() {
    for side in [Side::Left, Side::Right] {
        let derived = integral_space(side, Variant::A, Source::Derived).unwrap();
        let reference = integral_space(side, Variant::A, Source::Paper).unwrap();
        assert!(elements_span_equal(&derived.basis, &reference.basis), "{side}");
        let cmp = compare_systems(side, Variant::A).unwrap();
        assert_eq!(cmp.derived_rank, 2);
        assert_eq!(cmp.paper_rank, 2);
        assert_eq!(cmp.first_unexplained_row, None);
        assert!(cmp.same_kernel);
        assert_eq!(paper_integral_system(side, Variant::A).unwrap().rows(), 7);
    }
}

#[test]
fn reference_systems_exist_only_for_variant_a() {
    assert_eq!(
        paper_integral_system(Side::Left, Variant::B).unwrap_err(),
        IntegralError::UnsupportedVariant(Variant::B)
    );
}

#[test]
fn variant_b_integrals_are_conjugates() {
    let bv = build_structure(Variant::B);
    for side in [Side::Left, Side::Right] {
        let space = integral_space(side, Variant::B, Source::Derived).unwrap();
        assert_eq!(space.dim(), 2);
        let conj: Vec<Element> = reference_integral_basis(side).iter().map(Element::conj).collect();
        assert!(elements_span_equal(&space.basis, &conj));
        assert!(space.basis.iter().all(|v| is_integral(v, side, &bv)));
    }
}

#[test]
fn numeric_integral_spaces_specialize_the_symbolic_ones() {
    let a = build_structure(Variant::A);
    for b0 in [
        GaussianRational::from(1),
        GaussianRational::from(2),
        GaussianRational::from_ratio(3, 5),
        GaussianRational::i(),
    ] {
        let na = a.evaluate(&b0).unwrap();
        for side in [Side::Left, Side::Right] {
            let space = derived_integral_space(side, &na);
            let reference: Vec<_> = reference_integral_basis(side)
                .iter()
                .map(|v| v.evaluate(&b0).unwrap())
                .collect();
            assert!(elements_span_equal(&space.basis, &reference), "{side} at b={b0}");
            assert_eq!(derive_integral_system(side, &na).rows(), 16);
        }
    }
}
