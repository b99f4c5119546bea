//! The two weak Hopf algebra structures on 𝕂.
//!
//! Δ, ε and S are literal tables on the basis. The counital maps ε_t and
//! ε_s are computed from Δ(1) and ε, never tabulated.

use std::fmt;
use std::str::FromStr;

use num_traits::Zero;
use serde::Serialize;

use crate::hybrid::{BasisIndex, HybridElement};
use crate::scalar::{Field, GaussianRational, ScalarError};
use crate::tensor::{tprod2, ApplyLeft, ApplyRight, CoproductMap, Endomorphism, Functional, LinearMap, Tensor2};
use crate::Scalar;

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize)]
pub enum Variant {
    A,
    B,
}

impl fmt::Display for Variant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Variant::A => "A",
            Variant::B => "B",
        })
    }
}

impl FromStr for Variant {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "a" | "A" => Ok(Variant::A),
            "b" | "B" => Ok(Variant::B),
            other => Err(format!("unknown variant `{other}` (expected a or b)")),
        }
    }
}

#[derive(Clone, PartialEq, Debug)]
pub struct StructureMaps<F> {
    pub variant: Variant,
    pub delta: CoproductMap<F>,
    pub counit: Functional<F>,
    pub antipode: Endomorphism<F>,
}

impl<F: Field> StructureMaps<F> {
    pub fn delta_ext(&self, x: &HybridElement<F>) -> Tensor2<F> {
        self.delta.apply(x)
    }

    pub fn counit_ext(&self, x: &HybridElement<F>) -> F {
        self.counit.apply(x)
    }

    pub fn antipode_ext(&self, x: &HybridElement<F>) -> HybridElement<F> {
        self.antipode.apply(x)
    }

    /// Δ(1).
    pub fn unit_coproduct(&self) -> &Tensor2<F> {
        self.delta.image(BasisIndex::One)
    }

    /// ε_t(h) = ε(1₍₁₎h)1₍₂₎
    pub fn eps_t(&self, h: &HybridElement<F>) -> HybridElement<F> {
        let shifted = self.unit_coproduct().t2_mul(&tprod2(h, &HybridElement::one()));
        shifted.apply_left(&self.counit)
    }

    /// ε_s(h) = ε(h1₍₂₎)1₍₁₎
    pub fn eps_s(&self, h: &HybridElement<F>) -> HybridElement<F> {
        let shifted = tprod2(&HybridElement::one(), h).t2_mul(self.unit_coproduct());
        shifted.apply_right(&self.counit)
    }

    pub fn eps_t_map(&self) -> Endomorphism<F> {
        LinearMap(BasisIndex::ALL.map(|i| self.eps_t(&HybridElement::basis(i))))
    }

    pub fn eps_s_map(&self) -> Endomorphism<F> {
        LinearMap(BasisIndex::ALL.map(|i| self.eps_s(&HybridElement::basis(i))))
    }

    pub fn try_map<G: Field, E>(&self, f: impl Fn(&F) -> Result<G, E>) -> Result<StructureMaps<G>, E> {
        let [d0, d1, d2, d3] = &self.delta.0;
        let [c0, c1, c2, c3] = &self.counit.0;
        let [s0, s1, s2, s3] = &self.antipode.0;
        Ok(StructureMaps {
            variant: self.variant,
            delta: LinearMap([d0.try_map(&f)?, d1.try_map(&f)?, d2.try_map(&f)?, d3.try_map(&f)?]),
            counit: LinearMap([f(c0)?, f(c1)?, f(c2)?, f(c3)?]),
            antipode: LinearMap([s0.try_map(&f)?, s1.try_map(&f)?, s2.try_map(&f)?, s3.try_map(&f)?]),
        })
    }
}

impl StructureMaps<Scalar> {
    /// Specializes `b := b0`.
    pub fn evaluate(&self, b0: &GaussianRational) -> Result<StructureMaps<GaussianRational>, ScalarError> {
        if b0.is_zero() {
            return Err(ScalarError::ZeroParameter);
        }
        self.try_map(|c| c.eval(b0))
    }

    /// Applies `i ↦ −i` to every structure constant.
    pub fn conj(&self) -> Self {
        let ok: Result<_, ScalarError> = self.try_map(|c| Ok(c.conj()));
        ok.expect("conjugation is total")
    }
}

fn term(c: Scalar, i: BasisIndex, j: BasisIndex) -> (Scalar, BasisIndex, BasisIndex) {
    (c, i, j)
}

fn element(c: [Scalar; 4]) -> HybridElement<Scalar> {
    HybridElement::new(c)
}

pub fn build_structure(v: Variant) -> StructureMaps<Scalar> {
    match v {
        Variant::A => variant_a(),
        Variant::B => variant_b(),
    }
}

fn variant_a() -> StructureMaps<Scalar> {
    use BasisIndex::*;
    let n = Scalar::from_i64;
    let half = Scalar::ratio(1, 2);
    let i = Scalar::i;
    let b = Scalar::b;
    let i_half = || i() * half.clone();
    let ib = || i() * b();
    let b2 = || b().pow(2);

    let delta_one = Tensor2::from_terms([
        term(half.clone(), One, One),
        term(-half.clone(), Mu, Mu),
        term(-i_half(), Nu, Mu),
        term(-i_half(), Mu, Nu),
        term(half.clone(), Nu, Nu),
    ]);
    let delta_g = Tensor2::from_terms([
        term(-half.clone(), Mu, One),
        term(-i_half(), Nu, One),
        term(b(), G, G),
        term(b(), Mu, G),
        term(ib(), Nu, G),
        term(-half.clone(), One, Mu),
        term(b(), G, Mu),
        term(b(), Mu, Mu),
        term(ib(), Nu, Mu),
        term(-i_half(), One, Nu),
        term(ib(), G, Nu),
        term(ib(), Mu, Nu),
        term(-b(), Nu, Nu),
    ]);
    let delta_mu = Tensor2::from_terms([term(n(1) / (n(2) * b()), Mu, Mu)]);
    let delta_nu = Tensor2::from_terms([
        term(-i_half(), Mu, One),
        term(half.clone(), Nu, One),
        term(-i_half(), One, Mu),
        term(i() / (n(2) * b()), Mu, Mu),
        term(half.clone(), One, Nu),
    ]);
    let counit = [n(2), n(1) / b(), n(2) * b(), n(2) * ib()];
    let antipode = [
        element([n(1), n(0), n(0), n(0)]),
        element([n(0), n(0), n(-1) + n(1) / (n(2) * b2()), -i()]),
        element([n(0), n(2) * b2(), n(2) * b2(), n(2) * i() * b2()]),
        element([n(0), n(2) * i() * b2(), -(i() - n(2) * i() * b2()), n(1) - n(2) * b2()]),
    ];
    StructureMaps {
        variant: Variant::A,
        delta: LinearMap([delta_one, delta_g, delta_mu, delta_nu]),
        counit: LinearMap(counit),
        antipode: LinearMap(antipode),
    }
}

fn variant_b() -> StructureMaps<Scalar> {
    use BasisIndex::*;
    let n = Scalar::from_i64;
    let half = Scalar::ratio(1, 2);
    let i = Scalar::i;
    let b = Scalar::b;
    let i_half = || i() * half.clone();
    let ib = || i() * b();
    let b2 = || b().pow(2);

    let delta_one = Tensor2::from_terms([
        term(half.clone(), One, One),
        term(-half.clone(), Mu, Mu),
        term(i_half(), Nu, Mu),
        term(i_half(), Mu, Nu),
        term(half.clone(), Nu, Nu),
    ]);
    let delta_g = Tensor2::from_terms([
        term(-half.clone(), Mu, One),
        term(i_half(), Nu, One),
        term(b(), G, G),
        term(b(), Mu, G),
        term(-ib(), Nu, G),
        term(-half.clone(), One, Mu),
        term(b(), G, Mu),
        term(b(), Mu, Mu),
        term(-ib(), Nu, Mu),
        term(i_half(), One, Nu),
        term(-ib(), G, Nu),
        term(-ib(), Mu, Nu),
        term(-b(), Nu, Nu),
    ]);
    let delta_mu = Tensor2::from_terms([term(n(1) / (n(2) * b()), Mu, Mu)]);
    let delta_nu = Tensor2::from_terms([
        term(i_half(), Mu, One),
        term(half.clone(), Nu, One),
        term(i_half(), One, Mu),
        term(-(i() / (n(2) * b())), Mu, Mu),
        term(half.clone(), One, Nu),
    ]);
    let counit = [n(2), n(1) / b(), n(2) * b(), -(n(2) * ib())];
    let antipode = [
        element([n(1), n(0), n(0), n(0)]),
        element([n(0), n(0), n(-1) + n(1) / (n(2) * b2()), i()]),
        element([n(0), n(2) * b2(), n(2) * b2(), -(n(2) * i() * b2())]),
        element([
            n(0),
            -(n(2) * i() * b2()),
            -(-i() + n(2) * i() * b2()),
            n(1) - n(2) * b2(),
        ]),
    ];
    StructureMaps {
        variant: Variant::B,
        delta: LinearMap([delta_one, delta_g, delta_mu, delta_nu]),
        counit: LinearMap(counit),
        antipode: LinearMap(antipode),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use BasisIndex::*;

    fn e(i: BasisIndex) -> HybridElement<Scalar> {
        HybridElement::basis(i)
    }

    #[test]
    fn shared_invariants() {
        for v in [Variant::A, Variant::B] {
            let s = build_structure(v);
            let inv_2b = Scalar::from_i64(1) / (Scalar::from_i64(2) * Scalar::b());
            assert_eq!(s.delta.image(Mu), &Tensor2::basis(Mu, Mu).scale(&inv_2b));
            assert_eq!(s.counit.image(One), &Scalar::from_i64(2));
            assert_eq!(s.counit.image(G), &Scalar::b().checked_inv().unwrap());
            assert_eq!(s.antipode.image(One), &e(One));
        }
    }

    #[test]
    fn reference_table_entries() {
        let a = build_structure(Variant::A);
        let b2 = Scalar::b().pow(2);
        let two_b2 = Scalar::from_i64(2) * b2;
        let s_mu = e(G).scale(&two_b2) + e(Mu).scale(&two_b2) + e(Nu).scale(&(Scalar::i() * two_b2.clone()));
        assert_eq!(a.antipode.image(Mu), &s_mu);
        let b = build_structure(Variant::B);
        assert_eq!(b.counit.image(Nu), &-(Scalar::from_i64(2) * Scalar::i() * Scalar::b()));
    }

    #[test]
    fn linear_extensions() {
        let a = build_structure(Variant::A);
        let inv_2b = Scalar::from_i64(1) / (Scalar::from_i64(2) * Scalar::b());
        assert_eq!(
            a.delta_ext(&(e(Mu) + e(G))),
            a.delta.image(G).clone() + Tensor2::basis(Mu, Mu).scale(&inv_2b)
        );
        assert!(a.counit_ext(&HybridElement::zero()).is_zero());
        let four_b2 = Scalar::from_i64(4) * Scalar::b().pow(2);
        assert_eq!(
            a.antipode_ext(&e(Mu).scale(&Scalar::from_i64(2))),
            e(G).scale(&four_b2) + e(Mu).scale(&four_b2) + e(Nu).scale(&(Scalar::i() * four_b2.clone()))
        );
    }

    #[test]
    fn counital_maps_of_unit() {
        for v in [Variant::A, Variant::B] {
            let s = build_structure(v);
            assert_eq!(s.eps_t(&e(One)), e(One));
            assert_eq!(s.eps_s(&e(One)), e(One));
        }
    }

    #[test]
    fn variant_b_is_conjugate_of_a() {
        let mut conj = build_structure(Variant::A).conj();
        conj.variant = Variant::B;
        assert_eq!(conj, build_structure(Variant::B));
    }

    #[test]
    fn evaluation_rejects_zero() {
        let a = build_structure(Variant::A);
        assert_eq!(
            a.evaluate(&GaussianRational::zero()).unwrap_err(),
            ScalarError::ZeroParameter
        );
        let at_one = a.evaluate(&GaussianRational::from(1)).unwrap();
        assert_eq!(at_one.counit.image(G), &GaussianRational::from(1));
    }

    #[test]
    fn variant_parsing() {
        assert_eq!("a".parse::<Variant>(), Ok(Variant::A));
        assert_eq!("B".parse::<Variant>(), Ok(Variant::B));
        assert!("c".parse::<Variant>().is_err());
    }
}
