//! The hybrid numbers 𝕂 = span{1, g, μ, ν} with
//! g² = −1, μ² = 0, ν² = 1, gν = −νg = μ + g.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::Zero;
use serde::Serialize;

use crate::scalar::{fmt_combination, scale_by_int, Field, GaussianRational, ScalarError};
use crate::Scalar;

/// Basis order `(1, g, μ, ν)`; every vector and tensor index uses it.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, PartialOrd, Ord, Serialize)]
pub enum BasisIndex {
    One,
    G,
    Mu,
    Nu,
}

impl BasisIndex {
    pub const ALL: [BasisIndex; 4] = [BasisIndex::One, BasisIndex::G, BasisIndex::Mu, BasisIndex::Nu];

    pub fn index(self) -> usize {
        self as usize
    }

    pub fn from_index(i: usize) -> Option<Self> {
        Self::ALL.get(i).copied()
    }

    /// ASCII name used in all output.
    pub fn name(self) -> &'static str {
        match self {
            BasisIndex::One => "1",
            BasisIndex::G => "g",
            BasisIndex::Mu => "mu",
            BasisIndex::Nu => "nu",
        }
    }
}

impl fmt::Display for BasisIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// `PRODUCT_TABLE[i][j]` holds the coordinates of `e_i · e_j`.
const PRODUCT_TABLE: [[[i8; 4]; 4]; 4] = [
    // 1 · (1, g, μ, ν)
    [[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1]],
    // g · 1 = g, g·g = −1, g·μ = 1 − ν, g·ν = μ + g
    [[0, 1, 0, 0], [-1, 0, 0, 0], [1, 0, 0, -1], [0, 1, 1, 0]],
    // μ · 1 = μ, μ·g = ν + 1, μ·μ = 0, μ·ν = −μ
    [[0, 0, 1, 0], [1, 0, 0, 1], [0, 0, 0, 0], [0, 0, -1, 0]],
    // ν · 1 = ν, ν·g = −μ − g, ν·μ = μ, ν·ν = 1
    [[0, 0, 0, 1], [0, -1, -1, 0], [0, 0, 1, 0], [1, 0, 0, 0]],
];

/// The structure constants of 𝕂: the 16 basis products.
pub struct StructureConstants;

impl StructureConstants {
    /// Coordinates of `e_i · e_j` as small integers.
    pub fn raw(i: BasisIndex, j: BasisIndex) -> [i8; 4] {
        PRODUCT_TABLE[i.index()][j.index()]
    }

    pub fn product<F: Field>(i: BasisIndex, j: BasisIndex) -> HybridElement<F> {
        HybridElement::from_ints(Self::raw(i, j))
    }

    /// Nonzero `(k, c)` pairs with `e_i · e_j = Σ c·e_k`.
    pub(crate) fn terms(i: usize, j: usize) -> impl Iterator<Item = (usize, i64)> {
        PRODUCT_TABLE[i][j]
            .into_iter()
            .enumerate()
            .filter(|(_, c)| *c != 0)
            .map(|(k, c)| (k, c as i64))
    }
}

/// `c₁·1 + c₂·g + c₃·μ + c₄·ν`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct HybridElement<F> {
    coeffs: [F; 4],
}

impl<F: Field> HybridElement<F> {
    pub fn new(coeffs: [F; 4]) -> Self {
        Self { coeffs }
    }

    pub fn from_ints(c: [i8; 4]) -> Self {
        Self::new(c.map(|x| F::from_i64(x as i64)))
    }

    pub fn zero() -> Self {
        Self::new(std::array::from_fn(|_| F::zero()))
    }

    pub fn one() -> Self {
        Self::basis(BasisIndex::One)
    }

    pub fn basis(i: BasisIndex) -> Self {
        Self::new(std::array::from_fn(
            |k| if k == i.index() { F::one() } else { F::zero() },
        ))
    }

    /// Coordinates from a slice of length 4.
    pub fn from_slice(v: &[F]) -> Option<Self> {
        let arr: &[F; 4] = v.try_into().ok()?;
        Some(Self::new(arr.clone()))
    }

    pub fn coeff(&self, i: BasisIndex) -> &F {
        &self.coeffs[i.index()]
    }

    pub fn coeffs(&self) -> &[F; 4] {
        &self.coeffs
    }

    pub fn to_vec(&self) -> Vec<F> {
        self.coeffs.to_vec()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    pub fn scale(&self, c: &F) -> Self {
        Self::new(std::array::from_fn(|k| c.clone() * self.coeffs[k].clone()))
    }

    pub fn map<G: Field>(&self, f: impl Fn(&F) -> G) -> HybridElement<G> {
        HybridElement::new(std::array::from_fn(|k| f(&self.coeffs[k])))
    }

    pub fn try_map<G: Field, E>(&self, f: impl Fn(&F) -> Result<G, E>) -> Result<HybridElement<G>, E> {
        let [a, b, c, d] = &self.coeffs;
        Ok(HybridElement::new([f(a)?, f(b)?, f(c)?, f(d)?]))
    }

    /// Product in 𝕂 by bilinear extension of the table.
    pub fn hmul(&self, rhs: &Self) -> Self {
        let mut out = Self::zero();
        for (i, x) in self.coeffs.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in rhs.coeffs.iter().enumerate() {
                if y.is_zero() {
                    continue;
                }
                let w = x.clone() * y.clone();
                for (k, c) in StructureConstants::terms(i, j) {
                    out.coeffs[k] = out.coeffs[k].clone() + scale_by_int(&w, c);
                }
            }
        }
        out
    }
}

impl HybridElement<Scalar> {
    /// Substitutes `b := b0` in every coefficient. The result has constant
    /// coefficients.
    pub fn eval_at(&self, b0: &GaussianRational) -> Result<Self, ScalarError> {
        if b0.is_zero() {
            return Err(ScalarError::ZeroParameter);
        }
        self.try_map(|c| c.eval(b0).map(Scalar::constant))
    }

    /// Like [`eval_at`](Self::eval_at), landing in the Gaussian rationals.
    pub fn evaluate(&self, b0: &GaussianRational) -> Result<HybridElement<GaussianRational>, ScalarError> {
        if b0.is_zero() {
            return Err(ScalarError::ZeroParameter);
        }
        self.try_map(|c| c.eval(b0))
    }

    pub fn conj(&self) -> Self {
        self.map(Scalar::conj)
    }
}

impl<F: Field> Add for HybridElement<F> {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        let [a, b, c, d] = self.coeffs;
        let [e, f, g, h] = rhs.coeffs;
        Self::new([a + e, b + f, c + g, d + h])
    }
}

impl<F: Field> Sub for HybridElement<F> {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        self + (-rhs)
    }
}

impl<F: Field> Neg for HybridElement<F> {
    type Output = Self;
    fn neg(self) -> Self {
        Self::new(self.coeffs.map(|c| -c))
    }
}

impl<F: Field> Mul for HybridElement<F> {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        self.hmul(&rhs)
    }
}

impl<F: Field> Mul for &HybridElement<F> {
    type Output = HybridElement<F>;
    fn mul(self, rhs: &HybridElement<F>) -> HybridElement<F> {
        self.hmul(rhs)
    }
}

/// `c * g`-style terms in basis order, e.g. `1/2 + (1/(2*b)) * mu - i * nu`.
impl<F: Field> fmt::Display for HybridElement<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms: Vec<(&F, Option<&str>)> = BasisIndex::ALL
            .iter()
            .map(|&i| (self.coeff(i), (i != BasisIndex::One).then(|| i.name())))
            .collect();
        fmt_combination(f, &terms, " * ", true)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use BasisIndex::*;

    type E = HybridElement<Scalar>;

    fn e(i: BasisIndex) -> E {
        E::basis(i)
    }

    #[test]
    fn reference_products() {
        assert_eq!(e(G) * e(Nu), e(Mu) + e(G));
        assert_eq!(e(Nu) * e(G), -(e(Mu) + e(G)));
        assert!((e(Mu) * e(Mu)).is_zero());
        assert_eq!(e(Mu) * e(Nu), -e(Mu));
        assert_eq!(e(Nu) * e(Mu), e(Mu));
        assert_eq!(e(G) * e(Mu), e(One) - e(Nu));
        assert_eq!(e(Mu) * e(G), e(Nu) + e(One));
    }

    #[test]
    fn associative_and_unital_on_basis() {
        for x in BasisIndex::ALL {
            assert_eq!(e(One) * e(x), e(x));
            assert_eq!(e(x) * e(One), e(x));
            for y in BasisIndex::ALL {
                for z in BasisIndex::ALL {
                    assert_eq!((e(x) * e(y)) * e(z), e(x) * (e(y) * e(z)), "({x},{y},{z})");
                }
            }
        }
    }

    #[test]
    fn linear_operations() {
        assert_eq!(e(G) + e(G), e(G).scale(&Scalar::from_i64(2)));
        assert!(e(Nu).scale(&Scalar::zero()).is_zero());
        let b = Scalar::b();
        assert_eq!(e(Mu).scale(&b).scale(&b.checked_inv().unwrap()), e(Mu));
    }

    #[test]
    fn evaluation() {
        let inv_b_mu = e(Mu).scale(&Scalar::b().checked_inv().unwrap());
        assert_eq!(
            inv_b_mu.eval_at(&GaussianRational::from(2)).unwrap(),
            e(Mu).scale(&Scalar::ratio(1, 2))
        );
        let two_b2_g = e(G).scale(&(Scalar::from_i64(2) * Scalar::b().pow(2)));
        assert_eq!(
            two_b2_g.eval_at(&GaussianRational::i()).unwrap(),
            e(G).scale(&Scalar::from_i64(-2))
        );
        assert_eq!(
            inv_b_mu.eval_at(&GaussianRational::zero()),
            Err(ScalarError::ZeroParameter)
        );
    }

    #[test]
    fn display() {
        assert_eq!((e(Mu) + e(G)).to_string(), "g + mu");
        assert_eq!(E::zero().to_string(), "0");
        let x = e(One).scale(&Scalar::ratio(1, 2)) - e(Nu).scale(&Scalar::i())
            + e(Mu).scale(&(Scalar::from_i64(1) / (Scalar::from_i64(2) * Scalar::b())));
        assert_eq!(x.to_string(), "1/2 + (1/(2*b)) * mu - i * nu");
        let y = e(One).scale(&(Scalar::b() - Scalar::i())) + e(G);
        assert_eq!(y.to_string(), "b - i + g");
        let z = e(G) + e(One).scale(&(Scalar::b() - Scalar::i()));
        assert_eq!(z, y);
    }
}
