//! 𝕂⊗𝕂 and 𝕂⊗𝕂⊗𝕂 as dense 16- and 64-vectors over the product bases.
//!
//! Index of `e_i⊗e_j` is `4i + j`; of `e_i⊗e_j⊗e_k` is `16i + 4j + k`.
//! Linear maps out of 𝕂 are given by their four basis images
//! ([`LinearMap`]) and are applied in one tensor slot with the identity in
//! the others through [`ApplyLeft`], [`ApplyMiddle`] and [`ApplyRight`].

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::Zero;

use crate::hybrid::{BasisIndex, HybridElement, StructureConstants};
use crate::scalar::{fmt_combination, scale_by_int, Field};

/// A linear map out of 𝕂, stored as the images of `(1, g, μ, ν)`.
#[derive(Clone, PartialEq, Debug)]
pub struct LinearMap<T>(pub [T; 4]);

/// 𝕂 → 𝕂, e.g. the antipode.
pub type Endomorphism<F> = LinearMap<HybridElement<F>>;
/// 𝕂 → field, e.g. the counit.
pub type Functional<F> = LinearMap<F>;
/// 𝕂 → 𝕂⊗𝕂, e.g. the comultiplication.
pub type CoproductMap<F> = LinearMap<Tensor2<F>>;

impl<T> LinearMap<T> {
    pub fn image(&self, i: BasisIndex) -> &T {
        &self.0[i.index()]
    }
}

impl<F: Field> Endomorphism<F> {
    pub fn identity() -> Self {
        LinearMap(BasisIndex::ALL.map(HybridElement::basis))
    }

    pub fn apply(&self, x: &HybridElement<F>) -> HybridElement<F> {
        linear_sum(x.coeffs(), &self.0, HybridElement::zero, |v, c| v.scale(c))
    }
}

impl<F: Field> Functional<F> {
    pub fn apply(&self, x: &HybridElement<F>) -> F {
        linear_sum(x.coeffs(), &self.0, F::zero, |v, c| c.clone() * v.clone())
    }
}

impl<F: Field> CoproductMap<F> {
    pub fn apply(&self, x: &HybridElement<F>) -> Tensor2<F> {
        linear_sum(x.coeffs(), &self.0, Tensor2::zero, |v, c| v.scale(c))
    }
}

fn linear_sum<F: Field, T: Add<Output = T>>(
    coeffs: &[F],
    images: &[T],
    zero: impl Fn() -> T,
    scale: impl Fn(&T, &F) -> T,
) -> T {
    coeffs
        .iter()
        .zip(images)
        .filter(|(c, _)| !c.is_zero())
        .fold(zero(), |acc, (c, img)| acc + scale(img, c))
}

/// Applies a map in the first tensor slot.
pub trait ApplyLeft<M> {
    type Output;
    fn apply_left(&self, map: &M) -> Self::Output;
}

/// Applies a map in the middle slot of a triple tensor.
pub trait ApplyMiddle<M> {
    type Output;
    fn apply_middle(&self, map: &M) -> Self::Output;
}

/// Applies a map in the last tensor slot.
pub trait ApplyRight<M> {
    type Output;
    fn apply_right(&self, map: &M) -> Self::Output;
}

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Tensor2<F> {
    coeffs: Vec<F>,
}

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Tensor3<F> {
    coeffs: Vec<F>,
}

impl<F: Field> Tensor2<F> {
    pub fn zero() -> Self {
        Self {
            coeffs: vec![F::zero(); 16],
        }
    }

    /// Panics unless `coeffs.len() == 16`.
    pub fn from_coeffs(coeffs: Vec<F>) -> Self {
        assert_eq!(coeffs.len(), 16, "Tensor2 needs 16 coefficients");
        Self { coeffs }
    }

    pub fn basis(i: BasisIndex, j: BasisIndex) -> Self {
        let mut t = Self::zero();
        t.coeffs[4 * i.index() + j.index()] = F::one();
        t
    }

    /// `Σ c · e_i⊗e_j`.
    pub fn from_terms(terms: impl IntoIterator<Item = (F, BasisIndex, BasisIndex)>) -> Self {
        let mut t = Self::zero();
        for (c, i, j) in terms {
            let k = 4 * i.index() + j.index();
            t.coeffs[k] = t.coeffs[k].clone() + c;
        }
        t
    }

    pub fn unit() -> Self {
        Self::basis(BasisIndex::One, BasisIndex::One)
    }

    pub fn coeff(&self, i: BasisIndex, j: BasisIndex) -> &F {
        &self.coeffs[4 * i.index() + j.index()]
    }

    pub fn coeffs(&self) -> &[F] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    /// Number of nonzero components.
    pub fn term_count(&self) -> usize {
        self.coeffs.iter().filter(|c| !c.is_zero()).count()
    }

    pub fn scale(&self, c: &F) -> Self {
        Self {
            coeffs: self.coeffs.iter().map(|x| c.clone() * x.clone()).collect(),
        }
    }

    pub fn map<G: Field>(&self, f: impl Fn(&F) -> G) -> Tensor2<G> {
        Tensor2 {
            coeffs: self.coeffs.iter().map(f).collect(),
        }
    }

    pub fn try_map<G: Field, E>(&self, f: impl Fn(&F) -> Result<G, E>) -> Result<Tensor2<G>, E> {
        Ok(Tensor2 {
            coeffs: self.coeffs.iter().map(f).collect::<Result<_, _>>()?,
        })
    }

    fn nonzero(&self) -> impl Iterator<Item = (usize, usize, &F)> {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(k, c)| (k / 4, k % 4, c))
    }

    /// Product in the tensor algebra, `(a⊗b)(c⊗d) = ac⊗bd`.
    pub fn t2_mul(&self, rhs: &Self) -> Self {
        let mut out = Self::zero();
        for (i, j, p) in self.nonzero() {
            for (k, l, q) in rhs.nonzero() {
                let w = p.clone() * q.clone();
                for (x, s) in StructureConstants::terms(i, k) {
                    for (y, t) in StructureConstants::terms(j, l) {
                        let idx = 4 * x + y;
                        out.coeffs[idx] = out.coeffs[idx].clone() + scale_by_int(&w, s * t);
                    }
                }
            }
        }
        out
    }

    /// The multiplication map `m(a⊗b) = ab`.
    pub fn multiply(&self) -> HybridElement<F> {
        let mut out = HybridElement::zero();
        for (i, j, c) in self.nonzero() {
            let e = StructureConstants::product::<F>(BasisIndex::ALL[i], BasisIndex::ALL[j]);
            out = out + e.scale(c);
        }
        out
    }

    /// `t ⊗ 1`.
    pub fn embed_left(&self) -> Tensor3<F> {
        let mut out = Tensor3::zero();
        for (i, j, c) in self.nonzero() {
            out.coeffs[16 * i + 4 * j] = c.clone();
        }
        out
    }

    /// `1 ⊗ t`.
    pub fn embed_right(&self) -> Tensor3<F> {
        let mut out = Tensor3::zero();
        for (i, j, c) in self.nonzero() {
            out.coeffs[4 * i + j] = c.clone();
        }
        out
    }
}

/// `x ⊗ y`.
pub fn tprod2<F: Field>(x: &HybridElement<F>, y: &HybridElement<F>) -> Tensor2<F> {
    let mut t = Tensor2::zero();
    for (i, a) in x.coeffs().iter().enumerate() {
        for (j, b) in y.coeffs().iter().enumerate() {
            t.coeffs[4 * i + j] = a.clone() * b.clone();
        }
    }
    t
}

/// `x ⊗ y ⊗ z`.
pub fn tprod3<F: Field>(x: &HybridElement<F>, y: &HybridElement<F>, z: &HybridElement<F>) -> Tensor3<F> {
    let xy = tprod2(x, y);
    let mut t = Tensor3::zero();
    for (k, a) in xy.coeffs.iter().enumerate() {
        for (l, b) in z.coeffs().iter().enumerate() {
            t.coeffs[4 * k + l] = a.clone() * b.clone();
        }
    }
    t
}

impl<F: Field> ApplyLeft<Functional<F>> for Tensor2<F> {
    type Output = HybridElement<F>;
    fn apply_left(&self, map: &Functional<F>) -> HybridElement<F> {
        let mut out = HybridElement::zero();
        for (i, j, c) in self.nonzero() {
            let w = c.clone() * map.0[i].clone();
            out = out + HybridElement::basis(BasisIndex::ALL[j]).scale(&w);
        }
        out
    }
}

impl<F: Field> ApplyRight<Functional<F>> for Tensor2<F> {
    type Output = HybridElement<F>;
    fn apply_right(&self, map: &Functional<F>) -> HybridElement<F> {
        let mut out = HybridElement::zero();
        for (i, j, c) in self.nonzero() {
            let w = c.clone() * map.0[j].clone();
            out = out + HybridElement::basis(BasisIndex::ALL[i]).scale(&w);
        }
        out
    }
}

impl<F: Field> ApplyLeft<Endomorphism<F>> for Tensor2<F> {
    type Output = Tensor2<F>;
    fn apply_left(&self, map: &Endomorphism<F>) -> Tensor2<F> {
        self.nonzero().fold(Tensor2::zero(), |acc, (i, j, c)| {
            acc + tprod2(&map.0[i], &HybridElement::basis(BasisIndex::ALL[j])).scale(c)
        })
    }
}

impl<F: Field> ApplyRight<Endomorphism<F>> for Tensor2<F> {
    type Output = Tensor2<F>;
    fn apply_right(&self, map: &Endomorphism<F>) -> Tensor2<F> {
        self.nonzero().fold(Tensor2::zero(), |acc, (i, j, c)| {
            acc + tprod2(&HybridElement::basis(BasisIndex::ALL[i]), &map.0[j]).scale(c)
        })
    }
}

impl<F: Field> ApplyLeft<CoproductMap<F>> for Tensor2<F> {
    type Output = Tensor3<F>;
    /// `(Δ ⊗ id)`
    fn apply_left(&self, map: &CoproductMap<F>) -> Tensor3<F> {
        let mut out: Tensor3<F> = Tensor3::zero();
        for (i, j, c) in self.nonzero() {
            for (k, d) in map.0[i].coeffs.iter().enumerate() {
                if d.is_zero() {
                    continue;
                }
                let idx = 4 * k + j;
                out.coeffs[idx] = out.coeffs[idx].clone() + c.clone() * d.clone();
            }
        }
        out
    }
}

impl<F: Field> ApplyRight<CoproductMap<F>> for Tensor2<F> {
    type Output = Tensor3<F>;
    /// `(id ⊗ Δ)`
    fn apply_right(&self, map: &CoproductMap<F>) -> Tensor3<F> {
        let mut out: Tensor3<F> = Tensor3::zero();
        for (i, j, c) in self.nonzero() {
            for (k, d) in map.0[j].coeffs.iter().enumerate() {
                if d.is_zero() {
                    continue;
                }
                let idx = 16 * i + k;
                out.coeffs[idx] = out.coeffs[idx].clone() + c.clone() * d.clone();
            }
        }
        out
    }
}

impl<F: Field> Tensor3<F> {
    pub fn zero() -> Self {
        Self {
            coeffs: vec![F::zero(); 64],
        }
    }

    /// Panics unless `coeffs.len() == 64`.
    pub fn from_coeffs(coeffs: Vec<F>) -> Self {
        assert_eq!(coeffs.len(), 64, "Tensor3 needs 64 coefficients");
        Self { coeffs }
    }

    pub fn basis(i: BasisIndex, j: BasisIndex, k: BasisIndex) -> Self {
        let mut t = Self::zero();
        t.coeffs[16 * i.index() + 4 * j.index() + k.index()] = F::one();
        t
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (F, BasisIndex, BasisIndex, BasisIndex)>) -> Self {
        let mut t = Self::zero();
        for (c, i, j, k) in terms {
            let idx = 16 * i.index() + 4 * j.index() + k.index();
            t.coeffs[idx] = t.coeffs[idx].clone() + c;
        }
        t
    }

    pub fn unit() -> Self {
        Self::basis(BasisIndex::One, BasisIndex::One, BasisIndex::One)
    }

    pub fn coeff(&self, i: BasisIndex, j: BasisIndex, k: BasisIndex) -> &F {
        &self.coeffs[16 * i.index() + 4 * j.index() + k.index()]
    }

    pub fn coeffs(&self) -> &[F] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    pub fn term_count(&self) -> usize {
        self.coeffs.iter().filter(|c| !c.is_zero()).count()
    }

    pub fn scale(&self, c: &F) -> Self {
        Self {
            coeffs: self.coeffs.iter().map(|x| c.clone() * x.clone()).collect(),
        }
    }

    pub fn map<G: Field>(&self, f: impl Fn(&F) -> G) -> Tensor3<G> {
        Tensor3 {
            coeffs: self.coeffs.iter().map(f).collect(),
        }
    }

    fn nonzero(&self) -> impl Iterator<Item = (usize, usize, usize, &F)> {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(n, c)| (n / 16, (n / 4) % 4, n % 4, c))
    }

    pub fn t3_mul(&self, rhs: &Self) -> Self {
        let mut out = Self::zero();
        for (i, j, k, p) in self.nonzero() {
            for (l, m, n, q) in rhs.nonzero() {
                let w = p.clone() * q.clone();
                for (x, s) in StructureConstants::terms(i, l) {
                    for (y, t) in StructureConstants::terms(j, m) {
                        for (z, u) in StructureConstants::terms(k, n) {
                            let idx = 16 * x + 4 * y + z;
                            out.coeffs[idx] = out.coeffs[idx].clone() + scale_by_int(&w, s * t * u);
                        }
                    }
                }
            }
        }
        out
    }

    /// `m(a⊗b⊗c) = abc`.
    pub fn multiply(&self) -> HybridElement<F> {
        let mut out = HybridElement::zero();
        for (i, j, k, c) in self.nonzero() {
            let e = |n: usize| HybridElement::<F>::basis(BasisIndex::ALL[n]);
            out = out + (e(i) * e(j) * e(k)).scale(c);
        }
        out
    }

    fn apply_slot(&self, slot: usize, map: &Endomorphism<F>) -> Self {
        let mut out = Self::zero();
        for (i, j, k, c) in self.nonzero() {
            let idx = [i, j, k];
            for (v, d) in map.0[idx[slot]].coeffs().iter().enumerate() {
                if d.is_zero() {
                    continue;
                }
                let mut target = idx;
                target[slot] = v;
                let n = 16 * target[0] + 4 * target[1] + target[2];
                out.coeffs[n] = out.coeffs[n].clone() + c.clone() * d.clone();
            }
        }
        out
    }
}

impl<F: Field> ApplyLeft<Endomorphism<F>> for Tensor3<F> {
    type Output = Tensor3<F>;
    fn apply_left(&self, map: &Endomorphism<F>) -> Tensor3<F> {
        self.apply_slot(0, map)
    }
}

impl<F: Field> ApplyMiddle<Endomorphism<F>> for Tensor3<F> {
    type Output = Tensor3<F>;
    fn apply_middle(&self, map: &Endomorphism<F>) -> Tensor3<F> {
        self.apply_slot(1, map)
    }
}

impl<F: Field> ApplyRight<Endomorphism<F>> for Tensor3<F> {
    type Output = Tensor3<F>;
    fn apply_right(&self, map: &Endomorphism<F>) -> Tensor3<F> {
        self.apply_slot(2, map)
    }
}

macro_rules! vector_ops {
    ($t:ident) => {
        impl<F: Field> Add for $t<F> {
            type Output = Self;
            fn add(self, rhs: Self) -> Self {
                Self {
                    coeffs: self
                        .coeffs
                        .into_iter()
                        .zip(rhs.coeffs)
                        .map(|(a, b)| a + b)
                        .collect(),
                }
            }
        }

        impl<F: Field> Sub for $t<F> {
            type Output = Self;
            fn sub(self, rhs: Self) -> Self {
                Self {
                    coeffs: self
                        .coeffs
                        .into_iter()
                        .zip(rhs.coeffs)
                        .map(|(a, b)| a - b)
                        .collect(),
                }
            }
        }

        impl<F: Field> Neg for $t<F> {
            type Output = Self;
            fn neg(self) -> Self {
                Self {
                    coeffs: self.coeffs.into_iter().map(|a| -a).collect(),
                }
            }
        }
    };
}
vector_ops!(Tensor2);
vector_ops!(Tensor3);

impl<F: Field> Mul for &Tensor2<F> {
    type Output = Tensor2<F>;
    fn mul(self, rhs: &Tensor2<F>) -> Tensor2<F> {
        self.t2_mul(rhs)
    }
}

impl<F: Field> Mul for &Tensor3<F> {
    type Output = Tensor3<F>;
    fn mul(self, rhs: &Tensor3<F>) -> Tensor3<F> {
        self.t3_mul(rhs)
    }
}

fn fmt_tensor<F: Field>(f: &mut fmt::Formatter<'_>, coeffs: &[F], rank: u32) -> fmt::Result {
    let labels: Vec<String> = (0..coeffs.len())
        .map(|n| {
            (0..rank)
                .rev()
                .map(|slot| BasisIndex::ALL[(n >> (2 * slot)) & 3].name())
                .collect::<Vec<_>>()
                .join("⊗")
        })
        .collect();
    let terms: Vec<(&F, Option<&str>)> = coeffs.iter().zip(&labels).map(|(c, l)| (c, Some(l.as_str()))).collect();
    fmt_combination(f, &terms, " * ", true)
}

/// `c * x⊗y` terms in basis order, zero terms suppressed.
impl<F: Field> fmt::Display for Tensor2<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_tensor(f, &self.coeffs, 2)
    }
}

impl<F: Field> fmt::Display for Tensor3<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_tensor(f, &self.coeffs, 3)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Scalar;
    use BasisIndex::*;

    type E = HybridElement<Scalar>;
    type T2 = Tensor2<Scalar>;

    fn e(i: BasisIndex) -> E {
        E::basis(i)
    }

    #[test]
    fn tensor_products_of_elements() {
        assert_eq!(tprod2(&e(One), &e(One)), T2::unit());
        let t = tprod2(&e(Mu), &e(Nu).scale(&Scalar::i()));
        assert_eq!(t, T2::basis(Mu, Nu).scale(&Scalar::i()));
        assert_eq!(t.term_count(), 1);
        let t = tprod2(&(e(G) + e(Mu)), &e(G));
        assert_eq!(t, T2::basis(G, G) + T2::basis(Mu, G));
    }

    #[test]
    fn tensor_algebra_products() {
        let p = T2::basis(G, Nu).scale(&Scalar::b()) + T2::basis(Mu, One);
        assert_eq!(&T2::unit() * &p, p);
        assert_eq!(&p * &T2::unit(), p);
        let mm = T2::basis(Mu, Mu);
        assert!((&mm * &mm).is_zero());
        // (g⊗ν)(ν⊗g) = gν⊗νg = (μ+g)⊗(−μ−g)
        let lhs = &T2::basis(G, Nu) * &T2::basis(Nu, G);
        assert_eq!(lhs, -tprod2(&(e(Mu) + e(G)), &(e(Mu) + e(G))));
    }

    #[test]
    fn embeddings() {
        assert_eq!(T2::unit().embed_left(), Tensor3::unit());
        assert_eq!(T2::basis(Mu, Nu).embed_right(), Tensor3::basis(One, Mu, Nu));
        assert_eq!(T2::basis(Mu, Nu).embed_left(), Tensor3::basis(Mu, Nu, One));
    }

    #[test]
    fn slot_maps() {
        let t = T2::basis(G, Nu).scale(&Scalar::b()) + T2::basis(Mu, One);
        let id = Endomorphism::<Scalar>::identity();
        assert_eq!(t.apply_left(&id), t);
        assert_eq!(t.apply_right(&id), t);
        let swap_g_nu = LinearMap([e(One), e(Nu), e(Mu), e(G)]);
        assert_eq!(
            t.apply_left(&swap_g_nu),
            T2::basis(Nu, Nu).scale(&Scalar::b()) + T2::basis(Mu, One)
        );
        let f: Functional<Scalar> = LinearMap([1, 2, 3, 4].map(Scalar::from_i64));
        assert_eq!(
            t.apply_left(&f),
            e(Nu).scale(&(Scalar::from_i64(2) * Scalar::b())) + e(One).scale(&Scalar::from_i64(3))
        );
        assert_eq!(
            t.apply_right(&f),
            e(G).scale(&(Scalar::from_i64(4) * Scalar::b())) + e(Mu)
        );
        let t3 = tprod3(&e(G), &e(Mu), &e(Nu));
        assert_eq!(t3.apply_middle(&swap_g_nu), t3);
        assert_eq!(t3.apply_left(&swap_g_nu), tprod3(&e(Nu), &e(Mu), &e(Nu)));
        assert_eq!(t3.apply_right(&swap_g_nu), tprod3(&e(G), &e(Mu), &e(G)));
    }

    #[test]
    fn multiplication_maps() {
        assert_eq!(T2::basis(G, Nu).multiply(), e(Mu) + e(G));
        assert_eq!(tprod3(&e(G), &e(Nu), &e(Nu)).multiply(), e(G));
    }

    #[test]
    fn display() {
        let t = T2::basis(Mu, Mu).scale(&(Scalar::from_i64(1) / (Scalar::from_i64(2) * Scalar::b())));
        assert_eq!(t.to_string(), "(1/(2*b)) * mu⊗mu");
        let t = T2::unit().scale(&Scalar::ratio(1, 2)) - T2::basis(Nu, Mu).scale(&(Scalar::i() * Scalar::ratio(1, 2)));
        assert_eq!(t.to_string(), "(1/2) * 1⊗1 - (1/2*i) * nu⊗mu");
        assert_eq!(Tensor3::<Scalar>::basis(One, Mu, Nu).to_string(), "1⊗mu⊗nu");
        assert_eq!(T2::zero().to_string(), "0");
    }
}
