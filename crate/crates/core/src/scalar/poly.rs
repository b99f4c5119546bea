use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::{fmt_combination, Field, GaussianRational};

/// Dense univariate polynomial in the parameter `b`; `coeffs[k]` multiplies
/// `b^k`. The highest stored coefficient is never zero, so the zero
/// polynomial is the empty vector.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Polynomial<F> {
    coeffs: Vec<F>,
}

impl<F: Field> Polynomial<F> {
    pub fn new(mut coeffs: Vec<F>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn constant(c: F) -> Self {
        Self::new(vec![c])
    }

    pub fn one() -> Self {
        Self::constant(F::one())
    }

    /// `c · b^k`
    pub fn monomial(c: F, k: usize) -> Self {
        let mut coeffs = vec![F::zero(); k];
        coeffs.push(c);
        Self::new(coeffs)
    }

    /// The parameter `b` itself.
    pub fn variable() -> Self {
        Self::monomial(F::one(), 1)
    }

    pub fn coeffs(&self) -> &[F] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    /// True for `c · b^k`, including nonzero constants.
    pub fn is_monomial(&self) -> bool {
        !self.is_zero() && self.coeffs.iter().filter(|c| !c.is_zero()).count() == 1
    }

    pub fn leading(&self) -> Option<&F> {
        self.coeffs.last()
    }

    pub fn coeff(&self, k: usize) -> F {
        self.coeffs.get(k).cloned().unwrap_or_else(F::zero)
    }

    pub fn scale(&self, c: &F) -> Self {
        Self::new(self.coeffs.iter().map(|x| x.clone() * c.clone()).collect())
    }

    /// Divides by the leading coefficient. The zero polynomial is returned
    /// unchanged.
    pub fn monic(&self) -> Self {
        match self.leading() {
            None => self.clone(),
            Some(lc) if lc.is_one() => self.clone(),
            Some(lc) => self.scale(&lc.checked_inv().expect("leading coefficient is nonzero")),
        }
    }

    /// Horner evaluation.
    pub fn eval(&self, at: &F) -> F {
        self.coeffs
            .iter()
            .rev()
            .fold(F::zero(), |acc, c| acc * at.clone() + c.clone())
    }

    /// Euclidean division: `self = q·divisor + r` with `deg r < deg divisor`.
    /// Panics on a zero divisor.
    pub fn div_rem(&self, divisor: &Self) -> (Self, Self) {
        let d_deg = divisor.degree().expect("polynomial division by zero");
        let lc_inv = divisor.coeffs[d_deg]
            .checked_inv()
            .expect("nonzero leading coefficient");
        let mut rem = self.coeffs.clone();
        let n = rem.len();
        if n <= d_deg {
            return (Self::zero(), self.clone());
        }
        let mut quot = vec![F::zero(); n - d_deg];
        for k in (0..quot.len()).rev() {
            let c = rem[k + d_deg].clone() * lc_inv.clone();
            if c.is_zero() {
                continue;
            }
            for (j, dc) in divisor.coeffs.iter().enumerate() {
                rem[k + j] = rem[k + j].clone() - c.clone() * dc.clone();
            }
            quot[k] = c;
        }
        rem.truncate(d_deg);
        (Self::new(quot), Self::new(rem))
    }

    /// Monic greatest common divisor; `gcd(0, 0) = 0`.
    pub fn gcd(&self, other: &Self) -> Self {
        let mut a = self.monic();
        let mut b = other.monic();
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b);
            a = b;
            b = r.monic();
        }
        a
    }

    pub fn map<G: Field>(&self, f: impl Fn(&F) -> G) -> Polynomial<G> {
        Polynomial::new(self.coeffs.iter().map(f).collect())
    }
}

impl Polynomial<GaussianRational> {
    /// Applies `i ↦ −i` to every coefficient.
    pub fn conj(&self) -> Self {
        self.map(GaussianRational::conj)
    }
}

impl<F: Field> Add for &Polynomial<F> {
    type Output = Polynomial<F>;
    fn add(self, rhs: &Polynomial<F>) -> Polynomial<F> {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Polynomial::new((0..n).map(|k| self.coeff(k) + rhs.coeff(k)).collect())
    }
}

impl<F: Field> Sub for &Polynomial<F> {
    type Output = Polynomial<F>;
    fn sub(self, rhs: &Polynomial<F>) -> Polynomial<F> {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Polynomial::new((0..n).map(|k| self.coeff(k) - rhs.coeff(k)).collect())
    }
}

impl<F: Field> Mul for &Polynomial<F> {
    type Output = Polynomial<F>;
    fn mul(self, rhs: &Polynomial<F>) -> Polynomial<F> {
        if self.is_zero() || rhs.is_zero() {
            return Polynomial::zero();
        }
        let mut out = vec![F::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] = out[i + j].clone() + a.clone() * b.clone();
            }
        }
        Polynomial::new(out)
    }
}

impl<F: Field> Neg for &Polynomial<F> {
    type Output = Polynomial<F>;
    fn neg(self) -> Polynomial<F> {
        Polynomial::new(self.coeffs.iter().map(|c| -c.clone()).collect())
    }
}

/// Terms in decreasing degree: `2*b^2 - 1/2`, `(1 + i)*b`, `-b`.
impl<F: Field> fmt::Display for Polynomial<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let labels: Vec<Option<String>> = (0..self.coeffs.len())
            .map(|k| match k {
                0 => None,
                1 => Some("b".to_string()),
                _ => Some(format!("b^{k}")),
            })
            .collect();
        let terms: Vec<(&F, Option<&str>)> = self
            .coeffs
            .iter()
            .zip(&labels)
            .rev()
            .map(|(c, l)| (c, l.as_deref()))
            .collect();
        fmt_combination(f, &terms, "*", false)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::{One, Zero};

    type P = Polynomial<GaussianRational>;

    fn p(cs: &[i64]) -> P {
        P::new(cs.iter().map(|&c| GaussianRational::from(c)).collect())
    }

    #[test]
    fn trailing_zeros_trimmed() {
        assert_eq!(p(&[1, 2, 0, 0]).degree(), Some(1));
        assert!(p(&[0, 0]).is_zero());
        assert_eq!(p(&[]).degree(), None);
    }

    #[test]
    fn division_identity() {
        let a = p(&[-1, 0, 0, 1]); // b^3 - 1
        let d = p(&[-1, 1]); // b - 1
        let (q, r) = a.div_rem(&d);
        assert_eq!(q, p(&[1, 1, 1]));
        assert!(r.is_zero());
        let (q, r) = p(&[3, 0, 2]).div_rem(&p(&[1, 1]));
        assert_eq!(&(&q * &p(&[1, 1])) + &r, p(&[3, 0, 2]));
        assert!(r.degree().unwrap_or(0) < 1);
    }

    #[test]
    fn gcd_is_monic() {
        let a = &p(&[-1, 1]) * &p(&[2, 3]);
        let b = &p(&[-2, 2]) * &p(&[5, 0, 1]);
        assert_eq!(a.gcd(&b), p(&[-1, 1]));
        assert!(P::zero().gcd(&P::zero()).is_zero());
        assert_eq!(P::zero().gcd(&p(&[0, 4])), p(&[0, 1]));
    }

    #[test]
    fn gaussian_roots() {
        // b^2 + 1 = (b - i)(b + i)
        let i = GaussianRational::i();
        let b_minus_i = P::new(vec![-i.clone(), GaussianRational::one()]);
        assert_eq!(p(&[1, 0, 1]).gcd(&b_minus_i), b_minus_i);
        assert!(p(&[1, 0, 1]).eval(&i).is_zero());
    }

    #[test]
    fn display() {
        assert_eq!(p(&[-1, 0, 2]).to_string(), "2*b^2 - 1");
        assert_eq!(p(&[0, -1]).to_string(), "-b");
        assert_eq!(P::zero().to_string(), "0");
        let c = GaussianRational::one() + GaussianRational::i();
        assert_eq!(P::monomial(c.clone(), 1).to_string(), "(1 + i)*b");
        assert_eq!(P::new(vec![-c, GaussianRational::one()]).to_string(), "b - (1 + i)");
    }
}
