use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::{is_compound, Field, GaussianRational, Polynomial, ScalarError};

/// A quotient of polynomials in `b` kept in canonical form: numerator and
/// denominator coprime, denominator monic, zero stored as `0/1`. Equal
/// values therefore have identical representations.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct RationalFunction<F> {
    num: Polynomial<F>,
    den: Polynomial<F>,
}

impl<F: Field> RationalFunction<F> {
    pub fn new(num: Polynomial<F>, den: Polynomial<F>) -> Result<Self, ScalarError> {
        if den.is_zero() {
            return Err(ScalarError::DivisionByZero);
        }
        Ok(Self::reduce(num, den))
    }

    fn reduce(num: Polynomial<F>, den: Polynomial<F>) -> Self {
        if num.is_zero() {
            return Self::zero();
        }
        let g = if num.is_constant() || den.is_constant() {
            Polynomial::one()
        } else {
            num.gcd(&den)
        };
        let (num, den) = if g.is_one() {
            (num, den)
        } else {
            (num.div_rem(&g).0, den.div_rem(&g).0)
        };
        let lc = den.leading().expect("nonzero denominator").clone();
        if lc.is_one() {
            Self { num, den }
        } else {
            let inv = lc.checked_inv().expect("nonzero leading coefficient");
            Self {
                num: num.scale(&inv),
                den: den.scale(&inv),
            }
        }
    }

    /// Re-normalizes; the identity on values already in canonical form.
    pub fn normalize(&self) -> Self {
        Self::reduce(self.num.clone(), self.den.clone())
    }

    pub fn from_polynomial(p: Polynomial<F>) -> Self {
        Self {
            num: p,
            den: Polynomial::one(),
        }
    }

    pub fn constant(c: F) -> Self {
        Self::from_polynomial(Polynomial::constant(c))
    }

    /// The parameter `b`.
    pub fn b() -> Self {
        Self::from_polynomial(Polynomial::variable())
    }

    pub fn numerator(&self) -> &Polynomial<F> {
        &self.num
    }

    pub fn denominator(&self) -> &Polynomial<F> {
        &self.den
    }

    pub fn is_constant(&self) -> bool {
        self.num.is_constant() && self.den.is_constant()
    }

    /// The value when this is a constant, otherwise `None`.
    pub fn as_constant(&self) -> Option<F> {
        // den is monic, so a constant denominator is exactly 1
        self.is_constant().then(|| self.num.coeff(0))
    }

    pub fn pow(&self, exp: u32) -> Self {
        (0..exp).fold(Self::one(), |acc, _| acc * self.clone())
    }

    /// Substitutes `b := at`.
    pub fn eval(&self, at: &F) -> Result<F, ScalarError> {
        let d = self.den.eval(at);
        if d.is_zero() {
            return Err(ScalarError::EvalPole { at: at.to_string() });
        }
        Ok(self.num.eval(at) / d)
    }
}

impl RationalFunction<GaussianRational> {
    pub fn i() -> Self {
        Self::constant(GaussianRational::i())
    }

    /// `num/den` as a constant. Panics when `den == 0`.
    pub fn ratio(num: i64, den: i64) -> Self {
        Self::constant(GaussianRational::from_ratio(num, den))
    }

    /// Applies `i ↦ −i` to all coefficients, fixing `b`.
    pub fn conj(&self) -> Self {
        Self {
            num: self.num.conj(),
            den: self.den.conj(),
        }
    }
}

impl<F: Field> Add for RationalFunction<F> {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        if self.is_zero() {
            return rhs;
        }
        if rhs.is_zero() {
            return self;
        }
        if self.den == rhs.den {
            return Self::reduce(&self.num + &rhs.num, self.den);
        }
        let num = &(&self.num * &rhs.den) + &(&rhs.num * &self.den);
        Self::reduce(num, &self.den * &rhs.den)
    }
}

impl<F: Field> Sub for RationalFunction<F> {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        self + (-rhs)
    }
}

impl<F: Field> Neg for RationalFunction<F> {
    type Output = Self;
    fn neg(self) -> Self {
        Self {
            num: -&self.num,
            den: self.den,
        }
    }
}

impl<F: Field> Mul for RationalFunction<F> {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        if self.is_zero() || rhs.is_zero() {
            return Self::zero();
        }
        if self.is_constant() {
            let c = self.num.coeff(0);
            if c.is_one() {
                return rhs;
            }
            return Self {
                num: rhs.num.scale(&c),
                den: rhs.den,
            };
        }
        if rhs.is_constant() {
            let c = rhs.num.coeff(0);
            return Self {
                num: self.num.scale(&c),
                den: self.den,
            };
        }
        Self::reduce(&self.num * &rhs.num, &self.den * &rhs.den)
    }
}

impl<F: Field> Div for RationalFunction<F> {
    type Output = Self;
    /// Panics on division by the zero function.
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn div(self, rhs: Self) -> Self {
        self * rhs.checked_inv().expect("division by the zero rational function")
    }
}

impl<F: Field> Zero for RationalFunction<F> {
    fn zero() -> Self {
        Self {
            num: Polynomial::zero(),
            den: Polynomial::one(),
        }
    }
    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
}

impl<F: Field> One for RationalFunction<F> {
    fn one() -> Self {
        Self {
            num: Polynomial::one(),
            den: Polynomial::one(),
        }
    }
}

impl<F: Field> Field for RationalFunction<F> {
    fn from_i64(n: i64) -> Self {
        Self::constant(F::from_i64(n))
    }

    fn checked_inv(&self) -> Option<Self> {
        if self.is_zero() {
            None
        } else {
            Some(Self::reduce(self.den.clone(), self.num.clone()))
        }
    }

    fn leads_negative(&self) -> bool {
        self.num.leading().is_some_and(|c| c.leads_negative())
    }
}

/// `num` alone when the denominator is 1; otherwise both parts are scaled
/// to clear fractional coefficients and printed as `num/den`, e.g.
/// `(2*b^2 - 1)/(2*b^2)` or `1/(2*b)`.
impl<F: Field> fmt::Display for RationalFunction<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            return write!(f, "{}", self.num);
        }
        let all: Vec<F> = self.num.coeffs().iter().chain(self.den.coeffs()).cloned().collect();
        let k = F::clearing_factor(&all);
        let num = self.num.scale(&k).to_string();
        let den = self.den.scale(&k).to_string();
        if is_compound(&num) {
            write!(f, "({num})")?;
        } else {
            write!(f, "{num}")?;
        }
        if den.contains(['*', '/', ' ', '+', '-']) {
            write!(f, "/({den})")
        } else {
            write!(f, "/{den}")
        }
    }
}
