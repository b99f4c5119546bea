use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::{Field, ScalarError};

/// A complex number `(re + i·im) / den` over a shared positive denominator,
/// reduced so that `gcd(re, im, den) = 1`. Derived equality is therefore
/// value equality.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct GaussianRational {
    re: BigInt,
    im: BigInt,
    den: BigInt,
}

impl Default for GaussianRational {
    fn default() -> Self {
        Self::zero()
    }
}

impl GaussianRational {
    pub fn new(re: BigRational, im: BigRational) -> Self {
        let den = re.denom().lcm(im.denom());
        let re_num = re.numer() * (&den / re.denom());
        let im_num = im.numer() * (&den / im.denom());
        Self::reduced(re_num, im_num, den)
    }

    fn reduced(mut re: BigInt, mut im: BigInt, mut den: BigInt) -> Self {
        if den.is_negative() {
            re = -re;
            im = -im;
            den = -den;
        }
        let g = re.gcd(&im).gcd(&den);
        if !g.is_one() {
            re /= &g;
            im /= &g;
            den /= &g;
        }
        Self { re, im, den }
    }

    pub fn from_integer(n: i64) -> Self {
        Self {
            re: n.into(),
            im: BigInt::zero(),
            den: BigInt::one(),
        }
    }

    /// `num/den + 0i`. Panics when `den == 0`.
    pub fn from_ratio(num: i64, den: i64) -> Self {
        assert!(den != 0, "zero denominator");
        Self::reduced(num.into(), BigInt::zero(), den.into())
    }

    pub fn i() -> Self {
        Self {
            re: BigInt::zero(),
            im: BigInt::one(),
            den: BigInt::one(),
        }
    }

    pub fn re(&self) -> BigRational {
        BigRational::new(self.re.clone(), self.den.clone())
    }

    pub fn im(&self) -> BigRational {
        BigRational::new(self.im.clone(), self.den.clone())
    }

    pub fn conj(&self) -> Self {
        Self {
            re: self.re.clone(),
            im: -&self.im,
            den: self.den.clone(),
        }
    }

    pub fn norm_sqr(&self) -> BigRational {
        BigRational::new(&self.re * &self.re + &self.im * &self.im, &self.den * &self.den)
    }

    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }
}

/// Accepts a real rational literal, `p` or `p/q`, with an optional sign.
impl FromStr for GaussianRational {
    type Err = ScalarError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || ScalarError::InvalidLiteral(s.to_string());
        let (num, den) = match s.split_once('/') {
            Some((n, d)) => (n, d),
            None => (s, "1"),
        };
        let num: BigInt = num.trim().parse().map_err(|_| bad())?;
        let den: BigInt = den.trim().parse().map_err(|_| bad())?;
        if den.is_zero() {
            return Err(ScalarError::DivisionByZero);
        }
        Ok(Self::reduced(num, BigInt::zero(), den))
    }
}

impl From<BigRational> for GaussianRational {
    fn from(re: BigRational) -> Self {
        Self::new(re, BigRational::zero())
    }
}

impl From<i64> for GaussianRational {
    fn from(n: i64) -> Self {
        Self::from_integer(n)
    }
}

impl<'a> Add<&'a GaussianRational> for &'a GaussianRational {
    type Output = GaussianRational;
    fn add(self, rhs: &GaussianRational) -> GaussianRational {
        if self.den == rhs.den {
            return GaussianRational::reduced(&self.re + &rhs.re, &self.im + &rhs.im, self.den.clone());
        }
        GaussianRational::reduced(
            &self.re * &rhs.den + &rhs.re * &self.den,
            &self.im * &rhs.den + &rhs.im * &self.den,
            &self.den * &rhs.den,
        )
    }
}

impl<'a> Sub<&'a GaussianRational> for &'a GaussianRational {
    type Output = GaussianRational;
    fn sub(self, rhs: &GaussianRational) -> GaussianRational {
        self + &-rhs
    }
}

impl<'a> Mul<&'a GaussianRational> for &'a GaussianRational {
    type Output = GaussianRational;
    fn mul(self, rhs: &GaussianRational) -> GaussianRational {
        GaussianRational::reduced(
            &self.re * &rhs.re - &self.im * &rhs.im,
            &self.re * &rhs.im + &self.im * &rhs.re,
            &self.den * &rhs.den,
        )
    }
}

impl<'a> Div<&'a GaussianRational> for &'a GaussianRational {
    type Output = GaussianRational;
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn div(self, rhs: &GaussianRational) -> GaussianRational {
        let inv = rhs.checked_inv().expect("division by zero Gaussian rational");
        self * &inv
    }
}

impl Neg for &GaussianRational {
    type Output = GaussianRational;
    fn neg(self) -> GaussianRational {
        GaussianRational {
            re: -&self.re,
            im: -&self.im,
            den: self.den.clone(),
        }
    }
}

macro_rules! forward_by_value {
    ($($trait:ident $method:ident),*) => {$(
        impl $trait for GaussianRational {
            type Output = GaussianRational;
            fn $method(self, rhs: GaussianRational) -> GaussianRational {
                (&self).$method(&rhs)
            }
        }
    )*};
}
forward_by_value!(Add add, Sub sub, Mul mul, Div div);

impl Neg for GaussianRational {
    type Output = GaussianRational;
    fn neg(self) -> GaussianRational {
        GaussianRational {
            re: -self.re,
            im: -self.im,
            den: self.den,
        }
    }
}

impl Zero for GaussianRational {
    fn zero() -> Self {
        Self {
            re: BigInt::zero(),
            im: BigInt::zero(),
            den: BigInt::one(),
        }
    }
    fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }
}

impl One for GaussianRational {
    fn one() -> Self {
        Self::from_integer(1)
    }
}

impl Field for GaussianRational {
    fn from_i64(n: i64) -> Self {
        Self::from_integer(n)
    }

    fn checked_inv(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        let n = &self.re * &self.re + &self.im * &self.im;
        Some(Self::reduced(&self.re * &self.den, -(&self.im * &self.den), n))
    }

    fn leads_negative(&self) -> bool {
        self.re.is_negative() || (self.re.is_zero() && self.im.is_negative())
    }

    fn clearing_factor(values: &[Self]) -> Self {
        let lcm = values
            .iter()
            .flat_map(|v| [v.re(), v.im()])
            .fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
        BigRational::from_integer(lcm).into()
    }
}

fn fmt_imaginary(f: &mut fmt::Formatter<'_>, im: &BigRational) -> fmt::Result {
    if im.is_one() {
        write!(f, "i")
    } else {
        write!(f, "{im}*i")
    }
}

/// Forms: `p`, `p/q`, `i`, `p*i`, and `re + im*i` when both parts are nonzero.
impl fmt::Display for GaussianRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (re, im) = (self.re(), self.im());
        match (re.is_zero(), im.is_zero()) {
            (_, true) => write!(f, "{re}"),
            (true, false) if im.is_negative() => {
                write!(f, "-")?;
                fmt_imaginary(f, &-im)
            }
            (true, false) => fmt_imaginary(f, &im),
            (false, false) => {
                write!(f, "{re}")?;
                if im.is_negative() {
                    write!(f, " - ")?;
                    fmt_imaginary(f, &-im)
                } else {
                    write!(f, " + ")?;
                    fmt_imaginary(f, &im)
                }
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(re: (i64, i64), im: (i64, i64)) -> GaussianRational {
        GaussianRational::new(
            BigRational::new(re.0.into(), re.1.into()),
            BigRational::new(im.0.into(), im.1.into()),
        )
    }

    #[test]
    fn arithmetic() {
        let half = GaussianRational::from_ratio(1, 2);
        let half_i = g((0, 1), (1, 2));
        assert_eq!(half + half_i, g((1, 2), (1, 2)));
        assert_eq!(
            GaussianRational::i() * GaussianRational::i(),
            GaussianRational::from(-1)
        );
        assert_eq!(GaussianRational::i().checked_inv(), Some(-GaussianRational::i()));
        assert_eq!(GaussianRational::zero().checked_inv(), None);
    }

    #[test]
    fn parts_stay_reduced() {
        let x = g((2, 4), (-3, -6));
        assert_eq!(x, g((1, 2), (1, 2)));
        assert_eq!(x.re().denom(), &BigInt::from(2));
    }

    #[test]
    fn display_forms() {
        assert_eq!(GaussianRational::from(3).to_string(), "3");
        assert_eq!(GaussianRational::from_ratio(-3, 5).to_string(), "-3/5");
        assert_eq!(GaussianRational::i().to_string(), "i");
        assert_eq!((-GaussianRational::i()).to_string(), "-i");
        assert_eq!(g((0, 1), (1, 2)).to_string(), "1/2*i");
        assert_eq!(g((1, 1), (-2, 1)).to_string(), "1 - 2*i");
    }

    #[test]
    fn parses_rational_literals() {
        assert_eq!("12".parse::<GaussianRational>().unwrap(), GaussianRational::from(12));
        assert_eq!(
            "-6/4".parse::<GaussianRational>().unwrap(),
            GaussianRational::from_ratio(-3, 2)
        );
        assert_eq!("1/0".parse::<GaussianRational>(), Err(ScalarError::DivisionByZero));
        assert!(matches!(
            "x".parse::<GaussianRational>(),
            Err(ScalarError::InvalidLiteral(_))
        ));
        let big = "123456789012345678901234567890";
        assert_eq!(big.parse::<GaussianRational>().unwrap().to_string(), big);
    }

    #[test]
    fn clearing_factor_is_lcm_of_denominators() {
        let vals = [g((1, 2), (1, 3)), g((1, 4), (0, 1))];
        assert_eq!(GaussianRational::clearing_factor(&vals), GaussianRational::from(12));
    }
}
