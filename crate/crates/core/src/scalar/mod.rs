//! Exact coefficient fields.
//!
//! Everything above this module is generic over [`Field`]. Two fields are
//! provided: [`GaussianRational`] (ℚ(i)) and [`RationalFunction`] over it,
//! which is ℚ(i)(b), the field in which the symbolic parameter `b` lives.

mod gaussian;
mod poly;
mod ratfunc;

use std::fmt;
use std::ops::{Div, Neg, Sub};

use num_traits::{One, Zero};
use thiserror::Error;

pub use gaussian::GaussianRational;
pub use poly::Polynomial;
pub use ratfunc::RationalFunction;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ScalarError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("denominator vanishes at b = {at}")]
    EvalPole { at: String },
    #[error("the parameter b must be nonzero")]
    ZeroParameter,
    #[error("not a rational literal: `{0}`")]
    InvalidLiteral(String),
}

/// A commutative field with exact equality.
///
/// `Zero` and `One` pull in `Add` and `Mul`. Division by zero through the
/// `Div` operator panics; use [`Field::checked_inv`] when the divisor is not
/// known to be nonzero.
pub trait Field:
    Clone
    + PartialEq
    + fmt::Debug
    + fmt::Display
    + Zero
    + One
    + Neg<Output = Self>
    + Sub<Output = Self>
    + Div<Output = Self>
    + Send
    + Sync
{
    fn from_i64(n: i64) -> Self;

    fn checked_inv(&self) -> Option<Self>;

    /// True when the displayed form starts with a minus sign that a
    /// surrounding sum can pull out as ` - `.
    fn leads_negative(&self) -> bool {
        false
    }

    /// A nonzero factor that, multiplied into every value, clears the
    /// fractional parts of their coefficients. Used only for display.
    fn clearing_factor(_values: &[Self]) -> Self {
        Self::one()
    }
}

/// `x * k` for a small integer structure constant.
pub(crate) fn scale_by_int<F: Field>(x: &F, k: i64) -> F {
    match k {
        0 => F::zero(),
        1 => x.clone(),
        -1 => -x.clone(),
        _ => x.clone() * F::from_i64(k),
    }
}

/// True when `s` contains a `+` or `-` outside parentheses, past its first
/// character.
pub(crate) fn is_compound(s: &str) -> bool {
    let mut depth = 0i32;
    for (pos, ch) in s.char_indices() {
        match ch {
            '(' => depth += 1,
            ')' => depth -= 1,
            '+' | '-' if depth == 0 && pos > 0 => return true,
            _ => {}
        }
    }
    false
}

/// Writes a linear combination `c0 * l0 + c1 * l1 + ...`, skipping zero
/// coefficients. A `None` label is the constant term.
///
/// `join` separates a coefficient from its label (`*` inside polynomials,
/// ` * ` for algebra elements). With `wrap_quotients`, a coefficient whose
/// display contains `/` is also parenthesized.
pub(crate) fn fmt_combination<F: Field>(
    f: &mut fmt::Formatter<'_>,
    terms: &[(&F, Option<&str>)],
    join: &str,
    wrap_quotients: bool,
) -> fmt::Result {
    let mut written = 0usize;
    for (coeff, label) in terms {
        if coeff.is_zero() {
            continue;
        }
        let negative = coeff.leads_negative();
        let magnitude = if negative { -(*coeff).clone() } else { (*coeff).clone() };
        let text = magnitude.to_string();
        let compound = is_compound(&text);
        let body = match label {
            None if compound && (written > 0 || negative) => format!("({text})"),
            None => text,
            Some(l) if magnitude.is_one() => (*l).to_string(),
            Some(l) => {
                if compound || (wrap_quotients && text.contains('/')) {
                    format!("({text}){join}{l}")
                } else {
                    format!("{text}{join}{l}")
                }
            }
        };
        let sign = match (written, negative) {
            (0, false) => "",
            (0, true) => "-",
            (_, false) => " + ",
            (_, true) => " - ",
        };
        write!(f, "{sign}{body}")?;
        written += 1;
    }
    if written == 0 {
        write!(f, "0")?;
    }
    Ok(())
}
