//! Left and right integrals as kernels of linear systems in the unknown
//! coordinates `(k₁, k₂, k₃, k₄)` of `k₁·1 + k₂·g + k₃·μ + k₄·ν`.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;
use thiserror::Error;

use crate::hybrid::{BasisIndex, HybridElement};
use crate::linalg::{echelon_basis, Matrix};
use crate::scalar::{Field, Polynomial};
use crate::structure::{build_structure, StructureMaps, Variant};
use crate::{BPolynomial, Scalar};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum IntegralError {
    #[error("no reference integral system exists for variant {0}")]
    UnsupportedVariant(Variant),
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Side {
    Left,
    Right,
}

impl fmt::Display for Side {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Side::Left => "left",
            Side::Right => "right",
        })
    }
}

impl FromStr for Side {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "left" => Ok(Side::Left),
            "right" => Ok(Side::Right),
            other => Err(format!("unknown side `{other}` (expected left or right)")),
        }
    }
}

/// Where the linear system comes from.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Source {
    /// Expanded from the defining identity over all four basis elements.
    Derived,
    /// Reference equations for variant A.
    Paper,
}

impl fmt::Display for Source {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Source::Derived => "derived",
            Source::Paper => "paper",
        })
    }
}

impl FromStr for Source {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "derived" => Ok(Source::Derived),
            "paper" => Ok(Source::Paper),
            other => Err(format!("unknown source `{other}` (expected derived or paper)")),
        }
    }
}

/// The coordinates `k₁..k₄` of a candidate integral.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct IntegralCandidate<F> {
    pub k: [F; 4],
}

impl<F: Field> IntegralCandidate<F> {
    pub fn element(&self) -> HybridElement<F> {
        HybridElement::new(self.k.clone())
    }
}

#[derive(Clone, PartialEq, Debug)]
pub struct IntegralSpace<F> {
    pub side: Side,
    pub variant: Variant,
    pub source: Source,
    /// Reduced echelon basis: leading coordinate 1, pivots cleared.
    pub basis: Vec<HybridElement<F>>,
}

impl<F: Field> IntegralSpace<F> {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }
}

impl IntegralSpace<Scalar> {
    /// Monic denominator factors of the basis coordinates other than powers
    /// of `b`: parameter values where the generic answer may not specialize.
    pub fn exceptional_denominators(&self) -> Vec<BPolynomial> {
        let mut out: Vec<BPolynomial> = Vec::new();
        for v in &self.basis {
            for c in v.coeffs() {
                let d = c.denominator();
                if d.is_monomial() {
                    continue;
                }
                // strip the b^k factor
                let lowest = d
                    .coeffs()
                    .iter()
                    .position(|x| !num_traits::Zero::is_zero(x))
                    .unwrap_or(0);
                let stripped = Polynomial::new(d.coeffs()[lowest..].to_vec());
                if !out.contains(&stripped) {
                    out.push(stripped);
                }
            }
        }
        out
    }
}

/// `x·l − ε_t(x)·l` (left) or `l·x − l·ε_s(x)` (right).
pub fn integral_defect<F: Field>(
    side: Side,
    s: &StructureMaps<F>,
    x: &HybridElement<F>,
    l: &HybridElement<F>,
) -> HybridElement<F> {
    match side {
        Side::Left => x * l - &s.eps_t(x) * l,
        Side::Right => l * x - l * &s.eps_s(x),
    }
}

/// 16×4 coefficient matrix: for each basis `x` (including 1) and each
/// coordinate, the linear form in `(k₁..k₄)` of the integral defect.
pub fn derive_integral_system<F: Field>(side: Side, s: &StructureMaps<F>) -> Matrix<F> {
    let columns: Vec<Vec<HybridElement<F>>> = BasisIndex::ALL
        .iter()
        .map(|&j| {
            let l = HybridElement::basis(j);
            BasisIndex::ALL
                .iter()
                .map(|&x| integral_defect(side, s, &HybridElement::basis(x), &l))
                .collect()
        })
        .collect();
    let mut m = Matrix::zeros(16, 4);
    for (j, per_x) in columns.iter().enumerate() {
        for (xi, defect) in per_x.iter().enumerate() {
            for (c, v) in defect.coeffs().iter().enumerate() {
                m.set(4 * xi + c, j, v.clone());
            }
        }
    }
    m
}

/// The reference systems: seven equations per side, each moved to the form
/// `a₁k₁ + a₂k₂ + a₃k₃ + a₄k₄ = 0`.
pub fn paper_integral_system(side: Side, v: Variant) -> Result<Matrix<Scalar>, IntegralError> {
    if v != Variant::A {
        return Err(IntegralError::UnsupportedVariant(v));
    }
    let n = Scalar::from_i64;
    let i = Scalar::i;
    let b = Scalar::b;
    let ib = || i() * b();
    let inv_b = || n(1) / b();
    let rows = match side {
        Side::Left => vec![
            // 2bk₃ + 2ibk₄ − k₁ − ik₂ + k₄ = 0
            vec![n(-1), -i(), n(2) * b(), n(2) * ib() + n(1)],
            // k₁ + k₄ = (1/b + i)k₂
            vec![n(1), -(inv_b() + i()), n(0), n(1)],
            // (2b − i)k₁ + (−1 − 2ib)k₂ + i(2bk₃ + k₄) = 0
            vec![n(2) * b() - i(), n(-1) - n(2) * ib(), n(2) * ib(), i()],
            // (1 + 2ib)k₁ + (2b − i)k₂ − 2bk₃ − k₄ = 0
            vec![n(1) + n(2) * ib(), n(2) * b() - i(), n(-2) * b(), n(-1)],
            // k₂ = b(k₁ − ik₂ + k₄)
            vec![-b(), n(1) + ib(), n(0), -b()],
            // (1 + ib)k₁ + bk₂ + (−1 − ib)k₄ = 2bk₃
            vec![n(1) + ib(), b(), n(-2) * b(), n(-1) - ib()],
            // ib(k₂ − 2k₃) + (b − i)k₄ = (b − i)k₁
            vec![-(b() - i()), ib(), n(-2) * ib(), b() - i()],
        ],
        Side::Right => vec![
            // −2b(k₃ + ik₄) + k₁ − ik₂ + k₄ = 0
            vec![n(1), -i(), n(-2) * b(), n(1) - n(2) * ib()],
            // k₁ + (−1/b + i)k₂ = k₄
            vec![n(1), -inv_b() + i(), n(0), n(-1)],
            // (2b + i)k₁ + i((2b + i)k₂ − 2bk₃ + k₄) = 0
            vec![n(2) * b() + i(), i() * (n(2) * b() + i()), n(-2) * ib(), i()],
            // (1 − 2ib)k₁ + (2b + i)k₂ − 2bk₃ + k₄ = 0
            vec![n(1) - n(2) * ib(), n(2) * b() + i(), n(-2) * b(), n(1)],
            // −ibk₁ + bk₂ − ibk₄ + k₁ + k₄ = 2bk₃
            vec![n(1) - ib(), b(), n(-2) * b(), n(1) - ib()],
            // bk₁ + i(b + i)k₂ = bk₄
            vec![b(), i() * (b() + i()), n(0), -b()],
            // (b + i)k₁ + ib(k₂ − 2k₃) + (b + i)k₄ = 0
            vec![b() + i(), ib(), n(-2) * ib(), b() + i()],
        ],
    };
    Ok(Matrix::from_rows(4, rows).expect("seven rows of four coefficients"))
}

/// True when `x` satisfies the defining identity against all four basis
/// elements.
pub fn is_integral<F: Field>(x: &HybridElement<F>, side: Side, s: &StructureMaps<F>) -> bool {
    BasisIndex::ALL
        .iter()
        .all(|&y| integral_defect(side, s, &HybridElement::basis(y), x).is_zero())
}

/// Kernel of `system`, reduced to echelon form.
pub fn solve_integral_system<F: Field>(system: &Matrix<F>) -> Vec<HybridElement<F>> {
    let kernel = system.kernel_basis();
    echelon_basis(4, &kernel)
        .expect("kernel vectors have four coordinates")
        .iter()
        .map(|v| HybridElement::from_slice(v).expect("four coordinates"))
        .collect()
}

/// Integral space over an arbitrary field from the derived system.
pub fn derived_integral_space<F: Field>(side: Side, s: &StructureMaps<F>) -> IntegralSpace<F> {
    let basis = solve_integral_system(&derive_integral_system(side, s));
    debug_assert!(basis.iter().all(|v| is_integral(v, side, s)));
    IntegralSpace {
        side,
        variant: s.variant,
        source: Source::Derived,
        basis,
    }
}

pub fn integral_space(side: Side, v: Variant, source: Source) -> Result<IntegralSpace<Scalar>, IntegralError> {
    match source {
        Source::Derived => Ok(derived_integral_space(side, &build_structure(v))),
        Source::Paper => {
            let basis = solve_integral_system(&paper_integral_system(side, v)?);
            Ok(IntegralSpace {
                side,
                variant: v,
                source,
                basis,
            })
        }
    }
}

/// How the reference system relates to the derived one.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SystemComparison {
    pub derived_rank: usize,
    pub paper_rank: usize,
    /// Zero-based index of the first reference equation not implied by the
    /// derived system.
    pub first_unexplained_row: Option<usize>,
    pub same_kernel: bool,
}

pub fn compare_systems(side: Side, v: Variant) -> Result<SystemComparison, IntegralError> {
    let paper = paper_integral_system(side, v)?;
    let derived = derive_integral_system(side, &build_structure(v));
    let first_unexplained_row =
        (0..paper.rows()).find(|&r| !derived.row_space_contains(paper.row(r)).expect("four columns"));
    let dk: Vec<Vec<Scalar>> = derived.kernel_basis();
    let pk: Vec<Vec<Scalar>> = paper.kernel_basis();
    Ok(SystemComparison {
        derived_rank: derived.rank(),
        paper_rank: paper.rank(),
        first_unexplained_row,
        same_kernel: crate::linalg::span_equal(&dk, &pk).expect("four coordinates"),
    })
}

/// Reference bases for variant A, left then right.
pub fn reference_integral_basis(side: Side) -> Vec<HybridElement<Scalar>> {
    let n = Scalar::from_i64;
    let i = Scalar::i;
    let b = Scalar::b;
    let b2 = || b().pow(2);
    match side {
        Side::Left => vec![
            HybridElement::new([n(1), n(0), n(1) / b() + i(), n(-1)]),
            HybridElement::new([
                n(0),
                n(1),
                -((n(1) - n(2) * b() * (b() - i())) / (n(2) * b2())),
                (n(1) + i() * b()) / b(),
            ]),
        ],
        Side::Right => vec![
            HybridElement::new([n(1), n(0), n(1) / b() - i(), n(1)]),
            HybridElement::new([
                n(0),
                n(1),
                (n(-1) + n(2) * b() * (b() + i())) / (n(2) * b2()),
                (i() * b() - n(1)) / b(),
            ]),
        ],
    }
}
