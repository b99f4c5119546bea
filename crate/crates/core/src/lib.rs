//! Exact verification engine for the two weak Hopf algebra structures on
//! the hybrid numbers 𝕂 = span{1, g, μ, ν}.
//!
//! The algebra, tensor, linear-algebra and checking layers are generic over
//! a [`Field`]. Symbolic work happens in [`Scalar`] = ℚ(i)(b); numeric
//! spot checks specialize the structure tables to [`GaussianRational`] at a
//! fixed nonzero `b`.

pub mod checker;
pub mod hybrid;
pub mod integrals;
pub mod linalg;
pub mod scalar;
pub mod structure;
pub mod tensor;

pub use checker::{run_all, run_checks, CheckReport, ParameterMode, Status, Summary};
pub use hybrid::{BasisIndex, HybridElement, StructureConstants};
pub use integrals::{IntegralSpace, Side, Source};
pub use linalg::{LinalgError, Matrix};
pub use scalar::{Field, GaussianRational, Polynomial, RationalFunction, ScalarError};
pub use structure::{build_structure, StructureMaps, Variant};
pub use tensor::{ApplyLeft, ApplyMiddle, ApplyRight, LinearMap, Tensor2, Tensor3};

/// ℚ(i)(b), the field of all symbolic coefficients.
pub type Scalar = RationalFunction<GaussianRational>;
/// Polynomials in `b` over ℚ(i).
pub type BPolynomial = Polynomial<GaussianRational>;

pub type Element = HybridElement<Scalar>;
pub type SymbolicTensor2 = Tensor2<Scalar>;
pub type SymbolicTensor3 = Tensor3<Scalar>;
pub type SymbolicMaps = StructureMaps<Scalar>;

pub type NumericElement = HybridElement<GaussianRational>;
pub type NumericMaps = StructureMaps<GaussianRational>;
