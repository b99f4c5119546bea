//! Exhaustive verification of the weak Hopf axioms on basis tuples.
//!
//! Every check is linear (or multilinear) in its inputs, so passing on all
//! basis tuples proves the identity on all of 𝕂. A failing check never
//! stops the run.

use std::fmt;
use std::ops::Sub;

use rayon::prelude::*;
use serde::Serialize;

use crate::hybrid::{BasisIndex, HybridElement};
use crate::linalg::{echelon_basis, span_equal};
use crate::scalar::{Field, GaussianRational, ScalarError};
use crate::structure::{build_structure, StructureMaps, Variant};
use crate::tensor::{tprod2, ApplyLeft, ApplyRight, Endomorphism, Tensor2};

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
        })
    }
}

/// Outcome of one identity on one input tuple. `residual` is the displayed
/// `lhs - rhs`, which is `0` exactly when the check passes.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct CheckReport {
    pub name: String,
    pub inputs: Vec<String>,
    pub status: Status,
    pub lhs: String,
    pub rhs: String,
    pub residual: String,
}

impl CheckReport {
    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }

    fn compare<T>(name: &str, inputs: Vec<String>, lhs: T, rhs: T) -> Self
    where
        T: Clone + PartialEq + fmt::Display + Sub<Output = T>,
    {
        let status = if lhs == rhs { Status::Pass } else { Status::Fail };
        let residual = (lhs.clone() - rhs.clone()).to_string();
        Self {
            name: name.to_string(),
            inputs,
            status,
            lhs: lhs.to_string(),
            rhs: rhs.to_string(),
            residual,
        }
    }

    fn flag(name: &str, inputs: Vec<String>, ok: bool, lhs: String, rhs: String) -> Self {
        let (status, residual) = if ok {
            (Status::Pass, "0".to_string())
        } else {
            (Status::Fail, format!("{lhs} ≠ {rhs}"))
        };
        Self {
            name: name.to_string(),
            inputs,
            status,
            lhs,
            rhs,
            residual,
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
pub struct Summary {
    pub total: usize,
    pub passed: usize,
    pub failed: usize,
}

impl Summary {
    pub fn of(reports: &[CheckReport]) -> Self {
        let passed = reports.iter().filter(|r| r.passed()).count();
        Self {
            total: reports.len(),
            passed,
            failed: reports.len() - passed,
        }
    }

    pub fn all_passed(&self) -> bool {
        self.failed == 0
    }
}

/// Whether `b` stays symbolic or is specialized to a nonzero value.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum ParameterMode {
    Symbolic,
    Numeric(GaussianRational),
}

impl fmt::Display for ParameterMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ParameterMode::Symbolic => f.write_str("symbolic"),
            ParameterMode::Numeric(b0) => write!(f, "b={b0}"),
        }
    }
}

fn names(xs: &[BasisIndex]) -> Vec<String> {
    xs.iter().map(|x| x.name().to_string()).collect()
}

fn e<F: Field>(i: BasisIndex) -> HybridElement<F> {
    HybridElement::basis(i)
}

/// `(ε⊗id)Δ(x) = x` and `(id⊗ε)Δ(x) = x`.
pub fn check_counit<F: Field>(s: &StructureMaps<F>) -> Vec<CheckReport> {
    let mut out = Vec::new();
    for x in BasisIndex::ALL {
        let dx = s.delta.image(x);
        out.push(CheckReport::compare(
            "counit.left",
            names(&[x]),
            dx.apply_left(&s.counit),
            e(x),
        ));
        out.push(CheckReport::compare(
            "counit.right",
            names(&[x]),
            dx.apply_right(&s.counit),
            e(x),
        ));
    }
    out
}

/// `(Δ⊗id)Δ(x) = (id⊗Δ)Δ(x)`.
pub fn check_coassociativity<F: Field>(s: &StructureMaps<F>) -> Vec<CheckReport> {
    BasisIndex::ALL
        .iter()
        .map(|&x| {
            let dx = s.delta.image(x);
            CheckReport::compare(
                "coassociativity",
                names(&[x]),
                dx.apply_left(&s.delta),
                dx.apply_right(&s.delta),
            )
        })
        .collect()
}

/// Multiplicativity `Δ(kh) = Δ(k)Δ(h)`, on all 16 ordered pairs.
pub fn check_eq1<F: Field>(s: &StructureMaps<F>) -> Vec<CheckReport> {
    let mut out = Vec::new();
    for k in BasisIndex::ALL {
        for h in BasisIndex::ALL {
            let lhs = s.delta_ext(&(e::<F>(k) * e(h)));
            let rhs = s.delta.image(k).t2_mul(s.delta.image(h));
            out.push(CheckReport::compare("eq1.multiplicative", names(&[k, h]), lhs, rhs));
        }
    }
    out
}

/// `(ε(k h₍₁₎) ε(h₍₂₎ g), ε(k h₍₂₎) ε(h₍₁₎ g))` for basis `k, h, g`.
pub fn weak_counit_sums<F: Field>(s: &StructureMaps<F>, k: BasisIndex, h: BasisIndex, g: BasisIndex) -> (F, F) {
    let one = HybridElement::<F>::one();
    let dh = s.delta.image(h);
    let pair = |t: Tensor2<F>| -> F {
        let left = t.apply_left(&s.counit);
        s.counit_ext(&left)
    };
    let first = tprod2(&e(k), &one).t2_mul(dh).t2_mul(&tprod2(&one, &e(g)));
    let second = tprod2(&one, &e(k)).t2_mul(dh).t2_mul(&tprod2(&e(g), &one));
    (pair(first), pair(second))
}

/// Weak counit law `ε(kh₍₁₎)ε(h₍₂₎g) = ε(khg) = ε(kh₍₂₎)ε(h₍₁₎g)`, on all 64 triples.
pub fn check_eq2<F: Field>(s: &StructureMaps<F>) -> Vec<CheckReport> {
    let triples: Vec<[BasisIndex; 3]> = BasisIndex::ALL
        .iter()
        .flat_map(|&k| {
            BasisIndex::ALL
                .iter()
                .flat_map(move |&h| BasisIndex::ALL.map(|g| [k, h, g]))
        })
        .collect();
    triples
        .par_iter()
        .flat_map_iter(|&[k, h, g]| {
            let (first, second) = weak_counit_sums(s, k, h, g);
            let middle = s.counit_ext(&(e::<F>(k) * e(h) * e(g)));
            [
                CheckReport::compare("eq2.first", names(&[k, h, g]), first, middle.clone()),
                CheckReport::compare("eq2.second", names(&[k, h, g]), second, middle),
            ]
        })
        .collect()
}

/// Δ²(1) = (Δ⊗id)Δ(1).
pub fn delta_squared_unit<F: Field>(s: &StructureMaps<F>) -> crate::tensor::Tensor3<F> {
    s.unit_coproduct().apply_left(&s.delta)
}

/// Weak unit law, both equalities in 𝕂⊗𝕂⊗𝕂.
pub fn check_eq3<F: Field>(s: &StructureMaps<F>) -> Vec<CheckReport> {
    let d1 = s.unit_coproduct();
    let d2 = delta_squared_unit(s);
    let one_d1 = d1.embed_right();
    let d1_one = d1.embed_left();
    vec![
        CheckReport::compare("eq3.left", vec!["1".into()], one_d1.t3_mul(&d1_one), d2.clone()),
        CheckReport::compare("eq3.right", vec!["1".into()], d1_one.t3_mul(&one_d1), d2),
    ]
}

/// `h₍₁₎S(h₍₂₎)`
pub fn target_sweedler<F: Field>(s: &StructureMaps<F>, h: &HybridElement<F>) -> HybridElement<F> {
    s.delta_ext(h).apply_right(&s.antipode).multiply()
}

/// `S(h₍₁₎)h₍₂₎`
pub fn source_sweedler<F: Field>(s: &StructureMaps<F>, h: &HybridElement<F>) -> HybridElement<F> {
    s.delta_ext(h).apply_left(&s.antipode).multiply()
}

/// `S(h₍₁₎)h₍₂₎S(h₍₃₎)` with the triple coproduct taken as `(Δ⊗id)Δ(h)`.
pub fn antipode_sweedler<F: Field>(s: &StructureMaps<F>, h: &HybridElement<F>) -> HybridElement<F> {
    s.delta_ext(h)
        .apply_left(&s.delta)
        .apply_left(&s.antipode)
        .apply_right(&s.antipode)
        .multiply()
}

/// The three antipode identities for each basis `h`.
pub fn check_eq4<F: Field>(s: &StructureMaps<F>) -> Vec<CheckReport> {
    let mut out = Vec::new();
    for h in BasisIndex::ALL {
        let x = e::<F>(h);
        out.push(CheckReport::compare(
            "eq4.target",
            names(&[h]),
            target_sweedler(s, &x),
            s.eps_t(&x),
        ));
        out.push(CheckReport::compare(
            "eq4.source",
            names(&[h]),
            source_sweedler(s, &x),
            s.eps_s(&x),
        ));
        out.push(CheckReport::compare(
            "eq4.antipode",
            names(&[h]),
            antipode_sweedler(s, &x),
            s.antipode_ext(&x),
        ));
    }
    out
}

/// `ε_t∘ε_t = ε_t` and `ε_s∘ε_s = ε_s` on the basis.
pub fn check_counital_idempotence<F: Field>(s: &StructureMaps<F>) -> Vec<CheckReport> {
    let mut out = Vec::new();
    for x in BasisIndex::ALL {
        let t = s.eps_t(&e(x));
        out.push(CheckReport::compare("eps_t.idempotent", names(&[x]), s.eps_t(&t), t));
    }
    for x in BasisIndex::ALL {
        let t = s.eps_s(&e(x));
        out.push(CheckReport::compare("eps_s.idempotent", names(&[x]), s.eps_s(&t), t));
    }
    out
}

/// A basis of `f(𝕂)`: the four basis images row-reduced, nonzero rows kept.
pub fn subalgebra_image<F: Field>(f: &Endomorphism<F>) -> Vec<HybridElement<F>> {
    let rows: Vec<Vec<F>> = f.0.iter().map(HybridElement::to_vec).collect();
    echelon_basis(4, &rows)
        .expect("images have four coordinates")
        .iter()
        .map(|v| HybridElement::from_slice(v).expect("four coordinates"))
        .collect()
}

fn fmt_span<F: Field>(basis: &[HybridElement<F>]) -> String {
    let parts: Vec<String> = basis.iter().map(ToString::to_string).collect();
    format!("span{{{}}}", parts.join(", "))
}

/// Whether two element lists span the same subspace of 𝕂.
pub fn elements_span_equal<F: Field>(a: &[HybridElement<F>], b: &[HybridElement<F>]) -> bool {
    let va: Vec<Vec<F>> = a.iter().map(HybridElement::to_vec).collect();
    let vb: Vec<Vec<F>> = b.iter().map(HybridElement::to_vec).collect();
    span_equal(&va, &vb).expect("elements have four coordinates")
}

/// The target and source subalgebras coincide.
pub fn check_counital_images<F: Field>(s: &StructureMaps<F>) -> Vec<CheckReport> {
    let target = subalgebra_image(&s.eps_t_map());
    let source = subalgebra_image(&s.eps_s_map());
    let ok = elements_span_equal(&target, &source);
    vec![CheckReport::flag(
        "counital_images.equal",
        vec![],
        ok,
        fmt_span(&target),
        fmt_span(&source),
    )]
}

/// `q = S(1₍₁₎) ⊗ 1₍₂₎`.
pub fn separability_element<F: Field>(s: &StructureMaps<F>) -> Tensor2<F> {
    s.unit_coproduct().apply_left(&s.antipode)
}

/// `m(q) = 1` and `(x⊗1)q = q(1⊗x)` for each `x` of `subalg`.
pub fn check_separable<F: Field>(q: &Tensor2<F>, subalg: &[HybridElement<F>]) -> Vec<CheckReport> {
    let one = HybridElement::<F>::one();
    let mut out = vec![CheckReport::compare(
        "separable.unit",
        vec![],
        q.multiply(),
        one.clone(),
    )];
    for x in subalg {
        let lhs = tprod2(x, &one).t2_mul(q);
        let rhs = q.t2_mul(&tprod2(&one, x));
        out.push(CheckReport::compare(
            "separable.commutes",
            vec![x.to_string()],
            lhs,
            rhs,
        ));
    }
    out
}

/// Separability of the target subalgebra with `q = S(1₍₁₎)⊗1₍₂₎`, plus
/// idempotence of `q` in 𝕂⊗𝕂.
pub fn check_separability<F: Field>(s: &StructureMaps<F>) -> Vec<CheckReport> {
    let q = separability_element(s);
    let target = subalgebra_image(&s.eps_t_map());
    let mut out = check_separable(&q, &target);
    out.push(CheckReport::compare(
        "separable.idempotent",
        vec![],
        q.t2_mul(&q),
        q.clone(),
    ));
    out
}

type CheckGroup<F> = fn(&StructureMaps<F>) -> Vec<CheckReport>;

/// Every check, in a fixed order independent of scheduling.
pub fn run_checks<F: Field>(s: &StructureMaps<F>) -> Vec<CheckReport> {
    let groups: [CheckGroup<F>; 9] = [
        check_counit,
        check_coassociativity,
        check_eq1,
        check_eq2,
        check_eq3,
        check_eq4,
        check_counital_idempotence,
        check_counital_images,
        check_separability,
    ];
    groups.par_iter().map(|g| g(s)).collect::<Vec<_>>().concat()
}

pub fn run_all(v: Variant, mode: &ParameterMode) -> Result<Vec<CheckReport>, ScalarError> {
    let s = build_structure(v);
    match mode {
        ParameterMode::Symbolic => Ok(run_checks(&s)),
        ParameterMode::Numeric(b0) => Ok(run_checks(&s.evaluate(b0)?)),
    }
}
