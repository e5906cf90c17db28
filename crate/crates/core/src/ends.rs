//! Ends and relative ends of `S(X, Y) = Y ⊗ X*` over `Rep(H)`, computed as
//! equalizers at the regular module `P`.
//!
//! Vectors of the ambient `S(P, P) = P ⊗ P*` are read as operators on `P`
//! (`T[i][j]` at flat index `i·n + j`).

use std::env;
use std::sync::Arc;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::exactla::{
    kernel_basis, kron, solve_unique, span_basis, LinAlgError, Mat, Scalar, Vector,
};
use crate::hopf::{HopfAlgebra, HopfMap};
use crate::rep::{
    dual, hom_basis, hom_from_regular, internal_hom, pullback, regular_module, tensor,
    trivial_module, DualSide, HModMap, HModule,
};

/// Largest `dim P · dim X` at which a validation object is still checked.
pub const VALIDATION_DIM_CAP: usize = 96;

pub const DEFAULT_VALIDATION_DEPTH: usize = 3;

/// Validation depth from `RELEND_VALIDATION_DEPTH`, else the default.
pub fn validation_depth_from_env() -> usize {
    env::var("RELEND_VALIDATION_DEPTH")
        .ok()
        .and_then(|s| s.trim().parse().ok())
        .unwrap_or(DEFAULT_VALIDATION_DEPTH)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Validation {
    pub object: String,
    pub dim: usize,
    pub pass: bool,
}

#[derive(Debug, Clone)]
struct Relative {
    map: HopfMap,
    /// Pullback of the regular `Q`-module.
    generator: HModule,
}

#[derive(Debug, Clone)]
pub struct EndObject {
    generator: HModule,
    ambient: HModule,
    basis: Vec<Vector>,
    inclusion: Mat,
    module: HModule,
    relative: Option<Relative>,
    validations: Vec<Validation>,
}

impl EndObject {
    fn from_basis(
        generator: HModule,
        ambient: HModule,
        basis: Vec<Vector>,
        relative: Option<Relative>,
    ) -> Result<Self> {
        let inclusion = Mat::from_columns(ambient.dim(), &basis);
        let label = if relative.is_some() { "A(D)" } else { "A" };
        let module = ambient.submodule(&inclusion, label).map_err(|e| match e {
            Error::InvalidModule(_) => {
                Error::NotClosed("end subspace is not an H-submodule".into())
            }
            e => e,
        })?;
        Ok(EndObject {
            generator,
            ambient,
            basis,
            inclusion,
            module,
            relative,
            validations: Vec::new(),
        })
    }

    pub fn algebra(&self) -> &Arc<HopfAlgebra> {
        self.generator.algebra()
    }

    /// The regular module `P`.
    pub fn generator(&self) -> &HModule {
        &self.generator
    }

    /// `S(P, P) = P ⊗ P*`.
    pub fn ambient(&self) -> &HModule {
        &self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn dim_ambient(&self) -> usize {
        self.ambient.dim()
    }

    /// Canonical (reduced echelon) basis of `E ⊆ S(P, P)`.
    pub fn basis(&self) -> &[Vector] {
        &self.basis
    }

    /// `π_P: E → S(P, P)`, columns are the basis vectors.
    pub fn pi_at_p(&self) -> &Mat {
        &self.inclusion
    }

    /// `E` with the action restricted from the ambient.
    pub fn module(&self) -> &HModule {
        &self.module
    }

    pub fn relative_to(&self) -> Option<&HopfMap> {
        self.relative.as_ref().map(|r| &r.map)
    }

    pub fn validations(&self) -> &[Validation] {
        &self.validations
    }

    /// The `i`-th basis vector as an operator on `P`.
    pub fn operator(&self, i: usize) -> Mat {
        let n = self.generator.dim();
        Mat::unflatten(&self.basis[i], n, n)
    }

    /// `π_M: E → S(M, M)`; see [`induce_pi`].
    pub fn induce_pi(&self, m: &HModule) -> Result<Mat> {
        induce_pi(self, m)
    }
}

/// `{T : aT = Ta for every a ∈ End_H(P)}` as rows of a stacked constraint
/// matrix on `P ⊗ P*`.
fn generator_constraints(p: &HModule) -> Result<Mat> {
    let n = p.dim();
    let id = Mat::identity(n);
    let blocks: Vec<Mat> = hom_basis(p, p)?
        .iter()
        .map(|a| {
            let a = a.matrix();
            // S(id, a) − S(a, id)
            &kron(a, &id) - &kron(&id, &a.transpose())
        })
        .collect();
    let refs: Vec<&Mat> = blocks.iter().collect();
    Ok(Mat::vstack(&refs))
}

fn canonical(vectors: &[Vector], dim: usize) -> Vec<Vector> {
    span_basis(vectors, dim)
}

/// The ordinary end `∫_M S(M, M)`, realised inside `S(P, P)`.
pub fn end_at_generator(h: &Arc<HopfAlgebra>) -> Result<EndObject> {
    let p = regular_module(h);
    let ambient = internal_hom(&p, &p)?.with_label("S(P,P)");
    let constraints = generator_constraints(&p)?;
    let basis = canonical(&kernel_basis(&constraints), ambient.dim());
    EndObject::from_basis(p, ambient, basis, None)
}

/// Component of the family determined by the operator `t` on `P` at `M`:
/// the unique `X` with `X ∘ f = f ∘ t` for every `f: P → M`.
fn component(t: &Mat, unit: &[Scalar], maps: &[HModMap], dim: usize) -> Result<Mat> {
    let tu = t.mul_vec(unit);
    // evaluating every equation at the unit of P fixes X column by column
    let cols: Vec<Vector> = maps.iter().map(|f| f.matrix().mul_vec(&tu)).collect();
    let x = Mat::from_columns(dim, &cols);
    for f in maps {
        if &x * f.matrix() != f.matrix() * t {
            return Err(Error::NoSolution(format!(
                "dinaturality at {} has no solution",
                f.target().label()
            )));
        }
    }
    Ok(x)
}

/// `π_M: E → S(M, M)` as a `dim(M)² × dim(E)` matrix: the unique family with
/// `S(f, id_M) π_M = S(id_P, f) π_P` for every `f` in a basis of `Hom_H(P, M)`.
pub fn induce_pi(e: &EndObject, m: &HModule) -> Result<Mat> {
    if e.algebra() != m.algebra() {
        return Err(Error::AlgebraMismatch);
    }
    let maps = hom_from_regular(m);
    let unit = e.algebra().unit();
    let cols = (0..e.dim())
        .map(|i| Ok(component(&e.operator(i), unit, &maps, m.dim())?.flatten()))
        .collect::<Result<Vec<_>>>()?;
    Ok(Mat::from_columns(m.dim() * m.dim(), &cols))
}

/// `(id_{M⊗X} ⊗ φ_{M,X}) a π_{M⊗X}` applied to one vector of
/// `(M ⊗ X) ⊗ (M ⊗ X)*`, landing in `M ⊗ X ⊗ X* ⊗ M*`.
pub fn case1_left(w: &[Scalar], dm: usize, dx: usize) -> Vector {
    let d = dm * dx;
    let mut out = vec![Scalar::zero(); d * d];
    for m in 0..dm {
        for x in 0..dx {
            for m2 in 0..dm {
                for x2 in 0..dx {
                    let src = (m * dx + x) * d + m2 * dx + x2;
                    let dst = ((m * dx + x) * dx + x2) * dm + m2;
                    out[dst] = w[src].clone();
                }
            }
        }
    }
    out
}

/// `(id_M ⊗ coev_X ⊗ id_{M*}) v` for `v ∈ M ⊗ M*`.
pub fn case1_right(v: &[Scalar], dm: usize, dx: usize) -> Vector {
    let mut out = vec![Scalar::zero(); dm * dx * dx * dm];
    for m in 0..dm {
        for m2 in 0..dm {
            for x in 0..dx {
                out[((m * dx + x) * dx + x) * dm + m2] = v[m * dm + m2].clone();
            }
        }
    }
    out
}

/// Defect of the relative condition at `P ⊗ X` for every column of `pi_p`
/// (operators on `P`), as columns of a matrix.
fn case1_defect(pi_p: &Mat, p: &HModule, x: &HModule) -> Result<Mat> {
    let n = p.dim();
    let px = tensor(p, x)?;
    let maps = hom_from_regular(&px);
    let unit = p.algebra().unit();
    let cols = (0..pi_p.cols())
        .map(|c| {
            let v = pi_p.column(c);
            let t = Mat::unflatten(&v, n, n);
            let w = component(&t, unit, &maps, px.dim())?.flatten();
            let lhs = case1_left(&w, n, x.dim());
            let rhs = case1_right(&v, n, x.dim());
            Ok(lhs.iter().zip(&rhs).map(|(a, b)| a - b).collect())
        })
        .collect::<Result<Vec<Vector>>>()?;
    Ok(Mat::from_columns(n * x.dim() * x.dim() * n, &cols))
}

/// Candidate validation objects of `D = Rep(Q)`, in order.
fn validation_objects(p: &HopfMap) -> Result<Vec<HModule>> {
    let q = p.target();
    let reg = regular_module(q).with_label("Q");
    let triv = trivial_module(q);
    let list = [
        triv.clone(),
        dual(&reg, DualSide::Right),
        tensor(&reg, &reg)?,
        reg.direct_sum(&triv)?,
        dual(&reg, DualSide::Left),
    ];
    list.iter().map(|m| pullback(p, m)).collect()
}

/// The relative end for `D = Rep(Q)` pulled back along the surjection `p`,
/// validated on `depth` further objects of `D`.
pub fn relative_end_with_depth(
    h: &Arc<HopfAlgebra>,
    p: &HopfMap,
    depth: usize,
) -> Result<EndObject> {
    if p.source() != h {
        return Err(Error::AlgebraMismatch);
    }
    p.ensure_surjective()?;
    let ordinary = end_at_generator(h)?;
    let x = pullback(p, &regular_module(p.target()).with_label("Q"))?;
    let defect = case1_defect(ordinary.pi_at_p(), ordinary.generator(), &x)?;
    let coeffs = kernel_basis(&defect);
    let vectors: Vec<Vector> = coeffs
        .iter()
        .map(|c| ordinary.pi_at_p().mul_vec(c))
        .collect();
    let basis = canonical(&vectors, ordinary.dim_ambient());
    let relative = Relative {
        map: p.clone(),
        generator: x,
    };
    let mut end = EndObject::from_basis(
        ordinary.generator.clone(),
        ordinary.ambient.clone(),
        basis,
        Some(relative),
    )?;

    let n = end.generator.dim();
    for obj in validation_objects(p)?.into_iter().take(depth) {
        if n * obj.dim() > VALIDATION_DIM_CAP {
            continue;
        }
        let pass = case1_defect(end.pi_at_p(), &end.generator, &obj)?.is_zero();
        end.validations.push(Validation {
            object: obj.label().to_string(),
            dim: obj.dim(),
            pass,
        });
        if !pass {
            return Err(Error::ValidationFailed(obj.label().to_string()));
        }
    }
    Ok(end)
}

/// [`relative_end_with_depth`] with the depth from the environment.
pub fn relative_end(h: &Arc<HopfAlgebra>, p: &HopfMap) -> Result<EndObject> {
    relative_end_with_depth(h, p, validation_depth_from_env())
}

/// Whether an ambient vector satisfies the defining constraints of `e`.
pub fn satisfies_constraints(e: &EndObject, v: &[Scalar]) -> Result<bool> {
    let generator_ok = generator_constraints(&e.generator)?
        .mul_vec(v)
        .iter()
        .all(Zero::is_zero);
    if !generator_ok {
        return Ok(false);
    }
    match &e.relative {
        None => Ok(true),
        Some(r) => Ok(case1_defect(&Mat::column_matrix(v), &e.generator, &r.generator)?.is_zero()),
    }
}

/// The unique `h: E′ → E` with `π_P ∘ h = λ_P`, where the columns of
/// `lambda_p` are the images in `S(P, P)` of a basis of `E′`.
pub fn factor_through(e: &EndObject, lambda_p: &Mat) -> Result<Mat> {
    if lambda_p.rows() != e.dim_ambient() {
        return Err(Error::Shape(format!(
            "candidate family has {} rows, ambient has dimension {}",
            lambda_p.rows(),
            e.dim_ambient()
        )));
    }
    for c in 0..lambda_p.cols() {
        if !satisfies_constraints(e, &lambda_p.column(c))? {
            return Err(Error::ConstraintViolation(format!("column {c}")));
        }
    }
    solve_unique(e.pi_at_p(), lambda_p).map_err(|err| match err {
        LinAlgError::NoSolution => Error::ConstraintViolation("candidate leaves the end".into()),
        err => Error::from_linalg(err, "factorization through the end"),
    })
}

/// The inclusion `E_fine ⊆ E_coarse` in coordinates, with `π^coarse_M ∘ ι =
/// π^fine_M` checked on the trivial and regular modules.
pub fn restriction_mono(fine: &EndObject, coarse: &EndObject) -> Result<Mat> {
    if fine.algebra() != coarse.algebra() {
        return Err(Error::AlgebraMismatch);
    }
    let iota = solve_unique(coarse.pi_at_p(), fine.pi_at_p()).map_err(|err| match err {
        LinAlgError::NoSolution => Error::NotNested(format!(
            "end of dimension {} is not contained in end of dimension {}",
            fine.dim(),
            coarse.dim()
        )),
        err => Error::from_linalg(err, "restriction"),
    })?;
    let h = fine.algebra();
    for m in [trivial_module(h), regular_module(h)] {
        if &coarse.induce_pi(&m)? * &iota != fine.induce_pi(&m)? {
            return Err(Error::NotNested(format!(
                "components disagree at {}",
                m.label()
            )));
        }
    }
    Ok(iota)
}
