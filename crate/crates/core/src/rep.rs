//! Representations of a Hopf algebra and the structure of `Rep(H)` acting
//! on itself.
//!
//! Conventions used throughout:
//! * `X ⊗ Y` carries `ρ(h) = Σ ρ_X(h₁) ⊗ ρ_Y(h₂)` in the flat-index order of
//!   [`kron`].
//! * The right dual `X*` carries `ρ(S h)ᵀ`, with `ev: X* ⊗ X → 1`,
//!   `f ⊗ x ↦ f(x)` and `coev: 1 → X ⊗ X*`, `1 ↦ Σ eᵢ ⊗ eⁱ`.
//! * The left dual `*X` carries `ρ(S⁻¹ h)ᵀ`, with `ev: X ⊗ *X → 1` and
//!   `coev: 1 → *X ⊗ X`.
//! * Associativity and unit constraints are identities on coordinates.
//! * The internal Hom of the regular module category is
//!   `hom(X, Y) = Y ⊗ X*`, read as operators `X → Y` (see
//!   [`crate::exactla`]).

use std::fmt;
use std::sync::Arc;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exactla::{kernel_basis, kron, Mat, Scalar, Vector};
use crate::hopf::{HopfAlgebra, HopfMap};

/// Which dual: `X*` (antipode) or `*X` (inverse antipode).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum DualSide {
    Left,
    Right,
}

#[derive(Clone)]
pub struct HModule {
    algebra: Arc<HopfAlgebra>,
    dim: usize,
    action: Arc<[Mat]>,
    label: String,
}

impl PartialEq for HModule {
    fn eq(&self, other: &Self) -> bool {
        same_algebra(&self.algebra, &other.algebra) && self.action == other.action
    }
}

impl fmt::Debug for HModule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "HModule({}, dim {})", self.label, self.dim)
    }
}

fn same_algebra(a: &Arc<HopfAlgebra>, b: &Arc<HopfAlgebra>) -> bool {
    Arc::ptr_eq(a, b) || **a == **b
}

impl HModule {
    /// Validates that the unit acts trivially and the action is
    /// multiplicative on basis pairs.
    pub fn new(
        algebra: Arc<HopfAlgebra>,
        action: Vec<Mat>,
        label: impl Into<String>,
    ) -> Result<Self> {
        let n = algebra.dim();
        if action.len() != n {
            return Err(Error::InvalidModule(format!(
                "{} action matrices for a Hopf algebra of dimension {n}",
                action.len()
            )));
        }
        let dim = action.first().map_or(0, Mat::rows);
        if action.iter().any(|a| a.shape() != (dim, dim)) {
            return Err(Error::InvalidModule(
                "action matrices must be square of equal size".into(),
            ));
        }
        let module = HModule {
            algebra,
            dim,
            action: action.into(),
            label: label.into(),
        };
        if !module.act(module.algebra.unit()).is_identity() {
            return Err(Error::InvalidModule(
                "unit does not act as the identity".into(),
            ));
        }
        for i in 0..n {
            for j in 0..n {
                let lhs = &module.action[i] * &module.action[j];
                let prod = module.algebra.mul(
                    &module.algebra.basis_vector(i),
                    &module.algebra.basis_vector(j),
                );
                if lhs != module.act(&prod) {
                    return Err(Error::InvalidModule(format!(
                        "ρ(b{i})ρ(b{j}) != ρ(b{i} b{j})"
                    )));
                }
            }
        }
        Ok(module)
    }

    /// Skips validation; only for actions that are correct by construction.
    fn trusted(algebra: Arc<HopfAlgebra>, action: Vec<Mat>, label: String) -> Self {
        let dim = action.first().map_or(0, Mat::rows);
        let module = HModule {
            algebra,
            dim,
            action: action.into(),
            label,
        };
        debug_assert!(module.act(module.algebra.unit()).is_identity());
        module
    }

    pub fn algebra(&self) -> &Arc<HopfAlgebra> {
        &self.algebra
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn action(&self) -> &[Mat] {
        &self.action
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn with_label(mut self, label: impl Into<String>) -> Self {
        self.label = label.into();
        self
    }

    /// `ρ(x)` for an arbitrary element `x`.
    pub fn act(&self, x: &[Scalar]) -> Mat {
        let mut out = Mat::zeros(self.dim, self.dim);
        for (i, c) in x.iter().enumerate() {
            if !c.is_zero() {
                out = &out + &self.action[i].scale(c);
            }
        }
        out
    }

    fn check_same_algebra(&self, other: &HModule) -> Result<()> {
        if same_algebra(&self.algebra, &other.algebra) {
            Ok(())
        } else {
            Err(Error::AlgebraMismatch)
        }
    }

    /// The submodule spanned by the columns of `basis` (assumed independent),
    /// with the action written in those coordinates.
    pub fn submodule(&self, basis: &Mat, label: impl Into<String>) -> Result<HModule> {
        let action = self
            .action
            .iter()
            .map(|a| {
                crate::exactla::solve_unique(basis, &(a * basis)).map_err(|e| match e {
                    crate::exactla::LinAlgError::NoSolution => {
                        Error::InvalidModule("subspace is not invariant".into())
                    }
                    e => Error::from_linalg(e, "submodule coordinates"),
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(HModule::trusted(self.algebra.clone(), action, label.into()))
    }

    pub fn direct_sum(&self, other: &HModule) -> Result<HModule> {
        self.check_same_algebra(other)?;
        let (a, b) = (self.dim, other.dim);
        let action = self
            .action
            .iter()
            .zip(other.action.iter())
            .map(|(x, y)| {
                let mut m = Mat::zeros(a + b, a + b);
                for i in 0..a {
                    for j in 0..a {
                        m[(i, j)] = x[(i, j)].clone();
                    }
                }
                for i in 0..b {
                    for j in 0..b {
                        m[(a + i, a + j)] = y[(i, j)].clone();
                    }
                }
                m
            })
            .collect();
        Ok(HModule::trusted(
            self.algebra.clone(),
            action,
            format!("{}⊕{}", self.label, other.label),
        ))
    }
}

/// An `H`-linear map; equivariance is checked on construction.
#[derive(Clone, PartialEq)]
pub struct HModMap {
    source: HModule,
    target: HModule,
    matrix: Mat,
}

impl fmt::Debug for HModMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "HModMap({} → {}) {:?}",
            self.source.label, self.target.label, self.matrix
        )
    }
}

impl HModMap {
    pub fn new(source: HModule, target: HModule, matrix: Mat) -> Result<Self> {
        source.check_same_algebra(&target)?;
        if matrix.shape() != (target.dim, source.dim) {
            return Err(Error::Shape(format!(
                "map {} → {} has matrix {}x{}",
                source.label,
                target.label,
                matrix.rows(),
                matrix.cols()
            )));
        }
        for (i, (a, b)) in source.action.iter().zip(target.action.iter()).enumerate() {
            if &matrix * a != b * &matrix {
                return Err(Error::NotEquivariant(format!(
                    "{} → {} fails to commute with b{i}",
                    source.label, target.label
                )));
            }
        }
        Ok(HModMap {
            source,
            target,
            matrix,
        })
    }

    pub fn identity(m: &HModule) -> Self {
        HModMap {
            source: m.clone(),
            target: m.clone(),
            matrix: Mat::identity(m.dim),
        }
    }

    pub fn source(&self) -> &HModule {
        &self.source
    }

    pub fn target(&self) -> &HModule {
        &self.target
    }

    pub fn matrix(&self) -> &Mat {
        &self.matrix
    }

    /// `other ∘ self`.
    pub fn then(&self, other: &HModMap) -> Result<HModMap> {
        if self.target != other.source {
            return Err(Error::Shape(format!(
                "cannot compose {} → {} with {} → {}",
                self.source.label, self.target.label, other.source.label, other.target.label
            )));
        }
        Ok(HModMap {
            source: self.source.clone(),
            target: other.target.clone(),
            matrix: &other.matrix * &self.matrix,
        })
    }

    pub fn tensor(&self, other: &HModMap) -> Result<HModMap> {
        Ok(HModMap {
            source: tensor(&self.source, &other.source)?,
            target: tensor(&self.target, &other.target)?,
            matrix: kron(&self.matrix, &other.matrix),
        })
    }
}

/// `P = H` acting on itself by left multiplication.
pub fn regular_module(h: &Arc<HopfAlgebra>) -> HModule {
    let action = (0..h.dim()).map(|i| h.left_mult(i).clone()).collect();
    HModule::trusted(h.clone(), action, "P".into())
}

/// The unit object: `k` with `h` acting by `ε(h)`.
pub fn trivial_module(h: &Arc<HopfAlgebra>) -> HModule {
    let action = h
        .counit()
        .iter()
        .map(|e| Mat::from_vec(1, 1, vec![e.clone()]))
        .collect();
    HModule::trusted(h.clone(), action, "1".into())
}

pub fn tensor(m: &HModule, n: &HModule) -> Result<HModule> {
    m.check_same_algebra(n)?;
    let h = &m.algebra;
    let action = (0..h.dim())
        .map(|i| {
            let mut out = Mat::zeros(m.dim * n.dim, m.dim * n.dim);
            for (j, k, c) in h.comult(i) {
                out = &out + &kron(&m.action[*j], &n.action[*k]).scale(c);
            }
            out
        })
        .collect();
    Ok(HModule::trusted(
        h.clone(),
        action,
        format!("({}⊗{})", m.label, n.label),
    ))
}

pub fn dual(m: &HModule, side: DualSide) -> HModule {
    let h = &m.algebra;
    let twist = match side {
        DualSide::Right => h.antipode(),
        DualSide::Left => h.antipode_inverse(),
    };
    let action = (0..h.dim())
        .map(|i| m.act(&twist.column(i)).transpose())
        .collect();
    let label = match side {
        DualSide::Right => format!("{}*", m.label),
        DualSide::Left => format!("*{}", m.label),
    };
    HModule::trusted(h.clone(), action, label)
}

/// Pairing row vector `Σ eⁱ ⊗ eᵢ ↦ 1` on a `d²`-dimensional tensor square.
fn pairing_row(d: usize) -> Mat {
    let mut m = Mat::zeros(1, d * d);
    for i in 0..d {
        m[(0, i * d + i)] = Scalar::one();
    }
    m
}

/// `ev: X* ⊗ X → 1` for the right dual, `ev: X ⊗ *X → 1` for the left.
pub fn ev(m: &HModule, side: DualSide) -> Result<HModMap> {
    let d = dual(m, side);
    let source = match side {
        DualSide::Right => tensor(&d, m)?,
        DualSide::Left => tensor(m, &d)?,
    };
    HModMap::new(source, trivial_module(&m.algebra), pairing_row(m.dim))
}

/// `coev: 1 → X ⊗ X*` for the right dual, `coev: 1 → *X ⊗ X` for the left.
pub fn coev(m: &HModule, side: DualSide) -> Result<HModMap> {
    let d = dual(m, side);
    let target = match side {
        DualSide::Right => tensor(m, &d)?,
        DualSide::Left => tensor(&d, m)?,
    };
    HModMap::new(
        trivial_module(&m.algebra),
        target,
        pairing_row(m.dim).transpose(),
    )
}

/// Evaluation pairing with a deliberately chosen side, without the
/// matching-side convention. Used to exhibit the consistency guard.
pub fn ev_with_dual(m: &HModule, dual_side: DualSide) -> Result<HModMap> {
    let d = dual(m, dual_side);
    HModMap::new(
        tensor(&d, m)?,
        trivial_module(&m.algebra),
        pairing_row(m.dim),
    )
}

/// Basis of `Hom_H(M, N)`, obtained by imposing `ρ_N(b) F = F ρ_M(b)` one
/// basis element at a time on the running kernel.
pub fn hom_basis(m: &HModule, n: &HModule) -> Result<Vec<HModMap>> {
    m.check_same_algebra(n)?;
    let (dm, dn) = (m.dim, n.dim);
    let size = dm * dn;
    // columns: current kernel, as flattened dn x dm matrices
    let mut kernel: Vec<Vector> = (0..size)
        .map(|i| crate::exactla::unit_vector(size, i))
        .collect();
    for (a_m, a_n) in m.action.iter().zip(n.action.iter()) {
        if kernel.is_empty() {
            break;
        }
        if a_m.is_identity() && a_n.is_identity() {
            continue;
        }
        let images: Vec<Vector> = kernel
            .iter()
            .map(|v| {
                let f = Mat::unflatten(v, dn, dm);
                (&(a_n * &f) - &(&f * a_m)).flatten()
            })
            .collect();
        let constraint = Mat::from_columns(size, &images);
        let coeffs = kernel_basis(&constraint);
        let basis = Mat::from_columns(size, &kernel);
        kernel = coeffs.iter().map(|c| basis.mul_vec(c)).collect();
    }
    Ok(kernel
        .iter()
        .map(|v| HModMap {
            source: m.clone(),
            target: n.clone(),
            matrix: Mat::unflatten(v, dn, dm),
        })
        .collect())
}

/// Basis of `Hom_H(P, M)` for the regular module `P`: the maps
/// `h ↦ h·mᵢ` for the standard basis `mᵢ` of `M` (`P` is free of rank one).
pub fn hom_from_regular(m: &HModule) -> Vec<HModMap> {
    let h = &m.algebra;
    let p = regular_module(h);
    (0..m.dim)
        .map(|i| {
            let cols: Vec<Vector> = (0..h.dim()).map(|j| m.action[j].column(i)).collect();
            HModMap {
                source: p.clone(),
                target: m.clone(),
                matrix: Mat::from_columns(m.dim, &cols),
            }
        })
        .collect()
}

/// `hom(X, Y) = Y ⊗ X*`.
pub fn internal_hom(x: &HModule, y: &HModule) -> Result<HModule> {
    tensor(y, &dual(x, DualSide::Right))
}

/// Unit constraint `1 ⊗ M → M` (identity on coordinates).
pub fn left_unitor(m: &HModule) -> Result<HModMap> {
    HModMap::new(
        tensor(&trivial_module(&m.algebra), m)?,
        m.clone(),
        Mat::identity(m.dim),
    )
}

/// Unit constraint `M ⊗ 1 → M`.
pub fn right_unitor(m: &HModule) -> Result<HModMap> {
    HModMap::new(
        tensor(m, &trivial_module(&m.algebra))?,
        m.clone(),
        Mat::identity(m.dim),
    )
}

/// `φ: Hom(Z, Y ⊗ X*) → Hom(Z ⊗ X, Y)`, `f ↦ (id_Y ⊗ ev_X)(f ⊗ id_X)`.
pub fn phi(z: &HModule, x: &HModule, y: &HModule, f: &HModMap) -> Result<HModMap> {
    let hom = internal_hom(x, y)?;
    if f.source != *z || f.target != hom {
        return Err(Error::Shape(format!(
            "phi expects a map {} → {}, got {} → {}",
            z.label, hom.label, f.source.label, f.target.label
        )));
    }
    let m =
        &kron(&Mat::identity(y.dim), &pairing_row(x.dim)) * &kron(&f.matrix, &Mat::identity(x.dim));
    HModMap::new(tensor(z, x)?, y.clone(), m)
}

/// `ψ: Hom(Z ⊗ X, Y) → Hom(Z, Y ⊗ X*)`, `g ↦ (g ⊗ id_{X*})(id_Z ⊗ coev_X)`.
pub fn psi(z: &HModule, x: &HModule, y: &HModule, g: &HModMap) -> Result<HModMap> {
    let zx = tensor(z, x)?;
    if g.source != zx || g.target != *y {
        return Err(Error::Shape(format!(
            "psi expects a map {} → {}, got {} → {}",
            zx.label, y.label, g.source.label, g.target.label
        )));
    }
    let m = &kron(&g.matrix, &Mat::identity(x.dim))
        * &kron(&Mat::identity(z.dim), &pairing_row(x.dim).transpose());
    HModMap::new(z.clone(), internal_hom(x, y)?, m)
}

/// `ev^M_{M,N}: hom(M, N) ⊗ M → N`, i.e. `φ(id)`.
pub fn ev_internal(m: &HModule, n: &HModule) -> Result<HModMap> {
    let hom = internal_hom(m, n)?;
    phi(&hom, m, n, &HModMap::identity(&hom))
}

/// `coev^M_M: 1 → hom(M, M)`, i.e. `ψ(id_M)` up to the unit constraint.
pub fn coev_internal(m: &HModule) -> Result<HModMap> {
    let one = trivial_module(&m.algebra);
    let lu = left_unitor(m)?;
    psi(&one, m, m, &lu)
}

/// `comp: hom(M, M) ⊗ hom(M, M) → hom(M, M)`; under the operator reading,
/// `T ⊗ S ↦ T ∘ S` (apply `S` first).
pub fn comp_map(m: &HModule) -> Result<HModMap> {
    let hom = internal_hom(m, m)?;
    let d = m.dim;
    let matrix = kron(&kron(&Mat::identity(d), &pairing_row(d)), &Mat::identity(d));
    HModMap::new(tensor(&hom, &hom)?, hom, matrix)
}

/// Canonical `(X ⊗ Y)* → Y* ⊗ X*`, `e^{(i,j)} ↦ y^j ⊗ x^i`.
pub fn dual_tensor_swap(x: &HModule, y: &HModule) -> Result<HModMap> {
    let (dx, dy) = (x.dim, y.dim);
    let mut m = Mat::zeros(dx * dy, dx * dy);
    for i in 0..dx {
        for j in 0..dy {
            m[(j * dx + i, i * dy + j)] = Scalar::one();
        }
    }
    HModMap::new(
        dual(&tensor(x, y)?, DualSide::Right),
        tensor(&dual(y, DualSide::Right), &dual(x, DualSide::Right))?,
        m,
    )
}

/// `𝔞: hom(M, X ⊗ N) → X ⊗ hom(M, N)`, the rebracketing
/// `(X ⊗ N) ⊗ M* → X ⊗ (N ⊗ M*)`.
pub fn frak_a(x: &HModule, m: &HModule, n: &HModule) -> Result<HModMap> {
    let source = internal_hom(m, &tensor(x, n)?)?;
    let target = tensor(x, &internal_hom(m, n)?)?;
    let d = source.dim;
    HModMap::new(source, target, Mat::identity(d))
}

/// `𝔟: hom(X ⊗ M, N) ⊗ X → hom(M, N)`, `(id ⊗ ev_X)(𝔟¹ ⊗ id_X)` with
/// `𝔟¹ = id_N ⊗ ((X ⊗ M)* ≅ M* ⊗ X*)`.
pub fn frak_b(x: &HModule, m: &HModule, n: &HModule) -> Result<HModMap> {
    let swap = dual_tensor_swap(x, m)?;
    let b1 = kron(&Mat::identity(n.dim), swap.matrix());
    let evx = ev(x, DualSide::Right)?;
    let matrix =
        &kron(&Mat::identity(n.dim * m.dim), evx.matrix()) * &kron(&b1, &Mat::identity(x.dim));
    let source = tensor(&internal_hom(&tensor(x, m)?, n)?, x)?;
    HModMap::new(source, internal_hom(m, n)?, matrix)
}

/// `β^D_{M,N}: (N ⊗ D) ⊗ M* → N ⊗ (M ⊗ *D)*`, the rebracketing followed by
/// `id_N ⊗ φ⁻¹_{M,*D}` with `(*D)* = D` on coordinates.
pub fn prebalancing(d: &HModule, m: &HModule, n: &HModule) -> Result<HModMap> {
    let source = internal_hom(m, &tensor(n, d)?)?;
    let left_d = dual(d, DualSide::Left);
    let target = tensor(n, &dual(&tensor(m, &left_d)?, DualSide::Right))?;
    let (dd, dm) = (d.dim, m.dim);
    let mut swap_inv = Mat::zeros(dd * dm, dd * dm);
    for b in 0..dd {
        for j in 0..dm {
            swap_inv[(j * dd + b, b * dm + j)] = Scalar::one();
        }
    }
    HModMap::new(source, target, kron(&Mat::identity(n.dim), &swap_inv))
}

/// Both sides of the compatibility between the Hom-functor prebalancing and
/// `φ` at the identity functor, for `f: X → hom(M, N ⊗ D)`:
///
/// * left: `(id_N ⊗ ev_D)(φ(f) ⊗ id_{*D})`, a map `X ⊗ M ⊗ *D → N`
/// * right: `φ(β^D_{M,N} ∘ f)`, a map `X ⊗ (M ⊗ *D) → N`
pub fn prebalancing_phi_sides(
    x: &HModule,
    d: &HModule,
    m: &HModule,
    n: &HModule,
    f: &HModMap,
) -> Result<(Mat, Mat)> {
    let nd = tensor(n, d)?;
    let g = phi(x, m, &nd, f)?;
    let ev_d = ev(d, DualSide::Left)?;
    let left =
        &kron(&Mat::identity(n.dim), ev_d.matrix()) * &kron(g.matrix(), &Mat::identity(d.dim));
    let beta = prebalancing(d, m, n)?;
    let bf = f.then(&beta)?;
    let m_ld = tensor(m, &dual(d, DualSide::Left))?;
    // β∘f lands in N ⊗ (M ⊗ *D)* = hom(M ⊗ *D, N)
    let bf = HModMap::new(x.clone(), internal_hom(&m_ld, n)?, bf.matrix.clone())?;
    let right = phi(x, &m_ld, n, &bf)?;
    Ok((left, right.matrix.clone()))
}

/// `hom(M, f) = f ⊗ id_{M*}: hom(M, N) → hom(M, N')`.
pub fn hom_post(m: &HModule, f: &HModMap) -> Result<HModMap> {
    HModMap::new(
        internal_hom(m, &f.source)?,
        internal_hom(m, &f.target)?,
        kron(&f.matrix, &Mat::identity(m.dim)),
    )
}

/// `hom(g, N) = id_N ⊗ g*: hom(M', N) → hom(M, N)` for `g: M → M'`.
pub fn hom_pre(g: &HModMap, n: &HModule) -> Result<HModMap> {
    HModMap::new(
        internal_hom(&g.target, n)?,
        internal_hom(&g.source, n)?,
        kron(&Mat::identity(n.dim), &g.matrix.transpose()),
    )
}

/// Restriction of a `Q`-module along `p: H → Q`.
pub fn pullback(p: &HopfMap, m: &HModule) -> Result<HModule> {
    if !same_algebra(p.target(), &m.algebra) {
        return Err(Error::AlgebraMismatch);
    }
    let h = p.source();
    let action = (0..h.dim()).map(|i| m.act(&p.matrix().column(i))).collect();
    Ok(HModule::trusted(
        h.clone(),
        action,
        format!("π^*{}", m.label),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactla::{int, unit_vector};
    use crate::group::Group;
    use crate::hopf::{group_algebra, quotient_by_normal_subgroup, sweedler};

    fn c2() -> Arc<HopfAlgebra> {
        Arc::new(group_algebra(&Group::cyclic(2)).unwrap())
    }

    fn s3() -> Arc<HopfAlgebra> {
        Arc::new(group_algebra(&Group::symmetric3()).unwrap())
    }

    fn sw() -> Arc<HopfAlgebra> {
        Arc::new(sweedler())
    }

    #[test]
    fn regular_module_of_c2_swaps() {
        let p = regular_module(&c2());
        assert_eq!(p.dim(), 2);
        assert_eq!(p.action()[1], Mat::from_ints(2, 2, &[0, 1, 1, 0]));
    }

    #[test]
    fn sweedler_regular_x_squares_to_zero() {
        let h = sw();
        let p = regular_module(&h);
        let x = &p.action()[2];
        assert!(!x.is_zero());
        assert!((x * x).is_zero());
        // oracle: left multiplication table, x·1 = x, x·g = −gx
        assert_eq!(x.column(0), unit_vector(4, 2));
        assert_eq!(x.column(1), vec![int(0), int(0), int(0), int(-1)]);
    }

    #[test]
    fn regular_endomorphisms_have_dimension_dim_h() {
        for h in [c2(), s3(), sw()] {
            let p = regular_module(&h);
            assert_eq!(hom_basis(&p, &p).unwrap().len(), h.dim());
        }
    }

    #[test]
    fn trivial_module_behaviour() {
        let h = sw();
        let one = trivial_module(&h);
        for (i, a) in one.action().iter().enumerate() {
            assert_eq!(a[(0, 0)], h.counit()[i]);
        }
        let p = regular_module(&h);
        let t = tensor(&one, &p).unwrap();
        assert_eq!(t.action(), p.action());
        assert_eq!(dual(&one, DualSide::Right).action(), one.action());
        assert_eq!(dual(&one, DualSide::Left).action(), one.action());
    }

    #[test]
    fn group_tensor_is_diagonal() {
        let h = s3();
        let p = regular_module(&h);
        let pp = tensor(&p, &p).unwrap();
        assert_eq!(pp.dim(), 36);
        for g in 0..6 {
            assert_eq!(pp.action()[g], kron(&p.action()[g], &p.action()[g]));
        }
    }

    #[test]
    fn group_dual_uses_inverse() {
        let g = Group::symmetric3();
        let h = s3();
        let p = regular_module(&h);
        let d = dual(&p, DualSide::Right);
        for a in 0..6 {
            assert_eq!(d.action()[a], p.action()[g.inverse(a)].transpose());
        }
        let dd = dual(&d, DualSide::Right);
        assert!(HModMap::new(p.clone(), dd, Mat::identity(6)).is_ok());
    }

    #[test]
    fn sweedler_double_dual_is_not_identity_on_coordinates() {
        let h = sw();
        let p = regular_module(&h);
        let dd = dual(&dual(&p, DualSide::Right), DualSide::Right);
        // ρ**(x) = ρ(S²x) = −ρ(x)
        assert_eq!(dd.action()[2], -&p.action()[2]);
        assert!(matches!(
            HModMap::new(p, dd, Mat::identity(4)),
            Err(Error::NotEquivariant(_))
        ));
    }

    #[test]
    fn zigzag_identities() {
        for h in [c2(), s3(), sw()] {
            let p = regular_module(&h);
            for side in [DualSide::Right, DualSide::Left] {
                let e = ev(&p, side).unwrap();
                let c = coev(&p, side).unwrap();
                let d = p.dim();
                let id = Mat::identity(d);
                let zig = match side {
                    // M → M⊗M*⊗M → M
                    DualSide::Right => &kron(&id, e.matrix()) * &kron(c.matrix(), &id),
                    // M → M⊗*M⊗M → M
                    DualSide::Left => &kron(e.matrix(), &id) * &kron(&id, c.matrix()),
                };
                assert!(zig.is_identity(), "{side:?} {h:?}");
            }
        }
    }

    #[test]
    fn ev_coev_trace_is_dimension() {
        let p = regular_module(&s3());
        let e = ev(&p, DualSide::Right).unwrap();
        let c = coev(&p, DualSide::Right).unwrap();
        // coev lands in M⊗M*, ev reads M*⊗M; the trace pairing is symmetric
        let t = (e.matrix() * c.matrix())[(0, 0)].clone();
        assert_eq!(t, int(6));
        let one = trivial_module(&s3());
        assert_eq!(
            coev(&one, DualSide::Right).unwrap().matrix(),
            &Mat::identity(1)
        );
    }

    #[test]
    fn mismatched_side_pairing_is_rejected() {
        let p = regular_module(&sw());
        assert!(ev_with_dual(&p, DualSide::Right).is_ok());
        assert!(matches!(
            ev_with_dual(&p, DualSide::Left),
            Err(Error::NotEquivariant(_))
        ));
    }

    #[test]
    fn hom_examples() {
        let h = c2();
        let one = trivial_module(&h);
        assert_eq!(hom_basis(&one, &one).unwrap().len(), 1);
        let p = regular_module(&h);
        let inv = hom_basis(&one, &p).unwrap();
        assert_eq!(inv.len(), 1);
        let v = inv[0].matrix().column(0);
        assert_eq!(v[0], v[1]);
    }

    #[test]
    fn hom_from_regular_matches_general_hom() {
        let h = sw();
        let p = regular_module(&h);
        let m = tensor(&p, &dual(&p, DualSide::Left)).unwrap();
        let general: Vec<Vector> = hom_basis(&p, &m)
            .unwrap()
            .iter()
            .map(|f| f.matrix().flatten())
            .collect();
        let free: Vec<Vector> = hom_from_regular(&m)
            .iter()
            .map(|f| f.matrix().flatten())
            .collect();
        assert!(crate::exactla::subspace_equal(&general, &free));
        for f in hom_from_regular(&m) {
            assert!(
                HModMap::new(f.source().clone(), f.target().clone(), f.matrix().clone()).is_ok()
            );
        }
    }

    #[test]
    fn internal_hom_examples() {
        let h = s3();
        let one = trivial_module(&h);
        let p = regular_module(&h);
        assert_eq!(internal_hom(&one, &p).unwrap().action(), p.action());
        let ih = internal_hom(&p, &p).unwrap();
        assert_eq!(ih.dim(), 36);
        assert_eq!(
            hom_basis(&one, &ih).unwrap().len(),
            hom_basis(&p, &p).unwrap().len()
        );
    }

    #[test]
    fn pullback_examples() {
        let g = Group::symmetric3();
        let a3 = g.parse_subset("{e,(123),(132)}").unwrap();
        let p = quotient_by_normal_subgroup(&g, &a3).unwrap();
        let q_reg = regular_module(p.target());
        let pulled = pullback(&p, &q_reg).unwrap();
        assert_eq!(pulled.dim(), 2);
        for x in 0..6 {
            let expected = if a3.contains(&x) {
                Mat::identity(2)
            } else {
                Mat::from_ints(2, 2, &[0, 1, 1, 0])
            };
            assert_eq!(pulled.action()[x], expected);
        }
        let h = p.source().clone();
        let id = HopfMap::identity(h.clone());
        let reg = regular_module(&h);
        assert_eq!(pullback(&id, &reg).unwrap().action(), reg.action());
        let eps = HopfMap::counit(h.clone());
        let triv = trivial_module(eps.target());
        assert_eq!(
            pullback(&eps, &triv).unwrap().action(),
            trivial_module(&h).action()
        );
    }
}
