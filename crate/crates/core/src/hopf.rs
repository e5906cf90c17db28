//! Finite-dimensional Hopf algebras by structure constants.
//!
//! Basis elements are `b_0, .., b_{n-1}`. Multiplication is dense:
//! `b_i · b_j = Σ_k mult[i][j][k] b_k`. Comultiplication is stored sparsely
//! as triples `(j, k, c)` meaning `Δ(b_i) ∋ c · b_j ⊗ b_k`. The antipode is
//! a matrix whose column `i` holds the coordinates of `S(b_i)`.

use std::fmt;
use std::sync::Arc;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exactla::{int, kernel_basis, zero_vector, Mat, Scalar, Vector};
use crate::group::Group;

/// Raw structure constants, not yet validated.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HopfData {
    pub dim: usize,
    /// Dense `n³` array, index `(i * n + j) * n + k`.
    pub mult: Vec<Scalar>,
    pub unit: Vector,
    pub comult: Vec<Vec<(usize, usize, Scalar)>>,
    pub counit: Vector,
    pub antipode: Mat,
    pub basis_names: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AxiomCheck {
    pub name: &'static str,
    pub pass: bool,
    pub detail: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct AxiomReport {
    pub checks: Vec<AxiomCheck>,
}

impl AxiomReport {
    pub fn all_pass(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    pub fn failing(&self) -> Vec<&'static str> {
        self.checks
            .iter()
            .filter(|c| !c.pass)
            .map(|c| c.name)
            .collect()
    }

    pub fn get(&self, name: &str) -> Option<&AxiomCheck> {
        self.checks.iter().find(|c| c.name == name)
    }

    fn push(&mut self, name: &'static str, failure: Option<String>) {
        self.checks.push(AxiomCheck {
            name,
            pass: failure.is_none(),
            detail: failure,
        });
    }
}

impl fmt::Display for AxiomReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.checks {
            let status = if c.pass { "pass" } else { "FAIL" };
            write!(f, "{:<22} {status}", c.name)?;
            if let Some(d) = &c.detail {
                write!(f, "  ({d})")?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

impl HopfData {
    fn m(&self, i: usize, j: usize, k: usize) -> &Scalar {
        &self.mult[(i * self.dim + j) * self.dim + k]
    }

    fn mul(&self, x: &[Scalar], y: &[Scalar]) -> Vector {
        let n = self.dim;
        let mut out = zero_vector(n);
        for (i, a) in x.iter().enumerate().filter(|(_, a)| !a.is_zero()) {
            for (j, b) in y.iter().enumerate().filter(|(_, b)| !b.is_zero()) {
                let ab = a * b;
                for (k, o) in out.iter_mut().enumerate() {
                    let c = self.m(i, j, k);
                    if !c.is_zero() {
                        *o += &ab * c;
                    }
                }
            }
        }
        out
    }

    fn basis(&self, i: usize) -> Vector {
        let mut v = zero_vector(self.dim);
        v[i] = Scalar::one();
        v
    }

    /// `Δ(x)` as a dense vector of `H ⊗ H`.
    fn comult_vec(&self, x: &[Scalar]) -> Vector {
        let n = self.dim;
        let mut out = zero_vector(n * n);
        for (i, a) in x.iter().enumerate().filter(|(_, a)| !a.is_zero()) {
            for (j, k, c) in &self.comult[i] {
                out[j * n + k] += a * c;
            }
        }
        out
    }

    /// Product in the algebra `H ⊗ H`.
    fn mul_tensor(&self, x: &[Scalar], y: &[Scalar]) -> Vector {
        let n = self.dim;
        let mut out = zero_vector(n * n);
        for (p, a) in x.iter().enumerate().filter(|(_, a)| !a.is_zero()) {
            for (q, b) in y.iter().enumerate().filter(|(_, b)| !b.is_zero()) {
                let left = self.mul(&self.basis(p / n), &self.basis(q / n));
                let right = self.mul(&self.basis(p % n), &self.basis(q % n));
                let ab = a * b;
                for (k, l) in left.iter().enumerate().filter(|(_, l)| !l.is_zero()) {
                    for (m, r) in right.iter().enumerate().filter(|(_, r)| !r.is_zero()) {
                        out[k * n + m] += &ab * l * r;
                    }
                }
            }
        }
        out
    }

    fn counit_of(&self, x: &[Scalar]) -> Scalar {
        x.iter()
            .zip(&self.counit)
            .filter(|(a, e)| !a.is_zero() && !e.is_zero())
            .map(|(a, e)| a * e)
            .sum()
    }

    fn shape_problem(&self) -> Option<String> {
        let n = self.dim;
        if n == 0 {
            return Some("dimension 0".into());
        }
        if self.mult.len() != n * n * n {
            return Some(format!(
                "mult has {} entries, expected {}",
                self.mult.len(),
                n * n * n
            ));
        }
        if self.unit.len() != n || self.counit.len() != n {
            return Some("unit/counit length differs from dim".into());
        }
        if self.comult.len() != n {
            return Some("comult must list one entry per basis element".into());
        }
        if self
            .comult
            .iter()
            .flatten()
            .any(|(j, k, _)| *j >= n || *k >= n)
        {
            return Some("comult index out of range".into());
        }
        if self.antipode.shape() != (n, n) {
            return Some("antipode must be n x n".into());
        }
        if !self.basis_names.is_empty() && self.basis_names.len() != n {
            return Some("basis_names length differs from dim".into());
        }
        None
    }
}

/// Verifies every Hopf algebra axiom exactly and reports each one.
pub fn check_axioms(h: &HopfData) -> AxiomReport {
    let mut report = AxiomReport::default();
    if let Some(problem) = h.shape_problem() {
        report.push("shape", Some(problem));
        return report;
    }
    report.push("shape", None);
    let n = h.dim;
    let e = |i: usize| h.basis(i);

    // associativity
    let mut fail = None;
    'assoc: for i in 0..n {
        for j in 0..n {
            let ij = h.mul(&e(i), &e(j));
            for k in 0..n {
                let jk = h.mul(&e(j), &e(k));
                if h.mul(&ij, &e(k)) != h.mul(&e(i), &jk) {
                    fail = Some(format!("(b{i} b{j}) b{k} != b{i} (b{j} b{k})"));
                    break 'assoc;
                }
            }
        }
    }
    report.push("associativity", fail);

    let fail = (0..n)
        .find(|&i| h.mul(&h.unit, &e(i)) != e(i) || h.mul(&e(i), &h.unit) != e(i))
        .map(|i| format!("unit fails on b{i}"));
    report.push("unit", fail);

    // coassociativity, as dense vectors of H⊗H⊗H
    let fail = (0..n)
        .find(|&i| {
            let mut left = zero_vector(n * n * n);
            let mut right = zero_vector(n * n * n);
            for (j, k, c) in &h.comult[i] {
                for (a, b, d) in &h.comult[*j] {
                    left[(a * n + b) * n + k] += c * d;
                }
                for (a, b, d) in &h.comult[*k] {
                    right[(j * n + a) * n + b] += c * d;
                }
            }
            left != right
        })
        .map(|i| format!("coassociativity fails on b{i}"));
    report.push("coassociativity", fail);

    let fail = (0..n)
        .find(|&i| {
            let mut left = zero_vector(n);
            let mut right = zero_vector(n);
            for (j, k, c) in &h.comult[i] {
                left[*k] += c * &h.counit[*j];
                right[*j] += c * &h.counit[*k];
            }
            left != e(i) || right != e(i)
        })
        .map(|i| format!("counit law fails on b{i}"));
    report.push("counit", fail);

    let mut fail = None;
    let unit_unit: Vector = {
        let mut t = zero_vector(n * n);
        for (a, x) in h.unit.iter().enumerate() {
            for (b, y) in h.unit.iter().enumerate() {
                t[a * n + b] = x * y;
            }
        }
        t
    };
    if h.comult_vec(&h.unit) != unit_unit {
        fail = Some("Δ(1) != 1⊗1".to_string());
    }
    'delta: for i in 0..n {
        for j in 0..n {
            let lhs = h.comult_vec(&h.mul(&e(i), &e(j)));
            let rhs = h.mul_tensor(&h.comult_vec(&e(i)), &h.comult_vec(&e(j)));
            if lhs != rhs {
                fail = Some(format!("Δ(b{i} b{j}) != Δ(b{i}) Δ(b{j})"));
                break 'delta;
            }
        }
    }
    report.push("comult_multiplicative", fail);

    let mut fail = None;
    if !h.counit_of(&h.unit).is_one() {
        fail = Some("ε(1) != 1".to_string());
    }
    'eps: for i in 0..n {
        for j in 0..n {
            if h.counit_of(&h.mul(&e(i), &e(j))) != &h.counit[i] * &h.counit[j] {
                fail = Some(format!("ε(b{i} b{j}) != ε(b{i}) ε(b{j})"));
                break 'eps;
            }
        }
    }
    report.push("counit_multiplicative", fail);

    let fail = (0..n)
        .find(|&i| {
            let mut left = zero_vector(n);
            let mut right = zero_vector(n);
            for (j, k, c) in &h.comult[i] {
                let sj = h.antipode.column(*j);
                let sk = h.antipode.column(*k);
                for (x, y) in left.iter_mut().zip(h.mul(&sj, &e(*k))) {
                    *x += c * y;
                }
                for (x, y) in right.iter_mut().zip(h.mul(&e(*j), &sk)) {
                    *x += c * y;
                }
            }
            let target: Vector = h.unit.iter().map(|u| u * &h.counit[i]).collect();
            left != target || right != target
        })
        .map(|i| format!("antipode law fails on b{i}"));
    report.push("antipode", fail);

    let fail = (h.antipode.rank() != n).then(|| "antipode is singular".to_string());
    report.push("antipode_invertible", fail);
    report
}

/// A validated Hopf algebra.
#[derive(Clone)]
pub struct HopfAlgebra {
    name: String,
    data: HopfData,
    antipode_inv: Mat,
    left_mult: Vec<Mat>,
}

impl PartialEq for HopfAlgebra {
    fn eq(&self, other: &Self) -> bool {
        self.data == other.data
    }
}

impl Eq for HopfAlgebra {}

impl fmt::Debug for HopfAlgebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "HopfAlgebra({}, dim {})", self.name, self.data.dim)
    }
}

impl HopfAlgebra {
    /// Validates the structure constants; refuses data failing any axiom.
    pub fn new(name: impl Into<String>, mut data: HopfData) -> Result<Self> {
        let report = check_axioms(&data);
        if !report.all_pass() {
            return Err(Error::AxiomsFailed(report.failing().join(", ")));
        }
        let n = data.dim;
        if data.basis_names.is_empty() {
            data.basis_names = (0..n).map(|i| format!("b{i}")).collect();
        }
        let antipode_inv = data
            .antipode
            .inverse()
            .expect("antipode invertibility was checked");
        let left_mult = (0..n)
            .map(|i| Mat::from_fn(n, n, |k, j| data.m(i, j, k).clone()))
            .collect();
        Ok(HopfAlgebra {
            name: name.into(),
            data,
            antipode_inv,
            left_mult,
        })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn dim(&self) -> usize {
        self.data.dim
    }

    pub fn data(&self) -> &HopfData {
        &self.data
    }

    pub fn basis_names(&self) -> &[String] {
        &self.data.basis_names
    }

    pub fn check_axioms(&self) -> AxiomReport {
        check_axioms(&self.data)
    }

    pub fn mult_coeff(&self, i: usize, j: usize, k: usize) -> &Scalar {
        self.data.m(i, j, k)
    }

    pub fn unit(&self) -> &Vector {
        &self.data.unit
    }

    pub fn counit(&self) -> &Vector {
        &self.data.counit
    }

    pub fn comult(&self, i: usize) -> &[(usize, usize, Scalar)] {
        &self.data.comult[i]
    }

    pub fn antipode(&self) -> &Mat {
        &self.data.antipode
    }

    pub fn antipode_inverse(&self) -> &Mat {
        &self.antipode_inv
    }

    pub fn basis_vector(&self, i: usize) -> Vector {
        self.data.basis(i)
    }

    pub fn mul(&self, x: &[Scalar], y: &[Scalar]) -> Vector {
        self.data.mul(x, y)
    }

    pub fn comult_vec(&self, x: &[Scalar]) -> Vector {
        self.data.comult_vec(x)
    }

    pub fn counit_of(&self, x: &[Scalar]) -> Scalar {
        self.data.counit_of(x)
    }

    /// Matrix of left multiplication by `b_i` (the regular representation).
    pub fn left_mult(&self, i: usize) -> &Mat {
        &self.left_mult[i]
    }

    /// Matrix of left multiplication by an arbitrary element.
    pub fn left_mult_by(&self, x: &[Scalar]) -> Mat {
        let n = self.dim();
        let mut out = Mat::zeros(n, n);
        for (i, a) in x.iter().enumerate().filter(|(_, a)| !a.is_zero()) {
            out = &out + &self.left_mult[i].scale(a);
        }
        out
    }

    pub fn is_commutative(&self) -> bool {
        let n = self.dim();
        (0..n).all(|i| {
            (0..n).all(|j| (0..n).all(|k| self.mult_coeff(i, j, k) == self.mult_coeff(j, i, k)))
        })
    }

    pub fn is_cocommutative(&self) -> bool {
        let n = self.dim();
        (0..n).all(|i| {
            let d = self.comult_vec(&self.basis_vector(i));
            (0..n).all(|a| (0..n).all(|b| d[a * n + b] == d[b * n + a]))
        })
    }
}

/// `kG`: basis the group elements, `Δ(g) = g⊗g`, `ε(g) = 1`, `S(g) = g⁻¹`.
pub fn group_algebra(g: &Group) -> Result<HopfAlgebra> {
    let n = g.order();
    let mut mult = vec![Scalar::zero(); n * n * n];
    for a in 0..n {
        for b in 0..n {
            mult[(a * n + b) * n + g.mul(a, b)] = Scalar::one();
        }
    }
    let mut unit = zero_vector(n);
    unit[g.identity()] = Scalar::one();
    let comult = (0..n).map(|a| vec![(a, a, Scalar::one())]).collect();
    let mut antipode = Mat::zeros(n, n);
    for a in 0..n {
        antipode[(g.inverse(a), a)] = Scalar::one();
    }
    HopfAlgebra::new(
        format!("k[group of order {n}]"),
        HopfData {
            dim: n,
            mult,
            unit,
            comult,
            counit: vec![Scalar::one(); n],
            antipode,
            basis_names: g.names().to_vec(),
        },
    )
}

/// `k^G`, the dual of `kG`: delta functions with pointwise product and
/// `Δ(δ_g) = Σ_{ab=g} δ_a ⊗ δ_b`.
pub fn function_algebra(g: &Group) -> Result<HopfAlgebra> {
    let n = g.order();
    let mut mult = vec![Scalar::zero(); n * n * n];
    for a in 0..n {
        mult[(a * n + a) * n + a] = Scalar::one();
    }
    let mut comult = vec![Vec::new(); n];
    for a in 0..n {
        for b in 0..n {
            comult[g.mul(a, b)].push((a, b, Scalar::one()));
        }
    }
    let mut counit = zero_vector(n);
    counit[g.identity()] = Scalar::one();
    let mut antipode = Mat::zeros(n, n);
    for a in 0..n {
        antipode[(g.inverse(a), a)] = Scalar::one();
    }
    HopfAlgebra::new(
        format!("k^[group of order {n}]"),
        HopfData {
            dim: n,
            mult,
            unit: vec![Scalar::one(); n],
            comult,
            counit,
            antipode,
            basis_names: g.names().iter().map(|s| format!("d{s}")).collect(),
        },
    )
}

/// Sweedler's four-dimensional Hopf algebra on the basis `1, g, x, gx`.
pub fn sweedler() -> HopfAlgebra {
    let n = 4;
    // products of basis elements as (coefficient, index) or zero
    let table: [[Option<(i64, usize)>; 4]; 4] = [
        [Some((1, 0)), Some((1, 1)), Some((1, 2)), Some((1, 3))],
        [Some((1, 1)), Some((1, 0)), Some((1, 3)), Some((1, 2))],
        [Some((1, 2)), Some((-1, 3)), None, None],
        [Some((1, 3)), Some((-1, 2)), None, None],
    ];
    let mut mult = vec![Scalar::zero(); n * n * n];
    for (i, row) in table.iter().enumerate() {
        for (j, entry) in row.iter().enumerate() {
            if let Some((c, k)) = entry {
                mult[(i * n + j) * n + k] = int(*c);
            }
        }
    }
    let one = Scalar::one;
    let comult = vec![
        vec![(0, 0, one())],
        vec![(1, 1, one())],
        vec![(2, 0, one()), (1, 2, one())],
        vec![(3, 1, one()), (0, 3, one())],
    ];
    let antipode = Mat::from_ints(
        4,
        4,
        &[
            1, 0, 0, 0, //
            0, 1, 0, 0, //
            0, 0, 0, 1, //
            0, 0, -1, 0,
        ],
    );
    HopfAlgebra::new(
        "sweedler",
        HopfData {
            dim: n,
            mult,
            unit: vec![int(1), int(0), int(0), int(0)],
            comult,
            counit: vec![int(1), int(1), int(0), int(0)],
            antipode,
            basis_names: ["1", "g", "x", "gx"].map(String::from).to_vec(),
        },
    )
    .expect("Sweedler algebra satisfies the axioms")
}

/// The ground field as a one-dimensional Hopf algebra.
pub fn ground_field() -> HopfAlgebra {
    HopfAlgebra::new(
        "k",
        HopfData {
            dim: 1,
            mult: vec![Scalar::one()],
            unit: vec![Scalar::one()],
            comult: vec![vec![(0, 0, Scalar::one())]],
            counit: vec![Scalar::one()],
            antipode: Mat::identity(1),
            basis_names: vec!["1".into()],
        },
    )
    .expect("ground field is a Hopf algebra")
}

/// `H1 ⊗ H2` with componentwise structure; basis `(i, j)` has index
/// `i * dim H2 + j`.
pub fn tensor_hopf(h1: &HopfAlgebra, h2: &HopfAlgebra) -> HopfAlgebra {
    let (n1, n2) = (h1.dim(), h2.dim());
    let n = n1 * n2;
    let mut mult = vec![Scalar::zero(); n * n * n];
    for i in 0..n1 {
        for k in 0..n1 {
            for p in 0..n1 {
                let a = h1.mult_coeff(i, k, p);
                if a.is_zero() {
                    continue;
                }
                for j in 0..n2 {
                    for l in 0..n2 {
                        for q in 0..n2 {
                            let b = h2.mult_coeff(j, l, q);
                            if !b.is_zero() {
                                let x = i * n2 + j;
                                let y = k * n2 + l;
                                mult[(x * n + y) * n + p * n2 + q] = a * b;
                            }
                        }
                    }
                }
            }
        }
    }
    let unit = crate::exactla::kron(
        &Mat::column_matrix(h1.unit()),
        &Mat::column_matrix(h2.unit()),
    )
    .column(0);
    let counit = crate::exactla::kron(
        &Mat::column_matrix(h1.counit()),
        &Mat::column_matrix(h2.counit()),
    )
    .column(0);
    let mut comult = Vec::with_capacity(n);
    for i in 0..n1 {
        for j in 0..n2 {
            let mut terms = Vec::new();
            for (a1, a2, c) in h1.comult(i) {
                for (b1, b2, d) in h2.comult(j) {
                    terms.push((a1 * n2 + b1, a2 * n2 + b2, c * d));
                }
            }
            comult.push(terms);
        }
    }
    let antipode = crate::exactla::kron(h1.antipode(), h2.antipode());
    let basis_names = (0..n)
        .map(|x| format!("{}⊗{}", h1.basis_names()[x / n2], h2.basis_names()[x % n2]))
        .collect();
    HopfAlgebra::new(
        format!("{}⊗{}", h1.name(), h2.name()),
        HopfData {
            dim: n,
            mult,
            unit,
            comult,
            counit,
            antipode,
            basis_names,
        },
    )
    .expect("tensor product of Hopf algebras is a Hopf algebra")
}

/// A linear map between Hopf algebras preserving every structure map.
/// Column `c` of `matrix` holds the coordinates of the image of `b_c`.
#[derive(Debug, Clone)]
pub struct HopfMap {
    source: Arc<HopfAlgebra>,
    target: Arc<HopfAlgebra>,
    matrix: Mat,
}

impl HopfMap {
    pub fn new(source: Arc<HopfAlgebra>, target: Arc<HopfAlgebra>, matrix: Mat) -> Result<Self> {
        let (n, q) = (source.dim(), target.dim());
        if matrix.shape() != (q, n) {
            return Err(Error::Shape(format!(
                "Hopf map matrix is {}x{}, expected {q}x{n}",
                matrix.rows(),
                matrix.cols()
            )));
        }
        let p = |x: &[Scalar]| matrix.mul_vec(x);
        let e = |i: usize| source.basis_vector(i);
        if p(source.unit()) != *target.unit() {
            return Err(Error::NotAHopfMap("unit not preserved".into()));
        }
        for i in 0..n {
            for j in 0..n {
                if p(&source.mul(&e(i), &e(j))) != target.mul(&p(&e(i)), &p(&e(j))) {
                    return Err(Error::NotAHopfMap(format!(
                        "multiplication not preserved at (b{i}, b{j})"
                    )));
                }
            }
        }
        let pp = crate::exactla::kron(&matrix, &matrix);
        for i in 0..n {
            if pp.mul_vec(&source.comult_vec(&e(i))) != target.comult_vec(&p(&e(i))) {
                return Err(Error::NotAHopfMap(format!(
                    "comultiplication not preserved at b{i}"
                )));
            }
            if target.counit_of(&p(&e(i))) != source.counit()[i] {
                return Err(Error::NotAHopfMap(format!("counit not preserved at b{i}")));
            }
        }
        if &matrix * source.antipode() != target.antipode() * &matrix {
            return Err(Error::NotAHopfMap("antipode not preserved".into()));
        }
        Ok(HopfMap {
            source,
            target,
            matrix,
        })
    }

    pub fn identity(h: Arc<HopfAlgebra>) -> Self {
        let m = Mat::identity(h.dim());
        HopfMap::new(h.clone(), h, m).expect("identity is a Hopf map")
    }

    /// The counit `H → k`.
    pub fn counit(h: Arc<HopfAlgebra>) -> Self {
        let m = Mat::from_vec(1, h.dim(), h.counit().clone());
        HopfMap::new(h, Arc::new(ground_field()), m).expect("counit is a Hopf map")
    }

    pub fn source(&self) -> &Arc<HopfAlgebra> {
        &self.source
    }

    pub fn target(&self) -> &Arc<HopfAlgebra> {
        &self.target
    }

    pub fn matrix(&self) -> &Mat {
        &self.matrix
    }

    pub fn apply(&self, x: &[Scalar]) -> Vector {
        self.matrix.mul_vec(x)
    }

    pub fn is_surjective(&self) -> bool {
        self.matrix.rank() == self.target.dim()
    }

    pub fn ensure_surjective(&self) -> Result<()> {
        let rank = self.matrix.rank();
        if rank == self.target.dim() {
            Ok(())
        } else {
            Err(Error::NotSurjective {
                rank,
                target: self.target.dim(),
            })
        }
    }

    /// `q ∘ self`.
    pub fn then(&self, q: &HopfMap) -> Result<HopfMap> {
        if *self.target != *q.source {
            return Err(Error::AlgebraMismatch);
        }
        HopfMap::new(
            self.source.clone(),
            q.target.clone(),
            q.matrix() * &self.matrix,
        )
    }
}

/// `kG → k(G/N)`, `g ↦ gN`.
pub fn quotient_by_normal_subgroup(g: &Group, normal: &[usize]) -> Result<HopfMap> {
    let (quot, coset_of) = g.quotient(normal)?;
    let source = Arc::new(group_algebra(g)?);
    let target = Arc::new(group_algebra(&quot)?);
    let mut m = Mat::zeros(quot.order(), g.order());
    for (x, &c) in coset_of.iter().enumerate() {
        m[(c, x)] = Scalar::one();
    }
    HopfMap::new(source, target, m)
}

/// `id ⊗ ε : H1 ⊗ H2 → H1`.
pub fn projection_first_factor(h1: &Arc<HopfAlgebra>, h2: &HopfAlgebra) -> HopfMap {
    let source = Arc::new(tensor_hopf(h1, h2));
    let m = crate::exactla::kron(
        &Mat::identity(h1.dim()),
        &Mat::from_vec(1, h2.dim(), h2.counit().clone()),
    );
    HopfMap::new(source, h1.clone(), m).expect("first-factor projection is a Hopf map")
}

/// Restriction of functions `k^G → k^K` to a subgroup `K`.
pub fn function_restriction(g: &Group, subgroup: &[usize]) -> Result<HopfMap> {
    let (sub, embedding) = g.subgroup(subgroup)?;
    let source = Arc::new(function_algebra(g)?);
    let target = Arc::new(function_algebra(&sub)?);
    let mut m = Mat::zeros(sub.order(), g.order());
    for (i, &x) in embedding.iter().enumerate() {
        m[(i, x)] = Scalar::one();
    }
    HopfMap::new(source, target, m)
}

/// Basis of `{h : h₁ ⊗ π(h₂) = h ⊗ 1}`, the kernel of
/// `h ↦ (id ⊗ π)Δ(h) − h ⊗ 1_Q`.
pub fn coinvariants(p: &HopfMap) -> Vec<Vector> {
    let h = p.source();
    let (n, q) = (h.dim(), p.target().dim());
    let unit_q = p.target().unit();
    let mut c = Mat::zeros(n * q, n);
    for i in 0..n {
        for (j, k, coeff) in h.comult(i) {
            for r in 0..q {
                let pk = &p.matrix()[(r, *k)];
                if !pk.is_zero() {
                    c[(j * q + r, i)] += coeff * pk;
                }
            }
        }
        for r in 0..q {
            c[(i * q + r, i)] -= &unit_q[r];
        }
    }
    kernel_basis(&c)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactla::{subspace_contains, subspace_equal, unit_vector};

    #[test]
    fn builtins_pass_axioms() {
        for h in [
            group_algebra(&Group::cyclic(2)).unwrap(),
            group_algebra(&Group::symmetric3()).unwrap(),
            function_algebra(&Group::symmetric3()).unwrap(),
            sweedler(),
            ground_field(),
        ] {
            assert!(h.check_axioms().all_pass(), "{h:?}\n{}", h.check_axioms());
        }
    }

    #[test]
    fn corrupted_multiplication_fails_associativity() {
        let mut data = group_algebra(&Group::cyclic(3)).unwrap().data().clone();
        let n = 3;
        // b1·b1 = b1 instead of b2
        data.mult[(n + 1) * n + 2] = Scalar::zero();
        data.mult[(n + 1) * n + 1] = Scalar::one();
        let report = check_axioms(&data);
        assert!(!report.get("associativity").unwrap().pass);
        assert!(HopfAlgebra::new("bad", data).is_err());
    }

    #[test]
    fn c2_antipode_is_identity() {
        let h = group_algebra(&Group::cyclic(2)).unwrap();
        assert_eq!(h.dim(), 2);
        assert!(h.antipode().is_identity());
    }

    #[test]
    fn s3_antipode_is_inversion_permutation() {
        let g = Group::symmetric3();
        let h = group_algebra(&g).unwrap();
        for a in 0..6 {
            assert_eq!(h.antipode().column(a), unit_vector(6, g.inverse(a)));
        }
    }

    #[test]
    fn function_algebra_of_s3() {
        let h = function_algebra(&Group::symmetric3()).unwrap();
        assert!(h.is_commutative());
        assert!(!h.is_cocommutative());
        let e = Group::symmetric3().identity();
        assert_eq!(h.comult(e).len(), 6);
        let c2 = function_algebra(&Group::cyclic(2)).unwrap();
        assert!(c2.is_commutative() && c2.is_cocommutative());
    }

    #[test]
    fn sweedler_relations_by_hand() {
        let h = sweedler();
        let [one, g, x, gx] = [0, 1, 2, 3].map(|i| h.basis_vector(i));
        assert_eq!(h.mul(&g, &g), one);
        assert_eq!(h.mul(&x, &x), zero_vector(4));
        let xg = h.mul(&x, &g);
        let neg_gx: Vector = h.mul(&g, &x).iter().map(|c| -c).collect();
        assert_eq!(xg, neg_gx);
        assert_eq!(h.mul(&g, &x), gx);
        // S²(x) = −x
        let s2 = h.antipode() * h.antipode();
        assert_eq!(s2.mul_vec(&x), x.iter().map(|c| -c).collect::<Vector>());
        assert!(!s2.is_identity());
    }

    #[test]
    fn tensor_of_c2_is_klein_group_algebra() {
        let c2 = group_algebra(&Group::cyclic(2)).unwrap();
        let t = tensor_hopf(&c2, &c2);
        let k4 =
            group_algebra(&Group::direct_product(&Group::cyclic(2), &Group::cyclic(2))).unwrap();
        assert_eq!(t.dim(), 4);
        assert_eq!(t.data().mult, k4.data().mult);
        assert_eq!(t.data().comult, k4.data().comult);
        assert_eq!(t.antipode(), k4.antipode());
        assert!(tensor_hopf(&sweedler(), &c2).check_axioms().all_pass());
    }

    #[test]
    fn quotients_of_s3() {
        let g = Group::symmetric3();
        let a3 = g.parse_subset("{e,(123),(132)}").unwrap();
        let p = quotient_by_normal_subgroup(&g, &a3).unwrap();
        assert_eq!(p.target().dim(), 2);
        assert!(p.is_surjective());
        let iso = quotient_by_normal_subgroup(&g, &[g.identity()]).unwrap();
        assert_eq!(iso.matrix().rank(), 6);
        let all: Vec<usize> = (0..6).collect();
        let to_k = quotient_by_normal_subgroup(&g, &all).unwrap();
        assert_eq!(to_k.target().dim(), 1);
        let t = g.parse_subset("{e,(12)}").unwrap();
        assert!(matches!(
            quotient_by_normal_subgroup(&g, &t),
            Err(Error::NotNormal(_))
        ));
    }

    #[test]
    fn first_factor_projection() {
        let c2 = Arc::new(group_algebra(&Group::cyclic(2)).unwrap());
        let p = projection_first_factor(&c2, &c2);
        // (g, g) has index 3 and maps to g
        assert_eq!(p.apply(&unit_vector(4, 3)), unit_vector(2, 1));
        // unit inclusion h ↦ h ⊗ 1 followed by the projection is the identity
        let incl = crate::exactla::kron(&Mat::identity(2), &Mat::column_matrix(c2.unit()));
        assert!((p.matrix() * &incl).is_identity());
    }

    #[test]
    fn non_morphism_rejected() {
        let c2 = Arc::new(group_algebra(&Group::cyclic(2)).unwrap());
        let m = Mat::from_ints(2, 2, &[0, 1, 1, 0]);
        assert!(matches!(
            HopfMap::new(c2.clone(), c2, m),
            Err(Error::NotAHopfMap(_))
        ));
    }

    #[test]
    fn coinvariants_examples() {
        let sw = Arc::new(sweedler());
        assert_eq!(coinvariants(&HopfMap::counit(sw.clone())).len(), 4);
        let id = coinvariants(&HopfMap::identity(sw.clone()));
        assert!(subspace_equal(&id, &[unit_vector(4, 0)]));

        // oracle: evaluate (id⊗π)Δ on the basis by hand. π(g)=g, π(x)=0:
        // 1 ↦ 1⊗1, g ↦ g⊗g, x ↦ x⊗1, gx ↦ gx⊗g, so only 1 and x qualify
        let c2 = Arc::new(group_algebra(&Group::cyclic(2)).unwrap());
        let p = HopfMap::new(sw, c2, Mat::from_ints(2, 4, &[1, 0, 0, 0, 0, 1, 0, 0])).unwrap();
        let co = coinvariants(&p);
        assert!(subspace_equal(&co, &[unit_vector(4, 0), unit_vector(4, 2)]));

        // kS3 / A3: coefficient of g survives iff g ∈ A3
        let g = Group::symmetric3();
        let a3 = g.parse_subset("{e,(123),(132)}").unwrap();
        let p = quotient_by_normal_subgroup(&g, &a3).unwrap();
        let expected: Vec<Vector> = a3.iter().map(|&x| unit_vector(6, x)).collect();
        assert!(subspace_equal(&coinvariants(&p), &expected));
    }

    #[test]
    fn coinvariants_of_group_towers_are_nested() {
        let g = Group::symmetric3();
        let a3 = g.parse_subset("{e,(123),(132)}").unwrap();
        let fine = coinvariants(&quotient_by_normal_subgroup(&g, &[g.identity()]).unwrap());
        let mid = coinvariants(&quotient_by_normal_subgroup(&g, &a3).unwrap());
        let all: Vec<usize> = (0..6).collect();
        let coarse = coinvariants(&quotient_by_normal_subgroup(&g, &all).unwrap());
        assert_eq!((fine.len(), mid.len(), coarse.len()), (1, 3, 6));
        assert!(subspace_contains(&mid, &fine));
        assert!(subspace_contains(&coarse, &mid));
    }

    #[test]
    fn function_restriction_coinvariants() {
        let g = Group::symmetric3();
        let a3 = g.parse_subset("{e,(123),(132)}").unwrap();
        let p = function_restriction(&g, &a3).unwrap();
        assert_eq!(coinvariants(&p).len() * 3, 6);
    }
}
