//! The acceptance criteria over the builtin registry.

use std::sync::Arc;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::adjoint::{
    build_algebra, comparison_maps, is_algebra_map, verify_coinvariant_model_for, verify_deligne,
    CentralAlgebra,
};
use crate::builtins;
use crate::ends::{
    end_at_generator, factor_through, relative_end_with_depth, restriction_mono, EndObject,
};
use crate::error::{Error, Result};
use crate::exactla::{frac, rank_of, subspace_contains, subspace_equal, Mat, Vector};
use crate::hopf::{coinvariants, HopfAlgebra, HopfMap};
use crate::rep::{
    hom_basis, hom_from_regular, internal_hom, prebalancing_phi_sides, pullback, regular_module,
    tensor, trivial_module,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Suite {
    Fast,
    All,
}

#[derive(Debug, Clone, Copy, Default)]
pub struct Options {
    /// Negative control: identify coinvariants with right instead of left
    /// multiplication tensors.
    pub broken_convention: bool,
    pub validation_depth: Option<usize>,
}

#[derive(Debug, Clone)]
pub struct CriterionResult {
    pub id: u8,
    pub name: &'static str,
    pub pass: bool,
    pub detail: String,
    pub elapsed: Duration,
}

pub const CRITERIA: [(u8, &str); 11] = [
    (1, "coinvariant model"),
    (2, "dimension formula"),
    (3, "ordinary adjoint dimension"),
    (4, "algebra structure and commutativity"),
    (5, "comparison identity"),
    (6, "Deligne factorization"),
    (7, "nesting"),
    (8, "universal property"),
    (9, "degeneration"),
    (10, "prebalancing compatibility"),
    (11, "connectedness"),
];

const FAST_MAX_DIM: usize = 8;

/// Algebras shared between criteria, built once.
pub struct Catalog {
    suite: Suite,
    options: Options,
    pub ordinary: Vec<(String, Arc<HopfAlgebra>, Result<CentralAlgebra>)>,
    pub relative: Vec<(String, HopfMap, Result<CentralAlgebra>)>,
}

impl Catalog {
    pub fn build(suite: Suite, options: Options) -> Result<Self> {
        let depth = options
            .validation_depth
            .unwrap_or_else(crate::ends::validation_depth_from_env);
        let mut ordinary = Vec::new();
        for name in builtins::HOPF_NAMES {
            let h = builtins::hopf(name)?;
            if suite == Suite::Fast && h.dim() > FAST_MAX_DIM {
                continue;
            }
            let a = end_at_generator(&h).and_then(build_algebra);
            ordinary.push((name.to_string(), h, a));
        }
        let mut relative = Vec::new();
        for name in builtins::QUOTIENT_NAMES {
            let p = builtins::quotient(name)?;
            if suite == Suite::Fast && p.source().dim() > FAST_MAX_DIM {
                continue;
            }
            let a = relative_end_with_depth(p.source(), &p, depth).and_then(build_algebra);
            relative.push((name.to_string(), p, a));
        }
        Ok(Catalog {
            suite,
            options,
            ordinary,
            relative,
        })
    }

    fn relative_named(&self, name: &str) -> Result<(&HopfMap, &CentralAlgebra)> {
        let (_, p, a) = self
            .relative
            .iter()
            .find(|(n, _, _)| n == name)
            .ok_or_else(|| Error::Unknown(name.to_string()))?;
        Ok((p, a.as_ref().map_err(Clone::clone)?))
    }

    fn depth(&self) -> usize {
        self.options
            .validation_depth
            .unwrap_or_else(crate::ends::validation_depth_from_env)
    }
}

type Outcome = Result<(bool, String)>;

fn all_ok(failures: Vec<String>, summary: String) -> Outcome {
    if failures.is_empty() {
        Ok((true, summary))
    } else {
        Ok((false, failures.join("; ")))
    }
}

fn c1_coinvariants(cat: &Catalog) -> Outcome {
    let mut failures = Vec::new();
    for name in ["s3/A3", "c4/C2", "sweedler/c2"] {
        let (p, a) = cat.relative_named(name)?;
        let h = p.source();
        let model: Vec<Vector> = coinvariants(p)
            .iter()
            .map(|x| {
                let op = h.left_mult_by(x);
                if cat.options.broken_convention {
                    right_mult_by(h, x).flatten()
                } else {
                    op.flatten()
                }
            })
            .collect();
        if !subspace_equal(a.carrier().basis(), &model) {
            failures.push(format!("{name}: subspaces differ"));
            continue;
        }
        if let Err(e) = verify_coinvariant_model_for(a, h, p) {
            failures.push(format!("{name}: {e}"));
        }
    }
    all_ok(
        failures,
        "3 quotients: relative end = coinvariant tensors".into(),
    )
}

/// `y ↦ y·x` on the regular module.
fn right_mult_by(h: &HopfAlgebra, x: &[crate::exactla::Scalar]) -> Mat {
    let n = h.dim();
    let cols: Vec<Vector> = (0..n).map(|j| h.mul(&h.basis_vector(j), x)).collect();
    Mat::from_columns(n, &cols)
}

fn c2_dim_formula(cat: &Catalog) -> Outcome {
    let mut failures = Vec::new();
    let mut lines = Vec::new();
    for (name, p, a) in &cat.relative {
        match a {
            Ok(a) => {
                let (k, q, n) = (a.dim(), p.target().dim(), p.source().dim());
                lines.push(format!("{name}: {k}·{q}={n}"));
                if k * q != n {
                    failures.push(format!("{name}: {k}·{q} != {n}"));
                }
            }
            Err(e) => failures.push(format!("{name}: {e}")),
        }
    }
    all_ok(failures, lines.join(", "))
}

fn c3_ordinary_dim(cat: &Catalog) -> Outcome {
    let mut failures = Vec::new();
    for (name, h, a) in &cat.ordinary {
        match a {
            Ok(a) if a.dim() == h.dim() => {}
            Ok(a) => failures.push(format!("{name}: dim {} != {}", a.dim(), h.dim())),
            Err(e) => failures.push(format!("{name}: {e}")),
        }
    }
    all_ok(failures, format!("{} Hopf algebras", cat.ordinary.len()))
}

fn every_algebra(cat: &Catalog) -> impl Iterator<Item = (String, &Result<CentralAlgebra>)> {
    cat.ordinary
        .iter()
        .map(|(n, _, a)| (format!("A({n})"), a))
        .chain(cat.relative.iter().map(|(n, _, a)| (format!("A({n})"), a)))
}

fn c4_structure(cat: &Catalog) -> Outcome {
    let mut failures = Vec::new();
    let mut count = 0;
    for (name, a) in every_algebra(cat) {
        count += 1;
        match a {
            Ok(a) => {
                let c = a.checks();
                for (flag, label) in [
                    (c.associative, "associative"),
                    (c.unital, "unital"),
                    (c.commutative, "m∘σ=m"),
                    (c.natural, "naturality"),
                    (c.hexagon_sampled, "hexagon"),
                ] {
                    if !flag {
                        failures.push(format!("{name}: {label}"));
                    }
                }
            }
            Err(e) => failures.push(format!("{name}: {e}")),
        }
    }
    all_ok(failures, format!("{count} algebras"))
}

fn c5_comparison(_cat: &Catalog) -> Outcome {
    let mut failures = Vec::new();
    let mut shapes = Vec::new();
    for name in ["s3/A3", "sweedler/c2"] {
        let p = builtins::quotient(name)?;
        let c = comparison_maps(p.source(), &p)?;
        shapes.push(format!(
            "{name}: q∘ι {}x{}",
            c.q_iota.rows(),
            c.q_iota.cols()
        ));
        if !c.identity_holds {
            failures.push(format!("{name}: q∘ι != u∘α₁"));
        }
        if !c.iota_algebra_map {
            failures.push(format!("{name}: ι not an algebra map"));
        }
        if !c.q_algebra_map {
            failures.push(format!("{name}: q not an algebra map"));
        }
    }
    all_ok(failures, shapes.join(", "))
}

fn c6_deligne(cat: &Catalog) -> Outcome {
    let mut pairs = vec![("c2", "c2")];
    if cat.suite == Suite::All {
        pairs.push(("s3", "c2"));
    }
    let mut failures = Vec::new();
    for (a, b) in &pairs {
        match verify_deligne(&builtins::hopf(a)?, &builtins::hopf(b)?) {
            Ok(r) if r.pass() => {}
            Ok(_) => failures.push(format!("({a},{b}): mismatch")),
            Err(e) => failures.push(format!("({a},{b}): {e}")),
        }
    }
    all_ok(failures, format!("{} pairs", pairs.len()))
}

/// Carriers for the quotients by each normal subgroup, largest first.
pub fn tower(group: &str, normals: &[&str], depth: usize) -> Result<Vec<(String, CentralAlgebra)>> {
    let mut levels = Vec::new();
    for n in normals {
        let p = builtins::group_quotient(group, n)?;
        let a = build_algebra(relative_end_with_depth(p.source(), &p, depth)?)?;
        levels.push((n.to_string(), p.target().dim(), a));
    }
    // larger normal subgroup ⇔ smaller quotient ⇔ larger carrier
    levels.sort_by_key(|(_, q, _)| *q);
    Ok(levels.into_iter().map(|(n, _, a)| (n, a)).collect())
}

/// Nesting maps `ι` between consecutive levels of a tower, with their
/// algebra-map flags.
pub fn tower_inclusions(levels: &[(String, CentralAlgebra)]) -> Result<Vec<(Mat, bool)>> {
    levels
        .windows(2)
        .map(|w| {
            let (coarse, fine) = (&w[0].1, &w[1].1);
            let iota = restriction_mono(fine.carrier(), coarse.carrier())?;
            let ok = is_algebra_map(&iota, fine, coarse);
            Ok((iota, ok))
        })
        .collect()
}

fn c7_nesting(cat: &Catalog) -> Outcome {
    let levels = tower("s3", &["e", "A3", "G"], cat.depth())?;
    let dims: Vec<usize> = levels.iter().map(|(_, a)| a.dim()).collect();
    let mut failures = Vec::new();
    if dims != [6, 3, 1] {
        failures.push(format!("dims {dims:?}"));
    }
    for (i, (_, ok)) in tower_inclusions(&levels)?.iter().enumerate() {
        if !ok {
            failures.push(format!("inclusion {i} is not an algebra map"));
        }
    }
    all_ok(failures, format!("carriers {dims:?}"))
}

fn random_scalar(rng: &mut ChaCha8Rng) -> crate::exactla::Scalar {
    frac(rng.gen_range(-5..=5), rng.gen_range(1..=4))
}

fn random_combination(rng: &mut ChaCha8Rng, basis: &[Vector]) -> Vector {
    let dim = basis[0].len();
    let mut v = crate::exactla::zero_vector(dim);
    for b in basis {
        let c = random_scalar(rng);
        for (x, y) in v.iter_mut().zip(b) {
            *x += &c * y;
        }
    }
    v
}

/// Outcome of one candidate family against an end.
fn factor_candidate(e: &EndObject, lambda: &Mat) -> Result<bool> {
    let h = factor_through(e, lambda)?;
    let lifted = e.pi_at_p() * &h;
    // injective iff the family is jointly injective
    let injective = h.rank() == h.cols();
    let jointly = rank_of(&lambda.columns(), e.dim_ambient()) == lambda.cols();
    Ok(lifted == *lambda && injective == jointly)
}

fn c8_universal(cat: &Catalog) -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    let mut ends: Vec<(String, EndObject)> = Vec::new();
    for name in ["s3/A3", "sweedler/c2"] {
        let (_, a) = cat.relative_named(name)?;
        ends.push((format!("A({name})"), a.carrier().clone()));
    }
    for name in ["c2", "sweedler"] {
        if let Some((_, _, Ok(a))) = cat.ordinary.iter().find(|(n, _, _)| n == name) {
            ends.push((format!("A({name})"), a.carrier().clone()));
        }
    }
    let mut failures = Vec::new();
    for i in 0..20 {
        let (label, e) = &ends[i % ends.len()];
        let cols = rng.gen_range(1..=e.dim() + 1);
        let family: Vec<Vector> = (0..cols)
            .map(|_| random_combination(&mut rng, e.basis()))
            .collect();
        let lambda = Mat::from_columns(e.dim_ambient(), &family);
        match factor_candidate(e, &lambda) {
            Ok(true) => {}
            Ok(false) => failures.push(format!("valid family {i} on {label}: bad factorization")),
            Err(err) => failures.push(format!("valid family {i} on {label}: {err}")),
        }
    }
    let mut rejected = 0;
    for i in 0..5 {
        let (label, e) = &ends[i % ends.len()];
        let p = e.generator();
        // a direction outside the end: dinatural but not relative, or not dinatural at all
        let ordinary = end_at_generator(e.algebra())?;
        let outside: Vec<Vector> = if e.relative_to().is_some() && ordinary.dim() > e.dim() {
            ordinary
                .basis()
                .iter()
                .filter(|v| !subspace_contains(e.basis(), &[(*v).clone()]))
                .cloned()
                .collect()
        } else {
            (0..p.dim() * p.dim())
                .map(|j| crate::exactla::unit_vector(p.dim() * p.dim(), j))
                .filter(|v| !subspace_contains(e.basis(), std::slice::from_ref(v)))
                .collect()
        };
        let mut bad = random_combination(&mut rng, e.basis());
        let direction = &outside[rng.gen_range(0..outside.len())];
        for (x, y) in bad.iter_mut().zip(direction) {
            *x += y;
        }
        let lambda = Mat::from_columns(
            e.dim_ambient(),
            &[random_combination(&mut rng, e.basis()), bad],
        );
        match factor_through(e, &lambda) {
            Err(Error::ConstraintViolation(_)) => rejected += 1,
            Ok(_) => failures.push(format!("perturbed family {i} on {label} accepted")),
            Err(err) => failures.push(format!("perturbed family {i} on {label}: {err}")),
        }
    }
    all_ok(
        failures,
        format!("20 valid families factored, {rejected} perturbed rejected"),
    )
}

fn c9_degeneration(cat: &Catalog) -> Outcome {
    let mut failures = Vec::new();
    for (name, h, a) in &cat.ordinary {
        let Ok(a) = a else {
            failures.push(format!("{name}: ordinary end failed"));
            continue;
        };
        match relative_end_with_depth(h, &HopfMap::counit(h.clone()), cat.depth()) {
            Ok(r) if subspace_equal(r.basis(), a.carrier().basis()) && r.dim() == a.dim() => {}
            Ok(r) => failures.push(format!("{name}: dim {} vs {}", r.dim(), a.dim())),
            Err(e) => failures.push(format!("{name}: {e}")),
        }
    }
    all_ok(failures, format!("{} Hopf algebras", cat.ordinary.len()))
}

/// Sample `(D, M, N, X)` for the prebalancing compatibility: `D` is the
/// pulled-back regular `Q`-module, `M, N, X ∈ {1, P}`; at most
/// `max_maps` basis maps `f` per tuple.
pub fn prebalancing_sample(p: &HopfMap, max_maps: usize) -> Result<(usize, Vec<String>)> {
    let h = p.source();
    let d = pullback(p, &regular_module(p.target()))?;
    let samples = [trivial_module(h), regular_module(h)];
    let mut checked = 0;
    let mut failures = Vec::new();
    for x in &samples {
        for m in &samples {
            for n in &samples {
                let target = internal_hom(m, &tensor(n, &d)?)?;
                let maps = if x.dim() == h.dim() {
                    hom_from_regular(&target)
                } else {
                    hom_basis(x, &target)?
                };
                for f in maps.iter().take(max_maps) {
                    let (l, r) = prebalancing_phi_sides(x, &d, m, n, f)?;
                    checked += 1;
                    if l != r {
                        failures.push(format!("X={} M={} N={}", x.label(), m.label(), n.label()));
                    }
                }
            }
        }
    }
    Ok((checked, failures))
}

fn c10_prebalancing(_cat: &Catalog) -> Outcome {
    let mut failures = Vec::new();
    let mut total = 0;
    for name in ["sweedler/c2", "s3/A3"] {
        let (n, f) = prebalancing_sample(&builtins::quotient(name)?, 6)?;
        total += n;
        failures.extend(f.into_iter().map(|s| format!("{name}: {s}")));
    }
    all_ok(failures, format!("{total} maps checked"))
}

fn c11_connected(cat: &Catalog) -> Outcome {
    let mut failures = Vec::new();
    let mut count = 0;
    for (name, a) in every_algebra(cat) {
        count += 1;
        match a {
            Ok(a) if a.checks().connected => {}
            Ok(_) => failures.push(format!("{name}: not connected")),
            Err(e) => failures.push(format!("{name}: {e}")),
        }
    }
    all_ok(failures, format!("{count} algebras"))
}

pub fn run_criterion(id: u8, cat: &Catalog) -> CriterionResult {
    let start = Instant::now();
    let outcome = match id {
        1 => c1_coinvariants(cat),
        2 => c2_dim_formula(cat),
        3 => c3_ordinary_dim(cat),
        4 => c4_structure(cat),
        5 => c5_comparison(cat),
        6 => c6_deligne(cat),
        7 => c7_nesting(cat),
        8 => c8_universal(cat),
        9 => c9_degeneration(cat),
        10 => c10_prebalancing(cat),
        11 => c11_connected(cat),
        _ => Err(Error::Unknown(format!("criterion {id}"))),
    };
    let (pass, detail) = match outcome {
        Ok(x) => x,
        Err(e) => (false, e.to_string()),
    };
    let name = CRITERIA
        .iter()
        .find(|(i, _)| *i == id)
        .map_or("unknown", |(_, n)| n);
    CriterionResult {
        id,
        name,
        pass,
        detail,
        elapsed: start.elapsed(),
    }
}

pub fn run_suite(suite: Suite, options: Options) -> Result<Vec<CriterionResult>> {
    let cat = Catalog::build(suite, options)?;
    Ok(CRITERIA
        .iter()
        .map(|(id, _)| run_criterion(*id, &cat))
        .collect())
}
