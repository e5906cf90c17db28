use std::sync::{Arc, OnceLock};

use proptest::prelude::*;
use relend::adjoint::{build_algebra, CentralAlgebra};
use relend::builtins;
use relend::ends::{end_at_generator, relative_end, satisfies_constraints};
use relend::exactla::{
    format_scalar, frac, int, kernel_basis, kron, parse_scalar, solve_unique, Mat, Scalar, Vector,
};
use relend::hopf::HopfAlgebra;
use relend::rep::{
    hom_basis, hom_from_regular, phi, psi, regular_module, tensor, trivial_module, HModMap, HModule,
};

const SMALL: [&str; 4] = ["c2", "c3", "sweedler", "c2xc2"];

fn scalar() -> impl Strategy<Value = Scalar> {
    (-6i64..=6, 1i64..=4).prop_map(|(n, d)| frac(n, d))
}

fn vector(n: usize) -> impl Strategy<Value = Vector> {
    prop::collection::vec(scalar(), n)
}

fn matrix(r: usize, c: usize) -> impl Strategy<Value = Mat> {
    vector(r * c).prop_map(move |v| Mat::from_vec(r, c, v))
}

fn hopf(i: usize) -> Arc<HopfAlgebra> {
    static CACHE: OnceLock<Vec<Arc<HopfAlgebra>>> = OnceLock::new();
    CACHE.get_or_init(|| SMALL.iter().map(|n| builtins::hopf(n).unwrap()).collect())[i].clone()
}

fn adjoint(i: usize) -> &'static CentralAlgebra {
    static CACHE: OnceLock<Vec<CentralAlgebra>> = OnceLock::new();
    &CACHE.get_or_init(|| {
        (0..SMALL.len())
            .map(|i| build_algebra(end_at_generator(&hopf(i)).unwrap()).unwrap())
            .collect()
    })[i]
}

fn combine(n: usize, vs: &[Vector], coeffs: &[Scalar]) -> Vector {
    let mut out = vec![int(0); n];
    for (v, c) in vs.iter().zip(coeffs) {
        for (o, x) in out.iter_mut().zip(v) {
            *o += c * x;
        }
    }
    out
}

fn combine_maps(src: &HModule, dst: &HModule, maps: &[HModMap], coeffs: &[Scalar]) -> HModMap {
    let mut m = Mat::zeros(dst.dim(), src.dim());
    for (f, c) in maps.iter().zip(coeffs) {
        m = &m + &f.matrix().scale(c);
    }
    HModMap::new(src.clone(), dst.clone(), m).unwrap()
}

/// Product in H ⊗ H, index a*n+b.
fn mul2(h: &HopfAlgebra, x: &[Scalar], y: &[Scalar]) -> Vector {
    let n = h.dim();
    let mut out = vec![int(0); n * n];
    for a in 0..n {
        for b in 0..n {
            if x[a * n + b] == int(0) {
                continue;
            }
            for c in 0..n {
                for d in 0..n {
                    let s = &x[a * n + b] * &y[c * n + d];
                    if s == int(0) {
                        continue;
                    }
                    let ac = h.mul(&h.basis_vector(a), &h.basis_vector(c));
                    let bd = h.mul(&h.basis_vector(b), &h.basis_vector(d));
                    for (p, u) in ac.iter().enumerate() {
                        for (q, v) in bd.iter().enumerate() {
                            out[p * n + q] += &s * u * v;
                        }
                    }
                }
            }
        }
    }
    out
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn scalar_text_round_trip(s in scalar()) {
        prop_assert_eq!(parse_scalar(&format_scalar(&s)).unwrap(), s);
    }

    #[test]
    fn kron_mixed_product(a in matrix(2, 3), b in matrix(2, 2), c in matrix(3, 2), d in matrix(2, 1)) {
        prop_assert_eq!(&kron(&a, &b) * &kron(&c, &d), kron(&(&a * &c), &(&b * &d)));
    }

    #[test]
    fn kron_associative(a in matrix(2, 1), b in matrix(1, 2), c in matrix(2, 2)) {
        prop_assert_eq!(kron(&kron(&a, &b), &c), kron(&a, &kron(&b, &c)));
    }

    #[test]
    fn kernel_is_annihilated_and_complete(m in matrix(3, 5)) {
        let ker = kernel_basis(&m);
        prop_assert_eq!(ker.len() + m.rank(), 5);
        for v in &ker {
            prop_assert!(m.mul_vec(v).iter().all(|x| *x == int(0)));
        }
    }

    #[test]
    fn solve_recovers_solution(a in matrix(3, 3), x in matrix(3, 2)) {
        prop_assume!(a.rank() == 3);
        let b = &a * &x;
        prop_assert_eq!(solve_unique(&a, &b).unwrap(), x);
    }

    #[test]
    fn comultiplication_is_multiplicative(i in 0..SMALL.len(), x in vector(4), y in vector(4)) {
        let h = hopf(i);
        let n = h.dim();
        let (x, y) = (&x[..n], &y[..n]);
        let lhs = h.comult_vec(&h.mul(x, y));
        prop_assert_eq!(lhs, mul2(&h, &h.comult_vec(x), &h.comult_vec(y)));
    }

    #[test]
    fn antipode_identity(i in 0..SMALL.len(), x in vector(4)) {
        let h = hopf(i);
        let n = h.dim();
        let x = &x[..n];
        let d = h.comult_vec(x);
        let mut acc = vec![int(0); n];
        for a in 0..n {
            for b in 0..n {
                if d[a * n + b] == int(0) {
                    continue;
                }
                let sa = h.antipode().column(a);
                let p = h.mul(&sa, &h.basis_vector(b));
                for (o, v) in acc.iter_mut().zip(p) {
                    *o += &d[a * n + b] * v;
                }
            }
        }
        let eps = h.counit_of(x);
        let expect: Vector = h.unit().iter().map(|u| &eps * u).collect();
        prop_assert_eq!(acc, expect);
    }

    #[test]
    fn regular_homs_match_free_basis(i in 0..SMALL.len()) {
        let h = hopf(i);
        let reg = regular_module(&h);
        for m in [trivial_module(&h), reg.clone(), tensor(&reg, &trivial_module(&h)).unwrap()] {
            prop_assert_eq!(hom_basis(&reg, &m).unwrap().len(), m.dim());
            prop_assert_eq!(hom_from_regular(&m).len(), m.dim());
        }
    }

    #[test]
    fn phi_psi_round_trip(i in 0..SMALL.len(), coeffs in vector(16)) {
        let h = hopf(i);
        let (one, reg) = (trivial_module(&h), regular_module(&h));
        let zx = tensor(&one, &reg).unwrap();
        let basis = hom_basis(&zx, &reg).unwrap();
        let g = combine_maps(&zx, &reg, &basis, &coeffs);
        let f = psi(&one, &reg, &reg, &g).unwrap();
        let back = phi(&one, &reg, &reg, &f).unwrap();
        prop_assert_eq!(back.matrix(), g.matrix());
    }

    #[test]
    fn end_vectors_satisfy_constraints(i in 0..SMALL.len(), coeffs in vector(4)) {
        let a = adjoint(i);
        let e = a.carrier();
        let v = combine(e.dim_ambient(), e.basis(), &coeffs);
        prop_assert!(satisfies_constraints(e, &v).unwrap());
    }

    #[test]
    fn adjoint_product_braided_commutative(i in 0..SMALL.len(), x in vector(4), y in vector(4), z in vector(4)) {
        let a = adjoint(i);
        let k = a.dim();
        let (x, y, z) = (&x[..k], &y[..k], &z[..k]);
        prop_assert_eq!(a.product(&a.product(x, y), z), a.product(x, &a.product(y, z)));
        prop_assert_eq!(a.product(a.unit(), x), x.to_vec());
        prop_assert_eq!(a.product(x, a.unit()), x.to_vec());
        let sigma = a.half_braiding(a.carrier().module()).unwrap();
        let xy: Vector = x.iter().flat_map(|u| y.iter().map(move |v| u * v)).collect();
        prop_assert_eq!(a.mult().mul_vec(&sigma.mul_vec(&xy)), a.product(x, y));
    }

    #[test]
    fn relative_end_sits_inside_ordinary(qi in 0..4usize, coeffs in vector(6)) {
        let name = ["s3/A3", "c4/C2", "sweedler/c2", "c2xc2/c2"][qi];
        let p = builtins::quotient(name).unwrap();
        let rel = relative_end(p.source(), &p).unwrap();
        let ord = end_at_generator(p.source()).unwrap();
        let v = combine(rel.dim_ambient(), rel.basis(), &coeffs);
        prop_assert!(satisfies_constraints(&ord, &v).unwrap());
        prop_assert!(satisfies_constraints(&rel, &v).unwrap());
    }
}
