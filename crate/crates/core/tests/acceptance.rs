//! Acceptance gate: every criterion at exact arithmetic, plus oracles that
//! do not go through the verification module.

use relend::adjoint::{build_algebra, comparison_maps};
use relend::builtins::{self, QUOTIENT_NAMES};
use relend::ends::{end_at_generator, relative_end};
use relend::verify::{run_suite, Options, Suite, CRITERIA};

#[test]
fn all_criteria_pass() {
    let results = run_suite(Suite::All, Options::default()).expect("suite runs");
    assert_eq!(results.len(), CRITERIA.len());
    for r in &results {
        println!(
            "{} [{}] {}: {}",
            if r.pass { "PASS" } else { "FAIL" },
            r.id,
            r.name,
            r.detail
        );
    }
    let failing: Vec<u8> = results.iter().filter(|r| !r.pass).map(|r| r.id).collect();
    assert!(failing.is_empty(), "failing criteria: {failing:?}");
}

#[test]
fn negative_control_is_caught() {
    let opts = Options {
        broken_convention: true,
        validation_depth: None,
    };
    let results = run_suite(Suite::Fast, opts).expect("suite runs");
    assert!(!results.iter().find(|r| r.id == 1).unwrap().pass);
}

#[test]
fn relative_dims_match_index_oracle() {
    // dim H / dim Q, counted from the builtin data alone
    for name in QUOTIENT_NAMES {
        let p = builtins::quotient(name).unwrap();
        let (n, q) = (p.source().dim(), p.target().dim());
        if n > 12 {
            continue;
        }
        assert_eq!(n % q, 0);
        let e = relative_end(p.source(), &p).unwrap();
        assert_eq!(e.dim(), n / q, "{name}");
    }
}

#[test]
fn group_quotient_dims_match_subgroup_order() {
    for (g, n, order) in [
        ("s3", "A3", 3),
        ("s3", "e", 1),
        ("s3", "G", 6),
        ("c4", "C2", 2),
        ("d4", "Z", 2),
        ("q8", "Z", 2),
    ] {
        let p = builtins::group_quotient(g, n).unwrap();
        assert_eq!(
            relative_end(p.source(), &p).unwrap().dim(),
            order,
            "{g}/{n}"
        );
    }
}

#[test]
fn ordinary_dims_are_dim_h() {
    for name in ["k", "c2", "c3", "sweedler", "c4", "c2xc2", "s3", "fn-s3"] {
        let h = builtins::hopf(name).unwrap();
        let a = build_algebra(end_at_generator(&h).unwrap()).unwrap();
        assert_eq!(a.dim(), h.dim(), "{name}");
        assert!(a.checks().all_pass(), "{name}");
    }
}

#[test]
fn comparison_shapes() {
    for (name, shape) in [
        ("s3/A3", (2, 3)),
        ("sweedler/c2", (2, 2)),
        ("c4/C2", (2, 2)),
    ] {
        let p = builtins::quotient(name).unwrap();
        let c = comparison_maps(p.source(), &p).unwrap();
        assert_eq!(c.q_iota.shape(), shape, "{name}");
        assert!(c.identity_holds, "{name}");
    }
}
