//! Named Hopf algebras, groups, subgroups and quotient maps.

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::group::Group;
use crate::hopf::{
    function_algebra, function_restriction, ground_field, group_algebra, projection_first_factor,
    quotient_by_normal_subgroup, sweedler, tensor_hopf, HopfAlgebra, HopfMap,
};

/// Hopf algebra names, smallest first.
pub const HOPF_NAMES: &[&str] = &[
    "k",
    "c2",
    "c3",
    "sweedler",
    "c4",
    "c2xc2",
    "s3",
    "fn-s3",
    "d4",
    "q8",
    "sweedlerxc2",
    "s3xc2",
];

pub const GROUP_NAMES: &[&str] = &["c2", "c3", "c4", "s3", "d4", "q8"];

pub fn group(name: &str) -> Result<Group> {
    match name {
        "c2" => Ok(Group::cyclic(2)),
        "c3" => Ok(Group::cyclic(3)),
        "c4" => Ok(Group::cyclic(4)),
        "s3" => Ok(Group::symmetric3()),
        "d4" => Ok(Group::dihedral4()),
        "q8" => Ok(Group::quaternion()),
        _ => Err(Error::Unknown(format!("group {name:?}"))),
    }
}

fn renamed(name: &str, h: HopfAlgebra) -> HopfAlgebra {
    HopfAlgebra::new(name, h.data().clone()).expect("builtin data satisfies the axioms")
}

pub fn hopf(name: &str) -> Result<Arc<HopfAlgebra>> {
    let h = match name {
        "k" => ground_field(),
        "sweedler" => sweedler(),
        "fn-s3" => function_algebra(&Group::symmetric3())?,
        "c2xc2" => tensor_hopf(&*hopf("c2")?, &*hopf("c2")?),
        "s3xc2" => tensor_hopf(&*hopf("s3")?, &*hopf("c2")?),
        "sweedlerxc2" => tensor_hopf(&sweedler(), &*hopf("c2")?),
        g if GROUP_NAMES.contains(&g) => group_algebra(&group(g)?)?,
        _ => return Err(Error::Unknown(format!("Hopf algebra {name:?}"))),
    };
    Ok(Arc::new(renamed(name, h)))
}

/// A named subgroup: `e`/`trivial`, `G`/`all`, `A3` (in s3), `C2` (in c4),
/// `Z`/`center`, or an explicit list such as `{e,(12)}`.
pub fn subgroup(g: &Group, spec: &str) -> Result<Vec<usize>> {
    let spec = spec.trim();
    let n = g.order();
    let by_names = |names: &[&str]| -> Result<Vec<usize>> {
        names
            .iter()
            .map(|s| {
                g.index_of(s)
                    .ok_or_else(|| Error::Unknown(format!("element {s:?}")))
            })
            .collect()
    };
    let subset = match spec {
        "e" | "1" | "trivial" => vec![g.identity()],
        "G" | "all" => (0..n).collect(),
        "A3" if n == 6 => by_names(&["e", "(123)", "(132)"])?,
        "C2" if n == 4 && g.index_of("a2").is_some() => by_names(&["e", "a2"])?,
        "Z" | "center" => (0..n)
            .filter(|&x| (0..n).all(|y| g.mul(x, y) == g.mul(y, x)))
            .collect(),
        s if s.starts_with('{') => g.parse_subset(s)?,
        _ => return Err(Error::Unknown(format!("subgroup {spec:?}"))),
    };
    g.check_subgroup(&subset)
}

/// Quotient `kG → k(G/N)` of a builtin group algebra; the source is the
/// builtin of the same name.
pub fn group_quotient(group_name: &str, normal: &str) -> Result<HopfMap> {
    let g = group(group_name)?;
    let n = subgroup(&g, normal)?;
    let p = quotient_by_normal_subgroup(&g, &n)?;
    HopfMap::new(hopf(group_name)?, p.target().clone(), p.matrix().clone())
}

pub fn sweedler_to_c2() -> HopfMap {
    let m = crate::exactla::Mat::from_ints(2, 4, &[1, 0, 0, 0, 0, 1, 0, 0]);
    HopfMap::new(hopf("sweedler").unwrap(), hopf("c2").unwrap(), m)
        .expect("g ↦ g, x ↦ 0 is a Hopf map")
}

fn first_factor(h1: &str, h2: &str, product: &str) -> Result<HopfMap> {
    let p = projection_first_factor(&hopf(h1)?, &*hopf(h2)?);
    HopfMap::new(hopf(product)?, p.target().clone(), p.matrix().clone())
}

/// Named surjections, used by `--quotient` and the verification suite.
pub const QUOTIENT_NAMES: &[&str] = &[
    "s3/A3",
    "s3/e",
    "s3/S3",
    "c4/C2",
    "d4/Z",
    "q8/Z",
    "sweedler/c2",
    "c2xc2/c2",
    "s3xc2/s3",
    "sweedlerxc2/sweedler",
    "fn-s3/fn-A3",
];

pub fn quotient(name: &str) -> Result<HopfMap> {
    match name {
        "s3/A3" => group_quotient("s3", "A3"),
        "s3/e" => group_quotient("s3", "e"),
        "s3/S3" => group_quotient("s3", "G"),
        "c4/C2" => group_quotient("c4", "C2"),
        "d4/Z" => group_quotient("d4", "Z"),
        "q8/Z" => group_quotient("q8", "Z"),
        "sweedler/c2" => Ok(sweedler_to_c2()),
        "c2xc2/c2" => first_factor("c2", "c2", "c2xc2"),
        "s3xc2/s3" => first_factor("s3", "c2", "s3xc2"),
        "sweedlerxc2/sweedler" => first_factor("sweedler", "c2", "sweedlerxc2"),
        "fn-s3/fn-A3" => {
            let g = Group::symmetric3();
            let a3 = subgroup(&g, "A3")?;
            let p = function_restriction(&g, &a3)?;
            HopfMap::new(hopf("fn-s3")?, p.target().clone(), p.matrix().clone())
        }
        _ => Err(Error::Unknown(format!("quotient {name:?}"))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_builtin_loads() {
        for name in HOPF_NAMES {
            let h = hopf(name).unwrap();
            assert_eq!(h.name(), *name);
            assert!(h.check_axioms().all_pass());
        }
        assert!(matches!(hopf("s5"), Err(Error::Unknown(_))));
    }

    #[test]
    fn every_quotient_is_surjective() {
        for name in QUOTIENT_NAMES {
            let p = quotient(name).unwrap();
            assert!(p.is_surjective(), "{name}");
            let src = name.split('/').next().unwrap();
            assert_eq!(**p.source(), *hopf(src).unwrap(), "{name}");
        }
    }

    #[test]
    fn subgroup_aliases() {
        let s3 = group("s3").unwrap();
        assert_eq!(subgroup(&s3, "A3").unwrap().len(), 3);
        assert_eq!(subgroup(&s3, "{e,(12)}").unwrap().len(), 2);
        assert_eq!(subgroup(&group("d4").unwrap(), "Z").unwrap().len(), 2);
        assert_eq!(subgroup(&group("q8").unwrap(), "center").unwrap().len(), 2);
        assert_eq!(subgroup(&group("c4").unwrap(), "C2").unwrap().len(), 2);
        assert!(matches!(
            group_quotient("s3", "{e,(12)}"),
            Err(Error::NotNormal(_))
        ));
        assert!(matches!(
            subgroup(&s3, "{e,(123)}"),
            Err(Error::NotSubgroup(_))
        ));
    }
}
