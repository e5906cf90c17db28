//! Finite groups given by Cayley tables.

use std::collections::{BTreeSet, HashMap, VecDeque};

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Group {
    names: Vec<String>,
    table: Vec<Vec<usize>>,
    identity: usize,
    inverses: Vec<usize>,
}

impl Group {
    /// Validates the table exhaustively (closure, associativity, identity,
    /// inverses).
    pub fn new(names: Vec<String>, table: Vec<Vec<usize>>) -> Result<Self> {
        let n = table.len();
        if n == 0 {
            return Err(Error::NotAGroup("empty table".into()));
        }
        if names.len() != n {
            return Err(Error::NotAGroup(format!(
                "{} names for a table of order {n}",
                names.len()
            )));
        }
        let distinct: BTreeSet<&String> = names.iter().collect();
        if distinct.len() != n {
            return Err(Error::NotAGroup("element names are not distinct".into()));
        }
        for (i, row) in table.iter().enumerate() {
            if row.len() != n {
                return Err(Error::NotAGroup(format!(
                    "row {i} has length {}",
                    row.len()
                )));
            }
            if let Some(&bad) = row.iter().find(|&&x| x >= n) {
                return Err(Error::NotAGroup(format!(
                    "entry {bad} out of range in row {i}"
                )));
            }
        }
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if table[table[a][b]][c] != table[a][table[b][c]] {
                        return Err(Error::NotAGroup(format!(
                            "associativity fails at ({}, {}, {})",
                            names[a], names[b], names[c]
                        )));
                    }
                }
            }
        }
        let identity = (0..n)
            .find(|&e| (0..n).all(|x| table[e][x] == x && table[x][e] == x))
            .ok_or_else(|| Error::NotAGroup("no identity element".into()))?;
        let mut inverses = Vec::with_capacity(n);
        for a in 0..n {
            let inv = (0..n)
                .find(|&b| table[a][b] == identity && table[b][a] == identity)
                .ok_or_else(|| Error::NotAGroup(format!("{} has no inverse", names[a])))?;
            inverses.push(inv);
        }
        Ok(Group {
            names,
            table,
            identity,
            inverses,
        })
    }

    pub fn order(&self) -> usize {
        self.table.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn table(&self) -> &[Vec<usize>] {
        &self.table
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a][b]
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn inverse(&self, a: usize) -> usize {
        self.inverses[a]
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    pub fn is_abelian(&self) -> bool {
        let n = self.order();
        (0..n).all(|a| (0..n).all(|b| self.table[a][b] == self.table[b][a]))
    }

    pub fn cyclic(n: usize) -> Self {
        let names = (0..n)
            .map(|i| match i {
                0 => "e".to_string(),
                1 => "a".to_string(),
                _ => format!("a{i}"),
            })
            .collect();
        let table = (0..n)
            .map(|i| (0..n).map(|j| (i + j) % n).collect())
            .collect();
        Group::new(names, table).expect("cyclic group table is valid")
    }

    /// Closure of a set of permutations of `{0, .., d-1}` under composition
    /// `(p·q)(x) = p(q(x))`, enumerated breadth-first from the identity.
    /// Elements are named in 1-based cycle notation.
    pub fn from_permutations(generators: &[Vec<usize>]) -> Self {
        let d = generators.first().map_or(0, Vec::len);
        let id: Vec<usize> = (0..d).collect();
        let mut elems = vec![id.clone()];
        let mut index: HashMap<Vec<usize>, usize> = HashMap::from([(id, 0)]);
        let mut queue = VecDeque::from([0usize]);
        while let Some(i) = queue.pop_front() {
            for g in generators {
                let p: Vec<usize> = (0..d).map(|x| elems[i][g[x]]).collect();
                if !index.contains_key(&p) {
                    index.insert(p.clone(), elems.len());
                    queue.push_back(elems.len());
                    elems.push(p);
                }
            }
        }
        let table = elems
            .iter()
            .map(|p| {
                elems
                    .iter()
                    .map(|q| index[&(0..d).map(|x| p[q[x]]).collect::<Vec<_>>()])
                    .collect()
            })
            .collect();
        let names = elems.iter().map(|p| cycle_notation(p)).collect();
        Group::new(names, table).expect("permutation closure is a group")
    }

    pub fn symmetric3() -> Self {
        Group::from_permutations(&[vec![1, 0, 2], vec![1, 2, 0]])
    }

    pub fn symmetric4() -> Self {
        Group::from_permutations(&[vec![1, 0, 2, 3], vec![1, 2, 3, 0]])
    }

    /// Symmetries of a square acting on its vertices.
    pub fn dihedral4() -> Self {
        Group::from_permutations(&[vec![1, 2, 3, 0], vec![3, 2, 1, 0]])
    }

    /// Quaternion group `{±1, ±i, ±j, ±k}`.
    pub fn quaternion() -> Self {
        // unit index u ∈ {1, i, j, k}, sign s; element index 2u + s
        let units = ["1", "i", "j", "k"];
        // (product unit, sign flip) for units a·b
        let prod = |a: usize, b: usize| -> (usize, bool) {
            match (a, b) {
                (0, x) | (x, 0) => (x, false),
                (x, y) if x == y => (0, true),
                (1, 2) => (3, false),
                (2, 3) => (1, false),
                (3, 1) => (2, false),
                (2, 1) => (3, true),
                (3, 2) => (1, true),
                (1, 3) => (2, true),
                _ => unreachable!(),
            }
        };
        let mut names = Vec::new();
        for u in units {
            names.push(u.to_string());
            names.push(format!("-{u}"));
        }
        let table = (0..8)
            .map(|x| {
                (0..8)
                    .map(|y| {
                        let (u, flip) = prod(x / 2, y / 2);
                        let sign = (x % 2) ^ (y % 2) ^ usize::from(flip);
                        2 * u + sign
                    })
                    .collect()
            })
            .collect();
        Group::new(names, table).expect("quaternion table is valid")
    }

    pub fn direct_product(a: &Group, b: &Group) -> Self {
        let (na, nb) = (a.order(), b.order());
        let names = (0..na * nb)
            .map(|x| format!("({},{})", a.names[x / nb], b.names[x % nb]))
            .collect();
        let table = (0..na * nb)
            .map(|x| {
                (0..na * nb)
                    .map(|y| a.mul(x / nb, y / nb) * nb + b.mul(x % nb, y % nb))
                    .collect()
            })
            .collect();
        Group::new(names, table).expect("direct product is a group")
    }

    /// Validates a subset as a subgroup; returns it sorted.
    pub fn check_subgroup(&self, subset: &[usize]) -> Result<Vec<usize>> {
        let set: BTreeSet<usize> = subset.iter().copied().collect();
        if let Some(&bad) = set.iter().find(|&&x| x >= self.order()) {
            return Err(Error::NotSubgroup(format!("index {bad} out of range")));
        }
        if !set.contains(&self.identity) {
            return Err(Error::NotSubgroup("does not contain the identity".into()));
        }
        for &a in &set {
            if !set.contains(&self.inverse(a)) {
                return Err(Error::NotSubgroup(format!(
                    "not closed under inverses at {}",
                    self.names[a]
                )));
            }
            for &b in &set {
                if !set.contains(&self.mul(a, b)) {
                    return Err(Error::NotSubgroup(format!(
                        "not closed under multiplication at ({}, {})",
                        self.names[a], self.names[b]
                    )));
                }
            }
        }
        Ok(set.into_iter().collect())
    }

    pub fn check_normal(&self, subset: &[usize]) -> Result<Vec<usize>> {
        let sub = self.check_subgroup(subset)?;
        let set: BTreeSet<usize> = sub.iter().copied().collect();
        for g in 0..self.order() {
            for &n in &sub {
                let c = self.mul(self.mul(g, n), self.inverse(g));
                if !set.contains(&c) {
                    return Err(Error::NotNormal(format!(
                        "{} conjugated by {} leaves the subgroup",
                        self.names[n], self.names[g]
                    )));
                }
            }
        }
        Ok(sub)
    }

    /// Left cosets `gN` ordered by their smallest element; returns the coset
    /// index of every element together with the cosets.
    pub fn cosets(&self, normal: &[usize]) -> (Vec<usize>, Vec<Vec<usize>>) {
        let n = self.order();
        let mut coset_of = vec![usize::MAX; n];
        let mut cosets = Vec::new();
        for g in 0..n {
            if coset_of[g] != usize::MAX {
                continue;
            }
            let mut c: Vec<usize> = normal.iter().map(|&x| self.mul(g, x)).collect();
            c.sort_unstable();
            for &x in &c {
                coset_of[x] = cosets.len();
            }
            cosets.push(c);
        }
        (coset_of, cosets)
    }

    /// `G/N` with the projection `g ↦ gN`.
    pub fn quotient(&self, normal: &[usize]) -> Result<(Group, Vec<usize>)> {
        let normal = self.check_normal(normal)?;
        let (coset_of, cosets) = self.cosets(&normal);
        let names = cosets
            .iter()
            .map(|c| {
                if c.len() == 1 {
                    self.names[c[0]].clone()
                } else {
                    format!("{}N", self.names[c[0]])
                }
            })
            .collect();
        let table = cosets
            .iter()
            .map(|a| {
                cosets
                    .iter()
                    .map(|b| coset_of[self.mul(a[0], b[0])])
                    .collect()
            })
            .collect();
        Ok((Group::new(names, table)?, coset_of))
    }

    /// The subgroup as a group in its own right, with its embedding.
    pub fn subgroup(&self, subset: &[usize]) -> Result<(Group, Vec<usize>)> {
        let sub = self.check_subgroup(subset)?;
        let pos: HashMap<usize, usize> = sub.iter().enumerate().map(|(i, &g)| (g, i)).collect();
        let names = sub.iter().map(|&g| self.names[g].clone()).collect();
        let table = sub
            .iter()
            .map(|&a| sub.iter().map(|&b| pos[&self.mul(a, b)]).collect())
            .collect();
        Ok((Group::new(names, table)?, sub))
    }

    /// Parses `{a,b,c}` (element names) into indices.
    pub fn parse_subset(&self, text: &str) -> Result<Vec<usize>> {
        let inner = text
            .trim()
            .strip_prefix('{')
            .and_then(|t| t.strip_suffix('}'))
            .ok_or_else(|| Error::Parse(format!("expected {{...}} element list, got {text:?}")))?;
        split_top_level(inner)
            .into_iter()
            .filter(|s| !s.is_empty())
            .map(|name| {
                self.index_of(name)
                    .ok_or_else(|| Error::Unknown(format!("group element {name:?}")))
            })
            .collect()
    }
}

/// Splits on commas that are not inside parentheses, so that names such as
/// `(12)` or `(a,e)` survive.
fn split_top_level(s: &str) -> Vec<&str> {
    let mut out = Vec::new();
    let mut depth = 0i32;
    let mut start = 0;
    for (i, ch) in s.char_indices() {
        match ch {
            '(' => depth += 1,
            ')' => depth -= 1,
            ',' if depth == 0 => {
                out.push(s[start..i].trim());
                start = i + 1;
            }
            _ => {}
        }
    }
    out.push(s[start..].trim());
    out
}

fn cycle_notation(p: &[usize]) -> String {
    let mut seen = vec![false; p.len()];
    let mut out = String::new();
    for s in 0..p.len() {
        if seen[s] || p[s] == s {
            continue;
        }
        out.push('(');
        let mut x = s;
        while !seen[x] {
            seen[x] = true;
            out.push_str(&(x + 1).to_string());
            x = p[x];
        }
        out.push(')');
    }
    if out.is_empty() {
        "e".into()
    } else {
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn standard_orders() {
        assert_eq!(Group::symmetric3().order(), 6);
        assert_eq!(Group::symmetric4().order(), 24);
        assert_eq!(Group::dihedral4().order(), 8);
        assert_eq!(Group::quaternion().order(), 8);
        assert!(!Group::quaternion().is_abelian());
        assert!(Group::cyclic(4).is_abelian());
    }

    #[test]
    fn s3_names_and_normal_subgroups() {
        let g = Group::symmetric3();
        let a3 = g.parse_subset("{e,(123),(132)}").unwrap();
        assert_eq!(g.check_normal(&a3).unwrap().len(), 3);
        let t = g.parse_subset("{e,(12)}").unwrap();
        assert!(g.check_subgroup(&t).is_ok());
        assert!(matches!(g.check_normal(&t), Err(Error::NotNormal(_))));
        let bad = g.parse_subset("{e,(123)}").unwrap();
        assert!(matches!(g.check_subgroup(&bad), Err(Error::NotSubgroup(_))));
    }

    #[test]
    fn quotient_of_s3_by_a3_is_c2() {
        let g = Group::symmetric3();
        let a3 = g.parse_subset("{e,(123),(132)}").unwrap();
        let (q, proj) = g.quotient(&a3).unwrap();
        assert_eq!(q.order(), 2);
        for a in 0..6 {
            for b in 0..6 {
                assert_eq!(proj[g.mul(a, b)], q.mul(proj[a], proj[b]));
            }
        }
    }

    #[test]
    fn rejects_non_associative_table() {
        let names = vec!["e".into(), "a".into(), "b".into()];
        // a·a = b, a·b = a: has identity and inverses fail to be consistent
        let table = vec![vec![0, 1, 2], vec![1, 2, 1], vec![2, 1, 0]];
        assert!(matches!(Group::new(names, table), Err(Error::NotAGroup(_))));
    }
}
