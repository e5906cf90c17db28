//! JSON formats: `hopf-v1`, `group-v1`, `hopfmap-v1`, `hmod-v1` on input;
//! `end-v1` and `algebra-v1` reports on output. Rationals are written as
//! `"num/den"` strings; input also accepts integers and `"n"`.

use std::sync::Arc;

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::adjoint::{CentralAlgebra, ModelReport};
use crate::ends::EndObject;
use crate::error::{Error, Result};
use crate::exactla::{format_scalar, parse_scalar, Mat, Scalar, Vector};
use crate::group::Group;
use crate::hopf::{HopfAlgebra, HopfData, HopfMap};
use crate::rep::HModule;

/// A rational on input: a string or a JSON integer.
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
#[serde(untagged)]
pub enum RationalText {
    Text(String),
    Int(i64),
}

impl RationalText {
    fn value(&self) -> Result<Scalar> {
        match self {
            RationalText::Text(s) => Ok(parse_scalar(s)?),
            RationalText::Int(n) => Ok(crate::exactla::int(*n)),
        }
    }

    fn of(s: &Scalar) -> Self {
        RationalText::Text(format_scalar(s))
    }
}

fn vector(v: &[RationalText]) -> Result<Vector> {
    v.iter().map(RationalText::value).collect()
}

fn matrix(rows: &[Vec<RationalText>], expected_cols: Option<usize>) -> Result<Mat> {
    let cols = expected_cols.unwrap_or_else(|| rows.first().map_or(0, Vec::len));
    if rows.iter().any(|r| r.len() != cols) {
        return Err(Error::Parse("matrix rows have unequal length".into()));
    }
    let data = rows
        .iter()
        .map(|r| vector(r))
        .collect::<Result<Vec<_>>>()?
        .concat();
    Ok(Mat::from_vec(rows.len(), cols, data))
}

fn text_vector(v: &[Scalar]) -> Vec<String> {
    v.iter().map(format_scalar).collect()
}

pub fn text_matrix(m: &Mat) -> Vec<Vec<String>> {
    (0..m.rows()).map(|i| text_vector(m.row(i))).collect()
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct HopfJson {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    pub dim: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub basis: Option<Vec<String>>,
    /// `[i, j, k, c]`: `b_i b_j ∋ c b_k`.
    pub mult: Vec<(usize, usize, usize, RationalText)>,
    pub unit: Vec<RationalText>,
    /// `[i, j, k, c]`: `Δ(b_i) ∋ c b_j ⊗ b_k`.
    pub comult: Vec<(usize, usize, usize, RationalText)>,
    pub counit: Vec<RationalText>,
    /// `antipode[r][c]`: coefficient of `b_r` in `S(b_c)`.
    pub antipode: Vec<Vec<RationalText>>,
}

impl HopfJson {
    /// Structure constants, shape-checked but not axiom-checked.
    pub fn to_data(&self) -> Result<HopfData> {
        let n = self.dim;
        let bad = |what: &str| Error::Parse(format!("{what} index out of range for dimension {n}"));
        let mut mult = vec![crate::exactla::int(0); n * n * n];
        for (i, j, k, c) in &self.mult {
            if *i >= n || *j >= n || *k >= n {
                return Err(bad("mult"));
            }
            mult[(i * n + j) * n + k] += c.value()?;
        }
        let mut comult = vec![Vec::new(); n];
        for (i, j, k, c) in &self.comult {
            if *i >= n || *j >= n || *k >= n {
                return Err(bad("comult"));
            }
            comult[*i].push((*j, *k, c.value()?));
        }
        let unit = vector(&self.unit)?;
        let counit = vector(&self.counit)?;
        if unit.len() != n || counit.len() != n || self.antipode.len() != n {
            return Err(Error::Parse(format!(
                "unit, counit and antipode must have length {n}"
            )));
        }
        let antipode = matrix(&self.antipode, Some(n))?;
        let basis_names = match &self.basis {
            Some(b) if b.len() == n => b.clone(),
            Some(_) => return Err(Error::Parse("basis names must match dim".into())),
            None => Vec::new(),
        };
        Ok(HopfData {
            dim: n,
            mult,
            unit,
            comult,
            counit,
            antipode,
            basis_names,
        })
    }

    pub fn from_algebra(h: &HopfAlgebra) -> Self {
        let n = h.dim();
        let mut mult = Vec::new();
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    let c = h.mult_coeff(i, j, k);
                    if !num_traits::Zero::is_zero(c) {
                        mult.push((i, j, k, RationalText::of(c)));
                    }
                }
            }
        }
        let comult = (0..n)
            .flat_map(|i| {
                h.comult(i)
                    .iter()
                    .map(move |(j, k, c)| (i, *j, *k, RationalText::of(c)))
            })
            .collect();
        HopfJson {
            name: Some(h.name().to_string()),
            dim: n,
            basis: Some(h.basis_names().to_vec()),
            mult,
            unit: h.unit().iter().map(RationalText::of).collect(),
            comult,
            counit: h.counit().iter().map(RationalText::of).collect(),
            antipode: (0..n)
                .map(|r| h.antipode().row(r).iter().map(RationalText::of).collect())
                .collect(),
        }
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct GroupJson {
    pub elements: Vec<String>,
    pub table: Vec<Vec<usize>>,
}

impl GroupJson {
    pub fn to_group(&self) -> Result<Group> {
        Group::new(self.elements.clone(), self.table.clone())
    }

    pub fn from_group(g: &Group) -> Self {
        GroupJson {
            elements: g.names().to_vec(),
            table: g.table().to_vec(),
        }
    }
}

/// Either format of Hopf input: `hopf-v1`, or `group-v1` read as its group
/// algebra.
pub enum HopfInput {
    Hopf(HopfJson),
    Group(GroupJson),
}

pub fn parse_hopf_input(text: &str) -> Result<HopfInput> {
    let value: Value = serde_json::from_str(text)?;
    hopf_input_from_value(value)
}

fn hopf_input_from_value(value: Value) -> Result<HopfInput> {
    if value.get("elements").is_some() {
        Ok(HopfInput::Group(serde_json::from_value(value)?))
    } else {
        Ok(HopfInput::Hopf(serde_json::from_value(value)?))
    }
}

impl HopfInput {
    pub fn into_algebra(self, default_name: &str) -> Result<HopfAlgebra> {
        match self {
            HopfInput::Hopf(j) => {
                let name = j.name.clone().unwrap_or_else(|| default_name.to_string());
                HopfAlgebra::new(name, j.to_data()?)
            }
            HopfInput::Group(g) => crate::hopf::group_algebra(&g.to_group()?),
        }
    }
}

/// `hopfmap-v1`; `source` and `target` are inline `hopf-v1`/`group-v1`
/// objects or builtin names.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct HopfMapJson {
    pub source: Value,
    pub target: Value,
    pub matrix: Vec<Vec<RationalText>>,
}

pub fn resolve_hopf_ref(v: &Value) -> Result<Arc<HopfAlgebra>> {
    match v {
        Value::String(name) => crate::builtins::hopf(name),
        other => Ok(Arc::new(
            hopf_input_from_value(other.clone())?.into_algebra("inline")?,
        )),
    }
}

impl HopfMapJson {
    /// Resolves both ends; `source` is replaced by `expected_source` when
    /// they agree, so modules built later share the caller's algebra.
    pub fn to_map(&self, expected_source: Option<&Arc<HopfAlgebra>>) -> Result<HopfMap> {
        let mut source = resolve_hopf_ref(&self.source)?;
        if let Some(s) = expected_source {
            if **s != *source {
                return Err(Error::AlgebraMismatch);
            }
            source = s.clone();
        }
        let target = resolve_hopf_ref(&self.target)?;
        let m = matrix(&self.matrix, None)?;
        if m.shape() != (target.dim(), source.dim()) {
            return Err(Error::Shape(format!(
                "map matrix is {}x{}, expected {}x{}",
                m.rows(),
                m.cols(),
                target.dim(),
                source.dim()
            )));
        }
        HopfMap::new(source, target, m)
    }

    pub fn from_map(p: &HopfMap, source_ref: Value, target_ref: Value) -> Self {
        HopfMapJson {
            source: source_ref,
            target: target_ref,
            matrix: (0..p.matrix().rows())
                .map(|r| p.matrix().row(r).iter().map(RationalText::of).collect())
                .collect(),
        }
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct HModJson {
    pub algebra: Value,
    pub dim: usize,
    pub action: Vec<Vec<Vec<RationalText>>>,
}

impl HModJson {
    pub fn to_module(&self, algebra: &Arc<HopfAlgebra>) -> Result<HModule> {
        let action = self
            .action
            .iter()
            .map(|m| {
                if m.len() != self.dim {
                    return Err(Error::Parse("action matrix has wrong size".into()));
                }
                matrix(m, Some(self.dim))
            })
            .collect::<Result<Vec<_>>>()?;
        HModule::new(algebra.clone(), action, "M")
    }

    pub fn from_module(m: &HModule, algebra_ref: Value) -> Self {
        HModJson {
            algebra: algebra_ref,
            dim: m.dim(),
            action: m
                .action()
                .iter()
                .map(|a| {
                    (0..a.rows())
                        .map(|r| a.row(r).iter().map(RationalText::of).collect())
                        .collect()
                })
                .collect(),
        }
    }
}

#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
pub struct ValidationJson {
    #[serde(rename = "X")]
    pub object: String,
    pub dim: usize,
    pub pass: bool,
}

#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
pub struct EndJson {
    pub schema: &'static str,
    pub dim_ambient: usize,
    pub dim_end: usize,
    pub basis: Vec<Vec<String>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub relative_to: Option<String>,
    pub validations: Vec<ValidationJson>,
}

impl EndJson {
    pub fn new(e: &EndObject, relative_to: Option<String>) -> Self {
        EndJson {
            schema: "end-v1",
            dim_ambient: e.dim_ambient(),
            dim_end: e.dim(),
            basis: e.basis().iter().map(|v| text_vector(v)).collect(),
            relative_to,
            validations: e
                .validations()
                .iter()
                .map(|v| ValidationJson {
                    object: v.object.clone(),
                    dim: v.dim,
                    pass: v.pass,
                })
                .collect(),
        }
    }
}

#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
pub struct ChecksJson {
    pub associative: bool,
    pub unital: bool,
    pub commutative: bool,
    pub connected: bool,
    pub natural: bool,
    pub hexagon_sampled: bool,
    pub dim_formula: bool,
    pub invariants_dim: usize,
}

#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
pub struct AlgebraJson {
    pub schema: &'static str,
    pub dim: usize,
    /// `mult_constants[c][a][b]`: coefficient of `e_c` in `e_a e_b`.
    pub mult_constants: Vec<Vec<Vec<String>>>,
    pub unit: Vec<String>,
    pub checks: ChecksJson,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub model_iso: Option<Vec<Vec<String>>>,
}

impl AlgebraJson {
    pub fn new(a: &CentralAlgebra, model: Option<&ModelReport>) -> Self {
        let c = a.checks();
        AlgebraJson {
            schema: "algebra-v1",
            dim: a.dim(),
            mult_constants: a
                .structure_constants()
                .iter()
                .map(|m| m.iter().map(|r| text_vector(r)).collect())
                .collect(),
            unit: text_vector(a.unit()),
            checks: ChecksJson {
                associative: c.associative,
                unital: c.unital,
                commutative: c.commutative,
                connected: c.connected,
                natural: c.natural,
                hexagon_sampled: c.hexagon_sampled,
                dim_formula: c.dim_formula.unwrap_or(true),
                invariants_dim: c.invariants_dim,
            },
            model_iso: model.map(|m| text_matrix(&m.iso)),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hopf::sweedler;

    #[test]
    fn hopf_round_trip() {
        let h = sweedler();
        let json = serde_json::to_string(&HopfJson::from_algebra(&h)).unwrap();
        assert!(json.contains("\"-1/1\""));
        let back = match parse_hopf_input(&json).unwrap() {
            HopfInput::Hopf(j) => j.to_data().unwrap(),
            HopfInput::Group(_) => panic!("expected hopf-v1"),
        };
        assert_eq!(HopfAlgebra::new("x", back).unwrap(), h);
    }

    #[test]
    fn group_input_becomes_group_algebra() {
        let text = r#"{"elements": ["e", "g"], "table": [[0, 1], [1, 0]]}"#;
        let h = parse_hopf_input(text).unwrap().into_algebra("c2").unwrap();
        assert_eq!(h.dim(), 2);
        assert!(h.is_commutative());
    }

    #[test]
    fn integer_and_text_rationals() {
        assert_eq!(
            RationalText::Int(3).value().unwrap(),
            crate::exactla::int(3)
        );
        assert_eq!(
            RationalText::Text("-2/4".into()).value().unwrap(),
            crate::exactla::frac(-1, 2)
        );
        assert!(RationalText::Text("1/0".into()).value().is_err());
    }

    #[test]
    fn out_of_range_index_is_parse_error() {
        let text = r#"{"dim": 1, "mult": [[0,0,3,"1/1"]], "unit": ["1/1"], "comult": [], "counit": ["1/1"], "antipode": [["1/1"]]}"#;
        let HopfInput::Hopf(j) = parse_hopf_input(text).unwrap() else {
            panic!()
        };
        assert!(matches!(j.to_data(), Err(Error::Parse(_))));
    }

    #[test]
    fn malformed_json_is_parse_error() {
        assert!(matches!(
            parse_hopf_input("{not json"),
            Err(Error::Parse(_))
        ));
    }
}
