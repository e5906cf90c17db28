//! Command-line interface. Exit codes: 0 success, 1 a check failed,
//! 2 bad input.

use std::ffi::OsString;
use std::io::Write;
use std::path::Path;
use std::sync::Arc;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};

use crate::adjoint::{
    build_algebra, comparison_maps, is_algebra_map, verify_coinvariant_model_for, verify_deligne,
    CentralAlgebra,
};
use crate::builtins;
use crate::ends::{end_at_generator, relative_end_with_depth, validation_depth_from_env};
use crate::error::{Error, Result};
use crate::exactla::format_scalar;
use crate::hopf::{check_axioms, HopfAlgebra, HopfMap};
use crate::schema::{parse_hopf_input, text_matrix, AlgebraJson, EndJson, HopfInput, HopfMapJson};
use crate::verify::{run_suite, Options, Suite};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Text,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SuiteArg {
    Fast,
    All,
}

#[derive(Debug, Parser)]
#[command(
    name = "relend",
    version,
    about = "Adjoint and relative adjoint algebras of Rep(H) in exact arithmetic"
)]
pub struct Cli {
    #[arg(long, value_enum, default_value = "json", global = true)]
    pub format: Format,
    /// Extra validation objects for relative ends (default: RELEND_VALIDATION_DEPTH or 3).
    #[arg(long, global = true)]
    pub validation_depth: Option<usize>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, clap::Args)]
pub struct HopfSource {
    /// hopf-v1 or group-v1 file.
    pub file: Option<String>,
    /// Builtin Hopf algebra name.
    #[arg(long, conflicts_with = "file")]
    pub builtin: Option<String>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Check the Hopf algebra axioms.
    Check {
        #[command(flatten)]
        source: HopfSource,
    },
    /// Ordinary adjoint algebra.
    Adjoint {
        #[command(flatten)]
        source: HopfSource,
        /// Also test simplicity over itself.
        #[arg(long)]
        simple: bool,
    },
    /// Adjoint algebra relative to Rep(Q) for a Hopf quotient H → Q.
    Relative {
        #[command(flatten)]
        source: HopfSource,
        /// hopfmap-v1 file or builtin quotient name.
        #[arg(long, conflicts_with = "normal_subgroup")]
        quotient: Option<String>,
        /// Normal subgroup of a builtin group algebra (alias or `{a,b,..}`).
        #[arg(long)]
        normal_subgroup: Option<String>,
        #[arg(long)]
        simple: bool,
    },
    /// Deligne factorization or a tower of normal subgroups.
    Compare {
        #[arg(long, num_args = 2, value_names = ["H1", "H2"], conflicts_with = "tower")]
        deligne: Option<Vec<String>>,
        /// Group followed by normal subgroups.
        #[arg(long, num_args = 2.., value_names = ["GROUP", "N"])]
        tower: Option<Vec<String>>,
    },
    /// Run the acceptance suite.
    Verify {
        #[arg(long, value_enum, default_value = "fast")]
        suite: SuiteArg,
        #[arg(long, hide = true)]
        break_convention: bool,
    },
}

/// Report plus exit status.
struct Outcome {
    json: Value,
    text: String,
    ok: bool,
}

fn to_value<T: Serialize>(x: &T) -> Value {
    serde_json::to_value(x).expect("report types serialize")
}

fn read_file(path: &str) -> Result<String> {
    std::fs::read_to_string(path).map_err(|e| Error::Parse(format!("{path}: {e}")))
}

fn load_hopf(source: &HopfSource) -> Result<(String, Arc<HopfAlgebra>)> {
    match (&source.builtin, &source.file) {
        (Some(name), _) => Ok((name.clone(), builtins::hopf(name)?)),
        (None, Some(path)) => {
            let input = parse_hopf_input(&read_file(path)?)?;
            Ok((path.clone(), Arc::new(input.into_algebra(path)?)))
        }
        (None, None) => Err(Error::Parse("give a file or --builtin".into())),
    }
}

fn depth(cli_depth: Option<usize>) -> usize {
    cli_depth.unwrap_or_else(validation_depth_from_env)
}

fn cmd_check(source: &HopfSource) -> Result<Outcome> {
    let (label, data) = match (&source.builtin, &source.file) {
        (Some(name), _) => (name.clone(), builtins::hopf(name)?.data().clone()),
        (None, Some(path)) => match parse_hopf_input(&read_file(path)?)? {
            HopfInput::Hopf(j) => (path.clone(), j.to_data()?),
            HopfInput::Group(g) => (
                path.clone(),
                crate::hopf::group_algebra(&g.to_group()?)?.data().clone(),
            ),
        },
        (None, None) => return Err(Error::Parse("give a file or --builtin".into())),
    };
    let report = check_axioms(&data);
    let axioms: Vec<Value> = report
        .checks
        .iter()
        .map(|c| json!({"name": c.name, "pass": c.pass, "detail": c.detail}))
        .collect();
    let ok = report.all_pass();
    Ok(Outcome {
        json: json!({"hopf": label, "dim": data.dim, "axioms": axioms, "pass": ok}),
        text: format!("{label} (dim {})\n{report}", data.dim),
        ok,
    })
}

fn algebra_text(title: &str, a: &CentralAlgebra) -> String {
    let c = a.checks();
    let mut s = format!(
        "{title}\n  dim end      {}\n  dim ambient  {}\n",
        a.dim(),
        a.carrier().dim_ambient()
    );
    for (label, v) in [
        ("associative", c.associative),
        ("unital", c.unital),
        ("commutative", c.commutative),
        ("connected", c.connected),
        ("natural", c.natural),
        ("hexagon", c.hexagon_sampled),
    ] {
        s += &format!("  {label:<12} {v}\n");
    }
    if let Some(d) = c.dim_formula {
        s += &format!("  {:<12} {d}\n", "dim formula");
    }
    for v in a.carrier().validations() {
        s += &format!("  validation   {} (dim {}): {}\n", v.object, v.dim, v.pass);
    }
    let k = a.dim();
    s += "  products (row a, column b: coordinates of e_a e_b)\n";
    for x in 0..k {
        let row: Vec<String> = (0..k)
            .map(|y| {
                let v: Vec<String> = a
                    .mult()
                    .column(x * k + y)
                    .iter()
                    .map(format_scalar)
                    .collect();
                format!("[{}]", v.join(" "))
            })
            .collect();
        s += &format!("    {}\n", row.join(" "));
    }
    let unit: Vec<String> = a.unit().iter().map(format_scalar).collect();
    s += &format!("  unit [{}]\n", unit.join(" "));
    s
}

fn simple_value(a: &CentralAlgebra, enabled: bool) -> Result<Option<Value>> {
    if !enabled {
        return Ok(None);
    }
    let (simple, caveat) = crate::adjoint::check_simple_over_self(a)?;
    Ok(Some(json!({"simple": simple, "field_caveat": caveat})))
}

fn cmd_adjoint(source: &HopfSource, simple: bool) -> Result<Outcome> {
    let (label, h) = load_hopf(source)?;
    let a = build_algebra(end_at_generator(&h)?)?;
    let mut json = json!({
        "hopf": label,
        "end": to_value(&EndJson::new(a.carrier(), None)),
        "algebra": to_value(&AlgebraJson::new(&a, None)),
    });
    let mut text = algebra_text(&format!("adjoint algebra of {label}"), &a);
    if let Some(s) = simple_value(&a, simple)? {
        text += &format!("  simple       {}\n", s["simple"]);
        json["simplicity"] = s;
    }
    Ok(Outcome {
        json,
        text,
        ok: a.checks().all_pass(),
    })
}

fn load_quotient(h: &Arc<HopfAlgebra>, spec: &str) -> Result<(String, HopfMap)> {
    let p = if Path::new(spec).is_file() {
        let j: HopfMapJson = serde_json::from_str(&read_file(spec)?)?;
        j.to_map(Some(h))?
    } else {
        let p = builtins::quotient(spec)?;
        if **p.source() != **h {
            return Err(Error::AlgebraMismatch);
        }
        HopfMap::new(h.clone(), p.target().clone(), p.matrix().clone())?
    };
    Ok((spec.to_string(), p))
}

fn cmd_relative(
    source: &HopfSource,
    quotient: Option<&str>,
    normal: Option<&str>,
    simple: bool,
    depth: usize,
) -> Result<Outcome> {
    let (label, h) = load_hopf(source)?;
    let (qlabel, p) = match (quotient, normal) {
        (Some(q), _) => load_quotient(&h, q)?,
        (None, Some(n)) => {
            let group_name = source
                .builtin
                .as_deref()
                .ok_or_else(|| Error::Parse("--normal-subgroup needs --builtin GROUP".into()))?;
            let p = builtins::group_quotient(group_name, n)?;
            (format!("{group_name}/{n}"), p)
        }
        (None, None) => return Err(Error::Parse("give --quotient or --normal-subgroup".into())),
    };
    let a = build_algebra(relative_end_with_depth(&h, &p, depth)?)?;
    let model = verify_coinvariant_model_for(&a, &h, &p)?;
    let mut json = json!({
        "hopf": label,
        "quotient": {"name": qlabel, "dim_source": h.dim(), "dim_target": p.target().dim()},
        "end": to_value(&EndJson::new(a.carrier(), Some(qlabel.clone()))),
        "algebra": to_value(&AlgebraJson::new(&a, Some(&model))),
    });
    let mut text = algebra_text(
        &format!("adjoint algebra of {label} relative to {qlabel}"),
        &a,
    );
    text += &format!("  coinvariant model: isomorphic (dim {})\n", model.dim);
    if let Some(s) = simple_value(&a, simple)? {
        text += &format!("  simple       {}\n", s["simple"]);
        json["simplicity"] = s;
    }
    Ok(Outcome {
        json,
        text,
        ok: a.checks().all_pass() && model.pass(),
    })
}

fn cmd_deligne(names: &[String]) -> Result<Outcome> {
    let load = |s: &str| -> Result<Arc<HopfAlgebra>> {
        if Path::new(s).is_file() {
            Ok(Arc::new(parse_hopf_input(&read_file(s)?)?.into_algebra(s)?))
        } else {
            builtins::hopf(s)
        }
    };
    let (h1, h2) = (load(&names[0])?, load(&names[1])?);
    let (ok, detail, iso) = match verify_deligne(&h1, &h2) {
        Ok(r) => (
            r.pass(),
            format!("dim {}", r.dim),
            Some(text_matrix(&r.iso)),
        ),
        Err(Error::ModelMismatch(m)) => (false, m, None),
        Err(e) => return Err(e),
    };
    Ok(Outcome {
        json: json!({"deligne": [names[0], names[1]], "pass": ok, "detail": detail, "iso": iso}),
        text: format!(
            "Deligne factorization {}⊗{} over {}: {} ({detail})\n",
            names[0],
            names[1],
            names[0],
            if ok { "pass" } else { "FAIL" }
        ),
        ok,
    })
}

fn cmd_tower(args: &[String], depth: usize) -> Result<Outcome> {
    let group_name = &args[0];
    let g = builtins::group(group_name)?;
    let mut normals: Vec<String> = args[1..].to_vec();
    let mut subsets = Vec::new();
    for n in &normals {
        let s = builtins::subgroup(&g, n)?;
        g.check_normal(&s)?;
        subsets.push(s);
    }
    if !subsets.iter().any(|s| s.len() == g.order()) {
        normals.push("G".into());
        subsets.push((0..g.order()).collect());
    }
    let refs: Vec<&str> = normals.iter().map(String::as_str).collect();
    let levels = crate::verify::tower(group_name, &refs, depth)?;
    let mut ok = true;
    let mut entries = Vec::new();
    let mut text = format!("tower over {group_name}\n");
    for (n, a) in &levels {
        let p = builtins::group_quotient(group_name, n)?;
        let c = comparison_maps(p.source(), &p)?;
        ok &= c.all_pass() && a.checks().all_pass();
        text += &format!(
            "  N={n:<10} carrier dim {}  q∘ι=u∘α₁ {}  ι algebra map {}  q algebra map {}\n",
            a.dim(),
            c.identity_holds,
            c.iota_algebra_map,
            c.q_algebra_map
        );
        entries.push(json!({
            "normal_subgroup": n,
            "dim": a.dim(),
            "comparison_identity": c.identity_holds,
            "iota_algebra_map": c.iota_algebra_map,
            "q_algebra_map": c.q_algebra_map,
        }));
    }
    let mut nesting = Vec::new();
    for (i, w) in levels.windows(2).enumerate() {
        let (coarse, fine) = (&w[0], &w[1]);
        let nested = match crate::ends::restriction_mono(fine.1.carrier(), coarse.1.carrier()) {
            Ok(iota) => is_algebra_map(&iota, &fine.1, &coarse.1),
            Err(Error::NotNested(_)) => false,
            Err(e) => return Err(e),
        };
        ok &= nested;
        text += &format!(
            "  {} ⊇ {}: {}\n",
            coarse.1.dim(),
            fine.1.dim(),
            if nested {
                "nested algebra inclusion"
            } else {
                "NOT nested"
            }
        );
        nesting.push(
            json!({"index": i, "coarse": coarse.0, "fine": fine.0, "nested_algebra_map": nested}),
        );
    }
    Ok(Outcome {
        json: json!({"tower": group_name, "levels": entries, "nesting": nesting, "pass": ok}),
        text,
        ok,
    })
}

fn cmd_verify(suite: SuiteArg, broken: bool, depth: Option<usize>) -> Result<Outcome> {
    let suite = match suite {
        SuiteArg::Fast => Suite::Fast,
        SuiteArg::All => Suite::All,
    };
    let results = run_suite(
        suite,
        Options {
            broken_convention: broken,
            validation_depth: depth,
        },
    )?;
    let ok = results.iter().all(|r| r.pass);
    let mut text = String::new();
    for r in &results {
        text += &format!(
            "[{}] criterion {:>2} {:<38} {:>8.2?}  {}\n",
            if r.pass { "PASS" } else { "FAIL" },
            r.id,
            r.name,
            r.elapsed,
            r.detail
        );
    }
    let failing: Vec<u8> = results.iter().filter(|r| !r.pass).map(|r| r.id).collect();
    let criteria: Vec<Value> = results
        .iter()
        .map(|r| json!({"id": r.id, "name": r.name, "pass": r.pass, "detail": r.detail}))
        .collect();
    Ok(Outcome {
        json: json!({
            "suite": if suite == Suite::Fast { "fast" } else { "all" },
            "criteria": criteria,
            "failing": failing,
            "pass": ok,
        }),
        text,
        ok,
    })
}

fn dispatch(cli: &Cli) -> Result<Outcome> {
    let d = depth(cli.validation_depth);
    match &cli.command {
        Command::Check { source } => cmd_check(source),
        Command::Adjoint { source, simple } => cmd_adjoint(source, *simple),
        Command::Relative {
            source,
            quotient,
            normal_subgroup,
            simple,
        } => cmd_relative(
            source,
            quotient.as_deref(),
            normal_subgroup.as_deref(),
            *simple,
            d,
        ),
        Command::Compare { deligne, tower } => match (deligne, tower) {
            (Some(names), _) => cmd_deligne(names),
            (None, Some(args)) => cmd_tower(args, d),
            (None, None) => Err(Error::Parse(
                "give --deligne H1 H2 or --tower GROUP N..".into(),
            )),
        },
        Command::Verify {
            suite,
            break_convention,
        } => cmd_verify(*suite, *break_convention, cli.validation_depth),
    }
}

/// Runs one invocation and returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = if code == 0 {
                write!(out, "{e}")
            } else {
                write!(err, "{e}")
            };
            return code;
        }
    };
    match dispatch(&cli) {
        Ok(o) => {
            let _ = match cli.format {
                Format::Json => writeln!(
                    out,
                    "{}",
                    serde_json::to_string_pretty(&o.json).expect("json")
                ),
                Format::Text => write!(out, "{}", o.text),
            };
            i32::from(!o.ok)
        }
        Err(e) => {
            let code = if e.is_input_error() { 2 } else { 1 };
            if cli.format == Format::Json {
                let body = json!({"error": {"kind": e.kind(), "message": e.to_string()}});
                let _ = writeln!(
                    out,
                    "{}",
                    serde_json::to_string_pretty(&body).expect("json")
                );
            }
            let _ = writeln!(err, "error: {e}");
            code
        }
    }
}
