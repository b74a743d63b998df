//! Command-line interface: lattice inventories, the orbit census, and
//! symbolic classification of explicit cubic forms.

use crate::census::{
    self, LineType, SingularityConfig, SurfaceModel,
};
use crate::error::{Error, Result};
use crate::exact::hilbert::{hilbert_function, skew_pair_ideal, SkewPairType};
use crate::exact::{fmt_rat, parse_rat, QPoly, Rat};
use crate::geometry::singular::{classify_singular_point, detect_cone, DEFAULT_JET_BOUND};
use crate::geometry::threefold::{eckardt_check, tangent_quadric};
use crate::geometry::{classify_line, conjugate_point, CubicForm, ProjLine, ProjPoint};
use crate::lattice::{
    double_sixes, enumerate_lines, enumerate_roots, six_ways, tritangent_trios, LatticeVector,
};
use crate::weyl::generate_weyl;
use clap::{Parser, Subcommand, ValueEnum};
use serde::Deserialize;
use serde_json::{json, Value};
use std::collections::HashMap;
use std::fmt::Write as _;
use std::path::PathBuf;

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Parser)]
#[command(name = "skewlines", version, about = "Root-system and line combinatorics of cubic surfaces, with exact symbolic classification")]
pub struct Cli {
    /// Output format
    #[arg(long, global = true, value_enum, default_value = "text")]
    format: Format,
    #[command(subcommand)]
    verb: Verb,
}

#[derive(Subcommand)]
enum Verb {
    /// List the 72 roots of the surface lattice
    Roots,
    /// List the 27 line classes
    Lines,
    /// List the 36 double-sixes indexed by root pairs
    DoubleSixes,
    /// List the 45 tritangent trios
    Tritangents,
    /// The 6 skew-pair decompositions of a root
    SixWays {
        /// Root as comma-separated integers in the e-basis
        #[arg(long)]
        root: String,
    },
    /// Order of the Weyl group, by explicit closure
    WeylOrder,
    /// Root orbits under the monodromy subgroup of a singularity type
    Orbits {
        /// Singularity configuration label, e.g. "A1", "2A1+A2", "smooth"
        #[arg(long)]
        config: String,
        /// Report every conjugacy class of embeddings
        #[arg(long)]
        all_embeddings: bool,
    },
    /// Orbit counts for all 21 singularity types
    Table1,
    /// Line orbits, multiplicities, and singularities they pass through
    LineOrbits {
        #[arg(long)]
        config: String,
    },
    /// Census of the four skew-line subscheme types
    SkewCount {
        #[arg(long)]
        config: String,
        /// Line types: "first:all", "second:all", or "idx:first,idx:second,..."
        #[arg(long)]
        line_types: String,
    },
    /// First/second type of a line on an explicit cubic surface
    ClassifyLine {
        #[arg(long)]
        surface: PathBuf,
        #[arg(long)]
        line: PathBuf,
    },
    /// ADE classification of a singular point
    Singularity {
        #[arg(long)]
        surface: PathBuf,
        /// Point as comma-separated rationals
        #[arg(long)]
        point: String,
        #[arg(long, default_value_t = DEFAULT_JET_BOUND)]
        jet_bound: u32,
    },
    /// Cone test at a candidate vertex
    Cone {
        #[arg(long)]
        surface: PathBuf,
        #[arg(long)]
        point: String,
    },
    /// Eckardt-point test on a cubic threefold
    Eckardt {
        #[arg(long)]
        surface: PathBuf,
        #[arg(long)]
        point: String,
    },
    /// Tangent hyperplane/quadric pair of the threefold normal form
    Quadric {
        #[arg(long)]
        a: String,
        #[arg(long)]
        b: String,
    },
    /// Hilbert function of the skew-pair subscheme ideals
    HilbertPoly {
        /// Restrict to one type: I, II, III, or IV
        #[arg(long)]
        ideal: Option<String>,
        /// Restrict to one degree
        #[arg(long)]
        degree: Option<u32>,
    },
    /// Conjugate point under the dual map along a line
    Conjugate {
        #[arg(long)]
        surface: PathBuf,
        #[arg(long)]
        line: PathBuf,
        #[arg(long)]
        point: String,
    },
}

/// Parses the command line, runs the verb, and prints the report. Returns
/// the process exit code: 0 on success, 2 on input errors, 3 on internal
/// invariant violations.
pub fn run_cli() -> i32 {
    let cli = Cli::parse();
    match run(&cli.verb, cli.format) {
        Ok(out) => {
            // tolerate a closed pipe on the consumer side
            use std::io::Write;
            let _ = writeln!(std::io::stdout(), "{out}");
            0
        }
        Err(e) => {
            eprintln!("error: {e}");
            match e {
                Error::Invariant(_) => 3,
                _ => 2,
            }
        }
    }
}

fn run(verb: &Verb, format: Format) -> Result<String> {
    let value = match verb {
        Verb::Roots => inventory("roots", enumerate_roots()),
        Verb::Lines => inventory("lines", enumerate_lines()),
        Verb::DoubleSixes => double_sixes_report(),
        Verb::Tritangents => tritangents_report(),
        Verb::SixWays { root } => six_ways_report(root)?,
        Verb::WeylOrder => json!({ "order": generate_weyl().len() }),
        Verb::Orbits {
            config,
            all_embeddings,
        } => orbits_report(config, *all_embeddings)?,
        Verb::Table1 => table1_report()?,
        Verb::LineOrbits { config } => line_orbits_report(config)?,
        Verb::SkewCount { config, line_types } => skew_count_report(config, line_types)?,
        Verb::ClassifyLine { surface, line } => {
            let f = load_cubic(surface)?;
            let l = load_line(line)?;
            json!({ "kind": classify_line(&f, &l)?.to_string() })
        }
        Verb::Singularity {
            surface,
            point,
            jet_bound,
        } => {
            let f = load_cubic(surface)?;
            let p = parse_point(point)?;
            let rep = classify_singular_point(&f, &p, *jet_bound)?;
            json!({
                "multiplicity": rep.multiplicity,
                "hessian_corank": rep.hessian_corank,
                "milnor_number": rep.milnor_number,
                "cubic_pattern": rep.cubic_pattern.to_string(),
                "ade": rep.ade_string(),
                "cone_vertex_candidate": rep.cone_vertex_candidate,
            })
        }
        Verb::Cone { surface, point } => {
            let f = load_cubic(surface)?;
            let p = parse_point(point)?;
            json!({ "kind": detect_cone(&f, &p)?.to_string() })
        }
        Verb::Eckardt { surface, point } => {
            let f = load_cubic(surface)?;
            let p = parse_point(point)?;
            json!({ "eckardt": eckardt_check(&f, &p)? })
        }
        Verb::Quadric { a, b } => {
            let (h, q) = tangent_quadric(&parse_rat(a)?, &parse_rat(b)?)?;
            json!({ "hyperplane": h.to_string(), "quadric": q.to_string() })
        }
        Verb::HilbertPoly { ideal, degree } => hilbert_report(ideal.as_deref(), *degree)?,
        Verb::Conjugate {
            surface,
            line,
            point,
        } => {
            let f = load_cubic(surface)?;
            let l = load_line(line)?;
            let p = parse_point(point)?;
            let q = conjugate_point(&f, &l, &p)?;
            json!({ "point": point_json(&q) })
        }
    };
    Ok(match format {
        Format::Json => serde_json::to_string_pretty(&value)?,
        Format::Text => render_text(&value),
    })
}

// ---------------------------------------------------------------- reports

fn vec_json(v: &LatticeVector) -> Value {
    json!(v.0.to_vec())
}

fn point_json(p: &ProjPoint) -> Value {
    json!(p.coords().iter().map(fmt_rat).collect::<Vec<_>>())
}

fn inventory(key: &str, items: &[LatticeVector]) -> Value {
    json!({
        "count": items.len(),
        key: items.iter().map(vec_json).collect::<Vec<_>>(),
    })
}

fn double_sixes_report() -> Value {
    let entries: Vec<Value> = double_sixes()
        .iter()
        .map(|(root, first, second)| {
            json!({
                "root": vec_json(root),
                "sextuple": first.iter().map(vec_json).collect::<Vec<_>>(),
                "complement": second.iter().map(vec_json).collect::<Vec<_>>(),
            })
        })
        .collect();
    json!({ "count": entries.len(), "double_sixes": entries })
}

fn tritangents_report() -> Value {
    let entries: Vec<Value> = tritangent_trios()
        .iter()
        .map(|trio| json!(trio.iter().map(vec_json).collect::<Vec<_>>()))
        .collect();
    json!({ "count": entries.len(), "tritangents": entries })
}

fn six_ways_report(root: &str) -> Result<Value> {
    let alpha = parse_lattice_vector(root)?;
    let pairs: Vec<Value> = six_ways(&alpha)?
        .iter()
        .map(|(b1, b2)| json!({ "beta1": vec_json(b1), "beta2": vec_json(b2) }))
        .collect();
    Ok(json!({ "root": vec_json(&alpha), "count": pairs.len(), "pairs": pairs }))
}

fn orbits_report(config: &str, all_embeddings: bool) -> Result<Value> {
    let cfg = SingularityConfig::parse(config)?;
    if all_embeddings {
        let classes: Vec<Value> = census::embedding_classes(&cfg)?
            .iter()
            .enumerate()
            .map(|(i, c)| {
                json!({
                    "class": i,
                    "embeddings": c.num_embeddings,
                    "orbits": c.orbit_count,
                    "geometric": c.geometric,
                })
            })
            .collect();
        return Ok(json!({ "config": cfg.label(), "classes": classes }));
    }
    let model = SurfaceModel::new(cfg.clone())?;
    let census = census::root_census(&model)?;
    let orbits: Vec<Value> = census
        .orbits
        .iter()
        .zip(&census.in_effective)
        .zip(&census.maximal_root)
        .map(|((orbit, eff), max)| {
            json!({
                "size": orbit.len(),
                "representative": vec_json(&orbit[0]),
                "in_effective": eff,
                "maximal_root": max.as_ref().map(vec_json),
            })
        })
        .collect();
    Ok(json!({
        "config": cfg.label(),
        "subgroup_order": census.subgroup_order,
        "orbit_count": orbits.len(),
        "orbits": orbits,
    }))
}

fn table1_report() -> Result<Value> {
    let rows: Vec<Value> = census::table1()?
        .iter()
        .map(|(cfg, roman, count)| {
            json!({ "config": cfg.label(), "type": roman, "count": count })
        })
        .collect();
    Ok(json!({ "rows": rows }))
}

fn line_orbits_report(config: &str) -> Result<Value> {
    let cfg = SingularityConfig::parse(config)?;
    let model = SurfaceModel::new(cfg.clone())?;
    let orbits: Vec<Value> = census::line_orbits(&model)?
        .iter()
        .enumerate()
        .map(|(i, o)| {
            json!({
                "orbit": i,
                "representative": vec_json(&o.representative),
                "multiplicity": o.multiplicity,
                "through": o.through,
                "members": o.members.iter().map(vec_json).collect::<Vec<_>>(),
            })
        })
        .collect();
    Ok(json!({ "config": cfg.label(), "orbit_count": orbits.len(), "orbits": orbits }))
}

fn skew_count_report(config: &str, line_types: &str) -> Result<Value> {
    let cfg = SingularityConfig::parse(config)?;
    let model = SurfaceModel::new(cfg.clone())?;
    let n = census::line_orbits(&model)?.len();
    let types = parse_line_types(line_types, n)?;
    let rep = census::skew_hilbert_count(&model, &types)?;
    Ok(json!({
        "config": cfg.label(),
        "I": rep.type_i,
        "II": rep.type_ii,
        "III": rep.type_iii,
        "IV": rep.type_iv,
        "total": rep.total,
    }))
}

fn hilbert_report(ideal: Option<&str>, degree: Option<u32>) -> Result<Value> {
    let types: Vec<SkewPairType> = match ideal {
        None => SkewPairType::ALL.to_vec(),
        Some(s) => vec![parse_ideal_type(s)?],
    };
    let degrees: Vec<u32> = match degree {
        None => (1..=6).collect(),
        Some(d) => vec![d],
    };
    let entries: Vec<Value> = types
        .iter()
        .map(|&t| -> Result<Value> {
            let gens = skew_pair_ideal(t);
            let values: Vec<Value> = degrees
                .iter()
                .map(|&d| -> Result<Value> {
                    Ok(json!({ "degree": d, "value": hilbert_function(&gens, d)? }))
                })
                .collect::<Result<_>>()?;
            Ok(json!({ "type": t.label(), "values": values }))
        })
        .collect::<Result<_>>()?;
    Ok(json!({ "ideals": entries }))
}

// ----------------------------------------------------------------- inputs

fn parse_lattice_vector(text: &str) -> Result<LatticeVector> {
    let parts: Vec<i64> = text
        .split(',')
        .map(|s| {
            s.trim()
                .parse::<i64>()
                .map_err(|_| Error::InvalidInput(format!("bad integer '{}'", s.trim())))
        })
        .collect::<Result<_>>()?;
    let arr: [i64; 7] = parts
        .try_into()
        .map_err(|_| Error::InvalidInput("expected 7 comma-separated integers".into()))?;
    Ok(LatticeVector(arr))
}

fn parse_point(text: &str) -> Result<ProjPoint> {
    let coords: Vec<Rat> = text
        .split(',')
        .map(|s| parse_rat(s.trim()))
        .collect::<Result<_>>()?;
    ProjPoint::new(coords)
}

fn parse_line_types(spec: &str, num_orbits: usize) -> Result<HashMap<usize, LineType>> {
    let all = |t: LineType| (0..num_orbits).map(|i| (i, t)).collect();
    match spec {
        "first:all" => return Ok(all(LineType::First)),
        "second:all" => return Ok(all(LineType::Second)),
        _ => {}
    }
    let mut out = HashMap::new();
    for part in spec.split(',') {
        let (idx, kind) = part
            .split_once(':')
            .ok_or_else(|| Error::InvalidInput(format!("bad line-type entry '{part}'")))?;
        let idx: usize = idx
            .trim()
            .parse()
            .map_err(|_| Error::InvalidInput(format!("bad orbit index '{idx}'")))?;
        let kind = match kind.trim() {
            "first" => LineType::First,
            "second" => LineType::Second,
            other => {
                return Err(Error::InvalidInput(format!("unknown line type '{other}'")));
            }
        };
        out.insert(idx, kind);
    }
    Ok(out)
}

fn parse_ideal_type(s: &str) -> Result<SkewPairType> {
    SkewPairType::ALL
        .into_iter()
        .find(|t| t.label().eq_ignore_ascii_case(s))
        .ok_or_else(|| Error::InvalidInput(format!("unknown ideal type '{s}'")))
}

#[derive(Deserialize)]
struct CubicFile {
    vars: Vec<String>,
    terms: Vec<TermFile>,
}

#[derive(Deserialize)]
struct TermFile {
    exp: Vec<u32>,
    coeff: String,
}

#[derive(Deserialize)]
struct LineFile {
    points: Vec<Vec<String>>,
}

pub fn load_cubic(path: &PathBuf) -> Result<CubicForm> {
    let data: CubicFile = serde_json::from_str(&std::fs::read_to_string(path)?)?;
    let vars: Vec<&str> = data.vars.iter().map(|s| s.as_str()).collect();
    let mut poly = QPoly::zero(&vars);
    for term in &data.terms {
        if term.exp.len() != vars.len() {
            return Err(Error::InvalidInput(format!(
                "term exponent length {} does not match {} variables",
                term.exp.len(),
                vars.len()
            )));
        }
        poly.add_term(term.exp.clone(), parse_rat(&term.coeff)?);
    }
    CubicForm::new(poly)
}

pub fn load_line(path: &PathBuf) -> Result<ProjLine> {
    let data: LineFile = serde_json::from_str(&std::fs::read_to_string(path)?)?;
    if data.points.len() != 2 {
        return Err(Error::InvalidInput(format!(
            "line file has {} points; expected 2",
            data.points.len()
        )));
    }
    let mut points = data.points.iter().map(|coords| {
        ProjPoint::new(
            coords
                .iter()
                .map(|s| parse_rat(s))
                .collect::<Result<Vec<Rat>>>()?,
        )
    });
    ProjLine::new(points.next().unwrap()?, points.next().unwrap()?)
}

// ------------------------------------------------------------ text output

/// Flat, deterministic text rendering of a report value: scalars inline,
/// one line per list entry, nested objects as "key: value" fields.
fn render_text(value: &Value) -> String {
    let mut out = String::new();
    render_value(value, "", &mut out);
    out.trim_end().to_string()
}

fn render_value(value: &Value, indent: &str, out: &mut String) {
    match value {
        Value::Object(map) => {
            for (k, v) in map {
                match v {
                    Value::Array(items) if items.iter().any(|i| !i.is_number()) => {
                        let _ = writeln!(out, "{indent}{k}:");
                        for item in items {
                            render_list_item(item, &format!("{indent}  "), out);
                        }
                    }
                    Value::Object(_) => {
                        let _ = writeln!(out, "{indent}{k}:");
                        render_value(v, &format!("{indent}  "), out);
                    }
                    _ => {
                        let _ = writeln!(out, "{indent}{k}: {}", render_scalar(v));
                    }
                }
            }
        }
        other => {
            let _ = writeln!(out, "{indent}{}", render_scalar(other));
        }
    }
}

fn render_list_item(item: &Value, indent: &str, out: &mut String) {
    match item {
        Value::Object(map) => {
            let fields: Vec<String> = map
                .iter()
                .map(|(k, v)| format!("{k}={}", render_scalar(v)))
                .collect();
            let _ = writeln!(out, "{indent}{}", fields.join(" "));
        }
        other => {
            let _ = writeln!(out, "{indent}{}", render_scalar(other));
        }
    }
}

fn render_scalar(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Array(items) => {
            let parts: Vec<String> = items.iter().map(render_scalar).collect();
            format!("[{}]", parts.join(","))
        }
        Value::Null => "-".into(),
        other => other.to_string(),
    }
}
