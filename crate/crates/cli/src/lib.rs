//! Argument handling and report rendering for the `toric` binary.

use std::fmt::Write as _;
use std::io::Read;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};
use thiserror::Error;

use toric_core::gallery::{self, canonical};
use toric_core::groebner::hilbert::DEFAULT_S_MAX;
use toric_core::groebner::radical::DEFAULT_K_MAX;
use toric_core::groebner::toric::lattice_basis_binomials;
use toric_core::groebner::{
    minimal_generators, radical_membership_bounded, toric_ideal, Binomial, HilbertFunction, RadicalVerdict, TermOrder,
};
use toric_core::lattice::{Configuration, LatticeBinomial};
use toric_core::polyhedral::{
    ehrhart_polynomial, face_poset, normal_fans_equal, normalized_volume, regular_triangulation, CountLattice,
};
use toric_core::semigroup::{
    is_hereditarily_normal, is_normal, is_normal_projective, is_smooth, is_unimodular, semigroup_report,
};
use toric_core::sets::{circuits, degree_bound_report, graver, lawrence, universal_groebner_basis, UgbMode};
use toric_core::ToricError;

pub const EXIT_MISMATCH: i32 = 1;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_CAP: i32 = 3;

#[derive(Debug, Error)]
pub enum CliError {
    #[error(transparent)]
    Toric(#[from] ToricError),
    #[error("cannot read `{path}`: {source}")]
    Io { path: String, source: std::io::Error },
    #[error("{0}")]
    Usage(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Toric(ToricError::CapExceeded { .. } | ToricError::Instability { .. } | ToricError::Overflow(_)) => {
                EXIT_CAP
            }
            CliError::Toric(ToricError::Internal(_)) => EXIT_MISMATCH,
            _ => EXIT_INPUT,
        }
    }

    pub fn kind(&self) -> &'static str {
        match self {
            CliError::Toric(e) => e.kind(),
            CliError::Io { .. } => "io",
            CliError::Usage(_) => "usage",
        }
    }

    pub fn to_json(&self) -> Value {
        json!({ "error": self.kind(), "message": self.to_string() })
    }
}

type Result<T> = std::result::Result<T, CliError>;

/// Exact toric ideals, Graver bases, normality and polytope invariants.
///
/// CONFIG is a matrix file (`-` for stdin), a gallery entry `@name`, or a
/// family with parameters such as `@birkhoff:4` or `@hexagon:1,2,3`.
#[derive(Debug, Parser)]
#[command(name = "toric", version, about, long_about = None)]
pub struct Cli {
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    pub json: bool,
    #[command(subcommand)]
    pub cmd: Cmd,
}

#[derive(Debug, Args)]
pub struct OrderArgs {
    /// Term order: `lex`, `grevlex` or `weight:<w1,w2,...>`.
    #[arg(long, default_value = "grevlex")]
    pub order: String,
    /// Variable ranking for the tie-break, most significant first, as
    /// 1-based indices or labels separated by commas.
    #[arg(long)]
    pub tiebreak: Option<String>,
}

#[derive(Debug, Args)]
pub struct UgbArgs {
    /// `exhaustive` or `sampled:K`.
    #[arg(long, default_value = "exhaustive")]
    pub ugb: String,
    /// Seed for sampled orders.
    #[arg(long, default_value_t = 1)]
    pub seed: u64,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum LatticeArg {
    /// The lattice spanned by the configuration.
    Group,
    /// All integer points of the affine span.
    Integer,
}

#[derive(Debug, Subcommand)]
pub enum Cmd {
    /// Lattice basis of ker(A) and its rank.
    Kernel { config: String },
    /// Reduced Gröbner basis of the toric ideal.
    Ideal {
        config: String,
        #[command(flatten)]
        order: OrderArgs,
    },
    /// Minimal generators (requires a positive grading).
    Mingen { config: String },
    /// Circuits, optionally with bounded radical membership of the
    /// minimal generators in the circuit ideal.
    Circuits {
        config: String,
        #[arg(long)]
        radical: bool,
        #[arg(long, default_value_t = DEFAULT_K_MAX)]
        kmax: u32,
    },
    /// Graver basis.
    Graver { config: String },
    /// Universal Gröbner basis.
    Ugb {
        config: String,
        #[command(flatten)]
        ugb: UgbArgs,
    },
    /// Lawrence lifting, printed as a matrix.
    Lawrence { config: String },
    /// Degree of the projective variety: normalized volume of conv(A).
    Degree {
        config: String,
        /// Also print a regular triangulation.
        #[arg(long)]
        triangulation: bool,
        /// Heights for the triangulation, comma separated.
        #[arg(long)]
        weights: Option<String>,
    },
    /// Ehrhart polynomial of conv(A).
    Ehrhart {
        config: String,
        #[arg(long, default_value_t = DEFAULT_S_MAX)]
        smax: usize,
        #[arg(long, value_enum, default_value = "group")]
        lattice: LatticeArg,
    },
    /// Hilbert function and polynomial of C[A].
    Hilbert {
        config: String,
        #[arg(long, default_value_t = DEFAULT_S_MAX)]
        smax: usize,
        /// Number of Hilbert function values to print.
        #[arg(long, default_value_t = 6)]
        values: usize,
    },
    /// Normality of NA with Hilbert basis and witness.
    Normal {
        config: String,
        /// Test the projective variety chart by chart instead.
        #[arg(long)]
        projective: bool,
        /// Print the combined semigroup report.
        #[arg(long, conflicts_with = "projective")]
        full: bool,
    },
    /// Smoothness via freeness of the semigroup.
    Smooth {
        config: String,
        #[arg(long)]
        projective: bool,
    },
    /// Unimodularity via circuits.
    Unimodular { config: String },
    /// Hereditary normality via circuits.
    Hereditary { config: String },
    /// Faces of conv(A).
    Faces { config: String },
    /// Whether two polytopes have the same normal fan.
    #[command(name = "normalfan-eq")]
    NormalfanEq { config: String, other: String },
    /// Degree bounds relating circuits, Gröbner and Graver bases.
    Bounds {
        config: String,
        #[command(flatten)]
        ugb: UgbArgs,
    },
    /// List gallery entries, or show one.
    Gallery { name: Option<String> },
    /// Check the recorded facts of a gallery entry (`all` for every entry).
    Verify {
        name: String,
        /// Only facts whose name contains this text.
        #[arg(long)]
        fact: Option<String>,
    },
}

/// A rendered report and the exit status it implies.
pub struct Output {
    pub json: Value,
    pub text: String,
    pub code: i32,
}

impl Output {
    fn ok(json: Value, text: String) -> Self {
        Output { json, text, code: 0 }
    }
}

pub fn load_config(src: &str) -> Result<Configuration> {
    if let Some(spec) = src.strip_prefix('@') {
        let (name, params) = spec.split_once(':').unwrap_or((spec, ""));
        let params: Vec<i64> = if params.is_empty() {
            vec![]
        } else {
            params
                .split(',')
                .map(|p| p.trim().parse().map_err(|_| CliError::Usage(format!("bad parameter `{p}` in `{src}`"))))
                .collect::<Result<_>>()?
        };
        return Ok(gallery::make_config(name, &params)?);
    }
    let text = if src == "-" {
        let mut s = String::new();
        std::io::stdin().read_to_string(&mut s).map_err(|e| CliError::Io { path: src.into(), source: e })?;
        s
    } else {
        std::fs::read_to_string(src).map_err(|e| CliError::Io { path: src.into(), source: e })?
    };
    Ok(Configuration::parse_matrix_text(&text)?)
}

fn parse_list(s: &str) -> Result<Vec<i64>> {
    s.split(',')
        .map(|t| t.trim().parse().map_err(|_| CliError::Usage(format!("bad integer `{t}` in `{s}`"))))
        .collect()
}

fn parse_perm(s: &str, labels: &[String]) -> Result<Vec<usize>> {
    let n = labels.len();
    let perm: Vec<usize> = s
        .split(',')
        .map(|t| {
            let t = t.trim();
            if let Some(i) = labels.iter().position(|l| l == t) {
                return Ok(i);
            }
            match t.parse::<usize>() {
                Ok(i) if (1..=n).contains(&i) => Ok(i - 1),
                _ => Err(CliError::Usage(format!("unknown variable `{t}` in tie-break"))),
            }
        })
        .collect::<Result<_>>()?;
    let mut sorted = perm.clone();
    sorted.sort_unstable();
    if sorted != (0..n).collect::<Vec<_>>() {
        return Err(CliError::Usage(format!("tie-break must rank all {n} variables exactly once")));
    }
    Ok(perm)
}

pub fn parse_order(args: &OrderArgs, a: &Configuration) -> Result<TermOrder> {
    let n = a.n();
    let perm = match &args.tiebreak {
        Some(t) => parse_perm(t, a.labels())?,
        None => (0..n).collect(),
    };
    match args.order.as_str() {
        "lex" => Ok(TermOrder::lex_perm(perm)),
        "grevlex" => Ok(TermOrder::grevlex_perm(perm)),
        other => {
            let w = other
                .strip_prefix("weight:")
                .or_else(|| other.strip_prefix("weight="))
                .ok_or_else(|| CliError::Usage(format!("unknown order `{other}`")))?;
            let w = parse_list(w)?;
            if w.len() != n {
                return Err(ToricError::DimensionMismatch { left: n, right: w.len() }.into());
            }
            Ok(TermOrder::weight_lex(w, perm))
        }
    }
}

pub fn parse_ugb(args: &UgbArgs) -> Result<UgbMode> {
    match args.ugb.as_str() {
        "exhaustive" => Ok(UgbMode::Exhaustive),
        s => {
            let k = s
                .strip_prefix("sampled:")
                .and_then(|k| k.parse().ok())
                .ok_or_else(|| CliError::Usage(format!("`--ugb` takes exhaustive or sampled:K, got `{s}`")))?;
            Ok(UgbMode::Sampled { orders: k, seed: args.seed })
        }
    }
}

fn lattice_json(v: &[LatticeBinomial], labels: &[String]) -> Value {
    Value::Array(
        v.iter()
            .map(|b| json!({ "binomial": b.format(labels), "vector": b.vector(), "degree": b.degree() }))
            .collect(),
    )
}

fn oriented_json(v: &[Binomial], labels: &[String]) -> Value {
    Value::Array(
        v.iter()
            .map(|b| json!({ "binomial": b.format(labels), "vector": b.to_lattice().vector(), "degree": b.degree() }))
            .collect(),
    )
}

fn lines<T>(v: &[T], f: impl Fn(&T) -> String) -> String {
    v.iter().map(|x| f(x) + "\n").collect()
}

/// Sign-normalized and sorted, the canonical emission order.
fn normalized(v: &[LatticeBinomial]) -> Vec<LatticeBinomial> {
    let mut v: Vec<LatticeBinomial> = v.iter().map(LatticeBinomial::sign_normalized).collect();
    toric_core::sets::sort_binomials(&mut v);
    v
}

fn binomial_set(name: &str, v: &[LatticeBinomial], a: &Configuration) -> Output {
    let v = normalized(v);
    let l = a.labels();
    let maxdeg = toric_core::sets::maxdeg(&v);
    let mut text = format!("# {} {name}, maxdeg {maxdeg}\n", v.len());
    text += &lines(&v, |b| b.format(l));
    Output::ok(json!({ name: lattice_json(&v, l), "count": v.len(), "maxdeg": maxdeg }), text)
}

fn vec_text<T: ToString>(v: &[T]) -> String {
    format!("[{}]", v.iter().map(ToString::to_string).collect::<Vec<_>>().join(", "))
}

fn bool_word(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

pub fn run(cli: &Cli) -> Result<Output> {
    match &cli.cmd {
        Cmd::Kernel { config } => {
            let a = load_config(config)?;
            let basis = lattice_basis_binomials(&a)?;
            let mut text = format!("# rank {} (codim {})\n", basis.len(), a.codim());
            text += &lines(&basis, |b| vec_text(b.vector()));
            Ok(Output::ok(json!({ "rank": basis.len(), "codim": a.codim(), "basis": lattice_json(&basis, a.labels()) }), text))
        }
        Cmd::Ideal { config, order } => {
            let a = load_config(config)?;
            let ord = parse_order(order, &a)?;
            let gb = toric_ideal(&a, &ord)?;
            let l = a.labels();
            let mut text = format!("# reduced Gröbner basis, {} elements, maxdeg {}\n", gb.len(), gb.maxdeg());
            text += &lines(gb.elements(), |b| b.format(l));
            Ok(Output::ok(
                json!({ "order": order.order, "generators": oriented_json(gb.elements(), l), "count": gb.len(), "maxdeg": gb.maxdeg() }),
                text,
            ))
        }
        Cmd::Mingen { config } => {
            let a = load_config(config)?;
            let m = minimal_generators(&a)?;
            let l = a.labels();
            let mut degs: Vec<u64> = m.elements().iter().map(Binomial::degree).collect();
            degs.sort_unstable();
            let mut text = format!("# {} minimal generators, degrees {}\n", m.len(), vec_text(&degs));
            text += &lines(m.elements(), |b| b.format(l));
            Ok(Output::ok(json!({ "generators": oriented_json(m.elements(), l), "degrees": degs }), text))
        }
        Cmd::Circuits { config, radical, kmax } => {
            let a = load_config(config)?;
            let c = circuits(&a)?;
            let mut out = binomial_set("circuits", &c, &a);
            if *radical {
                let m = minimal_generators(&a)?.lattice_binomials();
                let mut rows = vec![];
                let mut inconclusive = 0;
                out.text += &format!("# powers of minimal generators in <circuits> (k <= {kmax})\n");
                for g in &m {
                    let v = radical_membership_bounded(g, &c, *kmax);
                    let word = match v {
                        RadicalVerdict::Yes(k) => format!("yes({k})"),
                        RadicalVerdict::Inconclusive => {
                            inconclusive += 1;
                            "inconclusive".into()
                        }
                    };
                    let _ = writeln!(out.text, "{word}\t{}", g.format(a.labels()));
                    rows.push(json!({ "binomial": g.format(a.labels()), "verdict": v }));
                }
                out.json["radical"] = json!({ "k_max": kmax, "generators": rows, "inconclusive": inconclusive });
            }
            Ok(out)
        }
        Cmd::Graver { config } => {
            let a = load_config(config)?;
            Ok(binomial_set("graver", &graver(&a)?, &a))
        }
        Cmd::Ugb { config, ugb } => {
            let a = load_config(config)?;
            let u = universal_groebner_basis(&a, parse_ugb(ugb)?)?;
            let mut out = binomial_set("ugb", &u.elements, &a);
            out.json["cones"] = json!(u.cones);
            out.json["complete"] = json!(u.complete);
            out.text.insert_str(0, &format!("# {} Gröbner cones{}\n", u.cones, if u.complete { "" } else { " (sampled)" }));
            Ok(out)
        }
        Cmd::Lawrence { config } => {
            let a = load_config(config)?;
            let l = lawrence(&a)?;
            let text = l.to_matrix_text();
            Ok(Output::ok(json!({ "matrix": text, "labels": l.labels() }), text))
        }
        Cmd::Degree { config, triangulation, weights } => {
            let a = load_config(config)?;
            let vol = normalized_volume(&a)?;
            let mut out = Output::ok(json!({ "degree": vol.to_string(), "dim": a.rank() - 1 }), format!("{vol}\n"));
            if *triangulation || weights.is_some() {
                let w = weights.as_deref().map(parse_list).transpose()?;
                let t = regular_triangulation(&a, w.as_deref())?;
                out.json["triangulation"] = serde_json::to_value(&t).expect("serializable");
                for s in &t.simplices {
                    let names: Vec<&str> = s.vertices.iter().map(|&i| a.labels()[i].as_str()).collect();
                    let _ = writeln!(out.text, "{{{}}}\t{}", names.join(","), s.volume);
                }
            }
            Ok(out)
        }
        Cmd::Ehrhart { config, smax, lattice } => {
            let a = load_config(config)?;
            let lat = match lattice {
                LatticeArg::Group => CountLattice::Group,
                LatticeArg::Integer => CountLattice::Integer,
            };
            let e = ehrhart_polynomial(&a, lat, *smax)?;
            let text = format!("{}\ncounts {}\n", e.polynomial, vec_text(&e.counts));
            Ok(Output::ok(serde_json::to_value(&e).expect("serializable"), text))
        }
        Cmd::Hilbert { config, smax, values } => {
            let a = load_config(config)?;
            let h = HilbertFunction::of(&a)?;
            let p = h.polynomial(*smax)?;
            let vals: Vec<String> = (0..*values).map(|s| h.value(s).to_string()).collect();
            let num: Vec<String> = h.series().numerator().iter().map(ToString::to_string).collect();
            let text = format!("{p}\nvalues {}\nnumerator {}\n", vec_text(&vals), vec_text(&num));
            Ok(Output::ok(json!({ "polynomial": p, "values": vals, "numerator": num }), text))
        }
        Cmd::Normal { config, projective, full } => {
            let a = load_config(config)?;
            if *full {
                let r = semigroup_report(&a)?;
                let opt = |b: Option<bool>| b.map_or("n/a", bool_word);
                let text = format!(
                    "pointed {}\nnormal {}\nprojectively_normal {}\nsmooth {}\nunimodular {}\nhereditarily_normal {}\n",
                    bool_word(r.pointed),
                    opt(r.normal),
                    opt(r.projectively_normal),
                    opt(r.smooth),
                    bool_word(r.unimodular),
                    bool_word(r.hereditarily_normal)
                );
                return Ok(Output::ok(serde_json::to_value(&r).expect("serializable"), text));
            }
            if *projective {
                let r = is_normal_projective(&a)?;
                let mut text = format!("normal {}\n", bool_word(r.normal));
                for c in &r.charts {
                    let _ = writeln!(text, "chart {}: normal {}", a.labels()[c.vertex], bool_word(c.normal));
                }
                return Ok(Output::ok(serde_json::to_value(&r).expect("serializable"), text));
            }
            let r = is_normal(&a)?;
            let mut text = format!("normal {}\n# hilbert basis ({})\n", bool_word(r.normal), r.hilbert_basis.len());
            text += &lines(&r.hilbert_basis, |v| vec_text(v));
            if let Some(w) = &r.witness {
                let _ = writeln!(text, "witness {}", vec_text(w));
            }
            Ok(Output::ok(serde_json::to_value(&r).expect("serializable"), text))
        }
        Cmd::Smooth { config, projective } => {
            let a = load_config(config)?;
            let r = is_smooth(&a, *projective)?;
            let text = format!("smooth {}\nnormal {}\n", bool_word(r.smooth), bool_word(r.normal));
            Ok(Output::ok(serde_json::to_value(&r).expect("serializable"), text))
        }
        Cmd::Unimodular { config } => {
            let a = load_config(config)?;
            let r = is_unimodular(&a)?;
            let mut text = format!("unimodular {}\n", bool_word(r.unimodular));
            if let Some(c) = &r.violating_circuit {
                let _ = writeln!(text, "circuit {}", c.format(a.labels()));
            }
            let mut j = serde_json::to_value(&r).expect("serializable");
            j["violating_circuit"] = json!(r.violating_circuit.as_ref().map(|c| c.format(a.labels())));
            Ok(Output::ok(j, text))
        }
        Cmd::Hereditary { config } => {
            let a = load_config(config)?;
            let r = is_hereditarily_normal(&a)?;
            let mut text = format!("hereditarily_normal {}\n", bool_word(r.hereditarily_normal));
            if let Some(c) = &r.violating_circuit {
                let _ = writeln!(text, "circuit {}", c.format(a.labels()));
            }
            let mut j = serde_json::to_value(&r).expect("serializable");
            j["violating_circuit"] = json!(r.violating_circuit.as_ref().map(|c| c.format(a.labels())));
            Ok(Output::ok(j, text))
        }
        Cmd::Faces { config } => {
            let a = load_config(config)?;
            let p = face_poset(&a)?;
            let mut text = format!("f-vector {}\n", vec_text(&p.f_vector));
            for f in p.faces.iter().filter(|f| f.dim >= 0) {
                let names: Vec<&str> = f.vertices.iter().map(|&i| a.labels()[i].as_str()).collect();
                let _ = writeln!(text, "{}\t{{{}}}", f.dim, names.join(","));
            }
            Ok(Output::ok(serde_json::to_value(&p).expect("serializable"), text))
        }
        Cmd::NormalfanEq { config, other } => {
            let (a, b) = (load_config(config)?, load_config(other)?);
            let eq = normal_fans_equal(&a, &b)?;
            Ok(Output::ok(json!({ "equal": eq }), format!("{}\n", bool_word(eq))))
        }
        Cmd::Bounds { config, ugb } => {
            let a = load_config(config)?;
            let r = degree_bound_report(&a, parse_ugb(ugb)?)?;
            let j = serde_json::to_value(&r).expect("serializable");
            let mut text = String::new();
            for (k, v) in j.as_object().expect("object") {
                if k != "checks" {
                    let _ = writeln!(text, "{k} {v}");
                }
            }
            for (k, v) in j["checks"].as_object().expect("object") {
                let _ = writeln!(text, "check {k} {}", v.as_str().unwrap_or_default());
            }
            Ok(Output::ok(j, text))
        }
        Cmd::Gallery { name } => gallery_cmd(name.as_deref()),
        Cmd::Verify { name, fact } => verify_cmd(name, fact.as_deref()),
    }
}

fn gallery_cmd(name: Option<&str>) -> Result<Output> {
    let Some(name) = name else {
        let mut rows = vec![];
        let mut text = String::new();
        for e in gallery::entries() {
            let facts = e.fact_names()?;
            let aliases = if e.aliases.is_empty() { String::new() } else { format!(" ({})", e.aliases.join(", ")) };
            let _ = writeln!(text, "{}{aliases}\t{}\t{} facts", e.name, e.summary, facts.len());
            rows.push(json!({
                "name": e.name, "aliases": e.aliases, "constructor": e.constructor, "summary": e.summary,
                "partial": e.partial, "notes": e.notes, "facts": facts,
            }));
        }
        return Ok(Output::ok(Value::Array(rows), text));
    };
    let e = gallery::entry(name)?;
    let a = e.config()?;
    let facts = e.fact_names()?;
    let mut text = format!("# {}: {}\n# {}\n", e.name, e.summary, e.constructor);
    text += &a.to_matrix_text();
    for n in e.notes {
        let _ = writeln!(text, "# note: {n}");
    }
    if let Some(p) = e.partial {
        let _ = writeln!(text, "# partial: {p}");
    }
    text += &lines(&facts, |f| format!("fact: {f}"));
    Ok(Output::ok(
        json!({
            "name": e.name, "constructor": e.constructor, "matrix": a.to_matrix_text(), "labels": a.labels(),
            "facts": facts, "notes": e.notes, "partial": e.partial,
        }),
        text,
    ))
}

fn verify_cmd(name: &str, fact: Option<&str>) -> Result<Output> {
    let targets = if name == "all" { gallery::entries() } else { vec![gallery::entry(name)?] };
    let mut reports = vec![];
    let mut text = String::new();
    let (mut failed, mut capped) = (false, false);
    for e in targets {
        let r = e.verify_only(|n| fact.is_none_or(|f| n.contains(f)))?;
        for f in &r.facts {
            if f.pass {
                let _ = writeln!(text, "PASS {}: {}: {}", r.entry, f.name, f.expected);
            } else {
                let _ = writeln!(text, "FAIL {}: {}: expected {}, got {}", r.entry, f.name, f.expected, f.actual);
            }
        }
        failed |= !r.passed;
        capped |= r.cap_exceeded;
        reports.push(r);
    }
    let code = if capped {
        EXIT_CAP
    } else if failed {
        EXIT_MISMATCH
    } else {
        0
    };
    Ok(Output { json: serde_json::to_value(&reports).expect("serializable"), text, code })
}

/// Canonical text of a set of binomials, as used in gallery facts.
pub fn canonical_set(v: &[LatticeBinomial], a: &Configuration) -> String {
    canonical(v, a.labels())
}
