//! The gallery: named configurations with the facts recorded about them,
//! each checkable by one computation.

use std::cell::OnceCell;

use num_bigint::BigInt;
use serde::Serialize;

use super::configs::*;
use crate::error::{Result, ToricError};
use crate::groebner::{
    buchberger, hilbert_function, hilbert_polynomial, lex_groebner_of_degree, minimal_generators,
    radical_membership_bounded, toric_ideal, RadicalVerdict, TermOrder,
};
use crate::lattice::{parse_binomial, Configuration, LatticeBinomial};
use crate::polyhedral::{
    ehrhart_polynomial, face_poset, lattice_points, normal_fans_equal, normalized_volume, regular_triangulation,
    CountLattice,
};
use crate::semigroup::{is_hereditarily_normal, is_normal, is_normal_projective, is_smooth, is_unimodular};
use crate::sets::{
    circuit_info, circuits, degree_bound_report, graver, graver_by_completion, maxdeg, sort_binomials, universal_groebner_basis, Check,
    UgbMode,
};

/// Dilates searched for Hilbert and Ehrhart polynomials in gallery checks.
const S_MAX: usize = 40;

/// A configuration with lazily computed, shared invariants.
pub struct Instance {
    pub config: Configuration,
    circuits: OnceCell<Vec<LatticeBinomial>>,
    graver: OnceCell<Vec<LatticeBinomial>>,
    mingen: OnceCell<Vec<LatticeBinomial>>,
}

fn cached<T>(cell: &OnceCell<T>, f: impl FnOnce() -> Result<T>) -> Result<&T> {
    if let Some(v) = cell.get() {
        return Ok(v);
    }
    let v = f()?;
    Ok(cell.get_or_init(|| v))
}

impl Instance {
    pub fn new(config: Configuration) -> Self {
        Instance { config, circuits: OnceCell::new(), graver: OnceCell::new(), mingen: OnceCell::new() }
    }

    pub fn circuits(&self) -> Result<&[LatticeBinomial]> {
        cached(&self.circuits, || circuits(&self.config)).map(Vec::as_slice)
    }

    pub fn graver(&self) -> Result<&[LatticeBinomial]> {
        cached(&self.graver, || graver(&self.config)).map(Vec::as_slice)
    }

    pub fn mingen(&self) -> Result<&[LatticeBinomial]> {
        cached(&self.mingen, || Ok(minimal_generators(&self.config)?.lattice_binomials())).map(Vec::as_slice)
    }

    fn canon(&self, v: &[LatticeBinomial]) -> String {
        canonical(v, self.config.labels())
    }
}

/// Sign-normalized, canonically sorted and joined by `; `.
pub fn canonical(v: &[LatticeBinomial], labels: &[String]) -> String {
    let mut v: Vec<LatticeBinomial> = v.iter().map(LatticeBinomial::sign_normalized).collect();
    sort_binomials(&mut v);
    v.dedup();
    v.iter().map(|b| b.format(labels)).collect::<Vec<_>>().join("; ")
}

fn canonical_text(list: &[&str], labels: &[String]) -> Result<String> {
    let v = list.iter().map(|t| parse_binomial(t, labels)).collect::<Result<Vec<_>>>()?;
    Ok(canonical(&v, labels))
}

fn degrees(v: &[LatticeBinomial]) -> String {
    let mut d: Vec<u64> = v.iter().map(LatticeBinomial::degree).collect();
    d.sort_unstable();
    d.iter().map(ToString::to_string).collect::<Vec<_>>().join(",")
}

type CheckFn = Box<dyn Fn(&Instance) -> Result<String>>;

/// One expected fact: `check` must render exactly `expected`.
pub struct Fact {
    pub name: String,
    pub expected: String,
    /// Stated in the literature, as opposed to derived independently here.
    pub stated: bool,
    check: CheckFn,
}

fn stated(name: impl Into<String>, expected: impl ToString, check: impl Fn(&Instance) -> Result<String> + 'static) -> Fact {
    Fact { name: name.into(), expected: expected.to_string(), stated: true, check: Box::new(check) }
}

fn derived(name: impl Into<String>, expected: impl ToString, check: impl Fn(&Instance) -> Result<String> + 'static) -> Fact {
    Fact { name: name.into(), expected: expected.to_string(), stated: false, check: Box::new(check) }
}

#[derive(Clone, Debug, Serialize)]
pub struct FactResult {
    pub name: String,
    pub expected: String,
    pub actual: String,
    pub stated: bool,
    pub pass: bool,
    /// Error kind when the check itself failed.
    pub error: Option<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct VerifyReport {
    pub entry: String,
    pub partial: Option<String>,
    pub facts: Vec<FactResult>,
    pub passed: bool,
    /// Some check hit a computational cap.
    pub cap_exceeded: bool,
}

pub struct GalleryEntry {
    pub name: &'static str,
    pub aliases: &'static [&'static str],
    /// Constructor call producing the configuration.
    pub constructor: &'static str,
    pub summary: &'static str,
    /// Set when only part of a family statement is checked.
    pub partial: Option<&'static str>,
    /// Remarks that are recorded but not verified.
    pub notes: &'static [&'static str],
    build: fn() -> Result<Configuration>,
    facts: fn(&Configuration) -> Result<Vec<Fact>>,
}

impl GalleryEntry {
    pub fn config(&self) -> Result<Configuration> {
        (self.build)()
    }

    pub fn facts(&self) -> Result<Vec<Fact>> {
        (self.facts)(&self.config()?)
    }

    pub fn fact_names(&self) -> Result<Vec<String>> {
        Ok(self.facts()?.into_iter().map(|f| f.name).collect())
    }

    /// Checks every fact; a failing computation counts as a mismatch.
    pub fn verify(&self) -> Result<VerifyReport> {
        self.verify_only(|_| true)
    }

    pub fn verify_only(&self, keep: impl Fn(&str) -> bool) -> Result<VerifyReport> {
        let inst = Instance::new(self.config()?);
        let mut results = vec![];
        let mut cap_exceeded = false;
        for f in self.facts()?.into_iter().filter(|f| keep(&f.name)) {
            let (actual, error) = match (f.check)(&inst) {
                Ok(s) => (s, None),
                Err(e) => {
                    cap_exceeded |= matches!(e, ToricError::CapExceeded { .. } | ToricError::Instability { .. });
                    (format!("error: {e}"), Some(e.kind().to_string()))
                }
            };
            results.push(FactResult {
                pass: error.is_none() && actual == f.expected,
                name: f.name,
                expected: f.expected,
                actual,
                stated: f.stated,
                error,
            });
        }
        Ok(VerifyReport {
            entry: self.name.to_string(),
            partial: self.partial.map(str::to_string),
            passed: results.iter().all(|r| r.pass),
            facts: results,
            cap_exceeded,
        })
    }
}

fn b(x: bool) -> String {
    x.to_string()
}

fn columns_as_set(a: &Configuration) -> Vec<Vec<BigInt>> {
    let mut c = a.columns();
    c.sort();
    c
}

fn twisted_cubic_facts(a: &Configuration) -> Result<Vec<Fact>> {
    let l = a.labels();
    let circ = ["x1*x3 - x2^2", "x2*x4 - x3^2", "x1^2*x4 - x2^3", "x1*x4^2 - x3^3"];
    let gr = canonical_text(&[&circ[..], &["x1*x4 - x2*x3"]].concat(), l)?;
    Ok(vec![
        stated("minimal generators", canonical_text(&["x1*x3 - x2^2", "x1*x4 - x2*x3", "x2*x4 - x3^2"], l)?, |i| {
            Ok(i.canon(i.mingen()?))
        }),
        stated("circuits", canonical_text(&circ, l)?, |i| Ok(i.canon(i.circuits()?))),
        stated("graver basis", gr.clone(), |i| Ok(i.canon(i.graver()?))),
        stated("universal groebner basis", gr, |i| {
            Ok(i.canon(&universal_groebner_basis(&i.config, UgbMode::Exhaustive)?.elements))
        }),
        stated("degree", 3, |i| Ok(normalized_volume(&i.config)?.to_string())),
        stated("circuits generate the ideal", false, |i| {
            let gb = buchberger(i.circuits()?, &TermOrder::grevlex(i.config.n()));
            Ok(b(i.mingen()?.iter().all(|g| gb.contains_lattice(g))))
        }),
        derived("every generator has a power in the circuit ideal", true, |i| {
            let c = i.circuits()?;
            Ok(b(i.mingen()?.iter().all(|g| matches!(radical_membership_bounded(g, c, 6), RadicalVerdict::Yes(_)))))
        }),
        stated("projectively normal", true, |i| Ok(b(is_normal(&i.config)?.normal))),
        derived("hilbert polynomial equals ehrhart polynomial", true, |i| {
            let e = ehrhart_polynomial(&i.config, CountLattice::Group, S_MAX)?.polynomial;
            Ok(b(hilbert_polynomial(&i.config, S_MAX)? == e))
        }),
        stated("unimodular", false, |i| Ok(b(is_unimodular(&i.config)?.unimodular))),
        derived("circuit with no squarefree side", "x1^2*x4 - x2^3", |i| {
            let h = is_hereditarily_normal(&i.config)?;
            Ok(h.violating_circuit.map_or_else(|| "none".into(), |c| c.format(i.config.labels())))
        }),
    ])
}

fn veronese_surface_facts(_: &Configuration) -> Result<Vec<Fact>> {
    Ok(vec![
        stated("circuits equal the universal groebner basis", true, |i| {
            let u = universal_groebner_basis(&i.config, UgbMode::Exhaustive)?;
            Ok(b(i.canon(&u.elements) == i.canon(i.circuits()?)))
        }),
        stated("graver basis properly contains the universal groebner basis", true, |i| {
            let u = universal_groebner_basis(&i.config, UgbMode::Exhaustive)?.elements;
            let g = i.graver()?;
            Ok(b(u.len() < g.len() && u.iter().all(|x| g.contains(&x.sign_normalized()))))
        }),
        derived("graver basis agrees with the completion procedure", true, |i| {
            Ok(b(i.canon(i.graver()?) == i.canon(&graver_by_completion(&i.config)?)))
        }),
    ])
}

fn scroll_facts(_: &Configuration) -> Result<Vec<Fact>> {
    Ok(vec![
        stated("degree", 3, |i| Ok(normalized_volume(&i.config)?.to_string())),
        stated("generator degrees", "2,2,2", |i| Ok(degrees(i.mingen()?))),
        stated("projectively normal", true, |i| Ok(b(is_normal(&i.config)?.normal))),
        stated("edge lengths of the quadrangle", "1,1,1,2", |i| {
            // Lattice length of an edge: configuration points on it minus
            // one (every lattice point of this polygon is a column).
            let p = face_poset(&i.config)?;
            let cols = i.config.columns_i64()?;
            let on_edge = |u: &[i64], v: &[i64], c: &[i64]| {
                let (du, dc): (Vec<i64>, Vec<i64>) = (0..u.len()).map(|k| (v[k] - u[k], c[k] - u[k])).unzip();
                let parallel = (0..u.len()).all(|x| (0..u.len()).all(|y| du[x] * dc[y] == du[y] * dc[x]));
                let t_ok = (0..u.len()).all(|k| dc[k] * du[k] >= 0 && dc[k].abs() <= du[k].abs());
                parallel && t_ok
            };
            let mut lens: Vec<usize> = p
                .faces
                .iter()
                .filter(|f| f.dim == 1)
                .map(|f| {
                    let (u, v) = (&cols[f.vertices[0]], &cols[f.vertices[1]]);
                    cols.iter().filter(|c| on_edge(u, v, c)).count() - 1
                })
                .collect();
            lens.sort_unstable();
            Ok(lens.iter().map(ToString::to_string).collect::<Vec<_>>().join(","))
        }),
        stated("adding (0,0,2) gives the quadratic veronese surface", true, |i| {
            let mut cols = i.config.columns_i64()?;
            cols.push(vec![0, 0, 2]);
            let v = Configuration::from_columns(&cols, None)?;
            Ok(b(columns_as_set(&v) == columns_as_set(&veronese(3, 2)?)))
        }),
    ])
}

fn segre_facts(a: &Configuration) -> Result<Vec<Fact>> {
    let l = a.labels();
    let pairs: Vec<(usize, usize)> = (1..8).flat_map(|r| (1..=8 - r).map(move |s| (r, s))).collect();
    let binom = |n: u64, k: u64| (0..k).fold(1u64, |acc, i| acc * (n - i) / (i + 1));
    let expected: Vec<String> = pairs.iter().map(|&(r, s)| format!("{r}x{s}:{}", binom((r + s) as u64, r as u64))).collect();
    Ok(vec![
        stated("degree of P^r x P^s for r+s <= 8", expected.join(" "), move |_| {
            let got = pairs
                .iter()
                .map(|&(r, s)| Ok(format!("{r}x{s}:{}", normalized_volume(&segre(r, s)?)?)))
                .collect::<Result<Vec<_>>>()?;
            Ok(got.join(" "))
        }),
        stated(
            "minimal generators are the 2x2 minors",
            canonical_text(&["x11*x22 - x12*x21", "x11*x23 - x13*x21", "x12*x23 - x13*x22"], l)?,
            |i| Ok(i.canon(i.mingen()?)),
        ),
        stated("projectively normal", true, |i| Ok(b(is_normal(&i.config)?.normal))),
        derived("P^1 x P^1 is unimodular", true, |_| Ok(b(is_unimodular(&segre(1, 1)?)?.unimodular))),
    ])
}

fn octahedron_facts(_: &Configuration) -> Result<Vec<Fact>> {
    Ok(vec![
        stated("degree", 4, |i| Ok(normalized_volume(&i.config)?.to_string())),
        stated("triangulation", "4 unimodular simplices", |i| {
            let t = regular_triangulation(&i.config, None)?;
            let u = t.simplices.iter().filter(|s| s.unimodular).count();
            Ok(if u == t.simplices.len() {
                format!("{u} unimodular simplices")
            } else {
                format!("{} simplices, {u} unimodular", t.simplices.len())
            })
        }),
        stated("f-vector", "6,12,8", |i| {
            let f = face_poset(&i.config)?.f_vector;
            Ok(f.iter().map(ToString::to_string).collect::<Vec<_>>().join(","))
        }),
        derived("generator degrees", "2,2", |i| Ok(degrees(i.mingen()?))),
        stated("bases of the uniform matroid U(2,4)", true, |i| {
            Ok(b(columns_as_set(&i.config) == columns_as_set(&uniform_matroid(2, 4)?)))
        }),
        stated("projectively normal", true, |i| Ok(b(is_normal(&i.config)?.normal))),
    ])
}

fn birkhoff3_facts(a: &Configuration) -> Result<Vec<Fact>> {
    Ok(vec![
        stated("minimal generators", canonical_text(&["x123*x231*x312 - x132*x213*x321"], a.labels())?, |i| {
            Ok(i.canon(i.mingen()?))
        }),
        stated("dimension", 4, |i| Ok((i.config.rank() - 1).to_string())),
        stated("degree", 3, |i| Ok(normalized_volume(&i.config)?.to_string())),
    ])
}

fn birkhoff4_facts(_: &Configuration) -> Result<Vec<Fact>> {
    Ok(vec![
        stated("dimension", 9, |i| Ok((i.config.rank() - 1).to_string())),
        stated("degree", 352, |i| Ok(normalized_volume(&i.config)?.to_string())),
        stated("generated in degree at most p", true, |i| Ok(b(maxdeg(i.mingen()?) <= 4))),
    ])
}

fn triple_facts(a: &Configuration) -> Result<Vec<Fact>> {
    Ok(vec![stated(
        "minimal generators",
        canonical_text(&["x111*x122*x212*x221 - x112*x121*x211*x222"], a.labels())?,
        |i| Ok(i.canon(i.mingen()?)),
    )])
}

fn quadric_cone_facts(_: &Configuration) -> Result<Vec<Fact>> {
    Ok(vec![
        stated("normal", true, |i| Ok(b(is_normal(&i.config)?.normal))),
        stated("smooth", false, |i| Ok(b(is_smooth(&i.config, false)?.smooth))),
        derived("hilbert basis is the configuration", true, |i| {
            let mut h = is_normal(&i.config)?.hilbert_basis;
            h.sort();
            Ok(b(h == columns_as_set(&i.config)))
        }),
    ])
}

fn sparse_curve_facts(_: &Configuration) -> Result<Vec<Fact>> {
    let mut facts = vec![];
    for r in 4..=6usize {
        let inst = move || sparse_curve(r).map(Instance::new);
        let gens = std::iter::once("2".to_string()).chain((1..r).map(|_| (r - 1).to_string())).collect::<Vec<_>>().join(",");
        facts.push(stated(format!("r={r}: projective variety smooth"), true, move |_| {
            Ok(b(is_smooth(&inst()?.config, true)?.smooth))
        }));
        facts.push(stated(format!("r={r}: projective variety normal"), true, move |_| {
            Ok(b(is_normal_projective(&inst()?.config)?.normal))
        }));
        facts.push(stated(format!("r={r}: projectively normal"), false, move |_| Ok(b(is_normal(&inst()?.config)?.normal))));
        facts.push(stated(format!("r={r}: generator degrees"), gens, move |_| Ok(degrees(inst()?.mingen()?))));
        facts.push(derived(format!("r={r}: hilbert polynomial equals ehrhart polynomial"), true, move |_| {
            let a = inst()?.config;
            Ok(b(hilbert_polynomial(&a, S_MAX)? == ehrhart_polynomial(&a, CountLattice::Group, S_MAX)?.polynomial))
        }));
    }
    facts.push(derived("r=4: witness outside the semigroup", "[2, 2]", |i| {
        let w = is_normal(&i.config)?.witness.unwrap_or_default();
        Ok(format!("[{}]", w.iter().map(ToString::to_string).collect::<Vec<_>>().join(", ")))
    }));
    facts.push(derived("r=4: hilbert function and ehrhart count at s=1", "4,5", |i| {
        Ok(format!("{},{}", hilbert_function(&i.config, 1)?, lattice_points(&i.config, 1, CountLattice::Group)?))
    }));
    Ok(facts)
}

fn codim2_facts(_: &Configuration) -> Result<Vec<Fact>> {
    let mut facts = vec![];
    for d in 3..=5usize {
        let gens = std::iter::once("2".to_string()).chain((0..d).map(|_| d.to_string())).collect::<Vec<_>>().join(",");
        facts.push(stated(format!("d={d}: generator degrees"), gens, move |_| {
            Ok(degrees(Instance::new(codim2_surface(d)?).mingen()?))
        }));
        facts.push(stated(format!("d={d}: degree"), d + 1, move |_| Ok(normalized_volume(&codim2_surface(d)?)?.to_string())));
        facts.push(derived(format!("d={d}: codimension"), 2, move |_| Ok(codim2_surface(d)?.codim().to_string())));
    }
    Ok(facts)
}

/// Orders sampled when looking for a quadratic Gröbner basis that does not
/// exist.
const CUBIC_NINE_SAMPLES: usize = 100;

fn cubic_nine_facts(_: &Configuration) -> Result<Vec<Fact>> {
    Ok(vec![
        stated("generated by quadrics", true, |i| Ok(b(maxdeg(i.mingen()?) == 2))),
        stated("no quadratic groebner basis among sampled orders", true, |i| {
            let a = &i.config;
            let lex = lex_groebner_of_degree(a, 2, CUBIC_NINE_SAMPLES / 2, 0xc0)?;
            let weighted = universal_groebner_basis(a, UgbMode::Sampled { orders: CUBIC_NINE_SAMPLES / 2, seed: 0xc1 })?;
            let grevlex = toric_ideal(a, &TermOrder::grevlex(a.n()))?;
            let any_quadratic = lex.order.is_some() || grevlex.maxdeg() <= 2 || {
                // Re-run each sampled weight order individually.
                let mut found = false;
                for seed in 0..weighted.cones as u64 {
                    let u = universal_groebner_basis(a, UgbMode::Sampled { orders: 1, seed: 0xc100 + seed })?;
                    found |= u.maxdeg <= 2;
                }
                found
            };
            Ok(b(!any_quadratic))
        }),
    ])
}

fn hexagon_facts(_: &Configuration) -> Result<Vec<Fact>> {
    let mut facts = vec![];
    for (p, q, r) in [(1, 2, 3), (1, 2, 4), (2, 3, 5)] {
        let tag = format!("({p},{q},{r})");
        if (p, q, r) != (1, 2, 3) {
            facts.push(stated(format!("{tag}: normal fan equals that of (1,2,3)"), true, move |i| {
                Ok(b(normal_fans_equal(&hexagon(p, q, r)?, &i.config)?))
            }));
        }
        facts.push(stated(format!("{tag}: normal"), true, move |_| Ok(b(is_normal_projective(&hexagon(p, q, r)?)?.normal))));
        facts.push(stated(format!("{tag}: quadratic lexicographic groebner basis found"), true, move |_| {
            Ok(b(lex_groebner_of_degree(&hexagon(p, q, r)?, 2, 200, 0x6e)?.order.is_some()))
        }));
        facts.push(derived(format!("{tag}: f-vector"), "6,6", move |_| {
            let f = face_poset(&hexagon(p, q, r)?)?.f_vector;
            Ok(f.iter().map(ToString::to_string).collect::<Vec<_>>().join(","))
        }));
    }
    Ok(facts)
}

fn graph_facts(_: &Configuration) -> Result<Vec<Fact>> {
    let cycles: [(&str, &[(usize, usize)], &str); 3] = [
        ("1>2>3>4>5>1", &[(1, 2), (2, 3), (3, 4), (4, 5), (5, 1)], "x12*x23*x34*x45*x51 - 1"),
        ("1>2>3<4>5>1", &[(1, 2), (2, 3), (4, 3), (4, 5), (5, 1)], "x12*x23*x45*x51 - x43"),
        ("1>2>3<4>5<1", &[(1, 2), (2, 3), (4, 3), (4, 5), (1, 5)], "x12*x23*x45 - x15*x43"),
    ];
    let mut facts = vec![];
    for (name, edges, circuit) in cycles {
        let g = graph(5, edges)?;
        let expected = canonical_text(&[circuit], g.labels())?;
        let g2 = g.clone();
        facts.push(stated(format!("{name}: circuits"), expected, move |_| {
            Ok(canonical(&circuits(&g)?, g.labels()))
        }));
        facts.push(stated(format!("{name}: unimodular"), true, move |_| Ok(b(is_unimodular(&g2)?.unimodular))));
    }
    let k33 = || graph(6, &[(1, 4), (1, 5), (1, 6), (2, 4), (2, 5), (2, 6), (3, 4), (3, 5), (3, 6)]);
    facts.push(stated("K(3,3): circuit degrees range over 2..3", "2,3", move |_| {
        let mut d: Vec<u64> = circuits(&k33()?)?.iter().map(LatticeBinomial::degree).collect();
        d.sort_unstable();
        d.dedup();
        Ok(d.iter().map(ToString::to_string).collect::<Vec<_>>().join(","))
    }));
    facts.push(stated("K(3,3): ideal is the 2x2 minors (nine quadrics)", "2,2,2,2,2,2,2,2,2", move |_| {
        Ok(degrees(Instance::new(k33()?).mingen()?))
    }));
    facts.push(stated("K(3,3): degree equals that of P^2 x P^2", true, move |_| {
        Ok(b(normalized_volume(&k33()?)? == normalized_volume(&segre(2, 2)?)?))
    }));
    Ok(facts)
}

fn root_system_facts(_: &Configuration) -> Result<Vec<Fact>> {
    Ok(vec![
        stated("hereditarily normal", true, |i| Ok(b(is_hereditarily_normal(&i.config)?.hereditarily_normal))),
        stated("unimodular", true, |i| Ok(b(is_unimodular(&i.config)?.unimodular))),
    ])
}

const GRAVER_GAP_LIST: [&str; 16] = [
    "x2*y1^3 - x1^3*y2",
    "x3*y1^4 - x1^4*y3",
    "x3^3*y2^4 - x2^4*y3^3",
    "x4*x5^5*y2^2 - x2^2*y4*y5^5",
    "x4*x5^5*y1^6 - x1^6*y4*y5^5",
    "x4^2*x5^10*y3^3 - x3^3*y4^2*y5^10",
    "x4*x5^5*y1^2*y3 - x1^2*x3*y4*y5^5",
    "x4*x5^5*y1^3*y2 - x1^3*x2*y4*y5^5",
    "x3*y1*y2 - x1*x2*y3",
    "x1*x4*x5^5*y2*y3 - x2*x3*y1*y4*y5^5",
    "x2^2*x4*x5^5*y3^3 - x3^3*y2^2*y4*y5^5",
    "x1*x3^2*y2^3 - x2^3*y1*y3^2",
    "x1^2*x3*y2^2 - x2^2*y1^2*y3",
    "x2*x4*x5^5*y1*y3^2 - x1*x3^2*y2*y4*y5^5",
    "x1^2*x4*x5^5*y3^2 - x3^2*y1^2*y4*y5^5",
    "x4^2*x5^10*y1*y2*y3^2 - x1*x2*x3^2*y4^2*y5^10",
];

fn graver_gap_facts(a: &Configuration) -> Result<Vec<Fact>> {
    let l = a.labels();
    let underlined = parse_binomial(GRAVER_GAP_LIST[5], l)?;
    Ok(vec![
        stated("graver basis", canonical_text(&GRAVER_GAP_LIST, l)?, |i| Ok(i.canon(i.graver()?))),
        stated("minimal generators equal the graver basis", true, |i| Ok(b(i.canon(i.mingen()?) == i.canon(i.graver()?)))),
        stated("circuits are the first six", canonical_text(&GRAVER_GAP_LIST[..6], l)?, |i| Ok(i.canon(i.circuits()?))),
        stated("maxdeg of graver basis and circuits", "16,15", |i| {
            Ok(format!("{},{}", maxdeg(i.graver()?), maxdeg(i.circuits()?)))
        }),
        stated("index and true degree of the underlined circuit", "2,30", move |i| {
            let c = circuit_info(&underlined, &i.config)?;
            Ok(format!("{},{}", c.index, c.true_degree))
        }),
        stated("degree", 54, |i| Ok(normalized_volume(&i.config)?.to_string())),
        stated("codimension", 3, |i| Ok(i.config.codim().to_string())),
        stated("bounds: graver strictly above circuits, true-degree conjecture holds", "true,pass", |i| {
            let r = degree_bound_report(&i.config, UgbMode::Exhaustive)?;
            let c = match r.checks.conj48 {
                Check::Pass => "pass",
                Check::Fail => "fail",
                Check::ConjectureViolated => "violated",
            };
            Ok(format!("{},{c}", r.graver_exceeds_circuits))
        }),
    ])
}

fn static_config(f: fn() -> Configuration) -> Result<Configuration> {
    Ok(f())
}

/// Every gallery entry, in a fixed order.
pub fn entries() -> Vec<GalleryEntry> {
    vec![
        GalleryEntry {
            name: "twisted_cubic",
            aliases: &[],
            constructor: "twisted_cubic()",
            summary: "Four equidistant points on a line; circuits, Graver and universal bases",
            partial: None,
            notes: &[],
            build: || static_config(twisted_cubic),
            facts: twisted_cubic_facts,
        },
        GalleryEntry {
            name: "veronese_surface",
            aliases: &[],
            constructor: "veronese(3, 2)",
            summary: "Quadratic Veronese surface in P^5: circuits form the universal basis",
            partial: None,
            notes: &[],
            build: || veronese(3, 2),
            facts: veronese_surface_facts,
        },
        GalleryEntry {
            name: "cubic_scroll",
            aliases: &["scroll"],
            constructor: "scroll()",
            summary: "The rational normal scroll S(2,1) in P^4",
            partial: None,
            notes: &[],
            build: || static_config(scroll),
            facts: scroll_facts,
        },
        GalleryEntry {
            name: "segre",
            aliases: &[],
            constructor: "segre(1, 2)",
            summary: "Segre embeddings of products of projective spaces",
            partial: None,
            notes: &[],
            build: || segre(1, 2),
            facts: segre_facts,
        },
        GalleryEntry {
            name: "octahedron",
            aliases: &["grassmannian_orbit"],
            constructor: "octahedron()",
            summary: "Generic torus orbit in the Grassmannian of lines in P^3",
            partial: None,
            notes: &[],
            build: || static_config(octahedron),
            facts: octahedron_facts,
        },
        GalleryEntry {
            name: "birkhoff3",
            aliases: &[],
            constructor: "birkhoff(3)",
            summary: "Toric variety of the 3x3 Birkhoff polytope",
            partial: None,
            notes: &[],
            build: || birkhoff(3),
            facts: birkhoff3_facts,
        },
        GalleryEntry {
            name: "birkhoff4",
            aliases: &[],
            constructor: "birkhoff(4)",
            summary: "Toric variety of the 4x4 Birkhoff polytope",
            partial: Some("generation in degree p is checked for p <= 4 only; degrees for p >= 5 are out of reach"),
            notes: &[],
            build: || birkhoff(4),
            facts: birkhoff4_facts,
        },
        GalleryEntry {
            name: "triple_2_2_2",
            aliases: &[],
            constructor: "triple(2, 2, 2)",
            summary: "Looks like Segre but is not: a single quartic",
            partial: None,
            notes: &[],
            build: || triple(2, 2, 2),
            facts: triple_facts,
        },
        GalleryEntry {
            name: "quadric_cone",
            aliases: &[],
            constructor: "quadric_cone()",
            summary: "Cone over a smooth conic: normal but not smooth",
            partial: None,
            notes: &[],
            build: || static_config(quadric_cone),
            facts: quadric_cone_facts,
        },
        GalleryEntry {
            name: "sparse_curve",
            aliases: &["ex26"],
            constructor: "sparse_curve(4)",
            summary: "A smooth rational curve that is not projectively normal (r = 4, 5, 6)",
            partial: None,
            notes: &["the affine cone is also claimed not to be Cohen-Macaulay; this is not checked"],
            build: || sparse_curve(4),
            facts: sparse_curve_facts,
        },
        GalleryEntry {
            name: "codim2_surface",
            aliases: &["ex44"],
            constructor: "codim2_surface(3)",
            summary: "Codimension-two surfaces in P^4 with one quadric and d forms of degree d (d = 3, 4, 5)",
            partial: None,
            notes: &["these surfaces are claimed not arithmetically Cohen-Macaulay; this is not checked"],
            build: || codim2_surface(3),
            facts: codim2_facts,
        },
        GalleryEntry {
            name: "cubic_nine",
            aliases: &[],
            constructor: "cubic_nine()",
            summary: "Generated by quadrics but without a quadratic Groebner basis",
            partial: Some("non-existence of a quadratic Groebner basis is only sampled; the full fan exceeds the walk cap"),
            notes: &["the source describes this set as n = 8 but lists nine vectors; all nine are used"],
            build: || static_config(cubic_nine),
            facts: cubic_nine_facts,
        },
        GalleryEntry {
            name: "hexagon",
            aliases: &[],
            constructor: "hexagon(1, 2, 3)",
            summary: "Hexagons spanned by permutations of (i,j,k): P^2 blown up at three points",
            partial: None,
            notes: &[],
            build: || hexagon(1, 2, 3),
            facts: hexagon_facts,
        },
        GalleryEntry {
            name: "directed_graphs",
            aliases: &[],
            constructor: "graph(5, [(1,2),(2,3),(3,4),(4,5),(5,1)])",
            summary: "Graph configurations: circuits are directed cycles",
            partial: None,
            notes: &[],
            build: || graph(5, &[(1, 2), (2, 3), (3, 4), (4, 5), (5, 1)]),
            facts: graph_facts,
        },
        GalleryEntry {
            name: "root_system_a3",
            aliases: &[],
            constructor: "complete_digraph(4)",
            summary: "Root system of type A3 as the complete digraph on four nodes",
            partial: None,
            notes: &[],
            build: || complete_digraph(4),
            facts: root_system_facts,
        },
        GalleryEntry {
            name: "graver_gap",
            aliases: &["ex47"],
            constructor: "lawrence(graver_gap_base())",
            summary: "A Lawrence lifting whose Graver degree exceeds its circuit degree",
            partial: None,
            notes: &["the regularity of this variety (17) is not computed"],
            build: || static_config(graver_gap),
            facts: graver_gap_facts,
        },
    ]
}

/// Looks up an entry by name or alias.
pub fn entry(name: &str) -> Result<GalleryEntry> {
    entries()
        .into_iter()
        .find(|e| e.name == name || e.aliases.contains(&name))
        .ok_or_else(|| ToricError::BadParams(format!("no gallery entry named `{name}`")))
}

/// Builds a configuration of a named family from integer parameters; a
/// gallery entry name without parameters gives that entry's configuration.
/// `graph` takes the vertex count then edge endpoints in pairs; `matroid`
/// takes the ground-set size, the rank, then bases flattened.
pub fn make_config(name: &str, params: &[i64]) -> Result<Configuration> {
    if params.is_empty() {
        if let Ok(e) = entry(name) {
            return e.config();
        }
    }
    let want = |k: usize| -> Result<Vec<usize>> {
        if params.len() != k {
            return Err(ToricError::BadParams(format!("`{name}` takes {k} parameter(s), got {}", params.len())));
        }
        params
            .iter()
            .map(|&p| usize::try_from(p).map_err(|_| ToricError::BadParams(format!("negative parameter {p}"))))
            .collect()
    };
    match name {
        "twisted_cubic" => want(0).map(|_| twisted_cubic()),
        "scroll" | "cubic_scroll" => want(0).map(|_| scroll()),
        "octahedron" => want(0).map(|_| octahedron()),
        "quadric_cone" => want(0).map(|_| quadric_cone()),
        "cubic_nine" => want(0).map(|_| cubic_nine()),
        "graver_gap" | "ex47" => want(0).map(|_| graver_gap()),
        "graver_gap_base" => want(0).map(|_| graver_gap_base()),
        "veronese" => want(2).and_then(|p| veronese(p[0], p[1])),
        "segre" => want(2).and_then(|p| segre(p[0], p[1])),
        "birkhoff" => want(1).and_then(|p| birkhoff(p[0])),
        "triple" => want(3).and_then(|p| triple(p[0], p[1], p[2])),
        "hexagon" => want(3).and_then(|_| hexagon(params[0], params[1], params[2])),
        "sparse_curve" | "ex26" => want(1).and_then(|p| sparse_curve(p[0])),
        "codim2_surface" | "ex44" => want(1).and_then(|p| codim2_surface(p[0])),
        "complete_digraph" => want(1).and_then(|p| complete_digraph(p[0])),
        "uniform_matroid" => want(2).and_then(|p| uniform_matroid(p[0], p[1])),
        "graph" => {
            let p = want(params.len())?;
            if p.len() < 3 || p.len() % 2 == 0 {
                return Err(ToricError::BadParams("graph takes a vertex count and endpoint pairs".into()));
            }
            let edges: Vec<(usize, usize)> = p[1..].chunks(2).map(|e| (e[0], e[1])).collect();
            graph(p[0], &edges)
        }
        "matroid" | "matroid_bases" => {
            let p = want(params.len())?;
            if p.len() < 3 || p[1] == 0 || (p.len() - 2) % p[1] != 0 {
                return Err(ToricError::BadParams("matroid takes m, the rank, then bases".into()));
            }
            let bases: Vec<Vec<usize>> = p[2..].chunks(p[1]).map(<[usize]>::to_vec).collect();
            matroid(p[0], &bases)
        }
        _ => Err(ToricError::BadParams(format!("unknown configuration family `{name}`"))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn names_are_unique() {
        let es = entries();
        let mut names: Vec<&str> = es.iter().flat_map(|e| std::iter::once(e.name).chain(e.aliases.iter().copied())).collect();
        let total = names.len();
        names.sort_unstable();
        names.dedup();
        assert_eq!(names.len(), total);
    }

    #[test]
    fn aliases_resolve() {
        assert_eq!(entry("ex47").unwrap().name, "graver_gap");
        assert_eq!(entry("ex26").unwrap().config().unwrap(), sparse_curve(4).unwrap());
        assert!(entry("nope").is_err());
    }

    #[test]
    fn make_config_families() {
        assert_eq!(make_config("twisted_cubic", &[]).unwrap(), twisted_cubic());
        assert_eq!(make_config("birkhoff", &[3]).unwrap().n(), 6);
        assert_eq!(make_config("graph", &[3, 1, 2, 2, 3]).unwrap().n(), 2);
        assert_eq!(make_config("matroid", &[4, 2, 1, 2, 3, 4]).unwrap().n(), 2);
        assert_eq!(make_config("matroid_bases", &[4, 2, 1, 2]).unwrap().n(), 1);
        assert_eq!(make_config("ex44", &[4]).unwrap(), codim2_surface(4).unwrap());
        assert!(make_config("segre", &[1]).is_err());
        assert!(make_config("birkhoff", &[-1]).is_err());
    }

    #[test]
    fn twisted_cubic_verifies() {
        let r = entry("twisted_cubic").unwrap().verify().unwrap();
        for f in &r.facts {
            assert!(f.pass, "{}: expected {} got {}", f.name, f.expected, f.actual);
        }
    }

    #[test]
    fn mismatches_are_reported() {
        let e = entry("quadric_cone").unwrap();
        let mut facts = e.facts().unwrap();
        facts[0].expected = "false".into();
        let inst = Instance::new(e.config().unwrap());
        assert_ne!((facts[0].check)(&inst).unwrap(), facts[0].expected);
    }
}
