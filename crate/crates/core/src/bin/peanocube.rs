use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use peanocube::convexity::{axiom_checks, convex_hull, prehull_number};
use peanocube::euler::{beta_table, convex_excess, cube_free_chain, euler_characteristic, idim_by_formula, ksh_defect};
use peanocube::fixedretr::{
    fixed_torus_under_automorphisms, fixed_torus_under_contraction, mooring_onto, retraction_onto_convex,
    is_strongly_faithful, SelfMap,
};
use peanocube::fixtures::{all_fixtures, fixture, FIXTURE_NAMES};
use peanocube::hypermedian::{
    decompose, depth, depth_witness_set, helly_number, helly_number_oracle, is_cellular, is_hyper_median,
    median_or_hyper_median,
};
use peanocube::peano::{
    is_antipodal, is_cube_free_netlike, is_median, is_netlike, is_quasi_hypertorus, median_witness, netlike_witness,
};
use peanocube::report::{all_pass, analyze, explore_q440, run_invariants};
use peanocube::theta::coordinates;
use peanocube::transform::{contract, expand, random, ProperCover};
use peanocube::{Error, Graph, Space, VertexSet};

#[derive(Parser)]
#[command(name = "peanocube", version, about = "Analyze Peano partial cubes")]
struct Cli {
    /// Human-readable tables instead of JSON.
    #[arg(long, global = true)]
    pretty: bool,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, ValueEnum)]
enum Class {
    Peano,
    Median,
    Netlike,
    Cubefree,
    Cellular,
    Hypermedian,
    Torus,
    Antipodal,
    PartialCube,
}

#[derive(Clone, Copy, ValueEnum)]
enum Suite {
    Fixtures,
}

#[derive(Subcommand)]
enum Cmd {
    /// Full report: classification flags and invariants.
    Analyze { file: PathBuf },
    /// Membership in one class; exit code 1 when negative.
    Recognize {
        file: PathBuf,
        #[arg(long, value_enum, default_value = "peano")]
        class: Class,
    },
    /// Θ-classes, canonical arcs and hypercube labels.
    Theta { file: PathBuf },
    /// Convex hull of a vertex set and the number of interval steps.
    Hull {
        file: PathBuf,
        #[arg(long, value_delimiter = ',')]
        set: Vec<usize>,
    },
    /// Pre-hull number.
    Ph { file: PathBuf },
    /// Convexity axioms.
    Axioms { file: PathBuf },
    /// Median or hyper-median of a triple.
    Median { file: PathBuf, u: usize, v: usize, w: usize },
    /// Gated-amalgam decomposition into quasi-hypertori.
    Decompose { file: PathBuf },
    /// Helly number of the geodesic convexity.
    Helly {
        file: PathBuf,
        /// Also run the exhaustive oracle (capped by PEANOCUBE_MAX_N).
        #[arg(long)]
        oracle: bool,
    },
    /// Depth of the half-space lattice.
    Depth {
        file: PathBuf,
        #[arg(long)]
        witness: bool,
    },
    /// β-table, Euler sum, dimension formula and cube-free chain.
    Euler { file: PathBuf },
    /// Build a graph from a family: hypercube, cycle, torus, prism, path, tree, star, mn1, fixture, random.
    Generate {
        family: String,
        params: Vec<String>,
        #[arg(short, long)]
        output: Option<PathBuf>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Contract one Θ-class.
    Contract {
        file: PathBuf,
        #[arg(long)]
        class: usize,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Expand along a cover file `{"v0": [...], "v1": [...]}`.
    Expand {
        file: PathBuf,
        #[arg(long)]
        cover: PathBuf,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Retraction onto a convex set.
    Retract {
        file: PathBuf,
        #[arg(long, value_delimiter = ',')]
        onto: Vec<usize>,
    },
    /// Mooring onto a convex set.
    Mooring {
        file: PathBuf,
        #[arg(long, value_delimiter = ',')]
        onto: Vec<usize>,
    },
    /// Quasi-hypertorus fixed by every automorphism, or by the map in `--map`.
    Fixed {
        file: PathBuf,
        #[arg(long)]
        map: Option<PathBuf>,
    },
    /// Property checks; nonzero exit when any fails.
    Invariants {
        file: Option<PathBuf>,
        #[arg(long, value_enum)]
        suite: Option<Suite>,
    },
    /// Graphviz source, edges colored by Θ-class when possible.
    ExportDot { file: PathBuf },
    /// Reports whether the hypothesis of the open ph/isometric-cycle question holds.
    ExploreQ440 {
        file: Option<PathBuf>,
        #[arg(long, value_enum)]
        suite: Option<Suite>,
    },
}

enum Failure {
    Negative(Value),
    Err(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Err(e)
    }
}

type Out = Result<Value, Failure>;

fn max_n() -> usize {
    std::env::var("PEANOCUBE_MAX_N").ok().and_then(|s| s.parse().ok()).unwrap_or(14)
}

fn load(path: &Path) -> Result<Graph, Error> {
    let s = fs::read_to_string(path).map_err(|e| Error::Parse(format!("{}: {e}", path.display())))?;
    let g = Graph::from_json(&s)?;
    Ok(if g.name().is_none() {
        let stem = path.file_stem().and_then(|s| s.to_str()).unwrap_or("G").to_string();
        g.with_name(stem)
    } else {
        g
    })
}

fn write_graph(g: &Graph, output: &Option<PathBuf>) -> Result<Value, Error> {
    if let Some(p) = output {
        fs::write(p, g.to_json()).map_err(|e| Error::Parse(format!("{}: {e}", p.display())))?;
    }
    Ok(serde_json::from_str(&g.to_json()).expect("graph JSON"))
}

fn to_value<T: serde::Serialize>(t: &T) -> Value {
    serde_json::to_value(t).expect("serializable")
}

fn vset(g: &Graph, vs: &[usize]) -> Result<VertexSet, Error> {
    if let Some(&x) = vs.iter().find(|&&x| x >= g.n()) {
        return Err(Error::OutOfRange(x));
    }
    Ok(VertexSet::from_iter(g.n(), vs.iter().copied()))
}

fn suite_graphs(file: &Option<PathBuf>, suite: Option<Suite>) -> Result<Vec<Graph>, Error> {
    match (file, suite) {
        (_, Some(Suite::Fixtures)) => {
            let mut v = all_fixtures();
            for (fam, p) in [("hypercube", vec![3]), ("cycle", vec![6]), ("prism", vec![6]), ("torus", vec![6, 4])] {
                v.push(peanocube::generate::family(fam, &p)?);
            }
            Ok(v)
        }
        (Some(f), None) => Ok(vec![load(f)?]),
        (None, None) => Err(Error::BadParams("give a file or --suite fixtures".into())),
    }
}

fn recognize(g: &Graph, class: Class) -> Out {
    let sp = Space::new(g);
    let pc = sp.is_partial_cube();
    let (ok, witness) = match class {
        Class::PartialCube => (pc, to_value(&sp.partial_cube_failure())),
        Class::Peano => {
            let v = sp.peano();
            (v.peano, to_value(&v.witness))
        }
        Class::Median => (pc && is_median(&sp), to_value(&median_witness(sp.metric()))),
        Class::Netlike => (is_netlike(&sp).unwrap_or(false), to_value(&netlike_witness(&sp).ok().flatten())),
        Class::Cubefree => (is_cube_free_netlike(&sp).unwrap_or(false), Value::Null),
        Class::Cellular => (sp.is_peano() && is_cellular(&sp), Value::Null),
        Class::Hypermedian => {
            let v = is_hyper_median(&sp);
            (v.hyper_median, to_value(&v.witness))
        }
        Class::Torus => {
            let t = is_quasi_hypertorus(g);
            (t.is_some(), to_value(&t))
        }
        Class::Antipodal => (pc && is_antipodal(&sp), Value::Null),
    };
    let name = class.to_possible_value().unwrap().get_name().to_string();
    let v = json!({ "class": name, "result": ok, "witness": witness });
    if ok {
        Ok(v)
    } else {
        Err(Failure::Negative(v))
    }
}

fn run(cmd: Cmd) -> Out {
    Ok(match cmd {
        Cmd::Analyze { file } => to_value(&analyze(&load(&file)?)?),
        Cmd::Recognize { file, class } => return recognize(&load(&file)?, class),
        Cmd::Theta { file } => {
            let g = load(&file)?;
            let sp = Space::new(&g);
            let tc = sp.theta()?;
            let classes: Vec<Value> = (0..tc.num_classes())
                .map(|c| {
                    let edges: Vec<(usize, usize)> = tc.classes()[c].iter().map(|&e| g.edges()[e]).collect();
                    json!({ "id": c, "arc": tc.canonical_arc(c), "edges": edges })
                })
                .collect();
            json!({ "idim": tc.num_classes(), "classes": classes, "labels": coordinates(tc, g.n()) })
        }
        Cmd::Hull { file, set } => {
            let g = load(&file)?;
            let s = vset(&g, &set)?;
            let (h, steps) = convex_hull(Space::new(&g).metric(), &s);
            json!({ "hull": h, "steps": steps })
        }
        Cmd::Ph { file } => json!({ "ph": prehull_number(&Space::new(&load(&file)?))? }),
        Cmd::Axioms { file } => to_value(&axiom_checks(&Space::new(&load(&file)?))?),
        Cmd::Median { file, u, v, w } => {
            let g = load(&file)?;
            for x in [u, v, w] {
                if x >= g.n() {
                    return Err(Error::OutOfRange(x).into());
                }
            }
            to_value(&median_or_hyper_median(&Space::new(&g), u, v, w)?)
        }
        Cmd::Decompose { file } => {
            let tree = decompose(&Space::new(&load(&file)?))?;
            json!({ "leafTypes": tree.leaf_types(), "tree": tree })
        }
        Cmd::Helly { file, oracle } => {
            let sp = Space::new(&load(&file)?);
            let h = helly_number(&sp)?;
            if oracle {
                let o = helly_number_oracle(sp.metric(), max_n().min(peanocube::hypermedian::HELLY_ORACLE_LIMIT))?;
                json!({ "helly": h, "oracle": o, "agree": h == o })
            } else {
                json!({ "helly": h })
            }
        }
        Cmd::Depth { file, witness } => {
            let sp = Space::new(&load(&file)?);
            let d = depth(&sp)?;
            if witness {
                json!({ "depth": d.depth, "chain": d.chain, "witness": depth_witness_set(&sp)? })
            } else {
                to_value(&d)
            }
        }
        Cmd::Euler { file } => {
            let sp = Space::new(&load(&file)?);
            sp.require_peano()?;
            let bt = beta_table(&sp)?;
            let table: Vec<Value> =
                bt.beta.iter().map(|(&(i, j), &c)| json!({ "i": i, "j": j, "count": c })).collect();
            json!({
                "beta": table,
                "eulerSum": euler_characteristic(&bt),
                "idimFormula": idim_by_formula(&bt),
                "idim": sp.idim()?,
                "convexExcess": convex_excess(&sp)?,
                "kshDefect": ksh_defect(&sp)?,
                "cubeFreeChain": cube_free_chain(&sp)?,
            })
        }
        Cmd::Generate { family, params, output, seed } => {
            let g = match family.as_str() {
                "fixture" => {
                    let name = params.first().ok_or_else(|| {
                        Error::BadParams(format!("fixture name required: {}", FIXTURE_NAMES.join(", ")))
                    })?;
                    fixture(name)?
                }
                "random" => {
                    use rand::SeedableRng;
                    let cap = match params.first() {
                        Some(p) => p.parse().map_err(|_| Error::BadParams(format!("bad size cap {p}")))?,
                        None => 40,
                    };
                    if cap < 8 {
                        return Err(Error::BadParams("size cap must be at least 8".into()).into());
                    }
                    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
                    random::hyper_median(&mut rng, cap).with_name(format!("random({cap},{seed})"))
                }
                _ => {
                    let ps: Vec<usize> = params
                        .iter()
                        .map(|p| p.parse().map_err(|_| Error::BadParams(format!("bad parameter {p}"))))
                        .collect::<Result<_, _>>()?;
                    peanocube::generate::family(&family, &ps)?
                }
            };
            write_graph(&g, &output)?
        }
        Cmd::Contract { file, class, output } => {
            let step = contract(&Space::new(&load(&file)?), class)?;
            write_graph(&step.resulting_graph, &output)?;
            to_value(&step)
        }
        Cmd::Expand { file, cover, output } => {
            let g = load(&file)?;
            let s = fs::read_to_string(&cover).map_err(|e| Error::Parse(format!("{}: {e}", cover.display())))?;
            let c = ProperCover::from_json(g.n(), &s)?;
            let e = expand(&g, &c)?;
            write_graph(&e.graph, &output)?;
            to_value(&e)
        }
        Cmd::Retract { file, onto } => {
            let g = load(&file)?;
            let sp = Space::new(&g);
            let f = vset(&g, &onto)?;
            let r = retraction_onto_convex(&sp, &f)?;
            json!({ "map": r.map, "flags": r.flags(&g), "stronglyFaithful": is_strongly_faithful(&sp, &f)? })
        }
        Cmd::Mooring { file, onto } => {
            let g = load(&file)?;
            let f = vset(&g, &onto)?;
            let mu = mooring_onto(&Space::new(&g), &f)?;
            json!({ "map": mu.map, "flags": mu.flags(&g) })
        }
        Cmd::Fixed { file, map } => {
            let g = load(&file)?;
            let sp = Space::new(&g);
            match map {
                Some(p) => {
                    let s = fs::read_to_string(&p).map_err(|e| Error::Parse(format!("{}: {e}", p.display())))?;
                    to_value(&fixed_torus_under_contraction(&sp, &SelfMap::from_json(&g, &s)?)?)
                }
                None => to_value(&fixed_torus_under_automorphisms(&sp)?),
            }
        }
        Cmd::Invariants { file, suite } => {
            let strict = suite.is_none();
            let mut rows = Vec::new();
            let mut ok = true;
            for g in suite_graphs(&file, suite)? {
                let checks = run_invariants(&g, strict)?;
                ok &= all_pass(&checks);
                for c in checks {
                    rows.push(json!({
                        "graph": g.name().unwrap_or("G"),
                        "check": c.label,
                        "status": c.status,
                        "detail": c.detail,
                    }));
                }
            }
            let v = json!({ "pass": ok, "checks": rows });
            if !ok {
                return Err(Failure::Negative(v));
            }
            v
        }
        Cmd::ExportDot { file } => {
            let g = load(&file)?;
            let sp = Space::new(&g);
            let classes = sp.theta().ok().map(|tc| tc.class_of_edge().to_vec());
            return Ok(Value::String(g.to_dot(classes.as_deref())));
        }
        Cmd::ExploreQ440 { file, suite } => {
            let mut rows = Vec::new();
            for g in suite_graphs(&file, suite)? {
                let p = explore_q440(&Space::new(&g))?;
                let mut v = to_value(&p);
                v["graph"] = json!(g.name().unwrap_or("G"));
                rows.push(v);
            }
            json!(rows)
        }
    })
}

fn scalar(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Null => "-".into(),
        other => other.to_string(),
    }
}

fn pretty(v: &Value, indent: usize, out: &mut String) {
    let pad = " ".repeat(indent);
    match v {
        Value::Object(map) => {
            let w = map.keys().map(|k| k.len()).max().unwrap_or(0);
            for (k, x) in map {
                match x {
                    Value::Object(_) => {
                        out.push_str(&format!("{pad}{k}\n"));
                        pretty(x, indent + 2, out);
                    }
                    Value::Array(a) if a.iter().any(|e| e.is_object()) => {
                        out.push_str(&format!("{pad}{k}\n"));
                        pretty(x, indent + 2, out);
                    }
                    _ => out.push_str(&format!("{pad}{k:<w$}  {}\n", scalar(x))),
                }
            }
        }
        Value::Array(a) if a.iter().all(|e| e.is_object()) && !a.is_empty() => {
            let cols: Vec<String> = a[0].as_object().unwrap().keys().cloned().collect();
            let cells: Vec<Vec<String>> =
                a.iter().map(|r| cols.iter().map(|c| scalar(r.get(c).unwrap_or(&Value::Null))).collect()).collect();
            let widths: Vec<usize> = (0..cols.len())
                .map(|i| cells.iter().map(|r| r[i].len()).chain([cols[i].len()]).max().unwrap_or(0))
                .collect();
            let line = |r: &[String]| {
                r.iter().zip(&widths).map(|(c, &w)| format!("{c:<w$}")).collect::<Vec<_>>().join("  ")
            };
            out.push_str(&format!("{pad}{}\n", line(&cols)));
            for r in &cells {
                out.push_str(&format!("{pad}{}\n", line(r)));
            }
        }
        other => out.push_str(&format!("{pad}{}\n", scalar(other))),
    }
}

fn emit(v: &Value, as_table: bool) {
    if let Value::String(s) = v {
        print!("{s}");
        return;
    }
    if as_table {
        let mut s = String::new();
        pretty(v, 0, &mut s);
        print!("{s}");
    } else {
        println!("{}", serde_json::to_string(v).expect("JSON"));
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.cmd) {
        Ok(v) => {
            emit(&v, cli.pretty);
            ExitCode::SUCCESS
        }
        Err(Failure::Negative(v)) => {
            emit(&v, cli.pretty);
            ExitCode::from(1)
        }
        Err(Failure::Err(e)) => {
            eprintln!("{}", json!({ "error": e.name(), "message": e.to_string() }));
            ExitCode::from(if matches!(e, Error::Parse(_)) { 2 } else { 3 })
        }
    }
}
