mod common;

use std::collections::BTreeSet;
use std::process::ExitCode;
use std::time::Instant;

use peanocube::convexity::{axiom_checks, hull, is_gated, prehull_number};
use peanocube::euler::{beta_table, cube_free_chain, enumerate_convex_tori, euler_characteristic, idim_by_formula};
use peanocube::fixedretr::{
    diamond_graph, fixed_torus_under_contraction, is_dismantlable, random_self_contraction, torus_intersection_graph,
};
use peanocube::fixtures::fixture;
use peanocube::generate::random_tree;
use peanocube::hypermedian::{decompose, helly_number, helly_number_oracle, is_hyper_median, reassemble};
use peanocube::iso::are_isomorphic;
use peanocube::peano::{is_antipodal, is_netlike, is_quasi_hypertorus};
use peanocube::report::characterization;
use peanocube::transform::random::amalgam_of_tori;
use peanocube::{Graph, Space, VertexSet};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const POPULATION: usize = 100;
const POPULATION_MAX_N: usize = 40;
const POPULATION_SEED: u64 = 0x5eed_0001;
const TIME_BUDGET_SECS: f64 = 60.0;
const HELLY_MAX_N: usize = 12;
const CHAR_MAX_N: usize = 30;
const TORUS_MAX_N: usize = 14;
const AMALGAMS: usize = 50;
const AMALGAM_MAX_N: usize = 40;
const CONTRACTIONS: usize = 20;

struct Outcome {
    pass: bool,
    detail: String,
}

fn outcome(pass: bool, detail: impl Into<String>) -> Outcome {
    Outcome { pass, detail: detail.into() }
}

fn name(g: &Graph) -> String {
    g.name().unwrap_or("unnamed").to_string()
}

fn c1_euler(pop: &[Graph], peano: &[Graph]) -> Outcome {
    let start = Instant::now();
    let mut bad = Vec::new();
    for g in peano.iter().chain(pop) {
        let sp = Space::new(g);
        match beta_table(&sp) {
            Ok(bt) if euler_characteristic(&bt) == 1 => {}
            _ => bad.push(name(g)),
        }
    }
    let secs = start.elapsed().as_secs_f64();
    let ok = bad.is_empty() && secs <= TIME_BUDGET_SECS && pop.len() >= POPULATION;
    outcome(ok, format!("{} graphs in {secs:.1}s, failures {bad:?}", peano.len() + pop.len()))
}

fn c2_idim(pop: &[Graph], peano: &[Graph]) -> Outcome {
    let mut bad = Vec::new();
    for g in peano.iter().chain(pop) {
        let sp = Space::new(g);
        let formula = beta_table(&sp).map(|bt| idim_by_formula(&bt));
        let classes = common::theta_oracle(g).len() as i64;
        if formula.ok() != Some(classes) || sp.idim().ok() != Some(classes as usize) {
            bad.push(name(g));
        }
    }
    outcome(bad.is_empty(), format!("{} graphs, failures {bad:?}", peano.len() + pop.len()))
}

fn c3_helly(peano: &[Graph]) -> Outcome {
    let mut checked = 0;
    let mut bad = Vec::new();
    for g in peano.iter().filter(|g| (2..=HELLY_MAX_N).contains(&g.n())) {
        let sp = Space::new(g);
        let fast = helly_number(&sp).ok();
        let lib = helly_number_oracle(sp.metric(), HELLY_MAX_N).ok();
        let oracle = common::helly_oracle(g);
        checked += 1;
        if !matches!(fast, Some(2 | 3)) || fast != Some(oracle) || lib != Some(oracle) {
            bad.push(format!("{} fast={fast:?} oracle={oracle}", name(g)));
        }
    }
    outcome(bad.is_empty() && checked > 0, format!("{checked} graphs, failures {bad:?}"))
}

fn c4_characterization(all: &[Graph]) -> Outcome {
    let mut checked = 0;
    let mut bad = Vec::new();
    for g in all.iter().filter(|g| g.n() <= CHAR_MAX_N) {
        let sp = Space::new(g);
        if !sp.is_partial_cube() {
            continue;
        }
        checked += 1;
        let c = characterization(&sp).expect("characterization");
        if !c.agree() {
            bad.push(format!("{} {c:?}", name(g)));
        }
        let ax = axiom_checks(&sp).expect("axioms");
        if ax.interval_monotone && !(ax.peano == ax.jhc && ax.peano == sp.is_peano()) {
            bad.push(format!("{} axioms", name(g)));
        }
    }
    outcome(bad.is_empty() && checked > 0, format!("{checked} partial cubes, failures {bad:?}"))
}

fn c5_known() -> Outcome {
    let fx = |n: &str| Space::new(&fixture(n).expect("fixture"));
    let tree = Space::new(&random_tree(12, 3));
    let q3m = fx("Q3minus");
    let m41 = fx("M41");
    let k23 = fx("K23");
    let b1 = fx("B1");
    let nomcp = fx("noMCP");
    let checks = [
        ("ph(tree)=0", prehull_number(&tree).ok() == Some(0)),
        ("ph(Q3minus)=2", prehull_number(&q3m).ok() == Some(2)),
        ("ph(M41)=1", prehull_number(&m41).ok() == Some(1)),
        ("K23 not a partial cube", !k23.is_partial_cube()),
        ("M41 not Peano", !m41.is_peano()),
        ("B1 antipodal", is_antipodal(&b1)),
        ("B1 not quasi-hypertorus", is_quasi_hypertorus(b1.graph()).is_none()),
        ("noMCP netlike", is_netlike(&nomcp).unwrap_or(false)),
        ("noMCP not hyper-median", !is_hyper_median(&nomcp).hyper_median),
    ];
    let bad: Vec<&str> = checks.iter().filter(|c| !c.1).map(|c| c.0).collect();
    outcome(bad.is_empty(), format!("{} values, failures {bad:?}", checks.len()))
}

fn c6_decomposition() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(0xa3a1);
    let mut bad = Vec::new();
    for i in 0..AMALGAMS {
        let k = rng.gen_range(2..=4);
        let built = amalgam_of_tori(&mut rng, k, AMALGAM_MAX_N);
        let sp = Space::new(&built.graph);
        let ok = decompose(&sp).is_ok_and(|t| {
            let mut got = t.leaf_types();
            got.sort();
            got == built.leaf_types()
                && reassemble(&t, built.graph.n())
                    .is_ok_and(|h| matches!(are_isomorphic(&h, &built.graph), Ok(Some(_))))
        });
        if !ok {
            bad.push(i);
        }
    }
    outcome(bad.is_empty(), format!("{AMALGAMS} amalgams, failures {bad:?}"))
}

fn c7_oracles(all: &[Graph]) -> Outcome {
    let mut bad = Vec::new();
    let mut tori_checked = 0;
    let mut rng = ChaCha8Rng::seed_from_u64(0x0c7);
    for g in all {
        let sp = Space::new(g);
        if !sp.is_partial_cube() {
            continue;
        }
        let d = common::bfs_all(g);
        let n = g.n();
        for _ in 0..40 {
            let k = rng.gen_range(1..=4.min(n));
            let seed: BTreeSet<usize> = (0..k).map(|_| rng.gen_range(0..n)).collect();
            let lib: BTreeSet<usize> = hull(sp.metric(), &VertexSet::from_iter(n, seed.iter().copied())).iter().collect();
            if lib != common::hull_oracle(&d, &seed) {
                bad.push(format!("{} hull {seed:?}", name(g)));
                break;
            }
        }
        let tc = sp.theta().expect("theta");
        let lib: BTreeSet<Vec<usize>> = tc
            .classes()
            .iter()
            .map(|c| {
                let mut c = c.clone();
                c.sort();
                c
            })
            .collect();
        if lib != common::theta_oracle(g) {
            bad.push(format!("{} theta", name(g)));
        }
        if n <= TORUS_MAX_N {
            tori_checked += 1;
            let lib: BTreeSet<(Vec<usize>, usize)> = enumerate_convex_tori(&sp)
                .expect("tori")
                .iter()
                .map(|t| (t.vertex_set.to_vec(), t.dimension))
                .collect();
            if lib != common::torus_subset_oracle(g) {
                bad.push(format!("{} tori", name(g)));
            }
        }
    }
    outcome(bad.is_empty() && tori_checked > 0, format!("torus oracle on {tori_checked} graphs, failures {bad:?}"))
}

fn c8_fixed(peano: &[Graph]) -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(0xf1c5);
    let mut bad = Vec::new();
    let mut runs = 0;
    for g in peano {
        let sp = Space::new(g);
        let diamond = diamond_graph(&sp).map(|d| is_dismantlable(&d)).unwrap_or(false);
        let tgraph = torus_intersection_graph(&sp).map(|(t, _)| is_dismantlable(&t)).unwrap_or(false);
        if !diamond || !tgraph {
            bad.push(format!("{} dismantling", name(g)));
        }
        for _ in 0..CONTRACTIONS {
            runs += 1;
            let ok = random_self_contraction(&mut rng, &sp).is_ok_and(|f| {
                f.is_contraction(g)
                    && fixed_torus_under_contraction(&sp, &f).is_ok_and(|t| {
                        let image = VertexSet::from_iter(g.n(), t.vertex_set.iter().map(|x| f.apply(x)));
                        image == t.vertex_set && is_gated(sp.metric(), &t.vertex_set)
                    })
            });
            if !ok {
                bad.push(format!("{} contraction", name(g)));
                break;
            }
        }
    }
    outcome(bad.is_empty(), format!("{} graphs, {runs} contractions, failures {bad:?}", peano.len()))
}

fn c9_cube_free(peano: &[Graph]) -> Outcome {
    let mut checked = 0;
    let mut bad = Vec::new();
    for g in peano.iter().filter(|g| g.n() <= CHAR_MAX_N) {
        checked += 1;
        match cube_free_chain(&Space::new(g)) {
            Ok(c) if c.agree() => {}
            other => bad.push(format!("{} {other:?}", name(g))),
        }
    }
    outcome(bad.is_empty() && checked > 0, format!("{checked} graphs, failures {bad:?}"))
}

fn main() -> ExitCode {
    let all = common::all_builtin();
    let peano = common::peano_builtin();
    let gen_start = Instant::now();
    let pop = common::population(POPULATION, POPULATION_MAX_N, POPULATION_SEED);
    let gen_secs = gen_start.elapsed().as_secs_f64();
    let results = [
        ("euler identity", c1_euler(&pop, &peano)),
        ("idim formula", c2_idim(&pop, &peano)),
        ("helly number", c3_helly(&peano)),
        ("characterization and axioms", c4_characterization(&all)),
        ("known values", c5_known()),
        ("decomposition", c6_decomposition()),
        ("oracle agreement", c7_oracles(&all)),
        ("fixed tori and dismantling", c8_fixed(&peano)),
        ("cube-free chain", c9_cube_free(&peano)),
    ];
    let sizes: BTreeSet<usize> = pop.iter().map(|g| g.n()).collect();
    let non_median = pop.iter().filter(|g| helly_number(&Space::new(g)).ok() == Some(3)).count();
    println!(
        "population: {} graphs in {gen_secs:.1}s, orders {:?}..={:?}, {} distinct orders, {non_median} non-median",
        pop.len(),
        sizes.first(),
        sizes.last(),
        sizes.len()
    );
    let mut failed = 0;
    for (i, (label, o)) in results.iter().enumerate() {
        println!("criterion {} {label}: {} ({})", i + 1, if o.pass { "PASS" } else { "FAIL" }, o.detail);
        failed += usize::from(!o.pass);
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
