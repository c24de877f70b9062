use std::collections::BTreeSet;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::convexity::{axiom_checks, hull, is_gated, prehull_number};
use crate::error::{Error, Result};
use crate::euler::{beta_table, cube_free_chain, euler_characteristic, idim_by_formula};
use crate::fixedretr::{diamond_graph, is_dismantlable, isometric_cycles, torus_intersection_graph};
use crate::graph::Graph;
use crate::hypermedian::{decompose, depth, helly_number, is_cellular, is_hyper_median};
use crate::peano::{bulges, cylinder_of, is_antipodal, is_cube_free_netlike, is_median, is_netlike, is_quasi_hypertorus};
use crate::space::Space;
use crate::torus::TorusType;
use crate::vset::VertexSet;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct ClassificationFlags {
    pub partial_cube: bool,
    pub peano: bool,
    pub median: bool,
    pub netlike: bool,
    pub cube_free_netlike: bool,
    pub cellular: bool,
    pub hyper_median: bool,
    pub quasi_hypertorus: bool,
    pub antipodal: bool,
}

pub fn classify(sp: &Space) -> ClassificationFlags {
    if !sp.is_partial_cube() {
        return ClassificationFlags::default();
    }
    let peano = sp.is_peano();
    ClassificationFlags {
        partial_cube: true,
        peano,
        median: is_median(sp),
        netlike: is_netlike(sp).unwrap_or(false),
        cube_free_netlike: is_cube_free_netlike(sp).unwrap_or(false),
        cellular: peano && is_cellular(sp),
        hyper_median: peano && is_hyper_median(sp).hyper_median,
        quasi_hypertorus: is_quasi_hypertorus(sp.graph()).is_some(),
        antipodal: is_antipodal(sp),
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct AnalysisReport {
    pub name: Option<String>,
    pub n: usize,
    pub m: usize,
    pub flags: ClassificationFlags,
    pub ph: Option<usize>,
    pub idim: Option<usize>,
    pub helly: Option<usize>,
    pub depth: Option<usize>,
    pub euler_sum: Option<i64>,
    pub idim_formula: Option<i64>,
    pub decomposition_leaf_multiset: Option<Vec<TorusType>>,
    pub warnings: Vec<String>,
}

pub fn analyze(g: &Graph) -> Result<AnalysisReport> {
    if g.n() == 0 {
        return Err(Error::EmptyGraph);
    }
    let sp = Space::new(g);
    let flags = classify(&sp);
    let mut warnings = Vec::new();
    let mut r = AnalysisReport {
        name: g.name().map(str::to_string),
        n: g.n(),
        m: g.m(),
        flags,
        ph: None,
        idim: None,
        helly: None,
        depth: None,
        euler_sum: None,
        idim_formula: None,
        decomposition_leaf_multiset: None,
        warnings: Vec::new(),
    };
    if !flags.partial_cube {
        warnings.push("not a partial cube; invariants skipped".into());
        r.warnings = warnings;
        return Ok(r);
    }
    r.ph = Some(prehull_number(&sp)?);
    r.idim = Some(sp.idim()?);
    r.depth = Some(depth(&sp)?.depth);
    if flags.peano {
        if g.n() >= 2 {
            r.helly = Some(helly_number(&sp)?);
        }
        let bt = beta_table(&sp)?;
        r.euler_sum = Some(euler_characteristic(&bt));
        r.idim_formula = Some(idim_by_formula(&bt));
        if r.euler_sum != Some(1) {
            warnings.push(format!("Euler sum is {}", r.euler_sum.unwrap()));
        }
        if r.idim_formula != r.idim.map(|d| d as i64) {
            warnings.push("isometric dimension formula disagrees with the class count".into());
        }
    } else {
        warnings.push("not a Peano partial cube; Helly and Euler invariants skipped".into());
    }
    if flags.hyper_median {
        r.decomposition_leaf_multiset = Some(decompose(&sp)?.leaf_types());
    }
    r.warnings = warnings;
    Ok(r)
}

/// The three equivalent conditions for ph-homogeneity, computed independently.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct Characterization {
    pub ph_homogeneous_sampled: bool,
    pub strongly_ph_stable: bool,
    pub bulge_structure: bool,
    pub hulls_sampled: usize,
}

impl Characterization {
    pub fn agree(&self) -> bool {
        self.ph_homogeneous_sampled == self.strongly_ph_stable && self.strongly_ph_stable == self.bulge_structure
    }
}

/// Distinct hulls of all seeds of size at most 3 and of `samples` random 4-seeds.
pub fn sampled_convex_sets(sp: &Space, samples: usize, seed: u64) -> Vec<VertexSet> {
    let n = sp.n();
    let m = sp.metric();
    let mut out: BTreeSet<VertexSet> = BTreeSet::new();
    out.insert(VertexSet::full(n));
    for a in 0..n {
        for b in a..n {
            out.insert(hull(m, &VertexSet::from_iter(n, [a, b])));
            for c in b + 1..n {
                out.insert(hull(m, &VertexSet::from_iter(n, [a, b, c])));
            }
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let all: Vec<usize> = (0..n).collect();
    for _ in 0..samples {
        let s: Vec<usize> = all.choose_multiple(&mut rng, 4.min(n)).copied().collect();
        out.insert(hull(m, &VertexSet::from_iter(n, s)));
    }
    out.into_iter().collect()
}

pub fn characterization(sp: &Space) -> Result<Characterization> {
    if !sp.is_partial_cube() {
        return Ok(Characterization {
            ph_homogeneous_sampled: false,
            strongly_ph_stable: false,
            bulge_structure: false,
            hulls_sampled: 0,
        });
    }
    let g = sp.graph();
    let sets = sampled_convex_sets(sp, 200, 0x9e37);
    let mut ph_ok = true;
    for s in &sets {
        let (h, _) = g.induced(s);
        if prehull_number(&Space::new(&h))? > 1 {
            ph_ok = false;
            break;
        }
    }
    let tc = sp.theta()?;
    let mut bulge_ok = true;
    'arcs: for (a, b) in tc.class_arcs() {
        for x in bulges(sp, a, b)? {
            if cylinder_of(sp, &x).is_err() {
                bulge_ok = false;
                break 'arcs;
            }
        }
    }
    Ok(Characterization {
        ph_homogeneous_sampled: ph_ok,
        strongly_ph_stable: sp.is_peano(),
        bulge_structure: bulge_ok,
        hulls_sampled: sets.len(),
    })
}

/// Whether the hypothesis of the open ph/isometric-cycle question holds; no conclusion is drawn.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct QuestionProbe {
    pub partial_cube: bool,
    pub ph_at_most_one: bool,
    pub cycle_hulls_are_gated_tori: bool,
    pub hypothesis: bool,
    pub peano: bool,
}

pub fn explore_q440(sp: &Space) -> Result<QuestionProbe> {
    if !sp.is_partial_cube() {
        return Ok(QuestionProbe {
            partial_cube: false,
            ph_at_most_one: false,
            cycle_hulls_are_gated_tori: false,
            hypothesis: false,
            peano: false,
        });
    }
    let g = sp.graph();
    let m = sp.metric();
    let ph = prehull_number(sp)? <= 1;
    let tori = sp.tori()?;
    let hulls_ok = isometric_cycles(m, 4).iter().all(|c| {
        let h = hull(m, &VertexSet::from_iter(g.n(), c.iter().copied()));
        is_gated(m, &h) && tori.iter().any(|t| t.vertex_set == h)
    });
    Ok(QuestionProbe {
        partial_cube: true,
        ph_at_most_one: ph,
        cycle_hulls_are_gated_tori: hulls_ok,
        hypothesis: ph && hulls_ok,
        peano: sp.is_peano(),
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skip,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct InvariantCheck {
    pub label: &'static str,
    pub status: Status,
    pub detail: String,
}

fn check(label: &'static str, ok: bool, detail: impl Into<String>) -> InvariantCheck {
    InvariantCheck { label, status: if ok { Status::Pass } else { Status::Fail }, detail: detail.into() }
}

fn skip(label: &'static str, why: &str) -> InvariantCheck {
    InvariantCheck { label, status: Status::Skip, detail: why.into() }
}

/// Runs every property check; with `strict`, checks whose hypothesis fails are reported as failures.
pub fn run_invariants(g: &Graph, strict: bool) -> Result<Vec<InvariantCheck>> {
    if g.n() == 0 {
        return Err(Error::EmptyGraph);
    }
    let sp = Space::new(g);
    let flags = classify(&sp);
    let mut out = Vec::new();
    let f = &flags;
    out.push(check(
        "class-containments",
        (!f.median || f.netlike)
            && (!f.netlike || f.peano)
            && (!f.cellular || f.cube_free_netlike)
            && (!f.cube_free_netlike || f.netlike)
            && (!f.quasi_hypertorus || (f.peano && f.antipodal))
            && (!(f.peano && f.antipodal) || f.quasi_hypertorus)
            && (!f.hyper_median || f.peano),
        serde_json::to_string(&flags).expect("flags serialize"),
    ));
    if !flags.partial_cube {
        out.push(skip("characterization-agreement", "not a partial cube"));
    } else {
        let c = characterization(&sp)?;
        out.push(check("characterization-agreement", c.agree(), serde_json::to_string(&c).expect("serializable")));
        let ax = axiom_checks(&sp)?;
        let ok = !ax.interval_monotone || (ax.peano == ax.jhc && ax.peano == sp.is_peano());
        out.push(check("axiom-equivalence", ok, format!("peano={} jhc={} monotone={}", ax.peano, ax.jhc, ax.interval_monotone)));
    }
    let peano_labels = [
        "euler-identity",
        "idim-formula",
        "helly-bound",
        "tori-gated",
        "cube-free-chain",
        "dismantlable-diamond",
        "dismantlable-torus-graph",
    ];
    if !flags.peano {
        for l in peano_labels {
            out.push(if strict {
                check(l, false, "hypothesis fails: not a Peano partial cube")
            } else {
                skip(l, "not a Peano partial cube")
            });
        }
        return Ok(out);
    }
    let bt = beta_table(&sp)?;
    let e = euler_characteristic(&bt);
    out.push(check("euler-identity", e == 1, format!("alternating sum {e}")));
    let (fd, idim) = (idim_by_formula(&bt), sp.idim()?);
    out.push(check("idim-formula", fd == idim as i64, format!("formula {fd}, classes {idim}")));
    if g.n() >= 2 {
        let h = helly_number(&sp)?;
        out.push(check("helly-bound", (2..=3).contains(&h), format!("helly {h}")));
    } else {
        out.push(skip("helly-bound", "fewer than 2 vertices"));
    }
    let m = sp.metric();
    let ungated = sp.tori()?.iter().filter(|t| !is_gated(m, &t.vertex_set)).count();
    out.push(check("tori-gated", ungated == 0, format!("{ungated} convex tori not gated")));
    let ch = cube_free_chain(&sp)?;
    out.push(check("cube-free-chain", ch.agree(), serde_json::to_string(&ch).expect("serializable")));
    let d = diamond_graph(&sp)?;
    out.push(check("dismantlable-diamond", is_dismantlable(&d), format!("{} vertices", d.n())));
    let (t, _) = torus_intersection_graph(&sp)?;
    out.push(check("dismantlable-torus-graph", is_dismantlable(&t), format!("{} maximal tori", t.n())));
    Ok(out)
}

pub fn all_pass(checks: &[InvariantCheck]) -> bool {
    checks.iter().all(|c| c.status != Status::Fail)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::fixture;
    use crate::generate::{cycle, hypercube, k1, prism};

    #[test]
    fn reports_on_known_graphs() {
        let r = analyze(&hypercube(3)).unwrap();
        assert!(r.flags.median && r.flags.peano);
        assert_eq!((r.helly, r.euler_sum, r.idim), (Some(2), Some(1), Some(3)));
        let r = analyze(&fixture("M41").unwrap()).unwrap();
        assert!(!r.flags.peano);
        assert_eq!(r.ph, Some(1));
        let r = analyze(&fixture("noMCP").unwrap()).unwrap();
        assert!(r.flags.netlike && !r.flags.hyper_median);
        assert!(analyze(&fixture("K23").unwrap()).unwrap().ph.is_none());
        assert!(matches!(analyze(&Graph::empty(0)), Err(Error::EmptyGraph)));
    }

    #[test]
    fn characterization_agrees() {
        for name in ["Q3minus", "M41", "B1"] {
            let sp = Space::new(&fixture(name).unwrap());
            assert!(characterization(&sp).unwrap().agree(), "{name}");
        }
        let c = characterization(&Space::new(&fixture("M41").unwrap())).unwrap();
        assert!(!c.ph_homogeneous_sampled);
    }

    #[test]
    fn invariant_suites() {
        assert!(all_pass(&run_invariants(&prism(&cycle(6)), true).unwrap()));
        assert!(all_pass(&run_invariants(&k1(), true).unwrap()));
        let p = prism(&cycle(6));
        let broken = Graph::new(12, p.edges().iter().copied().skip(1)).unwrap();
        let checks = run_invariants(&broken, true).unwrap();
        assert!(checks.iter().any(|c| c.label == "euler-identity" && c.status == Status::Fail));
        assert!(all_pass(&run_invariants(&broken, false).unwrap()));
    }

    #[test]
    fn question_probe() {
        let p = explore_q440(&Space::new(&cycle(6))).unwrap();
        assert!(p.hypothesis && p.peano);
        let p = explore_q440(&Space::new(&fixture("Q3minus").unwrap())).unwrap();
        assert!(!p.ph_at_most_one);
    }
}
