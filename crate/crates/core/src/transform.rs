use serde::{Deserialize, Serialize};

use crate::convexity::{is_gated, prehull_step, strong_witness_for};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::hypermedian::is_hyper_median;
use crate::iso::are_isomorphic_with_limit;
use crate::metric::Metric;
use crate::space::Space;
use crate::vset::VertexSet;

/// Two overlapping vertex sets covering the graph with no edges between their private parts.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ProperCover {
    pub v0: VertexSet,
    pub v1: VertexSet,
}

#[derive(Deserialize)]
struct CoverJson {
    v0: Vec<usize>,
    v1: Vec<usize>,
}

impl ProperCover {
    pub fn new(n: usize, v0: &[usize], v1: &[usize]) -> Result<Self> {
        for &x in v0.iter().chain(v1) {
            if x >= n {
                return Err(Error::OutOfRange(x));
            }
        }
        Ok(ProperCover {
            v0: VertexSet::from_iter(n, v0.iter().copied()),
            v1: VertexSet::from_iter(n, v1.iter().copied()),
        })
    }

    /// Parses `{"v0": [...], "v1": [...]}`.
    pub fn from_json(n: usize, s: &str) -> Result<Self> {
        let c: CoverJson = serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))?;
        ProperCover::new(n, &c.v0, &c.v1)
    }

    pub fn shared(&self) -> VertexSet {
        self.v0.intersection(&self.v1)
    }

    fn side(&self, i: usize) -> &VertexSet {
        if i == 0 {
            &self.v0
        } else {
            &self.v1
        }
    }
}

fn is_isometric(m: &Metric, s: &VertexSet) -> bool {
    let (h, map) = m.graph().induced(s);
    let hm = Metric::new(&h);
    (0..h.n()).all(|x| (x + 1..h.n()).all(|y| hm.d(x, y) == m.d(map[x], map[y])))
}

pub fn validate_cover(m: &Metric, c: &ProperCover) -> Result<()> {
    let g = m.graph();
    let n = g.n();
    if c.v0.universe() != n || c.v1.universe() != n {
        return Err(Error::InvalidCover("sets do not match the graph".into()));
    }
    if !c.v0.intersects(&c.v1) {
        return Err(Error::InvalidCover("V0 and V1 are disjoint".into()));
    }
    if c.v0.union(&c.v1).len() != n {
        return Err(Error::InvalidCover("V0 and V1 do not cover the graph".into()));
    }
    let (only0, only1) = (c.v0.difference(&c.v1), c.v1.difference(&c.v0));
    if let Some((x, y)) = g.edges().iter().find(|&&(x, y)| {
        (only0.contains(x) && only1.contains(y)) || (only1.contains(x) && only0.contains(y))
    }) {
        return Err(Error::InvalidCover(format!("edge {x}-{y} joins V0-V1 and V1-V0")));
    }
    for i in 0..2 {
        if !is_isometric(m, c.side(i)) {
            return Err(Error::InvalidCover(format!("G[V{i}] is not isometric")));
        }
    }
    Ok(())
}

/// Peripheral and ph-respectful properties of a proper cover.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct CoverFlags {
    pub peripheral: bool,
    pub phr1: bool,
    pub phr2: bool,
}

impl CoverFlags {
    pub fn ph_respectful(&self) -> bool {
        self.phr1 && self.phr2
    }
}

pub fn cover_flags(m: &Metric, c: &ProperCover) -> Result<CoverFlags> {
    validate_cover(m, c)?;
    let g = m.graph();
    let shared = c.shared();
    let mut peripheral = false;
    let mut phr1 = true;
    for i in 0..2 {
        let (h, map) = g.induced(c.side(i));
        let hm = Metric::new(&h);
        let local = VertexSet::from_iter(h.n(), (0..h.n()).filter(|&x| shared.contains(map[x])));
        if prehull_step(&hm, &local).len() == h.n() {
            peripheral = true;
        }
        if strong_witness_for(&hm, &local).is_some() {
            phr1 = false;
        }
    }
    let phr2 = is_gated(m, &prehull_step(m, &shared));
    Ok(CoverFlags { peripheral, phr1, phr2 })
}

/// An expansion with the embeddings of both sides.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Expansion {
    pub graph: Graph,
    pub psi0: Vec<Option<usize>>,
    pub psi1: Vec<Option<usize>>,
}

/// Subgraph of `G x K2` induced by `V0 x {0}` and `V1 x {1}`.
pub fn expand(g: &Graph, c: &ProperCover) -> Result<Expansion> {
    validate_cover(&Metric::new(g), c)?;
    let n = g.n();
    let mut psi0 = vec![None; n];
    let mut psi1 = vec![None; n];
    let mut next = 0;
    for x in c.v0.iter() {
        psi0[x] = Some(next);
        next += 1;
    }
    for x in c.v1.iter() {
        psi1[x] = Some(next);
        next += 1;
    }
    let mut edges = Vec::new();
    for &(x, y) in g.edges() {
        for psi in [&psi0, &psi1] {
            if let (Some(a), Some(b)) = (psi[x], psi[y]) {
                edges.push((a, b));
            }
        }
    }
    for x in c.shared().iter() {
        edges.push((psi0[x].unwrap(), psi1[x].unwrap()));
    }
    Ok(Expansion { graph: Graph::new(next, edges)?, psi0, psi1 })
}

/// One Θ-contraction.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct ContractionStep {
    pub theta_class_id: usize,
    pub arc: (usize, usize),
    pub vertex_merge: Vec<usize>,
    pub resulting_graph: Graph,
    /// Images of `W_ab` and `W_ba`: the cover whose expansion undoes the step.
    pub inverse_cover: ProperCover,
}

fn contract_arc(sp: &Space, class_id: usize, arc: (usize, usize)) -> Result<ContractionStep> {
    let tc = sp.theta()?;
    let g = sp.graph();
    let n = g.n();
    let mut rep: Vec<usize> = (0..n).collect();
    for &e in &tc.classes()[class_id] {
        let (x, y) = g.edges()[e];
        rep[x.max(y)] = x.min(y);
    }
    let mut label = vec![usize::MAX; n];
    let mut next = 0;
    let mut merge = vec![0; n];
    for x in 0..n {
        let r = rep[x];
        if label[r] == usize::MAX {
            label[r] = next;
            next += 1;
        }
        merge[x] = label[r];
    }
    let edges = g.edges().iter().map(|&(x, y)| (merge[x], merge[y])).filter(|(a, b)| a != b);
    let h = Graph::from_edges_dedup(next, edges)?;
    let hs = Space::new(&h);
    if !hs.is_partial_cube() {
        return Err(Error::CertificationFailed("contraction is not a partial cube".into()));
    }
    let (a, b) = arc;
    let image = |s: &VertexSet| VertexSet::from_iter(next, s.iter().map(|x| merge[x]));
    let inverse_cover = ProperCover { v0: image(tc.w(g, a, b)?), v1: image(tc.w(g, b, a)?) };
    Ok(ContractionStep { theta_class_id: class_id, arc, vertex_merge: merge, resulting_graph: h, inverse_cover })
}

/// Collapses every edge of one Θ-class.
pub fn contract(sp: &Space, class_id: usize) -> Result<ContractionStep> {
    let tc = sp.theta()?;
    if class_id >= tc.num_classes() {
        return Err(Error::BadParams(format!("class {class_id} does not exist")));
    }
    contract_arc(sp, class_id, tc.canonical_arc(class_id))
}

/// Union of two graphs glued along a shared subgraph.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Amalgam {
    pub graph: Graph,
    pub map0: Vec<usize>,
    pub map1: Vec<usize>,
}

/// `embed0[i]` and `embed1[i]` are the two copies of shared vertex `i`.
pub fn gated_amalgam(g0: &Graph, g1: &Graph, embed0: &[usize], embed1: &[usize]) -> Result<Amalgam> {
    if embed0.len() != embed1.len() || embed0.is_empty() {
        return Err(Error::BadParams("shared embeddings must be non-empty and of equal size".into()));
    }
    for (&x, g) in embed0.iter().map(|x| (x, g0)).chain(embed1.iter().map(|x| (x, g1))) {
        if x >= g.n() {
            return Err(Error::OutOfRange(x));
        }
    }
    let k = embed0.len();
    let s0 = VertexSet::from_iter(g0.n(), embed0.iter().copied());
    let s1 = VertexSet::from_iter(g1.n(), embed1.iter().copied());
    if s0.len() != k || s1.len() != k {
        return Err(Error::BadParams("shared embeddings must be injective".into()));
    }
    for i in 0..k {
        for j in i + 1..k {
            if g0.has_edge(embed0[i], embed0[j]) != g1.has_edge(embed1[i], embed1[j]) {
                return Err(Error::BadParams("shared subgraphs are not isomorphic under the embeddings".into()));
            }
        }
    }
    if !is_gated(&Metric::new(g0), &s0) {
        return Err(Error::NotGatedInFactor(0));
    }
    if !is_gated(&Metric::new(g1), &s1) {
        return Err(Error::NotGatedInFactor(1));
    }
    let map0: Vec<usize> = (0..g0.n()).collect();
    let mut map1 = vec![usize::MAX; g1.n()];
    for i in 0..k {
        map1[embed1[i]] = embed0[i];
    }
    let mut next = g0.n();
    for m in map1.iter_mut().filter(|m| **m == usize::MAX) {
        *m = next;
        next += 1;
    }
    let edges = g0.edges().iter().copied().chain(g1.edges().iter().map(|&(x, y)| (map1[x], map1[y])));
    Ok(Amalgam { graph: Graph::from_edges_dedup(next, edges)?, map0, map1 })
}

/// Contractions down to `K1` along arcs with `W_ab = I(U_ab)`, each certified reversible.
pub fn contraction_sequence(sp: &Space) -> Result<Vec<ContractionStep>> {
    if sp.n() == 0 {
        return Err(Error::EmptyGraph);
    }
    if !is_hyper_median(sp).hyper_median {
        return Err(Error::NotHyperMedian);
    }
    let mut steps = Vec::new();
    let mut cur = Space::new(sp.graph());
    while cur.n() > 1 {
        let tc = cur.theta()?;
        let g = cur.graph();
        let mut arcs = tc.class_arcs();
        arcs.sort_unstable();
        let (a, b) = arcs
            .into_iter()
            .find(|&(a, b)| {
                let (w, u) = (tc.w(g, a, b).unwrap(), tc.u(g, a, b).unwrap());
                prehull_step(cur.metric(), u) == *w
            })
            .ok_or_else(|| Error::CertificationFailed("no arc with W = I(U)".into()))?;
        let step = contract_arc(&cur, tc.class_of(g, a, b)?, (a, b))?;
        let hm = Metric::new(&step.resulting_graph);
        let flags = cover_flags(&hm, &step.inverse_cover)
            .map_err(|e| Error::CertificationFailed(format!("inverse cover: {e}")))?;
        if !flags.peripheral || !flags.ph_respectful() {
            return Err(Error::CertificationFailed(format!("inverse cover of arc {a}-{b} has flags {flags:?}")));
        }
        let back = expand(&step.resulting_graph, &step.inverse_cover)?.graph;
        if are_isomorphic_with_limit(&back, g, g.n().max(64))?.is_none() {
            return Err(Error::CertificationFailed("expansion does not restore the graph".into()));
        }
        let next = Space::new(&step.resulting_graph);
        steps.push(step);
        cur = next;
    }
    Ok(steps)
}

/// Seeded generators of hyper-median partial cubes with known gated-amalgam leaves.
pub mod random {
    use rand::seq::SliceRandom;
    use rand::Rng;

    use super::*;
    use crate::generate::{cycle, k2};
    use crate::product::cartesian_product;
    use crate::torus::TorusType;

    /// A torus built into the graph: factor lengths (2 for `K2`) and vertex images.
    #[derive(Clone, Debug)]
    pub struct BuiltLeaf {
        pub factors: Vec<usize>,
        pub embedding: Vec<usize>,
    }

    impl BuiltLeaf {
        pub fn torus_type(&self) -> TorusType {
            let k2 = self.factors.iter().filter(|&&f| f == 2).count();
            let cycles: Vec<usize> = self.factors.iter().copied().filter(|&f| f > 2).collect();
            TorusType::new(k2, &cycles)
        }
    }

    #[derive(Clone, Debug)]
    pub struct Built {
        pub graph: Graph,
        pub leaves: Vec<BuiltLeaf>,
    }

    impl Built {
        pub fn leaf_types(&self) -> Vec<TorusType> {
            let mut v: Vec<TorusType> = self.leaves.iter().map(|l| l.torus_type()).collect();
            v.sort();
            v
        }
    }

    fn factor_graph(f: usize) -> Graph {
        if f == 2 {
            k2()
        } else {
            cycle(f)
        }
    }

    fn product_of(factors: &[usize]) -> Graph {
        if factors.is_empty() {
            return crate::generate::k1();
        }
        let gs: Vec<Graph> = factors.iter().map(|&f| factor_graph(f)).collect();
        cartesian_product(&gs).expect("connected factors").graph
    }

    fn index_of(factors: &[usize], coords: &[usize]) -> usize {
        factors.iter().zip(coords).fold(0, |acc, (&f, &c)| acc * f + c)
    }

    fn coords_of(factors: &[usize], mut v: usize) -> Vec<usize> {
        let mut c = vec![0; factors.len()];
        for i in (0..factors.len()).rev() {
            c[i] = v % factors[i];
            v /= factors[i];
        }
        c
    }

    fn random_factor<R: Rng>(rng: &mut R) -> usize {
        *[2, 2, 2, 4, 6, 6, 8].choose(rng).unwrap()
    }

    fn random_torus_factors<R: Rng>(rng: &mut R) -> Vec<usize> {
        let k = rng.gen_range(1..=2);
        (0..k).map(|_| random_factor(rng)).collect()
    }

    enum Piece {
        Full,
        Edge(usize),
        Vertex(usize),
    }

    /// A proper gated face of `leaf`: factor lengths and host vertices in model order.
    fn random_face<R: Rng>(rng: &mut R, leaf: &BuiltLeaf) -> (Vec<usize>, Vec<usize>) {
        loop {
            let pieces: Vec<Piece> = leaf
                .factors
                .iter()
                .map(|&f| match rng.gen_range(0..3) {
                    0 => Piece::Full,
                    1 if f > 2 => Piece::Edge(rng.gen_range(0..f)),
                    _ => Piece::Vertex(rng.gen_range(0..f)),
                })
                .collect();
            if pieces.iter().all(|p| matches!(p, Piece::Full)) {
                continue;
            }
            let face_factors: Vec<usize> = leaf
                .factors
                .iter()
                .zip(&pieces)
                .filter_map(|(&f, p)| match p {
                    Piece::Full => Some(f),
                    Piece::Edge(_) => Some(2),
                    Piece::Vertex(_) => None,
                })
                .collect();
            let order: usize = face_factors.iter().product();
            let verts = (0..order)
                .map(|s| {
                    let sc = coords_of(&face_factors, s);
                    let mut it = sc.into_iter();
                    let lc: Vec<usize> = leaf
                        .factors
                        .iter()
                        .zip(&pieces)
                        .map(|(&f, p)| match p {
                            Piece::Full => it.next().unwrap(),
                            Piece::Edge(c) => (c + it.next().unwrap()) % f,
                            Piece::Vertex(c) => *c,
                        })
                        .collect();
                    leaf.embedding[index_of(&leaf.factors, &lc)]
                })
                .collect();
            return (face_factors, verts);
        }
    }

    /// Gated amalgam of `leaves` random tori, each glued to one earlier leaf along a proper face.
    pub fn amalgam_of_tori<R: Rng>(rng: &mut R, leaves: usize, max_n: usize) -> Built {
        let factors = loop {
            let f = random_torus_factors(rng);
            if f.iter().product::<usize>() <= max_n {
                break f;
            }
        };
        let g = product_of(&factors);
        let mut built = Built { leaves: vec![BuiltLeaf { embedding: (0..g.n()).collect(), factors }], graph: g };
        let mut attempts = 0;
        while built.leaves.len() < leaves && attempts < 50 {
            attempts += 1;
            let leaf = built.leaves.choose(rng).unwrap().clone();
            let (face, shared) = random_face(rng, &leaf);
            let extra = random_torus_factors(rng);
            let mut nf = face.clone();
            nf.extend(&extra);
            let new_order: usize = nf.iter().product();
            let face_order = shared.len();
            if built.graph.n() + new_order - face_order > max_n {
                continue;
            }
            let ng = product_of(&nf);
            let stride: usize = extra.iter().product();
            let embed1: Vec<usize> = (0..face_order).map(|s| s * stride).collect();
            let am = gated_amalgam(&built.graph, &ng, &shared, &embed1).expect("faces of tori are gated");
            built.graph = am.graph;
            built.leaves.push(BuiltLeaf { factors: nf, embedding: am.map1 });
        }
        built
    }

    /// Random member of the test population: amalgams, products and peripheral expansions.
    pub fn hyper_median<R: Rng>(rng: &mut R, max_n: usize) -> Graph {
        loop {
            let g = match rng.gen_range(0..4) {
                0 | 1 => {
                    let k = rng.gen_range(1..=5);
                    amalgam_of_tori(rng, k, max_n).graph
                }
                2 => {
                    let k = rng.gen_range(1..=3);
                    let base = amalgam_of_tori(rng, k, max_n / 2).graph;
                    let f = *[2, 4, 6].choose(rng).unwrap();
                    cartesian_product(&[base, factor_graph(f)]).expect("connected").graph
                }
                _ => {
                    let k = rng.gen_range(1..=4);
                    let base = amalgam_of_tori(rng, k, max_n - 4).graph;
                    match random_expansion(rng, &base) {
                        Some(g) => g,
                        None => continue,
                    }
                }
            };
            if g.n() <= max_n {
                return g;
            }
        }
    }

    /// Peripheral ph-respectful expansion along a random cover.
    pub fn random_expansion<R: Rng>(rng: &mut R, g: &Graph) -> Option<Graph> {
        let sp = Space::new(g);
        let m = sp.metric();
        let n = g.n();
        let tc = sp.theta().ok()?;
        let cover = if rng.gen_bool(0.5) && tc.num_classes() > 0 {
            let c = rng.gen_range(0..tc.num_classes());
            let rev = rng.gen_bool(0.5);
            let (w_ab, _) = tc.side(c, rev);
            let (w_ba, u_ba) = tc.side(c, !rev);
            ProperCover { v0: w_ab.union(u_ba), v1: w_ba.clone() }
        } else {
            let tori = sp.tori().ok()?;
            let t = tori.choose(rng)?;
            ProperCover { v0: VertexSet::full(n), v1: t.vertex_set.clone() }
        };
        let flags = cover_flags(m, &cover).ok()?;
        if !flags.peripheral || !flags.ph_respectful() {
            return None;
        }
        Some(expand(g, &cover).ok()?.graph)
    }
}
