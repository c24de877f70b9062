use std::collections::BTreeSet;

use serde::Serialize;

use crate::convexity::{gated_hull_with, half_spaces, hull, is_gated};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::iso::are_isomorphic_with_limit;
use crate::metric::{Metric, INF};
use crate::peano::{quasi_hypertorus_type, PeanoFailure};
use crate::space::Space;
use crate::torus::{TorusDescriptor, TorusType};
use crate::vset::VertexSet;

/// Three vertices whose pairwise intervals meet only in common endpoints.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct MetricTriangle {
    pub x: usize,
    pub y: usize,
    pub z: usize,
}

impl MetricTriangle {
    pub fn check(m: &Metric, x: usize, y: usize, z: usize) -> Option<Self> {
        if m.d(x, y) == INF || m.d(y, z) == INF {
            return None;
        }
        let n = m.n();
        let (ixy, iyz, izx) = (m.interval(x, y), m.interval(y, z), m.interval(z, x));
        let ok = ixy.intersection(iyz) == VertexSet::singleton(n, y)
            && iyz.intersection(izx) == VertexSet::singleton(n, z)
            && izx.intersection(ixy) == VertexSet::singleton(n, x);
        ok.then_some(MetricTriangle { x, y, z })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "camelCase")]
pub enum MedianResult {
    Median { vertex: usize },
    HyperMedian { x: usize, y: usize, z: usize, hull: TorusDescriptor },
    None,
}

fn apex(m: &Metric, u: usize, s: &VertexSet) -> Option<usize> {
    let x = s.iter().max_by_key(|&x| (m.d(u, x), std::cmp::Reverse(x)))?;
    (m.interval(u, x) == s).then_some(x)
}

fn is_quasi_median(m: &Metric, (u, v, w): (usize, usize, usize), (x, y, z): (usize, usize, usize)) -> bool {
    m.d(u, v) == m.d(u, x) + m.d(x, y) + m.d(y, v)
        && m.d(v, w) == m.d(v, y) + m.d(y, z) + m.d(z, w)
        && m.d(w, u) == m.d(w, z) + m.d(z, x) + m.d(x, u)
        && MetricTriangle::check(m, x, y, z).is_some()
}

/// Median or hyper-median through the three successive interval intersections.
pub fn median_or_hyper_median(sp: &Space, u: usize, v: usize, w: usize) -> Result<MedianResult> {
    let m = sp.metric();
    for t in [u, v, w] {
        if t >= m.n() {
            return Err(Error::OutOfRange(t));
        }
    }
    m.interval_checked(u, v)?;
    m.interval_checked(u, w)?;
    let step = |a: usize, p: usize, q: usize| apex(m, a, &m.interval(a, p).intersection(m.interval(a, q)));
    let Some(x) = step(u, v, w) else { return Ok(MedianResult::None) };
    let Some(y) = step(v, x, w) else { return Ok(MedianResult::None) };
    let Some(z) = step(w, x, y) else { return Ok(MedianResult::None) };
    if x == y && y == z {
        return Ok(MedianResult::Median { vertex: x });
    }
    if !is_quasi_median(m, (u, v, w), (x, y, z)) {
        return Ok(MedianResult::None);
    }
    let h = hull(m, &VertexSet::from_iter(m.n(), [x, y, z]));
    match quasi_hypertorus_type(&sp.graph().induced(&h).0) {
        Some(ty) if ty.is_hypertorus() => {
            Ok(MedianResult::HyperMedian { x, y, z, hull: TorusDescriptor::new(h, &ty) })
        }
        _ => Ok(MedianResult::None),
    }
}

/// All quasi-medians of a triple by exhaustive search.
pub fn quasi_medians(m: &Metric, u: usize, v: usize, w: usize) -> Vec<(usize, usize, usize)> {
    let xs = m.interval(u, v).intersection(m.interval(w, u));
    let ys = m.interval(u, v).intersection(m.interval(v, w));
    let zs = m.interval(v, w).intersection(m.interval(w, u));
    let mut out = Vec::new();
    for x in xs.iter() {
        for y in ys.iter() {
            for z in zs.iter() {
                if is_quasi_median(m, (u, v, w), (x, y, z)) {
                    out.push((x, y, z));
                }
            }
        }
    }
    out
}

/// Three convex cycles pairwise sharing one edge and jointly one vertex.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct Tricycle {
    pub cycles: [VertexSet; 3],
    pub shared_vertex: usize,
    pub shared_edges: [(usize, usize); 3],
}

fn shared_edge(g: &Graph, a: &VertexSet, b: &VertexSet) -> Option<(usize, usize)> {
    let s = a.intersection(b);
    if s.len() != 2 {
        return None;
    }
    let v = s.to_vec();
    g.has_edge(v[0], v[1]).then_some((v[0], v[1]))
}

/// Exhaustive search; `allow_squares` admits up to two 4-cycles.
pub fn find_tricycle_in(g: &Graph, cycles: &[VertexSet], allow_squares: bool) -> Option<Tricycle> {
    let cs: Vec<&VertexSet> = cycles.iter().filter(|c| allow_squares || c.len() > 4).collect();
    let k = cs.len();
    let mut pair = vec![None; k * k];
    for i in 0..k {
        for j in i + 1..k {
            pair[i * k + j] = shared_edge(g, cs[i], cs[j]);
        }
    }
    for i in 0..k {
        for j in i + 1..k {
            let Some(e01) = pair[i * k + j] else { continue };
            for l in j + 1..k {
                let (Some(e02), Some(e12)) = (pair[i * k + l], pair[j * k + l]) else { continue };
                if [i, j, l].iter().filter(|&&t| cs[t].len() == 4).count() > 2 {
                    continue;
                }
                let mut common = cs[i].intersection(cs[j]);
                common.intersect_with(cs[l]);
                if common.len() == 1 {
                    return Some(Tricycle {
                        cycles: [cs[i].clone(), cs[j].clone(), cs[l].clone()],
                        shared_vertex: common.first().unwrap(),
                        shared_edges: [e01, e02, e12],
                    });
                }
            }
        }
    }
    None
}

pub fn find_tricycle(sp: &Space) -> Result<Option<Tricycle>> {
    Ok(find_tricycle_in(sp.graph(), &sp.convex_cycle_sets()?, false))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "camelCase")]
pub enum HyperMedianFailure {
    NotPeano { reason: PeanoFailure },
    Tricycle { tricycle: Tricycle },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct HyperMedianVerdict {
    pub hyper_median: bool,
    pub witness: Option<HyperMedianFailure>,
}

/// Peano and tricycle-free.
pub fn is_hyper_median(sp: &Space) -> HyperMedianVerdict {
    let pv = sp.peano();
    if !pv.peano {
        let reason = pv.witness.clone().expect("failing verdict carries a witness");
        return HyperMedianVerdict { hyper_median: false, witness: Some(HyperMedianFailure::NotPeano { reason }) };
    }
    match find_tricycle(sp).expect("Peano hosts are partial cubes") {
        Some(t) => HyperMedianVerdict { hyper_median: false, witness: Some(HyperMedianFailure::Tricycle { tricycle: t }) },
        None => HyperMedianVerdict { hyper_median: true, witness: None },
    }
}

/// A triple with neither a median nor a hyper-median.
pub fn triple_without_median(sp: &Space) -> Result<Option<(usize, usize, usize)>> {
    let n = sp.n();
    for u in 0..n {
        for v in u..n {
            for w in v..n {
                if median_or_hyper_median(sp, u, v, w)? == MedianResult::None {
                    return Ok(Some((u, v, w)));
                }
            }
        }
    }
    Ok(None)
}

/// Tricycle-free Peano partial cube whose convex tori have dimension at most 2.
pub fn is_cellular(sp: &Space) -> bool {
    is_hyper_median(sp).hyper_median && sp.tori().unwrap().iter().all(|t| t.dimension <= 2)
}

/// Convex quasi-hypertori not properly contained in another one.
pub fn maximal_tori(sp: &Space) -> Result<Vec<TorusDescriptor>> {
    let tori = sp.tori()?;
    Ok(tori
        .iter()
        .filter(|t| !tori.iter().any(|o| o.vertex_set.len() > t.vertex_set.len() && t.vertex_set.is_subset(&o.vertex_set)))
        .cloned()
        .collect())
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "camelCase")]
pub enum DecompositionTree {
    Leaf {
        torus: TorusDescriptor,
        /// Image of each vertex of the model product graph.
        embedding: Vec<usize>,
    },
    Amalgam {
        left: Box<DecompositionTree>,
        right: Box<DecompositionTree>,
        shared: VertexSet,
    },
}

impl DecompositionTree {
    pub fn leaves(&self) -> Vec<&TorusDescriptor> {
        match self {
            DecompositionTree::Leaf { torus, .. } => vec![torus],
            DecompositionTree::Amalgam { left, right, .. } => {
                let mut v = left.leaves();
                v.extend(right.leaves());
                v
            }
        }
    }

    /// Sorted isomorphism types of the leaves.
    pub fn leaf_types(&self) -> Vec<TorusType> {
        let mut v: Vec<TorusType> = self.leaves().into_iter().map(|t| t.torus_type()).collect();
        v.sort();
        v
    }

    pub fn vertex_set(&self) -> VertexSet {
        match self {
            DecompositionTree::Leaf { torus, .. } => torus.vertex_set.clone(),
            DecompositionTree::Amalgam { left, right, .. } => left.vertex_set().union(&right.vertex_set()),
        }
    }
}

/// Rebuilds a graph on `n` vertices from the leaf models.
pub fn reassemble(tree: &DecompositionTree, n: usize) -> Result<Graph> {
    fn collect(t: &DecompositionTree, out: &mut Vec<(usize, usize)>) {
        match t {
            DecompositionTree::Leaf { torus, embedding } => {
                for &(a, b) in torus.torus_type().graph().edges() {
                    let (x, y) = (embedding[a], embedding[b]);
                    out.push((x.min(y), x.max(y)));
                }
            }
            DecompositionTree::Amalgam { left, right, .. } => {
                collect(left, out);
                collect(right, out);
            }
        }
    }
    let mut edges = Vec::new();
    collect(tree, &mut edges);
    Graph::from_edges_dedup(n, edges)
}

struct Part {
    set: VertexSet,
    graph: Graph,
    map: Vec<usize>,
    space: Space,
}

impl Part {
    fn new(g: &Graph, set: VertexSet) -> Self {
        let (graph, map) = g.induced(&set);
        let space = Space::new(&graph);
        Part { set, graph, map, space }
    }

    fn lift(&self, s: &VertexSet, n: usize) -> VertexSet {
        VertexSet::from_iter(n, s.iter().map(|x| self.map[x]))
    }
}

fn cut_vertex_splits(g: &Graph) -> Vec<(VertexSet, VertexSet)> {
    let n = g.n();
    let mut out = Vec::new();
    for c in 0..n {
        let rest = VertexSet::full(n).difference(&VertexSet::singleton(n, c));
        let comps = g.components_within(&rest);
        if comps.len() > 1 {
            let mut a = comps[0].clone();
            a.insert(c);
            let b = VertexSet::full(n).difference(&comps[0]);
            out.push((a, b));
        }
    }
    out
}

fn candidate_splits(p: &Part) -> Result<Vec<(VertexSet, VertexSet)>> {
    let sp = &p.space;
    let g = &p.graph;
    let m = sp.metric();
    let n = g.n();
    let tc = sp.theta()?;
    let mut out = cut_vertex_splits(g);
    let co_u: Vec<(VertexSet, VertexSet)> = (0..tc.num_classes())
        .map(|c| (hull(m, tc.side(c, false).1), hull(m, tc.side(c, true).1)))
        .collect();
    for c in 0..tc.num_classes() {
        let (w_ab, _) = tc.side(c, false);
        let (w_ba, _) = tc.side(c, true);
        let (co_ab, co_ba) = &co_u[c];
        out.push((co_ab.union(w_ba), co_ba.union(w_ab)));
    }
    for c in 0..tc.num_classes() {
        let (co_ab, co_ba) = &co_u[c];
        let overline = co_ab.union(co_ba);
        for rev in [false, true] {
            out.push((tc.side(c, rev).0.clone(), overline.clone()));
        }
    }
    let maxi = maximal_tori(sp)?;
    let cycles = sp.convex_cycle_sets()?;
    for t in &maxi {
        let others = maxi
            .iter()
            .filter(|o| o.vertex_set != t.vertex_set)
            .fold(VertexSet::empty(n), |acc, o| acc.union(&o.vertex_set));
        out.push((t.vertex_set.clone(), others));
        let outside = VertexSet::full(n).difference(&t.vertex_set);
        let mut seed = outside.clone();
        for x in outside.iter() {
            for &y in g.neighbors(x) {
                seed.insert(y);
            }
        }
        out.push((t.vertex_set.clone(), gated_hull_with(m, &seed, &cycles)));
    }
    let mut seen = BTreeSet::new();
    out.retain(|(a, b)| {
        let key = if a <= b { (a.clone(), b.clone()) } else { (b.clone(), a.clone()) };
        seen.insert(key)
    });
    Ok(out)
}

fn maximal_in(sp: &Space) -> Result<Vec<VertexSet>> {
    Ok(maximal_tori(sp)?.into_iter().map(|t| t.vertex_set).collect())
}

/// Checks a split of `p` and returns both parts in host labels.
fn accept_split(host: &Graph, p: &Part, a: &VertexSet, b: &VertexSet) -> Result<Option<(Part, Part)>> {
    let n = p.graph.n();
    let m = p.space.metric();
    if a.is_empty() || b.is_empty() || a.len() == n || b.len() == n {
        return Ok(None);
    }
    if a.union(b).len() != n || !a.intersects(b) {
        return Ok(None);
    }
    let (a_only, b_only) = (a.difference(b), b.difference(a));
    if a_only.iter().any(|x| p.graph.neighbors(x).iter().any(|&y| b_only.contains(y))) {
        return Ok(None);
    }
    if !is_gated(m, a) || !is_gated(m, b) {
        return Ok(None);
    }
    let pa = Part::new(host, p.lift(a, host.n()));
    let pb = Part::new(host, p.lift(b, host.n()));
    let shared = pa.set.intersection(&pb.set);
    for part in [&pa, &pb] {
        if maximal_in(&part.space)?.iter().any(|t| part.lift(t, host.n()).is_subset(&shared)) {
            return Ok(None);
        }
    }
    Ok(Some((pa, pb)))
}

fn leaf(p: &Part, ty: TorusType) -> Result<DecompositionTree> {
    let model = ty.graph();
    let iso = are_isomorphic_with_limit(&model, &p.graph, model.n().max(64))?
        .ok_or_else(|| Error::CertificationFailed("leaf is not isomorphic to its model".into()))?;
    let embedding = iso.iter().map(|&x| p.map[x]).collect();
    Ok(DecompositionTree::Leaf { torus: TorusDescriptor::new(p.set.clone(), &ty), embedding })
}

fn decompose_part(host: &Graph, p: Part) -> Result<DecompositionTree> {
    if let Some(ty) = quasi_hypertorus_type(&p.graph) {
        return leaf(&p, ty);
    }
    for (a, b) in candidate_splits(&p)? {
        if let Some((pa, pb)) = accept_split(host, &p, &a, &b)? {
            let shared = pa.set.intersection(&pb.set);
            return Ok(DecompositionTree::Amalgam {
                left: Box::new(decompose_part(host, pa)?),
                right: Box::new(decompose_part(host, pb)?),
                shared,
            });
        }
    }
    Err(Error::CertificationFailed(format!("no gated split of a part with {} vertices", p.graph.n())))
}

/// Gated-amalgam tree with quasi-hypertorus leaves.
pub fn decompose(sp: &Space) -> Result<DecompositionTree> {
    if sp.n() == 0 {
        return Err(Error::EmptyGraph);
    }
    if !is_hyper_median(sp).hyper_median {
        return Err(Error::NotHyperMedian);
    }
    let g = sp.graph();
    decompose_part(g, Part::new(g, g.vertices()))
}

pub const HELLY_ORACLE_LIMIT: usize = 12;

/// 2 for median graphs and 3 otherwise.
pub fn helly_number(sp: &Space) -> Result<usize> {
    if sp.n() < 2 {
        return Err(Error::BadParams("Helly number needs at least 2 vertices".into()));
    }
    sp.require_peano()?;
    Ok(if crate::peano::is_median(sp) { 2 } else { 3 })
}

/// Largest `F` with an empty intersection of the hulls `co(F - a)`.
pub fn helly_number_oracle(m: &Metric, limit: usize) -> Result<usize> {
    let n = m.n();
    if n > limit {
        return Err(Error::TooLargeForOracle(n, limit));
    }
    if n == 0 {
        return Err(Error::EmptyGraph);
    }
    let mut best = 0;
    for k in 1..=n {
        let found = subsets(n, k).any(|f| {
            let mut acc = VertexSet::full(n);
            for &a in &f {
                let rest = VertexSet::from_iter(n, f.iter().copied().filter(|&x| x != a));
                acc.intersect_with(&hull(m, &rest));
                if acc.is_empty() {
                    break;
                }
            }
            acc.is_empty()
        });
        if !found {
            break;
        }
        best = k;
    }
    Ok(best)
}

fn subsets(n: usize, k: usize) -> impl Iterator<Item = Vec<usize>> {
    let mut cur: Vec<usize> = (0..k).collect();
    let mut done = k > n;
    std::iter::from_fn(move || {
        if done {
            return None;
        }
        let out = cur.clone();
        let mut i = k;
        loop {
            if i == 0 {
                done = true;
                break;
            }
            i -= 1;
            if cur[i] < n - k + i {
                cur[i] += 1;
                for j in i + 1..k {
                    cur[j] = cur[j - 1] + 1;
                }
                break;
            }
        }
        Some(out)
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DepthResult {
    pub depth: usize,
    /// Arcs `(a, b)` whose `W_ab` form a strictly increasing chain.
    pub chain: Vec<(usize, usize)>,
}

/// Longest strict chain of non-trivial half-spaces.
pub fn depth(sp: &Space) -> Result<DepthResult> {
    let mut hs = half_spaces(sp)?;
    hs.sort_by_key(|h| h.set.len());
    let k = hs.len();
    let mut best = vec![1usize; k];
    let mut prev = vec![usize::MAX; k];
    for j in 0..k {
        for i in 0..j {
            if hs[i].set.len() < hs[j].set.len() && hs[i].set.is_subset(&hs[j].set) && best[i] + 1 > best[j] {
                best[j] = best[i] + 1;
                prev[j] = i;
            }
        }
    }
    let Some(end) = (0..k).max_by_key(|&j| (best[j], std::cmp::Reverse(j))) else {
        return Ok(DepthResult { depth: 0, chain: vec![] });
    };
    let mut chain = vec![];
    let mut j = end;
    while j != usize::MAX {
        chain.push(hs[j].arc);
        j = prev[j];
    }
    chain.reverse();
    Ok(DepthResult { depth: best[end], chain })
}

/// A gated set of depth `k - 2` meeting every maximal convex quasi-hypertorus.
pub fn depth_witness_set(sp: &Space) -> Result<VertexSet> {
    if !is_hyper_median(sp).hyper_median {
        return Err(Error::NotHyperMedian);
    }
    let k = depth(sp)?.depth;
    if k < 2 {
        return Err(Error::DepthTooSmall(k));
    }
    let g = sp.graph();
    let m = sp.metric();
    let n = g.n();
    let tc = sp.theta()?;
    let hs = half_spaces(sp)?;
    let below = |i: usize, j: usize| hs[i].set.len() < hs[j].set.len() && hs[i].set.is_subset(&hs[j].set);
    let minimal: Vec<usize> = (0..hs.len()).filter(|&i| !(0..hs.len()).any(|l| below(l, i))).collect();
    let mut a = VertexSet::full(n);
    for j in 0..hs.len() {
        let covers_minimal = minimal
            .iter()
            .any(|&i| below(i, j) && !(0..hs.len()).any(|l| below(i, l) && below(l, j)));
        if covers_minimal {
            let (b2, a2) = hs[j].arc;
            let a_sigma = VertexSet::full(n).difference(&hs[j].set).union(&hull(m, tc.u(g, b2, a2)?));
            a.intersect_with(&a_sigma);
        }
    }
    let family = maximal_in(sp)?;
    let admissible =
        |s: &VertexSet| !s.is_empty() && family.iter().all(|t| t.intersects(s)) && is_gated(m, s);
    if !admissible(&a) {
        return Err(Error::CertificationFailed("intersection of the chain sets is not admissible".into()));
    }
    let shrinkers: Vec<VertexSet> = (0..tc.num_classes())
        .flat_map(|c| {
            let (w_ab, u_ab) = tc.side(c, false);
            let (w_ba, u_ba) = tc.side(c, true);
            [hull(m, u_ab).union(w_ba), hull(m, u_ba).union(w_ab)]
        })
        .collect();
    'outer: loop {
        for s in &shrinkers {
            let t = a.intersection(s);
            if t.len() < a.len() && admissible(&t) {
                a = t;
                continue 'outer;
            }
        }
        for x in a.to_vec() {
            let mut t = a.clone();
            t.remove(x);
            if admissible(&t) {
                a = t;
                continue 'outer;
            }
        }
        break;
    }
    let d = depth(&Space::new(&g.induced(&a).0))?.depth;
    if d != k - 2 {
        return Err(Error::CertificationFailed(format!("witness has depth {d}, expected {}", k - 2)));
    }
    Ok(a)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::{fixture, NOMCP_TRIPLE};
    use crate::generate::{cycle, hypercube, k1, k2, path, star, torus};

    fn hexagons_with_bridge() -> Graph {
        let mut e: Vec<(usize, usize)> = (0..6).map(|i| (i, (i + 1) % 6)).collect();
        e.extend((0..6).map(|i| (6 + i, 6 + (i + 1) % 6)));
        e.push((0, 6));
        Graph::from_edges_dedup(12, e).unwrap()
    }

    fn hexagon_and_square() -> Graph {
        let mut e: Vec<(usize, usize)> = (0..6).map(|i| (i, (i + 1) % 6)).collect();
        e.extend([(1, 6), (6, 7), (0, 7)]);
        Graph::from_edges_dedup(8, e).unwrap()
    }

    fn hexagon_and_octagon() -> Graph {
        let mut e: Vec<(usize, usize)> = (0..6).map(|i| (i, (i + 1) % 6)).collect();
        e.extend([(1, 6), (6, 7), (7, 8), (8, 9), (9, 10), (10, 11), (11, 0)]);
        Graph::from_edges_dedup(12, e).unwrap()
    }

    #[test]
    fn medians() {
        let sp = Space::new(&hypercube(3));
        assert_eq!(median_or_hyper_median(&sp, 3, 5, 6), Ok(MedianResult::Median { vertex: 7 }));
        assert_eq!(median_or_hyper_median(&sp, 0, 3, 5), Ok(MedianResult::Median { vertex: 1 }));
        let sp = Space::new(&cycle(6));
        let MedianResult::HyperMedian { x, y, z, hull } = median_or_hyper_median(&sp, 0, 2, 4).unwrap() else {
            panic!()
        };
        assert_eq!((x, y, z, hull.len()), (0, 2, 4, 6));
        assert_eq!(quasi_medians(sp.metric(), 0, 2, 4), vec![(0, 2, 4)]);
        let sp = Space::new(&fixture("noMCP").unwrap());
        let (u, v, w) = NOMCP_TRIPLE;
        assert_eq!(median_or_hyper_median(&sp, u, v, w), Ok(MedianResult::None));
        assert!(median_or_hyper_median(&sp, 0, 1, 99).is_err());
    }

    #[test]
    fn tricycles() {
        assert!(find_tricycle(&Space::new(&hypercube(3))).unwrap().is_none());
        let t = find_tricycle(&Space::new(&fixture("noMCP").unwrap())).unwrap().unwrap();
        assert!(t.cycles.iter().all(|c| c.len() > 4));
        assert!(find_tricycle(&Space::new(&fixture("fig6benzenoid").unwrap())).unwrap().is_some());
        let sp = Space::new(&crate::generate::prism(&cycle(6)));
        assert!(find_tricycle_in(sp.graph(), &sp.convex_cycle_sets().unwrap(), true).is_some());
        assert!(find_tricycle(&sp).unwrap().is_none());
    }

    #[test]
    fn hyper_median_recognition() {
        let sp = Space::new(&fixture("noMCP").unwrap());
        let v = is_hyper_median(&sp);
        assert!(!v.hyper_median);
        assert!(matches!(v.witness, Some(HyperMedianFailure::Tricycle { .. })));
        assert!(triple_without_median(&sp).unwrap().is_some());
        for g in [torus(&[6, 6]).unwrap(), hexagons_with_bridge(), hexagon_and_octagon(), hypercube(3)] {
            let sp = Space::new(&g);
            assert!(is_hyper_median(&sp).hyper_median);
            assert_eq!(triple_without_median(&sp), Ok(None));
        }
        assert!(!is_hyper_median(&Space::new(&fixture("M41").unwrap())).hyper_median);
    }

    #[test]
    fn cellular() {
        assert!(is_cellular(&Space::new(&cycle(6))));
        assert!(is_cellular(&Space::new(&hexagon_and_octagon())));
        assert!(!is_cellular(&Space::new(&fixture("noMCP").unwrap())));
        assert!(!is_cellular(&Space::new(&hypercube(3))));
    }

    #[test]
    fn decompositions() {
        let sp = Space::new(&hypercube(3));
        assert!(matches!(decompose(&sp).unwrap(), DecompositionTree::Leaf { .. }));
        let g = hexagon_and_square();
        let t = decompose(&Space::new(&g)).unwrap();
        let DecompositionTree::Amalgam { shared, .. } = &t else { panic!() };
        assert_eq!(shared.to_vec(), vec![0, 1]);
        assert_eq!(t.leaf_types(), vec![TorusType::new(0, &[6]), TorusType::new(2, &[])]);
        assert_eq!(reassemble(&t, g.n()).unwrap(), g);
        let g = hexagons_with_bridge();
        let t = decompose(&Space::new(&g)).unwrap();
        assert_eq!(t.leaves().len(), 3);
        assert_eq!(reassemble(&t, g.n()).unwrap(), g);
        assert_eq!(decompose(&Space::new(&fixture("noMCP").unwrap())), Err(Error::NotHyperMedian));
        let t = decompose(&Space::new(&star(4))).unwrap();
        assert_eq!(t.leaf_types(), vec![TorusType::new(1, &[]); 4]);
    }

    #[test]
    fn helly() {
        for (g, h) in [(hypercube(3), 2), (cycle(6), 3), (k2(), 2), (hexagons_with_bridge(), 3), (path(3), 2)] {
            let sp = Space::new(&g);
            assert_eq!(helly_number(&sp), Ok(h));
            assert_eq!(helly_number_oracle(sp.metric(), HELLY_ORACLE_LIMIT), Ok(h));
        }
        assert!(helly_number(&Space::new(&k1())).is_err());
        assert_eq!(helly_number_oracle(Space::new(&hypercube(4)).metric(), 12), Err(Error::TooLargeForOracle(16, 12)));
        assert_eq!(helly_number_oracle(Space::new(&fixture("K23").unwrap()).metric(), 12), Ok(2));
    }

    #[test]
    fn depths() {
        assert_eq!(depth(&Space::new(&torus(&[6, 2]).unwrap())).unwrap().depth, 1);
        assert_eq!(depth(&Space::new(&hypercube(3))).unwrap().depth, 1);
        let d = depth(&Space::new(&path(2))).unwrap();
        assert_eq!((d.depth, d.chain.len()), (2, 2));
        assert_eq!(depth(&Space::new(&k1())).unwrap().depth, 0);
        assert_eq!(depth(&Space::new(&hexagons_with_bridge())).unwrap().depth, 3);
    }

    #[test]
    fn depth_witnesses() {
        let sp = Space::new(&hexagons_with_bridge());
        assert_eq!(depth_witness_set(&sp).unwrap().to_vec(), vec![0, 6]);
        let sp = Space::new(&star(3));
        assert_eq!(depth_witness_set(&sp).unwrap().to_vec(), vec![0]);
        assert_eq!(depth_witness_set(&Space::new(&hypercube(3))), Err(Error::DepthTooSmall(1)));
        assert_eq!(depth_witness_set(&Space::new(&fixture("noMCP").unwrap())), Err(Error::NotHyperMedian));
    }
}
