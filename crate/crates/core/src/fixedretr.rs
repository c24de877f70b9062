use std::collections::{BTreeSet, VecDeque};

use rand::seq::SliceRandom;
use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::convexity::{gate_of, hull, is_convex, is_gated, prehull_step};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::hypermedian::{maximal_tori, median_or_hyper_median, MedianResult};
use crate::iso::{automorphisms_with_limit, DEFAULT_ISO_LIMIT};
use crate::metric::Metric;
use crate::space::Space;
use crate::torus::TorusDescriptor;
use crate::vset::VertexSet;

const SEARCH_BUDGET: usize = 2_000_000;

/// A vertex map `x -> map[x]`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SelfMap {
    pub map: Vec<usize>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct SelfMapFlags {
    pub contraction: bool,
    pub retraction: bool,
    pub automorphism: bool,
}

impl SelfMap {
    pub fn identity(n: usize) -> Self {
        SelfMap { map: (0..n).collect() }
    }

    pub fn constant(n: usize, v: usize) -> Self {
        SelfMap { map: vec![v; n] }
    }

    pub fn from_json(g: &Graph, s: &str) -> Result<Self> {
        let f: SelfMap = serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))?;
        if f.map.len() != g.n() {
            return Err(Error::Parse(format!("map has {} entries for {} vertices", f.map.len(), g.n())));
        }
        if let Some(&x) = f.map.iter().find(|&&x| x >= g.n()) {
            return Err(Error::OutOfRange(x));
        }
        Ok(f)
    }

    pub fn apply(&self, x: usize) -> usize {
        self.map[x]
    }

    /// `self` after `first`.
    pub fn compose(&self, first: &SelfMap) -> SelfMap {
        SelfMap { map: first.map.iter().map(|&x| self.map[x]).collect() }
    }

    pub fn image(&self) -> VertexSet {
        VertexSet::from_iter(self.map.len(), self.map.iter().copied())
    }

    pub fn is_contraction(&self, g: &Graph) -> bool {
        g.edges().iter().all(|&(x, y)| {
            let (a, b) = (self.map[x], self.map[y]);
            a == b || g.has_edge(a, b)
        })
    }

    pub fn is_retraction(&self, g: &Graph) -> bool {
        self.is_contraction(g) && self.map.iter().all(|&y| self.map[y] == y)
    }

    pub fn is_automorphism(&self, g: &Graph) -> bool {
        self.image().len() == g.n() && g.edges().iter().all(|&(x, y)| g.has_edge(self.map[x], self.map[y]))
    }

    pub fn flags(&self, g: &Graph) -> SelfMapFlags {
        SelfMapFlags {
            contraction: self.is_contraction(g),
            retraction: self.is_retraction(g),
            automorphism: self.is_automorphism(g),
        }
    }
}

pub fn automorphisms(g: &Graph) -> Result<Vec<SelfMap>> {
    Ok(automorphisms_with_limit(g, DEFAULT_ISO_LIMIT)?.into_iter().map(|map| SelfMap { map }).collect())
}

/// Vertices fixed by some power of `f`.
pub fn periodic_part(sp: &Space, f: &SelfMap) -> Result<VertexSet> {
    let g = sp.graph();
    if f.map.len() != g.n() || !f.is_contraction(g) {
        return Err(Error::NotContraction);
    }
    let mut cur = VertexSet::full(g.n());
    loop {
        let next = VertexSet::from_iter(g.n(), cur.iter().map(|x| f.map[x]));
        if next == cur {
            break;
        }
        cur = next;
    }
    if sp.is_peano() {
        let (h, _) = g.induced(&cur);
        if !Space::new(&h).is_peano() {
            return Err(Error::CertificationFailed("periodic part is not a Peano partial cube".into()));
        }
    }
    Ok(cur)
}

/// `I({u} ∪ F)` for a convex `F` and a vertex `u` adjacent to it.
pub fn minimal_convex_extension(sp: &Space, f: &VertexSet, u: usize) -> Result<VertexSet> {
    sp.require_peano()?;
    let g = sp.graph();
    if u >= g.n() {
        return Err(Error::OutOfRange(u));
    }
    if f.contains(u) || !g.neighbors(u).iter().any(|&v| f.contains(v)) {
        return Err(Error::NotNeighbor(u));
    }
    if !is_convex(sp.metric(), f) {
        return Err(Error::NotConvex);
    }
    let mut s = f.clone();
    s.insert(u);
    let ext = prehull_step(sp.metric(), &s);
    if !is_convex(sp.metric(), &ext) {
        return Err(Error::CertificationFailed("I({u} ∪ F) is not convex".into()));
    }
    Ok(ext)
}

/// Backtracking search for a contraction extending `partial`; `order` lists the free vertices.
fn search_contraction(
    g: &Graph,
    mut partial: Vec<Option<usize>>,
    order: &[usize],
    domain: &dyn Fn(usize) -> Vec<usize>,
) -> Option<Vec<usize>> {
    fn ok(g: &Graph, partial: &[Option<usize>], v: usize, img: usize) -> bool {
        g.neighbors(v).iter().all(|&w| match partial[w] {
            Some(iw) => iw == img || g.has_edge(iw, img),
            None => true,
        })
    }
    let domains: Vec<Vec<usize>> = order.iter().map(|&v| domain(v)).collect();
    let mut choice = vec![0usize; order.len()];
    let mut i = 0;
    let mut budget = SEARCH_BUDGET;
    while i < order.len() {
        let v = order[i];
        let mut placed = false;
        while choice[i] < domains[i].len() {
            let img = domains[i][choice[i]];
            choice[i] += 1;
            budget = budget.checked_sub(1)?;
            if ok(g, &partial, v, img) {
                partial[v] = Some(img);
                placed = true;
                break;
            }
        }
        if placed {
            i += 1;
        } else {
            choice[i] = 0;
            if i == 0 {
                return None;
            }
            i -= 1;
            partial[order[i]] = None;
        }
    }
    Some(partial.into_iter().map(|x| x.expect("all assigned")).collect())
}

fn bfs_order(g: &Graph, from: &VertexSet, within: &VertexSet) -> Vec<usize> {
    let mut seen = from.clone();
    let mut q: VecDeque<usize> = from.iter().collect();
    let mut order = Vec::new();
    while let Some(x) = q.pop_front() {
        for &y in g.neighbors(x) {
            if within.contains(y) && seen.insert(y) {
                order.push(y);
                q.push_back(y);
            }
        }
    }
    order
}

/// Retraction of `G[outer]` onto `inner`, identity outside `outer`.
fn retract_step(g: &Graph, inner: &VertexSet, outer: &VertexSet) -> Option<SelfMap> {
    let n = g.n();
    let partial: Vec<Option<usize>> = (0..n).map(|x| (!outer.contains(x) || inner.contains(x)).then_some(x)).collect();
    let order = bfs_order(g, inner, outer);
    let domain = |v: usize| {
        let mut cand: BTreeSet<usize> = BTreeSet::new();
        for &w in g.neighbors(v) {
            if inner.contains(w) {
                cand.insert(w);
                cand.extend(g.neighbors(w).iter().copied().filter(|&z| inner.contains(z)));
            }
        }
        if cand.is_empty() {
            inner.to_vec()
        } else {
            cand.into_iter().collect()
        }
    };
    let sub = outer.clone();
    let (h, map) = g.induced(&sub);
    let mut back = vec![usize::MAX; n];
    for (i, &x) in map.iter().enumerate() {
        back[x] = i;
    }
    let hp: Vec<Option<usize>> = map.iter().map(|&x| partial[x].map(|y| back[y])).collect();
    let horder: Vec<usize> = order.iter().map(|&x| back[x]).collect();
    let hdomain = |v: usize| domain(map[v]).into_iter().map(|y| back[y]).collect();
    let r = search_contraction(&h, hp, &horder, &hdomain)?;
    let mut out: Vec<usize> = (0..n).collect();
    for (i, &x) in map.iter().enumerate() {
        out[x] = map[r[i]];
    }
    Some(SelfMap { map: out })
}

/// Idempotent contraction onto a convex set, composed along a chain of minimal convex extensions.
pub fn retraction_onto_convex(sp: &Space, f: &VertexSet) -> Result<SelfMap> {
    sp.require_peano()?;
    if f.is_empty() {
        return Err(Error::EmptyTarget);
    }
    let m = sp.metric();
    if !is_convex(m, f) {
        return Err(Error::NotConvex);
    }
    let g = sp.graph();
    let n = g.n();
    let mut chain = vec![f.clone()];
    while chain.last().unwrap().len() < n {
        let cur = chain.last().unwrap();
        let u = (0..n)
            .find(|&u| !cur.contains(u) && g.neighbors(u).iter().any(|&v| cur.contains(v)))
            .ok_or(Error::Disconnected)?;
        chain.push(minimal_convex_extension(sp, cur, u)?);
    }
    let mut r = SelfMap::identity(n);
    for w in chain.windows(2).rev() {
        let step = retract_step(g, &w[0], &w[1])
            .ok_or_else(|| Error::CertificationFailed("no retraction onto a minimal convex extension".into()))?;
        r = step.compose(&r);
    }
    if !r.is_retraction(g) || r.image() != *f {
        return Err(Error::CertificationFailed("composed map is not a retraction onto the target".into()));
    }
    Ok(r)
}

/// Isometric cycles of length at least `min_len`, each once, starting at its least vertex.
pub fn isometric_cycles(m: &Metric, min_len: usize) -> Vec<Vec<usize>> {
    let g = m.graph();
    let n = g.n();
    let mut out = Vec::new();
    let max_len = 2 * (m.diameter() as usize).min(n);
    let mut len = min_len.max(4);
    if len % 2 == 1 {
        len += 1;
    }
    while len <= max_len {
        for s in 0..n {
            let mut path = vec![s];
            extend_cycle(m, len, &mut path, &mut out);
        }
        len += 2;
    }
    out
}

fn extend_cycle(m: &Metric, len: usize, path: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
    let g = m.graph();
    let j = path.len();
    if j == len {
        if g.has_edge(path[j - 1], path[0]) && path[1] < path[j - 1] {
            out.push(path.clone());
        }
        return;
    }
    let last = path[j - 1];
    for &w in g.neighbors(last) {
        if w <= path[0] || path.contains(&w) {
            continue;
        }
        let fits = path.iter().enumerate().all(|(i, &x)| {
            let k = j - i;
            m.d(x, w) as usize == k.min(len - k)
        });
        if fits {
            path.push(w);
            extend_cycle(m, len, path, out);
            path.pop();
        }
    }
}

fn class_sequence(sp: &Space, cycle: &[usize]) -> Vec<usize> {
    let g = sp.graph();
    let tc = sp.theta().expect("partial cube");
    let seq: Vec<usize> =
        (0..cycle.len()).map(|i| tc.class_of(g, cycle[i], cycle[(i + 1) % cycle.len()]).unwrap()).collect();
    let l = seq.len();
    let mut best: Option<Vec<usize>> = None;
    for rev in [false, true] {
        for r in 0..l {
            let cand: Vec<usize> =
                (0..l).map(|i| if rev { seq[(r + l - i) % l] } else { seq[(r + i) % l] }).collect();
            if best.as_ref().is_none_or(|b| cand < *b) {
                best = Some(cand);
            }
        }
    }
    best.unwrap_or_default()
}

/// Convex and contains a Θ-copy of every isometric cycle longer than 4.
pub fn is_cycle_representative(sp: &Space, f: &VertexSet) -> Result<bool> {
    sp.theta()?;
    if !is_convex(sp.metric(), f) {
        return Ok(false);
    }
    let cycles = isometric_cycles(sp.metric(), 6);
    let inside: BTreeSet<Vec<usize>> =
        cycles.iter().filter(|c| c.iter().all(|&x| f.contains(x))).map(|c| class_sequence(sp, c)).collect();
    Ok(cycles.iter().all(|c| inside.contains(&class_sequence(sp, c))))
}

fn is_median_graph(sp: &Space) -> bool {
    let n = sp.n();
    let m = sp.metric();
    (0..n).all(|u| {
        (u + 1..n).all(|v| {
            (v + 1..n).all(|w| {
                let i = m.interval(u, v);
                let c = i.iter().filter(|&x| m.in_interval(v, x, w) && m.in_interval(u, x, w)).count();
                c == 1
            })
        })
    })
}

/// Contraction fixing `F` that moves every outside vertex one step towards its gate.
pub fn mooring_onto(sp: &Space, f: &VertexSet) -> Result<SelfMap> {
    sp.require_peano()?;
    if f.is_empty() {
        return Err(Error::EmptyTarget);
    }
    if !(is_cycle_representative(sp, f)? || (is_convex(sp.metric(), f) && is_median_graph(sp))) {
        return Err(Error::NotCycleRepresentative);
    }
    let g = sp.graph();
    let m = sp.metric();
    let n = g.n();
    let gates: Vec<usize> = (0..n)
        .map(|x| gate_of(m, f, x).ok_or_else(|| Error::CertificationFailed(format!("vertex {x} has no gate"))))
        .collect::<Result<_>>()?;
    let partial: Vec<Option<usize>> = (0..n).map(|x| f.contains(x).then_some(x)).collect();
    let mut order: Vec<usize> = (0..n).filter(|&x| !f.contains(x)).collect();
    order.sort_by_key(|&x| (m.d(x, gates[x]), x));
    let domain = |v: usize| -> Vec<usize> {
        g.neighbors(v).iter().copied().filter(|&w| m.d(w, gates[v]) + 1 == m.d(v, gates[v])).collect()
    };
    let map = search_contraction(g, partial, &order, &domain)
        .ok_or_else(|| Error::CertificationFailed("no mooring found".into()))?;
    let mu = SelfMap { map };
    if !verify_mooring(sp, f, &mu) {
        return Err(Error::CertificationFailed("mooring fails its definition".into()));
    }
    Ok(mu)
}

pub fn verify_mooring(sp: &Space, f: &VertexSet, mu: &SelfMap) -> bool {
    let g = sp.graph();
    let m = sp.metric();
    if mu.map.len() != g.n() || !mu.is_contraction(g) || !is_gated(m, f) {
        return false;
    }
    (0..g.n()).all(|u| {
        if f.contains(u) {
            return mu.map[u] == u;
        }
        let gate = gate_of(m, f, u).expect("gated");
        let v = mu.map[u];
        g.has_edge(u, v) && m.d(v, gate) + 1 == m.d(u, gate)
    })
}

fn is_isometric(m: &Metric, f: &VertexSet) -> bool {
    let (h, map) = m.graph().induced(f);
    let hm = Metric::new(&h);
    (0..h.n()).all(|x| (x + 1..h.n()).all(|y| hm.d(x, y) == m.d(map[x], map[y])))
}

/// Isometric and closed under medians and hyper-medians of its triples.
pub fn is_strongly_faithful(sp: &Space, f: &VertexSet) -> Result<bool> {
    sp.require_peano()?;
    if f.is_empty() || !is_isometric(sp.metric(), f) {
        return Ok(false);
    }
    let vs = f.to_vec();
    for (i, &u) in vs.iter().enumerate() {
        for (j, &v) in vs.iter().enumerate().skip(i + 1) {
            for &w in &vs[j + 1..] {
                let inside = match median_or_hyper_median(sp, u, v, w)? {
                    MedianResult::Median { vertex } => f.contains(vertex),
                    MedianResult::HyperMedian { x, y, z, .. } => f.contains(x) && f.contains(y) && f.contains(z),
                    MedianResult::None => true,
                };
                if !inside {
                    return Ok(false);
                }
            }
        }
    }
    Ok(true)
}

/// Fold of `G` onto `W_ba` along the matching `U_ab -> U_ba`, for a periphery `W_ab`.
pub fn periphery_fold(sp: &Space, a: usize, b: usize) -> Result<SelfMap> {
    let g = sp.graph();
    let tc = sp.theta()?;
    let (w, u) = (tc.w(g, a, b)?, tc.u(g, a, b)?);
    if w != u {
        return Err(Error::StructureViolation(format!("W_{a}{b} is not a periphery")));
    }
    let w_ba = tc.w(g, b, a)?;
    let mut map: Vec<usize> = (0..g.n()).collect();
    for x in w.iter() {
        map[x] = g.neighbors(x).iter().copied().find(|&y| w_ba.contains(y)).expect("U_ab vertices cross the cut");
    }
    let f = SelfMap { map };
    if !f.is_retraction(g) {
        return Err(Error::CertificationFailed("fold is not a retraction".into()));
    }
    Ok(f)
}

/// Two vertices are adjacent when some convex quasi-hypertorus contains both.
pub fn diamond_graph(sp: &Space) -> Result<Graph> {
    sp.require_peano()?;
    let n = sp.n();
    let mut edges = Vec::new();
    for t in maximal_tori(sp)? {
        let vs = t.vertex_set.to_vec();
        for (i, &x) in vs.iter().enumerate() {
            edges.extend(vs[i + 1..].iter().map(|&y| (x, y)));
        }
    }
    Graph::from_edges_dedup(n, edges)
}

/// Intersection graph of the maximal gated quasi-hypertori, with its vertex index.
pub fn torus_intersection_graph(sp: &Space) -> Result<(Graph, Vec<TorusDescriptor>)> {
    sp.require_peano()?;
    let tori = maximal_tori(sp)?;
    let mut edges = Vec::new();
    for i in 0..tori.len() {
        for j in i + 1..tori.len() {
            if tori[i].vertex_set.intersects(&tori[j].vertex_set) {
                edges.push((i, j));
            }
        }
    }
    Ok((Graph::new(tori.len(), edges)?, tori))
}

/// Outcome of greedy dismantling: `order` lists `(removed, dominator)` pairs.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Dismantling {
    pub dismantlable: bool,
    pub order: Vec<(usize, usize)>,
    pub remaining: Vec<usize>,
}

pub fn dismantle(g: &Graph) -> Dismantling {
    let n = g.n();
    let mut alive = VertexSet::full(n);
    let closed: Vec<VertexSet> = (0..n)
        .map(|x| {
            let mut s = VertexSet::from_iter(n, g.neighbors(x).iter().copied());
            s.insert(x);
            s
        })
        .collect();
    let mut order = Vec::new();
    'outer: while alive.len() > 1 {
        for x in alive.to_vec() {
            let nx = closed[x].intersection(&alive);
            let dominator = nx.iter().find(|&y| y != x && nx.is_subset(&closed[y]));
            if let Some(y) = dominator {
                order.push((x, y));
                alive.remove(x);
                continue 'outer;
            }
        }
        break;
    }
    Dismantling { dismantlable: alive.len() <= 1, order, remaining: alive.to_vec() }
}

pub fn is_dismantlable(g: &Graph) -> bool {
    dismantle(g).dismantlable
}

fn least_invariant(tori: &[TorusDescriptor], maps: &[SelfMap]) -> Option<TorusDescriptor> {
    tori.iter()
        .filter(|t| maps.iter().all(|f| VertexSet::from_iter(t.vertex_set.universe(), t.vertex_set.iter().map(|x| f.map[x])) == t.vertex_set))
        .min_by(|a, b| (a.len(), a.vertex_set.to_vec()).cmp(&(b.len(), b.vertex_set.to_vec())))
        .cloned()
}

/// Smallest gated quasi-hypertorus mapped onto itself by every automorphism.
pub fn fixed_torus_under_automorphisms(sp: &Space) -> Result<TorusDescriptor> {
    sp.require_peano()?;
    let maps = automorphisms(sp.graph())?;
    least_invariant(sp.tori()?, &maps)
        .ok_or_else(|| Error::CertificationFailed("no invariant quasi-hypertorus".into()))
}

/// A gated quasi-hypertorus mapped onto itself by the contraction `f`.
pub fn fixed_torus_under_contraction(sp: &Space, f: &SelfMap) -> Result<TorusDescriptor> {
    sp.require_peano()?;
    let p = periodic_part(sp, f)?;
    let g = sp.graph();
    let (h, map) = g.induced(&p);
    let hs = Space::new(&h);
    let inner = fixed_torus_under_automorphisms(&hs)?;
    let lifted = VertexSet::from_iter(g.n(), inner.vertex_set.iter().map(|x| map[x]));
    let t = sp
        .tori()?
        .iter()
        .find(|t| t.vertex_set == lifted)
        .cloned()
        .ok_or_else(|| Error::CertificationFailed("lifted torus is not convex".into()))?;
    let image = VertexSet::from_iter(g.n(), lifted.iter().map(|x| f.map[x]));
    if image != lifted || !is_gated(sp.metric(), &lifted) {
        return Err(Error::CertificationFailed("lifted torus is not fixed or not gated".into()));
    }
    Ok(t)
}

/// Random contraction: an automorphism followed by a few retractions and periphery folds.
pub fn random_self_contraction<R: Rng>(rng: &mut R, sp: &Space) -> Result<SelfMap> {
    sp.require_peano()?;
    let g = sp.graph();
    let n = g.n();
    let autos = automorphisms(g)?;
    let mut f = autos.choose(rng).cloned().unwrap_or_else(|| SelfMap::identity(n));
    let steps = rng.gen_range(0..=2);
    for _ in 0..steps {
        let step = if rng.gen_bool(0.5) {
            let k = rng.gen_range(1..=3);
            let seeds: Vec<usize> = (0..k).map(|_| rng.gen_range(0..n)).collect();
            let target = hull(sp.metric(), &VertexSet::from_iter(n, seeds));
            retraction_onto_convex(sp, &target)?
        } else {
            let tc = sp.theta()?;
            let arcs: Vec<(usize, usize)> = tc
                .class_arcs()
                .into_iter()
                .filter(|&(a, b)| tc.w(g, a, b).unwrap() == tc.u(g, a, b).unwrap())
                .collect();
            match arcs.choose(rng) {
                Some(&(a, b)) => periphery_fold(sp, a, b)?,
                None => continue,
            }
        };
        f = step.compose(&f);
    }
    if !f.is_contraction(g) {
        return Err(Error::CertificationFailed("composite is not a contraction".into()));
    }
    Ok(f)
}

#[cfg(test)]
mod tests {
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    use super::*;
    use crate::fixtures::fixture;
    use crate::generate::{complete_bipartite, cycle, hypercube, k1, prism};

    fn c6_pendant() -> Graph {
        let mut e: Vec<(usize, usize)> = (0..6).map(|i| (i, (i + 1) % 6)).collect();
        e.push((0, 6));
        Graph::new(7, e).unwrap()
    }

    fn fused_hexagons() -> Graph {
        let mut e: Vec<(usize, usize)> = (0..6).map(|i| (i, (i + 1) % 6)).collect();
        e.extend([(1, 6), (6, 7), (7, 8), (8, 9), (9, 0)]);
        Graph::new(10, e).unwrap()
    }

    fn set(n: usize, v: &[usize]) -> VertexSet {
        VertexSet::from_iter(n, v.iter().copied())
    }

    fn minimal_convex_superset_oracle(m: &Metric, f: &VertexSet, u: usize) -> VertexSet {
        let n = m.graph().n();
        let mut best: Option<VertexSet> = None;
        for mask in 0u64..(1 << n) {
            let s = VertexSet::from_iter(n, (0..n).filter(|&i| mask >> i & 1 == 1));
            if s.contains(u) && f.is_subset(&s) && is_convex(m, &s) && best.as_ref().is_none_or(|b| s.len() < b.len()) {
                best = Some(s);
            }
        }
        best.unwrap()
    }

    #[test]
    fn self_map_flags() {
        let g = cycle(6);
        let rot = SelfMap { map: (0..6).map(|i| (i + 1) % 6).collect() };
        assert_eq!(rot.flags(&g), SelfMapFlags { contraction: true, retraction: false, automorphism: true });
        let c = SelfMap::constant(6, 2);
        assert_eq!(c.flags(&g), SelfMapFlags { contraction: true, retraction: true, automorphism: false });
        let bad = SelfMap { map: vec![0, 3, 2, 3, 4, 5] };
        assert!(!bad.is_contraction(&g));
    }

    #[test]
    fn automorphism_counts() {
        assert_eq!(automorphisms(&cycle(6)).unwrap().len(), 12);
        assert_eq!(automorphisms(&k1()).unwrap().len(), 1);
        assert_eq!(automorphisms(&c6_pendant()).unwrap().len(), 2);
    }

    #[test]
    fn periodic_parts() {
        let sp = Space::new(&cycle(6));
        assert_eq!(periodic_part(&sp, &SelfMap::identity(6)).unwrap().len(), 6);
        assert_eq!(periodic_part(&sp, &SelfMap::constant(6, 4)).unwrap().to_vec(), vec![4]);
        let rot = SelfMap { map: (0..6).map(|i| (i + 1) % 6).collect() };
        assert_eq!(periodic_part(&sp, &rot).unwrap().len(), 6);
        let bad = SelfMap { map: vec![0, 3, 2, 3, 4, 5] };
        assert!(matches!(periodic_part(&sp, &bad), Err(Error::NotContraction)));
    }

    #[test]
    fn minimal_extensions_match_oracle() {
        for (g, f, u) in [(cycle(6), vec![0, 1, 2], 3), (hypercube(3), vec![0, 1, 2, 3], 4), (fused_hexagons(), vec![0, 1], 6)]
        {
            let sp = Space::new(&g);
            let fs = set(g.n(), &f);
            let ext = minimal_convex_extension(&sp, &fs, u).unwrap();
            assert_eq!(ext, minimal_convex_superset_oracle(sp.metric(), &fs, u));
        }
        let sp = Space::new(&cycle(6));
        assert_eq!(minimal_convex_extension(&sp, &set(6, &[0, 1, 2]), 3).unwrap().len(), 6);
        assert_eq!(minimal_convex_extension(&sp, &set(6, &[0, 1]), 2).unwrap().to_vec(), vec![0, 1, 2]);
        let q = Space::new(&hypercube(3));
        assert_eq!(minimal_convex_extension(&q, &set(8, &[0, 1, 2, 3]), 4).unwrap().len(), 8);
        assert!(matches!(minimal_convex_extension(&sp, &VertexSet::full(6), 0), Err(Error::NotNeighbor(0))));
    }

    #[test]
    fn retractions() {
        for (g, f) in [
            (cycle(6), vec![0, 1, 2]),
            (hypercube(3), vec![0, 1]),
            (cycle(6), (0..6).collect()),
            (fused_hexagons(), vec![6, 7]),
            (prism(&cycle(6)), vec![0, 1, 2, 3]),
        ] {
            let sp = Space::new(&g);
            let fs = set(g.n(), &f);
            if !is_convex(sp.metric(), &fs) {
                continue;
            }
            let r = retraction_onto_convex(&sp, &fs).unwrap();
            assert!(r.is_retraction(&g));
            assert_eq!(r.image(), fs);
            assert!(is_strongly_faithful(&sp, &fs).unwrap());
        }
        let sp = Space::new(&cycle(6));
        assert_eq!(retraction_onto_convex(&sp, &VertexSet::full(6)).unwrap(), SelfMap::identity(6));
        assert!(matches!(retraction_onto_convex(&sp, &VertexSet::empty(6)), Err(Error::EmptyTarget)));
    }

    #[test]
    fn moorings() {
        let g = c6_pendant();
        let sp = Space::new(&g);
        let c = set(7, &[0, 1, 2, 3, 4, 5]);
        let mu = mooring_onto(&sp, &c).unwrap();
        assert_eq!(mu.map[6], 0);
        assert!(verify_mooring(&sp, &c, &mu));
        let q = Space::new(&hypercube(3));
        let face = set(8, &[0, 1, 2, 3]);
        let mu = mooring_onto(&q, &face).unwrap();
        assert!(verify_mooring(&q, &face, &mu));
        assert!(verify_mooring(&sp, &VertexSet::full(7), &SelfMap::identity(7)));
        assert!(!verify_mooring(&Space::new(&cycle(6)), &VertexSet::full(6), &SelfMap::constant(6, 0)));
        let p = Space::new(&prism(&cycle(6)));
        assert!(matches!(mooring_onto(&p, &set(12, &[0, 1])), Err(Error::NotCycleRepresentative)));
    }

    #[test]
    fn isometric_cycle_enumeration() {
        assert_eq!(isometric_cycles(&Metric::new(&cycle(6)), 6).len(), 1);
        assert_eq!(isometric_cycles(&Metric::new(&hypercube(3)), 6).len(), 4);
        assert_eq!(isometric_cycles(&Metric::new(&hypercube(3)), 4).len(), 10);
    }

    #[test]
    fn strong_faithfulness() {
        let sp = Space::new(&cycle(6));
        assert!(is_strongly_faithful(&sp, &set(6, &[0, 1, 2, 3])).unwrap());
        let q = Space::new(&hypercube(3));
        let hexagon = set(8, &[1, 2, 3, 4, 5, 6]);
        assert!(is_isometric(q.metric(), &hexagon));
        assert!(!is_strongly_faithful(&q, &hexagon).unwrap());
    }

    #[test]
    fn periphery_folds() {
        let g = c6_pendant();
        let sp = Space::new(&g);
        let f = periphery_fold(&sp, 6, 0).unwrap();
        assert_eq!(f.map[6], 0);
        assert!(f.is_retraction(&g));
        assert!(periphery_fold(&sp, 0, 6).is_err());
    }

    #[test]
    fn derived_graphs() {
        let sp = Space::new(&cycle(6));
        let d = diamond_graph(&sp).unwrap();
        assert_eq!(d.m(), 15);
        let (t, tori) = torus_intersection_graph(&Space::new(&fused_hexagons())).unwrap();
        assert_eq!((t.n(), t.m(), tori.len()), (2, 1, 2));
        assert_eq!(torus_intersection_graph(&Space::new(&hypercube(3))).unwrap().0.n(), 1);
    }

    #[test]
    fn dismantling() {
        assert!(is_dismantlable(&complete_bipartite(1, 5)));
        let k6 = Graph::new(6, (0..6).flat_map(|i| (i + 1..6).map(move |j| (i, j)))).unwrap();
        assert!(is_dismantlable(&k6));
        assert!(!is_dismantlable(&cycle(4)));
        assert!(is_dismantlable(&k1()));
    }

    #[test]
    fn fixed_tori() {
        let sp = Space::new(&cycle(6));
        assert_eq!(fixed_torus_under_automorphisms(&sp).unwrap().len(), 6);
        assert_eq!(fixed_torus_under_automorphisms(&Space::new(&hypercube(3))).unwrap().len(), 8);
        let t = fixed_torus_under_automorphisms(&Space::new(&c6_pendant())).unwrap();
        assert_eq!((t.dimension, t.vertex_set.to_vec()), (0, vec![0]));
        let rot2 = SelfMap { map: (0..6).map(|i| (i + 2) % 6).collect() };
        assert_eq!(fixed_torus_under_contraction(&sp, &rot2).unwrap().len(), 6);
        let t = fixed_torus_under_contraction(&sp, &SelfMap::constant(6, 3)).unwrap();
        assert_eq!(t.vertex_set.to_vec(), vec![3]);
    }

    #[test]
    fn random_contractions_fix_tori() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for g in [fused_hexagons(), c6_pendant(), fixture("fig6benzenoid").unwrap()] {
            let sp = Space::new(&g);
            for _ in 0..5 {
                let f = random_self_contraction(&mut rng, &sp).unwrap();
                assert!(f.is_contraction(&g));
                fixed_torus_under_contraction(&sp, &f).unwrap();
            }
        }
    }
}
