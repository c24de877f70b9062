use serde::Serialize;

use crate::error::{Error, Result};
use crate::metric::{Metric, INF};
use crate::space::Space;
use crate::vset::VertexSet;

/// `I(A)`: union of the intervals between members of `a`.
pub fn prehull_step(m: &Metric, a: &VertexSet) -> VertexSet {
    let mut out = a.clone();
    let v = a.to_vec();
    for (i, &x) in v.iter().enumerate() {
        for &y in &v[i + 1..] {
            out.union_with(m.interval(x, y));
        }
    }
    out
}

/// Convex hull by a worklist over new members.
pub fn hull(m: &Metric, a: &VertexSet) -> VertexSet {
    let mut s = a.clone();
    let mut members = s.to_vec();
    let mut i = 0;
    while i < members.len() {
        let z = members[i];
        for j in 0..i {
            let iv = m.interval(z, members[j]);
            for w in iv.iter() {
                if s.insert(w) {
                    members.push(w);
                }
            }
        }
        i += 1;
    }
    s
}

/// Convex hull together with the number of pre-hull steps needed to reach it.
pub fn convex_hull(m: &Metric, a: &VertexSet) -> (VertexSet, usize) {
    let mut cur = a.clone();
    let mut steps = 0;
    loop {
        let next = prehull_step(m, &cur);
        if next == cur {
            return (cur, steps);
        }
        cur = next;
        steps += 1;
    }
}

/// A pair of members whose interval leaves the set.
pub fn convexity_witness(m: &Metric, a: &VertexSet) -> Option<(usize, usize)> {
    let v = a.to_vec();
    for (i, &x) in v.iter().enumerate() {
        for &y in &v[i + 1..] {
            if !m.interval(x, y).is_subset(a) {
                return Some((x, y));
            }
        }
    }
    None
}

pub fn is_convex(m: &Metric, a: &VertexSet) -> bool {
    convexity_witness(m, a).is_none()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HalfSpace {
    pub arc: (usize, usize),
    pub set: VertexSet,
}

/// The `2 idim` half-spaces `W_ab` of a partial cube.
pub fn half_spaces(sp: &Space) -> Result<Vec<HalfSpace>> {
    let tc = sp.theta()?;
    Ok(tc
        .class_arcs()
        .into_iter()
        .map(|(a, b)| HalfSpace { arc: (a, b), set: tc.w(sp.graph(), a, b).unwrap().clone() })
        .collect())
}

/// Points at which the convex set `c` is a copoint.
pub fn attaching_points(m: &Metric, c: &VertexSet) -> VertexSet {
    let outside = c.complement();
    let mut acc = outside.clone();
    for z in outside.iter() {
        let mut s = c.clone();
        s.insert(z);
        acc.intersect_with(&hull(m, &s));
        if acc.is_empty() {
            break;
        }
    }
    acc
}

/// Worst number of pre-hull steps from a half-space plus an attaching point to its hull.
pub fn prehull_number(sp: &Space) -> Result<usize> {
    let m = sp.metric();
    let mut best = 0;
    for h in half_spaces(sp)? {
        for x in attaching_points(m, &h.set).iter() {
            let mut s = h.set.clone();
            s.insert(x);
            best = best.max(convex_hull(m, &s).1);
        }
    }
    Ok(best)
}

fn arc_sets(sp: &Space, a: usize, b: usize) -> Result<(&VertexSet, &VertexSet)> {
    let tc = sp.theta()?;
    let g = sp.graph();
    Ok((tc.w(g, a, b)?, tc.u(g, a, b)?))
}

/// For `U = U_ab`: a pair `u, v` in `I(U)` with `v` outside every `I(u, w)`, `w` in `U`.
pub fn ph_stability_witness(sp: &Space, a: usize, b: usize) -> Result<Option<(usize, usize)>> {
    let m = sp.metric();
    let (_, u_set) = arc_sets(sp, a, b)?;
    let iu = prehull_step(m, u_set);
    for u in iu.iter() {
        let mut reach = VertexSet::empty(m.n());
        for w in u_set.iter() {
            reach.union_with(m.interval(u, w));
        }
        if let Some(v) = iu.difference(&reach).first() {
            return Ok(Some((u, v)));
        }
    }
    Ok(None)
}

pub fn is_ph_stable(sp: &Space, a: usize, b: usize) -> Result<bool> {
    Ok(ph_stability_witness(sp, a, b)?.is_none())
}

/// Geodesic from `p` to `q` when `I(p,q)` is a path.
fn interval_path(m: &Metric, p: usize, q: usize) -> Option<Vec<usize>> {
    let iv = m.interval(p, q);
    let d = m.d(p, q) as usize;
    if iv.len() != d + 1 {
        return None;
    }
    let mut path: Vec<usize> = iv.to_vec();
    path.sort_by_key(|&x| m.d(p, x));
    Some(path)
}

fn certify_path(m: &Metric, iu: &VertexSet, u_set: &VertexSet, u: usize, p: usize, q: usize) -> bool {
    let dpq = m.d(p, q);
    let sps1 = iu.iter().all(|x| m.in_interval(x, u, p) || m.in_interval(x, u, q));
    if !sps1 {
        return false;
    }
    let us = u_set.to_vec();
    for (i, &x) in us.iter().enumerate() {
        for &y in &us[i + 1..] {
            if !m.in_interval(x, u, y) {
                continue;
            }
            let dxy = m.d(x, y);
            let fwd = m.d(x, p) + dpq + m.d(q, y) == dxy;
            let bwd = m.d(x, q) + dpq + m.d(p, y) == dxy;
            if !fwd && !bwd {
                return false;
            }
        }
    }
    true
}

/// Candidate `U`-paths through `u`: pairs of `U` whose interval is a path through `u` with no inner vertex in `U`.
fn candidate_paths(m: &Metric, u_set: &VertexSet, u: usize) -> Vec<Vec<usize>> {
    let us = u_set.to_vec();
    let mut out = Vec::new();
    for (i, &p) in us.iter().enumerate() {
        for &q in &us[i + 1..] {
            if m.d(p, q) < 2 || !m.in_interval(p, u, q) {
                continue;
            }
            if let Some(path) = interval_path(m, p, q) {
                if path[1..path.len() - 1].iter().all(|&x| !u_set.contains(x)) {
                    out.push(path);
                }
            }
        }
    }
    out.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    out
}

/// The convex `U_ab`-path through `u` satisfying both strong ph-stability conditions.
pub fn associated_geodesic(sp: &Space, a: usize, b: usize, u: usize) -> Result<Vec<usize>> {
    let m = sp.metric();
    let (_, u_set) = arc_sets(sp, a, b)?;
    if u >= m.n() {
        return Err(Error::OutOfRange(u));
    }
    let iu = prehull_step(m, u_set);
    if !iu.contains(u) || u_set.contains(u) {
        return Err(Error::BadParams(format!("vertex {u} is not in I(U)-U for arc {a}-{b}")));
    }
    associated_geodesic_in(m, &iu, u_set, u).ok_or(Error::NotStronglyPhStable(a, b))
}

fn associated_geodesic_in(m: &Metric, iu: &VertexSet, u_set: &VertexSet, u: usize) -> Option<Vec<usize>> {
    candidate_paths(m, u_set, u).into_iter().find(|path| {
        let (p, q) = (path[0], *path.last().unwrap());
        certify_path(m, iu, u_set, u, p, q)
    })
}

/// First vertex of `I(U_ab) - U_ab` without an associated geodesic.
pub fn strong_ph_stability_witness(sp: &Space, a: usize, b: usize) -> Result<Option<usize>> {
    let (_, u_set) = arc_sets(sp, a, b)?;
    Ok(strong_witness_for(sp.metric(), u_set))
}

pub(crate) fn strong_witness_for(m: &Metric, u_set: &VertexSet) -> Option<usize> {
    let iu = prehull_step(m, u_set);
    iu.difference(u_set).iter().find(|&u| associated_geodesic_in(m, &iu, u_set, u).is_none())
}

pub fn is_strongly_ph_stable(sp: &Space, a: usize, b: usize) -> bool {
    matches!(strong_ph_stability_witness(sp, a, b), Ok(None))
}

/// Gate of `x` in `f`: the member lying on a geodesic from `x` to every member.
pub fn gate_of(m: &Metric, f: &VertexSet, x: usize) -> Option<usize> {
    let y = f.iter().min_by_key(|&y| m.d(x, y))?;
    let dxy = m.d(x, y);
    if dxy == INF {
        return None;
    }
    f.iter().all(|z| m.d(x, z) == dxy + m.d(y, z)).then_some(y)
}

pub fn gate_witness(m: &Metric, f: &VertexSet) -> Option<usize> {
    (0..m.n()).find(|&x| gate_of(m, f, x).is_none())
}

pub fn is_gated(m: &Metric, f: &VertexSet) -> bool {
    !f.is_empty() && gate_witness(m, f).is_none()
}

/// Every listed convex cycle meeting `f` in at least three vertices lies in `f`.
pub fn is_gamma_closed(f: &VertexSet, convex_cycles: &[VertexSet]) -> bool {
    convex_cycles.iter().all(|c| c.intersection(f).len() < 3 || c.is_subset(f))
}

/// Alternates convex hull and absorption of convex cycles meeting the set in three vertices.
pub fn gated_hull_with(m: &Metric, a: &VertexSet, convex_cycles: &[VertexSet]) -> VertexSet {
    let mut h = a.clone();
    loop {
        h = hull(m, &h);
        let mut changed = false;
        for c in convex_cycles {
            if !c.is_subset(&h) && c.intersection(&h).len() >= 3 {
                h.union_with(c);
                changed = true;
            }
        }
        if !changed {
            return h;
        }
    }
}

/// Smallest gated set containing `a`, for Peano hosts.
pub fn gated_hull(sp: &Space, a: &VertexSet) -> Result<VertexSet> {
    if !sp.is_peano() {
        return Err(Error::NotPeano);
    }
    if a.is_empty() {
        return Ok(a.clone());
    }
    Ok(gated_hull_with(sp.metric(), a, &sp.convex_cycle_sets()?))
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct AxiomWitnesses {
    /// `(u, v, w, x, y)` with `x` in `I(u,w)`, `y` in `I(v,x)` and no suitable `z`.
    pub peano: Option<[usize; 5]>,
    /// `(u, v, w, v', w')` with `I(v,v')` and `I(w,w')` disjoint.
    pub pash: Option<[usize; 5]>,
    /// Convex set, outside vertex, and a vertex of the hull missed by the pair hulls.
    pub jhc: Option<(Vec<usize>, usize, usize)>,
    /// Two disjoint convex sets no half-space separates.
    pub s4: Option<(Vec<usize>, Vec<usize>)>,
    pub interval_monotone: Option<(usize, usize)>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct AxiomReport {
    pub peano: bool,
    pub pash: bool,
    pub jhc: bool,
    pub s4: bool,
    pub interval_monotone: bool,
    /// S4 is checked over hulls of at most three seeds, intervals and half-spaces only.
    pub s4_bounded: bool,
    pub witnesses: AxiomWitnesses,
}

fn peano_witness(m: &Metric) -> Option<[usize; 5]> {
    let n = m.n();
    for u in 0..n {
        for v in 0..n {
            for w in 0..n {
                let mut reach = VertexSet::empty(n);
                for z in m.interval(v, w).iter() {
                    reach.union_with(m.interval(u, z));
                }
                for x in m.interval(u, w).iter() {
                    if let Some(y) = m.interval(v, x).difference(&reach).first() {
                        return Some([u, v, w, x, y]);
                    }
                }
            }
        }
    }
    None
}

fn pash_witness(m: &Metric) -> Option<[usize; 5]> {
    let n = m.n();
    for u in 0..n {
        for v in 0..n {
            for w in 0..n {
                for v2 in m.interval(u, w).iter() {
                    let a = m.interval(v, v2);
                    for w2 in m.interval(u, v).iter() {
                        if a.is_disjoint(m.interval(w, w2)) {
                            return Some([u, v, w, v2, w2]);
                        }
                    }
                }
            }
        }
    }
    None
}

fn monotone_witness(m: &Metric) -> Option<(usize, usize)> {
    let n = m.n();
    (0..n).flat_map(|x| (x + 1..n).map(move |y| (x, y))).find(|&(x, y)| !is_convex(m, m.interval(x, y)))
}

fn pair_hulls(m: &Metric) -> Vec<VertexSet> {
    let n = m.n();
    let mut out = Vec::with_capacity(n * n);
    for x in 0..n {
        for y in 0..n {
            let iv = m.interval(x, y);
            out.push(if is_convex(m, iv) { iv.clone() } else { hull(m, iv) });
        }
    }
    out
}

fn jhc_witness(m: &Metric, sets: &[VertexSet], ph: &[VertexSet]) -> Option<(Vec<usize>, usize, usize)> {
    let n = m.n();
    for c in sets {
        for u in 0..n {
            if c.contains(u) {
                continue;
            }
            let mut joined = VertexSet::empty(n);
            for v in c.iter() {
                joined.union_with(&ph[u * n + v]);
            }
            let mut s = c.clone();
            s.insert(u);
            let full = hull(m, &s);
            if let Some(z) = full.difference(&joined).first() {
                return Some((c.to_vec(), u, z));
            }
        }
    }
    None
}

fn s4_witness(m: &Metric, convex: &[VertexSet], halves: &[VertexSet]) -> Option<(Vec<usize>, Vec<usize>)> {
    let k = halves.len();
    let masks: Vec<(VertexSet, VertexSet)> = convex
        .iter()
        .map(|c| {
            let inside = VertexSet::from_iter(k, (0..k).filter(|&i| c.is_subset(&halves[i])));
            let outside = VertexSet::from_iter(k, (0..k).filter(|&i| c.is_disjoint(&halves[i])));
            (inside, outside)
        })
        .collect();
    let _ = m;
    for i in 0..convex.len() {
        for j in i + 1..convex.len() {
            if convex[i].is_empty() || convex[j].is_empty() || !convex[i].is_disjoint(&convex[j]) {
                continue;
            }
            if masks[i].0.is_disjoint(&masks[j].1) {
                return Some((convex[i].to_vec(), convex[j].to_vec()));
            }
        }
    }
    None
}

/// Exhaustive Peano, Pash and interval-monotonicity checks; bounded JHC and S4 checks.
pub fn axiom_checks(sp: &Space) -> Result<AxiomReport> {
    let m = sp.metric();
    let g = sp.graph();
    if g.n() == 0 {
        return Err(Error::EmptyGraph);
    }
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let n = m.n();
    let ph = pair_hulls(m);
    let mut seeds: std::collections::BTreeSet<VertexSet> = Default::default();
    for x in 0..n {
        for y in x..n {
            seeds.insert(ph[x * n + y].clone());
        }
    }
    let intervals: Vec<VertexSet> = (0..n)
        .flat_map(|x| (x..n).map(move |y| (x, y)))
        .map(|(x, y)| m.interval(x, y).clone())
        .filter(|iv| is_convex(m, iv))
        .collect::<std::collections::BTreeSet<_>>()
        .into_iter()
        .collect();
    let halves: Vec<VertexSet> = match sp.theta() {
        Ok(_) => half_spaces(sp)?.into_iter().map(|h| h.set).collect(),
        Err(_) => Vec::new(),
    };
    for x in 0..n {
        for y in x + 1..n {
            for z in y + 1..n {
                let mut s = ph[x * n + y].clone();
                s.insert(z);
                seeds.insert(hull(m, &s));
            }
        }
    }
    seeds.extend(halves.iter().cloned());
    let convex: Vec<VertexSet> = seeds.into_iter().collect();
    let halves = if sp.theta().is_ok() {
        halves
    } else {
        convex.iter().filter(|c| !c.is_empty() && is_convex(m, &c.complement())).cloned().collect()
    };
    let mut jhc_sets = intervals;
    jhc_sets.extend(halves.iter().cloned());
    let w = AxiomWitnesses {
        peano: peano_witness(m),
        pash: pash_witness(m),
        jhc: jhc_witness(m, &jhc_sets, &ph),
        s4: s4_witness(m, &convex, &halves),
        interval_monotone: monotone_witness(m),
    };
    Ok(AxiomReport {
        peano: w.peano.is_none(),
        pash: w.pash.is_none(),
        jhc: w.jhc.is_none(),
        s4: w.s4.is_none(),
        interval_monotone: w.interval_monotone.is_none(),
        s4_bounded: true,
        witnesses: w,
    })
}
