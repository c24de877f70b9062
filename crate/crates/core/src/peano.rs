use serde::Serialize;

use crate::convexity::{
    associated_geodesic, gate_of, hull, is_convex, is_gated, prehull_step, strong_witness_for,
};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::iso::are_isomorphic_with_limit;
use crate::metric::Metric;
use crate::product::product2;
use crate::space::Space;
use crate::theta::PartialCubeFailure;
use crate::torus::{TorusDescriptor, TorusType};
use crate::vset::VertexSet;

/// A component of `G[co(U_ab) - U_ab]` and its closed neighborhood inside `co(U_ab)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Bulge {
    pub arc: (usize, usize),
    pub component: VertexSet,
    pub closure: VertexSet,
}

/// A convex `C x A` found around a bulge.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct Hypercylinder {
    pub arc: (usize, usize),
    pub vertex_set: VertexSet,
    pub cycle: Vec<usize>,
    pub cycle_factor_length: usize,
    pub cross_section: VertexSet,
    pub layers: Vec<VertexSet>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "camelCase")]
pub enum PeanoFailure {
    NotPartialCube { reason: PartialCubeFailure },
    NotStronglyPhStable { arc: (usize, usize), vertex: usize },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PeanoVerdict {
    pub peano: bool,
    pub witness: Option<PeanoFailure>,
}

fn sides(sp: &Space) -> Result<Vec<(usize, usize, &VertexSet, &VertexSet)>> {
    let tc = sp.theta()?;
    let g = sp.graph();
    Ok(tc
        .class_arcs()
        .into_iter()
        .map(|(a, b)| (a, b, tc.w(g, a, b).unwrap(), tc.u(g, a, b).unwrap()))
        .collect())
}

/// Partial cube with every `U_ab` strongly ph-stable.
pub(crate) fn peano_verdict(sp: &Space) -> PeanoVerdict {
    if let Some(f) = sp.partial_cube_failure() {
        return PeanoVerdict { peano: false, witness: Some(PeanoFailure::NotPartialCube { reason: f.clone() }) };
    }
    for (a, b, _, u) in sides(sp).unwrap() {
        if let Some(v) = strong_witness_for(sp.metric(), u) {
            return PeanoVerdict {
                peano: false,
                witness: Some(PeanoFailure::NotStronglyPhStable { arc: (a, b), vertex: v }),
            };
        }
    }
    PeanoVerdict { peano: true, witness: None }
}

pub fn is_peano(g: &Graph) -> PeanoVerdict {
    Space::new(g).peano().clone()
}

pub fn bulges(sp: &Space, a: usize, b: usize) -> Result<Vec<Bulge>> {
    let tc = sp.theta()?;
    let g = sp.graph();
    let u = tc.u(g, a, b)?;
    let co = hull(sp.metric(), u);
    let rest = co.difference(u);
    Ok(g
        .components_within(&rest)
        .into_iter()
        .map(|comp| {
            let mut closure = comp.clone();
            for x in comp.iter() {
                for &y in g.neighbors(x) {
                    if co.contains(y) {
                        closure.insert(y);
                    }
                }
            }
            Bulge { arc: (a, b), component: comp, closure }
        })
        .collect())
}

fn theta_partner(g: &Graph, x: usize, other: &VertexSet) -> Option<usize> {
    g.neighbors(x).iter().copied().find(|&y| other.contains(y))
}

fn path_interval(m: &Metric, p: usize, q: usize) -> Option<Vec<usize>> {
    let iv = m.interval(p, q);
    if iv.len() != m.d(p, q) as usize + 1 {
        return None;
    }
    let mut v = iv.to_vec();
    v.sort_by_key(|&x| m.d(p, x));
    Some(v)
}

fn induces_cycle(g: &Graph, s: &VertexSet) -> bool {
    s.iter().all(|x| g.neighbors(x).iter().filter(|&&y| s.contains(y)).count() == 2)
        && g.components_within(s).len() == 1
}

/// The convex cycle made of `P_u`, its translate across the cut and the two joining edges.
pub fn ab_cycle(sp: &Space, a: usize, b: usize, u: usize) -> Result<Vec<usize>> {
    let tc = sp.theta()?;
    let g = sp.graph();
    let m = sp.metric();
    let w_ba = tc.w(g, b, a)?;
    let path = associated_geodesic(sp, a, b, u)?;
    let (p, q) = (path[0], *path.last().unwrap());
    let violation = |s: &str| Error::StructureViolation(format!("ab-cycle through {u}: {s}"));
    let p2 = theta_partner(g, p, w_ba).ok_or_else(|| violation("endpoint without partner"))?;
    let q2 = theta_partner(g, q, w_ba).ok_or_else(|| violation("endpoint without partner"))?;
    let back = path_interval(m, p2, q2).ok_or_else(|| violation("translate is not a unique geodesic"))?;
    if back.len() != path.len() {
        return Err(violation("translate has a different length"));
    }
    let mut cycle = path;
    cycle.extend(back.into_iter().rev());
    let set = VertexSet::from_iter(g.n(), cycle.iter().copied());
    if set.len() != cycle.len() || !induces_cycle(g, &set) {
        return Err(violation("not an induced cycle"));
    }
    if !is_convex(m, &set) || !is_gated(m, &set) {
        return Err(violation("cycle is not convex and gated"));
    }
    Ok(cycle)
}

/// Builds the hypercylinder around a bulge and certifies both bulge conditions.
pub fn cylinder_of(sp: &Space, bulge: &Bulge) -> Result<Hypercylinder> {
    let (a, b) = bulge.arc;
    let tc = sp.theta()?;
    let g = sp.graph();
    let m = sp.metric();
    let u_set = tc.u(g, a, b)?;
    let w_ab = tc.w(g, a, b)?;
    let violation = |s: String| Error::StructureViolation(format!("bulge at arc {a}-{b}: {s}"));
    let u = bulge.component.first().ok_or_else(|| violation("empty bulge".into()))?;
    let cycle = match ab_cycle(sp, a, b, u) {
        Ok(c) => c,
        Err(Error::NotStronglyPhStable(..)) => return Err(violation(format!("no ab-cycle through {u}"))),
        Err(e) => return Err(e),
    };
    let p = cycle[0];
    let section = g
        .components_within(&bulge.closure.intersection(u_set))
        .into_iter()
        .find(|c| c.contains(p))
        .ok_or_else(|| violation("cycle endpoint outside the bulge".into()))?;
    let mut seed = section.clone();
    seed.extend_from(&cycle);
    let h = hull(m, &seed);
    if h.len() != cycle.len() * section.len() {
        return Err(violation("hull is not a product".into()));
    }
    if h.intersection(w_ab) != bulge.closure {
        return Err(violation("bulge is not the cylinder minus the far side".into()));
    }
    if !is_gated(m, &h) {
        return Err(violation("cylinder is not gated".into()));
    }
    let (hg, _) = g.induced(&h);
    let (ag, _) = g.induced(&section);
    let model = product2(&crate::generate::cycle(cycle.len()), &ag);
    if are_isomorphic_with_limit(&hg, &model, hg.n().max(64))?.is_none() {
        return Err(violation("cylinder is not isomorphic to cycle x section".into()));
    }
    let co = hull(m, u_set);
    let cut = bulge.closure.difference(u_set);
    if g.components_within(&co.difference(&cut)).len() < 2 {
        return Err(violation("bulge interior does not separate the hull of U".into()));
    }
    let layers = section
        .iter()
        .map(|y| VertexSet::from_iter(g.n(), h.iter().filter(|&z| gate_of(m, &section, z) == Some(y))))
        .collect();
    Ok(Hypercylinder {
        arc: (a, b),
        vertex_set: h,
        cycle_factor_length: cycle.len(),
        cycle,
        cross_section: section,
        layers,
    })
}

/// Arcs whose `W` equals the hull of its `U`.
pub fn semi_peripheries(sp: &Space) -> Result<Vec<(usize, usize)>> {
    Ok(sides(sp)?
        .into_iter()
        .filter(|(_, _, w, u)| hull(sp.metric(), u) == **w)
        .map(|(a, b, _, _)| (a, b))
        .collect())
}

pub fn peripheries(sp: &Space) -> Result<Vec<(usize, usize)>> {
    Ok(sides(sp)?.into_iter().filter(|(_, _, w, u)| w == u).map(|(a, b, _, _)| (a, b)).collect())
}

pub fn is_strongly_semi_peripheral(sp: &Space) -> Result<bool> {
    Ok(semi_peripheries(sp)?.len() == 2 * sp.idim()?)
}

pub fn is_strongly_peripheral(sp: &Space) -> Result<bool> {
    Ok(peripheries(sp)?.len() == 2 * sp.idim()?)
}

/// Every triple has exactly one median.
pub fn median_witness(m: &Metric) -> Option<(usize, usize, usize)> {
    let n = m.n();
    for x in 0..n {
        for y in x..n {
            let ixy = m.interval(x, y);
            for z in y..n {
                let mut s = ixy.intersection(m.interval(y, z));
                s.intersect_with(m.interval(x, z));
                if s.len() != 1 {
                    return Some((x, y, z));
                }
            }
        }
    }
    None
}

pub fn is_median(sp: &Space) -> bool {
    sp.graph().n() > 0 && sp.graph().is_connected() && median_witness(sp.metric()).is_none()
}

fn is_bridge_within(g: &Graph, s: &VertexSet, e: (usize, usize)) -> bool {
    let mut seen = VertexSet::singleton(g.n(), e.0);
    let mut stack = vec![e.0];
    while let Some(x) = stack.pop() {
        for &y in g.neighbors(x) {
            if !s.contains(y) || (x, y) == e || (y, x) == e {
                continue;
            }
            if seen.insert(y) {
                stack.push(y);
            }
        }
    }
    !seen.contains(e.1)
}

/// Arc where `G[co(U_ab)]` has a cycle not inside `G[U_ab]`.
pub fn netlike_witness(sp: &Space) -> Result<Option<(usize, usize)>> {
    let g = sp.graph();
    for (a, b, _, u) in sides(sp)? {
        let co = hull(sp.metric(), u);
        let bad = g.edges().iter().any(|&(x, y)| {
            co.contains(x)
                && co.contains(y)
                && !(u.contains(x) && u.contains(y))
                && !is_bridge_within(g, &co, (x, y))
        });
        if bad {
            return Ok(Some((a, b)));
        }
    }
    Ok(None)
}

pub fn is_netlike(sp: &Space) -> Result<bool> {
    Ok(netlike_witness(sp)?.is_none())
}

fn induces_tree(g: &Graph, s: &VertexSet) -> bool {
    let (h, _) = g.induced(s);
    h.n() > 0 && h.is_connected() && h.m() + 1 == h.n()
}

/// `I(U_ab)` induces a tree for every arc.
pub fn is_cube_free_netlike(sp: &Space) -> Result<bool> {
    let g = sp.graph();
    Ok(sides(sp)?.into_iter().all(|(_, _, _, u)| induces_tree(g, &prehull_step(sp.metric(), u))))
}

/// Antipode map when every vertex has a vertex with the whole graph as interval.
pub fn antipodes(sp: &Space) -> Option<Vec<usize>> {
    let m = sp.metric();
    let n = m.n();
    if n == 0 || !sp.graph().is_connected() {
        return None;
    }
    (0..n).map(|x| (0..n).find(|&y| m.interval(x, y).len() == n)).collect()
}

pub fn is_antipodal(sp: &Space) -> bool {
    antipodes(sp).is_some()
}

/// Vertices of `X - U_ab` have one common degree in `G[X]` for every bulge `X`.
pub fn is_bulge_regular(sp: &Space) -> Result<bool> {
    sp.require_peano()?;
    let g = sp.graph();
    for (a, b, _, u) in sides(sp)? {
        for bl in bulges(sp, a, b)? {
            let degs: std::collections::BTreeSet<usize> = bl
                .closure
                .difference(u)
                .iter()
                .map(|x| g.neighbors(x).iter().filter(|&&y| bl.closure.contains(y)).count())
                .collect();
            if degs.len() > 1 {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

fn peel(g: &Graph, k2: &mut usize, cycles: &mut Vec<usize>) -> Option<()> {
    if g.n() == 1 {
        return Some(());
    }
    let sp = Space::new(g);
    let tc = sp.theta().ok()?;
    for c in 0..tc.num_classes() {
        let (w, u) = tc.side(c, false);
        let (w2, u2) = tc.side(c, true);
        if w == u && w2 == u2 {
            *k2 += 1;
            return peel(&g.induced(w).0, k2, cycles);
        }
    }
    let mut arcs = semi_peripheries(&sp).ok()?;
    arcs.sort_unstable();
    for (a, b) in arcs {
        let Some(bl) = bulges(&sp, a, b).ok()?.into_iter().next() else {
            continue;
        };
        let cyl = cylinder_of(&sp, &bl).ok()?;
        if cyl.vertex_set.len() != g.n() {
            return None;
        }
        cycles.push(cyl.cycle_factor_length);
        return peel(&g.induced(&cyl.cross_section).0, k2, cycles);
    }
    None
}

/// Factor structure of a standalone quasi-hypertorus, verified by isomorphism.
pub fn quasi_hypertorus_type(g: &Graph) -> Option<TorusType> {
    if g.n() == 0 || !g.is_connected() {
        return None;
    }
    let deg = g.regular_degree()?;
    if g.n() > 1 && g.n() % 2 == 1 {
        return None;
    }
    let mut k2 = 0;
    let mut cycles = Vec::new();
    peel(g, &mut k2, &mut cycles)?;
    let ty = TorusType::new(k2, &cycles);
    if ty.dimension() != deg || ty.order() != g.n() {
        return None;
    }
    let model = ty.graph();
    are_isomorphic_with_limit(g, &model, g.n().max(64)).ok()??;
    Some(ty)
}

pub fn is_quasi_hypertorus(g: &Graph) -> Option<TorusDescriptor> {
    quasi_hypertorus_type(g).map(|ty| TorusDescriptor::new(g.vertices(), &ty))
}
