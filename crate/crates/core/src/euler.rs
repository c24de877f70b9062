use std::collections::{BTreeMap, BTreeSet};

use serde::Serialize;

use crate::convexity::is_convex;
use crate::error::{Error, Result};
use crate::peano::{is_cube_free_netlike, quasi_hypertorus_type};
use crate::space::Space;
use crate::torus::{TorusDescriptor, TorusType};
use crate::vset::VertexSet;

fn small_type(g: &crate::graph::Graph) -> Option<Option<TorusType>> {
    match (g.n(), g.m()) {
        (1, 0) => Some(Some(TorusType::new(0, &[]))),
        (2, 1) => Some(Some(TorusType::new(1, &[]))),
        (4, 4) if g.regular_degree() == Some(2) => Some(Some(TorusType::new(2, &[]))),
        (n, _) if n < 4 => Some(None),
        _ => None,
    }
}

/// Convex quasi-hypertori as convex intervals `I(u,v)` that induce quasi-hypertori.
pub(crate) fn enumerate_convex_tori_in(sp: &Space) -> Vec<TorusDescriptor> {
    let m = sp.metric();
    let g = sp.graph();
    let n = m.n();
    let mut seen: BTreeSet<VertexSet> = BTreeSet::new();
    let mut out = Vec::new();
    for x in 0..n {
        for y in x..n {
            let iv = m.interval(x, y);
            if seen.contains(iv) {
                continue;
            }
            seen.insert(iv.clone());
            let (h, _) = g.induced(iv);
            let Some(deg) = h.regular_degree() else { continue };
            if h.n() < (1usize << deg.min(usize::BITS as usize - 1)) {
                continue;
            }
            let ty = match small_type(&h) {
                Some(t) => t,
                None => {
                    if !is_convex(m, iv) {
                        continue;
                    }
                    quasi_hypertorus_type(&h)
                }
            };
            if let Some(ty) = ty {
                out.push(TorusDescriptor::new(iv.clone(), &ty));
            }
        }
    }
    out.sort_by(|a, b| a.dimension.cmp(&b.dimension).then_with(|| a.vertex_set.cmp(&b.vertex_set)));
    out
}

pub fn enumerate_convex_tori(sp: &Space) -> Result<Vec<TorusDescriptor>> {
    Ok(sp.tori()?.to_vec())
}

/// Counts of convex quasi-hypertori by dimension and circumference number.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BetaTable {
    pub beta: BTreeMap<(usize, usize), usize>,
    #[serde(skip)]
    pub tori: Vec<TorusDescriptor>,
}

impl BetaTable {
    pub fn beta_ij(&self, i: usize, j: usize) -> usize {
        self.beta.get(&(i, j)).copied().unwrap_or(0)
    }

    pub fn beta_i(&self, i: usize) -> usize {
        self.beta.iter().filter(|((d, _), _)| *d == i).map(|(_, c)| c).sum()
    }

    pub fn max_dimension(&self) -> usize {
        self.beta.keys().map(|k| k.0).max().unwrap_or(0)
    }

    /// Rows `i` with entries `(j, count)`.
    pub fn rows(&self) -> Vec<(usize, Vec<(usize, usize)>)> {
        let mut rows: BTreeMap<usize, Vec<(usize, usize)>> = BTreeMap::new();
        for (&(i, j), &c) in &self.beta {
            rows.entry(i).or_default().push((j, c));
        }
        rows.into_iter().collect()
    }
}

pub fn beta_table(sp: &Space) -> Result<BetaTable> {
    let tori = sp.tori()?.to_vec();
    let mut beta = BTreeMap::new();
    for t in &tori {
        *beta.entry((t.dimension, t.gamma)).or_insert(0) += 1;
    }
    Ok(BetaTable { beta, tori })
}

/// Alternating sum of the `beta_i`.
pub fn euler_characteristic(bt: &BetaTable) -> i64 {
    (0..=bt.max_dimension()).map(|i| sign(i) * bt.beta_i(i) as i64).sum()
}

fn sign(i: usize) -> i64 {
    if i % 2 == 0 {
        1
    } else {
        -1
    }
}

pub fn idim_by_formula(bt: &BetaTable) -> i64 {
    -bt.beta.iter().map(|(&(i, j), &c)| sign(i) * ((i + j) as i64) * c as i64).sum::<i64>()
}

/// Sum of `(|C| - 4) / 2` over convex cycles.
pub fn convex_excess(sp: &Space) -> Result<usize> {
    Ok(sp.convex_cycles()?.iter().map(|c| (c.len() - 4) / 2).sum())
}

pub fn ksh_defect(sp: &Space) -> Result<i64> {
    let g = sp.graph();
    Ok(2 * g.n() as i64 - g.m() as i64 - sp.idim()? as i64 - convex_excess(sp)? as i64)
}

/// Graph on the edges of one Θ-class, adjacent when they lie on a common convex cycle.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct ZoneGraph {
    pub class_id: usize,
    pub vertices: Vec<(usize, usize)>,
    pub adjacency: Vec<(usize, usize)>,
}

impl ZoneGraph {
    pub fn graph(&self) -> crate::graph::Graph {
        crate::graph::Graph::from_edges_dedup(self.vertices.len(), self.adjacency.iter().copied())
            .expect("zone adjacency is simple")
    }

    pub fn is_tree(&self) -> bool {
        let g = self.graph();
        g.is_connected() && g.m() + 1 == g.n()
    }
}

pub fn zone_graph(sp: &Space, class_id: usize) -> Result<ZoneGraph> {
    let tc = sp.theta()?;
    let g = sp.graph();
    if class_id >= tc.num_classes() {
        return Err(Error::BadParams(format!("class {class_id} does not exist")));
    }
    let edges: Vec<(usize, usize)> = tc.classes()[class_id].iter().map(|&e| g.edges()[e]).collect();
    let mut adjacency = BTreeSet::new();
    for c in sp.convex_cycles()? {
        let inside: Vec<usize> = (0..edges.len())
            .filter(|&i| c.vertex_set.contains(edges[i].0) && c.vertex_set.contains(edges[i].1))
            .collect();
        for (k, &i) in inside.iter().enumerate() {
            for &j in &inside[k + 1..] {
                adjacency.insert((i, j));
            }
        }
    }
    Ok(ZoneGraph { class_id, vertices: edges, adjacency: adjacency.into_iter().collect() })
}

pub fn all_zone_graphs_trees(sp: &Space) -> Result<bool> {
    for c in 0..sp.idim()? {
        if !zone_graph(sp, c)?.is_tree() {
            return Ok(false);
        }
    }
    Ok(true)
}

fn gf2_rank(rows: &mut [Vec<u64>]) -> usize {
    let mut rank = 0;
    let words = rows.first().map_or(0, |r| r.len());
    for bit in 0..words * 64 {
        let (w, mask) = (bit / 64, 1u64 << (bit % 64));
        let Some(p) = (rank..rows.len()).find(|&r| rows[r][w] & mask != 0) else { continue };
        rows.swap(rank, p);
        for r in 0..rows.len() {
            if r != rank && rows[r][w] & mask != 0 {
                let (a, b) = if r < rank {
                    let (lo, hi) = rows.split_at_mut(rank);
                    (&mut lo[r], &hi[0])
                } else {
                    let (lo, hi) = rows.split_at_mut(r);
                    (&mut hi[0], &lo[rank])
                };
                for (x, y) in a.iter_mut().zip(b.iter()) {
                    *x ^= *y;
                }
            }
        }
        rank += 1;
    }
    rank
}

/// Convex cycles are independent over GF(2) and as many as the cyclomatic number.
pub fn cycle_space_basis_check(sp: &Space) -> Result<bool> {
    sp.require_peano()?;
    let g = sp.graph();
    let words = g.m().div_ceil(64).max(1);
    let mut rows: Vec<Vec<u64>> = sp
        .convex_cycles()?
        .iter()
        .map(|c| {
            let mut r = vec![0u64; words];
            for (e, &(x, y)) in g.edges().iter().enumerate() {
                if c.vertex_set.contains(x) && c.vertex_set.contains(y) {
                    r[e / 64] |= 1 << (e % 64);
                }
            }
            r
        })
        .collect();
    let count = rows.len();
    let cyclomatic = g.m() + 1 - g.n();
    Ok(gf2_rank(&mut rows) == count && count == cyclomatic)
}

/// The four conditions of the cube-free netlike characterization.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct CubeFreeChain {
    pub cube_free_netlike: bool,
    pub linear_equalities: bool,
    pub ksh_defect_is_two: bool,
    pub zone_graphs_are_trees: bool,
}

impl CubeFreeChain {
    pub fn agree(&self) -> bool {
        let v = self.cube_free_netlike;
        self.linear_equalities == v && self.ksh_defect_is_two == v && self.zone_graphs_are_trees == v
    }
}

pub fn cube_free_chain(sp: &Space) -> Result<CubeFreeChain> {
    let bt = beta_table(sp)?;
    let (b0, b1, b2) = (bt.beta_i(0) as i64, bt.beta_i(1) as i64, bt.beta_i(2) as i64);
    let e = convex_excess(sp)? as i64;
    let idim = sp.idim()? as i64;
    Ok(CubeFreeChain {
        cube_free_netlike: is_cube_free_netlike(sp)?,
        linear_equalities: b0 - b1 + b2 == 1 && idim == b1 - 2 * b2 - e,
        ksh_defect_is_two: ksh_defect(sp)? == 2,
        zone_graphs_are_trees: all_zone_graphs_trees(sp)?,
    })
}
