use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::metric::{Metric, INF};
use crate::vset::VertexSet;

/// Θ-classes of the edges plus `W`/`U` sets for both orientations of every edge.
#[derive(Clone, Debug)]
pub struct ThetaClassification {
    class_of_edge: Vec<usize>,
    classes: Vec<Vec<usize>>,
    canonical: Vec<(usize, usize)>,
    canonical_edge: Vec<usize>,
    // Per edge `(u, v)` with `u < v`: W_uv, W_vu, U_uv, U_vu.
    w_fwd: Vec<VertexSet>,
    w_bwd: Vec<VertexSet>,
    u_fwd: Vec<VertexSet>,
    u_bwd: Vec<VertexSet>,
}

struct Dsu(Vec<usize>);

impl Dsu {
    fn find(&mut self, x: usize) -> usize {
        let mut r = x;
        while self.0[r] != r {
            r = self.0[r];
        }
        let mut y = x;
        while self.0[y] != r {
            let nx = self.0[y];
            self.0[y] = r;
            y = nx;
        }
        r
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.0[ra.max(rb)] = ra.min(rb);
        }
    }
}

/// Djoković-Winkler relation on two edges.
pub fn theta_related(m: &Metric, e: (usize, usize), f: (usize, usize)) -> bool {
    let (x, y) = e;
    let (u, v) = f;
    m.d(x, u) as u64 + m.d(y, v) as u64 != m.d(x, v) as u64 + m.d(y, u) as u64
}

fn w_set(m: &Metric, a: usize, b: usize) -> VertexSet {
    VertexSet::from_iter(m.n(), (0..m.n()).filter(|&x| m.d(a, x) < m.d(b, x)))
}

fn u_set(g: &Graph, w: &VertexSet, other: &VertexSet) -> VertexSet {
    VertexSet::from_iter(g.n(), w.iter().filter(|&x| g.neighbors(x).iter().any(|&y| other.contains(y))))
}

impl ThetaClassification {
    /// Θ by the pairwise distance formula, classes by transitive closure.
    pub fn new(m: &Metric) -> Result<Self> {
        let g = m.graph();
        if g.n() == 0 {
            return Err(Error::EmptyGraph);
        }
        if !g.is_connected() {
            return Err(Error::Disconnected);
        }
        if !g.is_bipartite() {
            return Err(Error::NotBipartite);
        }
        let es = g.edges();
        let mut dsu = Dsu((0..es.len()).collect());
        for i in 0..es.len() {
            for j in i + 1..es.len() {
                if theta_related(m, es[i], es[j]) {
                    dsu.union(i, j);
                }
            }
        }
        let mut root_class = vec![usize::MAX; es.len()];
        let mut class_of_edge = vec![0; es.len()];
        let mut classes: Vec<Vec<usize>> = Vec::new();
        for e in 0..es.len() {
            let r = dsu.find(e);
            if root_class[r] == usize::MAX {
                root_class[r] = classes.len();
                classes.push(Vec::new());
            }
            class_of_edge[e] = root_class[r];
            classes[root_class[r]].push(e);
        }
        let mut canonical = Vec::with_capacity(classes.len());
        let mut canonical_edge = Vec::with_capacity(classes.len());
        for c in &classes {
            let (a, b, e) = c
                .iter()
                .flat_map(|&e| [(es[e].0, es[e].1, e), (es[e].1, es[e].0, e)])
                .min()
                .unwrap();
            canonical.push((a, b));
            canonical_edge.push(e);
        }
        let mut w_fwd = Vec::with_capacity(es.len());
        let mut w_bwd = Vec::with_capacity(es.len());
        let mut u_fwd = Vec::with_capacity(es.len());
        let mut u_bwd = Vec::with_capacity(es.len());
        for &(u, v) in es {
            let wf = w_set(m, u, v);
            let wb = w_set(m, v, u);
            u_fwd.push(u_set(g, &wf, &wb));
            u_bwd.push(u_set(g, &wb, &wf));
            w_fwd.push(wf);
            w_bwd.push(wb);
        }
        Ok(ThetaClassification { class_of_edge, classes, canonical, canonical_edge, w_fwd, w_bwd, u_fwd, u_bwd })
    }

    pub fn num_classes(&self) -> usize {
        self.classes.len()
    }

    /// Edge ids of each class.
    pub fn classes(&self) -> &[Vec<usize>] {
        &self.classes
    }

    pub fn class_of_edge(&self) -> &[usize] {
        &self.class_of_edge
    }

    /// Canonical arc of class `c`: the smallest tail, then the smallest head.
    pub fn canonical_arc(&self, c: usize) -> (usize, usize) {
        self.canonical[c]
    }

    /// Both orientations of every class, canonical one first.
    pub fn class_arcs(&self) -> Vec<(usize, usize)> {
        self.canonical.iter().flat_map(|&(a, b)| [(a, b), (b, a)]).collect()
    }

    fn edge(&self, g: &Graph, a: usize, b: usize) -> Result<(usize, bool)> {
        let e = g.edge_id(a, b).ok_or(Error::NotAnEdge(a, b))?;
        Ok((e, a < b))
    }

    pub fn class_of(&self, g: &Graph, a: usize, b: usize) -> Result<usize> {
        Ok(self.class_of_edge[self.edge(g, a, b)?.0])
    }

    pub fn w(&self, g: &Graph, a: usize, b: usize) -> Result<&VertexSet> {
        let (e, fwd) = self.edge(g, a, b)?;
        Ok(if fwd { &self.w_fwd[e] } else { &self.w_bwd[e] })
    }

    pub fn u(&self, g: &Graph, a: usize, b: usize) -> Result<&VertexSet> {
        let (e, fwd) = self.edge(g, a, b)?;
        Ok(if fwd { &self.u_fwd[e] } else { &self.u_bwd[e] })
    }

    /// `W` of the canonical orientation of class `c`.
    pub fn class_w(&self, c: usize) -> &VertexSet {
        let (a, b) = self.canonical[c];
        let e = self.canonical_edge[c];
        if a < b {
            &self.w_fwd[e]
        } else {
            &self.w_bwd[e]
        }
    }

    /// `W` of the reverse orientation of class `c`.
    pub fn class_w_rev(&self, c: usize) -> &VertexSet {
        let (a, b) = self.canonical[c];
        let e = self.canonical_edge[c];
        if a < b {
            &self.w_bwd[e]
        } else {
            &self.w_fwd[e]
        }
    }

    /// `W` and `U` of an arc given as a (class, orientation) pair.
    pub fn side(&self, c: usize, reversed: bool) -> (&VertexSet, &VertexSet) {
        let (a, b) = self.canonical[c];
        let e = self.canonical_edge[c];
        if (a < b) != reversed {
            (&self.w_fwd[e], &self.u_fwd[e])
        } else {
            (&self.w_bwd[e], &self.u_bwd[e])
        }
    }
}

/// Why a graph failed partial-cube recognition.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "camelCase")]
pub enum PartialCubeFailure {
    Empty,
    Disconnected,
    OddCycle { cycle: Vec<usize> },
    DistanceMismatch { x: usize, y: usize, hamming: usize, distance: u32 },
}

/// Hypercube labels: bit `c` of `v` is set iff `v` lies in `W` of the canonical arc of class `c`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CubeCoordinates {
    pub coords: Vec<Vec<bool>>,
}

impl CubeCoordinates {
    pub fn hamming(&self, x: usize, y: usize) -> usize {
        self.coords[x].iter().zip(&self.coords[y]).filter(|(a, b)| a != b).count()
    }

    pub fn label(&self, v: usize) -> String {
        self.coords[v].iter().map(|&b| if b { '1' } else { '0' }).collect()
    }
}

impl Serialize for CubeCoordinates {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_seq((0..self.coords.len()).map(|v| self.label(v)))
    }
}

pub fn coordinates(tc: &ThetaClassification, n: usize) -> CubeCoordinates {
    let coords = (0..n)
        .map(|v| (0..tc.num_classes()).map(|c| tc.class_w(c).contains(v)).collect())
        .collect();
    CubeCoordinates { coords }
}

/// Partial-cube test with coordinates on success.
pub fn recognize_partial_cube(
    m: &Metric,
) -> std::result::Result<(ThetaClassification, CubeCoordinates), PartialCubeFailure> {
    let g = m.graph();
    if g.n() == 0 {
        return Err(PartialCubeFailure::Empty);
    }
    if !g.is_connected() {
        return Err(PartialCubeFailure::Disconnected);
    }
    if let Err(cycle) = g.bipartition() {
        return Err(PartialCubeFailure::OddCycle { cycle });
    }
    let tc = ThetaClassification::new(m).expect("connected bipartite");
    let cc = coordinates(&tc, g.n());
    for x in 0..g.n() {
        for y in x + 1..g.n() {
            let h = cc.hamming(x, y);
            let d = m.d(x, y);
            debug_assert!(d != INF);
            if h != d as usize {
                return Err(PartialCubeFailure::DistanceMismatch { x, y, hamming: h, distance: d });
            }
        }
    }
    Ok((tc, cc))
}

pub fn is_partial_cube(g: &Graph) -> bool {
    recognize_partial_cube(&Metric::new(g)).is_ok()
}

/// Number of Θ-classes of a partial cube.
pub fn isometric_dimension(g: &Graph) -> Result<usize> {
    recognize_partial_cube(&Metric::new(g))
        .map(|(tc, _)| tc.num_classes())
        .map_err(|_| Error::NotPartialCube)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generate::{complete_bipartite, cycle, hypercube, k1, q3_minus};
    use crate::product::product2;

    fn brute_classes(m: &Metric) -> Vec<Vec<usize>> {
        // Closure of the raw relation by repeated sweeps.
        let es = m.graph().edges();
        let mut lab: Vec<usize> = (0..es.len()).collect();
        loop {
            let mut changed = false;
            for i in 0..es.len() {
                for j in 0..es.len() {
                    if theta_related(m, es[i], es[j]) && lab[j] > lab[i] {
                        lab[j] = lab[i];
                        changed = true;
                    }
                }
            }
            if !changed {
                break;
            }
        }
        let mut groups: std::collections::BTreeMap<usize, Vec<usize>> = Default::default();
        for (e, l) in lab.into_iter().enumerate() {
            groups.entry(l).or_default().push(e);
        }
        groups.into_values().collect()
    }

    #[test]
    fn class_counts() {
        let c6 = Metric::new(&cycle(6));
        let tc = ThetaClassification::new(&c6).unwrap();
        assert_eq!(tc.num_classes(), 3);
        assert!(tc.classes().iter().all(|c| c.len() == 2));
        let q3 = Metric::new(&hypercube(3));
        let tc = ThetaClassification::new(&q3).unwrap();
        assert!(tc.classes().iter().all(|c| c.len() == 4));
        let pr = Metric::new(&product2(&cycle(6), &crate::generate::k2()));
        let tc = ThetaClassification::new(&pr).unwrap();
        let mut sizes: Vec<usize> = tc.classes().iter().map(|c| c.len()).collect();
        sizes.sort();
        assert_eq!(sizes, vec![4, 4, 4, 6]);
        assert_eq!(tc.classes().to_vec(), brute_classes(&pr));
    }

    #[test]
    fn w_and_u_sets() {
        let g = cycle(6);
        let m = Metric::new(&g);
        let tc = ThetaClassification::new(&m).unwrap();
        assert_eq!(tc.w(&g, 0, 1).unwrap().len(), 3);
        assert_eq!(tc.u(&g, 0, 1).unwrap().len(), 2);
        assert_eq!(tc.w(&g, 0, 3), Err(Error::NotAnEdge(0, 3)));
        let q = hypercube(3);
        let mq = Metric::new(&q);
        let tq = ThetaClassification::new(&mq).unwrap();
        assert_eq!(tq.w(&q, 0, 1).unwrap().len(), 4);
        assert_eq!(tq.u(&q, 0, 1).unwrap().len(), 4);
    }

    #[test]
    fn partial_cube_recognition() {
        assert!(!is_partial_cube(&complete_bipartite(2, 3)));
        assert!(is_partial_cube(&q3_minus()));
        assert!(is_partial_cube(&cycle(6)));
        assert!(matches!(
            recognize_partial_cube(&Metric::new(&cycle(5))),
            Err(PartialCubeFailure::OddCycle { .. })
        ));
        assert_eq!(isometric_dimension(&cycle(6)), Ok(3));
        assert_eq!(isometric_dimension(&hypercube(3)), Ok(3));
        assert_eq!(isometric_dimension(&k1()), Ok(0));
    }
}
