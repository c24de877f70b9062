use std::collections::VecDeque;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::vset::VertexSet;

/// Sentinel for pairs in different components.
pub const INF: u32 = u32::MAX;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DistanceMatrix {
    n: usize,
    d: Vec<u32>,
}

impl DistanceMatrix {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, x: usize, y: usize) -> u32 {
        self.d[x * self.n + y]
    }

    pub fn finite(&self, x: usize, y: usize) -> Option<u32> {
        let v = self.get(x, y);
        (v != INF).then_some(v)
    }

    pub fn row(&self, x: usize) -> &[u32] {
        &self.d[x * self.n..(x + 1) * self.n]
    }
}

pub fn bfs(g: &Graph, s: usize) -> Vec<u32> {
    let mut d = vec![INF; g.n()];
    d[s] = 0;
    let mut q = VecDeque::from([s]);
    while let Some(x) = q.pop_front() {
        for &y in g.neighbors(x) {
            if d[y] == INF {
                d[y] = d[x] + 1;
                q.push_back(y);
            }
        }
    }
    d
}

/// All-pairs hop distances by BFS.
pub fn distances(g: &Graph) -> DistanceMatrix {
    let n = g.n();
    let mut d = Vec::with_capacity(n * n);
    for s in 0..n {
        d.extend(bfs(g, s));
    }
    DistanceMatrix { n, d }
}

/// A graph together with its distance matrix and all geodesic intervals.
#[derive(Clone, Debug)]
pub struct Metric {
    g: Graph,
    dist: DistanceMatrix,
    iv: Vec<VertexSet>,
}

impl Metric {
    pub fn new(g: &Graph) -> Self {
        let n = g.n();
        let dist = distances(g);
        let mut iv = Vec::with_capacity(n * n);
        for x in 0..n {
            let rx = dist.row(x);
            for y in 0..n {
                let dxy = rx[y];
                if dxy == INF {
                    iv.push(VertexSet::empty(n));
                    continue;
                }
                let ry = dist.row(y);
                iv.push(VertexSet::from_iter(
                    n,
                    (0..n).filter(|&z| rx[z] != INF && rx[z] + ry[z] == dxy),
                ));
            }
        }
        Metric { g: g.clone(), dist, iv }
    }

    pub fn graph(&self) -> &Graph {
        &self.g
    }

    pub fn n(&self) -> usize {
        self.g.n()
    }

    pub fn distances(&self) -> &DistanceMatrix {
        &self.dist
    }

    /// Distance, with [`INF`] for disconnected pairs.
    pub fn d(&self, x: usize, y: usize) -> u32 {
        self.dist.get(x, y)
    }

    /// `I(x,y)`; empty for disconnected pairs.
    pub fn interval(&self, x: usize, y: usize) -> &VertexSet {
        &self.iv[x * self.n() + y]
    }

    pub fn interval_checked(&self, x: usize, y: usize) -> Result<&VertexSet> {
        let n = self.n();
        if x >= n {
            return Err(Error::OutOfRange(x));
        }
        if y >= n {
            return Err(Error::OutOfRange(y));
        }
        if self.d(x, y) == INF {
            return Err(Error::DisconnectedPair(x, y));
        }
        Ok(self.interval(x, y))
    }

    pub fn in_interval(&self, x: usize, z: usize, y: usize) -> bool {
        self.interval(x, y).contains(z)
    }

    pub fn diameter(&self) -> u32 {
        (0..self.n())
            .flat_map(|x| self.dist.row(x).iter().copied())
            .max()
            .unwrap_or(0)
    }

    /// Least distance from `x` to a member of `s`.
    pub fn dist_to_set(&self, x: usize, s: &VertexSet) -> u32 {
        s.iter().map(|y| self.d(x, y)).min().unwrap_or(INF)
    }
}

/// `interval(g, x, y)` as a free function.
pub fn interval(g: &Graph, x: usize, y: usize) -> Result<VertexSet> {
    for v in [x, y] {
        if v >= g.n() {
            return Err(Error::OutOfRange(v));
        }
    }
    let dx = bfs(g, x);
    let dy = bfs(g, y);
    if dx[y] == INF {
        return Err(Error::DisconnectedPair(x, y));
    }
    Ok(VertexSet::from_iter(
        g.n(),
        (0..g.n()).filter(|&z| dx[z] != INF && dx[z] + dy[z] == dx[y]),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generate::{cycle, hypercube};

    #[test]
    fn cycle_and_cube_distances() {
        let c6 = cycle(6);
        let d = distances(&c6);
        assert_eq!(d.get(0, 3), 3);
        let q3 = hypercube(3);
        assert_eq!(distances(&q3).get(0, 7), 3);
        assert_eq!(interval(&q3, 0, 7).unwrap().len(), 8);
        assert_eq!(interval(&c6, 0, 3).unwrap().len(), 6);
        assert_eq!(interval(&c6, 2, 2).unwrap().to_vec(), vec![2]);
    }

    #[test]
    fn disconnected_sentinel() {
        let g = Graph::new(4, [(0, 1), (2, 3)]).unwrap();
        let d = distances(&g);
        assert_eq!(d.get(0, 2), INF);
        assert_eq!(d.finite(0, 1), Some(1));
        assert_eq!(interval(&g, 0, 3), Err(Error::DisconnectedPair(0, 3)));
    }

    #[test]
    fn metric_axioms() {
        let g = hypercube(3);
        let m = Metric::new(&g);
        for x in 0..8 {
            assert_eq!(m.d(x, x), 0);
            for y in 0..8 {
                assert_eq!(m.d(x, y), m.d(y, x));
                assert_eq!(m.d(x, y) == 1, g.has_edge(x, y));
                assert_eq!(m.interval(x, y), m.interval(y, x));
                assert!(m.interval(x, y).contains(x) && m.interval(x, y).contains(y));
                for z in 0..8 {
                    assert!(m.d(x, z) <= m.d(x, y) + m.d(y, z));
                }
            }
        }
    }
}
