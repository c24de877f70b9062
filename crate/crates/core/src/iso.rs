use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::metric::{distances, DistanceMatrix};

pub const DEFAULT_ISO_LIMIT: usize = 64;

struct Matcher<'a> {
    dg: &'a DistanceMatrix,
    dh: &'a DistanceMatrix,
    order: Vec<usize>,
    cands: Vec<Vec<usize>>,
    map: Vec<usize>,
    used: Vec<bool>,
}

fn profile(d: &DistanceMatrix, g: &Graph, v: usize) -> (usize, Vec<usize>) {
    let mut counts = Vec::new();
    for &x in d.row(v) {
        let k = if x == crate::metric::INF { 0 } else { x as usize + 1 };
        if counts.len() <= k {
            counts.resize(k + 1, 0);
        }
        counts[k] += 1;
    }
    (g.degree(v), counts)
}

impl<'a> Matcher<'a> {
    fn new(g: &Graph, h: &Graph, dg: &'a DistanceMatrix, dh: &'a DistanceMatrix) -> Option<Self> {
        let n = g.n();
        let pg: Vec<_> = (0..n).map(|v| profile(dg, g, v)).collect();
        let ph: Vec<_> = (0..n).map(|v| profile(dh, h, v)).collect();
        let mut sg = pg.clone();
        let mut sh = ph.clone();
        sg.sort();
        sh.sort();
        if sg != sh {
            return None;
        }
        let cands: Vec<Vec<usize>> =
            (0..n).map(|v| (0..n).filter(|&w| pg[v] == ph[w]).collect()).collect();
        // BFS order starting from the vertex with fewest candidates, component by component.
        let mut order = Vec::with_capacity(n);
        let mut seen = vec![false; n];
        while order.len() < n {
            let s = (0..n).filter(|&v| !seen[v]).min_by_key(|&v| cands[v].len()).unwrap();
            seen[s] = true;
            let start = order.len();
            order.push(s);
            let mut i = start;
            while i < order.len() {
                let x = order[i];
                i += 1;
                for &y in g.neighbors(x) {
                    if !seen[y] {
                        seen[y] = true;
                        order.push(y);
                    }
                }
            }
        }
        Some(Matcher { dg, dh, order, cands, map: vec![usize::MAX; n], used: vec![false; n] })
    }

    fn consistent(&self, depth: usize, v: usize, w: usize) -> bool {
        self.order[..depth].iter().all(|&u| self.dg.get(v, u) == self.dh.get(w, self.map[u]))
    }

    fn search(&mut self, depth: usize, all: bool, out: &mut Vec<Vec<usize>>) -> bool {
        if depth == self.order.len() {
            out.push(self.map.clone());
            return !all;
        }
        let v = self.order[depth];
        for i in 0..self.cands[v].len() {
            let w = self.cands[v][i];
            if self.used[w] || !self.consistent(depth, v, w) {
                continue;
            }
            self.map[v] = w;
            self.used[w] = true;
            let stop = self.search(depth + 1, all, out);
            self.used[w] = false;
            self.map[v] = usize::MAX;
            if stop {
                return true;
            }
        }
        false
    }
}

/// Adjacency-preserving bijection `g -> h`, if any.
pub fn are_isomorphic(g: &Graph, h: &Graph) -> Result<Option<Vec<usize>>> {
    are_isomorphic_with_limit(g, h, DEFAULT_ISO_LIMIT)
}

pub fn are_isomorphic_with_limit(g: &Graph, h: &Graph, limit: usize) -> Result<Option<Vec<usize>>> {
    if g.n().max(h.n()) > limit {
        return Err(Error::TooLarge(g.n().max(h.n()), limit));
    }
    if g.n() != h.n() || g.m() != h.m() {
        return Ok(None);
    }
    let dg = distances(g);
    let dh = distances(h);
    let Some(mut m) = Matcher::new(g, h, &dg, &dh) else {
        return Ok(None);
    };
    let mut out = Vec::new();
    m.search(0, false, &mut out);
    Ok(out.pop())
}

/// The full automorphism group as a list of vertex maps.
pub fn automorphisms(g: &Graph) -> Result<Vec<Vec<usize>>> {
    automorphisms_with_limit(g, DEFAULT_ISO_LIMIT)
}

pub fn automorphisms_with_limit(g: &Graph, limit: usize) -> Result<Vec<Vec<usize>>> {
    if g.n() > limit {
        return Err(Error::TooLarge(g.n(), limit));
    }
    let d = distances(g);
    let mut m = Matcher::new(g, g, &d, &d).expect("graph matches itself");
    let mut out = Vec::new();
    m.search(0, true, &mut out);
    out.sort();
    Ok(out)
}
