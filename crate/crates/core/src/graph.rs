use std::collections::VecDeque;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::vset::VertexSet;

/// Finite simple undirected graph on vertices `0..n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    edges: Vec<(usize, usize)>,
    adj: Vec<Vec<usize>>,
    name: Option<String>,
}

#[derive(Serialize, Deserialize)]
struct GraphFile {
    #[serde(skip_serializing_if = "Option::is_none", default)]
    name: Option<String>,
    vertices: usize,
    edges: Vec<[usize; 2]>,
}

impl Serialize for Graph {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.file().serialize(s)
    }
}

impl Graph {
    /// Builds a graph; edge endpoints may come in either order.
    pub fn new(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut es: Vec<(usize, usize)> = Vec::new();
        for (u, v) in edges {
            if u >= n || v >= n || u == v {
                return Err(Error::InvalidEdge((u, v)));
            }
            es.push((u.min(v), u.max(v)));
        }
        es.sort_unstable();
        if let Some(w) = es.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::InvalidEdge(w[0]));
        }
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in &es {
            adj[u].push(v);
            adj[v].push(u);
        }
        for a in &mut adj {
            a.sort_unstable();
        }
        Ok(Graph { n, edges: es, adj, name: None })
    }

    /// Like [`Graph::new`] but silently drops duplicate edges.
    pub fn from_edges_dedup(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut es: Vec<(usize, usize)> =
            edges.into_iter().map(|(u, v)| (u.min(v), u.max(v))).collect();
        es.sort_unstable();
        es.dedup();
        Self::new(n, es)
    }

    pub fn empty(n: usize) -> Self {
        Graph { n, edges: Vec::new(), adj: vec![Vec::new(); n], name: None }
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = Some(name.into());
        self
    }

    pub fn name(&self) -> Option<&str> {
        self.name.as_deref()
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && self.adj[u].binary_search(&v).is_ok()
    }

    /// Index of edge `uv` in [`Graph::edges`].
    pub fn edge_id(&self, u: usize, v: usize) -> Option<usize> {
        self.edges.binary_search(&(u.min(v), u.max(v))).ok()
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    pub fn regular_degree(&self) -> Option<usize> {
        let d = self.adj.first().map_or(0, |a| a.len());
        self.adj.iter().all(|a| a.len() == d).then_some(d)
    }

    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut comp = vec![usize::MAX; self.n];
        let mut out = Vec::new();
        for s in 0..self.n {
            if comp[s] != usize::MAX {
                continue;
            }
            let id = out.len();
            let mut members = vec![s];
            comp[s] = id;
            let mut i = 0;
            while i < members.len() {
                let x = members[i];
                i += 1;
                for &y in &self.adj[x] {
                    if comp[y] == usize::MAX {
                        comp[y] = id;
                        members.push(y);
                    }
                }
            }
            members.sort_unstable();
            out.push(members);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.n <= 1 || self.components().len() == 1
    }

    /// Components of the subgraph induced by `s`.
    pub fn components_within(&self, s: &VertexSet) -> Vec<VertexSet> {
        let mut seen = VertexSet::empty(self.n);
        let mut out = Vec::new();
        for v in s.iter() {
            if seen.contains(v) {
                continue;
            }
            let mut c = VertexSet::singleton(self.n, v);
            seen.insert(v);
            let mut stack = vec![v];
            while let Some(x) = stack.pop() {
                for &y in &self.adj[x] {
                    if s.contains(y) && seen.insert(y) {
                        c.insert(y);
                        stack.push(y);
                    }
                }
            }
            out.push(c);
        }
        out
    }

    /// Two-coloring, or an odd cycle as witness.
    pub fn bipartition(&self) -> std::result::Result<Vec<u8>, Vec<usize>> {
        let mut color = vec![u8::MAX; self.n];
        let mut parent = vec![usize::MAX; self.n];
        let mut depth = vec![0usize; self.n];
        for s in 0..self.n {
            if color[s] != u8::MAX {
                continue;
            }
            color[s] = 0;
            let mut q = VecDeque::from([s]);
            while let Some(x) = q.pop_front() {
                for &y in &self.adj[x] {
                    if color[y] == u8::MAX {
                        color[y] = 1 - color[x];
                        parent[y] = x;
                        depth[y] = depth[x] + 1;
                        q.push_back(y);
                    } else if color[y] == color[x] {
                        let (mut a, mut b) = (x, y);
                        let mut pa = vec![a];
                        let mut pb = vec![b];
                        while depth[a] > depth[b] {
                            a = parent[a];
                            pa.push(a);
                        }
                        while depth[b] > depth[a] {
                            b = parent[b];
                            pb.push(b);
                        }
                        while a != b {
                            a = parent[a];
                            b = parent[b];
                            pa.push(a);
                            pb.push(b);
                        }
                        pb.pop();
                        pb.reverse();
                        pa.extend(pb);
                        return Err(pa);
                    }
                }
            }
        }
        Ok(color)
    }

    pub fn is_bipartite(&self) -> bool {
        self.bipartition().is_ok()
    }

    /// Induced subgraph on `s`, relabeled in increasing order; returns the map new -> old.
    pub fn induced(&self, s: &VertexSet) -> (Graph, Vec<usize>) {
        let map = s.to_vec();
        let mut inv = vec![usize::MAX; self.n];
        for (i, &v) in map.iter().enumerate() {
            inv[v] = i;
        }
        let edges = self
            .edges
            .iter()
            .filter(|&&(u, v)| s.contains(u) && s.contains(v))
            .map(|&(u, v)| (inv[u], inv[v]));
        let g = Graph::new(map.len(), edges).expect("induced subgraph is simple");
        (g, map)
    }

    pub fn induced_from_list(&self, s: &[usize]) -> Result<(Graph, Vec<usize>)> {
        if let Some(&v) = s.iter().find(|&&v| v >= self.n) {
            return Err(Error::OutOfRange(v));
        }
        Ok(self.induced(&VertexSet::from_iter(self.n, s.iter().copied())))
    }

    /// Relabels vertices: vertex `v` becomes `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Graph {
        let mut g = Graph::new(self.n, self.edges.iter().map(|&(u, v)| (perm[u], perm[v])))
            .expect("relabeling preserves simplicity");
        g.name = self.name.clone();
        g
    }

    pub fn from_json(s: &str) -> Result<Self> {
        let f: GraphFile = serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))?;
        for e in &f.edges {
            if e[0] >= e[1] {
                return Err(Error::Parse(format!("edge [{}, {}] must satisfy u < v", e[0], e[1])));
            }
            if e[1] >= f.vertices {
                return Err(Error::Parse(format!("edge [{}, {}] out of range", e[0], e[1])));
            }
        }
        let g = Graph::new(f.vertices, f.edges.iter().map(|e| (e[0], e[1])))
            .map_err(|e| Error::Parse(e.to_string()))?;
        Ok(match f.name {
            Some(nm) => g.with_name(nm),
            None => g,
        })
    }

    fn file(&self) -> GraphFile {
        GraphFile {
            name: self.name.clone(),
            vertices: self.n,
            edges: self.edges.iter().map(|&(u, v)| [u, v]).collect(),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&self.file()).expect("graph serializes")
    }

    /// DOT source; `classes` assigns a color index to every edge.
    pub fn to_dot(&self, classes: Option<&[usize]>) -> String {
        const PALETTE: [&str; 12] = [
            "#1f77b4", "#ff7f0e", "#2ca02c", "#d62728", "#9467bd", "#8c564b", "#e377c2", "#7f7f7f",
            "#bcbd22", "#17becf", "#393b79", "#637939",
        ];
        let mut s = String::new();
        let nm = self.name.as_deref().unwrap_or("G").replace('"', "'");
        let _ = writeln!(s, "graph \"{nm}\" {{");
        for v in 0..self.n {
            let _ = writeln!(s, "  {v};");
        }
        for (i, &(u, v)) in self.edges.iter().enumerate() {
            match classes {
                Some(c) => {
                    let col = PALETTE[c[i] % PALETTE.len()];
                    let _ = writeln!(s, "  {u} -- {v} [color=\"{col}\", label=\"{}\"];", c[i]);
                }
                None => {
                    let _ = writeln!(s, "  {u} -- {v};");
                }
            }
        }
        s.push_str("}\n");
        s
    }
}
