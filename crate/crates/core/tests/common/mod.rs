#![allow(dead_code)]

use std::collections::{BTreeSet, VecDeque};

use peanocube::fixtures::all_fixtures;
use peanocube::generate;
use peanocube::hypermedian::is_hyper_median;
use peanocube::transform::random;
use peanocube::{Graph, Space};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub const INF: usize = usize::MAX;

pub fn bfs_all(g: &Graph) -> Vec<Vec<usize>> {
    (0..g.n())
        .map(|s| {
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
        })
        .collect()
}

pub fn interval(d: &[Vec<usize>], x: usize, y: usize) -> Vec<usize> {
    (0..d.len()).filter(|&z| d[x][z] + d[z][y] == d[x][y]).collect()
}

/// Iterates `S := union of I(x, y)` until nothing changes.
pub fn hull_oracle(d: &[Vec<usize>], seed: &BTreeSet<usize>) -> BTreeSet<usize> {
    let mut s = seed.clone();
    loop {
        let v: Vec<usize> = s.iter().copied().collect();
        let mut next = s.clone();
        for (i, &x) in v.iter().enumerate() {
            for &y in &v[i + 1..] {
                next.extend(interval(d, x, y));
            }
        }
        if next == s {
            return s;
        }
        s = next;
    }
}

pub fn convex_oracle(d: &[Vec<usize>], s: &BTreeSet<usize>) -> bool {
    s.iter().all(|&x| s.iter().all(|&y| interval(d, x, y).iter().all(|z| s.contains(z))))
}

/// Edge partition by the pairwise distance definition, classes as sorted edge-id lists.
pub fn theta_oracle(g: &Graph) -> BTreeSet<Vec<usize>> {
    let d = bfs_all(g);
    let e = g.edges();
    let related = |i: usize, j: usize| {
        let ((x, y), (u, v)) = (e[i], e[j]);
        d[x][u] + d[y][v] != d[x][v] + d[y][u]
    };
    let mut seen = vec![false; e.len()];
    let mut classes = BTreeSet::new();
    for i in 0..e.len() {
        if !seen[i] {
            let c: Vec<usize> = (0..e.len()).filter(|&j| related(i, j)).collect();
            for &j in &c {
                seen[j] = true;
            }
            classes.insert(c);
        }
    }
    classes
}

/// Every convex, connected, regular vertex subset whose induced graph is Peano, with its degree.
pub fn torus_subset_oracle(g: &Graph) -> BTreeSet<(Vec<usize>, usize)> {
    let n = g.n();
    assert!(n <= 20);
    let d = bfs_all(g);
    let mut out = BTreeSet::new();
    for mask in 1u32..(1 << n) {
        let s: BTreeSet<usize> = (0..n).filter(|&i| mask >> i & 1 == 1).collect();
        let degs: BTreeSet<usize> =
            s.iter().map(|&x| g.neighbors(x).iter().filter(|y| s.contains(y)).count()).collect();
        if degs.len() != 1 {
            continue;
        }
        let first = *s.iter().next().unwrap();
        if s.iter().any(|&x| d[first][x] == INF) || !convex_oracle(&d, &s) {
            continue;
        }
        let v: Vec<usize> = s.iter().copied().collect();
        let (h, _) = g.induced_from_list(&v).expect("in range");
        if !Space::new(&h).is_peano() {
            continue;
        }
        out.insert((v, *degs.iter().next().unwrap()));
    }
    out
}

/// Largest `F` with empty intersection of the hulls of all `F - a`.
pub fn helly_oracle(g: &Graph) -> usize {
    let n = g.n();
    let d = bfs_all(g);
    let mut best = 1;
    for mask in 1u32..(1 << n) {
        let k = mask.count_ones() as usize;
        if k <= best {
            continue;
        }
        let f: Vec<usize> = (0..n).filter(|&i| mask >> i & 1 == 1).collect();
        let mut inter: BTreeSet<usize> = (0..n).collect();
        for &a in &f {
            let rest: BTreeSet<usize> = f.iter().copied().filter(|&x| x != a).collect();
            let h = hull_oracle(&d, &rest);
            inter = inter.intersection(&h).copied().collect();
            if inter.is_empty() {
                break;
            }
        }
        if inter.is_empty() {
            best = k;
        }
    }
    best
}

fn c6_pendant() -> Graph {
    let mut e: Vec<(usize, usize)> = (0..6).map(|i| (i, (i + 1) % 6)).collect();
    e.push((0, 6));
    Graph::new(7, e).unwrap().with_name("c6+pendant")
}

fn fused_hexagons() -> Graph {
    let mut e: Vec<(usize, usize)> = (0..6).map(|i| (i, (i + 1) % 6)).collect();
    e.extend([(1, 6), (6, 7), (7, 8), (8, 9), (9, 0)]);
    Graph::new(10, e).unwrap().with_name("fused-hexagons")
}

/// Built-in fixtures plus family instances; every graph here has at most 36 vertices.
pub fn all_builtin() -> Vec<Graph> {
    let mut v = all_fixtures();
    let fam = |n: &str, p: &[usize]| generate::family(n, p).unwrap();
    v.extend([
        fam("hypercube", &[0]),
        fam("hypercube", &[1]),
        fam("hypercube", &[2]),
        fam("hypercube", &[3]),
        fam("hypercube", &[4]),
        fam("cycle", &[6]),
        fam("cycle", &[8]),
        fam("cycle", &[10]),
        fam("prism", &[6]),
        fam("prism", &[8]),
        fam("torus", &[6, 4]),
        fam("torus", &[6, 6]),
        fam("path", &[3]),
        fam("star", &[4]),
        fam("tree", &[9, 1]),
        c6_pendant(),
        fused_hexagons(),
    ]);
    v
}

pub fn peano_builtin() -> Vec<Graph> {
    all_builtin().into_iter().filter(|g| Space::new(g).is_peano()).collect()
}

/// Seeded random hyper-median graphs of at most `max_n` vertices, each certified.
pub fn population(count: usize, max_n: usize, seed: u64) -> Vec<Graph> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::new();
    while out.len() < count {
        let g = random::hyper_median(&mut rng, max_n);
        if is_hyper_median(&Space::new(&g)).hyper_median {
            out.push(g);
        }
    }
    out
}
