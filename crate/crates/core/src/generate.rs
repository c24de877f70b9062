use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::product::{cartesian_product, product2};
use crate::vset::VertexSet;

pub fn k1() -> Graph {
    Graph::empty(1)
}

pub fn k2() -> Graph {
    Graph::new(2, [(0, 1)]).unwrap()
}

/// Path with `len` edges.
pub fn path(len: usize) -> Graph {
    Graph::new(len + 1, (0..len).map(|i| (i, i + 1))).unwrap()
}

/// Cycle on `n >= 3` vertices.
pub fn cycle(n: usize) -> Graph {
    assert!(n >= 3, "cycle needs at least 3 vertices");
    Graph::new(n, (0..n).map(|i| (i, (i + 1) % n))).unwrap()
}

pub fn hypercube(d: usize) -> Graph {
    let n = 1usize << d;
    Graph::new(n, (0..n).flat_map(|x| (0..d).map(move |b| (x, x ^ (1 << b)))).filter(|&(a, b)| a < b))
        .unwrap()
}

pub fn complete_bipartite(a: usize, b: usize) -> Graph {
    Graph::new(a + b, (0..a).flat_map(|i| (0..b).map(move |j| (i, a + j)))).unwrap()
}

pub fn star(k: usize) -> Graph {
    complete_bipartite(1, k)
}

/// Product of factors given by length: 2 means `K2`, even `>= 4` means a cycle.
pub fn torus(lengths: &[usize]) -> Result<Graph> {
    if lengths.is_empty() {
        return Ok(k1());
    }
    let mut fs = Vec::new();
    for &l in lengths {
        match l {
            2 => fs.push(k2()),
            l if l >= 4 && l % 2 == 0 => fs.push(cycle(l)),
            _ => return Err(Error::BadParams(format!("factor length {l} must be 2 or even >= 4"))),
        }
    }
    Ok(cartesian_product(&fs)?.graph)
}

pub fn prism(base: &Graph) -> Graph {
    product2(base, &k2())
}

pub fn random_tree(n: usize, seed: u64) -> Graph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    Graph::new(n.max(1), (1..n).map(|v| (rng.gen_range(0..v), v))).unwrap()
}

/// `Q_n` with the antipodal pair `0`, `2^n - 1` removed.
pub fn cube_minus_antipodal_pair(d: usize) -> Graph {
    let q = hypercube(d);
    let keep = VertexSet::from_iter(q.n(), 1..q.n() - 1);
    q.induced(&keep).0
}

/// `Q3` minus one vertex.
pub fn q3_minus() -> Graph {
    let q = hypercube(3);
    q.induced(&VertexSet::from_iter(8, 0..7)).0
}

fn param(params: &[usize], i: usize, what: &str) -> Result<usize> {
    params.get(i).copied().ok_or_else(|| Error::BadParams(format!("missing {what}")))
}

/// Named families used by the CLI `generate` command.
pub fn family(name: &str, params: &[usize]) -> Result<Graph> {
    let g = match name {
        "hypercube" => {
            let d = param(params, 0, "dimension")?;
            if d > 12 {
                return Err(Error::BadParams("dimension above 12".into()));
            }
            hypercube(d)
        }
        "evencycle" | "cycle" => {
            let n = param(params, 0, "length")?;
            if n < 4 || n % 2 == 1 {
                return Err(Error::BadParams("cycle length must be even and >= 4".into()));
            }
            cycle(n)
        }
        "hypertorus" | "torus" => torus(params)?,
        "prism" => {
            let n = param(params, 0, "base cycle length")?;
            if n < 4 || n % 2 == 1 {
                return Err(Error::BadParams("base length must be even and >= 4".into()));
            }
            prism(&cycle(n))
        }
        "path" => path(param(params, 0, "length")?),
        "tree" => {
            let n = param(params, 0, "vertex count")?;
            if n == 0 {
                return Err(Error::BadParams("tree needs a vertex".into()));
            }
            random_tree(n, params.get(1).copied().unwrap_or(0) as u64)
        }
        "star" => star(param(params, 0, "leaf count")?),
        "mn1" => {
            let d = param(params, 0, "dimension")?;
            if !(2..=12).contains(&d) {
                return Err(Error::BadParams("dimension must lie in 2..=12".into()));
            }
            cube_minus_antipodal_pair(d)
        }
        _ => return Err(Error::UnknownFamily(name.to_string())),
    };
    let label = if params.is_empty() {
        name.to_string()
    } else {
        format!("{name}({})", params.iter().map(|p| p.to_string()).collect::<Vec<_>>().join(","))
    };
    Ok(g.with_name(label))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn family_sizes() {
        assert_eq!(hypercube(3).n(), 8);
        let m41 = cube_minus_antipodal_pair(4);
        assert_eq!((m41.n(), m41.m()), (14, 24));
        assert_eq!(q3_minus().m(), 9);
        assert_eq!(torus(&[6, 2]).unwrap().m(), 18);
        assert!(torus(&[3]).is_err());
        assert_eq!(random_tree(10, 3).m(), 9);
        assert!(matches!(family("nope", &[]), Err(Error::UnknownFamily(_))));
        assert!(matches!(family("evencycle", &[5]), Err(Error::BadParams(_))));
    }
}
