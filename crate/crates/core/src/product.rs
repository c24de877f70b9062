use crate::error::{Error, Result};
use crate::graph::Graph;

/// Cartesian product with its projection maps; the last factor varies fastest.
#[derive(Clone, Debug)]
pub struct Product {
    pub graph: Graph,
    /// `projections[i][v]` is the coordinate of `v` in factor `i`.
    pub projections: Vec<Vec<usize>>,
}

pub fn cartesian_product(gs: &[Graph]) -> Result<Product> {
    if gs.iter().any(|g| g.n() == 0 || !g.is_connected()) {
        return Err(Error::EmptyFactor);
    }
    let total: usize = gs.iter().map(|g| g.n()).product();
    let k = gs.len();
    let mut strides = vec![1usize; k];
    for i in (0..k.saturating_sub(1)).rev() {
        strides[i] = strides[i + 1] * gs[i + 1].n();
    }
    let coord = |v: usize, i: usize| (v / strides[i]) % gs[i].n();
    let mut edges = Vec::new();
    for v in 0..total {
        for (i, g) in gs.iter().enumerate() {
            let c = coord(v, i);
            for &c2 in g.neighbors(c) {
                if c2 > c {
                    edges.push((v, v + (c2 - c) * strides[i]));
                }
            }
        }
    }
    let graph = Graph::new(total, edges)?;
    let projections = (0..k).map(|i| (0..total).map(|v| coord(v, i)).collect()).collect();
    Ok(Product { graph, projections })
}

pub fn product2(a: &Graph, b: &Graph) -> Graph {
    cartesian_product(&[a.clone(), b.clone()]).expect("connected factors").graph
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generate::{cycle, hypercube, k2, path};
    use crate::iso::are_isomorphic;
    use crate::metric::Metric;
    use rand::{Rng, SeedableRng};

    #[test]
    fn small_products() {
        let p = cartesian_product(&[cycle(6), k2()]).unwrap();
        assert_eq!((p.graph.n(), p.graph.m()), (12, 18));
        let sq = cartesian_product(&[k2(), k2()]).unwrap().graph;
        assert!(are_isomorphic(&sq, &cycle(4)).unwrap().is_some());
        let q3 = product2(&cycle(4), &k2());
        assert!(are_isomorphic(&q3, &hypercube(3)).unwrap().is_some());
        assert_eq!(cartesian_product(&[k2(), Graph::empty(0)]).unwrap_err(), Error::EmptyFactor);
    }

    #[test]
    fn distance_and_interval_additivity() {
        let fs = [cycle(6), k2(), path(2)];
        let p = cartesian_product(&fs).unwrap();
        let m = Metric::new(&p.graph);
        let fm: Vec<Metric> = fs.iter().map(Metric::new).collect();
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        for _ in 0..20 {
            let x = rng.gen_range(0..p.graph.n());
            let y = rng.gen_range(0..p.graph.n());
            let sum: u32 = (0..3).map(|i| fm[i].d(p.projections[i][x], p.projections[i][y])).sum();
            assert_eq!(m.d(x, y), sum);
            for z in 0..p.graph.n() {
                let inside = (0..3).all(|i| {
                    fm[i].in_interval(p.projections[i][x], p.projections[i][z], p.projections[i][y])
                });
                assert_eq!(m.in_interval(x, z, y), inside);
            }
        }
    }
}
