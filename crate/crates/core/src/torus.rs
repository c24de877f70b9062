use serde::Serialize;

use crate::generate;
use crate::graph::Graph;
use crate::vset::VertexSet;

/// A convex quasi-hypertorus: product of `k2_factors` copies of `K2` and cycles longer than 4.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct TorusDescriptor {
    pub vertex_set: VertexSet,
    pub k2_factors: usize,
    pub cycle_factors: Vec<usize>,
    pub dimension: usize,
    pub gamma: usize,
}

/// Isomorphism type of a quasi-hypertorus.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct TorusType {
    pub k2_factors: usize,
    pub cycle_factors: Vec<usize>,
}

impl TorusType {
    /// Normalizes: 4-cycles become two `K2` factors, cycle lengths sorted.
    pub fn new(k2: usize, cycles: &[usize]) -> Self {
        let mut k2_factors = k2;
        let mut cycle_factors = Vec::new();
        for &c in cycles {
            if c == 4 {
                k2_factors += 2;
            } else {
                cycle_factors.push(c);
            }
        }
        cycle_factors.sort_unstable();
        TorusType { k2_factors, cycle_factors }
    }

    pub fn dimension(&self) -> usize {
        self.k2_factors + 2 * self.cycle_factors.len()
    }

    pub fn gamma(&self) -> usize {
        self.cycle_factors.iter().map(|&c| c / 2 - 2).sum()
    }

    pub fn order(&self) -> usize {
        (1usize << self.k2_factors) * self.cycle_factors.iter().product::<usize>()
    }

    /// Factor lengths, `2` standing for `K2`.
    pub fn factor_lengths(&self) -> Vec<usize> {
        let mut v = vec![2; self.k2_factors];
        v.extend(&self.cycle_factors);
        v
    }

    pub fn graph(&self) -> Graph {
        generate::torus(&self.factor_lengths()).expect("valid factors")
    }

    /// Hypertorus: at least one long cycle and no `K2` factor.
    pub fn is_hypertorus(&self) -> bool {
        !self.cycle_factors.is_empty() && self.k2_factors == 0
    }

    pub fn is_hypercube(&self) -> bool {
        self.cycle_factors.is_empty()
    }
}

impl TorusDescriptor {
    pub fn new(vertex_set: VertexSet, ty: &TorusType) -> Self {
        TorusDescriptor {
            vertex_set,
            k2_factors: ty.k2_factors,
            cycle_factors: ty.cycle_factors.clone(),
            dimension: ty.dimension(),
            gamma: ty.gamma(),
        }
    }

    pub fn torus_type(&self) -> TorusType {
        TorusType { k2_factors: self.k2_factors, cycle_factors: self.cycle_factors.clone() }
    }

    pub fn is_hypertorus(&self) -> bool {
        self.torus_type().is_hypertorus()
    }

    pub fn len(&self) -> usize {
        self.vertex_set.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertex_set.is_empty()
    }
}
