use std::sync::OnceLock;

use crate::error::{Error, Result};
use crate::euler::enumerate_convex_tori_in;
use crate::graph::Graph;
use crate::metric::Metric;
use crate::peano::{peano_verdict, PeanoVerdict};
use crate::theta::{recognize_partial_cube, CubeCoordinates, PartialCubeFailure, ThetaClassification};
use crate::torus::TorusDescriptor;
use crate::vset::VertexSet;

/// A graph with its metric, Θ-structure and lazily computed convex tori.
#[derive(Debug)]
pub struct Space {
    metric: Metric,
    pc: std::result::Result<(ThetaClassification, CubeCoordinates), PartialCubeFailure>,
    tori: OnceLock<Vec<TorusDescriptor>>,
    peano: OnceLock<PeanoVerdict>,
}

impl Space {
    pub fn new(g: &Graph) -> Self {
        let metric = Metric::new(g);
        let pc = recognize_partial_cube(&metric);
        Space { metric, pc, tori: OnceLock::new(), peano: OnceLock::new() }
    }

    pub fn graph(&self) -> &Graph {
        self.metric.graph()
    }

    pub fn metric(&self) -> &Metric {
        &self.metric
    }

    pub fn n(&self) -> usize {
        self.metric.n()
    }

    pub fn is_partial_cube(&self) -> bool {
        self.pc.is_ok()
    }

    pub fn partial_cube_failure(&self) -> Option<&PartialCubeFailure> {
        self.pc.as_ref().err()
    }

    pub fn theta(&self) -> Result<&ThetaClassification> {
        self.pc.as_ref().map(|p| &p.0).map_err(|f| match f {
            PartialCubeFailure::Empty => Error::EmptyGraph,
            _ => Error::NotPartialCube,
        })
    }

    pub fn coordinates(&self) -> Result<&CubeCoordinates> {
        self.pc.as_ref().map(|p| &p.1).map_err(|_| Error::NotPartialCube)
    }

    pub fn idim(&self) -> Result<usize> {
        Ok(self.theta()?.num_classes())
    }

    /// Convex quasi-hypertori, computed once.
    pub fn tori(&self) -> Result<&[TorusDescriptor]> {
        self.theta()?;
        Ok(self.tori.get_or_init(|| enumerate_convex_tori_in(self)))
    }

    /// Convex cycles: the tori of dimension 2.
    pub fn convex_cycles(&self) -> Result<Vec<&TorusDescriptor>> {
        Ok(self.tori()?.iter().filter(|t| t.dimension == 2).collect())
    }

    pub fn convex_cycle_sets(&self) -> Result<Vec<VertexSet>> {
        Ok(self.convex_cycles()?.into_iter().map(|t| t.vertex_set.clone()).collect())
    }

    pub fn peano(&self) -> &PeanoVerdict {
        self.peano.get_or_init(|| peano_verdict(self))
    }

    pub fn is_peano(&self) -> bool {
        self.peano().peano
    }

    pub fn require_peano(&self) -> Result<()> {
        if self.graph().n() == 0 {
            return Err(Error::EmptyGraph);
        }
        if self.is_peano() {
            Ok(())
        } else {
            Err(Error::NotPeano)
        }
    }
}
