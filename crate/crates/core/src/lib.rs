//! Algorithms for Peano partial cubes: recognition, convexity, decomposition,
//! expansions, retractions and combinatorial invariants of finite graphs.

pub mod convexity;
pub mod error;
pub mod euler;
pub mod fixedretr;
pub mod fixtures;
pub mod generate;
pub mod graph;
pub mod hypermedian;
pub mod iso;
pub mod metric;
pub mod peano;
pub mod product;
pub mod report;
pub mod space;
pub mod theta;
pub mod transform;
pub mod torus;
pub mod vset;

pub use error::{Error, Result};
pub use graph::Graph;
pub use metric::{DistanceMatrix, Metric};
pub use space::Space;
pub use theta::ThetaClassification;
pub use vset::VertexSet;
