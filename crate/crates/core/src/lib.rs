//! Weakly systolic flag complexes: local conditions, universal covers, convexity,
//! thickenings of cell complexes and negative-curvature diagnostics.

pub mod budget;
pub mod complex;
pub mod conditions;
pub mod convexity;
pub mod corpus;
pub mod cover;
pub mod enumerate;
pub mod error;
pub mod graph;
pub mod hyperbolic;
pub mod io;
pub mod iso;
pub mod thickening;
pub mod verdict;
