//! Anti-directed 2-factors and Hamilton cycles in digraphs: exact deciders
//! with checkable certificates, the bipartite 2-factor machinery behind
//! them, the cubic edge-colouring reduction, and exact verification of the
//! equipartition counting bound.

pub mod bipartite;
pub mod classical;
pub mod combin;
pub mod conjecture;
pub mod counting;
pub mod cover;
mod flow;
pub mod gen;
pub mod graph;
pub mod reduction;
pub mod solver;
pub mod threshold;
