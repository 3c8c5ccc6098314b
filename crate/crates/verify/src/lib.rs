//! Independent oracles used to cross-check `wsc-core`: a faithful integer matrix
//! representation of right-angled Coxeter groups, brute force over small induced
//! subcomplexes, triangular-lattice BFS and seeded sampling of subcomplexes.

pub mod lattice;
pub mod sampling;
pub mod subsets;
pub mod tits;
