//! r-neighbor bootstrap percolation on finite simple graphs and their
//! direct products: closures and traces, an exact minimum-percolating-set
//! solver, the explicit percolating-set constructions for products and
//! grids, perimeter lower bounds, closed formulas, and verification suites
//! tying them together.

pub mod analysis;
pub mod bounds;
pub mod constructions;
pub mod engine;
pub mod families;
pub mod graph;
pub mod grid;
pub mod io;
pub mod product;
pub mod solver;
pub mod suites;
pub mod vertex_set;

pub use graph::{Coord, Graph, GraphError};
pub use vertex_set::VertexSet;
