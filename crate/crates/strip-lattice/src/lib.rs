//! Torus-embedded bipartite lattices for the dimer toolkit.
//!
//! Builds the 2×n strip of squares, the 2×n strip of hexagons, and the
//! general m×n square torus, together with the data the rest of the toolkit
//! needs: per-edge cycle-crossing exponents, faces from an explicit rotation
//! system, the oriented dual digraph, and zig-zag strands with their torus
//! winding classes. Builders are pure and the graphs are immutable, so values
//! can be shared freely across threads.

mod dual;
mod graph;
mod zigzag;

pub use dual::{build_dual, plaquette_cycle_violation, DualArc, DualDigraph};
pub use graph::{
    build_hexagon_strip, build_square_strip, build_square_torus, Color, Dart, Edge, EdgeKind,
    LatticeError, Node, Shape, StripGraph,
};
pub use zigzag::{zigzag_paths, ZigZagPath};
