//! Selection and colouring of unit disks so that same-coloured disks are
//! pairwise disjoint while the selected disks cover a guaranteed fraction of
//! the union area.
//!
//! The solvers position a coloured point lattice over the disks, pick one
//! disk per lattice point that falls in the union, and give it the point's
//! colour. The lattice spacing makes same-coloured choices disjoint; the
//! positioning step (a circle arrangement over the lattice's fundamental
//! cell) makes enough lattice points land in the union.

pub mod arrangement;
pub mod bounds;
pub mod error;
pub mod geom;
pub mod io;
pub mod lattice;
pub mod numeric;
pub mod prng;
pub mod selector;
mod spatial;
pub mod union_area;

pub use error::{Error, Result};
pub use geom::{Circle, ConvexPolygon, Point, RegularHexagon};
pub use lattice::{Lattice, SquareLattice, TriLattice};
pub use union_area::DiskSet;
