//! Exact construction of hat monotile tilings.
//!
//! The plane is coded through a torus partition with fractal boundaries:
//! classifying the translates of a starting point against the partition
//! yields tile orientations on the triangular grid, and the resulting
//! configurations are provably valid tilings. Everything is computed in
//! exact arithmetic over Q(phi, xi).

pub mod exactmath;
pub mod fractal;
pub mod geom;
pub mod hatgeom;
pub mod hatgeom_grow;
pub mod partition;
pub mod refdata;

pub use exactmath::{Lattice, QPhi, Quartic, RealQuartic, Sign};
pub use fractal::{DirectedEdge, EdgeKind, Enclosure};
pub use partition::{Label, Partition, Presentation, Undecided};
