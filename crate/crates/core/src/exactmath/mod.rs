//! Exact arithmetic kernel: Q(phi, xi) numbers, certified signs, interval
//! embeddings and lattice reduction.

mod interval;
mod lattice;
mod qphi;
mod quartic;

pub use interval::{embed, phi_bracket, qphi_bracket, sqrt_bracket, ComplexBox, RatInterval};
pub use lattice::Lattice;
pub use qphi::{QPhi, Sign};
pub use quartic::{cross_sign, orient, polygon_area_twice, Quartic, RealQuartic};
