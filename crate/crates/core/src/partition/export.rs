//! Versioned plain-text export of the partition geometry. The schema lists
//! the lattice basis, then every region with its label and boundary pieces,
//! all coordinates as exact `(a, b, c, d)` quadruples meaning
//! `(a + b*phi) + (c + d*phi)*xi`.

use super::regions::BoundaryPiece;
use super::Partition;
use crate::exactmath::Quartic;
use crate::fractal::EdgeKind;
use std::fmt::Write;

pub const PARTITION_FORMAT: &str = "hatmark-partition 1";

fn coords(z: &Quartic) -> String {
    let [a, b, c, d] = z.coeffs();
    format!("{a} {b} {c} {d}")
}

impl Partition {
    pub fn export_text(&self) -> String {
        let mut s = String::new();
        let lattice = self.lattice();
        writeln!(s, "{PARTITION_FORMAT}").unwrap();
        writeln!(s, "orientation {}", if self.is_mirrored() { "-" } else { "+" }).unwrap();
        writeln!(s, "lattice u {}", coords(&lattice.u)).unwrap();
        writeln!(s, "lattice v {}", coords(&lattice.v)).unwrap();
        let regions = self.regions();
        writeln!(s, "regions {}", regions.len()).unwrap();
        for r in &regions {
            writeln!(s, "region {} pieces {}", r.label, r.boundary.len()).unwrap();
            for p in &r.boundary {
                match p {
                    BoundaryPiece::Straight { from, to } => {
                        writeln!(s, "segment {} -> {}", coords(from), coords(to)).unwrap();
                    }
                    BoundaryPiece::Fractal(e) => {
                        let kind = match e.kind {
                            EdgeKind::Blue => "blue",
                            EdgeKind::Red => "red",
                        };
                        let dir = if e.reversed { "reversed" } else { "forward" };
                        writeln!(
                            s,
                            "edge {} {} {} -> {}",
                            kind,
                            dir,
                            coords(&e.start),
                            coords(&e.end)
                        )
                        .unwrap();
                    }
                }
            }
        }
        s
    }
}
