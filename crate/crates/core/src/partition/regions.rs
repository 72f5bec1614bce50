//! Region boundary descriptions: every one of the 13 regions as a cyclic
//! list of straight segments and fractal edges, used by the exporter and
//! the renderer.

use super::{Cell, Label, Partition, PieceKind, SKELETON};
use crate::exactmath::Quartic;
use crate::fractal::{DirectedEdge, EdgeKind};

/// One boundary piece of a region.
#[derive(Debug, Clone)]
pub enum BoundaryPiece {
    Straight { from: Quartic, to: Quartic },
    Fractal(DirectedEdge),
}

/// A labeled region of the partition presented inside one fundamental
/// domain. Lens-chain regions are reported with their pinched boundary
/// (chord plus fractal edge).
#[derive(Debug, Clone)]
pub struct Region {
    pub label: Label,
    pub boundary: Vec<BoundaryPiece>,
}

fn phi2() -> Quartic {
    Quartic::from_ints(1, 1, 0, 0)
}

fn u() -> Quartic {
    Quartic::from_ints(1, 1, 1, 0)
}

/// Regions of the base parallelogram frame, before rotation/translation.
fn base_cells() -> Vec<(Cell, Vec<BoundaryPiece>)> {
    let xi = Quartic::xi();
    let xi1 = Quartic::from_ints(1, 0, 1, 0);
    let phi = Quartic::phi();
    let red_top = DirectedEdge::new(EdgeKind::Blue, xi.clone(), xi1.clone(), true);
    let red_mid = DirectedEdge::new(EdgeKind::Red, xi1.clone(), phi.clone(), false);
    let red_bot = DirectedEdge::new(EdgeKind::Blue, phi.clone(), phi2(), false);
    vec![
        (
            Cell::BigLeft,
            vec![
                BoundaryPiece::Straight {
                    from: Quartic::zero(),
                    to: phi.clone(),
                },
                BoundaryPiece::Fractal(DirectedEdge::new(
                    EdgeKind::Red,
                    phi.clone(),
                    xi1.clone(),
                    true,
                )),
                BoundaryPiece::Fractal(DirectedEdge::new(
                    EdgeKind::Blue,
                    xi1.clone(),
                    xi.clone(),
                    false,
                )),
                BoundaryPiece::Straight {
                    from: xi.clone(),
                    to: Quartic::zero(),
                },
            ],
        ),
        (
            Cell::BigRight,
            vec![
                BoundaryPiece::Fractal(red_bot.clone()),
                BoundaryPiece::Straight {
                    from: phi2(),
                    to: u(),
                },
                BoundaryPiece::Straight {
                    from: u(),
                    to: xi1.clone(),
                },
                BoundaryPiece::Fractal(red_mid.clone()),
            ],
        ),
        (
            Cell::LensTop,
            vec![
                BoundaryPiece::Straight {
                    from: xi.clone(),
                    to: xi1.clone(),
                },
                BoundaryPiece::Fractal(red_top.clone()),
            ],
        ),
        (
            Cell::LensBottom,
            vec![
                BoundaryPiece::Straight {
                    from: phi.clone(),
                    to: phi2(),
                },
                BoundaryPiece::Fractal(red_bot),
            ],
        ),
    ]
}

fn transform_piece(p: &BoundaryPiece, rot: i64, shift: &Quartic) -> BoundaryPiece {
    let m = Quartic::xi_pow(rot);
    let f = |z: &Quartic| m.mul_ref(z).add_ref(shift);
    match p {
        BoundaryPiece::Straight { from, to } => BoundaryPiece::Straight {
            from: f(from),
            to: f(to),
        },
        BoundaryPiece::Fractal(e) => BoundaryPiece::Fractal(DirectedEdge::new(
            e.kind,
            f(&e.start),
            f(&e.end),
            e.reversed,
        )),
    }
}

fn conj_piece(p: &BoundaryPiece) -> BoundaryPiece {
    match p {
        BoundaryPiece::Straight { from, to } => BoundaryPiece::Straight {
            from: from.conj(),
            to: to.conj(),
        },
        BoundaryPiece::Fractal(e) => BoundaryPiece::Fractal(DirectedEdge::new(
            e.kind,
            e.start.conj(),
            e.end.conj(),
            e.reversed,
        )),
    }
}

impl Partition {
    /// The 13 regions with exact boundary data (one representative per
    /// region in the recycling fundamental domain; white contributes two
    /// triangles under a single label).
    pub fn regions(&self) -> Vec<Region> {
        let mut out: Vec<Region> = Vec::new();
        for piece in SKELETON.iter() {
            match piece.kind {
                PieceKind::TriUp | PieceKind::TriDown => {
                    let mut boundary = Vec::new();
                    let n = piece.polygon.len();
                    for i in 0..n {
                        boundary.push(BoundaryPiece::Straight {
                            from: piece.polygon[i].clone(),
                            to: piece.polygon[(i + 1) % n].clone(),
                        });
                    }
                    out.push(Region {
                        label: Label::white(),
                        boundary,
                    });
                }
                PieceKind::Para(k) => {
                    for (cell, pieces) in base_cells() {
                        let boundary: Vec<BoundaryPiece> = pieces
                            .iter()
                            .map(|p| transform_piece(p, k as i64, &piece.base_shift))
                            .collect();
                        out.push(Region {
                            label: self.scheme.label(piece.kind, Some(cell)),
                            boundary,
                        });
                    }
                }
            }
        }
        if self.is_mirrored() {
            for r in &mut out {
                r.label = r.label.mirror();
                for p in &mut r.boundary {
                    *p = conj_piece(p);
                }
            }
        }
        out
    }
}
