//! Exact straight-sided skeleton of the fundamental domain: three
//! parallelograms and two equilateral triangles that tile the torus.
//!
//! Base frame: the parallelogram (0, phi^2, u, xi) with u = phi^2 + xi.
//! The other two parallelograms are its images under multiplication by xi
//! and xi^2 followed by translation by u; the triangles sit at the two
//! 120-degree fixed points (u+v)/3 and 2(u+v)/3 of the torus.

use crate::exactmath::Quartic;
use std::sync::LazyLock;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum PieceKind {
    /// Parallelogram rotated by `k * 60` degrees, k in 0..=2.
    Para(u8),
    TriUp,
    TriDown,
}

#[derive(Debug, Clone)]
pub struct Piece {
    pub kind: PieceKind,
    /// Counterclockwise vertex list.
    pub polygon: Vec<Quartic>,
    /// For parallelograms: translation such that `xi^-k * (z - base_shift)`
    /// maps the piece onto the base frame. Zero for triangles.
    pub base_shift: Quartic,
}

fn phi2() -> Quartic {
    Quartic::from_ints(1, 1, 0, 0)
}

fn u() -> Quartic {
    Quartic::from_ints(1, 1, 1, 0)
}

pub static SKELETON: LazyLock<Vec<Piece>> = LazyLock::new(|| {
    let base = vec![Quartic::zero(), phi2(), u(), Quartic::xi()];
    // White up-triangle (xi, phi + xi, phi^2 * xi).
    let tri_up = vec![
        Quartic::xi(),
        Quartic::phi().add_ref(&Quartic::xi()),
        phi2().mul_ref(&Quartic::xi()),
    ];
    let rot = |poly: &[Quartic], k: i64, shift: &Quartic| -> Vec<Quartic> {
        poly.iter()
            .map(|p| Quartic::xi_pow(k).mul_ref(p).add_ref(shift))
            .collect()
    };
    let tri_down = rot(&tri_up, 1, &u());
    vec![
        Piece {
            kind: PieceKind::Para(0),
            polygon: base.clone(),
            base_shift: Quartic::zero(),
        },
        Piece {
            kind: PieceKind::Para(1),
            polygon: rot(&base, 1, &u()),
            base_shift: u(),
        },
        Piece {
            kind: PieceKind::Para(2),
            polygon: rot(&base, 2, &u()),
            base_shift: u(),
        },
        Piece {
            kind: PieceKind::TriUp,
            polygon: tri_up,
            base_shift: Quartic::zero(),
        },
        Piece {
            kind: PieceKind::TriDown,
            polygon: tri_down,
            base_shift: Quartic::zero(),
        },
    ]
});
