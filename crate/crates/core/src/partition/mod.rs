//! The 13-region partition of the torus C/Lambda that codes hat tilings.
//!
//! The fundamental domain splits into three 60-degree parallelograms with
//! side lengths phi^2 and 1 (one rotation orbit under xi) and two white
//! equilateral triangles of side phi. Each parallelogram is divided by a
//! single red fractal diagonal into four colored cells: two large cells of
//! area phi^4*sqrt3/12 (tile orientations), and two chains of small bubbles
//! pinched off along the long sides, each of total area sqrt3/12 (mirrored
//! orientations). The white triangles make up exactly one quarter of the
//! area.

mod cover;
mod skeleton;

pub use cover::{intersect_shifted, region_area, AreaBounds, CellSet, PairOutcome};
pub use skeleton::{PieceKind, SKELETON};

use crate::exactmath::{orient, Lattice, Quartic, Sign};
use crate::fractal::{in_bulge, Certainty, DirectedEdge, EdgeKind};
use crate::geom::{convex_intersect, locate_convex, Location};

/// Tile orientation label: 0 is white (no tile), +1..+6 and -1..-6 are the
/// twelve hat orientations (negative = mirrored).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Label(i8);

impl Label {
    pub fn new(v: i8) -> Label {
        assert!(v >= -6 && v <= 6, "label out of range: {v}");
        Label(v)
    }

    pub fn white() -> Label {
        Label(0)
    }

    pub fn value(self) -> i8 {
        self.0
    }

    pub fn is_white(self) -> bool {
        self.0 == 0
    }

    pub fn mirror(self) -> Label {
        Label(-self.0)
    }

    /// Label of the same tile rotated by `steps * 60` degrees
    /// counterclockwise. Both families advance with the rotation.
    pub fn rotate(self, steps: i32) -> Label {
        if self.0 == 0 {
            return self;
        }
        let sign = self.0.signum();
        Label(sign * wrap16(self.0.abs() as i32 + steps) as i8)
    }

    /// Label of the tile reflected across the horizontal axis through its
    /// anchor: `+k <-> -wrap(2 - k)`.
    pub fn reflect(self) -> Label {
        if self.0 == 0 {
            return self;
        }
        let sign = self.0.signum();
        Label(-sign * wrap16(2 - self.0.abs() as i32) as i8)
    }

    pub fn all() -> impl Iterator<Item = Label> {
        (-6..=6).map(Label::new)
    }
}

fn wrap16(m: i32) -> i32 {
    (m - 1).rem_euclid(6) + 1
}

impl std::fmt::Display for Label {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.0 > 0 {
            write!(f, "+{}", self.0)
        } else {
            write!(f, "{}", self.0)
        }
    }
}

impl std::str::FromStr for Label {
    type Err = String;
    fn from_str(s: &str) -> Result<Label, String> {
        let v: i8 = s.parse().map_err(|_| format!("bad label: {s}"))?;
        if !(-6..=6).contains(&v) {
            return Err(format!("label out of range: {s}"));
        }
        Ok(Label(v))
    }
}

/// The four cells of one parallelogram piece.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Cell {
    BigLeft,
    BigRight,
    LensTop,
    LensBottom,
}

/// Assignment of labels to cells. `sigma` is the direction in which a
/// 60-degree rotation of the torus advances positive labels, `nsigma` the
/// direction for mirrored labels; `p` labels the left big cell and `q` the
/// top lens chain of the base parallelogram.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct LabelScheme {
    pub sigma: i8,
    pub nsigma: i8,
    pub p: u8,
    pub q: u8,
}

/// Labeling pinned by the reference tables and the golden patch.
pub const PINNED_SCHEME: LabelScheme = LabelScheme {
    sigma: 1,
    nsigma: 1,
    p: 2,
    q: 3,
};

impl LabelScheme {
    pub fn label(&self, piece: PieceKind, cell: Option<Cell>) -> Label {
        match piece {
            PieceKind::TriUp | PieceKind::TriDown => Label(0),
            PieceKind::Para(k) => {
                let s = self.sigma as i32 * k as i32;
                let ns = self.nsigma as i32 * k as i32;
                let l = match cell.expect("parallelogram point needs a cell") {
                    Cell::BigLeft => wrap16(self.p as i32 + s),
                    Cell::BigRight => wrap16(self.p as i32 + 3 + s),
                    Cell::LensTop => -wrap16(self.q as i32 + ns),
                    Cell::LensBottom => -wrap16(self.q as i32 + 3 + ns),
                };
                Label(l as i8)
            }
        }
    }
}

/// Why a point could not be classified.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Undecided {
    /// The point lies on a region boundary (straight piece, or a fractal
    /// chord coinciding with the curve at the tested depth).
    Boundary,
    /// The recursion budget ran out before the point separated from a
    /// fractal boundary.
    Depth,
}

/// Presentation of the fundamental domain used for export and rendering.
/// Classification is presentation-independent.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Presentation {
    Parallelogram,
    Radial,
    #[default]
    Recycling,
}

impl std::str::FromStr for Presentation {
    type Err = String;
    fn from_str(s: &str) -> Result<Presentation, String> {
        match s {
            "parallelogram" => Ok(Presentation::Parallelogram),
            "radial" => Ok(Presentation::Radial),
            "recycling" => Ok(Presentation::Recycling),
            _ => Err(format!("unknown presentation: {s}")),
        }
    }
}

/// One positioned copy of a skeleton piece, used to locate reduced points.
#[derive(Debug, Clone)]
struct PieceCopy {
    kind: PieceKind,
    polygon: Vec<Quartic>,
    /// Offset such that `xi^-k * (z - shift)` lands in the base frame.
    shift: Quartic,
}

/// The partition (either orientation), with exact piece geometry and the
/// machinery for certified classification.
#[derive(Clone)]
pub struct Partition {
    lattice: Lattice,
    scheme: LabelScheme,
    pub presentation: Presentation,
    mirrored: bool,
    cover: Vec<PieceCopy>,
    diagonal: DirectedEdge,
    diag_children: Vec<DirectedEdge>,
}

impl Partition {
    /// Build the positively-oriented partition.
    pub fn standard(presentation: Presentation) -> Partition {
        Partition::with_scheme(PINNED_SCHEME, presentation)
    }

    pub fn with_scheme(scheme: LabelScheme, presentation: Presentation) -> Partition {
        let lattice = Lattice::standard();
        let fundamental = vec![
            Quartic::zero(),
            lattice.u.clone(),
            lattice.u.add_ref(&lattice.v),
            lattice.v.clone(),
        ];
        let mut cover = Vec::new();
        for piece in SKELETON.iter() {
            for i in -2..=2i64 {
                for j in -2..=2i64 {
                    let t = lattice
                        .u
                        .scale(&crate::exactmath::QPhi::from_int(i))
                        .add_ref(&lattice.v.scale(&crate::exactmath::QPhi::from_int(j)));
                    let polygon: Vec<Quartic> =
                        piece.polygon.iter().map(|p| p.add_ref(&t)).collect();
                    if convex_intersect(&polygon, &fundamental) {
                        cover.push(PieceCopy {
                            kind: piece.kind,
                            polygon,
                            shift: piece.base_shift.add_ref(&t),
                        });
                    }
                }
            }
        }
        let diagonal = DirectedEdge::canonical(EdgeKind::Red);
        let diag_children = diagonal.substitute();
        Partition {
            lattice,
            scheme,
            presentation,
            mirrored: false,
            cover,
            diagonal,
            diag_children,
        }
    }

    /// The mirror partition: conjugated geometry, negated labels.
    pub fn mirror(&self) -> Partition {
        let mut m = self.clone();
        m.mirrored = !self.mirrored;
        m
    }

    pub fn is_mirrored(&self) -> bool {
        self.mirrored
    }

    pub fn scheme(&self) -> LabelScheme {
        self.scheme
    }

    /// The translation lattice of this partition (conjugated for the
    /// mirror).
    pub fn lattice(&self) -> Lattice {
        if self.mirrored {
            self.lattice.conj()
        } else {
            self.lattice.clone()
        }
    }

    /// Classify a point of the plane to a label, with certified recursive
    /// descent along the fractal boundaries.
    pub fn classify(&self, z: &Quartic, max_depth: u32) -> Result<Label, Undecided> {
        let z = if self.mirrored { z.conj() } else { z.clone() };
        let (piece, cell) = self.locate(&z, max_depth)?;
        let label = self.scheme.label(piece, cell);
        Ok(if self.mirrored { label.mirror() } else { label })
    }

    /// Piece and cell of a (non-mirrored) point.
    fn locate(&self, z: &Quartic, max_depth: u32) -> Result<(PieceKind, Option<Cell>), Undecided> {
        let (rep, _) = self.lattice.reduce(z);
        let mut hit: Option<&PieceCopy> = None;
        for copy in &self.cover {
            match locate_convex(&copy.polygon, &rep) {
                Location::Inside => {
                    hit = Some(copy);
                    break;
                }
                Location::OnBoundary => return Err(Undecided::Boundary),
                Location::Outside => {}
            }
        }
        let copy = hit.expect("skeleton does not cover the fundamental domain");
        match copy.kind {
            PieceKind::TriUp | PieceKind::TriDown => Ok((copy.kind, None)),
            PieceKind::Para(k) => {
                let w = Quartic::xi_pow(-(k as i64)).mul_ref(&rep.sub_ref(&copy.shift));
                let cell = self.cell_in_frame(&w, max_depth)?;
                Ok((copy.kind, Some(cell)))
            }
        }
    }

    /// Cell of a point strictly inside the base parallelogram.
    fn cell_in_frame(&self, w: &Quartic, budget: u32) -> Result<Cell, Undecided> {
        let top = &self.diag_children[0];
        let bottom = &self.diag_children[2];
        match in_bulge(w, top, budget, false) {
            Certainty::Known(true) => return Ok(Cell::LensTop),
            Certainty::Known(false) => {}
            Certainty::Boundary => return Err(Undecided::Boundary),
            Certainty::Depth => return Err(Undecided::Depth),
        }
        match in_bulge(w, bottom, budget, false) {
            Certainty::Known(true) => return Ok(Cell::LensBottom),
            Certainty::Known(false) => {}
            Certainty::Boundary => return Err(Undecided::Boundary),
            Certainty::Depth => return Err(Undecided::Depth),
        }
        // Neither lens: the side of the diagonal curve decides. Points on
        // the diagonal's chord (off the curve) resolve by an upward
        // perturbation, applied consistently to both halves of the test.
        let left = match orient(&self.diagonal.start, &self.diagonal.end, w) {
            Sign::Positive => true,
            Sign::Negative => false,
            Sign::Zero => true,
        };
        match in_bulge(w, &self.diagonal, budget, true) {
            Certainty::Known(inr) => Ok(if left ^ inr {
                Cell::BigRight
            } else {
                Cell::BigLeft
            }),
            Certainty::Boundary => Err(Undecided::Boundary),
            Certainty::Depth => Err(Undecided::Depth),
        }
    }

    /// Piece/cell classification without labels (used by the pinning
    /// search and the covering machinery).
    pub fn locate_cell(
        &self,
        z: &Quartic,
        max_depth: u32,
    ) -> Result<(PieceKind, Option<Cell>), Undecided> {
        let z = if self.mirrored { z.conj() } else { z.clone() };
        self.locate(&z, max_depth)
    }

    /// For a point inside a lens chain: how many nested tail bubbles deep
    /// it sits (0 = the main bubble).
    pub fn bubble_depth(&self, z: &Quartic, max_depth: u32) -> Option<u32> {
        let z = if self.mirrored { z.conj() } else { z.clone() };
        let (rep, _) = self.lattice.reduce(&z);
        let copy = self.cover.iter().find(|c| {
            locate_convex(&c.polygon, &rep) == Location::Inside
        })?;
        let PieceKind::Para(k) = copy.kind else { return None };
        let w = Quartic::xi_pow(-(k as i64)).mul_ref(&rep.sub_ref(&copy.shift));
        let mut edge = match self.cell_in_frame(&w, max_depth) {
            Ok(Cell::LensTop) => self.diag_children[0].clone(),
            Ok(Cell::LensBottom) => self.diag_children[2].clone(),
            _ => return None,
        };
        let mut depth = 0u32;
        loop {
            let tail = tail_child(&edge);
            match in_bulge(&w, &tail, max_depth, false) {
                Certainty::Known(true) => {
                    edge = tail;
                    depth += 1;
                }
                _ => return Some(depth),
            }
        }
    }
}

/// The unique child of a blue edge whose chord is collinear with the
/// parent's chord (the tail of the bubble chain along the chord).
pub fn tail_child(e: &DirectedEdge) -> DirectedEdge {
    e.substitute()
        .into_iter()
        .find(|c| {
            orient(&e.start, &e.end, &c.start) == Sign::Zero
                && orient(&e.start, &e.end, &c.end) == Sign::Zero
        })
        .expect("blue edges have a chord-collinear child")
}

pub mod export;
pub mod regions;
