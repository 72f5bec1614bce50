//! Certified covering machinery: adaptive subdivision of the fundamental
//! domain into exact cells, conservative label sets per cell, certified
//! region-area bounds and shifted-region intersection certificates.

use super::{Cell, Label, Partition, PieceKind};
use crate::exactmath::{orient, polygon_area_twice, QPhi, Quartic, RealQuartic, Sign};
use crate::fractal::{segment_ray_parity, Certainty, DirectedEdge};
use crate::geom::{convex_intersect, locate_convex, Location};
use num_bigint::BigInt;
use num_rational::BigRational;

/// Bitmask over the 13 labels (bit = value + 6).
pub type LabelMask = u16;

pub fn mask_of(l: Label) -> LabelMask {
    1u16 << ((l.value() + 6) as u16)
}

pub fn mask_contains(m: LabelMask, l: Label) -> bool {
    m & mask_of(l) != 0
}

pub fn mask_single(m: LabelMask) -> Option<Label> {
    if m != 0 && m & (m - 1) == 0 {
        Some(Label::new(m.trailing_zeros() as i8 - 6))
    } else {
        None
    }
}

/// Dyadic cell `[a, a+1] x [b, b+1] / 2^level` in lattice coordinates.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct CellRect {
    pub level: u32,
    pub a: i64,
    pub b: i64,
}

impl CellRect {
    pub fn root() -> CellRect {
        CellRect { level: 0, a: 0, b: 0 }
    }

    pub fn split(&self) -> [CellRect; 4] {
        let l = self.level + 1;
        let a = 2 * self.a;
        let b = 2 * self.b;
        [
            CellRect { level: l, a, b },
            CellRect { level: l, a: a + 1, b },
            CellRect { level: l, a, b: b + 1 },
            CellRect { level: l, a: a + 1, b: b + 1 },
        ]
    }

    fn coord(&self, n: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(1i64) << self.level)
    }

    /// Corner polygon in the plane (counterclockwise).
    pub fn polygon(&self, part: &Partition) -> Vec<Quartic> {
        let l = &part.lattice;
        let s0 = QPhi::from_rational(self.coord(self.a));
        let s1 = QPhi::from_rational(self.coord(self.a + 1));
        let t0 = QPhi::from_rational(self.coord(self.b));
        let t1 = QPhi::from_rational(self.coord(self.b + 1));
        vec![
            l.point(&s0, &t0),
            l.point(&s1, &t0),
            l.point(&s1, &t1),
            l.point(&s0, &t1),
        ]
    }

    /// Center point.
    pub fn center(&self, part: &Partition) -> Quartic {
        let l = &part.lattice;
        let s = QPhi::from_rational(BigRational::new(
            BigInt::from(2 * self.a + 1),
            BigInt::from(1i64) << (self.level + 1),
        ));
        let t = QPhi::from_rational(BigRational::new(
            BigInt::from(2 * self.b + 1),
            BigInt::from(1i64) << (self.level + 1),
        ));
        l.point(&s, &t)
    }

}

/// Exact segment-vs-convex-polygon intersection (closed sets).
fn segment_intersects_convex(p: &Quartic, q: &Quartic, poly: &[Quartic]) -> bool {
    if locate_convex(poly, p) != Location::Outside || locate_convex(poly, q) != Location::Outside {
        return true;
    }
    let n = poly.len();
    for i in 0..n {
        let a = &poly[i];
        let c = &poly[(i + 1) % n];
        if segments_intersect(p, q, a, c) {
            return true;
        }
    }
    false
}

fn segments_intersect(p: &Quartic, q: &Quartic, a: &Quartic, b: &Quartic) -> bool {
    let d1 = orient(p, q, a);
    let d2 = orient(p, q, b);
    let d3 = orient(a, b, p);
    let d4 = orient(a, b, q);
    if d1 != d2 && d3 != d4 && d1 != Sign::Zero && d2 != Sign::Zero {
        return true;
    }
    use crate::geom::on_segment;
    on_segment(p, q, a) || on_segment(p, q, b) || on_segment(a, b, p) || on_segment(a, b, q)
}

/// Convex superset of the upward shadow of a convex polygon, within the
/// bounded working region.
fn upward_shadow(poly: &[Quartic]) -> Vec<Quartic> {
    // Lift every vertex far upward and take the convex hull of both rings.
    let lift = Quartic::from_ints(0, 0, 2000, 1000); // ~ (2000 + 1000 phi) * xi, way above everything
    let mut pts: Vec<Quartic> = poly.to_vec();
    pts.extend(poly.iter().map(|p| p.add_ref(&lift)));
    convex_hull(pts)
}

/// Exact convex hull (counterclockwise) of a small point set.
fn convex_hull(mut pts: Vec<Quartic>) -> Vec<Quartic> {
    pts.sort_by(|a, b| {
        a.re2()
            .cmp_ref(&b.re2())
            .then_with(|| a.im_coeff().cmp_ref(&b.im_coeff()))
    });
    pts.dedup();
    if pts.len() <= 2 {
        return pts;
    }
    let mut lower: Vec<Quartic> = Vec::new();
    for p in &pts {
        while lower.len() >= 2
            && orient(&lower[lower.len() - 2], &lower[lower.len() - 1], p) != Sign::Positive
        {
            lower.pop();
        }
        lower.push(p.clone());
    }
    let mut upper: Vec<Quartic> = Vec::new();
    for p in pts.iter().rev() {
        while upper.len() >= 2
            && orient(&upper[upper.len() - 2], &upper[upper.len() - 1], p) != Sign::Positive
        {
            upper.pop();
        }
        upper.push(p.clone());
    }
    lower.pop();
    upper.pop();
    lower.extend(upper);
    lower
}

/// Parity of upward-ray crossings with a segment, when constant over a
/// whole convex region.
fn cell_segment_parity(cell: &[Quartic], p: &Quartic, q: &Quartic) -> Certainty<bool> {
    let shadow = upward_shadow(cell);
    if !segment_intersects_convex(p, q, &shadow) {
        return Certainty::Known(false);
    }
    // Constant-true certificate: the segment spans the whole X-range of the
    // cell strictly, and every corner sees exactly one crossing above.
    let mut all_above = true;
    for w in cell {
        match segment_ray_parity(w, p, q) {
            Certainty::Known(true) => {}
            _ => {
                all_above = false;
                break;
            }
        }
    }
    if all_above {
        let xp = p.re2();
        let xq = q.re2();
        use std::cmp::Ordering::*;
        let (lo, hi) = if xp.cmp_ref(&xq) == Less { (&xp, &xq) } else { (&xq, &xp) };
        let outside = cell.iter().all(|w| {
            let x = w.re2();
            lo.cmp_ref(&x) == Less && x.cmp_ref(hi) == Less
        });
        if outside && !segment_intersects_convex(p, q, cell) {
            return Certainty::Known(true);
        }
    }
    Certainty::Depth
}

/// Parity of upward-ray crossings with the limit curve of `e`, when
/// constant over a convex cell.
fn cell_curve_parity(cell: &[Quartic], e: &DirectedEdge, budget: u32) -> Certainty<bool> {
    if !convex_intersect(&e.enclosure().vertices, cell) {
        return cell_segment_parity(cell, &e.start, &e.end);
    }
    if budget == 0 {
        return Certainty::Depth;
    }
    let mut parity = false;
    for child in e.substitute() {
        let r = if !convex_intersect(&child.enclosure().vertices, cell) {
            cell_segment_parity(cell, &child.start, &child.end)
        } else {
            cell_curve_parity(cell, &child, budget - 1)
        };
        match r {
            Certainty::Known(b) => parity ^= b,
            other => return other,
        }
    }
    Certainty::Known(parity)
}

fn cell_in_bulge(cell: &[Quartic], e: &DirectedEdge, budget: u32) -> Certainty<bool> {
    let chord = match cell_segment_parity(cell, &e.start, &e.end) {
        Certainty::Known(b) => b,
        other => return other,
    };
    match cell_curve_parity(cell, e, budget) {
        Certainty::Known(c) => Certainty::Known(c ^ chord),
        other => return other,
    }
}

const ALL_CELLS: [Cell; 4] = [Cell::BigLeft, Cell::BigRight, Cell::LensTop, Cell::LensBottom];

impl Partition {
    /// Which of the four cells can a convex region (in base-frame
    /// coordinates, inside the base parallelogram) intersect?
    fn frame_cell_mask(&self, frame_poly: &[Quartic], budget: u32) -> Vec<Cell> {
        let top = &self.diag_children[0];
        let bottom = &self.diag_children[2];
        match cell_in_bulge(frame_poly, top, budget) {
            Certainty::Known(true) => return vec![Cell::LensTop],
            Certainty::Known(false) => {}
            _ => return ALL_CELLS.to_vec(),
        }
        match cell_in_bulge(frame_poly, bottom, budget) {
            Certainty::Known(true) => return vec![Cell::LensBottom],
            Certainty::Known(false) => {}
            _ => return ALL_CELLS.to_vec(),
        }
        let mut left_all = true;
        let mut right_all = true;
        let ds = &self.diagonal.start;
        let de = &self.diagonal.end;
        for w in frame_poly {
            match orient(ds, de, w) {
                Sign::Positive => right_all = false,
                Sign::Negative => left_all = false,
                Sign::Zero => {
                    left_all = false;
                    right_all = false;
                }
            }
        }
        if !left_all && !right_all {
            return vec![Cell::BigLeft, Cell::BigRight];
        }
        match cell_in_bulge(frame_poly, &self.diagonal, budget) {
            Certainty::Known(inr) => {
                let left = left_all;
                vec![if left ^ inr { Cell::BigRight } else { Cell::BigLeft }]
            }
            _ => vec![Cell::BigLeft, Cell::BigRight],
        }
    }

    /// Conservative label set of a convex polygon anywhere in the plane.
    /// The second component is true when the polygon is certified to lie
    /// inside a single region.
    pub fn polygon_label_mask(&self, poly: &[Quartic], budget: u32) -> (LabelMask, bool) {
        debug_assert!(!self.mirrored, "covering machinery runs on the base partition");
        let (_, (m, n)) = self.lattice.reduce(&poly[0]);
        let shift = self
            .lattice
            .u
            .scale(&QPhi::from_rational(BigRational::from_integer(m)))
            .add_ref(
                &self
                    .lattice
                    .v
                    .scale(&QPhi::from_rational(BigRational::from_integer(n))),
            );
        let reduced: Vec<Quartic> = poly.iter().map(|p| p.sub_ref(&shift)).collect();
        let mut mask: LabelMask = 0;
        let mut pieces_hit = 0usize;
        let mut single = true;
        for copy in &self.cover {
            if !convex_intersect(&copy.polygon, &reduced) {
                continue;
            }
            pieces_hit += 1;
            let contained = reduced
                .iter()
                .all(|w| locate_convex(&copy.polygon, w) != Location::Outside);
            match copy.kind {
                PieceKind::TriUp | PieceKind::TriDown => {
                    mask |= mask_of(Label::white());
                    if !contained {
                        single = false;
                    }
                }
                PieceKind::Para(k) => {
                    let inv = Quartic::xi_pow(-(k as i64));
                    let frame: Vec<Quartic> = reduced
                        .iter()
                        .map(|w| inv.mul_ref(&w.sub_ref(&copy.shift)))
                        .collect();
                    let cells = if contained {
                        self.frame_cell_mask(&frame, budget)
                    } else {
                        single = false;
                        ALL_CELLS.to_vec()
                    };
                    if cells.len() > 1 {
                        single = false;
                    }
                    for c in cells {
                        mask |= mask_of(self.scheme.label(copy.kind, Some(c)));
                    }
                }
            }
        }
        if pieces_hit > 1 {
            single = false;
        }
        (mask, single && pieces_hit == 1)
    }
}

/// Certified outcome of a shifted-region intersection query.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PairOutcome {
    Nonempty(Quartic),
    Empty,
    Unknown,
}

/// Set of cells covering the fundamental domain at mixed refinement.
pub struct CellSet;

/// Decide whether `(p_i + offset)` meets `p_j`, by adaptive subdivision.
pub fn intersect_shifted(
    part: &Partition,
    i: Label,
    j: Label,
    offset: &Quartic,
    max_level: u32,
    budget: u32,
) -> PairOutcome {
    let neg = offset.neg_ref();
    let mut work = vec![CellRect::root()];
    let mut unknown = false;
    while let Some(cell) = work.pop() {
        let poly = cell.polygon(part);
        let (mask_here, single_here) = part.polygon_label_mask(&poly, budget);
        if !mask_contains(mask_here, j) {
            continue;
        }
        let shifted: Vec<Quartic> = poly.iter().map(|p| p.add_ref(&neg)).collect();
        let (mask_src, single_src) = part.polygon_label_mask(&shifted, budget);
        if !mask_contains(mask_src, i) {
            continue;
        }
        if single_here
            && single_src
            && mask_single(mask_here) == Some(j)
            && mask_single(mask_src) == Some(i)
        {
            return PairOutcome::Nonempty(cell.center(part));
        }
        if cell.level >= max_level {
            unknown = true;
            continue;
        }
        work.extend(cell.split());
    }
    if unknown {
        PairOutcome::Unknown
    } else {
        PairOutcome::Empty
    }
}

/// Full 13x13 pair table at one offset. Entry `[i+6][j+6]` answers whether
/// `(p_i + offset)` meets `p_j`.
pub fn pair_table(
    part: &Partition,
    offset: &Quartic,
    max_level: u32,
    budget: u32,
) -> Vec<Vec<PairOutcome>> {
    let neg = offset.neg_ref();
    let mut table: Vec<Vec<PairOutcome>> =
        vec![vec![PairOutcome::Empty; 13]; 13];
    let mut witnessed = [[false; 13]; 13];
    let mut possible = [[false; 13]; 13];
    let mut undecided_cells: Vec<CellRect> = vec![CellRect::root()];
    let mut level = 0;
    while level <= max_level && !undecided_cells.is_empty() {
        let mut next: Vec<CellRect> = Vec::new();
        for cell in undecided_cells.drain(..) {
            let poly = cell.polygon(part);
            let (mask_here, single_here) = part.polygon_label_mask(&poly, budget);
            let shifted: Vec<Quartic> = poly.iter().map(|p| p.add_ref(&neg)).collect();
            let (mask_src, single_src) = part.polygon_label_mask(&shifted, budget);
            if single_here && single_src {
                let j = mask_single(mask_here).unwrap();
                let i = mask_single(mask_src).unwrap();
                let (ii, jj) = (idx(i), idx(j));
                if !witnessed[ii][jj] {
                    witnessed[ii][jj] = true;
                    table[ii][jj] = PairOutcome::Nonempty(cell.center(part));
                }
                continue;
            }
            if cell.level >= max_level {
                // Conservative: every pair in the product stays possible.
                for i in Label::all() {
                    if mask_contains(mask_src, i) {
                        for j in Label::all() {
                            if mask_contains(mask_here, j) {
                                possible[idx(i)][idx(j)] = true;
                            }
                        }
                    }
                }
                continue;
            }
            next.extend(cell.split());
        }
        undecided_cells = next;
        level += 1;
    }
    for i in 0..13 {
        for j in 0..13 {
            if !witnessed[i][j] && possible[i][j] {
                table[i][j] = PairOutcome::Unknown;
            }
        }
    }
    table
}

pub fn idx(l: Label) -> usize {
    (l.value() + 6) as usize
}

/// Certified inner/outer bounds on a region's area.
#[derive(Debug, Clone)]
pub struct AreaBounds {
    pub inner_twice: RealQuartic,
    pub outer_twice: RealQuartic,
}

/// Inner/outer area bounds for one label from depth-limited refinement.
/// The white region is polygonal, so its bounds coincide at any depth.
pub fn region_area(part: &Partition, label: Label, level: u32, budget: u32) -> AreaBounds {
    if label.is_white() {
        // Two equilateral triangles of side phi: area phi^2 sqrt3 / 2.
        let white_twice = RealQuartic::sqrt3_times(QPhi::from_pair(1, 1));
        return AreaBounds {
            inner_twice: white_twice.clone(),
            outer_twice: white_twice,
        };
    }
    let mut inner = RealQuartic::zero();
    let mut outer = RealQuartic::zero();
    let mut work = vec![CellRect::root()];
    while let Some(cell) = work.pop() {
        let poly = cell.polygon(part);
        let (mask, single) = part.polygon_label_mask(&poly, budget);
        if !mask_contains(mask, label) {
            continue;
        }
        let area = polygon_area_twice(&poly);
        if single && mask_single(mask) == Some(label) {
            inner = inner.add_ref(&area);
            outer = outer.add_ref(&area);
            continue;
        }
        if cell.level >= level {
            outer = outer.add_ref(&area);
            continue;
        }
        work.extend(cell.split());
    }
    AreaBounds {
        inner_twice: inner,
        outer_twice: outer,
    }
}
