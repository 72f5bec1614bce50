//! The two-type directed-edge substitution generating the fractal boundary
//! curves, with exact polyline approximations, convex enclosures and
//! certified side-of-curve queries.
//!
//! A blue edge in canonical position is the directed chord 0 -> phi^2; a red
//! edge is the directed chord xi -> phi^2. One substitution step replaces a
//! blue edge by four edges through 0, xi, xi+1, phi, phi^2 and a red edge by
//! three edges through xi, xi+1, phi, phi^2. Every child chord is phi^-2
//! times its parent chord. The curve of an edge is the limit of iterated
//! substitution; it stays inside the edge's convex enclosure.

use crate::exactmath::{orient, polygon_area_twice, Quartic, RealQuartic, Sign};
use crate::geom::{convex_contains_convex, locate_convex, on_segment, Location};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum EdgeKind {
    Blue,
    Red,
}

/// One typed, oriented boundary segment with exact endpoints. `reversed`
/// records that the intrinsic orientation of the curve opposes the listed
/// start -> end direction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DirectedEdge {
    pub kind: EdgeKind,
    pub start: Quartic,
    pub end: Quartic,
    pub reversed: bool,
}

/// Convex region certified to contain an edge's limit curve.
#[derive(Debug, Clone)]
pub struct Enclosure {
    /// Counterclockwise vertex list.
    pub vertices: Vec<Quartic>,
}

impl Enclosure {
    pub fn contains_point(&self, z: &Quartic) -> Location {
        locate_convex(&self.vertices, z)
    }

    pub fn contains_enclosure(&self, other: &Enclosure) -> bool {
        convex_contains_convex(&self.vertices, &other.vertices)
    }

    pub fn area_twice(&self) -> RealQuartic {
        polygon_area_twice(&self.vertices)
    }
}

fn phi2() -> Quartic {
    Quartic::from_ints(1, 1, 0, 0)
}

fn xi_plus(n: i64) -> Quartic {
    Quartic::from_ints(n, 0, 1, 0)
}

/// Substitution rule of one edge kind: canonical path vertices plus the
/// kind and orientation flag of every child. Orientation flags are pinned
/// by the exact symmetry and nesting certificates in the test suite.
struct Rule {
    path: Vec<Quartic>,
    children: Vec<(EdgeKind, bool)>,
    enclosure: Vec<Quartic>,
}

fn rule(kind: EdgeKind) -> Rule {
    match kind {
        EdgeKind::Blue => Rule {
            path: vec![
                Quartic::zero(),
                Quartic::xi(),
                xi_plus(1),
                Quartic::phi(),
                phi2(),
            ],
            children: vec![
                (EdgeKind::Blue, true),
                (EdgeKind::Blue, true),
                (EdgeKind::Red, false),
                (EdgeKind::Blue, false),
            ],
            // Equilateral triangle on the chord, apex on the bulge side.
            enclosure: vec![Quartic::zero(), phi2(), phi2().mul_ref(&Quartic::xi())],
        },
        EdgeKind::Red => Rule {
            path: vec![Quartic::xi(), xi_plus(1), Quartic::phi(), phi2()],
            children: vec![
                (EdgeKind::Blue, true),
                (EdgeKind::Red, false),
                (EdgeKind::Blue, false),
            ],
            // Parallelogram straddling the chord.
            enclosure: vec![
                Quartic::xi(),
                Quartic::one(),
                phi2(),
                Quartic::phi().add_ref(&Quartic::xi()),
            ],
        },
    }
}

impl DirectedEdge {
    pub fn new(kind: EdgeKind, start: Quartic, end: Quartic, reversed: bool) -> DirectedEdge {
        DirectedEdge {
            kind,
            start,
            end,
            reversed,
        }
    }

    /// The canonical edge of a kind, in canonical position.
    pub fn canonical(kind: EdgeKind) -> DirectedEdge {
        match kind {
            EdgeKind::Blue => DirectedEdge::new(kind, Quartic::zero(), phi2(), false),
            EdgeKind::Red => DirectedEdge::new(kind, Quartic::xi(), phi2(), false),
        }
    }

    fn canonical_chord(kind: EdgeKind) -> (Quartic, Quartic) {
        match kind {
            EdgeKind::Blue => (Quartic::zero(), phi2()),
            EdgeKind::Red => (Quartic::xi(), phi2()),
        }
    }

    /// Endpoints in intrinsic orientation.
    fn intrinsic(&self) -> (Quartic, Quartic) {
        if self.reversed {
            (self.end.clone(), self.start.clone())
        } else {
            (self.start.clone(), self.end.clone())
        }
    }

    /// The orientation-preserving similarity mapping the canonical chord
    /// onto this edge's intrinsic chord, as `z -> shift + factor*z`.
    fn similarity(&self) -> (Quartic, Quartic) {
        let (s, e) = self.intrinsic();
        let (a, b) = Self::canonical_chord(self.kind);
        let factor = e.sub_ref(&s).div_ref(&b.sub_ref(&a));
        let shift = s.sub_ref(&factor.mul_ref(&a));
        (shift, factor)
    }

    /// One substitution step. The children form a path from `start` to
    /// `end` with exact endpoints.
    pub fn substitute(&self) -> Vec<DirectedEdge> {
        let (shift, factor) = self.similarity();
        let r = rule(self.kind);
        let verts: Vec<Quartic> = r
            .path
            .iter()
            .map(|p| shift.add_ref(&factor.mul_ref(p)))
            .collect();
        let mut children: Vec<DirectedEdge> = r
            .children
            .iter()
            .enumerate()
            .map(|(i, (kind, flag))| {
                DirectedEdge::new(*kind, verts[i].clone(), verts[i + 1].clone(), *flag)
            })
            .collect();
        if self.reversed {
            children.reverse();
            for c in &mut children {
                std::mem::swap(&mut c.start, &mut c.end);
                c.reversed = !c.reversed;
            }
        }
        children
    }

    /// Depth-fold substitution followed by chord replacement. The first and
    /// last vertices equal `start` and `end` exactly.
    pub fn approximate(&self, depth: u32) -> Vec<Quartic> {
        if depth == 0 {
            return vec![self.start.clone(), self.end.clone()];
        }
        let mut out = Vec::new();
        for (i, child) in self.substitute().iter().enumerate() {
            let part = child.approximate(depth - 1);
            if i == 0 {
                out.extend(part);
            } else {
                out.extend(part.into_iter().skip(1));
            }
        }
        out
    }

    /// Edges after `depth` substitution rounds.
    pub fn subdivide(&self, depth: u32) -> Vec<DirectedEdge> {
        if depth == 0 {
            return vec![self.clone()];
        }
        self.substitute()
            .iter()
            .flat_map(|c| c.subdivide(depth - 1))
            .collect()
    }

    /// Convex region containing this edge's limit curve.
    pub fn enclosure(&self) -> Enclosure {
        let (shift, factor) = self.similarity();
        Enclosure {
            vertices: rule(self.kind)
                .enclosure
                .iter()
                .map(|p| shift.add_ref(&factor.mul_ref(p)))
                .collect(),
        }
    }

    /// Certified nesting: the enclosures of the children are contained in
    /// the enclosure of the edge.
    pub fn nesting_check(&self) -> bool {
        let outer = self.enclosure();
        self.substitute()
            .iter()
            .all(|c| outer.contains_enclosure(&c.enclosure()))
    }

    /// Chord squared length, an exact element of Q(phi).
    pub fn chord_norm_sq(&self) -> crate::exactmath::QPhi {
        self.end.sub_ref(&self.start).norm_sq()
    }
}

/// Outcome of a certified parity or side query.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Certainty<T> {
    Known(T),
    /// The query point lies on the queried set (or on a chord used as a
    /// stand-in at some recursion level).
    Boundary,
    /// Recursion budget exhausted before the point separated from the curve.
    Depth,
}

impl<T> Certainty<T> {
    pub fn map<U>(self, f: impl FnOnce(T) -> U) -> Certainty<U> {
        match self {
            Certainty::Known(t) => Certainty::Known(f(t)),
            Certainty::Boundary => Certainty::Boundary,
            Certainty::Depth => Certainty::Depth,
        }
    }
}

/// Parity of crossings between the open upward vertical ray from `z` and
/// the segment (p, q). `Boundary` when `z` lies on the segment. Crossings
/// use a half-open convention so that chains of segments sharing endpoints
/// count once.
pub fn segment_ray_parity(z: &Quartic, p: &Quartic, q: &Quartic) -> Certainty<bool> {
    if on_segment(p, q, z) {
        return Certainty::Boundary;
    }
    let xz = z.re2();
    let xp = p.re2();
    let xq = q.re2();
    use std::cmp::Ordering::*;
    let cp = xp.cmp_ref(&xz);
    let cq = xq.cmp_ref(&xz);
    // Half-open: count p-side when X(p) <= X(z) < X(q) or X(q) <= X(z) < X(p).
    let left_to_right = cp != Greater && cq == Greater;
    let right_to_left = cq != Greater && cp == Greater;
    if !(left_to_right || right_to_left) {
        return Certainty::Known(false);
    }
    match orient(p, q, z) {
        Sign::Zero => Certainty::Boundary,
        // Segment heading rightwards in X: crossing lies above z iff z is on
        // the right of (p -> q).
        Sign::Negative => Certainty::Known(left_to_right),
        Sign::Positive => Certainty::Known(right_to_left),
    }
}

/// Parity of crossings between the upward ray from `z` and the limit curve
/// of `e`. Exact: whenever `z` lies outside the (closed) enclosure of a
/// piece, the piece's chord has the same crossing parity as its curve.
pub fn curve_ray_parity(z: &Quartic, e: &DirectedEdge, budget: u32) -> Certainty<bool> {
    if e.enclosure().contains_point(z) == Location::Outside {
        return segment_ray_parity(z, &e.start, &e.end);
    }
    if budget == 0 {
        return Certainty::Depth;
    }
    let mut parity = false;
    for child in e.substitute() {
        let r = if child.enclosure().contains_point(z) == Location::Outside {
            segment_ray_parity(z, &child.start, &child.end)
        } else {
            curve_ray_parity(z, &child, budget - 1)
        };
        match r {
            Certainty::Known(b) => parity ^= b,
            other => return other,
        }
    }
    Certainty::Known(parity)
}

/// Is `z` inside the open region bounded by the curve of `e` and its chord?
///
/// `perturb_up_on_chord` selects the behaviour for points exactly on the
/// chord (but off the curve): when true, the query answers for `z + i*eps`,
/// which is exact for any point not on the curve; when false such points
/// report `Boundary`.
pub fn in_bulge(
    z: &Quartic,
    e: &DirectedEdge,
    budget: u32,
    perturb_up_on_chord: bool,
) -> Certainty<bool> {
    let chord = segment_ray_parity(z, &e.start, &e.end);
    let chord_parity = match chord {
        Certainty::Known(b) => b,
        Certainty::Boundary => {
            if perturb_up_on_chord {
                // The chord now passes strictly below the perturbed point.
                false
            } else {
                return Certainty::Boundary;
            }
        }
        Certainty::Depth => unreachable!(),
    };
    match curve_ray_parity(z, e, budget) {
        Certainty::Known(c) => Certainty::Known(c ^ chord_parity),
        other => other,
    }
}
