//! Frozen reference tables pinning the labeling conventions.
//!
//! These tables are the contract between the partition side and the
//! geometric side of the construction: the certified pair tables, the
//! geometric overlap oracle and the golden patch must all reproduce them
//! exactly, and the convention constants in this crate were locked by
//! searching for the unique assignment that satisfies all of them at once.

/// Ordered label pairs `(i, j)` such that a label `i` at a grid point and a
/// label `j` at its right neighbor (offset 1) can occur together. There are
/// exactly 36.
pub const ADJACENT_PAIRS_UNIT: [(i8, i8); 36] = [
    (1, 6),
    (2, 2),
    (2, 5),
    (2, 6),
    (3, 1),
    (3, 2),
    (3, 4),
    (3, 5),
    (4, 2),
    (4, 3),
    (4, 6),
    (5, 1),
    (5, 5),
    (5, 6),
    (6, 1),
    (1, -6),
    (4, -5),
    (5, -2),
    (5, -3),
    (5, -4),
    (-1, 2),
    (-2, 1),
    (-3, 4),
    (-5, 2),
    (-6, 2),
    (0, 0),
    (0, 1),
    (0, 3),
    (0, 4),
    (0, 6),
    (0, -1),
    (1, 0),
    (3, 0),
    (4, 0),
    (6, 0),
    (-4, 0),
];

/// Ordered tile pairs that geometrically overlap when anchored at offset
/// `1 + xi` (and only these).
pub const OVERLAP_PAIRS_DIAGONAL: [(i8, i8); 8] = [
    (1, 4),
    (1, -6),
    (1, -5),
    (6, -5),
    (-2, -5),
    (-2, 3),
    (-2, 4),
    (-3, 4),
];

/// Ordered tile pairs that geometrically overlap when anchored at offset 2.
pub const OVERLAP_PAIRS_TWO: [(i8, i8); 2] = [(-1, 4), (1, -4)];

/// Horizontally adjacent patterns excluded from every valid configuration.
pub const EXCLUDED_PATTERNS: [(i8, i8); 6] =
    [(3, 6), (5, 2), (3, -1), (4, -2), (4, -6), (5, -1)];

/// Markers whose presence certifies the positively-oriented component; a
/// configuration is positively oriented iff it contains one of these at
/// offset 1 (mirrored markers certify the negative component).
pub const POSITIVE_MARKERS: [(i8, i8); 3] = [(4, -5), (5, -2), (5, -3)];

/// Reference 25-point labeled window: grid point `(a, b)` meaning `a + b*xi`
/// with its label. Reproducing this window pins every orientation
/// convention in the crate.
pub const GOLDEN_PATCH: [(i64, i64, i8); 25] = [
    (-1, 0, 4),
    (0, 0, 3),
    (1, 0, 2),
    (2, 0, 2),
    (3, 0, 6),
    (-1, 1, 0),
    (0, 1, 3),
    (1, 1, 0),
    (2, 1, -1),
    (3, 1, 2),
    (-2, 2, 0),
    (-1, 2, 0),
    (0, 2, 3),
    (1, 2, 4),
    (2, 2, 3),
    (-2, 3, 5),
    (-1, 3, -2),
    (0, 3, 1),
    (1, 3, 0),
    (2, 3, 6),
    (-3, 4, 0),
    (-2, 4, 4),
    (-1, 4, 3),
    (0, 4, 2),
    (1, 4, 5),
];

/// Is `(i, j)` one of the 36 allowed unit-offset pairs?
pub fn is_allowed_unit_pair(i: i8, j: i8) -> bool {
    ADJACENT_PAIRS_UNIT.contains(&(i, j))
}
