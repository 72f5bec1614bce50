//! Backtracking completion of labeled windows into larger valid windows,
//! driven purely by kite-coverage constraints with domain propagation.
//! Used to cross-validate the partition against independently generated
//! tilings.

use crate::hatgeom::{tile_kites, GridPoint, Kite, TilePlacement};
use crate::partition::Label;
use std::collections::HashMap;

const NEIGH: [(i64, i64); 7] = [(0, 0), (1, 0), (0, 1), (-1, 1), (-1, 0), (0, -1), (1, -1)];

/// Per-label kite sets of a tile anchored at the origin.
fn tile_tables() -> Vec<(Label, Vec<Kite>)> {
    let mut out = Vec::new();
    for l in Label::all() {
        if l.is_white() {
            continue;
        }
        out.push((
            l,
            tile_kites(TilePlacement {
                anchor: GridPoint::ORIGIN,
                label: l,
            }),
        ));
    }
    out
}

enum Trail {
    /// Point assigned; previous domain stored.
    Assigned(usize, u16),
    /// Domain pruned; previous mask stored.
    Domain(usize, u16),
}

struct Grower {
    radius: i64,
    order: Vec<GridPoint>,
    index: HashMap<GridPoint, usize>,
    tables: Vec<(Label, Vec<Kite>)>,
    /// allowed_pairs[k][c1] = mask of choices allowed at offset xi^k from a
    /// point with choice c1.
    allowed: [[u16; 13]; 6],
    /// Which (anchor-offset, label-index) pairs cover a kite at offset
    /// `(v_off, d)` from the anchor: map from (v_off, d) to list.
    coverers: HashMap<(GridPoint, u8), Vec<(GridPoint, usize)>>,
    domains: Vec<u16>,
    assigned: Vec<Option<usize>>, // index into `labels`: 0 = white
    labels: Vec<Label>,           // label per choice index
    counts: HashMap<Kite, u32>,
    nodes: u64,
}

impl Grower {
    fn new(radius: i64) -> Grower {
        let mut order: Vec<GridPoint> = Vec::new();
        for a in -radius..=radius {
            for b in -radius..=radius {
                let p = GridPoint::new(a, b);
                if p.hex_norm() <= radius {
                    order.push(p);
                }
            }
        }
        order.sort_by_key(|p| (p.hex_norm(), p.a, p.b));
        let index: HashMap<GridPoint, usize> =
            order.iter().enumerate().map(|(i, p)| (*p, i)).collect();
        let tables = tile_tables();
        let labels: Vec<Label> = std::iter::once(Label::white())
            .chain(tables.iter().map(|(l, _)| *l))
            .collect();
        let mut coverers: HashMap<(GridPoint, u8), Vec<(GridPoint, usize)>> = HashMap::new();
        for (ti, (_, kites)) in tables.iter().enumerate() {
            for k in kites {
                // Tile anchored at -k.v + anchor covers kite ((0,0), d) ...
                // record: a tile at anchor `a` covers kite (v, d) iff
                // (v - a, d) is in its kite set.
                coverers
                    .entry((k.v, k.d))
                    .or_default()
                    .push((k.v.neg(), ti + 1));
            }
        }
        let n = order.len();
        // Unit-offset pair constraints: (l1, l2) allowed at offset xi^k iff
        // (l1 rotated by -k, l2 rotated by -k) is in the reference table.
        let choice_of = |l: i8| -> usize {
            labels.iter().position(|x| x.value() == l).unwrap()
        };
        let mut allowed = [[0u16; 13]; 6];
        for k in 0..6i32 {
            for (i, j) in crate::refdata::ADJACENT_PAIRS_UNIT {
                let li = Label::new(i).rotate(k);
                let lj = Label::new(j).rotate(k);
                allowed[k as usize][choice_of(li.value())] |= 1 << choice_of(lj.value());
            }
        }
        Grower {
            radius,
            order,
            index,
            tables,
            allowed,
            coverers,
            domains: vec![(1u16 << 13) - 1; n],
            assigned: vec![None; n],
            labels,
            counts: HashMap::new(),
            nodes: 0,
        }
    }

    fn kites_of(&self, choice: usize, anchor: GridPoint) -> Vec<Kite> {
        if choice == 0 {
            return Vec::new();
        }
        self.tables[choice - 1]
            .1
            .iter()
            .map(|k| k.translate(anchor))
            .collect()
    }

    fn collides(&self, choice: usize, anchor: GridPoint) -> bool {
        self.kites_of(choice, anchor)
            .iter()
            .any(|k| self.counts.get(k).copied().unwrap_or(0) > 0)
    }

    /// Candidate coverers of a kite: assigned count plus possibilities from
    /// undecided anchors (including hypothetical anchors outside the
    /// window).
    fn kite_support(&self, kite: Kite) -> (u32, Vec<(usize, usize)>, bool) {
        let placed = self.counts.get(&kite).copied().unwrap_or(0);
        let mut open = Vec::new();
        let mut outside = false;
        for (off, _) in NEIGH.iter().map(|&(a, b)| (GridPoint::new(a, b), ())) {
            let anchor = kite.v.add(off);
            if anchor.hex_norm() > self.radius {
                outside = true;
                continue;
            }
            let idx = self.index[&anchor];
            if self.assigned[idx].is_some() {
                continue;
            }
            // Which labels at this anchor cover the kite?
            let rel = kite.v.sub(anchor);
            if let Some(list) = self.coverers.get(&(rel, kite.d)) {
                for &(_, choice) in list {
                    if self.domains[idx] & (1 << choice) != 0 {
                        open.push((idx, choice));
                    }
                }
            }
        }
        (placed, open, outside)
    }

    /// Assign a choice; propagate; return the trail of changes made
    /// (for undo), or None on contradiction.
    fn assign(&mut self, idx: usize, choice: usize) -> Option<Vec<Trail>> {
        let mut trail: Vec<Trail> = Vec::new();
        let mut queue: Vec<(usize, usize)> = vec![(idx, choice)];
        while let Some((i, c)) = queue.pop() {
            if let Some(existing) = self.assigned[i] {
                if existing == c {
                    continue;
                }
                self.undo(&trail);
                return None;
            }
            if self.domains[i] & (1 << c) == 0 || self.collides(c, self.order[i]) {
                self.undo(&trail);
                return None;
            }
            let anchor = self.order[i];
            for k in self.kites_of(c, anchor) {
                *self.counts.entry(k).or_default() += 1;
            }
            self.assigned[i] = Some(c);
            trail.push(Trail::Assigned(i, self.domains[i]));
            self.domains[i] = 1 << c;

            // Prune nearby domains and derive forced coverings.
            let mut failed = false;
            'outer: for da in -2..=2i64 {
                for db in -2..=2i64 {
                    let p = anchor.add(GridPoint::new(da, db));
                    if p.hex_norm() > self.radius {
                        continue;
                    }
                    let j = self.index[&p];
                    if self.assigned[j].is_some() {
                        continue;
                    }
                    let old = self.domains[j];
                    let mut dom = old;
                    for cc in 1..13usize {
                        if dom & (1 << cc) != 0 && self.collides(cc, p) {
                            dom &= !(1 << cc);
                        }
                    }
                    if dom != old {
                        trail.push(Trail::Domain(j, old));
                        self.domains[j] = dom;
                    }
                    if dom == 0 {
                        failed = true;
                        break 'outer;
                    }
                }
            }
            if failed {
                self.undo(&trail);
                return None;
            }
            // Arc consistency of the unit-offset pair tables around the
            // assignment.
            let mut arc: Vec<usize> = vec![i];
            while let Some(j) = arc.pop() {
                let pj = self.order[j];
                let dj = self.domains[j];
                for k in 0..6usize {
                    const XI: [(i64, i64); 6] =
                        [(1, 0), (0, 1), (-1, 1), (-1, 0), (0, -1), (1, -1)];
                    let q = pj.add(GridPoint::new(XI[k].0, XI[k].1));
                    if q.hex_norm() > self.radius {
                        continue;
                    }
                    let jj = self.index[&q];
                    // forward: domain(q) must be reachable from domain(j)
                    let mut reach = 0u16;
                    for c1 in 0..13usize {
                        if dj & (1 << c1) != 0 {
                            reach |= self.allowed[k][c1];
                        }
                    }
                    let old = self.domains[jj];
                    let new = old & reach;
                    if new != old {
                        trail.push(Trail::Domain(jj, old));
                        self.domains[jj] = new;
                        if new == 0 {
                            self.undo(&trail);
                            return None;
                        }
                        if self.assigned[jj].is_none() {
                            arc.push(jj);
                        }
                    }
                    // backward: domain(j) already fixed here; constrain q's
                    // predecessors handled when q processes its own arcs.
                    let mut back = 0u16;
                    let dq = self.domains[jj];
                    for c1 in 0..13usize {
                        if dj == 0 {
                            break;
                        }
                        if dj & (1 << c1) != 0 && self.allowed[k][c1] & dq == 0 {
                            back |= 1 << c1;
                        }
                    }
                    if back != 0 {
                        let oldj = self.domains[j];
                        let newj = oldj & !back;
                        if newj != oldj {
                            trail.push(Trail::Domain(j, oldj));
                            self.domains[j] = newj;
                            if newj == 0 {
                                self.undo(&trail);
                                return None;
                            }
                            if self.assigned[j].is_none() {
                                arc.push(j);
                            }
                        }
                    }
                }
            }
            // Kite completeness around the new tile.
            for (da, db) in NEIGH {
                let v = anchor.add(GridPoint::new(da, db));
                for d in 0..6u8 {
                    let kite = Kite::new(v, d);
                    let (placed, open, outside) = self.kite_support(kite);
                    if placed > 1 {
                        self.undo(&trail);
                        return None;
                    }
                    if placed == 0 && !outside {
                        if open.is_empty() {
                            self.undo(&trail);
                            return None;
                        }
                        if open.len() == 1 {
                            queue.push(open[0]);
                        }
                    }
                }
            }
        }
        Some(trail)
    }

    fn undo(&mut self, trail: &[Trail]) {
        for t in trail.iter().rev() {
            match *t {
                Trail::Assigned(i, old) => {
                    let c = self.assigned[i].take().expect("assigned");
                    for k in self.kites_of(c, self.order[i]) {
                        let e = self.counts.get_mut(&k).unwrap();
                        *e -= 1;
                    }
                    self.domains[i] = old;
                }
                Trail::Domain(i, old) => {
                    self.domains[i] = old;
                }
            }
        }
    }

    fn search(&mut self) -> bool {
        self.nodes += 1;
        if self.nodes > 40_000_000 {
            return false;
        }
        // Most-constrained unassigned point, preferring small hex norm.
        let mut best: Option<(u32, i64, usize)> = None;
        for i in 0..self.order.len() {
            if self.assigned[i].is_none() {
                let size = self.domains[i].count_ones();
                let key = (size, self.order[i].hex_norm(), i);
                if best.map(|(s, h, _)| (size, self.order[i].hex_norm()) < (s, h)).unwrap_or(true) {
                    best = Some(key);
                }
            }
        }
        let Some((_, _, i)) = best else {
            return true; // everything assigned
        };
        let dom = self.domains[i];
        // Try tile labels before white: committing to a tile fails fast,
        // while speculative white spreads contradictions far away.
        for c in [1usize, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 0] {
            if dom & (1 << c) == 0 {
                continue;
            }
            if let Some(trail) = self.assign(i, c) {
                if self.search() {
                    return true;
                }
                self.undo(&trail);
            }
        }
        false
    }
}

/// Grow a seed of labeled grid points into a full labeling of the hex ball
/// of the given radius. Returns the first completion found.
pub fn grow_window(seed: &[(i64, i64, i8)], radius: i64) -> Option<HashMap<GridPoint, Label>> {
    let mut g = Grower::new(radius);
    let labels = g.labels.clone();
    for &(a, b, l) in seed {
        let p = GridPoint::new(a, b);
        if p.hex_norm() > radius {
            continue;
        }
        let idx = g.index[&p];
        let choice = labels
            .iter()
            .position(|x| x.value() == l)
            .expect("seed label");
        if g.assign(idx, choice).is_none() {
            // Report which earlier seed tile collides.
            let kites: std::collections::HashSet<Kite> = if choice > 0 {
                g.kites_of(choice, p).into_iter().collect()
            } else {
                Default::default()
            };
            for (j, q) in g.order.iter().enumerate() {
                if let Some(c2) = g.assigned[j] {
                    if c2 > 0 && g.kites_of(c2, *q).iter().any(|k| kites.contains(k)) {
                        let rel = p.sub(*q);
                        eprintln!(
                            "COLLIDE ({}, {}) = {} against ({}, {}) = {} offset ({}, {})",
                            a, b, l, q.a, q.b, g.labels[c2], rel.a, rel.b
                        );
                    }
                }
            }
            return None;
        }
    }
    if !g.search() {
        eprintln!("search failed after {} nodes", g.nodes);
        return None;
    }
    let mut out = HashMap::new();
    for (i, p) in g.order.iter().enumerate() {
        out.insert(*p, labels[g.assigned[i].expect("complete")]);
    }
    Some(out)
}
