//! Small exact-geometry helpers on convex polygons with ring coordinates.

use crate::exactmath::{orient, Quartic, Sign};

/// Result of a closed point-in-convex-polygon test.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Location {
    Inside,
    OnBoundary,
    Outside,
}

/// Locate a point against a convex polygon given in counterclockwise order.
pub fn locate_convex(poly: &[Quartic], z: &Quartic) -> Location {
    let n = poly.len();
    let mut on_edge = false;
    for i in 0..n {
        match orient(&poly[i], &poly[(i + 1) % n], z) {
            Sign::Negative => return Location::Outside,
            Sign::Zero => {
                // On the supporting line; confirm the segment range via the
                // other edges (convexity makes the remaining tests decide).
                on_edge = true;
            }
            Sign::Positive => {}
        }
    }
    if on_edge {
        Location::OnBoundary
    } else {
        Location::Inside
    }
}

/// Do two convex counterclockwise polygons intersect (closed sets)?
pub fn convex_intersect(a: &[Quartic], b: &[Quartic]) -> bool {
    !separated_by_edges(a, b) && !separated_by_edges(b, a)
}

fn separated_by_edges(a: &[Quartic], b: &[Quartic]) -> bool {
    let n = a.len();
    for i in 0..n {
        let p = &a[i];
        let q = &a[(i + 1) % n];
        if b.iter().all(|w| orient(p, q, w) == Sign::Negative) {
            return true;
        }
    }
    false
}

/// Is convex polygon `inner` contained in convex polygon `outer` (both
/// counterclockwise, closed containment)?
pub fn convex_contains_convex(outer: &[Quartic], inner: &[Quartic]) -> bool {
    inner
        .iter()
        .all(|w| locate_convex(outer, w) != Location::Outside)
}

/// Exact point-on-segment test.
pub fn on_segment(p: &Quartic, q: &Quartic, z: &Quartic) -> bool {
    if orient(p, q, z) != Sign::Zero {
        return false;
    }
    // Collinear: check the parameter range using the dominant axis.
    let xp = p.re2();
    let xq = q.re2();
    if xp != xq {
        let xz = z.re2();
        let lo = if xp.cmp_ref(&xq) == std::cmp::Ordering::Less { (&xp, &xq) } else { (&xq, &xp) };
        lo.0.cmp_ref(&xz) != std::cmp::Ordering::Greater
            && xz.cmp_ref(lo.1) != std::cmp::Ordering::Greater
    } else {
        let yp = p.im_coeff();
        let yq = q.im_coeff();
        let yz = z.im_coeff();
        let lo = if yp.cmp_ref(&yq) == std::cmp::Ordering::Less { (&yp, &yq) } else { (&yq, &yp) };
        lo.0.cmp_ref(&yz) != std::cmp::Ordering::Greater
            && yz.cmp_ref(lo.1) != std::cmp::Ordering::Greater
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn tri() -> Vec<Quartic> {
        vec![
            Quartic::zero(),
            Quartic::grid(2, 0),
            Quartic::grid(0, 2),
        ]
    }

    #[test]
    fn locate_cases() {
        let t = tri();
        assert_eq!(locate_convex(&t, &Quartic::grid(1, 0)), Location::OnBoundary);
        assert_eq!(locate_convex(&t, &Quartic::grid(3, 0)), Location::Outside);
        let half = num_rational::BigRational::new(1.into(), 2.into());
        let zero = num_rational::BigRational::from_integer(0.into());
        let inner = Quartic::from_coeffs(half.clone(), zero.clone(), half, zero);
        assert_eq!(locate_convex(&t, &inner), Location::Inside);
    }

    #[test]
    fn intersection_and_containment() {
        let t = tri();
        let small = vec![Quartic::zero(), Quartic::grid(1, 0), Quartic::grid(0, 1)];
        assert!(convex_intersect(&t, &small));
        assert!(convex_contains_convex(&t, &small));
        assert!(!convex_contains_convex(&small, &t));
        let far = vec![Quartic::grid(5, 0), Quartic::grid(6, 0), Quartic::grid(5, 1)];
        assert!(!convex_intersect(&t, &far));
    }

    #[test]
    fn segment_membership() {
        let p = Quartic::zero();
        let q = Quartic::grid(2, 2);
        assert!(on_segment(&p, &q, &Quartic::grid(1, 1)));
        assert!(!on_segment(&p, &q, &Quartic::grid(1, 0)));
        assert!(!on_segment(&p, &q, &Quartic::grid(3, 3)));
    }
}
