//! Newton polygon of a weight histogram: convex hull and point classification.

use crate::histogram::WeightHistogram;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PointClass {
    /// Strictly inside the hull.
    Internal,
    /// On the hull boundary — a vertex or a lattice point on a hull edge.
    Boundary,
}

/// Occupied weight points with their convex hull and classification.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NewtonPolygon {
    /// All occupied weights, sorted.
    pub points: Vec<(i64, i64)>,
    /// Hull vertices in counterclockwise order, starting from the
    /// lexicographically smallest. Degenerate hulls keep 1 (single point) or
    /// 2 (collinear) entries.
    pub hull: Vec<(i64, i64)>,
    pub internal: Vec<(i64, i64)>,
    pub boundary: Vec<(i64, i64)>,
}

fn cross(o: (i64, i64), a: (i64, i64), b: (i64, i64)) -> i64 {
    (a.0 - o.0) * (b.1 - o.1) - (a.1 - o.1) * (b.0 - o.0)
}

/// Andrew's monotone chain on sorted points; returns counterclockwise
/// vertices without collinear interior points.
fn convex_hull(points: &[(i64, i64)]) -> Vec<(i64, i64)> {
    if points.len() <= 1 {
        return points.to_vec();
    }
    let mut hull: Vec<(i64, i64)> = Vec::with_capacity(2 * points.len());
    for &p in points.iter().chain(points.iter().rev().skip(1)) {
        while hull.len() >= 2 && cross(hull[hull.len() - 2], hull[hull.len() - 1], p) <= 0 {
            hull.pop();
        }
        hull.push(p);
    }
    hull.pop(); // last point repeats the first
    if hull.len() < 2 {
        // Collinear input collapses the chain; keep the two extremes.
        return vec![points[0], *points.last().unwrap()];
    }
    hull
}

fn on_segment(p: (i64, i64), a: (i64, i64), b: (i64, i64)) -> bool {
    cross(a, b, p) == 0
        && p.0 >= a.0.min(b.0)
        && p.0 <= a.0.max(b.0)
        && p.1 >= a.1.min(b.1)
        && p.1 <= a.1.max(b.1)
}

/// Builds the Newton polygon of the occupied weights. Panics on an empty
/// histogram (enumeration always yields at least one matching or the caller
/// has no polygon to ask about).
pub fn newton_polygon(h: &WeightHistogram) -> NewtonPolygon {
    assert!(!h.is_empty(), "Newton polygon of an empty histogram");
    let points: Vec<(i64, i64)> = h.occupied_weights().collect();
    let hull = convex_hull(&points);
    let mut internal = Vec::new();
    let mut boundary = Vec::new();
    for &p in &points {
        let on_hull = if hull.len() == 1 {
            p == hull[0]
        } else {
            (0..hull.len()).any(|i| on_segment(p, hull[i], hull[(i + 1) % hull.len()]))
        };
        if on_hull {
            boundary.push(p);
        } else {
            internal.push(p);
        }
    }
    NewtonPolygon {
        points,
        hull,
        internal,
        boundary,
    }
}

impl NewtonPolygon {
    pub fn classify(&self, p: (i64, i64)) -> Option<PointClass> {
        if self.boundary.contains(&p) {
            Some(PointClass::Boundary)
        } else if self.internal.contains(&p) {
            Some(PointClass::Internal)
        } else {
            None
        }
    }

    pub fn is_vertex(&self, p: (i64, i64)) -> bool {
        self.hull.contains(&p)
    }
}
