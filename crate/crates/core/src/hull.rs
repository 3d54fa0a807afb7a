//! Convex hulls of small point sets in the plane and in space.
//!
//! Hulls back polytope membership tests, exact simplex decompositions and
//! the edge set used for slicing. Inputs are expected to be full-dimensional;
//! callers validate rank first.

use std::collections::HashMap;

pub(crate) type P2 = [f64; 2];
pub(crate) type P3 = [f64; 3];

#[inline]
fn cross2(o: P2, a: P2, b: P2) -> f64 {
    (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])
}

/// Andrew's monotone chain. Returns indices of the hull in counter-clockwise
/// order, without collinear points. Fewer than three indices means the
/// points are degenerate.
pub(crate) fn hull_2d(points: &[P2]) -> Vec<usize> {
    let mut idx: Vec<usize> = (0..points.len()).collect();
    idx.sort_by(|&i, &j| {
        points[i][0]
            .total_cmp(&points[j][0])
            .then(points[i][1].total_cmp(&points[j][1]))
    });
    idx.dedup_by(|a, b| points[*a] == points[*b]);
    if idx.len() < 3 {
        return idx;
    }
    let mut lower: Vec<usize> = Vec::new();
    for &i in &idx {
        while lower.len() >= 2
            && cross2(points[lower[lower.len() - 2]], points[lower[lower.len() - 1]], points[i]) <= 0.0
        {
            lower.pop();
        }
        lower.push(i);
    }
    let mut upper: Vec<usize> = Vec::new();
    for &i in idx.iter().rev() {
        while upper.len() >= 2
            && cross2(points[upper[upper.len() - 2]], points[upper[upper.len() - 1]], points[i]) <= 0.0
        {
            upper.pop();
        }
        upper.push(i);
    }
    lower.pop();
    upper.pop();
    lower.extend(upper);
    lower
}

/// Signed area and centroid of a simple polygon given in order.
pub(crate) fn polygon_area_centroid(points: &[P2]) -> (f64, P2) {
    let n = points.len();
    if n < 3 {
        return (0.0, [0.0, 0.0]);
    }
    // Shift to the first vertex to limit cancellation.
    let o = points[0];
    let mut area2 = 0.0;
    let mut cx = 0.0;
    let mut cy = 0.0;
    for i in 1..n - 1 {
        let a = [points[i][0] - o[0], points[i][1] - o[1]];
        let b = [points[i + 1][0] - o[0], points[i + 1][1] - o[1]];
        let cr = a[0] * b[1] - a[1] * b[0];
        area2 += cr;
        cx += cr * (a[0] + b[0]);
        cy += cr * (a[1] + b[1]);
    }
    if area2 == 0.0 {
        return (0.0, o);
    }
    let area = 0.5 * area2;
    (area, [o[0] + cx / (3.0 * area2), o[1] + cy / (3.0 * area2)])
}

/// Area of the convex hull of a planar point set.
pub(crate) fn convex_area_2d(points: &[P2]) -> f64 {
    let h = hull_2d(points);
    if h.len() < 3 {
        return 0.0;
    }
    let poly: Vec<P2> = h.iter().map(|&i| points[i]).collect();
    polygon_area_centroid(&poly).0.abs()
}

#[inline]
fn sub3(a: P3, b: P3) -> P3 {
    [a[0] - b[0], a[1] - b[1], a[2] - b[2]]
}

#[inline]
pub(crate) fn cross3(a: P3, b: P3) -> P3 {
    [
        a[1] * b[2] - a[2] * b[1],
        a[2] * b[0] - a[0] * b[2],
        a[0] * b[1] - a[1] * b[0],
    ]
}

#[inline]
pub(crate) fn dot3(a: P3, b: P3) -> f64 {
    a[0] * b[0] + a[1] * b[1] + a[2] * b[2]
}

#[inline]
fn norm3(a: P3) -> f64 {
    dot3(a, a).sqrt()
}

/// Triangulated boundary of a 3-D convex hull with outward unit normals.
#[derive(Debug, Clone)]
pub(crate) struct Hull3 {
    pub faces: Vec<[usize; 3]>,
    /// `(normal, offset)` with `normal · x ≤ offset` inside.
    pub planes: Vec<(P3, f64)>,
    pub edges: Vec<(usize, usize)>,
    pub vertices: Vec<usize>,
}

#[derive(Clone)]
struct Face {
    v: [usize; 3],
    normal: P3,
    offset: f64,
    alive: bool,
}

fn make_face(points: &[P3], v: [usize; 3], interior: P3) -> Face {
    let mut v = v;
    let mut n = cross3(sub3(points[v[1]], points[v[0]]), sub3(points[v[2]], points[v[0]]));
    if dot3(n, sub3(interior, points[v[0]])) > 0.0 {
        v.swap(1, 2);
        n = [-n[0], -n[1], -n[2]];
    }
    let len = norm3(n);
    let normal = if len > 0.0 {
        [n[0] / len, n[1] / len, n[2] / len]
    } else {
        n
    };
    Face {
        v,
        normal,
        offset: dot3(normal, points[v[0]]),
        alive: true,
    }
}

/// Incremental convex hull. Returns `None` for degenerate (flat) inputs.
pub(crate) fn hull_3d(points: &[P3]) -> Option<Hull3> {
    let n = points.len();
    if n < 4 {
        return None;
    }
    let scale = points
        .iter()
        .flat_map(|p| p.iter())
        .fold(0.0f64, |m, &x| m.max(x.abs()))
        .max(1e-300);
    let eps = 1e-12 * scale;

    // Initial tetrahedron from extreme points.
    let i0 = 0;
    let i1 = (0..n).max_by(|&a, &b| {
        norm3(sub3(points[a], points[i0])).total_cmp(&norm3(sub3(points[b], points[i0])))
    })?;
    let d01 = sub3(points[i1], points[i0]);
    if norm3(d01) <= eps {
        return None;
    }
    let line_dist = |k: usize| norm3(cross3(d01, sub3(points[k], points[i0]))) / norm3(d01);
    let i2 = (0..n).max_by(|&a, &b| line_dist(a).total_cmp(&line_dist(b)))?;
    if line_dist(i2) <= eps {
        return None;
    }
    let pn = cross3(d01, sub3(points[i2], points[i0]));
    let pn_len = norm3(pn);
    let plane_dist = |k: usize| (dot3(pn, sub3(points[k], points[i0])) / pn_len).abs();
    let i3 = (0..n).max_by(|&a, &b| plane_dist(a).total_cmp(&plane_dist(b)))?;
    if plane_dist(i3) <= eps {
        return None;
    }

    let interior = {
        let mut c = [0.0; 3];
        for &k in &[i0, i1, i2, i3] {
            for d in 0..3 {
                c[d] += 0.25 * points[k][d];
            }
        }
        c
    };
    let mut faces = vec![
        make_face(points, [i0, i1, i2], interior),
        make_face(points, [i0, i1, i3], interior),
        make_face(points, [i0, i2, i3], interior),
        make_face(points, [i1, i2, i3], interior),
    ];

    for p in 0..n {
        if p == i0 || p == i1 || p == i2 || p == i3 {
            continue;
        }
        let visible: Vec<usize> = faces
            .iter()
            .enumerate()
            .filter(|(_, f)| f.alive && dot3(f.normal, points[p]) - f.offset > eps)
            .map(|(k, _)| k)
            .collect();
        if visible.is_empty() {
            continue;
        }
        // Directed edges of every live face, keyed to the face that owns them.
        let mut owner: HashMap<(usize, usize), usize> = HashMap::new();
        for (k, f) in faces.iter().enumerate().filter(|(_, f)| f.alive) {
            for e in 0..3 {
                owner.insert((f.v[e], f.v[(e + 1) % 3]), k);
            }
        }
        let is_visible = |k: usize| visible.contains(&k);
        let mut horizon = Vec::new();
        for &k in &visible {
            let v = faces[k].v;
            for e in 0..3 {
                let (a, b) = (v[e], v[(e + 1) % 3]);
                match owner.get(&(b, a)) {
                    Some(&other) if !is_visible(other) => horizon.push((a, b)),
                    _ => {}
                }
            }
        }
        for &k in &visible {
            faces[k].alive = false;
        }
        for (a, b) in horizon {
            faces.push(make_face(points, [a, b, p], interior));
        }
    }

    let live: Vec<Face> = faces.into_iter().filter(|f| f.alive).collect();
    let mut edges: Vec<(usize, usize)> = live
        .iter()
        .flat_map(|f| (0..3).map(move |e| {
            let (a, b) = (f.v[e], f.v[(e + 1) % 3]);
            (a.min(b), a.max(b))
        }))
        .collect();
    edges.sort_unstable();
    edges.dedup();
    let mut vertices: Vec<usize> = live.iter().flat_map(|f| f.v).collect();
    vertices.sort_unstable();
    vertices.dedup();
    Some(Hull3 {
        planes: live.iter().map(|f| (f.normal, f.offset)).collect(),
        faces: live.iter().map(|f| f.v).collect(),
        edges,
        vertices,
    })
}

/// Volume and centroid of a closed, outward-oriented triangulated surface.
pub(crate) fn polyhedron_volume_centroid(points: &[P3], hull: &Hull3) -> (f64, P3) {
    let mut o = [0.0; 3];
    for &k in &hull.vertices {
        for d in 0..3 {
            o[d] += points[k][d];
        }
    }
    let m = hull.vertices.len() as f64;
    o = [o[0] / m, o[1] / m, o[2] / m];

    let mut vol = 0.0;
    let mut c = [0.0; 3];
    for f in &hull.faces {
        let a = sub3(points[f[0]], o);
        let b = sub3(points[f[1]], o);
        let e = sub3(points[f[2]], o);
        let v = dot3(a, cross3(b, e)) / 6.0;
        vol += v;
        for d in 0..3 {
            c[d] += v * (a[d] + b[d] + e[d]) / 4.0;
        }
    }
    (vol, [o[0] + c[0] / vol, o[1] + c[1] / vol, o[2] + c[2] / vol])
}
