//! Upward planar straight-line diagrams and their face structure.
//!
//! A diagram places every element at a point; each cover is drawn as a
//! straight segment that must go strictly upward, and segments may meet only
//! at shared elements. Faces are recovered from the rotation system induced
//! by the coordinates: traversal keeps the face on the left of each directed
//! edge, so bounded faces come out counterclockwise (positive signed area)
//! and each component's unbounded face clockwise (negative).

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::poset::Poset;

const EPS: f64 = 1e-9;

/// A validated upward planar straight-line drawing of a poset.
#[derive(Debug, Clone)]
pub struct UpwardDiagram {
    poset: Poset,
    positions: Vec<(f64, f64)>,
    outer_face_hint: Option<Vec<String>>,
}

impl UpwardDiagram {
    /// Validates and wraps a drawing; `positions` are indexed like the
    /// poset's elements. An optional hint names the elements expected on the
    /// unbounded face and is cross-checked against the computed outer face.
    pub fn new(
        poset: Poset,
        positions: Vec<(f64, f64)>,
        outer_face_hint: Option<Vec<String>>,
    ) -> Result<UpwardDiagram> {
        if positions.len() != poset.n() {
            return Err(Error::InvalidDiagram(format!(
                "{} positions for {} elements",
                positions.len(),
                poset.n()
            )));
        }
        for (i, &(x, y)) in positions.iter().enumerate() {
            if !x.is_finite() || !y.is_finite() {
                return Err(Error::InvalidDiagram(format!(
                    "element {} has a non-finite coordinate",
                    poset.label(i)
                )));
            }
            for (j, &(xj, yj)) in positions.iter().enumerate().take(i) {
                if (x - xj).abs() <= EPS && (y - yj).abs() <= EPS {
                    return Err(Error::InvalidDiagram(format!(
                        "elements {} and {} share a point",
                        poset.label(j),
                        poset.label(i)
                    )));
                }
            }
        }
        for &(a, b) in poset.covers() {
            if positions[a].1 + EPS >= positions[b].1 {
                return Err(Error::InvalidDiagram(format!(
                    "cover {}<{} is not drawn upward",
                    poset.label(a),
                    poset.label(b)
                )));
            }
        }
        validate_segments(&positions, poset.covers(), |i| poset.label(i).to_owned())?;
        let d = UpwardDiagram {
            poset,
            positions,
            outer_face_hint,
        };
        if d.outer_face_hint.is_some() {
            d.check_outer_hint()?;
        }
        Ok(d)
    }

    /// Builds from a label-keyed position map (interchange format).
    pub fn from_label_positions(
        poset: Poset,
        map: &HashMap<String, (f64, f64)>,
        outer_face_hint: Option<Vec<String>>,
    ) -> Result<UpwardDiagram> {
        let mut positions = Vec::with_capacity(poset.n());
        for l in poset.labels() {
            match map.get(l) {
                Some(&p) => positions.push(p),
                None => {
                    return Err(Error::InvalidDiagram(format!("element {l} has no position")))
                }
            }
        }
        for key in map.keys() {
            if poset.index_of(key).is_none() {
                return Err(Error::UnknownElement(key.clone()));
            }
        }
        UpwardDiagram::new(poset, positions, outer_face_hint)
    }

    pub fn poset(&self) -> &Poset {
        &self.poset
    }

    pub fn positions(&self) -> &[(f64, f64)] {
        &self.positions
    }

    pub fn position(&self, i: usize) -> (f64, f64) {
        self.positions[i]
    }

    pub fn outer_face_hint(&self) -> Option<&[String]> {
        self.outer_face_hint.as_deref()
    }

    /// Face structure of the drawing (covers only).
    pub(crate) fn subdivision(&self) -> Result<PlaneSubdivision> {
        PlaneSubdivision::build(&self.positions, self.poset.covers())
    }

    fn check_outer_hint(&self) -> Result<()> {
        let hint = self.outer_face_hint.as_ref().unwrap();
        let mut expected = Vec::new();
        for l in hint {
            match self.poset.index_of(l) {
                Some(i) => expected.push(i),
                None => return Err(Error::UnknownElement(l.clone())),
            }
        }
        expected.sort_unstable();
        expected.dedup();
        let sub = self.subdivision()?;
        let mut actual: Vec<usize> = (0..self.poset.n())
            .filter(|&v| sub.on_outer_face(v))
            .collect();
        actual.retain(|&v| sub.degree(v) > 0);
        expected.retain(|&v| sub.degree(v) > 0);
        if actual != expected {
            return Err(Error::InvalidDiagram(format!(
                "outer face hint {:?} does not match the drawing's outer boundary {:?}",
                hint,
                actual
                    .iter()
                    .map(|&v| self.poset.label(v))
                    .collect::<Vec<_>>()
            )));
        }
        Ok(())
    }
}

/// Rejects drawings where segments cross, overlap, or run through a vertex.
/// `edges` need not come from a poset, so the planar strategy can re-validate
/// after inserting segments.
pub(crate) fn validate_segments(
    points: &[(f64, f64)],
    edges: &[(usize, usize)],
    label: impl Fn(usize) -> String,
) -> Result<()> {
    for (ei, &(a, b)) in edges.iter().enumerate() {
        for (v, &p) in points.iter().enumerate() {
            if v != a && v != b && point_on_segment(p, points[a], points[b]) {
                return Err(Error::InvalidDiagram(format!(
                    "element {} lies on the segment {}-{}",
                    label(v),
                    label(a),
                    label(b)
                )));
            }
        }
        for &(c, d) in &edges[..ei] {
            if a == c || a == d || b == c || b == d {
                continue; // shared endpoints allowed; overlap is caught above
            }
            if segments_intersect(points[a], points[b], points[c], points[d]) {
                return Err(Error::InvalidDiagram(format!(
                    "segments {}-{} and {}-{} cross",
                    label(a),
                    label(b),
                    label(c),
                    label(d)
                )));
            }
        }
    }
    Ok(())
}

pub(crate) fn cross(o: (f64, f64), a: (f64, f64), b: (f64, f64)) -> f64 {
    (a.0 - o.0) * (b.1 - o.1) - (a.1 - o.1) * (b.0 - o.0)
}

pub(crate) fn point_on_segment(p: (f64, f64), a: (f64, f64), b: (f64, f64)) -> bool {
    if cross(a, b, p).abs() > EPS * (1.0 + dist(a, b)) {
        return false;
    }
    let dot = (p.0 - a.0) * (b.0 - a.0) + (p.1 - a.1) * (b.1 - a.1);
    let len2 = dist2(a, b);
    dot > EPS && dot < len2 - EPS
}

fn dist2(a: (f64, f64), b: (f64, f64)) -> f64 {
    (a.0 - b.0).powi(2) + (a.1 - b.1).powi(2)
}

fn dist(a: (f64, f64), b: (f64, f64)) -> f64 {
    dist2(a, b).sqrt()
}

/// True when open segments ab and cd share a point (endpoints disjoint by
/// the caller's bookkeeping, so any contact is a genuine crossing or overlap).
pub(crate) fn segments_intersect(
    a: (f64, f64),
    b: (f64, f64),
    c: (f64, f64),
    d: (f64, f64),
) -> bool {
    let d1 = cross(c, d, a);
    let d2 = cross(c, d, b);
    let d3 = cross(a, b, c);
    let d4 = cross(a, b, d);
    let s = EPS * (1.0 + dist(a, b) + dist(c, d));
    if ((d1 > s && d2 < -s) || (d1 < -s && d2 > s))
        && ((d3 > s && d4 < -s) || (d3 < -s && d4 > s))
    {
        return true;
    }
    // Collinear/touching contact counts as a crossing for validation purposes.
    point_on_segment(a, c, d)
        || point_on_segment(b, c, d)
        || point_on_segment(c, a, b)
        || point_on_segment(d, a, b)
}

/// One traced face: the closed dart walk, the visited vertices (in walk
/// order, possibly with repeats at cut vertices) and twice its signed area.
#[derive(Debug, Clone)]
pub(crate) struct FaceWalk {
    pub darts: Vec<usize>,
    pub vertices: Vec<usize>,
    pub area2: f64,
}

/// Faces of a straight-line plane drawing, from the coordinate rotation
/// system. Dart `2e` runs along edge `e` forwards, `2e+1` backwards; the
/// traced face lies on the dart's left.
#[derive(Debug, Clone)]
pub(crate) struct PlaneSubdivision {
    pub edges: Vec<(usize, usize)>,
    pub faces: Vec<FaceWalk>,
    pub face_of_dart: Vec<usize>,
    outgoing: Vec<Vec<usize>>, // darts per tail vertex, sorted CCW by angle
    outer_of_component: Vec<usize>,
    component_of_vertex: Vec<usize>,
}

impl PlaneSubdivision {
    pub fn build(points: &[(f64, f64)], edges: &[(usize, usize)]) -> Result<PlaneSubdivision> {
        let n = points.len();
        let m = edges.len();
        let tail = |d: usize| if d.is_multiple_of(2) { edges[d / 2].0 } else { edges[d / 2].1 };
        let head = |d: usize| if d.is_multiple_of(2) { edges[d / 2].1 } else { edges[d / 2].0 };
        let angle = |d: usize| {
            let (tx, ty) = points[tail(d)];
            let (hx, hy) = points[head(d)];
            (hy - ty).atan2(hx - tx)
        };
        let mut outgoing: Vec<Vec<usize>> = vec![Vec::new(); n];
        for d in 0..2 * m {
            outgoing[tail(d)].push(d);
        }
        for darts in &mut outgoing {
            darts.sort_by(|&a, &b| angle(a).partial_cmp(&angle(b)).unwrap());
        }
        // next dart of the face through d: at d's head, take the clockwise
        // predecessor of the reversed dart.
        let next = |d: usize| -> usize {
            let v = head(d);
            let rev = d ^ 1;
            let ring = &outgoing[v];
            let pos = ring.iter().position(|&x| x == rev).unwrap();
            ring[(pos + ring.len() - 1) % ring.len()]
        };

        let mut face_of_dart = vec![usize::MAX; 2 * m];
        let mut faces = Vec::new();
        for start in 0..2 * m {
            if face_of_dart[start] != usize::MAX {
                continue;
            }
            let id = faces.len();
            let mut darts = Vec::new();
            let mut vertices = Vec::new();
            let mut area2 = 0.0;
            let mut d = start;
            loop {
                face_of_dart[d] = id;
                darts.push(d);
                vertices.push(tail(d));
                let (tx, ty) = points[tail(d)];
                let (hx, hy) = points[head(d)];
                area2 += tx * hy - hx * ty;
                d = next(d);
                if d == start {
                    break;
                }
            }
            faces.push(FaceWalk {
                darts,
                vertices,
                area2,
            });
        }

        // Connected components over the edge set.
        let mut component_of_vertex = vec![usize::MAX; n];
        let mut comp_count = 0;
        for v in 0..n {
            if component_of_vertex[v] != usize::MAX {
                continue;
            }
            let c = comp_count;
            comp_count += 1;
            let mut stack = vec![v];
            component_of_vertex[v] = c;
            while let Some(u) = stack.pop() {
                for &d in &outgoing[u] {
                    let w = head(d);
                    if component_of_vertex[w] == usize::MAX {
                        component_of_vertex[w] = c;
                        stack.push(w);
                    }
                }
            }
        }

        // Per component: Euler check, then the outer face. Components with a
        // cycle have exactly one clockwise (negative-area) face; tree
        // components have a single zero-area face which is their outer face.
        let mut outer_of_component = vec![usize::MAX; comp_count];
        let mut verts_in = vec![0usize; comp_count];
        let mut edges_in = vec![0usize; comp_count];
        let mut faces_in = vec![0usize; comp_count];
        for v in 0..n {
            verts_in[component_of_vertex[v]] += 1;
        }
        for &(a, _) in edges {
            edges_in[component_of_vertex[a]] += 1;
        }
        for (fi, f) in faces.iter().enumerate() {
            let c = component_of_vertex[f.vertices[0]];
            faces_in[c] += 1;
            let cur = outer_of_component[c];
            if cur == usize::MAX || f.area2 < faces[cur].area2 {
                outer_of_component[c] = fi;
            }
        }
        for (fi, f) in faces.iter().enumerate() {
            let c = component_of_vertex[f.vertices[0]];
            if f.area2 < 0.0 && outer_of_component[c] != fi {
                return Err(Error::InvalidDiagram(
                    "drawing is not plane: two clockwise faces in one component".into(),
                ));
            }
        }
        for c in 0..comp_count {
            if edges_in[c] == 0 {
                continue; // isolated vertex: no faces to check
            }
            if verts_in[c] + faces_in[c] != edges_in[c] + 2 {
                return Err(Error::InvalidDiagram(format!(
                    "drawing is not plane: component has {} vertices, {} edges, {} faces",
                    verts_in[c], edges_in[c], faces_in[c]
                )));
            }
        }

        let sub = PlaneSubdivision {
            edges: edges.to_vec(),
            faces,
            face_of_dart,
            outgoing,
            outer_of_component,
            component_of_vertex,
        };
        sub.reject_nested_components(points)?;
        Ok(sub)
    }

    pub fn degree(&self, v: usize) -> usize {
        self.outgoing[v].len()
    }

    /// Isolated vertices count as exposed to the unbounded region.
    pub fn on_outer_face(&self, v: usize) -> bool {
        let c = self.component_of_vertex[v];
        if self.outer_of_component[c] == usize::MAX {
            return true;
        }
        self.faces[self.outer_of_component[c]].vertices.contains(&v)
    }

    /// The face seen from vertex `v` looking in direction `dir` (radians):
    /// the face of the angular gap between consecutive outgoing darts that
    /// contains the direction. `v` must have at least one dart.
    pub fn face_at_direction(&self, points: &[(f64, f64)], v: usize, dir: f64) -> usize {
        let ring = &self.outgoing[v];
        assert!(!ring.is_empty(), "vertex has no incident segment");
        let angle = |d: usize| {
            let (tx, ty) = points[v];
            let h = self.dart_head(d);
            let (hx, hy) = points[h];
            (hy - ty).atan2(hx - tx)
        };
        // Largest dart angle ≤ dir, wrapping to the overall largest.
        let mut best: Option<usize> = None;
        for &d in ring {
            if angle(d) <= dir && best.is_none_or(|b| angle(b) < angle(d)) {
                best = Some(d);
            }
        }
        let d = best.unwrap_or_else(|| {
            *ring
                .iter()
                .max_by(|&&a, &&b| angle(a).partial_cmp(&angle(b)).unwrap())
                .unwrap()
        });
        self.face_of_dart[d]
    }

    pub fn dart_head(&self, d: usize) -> usize {
        if d.is_multiple_of(2) {
            self.edges[d / 2].1
        } else {
            self.edges[d / 2].0
        }
    }

    /// Occurrence-wise strict local minima (or maxima) of a face boundary.
    pub fn boundary_extremes(
        &self,
        points: &[(f64, f64)],
        face: usize,
        minima: bool,
    ) -> Vec<usize> {
        let walk = &self.faces[face].vertices;
        let k = walk.len();
        let mut out = Vec::new();
        for i in 0..k {
            let prev = points[walk[(i + k - 1) % k]].1;
            let cur = points[walk[i]].1;
            let next = points[walk[(i + 1) % k]].1;
            let hit = if minima {
                cur < prev && cur < next
            } else {
                cur > prev && cur > next
            };
            if hit && !out.contains(&walk[i]) {
                out.push(walk[i]);
            }
        }
        out
    }

    fn reject_nested_components(&self, points: &[(f64, f64)]) -> Result<()> {
        let comps = self.outer_of_component.len();
        if comps <= 1 {
            return Ok(());
        }
        for c in 0..comps {
            let outer = self.outer_of_component[c];
            if outer == usize::MAX {
                continue;
            }
            let poly: Vec<(f64, f64)> = self.faces[outer]
                .vertices
                .iter()
                .map(|&v| points[v])
                .collect();
            for (v, &p) in points.iter().enumerate() {
                if self.component_of_vertex[v] != c && point_in_polygon(p, &poly) {
                    return Err(Error::InvalidDiagram(
                        "components of the drawing are nested".into(),
                    ));
                }
            }
        }
        Ok(())
    }
}

fn point_in_polygon(p: (f64, f64), poly: &[(f64, f64)]) -> bool {
    let mut inside = false;
    let k = poly.len();
    for i in 0..k {
        let (x1, y1) = poly[i];
        let (x2, y2) = poly[(i + 1) % k];
        if (y1 > p.1) != (y2 > p.1) {
            let xi = x1 + (p.1 - y1) / (y2 - y1) * (x2 - x1);
            if p.0 < xi {
                inside = !inside;
            }
        }
    }
    inside
}
