//! Polyline curve sets in the plane: Hausdorff distance, glued-component
//! counting, and the polyline graph used to pick cycle-breaking points.

use std::collections::HashMap;

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Polyline approximation of a planar algebraic curve.
#[derive(Debug, Clone, Default, Serialize, Deserialize)]
pub struct PlanarCurveSet {
    /// Each segment is an ordered list of vertices.
    pub segments: Vec<Vec<[f64; 2]>>,
    /// Grid cell size used when the set was extracted.
    pub resolution: f64,
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GeometryError {
    #[error("Hausdorff distance requires nonempty vertex sets")]
    EmptyInput,
}

impl PlanarCurveSet {
    pub fn is_empty(&self) -> bool {
        self.segments.iter().all(|s| s.is_empty())
    }

    pub fn vertices(&self) -> impl Iterator<Item = [f64; 2]> + '_ {
        self.segments.iter().flatten().copied()
    }

    pub fn vertex_count(&self) -> usize {
        self.segments.iter().map(|s| s.len()).sum()
    }

    /// Keep only the portion inside the closed disk of radius `r`.
    /// Segments crossing the circle are cut at the crossing point.
    pub fn clip_to_disk(&self, r: f64) -> PlanarCurveSet {
        let inside = |p: &[f64; 2]| p[0] * p[0] + p[1] * p[1] <= r * r;
        let mut segments = Vec::new();
        for poly in &self.segments {
            let mut current: Vec<[f64; 2]> = Vec::new();
            for w in poly.windows(2) {
                let (a, b) = (w[0], w[1]);
                match (inside(&a), inside(&b)) {
                    (true, true) => {
                        if current.is_empty() {
                            current.push(a);
                        }
                        current.push(b);
                    }
                    (true, false) => {
                        if current.is_empty() {
                            current.push(a);
                        }
                        if let Some(c) = circle_cut(a, b, r) {
                            current.push(c);
                        }
                        segments.push(std::mem::take(&mut current));
                    }
                    (false, true) => {
                        if let Some(c) = circle_cut(b, a, r) {
                            current.push(c);
                        }
                        current.push(b);
                    }
                    (false, false) => {}
                }
            }
            if current.len() >= 2 {
                segments.push(current);
            } else if poly.len() == 1 && inside(&poly[0]) {
                segments.push(poly.clone());
            }
        }
        PlanarCurveSet {
            segments,
            resolution: self.resolution,
        }
    }

    /// Longest segment by arc length together with its midpoint and the unit
    /// tangent there; used to anchor Poincaré sections.
    pub fn longest_segment_midpoint(&self) -> Option<([f64; 2], [f64; 2])> {
        let mut best: Option<(f64, usize)> = None;
        for (i, seg) in self.segments.iter().enumerate() {
            let len = arc_length(seg);
            if best.map_or(true, |(l, _)| len > l) {
                best = Some((len, i));
            }
        }
        let (len, idx) = best?;
        let seg = &self.segments[idx];
        if seg.len() < 2 || len == 0.0 {
            return None;
        }
        let mut target = len / 2.0;
        for w in seg.windows(2) {
            let d = dist(w[0], w[1]);
            if d >= target && d > 0.0 {
                let t = target / d;
                let mid = [
                    w[0][0] + t * (w[1][0] - w[0][0]),
                    w[0][1] + t * (w[1][1] - w[0][1]),
                ];
                let tangent = [(w[1][0] - w[0][0]) / d, (w[1][1] - w[0][1]) / d];
                return Some((mid, tangent));
            }
            target -= d;
        }
        let n = seg.len();
        let d = dist(seg[n - 2], seg[n - 1]).max(1e-300);
        Some((
            seg[n - 1],
            [
                (seg[n - 1][0] - seg[n - 2][0]) / d,
                (seg[n - 1][1] - seg[n - 2][1]) / d,
            ],
        ))
    }
}

fn arc_length(seg: &[[f64; 2]]) -> f64 {
    seg.windows(2).map(|w| dist(w[0], w[1])).sum()
}

pub fn dist(a: [f64; 2], b: [f64; 2]) -> f64 {
    ((a[0] - b[0]).powi(2) + (a[1] - b[1]).powi(2)).sqrt()
}

/// Point where the segment from inside point `a` to outside point `b`
/// crosses the circle of radius `r`.
fn circle_cut(a: [f64; 2], b: [f64; 2], r: f64) -> Option<[f64; 2]> {
    let d = [b[0] - a[0], b[1] - a[1]];
    let qa = d[0] * d[0] + d[1] * d[1];
    let qb = 2.0 * (a[0] * d[0] + a[1] * d[1]);
    let qc = a[0] * a[0] + a[1] * a[1] - r * r;
    let disc = qb * qb - 4.0 * qa * qc;
    if disc < 0.0 || qa == 0.0 {
        return None;
    }
    let t = (-qb + disc.sqrt()) / (2.0 * qa);
    if !(0.0..=1.0).contains(&t) {
        return None;
    }
    Some([a[0] + t * d[0], a[1] + t * d[1]])
}

/// Symmetric Hausdorff distance between the vertex sets of two curve sets.
pub fn hausdorff_distance(a: &PlanarCurveSet, b: &PlanarCurveSet) -> Result<f64, GeometryError> {
    let va: Vec<[f64; 2]> = a.vertices().collect();
    let vb: Vec<[f64; 2]> = b.vertices().collect();
    hausdorff_points(&va, &vb)
}

pub fn hausdorff_points(va: &[[f64; 2]], vb: &[[f64; 2]]) -> Result<f64, GeometryError> {
    if va.is_empty() || vb.is_empty() {
        return Err(GeometryError::EmptyInput);
    }
    Ok(directed_hausdorff(va, vb).max(directed_hausdorff(vb, va)))
}

/// max over `from` of the distance to the nearest point of `to`, computed
/// with a uniform-grid index; the ring search never stops while a closer
/// point could still exist, so the result equals brute force.
fn directed_hausdorff(from: &[[f64; 2]], to: &[[f64; 2]]) -> f64 {
    let index = GridIndex::build(to);
    from.iter()
        .map(|p| index.nearest_distance(*p))
        .fold(0.0, f64::max)
}

/// Brute-force reference used by tests.
pub fn hausdorff_points_brute(va: &[[f64; 2]], vb: &[[f64; 2]]) -> Result<f64, GeometryError> {
    if va.is_empty() || vb.is_empty() {
        return Err(GeometryError::EmptyInput);
    }
    let dir = |xs: &[[f64; 2]], ys: &[[f64; 2]]| {
        xs.iter()
            .map(|p| {
                ys.iter()
                    .map(|q| dist(*p, *q))
                    .fold(f64::INFINITY, f64::min)
            })
            .fold(0.0, f64::max)
    };
    Ok(dir(va, vb).max(dir(vb, va)))
}

struct GridIndex {
    cell: f64,
    origin: [f64; 2],
    dims: [i64; 2],
    buckets: HashMap<(i64, i64), Vec<[f64; 2]>>,
}

impl GridIndex {
    fn build(points: &[[f64; 2]]) -> Self {
        let (mut lo, mut hi) = ([f64::INFINITY; 2], [f64::NEG_INFINITY; 2]);
        for p in points {
            for k in 0..2 {
                lo[k] = lo[k].min(p[k]);
                hi[k] = hi[k].max(p[k]);
            }
        }
        let span = ((hi[0] - lo[0]).max(hi[1] - lo[1])).max(1e-12);
        // aim for a few points per bucket
        let target = (points.len() as f64).sqrt().max(1.0);
        let cell = (span / target).max(1e-12);
        let dims = [
            ((hi[0] - lo[0]) / cell).floor() as i64 + 1,
            ((hi[1] - lo[1]) / cell).floor() as i64 + 1,
        ];
        let mut buckets: HashMap<(i64, i64), Vec<[f64; 2]>> = HashMap::new();
        for p in points {
            let key = (
                ((p[0] - lo[0]) / cell).floor() as i64,
                ((p[1] - lo[1]) / cell).floor() as i64,
            );
            buckets.entry(key).or_default().push(*p);
        }
        GridIndex {
            cell,
            origin: lo,
            dims,
            buckets,
        }
    }

    fn nearest_distance(&self, p: [f64; 2]) -> f64 {
        let ci = ((p[0] - self.origin[0]) / self.cell).floor() as i64;
        let cj = ((p[1] - self.origin[1]) / self.cell).floor() as i64;
        let mut best = f64::INFINITY;
        let max_ring = self.dims[0].max(self.dims[1]) + 2;
        let mut ring = 0i64;
        loop {
            if best.is_finite() && (ring - 1) as f64 * self.cell > best {
                return best;
            }
            if ring > max_ring + 2 && best.is_finite() {
                return best;
            }
            for i in ci - ring..=ci + ring {
                for j in cj - ring..=cj + ring {
                    if (i - ci).abs().max((j - cj).abs()) != ring {
                        continue;
                    }
                    if let Some(bucket) = self.buckets.get(&(i, j)) {
                        for q in bucket {
                            best = best.min(dist(p, *q));
                        }
                    }
                }
            }
            ring += 1;
        }
    }
}

/// Union-find component count over all vertices, joining vertices closer
/// than `glue_tol` and consecutive vertices of each polyline.
pub fn component_count(curves: &PlanarCurveSet, glue_tol: f64) -> usize {
    let mut points: Vec<[f64; 2]> = Vec::new();
    let mut chains: Vec<(usize, usize)> = Vec::new();
    for seg in &curves.segments {
        let start = points.len();
        points.extend_from_slice(seg);
        for k in start..points.len().saturating_sub(1) {
            chains.push((k, k + 1));
        }
    }
    if points.is_empty() {
        return 0;
    }
    let mut uf = UnionFind::new(points.len());
    for &(a, b) in &chains {
        uf.union(a, b);
    }
    let cell = glue_tol.max(1e-12);
    let mut buckets: HashMap<(i64, i64), Vec<usize>> = HashMap::new();
    for (idx, p) in points.iter().enumerate() {
        let key = ((p[0] / cell).floor() as i64, (p[1] / cell).floor() as i64);
        buckets.entry(key).or_default().push(idx);
    }
    for (idx, p) in points.iter().enumerate() {
        let ci = (p[0] / cell).floor() as i64;
        let cj = (p[1] / cell).floor() as i64;
        for i in ci - 1..=ci + 1 {
            for j in cj - 1..=cj + 1 {
                if let Some(bucket) = buckets.get(&(i, j)) {
                    for &other in bucket {
                        if other > idx && dist(*p, points[other]) <= glue_tol {
                            uf.union(idx, other);
                        }
                    }
                }
            }
        }
    }
    let mut roots: Vec<usize> = (0..points.len()).map(|i| uf.find(i)).collect();
    roots.sort_unstable();
    roots.dedup();
    roots.len()
}

struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n).collect(),
        }
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.parent[ra.max(rb)] = ra.min(rb);
        }
    }
}

/// Structure of the curve set seen as a graph: polylines are edges, glued
/// endpoints are nodes.
#[derive(Debug)]
pub struct CurveGraph {
    pub nodes: usize,
    pub edges: usize,
    pub components: usize,
    /// Arc-length midpoints of one non-tree polyline per independent cycle.
    pub cycle_breakers: Vec<[f64; 2]>,
}

/// Identify independent cycles of the polyline graph and return a midpoint
/// on each, to be used as pinch locations when shaping a surface family.
pub fn analyze_cycles(curves: &PlanarCurveSet, glue_tol: f64) -> CurveGraph {
    let segs: Vec<&Vec<[f64; 2]>> = curves.segments.iter().filter(|s| s.len() >= 2).collect();
    let mut endpoints: Vec<[f64; 2]> = Vec::new();
    for seg in &segs {
        endpoints.push(seg[0]);
        endpoints.push(*seg.last().unwrap());
    }
    let n = endpoints.len();
    let mut uf = UnionFind::new(n);
    for i in 0..n {
        for j in i + 1..n {
            if dist(endpoints[i], endpoints[j]) <= glue_tol {
                uf.union(i, j);
            }
        }
    }
    let node_of: Vec<usize> = (0..n).map(|i| uf.find(i)).collect();
    let mut node_ids: Vec<usize> = node_of.clone();
    node_ids.sort_unstable();
    node_ids.dedup();
    let nodes = node_ids.len();
    let node_index = |raw: usize| node_ids.binary_search(&raw).unwrap();

    // spanning forest: an edge joining two already-connected nodes closes a
    // cycle
    let mut forest = UnionFind::new(nodes);
    let mut cycle_breakers = Vec::new();
    for (k, seg) in segs.iter().enumerate() {
        let a = node_index(node_of[2 * k]);
        let b = node_index(node_of[2 * k + 1]);
        if forest.find(a) == forest.find(b) {
            if let Some(mid) = polyline_midpoint(seg) {
                cycle_breakers.push(mid);
            }
        } else {
            forest.union(a, b);
        }
    }
    let mut roots: Vec<usize> = (0..nodes).map(|i| forest.find(i)).collect();
    roots.sort_unstable();
    roots.dedup();
    CurveGraph {
        nodes,
        edges: segs.len(),
        components: roots.len(),
        cycle_breakers,
    }
}

fn polyline_midpoint(seg: &[[f64; 2]]) -> Option<[f64; 2]> {
    let len = arc_length(seg);
    if len == 0.0 {
        return seg.first().copied();
    }
    let mut target = len / 2.0;
    for w in seg.windows(2) {
        let d = dist(w[0], w[1]);
        if d >= target {
            let t = if d > 0.0 { target / d } else { 0.0 };
            return Some([
                w[0][0] + t * (w[1][0] - w[0][0]),
                w[0][1] + t * (w[1][1] - w[0][1]),
            ]);
        }
        target -= d;
    }
    seg.last().copied()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set_of(points: &[[f64; 2]]) -> PlanarCurveSet {
        PlanarCurveSet {
            segments: points.iter().map(|p| vec![*p]).collect(),
            resolution: 0.01,
        }
    }

    #[test]
    fn hausdorff_oracles() {
        let a = set_of(&[[0.0, 0.0]]);
        assert_eq!(hausdorff_distance(&a, &a).unwrap(), 0.0);
        let b = set_of(&[[3.0, 4.0]]);
        assert_eq!(hausdorff_distance(&a, &b).unwrap(), 5.0);
        // directed distances 0 and 1
        let c = set_of(&[[0.0, 0.0], [1.0, 0.0]]);
        assert_eq!(hausdorff_distance(&c, &a).unwrap(), 1.0);
        assert!(hausdorff_distance(&a, &set_of(&[])).is_err());
    }

    #[test]
    fn grid_index_matches_brute_force() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
        for _ in 0..20 {
            let va: Vec<[f64; 2]> = (0..rng.gen_range(1..60))
                .map(|_| [rng.gen_range(-2.0..2.0), rng.gen_range(-2.0..2.0)])
                .collect();
            let vb: Vec<[f64; 2]> = (0..rng.gen_range(1..60))
                .map(|_| [rng.gen_range(-2.0..2.0), rng.gen_range(-2.0..2.0)])
                .collect();
            let fast = hausdorff_points(&va, &vb).unwrap();
            let brute = hausdorff_points_brute(&va, &vb).unwrap();
            assert!((fast - brute).abs() <= 1e-12);
        }
    }

    #[test]
    fn pseudometric_properties() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(12);
        for _ in 0..30 {
            let mk = |rng: &mut rand_chacha::ChaCha8Rng| -> Vec<[f64; 2]> {
                (0..rng.gen_range(1..20))
                    .map(|_| [rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0)])
                    .collect()
            };
            let (a, b, c) = (mk(&mut rng), mk(&mut rng), mk(&mut rng));
            let dab = hausdorff_points(&a, &b).unwrap();
            let dba = hausdorff_points(&b, &a).unwrap();
            assert_eq!(dab, dba);
            let dac = hausdorff_points(&a, &c).unwrap();
            let dcb = hausdorff_points(&c, &b).unwrap();
            assert!(dab <= dac + dcb + 1e-12);
        }
    }

    #[test]
    fn component_counting_and_monotonicity() {
        let two_lines = PlanarCurveSet {
            segments: vec![
                vec![[-0.25, -1.0], [-0.25, 0.0], [-0.25, 1.0]],
                vec![[0.25, -1.0], [0.25, 0.0], [0.25, 1.0]],
            ],
            resolution: 0.01,
        };
        assert_eq!(component_count(&two_lines, 0.05), 2);
        // larger glue tolerance never increases the count
        assert_eq!(component_count(&two_lines, 0.6), 1);
        assert_eq!(component_count(&PlanarCurveSet::default(), 0.1), 0);
    }

    #[test]
    fn cycle_analysis_square() {
        // a square drawn as four polylines has one independent cycle
        let sq = PlanarCurveSet {
            segments: vec![
                vec![[0.0, 0.0], [1.0, 0.0]],
                vec![[1.0, 0.0], [1.0, 1.0]],
                vec![[1.0, 1.0], [0.0, 1.0]],
                vec![[0.0, 1.0], [0.0, 0.0]],
            ],
            resolution: 0.01,
        };
        let g = analyze_cycles(&sq, 1e-9);
        assert_eq!(g.nodes, 4);
        assert_eq!(g.edges, 4);
        assert_eq!(g.components, 1);
        assert_eq!(g.cycle_breakers.len(), 1);
    }

    #[test]
    fn clip_to_disk_cuts_segments() {
        let line = PlanarCurveSet {
            segments: vec![vec![[-2.0, 0.0], [0.0, 0.0], [2.0, 0.0]]],
            resolution: 0.01,
        };
        let clipped = line.clip_to_disk(1.0);
        assert_eq!(clipped.segments.len(), 1);
        let vs: Vec<[f64; 2]> = clipped.vertices().collect();
        assert!((vs.first().unwrap()[0] + 1.0).abs() < 1e-12);
        assert!((vs.last().unwrap()[0] - 1.0).abs() < 1e-12);
    }
}
