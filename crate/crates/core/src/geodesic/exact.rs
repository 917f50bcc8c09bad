//! Exact polyhedral geodesics by continuous Dijkstra over edge windows.
//!
//! Each window on a mesh edge describes a one-parameter family of shortest
//! path candidates that cross the edge through a common unfolded
//! (pseudo)source. Windows are propagated face to face in order of their
//! minimum distance, and per-edge window lists are trimmed so that only the
//! pointwise-minimal coverage survives. Vertices where geodesics can bend
//! (total angle > 2π, or boundary vertices) act as pseudosources and re-emit
//! windows over their incident faces.
//!
//! Numerical handling: an absolute tolerance [`TRIM_TOL`] (meters) governs
//! window trimming and minimum window width; windows whose unfolded source
//! lies on the edge line (grazing incidence, and sources placed exactly on an
//! edge) are propagated as point sources; a missed boundary-ray intersection
//! drops the child window rather than over-covering, so every emitted window
//! remains a valid upper bound on the true distance.

use std::cmp::Ordering;
use std::collections::BinaryHeap;

use crate::mesh::math::{dist3, dot3, sub3};
use crate::mesh::{SurfacePoint, TriangleMesh};

use super::{GeodesicError, GeodesicField, GeodesicMethod, Topology};

/// Absolute tolerance (meters) for window trimming, merging, and minimum
/// window width.
pub const TRIM_TOL: f64 = 1e-9;

/// A window on an edge: interval `[b0, b1]` along the canonical edge
/// direction, with the unfolded pseudosource at `(sx, sy)` in the edge frame
/// (`sy >= 0`; the side is identified by `from_slot`) and `sigma` the
/// distance from the pseudosource back to the true source.
#[derive(Debug, Clone, Copy)]
struct Window {
    b0: f64,
    b1: f64,
    sx: f64,
    sy: f64,
    sigma: f64,
    /// Slot in `edge.faces` of the face the unfolded source lies on; the
    /// window propagates into the other slot.
    from_slot: u8,
}

impl Window {
    fn dist_at(&self, t: f64) -> f64 {
        self.sigma + ((t - self.sx) * (t - self.sx) + self.sy * self.sy).sqrt()
    }

    fn min_dist(&self) -> f64 {
        if self.sx >= self.b0 && self.sx <= self.b1 {
            self.sigma + self.sy
        } else {
            self.dist_at(self.b0).min(self.dist_at(self.b1))
        }
    }

    fn width(&self) -> f64 {
        self.b1 - self.b0
    }
}

/// A window stored in an edge list. Fragments created by trimming share the
/// id (and pending queue entry) of the window they came from.
#[derive(Debug, Clone, Copy)]
struct Slot {
    w: Window,
    id: u64,
    propagated: bool,
}

struct QueueEntry {
    key: f64,
    edge: u32,
    id: u64,
}

impl PartialEq for QueueEntry {
    fn eq(&self, other: &Self) -> bool {
        self.key == other.key && self.id == other.id
    }
}
impl Eq for QueueEntry {}
impl PartialOrd for QueueEntry {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}
impl Ord for QueueEntry {
    fn cmp(&self, other: &Self) -> Ordering {
        // Min-heap by key; ties broken by id for determinism.
        other
            .key
            .partial_cmp(&self.key)
            .unwrap_or(Ordering::Equal)
            .then_with(|| other.id.cmp(&self.id))
    }
}

struct Mmp<'a> {
    mesh: &'a TriangleMesh,
    topo: Topology,
    lists: Vec<Vec<Slot>>,
    queue: BinaryHeap<QueueEntry>,
    vdist: Vec<f64>,
    next_id: u64,
}

/// Exact single-source geodesic distance field.
pub fn geodesic_field_exact(
    mesh: &TriangleMesh,
    source: &SurfacePoint,
) -> Result<GeodesicField, GeodesicError> {
    mesh.check_surface_point(source)?;
    let topo = Topology::build(mesh);
    let mut mmp = Mmp {
        mesh,
        lists: vec![Vec::new(); topo.edges.len()],
        topo,
        queue: BinaryHeap::new(),
        vdist: vec![f64::INFINITY; mesh.vertex_count()],
        next_id: 0,
    };
    mmp.seed_source(source);
    mmp.run();
    Ok(GeodesicField {
        source: *source,
        vertex_distance: mmp.vdist,
        method: GeodesicMethod::Exact,
    })
}

impl<'a> Mmp<'a> {
    fn seed_source(&mut self, source: &SurfacePoint) {
        // A source numerically at a vertex floods like a pseudosource with
        // sigma = 0; anything else seeds windows on its face's three edges.
        if let Some(corner) = (0..3).find(|&k| source.bary[k] > 1.0 - 1e-12) {
            let v = self.mesh.face(source.face)[corner];
            self.vdist[v as usize] = 0.0;
            self.flood_from_vertex(v);
            return;
        }
        let p = self.mesh.surface_point_position(source).expect("validated");
        let face = source.face;
        for k in 0..3 {
            let edge = self.topo.face_edges[face as usize][k];
            let w = self.window_from_point(p, edge, face, 0.0);
            self.insert_window(edge, w);
        }
        for &v in &self.mesh.face(face) {
            let d = dist3(p, self.mesh.position(v));
            self.update_vertex(v, d);
        }
    }

    /// A full-edge window whose unfolded source is the 3D point `p`, assumed
    /// to lie in the plane of `face` (a face corner, or a point inside it).
    fn window_from_point(&self, p: [f64; 3], edge: u32, face: u32, sigma: f64) -> Window {
        let e = &self.topo.edges[edge as usize];
        let q0 = self.mesh.position(e.v[0]);
        let q1 = self.mesh.position(e.v[1]);
        let axis = sub3(q1, q0);
        let len = e.len;
        let rel = sub3(p, q0);
        let sx = dot3(rel, axis) / len;
        let d2 = dot3(rel, rel);
        let sy = (d2 - sx * sx).max(0.0).sqrt();
        Window { b0: 0.0, b1: len, sx, sy, sigma, from_slot: self.topo.face_slot(edge, face) }
    }

    /// Re-emits windows from a vertex over the edges opposite to it. Called
    /// for the source vertex and whenever a pseudosource vertex improves.
    fn flood_from_vertex(&mut self, v: u32) {
        let sigma = self.vdist[v as usize];
        let p = self.mesh.position(v);
        let faces = self.topo.vertex_faces[v as usize].clone();
        for face in faces {
            let edge = self.topo.opposite_edge(self.mesh, face, v);
            let w = self.window_from_point(p, edge, face, sigma);
            self.insert_window(edge, w);
        }
    }

    fn update_vertex(&mut self, v: u32, cand: f64) {
        if cand + 1e-15 < self.vdist[v as usize] {
            let improved_by = self.vdist[v as usize] - cand;
            self.vdist[v as usize] = cand;
            // Re-flood on meaningful improvements; stale larger windows are
            // trimmed away by the new ones.
            if improved_by > TRIM_TOL && self.topo.is_pseudosource_vertex(v) {
                self.flood_from_vertex(v);
            }
        }
    }

    /// True when the window nowhere beats the via-vertex path bound
    /// `min(vdist[v0] + t, vdist[v1] + (len - t))` by more than the trim
    /// tolerance. Such a window cannot carry a shortest path: any point it
    /// would reach is served at least as well through an edge endpoint, and
    /// continuations that bend at a vertex exist only at pseudosource
    /// vertices, which flood their own windows.
    fn dominated(&self, edge: u32, w: &Window) -> bool {
        let e = &self.topo.edges[edge as usize];
        let d0 = self.vdist[e.v[0] as usize];
        let d1 = self.vdist[e.v[1] as usize];
        let bound = |t: f64| (d0 + t).min(d1 + (e.len - t));
        // f - bound is max(decreasing, increasing); its minimum sits where
        // the two vertex bounds cross (clamped to the interval).
        let tc = if d0.is_finite() && d1.is_finite() {
            (0.5 * (d1 + e.len - d0)).clamp(w.b0, w.b1)
        } else if d0.is_finite() {
            w.b1
        } else if d1.is_finite() {
            w.b0
        } else {
            return false;
        };
        w.dist_at(tc) >= bound(tc) - TRIM_TOL
    }

    fn run(&mut self) {
        // Safety valve against pathological window growth.
        let cap: u64 = 200_000_000;
        let mut pops: u64 = 0;
        while let Some(entry) = self.queue.pop() {
            pops += 1;
            assert!(pops < cap, "window propagation did not terminate");
            let pieces: Vec<Window> = self.lists[entry.edge as usize]
                .iter()
                .filter(|s| s.id == entry.id && !s.propagated)
                .map(|s| s.w)
                .collect();
            if pieces.is_empty() {
                continue;
            }
            for s in self.lists[entry.edge as usize].iter_mut() {
                if s.id == entry.id {
                    s.propagated = true;
                }
            }
            for w in pieces {
                // Vertex estimates improve over time; re-check before the
                // expensive propagation.
                if !self.dominated(entry.edge, &w) {
                    self.propagate(entry.edge, w);
                }
            }
        }
    }

    /// Propagates a window across the face on the far side of its edge.
    fn propagate(&mut self, edge: u32, w: Window) {
        let e = &self.topo.edges[edge as usize];
        let face = match e.faces[1 - w.from_slot as usize] {
            Some(f) => f,
            None => return, // boundary
        };
        let (v0, v1) = (e.v[0], e.v[1]);
        let len = e.len;

        // Local 2D frame: v0 at the origin, v1 at (len, 0), source at y >= 0,
        // target face apex at y <= 0.
        let fverts = self.mesh.face(face);
        let apex = *fverts.iter().find(|&&v| v != v0 && v != v1).expect("degenerate face");
        let la = dist3(self.mesh.position(apex), self.mesh.position(v0));
        let lb = dist3(self.mesh.position(apex), self.mesh.position(v1));
        let cx = (la * la + len * len - lb * lb) / (2.0 * len);
        let cy = -(la * la - cx * cx).max(0.0).sqrt();
        let a = [0.0, 0.0];
        let b = [len, 0.0];
        let c = [cx, cy];

        let edge_left = self.topo.opposite_edge(self.mesh, face, v1); // connects v0 and apex
        let edge_right = self.topo.opposite_edge(self.mesh, face, v0); // connects v1 and apex

        if w.sy <= 1e-12 {
            // Grazing: the unfolded source lies on the edge line. If its
            // parameter falls inside the interval the whole face is lit
            // directly; otherwise paths bend at the nearest interval
            // endpoint, which acts as a pseudosource.
            let (s, sigma) = if w.sx >= w.b0 - TRIM_TOL && w.sx <= w.b1 + TRIM_TOL {
                ([w.sx, 0.0], w.sigma)
            } else if w.sx < w.b0 {
                ([w.b0, 0.0], w.sigma + (w.b0 - w.sx))
            } else {
                ([w.b1, 0.0], w.sigma + (w.sx - w.b1))
            };
            self.emit_child(edge_left, face, s, sigma, a, c, (v0, apex), 0.0, 1.0);
            self.emit_child(edge_right, face, s, sigma, c, b, (apex, v1), 0.0, 1.0);
            self.update_vertex(apex, sigma + norm2([c[0] - s[0], c[1] - s[1]]));
            return;
        }

        let s = [w.sx, w.sy];
        let p0 = [w.b0, 0.0];
        let p1 = [w.b1, 0.0];
        let dir0 = [p0[0] - s[0], p0[1] - s[1]];
        let dir1 = [p1[0] - s[0], p1[1] - s[1]];
        let rel_c = [c[0] - s[0], c[1] - s[1]];
        // cross > 0 <=> second vector lies counterclockwise of the first.
        // With the source above the axis and the apex below, the apex is
        // inside the beam iff it is ccw of the left ray and cw of the right.
        let ccw_of_left = cross2(dir0, rel_c) >= 0.0;
        let cw_of_right = cross2(dir1, rel_c) <= 0.0;

        if ccw_of_left && cw_of_right {
            // The apex splits the beam: one child on each far edge.
            if let Some(t0) = boundary_hit(s, p0, a, c, w.b0 <= TRIM_TOL, 0.0) {
                self.emit_child(edge_left, face, s, w.sigma, a, c, (v0, apex), t0, 1.0);
            }
            if let Some(t1) = boundary_hit(s, p1, c, b, w.b1 >= len - TRIM_TOL, 1.0) {
                self.emit_child(edge_right, face, s, w.sigma, c, b, (apex, v1), 0.0, t1);
            }
            self.update_vertex(apex, w.sigma + norm2(rel_c));
        } else if !ccw_of_left {
            // Apex lies left of the beam; everything exits through (apex, v1).
            // The corner shortcut does not apply here: even a ray through a
            // corner of the window edge must be intersected with the far
            // segment for real.
            let t0 = boundary_hit(s, p0, c, b, false, 0.0);
            let t1 = boundary_hit(s, p1, c, b, w.b1 >= len - TRIM_TOL, 1.0);
            if let (Some(t0), Some(t1)) = (t0, t1) {
                self.emit_child(edge_right, face, s, w.sigma, c, b, (apex, v1), t0, t1);
            }
        } else {
            // Apex lies right of the beam; everything exits through (v0, apex).
            let t0 = boundary_hit(s, p0, a, c, w.b0 <= TRIM_TOL, 0.0);
            let t1 = boundary_hit(s, p1, a, c, false, 1.0);
            if let (Some(t0), Some(t1)) = (t0, t1) {
                self.emit_child(edge_left, face, s, w.sigma, a, c, (v0, apex), t0, t1);
            }
        }
    }

    /// Builds the child window on `edge` covering segment params `[t0, t1]`
    /// of the directed 2D segment `q0 -> q1` whose endpoints are the mesh
    /// vertices `(id0, id1)`, with the unfolded source at `s`, and inserts it.
    #[allow(clippy::too_many_arguments)]
    fn emit_child(
        &mut self,
        edge: u32,
        face: u32,
        s: [f64; 2],
        sigma: f64,
        q0: [f64; 2],
        q1: [f64; 2],
        ids: (u32, u32),
        t0: f64,
        t1: f64,
    ) {
        let (t0, t1) = if t0 <= t1 { (t0, t1) } else { (t1, t0) };
        let (t0, t1) = (t0.clamp(0.0, 1.0), t1.clamp(0.0, 1.0));
        let e = &self.topo.edges[edge as usize];
        let seg_len = e.len;
        if (t1 - t0) * seg_len < TRIM_TOL {
            return;
        }
        let u = [(q1[0] - q0[0]) / seg_len, (q1[1] - q0[1]) / seg_len];
        let rel = [s[0] - q0[0], s[1] - q0[1]];
        let sx_fwd = rel[0] * u[0] + rel[1] * u[1];
        let sy = cross2(u, rel).abs();
        debug_assert!(ids.0 == e.v[0] || ids.0 == e.v[1]);
        let (b0, b1, sx) = if ids.0 == e.v[0] {
            (t0 * seg_len, t1 * seg_len, sx_fwd)
        } else {
            (seg_len - t1 * seg_len, seg_len - t0 * seg_len, seg_len - sx_fwd)
        };
        let w = Window { b0, b1, sx, sy, sigma, from_slot: self.topo.face_slot(edge, face) };
        self.insert_window(edge, w);
    }

    fn insert_window(&mut self, edge: u32, mut w: Window) {
        let e_len = self.topo.edges[edge as usize].len;
        w.b0 = w.b0.clamp(0.0, e_len);
        w.b1 = w.b1.clamp(0.0, e_len);
        if w.width() < TRIM_TOL || !w.sigma.is_finite() || self.dominated(edge, &w) {
            return;
        }

        // The list is kept sorted by interval start with pairwise disjoint
        // intervals; only the local overlap range participates in trimming.
        let list = &mut self.lists[edge as usize];
        let start = list.partition_point(|s| s.w.b1 <= w.b0);
        let mut end = start;
        while end < list.len() && list[end].w.b0 < w.b1 {
            end += 1;
        }

        // Resolve the new window against the overlapping incumbents until no
        // overlap remains. Each resolution strictly removes the overlap
        // between one pair, so this terminates.
        let mut fs: Vec<Window> = vec![w];
        let mut us: Vec<Slot> = list.drain(start..end).collect();
        'outer: loop {
            for fi in 0..fs.len() {
                for ui in 0..us.len() {
                    let f = fs[fi];
                    let slot = us[ui];
                    let ov0 = f.b0.max(slot.w.b0);
                    let ov1 = f.b1.min(slot.w.b1);
                    if ov1 - ov0 <= 0.0 {
                        continue;
                    }
                    let (f_parts, u_parts) = resolve(f, slot.w, ov0, ov1);
                    fs.swap_remove(fi);
                    us.swap_remove(ui);
                    fs.extend(f_parts.into_iter().filter(|p| p.width() >= TRIM_TOL));
                    us.extend(
                        u_parts
                            .into_iter()
                            .filter(|p| p.width() >= TRIM_TOL)
                            .map(|p| Slot { w: p, id: slot.id, propagated: slot.propagated }),
                    );
                    continue 'outer;
                }
            }
            break;
        }

        // Adjacent fragments of the new window share one distance function;
        // fuse them back together before queuing.
        fs.sort_by(|a, b| a.b0.partial_cmp(&b.b0).unwrap());
        let mut fused: Vec<Window> = Vec::with_capacity(fs.len());
        for f in fs {
            match fused.last_mut() {
                Some(last) if f.b0 - last.b1 < 1e-12 => last.b1 = f.b1,
                _ => fused.push(f),
            }
        }

        let mut incoming: Vec<Slot> = Vec::with_capacity(us.len() + fused.len());
        incoming.extend(us);
        for f in fused {
            if self.dominated(edge, &f) {
                continue;
            }
            let id = self.next_id;
            self.next_id += 1;
            self.queue.push(QueueEntry { key: f.min_dist(), edge, id });
            if f.b0 <= TRIM_TOL {
                let v = self.topo.edges[edge as usize].v[0];
                self.update_vertex(v, f.dist_at(f.b0));
            }
            if f.b1 >= e_len - TRIM_TOL {
                let v = self.topo.edges[edge as usize].v[1];
                self.update_vertex(v, f.dist_at(f.b1));
            }
            incoming.push(Slot { w: f, id, propagated: false });
        }
        incoming.sort_by(|a, b| a.w.b0.partial_cmp(&b.w.b0).unwrap());
        // The batch replaces the drained range wholesale; everything before
        // `start` ends at or before w.b0 and everything after begins at or
        // after w.b1, so splicing at `start` keeps the list sorted.
        self.lists[edge as usize].splice(start..start, incoming);
    }
}

/// Splits an overlapping window pair into the regions each wins on
/// `[ov0, ov1]`. Returns surviving pieces of `f` (the candidate) and `u`
/// (the incumbent). Ties within [`TRIM_TOL`] go to the incumbent.
///
/// Squaring the equal-distance equation twice reduces it to a quadratic, so
/// two windows cross at most twice inside the overlap; all verified
/// crossovers partition the overlap, and each cell goes to whichever window
/// is smaller at its midpoint.
fn resolve(f: Window, u: Window, ov0: f64, ov1: f64) -> (Vec<Window>, Vec<Window>) {
    // Equal distance: sf + sqrt((t-xf)^2 + yf^2) = su + sqrt((t-xu)^2 + yu^2).
    // With D = su - sf and L(t) = (t-xf)^2 + yf^2 - (t-xu)^2 - yu^2 - D^2
    // (linear in t), squaring gives L(t)^2 = 4 D^2 ((t-xu)^2 + yu^2).
    let d = u.sigma - f.sigma;
    let alpha = 2.0 * (u.sx - f.sx);
    let beta =
        f.sx * f.sx + f.sy * f.sy - u.sx * u.sx - u.sy * u.sy - d * d;
    let mut candidates: Vec<f64> = Vec::with_capacity(2);
    if d.abs() < 1e-14 {
        // Distances equal where the squared radii agree: L(t) = 0.
        if alpha.abs() > 1e-300 {
            candidates.push(-beta / alpha);
        }
    } else {
        // Quadratic a t^2 + b t + c = 0 from L^2 = 4 D^2 Au.
        let a = alpha * alpha - 4.0 * d * d;
        let b = 2.0 * alpha * beta + 8.0 * d * d * u.sx;
        let c = beta * beta - 4.0 * d * d * (u.sx * u.sx + u.sy * u.sy);
        if a.abs() < 1e-12 * (b.abs() + c.abs()).max(1.0) {
            if b.abs() > 1e-300 {
                candidates.push(-c / b);
            }
        } else {
            let disc = b * b - 4.0 * a * c;
            if disc >= 0.0 {
                let sq = disc.sqrt();
                candidates.push((-b + sq) / (2.0 * a));
                candidates.push((-b - sq) / (2.0 * a));
            }
        }
    }

    // Keep verified crossovers strictly inside the overlap.
    let scale = f.sigma.abs() + u.sigma.abs() + (ov1 - ov0) + 1.0;
    let mut cuts: Vec<f64> = candidates
        .into_iter()
        .filter(|&t| t > ov0 + 1e-15 && t < ov1 - 1e-15)
        .filter(|&t| (f.dist_at(t) - u.dist_at(t)).abs() <= 1e-9 * scale)
        .collect();
    cuts.sort_by(|a, b| a.partial_cmp(b).unwrap());
    cuts.dedup_by(|a, b| (*a - *b).abs() < 1e-12);

    // Winner per cell of the partition, ties to the incumbent.
    let mut bounds = Vec::with_capacity(cuts.len() + 2);
    bounds.push(ov0);
    bounds.extend(cuts);
    bounds.push(ov1);
    let mut f_runs: Vec<(f64, f64)> = Vec::new();
    let mut u_runs: Vec<(f64, f64)> = Vec::new();
    for win in bounds.windows(2) {
        let (lo, hi) = (win[0], win[1]);
        let mid = 0.5 * (lo + hi);
        let f_wins = f.dist_at(mid) < u.dist_at(mid) - TRIM_TOL;
        let runs = if f_wins { &mut f_runs } else { &mut u_runs };
        match runs.last_mut() {
            Some(last) if (last.1 - lo).abs() < 1e-15 => last.1 = hi,
            _ => runs.push((lo, hi)),
        }
    }

    let mut f_parts: Vec<Window> = Vec::with_capacity(3);
    let mut u_parts: Vec<Window> = Vec::with_capacity(3);
    // Pieces of each window outside the overlap survive untouched.
    if ov0 - f.b0 > 0.0 {
        f_parts.push(Window { b1: ov0, ..f });
    }
    if f.b1 - ov1 > 0.0 {
        f_parts.push(Window { b0: ov1, ..f });
    }
    if ov0 - u.b0 > 0.0 {
        u_parts.push(Window { b1: ov0, ..u });
    }
    if u.b1 - ov1 > 0.0 {
        u_parts.push(Window { b0: ov1, ..u });
    }
    for (lo, hi) in f_runs {
        f_parts.push(Window { b0: lo, b1: hi, ..f });
    }
    for (lo, hi) in u_runs {
        u_parts.push(Window { b0: lo, b1: hi, ..u });
    }
    (f_parts, u_parts)
}

fn cross2(a: [f64; 2], b: [f64; 2]) -> f64 {
    a[0] * b[1] - a[1] * b[0]
}

fn norm2(a: [f64; 2]) -> f64 {
    (a[0] * a[0] + a[1] * a[1]).sqrt()
}

/// Segment param where the beam boundary ray from `s` through `p` crosses
/// segment `q0 -> q1`. When the window endpoint coincides with a face corner
/// (`at_corner`), the hit is the known param; a genuinely missed ray yields
/// `None` so the child under-covers instead of claiming unlit territory.
fn boundary_hit(
    s: [f64; 2],
    p: [f64; 2],
    q0: [f64; 2],
    q1: [f64; 2],
    at_corner: bool,
    corner_t: f64,
) -> Option<f64> {
    if at_corner {
        return Some(corner_t);
    }
    let d = [p[0] - s[0], p[1] - s[1]];
    let e = [q1[0] - q0[0], q1[1] - q0[1]];
    let denom = cross2(d, e);
    if denom.abs() < 1e-300 {
        return None;
    }
    let rel = [q0[0] - s[0], q0[1] - s[1]];
    let t = cross2(rel, d) / denom;
    let u = cross2(rel, e) / denom;
    if u < 0.0 {
        return None;
    }
    Some(t)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geodesic::vertex_source;
    use crate::mesh::primitives::{grid_plane, unit_square};

    #[test]
    fn window_distance_and_min() {
        let w = Window { b0: 0.0, b1: 2.0, sx: 1.0, sy: 1.0, sigma: 0.5, from_slot: 0 };
        assert!((w.dist_at(1.0) - 1.5).abs() < 1e-15);
        assert!((w.dist_at(0.0) - (0.5 + 2f64.sqrt())).abs() < 1e-15);
        assert!((w.min_dist() - 1.5).abs() < 1e-15);
    }

    #[test]
    fn resolve_prefers_closer_window() {
        // Two point sources on opposite ends; crossover at the midpoint.
        let f = Window { b0: 0.0, b1: 1.0, sx: 0.0, sy: 0.0, sigma: 0.0, from_slot: 0 };
        let u = Window { b0: 0.0, b1: 1.0, sx: 1.0, sy: 0.0, sigma: 0.0, from_slot: 0 };
        let (fp, up) = resolve(f, u, 0.0, 1.0);
        assert_eq!(fp.len(), 1);
        assert_eq!(up.len(), 1);
        assert!((fp[0].b1 - 0.5).abs() < 1e-9);
        assert!((up[0].b0 - 0.5).abs() < 1e-9);
    }

    #[test]
    fn unit_square_corner_to_corner() {
        let mesh = unit_square();
        let field = geodesic_field_exact(&mesh, &vertex_source(&mesh, 0)).unwrap();
        assert!((field.vertex_distance[0]).abs() < 1e-12);
        assert!((field.vertex_distance[1] - 1.0).abs() < 1e-9);
        assert!((field.vertex_distance[3] - 1.0).abs() < 1e-9);
        assert!((field.vertex_distance[2] - 2f64.sqrt()).abs() < 1e-9);
    }

    #[test]
    fn planar_grid_matches_euclidean() {
        let mesh = grid_plane(10);
        let field = geodesic_field_exact(&mesh, &vertex_source(&mesh, 0)).unwrap();
        let p0 = mesh.position(0);
        for v in 0..mesh.vertex_count() as u32 {
            let want = dist3(mesh.position(v), p0);
            let got = field.vertex_distance[v as usize];
            assert!(
                (got - want).abs() < 1e-6,
                "vertex {v}: got {got}, want {want}"
            );
        }
    }
}

