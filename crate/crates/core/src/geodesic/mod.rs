//! Single-source geodesic distance fields on triangle meshes.
//!
//! Two methods compute the same thing from opposite directions:
//!
//! - [`geodesic_field_exact`]: the exact polyhedral shortest-path method
//!   (continuous Dijkstra with per-edge window lists). This is the
//!   supervision signal of the whole pipeline.
//! - [`geodesic_field_graph`]: Dijkstra on the mesh graph augmented with `k`
//!   uniformly spaced Steiner points per edge and complete connections inside
//!   each face. Always an upper bound; converges to the exact value from
//!   above as `k` grows, which makes it an independent oracle for the exact
//!   method.
//!
//! A field stores one distance per mesh vertex; distances at arbitrary
//! [`SurfacePoint`]s are barycentric interpolations of the face's vertex
//! distances ([`geodesic_distance`]). The interpolation error is second-order
//! in edge length; this is an intentional approximation, documented here
//! rather than hidden.

mod exact;
mod graph;

use thiserror::Error;

use crate::mesh::math::dist3;
use crate::mesh::{MeshError, SurfacePoint, TriangleMesh};

pub use exact::geodesic_field_exact;
pub use graph::geodesic_field_graph;

#[derive(Debug, Error)]
pub enum GeodesicError {
    #[error(transparent)]
    Mesh(#[from] MeshError),
    #[error("surface point face {face} out of range for this field's mesh")]
    FaceOutOfRange { face: u32 },
}

/// How a field was computed.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GeodesicMethod {
    Exact,
    /// Steiner-graph Dijkstra with `k` extra points per edge.
    Graph { steiner_k: u32 },
}

/// Distances (meters) from one source surface point to every mesh vertex.
#[derive(Debug, Clone)]
pub struct GeodesicField {
    pub source: SurfacePoint,
    pub vertex_distance: Vec<f64>,
    pub method: GeodesicMethod,
}

impl GeodesicField {
    /// Distance to a surface point by barycentric interpolation of its
    /// face's vertex distances. Exactly 0 when the target is the source.
    pub fn distance_to(&self, mesh: &TriangleMesh, target: &SurfacePoint) -> Result<f64, GeodesicError> {
        geodesic_distance(self, mesh, target)
    }

    pub fn max_distance(&self) -> f64 {
        self.vertex_distance.iter().cloned().fold(0.0, f64::max)
    }
}

/// See [`GeodesicField::distance_to`].
pub fn geodesic_distance(
    field: &GeodesicField,
    mesh: &TriangleMesh,
    target: &SurfacePoint,
) -> Result<f64, GeodesicError> {
    mesh.check_surface_point(target)?;
    if target.face == field.source.face {
        let db = (0..3)
            .map(|k| (target.bary[k] - field.source.bary[k]).abs())
            .fold(0.0, f64::max);
        if db < 1e-12 {
            return Ok(0.0);
        }
    }
    let [a, b, c] = mesh.face(target.face);
    let d = target.bary[0] * field.vertex_distance[a as usize]
        + target.bary[1] * field.vertex_distance[b as usize]
        + target.bary[2] * field.vertex_distance[c as usize];
    Ok(d)
}

/// An estimate of the surface diameter: the largest field maximum over
/// `n_samples` distinct source vertices (deterministic per seed). Used as the
/// normalization scale that maps geodesic meters into the feature-distance
/// range.
pub fn geodesic_diameter(mesh: &TriangleMesh, n_samples: usize, seed: u64) -> Result<f64, GeodesicError> {
    assert!(n_samples >= 1, "need at least one sample");
    use rand::seq::SliceRandom;
    let mut rng = crate::rng::stream(seed, "geodesic-diameter");
    let mut verts: Vec<u32> = (0..mesh.vertex_count() as u32).collect();
    verts.shuffle(&mut rng);
    verts.truncate(n_samples.min(mesh.vertex_count()));
    let mut best: f64 = 0.0;
    for v in verts {
        let field = geodesic_field_exact(mesh, &vertex_source(mesh, v))?;
        best = best.max(field.max_distance());
    }
    Ok(best)
}

/// The surface point sitting on vertex `v` (any incident face works).
pub fn vertex_source(mesh: &TriangleMesh, v: u32) -> SurfacePoint {
    for (fi, f) in mesh.faces().iter().enumerate() {
        for k in 0..3 {
            if f[k] == v {
                return SurfacePoint::at_corner(fi as u32, k);
            }
        }
    }
    panic!("vertex {v} not referenced by any face");
}

/// Mesh connectivity used by both geodesic methods.
pub(crate) struct Topology {
    /// Undirected edges, endpoints ordered `v[0] < v[1]`.
    pub edges: Vec<Edge>,
    /// Edge ids per face; entry `k` connects face corners `k` and `k+1`.
    pub face_edges: Vec<[u32; 3]>,
    /// Faces incident to each vertex.
    pub vertex_faces: Vec<Vec<u32>>,
    /// Sum of incident face corner angles per vertex.
    pub vertex_angle: Vec<f64>,
    /// True when some incident edge has only one adjacent face.
    pub vertex_boundary: Vec<bool>,
}

pub(crate) struct Edge {
    pub v: [u32; 2],
    pub len: f64,
    /// Adjacent faces; slot 1 is `None` on boundary edges.
    pub faces: [Option<u32>; 2],
}

impl Topology {
    pub fn build(mesh: &TriangleMesh) -> Self {
        let nv = mesh.vertex_count();
        let mut edge_of = std::collections::HashMap::new();
        let mut edges: Vec<Edge> = Vec::new();
        let mut face_edges = Vec::with_capacity(mesh.face_count());
        let mut vertex_faces = vec![Vec::new(); nv];
        let mut vertex_angle = vec![0.0f64; nv];

        for (fi, f) in mesh.faces().iter().enumerate() {
            let mut fe = [0u32; 3];
            for k in 0..3 {
                let (a, b) = (f[k], f[(k + 1) % 3]);
                let key = (a.min(b), a.max(b));
                let id = *edge_of.entry(key).or_insert_with(|| {
                    edges.push(Edge {
                        v: [key.0, key.1],
                        len: dist3(mesh.position(key.0), mesh.position(key.1)),
                        faces: [None, None],
                    });
                    (edges.len() - 1) as u32
                });
                let e = &mut edges[id as usize];
                if e.faces[0].is_none() {
                    e.faces[0] = Some(fi as u32);
                } else if e.faces[1].is_none() {
                    e.faces[1] = Some(fi as u32);
                }
                fe[k] = id;
            }
            face_edges.push(fe);
            let ps = mesh.face_positions(fi as u32);
            for k in 0..3 {
                vertex_faces[f[k] as usize].push(fi as u32);
                vertex_angle[f[k] as usize] += corner_angle(ps[k], ps[(k + 1) % 3], ps[(k + 2) % 3]);
            }
        }

        let mut vertex_boundary = vec![false; nv];
        for e in &edges {
            if e.faces[1].is_none() {
                vertex_boundary[e.v[0] as usize] = true;
                vertex_boundary[e.v[1] as usize] = true;
            }
        }

        Topology { edges, face_edges, vertex_faces, vertex_angle, vertex_boundary }
    }

    /// A vertex where geodesics may bend: total angle > 2π, or on a boundary.
    pub fn is_pseudosource_vertex(&self, v: u32) -> bool {
        self.vertex_boundary[v as usize]
            || self.vertex_angle[v as usize] > 2.0 * std::f64::consts::PI + 1e-12
    }

    /// Slot (0 or 1) of `face` among `edge`'s adjacent faces.
    pub fn face_slot(&self, edge: u32, face: u32) -> u8 {
        let e = &self.edges[edge as usize];
        if e.faces[0] == Some(face) {
            0
        } else {
            debug_assert_eq!(e.faces[1], Some(face));
            1
        }
    }

    /// The edge of `face` not touching vertex `v`, with the two edges that do.
    pub fn opposite_edge(&self, mesh: &TriangleMesh, face: u32, v: u32) -> u32 {
        let f = mesh.face(face);
        let k = (0..3).find(|&k| f[k] == v).expect("vertex not on face");
        // Edge k connects corners k and k+1; the opposite edge is k+1 (connecting k+1 and k+2).
        self.face_edges[face as usize][(k + 1) % 3]
    }
}

fn corner_angle(at: [f64; 3], b: [f64; 3], c: [f64; 3]) -> f64 {
    use crate::mesh::math::{dot3, norm3, sub3};
    let u = sub3(b, at);
    let v = sub3(c, at);
    let cosang = (dot3(u, v) / (norm3(u) * norm3(v))).clamp(-1.0, 1.0);
    cosang.acos()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::mesh::primitives::{grid_plane, icosphere};

    #[test]
    fn topology_counts_on_closed_mesh() {
        let mesh = icosphere(1, 1.0);
        let topo = Topology::build(&mesh);
        // Euler: E = 3F/2 on a closed triangle mesh.
        assert_eq!(topo.edges.len(), mesh.face_count() * 3 / 2);
        assert!(topo.edges.iter().all(|e| e.faces[1].is_some()));
        assert!((0..mesh.vertex_count() as u32).all(|v| !topo.is_pseudosource_vertex(v)));
    }

    #[test]
    fn grid_boundary_is_detected() {
        let mesh = grid_plane(4);
        let topo = Topology::build(&mesh);
        assert!(topo.vertex_boundary[0]);
        // Vertex in the middle of the grid: index (2,2) -> 2*5+2.
        assert!(!topo.vertex_boundary[12]);
        let interior_angle = topo.vertex_angle[12];
        assert!((interior_angle - 2.0 * std::f64::consts::PI).abs() < 1e-12);
    }
}
