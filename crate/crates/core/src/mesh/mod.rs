//! Triangle meshes and surface points.
//!
//! A [`TriangleMesh`] is the substrate everything else works on: geodesic
//! distances are measured along it, the rasterizer samples it, and pixels
//! link back to it through [`SurfacePoint`]s (a face index plus barycentric
//! coordinates). Construction validates the invariants the rest of the
//! pipeline relies on:
//!
//! - all face indices are in range and no face is degenerate
//!   (area > [`MIN_FACE_AREA`]),
//! - every undirected edge is shared by at most two faces (edge-manifold),
//! - the mesh is a single connected component, so geodesic distances are
//!   finite everywhere.

pub mod math;
pub mod obj;
pub mod primitives;

use thiserror::Error;

use math::{cross3, norm3, sub3};

/// Faces with area at or below this (in m²) are rejected at construction.
pub const MIN_FACE_AREA: f64 = 1e-12;

/// Barycentric coordinates must be nonnegative and sum to 1 within this.
pub const BARY_TOL: f64 = 1e-9;

#[derive(Debug, Error)]
pub enum MeshError {
    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),
    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("face {face} references vertex {index} but the mesh has {count} vertices")]
    VertexIndexOutOfRange { face: usize, index: u32, count: usize },
    #[error("face {face} references uv {index} but the mesh has {count} uvs")]
    UvIndexOutOfRange { face: usize, index: u32, count: usize },
    #[error("face {face} is degenerate (area {area:.3e} m² <= {MIN_FACE_AREA:.0e})")]
    DegenerateFace { face: usize, area: f64 },
    #[error("edge ({v0}, {v1}) is shared by {count} faces; at most 2 allowed")]
    NonManifoldEdge { v0: u32, v1: u32, count: usize },
    #[error("mesh is disconnected: {components} components")]
    Disconnected { components: usize },
    #[error("mesh has no faces")]
    Empty,
    #[error("uv table must cover every face corner: {got} uv triples for {faces} faces")]
    UvCoverage { got: usize, faces: usize },
    #[error("surface point face {face} out of range ({count} faces)")]
    FaceOutOfRange { face: u32, count: usize },
    #[error("invalid barycentric coordinates {bary:?}: must be >= 0 and sum to 1 within {BARY_TOL:.0e}")]
    InvalidBarycentric { bary: [f64; 3] },
}

/// A point on a mesh surface: a face plus barycentric coordinates on it.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SurfacePoint {
    pub face: u32,
    pub bary: [f64; 3],
}

impl SurfacePoint {
    /// Validates the barycentric invariant (nonnegative, sums to 1).
    pub fn new(face: u32, bary: [f64; 3]) -> Result<Self, MeshError> {
        let sum: f64 = bary.iter().sum();
        if bary.iter().any(|&b| b < -BARY_TOL) || (sum - 1.0).abs() > BARY_TOL {
            return Err(MeshError::InvalidBarycentric { bary });
        }
        // Clamp tiny negatives introduced by rasterization arithmetic.
        let mut b = bary.map(|x| x.max(0.0));
        let s: f64 = b.iter().sum();
        for x in &mut b {
            *x /= s;
        }
        Ok(Self { face, bary: b })
    }

    /// The surface point sitting exactly on a vertex of `face`.
    pub fn at_corner(face: u32, corner: usize) -> Self {
        let mut bary = [0.0; 3];
        bary[corner] = 1.0;
        Self { face, bary }
    }
}

/// A triangle mesh in meters, optionally with per-corner texture coordinates.
#[derive(Debug, Clone)]
pub struct TriangleMesh {
    positions: Vec<[f64; 3]>,
    faces: Vec<[u32; 3]>,
    /// Texture coordinate table; empty when the mesh has no uvs.
    uvs: Vec<[f32; 2]>,
    /// Per-face uv indices into `uvs`, parallel to `faces`; empty when no uvs.
    face_uvs: Vec<[u32; 3]>,
}

impl TriangleMesh {
    /// Builds a mesh without texture coordinates, validating all invariants.
    pub fn new(positions: Vec<[f64; 3]>, faces: Vec<[u32; 3]>) -> Result<Self, MeshError> {
        Self::with_uvs(positions, faces, Vec::new(), Vec::new())
    }

    /// Builds a mesh with per-corner texture coordinates.
    pub fn with_uvs(
        positions: Vec<[f64; 3]>,
        faces: Vec<[u32; 3]>,
        uvs: Vec<[f32; 2]>,
        face_uvs: Vec<[u32; 3]>,
    ) -> Result<Self, MeshError> {
        let mesh = Self { positions, faces, uvs, face_uvs };
        mesh.validate()?;
        Ok(mesh)
    }

    fn validate(&self) -> Result<(), MeshError> {
        if self.faces.is_empty() {
            return Err(MeshError::Empty);
        }
        let nv = self.positions.len();
        for (fi, f) in self.faces.iter().enumerate() {
            for &v in f {
                if v as usize >= nv {
                    return Err(MeshError::VertexIndexOutOfRange { face: fi, index: v, count: nv });
                }
            }
            let area = self.face_area(fi);
            if !(area > MIN_FACE_AREA) {
                return Err(MeshError::DegenerateFace { face: fi, area });
            }
        }
        if !self.uvs.is_empty() || !self.face_uvs.is_empty() {
            if self.face_uvs.len() != self.faces.len() {
                return Err(MeshError::UvCoverage { got: self.face_uvs.len(), faces: self.faces.len() });
            }
            for (fi, f) in self.face_uvs.iter().enumerate() {
                for &t in f {
                    if t as usize >= self.uvs.len() {
                        return Err(MeshError::UvIndexOutOfRange { face: fi, index: t, count: self.uvs.len() });
                    }
                }
            }
        }

        // Edge-manifold: every undirected edge on at most two faces.
        let mut edges: std::collections::HashMap<(u32, u32), usize> = std::collections::HashMap::new();
        for f in &self.faces {
            for k in 0..3 {
                let (a, b) = (f[k], f[(k + 1) % 3]);
                let key = (a.min(b), a.max(b));
                *edges.entry(key).or_insert(0) += 1;
            }
        }
        for (&(v0, v1), &count) in &edges {
            if count > 2 {
                return Err(MeshError::NonManifoldEdge { v0, v1, count });
            }
        }

        // Connectivity over vertices through edges (union-find).
        let mut parent: Vec<u32> = (0..nv as u32).collect();
        fn find(parent: &mut [u32], mut x: u32) -> u32 {
            while parent[x as usize] != x {
                parent[x as usize] = parent[parent[x as usize] as usize];
                x = parent[x as usize];
            }
            x
        }
        for f in &self.faces {
            for k in 0..2 {
                let (a, b) = (find(&mut parent, f[k]), find(&mut parent, f[k + 1]));
                if a != b {
                    parent[a as usize] = b;
                }
            }
        }
        let mut roots = std::collections::HashSet::new();
        for v in 0..nv as u32 {
            roots.insert(find(&mut parent, v));
        }
        if roots.len() > 1 {
            return Err(MeshError::Disconnected { components: roots.len() });
        }
        Ok(())
    }

    pub fn vertex_count(&self) -> usize {
        self.positions.len()
    }

    pub fn face_count(&self) -> usize {
        self.faces.len()
    }

    pub fn positions(&self) -> &[[f64; 3]] {
        &self.positions
    }

    pub fn faces(&self) -> &[[u32; 3]] {
        &self.faces
    }

    pub fn position(&self, v: u32) -> [f64; 3] {
        self.positions[v as usize]
    }

    pub fn face(&self, f: u32) -> [u32; 3] {
        self.faces[f as usize]
    }

    pub fn face_positions(&self, f: u32) -> [[f64; 3]; 3] {
        let [a, b, c] = self.faces[f as usize];
        [self.position(a), self.position(b), self.position(c)]
    }

    pub fn has_uvs(&self) -> bool {
        !self.uvs.is_empty()
    }

    pub fn uvs(&self) -> &[[f32; 2]] {
        &self.uvs
    }

    pub fn face_uvs(&self) -> &[[u32; 3]] {
        &self.face_uvs
    }

    /// Per-corner uvs of a face; `None` when the mesh carries no uvs.
    pub fn face_uv(&self, f: u32) -> Option<[[f32; 2]; 3]> {
        if self.uvs.is_empty() {
            return None;
        }
        let t = self.face_uvs[f as usize];
        Some([self.uvs[t[0] as usize], self.uvs[t[1] as usize], self.uvs[t[2] as usize]])
    }

    pub fn face_area(&self, f: usize) -> f64 {
        let [a, b, c] = self.faces[f];
        let (pa, pb, pc) = (self.position(a), self.position(b), self.position(c));
        0.5 * norm3(cross3(sub3(pb, pa), sub3(pc, pa)))
    }

    pub fn face_normal(&self, f: u32) -> [f64; 3] {
        let [pa, pb, pc] = self.face_positions(f);
        let n = cross3(sub3(pb, pa), sub3(pc, pa));
        let l = norm3(n);
        [n[0] / l, n[1] / l, n[2] / l]
    }

    /// Longest edge of face `f`, in meters.
    pub fn face_longest_edge(&self, f: u32) -> f64 {
        let [pa, pb, pc] = self.face_positions(f);
        norm3(sub3(pb, pa)).max(norm3(sub3(pc, pb))).max(norm3(sub3(pa, pc)))
    }

    /// Axis-aligned bounding box `(min, max)`.
    pub fn bounds(&self) -> ([f64; 3], [f64; 3]) {
        let mut lo = [f64::INFINITY; 3];
        let mut hi = [f64::NEG_INFINITY; 3];
        for p in &self.positions {
            for k in 0..3 {
                lo[k] = lo[k].min(p[k]);
                hi[k] = hi[k].max(p[k]);
            }
        }
        (lo, hi)
    }

    /// Validates a surface point against this mesh.
    pub fn check_surface_point(&self, sp: &SurfacePoint) -> Result<(), MeshError> {
        if sp.face as usize >= self.faces.len() {
            return Err(MeshError::FaceOutOfRange { face: sp.face, count: self.faces.len() });
        }
        let sum: f64 = sp.bary.iter().sum();
        if sp.bary.iter().any(|&b| b < -BARY_TOL) || (sum - 1.0).abs() > BARY_TOL {
            return Err(MeshError::InvalidBarycentric { bary: sp.bary });
        }
        Ok(())
    }

    /// 3D position of a surface point: the barycentric combination of its
    /// face corners.
    pub fn surface_point_position(&self, sp: &SurfacePoint) -> Result<[f64; 3], MeshError> {
        self.check_surface_point(sp)?;
        let [pa, pb, pc] = self.face_positions(sp.face);
        let b = sp.bary;
        Ok([
            b[0] * pa[0] + b[1] * pb[0] + b[2] * pc[0],
            b[0] * pa[1] + b[1] * pb[1] + b[2] * pc[1],
            b[0] * pa[2] + b[1] * pb[2] + b[2] * pc[2],
        ])
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn two_triangle_square() -> TriangleMesh {
        TriangleMesh::new(
            vec![[0.0, 0.0, 0.0], [1.0, 0.0, 0.0], [1.0, 1.0, 0.0], [0.0, 1.0, 0.0]],
            vec![[0, 1, 2], [0, 2, 3]],
        )
        .unwrap()
    }

    #[test]
    fn vertex_index_out_of_range_is_rejected() {
        let err = TriangleMesh::new(
            vec![[0.0; 3], [1.0, 0.0, 0.0], [0.0, 1.0, 0.0], [1.0, 1.0, 0.0]],
            vec![[0, 1, 99]],
        )
        .unwrap_err();
        assert!(matches!(err, MeshError::VertexIndexOutOfRange { index: 99, .. }));
    }

    #[test]
    fn degenerate_face_is_rejected() {
        let err = TriangleMesh::new(
            vec![[0.0; 3], [1.0, 0.0, 0.0], [2.0, 0.0, 0.0]],
            vec![[0, 1, 2]],
        )
        .unwrap_err();
        assert!(matches!(err, MeshError::DegenerateFace { .. }));
    }

    #[test]
    fn non_manifold_edge_is_rejected() {
        // Three faces share the edge (0, 1).
        let err = TriangleMesh::new(
            vec![[0.0; 3], [1.0, 0.0, 0.0], [0.0, 1.0, 0.0], [0.0, -1.0, 0.0], [0.0, 0.0, 1.0]],
            vec![[0, 1, 2], [0, 1, 3], [0, 1, 4]],
        )
        .unwrap_err();
        assert!(matches!(err, MeshError::NonManifoldEdge { count: 3, .. }));
    }

    #[test]
    fn disconnected_mesh_reports_component_count() {
        let err = TriangleMesh::new(
            vec![
                [0.0; 3], [1.0, 0.0, 0.0], [0.0, 1.0, 0.0],
                [5.0, 0.0, 0.0], [6.0, 0.0, 0.0], [5.0, 1.0, 0.0],
            ],
            vec![[0, 1, 2], [3, 4, 5]],
        )
        .unwrap_err();
        assert!(matches!(err, MeshError::Disconnected { components: 2 }));
    }

    #[test]
    fn surface_point_corner_returns_corner_position() {
        let mesh = two_triangle_square();
        let p = mesh.surface_point_position(&SurfacePoint::at_corner(1, 0)).unwrap();
        assert_eq!(p, [0.0, 0.0, 0.0]);
    }

    #[test]
    fn surface_point_centroid() {
        let mesh = TriangleMesh::new(
            vec![[0.0; 3], [3.0, 0.0, 0.0], [0.0, 3.0, 0.0]],
            vec![[0, 1, 2]],
        )
        .unwrap();
        let third = 1.0 / 3.0;
        let p = mesh
            .surface_point_position(&SurfacePoint::new(0, [third, third, third]).unwrap())
            .unwrap();
        for (got, want) in p.iter().zip([1.0, 1.0, 0.0]) {
            assert!((got - want).abs() < 1e-12);
        }
    }

    #[test]
    fn surface_point_edge_midpoint() {
        let mesh = two_triangle_square();
        let p = mesh
            .surface_point_position(&SurfacePoint::new(0, [0.5, 0.5, 0.0]).unwrap())
            .unwrap();
        assert_eq!(p, [0.5, 0.0, 0.0]);
    }

    #[test]
    fn bad_barycentric_is_rejected() {
        assert!(SurfacePoint::new(0, [0.6, 0.6, 0.0]).is_err());
        assert!(SurfacePoint::new(0, [-0.2, 0.6, 0.6]).is_err());
        let mesh = two_triangle_square();
        assert!(mesh
            .surface_point_position(&SurfacePoint { face: 7, bary: [1.0, 0.0, 0.0] })
            .is_err());
    }
}
