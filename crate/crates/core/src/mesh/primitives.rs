//! Procedural test meshes: planar grids and icospheres.
//!
//! These double as analytic fixtures: on a flat mesh the geodesic distance is
//! the Euclidean distance, and on a subdivided icosphere it converges to the
//! great-circle arc.

use std::collections::HashMap;

use super::TriangleMesh;

/// The unit square as two triangles in the z = 0 plane.
pub fn unit_square() -> TriangleMesh {
    TriangleMesh::new(
        vec![[0.0, 0.0, 0.0], [1.0, 0.0, 0.0], [1.0, 1.0, 0.0], [0.0, 1.0, 0.0]],
        vec![[0, 1, 2], [0, 2, 3]],
    )
    .unwrap()
}

/// The unit square as an `n` x `n` grid of quads, each split into two
/// triangles. Vertex `(i, j)` sits at `(i/n, j/n, 0)`.
pub fn grid_plane(n: usize) -> TriangleMesh {
    assert!(n >= 1);
    let mut positions = Vec::with_capacity((n + 1) * (n + 1));
    for j in 0..=n {
        for i in 0..=n {
            positions.push([i as f64 / n as f64, j as f64 / n as f64, 0.0]);
        }
    }
    let idx = |i: usize, j: usize| (j * (n + 1) + i) as u32;
    let mut faces = Vec::with_capacity(2 * n * n);
    for j in 0..n {
        for i in 0..n {
            faces.push([idx(i, j), idx(i + 1, j), idx(i + 1, j + 1)]);
            faces.push([idx(i, j), idx(i + 1, j + 1), idx(i, j + 1)]);
        }
    }
    TriangleMesh::new(positions, faces).unwrap()
}

/// An icosphere with `subdiv` rounds of 4-to-1 triangle subdivision,
/// vertices projected onto the sphere of the given radius.
///
/// Counts follow `10 * 4^subdiv + 2` vertices and `20 * 4^subdiv` faces.
pub fn icosphere(subdiv: u32, radius: f64) -> TriangleMesh {
    let phi = (1.0 + 5.0f64.sqrt()) / 2.0;
    let mut positions: Vec<[f64; 3]> = vec![
        [-1.0, phi, 0.0], [1.0, phi, 0.0], [-1.0, -phi, 0.0], [1.0, -phi, 0.0],
        [0.0, -1.0, phi], [0.0, 1.0, phi], [0.0, -1.0, -phi], [0.0, 1.0, -phi],
        [phi, 0.0, -1.0], [phi, 0.0, 1.0], [-phi, 0.0, -1.0], [-phi, 0.0, 1.0],
    ];
    let mut faces: Vec<[u32; 3]> = vec![
        [0, 11, 5], [0, 5, 1], [0, 1, 7], [0, 7, 10], [0, 10, 11],
        [1, 5, 9], [5, 11, 4], [11, 10, 2], [10, 7, 6], [7, 1, 8],
        [3, 9, 4], [3, 4, 2], [3, 2, 6], [3, 6, 8], [3, 8, 9],
        [4, 9, 5], [2, 4, 11], [6, 2, 10], [8, 6, 7], [9, 8, 1],
    ];

    for _ in 0..subdiv {
        let mut midpoint: HashMap<(u32, u32), u32> = HashMap::new();
        let mut next_faces = Vec::with_capacity(faces.len() * 4);
        for f in &faces {
            let mut mids = [0u32; 3];
            for k in 0..3 {
                let (a, b) = (f[k], f[(k + 1) % 3]);
                let key = (a.min(b), a.max(b));
                mids[k] = *midpoint.entry(key).or_insert_with(|| {
                    let pa = positions[a as usize];
                    let pb = positions[b as usize];
                    positions.push([
                        0.5 * (pa[0] + pb[0]),
                        0.5 * (pa[1] + pb[1]),
                        0.5 * (pa[2] + pb[2]),
                    ]);
                    (positions.len() - 1) as u32
                });
            }
            next_faces.push([f[0], mids[0], mids[2]]);
            next_faces.push([f[1], mids[1], mids[0]]);
            next_faces.push([f[2], mids[2], mids[1]]);
            next_faces.push([mids[0], mids[1], mids[2]]);
        }
        faces = next_faces;
    }

    for p in &mut positions {
        let l = (p[0] * p[0] + p[1] * p[1] + p[2] * p[2]).sqrt();
        *p = [p[0] / l * radius, p[1] / l * radius, p[2] / l * radius];
    }
    TriangleMesh::new(positions, faces).unwrap()
}

/// Index of the vertex farthest (Euclidean) from vertex `v`; on an icosphere
/// this is the antipodal vertex.
pub fn farthest_vertex(mesh: &TriangleMesh, v: u32) -> u32 {
    let p = mesh.position(v);
    let mut best = (0u32, -1.0f64);
    for (i, q) in mesh.positions().iter().enumerate() {
        let d2 = (0..3).map(|k| (q[k] - p[k]) * (q[k] - p[k])).sum::<f64>();
        if d2 > best.1 {
            best = (i as u32, d2);
        }
    }
    best.0
}
