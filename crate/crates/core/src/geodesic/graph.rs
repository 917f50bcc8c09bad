//! Upper-bound geodesics on a Steiner-augmented edge graph.
//!
//! Nodes are the mesh vertices plus `k` uniformly spaced points on every
//! edge; within each face all boundary nodes are completely connected with
//! Euclidean weights. Every path in this graph lies on the surface, so
//! Dijkstra distances always bound the exact geodesic from above, and they
//! tighten as `k` grows. The `k = 0` vertex graph is a subgraph of every
//! augmented graph, so distances never exceed the `k = 0` values.

use std::cmp::Ordering;
use std::collections::BinaryHeap;

use crate::mesh::math::dist3;
use crate::mesh::{SurfacePoint, TriangleMesh};

use super::{GeodesicError, GeodesicField, GeodesicMethod, Topology};

/// Steiner-graph single-source distances.
pub fn geodesic_field_graph(
    mesh: &TriangleMesh,
    source: &SurfacePoint,
    steiner_k: u32,
) -> Result<GeodesicField, GeodesicError> {
    mesh.check_surface_point(source)?;
    let topo = Topology::build(mesh);
    let k = steiner_k as usize;
    let nv = mesh.vertex_count();
    let n_nodes = nv + topo.edges.len() * k;

    // Node positions: vertices first, then k interior points per edge at
    // params j/(k+1).
    let mut pos: Vec<[f64; 3]> = Vec::with_capacity(n_nodes);
    pos.extend_from_slice(mesh.positions());
    for e in &topo.edges {
        let p0 = mesh.position(e.v[0]);
        let p1 = mesh.position(e.v[1]);
        for j in 1..=k {
            let t = j as f64 / (k + 1) as f64;
            pos.push([
                p0[0] + t * (p1[0] - p0[0]),
                p0[1] + t * (p1[1] - p0[1]),
                p0[2] + t * (p1[2] - p0[2]),
            ]);
        }
    }

    let edge_nodes = |edge: u32| -> Vec<u32> {
        let e = &topo.edges[edge as usize];
        let mut nodes = Vec::with_capacity(2 + k);
        nodes.push(e.v[0]);
        nodes.push(e.v[1]);
        let base = nv + edge as usize * k;
        nodes.extend((0..k).map(|j| (base + j) as u32));
        nodes
    };

    // Complete connections among each face's boundary nodes.
    let mut adj: Vec<Vec<(u32, f64)>> = vec![Vec::new(); n_nodes];
    for fi in 0..mesh.face_count() as u32 {
        let mut nodes: Vec<u32> = Vec::with_capacity(3 * (k + 1));
        let fverts = mesh.face(fi);
        nodes.extend_from_slice(&fverts);
        for &e in &topo.face_edges[fi as usize] {
            let base = nv + e as usize * k;
            nodes.extend((0..k).map(|j| (base + j) as u32));
        }
        for i in 0..nodes.len() {
            for j in (i + 1)..nodes.len() {
                let (a, b) = (nodes[i], nodes[j]);
                let w = dist3(pos[a as usize], pos[b as usize]);
                adj[a as usize].push((b, w));
                adj[b as usize].push((a, w));
            }
        }
    }

    // Dijkstra, seeded either at a vertex node or from a virtual source
    // connected to every node of the source face.
    let mut dist = vec![f64::INFINITY; n_nodes];
    let mut heap: BinaryHeap<Entry> = BinaryHeap::new();
    if let Some(corner) = (0..3).find(|&c| source.bary[c] > 1.0 - 1e-12) {
        let v = mesh.face(source.face)[corner];
        dist[v as usize] = 0.0;
        heap.push(Entry { d: 0.0, node: v });
    } else {
        let p = mesh.surface_point_position(source).expect("validated");
        let mut seeds: Vec<u32> = Vec::new();
        let fverts = mesh.face(source.face);
        seeds.extend_from_slice(&fverts);
        for &e in &topo.face_edges[source.face as usize] {
            seeds.extend(edge_nodes(e).into_iter().skip(2));
        }
        for s in seeds {
            let d = dist3(p, pos[s as usize]);
            if d < dist[s as usize] {
                dist[s as usize] = d;
                heap.push(Entry { d, node: s });
            }
        }
    }

    while let Some(Entry { d, node }) = heap.pop() {
        if d > dist[node as usize] {
            continue;
        }
        for &(next, w) in &adj[node as usize] {
            let nd = d + w;
            if nd < dist[next as usize] {
                dist[next as usize] = nd;
                heap.push(Entry { d: nd, node: next });
            }
        }
    }

    dist.truncate(nv);
    Ok(GeodesicField {
        source: *source,
        vertex_distance: dist,
        method: GeodesicMethod::Graph { steiner_k },
    })
}

struct Entry {
    d: f64,
    node: u32,
}

impl PartialEq for Entry {
    fn eq(&self, other: &Self) -> bool {
        self.d == other.d && self.node == other.node
    }
}
impl Eq for Entry {}
impl PartialOrd for Entry {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}
impl Ord for Entry {
    fn cmp(&self, other: &Self) -> Ordering {
        other
            .d
            .partial_cmp(&self.d)
            .unwrap_or(Ordering::Equal)
            .then_with(|| other.node.cmp(&self.node))
    }
}
