//! The plain-text mesh format.
//!
//! A strict subset of the common OBJ convention:
//!
//! ```text
//! v x y z
//! vt u v
//! f i/ti j/tj k/tk     (or `f i j k` when the mesh has no uvs)
//! ```
//!
//! Indices are 1-based. The writer emits exactly this subset; the loader
//! additionally skips blank lines and `#` comments.

use std::fmt::Write as _;
use std::path::Path;

use super::{MeshError, TriangleMesh};

/// Loads a mesh, enforcing every [`TriangleMesh`] invariant.
pub fn load_mesh(path: impl AsRef<Path>) -> Result<TriangleMesh, MeshError> {
    let text = std::fs::read_to_string(path)?;
    parse_mesh(&text)
}

/// Parses the text form of a mesh (see module docs for the grammar).
pub fn parse_mesh(text: &str) -> Result<TriangleMesh, MeshError> {
    let mut positions: Vec<[f64; 3]> = Vec::new();
    let mut uvs: Vec<[f32; 2]> = Vec::new();
    let mut faces: Vec<[u32; 3]> = Vec::new();
    let mut face_uvs: Vec<[u32; 3]> = Vec::new();

    for (lineno, raw) in text.lines().enumerate() {
        let line = lineno + 1;
        let l = raw.trim();
        if l.is_empty() || l.starts_with('#') {
            continue;
        }
        let mut parts = l.split_whitespace();
        let tag = parts.next().unwrap();
        let rest: Vec<&str> = parts.collect();
        match tag {
            "v" => {
                if rest.len() != 3 {
                    return Err(MeshError::Parse { line, msg: format!("expected `v x y z`, got `{raw}`") });
                }
                let mut p = [0.0f64; 3];
                for (k, tok) in rest.iter().enumerate() {
                    p[k] = tok.parse().map_err(|e| MeshError::Parse { line, msg: format!("bad coordinate `{tok}`: {e}") })?;
                }
                positions.push(p);
            }
            "vt" => {
                if rest.len() != 2 {
                    return Err(MeshError::Parse { line, msg: format!("expected `vt u v`, got `{raw}`") });
                }
                let u: f32 = rest[0].parse().map_err(|e| MeshError::Parse { line, msg: format!("bad uv `{}`: {e}", rest[0]) })?;
                let v: f32 = rest[1].parse().map_err(|e| MeshError::Parse { line, msg: format!("bad uv `{}`: {e}", rest[1]) })?;
                uvs.push([u, v]);
            }
            "f" => {
                if rest.len() != 3 {
                    return Err(MeshError::Parse { line, msg: format!("expected a triangle `f a b c`, got `{raw}`") });
                }
                let mut vi = [0u32; 3];
                let mut ti = [0u32; 3];
                let mut has_uv = [false; 3];
                for (k, tok) in rest.iter().enumerate() {
                    let mut it = tok.split('/');
                    let v = it.next().unwrap();
                    let v: i64 = v.parse().map_err(|e| MeshError::Parse { line, msg: format!("bad vertex index `{v}`: {e}") })?;
                    if v < 1 {
                        return Err(MeshError::Parse { line, msg: format!("vertex indices are 1-based, got {v}") });
                    }
                    vi[k] = (v - 1) as u32;
                    if let Some(t) = it.next() {
                        if !t.is_empty() {
                            let t: i64 = t.parse().map_err(|e| MeshError::Parse { line, msg: format!("bad uv index `{t}`: {e}") })?;
                            if t < 1 {
                                return Err(MeshError::Parse { line, msg: format!("uv indices are 1-based, got {t}") });
                            }
                            ti[k] = (t - 1) as u32;
                            has_uv[k] = true;
                        }
                    }
                }
                faces.push(vi);
                if has_uv.iter().all(|&b| b) {
                    face_uvs.push(ti);
                } else if has_uv.iter().any(|&b| b) {
                    return Err(MeshError::Parse { line, msg: "face mixes corners with and without uvs".into() });
                }
            }
            _ => {
                return Err(MeshError::Parse { line, msg: format!("unsupported line tag `{tag}`") });
            }
        }
    }

    if !face_uvs.is_empty() && face_uvs.len() != faces.len() {
        return Err(MeshError::UvCoverage { got: face_uvs.len(), faces: faces.len() });
    }
    if face_uvs.is_empty() {
        uvs.clear();
    }
    TriangleMesh::with_uvs(positions, faces, uvs, face_uvs)
}

/// Serializes a mesh into the text format.
pub fn mesh_to_string(mesh: &TriangleMesh) -> String {
    let mut out = String::new();
    for p in mesh.positions() {
        writeln!(out, "v {} {} {}", p[0], p[1], p[2]).unwrap();
    }
    for t in mesh.uvs() {
        writeln!(out, "vt {} {}", t[0], t[1]).unwrap();
    }
    if mesh.has_uvs() {
        for (f, t) in mesh.faces().iter().zip(mesh.face_uvs()) {
            writeln!(
                out,
                "f {}/{} {}/{} {}/{}",
                f[0] + 1, t[0] + 1, f[1] + 1, t[1] + 1, f[2] + 1, t[2] + 1
            )
            .unwrap();
        }
    } else {
        for f in mesh.faces() {
            writeln!(out, "f {} {} {}", f[0] + 1, f[1] + 1, f[2] + 1).unwrap();
        }
    }
    out
}

/// Writes a mesh to disk in the text format.
pub fn save_mesh(path: impl AsRef<Path>, mesh: &TriangleMesh) -> Result<(), MeshError> {
    std::fs::write(path, mesh_to_string(mesh))?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn unit_square_round_trips() {
        let text = "v 0 0 0\nv 1 0 0\nv 1 1 0\nv 0 1 0\nf 1 2 3\nf 1 3 4\n";
        let mesh = parse_mesh(text).unwrap();
        assert_eq!(mesh.vertex_count(), 4);
        assert_eq!(mesh.face_count(), 2);
        let again = parse_mesh(&mesh_to_string(&mesh)).unwrap();
        assert_eq!(again.positions(), mesh.positions());
        assert_eq!(again.faces(), mesh.faces());
    }

    #[test]
    fn uv_faces_round_trip() {
        let text = "v 0 0 0\nv 1 0 0\nv 0 1 0\nvt 0 0\nvt 1 0\nvt 0 1\nf 1/1 2/2 3/3\n";
        let mesh = parse_mesh(text).unwrap();
        assert!(mesh.has_uvs());
        let again = parse_mesh(&mesh_to_string(&mesh)).unwrap();
        assert_eq!(again.uvs(), mesh.uvs());
        assert_eq!(again.face_uvs(), mesh.face_uvs());
    }

    #[test]
    fn out_of_range_face_index_is_an_error() {
        let text = "v 0 0 0\nv 1 0 0\nv 0 1 0\nv 1 1 0\nf 1 2 100\n";
        let err = parse_mesh(text).unwrap_err();
        assert!(matches!(err, MeshError::VertexIndexOutOfRange { index: 99, .. }));
    }

    #[test]
    fn garbage_is_a_parse_error() {
        assert!(matches!(parse_mesh("v 1 2\n"), Err(MeshError::Parse { line: 1, .. })));
        assert!(matches!(parse_mesh("vn 1 2 3\n"), Err(MeshError::Parse { .. })));
        assert!(matches!(parse_mesh("v a b c\n"), Err(MeshError::Parse { .. })));
    }
}
