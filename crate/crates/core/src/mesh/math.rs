//! Small 3D vector/matrix helpers shared by the mesh, geodesic, and synth
//! modules. Everything is plain `[f64; 3]` / row-major `[[f64; 3]; 3]`.

pub fn add3(a: [f64; 3], b: [f64; 3]) -> [f64; 3] {
    [a[0] + b[0], a[1] + b[1], a[2] + b[2]]
}

pub fn sub3(a: [f64; 3], b: [f64; 3]) -> [f64; 3] {
    [a[0] - b[0], a[1] - b[1], a[2] - b[2]]
}

pub fn scale3(a: [f64; 3], s: f64) -> [f64; 3] {
    [a[0] * s, a[1] * s, a[2] * s]
}

pub fn dot3(a: [f64; 3], b: [f64; 3]) -> f64 {
    a[0] * b[0] + a[1] * b[1] + a[2] * b[2]
}

pub fn cross3(a: [f64; 3], b: [f64; 3]) -> [f64; 3] {
    [
        a[1] * b[2] - a[2] * b[1],
        a[2] * b[0] - a[0] * b[2],
        a[0] * b[1] - a[1] * b[0],
    ]
}

pub fn norm3(a: [f64; 3]) -> f64 {
    dot3(a, a).sqrt()
}

pub fn dist3(a: [f64; 3], b: [f64; 3]) -> f64 {
    norm3(sub3(a, b))
}

pub fn normalize3(a: [f64; 3]) -> [f64; 3] {
    let l = norm3(a);
    if l == 0.0 {
        return [0.0, 0.0, 0.0];
    }
    scale3(a, 1.0 / l)
}

pub type Mat3 = [[f64; 3]; 3];

pub const IDENTITY3: Mat3 = [[1.0, 0.0, 0.0], [0.0, 1.0, 0.0], [0.0, 0.0, 1.0]];

pub fn mat3_mul(a: Mat3, b: Mat3) -> Mat3 {
    let mut out = [[0.0; 3]; 3];
    for i in 0..3 {
        for j in 0..3 {
            out[i][j] = a[i][0] * b[0][j] + a[i][1] * b[1][j] + a[i][2] * b[2][j];
        }
    }
    out
}

pub fn mat3_apply(m: Mat3, v: [f64; 3]) -> [f64; 3] {
    [dot3(m[0], v), dot3(m[1], v), dot3(m[2], v)]
}

pub fn mat3_transpose(m: Mat3) -> Mat3 {
    [
        [m[0][0], m[1][0], m[2][0]],
        [m[0][1], m[1][1], m[2][1]],
        [m[0][2], m[1][2], m[2][2]],
    ]
}

/// Rotation matrix from a rotation vector (axis * angle), Rodrigues form.
pub fn rotation_from_vector(r: [f64; 3]) -> Mat3 {
    let angle = norm3(r);
    if angle < 1e-12 {
        return IDENTITY3;
    }
    let [x, y, z] = scale3(r, 1.0 / angle);
    let (s, c) = angle.sin_cos();
    let t = 1.0 - c;
    [
        [t * x * x + c, t * x * y - s * z, t * x * z + s * y],
        [t * x * y + s * z, t * y * y + c, t * y * z - s * x],
        [t * x * z - s * y, t * y * z + s * x, t * z * z + c],
    ]
}

/// A rigid transform: `p -> rot * p + trans`.
#[derive(Debug, Clone, Copy)]
pub struct Rigid {
    pub rot: Mat3,
    pub trans: [f64; 3],
}

impl Rigid {
    pub const IDENTITY: Rigid = Rigid { rot: IDENTITY3, trans: [0.0; 3] };

    pub fn new(rot: Mat3, trans: [f64; 3]) -> Self {
        Self { rot, trans }
    }

    pub fn translation(t: [f64; 3]) -> Self {
        Self { rot: IDENTITY3, trans: t }
    }

    pub fn apply(&self, p: [f64; 3]) -> [f64; 3] {
        add3(mat3_apply(self.rot, p), self.trans)
    }

    /// `self ∘ other`: apply `other` first, then `self`.
    pub fn compose(&self, other: &Rigid) -> Rigid {
        Rigid {
            rot: mat3_mul(self.rot, other.rot),
            trans: add3(mat3_apply(self.rot, other.trans), self.trans),
        }
    }

    pub fn inverse(&self) -> Rigid {
        let rt = mat3_transpose(self.rot);
        Rigid { rot: rt, trans: scale3(mat3_apply(rt, self.trans), -1.0) }
    }
}
