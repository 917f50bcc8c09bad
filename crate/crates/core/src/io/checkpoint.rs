//! Network weight files.
//!
//! Layout, all little-endian: magic `GPSW`, u32 version, u32 tensor count,
//! then per tensor: u32 name length, name bytes, u32 rank, u32 dims, float32
//! payload.

use std::io::{BufWriter, Read, Write};
use std::path::Path;

use super::IoError;

pub const CHECKPOINT_MAGIC: &[u8; 4] = b"GPSW";
pub const CHECKPOINT_VERSION: u32 = 1;

/// A named tensor as stored in a checkpoint.
#[derive(Debug, Clone, PartialEq)]
pub struct NamedTensor {
    pub name: String,
    pub dims: Vec<u32>,
    pub data: Vec<f32>,
}

pub fn write_checkpoint(path: impl AsRef<Path>, tensors: &[NamedTensor]) -> Result<(), IoError> {
    let mut out = BufWriter::new(std::fs::File::create(path)?);
    out.write_all(CHECKPOINT_MAGIC)?;
    out.write_all(&CHECKPOINT_VERSION.to_le_bytes())?;
    out.write_all(&(tensors.len() as u32).to_le_bytes())?;
    for t in tensors {
        let expected: usize = t.dims.iter().map(|&d| d as usize).product();
        assert_eq!(expected, t.data.len(), "tensor `{}` dims/payload mismatch", t.name);
        out.write_all(&(t.name.len() as u32).to_le_bytes())?;
        out.write_all(t.name.as_bytes())?;
        out.write_all(&(t.dims.len() as u32).to_le_bytes())?;
        for &d in &t.dims {
            out.write_all(&d.to_le_bytes())?;
        }
        for v in &t.data {
            out.write_all(&v.to_le_bytes())?;
        }
    }
    out.flush()?;
    Ok(())
}

pub fn read_checkpoint(path: impl AsRef<Path>) -> Result<Vec<NamedTensor>, IoError> {
    let pstr = path.as_ref().display().to_string();
    let mut bytes = Vec::new();
    std::fs::File::open(path.as_ref())?.read_to_end(&mut bytes)?;
    let mut pos = 0usize;
    let take = |pos: &mut usize, n: usize| -> Result<&[u8], IoError> {
        if *pos + n > bytes.len() {
            return Err(IoError::Truncated { format: "checkpoint", path: pstr.clone(), wanted: n });
        }
        let s = &bytes[*pos..*pos + n];
        *pos += n;
        Ok(s)
    };
    let u32_at = |pos: &mut usize| -> Result<u32, IoError> {
        Ok(u32::from_le_bytes(take(pos, 4)?.try_into().unwrap()))
    };

    if take(&mut pos, 4)? != CHECKPOINT_MAGIC {
        return Err(IoError::BadHeader {
            format: "checkpoint",
            path: pstr,
            msg: "magic is not GPSW".into(),
        });
    }
    let version = u32_at(&mut pos)?;
    if version != CHECKPOINT_VERSION {
        return Err(IoError::BadHeader {
            format: "checkpoint",
            path: pstr,
            msg: format!("unsupported version {version}"),
        });
    }
    let count = u32_at(&mut pos)? as usize;
    let mut tensors = Vec::with_capacity(count);
    for _ in 0..count {
        let name_len = u32_at(&mut pos)? as usize;
        let name = String::from_utf8_lossy(take(&mut pos, name_len)?).into_owned();
        let rank = u32_at(&mut pos)? as usize;
        let mut dims = Vec::with_capacity(rank);
        for _ in 0..rank {
            dims.push(u32_at(&mut pos)?);
        }
        let len: usize = dims.iter().map(|&d| d as usize).product();
        let payload = take(&mut pos, len * 4)?;
        let data: Vec<f32> = payload
            .chunks_exact(4)
            .map(|c| f32::from_le_bytes(c.try_into().unwrap()))
            .collect();
        tensors.push(NamedTensor { name, dims, data });
    }
    Ok(tensors)
}
