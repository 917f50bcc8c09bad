//! Optical-flow files: magic float 202021.25, i32 width, i32 height, then
//! row-major float32 `(dx, dy)` pairs. Fields store offsets `target - pixel`
//! (pixel centers); pixels without a defined correspondence carry
//! [`INVALID_FLOW`], the conventional huge sentinel — validity masks are the
//! authoritative record.

use std::io::{BufWriter, Read, Write};
use std::path::Path;

use crate::grid::Raster;

use super::IoError;

pub const FLO_MAGIC: f32 = 202021.25;

/// Offset written for pixels with no defined correspondence.
pub const INVALID_FLOW: f32 = 1e9;

/// Writes a two-channel offset raster.
pub fn write_flo(path: impl AsRef<Path>, flow: &Raster<f32>) -> Result<(), IoError> {
    assert_eq!(flow.channels(), 2, "flow rasters carry (dx, dy)");
    let mut out = BufWriter::new(std::fs::File::create(path)?);
    out.write_all(&FLO_MAGIC.to_le_bytes())?;
    out.write_all(&(flow.width() as i32).to_le_bytes())?;
    out.write_all(&(flow.height() as i32).to_le_bytes())?;
    for v in flow.data() {
        out.write_all(&v.to_le_bytes())?;
    }
    out.flush()?;
    Ok(())
}

pub fn read_flo(path: impl AsRef<Path>) -> Result<Raster<f32>, IoError> {
    let pstr = path.as_ref().display().to_string();
    let mut bytes = Vec::new();
    std::fs::File::open(path.as_ref())?.read_to_end(&mut bytes)?;
    if bytes.len() < 12 {
        return Err(IoError::Truncated { format: "flo", path: pstr, wanted: 12 });
    }
    let magic = f32::from_le_bytes(bytes[0..4].try_into().unwrap());
    if magic != FLO_MAGIC {
        return Err(IoError::BadHeader {
            format: "flo",
            path: pstr,
            msg: format!("magic {magic} != {FLO_MAGIC}"),
        });
    }
    let width = i32::from_le_bytes(bytes[4..8].try_into().unwrap());
    let height = i32::from_le_bytes(bytes[8..12].try_into().unwrap());
    if width <= 0 || height <= 0 {
        return Err(IoError::BadHeader {
            format: "flo",
            path: pstr,
            msg: format!("bad dimensions {width}x{height}"),
        });
    }
    let (w, h) = (width as usize, height as usize);
    let wanted = w * h * 2 * 4;
    if bytes.len() < 12 + wanted {
        return Err(IoError::Truncated { format: "flo", path: pstr, wanted });
    }
    let mut data = Vec::with_capacity(w * h * 2);
    for chunk in bytes[12..12 + wanted].chunks_exact(4) {
        data.push(f32::from_le_bytes(chunk.try_into().unwrap()));
    }
    Ok(Raster::from_vec(w, h, 2, data))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip_and_magic() {
        let dir = std::env::temp_dir().join("gpsfeat_flo_test");
        std::fs::create_dir_all(&dir).unwrap();
        let path = dir.join("t.flo");
        let data: Vec<f32> = vec![0.5, -1.0, INVALID_FLOW, INVALID_FLOW, 3.25, 4.0, 0.0, 0.0];
        let flow = Raster::from_vec(2, 2, 2, data);
        write_flo(&path, &flow).unwrap();
        let bytes = std::fs::read(&path).unwrap();
        assert_eq!(f32::from_le_bytes(bytes[0..4].try_into().unwrap()), 202021.25);
        let back = read_flo(&path).unwrap();
        assert_eq!(back, flow);
    }

    #[test]
    fn rejects_wrong_magic() {
        let dir = std::env::temp_dir().join("gpsfeat_flo_test");
        std::fs::create_dir_all(&dir).unwrap();
        let path = dir.join("bad.flo");
        std::fs::write(&path, 42.0f32.to_le_bytes()).unwrap();
        assert!(read_flo(&path).is_err());
    }
}
