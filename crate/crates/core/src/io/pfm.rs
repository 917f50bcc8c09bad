//! Portable float maps.
//!
//! `PF` holds 3 channels, `Pf` one. The scale line is always `-1.0`
//! (little-endian payload), and scanlines run bottom-to-top as the format
//! prescribes. Payload bytes pass through `to_bits`/`from_bits`, so values —
//! including NaN sentinels — round-trip bitwise.

use std::io::{BufWriter, Read, Write};
use std::path::Path;

use crate::grid::Raster;

use super::IoError;

pub fn write_pfm(path: impl AsRef<Path>, raster: &Raster<f32>) -> Result<(), IoError> {
    let path = path.as_ref();
    let c = raster.channels();
    assert!(c == 1 || c == 3, "pfm stores 1 or 3 channels, got {c}");
    let mut out = BufWriter::new(std::fs::File::create(path)?);
    let tag = if c == 3 { "PF" } else { "Pf" };
    write!(out, "{tag}\n{} {}\n-1.0\n", raster.width(), raster.height())?;
    let (w, h) = (raster.width(), raster.height());
    for y in (0..h).rev() {
        for x in 0..w {
            for v in raster.px(x, y) {
                out.write_all(&v.to_le_bytes())?;
            }
        }
    }
    out.flush()?;
    Ok(())
}

pub fn read_pfm(path: impl AsRef<Path>) -> Result<Raster<f32>, IoError> {
    let path = path.as_ref();
    let pstr = path.display().to_string();
    let mut bytes = Vec::new();
    std::fs::File::open(path)?.read_to_end(&mut bytes)?;
    let bad = |msg: &str| IoError::BadHeader { format: "pfm", path: pstr.clone(), msg: msg.into() };

    // Header: three whitespace-terminated tokens.
    let mut pos = 0usize;
    let mut token = || -> Result<String, IoError> {
        while pos < bytes.len() && bytes[pos].is_ascii_whitespace() {
            pos += 1;
        }
        let start = pos;
        while pos < bytes.len() && !bytes[pos].is_ascii_whitespace() {
            pos += 1;
        }
        if start == pos {
            return Err(IoError::BadHeader {
                format: "pfm",
                path: pstr.clone(),
                msg: "truncated header".into(),
            });
        }
        let tok = String::from_utf8_lossy(&bytes[start..pos]).into_owned();
        pos += 1; // single whitespace after each token
        Ok(tok)
    };

    let tag = token()?;
    let channels = match tag.as_str() {
        "PF" => 3,
        "Pf" => 1,
        other => return Err(bad(&format!("unknown tag `{other}`"))),
    };
    let width: usize = token()?.parse().map_err(|_| bad("bad width"))?;
    let height: usize = token()?.parse().map_err(|_| bad("bad height"))?;
    let scale: f64 = token()?.parse().map_err(|_| bad("bad scale"))?;
    if scale >= 0.0 {
        return Err(bad("big-endian payloads are not supported (scale must be negative)"));
    }

    let wanted = width * height * channels * 4;
    if bytes.len() < pos + wanted {
        return Err(IoError::Truncated { format: "pfm", path: pstr, wanted });
    }
    let mut raster = Raster::filled(width, height, channels, 0.0f32);
    let mut off = pos;
    for y in (0..height).rev() {
        for x in 0..width {
            let px = raster.px_mut(x, y);
            for v in px.iter_mut() {
                *v = f32::from_le_bytes([bytes[off], bytes[off + 1], bytes[off + 2], bytes[off + 3]]);
                off += 4;
            }
        }
    }
    Ok(raster)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip_is_bitwise_including_nan() {
        let dir = std::env::temp_dir().join("gpsfeat_pfm_test");
        std::fs::create_dir_all(&dir).unwrap();
        let path = dir.join("t.pfm");
        let mut r = Raster::filled(3, 2, 1, 0.0f32);
        r.set(0, 0, 0, 1.5);
        r.set(1, 0, 0, -2.25e-3);
        r.set(2, 1, 0, f32::NAN);
        r.set(0, 1, 0, f32::INFINITY);
        write_pfm(&path, &r).unwrap();
        let back = read_pfm(&path).unwrap();
        assert_eq!(back.width(), 3);
        assert_eq!(back.height(), 2);
        for (a, b) in r.data().iter().zip(back.data()) {
            assert_eq!(a.to_bits(), b.to_bits());
        }
    }

    #[test]
    fn three_channel_round_trip() {
        let dir = std::env::temp_dir().join("gpsfeat_pfm_test");
        std::fs::create_dir_all(&dir).unwrap();
        let path = dir.join("rgb.pfm");
        let data: Vec<f32> = (0..24).map(|i| i as f32 * 0.1).collect();
        let r = Raster::from_vec(4, 2, 3, data);
        write_pfm(&path, &r).unwrap();
        let back = read_pfm(&path).unwrap();
        assert_eq!(back, r);
    }

    #[test]
    fn rejects_garbage() {
        let dir = std::env::temp_dir().join("gpsfeat_pfm_test");
        std::fs::create_dir_all(&dir).unwrap();
        let path = dir.join("bad.pfm");
        std::fs::write(&path, b"P6\n2 2\n255\n").unwrap();
        assert!(read_pfm(&path).is_err());
    }
}
