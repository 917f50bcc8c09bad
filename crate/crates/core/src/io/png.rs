//! PNG helpers: 8-bit RGB images from `[0, 1]` float rasters, and 8-bit gray
//! masks (255 = true).

use std::path::Path;

use image::{GrayImage, ImageReader, RgbImage};

use crate::grid::Raster;

use super::IoError;

fn to_io(e: image::ImageError, path: &Path) -> IoError {
    IoError::Other(format!("{}: {e}", path.display()))
}

/// Saves a 3-channel raster of `[0, 1]` floats as 8-bit RGB.
pub fn write_rgb(path: impl AsRef<Path>, raster: &Raster<f32>) -> Result<(), IoError> {
    assert_eq!(raster.channels(), 3);
    let (w, h) = (raster.width() as u32, raster.height() as u32);
    let mut img = RgbImage::new(w, h);
    for (i, px) in img.pixels_mut().enumerate() {
        let src = &raster.data()[i * 3..i * 3 + 3];
        for c in 0..3 {
            px.0[c] = (src[c].clamp(0.0, 1.0) * 255.0).round() as u8;
        }
    }
    img.save(path.as_ref()).map_err(|e| to_io(e, path.as_ref()))
}

/// Loads an 8-bit RGB PNG into a `[0, 1]` float raster.
pub fn read_rgb(path: impl AsRef<Path>) -> Result<Raster<f32>, IoError> {
    let img = ImageReader::open(path.as_ref())?
        .decode()
        .map_err(|e| to_io(e, path.as_ref()))?
        .into_rgb8();
    let (w, h) = (img.width() as usize, img.height() as usize);
    let mut data = Vec::with_capacity(w * h * 3);
    for px in img.pixels() {
        data.extend(px.0.iter().map(|&v| v as f32 / 255.0));
    }
    Ok(Raster::from_vec(w, h, 3, data))
}

/// Saves a boolean raster as an 8-bit gray mask (255 = true).
pub fn write_mask(path: impl AsRef<Path>, mask: &Raster<bool>) -> Result<(), IoError> {
    assert_eq!(mask.channels(), 1);
    let (w, h) = (mask.width() as u32, mask.height() as u32);
    let mut img = GrayImage::new(w, h);
    for (i, px) in img.pixels_mut().enumerate() {
        px.0[0] = if mask.data()[i] { 255 } else { 0 };
    }
    img.save(path.as_ref()).map_err(|e| to_io(e, path.as_ref()))
}

/// Loads an 8-bit gray mask; any value >= 128 counts as true.
pub fn read_mask(path: impl AsRef<Path>) -> Result<Raster<bool>, IoError> {
    let img = ImageReader::open(path.as_ref())?
        .decode()
        .map_err(|e| to_io(e, path.as_ref()))?
        .into_luma8();
    let (w, h) = (img.width() as usize, img.height() as usize);
    let data: Vec<bool> = img.pixels().map(|p| p.0[0] >= 128).collect();
    Ok(Raster::from_vec(w, h, 1, data))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rgb_round_trips_at_8bit_precision() {
        let dir = std::env::temp_dir().join("gpsfeat_png_test");
        std::fs::create_dir_all(&dir).unwrap();
        let path = dir.join("t.png");
        let data: Vec<f32> = (0..2 * 3 * 3).map(|i| (i as f32 * 17.0 % 256.0) / 255.0).collect();
        let r = Raster::from_vec(3, 2, 3, data);
        write_rgb(&path, &r).unwrap();
        let back = read_rgb(&path).unwrap();
        for (a, b) in r.data().iter().zip(back.data()) {
            assert!((a - b).abs() < 0.5 / 255.0 + 1e-6);
        }
    }

    #[test]
    fn masks_round_trip_exactly() {
        let dir = std::env::temp_dir().join("gpsfeat_png_test");
        std::fs::create_dir_all(&dir).unwrap();
        let path = dir.join("m.png");
        let m = Raster::from_vec(4, 1, 1, vec![true, false, true, true]);
        write_mask(&path, &m).unwrap();
        assert_eq!(read_mask(&path).unwrap(), m);
    }
}
