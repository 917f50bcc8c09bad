//! A plain row-major H x W x C raster. Images, masks, depth maps, geodesic
//! distance images and correspondence fields all live in this container;
//! the autodiff engine has its own tensor type.

/// Row-major grid with `channels` values per pixel.
#[derive(Debug, Clone, PartialEq)]
pub struct Raster<T> {
    width: usize,
    height: usize,
    channels: usize,
    data: Vec<T>,
}

impl<T: Copy> Raster<T> {
    pub fn filled(width: usize, height: usize, channels: usize, value: T) -> Self {
        Self { width, height, channels, data: vec![value; width * height * channels] }
    }

    pub fn from_vec(width: usize, height: usize, channels: usize, data: Vec<T>) -> Self {
        assert_eq!(data.len(), width * height * channels, "raster data length mismatch");
        Self { width, height, channels, data }
    }

    #[inline]
    pub fn width(&self) -> usize {
        self.width
    }

    #[inline]
    pub fn height(&self) -> usize {
        self.height
    }

    #[inline]
    pub fn channels(&self) -> usize {
        self.channels
    }

    #[inline]
    pub fn data(&self) -> &[T] {
        &self.data
    }

    #[inline]
    pub fn data_mut(&mut self) -> &mut [T] {
        &mut self.data
    }

    pub fn into_data(self) -> Vec<T> {
        self.data
    }

    #[inline]
    pub fn idx(&self, x: usize, y: usize) -> usize {
        debug_assert!(x < self.width && y < self.height);
        (y * self.width + x) * self.channels
    }

    #[inline]
    pub fn px(&self, x: usize, y: usize) -> &[T] {
        let i = self.idx(x, y);
        &self.data[i..i + self.channels]
    }

    #[inline]
    pub fn px_mut(&mut self, x: usize, y: usize) -> &mut [T] {
        let i = self.idx(x, y);
        let c = self.channels;
        &mut self.data[i..i + c]
    }

    #[inline]
    pub fn get(&self, x: usize, y: usize, c: usize) -> T {
        self.data[self.idx(x, y) + c]
    }

    #[inline]
    pub fn set(&mut self, x: usize, y: usize, c: usize, v: T) {
        let i = self.idx(x, y) + c;
        self.data[i] = v;
    }

    pub fn pixel_count(&self) -> usize {
        self.width * self.height
    }

    /// Nearest-neighbor downsample by an integer stride, sampling the
    /// top-left corner of each block.
    pub fn downsample_nearest(&self, stride: usize) -> Raster<T> {
        assert!(stride >= 1 && self.width % stride == 0 && self.height % stride == 0);
        let (w, h, c) = (self.width / stride, self.height / stride, self.channels);
        let mut out = Vec::with_capacity(w * h * c);
        for y in 0..h {
            for x in 0..w {
                out.extend_from_slice(self.px(x * stride, y * stride));
            }
        }
        Raster::from_vec(w, h, c, out)
    }
}

impl Raster<f32> {
    /// Bilinear sample at continuous coordinates where pixel `(i, j)` is
    /// centered at `(i + 0.5, j + 0.5)`; coordinates clamp to the border.
    pub fn sample_bilinear(&self, x: f32, y: f32, out: &mut [f32]) {
        let u = x - 0.5;
        let v = y - 0.5;
        let x0 = u.floor();
        let y0 = v.floor();
        let fx = u - x0;
        let fy = v - y0;
        let clamp_x = |i: i64| i.clamp(0, self.width as i64 - 1) as usize;
        let clamp_y = |i: i64| i.clamp(0, self.height as i64 - 1) as usize;
        let (x0i, x1i) = (clamp_x(x0 as i64), clamp_x(x0 as i64 + 1));
        let (y0i, y1i) = (clamp_y(y0 as i64), clamp_y(y0 as i64 + 1));
        let w00 = (1.0 - fx) * (1.0 - fy);
        let w10 = fx * (1.0 - fy);
        let w01 = (1.0 - fx) * fy;
        let w11 = fx * fy;
        let (p00, p10, p01, p11) =
            (self.px(x0i, y0i), self.px(x1i, y0i), self.px(x0i, y1i), self.px(x1i, y1i));
        for c in 0..self.channels {
            out[c] = w00 * p00[c] + w10 * p10[c] + w01 * p01[c] + w11 * p11[c];
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn indexing_round_trips() {
        let mut r = Raster::filled(4, 3, 2, 0.0f32);
        r.set(2, 1, 1, 7.5);
        assert_eq!(r.get(2, 1, 1), 7.5);
        assert_eq!(r.px(2, 1), &[0.0, 7.5]);
    }

    #[test]
    fn bilinear_at_pixel_centers_is_exact() {
        let r = Raster::from_vec(2, 2, 1, vec![1.0f32, 2.0, 3.0, 4.0]);
        let mut out = [0.0f32];
        r.sample_bilinear(0.5, 0.5, &mut out);
        assert_eq!(out[0], 1.0);
        r.sample_bilinear(1.5, 1.5, &mut out);
        assert_eq!(out[0], 4.0);
        // Halfway between the four centers.
        r.sample_bilinear(1.0, 1.0, &mut out);
        assert_eq!(out[0], 2.5);
    }

    #[test]
    fn downsample_takes_block_corners() {
        let r = Raster::from_vec(4, 2, 1, vec![0.0f32, 1.0, 2.0, 3.0, 4.0, 5.0, 6.0, 7.0]);
        let d = r.downsample_nearest(2);
        assert_eq!(d.data(), &[0.0, 2.0]);
    }
}
