//! Dense 4-D tensors in (batch, channel, height, width) layout.

use crate::error::{NnError, Result};
use crate::scalar::Scalar;

/// (n, c, h, w)
pub type Shape = [usize; 4];

#[derive(Clone, Debug, PartialEq)]
pub struct Tensor<T> {
    shape: Shape,
    data: Vec<T>,
}

impl<T: Scalar> Tensor<T> {
    pub fn new(shape: Shape, data: Vec<T>) -> Result<Self> {
        let expected = shape.iter().product::<usize>();
        if data.len() != expected {
            return Err(NnError::ShapeMismatch {
                context: "Tensor::new",
                expected: format!("{expected} values for shape {shape:?}"),
                got: format!("{} values", data.len()),
            });
        }
        Ok(Self { shape, data })
    }

    pub fn zeros(shape: Shape) -> Self {
        let len = shape.iter().product();
        Self {
            shape,
            data: vec![T::zero(); len],
        }
    }

    pub fn full(shape: Shape, value: T) -> Self {
        let len = shape.iter().product();
        Self {
            shape,
            data: vec![value; len],
        }
    }

    pub fn from_fn(shape: Shape, mut f: impl FnMut(usize, usize, usize, usize) -> T) -> Self {
        let mut t = Self::zeros(shape);
        let [n, c, h, w] = shape;
        let mut idx = 0;
        for bi in 0..n {
            for ci in 0..c {
                for hi in 0..h {
                    for wi in 0..w {
                        t.data[idx] = f(bi, ci, hi, wi);
                        idx += 1;
                    }
                }
            }
        }
        t
    }

    #[inline]
    pub fn shape(&self) -> Shape {
        self.shape
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.shape[0]
    }

    #[inline]
    pub fn c(&self) -> usize {
        self.shape[1]
    }

    #[inline]
    pub fn h(&self) -> usize {
        self.shape[2]
    }

    #[inline]
    pub fn w(&self) -> usize {
        self.shape[3]
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.data.len()
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.data.is_empty()
    }

    #[inline]
    pub fn idx(&self, n: usize, c: usize, h: usize, w: usize) -> usize {
        ((n * self.shape[1] + c) * self.shape[2] + h) * self.shape[3] + w
    }

    #[inline]
    pub fn at(&self, n: usize, c: usize, h: usize, w: usize) -> T {
        self.data[self.idx(n, c, h, w)]
    }

    #[inline]
    pub fn set(&mut self, n: usize, c: usize, h: usize, w: usize, v: T) {
        let i = self.idx(n, c, h, w);
        self.data[i] = v;
    }

    #[inline]
    pub fn as_slice(&self) -> &[T] {
        &self.data
    }

    #[inline]
    pub fn as_mut_slice(&mut self) -> &mut [T] {
        &mut self.data
    }

    pub fn map(&self, f: impl Fn(T) -> T) -> Self {
        Self {
            shape: self.shape,
            data: self.data.iter().map(|&v| f(v)).collect(),
        }
    }

    /// One sample's contiguous slice (c*h*w values).
    pub fn sample(&self, n: usize) -> &[T] {
        let stride = self.shape[1] * self.shape[2] * self.shape[3];
        &self.data[n * stride..(n + 1) * stride]
    }

    pub fn sample_mut(&mut self, n: usize) -> &mut [T] {
        let stride = self.shape[1] * self.shape[2] * self.shape[3];
        &mut self.data[n * stride..(n + 1) * stride]
    }

    /// Splits the batch dimension into per-sample mutable slices.
    pub fn samples_mut(&mut self) -> Vec<&mut [T]> {
        let stride = self.shape[1] * self.shape[2] * self.shape[3];
        if stride == 0 {
            return Vec::new();
        }
        self.data.chunks_mut(stride).collect()
    }

    pub fn check_finite(&self, context: &'static str) -> Result<()> {
        if self.data.iter().all(|v| v.is_finite()) {
            Ok(())
        } else {
            Err(NnError::NonFinite(context))
        }
    }

    /// Element-type conversion, used by the weight file reader/writer.
    pub fn cast<U: Scalar>(&self) -> Tensor<U> {
        Tensor {
            shape: self.shape,
            data: self
                .data
                .iter()
                .map(|v| U::from_f64(v.to_f64().unwrap()).unwrap())
                .collect(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn new_rejects_length_mismatch() {
        let err = Tensor::<f32>::new([1, 2, 2, 2], vec![0.0; 7]).unwrap_err();
        let msg = err.to_string();
        assert!(msg.contains("8 values"), "{msg}");
        assert!(msg.contains("7 values"), "{msg}");
    }

    #[test]
    fn indexing_is_row_major() {
        let t = Tensor::<f32>::from_fn([2, 3, 4, 5], |n, c, h, w| {
            (((n * 3 + c) * 4 + h) * 5 + w) as f32
        });
        assert_eq!(t.at(1, 2, 3, 4), (t.len() - 1) as f32);
        assert_eq!(t.at(0, 0, 0, 1), 1.0);
        assert_eq!(t.sample(1).len(), 3 * 4 * 5);
    }

    #[test]
    fn check_finite_catches_nan() {
        let mut t = Tensor::<f64>::zeros([1, 1, 2, 2]);
        t.as_mut_slice()[3] = f64::NAN;
        assert!(t.check_finite("test").is_err());
    }
}
