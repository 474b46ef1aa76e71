//! Dense row-major tensors.

use crate::error::{Error, Result};
use crate::rng::Rng;
use crate::scalar::Scalar;

/// Dense tensor with a shape and row-major data.
#[derive(Debug, Clone, PartialEq)]
pub struct NDArray<S> {
    shape: Vec<usize>,
    data: Vec<S>,
}

impl<S: Scalar> NDArray<S> {
    pub fn zeros(shape: &[usize]) -> Self {
        let n = shape.iter().product();
        NDArray {
            shape: shape.to_vec(),
            data: vec![S::zero(); n],
        }
    }

    pub fn full(shape: &[usize], value: S) -> Self {
        let n = shape.iter().product();
        NDArray {
            shape: shape.to_vec(),
            data: vec![value; n],
        }
    }

    pub fn from_vec(shape: &[usize], data: Vec<S>) -> Result<Self> {
        let n: usize = shape.iter().product();
        if data.len() != n {
            return Err(Error::InvalidArg(format!(
                "data length {} does not match shape {:?} (expected {})",
                data.len(),
                shape,
                n
            )));
        }
        Ok(NDArray {
            shape: shape.to_vec(),
            data,
        })
    }

    pub fn scalar(value: S) -> Self {
        NDArray {
            shape: vec![],
            data: vec![value],
        }
    }

    pub fn vector(data: Vec<S>) -> Self {
        NDArray {
            shape: vec![data.len()],
            data,
        }
    }

    pub fn matrix(rows: usize, cols: usize, data: Vec<S>) -> Result<Self> {
        Self::from_vec(&[rows, cols], data)
    }

    /// Entries drawn i.i.d. from N(mean, std^2).
    pub fn randn(shape: &[usize], mean: f64, std: f64, rng: &mut Rng) -> Self {
        let n: usize = shape.iter().product();
        let data = (0..n)
            .map(|_| S::from_f64(rng.normal(mean, std)))
            .collect();
        NDArray {
            shape: shape.to_vec(),
            data,
        }
    }

    /// Entries drawn i.i.d. from U[lo, hi).
    pub fn rand_uniform(shape: &[usize], lo: f64, hi: f64, rng: &mut Rng) -> Self {
        let n: usize = shape.iter().product();
        let data = (0..n).map(|_| S::from_f64(rng.uniform(lo, hi))).collect();
        NDArray {
            shape: shape.to_vec(),
            data,
        }
    }

    pub fn shape(&self) -> &[usize] {
        &self.shape
    }

    pub fn numel(&self) -> usize {
        self.data.len()
    }

    pub fn data(&self) -> &[S] {
        &self.data
    }

    pub fn data_mut(&mut self) -> &mut [S] {
        &mut self.data
    }

    pub fn into_data(self) -> Vec<S> {
        self.data
    }

    pub fn is_vector(&self) -> bool {
        self.shape.len() == 1
    }

    pub fn is_matrix(&self) -> bool {
        self.shape.len() == 2
    }

    /// Row count of a matrix, or 1 for a vector treated as a single row.
    pub fn rows(&self) -> usize {
        match self.shape.len() {
            2 => self.shape[0],
            _ => 1,
        }
    }

    /// Column count of a matrix, or the length of a vector.
    pub fn cols(&self) -> usize {
        match self.shape.len() {
            2 => self.shape[1],
            1 => self.shape[0],
            _ => self.data.len(),
        }
    }

    pub fn at2(&self, i: usize, j: usize) -> S {
        debug_assert!(self.is_matrix());
        self.data[i * self.shape[1] + j]
    }

    pub fn row(&self, i: usize) -> &[S] {
        let c = self.cols();
        &self.data[i * c..(i + 1) * c]
    }

    pub fn row_mut(&mut self, i: usize) -> &mut [S] {
        let c = self.cols();
        &mut self.data[i * c..(i + 1) * c]
    }

    pub fn all_finite(&self) -> bool {
        self.data.iter().all(|x| x.is_finite())
    }

    /// Same data reinterpreted under a new shape with equal element count.
    pub fn reshaped(&self, shape: &[usize]) -> Result<Self> {
        let n: usize = shape.iter().product();
        if n != self.data.len() {
            return Err(Error::shape("reshape", &self.shape, shape));
        }
        Ok(NDArray {
            shape: shape.to_vec(),
            data: self.data.clone(),
        })
    }

    /// Elementwise conversion to another scalar type.
    pub fn cast<T: Scalar>(&self) -> NDArray<T> {
        NDArray {
            shape: self.shape.clone(),
            data: self.data.iter().map(|x| T::from_f64(x.to_f64())).collect(),
        }
    }
}

/// Boolean mask with the same row-major layout as [`NDArray`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoolMask {
    shape: Vec<usize>,
    data: Vec<bool>,
}

impl BoolMask {
    pub fn from_vec(shape: &[usize], data: Vec<bool>) -> Result<Self> {
        let n: usize = shape.iter().product();
        if data.len() != n {
            return Err(Error::InvalidArg(format!(
                "mask length {} does not match shape {:?}",
                data.len(),
                shape
            )));
        }
        Ok(BoolMask {
            shape: shape.to_vec(),
            data,
        })
    }

    pub fn vector(data: Vec<bool>) -> Self {
        BoolMask {
            shape: vec![data.len()],
            data,
        }
    }

    pub fn all_true(shape: &[usize]) -> Self {
        let n = shape.iter().product();
        BoolMask {
            shape: shape.to_vec(),
            data: vec![true; n],
        }
    }

    /// Mask of shape [rows, cols] where row i has `lens[i]` leading trues.
    pub fn prefixes(rows: usize, cols: usize, lens: &[usize]) -> Self {
        debug_assert_eq!(lens.len(), rows);
        let mut data = vec![false; rows * cols];
        for (i, &len) in lens.iter().enumerate() {
            debug_assert!(len <= cols);
            for v in &mut data[i * cols..i * cols + len] {
                *v = true;
            }
        }
        BoolMask {
            shape: vec![rows, cols],
            data,
        }
    }

    pub fn shape(&self) -> &[usize] {
        &self.shape
    }

    pub fn data(&self) -> &[bool] {
        &self.data
    }

    pub fn rows(&self) -> usize {
        match self.shape.len() {
            2 => self.shape[0],
            _ => 1,
        }
    }

    pub fn cols(&self) -> usize {
        match self.shape.len() {
            2 => self.shape[1],
            1 => self.shape[0],
            _ => self.data.len(),
        }
    }

    pub fn row(&self, i: usize) -> &[bool] {
        let c = self.cols();
        &self.data[i * c..(i + 1) * c]
    }

    pub fn at2(&self, i: usize, j: usize) -> bool {
        self.data[i * self.cols() + j]
    }

    /// Number of leading true entries in row i.
    pub fn prefix_len(&self, i: usize) -> usize {
        self.row(i).iter().take_while(|&&m| m).count()
    }

    /// Column t as a vector of row flags.
    pub fn column(&self, t: usize) -> Vec<bool> {
        (0..self.rows()).map(|i| self.at2(i, t)).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn shape_and_data_agree() {
        let a = NDArray::<f64>::from_vec(&[2, 3], vec![1., 2., 3., 4., 5., 6.]).unwrap();
        assert_eq!(a.numel(), 6);
        assert_eq!(a.at2(1, 2), 6.0);
        assert_eq!(a.row(1), &[4., 5., 6.]);
        assert!(NDArray::<f64>::from_vec(&[2, 2], vec![1.0]).is_err());
    }

    #[test]
    fn scalar_has_empty_shape() {
        let s = NDArray::<f64>::scalar(3.5);
        assert_eq!(s.shape(), &[] as &[usize]);
        assert_eq!(s.numel(), 1);
    }

    #[test]
    fn finite_detection() {
        let mut a = NDArray::<f64>::zeros(&[3]);
        assert!(a.all_finite());
        a.data_mut()[1] = f64::NAN;
        assert!(!a.all_finite());
    }

    #[test]
    fn prefix_mask() {
        let m = BoolMask::prefixes(2, 4, &[3, 1]);
        assert_eq!(m.row(0), &[true, true, true, false]);
        assert_eq!(m.row(1), &[true, false, false, false]);
        assert_eq!(m.prefix_len(0), 3);
        assert_eq!(m.column(0), vec![true, true]);
        assert_eq!(m.column(2), vec![true, false]);
    }

    #[test]
    fn randn_reproducible() {
        let mut r1 = Rng::new(5);
        let mut r2 = Rng::new(5);
        let a = NDArray::<f32>::randn(&[4, 4], 0.0, 0.1, &mut r1);
        let b = NDArray::<f32>::randn(&[4, 4], 0.0, 0.1, &mut r2);
        assert_eq!(a, b);
    }
}
