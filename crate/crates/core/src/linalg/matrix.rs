use std::fmt;
use std::ops::{Index, IndexMut};

use crate::field::Field;

/// Dense row-major matrix of field elements.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Mat {
    rows: usize,
    cols: usize,
    data: Vec<u64>,
}

impl Mat {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            data: vec![0; rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = 1;
        }
        m
    }

    pub fn scalar(n: usize, c: u64) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = c;
        }
        m
    }

    pub fn from_rows(rows: usize, cols: usize, data: Vec<u64>) -> Self {
        assert_eq!(rows * cols, data.len(), "matrix data has the wrong length");
        Self { rows, cols, data }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    /// Row-major flattening, the `F^{r x r} = F^{r^2}` identification.
    pub fn data(&self) -> &[u64] {
        &self.data
    }

    pub fn row(&self, i: usize) -> &[u64] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&v| v == 0)
    }

    pub fn mul(&self, f: &Field, other: &Self) -> Self {
        assert_eq!(self.cols, other.rows, "inner dimensions differ");
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self[(i, k)];
                if a == 0 {
                    continue;
                }
                let orow = other.row(k);
                let dst = &mut out.data[i * other.cols..(i + 1) * other.cols];
                for (d, &b) in dst.iter_mut().zip(orow) {
                    *d = f.mul_add(a, b, *d);
                }
            }
        }
        out
    }

    /// Row vector times matrix.
    pub fn left_mul_vec(&self, f: &Field, v: &[u64]) -> Vec<u64> {
        assert_eq!(v.len(), self.rows);
        let mut out = vec![0; self.cols];
        for (k, &a) in v.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (d, &b) in out.iter_mut().zip(self.row(k)) {
                *d = f.mul_add(a, b, *d);
            }
        }
        out
    }

    pub fn add_assign(&mut self, f: &Field, other: &Self) {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        for (a, &b) in self.data.iter_mut().zip(&other.data) {
            *a = f.add(*a, b);
        }
    }

    /// `self += c * other`
    pub fn add_scaled(&mut self, f: &Field, c: u64, other: &Self) {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        if c == 0 {
            return;
        }
        for (a, &b) in self.data.iter_mut().zip(&other.data) {
            *a = f.mul_add(c, b, *a);
        }
    }

    pub fn scale(&self, f: &Field, c: u64) -> Self {
        Self {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|&a| f.mul(a, c)).collect(),
        }
    }
}

impl Index<(usize, usize)> for Mat {
    type Output = u64;
    fn index(&self, (i, j): (usize, usize)) -> &u64 {
        assert!(i < self.rows && j < self.cols);
        &self.data[i * self.cols + j]
    }
}

impl IndexMut<(usize, usize)> for Mat {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut u64 {
        assert!(i < self.rows && j < self.cols);
        &mut self.data[i * self.cols + j]
    }
}

/// `[a,b;c,d]`, rows separated by `;`.
impl fmt::Display for Mat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for i in 0..self.rows {
            if i > 0 {
                write!(f, ";")?;
            }
            for (j, v) in self.row(i).iter().enumerate() {
                if j > 0 {
                    write!(f, ",")?;
                }
                write!(f, "{v}")?;
            }
        }
        write!(f, "]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn product_and_display() {
        let f = Field::new(7).unwrap();
        let a = Mat::from_rows(2, 2, vec![1, 2, 3, 4]);
        let b = Mat::from_rows(2, 2, vec![0, 1, 1, 0]);
        let c = a.mul(&f, &b);
        assert_eq!(c, Mat::from_rows(2, 2, vec![2, 1, 4, 3]));
        assert_eq!(c.to_string(), "[2,1;4,3]");
        assert_eq!(a.mul(&f, &Mat::identity(2)), a);
        assert_eq!(b.left_mul_vec(&f, &[5, 6]), vec![6, 5]);
    }
}
